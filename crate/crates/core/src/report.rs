//! Run configurations, check reports and their JSON form.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cone::{
    ambient_omega_pullback, latitude, liouville_identities, make_cone_symplectic, quadric_link, standard_circle,
    standard_sphere_contact, ConeSpace, Link,
};
use crate::error::{Error, Result};
use crate::exterior::scalar::{fmt_rational, parse_rational};
use crate::exterior::{Coefficient, DifferentialForm};
use crate::poisson::{build_stratified_complex, homology_ranks, GroupAction, Operator, SymplecticChart};
use crate::random::FormSampler;
use crate::smooth::{
    bump_on_cone, construct_flatness_link, degree_of_flatness, membership, nash_cone_membership, partition_of_unity,
    tangent_cone, ConeFunction, TangentCone, EuclideanStructure, FlatLocus, GeneratorSpan, Patch,
};

pub const SCHEMA: u32 = 1;
pub const OUT_DIR_ENV: &str = "CONEX_OUT_DIR";

/// `r<m>`: the standard symplectic `ℝ^m`, `m` even.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChartSel(pub usize);

impl FromStr for ChartSel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let m: usize = s
            .strip_prefix(['r', 'R'])
            .and_then(|m| m.parse().ok())
            .ok_or_else(|| Error::Parse(format!("chart `{s}` (expected r2, r4, ...)")))?;
        if m == 0 || m % 2 != 0 {
            return Err(Error::InvalidInput(format!("R{m} carries no standard symplectic form")));
        }
        Ok(ChartSel(m))
    }
}

impl fmt::Display for ChartSel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}", self.0)
    }
}

impl Serialize for ChartSel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Link selector: `circle`, `hopf`, `great:<a>,<b>`, `quadric`,
/// `latitude:<θ>` or `flat-pairs:<k>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkSel {
    Circle,
    Hopf,
    Great(String, String),
    Quadric,
    Latitude(String),
    FlatPairs(u32),
}

impl FromStr for LinkSel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("link `{s}`"));
        let (head, arg) = s.split_once(':').map_or((s, None), |(h, a)| (h, Some(a)));
        let sel = match (head, arg) {
            ("circle" | "flat", None) => LinkSel::Circle,
            ("hopf", None) => LinkSel::Hopf,
            ("quadric", None) => LinkSel::Quadric,
            ("great", Some(a)) => {
                let (x, y) = a.split_once(',').ok_or_else(bad)?;
                LinkSel::Great(x.trim().into(), y.trim().into())
            }
            ("latitude", Some(a)) => LinkSel::Latitude(a.trim().into()),
            ("flat-pairs", Some(a)) => LinkSel::FlatPairs(a.trim().parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        };
        sel.build()?;
        Ok(sel)
    }
}

impl fmt::Display for LinkSel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkSel::Circle => write!(f, "circle"),
            LinkSel::Hopf => write!(f, "hopf"),
            LinkSel::Great(a, b) => write!(f, "great:{a},{b}"),
            LinkSel::Quadric => write!(f, "quadric"),
            LinkSel::Latitude(t) => write!(f, "latitude:{t}"),
            LinkSel::FlatPairs(k) => write!(f, "flat-pairs:{k}"),
        }
    }
}

impl Serialize for LinkSel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn rational(text: &str) -> Result<crate::exterior::Rational> {
    parse_rational(text).ok_or_else(|| Error::Parse(format!("rational `{text}`")))
}

impl LinkSel {
    pub fn build(&self) -> Result<Link> {
        match self {
            LinkSel::Circle => Ok(standard_circle()),
            LinkSel::Hopf => standard_sphere_contact(2).great_circle(&[rational("1")?, rational("0")?]),
            LinkSel::Great(a, b) => standard_sphere_contact(2).great_circle(&[rational(a)?, rational(b)?]),
            LinkSel::Quadric => quadric_link(1),
            LinkSel::Latitude(t) => latitude(rational(t)?),
            LinkSel::FlatPairs(k) => construct_flatness_link(*k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Command {
    Verify { chart: ChartSel, degree: u32, samples: usize },
    Homology { chart: ChartSel, trunc: usize, operator: Operator, group: usize },
    ConeReport { link: LinkSel, nash_samples: usize },
    Membership { theta: String, terms: String },
    Flatness { link: Option<LinkSel>, pairs: Option<u32> },
    BumpCheck { epsilon: f64, samples: usize },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Homology { .. } => "homology",
            Command::ConeReport { .. } => "cone-report",
            Command::Membership { .. } => "membership",
            Command::Flatness { .. } => "flatness",
            Command::BumpCheck { .. } => "bump-check",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub seed: u64,
    /// Overrides the numeric tolerance of the command.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip)]
    pub output: Option<PathBuf>,
    #[serde(skip)]
    pub timing: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig { command, seed: 0, tolerance: None, output: None, timing: false }
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(t) = self.tolerance {
            if !(t > 0.0) || !t.is_finite() {
                return Err(Error::InvalidInput(format!("tolerance {t} must be positive")));
            }
        }
        match &self.command {
            Command::Homology { group: 0, .. } => Err(Error::InvalidInput("group order must be at least 1".into())),
            Command::Verify { samples: 0, .. } | Command::BumpCheck { samples: 0, .. } => {
                Err(Error::InvalidInput("at least one sample is required".into()))
            }
            Command::Flatness { link: None, pairs: None } => {
                Err(Error::InvalidInput("flatness needs a link or a number of flat pairs".into()))
            }
            Command::Flatness { link: Some(_), pairs: Some(_) } => {
                Err(Error::InvalidInput("give either a link or a number of flat pairs".into()))
            }
            Command::BumpCheck { epsilon, .. } if !(*epsilon > 0.0 && *epsilon <= 1.0) => {
                Err(Error::InvalidInput(format!("ε = {epsilon} must lie in (0, 1]")))
            }
            _ => Ok(()),
        }
    }

    /// Explicit output path, else `$CONEX_OUT_DIR/<command>.json`.
    pub fn output_path(&self) -> Option<PathBuf> {
        self.output.clone().or_else(|| {
            std::env::var_os(OUT_DIR_ENV).map(|d| PathBuf::from(d).join(format!("{}.json", self.command.name())))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: &str) -> Self {
        Check { name: name.into(), status: Status::Pass, witness: None, detail: None }
    }

    pub fn fail(name: &str, witness: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Fail, witness: Some(witness.into()), detail: None }
    }

    pub fn skipped(name: &str, why: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Skipped, witness: None, detail: Some(why.into()) }
    }

    /// Pass iff `ok`, otherwise fail with the witness.
    pub fn from(name: &str, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    pub config: RunConfig,
    pub checks: Vec<Check>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn summary(&self) -> String {
        let mut out = format!("conex {}", self.config.command.name());
        if let Some(line) = self.result.get("summary").and_then(Value::as_str) {
            out += &format!(": {line}");
        }
        out.push('\n');
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            out += &format!("  [{tag}] {}", c.name);
            if let Some(w) = &c.witness {
                out += &format!("  witness: {w}");
            }
            if let Some(d) = &c.detail {
                out += &format!("  ({d})");
            }
            out.push('\n');
        }
        if let Some(ms) = self.timing_ms {
            out += &format!("  time: {ms} ms\n");
        }
        out
    }
}

/// Writes `text` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

pub fn run(config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let (checks, result) = match &config.command {
        Command::Verify { chart, degree, samples } => verify(*chart, *degree, *samples, config.seed)?,
        Command::Homology { chart, trunc, operator, group } => homology(*chart, *trunc, *operator, *group)?,
        Command::ConeReport { link, nash_samples } => {
            cone_report(link, *nash_samples, config.seed, config.tolerance.unwrap_or(crate::smooth::NASH_TOLERANCE))?
        }
        Command::Membership { theta, terms } => membership_query(theta, terms)?,
        Command::Flatness { link, pairs } => flatness(link.as_ref(), *pairs)?,
        Command::BumpCheck { epsilon, samples } => bump_check(*epsilon, *samples, config.tolerance.unwrap_or(1e-12))?,
    };
    Ok(Report {
        schema: SCHEMA,
        tool: "conex".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        config: config.clone(),
        checks,
        result,
        timing_ms: config.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Runs the report and writes its JSON to the configured path, if any.
pub fn run_and_write(config: &RunConfig) -> Result<(Report, Option<PathBuf>)> {
    let report = run(config)?;
    let path = config.output_path();
    if let Some(p) = &path {
        write_atomic(p, &report.to_json())?;
    }
    Ok((report, path))
}

type Outcome = (Vec<Check>, Value);

/// Exact identity suite on random forms of coefficient degree `≤ degree`.
pub fn identity_suite(s: &SymplecticChart, degree: u32, samples: usize, seed: u64) -> Result<Vec<Check>> {
    let c = s.chart();
    let mut r = FormSampler::new(seed, degree);
    let mut first: [Option<String>; 5] = Default::default();
    let names = ["d-squared", "delta-squared", "delta-koszul", "star-involution", "delta-star"];
    for _ in 0..samples {
        let a = r.any_form(c);
        let da = a.d();
        let delta = s.delta(&a)?;
        let ok = [
            da.d().is_zero(),
            s.delta(&delta)?.is_zero(),
            true,
            s.star(&s.star(&a)?)?.sub(&a)?.is_zero(),
            s.star_delta_identity_check(&a)?,
        ];
        for (k, good) in ok.iter().enumerate() {
            if !good && first[k].is_none() {
                first[k] = Some(a.to_string());
            }
        }
        // Koszul expansion on f₀ df₁∧…∧df_p
        let p = r.degree(c);
        let f0 = r.polynomial(c);
        let low = degree.min(2);
        let fs: Vec<Coefficient> = (0..p).map(|_| r.polynomial_of_degree(c, low)).collect();
        let mut b = DifferentialForm::function(f0.clone());
        for f in &fs {
            b = b.wedge(&DifferentialForm::function(f.clone()).d())?;
        }
        if !s.delta_decomposable(&f0, &fs)?.sub(&s.delta(&b)?)?.is_zero() && first[2].is_none() {
            first[2] = Some(format!("f0 = {f0}, f = [{}]", fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("; ")));
        }
    }
    Ok(names
        .iter()
        .zip(first)
        .map(|(n, w)| match w {
            None => Check::pass(n).with_detail(format!("{samples} forms")),
            Some(w) => Check::fail(n, w),
        })
        .collect())
}

fn verify(chart: ChartSel, degree: u32, samples: usize, seed: u64) -> Result<Outcome> {
    let s = SymplecticChart::standard(chart.0 / 2);
    let checks = identity_suite(&s, degree, samples, seed)?;
    let ok = checks.iter().filter(|c| c.status == Status::Pass).count();
    let summary = format!("{ok}/{} identities hold exactly on {samples} forms in R{}", checks.len(), chart.0);
    Ok((checks, json!({ "summary": summary, "forms": samples, "degree": degree })))
}

fn homology(chart: ChartSel, trunc: usize, operator: Operator, group: usize) -> Result<Outcome> {
    let s = SymplecticChart::standard(chart.0 / 2);
    let action = if group > 1 { Some(GroupAction::cyclic(&s, group)?) } else { None };
    let ranks_of = |op| -> Result<Vec<usize>> { homology_ranks(&build_stratified_complex(&s, trunc, op, action.as_ref())?) };
    let ranks = ranks_of(operator)?;
    let other = match operator {
        Operator::Delta => Operator::DeRham,
        Operator::DeRham => Operator::Delta,
    };
    let dual = ranks_of(other)?;
    let reversed: Vec<usize> = dual.iter().rev().copied().collect();
    let check = Check::from("reverse-graded-duality", ranks == reversed, || format!("{ranks:?} vs reversed {dual:?}"))
        .with_detail(format!("{other} ranks {dual:?}"));
    let summary = format!("{operator} homology ranks {ranks:?}");
    Ok((vec![check], json!({ "summary": summary, "ranks": ranks, "dual_operator": other, "dual_ranks": dual })))
}

fn cone_report(sel: &LinkSel, nash_samples: usize, seed: u64, tol: f64) -> Result<Outcome> {
    let link = sel.build()?;
    let alpha = link.contact_form().cloned().ok_or_else(|| Error::InvalidInput("link carries no contact form".into()))?;
    let cone = ConeSpace::new(link.clone())?;
    let mut checks = vec![];
    let mut result = json!({ "link": link.descriptor(), "alpha": alpha.to_string() });
    let csf = match make_cone_symplectic(&cone, &alpha) {
        Ok(csf) => csf,
        Err(Error::Degenerate(w)) => {
            checks.push(Check::fail("nondegenerate", w));
            result["summary"] = json!(format!("{}: degenerate contact form", link.descriptor()));
            return Ok((checks, result));
        }
        Err(e) => return Err(e),
    };
    checks.push(Check::pass("nondegenerate").with_detail("exact Sturm count: α has no zero"));
    result["omega"] = json!(csf.total().to_string());
    let r = liouville_identities(&csf)?;
    let total = csf.total().to_string();
    for (name, ok) in [
        ("closed", r.closed),
        ("d-alpha-is-two-omega-hat", r.d_alpha_is_two_omega_hat),
        ("contraction-is-t2-alpha", r.contraction_is_t2_alpha),
        ("lie-derivative-is-twice", r.lie_derivative_is_twice),
        ("primitive-is-half-d-t2-alpha", r.primitive_is_half_d_t2_alpha),
        ("top-power-conical", r.top_power_conical),
    ] {
        checks.push(Check::from(name, ok, || total.clone()));
    }
    checks.push(match ambient_omega_pullback(&cone) {
        Ok(w) => Check::from("ambient-restriction", &w == csf.total(), || w.to_string()),
        Err(Error::Unsupported(why)) => Check::skipped("ambient-restriction", why),
        Err(e) => return Err(e),
    });
    match tangent_cone(&cone) {
        Ok(tc) => {
            result["flatness"] = flatness_json(&tc);
        }
        Err(Error::Unsupported(why)) => result["flatness"] = json!({ "unsupported": why }),
        Err(e) => return Err(e),
    }
    if link.ambient_dim() == 3 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut samples = vec![];
        for _ in 0..nash_samples {
            let v: [f64; 3] = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
            let n = nash_cone_membership(&cone, v, tol)?;
            samples.push(json!({ "v": v, "member": n.member, "distance": n.distance }));
        }
        let axis = nash_cone_membership(&cone, [0.0, 0.0, 1.0], tol)?;
        result["nash"] = json!({ "tolerance": tol, "axis_member": axis.member, "samples": samples });
    }
    result["summary"] = json!(format!("{}: conical symplectic form {}", link.descriptor(), total));
    Ok((checks, result))
}

fn membership_query(theta: &str, terms: &str) -> Result<Outcome> {
    let theta = rational(theta)?;
    let e = EuclideanStructure::latitude(theta.clone())?;
    let f = ConeFunction::parse(terms)?;
    let smooth = membership(&f, &e)?;
    let check = match f.radial_degree() {
        Some(d) if d > 8 => Check::skipped("generator-span-oracle", format!("radial degree {d} > 8")),
        _ => {
            let oracle = GeneratorSpan::new(&e, 8).contains(&f)?;
            Check::from("generator-span-oracle", oracle == smooth, || f.to_string())
        }
    };
    let answer = if smooth { "smooth" } else { "not smooth" };
    let summary = format!("f = {f} is {answer} on the cone over latitude {}", fmt_rational(&theta));
    Ok((vec![check], json!({ "summary": summary, "function": f.to_string(), "smooth": smooth, "answer": answer })))
}

fn flatness(link: Option<&LinkSel>, pairs: Option<u32>) -> Result<Outcome> {
    let l = match (link, pairs) {
        (Some(sel), _) => sel.build()?,
        (None, Some(k)) => construct_flatness_link(k)?,
        (None, None) => unreachable!("validated"),
    };
    let tc = tangent_cone(&ConeSpace::new(l.clone())?)?;
    let degree = degree_of_flatness(&tc);
    let checks = match pairs {
        Some(k) => vec![Check::from("prescribed-flat-rays", degree == 2 * k as usize, || {
            format!("{} has degree {degree}, expected {}", l.descriptor(), 2 * k)
        })],
        None => vec![],
    };
    let mut result = flatness_json(&tc);
    result["summary"] = json!(format!("degree of flatness of the cone over {} is {degree}", l.descriptor()));
    result["link"] = json!(l.descriptor());
    Ok((checks, result))
}

fn flatness_json(tc: &TangentCone) -> Value {
    let mut out = json!({ "degree": degree_of_flatness(tc), "locus": tc.flat });
    if tc.flat == FlatLocus::Everywhere {
        out["convention"] = json!("every direction is flat; the punctured flat cone counts as one component");
    }
    out
}

fn bump_check(epsilon: f64, samples: usize, tol: f64) -> Result<Outcome> {
    let f = bump_on_cone(epsilon)?;
    let mut checks = vec![];
    let grid = |j: usize| 1.5 * j as f64 / samples as f64;
    let mut range = None;
    let mut support = None;
    let mut monotone = None;
    let mut prev = f64::INFINITY;
    for j in 0..=samples {
        let t = grid(j);
        let v = f.profile(t);
        if !(0.0..=1.0).contains(&v) && range.is_none() {
            range = Some(format!("f({t}) = {v}"));
        }
        if t >= epsilon && v != 0.0 && support.is_none() {
            support = Some(format!("f({t}) = {v}"));
        }
        if v > prev && monotone.is_none() {
            monotone = Some(format!("f increases at t = {t}"));
        }
        prev = v;
    }
    checks.push(Check::from("bump-apex-is-one", f.profile(0.0) == 1.0, || format!("f(0) = {}", f.profile(0.0))));
    for (name, w) in [("bump-in-unit-interval", range), ("bump-support", support), ("bump-monotone", monotone)] {
        checks.push(w.map_or_else(|| Check::pass(name), |w| Check::fail(name, w)));
    }
    let cover = [
        Patch::Apex { radius: 0.4 },
        Patch::Annulus { inner: 0.3, outer: 0.7 },
        Patch::Annulus { inner: 0.6, outer: 1.0 },
    ];
    let p = partition_of_unity(&cover, 1.0)?;
    let mut worst = (0.0f64, 0.0f64);
    let mut outside = None;
    for j in 0..samples {
        let t = j as f64 / samples as f64;
        let v = p.values(t);
        let err = (v.iter().sum::<f64>() - 1.0).abs();
        if err > worst.0 {
            worst = (err, t);
        }
        for (i, x) in v.iter().enumerate() {
            if (*x < 0.0 || (*x > 0.0 && !cover[i].contains(t))) && outside.is_none() {
                outside = Some(format!("f_{i}({t}) = {x}"));
            }
        }
    }
    checks.push(
        Check::from("partition-sums-to-one", worst.0 <= tol, || format!("|Σf − 1| = {:e} at t = {}", worst.0, worst.1))
            .with_detail(format!("max error {:e}, tolerance {tol:e}", worst.0)),
    );
    checks.push(outside.map_or_else(|| Check::pass("partition-support"), |w| Check::fail("partition-support", w)));
    let summary = format!("bump with ε = {epsilon} and a {}-patch partition, {samples} samples", cover.len());
    Ok((checks, json!({ "summary": summary, "epsilon": epsilon, "support_radius": f.support_radius(), "max_sum_error": worst.0 })))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn homology_config() -> RunConfig {
        RunConfig::new(Command::Homology { chart: "r2".parse().unwrap(), trunc: 4, operator: Operator::Delta, group: 1 })
    }

    #[test]
    fn selectors_parse() {
        assert_eq!("r4".parse::<ChartSel>().unwrap(), ChartSel(4));
        assert!("r3".parse::<ChartSel>().is_err());
        assert!("x2".parse::<ChartSel>().is_err());
        for s in ["circle", "hopf", "great:3/5,4/5", "quadric", "latitude:1/2", "flat-pairs:3"] {
            assert_eq!(s.parse::<LinkSel>().unwrap().to_string(), s);
        }
        assert!("latitude:1".parse::<LinkSel>().is_err());
        assert!("great:1,1".parse::<LinkSel>().is_err());
        assert!("torus".parse::<LinkSel>().is_err());
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut c = homology_config();
        c.tolerance = Some(0.0);
        assert!(run(&c).is_err());
        c.tolerance = None;
        c.command = Command::Homology { chart: ChartSel(2), trunc: 4, operator: Operator::Delta, group: 0 };
        assert!(run(&c).is_err());
        c.command = Command::Homology { chart: ChartSel(2), trunc: 4, operator: Operator::Delta, group: 5 };
        assert!(matches!(run(&c), Err(Error::Unsupported(_))));
        c.command = Command::Flatness { link: None, pairs: None };
        assert!(run(&c).is_err());
        c.command = Command::BumpCheck { epsilon: 0.0, samples: 10 };
        assert!(run(&c).is_err());
        c.command = Command::Membership { theta: "0".into(), terms: "1:x:1".into() };
        assert!(matches!(run(&c), Err(Error::Parse(_))));
    }

    #[test]
    fn homology_report() {
        let r = run(&homology_config()).unwrap();
        assert_eq!(r.result["ranks"], json!([0, 0, 1]));
        assert_eq!(r.result["dual_ranks"], json!([1, 0, 0]));
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.schema, 1);
        assert!(r.timing_ms.is_none());
        assert!(!r.to_json().contains("timing_ms"));
    }

    #[test]
    fn reports_are_deterministic() {
        let mut c = RunConfig::new(Command::Verify { chart: ChartSel(4), degree: 4, samples: 20 });
        c.seed = 7;
        assert_eq!(run(&c).unwrap().to_json(), run(&c).unwrap().to_json());
        let c = RunConfig::new(Command::ConeReport { link: LinkSel::Latitude("1/2".into()), nash_samples: 4 });
        assert_eq!(run(&c).unwrap().to_json(), run(&c).unwrap().to_json());
    }

    #[test]
    fn failing_checks_carry_witnesses() {
        let c = RunConfig::new(Command::Flatness { link: None, pairs: Some(2) });
        let r = run(&c).unwrap();
        assert!(r.passed());
        let mut r = r;
        r.checks.push(Check::from("forced", false, || "x".into()));
        assert_eq!(r.exit_code(), 1);
        assert!(r.checks.iter().all(|c| c.status != Status::Fail || c.witness.is_some()));
        assert!(r.summary().contains("[FAIL] forced  witness: x"));
    }

    #[test]
    fn membership_answers() {
        let q = |theta: &str, terms: &str| {
            let c = RunConfig::new(Command::Membership { theta: theta.into(), terms: terms.into() });
            run(&c).unwrap().result["smooth"].as_bool().unwrap()
        };
        assert!(!q("0", "1:0:1"));
        assert!(q("1/2", "1:0:1"));
        assert!(!q("0", "3:2:1"));
        assert!(q("0", "2:0:1"));
    }

    #[test]
    fn atomic_write_replaces_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sub").join("r.json");
        write_atomic(&path, "a").unwrap();
        write_atomic(&path, "b").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "b");
        assert_eq!(std::fs::read_dir(path.parent().unwrap()).unwrap().count(), 1);
    }
}
