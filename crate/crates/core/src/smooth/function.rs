use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::cone::{latitude, ConeSpace};
use crate::error::{Error, Result};
use crate::exterior::scalar::{fmt_scalar, parse_rational, real, to_c64, Rational, Scalar};
use crate::exterior::{Chart, Coefficient};
use crate::linalg::{Echelon, SparseRow};

/// Finite sum `Σ c_{a,b} t^a e^{ibφ}` on the cone over a circle, `a ≥ 0`,
/// with `c_{a,−b} = conj(c_{a,b})`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConeFunction {
    terms: BTreeMap<(u32, i32), Scalar>,
}

impl ConeFunction {
    pub fn new(terms: impl IntoIterator<Item = (i64, i32, Scalar)>) -> Result<Self> {
        let mut out: BTreeMap<(u32, i32), Scalar> = BTreeMap::new();
        for (a, b, c) in terms {
            if a < 0 {
                return Err(Error::NegativeRadialExponent(a));
            }
            *out.entry((a as u32, b)).or_insert_with(Scalar::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        for (&(a, b), c) in &out {
            if out.get(&(a, -b)).cloned().unwrap_or_else(Scalar::zero) != c.conj() {
                return Err(Error::InvalidInput(format!("term t^{a} e^({b}iφ) has no conjugate partner")));
            }
        }
        Ok(ConeFunction { terms: out })
    }

    /// `c t^a e^{ibφ}` plus its conjugate `c t^a e^{−ibφ}` when `b ≠ 0`.
    pub fn from_real_terms(terms: &[(i64, i32, Rational)]) -> Result<Self> {
        let mut all = vec![];
        for (a, b, c) in terms {
            all.push((*a, *b, real(c.clone())));
            if *b != 0 {
                all.push((*a, -*b, real(c.clone())));
            }
        }
        Self::new(all)
    }

    /// Parses `a:b:num/den` terms separated by commas or whitespace.
    pub fn parse(text: &str) -> Result<Self> {
        let mut terms = vec![];
        for item in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
            let parts: Vec<&str> = item.split(':').collect();
            let [a, b, c] = parts[..] else {
                return Err(Error::Parse(format!("term `{item}` is not of the form a:b:num/den")));
            };
            let a: i64 = a.trim().parse().map_err(|_| Error::Parse(format!("radial exponent `{a}`")))?;
            let b: i32 = b.trim().parse().map_err(|_| Error::Parse(format!("Fourier mode `{b}`")))?;
            let c = parse_rational(c.trim()).ok_or_else(|| Error::Parse(format!("coefficient `{c}`")))?;
            terms.push((a, b, c));
        }
        Self::from_real_terms(&terms)
    }

    /// `t^a cos(bφ)`.
    pub fn cos(a: u32, b: i32) -> Self {
        let half = real(Rational::new(1.into(), 2.into()));
        if b == 0 {
            return Self::new([(a as i64, 0, real(Rational::from_integer(1.into())))]).expect("real");
        }
        Self::new([(a as i64, b, half.clone()), (a as i64, -b, half)]).expect("real")
    }

    /// `t^a sin(bφ)`.
    pub fn sin(a: u32, b: i32) -> Self {
        let h = Scalar::new(Rational::zero(), Rational::new(1.into(), 2.into()));
        Self::new([(a as i64, b, -h.clone()), (a as i64, -b, h)]).expect("real")
    }

    pub fn terms(&self) -> &BTreeMap<(u32, i32), Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn radial_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    /// Part of radial degree exactly `a`, keyed by Fourier mode.
    pub fn homogeneous(&self, a: u32) -> BTreeMap<i32, Scalar> {
        self.terms.iter().filter(|(k, _)| k.0 == a).map(|(k, c)| (k.1, c.clone())).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let all = self.terms.iter().chain(&other.terms).map(|(k, c)| (k.0 as i64, k.1, c.clone()));
        Self::new(all).expect("sums of real functions are real")
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut all = vec![];
        for (k, c) in &self.terms {
            for (l, d) in &other.terms {
                all.push(((k.0 + l.0) as i64, k.1 + l.1, c * d));
            }
        }
        Self::new(all).expect("products of real functions are real")
    }

    pub fn eval(&self, t: f64, phi: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(a, b), c)| {
                let c = to_c64(c);
                t.powi(a as i32) * (c.re * (b as f64 * phi).cos() - c.im * (b as f64 * phi).sin())
            })
            .sum()
    }

    /// As a coefficient element on the cone chart `(t, phi)`.
    pub fn to_coefficient(&self, chart: &Arc<Chart>) -> Result<Coefficient> {
        if chart.radial_index() != Some(0) || chart.angle_indices() != [1] || chart.dim() != 2 {
            return Err(Error::InvalidChart(format!("`{}` is not a (t, phi) chart", chart.name())));
        }
        Coefficient::from_terms(chart, self.terms.iter().map(|(&(a, b), c)| (vec![a as i32, b], c.clone())).collect())
    }

    pub fn from_coefficient(f: &Coefficient) -> Result<Self> {
        let chart = f.chart();
        if chart.radial_index() != Some(0) || chart.angle_indices() != [1] || chart.dim() != 2 {
            return Err(Error::InvalidChart(format!("`{}` is not a (t, phi) chart", chart.name())));
        }
        Self::new(f.terms().iter().map(|(e, c)| (e[0] as i64, e[1], c.clone())))
    }
}

impl fmt::Display for ConeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| {
                let mut s = fmt_scalar(c);
                if a > 0 {
                    s += &if a == 1 { "*t".to_string() } else { format!("*t^{a}") };
                }
                if b != 0 {
                    s += &format!("*exp({b}i*phi)");
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Euclidean smooth structure on a cone: generated by `t·p_i(φ)`, the
/// pullbacks of the ambient coordinates (up to the constant weights).
#[derive(Clone, Debug)]
pub struct EuclideanStructure {
    cone: ConeSpace,
    generators: Vec<Coefficient>,
    latitude: Option<Rational>,
}

impl EuclideanStructure {
    pub fn new(cone: ConeSpace) -> Result<Self> {
        if cone.link().constant_weights().is_none() {
            return Err(Error::Unsupported(format!(
                "generators of `{}` are not trigonometric polynomials",
                cone.link().descriptor()
            )));
        }
        let generators = cone.embedding_profile()?;
        if generators.iter().any(|g| g.terms().keys().any(|e| e[0] == 0)) {
            return Err(Error::InvalidInput("a generator does not vanish at the apex".into()));
        }
        let s = EuclideanStructure { cone, generators, latitude: None };
        if !s.separates_points(720) {
            return Err(Error::InvalidInput("generators do not separate points of the link".into()));
        }
        Ok(s)
    }

    /// Structure of the cone over `(r cos φ, r sin φ, θ)`.
    pub fn latitude(theta: Rational) -> Result<Self> {
        let mut s = Self::new(ConeSpace::new(latitude(theta.clone())?)?)?;
        s.latitude = Some(theta);
        Ok(s)
    }

    pub fn cone(&self) -> &ConeSpace {
        &self.cone
    }

    pub fn generators(&self) -> &[Coefficient] {
        &self.generators
    }

    pub fn theta(&self) -> Option<&Rational> {
        self.latitude.as_ref()
    }

    /// Distinct grid angles have distinct link points.
    pub fn separates_points(&self, samples: usize) -> bool {
        let pts: Vec<Vec<f64>> = (0..samples)
            .map(|j| self.cone.link().point(&[2.0 * std::f64::consts::PI * j as f64 / samples as f64]))
            .collect();
        let gap = 1e-3 / samples as f64;
        pts.iter().enumerate().all(|(i, p)| {
            pts[i + 1..].iter().all(|q| p.iter().zip(q).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt() > gap)
        })
    }
}

/// Whether `f` is a polynomial in the generators of the latitude structure:
/// every term `t^a e^{ibφ}` has `|b| ≤ a`, and `a ≡ b (mod 2)` on the equator.
pub fn membership(f: &ConeFunction, e: &EuclideanStructure) -> Result<bool> {
    let theta = e.theta().ok_or_else(|| Error::Unsupported("membership is decided on latitude circles".into()))?;
    let equator = theta.is_zero();
    Ok(f.terms().keys().all(|&(a, b)| b.unsigned_abs() <= a && (!equator || (a as i64 - b as i64) % 2 == 0)))
}

/// Exact span of all generator monomials, one span per radial degree.
pub struct GeneratorSpan {
    max_degree: u32,
    spans: Vec<Echelon<Scalar>>,
}

const MODE_OFFSET: i64 = 1 << 20;

fn mode_row(modes: &BTreeMap<i32, Scalar>) -> SparseRow<Scalar> {
    modes.iter().map(|(&b, c)| ((b as i64 + MODE_OFFSET) as usize, c.clone())).collect()
}

impl GeneratorSpan {
    pub fn new(e: &EuclideanStructure, max_degree: u32) -> Self {
        let chart = e.cone().chart();
        let mut layer = vec![Coefficient::one(chart)];
        let mut spans = vec![];
        for a in 0..=max_degree {
            if a > 0 {
                let mut next = BTreeMap::new();
                // monomials of degree a as non-decreasing index sequences
                let mut seqs: Vec<Vec<usize>> = vec![vec![]];
                for _ in 0..a {
                    seqs = seqs
                        .into_iter()
                        .flat_map(|s| {
                            let lo = s.last().copied().unwrap_or(0);
                            (lo..e.generators().len()).map(move |g| {
                                let mut s = s.clone();
                                s.push(g);
                                s
                            })
                        })
                        .collect();
                }
                for s in seqs {
                    let m = s.iter().fold(Coefficient::one(chart), |acc, &g| &acc * &e.generators()[g]);
                    next.insert(s, m);
                }
                layer = next.into_values().collect();
            }
            let mut span = Echelon::new();
            for m in &layer {
                let modes = m.terms().iter().map(|(x, c)| (x[1], c.clone())).collect();
                span.insert(mode_row(&modes));
            }
            spans.push(span);
        }
        GeneratorSpan { max_degree, spans }
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Dimension of the degree-`a` part.
    pub fn rank(&self, a: u32) -> usize {
        self.spans[a as usize].rank()
    }

    pub fn contains(&self, f: &ConeFunction) -> Result<bool> {
        match f.radial_degree() {
            Some(d) if d > self.max_degree => {
                Err(Error::InvalidInput(format!("radial degree {d} exceeds the span degree {}", self.max_degree)))
            }
            _ => Ok((0..=self.max_degree).all(|a| self.spans[a as usize].contains(mode_row(&f.homogeneous(a))))),
        }
    }
}

/// Chart `(x, t)` for the weighted-cone test.
pub fn wcone_chart() -> Arc<Chart> {
    Chart::cartesian("xt", &["x", "t"]).expect("valid chart")
}

/// Splits `f(x, t) = t·g(x, t) + c` when `f(·, 0)` is constant.
pub fn wcone_decompose(f: &Coefficient) -> Result<Option<(Scalar, Coefficient)>> {
    let chart = f.chart();
    let ti = chart.index_of("t").ok_or_else(|| Error::InvalidChart(format!("`{}` has no variable t", chart.name())))?;
    if !chart.angle_indices().is_empty() {
        return Err(Error::InvalidChart("expected a polynomial chart".into()));
    }
    let Some(c) = f.substitute_zero(ti).as_constant() else {
        return Ok(None);
    };
    let g = f.terms().iter().filter(|(e, _)| e[ti] > 0).map(|(e, v)| {
        let mut e = e.clone();
        e[ti] -= 1;
        (e, v.clone())
    });
    Ok(Some((c, Coefficient::from_terms(chart, g.collect())?)))
}

pub fn wcone_membership(f: &Coefficient) -> Result<bool> {
    Ok(wcone_decompose(f)?.is_some())
}

