use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exterior::chart::ensure_same;
use crate::exterior::scalar::{fmt_rational, rat, real, Rational};
use crate::exterior::{Chart, ChartMap, Coefficient, DifferentialForm, VarKind};
use crate::poisson::SymplecticChart;
use crate::trig_roots::TrigPoly;

/// Chart of a circle link, a single angle `phi`.
pub fn circle_chart() -> Arc<Chart> {
    Chart::new("S1", vec![("phi", VarKind::Angle)]).expect("valid chart")
}

/// A link `L → S^l ⊂ ℝ^{l+1}`.
///
/// Ambient coordinate `i` is `√w_i · p_i` for a nonnegative weight `w_i` and
/// profile `p_i`, both exact functions on the link chart. Unit-sphere
/// membership is the exact identity `Σ w_i p_i² = 1`.
#[derive(Clone, Debug)]
pub struct Link {
    name: String,
    chart: Arc<Chart>,
    weights: Vec<Coefficient>,
    profile: Vec<Coefficient>,
    contact_form: Option<DifferentialForm>,
}

impl Link {
    pub fn new(name: &str, chart: &Arc<Chart>, weights: Vec<Coefficient>, profile: Vec<Coefficient>) -> Result<Self> {
        if weights.len() != profile.len() || profile.is_empty() {
            return Err(Error::InvalidInput("one weight per profile coordinate is required".into()));
        }
        for f in weights.iter().chain(&profile) {
            ensure_same(chart, f.chart())?;
            if !f.is_real() {
                return Err(Error::InvalidInput(format!("`{f}` is not real")));
            }
        }
        let link = Link { name: name.to_string(), chart: chart.clone(), weights, profile, contact_form: None };
        let norm = link.norm_squared();
        if norm != Coefficient::one(chart) {
            return Err(Error::InvalidInput(format!("link `{name}` is off the unit sphere: |x|² = {norm}")));
        }
        Ok(link)
    }

    /// Restriction of `Σ (x_i dy_i − y_i dx_i)` over the given coordinate pairs.
    /// Paired coordinates must share their weight.
    pub fn with_contact_pairs(mut self, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut alpha = DifferentialForm::zero(&self.chart, 1);
        for &(i, j) in pairs {
            if i >= self.profile.len() || j >= self.profile.len() || self.weights[i] != self.weights[j] {
                return Err(Error::InvalidInput(format!("({i}, {j}) is not a valid equal-weight pair")));
            }
            let (pi, pj) = (DifferentialForm::function(self.profile[i].clone()), DifferentialForm::function(self.profile[j].clone()));
            let term = pj.d().mul_function(&self.profile[i])?.sub(&pi.d().mul_function(&self.profile[j])?)?;
            alpha = alpha.add(&term.mul_function(&self.weights[i])?)?;
        }
        self.contact_form = Some(alpha);
        Ok(self)
    }

    pub fn with_contact_form(mut self, alpha: DifferentialForm) -> Result<Self> {
        ensure_same(&self.chart, alpha.chart())?;
        if alpha.degree() != 1 {
            return Err(Error::InvalidInput("contact form must be a 1-form".into()));
        }
        self.contact_form = Some(alpha);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn dim(&self) -> usize {
        self.chart.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.profile.len()
    }

    pub fn weights(&self) -> &[Coefficient] {
        &self.weights
    }

    pub fn profile(&self) -> &[Coefficient] {
        &self.profile
    }

    pub fn contact_form(&self) -> Option<&DifferentialForm> {
        self.contact_form.as_ref()
    }

    /// `Σ w_i p_i²`.
    pub fn norm_squared(&self) -> Coefficient {
        self.weights
            .iter()
            .zip(&self.profile)
            .fold(Coefficient::zero(&self.chart), |acc, (w, p)| &acc + &(w * &(p * p)))
    }

    /// Constant weights as rationals, if all of them are constant.
    pub fn constant_weights(&self) -> Option<Vec<Rational>> {
        self.weights.iter().map(|w| w.as_constant().map(|c| c.re)).collect()
    }

    /// Ambient point at angle(s) `at`.
    pub fn point(&self, at: &[f64]) -> Vec<f64> {
        self.weights.iter().zip(&self.profile).map(|(w, p)| w.eval_real(at).max(0.0).sqrt() * p.eval_real(at)).collect()
    }

    /// Profile of coordinate `i` as a trigonometric polynomial (circle links).
    pub fn profile_trig(&self, i: usize) -> Result<TrigPoly> {
        TrigPoly::from_coefficient(&self.profile[i])
    }

    pub fn descriptor(&self) -> String {
        format!("{} in R{}", self.name, self.ambient_dim())
    }
}

/// The flat circle `(cos φ, sin φ) ⊂ ℝ²` with `α = dφ`.
pub fn standard_circle() -> Link {
    standard_sphere_contact(1).great_circle(&[rat(1, 1)]).expect("unit circle")
}

/// Latitude circle `(r cos φ, r sin φ, θ)`, `r = √(1−θ²)`, with `α = r² dφ`.
pub fn latitude(theta: Rational) -> Result<Link> {
    if theta.abs() >= rat(1, 1) {
        return Err(Error::InvalidInput(format!("latitude {} must lie in (−1, 1)", fmt_rational(&theta))));
    }
    let c = circle_chart();
    let w = Coefficient::from_rational(&c, rat(1, 1) - &theta * &theta);
    let one = Coefficient::one(&c);
    Link::new(
        &format!("latitude({})", fmt_rational(&theta)),
        &c,
        vec![w.clone(), w, one],
        vec![Coefficient::cos(&c, 0, 1), Coefficient::sin(&c, 0, 1), Coefficient::from_rational(&c, theta)],
    )?
    .with_contact_pairs(&[(0, 1)])
}

/// Perturbed circle `(√(1−h²) cos φ, √(1−h²) sin φ, h(φ))` for a real
/// trigonometric height `|h| < 1`, with `α = (1−h²) dφ`.
pub fn perturbed_circle(name: &str, h: Coefficient) -> Result<Link> {
    let c = circle_chart();
    if h.chart().as_ref() != c.as_ref() {
        return Err(Error::InvalidInput("height must live on the circle chart".into()));
    }
    let h = Coefficient::from_terms(&c, h.terms().iter().map(|(e, v)| (e.clone(), v.clone())).collect())?;
    let w = &Coefficient::one(&c) - &(&h * &h);
    let tw = TrigPoly::from_coefficient(&w)?;
    if tw.has_zero() || tw.value_at_pi().is_negative() {
        return Err(Error::InvalidInput(format!("height `{h}` reaches the poles")));
    }
    Link::new(name, &c, vec![w.clone(), w, Coefficient::one(&c)], vec![Coefficient::cos(&c, 0, 1), Coefficient::sin(&c, 0, 1), h])?
        .with_contact_pairs(&[(0, 1)])
}

/// `S^{2n−1} ⊂ (ℝ^{2n}, ω₀)` with `α₀ = Σ (x_i dy_i − y_i dx_i)`; circles on it
/// get their contact form by pullback of `α₀`.
#[derive(Clone, Debug)]
pub struct StandardSphere {
    symplectic: SymplecticChart,
    alpha0: DifferentialForm,
}

pub fn standard_sphere_contact(n: usize) -> StandardSphere {
    let s = SymplecticChart::standard(n);
    let c = s.chart().clone();
    let mut alpha0 = DifferentialForm::zero(&c, 1);
    for i in 0..n {
        let (x, y) = (Coefficient::var(&c, 2 * i), Coefficient::var(&c, 2 * i + 1));
        let t = DifferentialForm::term(x, &[2 * i + 1]).unwrap().sub(&DifferentialForm::term(y, &[2 * i]).unwrap()).unwrap();
        alpha0 = alpha0.add(&t).unwrap();
    }
    StandardSphere { symplectic: s, alpha0 }
}

impl StandardSphere {
    pub fn symplectic(&self) -> &SymplecticChart {
        &self.symplectic
    }

    pub fn alpha0(&self) -> &DifferentialForm {
        &self.alpha0
    }

    /// `φ ↦ (a_1 e^{iφ}, …, a_n e^{iφ})` for rationals with `Σ a_i² = 1`;
    /// `(1, 0, …)` is the Hopf circle. `α` is the pullback of `α₀`.
    pub fn great_circle(&self, a: &[Rational]) -> Result<Link> {
        let n = self.symplectic.half_dim();
        if a.len() != n {
            return Err(Error::InvalidInput(format!("expected {n} amplitudes")));
        }
        let c = circle_chart();
        let mut profile = vec![];
        for ai in a {
            profile.push(Coefficient::cos(&c, 0, 1).scale(&real(ai.clone())));
            profile.push(Coefficient::sin(&c, 0, 1).scale(&real(ai.clone())));
        }
        let map = ChartMap::from_functions(&c, self.symplectic.chart(), profile.clone())?;
        let alpha = map.pullback(&self.alpha0)?;
        let name = if a.iter().skip(1).all(|x| x.is_zero()) {
            if n == 1 { "circle".to_string() } else { "hopf circle".to_string() }
        } else {
            format!("great circle ({})", a.iter().map(fmt_rational).collect::<Vec<_>>().join(", "))
        };
        Link::new(&name, &c, vec![Coefficient::one(&c); 2 * n], profile)?.with_contact_form(alpha)
    }
}

/// One component of `Q_1 ∩ S³(√2)`, `Q_1 = {z₁² + z₂² = 0}`:
/// `(z₁, z₂) = (e^{iφ}, i e^{iφ})`, stored on the unit sphere with weights ½.
pub fn quadric_link(m: usize) -> Result<Link> {
    if m != 1 {
        return Err(Error::Unsupported(format!("quadric links are implemented for m = 1 only (got {m})")));
    }
    let c = circle_chart();
    let (cos, sin) = (Coefficient::cos(&c, 0, 1), Coefficient::sin(&c, 0, 1));
    let half = Coefficient::from_rational(&c, rat(1, 2));
    Link::new("quadric Q1", &c, vec![half; 4], vec![cos.clone(), sin.clone(), -sin, cos])?
        .with_contact_pairs(&[(0, 1), (2, 3)])
}

/// Exact checks `Σ z_k² = 0` and `Σ |z_k|² = 2` on the unweighted profile.
pub fn quadric_constraints(link: &Link) -> (bool, bool) {
    let p = link.profile();
    let c = link.chart();
    let mut re = Coefficient::zero(c);
    let mut im = Coefficient::zero(c);
    let mut norm = Coefficient::zero(c);
    for k in 0..p.len() / 2 {
        let (x, y) = (&p[2 * k], &p[2 * k + 1]);
        re = &re + &(&(x * x) - &(y * y));
        im = &im + &(x * y);
        norm = &norm + &(&(x * x) + &(y * y));
    }
    (re.is_zero() && im.is_zero(), norm == Coefficient::from_int(c, 2))
}
