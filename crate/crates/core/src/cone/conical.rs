use std::sync::Arc;

use serde::Serialize;

use super::link::Link;
use crate::error::{Error, Result};
use crate::exterior::chart::ensure_same;
use crate::exterior::scalar::{rat, real};
use crate::exterior::{Chart, ChartMap, Coefficient, DifferentialForm, MapComponent, VarKind, VectorField};
use crate::poisson::SymplecticChart;
use crate::trig_roots::{TrigPoly, ZeroSet};

/// The cone `cL = L × [0, ∞) / L × {0}` over a circle link, on the chart `(t, phi)`.
#[derive(Clone, Debug)]
pub struct ConeSpace {
    link: Link,
    chart: Arc<Chart>,
    projection: ChartMap,
}

impl ConeSpace {
    pub fn new(link: Link) -> Result<Self> {
        let lc = link.chart();
        if lc.dim() != 1 || lc.kind(0) != VarKind::Angle {
            return Err(Error::Unsupported("cones are implemented over circle links".into()));
        }
        let chart = Chart::polar();
        let projection = ChartMap::new(&chart, lc, vec![MapComponent::Angle(vec![0, 1])])?;
        Ok(ConeSpace { link, chart, projection })
    }

    pub fn link(&self) -> &Link {
        &self.link
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    /// Defining function `ρ([z, t]) = t`.
    pub fn radial(&self) -> Coefficient {
        Coefficient::var(&self.chart, 0)
    }

    /// Pullback of a link form along `(t, φ) ↦ φ`.
    pub fn lift(&self, a: &DifferentialForm) -> Result<DifferentialForm> {
        self.projection.pullback(a)
    }

    pub fn lift_function(&self, f: &Coefficient) -> Result<Coefficient> {
        self.projection.pullback_coefficient(f)
    }

    /// The unweighted generators `t·p_i`; the ambient coordinates are `√w_i·t·p_i`.
    pub fn embedding_profile(&self) -> Result<Vec<Coefficient>> {
        let t = self.radial();
        self.link.profile().iter().map(|p| Ok(&t * &self.lift_function(p)?)).collect()
    }

    /// Ambient point of `[φ, t]`.
    pub fn point(&self, t: f64, phi: f64) -> Vec<f64> {
        self.link.point(&[phi]).into_iter().map(|x| t * x).collect()
    }

    /// Liouville field `t∂_t`.
    pub fn liouville(&self) -> VectorField {
        VectorField::radial_euler(&self.chart).expect("cone chart is radial")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NondegeneracyWitness {
    /// `"sturm"` for the exact zero count of the `dφ` coefficient.
    pub method: String,
    pub exact: bool,
    pub zeros: usize,
}

/// Exact zero test for a 1-form on a circle link.
pub fn check_nondegenerate(alpha: &DifferentialForm) -> Result<NondegeneracyWitness> {
    if alpha.degree() != 1 || alpha.chart().dim() != 1 {
        return Err(Error::Unsupported("nondegeneracy is decided for 1-forms on circle links".into()));
    }
    let a = alpha.component(&[0]);
    match TrigPoly::from_coefficient(&a)?.zeros() {
        ZeroSet::Everywhere => Err(Error::Degenerate("α = 0".into())),
        ZeroSet::Finite(z) if !z.is_empty() => Err(Error::Degenerate(format!("α vanishes at φ ≈ {:.12}", z[0]))),
        ZeroSet::Finite(_) => Ok(NondegeneracyWitness { method: "sturm".into(), exact: true, zeros: 0 }),
    }
}

/// `ω̄ = t² ω̂ + t dt∧α` with `ω̂ = ½ dα`.
#[derive(Clone, Debug)]
pub struct ConicalSymplecticForm {
    cone: ConeSpace,
    alpha: DifferentialForm,
    omega_hat: DifferentialForm,
    total: DifferentialForm,
    witness: Option<NondegeneracyWitness>,
}

pub fn make_cone_symplectic(cone: &ConeSpace, alpha: &DifferentialForm) -> Result<ConicalSymplecticForm> {
    ensure_same(cone.link().chart(), alpha.chart())?;
    let witness = check_nondegenerate(alpha)?;
    let omega_hat = alpha.d().scale(&real(rat(1, 2)));
    let t = cone.radial();
    let dt = DifferentialForm::dx(cone.chart(), 0);
    let total = cone
        .lift(&omega_hat)?
        .mul_function(&t.pow(2))?
        .add(&dt.wedge(&cone.lift(alpha)?)?.mul_function(&t)?)?;
    Ok(ConicalSymplecticForm { cone: cone.clone(), alpha: alpha.clone(), omega_hat, total, witness: Some(witness) })
}

impl ConicalSymplecticForm {
    /// Assembles a form without any check (for negative controls).
    pub fn from_parts(cone: &ConeSpace, alpha: DifferentialForm, total: DifferentialForm) -> Self {
        let omega_hat = alpha.d().scale(&real(rat(1, 2)));
        ConicalSymplecticForm { cone: cone.clone(), alpha, omega_hat, total, witness: None }
    }

    pub fn cone(&self) -> &ConeSpace {
        &self.cone
    }

    pub fn alpha(&self) -> &DifferentialForm {
        &self.alpha
    }

    pub fn omega_hat(&self) -> &DifferentialForm {
        &self.omega_hat
    }

    pub fn total(&self) -> &DifferentialForm {
        &self.total
    }

    pub fn witness(&self) -> Option<&NondegeneracyWitness> {
        self.witness.as_ref()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiouvilleReport {
    pub closed: bool,
    pub d_alpha_is_two_omega_hat: bool,
    pub contraction_is_t2_alpha: bool,
    pub lie_derivative_is_twice: bool,
    pub primitive_is_half_d_t2_alpha: bool,
    /// `ω̄^n = t^{2n−1} · (nonvanishing link form) dt∧…`.
    pub top_power_conical: bool,
}

impl LiouvilleReport {
    pub fn all(&self) -> bool {
        self.closed
            && self.d_alpha_is_two_omega_hat
            && self.contraction_is_t2_alpha
            && self.lie_derivative_is_twice
            && self.primitive_is_half_d_t2_alpha
            && self.top_power_conical
    }
}

pub fn liouville_identities(csf: &ConicalSymplecticForm) -> Result<LiouvilleReport> {
    let cone = csf.cone();
    let total = csf.total();
    let t = cone.radial();
    let v = cone.liouville();
    let alpha = cone.lift(csf.alpha())?;
    let t2_alpha = alpha.mul_function(&t.pow(2))?;

    let closed = total.d().is_zero();
    let d_alpha_is_two_omega_hat = csf.alpha().d() == csf.omega_hat().scale(&real(rat(2, 1)));
    let contraction_is_t2_alpha = total.interior(&v)?.sub(&t2_alpha)?.is_zero();
    let lie_derivative_is_twice = total.lie_derivative(&v)?.sub(&total.scale(&real(rat(2, 1))))?.is_zero();
    let primitive_is_half_d_t2_alpha = t2_alpha.d().scale(&real(rat(1, 2))).sub(total)?.is_zero();

    // n = 1 for circle links: ω̄ = t·a(φ) dt∧dφ with a nonvanishing
    let top = total.component(&[0, 1]);
    let top_power_conical = total.degree() == 2
        && total.components().len() == 1
        && top.terms().keys().all(|e| e[0] == 1)
        && Coefficient::from_terms(cone.chart(), top.terms().iter().map(|(e, c)| (vec![0, e[1]], c.clone())).collect())
            .and_then(|a| TrigPoly::from_coefficient(&a))
            .map(|g| !g.has_zero())
            .unwrap_or(false);
    Ok(LiouvilleReport {
        closed,
        d_alpha_is_two_omega_hat,
        contraction_is_t2_alpha,
        lie_derivative_is_twice,
        primitive_is_half_d_t2_alpha,
        top_power_conical,
    })
}

/// `ω₀` pulled back along the cone embedding `(t, φ) ↦ t·√w·p(φ) ∈ ℝ^{2n}`,
/// for links whose weights are one common constant `w`: since `ω₀` is
/// quadratic this is `w · (t·p)^* ω₀`.
pub fn ambient_omega_pullback(cone: &ConeSpace) -> Result<DifferentialForm> {
    let link = cone.link();
    let m = link.ambient_dim();
    let w = link
        .constant_weights()
        .filter(|w| w.windows(2).all(|p| p[0] == p[1]))
        .ok_or_else(|| Error::Unsupported("ambient pullback needs one constant weight".into()))?;
    if m % 2 != 0 {
        return Err(Error::Unsupported(format!("R{m} carries no standard symplectic form")));
    }
    let s = SymplecticChart::standard(m / 2);
    let map = ChartMap::from_functions(cone.chart(), s.chart(), cone.embedding_profile()?)?;
    Ok(map.pullback(s.omega())?.scale(&real(w[0].clone())))
}
