use num_complex::Complex;
use num_traits::{One, Zero};

use super::conical::ConeSpace;
use super::link::standard_circle;
use crate::error::{Error, Result};
use crate::exterior::scalar::Rational;
use crate::exterior::{Coefficient, DifferentialForm};
use crate::poisson::{GroupAction, SymplecticChart};

/// Rotation `φ ↦ φ + 2π/k` of a circle link and of its cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AngularRotation {
    pub order: usize,
}

impl AngularRotation {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("rotation order must be positive".into()));
        }
        Ok(AngularRotation { order })
    }

    fn modes(a: &DifferentialForm) -> impl Iterator<Item = i32> + '_ {
        let angles = a.chart().angle_indices();
        a.components().values().flat_map(move |c| {
            let angles = angles.clone();
            c.terms().keys().map(move |e| angles.iter().map(|&i| e[i]).sum::<i32>()).collect::<Vec<_>>()
        })
    }

    /// A form is invariant iff every Fourier mode is divisible by `k`.
    pub fn is_invariant(&self, a: &DifferentialForm) -> bool {
        Self::modes(a).all(|b| b.rem_euclid(self.order as i32) == 0)
    }

    /// `(1/k) Σ_j R_j^* a`: keeps the modes divisible by `k`.
    pub fn average(&self, a: &DifferentialForm) -> DifferentialForm {
        let k = self.order as i32;
        let angles = a.chart().angle_indices();
        let mut out = DifferentialForm::zero(a.chart(), a.degree());
        for (b, c) in a.components() {
            let kept: Vec<_> = c
                .terms()
                .iter()
                .filter(|(e, _)| angles.iter().map(|&i| e[i]).sum::<i32>().rem_euclid(k) == 0)
                .map(|(e, v)| (e.clone(), v.clone()))
                .collect();
            let c = Coefficient::from_terms(a.chart(), kept).expect("subset of valid terms");
            out = out.add(&DifferentialForm::term(c, b).expect("valid basis")).expect("same degree");
        }
        out
    }

    /// Exact pullback `R^* a`, available when every phase `e^{2πib/k}` lies in `ℚ(i)`.
    pub fn pullback(&self, a: &DifferentialForm) -> Result<DifferentialForm> {
        let k = self.order as i32;
        let chart = a.chart();
        if chart.angle_indices().len() != 1 {
            return Err(Error::Unsupported("rotation acts on charts with one angle".into()));
        }
        let phi = chart.angle_indices()[0];
        let mut out = DifferentialForm::zero(chart, a.degree());
        for (b, c) in a.components() {
            let mut terms = vec![];
            for (e, v) in c.terms() {
                let quarter = 4 * e[phi];
                if quarter.rem_euclid(k) != 0 {
                    return Err(Error::Unsupported(format!("phase of mode {} under Z_{k} is not in Q(i)", e[phi])));
                }
                let phase = match (quarter / k).rem_euclid(4) {
                    0 => Complex::new(Rational::one(), Rational::zero()),
                    1 => Complex::new(Rational::zero(), Rational::one()),
                    2 => Complex::new(-Rational::one(), Rational::zero()),
                    _ => Complex::new(Rational::zero(), -Rational::one()),
                };
                terms.push((e.clone(), v * phase));
            }
            let c = Coefficient::from_terms(chart, terms)?;
            out = out.add(&DifferentialForm::term(c, b)?)?;
        }
        Ok(out)
    }
}

/// Flat cone over `S¹` with the `Z_k` action.
#[derive(Clone, Debug)]
pub struct QuotientCone {
    pub cone: ConeSpace,
    pub rotation: AngularRotation,
    /// The linear symplectic action on `ℝ²` when `k ∈ {2, 3, 4, 6}`.
    pub ambient: Option<GroupAction>,
}

impl QuotientCone {
    /// Whether `R^* α = α` for the contact form of the link.
    pub fn contact_invariant(&self) -> Result<bool> {
        let alpha = self.cone.link().contact_form().expect("circle carries α");
        Ok(self.rotation.pullback(alpha)? == *alpha && self.rotation.is_invariant(alpha))
    }
}

pub fn group_quotient_cone(k: usize) -> Result<QuotientCone> {
    if k < 2 {
        return Err(Error::InvalidInput(format!("group order must be at least 2 (got {k})")));
    }
    let cone = ConeSpace::new(standard_circle())?;
    let ambient = match k {
        2 | 3 | 4 | 6 => Some(GroupAction::cyclic(&SymplecticChart::standard(1), k)?),
        _ => None,
    };
    Ok(QuotientCone { cone, rotation: AngularRotation::new(k)?, ambient })
}
