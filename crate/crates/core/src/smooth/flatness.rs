use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::Serialize;

use crate::cone::{circle_chart, latitude, perturbed_circle, ConeSpace, Link};
use crate::error::{Error, Result};
use crate::exterior::scalar::{rat, real, Scalar};
use crate::exterior::Coefficient;
use crate::trig_roots::{TrigPoly, ZeroSet};

/// Set of flat directions `{v : −v ∈ T_s cL}` on the link's angle domain.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "angles", rename_all = "snake_case")]
pub enum FlatLocus {
    /// `L = −L`: every direction is flat.
    Everywhere,
    /// Isolated flat rays at these angles in `[0, 2π)`.
    Rays(Vec<f64>),
}

#[derive(Clone, Debug)]
pub struct TangentCone {
    link: Link,
    /// Unit directions `x(φ_j)` on a uniform grid.
    pub generators: Vec<Vec<f64>>,
    pub flat: FlatLocus,
    /// `(v, −v)` with `v` at an angle in `[0, π)` of the flat locus.
    pub flat_pairs: Vec<(Vec<f64>, Vec<f64>)>,
}

impl TangentCone {
    pub fn link(&self) -> &Link {
        &self.link
    }
}

/// Exact flat locus of a circle link.
///
/// Links with `x(φ + π) = −x(φ)` are flat everywhere. For links
/// `(ρ cos φ, ρ sin φ, h)` in `ℝ³` with `ρ > 0` the antipode of `x(φ)` can
/// only be `x(φ + π)`, so `φ` is flat iff `h(φ + π) = −h(φ)`, i.e. iff the
/// even-mode part of `h` vanishes.
pub fn antipodal_set(link: &Link) -> Result<FlatLocus> {
    let odd = |c: &Coefficient| c.terms().keys().all(|e| e[0].rem_euclid(2) == 1);
    if link.dim() != 1 {
        return Err(Error::Unsupported("flat loci are computed for circle links".into()));
    }
    if link.profile().iter().all(|p| p.is_zero() || odd(p)) && link.weights().iter().all(|w| w.as_constant().is_some()) {
        return Ok(FlatLocus::Everywhere);
    }
    let c = link.chart();
    let p = link.profile();
    let w = link.weights();
    let planar = link.ambient_dim() == 3
        && p[0] == Coefficient::cos(c, 0, 1)
        && p[1] == Coefficient::sin(c, 0, 1)
        && w[0] == w[1]
        && w[2] == Coefficient::one(c)
        && w[0] == &Coefficient::one(c) - &(&p[2] * &p[2]);
    if !planar {
        return Err(Error::Unsupported(format!("no antipodal rule for `{}`", link.descriptor())));
    }
    let h = TrigPoly::from_coefficient(&p[2])?;
    let even: BTreeMap<i32, Scalar> = h.modes().iter().filter(|(b, _)| *b % 2 == 0).map(|(&b, v)| (b, v.clone())).collect();
    match TrigPoly::new(even)?.zeros() {
        ZeroSet::Everywhere => Ok(FlatLocus::Everywhere),
        ZeroSet::Finite(z) => Ok(FlatLocus::Rays(z)),
    }
}

pub fn tangent_cone(cone: &ConeSpace) -> Result<TangentCone> {
    tangent_cone_sampled(cone, 360)
}

pub fn tangent_cone_sampled(cone: &ConeSpace, samples: usize) -> Result<TangentCone> {
    let link = cone.link().clone();
    let flat = antipodal_set(&link)?;
    let angle = |j: usize, n: usize| 2.0 * PI * j as f64 / n as f64;
    let generators: Vec<Vec<f64>> = (0..samples).map(|j| link.point(&[angle(j, samples)])).collect();
    let pair = |phi: f64| {
        let v = link.point(&[phi]);
        let w = v.iter().map(|x| -x).collect();
        (v, w)
    };
    let flat_pairs = match &flat {
        FlatLocus::Everywhere => (0..samples / 2).map(|j| pair(angle(j, samples))).collect(),
        FlatLocus::Rays(z) => z.iter().filter(|&&phi| phi < PI).map(|&phi| pair(phi)).collect(),
    };
    Ok(TangentCone { link, generators, flat, flat_pairs })
}

/// Connected components of the nonzero flat vectors: one per isolated ray,
/// and one when every direction is flat (a punctured plane or cone).
pub fn degree_of_flatness(tc: &TangentCone) -> usize {
    match &tc.flat {
        FlatLocus::Everywhere => 1,
        FlatLocus::Rays(z) => z.len(),
    }
}

/// Perturbed circle with exactly `2k` flat rays (`k = 0`: the latitude `½`).
///
/// Even `k` uses `h = ¼ cos(kφ)`, odd `k` uses `h = ¼ (1 + cos 2φ) cos((k−1)φ)`;
/// both have only even modes, so the flat rays are the distinct zeros of `h`.
pub fn construct_flatness_link(k: u32) -> Result<Link> {
    if k == 0 {
        return latitude(rat(1, 2));
    }
    let c = circle_chart();
    let quarter = real(rat(1, 4));
    let k = i32::try_from(k).map_err(|_| Error::InvalidInput("too many flat pairs".into()))?;
    let h = if k % 2 == 0 {
        Coefficient::cos(&c, 0, k).scale(&quarter)
    } else {
        let bump = &Coefficient::one(&c) + &Coefficient::cos(&c, 0, 2);
        let wave = if k == 1 { Coefficient::one(&c) } else { Coefficient::cos(&c, 0, k - 1) };
        (&bump * &wave).scale(&quarter)
    };
    perturbed_circle(&format!("flat pairs {k}"), h)
}
