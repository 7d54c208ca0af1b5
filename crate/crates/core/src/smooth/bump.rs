use serde::Serialize;

use crate::error::{Error, Result};

/// `σ(x) = e^{−1/x}` for `x > 0`, else `0`.
pub fn sigma(x: f64) -> f64 {
    if x > 0.0 {
        (-1.0 / x).exp()
    } else {
        0.0
    }
}

/// Smooth step from `0` (at `x ≤ 0`) to `1` (at `x ≥ 1`).
pub fn smooth_step(x: f64) -> f64 {
    let (a, b) = (sigma(x), sigma(1.0 - x));
    a / (a + b)
}

/// Bump at the apex: `f = 1 − ψ`, `ψ = χ ∘ t` on `t ≤ 2ε/5` and `1` beyond.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConeBump {
    pub epsilon: f64,
}

pub fn bump_on_cone(epsilon: f64) -> Result<ConeBump> {
    if !(epsilon > 0.0) || !epsilon.is_finite() {
        return Err(Error::InvalidInput(format!("ε = {epsilon} must be positive")));
    }
    Ok(ConeBump { epsilon })
}

impl ConeBump {
    /// `χ ∈ C₀^∞((0, ε))`: `0` up to `ε/5`, rising to `1` on `[2ε/5, 3ε/5]`,
    /// falling back to `0` from `4ε/5`.
    pub fn chi(&self, a: f64) -> f64 {
        let u = 5.0 * a / self.epsilon;
        if u <= 1.0 || u >= 4.0 {
            0.0
        } else if u < 2.0 {
            smooth_step(u - 1.0)
        } else if u <= 3.0 {
            1.0
        } else {
            smooth_step(4.0 - u)
        }
    }

    pub fn psi(&self, t: f64) -> f64 {
        if t <= 0.0 {
            0.0
        } else if 5.0 * t <= 2.0 * self.epsilon {
            self.chi(t)
        } else {
            1.0
        }
    }

    /// Value at radius `t` (independent of the link point).
    pub fn profile(&self, t: f64) -> f64 {
        1.0 - self.psi(t)
    }

    pub fn eval(&self, t: f64, _phi: f64) -> f64 {
        self.profile(t)
    }

    /// `f` vanishes for `t ≥ 2ε/5`.
    pub fn support_radius(&self) -> f64 {
        0.4 * self.epsilon
    }
}

/// Open patch of a cone: an apex cap `{t < r}` or an annulus `{a < t < b}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Patch {
    Apex { radius: f64 },
    Annulus { inner: f64, outer: f64 },
}

impl Patch {
    pub fn contains(&self, t: f64) -> bool {
        match *self {
            Patch::Apex { radius } => (0.0..radius).contains(&t),
            Patch::Annulus { inner, outer } => inner < t && t < outer,
        }
    }

    fn bounds(&self) -> (f64, f64) {
        match *self {
            Patch::Apex { radius } => (f64::NEG_INFINITY, radius),
            Patch::Annulus { inner, outer } => (inner, outer),
        }
    }
}

/// First radius in `[0, r_max)` not covered by the patches shrunk by `delta`.
fn uncovered(cover: &[Patch], r_max: f64, delta: f64) -> Option<f64> {
    let shrink = |p: &Patch| {
        let (a, b) = p.bounds();
        (a + delta, if b >= r_max { f64::INFINITY } else { b - delta })
    };
    let mut reach = match cover.iter().filter(|p| matches!(p, Patch::Apex { .. })).map(shrink).map(|s| s.1).reduce(f64::max) {
        Some(r) if r > 0.0 => r,
        _ => return Some(0.0),
    };
    while reach < r_max {
        let next = cover.iter().map(shrink).filter(|&(a, b)| a < reach && b > reach).map(|s| s.1).reduce(f64::max);
        match next {
            Some(b) => reach = b,
            None => return Some(reach),
        }
    }
    None
}

/// `f_i = g_i / Σ g` for bumps `g_i` supported in the patches.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionOfUnity {
    pub cover: Vec<Patch>,
    pub r_max: f64,
    /// Shrinking margin: `g_i > 0` exactly on the patch shrunk by `delta`.
    pub delta: f64,
}

pub fn partition_of_unity(cover: &[Patch], r_max: f64) -> Result<PartitionOfUnity> {
    if !(r_max > 0.0) || !r_max.is_finite() {
        return Err(Error::InvalidInput(format!("radius {r_max} must be positive")));
    }
    for p in cover {
        let (a, b) = p.bounds();
        if !(a < b) || b <= 0.0 || a.is_nan() || b.is_nan() {
            return Err(Error::InvalidInput(format!("empty patch {p:?}")));
        }
    }
    if let Some(radius) = uncovered(cover, r_max, 0.0) {
        return Err(Error::Uncovered { radius });
    }
    let (mut lo, mut hi) = (0.0, r_max);
    if uncovered(cover, r_max, hi).is_some() {
        for _ in 0..100 {
            let mid = (lo + hi) / 2.0;
            if uncovered(cover, r_max, mid).is_none() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    } else {
        lo = hi;
    }
    Ok(PartitionOfUnity { cover: cover.to_vec(), r_max, delta: lo / 2.0 })
}

impl PartitionOfUnity {
    pub fn len(&self) -> usize {
        self.cover.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cover.is_empty()
    }

    /// Unnormalized bump of patch `i`.
    pub fn bump(&self, i: usize, t: f64) -> f64 {
        let d = self.delta;
        let (a, b) = self.cover[i].bounds();
        let lower = if a == f64::NEG_INFINITY { 1.0 } else { sigma((t - a - d) / d) };
        let upper = if b >= self.r_max { 1.0 } else { sigma((b - d - t) / d) };
        lower * upper
    }

    pub fn eval(&self, i: usize, t: f64) -> f64 {
        let g: f64 = (0..self.len()).map(|j| self.bump(j, t)).sum();
        self.bump(i, t) / g
    }

    pub fn values(&self, t: f64) -> Vec<f64> {
        let g: Vec<f64> = (0..self.len()).map(|j| self.bump(j, t)).collect();
        let total: f64 = g.iter().sum();
        g.into_iter().map(|x| x / total).collect()
    }
}
