use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::trig_roots::TrigPoly;

/// Metric on `ℝ²` with components `δ_ij + |x|^k Q_ij(x/|x|)`.
///
/// For `k = 2` this is the cartesian form of `dt² + t²(dα₀² + ḡ)` where
/// `Q = ḡ − g₀` is a quadratic form with Fourier coefficients on `S¹`.
#[derive(Clone, Debug)]
pub struct MetricPerturbation {
    /// `Q_11, Q_12, Q_22`.
    q: [TrigPoly; 3],
    radial_power: u32,
}

impl MetricPerturbation {
    pub fn quadratic(q11: TrigPoly, q12: TrigPoly, q22: TrigPoly) -> Self {
        MetricPerturbation { q: [q11, q12, q22], radial_power: 2 }
    }

    pub fn zero() -> Self {
        let z = TrigPoly::new(Default::default()).expect("zero is real");
        Self::quadratic(z.clone(), z.clone(), z)
    }

    /// Replaces the radial factor `|x|²` by `|x|^k`; `k = 1` is the negative control.
    pub fn with_radial_power(mut self, k: u32) -> Self {
        self.radial_power = k;
        self
    }

    pub fn radial_power(&self) -> u32 {
        self.radial_power
    }

    pub fn is_zero(&self) -> bool {
        self.q.iter().all(|q| q.is_zero())
    }

    fn q(&self, i: usize, j: usize) -> &TrigPoly {
        &self.q[i + j]
    }

    /// Perturbation part `|x|^k Q_ij(θ)` (zero at the apex).
    pub fn perturbation(&self, i: usize, j: usize, x: [f64; 2]) -> f64 {
        let r = x[0].hypot(x[1]);
        if r == 0.0 {
            return 0.0;
        }
        r.powi(self.radial_power as i32) * self.q(i, j).eval(x[1].atan2(x[0]))
    }

    pub fn component(&self, i: usize, j: usize, x: [f64; 2]) -> f64 {
        f64::from(u8::from(i == j)) + self.perturbation(i, j, x)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MetricReport {
    pub rays: usize,
    pub radius: f64,
    pub step: f64,
    pub max_deviation: f64,
    pub worst_angle: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Sampling radius and finite-difference step used by [`metric_c1_check`].
pub const PROBE_RADIUS: f64 = 1e-8;
pub const PROBE_STEP: f64 = 1e-10;

/// Compares one-sided finite-difference gradients of every metric component
/// at `PROBE_RADIUS · e_θ`, over `samples` rays, with the one-sided gradient at
/// the apex. Passes iff the largest deviation is at most `tolerance`.
pub fn metric_c1_check(m: &MetricPerturbation, samples: usize, tolerance: f64) -> Result<MetricReport> {
    if samples == 0 {
        return Err(Error::InvalidInput("at least one ray is required".into()));
    }
    if !(tolerance >= 0.0) {
        return Err(Error::InvalidInput(format!("tolerance {tolerance} must be nonnegative")));
    }
    let h = PROBE_STEP;
    let grad = |i: usize, j: usize, x: [f64; 2]| -> [f64; 2] {
        let g0 = m.perturbation(i, j, x);
        [
            (m.perturbation(i, j, [x[0] + h, x[1]]) - g0) / h,
            (m.perturbation(i, j, [x[0], x[1] + h]) - g0) / h,
        ]
    };
    let pairs = [(0, 0), (0, 1), (1, 1)];
    let apex: Vec<[f64; 2]> = pairs.iter().map(|&(i, j)| grad(i, j, [0.0, 0.0])).collect();
    let mut worst = (0.0f64, 0.0f64);
    for r in 0..samples {
        let theta = 2.0 * PI * r as f64 / samples as f64;
        let x = [PROBE_RADIUS * theta.cos(), PROBE_RADIUS * theta.sin()];
        for (&(i, j), a) in pairs.iter().zip(&apex) {
            let g = grad(i, j, x);
            let dev = (g[0] - a[0]).abs().max((g[1] - a[1]).abs());
            if dev > worst.0 {
                worst = (dev, theta);
            }
        }
    }
    Ok(MetricReport {
        rays: samples,
        radius: PROBE_RADIUS,
        step: h,
        max_deviation: worst.0,
        worst_angle: worst.1,
        tolerance,
        pass: worst.0 <= tolerance,
    })
}
