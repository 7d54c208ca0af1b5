use std::f64::consts::PI;

use serde::Serialize;

use crate::cone::ConeSpace;
use crate::error::{Error, Result};

pub const NASH_TOLERANCE: f64 = 1e-8;
const GRID: usize = 720;
const RADII: [f64; 3] = [1e-2, 1e-4, 1e-6];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NashReport {
    pub member: bool,
    /// `min_φ |v̂ · n̂(φ)|` over the limit planes.
    pub distance: f64,
    pub angle: f64,
    pub tolerance: f64,
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn unit(a: [f64; 3]) -> [f64; 3] {
    let n = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
    [a[0] / n, a[1] / n, a[2] / n]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn surface(cone: &ConeSpace, t: f64, phi: f64) -> [f64; 3] {
    let p = cone.point(t, phi);
    [p[0], p[1], p[2]]
}

/// Unit normal of the tangent plane of the regular stratum at `(t, φ)`,
/// from finite differences of the embedding.
pub fn tangent_plane_normal(cone: &ConeSpace, t: f64, phi: f64) -> [f64; 3] {
    let ht = 1e-3 * t;
    let hp = 1e-3;
    let x = |t, p| surface(cone, t, p);
    let dt = {
        let (a, b) = (x(t + ht, phi), x(t - ht, phi));
        [(a[0] - b[0]) / (2.0 * ht), (a[1] - b[1]) / (2.0 * ht), (a[2] - b[2]) / (2.0 * ht)]
    };
    let dp = {
        let (a, b, c, d) = (x(t, phi + 2.0 * hp), x(t, phi + hp), x(t, phi - hp), x(t, phi - 2.0 * hp));
        let f = |i: usize| (-a[i] + 8.0 * b[i] - 8.0 * c[i] + d[i]) / (12.0 * hp);
        [f(0), f(1), f(2)]
    };
    unit(cross(dt, dp))
}

/// Limit of the tangent planes along the ray at `φ` as `t → 0`, with the
/// largest change of the normal seen along the sampled radii.
pub fn limit_plane_normal(cone: &ConeSpace, phi: f64) -> ([f64; 3], f64) {
    let normals: Vec<[f64; 3]> = RADII.iter().map(|&t| tangent_plane_normal(cone, t, phi)).collect();
    let last = normals[normals.len() - 1];
    let drift = normals.iter().map(|n| 1.0 - dot(*n, last).abs()).fold(0.0, f64::max);
    (last, drift)
}

fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let (mut c, mut d) = (b - g * (b - a), a + g * (b - a));
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..80 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    let x = (a + b) / 2.0;
    (x, f(x))
}

/// Whether `v` lies within `tol` of a limit tangent plane of the cone over a
/// circle link in `ℝ³`.
pub fn nash_cone_membership(cone: &ConeSpace, v: [f64; 3], tol: f64) -> Result<NashReport> {
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!("tolerance {tol} must be positive")));
    }
    if cone.link().ambient_dim() != 3 {
        return Err(Error::Unsupported("Nash cones are computed for links in R3".into()));
    }
    let len = dot(v, v).sqrt();
    if !(len > 0.0) || !len.is_finite() {
        return Err(Error::InvalidInput("direction must be a nonzero finite vector".into()));
    }
    let v = [v[0] / len, v[1] / len, v[2] / len];
    let s = |phi: f64| dot(v, limit_plane_normal(cone, phi).0);
    let step = 2.0 * PI / GRID as f64;
    let values: Vec<f64> = (0..=GRID).map(|j| s(j as f64 * step)).collect();
    let report = |distance: f64, angle: f64| NashReport { member: distance <= tol, distance, angle, tolerance: tol };
    for j in 0..GRID {
        let (a, b) = (values[j], values[j + 1]);
        if a == 0.0 {
            return Ok(report(0.0, j as f64 * step));
        }
        if a.signum() != b.signum() {
            let (mut lo, mut hi, mut flo) = (j as f64 * step, (j + 1) as f64 * step, a);
            for _ in 0..60 {
                let mid = (lo + hi) / 2.0;
                let fm = s(mid);
                if fm.signum() == flo.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            let mid = (lo + hi) / 2.0;
            return Ok(report(s(mid).abs(), mid));
        }
    }
    let j = (0..GRID).min_by(|&i, &k| values[i].abs().total_cmp(&values[k].abs())).expect("nonempty grid");
    let (angle, distance) = golden_min(|p| s(p).abs(), (j as f64 - 1.0) * step, (j as f64 + 1.0) * step);
    let (angle, distance) = if distance <= values[j].abs() { (angle, distance) } else { (j as f64 * step, values[j].abs()) };
    Ok(report(distance, angle.rem_euclid(2.0 * PI)))
}
