//! Exact zero counting for real trigonometric polynomials in one angle.
//!
//! `g(φ) = Σ c_b e^{ibφ}` is mapped through `e^{iφ} = (1+is)/(1−is)`,
//! `s = tan(φ/2)`, to the real polynomial `R(s) = g·(1+s²)^N`. Distinct real
//! roots of `R` are counted with a Sturm sequence and the point `φ = π` is
//! checked separately.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exterior::scalar::{imag_unit, is_real, rat, real, to_c64, to_f64, Rational, Scalar};
use crate::exterior::{Coefficient, VarKind};

/// Dense univariate polynomial over `ℚ`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| rat(x, 1)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * rat(k as i64, 1)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Self, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
        Self::new((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division `self = q·d + r`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&(Rational::one() / self.leading()))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn squarefree(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Sturm sequence `p, p', −rem(…)`.
    pub fn sturm(&self) -> Vec<Self> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            seq.push(r.scale(&rat(-1, 1)));
        }
        seq.pop();
        seq
    }

    /// Cauchy bound: every real root lies in `(−B, B)`.
    pub fn root_bound(&self) -> Rational {
        let lead = self.leading().abs();
        let m = self.coeffs.iter().map(|c| c.abs() / &lead).max().unwrap_or_else(Rational::zero);
        m + Rational::one()
    }

    /// Distinct real roots, isolated to width below `2^{-bits}` and returned as `f64`.
    pub fn real_roots(&self, bits: u32) -> Vec<f64> {
        let p = self.squarefree();
        if p.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        let seq = p.sturm();
        let b = p.root_bound();
        let lo = -b.clone();
        let total = variations_at(&seq, &lo) - variations_at(&seq, &b);
        let mut out = vec![];
        isolate(&p, &seq, lo, b, total, bits, &mut out);
        out
    }

    pub fn count_real_roots(&self) -> usize {
        let p = self.squarefree();
        if p.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let seq = p.sturm();
        sign_changes(seq.iter().map(|q| leading_sign_at(q, false)))
            - sign_changes(seq.iter().map(|q| leading_sign_at(q, true)))
    }
}

fn leading_sign_at(p: &UniPoly, plus_infinity: bool) -> i32 {
    let s = if p.leading().is_positive() { 1 } else { -1 };
    if plus_infinity || p.degree().unwrap_or(0) % 2 == 0 {
        s
    } else {
        -s
    }
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let nz: Vec<i32> = signs.filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

fn variations_at(seq: &[UniPoly], x: &Rational) -> usize {
    sign_changes(seq.iter().map(|q| {
        let v = q.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }))
}

/// Roots in `(lo, hi]`, `count` of them.
fn isolate(p: &UniPoly, seq: &[UniPoly], lo: Rational, hi: Rational, count: usize, bits: u32, out: &mut Vec<f64>) {
    if count == 0 {
        return;
    }
    let tiny = Rational::new(1.into(), num_bigint::BigInt::one() << bits);
    if count == 1 && &hi - &lo < tiny {
        out.push(to_f64(&((&lo + &hi) / rat(2, 1))));
        return;
    }
    if count == 1 && p.eval(&hi).is_zero() {
        out.push(to_f64(&hi));
        return;
    }
    let mid = (&lo + &hi) / rat(2, 1);
    let left = variations_at(seq, &lo) - variations_at(seq, &mid);
    isolate(p, seq, lo, mid.clone(), left, bits, out);
    isolate(p, seq, mid, hi, count - left, bits, out);
}

/// Zero set of a real trigonometric polynomial on `[0, 2π)`.
#[derive(Clone, Debug, PartialEq)]
pub enum ZeroSet {
    Everywhere,
    Finite(Vec<f64>),
}

impl ZeroSet {
    pub fn count(&self) -> Option<usize> {
        match self {
            ZeroSet::Everywhere => None,
            ZeroSet::Finite(z) => Some(z.len()),
        }
    }
}

/// Real trigonometric polynomial `Σ c_b e^{ibφ}` with `c_{−b} = conj(c_b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigPoly {
    modes: BTreeMap<i32, Scalar>,
}

impl TrigPoly {
    pub fn new(modes: BTreeMap<i32, Scalar>) -> Result<Self> {
        let modes: BTreeMap<i32, Scalar> = modes.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        for (b, c) in &modes {
            let mirror = modes.get(&-b).cloned().unwrap_or_else(Scalar::zero);
            if mirror != c.conj() {
                return Err(Error::InvalidInput(format!("trigonometric polynomial is not real at mode {b}")));
            }
        }
        Ok(TrigPoly { modes })
    }

    /// Reads a coefficient element that depends on a single angle variable only.
    pub fn from_coefficient(f: &Coefficient) -> Result<Self> {
        let chart = f.chart();
        let angles = chart.angle_indices();
        let mut modes = BTreeMap::new();
        for (e, c) in f.terms() {
            for (i, &k) in e.iter().enumerate() {
                let ok = match chart.kind(i) {
                    VarKind::Angle => k == 0 || angles.len() == 1,
                    _ => k == 0,
                };
                if !ok {
                    return Err(Error::InvalidInput(format!("`{f}` is not a function of one angle")));
                }
            }
            let b = angles.first().map_or(0, |&a| e[a]);
            modes.insert(b, c.clone());
        }
        Self::new(modes)
    }

    pub fn modes(&self) -> &BTreeMap<i32, Scalar> {
        &self.modes
    }

    pub fn is_zero(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn max_mode(&self) -> i32 {
        self.modes.keys().map(|b| b.abs()).max().unwrap_or(0)
    }

    pub fn eval(&self, phi: f64) -> f64 {
        self.modes
            .iter()
            .map(|(&b, c)| {
                let c = to_c64(c);
                c.re * (b as f64 * phi).cos() - c.im * (b as f64 * phi).sin()
            })
            .sum()
    }

    /// Exact value at `φ = π`.
    pub fn value_at_pi(&self) -> Rational {
        let mut v = Scalar::zero();
        for (b, c) in &self.modes {
            if b % 2 == 0 {
                v += c;
            } else {
                v -= c;
            }
        }
        debug_assert!(is_real(&v));
        v.re
    }

    /// `R(s) = g(φ(s))·(1+s²)^N`, `N` the largest mode.
    pub fn weierstrass(&self) -> UniPoly {
        let n = self.max_mode();
        let plus = cpoly_binomial(imag_unit(), 2 * n as usize);
        let minus = cpoly_binomial(-imag_unit(), 2 * n as usize);
        let mut acc: Vec<Scalar> = vec![Scalar::zero(); 2 * n as usize + 1];
        for (&b, c) in &self.modes {
            let term = cmul(&plus[(n + b) as usize], &minus[(n - b) as usize]);
            for (k, v) in term.iter().enumerate() {
                acc[k] += c * v;
            }
        }
        debug_assert!(acc.iter().all(is_real));
        UniPoly::new(acc.into_iter().map(|c| c.re).collect())
    }

    pub fn zero_count(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let at_pi = usize::from(self.value_at_pi().is_zero());
        Some(self.weierstrass().count_real_roots() + at_pi)
    }

    pub fn has_zero(&self) -> bool {
        self.zero_count() != Some(0)
    }

    /// Distinct zeros in `[0, 2π)`, sorted.
    pub fn zeros(&self) -> ZeroSet {
        if self.is_zero() {
            return ZeroSet::Everywhere;
        }
        let mut z: Vec<f64> = self
            .weierstrass()
            .real_roots(60)
            .into_iter()
            .map(|s| (2.0 * s.atan()).rem_euclid(2.0 * PI))
            .collect();
        if self.value_at_pi().is_zero() {
            z.push(PI);
        }
        z.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ZeroSet::Finite(z)
    }
}

/// Powers `(1 + u s)^m` for `m = 0..=max`, as coefficient vectors in `s`.
fn cpoly_binomial(u: Scalar, max: usize) -> Vec<Vec<Scalar>> {
    let mut out = vec![vec![real(rat(1, 1))]];
    for m in 1..=max {
        let prev = &out[m - 1];
        let mut next = vec![Scalar::zero(); m + 1];
        for (k, c) in prev.iter().enumerate() {
            next[k] += c;
            next[k + 1] += c * &u;
        }
        out.push(next);
    }
    out
}

fn cmul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::scalar::scalar;
    use crate::exterior::Chart;

    fn brute_zero_count(g: &TrigPoly, grid: usize) -> usize {
        // sign changes on a fine grid; valid for simple zeros away from grid points
        let vals: Vec<f64> = (0..grid).map(|k| g.eval(2.0 * PI * (k as f64 + 0.37) / grid as f64)).collect();
        (0..grid).filter(|&k| vals[k].signum() != vals[(k + 1) % grid].signum()).count()
    }

    #[test]
    fn sturm_counts() {
        // (s-1)(s+2)(s-3)
        let p = UniPoly::from_ints(&[6, -5, -2, 1]);
        assert_eq!(p.count_real_roots(), 3);
        let r = p.real_roots(50);
        assert!((r[0] + 2.0).abs() < 1e-12 && (r[1] - 1.0).abs() < 1e-12 && (r[2] - 3.0).abs() < 1e-12);
        assert_eq!(UniPoly::from_ints(&[1, 0, 1]).count_real_roots(), 0);
        // (s-1)^2 (s+1)
        assert_eq!(UniPoly::from_ints(&[1, -1, -1, 1]).count_real_roots(), 2);
    }

    #[test]
    fn division_identity() {
        let a = UniPoly::from_ints(&[3, 0, -2, 5, 1]);
        let d = UniPoly::from_ints(&[1, 2]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn trig_zero_counts() {
        let c = Chart::polar();
        let cos2 = TrigPoly::from_coefficient(&Coefficient::cos(&c, 1, 2)).unwrap();
        assert_eq!(cos2.zero_count(), Some(4));
        let ZeroSet::Finite(z) = cos2.zeros() else { panic!() };
        for (k, v) in z.iter().enumerate() {
            assert!((v - PI / 4.0 * (2 * k + 1) as f64).abs() < 1e-12);
        }
        let sin = TrigPoly::from_coefficient(&Coefficient::sin(&c, 1, 1)).unwrap();
        assert_eq!(sin.zero_count(), Some(2)); // 0 and π
        let one = TrigPoly::from_coefficient(&Coefficient::one(&c)).unwrap();
        assert_eq!(one.zero_count(), Some(0));
        let shifted = &Coefficient::cos(&c, 1, 1) + &Coefficient::from_rational(&c, rat(2, 1));
        assert!(!TrigPoly::from_coefficient(&shifted).unwrap().has_zero());
        assert_eq!(TrigPoly::from_coefficient(&Coefficient::zero(&c)).unwrap().zeros(), ZeroSet::Everywhere);
    }

    #[test]
    fn rejects_non_real() {
        let m = BTreeMap::from([(1, scalar(1, 1))]);
        assert!(TrigPoly::new(m).is_err());
    }

    #[test]
    fn weierstrass_agrees_with_grid_on_random_profiles() {
        let c = Chart::polar();
        let mut s = crate::random::FormSampler::new(5, 0);
        for _ in 0..50 {
            let f = s.trig_polynomial(&c, 4);
            let g = TrigPoly::from_coefficient(&f).unwrap();
            if g.is_zero() {
                continue;
            }
            let ZeroSet::Finite(z) = g.zeros() else { unreachable!() };
            for phi in &z {
                assert!(g.eval(*phi).abs() < 1e-9, "{f} at {phi}");
            }
            // every grid sign change is witnessed by an exact zero
            assert!(brute_zero_count(&g, 4000) <= z.len());
        }
    }
}
