//! Coefficient elements: polynomials in cartesian/radial variables times
//! Fourier–Laurent monomials `e^{ibφ}` in angle variables, with Gaussian
//! rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex;
use num_traits::Zero;

use super::chart::{same_chart, Chart, VarKind};
use super::scalar::{fmt_scalar, imag_unit, int, is_real, real, to_c64, Rational, Scalar};
use crate::error::{Error, Result};

/// One exponent (cartesian/radial) or Fourier mode (angle) per chart variable.
pub type Exponent = Vec<i32>;

#[derive(Clone, Debug)]
pub struct Coefficient {
    chart: Arc<Chart>,
    terms: BTreeMap<Exponent, Scalar>,
}

impl PartialEq for Coefficient {
    fn eq(&self, other: &Self) -> bool {
        same_chart(&self.chart, &other.chart) && self.terms == other.terms
    }
}

impl Eq for Coefficient {}

impl Coefficient {
    pub fn zero(chart: &Arc<Chart>) -> Self {
        Coefficient { chart: chart.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(chart: &Arc<Chart>, c: Scalar) -> Self {
        Self::monomial(chart, vec![0; chart.dim()], c)
    }

    pub fn from_int(chart: &Arc<Chart>, n: i64) -> Self {
        Self::constant(chart, real(int(n)))
    }

    pub fn from_rational(chart: &Arc<Chart>, r: Rational) -> Self {
        Self::constant(chart, real(r))
    }

    pub fn one(chart: &Arc<Chart>) -> Self {
        Self::from_int(chart, 1)
    }

    pub fn monomial(chart: &Arc<Chart>, exponent: Exponent, c: Scalar) -> Self {
        assert_eq!(exponent.len(), chart.dim(), "exponent length must equal chart dimension");
        for (i, &e) in exponent.iter().enumerate() {
            assert!(
                chart.kind(i) == VarKind::Angle || e >= 0,
                "negative exponent on non-angle variable"
            );
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Coefficient { chart: chart.clone(), terms }
    }

    /// Checked constructor from a term list; merges repeated exponents.
    pub fn from_terms(chart: &Arc<Chart>, terms: Vec<(Exponent, Scalar)>) -> Result<Self> {
        let mut out = Coefficient::zero(chart);
        for (e, c) in terms {
            if e.len() != chart.dim() {
                return Err(Error::InvalidInput(format!(
                    "exponent {e:?} has wrong length for chart {chart}"
                )));
            }
            for (i, &x) in e.iter().enumerate() {
                if chart.kind(i) != VarKind::Angle && x < 0 {
                    return Err(Error::NegativeRadialExponent(x as i64));
                }
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// The coordinate function of a cartesian or radial variable.
    pub fn var(chart: &Arc<Chart>, i: usize) -> Self {
        assert_ne!(chart.kind(i), VarKind::Angle, "angle variables are not functions");
        let mut e = vec![0; chart.dim()];
        e[i] = 1;
        Self::monomial(chart, e, real(int(1)))
    }

    /// `e^{i·b·φ}` for the angle variable `i`. Not real unless `b = 0`.
    pub fn exp_mode(chart: &Arc<Chart>, i: usize, b: i32) -> Self {
        assert_eq!(chart.kind(i), VarKind::Angle);
        let mut e = vec![0; chart.dim()];
        e[i] = b;
        Self::monomial(chart, e, real(int(1)))
    }

    /// `cos(bφ)` in the angle variable `i`.
    pub fn cos(chart: &Arc<Chart>, i: usize, b: i32) -> Self {
        let half = real(Rational::new(1.into(), 2.into()));
        Self::exp_mode(chart, i, b).scale(&half) + Self::exp_mode(chart, i, -b).scale(&half)
    }

    /// `sin(bφ)` in the angle variable `i`.
    pub fn sin(chart: &Arc<Chart>, i: usize, b: i32) -> Self {
        // sin = (u^b - u^-b) / 2i = -i/2 u^b + i/2 u^-b
        let c = Complex::new(Rational::zero(), Rational::new(1.into(), 2.into()));
        Self::exp_mode(chart, i, b).scale(&(-c.clone())) + Self::exp_mode(chart, i, -b).scale(&c)
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &[i32]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Constant term if the element is a constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Coefficient::zero(&self.chart);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v.clone() * c.clone())).collect();
        Coefficient { chart: self.chart.clone(), terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Coefficient::one(&self.chart);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative in variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let kind = self.chart.kind(i);
        let mut out = Coefficient::zero(&self.chart);
        for (e, c) in &self.terms {
            let k = e[i];
            if k == 0 {
                continue;
            }
            let factor = match kind {
                VarKind::Angle => imag_unit() * real(int(k as i64)),
                _ => real(int(k as i64)),
            };
            let mut e2 = e.clone();
            if kind != VarKind::Angle {
                e2[i] -= 1;
            }
            out.add_term(e2, c.clone() * factor);
        }
        out
    }

    /// Complex conjugate (angle modes negate).
    pub fn conj(&self) -> Self {
        let angles = self.chart.angle_indices();
        let mut out = Coefficient::zero(&self.chart);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            for &i in &angles {
                e2[i] = -e2[i];
            }
            out.add_term(e2, c.conj());
        }
        out
    }

    /// Reality: coefficient of mode `−b` is the conjugate of mode `+b`.
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Real part `(f + f̄)/2`.
    pub fn real_part(&self) -> Self {
        let half = real(Rational::new(1.into(), 2.into()));
        (self + &self.conj()).scale(&half)
    }

    /// Maximal total polynomial degree over cartesian and radial variables.
    pub fn poly_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| {
                e.iter()
                    .enumerate()
                    .filter(|(i, _)| self.chart.kind(*i) != VarKind::Angle)
                    .map(|(_, &x)| x as u32)
                    .sum()
            })
            .max()
    }

    /// Numeric evaluation at a point (angles in radians).
    pub fn eval(&self, point: &[f64]) -> Complex<f64> {
        assert_eq!(point.len(), self.chart.dim());
        let mut acc = Complex::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut m = to_c64(c);
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                m *= match self.chart.kind(i) {
                    VarKind::Angle => Complex::from_polar(1.0, k as f64 * point[i]),
                    _ => Complex::new(point[i].powi(k), 0.0),
                };
            }
            acc += m;
        }
        acc
    }

    pub fn eval_real(&self, point: &[f64]) -> f64 {
        self.eval(point).re
    }

    /// Substitutes a constant into a cartesian/radial variable.
    pub fn substitute_zero(&self, i: usize) -> Self {
        let mut out = Coefficient::zero(&self.chart);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    pub fn is_all_real_coefficients(&self) -> bool {
        self.terms.values().all(is_real)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", fmt_scalar(c))?;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = self.chart.var_name(i);
                match self.chart.kind(i) {
                    VarKind::Angle if k == 1 => write!(f, "*exp(i*{name})")?,
                    VarKind::Angle => write!(f, "*exp({k}i*{name})")?,
                    _ if k == 1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        assert!(same_chart(&self.chart, &rhs.chart), "chart mismatch in coefficient addition");
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (e, c) in &small.terms {
            big.add_term(e.clone(), c.clone());
        }
        big
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: Coefficient) -> Coefficient {
        &self + &rhs
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect();
        Coefficient { chart: self.chart.clone(), terms }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: Coefficient) -> Coefficient {
        &self - &rhs
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        assert!(same_chart(&self.chart, &rhs.chart), "chart mismatch in coefficient product");
        let mut out = Coefficient::zero(&self.chart);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}
