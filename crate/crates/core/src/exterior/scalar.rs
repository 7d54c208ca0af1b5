//! Exact scalars: Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;
pub type Scalar = Complex<BigRational>;

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn real(r: Rational) -> Scalar {
    Complex::new(r, Rational::zero())
}

pub fn scalar(num: i64, den: i64) -> Scalar {
    real(rat(num, den))
}

pub fn imag_unit() -> Scalar {
    Complex::new(Rational::zero(), Rational::one())
}

pub fn is_real(s: &Scalar) -> bool {
    s.im.is_zero()
}

pub fn to_f64(r: &Rational) -> f64 {
    // BigInt -> f64 conversion via the decimal-free path in num-traits
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn to_c64(s: &Scalar) -> Complex<f64> {
    Complex::new(to_f64(&s.re), to_f64(&s.im))
}

/// Parses `n` or `n/d`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(text.parse().ok()?)),
    }
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text: `3/2`, `-1/2i`, `(1/2+3i)`.
pub fn fmt_scalar(s: &Scalar) -> String {
    match (s.re.is_zero(), s.im.is_zero()) {
        (_, true) => fmt_rational(&s.re),
        (true, false) => format!("{}i", fmt_rational(&s.im)),
        (false, false) => {
            let sign = if s.im.is_negative() { "-" } else { "+" };
            format!("({}{}{}i)", fmt_rational(&s.re), sign, fmt_rational(&s.im.abs()))
        }
    }
}
