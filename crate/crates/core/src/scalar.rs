//! Exact rational coefficients.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

/// Coefficient field: arbitrary-precision rationals, always kept reduced.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u32) -> Scalar {
    (1..=n).fold(Scalar::one(), |acc, k| acc * int(k as i64))
}

/// Ordinary binomial coefficient C(n, k) for n >= 0.
pub fn binomial(n: u32, k: u32) -> Scalar {
    if k > n {
        return Scalar::zero();
    }
    let k = k.min(n - k);
    let mut acc = Scalar::one();
    for i in 0..k {
        acc = acc * int((n - i) as i64) / int((i + 1) as i64);
    }
    acc
}

/// Writes `q` as `3`, `-1/2`, ...
pub struct ScalarDisplay<'a>(pub &'a Scalar);

impl fmt::Display for ScalarDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.0;
        if q.is_integer() {
            write!(f, "{}", q.numer())
        } else {
            write!(f, "{}/{}", q.numer(), q.denom())
        }
    }
}

pub(crate) fn abs(q: &Scalar) -> Scalar {
    q.abs()
}
