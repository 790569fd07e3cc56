//! Exact Gaussian-rational coefficients `p/q + (r/s)i`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};

pub type Rational = Ratio<i128>;

/// An element of `Q(i)`. Arithmetic is checked: an `i128` overflow panics
/// instead of wrapping.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

fn checked<T>(v: Option<T>) -> T {
    v.expect("coefficient overflow in exact arithmetic")
}

impl GaussianRational {
    pub const fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i128) -> Self {
        Self::new(Rational::from_integer(n), Rational::zero())
    }

    pub fn from_ratio(num: i128, den: i128) -> Self {
        Self::new(Rational::new(num, den), Rational::zero())
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re, -self.im)
    }

    /// `|z|^2` as an exact rational.
    pub fn norm_sqr(&self) -> Rational {
        checked(checked(self.re.checked_mul(&self.re)).checked_add(&checked(self.im.checked_mul(&self.im))))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(self.re / n, -self.im / n))
    }

    pub fn pow(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inv()? } else { *self };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc * base;
        }
        Some(acc)
    }
}

impl Default for GaussianRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n as i128)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(checked(self.re.checked_add(&rhs.re)), checked(self.im.checked_add(&rhs.im)))
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(checked(self.re.checked_sub(&rhs.re)), checked(self.im.checked_sub(&rhs.im)))
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let rr = checked(self.re.checked_mul(&rhs.re));
        let ii = checked(self.im.checked_mul(&rhs.im));
        let ri = checked(self.re.checked_mul(&rhs.im));
        let ir = checked(self.im.checked_mul(&rhs.re));
        Self::new(checked(rr.checked_sub(&ii)), checked(ri.checked_add(&ir)))
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form: `p/q`, `r/si`, or `p/q+r/si` (`1i`, `-1/2i` for pure
/// imaginary values). The real part is omitted only when it is zero and the
/// imaginary part is not.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        if !self.re.is_zero() {
            fmt_rational(&self.re, f)?;
            if self.im > Rational::zero() {
                f.write_str("+")?;
            }
        }
        fmt_rational(&self.im, f)?;
        f.write_str("i")
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i128, d: i128) -> GaussianRational {
        GaussianRational::from_ratio(n, d)
    }

    #[test]
    fn fractions_are_reduced() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!((q(1, 2) + q(1, 3)) - q(5, 6), GaussianRational::zero());
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(i * i, -GaussianRational::one());
        assert_eq!(i.inv().unwrap(), -i);
    }

    #[test]
    fn display_forms() {
        assert_eq!(q(3, 2).to_string(), "3/2");
        assert_eq!((q(3, 2) + q(1, 2) * GaussianRational::i()).to_string(), "3/2+1/2i");
        assert_eq!((q(3, 2) - q(1, 2) * GaussianRational::i()).to_string(), "3/2-1/2i");
        assert_eq!((-GaussianRational::i()).to_string(), "-1i");
        assert_eq!(GaussianRational::zero().to_string(), "0");
    }

    #[test]
    fn negative_powers() {
        assert_eq!(q(2, 1).pow(-3).unwrap(), q(1, 8));
        assert!(GaussianRational::zero().pow(-1).is_none());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_panics() {
        let big = GaussianRational::from_int(i128::MAX);
        let _ = big + big;
    }
}
