//! Exact coefficient rings used by the series engine and the path counter.

use core::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic.
///
/// `unit_inverse` returns the multiplicative inverse when the element is a
/// unit and `None` otherwise; series division and Newton iteration only ever
/// invert constant terms through it.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(value: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn unit_inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_assign(&mut self, other: &Self) {
        *self = Ring::add(self, other);
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(value: i64) -> Self {
        BigInt::from(value)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        if One::is_one(&self.abs()) {
            Some(self.clone())
        } else {
            None
        }
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
}

/// Shorthand for an integral rational.
pub fn rational(value: i64) -> BigRational {
    BigRational::from_i64(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_units() {
        assert_eq!(BigInt::from(-1).unit_inverse(), Some(BigInt::from(-1)));
        assert_eq!(BigInt::from(2).unit_inverse(), None);
        assert_eq!(<BigInt as Ring>::zero().unit_inverse(), None);
    }

    #[test]
    fn rational_inverse() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(half.unit_inverse(), Some(rational(2)));
        assert_eq!(rational(0).unit_inverse(), None);
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(Ring::pow(&BigInt::from(3), 5), BigInt::from(243));
        assert_eq!(Ring::pow(&BigInt::from(7), 0), BigInt::from(1));
    }
}
