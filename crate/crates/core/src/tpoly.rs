//! Polynomials in the occurrence marker `t`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::ring::Ring;

/// Dense polynomial in `t`; the coefficient of `t^j` sits at index `j`.
///
/// Always stored without trailing zero coefficients, so the zero polynomial
/// is the empty vector and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> TPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The marker variable itself.
    pub fn t() -> Self {
        TPoly {
            coeffs: vec![C::zero(), C::one()],
        }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `t^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> C {
        self.coeffs.get(j).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Constant term, i.e. the value at `t = 0`.
    pub fn at_zero(&self) -> C {
        self.coeff(0)
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn at_one(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |acc, c| acc.add(c))
    }

    pub fn eval(&self, t: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.mul(t).add(c))
    }

    /// Multiply by `t^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if Ring::is_zero(self) {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        TPoly { coeffs }
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TPoly<D> {
        TPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl TPoly<BigInt> {
    pub fn to_rational(&self) -> TPoly<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl<C: Ring> Ring for TPoly<C> {
    fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Self::constant(C::one())
    }

    fn from_i64(value: i64) -> Self {
        Self::constant(C::from_i64(value))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (dst, src) in coeffs.iter_mut().zip(&short.coeffs) {
            dst.add_assign(src);
        }
        Self::new(coeffs)
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j].add_assign(&a.mul(b));
            }
        }
        Self::new(coeffs)
    }

    fn neg(&self) -> Self {
        TPoly {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.unit_inverse().map(Self::constant),
            _ => None,
        }
    }

    fn add_assign(&mut self, other: &Self) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), C::zero());
        }
        for (dst, src) in self.coeffs.iter_mut().zip(&other.coeffs) {
            dst.add_assign(src);
        }
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
    }
}

/// Renders as `71 + 64t + 2t^2`.
impl<C: Ring + fmt::Display> fmt::Display for TPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => f.write_str("t")?,
                1 => write!(f, "{c}t")?,
                _ if c.is_one() => write!(f, "t^{j}")?,
                _ => write!(f, "{c}t^{j}")?,
            }
        }
        Ok(())
    }
}
