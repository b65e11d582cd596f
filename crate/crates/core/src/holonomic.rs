//! The order-4 P-recurrence and second-order ODE for the half-length
//! avoidance series `S(z) = sum s_n z^n`.
//!
//! ```text
//! -44n(n+1) s_n - 2(n+1)(10n-7) s_{n+1} + 3(23n^2+106n+115) s_{n+2}
//!     - 32(n+3)(n+4) s_{n+3} + 4(n+4)(n+5) s_{n+4} = 0
//!
//! 31z - 8 - 15z S - (2z-1)(44z^3+15z^2-48z+8) S'
//!     - z(11z^2+16z-4)(2z-1)^2 S'' = 0
//! ```

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::series::ZSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HolonomicError {
    /// `p4(n)` does not divide the recurrence's right-hand side at this `n`.
    NonIntegralStep { n: usize },
    /// Fewer than four initial terms were supplied.
    TooFewInitialTerms,
}

impl fmt::Display for HolonomicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HolonomicError::NonIntegralStep { n } => {
                write!(f, "recurrence step at n = {n} is not integral")
            }
            HolonomicError::TooFewInitialTerms => f.write_str("need four initial terms"),
        }
    }
}

/// Polynomial coefficients `p_0(n), ..., p_4(n)` of the recurrence.
#[derive(Clone, Copy, Debug, Default)]
pub struct PRecurrence;

impl PRecurrence {
    pub const ORDER: usize = 4;

    pub fn coefficients(&self, n: usize) -> [BigInt; 5] {
        let n = BigInt::from(n);
        let one = BigInt::from(1);
        [
            BigInt::from(-44) * &n * (&n + &one),
            BigInt::from(-2) * (&n + &one) * (BigInt::from(10) * &n - 7),
            BigInt::from(3) * (BigInt::from(23) * &n * &n + BigInt::from(106) * &n + 115),
            BigInt::from(-32) * (&n + 4) * (&n + 3),
            BigInt::from(4) * (&n + 5) * (&n + 4),
        ]
    }

    /// `sum_i p_i(n) s_{n+i}` for `window = s_n..s_{n+4}`.
    pub fn apply(&self, n: usize, window: &[BigInt]) -> BigInt {
        self.coefficients(n)
            .iter()
            .zip(window)
            .map(|(p, s)| p * s)
            .sum()
    }
}

/// Extends `initial = (s_0, .., s_3)` to `s_0..=s_last` with exact division.
pub fn extend(initial: &[BigInt], last: usize) -> Result<Vec<BigInt>, HolonomicError> {
    if initial.len() < PRecurrence::ORDER {
        return Err(HolonomicError::TooFewInitialTerms);
    }
    let rec = PRecurrence;
    let mut seq: Vec<BigInt> = initial[..PRecurrence::ORDER].to_vec();
    seq.truncate(last + 1);
    let mut n = 0;
    while seq.len() <= last {
        let p = rec.coefficients(n);
        let rhs: BigInt = -(0..4).map(|i| &p[i] * &seq[n + i]).sum::<BigInt>();
        let (q, r) = rhs.div_rem(&p[4]);
        if !r.is_zero() {
            return Err(HolonomicError::NonIntegralStep { n });
        }
        seq.push(q);
        n += 1;
    }
    Ok(seq)
}

/// Residual of the recurrence at every `n` with `s_{n+4}` available.
pub fn recurrence_residual(seq: &[BigInt]) -> Vec<BigInt> {
    let rec = PRecurrence;
    seq.windows(5)
        .enumerate()
        .map(|(n, w)| rec.apply(n, w))
        .collect()
}

/// First `n` where the recurrence fails, if any.
pub fn first_failure(seq: &[BigInt]) -> Option<usize> {
    recurrence_residual(seq).iter().position(|r| !r.is_zero())
}

/// Polynomial coefficients of the differential operator, lowest degree
/// first: `a0 + a1·S + b1·S' + b2·S'' = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolonomicOde {
    pub a0: Vec<i64>,
    pub a1: Vec<i64>,
    pub b1: Vec<i64>,
    pub b2: Vec<i64>,
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = alloc::vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl HolonomicOde {
    pub fn new() -> Self {
        let two_z_minus_one = [-1, 2];
        let b1 = poly_mul(&two_z_minus_one, &[8, -48, 15, 44]);
        let b2 = poly_mul(
            &poly_mul(&[0, 1], &[-4, 16, 11]),
            &poly_mul(&two_z_minus_one, &two_z_minus_one),
        );
        HolonomicOde {
            a0: alloc::vec![-8, 31],
            a1: alloc::vec![0, -15],
            b1: b1.into_iter().map(|c| -c).collect(),
            b2: b2.into_iter().map(|c| -c).collect(),
        }
    }

    /// The operator applied to `s`, known to `s.order() - 2`.
    pub fn residual(&self, s: &ZSeries<BigRational>) -> ZSeries<BigRational> {
        let n = s.order().saturating_sub(2);
        let poly = |p: &[i64]| ZSeries::<BigRational>::from_i64s(p, n);
        let d1 = s.derivative();
        let d2 = d1.derivative();
        poly(&self.a0)
            .add(&poly(&self.a1).mul(&s.truncate(n)))
            .add(&poly(&self.b1).mul(&d1.truncate(n)))
            .add(&poly(&self.b2).mul(&d2.truncate(n)))
    }
}

impl Default for HolonomicOde {
    fn default() -> Self {
        Self::new()
    }
}

/// [`HolonomicOde::residual`] for the fixed operator.
pub fn ode_residual(s: &ZSeries<BigRational>) -> ZSeries<BigRational> {
    HolonomicOde::new().residual(s)
}

/// Integer coefficients of an integral rational series; `None` if any
/// coefficient has a denominator.
pub fn integral_coefficients(s: &ZSeries<BigRational>) -> Option<Vec<BigInt>> {
    s.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

pub fn to_rational_series(seq: &[BigInt]) -> ZSeries<BigRational> {
    ZSeries::new(
        seq.iter().cloned().map(BigRational::from_integer).collect(),
        seq.len(),
    )
}

/// `s_0..s_3` of the avoidance series.
pub fn avoidance_initial_terms() -> [BigInt; 4] {
    [1, 1, 2, 6].map(BigInt::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn extends_known_terms() {
        let s = extend(&avoidance_initial_terms(), 8).unwrap();
        assert_eq!(s, ints(&[1, 1, 2, 6, 20, 71, 262, 994, 3852]));
        let s = extend(&avoidance_initial_terms(), 4).unwrap();
        assert_eq!(s[4], BigInt::from(20));
    }

    #[test]
    fn perturbed_initial_terms_break_integrality() {
        let err = extend(&ints(&[1, 1, 2, 7]), 20).unwrap_err();
        assert!(matches!(err, HolonomicError::NonIntegralStep { n } if n <= 20));
    }

    #[test]
    fn residuals() {
        let s = extend(&avoidance_initial_terms(), 40).unwrap();
        assert!(recurrence_residual(&s).iter().all(Zero::is_zero));
        assert_eq!(first_failure(&s), None);

        let catalan = ints(&[1, 1, 2, 5, 14, 42, 132, 429, 1430]);
        assert!(recurrence_residual(&catalan).iter().any(|r| !r.is_zero()));

        let zeros = vec![BigInt::zero(); 10];
        assert!(recurrence_residual(&zeros).iter().all(Zero::is_zero));
    }

    #[test]
    fn ode_on_constants() {
        let one = ZSeries::<BigRational>::one(6);
        assert_eq!(ode_residual(&one), ZSeries::from_i64s(&[-8, 16], 4));
        let zero = ZSeries::<BigRational>::zero(6);
        assert_eq!(ode_residual(&zero), ZSeries::from_i64s(&[-8, 31], 4));
    }

    #[test]
    fn ode_on_avoidance_series() {
        let s = extend(&avoidance_initial_terms(), 29).unwrap();
        let r = ode_residual(&to_rational_series(&s));
        assert_eq!(r.order(), 28);
        assert!(r.is_zero());
    }

    #[test]
    fn leading_coefficient_never_vanishes() {
        let rec = PRecurrence;
        for n in 0..1000 {
            assert!(!rec.coefficients(n)[4].is_zero());
        }
    }
}
