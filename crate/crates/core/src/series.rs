//! Truncated formal power series in `z` with exact coefficients.
//!
//! A [`ZSeries`] of order `N` stores exactly `N` coefficients and stands for
//! a series known modulo `z^N`. Binary operations return the smaller of the
//! two input orders, so precision can only be lost visibly. Division by a
//! series of valuation `v` strips `z^v` from both operands first and the
//! result loses `v` orders; differentiation loses one order.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// The divisor has no invertible leading coefficient after stripping
    /// common powers of `z`, or the dividend vanishes to lower order.
    DivisionByNonUnit,
    /// The proposed constant term does not satisfy the equation at `z = 0`.
    NotARoot,
    /// The equation's derivative is not invertible at the root.
    SingularRoot,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::DivisionByNonUnit => f.write_str("division by a non-unit series"),
            SeriesError::NotARoot => f.write_str("initial value is not a root at z = 0"),
            SeriesError::SingularRoot => f.write_str("root is not simple at z = 0"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> ZSeries<R> {
    /// Builds a series of the given order, truncating or zero-padding
    /// `coeffs` as needed.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order, R::zero());
        ZSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_i64(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    /// `c * z^k`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `z^k`. Panics when `k` is at or beyond the order.
    pub fn coeff(&self, k: usize) -> &R {
        assert!(
            k < self.order(),
            "coefficient z^{k} not known at order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    /// True when every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    /// Index of the first nonzero coefficient, `None` if all known
    /// coefficients vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise order by truncation");
        ZSeries {
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    /// Pads with zeros up to `order`. Only sound when the caller knows the
    /// padded coefficients really vanish (polynomials, Newton lifting).
    pub fn extend_to(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order.max(self.order()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        ZSeries {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].add(&other.coeffs[i]))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        ZSeries {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].sub(&other.coeffs[i]))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        ZSeries {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        ZSeries {
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![R::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j].add_assign(&a.mul(b));
                }
            }
        }
        ZSeries { coeffs }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
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

    /// Multiply by `z^k`; the result is known to `k` more orders.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZSeries { coeffs }
    }

    /// Divide by `z^k`, requiring the first `k` coefficients to vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::DivisionByNonUnit);
        }
        Ok(ZSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiplicative inverse; needs an invertible constant term.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let c0_inv = self.coeffs[0]
            .unit_inverse()
            .ok_or(SeriesError::DivisionByNonUnit)?;
        let mut inv = Vec::with_capacity(n);
        inv.push(c0_inv.clone());
        for k in 1..n {
            let mut acc = R::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc.add_assign(&a.mul(&inv[k - j]));
                }
            }
            inv.push(acc.mul(&c0_inv).neg());
        }
        Ok(ZSeries { coeffs: inv })
    }

    /// `self / divisor`.
    ///
    /// If the divisor has an invertible constant term this is plain
    /// multiplication by its inverse. Otherwise the common factor `z^v`
    /// (with `v` the divisor's valuation) is stripped from both sides first,
    /// and the result is known to `min(orders) - v`.
    pub fn div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let v = divisor.valuation().ok_or(SeriesError::DivisionByNonUnit)?;
        let num = self.shift_down(v)?;
        let den = divisor.shift_down(v)?;
        let n = num.order().min(den.order());
        let inv = den.truncate(n).inverse()?;
        Ok(num.truncate(n).mul(&inv))
    }

    /// Formal derivative; the result is known to one order less.
    pub fn derivative(&self) -> Self {
        ZSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul(&R::from_i64(k as i64)))
                .collect(),
        }
    }

    /// Substitute `z -> z^2`. Known to order `2N - 1`.
    pub fn expand_even(&self) -> Self {
        let n = self.order();
        let mut coeffs = vec![R::zero(); (2 * n).saturating_sub(1)];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        ZSeries { coeffs }
    }

    /// Substitute `z^2 -> z` on an even series. `None` if an odd coefficient
    /// is nonzero. Known to order `ceil(N / 2)`.
    pub fn compress_even(&self) -> Option<Self> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        Some(ZSeries {
            coeffs: self.coeffs.iter().step_by(2).cloned().collect(),
        })
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> ZSeries<S> {
        ZSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

/// Polynomial equation `c_0(z) + c_1(z) S + ... + c_d(z) S^d = 0`, each
/// `c_i` a polynomial in `z` given by its dense coefficient list.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgEquation<R> {
    coeffs: Vec<Vec<R>>,
}

impl<R: Ring> AlgEquation<R> {
    /// `coeffs[i]` is the coefficient of `S^i`. Trailing zero coefficients
    /// are dropped; panics if nothing is left.
    pub fn new(mut coeffs: Vec<Vec<R>>) -> Self {
        for c in &mut coeffs {
            while c.last().is_some_and(Ring::is_zero) {
                c.pop();
            }
        }
        while coeffs.last().is_some_and(Vec::is_empty) {
            coeffs.pop();
        }
        assert!(!coeffs.is_empty(), "equation has no nonzero coefficient");
        AlgEquation { coeffs }
    }

    pub fn from_i64s(coeffs: &[&[i64]]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| c.iter().map(|&x| R::from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Vec<R>] {
        &self.coeffs
    }

    /// `dP/dS`.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return AlgEquation {
                coeffs: vec![Vec::new()],
            };
        }
        AlgEquation {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| {
                    let i = R::from_i64(i as i64);
                    c.iter().map(|x| x.mul(&i)).collect()
                })
                .collect(),
        }
    }

    /// Value at `z = 0`, `S = s`.
    pub fn eval_at_origin(&self, s: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| {
            let c0 = c.first().cloned().unwrap_or_else(R::zero);
            acc.mul(s).add(&c0)
        })
    }

    /// `P(z, S)` truncated to the order of `s` (Horner in `S`).
    pub fn residual(&self, s: &ZSeries<R>) -> ZSeries<R> {
        let n = s.order();
        self.coeffs.iter().rev().fold(ZSeries::zero(n), |acc, c| {
            acc.mul(s).add(&ZSeries::new(c.clone(), n))
        })
    }
}

/// How far Newton lifting advances per iteration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NewtonSchedule {
    /// Precision doubles each step.
    Doubling,
    /// Precision grows by one coefficient per step.
    Incremental,
}

fn check_simple_root<R: Ring>(eq: &AlgEquation<R>, s0: &R) -> Result<R, SeriesError> {
    if !eq.eval_at_origin(s0).is_zero() {
        return Err(SeriesError::NotARoot);
    }
    eq.derivative()
        .eval_at_origin(s0)
        .unit_inverse()
        .ok_or(SeriesError::SingularRoot)
}

/// The unique series solution of `eq` with constant term `s0`, to `order`
/// coefficients, by Newton iteration with doubling precision.
pub fn solve_algebraic<R: Ring>(
    eq: &AlgEquation<R>,
    s0: &R,
    order: usize,
) -> Result<ZSeries<R>, SeriesError> {
    solve_algebraic_with(eq, s0, order, NewtonSchedule::Doubling)
}

pub fn solve_algebraic_with<R: Ring>(
    eq: &AlgEquation<R>,
    s0: &R,
    order: usize,
    schedule: NewtonSchedule,
) -> Result<ZSeries<R>, SeriesError> {
    check_simple_root(eq, s0)?;
    let deq = eq.derivative();
    let mut s = ZSeries::constant(s0.clone(), order.min(1));
    let mut prec = s.order();
    while prec < order {
        prec = match schedule {
            NewtonSchedule::Doubling => (2 * prec).min(order),
            NewtonSchedule::Incremental => prec + 1,
        };
        s = s.extend_to(prec);
        let r = eq.residual(&s);
        let d = deq.residual(&s);
        s = s.sub(&r.div(&d)?);
    }
    Ok(s)
}

/// Same contract as [`solve_algebraic`], by undetermined coefficients:
/// each new coefficient is read off the residual of the previous prefix.
/// Cubic cost; kept as an independent cross-check of the Newton solver.
pub fn solve_by_coefficients<R: Ring>(
    eq: &AlgEquation<R>,
    s0: &R,
    order: usize,
) -> Result<ZSeries<R>, SeriesError> {
    let d0_inv = check_simple_root(eq, s0)?;
    let mut coeffs = vec![s0.clone()];
    coeffs.truncate(order);
    for n in 1..order {
        let trial = ZSeries::new(coeffs.clone(), n + 1);
        let r = eq.residual(&trial);
        coeffs.push(r.coeff(n).mul(&d0_inv).neg());
    }
    Ok(ZSeries::new(coeffs, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational;
    use crate::tpoly::TPoly;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(v: &[i64], n: usize) -> ZSeries<Q> {
        ZSeries::from_i64s(v, n)
    }

    #[test]
    fn product_of_conjugates() {
        assert_eq!(q(&[1, 1], 3).mul(&q(&[1, -1], 3)), q(&[1, 0, -1], 3));
    }

    #[test]
    fn square_by_hand_convolution() {
        let a = q(&[1, 0, 1, 0, 2], 5);
        assert_eq!(a.pow(2), q(&[1, 0, 2, 0, 5], 5));
        assert_eq!(q(&[1, 1], 6).pow(0), ZSeries::one(6));
    }

    #[test]
    fn order_is_min_of_inputs() {
        assert_eq!(q(&[1], 3).add(&q(&[1], 5)).order(), 3);
        assert_eq!(q(&[1], 7).mul(&q(&[1], 4)).order(), 4);
    }

    #[test]
    fn geometric_series() {
        let r = q(&[1], 4).div(&q(&[1, -1], 4)).unwrap();
        assert_eq!(r, q(&[1, 1, 1, 1], 4));
    }

    #[test]
    fn division_strips_common_valuation() {
        let r = q(&[0, 0, 1, 0, 1], 6).div(&q(&[0, 0, 1], 6)).unwrap();
        assert_eq!(r, q(&[1, 0, 1], 4));
    }

    #[test]
    fn division_by_non_unit_is_rejected() {
        assert_eq!(
            q(&[1], 4).div(&q(&[0, 1], 4)),
            Err(SeriesError::DivisionByNonUnit)
        );
        assert_eq!(
            q(&[1], 4).div(&ZSeries::zero(4)),
            Err(SeriesError::DivisionByNonUnit)
        );
        let t: ZSeries<TPoly<Q>> = ZSeries::constant(TPoly::t(), 3);
        assert_eq!(ZSeries::one(3).div(&t), Err(SeriesError::DivisionByNonUnit));
    }

    #[test]
    fn derivative_drops_one_order() {
        let d = q(&[5, 1, 1, 1], 4).derivative();
        assert_eq!(d, q(&[1, 2, 3], 3));
    }

    #[test]
    fn even_compression_round_trip() {
        let a = q(&[1, 1, 2, 6], 4);
        let e = a.expand_even();
        assert_eq!(e, q(&[1, 0, 1, 0, 2, 0, 6], 7));
        assert_eq!(e.compress_even().unwrap(), a);
        assert!(q(&[1, 1], 2).compress_even().is_none());
    }

    fn catalan_eq() -> AlgEquation<Q> {
        // S - 1 - z S^2
        AlgEquation::from_i64s(&[&[-1], &[1], &[0, -1]])
    }

    #[test]
    fn catalan_against_direct_recurrence() {
        let n = 12;
        let mut cat = vec![BigInt::from(1)];
        for k in 1..n {
            let next: BigInt = (0..k).map(|i| &cat[i] * &cat[k - 1 - i]).sum();
            cat.push(next);
        }
        let expected = ZSeries::new(cat.into_iter().map(BigRational::from_integer).collect(), n);
        let s = solve_algebraic(&catalan_eq(), &rational(1), n).unwrap();
        assert_eq!(s, expected);
        assert_eq!(s.coeffs()[..5], q(&[1, 1, 2, 5, 14], 5).coeffs()[..]);
    }

    #[test]
    fn solver_rejects_bad_starting_values() {
        assert_eq!(
            solve_algebraic(&catalan_eq(), &rational(2), 4),
            Err(SeriesError::NotARoot)
        );
        // (S - 1)^2 = S^2 - 2S + 1
        let double: AlgEquation<Q> = AlgEquation::from_i64s(&[&[1, -1], &[-2], &[1]]);
        assert_eq!(
            solve_algebraic(&double, &rational(1), 4),
            Err(SeriesError::SingularRoot)
        );
    }

    #[test]
    fn residual_of_constant_guess() {
        let eq: AlgEquation<Q> =
            AlgEquation::from_i64s(&[&[-1, 1, 1], &[1, 0, -1], &[0, -2, 1], &[0, 0, 1]]);
        let r = eq.residual(&ZSeries::one(3));
        assert_eq!(r, q(&[0, -1, 2], 3));
    }

    #[test]
    fn schedules_and_solvers_agree() {
        let eq: AlgEquation<Q> =
            AlgEquation::from_i64s(&[&[-1, 1, 1], &[1, 0, -1], &[0, -2, 1], &[0, 0, 1]]);
        let a = solve_algebraic_with(&eq, &rational(1), 25, NewtonSchedule::Doubling).unwrap();
        let b = solve_algebraic_with(&eq, &rational(1), 25, NewtonSchedule::Incremental).unwrap();
        let c = solve_by_coefficients(&eq, &rational(1), 25).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert!(eq.residual(&a).is_zero());
    }

    #[test]
    fn zero_order_solution_is_empty() {
        let s = solve_algebraic(&catalan_eq(), &rational(1), 0).unwrap();
        assert_eq!(s.order(), 0);
    }
}
