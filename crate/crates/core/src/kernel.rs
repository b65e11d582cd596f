//! Kernel-method generating functions.
//!
//! The kernel `-u^2 + z u^3 + 2zu - u^2 z^2 - u z^3 - z^4 (+ t z^4)` has a
//! single root `u1` that is a Laurent series starting at `1/z`. Everything
//! here works with `ũ = z·u1` instead, which is an ordinary power series
//! with `ũ(0) = 1`. Substituting `u = ũ/z` and multiplying by `z^2` turns
//! the kernel into
//!
//! ```text
//! ũ^3 - (1 + z^2) ũ^2 + (2z^2 - z^4) ũ - z^6 + t z^6 = 0,
//! ```
//!
//! whose derivative at `(z, ũ) = (0, 1)` is `1`, so Newton iteration picks
//! out the branch directly.
//!
//! All series carry coefficients in `Q[t]`. The univariate (pattern
//! forbidden) case is the same computation with the marker set to `0`.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::ring::Ring;
use crate::series::{solve_algebraic, AlgEquation, SeriesError, ZSeries};
use crate::tpoly::TPoly;

pub type Coeff = TPoly<BigRational>;
pub type Series = ZSeries<Coeff>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Up-down-red forbidden.
    Univariate,
    /// Up-down-red counted by `t`.
    Bivariate,
}

impl Mode {
    /// Value of the marker: `0` or `t`.
    pub fn marker(self) -> Coeff {
        match self {
            Mode::Univariate => Coeff::zero(),
            Mode::Bivariate => Coeff::t(),
        }
    }
}

fn c(v: i64) -> Coeff {
    Coeff::from_i64(v)
}

/// The kernel in the normalized unknown `ũ`, coefficients listed by power
/// of `ũ`.
pub fn normalized_kernel(mode: Mode) -> AlgEquation<Coeff> {
    let mut constant = vec![Coeff::zero(); 7];
    constant[6] = mode.marker().sub(&c(1));
    AlgEquation::new(vec![
        constant,
        vec![c(0), c(0), c(2), c(0), c(-1)],
        vec![c(-1), c(0), c(-1)],
        vec![c(1)],
    ])
}

/// The original kernel in `u`, coefficients listed by power of `u`.
pub fn kernel_polynomial(mode: Mode) -> AlgEquation<Coeff> {
    let mut constant = vec![Coeff::zero(); 5];
    constant[4] = mode.marker().sub(&c(1));
    AlgEquation::new(vec![
        constant,
        vec![c(0), c(2), c(0), c(-1)],
        vec![c(-1), c(0), c(-1)],
        vec![c(0), c(1)],
    ])
}

/// `z^2 · K(ũ/z, z)`, evaluated straight from [`kernel_polynomial`]. Zero
/// exactly when `ũ/z` is a root of the original kernel.
pub fn original_kernel_residual(mode: Mode, utilde: &Series) -> Series {
    // u^i = ũ^i z^{-i}; the term c_i(z) u^i contributes c_i(z) ũ^i z^{2-i}.
    // Every c_3 has a factor z, so z^{-1} is absorbed exactly.
    let n = utilde.order();
    let kernel = kernel_polynomial(mode);
    let mut acc = Series::zero(n);
    let mut power = Series::one(n);
    for (i, ci) in kernel.coeffs().iter().enumerate() {
        let term = Series::new(ci.clone(), n + 2).mul(&power.extend_to(n + 2));
        let term = if i <= 2 {
            term.shift_up(2 - i).truncate(n)
        } else {
            term.shift_down(i - 2)
                .expect("kernel coefficient lacks the needed power of z")
                .truncate(n)
        };
        acc = acc.add(&term);
        power = power.mul(utilde);
    }
    acc
}

/// `ũ = z·u1` together with the mode it was computed in.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelRoot {
    pub utilde: Series,
    pub mode: Mode,
}

impl KernelRoot {
    pub fn order(&self) -> usize {
        self.utilde.order()
    }
}

pub fn kernel_root(order: usize, mode: Mode) -> Result<KernelRoot, SeriesError> {
    let utilde = solve_algebraic(&normalized_kernel(mode), &Coeff::one(), order)?;
    Ok(KernelRoot { utilde, mode })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryConstants {
    pub g0: Series,
    pub h0: Series,
    pub k0: Series,
}

impl BoundaryConstants {
    /// `1 + g0 + h0 + k0`, the weighted count of paths back on the axis.
    pub fn total(&self) -> Series {
        let n = self.g0.order();
        Series::one(n).add(&self.g0).add(&self.h0).add(&self.k0)
    }
}

fn z2(order: usize) -> Series {
    Series::monomial(Coeff::one(), 2, order)
}

/// Level-zero values of the layer generating functions from a known root.
///
/// With `ũ = z·u1`:
///
/// ```text
/// g0 = z^2 / ũ
/// h0 = (1 - z^2 - ũ) / ũ
/// k0 = (1 - z^2 - ũ)(t ũ - t z^2 + z^2) / (ũ (ũ + t z^2 - z^2))
/// ```
///
/// At `t = 0` the last line is `z^2 (1 - z^2 - ũ) / (ũ (ũ - z^2))`.
pub fn boundary_constants_from(root: &KernelRoot) -> Result<BoundaryConstants, SeriesError> {
    let n = root.order();
    let u = &root.utilde;
    let t = root.mode.marker();
    let z2 = z2(n);
    let one = Series::one(n);
    let reduced = one.sub(&z2).sub(u);

    let g0 = z2.div(u)?;
    let h0 = reduced.div(u)?;
    let num = reduced.mul(&u.scale(&t).sub(&z2.scale(&t)).add(&z2));
    let den = u.mul(&u.add(&z2.scale(&t)).sub(&z2));
    let k0 = num.div(&den)?;
    Ok(BoundaryConstants { g0, h0, k0 })
}

pub fn boundary_constants(order: usize, mode: Mode) -> Result<BoundaryConstants, SeriesError> {
    boundary_constants_from(&kernel_root(order, mode)?)
}

/// Generating function of paths ending at level `k`,
/// `(1 - z u1) / (z^2 u1^k) = (1 - ũ) z^(k-2) / ũ^k`, to `order` terms.
pub fn level_gf(k: usize, order: usize, mode: Mode) -> Result<Series, SeriesError> {
    let root = kernel_root(order + k + 2, mode)?;
    level_gf_from(&root, k, order)
}

/// As [`level_gf`] with a precomputed root of order at least `order + 2`.
pub fn level_gf_from(root: &KernelRoot, k: usize, order: usize) -> Result<Series, SeriesError> {
    assert!(
        root.order() >= order + 2,
        "root of order {} too short for level series of order {order}",
        root.order()
    );
    let u = root.utilde.truncate(order + 2);
    let over_z2 = Series::one(order + 2).sub(&u).shift_down(2)?;
    let quotient = over_z2.div(&u.truncate(order).pow(k as u32))?;
    Ok(quotient.shift_up(k).truncate(order))
}

/// `(1 - ũ) / z^2`, the level-zero series.
pub fn axis_series(root: &KernelRoot) -> Result<Series, SeriesError> {
    let n = root.order();
    Series::one(n).sub(&root.utilde).shift_down(2)
}

/// Checks `1 + g0 + h0 + k0 = (1 - ũ)/z^2` coefficientwise.
pub fn check_identity_total(order: usize, mode: Mode) -> bool {
    match kernel_root(order + 2, mode) {
        Ok(root) => check_identity_total_for(&root),
        Err(_) => false,
    }
}

/// [`check_identity_total`] on a supplied root (possibly perturbed).
pub fn check_identity_total_for(root: &KernelRoot) -> bool {
    let (Ok(bc), Ok(axis)) = (boundary_constants_from(root), axis_series(root)) else {
        return false;
    };
    let lhs = bc.total();
    let n = lhs.order().min(axis.order());
    lhs.truncate(n) == axis.truncate(n)
}

/// Equation for `U = (1 - ũ)/z^2` in `Z = z^2`:
/// `2ZU^2 - U - Z^2U^3 + 1 - Z^2U^2 + Z^2U - Z - Z^2 = 0`.
pub fn transformed_cubic() -> AlgEquation<BigRational> {
    AlgEquation::from_i64s(&[&[1, -1, -1], &[-1, 0, 1], &[0, 2, -1], &[0, 0, -1]])
}

/// Half-length avoidance cubic, `z^2S^3 - z(2-z)S^2 + (1-z^2)S - 1 + z + z^2`.
pub fn avoidance_cubic() -> AlgEquation<BigRational> {
    AlgEquation::from_i64s(&[&[-1, 1, 1], &[1, 0, -1], &[0, -2, 1], &[0, 0, 1]])
}

/// Half-length counting cubic, the avoidance cubic with an extra `-t z^2`.
pub fn counting_cubic() -> AlgEquation<Coeff> {
    let mut eq: Vec<Vec<Coeff>> = avoidance_cubic()
        .coeffs()
        .iter()
        .map(|ci| ci.iter().cloned().map(Coeff::constant).collect())
        .collect();
    eq[0][2] = eq[0][2].sub(&Coeff::t());
    AlgEquation::new(eq)
}

/// Projects a series at `t = 0`.
pub fn at_t_zero(s: &Series) -> ZSeries<BigRational> {
    s.map(|p| p.at_zero())
}
