//! Square-root singularity asymptotics of the half-length avoidance series.
//!
//! The dominant singularity sits where the cubic and its `S`-derivative
//! vanish together. That happens at `S = (z+1)/(3z)`, giving
//! `z0 = (2/11)(3√3 - 4)` and `S0 = 1 + √3/2`, and
//!
//! ```text
//! s_n ~ √(2 + 8√3/9) / (2√π) · (2 + 3√3/2)^n · n^(-3/2).
//! ```
//!
//! Coefficients grow past `f64` range quickly, so comparisons happen on
//! natural logarithms.

use alloc::vec::Vec;
use core::f64::consts::{LN_2, PI};
use core::fmt;

use libm::{exp, fabs, log, sqrt};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoticConstants {
    pub z0: f64,
    pub s0: f64,
    pub amplitude: f64,
    pub growth: f64,
    /// `z0` recovered by bisection on the double-root condition.
    pub z0_numeric: f64,
}

/// Residual of the cubic along the curve where its `S`-derivative vanishes.
fn discriminant_curve(z: f64) -> f64 {
    let s = (z + 1.0) / (3.0 * z);
    z * z * s * s * s - z * (2.0 - z) * s * s + (1.0 - z * z) * s - 1.0 + z + z * z
}

/// Root of `f` in `[lo, hi]`, assuming a sign change.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `z0` as the first zero of the double-root condition in `[0.1, 0.3]`.
pub fn z0_by_bisection() -> f64 {
    bisect(discriminant_curve, 0.1, 0.3)
}

pub fn constants() -> AsymptoticConstants {
    let z0 = 2.0 / 11.0 * (3.0 * SQRT3 - 4.0);
    let z0_numeric = z0_by_bisection();
    assert!(
        fabs(z0 - z0_numeric) < 1e-12,
        "closed-form z0 {z0} disagrees with bisection {z0_numeric}"
    );
    AsymptoticConstants {
        z0,
        s0: 1.0 + SQRT3 / 2.0,
        amplitude: sqrt(2.0 + 8.0 * SQRT3 / 9.0) / (2.0 * sqrt(PI)),
        growth: 2.0 + 1.5 * SQRT3,
        z0_numeric,
    }
}

impl AsymptoticConstants {
    /// `ln` of the leading-order estimate of `s_n`.
    pub fn ln_estimate(&self, n: u64) -> f64 {
        assert!(n >= 1, "estimate needs n >= 1");
        let n = n as f64;
        log(self.amplitude) + n * log(self.growth) - 1.5 * log(n)
    }

    /// Leading-order estimate; overflows to infinity for large `n`, use
    /// [`Self::ln_estimate`] there.
    pub fn estimate(&self, n: u64) -> f64 {
        exp(self.ln_estimate(n))
    }
}

pub fn estimate(n: u64) -> f64 {
    constants().estimate(n)
}

/// Natural logarithm of a positive big integer from its top 64 bits.
pub fn ln_bigint(x: &BigInt) -> f64 {
    assert!(x.is_positive(), "logarithm of a non-positive integer");
    let bits = x.bits();
    if bits <= 64 {
        return log(x.to_u64().unwrap() as f64);
    }
    let shift = bits - 64;
    let top = (x.magnitude() >> shift).to_u64().unwrap();
    log(top as f64) + shift as f64 * LN_2
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportRow {
    pub n: usize,
    pub coefficient: BigInt,
    pub ln_estimate: f64,
    /// `s_n / estimate(n)`.
    pub ratio: f64,
}

impl ReportRow {
    pub fn deviation(&self) -> f64 {
        fabs(self.ratio - 1.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MissingCoefficient {
    pub n: usize,
}

impl fmt::Display for MissingCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coefficient s_{} was not computed", self.n)
    }
}

/// One row per requested `n`, in the order given.
pub fn convergence_report(
    n_values: &[usize],
    coefficients: &[BigInt],
) -> Result<Vec<ReportRow>, MissingCoefficient> {
    let c = constants();
    n_values
        .iter()
        .map(|&n| {
            let s = coefficients.get(n).ok_or(MissingCoefficient { n })?;
            let ln_est = c.ln_estimate(n.max(1) as u64);
            let ratio = if s.is_zero() {
                0.0
            } else {
                exp(ln_bigint(s) - ln_est)
            };
            Ok(ReportRow {
                n,
                coefficient: s.clone(),
                ln_estimate: ln_est,
                ratio,
            })
        })
        .collect()
}

/// True when `|ratio - 1|` strictly decreases along the rows.
pub fn deviation_strictly_shrinks(rows: &[ReportRow]) -> bool {
    rows.windows(2).all(|w| w[1].deviation() < w[0].deviation())
}
