//! Cross-check suite behind `skewdyck verify`.
//!
//! Each check is independent and runs on its own thread; results are
//! reported in declaration order regardless of completion order.

use std::thread;

use num_bigint::BigInt;
use num_rational::BigRational;

use skewdyck_core::dp::{CountMode, DpTable};
use skewdyck_core::holonomic::{self, avoidance_initial_terms, extend, ode_residual};
use skewdyck_core::kernel::{self, Mode};
use skewdyck_core::path::enumerate;
use skewdyck_core::series::solve_algebraic;
use skewdyck_core::{Ring, TPoly, ZSeries};

use crate::golden;

pub type Outcome = Result<String, String>;

/// Brute force gets slow past this length.
pub const ORACLE_CAP: usize = 20;

#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub run: fn(usize) -> Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub outcome: Outcome,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }

    pub fn line(&self) -> String {
        match &self.outcome {
            Ok(detail) => format!("PASS {}: {detail}", self.name),
            Err(why) => format!("FAIL {}: {why}", self.name),
        }
    }
}

pub fn standard_checks() -> Vec<Check> {
    vec![
        Check {
            name: "dp vs brute force",
            run: dp_vs_oracle,
        },
        Check {
            name: "level gf vs dp",
            run: level_gf_vs_dp,
        },
        Check {
            name: "kernel residual",
            run: kernel_residual,
        },
        Check {
            name: "boundary identity",
            run: boundary_identity,
        },
        Check {
            name: "level 0 vs cubics",
            run: level0_vs_cubics,
        },
        Check {
            name: "recurrence vs cubic",
            run: recurrence_vs_cubic,
        },
        Check {
            name: "ode residual",
            run: ode,
        },
        Check {
            name: "transformed cubic",
            run: transformed,
        },
        Check {
            name: "golden avoidance sequence",
            run: golden_avoidance,
        },
        Check {
            name: "golden counting triangle",
            run: golden_triangle,
        },
        Check {
            name: "golden level 0",
            run: golden_level0,
        },
        Check {
            name: "golden kernel root",
            run: golden_root,
        },
        Check {
            name: "asymptotic constants",
            run: asymptotic_constants,
        },
    ]
}

pub fn run_checks(checks: &[Check], order: usize) -> Vec<CheckResult> {
    thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|c| (c.name, scope.spawn(move || (c.run)(order))))
            .collect();
        handles
            .into_iter()
            .map(|(name, h)| CheckResult {
                name,
                outcome: h.join().unwrap_or_else(|_| Err("panicked".into())),
            })
            .collect()
    })
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn integers(s: &ZSeries<BigRational>) -> Result<Vec<BigInt>, String> {
    holonomic::integral_coefficients(s).ok_or_else(|| "non-integral coefficient".into())
}

fn int_rows(s: &ZSeries<TPoly<BigRational>>) -> Result<Vec<Vec<BigInt>>, String> {
    s.coeffs()
        .iter()
        .map(|p| {
            let mut row = p
                .coeffs()
                .iter()
                .map(|c| c.is_integer().then(|| c.to_integer()))
                .collect::<Option<Vec<_>>>()
                .ok_or("non-integral coefficient")?;
            if row.is_empty() {
                row.push(BigInt::from(0));
            }
            Ok(row)
        })
        .collect()
}

fn dp_vs_oracle(order: usize) -> Outcome {
    let max = order.min(ORACLE_CAP);
    let table = DpTable::build(max);
    for m in 0..=max {
        let mut hist: Vec<Vec<u64>> = vec![Vec::new(); m + 1];
        for p in enumerate(m, None, false).map_err(err)? {
            let h = &mut hist[p.end_level()];
            if h.len() <= p.udr_count() {
                h.resize(p.udr_count() + 1, 0);
            }
            h[p.udr_count()] += 1;
        }
        for (k, h) in hist.iter().enumerate() {
            let want = TPoly::new(h.iter().map(|&c| BigInt::from(c)).collect());
            let got = table.count(m, k, CountMode::Track).into_weight();
            if got != want {
                return Err(format!("m={m} k={k}: {got} vs {want}"));
            }
        }
    }
    Ok(format!("lengths 0..={max}"))
}

fn level_gf_vs_dp(order: usize) -> Outcome {
    const LEVELS: usize = 6;
    let table = DpTable::build(order);
    for mode in [Mode::Univariate, Mode::Bivariate] {
        let root = kernel::kernel_root(order + LEVELS + 3, mode).map_err(err)?;
        for k in 0..=LEVELS {
            let gf = kernel::level_gf_from(&root, k, order + 1).map_err(err)?;
            for m in 0..=order {
                let w = table
                    .count(m, k, CountMode::Track)
                    .into_weight()
                    .to_rational();
                let want = match mode {
                    Mode::Univariate => TPoly::constant(w.at_zero()),
                    Mode::Bivariate => w,
                };
                if gf.coeff(m) != &want {
                    return Err(format!("{mode:?} k={k} m={m}"));
                }
            }
        }
    }
    Ok(format!("k <= {LEVELS}, m <= {order}, both modes"))
}

fn kernel_residual(order: usize) -> Outcome {
    let n = 2 * order;
    for mode in [Mode::Univariate, Mode::Bivariate] {
        let root = kernel::kernel_root(n, mode).map_err(err)?;
        let r = kernel::original_kernel_residual(mode, &root.utilde);
        if !r.is_zero() {
            return Err(format!("{mode:?}: nonzero below z^{}", r.order()));
        }
    }
    Ok(format!("0 mod z^{n}"))
}

fn boundary_identity(order: usize) -> Outcome {
    let n = 2 * order;
    for mode in [Mode::Univariate, Mode::Bivariate] {
        if !kernel::check_identity_total(n, mode) {
            return Err(format!("{mode:?}"));
        }
    }
    Ok(format!("order {n}, both modes"))
}

fn level0_vs_cubics(order: usize) -> Outcome {
    let forbid = solve_algebraic(&kernel::avoidance_cubic(), &BigRational::one(), order)
        .map_err(err)?
        .map(|c| TPoly::constant(c.clone()));
    let track = solve_algebraic(&kernel::counting_cubic(), &TPoly::one(), order).map_err(err)?;
    for (mode, cubic) in [(Mode::Univariate, forbid), (Mode::Bivariate, track)] {
        let l0 = kernel::level_gf(0, 2 * order, mode).map_err(err)?;
        let half = l0
            .compress_even()
            .ok_or_else(|| format!("{mode:?}: odd coefficient"))?
            .truncate(order);
        if half != cubic {
            return Err(format!("{mode:?}"));
        }
    }
    Ok(format!("{order} half-length coefficients, both modes"))
}

fn recurrence_vs_cubic(order: usize) -> Outcome {
    let n = order.max(4);
    let rec = extend(&avoidance_initial_terms(), n - 1).map_err(err)?;
    let solved =
        solve_algebraic(&kernel::avoidance_cubic(), &BigRational::one(), n).map_err(err)?;
    let solved = integers(&solved)?;
    if let Some(i) = rec.iter().zip(&solved).position(|(a, b)| a != b) {
        return Err(format!("differ at n={i}"));
    }
    if let Some(i) = holonomic::first_failure(&rec) {
        return Err(format!("residual nonzero at n={i}"));
    }
    Ok(format!("n < {n}"))
}

fn ode(order: usize) -> Outcome {
    let n = order.max(4);
    let s = solve_algebraic(&kernel::avoidance_cubic(), &BigRational::one(), n).map_err(err)?;
    let r = ode_residual(&s);
    if !r.is_zero() {
        return Err(format!("nonzero mod z^{}", r.order()));
    }
    Ok(format!("0 mod z^{}", r.order()))
}

fn transformed(order: usize) -> Outcome {
    let root = kernel::kernel_root(2 * order + 2, Mode::Univariate).map_err(err)?;
    let axis = kernel::at_t_zero(&kernel::axis_series(&root).map_err(err)?);
    let half = axis
        .compress_even()
        .ok_or("odd coefficient at level 0")?
        .truncate(order);
    let r = kernel::transformed_cubic().residual(&half);
    if !r.is_zero() {
        return Err("nonzero residual".into());
    }
    Ok(format!("0 mod Z^{order}"))
}

fn golden_avoidance(_order: usize) -> Outcome {
    let want = golden::avoidance_sequence();
    let s = solve_algebraic(&kernel::avoidance_cubic(), &BigRational::one(), want.len())
        .map_err(err)?;
    let got = integers(&s)?;
    if got != want {
        return Err(format!("got {got:?}"));
    }
    Ok(format!("{} terms", want.len()))
}

fn golden_triangle(_order: usize) -> Outcome {
    let want = golden::counting_triangle();
    let s = solve_algebraic(&kernel::counting_cubic(), &TPoly::one(), want.len()).map_err(err)?;
    let got = int_rows(&s)?;
    if let Some(n) = got.iter().zip(&want).position(|(a, b)| a != b) {
        return Err(format!("row {n}: {:?} vs {:?}", got[n], want[n]));
    }
    Ok(format!("{} rows", want.len()))
}

fn golden_level0(_order: usize) -> Outcome {
    let forbid = golden::level0_forbid();
    let s = kernel::level_gf(0, forbid.len(), Mode::Univariate).map_err(err)?;
    if integers(&kernel::at_t_zero(&s))? != forbid {
        return Err("forbidden series".into());
    }
    let track = golden::level0_track();
    let s = kernel::level_gf(0, 2 * track.len(), Mode::Bivariate).map_err(err)?;
    let half = s.compress_even().ok_or("odd coefficient")?;
    if int_rows(&half)? != track {
        return Err("counting series".into());
    }
    Ok(format!("{} + {} coefficients", forbid.len(), track.len()))
}

fn golden_root(_order: usize) -> Outcome {
    let want = golden::kernel_root();
    let root = kernel::kernel_root(want.len(), Mode::Univariate).map_err(err)?;
    if integers(&kernel::at_t_zero(&root.utilde))? != want {
        return Err("root differs".into());
    }
    Ok(format!("{} coefficients", want.len()))
}

fn asymptotic_constants(_order: usize) -> Outcome {
    let c = skewdyck_core::asymptotics::constants();
    let gap = (c.z0 - c.z0_numeric).abs();
    if gap >= 1e-12 {
        return Err(format!("z0 closed form and bisection differ by {gap:e}"));
    }
    Ok(format!("z0 = {:.15}, growth = {:.12}", c.z0, c.growth))
}
