//! Exact enumeration of skew Dyck paths with the up-down-red factor either
//! forbidden or counted.
//!
//! Paths are words over `Up`, `DownBlack` and `DownRed` (a left step drawn
//! as a red down-step). Counts come out of several independent routes that
//! are checked against one another:
//!
//! - [`path`]: validity rules and a pruned brute-force generator.
//! - [`dp`]: transfer matrix over a four-layer automaton with a `t` marker.
//! - [`kernel`]: the kernel-method root and the level generating functions.
//! - [`series`]: exact truncated power series and a Newton solver for
//!   algebraic equations.
//! - [`holonomic`]: the P-recurrence and ODE of the avoidance series.
//! - [`asymptotics`]: singularity-analysis estimate of its coefficients.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod asymptotics;
pub mod dp;
pub mod holonomic;
pub mod kernel;
pub mod path;
pub mod ring;
pub mod series;
pub mod tpoly;

pub use dp::{Count, CountMode, DpTable, Layer};
pub use kernel::Mode;
pub use path::{SkewPath, Step};
pub use ring::Ring;
pub use series::{AlgEquation, SeriesError, ZSeries};
pub use tpoly::TPoly;
