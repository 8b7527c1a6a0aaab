//! Counting oracles and bounds.
//!
//! Counts are carried as [`LogCount`]: the natural logarithm plus an exact
//! integer when one is available. Exact routines are exponential and capped.

mod bounds;
mod hamilton;
mod permanent;

pub use bounds::{
    bregman_bound, bregman_maxdeg_bound, decomposition_upper_bound, vdw_bound, BoundReport, Methods, LOG_TOLERANCE,
};
pub use hamilton::{
    count_hamilton_cycles_exact, count_hamilton_decompositions_exact, count_hamilton_decompositions_ordered,
    HAMILTON_DP_MAX_N,
};
pub use permanent::{permanent, permanent_exact, PERMANENT_MAX_N};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CountingError {
    #[error("size {n} exceeds the limit {max} for {what}")]
    TooLarge { what: &'static str, n: usize, max: usize },
    #[error("matrix is not square (row {row} has {len} entries, expected {n})")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("ordered count {ordered} is not divisible by {r}!")]
    NotDivisible { ordered: u128, r: usize },
}

/// A nonnegative count in log space. `zero` is set iff the count is exactly 0,
/// in which case `ln` is `-inf`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogCount {
    pub ln: f64,
    pub zero: bool,
    pub exact: Option<u128>,
}

impl LogCount {
    pub const ZERO: LogCount = LogCount { ln: f64::NEG_INFINITY, zero: true, exact: Some(0) };
    pub const ONE: LogCount = LogCount { ln: 0.0, zero: false, exact: Some(1) };

    pub fn from_u128(x: u128) -> Self {
        if x == 0 {
            return Self::ZERO;
        }
        LogCount { ln: ln_u128(x), zero: false, exact: Some(x) }
    }

    /// A real-valued (bound) quantity given by its logarithm.
    pub fn from_ln(ln: f64) -> Self {
        if ln == f64::NEG_INFINITY {
            return LogCount { exact: None, ..Self::ZERO };
        }
        LogCount { ln, zero: false, exact: None }
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    /// `ln` as an `Option`, `None` for zero.
    pub fn ln_opt(&self) -> Option<f64> {
        (!self.zero).then_some(self.ln)
    }

    pub fn value(&self) -> f64 {
        if self.zero {
            0.0
        } else {
            self.ln.exp()
        }
    }

    /// `self <= other`, with `tol` of slack in log space.
    pub fn le(&self, other: &LogCount, tol: f64) -> bool {
        if let (Some(a), Some(b)) = (self.exact, other.exact) {
            return a <= b;
        }
        self.zero || (!other.zero && self.ln <= other.ln + tol)
    }
}

/// `ln` of a `u128` with full double precision (the top 64 bits carry the mantissa).
pub(crate) fn ln_u128(x: u128) -> f64 {
    debug_assert!(x > 0);
    let shift = 128u32.saturating_sub(x.leading_zeros()).saturating_sub(64);
    ((x >> shift) as u64 as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln(k!)`, summed directly (exact enough for the small `k` used here).
pub(crate) fn ln_factorial(k: usize) -> f64 {
    (2..=k).map(|i| (i as f64).ln()).sum()
}
