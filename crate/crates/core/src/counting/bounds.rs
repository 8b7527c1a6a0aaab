use serde::{Serialize, Serializer};

use super::{ln_factorial, CountingError, LogCount};

/// Brégman: per(A) <= prod_a (d_a!)^{1/d_a} over row degrees.
pub fn bregman_bound(row_degrees: &[usize]) -> LogCount {
    if row_degrees.contains(&0) {
        return LogCount::ZERO;
    }
    LogCount::from_ln(row_degrees.iter().map(|&d| ln_factorial(d) / d as f64).sum())
}

/// The max-degree form `(8Δ)^{m/Δ} (Δ/e)^m`.
pub fn bregman_maxdeg_bound(m: usize, delta: usize) -> Result<LogCount, CountingError> {
    if delta == 0 {
        return Err(CountingError::InvalidArgument("maximum degree must be at least 1".into()));
    }
    let (m, d) = (m as f64, delta as f64);
    Ok(LogCount::from_ln(m / d * (8.0 * d).ln() + m * (d.ln() - 1.0)))
}

/// Van der Waerden: a d-regular bipartite graph with sides of size m has at
/// least `d^m m! / m^m` perfect matchings.
pub fn vdw_bound(m: usize, d: usize) -> Result<LogCount, CountingError> {
    if d == 0 || d > m {
        return Err(CountingError::InvalidArgument(format!("need 1 <= d <= m, got d = {d}, m = {m}")));
    }
    let (mf, df) = (m as f64, d as f64);
    Ok(LogCount::from_ln(mf * df.ln() + ln_factorial(m) - mf * mf.ln()))
}

/// `prod_{i=1}^{r} (i!)^{n/i}`: peel one Hamilton cycle at a time from an
/// i-regular remainder and bound its choices by Brégman on the adjacency matrix.
pub fn decomposition_upper_bound(n: usize, r: usize) -> Result<LogCount, CountingError> {
    if n == 0 || r == 0 {
        return Err(CountingError::InvalidArgument(format!("need n, r >= 1, got n = {n}, r = {r}")));
    }
    Ok(LogCount::from_ln((1..=r).map(|i| n as f64 / i as f64 * ln_factorial(i)).sum()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Methods {
    pub lower: String,
    pub exact: Option<String>,
    pub upper: String,
}

/// A lower/exact/upper sandwich. Log values serialize as `null` when the count is zero.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub r: usize,
    #[serde(rename = "lower_log", serialize_with = "ser_log")]
    pub lower: LogCount,
    #[serde(rename = "exact_log", serialize_with = "ser_opt_log")]
    pub exact: Option<LogCount>,
    #[serde(rename = "upper_log", serialize_with = "ser_log")]
    pub upper: LogCount,
    pub exact_count: Option<u128>,
    pub methods: Methods,
    pub sandwich_holds: bool,
}

/// Slack allowed in log-space comparisons between bounds and counts.
pub const LOG_TOLERANCE: f64 = 1e-9;

impl BoundReport {
    pub fn new(n: usize, r: usize, lower: LogCount, exact: Option<LogCount>, upper: LogCount, methods: Methods) -> Self {
        let sandwich_holds = match &exact {
            Some(e) => lower.le(e, LOG_TOLERANCE) && e.le(&upper, LOG_TOLERANCE),
            None => lower.le(&upper, LOG_TOLERANCE),
        };
        let exact_count = exact.and_then(|e| e.exact);
        BoundReport { n, r, lower, exact, upper, exact_count, methods, sandwich_holds }
    }
}

fn ser_log<S: Serializer>(c: &LogCount, s: S) -> Result<S::Ok, S::Error> {
    c.ln_opt().serialize(s)
}

fn ser_opt_log<S: Serializer>(c: &Option<LogCount>, s: S) -> Result<S::Ok, S::Error> {
    c.and_then(|c| c.ln_opt()).serialize(s)
}
