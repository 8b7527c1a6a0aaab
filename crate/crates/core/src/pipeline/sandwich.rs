use super::completion::find_hamilton_decomposition;
use crate::counting::{
    count_hamilton_decompositions_exact, decomposition_upper_bound, BoundReport, CountingError, LogCount, Methods,
};
use crate::graph::rotational_tournament;

/// Largest tournament order the sandwich is run at.
pub const SANDWICH_MAX_N: usize = 7;

/// Lower, exact and upper counts of Hamilton decompositions of the rotational
/// tournament on `n` vertices.
pub fn sandwich_experiment(n: usize) -> Result<BoundReport, CountingError> {
    if n % 2 == 0 || n < 3 {
        return Err(CountingError::InvalidArgument(format!("n must be odd and at least 3, got {n}")));
    }
    if n > SANDWICH_MAX_N {
        return Err(CountingError::TooLarge { what: "decomposition sandwich", n, max: SANDWICH_MAX_N });
    }
    let g = rotational_tournament(n).map_err(|e| CountingError::InvalidArgument(e.to_string()))?;
    let r = (n - 1) / 2;
    let found = find_hamilton_decomposition(&g).is_some_and(|c| c.iter().all(|c| c.is_hamiltonian_in(&g)));
    let lower = if found { LogCount::ONE } else { LogCount::ZERO };
    let exact = count_hamilton_decompositions_exact(&g)?;
    let upper = decomposition_upper_bound(n, r)?;
    let methods = Methods {
        lower: "exhibited decomposition".into(),
        exact: Some("canonical-order backtracking".into()),
        upper: "product of (i!)^(n/i)".into(),
    };
    Ok(BoundReport::new(n, r, lower, Some(exact), upper, methods))
}
