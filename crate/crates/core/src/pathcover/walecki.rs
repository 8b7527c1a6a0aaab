use serde::{Deserialize, Serialize};

use super::PathCoverError;

/// `b` directed Hamilton paths of the complete digraph on `0..b` that use every
/// ordered pair exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamPathDecomposition {
    pub b: usize,
    pub paths: Vec<Vec<usize>>,
}

impl HamPathDecomposition {
    pub fn is_valid(&self) -> bool {
        let b = self.b;
        let mut used = vec![false; b * b];
        for p in &self.paths {
            let mut seen = vec![false; b];
            if p.len() != b || p.iter().any(|&v| v >= b || std::mem::replace(&mut seen[v], true)) {
                return false;
            }
            for w in p.windows(2) {
                if std::mem::replace(&mut used[w[0] * b + w[1]], true) {
                    return false;
                }
            }
        }
        self.paths.len() == b && (0..b).all(|u| (0..b).all(|v| u == v || used[u * b + v]))
    }
}

/// Walecki zigzag paths `i, i+1, i-1, i+2, i-2, ...` (mod b) for `i < b/2`
/// decompose `K_b`; each is used in both directions.
pub fn complete_digraph_path_decomposition(b: usize) -> Result<HamPathDecomposition, PathCoverError> {
    if b % 2 == 1 || b == 0 {
        return Err(PathCoverError::OddOrder(b));
    }
    let mut paths = Vec::with_capacity(b);
    for i in 0..b / 2 {
        let zigzag: Vec<usize> = (0..b)
            .map(|j| {
                let step = (j + 1) / 2;
                if j % 2 == 1 {
                    (i + step) % b
                } else {
                    (i + b - step) % b
                }
            })
            .collect();
        let mut back = zigzag.clone();
        back.reverse();
        paths.push(zigzag);
        paths.push(back);
    }
    Ok(HamPathDecomposition { b, paths })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two() {
        let d = complete_digraph_path_decomposition(2).unwrap();
        assert_eq!(d.paths, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn order_four_is_valid() {
        let d = complete_digraph_path_decomposition(4).unwrap();
        assert!(d.is_valid());
        assert_eq!(d.paths[0], vec![0, 1, 3, 2]);
    }

    #[test]
    fn odd_orders_rejected() {
        assert_eq!(complete_digraph_path_decomposition(3), Err(PathCoverError::OddOrder(3)));
        assert_eq!(complete_digraph_path_decomposition(0), Err(PathCoverError::OddOrder(0)));
    }

    #[test]
    fn validator_catches_repeats() {
        let bad = HamPathDecomposition { b: 2, paths: vec![vec![0, 1], vec![0, 1]] };
        assert!(!bad.is_valid());
    }
}
