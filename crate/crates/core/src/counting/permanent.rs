use super::{CountingError, LogCount};

pub const PERMANENT_MAX_N: usize = 24;

/// Exact permanent of a 0/1 matrix by Ryser's formula with Gray-code subset order.
pub fn permanent_exact(a: &[Vec<u8>]) -> Result<u128, CountingError> {
    let n = a.len();
    if n > PERMANENT_MAX_N {
        return Err(CountingError::TooLarge { what: "permanent", n, max: PERMANENT_MAX_N });
    }
    for (row, r) in a.iter().enumerate() {
        if r.len() != n {
            return Err(CountingError::NotSquare { row, len: r.len(), n });
        }
    }
    if n == 0 {
        return Ok(1);
    }
    // per(A) = (-1)^n sum_{S != {}} (-1)^{|S|} prod_i sum_{j in S} a_ij
    let mut row_sums = vec![0i64; n];
    let mut in_set = vec![false; n];
    let mut size = 0usize;
    let mut total: i128 = 0;
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        let delta = if in_set[j] { -1 } else { 1 };
        in_set[j] = !in_set[j];
        size = (size as i64 + delta) as usize;
        for (sum, row) in row_sums.iter_mut().zip(a) {
            *sum += delta * row[j] as i64;
        }
        let mut prod: i128 = 1;
        for &s in &row_sums {
            if s == 0 {
                prod = 0;
                break;
            }
            prod *= s as i128;
        }
        if size % 2 == 1 {
            total -= prod;
        } else {
            total += prod;
        }
    }
    if n % 2 == 1 {
        total = -total;
    }
    debug_assert!(total >= 0);
    Ok(total as u128)
}

pub fn permanent(a: &[Vec<u8>]) -> Result<LogCount, CountingError> {
    permanent_exact(a).map(LogCount::from_u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ones(n: usize) -> Vec<Vec<u8>> {
        vec![vec![1; n]; n]
    }

    fn identity(n: usize) -> Vec<Vec<u8>> {
        (0..n).map(|i| (0..n).map(|j| (i == j) as u8).collect()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(permanent_exact(&ones(3)).unwrap(), 6);
        assert_eq!(permanent_exact(&identity(3)).unwrap(), 1);
        let tri = vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]];
        assert_eq!(permanent_exact(&tri).unwrap(), 1);
    }

    #[test]
    fn factorials() {
        let mut f: u128 = 1;
        for n in 1..=12 {
            f *= n as u128;
            assert_eq!(permanent_exact(&ones(n)).unwrap(), f);
        }
    }

    #[test]
    fn derangements_from_complement_of_identity() {
        // per(J - I) is the number of derangements: 0, 1, 2, 9, 44, 265
        let expect = [0u128, 1, 2, 9, 44, 265];
        for (n, &d) in (1..=6).zip(&expect) {
            let m: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| (i != j) as u8).collect()).collect();
            assert_eq!(permanent_exact(&m).unwrap(), d);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(permanent(&ones(25)), Err(CountingError::TooLarge { .. })));
        assert!(matches!(permanent(&[vec![1, 1], vec![1]]), Err(CountingError::NotSquare { row: 1, .. })));
        assert_eq!(permanent_exact(&[]).unwrap(), 1);
    }

    #[test]
    fn zero_row_gives_zero() {
        let m = vec![vec![1, 1, 1], vec![0, 0, 0], vec![1, 1, 1]];
        assert!(permanent(&m).unwrap().is_zero());
    }
}
