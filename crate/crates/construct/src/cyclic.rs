use grid_core::{Square, Symbol};

use crate::arith::gcd;
use crate::ConstructError;

/// A per-row cyclic shift: positive values shift right, negative left,
/// both interpreted modulo the square's order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftSpec {
    k: i64,
}

impl ShiftSpec {
    pub fn new(k: i64) -> Self {
        ShiftSpec { k }
    }

    /// The signed shift as given.
    pub fn k(&self) -> i64 {
        self.k
    }

    /// The shift as a canonical right-shift in `0..n`.
    pub(crate) fn reduce(&self, n: usize) -> usize {
        self.k.rem_euclid(n as i64) as usize
    }
}

impl From<i64> for ShiftSpec {
    fn from(k: i64) -> Self {
        ShiftSpec::new(k)
    }
}

/// A choice of direction for unit steps: `Plus` is +1, `Minus` is −1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub(crate) fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Builds the square whose row `r` is `first_row` right-rotated by `r·k`,
/// refusing shifts that share a factor with the order (those repeat
/// symbols within columns).
///
/// # Errors
///
/// Returns [`ConstructError::ShiftNotCoprime`] when `gcd(n, k mod n) ≠ 1`.
///
/// # Panics
///
/// Panics if `first_row` is not a permutation of `1..=n`.
pub fn cyclic_square(
    first_row: &[Symbol],
    shift: impl Into<ShiftSpec>,
) -> Result<Square, ConstructError> {
    let n = first_row.len();
    assert!(is_permutation(first_row), "first row must be a permutation of 1..=n");
    let k = shift.into().reduce(n.max(1));
    if gcd(n, k) != 1 {
        return Err(ConstructError::ShiftNotCoprime { order: n, shift: k });
    }
    // Right-rotating row r by r·k means cell (i, j) reads the first row at
    // index j − i·k; adding i·(n − k) avoids signed arithmetic.
    let back = n - k;
    let cells = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            first_row[(j + i * back) % n]
        })
        .collect();
    Ok(grid_core::make_square(n, cells).expect("rotations of a permutation are in range"))
}

/// Builds the order-`n` square whose first row walks the modular number
/// line from `start` in direction `row_dir` and whose rows cycle by the
/// unit shift `shift`. Every output is Latin, and both its rows and its
/// columns step by ±1 modulo `n`, so orthogonal neighbors always hold
/// modularly consecutive values.
///
/// The `4n` parameter combinations (`start`, `row_dir`, `shift`) produce
/// exactly the cyclic squares of this family.
///
/// # Panics
///
/// Panics if `n = 0` or `start ∉ 1..=n`.
pub fn modular_consecutive(n: usize, start: Symbol, row_dir: Sign, shift: Sign) -> Square {
    assert!(n >= 1, "order must be at least 1");
    assert!(
        (1..=n as Symbol).contains(&start),
        "start symbol must lie in 1..=n"
    );
    let (dir, k) = (row_dir.unit(), shift.unit());
    let cells = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx as i64 / n as i64, idx as i64 % n as i64);
            let t = j - i * k; // index into the conceptual first row
            let v = (start as i64 - 1 + dir * t).rem_euclid(n as i64);
            (v + 1) as Symbol
        })
        .collect();
    grid_core::make_square(n, cells).expect("modular walk stays in range")
}

fn is_permutation(row: &[Symbol]) -> bool {
    let n = row.len();
    let mut seen = vec![false; n];
    row.iter().all(|&v| {
        (v as usize)
            .checked_sub(1)
            .and_then(|i| seen.get_mut(i))
            .map(|slot| !std::mem::replace(slot, true))
            .unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_rows(square: &Square) -> Vec<Vec<Symbol>> {
        square.rows().map(<[_]>::to_vec).collect()
    }

    #[test]
    fn right_cyclic_order_3() {
        let square = cyclic_square(&[1, 2, 3], 1).unwrap();
        assert_eq!(all_rows(&square), vec![vec![1, 2, 3], vec![3, 1, 2], vec![2, 3, 1]]);
    }

    #[test]
    fn left_cyclic_by_one_is_shift_n_minus_1() {
        let square = cyclic_square(&[1, 3, 5, 2, 4], 4).unwrap();
        assert_eq!(
            all_rows(&square),
            vec![
                vec![1, 3, 5, 2, 4],
                vec![3, 5, 2, 4, 1],
                vec![5, 2, 4, 1, 3],
                vec![2, 4, 1, 3, 5],
                vec![4, 1, 3, 5, 2],
            ]
        );
        // A negative shift spells the same square more directly.
        assert_eq!(cyclic_square(&[1, 3, 5, 2, 4], -1).unwrap(), square);
    }

    #[test]
    fn non_coprime_shift_is_refused() {
        assert_eq!(
            cyclic_square(&[1, 2, 3, 4], 2),
            Err(ConstructError::ShiftNotCoprime { order: 4, shift: 2 })
        );
    }

    #[test]
    fn order_1_accepts_any_shift() {
        assert_eq!(all_rows(&cyclic_square(&[1], 0).unwrap()), vec![vec![1]]);
        assert_eq!(all_rows(&cyclic_square(&[1], 5).unwrap()), vec![vec![1]]);
    }

    #[test]
    #[should_panic(expected = "permutation")]
    fn non_permutation_first_row_panics() {
        let _ = cyclic_square(&[1, 1, 3], 1);
    }

    #[test]
    fn modular_consecutive_order_3_is_the_right_cyclic_square() {
        let square = modular_consecutive(3, 1, Sign::Plus, Sign::Plus);
        assert_eq!(all_rows(&square), vec![vec![1, 2, 3], vec![3, 1, 2], vec![2, 3, 1]]);
    }

    #[test]
    fn modular_consecutive_start_and_direction() {
        let square = modular_consecutive(4, 3, Sign::Minus, Sign::Minus);
        // First row walks down from 3 modulo 4; rows cycle left.
        assert_eq!(square.row(0), &[3, 2, 1, 4]);
        assert_eq!(square.row(1), &[2, 1, 4, 3]);
    }
}
