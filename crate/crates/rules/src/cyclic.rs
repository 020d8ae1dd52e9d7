use std::error::Error;
use std::fmt;

use grid_core::Square;

use crate::{passes, RuleSet};

/// Error returned by [`detect_cyclic`] when the input square is not Latin.
///
/// Shift detection is only meaningful on Latin squares: with duplicate
/// symbols in a row the "position of the previous row's first symbol" is
/// ambiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotLatin;

impl fmt::Display for NotLatin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "square is not Latin; cyclic shift is undefined")
    }
}

impl Error for NotLatin {}

/// Detects whether every row of a Latin square is the previous row
/// right-shifted by one uniform amount `k`, returning `Some(k)` with
/// `k` in `1..n` or `None` when no uniform shift exists.
///
/// Right-shifting by `k` places row `r`'s entry from column `j` at column
/// `j + k (mod n)` of row `r + 1`; a left shift by one is the same move as
/// a right shift by `n − 1` and is reported that way. Order 1 has no row
/// pairs to witness a shift, so it reports `None`.
///
/// # Errors
///
/// Returns [`NotLatin`] when `square` fails the row/column uniqueness
/// check.
pub fn detect_cyclic(square: &Square) -> Result<Option<usize>, NotLatin> {
    if !passes(square, &RuleSet::latin()) {
        return Err(NotLatin);
    }
    let n = square.order();
    if n < 2 {
        return Ok(None);
    }
    // Candidate shift from the first row pair: the column of row 1 holding
    // row 0's first symbol. k = 0 would mean two equal rows, which the
    // Latin check has already excluded.
    let first = square.row(0)[0];
    let k = square.row(1).iter().position(|&v| v == first).expect("Latin row holds every symbol");
    for r in 0..n - 1 {
        let (above, below) = (square.row(r), square.row(r + 1));
        for j in 0..n {
            if below[(j + k) % n] != above[j] {
                return Ok(None);
            }
        }
    }
    Ok(Some(k))
}
