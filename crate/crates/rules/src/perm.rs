use std::error::Error;
use std::fmt;

use grid_core::{consecutive, NumberLine, Symbol};

/// Error returned by the permutation predicates when the input sequence is
/// not a permutation of `1..=n` for its own length `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotAPermutation;

impl fmt::Display for NotAPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sequence is not a permutation of 1..=n")
    }
}

impl Error for NotAPermutation {}

/// Whether no two neighboring entries of `perm` are consecutive numbers
/// under `line`.
///
/// Only positionally adjacent entries are compared; the two ends are *not*
/// neighbors here (see [`cyclable`] for the closed-up reading).
///
/// # Errors
///
/// Returns [`NotAPermutation`] if `perm` is not a permutation of `1..=n`
/// where `n = perm.len()`.
pub fn nonconsecutive_perm(perm: &[Symbol], line: NumberLine) -> Result<bool, NotAPermutation> {
    check_permutation(perm)?;
    let n = perm.len();
    Ok(perm.windows(2).all(|w| !consecutive(w[0], w[1], n, line)))
}

/// Whether `perm` is non-consecutive *and* its first and last entries are
/// also not consecutive under `line`.
///
/// Cycling a permutation (dropping the head onto the tail repeatedly)
/// brings the two ends next to each other, so only permutations passing
/// this closed-up check produce non-consecutive rows under cycling.
///
/// # Errors
///
/// Returns [`NotAPermutation`] if `perm` is not a permutation of `1..=n`
/// where `n = perm.len()`.
pub fn cyclable(perm: &[Symbol], line: NumberLine) -> Result<bool, NotAPermutation> {
    let open = nonconsecutive_perm(perm, line)?;
    let n = perm.len();
    if n < 2 {
        return Ok(open);
    }
    Ok(open && !consecutive(perm[0], perm[n - 1], n, line))
}

fn check_permutation(perm: &[Symbol]) -> Result<(), NotAPermutation> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &v in perm {
        let Some(slot) = (v as usize).checked_sub(1).and_then(|i| seen.get_mut(i)) else {
            return Err(NotAPermutation);
        };
        if *slot {
            return Err(NotAPermutation);
        }
        *slot = true;
    }
    Ok(())
}
