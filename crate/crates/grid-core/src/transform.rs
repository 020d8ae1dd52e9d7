use std::fmt;

use crate::{make_square, Coord, Square, Symbol};

/// A symmetry operation on squares.
///
/// The geometric operations permute coordinates; `Relabel` permutes symbol
/// values. Each is a bijection on the squares of a given order, and the
/// geometric ones generate the dihedral group of the board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transform {
    /// Mirror across the main diagonal: `(r, c) ← (c, r)`.
    Transpose,
    /// Mirror across the horizontal middle axis: row order reversed.
    ReflectH,
    /// Mirror across the vertical middle axis: each row reversed.
    ReflectV,
    /// Quarter turn clockwise: cell `(r, c)` moves to `(c, n−1−r)`.
    Rotate90,
    /// Replace each symbol `v` by `perm[v − 1]`; `perm` must be a
    /// permutation of `1..=n` for the square's order `n`.
    Relabel(Vec<Symbol>),
}

/// Why a [`Transform`] could not be applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransformError {
    /// A `Relabel` mapping is not a bijection on `1..=n`.
    BadPermutation {
        /// The square's order.
        order: usize,
    },
}

impl fmt::Display for TransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformError::BadPermutation { order } => {
                write!(f, "relabel mapping is not a permutation of 1..={order}")
            }
        }
    }
}

impl std::error::Error for TransformError {}

/// Applies `op` to `square`, returning the transformed square.
///
/// # Errors
///
/// [`TransformError::BadPermutation`] if a `Relabel` mapping has the wrong
/// length, repeats a value, or leaves the symbol range.
pub fn transform(square: &Square, op: &Transform) -> Result<Square, TransformError> {
    let n = square.order();
    let entries: Vec<Symbol> = match op {
        Transform::Transpose => map_coords(square, |r, c| (c, r)),
        Transform::ReflectH => map_coords(square, |r, c| (n - 1 - r, c)),
        Transform::ReflectV => map_coords(square, |r, c| (r, n - 1 - c)),
        Transform::Rotate90 => map_coords(square, |r, c| (n - c - 1, r)),
        Transform::Relabel(perm) => {
            if !is_permutation(perm, n) {
                return Err(TransformError::BadPermutation { order: n });
            }
            square
                .cells()
                .iter()
                .map(|&v| perm[v as usize - 1])
                .collect()
        }
    };
    Ok(make_square(n, entries).expect("transforms preserve shape and symbol range"))
}

/// Whether `perm` lists each of `1..=n` exactly once.
pub(crate) fn is_permutation(perm: &[Symbol], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in perm {
        if v == 0 || v as usize > n || seen[v as usize - 1] {
            return false;
        }
        seen[v as usize - 1] = true;
    }
    true
}

/// Rebuilds the cell vector by pulling each output cell from `source(r, c)`.
fn map_coords(
    square: &Square,
    source: impl Fn(usize, usize) -> (usize, usize),
) -> Vec<Symbol> {
    let n = square.order();
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let (sr, sc) = source(r, c);
            out.push(square.get(Coord::new(sr, sc)));
        }
    }
    out
}
