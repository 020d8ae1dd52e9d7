use grid_core::{make_square, Square, Symbol};
use rules::{passes, RuleSet};

use crate::ConstructError;

/// Builds the Kronecker product of two Latin squares: the order-`m` left
/// operand is blown up into an `m × m` arrangement of `n × n` blocks, the
/// block at (a, c) holding the right operand's cells offset by
/// `(left[a][c] − 1) · n`. The product of Latin squares is Latin, and the
/// blocking preserves several cell-relation properties of the operands.
///
/// # Errors
///
/// Returns [`ConstructError::OperandNotLatin`] when either operand has a
/// row or column duplicate; the product formula only makes sense on Latin
/// operands.
pub fn kronecker(left: &Square, right: &Square) -> Result<Square, ConstructError> {
    let latin = RuleSet::latin();
    if !passes(left, &latin) {
        return Err(ConstructError::OperandNotLatin { operand: "left" });
    }
    if !passes(right, &latin) {
        return Err(ConstructError::OperandNotLatin { operand: "right" });
    }
    let (m, n) = (left.order(), right.order());
    let order = m * n;
    let mut entries = Vec::with_capacity(order * order);
    for a in 0..m {
        for b in 0..n {
            for c in 0..m {
                for d in 0..n {
                    let base = (usize::from(left.get((a, c).into())) - 1) * n;
                    entries.push((base + usize::from(right.get((b, d).into()))) as Symbol);
                }
            }
        }
    }
    Ok(make_square(order, entries).expect("product of valid squares is square"))
}
