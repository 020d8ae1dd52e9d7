//! Exhaustive search over constrained Latin squares.
//!
//! The centrepiece is [`enumerate`], which counts, collects, or finds the
//! lexicographically earliest square of a given order satisfying a rule
//! set. Around it sit a deliberately naive second engine for
//! cross-checking, a counter for non-consecutive permutations, and a
//! classifier that splits modular-consecutive squares into rotations
//! versus the rest.
//!
//! Design notes:
//! - Two engines, no shared pruning. The default engine fills cells in
//!   row-major order and prunes with incremental rule checks; the
//!   [`Engine::NaiveOracle`] engine stacks whole row permutations and
//!   verifies every completed grid from scratch. Agreement between them
//!   is the strongest correctness evidence the crate can offer, so they
//!   must not borrow each other's shortcuts.
//! - Every leaf the pruned engine accepts is still re-verified through
//!   the full rule checker. Pruning is allowed to cut branches early,
//!   never to vouch for a final square.
//! - Searches carry a node budget and report [`EnumerateError::BudgetExceeded`]
//!   when they run out. A search that cannot finish returns an error,
//!   never a silently truncated count.
//! - Counting is deterministic: totals and node counts do not depend on
//!   the number of worker threads, and collected squares come back in
//!   row-major lexicographic order.

mod classify;
mod engine;
mod error;
mod options;
mod oracle;
mod perms;

pub use classify::{classify_modular_consecutive, third_row_forced, ModularClassification};
pub use engine::enumerate;
pub use error::EnumerateError;
pub use options::{Engine, FirstRow, Mode, SearchOptions, SearchReport, DEFAULT_BUDGET};
pub use perms::count_nc_permutations;

use grid_core::Square;
use rules::RuleSet;

/// Finds the first square of order `n` satisfying `rules` in row-major
/// lexicographic order, or `None` when no square satisfies them.
///
/// # Errors
///
/// Passes through any error from [`enumerate`], most usefully
/// [`EnumerateError::BudgetExceeded`] when the search space is too large
/// to settle within the default budget.
pub fn lex_earliest(n: usize, rules: &RuleSet) -> Result<Option<Square>, EnumerateError> {
    let opts = SearchOptions::for_mode(Mode::LexEarliest);
    let report = enumerate(n, rules, &opts)?;
    Ok(report.squares.first().cloned())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_earliest_latin_square_is_the_cyclic_identity() {
        let square = lex_earliest(3, &RuleSet::latin()).unwrap().unwrap();
        assert_eq!(square.cells(), &[1, 2, 3, 2, 3, 1, 3, 1, 2]);
    }

    #[test]
    fn lex_earliest_reports_unsatisfiable_rule_sets_as_none() {
        use grid_core::{Piece, Topology};
        use rules::Rule;
        let rules = RuleSet::latin()
            .with(Rule::RequirePiece {
                piece: Piece::Knight,
                topology: Topology::Flat,
            })
            .unwrap();
        assert_eq!(lex_earliest(3, &rules).unwrap(), None);
    }
}
