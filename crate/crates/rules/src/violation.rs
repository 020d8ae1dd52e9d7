use std::fmt;

use grid_core::{Coord, Symbol};

use crate::Rule;

/// Machine-stable violation codes; these strings are part of the public
/// output contract and never change meaning.
pub mod note {
    /// Two equal symbols share a row.
    pub const LATIN_ROW_DUP: &str = "latin-row-dup";
    /// Two equal symbols share a column.
    pub const LATIN_COL_DUP: &str = "latin-col-dup";
    /// Adjacent cells hold consecutive symbols under a non-consecutive rule.
    pub const NONCONSECUTIVE_ADJACENT: &str = "nonconsecutive-adjacent";
    /// Orthogonally adjacent cells fail to hold consecutive symbols under a
    /// consecutive rule.
    pub const CONSECUTIVE_GAP: &str = "consecutive-gap";
    /// Two cells one piece-move apart hold equal symbols.
    pub const ANTI_PIECE_EQUAL: &str = "anti-piece-equal";
    /// A cell's piece target set contains no equal symbol.
    pub const REQUIRE_PIECE_UNMET: &str = "require-piece-unmet";
    /// A symbol's occurrences split into several piece-move components.
    pub const STRICT_DISCONNECTED: &str = "strict-disconnected";
}

/// One falsified constraint instance.
///
/// Pair violations carry both cells, canonicalized with the row-major
/// smaller coordinate first; cell violations (unmet requirement) carry one
/// cell; connectivity violations carry one representative cell from each of
/// two components. `symbols` lists the cell values in the same order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// The rule that was falsified.
    pub rule: Rule,
    /// One or two offending cells.
    pub cells: Vec<Coord>,
    /// The offending symbol value(s), matching `cells`.
    pub symbols: Vec<Symbol>,
    /// A machine-stable code from [`note`].
    pub note: &'static str,
}

impl Violation {
    pub(crate) fn pair(rule: &Rule, a: (Coord, Symbol), b: (Coord, Symbol), note: &'static str) -> Self {
        debug_assert!(a.0 < b.0, "pair violations must be canonicalized");
        Violation {
            rule: rule.clone(),
            cells: vec![a.0, b.0],
            symbols: vec![a.1, b.1],
            note,
        }
    }

    pub(crate) fn cell(rule: &Rule, at: Coord, symbol: Symbol, note: &'static str) -> Self {
        Violation {
            rule: rule.clone(),
            cells: vec![at],
            symbols: vec![symbol],
            note,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} at ", self.rule, self.note)?;
        for (i, (cell, symbol)) in self.cells.iter().zip(&self.symbols).enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            write!(f, "{cell}={symbol}")?;
        }
        Ok(())
    }
}
