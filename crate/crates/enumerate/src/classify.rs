use grid_core::{NumberLine, Piece, Square, Topology};
use rules::{detect_cyclic, Rule, RuleSet};

use crate::options::{FirstRow, Mode, SearchOptions};
use crate::{enumerate, EnumerateError};

/// The squares whose rows wrap around the modular number line, split by
/// whether the whole square is a shifted copy of its first row.
#[derive(Debug, Clone)]
pub struct ModularClassification {
    cyclic: Vec<Square>,
    noncyclic: Vec<Square>,
}

impl ModularClassification {
    /// Squares that are cyclic with shift `1` or `n - 1`, i.e. plain row
    /// rotations of their first row, in row-major lexicographic order.
    pub fn cyclic(&self) -> &[Square] {
        &self.cyclic
    }

    /// Squares with modular-consecutive rows that are not row rotations,
    /// in row-major lexicographic order.
    pub fn noncyclic(&self) -> &[Square] {
        &self.noncyclic
    }

    pub fn cyclic_count(&self) -> u64 {
        self.cyclic.len() as u64
    }

    pub fn noncyclic_count(&self) -> u64 {
        self.noncyclic.len() as u64
    }

    pub fn total(&self) -> u64 {
        self.cyclic_count() + self.noncyclic_count()
    }
}

/// Enumerates the order-`n` Latin squares whose rows are all consecutive
/// on the modular number line and splits them into rotation-generated
/// squares versus the rest.
///
/// The first row may be pinned to the identity to count essentially
/// distinct squares; relabelling recovers the free total.
///
/// # Errors
///
/// Returns [`EnumerateError::OrderUnsupported`] for `n < 3`, where the
/// modular line degenerates (every pair of distinct symbols is
/// consecutive and the split is meaningless), and passes through any
/// search failure.
pub fn classify_modular_consecutive(
    n: usize,
    fix_first_row: bool,
) -> Result<ModularClassification, EnumerateError> {
    if n < 3 {
        return Err(EnumerateError::OrderUnsupported { order: n });
    }
    let rules = RuleSet::new(vec![
        Rule::Latin,
        Rule::Consecutive {
            topology: Topology::Flat,
            line: NumberLine::Modular,
        },
    ])
    .expect("distinct rules");
    let opts = SearchOptions {
        mode: Mode::Collect,
        fix_first_row: if fix_first_row {
            FirstRow::Identity
        } else {
            FirstRow::Free
        },
        ..SearchOptions::default()
    };
    let report = enumerate(n, &rules, &opts)?;
    let mut out = ModularClassification {
        cyclic: Vec::new(),
        noncyclic: Vec::new(),
    };
    for square in report.squares {
        let shift = detect_cyclic(&square).expect("enumerated squares are Latin");
        if shift == Some(1) || shift == Some(n - 1) {
            out.cyclic.push(square);
        } else {
            out.noncyclic.push(square);
        }
    }
    Ok(out)
}

/// Checks that in every order-4 Latin square avoiding knight attacks
/// between equal symbols whose first row is `1 2 3 4`, the third row is
/// forced to a single value.
pub fn third_row_forced() -> bool {
    let rules = RuleSet::new(vec![
        Rule::Latin,
        Rule::AntiPiece {
            piece: Piece::Knight,
            topology: Topology::Flat,
        },
    ])
    .expect("distinct rules");
    let opts = SearchOptions {
        mode: Mode::Collect,
        fix_first_row: FirstRow::Identity,
        ..SearchOptions::default()
    };
    let report = enumerate(4, &rules, &opts).expect("order 4 is in budget");
    let mut third_rows = report.squares.iter().map(|square| square.row(2));
    match third_rows.next() {
        Some(first) => third_rows.all(|row| row == first),
        None => false,
    }
}
