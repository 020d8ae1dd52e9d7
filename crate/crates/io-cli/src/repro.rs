use enumerate::{
    classify_modular_consecutive, count_nc_permutations, enumerate, lex_earliest, third_row_forced,
    FirstRow, Mode, SearchOptions,
};
use grid_core::{NumberLine, Piece, Square, Topology};
use rules::{Adjacency, Rule, RuleSet};
use serde::Serialize;

/// One row of the built-in results table: a named quantity, the value it
/// must have, and the value a fresh run produced.
#[derive(Debug, Clone, Serialize)]
pub struct RowResult {
    pub name: &'static str,
    pub expected: String,
    pub got: String,
}

impl RowResult {
    pub fn pass(&self) -> bool {
        self.expected == self.got
    }
}

/// Reruns every number and square the library is pinned to and reports
/// each comparison. All rows run even when early ones fail, so one bad
/// row cannot mask another.
pub fn run_all() -> Vec<RowResult> {
    let mut rows = Vec::new();
    let row = |rows: &mut Vec<RowResult>, name, expected: &str, got: String| {
        rows.push(RowResult {
            name,
            expected: expected.to_string(),
            got,
        });
    };

    row(
        &mut rows,
        "latin square counts, orders 1-5",
        "1 2 12 576 161280",
        join((1..=5).map(|n| count(n, &RuleSet::latin()))),
    );
    row(
        &mut rows,
        "shy permutation counts, orders 1-8",
        "1 0 0 2 14 90 646 5242",
        join((1..=8).map(|n| count_nc_permutations(n, NumberLine::Linear, false))),
    );
    row(
        &mut rows,
        "cyclable shy permutation counts, orders 1-8",
        "1 0 0 0 10 60 462 3920",
        join((1..=8).map(|n| count_nc_permutations(n, NumberLine::Linear, true))),
    );
    row(
        &mut rows,
        "shy square counts, orders 2-5",
        "0 0 0 20",
        join((2..=5).map(|n| count(n, &shy()))),
    );
    row(
        &mut rows,
        "earliest shy square, order 5",
        "13524 35241 52413 24135 41352",
        earliest_text(5, &shy()),
    );
    row(
        &mut rows,
        "earliest knight twin square, order 4",
        "1234 3412 2143 4321",
        earliest_text(4, &require(Piece::Knight)),
    );
    row(
        &mut rows,
        "knight-free squares, order 4 (pinned, free)",
        "4 96",
        format!(
            "{} {}",
            pinned(4, &anti(Piece::Knight)).len(),
            count(4, &anti(Piece::Knight))
        ),
    );
    row(
        &mut rows,
        "pinned knight-free squares, order 4",
        "1234 2143 3412 4321 | 1234 2341 3412 4123 | 1234 4123 3412 2341 | 1234 4321 3412 2143",
        squares_text(&pinned(4, &anti(Piece::Knight))),
    );
    row(
        &mut rows,
        "knight-free squares, order 5 (pinned, free)",
        "2 240",
        format!(
            "{} {}",
            pinned(5, &anti(Piece::Knight)).len(),
            count(5, &anti(Piece::Knight))
        ),
    );
    row(
        &mut rows,
        "queen-free squares, order 4 then pinned order 5",
        "0 2",
        format!(
            "{} {}",
            count(4, &anti(Piece::Queen)),
            pinned(5, &anti(Piece::Queen)).len()
        ),
    );
    row(
        &mut rows,
        "pinned queen-free squares, order 5",
        "12345 34512 51234 23451 45123 | 12345 45123 23451 51234 34512",
        squares_text(&pinned(5, &anti(Piece::Queen))),
    );
    row(
        &mut rows,
        "nosy square counts on the linear line, orders 2-6",
        "2 0 0 0 0",
        join((2..=6).map(|n| count(n, &nosy()))),
    );
    row(
        &mut rows,
        "shy square counts under king adjacency, orders 5-6",
        "0 0",
        join((5..=6).map(|n| count(n, &king_shy()))),
    );
    row(
        &mut rows,
        "king-free square counts, orders 2-4",
        "0 0 0",
        join((2..=4).map(|n| count(n, &anti(Piece::King)))),
    );
    row(
        &mut rows,
        "bishop twin counts, orders 2-5",
        "2 0 192 0",
        join((2..=5).map(|n| count(n, &require(Piece::Bishop)))),
    );
    row(
        &mut rows,
        "king twin counts, orders 2-5",
        "2 0 96 0",
        join((2..=5).map(|n| count(n, &require(Piece::King)))),
    );
    row(
        &mut rows,
        "knight twin counts, orders 3-5",
        "0 168 480",
        join((3..=5).map(|n| count(n, &require(Piece::Knight)))),
    );
    row(
        &mut rows,
        "modular nosy rotations/total, orders 5-7",
        "20/20 24/24 28/28",
        (5..=7)
            .map(|n| {
                let split = classify_modular_consecutive(n, false)
                    .map(|s| format!("{}/{}", s.cyclic_count(), s.total()))
                    .unwrap_or_else(|e| e.to_string());
                split
            })
            .collect::<Vec<_>>()
            .join(" "),
    );
    row(
        &mut rows,
        "modular nosy split, order 4 (total, rotations, exceptions)",
        "32 16 16",
        classify_modular_consecutive(4, false)
            .map(|s| format!("{} {} {}", s.total(), s.cyclic_count(), s.noncyclic_count()))
            .unwrap_or_else(|e| e.to_string()),
    );
    row(
        &mut rows,
        "pinned modular nosy exceptions, order 4",
        "1234 2143 3412 4321 | 1234 4321 3412 2143",
        classify_modular_consecutive(4, true)
            .map(|s| squares_text(s.noncyclic()))
            .unwrap_or_else(|e| e.to_string()),
    );
    row(
        &mut rows,
        "forced third row in pinned knight-free squares, order 4",
        "3412",
        if third_row_forced() {
            row_text(pinned(4, &anti(Piece::Knight))[0].row(2))
        } else {
            "unforced".to_string()
        },
    );
    rows
}

fn join(counts: impl Iterator<Item = u64>) -> String {
    counts
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn count(n: usize, rules: &RuleSet) -> u64 {
    match enumerate(n, rules, &SearchOptions::default()) {
        Ok(report) => report.count,
        Err(_) => u64::MAX,
    }
}

fn pinned(n: usize, rules: &RuleSet) -> Vec<Square> {
    let opts = SearchOptions {
        mode: Mode::Collect,
        fix_first_row: FirstRow::Identity,
        ..SearchOptions::default()
    };
    enumerate(n, rules, &opts)
        .map(|report| report.squares)
        .unwrap_or_default()
}

fn earliest_text(n: usize, rules: &RuleSet) -> String {
    match lex_earliest(n, rules) {
        Ok(Some(square)) => square_text(&square),
        Ok(None) => "none".to_string(),
        Err(e) => e.to_string(),
    }
}

fn row_text(row: &[grid_core::Symbol]) -> String {
    row.iter().map(|s| s.to_string()).collect()
}

fn square_text(square: &Square) -> String {
    square
        .rows()
        .map(row_text)
        .collect::<Vec<_>>()
        .join(" ")
}

fn squares_text(squares: &[Square]) -> String {
    squares
        .iter()
        .map(square_text)
        .collect::<Vec<_>>()
        .join(" | ")
}

fn shy() -> RuleSet {
    RuleSet::latin()
        .with(Rule::NonConsecutive {
            adjacency: Adjacency::OrthogonalStep,
            topology: Topology::Flat,
            line: NumberLine::Linear,
        })
        .expect("distinct rules")
}

fn king_shy() -> RuleSet {
    RuleSet::latin()
        .with(Rule::NonConsecutive {
            adjacency: Adjacency::King,
            topology: Topology::Flat,
            line: NumberLine::Linear,
        })
        .expect("distinct rules")
}

fn nosy() -> RuleSet {
    RuleSet::latin()
        .with(Rule::Consecutive {
            topology: Topology::Flat,
            line: NumberLine::Linear,
        })
        .expect("distinct rules")
}

fn anti(piece: Piece) -> RuleSet {
    RuleSet::latin()
        .with(Rule::AntiPiece {
            piece,
            topology: Topology::Flat,
        })
        .expect("distinct rules")
}

fn require(piece: Piece) -> RuleSet {
    RuleSet::latin()
        .with(Rule::RequirePiece {
            piece,
            topology: Topology::Flat,
        })
        .expect("distinct rules")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_row_passes() {
        for row in run_all() {
            assert!(
                row.pass(),
                "{}: expected `{}`, got `{}`",
                row.name,
                row.expected,
                row.got
            );
        }
    }
}
