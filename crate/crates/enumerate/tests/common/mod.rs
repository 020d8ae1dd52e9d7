#![allow(dead_code)]

use enumerate::{enumerate, Mode, SearchOptions};
use grid_core::{make_square, NumberLine, Piece, Square, Symbol, Topology};
use rules::{Adjacency, Rule, RuleSet};

/// Builds a square from digit strings, one row per string.
pub fn sq(rows: &[&str]) -> Square {
    let n = rows.len();
    let cells: Vec<Symbol> = rows
        .iter()
        .flat_map(|row| row.chars())
        .map(|c| c.to_digit(10).expect("digit") as Symbol)
        .collect();
    make_square(n, cells).expect("well-formed test square")
}

pub fn ruleset(rules: Vec<Rule>) -> RuleSet {
    RuleSet::new(rules).expect("distinct rules")
}

/// Latin plus step-wise non-consecutive neighbours.
pub fn shy(topology: Topology, line: NumberLine) -> RuleSet {
    ruleset(vec![
        Rule::Latin,
        Rule::NonConsecutive {
            adjacency: Adjacency::OrthogonalStep,
            topology,
            line,
        },
    ])
}

/// Latin plus consecutive neighbours everywhere.
pub fn nosy(topology: Topology, line: NumberLine) -> RuleSet {
    ruleset(vec![Rule::Latin, Rule::Consecutive { topology, line }])
}

pub fn anti(piece: Piece, topology: Topology) -> RuleSet {
    ruleset(vec![Rule::Latin, Rule::AntiPiece { piece, topology }])
}

pub fn require(piece: Piece, topology: Topology) -> RuleSet {
    ruleset(vec![Rule::Latin, Rule::RequirePiece { piece, topology }])
}

/// Counts satisfying squares with default options.
pub fn count(n: usize, rules: &RuleSet) -> u64 {
    enumerate(n, rules, &SearchOptions::default())
        .expect("search fits the default budget")
        .count
}

/// Counts satisfying squares whose first row is `1 2 .. n`.
pub fn count_fixed(n: usize, rules: &RuleSet) -> u64 {
    let opts = SearchOptions {
        fix_first_row: enumerate::FirstRow::Identity,
        ..SearchOptions::default()
    };
    enumerate(n, rules, &opts)
        .expect("search fits the default budget")
        .count
}

/// Collects every satisfying square in lexicographic order.
pub fn collect(n: usize, rules: &RuleSet) -> Vec<Square> {
    enumerate(n, rules, &SearchOptions::for_mode(Mode::Collect))
        .expect("search fits the default budget")
        .squares
}

/// Collects every satisfying square whose first row is `1 2 .. n`.
pub fn collect_fixed(n: usize, rules: &RuleSet) -> Vec<Square> {
    let opts = SearchOptions {
        mode: Mode::Collect,
        fix_first_row: enumerate::FirstRow::Identity,
        ..SearchOptions::default()
    };
    enumerate(n, rules, &opts)
        .expect("search fits the default budget")
        .squares
}
