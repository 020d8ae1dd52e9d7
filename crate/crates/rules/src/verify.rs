use grid_core::{consecutive, piece_targets, Coord, Piece, Square, Symbol, Topology};

use crate::violation::note;
use crate::{Rule, RuleSet, Violation};

/// Checks `square` against every rule in `rules` and reports **all**
/// violations; an empty report is a pass.
///
/// Reporting contract:
/// - exhaustive — every violated `(rule, cell or cell pair)` instance
///   appears, and appears exactly once;
/// - unordered pairs are reported once, canonicalized with the row-major
///   smaller coordinate first;
/// - deterministic — violations appear in rule-set order, then in row-major
///   scan order of their first cell, then of their second.
pub fn verify(square: &Square, rules: &RuleSet) -> Vec<Violation> {
    let mut out = Vec::new();
    for rule in rules.rules() {
        check_rule(square, rule, &mut out);
    }
    out
}

/// Early-exit companion to [`verify`]: whether `square` passes `rules`.
///
/// Same semantics, but stops at the first violation, which makes it the
/// right call in search inner loops.
pub fn passes(square: &Square, rules: &RuleSet) -> bool {
    rules.rules().iter().all(|rule| rule_passes(square, rule))
}

fn check_rule(square: &Square, rule: &Rule, out: &mut Vec<Violation>) {
    match rule {
        Rule::Latin => check_latin(square, rule, out),
        Rule::NonConsecutive {
            adjacency,
            topology,
            line,
        } => {
            for (a, b) in related_pairs(square, adjacency.piece(), *topology) {
                let (va, vb) = (square.get(a), square.get(b));
                if consecutive(va, vb, square.order(), *line) {
                    out.push(Violation::pair(
                        rule,
                        (a, va),
                        (b, vb),
                        note::NONCONSECUTIVE_ADJACENT,
                    ));
                }
            }
        }
        Rule::Consecutive { topology, line } => {
            for (a, b) in related_pairs(square, Piece::OrthogonalStep, *topology) {
                let (va, vb) = (square.get(a), square.get(b));
                if !consecutive(va, vb, square.order(), *line) {
                    out.push(Violation::pair(rule, (a, va), (b, vb), note::CONSECUTIVE_GAP));
                }
            }
        }
        Rule::AntiPiece { piece, topology } => {
            for (a, b) in related_pairs(square, *piece, *topology) {
                let (va, vb) = (square.get(a), square.get(b));
                if va == vb {
                    out.push(Violation::pair(rule, (a, va), (b, vb), note::ANTI_PIECE_EQUAL));
                }
            }
        }
        Rule::RequirePiece { piece, topology } => {
            for origin in square.coords() {
                let v = square.get(origin);
                let met = piece_targets(*piece, origin, square.order(), *topology)
                    .into_iter()
                    .any(|t| square.get(t) == v);
                if !met {
                    out.push(Violation::cell(rule, origin, v, note::REQUIRE_PIECE_UNMET));
                }
            }
        }
        Rule::StrictPiece { piece, topology } => {
            check_strict(square, rule, *piece, *topology, out);
        }
    }
}

fn rule_passes(square: &Square, rule: &Rule) -> bool {
    // Latin and the existential rules have cheap early-exit shapes of their
    // own; the pair rules just stop at the first bad pair.
    match rule {
        Rule::Latin => latin_passes(square),
        Rule::NonConsecutive {
            adjacency,
            topology,
            line,
        } => !related_pairs(square, adjacency.piece(), *topology).any(|(a, b)| {
            consecutive(square.get(a), square.get(b), square.order(), *line)
        }),
        Rule::Consecutive { topology, line } => {
            !related_pairs(square, Piece::OrthogonalStep, *topology).any(|(a, b)| {
                !consecutive(square.get(a), square.get(b), square.order(), *line)
            })
        }
        Rule::AntiPiece { piece, topology } => !related_pairs(square, *piece, *topology)
            .any(|(a, b)| square.get(a) == square.get(b)),
        Rule::RequirePiece { piece, topology } => square.coords().all(|origin| {
            let v = square.get(origin);
            piece_targets(*piece, origin, square.order(), *topology)
                .into_iter()
                .any(|t| square.get(t) == v)
        }),
        Rule::StrictPiece { piece, topology } => {
            let mut scratch = Vec::new();
            check_strict(square, rule, *piece, *topology, &mut scratch);
            scratch.is_empty()
        }
    }
}

/// All unordered related cell pairs, canonicalized (`a < b`), in row-major
/// order of `a` then `b`. Symmetry of the piece relation makes the `b > a`
/// filter lossless.
fn related_pairs(
    square: &Square,
    piece: Piece,
    topology: Topology,
) -> impl Iterator<Item = (Coord, Coord)> + '_ {
    let n = square.order();
    square.coords().flat_map(move |a| {
        piece_targets(piece, a, n, topology)
            .into_iter()
            .filter(move |&b| b > a)
            .map(move |b| (a, b))
    })
}

fn check_latin(square: &Square, rule: &Rule, out: &mut Vec<Violation>) {
    let n = square.order();
    // Row duplicates, then column duplicates, each pair once; scan order
    // keeps the report deterministic.
    for r in 0..n {
        for c1 in 0..n {
            for c2 in c1 + 1..n {
                let (a, b) = (Coord::new(r, c1), Coord::new(r, c2));
                let (va, vb) = (square.get(a), square.get(b));
                if va == vb {
                    out.push(Violation::pair(rule, (a, va), (b, vb), note::LATIN_ROW_DUP));
                }
            }
        }
    }
    for c in 0..n {
        for r1 in 0..n {
            for r2 in r1 + 1..n {
                let (a, b) = (Coord::new(r1, c), Coord::new(r2, c));
                let (va, vb) = (square.get(a), square.get(b));
                if va == vb {
                    out.push(Violation::pair(rule, (a, va), (b, vb), note::LATIN_COL_DUP));
                }
            }
        }
    }
}

fn latin_passes(square: &Square) -> bool {
    let n = square.order();
    let mut seen = vec![false; n];
    for r in 0..n {
        seen.fill(false);
        for v in square.row(r) {
            let i = *v as usize - 1;
            if seen[i] {
                return false;
            }
            seen[i] = true;
        }
    }
    for c in 0..n {
        seen.fill(false);
        for r in 0..n {
            let i = square.get(Coord::new(r, c)) as usize - 1;
            if seen[i] {
                return false;
            }
            seen[i] = true;
        }
    }
    true
}

/// Flood-fills each symbol's occurrence set along piece moves; every
/// component beyond the first yields one violation whose cells are the
/// row-major first occurrence overall and the first unreached occurrence.
fn check_strict(
    square: &Square,
    rule: &Rule,
    piece: Piece,
    topology: Topology,
    out: &mut Vec<Violation>,
) {
    let n = square.order();
    for symbol in 1..=n as Symbol {
        let occurrences: Vec<Coord> = square
            .coords()
            .filter(|&at| square.get(at) == symbol)
            .collect();
        let Some(&first) = occurrences.first() else {
            continue;
        };
        let mut reached: Vec<Coord> = vec![first];
        let mut frontier = vec![first];
        while let Some(cur) = frontier.pop() {
            for t in piece_targets(piece, cur, n, topology) {
                if square.get(t) == symbol && !reached.contains(&t) {
                    reached.push(t);
                    frontier.push(t);
                }
            }
        }
        if let Some(&stranded) = occurrences.iter().find(|c| !reached.contains(c)) {
            out.push(Violation {
                rule: rule.clone(),
                cells: vec![first, stranded],
                symbols: vec![symbol, symbol],
                note: note::STRICT_DISCONNECTED,
            });
        }
    }
}
