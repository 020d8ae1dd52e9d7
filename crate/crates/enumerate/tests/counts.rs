//! Exhaustive counts at desk scale, pinned to independently derived
//! values. Each number here was computed up front with a separate
//! brute-force pass and frozen; the searches below must land on exactly
//! the same figures.

mod common;

use common::{
    anti, collect_fixed, count, nosy, require, ruleset, shy, sq,
};
use enumerate::{
    classify_modular_consecutive, count_nc_permutations, lex_earliest, third_row_forced,
};
use grid_core::{NumberLine, Piece, Topology};
use rules::{Adjacency, Rule, RuleSet};

fn latin() -> RuleSet {
    RuleSet::latin()
}

#[test]
fn latin_counts_match_the_sequence() {
    let expected = [1u64, 2, 12, 576, 161_280];
    for (n, &want) in (1..=5).zip(&expected) {
        assert_eq!(count(n, &latin()), want, "order {n}");
    }
}

#[test]
fn shy_squares_first_appear_at_order_five() {
    let rules = shy(Topology::Flat, NumberLine::Linear);
    let expected = [1u64, 0, 0, 0, 20];
    for (n, &want) in (1..=5).zip(&expected) {
        assert_eq!(count(n, &rules), want, "order {n}");
    }
    assert_eq!(lex_earliest(4, &rules).unwrap(), None);
    assert_eq!(
        lex_earliest(5, &rules).unwrap().unwrap(),
        sq(&["13524", "35241", "52413", "24135", "41352"])
    );
}

#[test]
fn king_adjacency_admits_no_small_shy_squares() {
    let rules = ruleset(vec![
        Rule::Latin,
        Rule::NonConsecutive {
            adjacency: Adjacency::King,
            topology: Topology::Flat,
            line: NumberLine::Linear,
        },
    ]);
    assert_eq!(count(5, &rules), 0);
    assert_eq!(count(6, &rules), 0);
}

#[test]
fn nosy_squares_on_the_linear_line_stop_at_order_two() {
    let rules = nosy(Topology::Flat, NumberLine::Linear);
    assert_eq!(count(2, &rules), 2);
    for n in 3..=6 {
        assert_eq!(count(n, &rules), 0, "order {n}");
    }
}

#[test]
fn anti_king_squares_need_order_five() {
    let rules = anti(Piece::King, Topology::Flat);
    for n in 2..=4 {
        assert_eq!(count(n, &rules), 0, "order {n}");
    }
}

#[test]
fn twin_square_counts_by_piece() {
    let bishop = require(Piece::Bishop, Topology::Flat);
    assert_eq!(count(2, &bishop), 2);
    assert_eq!(count(3, &bishop), 0);
    assert_eq!(count(4, &bishop), 192);
    assert_eq!(count(5, &bishop), 0);

    let king = require(Piece::King, Topology::Flat);
    assert_eq!(count(2, &king), 2);
    assert_eq!(count(3, &king), 0);
    assert_eq!(count(4, &king), 96);
    assert_eq!(count(5, &king), 0);

    let knight = require(Piece::Knight, Topology::Flat);
    assert_eq!(count(3, &knight), 0);
    assert_eq!(count(4, &knight), 168);
    assert_eq!(count(5, &knight), 480);
}

#[test]
fn earliest_knight_twin_square_at_order_four() {
    let rules = require(Piece::Knight, Topology::Flat);
    assert_eq!(
        lex_earliest(4, &rules).unwrap().unwrap(),
        sq(&["1234", "3412", "2143", "4321"])
    );
    assert_eq!(lex_earliest(3, &rules).unwrap(), None);
}

#[test]
fn knight_free_squares_at_order_four() {
    let rules = anti(Piece::Knight, Topology::Flat);
    // Equal-symbol geometry ignores labels, so the free count is the
    // pinned count times the 4! relabellings of the first row.
    let pinned = collect_fixed(4, &rules);
    assert_eq!(
        pinned,
        vec![
            sq(&["1234", "2143", "3412", "4321"]),
            sq(&["1234", "2341", "3412", "4123"]),
            sq(&["1234", "4123", "3412", "2341"]),
            sq(&["1234", "4321", "3412", "2143"]),
        ]
    );
    assert_eq!(count(4, &rules), 96);
    assert_eq!(count(4, &rules), pinned.len() as u64 * 24);
}

#[test]
fn knight_free_squares_at_order_five_are_the_two_rotation_squares() {
    let rules = anti(Piece::Knight, Topology::Flat);
    let pinned = collect_fixed(5, &rules);
    assert_eq!(
        pinned,
        vec![
            sq(&["12345", "23451", "34512", "45123", "51234"]),
            sq(&["12345", "51234", "45123", "34512", "23451"]),
        ]
    );
    // The survivors are exactly the rotations with shift 1 and shift 4.
    let identity = [1, 2, 3, 4, 5];
    let rotations = [
        construct::cyclic_square(&identity, 4).unwrap(),
        construct::cyclic_square(&identity, 1).unwrap(),
    ];
    assert_eq!(pinned, rotations);
    assert_eq!(count(5, &rules), 240);
    assert_eq!(count(5, &rules), pinned.len() as u64 * 120);
}

#[test]
fn queen_free_squares_at_orders_four_and_five() {
    let rules = anti(Piece::Queen, Topology::Flat);
    assert_eq!(count(4, &rules), 0);
    let pinned = collect_fixed(5, &rules);
    assert_eq!(
        pinned,
        vec![
            sq(&["12345", "34512", "51234", "23451", "45123"]),
            sq(&["12345", "45123", "23451", "51234", "34512"]),
        ]
    );
    let identity = [1, 2, 3, 4, 5];
    let rotations = [
        construct::cyclic_square(&identity, 3).unwrap(),
        construct::cyclic_square(&identity, 2).unwrap(),
    ];
    assert_eq!(pinned, rotations);
    assert_eq!(count(5, &rules), pinned.len() as u64 * 120);
}

#[test]
fn queen_free_and_bishop_free_coincide_at_small_orders() {
    // Rows and columns already separate equal symbols in a Latin square,
    // so the queen's extra orthogonal reach adds nothing over the bishop.
    for n in 2..=5 {
        assert_eq!(
            count(n, &anti(Piece::Queen, Topology::Flat)),
            count(n, &anti(Piece::Bishop, Topology::Flat)),
            "order {n}"
        );
    }
}

#[test]
fn modular_nosy_squares_split_into_rotations_and_exceptions() {
    // (total, rotations, the rest) per order; order 4 is the only one
    // below 8 with squares that are not plain row rotations.
    let expected = [
        (3, 12, 12, 0),
        (4, 32, 16, 16),
        (5, 20, 20, 0),
        (6, 24, 24, 0),
        (7, 28, 28, 0),
    ];
    for (n, total, cyclic, noncyclic) in expected {
        let split = classify_modular_consecutive(n, false).unwrap();
        assert_eq!(split.total(), total, "order {n}");
        assert_eq!(split.cyclic_count(), cyclic, "order {n}");
        assert_eq!(split.noncyclic_count(), noncyclic, "order {n}");
    }
}

#[test]
fn the_order_four_exceptions_pinned_to_the_identity_row() {
    let split = classify_modular_consecutive(4, true).unwrap();
    assert_eq!(
        split.noncyclic(),
        &[
            sq(&["1234", "2143", "3412", "4321"]),
            sq(&["1234", "4321", "3412", "2143"]),
        ]
    );
    assert_eq!(split.cyclic_count(), 2);
}

#[test]
fn shy_permutation_tables() {
    let linear = [1u64, 0, 0, 2, 14, 90, 646, 5242];
    let cyclable = [1u64, 0, 0, 0, 10, 60, 462, 3920];
    for (n, &want) in (1..=8).zip(&linear) {
        assert_eq!(
            count_nc_permutations(n, NumberLine::Linear, false),
            want,
            "order {n}"
        );
    }
    for (n, &want) in (1..=8).zip(&cyclable) {
        assert_eq!(
            count_nc_permutations(n, NumberLine::Linear, true),
            want,
            "order {n}"
        );
    }
}

#[test]
fn third_rows_of_knight_free_order_four_squares_are_forced() {
    assert!(third_row_forced());
    let rules = anti(Piece::Knight, Topology::Flat);
    for square in collect_fixed(4, &rules) {
        assert_eq!(square.row(2), &[3, 4, 1, 2]);
    }
}
