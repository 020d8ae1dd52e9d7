//! Cross-checks between the pruned engine and the naive row-stacking
//! engine. The two share no pruning logic, so agreement on counts,
//! square lists, and earliest finds is strong evidence that neither one
//! drops or invents solutions.

mod common;

use common::{anti, nosy, require, ruleset, shy, sq};
use enumerate::{enumerate, Engine, EnumerateError, Mode, SearchOptions};
use grid_core::{NumberLine, Piece, Topology};
use rules::{Rule, RuleSet};

/// Rule sets worth disagreeing over: one of each rule family.
fn catalog() -> Vec<(&'static str, RuleSet)> {
    vec![
        ("latin", RuleSet::latin()),
        ("shy", shy(Topology::Flat, NumberLine::Linear)),
        ("shy torus modular", shy(Topology::Toroidal, NumberLine::Modular)),
        ("nosy modular", nosy(Topology::Flat, NumberLine::Modular)),
        ("anti-knight", anti(Piece::Knight, Topology::Flat)),
        ("anti-king", anti(Piece::King, Topology::Flat)),
        ("anti-queen", anti(Piece::Queen, Topology::Flat)),
        ("require-bishop", require(Piece::Bishop, Topology::Flat)),
        ("require-king", require(Piece::King, Topology::Flat)),
        (
            "strict-knight",
            ruleset(vec![
                Rule::Latin,
                Rule::RequirePiece {
                    piece: Piece::Knight,
                    topology: Topology::Flat,
                },
                Rule::StrictPiece {
                    piece: Piece::Knight,
                    topology: Topology::Flat,
                },
            ]),
        ),
    ]
}

fn run(n: usize, rules: &RuleSet, engine: Engine, mode: Mode) -> enumerate::SearchReport {
    let opts = SearchOptions {
        engine,
        mode,
        ..SearchOptions::default()
    };
    enumerate(n, rules, &opts).expect("search fits the default budget")
}

#[test]
fn engines_agree_on_counts_up_to_order_four() {
    for (name, rules) in catalog() {
        for n in 1..=4 {
            let pruned = run(n, &rules, Engine::Pruned, Mode::Count).count;
            let naive = run(n, &rules, Engine::NaiveOracle, Mode::Count).count;
            assert_eq!(pruned, naive, "{name} at order {n}");
        }
    }
}

#[test]
fn engines_agree_on_counts_at_order_five() {
    for (name, rules) in [
        ("latin", RuleSet::latin()),
        ("shy", shy(Topology::Flat, NumberLine::Linear)),
        ("anti-knight", anti(Piece::Knight, Topology::Flat)),
        ("anti-queen", anti(Piece::Queen, Topology::Flat)),
        ("require-knight", require(Piece::Knight, Topology::Flat)),
    ] {
        let pruned = run(5, &rules, Engine::Pruned, Mode::Count).count;
        let naive = run(5, &rules, Engine::NaiveOracle, Mode::Count).count;
        assert_eq!(pruned, naive, "{name} at order 5");
    }
}

#[test]
fn engines_agree_on_collected_squares() {
    for (name, rules) in catalog() {
        let pruned = run(4, &rules, Engine::Pruned, Mode::Collect).squares;
        let naive = run(4, &rules, Engine::NaiveOracle, Mode::Collect).squares;
        assert_eq!(pruned, naive, "{name} at order 4");
    }
}

#[test]
fn engines_agree_on_the_earliest_square() {
    let knight = require(Piece::Knight, Topology::Flat);
    let pruned = run(4, &knight, Engine::Pruned, Mode::LexEarliest).squares;
    let naive = run(4, &knight, Engine::NaiveOracle, Mode::LexEarliest).squares;
    assert_eq!(pruned, naive);
    assert_eq!(pruned, vec![sq(&["1234", "3412", "2143", "4321"])]);

    let king = require(Piece::King, Topology::Flat);
    assert!(run(3, &king, Engine::Pruned, Mode::LexEarliest).squares.is_empty());
    assert!(run(3, &king, Engine::NaiveOracle, Mode::LexEarliest).squares.is_empty());
}

#[test]
fn counts_nodes_and_squares_are_identical_across_thread_counts() {
    let rules = shy(Topology::Flat, NumberLine::Linear);
    let baseline = enumerate(
        5,
        &rules,
        &SearchOptions {
            mode: Mode::Collect,
            threads: 1,
            ..SearchOptions::default()
        },
    )
    .unwrap();
    assert_eq!(baseline.count, 20);
    for threads in [2, 8] {
        let report = enumerate(
            5,
            &rules,
            &SearchOptions {
                mode: Mode::Collect,
                threads,
                ..SearchOptions::default()
            },
        )
        .unwrap();
        assert_eq!(report.count, baseline.count, "{threads} threads");
        assert_eq!(
            report.nodes_explored, baseline.nodes_explored,
            "{threads} threads"
        );
        assert_eq!(report.squares, baseline.squares, "{threads} threads");
    }

    let latin_counts: Vec<u64> = [1, 2, 8]
        .iter()
        .map(|&threads| {
            enumerate(
                4,
                &RuleSet::latin(),
                &SearchOptions {
                    threads,
                    ..SearchOptions::default()
                },
            )
            .unwrap()
            .count
        })
        .collect();
    assert!(latin_counts.iter().all(|&c| c == 576));
}

#[test]
fn the_naive_engine_is_guarded_but_can_be_overridden() {
    let opts = SearchOptions {
        engine: Engine::NaiveOracle,
        ..SearchOptions::default()
    };
    assert!(matches!(
        enumerate(6, &RuleSet::latin(), &opts),
        Err(EnumerateError::OracleGuard { order: 6, .. })
    ));
    let no_latin = RuleSet::new(vec![Rule::Consecutive {
        topology: Topology::Flat,
        line: NumberLine::Modular,
    }])
    .unwrap();
    assert!(matches!(
        enumerate(3, &no_latin, &opts),
        Err(EnumerateError::OracleGuard { order: 3, .. })
    ));

    // With the override the guard lifts; rows are still permutations, so
    // this counts permutation-row grids with modular-consecutive
    // neighbours rather than all grids.
    let overridden = SearchOptions {
        engine: Engine::NaiveOracle,
        allow_expensive_oracle: true,
        ..SearchOptions::default()
    };
    let free = enumerate(3, &no_latin, &overridden).unwrap().count;
    let latin = enumerate(
        3,
        &nosy(Topology::Flat, NumberLine::Modular),
        &overridden,
    )
    .unwrap()
    .count;
    // At order 3 any two distinct symbols are modular-consecutive, so the
    // constraint forbids exactly the equal vertical pairs: adjacent rows
    // must disagree everywhere, and each permutation has two such
    // companions.
    assert_eq!(free, 6 * 2 * 2);
    assert_eq!(latin, 12);
}

#[test]
fn limits_agree_between_engines() {
    let opts = |engine| SearchOptions {
        engine,
        mode: Mode::Collect,
        limit: Some(10),
        ..SearchOptions::default()
    };
    let pruned = enumerate(4, &RuleSet::latin(), &opts(Engine::Pruned)).unwrap();
    let naive = enumerate(4, &RuleSet::latin(), &opts(Engine::NaiveOracle)).unwrap();
    assert_eq!(pruned.count, 10);
    assert_eq!(naive.count, 10);
    // Both walk in row-major lexicographic order, so the first ten match.
    assert_eq!(pruned.squares, naive.squares);
}
