use std::collections::BTreeSet;

use crate::{Coord, NumberLine, Piece, Symbol, Topology};

const KNIGHT_OFFSETS: [(isize, isize); 8] = [
    (-2, -1),
    (-2, 1),
    (-1, -2),
    (-1, 2),
    (1, -2),
    (1, 2),
    (2, -1),
    (2, 1),
];

const KING_OFFSETS: [(isize, isize); 8] = [
    (-1, -1),
    (-1, 0),
    (-1, 1),
    (0, -1),
    (0, 1),
    (1, -1),
    (1, 0),
    (1, 1),
];

const ORTHO_OFFSETS: [(isize, isize); 4] = [(-1, 0), (0, -1), (0, 1), (1, 0)];

const DIAGONAL_DIRS: [(isize, isize); 4] = [(-1, -1), (-1, 1), (1, -1), (1, 1)];

const ROOK_DIRS: [(isize, isize); 4] = [(-1, 0), (0, -1), (0, 1), (1, 0)];

/// All cells `piece` attacks from `origin` on an order-`n` board.
///
/// `Flat` keeps only offsets that stay on the board; `Toroidal` wraps both
/// axes modulo `n` (corner wraps included). Line pieces (bishop, queen)
/// contribute every cell along their sight lines — on the torus that is the
/// whole wrapped diagonal/rank orbit. The origin itself is never a target,
/// so the returned set is empty on a 1×1 board. The relation is symmetric:
/// `b ∈ piece_targets(p, a)` iff `a ∈ piece_targets(p, b)`.
///
/// # Panics
///
/// Panics if `origin` is not on the board.
pub fn piece_targets(piece: Piece, origin: Coord, n: usize, topology: Topology) -> BTreeSet<Coord> {
    assert!(
        origin.row < n && origin.col < n,
        "origin {origin} out of range for order {n}"
    );
    let mut out = BTreeSet::new();
    let mut visit = |dr: isize, dc: isize| {
        let r = origin.row as isize + dr;
        let c = origin.col as isize + dc;
        let target = match topology {
            Topology::Flat => {
                if r < 0 || c < 0 || r >= n as isize || c >= n as isize {
                    return;
                }
                Coord::new(r as usize, c as usize)
            }
            Topology::Toroidal => {
                Coord::new(r.rem_euclid(n as isize) as usize, c.rem_euclid(n as isize) as usize)
            }
        };
        if target != origin {
            out.insert(target);
        }
    };
    match piece {
        Piece::Knight => {
            for (dr, dc) in KNIGHT_OFFSETS {
                visit(dr, dc);
            }
        }
        Piece::King => {
            for (dr, dc) in KING_OFFSETS {
                visit(dr, dc);
            }
        }
        Piece::OrthogonalStep => {
            for (dr, dc) in ORTHO_OFFSETS {
                visit(dr, dc);
            }
        }
        Piece::Bishop | Piece::Queen => {
            let dirs: &[(isize, isize)] = if piece == Piece::Bishop {
                &DIAGONAL_DIRS
            } else {
                &[DIAGONAL_DIRS, ROOK_DIRS].concat()
            };
            for &(dr, dc) in dirs {
                for t in 1..n as isize {
                    visit(dr * t, dc * t);
                }
            }
        }
    }
    out
}

/// Whether symbols `a` and `b` count as consecutive on an order-`n` board.
///
/// `Linear`: `|a − b| = 1`. `Modular`: additionally `1` and `n` are
/// consecutive (difference `n − 1`). Degenerate orders follow from the same
/// formula: at `n = 1` no pair is consecutive, and at `n = 2` the symbols 1
/// and 2 are consecutive once, not doubly.
///
/// Symmetric in `a` and `b`. Callers must supply symbols in `1..=n`
/// (debug-asserted).
pub fn consecutive(a: Symbol, b: Symbol, n: usize, line: NumberLine) -> bool {
    debug_assert!(a >= 1 && a as usize <= n, "symbol {a} out of range 1..={n}");
    debug_assert!(b >= 1 && b as usize <= n, "symbol {b} out of range 1..={n}");
    let diff = a.abs_diff(b) as usize;
    match line {
        NumberLine::Linear => diff == 1,
        NumberLine::Modular => diff == 1 || (n > 1 && diff == n - 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn targets(piece: Piece, r: usize, c: usize, n: usize, topo: Topology) -> Vec<(usize, usize)> {
        piece_targets(piece, Coord::new(r, c), n, topo)
            .into_iter()
            .map(|t| (t.row, t.col))
            .collect()
    }

    #[test]
    fn corner_knight_flat() {
        assert_eq!(
            targets(Piece::Knight, 0, 0, 3, Topology::Flat),
            vec![(1, 2), (2, 1)]
        );
    }

    #[test]
    fn center_king_flat() {
        assert_eq!(
            targets(Piece::King, 1, 1, 3, Topology::Flat),
            vec![
                (0, 0),
                (0, 1),
                (0, 2),
                (1, 0),
                (1, 2),
                (2, 0),
                (2, 1),
                (2, 2),
            ]
        );
    }

    #[test]
    fn toroidal_bishop_covers_both_wrapped_diagonals() {
        // Order 5 from the corner: the wrapped (t, t) orbit and the wrapped
        // (t, -t) orbit, eight distinct cells, never the origin.
        assert_eq!(
            targets(Piece::Bishop, 0, 0, 5, Topology::Toroidal),
            vec![
                (1, 1),
                (1, 4),
                (2, 2),
                (2, 3),
                (3, 2),
                (3, 3),
                (4, 1),
                (4, 4),
            ]
        );
    }

    #[test]
    fn knight_on_tiny_boards() {
        assert!(targets(Piece::Knight, 0, 0, 2, Topology::Flat).is_empty());
        // On the 1x1 torus every move wraps back to the origin.
        assert!(targets(Piece::Knight, 0, 0, 1, Topology::Toroidal).is_empty());
    }

    #[test]
    fn toroidal_knight_wraps_corners() {
        // On the 3x3 torus a knight's (1, 2) jump from the corner lands on
        // the same cells as a (1, -1) step would; all four wrapped landing
        // spots are diagonal neighbors of the origin.
        assert_eq!(
            targets(Piece::Knight, 0, 0, 3, Topology::Toroidal),
            vec![(1, 1), (1, 2), (2, 1), (2, 2)]
        );
    }

    #[test]
    fn flat_queen_is_bishop_plus_rook_lines() {
        let queen = targets(Piece::Queen, 2, 1, 6, Topology::Flat);
        let mut expect = targets(Piece::Bishop, 2, 1, 6, Topology::Flat);
        for c in 0..6 {
            if c != 1 {
                expect.push((2, c));
            }
        }
        for r in 0..6 {
            if r != 2 {
                expect.push((r, 1));
            }
        }
        expect.sort_unstable();
        assert_eq!(queen, expect);
    }

    #[test]
    fn linear_consecutive() {
        assert!(consecutive(1, 2, 5, NumberLine::Linear));
        assert!(consecutive(2, 1, 5, NumberLine::Linear));
        assert!(!consecutive(1, 5, 5, NumberLine::Linear));
        assert!(!consecutive(2, 4, 5, NumberLine::Linear));
    }

    #[test]
    fn modular_consecutive_wraps_ends() {
        assert!(consecutive(1, 5, 5, NumberLine::Modular));
        assert!(consecutive(5, 1, 5, NumberLine::Modular));
        assert!(!consecutive(2, 4, 5, NumberLine::Modular));
    }

    #[test]
    fn modular_consecutive_degenerate_orders() {
        // n = 1: nothing is consecutive; n = 2: the single pair counts once.
        assert!(!consecutive(1, 1, 1, NumberLine::Modular));
        assert!(consecutive(1, 2, 2, NumberLine::Modular));
    }
}
