//! Core vocabulary for constrained Latin square work: the [`Square`] grid
//! type, board [`Topology`], the [`NumberLine`] consecutiveness convention,
//! chess [`Piece`] move generation, and the symmetry [`Transform`]s.
//!
//! Design notes:
//! - **Squares are not validated as Latin.** A [`Square`] only guarantees
//!   shape (n×n) and symbol range (1..=n). Latin-ness is a checkable rule,
//!   so invalid squares stay representable for violation reporting.
//! - **Symbols are 1-based** (`1..=n`), matching the usual write-up of these
//!   puzzles; coordinates are 0-based internally and rendered 1-based in
//!   user-facing messages.
//! - **Everything is immutable and pure.** All values are `Send + Sync`;
//!   operations never mutate their inputs, so concurrent use needs no
//!   synchronization.

mod moves;
mod square;
mod transform;

pub use moves::{consecutive, piece_targets};
pub use square::{make_square, Coord, Square, SquareError, Symbol};
pub use transform::{transform, Transform, TransformError};

/// Board topology: does adjacency stop at the border or wrap around?
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    /// Moves must stay on the board.
    Flat,
    /// The board is a torus; move offsets wrap modulo the order on both
    /// axes, including through corners.
    Toroidal,
}

/// Number-line convention deciding which symbol pairs count as consecutive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumberLine {
    /// `a` and `b` are consecutive iff `|a - b| = 1`.
    Linear,
    /// Symbols are read modulo `n`, so `1` and `n` are also consecutive.
    Modular,
}

/// A move-set descriptor: which cells a piece standing on a cell attacks.
///
/// `Knight`, `King`, and `OrthogonalStep` are single-step pieces; `Bishop`
/// and `Queen` are line pieces with full line of sight. A piece never
/// attacks its own cell, on either topology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Piece {
    /// The eight (±1, ±2) jumps.
    Knight,
    /// The eight surrounding cells.
    King,
    /// Every cell on the two diagonals through the origin.
    Bishop,
    /// Every cell on the diagonals, row, and column through the origin.
    Queen,
    /// The four rook-step neighbors; this is the adjacency used by the
    /// consecutiveness rules rather than a chess piece proper.
    OrthogonalStep,
}
