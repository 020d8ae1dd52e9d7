use std::time::Duration;

use grid_core::{Square, Symbol};

/// What the first row is pinned to before the search starts.
///
/// Fixing the first row exploits relabel symmetry: for relabel-invariant
/// rule sets the total count is the fixed count times `n!`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum FirstRow {
    /// Search over all first rows.
    #[default]
    Free,
    /// Pin the first row to `1 2 … n`.
    Identity,
    /// Pin the first row to the given permutation of `1..=n`.
    Explicit(Vec<Symbol>),
}

/// What the search produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Count matching squares without keeping them.
    #[default]
    Count,
    /// Count and keep every matching square (sorted row-major).
    Collect,
    /// Stop at the first matching square in row-major lexicographic
    /// order; ascending candidate order makes the first leaf the answer.
    LexEarliest,
}

/// Which search implementation runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Cell-by-cell backtracking with incremental rule pruning and a full
    /// verification of every leaf.
    #[default]
    Pruned,
    /// Row-permutation stacking with column-duplicate rejection and
    /// nothing else — every stacked square goes through the verifier.
    /// Deliberately unclever, as a cross-check on the pruned engine;
    /// guarded to `n ≤ 5` with `Latin` present unless overridden.
    NaiveOracle,
}

/// Everything configurable about one search run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// First-row pinning (see [`FirstRow`]).
    pub fix_first_row: FirstRow,
    /// Stop after this many matches. Limited runs execute on one thread
    /// so that *which* squares are found stays deterministic.
    pub limit: Option<u64>,
    /// What to produce (see [`Mode`]).
    pub mode: Mode,
    /// Which implementation to run (see [`Engine`]).
    pub engine: Engine,
    /// Abort with [`crate::EnumerateError::BudgetExceeded`] after this
    /// many node expansions.
    pub budget: u64,
    /// Worker threads for the pruned engine; `0` and `1` both mean
    /// single-threaded. Results are identical for every thread count.
    pub threads: usize,
    /// Lets the naive engine run outside its `n ≤ 5`-with-`Latin` guard.
    pub allow_expensive_oracle: bool,
}

/// The default node budget: generous for desk-scale searches, small
/// enough to stop runaway spaces in seconds to minutes.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            fix_first_row: FirstRow::Free,
            limit: None,
            mode: Mode::Count,
            engine: Engine::Pruned,
            budget: DEFAULT_BUDGET,
            threads: 1,
            allow_expensive_oracle: false,
        }
    }
}

impl SearchOptions {
    /// Default options with the given mode.
    pub fn for_mode(mode: Mode) -> Self {
        SearchOptions {
            mode,
            ..SearchOptions::default()
        }
    }
}

/// The outcome of a finished search.
#[derive(Debug, Clone)]
pub struct SearchReport {
    /// How many squares matched (truncated only by an explicit limit).
    pub count: u64,
    /// The matching squares in row-major lexicographic order; empty in
    /// [`Mode::Count`].
    pub squares: Vec<Square>,
    /// How many cell placements the search committed.
    pub nodes_explored: u64,
    /// Wall-clock duration of the run.
    pub wall_time: Duration,
}
