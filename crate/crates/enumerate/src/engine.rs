use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use grid_core::{consecutive, make_square, piece_targets, Coord, NumberLine, Piece, Square, Symbol, Topology};
use rules::{passes, Adjacency, Rule, RuleSet};

use crate::options::{Engine, FirstRow, Mode, SearchOptions, SearchReport};
use crate::EnumerateError;

/// Orders above this would overflow the row/column bitmasks; searches this
/// large are far outside desk scale anyway.
const MAX_ORDER: usize = 128;

/// How many locally counted nodes accumulate before the shared budget
/// counter is updated and the abort flag is polled.
const BUDGET_FLUSH: u64 = 1024;

/// Runs one search to completion. This is the crate's entry point; it
/// dispatches to the requested engine.
pub fn enumerate(
    n: usize,
    rules: &RuleSet,
    opts: &SearchOptions,
) -> Result<SearchReport, EnumerateError> {
    if n == 0 || n > MAX_ORDER {
        return Err(EnumerateError::OrderUnsupported { order: n });
    }
    let started = Instant::now();
    let mut report = match opts.engine {
        Engine::Pruned => run_pruned(n, rules, opts),
        Engine::NaiveOracle => crate::oracle::run_naive(n, rules, opts),
    }?;
    report.wall_time = started.elapsed();
    Ok(report)
}

/// The first row as pinned by the options, or `None` for a free search.
///
/// # Errors
///
/// [`EnumerateError::BadFirstRow`] if an explicit row is not a
/// permutation of `1..=n`.
pub(crate) fn pinned_first_row(
    n: usize,
    fix: &FirstRow,
) -> Result<Option<Vec<Symbol>>, EnumerateError> {
    match fix {
        FirstRow::Free => Ok(None),
        FirstRow::Identity => Ok(Some((1..=n as Symbol).collect())),
        FirstRow::Explicit(row) => {
            let mut seen = vec![false; n];
            let valid = row.len() == n
                && row.iter().all(|&v| {
                    (1..=n as Symbol).contains(&v) && !std::mem::replace(&mut seen[v as usize - 1], true)
                });
            if valid {
                Ok(Some(row.clone()))
            } else {
                Err(EnumerateError::BadFirstRow { order: n })
            }
        }
    }
}

/// How a (sub)search ended.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    /// Explored everything it was asked to.
    Exhausted,
    /// Found what it needed (lex-earliest hit or limit reached).
    Stop,
    /// The node budget ran out.
    Abort,
}

/// A monotone pair rule: placing a value can only ever violate it against
/// already-filled cells, so each cell carries the list of its related
/// earlier cells (row-major order guarantees those are filled).
struct PairRule {
    kind: PairKind,
    earlier: Vec<Vec<u32>>,
}

enum PairKind {
    NonConsecutive(NumberLine),
    Consecutive(NumberLine),
    AntiPiece,
}

impl PairRule {
    fn pair_ok(&self, n: usize, a: Symbol, b: Symbol) -> bool {
        match self.kind {
            PairKind::NonConsecutive(line) => !consecutive(a, b, n, line),
            PairKind::Consecutive(line) => consecutive(a, b, n, line),
            PairKind::AntiPiece => a != b,
        }
    }
}

/// An existential rule: every cell must see its own symbol in its target
/// set. It prunes only by failure-detection — once a filled cell's last
/// target fills without producing a match, the branch is dead.
struct RequireRule {
    targets: Vec<Vec<u32>>,
}

/// Immutable per-search data: the rule set compiled against one order.
struct Tables {
    n: usize,
    latin: bool,
    pairs: Vec<PairRule>,
    require: Vec<RequireRule>,
}

impl Tables {
    fn build(n: usize, rules: &RuleSet) -> Tables {
        let mut tables = Tables {
            n,
            latin: false,
            pairs: Vec::new(),
            require: Vec::new(),
        };
        for rule in rules.rules() {
            match rule {
                Rule::Latin => tables.latin = true,
                Rule::NonConsecutive {
                    adjacency,
                    topology,
                    line,
                } => {
                    let piece = match adjacency {
                        Adjacency::OrthogonalStep => Piece::OrthogonalStep,
                        Adjacency::King => Piece::King,
                    };
                    tables.pairs.push(PairRule {
                        kind: PairKind::NonConsecutive(*line),
                        earlier: earlier_lists(n, piece, *topology),
                    });
                }
                Rule::Consecutive { topology, line } => tables.pairs.push(PairRule {
                    kind: PairKind::Consecutive(*line),
                    earlier: earlier_lists(n, Piece::OrthogonalStep, *topology),
                }),
                Rule::AntiPiece { piece, topology } => tables.pairs.push(PairRule {
                    kind: PairKind::AntiPiece,
                    earlier: earlier_lists(n, *piece, *topology),
                }),
                Rule::RequirePiece { piece, topology } => tables.require.push(RequireRule {
                    targets: target_lists(n, *piece, *topology),
                }),
                // Connectivity has no useful placement-time bound; the
                // full verification of every leaf enforces it.
                Rule::StrictPiece { .. } => {}
            }
        }
        tables
    }
}

fn target_lists(n: usize, piece: Piece, topology: Topology) -> Vec<Vec<u32>> {
    let mut lists = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            lists.push(
                piece_targets(piece, Coord::new(r, c), n, topology)
                    .into_iter()
                    .map(|t| (t.row * n + t.col) as u32)
                    .collect(),
            );
        }
    }
    lists
}

fn earlier_lists(n: usize, piece: Piece, topology: Topology) -> Vec<Vec<u32>> {
    target_lists(n, piece, topology)
        .into_iter()
        .enumerate()
        .map(|(i, list)| list.into_iter().filter(|&t| (t as usize) < i).collect())
        .collect()
}

/// Shared cross-thread bookkeeping for one run.
struct Shared {
    budget: u64,
    used: AtomicU64,
    abort: AtomicBool,
}

impl Shared {
    fn new(budget: u64) -> Shared {
        Shared {
            budget,
            used: AtomicU64::new(0),
            abort: AtomicBool::new(false),
        }
    }
}

/// One worker's mutable search state.
struct State<'a> {
    tables: &'a Tables,
    shared: &'a Shared,
    cells: Vec<Symbol>,
    row_mask: Vec<u128>,
    col_mask: Vec<u128>,
    /// Per require rule, per cell: how many of its targets are unfilled.
    remaining: Vec<Vec<u32>>,
    nodes: u64,
    unflushed: u64,
}

impl<'a> State<'a> {
    fn new(tables: &'a Tables, shared: &'a Shared) -> State<'a> {
        let n = tables.n;
        State {
            tables,
            shared,
            cells: vec![0; n * n],
            row_mask: vec![0; n],
            col_mask: vec![0; n],
            remaining: tables
                .require
                .iter()
                .map(|rule| rule.targets.iter().map(|t| t.len() as u32).collect())
                .collect(),
            nodes: 0,
            unflushed: 0,
        }
    }

    /// Whether `v` at cell `i` survives the cheap placement-time checks
    /// against already-filled cells.
    fn candidate_ok(&self, i: usize, v: Symbol) -> bool {
        if self.tables.latin {
            let bit = 1u128 << (v - 1);
            let (r, c) = (i / self.tables.n, i % self.tables.n);
            if self.row_mask[r] & bit != 0 || self.col_mask[c] & bit != 0 {
                return false;
            }
        }
        self.tables.pairs.iter().all(|rule| {
            rule.earlier[i]
                .iter()
                .all(|&j| rule.pair_ok(self.tables.n, v, self.cells[j as usize]))
        })
    }

    /// Commits `v` at cell `i`, updating masks and requirement counters.
    /// Returns false when some cell's requirement just became
    /// unsatisfiable; the placement stays committed either way and must
    /// be undone by [`State::undo`].
    fn commit(&mut self, i: usize, v: Symbol) -> bool {
        self.cells[i] = v;
        let bit = 1u128 << (v - 1);
        let (r, c) = (i / self.tables.n, i % self.tables.n);
        self.row_mask[r] |= bit;
        self.col_mask[c] |= bit;
        let mut alive = true;
        for (rule, remaining) in self.tables.require.iter().zip(&mut self.remaining) {
            for &t in &rule.targets[i] {
                remaining[t as usize] -= 1;
            }
        }
        for (rule, remaining) in self.tables.require.iter().zip(&self.remaining) {
            // The counters that can have hit zero are the placed cell's
            // own and those of its targets; only filled cells with no
            // unfilled targets left can newly fail.
            if remaining[i] == 0 && !satisfied(&self.cells, rule, i) {
                alive = false;
            }
            for &t in &rule.targets[i] {
                let t = t as usize;
                if self.cells[t] != 0 && remaining[t] == 0 && !satisfied(&self.cells, rule, t) {
                    alive = false;
                }
            }
        }
        alive
    }

    fn undo(&mut self, i: usize, v: Symbol) {
        for (rule, remaining) in self.tables.require.iter().zip(&mut self.remaining) {
            for &t in &rule.targets[i] {
                remaining[t as usize] += 1;
            }
        }
        let bit = 1u128 << (v - 1);
        let (r, c) = (i / self.tables.n, i % self.tables.n);
        self.row_mask[r] &= !bit;
        self.col_mask[c] &= !bit;
        self.cells[i] = 0;
    }

    /// Counts one committed node against the budget; returns false when
    /// the run must abort.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.unflushed += 1;
        // This worker's own nodes alone already exceeding the budget is
        // decisive; cross-worker totals are reconciled in batches below.
        if self.nodes > self.shared.budget {
            self.shared.abort.store(true, Ordering::Relaxed);
            return false;
        }
        if self.unflushed >= BUDGET_FLUSH {
            let seen = self.shared.used.fetch_add(self.unflushed, Ordering::Relaxed) + self.unflushed;
            self.unflushed = 0;
            if seen > self.shared.budget {
                self.shared.abort.store(true, Ordering::Relaxed);
            }
            if self.shared.abort.load(Ordering::Relaxed) {
                return false;
            }
        }
        true
    }

    fn flush_nodes(&mut self) {
        self.shared.used.fetch_add(self.unflushed, Ordering::Relaxed);
        self.unflushed = 0;
    }
}

fn satisfied(cells: &[Symbol], rule: &RequireRule, i: usize) -> bool {
    rule.targets[i].iter().any(|&t| cells[t as usize] == cells[i])
}

/// What a worker accumulates; merged after the scoped threads join.
struct Found {
    count: u64,
    squares: Vec<Square>,
}

impl Found {
    fn new() -> Found {
        Found {
            count: 0,
            squares: Vec::new(),
        }
    }
}

/// The run-constant part of a search: what counts as a solution and when
/// to stop reporting them.
struct Goal<'a> {
    rules: &'a RuleSet,
    mode: Mode,
    limit: Option<u64>,
}

/// Depth-first search from cell `pos` with every earlier cell filled.
/// `stop_depth` is one past the last cell to fill (the grid size for a
/// real search, shallower when collecting split prefixes).
fn search(
    state: &mut State<'_>,
    pos: usize,
    stop_depth: usize,
    goal: &Goal<'_>,
    found: &mut Found,
    prefixes: Option<&mut Vec<Vec<Symbol>>>,
) -> Flow {
    if pos == stop_depth {
        if let Some(prefixes) = prefixes {
            prefixes.push(state.cells[..stop_depth].to_vec());
            return Flow::Exhausted;
        }
        let square = make_square(state.tables.n, state.cells.clone())
            .expect("search fills every cell with an in-range symbol");
        if !passes(&square, goal.rules) {
            return Flow::Exhausted;
        }
        found.count += 1;
        match goal.mode {
            Mode::Count => {}
            Mode::Collect | Mode::LexEarliest => found.squares.push(square),
        }
        let done =
            goal.mode == Mode::LexEarliest || goal.limit.is_some_and(|max| found.count >= max);
        return if done { Flow::Stop } else { Flow::Exhausted };
    }
    let mut prefixes = prefixes;
    for v in 1..=state.tables.n as Symbol {
        if !state.candidate_ok(pos, v) {
            continue;
        }
        let alive = state.commit(pos, v);
        if !state.tick() {
            state.undo(pos, v);
            return Flow::Abort;
        }
        let flow = if alive {
            search(state, pos + 1, stop_depth, goal, found, prefixes.as_deref_mut())
        } else {
            Flow::Exhausted
        };
        state.undo(pos, v);
        if flow != Flow::Exhausted {
            return flow;
        }
    }
    Flow::Exhausted
}

fn run_pruned(
    n: usize,
    rules: &RuleSet,
    opts: &SearchOptions,
) -> Result<SearchReport, EnumerateError> {
    let tables = Tables::build(n, rules);
    let shared = Shared::new(opts.budget);
    let mut state = State::new(&tables, &shared);

    // Pin the first row if asked. A pinned row that itself violates the
    // rules means an empty result, not an error.
    let first_row = pinned_first_row(n, &opts.fix_first_row)?;
    let start = first_row.as_ref().map_or(0, |row| row.len());
    if let Some(row) = &first_row {
        for (j, &v) in row.iter().enumerate() {
            if !(state.candidate_ok(j, v) && state.commit(j, v)) {
                return Ok(empty_report());
            }
        }
    }

    // Limited and lex-earliest runs stay single-threaded: which squares
    // they surface must not depend on scheduling.
    let single = opts.threads <= 1
        || opts.limit.is_some()
        || opts.mode == Mode::LexEarliest
        || n * n <= start + n;

    let cell_count = n * n;
    let goal = Goal {
        rules,
        mode: opts.mode,
        limit: opts.limit,
    };
    let mut found = Found::new();
    let flow = if single {
        search(&mut state, start, cell_count, &goal, &mut found, None)
    } else {
        // Split the tree on the completions of the first unpinned row,
        // then let workers claim those prefixes in any order; the
        // subtree partition (hence every total) is scheduling-blind.
        let mut prefixes = Vec::new();
        let split_depth = start + n;
        let flow = search(
            &mut state,
            start,
            split_depth,
            &goal,
            &mut found,
            Some(&mut prefixes),
        );
        if flow == Flow::Abort {
            Flow::Abort
        } else {
            let next_task = AtomicUsize::new(0);
            let results = Mutex::new(Vec::new());
            std::thread::scope(|scope| {
                for _ in 0..opts.threads {
                    scope.spawn(|| {
                        let mut worker = State::new(&tables, &shared);
                        let mut local = Found::new();
                        let mut aborted = false;
                        loop {
                            let task = next_task.fetch_add(1, Ordering::Relaxed);
                            let Some(prefix) = prefixes.get(task) else {
                                break;
                            };
                            for (i, &v) in prefix.iter().enumerate() {
                                let ok = worker.candidate_ok(i, v) && worker.commit(i, v);
                                debug_assert!(ok, "split prefixes satisfy their own checks");
                            }
                            let flow =
                                search(&mut worker, split_depth, cell_count, &goal, &mut local, None);
                            for (i, &v) in prefix.iter().enumerate().rev() {
                                worker.undo(i, v);
                            }
                            if flow == Flow::Abort {
                                aborted = true;
                                break;
                            }
                        }
                        worker.flush_nodes();
                        let mut results = results.lock().expect("no panics hold this lock");
                        results.push((local, worker.nodes, aborted));
                    });
                }
            });
            let mut aborted = false;
            for (local, nodes, worker_aborted) in results.into_inner().expect("workers joined") {
                found.count += local.count;
                found.squares.extend(local.squares);
                state.nodes += nodes;
                aborted |= worker_aborted;
            }
            if aborted {
                Flow::Abort
            } else {
                Flow::Exhausted
            }
        }
    };

    if flow == Flow::Abort {
        return Err(EnumerateError::BudgetExceeded { budget: opts.budget });
    }
    found.squares.sort();
    Ok(SearchReport {
        count: found.count,
        squares: found.squares,
        nodes_explored: state.nodes,
        wall_time: std::time::Duration::ZERO,
    })
}

fn empty_report() -> SearchReport {
    SearchReport {
        count: 0,
        squares: Vec::new(),
        nodes_explored: 0,
        wall_time: std::time::Duration::ZERO,
    }
}
