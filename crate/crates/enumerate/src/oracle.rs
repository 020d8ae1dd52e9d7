use grid_core::{make_square, Symbol};
use rules::{passes, RuleSet};

use crate::engine::pinned_first_row;
use crate::options::{Mode, SearchOptions, SearchReport};
use crate::EnumerateError;

/// The guarded order bound: stacking row permutations is factorial work,
/// so the naive engine stays a cross-check tool for small orders.
const GUARD_ORDER: usize = 5;

/// The deliberately unclever engine: stack full row permutations in
/// ascending order, reject a row only when it repeats a symbol in some
/// column, and push every completed grid through the verifier. It shares
/// no pruning logic with the cell-wise engine, which is the point.
pub(crate) fn run_naive(
    n: usize,
    rules: &RuleSet,
    opts: &SearchOptions,
) -> Result<SearchReport, EnumerateError> {
    if !opts.allow_expensive_oracle {
        if n > GUARD_ORDER {
            return Err(EnumerateError::OracleGuard {
                order: n,
                reason: "order above 5 needs the override",
            });
        }
        if !rules.has_latin() {
            return Err(EnumerateError::OracleGuard {
                order: n,
                reason: "without the Latin rule the column check rejects nothing; use the override",
            });
        }
    }
    let first_row = pinned_first_row(n, &opts.fix_first_row)?;
    let perms = permutations(n);
    let mut run = Naive {
        n,
        rules,
        reject_column_duplicates: rules.has_latin(),
        mode: opts.mode,
        limit: opts.limit,
        budget: opts.budget,
        perms: &perms,
        grid: Vec::with_capacity(n),
        found: SearchReport {
            count: 0,
            squares: Vec::new(),
            nodes_explored: 0,
            wall_time: std::time::Duration::ZERO,
        },
    };
    match &first_row {
        Some(row) => {
            run.grid.push(row.clone());
            run.found.nodes_explored += 1;
            run.stack();
        }
        None => {
            for i in 0..run.perms.len() {
                run.grid.push(run.perms[i].clone());
                run.found.nodes_explored += 1;
                let keep_going = run.stack();
                run.grid.pop();
                if !keep_going {
                    break;
                }
            }
        }
    }
    // `stack` halts for two reasons; only running out of budget is an
    // error, stopping at a limit or a first hit is a normal finish.
    if run.found.nodes_explored > run.budget {
        return Err(EnumerateError::BudgetExceeded { budget: opts.budget });
    }
    let mut report = run.found;
    report.squares.sort();
    Ok(report)
}

struct Naive<'a> {
    n: usize,
    rules: &'a RuleSet,
    reject_column_duplicates: bool,
    mode: Mode,
    limit: Option<u64>,
    budget: u64,
    perms: &'a [Vec<Symbol>],
    grid: Vec<Vec<Symbol>>,
    found: SearchReport,
}

impl Naive<'_> {
    /// Extends the stacked grid by every admissible next row; returns
    /// false once the search should stop (done or over budget).
    fn stack(&mut self) -> bool {
        if self.found.nodes_explored > self.budget {
            return false;
        }
        if self.grid.len() == self.n {
            let cells: Vec<Symbol> = self.grid.iter().flatten().copied().collect();
            let square = make_square(self.n, cells).expect("stacked rows fill the grid");
            if !passes(&square, self.rules) {
                return true;
            }
            self.found.count += 1;
            if self.mode != Mode::Count {
                self.found.squares.push(square);
            }
            let done = self.mode == Mode::LexEarliest
                || self.limit.is_some_and(|max| self.found.count >= max);
            return !done;
        }
        for i in 0..self.perms.len() {
            if self.reject_column_duplicates && self.column_clash(&self.perms[i]) {
                continue;
            }
            self.grid.push(self.perms[i].clone());
            self.found.nodes_explored += 1;
            let keep_going = self.stack();
            self.grid.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn column_clash(&self, candidate: &[Symbol]) -> bool {
        self.grid
            .iter()
            .any(|row| row.iter().zip(candidate).any(|(a, b)| a == b))
    }
}

/// All permutations of `1..=n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<Symbol>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    build(n, &mut current, &mut used, &mut out);
    out
}

fn build(n: usize, current: &mut Vec<Symbol>, used: &mut [bool], out: &mut Vec<Vec<Symbol>>) {
    if current.len() == n {
        out.push(current.clone());
        return;
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        used[v] = true;
        current.push((v + 1) as Symbol);
        build(n, current, used, out);
        current.pop();
        used[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::options::{Engine, FirstRow};
    use crate::{enumerate, EnumerateError};

    #[test]
    fn guard_refuses_large_orders_and_rule_sets_without_latin() {
        let opts = SearchOptions {
            engine: Engine::NaiveOracle,
            ..SearchOptions::default()
        };
        assert!(matches!(
            enumerate(6, &RuleSet::latin(), &opts),
            Err(EnumerateError::OracleGuard { order: 6, .. })
        ));
        let no_latin = RuleSet::new(vec![]).expect("empty set");
        assert!(matches!(
            enumerate(2, &no_latin, &opts),
            Err(EnumerateError::OracleGuard { order: 2, .. })
        ));
        // The override lifts the guard; order 2 without rules means every
        // grid over symbols 1..=2 built from permutation rows.
        let overridden = SearchOptions {
            engine: Engine::NaiveOracle,
            allow_expensive_oracle: true,
            ..SearchOptions::default()
        };
        assert_eq!(enumerate(2, &no_latin, &overridden).unwrap().count, 4);
    }

    #[test]
    fn naive_latin_counts_and_fixed_rows() {
        let opts = SearchOptions {
            engine: Engine::NaiveOracle,
            ..SearchOptions::default()
        };
        assert_eq!(enumerate(4, &RuleSet::latin(), &opts).unwrap().count, 576);
        let fixed = SearchOptions {
            engine: Engine::NaiveOracle,
            fix_first_row: FirstRow::Identity,
            ..SearchOptions::default()
        };
        assert_eq!(enumerate(4, &RuleSet::latin(), &fixed).unwrap().count, 24);
    }

    #[test]
    fn naive_budget_is_enforced() {
        let opts = SearchOptions {
            engine: Engine::NaiveOracle,
            budget: 50,
            ..SearchOptions::default()
        };
        assert_eq!(
            enumerate(5, &RuleSet::latin(), &opts).unwrap_err(),
            EnumerateError::BudgetExceeded { budget: 50 }
        );
    }
}
