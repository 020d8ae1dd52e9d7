use grid_core::{consecutive, NumberLine, Symbol};
use rules::cyclable;

/// Counts permutations of `1..=n` in which no two adjacent entries are
/// consecutive on the given number line.
///
/// With `cyclable_only` set, a permutation is kept only when cycling it
/// through every rotation keeps the non-consecutive property, including
/// across the wrap-around seam — the test a first row must pass before a
/// shifted square built from it can hope to avoid consecutive neighbours
/// in its columns.
///
/// Design notes:
/// - Backtracking places symbols left to right and prunes as soon as a
///   placement sits next to a consecutive one, so the walk never visits
///   a doomed prefix.
/// - The leaf test for cyclability is delegated to the verifier crate
///   rather than re-derived here, keeping the two routes independent.
pub fn count_nc_permutations(n: usize, line: NumberLine, cyclable_only: bool) -> u64 {
    let mut perm: Vec<Symbol> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    place(n, line, cyclable_only, &mut perm, &mut used)
}

fn place(
    n: usize,
    line: NumberLine,
    cyclable_only: bool,
    perm: &mut Vec<Symbol>,
    used: &mut [bool],
) -> u64 {
    if perm.len() == n {
        if cyclable_only && !cyclable(perm, line).expect("built from 1..=n") {
            return 0;
        }
        return 1;
    }
    let mut total = 0;
    for v in 1..=n {
        if used[v] {
            continue;
        }
        let symbol = v as Symbol;
        if let Some(&last) = perm.last() {
            if consecutive(last, symbol, n, line) {
                continue;
            }
        }
        used[v] = true;
        perm.push(symbol);
        total += place(n, line, cyclable_only, perm, used);
        perm.pop();
        used[v] = false;
    }
    total
}
