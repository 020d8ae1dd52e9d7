//! Helpers shared by the integration tests. Each test file is its own
//! crate, so not every helper is used by every file.
#![allow(dead_code)]

use grid_core::{transform, Square, Symbol, Transform};

/// Parses rows of single digits into a square, e.g. `sq(&["12", "21"])`.
pub fn sq(rows: &[&str]) -> Square {
    let parsed: Vec<Vec<Symbol>> = rows
        .iter()
        .map(|row| {
            row.chars()
                .map(|ch| ch.to_digit(10).expect("digit") as Symbol)
                .collect()
        })
        .collect();
    Square::from_rows(&parsed).expect("test rows form a square")
}

/// Enumerates every Latin square of order `n` by backtracking over cells
/// with row and column bitmasks. Only sensible for small `n` (the count
/// grows as 1, 2, 12, 576, …).
pub fn all_latin_squares(n: usize) -> Vec<Square> {
    let mut out = Vec::new();
    let mut cells = vec![0 as Symbol; n * n];
    let mut row_used = vec![0u32; n];
    let mut col_used = vec![0u32; n];
    fill(n, 0, &mut cells, &mut row_used, &mut col_used, &mut out);
    out
}

fn fill(
    n: usize,
    at: usize,
    cells: &mut Vec<Symbol>,
    row_used: &mut [u32],
    col_used: &mut [u32],
    out: &mut Vec<Square>,
) {
    if at == n * n {
        out.push(grid_core::make_square(n, cells.clone()).expect("filled grid"));
        return;
    }
    let (r, c) = (at / n, at % n);
    for v in 0..n as u32 {
        let bit = 1 << v;
        if row_used[r] & bit != 0 || col_used[c] & bit != 0 {
            continue;
        }
        row_used[r] |= bit;
        col_used[c] |= bit;
        cells[at] = (v + 1) as Symbol;
        fill(n, at + 1, cells, row_used, col_used, out);
        row_used[r] &= !bit;
        col_used[c] &= !bit;
    }
}

/// Whether `a` can be turned into `b` by one of the eight board symmetries
/// (rotations, reflections, transposes) followed by some relabeling of the
/// symbols. The relabeling, if any, is forced cell-by-cell, so no search
/// over permutations is needed.
pub fn equivalent_under_symmetry(a: &Square, b: &Square) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let mut images = Vec::with_capacity(8);
    let transposed = transform(a, &Transform::Transpose).expect("transpose is total");
    for base in [a.clone(), transposed] {
        let mut current = base;
        for _ in 0..4 {
            let next = transform(&current, &Transform::Rotate90).expect("rotation is total");
            images.push(current);
            current = next;
        }
    }
    images.iter().any(|image| relabels_onto(image, b))
}

/// Whether some symbol permutation maps `a` onto `b` cell-for-cell.
fn relabels_onto(a: &Square, b: &Square) -> bool {
    let n = a.order();
    let mut map: Vec<Option<Symbol>> = vec![None; n];
    let mut target_taken = vec![false; n];
    for (&from, &to) in a.cells().iter().zip(b.cells()) {
        match map[from as usize - 1] {
            Some(mapped) => {
                if mapped != to {
                    return false;
                }
            }
            None => {
                if std::mem::replace(&mut target_taken[to as usize - 1], true) {
                    return false;
                }
                map[from as usize - 1] = Some(to);
            }
        }
    }
    true
}
