use grid_core::{Square, Symbol};

use crate::arith::gcd;
use crate::{cyclic_square, ConstructError};

/// Builds an odd-order square that is non-consecutive by king's move:
/// the first row steps by +2 modulo `n` (so it reads 1, 3, 5, …), and each
/// later row is the previous one cycled by +1 — or by −2 when an anti-king
/// square is requested, which keeps equal symbols off the diagonals too.
///
/// # Errors
///
/// Returns [`ConstructError::OrderUnsupported`] for even orders, for
/// `n < 7`, and for `n < 9` with `anti_king` (the order-7 anti-king
/// variant does not exist).
pub fn nc_king_odd(n: usize, anti_king: bool) -> Result<Square, ConstructError> {
    if n % 2 == 0 {
        return Err(ConstructError::OrderUnsupported {
            order: n,
            reason: "this construction handles odd orders only",
        });
    }
    if anti_king && n < 9 {
        return Err(ConstructError::OrderUnsupported {
            order: n,
            reason: "odd anti-king variants need order at least 9",
        });
    }
    if n < 7 {
        return Err(ConstructError::OrderUnsupported {
            order: n,
            reason: "odd king-move non-consecutive squares need order at least 7",
        });
    }
    let first_row: Vec<Symbol> = (0..n).map(|j| (1 + (2 * j) % n) as Symbol).collect();
    let shift = if anti_king { -2 } else { 1 };
    // +1 is always coprime; gcd(n, n−2) = gcd(n, 2) = 1 because n is odd.
    Ok(cyclic_square(&first_row, shift).expect("odd order makes both shifts coprime"))
}

/// Builds the even-order king-move non-consecutive square whose first row
/// steps by `k` modulo `n` and whose rows shift by `m`, after checking the
/// validity conditions: `k` and `m` coprime with `n`, `k ≠ ±1`, and
/// `k·m ≠ ±1` (all modulo `n`).
///
/// The same formula with `m ≠ ±1` additionally yields anti-king squares;
/// see [`nc_king_even_params`] for finding such parameters.
///
/// # Errors
///
/// Returns [`ConstructError::InvalidParams`] naming the violated
/// condition.
pub fn nc_king_even(n: usize, k: i64, m: i64) -> Result<Square, ConstructError> {
    if n == 0 || n % 2 != 0 {
        return Err(ConstructError::InvalidParams {
            reason: format!("order {n} is not even"),
        });
    }
    let invalid = |reason: String| Err(ConstructError::InvalidParams { reason });
    let (k_red, m_red) = (k.rem_euclid(n as i64) as usize, m.rem_euclid(n as i64) as usize);
    if gcd(n, k_red) != 1 {
        return invalid(format!("first-row step {k} is not coprime with {n}"));
    }
    if gcd(n, m_red) != 1 {
        return invalid(format!("row shift {m} is not coprime with {n}"));
    }
    if is_unit_mod(k_red, n) {
        return invalid(format!("first-row step {k} is ±1 modulo {n}"));
    }
    if is_unit_mod(k_red * m_red % n, n) {
        return invalid(format!("product of step {k} and shift {m} is ±1 modulo {n}"));
    }
    let first_row: Vec<Symbol> = (0..n)
        .map(|j| (1 + (j * k_red) % n) as Symbol)
        .collect();
    Ok(cyclic_square(&first_row, m_red as i64).expect("m was checked coprime"))
}

/// Searches for the lexicographically least `(m, k)` accepted by
/// [`nc_king_even`], additionally requiring `m ≠ ±1` when an anti-king
/// square is wanted, and returns the pair as `(k, m)`.
///
/// # Errors
///
/// Returns [`ConstructError::InvalidParams`] for odd orders and
/// [`ConstructError::NoParams`] when no pair exists — plain squares
/// require `n > 6`, anti-king ones `n > 12`.
pub fn nc_king_even_params(n: usize, anti_king: bool) -> Result<(i64, i64), ConstructError> {
    if n == 0 || n % 2 != 0 {
        return Err(ConstructError::InvalidParams {
            reason: format!("order {n} is not even"),
        });
    }
    for m in 1..n {
        if gcd(n, m) != 1 || (anti_king && is_unit_mod(m, n)) {
            continue;
        }
        for k in 1..n {
            if gcd(n, k) == 1 && !is_unit_mod(k, n) && !is_unit_mod(k * m % n, n) {
                return Ok((k as i64, m as i64));
            }
        }
    }
    Err(ConstructError::NoParams { order: n })
}

fn is_unit_mod(value: usize, n: usize) -> bool {
    value == 1 % n || value == n - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_construction_first_rows_and_shifts() {
        let seven = nc_king_odd(7, false).unwrap();
        assert_eq!(seven.row(0), &[1, 3, 5, 7, 2, 4, 6]);
        assert_eq!(seven.row(1), &[6, 1, 3, 5, 7, 2, 4]); // right-cycled by 1

        let nine = nc_king_odd(9, true).unwrap();
        assert_eq!(nine.row(0), &[1, 3, 5, 7, 9, 2, 4, 6, 8]);
        assert_eq!(nine.row(1), &[5, 7, 9, 2, 4, 6, 8, 1, 3]); // left-cycled by 2
    }

    #[test]
    fn odd_construction_range_checks() {
        assert!(matches!(
            nc_king_odd(5, false),
            Err(ConstructError::OrderUnsupported { order: 5, .. })
        ));
        assert!(matches!(
            nc_king_odd(7, true),
            Err(ConstructError::OrderUnsupported { order: 7, .. })
        ));
        assert!(matches!(
            nc_king_odd(8, false),
            Err(ConstructError::OrderUnsupported { order: 8, .. })
        ));
        assert!(nc_king_odd(9, false).is_ok());
    }

    #[test]
    fn even_order_8_step_3_matches_the_known_square() {
        let square = nc_king_even(8, 3, 1).unwrap();
        assert_eq!(
            square.rows().map(<[_]>::to_vec).collect::<Vec<_>>(),
            vec![
                vec![1, 4, 7, 2, 5, 8, 3, 6],
                vec![6, 1, 4, 7, 2, 5, 8, 3],
                vec![3, 6, 1, 4, 7, 2, 5, 8],
                vec![8, 3, 6, 1, 4, 7, 2, 5],
                vec![5, 8, 3, 6, 1, 4, 7, 2],
                vec![2, 5, 8, 3, 6, 1, 4, 7],
                vec![7, 2, 5, 8, 3, 6, 1, 4],
                vec![4, 7, 2, 5, 8, 3, 6, 1],
            ]
        );
    }

    #[test]
    fn even_condition_violations_are_named() {
        let reason = |r: Result<Square, ConstructError>| match r {
            Err(ConstructError::InvalidParams { reason }) => reason,
            other => panic!("expected InvalidParams, got {other:?}"),
        };
        assert!(reason(nc_king_even(7, 3, 1)).contains("not even"));
        assert!(reason(nc_king_even(8, 2, 1)).contains("coprime"));
        assert!(reason(nc_king_even(8, 3, 4)).contains("coprime"));
        assert!(reason(nc_king_even(8, 1, 3)).contains("±1"));
        assert!(reason(nc_king_even(8, 3, 5)).contains("product"));
    }

    #[test]
    fn parameter_search_matches_the_theorem_ranges() {
        assert_eq!(nc_king_even_params(8, false), Ok((3, 1)));
        assert_eq!(nc_king_even_params(14, true), Ok((3, 3)));
        for n in [2, 4, 6] {
            assert_eq!(
                nc_king_even_params(n, false),
                Err(ConstructError::NoParams { order: n })
            );
        }
        for n in [8, 10, 12] {
            assert_eq!(
                nc_king_even_params(n, true),
                Err(ConstructError::NoParams { order: n })
            );
        }
    }
}
