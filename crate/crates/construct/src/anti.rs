use grid_core::Square;

use crate::arith::{gcd, is_prime, smallest_prime_factor};
use crate::{cyclic_square, identity_row, ConstructError};

/// Reports whether a cyclic square of order `n` with row shift `k` avoids
/// repeating any symbol along every toroidal queen line: that holds exactly
/// when `k − 1`, `k`, and `k + 1` are all coprime with `n`.
///
/// The shift itself being coprime keeps columns repeat-free, and the two
/// neighbours control the two diagonal directions — equal symbols sit a
/// knight-like stride apart on a diagonal iff `t(k ∓ 1) ≡ 0 (mod n)` has a
/// solution `0 < t < n`.
///
/// # Panics
///
/// Panics unless `1 <= k < n`.
pub fn anti_queen_shift_valid(n: usize, k: usize) -> bool {
    assert!(k >= 1 && k < n, "shift must satisfy 1 <= k < n");
    gcd(n, k) == 1 && gcd(n, k - 1) == 1 && gcd(n, k + 1) == 1
}

/// Builds a square that avoids symbol repeats along king lines (even on
/// the torus) but repeats along some queen line, witnessing that the two
/// conditions differ. Works for composite orders above 6: the identity
/// first row is cycled by a shift `k` chosen strictly inside `(2, n − 2)`
/// and coprime with `n`, but with `gcd(n, k − 1) > 1` or
/// `gcd(n, k + 1) > 1` so one diagonal direction fails.
///
/// # Errors
///
/// Returns [`ConstructError::OrderUnsupported`] for `n <= 6` or prime `n`
/// (prime orders make every coprime shift anti-queen, so no witness of
/// this shape exists).
pub fn anti_king_not_queen(n: usize) -> Result<Square, ConstructError> {
    if n <= 6 {
        return Err(ConstructError::OrderUnsupported {
            order: n,
            reason: "king/queen separation needs order above 6",
        });
    }
    if is_prime(n) {
        return Err(ConstructError::OrderUnsupported {
            order: n,
            reason: "prime orders admit no cyclic king/queen separation",
        });
    }
    let k = if n % 2 == 0 {
        // Even n: the least shift in (2, n − 2) coprime with n. Such a
        // shift is odd, so both neighbours k ± 1 are even and share the
        // factor 2 with n, breaking both diagonal directions.
        (3..=n - 3)
            .find(|&k| gcd(n, k) == 1)
            .expect("composite even orders above 6 always have such a shift")
    } else {
        // Odd n: one more than the smallest prime factor p, so that
        // gcd(n, k − 1) = p > 1. Every prime factor of k = p + 1 is at
        // most (p + 1) / 2 < p (k is even, n odd), so gcd(n, k) = 1, and
        // p ≤ √n keeps k strictly inside (2, n − 2).
        smallest_prime_factor(n) + 1
    };
    cyclic_square(&identity_row(n), k as i64)
}
