use grid_core::{make_square, Square, Symbol};

use crate::arith::is_prime;
use crate::{cyclic_square, identity_row, kronecker, ConstructError};

/// A validated pair of distinct odd primes `p < q`, carrying their average
/// `c = (p + q) / 2` — the row increment used by [`bishop_odd_pq`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PQSpec {
    p: usize,
    q: usize,
}

impl PQSpec {
    /// Validates that `p` and `q` are distinct odd primes with `p < q`.
    ///
    /// # Errors
    ///
    /// Returns [`ConstructError::InvalidPQ`] naming the failed condition.
    pub fn new(p: usize, q: usize) -> Result<Self, ConstructError> {
        let invalid = |reason: String| Err(ConstructError::InvalidPQ { reason });
        for value in [p, q] {
            if !is_prime(value) {
                return invalid(format!("{value} is not prime"));
            }
            if value % 2 == 0 {
                return invalid(format!("{value} is not odd"));
            }
        }
        if p >= q {
            return invalid(format!("expected p < q, got p = {p}, q = {q}"));
        }
        Ok(Self { p, q })
    }

    /// The smaller prime.
    pub fn p(&self) -> usize {
        self.p
    }

    /// The larger prime.
    pub fn q(&self) -> usize {
        self.q
    }

    /// The average `(p + q) / 2`; both primes are odd, so this is an
    /// integer, and it is coprime with both `p` and `q`.
    pub fn c(&self) -> usize {
        (self.p + self.q) / 2
    }

    /// The order `p · q` of the square built from this spec.
    pub fn order(&self) -> usize {
        self.p * self.q
    }
}

/// Builds the even-order square in which every symbol fills one wrapped
/// diagonal: the identity first row cycled right by 1. Each symbol's two
/// straight diagonal segments see each other along the opposite diagonal
/// at row distance `n/2`, which makes the square bishop-connected — that
/// cross-link is why even orders are required.
///
/// # Errors
///
/// Returns [`ConstructError::OrderUnsupported`] for odd or zero `n`.
pub fn bishop_even(n: usize) -> Result<Square, ConstructError> {
    if n == 0 || n % 2 != 0 {
        return Err(ConstructError::OrderUnsupported {
            order: n,
            reason: "diagonal segments only reconnect at even orders",
        });
    }
    Ok(cyclic_square(&identity_row(n), 1).expect("1 is coprime with every order"))
}

/// Builds an even-order square in which every cell has a king-adjacent
/// twin: the Kronecker product of an order-`n/2` Latin square with the
/// order-2 square, which pairs each symbol diagonally inside 2×2 blocks.
///
/// # Errors
///
/// Returns [`ConstructError::OrderUnsupported`] for odd or zero `n`.
pub fn king_even(n: usize) -> Result<Square, ConstructError> {
    if n == 0 || n % 2 != 0 {
        return Err(ConstructError::OrderUnsupported {
            order: n,
            reason: "the block pairing needs an even order",
        });
    }
    let half = cyclic_square(&identity_row(n / 2), 1).expect("1 is coprime with every order");
    let pair = make_square(2, vec![1, 2, 2, 1]).expect("2x2 literal");
    Ok(kronecker(&half, &pair).expect("both operands are Latin by construction"))
}

/// Builds the order-`p·q` square in which every cell has a same-symbol
/// cell a bishop's move away: the first row steps by `c − p` and each
/// following row adds `c`, where `c = (p + q) / 2`. Consecutive cells
/// along a SE diagonal then differ by `q` and along a SW diagonal by `p`,
/// so every symbol recurs at stride `p` down each SE diagonal and stride
/// `q` down each SW diagonal.
pub fn bishop_odd_pq(spec: &PQSpec) -> Square {
    let n = spec.order();
    let (c, step) = (spec.c(), spec.c() - spec.p());
    let entries: Vec<Symbol> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (((1 + j * step + i * c) % n) + 1) as Symbol))
        .collect();
    make_square(n, entries).expect("formula emits one symbol per cell in 1..=n")
}
