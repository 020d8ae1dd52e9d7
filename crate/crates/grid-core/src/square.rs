use std::fmt;

/// A cell value. Symbols are 1-based: a square of order `n` holds `1..=n`.
pub type Symbol = u16;

/// A 0-based cell position; `row` and `col` must both be below the order of
/// the square the coordinate is used with.
///
/// Coordinates render 1-based in messages (`Display` prints `(row 2, col 1)`
/// for `Coord { row: 1, col: 0 }`), matching the 1-based convention of the
/// surrounding literature while keeping the arithmetic 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coord {
    /// 0-based row index, counted from the top.
    pub row: usize,
    /// 0-based column index, counted from the left.
    pub col: usize,
}

impl Coord {
    /// Creates a coordinate from 0-based row and column indices.
    pub fn new(row: usize, col: usize) -> Self {
        Coord { row, col }
    }
}

impl From<(usize, usize)> for Coord {
    fn from((row, col): (usize, usize)) -> Self {
        Coord { row, col }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(row {}, col {})", self.row + 1, self.col + 1)
    }
}

/// An order-`n` grid of symbols `1..=n`, stored row-major.
///
/// Shape and symbol range are invariants; Latin-ness is **not** — partial
/// and invalid squares must remain representable so a verifier can report
/// their violations. The derived `Ord` compares `(order, cells)`, so among
/// squares of one order it is exactly the row-major lexicographic order
/// used for "lexicographically earliest" claims.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square {
    order: usize,
    cells: Vec<Symbol>,
}

/// Why a sequence of entries does not form a [`Square`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquareError {
    /// The entry sequence does not hold exactly `n²` values.
    WrongLength {
        /// `n²` for the requested order.
        expected: usize,
        /// Length actually supplied.
        got: usize,
    },
    /// An entry lies outside `1..=n`.
    SymbolOutOfRange {
        /// Position of the offending entry.
        at: Coord,
        /// The offending value.
        value: Symbol,
    },
}

impl fmt::Display for SquareError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SquareError::WrongLength { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
            SquareError::SymbolOutOfRange { at, value } => {
                write!(f, "symbol {value} at {at} is outside the square's range")
            }
        }
    }
}

impl std::error::Error for SquareError {}

/// Builds a [`Square`] of order `n` from row-major `entries`.
///
/// This is the only way to construct a `Square`, so every square in the
/// system satisfies the shape and range invariants.
///
/// # Errors
///
/// [`SquareError::WrongLength`] unless `entries.len() == n²`;
/// [`SquareError::SymbolOutOfRange`] (reporting the first offender in
/// row-major order) unless every entry is in `1..=n`.
pub fn make_square(order: usize, entries: Vec<Symbol>) -> Result<Square, SquareError> {
    let expected = order * order;
    if entries.len() != expected {
        return Err(SquareError::WrongLength {
            expected,
            got: entries.len(),
        });
    }
    for (i, &value) in entries.iter().enumerate() {
        if value == 0 || value as usize > order {
            return Err(SquareError::SymbolOutOfRange {
                at: Coord::new(i / order, i % order),
                value,
            });
        }
    }
    Ok(Square {
        order,
        cells: entries,
    })
}

impl Square {
    /// Builds a square from explicit rows; a convenience wrapper around
    /// [`make_square`] with the same validation.
    ///
    /// # Errors
    ///
    /// As for [`make_square`]; ragged rows surface as `WrongLength`.
    pub fn from_rows(rows: &[Vec<Symbol>]) -> Result<Square, SquareError> {
        let order = rows.len();
        let entries: Vec<Symbol> = rows.iter().flatten().copied().collect();
        make_square(order, entries)
    }

    /// The order `n`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// All cells, row-major; the cell at `(r, c)` is at index `r * n + c`.
    pub fn cells(&self) -> &[Symbol] {
        &self.cells
    }

    /// The symbol at `at`.
    ///
    /// # Panics
    ///
    /// Panics if `at` is out of range for this order.
    pub fn get(&self, at: Coord) -> Symbol {
        assert!(
            at.row < self.order && at.col < self.order,
            "coordinate {at} out of range for order {}",
            self.order
        );
        self.cells[at.row * self.order + at.col]
    }

    /// Row `r` as a slice.
    ///
    /// # Panics
    ///
    /// Panics if `r >= n`.
    pub fn row(&self, r: usize) -> &[Symbol] {
        assert!(r < self.order, "row {r} out of range");
        &self.cells[r * self.order..(r + 1) * self.order]
    }

    /// Iterates over the rows, top to bottom.
    pub fn rows(&self) -> impl Iterator<Item = &[Symbol]> {
        self.cells.chunks(self.order)
    }

    /// Every valid coordinate, in row-major order.
    pub fn coords(&self) -> impl Iterator<Item = Coord> + '_ {
        let n = self.order;
        (0..n * n).map(move |i| Coord::new(i / n, i % n))
    }
}

impl fmt::Display for Square {
    /// Rows top to bottom, symbols space-separated; no trailing newline.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}
