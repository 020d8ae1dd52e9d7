use std::collections::BTreeMap;
use std::fmt;

use grid_core::{make_square, Square, Symbol};
use serde::{Deserialize, Serialize};

/// A square plus optional context, as stored on disk.
///
/// The plain-text format carries only the grid; the JSON format carries
/// the whole document, metadata included. Catalogs are streamed as one
/// JSON document per line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareDocument {
    pub order: usize,
    pub rows: Vec<Vec<Symbol>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

/// Free-form provenance for a stored square.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    /// The rule set the square was generated or checked against.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rules: Option<String>,
    /// Name of the construction that produced the square.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    /// Construction parameters, as printable key/value pairs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameters: Option<BTreeMap<String, String>>,
    /// Where the square came from (tool name, by-hand, ...).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl SquareDocument {
    pub fn new(square: &Square) -> Self {
        SquareDocument {
            order: square.order(),
            rows: square.rows().map(<[Symbol]>::to_vec).collect(),
            metadata: None,
        }
    }

    pub fn with_metadata(square: &Square, metadata: Metadata) -> Self {
        SquareDocument {
            metadata: Some(metadata),
            ..SquareDocument::new(square)
        }
    }

    /// Rebuilds the in-memory square, re-checking every shape invariant.
    ///
    /// # Errors
    ///
    /// Returns a [`ParseError`] naming the first offending row when the
    /// row count, a row length, or a symbol does not fit `order`.
    pub fn to_square(&self) -> Result<Square, ParseError> {
        if self.rows.len() != self.order {
            return Err(ParseError {
                line: 0,
                reason: format!(
                    "document declares order {} but holds {} rows",
                    self.order,
                    self.rows.len()
                ),
            });
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.order {
                return Err(ParseError {
                    line: 0,
                    reason: format!(
                        "row {} holds {} entries, expected {}",
                        i + 1,
                        row.len(),
                        self.order
                    ),
                });
            }
        }
        let cells: Vec<Symbol> = self.rows.iter().flatten().copied().collect();
        make_square(self.order, cells).map_err(|e| ParseError {
            line: 0,
            reason: e.to_string(),
        })
    }
}

/// Output styles for [`format_square`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// First line the order, then one line of space-separated symbols
    /// per row, top to bottom.
    Ascii,
    /// A single-line JSON [`SquareDocument`] without metadata.
    Json,
}

/// Why a piece of text is not a square.
///
/// `line` is 1-based; errors that concern the document as a whole (JSON
/// shape mismatches) report line 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.reason)
        } else {
            write!(f, "line {}: {}", self.line, self.reason)
        }
    }
}

impl std::error::Error for ParseError {}

/// Renders a square in the requested style, always ending in a newline.
pub fn format_square(square: &Square, style: Style) -> String {
    match style {
        Style::Ascii => {
            let mut out = format!("{}\n", square.order());
            for row in square.rows() {
                let line: Vec<String> = row.iter().map(|s| s.to_string()).collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
            out
        }
        Style::Json => {
            let doc = SquareDocument::new(square);
            let mut out = serde_json::to_string(&doc).expect("document serializes");
            out.push('\n');
            out
        }
    }
}

/// Parses a square from either format: JSON when the text opens with a
/// brace, the plain-text grid otherwise.
///
/// # Errors
///
/// Returns a [`ParseError`] naming the first offending line. Symbol range
/// errors surface on the line holding the symbol; a wrong row count
/// surfaces on the first line past the expected grid.
pub fn parse_square(text: &str) -> Result<Square, ParseError> {
    if text.trim_start().starts_with('{') {
        let doc: SquareDocument = serde_json::from_str(text).map_err(|e| ParseError {
            line: e.line(),
            reason: e.to_string(),
        })?;
        return doc.to_square();
    }
    parse_ascii(text)
}

fn parse_ascii(text: &str) -> Result<Square, ParseError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| ParseError {
        line: 1,
        reason: "empty input, expected the order on the first line".into(),
    })?;
    let order: usize = header.trim().parse().map_err(|_| ParseError {
        line: 1,
        reason: format!("expected the order, found `{}`", header.trim()),
    })?;

    let mut cells: Vec<Symbol> = Vec::with_capacity(order * order);
    let mut rows_read = 0;
    for (index, line) in &mut lines {
        let line_no = index + 1;
        if line.trim().is_empty() {
            // Blank lines are ignored wherever they appear.
            continue;
        }
        if rows_read == order {
            return Err(ParseError {
                line: line_no,
                reason: format!("unexpected content after {order} rows"),
            });
        }
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != order {
            return Err(ParseError {
                line: line_no,
                reason: format!("expected {} entries, found {}", order, entries.len()),
            });
        }
        for entry in entries {
            let symbol: Symbol = entry.parse().map_err(|_| ParseError {
                line: line_no,
                reason: format!("`{entry}` is not a symbol"),
            })?;
            if symbol < 1 || symbol as usize > order {
                return Err(ParseError {
                    line: line_no,
                    reason: format!("symbol {symbol} is outside 1..={order}"),
                });
            }
            cells.push(symbol);
        }
        rows_read += 1;
    }
    if rows_read != order {
        return Err(ParseError {
            line: rows_read + 2,
            reason: format!("expected {order} rows, found {rows_read}"),
        });
    }
    make_square(order, cells).map_err(|e| ParseError {
        line: 0,
        reason: e.to_string(),
    })
}
