//! File formats, run manifests, and the building blocks of the
//! `latinforge` command line.
//!
//! Design notes:
//! - Squares travel as plain text (order, then rows) or as JSON
//!   [`SquareDocument`]s; catalogs are JSON-lines, one document per
//!   line, so they stream and diff cleanly.
//! - Every search the CLI runs can be recorded as a [`RunManifest`] and
//!   replayed later; count plus result digest make silent drift visible.
//! - Rule flags lower to the verifier's rule set in one place
//!   ([`RuleFlags::to_rule_set`]), so the command line, manifests, and
//!   replays cannot disagree about what a flag means.
//! - The binary stays a thin shell: everything testable lives here.

mod document;
mod flags;
mod manifest;
mod repro;

pub use document::{format_square, parse_square, Metadata, ParseError, SquareDocument, Style};
pub use flags::{
    parse_row, AdjacencyFlag, EngineFlag, FlagsError, PieceFlag, RuleFlags, SearchFlags,
    BUDGET_ENV,
};
pub use manifest::{result_digest, ManifestOptions, ReplayError, ReplayReport, RunManifest};
pub use repro::{run_all, RowResult};
