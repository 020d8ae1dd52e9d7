use std::fmt;

use enumerate::{EnumerateError, Mode, SearchReport};
use grid_core::Square;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::document::{format_square, Style};
use crate::flags::{EngineFlag, FlagsError, RuleFlags, SearchFlags};

/// A reproducibility record for one search run: everything needed to run
/// the same search again, plus a digest of what it found.
///
/// Replaying a manifest must reproduce the same count and digest; wall
/// time and the library version are informational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    /// The subcommand that ran: `count`, `list`, or `earliest`.
    pub command: String,
    pub order: usize,
    pub rules: RuleFlags,
    pub options: ManifestOptions,
    pub engine: EngineFlag,
    pub count: u64,
    /// Hex SHA-256 over the canonical result text.
    pub digest: String,
    pub nodes_explored: u64,
    pub wall_ms: u64,
    pub version: String,
}

/// The search options that affect results, in their command-line
/// spellings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fix_first_row: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limit: Option<u64>,
    pub budget: u64,
    pub threads: usize,
}

/// Canonical digest of a search outcome: the count in decimal, then each
/// found square in the plain-text format, hashed with SHA-256.
pub fn result_digest(count: u64, squares: &[Square]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(count.to_string().as_bytes());
    hasher.update(b"\n");
    for square in squares {
        hasher.update(format_square(square, Style::Ascii).as_bytes());
    }
    hasher
        .finalize()
        .iter()
        .map(|byte| format!("{byte:02x}"))
        .collect()
}

impl RunManifest {
    /// Records a finished run.
    pub fn from_run(
        command: &str,
        rules: &RuleFlags,
        search: &SearchFlags,
        budget: u64,
        report: &SearchReport,
    ) -> Self {
        RunManifest {
            command: command.to_string(),
            order: search.order,
            rules: rules.clone(),
            options: ManifestOptions {
                fix_first_row: search.fix_first_row.clone(),
                limit: search.limit,
                budget,
                threads: search.threads,
            },
            engine: search.engine,
            count: report.count,
            digest: result_digest(report.count, &report.squares),
            nodes_explored: report.nodes_explored,
            wall_ms: report.wall_time.as_millis() as u64,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// Runs the recorded search again and compares count and digest.
    ///
    /// # Errors
    ///
    /// Fails on an unknown command name, unloadable rule flags, or any
    /// search error — including a blown budget, since the recorded budget
    /// is part of what is being reproduced.
    pub fn replay(&self) -> Result<ReplayReport, ReplayError> {
        let mode = match self.command.as_str() {
            "count" => Mode::Count,
            "list" => Mode::Collect,
            "earliest" => Mode::LexEarliest,
            other => return Err(ReplayError::UnknownCommand(other.to_string())),
        };
        let rules = self.rules.to_rule_set()?;
        let search = SearchFlags {
            order: self.order,
            fix_first_row: self.options.fix_first_row.clone(),
            limit: self.options.limit,
            engine: self.engine,
            budget: Some(self.options.budget),
            threads: self.options.threads,
        };
        let opts = search.to_search_options(mode)?;
        let report = enumerate::enumerate(self.order, &rules, &opts)?;
        Ok(ReplayReport {
            expected_count: self.count,
            actual_count: report.count,
            expected_digest: self.digest.clone(),
            actual_digest: result_digest(report.count, &report.squares),
        })
    }
}

/// What a replay found versus what the manifest promised.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplayReport {
    pub expected_count: u64,
    pub actual_count: u64,
    pub expected_digest: String,
    pub actual_digest: String,
}

impl ReplayReport {
    pub fn matches(&self) -> bool {
        self.expected_count == self.actual_count && self.expected_digest == self.actual_digest
    }
}

/// Why a manifest could not be replayed at all (as opposed to replaying
/// to different results).
#[derive(Debug)]
pub enum ReplayError {
    UnknownCommand(String),
    Flags(FlagsError),
    Search(EnumerateError),
}

impl fmt::Display for ReplayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReplayError::UnknownCommand(name) => write!(f, "unknown command `{name}`"),
            ReplayError::Flags(e) => write!(f, "{e}"),
            ReplayError::Search(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ReplayError {}

impl From<FlagsError> for ReplayError {
    fn from(e: FlagsError) -> Self {
        ReplayError::Flags(e)
    }
}

impl From<EnumerateError> for ReplayError {
    fn from(e: EnumerateError) -> Self {
        ReplayError::Search(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use enumerate::{enumerate, SearchOptions};
    use rules::RuleSet;

    fn latin_flags() -> RuleFlags {
        RuleFlags {
            latin: true,
            ..RuleFlags::default()
        }
    }

    fn count_manifest(order: usize) -> RunManifest {
        let opts = SearchOptions::default();
        let report = enumerate(order, &RuleSet::latin(), &opts).unwrap();
        let search = SearchFlags {
            order,
            fix_first_row: None,
            limit: None,
            engine: EngineFlag::Pruned,
            budget: None,
            threads: 1,
        };
        RunManifest::from_run("count", &latin_flags(), &search, opts.budget, &report)
    }

    #[test]
    fn manifests_round_trip_and_replay() {
        let manifest = count_manifest(4);
        assert_eq!(manifest.count, 576);
        let text = serde_json::to_string_pretty(&manifest).unwrap();
        let back: RunManifest = serde_json::from_str(&text).unwrap();
        assert_eq!(back, manifest);
        let replay = back.replay().unwrap();
        assert!(replay.matches(), "{replay:?}");
    }

    #[test]
    fn tampered_manifests_fail_the_replay() {
        let mut manifest = count_manifest(3);
        manifest.count += 1;
        manifest.digest = result_digest(manifest.count, &[]);
        let replay = manifest.replay().unwrap();
        assert!(!replay.matches());
        assert_eq!(replay.actual_count, 12);
    }

    #[test]
    fn digests_depend_on_squares_not_just_counts() {
        let square = grid_core::make_square(2, vec![1, 2, 2, 1]).unwrap();
        let other = grid_core::make_square(2, vec![2, 1, 1, 2]).unwrap();
        assert_ne!(
            result_digest(1, std::slice::from_ref(&square)),
            result_digest(1, &[other])
        );
        assert_ne!(result_digest(1, &[square]), result_digest(1, &[]));
    }
}
