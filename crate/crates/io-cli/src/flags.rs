use std::fmt;

use clap::ValueEnum;
use enumerate::{Engine, FirstRow, SearchOptions, DEFAULT_BUDGET};
use grid_core::{NumberLine, Piece, Symbol, Topology};
use rules::{Adjacency, Rule, RuleSet};
use serde::{Deserialize, Serialize};

/// Environment variable overriding the default node budget when no
/// `--budget` flag is given.
pub const BUDGET_ENV: &str = "LATINFORGE_BUDGET";

/// The rule-selection flags shared by `check`, `count`, `list`, and
/// `earliest`. `--toroidal` and `--modular` are global modifiers: they
/// retune every adjacency and consecutiveness flag in the invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq, clap::Args, Serialize, Deserialize)]
pub struct RuleFlags {
    /// Require every row and column to be a permutation of 1..=n.
    #[arg(long)]
    #[serde(default)]
    pub latin: bool,

    /// Forbid consecutive symbols in adjacent cells; the optional value
    /// widens adjacency from orthogonal steps to king moves.
    #[arg(long, value_name = "ADJACENCY", num_args = 0..=1, default_missing_value = "step")]
    #[serde(default)]
    pub nonconsecutive: Option<AdjacencyFlag>,

    /// Require consecutive symbols in all orthogonally adjacent cells.
    #[arg(long)]
    #[serde(default)]
    pub consecutive: bool,

    /// Wrap adjacency around the board edges.
    #[arg(long)]
    #[serde(default)]
    pub toroidal: bool,

    /// Treat 1 and n as consecutive symbols.
    #[arg(long)]
    #[serde(default)]
    pub modular: bool,

    /// Forbid equal symbols one piece-move apart (repeatable).
    #[arg(long, value_name = "PIECE")]
    #[serde(default)]
    pub anti: Vec<PieceFlag>,

    /// Require every cell to see an equal symbol one piece-move away
    /// (repeatable).
    #[arg(long, value_name = "PIECE")]
    #[serde(default)]
    pub require: Vec<PieceFlag>,

    /// Require each symbol's cells to form one piece-move component
    /// (repeatable).
    #[arg(long, value_name = "PIECE")]
    #[serde(default)]
    pub strict: Vec<PieceFlag>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdjacencyFlag {
    Step,
    King,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PieceFlag {
    Knight,
    King,
    Queen,
    Bishop,
}

impl From<PieceFlag> for Piece {
    fn from(flag: PieceFlag) -> Piece {
        match flag {
            PieceFlag::Knight => Piece::Knight,
            PieceFlag::King => Piece::King,
            PieceFlag::Queen => Piece::Queen,
            PieceFlag::Bishop => Piece::Bishop,
        }
    }
}

impl RuleFlags {
    pub fn topology(&self) -> Topology {
        if self.toroidal {
            Topology::Toroidal
        } else {
            Topology::Flat
        }
    }

    pub fn line(&self) -> NumberLine {
        if self.modular {
            NumberLine::Modular
        } else {
            NumberLine::Linear
        }
    }

    /// Lowers the flags to a rule set.
    ///
    /// # Errors
    ///
    /// Rejects an invocation that selects no rule at all, and passes
    /// through the rule-set error for repeated rules.
    pub fn to_rule_set(&self) -> Result<RuleSet, FlagsError> {
        let mut selected = Vec::new();
        if self.latin {
            selected.push(Rule::Latin);
        }
        if let Some(adjacency) = self.nonconsecutive {
            selected.push(Rule::NonConsecutive {
                adjacency: match adjacency {
                    AdjacencyFlag::Step => Adjacency::OrthogonalStep,
                    AdjacencyFlag::King => Adjacency::King,
                },
                topology: self.topology(),
                line: self.line(),
            });
        }
        if self.consecutive {
            selected.push(Rule::Consecutive {
                topology: self.topology(),
                line: self.line(),
            });
        }
        for &piece in &self.anti {
            selected.push(Rule::AntiPiece {
                piece: piece.into(),
                topology: self.topology(),
            });
        }
        for &piece in &self.require {
            selected.push(Rule::RequirePiece {
                piece: piece.into(),
                topology: self.topology(),
            });
        }
        for &piece in &self.strict {
            selected.push(Rule::StrictPiece {
                piece: piece.into(),
                topology: self.topology(),
            });
        }
        if selected.is_empty() {
            return Err(FlagsError::NoRules);
        }
        RuleSet::new(selected).map_err(|e| FlagsError::BadRuleSet(e.to_string()))
    }
}

/// The search-tuning flags shared by `count`, `list`, and `earliest`.
#[derive(Debug, Clone, clap::Args)]
pub struct SearchFlags {
    /// Order of the squares to search for.
    #[arg(short = 'n', long = "order", value_name = "N")]
    pub order: usize,

    /// Pin the first row; without a value it is pinned to 1 2 .. n.
    #[arg(long, value_name = "PERM", num_args = 0..=1, default_missing_value = "identity")]
    pub fix_first_row: Option<String>,

    /// Stop after this many squares.
    #[arg(long, value_name = "N")]
    pub limit: Option<u64>,

    /// Search engine to run.
    #[arg(long, value_enum, default_value_t = EngineFlag::Pruned)]
    pub engine: EngineFlag,

    /// Node budget; exceeding it is an error, not a truncation.
    #[arg(long, value_name = "NODES")]
    pub budget: Option<u64>,

    /// Worker threads for the pruned engine.
    #[arg(long, value_name = "COUNT", default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EngineFlag {
    Pruned,
    Oracle,
}

impl From<EngineFlag> for Engine {
    fn from(flag: EngineFlag) -> Engine {
        match flag {
            EngineFlag::Pruned => Engine::Pruned,
            EngineFlag::Oracle => Engine::NaiveOracle,
        }
    }
}

impl SearchFlags {
    /// Lowers the flags to engine options, resolving the budget from the
    /// flag, the `LATINFORGE_BUDGET` environment variable, or the
    /// default, in that order.
    ///
    /// # Errors
    ///
    /// Rejects an unparseable environment budget or first-row value.
    pub fn to_search_options(&self, mode: enumerate::Mode) -> Result<SearchOptions, FlagsError> {
        Ok(SearchOptions {
            fix_first_row: match &self.fix_first_row {
                None => FirstRow::Free,
                Some(value) if value == "identity" => FirstRow::Identity,
                Some(value) => FirstRow::Explicit(parse_row(value)?),
            },
            limit: self.limit,
            mode,
            engine: self.engine.into(),
            budget: match self.budget {
                Some(budget) => budget,
                None => budget_from_env()?,
            },
            threads: self.threads,
            allow_expensive_oracle: false,
        })
    }
}

fn budget_from_env() -> Result<u64, FlagsError> {
    match std::env::var(BUDGET_ENV) {
        Ok(value) => value
            .trim()
            .parse()
            .map_err(|_| FlagsError::BadEnvBudget(value)),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// Parses a first-row value: space- or comma-separated symbols, or a
/// compact digit string like `2143`.
pub fn parse_row(value: &str) -> Result<Vec<Symbol>, FlagsError> {
    let tokens: Vec<&str> = value
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    let bad = |t: &str| FlagsError::BadRow(format!("`{t}` is not a symbol"));
    if tokens.len() == 1 && tokens[0].len() > 1 && tokens[0].chars().all(|c| c.is_ascii_digit()) {
        return tokens[0]
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as Symbol)
                    .ok_or_else(|| bad(&c.to_string()))
            })
            .collect();
    }
    if tokens.is_empty() {
        return Err(FlagsError::BadRow("empty row".into()));
    }
    tokens
        .iter()
        .map(|t| t.parse::<Symbol>().map_err(|_| bad(t)))
        .collect()
}

/// How an invocation's flags failed to make sense.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlagsError {
    /// No rule flag was given.
    NoRules,
    /// The rule flags repeat a rule.
    BadRuleSet(String),
    /// `--fix-first-row` received an unparseable value.
    BadRow(String),
    /// The budget environment variable is not a number.
    BadEnvBudget(String),
}

impl fmt::Display for FlagsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlagsError::NoRules => {
                write!(f, "no rules selected; pass at least one rule flag such as --latin")
            }
            FlagsError::BadRuleSet(reason) => write!(f, "{reason}"),
            FlagsError::BadRow(reason) => write!(f, "bad first row: {reason}"),
            FlagsError::BadEnvBudget(value) => {
                write!(f, "{BUDGET_ENV}=`{value}` is not a node count")
            }
        }
    }
}

impl std::error::Error for FlagsError {}
