//! `latinforge`: construct, verify, count, and classify constrained
//! Latin squares from the command line.
//!
//! Exit codes: 0 pass, 1 violation or failed reproduction, 2 usage or
//! input error, 3 node budget exhausted.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use construct::{PQSpec, Sign};
use enumerate::{enumerate, EnumerateError, Mode};
use grid_core::{NumberLine, Square, Symbol};
use io_cli::{
    format_square, parse_row, parse_square, run_all, Metadata, RuleFlags, RunManifest,
    SearchFlags, SquareDocument, Style,
};
use rules::verify;

const EXIT_PASS: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "latinforge", version, about = "Constrained Latin square workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a square file (or stdin) against a rule set.
    Check {
        /// Square file in text or JSON form; `-` or absent reads stdin.
        file: Option<PathBuf>,
        #[command(flatten)]
        rules: RuleFlags,
        /// Emit a machine-readable report.
        #[arg(long)]
        json: bool,
    },
    /// Generate a square from a named construction.
    Gen {
        #[command(subcommand)]
        construction: Construction,
        /// Emit a JSON document with construction metadata.
        #[arg(long, global = true)]
        json: bool,
    },
    /// Count the squares of an order satisfying a rule set.
    Count(SearchArgs),
    /// List every satisfying square in lexicographic order.
    List(SearchArgs),
    /// Print the lexicographically earliest satisfying square.
    Earliest(SearchArgs),
    /// Combine two square files with the block product.
    Product {
        left: PathBuf,
        right: PathBuf,
        /// Emit a JSON document instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Count permutations with no adjacent consecutive entries.
    Perms {
        #[arg(short = 'n', long = "order", value_name = "N")]
        order: usize,
        /// Treat 1 and n as consecutive.
        #[arg(long)]
        modular: bool,
        /// Count only permutations that stay non-consecutive under every
        /// rotation.
        #[arg(long)]
        cyclable: bool,
        #[arg(long)]
        json: bool,
    },
    /// Rerun the built-in results table, or replay a saved manifest.
    Repro {
        /// Replay this run manifest instead of the built-in table.
        #[arg(long, value_name = "PATH")]
        manifest: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(clap::Args)]
struct SearchArgs {
    #[command(flatten)]
    search: SearchFlags,
    #[command(flatten)]
    rules: RuleFlags,
    /// Emit machine-readable output.
    #[arg(long)]
    json: bool,
    /// Write a reproducibility manifest for this run.
    #[arg(long, value_name = "PATH")]
    manifest: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Construction {
    /// Rotate a first row by a constant shift from row to row.
    Cyclic {
        /// Order; defaults to the length of `--row`.
        #[arg(short = 'n', long = "order", value_name = "N")]
        order: Option<usize>,
        /// Rightward rotation per row; negative values rotate leftward.
        #[arg(long, value_name = "K", allow_hyphen_values = true)]
        shift: i64,
        /// First row; defaults to 1 2 .. n.
        #[arg(long, value_name = "PERM")]
        row: Option<String>,
    },
    /// Square with no consecutive symbols a king's move apart.
    KingShy {
        #[arg(short = 'n', long = "order", value_name = "N")]
        order: usize,
        /// Additionally keep equal symbols out of king reach.
        #[arg(long)]
        anti_king: bool,
    },
    /// Square with no equal symbols a king's move apart that still has
    /// equal symbols on a shared diagonal.
    AntiKingOnly {
        #[arg(short = 'n', long = "order", value_name = "N")]
        order: usize,
    },
    /// Square where every cell has an equal symbol a bishop move away
    /// (even orders).
    BishopEven {
        #[arg(short = 'n', long = "order", value_name = "N")]
        order: usize,
    },
    /// Bishop-paired square of order p*q for odd primes p < q.
    BishopPq {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Square where every cell has an equal symbol a king move away
    /// (even orders).
    KingEven {
        #[arg(short = 'n', long = "order", value_name = "N")]
        order: usize,
    },
    /// Square whose neighbours are all consecutive on the circular
    /// number line.
    NosyModular {
        #[arg(short = 'n', long = "order", value_name = "N")]
        order: usize,
        /// Top-left symbol.
        #[arg(long, default_value_t = 1)]
        start: Symbol,
        /// Step symbols downward along each row instead of upward.
        #[arg(long)]
        reverse_rows: bool,
        /// Flip the row-to-row rotation direction.
        #[arg(long)]
        reverse_columns: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<EnumerateError> for Failure {
    fn from(e: EnumerateError) -> Self {
        let code = match e {
            EnumerateError::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("latinforge: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Check { file, rules, json } => check(file, &rules, json),
        Command::Gen { construction, json } => gen(construction, json),
        Command::Count(args) => search(Mode::Count, "count", &args),
        Command::List(args) => search(Mode::Collect, "list", &args),
        Command::Earliest(args) => search(Mode::LexEarliest, "earliest", &args),
        Command::Product { left, right, json } => product(&left, &right, json),
        Command::Perms {
            order,
            modular,
            cyclable,
            json,
        } => perms(order, modular, cyclable, json),
        Command::Repro { manifest, json } => match manifest {
            Some(path) => replay(&path, json),
            None => repro_table(json),
        },
    }
}

fn read_square(path: Option<&Path>) -> Result<Square, Failure> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
            buf
        }
    };
    parse_square(&text).map_err(|e| Failure::usage(e.to_string()))
}

fn check(file: Option<PathBuf>, rules: &RuleFlags, json: bool) -> Result<u8, Failure> {
    let square = read_square(file.as_deref())?;
    let rule_set = rules.to_rule_set().map_err(|e| Failure::usage(e.to_string()))?;
    let violations = verify(&square, &rule_set);
    if json {
        let listed: Vec<serde_json::Value> = violations
            .iter()
            .map(|v| {
                serde_json::json!({
                    "rule": v.rule.to_string(),
                    "cells": v.cells.iter().map(|c| [c.row, c.col]).collect::<Vec<_>>(),
                    "symbols": v.symbols,
                    "note": v.note,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::json!({ "pass": violations.is_empty(), "violations": listed })
        );
    } else if violations.is_empty() {
        println!("ok");
    } else {
        for violation in &violations {
            println!("{violation}");
        }
    }
    Ok(if violations.is_empty() {
        EXIT_PASS
    } else {
        EXIT_VIOLATION
    })
}

fn gen(construction: Construction, json: bool) -> Result<u8, Failure> {
    let (square, name, parameters) = build(construction)?;
    emit_square(&square, name, parameters, json);
    Ok(EXIT_PASS)
}

type Params = BTreeMap<String, String>;

fn build(construction: Construction) -> Result<(Square, &'static str, Params), Failure> {
    let fail = |e: construct::ConstructError| Failure::usage(e.to_string());
    match construction {
        Construction::Cyclic { order, shift, row } => {
            let first_row = match (&row, order) {
                (Some(row), _) => parse_row(row).map_err(|e| Failure::usage(e.to_string()))?,
                (None, Some(n)) => (1..=n as Symbol).collect(),
                (None, None) => {
                    return Err(Failure::usage("cyclic needs --order or --row"));
                }
            };
            if let Some(n) = order {
                if n != first_row.len() {
                    return Err(Failure::usage(format!(
                        "--order {n} disagrees with a row of {} entries",
                        first_row.len()
                    )));
                }
            }
            let square = construct::cyclic_square(&first_row, shift).map_err(fail)?;
            let params = Params::from([
                ("shift".into(), shift.to_string()),
                ("row".into(), row.unwrap_or_else(|| "identity".into())),
            ]);
            Ok((square, "cyclic", params))
        }
        Construction::KingShy { order, anti_king } => {
            let square = if order % 2 == 1 {
                construct::nc_king_odd(order, anti_king).map_err(fail)?
            } else {
                let (k, m) = construct::nc_king_even_params(order, anti_king).map_err(fail)?;
                construct::nc_king_even(order, k, m).map_err(fail)?
            };
            let params = Params::from([
                ("order".into(), order.to_string()),
                ("anti-king".into(), anti_king.to_string()),
            ]);
            Ok((square, "king-shy", params))
        }
        Construction::AntiKingOnly { order } => {
            let square = construct::anti_king_not_queen(order).map_err(fail)?;
            Ok((
                square,
                "anti-king-only",
                Params::from([("order".into(), order.to_string())]),
            ))
        }
        Construction::BishopEven { order } => {
            let square = construct::bishop_even(order).map_err(fail)?;
            Ok((
                square,
                "bishop-even",
                Params::from([("order".into(), order.to_string())]),
            ))
        }
        Construction::BishopPq { p, q } => {
            let spec = PQSpec::new(p, q).map_err(fail)?;
            let square = construct::bishop_odd_pq(&spec);
            let params = Params::from([("p".into(), p.to_string()), ("q".into(), q.to_string())]);
            Ok((square, "bishop-pq", params))
        }
        Construction::KingEven { order } => {
            let square = construct::king_even(order).map_err(fail)?;
            Ok((
                square,
                "king-even",
                Params::from([("order".into(), order.to_string())]),
            ))
        }
        Construction::NosyModular {
            order,
            start,
            reverse_rows,
            reverse_columns,
        } => {
            if order == 0 || start < 1 || start as usize > order {
                return Err(Failure::usage(format!(
                    "--start {start} is outside 1..={order}"
                )));
            }
            let row_dir = if reverse_rows { Sign::Minus } else { Sign::Plus };
            let shift = if reverse_columns { Sign::Minus } else { Sign::Plus };
            let square = construct::modular_consecutive(order, start, row_dir, shift);
            let params = Params::from([
                ("order".into(), order.to_string()),
                ("start".into(), start.to_string()),
                ("reverse-rows".into(), reverse_rows.to_string()),
                ("reverse-columns".into(), reverse_columns.to_string()),
            ]);
            Ok((square, "nosy-modular", params))
        }
    }
}

fn emit_square(square: &Square, construction: &str, parameters: Params, json: bool) {
    if json {
        let doc = SquareDocument::with_metadata(
            square,
            Metadata {
                construction: Some(construction.to_string()),
                parameters: Some(parameters),
                provenance: Some("latinforge gen".to_string()),
                ..Metadata::default()
            },
        );
        println!("{}", serde_json::to_string(&doc).expect("document serializes"));
    } else {
        print!("{}", format_square(square, Style::Ascii));
    }
}

fn search(mode: Mode, command: &str, args: &SearchArgs) -> Result<u8, Failure> {
    let rules = args
        .rules
        .to_rule_set()
        .map_err(|e| Failure::usage(e.to_string()))?;
    let opts = args
        .search
        .to_search_options(mode)
        .map_err(|e| Failure::usage(e.to_string()))?;
    let report = enumerate(args.search.order, &rules, &opts)?;

    if let Some(path) = &args.manifest {
        let manifest =
            RunManifest::from_run(command, &args.rules, &args.search, opts.budget, &report);
        let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
        std::fs::write(path, text + "\n")
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }

    match mode {
        Mode::Count => {
            if args.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "command": command,
                        "order": args.search.order,
                        "count": report.count,
                        "nodes_explored": report.nodes_explored,
                        "wall_ms": report.wall_time.as_millis() as u64,
                    })
                );
            } else {
                println!("{}", report.count);
            }
        }
        Mode::Collect => {
            for (i, square) in report.squares.iter().enumerate() {
                if args.json {
                    let doc = SquareDocument::new(square);
                    println!("{}", serde_json::to_string(&doc).expect("document serializes"));
                } else {
                    if i > 0 {
                        println!();
                    }
                    print!("{}", format_square(square, Style::Ascii));
                }
            }
        }
        Mode::LexEarliest => match report.squares.first() {
            Some(square) => {
                if args.json {
                    let doc = SquareDocument::new(square);
                    println!("{}", serde_json::to_string(&doc).expect("document serializes"));
                } else {
                    print!("{}", format_square(square, Style::Ascii));
                }
            }
            None => {
                if args.json {
                    println!("null");
                } else {
                    eprintln!(
                        "no square of order {} satisfies the rule set",
                        args.search.order
                    );
                }
            }
        },
    }
    Ok(EXIT_PASS)
}

fn product(left: &Path, right: &Path, json: bool) -> Result<u8, Failure> {
    let left_square = read_square(Some(left))?;
    let right_square = read_square(Some(right))?;
    let square = construct::kronecker(&left_square, &right_square)
        .map_err(|e| Failure::usage(e.to_string()))?;
    let params = Params::from([
        ("left-order".into(), left_square.order().to_string()),
        ("right-order".into(), right_square.order().to_string()),
    ]);
    emit_square(&square, "product", params, json);
    Ok(EXIT_PASS)
}

fn perms(order: usize, modular: bool, cyclable: bool, json: bool) -> Result<u8, Failure> {
    let line = if modular {
        NumberLine::Modular
    } else {
        NumberLine::Linear
    };
    let count = enumerate::count_nc_permutations(order, line, cyclable);
    if json {
        println!(
            "{}",
            serde_json::json!({
                "order": order,
                "modular": modular,
                "cyclable": cyclable,
                "count": count,
            })
        );
    } else {
        println!("{count}");
    }
    Ok(EXIT_PASS)
}

fn replay(path: &Path, json: bool) -> Result<u8, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let manifest: RunManifest =
        serde_json::from_str(&text).map_err(|e| Failure::usage(format!("bad manifest: {e}")))?;
    let report = manifest.replay().map_err(|e| match e {
        io_cli::ReplayError::Search(inner) => Failure::from(inner),
        other => Failure::usage(other.to_string()),
    })?;
    if json {
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    } else if report.matches() {
        println!("PASS  replay of `{}`: count {}", manifest.command, report.actual_count);
    } else {
        println!(
            "FAIL  replay of `{}`: expected count {} digest {}, got count {} digest {}",
            manifest.command,
            report.expected_count,
            report.expected_digest,
            report.actual_count,
            report.actual_digest
        );
    }
    Ok(if report.matches() {
        EXIT_PASS
    } else {
        EXIT_VIOLATION
    })
}

fn repro_table(json: bool) -> Result<u8, Failure> {
    let rows = run_all();
    let all_pass = rows.iter().all(|row| row.pass());
    if json {
        let listed: Vec<serde_json::Value> = rows
            .iter()
            .map(|row| {
                serde_json::json!({
                    "name": row.name,
                    "pass": row.pass(),
                    "expected": row.expected,
                    "got": row.got,
                })
            })
            .collect();
        println!("{}", serde_json::Value::Array(listed));
    } else {
        for row in &rows {
            if row.pass() {
                println!("PASS  {}", row.name);
            } else {
                println!("FAIL  {}", row.name);
                println!("      expected: {}", row.expected);
                println!("      got:      {}", row.got);
            }
        }
    }
    Ok(if all_pass { EXIT_PASS } else { EXIT_VIOLATION })
}
