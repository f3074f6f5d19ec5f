//! Command-line front end over the library.
//!
//! Each subcommand reads maps as JSON (inline, from a file, or from standard
//! input via `-`), runs one library operation, and prints a single
//! newline-terminated JSON document on standard output. Exit codes sort
//! failures by kind:
//!
//! * `0`: success;
//! * `1`: a map failed validation (`NotInjective`, `NegativeValue`,
//!   `HoleExceptionOverlap`, `DuplicateExceptionKey`);
//! * `2`: a precondition of the requested operation failed (`NonZeroIndex`,
//!   `IndexMismatch`, `WindowTooSmall`);
//! * `3`: I/O, parse, or usage trouble.
//!
//! Failures put `{"error": code, "detail": text}` on standard error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Read;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::algebra::{factor_left, factor_right, AlgebraError};
use crate::germ::GermClass;
use crate::near::NearBijection;
use crate::oracle::{compose_check, OracleError, WindowTable};
use crate::partial::{BuildError, Disagreements, PartialBijection};
use crate::set::FiniteNatSet;

#[derive(Parser)]
#[command(
    name = "cofinite",
    version,
    about = "Exact index arithmetic for bijections between cofinite subsets of the naturals"
)]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print {"index": n} for a map.
    Index {
        /// Map JSON: inline text, a file path, or - for standard input.
        map: String,
    },
    /// Print the canonical composite g ∘ f (f applied first).
    Compose { g: String, f: String },
    /// Print the inverse map.
    Invert { map: String },
    /// Extend an index-zero map to a permutation of all of ℕ.
    Extend { map: String },
    /// Print permutations lambda and rho with lambda∘f ≡ g and f∘rho ≡ g.
    Factor { f: String, g: String },
    /// Report almost-equality and the exact disagreement set.
    Equal { f: String, g: String },
    /// Print the germ class of a map and its Ind value.
    Class { map: String },
    /// Analyze a near-bijection {"prefix": [...], "shift": k}: complements,
    /// legacy index, and the restriction to its monoset.
    Near { map: String },
    /// Recount one map's invariants with the window oracle, or cross-check
    /// the composition of two maps (g first, then f) against the oracle.
    Check {
        #[arg(num_args = 1..=2)]
        maps: Vec<String>,
        /// Oracle window; defaults to the computed structural bound.
        #[arg(long)]
        window: Option<u64>,
    },
}

#[derive(Debug)]
enum CliError {
    Build(BuildError),
    Algebra(AlgebraError),
    Oracle(OracleError),
    Io { detail: String },
    Parse { detail: String },
    Usage { detail: String },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Build(_) => 1,
            CliError::Algebra(_) | CliError::Oracle(_) => 2,
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage { .. } => 3,
        }
    }

    fn code(&self) -> &'static str {
        match self {
            CliError::Build(BuildError::NotInjective { .. }) => "NotInjective",
            CliError::Build(BuildError::NegativeValue { .. }) => "NegativeValue",
            CliError::Build(BuildError::HoleExceptionOverlap { .. }) => "HoleExceptionOverlap",
            CliError::Build(BuildError::DuplicateExceptionKey { .. }) => "DuplicateExceptionKey",
            CliError::Algebra(AlgebraError::NonZeroIndex { .. }) => "NonZeroIndex",
            CliError::Algebra(AlgebraError::IndexMismatch { .. }) => "IndexMismatch",
            CliError::Oracle(OracleError::WindowTooSmall { .. }) => "WindowTooSmall",
            CliError::Io { .. } => "Io",
            CliError::Parse { .. } => "Parse",
            CliError::Usage { .. } => "Usage",
        }
    }

    fn detail(&self) -> String {
        match self {
            CliError::Build(e) => e.to_string(),
            CliError::Algebra(e) => e.to_string(),
            CliError::Oracle(e) => e.to_string(),
            CliError::Io { detail } | CliError::Parse { detail } | CliError::Usage { detail } => {
                detail.clone()
            }
        }
    }
}

/// Reads a map argument: inline JSON when it opens a JSON document, standard
/// input for `-`, a file path otherwise.
fn read_text(arg: &str) -> Result<String, CliError> {
    if arg.trim_start().starts_with(['{', '[']) {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Io {
                detail: format!("standard input: {e}"),
            })?;
        return Ok(buf);
    }
    std::fs::read_to_string(arg).map_err(|e| CliError::Io {
        detail: format!("{arg}: {e}"),
    })
}

/// Wire form of a partial bijection, kept separate from the typed constructor
/// so that malformed JSON (exit 3) and invalid maps (exit 1) stay distinct.
#[derive(Deserialize)]
struct RawMap {
    shift: i64,
    holes: Vec<u64>,
    exceptions: Vec<(u64, u64)>,
}

fn parse_map(arg: &str) -> Result<PartialBijection, CliError> {
    let text = read_text(arg)?;
    let raw: RawMap = serde_json::from_str(&text).map_err(|e| CliError::Parse {
        detail: e.to_string(),
    })?;
    let mut exceptions = BTreeMap::new();
    for (a, v) in raw.exceptions {
        if exceptions.insert(a, v).is_some() {
            return Err(CliError::Build(BuildError::DuplicateExceptionKey {
                point: a,
            }));
        }
    }
    PartialBijection::new(raw.shift, FiniteNatSet::from(raw.holes), exceptions)
        .map_err(CliError::Build)
}

#[derive(Deserialize)]
struct RawNear {
    prefix: Vec<u64>,
    shift: i64,
}

fn parse_near(arg: &str) -> Result<NearBijection, CliError> {
    let text = read_text(arg)?;
    let raw: RawNear = serde_json::from_str(&text).map_err(|e| CliError::Parse {
        detail: e.to_string(),
    })?;
    NearBijection::new(raw.prefix, raw.shift).map_err(CliError::Build)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library values serialize without failure")
}

fn execute(command: &Command) -> Result<Value, CliError> {
    match command {
        Command::Index { map } => {
            let f = parse_map(map)?;
            Ok(json!({ "index": f.index() }))
        }
        Command::Compose { g, f } => {
            let g = parse_map(g)?;
            let f = parse_map(f)?;
            Ok(to_value(&g.compose(&f)))
        }
        Command::Invert { map } => {
            let f = parse_map(map)?;
            Ok(to_value(&f.inverse()))
        }
        Command::Extend { map } => {
            let f = parse_map(map)?;
            let p = f.extend_to_permutation().map_err(CliError::Algebra)?;
            Ok(to_value(&p))
        }
        Command::Factor { f, g } => {
            let f = parse_map(f)?;
            let g = parse_map(g)?;
            let lambda = factor_left(&f, &g).map_err(CliError::Algebra)?;
            let rho = factor_right(&f, &g).map_err(CliError::Algebra)?;
            Ok(json!({ "lambda": to_value(&lambda), "rho": to_value(&rho) }))
        }
        Command::Equal { f, g } => {
            let f = parse_map(f)?;
            let g = parse_map(g)?;
            let disagreements = match f.disagreements(&g) {
                Disagreements::Finite(points) => to_value(&points),
                Disagreements::Infinite => Value::String("infinite".into()),
            };
            Ok(json!({
                "almost_equal": f.almost_equal(&g),
                "disagreements": disagreements,
            }))
        }
        Command::Class { map } => {
            let f = parse_map(map)?;
            let class = GermClass::of(&f);
            Ok(json!({ "germ": to_value(&class), "ind": class.ind() }))
        }
        Command::Near { map } => {
            let f = parse_near(map)?;
            Ok(json!({
                "monoset_complement": to_value(&f.monoset_complement()),
                "range_complement": to_value(&f.range_complement()),
                "legacy_index": f.legacy_index(),
                "restriction": to_value(&f.restrict_to_partial()),
            }))
        }
        Command::Check { maps, window } => check(maps, *window),
    }
}

fn check(maps: &[String], window: Option<u64>) -> Result<Value, CliError> {
    match maps {
        [one] => {
            let f = parse_map(one)?;
            let w = window.unwrap_or_else(|| f.structural_bound());
            let table = WindowTable::materialize(&f, w).map_err(CliError::Oracle)?;
            let analytic = json!({
                "domain_complement": to_value(f.holes()),
                "codomain_complement": to_value(&f.codomain_complement()),
                "index": f.index(),
            });
            let oracle = json!({
                "domain_complement": to_value(&table.domain_complement()),
                "codomain_complement": to_value(&table.codomain_complement(f.shift())),
                "index": table.index(f.shift()),
            });
            let ok = analytic == oracle;
            Ok(json!({ "ok": ok, "window": w, "analytic": analytic, "oracle": oracle }))
        }
        [g, f] => {
            let g = parse_map(g)?;
            let f = parse_map(f)?;
            let composite = g.compose(&f);
            let w = window.unwrap_or_else(|| {
                f.structural_bound()
                    .max(g.structural_bound())
                    .max(composite.structural_bound())
            });
            let ok = compose_check(&g, &f, w).map_err(CliError::Oracle)?;
            Ok(json!({ "ok": ok, "window": w, "composite": to_value(&composite) }))
        }
        _ => unreachable!("clap enforces one or two maps"),
    }
}

fn emit_error(e: &CliError) {
    let payload = json!({ "error": e.code(), "detail": e.detail() });
    eprintln!("{payload}");
}

/// Runs the CLI on the given arguments and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return 0;
            }
            let e = CliError::Usage {
                detail: e.to_string(),
            };
            emit_error(&e);
            return e.exit_code();
        }
    };

    match execute(&cli.command) {
        Ok(value) => {
            let rendered = if cli.pretty {
                serde_json::to_string_pretty(&value).expect("rendering JSON cannot fail")
            } else {
                value.to_string()
            };
            println!("{rendered}");
            0
        }
        Err(e) => {
            emit_error(&e);
            e.exit_code()
        }
    }
}
