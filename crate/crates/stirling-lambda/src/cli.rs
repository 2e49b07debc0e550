//! Command-line front end.
//!
//! Subcommands: `table` (emit a triangular table), `verify` (run identity
//! checks), `normal-order` (normal-order a boson word), `gf`
//! (generating-function comparison), and `limit` (classical integer table
//! at λ = 0). Exit status: 0 on success, 1 when a check fails, 2 on usage
//! errors, 3 on I/O failures. Output is byte-deterministic for a fixed
//! invocation.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::boson;
use crate::exactnum::{LambdaPoly, Rat};
use crate::identities;
use crate::report::{CheckId, IdentityReport};
use crate::series;
use crate::stirling::{self, Kind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Guard against accidentally materializing huge symbolic tables.
const SIZE_CAP: usize = 200;

#[derive(Parser)]
#[command(
    name = "stirling-lambda",
    version,
    about = "Exact tables, normal ordering, and identity checks for degenerate Stirling numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    S1,
    S2,
}

impl From<KindArg> for Kind {
    fn from(kind: KindArg) -> Kind {
        match kind {
            KindArg::S1 => Kind::FirstKind,
            KindArg::S2 => Kind::SecondKind,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    Csv,
    Json,
    #[default]
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the triangular table of a chosen kind, symbolically or at a
    /// fixed rational λ.
    Table {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n_max: usize,
        /// Evaluate entries at this rational λ (e.g. `0`, `1/2`, `-3/4`);
        /// omit for symbolic output.
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Write here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Lift the safety cap on n-max.
        #[arg(long)]
        allow_large: bool,
    },
    /// Run identity checks and report pass/fail with counterexamples.
    Verify {
        /// One of: prop1, t3..t11, eq14, eq17, eq19, eq23, gf, altsum, all.
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long, default_value_t = 10)]
        k_max: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Normal-order a whitespace-separated word of `a` / `a+` tokens.
    NormalOrder {
        word: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare the degenerate exponential generating function against the
    /// second-kind table columns.
    Gf {
        #[arg(long, default_value_t = 16)]
        k_max: usize,
        /// Truncation order (defaults to k-max).
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Emit the classical integer table obtained at λ = 0.
    Limit {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
}

/// Parse `std::env::args` and run. Returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => err.exit(),
    };
    match cli.command {
        Command::Table {
            kind,
            n_max,
            lambda,
            format,
            output,
            allow_large,
        } => cmd_table(kind.into(), n_max, lambda, format, output, allow_large),
        Command::Verify {
            theorem,
            k_max,
            format,
            output,
            allow_large,
        } => cmd_verify(&theorem, k_max, format, output, allow_large),
        Command::NormalOrder {
            word,
            format,
            output,
        } => cmd_normal_order(&word, format, output),
        Command::Gf {
            k_max,
            order,
            format,
            output,
            allow_large,
        } => cmd_gf(k_max, order, format, output, allow_large),
        Command::Limit {
            kind,
            n_max,
            format,
            output,
            allow_large,
        } => cmd_limit(kind.into(), n_max, format, output, allow_large),
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn check_cap(value: usize, flag: &str, allow_large: bool) -> Option<i32> {
    if value > SIZE_CAP && !allow_large {
        return Some(usage_error(&format!(
            "{flag} = {value} exceeds the safety cap {SIZE_CAP}; pass --allow-large to override"
        )));
    }
    None
}

fn write_output(output: Option<PathBuf>, content: &str) -> i32 {
    match output {
        Some(path) => {
            if let Err(err) = std::fs::write(&path, content) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return EXIT_IO;
            }
        }
        None => {
            use std::io::Write;
            if std::io::stdout().write_all(content.as_bytes()).is_err() {
                return EXIT_IO;
            }
        }
    }
    EXIT_OK
}

fn poly_coeff_strings(p: &LambdaPoly) -> Vec<String> {
    p.coeffs().iter().map(Rat::to_string).collect()
}

fn poly_json(p: &LambdaPoly) -> Value {
    json!({ "coeffs": poly_coeff_strings(p) })
}

fn cmd_table(
    kind: Kind,
    n_max: usize,
    lambda: Option<String>,
    format: Format,
    output: Option<PathBuf>,
    allow_large: bool,
) -> i32 {
    if let Some(code) = check_cap(n_max, "n-max", allow_large) {
        return code;
    }
    let lambda = match lambda {
        None => None,
        Some(text) => match Rat::from_str(&text) {
            Ok(value) => Some(value),
            Err(_) => return usage_error(&format!("invalid rational for --lambda: `{text}`")),
        },
    };
    let table = stirling::table(kind, n_max);
    let entry_text = |n: usize, k: usize| -> String {
        match &lambda {
            None => table.entry(n, k).to_string(),
            Some(lam) => table.entry(n, k).eval(lam).to_string(),
        }
    };
    let mut out = String::new();
    match format {
        Format::Text => {
            for n in 0..=n_max {
                for k in 0..=n {
                    let _ = writeln!(out, "({n},{k}) {}", entry_text(n, k));
                }
            }
        }
        Format::Csv => {
            out.push_str("n,k,value\n");
            for n in 0..=n_max {
                for k in 0..=n {
                    let _ = writeln!(out, "{n},{k},{}", entry_text(n, k));
                }
            }
        }
        Format::Json => {
            let rows: Vec<Value> = (0..=n_max)
                .map(|n| {
                    let row: Vec<Value> = (0..=n)
                        .map(|k| match &lambda {
                            None => Value::from(poly_coeff_strings(table.entry(n, k))),
                            Some(lam) => Value::from(table.entry(n, k).eval(lam).to_string()),
                        })
                        .collect();
                    Value::from(row)
                })
                .collect();
            let doc = json!({
                "kind": kind.label(),
                "n_max": n_max,
                "lambda": lambda.as_ref().map(Rat::to_string),
                "rows": rows,
            });
            out = doc.to_string();
            out.push('\n');
        }
    }
    write_output(output, &out)
}

fn counterexample_json(report: &IdentityReport) -> Value {
    match &report.counterexample {
        None => Value::Null,
        Some(cex) => {
            let indices: serde_json::Map<String, Value> = cex
                .indices
                .iter()
                .map(|(name, value)| (name.to_string(), Value::from(*value)))
                .collect();
            json!({
                "indices": indices,
                "lhs": poly_json(&cex.lhs),
                "rhs": poly_json(&cex.rhs),
            })
        }
    }
}

fn render_reports(reports: &[IdentityReport], format: Format) -> String {
    match format {
        Format::Json => {
            let docs: Vec<Value> = reports
                .iter()
                .map(|report| {
                    let mut doc = json!({
                        "id": report.id.name(),
                        "range": report.range,
                        "status": report.status.to_string(),
                    });
                    if report.counterexample.is_some() {
                        doc["counterexample"] = counterexample_json(report);
                    }
                    doc
                })
                .collect();
            let mut text = Value::from(docs).to_string();
            text.push('\n');
            text
        }
        _ => {
            let mut text = String::new();
            for report in reports {
                let _ = writeln!(text, "{report}");
            }
            text
        }
    }
}

fn finish_reports(reports: Vec<IdentityReport>, format: Format, output: Option<PathBuf>) -> i32 {
    let all_passed = reports.iter().all(IdentityReport::passed);
    let rendered = render_reports(&reports, format);
    let code = write_output(output, &rendered);
    if code != EXIT_OK {
        code
    } else if all_passed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn cmd_verify(
    theorem: &str,
    k_max: usize,
    format: Format,
    output: Option<PathBuf>,
    allow_large: bool,
) -> i32 {
    if format == Format::Csv {
        return usage_error("csv format is not supported for verify");
    }
    if let Some(code) = check_cap(k_max, "k-max", allow_large) {
        return code;
    }
    let reports = if theorem == "all" {
        identities::check_all(k_max)
    } else {
        match CheckId::from_name(theorem) {
            Some(id) => vec![identities::run_check(id, k_max)],
            None => return usage_error(&format!("unknown theorem id `{theorem}`")),
        }
    };
    finish_reports(reports, format, output)
}

fn cmd_normal_order(word: &str, format: Format, output: Option<PathBuf>) -> i32 {
    if format == Format::Csv {
        return usage_error("csv format is not supported for normal-order");
    }
    let letters = match boson::parse_word(word) {
        Ok(letters) => letters,
        Err(err) => return usage_error(&err.to_string()),
    };
    let nf = boson::word_to_normal(&letters);
    let rendered = match format {
        Format::Json => {
            let terms: Vec<Value> = nf
                .terms()
                .map(|((i, j), coeff)| {
                    json!({ "i": i, "j": j, "coeff": poly_json(coeff) })
                })
                .collect();
            let mut text = json!({ "terms": terms }).to_string();
            text.push('\n');
            text
        }
        _ => format!("{nf}\n"),
    };
    write_output(output, &rendered)
}

fn cmd_gf(
    k_max: usize,
    order: Option<usize>,
    format: Format,
    output: Option<PathBuf>,
    allow_large: bool,
) -> i32 {
    if format == Format::Csv {
        return usage_error("csv format is not supported for gf");
    }
    if let Some(code) = check_cap(k_max, "k-max", allow_large) {
        return code;
    }
    let order = order.unwrap_or(k_max);
    if k_max > order {
        return usage_error(&format!("k-max = {k_max} exceeds the truncation order {order}"));
    }
    let table = stirling::table(Kind::SecondKind, order);
    let reports: Vec<IdentityReport> = (0..=k_max)
        .map(|k| series::gf_check_with(&table, k, order).expect("k <= order"))
        .collect();
    finish_reports(reports, format, output)
}

fn cmd_limit(
    kind: Kind,
    n_max: usize,
    format: Format,
    output: Option<PathBuf>,
    allow_large: bool,
) -> i32 {
    if let Some(code) = check_cap(n_max, "n-max", allow_large) {
        return code;
    }
    let rows = stirling::classical_limit(&stirling::table(kind, n_max));
    let mut out = String::new();
    match format {
        Format::Text => {
            for (n, row) in rows.iter().enumerate() {
                for (k, value) in row.iter().enumerate() {
                    let _ = writeln!(out, "({n},{k}) {value}");
                }
            }
        }
        Format::Csv => {
            out.push_str("n,k,value\n");
            for (n, row) in rows.iter().enumerate() {
                for (k, value) in row.iter().enumerate() {
                    let _ = writeln!(out, "{n},{k},{value}");
                }
            }
        }
        Format::Json => {
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|row| Value::from(row.iter().map(BigInt::to_string).collect::<Vec<_>>()))
                .collect();
            let doc = json!({
                "kind": kind.label(),
                "n_max": n_max,
                "lambda": "0",
                "rows": rows_json,
            });
            out = doc.to_string();
            out.push('\n');
        }
    }
    write_output(output, &out)
}
