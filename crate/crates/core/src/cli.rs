//! Command-line front end.
//!
//! [`run`] parses arguments and renders output into strings so the whole
//! command surface can be exercised without spawning a process. Exit codes:
//! 0 for success, 1 for a failed verification, 2 for usage errors.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{analyze, characteristic};
use crate::composition::Composition;
use crate::qsym::{
    extended_schur_in_fundamental, extended_schur_in_monomial, k_matrix, QSymElement,
};
use crate::tableau::{enumerate_set, enumerate_srit, Tableau};
use crate::verify::{run_checks, Check, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    #[value(name = "F")]
    F,
    #[value(name = "M")]
    M,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableauKind {
    Set,
    Srit,
}

#[derive(Debug, Parser)]
#[command(
    name = "extschur",
    version,
    about = "Extended Schur functions and their 0-Hecke modules"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest weight accepted for any composition or degree.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_n: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand an extended Schur function in the F or M basis.
    Expand {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, value_enum, default_value_t = BasisArg::F)]
        basis: BasisArg,
    },
    /// List standard extended or row-increasing tableaux of a shape.
    Tableaux {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, value_enum, default_value_t = TableauKind::Set)]
        kind: TableauKind,
        /// Print the descent composition of each tableau.
        #[arg(long)]
        show_descents: bool,
    },
    /// Quasisymmetric characteristic of the module, from its composition
    /// series.
    Char {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Full module analysis: factors, characteristic, endomorphisms.
    Analyze {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Run verification sweeps over every composition of weight <= n.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        /// Comma-separated subset of: relations, submodule, characteristic,
        /// endomorphism, schur, kmatrix, roundtrip. Default: all.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<Check>,
    },
    /// Print the matrix K of SET counts by descent composition.
    Kmatrix {
        #[arg(long, allow_hyphen_values = true)]
        n: String,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

type CmdResult = Result<Outcome, String>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(rendered)
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    if cli.max_n < 1 {
        return Outcome::usage("error: --max-n must be at least 1");
    }
    match dispatch(&cli) {
        Ok(out) => out,
        Err(msg) => Outcome::usage(format!("error: {msg}")),
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Expand { alpha, basis } => {
            let alpha = parse_alpha(alpha, cli.max_n)?;
            let x = match basis {
                BasisArg::F => extended_schur_in_fundamental(&alpha),
                BasisArg::M => extended_schur_in_monomial(&alpha),
            };
            render_element(&x, cli.format)
        }
        Command::Char { alpha } => {
            let alpha = parse_alpha(alpha, cli.max_n)?;
            render_element(&characteristic(&alpha), cli.format)
        }
        Command::Tableaux {
            alpha,
            kind,
            show_descents,
        } => {
            let alpha = parse_alpha(alpha, cli.max_n)?;
            let list = match kind {
                TableauKind::Set => enumerate_set(&alpha),
                TableauKind::Srit => enumerate_srit(&alpha),
            };
            render_tableaux(&list, *show_descents, cli.format)
        }
        Command::Analyze { alpha } => {
            let alpha = parse_alpha(alpha, cli.max_n)?;
            let report = analyze(&alpha);
            match cli.format {
                Format::Json => Ok(Outcome::ok(to_json(&report))),
                Format::Text => {
                    let factors: Vec<String> = report
                        .factors
                        .factors
                        .iter()
                        .map(|b| format!("({b})"))
                        .collect();
                    let verdict = match report.verdict {
                        crate::analysis::Verdict::Indecomposable => "true".to_string(),
                        crate::analysis::Verdict::Inconclusive(d) => {
                            format!("inconclusive (commutant dimension {d})")
                        }
                    };
                    let mut s = String::new();
                    writeln!(s, "alpha: ({})", report.alpha).unwrap();
                    writeln!(s, "dim: {}", report.dim).unwrap();
                    writeln!(s, "factors: {}", factors.join(" ")).unwrap();
                    writeln!(s, "characteristic: {}", report.characteristic).unwrap();
                    writeln!(s, "commutant dimension: {}", report.commutant_dimension).unwrap();
                    writeln!(s, "indecomposable: {verdict}").unwrap();
                    Ok(Outcome::ok(s))
                }
                Format::Csv => Err("csv output is not available for analyze".into()),
            }
        }
        Command::Verify { n, checks } => {
            let n = parse_n(n, cli.max_n)?;
            let checks = if checks.is_empty() {
                Check::ALL.to_vec()
            } else {
                checks.clone()
            };
            let report = run_checks(n, &checks);
            let stdout = render_verify(&report, cli.format);
            Ok(Outcome {
                code: if report.ok { EXIT_OK } else { EXIT_FAILED },
                stdout,
                stderr: String::new(),
            })
        }
        Command::Kmatrix { n } => {
            let n = parse_n(n, cli.max_n)?;
            let k = k_matrix(n).map_err(|e| e.to_string())?;
            Ok(Outcome::ok(match cli.format {
                Format::Text => k.to_string(),
                Format::Json => to_json(&k),
                Format::Csv => k.to_csv(),
            }))
        }
    }
}

fn parse_alpha(s: &str, max_n: usize) -> Result<Composition, String> {
    let alpha: Composition = s.parse().map_err(|e: crate::Error| e.to_string())?;
    if alpha.weight() > max_n {
        return Err(format!(
            "composition ({alpha}) has weight {} above --max-n {max_n}",
            alpha.weight()
        ));
    }
    Ok(alpha)
}

fn parse_n(s: &str, max_n: usize) -> Result<usize, String> {
    let n: usize = s
        .trim()
        .parse()
        .map_err(|_| format!("--n expects a nonnegative integer, got {s:?}"))?;
    if n > max_n {
        return Err(format!("n = {n} is above --max-n {max_n}"));
    }
    Ok(n)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn render_element(x: &QSymElement, format: Format) -> CmdResult {
    Ok(Outcome::ok(match format {
        Format::Text => format!("{x}\n"),
        Format::Json => to_json(x),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["composition", "coefficient"])
                .map_err(|e| e.to_string())?;
            for (alpha, c) in x.terms() {
                w.write_record([alpha.to_string(), c.to_string()])
                    .map_err(|e| e.to_string())?;
            }
            String::from_utf8(w.into_inner().map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?
        }
    }))
}

#[derive(Serialize)]
struct TableauEntry<'a> {
    #[serde(flatten)]
    tableau: &'a Tableau,
    #[serde(skip_serializing_if = "Option::is_none")]
    descent: Option<Composition>,
}

fn render_tableaux(list: &[Tableau], show_descents: bool, format: Format) -> CmdResult {
    match format {
        Format::Text => {
            let blocks: Vec<String> = list
                .iter()
                .map(|t| {
                    if show_descents {
                        format!("{t}\nDes: ({})", t.descent_composition())
                    } else {
                        t.to_string()
                    }
                })
                .collect();
            let mut s = blocks.join("\n\n");
            s.push('\n');
            Ok(Outcome::ok(s))
        }
        Format::Json => {
            let entries: Vec<TableauEntry<'_>> = list
                .iter()
                .map(|t| TableauEntry {
                    tableau: t,
                    descent: show_descents.then(|| t.descent_composition()),
                })
                .collect();
            Ok(Outcome::ok(to_json(&entries)))
        }
        Format::Csv => Err("csv output is not available for tableaux".into()),
    }
}

fn render_verify(report: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => to_json(report),
        Format::Text => {
            let mut s = String::new();
            for c in &report.checks {
                writeln!(s, "{}: {} passed, {} failed", c.check, c.passed, c.failed).unwrap();
                if let Some(ex) = &c.first_counterexample {
                    writeln!(s, "  first counterexample: {ex}").unwrap();
                }
            }
            let verdict = if report.ok { "PASS" } else { "FAIL" };
            writeln!(s, "{verdict} (all compositions of weight <= {})", report.n).unwrap();
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["check", "passed", "failed", "first_counterexample"])
                .expect("in-memory write");
            for c in &report.checks {
                w.write_record([
                    c.check.to_string(),
                    c.passed.to_string(),
                    c.failed.to_string(),
                    c.first_counterexample.clone().unwrap_or_default(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
    }
}
