//! The `seaweed` command line.

use std::io::Write;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::meander::Meander;
use crate::reduction::{self, Rule, Strategy};
use crate::render;
use crate::search::{self, Family, VerifyOptions};

#[derive(Debug, Parser)]
#[command(
    name = "seaweed",
    version,
    about = "Index of seaweed subalgebras of gl(n) via meanders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Index of q(a|b); b defaults to (n).
    Index {
        a: Composition,
        #[arg(long)]
        dual: Option<Composition>,
        /// Print the sl(n) index instead.
        #[arg(long)]
        sl: bool,
        #[arg(long)]
        json: bool,
    },
    /// Reduction trace of p(c).
    Reduce {
        c: Composition,
        #[arg(long)]
        shortcut: bool,
        #[arg(long)]
        json: bool,
    },
    /// Draw the meander of q(a|b).
    Meander {
        a: Composition,
        #[arg(long)]
        dual: Option<Composition>,
        #[arg(long, conflicts_with = "svg")]
        json: bool,
        #[arg(long)]
        svg: bool,
        /// Component to highlight in the SVG, numbered by smallest vertex from 0.
        #[arg(long, requires = "svg")]
        highlight: Option<usize>,
    },
    /// All Frobenius seaweeds of size n.
    Frobenius {
        #[arg(long)]
        n: u64,
        /// Index zero in sl(n) rather than gl(n).
        #[arg(long)]
        sl: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run every registered check.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_n: u64,
        /// Also compare against the Kirillov form.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 7)]
        oracle_max_n: u64,
        #[arg(long, default_value_t = 5)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run one registered check, or list them.
    Check {
        name: Option<String>,
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// Closed form next to the engine over a family grid (CSV).
    Table {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    ChecksFailed,
}

/// Runs the CLI on `argv` (including the program name) and returns the
/// process exit code: 0 on success, 1 when a check fails, 2 on bad input.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::ChecksFailed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

fn dual_or_single(a: &Composition, dual: Option<Composition>) -> Result<Composition> {
    match dual {
        Some(b) => Ok(b),
        None => Composition::single(a.n()),
    }
}

fn describe(rule: &Rule) -> String {
    match rule {
        Rule::ModReduce { i, d_i } => format!("reduce a_{i} mod |{d_i}|"),
        Rule::RemoveZeroDefect { i, .. } => format!("remove a_{i} (zero defect)"),
        Rule::SplitEqualSums { i, j } => format!("split at blocks {i} and {j}"),
        Rule::TwoBlockGcd => "two blocks: gcd".to_string(),
        Rule::SingleBlock => "single block".to_string(),
    }
}

#[derive(Serialize)]
struct FrobeniusOutput {
    n: u64,
    sl: bool,
    count: usize,
    seaweeds: Vec<SeaweedPair>,
}

#[derive(Serialize)]
struct SeaweedPair {
    a: Composition,
    b: Composition,
}

#[derive(Serialize)]
struct VerifyOutput {
    passed: bool,
    reports: Vec<search::VerificationReport>,
}

#[derive(Serialize)]
struct CheckInfo {
    name: &'static str,
    kind: search::BoundKind,
    default_bound: u64,
    description: &'static str,
}

fn print_reports(out: &mut dyn Write, reports: &[search::VerificationReport]) -> Result<()> {
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{status} {:<24} {:>9} instances  {}",
            r.name, r.instances, r.parameter_space
        )
        .map_err(io)?;
        for f in r.failures.iter().take(5) {
            writeln!(
                out,
                "    {}: expected {}, got {}",
                f.input, f.expected, f.got
            )
            .map_err(io)?;
        }
        if r.failures.len() > 5 {
            writeln!(out, "    … {} more", r.failures.len() - 5).map_err(io)?;
        }
    }
    Ok(())
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<Outcome> {
    match command {
        Command::Index { a, dual, sl, json } => {
            let b = dual_or_single(&a, dual)?;
            let report = reduction::index_of_seaweed(&a, &b)?;
            if json {
                emit_json(out, &report)?;
            } else {
                let value = if sl { report.sl_index } else { report.index };
                writeln!(out, "{value}").map_err(io)?;
            }
        }
        Command::Reduce { c, shortcut, json } => {
            let strategy = if shortcut {
                Strategy::Shortcut
            } else {
                Strategy::Strict
            };
            let trace = reduction::index_via_reduction_with(&c, strategy);
            if json {
                emit_json(out, &trace)?;
            } else {
                for step in &trace.steps {
                    let after: Vec<String> = step.after.iter().map(|c| format!("({c})")).collect();
                    let after = if after.is_empty() {
                        "∅".to_string()
                    } else {
                        after.join(" + ")
                    };
                    write!(out, "({}) -> {after}", step.before).map_err(io)?;
                    if step.gained > 0 {
                        write!(out, "  +{}", step.gained).map_err(io)?;
                    }
                    writeln!(out, "  [{}]", describe(&step.rule)).map_err(io)?;
                }
                writeln!(out, "index {}", trace.index).map_err(io)?;
            }
        }
        Command::Meander {
            a,
            dual,
            json,
            svg,
            highlight,
        } => {
            let b = dual_or_single(&a, dual)?;
            let m = Meander::new(&a, &b)?;
            if json {
                writeln!(out, "{}", render::render_json(&m)?).map_err(io)?;
            } else if svg {
                write!(out, "{}", render::render_svg(&m, highlight)?).map_err(io)?;
            } else {
                write!(out, "{}", render::render_ascii(&m)?).map_err(io)?;
                let (cycles, segments) = m.cycle_segment_counts();
                writeln!(
                    out,
                    "index {} = 2·{cycles} cycles + {segments} segments",
                    m.index()
                )
                .map_err(io)?;
                for mc in m.maximal_cycles() {
                    writeln!(
                        out,
                        "maximal {:?} dimension {}",
                        mc.core.vertices, mc.dimension
                    )
                    .map_err(io)?;
                }
            }
        }
        Command::Frobenius { n, sl, json } => {
            let found = search::find_frobenius_seaweeds(n, sl)?;
            if json {
                emit_json(
                    out,
                    &FrobeniusOutput {
                        n,
                        sl,
                        count: found.len(),
                        seaweeds: found
                            .into_iter()
                            .map(|(a, b)| SeaweedPair { a, b })
                            .collect(),
                    },
                )?;
            } else {
                for (a, b) in found {
                    writeln!(out, "{a}|{b}").map_err(io)?;
                }
            }
        }
        Command::Verify {
            max_n,
            oracle,
            oracle_max_n,
            trials,
            seed,
            json,
        } => {
            if trials == 0 {
                return Err(Error::InvalidArgument("--trials must be at least 1".into()));
            }
            let opts = VerifyOptions {
                max_n,
                oracle,
                oracle_max_n,
                trials,
                seed,
            };
            let reports = search::verify_all(&opts);
            let passed = reports.iter().all(|r| r.passed());
            if json {
                emit_json(out, &VerifyOutput { passed, reports })?;
            } else {
                print_reports(out, &reports)?;
            }
            if !passed {
                return Ok(Outcome::ChecksFailed);
            }
        }
        Command::Check {
            name,
            bound,
            list,
            json,
        } => {
            if list || name.is_none() {
                let infos: Vec<CheckInfo> = search::checks()
                    .iter()
                    .map(|c| CheckInfo {
                        name: c.name,
                        kind: c.kind,
                        default_bound: c.default_bound,
                        description: c.description,
                    })
                    .collect();
                if json {
                    emit_json(out, &infos)?;
                } else {
                    for c in infos {
                        writeln!(
                            out,
                            "{:<24} {:>3}  {}",
                            c.name, c.default_bound, c.description
                        )
                        .map_err(io)?;
                    }
                }
                return Ok(Outcome::Ok);
            }
            let check = search::find_check(name.as_deref().unwrap_or_default())?;
            let report = check.run(bound.unwrap_or(check.default_bound));
            let passed = report.passed();
            if json {
                emit_json(out, &report)?;
            } else {
                print_reports(out, std::slice::from_ref(&report))?;
            }
            if !passed {
                return Ok(Outcome::ChecksFailed);
            }
        }
        Command::Table {
            family,
            bound,
            json,
        } => {
            let rows = search::formula_table(family, bound);
            if json {
                emit_json(out, &rows)?;
            } else {
                writeln!(out, "family,parameters,formula,engine,agree").map_err(io)?;
                for r in &rows {
                    writeln!(
                        out,
                        "{},\"{}\",{},{},{}",
                        r.family, r.parameters, r.formula, r.engine, r.agree
                    )
                    .map_err(io)?;
                }
            }
            if rows.iter().any(|r| !r.agree) {
                return Ok(Outcome::ChecksFailed);
            }
        }
    }
    Ok(Outcome::Ok)
}
