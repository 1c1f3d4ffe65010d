use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use demkit::comparison::{self, ComparisonReport, DEFAULT_COMPARISON_CAP};
use demkit::cover;
use demkit::monitoring::{self, DEFAULT_MAX_N};
use demkit::theorems::{self, Suite, Verdict, VerificationRecord, VerifyConfig};
use demkit::{DemOptions, Execution, Graph, GraphExpr};

/// Distance-edge-monitoring sets of graphs and graph products.
#[derive(Parser)]
#[command(name = "demkit", version)]
struct Cli {
    /// Largest graph the exact solvers will accept.
    #[arg(long, global = true, env = "DEMKIT_MAX_N", default_value_t = DEFAULT_MAX_N)]
    max_n: usize,

    /// Write the report here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    /// Disable data parallelism.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact dem(G) with a lexicographically smallest witness.
    Dem {
        /// `gen=<expr>` or an edge-list file.
        graph: String,
        /// Also list every minimum DEM set.
        #[arg(long)]
        all_min_sets: bool,
        /// Report the greedy set instead of solving exactly.
        #[arg(long, conflicts_with = "all_min_sets")]
        greedy: bool,
    },
    /// Print the edge list of a family or product expression.
    Gen { expr: String },
    /// Minimum vertex cover.
    Cover { graph: String },
    /// Check the formula registry against the exact solver.
    Verify {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Include per-record runtimes (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// dem next to metric, edge metric and strong metric dimension, as CSV.
    Compare {
        #[arg(required = true)]
        graphs: Vec<String>,
        /// Largest graph for the brute-force dimension solvers.
        #[arg(long, default_value_t = DEFAULT_COMPARISON_CAP)]
        cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Plain,
}

fn load(arg: &str) -> Result<Graph> {
    if let Some(expr) = arg.strip_prefix("gen=") {
        let expr: GraphExpr = expr.parse()?;
        return Ok(expr.build()?);
    }
    let text = fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
    demkit::parse_edge_list(&text).with_context(|| format!("parsing {arg}"))
}

fn display_name(arg: &str) -> &str {
    arg.strip_prefix("gen=").unwrap_or(arg)
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}

fn json_line(v: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn verify_report(records: &[VerificationRecord], format: Format, timings: bool) -> Result<String> {
    let ms = |r: &VerificationRecord| r.runtime.as_secs_f64() * 1e3;
    Ok(match format {
        Format::Csv => {
            let mut s = VerificationRecord::CSV_HEADER.to_string();
            if timings {
                s.push_str(",runtime_ms");
            }
            s.push('\n');
            for r in records {
                s.push_str(&r.csv_row(timings));
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let mut rows = Vec::with_capacity(records.len());
            for r in records {
                let mut v = serde_json::to_value(r)?;
                if timings {
                    v["runtime_ms"] = json!(ms(r));
                }
                rows.push(v);
            }
            json_line(&Value::Array(rows))?
        }
        Format::Plain => {
            let width = records.iter().map(|r| r.instance.len()).max().unwrap_or(0);
            let mut s = String::new();
            for r in records {
                let cell = |v: Option<String>| v.unwrap_or_else(|| "-".into());
                s.push_str(&format!(
                    "{:<7} {:<width$}  {:<30} predicted {:<8} computed {:<4}",
                    r.verdict.to_string().to_uppercase(),
                    r.instance,
                    r.claim,
                    cell(r.predicted.map(|p| p.to_string())),
                    cell(r.computed.map(|c| c.to_string())),
                ));
                if timings {
                    s.push_str(&format!(" {:>9.1} ms", ms(r)));
                }
                if let Some(note) = &r.note {
                    s.push_str("  ");
                    s.push_str(note);
                }
                s = s.trim_end().to_string();
                s.push('\n');
            }
            s
        }
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let execution = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let opts = DemOptions {
        max_n: cli.max_n,
        execution,
        ..DemOptions::default()
    };
    match &cli.command {
        Command::Dem {
            graph,
            all_min_sets,
            greedy,
        } => {
            let g = load(graph)?;
            let text = if *greedy {
                json_line(&json!({
                    "n": g.order(),
                    "m": g.size(),
                    "greedy": monitoring::greedy_dem_with(&g, execution),
                }))?
            } else {
                let opts = DemOptions {
                    enumerate_all: *all_min_sets,
                    ..opts
                };
                json_line(&monitoring::dem_number(&g, &opts)?)?
            };
            emit(&cli.output, &text)?;
        }
        Command::Gen { expr } => {
            let expr: GraphExpr = expr.parse()?;
            emit(&cli.output, &expr.build()?.to_edge_list())?;
        }
        Command::Cover { graph } => {
            let g = load(graph)?;
            emit(&cli.output, &json_line(&cover::vertex_cover_number_capped(&g, cli.max_n)?)?)?;
        }
        Command::Verify {
            suite,
            seed,
            format,
            timings,
        } => {
            let cfg = VerifyConfig { dem: opts, seed: *seed };
            let records = theorems::run_suite(suite.parse()?, &cfg)?;
            emit(&cli.output, &verify_report(&records, *format, *timings)?)?;
            let count = |v: Verdict| records.iter().filter(|r| r.verdict == v).count();
            let failed = count(Verdict::Fail);
            eprintln!(
                "{} pass, {failed} fail, {} skipped",
                count(Verdict::Pass),
                count(Verdict::Skipped)
            );
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Compare { graphs, cap } => {
            let mut text = format!("{}\n", ComparisonReport::CSV_HEADER);
            for arg in graphs {
                let g = load(arg)?;
                let report = comparison::compare(&g, display_name(arg), &opts, *cap)?;
                text.push_str(&report.csv_row());
                text.push('\n');
            }
            emit(&cli.output, &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
