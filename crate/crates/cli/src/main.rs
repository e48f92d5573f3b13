//! `sigmasum`: exact summation of divergent algebraic series from the command line.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use serde_json::json;
use sigmasum::addsum;
use sigmasum::algseries;
use sigmasum::certificate::Certificate;
use sigmasum::corpus;
use sigmasum::expr::{self, Config};
use sigmasum::guess::{self, GuessBounds};
use sigmasum::{Field, Series};

#[derive(Parser, Debug)]
#[command(name = "sigmasum", version, about = "Exact summation of divergent algebraic power series")]
struct Cli {
    /// Truncation order of every expansion.
    #[arg(long, global = true, env = "SIGMASUM_ORDER", default_value_t = 64)]
    order: usize,
    /// Coefficient field: `q` or `fp:<p>`.
    #[arg(long, global = true, env = "SIGMASUM_FIELD", default_value = "q")]
    field: String,
    /// Largest T-degree tried by `guess`.
    #[arg(long = "dT", global = true, env = "SIGMASUM_DT", default_value_t = 2)]
    d_t: usize,
    /// Largest σ-degree tried by `guess`, and largest denominator degree for `telescope`.
    #[arg(long = "ds", global = true, env = "SIGMASUM_DS", default_value_t = 2)]
    d_s: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true, env = "SIGMASUM_JSON")]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sum a series expression with the univalent extension.
    Sum { expr: String },
    /// Print the full certificate of a series expression.
    Classify { expr: String },
    /// Print the scalar polynomial of a series expression.
    Scalarpoly { expr: String },
    /// Look for a rational closed form of a coefficient stream and evaluate it.
    Telescope { file: PathBuf },
    /// Guess an annihilator for a coefficient stream.
    Guess { file: PathBuf },
    /// Run a directory of golden cases.
    Corpus {
        dir: PathBuf,
        /// Overwrite the expected files with the current outputs.
        #[arg(long)]
        bless: bool,
    },
}

fn config(cli: &Cli) -> anyhow::Result<Config> {
    if cli.order == 0 {
        return Err(anyhow!("--order must be positive"));
    }
    Ok(Config { order: cli.order, field: Field::parse(&cli.field)? })
}

/// Reads one rational per line; `#` starts a comment.
fn read_stream(path: &Path, field: Field) -> anyhow::Result<Series> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut coeffs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let c = expr::parse_scalar(line, field).with_context(|| format!("{}:{}", path.display(), i + 1))?;
        coeffs.push(c);
    }
    Ok(Series::new(field, coeffs))
}

fn emit(cli: &Cli, value: serde_json::Value, text: String) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        print!("{text}");
    }
}

fn evaluate(cli: &Cli, text: &str) -> anyhow::Result<(String, sigmasum::AlgebraicSeries)> {
    let cfg = config(cli)?;
    let parsed = expr::parse(text)?;
    let a = expr::evaluate(&parsed, &cfg)?;
    Ok((parsed.to_string(), a))
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    match &cli.command {
        Command::Sum { expr } => {
            let (input, a) = evaluate(cli, expr)?;
            let cert = Certificate::for_series(&input, &a);
            let text = match &cert.value {
                Some(v) => format!("{v}\nstatus: {}\n", cert.status),
                None => format!("no value\nstatus: {}\n", cert.status),
            };
            emit(cli, serde_json::to_value(&cert)?, text);
        }
        Command::Classify { expr } => {
            let (input, a) = evaluate(cli, expr)?;
            let cert = Certificate::for_series(&input, &a);
            emit(cli, serde_json::to_value(&cert)?, cert.to_text());
        }
        Command::Scalarpoly { expr } => {
            let (input, a) = evaluate(cli, expr)?;
            let s = addsum::scalar_polynomial(&a).to_string();
            let v = json!({ "input": input, "annihilator": a.ann().to_string(), "scalar_poly": s });
            emit(cli, v, format!("{s}\n"));
        }
        Command::Telescope { file } => {
            let cfg = config(cli)?;
            let x = read_stream(file, cfg.field)?;
            match guess::detect_telescope(&x, cli.d_s)? {
                Some((num, den)) => {
                    let value = addsum::telescope_eval(&num, &den)?;
                    let v = json!({
                        "input": file.display().to_string(),
                        "numerator": num.to_string(),
                        "denominator": den.to_string(),
                        "value": value.to_string(),
                        "order": x.order(),
                    });
                    emit(cli, v, format!("({num}) / ({den})\nvalue: {value}\n"));
                }
                None => {
                    let v = json!({ "input": file.display().to_string(), "numerator": null, "denominator": null, "value": null, "order": x.order() });
                    emit(cli, v, "no telescoping relation found\n".to_string());
                }
            }
        }
        Command::Guess { file } => {
            let cfg = config(cli)?;
            let x = read_stream(file, cfg.field)?;
            let n = x.order();
            let bounds = GuessBounds { certify_order: n, ..GuessBounds::new(cli.d_t, cli.d_s, n / 2) };
            let input = file.display().to_string();
            let cert = match guess::guess_annihilator(&x, &bounds)? {
                Some(p) => Certificate::for_series(&input, &algseries::from_expansion(&p, x)?),
                None => Certificate::no_relation(&input, cfg.field, n),
            };
            emit(cli, serde_json::to_value(&cert)?, cert.to_text());
        }
        Command::Corpus { dir, bless } => {
            let cfg = config(cli)?;
            if *bless {
                let n = corpus::bless(dir, &cfg)?;
                emit(cli, json!({ "blessed": n }), format!("blessed {n} cases\n"));
                return Ok(true);
            }
            let reports = corpus::run_dir(dir, &cfg)?;
            let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
            let text: String = reports
                .iter()
                .map(|r| match (r.passed(), r.expected.is_some()) {
                    (true, _) => format!("ok      {}\n", r.name),
                    (false, false) => format!("MISSING {} (no expected file)\n", r.name),
                    (false, true) => format!("FAIL    {} (differs in: {})\n", r.name, r.differing_keys().join(", ")),
                })
                .chain(std::iter::once(format!("{} passed, {} failed\n", reports.len() - failed.len(), failed.len())))
                .collect();
            let v = json!({
                "passed": reports.len() - failed.len(),
                "failed": failed.iter().map(|r| r.name.clone()).collect::<Vec<_>>(),
            });
            emit(cli, v, text);
            return Ok(failed.is_empty());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            let kind = e.downcast_ref::<sigmasum::Error>().map_or("Error", sigmasum::Error::kind);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&json!({ "error": kind, "message": format!("{e:#}") })).expect("json"));
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::FAILURE
        }
    }
}
