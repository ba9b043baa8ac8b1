//! `demweight`: characters, nonsymmetric Macdonald polynomials, prediction
//! tables, and the invariant verification suite, from the command line.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use demazure_weights::affine_weyl::bruhat_sorted;
use demazure_weights::engine::DEFAULT_RADIUS;
use demazure_weights::exact::{LaurentT, WeightSeries};
use demazure_weights::{Engine, Error, Weight};

#[derive(Parser)]
#[command(
    name = "demweight",
    version,
    about = "Demazure weight multiplicities, Macdonald polynomials, and geometry predictions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Stage {
    /// Full E_lambda(q, t).
    Qt,
    /// The q -> oo limit E_lambda(t).
    T,
    /// The further t -> oo limit: the Demazure character.
    Char,
}

#[derive(Subcommand)]
enum Command {
    /// Demazure character of a weight.
    Char {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Nonsymmetric Macdonald polynomial and its limits.
    Macdonald {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value = "qt")]
        stage: Stage,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Prediction records for one pair or a whole lower set.
    Predict {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "all_mu")]
        mu: Option<String>,
        /// One record per mu in the lower set of lambda.
        #[arg(long)]
        all_mu: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for batch computation.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run the invariant suite over a ball of weights.
    Verify {
        #[arg(long = "type")]
        cartan_type: String,
        /// Maximum ell(tau_lambda); defaults to 8.
        #[arg(long)]
        radius: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Budget(_) => 1,
        Error::Parse(_) | Error::UnsupportedType(_) => 2,
        Error::Domain(_) => 3,
        _ => 4,
    }
}

fn configure_jobs(jobs: Option<usize>) {
    if let Some(j) = jobs {
        // Ignore the error if a global pool already exists.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global();
    }
}

fn engine(cartan_type: &str) -> Result<Engine, Error> {
    Engine::new(cartan_type.parse()?)
}

/// Render `sum c_mu e^mu` with terms in Bruhat-compatible order. The
/// coefficient formatter returns `(text, is_plain)` where plain coefficients
/// of one collapse.
fn render_series<S, F>(eng: &Engine, series: &WeightSeries<S>, fmt_coeff: F) -> String
where
    S: demazure_weights::exact::CoeffRing,
    F: Fn(&S) -> (String, bool),
{
    let support: BTreeSet<Weight> = series.support().cloned().collect();
    if support.is_empty() {
        return "0".to_string();
    }
    let ordered = bruhat_sorted(eng.root_system(), &support);
    let mut parts = Vec::new();
    for mu in ordered {
        let (ctext, plain) = fmt_coeff(&series.coeff(&mu));
        let part = if mu.is_zero() && plain {
            ctext
        } else if mu.is_zero() {
            format!("({ctext})")
        } else if ctext == "1" {
            format!("e^{{{mu}}}")
        } else if plain {
            format!("{ctext}*e^{{{mu}}}")
        } else {
            format!("({ctext})*e^{{{mu}}}")
        };
        parts.push(part);
    }
    parts.join(" + ")
}

fn series_json<S, F>(
    eng: &Engine,
    kind: &str,
    lambda: &Weight,
    series: &WeightSeries<S>,
    fmt_coeff: F,
) -> serde_json::Value
where
    S: demazure_weights::exact::CoeffRing,
    F: Fn(&S) -> serde_json::Value,
{
    let support: BTreeSet<Weight> = series.support().cloned().collect();
    let ordered = bruhat_sorted(eng.root_system(), &support);
    let terms: Vec<serde_json::Value> = ordered
        .iter()
        .map(|mu| {
            serde_json::json!({
                "mu": mu.to_string(),
                "coeff": fmt_coeff(&series.coeff(mu)),
            })
        })
        .collect();
    serde_json::json!({
        "type": eng.root_system().cartan_type.to_string(),
        "kind": kind,
        "lambda": lambda.to_string(),
        "terms": terms,
    })
}

fn laurent_fmt(l: &LaurentT) -> (String, bool) {
    (l.to_string(), l.num_terms() <= 1)
}

fn run(cli: Cli) -> Result<(String, Option<PathBuf>), Error> {
    match cli.command {
        Command::Char {
            cartan_type,
            weight,
            format,
            out,
        } => {
            let eng = engine(&cartan_type)?;
            let lambda: Weight = weight.parse()?;
            let chi = eng.character(&lambda)?;
            let body = match format {
                Format::Text => render_series(&eng, &chi, |c| (c.to_string(), true)),
                Format::Json => {
                    serde_json::to_string_pretty(&series_json(&eng, "char", &lambda, &chi, |c| {
                        serde_json::json!(c)
                    }))
                    .expect("serializable")
                }
                Format::Csv => {
                    return Err(Error::Parse("csv output applies to predict only".into()))
                }
            };
            Ok((body, out))
        }
        Command::Macdonald {
            cartan_type,
            weight,
            stage,
            format,
            out,
        } => {
            let eng = engine(&cartan_type)?;
            let lambda: Weight = weight.parse()?;
            if matches!(format, Format::Csv) {
                return Err(Error::Parse("csv output applies to predict only".into()));
            }
            let m = eng.root_system().denom_m;
            let body = match stage {
                Stage::Qt => {
                    let e = eng.macdonald(&lambda)?;
                    match format {
                        Format::Text => render_series(&eng, &e.coeffs, |c| {
                            (
                                c.format(m),
                                c.is_polynomial() && c.numerator().num_terms() <= 1,
                            )
                        }),
                        _ => serde_json::to_string_pretty(&series_json(
                            &eng,
                            "macdonald_qt",
                            &lambda,
                            &e.coeffs,
                            |c| serde_json::json!(c.format(m)),
                        ))
                        .expect("serializable"),
                    }
                }
                Stage::T => {
                    let e = eng.e_limit(&lambda)?;
                    match format {
                        Format::Text => render_series(&eng, &e, laurent_fmt),
                        _ => serde_json::to_string_pretty(&series_json(
                            &eng,
                            "macdonald_t",
                            &lambda,
                            &e,
                            |c| serde_json::json!(c.to_string()),
                        ))
                        .expect("serializable"),
                    }
                }
                Stage::Char => {
                    let e = eng.e_char(&lambda)?;
                    match format {
                        Format::Text => render_series(&eng, &e, |c| (c.to_string(), true)),
                        _ => serde_json::to_string_pretty(&series_json(
                            &eng,
                            "macdonald_char",
                            &lambda,
                            &e,
                            |c| serde_json::json!(c),
                        ))
                        .expect("serializable"),
                    }
                }
            };
            Ok((body, out))
        }
        Command::Predict {
            cartan_type,
            lambda,
            mu,
            all_mu,
            format,
            out,
            jobs,
        } => {
            configure_jobs(jobs);
            let eng = engine(&cartan_type)?;
            let lambda: Weight = lambda.parse()?;
            let records = if all_mu {
                eng.predict_all(&lambda)?
            } else {
                let mu: Weight = mu
                    .ok_or_else(|| Error::Parse("provide --mu or --all-mu".into()))?
                    .parse()?;
                vec![eng.predict(&lambda, &mu)?]
            };
            let body = match format {
                Format::Json => serde_json::to_string_pretty(&records).expect("serializable"),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record([
                        "type",
                        "lambda",
                        "mu",
                        "m",
                        "n",
                        "vol_poly",
                        "checks_passed",
                    ])
                    .expect("csv record");
                    for r in &records {
                        w.write_record([
                            r.cartan_type.clone(),
                            r.lambda.clone(),
                            r.mu.clone(),
                            r.m.to_string(),
                            r.n.map(|n| n.to_string()).unwrap_or_default(),
                            r.vol_poly.clone().unwrap_or_default(),
                            r.checks_passed().to_string(),
                        ])
                        .expect("csv record");
                    }
                    String::from_utf8(w.into_inner().expect("csv flush")).expect("utf8")
                }
                Format::Text => {
                    let lines: Vec<String> = records
                        .iter()
                        .map(|r| {
                            format!(
                                "lambda={} mu={} m={} n={} vol={} checks={}",
                                r.lambda,
                                r.mu,
                                r.m,
                                r.n.map(|n| n.to_string()).unwrap_or_else(|| "-".into()),
                                r.vol_poly.as_deref().unwrap_or("-"),
                                if r.checks_passed() { "ok" } else { "FAILED" }
                            )
                        })
                        .collect();
                    lines.join("\n")
                }
            };
            Ok((body, out))
        }
        Command::Verify {
            cartan_type,
            radius,
            format,
            out,
            jobs,
        } => {
            configure_jobs(jobs);
            let eng = engine(&cartan_type)?;
            let radius = radius.unwrap_or_else(|| DEFAULT_RADIUS.min(eng.radius_ceiling()));
            let report = eng.verify(radius)?;
            let body = match format {
                Format::Json => serde_json::to_string_pretty(&report).expect("serializable"),
                Format::Text => report.to_string(),
                Format::Csv => {
                    return Err(Error::Parse("csv output applies to predict only".into()))
                }
            };
            if !report.pass {
                emit(&body, &out)?;
                return Err(Error::Internal("verification suite failed".into()));
            }
            Ok((body, out))
        }
    }
}

fn emit(body: &str, out: &Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, format!("{body}\n"))
            .map_err(|e| Error::Internal(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((body, out)) => match emit(&body, &out) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("{e}");
                ExitCode::from(4)
            }
        },
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
