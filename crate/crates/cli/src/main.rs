//! `platlink`: invariants of plat closures from the command line.
//!
//! Results go to stdout as JSON (default) or CSV. Exit status is 0 on
//! success, 2 when the input is well formed but the computation refuses it
//! (the JSON body then carries an `error` code), and 64 on usage errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use platlink::batch::{run_batch_file, BatchLine};
use platlink::cache::Cache;
use platlink::cover::cover_data;
use platlink::diagram::{export, ExportFormat};
use platlink::dynamics::{nt_classify_with, EntropyOptions};
use platlink::family::{distinctness_witnesses, generate_family, Distance};
use platlink::fishnet::{fishnet_parse, jm_distance};
use platlink::plat::summarize;
use platlink::report::{analyze, round5};
use platlink::{parse_braid, BraidWord, Error};

const EXIT_DOMAIN: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "platlink", version, about = "Invariants of links presented as plat closures of braids")]
struct Cli {
    /// Braid word, e.g. "s2^2 s4 s1 s3 s5 s2".
    #[arg(long, global = true)]
    braid: Option<String>,
    /// Number of strands (even for plat closures).
    #[arg(long, global = true)]
    strands: Option<usize>,
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Cache directory; falls back to $PLATLINK_CACHE_DIR.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Component count and bridges per component of the plat closure.
    Components,
    /// Topological entropy of the braid.
    Entropy {
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
        #[arg(long, default_value_t = 10_000)]
        max_iter: usize,
    },
    /// Exact bridge distance of a highly twisted plat.
    Distance,
    /// Homology of the double branched cover.
    Cover,
    /// Knot family from the powers of a pseudo-Anosov braid.
    Family {
        #[arg(long, default_value_t = 25)]
        max_power: u64,
        #[arg(long)]
        assume_generic: bool,
    },
    /// Diagram of the plat closure as PD code, Gauss code or SVG.
    Export {
        #[arg(long)]
        format: String,
    },
    /// Full invariant record, served from the cache when configured.
    Report,
    /// One record per line of a file of braids in numeric form.
    Batch { file: PathBuf },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Table = (Vec<&'static str>, Vec<Vec<String>>);

/// What a subcommand produced: a JSON value with its CSV rendering, or raw text.
enum Outcome {
    Structured(Value, Table),
    Text(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            emit(out, cli.output);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Domain(e)) => {
            println!("{}", json!({"error": e.code(), "message": e.to_string()}));
            ExitCode::from(EXIT_DOMAIN)
        }
    }
}

fn braid(cli: &Cli) -> Result<BraidWord, Failure> {
    let (text, strands) = braid_args(cli)?;
    Ok(parse_braid(text, strands)?)
}

/// Braid without the plat parity check, for braid-level invariants.
fn any_braid(cli: &Cli) -> Result<BraidWord, Failure> {
    let (text, strands) = braid_args(cli)?;
    Ok(BraidWord::parse(text, strands)?)
}

fn braid_args(cli: &Cli) -> Result<(&str, usize), Failure> {
    match (&cli.braid, cli.strands) {
        (Some(text), Some(strands)) => Ok((text, strands)),
        _ => Err(Failure::Usage("this subcommand needs --braid and --strands".to_string())),
    }
}

fn cache(cli: &Cli) -> Result<Option<Cache>, Failure> {
    Ok(Cache::configured(cli.cache_dir.as_deref())?)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialise")
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Components => {
            let s = summarize(&braid(cli)?);
            let bridges: Vec<String> = s.bridges_per_component.iter().map(ToString::to_string).collect();
            Ok(Outcome::Structured(
                json!({"components": s.components, "bridges": s.bridges_per_component}),
                (vec!["components", "bridges"], vec![vec![s.components.to_string(), bridges.join(" ")]]),
            ))
        }
        Command::Entropy { tol, max_iter } => {
            let nt = nt_classify_with(&any_braid(cli)?, &EntropyOptions { tol: *tol, max_iter: *max_iter });
            let verdict = to_value(&nt.verdict);
            let e = round5(nt.entropy_estimate);
            Ok(Outcome::Structured(
                json!({"entropy": e, "converged": nt.converged, "iterations": nt.iterations, "verdict": verdict}),
                (
                    vec!["entropy", "converged", "iterations", "verdict"],
                    vec![vec![
                        format!("{e:.5}"),
                        nt.converged.to_string(),
                        nt.iterations.to_string(),
                        verdict.as_str().unwrap_or_default().to_string(),
                    ]],
                ),
            ))
        }
        Command::Distance => {
            let g = fishnet_parse(&braid(cli)?)?;
            let d = jm_distance(&g)?;
            Ok(Outcome::Structured(
                json!({"distance": d, "width": g.width, "rows": g.height()}),
                (vec!["distance", "width", "rows"], vec![vec![d.to_string(), g.width.to_string(), g.height().to_string()]]),
            ))
        }
        Command::Cover => {
            let c = cover_data(&braid(cli)?)?;
            let torsion: Vec<String> = c.h1_torsion.iter().map(|t| t.0.to_string()).collect();
            let row = vec![c.h1_order.to_string(), c.h1_free_rank.to_string(), torsion.join(" ")];
            Ok(Outcome::Structured(to_value(&c), (vec!["h1_order", "h1_free_rank", "h1_torsion"], vec![row])))
        }
        Command::Family { max_power, assume_generic } => {
            let r = generate_family(&braid(cli)?, *max_power, *assume_generic)?;
            let witnesses = distinctness_witnesses(&r).unwrap_or_default();
            let rows = r
                .entries
                .iter()
                .map(|e| {
                    vec![
                        e.power.to_string(),
                        match e.distance {
                            Distance::Exact { d } => d.to_string(),
                            Distance::LowerBoundTrack => "lower_bound_track".to_string(),
                        },
                        e.prime.to_string(),
                        e.hyperbolic.to_string(),
                        format!("{:.5}", e.entropy),
                        e.genus_lower_bound.map(|g| g.to_string()).unwrap_or_default(),
                        e.crossings.to_string(),
                        e.determinant.to_string(),
                    ]
                })
                .collect();
            let mut value = to_value(&r);
            for e in value["entries"].as_array_mut().into_iter().flatten() {
                if let Some(x) = e["entropy"].as_f64() {
                    e["entropy"] = json!(round5(x));
                }
            }
            value["entropy"] = json!(round5(r.entropy));
            value["witnesses"] = to_value(&witnesses);
            let header =
                vec!["power", "distance", "prime", "hyperbolic", "entropy", "genus_lower_bound", "crossings", "determinant"];
            Ok(Outcome::Structured(value, (header, rows)))
        }
        Command::Export { format } => {
            let f: ExportFormat = format.parse()?;
            Ok(Outcome::Text(export(&braid(cli)?, f)?))
        }
        Command::Report => {
            let w = braid(cli)?;
            let (record, status) = match cache(cli)? {
                Some(c) => {
                    let (r, s) = c.get_or_compute(&w)?;
                    (r, Some(s))
                }
                None => (analyze(&w)?, None),
            };
            if let Some(s) = status {
                eprintln!("cache: {}", to_value(&s).as_str().unwrap_or_default());
            }
            let row = record_row(&record);
            Ok(Outcome::Structured(to_value(&record), (RECORD_HEADER.to_vec(), vec![row])))
        }
        Command::Batch { file } => {
            let lines = run_batch_file(file, cache(cli)?.as_ref())?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for l in &lines {
                text.push_str(&serde_json::to_string(l).expect("batch lines serialise"));
                text.push('\n');
                rows.push(match l {
                    BatchLine::Ok { line, record } => {
                        let mut r = vec![line.to_string()];
                        r.extend(record_row(record));
                        r.push(String::new());
                        r
                    }
                    BatchLine::Failed { line, error, .. } => {
                        let mut r = vec![line.to_string()];
                        r.extend(std::iter::repeat_n(String::new(), RECORD_HEADER.len()));
                        r.push(error.clone());
                        r
                    }
                });
            }
            if cli.output == Output::Csv {
                let mut header = vec!["line"];
                header.extend(RECORD_HEADER);
                header.push("error");
                return Ok(Outcome::Structured(Value::Null, (header, rows)));
            }
            Ok(Outcome::Text(text))
        }
    }
}

const RECORD_HEADER: [&str; 8] =
    ["key", "normalized", "strands", "components", "entropy", "h1_order", "distance", "schema_version"];

fn record_row(r: &platlink::report::ReportRecord) -> Vec<String> {
    vec![
        r.key.clone(),
        r.normalized.clone(),
        r.strands.to_string(),
        r.components.to_string(),
        format!("{:.5}", r.entropy),
        r.h1_order.0.to_string(),
        r.distance.map(|d| d.to_string()).unwrap_or_default(),
        r.schema_version.clone(),
    ]
}

fn emit(out: Outcome, format: Output) {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match (out, format) {
        (Outcome::Text(t), _) => {
            let _ = lock.write_all(t.as_bytes());
            if !t.ends_with('\n') {
                let _ = writeln!(lock);
            }
        }
        (Outcome::Structured(v, _), Output::Json) => {
            let _ = writeln!(lock, "{v}");
        }
        (Outcome::Structured(_, (header, rows)), Output::Csv) => {
            let mut w = csv::Writer::from_writer(lock);
            let _ = w.write_record(&header);
            for r in rows {
                let _ = w.write_record(&r);
            }
            let _ = w.flush();
        }
    }
}
