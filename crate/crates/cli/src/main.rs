use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tightspan::bounds::{bound_table, bound_table_text};
use tightspan::metric::generators::{generators, GenParams};
use tightspan::report::{compute, ComputeOptions};
use tightspan::suites::{suites, SuiteParams};
use tightspan::{EdgeGraph, Error, Metric};

const EXIT_PARSE: u8 = 2;
const EXIT_NOT_GENERIC: u8 = 3;
const EXIT_CHECK_FAILED: u8 = 4;

#[derive(Parser)]
#[command(name = "tspan", version, about = "Exact tight spans of finite rational metrics")]
struct Cli {
    /// Worker threads for candidate filtration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the subdivision, face vectors and tight span of a metric file.
    Compute {
        file: PathBuf,
        /// Cross-check against the primal polyhedron (n <= 6).
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_name = "PATH")]
        export_cells: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        export_faces: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Report non-generic metrics instead of exiting with status 3.
        #[arg(long)]
        allow_degenerate: bool,
        /// Subdivision strategy: enumerate or traverse.
        #[arg(long)]
        strategy: Option<String>,
        /// Enumerate candidates regardless of n.
        #[arg(long)]
        force_enumerate: bool,
        #[arg(long)]
        no_timestamp: bool,
        /// Write the report here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a generated metric as JSON.
    Gen {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        /// Edge list for dgamma, e.g. "1-2,3-4".
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Denominator of random entries (default n^4).
        #[arg(long)]
        resolution: Option<u64>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run a named check suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        count: Option<usize>,
    },
    /// Print the table of face-number bounds.
    Bounds {
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// An error carrying its exit status.
struct Exit(u8, anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Exit {
    fn from(e: E) -> Self {
        Exit(1, e.into())
    }
}

fn parse_err(e: impl Into<anyhow::Error>) -> Exit {
    Exit(EXIT_PARSE, e.into())
}

fn timestamp() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

fn write_json(path: &Path, v: &Value) -> anyhow::Result<()> {
    fs::write(path, serde_json::to_string_pretty(v)? + "\n").with_context(|| format!("writing {}", path.display()))
}

fn read_metric(path: &Path) -> Result<Metric, Exit> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display())).map_err(parse_err)?;
    Metric::from_json(&text).with_context(|| format!("parsing {}", path.display())).map_err(parse_err)
}

fn run(cli: Cli) -> Result<(), Exit> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
    }
    match cli.command {
        Command::Compute {
            file,
            oracle,
            export_cells,
            export_faces,
            format,
            allow_degenerate,
            strategy,
            force_enumerate,
            no_timestamp,
            output,
        } => {
            let d = read_metric(&file)?;
            let mut opts = ComputeOptions { strategy, oracle, allow_degenerate, ..Default::default() };
            if force_enumerate {
                opts.strategy = Some("enumerate".into());
                opts.threshold = d.n();
            }
            let c = match compute(&d, &opts) {
                Err(e @ Error::NotGeneric(_)) => return Err(Exit(EXIT_NOT_GENERIC, e.into())),
                Err(e @ Error::UnknownStrategy { .. }) => return Err(parse_err(e)),
                other => other?,
            };
            if let Some(p) = export_cells {
                write_json(&p, &c.subdivision.to_json())?;
            }
            if let Some(p) = export_faces {
                let faces = c.faces.as_ref().context("no faces: the subdivision is not a triangulation")?;
                write_json(&p, &faces.to_json())?;
            }
            let text = match format {
                Format::Json => {
                    let mut v = c.to_json();
                    if !no_timestamp {
                        v["generated_at"] = json!(timestamp());
                    }
                    serde_json::to_string_pretty(&v)? + "\n"
                }
                Format::Text => {
                    let stamp = if no_timestamp { String::new() } else { format!("generated at {}\n", timestamp()) };
                    stamp + &c.to_text()
                }
            };
            match output {
                Some(p) => fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{text}"),
            }
            if c.any_failed() {
                return Err(Exit(EXIT_CHECK_FAILED, anyhow::anyhow!("at least one check failed")));
            }
        }
        Command::Gen { kind, n, graph, seed, resolution, output } => {
            let registry = generators();
            let g = registry.get(&kind).map_err(parse_err)?;
            let graph = graph.map(|s| EdgeGraph::parse_edge_list(n, &s)).transpose().map_err(parse_err)?;
            let d = g.generate(&GenParams { n, graph, seed, resolution }).map_err(parse_err)?;
            write_json(&output, &d.to_json())?;
        }
        Command::Verify { suite, n_max, n, count } => {
            let registry = suites();
            let s = registry.get(&suite).map_err(parse_err)?;
            let items = s.run(&SuiteParams { n_max, n, count });
            for item in &items {
                println!("{}", item.line());
            }
            let failed = items.iter().filter(|i| !i.verdict.pass).count();
            println!("{}: {} passed, {failed} failed", suite, items.len() - failed);
            if failed > 0 {
                return Err(Exit(EXIT_CHECK_FAILED, anyhow::anyhow!("suite {suite} failed")));
            }
        }
        Command::Bounds { n_min, n_max, format } => match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&bound_table(n_min, n_max))?),
            Format::Text => print!("{}", bound_table_text(n_min, n_max)),
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
