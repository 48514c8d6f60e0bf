use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use weakorder::bruhat::{bruhat_dot, check_conjecture_h, pair_labels};
use weakorder::coxeter::{format_word, DEFAULT_ROOT_CAP};
use weakorder::perm::TypeA;
use weakorder::weak_order::describe;
use weakorder::{
    Backend, BuildConfig, Conjecture, CoxeterGraph, CoxeterSystem, ElemId, RootSubset, SweepConfig,
    SweepMode,
};

#[derive(Parser, Debug)]
#[command(
    name = "weakorder",
    version,
    about = "Weak-order joins and Bruhat paths in finite Coxeter groups"
)]
struct Cli {
    #[command(flatten)]
    group: GroupArgs,

    /// Output format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").args(["type_name", "matrix"])))]
struct GroupArgs {
    /// Named finite type: A3, B4, D4, E6, F4, H3, I2(7), ...
    #[arg(long = "type", global = true)]
    type_name: Option<String>,

    /// JSON file with {"rank": n, "m": [[...]]}.
    #[arg(long, global = true)]
    matrix: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = BackendArg::Exact)]
    backend: BackendArg,

    /// Maximum number of positive roots generated before giving up.
    #[arg(long, global = true, default_value_t = DEFAULT_ROOT_CAP)]
    cap: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the positive-root table.
    Roots,
    /// Compute u ∨ v and both sides of Conjecture H for one pair.
    Join {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Sweep a conjecture over all (or sampled) ordered pairs.
    Verify {
        #[arg(long, default_value = "H")]
        conjecture: String,
        /// Worker threads (0 = one per core).
        #[arg(long, env = "WEAKORDER_WORKERS", default_value_t = 0)]
        workers: usize,
        /// Check this many random ordered pairs instead of all of them.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0, requires = "sample")]
        seed: u64,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Export the Bruhat graph restricted to V_W(u, v) as Graphviz.
    Dot {
        #[command(flatten)]
        pair: PairArgs,
        /// Output file; stdout if omitted.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct PairArgs {
    /// Generator word such as "1 2 1", or a permutation such as 3124 in type A.
    #[arg(long, allow_hyphen_values = true)]
    u: String,
    #[arg(long, allow_hyphen_values = true)]
    v: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

/// An error together with the process exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUILD: u8 = 3;

fn usage(error: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        error: error.into(),
    }
}

fn build_error(error: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: EXIT_BUILD,
        error: error.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let sys = load_system(&cli.group)?;
    match &cli.command {
        Command::Roots => roots(&sys, cli.format),
        Command::Join { pair } => join(&sys, pair, cli.format),
        Command::Verify {
            conjecture,
            workers,
            sample,
            seed,
            report,
        } => {
            let conjecture: Conjecture = conjecture.parse().map_err(usage)?;
            let mode = match sample {
                Some(size) => SweepMode::Sample {
                    size: *size,
                    seed: *seed,
                },
                None => SweepMode::Exhaustive,
            };
            let config = SweepConfig {
                mode,
                workers: *workers,
            };
            verify(&sys, conjecture, &config, report.as_ref(), cli.format)
        }
        Command::Dot { pair, dot } => export_dot(&sys, pair, dot.as_ref()),
    }
}

fn load_system(args: &GroupArgs) -> Result<CoxeterSystem, Failure> {
    let graph = match (&args.type_name, &args.matrix) {
        (Some(name), None) => CoxeterGraph::named(name).map_err(usage)?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(usage)?;
            CoxeterGraph::from_json(&text).map_err(usage)?
        }
        _ => return Err(usage(anyhow!("one of --type or --matrix is required"))),
    };
    let config = BuildConfig {
        backend: match args.backend {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        },
        root_cap: args.cap,
        ..BuildConfig::default()
    };
    CoxeterSystem::build(graph, &config).map_err(build_error)
}

fn parse_element(sys: &CoxeterSystem, input: &str) -> Result<ElemId, Failure> {
    let parsed = sys
        .parse_element(input)
        .with_context(|| format!("cannot parse element `{input}`"))
        .map_err(usage)?;
    if !parsed.reduced {
        eprintln!(
            "warning: `{input}` is not reduced; using {} (length {})",
            sys.format_element(parsed.element),
            sys.group().length(parsed.element)
        );
    }
    Ok(parsed.element)
}

/// Writes to stdout, treating a closed pipe as a normal end of output.
fn emit(text: &str) -> Result<(), Failure> {
    let mut stdout = io::stdout().lock();
    match stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
    {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(build_error(e)),
        _ => Ok(()),
    }
}

fn print_json(value: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("json values serialize");
    emit(&format!("{text}\n"))
}

fn roots(sys: &CoxeterSystem, format: Format) -> Result<u8, Failure> {
    let table = sys.table();
    let g = sys.group();
    match format {
        Format::Json => {
            let roots: Vec<Value> = table
                .roots()
                .iter()
                .map(|r| {
                    json!({
                        "index": r.index,
                        "label": table.label(r.index),
                        "depth": r.depth,
                        "coords": r.coords,
                        "decimal": r.decimal,
                        "reflection": g.format_word(g.phi(r.index)),
                    })
                })
                .collect();
            print_json(&json!({
                "schema": 1,
                "type": sys.name(),
                "backend": sys.backend(),
                "ring": sys.ring_parameter(),
                "count": table.len(),
                "roots": roots,
            }))?;
        }
        Format::Text => {
            let mut out = String::new();
            let ring = sys
                .ring_parameter()
                .map(|l| format!(", ring L={l}"))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{}: {} positive roots ({} backend{ring}), |W| = {}",
                sys.name(),
                table.len(),
                sys.backend(),
                g.order()
            );
            for r in table.roots() {
                let decimal: Vec<String> = r.decimal.iter().map(|x| format!("{x:.6}")).collect();
                let _ = writeln!(
                    out,
                    "{:>4}  {:<24} [{}]  s = {}",
                    r.index,
                    table.label(r.index),
                    decimal.join(", "),
                    g.format_word(g.phi(r.index))
                );
            }
            emit(&out)?;
        }
    }
    Ok(0)
}

/// Reflections as transpositions in type A, root labels otherwise.
fn reflection_names(sys: &CoxeterSystem, set: RootSubset) -> Vec<String> {
    match TypeA::new(sys) {
        Ok(a) => {
            let mut ts: Vec<_> = set.iter().map(|r| a.transposition(r)).collect();
            ts.sort();
            ts.iter().map(|t| t.to_string()).collect()
        }
        Err(_) => set.iter().map(|r| sys.table().label(r)).collect(),
    }
}

fn join(sys: &CoxeterSystem, pair: &PairArgs, format: Format) -> Result<u8, Failure> {
    let g = sys.group();
    let u = parse_element(sys, &pair.u)?;
    let v = parse_element(sys, &pair.v)?;
    let verdict = check_conjecture_h(g, u, v).map_err(build_error)?;
    let j = weakorder::weak_order::join_bruteforce(g, u, v).map_err(build_error)?;
    let excluded = sys.table().all().difference(verdict.rhs);
    match format {
        Format::Json => {
            let set = |s: RootSubset| {
                let d = describe(sys.table(), s);
                json!({
                    "indices": d.indices,
                    "roots": d.roots,
                    "reflections": reflection_names(sys, s),
                })
            };
            print_json(&json!({
                "schema": 1,
                "type": sys.name(),
                "u": sys.format_element(u),
                "v": sys.format_element(v),
                "join": sys.format_element(j),
                "join_word": format_word(&g.word(j)),
                "tl_join": set(verdict.lhs),
                "t_cap_v": set(verdict.rhs),
                "excluded": set(excluded),
                "holds": verdict.holds,
            }))?;
        }
        Format::Text => {
            let mut out = String::new();
            let show = |s: RootSubset| format!("{{{}}}", reflection_names(sys, s).join(", "));
            let _ = writeln!(out, "u              = {}", sys.format_element(u));
            let _ = writeln!(out, "v              = {}", sys.format_element(v));
            let _ = writeln!(out, "u ∨ v          = {}", sys.format_element(j));
            let _ = writeln!(out, "T_L(u ∨ v)     = {}", show(verdict.lhs));
            let _ = writeln!(out, "T ∩ V_W(u, v)  = {}", show(verdict.rhs));
            let _ = writeln!(out, "excluded       = {}", show(excluded));
            let _ = writeln!(
                out,
                "verdict        = {}",
                if verdict.holds { "holds" } else { "FAILS" }
            );
            emit(&out)?;
        }
    }
    Ok(if verdict.holds { 0 } else { EXIT_FAILED })
}

fn verify(
    sys: &CoxeterSystem,
    conjecture: Conjecture,
    config: &SweepConfig,
    report: Option<&PathBuf>,
    format: Format,
) -> Result<u8, Failure> {
    let r = weakorder::verifier::sweep(sys, conjecture, config).map_err(build_error)?;
    let json = r.to_json();
    if let Some(path) = report {
        fs::write(path, format!("{json}\n"))
            .with_context(|| format!("writing {}", path.display()))
            .map_err(build_error)?;
    }
    match format {
        Format::Json => emit(&format!("{json}\n"))?,
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{} conjecture {} ({}, {}): {} pairs, {} failures, {} ms, workers={}",
                r.type_name,
                r.conjecture,
                r.backend,
                r.mode,
                r.pairs_checked,
                r.failure_count,
                r.wall_time_ms,
                r.workers
            );
            for f in &r.failures {
                let _ = writeln!(
                    out,
                    "  u = {}, v = {}: lhs {:?} rhs {:?}",
                    f.u, f.v, f.lhs, f.rhs
                );
            }
            emit(&out)?;
        }
    }
    Ok(if r.holds() { 0 } else { EXIT_FAILED })
}

fn export_dot(sys: &CoxeterSystem, pair: &PairArgs, out: Option<&PathBuf>) -> Result<u8, Failure> {
    let u = parse_element(sys, &pair.u)?;
    let v = parse_element(sys, &pair.v)?;
    let dot = bruhat_dot(sys, pair_labels(sys.group(), u, v));
    match out {
        Some(path) => fs::write(path, dot)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(build_error)?,
        None => emit(&dot)?,
    }
    Ok(0)
}
