use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use badc::badc::{canonicalize, BadcSpec, DoubleCycle, Kind};
use badc::dynamics::{to_dot, BuildOptions, DynamicsReport, TransitionGraph};
use badc::network::Sign;
use badc::seqdsl::{self, ExecOptions};
use badc::verify::{self, SuiteConfig, VerificationReport, VerifyOptions};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "badc",
    version,
    about = "Asynchronous dynamics of Boolean automata double-cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Attractors, transient count and convergence time of a canonical double-cycle.
    Attractors {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        build: BuildArgs,
    },
    /// Runs an instruction program from a start configuration.
    Run {
        #[command(flatten)]
        system: SystemArgs,
        /// Start configuration, e.g. "(1000,10)".
        #[arg(long)]
        start: String,
        /// Program file.
        #[arg(long, conflicts_with = "expr", required_unless_present = "expr")]
        prog: Option<PathBuf>,
        /// Inline program text; statements separated by ';'.
        #[arg(short = 'e', long)]
        expr: Option<String>,
        /// Exit with status 1 unless every macro postcondition was met.
        #[arg(long)]
        certify: bool,
        /// Treat expand with no hub-adjacent pattern as an error.
        #[arg(long)]
        strict_expand: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Checks the dynamical results against exhaustive enumeration.
    Verify(VerifyArgs),
    /// Writes the transition graph in Graphviz format.
    Export {
        #[command(flatten)]
        system: SystemArgs,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        build: BuildArgs,
    },
    /// Maps a signed double-cycle onto its canonical form.
    Canonicalize {
        /// Signs file: one line per cycle, e.g. "L + - +" and "R + +".
        signs: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct SystemArgs {
    #[arg(long)]
    kind: Kind,
    #[arg(short, value_parser = clap::value_parser!(u16).range(1..))]
    n: u16,
    #[arg(short, value_parser = clap::value_parser!(u16).range(1..))]
    m: u16,
}

impl SystemArgs {
    fn system(&self) -> Result<DoubleCycle, Failure> {
        DoubleCycle::canonical(self.kind, self.n.into(), self.m.into()).map_err(Failure::usage)
    }
}

#[derive(Args)]
struct BuildArgs {
    /// Largest number of automata to enumerate.
    #[arg(long, default_value_t = 24)]
    cap: usize,
    #[arg(long)]
    parallel: bool,
}

impl BuildArgs {
    fn options(&self) -> BuildOptions {
        BuildOptions {
            cap: self.cap,
            parallel: self.parallel,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Positive,
    Mixed,
    Negative,
    Copy,
    Quadratic,
    Canonical,
    Cycles,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every suite (the default when no suite is given).
    #[arg(long, conflicts_with = "suite")]
    all: bool,
    #[arg(long, value_enum)]
    suite: Option<Suite>,
    #[arg(short)]
    n: Option<usize>,
    #[arg(short)]
    m: Option<usize>,
    /// Largest double-cycle, in automata, for the kind suites.
    #[arg(long, default_value_t = 9)]
    max_size: usize,
    /// Cycle sizes for the quadratic suite.
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 4, 6])]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 0x0bad_c0de)]
    seed: u64,
    /// Random networks drawn by the cycles suite.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// An error with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(e: impl fmt::Display) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Attractors { system, format, build } => {
            let d = system.system()?;
            let graph = TransitionGraph::build_with(d.network(), build.options()).map_err(Failure::usage)?;
            let report = DynamicsReport::new(&d, &graph);
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print_json(&serde_json::to_value(&report).expect("report serializes")),
            }
            Ok(0)
        }
        Command::Run {
            system,
            start,
            prog,
            expr,
            certify,
            strict_expand,
            format,
        } => {
            let d = system.system()?;
            let x = d.parse(&start).map_err(Failure::usage)?;
            let text = match (prog, expr) {
                (Some(path), _) => read(&path)?,
                (None, Some(e)) => e,
                (None, None) => unreachable!("clap requires one of --prog and --expr"),
            };
            let program = seqdsl::parse(&text).map_err(Failure::usage)?;
            let trace = seqdsl::exec_with(&d, x, &program, ExecOptions { strict_expand }).map_err(Failure::usage)?;
            match format {
                Format::Text => print!("{}", trace.to_text(&d.layout())),
                Format::Json => print_json(&trace.to_json(&d.layout())),
            }
            Ok(if certify && !trace.all_certified() { 1 } else { 0 })
        }
        Command::Verify(args) => {
            let report = run_verify(&args)?;
            match args.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print_json(&serde_json::to_value(&report).expect("report serializes")),
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Command::Export { system, out, build } => {
            let d = system.system()?;
            let graph = TransitionGraph::build_with(d.network(), build.options()).map_err(Failure::usage)?;
            let dot = to_dot(&d.layout(), &graph);
            match out {
                Some(path) => fs::write(&path, dot)
                    .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{dot}"),
            }
            Ok(0)
        }
        Command::Canonicalize { signs, format } => {
            let spec = parse_signs(&read(&signs)?)?;
            let (canonical, relabel) = canonicalize(&spec).map_err(Failure::usage)?;
            let layout = spec.layout();
            let flips: Vec<(String, bool)> = relabel
                .flips
                .iter()
                .enumerate()
                .map(|(i, &f)| (layout.automaton_name(i), f))
                .collect();
            match format {
                Format::Text => {
                    println!("kind: {}", canonical.kind());
                    println!("swap cycles: {}", if relabel.swap_cycles { "yes" } else { "no" });
                    println!("identity: {}", if relabel.is_identity() { "yes" } else { "no" });
                    for (name, f) in &flips {
                        println!("{name:>4} {}", u8::from(*f));
                    }
                }
                Format::Json => print_json(&json!({
                    "schemaVersion": 1,
                    "kind": canonical.kind(),
                    "n": canonical.layout().n,
                    "m": canonical.layout().m,
                    "swapCycles": relabel.swap_cycles,
                    "identity": relabel.is_identity(),
                    "flips": flips.iter().map(|(name, f)| json!({"automaton": name, "flip": f})).collect::<Vec<_>>(),
                })),
            }
            Ok(0)
        }
    }
}

fn run_verify(args: &VerifyArgs) -> Result<VerificationReport, Failure> {
    let options = VerifyOptions::default();
    let pairs = |min: usize| match (args.n, args.m) {
        (Some(n), Some(m)) => Ok(vec![(n, m)]),
        (None, None) => Ok(verify::size_pairs(min, args.max_size)),
        _ => Err(Failure::usage("-n and -m must be given together")),
    };
    let dims = |default: (usize, usize)| (args.n.unwrap_or(default.0), args.m.unwrap_or(default.1));
    let report = match args.suite {
        None => verify::verify_all(&SuiteConfig {
            max_size: args.max_size,
            quadratic_sizes: args.sizes.clone(),
            samples: args.samples,
            seed: args.seed,
            ..SuiteConfig::default()
        }),
        Some(Suite::Positive) => verify::verify_positive(&pairs(2)?, &options),
        Some(Suite::Mixed) => verify::verify_mixed(&pairs(2)?, &options),
        Some(Suite::Negative) => verify::verify_negative(&pairs(1)?, &options),
        Some(Suite::Copy) => {
            let (n, m) = dims((4, 4));
            if n + m - 1 > 13 {
                return Err(Failure::usage(
                    "the copy suite enumerates all pairs; keep n+m-1 at most 13",
                ));
            }
            verify::verify_copy(n, m)
        }
        Some(Suite::Quadratic) => verify::verify_quadratic(&args.sizes, &options),
        Some(Suite::Canonical) => {
            let (n, m) = dims((3, 3));
            verify::verify_canonicalization(args.samples, n, m, args.seed)
        }
        Some(Suite::Cycles) => verify::verify_cycle_theorems(args.samples, 8, args.seed),
    };
    Ok(report)
}

/// Parses lines such as `L + - +` and `R + +`; `#` starts a comment.
fn parse_signs(text: &str) -> Result<BadcSpec, Failure> {
    let (mut left, mut right) = (None, None);
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let slot = match tokens.next() {
            Some("L") => &mut left,
            Some("R") => &mut right,
            Some(other) => {
                return Err(Failure::usage(format!(
                    "line {}: expected L or R, found `{other}`",
                    no + 1
                )))
            }
            None => continue,
        };
        let signs = tokens
            .map(|t| match t {
                "+" | "+1" => Ok(Sign::Positive),
                "-" | "-1" => Ok(Sign::Negative),
                _ => Err(Failure::usage(format!("line {}: bad sign `{t}`", no + 1))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if slot.replace(signs).is_some() {
            return Err(Failure::usage(format!("line {}: cycle given twice", no + 1)));
        }
    }
    match (left, right) {
        (Some(l), Some(r)) => BadcSpec::with_signs(l, r).map_err(Failure::usage),
        _ => Err(Failure::usage("signs file needs one L line and one R line")),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("json values serialize")
    );
}
