use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use quatgrad_cli::{list_suites, run, Config, SUITES};

#[derive(Parser)]
#[command(name = "quatgrad", version, about = "Exact verification suites for Z2 x Z2-graded Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named suite.
    Verify {
        /// Suite name (or use --suite).
        name: Option<String>,
        #[arg(long)]
        suite: Option<String>,
        #[command(flatten)]
        opts: Opts,
    },
    /// List the suites.
    List,
    /// Shorthand for `verify partitions`.
    Partitions(Opts),
    /// Shorthand for `verify inequality`.
    Inequality(Opts),
    /// Shorthand for `verify css`.
    Css(Opts),
    /// Shorthand for `verify roots`.
    Roots(Opts),
    /// Shorthand for `verify bounds`.
    Bounds(Opts),
    /// Shorthand for `verify jordan`.
    Jordan(Opts),
    /// Shorthand for `verify triad`.
    Triad(Opts),
}

#[derive(Args)]
struct Opts {
    /// Symmetric pair id, e.g. sl-so.
    #[arg(long)]
    pair: Option<String>,
    /// Largest size in a sweep.
    #[arg(long)]
    max_n: Option<usize>,
    /// Size parameter.
    #[arg(long)]
    n: Option<usize>,
    /// Jordan family: full, sym, skew or spin.
    #[arg(long)]
    family: Option<String>,
    /// Catalog entry or root case, e.g. so-chain or sp4-gl2.
    #[arg(long)]
    catalog: Option<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Random draws or samples per check.
    #[arg(long)]
    trials: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out_json: Option<PathBuf>,
    #[arg(long)]
    out_md: Option<PathBuf>,
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (suite, opts) = match cli.command {
        Command::List => {
            for (name, about) in SUITES {
                println!("{name:<12} {about}");
            }
            return ExitCode::SUCCESS;
        }
        Command::Verify { name, suite, opts } => match (name, suite) {
            (Some(a), Some(b)) if a != b => return usage(&format!("suite given twice: {a} and {b}")),
            (Some(s), _) | (None, Some(s)) => (s, opts),
            (None, None) => return usage(&format!("no suite given; known: {}", list_suites().join(", "))),
        },
        Command::Partitions(o) => ("partitions".into(), o),
        Command::Inequality(o) => ("inequality".into(), o),
        Command::Css(o) => ("css".into(), o),
        Command::Roots(o) => ("roots".into(), o),
        Command::Bounds(o) => ("bounds".into(), o),
        Command::Jordan(o) => ("jordan".into(), o),
        Command::Triad(o) => ("triad".into(), o),
    };
    let config = Config {
        suite,
        pair: opts.pair,
        max_n: opts.max_n,
        n: opts.n,
        family: opts.family,
        catalog: opts.catalog,
        seed: opts.seed,
        trials: opts.trials,
    };
    let report = match run(config) {
        Ok(r) => r,
        Err(msg) => return usage(&msg),
    };
    let json = report.to_json();
    match &opts.out_json {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                return usage(&format!("cannot write {}: {e}", path.display()));
            }
        }
        None if opts.out_md.is_none() => print!("{json}"),
        None => {}
    }
    if let Some(path) = &opts.out_md {
        if let Err(e) = std::fs::write(path, report.to_markdown()) {
            return usage(&format!("cannot write {}: {e}", path.display()));
        }
    }
    let s = report.summary;
    eprintln!("{}: {} passed, {} failed, {} skipped", report.suite, s.passed, s.failed, s.skipped);
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
