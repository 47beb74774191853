use std::process::ExitCode;

use clap::{Parser, Subcommand};

use wlspectra::graph::families::{fixture, fixture_names};
use wlspectra::report::{
    default_tests, load_graph, parse_tests, run_compare, CompareConfig, InputFormat,
};
use wlspectra::spectral::SpectralTolerance;
use wlspectra::wl::Depth;

#[derive(Parser)]
#[command(
    name = "wlspectra",
    version,
    about = "Compare two graphs under WL, spectral and certificate relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two graphs, each a file path or a fixture name.
    Compare {
        a: String,
        b: String,
        /// Input format for files: graph6 or edgelist.
        #[arg(long)]
        format: Option<InputFormat>,
        /// Comma separated tests, e.g. `wl1,wlk(2,inf),cospectral(laplacian),all`.
        #[arg(long)]
        tests: Option<String>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Depth: an integer or `inf`.
        #[arg(long, default_value = "1")]
        d: Depth,
        #[arg(long, default_value_t = 4)]
        word_bound: usize,
        #[arg(long, default_value_t = 6)]
        pattern_bound: usize,
        /// Relative eigenvalue tolerance.
        #[arg(long)]
        tol: Option<f64>,
        /// Also write the JSON report here (`-` for stdout only).
        #[arg(long)]
        json: Option<String>,
    },
    /// Shipped fixtures.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    List,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> wlspectra::Result<u8> {
    match cli.command {
        Command::Fixtures {
            action: FixturesAction::List,
        } => {
            for name in fixture_names() {
                let g = fixture(name).expect("listed fixture exists");
                println!("{name}\tn={}\tm={}", g.order(), g.size());
            }
            Ok(0)
        }
        Command::Compare {
            a,
            b,
            format,
            tests,
            k,
            d,
            word_bound,
            pattern_bound,
            tol,
            json,
        } => {
            let mut tolerance = SpectralTolerance::default();
            if let Some(t) = tol {
                tolerance.relative = t;
            }
            let cfg = CompareConfig {
                tests: match tests {
                    Some(list) => parse_tests(&list)?,
                    None => default_tests(),
                },
                k,
                d,
                word_bound,
                pattern_bound,
                tolerance,
                ..CompareConfig::default()
            };
            let (ga, gb) = (load_graph(&a, format)?, load_graph(&b, format)?);
            let report = run_compare(&ga, &gb, &cfg);
            match json.as_deref() {
                Some("-") => print!("{}", report.to_json()),
                Some(path) => {
                    std::fs::write(path, report.to_json())?;
                    print!("{}", report.render_text());
                }
                None => print!("{}", report.render_text()),
            }
            Ok(report.exit_code() as u8)
        }
    }
}
