use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use conex::poisson::Operator;
use conex::report::{run_and_write, ChartSel, Command, LinkSel, RunConfig};

#[derive(Parser)]
#[command(name = "conex", version, about = "Exact checks on cones over circle links")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Seed of the randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Overrides the numeric tolerance of the command.
    #[arg(long = "tol", global = true)]
    tolerance: Option<f64>,
    /// JSON report path (default: $CONEX_OUT_DIR/<command>.json).
    #[arg(long, short, global = true)]
    out: Option<PathBuf>,
    /// Adds wall-clock time to the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// d², δ², Koszul, star involution and δ = ±*d* on random forms.
    Verify {
        #[arg(long, default_value = "r4")]
        chart: ChartSel,
        /// Maximal coefficient degree.
        #[arg(long, default_value_t = 6)]
        degree: u32,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Truncated δ or de Rham homology ranks, optionally Z_k-invariant.
    Homology {
        #[arg(long, default_value = "r2")]
        chart: ChartSel,
        #[arg(long, default_value_t = 8)]
        trunc: usize,
        #[arg(long, default_value = "delta")]
        operator: Operator,
        #[arg(long, default_value_t = 1)]
        group: usize,
    },
    /// Conical symplectic identities, flatness and Nash samples of a cone.
    ConeReport {
        /// circle, hopf, great:<a>,<b>, quadric, latitude:<θ>, flat-pairs:<k>
        #[arg(long, default_value = "latitude:1/2")]
        link: LinkSel,
        #[arg(long, default_value_t = 16)]
        nash_samples: usize,
    },
    /// Whether a function is smooth on the cone over a latitude circle.
    Membership {
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        /// Terms a:b:num/den meaning num/den·t^a·(e^{ibφ} + e^{−ibφ}), or num/den·t^a for b = 0.
        #[arg(long = "term", required = true, allow_hyphen_values = true)]
        terms: Vec<String>,
    },
    /// Degree of flatness of a link, or of the link built with k flat pairs.
    Flatness {
        #[arg(long)]
        link: Option<LinkSel>,
        #[arg(long)]
        pairs: Option<u32>,
    },
    /// Bump function and partition of unity sweeps.
    BumpCheck {
        #[arg(long, default_value_t = 0.5)]
        epsilon: f64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let command = match cli.command {
        Cmd::Verify { chart, degree, samples } => Command::Verify { chart, degree, samples },
        Cmd::Homology { chart, trunc, operator, group } => Command::Homology { chart, trunc, operator, group },
        Cmd::ConeReport { link, nash_samples } => Command::ConeReport { link, nash_samples },
        Cmd::Membership { theta, terms } => Command::Membership { theta, terms: terms.join(",") },
        Cmd::Flatness { link, pairs } => Command::Flatness { link, pairs },
        Cmd::BumpCheck { epsilon, samples } => Command::BumpCheck { epsilon, samples },
    };
    let config = RunConfig {
        command,
        seed: cli.common.seed,
        tolerance: cli.common.tolerance,
        output: cli.common.out,
        timing: cli.common.timing,
    };
    match run_and_write(&config) {
        Ok((report, path)) => {
            print!("{}", report.summary());
            if let Some(p) = path {
                println!("report: {}", p.display());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("conex: {e}");
            ExitCode::from(2)
        }
    }
}
