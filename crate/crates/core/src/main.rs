use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sinc_fredholm::bench::{run_convergence, ConvergenceRecord, CSV_HEADER};
use sinc_fredholm::collocation::{solve, MethodKind};
use sinc_fredholm::problems;

#[derive(Parser)]
#[command(name = "sinc-fredholm", version, about = "Sinc solvers for Fredholm integral equations of the second kind")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep N for one example and emit convergence records as CSV.
    Bench {
        /// Benchmark example, 1 through 4.
        #[arg(long)]
        example: u32,
        /// Comma-separated methods: orig-se, orig-de, new-se, new-de,
        /// nystrom-se, nystrom-de.
        #[arg(long, value_delimiter = ',', required = true)]
        methods: Vec<MethodKind>,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        n_step: usize,
        /// Evaluation grid size (equispaced, endpoints included).
        #[arg(long, default_value_t = 1001)]
        grid: usize,
        /// Instrument kernel evaluations during assembly.
        #[arg(long)]
        count_kernel_evals: bool,
        /// Write CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve one example with one method and print u(T).
    Solve {
        #[arg(long)]
        example: u32,
        #[arg(long)]
        method: MethodKind,
        #[arg(long)]
        n: usize,
        /// Evaluation point t.
        #[arg(long)]
        at: f64,
    },
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Bench {
            example,
            methods,
            n_min,
            n_max,
            n_step,
            grid,
            count_kernel_evals,
            out,
        } => {
            let Some(problem) = problems::by_index::<f64>(example) else {
                eprintln!("error: --example must be 1..=4, got {example}");
                return ExitCode::from(2);
            };
            if n_min == 0 || n_min > n_max || n_step == 0 || grid < 2 {
                eprintln!("error: need 1 <= n-min <= n-max, n-step >= 1, grid >= 2");
                return ExitCode::from(2);
            }
            let n_list: Vec<usize> = (n_min..=n_max).step_by(n_step).collect();
            let records = run_convergence(&problem, &methods, &n_list, grid, count_kernel_evals);
            if let Err(e) = write_csv(&records, out.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if records.iter().any(|r| r.max_error.is_infinite()) {
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Command::Solve {
            example,
            method,
            n,
            at,
        } => {
            let Some(problem) = problems::by_index::<f64>(example) else {
                eprintln!("error: --example must be 1..=4, got {example}");
                return ExitCode::from(2);
            };
            let (a, b) = (problem.interval.a, problem.interval.b);
            if !(a..=b).contains(&at) {
                eprintln!("error: --at must lie in [{a}, {b}], got {at}");
                return ExitCode::from(2);
            }
            match solve(&problem, method, n, None) {
                Ok(sol) => {
                    let approx = sol.evaluate(at);
                    println!("approx u({at}) = {approx}");
                    if let Some(exact) = problem.exact(at) {
                        println!("exact  u({at}) = {exact}  (|error| = {:e})", (approx - exact).abs());
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(3)
                }
            }
        }
    }
}

fn write_csv(records: &[ConvergenceRecord], out: Option<&std::path::Path>) -> io::Result<()> {
    let mut body = String::with_capacity(64 * (records.len() + 1));
    body.push_str(CSV_HEADER);
    body.push('\n');
    for r in records {
        body.push_str(&r.to_csv_row());
        body.push('\n');
    }
    match out {
        Some(path) => File::create(path)?.write_all(body.as_bytes()),
        None => io::stdout().write_all(body.as_bytes()),
    }
}
