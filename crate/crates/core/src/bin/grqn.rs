use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grqn::cli::{self, CliError, InclusiveRange, Method};

#[derive(Parser)]
#[command(name = "grqn", version, about = "Q_n homology of real Grassmannians over F_2")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute k_{Q_n}(Gr_d(R^m)) and compare with the prediction.
    Compute {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        m: u64,
        /// Defaults to `both` for small cells and `lenart` otherwise.
        #[arg(long)]
        basis: Option<Method>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the (d, c) table of k_{Q_n} for fixed n.
    Table {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        dmax: u64,
        #[arg(long)]
        cmax: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Sweep a range of cells, caching records as JSON lines.
    Verify {
        #[arg(long)]
        n: InclusiveRange,
        #[arg(long)]
        d: InclusiveRange,
        #[arg(long)]
        c: InclusiveRange,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        cache: PathBuf,
    },
    /// Report on the cofiber of Gr_d(R^{m-1}) -> Gr_d(R^m).
    Cofiber {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        m: u64,
    },
}

fn run(args: Args) -> Result<bool, CliError> {
    let limit = cli::cell_limit_from_env()?;
    match args.command {
        Command::Compute {
            n,
            d,
            m,
            basis,
            format,
        } => {
            let rec = cli::compute_cell(n, d, m, basis, limit)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&rec)?),
                Format::Csv => print!("{}", cli::record_csv(&rec)?),
            }
            Ok(true)
        }
        Command::Table {
            n,
            dmax,
            cmax,
            format,
        } => {
            let rows = cli::table(n, dmax, cmax, limit)?;
            match format {
                Format::Csv => print!("{}", cli::table_csv(&rows)?),
                Format::Json => {
                    for row in &rows {
                        if let cli::CellOutcome::Computed(rec) = &row.outcome {
                            println!("{}", serde_json::to_string(rec)?);
                        }
                    }
                }
            }
            Ok(true)
        }
        Command::Verify {
            n,
            d,
            c,
            jobs,
            cache,
        } => {
            let summary = cli::verify(n, d, c, jobs, &cache, limit)?;
            println!("{summary}");
            Ok(summary.ok())
        }
        Command::Cofiber { n, d, m } => {
            let report = cli::cofiber_report(n, d, m, limit)?;
            println!("{}", serde_json::to_string(&report)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("grqn: {e}");
            ExitCode::from(2)
        }
    }
}
