use std::path::PathBuf;
use std::process::exit;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use lcpbound::cli::{run, CliCommand, OutputFormat, RunConfig, EXIT_USAGE};

#[derive(Parser)]
#[command(
    name = "lcpbound",
    version,
    about = "Upper bounds on max ||(I-D+DM)^-1||_inf for B-matrices, with empirical cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Table => OutputFormat::Table,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a matrix (Z, SDD, M, P, B); exit 0 when it is a B-matrix
    Check {
        /// Matrix file; `-` reads standard input
        #[arg(long, default_value = "-")]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print the split M = B+ + C and the row maxima r+
    Decompose {
        #[arg(long, default_value = "-")]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Evaluate the four analytic bounds (requires a B-matrix)
    Bounds {
        #[arg(long, default_value = "-")]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Bounds plus a sampled lower bound; exit 3 if any bound is exceeded
    Verify {
        #[arg(long, default_value = "-")]
        matrix: PathBuf,
        /// Random samples over the box [0,1]^n
        #[arg(long, default_value_t = 4096)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Solve LCP(M, q) and check the error bound at random points
    Lcp {
        #[arg(long, default_value = "-")]
        matrix: PathBuf,
        /// Right-hand-side vector file
        #[arg(long)]
        q: PathBuf,
        /// Random trial points
        #[arg(long, default_value_t = 4096)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Tabulate all bounds on the built-in 4x4 example family
    Reproduce {
        /// Inclusive k range, e.g. 1..10
        #[arg(long, default_value = "1..10", value_parser = parse_k_range)]
        k: (u32, u32),
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Write a random B-matrix in the matrix file format
    Gen {
        /// Dimension
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn parse_k_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let lo: u32 = a.trim().parse().map_err(|_| format!("bad start `{a}`"))?;
    let hi: u32 = b.trim().parse().map_err(|_| format!("bad end `{b}`"))?;
    if lo < 1 || lo > hi {
        return Err(format!("need 1 <= A <= B, got {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            exit(code);
        }
    };

    let cfg = match cli.command {
        Cmd::Check { matrix, format } => {
            let mut c = RunConfig::new(CliCommand::Check);
            c.matrix_path = Some(matrix);
            c.output_format = format.into();
            c
        }
        Cmd::Decompose { matrix, format } => {
            let mut c = RunConfig::new(CliCommand::Decompose);
            c.matrix_path = Some(matrix);
            c.output_format = format.into();
            c
        }
        Cmd::Bounds { matrix, format } => {
            let mut c = RunConfig::new(CliCommand::Bounds);
            c.matrix_path = Some(matrix);
            c.output_format = format.into();
            c
        }
        Cmd::Verify {
            matrix,
            samples,
            seed,
            format,
        } => {
            let mut c = RunConfig::new(CliCommand::Verify);
            c.matrix_path = Some(matrix);
            c.samples = samples;
            c.seed = seed;
            c.output_format = format.into();
            c
        }
        Cmd::Lcp {
            matrix,
            q,
            samples,
            seed,
            format,
        } => {
            let mut c = RunConfig::new(CliCommand::Lcp);
            c.matrix_path = Some(matrix);
            c.q_path = Some(q);
            c.samples = samples;
            c.seed = seed;
            c.output_format = format.into();
            c
        }
        Cmd::Reproduce { k, format } => {
            let mut c = RunConfig::new(CliCommand::Reproduce);
            c.k_range = k;
            c.output_format = format.into();
            c
        }
        Cmd::Gen { n, seed } => {
            let mut c = RunConfig::new(CliCommand::Gen);
            c.n = Some(n);
            c.seed = seed;
            c
        }
    };

    let mut stdout = std::io::stdout().lock();
    exit(run(&cfg, &mut stdout));
}
