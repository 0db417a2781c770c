use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mpknn::classical::DistanceKind;
use mpknn::dataset::BinarizationSpec;
use mpknn::experiment::{self, Algorithm, ExperimentConfig, OutputFormat, TieMode, VerifyGrid};
use mpknn::Error;

#[derive(Parser)]
#[command(
    name = "mpknn",
    version,
    about = "(m,p) quantum sorter and k-NN classifier benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Classical,
    Schuld,
    Mp,
}

#[derive(Clone, Copy, ValueEnum)]
enum DistanceArg {
    Hamming,
    Euclidean,
}

#[derive(Clone, Copy, ValueEnum)]
enum TiesArg {
    Random,
    Index,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(clap::Args)]
struct DatasetArgs {
    /// CSV file, last column the class name. Defaults to the bundled Iris data.
    #[arg(long)]
    dataset: Option<PathBuf>,
    /// Bit widths: `min`, `max`, or a comma-separated list.
    #[arg(long, default_value = "min")]
    widths: String,
    #[arg(long, default_value_t = 10)]
    scale: u32,
}

impl DatasetArgs {
    fn spec(&self) -> Result<BinarizationSpec, Error> {
        Ok(BinarizationSpec {
            scale_factor: self.scale,
            width_policy: experiment::parse_width_policy(&self.widths)?,
        })
    }

    fn path(&self) -> PathBuf {
        self.dataset
            .clone()
            .unwrap_or_else(experiment::bundled_iris_path)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Binarize a dataset and print one line per pattern.
    Encode {
        #[command(flatten)]
        data: DatasetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Leave-one-out benchmark of one classifier.
    Bench {
        #[command(flatten)]
        data: DatasetArgs,
        #[arg(long, value_enum, default_value = "mp")]
        algo: AlgoArg,
        /// Comma-separated k values.
        #[arg(long, default_value = "1,3,5,7,9,11,13", value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long, default_value_t = 50)]
        runs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        m: u32,
        #[arg(long, default_value_t = 8)]
        p: u32,
        #[arg(long = "t-mult", default_value_t = 5)]
        t_mult: usize,
        #[arg(long, value_enum, default_value = "hamming")]
        distance: DistanceArg,
        #[arg(long, value_enum, default_value = "random")]
        ties: TiesArg,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Run folds on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Compare the statevector simulator with the closed-form distribution.
    VerifySim {
        #[arg(long = "max-qubits", default_value_t = 24)]
        max_qubits: usize,
        #[arg(long, default_value = "3,4", value_delimiter = ',')]
        n: Vec<u64>,
        #[arg(long, default_value = "2,3", value_delimiter = ',')]
        m: Vec<u32>,
        #[arg(long, default_value = "0,1,2", value_delimiter = ',')]
        p: Vec<u32>,
    },
    /// Optimal p per m and P_least curves, as CSV.
    MpTune {
        #[arg(long, default_value_t = 150)]
        n: u64,
        /// m for the curve over p.
        #[arg(long = "curve-m", default_value_t = 5)]
        curve_m: u32,
        #[arg(long = "max-p", default_value_t = 20)]
        max_p: u32,
        #[arg(long, default_value = "2,3,4,5,6,7", value_delimiter = ',')]
        m: Vec<u32>,
        /// p for the curve over m.
        #[arg(long = "curve-p", default_value_t = 8)]
        curve_p: u32,
    },
    /// Rank distribution P(x) per m, as CSV.
    MpDist {
        #[arg(long, default_value_t = 150)]
        n: u64,
        #[arg(long, default_value = "2,3,4,5", value_delimiter = ',')]
        m: Vec<u32>,
        /// Amplification rounds; defaults to the optimal p of each m.
        #[arg(long)]
        p: Option<u32>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) => 3,
        _ => 1,
    }
}

fn write_out(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Encode { data, out } => {
            let labeled = experiment::load_dataset(&data.path(), &data.spec()?)?;
            write_out(&labeled.to_text(), out.as_ref())?;
        }
        Command::Bench {
            data,
            algo,
            k,
            runs,
            seed,
            m,
            p,
            t_mult,
            distance,
            ties,
            out,
            format,
            sequential,
        } => {
            let config = ExperimentConfig {
                algorithm: match algo {
                    AlgoArg::Classical => Algorithm::Classical,
                    AlgoArg::Schuld => Algorithm::Schuld,
                    AlgoArg::Mp => Algorithm::Mp,
                },
                k_values: k,
                runs,
                master_seed: seed,
                m,
                p,
                t_multiplier: t_mult,
                distance: match distance {
                    DistanceArg::Hamming => DistanceKind::HammingOnBits,
                    DistanceArg::Euclidean => DistanceKind::EuclideanOnRaw,
                },
                ties: match ties {
                    TiesArg::Random => TieMode::Random,
                    TiesArg::Index => TieMode::Index,
                },
                binarization: data.spec()?,
                parallel: !sequential,
            };
            let summary = experiment::run_benchmark(&data.path(), &config)?;
            let format = match format {
                FormatArg::Json => OutputFormat::Json,
                FormatArg::Csv => OutputFormat::Csv,
            };
            experiment::emit_results(&summary, format, out.as_deref())?;
        }
        Command::VerifySim {
            max_qubits,
            n,
            m,
            p,
        } => {
            let report = experiment::verify_sim(&VerifyGrid {
                ns: n,
                ms: m,
                ps: p,
                max_qubits,
            })?;
            print!("{}", report.to_csv());
            if !report.passed() {
                eprintln!(
                    "verification failed: deviation above {:e}",
                    report.tolerance
                );
                return Ok(2);
            }
        }
        Command::MpTune {
            n,
            curve_m,
            max_p,
            m,
            curve_p,
        } => print!(
            "{}",
            experiment::mp_tune_csv(n, curve_m, max_p, &m, curve_p)?
        ),
        Command::MpDist { n, m, p } => print!("{}", experiment::mp_dist_csv(n, &m, p)?),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
