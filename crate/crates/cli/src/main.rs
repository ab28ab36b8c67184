//! `maxcone` — membership, extremals, bases and a complexity bench for
//! finitely generated max cones.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use maxcone_core::{
    caratheodory_decompose, extract_basis, is_extremal_column, pareto_minima, residuate,
    scaled_columns_at, ExtractMethod, GeneratorMatrix, MaxVector, Tolerance,
};
use maxcone_cli::bench::{run_bench, render_report, BenchConfig};
use maxcone_cli::io::{
    format_indices, format_number, read_matrix, render_json, render_matrix, resolve_vector,
    MatrixFormat,
};
use maxcone_cli::CliError;

const EXIT_OK: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_NOT_MEMBER: u8 = 2;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Residuation,
    Covering,
    Minima,
}

impl From<MethodArg> for ExtractMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Residuation => ExtractMethod::Residuation,
            MethodArg::Covering => ExtractMethod::Covering,
            MethodArg::Minima => ExtractMethod::Minima,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for MatrixFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => MatrixFormat::Csv,
            FormatArg::Json => MatrixFormat::Json,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "maxcone",
    version,
    about = "Finitely generated max cones: membership, extremals, bases",
    long_about = "Operations on the cone generated by the columns of a \
                  nonnegative matrix under a ⊕ b = max(a,b), a ⊗ b = ab.\n\
                  Exit codes: 0 success or member, 2 definite non-member, 1 error."
)]
struct Cli {
    /// Basis extraction method
    #[arg(long, global = true, value_enum, default_value = "residuation")]
    method: MethodArg,

    /// Relative tolerance for equality of computed values
    /// [default: 1e-9, or the MAXCONE_RTOL environment variable]
    #[arg(long, global = true)]
    rtol: Option<f64>,

    /// File format; inferred from the extension when omitted
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extract the basis of the cone generated by the columns of FILE
    Basis {
        file: PathBuf,
        /// Write the basis matrix to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Test whether VECTOR lies in the cone generated by FILE
    Member {
        file: PathBuf,
        /// Inline coordinates "a,b,c" or a path to a vector file
        vector: String,
    },
    /// Decompose VECTOR over the columns of FILE with few generators
    Decompose {
        file: PathBuf,
        /// Inline coordinates "a,b,c" or a path to a vector file
        vector: String,
    },
    /// List the extremal columns of FILE
    Extremals { file: PathBuf },
    /// Minimal columns of FILE, or of its scaled set at a coordinate
    Minima {
        file: PathBuf,
        /// 1-based coordinate j: report the minimal elements of S(j)
        #[arg(short = 'j', long = "coordinate")]
        coordinate: Option<usize>,
    },
    /// Time basis extraction on seeded random matrices
    Bench {
        /// Row counts, comma-separated
        #[arg(long, value_delimiter = ',', default_value = "50")]
        n: Vec<usize>,
        /// Column counts, comma-separated
        #[arg(long, value_delimiter = ',', default_value = "250,500,1000")]
        k: Vec<usize>,
        /// Timed repetitions per cell (median is reported)
        #[arg(long, default_value_t = 5)]
        reps: usize,
        /// Seed for the matrix generator
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Probability of a zero entry
        #[arg(long, default_value_t = 0.0)]
        sparsity: f64,
    },
}

fn effective_rtol(flag: Option<f64>) -> Result<f64, CliError> {
    let rtol = match flag {
        Some(r) => r,
        None => match std::env::var("MAXCONE_RTOL") {
            Ok(text) => text.parse().map_err(|_| {
                CliError::InvalidArgument(format!("MAXCONE_RTOL is not a number: {text:?}"))
            })?,
            Err(_) => Tolerance::DEFAULT_RTOL,
        },
    };
    if !rtol.is_finite() || rtol < 0.0 {
        return Err(CliError::InvalidArgument(format!(
            "rtol must be finite and nonnegative, got {rtol}"
        )));
    }
    Ok(rtol)
}

fn output_format(flag: Option<FormatArg>, input: &Path) -> MatrixFormat {
    flag.map(MatrixFormat::from)
        .or_else(|| MatrixFormat::from_path(input))
        .unwrap_or(MatrixFormat::Csv)
}

fn format_vector(v: &MaxVector) -> String {
    v.iter().map(format_number).collect::<Vec<_>>().join(" ")
}

fn render_basis_matrix(m: &GeneratorMatrix, kept: &[usize], format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Csv => render_matrix(m, format),
        MatrixFormat::Json => {
            let one_based: Vec<usize> = kept.iter().map(|i| i + 1).collect();
            render_json(m, Some(&one_based))
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let rtol = effective_rtol(cli.rtol)?;
    let method: ExtractMethod = cli.method.into();
    let format_flag = cli.format;

    match cli.command {
        Command::Basis { file, output } => {
            let matrix = read_matrix(&file, format_flag.map(Into::into))?;
            let tol = Tolerance::for_matrix(&matrix, rtol)?;
            let result = extract_basis(&matrix, method, &tol);
            println!("f = {}", format_indices(&result.kept));
            let rendered =
                render_basis_matrix(&result.basis, &result.kept, output_format(format_flag, &file));
            match output {
                Some(path) => fs::write(&path, rendered)
                    .map_err(|source| CliError::Io { path, source })?,
                None => print!("{rendered}"),
            }
            Ok(EXIT_OK)
        }
        Command::Member { file, vector } => {
            let matrix = read_matrix(&file, format_flag.map(Into::into))?;
            let v = resolve_vector(&vector, format_flag.map(Into::into))?;
            let tol = Tolerance::for_system(&matrix, &v, rtol)?;
            let res = residuate(&matrix, &v, &tol)?;
            println!("x = {}", format_vector(&res.x));
            if res.exact {
                println!("member: yes");
                Ok(EXIT_OK)
            } else {
                println!("member: no");
                Ok(EXIT_NOT_MEMBER)
            }
        }
        Command::Decompose { file, vector } => {
            let matrix = read_matrix(&file, format_flag.map(Into::into))?;
            let v = resolve_vector(&vector, format_flag.map(Into::into))?;
            let tol = Tolerance::for_system(&matrix, &v, rtol)?;
            match caratheodory_decompose(&matrix, &v, &tol) {
                Ok(decomposition) => {
                    for (i, lambda) in decomposition.terms {
                        println!("{} {}", i + 1, format_number(lambda));
                    }
                    Ok(EXIT_OK)
                }
                Err(maxcone_core::Error::NotInSpan) => {
                    eprintln!("not a member of the span; nothing to decompose");
                    Ok(EXIT_NOT_MEMBER)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Extremals { file } => {
            let matrix = read_matrix(&file, format_flag.map(Into::into))?;
            let tol = Tolerance::for_matrix(&matrix, rtol)?;
            let extremal: Vec<usize> = (0..matrix.num_cols())
                .filter(|&i| !matrix.is_zero_column(i))
                .filter(|&i| is_extremal_column(&matrix, i, &tol).expect("nonzero column"))
                .collect();
            println!("{}", format_indices(&extremal));
            Ok(EXIT_OK)
        }
        Command::Minima { file, coordinate } => {
            let matrix = read_matrix(&file, format_flag.map(Into::into))?;
            let (indices, points) = match coordinate {
                Some(j) => {
                    if j == 0 || j > matrix.num_rows() {
                        return Err(CliError::InvalidArgument(format!(
                            "coordinate must lie in 1..={}, got {j}",
                            matrix.num_rows()
                        )));
                    }
                    let scaled = scaled_columns_at(&matrix, j - 1)?;
                    let points: Vec<MaxVector> =
                        scaled.iter().map(|(_, v)| v.clone()).collect();
                    let owners: Vec<usize> = scaled.into_iter().map(|(i, _)| i).collect();
                    let minimal = pareto_minima(&points)?.minimal_indices;
                    (
                        minimal.iter().map(|&m| owners[m]).collect::<Vec<_>>(),
                        minimal.into_iter().map(|m| points[m].clone()).collect(),
                    )
                }
                None => {
                    let points: Vec<MaxVector> =
                        (0..matrix.num_cols()).map(|i| matrix.column(i)).collect();
                    let minimal = pareto_minima(&points)?.minimal_indices;
                    (
                        minimal.clone(),
                        minimal.into_iter().map(|m| points[m].clone()).collect::<Vec<_>>(),
                    )
                }
            };
            println!("{}", format_indices(&indices));
            if !points.is_empty() {
                let selected =
                    GeneratorMatrix::from_columns(matrix.num_rows(), &points)?;
                print!(
                    "{}",
                    render_matrix(&selected, output_format(format_flag, &file))
                );
            }
            Ok(EXIT_OK)
        }
        Command::Bench {
            n,
            k,
            reps,
            seed,
            sparsity,
        } => {
            let config = BenchConfig {
                n_sizes: n,
                k_sizes: k,
                reps,
                seed,
                method,
                sparsity,
                rtol,
            };
            let report = run_bench(&config)?;
            print!("{}", render_report(&report));
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    // Clap exits with status 2 on usage errors; fold that into the error
    // exit code so 2 always means "definite non-member".
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version are not errors.
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(EXIT_ERROR);
            }
            print!("{e}");
            return ExitCode::from(EXIT_OK);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
