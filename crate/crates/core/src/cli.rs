//! The `rookfft` command line.
//!
//! Errors print one line, `error[<class>]: <message>`, and exit with
//! 2 (usage), 3 (parse) or 4 (consistency).

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{convolve, to_basis, to_groupoid, AlgebraElement, Basis};
use crate::error::RookError;
use crate::fft::{
    naive_bound, recursive_bound, stein_bound, stein_semigroup_bound, BoundCheck, Family,
    FourierCoefficients, RookFourier,
};
use crate::rook::{enumerate, print_cycle_link, print_flat, size, size_recursive};
use crate::spectral::{ingest, spectrum};
use crate::TOLERANCE;

/// Largest `n` accepted by `enumerate`.
pub const ENUMERATE_MAX_N: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "rookfft", version, about = "Fourier analysis on the rook monoid R_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every element of R_n in cycle-link and flat notation.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Fourier transform of an algebra element (JSON) or a ballot file (CSV).
    Transform(TransformArgs),
    /// Recover groupoid coordinates from Fourier coefficients.
    Invert {
        #[arg(long)]
        input: PathBuf,
        /// Basis of the written element.
        #[arg(long, value_enum, default_value_t = BasisArg::Groupoid)]
        basis: BasisArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Product of two algebra elements.
    Convolve {
        /// Exactly two element files.
        #[arg(long, num_args = 1, required = true)]
        input: Vec<PathBuf>,
        /// Convert the second factor to the basis of the first when they differ.
        #[arg(long)]
        convert: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Isotypic energy spectrum of a ballot file.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = BasisArg::Groupoid)]
        association: BasisArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run every algorithm on seeded random inputs for n = 1..=N and compare.
    Bench {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Algorithm::Stein)]
    pub algorithm: Algorithm,
    /// Required for ballot input.
    #[arg(long)]
    pub n: Option<usize>,
    /// Association model for ballot input.
    #[arg(long, value_enum, default_value_t = BasisArg::Groupoid)]
    pub association: BasisArg,
    /// Expected basis of element input; checked when given.
    #[arg(long, value_enum)]
    pub basis: Option<BasisArg>,
    /// Change basis when the input does not match the algorithm.
    #[arg(long)]
    pub convert: bool,
    /// Also list the (A, B) cells of tensor-up coefficients.
    #[arg(long)]
    pub cells: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Naive,
    Stein,
    Recursive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Semigroup,
    Groupoid,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Semigroup => Basis::Semigroup,
            BasisArg::Groupoid => Basis::Groupoid,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A failed command, classified for the exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Consistency(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Consistency(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (class, msg) = match self {
            CliError::Usage(m) => ("usage", m),
            CliError::Parse(m) => ("parse", m),
            CliError::Consistency(m) => ("consistency", m),
        };
        write!(f, "error[{class}]: {}", msg.replace('\n', " "))
    }
}

impl From<RookError> for CliError {
    fn from(e: RookError) -> Self {
        match e {
            RookError::Parse(_) | RookError::Ingest { .. } => CliError::Parse(e.to_string()),
            RookError::Consistency(_) => CliError::Consistency(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Entry point for the binary: parses `std::env::args`, runs, and returns the exit code.
pub fn main() -> i32 {
    configure_threads();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match Cli::try_parse_from(std::env::args_os()) {
        Ok(cli) => match run(cli, &mut out) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("{e}");
                e.exit_code()
            }
        },
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            0
        }
        Err(e) => {
            let first = e.to_string();
            let line = first.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("{}", CliError::Usage(line.to_string()));
            2
        }
    }
}

/// `ROOKFFT_THREADS` caps the worker pool; unset or `0` lets rayon decide.
fn configure_threads() {
    if let Some(n) = std::env::var("ROOKFFT_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I, out: &mut dyn Write) -> CliResult<()>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| CliError::Usage(e.to_string()))?;
    run(cli, out)
}

pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    let (text, dest) = match cli.command {
        Command::Enumerate { n, format, output } => (cmd_enumerate(n, format)?, output),
        Command::Transform(args) => {
            let dest = args.output.clone();
            (cmd_transform(&args)?, dest)
        }
        Command::Invert {
            input,
            basis,
            output,
        } => (cmd_invert(&input, basis.into())?, output),
        Command::Convolve {
            input,
            convert,
            output,
        } => (cmd_convolve(&input, convert)?, output),
        Command::Analyze {
            input,
            n,
            association,
            format,
            output,
        } => (cmd_analyze(&input, n, association.into(), format)?, output),
        Command::Bench {
            n,
            seed,
            format,
            output,
        } => {
            let (text, agree) = cmd_bench(n, seed, format)?;
            emit(&text, output.as_deref(), out)?;
            if !agree {
                return Err(CliError::Consistency(
                    "fast transforms disagree with the naive oracle".into(),
                ));
            }
            return Ok(());
        }
    };
    emit(&text, dest.as_deref(), out)
}

fn emit(text: &str, dest: Option<&Path>, out: &mut dyn Write) -> CliResult<()> {
    let io = |e: std::io::Error| CliError::Usage(format!("cannot write output: {e}"));
    match dest {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => out.write_all(text.as_bytes()).map_err(io),
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

pub fn cmd_enumerate(n: usize, format: Format) -> CliResult<String> {
    if n > ENUMERATE_MAX_N {
        return Err(CliError::Usage(format!(
            "refusing to enumerate R_{n}: output would have {} lines (limit n = {ENUMERATE_MAX_N})",
            size(n)
        )));
    }
    let elems = enumerate(n);
    let recursive = size_recursive(n);
    let check = if recursive == elems.len() as u64 { "ok" } else { "MISMATCH" };
    match format {
        Format::Csv => {
            let mut s = String::from("cycle_link,flat\n");
            for e in &elems {
                s.push_str(&format!("{},{}\n", print_cycle_link(e), print_flat(e)));
            }
            s.push_str(&format!(
                "# |R_{n}| = {}, recursive formula = {recursive} ({check})\n",
                elems.len()
            ));
            Ok(s)
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                cycle_link: String,
                flat: String,
            }
            #[derive(Serialize)]
            struct Doc {
                n: usize,
                size: u64,
                recursive_size: u64,
                elements: Vec<Row>,
            }
            let doc = Doc {
                n,
                size: elems.len() as u64,
                recursive_size: recursive,
                elements: elems
                    .iter()
                    .map(|e| Row {
                        cycle_link: print_cycle_link(e),
                        flat: print_flat(e),
                    })
                    .collect(),
            };
            Ok(serde_json::to_string_pretty(&doc).expect("plain data") + "\n")
        }
    }
}

fn looks_like_ballots(path: &Path, text: &str) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"))
        || text.trim_start().starts_with("ballot")
}

fn load_function(args: &TransformArgs) -> CliResult<AlgebraElement> {
    let text = read(&args.input)?;
    if looks_like_ballots(&args.input, &text) {
        let n = args
            .n
            .ok_or_else(|| CliError::Usage("--n is required for ballot input".into()))?;
        let data = crate::spectral::ingest_reader(text.as_bytes(), n)?;
        return Ok(data.to_function(args.association.into()));
    }
    let f = AlgebraElement::from_json(&text)?;
    if let Some(n) = args.n {
        if n != f.n() {
            return Err(CliError::Usage(format!("--n {n} but the input is on R_{}", f.n())));
        }
    }
    if let Some(b) = args.basis {
        if Basis::from(b) != f.basis() {
            return Err(CliError::Usage(format!(
                "--basis {} but the input is in the {} basis",
                Basis::from(b),
                f.basis()
            )));
        }
    }
    Ok(f)
}

fn mismatch(algorithm: &str, needs: Basis, has: Basis) -> CliError {
    CliError::Usage(format!(
        "{algorithm} needs {needs} input, got {has}; pass --convert to change basis"
    ))
}

pub fn cmd_transform(args: &TransformArgs) -> CliResult<String> {
    let f = load_function(args)?;
    let plan = RookFourier::new(f.n());
    let n = f.n();
    let (hat, bound) = match (args.algorithm, f.basis()) {
        (Algorithm::Naive, Basis::Groupoid) => (plan.naive(&f, Family::Stein)?, naive_bound(n)),
        (Algorithm::Naive, Basis::Semigroup) => (plan.naive(&f, Family::Halverson)?, naive_bound(n)),
        (Algorithm::Stein, Basis::Groupoid) => (plan.stein_fft(&f)?, stein_bound(n)),
        (Algorithm::Stein, Basis::Semigroup) if args.convert => {
            (plan.stein_fft_semigroup(&f)?, stein_semigroup_bound(n))
        }
        (Algorithm::Stein, has) => return Err(mismatch("stein", Basis::Groupoid, has)),
        (Algorithm::Recursive, Basis::Semigroup) => (plan.recursive_fft(&f)?, recursive_bound(n)),
        (Algorithm::Recursive, Basis::Groupoid) if args.convert => {
            let g = to_basis(&f, Basis::Semigroup)?;
            (plan.recursive_fft(&g)?, recursive_bound(n))
        }
        (Algorithm::Recursive, has) => return Err(mismatch("recursive", Basis::Semigroup, has)),
    };
    let check = BoundCheck::new(hat.ops, bound);
    Ok(hat.to_json(args.cells, Some(check)) + "\n")
}

pub fn cmd_invert(input: &Path, basis: Basis) -> CliResult<String> {
    let coeffs = FourierCoefficients::from_json(&read(input)?)?;
    let g = RookFourier::new(coeffs.n()).invert(&coeffs)?;
    Ok(to_basis(&g, basis)?.to_json() + "\n")
}

pub fn cmd_convolve(inputs: &[PathBuf], convert: bool) -> CliResult<String> {
    if inputs.len() != 2 {
        return Err(CliError::Usage(format!(
            "convolve takes exactly two --input files, got {}",
            inputs.len()
        )));
    }
    let f = AlgebraElement::from_json(&read(&inputs[0])?)?;
    let mut g = AlgebraElement::from_json(&read(&inputs[1])?)?;
    if f.basis() != g.basis() {
        if !convert {
            return Err(CliError::Usage(format!(
                "inputs are in the {} and {} bases; pass --convert",
                f.basis(),
                g.basis()
            )));
        }
        g = to_basis(&g, f.basis())?;
    }
    Ok(convolve(&f, &g)?.to_json() + "\n")
}

pub fn cmd_analyze(input: &Path, n: usize, association: Basis, format: Format) -> CliResult<String> {
    let data = ingest(input, n)?;
    let report = spectrum(&data, association)?;
    Ok(match format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    })
}

/// One row of the benchmark table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub size: u64,
    pub ops_naive: u64,
    pub ops_stein: u64,
    pub ops_stein_semigroup: u64,
    pub ops_recursive: u64,
    pub bound_naive: u64,
    pub bound_stein: u64,
    pub bound_stein_semigroup: u64,
    pub bound_recursive: u64,
    pub within_bounds: bool,
    pub agreement: bool,
}

/// A dense random semigroup-basis element on `R_n`, reproducible from `seed`.
pub fn random_element(n: usize, basis: Basis, seed: u64) -> AlgebraElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    AlgebraElement::from_terms(
        n,
        basis,
        enumerate(n)
            .into_iter()
            .map(|s| (s, Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
            .collect::<Vec<_>>(),
    )
    .expect("elements of R_n")
}

pub fn bench_row(n: usize, seed: u64) -> crate::Result<BenchRow> {
    let plan = RookFourier::new(n);
    let f = random_element(n, Basis::Semigroup, seed.wrapping_add(n as u64));
    let g = to_groupoid(&f)?;
    let naive_h = plan.naive(&f, Family::Halverson)?;
    let naive_s = plan.naive(&g, Family::Stein)?;
    let stein = plan.stein_fft(&g)?;
    let stein_semi = plan.stein_fft_semigroup(&f)?;
    let recursive = plan.recursive_fft(&f)?;
    let agreement = stein.approx_eq(&naive_s, TOLERANCE)
        && stein_semi.approx_eq(&naive_s, TOLERANCE)
        && recursive.approx_eq(&naive_h, TOLERANCE);
    let row = BenchRow {
        n,
        size: size(n),
        ops_naive: naive_h.ops.multiply_adds,
        ops_stein: stein.ops.multiply_adds,
        ops_stein_semigroup: stein_semi.ops.multiply_adds,
        ops_recursive: recursive.ops.multiply_adds,
        bound_naive: naive_bound(n),
        bound_stein: stein_bound(n),
        bound_stein_semigroup: stein_semigroup_bound(n),
        bound_recursive: recursive_bound(n),
        within_bounds: false,
        agreement,
    };
    Ok(BenchRow {
        within_bounds: row.ops_naive <= row.bound_naive
            && row.ops_stein <= row.bound_stein
            && row.ops_stein_semigroup <= row.bound_stein_semigroup
            && row.ops_recursive <= row.bound_recursive,
        ..row
    })
}

/// Returns the rendered table and whether every row agreed with the oracle.
pub fn cmd_bench(max_n: usize, seed: u64, format: Format) -> CliResult<(String, bool)> {
    if max_n == 0 || max_n > 6 {
        return Err(CliError::Usage(format!("bench supports 1 <= n <= 6, got {max_n}")));
    }
    let rows: Vec<BenchRow> = (1..=max_n)
        .map(|n| bench_row(n, seed))
        .collect::<crate::Result<_>>()?;
    let agree = rows.iter().all(|r| r.agreement);
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("plain data") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
        }
    };
    Ok((text, agree))
}
