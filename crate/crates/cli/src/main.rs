//! `tricomi`: evaluate fundamental solutions of `yΔ + ∂²/∂y²` at points and
//! on grids, and run the verification suites.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tricomi_core::exec::{init_threads_from_env, Execution};
use tricomi_core::fundsol::{classify, default_cone_tol, Region, Solution, SpacetimePoint};
use tricomi_core::verify::{all_passed, resolve_selection, run_suite, write_json_lines, VerificationReport};
use tricomi_core::Error;

const EXIT_SINGULAR: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 73;

#[derive(Parser)]
#[command(name = "tricomi", version, about = "Fundamental solutions of the generalized Tricomi operator")]
#[command(allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one quantity at a point.
    Eval(EvalArgs),
    /// Fill a grid along the ray (x·e₁, y) and write CSV.
    Grid(GridArgs),
    /// Run verification suites; JSON lines on stdout or --out, summary on stderr.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Quantity {
    FMinus,
    FPlus,
    FSharp,
    Discriminant,
    Region,
}

impl Quantity {
    fn solution(self) -> Option<Solution> {
        match self {
            Quantity::FMinus => Some(Solution::FMinus),
            Quantity::FPlus => Some(Solution::FPlus),
            Quantity::FSharp => Some(Solution::FSharp),
            _ => None,
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    /// Spatial dimension.
    #[arg(long)]
    n: usize,
    /// Either the full vector as a comma list, or |x| alone (a single number).
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    y: f64,
    #[arg(long, value_enum)]
    quantity: Quantity,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    x_min: f64,
    #[arg(long, allow_hyphen_values = true)]
    x_max: f64,
    #[arg(long)]
    x_count: usize,
    #[arg(long, allow_hyphen_values = true)]
    y_min: f64,
    #[arg(long, allow_hyphen_values = true)]
    y_max: f64,
    #[arg(long)]
    y_count: usize,
    #[arg(long, value_enum)]
    quantity: Quantity,
    /// Output path; "-" for stdout.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite names, or "all".
    #[arg(required = true)]
    suites: Vec<String>,
    /// Write JSON lines here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run the checks one after another.
    #[arg(long)]
    sequential: bool,
}

enum Failure {
    Usage(String),
    Singular,
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SingularLocus => Failure::Singular,
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn fmt15(v: f64) -> String {
    format!("{v:.14e}")
}

fn parse_point(n: usize, x: &str, y: f64) -> Result<SpacetimePoint, Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let parts: Vec<f64> = x
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Usage(format!("bad --x {x:?}: {e}")))?;
    let p = match parts.len() {
        len if len == n => SpacetimePoint::new(parts, y),
        1 if parts[0] >= 0.0 => SpacetimePoint::on_ray(n, parts[0], y),
        1 => return Err(Failure::Usage("a single --x value is |x| and must be nonnegative".into())),
        len => return Err(Failure::Usage(format!("--x has {len} components, expected {n} or 1"))),
    };
    Ok(p?)
}

/// Text for one quantity; `None` on the cone for the solutions.
fn quantity_text(q: Quantity, n: usize, p: &SpacetimePoint) -> Result<Option<String>, Failure> {
    Ok(match q {
        Quantity::Discriminant => Some(fmt15(p.discriminant())),
        Quantity::Region => Some(classify(p, default_cone_tol(p)).label().to_string()),
        _ => match q.solution().expect("solution quantity").eval(n, p) {
            Ok(v) => Some(fmt15(v)),
            Err(Error::SingularLocus) => None,
            Err(e) => return Err(e.into()),
        },
    })
}

fn cmd_eval(a: &EvalArgs) -> Result<(), Failure> {
    let p = parse_point(a.n, &a.x, a.y)?;
    match quantity_text(a.quantity, a.n, &p)? {
        Some(s) => {
            println!("{s}");
            Ok(())
        }
        None => Err(Failure::Singular),
    }
}

fn axis(min: f64, max: f64, count: usize, name: &str) -> Result<Vec<f64>, Failure> {
    if count < 2 || !min.is_finite() || !max.is_finite() {
        return Err(Failure::Usage(format!("{name} axis needs finite bounds and count ≥ 2")));
    }
    Ok((0..count).map(|i| min + (max - min) * i as f64 / (count - 1) as f64).collect())
}

fn cmd_grid(a: &GridArgs) -> Result<(), Failure> {
    if a.n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let xs = axis(a.x_min, a.x_max, a.x_count, "x")?;
    let ys = axis(a.y_min, a.y_max, a.y_count, "y")?;
    let rows: Vec<Result<Vec<[String; 5]>, Failure>> = Execution::default().map(&ys, |&y| {
        xs.iter()
            .map(|&x| {
                let p = SpacetimePoint::on_ray(a.n, x, y)?;
                let region = classify(&p, default_cone_tol(&p));
                let value = if region == Region::Cone && a.quantity.solution().is_some() {
                    String::new()
                } else {
                    quantity_text(a.quantity, a.n, &p)?.unwrap_or_default()
                };
                Ok([fmt15(x), fmt15(y), fmt15(p.discriminant()), region.label().to_string(), value])
            })
            .collect()
    });

    let sink: Box<dyn Write> = if a.out.as_os_str() == "-" {
        Box::new(io::stdout().lock())
    } else {
        let f = File::create(&a.out).map_err(|e| Failure::Io(format!("{}: {e}", a.out.display())))?;
        Box::new(io::BufWriter::new(f))
    };
    let io_err = |e: csv::Error| Failure::Io(e.to_string());
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["x", "y", "discriminant", "region", "value"]).map_err(io_err)?;
    for row in rows {
        for rec in row? {
            w.write_record(&rec).map_err(io_err)?;
        }
    }
    w.flush().map_err(|e| Failure::Io(e.to_string()))
}

fn summary(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(4).min(60);
    for r in reports {
        let flag = if r.passed { "ok" } else { "FAIL" };
        s.push_str(&format!("{flag:<4} {:<width$} err {:.2e} tol {:.1e}\n", r.name, r.abs_err.min(r.rel_err), r.tol));
    }
    let ok = reports.iter().filter(|r| r.passed).count();
    s.push_str(&format!("{ok}/{} passed\n", reports.len()));
    s
}

fn cmd_verify(a: &VerifyArgs) -> Result<bool, Failure> {
    let names: Vec<&str> = a.suites.iter().map(String::as_str).collect();
    resolve_selection(&names)?;
    let exec = if a.sequential { Execution::Sequential } else { Execution::default() };
    let reports = run_suite(&names, exec)?;
    let io_err = |e: io::Error| Failure::Io(e.to_string());
    match &a.out {
        Some(path) => {
            let f = File::create(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            write_json_lines(&reports, io::BufWriter::new(f)).map_err(io_err)?;
        }
        None => write_json_lines(&reports, io::stdout().lock()).map_err(io_err)?,
    }
    eprint!("{}", summary(&reports));
    Ok(all_passed(&reports))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    init_threads_from_env();
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a).map(|_| true),
        Command::Grid(a) => cmd_grid(a).map(|_| true),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(Failure::Singular) => {
            eprintln!("singular locus");
            ExitCode::from(EXIT_SINGULAR)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_IO)
        }
    }
}
