//! Command-line front end. [`run`] parses arguments, writes the output and
//! returns the process exit code.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ColorChoice, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use crofton_core::arrays::ArrayCache;
use crofton_core::closed_forms::{
    expected_solid_angle, half_sphere_f_vector, limit_f_vector, sylvester_probability, zero_cell_f_vector,
};
use crofton_core::identities::verify_all;
use serde_json::json;

use crate::formats::{format_float, Listing, OutputFormat};
use crate::montecarlo::{
    estimate_f_vector, estimate_solid_angle, estimate_sylvester, SimulationError, SimulationReport,
};
use crate::tables::table;
use crate::values::{evaluate, registry_listing, ValueError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Reports with any `|z|` above this fail the `simulate` command.
pub const Z_FAIL: f64 = 4.0;
pub const MAX_ZERO_CELL_DIM: u32 = 30;
pub const MAX_VERIFY_N: u32 = 20;

#[derive(Debug, Parser)]
#[command(name = "crofton", version, about = "Exact expected face numbers of random polytopes on the half-sphere")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Exact)]
    format: OutputFormat,
    /// Write to this file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 10_000)]
    trials: u64,
    /// Worker threads for simulations (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Estimator {
    Fvector,
    Sylvester,
    Angle,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expected f-vector of the Poisson zero cell
    ZeroCell {
        #[arg(long, required_unless_present = "table", conflicts_with = "table")]
        dim: Option<u32>,
        /// All dimensions 1..=10
        #[arg(long)]
        table: bool,
    },
    /// Expected f-vector of the hull of n uniform points on the upper half-sphere
    HalfSphere {
        #[arg(long = "n")]
        n: u32,
        #[arg(long)]
        dim: u32,
    },
    /// Limit of the half-sphere f-vector as n grows
    Limit {
        #[arg(long)]
        dim: u32,
    },
    /// Expected normalised solid angle of the cone spanned by n points
    SolidAngle {
        #[arg(long = "n")]
        n: u32,
        #[arg(long)]
        dim: u32,
    },
    /// Probability that d+2 points span a spherical simplex
    Sylvester {
        #[arg(long)]
        dim: u32,
    },
    /// Evaluate a named quantity; `value list` shows the registry
    Value {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
    },
    /// Regenerate a reference table
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
        which: u8,
    },
    /// Monte Carlo estimate compared against the exact value
    Simulate {
        estimator: Estimator,
        #[arg(long = "n")]
        n: Option<u32>,
        #[arg(long)]
        dim: u32,
    },
    /// Run the exact identity suite
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: u32,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<crofton_core::Error> for Failure {
    fn from(e: crofton_core::Error) -> Self {
        match e {
            crofton_core::Error::Overflow => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<SimulationError> for Failure {
    fn from(e: SimulationError) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: EXIT_OK }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn positive(name: &str, v: u32) -> Result<u32, Failure> {
    if v == 0 {
        Err(usage(format!("--{name} must be positive")))
    } else {
        Ok(v)
    }
}

fn render(listing: Listing, format: OutputFormat) -> Result<Output, Failure> {
    Ok(Output::ok(listing.render(format)?))
}

fn report_output(report: &SimulationReport, format: OutputFormat) -> Output {
    let text = match format {
        OutputFormat::Csv => {
            let mut s = String::from("k,mean,stderr,exact_float,z\n");
            for q in &report.quantities {
                let z = q.z.map(format_float).unwrap_or_default();
                s += &format!(
                    "{},{},{},{},{}\n",
                    q.k,
                    format_float(q.mean),
                    format_float(q.stderr),
                    format_float(q.exact_float),
                    z
                );
            }
            s
        }
        _ => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
    };
    let code = if report.within(Z_FAIL) { EXIT_OK } else { EXIT_FAILURE };
    Output { text, code }
}

fn simulate(cli: &Cli, estimator: Estimator, n: Option<u32>, dim: u32) -> Result<Output, Failure> {
    let (trials, seed) = (cli.trials, cli.seed);
    let need_n = || n.ok_or_else(|| usage("--n is required for this estimator"));
    let run = || -> Result<SimulationReport, Failure> {
        Ok(match estimator {
            Estimator::Fvector => estimate_f_vector(need_n()?, dim, trials, seed)?,
            Estimator::Angle => estimate_solid_angle(need_n()?, dim, trials, seed)?,
            Estimator::Sylvester => {
                if n.is_some() {
                    return Err(usage("the sylvester estimator always uses n = d+2; drop --n"));
                }
                estimate_sylvester(dim, trials, seed)?
            }
        })
    };
    let report = match cli.threads {
        Some(0) => return Err(usage("--threads must be positive")),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Failure::Runtime(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    Ok(report_output(&report, cli.format))
}

fn verify(max_n: u32, format: OutputFormat) -> Result<Output, Failure> {
    if max_n > MAX_VERIFY_N {
        return Err(usage(format!("--max-n must be at most {MAX_VERIFY_N}")));
    }
    let reports = verify_all(&ArrayCache::new(), max_n);
    let all = reports.iter().all(|r| r.passed());
    let text = if format == OutputFormat::Json {
        let v: Vec<_> = reports
            .iter()
            .map(|r| json!({"family": r.name, "checked": r.checked, "passed": r.passed(), "failures": r.failures}))
            .collect();
        serde_json::to_string_pretty(&v).expect("plain data serializes") + "\n"
    } else {
        let mut s = String::new();
        for r in &reports {
            s += &format!("{} {} ({} checks)\n", if r.passed() { "PASS" } else { "FAIL" }, r.name, r.checked);
            for f in r.failures.iter().take(5) {
                s += &format!("    {f}\n");
            }
        }
        s
    };
    Ok(Output { text, code: if all { EXIT_OK } else { EXIT_FAILURE } })
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    let cache = ArrayCache::new();
    let format = cli.format;
    match &cli.command {
        Command::ZeroCell { table: true, .. } => render(table(1, &cache).expect("table 1 exists"), format),
        Command::ZeroCell { dim, .. } => {
            let d = positive("dim", dim.expect("clap enforces --dim or --table"))?;
            if d > MAX_ZERO_CELL_DIM {
                return Err(usage(format!("--dim must be at most {MAX_ZERO_CELL_DIM}")));
            }
            render(Listing::values(zero_cell_f_vector(&cache, d).into_entries()), format)
        }
        Command::HalfSphere { n, dim } => {
            let f = half_sphere_f_vector(&cache, *n, positive("dim", *dim)?)?;
            render(Listing::values(f.into_entries()), format)
        }
        Command::Limit { dim } => {
            render(Listing::values(limit_f_vector(&cache, positive("dim", *dim)?).into_entries()), format)
        }
        Command::SolidAngle { n, dim } => {
            let a = expected_solid_angle(&cache, *n, positive("dim", *dim)?)?;
            render(Listing::values(vec![a]), format)
        }
        Command::Sylvester { dim } => {
            render(Listing::values(vec![sylvester_probability(&cache, positive("dim", *dim)?)]), format)
        }
        Command::Value { name, params } => {
            if name == "list" {
                return Ok(Output::ok(registry_listing()));
            }
            match evaluate(&cache, name, params) {
                Ok(v) => render(Listing::values(vec![v]), format),
                Err(ValueError::Unknown(n)) => {
                    Err(usage(format!("unknown quantity {n:?}; available quantities:\n{}", registry_listing())))
                }
                Err(ValueError::Exact(crofton_core::Error::Overflow)) => Err(Failure::Runtime("overflow".into())),
                Err(e) => Err(usage(e.to_string())),
            }
        }
        Command::Tables { which } => render(table(*which, &cache).expect("clap restricts the range"), format),
        Command::Simulate { estimator, n, dim } => simulate(cli, *estimator, *n, *dim),
        Command::Verify { max_n } => verify(*max_n, format),
    }
}

fn write_output(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut cmd = Cli::command();
    if std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty()) {
        cmd = cmd.color(ColorChoice::Never);
    }
    let cli = match cmd.try_get_matches_from(args).and_then(|m| Cli::from_arg_matches(&m)) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(&cli) {
        Ok(out) => match write_output(&cli.out, &out.text) {
            Ok(()) => out.code,
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_FAILURE
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            EXIT_FAILURE
        }
    }
}
