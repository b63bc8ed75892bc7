use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use albertkit::albert::{self, AlbertElem};
use albertkit::json::{
    albert_from_json, albert_to_json, cubic_to_json, rat_to_json, tensor_to_json, vpoint_from_json, vpoint_to_json,
};
use albertkit::pvs::{self, VPoint};
use albertkit::{isotope, smap, verify, AlbertError};

/// Exact computations in the split Albert algebra.
///
/// Every INPUT is a JSON file path, an inline JSON value (anything starting
/// with `{` or `[`), `-` for standard input, or one of the built-in names
/// `@e` (the identity of J) and `@w` (the base point of V).
#[derive(Parser)]
#[command(name = "albertkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// det(X)
    Det { x: String },
    /// Tr(X)
    Trace { x: String },
    /// X∘Y
    Jordan { x: String, y: String },
    /// X×Y
    Cross { x: String, y: String },
    /// D(X, Y, Z)
    Dform { x: String, y: String, z: String },
    /// The binary cubic F_x of a point of V
    Cubic { point: String },
    /// Δ(x)
    Delta { point: String },
    /// S_x(X, Y), or one of its parts
    Smap {
        point: String,
        x: String,
        y: String,
        #[arg(long, value_enum, default_value_t = SmapPart::S)]
        part: SmapPart,
    },
    /// Structure constants of S_x, of Δ(x)⁻¹S_x with --isotope, or of J_a with --element
    Structure {
        point: String,
        /// Read the input as an element a of J and tabulate J_a.
        #[arg(long)]
        element: bool,
        /// Divide by Δ(x).
        #[arg(long, conflicts_with = "element")]
        isotope: bool,
    },
    /// T_a(X, Y, Z)
    Tform { a: String, x: String, y: String, z: String },
    /// X ∘_a Y in the isotope J_a
    IsotopeMul {
        a: String,
        x: String,
        y: String,
        #[arg(long, value_enum, default_value_t = Method::Tform)]
        method: Method,
    },
    /// Q_a(X, Y)
    Qa { a: String, x: String, y: String },
    /// Run verification suites
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SmapPart {
    S,
    Phi1,
    Phi2,
    /// Δ(x)⁻¹S_x(X, Y)
    Circ,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Tform,
    Springer,
}

#[derive(Debug)]
enum CliError {
    Albert(AlbertError),
    Io(String),
    Usage(String),
}

impl From<AlbertError> for CliError {
    fn from(e: AlbertError) -> Self {
        CliError::Albert(e)
    }
}

impl CliError {
    fn to_json(&self) -> Value {
        match self {
            CliError::Albert(e) => json!({ "error": e.kind(), "detail": e.to_string() }),
            CliError::Io(d) => json!({ "error": "Io", "detail": d }),
            CliError::Usage(d) => json!({ "error": "Usage", "detail": d }),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read_input(arg: &str) -> CliResult<Value> {
    let text = match arg {
        "@e" => return Ok(albert_to_json(&AlbertElem::identity())),
        "@w" => return Ok(vpoint_to_json(&pvs::w_point())),
        "-" => std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Io(format!("stdin: {e}")))?,
        s if s.trim_start().starts_with(['{', '[']) => s.to_string(),
        path => std::fs::read_to_string(Path::new(path)).map_err(|e| CliError::Io(format!("{path}: {e}")))?,
    };
    serde_json::from_str(&text).map_err(|e| AlbertError::Parse(format!("{arg}: {e}")).into())
}

fn elem(arg: &str) -> CliResult<AlbertElem> {
    Ok(albert_from_json(&read_input(arg)?)?)
}

fn point(arg: &str) -> CliResult<VPoint> {
    Ok(vpoint_from_json(&read_input(arg)?)?)
}

fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("ALBERTKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("ALBERTKIT_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))
}

/// Returns the JSON to print and whether the command succeeded.
fn run(command: Command) -> CliResult<(Value, bool)> {
    let out = match command {
        Command::Det { x } => json!({ "det": rat_to_json(&albert::det_j(&elem(&x)?)) }),
        Command::Trace { x } => json!({ "trace": rat_to_json(&albert::trace_j(&elem(&x)?)) }),
        Command::Jordan { x, y } => json!({ "product": albert_to_json(&albert::jordan_mul(&elem(&x)?, &elem(&y)?)) }),
        Command::Cross { x, y } => json!({ "cross": albert_to_json(&albert::cross(&elem(&x)?, &elem(&y)?)) }),
        Command::Dform { x, y, z } => {
            json!({ "d": rat_to_json(&albert::trilinear_d(&elem(&x)?, &elem(&y)?, &elem(&z)?)) })
        }
        Command::Cubic { point: p } => json!({ "cubic": cubic_to_json(&pvs::cubic_of(&point(&p)?)) }),
        Command::Delta { point: p } => json!({ "delta": rat_to_json(&pvs::delta(&point(&p)?)) }),
        Command::Smap { point: p, x, y, part } => {
            let (p, x, y) = (point(&p)?, elem(&x)?, elem(&y)?);
            let (key, v) = match part {
                SmapPart::S => ("s", smap::s_map(&p, &x, &y)),
                SmapPart::Phi1 => ("phi1", smap::phi1(&p, &x, &y)),
                SmapPart::Phi2 => ("phi2", smap::phi2(&p, &x, &y)),
                SmapPart::Circ => ("circ", smap::circ_x(&p, &x, &y)?),
            };
            json!({ key: albert_to_json(&v) })
        }
        Command::Structure { point: p, element, isotope: normalized } => {
            if element {
                let a = elem(&p)?;
                tensor_to_json(&isotope::springer_tensor(&a)?, albert_to_json(&a))
            } else {
                let x = point(&p)?;
                let t = if normalized { smap::isotope_tensor(&x)? } else { smap::structure_tensor(&x) };
                tensor_to_json(&t, vpoint_to_json(&x))
            }
        }
        Command::Tform { a, x, y, z } => {
            json!({ "t": rat_to_json(&isotope::t_form(&elem(&a)?, &elem(&x)?, &elem(&y)?, &elem(&z)?)) })
        }
        Command::IsotopeMul { a, x, y, method } => {
            let (a, x, y) = (elem(&a)?, elem(&x)?, elem(&y)?);
            let v = match method {
                Method::Tform => isotope::circ_a_tform(&a, &x, &y)?,
                Method::Springer => isotope::circ_a_springer(&a, &x, &y)?,
            };
            json!({ "product": albert_to_json(&v) })
        }
        Command::Qa { a, x, y } => json!({ "q": rat_to_json(&isotope::q_a(&elem(&a)?, &elem(&x)?, &elem(&y)?)) }),
        Command::Verify { suite, seed, trials } => {
            let reports = if suite == "all" {
                verify::run_all(seed, trials)
            } else {
                vec![verify::run_suite(&suite, seed, trials)?]
            };
            let ok = reports.iter().all(verify::SuiteReport::ok);
            let suites: Vec<Value> = reports
                .iter()
                .map(|r| json!({ "name": r.name, "passed": r.passed, "failed": r.failed, "failures": r.failures }))
                .collect();
            return Ok((json!({ "seed": seed, "trials": trials, "ok": ok, "suites": suites }), ok));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            println!("{}", CliError::Usage(e.to_string().trim_end().to_string()).to_json());
            return ExitCode::FAILURE;
        }
    };
    let result = configure_threads().and_then(|()| run(cli.command));
    match result {
        Ok((out, ok)) => {
            println!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            println!("{}", e.to_json());
            ExitCode::FAILURE
        }
    }
}
