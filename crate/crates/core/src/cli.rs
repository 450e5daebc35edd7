//! Command-line driver.
//!
//! Exit status: 0 when every check passed, 1 when a verification failed, 2
//! on usage errors. [`run`] returns the captured streams so the binary and
//! the tests share one code path.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::json;

use crate::binomial::{sweep_identity, IdentityId, IdentityReport, ParamBox, ParamRange};
use crate::error::Error;
use crate::matrix::{render_grid, RingMatrix};
use crate::pascal::{build_rx, build_u, build_w};
use crate::ring::XMode;
use crate::spectral::{
    default_tolerance, eigen_distinctness, eigenpairs, matrix_power_closed_form_at,
    matrix_power_oracle_at, verify_diagonalization_numeric, verify_eigenpair, verify_involution,
    CheckReport,
};

#[derive(Debug, Parser)]
#[command(
    name = "rjpascal",
    version,
    about = "Exact spectral toolkit for the right-justified Pascal matrix"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print R (or R(x))
    ShowR(ShowArgs),
    /// Print the scaled diagonalizer W
    ShowW(ShowArgs),
    /// Print the eigenvector matrix U
    ShowU(ShowArgs),
    /// List eigenvalues and eigenvectors
    Eigen(ShowArgs),
    /// Run exact and numeric verifications
    Verify(VerifyArgs),
    /// Compute R^m through the diagonalization
    Power(PowerArgs),
    /// Brute-force the binomial identities over parameter boxes
    Identities(IdentityArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Eigen,
    Involution,
    Power,
    Diag,
    All,
}

fn parse_x(s: &str) -> Result<XMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<ParamRange, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
struct ShowArgs {
    /// Dimension
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// `1`, another integer, or `symbolic`
    #[arg(long, default_value = "1", value_parser = parse_x, allow_hyphen_values = true)]
    x: XMode,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, default_value = "1", value_parser = parse_x, allow_hyphen_values = true)]
    x: XMode,
    #[arg(long, value_enum, default_value = "all")]
    check: Check,
    /// Numeric tolerance (default 1e-9 for n <= 8, else 1e-8)
    #[arg(long)]
    tol: Option<f64>,
    /// Exponent for the power check (default: every m in -3..=6)
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct PowerArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
    #[arg(long, default_value = "1", value_parser = parse_x, allow_hyphen_values = true)]
    x: XMode,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
#[allow(non_snake_case)]
struct IdentityArgs {
    /// Sweep a single identity
    #[arg(long, value_parser = parse_identity)]
    only: Option<IdentityId>,
    /// Range for N, as LO..HI or a single value
    #[arg(long = "N", value_parser = parse_range, allow_hyphen_values = true)]
    N: Option<ParamRange>,
    /// Range for J, as LO..HI or a single value
    #[arg(long = "J", value_parser = parse_range, allow_hyphen_values = true)]
    J: Option<ParamRange>,
    /// Range for K, as LO..HI or a single value
    #[arg(long = "K", value_parser = parse_range, allow_hyphen_values = true)]
    K: Option<ParamRange>,
    /// Range for I, as LO..HI or a single value
    #[arg(long = "I", value_parser = parse_range, allow_hyphen_values = true)]
    I: Option<ParamRange>,
    /// Range for M, as LO..HI or a single value
    #[arg(long = "M", value_parser = parse_range, allow_hyphen_values = true)]
    M: Option<ParamRange>,
    /// Range for L, as LO..HI or a single value
    #[arg(long = "L", value_parser = parse_range, allow_hyphen_values = true)]
    L: Option<ParamRange>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl IdentityArgs {
    fn overrides(&self) -> BTreeMap<&'static str, ParamRange> {
        [
            ("N", self.N),
            ("J", self.J),
            ("K", self.K),
            ("I", self.I),
            ("M", self.M),
            ("L", self.L),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|r| (k, r)))
        .collect()
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }

    fn failure(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match cli.command {
        Command::ShowR(a) => show_r(&a),
        Command::ShowW(a) => show_ring(&a, build_w),
        Command::ShowU(a) => show_ring(&a, build_u),
        Command::Eigen(a) => eigen(&a),
        Command::Verify(a) => verify(&a),
        Command::Power(a) => power(&a),
        Command::Identities(a) => identities(&a),
    }
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn ring_grid(m: &RingMatrix) -> String {
    let cells: Vec<String> = m.rows().flatten().map(|e| e.pretty()).collect();
    let mut out = String::new();
    render_grid(&mut out, m.n(), &cells).expect("write to String");
    out
}

fn show_r(args: &ShowArgs) -> Outcome {
    let n = args.n as usize;
    let rx = match build_rx(n) {
        Ok(m) => m.apply_x(&args.x),
        Err(e) => return Outcome::usage(e),
    };
    let format = args.format.unwrap_or(Format::Pretty);
    match (&args.x, format) {
        (XMode::Symbolic, Format::Csv) => {
            Outcome::usage("csv output needs integer entries; use --x <int>")
        }
        (XMode::Symbolic, Format::Json) => Outcome::ok(to_json(&rx)),
        (XMode::Symbolic, Format::Pretty) => Outcome::ok(ring_grid(&rx)),
        (XMode::Value(_), _) => {
            let r = rx.to_int().expect("R(x) has no a-component");
            Outcome::ok(match format {
                Format::Pretty => r.to_string(),
                Format::Json => to_json(&r),
                Format::Csv => r.to_csv(),
            })
        }
    }
}

fn show_ring(args: &ShowArgs, build: fn(usize) -> crate::Result<RingMatrix>) -> Outcome {
    let m = match build(args.n as usize) {
        Ok(m) => m.apply_x(&args.x),
        Err(e) => return Outcome::usage(e),
    };
    match args.format.unwrap_or(Format::Pretty) {
        Format::Csv => Outcome::usage("csv output needs integer entries"),
        Format::Json => Outcome::ok(to_json(&m)),
        Format::Pretty => Outcome::ok(ring_grid(&m)),
    }
}

fn eigen(args: &ShowArgs) -> Outcome {
    let pairs = match eigenpairs(args.n as usize) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e),
    };
    let pairs: Vec<_> = pairs
        .into_iter()
        .map(|mut p| {
            p.lambda = args.x.apply(&p.lambda);
            p.vector = p.vector.iter().map(|v| args.x.apply(v)).collect();
            p
        })
        .collect();
    match args.format.unwrap_or(Format::Pretty) {
        Format::Csv => Outcome::usage("csv output needs integer entries"),
        Format::Json => Outcome::ok(to_json(&pairs)),
        Format::Pretty => {
            let mut out = String::new();
            for p in &pairs {
                let vec: Vec<String> = p.vector.iter().map(|v| v.pretty()).collect();
                writeln!(out, "lambda_{} = {}", p.index, p.lambda.pretty()).unwrap();
                writeln!(out, "     u_{} = [{}]", p.index, vec.join(", ")).unwrap();
            }
            Outcome::ok(out)
        }
    }
}

fn x_real(x: &BigInt) -> Option<f64> {
    x.to_f64().filter(|v| v.is_finite())
}

fn verify(args: &VerifyArgs) -> Outcome {
    let n = args.n as usize;
    let format = args.format.unwrap_or(Format::Json);
    if format == Format::Csv {
        return Outcome::usage("verify reports support pretty or json");
    }
    let symbolic = args.x == XMode::Symbolic;
    if symbolic && matches!(args.check, Check::Power | Check::Diag) {
        return Outcome::usage("power and diag checks need an integer --x");
    }
    let want = |c: Check| args.check == c || args.check == Check::All;
    let x_label = json!(args.x.to_string());
    let mut reports = Vec::new();

    if want(Check::Eigen) {
        for p in 1..=n {
            let pass = match verify_eigenpair(n, p, &args.x) {
                Ok(v) => v,
                Err(e) => return Outcome::failure(e),
            };
            reports.push(CheckReport {
                check: "eigen".into(),
                n,
                params: BTreeMap::from([("p".into(), json!(p)), ("x".into(), x_label.clone())]),
                pass,
                residual: None,
            });
        }
    }
    if want(Check::Involution) {
        let pass = match verify_involution(n, &args.x) {
            Ok(v) => v,
            Err(e) => return Outcome::failure(e),
        };
        reports.push(CheckReport {
            check: "involution".into(),
            n,
            params: BTreeMap::from([("x".into(), x_label.clone())]),
            pass,
            residual: None,
        });
    }
    if let XMode::Value(x) = &args.x {
        if want(Check::Power) {
            let exponents: Vec<i64> = match args.m {
                Some(m) => vec![m],
                None => (-3..=6).collect(),
            };
            for m in exponents {
                let mut params =
                    BTreeMap::from([("m".into(), json!(m)), ("x".into(), x_label.clone())]);
                let pass = match (
                    matrix_power_closed_form_at(n, m, x),
                    matrix_power_oracle_at(n, m, x),
                ) {
                    (Ok(closed), Ok(oracle)) => closed.matrix == oracle,
                    (Err(e), _) | (_, Err(e)) => {
                        params.insert("error".into(), json!(e.to_string()));
                        false
                    }
                };
                reports.push(CheckReport {
                    check: "power".into(),
                    n,
                    params,
                    pass,
                    residual: None,
                });
            }
        }
        if want(Check::Diag) {
            let Some(xf) = x_real(x) else {
                return Outcome::usage("--x is too large for the numeric check");
            };
            let tol = args.tol.unwrap_or_else(|| default_tolerance(n));
            let res = match verify_diagonalization_numeric(n, xf) {
                Ok(r) => r,
                Err(e) => return Outcome::failure(e),
            };
            let gap = eigen_distinctness(n, xf).unwrap_or(f64::NAN);
            reports.push(CheckReport {
                check: "diag".into(),
                n,
                params: BTreeMap::from([
                    ("x".into(), x_label.clone()),
                    ("tol".into(), json!(tol)),
                    ("involution_residual".into(), json!(res.involution)),
                    ("similarity_residual".into(), json!(res.similarity)),
                ]),
                pass: res.within(tol),
                residual: Some(res.max()),
            });
            reports.push(CheckReport {
                check: "distinct".into(),
                n,
                params: BTreeMap::from([
                    ("x".into(), x_label.clone()),
                    // JSON has no infinity; n = 1 has no pairs
                    (
                        "min_gap".into(),
                        if gap.is_finite() {
                            json!(gap)
                        } else {
                            json!(null)
                        },
                    ),
                ]),
                pass: gap > 0.0,
                residual: None,
            });
        }
    }

    let all_pass = reports.iter().all(|r| r.pass);
    let stdout = match format {
        Format::Json => to_json(&reports),
        _ => {
            let mut out = String::new();
            for r in &reports {
                let params: Vec<String> =
                    r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let status = if r.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {} n={} {}", r.check, r.n, params.join(" ")).unwrap();
            }
            out
        }
    };
    Outcome {
        code: if all_pass { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}

fn power(args: &PowerArgs) -> Outcome {
    let XMode::Value(x) = &args.x else {
        return Outcome::usage("power needs an integer --x");
    };
    let result = match matrix_power_closed_form_at(args.n as usize, args.m, x) {
        Ok(r) => r,
        Err(e @ Error::ZeroDimension) => return Outcome::usage(e),
        Err(e) => return Outcome::failure(e),
    };
    Outcome::ok(match args.format.unwrap_or(Format::Pretty) {
        Format::Pretty => result.matrix.to_string(),
        Format::Json => to_json(&result.matrix),
        Format::Csv => result.matrix.to_csv(),
    })
}

fn identities(args: &IdentityArgs) -> Outcome {
    let format = args.format.unwrap_or(Format::Json);
    if format == Format::Csv {
        return Outcome::usage("identity reports support pretty or json");
    }
    let selected: Vec<IdentityId> = match args.only {
        Some(id) => vec![id],
        None => IdentityId::ALL.to_vec(),
    };
    let overrides = args.overrides();
    if let Some(id) = args.only {
        if let Some(extra) = overrides.keys().find(|k| !id.params().contains(k)) {
            return Outcome::usage(format!("{id} has no parameter {extra}"));
        }
    }

    let mut reports: Vec<IdentityReport> = Vec::new();
    for id in selected {
        let mut ranges = id.default_box().ranges().clone();
        for (name, range) in &overrides {
            if let Some(slot) = ranges.get_mut(*name) {
                *slot = *range;
            }
        }
        let bx = match ParamBox::new(id, ranges) {
            Ok(b) => b,
            Err(e) => return Outcome::usage(e),
        };
        reports.push(sweep_identity(&bx));
    }

    let all_pass = reports.iter().all(IdentityReport::passed);
    let stdout = match format {
        Format::Json => to_json(&reports),
        _ => {
            let mut out = String::new();
            for r in &reports {
                writeln!(
                    out,
                    "{} {}",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.summary()
                )
                .unwrap();
            }
            out
        }
    };
    Outcome {
        code: if all_pass { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}
