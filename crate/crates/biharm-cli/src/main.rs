//! Command-line front end for the biharmonic-algebra kernel: basis
//! validation, product tables, pointwise evaluation, component grid export,
//! Goursat reconstruction, and the randomized verification suite.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on schema or I/O
//! errors. Every error is reported as a single machine-parsable line on
//! stderr. Outputs are byte-deterministic: floats are rendered with 17
//! significant digits and field order is fixed.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use biharm::algebra::AlgebraElement;
use biharm::basis::{verify_pair, BiharmonicBasis, IdentityReport};
use biharm::json::{self, BasisInput};
use biharm::numeric::{sample_components, GridSpec};
use biharm::poly::HoloPoly;
use biharm::verify;

#[derive(Parser)]
#[command(name = "biharm", version, about = "Biharmonic-algebra kernel CLI", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct CommonOpts {
    /// Path to the JSON job file
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    /// Output path; stdout when omitted
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Output format (default: json, except components: csv)
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Tolerance for verification decisions
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the defining identity of a basis job
    #[command(name = "basis-check")]
    BasisCheck(CommonOpts),
    /// Print the closed-form product table of a basis
    Table(CommonOpts),
    /// Evaluate a monogenic function at the given plane points
    Eval(CommonOpts),
    /// Sample the four real components on a grid
    Components {
        #[command(flatten)]
        common: CommonOpts,
        /// Sampling grid as "x0,y0,x1,y1,n"
        #[arg(long, value_name = "x0,y0,x1,y1,n", default_value = "-1,-1,1,1,17", allow_hyphen_values = true)]
        grid: String,
    },
    /// Reconstruct a monogenic lift from a Goursat job
    Reconstruct(CommonOpts),
    /// Run the randomized verification suites of every module
    Verify(CommonOpts),
}

enum CliError {
    Schema(String),
    Io(String),
    Verification(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Schema(_) | CliError::Io(_) => 2,
            CliError::Verification(_) => 1,
        }
    }

    fn line(&self) -> String {
        match self {
            CliError::Schema(m) => format!("error: schema: {m}"),
            CliError::Io(m) => format!("error: io: {m}"),
            CliError::Verification(m) => format!("error: verification: {m}"),
        }
    }
}

impl From<json::SchemaError> for CliError {
    fn from(e: json::SchemaError) -> Self {
        match e {
            json::SchemaError::Parse(m) => CliError::Schema(format!("cannot parse {m}")),
            json::SchemaError::Invalid(m) => CliError::Schema(m),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.line());
            ExitCode::from(e.code())
        }
    }
}

// ---- Deterministic rendering ----

/// 17 significant digits, round-trip safe, locale-independent. Negative
/// zero is normalized so equal values render identically.
fn num(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.16e}")
}

fn complex(c: biharm::Complex) -> String {
    format!("[{},{}]", num(c.re), num(c.im))
}

fn element(a: &AlgebraElement) -> String {
    format!("{{\"e\":{},\"rho\":{}}}", complex(a.w_e), complex(a.w_rho))
}

fn poly(p: &HoloPoly) -> String {
    let coeffs: Vec<String> = p.coeffs().iter().map(|c| complex(*c)).collect();
    format!("{{\"coeffs\":[{}]}}", coeffs.join(","))
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

// ---- Command plumbing ----

fn read_job(opts: &CommonOpts) -> Result<String, CliError> {
    if !opts.tolerance.is_finite() || opts.tolerance <= 0.0 {
        return Err(CliError::Schema("tolerance must be positive".into()));
    }
    fs::read_to_string(&opts.input)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", opts.input.display())))
}

fn write_out(opts: &CommonOpts, body: String) -> Result<(), CliError> {
    match &opts.output {
        None => {
            println!("{body}");
            Ok(())
        }
        Some(path) => fs::write(path, body + "\n")
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
    }
}

fn format_or(opts: &CommonOpts, default: Format) -> Format {
    opts.format.unwrap_or(default)
}

fn json_only(opts: &CommonOpts, command: &str) -> Result<(), CliError> {
    if format_or(opts, Format::Json) == Format::Csv {
        return Err(CliError::Schema(format!("format csv is not supported for {command}")));
    }
    Ok(())
}

fn parse_grid(grid: &str) -> Result<GridSpec, CliError> {
    let parts: Vec<&str> = grid.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(CliError::Schema(format!("grid must be \"x0,y0,x1,y1,n\", got {grid:?}")));
    }
    let coord = |s: &str, what: &str| -> Result<f64, CliError> {
        let v = s
            .parse::<f64>()
            .map_err(|_| CliError::Schema(format!("grid {what} is not a number: {s:?}")))?;
        if !v.is_finite() || v.abs() > json::MAX_INPUT_MAGNITUDE {
            return Err(CliError::Schema(format!("grid {what} out of range: {s:?}")));
        }
        Ok(v)
    };
    let n: usize = parts[4]
        .parse()
        .map_err(|_| CliError::Schema(format!("grid point count is not an integer: {:?}", parts[4])))?;
    GridSpec::new(
        coord(parts[0], "x0")?,
        coord(parts[1], "y0")?,
        coord(parts[2], "x1")?,
        coord(parts[3], "y1")?,
        n,
    )
    .map_err(|e| CliError::Schema(e.to_string()))
}

fn run(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::BasisCheck(opts) => basis_check(&opts),
        Cmd::Table(opts) => table(&opts),
        Cmd::Eval(opts) => eval(&opts),
        Cmd::Components { common, grid } => components(&common, &grid),
        Cmd::Reconstruct(opts) => reconstruct(&opts),
        Cmd::Verify(opts) => run_verify(&opts),
    }
}

// ---- Commands ----

fn identity_json(report: &IdentityReport, e1: &AlgebraElement, e2: &AlgebraElement) -> String {
    format!(
        "{{\"ok\":{},\"relative_residual\":{},\"lhs\":{},\"sum_sq\":{},\"e1\":{},\"e2\":{}}}",
        report.ok,
        num(report.relative_residual),
        element(&report.lhs),
        element(&report.sum_sq),
        element(e1),
        element(e2),
    )
}

fn basis_check(opts: &CommonOpts) -> Result<(), CliError> {
    json_only(opts, "basis-check")?;
    let job = read_job(opts)?;
    let (report, e1, e2) = match json::parse_basis_job(&job)? {
        BasisInput::Basis(b) => (b.verify_identity(opts.tolerance), b.e1(), b.e2()),
        BasisInput::RawPair(e1, e2) => (verify_pair(e1, e2, opts.tolerance), e1, e2),
    };
    let ok = report.ok;
    write_out(opts, identity_json(&report, &e1, &e2))?;
    if !ok {
        return Err(CliError::Verification(format!(
            "basis identity failed (relative residual {})",
            num(report.relative_residual)
        )));
    }
    Ok(())
}

fn require_basis(input: BasisInput, command: &str) -> Result<BiharmonicBasis, CliError> {
    match input {
        BasisInput::Basis(b) => Ok(b),
        BasisInput::RawPair(..) => Err(CliError::Schema(format!(
            "{command} requires a parametric basis, not a raw pair"
        ))),
    }
}

fn table(opts: &CommonOpts) -> Result<(), CliError> {
    let job = read_job(opts)?;
    let basis = require_basis(json::parse_basis_job(&job)?, "table")?;
    let t = basis.product_table();
    let body = match format_or(opts, Format::Json) {
        Format::Json => format!(
            "{{\"e1_sq\":{},\"e2_sq\":{},\"e1_e2\":{}}}",
            element(&t.e1_sq),
            element(&t.e2_sq),
            element(&t.e1_e2),
        ),
        Format::Csv => {
            let mut body = String::from("product,e_re,e_im,rho_re,rho_im");
            for (name, v) in [("e1_sq", t.e1_sq), ("e2_sq", t.e2_sq), ("e1_e2", t.e1_e2)] {
                let _ = write!(
                    body,
                    "\n{name},{},{},{},{}",
                    num(v.w_e.re),
                    num(v.w_e.im),
                    num(v.w_rho.re),
                    num(v.w_rho.im)
                );
            }
            body
        }
    };
    write_out(opts, body)
}

fn eval(opts: &CommonOpts) -> Result<(), CliError> {
    let job = read_job(opts)?;
    let (m, points) = json::parse_eval_job(&job)?;
    let values: Vec<(f64, f64, AlgebraElement)> =
        points.iter().map(|&(x, y)| (x, y, m.eval(x, y))).collect();
    let body = match format_or(opts, Format::Json) {
        Format::Json => {
            let rows: Vec<String> = values
                .iter()
                .map(|(x, y, v)| {
                    format!("{{\"x\":{},\"y\":{},\"value\":{}}}", num(*x), num(*y), element(v))
                })
                .collect();
            format!("{{\"points\":[{}]}}", rows.join(","))
        }
        Format::Csv => {
            let mut body = String::from("x,y,e_re,e_im,rho_re,rho_im");
            for (x, y, v) in &values {
                let _ = write!(
                    body,
                    "\n{},{},{},{},{},{}",
                    num(*x),
                    num(*y),
                    num(v.w_e.re),
                    num(v.w_e.im),
                    num(v.w_rho.re),
                    num(v.w_rho.im)
                );
            }
            body
        }
    };
    write_out(opts, body)
}

fn components(opts: &CommonOpts, grid: &str) -> Result<(), CliError> {
    let job = read_job(opts)?;
    let m = json::parse_monogenic_job(&job)?;
    let body = match format_or(opts, Format::Csv) {
        Format::Csv => {
            let g = parse_grid(grid)?;
            let arrays = sample_components(&m, &g);
            let mut body = String::from("x,y,U1,U2,U3,U4");
            for j in 0..g.n {
                for i in 0..g.n {
                    let idx = g.idx(i, j);
                    let _ = write!(
                        body,
                        "\n{},{},{},{},{},{}",
                        num(g.x(i)),
                        num(g.y(j)),
                        num(arrays[0][idx]),
                        num(arrays[1][idx]),
                        num(arrays[2][idx]),
                        num(arrays[3][idx])
                    );
                }
            }
            body
        }
        Format::Json => {
            // Symbolic export: each component as a bivariate term list.
            let set = m.components();
            let export = |p: &biharm::RealBiPoly| {
                let terms: Vec<String> = p
                    .terms()
                    .map(|((i, j), c)| format!("{{\"i\":{i},\"j\":{j},\"c\":[{},{}]}}", num(c), num(0.0)))
                    .collect();
                format!("[{}]", terms.join(","))
            };
            format!(
                "{{\"U1\":{},\"U2\":{},\"U3\":{},\"U4\":{}}}",
                export(&set.u1),
                export(&set.u2),
                export(&set.u3),
                export(&set.u4)
            )
        }
    };
    write_out(opts, body)
}

fn reconstruct(opts: &CommonOpts) -> Result<(), CliError> {
    json_only(opts, "reconstruct")?;
    let job = read_job(opts)?;
    let (g, params) = json::parse_reconstruct_job(&job)?;
    let m = biharm::goursat::reconstruct(&g, &params);
    let diff = &m.components().u1 - &g.u();
    let residual = diff.max_coeff_abs();
    let ok = diff.is_zero(opts.tolerance);
    let body = format!(
        "{{\"F\":{},\"F0\":{},\"phi0\":{{\"a\":{},\"b\":{},\"c\":{},\"d\":{}}},\"u1_residual\":{},\"ok\":{}}}",
        poly(m.f()),
        poly(m.f0()),
        num(params.a),
        num(params.b),
        num(params.c),
        num(params.d),
        num(residual),
        ok,
    );
    write_out(opts, body)?;
    if !ok {
        return Err(CliError::Verification(format!(
            "first-component round-trip residual {} above tolerance {}",
            num(residual),
            num(opts.tolerance)
        )));
    }
    Ok(())
}

fn run_verify(opts: &CommonOpts) -> Result<(), CliError> {
    let job = read_job(opts)?;
    let seed = json::parse_verify_job(&job)?;
    let report = verify::run_all(seed);
    let body = match format_or(opts, Format::Json) {
        Format::Json => {
            let rows: Vec<String> = report
                .checks
                .iter()
                .map(|c| {
                    format!(
                        "{{\"name\":\"{}\",\"passed\":{},\"detail\":\"{}\"}}",
                        json_escape(c.name),
                        c.passed,
                        json_escape(&c.detail)
                    )
                })
                .collect();
            format!(
                "{{\"seed\":{},\"passed\":{},\"checks\":[{}]}}",
                seed,
                report.all_passed(),
                rows.join(",")
            )
        }
        Format::Csv => {
            let mut body = String::from("name,passed,detail");
            for c in &report.checks {
                let _ = write!(body, "\n{},{},\"{}\"", c.name, c.passed, c.detail.replace('"', "\"\""));
            }
            body
        }
    };
    write_out(opts, body)?;
    if !report.all_passed() {
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        return Err(CliError::Verification(format!("failed checks: {}", failed.join(", "))));
    }
    Ok(())
}
