//! `ptheta` command line.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad arguments, 3 undetermined
//! (order or precision too small to decide).

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rug::{Complex, Float, Rational};
use serde::Serialize;
use serde_json::{json, Value};

use crate::asymptotics::{asymptotic_coeffs, predicted_sign, CoefficientTable, ExpansionResult};
use crate::combinatorics::{
    count_fpf_involutions, double_factorial_odd, fpf_alternating_involutions, zigzag_brute_force,
    zigzag_table, DEFAULT_ENUMERATION_BOUND,
};
use crate::numeric::{
    eval_f, extract_coeffs, float_from_rational, modular_check, to_decimal, ExtractOptions, NumericError,
    MODULAR_PANEL,
};
use crate::powerseries::{parse_ratio, to_ratio_string};
use crate::qseries::{eta_identity_check, recursion_check, IdentityReport};

/// Version tag carried by every JSON document the CLI writes.
pub const SCHEMA_VERSION: u32 = 1;

/// Agreement required between extracted and exact coefficients.
pub const ORACLE_TOLERANCE: f64 = 1e-6;
/// Largest modular-transformation residual accepted by `eta-check`.
pub const MODULAR_TOLERANCE: f64 = 1e-30;
/// Below this precision the modular tolerance cannot be met.
pub const MODULAR_MIN_PRECISION: u32 = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    CheckFailed = 1,
    BadArguments = 2,
    Undetermined = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    fn worst(self, other: Self) -> Self {
        use ExitStatus::*;
        match (self, other) {
            (BadArguments, _) | (_, BadArguments) => BadArguments,
            (CheckFailed, _) | (_, CheckFailed) => CheckFailed,
            (Undetermined, _) | (_, Undetermined) => Undetermined,
            _ => Ok,
        }
    }

    fn label(self) -> &'static str {
        match self {
            ExitStatus::Ok => "ok",
            ExitStatus::CheckFailed => "failed",
            ExitStatus::BadArguments => "bad-arguments",
            ExitStatus::Undetermined => "undetermined",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Recursion,
    EtaIdentity,
    Signs,
    Integrality,
    Oracles,
    Involutions,
}

#[derive(Debug, Parser)]
#[command(name = "ptheta", version, about = "Asymptotic coefficients of partial theta functions")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact coefficients a_0..a_N with the sign report.
    Coeffs {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        b: u32,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        which: Suite,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        b_max: Option<u32>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value_t = 512)]
        precision_bits: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Numerically extract a_0..a_M from values of f_b near t = 0.
    Extract {
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, default_value_t = 4)]
        order: usize,
        #[arg(long, default_value = "1/16")]
        t0: String,
        #[arg(long, default_value_t = 512)]
        precision_bits: u32,
        /// Significant digits in decimal output.
        #[arg(long, default_value_t = 30)]
        digits: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate f_b(t) directly.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long)]
        t: String,
        #[arg(long, default_value_t = 256)]
        precision_bits: u32,
        #[arg(long, default_value_t = 30)]
        digits: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Check eta(-1/tau) = sqrt(-i tau) eta(tau) on a fixed panel of points.
    EtaCheck {
        #[arg(long, default_value_t = 256)]
        precision_bits: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Zigzag numbers E_0..E_N.
    Zigzag {
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Fixed-point-free alternating involutions of S_2n for n = 0..N.
    Involutions {
        #[arg(long, default_value_t = 6)]
        order: usize,
        #[command(flatten)]
        output: Output,
    },
}

impl Command {
    fn output(&self) -> &Output {
        match self {
            Command::Coeffs { output, .. }
            | Command::Verify { output, .. }
            | Command::Extract { output, .. }
            | Command::Eval { output, .. }
            | Command::EtaCheck { output, .. }
            | Command::Zigzag { output, .. }
            | Command::Involutions { output, .. } => output,
        }
    }
}

/// What a command produced: an exit status and the rendered document.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: ExitStatus,
    pub body: String,
}

impl Outcome {
    fn new(status: ExitStatus, body: String) -> Self {
        Self { status, body }
    }

    fn bad_args(msg: impl Into<String>) -> Self {
        Self::new(ExitStatus::BadArguments, msg.into())
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct Versioned<T: Serialize> {
    schema_version: u32,
    #[serde(flatten)]
    inner: T,
}

fn versioned<T: Serialize>(inner: T) -> String {
    to_json(&Versioned { schema_version: SCHEMA_VERSION, inner })
}

/// Executes a parsed command.
pub fn execute(config: &RunConfig) -> Outcome {
    let format = config.command.output().format;
    match &config.command {
        Command::Coeffs { b, order, .. } => cmd_coeffs(*b, *order, format.unwrap_or(Format::Text)),
        Command::Verify { which, b_max, order, precision_bits, .. } => {
            cmd_verify(*which, *b_max, *order, *precision_bits, format.unwrap_or(Format::Json))
        }
        Command::Extract { b, order, t0, precision_bits, digits, .. } => {
            cmd_extract(*b, *order, t0, *precision_bits, *digits, format.unwrap_or(Format::Text))
        }
        Command::Eval { b, t, precision_bits, digits, .. } => {
            cmd_eval(*b, t, *precision_bits, *digits, format.unwrap_or(Format::Text))
        }
        Command::EtaCheck { precision_bits, .. } => cmd_eta_check(*precision_bits, format.unwrap_or(Format::Text)),
        Command::Zigzag { order, .. } => cmd_zigzag(*order, format.unwrap_or(Format::Text)),
        Command::Involutions { order, .. } => cmd_involutions(*order, format.unwrap_or(Format::Text)),
    }
}

/// Parses `args` (including the program name), runs, and writes the result
/// to stdout or `--out`. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitStatus::BadArguments.code() } else { 0 };
        }
    };
    let outcome = execute(&config);
    if outcome.status == ExitStatus::BadArguments {
        eprintln!("error: {}", outcome.body.trim_end());
        eprintln!("\nFor more information, try '--help'.");
        return outcome.status.code();
    }
    match &config.command.output().out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitStatus::BadArguments.code();
            }
        }
        None => print!("{}", outcome.body),
    }
    outcome.status.code()
}

fn sign_text(r: &ExpansionResult) -> String {
    match &r.sign {
        Ok(s) => format!("sign_cutoff={} stable_sign={:+}", s.sign_cutoff, s.stable_sign),
        Err(e) => format!("sign undetermined: {e}"),
    }
}

pub fn cmd_coeffs(b: u32, order: usize, format: Format) -> Outcome {
    let r = match asymptotic_coeffs(b, order) {
        Ok(r) => r,
        Err(e) => return Outcome::bad_args(e.to_string()),
    };
    let body = match format {
        Format::Json => versioned::<CoefficientTable>(r.table()),
        Format::Csv => r.to_csv(),
        Format::Text => format!("{r}\n{}\n", sign_text(&r)),
    };
    Outcome::new(ExitStatus::Ok, body)
}

#[derive(Serialize)]
struct SuiteReport {
    suite: &'static str,
    status: &'static str,
    checks: Vec<Value>,
}

fn render_suite(suite: &'static str, status: ExitStatus, checks: Vec<Value>, format: Format) -> Outcome {
    let body = match format {
        Format::Json => versioned(SuiteReport { suite, status: status.label(), checks }),
        Format::Text | Format::Csv => {
            let mut s = String::new();
            for c in &checks {
                let _ = writeln!(s, "{}", serde_json::to_string(c).expect("json value"));
            }
            let _ = writeln!(s, "{suite}: {}", status.label());
            s
        }
    };
    Outcome::new(status, body)
}

fn identity_json(r: &IdentityReport) -> Value {
    serde_json::to_value(r).expect("serializable")
}

pub fn cmd_verify(which: Suite, b_max: Option<u32>, order: Option<usize>, prec: u32, format: Format) -> Outcome {
    match which {
        Suite::Recursion => verify_recursion(b_max.unwrap_or(12), order.unwrap_or(200), format),
        Suite::EtaIdentity => {
            let r = eta_identity_check(order.unwrap_or(200));
            let status = if r.is_ok() { ExitStatus::Ok } else { ExitStatus::CheckFailed };
            render_suite("eta-identity", status, vec![identity_json(&r)], format)
        }
        Suite::Signs => verify_signs(b_max.unwrap_or(12), order.unwrap_or(60), format),
        Suite::Integrality => verify_integrality(b_max.unwrap_or(12), order.unwrap_or(60), format),
        Suite::Oracles => verify_oracles(b_max.unwrap_or(4), order.unwrap_or(5), prec, format),
        Suite::Involutions => verify_involutions(order.unwrap_or(6), format),
    }
}

fn verify_recursion(b_max: u32, order: usize, format: Format) -> Outcome {
    if b_max < 2 {
        return Outcome::bad_args("recursion needs --b-max of at least 2");
    }
    let mut status = ExitStatus::Ok;
    let mut checks = Vec::new();
    for b in 2..=b_max {
        match recursion_check(b, order) {
            Ok(r) => {
                if !r.is_ok() {
                    status = status.worst(ExitStatus::CheckFailed);
                }
                checks.push(identity_json(&r));
            }
            Err(e) => return Outcome::bad_args(e.to_string()),
        }
    }
    render_suite("recursion", status, checks, format)
}

fn verify_signs(b_max: u32, order: usize, format: Format) -> Outcome {
    let mut status = ExitStatus::Ok;
    let mut checks = Vec::new();
    for b in 1..=b_max {
        let r = match asymptotic_coeffs(b, order) {
            Ok(r) => r,
            Err(e) => return Outcome::bad_args(e.to_string()),
        };
        let predicted = predicted_sign(b);
        let check = match &r.sign {
            Ok(s) => {
                let ok = s.stable_sign == predicted;
                if !ok {
                    status = status.worst(ExitStatus::CheckFailed);
                }
                json!({
                    "b": b,
                    "order": order,
                    "status": if ok { "ok" } else { "failed" },
                    "stable_sign": s.stable_sign,
                    "predicted_sign": predicted,
                    "sign_cutoff": s.sign_cutoff,
                })
            }
            Err(e) => {
                status = status.worst(ExitStatus::Undetermined);
                json!({
                    "b": b,
                    "order": order,
                    "status": "undetermined",
                    "predicted_sign": predicted,
                    "reason": e.to_string(),
                })
            }
        };
        checks.push(check);
    }
    render_suite("signs", status, checks, format)
}

fn verify_integrality(b_max: u32, order: usize, format: Format) -> Outcome {
    let mut status = ExitStatus::Ok;
    let mut checks = Vec::new();
    for b in 1..=b_max {
        let r = match asymptotic_coeffs(b, order) {
            Ok(r) => r,
            Err(e) => return Outcome::bad_args(e.to_string()),
        };
        let bad = r.non_integral();
        if !bad.is_empty() {
            status = status.worst(ExitStatus::CheckFailed);
        }
        checks.push(json!({
            "b": b,
            "order": order,
            "status": if bad.is_empty() { "ok" } else { "failed" },
            "non_integral": bad.iter().map(|&n| json!({"n": n, "a_n": to_ratio_string(&r.a[n])})).collect::<Vec<_>>(),
        }));
    }
    render_suite("integrality", status, checks, format)
}

fn verify_oracles(b_max: u32, order: usize, prec: u32, format: Format) -> Outcome {
    let mut status = ExitStatus::Ok;
    let mut checks = Vec::new();
    let opts = ExtractOptions { precision: prec, ..Default::default() };
    for b in 1..=b_max {
        let exact = match asymptotic_coeffs(b, order) {
            Ok(r) => r,
            Err(e) => return Outcome::bad_args(e.to_string()),
        };
        let numeric = match extract_coeffs(f64::from(b), order, &opts) {
            Ok(x) => x,
            Err(e @ NumericError::ExtractionDiverged { .. }) => {
                status = status.worst(ExitStatus::Undetermined);
                checks.push(json!({"route": "numeric", "b": b, "status": "undetermined", "reason": e.to_string()}));
                continue;
            }
            Err(e) => return Outcome::bad_args(e.to_string()),
        };
        for n in 0..=order {
            let diff = Float::with_val(prec, &numeric.coeffs[n] - &exact.a[n]).abs();
            let ok = diff < ORACLE_TOLERANCE;
            if !ok {
                status = status.worst(ExitStatus::CheckFailed);
            }
            checks.push(json!({
                "route": "numeric",
                "b": b,
                "n": n,
                "status": if ok { "ok" } else { "failed" },
                "exact": to_ratio_string(&exact.a[n]),
                "numeric": to_decimal(&numeric.coeffs[n], 20),
                "abs_diff": to_decimal(&diff, 6),
            }));
        }
    }
    let (inv_status, inv_checks) = involution_checks(6);
    status = status.worst(inv_status);
    checks.extend(inv_checks);
    render_suite("oracles", status, checks, format)
}

fn involution_checks(order: usize) -> (ExitStatus, Vec<Value>) {
    let mut status = ExitStatus::Ok;
    let mut checks = Vec::new();
    let exact = asymptotic_coeffs(1, order).expect("b = 1 is valid");
    for n in 0..=order {
        let count = fpf_alternating_involutions(n).expect("order checked against the bound");
        let ok = exact.a[n] == count;
        if !ok {
            status = ExitStatus::CheckFailed;
        }
        checks.push(json!({
            "route": "involutions",
            "n": n,
            "status": if ok { "ok" } else { "failed" },
            "a_n": to_ratio_string(&exact.a[n]),
            "count": count,
        }));
    }
    (status, checks)
}

fn verify_involutions(order: usize, format: Format) -> Outcome {
    if order > DEFAULT_ENUMERATION_BOUND {
        return Outcome::bad_args(format!(
            "--order {order} exceeds the enumeration bound {DEFAULT_ENUMERATION_BOUND}"
        ));
    }
    let (mut status, mut checks) = involution_checks(order);
    for n in 0..=order {
        let count = count_fpf_involutions(n);
        let expected = double_factorial_odd(n);
        let ok = count == expected;
        if !ok {
            status = status.worst(ExitStatus::CheckFailed);
        }
        checks.push(json!({
            "route": "matchings",
            "n": n,
            "status": if ok { "ok" } else { "failed" },
            "count": count,
            "double_factorial": expected,
        }));
    }
    let seidel = zigzag_table(9);
    for (n, z) in seidel.iter().enumerate() {
        let brute = zigzag_brute_force(n);
        let ok = *z == brute;
        if !ok {
            status = status.worst(ExitStatus::CheckFailed);
        }
        checks.push(json!({
            "route": "zigzag",
            "n": n,
            "status": if ok { "ok" } else { "failed" },
            "seidel": z.to_string(),
            "brute_force": brute,
        }));
    }
    render_suite("involutions", status, checks, format)
}

fn parse_unit_interval(s: &str, name: &str) -> Result<Rational, String> {
    let r = parse_ratio(s).or_else(|_| {
        s.trim()
            .parse::<f64>()
            .ok()
            .and_then(Rational::from_f64)
            .ok_or_else(|| format!("--{name} {s:?} is not a number"))
    })?;
    if !(r > 0 && r < 1) {
        return Err(format!("--{name} must lie strictly between 0 and 1"));
    }
    Ok(r)
}

pub fn cmd_extract(b: f64, order: usize, t0: &str, prec: u32, digits: usize, format: Format) -> Outcome {
    let t0 = match parse_unit_interval(t0, "t0") {
        Ok(t) => t,
        Err(e) => return Outcome::bad_args(e),
    };
    let opts = ExtractOptions { t0: t0.clone(), precision: prec, ..Default::default() };
    let ex = match extract_coeffs(b, order, &opts) {
        Ok(x) => x,
        Err(e @ NumericError::ExtractionDiverged { .. }) => {
            return Outcome::new(ExitStatus::Undetermined, format!("{e}\n"));
        }
        Err(e) => return Outcome::bad_args(e.to_string()),
    };
    let coeffs: Vec<String> = ex.coeffs.iter().map(|c| to_decimal(c, digits)).collect();
    let errors: Vec<String> = ex.error_estimates.iter().map(|c| to_decimal(c, 3)).collect();
    let body = match format {
        Format::Json => versioned(json!({
            "b": b,
            "t0": to_ratio_string(&t0),
            "precision_bits": prec,
            "coeffs": coeffs,
            "error_estimates": errors,
        })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "a_n", "error_estimate"]).expect("in-memory write");
            for (n, (c, e)) in coeffs.iter().zip(&errors).enumerate() {
                w.write_record([n.to_string(), c.clone(), e.clone()]).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("ascii")
        }
        Format::Text => {
            let mut s = String::new();
            for (n, (c, e)) in coeffs.iter().zip(&errors).enumerate() {
                let _ = writeln!(s, "a_{n} = {c}  (+/- {e})");
            }
            s
        }
    };
    Outcome::new(ExitStatus::Ok, body)
}

pub fn cmd_eval(b: f64, t: &str, prec: u32, digits: usize, format: Format) -> Outcome {
    let t = match parse_unit_interval(t, "t") {
        Ok(t) => t,
        Err(e) => return Outcome::bad_args(e),
    };
    let value = match eval_f(b, &float_from_rational(&t, prec), prec) {
        Ok(v) => v,
        Err(e) => return Outcome::bad_args(e.to_string()),
    };
    let v = to_decimal(&value, digits);
    let body = match format {
        Format::Json => versioned(json!({
            "b": b,
            "t": to_ratio_string(&t),
            "precision_bits": prec,
            "value": v,
        })),
        Format::Csv => format!("b,t,value\n{b},{},{v}\n", to_ratio_string(&t)),
        Format::Text => format!("{v}\n"),
    };
    Outcome::new(ExitStatus::Ok, body)
}

pub fn cmd_eta_check(prec: u32, format: Format) -> Outcome {
    if prec < MODULAR_MIN_PRECISION {
        return Outcome::new(
            ExitStatus::Undetermined,
            format!("precision {prec} bits cannot resolve residuals below {MODULAR_TOLERANCE:e}; use at least {MODULAR_MIN_PRECISION}\n"),
        );
    }
    let mut status = ExitStatus::Ok;
    let mut checks = Vec::new();
    for &(re, im) in &MODULAR_PANEL {
        let tau = Complex::with_val(prec, (re, im));
        let residual = match modular_check(&tau, prec) {
            Ok(r) => r,
            Err(e) => return Outcome::bad_args(e.to_string()),
        };
        let ok = residual < MODULAR_TOLERANCE;
        if !ok {
            status = status.worst(ExitStatus::CheckFailed);
        }
        checks.push(json!({
            "tau_re": re,
            "tau_im": im,
            "status": if ok { "ok" } else { "failed" },
            "residual": to_decimal(&residual, 6),
        }));
    }
    render_suite("eta-check", status, checks, format)
}

pub fn cmd_zigzag(order: usize, format: Format) -> Outcome {
    let table = zigzag_table(order);
    let body = match format {
        Format::Json => versioned(json!({
            "order": order,
            "zigzag": table.iter().map(|z| z.to_string()).collect::<Vec<_>>(),
        })),
        Format::Csv | Format::Text => {
            let mut s = String::from(if format == Format::Csv { "n,E_n\n" } else { "" });
            let sep = if format == Format::Csv { "," } else { " " };
            for (n, z) in table.iter().enumerate() {
                let _ = writeln!(s, "{n}{sep}{z}");
            }
            s
        }
    };
    Outcome::new(ExitStatus::Ok, body)
}

pub fn cmd_involutions(order: usize, format: Format) -> Outcome {
    let counts = match (0..=order).map(fpf_alternating_involutions).collect::<Result<Vec<_>, _>>() {
        Ok(c) => c,
        Err(e) => return Outcome::bad_args(e.to_string()),
    };
    let body = match format {
        Format::Json => versioned(json!({ "order": order, "counts": counts })),
        Format::Csv | Format::Text => {
            let mut s = String::from(if format == Format::Csv { "n,count\n" } else { "" });
            let sep = if format == Format::Csv { "," } else { " " };
            for (n, c) in counts.iter().enumerate() {
                let _ = writeln!(s, "{n}{sep}{c}");
            }
            s
        }
    };
    Outcome::new(ExitStatus::Ok, body)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<RunConfig, clap::Error> {
        RunConfig::try_parse_from(std::iter::once("ptheta").chain(args.iter().copied()))
    }

    #[test]
    fn zero_b_is_a_usage_error() {
        let err = parse(&["coeffs", "--b", "0", "--order", "4"]).unwrap_err();
        assert!(err.use_stderr());
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn coeffs_text_output() {
        let out = execute(&parse(&["coeffs", "--b", "1", "--order", "4"]).unwrap());
        assert_eq!(out.status, ExitStatus::Ok);
        assert_eq!(out.body.lines().next(), Some("1 1 1 2 5"));
    }

    #[test]
    fn worst_status_ordering() {
        use ExitStatus::*;
        assert_eq!(Ok.worst(Undetermined), Undetermined);
        assert_eq!(Undetermined.worst(CheckFailed), CheckFailed);
        assert_eq!(CheckFailed.worst(BadArguments), BadArguments);
        assert_eq!(Ok.worst(Ok), Ok);
    }

    #[test]
    fn unit_interval_parsing() {
        assert_eq!(parse_unit_interval("1/16", "t0").unwrap(), Rational::from((1, 16)));
        assert_eq!(parse_unit_interval("0.5", "t").unwrap(), Rational::from((1, 2)));
        assert!(parse_unit_interval("1", "t").is_err());
        assert!(parse_unit_interval("abc", "t").is_err());
    }

    #[test]
    fn involutions_beyond_bound_is_bad_args() {
        assert_eq!(cmd_verify(Suite::Involutions, None, Some(8), 64, Format::Json).status, ExitStatus::BadArguments);
        assert_eq!(cmd_involutions(8, Format::Text).status, ExitStatus::BadArguments);
    }

    #[test]
    fn low_precision_eta_check_is_undetermined() {
        assert_eq!(cmd_eta_check(64, Format::Json).status, ExitStatus::Undetermined);
    }
}
