//! Batch driver: job configurations in, machine-readable reports out.
//!
//! A job names a problem instance plus how to compute it (which route,
//! which arithmetic backend) and how to serialize the answer. Reports carry
//! the agreed value as a decimal string (counts can exceed native integer
//! widths), per-route values, agreement/integrality/chamber flags, wall
//! diagnostics, and timing. Sweeps fan one configuration out over a list of
//! levels in parallel and merge the reports in input order; a bad entry is
//! flagged in its own report and never poisons its neighbours.

use crate::alcove::{alcove_sum_float, verlinde_number, ProblemSpec};
use crate::bigfixed::BigFixed;
use crate::error::Error;
use crate::residue::verlinde_by_residue;
use crate::root_system::{build_root_system, rat, wall_violations, Weight};
use crate::Rat;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::Instant;

/// Which computational route(s) to run.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Sum,
    Residue,
    #[default]
    Both,
}

/// Which arithmetic the sum route uses. The float backend evaluates the
/// alcove sum in 64-digit fixed-point complex arithmetic and demands the
/// total land within 1e-9 of a real integer; the residue route is always
/// exact, so float jobs run the sum route only.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    #[default]
    Exact,
    Float,
}

/// Serialization format for rendered reports.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Sum => "sum",
            Method::Residue => "residue",
            Method::Both => "both",
        })
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        })
    }
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "sum" => Ok(Method::Sum),
            "residue" => Ok(Method::Residue),
            "both" => Ok(Method::Both),
            other => Err(Error::Validation(format!(
                "unknown method {other:?}; expected sum, residue, or both"
            ))),
        }
    }
}

impl std::str::FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            other => Err(Error::Validation(format!(
                "unknown backend {other:?}; expected exact or float"
            ))),
        }
    }
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Validation(format!(
                "unknown output format {other:?}; expected json or csv"
            ))),
        }
    }
}

/// One batch job: the problem instance plus computation and output choices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobConfig {
    pub n: usize,
    pub d: i64,
    pub g: u32,
    pub k: i64,
    #[serde(default)]
    pub weights: Vec<Vec<i64>>,
    #[serde(default)]
    pub method: Method,
    #[serde(default)]
    pub backend: Backend,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<Vec<i64>>,
    #[serde(default)]
    pub output: OutputFormat,
}

/// The outcome of one job. `value` is the agreed count as a decimal string;
/// per-route values are reported whenever the route ran. The agreement flag
/// is true only when both routes ran and produced identical integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub d: i64,
    pub g: u32,
    pub k: i64,
    pub weights: Vec<Vec<i64>>,
    pub method: Method,
    pub backend: Backend,
    pub value: Option<String>,
    pub sum_value: Option<String>,
    pub residue_value: Option<String>,
    pub agreement: bool,
    pub integral: bool,
    pub chamber_valid: bool,
    pub wall_diagnostics: Vec<String>,
    pub error: Option<String>,
    pub error_kind: Option<String>,
    pub elapsed_ms: u64,
}

impl Report {
    /// Process exit code the report maps to: 0 success, 2 invalid input,
    /// 3 disagreement or integrality/truncation failure.
    pub fn exit_code(&self) -> i32 {
        match self.error_kind.as_deref() {
            None => 0,
            Some("validation") | Some("internal") => 2,
            Some(_) => 3,
        }
    }

    fn set_error(&mut self, e: &Error) {
        let kind = match e {
            Error::Validation(_) => "validation",
            Error::NotAnInteger(_) => "integrality",
            Error::Disagreement(_) => "disagreement",
            Error::Truncation { .. } => "truncation",
            Error::DivisionByZero => "internal",
        };
        self.error = Some(e.to_string());
        self.error_kind = Some(kind.to_string());
    }
}

const FLOAT_DIGITS: u32 = 64;

/// Run one job to completion. Failures are captured in the report rather
/// than returned, so batch callers can keep going.
pub fn run(config: &JobConfig) -> Report {
    let start = Instant::now();
    let mut report = Report {
        n: config.n,
        d: config.d,
        g: config.g,
        k: config.k,
        weights: config.weights.clone(),
        method: config.method,
        backend: config.backend,
        value: None,
        sum_value: None,
        residue_value: None,
        agreement: false,
        integral: false,
        chamber_valid: false,
        wall_diagnostics: Vec::new(),
        error: None,
        error_kind: None,
        elapsed_ms: 0,
    };

    // chamber diagnostics, best-effort, before full validation
    if config.n >= 2
        && config.k >= 1
        && config
            .weights
            .iter()
            .all(|w| w.len() == config.n - 1 && w.iter().all(|&m| m >= 0))
    {
        if let Ok(rs) = build_root_system(config.n) {
            let scale = rat(1, config.k);
            let scaled: Vec<_> = config
                .weights
                .iter()
                .map(|w| Weight::new(w.clone()).to_tvector().scale(&scale))
                .collect();
            report.wall_diagnostics = wall_violations(&rs, &scaled, None);
            report.chamber_valid = report.wall_diagnostics.is_empty();
        }
    }

    let weights: Vec<Weight> = config.weights.iter().map(|w| Weight::new(w.clone())).collect();
    match ProblemSpec::new(config.n, config.d, config.g, config.k, weights) {
        Err(e) => report.set_error(&e),
        Ok(spec) => {
            report.chamber_valid = true;
            compute_into(&mut report, &spec, config.method, config.backend);
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

fn compute_into(report: &mut Report, spec: &ProblemSpec, method: Method, backend: Backend) {
    if backend == Backend::Float {
        // The float backend evaluates the alcove sum only; the residue route
        // is exact-rational by construction and has no float variant.
        if method == Method::Residue {
            report.set_error(&Error::Validation(
                "the float backend evaluates the alcove sum, not the residue route; \
                 use --backend exact with --method residue"
                    .into(),
            ));
            return;
        }
        match alcove_sum_float(spec, FLOAT_DIGITS) {
            Err(e) => report.set_error(&e),
            Ok(z) => {
                let rounded = z.re.round_to_int();
                let target = BigFixed::from_rat(&Rat::from_integer(rounded.clone()), z.re.bits());
                let tol = BigFixed::from_rat(&rat(1, 1_000_000_000), z.re.bits());
                if z.re.sub(&target).abs() < tol && z.im.abs() < tol {
                    report.value = Some(rounded.to_string());
                    report.sum_value = report.value.clone();
                    report.integral = true;
                } else {
                    let (re, im) = (z.re.to_f64(), z.im.to_f64());
                    report.set_error(&Error::NotAnInteger(format!(
                        "the floating alcove sum {re} + {im}i is not within 1e-9 of a real integer"
                    )));
                }
            }
        }
        return;
    }

    let sum = match method {
        Method::Sum | Method::Both => Some(verlinde_number(spec)),
        Method::Residue => None,
    };
    let residue = match method {
        Method::Residue | Method::Both => Some(verlinde_by_residue(spec)),
        Method::Sum => None,
    };
    if let Some(Ok(v)) = &sum {
        report.sum_value = Some(v.to_string());
    }
    if let Some(Ok(v)) = &residue {
        report.residue_value = Some(v.to_string());
    }
    match (sum, residue) {
        (Some(Ok(a)), Some(Ok(b))) => {
            if a == b {
                report.value = Some(a.to_string());
                report.agreement = true;
                report.integral = true;
            } else {
                report.set_error(&Error::Disagreement(format!(
                    "the alcove sum gives {a} but the residue route gives {b}"
                )));
            }
        }
        (Some(Ok(a)), None) => {
            report.value = Some(a.to_string());
            report.integral = true;
        }
        (None, Some(Ok(b))) => {
            report.value = Some(b.to_string());
            report.integral = true;
        }
        (Some(Err(e)), _) | (_, Some(Err(e))) => report.set_error(&e),
        (None, None) => unreachable!("some method always runs"),
    }
}

/// Run one job per sweep entry, in parallel, reports in input order. A job
/// that fails is flagged in its own report; the others still compute.
pub fn sweep(config: &JobConfig) -> Vec<Report> {
    let ks = config.sweep.clone().unwrap_or_default();
    ks.par_iter()
        .map(|&k| {
            let mut single = config.clone();
            single.k = k;
            single.sweep = None;
            run(&single)
        })
        .collect()
}

/// Serialize one report: a JSON object, or CSV with a header and one row.
pub fn render_single(report: &Report, output: OutputFormat) -> String {
    match output {
        OutputFormat::Json => {
            serde_json::to_string_pretty(report).expect("report serializes")
        }
        OutputFormat::Csv => render(std::slice::from_ref(report), output),
    }
}

/// Serialize a report list: a JSON array, or CSV with one row per report.
pub fn render(reports: &[Report], output: OutputFormat) -> String {
    match output {
        OutputFormat::Json => {
            serde_json::to_string_pretty(reports).expect("reports serialize")
        }
        OutputFormat::Csv => {
            let mut out = String::from(
                "n,d,g,k,weights,method,backend,value,sum_value,residue_value,\
                 agreement,integral,chamber_valid,error,elapsed_ms\n",
            );
            for r in reports {
                let weights = serde_json::to_string(&r.weights).expect("weights serialize");
                let row = [
                    r.n.to_string(),
                    r.d.to_string(),
                    r.g.to_string(),
                    r.k.to_string(),
                    weights,
                    r.method.to_string(),
                    r.backend.to_string(),
                    r.value.clone().unwrap_or_default(),
                    r.sum_value.clone().unwrap_or_default(),
                    r.residue_value.clone().unwrap_or_default(),
                    r.agreement.to_string(),
                    r.integral.to_string(),
                    r.chamber_valid.to_string(),
                    r.error.clone().unwrap_or_default(),
                    r.elapsed_ms.to_string(),
                ];
                let escaped: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
                out.push_str(&escaped.join(","));
                out.push('\n');
            }
            out
        }
    }
}

fn csv_field(f: &str) -> String {
    if f.contains(',') || f.contains('"') || f.contains('\n') {
        format!("\"{}\"", f.replace('"', "\"\""))
    } else {
        f.to_string()
    }
}
