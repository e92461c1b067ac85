//! The run report printed by every command, and its two renderings.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;
use superlie::report::Status;
use superlie::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Exit codes: 0 pass, 1 identity failure, 2 usage, 3 domain, 4 resource budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Pass = 0,
    Failure = 1,
    Usage = 2,
    Domain = 3,
    Budget = 4,
}

impl Exit {
    pub fn of_error(e: &Error) -> Self {
        match e {
            Error::Domain(_) => Exit::Domain,
            Error::Budget { .. } | Error::Resource(_) => Exit::Budget,
            Error::Parse(_) => Exit::Usage,
            Error::Internal(_) => Exit::Failure,
        }
    }

    pub fn of_status(s: Status) -> Self {
        match s {
            Status::Pass => Exit::Pass,
            Status::Fail | Status::Error => Exit::Failure,
        }
    }

    fn kind(self) -> &'static str {
        match self {
            Exit::Pass => "none",
            Exit::Failure => "internal",
            Exit::Usage => "usage",
            Exit::Domain => "domain",
            Exit::Budget => "resource",
        }
    }
}

impl From<Exit> for ExitCode {
    fn from(e: Exit) -> Self {
        ExitCode::from(e as u8)
    }
}

/// What a command produced: the JSON payload plus aligned text lines.
#[derive(Debug)]
pub struct Outcome {
    pub status: Status,
    pub payload: Value,
    pub text: Vec<(String, String)>,
    /// Extra lines printed after the key/value block in text mode.
    pub details: Vec<String>,
}

impl Outcome {
    pub fn pass(payload: Value, text: Vec<(String, String)>) -> Self {
        Self { status: Status::Pass, payload, text, details: Vec::new() }
    }
}

/// Invariant: `status == fail` implies `payload.first_discrepancy` is set.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl RunReport {
    pub fn error(command: String, parameters: BTreeMap<String, Value>, e: &Error) -> (Self, Exit) {
        let exit = Exit::of_error(e);
        let payload = serde_json::json!({ "error": { "kind": exit.kind(), "message": e.to_string() } });
        (Self { command, parameters, status: Status::Error, payload, elapsed_ms: None }, exit)
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Error => "error",
    }
}

fn param_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn render_json(report: &RunReport) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize")
}

pub fn render_text(report: &RunReport, text: &[(String, String)], details: &[String]) -> String {
    let mut rows: Vec<(String, String)> = vec![("command".into(), report.command.clone())];
    rows.extend(report.parameters.iter().map(|(k, v)| (k.clone(), param_text(v))));
    rows.push(("status".into(), status_word(report.status).into()));
    rows.extend(text.iter().cloned());
    if let Some(ms) = report.elapsed_ms {
        rows.push(("elapsed_ms".into(), ms.to_string()));
    }
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out: Vec<String> = rows.iter().map(|(k, v)| format!("{k:<width$}  {v}")).collect();
    out.extend(details.iter().cloned());
    out.join("\n")
}
