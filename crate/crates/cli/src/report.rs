//! The JSON document every command prints.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    /// Printed form of the surface expression, when the command has one.
    pub surface: Option<String>,
    pub params: Value,
    pub result: Value,
    /// `None` unless a tolerance-gated check ran.
    pub pass: Option<bool>,
    pub tolerances: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            surface: None,
            params: Value::Object(Default::default()),
            result: Value::Null,
            pass: None,
            tolerances: Value::Object(Default::default()),
            error: None,
        }
    }

    pub fn failed(command: &str, err: &anyhow::Error) -> Self {
        Report {
            error: Some(ErrorInfo {
                kind: error_kind(err).to_string(),
                message: format!("{err:#}"),
            }),
            ..Report::new(command)
        }
    }

    /// 0 when no check failed, 1 when a check failed, 2 on error.
    pub fn exit_code(&self) -> i32 {
        match (&self.error, self.pass) {
            (Some(_), _) => 2,
            (None, Some(false)) => 1,
            (None, _) => 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are always serializable")
    }
}

/// Stable snake_case name of the root cause.
pub fn error_kind(err: &anyhow::Error) -> &'static str {
    use isocurv::Error as E;
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<E>() {
            return match e {
                E::Parse(_) => "parse",
                E::Eval { .. } | E::Arithmetic(_) => "evaluation",
                E::Degenerate(_) => "degenerate_parameters",
                E::InvalidSpec(_) => "invalid_spec",
                E::NoConstantPrediction => "no_constant_prediction",
                E::EmptyDomain => "empty_domain",
                E::InvalidDomain(_) => "invalid_domain",
                E::SingularPoint { .. } => "singular_point",
                E::DegenerateOde { .. } => "degenerate_ode",
                E::StepTooLarge { .. } => "step_too_large",
                E::InvalidIvp(_) => "invalid_ivp",
                E::InvalidConfig(_) => "invalid_config",
            };
        }
        if cause.is::<isocurv::ParseError>() {
            return "parse";
        }
        if cause.is::<serde_json::Error>() {
            return "invalid_json";
        }
        if cause.is::<std::io::Error>() {
            return "io";
        }
    }
    "invalid_arguments"
}
