use serde::Serialize;
use serde_json::Value;

pub const REPORT_SCHEMA_VERSION: &str = "1";

/// Machine-readable run report, printed to stdout as one JSON document.
/// The schema is published in `docs/report_schema.json` and is stable for
/// a given tool version.
#[derive(Serialize)]
pub struct RunReport {
    pub version: String,
    pub schema_version: &'static str,
    pub command: String,
    pub inputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub timings_ms: Timings,
    pub result: Value,
}

#[derive(Serialize, Default)]
pub struct Timings {
    pub total: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kmatrix: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refine: Option<f64>,
}

impl RunReport {
    pub fn new(command: &str, inputs: Vec<String>) -> RunReport {
        RunReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            schema_version: REPORT_SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            seed: None,
            timings_ms: Timings::default(),
            result: Value::Null,
        }
    }

    pub fn emit(&self) {
        println!("{}", serde_json::to_string_pretty(self).expect("report serializes"));
    }
}
