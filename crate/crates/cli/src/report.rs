use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

/// One command run on one input. Keys serialize in a fixed order, and
/// `results` is a `serde_json::Value`, whose maps are sorted, so equal
/// inputs give byte-equal reports once `timing_ms` is left out.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input: String,
    pub input_digest: String,
    pub results: Value,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    #[serde(skip)]
    pub exit_code: i32,
    #[serde(skip)]
    pub summary: String,
}

pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}
