//! Structured reports: a stable JSON envelope around command payloads.
//!
//! Every numeric quantity that could exceed machine range — coefficients,
//! counts, certificate multipliers — is serialized as a string rendered
//! from the exact value, so reports never contain floating point and are
//! byte-diffable as golden files. Object keys serialize in sorted order,
//! making reports deterministic for identical inputs.

use serde::Serialize;
use sha2::{Digest, Sha256};

/// The envelope: command name, input fingerprint, overall outcome, and the
/// command-specific payload.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputDigest>,
    /// `"pass"`, `"fail"`, or `"error"`.
    pub outcome: String,
    pub payload: serde_json::Value,
}

/// Fingerprint of the file a report was computed from.
#[derive(Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// Hex SHA-256 of raw input bytes.
pub fn digest(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    let out = h.finalize();
    let mut hex = String::with_capacity(64);
    for b in out {
        hex.push_str(&format!("{b:02x}"));
    }
    hex
}

impl Report {
    pub fn new(
        command: &str,
        input: Option<InputDigest>,
        outcome: &str,
        payload: serde_json::Value,
    ) -> Self {
        Report {
            command: command.to_string(),
            input,
            outcome: outcome.to_string(),
            payload,
        }
    }

    /// Renders the report as pretty JSON with a trailing newline.
    pub fn render(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("reports contain only serializable data");
        text.push('\n');
        text
    }
}
