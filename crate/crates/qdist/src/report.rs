//! The JSON report document the CLI emits with `--json`.
//!
//! Reports are deterministic: all maps are ordered, nothing
//! machine-specific is recorded, and the one nondeterministic section —
//! wall-clock timings — is dropped entirely in canonical mode, so two runs
//! of the same command on the same inputs produce byte-identical files.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Bumped when the document layout changes shape.
pub const REPORT_VERSION: u32 = 1;

/// One input file: where it came from and a hash pinning its content.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// A full report document.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub generator: String,
    /// The subcommand, e.g. `distance` or `reduce to-css`.
    pub command: String,
    /// Input label (`h`, `h_x`, …) to digest.
    pub inputs: BTreeMap<String, InputDigest>,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub results: BTreeMap<String, serde_json::Value>,
    /// `None` in canonical mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

/// Hex SHA-256 of raw bytes, as recorded in [`InputDigest`].
#[must_use]
pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Report {
    #[must_use]
    pub fn new(command: &str) -> Self {
        Report {
            version: REPORT_VERSION,
            generator: format!("qdist {}", env!("CARGO_PKG_VERSION")),
            command: command.to_string(),
            inputs: BTreeMap::new(),
            parameters: BTreeMap::new(),
            results: BTreeMap::new(),
            timings_ms: Some(BTreeMap::new()),
        }
    }

    /// Records an input under `label`, hashing `content` as read from `path`.
    pub fn input(&mut self, label: &str, path: &str, content: &[u8]) {
        self.inputs.insert(
            label.to_string(),
            InputDigest {
                path: path.to_string(),
                sha256: sha256_hex(content),
            },
        );
    }

    pub fn parameter(&mut self, key: &str, value: impl Serialize) {
        self.parameters.insert(key.to_string(), plain(value));
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(key.to_string(), plain(value));
    }

    pub fn timing(&mut self, key: &str, ms: f64) {
        if let Some(t) = &mut self.timings_ms {
            t.insert(key.to_string(), ms);
        }
    }

    /// Strips everything nondeterministic (the timings).
    pub fn canonicalize(&mut self) {
        self.timings_ms = None;
    }

    /// The serialized document, pretty-printed with a trailing newline.
    #[must_use]
    pub fn render(&self) -> String {
        let mut out =
            serde_json::to_string_pretty(self).expect("reports hold only plain JSON values");
        out.push('\n');
        out
    }
}

fn plain(value: impl Serialize) -> serde_json::Value {
    serde_json::to_value(value).expect("report values are plain data")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(canonical: bool) -> Report {
        let mut r = Report::new("distance");
        r.input("h", "hamming7.txt", b"3 7\n...");
        r.parameter("threads_requested", serde_json::Value::Null);
        r.result("d", 3);
        r.result("witness", "1110000");
        r.timing("oracle", 12.5);
        if canonical {
            r.canonicalize();
        }
        r
    }

    #[test]
    fn canonical_reports_are_reproducible() {
        assert_eq!(sample(true).render(), sample(true).render());
        let text = sample(true).render();
        assert!(!text.contains("timings_ms"));
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn timed_reports_keep_their_timings() {
        let text = sample(false).render();
        assert!(text.contains("timings_ms"));
        assert!(text.contains("oracle"));
    }

    #[test]
    fn hashes_pin_content() {
        // SHA-256 of the empty string, a fixed point of the format.
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
        let mut a = sample(true);
        let mut b = sample(true);
        b.input("h", "hamming7.txt", b"different");
        a.canonicalize();
        b.canonicalize();
        assert_ne!(a.render(), b.render());
    }

    #[test]
    fn documents_round_trip() {
        let r = sample(false);
        let back: Report = serde_json::from_str(&r.render()).unwrap();
        assert_eq!(back.version, REPORT_VERSION);
        assert_eq!(back.command, "distance");
        assert_eq!(back.inputs["h"].path, "hamming7.txt");
        assert_eq!(back.results["d"], serde_json::json!(3));
    }
}
