//! Run provenance and report persistence. Every report file is an
//! envelope {"manifest": …, "report": …}; the manifest carries the
//! wall-clock and file-digest context while the report body stays
//! deterministic for a given seed and budget.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use chrono::{SecondsFormat, Utc};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub tool_version: &'static str,
    pub command_line: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub started_at: String,
    pub finished_at: String,
    /// sha256 of every input file read, keyed by path as given.
    pub input_digests: BTreeMap<String, String>,
    /// sha256 of the serialized report body.
    pub report_digest: String,
}

pub struct ManifestBuilder {
    command_line: Vec<String>,
    seed: Option<u64>,
    started_at: String,
    input_digests: BTreeMap<String, String>,
}

fn now() -> String {
    Utc::now().to_rfc3339_opts(SecondsFormat::Millis, true)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

impl ManifestBuilder {
    pub fn start() -> Self {
        ManifestBuilder {
            command_line: std::env::args().collect(),
            seed: None,
            started_at: now(),
            input_digests: BTreeMap::new(),
        }
    }

    pub fn seed(&mut self, seed: u64) {
        self.seed = Some(seed);
    }

    /// Reads an input file, recording its digest.
    pub fn read_input(&mut self, path: &str) -> Result<Vec<u8>, String> {
        let bytes = fs::read(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        self.input_digests
            .insert(path.to_string(), sha256_hex(&bytes));
        Ok(bytes)
    }

    fn finish(self, report_digest: String) -> RunManifest {
        RunManifest {
            tool_version: env!("CARGO_PKG_VERSION"),
            command_line: self.command_line,
            seed: self.seed,
            started_at: self.started_at,
            finished_at: now(),
            input_digests: self.input_digests,
            report_digest,
        }
    }

    /// Wraps the report body in its envelope and writes it to `path`, or
    /// to stdout when no path is given.
    pub fn write_report(self, report: &Value, path: Option<&str>) -> Result<(), String> {
        let body = serde_json::to_vec(report).map_err(|e| e.to_string())?;
        let manifest = self.finish(sha256_hex(&body));
        let envelope = serde_json::json!({
            "manifest": manifest,
            "report": report,
        });
        let mut text = serde_json::to_vec(&envelope).map_err(|e| e.to_string())?;
        text.push(b'\n');
        write_bytes(&text, path)
    }
}

pub fn write_bytes(bytes: &[u8], path: Option<&str>) -> Result<(), String> {
    match path {
        Some(p) => {
            if let Some(dir) = Path::new(p).parent() {
                if !dir.as_os_str().is_empty() {
                    fs::create_dir_all(dir).map_err(|e| format!("cannot create {dir:?}: {e}"))?;
                }
            }
            fs::write(p, bytes).map_err(|e| format!("cannot write {p}: {e}"))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes).and_then(|_| out.flush()).map_err(|e| e.to_string())
        }
    }
}

/// One CSV row per theorem/params pair, derived from the JSON reports.
pub fn write_csv(reports: &[&setfam_core::oracles::VerificationReport], path: &str) -> Result<(), String> {
    let mut text = String::from(
        "theorem,params,status,families_examined,families_checked,equality_cases,counterexamples\n",
    );
    for r in reports {
        let params = serde_json::to_string(&r.params).map_err(|e| e.to_string())?;
        let status = serde_json::to_value(&r.status)
            .map_err(|e| e.to_string())?
            .as_str()
            .unwrap_or("unknown")
            .to_string();
        text.push_str(&format!(
            "{},\"{}\",{},{},{},{},{}\n",
            r.theorem,
            params.replace('"', "\"\""),
            status,
            r.stats.families_examined,
            r.stats.families_checked,
            r.stats.equality_cases,
            r.counterexamples.len(),
        ));
    }
    write_bytes(text.as_bytes(), Some(path))
}
