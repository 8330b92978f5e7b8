//! Per-trial records and suite reports.

use crate::error::Result;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

pub const REPORT_SCHEMA: &str = "rball.suite-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    Generic,
    SimplexCentered,
    AntipodalPair,
    Covering,
    Spherical,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub dim: usize,
    pub count: usize,
    pub r0: f64,
    pub r: f64,
    pub seed: u64,
    pub kind: InstanceKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// One side of an inequality, with a standard error when stochastic.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Side {
    pub value: f64,
    pub stderr: f64,
}

impl Side {
    pub fn exact(value: f64) -> Self {
        Side { value, stderr: 0.0 }
    }
    pub fn noisy(value: f64, stderr: f64) -> Self {
        Side { value, stderr }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteRecord {
    pub trial: usize,
    pub instance: InstanceSpec,
    pub lhs: Side,
    pub rhs: Side,
    /// `rhs − lhs`; nonnegative when the inequality holds.
    pub margin: f64,
    /// Standard error of the margin (0 for exact comparisons).
    pub margin_stderr: f64,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Vec<f64>>,
    /// Per-step values, e.g. the margin trajectory of a search.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub series: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SuiteRecord {
    pub fn new(instance: InstanceSpec, lhs: Side, rhs: Side, margin_stderr: f64, verdict: Verdict) -> Self {
        SuiteRecord {
            trial: 0,
            instance,
            lhs,
            rhs,
            margin: rhs.value - lhs.value,
            margin_stderr,
            verdict,
            details: BTreeMap::new(),
            witnesses: Vec::new(),
            series: Vec::new(),
            note: None,
        }
    }

    pub fn detail(mut self, key: &str, value: f64) -> Self {
        self.details.insert(key.to_string(), value);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Exact comparison: pass iff `rhs − lhs ≥ −tol`.
pub fn exact_verdict(lhs: f64, rhs: f64, tol: f64) -> Verdict {
    if rhs - lhs >= -tol {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// Noisy comparison: pass if the margin clears the band, fail candidate if it
/// is below minus the band, inconclusive otherwise.
pub fn noisy_verdict(margin: f64, stderr: f64, sigmas: f64, floor: f64) -> Verdict {
    let band = sigmas * stderr + floor;
    if stderr == 0.0 {
        return if margin >= -floor { Verdict::Pass } else { Verdict::Fail };
    }
    if margin > band {
        Verdict::Pass
    } else if margin < -band {
        Verdict::Fail
    } else {
        Verdict::Inconclusive
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub trials: usize,
    pub min_margin: f64,
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extra: BTreeMap<String, f64>,
}

impl Summary {
    pub fn of(records: &[SuiteRecord]) -> Self {
        let count = |v| records.iter().filter(|r| r.verdict == v).count();
        Summary {
            trials: records.len(),
            min_margin: records.iter().map(|r| r.margin).fold(f64::INFINITY, f64::min),
            pass: count(Verdict::Pass),
            fail: count(Verdict::Fail),
            inconclusive: count(Verdict::Inconclusive),
            extra: BTreeMap::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub runtime_seconds: f64,
    pub finished_unix: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: String,
    pub suite: String,
    pub tool_version: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub seed: u64,
    pub records: Vec<SuiteRecord>,
    pub summary: Summary,
    pub timing: Option<Timing>,
}

impl SuiteReport {
    pub fn new(
        suite: &str,
        parameters: BTreeMap<String, serde_json::Value>,
        seed: u64,
        mut records: Vec<SuiteRecord>,
    ) -> Self {
        for (i, r) in records.iter_mut().enumerate() {
            r.trial = i;
        }
        let summary = Summary::of(&records);
        SuiteReport {
            schema: REPORT_SCHEMA.to_string(),
            suite: suite.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            parameters,
            seed,
            records,
            summary,
            timing: None,
        }
    }

    /// Records the wall-clock runtime and completion time.
    pub fn stamp(&mut self, runtime_seconds: f64) {
        let finished_unix = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        self.timing = Some(Timing {
            runtime_seconds,
            finished_unix,
        });
    }

    /// JSON with the wall-clock block removed, for reproducibility comparisons.
    pub fn canonical_json(&self) -> Result<String> {
        let mut copy = self.clone();
        copy.timing = None;
        Ok(serde_json::to_string_pretty(&copy)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["trial", "lhs", "rhs", "margin", "verdict"])?;
        for r in &self.records {
            w.write_record([
                r.trial.to_string(),
                format!("{:e}", r.lhs.value),
                format!("{:e}", r.rhs.value),
                format!("{:e}", r.margin),
                r.verdict.as_str().to_string(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| crate::error::Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        write_atomic(path, self.to_json()?.as_bytes())
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        write_atomic(path, self.to_csv()?.as_bytes())
    }
}

/// Writes via a sibling temporary file and a rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}
