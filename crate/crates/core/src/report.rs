//! Serializable verification results.

use std::fmt;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Numeric,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Symbolic => "symbolic",
            Mode::Numeric => "numeric",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "symbolic" => Ok(Mode::Symbolic),
            "numeric" => Ok(Mode::Numeric),
            _ => Err(format!("unknown mode `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Status::Pass
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// Numeric-probe settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Probe {
    pub points: usize,
    pub seed: u64,
}

impl Default for Probe {
    fn default() -> Self {
        Probe { points: 5, seed: 1 }
    }
}

/// A sample point, rendered as exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbePoint {
    pub q: String,
    pub a: String,
    pub b: String,
}

impl fmt::Display for ProbePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={} A={} B={}", self.q, self.a, self.b)
    }
}

/// One checked item: a recursion, the matrix block, a conjecture case, or a
/// dimension loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub kind: String,
    pub id: String,
    pub mode: Mode,
    pub status: Status,
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub probes: Vec<ProbePoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fund: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
    pub elapsed_ms: Option<u64>,
}

impl CheckReport {
    pub fn new(kind: &str, id: impl Into<String>, mode: Mode) -> Self {
        CheckReport {
            kind: kind.to_string(),
            id: id.into(),
            mode,
            status: Status::Pass,
            witness: None,
            probes: Vec::new(),
            fund: None,
            mu: None,
            word: None,
            sign: None,
            elapsed_ms: None,
        }
    }

    pub fn fail(mut self, witness: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.witness = Some(witness.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status.passed()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub mode: Mode,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub summary: Summary,
    pub results: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn new(mode: Mode, seed: Option<u64>, results: Vec<CheckReport>) -> Self {
        let passed = results.iter().filter(|r| r.passed()).count();
        VerifyReport {
            schema_version: SCHEMA_VERSION,
            summary: Summary {
                total: results.len(),
                passed,
                failed: results.len() - passed,
                mode,
                seed,
            },
            results,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}
