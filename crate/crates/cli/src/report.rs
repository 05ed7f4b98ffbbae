use serde::{Deserialize, Serialize};
use serde_json::Value;

/// JSON envelope written by every verb.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub timing: Timing,
    pub results: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim_check: Option<ClaimCheck>,
}

/// The only part of a report allowed to differ between identical runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timing {
    pub wall_us: u64,
    pub threads: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimCheck {
    pub expected: Value,
    pub observed: Value,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl ClaimCheck {
    pub fn new(expected: Value, observed: Value) -> ClaimCheck {
        let matches = expected == observed;
        ClaimCheck { expected, observed, matches }
    }

    pub fn is_consistent(&self) -> bool {
        self.matches == (self.expected == self.observed)
    }
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report with timing zeroed, for comparing runs.
    pub fn without_timing(&self) -> RunReport {
        RunReport { timing: Timing { wall_us: 0, threads: 0 }, ..self.clone() }
    }
}
