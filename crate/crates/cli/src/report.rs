//! JSON report schema. Field order follows struct order and every
//! collection is emitted in a deterministic sequence, so identical inputs
//! produce byte-identical reports; re-serializing a parsed report is also
//! byte-identical.

use serde::{Deserialize, Serialize};

use idealforge_core::classify::PredicateVerdict;
use idealforge_core::theorem::{SweepStats, TheoremVerdict};
use idealforge_core::Ring;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub command: String,
    pub instances: Vec<String>,
    /// Recoverable recipe problems (order caps, unusable recipes) from
    /// corpus generation.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub diagnostics: Vec<String>,
    pub verdicts: Vec<VerdictEntry>,
    pub summary: Summary,
    /// Populated only when timing output is requested; omitted otherwise so
    /// reports stay byte-stable across runs.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictEntry {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub theorem: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub predicate: Option<String>,
    pub instance: String,
    pub holds: bool,
    pub vacuous: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub elements: Vec<usize>,
    pub labels: Vec<String>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub vacuous: usize,
    pub fail: usize,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub theorems: Vec<TheoremSummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremSummary {
    pub id: String,
    pub pass: usize,
    pub vacuous: usize,
    pub fail: usize,
}

impl Report {
    pub fn new(command: String) -> Report {
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            instances: Vec::new(),
            diagnostics: Vec::new(),
            verdicts: Vec::new(),
            summary: Summary {
                total: 0,
                pass: 0,
                vacuous: 0,
                fail: 0,
                theorems: Vec::new(),
            },
            elapsed_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn recount(&mut self) {
        self.summary.total = self.verdicts.len()
            + self
                .summary
                .theorems
                .iter()
                .map(|t| t.pass + t.vacuous + t.fail)
                .sum::<usize>();
        self.summary.pass = self.verdicts.iter().filter(|v| v.holds && !v.vacuous).count()
            + self.summary.theorems.iter().map(|t| t.pass).sum::<usize>();
        self.summary.vacuous = self.verdicts.iter().filter(|v| v.holds && v.vacuous).count()
            + self.summary.theorems.iter().map(|t| t.vacuous).sum::<usize>();
        self.summary.fail = self.verdicts.iter().filter(|v| !v.holds).count()
            + self.summary.theorems.iter().map(|t| t.fail).sum::<usize>();
    }
}

pub fn predicate_entry(ring: &Ring, instance: String, v: &PredicateVerdict) -> VerdictEntry {
    VerdictEntry {
        theorem: None,
        predicate: Some(v.predicate.name().to_string()),
        instance,
        holds: v.holds,
        vacuous: false,
        witness: v.witness.as_ref().map(|elems| WitnessEntry {
            elements: elems.iter().map(|e| e.index()).collect(),
            labels: elems.iter().map(|&e| ring.name(e).to_string()).collect(),
            note: format!("falsifies {}", v.predicate.name()),
        }),
    }
}

pub fn theorem_entry(v: &TheoremVerdict) -> VerdictEntry {
    VerdictEntry {
        theorem: Some(v.theorem.name().to_string()),
        predicate: None,
        instance: v.instance.clone(),
        holds: v.holds,
        vacuous: v.vacuous,
        witness: v.witness.as_ref().map(|w| WitnessEntry {
            elements: w.elements.iter().map(|e| e.index()).collect(),
            labels: w.elements.iter().map(|e| e.to_string()).collect(),
            note: format!("{}: {}", w.subcheck, w.detail),
        }),
    }
}

pub fn stats_entry(s: &SweepStats) -> TheoremSummary {
    TheoremSummary {
        id: s.theorem.name().to_string(),
        pass: s.pass,
        vacuous: s.vacuous,
        fail: s.fail,
    }
}
