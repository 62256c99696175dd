//! Brute-force and randomized verification at desk scale: exhaustive
//! censuses of maximal intersecting families, exhaustive minimal
//! covering-pair searches, and randomized cross-intersecting checks, each
//! reporting a machine-readable verdict.

mod clique;
mod sample;
mod tau2;
mod verify;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::family::Family;

pub use clique::{
    collect_maximal_intersecting, enumerate_maximal_intersecting, EnumOutcome, PivotRule,
};
pub use sample::random_intersecting;
pub use tau2::enumerate_minimal_tau2;
pub use verify::{
    verify_cor5, verify_cross, verify_ekr, verify_hk, verify_lemma7, verify_thm1,
    verify_thm4_part1, verify_thm4_part2, CrossParams, EkrVerifier, HkVerifier, Thm1Verifier,
    Thm4Part2Verifier,
};

/// Caps for an enumeration run. Exhausting any cap is reported as an
/// incomplete run, never as silent truncation. The seed only matters for
/// sampling modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_families: Option<u64>,
    pub max_nodes: Option<u64>,
    pub max_millis: Option<u64>,
    pub seed: u64,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            max_families: None,
            max_nodes: None,
            max_millis: None,
            seed: 0,
        }
    }
}

impl EnumBudget {
    /// The acceptance-scale default: 10^7 search nodes, ten minutes.
    pub fn desk_scale() -> Self {
        EnumBudget {
            max_families: None,
            max_nodes: Some(10_000_000),
            max_millis: Some(600_000),
            seed: 0,
        }
    }
}

/// What an enumeration actually did. Wall-clock time is deliberately not
/// recorded here so equal runs serialize identically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BudgetUsage {
    pub families: u64,
    pub nodes: u64,
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub capped_by: Option<String>,
}

impl BudgetUsage {
    pub fn complete_with(families: u64, nodes: u64) -> Self {
        BudgetUsage {
            families,
            nodes,
            complete: true,
            capped_by: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    Verified,
    Counterexample,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct EqualityClass {
    /// Label of the reference family the class matched, or "unclassified".
    pub representative: String,
    pub count: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportStats {
    /// Families seen on the input stream.
    pub families_examined: u64,
    /// Families that passed the verifier's hypothesis filter.
    pub families_checked: u64,
    /// Families meeting the bound with equality.
    pub equality_cases: u64,
    pub equality_classes: Vec<EqualityClass>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub extra: Map<String, Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ReportStats {
    fn new() -> Self {
        ReportStats {
            families_examined: 0,
            families_checked: 0,
            equality_cases: 0,
            equality_classes: Vec::new(),
            extra: Map::new(),
            notes: Vec::new(),
        }
    }
}

pub const COUNTEREXAMPLE_CAP: usize = 32;

/// Verdict of one verification run. Serializes deterministically: map keys
/// are sorted and no timestamps are embedded.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: Map<String, Value>,
    pub status: ReportStatus,
    pub counterexamples: Vec<Family>,
    pub stats: ReportStats,
    pub budget: BudgetUsage,
}

impl VerificationReport {
    fn assemble(
        theorem: &str,
        params: Map<String, Value>,
        counterexamples: Vec<Family>,
        mut stats: ReportStats,
        budget: BudgetUsage,
        inconclusive_reason: Option<String>,
    ) -> Self {
        let status = if !counterexamples.is_empty() {
            ReportStatus::Counterexample
        } else if let Some(reason) = inconclusive_reason {
            stats.notes.push(reason);
            ReportStatus::Inconclusive
        } else if budget.complete {
            ReportStatus::Verified
        } else {
            stats.notes.push(format!(
                "enumeration incomplete{}",
                budget
                    .capped_by
                    .as_deref()
                    .map(|c| format!(" (cap: {c})"))
                    .unwrap_or_default()
            ));
            ReportStatus::Inconclusive
        };
        VerificationReport {
            theorem: theorem.to_string(),
            params,
            status,
            counterexamples,
            stats,
            budget,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == ReportStatus::Verified
    }
}

/// Bounded counterexample recorder: the report keeps the first few
/// offenders and a count of the rest.
#[derive(Debug, Clone, Default)]
struct CexBuffer {
    kept: Vec<Family>,
    dropped: u64,
}

impl CexBuffer {
    fn push(&mut self, f: &Family) {
        if self.kept.len() < COUNTEREXAMPLE_CAP {
            self.kept.push(f.clone());
        } else {
            self.dropped += 1;
        }
    }

    fn finish(self, stats: &mut ReportStats) -> Vec<Family> {
        if self.dropped > 0 {
            stats
                .notes
                .push(format!("{} further counterexamples not stored", self.dropped));
        }
        self.kept
    }
}

fn params_map(entries: &[(&str, Value)]) -> Map<String, Value> {
    let mut m = Map::new();
    for (k, v) in entries {
        m.insert((*k).to_string(), v.clone());
    }
    m
}
