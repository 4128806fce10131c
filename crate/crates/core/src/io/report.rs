//! Scenario reports: one row per claim, serialized as TSV or JSON.

use std::fmt::{self, Display, Write as _};
use std::time::Duration;

use serde::Serialize;

use crate::error::Result;
use crate::homology::Dimension;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Unknown,
    Fail,
}

impl Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Unknown => "unknown",
        })
    }
}

/// Where the expected value of a claim comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// A value stated in the source literature.
    Stated,
    /// Two independent computations compared against each other.
    CrossCheck,
    /// Immediate from the definitions.
    Elementary,
}

impl Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Stated => "stated",
            Provenance::CrossCheck => "cross-check",
            Provenance::Elementary => "elementary",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
    pub provenance: Provenance,
}

/// Named text output produced alongside a report, such as a DOT graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Artifact {
    pub name: String,
    pub content: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub scenario: String,
    pub claims: Vec<Claim>,
    pub artifacts: Vec<Artifact>,
    /// Not serialized, so reports stay byte-identical across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl Report {
    pub fn new(scenario: &str) -> Report {
        Report { scenario: scenario.into(), claims: Vec::new(), artifacts: Vec::new(), wall_time: Duration::ZERO }
    }

    /// Pass exactly when the rendered values coincide.
    pub fn check(&mut self, claim: impl Into<String>, expected: impl Display, computed: impl Display, provenance: Provenance) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let verdict = if expected == computed { Verdict::Pass } else { Verdict::Fail };
        self.claims.push(Claim { claim: claim.into(), expected, computed, verdict, provenance });
    }

    /// Unknown when the computed dimension is undetermined.
    pub fn check_dim(&mut self, claim: impl Into<String>, expected: Dimension, computed: Dimension, provenance: Provenance) {
        if let Dimension::Unknown(_) = computed {
            self.unknown(claim, expected, computed, provenance);
        } else {
            self.check(claim, expected, computed, provenance);
        }
    }

    /// `Ok` values are compared, errors give an unknown verdict.
    pub fn check_result<T: Display>(
        &mut self,
        claim: impl Into<String>,
        expected: impl Display,
        computed: Result<T>,
        provenance: Provenance,
    ) {
        match computed {
            Ok(v) => self.check(claim, expected, v, provenance),
            Err(e) => self.unknown(claim, expected, format!("error: {e}"), provenance),
        }
    }

    pub fn unknown(&mut self, claim: impl Into<String>, expected: impl Display, computed: impl Display, provenance: Provenance) {
        self.claims.push(Claim {
            claim: claim.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            verdict: Verdict::Unknown,
            provenance,
        });
    }

    pub fn artifact(&mut self, name: &str, content: String) {
        self.artifacts.push(Artifact { name: name.into(), content });
    }

    /// Fail dominates unknown, which dominates pass. An empty report is unknown.
    pub fn verdict(&self) -> Verdict {
        self.claims.iter().map(|c| c.verdict).max().unwrap_or(Verdict::Unknown)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.verdict != Verdict::Pass)
    }

    /// `claim<TAB>expected<TAB>computed<TAB>verdict<TAB>provenance`, after a `# scenario` header.
    pub fn to_tsv(&self) -> String {
        let mut out = format!("# scenario {}\t{}\n", self.scenario, self.verdict());
        for c in &self.claims {
            let cells = [c.claim.as_str(), &c.expected, &c.computed, &c.verdict.to_string(), &c.provenance.to_string()];
            let cells: Vec<String> = cells.iter().map(|s| s.replace(['\t', '\n'], " ")).collect();
            writeln!(out, "{}", cells.join("\t")).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Worst verdict over all reports.
pub fn overall_verdict(reports: &[Report]) -> Verdict {
    reports.iter().map(Report::verdict).max().unwrap_or(Verdict::Unknown)
}

pub fn reports_to_tsv(reports: &[Report]) -> String {
    reports.iter().map(Report::to_tsv).collect()
}

pub fn reports_to_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}
