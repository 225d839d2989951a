use serde::{Deserialize, Serialize};

use crate::silting::CatalogScope;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    Iff,
    Implies,
    Equal,
}

/// One evaluated side of a claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Side {
    Bool(bool),
    Count(usize),
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Bool(b) => write!(f, "{b}"),
            Side::Count(n) => write!(f, "{n}"),
        }
    }
}

/// A statement checked on one case, with both of its sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub kind: ClaimKind,
    pub lhs: Side,
    pub rhs: Side,
    pub holds: bool,
}

impl Claim {
    pub fn iff(name: &str, lhs: bool, rhs: bool) -> Self {
        Claim {
            name: name.to_string(),
            kind: ClaimKind::Iff,
            lhs: Side::Bool(lhs),
            rhs: Side::Bool(rhs),
            holds: lhs == rhs,
        }
    }

    pub fn implies(name: &str, lhs: bool, rhs: bool) -> Self {
        Claim {
            name: name.to_string(),
            kind: ClaimKind::Implies,
            lhs: Side::Bool(lhs),
            rhs: Side::Bool(rhs),
            holds: !lhs || rhs,
        }
    }

    pub fn equal(name: &str, lhs: usize, rhs: usize) -> Self {
        Claim {
            name: name.to_string(),
            kind: ClaimKind::Equal,
            lhs: Side::Count(lhs),
            rhs: Side::Count(rhs),
            holds: lhs == rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum CaseStatus {
    Checked,
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub index: usize,
    pub subject: String,
    #[serde(flatten)]
    pub status: CaseStatus,
    /// Some side of some claim is true, so the case is not decided by
    /// everything being false.
    pub non_vacuous: bool,
    pub claims: Vec<Claim>,
}

impl CaseRecord {
    pub fn checked(subject: String, claims: Vec<Claim>) -> Self {
        let non_vacuous = claims.iter().any(|c| match (c.lhs, c.rhs) {
            (Side::Bool(a), Side::Bool(b)) => a || b,
            _ => true,
        });
        CaseRecord {
            index: 0,
            subject,
            status: CaseStatus::Checked,
            non_vacuous,
            claims,
        }
    }

    pub fn skipped(subject: String, reason: String, claims: Vec<Claim>) -> Self {
        CaseRecord {
            index: 0,
            subject,
            status: CaseStatus::Skipped { reason },
            non_vacuous: false,
            claims,
        }
    }

    pub fn is_checked(&self) -> bool {
        self.status == CaseStatus::Checked
    }

    pub fn is_counterexample(&self) -> bool {
        self.is_checked() && self.claims.iter().any(|c| !c.holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceInfo {
    pub name: String,
    pub field: u32,
    pub base_dim: usize,
    pub total_dim: usize,
    pub bimodule_dim: usize,
    pub theta_is_zero: bool,
    pub nilpotency: Option<usize>,
    pub catalog_base: Option<CatalogScope>,
    pub catalog_total: Option<CatalogScope>,
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    /// No counterexample, but no non-vacuous case either.
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub theorem: String,
    pub instance: InstanceInfo,
    pub cases: usize,
    pub checked: usize,
    pub skipped: usize,
    pub non_vacuous: usize,
    pub counterexamples: Vec<usize>,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub instance: InstanceInfo,
    pub cases: Vec<CaseRecord>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum Line<'a> {
    Case(&'a CaseRecord),
    Summary(&'a Summary),
}

impl VerificationReport {
    pub fn new(theorem: &str, instance: InstanceInfo, mut cases: Vec<CaseRecord>) -> Self {
        for (i, c) in cases.iter_mut().enumerate() {
            c.index = i;
        }
        VerificationReport {
            theorem: theorem.to_string(),
            instance,
            cases,
        }
    }

    pub fn counterexamples(&self) -> Vec<usize> {
        self.cases
            .iter()
            .filter(|c| c.is_counterexample())
            .map(|c| c.index)
            .collect()
    }

    pub fn non_vacuous(&self) -> usize {
        self.cases.iter().filter(|c| c.is_checked() && c.non_vacuous).count()
    }

    pub fn outcome(&self) -> Outcome {
        if !self.counterexamples().is_empty() {
            Outcome::Fail
        } else if self.non_vacuous() == 0 {
            Outcome::Vacuous
        } else {
            Outcome::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome() == Outcome::Pass
    }

    pub fn summary(&self) -> Summary {
        let checked = self.cases.iter().filter(|c| c.is_checked()).count();
        Summary {
            theorem: self.theorem.clone(),
            instance: self.instance.clone(),
            cases: self.cases.len(),
            checked,
            skipped: self.cases.len() - checked,
            non_vacuous: self.non_vacuous(),
            counterexamples: self.counterexamples(),
            outcome: self.outcome(),
        }
    }

    /// One JSON object per case, then the summary object.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            out.push_str(&serde_json::to_string(&Line::Case(c)).expect("serializable"));
            out.push('\n');
        }
        let summary = self.summary();
        out.push_str(&serde_json::to_string(&Line::Summary(&summary)).expect("serializable"));
        out.push('\n');
        out
    }

    /// A short human-readable rendering of the summary.
    pub fn render_summary(&self) -> String {
        let s = self.summary();
        let mut out = format!(
            "{} on {}: {:?} ({} cases, {} checked, {} skipped, {} non-vacuous, {} counterexample cases)\n",
            s.theorem,
            s.instance.name,
            s.outcome,
            s.cases,
            s.checked,
            s.skipped,
            s.non_vacuous,
            s.counterexamples.len()
        );
        for &i in &s.counterexamples {
            let c = &self.cases[i];
            for claim in c.claims.iter().filter(|c| !c.holds) {
                out.push_str(&format!(
                    "  case {i} [{}]: {} fails: {} vs {}\n",
                    c.subject, claim.name, claim.lhs, claim.rhs
                ));
            }
        }
        out
    }
}
