//! Verification harness: catalogs, shipped instances and per-statement
//! checks producing machine-readable reports.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cleft::CleftInstance;
use crate::error::{Error, Result};
use crate::silting::Catalog;

pub mod catalog;
pub mod instances;
pub mod report;
pub mod verify;

pub use catalog::{
    basic_sums, catalog_bruteforce, catalog_type_a, enumerate_support_tau_tilting, interval_catalog,
    support_tau_tilting_silting_mismatches, DEFAULT_CATALOG_BOUND, DEFAULT_ENUMERATION_BUDGET,
};
pub use instances::{shipped_instance, shipped_instances, SHIPPED, TOR_OBSTRUCTION};
pub use report::{CaseRecord, CaseStatus, Claim, ClaimKind, InstanceInfo, Outcome, Side, Summary, VerificationReport};
pub use verify::{
    instance_info, verify_cor_4_4, verify_cor_4_6, verify_cor_4_7, verify_lemma_suite, verify_thm_3_3, verify_thm_3_5,
    verify_thm_3_8, VerifyOptions,
};

/// The statements the harness can check, by their command-line names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Statement {
    #[serde(rename = "thm3.3")]
    SiltingLift,
    #[serde(rename = "thm3.5")]
    TiltingLift,
    #[serde(rename = "thm3.8")]
    SiltingDescent,
    #[serde(rename = "cor4.4")]
    TensorRingLift,
    #[serde(rename = "cor4.6")]
    TauTiltingLift,
    #[serde(rename = "cor4.7")]
    TauTiltingDescent,
    #[serde(rename = "lemmas")]
    Lemmas,
}

impl Statement {
    pub const ALL: [Statement; 7] = [
        Statement::SiltingLift,
        Statement::TiltingLift,
        Statement::SiltingDescent,
        Statement::TensorRingLift,
        Statement::TauTiltingLift,
        Statement::TauTiltingDescent,
        Statement::Lemmas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statement::SiltingLift => "thm3.3",
            Statement::TiltingLift => "thm3.5",
            Statement::SiltingDescent => "thm3.8",
            Statement::TensorRingLift => "cor4.4",
            Statement::TauTiltingLift => "cor4.6",
            Statement::TauTiltingDescent => "cor4.7",
            Statement::Lemmas => "lemmas",
        }
    }

    /// Whether the check needs a catalog over the total algebra.
    pub fn needs_total_catalog(self) -> bool {
        !matches!(self, Statement::TiltingLift | Statement::TauTiltingLift)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statement::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown statement {s:?}")))
    }
}

/// Dispatch to the matching `verify_*` procedure. `n` is the tilting degree
/// where one is needed.
pub fn verify(
    statement: Statement,
    c: &CleftInstance,
    cat_r: &Catalog,
    cat_t: Option<&Catalog>,
    n: usize,
    o: &VerifyOptions,
) -> Result<VerificationReport> {
    match statement {
        Statement::SiltingLift => verify_thm_3_3(c, cat_r, cat_t, o),
        Statement::TiltingLift => verify_thm_3_5(c, n, cat_r, o),
        Statement::SiltingDescent => verify_thm_3_8(c, cat_r, cat_t, o),
        Statement::TensorRingLift => verify_cor_4_4(c, n, cat_r, cat_t, o),
        Statement::TauTiltingLift => verify_cor_4_6(c, cat_r, o),
        Statement::TauTiltingDescent => verify_cor_4_7(c, cat_r, cat_t, o),
        Statement::Lemmas => verify_lemma_suite(c, cat_r, cat_t, o),
    }
}

/// Brute-force catalogs over the base and total algebras of an instance.
pub fn instance_catalogs(
    c: &CleftInstance,
    bound: usize,
    seed: u64,
    budget: u128,
    total: bool,
) -> Result<(Catalog, Option<Catalog>)> {
    let cat_r = catalog_bruteforce(&c.base, bound, seed, budget)?;
    let cat_t = if total {
        Some(catalog_bruteforce(&c.total, bound, seed, budget)?)
    } else {
        None
    };
    Ok((cat_r, cat_t))
}
