//! Freeness certificates.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::scalar::Scalar;

use super::arrangement::MultiArrangement;
use super::derivation::{DerivationElement, OracleLimits};
use super::generators::GeneratorSearch;
use super::saito::{saito_check, DEFAULT_RETRIES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CertificateStatus {
    Free,
    NonFree,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    /// Highest degree to examine; `None` means |m|.
    pub budget: Option<u32>,
    pub seed: u64,
    pub retries: usize,
    pub limits: OracleLimits,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { budget: None, seed: 0x5eed, retries: DEFAULT_RETRIES, limits: OracleLimits::default() }
    }
}

#[derive(Debug, Clone)]
pub struct FreenessCertificate<T> {
    pub status: CertificateStatus,
    /// Minimal generators found (a basis when Free).
    pub generators: Vec<DerivationElement<T>>,
    pub generator_degree_table: BTreeMap<u32, usize>,
    /// `(d, dim D(A,m)_d)` for every processed degree.
    pub dimension_table: Vec<(u32, usize)>,
    pub total_multiplicity: u32,
    pub seed: u64,
    pub saito_point: Option<Vec<T>>,
    pub reason: String,
}

impl<T> FreenessCertificate<T> {
    pub fn generator_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.generators.iter().map(|g| g.degree).collect();
        d.sort_unstable();
        d
    }

    /// Exponents when free.
    pub fn exponents(&self) -> Option<Vec<u32>> {
        (self.status == CertificateStatus::Free).then(|| self.generator_degrees())
    }
}

/// Serializable summary of a certificate.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateReport {
    pub status: CertificateStatus,
    pub generator_degrees: Vec<u32>,
    pub dimension_table: BTreeMap<u32, usize>,
    pub total_multiplicity: u32,
    pub seed: u64,
    pub saito_point: Option<Vec<String>>,
    pub reason: String,
}

impl<T: Scalar> From<&FreenessCertificate<T>> for CertificateReport {
    fn from(c: &FreenessCertificate<T>) -> Self {
        CertificateReport {
            status: c.status,
            generator_degrees: c.generator_degrees(),
            dimension_table: c.dimension_table.iter().copied().collect(),
            total_multiplicity: c.total_multiplicity,
            seed: c.seed,
            saito_point: c.saito_point.as_ref().map(|p| p.iter().map(|x| x.to_string()).collect()),
            reason: c.reason.clone(),
        }
    }
}

/// Decides freeness from the minimal generators of D(A, m).
///
/// Free: exactly `n` generators with degree sum |m| passing Saito's
/// criterion. NonFree: more than `n` generators, or a degree sum that must
/// exceed |m| (found degrees plus at least `d + 1` for every generator still
/// missing after degree `d`). Otherwise Inconclusive once the budget is spent.
pub fn freeness_verdict<T: Scalar>(a: &MultiArrangement<T>, opts: &OracleOptions) -> Result<FreenessCertificate<T>> {
    let total = a.total_multiplicity();
    let budget = opts.budget.unwrap_or(total);
    opts.limits.check(a.ambient_dim(), budget)?;
    let n = a.ambient_dim();
    let mut search = GeneratorSearch::new(a);
    let r = search.ess.rank();

    let finish = |search: GeneratorSearch<'_, T>, status, point, reason: String| {
        let table = search.table;
        FreenessCertificate {
            status,
            generator_degree_table: table.degree_table(),
            dimension_table: table.rows.iter().map(|row| (row.degree, row.dimension)).collect(),
            generators: table.generators,
            total_multiplicity: total,
            seed: opts.seed,
            saito_point: point,
            reason,
        }
    };

    for d in 0..=budget {
        search.step();
        let found = search.essential_generators();
        let count = found.len();
        let sum: u32 = found.iter().map(|g| g.degree).sum();
        if count > r {
            let reason = format!("{} minimal generators in rank {n}", count + n - r);
            return Ok(finish(search, CertificateStatus::NonFree, None, reason));
        }
        let missing = (r - count) as u32;
        if sum + missing * (d + 1) > total {
            let reason = format!("generator degrees through {d} force a sum above |m| = {total}");
            return Ok(finish(search, CertificateStatus::NonFree, None, reason));
        }
        if count == r && sum == total {
            let outcome = saito_check(a, &search.table.generators, opts.seed, opts.retries)?;
            if outcome.passed {
                let reason = if outcome.symbolic { "symbolic determinant nonzero" } else { "determinant nonzero at point" };
                return Ok(finish(search, CertificateStatus::Free, outcome.point, reason.to_string()));
            }
        }
    }
    let reason = format!("undecided within degree budget {budget}");
    Ok(finish(search, CertificateStatus::Inconclusive, None, reason))
}
