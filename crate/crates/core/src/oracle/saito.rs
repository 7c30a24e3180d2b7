//! Saito's criterion: `n` members of D(A, m) with degree sum |m| form a basis
//! iff their coefficient determinant is not identically zero.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::arrangement::MultiArrangement;
use super::derivation::DerivationElement;
use super::linalg::determinant;
use super::poly::poly_determinant;

/// Default number of zero evaluations before falling back to the symbolic determinant.
pub const DEFAULT_RETRIES: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct SaitoOutcome<T> {
    pub passed: bool,
    /// Point where the determinant was found nonzero.
    pub point: Option<Vec<T>>,
    pub evaluations: usize,
    pub symbolic: bool,
}

pub fn saito_check<T: Scalar>(
    a: &MultiArrangement<T>,
    gens: &[DerivationElement<T>],
    seed: u64,
    retries: usize,
) -> Result<SaitoOutcome<T>> {
    let n = a.ambient_dim();
    if gens.len() != n {
        return Err(Error::Rejected(format!("{} derivations given, ambient dimension is {n}", gens.len())));
    }
    let degree_sum: u32 = gens.iter().map(|g| g.degree).sum();
    if degree_sum != a.total_multiplicity() {
        return Err(Error::Rejected(format!(
            "degree sum {degree_sum} differs from total multiplicity {}",
            a.total_multiplicity()
        )));
    }
    if let Some(i) = gens.iter().position(|g| g.nvars() != n || !g.is_member(a)) {
        return Err(Error::Rejected(format!("derivation {i} is not in D(A, m)")));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut evaluations = 0;
    while evaluations < retries {
        let point: Vec<T> = (0..n).map(|_| T::from_int(rng.gen_range(-60..=60))).collect();
        if !a.avoids(&point) {
            continue;
        }
        evaluations += 1;
        let m: Vec<Vec<T>> = gens.iter().map(|g| g.components.iter().map(|c| c.eval(&point)).collect()).collect();
        if !determinant(m).is_negligible() {
            return Ok(SaitoOutcome { passed: true, point: Some(point), evaluations, symbolic: false });
        }
    }
    let m: Vec<Vec<_>> = gens.iter().map(|g| g.components.clone()).collect();
    let det = poly_determinant(&m, n);
    Ok(SaitoOutcome { passed: !det.is_zero(), point: None, evaluations, symbolic: true })
}
