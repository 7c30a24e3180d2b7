use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::scalar::{parse_rational, Scalar};
use crate::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane<T> {
    pub normal: Vec<T>,
    pub mult: u32,
}

/// A central multiarrangement: hyperplanes `ker α_H` with multiplicities.
/// Multiplicity-zero entries are dropped on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiArrangement<T> {
    ambient_dim: usize,
    hyperplanes: Vec<Hyperplane<T>>,
}

impl<T: Scalar> MultiArrangement<T> {
    pub fn new(ambient_dim: usize, hyperplanes: Vec<Hyperplane<T>>) -> Result<Self> {
        let hyperplanes: Vec<_> = hyperplanes.into_iter().filter(|h| h.mult > 0).collect();
        for h in &hyperplanes {
            if h.normal.len() != ambient_dim {
                return Err(invalid(format!("normal of length {} in dimension {ambient_dim}", h.normal.len())));
            }
            if h.normal.iter().all(Scalar::is_negligible) {
                return Err(invalid("zero normal vector"));
            }
        }
        for (i, a) in hyperplanes.iter().enumerate() {
            for b in &hyperplanes[..i] {
                if proportional(&a.normal, &b.normal) {
                    return Err(invalid("two hyperplanes have proportional normals"));
                }
            }
        }
        Ok(MultiArrangement { ambient_dim, hyperplanes })
    }

    /// Same multiplicity on every normal.
    pub fn simple(ambient_dim: usize, normals: Vec<Vec<T>>, mult: u32) -> Result<Self> {
        Self::new(ambient_dim, normals.into_iter().map(|normal| Hyperplane { normal, mult }).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn hyperplanes(&self) -> &[Hyperplane<T>] {
        &self.hyperplanes
    }

    /// |m|, the total multiplicity.
    pub fn total_multiplicity(&self) -> u32 {
        self.hyperplanes.iter().map(|h| h.mult).sum()
    }

    /// Returns a copy with the multiplicity of hyperplane `idx` replaced.
    pub fn with_multiplicity(&self, idx: usize, mult: u32) -> Self {
        let mut hs = self.hyperplanes.clone();
        hs[idx].mult = mult;
        MultiArrangement::new(self.ambient_dim, hs).expect("same normals")
    }

    /// Whether the point lies off every hyperplane.
    pub fn avoids(&self, point: &[T]) -> bool {
        self.hyperplanes.iter().all(|h| !dot(&h.normal, point).is_negligible())
    }
}

pub(crate) fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn proportional<T: Scalar>(a: &[T], b: &[T]) -> bool {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let minor = a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
            if !minor.is_negligible() {
                return false;
            }
        }
    }
    true
}

/// Arrangement file: `{"dimension": n, "hyperplanes": [{"normal": [..], "multiplicity": m}]}`.
/// Normal entries are integers or strings such as `"-3/2"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementDoc {
    pub dimension: usize,
    pub hyperplanes: Vec<HyperplaneDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplaneDoc {
    pub normal: Vec<serde_json::Value>,
    pub multiplicity: u32,
}

fn entry(v: &serde_json::Value) -> Result<Rational> {
    let parsed = match v {
        serde_json::Value::Number(n) => n.as_i64().map(Rational::from_int),
        serde_json::Value::String(s) => parse_rational(s),
        _ => None,
    };
    parsed.ok_or_else(|| Error::Parse(format!("normal entry {v} is not an integer or p/q string")))
}

impl TryFrom<&ArrangementDoc> for MultiArrangement<Rational> {
    type Error = Error;

    fn try_from(doc: &ArrangementDoc) -> Result<Self> {
        let hs = doc
            .hyperplanes
            .iter()
            .map(|h| Ok(Hyperplane { normal: h.normal.iter().map(entry).collect::<Result<_>>()?, mult: h.multiplicity }))
            .collect::<Result<_>>()?;
        MultiArrangement::new(doc.dimension, hs)
    }
}

pub fn parse_arrangement(text: &str) -> Result<MultiArrangement<Rational>> {
    let doc: ArrangementDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    MultiArrangement::try_from(&doc)
}
