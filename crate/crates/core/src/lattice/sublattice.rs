use std::cmp::Ordering;

use serde::Serialize;

use super::{IntegralLattice, LatticeVector};
use crate::linalg::{hnf, hnf_contains};

/// A sublattice of `L`, identified by the Hermite normal form of its generators.
#[derive(Clone, Debug, Serialize)]
pub struct Sublattice {
    generators: Vec<Vec<i64>>,
    canonical_id: Vec<Vec<i64>>,
}

impl Sublattice {
    pub fn from_generators(generators: Vec<Vec<i64>>) -> Self {
        assert!(!generators.is_empty(), "a sublattice needs at least one generator");
        let canonical_id = hnf(&generators);
        Sublattice { generators, canonical_id }
    }

    pub fn canonical(vectors: &[LatticeVector]) -> Self {
        Self::from_generators(vectors.iter().map(|v| v.0.clone()).collect())
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// HNF basis; equal for any two generating sets of the same sublattice.
    pub fn canonical_id(&self) -> &[Vec<i64>] {
        &self.canonical_id
    }

    pub fn rank(&self) -> usize {
        self.canonical_id.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        hnf_contains(&self.canonical_id, v)
    }

    /// Compact textual id, rows separated by `;`.
    pub fn id_string(&self) -> String {
        self.canonical_id
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Vectors of norm `m` in this sublattice, in ambient coordinates, sorted.
    pub fn vectors_of_norm(&self, ambient: &IntegralLattice, m: i64) -> Vec<LatticeVector> {
        let gram = ambient.gram_of(&self.canonical_id);
        let inner = IntegralLattice::validate(gram, "sublattice").expect("sublattice Gram of a positive-definite lattice");
        let mut out: Vec<LatticeVector> = inner
            .shell(m)
            .into_iter()
            .map(|c| {
                let mut v = vec![0i64; ambient.rank()];
                for (ci, row) in c.iter().zip(&self.canonical_id) {
                    for (x, r) in v.iter_mut().zip(row) {
                        *x += ci * r;
                    }
                }
                LatticeVector(v)
            })
            .collect();
        out.sort();
        out
    }
}

impl PartialEq for Sublattice {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_id == other.canonical_id
    }
}

impl Eq for Sublattice {}

impl PartialOrd for Sublattice {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Sublattice {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_id.cmp(&other.canonical_id)
    }
}
