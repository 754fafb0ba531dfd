//! Even positive-definite lattices given by integer Gram matrices.

mod e8;
mod presets;
mod shell;
mod sublattice;

use std::fmt;
use std::ops::{Add, Deref, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Rational};

pub use e8::{e8_cartan, find_sqrt2e8, sqrt2e8_target_gram};
pub use presets::{preset, preset_names, PRESET_NAMES};
pub use sublattice::Sublattice;

/// Integer coordinates of a lattice vector in the fixed lattice basis.
///
/// The derived order is lexicographic on coordinate tuples, which is also a
/// group order on the lattice.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn zero(rank: usize) -> Self {
        LatticeVector(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// First nonzero coordinate is positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
    }

    /// The lexicographically larger of `self` and `-self`.
    pub fn class_rep(&self) -> LatticeVector {
        if self.is_positive() || self.is_zero() {
            self.clone()
        } else {
            -self
        }
    }
}

impl Deref for LatticeVector {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(v: Vec<i64>) -> Self {
        LatticeVector(v)
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|x| -x).collect())
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, o: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, o: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Input schema for lattice files: `{"name": ..., "gram": [[...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub name: String,
    pub gram: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralLattice {
    name: String,
    gram: Vec<Vec<i64>>,
}

impl IntegralLattice {
    /// Checks symmetry, evenness and positive-definiteness.
    pub fn validate(gram: Vec<Vec<i64>>, name: impl Into<String>) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        for i in 0..n {
            for j in i + 1..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| gram[i][i] % 2 != 0) {
            return Err(Error::NotEven(i));
        }
        if let Err(k) = ldl_pivots(&gram) {
            return Err(Error::NotPositiveDefinite(k + 1));
        }
        Ok(IntegralLattice { name: name.into(), gram })
    }

    pub fn from_spec(spec: LatticeSpec) -> Result<Self> {
        Self::validate(spec.gram, spec.name)
    }

    pub fn to_spec(&self) -> LatticeSpec {
        LatticeSpec { name: self.name.clone(), gram: self.gram.clone() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    /// `gram * v`, i.e. the pairings of `v` with each basis vector.
    pub fn pairings(&self, v: &[i64]) -> Vec<i64> {
        self.gram.iter().map(|row| row.iter().zip(v).map(|(g, x)| g * x).sum()).collect()
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        let n = self.rank();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: v.len() });
            }
        }
        Ok(self.inner_unchecked(x, y))
    }

    pub(crate) fn inner_unchecked(&self, x: &[i64], y: &[i64]) -> i64 {
        self.pairings(x).iter().zip(y).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self, x: &[i64]) -> i64 {
        self.inner_unchecked(x, x)
    }

    /// All vectors of norm exactly `m`, sorted lexicographically.
    pub fn shell(&self, m: i64) -> Vec<LatticeVector> {
        shell::shell(self, m)
    }

    pub fn is_rootless(&self) -> bool {
        self.shell(2).is_empty()
    }

    pub fn require_rootless(&self) -> Result<()> {
        if self.is_rootless() {
            Ok(())
        } else {
            Err(Error::HasRoots)
        }
    }

    /// Whether `L/sqrt(2)` is even, i.e. `gram/2` is an even integral Gram matrix.
    pub fn is_sqrt2_even(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| self.gram[i][i] % 4 == 0 && (0..n).all(|j| self.gram[i][j] % 2 == 0))
    }

    pub fn canonical(&self, vectors: &[LatticeVector]) -> Sublattice {
        Sublattice::canonical(vectors)
    }

    /// Gram matrix of the given generator rows.
    pub fn gram_of(&self, rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let p: Vec<Vec<i64>> = rows.iter().map(|r| self.pairings(r)).collect();
        rows.iter().map(|a| p.iter().map(|pb| a.iter().zip(pb).map(|(x, y)| x * y).sum()).collect()).collect()
    }

    /// `U ≅ sqrt(2)E8`: rank 8 and `gram(U)/2` is even unimodular.
    pub fn is_isometric_sqrt2e8(&self, u: &Sublattice) -> bool {
        let basis = u.canonical_id();
        if basis.len() != 8 {
            return false;
        }
        let g = self.gram_of(basis);
        if (0..8).any(|i| g[i][i] % 4 != 0 || (0..8).any(|j| g[i][j] % 2 != 0)) {
            return false;
        }
        let half: Vec<Vec<i64>> = g.iter().map(|r| r.iter().map(|x| x / 2).collect()).collect();
        RatMatrix::from_i64_rows(&half).determinant() == Rational::one()
    }

    /// `U ≅ sqrt(2)A1`: a rank-1 sublattice generated by a norm-4 vector.
    pub fn is_isometric_sqrt2a1(&self, u: &Sublattice) -> bool {
        let basis = u.canonical_id();
        basis.len() == 1 && self.norm(&basis[0]) == 4
    }
}

/// Pivots of the exact symmetric elimination; `Err(k)` if pivot `k` is not positive.
pub(crate) fn ldl_pivots(gram: &[Vec<i64>]) -> std::result::Result<Vec<Rational>, usize> {
    let n = gram.len();
    let mut a = RatMatrix::from_i64_rows(gram);
    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        let p = a[(k, k)].clone();
        if p <= Rational::zero() {
            return Err(k);
        }
        let inv = p.recip();
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] * &inv;
            for j in k..n {
                let t = &f * &a[(k, j)];
                a[(i, j)] -= &t;
            }
        }
        pivots.push(p);
    }
    Ok(pivots)
}
