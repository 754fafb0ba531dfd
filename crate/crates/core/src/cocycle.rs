//! The bilinear sign cocycle of the twisted group algebra `C{L}`.

use crate::error::{Error, Result};
use crate::lattice::{IntegralLattice, LatticeVector, Sublattice};

/// `ε(a, b) = (-1)^{Σ_ij a_i s_ij b_j}` for a fixed 0/1 exponent table `s`.
///
/// The table is lower-triangular: `s_ij = ⟨b_i,b_j⟩ mod 2` below the diagonal,
/// `⟨b_i,b_i⟩/2 mod 2` on it, zero above. This gives
/// `ε(a,a) = (-1)^{⟨a,a⟩/2}` and `ε(a,b)ε(b,a) = (-1)^{⟨a,b⟩}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleTable {
    exponents: Vec<Vec<u8>>,
}

/// A sign, stored as `+1` or `-1`.
pub type Sign = i8;

impl CocycleTable {
    pub fn build(l: &IntegralLattice) -> Self {
        let g = l.gram();
        let n = l.rank();
        let exponents = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Greater => g[i][j].rem_euclid(2) as u8,
                        std::cmp::Ordering::Equal => (g[i][i] / 2).rem_euclid(2) as u8,
                        std::cmp::Ordering::Less => 0,
                    })
                    .collect()
            })
            .collect();
        CocycleTable { exponents }
    }

    /// Trivial cocycle on a lattice of rank `n`.
    pub fn trivial(n: usize) -> Self {
        CocycleTable { exponents: vec![vec![0; n]; n] }
    }

    pub fn exponents(&self) -> &[Vec<u8>] {
        &self.exponents
    }

    /// Exponent of `ε(a, b)` modulo 2.
    pub fn exponent(&self, a: &[i64], b: &[i64]) -> u8 {
        let mut e = 0i64;
        for (i, &ai) in a.iter().enumerate() {
            if ai & 1 == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj & 1 != 0 && self.exponents[i][j] != 0 {
                    e += 1;
                }
            }
        }
        (e & 1) as u8
    }

    pub fn eps(&self, a: &[i64], b: &[i64]) -> Sign {
        if self.exponent(a, b) == 0 {
            1
        } else {
            -1
        }
    }

    /// The sign function `η` on `E` with `η(α)η(β) = ε(α,β)η(α+β)`.
    ///
    /// Requires `ε` to be symmetric on `E` with `ε(α,α) = 1`, which holds when
    /// all pairings in `E` are even and all norms are divisible by 4.
    pub fn trivializing_eta(&self, l: &IntegralLattice, e: &Sublattice) -> Result<Eta> {
        let basis = e.generators().to_vec();
        let g = l.gram_of(&basis);
        let k = basis.len();
        if (0..k).any(|i| g[i][i] % 4 != 0 || (0..k).any(|j| g[i][j] % 2 != 0)) {
            return Err(Error::NotEvenSublattice);
        }
        let basis_exponents =
            (0..k).map(|i| (0..k).map(|j| self.exponent(&basis[i], &basis[j])).collect()).collect();
        Eta::new(l, basis, basis_exponents)
    }
}

/// Coboundary trivializing `ε` on a sublattice, evaluated through coordinates
/// in a fixed basis `f_1..f_k` of the sublattice:
/// `η(Σ c_i f_i) = Π_{i<j} ε(f_i,f_j)^{c_i c_j} · Π_i ε(f_i,f_i)^{c_i(c_i-1)/2}`.
#[derive(Clone, Debug)]
pub struct Eta {
    basis: Vec<Vec<i64>>,
    basis_exponents: Vec<Vec<u8>>,
    solver: crate::linalg::RatMatrix,
    lattice: IntegralLattice,
}

impl Eta {
    fn new(l: &IntegralLattice, basis: Vec<Vec<i64>>, basis_exponents: Vec<Vec<u8>>) -> Result<Self> {
        let g = crate::linalg::RatMatrix::from_i64_rows(&l.gram_of(&basis));
        let solver = g.inverse().ok_or(Error::NotEvenSublattice)?;
        Ok(Eta { basis, basis_exponents, solver, lattice: l.clone() })
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Coordinates of `v` in the sublattice basis, if `v` lies in the sublattice.
    pub fn coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        use crate::linalg::Rational;
        let rhs: Vec<Rational> = self.basis.iter().map(|f| Rational::from_int(self.lattice.inner_unchecked(f, v))).collect();
        let c = self.solver.mul_vec(&rhs);
        let c: Option<Vec<i64>> = c.iter().map(Rational::to_i64).collect();
        let c = c?;
        let mut back = vec![0i64; v.len()];
        for (ci, f) in c.iter().zip(&self.basis) {
            for (x, y) in back.iter_mut().zip(f) {
                *x += ci * y;
            }
        }
        (back == v).then_some(c)
    }

    /// `η` evaluated on sublattice coordinates.
    pub fn sign_of_coordinates(&self, c: &[i64]) -> Sign {
        let k = c.len();
        let mut e = 0i64;
        for i in 0..k {
            if self.basis_exponents[i][i] != 0 {
                e += c[i] * (c[i] - 1) / 2;
            }
            for j in i + 1..k {
                if self.basis_exponents[i][j] != 0 {
                    e += c[i] * c[j];
                }
            }
        }
        if e.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// `η(v)`; panics if `v` is not in the sublattice.
    pub fn sign(&self, v: &LatticeVector) -> Sign {
        let c = self.coordinates(v).expect("vector outside the sublattice");
        self.sign_of_coordinates(&c)
    }
}
