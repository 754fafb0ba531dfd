//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use isingvec::griess::{GriessAlgebra, GriessElement};
use isingvec::lattice::{preset, IntegralLattice, LatticeVector};
use isingvec::linalg::{RatMatrix, Rational};
use rand::Rng;

/// Per-coordinate bounds `|x_i| <= floor(sqrt(m · (G^{-1})_ii))`.
pub fn box_bounds(l: &IntegralLattice, m: i64) -> Vec<i64> {
    let inv = RatMatrix::from_i64_rows(l.gram()).inverse().expect("positive definite");
    (0..l.rank())
        .map(|i| {
            let r = &inv[(i, i)] * &Rational::from_int(m);
            let mut k = 0i64;
            while Rational::from_int((k + 1) * (k + 1)) <= r {
                k += 1;
            }
            k
        })
        .collect()
}

/// Every integer tuple inside the box, filtered by exact norm.
pub fn exhaustive_shell(l: &IntegralLattice, m: i64) -> Vec<LatticeVector> {
    let bounds = box_bounds(l, m);
    let n = l.rank();
    let g = l.gram();
    let mut x: Vec<i64> = bounds.iter().map(|b| -b).collect();
    let mut out = Vec::new();
    loop {
        let mut norm = 0i64;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                norm += x[i] * g[i][j] * x[j];
            }
        }
        if norm == m {
            out.push(LatticeVector(x.clone()));
        }
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return out;
            }
            if x[k] < bounds[k] {
                x[k] += 1;
                break;
            }
            x[k] = -bounds[k];
            k += 1;
        }
    }
}

/// Presets of rank at most 8.
pub fn small_presets() -> Vec<IntegralLattice> {
    let mut v: Vec<IntegralLattice> = (1..=8).map(|n| preset(&format!("sqrt2A1x{n}")).unwrap()).collect();
    for name in ["sqrt2A1", "sqrt2A2", "sqrt2D4", "sqrt2E8"] {
        v.push(preset(name).unwrap());
    }
    v
}

/// The even rootless test lattice with Gram `[[4,1],[1,4]]`.
pub fn odd_pairing_lattice() -> IntegralLattice {
    IntegralLattice::validate(vec![vec![4, 1], vec![1, 4]], "odd-pairing").unwrap()
}

/// Sparse random element with small rational coefficients.
pub fn random_element<R: Rng>(g: &GriessAlgebra, rng: &mut R, nonzeros: usize) -> GriessElement {
    let mut d = vec![Rational::zero(); g.dim()];
    for _ in 0..nonzeros {
        let k = rng.gen_range(0..g.dim());
        d[k] = Rational::new(rng.gen_range(-6..=6), rng.gen_range(1..=4));
    }
    GriessElement::from_dense(g.basis(), &d)
}
