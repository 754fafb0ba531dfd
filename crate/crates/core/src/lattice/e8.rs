//! Search for sublattices isometric to √2E8.
//!
//! Every such sublattice `E` has exactly one ordered basis that (a) consists of
//! lexicographically positive vectors and (b) has Gram matrix `2·C(E8)` in the
//! fixed vertex order below: the simple roots of the positive system cut out by
//! the lexicographic order, labelled along the (automorphism-free) E8 diagram.
//! Any basis satisfying (a) and (b) is that simple system, because its
//! non-negative span is a positive system contained in the lexicographically
//! positive roots and both have 120 elements. Restricting the backtracking to
//! class representatives therefore reaches each sublattice once, and the
//! partial searches are bounded by the number of parabolic subsystems.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::{IntegralLattice, LatticeVector, Sublattice};
use crate::linalg::{RatMatrix, Rational};

/// E8 Cartan matrix with vertices ordered so every prefix is a connected
/// subdiagram: A1, A2, A3, A4, D5, E6, E7, E8.
pub fn e8_cartan() -> Vec<Vec<i64>> {
    let edges = [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (5, 6), (6, 7)];
    let mut c = vec![vec![0i64; 8]; 8];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges {
        c[a][b] = -1;
        c[b][a] = -1;
    }
    c
}

/// `2·C(E8)`, checked once: determinant 256, rootless, 240 norm-4 vectors.
pub fn sqrt2e8_target_gram() -> &'static [Vec<i64>] {
    static TARGET: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    TARGET.get_or_init(|| {
        let g: Vec<Vec<i64>> = e8_cartan().iter().map(|r| r.iter().map(|x| 2 * x).collect()).collect();
        assert_eq!(RatMatrix::from_i64_rows(&g).determinant(), Rational::from_int(256), "E8 target determinant");
        let l = IntegralLattice::validate(g.clone(), "sqrt2E8 target").expect("E8 target Gram is positive definite");
        assert!(l.is_rootless(), "E8 target has roots");
        assert_eq!(l.shell(4).len(), 240, "E8 target minimal vectors");
        g
    })
}

struct Search<'a> {
    reps: &'a [LatticeVector],
    /// Pairwise inner products of the representatives (|⟨a,b⟩| ≤ 4 for norm-4 vectors).
    ip: &'a [i8],
    target: &'a [Vec<i64>],
}

impl Search<'_> {
    fn ip(&self, a: usize, b: usize) -> i64 {
        self.ip[a * self.reps.len() + b] as i64
    }

    fn extend(&self, chosen: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
        let k = chosen.len();
        if k == 8 {
            found.push(chosen.clone());
            return;
        }
        for cand in 0..self.reps.len() {
            if chosen.iter().enumerate().all(|(t, &c)| self.ip(c, cand) == self.target[t][k]) {
                chosen.push(cand);
                self.extend(chosen, found);
                chosen.pop();
            }
        }
    }
}

/// All sublattices of `l` isometric to √2E8, sorted by canonical id.
///
/// Each result's generators are its basis with Gram `2·C(E8)` (see
/// [`e8_cartan`] for the vertex order). Runs on the current rayon pool; the
/// output does not depend on the pool size.
pub fn find_sqrt2e8(l: &IntegralLattice) -> Vec<Sublattice> {
    let target = sqrt2e8_target_gram();
    if l.rank() < 8 {
        return Vec::new();
    }
    let reps: Vec<LatticeVector> = l.shell(4).into_iter().filter(LatticeVector::is_positive).collect();
    let m = reps.len();
    let pairings: Vec<Vec<i64>> = reps.iter().map(|r| l.pairings(r)).collect();
    let mut ip = vec![0i8; m * m];
    for a in 0..m {
        for b in 0..m {
            let v: i64 = pairings[a].iter().zip(&reps[b].0).map(|(x, y)| x * y).sum();
            ip[a * m + b] = i8::try_from(v).expect("norm-4 pairings are bounded by 4");
        }
    }
    let search = Search { reps: &reps, ip: &ip, target };
    let bases: Vec<Vec<usize>> = (0..m)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut found = Vec::new();
            search.extend(&mut vec![first], &mut found);
            found
        })
        .collect();
    let mut unique: BTreeMap<Vec<Vec<i64>>, Sublattice> = BTreeMap::new();
    for basis in bases {
        let rows: Vec<Vec<i64>> = basis.iter().map(|&i| reps[i].0.clone()).collect();
        let sub = Sublattice::from_generators(rows);
        unique.entry(sub.canonical_id().to_vec()).or_insert(sub);
    }
    unique.into_values().collect()
}
