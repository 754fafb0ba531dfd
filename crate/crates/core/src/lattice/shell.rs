//! Fincke–Pohst enumeration of norm shells.

use super::{IntegralLattice, LatticeVector};
use crate::linalg::{RatMatrix, Rational};

/// Completed-square form of the Gram matrix: `q(x) = Σ_i d_i (x_i + Σ_{j>i} μ_ij x_j)²`.
struct SquareForm {
    diag: Vec<Rational>,
    mu: RatMatrix,
}

fn complete_squares(gram: &[Vec<i64>]) -> SquareForm {
    let n = gram.len();
    let mut q = RatMatrix::from_i64_rows(gram);
    for i in 0..n {
        let inv = q[(i, i)].recip();
        for j in i + 1..n {
            q[(j, i)] = q[(i, j)].clone();
            q[(i, j)] = &q[(i, j)] * &inv;
        }
        for k in i + 1..n {
            for l in k..n {
                let t = &q[(k, i)] * &q[(i, l)];
                q[(k, l)] -= &t;
            }
        }
    }
    SquareForm { diag: (0..n).map(|i| q[(i, i)].clone()).collect(), mu: q }
}

struct Search<'a> {
    lattice: &'a IntegralLattice,
    form: SquareForm,
    target: i64,
    x: Vec<i64>,
    out: Vec<LatticeVector>,
}

impl Search<'_> {
    fn descend(&mut self, i: usize, remaining: Rational) {
        let n = self.x.len();
        let c: Rational = (i + 1..n)
            .filter(|&j| self.x[j] != 0)
            .map(|j| &self.form.mu[(i, j)] * &Rational::from_int(self.x[j]))
            .sum();
        let d = self.form.diag[i].clone();
        let cost = |xi: i64| {
            let t = &Rational::from_int(xi) + &c;
            &d * &(&t * &t)
        };
        // The admissible x_i form an interval around -c; it contains floor(-c)
        // or floor(-c)+1 whenever it contains any integer.
        let start = i64::try_from((-&c).floor()).expect("coordinate bound exceeds i64");
        let mut candidates = Vec::new();
        let mut xi = start;
        loop {
            let k = cost(xi);
            if k > remaining {
                break;
            }
            candidates.push((xi, k));
            xi -= 1;
        }
        xi = start + 1;
        loop {
            let k = cost(xi);
            if k > remaining {
                break;
            }
            candidates.push((xi, k));
            xi += 1;
        }
        for (xi, k) in candidates {
            self.x[i] = xi;
            if i == 0 {
                if self.lattice.norm(&self.x) == self.target {
                    self.out.push(LatticeVector(self.x.clone()));
                }
            } else {
                self.descend(i - 1, &remaining - &k);
            }
        }
        self.x[i] = 0;
    }
}

pub(super) fn shell(lattice: &IntegralLattice, m: i64) -> Vec<LatticeVector> {
    let n = lattice.rank();
    if m <= 0 || n == 0 {
        return Vec::new();
    }
    let mut s = Search { lattice, form: complete_squares(lattice.gram()), target: m, x: vec![0; n], out: Vec::new() };
    s.descend(n - 1, Rational::from_int(m));
    s.out.sort();
    s.out
}
