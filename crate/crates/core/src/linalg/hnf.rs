//! Row-style Hermite normal form over the integers.

fn to_i64(x: i128) -> i64 {
    i64::try_from(x).expect("HNF entry exceeds i64")
}

/// Hermite normal form of the row lattice of `m`.
///
/// The result is in echelon form with zero rows removed: each pivot is
/// positive, and entries above a pivot lie in `[0, pivot)`. Two matrices have
/// the same HNF iff their rows span the same lattice.
pub fn hnf(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "ragged rows");
            r.iter().map(|&x| x as i128).collect()
        })
        .collect();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        loop {
            let best = (r..a.len()).filter(|&i| a[i][c] != 0).min_by_key(|&i| a[i][c].unsigned_abs());
            let Some(p) = best else { break };
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][c] != 0 {
                    let q = a[i][c].div_euclid(a[r][c]);
                    for j in c..cols {
                        a[i][j] = a[i][j].checked_sub(q.checked_mul(a[r][j]).expect("HNF overflow")).expect("HNF overflow");
                    }
                    if a[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[r][c] == 0 {
            continue;
        }
        if a[r][c] < 0 {
            for x in a[r].iter_mut() {
                *x = -*x;
            }
        }
        let piv = a[r][c];
        for i in 0..r {
            let q = a[i][c].div_euclid(piv);
            if q != 0 {
                for j in c..cols {
                    a[i][j] -= q * a[r][j];
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    a.into_iter().map(|row| row.into_iter().map(to_i64).collect()).collect()
}

/// Whether `v` lies in the row lattice of a matrix already in HNF.
pub fn hnf_contains(h: &[Vec<i64>], v: &[i64]) -> bool {
    let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    for row in h {
        let Some(p) = row.iter().position(|&x| x != 0) else { continue };
        let piv = row[p] as i128;
        if v[p] % piv != 0 {
            return false;
        }
        let q = v[p] / piv;
        if q != 0 {
            for (x, &y) in v.iter_mut().zip(row) {
                *x -= q * y as i128;
            }
        }
    }
    v.iter().all(|&x| x == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Determinant by cofactor expansion along the first row.
    fn cofactor_det(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 1 {
            return m[0][0] as i128;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] as i128 * cofactor_det(&minor)
            })
            .sum()
    }

    fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        a.iter().map(|r| (0..b[0].len()).map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum()).collect()).collect()
    }

    fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
        let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for _ in 0..3 * n {
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if i == j {
                u.swap(i, (i + 1) % n);
                continue;
            }
            let k = rng.gen_range(-2..=2);
            for c in 0..n {
                u[i][c] += k * u[j][c];
            }
        }
        u
    }

    #[test]
    fn identity_and_swap() {
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(hnf(&id), id);
        assert_eq!(hnf(&[vec![0, 1], vec![1, 0]]), id);
    }

    #[test]
    fn drops_dependent_rows() {
        let h = hnf(&[vec![2, 4], vec![1, 2], vec![3, 6]]);
        assert_eq!(h, vec![vec![1, 2]]);
        assert!(hnf_contains(&h, &[-5, -10]));
        assert!(!hnf_contains(&h, &[1, 3]));
    }

    #[test]
    fn preserves_abs_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 50 {
            let m: Vec<Vec<i64>> = (0..4).map(|_| (0..4).map(|_| rng.gen_range(-9..=9)).collect()).collect();
            let d = cofactor_det(&m);
            if d == 0 {
                continue;
            }
            let h = hnf(&m);
            assert_eq!(h.len(), 4);
            assert_eq!(cofactor_det(&h).abs(), d.abs());
            // upper triangular with reduced entries above pivots
            for i in 0..4 {
                assert!(h[i][i] > 0);
                for k in 0..i {
                    assert_eq!(h[i][k], 0);
                    assert!(h[k][i] >= 0 && h[k][i] < h[i][i]);
                }
            }
            checked += 1;
        }
    }

    proptest! {
        #[test]
        fn invariant_under_unimodular_left_action(seed in any::<u64>(), entries in proptest::collection::vec(-6i64..=6, 15)) {
            let m: Vec<Vec<i64>> = entries.chunks(5).map(<[i64]>::to_vec).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = random_unimodular(&mut rng, 3);
            prop_assert_eq!(cofactor_det(&u).abs(), 1);
            prop_assert_eq!(hnf(&matmul(&u, &m)), hnf(&m));
        }
    }
}
