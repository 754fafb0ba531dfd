mod common;

use isingvec::lattice::{find_sqrt2e8, preset, IntegralLattice, LatticeVector, Sublattice};
use isingvec::linalg::{hnf, RatMatrix};
use proptest::prelude::*;

#[test]
fn shell_matches_exhaustive_search_including_norm_six() {
    for l in common::small_presets().into_iter().filter(|l| l.rank() <= 4) {
        for m in [2, 4, 6, 8] {
            assert_eq!(l.shell(m), common::exhaustive_shell(&l, m), "{} norm {m}", l.name());
        }
    }
    let odd = common::odd_pairing_lattice();
    for m in [2, 4, 6] {
        assert_eq!(odd.shell(m), common::exhaustive_shell(&odd, m));
    }
}

#[test]
fn e8_shell_sizes_and_pairings() {
    let l = preset("sqrt2E8").unwrap();
    assert!(l.shell(2).is_empty());
    let s = l.shell(4);
    assert_eq!(s.len(), 240);
    for a in &s {
        for b in &s {
            let ip = l.inner(a, b).unwrap();
            assert!([0, 2, -2, 4, -4].contains(&ip));
            if ip.abs() == 4 {
                assert!(a == b || *a == -b);
            }
        }
    }
}

#[test]
fn validation_examples() {
    assert!(IntegralLattice::validate(vec![vec![4]], "a1").is_ok());
    let a2 = IntegralLattice::validate(vec![vec![2, 1], vec![1, 2]], "A2").unwrap();
    assert!(!a2.is_rootless());
    assert!(IntegralLattice::validate(vec![vec![1]], "odd").is_err());
    assert!(preset("sqrt2E8").unwrap().is_sqrt2_even());
    assert!(!common::odd_pairing_lattice().is_sqrt2_even());
}

#[test]
fn canonical_ids() {
    let l = preset("sqrt2E8").unwrap();
    let e = &find_sqrt2e8(&l)[0];
    let all = Sublattice::canonical(&l.shell(4));
    assert_eq!(all.canonical_id(), e.canonical_id());
    let mut rev = e.generators().to_vec();
    rev.reverse();
    assert_eq!(Sublattice::from_generators(rev).canonical_id(), e.canonical_id());
    assert_eq!(Sublattice::canonical(&[LatticeVector(vec![1])]), Sublattice::canonical(&[LatticeVector(vec![-1])]));
    let a18 = preset("sqrt2A1x8").unwrap();
    let id: Vec<LatticeVector> = (0..8).map(|i| LatticeVector((0..8).map(|j| i64::from(i == j)).collect())).collect();
    assert!(!a18.is_isometric_sqrt2e8(&Sublattice::canonical(&id)));
}

#[test]
fn e8_sublattices_in_direct_sum() {
    let l = preset("sqrt2E8_A1").unwrap();
    let found = find_sqrt2e8(&l);
    assert_eq!(found.len(), 1);
    for e in &found {
        assert!(l.is_isometric_sqrt2e8(e));
        let v = e.vectors_of_norm(&l, 4);
        assert_eq!(v.len(), 240);
        let shell = l.shell(4);
        assert!(v.iter().all(|x| shell.binary_search(x).is_ok()));
    }
}

fn scaled_gram(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| 4 * (0..n).map(|k| m[k][i] * m[k][j]).sum::<i64>()).collect()).collect()
}

fn nonsingular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(-2i64..=2, n), n)
        .prop_filter("nonsingular", |m| !RatMatrix::from_i64_rows(m).determinant().is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    // Gram 4·MᵀM is even and rootless for any nonsingular integer M.
    #[test]
    fn shell_agrees_with_oracle_on_random_lattices(m in (1usize..=3).prop_flat_map(nonsingular)) {
        let l = IntegralLattice::validate(scaled_gram(&m), "random").unwrap();
        prop_assert!(l.is_rootless());
        for norm in [4, 8] {
            let s = l.shell(norm);
            prop_assert_eq!(&s, &common::exhaustive_shell(&l, norm));
            for v in &s {
                prop_assert_eq!(l.norm(v), norm);
                prop_assert!(s.binary_search(&-v).is_ok());
            }
        }
    }

    #[test]
    fn hnf_is_basis_independent(m in nonsingular(3), u in nonsingular(3)) {
        let det = RatMatrix::from_i64_rows(&u).determinant();
        prop_assume!(det.abs().is_one());
        let um: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| (0..3).map(|k| u[i][k] * m[k][j]).sum()).collect()).collect();
        prop_assert_eq!(hnf(&m), hnf(&um));
    }
}
