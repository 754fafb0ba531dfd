mod common;

use isingvec::classify::enumerate_ising;
use isingvec::griess::GriessAlgebra;
use isingvec::ising::{apply, decompose, is_ising, omega_pm, spectral_data};
use isingvec::lattice::preset;
use isingvec::linalg::Rational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn ising_vectors_of_d4_decompose_exactly() {
    let l = preset("sqrt2D4").unwrap();
    let g = GriessAlgebra::new(&l).unwrap();
    for alpha in l.shell(4).iter().take(6) {
        let e = omega_pm(g.basis(), alpha, 1).unwrap();
        let spaces = decompose(&g, &e).unwrap();
        let dims = spectral_data(&g, &e).unwrap().eigen_dims;
        assert_eq!([dims.two, dims.zero, dims.half, dims.sixteenth], spaces.each_ref().map(Vec::len));
        assert_eq!(dims.total(), 22);
    }
}

#[test]
fn tau_is_an_automorphism_for_every_record() {
    let c = enumerate_ising(&common::odd_pairing_lattice()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let b = c.algebra.basis();
    for r in &c.records {
        for _ in 0..20 {
            let x = common::random_element(&c.algebra, &mut rng, 3);
            let y = common::random_element(&c.algebra, &mut rng, 3);
            let lhs = apply(b, &r.tau, &c.algebra.mul(&x, &y));
            let rhs = c.algebra.mul(&apply(b, &r.tau, &x), &apply(b, &r.tau, &y));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn scaled_ising_vectors_fail() {
    let l = preset("sqrt2E8").unwrap();
    let g = GriessAlgebra::new(&l).unwrap();
    let e = omega_pm(g.basis(), &l.shell(4)[7], -1).unwrap();
    assert!(is_ising(&g, &e).passed());
    assert!(!is_ising(&g, &e.scale(&Rational::from_int(2))).passed());
    assert!(!is_ising(&g, &g.basis().square_of(&l.shell(4)[7]).scale(&Rational::new(1, 16))).passed());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_commutative_and_form_invariant(seed in any::<u64>(), name in prop::sample::select(vec!["sqrt2D4", "sqrt2A2", "sqrt2A1x3"])) {
        let g = GriessAlgebra::new(&preset(name).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_element(&g, &mut rng, 4);
        let b = common::random_element(&g, &mut rng, 4);
        let c = common::random_element(&g, &mut rng, 4);
        prop_assert_eq!(g.mul(&a, &b), g.mul(&b, &a));
        prop_assert_eq!(g.form(&g.mul(&a, &b), &c), g.form(&b, &g.mul(&a, &c)));
        prop_assert_eq!(g.form(&a, &b), g.form(&b, &a));
        let ab_c = g.mul(&a.add(&b), &c);
        prop_assert_eq!(ab_c, g.mul(&a, &c).add(&g.mul(&b, &c)));
    }
}
