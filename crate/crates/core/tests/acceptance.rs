//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use isingvec::classify::{count_formula, enumerate_ising, Classification};
use isingvec::griess::GriessAlgebra;
use isingvec::ising::{check_l4e_fixed, check_signed_permutation, sign_action, Family};
use isingvec::lattice::{preset, IntegralLattice};
use isingvec::linalg::Rational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Runtime ceiling for the √2A1 classification.
const SQRT2A1_TIME_LIMIT: Duration = Duration::from_secs(1);
/// Runtime ceiling for the √2E8 classification.
const SQRT2E8_TIME_LIMIT: Duration = Duration::from_secs(300);
/// Expected totals for the counting-formula criterion, exact.
const EXPECTED_TOTALS: [(&str, usize); 6] =
    [("sqrt2A1", 2), ("sqrt2A1x2", 4), ("sqrt2A2", 12), ("sqrt2D4", 24), ("sqrt2E8", 496), ("sqrt2E8_A1", 498)];
/// Randomized trials for the product-law suites on √2E8.
const RANDOM_TRIALS: usize = 10_000;
/// Largest `n` for the orthonormal-frame comparison on √2A1^n.
const FRAME_MAX_RANK: usize = 4;
/// Required closure pairs on √2E8.
const E8_CLOSURE_PAIRS: usize = 496 * 496;

struct Gate {
    results: Vec<(String, bool, String)>,
}

impl Gate {
    fn report(&mut self, id: &str, ok: bool, detail: String) {
        println!("{} {id}: {detail}", if ok { "PASS" } else { "FAIL" });
        self.results.push((id.to_string(), ok, detail));
    }
}

struct Enumerated {
    lattice: IntegralLattice,
    classification: Classification,
    elapsed: Duration,
}

fn run(l: IntegralLattice) -> Enumerated {
    let t = Instant::now();
    let classification = enumerate_ising(&l).expect("rootless lattice");
    Enumerated { elapsed: t.elapsed(), lattice: l, classification }
}

fn main() {
    let mut gate = Gate { results: Vec::new() };
    let mut runs: BTreeMap<String, Enumerated> = BTreeMap::new();
    for name in ["sqrt2A1", "sqrt2A1x2", "sqrt2A2", "sqrt2D4", "sqrt2E8", "sqrt2E8_A1"] {
        runs.insert(name.to_string(), run(preset(name).unwrap()));
    }
    runs.insert("odd-pairing".into(), run(common::odd_pairing_lattice()));

    // 1
    let a1 = &runs["sqrt2A1"];
    let n = a1.classification.ising_total();
    gate.report(
        "C1 count on sqrt2A1",
        n == 2 && a1.elapsed < SQRT2A1_TIME_LIMIT,
        format!("{n} Ising vectors (expected 2) in {:.3?} (limit {:?})", a1.elapsed, SQRT2A1_TIME_LIMIT),
    );

    // 2
    let e8 = &runs["sqrt2E8"];
    let c = &e8.classification;
    let pm = c.records.iter().filter(|r| matches!(r.family, Family::OmegaPm { .. })).count();
    let ee = c.records.iter().filter(|r| matches!(r.family, Family::OmegaE8 { .. })).count();
    gate.report(
        "C2 count on sqrt2E8",
        c.ising_total() == 496 && pm == 240 && ee == 256 && c.sublattices.len() == 1 && e8.elapsed < SQRT2E8_TIME_LIMIT,
        format!(
            "{} = {pm} omega_pm + {ee} omega_e8, {} sqrt2E8 sublattice(s) (expected 496 = 240 + 256, 1) in {:.2?} (limit {:?})",
            c.ising_total(),
            c.sublattices.len(),
            e8.elapsed,
            SQRT2E8_TIME_LIMIT
        ),
    );

    // 3
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, expected) in EXPECTED_TOTALS {
        let formula = count_formula(&runs[name].lattice).unwrap();
        let listed = runs[name].classification.ising_total();
        ok &= formula == listed && listed == expected;
        parts.push(format!("{name}: formula {formula}, enumerated {listed}, expected {expected}"));
    }
    gate.report("C3 counting formula on presets", ok, parts.join("; "));

    // 4
    let (mut total, mut bad) = (0, 0);
    for r in runs.values() {
        let dim = r.classification.algebra.dim();
        for rec in &r.classification.records {
            total += 1;
            if !(rec.checks.is_ising && rec.eigen_dims.two == 1 && rec.eigen_dims.total() == dim) {
                bad += 1;
            }
        }
    }
    gate.report("C4 every vector is Ising", bad == 0, format!("{bad} failures over {total} vectors on {} lattices", runs.len()));

    // 5
    let (mut total, mut bad, mut nontrivial) = (0, 0, 0);
    for r in runs.values() {
        let basis = r.classification.algebra.basis();
        for rec in &r.classification.records {
            if let Family::OmegaPm { alpha, .. } = &rec.family {
                total += 1;
                if rec.tau != sign_action(basis, alpha) {
                    bad += 1;
                }
                if !rec.tau.is_identity() {
                    nontrivial += 1;
                }
            }
        }
    }
    gate.report(
        "C5 tau of omega_pm equals the (-1)^<alpha,beta> sign action",
        bad == 0 && nontrivial > 0,
        format!("{bad} mismatches over {total} matrices, {nontrivial} non-identity (odd-pairing lattice)"),
    );

    // 6, 7
    let (mut total, mut bad6, mut bad7) = (0, 0, 0);
    for r in runs.values() {
        let basis = r.classification.algebra.basis();
        for rec in &r.classification.records {
            total += 1;
            if !check_l4e_fixed(basis, &rec.tau, &rec.vector) {
                bad6 += 1;
            }
            if check_signed_permutation(basis, &rec.tau).is_none() {
                bad7 += 1;
            }
        }
    }
    gate.report("C6 tau fixes every support class", bad6 == 0, format!("{bad6} failures over {total} vectors"));
    gate.report("C7 x-block of tau is a signed permutation", bad7 == 0, format!("{bad7} failures over {total} matrices"));

    // 8, 9
    let (mut pairs, mut bad8) = (0, 0);
    for r in runs.values() {
        pairs += r.classification.closure.pairs_checked;
        bad8 += r.classification.closure.fixed_point_violations.len();
    }
    gate.report("C8 tau_e = 1 implies tau_f(e) = e", bad8 == 0, format!("{bad8} violations over {pairs} pairs"));
    let mut ok = true;
    let mut parts = Vec::new();
    for name in ["sqrt2A1", "sqrt2A2", "sqrt2D4", "odd-pairing", "sqrt2E8"] {
        let cl = &runs[name].classification.closure;
        let n = runs[name].classification.ising_total();
        ok &= cl.escapees.is_empty() && cl.pairs_checked == n * n;
        parts.push(format!("{name}: {} escapees / {} pairs", cl.escapees.len(), cl.pairs_checked));
    }
    ok &= runs["sqrt2E8"].classification.closure.pairs_checked == E8_CLOSURE_PAIRS;
    gate.report("C9 closure under tau", ok, parts.join("; "));

    // 10
    let (ok, detail) = product_laws();
    gate.report("C10 product table and product laws", ok, detail);

    // 11
    let mut ok = true;
    let mut sets = 0;
    for l in common::small_presets() {
        for m in [2, 4] {
            ok &= l.shell(m) == common::exhaustive_shell(&l, m);
            sets += 1;
        }
    }
    gate.report("C11 shell enumeration equals exhaustive search", ok, format!("{sets} (lattice, norm) pairs compared on presets of rank <= 8"));

    let failed: Vec<&str> = gate.results.iter().filter(|r| !r.1).map(|r| r.0.as_str()).collect();
    println!("acceptance: {} passed, {} failed", gate.results.len() - failed.len(), failed.len());
    if !failed.is_empty() {
        std::process::exit(1);
    }
}

fn product_laws() -> (bool, String) {
    let mut ok = true;
    let mut notes = Vec::new();

    // Orthonormal frame h_i = b_i / 2 on √2A1^n.
    let mut frame_products = 0;
    for n in 1..=FRAME_MAX_RANK {
        let g = GriessAlgebra::new(&preset(&format!("sqrt2A1x{n}")).unwrap()).unwrap();
        let b = g.basis();
        let h = |i: usize, j: usize| b.basis_element(b.sym_pos(i, j)).scale(&Rational::new(1, 4));
        let delta = |a: usize, c: usize| a == c;
        for &(i, j) in b.sym_index() {
            for &(k, l) in b.sym_index() {
                let mut expect = isingvec::griess::GriessElement::zero();
                for (d, r, s) in [(delta(i, k), j, l), (delta(i, l), j, k), (delta(j, k), i, l), (delta(j, l), i, k)] {
                    if d {
                        expect.add_assign(&h(r, s));
                    }
                }
                ok &= g.mul(&h(i, j), &h(k, l)) == expect;
                frame_products += 1;
            }
        }
    }
    notes.push(format!("{frame_products} frame products"));

    // Exhaustive commutativity and form associativity on small algebras.
    let mut triples = 0;
    for name in ["sqrt2A1", "sqrt2A1x2", "sqrt2D4"] {
        let g = GriessAlgebra::new(&preset(name).unwrap()).unwrap();
        let e: Vec<_> = (0..g.dim()).map(|i| g.basis().basis_element(i)).collect();
        for a in &e {
            for b in &e {
                let ab = g.mul(a, b);
                ok &= ab == g.mul(b, a);
                if name != "sqrt2D4" {
                    for c in &e {
                        ok &= g.form(&ab, c) == g.form(b, &g.mul(a, c));
                        triples += 1;
                    }
                }
            }
        }
    }
    notes.push(format!("{triples} exhaustive form triples"));

    // Randomized on √2E8.
    let g = GriessAlgebra::new(&preset("sqrt2E8").unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x15);
    for _ in 0..RANDOM_TRIALS {
        let a = common::random_element(&g, &mut rng, 3);
        let b = common::random_element(&g, &mut rng, 3);
        let c = common::random_element(&g, &mut rng, 3);
        let ab = g.mul(&a, &b);
        ok &= ab == g.mul(&b, &a);
        ok &= g.form(&ab, &c) == g.form(&b, &g.mul(&a, &c));
    }
    notes.push(format!("{RANDOM_TRIALS} random sqrt2E8 trials"));
    (ok, notes.join(", "))
}
