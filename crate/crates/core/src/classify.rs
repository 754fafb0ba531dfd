//! Enumeration of all Ising vectors of `V_L^+`, the counting formula, and the
//! sweeps run over the complete set.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::griess::{GriessAlgebra, GriessElement};
use crate::ising::{apply, IsingRecord, RecordJson};
use crate::lattice::{find_sqrt2e8, IntegralLattice, LatticeVector, Sublattice};

/// `|L(4)| + 256 · #{U ⊂ L : U ≅ √2E8}`, without building any vectors.
pub fn count_formula(l: &IntegralLattice) -> Result<usize> {
    l.require_rootless()?;
    Ok(l.shell(4).len() + 256 * find_sqrt2e8(l).len())
}

/// Whether all records are pairwise distinct as coefficient vectors.
pub fn distinctness_check(records: &[IsingRecord]) -> bool {
    let mut seen = HashSet::with_capacity(records.len());
    records.iter().all(|r| seen.insert(&r.vector))
}

/// Result of applying every `τ_f` to every `e`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub pairs_checked: usize,
    /// `(f, e)` index pairs whose image `τ_f(e)` is not an enumerated vector.
    pub escapees: Vec<(usize, usize)>,
    /// `(e, f)` pairs with `τ_e = 1` but `τ_f(e) ≠ e`.
    pub fixed_point_violations: Vec<(usize, usize)>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.escapees.is_empty() && self.fixed_point_violations.is_empty()
    }
}

/// For all `(e, f)`: `τ_f(e)` is one of the records, and `τ_f(e) = e` whenever `τ_e = 1`.
pub fn closure_check(algebra: &GriessAlgebra, records: &[IsingRecord]) -> ClosureReport {
    let index: HashMap<&GriessElement, usize> = records.iter().enumerate().map(|(i, r)| (&r.vector, i)).collect();
    let n = records.len();
    type Pairs = Vec<(usize, usize)>;
    let per_f: Vec<(Pairs, Pairs)> = records
        .par_iter()
        .enumerate()
        .map(|(fi, f)| {
            let mut escapees = Vec::new();
            let mut violations = Vec::new();
            if f.tau.is_identity() {
                return (escapees, violations);
            }
            for (ei, e) in records.iter().enumerate() {
                let image = apply(algebra.basis(), &f.tau, &e.vector);
                match index.get(&image) {
                    Some(&k) => {
                        if e.tau.is_identity() && k != ei {
                            violations.push((ei, fi));
                        }
                    }
                    None => {
                        escapees.push((fi, ei));
                        if e.tau.is_identity() {
                            violations.push((ei, fi));
                        }
                    }
                }
            }
            (escapees, violations)
        })
        .collect();
    let mut report = ClosureReport { pairs_checked: n * n, ..Default::default() };
    for (esc, vio) in per_f {
        report.escapees.extend(esc);
        report.fixed_point_violations.extend(vio);
    }
    report.fixed_point_violations.sort_unstable();
    report
}

/// Pass/fail tallies for one named check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCount {
    pub passed: usize,
    pub failed: usize,
}

impl CheckCount {
    fn record(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }
}

/// The complete in-memory classification of one lattice.
#[derive(Clone, Debug)]
pub struct Classification {
    pub algebra: GriessAlgebra,
    pub l4_count: usize,
    pub sublattices: Vec<Sublattice>,
    pub records: Vec<IsingRecord>,
    pub distinct: bool,
    pub closure: ClosureReport,
}

/// Builds `ω±(α)` for every class `{±α}` (sign `+` then `-`), then `ω(E,φ)` for
/// every √2E8 sublattice `E` and `φ = 0..255`, and runs every sweep.
///
/// Record order is fixed, so the result does not depend on the rayon pool.
pub fn enumerate_ising(l: &IntegralLattice) -> Result<Classification> {
    let algebra = GriessAlgebra::new(l)?;
    let l4_count = l.shell(4).len();
    let sublattices = find_sqrt2e8(l);
    let records = jobs(algebra.basis().x_index(), &sublattices).par_iter().map(|job| job.run(&algebra)).collect::<Result<Vec<_>>>()?;
    let distinct = distinctness_check(&records);
    let closure = closure_check(&algebra, &records);
    Ok(Classification { algebra, l4_count, sublattices, records, distinct, closure })
}

enum Job<'a> {
    Pm(&'a LatticeVector, i8),
    E8(&'a Sublattice, u8),
}

impl Job<'_> {
    fn run(&self, algebra: &GriessAlgebra) -> Result<IsingRecord> {
        match *self {
            Job::Pm(a, s) => IsingRecord::omega_pm(algebra, a, s),
            Job::E8(e, phi) => IsingRecord::omega_e8(algebra, e, phi),
        }
    }
}

fn jobs<'a>(reps: &'a [LatticeVector], sublattices: &'a [Sublattice]) -> Vec<Job<'a>> {
    let mut jobs: Vec<Job> = reps.iter().flat_map(|a| [Job::Pm(a, 1), Job::Pm(a, -1)]).collect();
    for e in sublattices {
        jobs.extend((0..=255u8).map(|phi| Job::E8(e, phi)));
    }
    jobs
}

/// The record at position `index` of the enumeration order, built on its own.
pub fn record_at(algebra: &GriessAlgebra, sublattices: &[Sublattice], index: usize) -> Result<IsingRecord> {
    let reps = algebra.basis().x_index();
    let pm = 2 * reps.len();
    let job = if index < pm {
        Job::Pm(&reps[index / 2], if index.is_multiple_of(2) { 1 } else { -1 })
    } else {
        let k = index - pm;
        let e = sublattices.get(k / 256).ok_or_else(|| Error::Input(format!("record index {index} out of range ({} records)", pm + 256 * sublattices.len())))?;
        Job::E8(e, (k % 256) as u8)
    };
    job.run(algebra)
}

impl Classification {
    pub fn lattice(&self) -> &IntegralLattice {
        self.algebra.lattice()
    }

    pub fn ising_total(&self) -> usize {
        self.records.len()
    }

    pub fn check_summary(&self) -> BTreeMap<String, CheckCount> {
        let mut summary: BTreeMap<String, CheckCount> = BTreeMap::new();
        for r in &self.records {
            for (name, ok) in r.checks.named() {
                summary.entry(name.to_string()).or_default().record(ok);
            }
        }
        summary.entry("distinct".into()).or_default().record(self.distinct);
        summary.entry("count_formula".into()).or_default().record(self.ising_total() == self.l4_count + 256 * self.sublattices.len());
        let closure = summary.entry("closure".into()).or_default();
        closure.passed = self.closure.pairs_checked - self.closure.escapees.len();
        closure.failed = self.closure.escapees.len();
        let fixed = summary.entry("tau_identity_fixed_points".into()).or_default();
        fixed.failed = self.closure.fixed_point_violations.len();
        fixed.passed = self.closure.pairs_checked - fixed.failed;
        summary
    }

    /// Names of all checks with at least one failure.
    pub fn violations(&self) -> Vec<String> {
        self.check_summary().into_iter().filter(|(_, c)| c.failed > 0).map(|(k, _)| k).collect()
    }

    pub fn report(&self) -> ClassificationReport {
        let basis = self.algebra.basis();
        ClassificationReport {
            name: self.lattice().name().to_string(),
            gram: self.lattice().gram().to_vec(),
            dim_b: basis.dim(),
            l4_count: self.l4_count,
            e8_sublattice_count: self.sublattices.len(),
            e8_sublattices: self.sublattices.iter().map(Sublattice::id_string).collect(),
            ising_total: self.ising_total(),
            records: self.records.iter().map(|r| r.to_json(basis)).collect(),
            check_summary: self.check_summary(),
        }
    }
}

/// Serialized classification of one lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub name: String,
    pub gram: Vec<Vec<i64>>,
    pub dim_b: usize,
    pub l4_count: usize,
    pub e8_sublattice_count: usize,
    pub e8_sublattices: Vec<String>,
    pub ising_total: usize,
    pub records: Vec<RecordJson>,
    pub check_summary: BTreeMap<String, CheckCount>,
}

impl ClassificationReport {
    /// One row per record: family, witness, eigenspace dimensions, checks.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("index\tfamily\twitness\tdim_2\tdim_0\tdim_1/2\tdim_1/16\tsupport\ttau_identity\tchecks\n");
        for (i, r) in self.records.iter().enumerate() {
            let family = match &r.family {
                crate::ising::Family::OmegaPm { alpha, sign } => {
                    let a: Vec<String> = alpha.iter().map(i64::to_string).collect();
                    format!("omega{}({})", if *sign > 0 { "+" } else { "-" }, a.join(","))
                }
                crate::ising::Family::OmegaE8 { phi, .. } => format!("omegaE8(phi={phi})"),
            };
            let failed: Vec<&str> = r.checks.named().iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
            let checks = if failed.is_empty() { "ok".to_string() } else { failed.join(",") };
            let d = &r.eigen_dims;
            out.push_str(&format!(
                "{i}\t{family}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{checks}\n",
                r.witness, d.two, d.zero, d.half, d.sixteenth, r.support_size, r.tau_is_identity
            ));
        }
        out
    }
}
