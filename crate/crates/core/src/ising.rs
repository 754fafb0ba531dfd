//! The two families of Ising vectors, their verification, eigenspaces and
//! τ-involutions.
//!
//! The spectral test uses that `ad_e` is self-adjoint for a positive-definite
//! form, so its eigenvalues lie in `{2, 0, 1/2, 1/16}` exactly when
//! `ad_e (ad_e - 2)(ad_e - 1/2)(ad_e - 1/16) = 0`. Multiplicities then follow
//! from the traces of the first three powers, and `τ_e = I - 2P` with `P` the
//! Lagrange projector onto the 1/16-eigenspace. All of this runs on
//! denominator-cleared `i64` matrices with checked arithmetic and falls back
//! to exact rational matrices on overflow.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cocycle::Sign;
use crate::error::{Error, Result};
use crate::griess::{ElementJson, GriessAlgebra, GriessBasis, GriessElement};
use crate::lattice::{LatticeVector, Sublattice};
use crate::linalg::{kernel_basis, IntMatrix, RatMatrix, Rational, SparseMatrix};

/// `(1/16) α(-1)² 1 ± (1/4) x_α`.
pub fn omega_pm(basis: &GriessBasis, alpha: &[i64], sign: Sign) -> Result<GriessElement> {
    let l = basis.lattice();
    if alpha.len() != l.rank() {
        return Err(Error::DimensionMismatch { expected: l.rank(), got: alpha.len() });
    }
    let class = match basis.class_of(alpha) {
        Some(c) if l.norm(alpha) == 4 => c,
        _ => return Err(Error::NotNormFour(alpha.to_vec())),
    };
    let mut e = basis.square_of(alpha).scale(&Rational::new(1, 16));
    e.add_x(class, Rational::new(sign as i64, 4));
    Ok(e)
}

/// Basis of `E` used for η and for the bits of φ.
fn e8_frame(e: &Sublattice) -> &[Vec<i64>] {
    if e.generators().len() == 8 {
        e.generators()
    } else {
        e.canonical_id()
    }
}

/// `(1/32) Q_E + (1/32) Σ_{±α ⊂ E(4)} η(α) (-1)^{φ(α)} x_α`, where bit `i` of
/// `phi` is the value of φ on the `i`-th basis vector of `E`.
pub fn omega_e8(algebra: &GriessAlgebra, e: &Sublattice, phi: u8) -> Result<GriessElement> {
    let basis = algebra.basis();
    let l = basis.lattice();
    if let Some(bad) = e.generators().iter().find(|g| g.len() != l.rank()) {
        return Err(Error::NotSublatticeOfL(bad.clone()));
    }
    if !l.is_isometric_sqrt2e8(e) {
        return Err(Error::NotE8);
    }
    let frame = e8_frame(e).to_vec();
    let frame_sub = Sublattice::from_generators(frame.clone());
    let g_inv = RatMatrix::from_i64_rows(&l.gram_of(&frame)).inverse().ok_or(Error::NotE8)?;
    let mut out = basis.quadratic(&frame, &g_inv).scale(&Rational::new(1, 32));
    let eta = algebra.cocycle().trivializing_eta(l, &frame_sub)?;
    for alpha in e.vectors_of_norm(l, 4).into_iter().filter(LatticeVector::is_positive) {
        let class = basis.class_of(&alpha).ok_or_else(|| Error::NotSublatticeOfL(alpha.0.clone()))?;
        let c = eta.coordinates(&alpha).ok_or_else(|| Error::NotSublatticeOfL(alpha.0.clone()))?;
        let parity: i64 = c.iter().enumerate().filter(|(i, _)| phi >> i & 1 == 1).map(|(_, ci)| ci).sum();
        let sign = eta.sign_of_coordinates(&c) as i64 * if parity.rem_euclid(2) == 0 { 1 } else { -1 };
        out.add_x(class, Rational::new(sign, 32));
    }
    Ok(out)
}

/// Classes `{±α}` with nonzero `x_α` coefficient.
pub fn support_l4(e: &GriessElement) -> Vec<usize> {
    e.support()
}

/// Multiplicities of the eigenvalues `2, 0, 1/2, 1/16`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EigenDims {
    #[serde(rename = "2")]
    pub two: usize,
    #[serde(rename = "0")]
    pub zero: usize,
    #[serde(rename = "1/2")]
    pub half: usize,
    #[serde(rename = "1/16")]
    pub sixteenth: usize,
}

impl EigenDims {
    pub fn total(&self) -> usize {
        self.two + self.zero + self.half + self.sixteenth
    }
}

/// The four admissible eigenvalues in the order used by [`EigenDims`].
pub fn ising_eigenvalues() -> [Rational; 4] {
    [Rational::from_int(2), Rational::zero(), Rational::new(1, 2), Rational::new(1, 16)]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsingFailure {
    NotIdempotent,
    WrongNorm(Rational),
    SpectrumOutside,
    TwoEigenspace(usize),
}

impl fmt::Display for IsingFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsingFailure::NotIdempotent => write!(f, "e·e != 2e"),
            IsingFailure::WrongNorm(n) => write!(f, "<e,e> = {n}, expected 1/4"),
            IsingFailure::SpectrumOutside => write!(f, "ad_e has an eigenvalue outside {{2, 0, 1/2, 1/16}}"),
            IsingFailure::TwoEigenspace(d) => write!(f, "2-eigenspace has dimension {d}"),
        }
    }
}

/// Eigenvalue multiplicities and the involution `τ_e` of an Ising vector.
#[derive(Clone, Debug)]
pub struct Spectral {
    pub eigen_dims: EigenDims,
    pub tau: SparseMatrix,
}

#[derive(Clone, Debug)]
pub struct IsingCheck {
    pub failure: Option<IsingFailure>,
    pub spectral: Option<Spectral>,
}

impl IsingCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn fail(f: IsingFailure) -> IsingCheck {
    IsingCheck { failure: Some(f), spectral: None }
}

/// Idempotency, norm and spectrum checks, in that order.
pub fn is_ising(algebra: &GriessAlgebra, e: &GriessElement) -> IsingCheck {
    if algebra.mul(e, e) != e.scale(&Rational::from_int(2)) {
        return fail(IsingFailure::NotIdempotent);
    }
    let norm = algebra.form(e, e);
    if norm != Rational::new(1, 4) {
        return fail(IsingFailure::WrongNorm(norm));
    }
    let ad = algebra.ad_sparse(e);
    let spectral = match spectral_int(&ad).unwrap_or_else(|| spectral_rational(&ad)) {
        Some(s) => s,
        None => return fail(IsingFailure::SpectrumOutside),
    };
    if spectral.eigen_dims.two != 1 {
        return fail(IsingFailure::TwoEigenspace(spectral.eigen_dims.two));
    }
    IsingCheck { failure: None, spectral: Some(spectral) }
}

fn require_ising(algebra: &GriessAlgebra, e: &GriessElement) -> Result<Spectral> {
    let check = is_ising(algebra, e);
    match check.failure {
        Some(f) => Err(Error::NotIsing(f.to_string())),
        None => Ok(check.spectral.expect("spectral data of a passing check")),
    }
}

pub fn spectral_data(algebra: &GriessAlgebra, e: &GriessElement) -> Result<Spectral> {
    require_ising(algebra, e)
}

/// `τ_e` as a dense matrix.
pub fn tau_matrix(algebra: &GriessAlgebra, e: &GriessElement) -> Result<RatMatrix> {
    Ok(require_ising(algebra, e)?.tau.to_dense())
}

/// Exact kernel bases of `ad_e - λ` for `λ = 2, 0, 1/2, 1/16`.
pub fn decompose(algebra: &GriessAlgebra, e: &GriessElement) -> Result<[Vec<Vec<Rational>>; 4]> {
    let ad = algebra.ad_matrix(e);
    let spaces = ising_eigenvalues().map(|lambda| kernel_basis(&ad.shifted(&lambda)));
    let dims: usize = spaces.iter().map(Vec::len).sum();
    if spaces[0].len() != 1 || dims != algebra.dim() {
        return Err(Error::NotIsing(format!("eigenspace dimensions sum to {dims} of {}", algebra.dim())));
    }
    Ok(spaces)
}

fn common_denominator(m: &SparseMatrix) -> Option<i64> {
    let mut d: i64 = 1;
    for (_, _, v) in m.entries() {
        let (_, den) = v.as_small()?;
        d = num_integer::lcm(d, den);
    }
    Some(d)
}

/// Solve `Σ_λ m_λ λ^k = t_k` for `k = 0..3` over the four eigenvalues.
fn multiplicities(traces: [Rational; 4]) -> Option<EigenDims> {
    let ev = ising_eigenvalues();
    let rows: Vec<Vec<Rational>> = (0..4).map(|k| ev.iter().map(|l| l.pow(k as u32)).collect()).collect();
    let inv = RatMatrix::from_rows(rows).inverse().expect("distinct eigenvalues");
    let m = inv.mul_vec(&traces);
    let m: Option<Vec<usize>> = m.iter().map(|x| x.to_i64().and_then(|v| usize::try_from(v).ok())).collect();
    let m = m?;
    Some(EigenDims { two: m[0], zero: m[1], half: m[2], sixteenth: m[3] })
}

/// Integer path; `None` when entries or intermediate values do not fit in `i64`.
fn spectral_int(ad: &SparseMatrix) -> Option<Option<Spectral>> {
    let dim = ad.nrows();
    let d = common_denominator(ad)?;
    let n = IntMatrix::from_scaled(ad, d)?;
    let nn = n.checked_mul(&n)?;
    // N(N - 2d) and (2N - d)(16N - d) = 32N² - 18dN + d².
    let left = IntMatrix::combine(&[(1, &nn), (-2 * d, &n)], 0)?;
    let right = IntMatrix::combine(&[(32, &nn), (-18 * d, &n)], d.checked_mul(d)?)?;
    if !left.checked_mul(&right)?.is_zero() {
        return Some(None);
    }
    let dq = Rational::from_int(d);
    let traces = [
        Rational::from_int(dim as i64),
        &Rational::from_bigint(n.trace().into()) / &dq,
        &Rational::from_bigint(nn.trace().into()) / &dq.pow(2),
        &Rational::from_bigint(nn.trace_of_product(&n).into()) / &dq.pow(3),
    ];
    let eigen_dims = multiplicities(traces)?;
    let tau = if eigen_dims.sixteenth == 0 {
        SparseMatrix::identity(dim)
    } else {
        // P = N(N - 2d)(2N - d) / (2d³ · (1/16)(1/16 - 2)(1/16 - 1/2)).
        let p = left.checked_mul(&IntMatrix::combine(&[(2, &n)], -d)?)?;
        let denom = &(&dq.pow(3) * &Rational::from_int(2)) * &Rational::new(217, 4096);
        let minus_two_p = p.to_sparse(&(&Rational::from_int(-2) / &denom));
        minus_two_p.add_identity(&Rational::one())
    };
    Some(Some(Spectral { eigen_dims, tau }))
}

fn spectral_rational(ad: &SparseMatrix) -> Option<Spectral> {
    let a = ad.to_dense();
    let dim = a.rows();
    let ev = ising_eigenvalues();
    let a2 = a.mul(&a);
    let left = a.mul(&a.shifted(&ev[0]));
    let right = a.shifted(&ev[2]).mul(&a.shifted(&ev[3]));
    if !left.mul(&right).is_zero() {
        return None;
    }
    let traces = [Rational::from_int(dim as i64), a.trace(), a2.trace(), a2.mul(&a).trace()];
    let eigen_dims = multiplicities(traces)?;
    let tau = if eigen_dims.sixteenth == 0 {
        SparseMatrix::identity(dim)
    } else {
        let p = left.mul(&a.shifted(&ev[2]));
        let c = ev.iter().take(3).fold(Rational::one(), |acc, mu| &acc * &(&ev[3] - mu));
        let scale = &Rational::from_int(-2) / &c;
        let mut t = RatMatrix::identity(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = &p[(i, j)] * &scale;
                t[(i, j)] += v;
            }
        }
        SparseMatrix::from_dense(&t)
    };
    Some(Spectral { eigen_dims, tau })
}

/// If the `x`-block of `tau` is a signed permutation and `tau` never mixes the
/// Heisenberg and `x` blocks, the induced map on classes as `(target, sign)`.
pub fn check_signed_permutation(basis: &GriessBasis, tau: &SparseMatrix) -> Option<Vec<(usize, Sign)>> {
    let off = basis.sym_dim();
    if tau.ncols() != basis.dim() || tau.nrows() != basis.dim() {
        return None;
    }
    if (0..off).any(|j| tau.column(j).iter().any(|(i, _)| *i >= off)) {
        return None;
    }
    let mut hit = vec![false; basis.x_dim()];
    let mut map = Vec::with_capacity(basis.x_dim());
    for c in 0..basis.x_dim() {
        let col = tau.column(off + c);
        if col.len() != 1 || col[0].0 < off {
            return None;
        }
        let (row, v) = &col[0];
        let sign = if v.is_one() {
            1
        } else if *v == Rational::from_int(-1) {
            -1
        } else {
            return None;
        };
        let target = row - off;
        if std::mem::replace(&mut hit[target], true) {
            return None;
        }
        map.push((target, sign));
    }
    Some(map)
}

/// `τ` maps every `x_β` in the support of `e` to `±x_β`.
pub fn check_l4e_fixed(basis: &GriessBasis, tau: &SparseMatrix, e: &GriessElement) -> bool {
    let off = basis.sym_dim();
    support_l4(e).into_iter().all(|c| {
        let col = tau.column(off + c);
        col.len() == 1 && col[0].0 == off + c && col[0].1.abs().is_one()
    })
}

/// Identity on the Heisenberg block and `x_β ↦ (-1)^{⟨α,β⟩} x_β`.
pub fn sign_action(basis: &GriessBasis, alpha: &[i64]) -> SparseMatrix {
    let l = basis.lattice();
    let pa = l.pairings(alpha);
    let off = basis.sym_dim();
    let mut cols: Vec<Vec<(usize, Rational)>> = (0..off).map(|j| vec![(j, Rational::one())]).collect();
    for (c, beta) in basis.x_index().iter().enumerate() {
        let ip: i64 = pa.iter().zip(&beta.0).map(|(x, y)| x * y).sum();
        cols.push(vec![(off + c, Rational::from_int(if ip.rem_euclid(2) == 0 { 1 } else { -1 }))]);
    }
    SparseMatrix::from_columns(basis.dim(), cols)
}

/// `τ · e` for a sparse `τ`.
pub fn apply(basis: &GriessBasis, tau: &SparseMatrix, e: &GriessElement) -> GriessElement {
    GriessElement::from_sparse(basis, &tau.mul_vec(&e.to_sparse(basis)))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Family {
    #[serde(rename = "omega_pm")]
    OmegaPm { alpha: Vec<i64>, sign: Sign },
    #[serde(rename = "omega_e8")]
    OmegaE8 { sublattice_id: String, phi: u8 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::OmegaPm { alpha, sign } => {
                let a: Vec<String> = alpha.iter().map(i64::to_string).collect();
                write!(f, "omega{}({})", if *sign > 0 { "+" } else { "-" }, a.join(","))
            }
            Family::OmegaE8 { sublattice_id, phi } => write!(f, "omegaE8[{sublattice_id}]({phi})"),
        }
    }
}

/// Outcome of every per-vector check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordChecks {
    pub is_ising: bool,
    pub tau_involution: bool,
    pub tau_fixes_e: bool,
    pub signed_permutation: bool,
    pub l4e_fixed: bool,
    /// Only meaningful for the `ω±` family; `true` otherwise.
    pub sign_formula: bool,
    pub witness_shape: bool,
    pub support_in_witness: bool,
    /// For `ω(E,φ)`: the support spans exactly the witness.
    pub support_spans_witness: bool,
}

impl RecordChecks {
    pub fn named(&self) -> [(&'static str, bool); 9] {
        [
            ("is_ising", self.is_ising),
            ("tau_involution", self.tau_involution),
            ("tau_fixes_e", self.tau_fixes_e),
            ("signed_permutation", self.signed_permutation),
            ("l4e_fixed", self.l4e_fixed),
            ("sign_formula", self.sign_formula),
            ("witness_shape", self.witness_shape),
            ("support_in_witness", self.support_in_witness),
            ("support_spans_witness", self.support_spans_witness),
        ]
    }

    pub fn all(&self) -> bool {
        self.named().iter().all(|(_, ok)| *ok)
    }
}

/// A verified Ising vector with its τ-involution and witness sublattice.
#[derive(Clone, Debug)]
pub struct IsingRecord {
    pub family: Family,
    pub vector: GriessElement,
    pub eigen_dims: EigenDims,
    pub tau: SparseMatrix,
    pub support: Vec<usize>,
    pub witness: Sublattice,
    pub checks: RecordChecks,
    pub failure: Option<String>,
}

impl IsingRecord {
    pub fn omega_pm(algebra: &GriessAlgebra, alpha: &[i64], sign: Sign) -> Result<Self> {
        let vector = omega_pm(algebra.basis(), alpha, sign)?;
        let witness = Sublattice::from_generators(vec![alpha.to_vec()]);
        Ok(Self::assemble(algebra, Family::OmegaPm { alpha: alpha.to_vec(), sign }, vector, witness))
    }

    pub fn omega_e8(algebra: &GriessAlgebra, e: &Sublattice, phi: u8) -> Result<Self> {
        let vector = omega_e8(algebra, e, phi)?;
        Ok(Self::assemble(algebra, Family::OmegaE8 { sublattice_id: e.id_string(), phi }, vector, e.clone()))
    }

    /// Runs every check on `vector`; failures are recorded, never raised.
    pub fn assemble(algebra: &GriessAlgebra, family: Family, vector: GriessElement, witness: Sublattice) -> Self {
        let basis = algebra.basis();
        let l = basis.lattice();
        let dim = basis.dim();
        let check = is_ising(algebra, &vector);
        let failure = check.failure.as_ref().map(ToString::to_string);
        let spectral = check.spectral.unwrap_or_else(|| Spectral { eigen_dims: EigenDims::default(), tau: SparseMatrix::identity(dim) });
        let support = support_l4(&vector);
        let tau = spectral.tau;
        let mut checks = RecordChecks { is_ising: failure.is_none() && spectral.eigen_dims.total() == dim, ..Default::default() };
        checks.tau_involution = tau.is_identity() || tau.mul(&tau).is_identity();
        checks.tau_fixes_e = apply(basis, &tau, &vector) == vector;
        checks.signed_permutation = check_signed_permutation(basis, &tau).is_some();
        checks.l4e_fixed = check_l4e_fixed(basis, &tau, &vector);
        let reps = basis.x_index();
        checks.support_in_witness = support.iter().all(|&c| witness.contains(&reps[c]));
        match &family {
            Family::OmegaPm { alpha, .. } => {
                checks.sign_formula = tau == sign_action(basis, alpha);
                checks.witness_shape = l.is_isometric_sqrt2a1(&witness);
                checks.support_spans_witness = checks.support_in_witness;
            }
            Family::OmegaE8 { .. } => {
                checks.sign_formula = true;
                checks.witness_shape = l.is_isometric_sqrt2e8(&witness);
                let span: Vec<LatticeVector> = support.iter().map(|&c| reps[c].clone()).collect();
                checks.support_spans_witness = !span.is_empty() && Sublattice::canonical(&span) == witness;
            }
        }
        IsingRecord { family, vector, eigen_dims: spectral.eigen_dims, tau, support, witness, checks, failure }
    }

    pub fn to_json(&self, basis: &GriessBasis) -> RecordJson {
        RecordJson {
            family: self.family.clone(),
            coordinates: self.vector.to_json(basis),
            eigen_dims: self.eigen_dims,
            support_size: self.support.len(),
            witness: self.witness.id_string(),
            tau_is_identity: self.tau.is_identity(),
            checks: self.checks,
        }
    }
}

/// Serialized form of an [`IsingRecord`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordJson {
    pub family: Family,
    pub coordinates: ElementJson,
    pub eigen_dims: EigenDims,
    pub support_size: usize,
    pub witness: String,
    pub tau_is_identity: bool,
    pub checks: RecordChecks,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{find_sqrt2e8, preset, IntegralLattice};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn odd_lattice() -> IntegralLattice {
        IntegralLattice::validate(vec![vec![4, 1], vec![1, 4]], "odd").unwrap()
    }

    #[test]
    fn omega_pm_on_sqrt2a1() {
        let g = GriessAlgebra::new(&preset("sqrt2A1").unwrap()).unwrap();
        let b = g.basis();
        let p = omega_pm(b, &[1], 1).unwrap();
        assert_eq!(p.sym_coeff(0), q(1, 16));
        assert_eq!(p.x_coeff(0), q(1, 4));
        let m = omega_pm(b, &[1], -1).unwrap();
        assert_eq!(p.add(&m), b.square_of(&[1]).scale(&q(1, 8)));
        assert_eq!(omega_pm(b, &[-1], 1).unwrap(), p);
        assert!(g.mul(&p, &m).is_zero());
        assert!(matches!(omega_pm(b, &[2], 1), Err(Error::NotNormFour(_))));

        let check = is_ising(&g, &p);
        assert!(check.passed());
        let dims = check.spectral.unwrap().eigen_dims;
        assert_eq!(dims, EigenDims { two: 1, zero: 1, half: 0, sixteenth: 0 });
        let spaces = decompose(&g, &p).unwrap();
        assert_eq!(spaces[1].len(), 1);
        let zero_vec = GriessElement::from_dense(b, &spaces[1][0]);
        let ratio = &zero_vec.x_coeff(0) / &m.x_coeff(0);
        assert_eq!(zero_vec, m.scale(&ratio));
    }

    #[test]
    fn non_ising_elements_are_rejected() {
        let g = GriessAlgebra::new(&preset("sqrt2A1").unwrap()).unwrap();
        let p = omega_pm(g.basis(), &[1], 1).unwrap();
        assert_eq!(is_ising(&g, &p.scale(&q(2, 1))).failure, Some(IsingFailure::NotIdempotent));
        let h = g.basis().square_of(&[1]).scale(&q(1, 16));
        assert!(!is_ising(&g, &h).passed());
        assert!(matches!(tau_matrix(&g, &h), Err(Error::NotIsing(_))));
        // 1/8 α(-1)² is idempotent with norm 1/2.
        let h2 = g.basis().square_of(&[1]).scale(&q(1, 8));
        assert_eq!(is_ising(&g, &h2).failure, Some(IsingFailure::WrongNorm(q(1, 2))));
    }

    #[test]
    fn odd_pairing_gives_sixteenth_eigenvectors() {
        let l = odd_lattice();
        let g = GriessAlgebra::new(&l).unwrap();
        let b = g.basis();
        assert_eq!(b.dim(), 5);
        for alpha in l.shell(4) {
            for sign in [1, -1] {
                let e = omega_pm(b, &alpha, sign).unwrap();
                let s = spectral_data(&g, &e).unwrap();
                assert_eq!(s.tau, sign_action(b, &alpha));
                assert!(s.eigen_dims.sixteenth > 0);
                let map = check_signed_permutation(b, &s.tau).unwrap();
                assert!(map.iter().enumerate().all(|(c, (t, _))| *t == c));
                assert!(check_l4e_fixed(b, &s.tau, &e));
                for beta in l.shell(4) {
                    if l.inner(&alpha, &beta).unwrap().abs() == 1 {
                        let xb = g.x_of(&beta).unwrap();
                        assert_eq!(apply(b, &s.tau, &xb), xb.scale(&q(-1, 1)));
                        assert_eq!(g.mul(&e, &xb), xb.scale(&q(1, 16)));
                    }
                }
            }
        }
    }

    #[test]
    fn tau_is_an_automorphism_on_odd_lattice() {
        let l = odd_lattice();
        let g = GriessAlgebra::new(&l).unwrap();
        let b = g.basis();
        let e = omega_pm(b, &l.shell(4)[0], 1).unwrap();
        let tau = spectral_data(&g, &e).unwrap().tau;
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                let (x, y) = (b.basis_element(i), b.basis_element(j));
                assert_eq!(apply(b, &tau, &g.mul(&x, &y)), g.mul(&apply(b, &tau, &x), &apply(b, &tau, &y)));
            }
        }
    }

    #[test]
    fn eigencomponents_of_x_beta() {
        for l in [preset("sqrt2D4").unwrap(), odd_lattice()] {
            let g = GriessAlgebra::new(&l).unwrap();
            let b = g.basis();
            for alpha in l.shell(4) {
                let e = omega_pm(b, &alpha, 1).unwrap();
                for beta in l.shell(4) {
                    let ip = l.inner(&alpha, &beta).unwrap();
                    let xb = g.x_of(&beta).unwrap();
                    let img = g.mul(&e, &xb);
                    match ip.abs() {
                        0 => assert!(img.is_zero()),
                        1 => assert_eq!(img, xb.scale(&q(1, 16))),
                        2 => {
                            // x_β and x_{α∓β} span a 0- and a 1/2-eigenvector.
                            let gamma = if ip == 2 { &alpha - &beta } else { &alpha + &beta };
                            let xg = g.x_of(&gamma).unwrap();
                            let img2 = g.mul(&e, &img);
                            assert_eq!(img2, img.scale(&q(1, 2)));
                            assert!(img.support().iter().all(|c| xb.support().contains(c) || xg.support().contains(c)));
                        }
                        _ => {}
                    }
                }
            }
        }
    }

    #[test]
    fn e8_omega_family() {
        let l = preset("sqrt2E8").unwrap();
        let g = GriessAlgebra::new(&l).unwrap();
        let e = &find_sqrt2e8(&l)[0];
        let w0 = omega_e8(&g, e, 0).unwrap();
        let w1 = omega_e8(&g, e, 1).unwrap();
        assert_ne!(w0, w1);
        assert_eq!(w0.sym_part(), w1.sym_part());
        assert_eq!(support_l4(&w0).len(), 120);
        assert_eq!(support_l4(&w0), support_l4(&w1));
        assert!(w0.x_part().values().all(|v| v.abs() == q(1, 32)));
        for w in [&w0, &w1] {
            let r = IsingRecord::assemble(&g, Family::OmegaE8 { sublattice_id: e.id_string(), phi: 0 }, w.clone(), e.clone());
            assert!(r.checks.all(), "{:?} {:?}", r.checks, r.failure);
            assert_eq!(r.eigen_dims.total(), 156);
        }
        let a1 = Sublattice::from_generators(vec![l.shell(4)[0].0.clone()]);
        assert!(matches!(omega_e8(&g, &a1, 0), Err(Error::NotE8)));
    }

    #[test]
    fn record_json_round_trip() {
        let l = preset("sqrt2D4").unwrap();
        let g = GriessAlgebra::new(&l).unwrap();
        let r = IsingRecord::omega_pm(&g, &l.shell(4)[0], -1).unwrap();
        assert!(r.checks.all());
        let text = serde_json::to_string(&r.to_json(g.basis())).unwrap();
        assert!(text.contains("\"1/16\""));
        let back: RecordJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r.to_json(g.basis()));
    }
}
