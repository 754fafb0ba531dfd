//! The Griess algebra `B = (V_L^+)_2` over the rationals.
//!
//! Basis: `s_ij = b_i(-1) b_j(-1) 1` for `i <= j` over the lattice basis `b_i`,
//! followed by `x_α = e^α + e^{-α}`, one per pair `{±α}` of norm-4 vectors.
//! Products are taken in the coordinate-free form
//!
//! ```text
//! (uv)·(xy) = ⟨u,x⟩ vy + ⟨u,y⟩ vx + ⟨v,x⟩ uy + ⟨v,y⟩ ux
//! (uv)·x_α  = ⟨u,α⟩⟨v,α⟩ x_α
//! x_α·x_β   = ε(α,β) x_{α+β}   if ⟨α,β⟩ = -2
//!           = ε(α,β) x_{α-β}   if ⟨α,β⟩ = +2
//!           = α(-1)² 1         if β = ±α
//!           = 0                otherwise
//! ```
//!
//! which reduces to the familiar `h_ij` table in any orthonormal frame.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::cocycle::{CocycleTable, Sign};
use crate::error::{Error, Result};
use crate::lattice::{IntegralLattice, LatticeVector};
use crate::linalg::{RatMatrix, Rational, SparseMatrix, SparseVec};

#[derive(Clone, Debug)]
pub struct GriessBasis {
    lattice: IntegralLattice,
    sym_index: Vec<(usize, usize)>,
    x_index: Vec<LatticeVector>,
    class_lookup: HashMap<LatticeVector, usize>,
    /// `gram · α` for each class representative.
    x_pairings: Vec<Vec<i64>>,
}

impl GriessBasis {
    pub fn build(l: &IntegralLattice) -> Result<Self> {
        l.require_rootless()?;
        let n = l.rank();
        let sym_index = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let x_index: Vec<LatticeVector> = l.shell(4).into_iter().filter(LatticeVector::is_positive).collect();
        let mut class_lookup = HashMap::with_capacity(2 * x_index.len());
        for (k, v) in x_index.iter().enumerate() {
            class_lookup.insert(-v, k);
            class_lookup.insert(v.clone(), k);
        }
        let x_pairings = x_index.iter().map(|v| l.pairings(v)).collect();
        Ok(GriessBasis { lattice: l.clone(), sym_index, x_index, class_lookup, x_pairings })
    }

    pub fn lattice(&self) -> &IntegralLattice {
        &self.lattice
    }

    pub fn sym_index(&self) -> &[(usize, usize)] {
        &self.sym_index
    }

    /// Class representatives, the lexicographically larger of `±α`.
    pub fn x_index(&self) -> &[LatticeVector] {
        &self.x_index
    }

    pub fn sym_dim(&self) -> usize {
        self.sym_index.len()
    }

    pub fn x_dim(&self) -> usize {
        self.x_index.len()
    }

    pub fn dim(&self) -> usize {
        self.sym_dim() + self.x_dim()
    }

    /// Position of `s_ij` (either order of `i, j`).
    pub fn sym_pos(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let n = self.lattice.rank();
        i * n - i * (i + 1) / 2 + j
    }

    pub fn class_of(&self, v: &[i64]) -> Option<usize> {
        self.class_lookup.get(&LatticeVector(v.to_vec())).copied()
    }

    pub fn x_pairings(&self, class: usize) -> &[i64] {
        &self.x_pairings[class]
    }

    /// Flat basis position of the class `class`.
    pub fn x_pos(&self, class: usize) -> usize {
        self.sym_dim() + class
    }

    /// `v(-1)² 1` expanded in the `s_ij` basis.
    pub fn square_of(&self, v: &[i64]) -> GriessElement {
        let n = self.lattice.rank();
        let mut e = GriessElement::zero();
        for k in 0..n {
            for l in k..n {
                let c = if k == l { v[k] * v[k] } else { 2 * v[k] * v[l] };
                if c != 0 {
                    e.add_sym(self.sym_pos(k, l), Rational::from_int(c));
                }
            }
        }
        e
    }

    /// `Σ_ij m_ij f_i(-1) f_j(-1) 1` for lattice vectors `f_i` and a symmetric matrix `m`.
    pub fn quadratic(&self, vectors: &[Vec<i64>], m: &RatMatrix) -> GriessElement {
        let n = self.lattice.rank();
        // Pull back to the lattice basis: C = Fᵀ m F, then s_kl picks up C_kl + C_lk.
        let k = vectors.len();
        let mut c = vec![vec![Rational::zero(); n]; n];
        for a in 0..k {
            for b in 0..k {
                let mab = &m[(a, b)];
                if mab.is_zero() {
                    continue;
                }
                for (p, &fa) in vectors[a].iter().enumerate() {
                    if fa == 0 {
                        continue;
                    }
                    for (q, &fb) in vectors[b].iter().enumerate() {
                        if fb != 0 {
                            c[p][q] += mab * &Rational::from_int(fa * fb);
                        }
                    }
                }
            }
        }
        let mut e = GriessElement::zero();
        for p in 0..n {
            for q in p..n {
                let coeff = if p == q { c[p][p].clone() } else { &c[p][q] + &c[q][p] };
                e.add_sym(self.sym_pos(p, q), coeff);
            }
        }
        e
    }

    pub fn basis_element(&self, pos: usize) -> GriessElement {
        GriessElement::from_sparse(self, &[(pos, Rational::one())])
    }
}

/// Sparse exact element of `B`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GriessElement {
    sym: BTreeMap<usize, Rational>,
    x: BTreeMap<usize, Rational>,
}

fn add_into(map: &mut BTreeMap<usize, Rational>, k: usize, v: Rational) {
    if v.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(v);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &v;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

impl GriessElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn sym_part(&self) -> &BTreeMap<usize, Rational> {
        &self.sym
    }

    pub fn x_part(&self) -> &BTreeMap<usize, Rational> {
        &self.x
    }

    pub fn is_zero(&self) -> bool {
        self.sym.is_empty() && self.x.is_empty()
    }

    pub fn add_sym(&mut self, pos: usize, v: Rational) {
        add_into(&mut self.sym, pos, v);
    }

    pub fn add_x(&mut self, class: usize, v: Rational) {
        add_into(&mut self.x, class, v);
    }

    pub fn sym_coeff(&self, pos: usize) -> Rational {
        self.sym.get(&pos).cloned().unwrap_or_default()
    }

    pub fn x_coeff(&self, class: usize) -> Rational {
        self.x.get(&class).cloned().unwrap_or_default()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        GriessElement {
            sym: self.sym.iter().map(|(k, v)| (*k, v * s)).collect(),
            x: self.x.iter().map(|(k, v)| (*k, v * s)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, v) in &other.sym {
            add_into(&mut self.sym, *k, v.clone());
        }
        for (k, v) in &other.x {
            add_into(&mut self.x, *k, v.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from_int(-1)))
    }

    /// Flat sparse coordinates: `s_ij` positions first, then classes.
    pub fn to_sparse(&self, basis: &GriessBasis) -> SparseVec {
        let off = basis.sym_dim();
        self.sym.iter().map(|(k, v)| (*k, v.clone())).chain(self.x.iter().map(|(k, v)| (off + k, v.clone()))).collect()
    }

    pub fn from_sparse(basis: &GriessBasis, v: &[(usize, Rational)]) -> Self {
        let off = basis.sym_dim();
        let mut e = GriessElement::zero();
        for (k, c) in v {
            if *k < off {
                e.add_sym(*k, c.clone());
            } else {
                e.add_x(k - off, c.clone());
            }
        }
        e
    }

    pub fn to_dense(&self, basis: &GriessBasis) -> Vec<Rational> {
        let mut d = vec![Rational::zero(); basis.dim()];
        for (k, v) in self.to_sparse(basis) {
            d[k] = v;
        }
        d
    }

    pub fn from_dense(basis: &GriessBasis, d: &[Rational]) -> Self {
        let sparse: SparseVec = d.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k, v.clone())).collect();
        Self::from_sparse(basis, &sparse)
    }

    /// Classes with nonzero `x` coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.x.keys().copied().collect()
    }

    pub fn to_json(&self, basis: &GriessBasis) -> ElementJson {
        ElementJson {
            sym: self
                .sym
                .iter()
                .map(|(k, v)| {
                    let (i, j) = basis.sym_index()[*k];
                    (i, j, v.clone())
                })
                .collect(),
            x: self.x.iter().map(|(k, v)| (basis.x_index()[*k].0.clone(), v.clone())).collect(),
        }
    }

    pub fn from_json(basis: &GriessBasis, j: &ElementJson) -> Result<Self> {
        let n = basis.lattice().rank();
        let mut e = GriessElement::zero();
        for (i, k, v) in &j.sym {
            if *i >= n || *k >= n {
                return Err(Error::Input(format!("sym index ({i},{k}) out of range")));
            }
            e.add_sym(basis.sym_pos(*i, *k), v.clone());
        }
        for (alpha, v) in &j.x {
            let class = basis.class_of(alpha).ok_or_else(|| Error::NotNormFour(alpha.clone()))?;
            e.add_x(class, v.clone());
        }
        Ok(e)
    }
}

/// Wire form: `{"sym": [[i, j, "num/den"], ...], "x": [[[coords], "num/den"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub sym: Vec<(usize, usize, Rational)>,
    pub x: Vec<(Vec<i64>, Rational)>,
}

/// `B` with its product, form, and adjoint matrices.
#[derive(Clone, Debug)]
pub struct GriessAlgebra {
    basis: GriessBasis,
    cocycle: CocycleTable,
    /// For each class `a`: `(b, c, s)` with `x_a · x_b = s x_c`, sorted by `b`.
    x_products: Vec<Vec<(usize, usize, Sign)>>,
    x_squares: Vec<GriessElement>,
}

impl GriessAlgebra {
    pub fn new(l: &IntegralLattice) -> Result<Self> {
        let basis = GriessBasis::build(l)?;
        let cocycle = CocycleTable::build(l);
        Ok(Self::with_parts(basis, cocycle))
    }

    pub fn with_parts(basis: GriessBasis, cocycle: CocycleTable) -> Self {
        let m = basis.x_dim();
        let mut x_products = vec![Vec::new(); m];
        for a in 0..m {
            for b in 0..m {
                if a == b {
                    continue;
                }
                if let Some((c, s)) = x_product_target(&basis, &cocycle, &basis.x_index()[a], &basis.x_index()[b]) {
                    x_products[a].push((b, c, s));
                }
            }
        }
        let x_squares = basis.x_index().iter().map(|v| basis.square_of(v)).collect();
        GriessAlgebra { basis, cocycle, x_products, x_squares }
    }

    pub fn basis(&self) -> &GriessBasis {
        &self.basis
    }

    pub fn cocycle(&self) -> &CocycleTable {
        &self.cocycle
    }

    pub fn lattice(&self) -> &IntegralLattice {
        self.basis.lattice()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    fn gram(&self, i: usize, j: usize) -> i64 {
        self.lattice().gram()[i][j]
    }

    /// `x_a · x_b` for class indices, as `(class, sign)`, or `None` when it vanishes
    /// (`a == b` is handled separately).
    pub fn x_product(&self, a: usize, b: usize) -> Option<(usize, Sign)> {
        let row = &self.x_products[a];
        row.binary_search_by_key(&b, |t| t.0).ok().map(|k| (row[k].1, row[k].2))
    }

    pub fn mul(&self, a: &GriessElement, b: &GriessElement) -> GriessElement {
        let mut out = GriessElement::zero();
        // s · s
        for (p, c) in &a.sym {
            let (i, j) = self.basis.sym_index[*p];
            for (q, d) in &b.sym {
                let (k, l) = self.basis.sym_index[*q];
                let cd = c * d;
                for (g, r, s) in [(self.gram(i, k), j, l), (self.gram(i, l), j, k), (self.gram(j, k), i, l), (self.gram(j, l), i, k)] {
                    if g != 0 {
                        out.add_sym(self.basis.sym_pos(r, s), &cd * &Rational::from_int(g));
                    }
                }
            }
        }
        // s · x and x · s
        for (sym, xs) in [(&a.sym, &b.x), (&b.sym, &a.x)] {
            for (cls, d) in xs {
                let pa = &self.basis.x_pairings[*cls];
                let mut w = Rational::zero();
                for (p, c) in sym {
                    let (i, j) = self.basis.sym_index[*p];
                    let f = pa[i] * pa[j];
                    if f != 0 {
                        w += c * &Rational::from_int(f);
                    }
                }
                out.add_x(*cls, &w * d);
            }
        }
        // x · x
        for (ca, c) in &a.x {
            if let Some(d) = b.x.get(ca) {
                out.add_assign(&self.x_squares[*ca].scale(&(c * d)));
            }
            let row = &self.x_products[*ca];
            if b.x.len() <= row.len() {
                for (cb, d) in &b.x {
                    if let Ok(k) = row.binary_search_by_key(cb, |t| t.0) {
                        let (_, target, s) = row[k];
                        out.add_x(target, &(c * d) * &Rational::from_int(s as i64));
                    }
                }
            } else {
                for &(cb, target, s) in row {
                    if let Some(d) = b.x.get(&cb) {
                        out.add_x(target, &(c * d) * &Rational::from_int(s as i64));
                    }
                }
            }
        }
        out
    }

    /// Invariant form with `⟨x_α, x_α⟩ = 2` and
    /// `⟨uv, xy⟩ = ⟨u,x⟩⟨v,y⟩ + ⟨u,y⟩⟨v,x⟩`.
    pub fn form(&self, a: &GriessElement, b: &GriessElement) -> Rational {
        let mut total = Rational::zero();
        for (p, c) in &a.sym {
            let (i, j) = self.basis.sym_index[*p];
            for (q, d) in &b.sym {
                let (k, l) = self.basis.sym_index[*q];
                let g = self.gram(i, k) * self.gram(j, l) + self.gram(i, l) * self.gram(j, k);
                if g != 0 {
                    total += &(c * d) * &Rational::from_int(g);
                }
            }
        }
        for (cls, c) in &a.x {
            if let Some(d) = b.x.get(cls) {
                total += &(c * d) * &Rational::from_int(2);
            }
        }
        total
    }

    /// Matrix of `v ↦ e·v`, column-compressed.
    pub fn ad_sparse(&self, e: &GriessElement) -> SparseMatrix {
        let dim = self.dim();
        let cols = (0..dim).map(|j| self.mul(e, &self.basis.basis_element(j)).to_sparse(&self.basis)).collect();
        SparseMatrix::from_columns(dim, cols)
    }

    pub fn ad_matrix(&self, e: &GriessElement) -> RatMatrix {
        self.ad_sparse(e).to_dense()
    }

    /// `x_α · x_β` computed from the given representatives rather than the
    /// stored ones.
    pub fn exp_product(&self, alpha: &LatticeVector, beta: &LatticeVector) -> GriessElement {
        if alpha == beta || *alpha == -beta {
            return self.basis.square_of(alpha);
        }
        let mut e = GriessElement::zero();
        if let Some((c, s)) = x_product_target(&self.basis, &self.cocycle, alpha, beta) {
            e.add_x(c, Rational::from_int(s as i64));
        }
        e
    }

    /// `x_α` for any norm-4 `α` (either sign).
    pub fn x_of(&self, alpha: &[i64]) -> Result<GriessElement> {
        let c = self.basis.class_of(alpha).ok_or_else(|| Error::NotNormFour(alpha.to_vec()))?;
        let mut e = GriessElement::zero();
        e.add_x(c, Rational::one());
        Ok(e)
    }
}

fn x_product_target(basis: &GriessBasis, cocycle: &CocycleTable, alpha: &LatticeVector, beta: &LatticeVector) -> Option<(usize, Sign)> {
    let ip = basis.lattice().inner_unchecked(alpha, beta);
    match ip {
        -2 => {
            let c = basis.class_of(&(alpha + beta)).expect("α+β has norm 4");
            Some((c, cocycle.eps(alpha, beta)))
        }
        2 => {
            let c = basis.class_of(&(alpha - beta)).expect("α-β has norm 4");
            Some((c, cocycle.eps(alpha, &-beta)))
        }
        // |⟨α,β⟩| = 3 would make α∓β a root.
        3 | -3 => panic!("norm-4 vectors with pairing ±3 in a rootless lattice"),
        _ => None,
    }
}
