use super::{RatMatrix, Rational};

/// Sparse vector as `(index, value)` pairs sorted by index, no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// Column-compressed rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

/// Scatter/gather accumulator for building one sparse column at a time.
struct Accumulator {
    values: Vec<Rational>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl Accumulator {
    fn new(n: usize) -> Self {
        Accumulator { values: vec![Rational::zero(); n], touched: Vec::new(), mark: vec![false; n] }
    }

    fn add(&mut self, i: usize, v: Rational) {
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i);
            self.values[i] = v;
        } else {
            self.values[i] += v;
        }
    }

    fn drain(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.mark[i] = false;
            let v = std::mem::take(&mut self.values[i]);
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

impl SparseMatrix {
    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.iter().all(|(i, v)| *i < nrows && !v.is_zero())));
        SparseMatrix { nrows, cols }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { nrows: n, cols: (0..n).map(|i| vec![(i, Rational::one())]).collect() }
    }

    pub fn from_dense(m: &RatMatrix) -> Self {
        let cols = (0..m.cols())
            .map(|j| (0..m.rows()).filter(|&i| !m[(i, j)].is_zero()).map(|i| (i, m[(i, j)].clone())).collect())
            .collect();
        SparseMatrix { nrows: m.rows(), cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, Rational)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match self.cols[j].binary_search_by_key(&i, |(r, _)| *r) {
            Ok(k) => self.cols[j][k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn to_dense(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.nrows, self.cols.len());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                m[(i.to_owned(), j)] = v.clone();
            }
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.cols.len()
            && self.cols.iter().enumerate().all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    pub fn trace(&self) -> Rational {
        (0..self.cols.len().min(self.nrows)).map(|j| self.get(j, j)).sum()
    }

    pub fn mul_vec(&self, v: &[(usize, Rational)]) -> SparseVec {
        let mut acc = Accumulator::new(self.nrows);
        for (k, x) in v {
            for (i, a) in &self.cols[*k] {
                acc.add(*i, a * x);
            }
        }
        acc.drain()
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols.len(), other.nrows, "dimension mismatch");
        let mut acc = Accumulator::new(self.nrows);
        let cols = other
            .cols
            .iter()
            .map(|bcol| {
                for (k, b) in bcol {
                    for (i, a) in &self.cols[*k] {
                        acc.add(*i, a * b);
                    }
                }
                acc.drain()
            })
            .collect();
        SparseMatrix { nrows: self.nrows, cols }
    }

    /// `self + scale * I`.
    pub fn add_identity(&self, scale: &Rational) -> SparseMatrix {
        assert_eq!(self.nrows, self.cols.len());
        let mut acc = Accumulator::new(self.nrows);
        let cols = self
            .cols
            .iter()
            .enumerate()
            .map(|(j, col)| {
                for (i, v) in col {
                    acc.add(*i, v.clone());
                }
                acc.add(j, scale.clone());
                acc.drain()
            })
            .collect();
        SparseMatrix { nrows: self.nrows, cols }
    }

    pub fn scale(&self, s: &Rational) -> SparseMatrix {
        if s.is_zero() {
            return SparseMatrix { nrows: self.nrows, cols: vec![Vec::new(); self.cols.len()] };
        }
        let cols = self.cols.iter().map(|c| c.iter().map(|(i, v)| (*i, v * s)).collect()).collect();
        SparseMatrix { nrows: self.nrows, cols }
    }

    /// Every entry as an `(row, col, value)` triple, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v)))
    }
}

/// Dense square `i64` matrix with overflow-checked arithmetic, used as a fast
/// exact kernel once denominators have been cleared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    /// `scale * m` when every entry becomes an integer that fits.
    pub fn from_scaled(m: &SparseMatrix, scale: i64) -> Option<Self> {
        assert_eq!(m.nrows(), m.ncols());
        let mut out = Self::zeros(m.nrows());
        let s = Rational::from_int(scale);
        for (i, j, v) in m.entries() {
            out.data[i * out.n + j] = (v * &s).to_i64()?;
        }
        Some(out)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    /// `self + shift * I`.
    pub fn add_identity(&self, shift: i64) -> Option<Self> {
        let mut out = self.clone();
        for i in 0..self.n {
            let k = i * self.n + i;
            out.data[k] = out.data[k].checked_add(shift)?;
        }
        Some(out)
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            let row = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (o, &b) in row.iter_mut().zip(brow) {
                    if b != 0 {
                        *o = o.checked_add(a.checked_mul(b)?)?;
                    }
                }
            }
        }
        Some(IntMatrix { n, data: out })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// `Σ c_k M_k + diag·I`.
    pub fn combine(terms: &[(i64, &IntMatrix)], diag: i64) -> Option<IntMatrix> {
        let n = terms.first().map(|t| t.1.n).expect("at least one term");
        let mut data = vec![0i64; n * n];
        for (c, m) in terms {
            assert_eq!(m.n, n);
            for (o, &x) in data.iter_mut().zip(&m.data) {
                *o = o.checked_add(c.checked_mul(x)?)?;
            }
        }
        for i in 0..n {
            data[i * n + i] = data[i * n + i].checked_add(diag)?;
        }
        Some(IntMatrix { n, data })
    }

    /// `scale * self` as a sparse rational matrix.
    pub fn to_sparse(&self, scale: &Rational) -> SparseMatrix {
        let n = self.n;
        let cols = (0..n)
            .map(|j| (0..n).filter(|&i| self.get(i, j) != 0).map(|i| (i, &Rational::from_int(self.get(i, j)) * scale)).collect())
            .collect();
        SparseMatrix::from_columns(n, cols)
    }

    pub fn trace(&self) -> i128 {
        (0..self.n).map(|i| self.get(i, i) as i128).sum()
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &IntMatrix) -> i128 {
        let n = self.n;
        let mut t = 0i128;
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a != 0 {
                    t += a as i128 * other.data[k * n + i] as i128;
                }
            }
        }
        t
    }
}
