//! Exact dense linear algebra over a finite field.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::tower::Tower;

/// Row-major dense matrix of field encodings.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<u32>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|&&c| c >= field.order()) {
            return Err(Error::InvalidField(format!(
                "entry {bad} is not an element of GF({})",
                field.order()
            )));
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Stacks row vectors of length `cols`.
    pub fn from_rows<R: AsRef<[u32]>>(field: &Field, cols: usize, rows: &[R]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    /// `[[0, I], [-I, 0]]` of size `2m`.
    pub fn symplectic_j(field: &Field, m: usize) -> Matrix {
        let mut j = Matrix::zeros(field, 2 * m, 2 * m);
        let minus_one = field.neg(1);
        for i in 0..m {
            j.set(i, m + i, 1);
            j.set(m + i, i, minus_one);
        }
        j
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&c| c == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i == r || factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> (Matrix, usize) {
        let (m, pivots) = self.rref_with_pivots();
        (m, pivots.len())
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Right kernel `{x : A x^T = 0}`.
    pub fn kernel(&self) -> Subspace {
        let f = &self.field;
        let (r, pivots) = self.rref_with_pivots();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        Subspace::from_rows(f, self.cols, &basis).expect("consistent lengths")
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_matrix(self)
    }

    /// Each row over GF(q^2) written out in coordinates over GF(q) with
    /// respect to the basis `{1, alpha}`: row `a` becomes `(c0(a) | c1(a))`.
    pub fn expand_over_base(&self, tower: &Tower) -> Result<Matrix> {
        if &self.field != tower.ext() {
            return Err(Error::FieldMismatch);
        }
        let n = self.cols;
        let mut out = Matrix::zeros(tower.base(), self.rows, 2 * n);
        for r in 0..self.rows {
            for c in 0..n {
                let (c0, c1) = tower.coordinates(self.get(r, c));
                out.set(r, c, c0);
                out.set(r, n + c, c1);
            }
        }
        Ok(out)
    }

    /// Dimension over GF(q) of the row span of a matrix over GF(q^2).
    pub fn base_rank(&self, tower: &Tower) -> Result<usize> {
        Ok(self.expand_over_base(tower)?.rank())
    }

    pub fn to_canonical(&self) -> String {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// A subspace of `F^ambient` held as an RREF basis without zero rows.
/// Equality of subspaces is equality of these canonical bases.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace::from_matrix(&Matrix::identity(field, ambient))
    }

    pub fn from_rows<R: AsRef<[u32]>>(field: &Field, ambient: usize, rows: &[R]) -> Result<Subspace> {
        Ok(Subspace::from_matrix(&Matrix::from_rows(field, ambient, rows)?))
    }

    pub fn from_matrix(m: &Matrix) -> Subspace {
        let (r, pivots) = m.rref_with_pivots();
        let k = pivots.len();
        let basis = Matrix {
            field: r.field.clone(),
            rows: k,
            cols: r.cols,
            data: r.data[..k * r.cols].to_vec(),
        };
        Subspace { basis, pivots }
    }

    pub fn field(&self) -> &Field {
        &self.basis.field
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vecs(&self) -> Vec<Vec<u32>> {
        self.basis.row_vecs()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient()
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` lies in the span.
    pub fn contains(&self, v: &[u32]) -> bool {
        if v.len() != self.ambient() {
            return false;
        }
        let f = self.field();
        let mut w = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = w[pc];
            if c == 0 {
                continue;
            }
            for (j, &b) in self.basis.row(i).iter().enumerate() {
                w[j] = f.sub(w[j], f.mul(c, b));
            }
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch(self.ambient(), other.ambient()));
        }
        Ok(())
    }

    /// Sum and intersection in one elimination of the block matrix
    /// `[[U, U], [W, 0]]`: rows with a nonzero left half span `U + W`, rows
    /// whose left half vanished carry a basis of `U ∩ W` on the right.
    pub fn sum_intersect(&self, other: &Subspace) -> Result<(Subspace, Subspace)> {
        self.check_compatible(other)?;
        let f = self.field();
        let n = self.ambient();
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for r in 0..self.dim() {
            let u = self.basis.row(r);
            let mut row = u.to_vec();
            row.extend_from_slice(u);
            rows.push(row);
        }
        for r in 0..other.dim() {
            let mut row = other.basis.row(r).to_vec();
            row.resize(2 * n, 0);
            rows.push(row);
        }
        let block = Matrix::from_rows(f, 2 * n, &rows)?;
        let (red, pivots) = block.rref_with_pivots();
        let mut sum_rows = Vec::new();
        let mut int_rows = Vec::new();
        for (i, &pc) in pivots.iter().enumerate() {
            let row = red.row(i);
            if pc < n {
                sum_rows.push(row[..n].to_vec());
            } else {
                int_rows.push(row[n..].to_vec());
            }
        }
        Ok((Subspace::from_rows(f, n, &sum_rows)?, Subspace::from_rows(f, n, &int_rows)?))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        Ok(self.sum_intersect(other)?.0)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        Ok(self.sum_intersect(other)?.1)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}): {:?}", self.dim(), self.ambient(), self.basis_vecs())
    }
}

/// `sum_{i<m} (u_i v_{m+i} - u_{m+i} v_i)` for vectors of length `2m`.
pub fn symplectic_form(field: &Field, u: &[u32], v: &[u32]) -> Result<u32> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    if u.len() % 2 == 1 {
        return Err(Error::OddLength(u.len()));
    }
    let m = u.len() / 2;
    let mut acc = 0;
    for i in 0..m {
        acc = field.add(acc, field.mul(u[i], v[m + i]));
        acc = field.sub(acc, field.mul(u[m + i], v[i]));
    }
    Ok(acc)
}

/// Matrix of pairwise symplectic products between the rows of `a` and the rows of `b`.
pub fn symplectic_product(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    if a.cols != b.cols {
        return Err(Error::DimensionMismatch(format!(
            "rows of length {} against rows of length {}",
            a.cols, b.cols
        )));
    }
    let mut out = Matrix::zeros(&a.field, a.rows, b.rows);
    for i in 0..a.rows {
        for j in 0..b.rows {
            out.set(i, j, symplectic_form(&a.field, a.row(i), b.row(j))?);
        }
    }
    Ok(out)
}
