use std::fmt;

use crate::linalg::{Elem, Field, LinalgError};

/// A dense matrix over a finite field, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
    field: Field,
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

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: &Field) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(n: usize, field: &Field) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from flat row-major data, checking shape and entries.
    pub fn from_vec(
        rows: usize,
        cols: usize,
        data: Vec<Elem>,
        field: &Field,
    ) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if let Some(&bad) = data.iter().find(|&&x| !field.contains(x)) {
            return Err(LinalgError::ForeignEntry(bad));
        }
        Ok(Matrix {
            rows,
            cols,
            data,
            field: field.clone(),
        })
    }

    /// Builds a matrix from rows; an empty list gives a `0 x cols` matrix.
    pub fn from_rows(rows: &[Vec<Elem>], cols: usize, field: &Field) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Self::from_vec(rows.len(), cols, data, field)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Elem> {
        self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: Elem) {
        debug_assert!(self.field.contains(x));
        self.data[r * self.cols + c] = x;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == (r == c) as Elem))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows, &self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    /// Matrix product; panics on shape mismatch.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let f = &self.field;
        let mut out = Matrix::zeros(self.rows, other.cols, f);
        for r in 0..self.rows {
            let out_row = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out_row.iter_mut().zip(orow) {
                    if b != 0 {
                        *o = f.mul_add(*o, a, b);
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows, "shape mismatch in vec_mul");
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(k)) {
                if b != 0 {
                    *o = f.mul_add(*o, a, b);
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.cols, "shape mismatch in mul_vec");
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| if a == 0 || b == 0 { acc } else { f.mul_add(acc, a, b) })
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn scale(&self, s: Elem) -> Matrix {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Matrix { data, ..self.clone() }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: Elem, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s == 0 {
            return;
        }
        let f = self.field.clone();
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            if b != 0 {
                *a = f.mul_add(*a, s, b);
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows, &self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            rows: idx.len(),
            data,
            ..self.clone()
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.rows, idx.len(), &self.field);
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        m
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Matrix {
            rows: self.rows,
            cols,
            data,
            field: self.field.clone(),
        }
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
            field: self.field.clone(),
        }
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[&Matrix], field: &Field) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(rows, cols, field);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.data[(r0 + r) * cols + c0 + c] = b.get(r, c);
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..cols {
            if pr == rows {
                break;
            }
            let Some(sel) = (pr..rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if sel != pr {
                for k in 0..cols {
                    self.data.swap(sel * cols + k, pr * cols + k);
                }
            }
            let inv = f.inv(self.data[pr * cols + c]);
            for k in c..cols {
                let x = self.data[pr * cols + k];
                self.data[pr * cols + k] = f.mul(x, inv);
            }
            let (head, tail) = self.data.split_at_mut(pr * cols);
            let (prow, tail) = tail.split_at_mut(cols);
            for chunk in head.chunks_mut(cols).chain(tail.chunks_mut(cols)) {
                let factor = chunk[c];
                if factor == 0 {
                    continue;
                }
                let nf = f.neg(factor);
                for k in c..cols {
                    if prow[k] != 0 {
                        chunk[k] = f.mul_add(chunk[k], nf, prow[k]);
                    }
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.clone().rref_in_place().len()
        } else {
            self.transpose().rref_in_place().len()
        }
    }

    /// Basis of `{v : self * v = 0}` (column vectors).
    pub fn kernel_basis(&self) -> Vec<Vec<Elem>> {
        let (r, pivots) = self.rref();
        let f = &self.field;
        let mut is_pivot = vec![usize::MAX; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            is_pivot[p] = i;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] != usize::MAX {
                continue;
            }
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of `{v : v * self = 0}` (row vectors).
    pub fn left_kernel_basis(&self) -> Vec<Vec<Elem>> {
        self.transpose().kernel_basis()
    }

    /// Some `x` with `self * x = b`, or `None` when no solution exists.
    pub fn solve(&self, b: &[Elem]) -> Result<Option<Vec<Elem>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let bm = Matrix::from_vec(self.rows, 1, b.to_vec(), &self.field)?;
        let (r, pivots) = self.hstack(&bm).rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(n, &self.field)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.select_cols(&(n..2 * n).collect::<Vec<_>>()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        if self.rows == 0 {
            return true;
        }
        // Square until the exponent reaches the dimension.
        let mut m = self.clone();
        let mut e = 1usize;
        while e < self.rows {
            m = m.mul(&m);
            e *= 2;
            if m.is_zero() {
                return true;
            }
        }
        m.is_zero()
    }
}

/// An incrementally built echelon basis of a subspace of `K^n` (row vectors).
///
/// Optionally tracks how each stored row is expressed through the vectors
/// that were accepted by [`Echelon::insert`], so members of the span can be
/// written in those coordinates.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    len: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
    combos: Option<Vec<Vec<Elem>>>,
}

impl Echelon {
    pub fn new(len: usize, field: &Field) -> Self {
        Echelon {
            field: field.clone(),
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: None,
        }
    }

    pub fn tracking(len: usize, field: &Field) -> Self {
        Echelon {
            combos: Some(Vec::new()),
            ..Self::new(len, field)
        }
    }

    pub fn from_vectors<'a>(
        len: usize,
        field: &Field,
        vs: impl IntoIterator<Item = &'a Vec<Elem>>,
    ) -> Self {
        let mut e = Self::new(len, field);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows, returning the residue and the
    /// multipliers used at each stored row.
    fn reduce_with(&self, v: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        let f = &self.field;
        let mut w = v.to_vec();
        let mut mult = vec![0; self.rows.len()];
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let a = w[p];
            if a == 0 {
                continue;
            }
            mult[k] = a;
            let na = f.neg(a);
            for (x, &y) in w.iter_mut().zip(row).skip(p) {
                if y != 0 {
                    *x = f.mul_add(*x, na, y);
                }
            }
        }
        (w, mult)
    }

    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        self.reduce_with(v).0
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the span grew.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let f = self.field.clone();
        let (mut w, mult) = self.reduce_with(v);
        let Some(p) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[p]);
        for x in w.iter_mut().skip(p) {
            *x = f.mul(*x, inv);
        }
        if let Some(combos) = &mut self.combos {
            // new row = inv * (v - sum mult_k row_k), in accepted-vector coordinates.
            let n_acc = combos.len() + 1;
            let mut c = vec![0; n_acc];
            c[n_acc - 1] = inv;
            for (k, &m) in mult.iter().enumerate() {
                if m == 0 {
                    continue;
                }
                let s = f.neg(f.mul(m, inv));
                for (j, &y) in combos[k].iter().enumerate() {
                    c[j] = f.mul_add(c[j], s, y);
                }
            }
            for old in combos.iter_mut() {
                old.push(0);
            }
            combos.push(c);
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }

    /// Coordinates of `v` with respect to the accepted vectors, if `v` lies in the span.
    /// Requires a tracking echelon.
    pub fn express(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        let combos = self.combos.as_ref().expect("express requires a tracking echelon");
        let f = &self.field;
        let (w, mult) = self.reduce_with(v);
        if w.iter().any(|&x| x != 0) {
            return None;
        }
        let mut out = vec![0; combos.len()];
        for (k, &m) in mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for (o, &y) in out.iter_mut().zip(&combos[k]) {
                if y != 0 {
                    *o = f.mul_add(*o, m, y);
                }
            }
        }
        Some(out)
    }

    /// Echelon rows (a basis of the span).
    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    fn m(rows: &[&[u32]], field: &Field) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), cols, field).unwrap()
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        let f2 = f(2);
        let z = Matrix::zeros(2, 2, &f2);
        assert_eq!(z.kernel_basis(), vec![vec![1, 0], vec![0, 1]]);
        assert!(Matrix::identity(3, &f(5)).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_row_one_one_over_f2() {
        let f2 = f(2);
        let a = m(&[&[1, 1]], &f2);
        // Oracle: enumerate all four vectors of F_2^2.
        let oracle: Vec<Vec<u32>> = (0..4u32)
            .map(|i| vec![i / 2, i % 2])
            .filter(|v| (v[0] + v[1]) % 2 == 0 && v.iter().any(|&x| x != 0))
            .collect();
        assert_eq!(oracle, vec![vec![1, 1]]);
        assert_eq!(a.kernel_basis(), oracle);
    }

    #[test]
    fn solve_examples() {
        let f3 = f(3);
        let id = Matrix::identity(2, &f3);
        assert_eq!(id.solve(&[2, 1]).unwrap(), Some(vec![2, 1]));
        assert_eq!(Matrix::zeros(2, 2, &f3).solve(&[1, 0]).unwrap(), None);
        let a = m(&[&[1, 1], &[0, 1]], &f3);
        // Oracle: enumerate all 9 candidates.
        let sols: Vec<Vec<u32>> = (0..9u32)
            .map(|i| vec![i / 3, i % 3])
            .filter(|x| a.mul_vec(x) == vec![2, 1])
            .collect();
        assert_eq!(sols, vec![vec![1, 1]]);
        assert_eq!(a.solve(&[2, 1]).unwrap(), Some(vec![1, 1]));
        assert!(a.solve(&[1, 1, 1]).is_err());
    }

    #[test]
    fn gf4_rank_one() {
        let g = Field::gf4();
        // (1 w; w w^2): second row is w times the first.
        let a = m(&[&[1, 2], &[2, 3]], &g);
        assert_eq!(a.rank(), 1);
        assert_eq!(Matrix::identity(4, &g).rank(), 4);
        assert_eq!(Matrix::zeros(3, 5, &g).rank(), 0);
    }

    #[test]
    fn rejects_foreign_entries() {
        assert!(matches!(
            Matrix::from_vec(1, 2, vec![0, 7], &f(5)),
            Err(LinalgError::ForeignEntry(7))
        ));
        assert!(Matrix::from_vec(2, 2, vec![0, 1, 1], &f(5)).is_err());
    }

    #[test]
    fn inverse_and_nilpotent() {
        let f5 = f(5);
        let a = m(&[&[2, 1], &[1, 1]], &f5);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let n = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]], &f5);
        assert!(n.is_nilpotent());
        assert!(n.inverse().is_none());
        assert!(!a.is_nilpotent());
    }

    #[test]
    fn echelon_express_roundtrip() {
        let f5 = f(5);
        let vs = [vec![1, 2, 0, 3], vec![0, 1, 4, 4], vec![1, 3, 4, 2]];
        let mut e = Echelon::tracking(4, &f5);
        assert!(e.insert(&vs[0]));
        assert!(e.insert(&vs[1]));
        // third = first + second
        assert!(!e.insert(&vs[2]));
        assert_eq!(e.express(&vs[2]), Some(vec![1, 1]));
        assert_eq!(e.express(&[0, 0, 0, 1]), None);
    }
}
