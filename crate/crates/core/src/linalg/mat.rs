use std::fmt;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Dense matrix over a [`Field`], row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Mat::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Mat {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            data.extend(row);
        }
        Mat { field, rows: r, cols, data }
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Mat::from_rows(field, cols, rows)
    }

    pub fn from_columns(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Mat {
        let mut m = Mat::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let data = self.data.iter().map(|a| a * s).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &Scalar, other: &Mat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a = &*a + &(s * b);
            }
        }
    }

    pub fn pow(&self, k: usize) -> Mat {
        assert!(self.is_square());
        let mut r = Mat::identity(self.field, self.rows);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let rows = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend_from_slice(other.row(r));
                row
            })
            .collect();
        Mat::from_rows(self.field, self.cols + other.cols, rows)
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    /// Reduced row-echelon form with first-nonzero pivoting in column order.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m);
        Rref { rank: pivots.len(), matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space, as the columns of the returned matrix.
    pub fn kernel_basis(&self) -> Mat {
        let cols = self.kernel_vectors();
        Mat::from_columns(self.field, self.cols, &cols)
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn kernel_vectors(&self) -> Vec<Vec<Scalar>> {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -matrix.get(r, free);
            }
            out.push(v);
        }
        out
    }

    /// Basis of `{y : y * self = 0}`.
    pub fn left_kernel_vectors(&self) -> Vec<Vec<Scalar>> {
        self.transpose().kernel_vectors()
    }

    /// Echelon basis of the row space.
    pub fn row_space(&self) -> Vec<Vec<Scalar>> {
        let r = self.rref();
        (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect()
    }

    /// Solves `self * x = b`; `Ok(None)` signals an inconsistent system.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!("rhs has {} entries, matrix has {} rows", b.len(), self.rows)));
        }
        let aug = self.hstack(&Mat::from_columns(self.field, self.rows, &[b.to_vec()]));
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = matrix.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Solves `x * self = b` for a row vector `x`.
    pub fn solve_left(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        self.transpose().solve(b)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(self.field, n));
        let r = aug.rref();
        if r.pivots.len() < n || r.pivots[..n].iter().copied().ne(0..n) {
            return None;
        }
        let mut inv = Mat::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.matrix.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows.max(1)).is_zero()
    }
}

/// Row-reduces in place and returns pivot columns.
pub(crate) fn rref_in_place(m: &mut Mat) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = m.get(r, c).inv().expect("pivot nonzero");
        for j in c..cols {
            let idx = r * cols + j;
            m.data[idx] = &m.data[idx] * &inv;
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = m.get(r, j);
                if v.is_zero() {
                    continue;
                }
                let d = &f * v;
                let idx = i * cols + j;
                m.data[idx] = &m.data[idx] - &d;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `v * m` for a row vector `v`.
pub fn vec_mat(v: &[Scalar], m: &Mat) -> Vec<Scalar> {
    assert_eq!(v.len(), m.rows());
    let mut out = vec![m.field().zero(); m.cols()];
    for (i, a) in v.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            let b = m.get(i, j);
            if !b.is_zero() {
                *o = &*o + &(a * b);
            }
        }
    }
    out
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `a + s * b`
pub fn vec_axpy(a: &mut [Scalar], s: &Scalar, b: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = &*x + &(s * y);
        }
    }
}
