use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Dense complex matrix stored row-major.
///
/// Most of the crate works with square matrices; the rectangular case exists
/// for isometries (compression bases, dilation maps).
#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows, rejecting ragged input and non-finite entries.
    pub fn from_rows(rows: Vec<Vec<C64>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {c}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        let m = Matrix {
            rows: r,
            cols: c,
            data,
        };
        m.check_finite()?;
        Ok(m)
    }

    /// Real-valued convenience constructor, mostly for tests and fixtures.
    pub fn from_real(rows: &[&[f64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn from_diag(diag: &[C64]) -> Self {
        let n = diag.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        Matrix::from_diag(&diag.iter().map(|&x| C64::new(x, 0.0)).collect::<Vec<_>>())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix.
    pub fn dim(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn check_finite(&self) -> Result<()> {
        match self
            .data
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            Some(p) => Err(Error::NonFinite(p / self.cols.max(1), p % self.cols.max(1))),
            None => Ok(()),
        }
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn diag(&self) -> Vec<C64> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)])
            .collect()
    }

    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for (l, &a) in self.row(i).iter().enumerate() {
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for (o, &b) in out_row.iter_mut().zip(rhs.row(l)) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[C64]) -> Result<Vec<C64>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {}x{} matrix",
                x.len(),
                self.rows,
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn conj(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Kronecker product with the standard block layout: block (i, j) is `self[(i, j)] * rhs`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let (br, bc) = (rhs.rows, rhs.cols);
        Matrix::from_fn(self.rows * br, self.cols * bc, |i, j| {
            self[(i / br, j / bc)] * rhs[(i % br, j % bc)]
        })
    }

    /// Block-diagonal direct sum `self ⊕ rhs`.
    pub fn direct_sum(&self, rhs: &Matrix) -> Matrix {
        let (r0, c0) = (self.rows, self.cols);
        Matrix::from_fn(r0 + rhs.rows, c0 + rhs.cols, |i, j| {
            if i < r0 && j < c0 {
                self[(i, j)]
            } else if i >= r0 && j >= c0 {
                rhs[(i - r0, j - c0)]
            } else {
                C64::new(0.0, 0.0)
            }
        })
    }

    pub fn scale(&self, s: C64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Matrix {
        self.scale(C64::new(s, 0.0))
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(C64, C64) -> C64) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// `self + s·I` for a square matrix.
    pub fn shift_diag(&self, s: C64) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] += s;
        }
        m
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> C64 {
        self.diag().into_iter().sum()
    }

    /// `||A - A*||_F`.
    pub fn hermitian_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows;
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// Integer power of a square matrix by repeated multiplication.
    pub fn pow(&self, k: u32) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(n);
        for _ in 0..k {
            acc = acc.matmul(self)?;
        }
        Ok(acc)
    }

    /// Columns `0..cols` of a matrix.
    pub fn leading_columns(&self, cols: usize) -> Matrix {
        Matrix::from_fn(self.rows, cols.min(self.cols), |i, j| self[(i, j)])
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for z in self.row(i) {
                write!(f, "{:>10.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shift::shift_matrix;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn identity_is_neutral() {
        let a = Matrix::from_fn(3, 3, |i, j| c(i as f64 - 1.0, (j * j) as f64));
        assert_eq!(Matrix::identity(3).matmul(&a).unwrap(), a);
        assert_eq!(a.matmul(&Matrix::identity(3)).unwrap(), a);
    }

    #[test]
    fn shift_squares_to_zero() {
        let s = shift_matrix(2);
        assert_eq!(s.matmul(&s).unwrap(), Matrix::zeros(2, 2));
    }

    #[test]
    fn shift_times_adjoint() {
        let s = shift_matrix(3);
        let p = s.matmul(&s.adjoint()).unwrap();
        assert_eq!(p, Matrix::from_real_diag(&[0.0, 1.0, 1.0]));
    }

    #[test]
    fn matmul_rejects_mismatch() {
        let a = Matrix::zeros(2, 3);
        let b = Matrix::zeros(2, 3);
        assert!(matches!(a.matmul(&b), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn adjoint_cases() {
        let d = Matrix::from_diag(&[c(0.0, 1.0), c(2.0, 0.0)]);
        assert_eq!(d.adjoint(), Matrix::from_diag(&[c(0.0, -1.0), c(2.0, 0.0)]));

        let s = shift_matrix(4).adjoint();
        for i in 0..4 {
            for j in 0..4 {
                let want = if j == i + 1 { 1.0 } else { 0.0 };
                assert_eq!(s[(i, j)], c(want, 0.0));
            }
        }

        let a = Matrix::from_fn(3, 2, |i, j| c(i as f64 * 0.3, -(j as f64) + 0.7));
        assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn kron_layout() {
        let b = Matrix::from_fn(2, 2, |i, j| c((i + 2 * j) as f64, 1.0));
        assert_eq!(Matrix::identity(1).kron(&b), b);

        let k = Matrix::identity(2).kron(&shift_matrix(2));
        let want = shift_matrix(2).direct_sum(&shift_matrix(2));
        assert_eq!(k, want);
    }

    #[test]
    fn from_rows_validates() {
        assert!(matches!(
            Matrix::from_rows(vec![vec![c(1.0, 0.0)], vec![]]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            Matrix::from_rows(vec![vec![c(f64::NAN, 0.0)]]),
            Err(Error::NonFinite(0, 0))
        ));
    }
}
