//! Dense matrices over a [`FieldSpec`] with deterministic elimination.

use std::fmt;

use super::field::{FieldSpec, Scalar};
use super::poly::Poly;
use crate::error::{Error, Result};

/// Row-major dense matrix. Linear maps act on column vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn scalar(field: FieldSpec, n: usize, value: &Scalar) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = value.clone();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix {
            field,
            rows: r,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, cols, rows)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
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

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_mul_assign(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (k, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        o.add_mul_assign(a, x);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip(other, Scalar::add)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip(other, Scalar::sub)
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(s)).collect(),
        }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                a.add_mul_assign(s, b);
            }
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut m = Matrix::zeros(self.field, self.rows, cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.data[r * cols + c] = self.get(r, c).clone();
            }
            for c in 0..other.cols {
                m.data[r * cols + self.cols + c] = other.get(r, c).clone();
            }
        }
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block-diagonal sum.
    pub fn block_diag(field: FieldSpec, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.data[(r0 + r) * cols + c0 + c] = b.get(r, c).clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Reduced row echelon form with leftmost-column, topmost-row pivoting.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        Rref { matrix: m, pivots }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.data[r * cols + c].inv().expect("nonzero pivot");
            for j in c..cols {
                let v = self.data[r * cols + j].mul(&inv);
                self.data[r * cols + j] = v;
            }
            let pivot_row: Vec<Scalar> = self.data[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c].clone();
                if f.is_zero() {
                    continue;
                }
                let nf = f.neg();
                for (off, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        self.data[i * cols + c + off].add_mul_assign(&nf, pv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space, one vector per free column in increasing order.
    ///
    /// Each basis vector is 1 at its own free column and 0 at every other free
    /// column, so the coordinates of a null vector are its free-column entries.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let Rref { matrix, pivots } = self.rref();
        let free = free_columns(self.cols, &pivots);
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = matrix.get(row, f).neg();
                }
                v
            })
            .collect()
    }

    /// A solution of `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {} but matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = self.hstack(&Matrix::from_columns(self.field, self.rows, &[b.to_vec()]));
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = matrix.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.data[r * n + c] = matrix.get(r, n + c).clone();
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows).is_zero()
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t = t.add(self.get(i, i));
        }
        t
    }

    /// Characteristic polynomial `det(x I - self)` via Hessenberg reduction.
    pub fn charpoly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "characteristic polynomial of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let f = self.field;
        let mut h = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(p) = (j + 1..n).find(|&i| !h.get(i, j).is_zero()) else {
                continue;
            };
            if p != j + 1 {
                for c in 0..n {
                    h.data.swap(p * n + c, (j + 1) * n + c);
                }
                for r in 0..n {
                    h.data.swap(r * n + p, r * n + j + 1);
                }
            }
            let piv = h.get(j + 1, j).clone();
            for k in j + 2..n {
                let u = h.get(k, j).div(&piv).unwrap();
                if u.is_zero() {
                    continue;
                }
                let nu = u.neg();
                for c in 0..n {
                    let v = h.get(j + 1, c).clone();
                    h.data[k * n + c].add_mul_assign(&nu, &v);
                }
                for r in 0..n {
                    let v = h.get(r, k).clone();
                    h.data[r * n + j + 1].add_mul_assign(&u, &v);
                }
            }
        }
        // p[m] = char poly of leading m x m block.
        let mut p: Vec<Poly> = vec![Poly::constant(f.one())];
        for m in 1..=n {
            let diag = h.get(m - 1, m - 1).clone();
            let mut next = Poly::linear_root(&diag).mul(&p[m - 1]);
            let mut prod = f.one();
            for i in (1..m).rev() {
                prod = prod.mul(h.get(i, i - 1));
                let coef = h.get(i - 1, m - 1).mul(&prod);
                if !coef.is_zero() {
                    next = next.sub(&p[i - 1].scale(&coef));
                }
            }
            p.push(next);
        }
        Ok(p.pop().unwrap())
    }

    /// The unique `λ` with `self - λI` nilpotent, if any.
    pub fn unique_eigenvalue(&self) -> Result<Option<Scalar>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "eigenvalue of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let f = self.field;
        if n == 0 {
            return Ok(None);
        }
        let candidate = match f.characteristic() {
            0 => self.trace().div(&f.from_i64(n as i64)),
            p if !(n as u64).is_multiple_of(p) => self.trace().div(&f.from_i64(n as i64)),
            p => {
                // (x-λ)^n = (x^q - λ)^m with n = q m, q a power of p, p ∤ m.
                let mut q = 1usize;
                while ((n / q) as u64).is_multiple_of(p) {
                    q *= p as usize;
                }
                let m = n / q;
                let c = self.charpoly()?;
                c.coefficient(n - q).neg().div(&f.from_i64(m as i64))
            }
        };
        let Some(lambda) = candidate else {
            return Ok(None);
        };
        let shifted = self.sub(&Matrix::scalar(f, n, &lambda));
        Ok(shifted.is_nilpotent().then_some(lambda))
    }
}

pub(crate) fn free_columns(cols: usize, pivots: &[usize]) -> Vec<usize> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols).filter(|&c| !is_pivot[c]).collect()
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            write!(f, "\n  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(q(), 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);

        let m = Matrix::from_i64(q(), &[&[2, 4], &[1, 2]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(q(), &[&[1, 2], &[0, 0]]));
        assert_eq!(r.pivots, vec![0]);

        let m = Matrix::from_i64(f2(), &[&[1, 1], &[1, 1]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(f2(), &[&[1, 1], &[0, 0]]));
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let m = Matrix::from_i64(f2(), &[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![f2().one(), f2().one()]]);
        assert!(Matrix::identity(q(), 3).kernel_basis().is_empty());
        let z = Matrix::zeros(q(), 2, 3);
        let k = z.kernel_basis();
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(x.is_one(), i == j);
            }
        }
    }

    #[test]
    fn solve_examples() {
        let m = Matrix::from_i64(q(), &[&[2]]);
        let x = m.solve(&[q().one()]).unwrap().unwrap();
        assert_eq!(x[0], q().parse_scalar("1/2").unwrap());
        let z = Matrix::from_i64(q(), &[&[0]]);
        assert!(z.solve(&[q().one()]).unwrap().is_none());
        let b: Vec<Scalar> = [3, -1, 7].iter().map(|&v| q().from_i64(v)).collect();
        assert_eq!(Matrix::identity(q(), 3).solve(&b).unwrap().unwrap(), b);
        assert!(m.solve(&[q().one(), q().one()]).is_err());
    }

    #[test]
    fn eigenvalue_examples() {
        let id = Matrix::identity(q(), 3);
        assert!(id.unique_eigenvalue().unwrap().unwrap().is_one());
        let n = Matrix::from_i64(q(), &[&[0, 1], &[0, 0]]);
        assert!(n.unique_eigenvalue().unwrap().unwrap().is_zero());
        let d = Matrix::from_i64(q(), &[&[1, 0], &[0, 2]]);
        assert!(d.unique_eigenvalue().unwrap().is_none());
        assert!(Matrix::zeros(q(), 2, 3).unique_eigenvalue().is_err());
    }

    #[test]
    fn eigenvalue_in_characteristic_dividing_size() {
        // 3 + nilpotent Jordan block of size 5 over F_5: the trace gives no information.
        let f5 = FieldSpec::prime(5).unwrap();
        let mut m = Matrix::scalar(f5, 5, &f5.from_i64(3));
        for i in 0..4 {
            m.set(i, i + 1, f5.one());
        }
        assert_eq!(m.unique_eigenvalue().unwrap(), Some(f5.from_i64(3)));
        let d = Matrix::from_i64(
            f5,
            &[
                &[1, 0, 0, 0, 0],
                &[0, 2, 0, 0, 0],
                &[0, 0, 2, 0, 0],
                &[0, 0, 0, 2, 0],
                &[0, 0, 0, 0, 2],
            ],
        );
        assert!(d.unique_eigenvalue().unwrap().is_none());
    }

    #[test]
    fn charpoly_of_companion() {
        // Companion matrix of x^3 - 2x^2 + 3x - 5.
        let m = Matrix::from_i64(q(), &[&[0, 0, 5], &[1, 0, -3], &[0, 1, 2]]);
        let c = m.charpoly().unwrap();
        let expect: Vec<Scalar> = [-5, 3, -2, 1].iter().map(|&v| q().from_i64(v)).collect();
        assert_eq!(c.coefficients(), expect.as_slice());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(q(), &[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(q(), 2));
        assert!(Matrix::from_i64(q(), &[&[1, 2], &[2, 4]])
            .inverse()
            .is_none());
    }
}
