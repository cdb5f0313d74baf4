//! Subspaces of `K^n` kept in reduced row echelon form.

use super::field::{FieldSpec, Scalar};
use super::matrix::{free_columns, Matrix};

/// A subspace of `K^n`, stored as the rows of its reduced echelon basis.
///
/// The coordinates of a member `v` with respect to [`Subspace::basis`] are
/// its entries at the pivot positions; [`Subspace::complement`] lists the
/// non-pivot positions, whose standard vectors span a fixed complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: (0..ambient).map(|i| unit(field, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn spanned_by(field: FieldSpec, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        if vectors.is_empty() || ambient == 0 {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, ambient, vectors);
        let r = m.rref();
        let rows = (0..r.pivots.len())
            .map(|i| r.matrix.row(i).to_vec())
            .collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots: r.pivots,
        }
    }

    /// Column space of a matrix.
    pub fn image_of(m: &Matrix) -> Self {
        let cols = (0..m.cols()).map(|c| m.column(c)).collect();
        Subspace::spanned_by(m.field(), m.rows(), cols)
    }

    /// Right null space of a matrix.
    pub fn kernel_of(m: &Matrix) -> Self {
        Subspace::spanned_by(m.field(), m.cols(), m.kernel_basis())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient, &self.rows)
    }

    /// Non-pivot positions.
    pub fn complement(&self) -> Vec<usize> {
        free_columns(self.ambient, &self.pivots)
    }

    /// `v` minus its component along the subspace, computed against the pivots.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].neg();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    o.add_mul_assign(&f, r);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Coordinates with respect to [`Subspace::basis`], if `v` is a member.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates of the class of `v` in the quotient, read at [`Subspace::complement`].
    pub fn quotient_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.reduce(v);
        self.complement()
            .into_iter()
            .map(|c| r[c].clone())
            .collect()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut v = self.rows.clone();
        v.extend(other.rows.iter().cloned());
        Subspace::spanned_by(self.field, self.ambient, v)
    }

    pub fn with_vectors(&self, extra: impl IntoIterator<Item = Vec<Scalar>>) -> Subspace {
        let mut v = self.rows.clone();
        v.extend(extra);
        Subspace::spanned_by(self.field, self.ambient, v)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.field, self.ambient);
        }
        if self.is_full() {
            return other.clone();
        }
        if other.is_full() {
            return self.clone();
        }
        // Solve sum a_i u_i - sum b_j w_j = 0.
        let mut cols = self.rows.clone();
        cols.extend(
            other
                .rows
                .iter()
                .map(|w| w.iter().map(Scalar::neg).collect()),
        );
        let m = Matrix::from_columns(self.field, self.ambient, &cols);
        let k = self.rows.len();
        let vecs = m
            .kernel_basis()
            .into_iter()
            .map(|coef| {
                let mut v = vec![self.field.zero(); self.ambient];
                for (a, u) in coef[..k].iter().zip(&self.rows) {
                    for (x, y) in v.iter_mut().zip(u) {
                        x.add_mul_assign(a, y);
                    }
                }
                v
            })
            .collect();
        Subspace::spanned_by(self.field, self.ambient, vecs)
    }

    /// Image under a linear map given as a matrix.
    pub fn map(&self, m: &Matrix) -> Subspace {
        Subspace::spanned_by(
            self.field,
            m.rows(),
            self.rows.iter().map(|r| m.mul_vec(r)).collect(),
        )
    }

    /// Preimage under `m` of `target` (a subspace of the codomain).
    pub fn preimage(m: &Matrix, target: &Subspace) -> Subspace {
        // x with m x in target  <=>  the quotient coordinates of m x vanish.
        let comp = target.complement();
        let mut rows = Vec::with_capacity(comp.len());
        for c in 0..m.cols() {
            let col = m.column(c);
            rows.push(target.quotient_coords(&col));
        }
        let q = Matrix::from_columns(m.field(), comp.len(), &rows);
        Subspace::kernel_of(&q)
    }
}

/// The standard basis vector `e_i` of `K^n`.
pub fn unit(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: FieldSpec, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn intersection_and_sum() {
        let q = FieldSpec::Rational;
        let a = Subspace::spanned_by(q, 3, vec![v(q, &[1, 0, 0]), v(q, &[0, 1, 0])]);
        let b = Subspace::spanned_by(q, 3, vec![v(q, &[0, 1, 1]), v(q, &[1, 1, 1])]);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(q, &[1, 0, 0])));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn quotient_coordinates() {
        let q = FieldSpec::Rational;
        let a = Subspace::spanned_by(q, 3, vec![v(q, &[1, 1, 0])]);
        assert_eq!(a.complement(), vec![1, 2]);
        assert_eq!(a.quotient_coords(&v(q, &[1, 1, 0])), v(q, &[0, 0]));
        assert_eq!(a.quotient_coords(&v(q, &[1, 0, 0])), v(q, &[-1, 0]));
        assert_eq!(a.coords(&v(q, &[2, 2, 0])), Some(v(q, &[2])));
    }

    #[test]
    fn preimage_of_subspace() {
        let q = FieldSpec::Rational;
        let m = Matrix::from_i64(q, &[&[1, 0], &[0, 0]]);
        let t = Subspace::zero(q, 2);
        let pre = Subspace::preimage(&m, &t);
        assert_eq!(pre.dim(), 1);
        assert!(pre.contains(&v(q, &[0, 1])));
    }
}
