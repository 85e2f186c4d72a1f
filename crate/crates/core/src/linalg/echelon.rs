//! Row reduction and everything derived from it: rank, solve, kernel, quotient.

use std::collections::BTreeMap;

use super::field::{FieldSpec, Scalar};
use super::matrix::Matrix;
use super::LinalgError;

/// Incrementally maintained reduced row-echelon form.
///
/// Rows are inserted one at a time and kept mutually reduced, so at any point the stored rows
/// are exactly the nonzero rows of the RREF of everything inserted so far.
#[derive(Clone, Debug)]
pub struct EchelonForm {
    field: FieldSpec,
    width: usize,
    rows: BTreeMap<usize, Vec<Scalar>>,
}

impl EchelonForm {
    pub fn new(field: FieldSpec, width: usize) -> Self {
        Self {
            field,
            width,
            rows: BTreeMap::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// Reduces `row` against the stored pivots in place.
    fn reduce(&self, row: &mut [Scalar]) {
        for (&p, prow) in &self.rows {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (c, v) in prow.iter().enumerate().skip(p) {
                if !v.is_zero() {
                    row[c] = &row[c] - &(&factor * v);
                }
            }
        }
    }

    /// Returns true iff `row` lies in the current row space.
    pub fn contains(&self, row: &[Scalar]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(Scalar::is_zero)
    }

    /// Inserts a row; returns the new pivot column if the rank grew.
    pub fn insert(&mut self, mut row: Vec<Scalar>) -> Option<usize> {
        debug_assert_eq!(row.len(), self.width);
        self.reduce(&mut row);
        let p = row.iter().position(|v| !v.is_zero())?;
        let inv = row[p].inv().expect("nonzero pivot");
        for v in row.iter_mut().skip(p) {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        for prow in self.rows.values_mut() {
            if prow[p].is_zero() {
                continue;
            }
            let factor = prow[p].clone();
            for (c, v) in row.iter().enumerate().skip(p) {
                if !v.is_zero() {
                    prow[c] = &prow[c] - &(&factor * v);
                }
            }
        }
        self.rows.insert(p, row);
        Some(p)
    }

    pub fn pivot_rows(&self) -> impl Iterator<Item = (usize, &Vec<Scalar>)> {
        self.rows.iter().map(|(p, r)| (*p, r))
    }

    /// The RREF as a matrix with `rows` rows (zero rows appended at the bottom).
    pub fn to_matrix(&self, rows: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows.max(self.rank()), self.width);
        for (i, row) in self.rows.values().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m.set(i, c, v.clone());
                }
            }
        }
        m
    }

    /// Basis of the null space of the first `ncols` columns, one vector per free column in
    /// increasing order. Pivots at or beyond `ncols` are ignored.
    pub fn null_space(&self, ncols: usize) -> Vec<Vec<Scalar>> {
        let pivots: Vec<(usize, &Vec<Scalar>)> =
            self.rows.iter().filter(|(p, _)| **p < ncols).map(|(p, r)| (*p, r)).collect();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; ncols];
            for (p, _) in &pivots {
                v[*p] = true;
            }
            v
        };
        (0..ncols)
            .filter(|c| !is_pivot[*c])
            .map(|free| {
                let mut x = vec![self.field.zero(); ncols];
                x[free] = self.field.one();
                for (p, row) in &pivots {
                    if !row[free].is_zero() {
                        x[*p] = -&row[free];
                    }
                }
                x
            })
            .collect()
    }
}

fn echelon_of(m: &Matrix) -> EchelonForm {
    let mut e = EchelonForm::new(m.field(), m.cols());
    for r in 0..m.rows() {
        let row = m.row(r);
        if row.iter().any(|v| !v.is_zero()) {
            e.insert(row.to_vec());
        }
    }
    e
}

/// Reduced row-echelon form and its pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let e = echelon_of(m);
    (e.to_matrix(m.rows()), e.pivots())
}

pub fn rank(m: &Matrix) -> usize {
    echelon_of(m).rank()
}

/// One solution `x` of `a·x = b` with free variables set to zero, or `None` if infeasible.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>, LinalgError> {
    if a.rows() != b.rows() {
        return Err(LinalgError::DimensionMismatch {
            context: "solve: row counts",
            expected: a.rows(),
            found: b.rows(),
        });
    }
    if a.field() != b.field() {
        return Err(LinalgError::FieldMismatch(a.field(), b.field()));
    }
    let aug = Matrix::hstack(&[a, b])?;
    let e = echelon_of(&aug);
    let n = a.cols();
    if e.pivots().iter().any(|&p| p >= n) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(a.field(), n, b.cols());
    for (p, row) in e.pivot_rows() {
        for j in 0..b.cols() {
            x.set(p, j, row[n + j].clone());
        }
    }
    Ok(Some(x))
}

/// Canonical null-space basis as the columns of the returned `cols(m) × nullity` matrix.
pub fn kernel(m: &Matrix) -> Matrix {
    let e = echelon_of(m);
    let basis = e.null_space(m.cols());
    Matrix::from_columns(m.field(), m.cols(), &basis)
}

/// Projection onto and section from the quotient `k^ambient / span(subspace columns)`.
///
/// The complement is spanned by the standard basis vectors at non-pivot coordinates of the
/// subspace's echelon form. `subspace` may be any spanning set, not only a basis.
pub fn quotient(
    field: FieldSpec,
    ambient_dim: usize,
    subspace: &Matrix,
) -> Result<(Matrix, Matrix), LinalgError> {
    if subspace.rows() != ambient_dim {
        return Err(LinalgError::DimensionMismatch {
            context: "quotient: subspace vectors",
            expected: ambient_dim,
            found: subspace.rows(),
        });
    }
    let mut e = EchelonForm::new(field, ambient_dim);
    for c in 0..subspace.cols() {
        let v = subspace.col(c);
        if v.iter().any(|x| !x.is_zero()) {
            e.insert(v);
        }
    }
    let pivots = e.pivots();
    let mut is_pivot = vec![false; ambient_dim];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ambient_dim).filter(|c| !is_pivot[*c]).collect();
    // v = Σ a_p row_p + Σ c_f e_f with a_p = v_p, hence c_f = v_f − Σ_p v_p row_p[f].
    let mut projection = Matrix::zeros(field, free.len(), ambient_dim);
    for (i, &f) in free.iter().enumerate() {
        projection.set(i, f, field.one());
        for (p, row) in e.pivot_rows() {
            if !row[f].is_zero() {
                projection.set(i, p, -&row[f]);
            }
        }
    }
    let mut section = Matrix::zeros(field, ambient_dim, free.len());
    for (i, &f) in free.iter().enumerate() {
        section.set(f, i, field.one());
    }
    Ok((projection, section))
}

/// Whether the columns of `m` are linearly independent.
pub fn has_full_column_rank(m: &Matrix) -> bool {
    rank(m) == m.cols()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::gf(p)
    }

    #[test]
    fn rref_duplicate_rows_gf2() {
        let m = Matrix::from_i64(gf(2), &[vec![1, 1], vec![1, 1]]);
        let (r, piv) = rref(&m);
        assert_eq!(r, Matrix::from_i64(gf(2), &[vec![1, 1], vec![0, 0]]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn rref_identity_is_fixed() {
        let q = FieldSpec::rationals();
        let id = Matrix::identity(q, 3);
        let (r, piv) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1, 2]);
    }

    #[test]
    fn rref_scaled_rows_over_q() {
        let q = FieldSpec::rationals();
        let m = Matrix::from_i64(q, &[vec![2, 4], vec![1, 2]]);
        let (r, piv) = rref(&m);
        assert_eq!(r, Matrix::from_i64(q, &[vec![1, 2], vec![0, 0]]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn solve_examples() {
        let q = FieldSpec::rationals();
        let x = solve(&Matrix::from_i64(q, &[vec![2]]), &Matrix::from_i64(q, &[vec![4]]))
            .unwrap()
            .unwrap();
        assert_eq!(x, Matrix::from_i64(q, &[vec![2]]));

        let none = solve(
            &Matrix::from_i64(q, &[vec![1], vec![1]]),
            &Matrix::from_i64(q, &[vec![1], vec![0]]),
        )
        .unwrap();
        assert!(none.is_none());

        let x = solve(
            &Matrix::from_i64(gf(3), &[vec![1, 1]]),
            &Matrix::from_i64(gf(3), &[vec![2]]),
        )
        .unwrap()
        .unwrap();
        assert_eq!(x, Matrix::from_i64(gf(3), &[vec![2], vec![0]]));
    }

    #[test]
    fn solve_rejects_row_mismatch() {
        let q = FieldSpec::rationals();
        let err = solve(&Matrix::identity(q, 2), &Matrix::identity(q, 3)).unwrap_err();
        assert!(matches!(err, LinalgError::DimensionMismatch { .. }));
    }

    #[test]
    fn kernel_examples() {
        let q = FieldSpec::rationals();
        assert_eq!(kernel(&Matrix::identity(q, 3)).cols(), 0);
        assert_eq!(kernel(&Matrix::zeros(q, 2, 2)).cols(), 2);
        let k = kernel(&Matrix::from_i64(gf(2), &[vec![1, 1]]));
        assert_eq!(k, Matrix::from_i64(gf(2), &[vec![1], vec![1]]));
    }

    #[test]
    fn quotient_examples() {
        let q = FieldSpec::rationals();
        let (p, s) = quotient(q, 2, &Matrix::from_i64(q, &[vec![1], vec![0]])).unwrap();
        assert_eq!(p, Matrix::from_i64(q, &[vec![0, 1]]));
        assert_eq!(s.cols(), 1);

        let (p, _) = quotient(q, 2, &Matrix::identity(q, 2)).unwrap();
        assert_eq!(p.rows(), 0);

        let f = gf(3);
        let sub = Matrix::from_i64(f, &[vec![1], vec![1], vec![0]]);
        let (p, s) = quotient(f, 3, &sub).unwrap();
        assert_eq!(p.rows(), 2);
        assert!(p.mul(&s).unwrap().is_identity());
        assert!(p.mul(&sub).unwrap().is_zero());
    }

    #[test]
    fn quotient_rejects_wrong_ambient() {
        let q = FieldSpec::rationals();
        assert!(quotient(q, 3, &Matrix::identity(q, 2)).is_err());
    }
}
