use std::fmt;

use serde_json::Value;

use super::field::{FieldSpec, Scalar};
use super::LinalgError;

/// Dense row-major matrix over an exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_vec(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        data: Vec<Scalar>,
    ) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                context: "from_vec",
                expected: rows * cols,
                found: data.len(),
            });
        }
        if let Some(bad) = data.iter().find(|s| s.field() != field) {
            return Err(LinalgError::FieldMismatch(field, bad.field()));
        }
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Column vector from a slice of scalars.
    pub fn column(field: FieldSpec, v: &[Scalar]) -> Self {
        Self::from_fn(field, v.len(), 1, |i, _| v[i].clone())
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        Self::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
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

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-self.field.one())
    }

    fn check_same_shape(&self, other: &Matrix, context: &'static str) -> Result<(), LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::ShapeMismatch {
                context,
                left: self.shape(),
                right: other.shape(),
            });
        }
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_shape(other, "add")?;
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_shape(other, "sub")?;
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                context: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(self.field, other.field));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
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
        Ok(out)
    }

    /// Matrix-vector product with a plain coordinate slice.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "apply: length mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Kronecker product `self ⊗ other` with row index `i * other.rows + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r2, c2) = other.shape();
        Matrix::from_fn(self.field, self.rows * r2, self.cols * c2, |r, c| {
            let a = self.get(r / r2, c / c2);
            if a.is_zero() {
                return self.field.zero();
            }
            a * other.get(r % r2, c % c2)
        })
    }

    pub fn hstack(blocks: &[&Matrix]) -> Result<Matrix, LinalgError> {
        let first = blocks.first().ok_or(LinalgError::Empty("hstack"))?;
        let rows = first.rows;
        let field = first.field;
        if let Some(b) = blocks.iter().find(|b| b.rows != rows) {
            return Err(LinalgError::ShapeMismatch {
                context: "hstack",
                left: first.shape(),
                right: b.shape(),
            });
        }
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut offset = 0;
        for b in blocks {
            for r in 0..rows {
                for c in 0..b.cols {
                    out.data[r * cols + offset + c] = b.get(r, c).clone();
                }
            }
            offset += b.cols;
        }
        Ok(out)
    }

    pub fn vstack(blocks: &[&Matrix]) -> Result<Matrix, LinalgError> {
        let first = blocks.first().ok_or(LinalgError::Empty("vstack"))?;
        let cols = first.cols;
        if let Some(b) = blocks.iter().find(|b| b.cols != cols) {
            return Err(LinalgError::ShapeMismatch {
                context: "vstack",
                left: first.shape(),
                right: b.shape(),
            });
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend(b.data.iter().cloned());
        }
        Ok(Matrix {
            field: first.field,
            rows,
            cols,
            data,
        })
    }

    pub fn block_diag(field: FieldSpec, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c).clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |r, c| {
            self.get(r, cols[c]).clone()
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |r, c| {
            self.get(rows[r], c).clone()
        })
    }

    /// Serialized form: array of row arrays.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|r| Value::Array(self.row(r).iter().map(Scalar::to_json).collect()))
                .collect(),
        )
    }

    /// Parses an array of row arrays. `cols` disambiguates the shape of matrices without rows.
    pub fn from_json(field: FieldSpec, v: &Value, cols: Option<usize>) -> Result<Matrix, LinalgError> {
        let rows = v
            .as_array()
            .ok_or_else(|| LinalgError::BadEntry(format!("expected array of rows, got {v}")))?;
        let ncols = match rows.first() {
            Some(r) => r
                .as_array()
                .ok_or_else(|| LinalgError::BadEntry(format!("expected row array, got {r}")))?
                .len(),
            None => cols.unwrap_or(0),
        };
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| LinalgError::BadEntry(format!("expected row array, got {row}")))?;
            if row.len() != ncols {
                return Err(LinalgError::DimensionMismatch {
                    context: "ragged matrix row",
                    expected: ncols,
                    found: row.len(),
                });
            }
            for e in row {
                data.push(field.parse_value(e)?);
            }
        }
        Matrix::from_vec(field, rows.len(), ncols, data)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (c, v) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
