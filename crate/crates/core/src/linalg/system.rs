//! Linear systems whose unknowns are matrices.
//!
//! Intertwining conditions, splittings and naturality squares are all equations of the form
//! `Σ_k A_k · Z_k · B_k = C`; this module turns them into scalar rows and row-reduces them
//! incrementally.

use super::echelon::EchelonForm;
use super::field::FieldSpec;
use super::matrix::Matrix;
use super::LinalgError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockId(usize);

/// One summand `left · Z · right` of an equation; `None` factors mean identity.
pub struct Term<'a> {
    pub block: BlockId,
    pub left: Option<&'a Matrix>,
    pub right: Option<&'a Matrix>,
}

impl<'a> Term<'a> {
    pub fn new(block: BlockId, left: Option<&'a Matrix>, right: Option<&'a Matrix>) -> Self {
        Self { block, left, right }
    }
}

#[derive(Clone, Debug)]
pub struct LinearSystem {
    field: FieldSpec,
    shapes: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    rows: Vec<Vec<super::field::Scalar>>,
}

impl LinearSystem {
    pub fn new(field: FieldSpec) -> Self {
        Self {
            field,
            shapes: Vec::new(),
            offsets: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn add_block(&mut self, rows: usize, cols: usize) -> BlockId {
        assert!(self.rows.is_empty(), "blocks must be declared before equations");
        let offset = self.num_vars();
        self.shapes.push((rows, cols));
        self.offsets.push(offset);
        BlockId(self.shapes.len() - 1)
    }

    pub fn num_vars(&self) -> usize {
        self.shapes.iter().map(|(r, c)| r * c).sum()
    }

    pub fn num_equations(&self) -> usize {
        self.rows.len()
    }

    /// Adds `Σ terms = rhs` (rhs `None` means zero), entrywise.
    pub fn add_equation(&mut self, terms: &[Term<'_>], rhs: Option<&Matrix>) -> Result<(), LinalgError> {
        let first = terms.first().ok_or(LinalgError::Empty("equation"))?;
        let (out_rows, out_cols) = self.term_shape(first)?;
        for t in terms {
            if self.term_shape(t)? != (out_rows, out_cols) {
                return Err(LinalgError::ShapeMismatch {
                    context: "equation terms",
                    left: (out_rows, out_cols),
                    right: self.term_shape(t)?,
                });
            }
        }
        if let Some(c) = rhs {
            if c.shape() != (out_rows, out_cols) {
                return Err(LinalgError::ShapeMismatch {
                    context: "equation rhs",
                    left: (out_rows, out_cols),
                    right: c.shape(),
                });
            }
        }
        let n = self.num_vars();
        let zero = self.field.zero();
        for p in 0..out_rows {
            for q in 0..out_cols {
                let mut row = vec![zero.clone(); n + 1];
                for t in terms {
                    let (br, bc) = self.shapes[t.block.0];
                    let off = self.offsets[t.block.0];
                    // coefficient of Z[i, j] in (A Z B)[p, q] is A[p, i] · B[j, q]
                    let is: Vec<(usize, super::field::Scalar)> = match t.left {
                        None => vec![(p, self.field.one())],
                        Some(a) => (0..br)
                            .filter(|&i| !a.get(p, i).is_zero())
                            .map(|i| (i, a.get(p, i).clone()))
                            .collect(),
                    };
                    let js: Vec<(usize, super::field::Scalar)> = match t.right {
                        None => vec![(q, self.field.one())],
                        Some(b) => (0..bc)
                            .filter(|&j| !b.get(j, q).is_zero())
                            .map(|j| (j, b.get(j, q).clone()))
                            .collect(),
                    };
                    for (i, a) in &is {
                        for (j, b) in &js {
                            let idx = off + i * bc + j;
                            row[idx] = &row[idx] + &(a * b);
                        }
                    }
                }
                if let Some(c) = rhs {
                    row[n] = c.get(p, q).clone();
                }
                if row.iter().any(|v| !v.is_zero()) {
                    self.rows.push(row);
                }
            }
        }
        Ok(())
    }

    fn term_shape(&self, t: &Term<'_>) -> Result<(usize, usize), LinalgError> {
        let (br, bc) = *self
            .shapes
            .get(t.block.0)
            .ok_or(LinalgError::Empty("unknown block"))?;
        let rows = match t.left {
            None => br,
            Some(a) if a.cols() == br => a.rows(),
            Some(a) => {
                return Err(LinalgError::ShapeMismatch {
                    context: "left factor",
                    left: a.shape(),
                    right: (br, bc),
                })
            }
        };
        let cols = match t.right {
            None => bc,
            Some(b) if b.rows() == bc => b.cols(),
            Some(b) => {
                return Err(LinalgError::ShapeMismatch {
                    context: "right factor",
                    left: (br, bc),
                    right: b.shape(),
                })
            }
        };
        Ok((rows, cols))
    }

    fn echelon(&self) -> EchelonForm {
        let mut e = EchelonForm::new(self.field, self.num_vars() + 1);
        for r in &self.rows {
            e.insert(r.clone());
        }
        e
    }

    fn unpack(&self, x: &[super::field::Scalar]) -> Vec<Matrix> {
        self.shapes
            .iter()
            .zip(&self.offsets)
            .map(|(&(r, c), &off)| {
                Matrix::from_fn(self.field, r, c, |i, j| x[off + i * c + j].clone())
            })
            .collect()
    }

    /// A particular solution (free variables zero), one matrix per block, or `None`.
    pub fn solve(&self) -> Option<Vec<Matrix>> {
        let e = self.echelon();
        let n = self.num_vars();
        if e.pivots().contains(&n) {
            return None;
        }
        let mut x = vec![self.field.zero(); n];
        for (p, row) in e.pivot_rows() {
            x[p] = row[n].clone();
        }
        Some(self.unpack(&x))
    }

    /// Basis of the homogeneous solution space, each element given blockwise.
    pub fn null_space(&self) -> Vec<Vec<Matrix>> {
        let e = self.echelon();
        e.null_space(self.num_vars())
            .iter()
            .map(|x| self.unpack(x))
            .collect()
    }
}
