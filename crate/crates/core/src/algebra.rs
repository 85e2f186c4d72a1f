//! Finite-dimensional associative unital algebras given by structure constants.

use std::sync::Arc;

use thiserror::Error;

use crate::linalg::{has_full_column_rank, FieldSpec, LinalgError, Matrix, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit does not act as identity on basis element {0}")]
    BadUnit(usize),
    #[error("malformed structure constants: {0}")]
    Malformed(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("action of group element {0} is not a unital algebra automorphism")]
    NotAnAutomorphism(usize),
    #[error("action is not a group homomorphism at ({0}, {1})")]
    NotAnAction(usize, usize),
    #[error("algebras live over different fields: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("embedding is not injective")]
    NotInjective,
    #[error("embedding does not send unit to unit")]
    NotUnital,
    #[error("embedding is not multiplicative on basis pair ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// An algebra with basis `b_0 … b_{n-1}`; `products[i][j]` holds the coordinates of `b_i·b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: FieldSpec,
    labels: Vec<String>,
    products: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
}

impl Algebra {
    /// Builds an algebra after shape checks. Associativity and the unit law are checked by
    /// [`Algebra::validate`].
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        products: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
    ) -> Result<Self, AlgebraError> {
        let n = labels.len();
        let malformed = |m: String| Err(AlgebraError::Malformed(m));
        if products.len() != n || products.iter().any(|row| row.len() != n) {
            return malformed(format!("expected {n}×{n} table of products"));
        }
        if products.iter().flatten().any(|v| v.len() != n) || unit.len() != n {
            return malformed(format!("coordinate vectors must have length {n}"));
        }
        if products
            .iter()
            .flatten()
            .flatten()
            .chain(&unit)
            .any(|s| s.field() != field)
        {
            return malformed("entries over the wrong field".into());
        }
        Ok(Self {
            field,
            labels,
            products,
            unit,
        })
    }

    /// `k[x]/(f)` for monic `f = x^n + c_{n-1}x^{n-1} + … + c_0`, given `[c_0, …, c_{n-1}]`.
    /// Basis `1, x, …, x^{n-1}` labelled with `var`.
    pub fn polynomial_quotient(field: FieldSpec, var: &str, lower_coeffs: &[i64]) -> Self {
        let n = lower_coeffs.len();
        assert!(n > 0, "degree must be positive");
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            })
            .collect();
        // reduce x^k for k < 2n-1 to the basis
        let mut powers: Vec<Vec<Scalar>> = Vec::with_capacity(2 * n);
        for k in 0..2 * n - 1 {
            let v = if k < n {
                let mut v = vec![field.zero(); n];
                v[k] = field.one();
                v
            } else {
                // x·x^{k-1}: shift, then replace x^n by -Σ c_i x^i
                let prev = &powers[k - 1];
                let top = prev[n - 1].clone();
                let mut v = vec![field.zero(); n];
                v[1..n].clone_from_slice(&prev[..n - 1]);
                for (i, c) in lower_coeffs.iter().enumerate() {
                    v[i] = &v[i] - &(&top * &field.from_i64(*c));
                }
                v
            };
            powers.push(v);
        }
        let products = (0..n)
            .map(|i| (0..n).map(|j| powers[i + j].clone()).collect())
            .collect();
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        Self::new(field, labels, products, unit).expect("well-formed by construction")
    }

    /// The ground field as a one-dimensional algebra with basis `1`.
    pub fn ground(field: FieldSpec) -> Self {
        Self::polynomial_quotient(field, "x", &[0])
    }

    /// Upper-triangular `n×n` matrices with basis `e_ij` (i ≤ j) in lexicographic order.
    pub fn upper_triangular(field: FieldSpec, n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .collect();
        let index = |p: (usize, usize)| pairs.iter().position(|q| *q == p).expect("basis pair");
        let dim = pairs.len();
        let labels = pairs
            .iter()
            .map(|(i, j)| format!("e{}{}", i + 1, j + 1))
            .collect();
        let products = pairs
            .iter()
            .map(|&(i, j)| {
                pairs
                    .iter()
                    .map(|&(k, l)| {
                        let mut v = vec![field.zero(); dim];
                        if j == k {
                            v[index((i, l))] = field.one();
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let mut unit = vec![field.zero(); dim];
        for i in 0..n {
            unit[index((i, i))] = field.one();
        }
        Self::new(field, labels, products, unit).expect("well-formed by construction")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.products[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.products[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&xy * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `v ↦ a·v` on the regular representation.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|j| self.mul(a, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Matrix of `v ↦ v·a`.
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|j| self.mul(&self.basis_vector(j), a))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Checks associativity on all basis triples and the two-sided unit law.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for i in 0..n {
            let bi = self.basis_vector(i);
            if self.mul(&self.unit, &bi) != bi || self.mul(&bi, &self.unit) != bi {
                return Err(AlgebraError::BadUnit(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let left = &self.products[i][j];
                for k in 0..n {
                    let bk = self.basis_vector(k);
                    let lhs = self.mul(left, &bk);
                    let rhs = self.mul(&self.basis_vector(i), &self.products[j][k]);
                    if lhs != rhs {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// `A^op`: `c^op[i][j] = c[j][i]`.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        let products = (0..n)
            .map(|i| (0..n).map(|j| self.products[j][i].clone()).collect())
            .collect();
        Algebra {
            field: self.field,
            labels: self.labels.clone(),
            products,
            unit: self.unit.clone(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.products[i][j] == self.products[j][i]))
    }

    /// Whether the element is invertible, decided by the rank of its left multiplication.
    pub fn is_unit_element(&self, a: &[Scalar]) -> bool {
        has_full_column_rank(&self.left_mult_matrix(a))
    }

    /// Whether `a` commutes with every basis element.
    pub fn is_central(&self, a: &[Scalar]) -> bool {
        (0..self.dim()).all(|i| {
            let b = self.basis_vector(i);
            self.mul(a, &b) == self.mul(&b, a)
        })
    }

    pub fn products_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.products
                .iter()
                .map(|row| {
                    serde_json::Value::Array(
                        row.iter()
                            .map(|v| serde_json::Value::Array(v.iter().map(Scalar::to_json).collect()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    /// Human-readable form of an element in terms of basis labels.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("{c}*{}", self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Finite group by multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl GroupPresentation {
    /// Validates the table (closure, associativity, identity, inverses).
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        let n = labels.len();
        let bad = |m: String| Err(AlgebraError::InvalidGroup(m));
        if n == 0 {
            return bad("empty group".into());
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad(format!("table must be {n}×{n} with entries < {n}"));
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        else {
            return bad("no identity element".into());
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for (g, row) in table.iter().enumerate() {
            match (0..n).find(|&h| row[h] == identity && table[h][g] == identity) {
                Some(h) => inverses.push(h),
                None => return bad(format!("element {g} has no inverse")),
            }
        }
        Ok(Self {
            labels,
            table,
            identity,
            inverses,
        })
    }

    /// ℤ/n with elements `e, g, g^2, …`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(labels, table).expect("cyclic group table")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

/// Unital algebra map `S → R` given by a `dim R × dim S` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    map: Matrix,
}

impl Embedding {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, map: Matrix) -> Result<Self, AlgebraError> {
        if source.field() != target.field() {
            return Err(AlgebraError::FieldMismatch(source.field(), target.field()));
        }
        if map.shape() != (target.dim(), source.dim()) {
            return Err(AlgebraError::Malformed(format!(
                "embedding matrix must be {}×{}, got {:?}",
                target.dim(),
                source.dim(),
                map.shape()
            )));
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(a: Arc<Algebra>) -> Self {
        let map = Matrix::identity(a.field(), a.dim());
        Self {
            source: a.clone(),
            target: a,
            map,
        }
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    /// Image of an element of `S` in `R`.
    pub fn apply(&self, s: &[Scalar]) -> Vec<Scalar> {
        self.map.apply(s)
    }

    /// Checks injectivity, unitality and multiplicativity on all basis pairs.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        if self.apply(self.source.unit()) != self.target.unit() {
            return Err(AlgebraError::NotUnital);
        }
        if !has_full_column_rank(&self.map) {
            return Err(AlgebraError::NotInjective);
        }
        let n = self.source.dim();
        for i in 0..n {
            let ii = self.map.col(i);
            for j in 0..n {
                let lhs = self.apply(self.source.product_of_basis(i, j));
                let rhs = self.target.mul(&ii, &self.map.col(j));
                if lhs != rhs {
                    return Err(AlgebraError::NotMultiplicative(i, j));
                }
            }
        }
        Ok(())
    }
}

/// Group algebra `kG` with basis the group elements.
pub fn group_algebra(field: FieldSpec, g: &GroupPresentation) -> Algebra {
    let n = g.order();
    let products = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let mut v = vec![field.zero(); n];
                    v[g.mul(a, b)] = field.one();
                    v
                })
                .collect()
        })
        .collect();
    let mut unit = vec![field.zero(); n];
    unit[g.identity()] = field.one();
    Algebra::new(field, g.labels().to_vec(), products, unit).expect("group algebra table")
}

/// Skew group ring `S∗G` with basis `b⋅g` (index `i·|G| + g`) and
/// `(s g)(s' g') = s·σ_g(s')·(g g')`. Also returns `S → S∗G`, `s ↦ s⋅e`.
pub fn skew_group_ring(
    s: &Arc<Algebra>,
    g: &GroupPresentation,
    action: &[Matrix],
) -> Result<(Arc<Algebra>, Embedding), AlgebraError> {
    let field = s.field();
    let n = s.dim();
    let order = g.order();
    if action.len() != order {
        return Err(AlgebraError::Malformed(format!(
            "need one action matrix per group element ({order}), got {}",
            action.len()
        )));
    }
    for (gi, sigma) in action.iter().enumerate() {
        if sigma.shape() != (n, n) || sigma.field() != field {
            return Err(AlgebraError::Malformed(format!(
                "action matrix for element {gi} must be {n}×{n} over {field}"
            )));
        }
        if !is_unital_automorphism(s, sigma) {
            return Err(AlgebraError::NotAnAutomorphism(gi));
        }
    }
    for a in 0..order {
        for b in 0..order {
            if action[a].mul(&action[b])? != action[g.mul(a, b)] {
                return Err(AlgebraError::NotAnAction(a, b));
            }
        }
    }
    let dim = n * order;
    let idx = |i: usize, h: usize| i * order + h;
    let mut labels = Vec::with_capacity(dim);
    for i in 0..n {
        for h in 0..order {
            labels.push(format!("{}⋅{}", s.labels()[i], g.labels()[h]));
        }
    }
    let mut products = vec![vec![vec![field.zero(); dim]; dim]; dim];
    for i in 0..n {
        for a in 0..order {
            for j in 0..n {
                let twisted = s.mul(&s.basis_vector(i), &action[a].col(j));
                for b in 0..order {
                    let v = &mut products[idx(i, a)][idx(j, b)];
                    let ab = g.mul(a, b);
                    for (k, c) in twisted.iter().enumerate() {
                        v[idx(k, ab)] = c.clone();
                    }
                }
            }
        }
    }
    let mut unit = vec![field.zero(); dim];
    for (k, c) in s.unit().iter().enumerate() {
        unit[idx(k, g.identity())] = c.clone();
    }
    let r = Arc::new(Algebra::new(field, labels, products, unit)?);
    let map = Matrix::from_fn(field, dim, n, |row, col| {
        if row == idx(col, g.identity()) {
            field.one()
        } else {
            field.zero()
        }
    });
    let emb = Embedding::new(s.clone(), r.clone(), map)?;
    Ok((r, emb))
}

/// The identity action of `G` on `S`.
pub fn trivial_action(s: &Algebra, g: &GroupPresentation) -> Vec<Matrix> {
    vec![Matrix::identity(s.field(), s.dim()); g.order()]
}

fn is_unital_automorphism(s: &Algebra, sigma: &Matrix) -> bool {
    if sigma.apply(s.unit()) != s.unit() || !has_full_column_rank(sigma) {
        return false;
    }
    let n = s.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            sigma.apply(s.product_of_basis(i, j)) == s.mul(&sigma.col(i), &sigma.col(j))
        })
    })
}

/// `S ⊗_K S'` with basis `b⊗b'` (index `i·dim S' + j`) and the embedding `s ↦ s⊗1`.
pub fn base_change_algebra(
    s: &Arc<Algebra>,
    sprime: &Algebra,
) -> Result<(Arc<Algebra>, Embedding), AlgebraError> {
    if s.field() != sprime.field() {
        return Err(AlgebraError::FieldMismatch(s.field(), sprime.field()));
    }
    let field = s.field();
    let (n, m) = (s.dim(), sprime.dim());
    let dim = n * m;
    let mut labels = Vec::with_capacity(dim);
    for a in s.labels() {
        for b in sprime.labels() {
            labels.push(format!("{a}⊗{b}"));
        }
    }
    let tensor = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        let mut out = Vec::with_capacity(dim);
        for x in u {
            for y in v {
                out.push(x * y);
            }
        }
        out
    };
    let mut products = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..m {
            let mut row = Vec::with_capacity(dim);
            for k in 0..n {
                for l in 0..m {
                    row.push(tensor(s.product_of_basis(i, k), sprime.product_of_basis(j, l)));
                }
            }
            products.push(row);
        }
    }
    let unit = tensor(s.unit(), sprime.unit());
    let r = Arc::new(Algebra::new(field, labels, products, unit)?);
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|i| tensor(&s.basis_vector(i), sprime.unit()))
        .collect();
    let emb = Embedding::new(s.clone(), r.clone(), Matrix::from_columns(field, dim, &cols))?;
    Ok((r, emb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual_numbers() -> Arc<Algebra> {
        Arc::new(Algebra::polynomial_quotient(FieldSpec::gf(3), "x", &[0, 0]))
    }

    #[test]
    fn dual_numbers_validate() {
        let a = dual_numbers();
        assert!(a.validate().is_ok());
        assert!(a.product_of_basis(1, 1).iter().all(Scalar::is_zero));
    }

    #[test]
    fn wrong_unit_is_reported() {
        let a = dual_numbers();
        let f = a.field();
        let bad = Algebra::new(
            f,
            a.labels().to_vec(),
            (0..2)
                .map(|i| (0..2).map(|j| a.product_of_basis(i, j).to_vec()).collect())
                .collect(),
            vec![f.zero(), f.one()],
        )
        .unwrap();
        assert!(matches!(bad.validate(), Err(AlgebraError::BadUnit(_))));
    }

    #[test]
    fn golden_ratio_algebra_is_associative() {
        // x² = x + 1, i.e. x² − x − 1 = 0
        let a = Algebra::polynomial_quotient(FieldSpec::rationals(), "x", &[-1, -1]);
        assert!(a.validate().is_ok());
        let f = a.field();
        assert_eq!(a.product_of_basis(1, 1), &[f.one(), f.one()]);
    }

    #[test]
    fn group_algebras() {
        let a = group_algebra(FieldSpec::gf(3), &GroupPresentation::cyclic(2));
        assert_eq!(a.dim(), 2);
        assert_eq!(a.product_of_basis(1, 1), a.unit());
        let q = group_algebra(FieldSpec::rationals(), &GroupPresentation::trivial());
        assert_eq!(q.dim(), 1);
        assert!(q.validate().is_ok());
        let c3 = group_algebra(FieldSpec::gf(2), &GroupPresentation::cyclic(3));
        assert_eq!(c3.dim(), 3);
        assert!(c3.validate().is_ok());
    }

    #[test]
    fn skew_ring_of_dual_numbers() {
        let s = dual_numbers();
        let f = s.field();
        let g = GroupPresentation::cyclic(2);
        let sigma = Matrix::from_i64(f, &[vec![1, 0], vec![0, 2]]);
        let (r, iota) = skew_group_ring(&s, &g, &[Matrix::identity(f, 2), sigma]).unwrap();
        assert_eq!(r.dim(), 4);
        assert!(r.validate().is_ok());
        assert!(iota.validate().is_ok());
        // basis: 1⋅e, 1⋅g, x⋅e, x⋅g
        let gx = r.mul(&r.basis_vector(1), &r.basis_vector(2));
        let xg = r.basis_vector(3);
        assert_eq!(gx, xg.iter().map(|c| c * &f.from_i64(2)).collect::<Vec<_>>());
        assert_eq!(r.mul(&r.basis_vector(1), &r.basis_vector(1)), r.unit());
    }

    #[test]
    fn shift_is_not_an_automorphism() {
        let s = dual_numbers();
        let f = s.field();
        // σ(1) = 1, σ(x) = x + 1
        let shift = Matrix::from_i64(f, &[vec![1, 1], vec![0, 1]]);
        let g = GroupPresentation::cyclic(2);
        let err = skew_group_ring(&s, &g, &[Matrix::identity(f, 2), shift]).unwrap_err();
        assert_eq!(err, AlgebraError::NotAnAutomorphism(1));
    }

    #[test]
    fn non_action_is_rejected() {
        // σ(x) = 2x has order 2, so it cannot define a ℤ/3-action
        let s = dual_numbers();
        let f = s.field();
        let g = GroupPresentation::cyclic(3);
        let sigma = Matrix::from_i64(f, &[vec![1, 0], vec![0, 2]]);
        let sigma2 = sigma.mul(&sigma).unwrap();
        let err = skew_group_ring(&s, &g, &[Matrix::identity(f, 2), sigma, sigma2]).unwrap_err();
        assert!(matches!(err, AlgebraError::NotAnAction(_, _)));
    }

    #[test]
    fn base_change_to_gf9() {
        let s = dual_numbers();
        let gf9 = Algebra::polynomial_quotient(FieldSpec::gf(3), "t", &[1, 0]);
        let (r, iota) = base_change_algebra(&s, &gf9).unwrap();
        assert_eq!(r.dim(), 4);
        assert!(r.validate().is_ok());
        assert!(iota.validate().is_ok());
        assert!(r.is_commutative());
        // (x⊗1)² = 0 and (1⊗t)² = −1
        let x = iota.apply(&s.basis_vector(1));
        assert!(r.mul(&x, &x).iter().all(Scalar::is_zero));
        let t = r.basis_vector(1);
        let minus_one: Vec<Scalar> = r.unit().iter().map(|c| -c).collect();
        assert_eq!(r.mul(&t, &t), minus_one);
    }

    #[test]
    fn base_change_degenerate_cases() {
        let s = dual_numbers();
        let k = Algebra::polynomial_quotient(FieldSpec::gf(3), "u", &[-1]);
        assert_eq!(k.dim(), 1);
        let (r, iota) = base_change_algebra(&s, &k).unwrap();
        assert_eq!(r.dim(), 2);
        assert!(iota.map().is_identity());
        let kk = Arc::new(k);
        let (r2, _) = base_change_algebra(&kk, &s).unwrap();
        assert_eq!(r2.dim(), 2);
        assert_eq!(
            (0..2).map(|i| (0..2).map(|j| r2.product_of_basis(i, j).to_vec()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            (0..2).map(|i| (0..2).map(|j| s.product_of_basis(i, j).to_vec()).collect::<Vec<_>>()).collect::<Vec<_>>()
        );
        assert_eq!(
            base_change_algebra(&s, &Algebra::polynomial_quotient(FieldSpec::gf(5), "u", &[-1]))
                .unwrap_err(),
            AlgebraError::FieldMismatch(FieldSpec::gf(3), FieldSpec::gf(5))
        );
    }

    #[test]
    fn opposite_of_triangular() {
        let t2 = Algebra::upper_triangular(FieldSpec::rationals(), 2);
        assert!(t2.validate().is_ok());
        let op = t2.opposite();
        assert!(op.validate().is_ok());
        assert_ne!(op, t2);
        assert_eq!(op.opposite(), t2);
        let d = dual_numbers();
        assert_eq!(d.opposite(), *d);
    }

    #[test]
    fn trivial_action_matches_base_change() {
        let s = dual_numbers();
        let g = GroupPresentation::cyclic(2);
        let (skew, _) = skew_group_ring(&s, &g, &trivial_action(&s, &g)).unwrap();
        let (bc, _) = base_change_algebra(&s, &group_algebra(s.field(), &g)).unwrap();
        let n = skew.dim();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(skew.product_of_basis(i, j), bc.product_of_basis(i, j));
            }
        }
    }

    #[test]
    fn embedding_checks() {
        let f = FieldSpec::gf(3);
        let k = Arc::new(group_algebra(f, &GroupPresentation::trivial()));
        let kg = Arc::new(group_algebra(f, &GroupPresentation::cyclic(2)));
        let good = Embedding::new(k.clone(), kg.clone(), Matrix::from_i64(f, &[vec![1], vec![0]])).unwrap();
        assert!(good.validate().is_ok());
        let zero = Embedding::new(k, kg, Matrix::zeros(f, 2, 1)).unwrap();
        assert_eq!(zero.validate(), Err(AlgebraError::NotUnital));
    }

    #[test]
    fn group_table_validation() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(GroupPresentation::new(labels.clone(), vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(GroupPresentation::new(labels, vec![vec![0, 1], vec![1, 0]]).is_ok());
    }
}
