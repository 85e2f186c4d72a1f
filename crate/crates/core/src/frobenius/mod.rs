//! Frobenius systems `(E, {x_i}, {y_i})` for extensions `S ⊆ R`, induction and restriction,
//! the two adjunctions they form, and separability certificates.

mod adjunction;
mod induction;
mod separability;

pub use adjunction::{
    adjunction_ext_check, adjunction_hom_check, counit_component, exactness_preservation_check,
    faithfulness_check, naturality_check, projective_preservation_check, triangle_identity_check,
    AdjunctionData, AdjunctionExtReport, ComponentRecord, Direction, ExactnessPreservationReport,
    FaithfulnessReport, Flavor, NaturalityReport, ProjectivePreservationReport, TriangleRecord,
    TriangleReport, unit_component,
};
pub use induction::{
    induce_map, induce_module, restrict_map, restrict_module, InducedModule,
};
pub use separability::{
    casimir_centrality_check, natural_splitting_solve, separability_element_solve, CasimirReport,
    SeparabilityElement, SeparabilityOutcome, SplittingOutcome, SplittingSide, SplittingWitness,
    TensorSquare,
};

use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{
    base_change_algebra, group_algebra, skew_group_ring, Algebra, AlgebraError, Embedding,
    GroupPresentation,
};
use crate::homological::HomologicalError;
use crate::linalg::{solve, LinalgError, Matrix, Scalar};
use crate::module::ModuleError;

/// Which dual-basis expansion failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DualBasisSide {
    /// `r = Σ E(r·x_i)·y_i`
    Right,
    /// `r = Σ x_i·E(y_i·r)`
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("E is not an S-S-bimodule map ({side} action of S basis {s} on R basis {r})")]
    NotBimodule { side: &'static str, s: usize, r: usize },
    #[error("dual-basis expansion {side:?} fails at R basis element {index}")]
    DualBasisFail { side: DualBasisSide, index: usize },
    #[error("malformed Frobenius system: {0}")]
    Malformed(String),
    #[error("module is over the wrong algebra (expected {0})")]
    WrongSide(&'static str),
    #[error("component is not well defined on the tensor product: {0}")]
    IllDefined(&'static str),
    #[error("precondition failed: {0}")]
    PreconditionFailed(&'static str),
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Homological(#[from] HomologicalError),
}

impl From<LinalgError> for FrobeniusError {
    fn from(e: LinalgError) -> Self {
        FrobeniusError::Module(e.into())
    }
}

/// An embedding `ι: S → R` with Frobenius homomorphism `E: R → S` (a `dim S × dim R` matrix)
/// and dual bases `{x_i}`, `{y_i}` of `R` over `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSystem {
    embedding: Embedding,
    e: Matrix,
    dual_x: Vec<Vec<Scalar>>,
    dual_y: Vec<Vec<Scalar>>,
}

impl FrobeniusSystem {
    /// Shape-checked constructor; the Frobenius axioms are checked by [`FrobeniusSystem::verify`].
    pub fn new(
        embedding: Embedding,
        e: Matrix,
        dual_x: Vec<Vec<Scalar>>,
        dual_y: Vec<Vec<Scalar>>,
    ) -> Result<Self, FrobeniusError> {
        let (s, r) = (embedding.source().dim(), embedding.target().dim());
        if e.shape() != (s, r) {
            return Err(FrobeniusError::Malformed(format!(
                "E must be {s}×{r}, got {:?}",
                e.shape()
            )));
        }
        if dual_x.len() != dual_y.len() {
            return Err(FrobeniusError::Malformed(format!(
                "{} x-elements but {} y-elements",
                dual_x.len(),
                dual_y.len()
            )));
        }
        if dual_x.iter().chain(&dual_y).any(|v| v.len() != r) {
            return Err(FrobeniusError::Malformed(format!(
                "dual basis elements must have {r} coordinates"
            )));
        }
        Ok(Self {
            embedding,
            e,
            dual_x,
            dual_y,
        })
    }

    /// `R = S`, `E = id`, `x = y = {1}`.
    pub fn identity(a: Arc<Algebra>) -> Self {
        let unit = a.unit().to_vec();
        let e = Matrix::identity(a.field(), a.dim());
        Self {
            embedding: Embedding::identity(a),
            e,
            dual_x: vec![unit.clone()],
            dual_y: vec![unit],
        }
    }

    /// Canonical system for `S ⊆ S∗G`: `E` reads off the identity component,
    /// `x_g = 1⋅g`, `y_g = 1⋅g⁻¹`.
    pub fn skew_group(
        s: &Arc<Algebra>,
        g: &GroupPresentation,
        action: &[Matrix],
    ) -> Result<Self, FrobeniusError> {
        let (_, emb) = skew_group_ring(s, g, action)?;
        Ok(Self::canonical_group_system(emb, g, |i, h| i * g.order() + h))
    }

    /// Canonical system for `k ⊆ kG`, basis of `kG` labelled by group elements.
    pub fn group_algebra(field: crate::linalg::FieldSpec, g: &GroupPresentation) -> Self {
        let k = Arc::new(Algebra::ground(field));
        let kg = Arc::new(group_algebra(field, g));
        let mut unit_image = Matrix::zeros(field, g.order(), 1);
        unit_image.set(g.identity(), 0, field.one());
        let emb = Embedding::new(k, kg, unit_image).expect("shapes agree");
        Self::canonical_group_system(emb, g, |_, h| h)
    }

    fn canonical_group_system(
        emb: Embedding,
        g: &GroupPresentation,
        index: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let s = emb.source().clone();
        let field = s.field();
        let rdim = emb.target().dim();
        let mut e = Matrix::zeros(field, s.dim(), rdim);
        for i in 0..s.dim() {
            e.set(i, index(i, g.identity()), field.one());
        }
        let element = |h: usize| {
            let mut v = vec![field.zero(); rdim];
            for (i, c) in s.unit().iter().enumerate() {
                v[index(i, h)] = c.clone();
            }
            v
        };
        let dual_x = (0..g.order()).map(element).collect();
        let dual_y = (0..g.order()).map(|h| element(g.inverse(h))).collect();
        Self {
            embedding: emb,
            e,
            dual_x,
            dual_y,
        }
    }

    /// System for `S ⊆ S ⊗_K S'` from a nondegenerate linear form `λ` on `S'`:
    /// `E = id ⊗ λ`, `x_j = 1⊗b_j`, `y` dual to `x` under `(a, b) ↦ λ(ab)`.
    pub fn base_change(
        s: &Arc<Algebra>,
        sprime: &Algebra,
        lambda: &[Scalar],
    ) -> Result<Self, FrobeniusError> {
        let m = sprime.dim();
        if lambda.len() != m {
            return Err(FrobeniusError::Malformed(format!(
                "linear form needs {m} coefficients"
            )));
        }
        let field = s.field();
        let (_, emb) = base_change_algebra(s, sprime)?;
        let form = |v: &[Scalar]| -> Scalar {
            v.iter()
                .zip(lambda)
                .fold(field.zero(), |acc, (a, b)| &acc + &(a * b))
        };
        // Gram matrix Λ[k][j] = λ(b_k b_j); y_i = Σ_k C[i][k] b_k with C Λ = I
        let gram = Matrix::from_fn(field, m, m, |k, j| form(sprime.product_of_basis(k, j)));
        let c = solve(&gram.transpose(), &Matrix::identity(field, m))?
            .ok_or(FrobeniusError::DegenerateForm)?
            .transpose();
        let n = s.dim();
        let lift = |v: &[Scalar]| -> Vec<Scalar> {
            let mut out = Vec::with_capacity(n * m);
            for a in s.unit() {
                for b in v {
                    out.push(a * b);
                }
            }
            out
        };
        let dual_x = (0..m).map(|j| lift(&sprime.basis_vector(j))).collect();
        let dual_y = (0..m).map(|i| lift(c.row(i))).collect();
        let e = Matrix::from_fn(field, n, n * m, |row, col| {
            if col / m == row {
                lambda[col % m].clone()
            } else {
                field.zero()
            }
        });
        Self::new(emb, e, dual_x, dual_y)
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn source(&self) -> &Arc<Algebra> {
        self.embedding.source()
    }

    pub fn target(&self) -> &Arc<Algebra> {
        self.embedding.target()
    }

    pub fn e(&self) -> &Matrix {
        &self.e
    }

    pub fn dual_x(&self) -> &[Vec<Scalar>] {
        &self.dual_x
    }

    pub fn dual_y(&self) -> &[Vec<Scalar>] {
        &self.dual_y
    }

    /// Number of dual-basis pairs.
    pub fn rank(&self) -> usize {
        self.dual_x.len()
    }

    /// Same system with a different Frobenius homomorphism.
    pub fn with_e(&self, e: Matrix) -> Result<Self, FrobeniusError> {
        Self::new(
            self.embedding.clone(),
            e,
            self.dual_x.clone(),
            self.dual_y.clone(),
        )
    }

    /// Same system with different dual bases.
    pub fn with_dual_bases(
        &self,
        dual_x: Vec<Vec<Scalar>>,
        dual_y: Vec<Vec<Scalar>>,
    ) -> Result<Self, FrobeniusError> {
        Self::new(self.embedding.clone(), self.e.clone(), dual_x, dual_y)
    }

    /// `E(r)` as an element of `S`.
    pub fn apply_e(&self, r: &[Scalar]) -> Vec<Scalar> {
        self.e.apply(r)
    }

    /// `ι(E(r))` as an element of `R`.
    pub fn apply_e_in_r(&self, r: &[Scalar]) -> Vec<Scalar> {
        self.embedding.apply(&self.apply_e(r))
    }

    /// Checks the embedding, the bimodule property of `E` and both dual-basis expansions,
    /// reporting the first violation.
    pub fn verify(&self) -> Result<(), FrobeniusError> {
        self.embedding.validate()?;
        let s = self.source();
        let r = self.target();
        for a in 0..s.dim() {
            let sa = s.basis_vector(a);
            let ia = self.embedding.apply(&sa);
            for b in 0..r.dim() {
                let rb = r.basis_vector(b);
                let e_rb = self.apply_e(&rb);
                if self.apply_e(&r.mul(&ia, &rb)) != s.mul(&sa, &e_rb) {
                    return Err(FrobeniusError::NotBimodule {
                        side: "left",
                        s: a,
                        r: b,
                    });
                }
                if self.apply_e(&r.mul(&rb, &ia)) != s.mul(&e_rb, &sa) {
                    return Err(FrobeniusError::NotBimodule {
                        side: "right",
                        s: a,
                        r: b,
                    });
                }
            }
        }
        for b in 0..r.dim() {
            let rb = r.basis_vector(b);
            let mut right = r.zero_vector();
            let mut left = r.zero_vector();
            for (x, y) in self.dual_x.iter().zip(&self.dual_y) {
                let t = r.mul(&self.apply_e_in_r(&r.mul(&rb, x)), y);
                right = add(&right, &t);
                let t = r.mul(x, &self.apply_e_in_r(&r.mul(y, &rb)));
                left = add(&left, &t);
            }
            if right != rb {
                return Err(FrobeniusError::DualBasisFail {
                    side: DualBasisSide::Right,
                    index: b,
                });
            }
            if left != rb {
                return Err(FrobeniusError::DualBasisFail {
                    side: DualBasisSide::Left,
                    index: b,
                });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let vecs = |vs: &[Vec<Scalar>]| -> Vec<Value> {
            vs.iter()
                .map(|v| Value::Array(v.iter().map(Scalar::to_json).collect()))
                .collect()
        };
        json!({
            "embedding": self.embedding.map().to_json(),
            "E": self.e.to_json(),
            "dual_x": vecs(&self.dual_x),
            "dual_y": vecs(&self.dual_y),
        })
    }
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}
