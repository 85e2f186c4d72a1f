//! Finite-dimensional left modules, module maps, Hom spaces and the categorical constructions
//! used by the homological layer.

use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::Algebra;
use crate::linalg::{
    kernel, quotient, rank, solve, EchelonForm, FieldSpec, LinalgError, LinearSystem, Matrix,
    Scalar, Term,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error("action violates structure constants at basis pair ({0}, {1})")]
    NotAModule(usize, usize),
    #[error("unit does not act as the identity")]
    BadUnitAction,
    #[error("matrix does not intertwine the actions of basis element {0}")]
    NotIntertwining(usize),
    #[error("malformed module data: {0}")]
    Malformed(String),
    #[error("maps are not composable")]
    NotComposable,
    #[error("not a short exact sequence: {0}")]
    NotShortExact(&'static str),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A left module: one `dim × dim` action matrix per basis element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl Module {
    /// Shape-checked constructor; the module axioms are checked by [`Module::validate`].
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Self, ModuleError> {
        if action.len() != algebra.dim() {
            return Err(ModuleError::Malformed(format!(
                "need {} action matrices, got {}",
                algebra.dim(),
                action.len()
            )));
        }
        if let Some(m) = action.iter().find(|m| m.shape() != (dim, dim)) {
            return Err(ModuleError::Malformed(format!(
                "action matrices must be {dim}×{dim}, got {:?}",
                m.shape()
            )));
        }
        if action.iter().any(|m| m.field() != algebra.field()) {
            return Err(ModuleError::Malformed("action over the wrong field".into()));
        }
        Ok(Self {
            algebra,
            dim,
            action,
        })
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let f = algebra.field();
        let action = vec![Matrix::zeros(f, 0, 0); algebra.dim()];
        Self {
            algebra,
            dim: 0,
            action,
        }
    }

    /// The regular module `A` with left multiplication.
    pub fn regular(algebra: Arc<Algebra>) -> Self {
        let action = (0..algebra.dim())
            .map(|i| algebra.left_mult_matrix(&algebra.basis_vector(i)))
            .collect();
        Self {
            dim: algebra.dim(),
            algebra,
            action,
        }
    }

    /// `A^rank`, basis index `generator · dim A + basis element`.
    pub fn free(algebra: Arc<Algebra>, rank: usize) -> Self {
        let f = algebra.field();
        let action = (0..algebra.dim())
            .map(|i| Matrix::identity(f, rank).kron(&algebra.left_mult_matrix(&algebra.basis_vector(i))))
            .collect();
        Self {
            dim: algebra.dim() * rank,
            algebra,
            action,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix of the action of an arbitrary algebra element.
    pub fn act(&self, a: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dim, self.dim);
        for (c, m) in a.iter().zip(&self.action) {
            if !c.is_zero() {
                out = out.add(&m.scale(c)).expect("same shape");
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        if !self.act(self.algebra.unit()).is_identity() && self.dim > 0 {
            return Err(ModuleError::BadUnitAction);
        }
        let n = self.algebra.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j])?;
                let rhs = self.act(self.algebra.product_of_basis(i, j));
                if lhs != rhs {
                    return Err(ModuleError::NotAModule(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// The submodule generated by `gens`, as an echelon basis of its underlying space.
    pub fn generated_submodule(&self, gens: &[Vec<Scalar>]) -> EchelonForm {
        let mut e = EchelonForm::new(self.field(), self.dim);
        for g in gens {
            for m in &self.action {
                let v = m.apply(g);
                if v.iter().any(|x| !x.is_zero()) {
                    e.insert(v);
                }
            }
        }
        e
    }

    /// Same space, action restricted along an algebra map `B → A` given as a `dim A × dim B` matrix.
    pub fn restrict_along(&self, algebra: Arc<Algebra>, map: &Matrix) -> Self {
        let action = (0..algebra.dim()).map(|j| self.act(&map.col(j))).collect();
        Self {
            algebra,
            dim: self.dim,
            action,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "action": self.action.iter().map(Matrix::to_json).collect::<Vec<_>>(),
        })
    }
}

/// A module homomorphism `source → target`, stored as a `target.dim × source.dim` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: Arc<Module>,
    target: Arc<Module>,
    matrix: Matrix,
}

impl ModuleMap {
    /// Shape-checked constructor; intertwining is checked by [`ModuleMap::validate`].
    pub fn new(source: Arc<Module>, target: Arc<Module>, matrix: Matrix) -> Result<Self, ModuleError> {
        if !same_algebra(source.algebra(), target.algebra()) {
            return Err(ModuleError::AlgebraMismatch);
        }
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(ModuleError::Malformed(format!(
                "map matrix must be {}×{}, got {:?}",
                target.dim(),
                source.dim(),
                matrix.shape()
            )));
        }
        Ok(Self {
            source,
            target,
            matrix,
        })
    }

    /// Constructor that also checks the intertwining equations.
    pub fn checked(source: Arc<Module>, target: Arc<Module>, matrix: Matrix) -> Result<Self, ModuleError> {
        let f = Self::new(source, target, matrix)?;
        f.validate()?;
        Ok(f)
    }

    pub fn identity(m: Arc<Module>) -> Self {
        let matrix = Matrix::identity(m.field(), m.dim());
        Self {
            source: m.clone(),
            target: m,
            matrix,
        }
    }

    pub fn zero(source: Arc<Module>, target: Arc<Module>) -> Self {
        let matrix = Matrix::zeros(source.field(), target.dim(), source.dim());
        Self {
            source,
            target,
            matrix,
        }
    }

    pub fn source(&self) -> &Arc<Module> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Module> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        for (i, (a, b)) in self.source.action().iter().zip(self.target.action()).enumerate() {
            if self.matrix.mul(a)? != b.mul(&self.matrix)? {
                return Err(ModuleError::NotIntertwining(i));
            }
        }
        Ok(())
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleMap) -> Result<ModuleMap, ModuleError> {
        if first.target.dim() != self.source.dim()
            || !same_algebra(first.target.algebra(), self.source.algebra())
        {
            return Err(ModuleError::NotComposable);
        }
        Ok(ModuleMap {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix)?,
        })
    }

    pub fn add(&self, other: &ModuleMap) -> Result<ModuleMap, ModuleError> {
        Ok(ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.add(&other.matrix)?,
        })
    }

    pub fn scale(&self, s: &Scalar) -> ModuleMap {
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.scale(s),
        }
    }

    pub fn rank(&self) -> usize {
        rank(&self.matrix)
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "source_dim": self.source.dim(),
            "target_dim": self.target.dim(),
            "matrix": self.matrix.to_json(),
        })
    }
}

fn check_same_algebra(m: &Module, n: &Module) -> Result<(), ModuleError> {
    if same_algebra(m.algebra(), n.algebra()) {
        Ok(())
    } else {
        Err(ModuleError::AlgebraMismatch)
    }
}

/// Canonical basis of `Hom_A(m, n)`: the null space of the stacked intertwining equations.
pub fn hom_space(m: &Arc<Module>, n: &Arc<Module>) -> Result<Vec<ModuleMap>, ModuleError> {
    check_same_algebra(m, n)?;
    let mut sys = LinearSystem::new(m.field());
    let z = sys.add_block(n.dim(), m.dim());
    if m.dim() == 0 || n.dim() == 0 {
        return Ok(Vec::new());
    }
    for (a, b) in m.action().iter().zip(n.action()) {
        let neg_b = b.neg();
        sys.add_equation(
            &[Term::new(z, None, Some(a)), Term::new(z, Some(&neg_b), None)],
            None,
        )?;
    }
    Ok(sys
        .null_space()
        .into_iter()
        .map(|mut blocks| ModuleMap {
            source: m.clone(),
            target: n.clone(),
            matrix: blocks.remove(0),
        })
        .collect())
}

pub fn hom_dim(m: &Arc<Module>, n: &Arc<Module>) -> Result<usize, ModuleError> {
    Ok(hom_space(m, n)?.len())
}

/// Kernel with the induced action and its inclusion.
pub fn kernel_module(f: &ModuleMap) -> Result<(Arc<Module>, ModuleMap), ModuleError> {
    let k = kernel(f.matrix());
    let src = f.source();
    let action = src
        .action()
        .iter()
        .map(|a| {
            let image = a.mul(&k)?;
            solve(&k, &image)?.ok_or(ModuleError::Malformed(
                "kernel not stable under the action; source map is not a module map".into(),
            ))
        })
        .collect::<Result<Vec<_>, ModuleError>>()?;
    let km = Arc::new(Module::new(src.algebra().clone(), k.cols(), action)?);
    let inclusion = ModuleMap::new(km.clone(), src.clone(), k)?;
    Ok((km, inclusion))
}

/// Cokernel with the induced action and the canonical projection.
pub fn cokernel_module(f: &ModuleMap) -> Result<(Arc<Module>, ModuleMap), ModuleError> {
    let tgt = f.target();
    let (proj, sect) = quotient(tgt.field(), tgt.dim(), f.matrix())?;
    let action = tgt
        .action()
        .iter()
        .map(|a| proj.mul(a)?.mul(&sect))
        .collect::<Result<Vec<_>, LinalgError>>()?;
    let c = Arc::new(Module::new(tgt.algebra().clone(), proj.rows(), action)?);
    let projection = ModuleMap::new(tgt.clone(), c.clone(), proj)?;
    Ok((c, projection))
}

/// Image of `f` as a submodule of the target, with the corestriction and inclusion.
pub fn image_module(f: &ModuleMap) -> Result<(Arc<Module>, ModuleMap, ModuleMap), ModuleError> {
    let (_, p) = cokernel_module(f)?;
    let (im, inc) = kernel_module(&p)?;
    let corestriction = solve(inc.matrix(), f.matrix())?
        .ok_or_else(|| ModuleError::Malformed("image computation failed".into()))?;
    let corestriction = ModuleMap::new(f.source().clone(), im.clone(), corestriction)?;
    Ok((im, corestriction, inc))
}

#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Arc<Module>,
    pub injections: Vec<ModuleMap>,
    pub projections: Vec<ModuleMap>,
}

/// Direct sum with block-diagonal action; an empty list needs the algebra explicitly.
pub fn direct_sum(algebra: &Arc<Algebra>, ms: &[Arc<Module>]) -> Result<DirectSum, ModuleError> {
    for m in ms {
        if !same_algebra(algebra, m.algebra()) {
            return Err(ModuleError::AlgebraMismatch);
        }
    }
    let f = algebra.field();
    let total: usize = ms.iter().map(|m| m.dim()).sum();
    let action = (0..algebra.dim())
        .map(|i| {
            let blocks: Vec<&Matrix> = ms.iter().map(|m| &m.action()[i]).collect();
            Matrix::block_diag(f, &blocks)
        })
        .collect();
    let sum = Arc::new(Module::new(algebra.clone(), total, action)?);
    let mut injections = Vec::with_capacity(ms.len());
    let mut projections = Vec::with_capacity(ms.len());
    let mut offset = 0;
    for m in ms {
        let mut inj = Matrix::zeros(f, total, m.dim());
        inj.set_block(offset, 0, &Matrix::identity(f, m.dim()));
        projections.push(ModuleMap::new(sum.clone(), m.clone(), inj.transpose())?);
        injections.push(ModuleMap::new(m.clone(), sum.clone(), inj)?);
        offset += m.dim();
    }
    Ok(DirectSum {
        module: sum,
        injections,
        projections,
    })
}

#[derive(Clone, Debug)]
pub struct Pushout {
    pub module: Arc<Module>,
    pub leg_b: ModuleMap,
    pub leg_c: ModuleMap,
}

/// Pushout of `B ←f− A −g→ C`, computed as the cokernel of `(f, −g): A → B ⊕ C`.
pub fn pushout(f: &ModuleMap, g: &ModuleMap) -> Result<Pushout, ModuleError> {
    if f.source().dim() != g.source().dim() || !same_algebra(f.source().algebra(), g.source().algebra()) {
        return Err(ModuleError::Malformed("pushout maps need a common source".into()));
    }
    check_same_algebra(f.target(), g.target())?;
    let algebra = f.source().algebra().clone();
    let sum = direct_sum(&algebra, &[f.target().clone(), g.target().clone()])?;
    let stacked = Matrix::vstack(&[f.matrix(), &g.matrix().neg()])?;
    let h = ModuleMap::new(f.source().clone(), sum.module.clone(), stacked)?;
    let (p, proj) = cokernel_module(&h)?;
    Ok(Pushout {
        module: p,
        leg_b: proj.compose(&sum.injections[0])?,
        leg_c: proj.compose(&sum.injections[1])?,
    })
}

/// `Hom_A(M, A)` as a left `A^op`-module, together with its basis of maps `M → A`.
#[derive(Clone, Debug)]
pub struct DualModule {
    pub module: Arc<Module>,
    /// Basis maps `φ_j: M → A`, each a `dim A × dim M` matrix.
    pub basis: Vec<Matrix>,
}

impl DualModule {
    /// Coordinates of a map `M → A` (given as a matrix) in the dual basis.
    pub fn coordinates(&self, phi: &Matrix) -> Result<Option<Vec<Scalar>>, ModuleError> {
        let f = self.module.field();
        if self.basis.is_empty() {
            return Ok(if phi.is_zero() { Some(Vec::new()) } else { None });
        }
        let cols: Vec<Vec<Scalar>> = self.basis.iter().map(|b| b.entries().to_vec()).collect();
        let stacked = Matrix::from_columns(f, phi.entries().len(), &cols);
        let target = Matrix::column(f, phi.entries());
        Ok(solve(&stacked, &target)?.map(|x| x.col(0)))
    }
}

/// The `A`-dual `Hom_A(M, A)` with right multiplication turned into an `A^op`-action.
pub fn a_dual(m: &Arc<Module>) -> Result<DualModule, ModuleError> {
    a_dual_over(m, Arc::new(m.algebra().opposite()))
}

/// As [`a_dual`], with a caller-supplied copy of `A^op` so repeated duals share one algebra.
pub fn a_dual_over(m: &Arc<Module>, opposite: Arc<Algebra>) -> Result<DualModule, ModuleError> {
    let a = m.algebra();
    let regular = Arc::new(Module::regular(a.clone()));
    let basis: Vec<Matrix> = hom_space(m, &regular)?
        .into_iter()
        .map(|f| f.matrix().clone())
        .collect();
    let f = m.field();
    let h = basis.len();
    let mut dual = DualModule {
        module: Arc::new(Module::zero(opposite.clone())),
        basis,
    };
    let mut action = Vec::with_capacity(a.dim());
    for i in 0..a.dim() {
        // b_i acts on φ as φ ↦ (m ↦ φ(m)·b_i)
        let right = a.right_mult_matrix(&a.basis_vector(i));
        let mut cols = Vec::with_capacity(h);
        for phi in &dual.basis {
            let moved = right.mul(phi)?;
            cols.push(dual.coordinates(&moved)?.ok_or_else(|| {
                ModuleError::Malformed("dual basis not closed under right multiplication".into())
            })?);
        }
        action.push(Matrix::from_columns(f, h, &cols));
    }
    dual.module = Arc::new(Module::new(opposite, h, action)?);
    Ok(dual)
}

/// `f^*: Hom(N, A) → Hom(M, A)`, `φ ↦ φ∘f`, in the dual bases.
pub fn a_dual_map(f: &ModuleMap, dual_source: &DualModule, dual_target: &DualModule) -> Result<ModuleMap, ModuleError> {
    let field = f.source().field();
    let mut cols = Vec::with_capacity(dual_target.basis.len());
    for phi in &dual_target.basis {
        let pulled = phi.mul(f.matrix())?;
        cols.push(dual_source.coordinates(&pulled)?.ok_or_else(|| {
            ModuleError::Malformed("pulled-back map not in the dual of the source".into())
        })?);
    }
    let matrix = Matrix::from_columns(field, dual_source.basis.len(), &cols);
    ModuleMap::new(dual_target.module.clone(), dual_source.module.clone(), matrix)
}

/// `0 → A —i→ B —p→ C → 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    i: ModuleMap,
    p: ModuleMap,
}

impl ShortExactSequence {
    pub fn new(i: ModuleMap, p: ModuleMap) -> Result<Self, ModuleError> {
        if !Arc::ptr_eq(i.target(), p.source()) && **i.target() != **p.source() {
            return Err(ModuleError::NotComposable);
        }
        i.validate()?;
        p.validate()?;
        if !i.is_injective() {
            return Err(ModuleError::NotShortExact("first map is not injective"));
        }
        if !p.is_surjective() {
            return Err(ModuleError::NotShortExact("second map is not surjective"));
        }
        if !p.compose(&i)?.is_zero() || i.source().dim() + p.target().dim() != i.target().dim() {
            return Err(ModuleError::NotShortExact("image and kernel differ at the middle term"));
        }
        Ok(Self { i, p })
    }

    /// The split sequence `0 → A → A⊕C → C → 0`.
    pub fn split(a: &Arc<Module>, c: &Arc<Module>) -> Result<Self, ModuleError> {
        let sum = direct_sum(a.algebra(), &[a.clone(), c.clone()])?;
        Self::new(sum.injections[0].clone(), sum.projections[1].clone())
    }

    pub fn i(&self) -> &ModuleMap {
        &self.i
    }

    pub fn p(&self) -> &ModuleMap {
        &self.p
    }

    pub fn left(&self) -> &Arc<Module> {
        self.i.source()
    }

    pub fn middle(&self) -> &Arc<Module> {
        self.i.target()
    }

    pub fn right(&self) -> &Arc<Module> {
        self.p.target()
    }

    /// The five-term chain `0 → A → B → C → 0`.
    pub fn as_chain(&self) -> Vec<ModuleMap> {
        let zero = Arc::new(Module::zero(self.middle().algebra().clone()));
        vec![
            ModuleMap::zero(zero.clone(), self.left().clone()),
            self.i.clone(),
            self.p.clone(),
            ModuleMap::zero(self.right().clone(), zero),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;

    fn dual_numbers() -> Arc<Algebra> {
        Arc::new(Algebra::polynomial_quotient(FieldSpec::gf(3), "x", &[0, 0]))
    }

    fn simple(a: &Arc<Algebra>, x_acts_as: i64) -> Arc<Module> {
        let f = a.field();
        Arc::new(
            Module::new(
                a.clone(),
                1,
                vec![Matrix::identity(f, 1), Matrix::from_i64(f, &[vec![x_acts_as]])],
            )
            .unwrap(),
        )
    }

    fn mult_by_x(a: &Arc<Algebra>) -> ModuleMap {
        let reg = Arc::new(Module::regular(a.clone()));
        let x = a.basis_vector(1);
        ModuleMap::checked(reg.clone(), reg, a.right_mult_matrix(&x)).unwrap()
    }

    #[test]
    fn module_validation() {
        let a = dual_numbers();
        assert!(Module::regular(a.clone()).validate().is_ok());
        assert!(simple(&a, 0).validate().is_ok());
        assert_eq!(simple(&a, 1).validate(), Err(ModuleError::NotAModule(1, 1)));
    }

    #[test]
    fn hom_dimensions() {
        let a = dual_numbers();
        let reg = Arc::new(Module::regular(a.clone()));
        let k = simple(&a, 0);
        assert_eq!(hom_dim(&reg, &k).unwrap(), 1);
        assert_eq!(hom_dim(&reg, &reg).unwrap(), 2);
        assert_eq!(hom_dim(&k, &reg).unwrap(), 1);
        for f in hom_space(&k, &reg).unwrap() {
            assert!(f.validate().is_ok());
        }
    }

    #[test]
    fn kernel_and_cokernel_of_x() {
        let a = dual_numbers();
        let x = mult_by_x(&a);
        let (k, inc) = kernel_module(&x).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.validate().is_ok());
        assert!(inc.validate().is_ok());
        assert!(k.action()[1].is_zero());
        let (c, p) = cokernel_module(&x).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c.validate().is_ok());
        assert!(p.validate().is_ok());
        assert!(p.compose(&x).unwrap().is_zero());
    }

    #[test]
    fn kernel_and_cokernel_extremes() {
        let a = dual_numbers();
        let reg = Arc::new(Module::regular(a.clone()));
        let id = ModuleMap::identity(reg.clone());
        assert_eq!(kernel_module(&id).unwrap().0.dim(), 0);
        assert_eq!(cokernel_module(&id).unwrap().0.dim(), 0);
        let zero = ModuleMap::zero(reg.clone(), reg.clone());
        assert_eq!(*kernel_module(&zero).unwrap().0, *reg);
        assert_eq!(*cokernel_module(&zero).unwrap().0, *reg);
    }

    #[test]
    fn direct_sums() {
        let a = dual_numbers();
        let k = simple(&a, 0);
        let empty = direct_sum(&a, &[]).unwrap();
        assert_eq!(empty.module.dim(), 0);
        let kk = direct_sum(&a, &[k.clone(), k.clone()]).unwrap();
        assert_eq!(hom_dim(&kk.module, &k).unwrap(), 2);
        let f = a.field();
        let mut total = Matrix::zeros(f, 2, 2);
        for (i, p) in kk.injections.iter().zip(&kk.projections) {
            total = total.add(&i.compose(p).unwrap().matrix().clone()).unwrap();
            assert!(p.compose(i).unwrap().matrix().is_identity());
        }
        assert!(total.is_identity());
        let with_zero = direct_sum(&a, &[k.clone(), Arc::new(Module::zero(a.clone()))]).unwrap();
        assert_eq!(*with_zero.module, *k);
    }

    #[test]
    fn pushouts() {
        let a = dual_numbers();
        let k = simple(&a, 0);
        let zero = Arc::new(Module::zero(a.clone()));
        let p = pushout(&ModuleMap::zero(zero.clone(), k.clone()), &ModuleMap::zero(zero, k.clone())).unwrap();
        assert_eq!(p.module.dim(), 2);

        let reg = Arc::new(Module::regular(a.clone()));
        let id = ModuleMap::identity(reg.clone());
        assert_eq!(pushout(&id, &id).unwrap().module.dim(), 2);

        // A ←x− A −x→ A: dim(A⊕A) − rank[x; −x] = 4 − 1
        let x = mult_by_x(&a);
        let stacked = Matrix::vstack(&[x.matrix(), &x.matrix().neg()]).unwrap();
        let oracle = 4 - rank(&stacked);
        let p = pushout(&x, &x).unwrap();
        assert_eq!(p.module.dim(), oracle);
        assert_eq!(oracle, 3);
        assert_eq!(p.leg_b.compose(&x).unwrap().matrix(), p.leg_c.compose(&x).unwrap().matrix());
        assert!(p.module.validate().is_ok());
    }

    #[test]
    fn duals() {
        let a = dual_numbers();
        let reg = Arc::new(Module::regular(a.clone()));
        let d = a_dual(&reg).unwrap();
        assert_eq!(d.module.dim(), 2);
        assert!(d.module.validate().is_ok());
        let zero = Arc::new(Module::zero(a.clone()));
        assert_eq!(a_dual(&zero).unwrap().module.dim(), 0);
        assert_eq!(a_dual(&simple(&a, 0)).unwrap().module.dim(), 1);
    }

    #[test]
    fn dual_is_contravariant() {
        let a = Arc::new(Algebra::upper_triangular(FieldSpec::rationals(), 2));
        let reg = Arc::new(Module::regular(a.clone()));
        let op = Arc::new(a.opposite());
        let maps = hom_space(&reg, &reg).unwrap();
        let d = a_dual_over(&reg, op).unwrap();
        for f in &maps {
            for g in &maps {
                let gf = g.compose(f).unwrap();
                let lhs = a_dual_map(&gf, &d, &d).unwrap();
                let rhs = a_dual_map(f, &d, &d)
                    .unwrap()
                    .compose(&a_dual_map(g, &d, &d).unwrap())
                    .unwrap();
                assert_eq!(lhs.matrix(), rhs.matrix());
            }
        }
    }
}
