//! Induction `R ⊗_S −` as an explicit quotient of `R ⊗_k X`, and restriction along `ι`.

use std::sync::Arc;

use crate::linalg::{quotient, Matrix, Scalar};
use crate::module::{same_algebra, Module, ModuleMap};

use super::{FrobeniusError, FrobeniusSystem};

/// `R ⊗_S X` realized as a quotient of `R ⊗_k X` (coordinate `i·dim X + v` for `r_i ⊗ e_v`).
#[derive(Clone, Debug)]
pub struct InducedModule {
    pub base: Arc<Module>,
    pub module: Arc<Module>,
    /// `R ⊗_k X → R ⊗_S X`.
    pub projection: Matrix,
    /// A linear section of the projection.
    pub section: Matrix,
}

impl InducedModule {
    /// Class of `r ⊗ v` for coordinate vectors `r ∈ R`, `v ∈ X`.
    pub fn class_of(&self, r: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let f = self.base.field();
        let t = Matrix::column(f, r).kron(&Matrix::column(f, v));
        self.projection.apply(&t.col(0))
    }
}

fn check_over(m: &Module, a: &Arc<crate::algebra::Algebra>, side: &'static str) -> Result<(), FrobeniusError> {
    if same_algebra(m.algebra(), a) {
        Ok(())
    } else {
        Err(FrobeniusError::WrongSide(side))
    }
}

/// `R ⊗_S X` for an `S`-module `X`, with the `R`-action by left multiplication.
pub fn induce_module(fs: &FrobeniusSystem, x: &Arc<Module>) -> Result<InducedModule, FrobeniusError> {
    check_over(x, fs.source(), "S")?;
    let r = fs.target();
    let s = fs.source();
    let f = r.field();
    let (rd, xd) = (r.dim(), x.dim());
    let ambient = rd * xd;
    let iota = fs.embedding();
    // relations (r_i ι(s_j)) ⊗ e_v − r_i ⊗ s_j·e_v
    let mut relations = Vec::with_capacity(rd * s.dim() * xd);
    for i in 0..rd {
        let ri = r.basis_vector(i);
        for j in 0..s.dim() {
            let ris = Matrix::column(f, &r.mul(&ri, &iota.apply(&s.basis_vector(j))));
            let twisted = Matrix::column(f, &ri).kron(&x.action()[j]);
            let plain = ris.kron(&Matrix::identity(f, xd));
            let diff = plain.sub(&twisted)?;
            for v in 0..xd {
                relations.push(diff.col(v));
            }
        }
    }
    let rel = Matrix::from_columns(f, ambient, &relations);
    let (projection, section) = quotient(f, ambient, &rel)?;
    let id_x = Matrix::identity(f, xd);
    let action = (0..rd)
        .map(|i| {
            let left = r.left_mult_matrix(&r.basis_vector(i)).kron(&id_x);
            projection.mul(&left)?.mul(&section)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let module = Arc::new(Module::new(r.clone(), projection.rows(), action)?);
    Ok(InducedModule {
        base: x.clone(),
        module,
        projection,
        section,
    })
}

/// `id_R ⊗ f` between already induced modules.
pub fn induce_map_between(
    f: &ModuleMap,
    src: &InducedModule,
    tgt: &InducedModule,
) -> Result<ModuleMap, FrobeniusError> {
    let field = f.matrix().field();
    let rd = src.module.algebra().dim();
    let lifted = Matrix::identity(field, rd).kron(f.matrix());
    let m = tgt.projection.mul(&lifted)?.mul(&src.section)?;
    Ok(ModuleMap::new(src.module.clone(), tgt.module.clone(), m)?)
}

/// `id_R ⊗ f: R ⊗_S X → R ⊗_S Y`.
pub fn induce_map(fs: &FrobeniusSystem, f: &ModuleMap) -> Result<ModuleMap, FrobeniusError> {
    let src = induce_module(fs, f.source())?;
    let tgt = induce_module(fs, f.target())?;
    induce_map_between(f, &src, &tgt)
}

/// Same space with the action precomposed with `ι`.
pub fn restrict_module(fs: &FrobeniusSystem, n: &Arc<Module>) -> Result<Arc<Module>, FrobeniusError> {
    check_over(n, fs.target(), "R")?;
    Ok(Arc::new(n.restrict_along(fs.source().clone(), fs.embedding().map())))
}

/// The same matrix between restricted modules.
pub fn restrict_map(fs: &FrobeniusSystem, f: &ModuleMap) -> Result<ModuleMap, FrobeniusError> {
    let src = restrict_module(fs, f.source())?;
    let tgt = restrict_module(fs, f.target())?;
    Ok(ModuleMap::new(src, tgt, f.matrix().clone())?)
}
