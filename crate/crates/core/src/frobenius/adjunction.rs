//! The adjunctions `(Ind, Res)` and `(Res, Ind)` with explicit unit and counit components.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::Algebra;
use crate::homological::{ext_dims, is_exact_complex, is_projective, ExactnessReport};
use crate::linalg::Matrix;
use crate::module::{hom_dim, same_algebra, Module, ModuleMap, ShortExactSequence};

use super::induction::{induce_map_between, induce_module, restrict_map, restrict_module};
use super::{FrobeniusError, FrobeniusSystem};

/// Which functor is the left adjoint `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    /// `F = Ind: S-mod → R-mod`, `G = Res`.
    IndRes,
    /// `F = Res: R-mod → S-mod`, `G = Ind`.
    ResInd,
}

/// Which functor a preservation check applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Induce,
    Restrict,
}

#[derive(Clone, Debug)]
pub struct AdjunctionData {
    pub system: FrobeniusSystem,
    pub flavor: Flavor,
}

impl AdjunctionData {
    pub fn new(system: FrobeniusSystem, flavor: Flavor) -> Self {
        Self { system, flavor }
    }

    /// Algebra of the domain category of `F`.
    pub fn c_algebra(&self) -> &Arc<Algebra> {
        match self.flavor {
            Flavor::IndRes => self.system.source(),
            Flavor::ResInd => self.system.target(),
        }
    }

    /// Algebra of the domain category of `G`.
    pub fn d_algebra(&self) -> &Arc<Algebra> {
        match self.flavor {
            Flavor::IndRes => self.system.target(),
            Flavor::ResInd => self.system.source(),
        }
    }

    pub fn is_c_module(&self, m: &Module) -> bool {
        same_algebra(m.algebra(), self.c_algebra())
    }

    pub fn is_d_module(&self, m: &Module) -> bool {
        same_algebra(m.algebra(), self.d_algebra())
    }

    fn apply(&self, induce: bool, m: &Arc<Module>) -> Result<Arc<Module>, FrobeniusError> {
        if induce {
            Ok(induce_module(&self.system, m)?.module)
        } else {
            restrict_module(&self.system, m)
        }
    }

    fn apply_map(&self, induce: bool, f: &ModuleMap) -> Result<ModuleMap, FrobeniusError> {
        if induce {
            let src = induce_module(&self.system, f.source())?;
            let tgt = induce_module(&self.system, f.target())?;
            induce_map_between(f, &src, &tgt)
        } else {
            restrict_map(&self.system, f)
        }
    }

    pub fn f_module(&self, x: &Arc<Module>) -> Result<Arc<Module>, FrobeniusError> {
        self.apply(self.flavor == Flavor::IndRes, x)
    }

    pub fn g_module(&self, y: &Arc<Module>) -> Result<Arc<Module>, FrobeniusError> {
        self.apply(self.flavor == Flavor::ResInd, y)
    }

    pub fn f_map(&self, f: &ModuleMap) -> Result<ModuleMap, FrobeniusError> {
        self.apply_map(self.flavor == Flavor::IndRes, f)
    }

    pub fn g_map(&self, f: &ModuleMap) -> Result<ModuleMap, FrobeniusError> {
        self.apply_map(self.flavor == Flavor::ResInd, f)
    }
}

fn wrong_side(ad: &AdjunctionData, c_side: bool) -> FrobeniusError {
    let on_s = (ad.flavor == Flavor::IndRes) == c_side;
    FrobeniusError::WrongSide(if on_s { "S" } else { "R" })
}

/// `M` vanishes on the relation span of `ind` iff `M·(I − S·P) = 0`; returns `M·S`.
fn descend(m: &Matrix, ind: &super::InducedModule) -> Result<Matrix, FrobeniusError> {
    let f = m.field();
    let n = ind.projection.cols();
    let sp = ind.section.mul(&ind.projection)?;
    let defect = m.mul(&Matrix::identity(f, n).sub(&sp)?)?;
    if !defect.is_zero() {
        return Err(FrobeniusError::IllDefined("map does not vanish on the tensor relations"));
    }
    Ok(m.mul(&ind.section)?)
}

/// `η_X: X → GF(X)` for a module `X` in the domain of `F`.
pub fn unit_component(ad: &AdjunctionData, x: &Arc<Module>) -> Result<ModuleMap, FrobeniusError> {
    if !ad.is_c_module(x) {
        return Err(wrong_side(ad, true));
    }
    let fs = &ad.system;
    let field = x.field();
    let r = fs.target();
    let map = match ad.flavor {
        Flavor::IndRes => {
            // v ↦ class(1 ⊗ v)
            let ind = induce_module(fs, x)?;
            let target = restrict_module(fs, &ind.module)?;
            let lift = Matrix::column(field, r.unit()).kron(&Matrix::identity(field, x.dim()));
            ModuleMap::new(x.clone(), target, ind.projection.mul(&lift)?)?
        }
        Flavor::ResInd => {
            // n ↦ Σ class(x_i ⊗ y_i·n)
            let res = restrict_module(fs, x)?;
            let ind = induce_module(fs, &res)?;
            let mut lift = Matrix::zeros(field, r.dim() * x.dim(), x.dim());
            for (xi, yi) in fs.dual_x().iter().zip(fs.dual_y()) {
                lift = lift.add(&Matrix::column(field, xi).kron(&x.act(yi)))?;
            }
            ModuleMap::new(x.clone(), ind.module.clone(), ind.projection.mul(&lift)?)?
        }
    };
    map.validate()
        .map_err(|_| FrobeniusError::IllDefined("unit component is not a module map"))?;
    Ok(map)
}

/// `ε_Y: FG(Y) → Y` for a module `Y` in the domain of `G`.
pub fn counit_component(ad: &AdjunctionData, y: &Arc<Module>) -> Result<ModuleMap, FrobeniusError> {
    if !ad.is_d_module(y) {
        return Err(wrong_side(ad, false));
    }
    let fs = &ad.system;
    let r = fs.target();
    let map = match ad.flavor {
        Flavor::IndRes => {
            // class(r ⊗ n) ↦ r·n
            let res = restrict_module(fs, y)?;
            let ind = induce_module(fs, &res)?;
            let blocks: Vec<Matrix> = (0..r.dim()).map(|i| y.action()[i].clone()).collect();
            let m = hstack_or_empty(y.field(), y.dim(), &blocks)?;
            ModuleMap::new(ind.module.clone(), y.clone(), descend(&m, &ind)?)?
        }
        Flavor::ResInd => {
            // class(r ⊗ v) ↦ E(r)·v
            let ind = induce_module(fs, y)?;
            let source = restrict_module(fs, &ind.module)?;
            let blocks: Vec<Matrix> = (0..r.dim())
                .map(|i| y.act(&fs.e().col(i)))
                .collect();
            let m = hstack_or_empty(y.field(), y.dim(), &blocks)?;
            ModuleMap::new(source, y.clone(), descend(&m, &ind)?)?
        }
    };
    map.validate()
        .map_err(|_| FrobeniusError::IllDefined("counit component is not a module map"))?;
    Ok(map)
}

fn hstack_or_empty(
    field: crate::linalg::FieldSpec,
    rows: usize,
    blocks: &[Matrix],
) -> Result<Matrix, FrobeniusError> {
    if blocks.is_empty() {
        return Ok(Matrix::zeros(field, rows, 0));
    }
    Ok(Matrix::hstack(&blocks.iter().collect::<Vec<_>>())?)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TriangleRecord {
    pub member: usize,
    /// `"eps_F o F(eta)"` or `"G(eps) o eta_G"`.
    pub identity: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub composite: Option<Value>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TriangleReport {
    pub holds: bool,
    pub records: Vec<TriangleRecord>,
}

/// `ε_{F(X)} ∘ F(η_X) = 1` for members in the domain of `F` and `G(ε_Y) ∘ η_{G(Y)} = 1` for
/// members in the domain of `G`; members over both algebras get both checks.
pub fn triangle_identity_check(
    ad: &AdjunctionData,
    family: &[Arc<Module>],
) -> Result<TriangleReport, FrobeniusError> {
    let mut records = Vec::new();
    for (idx, m) in family.iter().enumerate() {
        let (on_c, on_d) = (ad.is_c_module(m), ad.is_d_module(m));
        if !on_c && !on_d {
            return Err(FrobeniusError::WrongSide("S or R"));
        }
        if on_c {
            let eta = unit_component(ad, m)?;
            let fx = ad.f_module(m)?;
            let composite = counit_component(ad, &fx)?.compose(&ad.f_map(&eta)?)?;
            records.push(record(idx, "eps_F o F(eta)", composite.matrix()));
        }
        if on_d {
            let gy = ad.g_module(m)?;
            let eta = unit_component(ad, &gy)?;
            let composite = ad.g_map(&counit_component(ad, m)?)?.compose(&eta)?;
            records.push(record(idx, "G(eps) o eta_G", composite.matrix()));
        }
    }
    Ok(TriangleReport {
        holds: records.iter().all(|r| r.holds),
        records,
    })
}

fn record(member: usize, identity: &'static str, composite: &Matrix) -> TriangleRecord {
    let holds = composite.is_identity();
    TriangleRecord {
        member,
        identity,
        holds,
        composite: (!holds).then(|| composite.to_json()),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct NaturalityReport {
    pub holds: bool,
    pub squares: usize,
    pub first_failure: Option<usize>,
}

/// `GF(f)∘η_X = η_{X'}∘f` for maps in the domain of `F`, `ε_{Y'}∘FG(f) = f∘ε_Y` for maps in
/// the domain of `G`.
pub fn naturality_check(ad: &AdjunctionData, maps: &[ModuleMap]) -> Result<NaturalityReport, FrobeniusError> {
    let mut squares = 0;
    let mut first_failure = None;
    for (idx, f) in maps.iter().enumerate() {
        let mut commutes = true;
        let mut checked = false;
        if ad.is_c_module(f.source()) {
            let gf = ad.g_map(&ad.f_map(f)?)?;
            let lhs = gf.compose(&unit_component(ad, f.source())?)?;
            let rhs = unit_component(ad, f.target())?.compose(f)?;
            commutes &= lhs.matrix() == rhs.matrix();
            checked = true;
            squares += 1;
        }
        if ad.is_d_module(f.source()) {
            let fg = ad.f_map(&ad.g_map(f)?)?;
            let lhs = counit_component(ad, f.target())?.compose(&fg)?;
            let rhs = f.compose(&counit_component(ad, f.source())?)?;
            commutes &= lhs.matrix() == rhs.matrix();
            checked = true;
            squares += 1;
        }
        if !checked {
            return Err(FrobeniusError::WrongSide("S or R"));
        }
        if !commutes && first_failure.is_none() {
            first_failure = Some(idx);
        }
    }
    Ok(NaturalityReport {
        holds: first_failure.is_none(),
        squares,
        first_failure,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ComponentRecord {
    pub member: usize,
    /// `"unit"` (must be injective) or `"counit"` (must be surjective).
    pub component: &'static str,
    pub rank: usize,
    pub required_rank: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FaithfulnessReport {
    /// Units injective on all members in the domain of `F`.
    pub f_faithful_on_family: bool,
    /// Counits surjective on all members in the domain of `G`.
    pub g_faithful_on_family: bool,
    pub records: Vec<ComponentRecord>,
}

pub fn faithfulness_check(ad: &AdjunctionData, family: &[Arc<Module>]) -> Result<FaithfulnessReport, FrobeniusError> {
    let mut records = Vec::new();
    for (idx, m) in family.iter().enumerate() {
        let (on_c, on_d) = (ad.is_c_module(m), ad.is_d_module(m));
        if !on_c && !on_d {
            return Err(FrobeniusError::WrongSide("S or R"));
        }
        if on_c {
            let eta = unit_component(ad, m)?;
            let rank = eta.rank();
            records.push(ComponentRecord {
                member: idx,
                component: "unit",
                rank,
                required_rank: m.dim(),
                holds: rank == m.dim(),
            });
        }
        if on_d {
            let eps = counit_component(ad, m)?;
            let rank = eps.rank();
            records.push(ComponentRecord {
                member: idx,
                component: "counit",
                rank,
                required_rank: m.dim(),
                holds: rank == m.dim(),
            });
        }
    }
    let all = |c: &str| records.iter().filter(|r| r.component == c).all(|r| r.holds);
    Ok(FaithfulnessReport {
        f_faithful_on_family: all("unit"),
        g_faithful_on_family: all("counit"),
        records,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AdjunctionExtReport {
    pub i_max: usize,
    /// `(dim Ext^i_C(X, G N), dim Ext^i_D(F X, N))` for each `i`.
    pub into_g: Vec<(usize, usize)>,
    /// `(dim Ext^i_C(G N, X), dim Ext^i_D(N, F X))` for each `i`.
    pub out_of_g: Vec<(usize, usize)>,
    pub holds: bool,
    /// First mismatching `(isomorphism, degree)`.
    pub first_mismatch: Option<(&'static str, usize)>,
}

/// Compares both Ext isomorphisms of a Frobenius pair dimensionwise for `0 ≤ i ≤ i_max`,
/// each side from its own resolution.
pub fn adjunction_ext_check(
    ad: &AdjunctionData,
    x: &Arc<Module>,
    n: &Arc<Module>,
    i_max: usize,
) -> Result<AdjunctionExtReport, FrobeniusError> {
    if !ad.is_c_module(x) {
        return Err(wrong_side(ad, true));
    }
    if !ad.is_d_module(n) {
        return Err(wrong_side(ad, false));
    }
    let gn = ad.g_module(n)?;
    let fx = ad.f_module(x)?;
    let zip = |a: Vec<usize>, b: Vec<usize>| a.into_iter().zip(b).collect::<Vec<_>>();
    let into_g = zip(ext_dims(x, &gn, i_max)?, ext_dims(&fx, n, i_max)?);
    let out_of_g = zip(ext_dims(&gn, x, i_max)?, ext_dims(n, &fx, i_max)?);
    let first_mismatch = into_g
        .iter()
        .position(|(a, b)| a != b)
        .map(|i| ("Ext(X, G N) = Ext(F X, N)", i))
        .or_else(|| {
            out_of_g
                .iter()
                .position(|(a, b)| a != b)
                .map(|i| ("Ext(G N, X) = Ext(N, F X)", i))
        });
    Ok(AdjunctionExtReport {
        i_max,
        into_g,
        out_of_g,
        holds: first_mismatch.is_none(),
        first_mismatch,
    })
}

/// Degree-zero case, computed directly from Hom spaces; returns `dim Hom_C(X, G N)` on success.
pub fn adjunction_hom_check(
    ad: &AdjunctionData,
    x: &Arc<Module>,
    n: &Arc<Module>,
) -> Result<Result<usize, (usize, usize)>, FrobeniusError> {
    if !ad.is_c_module(x) {
        return Err(wrong_side(ad, true));
    }
    if !ad.is_d_module(n) {
        return Err(wrong_side(ad, false));
    }
    let gn = ad.g_module(n)?;
    let fx = ad.f_module(x)?;
    let left = hom_dim(x, &gn)?;
    let right = hom_dim(&fx, n)?;
    if left != right {
        return Ok(Err((left, right)));
    }
    let (left, right) = (hom_dim(&gn, x)?, hom_dim(n, &fx)?);
    if left != right {
        return Ok(Err((left, right)));
    }
    Ok(Ok(hom_dim(x, &gn)?))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ExactnessPreservationReport {
    pub direction: Direction,
    pub exactness: ExactnessReport,
}

/// Applies induction or restriction to `0 → A → B → C → 0` and checks the image is exact.
pub fn exactness_preservation_check(
    fs: &FrobeniusSystem,
    ses: &ShortExactSequence,
    direction: Direction,
) -> Result<ExactnessPreservationReport, FrobeniusError> {
    let image = ses
        .as_chain()
        .iter()
        .map(|f| apply_direction_map(fs, f, direction))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ExactnessPreservationReport {
        direction,
        exactness: is_exact_complex(&image)?,
    })
}

fn apply_direction(fs: &FrobeniusSystem, m: &Arc<Module>, d: Direction) -> Result<Arc<Module>, FrobeniusError> {
    match d {
        Direction::Induce => Ok(induce_module(fs, m)?.module),
        Direction::Restrict => restrict_module(fs, m),
    }
}

fn apply_direction_map(fs: &FrobeniusSystem, f: &ModuleMap, d: Direction) -> Result<ModuleMap, FrobeniusError> {
    match d {
        Direction::Induce => {
            let src = induce_module(fs, f.source())?;
            let tgt = induce_module(fs, f.target())?;
            induce_map_between(f, &src, &tgt)
        }
        Direction::Restrict => restrict_map(fs, f),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ProjectivePreservationReport {
    pub direction: Direction,
    pub image_dim: usize,
    pub image_projective: bool,
    /// Splitting of the image's free cover.
    pub section: Option<Value>,
}

/// For projective `m`, checks that its image is projective and returns the splitting witness.
pub fn projective_preservation_check(
    fs: &FrobeniusSystem,
    m: &Arc<Module>,
    direction: Direction,
) -> Result<ProjectivePreservationReport, FrobeniusError> {
    if !is_projective(m)?.projective {
        return Err(FrobeniusError::PreconditionFailed("input module is not projective"));
    }
    let image = apply_direction(fs, m, direction)?;
    let w = is_projective(&image)?;
    Ok(ProjectivePreservationReport {
        direction,
        image_dim: image.dim(),
        image_projective: w.projective,
        section: w.section.map(|s| s.matrix().to_json()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GroupPresentation;
    use crate::linalg::FieldSpec;
    use crate::linalg::Scalar;
    use crate::module::hom_space;

    fn c2(p: u64) -> FrobeniusSystem {
        FrobeniusSystem::group_algebra(FieldSpec::gf(p), &GroupPresentation::cyclic(2))
    }

    fn character(fs: &FrobeniusSystem, sign: i64) -> Arc<Module> {
        let r = fs.target().clone();
        let f = r.field();
        Arc::new(Module::new(r, 1, vec![Matrix::identity(f, 1), Matrix::from_i64(f, &[vec![sign]])]).unwrap())
    }

    fn dual_numbers_skew() -> FrobeniusSystem {
        let f = FieldSpec::gf(3);
        let s = Arc::new(crate::algebra::Algebra::polynomial_quotient(f, "x", &[0, 0]));
        let sigma = vec![Matrix::identity(f, 2), Matrix::from_i64(f, &[vec![1, 0], vec![0, 2]])];
        FrobeniusSystem::skew_group(&s, &GroupPresentation::cyclic(2), &sigma).unwrap()
    }

    #[test]
    fn unit_and_counit_shapes() {
        let fs = c2(3);
        let ad = AdjunctionData::new(fs.clone(), Flavor::IndRes);
        let reg_s = Arc::new(Module::regular(fs.source().clone()));
        let eta = unit_component(&ad, &reg_s).unwrap();
        assert!(eta.is_injective());
        let reg_r = Arc::new(Module::regular(fs.target().clone()));
        let eps = counit_component(&ad, &reg_r).unwrap();
        assert!(eps.is_surjective());
        assert_eq!(eps.source().dim(), 4);
    }

    #[test]
    fn res_ind_counit_kills_non_identity_components() {
        let fs = dual_numbers_skew();
        let ad = AdjunctionData::new(fs.clone(), Flavor::ResInd);
        let reg_s = Arc::new(Module::regular(fs.source().clone()));
        let eps = counit_component(&ad, &reg_s).unwrap();
        let ind = induce_module(&fs, &reg_s).unwrap();
        // class(1⋅g ⊗ 1) ↦ E(1⋅g)·1 = 0
        let g = fs.dual_x()[1].clone();
        let c = ind.class_of(&g, fs.source().unit());
        assert!(eps.matrix().apply(&c).iter().all(Scalar::is_zero));
        let e = fs.dual_x()[0].clone();
        let c = ind.class_of(&e, fs.source().unit());
        assert_eq!(eps.matrix().apply(&c), fs.source().unit());
    }

    #[test]
    fn triangles_hold_for_both_flavors() {
        for fs in [c2(3), c2(2), dual_numbers_skew()] {
            let s_family = vec![
                Arc::new(Module::regular(fs.source().clone())),
                Arc::new(Module::zero(fs.source().clone())),
            ];
            let r_family = vec![
                Arc::new(Module::regular(fs.target().clone())),
                Arc::new(Module::zero(fs.target().clone())),
            ];
            let family: Vec<_> = s_family.into_iter().chain(r_family).collect();
            for flavor in [Flavor::IndRes, Flavor::ResInd] {
                let ad = AdjunctionData::new(fs.clone(), flavor);
                let rep = triangle_identity_check(&ad, &family).unwrap();
                assert!(rep.holds, "{flavor:?}: {rep:?}");
                assert_eq!(rep.records.len(), 4);
            }
        }
    }

    #[test]
    fn identity_extension_triangles() {
        let a = Arc::new(crate::algebra::Algebra::polynomial_quotient(FieldSpec::gf(3), "x", &[0, 0]));
        let ad = AdjunctionData::new(FrobeniusSystem::identity(a.clone()), Flavor::IndRes);
        let reg = Arc::new(Module::regular(a));
        let rep = triangle_identity_check(&ad, std::slice::from_ref(&reg)).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.records.len(), 2);
        assert!(unit_component(&ad, &reg).unwrap().matrix().is_identity());
    }

    #[test]
    fn corrupted_e_breaks_a_triangle() {
        let fs = c2(3);
        let f = FieldSpec::gf(3);
        let bad = fs.with_e(fs.e().scale(&f.from_i64(2))).unwrap();
        let ad = AdjunctionData::new(bad, Flavor::ResInd);
        let reg = Arc::new(Module::regular(fs.target().clone()));
        let rep = triangle_identity_check(&ad, &[reg]).unwrap();
        assert!(!rep.holds);
        assert!(rep.records.iter().any(|r| r.composite.is_some()));
    }

    #[test]
    fn naturality_on_character_maps() {
        let fs = c2(3);
        let triv = character(&fs, 1);
        let reg = Arc::new(Module::regular(fs.target().clone()));
        let maps = hom_space(&reg, &triv).unwrap();
        for flavor in [Flavor::IndRes, Flavor::ResInd] {
            let ad = AdjunctionData::new(fs.clone(), flavor);
            let rep = naturality_check(&ad, &maps).unwrap();
            assert!(rep.holds);
            assert_eq!(rep.squares, maps.len());
        }
    }

    #[test]
    fn faithfulness_on_group_algebra() {
        let fs = c2(3);
        let ad = AdjunctionData::new(fs.clone(), Flavor::IndRes);
        let family = vec![
            Arc::new(Module::regular(fs.target().clone())),
            character(&fs, 1),
            character(&fs, -1),
            Arc::new(Module::zero(fs.target().clone())),
            Arc::new(Module::regular(fs.source().clone())),
        ];
        let rep = faithfulness_check(&ad, &family).unwrap();
        assert!(rep.f_faithful_on_family && rep.g_faithful_on_family);
    }

    #[test]
    fn hom_check_group_algebra() {
        let fs = c2(3);
        let ad = AdjunctionData::new(fs.clone(), Flavor::IndRes);
        let k = Arc::new(Module::regular(fs.source().clone()));
        let r = Arc::new(Module::regular(fs.target().clone()));
        assert_eq!(adjunction_hom_check(&ad, &k, &r).unwrap(), Ok(2));
        let rep = adjunction_ext_check(&ad, &k, &character(&fs, -1), 2).unwrap();
        assert!(rep.holds);
    }

    #[test]
    fn preservation() {
        let fs = dual_numbers_skew();
        let s = fs.source().clone();
        let reg = Arc::new(Module::regular(s.clone()));
        let k = Arc::new(
            Module::new(s.clone(), 1, vec![Matrix::identity(s.field(), 1), Matrix::zeros(s.field(), 1, 1)]).unwrap(),
        );
        // 0 → k → A → k → 0, first map multiplication by x
        let x = s.right_mult_matrix(&s.basis_vector(1));
        let incl = ModuleMap::checked(k.clone(), reg.clone(), Matrix::from_columns(s.field(), 2, &[x.col(0)])).unwrap();
        let (_, proj) = crate::module::cokernel_module(&incl).unwrap();
        let ses = ShortExactSequence::new(incl, proj).unwrap();
        let rep = exactness_preservation_check(&fs, &ses, Direction::Induce).unwrap();
        assert!(rep.exactness.exact);
        let p = projective_preservation_check(&fs, &reg, Direction::Induce).unwrap();
        assert!(p.image_projective && p.section.is_some());
        assert!(matches!(
            projective_preservation_check(&fs, &k, Direction::Induce),
            Err(FrobeniusError::PreconditionFailed(_))
        ));
    }
}
