//! Free covers, syzygies, free resolutions, Ext dimensions, projectivity, exactness and
//! complete-resolution segments.
//!
//! Covers are always by free modules `A^g`, never by indecomposable projectives, so resolutions
//! are generally not minimal. Only Ext dimensions and exactness are ever read off them, and
//! both are independent of that choice.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::Algebra;
use crate::linalg::{kernel, rank, solve, LinearSystem, Matrix, Scalar, Term};
use crate::module::{
    a_dual_over, cokernel_module, kernel_module, same_algebra, Module, ModuleError, ModuleMap,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologicalError {
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error("maps {0} and {1} are not composable")]
    NotComposable(usize, usize),
    #[error("not Gorenstein projective: {0}")]
    NotGorensteinProjective(String),
    #[error("profile spot check failed: Ext^{degree}({label}, A) has dimension {dim}")]
    ProfileSpotCheckFailed {
        label: String,
        degree: usize,
        dim: usize,
    },
    #[error("resolution certification failed at degree {0}")]
    NotExact(usize),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

impl From<crate::linalg::LinalgError> for HomologicalError {
    fn from(e: crate::linalg::LinalgError) -> Self {
        HomologicalError::Module(e.into())
    }
}

/// A surjection `A^rank → M` sending the j-th free generator to `generators[j]`.
#[derive(Clone, Debug)]
pub struct FreeCover {
    pub free: Arc<Module>,
    pub rank: usize,
    pub generators: Vec<Vec<Scalar>>,
    pub map: ModuleMap,
}

/// Greedy generating set: at each step take the candidate enlarging the generated submodule
/// most, among basis vectors outside it and their sum; ties go to the earliest basis vector.
pub fn greedy_generators(m: &Module) -> Vec<Vec<Scalar>> {
    let f = m.field();
    let mut chosen: Vec<Vec<Scalar>> = Vec::new();
    let mut span = m.generated_submodule(&[]);
    while span.rank() < m.dim() {
        let mut candidates: Vec<Vec<Scalar>> = (0..m.dim())
            .map(|v| {
                let mut e = vec![f.zero(); m.dim()];
                e[v] = f.one();
                e
            })
            .filter(|e| !span.contains(e))
            .collect();
        if candidates.len() > 1 {
            let sum = candidates.iter().skip(1).fold(candidates[0].clone(), |acc, c| {
                acc.iter().zip(c).map(|(a, b)| a + b).collect()
            });
            candidates.push(sum);
        }
        let mut best: Option<(usize, crate::linalg::EchelonForm, Vec<Scalar>)> = None;
        for c in candidates {
            let mut grown = span.clone();
            for a in m.action() {
                grown.insert(a.apply(&c));
            }
            if best.as_ref().is_none_or(|(r, _, _)| grown.rank() > *r) {
                best = Some((grown.rank(), grown, c));
            }
        }
        let (_, grown, c) = best.expect("a vector outside a proper subspace exists");
        span = grown;
        chosen.push(c);
    }
    chosen
}

/// The evaluation map `A^g → M` for the given generators.
pub fn free_cover_from_generators(
    m: &Arc<Module>,
    generators: Vec<Vec<Scalar>>,
) -> Result<FreeCover, HomologicalError> {
    let a = m.algebra();
    let rank = generators.len();
    let free = Arc::new(Module::free(a.clone(), rank));
    let mut cols = Vec::with_capacity(rank * a.dim());
    for g in &generators {
        for b in m.action() {
            cols.push(b.apply(g));
        }
    }
    let matrix = Matrix::from_columns(m.field(), m.dim(), &cols);
    let map = ModuleMap::new(free.clone(), m.clone(), matrix)?;
    Ok(FreeCover {
        free,
        rank,
        generators,
        map,
    })
}

pub fn free_cover(m: &Arc<Module>) -> Result<FreeCover, HomologicalError> {
    free_cover_from_generators(m, greedy_generators(m))
}

/// Kernel of the greedy free cover.
pub fn syzygy(m: &Arc<Module>) -> Result<Arc<Module>, HomologicalError> {
    let cover = free_cover(m)?;
    Ok(kernel_module(&cover.map)?.0)
}

/// `n`-th syzygy, `Ω⁰M = M`.
pub fn iterated_syzygy(m: &Arc<Module>, n: usize) -> Result<Arc<Module>, HomologicalError> {
    let mut cur = m.clone();
    for _ in 0..n {
        cur = syzygy(&cur)?;
    }
    Ok(cur)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DegreeAudit {
    pub degree: usize,
    pub free_rank: usize,
    pub dim: usize,
    pub rank_out: usize,
    pub rank_in: usize,
}

/// `F_n → … → F_1 → F_0 → M → 0`, exact at every `F_i` with `i < n` and at `M`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub module: Arc<Module>,
    pub free_modules: Vec<Arc<Module>>,
    pub ranks: Vec<usize>,
    pub augmentation: ModuleMap,
    /// `differentials[i]` is `d_{i+1}: F_{i+1} → F_i`.
    pub differentials: Vec<ModuleMap>,
    pub audit: Vec<DegreeAudit>,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ranks": self.ranks,
            "augmentation": self.augmentation.matrix().to_json(),
            "differentials": self.differentials.iter().map(|d| d.matrix().to_json()).collect::<Vec<_>>(),
            "audit": self.audit,
        })
    }
}

fn resolve_with(
    m: &Arc<Module>,
    length: usize,
    choose: &dyn Fn(&Module) -> Vec<Vec<Scalar>>,
) -> Result<FreeResolution, HomologicalError> {
    let cover = free_cover_from_generators(m, choose(m))?;
    let augmentation = cover.map.clone();
    let mut free_modules = vec![cover.free.clone()];
    let mut ranks = vec![cover.rank];
    let mut differentials: Vec<ModuleMap> = Vec::with_capacity(length);
    let mut previous = augmentation.clone();
    for _ in 0..length {
        let (k, inc) = kernel_module(&previous)?;
        let c = free_cover_from_generators(&k, choose(&k))?;
        let d = inc.compose(&c.map)?;
        free_modules.push(c.free.clone());
        ranks.push(c.rank);
        differentials.push(d.clone());
        previous = d;
    }
    let mut audit = Vec::with_capacity(length + 1);
    if augmentation.rank() != m.dim() {
        return Err(HomologicalError::NotExact(0));
    }
    for i in 0..=length {
        let rank_out = if i == 0 {
            augmentation.rank()
        } else {
            differentials[i - 1].rank()
        };
        let rank_in = if i < length { differentials[i].rank() } else { 0 };
        let dim = free_modules[i].dim();
        if i < length {
            let out = if i == 0 { &augmentation } else { &differentials[i - 1] };
            if !out.compose(&differentials[i])?.is_zero() || rank_in + rank_out != dim {
                return Err(HomologicalError::NotExact(i));
            }
        }
        audit.push(DegreeAudit {
            degree: i,
            free_rank: ranks[i],
            dim,
            rank_out,
            rank_in,
        });
    }
    Ok(FreeResolution {
        module: m.clone(),
        free_modules,
        ranks,
        augmentation,
        differentials,
        audit,
    })
}

/// Iterated greedy free covers, certified exact by rank counts.
pub fn free_resolution(m: &Arc<Module>, length: usize) -> Result<FreeResolution, HomologicalError> {
    resolve_with(m, length, &greedy_generators)
}

/// A deliberately non-minimal resolution: at each step the greedy generators are joined by
/// two redundant ones, a repeat of the first generator and the sum of all of them.
pub fn padded_free_resolution(m: &Arc<Module>, length: usize) -> Result<FreeResolution, HomologicalError> {
    resolve_with(m, length, &|module: &Module| {
        let mut gens = greedy_generators(module);
        if let Some(first) = gens.first().cloned() {
            let sum = gens.iter().skip(1).fold(first.clone(), |acc, g| {
                acc.iter().zip(g).map(|(a, b)| a + b).collect()
            });
            gens.push(first);
            gens.push(sum);
        }
        gens
    })
}

/// Component `a_{jk} ∈ A` of `d(e_j) = Σ_k a_{jk} e_k` for a map between free modules.
fn free_map_entries(a: &Algebra, source_rank: usize, target_rank: usize, matrix: &Matrix) -> Vec<Vec<Vec<Scalar>>> {
    let n = a.dim();
    (0..source_rank)
        .map(|j| {
            let mut e = vec![a.field().zero(); source_rank * n];
            for (t, u) in a.unit().iter().enumerate() {
                e[j * n + t] = u.clone();
            }
            let image = matrix.apply(&e);
            (0..target_rank)
                .map(|k| image[k * n..(k + 1) * n].to_vec())
                .collect()
        })
        .collect()
}

/// Matrix of `Hom(d, N): Hom(A^{g'}, N) → Hom(A^g, N)` for `d: A^g → A^{g'}`, using
/// `Hom(A^g, N) ≅ N^g` (evaluation at the free generators).
pub fn hom_free_map(
    algebra: &Algebra,
    source_rank: usize,
    target_rank: usize,
    d: &Matrix,
    n: &Module,
) -> Matrix {
    let entries = free_map_entries(algebra, source_rank, target_rank, d);
    let dn = n.dim();
    let mut out = Matrix::zeros(n.field(), source_rank * dn, target_rank * dn);
    for (j, row) in entries.iter().enumerate() {
        for (k, a) in row.iter().enumerate() {
            if a.iter().all(Scalar::is_zero) {
                continue;
            }
            out.set_block(j * dn, k * dn, &n.act(a));
        }
    }
    out
}

/// Cochain maps `δ_i: Hom(F_{i-1}, N) → Hom(F_i, N)` for `i = 1..=length`.
pub fn hom_cochain(res: &FreeResolution, n: &Module) -> Vec<Matrix> {
    let a = res.module.algebra();
    res.differentials
        .iter()
        .enumerate()
        .map(|(i, d)| hom_free_map(a, res.ranks[i + 1], res.ranks[i], d.matrix(), n))
        .collect()
}

/// `dim Ext^i(M, N)` for `i = 0..=i_max`, all read off one resolution of length `i_max + 1`.
pub fn ext_dims_from(res: &FreeResolution, n: &Module, i_max: usize) -> Vec<usize> {
    assert!(res.length() > i_max, "resolution too short");
    let cochain = hom_cochain(res, n);
    let dims: Vec<usize> = res.ranks.iter().map(|g| g * n.dim()).collect();
    let ranks: Vec<usize> = cochain.iter().map(rank).collect();
    (0..=i_max)
        .map(|i| {
            let kernel_dim = dims[i] - ranks[i];
            let image_dim = if i == 0 { 0 } else { ranks[i - 1] };
            kernel_dim - image_dim
        })
        .collect()
}

pub fn ext_dims(m: &Arc<Module>, n: &Arc<Module>, i_max: usize) -> Result<Vec<usize>, HomologicalError> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(HomologicalError::AlgebraMismatch);
    }
    let res = free_resolution(m, i_max + 1)?;
    Ok(ext_dims_from(&res, n, i_max))
}

pub fn ext_dim(m: &Arc<Module>, n: &Arc<Module>, i: usize) -> Result<usize, HomologicalError> {
    Ok(ext_dims(m, n, i)?[i])
}

/// Outcome of the splitting test for the free cover.
#[derive(Clone, Debug)]
pub struct ProjectivityWitness {
    pub projective: bool,
    pub cover: FreeCover,
    /// `σ: M → F` with `π∘σ = id`, when one exists.
    pub section: Option<ModuleMap>,
}

/// `M` is projective iff its free cover splits; solved as one linear system for the section.
pub fn is_projective(m: &Arc<Module>) -> Result<ProjectivityWitness, HomologicalError> {
    let cover = free_cover(m)?;
    let f = m.field();
    let free = &cover.free;
    let mut sys = LinearSystem::new(f);
    let z = sys.add_block(free.dim(), m.dim());
    for (am, af) in m.action().iter().zip(free.action()) {
        let neg = af.neg();
        sys.add_equation(&[Term::new(z, None, Some(am)), Term::new(z, Some(&neg), None)], None)?;
    }
    if m.dim() > 0 {
        sys.add_equation(
            &[Term::new(z, Some(cover.map.matrix()), None)],
            Some(&Matrix::identity(f, m.dim())),
        )?;
    }
    let section = match sys.solve() {
        Some(mut blocks) => Some(ModuleMap::new(m.clone(), free.clone(), blocks.remove(0))?),
        None => None,
    };
    Ok(ProjectivityWitness {
        projective: section.is_some(),
        cover,
        section,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NodeAudit {
    pub node: usize,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExactnessReport {
    pub exact: bool,
    /// Index of the first interior node where exactness fails.
    pub first_failure: Option<usize>,
    pub nodes: Vec<NodeAudit>,
}

/// Exactness of a chain of linear maps `V_0 → V_1 → … → V_k` at the interior nodes
/// `V_1 … V_{k-1}`; `maps[j]: V_j → V_{j+1}`.
pub fn linear_chain_exactness(maps: &[Matrix]) -> Result<ExactnessReport, HomologicalError> {
    for j in 1..maps.len() {
        if maps[j].cols() != maps[j - 1].rows() {
            return Err(HomologicalError::NotComposable(j - 1, j));
        }
    }
    let mut nodes = Vec::new();
    let mut first_failure = None;
    for j in 1..maps.len() {
        let dim = maps[j].cols();
        let rank_in = rank(&maps[j - 1]);
        let rank_out = rank(&maps[j]);
        let composite_zero = maps[j].mul(&maps[j - 1])?.is_zero();
        let exact = composite_zero && rank_in + rank_out == dim;
        if !exact && first_failure.is_none() {
            first_failure = Some(j);
        }
        nodes.push(NodeAudit {
            node: j,
            dim,
            rank_in,
            rank_out,
            exact,
        });
    }
    Ok(ExactnessReport {
        exact: first_failure.is_none(),
        first_failure,
        nodes,
    })
}

/// `d∘d = 0` and image = kernel at every interior node of a chain of module maps.
pub fn is_exact_complex(maps: &[ModuleMap]) -> Result<ExactnessReport, HomologicalError> {
    for j in 1..maps.len() {
        let (prev, next) = (&maps[j - 1], &maps[j]);
        if prev.target().dim() != next.source().dim()
            || !same_algebra(prev.target().algebra(), next.source().algebra())
        {
            return Err(HomologicalError::NotComposable(j - 1, j));
        }
    }
    let mats: Vec<Matrix> = maps.iter().map(|m| m.matrix().clone()).collect();
    linear_chain_exactness(&mats)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValidationMode {
    Asserted,
    SpotChecked,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpotCheckEntry {
    pub label: String,
    pub ext_dim: usize,
}

/// A declared bound `d` on the self-injective dimension of the algebra. Under it, Gorenstein
/// projectivity of `M` reduces to `Ext^i(M, A) = 0` for `1 ≤ i ≤ d`.
#[derive(Clone, Debug)]
pub struct GorensteinProfile {
    pub algebra: Arc<Algebra>,
    pub d: usize,
    pub mode: ValidationMode,
    pub spot_log: Vec<SpotCheckEntry>,
}

impl GorensteinProfile {
    pub fn asserted(algebra: Arc<Algebra>, d: usize) -> Self {
        Self {
            algebra,
            d,
            mode: ValidationMode::Asserted,
            spot_log: Vec::new(),
        }
    }

    /// Checks `Ext^{d+1}(M, A) = 0` over `corpus` and over every cyclic module `A/Ab`.
    pub fn spot_checked(
        algebra: Arc<Algebra>,
        d: usize,
        corpus: &[(String, Arc<Module>)],
    ) -> Result<Self, HomologicalError> {
        let regular = Arc::new(Module::regular(algebra.clone()));
        let mut candidates: Vec<(String, Arc<Module>)> = corpus.to_vec();
        for i in 0..algebra.dim() {
            let right = algebra.right_mult_matrix(&algebra.basis_vector(i));
            let map = ModuleMap::new(regular.clone(), regular.clone(), right)?;
            let (cyclic, _) = cokernel_module(&map)?;
            candidates.push((format!("A/A{}", algebra.labels()[i]), cyclic));
        }
        let mut spot_log = Vec::with_capacity(candidates.len());
        for (label, m) in candidates {
            if !same_algebra(m.algebra(), &algebra) {
                return Err(HomologicalError::AlgebraMismatch);
            }
            let dim = ext_dim(&m, &regular, d + 1)?;
            if dim != 0 {
                return Err(HomologicalError::ProfileSpotCheckFailed {
                    label,
                    degree: d + 1,
                    dim,
                });
            }
            spot_log.push(SpotCheckEntry { label, ext_dim: dim });
        }
        Ok(Self {
            algebra,
            d,
            mode: ValidationMode::SpotChecked,
            spot_log,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "mode": self.mode,
            "spot_log": self.spot_log,
            "note": "Gorenstein parameter is declared, not derived; conclusions are relative to it",
        })
    }
}

/// `P_w → … → P_0 → P^0 → … → P^w`, exact and `Hom(−, A)`-exact, with `M ≅ ker(P^0 → P^1)`.
#[derive(Clone, Debug)]
pub struct CompleteResolutionSegment {
    pub width: usize,
    /// Left to right: `P_w, …, P_0, P^0, …, P^w`.
    pub modules: Vec<Arc<Module>>,
    /// `maps[j]: modules[j] → modules[j+1]`.
    pub maps: Vec<ModuleMap>,
    pub free_ranks: Vec<usize>,
    /// Basis of `ker(P^0 → P^1)` as columns.
    pub kernel_basis: Matrix,
    /// Invertible matrix expressing `M → ker(P^0 → P^1)` in that basis.
    pub isomorphism: Matrix,
    pub exactness: ExactnessReport,
    pub dual_exactness: ExactnessReport,
}

impl CompleteResolutionSegment {
    pub fn to_json(&self) -> Value {
        json!({
            "width": self.width,
            "free_ranks": self.free_ranks,
            "maps": self.maps.iter().map(|m| m.matrix().to_json()).collect::<Vec<_>>(),
            "kernel_basis": self.kernel_basis.to_json(),
            "isomorphism": self.isomorphism.to_json(),
            "exactness": self.exactness,
            "dual_exactness": self.dual_exactness,
        })
    }
}

/// `C → A^g` assembled from generators of `Hom_A(C, A)` over `A^op`; every map `C → A` factors
/// through it.
pub fn dual_embedding(c: &Arc<Module>, opposite: &Arc<Algebra>) -> Result<FreeCover, HomologicalError> {
    let dual = a_dual_over(c, opposite.clone())?;
    let gens = greedy_generators(&dual.module);
    let a = c.algebra();
    let f = c.field();
    let mut blocks = Vec::with_capacity(gens.len());
    for g in &gens {
        let mut phi = Matrix::zeros(f, a.dim(), c.dim());
        for (coef, basis) in g.iter().zip(&dual.basis) {
            if !coef.is_zero() {
                phi = phi.add(&basis.scale(coef))?;
            }
        }
        blocks.push(phi);
    }
    let free = Arc::new(Module::free(a.clone(), gens.len()));
    let matrix = if blocks.is_empty() {
        Matrix::zeros(f, 0, c.dim())
    } else {
        Matrix::vstack(&blocks.iter().collect::<Vec<_>>())?
    };
    let map = ModuleMap::new(c.clone(), free.clone(), matrix)?;
    Ok(FreeCover {
        free,
        rank: gens.len(),
        generators: gens,
        map,
    })
}

/// Builds and certifies a complete-resolution segment of width `w` around `m`.
///
/// The left half is the free resolution; the right half iterates the dual-transpose step
/// `C ↪ A^g` on successive cokernels. Any failed check is reported as
/// [`HomologicalError::NotGorensteinProjective`].
pub fn complete_resolution(
    m: &Arc<Module>,
    width: usize,
    profile: &GorensteinProfile,
) -> Result<CompleteResolutionSegment, HomologicalError> {
    if !same_algebra(m.algebra(), &profile.algebra) {
        return Err(HomologicalError::AlgebraMismatch);
    }
    let a = m.algebra().clone();
    let regular = Arc::new(Module::regular(a.clone()));
    if profile.d > 0 {
        let ext = ext_dims(m, &regular, profile.d)?;
        if let Some(i) = (1..=profile.d).find(|&i| ext[i] != 0) {
            return Err(HomologicalError::NotGorensteinProjective(format!(
                "Ext^{i}(M, A) has dimension {}",
                ext[i]
            )));
        }
    }
    let res = free_resolution(m, width)?;
    let opposite = Arc::new(a.opposite());

    // right half: ι_j: C_j ↪ P^j, C_{j+1} = coker ι_j
    let mut embeddings: Vec<FreeCover> = Vec::with_capacity(width + 1);
    let mut projections: Vec<ModuleMap> = Vec::with_capacity(width);
    let mut current = m.clone();
    for j in 0..=width {
        let emb = dual_embedding(&current, &opposite)?;
        if !emb.map.is_injective() {
            return Err(HomologicalError::NotGorensteinProjective(format!(
                "cosyzygy {j} does not embed into a free module"
            )));
        }
        if j < width {
            let (next, proj) = cokernel_module(&emb.map)?;
            projections.push(proj);
            current = next;
        }
        embeddings.push(emb);
    }

    let mut modules: Vec<Arc<Module>> = Vec::with_capacity(2 * width + 2);
    let mut maps: Vec<ModuleMap> = Vec::with_capacity(2 * width + 1);
    let mut free_ranks = Vec::with_capacity(2 * width + 2);
    for i in (0..=width).rev() {
        modules.push(res.free_modules[i].clone());
        free_ranks.push(res.ranks[i]);
        if i > 0 {
            maps.push(res.differentials[i - 1].clone());
        }
    }
    maps.push(embeddings[0].map.compose(&res.augmentation)?);
    for j in 0..=width {
        modules.push(embeddings[j].free.clone());
        free_ranks.push(embeddings[j].rank);
        if j < width {
            maps.push(embeddings[j + 1].map.compose(&projections[j])?);
        }
    }

    let exactness = is_exact_complex(&maps)?;
    if let Some(node) = exactness.first_failure {
        return Err(HomologicalError::NotGorensteinProjective(format!(
            "segment not exact at node {node}"
        )));
    }
    // Hom(−, A) turns the chain around; all terms are free so evaluation coordinates apply.
    let dual_maps: Vec<Matrix> = maps
        .iter()
        .zip(free_ranks.windows(2))
        .rev()
        .map(|(d, r)| hom_free_map(&a, r[0], r[1], d.matrix(), &regular))
        .collect();
    let dual_exactness = linear_chain_exactness(&dual_maps)?;
    if let Some(node) = dual_exactness.first_failure {
        return Err(HomologicalError::NotGorensteinProjective(format!(
            "Hom(−, A) of the segment not exact at node {node}"
        )));
    }

    let d0 = if width > 0 {
        maps[width + 1].matrix().clone()
    } else {
        Matrix::zeros(m.field(), 0, embeddings[0].free.dim())
    };
    let kernel_basis = kernel(&d0);
    let isomorphism = solve(&kernel_basis, embeddings[0].map.matrix())?.ok_or_else(|| {
        HomologicalError::NotGorensteinProjective("M does not land in ker(P^0 → P^1)".into())
    })?;
    if isomorphism.rows() != isomorphism.cols() || rank(&isomorphism) != isomorphism.cols() {
        return Err(HomologicalError::NotGorensteinProjective(
            "M → ker(P^0 → P^1) is not an isomorphism".into(),
        ));
    }
    Ok(CompleteResolutionSegment {
        width,
        modules,
        maps,
        free_ranks,
        kernel_basis,
        isomorphism,
        exactness,
        dual_exactness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;

    fn dual_numbers() -> Arc<Algebra> {
        Arc::new(Algebra::polynomial_quotient(FieldSpec::gf(3), "x", &[0, 0]))
    }

    fn k_over(a: &Arc<Algebra>) -> Arc<Module> {
        let f = a.field();
        Arc::new(Module::new(a.clone(), 1, vec![Matrix::identity(f, 1), Matrix::zeros(f, 1, 1)]).unwrap())
    }

    #[test]
    fn covers() {
        let a = dual_numbers();
        let reg = Arc::new(Module::regular(a.clone()));
        let c = free_cover(&reg).unwrap();
        assert_eq!(c.rank, 1);
        assert!(c.map.matrix().is_identity());
        assert_eq!(syzygy(&reg).unwrap().dim(), 0);

        let zero = Arc::new(Module::zero(a.clone()));
        assert_eq!(free_cover(&zero).unwrap().rank, 0);

        let k = k_over(&a);
        let c = free_cover(&k).unwrap();
        assert_eq!(c.rank, 1);
        assert_eq!(kernel_module(&c.map).unwrap().0.dim(), 1);
    }

    #[test]
    fn covers_over_t2() {
        let a = Arc::new(Algebra::upper_triangular(FieldSpec::rationals(), 2));
        let reg = Arc::new(Module::regular(a.clone()));
        // no basis vector generates T₂, so the cover picks their sum, a unit
        let c = free_cover(&reg).unwrap();
        assert_eq!(c.rank, 1);
        assert!(c.map.is_injective() && c.map.is_surjective());
        let f = a.field();
        let s2 = Arc::new(
            Module::new(a, 1, vec![Matrix::zeros(f, 1, 1), Matrix::zeros(f, 1, 1), Matrix::identity(f, 1)]).unwrap(),
        );
        // free covers cannot reach the projective cover P₂ → S₂
        let omega = syzygy(&s2).unwrap();
        assert_eq!(omega.dim(), 2);
        assert!(is_projective(&omega).unwrap().projective);
        assert_eq!(free_resolution(&s2, 3).unwrap().ranks, vec![1, 2, 2, 2]);
    }

    #[test]
    fn periodic_resolution_of_k() {
        let a = dual_numbers();
        let k = k_over(&a);
        let res = free_resolution(&k, 3).unwrap();
        assert_eq!(res.ranks, vec![1, 1, 1, 1]);
        let x = a.right_mult_matrix(&a.basis_vector(1));
        for d in &res.differentials {
            assert_eq!(rank(d.matrix()), 1);
            assert_eq!(*d.matrix(), x);
        }
        let omega = syzygy(&k).unwrap();
        assert_eq!(*omega, *k);
    }

    #[test]
    fn ext_of_k_is_one_dimensional() {
        let a = dual_numbers();
        let k = k_over(&a);
        assert_eq!(ext_dims(&k, &k, 2).unwrap(), vec![1, 1, 1]);
        let reg = Arc::new(Module::regular(a.clone()));
        assert_eq!(ext_dims(&reg, &k, 3).unwrap(), vec![1, 0, 0, 0]);
        assert_eq!(ext_dims(&k, &reg, 2).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn projectivity() {
        let a = dual_numbers();
        assert!(is_projective(&Arc::new(Module::regular(a.clone()))).unwrap().projective);
        let w = is_projective(&k_over(&a)).unwrap();
        assert!(!w.projective);
        assert!(w.section.is_none());
    }

    #[test]
    fn exactness_checks() {
        let a = dual_numbers();
        let k = k_over(&a);
        let zero = Arc::new(Module::zero(a.clone()));
        let chain = [
            ModuleMap::zero(zero.clone(), k.clone()),
            ModuleMap::identity(k.clone()),
            ModuleMap::zero(k.clone(), zero.clone()),
        ];
        assert!(is_exact_complex(&chain).unwrap().exact);
        let bad = [ModuleMap::zero(zero.clone(), k.clone()), ModuleMap::zero(k.clone(), zero)];
        let r = is_exact_complex(&bad).unwrap();
        assert_eq!(r.first_failure, Some(1));

        let reg = Arc::new(Module::regular(a.clone()));
        let x = ModuleMap::checked(reg.clone(), reg, a.right_mult_matrix(&a.basis_vector(1))).unwrap();
        assert!(is_exact_complex(&[x.clone(), x.clone()]).unwrap().exact);
        assert!(matches!(
            is_exact_complex(&[ModuleMap::identity(k_over(&a)), x]),
            Err(HomologicalError::NotComposable(0, 1))
        ));
    }

    #[test]
    fn complete_resolution_of_k() {
        let a = dual_numbers();
        let k = k_over(&a);
        let profile = GorensteinProfile::asserted(a.clone(), 0);
        let seg = complete_resolution(&k, 2, &profile).unwrap();
        assert_eq!(seg.modules.len(), 6);
        assert_eq!(seg.free_ranks, vec![1; 6]);
        let x = a.right_mult_matrix(&a.basis_vector(1));
        for m in &seg.maps {
            assert_eq!(*m.matrix(), x);
        }
        assert!(seg.exactness.exact && seg.dual_exactness.exact);
    }

    #[test]
    fn spot_checked_profile_for_dual_numbers() {
        let a = dual_numbers();
        let p = GorensteinProfile::spot_checked(a.clone(), 0, &[("k".into(), k_over(&a))]).unwrap();
        assert_eq!(p.spot_log.len(), 3);
        assert!(p.spot_log.iter().all(|e| e.ext_dim == 0));
    }
}
