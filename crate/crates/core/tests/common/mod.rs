//! Independent Ext oracle: padded resolution, Hom spaces by the generic module-map solver,
//! cochain ranks from flattened composites.

#![allow(dead_code)]

use std::sync::Arc;

use gpw_core::homological::padded_free_resolution;
use gpw_core::linalg::{rank, Matrix};
use gpw_core::module::{hom_space, Module, ModuleMap};

/// Rank of `Hom(d, N): Hom(F_i, N) → Hom(F_{i+1}, N)` given a basis of `Hom(F_i, N)`.
fn cochain_rank(basis: &[ModuleMap], d: &ModuleMap) -> usize {
    if basis.is_empty() {
        return 0;
    }
    let field = d.matrix().field();
    let cols: Vec<Vec<_>> = basis
        .iter()
        .map(|f| {
            let c = f.matrix().mul(d.matrix()).expect("composable");
            (0..c.rows()).flat_map(|r| c.row(r).to_vec()).collect()
        })
        .collect();
    let len = cols[0].len();
    if len == 0 {
        return 0;
    }
    rank(&Matrix::from_columns(field, len, &cols))
}

/// `dim Ext^i(M, N)` for `0 ≤ i ≤ i_max` from a padded resolution.
pub fn oracle_ext_dims(m: &Arc<Module>, n: &Arc<Module>, i_max: usize) -> Vec<usize> {
    let res = padded_free_resolution(m, i_max + 1).expect("padded resolution");
    let homs: Vec<Vec<ModuleMap>> = res
        .free_modules
        .iter()
        .map(|f| hom_space(f, n).expect("hom space"))
        .collect();
    let ranks: Vec<usize> = (0..=i_max)
        .map(|i| cochain_rank(&homs[i], &res.differentials[i]))
        .collect();
    (0..=i_max)
        .map(|i| homs[i].len() - ranks[i] - if i == 0 { 0 } else { ranks[i - 1] })
        .collect()
}

pub fn oracle_ext_dim(m: &Arc<Module>, n: &Arc<Module>, i: usize) -> usize {
    oracle_ext_dims(m, n, i)[i]
}

/// The fixture corpus, built once per test binary.
pub fn corpus() -> &'static gpw_core::fixtures::Corpus {
    static CORPUS: std::sync::OnceLock<gpw_core::fixtures::Corpus> = std::sync::OnceLock::new();
    CORPUS.get_or_init(gpw_core::fixtures::Corpus::build)
}

/// `Σ coeffs[j]·basis[j]` over `Hom(m, n)`, cycling through `coeffs`.
pub fn combination(m: &Arc<Module>, n: &Arc<Module>, coeffs: &[i64]) -> ModuleMap {
    let basis = hom_space(m, n).expect("hom space");
    let field = m.field();
    basis
        .iter()
        .zip(coeffs.iter().cycle())
        .fold(ModuleMap::zero(m.clone(), n.clone()), |acc, (f, &c)| {
            acc.add(&f.scale(&field.from_i64(c))).expect("same source and target")
        })
}
