//! Separability certificates: separability elements in `R ⊗_S R`, the Casimir element
//! `Σ x_i ⊗ y_i`, and family-relative natural splittings of the unit or counit.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::linalg::{rank, solve, LinearSystem, Matrix, Scalar, Term};
use crate::module::{hom_space, Module, ModuleMap};

use super::adjunction::{counit_component, unit_component, AdjunctionData};
use super::induction::{induce_module, restrict_module, InducedModule};
use super::{FrobeniusError, FrobeniusSystem};

/// `R ⊗_S R` as an `R`-bimodule, realized as a quotient of `R ⊗_k R`.
#[derive(Clone, Debug)]
pub struct TensorSquare {
    pub induced: InducedModule,
    /// Right action of each basis element of `R` on the quotient.
    pub right_action: Vec<Matrix>,
    /// `μ: R ⊗_S R → R`, `a ⊗ b ↦ ab`.
    pub multiplication: Matrix,
    labels: Vec<String>,
}

impl TensorSquare {
    pub fn new(fs: &FrobeniusSystem) -> Result<Self, FrobeniusError> {
        let r = fs.target();
        let f = r.field();
        let d = r.dim();
        let reg = Arc::new(Module::regular(r.clone()));
        let induced = induce_module(fs, &restrict_module(fs, &reg)?)?;
        let right_action = (0..d)
            .map(|b| {
                let right = Matrix::identity(f, d).kron(&r.right_mult_matrix(&r.basis_vector(b)));
                induced.projection.mul(&right)?.mul(&induced.section)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut cols = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                cols.push(r.product_of_basis(i, j).to_vec());
            }
        }
        let mu = Matrix::from_columns(f, d, &cols);
        let multiplication = mu.mul(&induced.section)?;
        let labels = (0..induced.section.cols())
            .map(|c| {
                let idx = (0..d * d)
                    .find(|&row| !induced.section.get(row, c).is_zero())
                    .expect("section columns are standard basis vectors");
                format!("{}⊗{}", r.labels()[idx / d], r.labels()[idx % d])
            })
            .collect();
        Ok(Self {
            induced,
            right_action,
            multiplication,
            labels,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn class_of(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.induced.class_of(a, b)
    }

    pub fn left_action(&self) -> &[Matrix] {
        self.induced.module.action()
    }

    pub fn format(&self, coords: &[Scalar]) -> String {
        let terms: Vec<String> = coords
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| if c.is_one() { format!("({l})") } else { format!("{c}({l})") })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SeparabilityElement {
    /// Coordinates in the quotient basis of `R ⊗_S R`.
    pub coords: Vec<Value>,
    pub basis: Vec<String>,
    pub formatted: String,
    /// Dimension of the affine solution space; 0 means the element is unique.
    pub solution_space_dim: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SeparabilityOutcome {
    Found(SeparabilityElement),
    /// `certificate · [A | b] = [0 | 1]`: a combination of the equations reading `0 = 1`.
    Infeasible { equations: usize, certificate: Vec<Value> },
}

impl SeparabilityOutcome {
    pub fn element(&self) -> Option<&SeparabilityElement> {
        match self {
            Self::Found(e) => Some(e),
            Self::Infeasible { .. } => None,
        }
    }
}

/// Solves `μ(e) = 1`, `r·e = e·r` for every basis `r` of `R`, over `R ⊗_S R`.
pub fn separability_element_solve(fs: &FrobeniusSystem) -> Result<SeparabilityOutcome, FrobeniusError> {
    let t = TensorSquare::new(fs)?;
    let r = fs.target();
    let f = r.field();
    let mut blocks: Vec<Matrix> = vec![t.multiplication.clone()];
    let mut rhs: Vec<Scalar> = r.unit().to_vec();
    for (left, right) in t.left_action().iter().zip(&t.right_action) {
        blocks.push(left.sub(right)?);
        rhs.extend(std::iter::repeat_n(f.zero(), t.dim()));
    }
    let a = Matrix::vstack(&blocks.iter().collect::<Vec<_>>())?;
    let b = Matrix::column(f, &rhs);
    match solve(&a, &b)? {
        Some(x) => {
            let coords = x.col(0);
            Ok(SeparabilityOutcome::Found(SeparabilityElement {
                formatted: t.format(&coords),
                coords: coords.iter().map(Scalar::to_json).collect(),
                basis: t.labels().to_vec(),
                solution_space_dim: t.dim() - rank(&a),
            }))
        }
        None => {
            // y with yᵀA = 0 and yᵀb = 1
            let system = Matrix::vstack(&[&a.transpose(), &b.transpose()])?;
            let mut target = vec![f.zero(); a.cols() + 1];
            target[a.cols()] = f.one();
            let y = solve(&system, &Matrix::column(f, &target))?
                .expect("an inconsistent system has a left certificate");
            Ok(SeparabilityOutcome::Infeasible {
                equations: a.rows(),
                certificate: y.col(0).iter().map(Scalar::to_json).collect(),
            })
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CasimirReport {
    pub element: String,
    /// `s·c = c·s` for every basis `s` of `S`.
    pub s_central: bool,
    /// `r·c = c·r` for every basis `r` of `R`.
    pub r_central: bool,
    /// `Σ x_i y_i` in `R`.
    pub index: String,
    /// Whether the index is a central unit of `R`; then `Σ x_i ⊗ u⁻¹y_i` is a separability element.
    pub index_central_unit: bool,
}

/// Centrality of `Σ x_i ⊗ y_i` against `S` (the reported verdict), plus `R`-centrality and
/// the index element for context.
pub fn casimir_centrality_check(fs: &FrobeniusSystem) -> Result<CasimirReport, FrobeniusError> {
    let t = TensorSquare::new(fs)?;
    let r = fs.target();
    let mut c = vec![r.field().zero(); t.dim()];
    let mut index = r.zero_vector();
    for (x, y) in fs.dual_x().iter().zip(fs.dual_y()) {
        c = c.iter().zip(t.class_of(x, y)).map(|(a, b)| a + &b).collect();
        index = index.iter().zip(r.mul(x, y)).map(|(a, b)| a + &b).collect();
    }
    let commutes = |elem: &[Scalar]| -> bool {
        let left = t.induced.module.act(elem);
        let right = t
            .right_action
            .iter()
            .zip(elem)
            .filter(|(_, a)| !a.is_zero())
            .fold(Matrix::zeros(r.field(), t.dim(), t.dim()), |acc, (m, a)| {
                acc.add(&m.scale(a)).expect("same shape")
            });
        left.apply(&c) == right.apply(&c)
    };
    let s = fs.source();
    let s_central = (0..s.dim()).all(|i| commutes(&fs.embedding().apply(&s.basis_vector(i))));
    let r_central = (0..r.dim()).all(|i| commutes(&r.basis_vector(i)));
    Ok(CasimirReport {
        element: t.format(&c),
        s_central,
        r_central,
        index: r.format_element(&index),
        index_central_unit: r.is_central(&index) && r.is_unit_element(&index),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplittingSide {
    /// `ψ: GF → 1` with `ψη = 1`.
    Unit,
    /// `ξ: 1 → FG` with `εξ = 1`.
    Counit,
}

#[derive(Clone, Debug)]
pub struct SplittingWitness {
    pub side: SplittingSide,
    /// One component per family member.
    pub components: Vec<ModuleMap>,
    /// Number of naturality squares imposed and re-checked.
    pub naturality_squares: usize,
}

#[derive(Clone, Debug)]
pub enum SplittingOutcome {
    Found(SplittingWitness),
    Infeasible { unknowns: usize, equations: usize },
}

impl SplittingOutcome {
    pub fn witness(&self) -> Option<&SplittingWitness> {
        match self {
            Self::Found(w) => Some(w),
            Self::Infeasible { .. } => None,
        }
    }
}

/// One joint linear system for a natural splitting of the unit or counit over `family`:
/// module-map conditions, the splitting equation per member, and a naturality square for
/// every basis map between members. Acceptance is relative to the family.
pub fn natural_splitting_solve(
    ad: &AdjunctionData,
    family: &[Arc<Module>],
    side: SplittingSide,
) -> Result<SplittingOutcome, FrobeniusError> {
    if family.is_empty() {
        return Err(FrobeniusError::PreconditionFailed("family must be non-empty"));
    }
    let field = ad.system.target().field();
    // (structure map η_X or ε_Y, its "other end" GF(X) or FG(Y))
    let mut structure: Vec<ModuleMap> = Vec::with_capacity(family.len());
    for m in family {
        let map = match side {
            SplittingSide::Unit => {
                if !ad.is_c_module(m) {
                    return Err(FrobeniusError::WrongSide("domain of F"));
                }
                unit_component(ad, m)?
            }
            SplittingSide::Counit => {
                if !ad.is_d_module(m) {
                    return Err(FrobeniusError::WrongSide("domain of G"));
                }
                counit_component(ad, m)?
            }
        };
        structure.push(map);
    }
    let other = |i: usize| -> &Arc<Module> {
        match side {
            SplittingSide::Unit => structure[i].target(),
            SplittingSide::Counit => structure[i].source(),
        }
    };
    let mut maps: Vec<(usize, usize, ModuleMap, ModuleMap)> = Vec::new();
    for (i, a) in family.iter().enumerate() {
        for (j, b) in family.iter().enumerate() {
            for f in hom_space(a, b)? {
                let lifted = match side {
                    SplittingSide::Unit => ad.g_map(&ad.f_map(&f)?)?,
                    SplittingSide::Counit => ad.f_map(&ad.g_map(&f)?)?,
                };
                maps.push((i, j, f, lifted));
            }
        }
    }

    let mut sys = LinearSystem::new(field);
    let blocks: Vec<_> = family
        .iter()
        .enumerate()
        .map(|(i, m)| match side {
            SplittingSide::Unit => sys.add_block(m.dim(), other(i).dim()),
            SplittingSide::Counit => sys.add_block(other(i).dim(), m.dim()),
        })
        .collect();
    for (i, m) in family.iter().enumerate() {
        let (src, tgt) = match side {
            SplittingSide::Unit => (other(i), m),
            SplittingSide::Counit => (m, other(i)),
        };
        for (a_src, a_tgt) in src.action().iter().zip(tgt.action()) {
            let neg = a_tgt.neg();
            sys.add_equation(
                &[Term::new(blocks[i], None, Some(a_src)), Term::new(blocks[i], Some(&neg), None)],
                None,
            )?;
        }
        let id = Matrix::identity(field, m.dim());
        let term = match side {
            SplittingSide::Unit => Term::new(blocks[i], None, Some(structure[i].matrix())),
            SplittingSide::Counit => Term::new(blocks[i], Some(structure[i].matrix()), None),
        };
        sys.add_equation(&[term], Some(&id))?;
    }
    let negated: Vec<Matrix> = maps
        .iter()
        .map(|(_, _, f, lifted)| match side {
            SplittingSide::Unit => lifted.matrix().neg(),
            SplittingSide::Counit => f.matrix().neg(),
        })
        .collect();
    for ((i, j, f, lifted), neg) in maps.iter().zip(&negated) {
        match side {
            // f ψ_X = ψ_{X'} GF(f)
            SplittingSide::Unit => sys.add_equation(
                &[
                    Term::new(blocks[*i], Some(f.matrix()), None),
                    Term::new(blocks[*j], None, Some(neg)),
                ],
                None,
            )?,
            // FG(f) ξ_Y = ξ_{Y'} f
            SplittingSide::Counit => sys.add_equation(
                &[
                    Term::new(blocks[*i], Some(lifted.matrix()), None),
                    Term::new(blocks[*j], None, Some(neg)),
                ],
                None,
            )?,
        }
    }
    let Some(solution) = sys.solve() else {
        return Ok(SplittingOutcome::Infeasible {
            unknowns: sys.num_vars(),
            equations: sys.num_equations(),
        });
    };

    let components = family
        .iter()
        .zip(solution)
        .enumerate()
        .map(|(i, (m, z))| match side {
            SplittingSide::Unit => ModuleMap::checked(other(i).clone(), m.clone(), z),
            SplittingSide::Counit => ModuleMap::checked(m.clone(), other(i).clone(), z),
        })
        .collect::<Result<Vec<_>, _>>()?;
    for (c, s) in components.iter().zip(&structure) {
        let composite = match side {
            SplittingSide::Unit => c.compose(s)?,
            SplittingSide::Counit => s.compose(c)?,
        };
        if !composite.matrix().is_identity() {
            return Err(FrobeniusError::IllDefined("solved splitting fails re-check"));
        }
    }
    for (i, j, f, lifted) in &maps {
        let commutes = match side {
            SplittingSide::Unit => {
                f.compose(&components[*i])?.matrix() == components[*j].compose(lifted)?.matrix()
            }
            SplittingSide::Counit => {
                lifted.compose(&components[*i])?.matrix() == components[*j].compose(f)?.matrix()
            }
        };
        if !commutes {
            return Err(FrobeniusError::IllDefined("solved splitting is not natural"));
        }
    }
    Ok(SplittingOutcome::Found(SplittingWitness {
        side,
        components,
        naturality_squares: maps.len(),
    }))
}
