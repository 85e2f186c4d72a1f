//! Resolves session definitions, in document order, into validated objects.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::Value;

use crate::algebra::{base_change_algebra, group_algebra, skew_group_ring, Algebra, Embedding, GroupPresentation};
use crate::frobenius::{induce_map, induce_module, restrict_map, restrict_module, FrobeniusSystem};
use crate::gorenstein::GeneratorList;
use crate::homological::{iterated_syzygy, GorensteinProfile, ValidationMode};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use crate::module::{cokernel_module, direct_sum, hom_space, kernel_module, Module, ModuleMap};

use super::schema::{AlgebraDef, EmbeddingDef, GroupDef, MapDef, ModuleDef, SessionDoc, SystemDef};
use super::SessionError;

/// How an algebra was built, kept so its canonical embedding and Frobenius system can be derived.
#[derive(Clone, Debug)]
enum Construction {
    Plain,
    GroupAlgebra(GroupPresentation),
    Skew { base: Arc<Algebra>, group: GroupPresentation, action: Vec<Matrix> },
    BaseChange { base: Arc<Algebra>, extension: Arc<Algebra> },
}

#[derive(Clone, Debug)]
pub enum Entity {
    Algebra(Arc<Algebra>),
    Embedding(Embedding),
    System(FrobeniusSystem),
    Module(Arc<Module>),
    Map(ModuleMap),
    Profile(GorensteinProfile),
    Generators(GeneratorList),
}

impl Entity {
    pub fn kind(&self) -> &'static str {
        match self {
            Entity::Algebra(_) => "algebra",
            Entity::Embedding(_) => "embedding",
            Entity::System(_) => "frobenius system",
            Entity::Module(_) => "module",
            Entity::Map(_) => "map",
            Entity::Profile(_) => "profile",
            Entity::Generators(_) => "generator list",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Registry {
    pub field: FieldSpec,
    entities: BTreeMap<String, Entity>,
    constructions: BTreeMap<String, Construction>,
}

fn invalid(entity: &str, reason: impl ToString) -> SessionError {
    SessionError::ValidationFailed {
        entity: entity.to_string(),
        reason: reason.to_string(),
    }
}

fn unknown(name: &str, context: &str) -> SessionError {
    SessionError::UnknownReference {
        name: name.to_string(),
        context: context.to_string(),
    }
}

impl Registry {
    pub fn build(doc: &SessionDoc) -> Result<Self, SessionError> {
        let mut reg = Registry {
            field: doc.field,
            entities: BTreeMap::new(),
            constructions: BTreeMap::new(),
        };
        for def in &doc.algebras {
            let (a, c) = reg.algebra_def(def)?;
            a.validate().map_err(|e| invalid(def.name(), e))?;
            reg.constructions.insert(def.name().to_string(), c);
            reg.insert(def.name(), Entity::Algebra(a))?;
        }
        for def in &doc.embeddings {
            let e = reg.embedding_def(def)?;
            e.validate().map_err(|err| invalid(def.name(), err))?;
            reg.insert(def.name(), Entity::Embedding(e))?;
        }
        for def in &doc.frobenius_systems {
            let s = reg.system_def(def)?;
            reg.insert(def.name(), Entity::System(s))?;
        }
        for def in &doc.modules {
            let m = reg.module_def(def)?;
            m.validate().map_err(|e| invalid(def.name(), e))?;
            reg.insert(def.name(), Entity::Module(m))?;
        }
        for def in &doc.maps {
            let m = reg.map_def(def)?;
            m.validate().map_err(|e| invalid(def.name(), e))?;
            reg.insert(def.name(), Entity::Map(m))?;
        }
        for def in &doc.profiles {
            let a = reg.algebra(&def.algebra, &def.name)?;
            let profile = match def.mode {
                ValidationMode::Asserted => {
                    if !def.corpus.is_empty() {
                        return Err(invalid(&def.name, "an asserted profile takes no corpus"));
                    }
                    GorensteinProfile::asserted(a, def.d)
                }
                ValidationMode::SpotChecked => {
                    let corpus = def
                        .corpus
                        .iter()
                        .map(|n| Ok((n.clone(), reg.module(n, &def.name)?)))
                        .collect::<Result<Vec<_>, SessionError>>()?;
                    GorensteinProfile::spot_checked(a, def.d, &corpus).map_err(|e| invalid(&def.name, e))?
                }
            };
            reg.insert(&def.name, Entity::Profile(profile))?;
        }
        for def in &doc.generator_lists {
            let modules = def
                .modules
                .iter()
                .map(|n| Ok((n.clone(), reg.module(n, &def.name)?)))
                .collect::<Result<Vec<_>, SessionError>>()?;
            if let Some((first, rest)) = modules.split_first() {
                if rest.iter().any(|(_, m)| m.algebra() != first.1.algebra()) {
                    return Err(invalid(&def.name, "generators live over different algebras"));
                }
            } else {
                return Err(invalid(&def.name, "empty generator list"));
            }
            reg.insert(&def.name, Entity::Generators(GeneratorList::new(modules, def.provenance)))?;
        }
        Ok(reg)
    }

    fn insert(&mut self, name: &str, e: Entity) -> Result<(), SessionError> {
        if self.entities.contains_key(name) {
            return Err(invalid(name, "name defined twice"));
        }
        self.entities.insert(name.to_string(), e);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Entity> {
        self.entities.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entities.contains_key(name)
    }

    fn lookup(&self, name: &str, context: &str, kind: &'static str) -> Result<&Entity, SessionError> {
        match self.entities.get(name) {
            Some(e) if e.kind() == kind => Ok(e),
            Some(e) => Err(invalid(context, format!("{name} is a {}, expected a {kind}", e.kind()))),
            None => Err(unknown(name, context)),
        }
    }

    pub fn algebra(&self, name: &str, ctx: &str) -> Result<Arc<Algebra>, SessionError> {
        match self.lookup(name, ctx, "algebra")? {
            Entity::Algebra(a) => Ok(a.clone()),
            _ => unreachable!("kind checked"),
        }
    }

    pub fn embedding(&self, name: &str, ctx: &str) -> Result<Embedding, SessionError> {
        match self.lookup(name, ctx, "embedding")? {
            Entity::Embedding(e) => Ok(e.clone()),
            _ => unreachable!("kind checked"),
        }
    }

    pub fn system(&self, name: &str, ctx: &str) -> Result<FrobeniusSystem, SessionError> {
        match self.lookup(name, ctx, "frobenius system")? {
            Entity::System(s) => Ok(s.clone()),
            _ => unreachable!("kind checked"),
        }
    }

    pub fn module(&self, name: &str, ctx: &str) -> Result<Arc<Module>, SessionError> {
        match self.lookup(name, ctx, "module")? {
            Entity::Module(m) => Ok(m.clone()),
            _ => unreachable!("kind checked"),
        }
    }

    pub fn modules(&self, names: &[String], ctx: &str) -> Result<Vec<Arc<Module>>, SessionError> {
        names.iter().map(|n| self.module(n, ctx)).collect()
    }

    pub fn named_modules(&self, names: &[String], ctx: &str) -> Result<Vec<(String, Arc<Module>)>, SessionError> {
        names.iter().map(|n| Ok((n.clone(), self.module(n, ctx)?))).collect()
    }

    pub fn map(&self, name: &str, ctx: &str) -> Result<ModuleMap, SessionError> {
        match self.lookup(name, ctx, "map")? {
            Entity::Map(m) => Ok(m.clone()),
            _ => unreachable!("kind checked"),
        }
    }

    pub fn profile(&self, name: &str, ctx: &str) -> Result<GorensteinProfile, SessionError> {
        match self.lookup(name, ctx, "profile")? {
            Entity::Profile(p) => Ok(p.clone()),
            _ => unreachable!("kind checked"),
        }
    }

    pub fn generators(&self, name: &str, ctx: &str) -> Result<GeneratorList, SessionError> {
        match self.lookup(name, ctx, "generator list")? {
            Entity::Generators(g) => Ok(g.clone()),
            _ => unreachable!("kind checked"),
        }
    }

    fn scalars(&self, values: &[Value], ctx: &str) -> Result<Vec<Scalar>, SessionError> {
        values
            .iter()
            .map(|v| self.field.parse_value(v).map_err(|e| invalid(ctx, e)))
            .collect()
    }

    fn matrix(&self, v: &Value, cols: Option<usize>, ctx: &str) -> Result<Matrix, SessionError> {
        Matrix::from_json(self.field, v, cols).map_err(|e| invalid(ctx, e))
    }

    fn square_matrices(&self, vs: &[Value], n: usize, ctx: &str) -> Result<Vec<Matrix>, SessionError> {
        vs.iter()
            .map(|v| {
                let m = self.matrix(v, Some(n), ctx)?;
                if m.shape() != (n, n) {
                    return Err(invalid(ctx, format!("expected {n}×{n} matrices, got {:?}", m.shape())));
                }
                Ok(m)
            })
            .collect()
    }

    fn group(&self, g: &GroupDef, ctx: &str) -> Result<GroupPresentation, SessionError> {
        match g {
            GroupDef::Cyclic(0) => Err(invalid(ctx, "cyclic group of order 0")),
            GroupDef::Cyclic(n) => Ok(GroupPresentation::cyclic(*n)),
            GroupDef::Table { labels, table } => {
                GroupPresentation::new(labels.clone(), table.clone()).map_err(|e| invalid(ctx, e))
            }
        }
    }

    fn algebra_def(&self, def: &AlgebraDef) -> Result<(Arc<Algebra>, Construction), SessionError> {
        let ctx = def.name();
        let f = self.field;
        Ok(match def {
            AlgebraDef::Explicit { labels, products, unit, .. } => {
                let products = products
                    .iter()
                    .map(|row| row.iter().map(|v| self.scalars(v, ctx)).collect())
                    .collect::<Result<Vec<Vec<_>>, _>>()?;
                let unit = self.scalars(unit, ctx)?;
                let a = Algebra::new(f, labels.clone(), products, unit).map_err(|e| invalid(ctx, e))?;
                (Arc::new(a), Construction::Plain)
            }
            AlgebraDef::PolynomialQuotient { var, coeffs, .. } => {
                if coeffs.is_empty() {
                    return Err(invalid(ctx, "polynomial must have positive degree"));
                }
                (Arc::new(Algebra::polynomial_quotient(f, var, coeffs)), Construction::Plain)
            }
            AlgebraDef::UpperTriangular { n, .. } => {
                if *n == 0 {
                    return Err(invalid(ctx, "matrix size must be positive"));
                }
                (Arc::new(Algebra::upper_triangular(f, *n)), Construction::Plain)
            }
            AlgebraDef::Ground { .. } => (Arc::new(Algebra::ground(f)), Construction::Plain),
            AlgebraDef::GroupAlgebra { group, .. } => {
                let g = self.group(group, ctx)?;
                (Arc::new(group_algebra(f, &g)), Construction::GroupAlgebra(g))
            }
            AlgebraDef::SkewGroupRing { base, group, action, .. } => {
                let s = self.algebra(base, ctx)?;
                let g = self.group(group, ctx)?;
                let action = self.square_matrices(action, s.dim(), ctx)?;
                let (r, _) = skew_group_ring(&s, &g, &action).map_err(|e| invalid(ctx, e))?;
                (r, Construction::Skew { base: s, group: g, action })
            }
            AlgebraDef::BaseChange { base, extension, .. } => {
                let s = self.algebra(base, ctx)?;
                let e = self.algebra(extension, ctx)?;
                let (r, _) = base_change_algebra(&s, &e).map_err(|err| invalid(ctx, err))?;
                (r, Construction::BaseChange { base: s, extension: e })
            }
            AlgebraDef::Opposite { of, .. } => (Arc::new(self.algebra(of, ctx)?.opposite()), Construction::Plain),
        })
    }

    fn construction(&self, target: &str, ctx: &str) -> Result<(Arc<Algebra>, &Construction), SessionError> {
        let r = self.algebra(target, ctx)?;
        let c = self.constructions.get(target).expect("every algebra records its construction");
        Ok((r, c))
    }

    fn embedding_def(&self, def: &EmbeddingDef) -> Result<Embedding, SessionError> {
        let ctx = def.name();
        match def {
            EmbeddingDef::Explicit { source, target, matrix, .. } => {
                let s = self.algebra(source, ctx)?;
                let t = self.algebra(target, ctx)?;
                let m = self.matrix(matrix, Some(s.dim()), ctx)?;
                Embedding::new(s, t, m).map_err(|e| invalid(ctx, e))
            }
            EmbeddingDef::Identity { algebra, .. } => Ok(Embedding::identity(self.algebra(algebra, ctx)?)),
            EmbeddingDef::Canonical { target, .. } => Ok(self.canonical_system(target, None, ctx)?.embedding().clone()),
        }
    }

    fn canonical_system(
        &self,
        target: &str,
        lambda: Option<&[Value]>,
        ctx: &str,
    ) -> Result<FrobeniusSystem, SessionError> {
        let (r, c) = self.construction(target, ctx)?;
        let fs = match c {
            Construction::Plain => {
                return Err(invalid(ctx, format!("{target} was not built by a construction with a canonical system")))
            }
            Construction::GroupAlgebra(g) => FrobeniusSystem::group_algebra(self.field, g),
            Construction::Skew { base, group, action } => {
                FrobeniusSystem::skew_group(base, group, action).map_err(|e| invalid(ctx, e))?
            }
            Construction::BaseChange { base, extension } => {
                let lambda = match lambda {
                    Some(l) => self.scalars(l, ctx)?,
                    None => {
                        // any form works for the embedding alone
                        let mut l = vec![self.field.zero(); extension.dim()];
                        l[0] = self.field.one();
                        l
                    }
                };
                FrobeniusSystem::base_change(base, extension, &lambda).map_err(|e| invalid(ctx, e))?
            }
        };
        debug_assert_eq!(fs.target().as_ref(), r.as_ref());
        Ok(fs)
    }

    fn system_def(&self, def: &SystemDef) -> Result<FrobeniusSystem, SessionError> {
        let ctx = def.name();
        match def {
            SystemDef::Canonical { target, lambda, .. } => {
                if lambda.is_some() && !matches!(self.construction(target, ctx)?.1, Construction::BaseChange { .. }) {
                    return Err(invalid(ctx, "lambda applies only to base change"));
                }
                self.canonical_system(target, lambda.as_deref(), ctx)
            }
            SystemDef::Identity { algebra, .. } => Ok(FrobeniusSystem::identity(self.algebra(algebra, ctx)?)),
            SystemDef::Explicit { embedding, e, x, y, .. } => {
                let emb = self.embedding(embedding, ctx)?;
                let e = self.matrix(e, Some(emb.target().dim()), ctx)?;
                let x = x.iter().map(|v| self.scalars(v, ctx)).collect::<Result<Vec<_>, _>>()?;
                let y = y.iter().map(|v| self.scalars(v, ctx)).collect::<Result<Vec<_>, _>>()?;
                FrobeniusSystem::new(emb, e, x, y).map_err(|err| invalid(ctx, err))
            }
        }
    }

    fn module_def(&self, def: &ModuleDef) -> Result<Arc<Module>, SessionError> {
        let ctx = def.name();
        Ok(match def {
            ModuleDef::Explicit { algebra, dim, action, .. } => {
                let a = self.algebra(algebra, ctx)?;
                let action = self.square_matrices(action, *dim, ctx)?;
                Arc::new(Module::new(a, *dim, action).map_err(|e| invalid(ctx, e))?)
            }
            ModuleDef::Character { algebra, values, .. } => {
                let a = self.algebra(algebra, ctx)?;
                let action = self
                    .scalars(values, ctx)?
                    .into_iter()
                    .map(|s| Matrix::from_fn(self.field, 1, 1, |_, _| s.clone()))
                    .collect();
                Arc::new(Module::new(a, 1, action).map_err(|e| invalid(ctx, e))?)
            }
            ModuleDef::Regular { algebra, .. } => Arc::new(Module::regular(self.algebra(algebra, ctx)?)),
            ModuleDef::Free { algebra, rank, .. } => Arc::new(Module::free(self.algebra(algebra, ctx)?, *rank)),
            ModuleDef::Zero { algebra, .. } => Arc::new(Module::zero(self.algebra(algebra, ctx)?)),
            ModuleDef::Induce { system, of, .. } => {
                let fs = self.system(system, ctx)?;
                induce_module(&fs, &self.module(of, ctx)?).map_err(|e| invalid(ctx, e))?.module
            }
            ModuleDef::Restrict { system, of, .. } => {
                let fs = self.system(system, ctx)?;
                restrict_module(&fs, &self.module(of, ctx)?).map_err(|e| invalid(ctx, e))?
            }
            ModuleDef::DirectSum { of, .. } => {
                let ms = self.modules(of, ctx)?;
                let a = ms.first().ok_or_else(|| invalid(ctx, "empty direct sum"))?.algebra().clone();
                direct_sum(&a, &ms).map_err(|e| invalid(ctx, e))?.module
            }
            ModuleDef::Kernel { map, .. } => kernel_module(&self.map(map, ctx)?).map_err(|e| invalid(ctx, e))?.0,
            ModuleDef::Cokernel { map, .. } => cokernel_module(&self.map(map, ctx)?).map_err(|e| invalid(ctx, e))?.0,
            ModuleDef::Syzygy { of, n, .. } => {
                iterated_syzygy(&self.module(of, ctx)?, *n).map_err(|e| invalid(ctx, e))?
            }
        })
    }

    fn map_def(&self, def: &MapDef) -> Result<ModuleMap, SessionError> {
        let ctx = def.name();
        match def {
            MapDef::Explicit { source, target, matrix, .. } => {
                let s = self.module(source, ctx)?;
                let t = self.module(target, ctx)?;
                let m = self.matrix(matrix, Some(s.dim()), ctx)?;
                ModuleMap::new(s, t, m).map_err(|e| invalid(ctx, e))
            }
            MapDef::Identity { module, .. } => Ok(ModuleMap::identity(self.module(module, ctx)?)),
            MapDef::Zero { source, target, .. } => {
                let (s, t) = (self.module(source, ctx)?, self.module(target, ctx)?);
                if s.algebra() != t.algebra() {
                    return Err(invalid(ctx, "modules over different algebras"));
                }
                Ok(ModuleMap::zero(s, t))
            }
            MapDef::HomBasis { source, target, index, .. } => {
                let basis = hom_space(&self.module(source, ctx)?, &self.module(target, ctx)?)
                    .map_err(|e| invalid(ctx, e))?;
                let len = basis.len();
                basis
                    .into_iter()
                    .nth(*index)
                    .ok_or_else(|| invalid(ctx, format!("Hom space has dimension {len}, index {index} out of range")))
            }
            MapDef::Induce { system, of, .. } => {
                induce_map(&self.system(system, ctx)?, &self.map(of, ctx)?).map_err(|e| invalid(ctx, e))
            }
            MapDef::Restrict { system, of, .. } => {
                restrict_map(&self.system(system, ctx)?, &self.map(of, ctx)?).map_err(|e| invalid(ctx, e))
            }
            MapDef::Compose { outer, inner, .. } => self
                .map(outer, ctx)?
                .compose(&self.map(inner, ctx)?)
                .map_err(|e| invalid(ctx, e)),
        }
    }
}
