//! Serde schema of session documents. Every object rejects unknown keys.

use serde::Deserialize;
use serde_json::Value;

use crate::frobenius::{Direction, Flavor, SplittingSide};
use crate::gorenstein::Provenance;
use crate::homological::ValidationMode;
use crate::linalg::FieldSpec;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionDoc {
    /// Characteristic; `0` for the rationals.
    pub field: FieldSpec,
    #[serde(default)]
    pub algebras: Vec<AlgebraDef>,
    #[serde(default)]
    pub embeddings: Vec<EmbeddingDef>,
    #[serde(default)]
    pub frobenius_systems: Vec<SystemDef>,
    #[serde(default)]
    pub modules: Vec<ModuleDef>,
    #[serde(default)]
    pub maps: Vec<MapDef>,
    #[serde(default)]
    pub profiles: Vec<ProfileDef>,
    #[serde(default)]
    pub generator_lists: Vec<GeneratorListDef>,
    #[serde(default)]
    pub tasks: Vec<TaskDef>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "snake_case")]
pub enum GroupDef {
    Cyclic(usize),
    Table { labels: Vec<String>, table: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraDef {
    Explicit {
        name: String,
        labels: Vec<String>,
        /// `products[i][j]` is the coordinate vector of `b_i b_j`.
        products: Vec<Vec<Vec<Value>>>,
        unit: Vec<Value>,
    },
    /// `k[var]/(var^n + c_{n-1} var^{n-1} + … + c_0)` from `coeffs = [c_0, …, c_{n-1}]`.
    PolynomialQuotient { name: String, var: String, coeffs: Vec<i64> },
    UpperTriangular { name: String, n: usize },
    Ground { name: String },
    GroupAlgebra { name: String, group: GroupDef },
    SkewGroupRing { name: String, base: String, group: GroupDef, action: Vec<Value> },
    BaseChange { name: String, base: String, extension: String },
    Opposite { name: String, of: String },
}

impl AlgebraDef {
    pub fn name(&self) -> &str {
        match self {
            Self::Explicit { name, .. }
            | Self::PolynomialQuotient { name, .. }
            | Self::UpperTriangular { name, .. }
            | Self::Ground { name }
            | Self::GroupAlgebra { name, .. }
            | Self::SkewGroupRing { name, .. }
            | Self::BaseChange { name, .. }
            | Self::Opposite { name, .. } => name,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum EmbeddingDef {
    Explicit { name: String, source: String, target: String, matrix: Value },
    Identity { name: String, algebra: String },
    /// The structural embedding of a constructed algebra (skew group ring, base change, group algebra).
    Canonical { name: String, target: String },
}

impl EmbeddingDef {
    pub fn name(&self) -> &str {
        match self {
            Self::Explicit { name, .. } | Self::Identity { name, .. } | Self::Canonical { name, .. } => name,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SystemDef {
    /// The canonical system of a constructed algebra; base change needs `lambda`.
    Canonical {
        name: String,
        target: String,
        #[serde(default)]
        lambda: Option<Vec<Value>>,
    },
    Identity { name: String, algebra: String },
    Explicit { name: String, embedding: String, e: Value, x: Vec<Vec<Value>>, y: Vec<Vec<Value>> },
}

impl SystemDef {
    pub fn name(&self) -> &str {
        match self {
            Self::Canonical { name, .. } | Self::Identity { name, .. } | Self::Explicit { name, .. } => name,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleDef {
    Explicit { name: String, algebra: String, dim: usize, action: Vec<Value> },
    /// 1-dimensional, basis element `j` acting by `values[j]`.
    Character { name: String, algebra: String, values: Vec<Value> },
    Regular { name: String, algebra: String },
    Free { name: String, algebra: String, rank: usize },
    Zero { name: String, algebra: String },
    Induce { name: String, system: String, of: String },
    Restrict { name: String, system: String, of: String },
    DirectSum { name: String, of: Vec<String> },
    Kernel { name: String, map: String },
    Cokernel { name: String, map: String },
    Syzygy {
        name: String,
        of: String,
        #[serde(default = "one")]
        n: usize,
    },
}

fn one() -> usize {
    1
}

impl ModuleDef {
    pub fn name(&self) -> &str {
        match self {
            Self::Explicit { name, .. }
            | Self::Character { name, .. }
            | Self::Regular { name, .. }
            | Self::Free { name, .. }
            | Self::Zero { name, .. }
            | Self::Induce { name, .. }
            | Self::Restrict { name, .. }
            | Self::DirectSum { name, .. }
            | Self::Kernel { name, .. }
            | Self::Cokernel { name, .. }
            | Self::Syzygy { name, .. } => name,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MapDef {
    Explicit { name: String, source: String, target: String, matrix: Value },
    Identity { name: String, module: String },
    Zero { name: String, source: String, target: String },
    /// The `index`-th element of the computed basis of `Hom(source, target)`.
    HomBasis { name: String, source: String, target: String, index: usize },
    Induce { name: String, system: String, of: String },
    Restrict { name: String, system: String, of: String },
    /// `outer ∘ inner`.
    Compose { name: String, outer: String, inner: String },
}

impl MapDef {
    pub fn name(&self) -> &str {
        match self {
            Self::Explicit { name, .. }
            | Self::Identity { name, .. }
            | Self::Zero { name, .. }
            | Self::HomBasis { name, .. }
            | Self::Induce { name, .. }
            | Self::Restrict { name, .. }
            | Self::Compose { name, .. } => name,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileDef {
    pub name: String,
    pub algebra: String,
    pub d: usize,
    #[serde(default = "asserted")]
    pub mode: ValidationMode,
    /// Extra modules for a spot-checked profile.
    #[serde(default)]
    pub corpus: Vec<String>,
}

fn asserted() -> ValidationMode {
    ValidationMode::Asserted
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorListDef {
    pub name: String,
    pub modules: Vec<String>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeparabilitySource {
    Element,
    Splitting,
    None,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "task", deny_unknown_fields)]
pub enum TaskDef {
    #[serde(rename = "validate")]
    Validate {
        #[serde(default)]
        id: Option<String>,
        target: String,
    },
    #[serde(rename = "frobenius-check")]
    FrobeniusCheck {
        #[serde(default)]
        id: Option<String>,
        system: String,
    },
    #[serde(rename = "triangle-check")]
    TriangleCheck {
        #[serde(default)]
        id: Option<String>,
        system: String,
        flavor: Flavor,
        family: Vec<String>,
        /// Maps whose unit/counit naturality squares are also checked.
        #[serde(default)]
        maps: Vec<String>,
    },
    #[serde(rename = "adjunction-check")]
    AdjunctionCheck {
        #[serde(default)]
        id: Option<String>,
        system: String,
        flavor: Flavor,
        x: String,
        n: String,
        i_max: usize,
    },
    #[serde(rename = "exactness-check")]
    ExactnessCheck {
        #[serde(default)]
        id: Option<String>,
        system: String,
        direction: Direction,
        i: String,
        p: String,
    },
    #[serde(rename = "projective-preservation")]
    ProjectivePreservation {
        #[serde(default)]
        id: Option<String>,
        system: String,
        direction: Direction,
        module: String,
    },
    #[serde(rename = "faithfulness")]
    Faithfulness {
        #[serde(default)]
        id: Option<String>,
        system: String,
        flavor: Flavor,
        family: Vec<String>,
    },
    #[serde(rename = "separability")]
    Separability {
        #[serde(default)]
        id: Option<String>,
        system: String,
    },
    #[serde(rename = "natural-splitting")]
    NaturalSplitting {
        #[serde(default)]
        id: Option<String>,
        system: String,
        flavor: Flavor,
        side: SplittingSide,
        family: Vec<String>,
    },
    #[serde(rename = "gp-test")]
    GpTest {
        #[serde(default)]
        id: Option<String>,
        module: String,
        profile: String,
        /// Attach a complete-resolution segment of this width when the test passes.
        #[serde(default)]
        width: Option<usize>,
    },
    #[serde(rename = "gpd")]
    Gpd {
        #[serde(default)]
        id: Option<String>,
        module: String,
        profile: String,
    },
    #[serde(rename = "gp-transfer")]
    GpTransfer {
        #[serde(default)]
        id: Option<String>,
        system: String,
        flavor: Flavor,
        x: String,
        c_profile: String,
        d_profile: String,
        #[serde(default)]
        converse: bool,
        #[serde(default)]
        family: Vec<String>,
    },
    #[serde(rename = "gpd-invariance")]
    GpdInvariance {
        #[serde(default)]
        id: Option<String>,
        system: String,
        flavor: Flavor,
        x: String,
        c_profile: String,
        d_profile: String,
        #[serde(default)]
        family: Vec<String>,
    },
    #[serde(rename = "precover")]
    Precover {
        #[serde(default)]
        id: Option<String>,
        generators: String,
        module: String,
        profile: String,
    },
    #[serde(rename = "verify-precover")]
    VerifyPrecover {
        #[serde(default)]
        id: Option<String>,
        map: String,
        family: Vec<String>,
        profile: String,
    },
    #[serde(rename = "apply-functor-precover")]
    ApplyFunctorPrecover {
        #[serde(default)]
        id: Option<String>,
        system: String,
        direction: Direction,
        /// Precover `φ` and the family it is certified against, on the source side.
        map: String,
        family: Vec<String>,
        source_profile: String,
        target_profile: String,
    },
    #[serde(rename = "transfer-precover")]
    TransferPrecover {
        #[serde(default)]
        id: Option<String>,
        system: String,
        #[serde(default = "ind_res")]
        flavor: Flavor,
        n: String,
        /// Generator list over the domain of `F` used to build the base precover.
        generators: String,
        c_profile: String,
        d_profile: String,
        separability: SeparabilitySource,
        /// Test family over the codomain of `F`; also the splitting family.
        family: Vec<String>,
    },
    #[serde(rename = "complete-resolution")]
    CompleteResolution {
        #[serde(default)]
        id: Option<String>,
        module: String,
        profile: String,
        width: usize,
    },
}

fn ind_res() -> Flavor {
    Flavor::IndRes
}

impl TaskDef {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Validate { .. } => "validate",
            Self::FrobeniusCheck { .. } => "frobenius-check",
            Self::TriangleCheck { .. } => "triangle-check",
            Self::AdjunctionCheck { .. } => "adjunction-check",
            Self::ExactnessCheck { .. } => "exactness-check",
            Self::ProjectivePreservation { .. } => "projective-preservation",
            Self::Faithfulness { .. } => "faithfulness",
            Self::Separability { .. } => "separability",
            Self::NaturalSplitting { .. } => "natural-splitting",
            Self::GpTest { .. } => "gp-test",
            Self::Gpd { .. } => "gpd",
            Self::GpTransfer { .. } => "gp-transfer",
            Self::GpdInvariance { .. } => "gpd-invariance",
            Self::Precover { .. } => "precover",
            Self::VerifyPrecover { .. } => "verify-precover",
            Self::ApplyFunctorPrecover { .. } => "apply-functor-precover",
            Self::TransferPrecover { .. } => "transfer-precover",
            Self::CompleteResolution { .. } => "complete-resolution",
        }
    }

    pub fn id(&self) -> Option<&str> {
        match self {
            Self::Validate { id, .. }
            | Self::FrobeniusCheck { id, .. }
            | Self::TriangleCheck { id, .. }
            | Self::AdjunctionCheck { id, .. }
            | Self::ExactnessCheck { id, .. }
            | Self::ProjectivePreservation { id, .. }
            | Self::Faithfulness { id, .. }
            | Self::Separability { id, .. }
            | Self::NaturalSplitting { id, .. }
            | Self::GpTest { id, .. }
            | Self::Gpd { id, .. }
            | Self::GpTransfer { id, .. }
            | Self::GpdInvariance { id, .. }
            | Self::Precover { id, .. }
            | Self::VerifyPrecover { id, .. }
            | Self::ApplyFunctorPrecover { id, .. }
            | Self::TransferPrecover { id, .. }
            | Self::CompleteResolution { id, .. } => id.as_deref(),
        }
    }

    /// Every definition name the task refers to.
    pub fn references(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        match self {
            Self::Validate { target, .. } => out.push(target),
            Self::FrobeniusCheck { system, .. } | Self::Separability { system, .. } => out.push(system),
            Self::TriangleCheck { system, family, maps, .. } => {
                out.push(system);
                out.extend(family.iter().map(String::as_str));
                out.extend(maps.iter().map(String::as_str));
            }
            Self::AdjunctionCheck { system, x, n, .. } => out.extend([system.as_str(), x, n]),
            Self::ExactnessCheck { system, i, p, .. } => out.extend([system.as_str(), i, p]),
            Self::ProjectivePreservation { system, module, .. } => out.extend([system.as_str(), module]),
            Self::Faithfulness { system, family, .. } | Self::NaturalSplitting { system, family, .. } => {
                out.push(system);
                out.extend(family.iter().map(String::as_str));
            }
            Self::GpTest { module, profile, .. }
            | Self::Gpd { module, profile, .. }
            | Self::CompleteResolution { module, profile, .. } => out.extend([module.as_str(), profile]),
            Self::GpTransfer { system, x, c_profile, d_profile, family, .. }
            | Self::GpdInvariance { system, x, c_profile, d_profile, family, .. } => {
                out.extend([system.as_str(), x, c_profile, d_profile]);
                out.extend(family.iter().map(String::as_str));
            }
            Self::Precover { generators, module, profile, .. } => {
                out.extend([generators.as_str(), module, profile])
            }
            Self::VerifyPrecover { map, family, profile, .. } => {
                out.extend([map.as_str(), profile]);
                out.extend(family.iter().map(String::as_str));
            }
            Self::ApplyFunctorPrecover { system, map, family, source_profile, target_profile, .. } => {
                out.extend([system.as_str(), map, source_profile, target_profile]);
                out.extend(family.iter().map(String::as_str));
            }
            Self::TransferPrecover { system, n, generators, c_profile, d_profile, family, .. } => {
                out.extend([system.as_str(), n, generators, c_profile, d_profile]);
                out.extend(family.iter().map(String::as_str));
            }
        }
        out
    }
}
