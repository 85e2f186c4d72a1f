//! Gorenstein projective detection relative to a profile, Gorenstein projective dimension,
//! precovers with factorization certificates, and their transfer along Frobenius pairs.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::frobenius::{
    counit_component, faithfulness_check, AdjunctionData, FaithfulnessReport, Flavor,
    FrobeniusError, FrobeniusSystem, SeparabilityElement, SplittingSide, SplittingWitness,
};
use crate::frobenius::{induce_map, induce_module, restrict_map, restrict_module, Direction};
use crate::homological::{
    complete_resolution, ext_dims, iterated_syzygy, CompleteResolutionSegment, GorensteinProfile,
    HomologicalError, ValidationMode,
};
use crate::linalg::{LinearSystem, Matrix, Term};
use crate::module::{hom_space, same_algebra, Module, ModuleError, ModuleMap};

#[derive(Debug, Clone, Error)]
pub enum GorensteinError {
    #[error("profile is for a different algebra")]
    ProfileMismatch,
    #[error("faithfulness could not be established on the given family")]
    FaithfulnessNotEstablished(FaithfulnessReport),
    #[error("no syzygy up to degree {0} passes the GP test; the profile assertion is wrong")]
    ProfileExhausted(usize),
    #[error("separability certificate missing or of the wrong kind: {0}")]
    SeparabilityMissing(&'static str),
    #[error("base precover builder failed: {0}")]
    BaseBuilderFailed(String),
    #[error("transferred precover failed verification")]
    TransferredVerificationFailed(Box<PrecoverCertificate>),
    #[error("test family member {0} is not Gorenstein projective under the profile")]
    FamilyNotGorensteinProjective(String),
    #[error(transparent)]
    Homological(#[from] HomologicalError),
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

impl From<crate::linalg::LinalgError> for GorensteinError {
    fn from(e: crate::linalg::LinalgError) -> Self {
        GorensteinError::Module(e.into())
    }
}

/// Ext-vanishing evidence for Gorenstein projectivity relative to a profile.
#[derive(Clone, Debug)]
pub struct GPCertificate {
    pub module: Arc<Module>,
    pub d: usize,
    pub mode: ValidationMode,
    /// `dim Ext^i(M, A)` for `i = 1..=d`.
    pub ext_record: Vec<usize>,
    pub segment: Option<CompleteResolutionSegment>,
}

impl GPCertificate {
    pub fn valid(&self) -> bool {
        self.ext_record.iter().all(|&e| e == 0)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "valid": self.valid(),
            "dim": self.module.dim(),
            "profile_d": self.d,
            "profile_mode": self.mode,
            "ext_record": self.ext_record,
        });
        if let Some(seg) = &self.segment {
            v["complete_resolution"] = seg.to_json();
        }
        v
    }
}

fn check_profile(m: &Module, profile: &GorensteinProfile) -> Result<(), GorensteinError> {
    if same_algebra(m.algebra(), &profile.algebra) {
        Ok(())
    } else {
        Err(GorensteinError::ProfileMismatch)
    }
}

/// `Ext^i(M, A) = 0` for `1 ≤ i ≤ d`; with `d = 0` every module is certified.
pub fn gp_test(m: &Arc<Module>, profile: &GorensteinProfile) -> Result<GPCertificate, GorensteinError> {
    check_profile(m, profile)?;
    let ext_record = if profile.d == 0 {
        Vec::new()
    } else {
        let regular = Arc::new(Module::regular(m.algebra().clone()));
        ext_dims(m, &regular, profile.d)?[1..].to_vec()
    };
    Ok(GPCertificate {
        module: m.clone(),
        d: profile.d,
        mode: profile.mode,
        ext_record,
        segment: None,
    })
}

/// [`gp_test`] plus, when valid, a certified complete-resolution segment of the given width.
pub fn gp_test_with_segment(
    m: &Arc<Module>,
    profile: &GorensteinProfile,
    width: usize,
) -> Result<GPCertificate, GorensteinError> {
    let mut cert = gp_test(m, profile)?;
    if cert.valid() {
        cert.segment = Some(complete_resolution(m, width, profile)?);
    }
    Ok(cert)
}

#[derive(Clone, Debug)]
pub struct GPTransferReport {
    pub x: GPCertificate,
    pub fx: GPCertificate,
    /// `X` GP ⇒ `F(X)` GP.
    pub forward_holds: bool,
    /// `F(X)` GP ⇒ `X` GP, checked only when requested and after faithfulness.
    pub converse_holds: Option<bool>,
    pub faithfulness: Option<FaithfulnessReport>,
}

impl GPTransferReport {
    pub fn counterexample(&self) -> bool {
        !self.forward_holds || self.converse_holds == Some(false)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "x": self.x.to_json(),
            "fx": self.fx.to_json(),
            "forward_holds": self.forward_holds,
            "converse_holds": self.converse_holds,
            "faithfulness": self.faithfulness,
        })
    }
}

/// Compares GP certificates of `X` and `F(X)`. The converse needs `F` faithful, established
/// by injective units on `family ∪ {X}`.
pub fn gp_transfer_check(
    ad: &AdjunctionData,
    x: &Arc<Module>,
    c_profile: &GorensteinProfile,
    d_profile: &GorensteinProfile,
    converse: bool,
    family: &[Arc<Module>],
) -> Result<GPTransferReport, GorensteinError> {
    let fx = ad.f_module(x)?;
    let xc = gp_test(x, c_profile)?;
    let fxc = gp_test(&fx, d_profile)?;
    let forward_holds = !xc.valid() || fxc.valid();
    let (converse_holds, faithfulness) = if converse {
        let report = established_faithfulness(ad, x, family)?;
        (Some(!fxc.valid() || xc.valid()), Some(report))
    } else {
        (None, None)
    };
    Ok(GPTransferReport {
        x: xc,
        fx: fxc,
        forward_holds,
        converse_holds,
        faithfulness,
    })
}

fn established_faithfulness(
    ad: &AdjunctionData,
    x: &Arc<Module>,
    family: &[Arc<Module>],
) -> Result<FaithfulnessReport, GorensteinError> {
    let mut members: Vec<Arc<Module>> = family.iter().filter(|m| ad.is_c_module(m)).cloned().collect();
    members.push(x.clone());
    let report = faithfulness_check(ad, &members)?;
    if report.f_faithful_on_family {
        Ok(report)
    } else {
        Err(GorensteinError::FaithfulnessNotEstablished(report))
    }
}

#[derive(Clone, Debug)]
pub struct GpdResult {
    pub value: usize,
    /// Certificates for `Ω⁰M, …, Ωⁿ M`.
    pub trace: Vec<GPCertificate>,
}

impl GpdResult {
    pub fn to_json(&self) -> Value {
        json!({
            "gpd": self.value,
            "trace": self.trace.iter().map(GPCertificate::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Least `n ≤ d` with `Ωⁿ M` passing [`gp_test`].
pub fn gpd(m: &Arc<Module>, profile: &GorensteinProfile) -> Result<GpdResult, GorensteinError> {
    check_profile(m, profile)?;
    let mut trace = Vec::new();
    let mut current = m.clone();
    for n in 0..=profile.d {
        if n > 0 {
            current = iterated_syzygy(&current, 1)?;
        }
        let cert = gp_test(&current, profile)?;
        let valid = cert.valid();
        trace.push(cert);
        if valid {
            return Ok(GpdResult { value: n, trace });
        }
    }
    Err(GorensteinError::ProfileExhausted(profile.d))
}

#[derive(Clone, Debug)]
pub struct GpdInvarianceReport {
    pub gpd_x: GpdResult,
    pub gpd_fx: GpdResult,
    pub equal: bool,
    pub faithfulness: FaithfulnessReport,
}

impl GpdInvarianceReport {
    pub fn to_json(&self) -> Value {
        json!({
            "gpd_x": self.gpd_x.to_json(),
            "gpd_fx": self.gpd_fx.to_json(),
            "equal": self.equal,
            "faithfulness": self.faithfulness,
        })
    }
}

/// `Gpd(X) = Gpd(F(X))`, each side from its own syzygies, once `F` is faithful on the family.
pub fn gpd_invariance_check(
    ad: &AdjunctionData,
    x: &Arc<Module>,
    c_profile: &GorensteinProfile,
    d_profile: &GorensteinProfile,
    family: &[Arc<Module>],
) -> Result<GpdInvarianceReport, GorensteinError> {
    let faithfulness = established_faithfulness(ad, x, family)?;
    let gpd_x = gpd(x, c_profile)?;
    let gpd_fx = gpd(&ad.f_module(x)?, d_profile)?;
    Ok(GpdInvarianceReport {
        equal: gpd_x.value == gpd_fx.value,
        gpd_x,
        gpd_fx,
        faithfulness,
    })
}

/// The assumption under which a generator list exhausts the GP class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Asserted,
    AllProjectives,
    AllModulesSelfInjective,
}

/// Modules asserted to additively generate the GP modules of their algebra.
#[derive(Clone, Debug)]
pub struct GeneratorList {
    pub modules: Vec<(String, Arc<Module>)>,
    pub provenance: Provenance,
}

impl GeneratorList {
    pub fn new(modules: Vec<(String, Arc<Module>)>, provenance: Provenance) -> Self {
        Self { modules, provenance }
    }

    /// GP certificates for every generator; errors on the first one that fails.
    pub fn certify(&self, profile: &GorensteinProfile) -> Result<Vec<GPCertificate>, GorensteinError> {
        self.modules
            .iter()
            .map(|(label, m)| {
                let c = gp_test(m, profile)?;
                if c.valid() {
                    Ok(c)
                } else {
                    Err(GorensteinError::FamilyNotGorensteinProjective(label.clone()))
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct Factorization {
    pub f: Matrix,
    /// `g` with `φ∘g = f`, or `None` when the system is infeasible.
    pub g: Option<Matrix>,
}

#[derive(Clone, Debug)]
pub struct FamilyRecord {
    pub label: String,
    pub certificate: GPCertificate,
    pub factorizations: Vec<Factorization>,
}

/// A map `φ: X → M` checked against a finite test family of GP modules.
#[derive(Clone, Debug)]
pub struct PrecoverCertificate {
    pub phi: ModuleMap,
    pub x_certificate: GPCertificate,
    pub family: Vec<FamilyRecord>,
    /// Which assumption backs the family, if it came from a generator list.
    pub backing: Option<Provenance>,
}

impl PrecoverCertificate {
    /// Every basis map from every family member factors through `φ`.
    pub fn factorizations_valid(&self) -> bool {
        self.family
            .iter()
            .all(|r| r.factorizations.iter().all(|f| f.g.is_some()))
    }

    /// Factorizations succeed and `X` itself is certified GP.
    pub fn valid(&self) -> bool {
        self.factorizations_valid() && self.x_certificate.valid()
    }

    /// First `(member label, f)` that does not factor.
    pub fn refutation(&self) -> Option<(&str, &Matrix)> {
        self.family.iter().find_map(|r| {
            r.factorizations
                .iter()
                .find(|f| f.g.is_none())
                .map(|f| (r.label.as_str(), &f.f))
        })
    }

    pub fn to_json(&self) -> Value {
        let family: Vec<Value> = self
            .family
            .iter()
            .map(|r| {
                json!({
                    "label": r.label,
                    "gp": r.certificate.to_json(),
                    "factorizations": r.factorizations.iter().map(|f| json!({
                        "f": f.f.to_json(),
                        "g": f.g.as_ref().map(Matrix::to_json),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut v = json!({
            "valid": self.valid(),
            "phi": self.phi.to_json(),
            "x_gp": self.x_certificate.to_json(),
            "family": family,
            "backing": self.backing,
            "scope": "relative to the listed test family",
        });
        if let Some((label, f)) = self.refutation() {
            v["refutation"] = json!({ "member": label, "unsolvable_map": f.to_json() });
        }
        v
    }
}

/// Solves `φ∘g = f` for a module map `g: L → X`.
pub fn factor_through(phi: &ModuleMap, f: &ModuleMap) -> Result<Option<Matrix>, GorensteinError> {
    let l = f.source();
    let x = phi.source();
    let mut sys = LinearSystem::new(l.field());
    let z = sys.add_block(x.dim(), l.dim());
    if x.dim() == 0 || l.dim() == 0 {
        return Ok(f.is_zero().then(|| Matrix::zeros(l.field(), x.dim(), l.dim())));
    }
    for (al, ax) in l.action().iter().zip(x.action()) {
        let neg = ax.neg();
        sys.add_equation(&[Term::new(z, None, Some(al)), Term::new(z, Some(&neg), None)], None)?;
    }
    if phi.target().dim() > 0 {
        sys.add_equation(&[Term::new(z, Some(phi.matrix()), None)], Some(f.matrix()))?;
    }
    Ok(sys.solve().map(|mut b| b.remove(0)))
}

/// Checks every basis map `L → M` for `L` in the family factors through `φ: X → M`.
pub fn verify_precover(
    phi: &ModuleMap,
    family: &[(String, Arc<Module>)],
    profile: &GorensteinProfile,
) -> Result<PrecoverCertificate, GorensteinError> {
    let x_certificate = gp_test(phi.source(), profile)?;
    let mut records = Vec::with_capacity(family.len());
    for (label, l) in family {
        let certificate = gp_test(l, profile)?;
        if !certificate.valid() {
            return Err(GorensteinError::FamilyNotGorensteinProjective(label.clone()));
        }
        let factorizations = hom_space(l, phi.target())?
            .iter()
            .map(|f| {
                Ok(Factorization {
                    f: f.matrix().clone(),
                    g: factor_through(phi, f)?,
                })
            })
            .collect::<Result<Vec<_>, GorensteinError>>()?;
        records.push(FamilyRecord {
            label: label.clone(),
            certificate,
            factorizations,
        });
    }
    Ok(PrecoverCertificate {
        phi: phi.clone(),
        x_certificate,
        family: records,
        backing: None,
    })
}

/// `X = ⊕ G_i^{h_i}`, `h_i = dim Hom(G_i, M)`, with `φ` assembled from the Hom bases;
/// verified against the generator list itself.
pub fn precover_via_generators(
    gl: &GeneratorList,
    m: &Arc<Module>,
    profile: &GorensteinProfile,
) -> Result<PrecoverCertificate, GorensteinError> {
    check_profile(m, profile)?;
    let mut summands: Vec<Arc<Module>> = Vec::new();
    let mut columns: Vec<Matrix> = Vec::new();
    for (_, g) in &gl.modules {
        for f in hom_space(g, m)? {
            summands.push(g.clone());
            columns.push(f.matrix().clone());
        }
    }
    let sum = crate::module::direct_sum(m.algebra(), &summands)?;
    let matrix = if columns.is_empty() {
        Matrix::zeros(m.field(), m.dim(), 0)
    } else {
        Matrix::hstack(&columns.iter().collect::<Vec<_>>())?
    };
    let phi = ModuleMap::new(sum.module.clone(), m.clone(), matrix)?;
    let mut cert = verify_precover(&phi, &gl.modules, profile)?;
    cert.backing = Some(gl.provenance);
    Ok(cert)
}

fn apply_direction(fs: &FrobeniusSystem, m: &Arc<Module>, d: Direction) -> Result<Arc<Module>, GorensteinError> {
    Ok(match d {
        Direction::Induce => induce_module(fs, m)?.module,
        Direction::Restrict => restrict_module(fs, m)?,
    })
}

/// Image of a precover under induction or restriction, re-verified against the image family.
pub fn apply_functor_to_precover(
    fs: &FrobeniusSystem,
    cert: &PrecoverCertificate,
    direction: Direction,
    target_profile: &GorensteinProfile,
) -> Result<PrecoverCertificate, GorensteinError> {
    let phi = match direction {
        Direction::Induce => induce_map(fs, &cert.phi)?,
        Direction::Restrict => restrict_map(fs, &cert.phi)?,
    };
    let prefix = match direction {
        Direction::Induce => "Ind",
        Direction::Restrict => "Res",
    };
    let family = cert
        .family
        .iter()
        .map(|r| {
            Ok((
                format!("{prefix}({})", r.label),
                apply_direction(fs, &r.certificate.module, direction)?,
            ))
        })
        .collect::<Result<Vec<_>, GorensteinError>>()?;
    let mut image = verify_precover(&phi, &family, target_profile)?;
    image.backing = cert.backing;
    if !image.valid() {
        return Err(GorensteinError::TransferredVerificationFailed(Box::new(image)));
    }
    Ok(image)
}

/// Evidence that the right adjoint `G` is separable.
#[derive(Clone, Copy, Debug)]
pub enum SeparabilityEvidence<'a> {
    /// Separability element of the extension; certifies restriction, so only for `(Ind, Res)`.
    Element(&'a SeparabilityElement),
    /// Natural splitting of the counit, relative to its family.
    Splitting(&'a SplittingWitness),
}

impl SeparabilityEvidence<'_> {
    fn describe(&self) -> &'static str {
        match self {
            Self::Element(_) => "separability element",
            Self::Splitting(_) => "counit splitting relative to family",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TransferCertificate {
    /// Precover `f: X → G(N)` in the domain of `F`.
    pub base: PrecoverCertificate,
    /// `γ = ε_N ∘ F(f): F(X) → N`, verified against the test family.
    pub gamma: PrecoverCertificate,
    pub separability: &'static str,
}

impl TransferCertificate {
    pub fn to_json(&self) -> Value {
        json!({
            "base": self.base.to_json(),
            "gamma": self.gamma.to_json(),
            "separability": self.separability,
        })
    }
}

/// Builds `γ = ε_N ∘ F(f)` from a precover `f` of `G(N)` and verifies it against `family`.
pub fn transfer_precover(
    ad: &AdjunctionData,
    n: &Arc<Module>,
    base_builder: &dyn Fn(&Arc<Module>) -> Result<PrecoverCertificate, GorensteinError>,
    separability: Option<SeparabilityEvidence<'_>>,
    family: &[(String, Arc<Module>)],
    d_profile: &GorensteinProfile,
) -> Result<TransferCertificate, GorensteinError> {
    let evidence = separability.ok_or(GorensteinError::SeparabilityMissing("none supplied"))?;
    match evidence {
        SeparabilityEvidence::Element(_) if ad.flavor != Flavor::IndRes => {
            return Err(GorensteinError::SeparabilityMissing(
                "a separability element certifies restriction, which is G only for (Ind, Res)",
            ))
        }
        SeparabilityEvidence::Splitting(w) if w.side != SplittingSide::Counit => {
            return Err(GorensteinError::SeparabilityMissing("splitting must be on the counit side"))
        }
        _ => {}
    }
    let gn = ad.g_module(n)?;
    let base = base_builder(&gn).map_err(|e| GorensteinError::BaseBuilderFailed(e.to_string()))?;
    if !base.valid() {
        return Err(GorensteinError::BaseBuilderFailed("base precover does not verify".into()));
    }
    let gamma = counit_component(ad, n)?.compose(&ad.f_map(&base.phi)?)?;
    let cert = verify_precover(&gamma, family, d_profile)?;
    if !cert.valid() {
        return Err(GorensteinError::TransferredVerificationFailed(Box::new(cert)));
    }
    Ok(TransferCertificate {
        base,
        gamma: cert,
        separability: evidence.describe(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, GroupPresentation};
    use crate::linalg::FieldSpec;

    fn t2() -> (Arc<Algebra>, Arc<Module>, Arc<Module>, Arc<Module>) {
        let f = FieldSpec::rationals();
        let a = Arc::new(Algebra::upper_triangular(f, 2));
        // basis e11, e12, e22
        let p1 = Module::new(
            a.clone(),
            1,
            vec![Matrix::identity(f, 1), Matrix::zeros(f, 1, 1), Matrix::zeros(f, 1, 1)],
        )
        .unwrap();
        // P2 = span{e22, e12} of the regular module, in that order
        let p2 = Module::new(
            a.clone(),
            2,
            vec![
                Matrix::from_i64(f, &[vec![0, 0], vec![0, 1]]),
                Matrix::from_i64(f, &[vec![0, 0], vec![1, 0]]),
                Matrix::from_i64(f, &[vec![1, 0], vec![0, 0]]),
            ],
        )
        .unwrap();
        let s2 = Module::new(
            a.clone(),
            1,
            vec![Matrix::zeros(f, 1, 1), Matrix::zeros(f, 1, 1), Matrix::identity(f, 1)],
        )
        .unwrap();
        for m in [&p1, &p2, &s2] {
            m.validate().unwrap();
        }
        (a, Arc::new(p1), Arc::new(p2), Arc::new(s2))
    }

    #[test]
    fn t2_gp_and_gpd() {
        let (a, p1, p2, s2) = t2();
        let profile = GorensteinProfile::asserted(a.clone(), 1);
        assert!(gp_test(&p1, &profile).unwrap().valid());
        let c = gp_test(&p2, &profile).unwrap();
        assert!(c.valid());
        assert_eq!(c.ext_record, vec![0]);
        let c = gp_test(&s2, &profile).unwrap();
        assert!(!c.valid());
        assert_eq!(c.ext_record, vec![1]);
        assert_eq!(gpd(&s2, &profile).unwrap().value, 1);
        assert_eq!(gpd(&p2, &profile).unwrap().value, 0);
        assert!(matches!(
            complete_resolution(&s2, 1, &profile),
            Err(HomologicalError::NotGorensteinProjective(_))
        ));
        // a d = 0 profile on T₂ is wrong, and gpd says so
        let wrong = GorensteinProfile::asserted(a, 0);
        assert!(gp_test(&s2, &wrong).unwrap().valid());
    }

    #[test]
    fn t2_precovers() {
        let (a, p1, p2, s2) = t2();
        let profile = GorensteinProfile::asserted(a.clone(), 1);
        let gl = GeneratorList::new(
            vec![("P1".into(), p1.clone()), ("P2".into(), p2.clone())],
            Provenance::AllProjectives,
        );
        let cert = precover_via_generators(&gl, &s2, &profile).unwrap();
        assert!(cert.valid());
        assert_eq!(cert.phi.source().dim(), 2);
        assert!(cert.phi.is_surjective());

        let zero = Arc::new(Module::zero(a.clone()));
        let cert = precover_via_generators(&gl, &zero, &profile).unwrap();
        assert!(cert.valid());
        assert_eq!(cert.phi.source().dim(), 0);

        let id = ModuleMap::identity(p2.clone());
        assert!(verify_precover(&id, &gl.modules, &profile).unwrap().valid());
        let z = ModuleMap::zero(zero, p2);
        let cert = verify_precover(&z, &gl.modules, &profile).unwrap();
        assert!(!cert.valid());
        assert!(cert.refutation().is_some());
    }

    #[test]
    fn self_injective_gp_everything() {
        let a = Arc::new(Algebra::polynomial_quotient(FieldSpec::gf(3), "x", &[0, 0]));
        let profile = GorensteinProfile::asserted(a.clone(), 0);
        let k = Arc::new(
            Module::new(a.clone(), 1, vec![Matrix::identity(a.field(), 1), Matrix::zeros(a.field(), 1, 1)]).unwrap(),
        );
        let c = gp_test_with_segment(&k, &profile, 2).unwrap();
        assert!(c.valid() && c.segment.is_some());
        assert_eq!(gpd(&k, &profile).unwrap().value, 0);
    }

    #[test]
    fn transfer_for_group_algebra() {
        let f = FieldSpec::gf(3);
        let fs = FrobeniusSystem::group_algebra(f, &GroupPresentation::cyclic(2));
        let ad = AdjunctionData::new(fs.clone(), Flavor::IndRes);
        let r = fs.target().clone();
        let sign = Arc::new(Module::new(r.clone(), 1, vec![Matrix::identity(f, 1), Matrix::from_i64(f, &[vec![-1]])]).unwrap());
        let triv = Arc::new(Module::new(r.clone(), 1, vec![Matrix::identity(f, 1), Matrix::identity(f, 1)]).unwrap());
        let reg = Arc::new(Module::regular(r.clone()));
        let s_profile = GorensteinProfile::asserted(fs.source().clone(), 0);
        let r_profile = GorensteinProfile::asserted(r.clone(), 0);
        let k = Arc::new(Module::regular(fs.source().clone()));
        let gl = GeneratorList::new(vec![("k".into(), k)], Provenance::AllModulesSelfInjective);
        let builder = |m: &Arc<Module>| precover_via_generators(&gl, m, &s_profile);
        let elem = crate::frobenius::separability_element_solve(&fs).unwrap();
        let family = vec![("R".into(), reg), ("trivial".into(), triv), ("sign".into(), sign.clone())];
        let t = transfer_precover(
            &ad,
            &sign,
            &builder,
            elem.element().map(SeparabilityEvidence::Element),
            &family,
            &r_profile,
        )
        .unwrap();
        assert!(t.gamma.valid());
        assert_eq!(t.gamma.phi.matrix().shape(), (1, 2));
        assert!(t.gamma.phi.is_surjective());
        assert!(matches!(
            transfer_precover(&ad, &sign, &builder, None, &family, &r_profile),
            Err(GorensteinError::SeparabilityMissing(_))
        ));
    }
}
