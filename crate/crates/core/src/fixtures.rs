//! Shipped fixture corpus: algebras with their test modules, Frobenius extensions between them,
//! short exact sequences, and Ext dimensions derived by hand.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::{trivial_action, Algebra, GroupPresentation};
use crate::frobenius::{induce_map, induce_module, Direction, FrobeniusSystem};
use crate::gorenstein::{GeneratorList, Provenance};
use crate::homological::GorensteinProfile;
use crate::linalg::{FieldSpec, Matrix};
use crate::module::{direct_sum, kernel_module, Module, ModuleMap, ShortExactSequence};

/// `dim Ext^degree(m, n)` asserted for named modules of one algebra fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtAssertion {
    pub m: &'static str,
    pub n: &'static str,
    pub degree: usize,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct AlgebraFixture {
    pub name: &'static str,
    pub description: &'static str,
    pub algebra: Arc<Algebra>,
    /// Gorenstein parameter of the shipped profile.
    pub d: usize,
    pub modules: Vec<(String, Arc<Module>)>,
    pub generators: GeneratorList,
    pub ext_assertions: Vec<ExtAssertion>,
}

impl AlgebraFixture {
    pub fn module(&self, label: &str) -> Option<&Arc<Module>> {
        self.modules.iter().find(|(l, _)| l == label).map(|(_, m)| m)
    }

    pub fn profile(&self) -> GorensteinProfile {
        GorensteinProfile::asserted(self.algebra.clone(), self.d)
    }

    pub fn module_list(&self) -> Vec<Arc<Module>> {
        self.modules.iter().map(|(_, m)| m.clone()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "description": self.description,
            "field": self.algebra.field().to_string(),
            "dim": self.algebra.dim(),
            "labels": self.algebra.labels(),
            "gorenstein_d": self.d,
            "modules": self.modules.iter().map(|(l, m)| json!({"label": l, "dim": m.dim()})).collect::<Vec<_>>(),
            "generators": self.generators.modules.iter().map(|(l, _)| l).collect::<Vec<_>>(),
            "generator_provenance": self.generators.provenance,
            "ext_assertions": self.ext_assertions.iter().map(|e| json!({
                "m": e.m, "n": e.n, "degree": e.degree, "dim": e.dim,
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct ExtensionFixture {
    pub name: &'static str,
    pub description: &'static str,
    pub system: FrobeniusSystem,
    /// Algebra fixture names of `S` and `R`.
    pub s: &'static str,
    pub r: &'static str,
    pub skew_group: bool,
}

#[derive(Clone, Debug)]
pub struct SesFixture {
    pub name: &'static str,
    /// Algebra fixture the sequence lives over.
    pub algebra: &'static str,
    pub ses: ShortExactSequence,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub algebras: Vec<AlgebraFixture>,
    pub extensions: Vec<ExtensionFixture>,
    pub sequences: Vec<SesFixture>,
}

impl Corpus {
    pub fn algebra(&self, name: &str) -> Option<&AlgebraFixture> {
        self.algebras.iter().find(|a| a.name == name)
    }

    pub fn extension(&self, name: &str) -> Option<&ExtensionFixture> {
        self.extensions.iter().find(|e| e.name == name)
    }

    /// `(S fixture, R fixture)` of an extension.
    pub fn sides(&self, ext: &ExtensionFixture) -> (&AlgebraFixture, &AlgebraFixture) {
        (
            self.algebra(ext.s).expect("extension source is a fixture"),
            self.algebra(ext.r).expect("extension target is a fixture"),
        )
    }

    /// Sequences over `S` (to induce) or over `R` (to restrict) of an extension.
    pub fn sequences_for(&self, ext: &ExtensionFixture) -> Vec<(&SesFixture, Direction)> {
        self.sequences
            .iter()
            .filter_map(|s| {
                if s.algebra == ext.s {
                    Some((s, Direction::Induce))
                } else if s.algebra == ext.r {
                    Some((s, Direction::Restrict))
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn names(&self) -> Vec<(&'static str, &'static str, &'static str)> {
        let mut out: Vec<_> = self
            .algebras
            .iter()
            .map(|a| ("algebra", a.name, a.description))
            .collect();
        out.extend(self.extensions.iter().map(|e| ("extension", e.name, e.description)));
        out.extend(self.sequences.iter().map(|s| ("sequence", s.name, s.algebra)));
        out
    }

    pub fn show(&self, name: &str) -> Option<Value> {
        if let Some(a) = self.algebra(name) {
            return Some(a.to_json());
        }
        if let Some(e) = self.extension(name) {
            return Some(json!({
                "name": e.name,
                "description": e.description,
                "s": e.s,
                "r": e.r,
                "skew_group": e.skew_group,
                "system": e.system.to_json(),
            }));
        }
        self.sequences.iter().find(|s| s.name == name).map(|s| {
            json!({
                "name": s.name,
                "algebra": s.algebra,
                "i": s.ses.i().to_json(),
                "p": s.ses.p().to_json(),
            })
        })
    }
}

fn module(a: &Arc<Algebra>, rows: &[&[&[i64]]]) -> Arc<Module> {
    let f = a.field();
    let dim = rows.first().map_or(0, |m| m.len());
    let action = rows
        .iter()
        .map(|m| Matrix::from_i64(f, &m.iter().map(|r| r.to_vec()).collect::<Vec<_>>()))
        .collect();
    let m = Module::new(a.clone(), dim, action).expect("fixture module shape");
    m.validate().expect("fixture module axioms");
    Arc::new(m)
}

/// 1-dimensional module with basis element `j` acting by `values[j]`.
fn character(a: &Arc<Algebra>, values: &[i64]) -> Arc<Module> {
    let rows: Vec<[i64; 1]> = values.iter().map(|&v| [v]).collect();
    let mats: Vec<Vec<&[i64]>> = rows.iter().map(|r| vec![&r[..]]).collect();
    let refs: Vec<&[&[i64]]> = mats.iter().map(|m| &m[..]).collect();
    module(a, &refs)
}

/// The module map `R → χ`, `1 ↦ 1`, onto a character of `R`.
fn onto_character(chi: &Arc<Module>) -> ModuleMap {
    let a = chi.algebra().clone();
    let f = a.field();
    let row: Vec<_> = chi.action().iter().map(|m| m.get(0, 0).clone()).collect();
    let matrix = Matrix::from_fn(f, 1, a.dim(), |_, j| row[j].clone());
    ModuleMap::checked(Arc::new(Module::regular(a)), chi.clone(), matrix).expect("character map")
}

fn ses_from_surjection(p: ModuleMap) -> ShortExactSequence {
    let (_, i) = kernel_module(&p).expect("kernel of fixture map");
    ShortExactSequence::new(i, p).expect("fixture sequence is short exact")
}

fn ses_from_maps(a: &Arc<Module>, b: &Arc<Module>, c: &Arc<Module>, i: &[Vec<i64>], p: &[Vec<i64>]) -> ShortExactSequence {
    let f = b.field();
    let i = ModuleMap::checked(a.clone(), b.clone(), Matrix::from_i64(f, i)).expect("fixture map");
    let p = ModuleMap::checked(b.clone(), c.clone(), Matrix::from_i64(f, p)).expect("fixture map");
    ShortExactSequence::new(i, p).expect("fixture sequence is short exact")
}

fn induced_ses(fs: &FrobeniusSystem, ses: &ShortExactSequence) -> ShortExactSequence {
    let i = induce_map(fs, ses.i()).expect("induce fixture map");
    let p = induce_map(fs, ses.p()).expect("induce fixture map");
    ShortExactSequence::new(i, p).expect("induction of fixture sequence is exact")
}

fn ext(m: &'static str, n: &'static str, degree: usize, dim: usize) -> ExtAssertion {
    ExtAssertion { m, n, degree, dim }
}

fn regular(a: &Arc<Algebra>) -> Arc<Module> {
    Arc::new(Module::regular(a.clone()))
}

fn induced(fs: &FrobeniusSystem, x: &Arc<Module>) -> Arc<Module> {
    induce_module(fs, x).expect("induce fixture module").module
}

fn named(items: &[(&str, &Arc<Module>)]) -> Vec<(String, Arc<Module>)> {
    items.iter().map(|(l, m)| (l.to_string(), (*m).clone())).collect()
}

/// `T₂` over ℚ with basis `e11, e12, e22`, and `(P₁, P₂, S₂)`.
pub fn t2() -> (Arc<Algebra>, Arc<Module>, Arc<Module>, Arc<Module>) {
    let a = Arc::new(Algebra::upper_triangular(FieldSpec::rationals(), 2));
    let p1 = module(&a, &[&[&[1]], &[&[0]], &[&[0]]]);
    // basis (e22, e12) inside the regular module
    let p2 = module(
        &a,
        &[&[&[0, 0], &[0, 1]], &[&[0, 0], &[1, 0]], &[&[1, 0], &[0, 0]]],
    );
    let s2 = module(&a, &[&[&[0]], &[&[0]], &[&[1]]]);
    (a, p1, p2, s2)
}

/// `GF(3)[x]/(x²)` and its simple module `k`.
pub fn dual_numbers() -> (Arc<Algebra>, Arc<Module>) {
    let a = Arc::new(Algebra::polynomial_quotient(FieldSpec::gf(3), "x", &[0, 0]));
    let k = character(&a, &[1, 0]);
    (a, k)
}

/// `σ(x) = 2x` on `GF(3)[x]/(x²)`, for `ℤ/2`.
pub fn dual_sign_action() -> Vec<Matrix> {
    let f = FieldSpec::gf(3);
    vec![Matrix::identity(f, 2), Matrix::from_i64(f, &[vec![1, 0], vec![0, 2]])]
}

impl Corpus {
    pub fn build() -> Self {
        let z2 = GroupPresentation::cyclic(2);
        let mut algebras = Vec::new();
        let mut extensions = Vec::new();
        let mut sequences = Vec::new();

        // GF(3) ⊆ GF(3)[ℤ/2]
        let gf3z2 = FrobeniusSystem::group_algebra(FieldSpec::gf(3), &z2);
        let k3 = regular(gf3z2.source());
        let k3sq = Arc::new(Module::free(gf3z2.source().clone(), 2));
        algebras.push(AlgebraFixture {
            name: "gf3",
            description: "GF(3)",
            algebra: gf3z2.source().clone(),
            d: 0,
            modules: named(&[("k", &k3), ("k^2", &k3sq)]),
            generators: GeneratorList::new(named(&[("k", &k3)]), Provenance::AllModulesSelfInjective),
            ext_assertions: vec![ext("k", "k", 0, 1), ext("k", "k", 1, 0)],
        });
        let r = gf3z2.target().clone();
        let (triv3, sign3) = (character(&r, &[1, 1]), character(&r, &[1, -1]));
        let reg = regular(&r);
        algebras.push(AlgebraFixture {
            name: "gf3[z2]",
            description: "GF(3)[ℤ/2], semisimple",
            algebra: r.clone(),
            d: 0,
            modules: named(&[("R", &reg), ("trivial", &triv3), ("sign", &sign3)]),
            generators: GeneratorList::new(
                named(&[("trivial", &triv3), ("sign", &sign3)]),
                Provenance::AllModulesSelfInjective,
            ),
            ext_assertions: vec![
                ext("trivial", "sign", 0, 0),
                ext("trivial", "sign", 1, 0),
                ext("trivial", "trivial", 1, 0),
                ext("R", "sign", 0, 1),
            ],
        });
        extensions.push(ExtensionFixture {
            name: "gf3-z2",
            description: "GF(3) ⊆ GF(3)[ℤ/2], separable",
            system: gf3z2.clone(),
            s: "gf3",
            r: "gf3[z2]",
            skew_group: true,
        });
        sequences.push(SesFixture {
            name: "gf3-split",
            algebra: "gf3",
            ses: ShortExactSequence::split(&k3, &k3).expect("split"),
        });
        sequences.push(SesFixture {
            name: "gf3z2-trivial-regular-sign",
            algebra: "gf3[z2]",
            ses: ses_from_surjection(onto_character(&sign3)),
        });

        // GF(2) ⊆ GF(2)[ℤ/2]
        let gf2z2 = FrobeniusSystem::group_algebra(FieldSpec::gf(2), &z2);
        let k2 = regular(gf2z2.source());
        algebras.push(AlgebraFixture {
            name: "gf2",
            description: "GF(2)",
            algebra: gf2z2.source().clone(),
            d: 0,
            modules: named(&[("k", &k2)]),
            generators: GeneratorList::new(named(&[("k", &k2)]), Provenance::AllModulesSelfInjective),
            ext_assertions: vec![ext("k", "k", 1, 0)],
        });
        let r = gf2z2.target().clone();
        let triv2 = character(&r, &[1, 1]);
        let reg = regular(&r);
        algebras.push(AlgebraFixture {
            name: "gf2[z2]",
            description: "GF(2)[ℤ/2], local and self-injective",
            algebra: r.clone(),
            d: 0,
            modules: named(&[("R", &reg), ("trivial", &triv2)]),
            generators: GeneratorList::new(
                named(&[("R", &reg), ("trivial", &triv2)]),
                Provenance::AllModulesSelfInjective,
            ),
            ext_assertions: vec![
                ext("trivial", "trivial", 1, 1),
                ext("trivial", "trivial", 2, 1),
                ext("trivial", "R", 1, 0),
            ],
        });
        extensions.push(ExtensionFixture {
            name: "gf2-z2",
            description: "GF(2) ⊆ GF(2)[ℤ/2], not separable",
            system: gf2z2,
            s: "gf2",
            r: "gf2[z2]",
            skew_group: true,
        });
        sequences.push(SesFixture {
            name: "gf2z2-trivial-regular-trivial",
            algebra: "gf2[z2]",
            ses: ses_from_surjection(onto_character(&triv2)),
        });

        // GF(3)[x]/(x²) and its skew group ring with σ(x) = 2x
        let (dual, k) = dual_numbers();
        let dual_reg = regular(&dual);
        algebras.push(AlgebraFixture {
            name: "dual",
            description: "GF(3)[x]/(x²), self-injective",
            algebra: dual.clone(),
            d: 0,
            modules: named(&[("A", &dual_reg), ("k", &k)]),
            generators: GeneratorList::new(
                named(&[("A", &dual_reg), ("k", &k)]),
                Provenance::AllModulesSelfInjective,
            ),
            ext_assertions: vec![
                ext("k", "k", 0, 1),
                ext("k", "k", 1, 1),
                ext("k", "k", 2, 1),
                ext("k", "k", 3, 1),
                ext("k", "A", 0, 1),
                ext("k", "A", 1, 0),
                ext("k", "A", 2, 0),
            ],
        });
        let dual_ses = ses_from_maps(&k, &dual_reg, &k, &[vec![0], vec![1]], &[vec![1, 0]]);
        sequences.push(SesFixture {
            name: "dual-k-regular-k",
            algebra: "dual",
            ses: dual_ses.clone(),
        });
        sequences.push(SesFixture {
            name: "dual-split",
            algebra: "dual",
            ses: ShortExactSequence::split(&k, &k).expect("split"),
        });

        let skew = FrobeniusSystem::skew_group(&dual, &z2, &dual_sign_action()).expect("skew system");
        let r = skew.target().clone();
        // basis 1⋅e, 1⋅g, x⋅e, x⋅g
        let (plus, minus) = (character(&r, &[1, 1, 0, 0]), character(&r, &[1, -1, 0, 0]));
        let reg = regular(&r);
        let ind_k = induced(&skew, &k);
        algebras.push(AlgebraFixture {
            name: "dual*z2",
            description: "GF(3)[x]/(x²)∗ℤ/2 with σ(x) = 2x, self-injective",
            algebra: r.clone(),
            d: 0,
            modules: named(&[("R", &reg), ("chi+", &plus), ("chi-", &minus), ("Ind k", &ind_k)]),
            generators: GeneratorList::new(
                named(&[("R", &reg), ("chi+", &plus), ("chi-", &minus)]),
                Provenance::AllModulesSelfInjective,
            ),
            ext_assertions: vec![
                ext("chi+", "chi-", 1, 1),
                ext("chi+", "chi+", 1, 0),
                ext("chi+", "chi+", 2, 1),
                ext("chi+", "chi-", 2, 0),
                ext("chi+", "R", 1, 0),
                ext("Ind k", "chi+", 0, 1),
            ],
        });
        extensions.push(ExtensionFixture {
            name: "dual-skew",
            description: "GF(3)[x]/(x²) ⊆ GF(3)[x]/(x²)∗ℤ/2",
            system: skew,
            s: "dual",
            r: "dual*z2",
            skew_group: true,
        });
        sequences.push(SesFixture {
            name: "dualz2-kernel-regular-chi+",
            algebra: "dual*z2",
            ses: ses_from_surjection(onto_character(&plus)),
        });

        // GF(3)[x]/(x²) ⊆ GF(9)[x]/(x²) with GF(9) = GF(3)[t]/(t² + 1)
        let gf9 = Algebra::polynomial_quotient(FieldSpec::gf(3), "t", &[1, 0]);
        let f = FieldSpec::gf(3);
        let bc = FrobeniusSystem::base_change(&dual, &gf9, &[f.one(), f.zero()]).expect("base change system");
        let r = bc.target().clone();
        let reg = regular(&r);
        let ind_k = induced(&bc, &k);
        algebras.push(AlgebraFixture {
            name: "gf9-dual",
            description: "GF(9)[x]/(x²) as a GF(3)-algebra, self-injective",
            algebra: r.clone(),
            d: 0,
            modules: named(&[("R", &reg), ("Ind k", &ind_k)]),
            generators: GeneratorList::new(
                named(&[("R", &reg), ("Ind k", &ind_k)]),
                Provenance::AllModulesSelfInjective,
            ),
            ext_assertions: vec![
                ext("Ind k", "Ind k", 0, 2),
                ext("Ind k", "Ind k", 1, 2),
                ext("Ind k", "R", 1, 0),
            ],
        });
        sequences.push(SesFixture {
            name: "gf9dual-induced",
            algebra: "gf9-dual",
            ses: induced_ses(&bc, &dual_ses),
        });
        extensions.push(ExtensionFixture {
            name: "dual-base-change",
            description: "GF(3)[x]/(x²) ⊆ GF(9)[x]/(x²) by base change",
            system: bc,
            s: "dual",
            r: "gf9-dual",
            skew_group: false,
        });

        // T₂ and T₂∗ℤ/2 with the trivial action
        let (t2a, p1, p2, s2) = t2();
        let t2reg = regular(&t2a);
        let zero = Arc::new(Module::zero(t2a.clone()));
        let p12 = direct_sum(&t2a, &[p1.clone(), p2.clone()]).expect("sum").module;
        algebras.push(AlgebraFixture {
            name: "t2",
            description: "upper-triangular 2×2 matrices over ℚ, hereditary",
            algebra: t2a.clone(),
            d: 1,
            modules: named(&[("0", &zero), ("P1", &p1), ("P2", &p2), ("S2", &s2), ("P1+P2", &p12), ("A", &t2reg)]),
            generators: GeneratorList::new(named(&[("P1", &p1), ("P2", &p2)]), Provenance::AllProjectives),
            ext_assertions: vec![
                ext("P1", "S2", 0, 0),
                ext("S2", "P1", 1, 1),
                ext("S2", "P2", 1, 0),
                ext("S2", "S2", 1, 0),
                ext("S2", "A", 1, 1),
                ext("P2", "S2", 1, 0),
                ext("S2", "P1", 2, 0),
                ext("S2", "A", 2, 0),
            ],
        });
        let t2_ses = ses_from_maps(&p1, &p2, &s2, &[vec![0], vec![1]], &[vec![1, 0]]);
        sequences.push(SesFixture {
            name: "t2-p1-p2-s2",
            algebra: "t2",
            ses: t2_ses.clone(),
        });
        sequences.push(SesFixture {
            name: "t2-split",
            algebra: "t2",
            ses: ShortExactSequence::split(&p1, &p2).expect("split"),
        });

        let t2z2 = FrobeniusSystem::skew_group(&t2a, &z2, &trivial_action(&t2a, &z2)).expect("skew system");
        let r = t2z2.target().clone();
        let reg = regular(&r);
        let (ip1, ip2, is2) = (induced(&t2z2, &p1), induced(&t2z2, &p2), induced(&t2z2, &s2));
        algebras.push(AlgebraFixture {
            name: "t2*z2",
            description: "T₂∗ℤ/2 with the trivial action, hereditary",
            algebra: r.clone(),
            d: 1,
            modules: named(&[("R", &reg), ("Ind P1", &ip1), ("Ind P2", &ip2), ("Ind S2", &is2)]),
            generators: GeneratorList::new(
                named(&[("Ind P1", &ip1), ("Ind P2", &ip2)]),
                Provenance::AllProjectives,
            ),
            ext_assertions: vec![
                ext("Ind S2", "R", 1, 2),
                ext("Ind S2", "Ind P1", 1, 2),
                ext("Ind S2", "Ind S2", 1, 0),
                ext("Ind P2", "Ind S2", 1, 0),
            ],
        });
        sequences.push(SesFixture {
            name: "t2z2-induced",
            algebra: "t2*z2",
            ses: induced_ses(&t2z2, &t2_ses),
        });
        extensions.push(ExtensionFixture {
            name: "t2-z2",
            description: "T₂ ⊆ T₂∗ℤ/2, trivial action",
            system: t2z2,
            s: "t2",
            r: "t2*z2",
            skew_group: true,
        });
        extensions.push(ExtensionFixture {
            name: "t2-identity",
            description: "T₂ ⊆ T₂, identity extension",
            system: FrobeniusSystem::identity(t2a),
            s: "t2",
            r: "t2",
            skew_group: false,
        });

        // ℚ[x]/(x² − x − 1)
        let golden = Arc::new(Algebra::polynomial_quotient(FieldSpec::rationals(), "x", &[-1, -1]));
        let greg = regular(&golden);
        algebras.push(AlgebraFixture {
            name: "golden",
            description: "ℚ[x]/(x² − x − 1), a field",
            algebra: golden,
            d: 0,
            modules: named(&[("A", &greg)]),
            generators: GeneratorList::new(named(&[("A", &greg)]), Provenance::AllModulesSelfInjective),
            ext_assertions: vec![ext("A", "A", 0, 2), ext("A", "A", 1, 0)],
        });

        Self {
            algebras,
            extensions,
            sequences,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_builds() {
        let c = Corpus::build();
        assert_eq!(c.sequences.len(), 10);
        for ext in &c.extensions {
            ext.system.verify().unwrap();
            let (s, r) = c.sides(ext);
            assert_eq!(s.algebra.as_ref(), ext.system.source().as_ref());
            assert_eq!(r.algebra.as_ref(), ext.system.target().as_ref());
        }
        for a in &c.algebras {
            a.algebra.validate().unwrap();
            for e in &a.ext_assertions {
                assert!(a.module(e.m).is_some() && a.module(e.n).is_some(), "{} {}", a.name, e.m);
            }
        }
        for s in &c.sequences {
            assert_eq!(c.algebra(s.algebra).unwrap().algebra.as_ref(), s.ses.middle().algebra().as_ref());
        }
        assert!(c.show("t2").is_some() && c.show("gf3-z2").is_some() && c.show("t2-split").is_some());
        assert!(c.show("nope").is_none());
    }
}
