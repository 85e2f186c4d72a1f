mod common;

use std::sync::Arc;

use common::corpus;
use gpw_core::fixtures::AlgebraFixture;
use gpw_core::gorenstein::{gp_test, gpd, precover_via_generators, verify_precover};
use gpw_core::homological::syzygy;
use gpw_core::module::{direct_sum, Module};
use proptest::prelude::*;
use proptest::sample::Index;

fn fixture(i: &Index) -> &'static AlgebraFixture {
    let algebras = &corpus().algebras;
    &algebras[i.index(algebras.len())]
}

fn pick<'a>(a: &'a AlgebraFixture, i: &Index) -> &'a Arc<Module> {
    &a.modules[i.index(a.modules.len())].1
}

fn is_gp(a: &AlgebraFixture, m: &Arc<Module>) -> bool {
    gp_test(m, &a.profile()).unwrap().valid()
}

#[test]
fn gp_is_closed_under_extensions_and_kernels_of_epis() {
    // for 0 → A → B → C → 0 with C GP: A is GP iff B is GP
    let c = corpus();
    for s in &c.sequences {
        let a = c.algebra(s.algebra).unwrap();
        if !is_gp(a, s.ses.right()) {
            continue;
        }
        assert_eq!(is_gp(a, s.ses.left()), is_gp(a, s.ses.middle()), "{}", s.name);
    }
}

#[test]
fn gpd_zero_iff_gp() {
    for a in &corpus().algebras {
        for (label, m) in &a.modules {
            let dim = gpd(m, &a.profile()).unwrap().value;
            assert!(dim <= a.d, "{} / {label}", a.name);
            assert_eq!(dim == 0, is_gp(a, m), "{} / {label}", a.name);
        }
    }
}

#[test]
fn syzygy_lowers_gpd_by_one() {
    for a in &corpus().algebras {
        for (label, m) in &a.modules {
            let profile = a.profile();
            let before = gpd(m, &profile).unwrap().value;
            let after = gpd(&syzygy(m).unwrap(), &profile).unwrap().value;
            assert_eq!(after, before.saturating_sub(1), "{} / {label}", a.name);
        }
    }
}

#[test]
fn generator_precovers_verify() {
    for a in &corpus().algebras {
        for (label, m) in &a.modules {
            let cert = precover_via_generators(&a.generators, m, &a.profile()).unwrap();
            assert!(cert.valid(), "{} / {label}", a.name);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gp_of_a_direct_sum_is_gp_of_each_summand(a in any::<Index>(), picks in prop::collection::vec(any::<Index>(), 1..4)) {
        let a = fixture(&a);
        let ms: Vec<Arc<Module>> = picks.iter().map(|i| pick(a, i).clone()).collect();
        let sum = direct_sum(&a.algebra, &ms).unwrap();
        prop_assert_eq!(is_gp(a, &sum.module), ms.iter().all(|m| is_gp(a, m)));
    }

    #[test]
    fn precovers_stay_valid_on_subfamilies(a in any::<Index>(), i in any::<Index>(), keep in prop::collection::vec(any::<bool>(), 8)) {
        let a = fixture(&a);
        let m = pick(a, &i);
        let profile = a.profile();
        let full = precover_via_generators(&a.generators, m, &profile).unwrap();
        let sub: Vec<(String, Arc<Module>)> = a
            .generators
            .modules
            .iter()
            .zip(keep.iter().cycle())
            .filter(|(_, &k)| k)
            .map(|(g, _)| g.clone())
            .collect();
        let restricted = verify_precover(&full.phi, &sub, &profile).unwrap();
        prop_assert!(restricted.valid());
        prop_assert_eq!(restricted.family.len(), sub.len());
    }
}
