use std::sync::Arc;

use abmc_core::catalog::{module_catalog, Sampler};
use abmc_core::cotorsion::Verdict;
use abmc_core::homological::{hom_group, is_projective};
use abmc_core::linalg::BaseRing;
use abmc_core::model::*;
use abmc_core::module_cat::{direct_sum, Algebra, Module, Morphism};

fn f2c2() -> Arc<Algebra> {
    Algebra::cyclic_group(BaseRing::PrimeField(2), 2)
}

fn zc2() -> Arc<Algebra> {
    Algebra::cyclic_group(BaseRing::Integers, 2)
}

fn norm_map(a: &Arc<Algebra>) -> Morphism {
    let k = Module::trivial(a).unwrap();
    let h = hom_group(&k, &Module::free(a, 1));
    let f = h.basis()[0].clone();
    assert!(f.is_mono());
    f
}

#[test]
fn presets_validate() {
    let a = f2c2();
    let cat = module_catalog(&a, 4).unwrap().modules();
    let ms = make_model_structure(ModelStructure::quasi_frobenius(&a), &cat, 20).unwrap();
    assert_eq!(ms.name, "QF(F2[C2])");
    assert!(ms.validation.as_ref().unwrap().thick.pass);

    let z = Algebra::base_ring(BaseRing::Integers);
    let cat = module_catalog(&z, 2).unwrap().modules();
    match make_model_structure(ModelStructure::quasi_frobenius(&z), &cat, 20) {
        Err(ModelError::ThicknessFailed(c)) => assert!(c.contains("0 → Z → Z → Z/2 → 0"), "{c}"),
        other => panic!("expected thickness failure, got {other:?}"),
    }

    let b = zc2();
    let cat = module_catalog(&b, 2).unwrap().modules();
    let ms = make_model_structure(ModelStructure::gorenstein_projective(&b, 1), &cat, 10).unwrap();
    assert_eq!(ms.name, "Gorenstein-projective(Z[C2])");
}

#[test]
fn classify_examples() {
    let a = f2c2();
    let ms = ModelStructure::quasi_frobenius(&a);
    let k = Module::trivial(&a).unwrap();
    let id = ms.classify_map(&Morphism::identity(&k));
    for v in [&id.cofibration, &id.fibration, &id.acyclic_cofibration, &id.acyclic_fibration] {
        assert_eq!(*v, Verdict::Yes);
    }
    let c = ms.classify_map(&norm_map(&a));
    assert!(c.cofibration.holds());
    assert!(c.acyclic_cofibration.is_no());
    let p = Module::free(&a, 1);
    let c = ms.classify_map(&Morphism::zero(&p, &Module::zero(&a)));
    assert!(c.acyclic_fibration.holds());
}

#[test]
fn factorization_examples() {
    let a = f2c2();
    let ms = ModelStructure::quasi_frobenius(&a);
    let k = Module::trivial(&a).unwrap();
    let zero = Module::zero(&a);
    let f = factorize(&ms, &Morphism::zero(&k, &zero), FactorMode::CofThenAcyFib).unwrap();
    assert_eq!(f.stage, FactorStage::Epi);
    assert_eq!(f.first.dst(), &Module::free(&a, 1));
    assert!(f.first.is_mono());

    let f = factorize(&ms, &Morphism::zero(&zero, &k), FactorMode::CofThenAcyFib).unwrap();
    assert_eq!(f.first.dst(), &k);
    assert!(f.second.is_iso());

    for mode in [FactorMode::CofThenAcyFib, FactorMode::AcyCofThenFib] {
        let id = Morphism::identity(&k);
        let f = factorize(&ms, &id, mode).unwrap();
        assert_eq!(f.second.compose(&f.first), id);
    }
}

#[test]
fn general_case_over_zc2() {
    let b = zc2();
    let ms = ModelStructure::gorenstein_projective(&b, 1);
    let t = Module::trivial(&b).unwrap();
    let s = Module::sign(&b).unwrap();
    // t → t ⊕ s → s: neither mono nor epi once composed with the zero
    let sum = direct_sum(&[t.clone(), s.clone()]).unwrap();
    let f = sum.projections[1].compose(&sum.injections[0]).add(&Morphism::zero(&t, &s));
    let twice = Morphism::identity(&t).scale(&2.into());
    for g in [f, twice] {
        for mode in [FactorMode::CofThenAcyFib, FactorMode::AcyCofThenFib] {
            let fac = factorize(&ms, &g, mode).unwrap();
            assert_eq!(fac.second.compose(&fac.first), g);
            assert!(fac.verification.first_cokernel.holds());
            assert!(fac.verification.second_kernel.holds());
        }
    }
}

#[test]
fn seeded_factorizations_are_exact() {
    let a = f2c2();
    let ms = ModelStructure::quasi_frobenius(&a);
    let mut s = Sampler::new(module_catalog(&a, 4).unwrap(), 7);
    for _ in 0..20 {
        let f = s.any_morphism();
        for mode in [FactorMode::CofThenAcyFib, FactorMode::AcyCofThenFib] {
            let fac = factorize(&ms, &f, mode).unwrap();
            assert_eq!(fac.second.compose(&fac.first), f);
        }
    }
}

#[test]
fn lifting() {
    let a = f2c2();
    let ms = ModelStructure::quasi_frobenius(&a);
    let k = Module::trivial(&a).unwrap();
    let p = Module::free(&a, 1);
    let zero = Module::zero(&a);
    let i = norm_map(&a);
    let top = norm_map(&a);
    let problem = LiftProblem {
        i: i.clone(),
        p: Morphism::zero(&p, &zero),
        top,
        bottom: Morphism::zero(&p, &zero),
    };
    let l = lift(&ms, &problem).unwrap();
    assert!(l.upper_triangle && l.lower_triangle);

    let bad = LiftProblem {
        i: Morphism::identity(&k),
        p: Morphism::identity(&k),
        top: Morphism::identity(&k),
        bottom: Morphism::zero(&k, &k),
    };
    assert!(matches!(lift(&ms, &bad), Err(ModelError::Precondition(_))));
}

#[test]
fn weak_equivalences() {
    let a = f2c2();
    let ms = ModelStructure::quasi_frobenius(&a);
    let k = Module::trivial(&a).unwrap();
    assert_eq!(is_weak_equivalence(&ms, &Morphism::identity(&k)).unwrap().verdict, Verdict::Yes);
    let sum = direct_sum(&[k.clone(), Module::free(&a, 1)]).unwrap();
    assert!(is_weak_equivalence(&ms, &sum.injections[0]).unwrap().verdict.holds());
    assert!(is_weak_equivalence(&ms, &Morphism::zero(&Module::zero(&a), &k)).unwrap().verdict.is_no());
}

#[test]
fn stable_homs() {
    let b = zc2();
    let ms = ModelStructure::gorenstein_projective(&b, 1);
    let t = Module::trivial(&b).unwrap();
    let st = stable_hom(&ms, &t, &t).unwrap();
    assert_eq!(st.structure, "Z/2");
    assert_eq!(st.factoring, "Z");
    assert!(free_cover_lemma(&t, &t, &Module::free(&b, 1)));
    assert!(stable_hom(&ms, &Module::free(&b, 1), &t).unwrap().is_zero());

    let a = f2c2();
    let ms = ModelStructure::quasi_frobenius(&a);
    let k = Module::trivial(&a).unwrap();
    assert_eq!(stable_hom(&ms, &k, &k).unwrap().structure, "F2");
}

#[test]
fn pushout_products_and_monoidal() {
    let a = f2c2();
    let ms = ModelStructure::quasi_frobenius(&a);
    let k = Module::trivial(&a).unwrap();
    let zk = Morphism::zero(&Module::zero(&a), &k);
    let pp = pushout_product(&zk, &zk).unwrap();
    assert!(pp.corner.is_zero());
    let i = norm_map(&a);
    let pp = pushout_product(&i, &i).unwrap();
    assert!(pp.map.is_mono());
    assert_eq!(ms.classify_map(&pp.map).cofibration, Verdict::Yes);

    let cat = module_catalog(&a, 4).unwrap().modules();
    let r = monoidal_check(&ms, &cat).unwrap();
    assert!(r.pass, "{r:?}");
    assert!(r.flat.automatic);

    let synthetic = ModelStructure::assemble(
        "synthetic",
        ModelKind::Custom,
        abmc_core::cotorsion::ClassDescriptor::explicit(&a, vec![Module::free(&a, 1)]),
        ms.f.clone(),
        ms.w.clone(),
        ms.pair_cw_f.clone(),
        ms.pair_c_fw.clone(),
    );
    let r = monoidal_check(&synthetic, &cat).unwrap();
    assert!(!r.unit.pass);
    assert!(is_projective(&Module::free(&a, 1)));
}
