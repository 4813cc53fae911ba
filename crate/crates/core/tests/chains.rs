use std::sync::Arc;

use abmc_core::catalog::module_catalog;
use abmc_core::chains::*;
use abmc_core::cotorsion::{class_member, CotorsionError, CotorsionPair, Verdict};
use abmc_core::homological::{ext, hom_group};
use abmc_core::linalg::BaseRing;
use abmc_core::module_cat::{Algebra, Module, Morphism};

fn f2c2() -> Arc<Algebra> {
    Algebra::cyclic_group(BaseRing::PrimeField(2), 2)
}

fn z() -> Arc<Algebra> {
    Algebra::base_ring(BaseRing::Integers)
}

fn small_modules(a: &Arc<Algebra>) -> Vec<Module> {
    module_catalog(a, 3).unwrap().modules().into_iter().filter(|m| !m.is_zero()).collect()
}

#[test]
fn disks_spheres_suspension() {
    let z = z();
    let zm = Module::free(&z, 1);
    let z2 = Module::abelian(&z, &[2]).unwrap();
    assert!(ChainComplex::disk(1, &zm).is_exact());
    assert_eq!(ChainComplex::sphere(0, &z2).homology(0), z2);
    assert_eq!(ChainComplex::sphere(0, &z2).suspension(), ChainComplex::sphere(1, &z2));
    assert_eq!(ChainComplex::sphere(0, &zm).cycles(0), zm);
    let two = Morphism::from_i64(&zm, &zm, &[&[2]]).unwrap();
    let c = ChainComplex::new(&z, 0, vec![zm.clone(), zm.clone()], vec![two]).unwrap();
    assert_eq!(c.homology(0).structure(), "Z/2");
    assert!(c.homology(1).is_zero());
    let ss = c.suspension().suspension();
    assert_eq!((ss.lo(), ss.hi()), (2, 3));
    assert_eq!(ss.d(3), c.d(1));
    let bad = ChainComplex::new(
        &z,
        0,
        vec![zm.clone(), zm.clone(), zm.clone()],
        vec![Morphism::identity(&zm), Morphism::identity(&zm)],
    );
    assert!(matches!(bad, Err(ChainError::DSquaredNonzero { .. })));
}

#[test]
fn null_homotopies() {
    let z = z();
    let z2 = Module::abelian(&z, &[2]).unwrap();
    let d = ChainComplex::disk(1, &z2);
    let h = null_homotopy(&ChainMap::identity(&d)).unwrap();
    assert!(h.witnesses(&ChainMap::identity(&d)));
    let s = ChainComplex::sphere(0, &z2);
    assert!(null_homotopy(&ChainMap::identity(&s)).is_none());

    let a = f2c2();
    let mods = small_modules(&a);
    let cat = complex_catalog(&mods, 3, 6, 3);
    for m in &mods {
        let disk = ChainComplex::disk(1, m);
        for y in &cat {
            for f in chain_hom(&disk, y).basis() {
                let h = null_homotopy(&f).expect("maps out of a disk are null-homotopic");
                assert!(h.witnesses(&f));
            }
        }
    }
}

#[test]
fn tilde_and_dg_examples() {
    let a = f2c2();
    let pair = CotorsionPair::projective(&a);
    let free = Module::free(&a, 1);
    let k = Module::trivial(&a).unwrap();
    let td = ChainClassSpec::new(&pair, ChainVariant::TildeD);
    assert_eq!(tilde_member(&td, &ChainComplex::disk(1, &free)), Verdict::Yes);
    assert!(tilde_member(&td, &ChainComplex::sphere(0, &free)).is_no());
    let h = hom_group(&free, &free);
    let norm = h.element(&vec![1.into(); h.orders().len()]);
    assert!(!norm.is_zero() && !norm.is_iso());
    let c = ChainComplex::new(&a, 0, vec![free.clone(), free.clone()], vec![norm]).unwrap();
    let v = tilde_member(&td, &c);
    assert!(v.certificate().unwrap().reason.contains("H_0 = F2"), "{v}");

    let mods = small_modules(&a);
    let dgd = ChainClassSpec::with_default_family(&pair, ChainVariant::DgTildeD, &mods);
    assert!(!dgd.witness_family.is_empty());
    assert!(matches!(dg_member(&dgd, &ChainComplex::sphere(0, &free)), Verdict::YesRelativeToFamily { .. }));
    assert!(dg_member(&dgd, &ChainComplex::sphere(0, &k)).is_no());
    let dge = ChainClassSpec::with_default_family(&pair, ChainVariant::DgTildeE, &mods);
    assert_eq!(dg_member(&dge, &ChainComplex::disk(2, &k)), Verdict::Yes);
}

#[test]
fn chain_ext_examples() {
    let z = z();
    let z2 = Module::abelian(&z, &[2]).unwrap();
    let e = chain_ext1(&ChainComplex::sphere(0, &z2), &ChainComplex::disk(1, &z2));
    assert_eq!(e.structure, "Z/2");
    let free = Module::free(&z, 1);
    assert!(chain_ext1(&ChainComplex::disk(1, &free), &ChainComplex::sphere(0, &z2)).is_zero());
}

#[test]
fn disk_isomorphism() {
    let a = f2c2();
    let mods = small_modules(&a);
    let cat = complex_catalog(&mods, 4, 10, 5);
    for (t, y) in cat.iter().enumerate().take(12) {
        let m = &mods[t % mods.len()];
        for n in y.degrees() {
            let lhs = chain_ext1(y, &ChainComplex::disk(n + 1, m));
            let rhs = ext(&y.entry(n), m, 1);
            assert_eq!(lhs.structure, rhs.structure(), "Y = {y}, n = {n}, A = {}", m.structure());
        }
    }
}

#[test]
fn sphere_isomorphism_index() {
    let a = f2c2();
    let mods = small_modules(&a);
    let exact: Vec<ChainComplex> = complex_catalog(&mods, 4, 30, 9).into_iter().filter(|c| c.is_exact()).collect();
    assert!(!exact.is_empty());
    for y in exact.iter().take(8) {
        for m in &mods {
            for n in (y.lo())..=(y.hi() + 2) {
                let lhs = chain_ext1(y, &ChainComplex::sphere(n - 1, m));
                let rhs = ext(&y.cycles(n - 2), m, 1);
                assert_eq!(lhs.structure, rhs.structure(), "Y = {y}, n = {n}, A = {}", m.structure());
            }
        }
    }
}

#[test]
fn routes_agree_when_split() {
    let a = f2c2();
    let mods = small_modules(&a);
    let cat = complex_catalog(&mods, 3, 8, 11);
    let proj = CotorsionPair::projective(&a);
    let frees: Vec<ChainComplex> =
        cat.iter().filter(|c| c.entries().iter().all(|m| class_member(&proj.left, m).holds())).cloned().collect();
    assert!(!frees.is_empty());
    for y in frees.iter().take(5) {
        for x in cat.iter().take(10) {
            assert!(degreewise_split(y, x));
            assert_eq!(chain_ext1_homotopy(y, x).structure, chain_ext1_presentation(y, x).structure);
        }
    }
}

#[test]
fn enough_injectives_recipe() {
    let a = f2c2();
    let pair = CotorsionPair::projective(&a);
    let free = Module::free(&a, 1);
    let k = Module::trivial(&a).unwrap();
    let r = chain_enough_injectives_pushout(&pair, &ChainComplex::sphere(0, &free)).unwrap();
    assert_eq!(r.route, ChainApproxRoute::Identity);
    let r = chain_enough_injectives_pushout(&pair, &ChainComplex::disk(1, &k)).unwrap();
    assert_eq!(r.route, ChainApproxRoute::Disk);
    assert!(r.cover.is_epi() && r.inclusion.is_mono());
    match chain_enough_injectives_pushout(&pair, &ChainComplex::sphere(0, &k)) {
        Err(ChainError::Cotorsion(CotorsionError::ProviderFailed { .. })) => {}
        other => panic!("bounded resolution of k cannot exist: {other:?}"),
    }
}

#[test]
fn induced_pair_report() {
    let a = f2c2();
    let pair = CotorsionPair::projective(&a);
    let mods = small_modules(&a);
    let cat = complex_catalog(&mods, 4, 12, 21);
    let r = verify_induced_pair(&pair, &cat, &mods, InducedConfig::default());
    assert!(r.pass_hereditary);
    assert!(r.pass_orthogonality, "{:?}", r.orthogonality.iter().flat_map(|o| o.cells.iter().filter(|c| !c.pass)).collect::<Vec<_>>());
    assert!(r.pass_compatibility);
}
