use abmc_core::homological::*;
use abmc_core::linalg::BaseRing;
use abmc_core::module_cat::{direct_sum, Algebra, Module, Morphism, Ses};
use num_bigint::BigInt;

fn z() -> std::sync::Arc<Algebra> {
    Algebra::base_ring(BaseRing::Integers)
}

#[test]
fn ext_over_integers() {
    let a = z();
    let z2 = Module::abelian(&a, &[2]).unwrap();
    assert_eq!(ext(&z2, &z2, 1).structure(), "Z/2");
    assert!(ext(&Module::free(&a, 2), &z2, 1).is_zero());
    assert!(ext(&z2, &z2, 2).is_zero());
    let z4 = Module::abelian(&a, &[4]).unwrap();
    assert_eq!(ext(&z4, &Module::free(&a, 1), 1).structure(), "Z/4");
}

#[test]
fn group_cohomology_of_c2() {
    let a = Algebra::cyclic_group(BaseRing::Integers, 2);
    let t = Module::trivial(&a).unwrap();
    // H^1(C2; Z) = 0, H^2(C2; Z) = Z/2, H^3 = 0, H^4 = Z/2
    assert!(ext(&t, &t, 1).is_zero());
    assert_eq!(ext(&t, &t, 2).structure(), "Z/2");
    assert!(ext(&t, &t, 3).is_zero());
    assert_eq!(ext(&t, &t, 4).structure(), "Z/2");
    let s = Module::sign(&a).unwrap();
    assert_eq!(ext(&t, &s, 1).structure(), "Z/2");
}

#[test]
fn augmentation_syzygies_over_f2c2() {
    let a = Algebra::cyclic_group(BaseRing::PrimeField(2), 2);
    let k = Module::trivial(&a).unwrap();
    assert_eq!(*k.free_presentation().left(), k);
    for i in 1..4 {
        assert_eq!(syzygy(&k, i), k);
    }
    assert!(!is_projective(&k));
    assert!(!is_injective(&k));
    assert!(is_injective(&Module::free(&a, 1)));
    assert!(!proj_dim_at_most(&k, 5));
    assert_eq!(ext(&k, &k, 1).structure(), "F2");
}

#[test]
fn projectivity_and_dimension() {
    let a = z();
    let z2 = Module::abelian(&a, &[2]).unwrap();
    assert!(proj_dim_at_most(&z2, 1));
    assert!(!proj_dim_at_most(&z2, 0));
    assert!(!is_injective(&z2));
    assert_eq!(syzygy(&z2, 1), Module::free(&a, 1));
    let zc2 = Algebra::cyclic_group(BaseRing::Integers, 2);
    assert!(!is_projective(&Module::trivial(&zc2).unwrap()));
    assert!(is_projective(&Module::free(&zc2, 2)));
}

#[test]
fn splitting_examples() {
    let a = z();
    let zz = Module::free(&a, 1);
    let two = Ses::from_mono(Morphism::from_i64(&zz, &zz, &[&[2]]).unwrap()).unwrap();
    assert!(is_split(&two).is_none());
    let (e, c) = ses_class(&two);
    assert_eq!(e.structure(), "Z/2");
    assert_eq!(c, vec![BigInt::from(1)]);
    let z4 = Module::abelian(&a, &[4]).unwrap();
    let sum = direct_sum(&[z4.clone(), zz.clone()]).unwrap();
    let s = Ses::new(sum.injections[0].clone(), sum.projections[1].clone()).unwrap();
    let sec = is_split(&s).unwrap();
    assert_eq!(s.epi().compose(&sec), Morphism::identity(&zz));
    let (e, c) = ses_class(&s);
    assert!(e.is_zero_class(&c));
}

#[test]
fn extension_round_trip() {
    let a = z();
    let z2 = Module::abelian(&a, &[2]).unwrap();
    let e = ext(&z2, &z2, 1);
    let s = class_ses(&e, &[BigInt::from(1)]);
    assert_eq!(s.middle().structure(), "Z/4");
    assert!(is_split(&s).is_none());
    let (_, c) = ses_class(&s);
    assert_eq!(c, vec![BigInt::from(1)]);
    let s0 = class_ses(&e, &[BigInt::from(0)]);
    assert_eq!(s0.middle().structure(), "Z/2 ⊕ Z/2");
    assert!(is_split(&s0).is_some());
}
