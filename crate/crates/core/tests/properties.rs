use std::sync::Arc;

use abmc_core::catalog::{module_catalog, Sampler};
use abmc_core::homological::{class_ses, ext, hom_group, is_projective, is_split, ses_class};
use abmc_core::linalg::{kernel_basis, smith_normal_form, solve_linear, BaseRing, Mat};
use abmc_core::module_cat::{Algebra, Morphism, Ses};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn int_matrix() -> impl Strategy<Value = Mat> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(-9i64..10, r * c)
            .prop_map(move |v| Mat::from_vec(r, c, v.into_iter().map(BigInt::from).collect()))
    })
}

fn field_matrix() -> impl Strategy<Value = (u32, Mat)> {
    (prop::sample::select(vec![2u32, 3, 5]), int_matrix()).prop_map(|(p, mut m)| {
        m.reduce(&BaseRing::PrimeField(p));
        (p, m)
    })
}

fn is_identity(m: &Mat) -> bool {
    *m == Mat::identity(m.rows())
}

fn sampler(alg: &Arc<Algebra>, bound: usize, seed: u64) -> Sampler {
    Sampler::new(module_catalog(alg, bound).unwrap(), seed)
}

fn f2c2() -> Arc<Algebra> {
    Algebra::cyclic_group(BaseRing::PrimeField(2), 2)
}

fn zc2() -> Arc<Algebra> {
    Algebra::cyclic_group(BaseRing::Integers, 2)
}

fn z() -> Arc<Algebra> {
    Algebra::base_ring(BaseRing::Integers)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn snf_over_integers(a in int_matrix()) {
        let ring = BaseRing::Integers;
        let s = smith_normal_form(&ring, &a);
        prop_assert_eq!(s.u.mul(&a, &ring).mul(&s.v, &ring), s.d());
        prop_assert!(is_identity(&s.u.mul(&s.u_inv, &ring)));
        for (i, d) in s.diag.iter().enumerate() {
            prop_assert!(!d.is_negative());
            prop_assert_eq!(i < s.rank, !d.is_zero());
            if i + 1 < s.rank {
                prop_assert!(s.diag[i + 1].is_multiple_of(d));
            }
        }
    }

    #[test]
    fn snf_over_prime_fields((p, a) in field_matrix()) {
        let ring = BaseRing::PrimeField(p);
        let s = smith_normal_form(&ring, &a);
        prop_assert_eq!(s.u.mul(&a, &ring).mul(&s.v, &ring), s.d());
        prop_assert!(s.diag.iter().all(|d| d.is_zero() || d.is_one()));
    }

    #[test]
    fn snf_is_deterministic(a in int_matrix()) {
        let ring = BaseRing::Integers;
        let (s, t) = (smith_normal_form(&ring, &a), smith_normal_form(&ring, &a));
        prop_assert_eq!(s.u, t.u);
        prop_assert_eq!(s.v, t.v);
    }

    #[test]
    fn solve_recovers_consistent_systems(a in int_matrix(), x in prop::collection::vec(-5i64..6, 4)) {
        let ring = BaseRing::Integers;
        let x0: Vec<BigInt> = x.into_iter().take(a.cols()).map(BigInt::from).collect();
        let x0: Vec<BigInt> = x0.into_iter().chain(std::iter::repeat(BigInt::zero())).take(a.cols()).collect();
        let b = a.mul_vec(&x0, &ring);
        let sol = solve_linear(&ring, &a, &b).unwrap().expect("consistent system");
        prop_assert_eq!(a.mul_vec(&sol, &ring), b);
        let k = kernel_basis(&ring, &a);
        prop_assert!(a.mul(&k, &ring).is_zero());
    }

    #[test]
    fn solve_rejects_non_multiples(k in 2i64..9, r in 1i64..9) {
        prop_assume!(r % k != 0);
        let ring = BaseRing::Integers;
        let a = Mat::from_i64(&[&[k]], 1);
        prop_assert!(solve_linear(&ring, &a, &[BigInt::from(r)]).unwrap().is_none());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn composition_is_associative_and_additive(seed in any::<u64>()) {
        let mut s = sampler(&f2c2(), 3, seed);
        let (a, b, c, d) = (s.module(), s.module(), s.module(), s.module());
        let f = s.morphism(&a, &b);
        let f2 = s.morphism(&a, &b);
        let g = s.morphism(&b, &c);
        let h = s.morphism(&c, &d);
        prop_assert_eq!(h.compose(&g).compose(&f), h.compose(&g.compose(&f)));
        prop_assert_eq!(g.compose(&f.add(&f2)), g.compose(&f).add(&g.compose(&f2)));
        prop_assert_eq!(Morphism::identity(&b).compose(&f), f);
    }

    #[test]
    fn hom_basis_elements_are_module_maps(seed in any::<u64>()) {
        let mut s = sampler(&zc2(), 2, seed);
        let (m, n) = (s.module(), s.module());
        let h = hom_group(&m, &n);
        for phi in h.basis() {
            prop_assert!(Morphism::new(&m, &n, phi.matrix().clone()).is_ok());
        }
    }

    #[test]
    fn reduced_presentation_is_exact(seed in any::<u64>()) {
        for alg in [f2c2(), zc2(), z()] {
            let mut s = sampler(&alg, 2, seed);
            let m0 = s.module();
            let m = s.scramble(&m0);
            let r = m.reduced_presentation();
            prop_assert!(Ses::new(r.mono().clone(), r.epi().clone()).is_ok());
            prop_assert!(r.middle().gens() <= m.free_presentation().middle().gens());
        }
    }

    #[test]
    fn projectivity_agrees_with_splitting(seed in any::<u64>()) {
        for alg in [f2c2(), zc2(), z()] {
            let mut s = sampler(&alg, 2, seed);
            let m = s.module();
            prop_assert_eq!(is_projective(&m), is_split(&m.free_presentation()).is_some(), "{}", m.structure());
        }
    }

    #[test]
    fn extension_classes_round_trip(seed in any::<u64>()) {
        for alg in [f2c2(), z()] {
            let mut s = sampler(&alg, 3, seed);
            let sequence = s.ses();
            let (e, c) = ses_class(&sequence);
            prop_assert_eq!(is_split(&sequence).is_some(), e.is_zero_class(&c));
            let rebuilt = class_ses(&e, &c);
            let (_, c2) = ses_class(&rebuilt);
            prop_assert_eq!(c, c2);
        }
    }

    #[test]
    fn ext_is_additive_in_first_argument(seed in any::<u64>()) {
        let mut s = sampler(&z(), 3, seed);
        let (a, b, n) = (s.module(), s.module(), s.module());
        let sum = abmc_core::module_cat::direct_sum(&[a.clone(), b.clone()]).unwrap().module;
        let mut lhs: Vec<BigInt> = ext(&sum, &n, 1).invariant_factors().to_vec();
        let mut rhs: Vec<BigInt> =
            ext(&a, &n, 1).invariant_factors().iter().chain(ext(&b, &n, 1).invariant_factors()).cloned().collect();
        lhs.sort();
        rhs.sort();
        prop_assert_eq!(primary(&lhs), primary(&rhs));
    }
}

/// Elementary divisors, so decompositions with different invariant factors compare equal.
fn primary(orders: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::new();
    for o in orders {
        let mut n = o.clone();
        if n.is_zero() {
            out.push(n);
            continue;
        }
        let mut p = BigInt::from(2);
        while n > BigInt::one() {
            let mut q = BigInt::one();
            while n.is_multiple_of(&p) {
                n /= &p;
                q *= &p;
            }
            if !q.is_one() {
                out.push(q);
            }
            p += 1;
        }
    }
    out.sort();
    out
}
