use num_bigint::BigInt;

use super::{Module, Ses};
use crate::linalg::{self, Mat};

pub const DEFAULT_PURITY_BOUND: u32 = 64;

/// A cyclic right test module `A/xA` that detects impurity: the induced map
/// `L/xL → M/xM` has a nonzero kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurityWitness {
    pub test_module: String,
    pub element: Vec<BigInt>,
    pub kernel_structure: String,
}

/// Test elements `x`: `n·1` for `2 ≤ n ≤ bound` (the test modules `R/n`),
/// then `b`, `b − 1`, `b + 1` for each non-unit basis element `b`.
pub fn purity_test_elements(m: &Module, bound: u32) -> Vec<(String, Vec<BigInt>)> {
    let alg = m.algebra();
    let ring = alg.base();
    let mut out = Vec::new();
    let top = match ring.modulus() {
        Some(_) => 0,
        None => bound,
    };
    for n in 2..=top {
        let x: Vec<BigInt> = alg.unit().iter().map(|c| c * n).collect();
        let name = if alg.rank() == 1 { format!("{ring}/{n}") } else { format!("{}/({n})", alg.name()) };
        out.push((name, x));
    }
    let unit_idx = alg.unit_index();
    for b in 0..alg.rank() {
        if Some(b) == unit_idx {
            continue;
        }
        let lab = &alg.labels()[b];
        let e = alg.basis(b);
        out.push((format!("{}/({lab})", alg.name()), e.clone()));
        for (sign, s) in [(-1i64, "-"), (1, "+")] {
            let x: Vec<BigInt> = e.iter().zip(alg.unit()).map(|(a, u)| ring.reduce(&(a + u * sign))).collect();
            out.push((format!("{}/({lab}{s}1)", alg.name()), x));
        }
    }
    out
}

/// Tensor-exactness test of `0 → L → M → N → 0` against the cyclic test
/// modules of [`purity_test_elements`]. `None` means pure.
pub fn purity_witness(s: &Ses, bound: u32) -> Option<PurityWitness> {
    let ring = s.middle().ring();
    let (l, m) = (s.left(), s.middle());
    for (name, x) in purity_test_elements(m, bound) {
        let xl = l.element_action(&x);
        let xm = m.element_action(&x);
        let ql = linalg::cokernel(&ring, l.orders(), &xl);
        let qm = linalg::cokernel(&ring, m.orders(), &xm);
        let induced: Mat = qm.q.mul(s.mono().matrix(), &ring).mul(&ql.section, &ring);
        let (ker, _) = linalg::kernel(&ring, &ql.orders, &qm.orders, &induced);
        if !ker.is_empty() {
            return Some(PurityWitness {
                test_module: name,
                element: x,
                kernel_structure: super::describe_orders(&ring, &ker),
            });
        }
    }
    None
}

pub fn is_pure(s: &Ses, bound: u32) -> bool {
    purity_witness(s, bound).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::BaseRing;
    use crate::module_cat::{direct_sum, Algebra, Morphism};

    #[test]
    fn doubling_is_impure() {
        let z = Algebra::base_ring(BaseRing::Integers);
        let zz = Module::free(&z, 1);
        let s = Ses::from_mono(Morphism::from_i64(&zz, &zz, &[&[2]]).unwrap()).unwrap();
        let w = purity_witness(&s, DEFAULT_PURITY_BOUND).unwrap();
        assert_eq!(w.test_module, "Z/2");
    }

    #[test]
    fn split_is_pure() {
        let z = Algebra::base_ring(BaseRing::Integers);
        let a = Module::abelian(&z, &[4]).unwrap();
        let b = Module::abelian(&z, &[2, 0]).unwrap();
        let sum = direct_sum(&[a, b]).unwrap();
        let s = Ses::new(sum.injections[0].clone(), sum.projections[1].clone()).unwrap();
        assert!(is_pure(&s, DEFAULT_PURITY_BOUND));
    }

    #[test]
    fn nonsplit_over_group_algebra_is_impure() {
        let a = Algebra::cyclic_group(BaseRing::PrimeField(2), 2);
        let k = Module::trivial(&a).unwrap();
        let f = Module::free(&a, 1);
        let s = Ses::from_mono(Morphism::from_i64(&k, &f, &[&[1], &[1]]).unwrap()).unwrap();
        assert!(!is_pure(&s, DEFAULT_PURITY_BOUND));
    }
}
