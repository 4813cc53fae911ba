//! Finitely generated modules over finite-rank algebras, with the exact
//! category structure: kernels, cokernels, sums, pullbacks and pushouts,
//! short exact sequences, tensor products and duals.

mod algebra;
mod module;
mod morphism;
mod ses;
mod tensor;
mod dual;
mod purity;

pub use algebra::{Algebra, GroupTable};
pub use module::{describe_orders, Module, Presented};
pub use morphism::{
    copair, descend_through_epi, direct_sum, lift_through_mono, pair, pullback, pushout, DirectSum, Morphism,
    Pullback, Pushout,
};
pub use ses::Ses;
pub use tensor::{tensor_diagonal, tensor_unit, TensorProduct};
pub use dual::{contragredient, dual_map, dual_op};
pub use purity::{is_pure, purity_test_elements, purity_witness, PurityWitness, DEFAULT_PURITY_BOUND};

pub(crate) use module::{unit_vector, PresentationCache};

use num_bigint::BigInt;
use thiserror::Error;

use crate::linalg::{LinalgError, Mat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("unit axiom fails on basis element {basis}")]
    UnitViolation { basis: usize },
    #[error("multiplication is not associative on basis ({a}, {b}, {c})")]
    Associativity { a: usize, b: usize, c: usize },
    #[error("generator orders are not canonical: {0}")]
    NonCanonical(String),
    #[error("action of basis element {basis} does not respect the relations")]
    ActionNotWellDefined { basis: usize },
    #[error("action fails e_{a}·(e_{b}·m) = (e_{a}e_{b})·m")]
    ActionAxiom { a: usize, b: usize },
    #[error("the unit does not act as the identity")]
    UnitAction,
    #[error("subgroup is not stable under basis element {basis}")]
    NotSubmodule { basis: usize },
    #[error("not a module homomorphism: {0}")]
    NotAMorphism(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("not a short exact sequence: {0}")]
    NotExact(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Canonical presentation `0 → K → A^g → M → 0` where generator `j` of the
/// free module maps to generator `j` of `M`.
pub(crate) fn build_free_presentation(m: &Module) -> PresentationCache {
    let all: Vec<usize> = (0..m.gens()).collect();
    presentation_on(m, &all)
}

/// Presentation on the generators that survive a greedy pass: generator `j`
/// is kept unless the submodule spanned by the earlier kept ones contains it.
pub(crate) fn build_reduced_presentation(m: &Module) -> PresentationCache {
    let ring = m.ring();
    let g = m.gens();
    let mut kept = Vec::new();
    let mut span = Mat::zeros(g, 0);
    for j in 0..g {
        let quo = crate::linalg::cokernel(&ring, m.orders(), &span);
        if quo.orders.is_empty() {
            break;
        }
        let mut image = quo.q.select_cols(&[j]);
        crate::linalg::reduce_rows(&ring, &quo.orders, &mut image);
        if image.is_zero() {
            continue;
        }
        kept.push(j);
        span = span.hstack(&orbit_columns(m, &[j]));
    }
    presentation_on(m, &kept)
}

/// Columns `e_k · m_j` for `j` in `gens`, ordered by `(j, k)`.
fn orbit_columns(m: &Module, gens: &[usize]) -> Mat {
    let n = m.algebra().rank();
    let g = m.gens();
    let mut out = Mat::zeros(g, gens.len() * n);
    for (c, &j) in gens.iter().enumerate() {
        for k in 0..n {
            for i in 0..g {
                out.set(i, c * n + k, m.action(k).get(i, j).clone());
            }
        }
    }
    out
}

fn presentation_on(m: &Module, gens: &[usize]) -> PresentationCache {
    let ring = m.ring();
    let free = Module::free(m.algebra(), gens.len());
    let mut proj = orbit_columns(m, gens);
    crate::linalg::reduce_rows(&ring, m.orders(), &mut proj);
    let p = Morphism::new_unchecked(&free, m, proj.clone());
    let k = p.kernel();
    PresentationCache { free, kernel: k.src().clone(), incl: k.matrix().clone(), proj }
}

impl Module {
    /// `0 → K → F → M → 0` with `F` free; cached per module.
    pub fn free_presentation(&self) -> Ses {
        let c = self.presentation_cache();
        let i = Morphism::new_unchecked(&c.kernel, &c.free, c.incl.clone());
        let p = Morphism::new_unchecked(&c.free, self, c.proj.clone());
        Ses::new_unchecked(i, p)
    }

    /// Like [`Module::free_presentation`] but on a generating subset chosen
    /// greedily, so the free term is usually much smaller.
    pub fn reduced_presentation(&self) -> Ses {
        let c = self.reduced_presentation_cache();
        let i = Morphism::new_unchecked(&c.kernel, &c.free, c.incl.clone());
        let p = Morphism::new_unchecked(&c.free, self, c.proj.clone());
        Ses::new_unchecked(i, p)
    }
}

#[allow(dead_code)]
pub(crate) fn bigints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
