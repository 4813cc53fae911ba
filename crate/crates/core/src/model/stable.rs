use num_bigint::BigInt;
use serde::Serialize;

use super::{ModelError, ModelKind, ModelStructure};
use crate::homological::{hom_group, HomGroup};
use crate::linalg::{cokernel, subgroup, Mat};
use crate::module_cat::{describe_orders, Module};

/// `Hom(M, N)` modulo maps factoring through a projective.
#[derive(Clone, Debug, Serialize)]
pub struct StableHom {
    pub hom: String,
    pub factoring: String,
    pub orders: Vec<BigInt>,
    pub structure: String,
}

impl StableHom {
    pub fn is_zero(&self) -> bool {
        self.orders.is_empty()
    }
}

/// Coordinates (as columns) of `π ∘ φ` for `φ` in a basis of `Hom(M, F)`,
/// `π: F → N` the free cover.
fn factoring_generators(hom: &HomGroup, m: &Module, n: &Module) -> Mat {
    let pres = n.free_presentation();
    let cover = pres.epi();
    let hf = hom_group(m, cover.src());
    let cols: Vec<_> = hf.basis().iter().map(|b| hom.coordinates(&cover.compose(b))).collect();
    Mat::from_columns(hom.orders().len(), &cols)
}

pub fn stable_hom(ms: &ModelStructure, m: &Module, n: &Module) -> Result<StableHom, ModelError> {
    if ms.kind == ModelKind::Custom {
        return Err(ModelError::Unsupported(format!(
            "stable homs need C ∩ W = Projectives; {} is not a shipped preset",
            ms.name
        )));
    }
    let hom = hom_group(m, n);
    let ring = m.ring();
    let gens = factoring_generators(&hom, m, n);
    let (sub_orders, _) = subgroup(&ring, hom.orders(), &gens);
    let quo = cokernel(&ring, hom.orders(), &gens);
    Ok(StableHom {
        hom: hom.structure(),
        factoring: describe_orders(&ring, &sub_orders),
        structure: describe_orders(&ring, &quo.orders),
        orders: quo.orders,
    })
}

/// Every composite `M → P → N` through the projective `p` already lies in
/// the subgroup of maps factoring through the free cover of `N`.
pub fn free_cover_lemma(m: &Module, n: &Module, p: &Module) -> bool {
    let hom = hom_group(m, n);
    let ring = m.ring();
    let gens = factoring_generators(&hom, m, n);
    let quo = cokernel(&ring, hom.orders(), &gens);
    let into = hom_group(m, p);
    let out = hom_group(p, n);
    for a in into.basis() {
        for b in out.basis() {
            let c = hom.coordinates(&b.compose(a));
            let mut image = quo.q.mul_vec(&c, &ring);
            crate::linalg::reduce_vec(&ring, &quo.orders, &mut image);
            if image.iter().any(|x| !ring.is_zero(x)) {
                return false;
            }
        }
    }
    true
}
