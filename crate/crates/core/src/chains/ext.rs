use num_bigint::BigInt;
use serde::Serialize;

use super::complex::{ChainComplex, ChainMap};
use super::hom::{chain_hom, homotopy_classes};
use crate::homological::ext_orders;
use crate::linalg::{cokernel, BaseRing, Mat};
use crate::module_cat::{direct_sum, describe_orders, Morphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainExtRoute {
    /// Degreewise split: homotopy classes `Y → ΣX`.
    HomotopyClasses,
    /// Presentation `0 → K → P → Y → 0` by disks on free modules.
    DiskPresentation,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainExt {
    pub orders: Vec<BigInt>,
    pub structure: String,
    pub route: ChainExtRoute,
}

impl ChainExt {
    pub fn is_zero(&self) -> bool {
        self.orders.is_empty()
    }

    fn new(ring: &BaseRing, orders: Vec<BigInt>, route: ChainExtRoute) -> ChainExt {
        ChainExt { structure: describe_orders(ring, &orders), orders, route }
    }
}

/// `Ext¹(Y_n, X_n) = 0` in every degree.
pub fn degreewise_split(y: &ChainComplex, x: &ChainComplex) -> bool {
    y.degrees().all(|n| !x.in_window(n) || ext_orders(&y.entry(n), &x.entry(n), 1).is_empty())
}

/// `Ext¹(Y, X)` in the category of complexes.
pub fn chain_ext1(y: &ChainComplex, x: &ChainComplex) -> ChainExt {
    if degreewise_split(y, x) {
        chain_ext1_homotopy(y, x)
    } else {
        chain_ext1_presentation(y, x)
    }
}

/// `[Y, ΣX]`; equals `Ext¹(Y, X)` when every degreewise extension splits.
pub fn chain_ext1_homotopy(y: &ChainComplex, x: &ChainComplex) -> ChainExt {
    let h = homotopy_classes(y, &x.suspension());
    ChainExt::new(&y.algebra().base(), h.orders().to_vec(), ChainExtRoute::HomotopyClasses)
}

/// `P = ⊕ Dⁿ(F_n) → Y` from the free covers `F_n → Y_n`.
pub fn disk_cover(y: &ChainComplex) -> ChainMap {
    let alg = y.algebra();
    if y.is_empty() {
        return ChainMap::zero(y, y);
    }
    let covers: Vec<Morphism> = y.degrees().map(|n| y.entry(n).free_presentation().epi().clone()).collect();
    let free = |n: i64| {
        if y.in_window(n) {
            covers[(n - y.lo()) as usize].src().clone()
        } else {
            crate::module_cat::Module::zero(alg)
        }
    };
    let lo = y.lo() - 1;
    let hi = y.hi();
    // P_m = F_m ⊕ F_{m+1}, d(a, b) = (0, a)
    let sums: Vec<_> = (lo..=hi).map(|m| direct_sum(&[free(m), free(m + 1)]).expect("same algebra")).collect();
    let entries = sums.iter().map(|s| s.module.clone()).collect();
    let diffs = ((lo + 1)..=hi)
        .map(|m| {
            let (s, t) = (&sums[(m - lo) as usize], &sums[(m - 1 - lo) as usize]);
            t.injections[1].compose(&s.projections[0])
        })
        .collect();
    let p = ChainComplex::from_parts(alg, lo, entries, diffs);
    let cover = |n: i64| {
        if y.in_window(n) {
            covers[(n - y.lo()) as usize].clone()
        } else {
            Morphism::zero(&free(n), &y.entry(n))
        }
    };
    let maps = (lo..=hi)
        .map(|m| {
            let s = &sums[(m - lo) as usize];
            cover(m).compose(&s.projections[0]).add(&y.d(m + 1).compose(&cover(m + 1)).compose(&s.projections[1]))
        })
        .collect();
    ChainMap::from_parts(&p, y, maps)
}

/// `coker(Hom(P, X) → Hom(K, X))` for `0 → K → P → Y → 0`, `P` projective.
pub fn chain_ext1_presentation(y: &ChainComplex, x: &ChainComplex) -> ChainExt {
    let ring = y.algebra().base();
    let cover = disk_cover(y);
    let k = cover.kernel();
    let hp = chain_hom(cover.src(), x);
    let hk = chain_hom(k.src(), x);
    let cols: Vec<_> = hp.basis().iter().map(|f| hk.coordinates(&f.compose(&k))).collect();
    let gens = Mat::from_columns(hk.orders().len(), &cols);
    let q = cokernel(&ring, hk.orders(), &gens);
    ChainExt::new(&ring, q.orders, ChainExtRoute::DiskPresentation)
}
