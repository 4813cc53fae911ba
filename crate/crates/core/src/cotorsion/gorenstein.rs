use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::class::{Certificate, FamilySpec, Verdict};
use super::CotorsionError;
use crate::catalog::module_catalog;
use crate::homological::{ext_orders, hom_group, is_projective, proj_dim_at_most, projective_dimension, syzygy};
use crate::linalg::{BaseRing, Mat};
use crate::module_cat::{describe_orders, dual_op, Algebra, Module, ModuleError, Morphism};

pub const DEFAULT_FAMILY_SEED: u64 = 0xC07;
pub const DEFAULT_FAMILY_SIZE: usize = 32;
pub const FAMILY_RULE: &str = "cokernels of random monos between frees of rank <= 3, plus frees, plus PdAtMost(d) catalog members";

/// Modules of finite projective dimension used to test Gorenstein projectivity.
#[derive(Clone, Debug)]
pub struct WitnessFamily {
    pub spec: FamilySpec,
    pub modules: Vec<Module>,
}

impl WitnessFamily {
    pub fn default_for(alg: &Arc<Algebra>, d: usize) -> WitnessFamily {
        WitnessFamily::generate(alg, d, DEFAULT_FAMILY_SEED, DEFAULT_FAMILY_SIZE)
    }

    pub fn generate(alg: &Arc<Algebra>, d: usize, seed: u64, size: usize) -> WitnessFamily {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut modules: Vec<Module> = vec![Module::free(alg, 1), Module::free(alg, 2)];
        let ring = alg.base();
        let mut found = 0;
        let mut attempts = 0;
        while found < size && attempts < 50 * size.max(1) {
            attempts += 1;
            let a = rng.gen_range(1..=3usize);
            let b = rng.gen_range(a..=3usize);
            let (fa, fb) = (Module::free(alg, a), Module::free(alg, b));
            let h = hom_group(&fa, &fb);
            let coeffs: Vec<_> = h
                .basis()
                .iter()
                .map(|_| match ring {
                    BaseRing::PrimeField(p) => num_bigint::BigInt::from(rng.gen_range(0..p)),
                    BaseRing::Integers => num_bigint::BigInt::from(rng.gen_range(-3i64..=3)),
                })
                .collect();
            let f = h.element(&coeffs);
            if !f.is_mono() {
                continue;
            }
            found += 1;
            let c = f.cokernel().dst().clone();
            if !modules.contains(&c) {
                modules.push(c);
            }
        }
        if let Ok(cat) = module_catalog(alg, 2) {
            for m in cat.modules() {
                if proj_dim_at_most(&m, d) && !modules.contains(&m) {
                    modules.push(m);
                }
            }
        }
        let spec = FamilySpec { seed, size, rule: FAMILY_RULE.replace("(d)", &format!("({d})")) };
        WitnessFamily { spec, modules }
    }
}

/// `No` with a certificate when `Ext¹(M, W) ≠ 0` for a family member `W`,
/// `Yes` for projectives, otherwise relative `Yes`.
pub fn gp_test(m: &Module, _d: usize, family: &WitnessFamily) -> Verdict {
    if is_projective(m) {
        return Verdict::Yes;
    }
    for w in &family.modules {
        let e = ext_orders(m, w, 1);
        if !e.is_empty() {
            return Verdict::no(Certificate::ext_nonzero(w, describe_orders(&m.ring(), &e), 1, true));
        }
    }
    Verdict::YesRelativeToFamily { family: family.spec.clone() }
}

/// The `d`-th syzygy, Gorenstein projective when `d` is the ring's
/// self-injective dimension.
pub fn gp_example(n: &Module, d: usize) -> Module {
    syzygy(n, d)
}

/// Known self-injective dimensions of integral group rings (`Z[G]` is
/// Gorenstein of dimension 1, `Z` itself hereditary).
fn integral_table(alg: &Algebra) -> Option<usize> {
    (alg.base() == BaseRing::Integers && alg.is_group_algebra()).then_some(1)
}

/// Least `d ≤ d_max` with `id(A) ≤ d`; over a field via the projective
/// dimension of the dual `D(A)` over the opposite algebra.
pub fn ring_injective_dimension(alg: &Arc<Algebra>, d_max: usize) -> Result<Option<usize>, CotorsionError> {
    match alg.base() {
        BaseRing::PrimeField(_) => {
            let da = dual_op(&Module::free(alg, 1))?;
            Ok(projective_dimension(&da, d_max))
        }
        BaseRing::Integers => match integral_table(alg) {
            Some(d) => Ok((d <= d_max).then_some(d)),
            None => Err(CotorsionError::Module(ModuleError::Unsupported(format!(
                "no injective dimension known for {}",
                alg.name()
            )))),
        },
    }
}

/// `k ↦ Σ_g g ⊗ g⁻¹k`, embedding a base-free module over a group algebra
/// into the free module `A^{rank K}`.
pub fn coinduction_embedding(k: &Module) -> Result<Morphism, CotorsionError> {
    let alg = k.algebra();
    let group = alg
        .group()
        .ok_or_else(|| ModuleError::Unsupported("coinduction embedding needs a group algebra".into()))?;
    if !k.is_base_free() {
        return Err(ModuleError::Unsupported(format!("coinduction of {} (torsion)", k.structure())).into());
    }
    let n = alg.rank();
    let r = k.gens();
    let target = Module::free(alg, r);
    let mut m = Mat::zeros(n * r, r);
    for i in 0..r {
        for g in 0..n {
            let act = k.action(group.inverse[g]);
            for j in 0..r {
                m.set(i * n + g, j, act.get(i, j).clone());
            }
        }
    }
    Ok(Morphism::new(k, &target, m)?)
}
