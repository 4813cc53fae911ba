use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::class::{class_member, ClassDescriptor};
use super::orth::{check_orthogonality, OrthReport};
use super::pair::CotorsionPair;
use crate::homological::hom_group;
use crate::linalg::BaseRing;
use crate::module_cat::{direct_sum, Module, Morphism, Ses};

/// Test data for thickness: a short exact sequence (two-out-of-three) or a
/// retract `r ∘ i = id`.
#[derive(Clone, Debug)]
pub enum ThickSample {
    Ses(Ses),
    Retract { object: Module, retract: Module, inclusion: Morphism, retraction: Morphism },
}

pub fn describe_ses(s: &Ses) -> String {
    format!("0 → {} → {} → {} → 0", s.left().structure(), s.middle().structure(), s.right().structure())
}

impl ThickSample {
    pub fn describe(&self) -> String {
        match self {
            ThickSample::Ses(s) => describe_ses(s),
            ThickSample::Retract { object, retract, .. } => {
                format!("{} retract of {}", retract.structure(), object.structure())
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ThickItem {
    pub index: usize,
    pub sample: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ThickReport {
    pub class: String,
    pub contains_zero: bool,
    pub items: Vec<ThickItem>,
    pub pass: bool,
}

impl ThickReport {
    pub fn first_failure(&self) -> Option<&ThickItem> {
        self.items.iter().find(|i| !i.pass)
    }
}

pub fn is_thick(w: &ClassDescriptor, samples: &[ThickSample]) -> ThickReport {
    let contains_zero = class_member(w, &crate::module_cat::Module::zero(&w.algebra)).holds();
    let mut items = Vec::with_capacity(samples.len());
    for (index, s) in samples.iter().enumerate() {
        let certificate = match s {
            ThickSample::Ses(ses) => {
                let terms = [("left", ses.left()), ("middle", ses.middle()), ("right", ses.right())];
                let verdicts: Vec<_> = terms.iter().map(|(_, m)| class_member(w, m)).collect();
                let inside = verdicts.iter().filter(|v| v.holds()).count();
                if inside == 2 {
                    let (k, v) = verdicts.iter().enumerate().find(|(_, v)| !v.holds()).unwrap();
                    Some(format!(
                        "{}: two terms in {} but the {} term is not ({})",
                        describe_ses(ses),
                        w.name(),
                        terms[k].0,
                        v.certificate().map(|c| c.to_string()).unwrap_or_default()
                    ))
                } else {
                    None
                }
            }
            ThickSample::Retract { object, retract, inclusion, retraction } => {
                debug_assert_eq!(retraction.compose(inclusion), Morphism::identity(retract));
                let v = class_member(w, retract);
                if class_member(w, object).holds() && !v.holds() {
                    Some(format!("{} ({})", s.describe(), v.certificate().map(|c| c.to_string()).unwrap_or_default()))
                } else {
                    None
                }
            }
        };
        items.push(ThickItem { index, sample: s.describe(), pass: certificate.is_none(), certificate });
    }
    let pass = contains_zero && items.iter().all(|i| i.pass);
    ThickReport { class: w.name(), contains_zero, items, pass }
}

/// Free presentations of every universe member, then split sequences and
/// retracts of pairwise sums (at most `max_pairs`).
pub fn thickness_samples(universe: &[Module], max_pairs: usize) -> Vec<ThickSample> {
    let mut out: Vec<ThickSample> = universe.iter().map(|m| ThickSample::Ses(m.free_presentation())).collect();
    let mut pairs = 0;
    'outer: for (i, x) in universe.iter().enumerate() {
        for y in &universe[i..] {
            if pairs >= max_pairs {
                break 'outer;
            }
            pairs += 1;
            let sum = direct_sum(&[x.clone(), y.clone()]).expect("same algebra");
            out.push(ThickSample::Ses(Ses::new_unchecked(sum.injections[0].clone(), sum.projections[1].clone())));
            out.push(ThickSample::Retract {
                object: sum.module.clone(),
                retract: x.clone(),
                inclusion: sum.injections[0].clone(),
                retraction: sum.projections[0].clone(),
            });
        }
    }
    out
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClosureItem {
    pub map: String,
    pub result: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HereditaryReport {
    pub pair: String,
    pub ext_vanishing: OrthReport,
    /// Kernels of epimorphisms between left-class members.
    pub kernel_closure: Vec<ClosureItem>,
    /// Cokernels of monomorphisms between right-class members.
    pub cokernel_closure: Vec<ClosureItem>,
    pub pass_ext: bool,
    pub pass_kernels: bool,
    pub pass_cokernels: bool,
    pub pass: bool,
}

impl HereditaryReport {
    pub fn first_failure(&self) -> Option<&ClosureItem> {
        self.kernel_closure.iter().chain(&self.cokernel_closure).find(|c| !c.pass)
    }
}

/// Candidate maps `a → b`: the Hom basis plus a few seeded combinations.
fn sample_maps(a: &Module, b: &Module, rng: &mut ChaCha8Rng) -> Vec<Morphism> {
    let h = hom_group(a, b);
    let mut out: Vec<Morphism> = h.basis().iter().take(6).cloned().collect();
    let ring = a.ring();
    for _ in 0..2 {
        let c: Vec<_> = h
            .basis()
            .iter()
            .map(|_| match ring {
                BaseRing::PrimeField(p) => num_bigint::BigInt::from(rng.gen_range(0..p)),
                BaseRing::Integers => num_bigint::BigInt::from(rng.gen_range(-2i64..=2)),
            })
            .collect();
        out.push(h.element(&c));
    }
    out
}

pub fn is_hereditary(
    pair: &CotorsionPair,
    left_family: &[Module],
    right_family: &[Module],
    i_max: usize,
    seed: u64,
) -> HereditaryReport {
    let lefts: Vec<Module> = left_family.iter().filter(|m| class_member(&pair.left, m).holds()).cloned().collect();
    let rights: Vec<Module> = right_family.iter().filter(|m| class_member(&pair.right, m).holds()).cloned().collect();
    let ext_vanishing = check_orthogonality(&lefts, &rights, i_max);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kernel_closure = Vec::new();
    for a in &lefts {
        for b in &lefts {
            for f in sample_maps(a, b, &mut rng) {
                if !f.is_epi() {
                    continue;
                }
                let k = f.kernel().src().clone();
                let v = class_member(&pair.left, &k);
                kernel_closure.push(ClosureItem {
                    map: format!("{} → {}", a.structure(), b.structure()),
                    result: k.structure(),
                    pass: v.holds(),
                    certificate: v.certificate().map(|c| format!("kernel {} not in {}: {c}", k.structure(), pair.left.name())),
                });
            }
        }
    }
    let mut cokernel_closure = Vec::new();
    for a in &rights {
        for b in &rights {
            for f in sample_maps(a, b, &mut rng) {
                if !f.is_mono() {
                    continue;
                }
                let c = f.cokernel().dst().clone();
                let v = class_member(&pair.right, &c);
                cokernel_closure.push(ClosureItem {
                    map: format!("{} → {}", a.structure(), b.structure()),
                    result: c.structure(),
                    pass: v.holds(),
                    certificate: v
                        .certificate()
                        .map(|cert| format!("cokernel {} not in {}: {cert}", c.structure(), pair.right.name())),
                });
            }
        }
    }
    let pass_ext = ext_vanishing.pass;
    let pass_kernels = kernel_closure.iter().all(|c| c.pass);
    let pass_cokernels = cokernel_closure.iter().all(|c| c.pass);
    HereditaryReport {
        pair: pair.name.clone(),
        ext_vanishing,
        kernel_closure,
        cokernel_closure,
        pass_ext,
        pass_kernels,
        pass_cokernels,
        pass: pass_ext && pass_kernels && pass_cokernels,
    }
}
