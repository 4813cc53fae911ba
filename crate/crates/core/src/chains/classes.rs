use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::complex::{ChainComplex, ChainMap};
use super::hom::{chain_hom, null_homotopy};
use crate::cotorsion::{class_member, Certificate, ClassDescriptor, CotorsionPair, FamilySpec, Verdict};
use crate::homological::hom_group;
use crate::linalg::BaseRing;
use crate::module_cat::{Module, Morphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainVariant {
    /// Exact with every cycle module in the left class.
    TildeD,
    /// Exact with every cycle module in the right class.
    TildeE,
    /// Entries in the left class, maps into the `TildeE` family null-homotopic.
    DgTildeD,
    /// Entries in the right class, maps from the `TildeD` family null-homotopic.
    DgTildeE,
    Exact,
}

impl ChainVariant {
    pub fn label(self) -> &'static str {
        match self {
            ChainVariant::TildeD => "tilde-D",
            ChainVariant::TildeE => "tilde-E",
            ChainVariant::DgTildeD => "dg-tilde-D",
            ChainVariant::DgTildeE => "dg-tilde-E",
            ChainVariant::Exact => "exact",
        }
    }

    /// The tilde class a dg variant is tested against.
    pub fn opposite(self) -> Option<ChainVariant> {
        match self {
            ChainVariant::DgTildeD => Some(ChainVariant::TildeE),
            ChainVariant::DgTildeE => Some(ChainVariant::TildeD),
            _ => None,
        }
    }
}

pub const DEFAULT_CHAIN_FAMILY_SEED: u64 = 0xD15C;
pub const DEFAULT_CHAIN_FAMILY_SIZE: usize = 24;
const CHAIN_FAMILY_RULE: &str =
    "disks, spheres, free presentations and seeded four-term exact complexes, filtered by membership";

#[derive(Clone, Debug)]
pub struct ChainClassSpec {
    pub base_pair: CotorsionPair,
    pub variant: ChainVariant,
    pub witness_family: Vec<ChainComplex>,
    pub family: Option<FamilySpec>,
}

impl ChainClassSpec {
    pub fn new(base_pair: &CotorsionPair, variant: ChainVariant) -> Self {
        ChainClassSpec { base_pair: base_pair.clone(), variant, witness_family: vec![], family: None }
    }

    /// Dg variant with the default witness family built from `universe`.
    pub fn with_default_family(base_pair: &CotorsionPair, variant: ChainVariant, universe: &[Module]) -> Self {
        let mut spec = ChainClassSpec::new(base_pair, variant);
        if let Some(opp) = variant.opposite() {
            let (family, fspec) = witness_family(
                &ChainClassSpec::new(base_pair, opp),
                universe,
                DEFAULT_CHAIN_FAMILY_SEED,
                DEFAULT_CHAIN_FAMILY_SIZE,
            );
            spec.witness_family = family;
            spec.family = Some(fspec);
        }
        spec
    }

    pub fn name(&self) -> String {
        format!("{} over {}", self.variant.label(), self.base_pair.name)
    }

    fn base_class(&self) -> &ClassDescriptor {
        match self.variant {
            ChainVariant::TildeD | ChainVariant::DgTildeD | ChainVariant::Exact => &self.base_pair.left,
            ChainVariant::TildeE | ChainVariant::DgTildeE => &self.base_pair.right,
        }
    }
}

pub fn chain_member(spec: &ChainClassSpec, x: &ChainComplex) -> Verdict {
    match spec.variant {
        ChainVariant::Exact => exactness(x),
        ChainVariant::TildeD | ChainVariant::TildeE => tilde_member(spec, x),
        ChainVariant::DgTildeD | ChainVariant::DgTildeE => dg_member(spec, x),
    }
}

fn exactness(x: &ChainComplex) -> Verdict {
    for n in x.degrees() {
        let h = x.homology(n);
        if !h.is_zero() {
            return Verdict::no(Certificate::new(format!("not exact: H_{n} = {}", h.structure())));
        }
    }
    Verdict::Yes
}

/// Exact, and every cycle module lies in the base class.
pub fn tilde_member(spec: &ChainClassSpec, x: &ChainComplex) -> Verdict {
    let v = exactness(x);
    if v.is_no() {
        return v;
    }
    let class = spec.base_class();
    let mut out = Verdict::Yes;
    for n in x.degrees() {
        let z = x.cycles(n);
        let v = class_member(class, &z);
        if let Some(c) = v.certificate() {
            let mut c = c.clone();
            c.reason = format!("Z_{n} = {} not in {}: {}", z.structure(), class.name(), c.reason);
            return Verdict::no(c);
        }
        out = out.and(v);
    }
    out
}

pub fn is_contractible(x: &ChainComplex) -> bool {
    null_homotopy(&ChainMap::identity(x)).is_some()
}

/// Entries in the base class, then null-homotopy of every generator of the
/// chain Hom group against each witness.
pub fn dg_member(spec: &ChainClassSpec, x: &ChainComplex) -> Verdict {
    let class = spec.base_class();
    let mut entries = Verdict::Yes;
    for n in x.degrees() {
        let v = class_member(class, &x.entry(n));
        if let Some(c) = v.certificate() {
            let mut c = c.clone();
            c.reason = format!("X_{n} = {} not in {}: {}", x.entry(n).structure(), class.name(), c.reason);
            return Verdict::no(c);
        }
        entries = entries.and(v);
    }
    if is_contractible(x) {
        return entries;
    }
    let outgoing = spec.variant == ChainVariant::DgTildeD;
    for w in &spec.witness_family {
        let hom = if outgoing { chain_hom(x, w) } else { chain_hom(w, x) };
        for g in hom.basis() {
            if null_homotopy(&g).is_none() {
                let dir = if outgoing { "X → W" } else { "W → X" };
                let mut c = Certificate::new(format!("chain map {dir} is not null-homotopic"));
                c.witness = Some(w.describe());
                return Verdict::no(c);
            }
        }
    }
    match &spec.family {
        Some(f) => entries.and(Verdict::YesRelativeToFamily { family: f.clone() }),
        None => entries.and(Verdict::YesRelativeToFamily {
            family: FamilySpec { seed: 0, size: spec.witness_family.len(), rule: "explicit".into() },
        }),
    }
}

/// Short exact sequence `0 → A → B → C → 0` as a complex with `C` in degree `lo`.
pub fn ses_complex(i: &Morphism, p: &Morphism, lo: i64) -> ChainComplex {
    let alg = i.src().algebra();
    ChainComplex::from_parts(alg, lo, vec![p.dst().clone(), p.src().clone(), i.src().clone()], vec![p.clone(), i.clone()])
}

/// `0 → ker f → A → B → cok f → 0` with `cok f` in degree `lo`.
pub fn four_term(f: &Morphism, lo: i64) -> ChainComplex {
    let k = f.kernel();
    let c = f.cokernel();
    ChainComplex::from_parts(
        f.src().algebra(),
        lo,
        vec![c.dst().clone(), f.dst().clone(), f.src().clone(), k.src().clone()],
        vec![c, f.clone(), k],
    )
}

fn random_morphism(a: &Module, b: &Module, rng: &mut ChaCha8Rng) -> Morphism {
    let h = hom_group(a, b);
    let ring = a.ring();
    let coeffs: Vec<_> = h
        .basis()
        .iter()
        .map(|_| match ring {
            BaseRing::PrimeField(p) => num_bigint::BigInt::from(rng.gen_range(0..p)),
            BaseRing::Integers => num_bigint::BigInt::from(rng.gen_range(-2i64..=2)),
        })
        .collect();
    h.element(&coeffs)
}

/// Members of the tilde class `spec` drawn from `universe`: disks, spheres,
/// free presentations and seeded four-term exact complexes, each verified.
pub fn witness_family(
    spec: &ChainClassSpec,
    universe: &[Module],
    seed: u64,
    size: usize,
) -> (Vec<ChainComplex>, FamilySpec) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<ChainComplex> = Vec::new();
    for m in universe.iter().filter(|m| !m.is_zero()) {
        let pres = m.free_presentation();
        for lo in [-1, 0, 1] {
            candidates.push(ses_complex(pres.mono(), pres.epi(), lo));
        }
    }
    let nonzero: Vec<&Module> = universe.iter().filter(|m| !m.is_zero()).collect();
    if !nonzero.is_empty() {
        for _ in 0..size {
            let a = nonzero[rng.gen_range(0..nonzero.len())];
            let b = nonzero[rng.gen_range(0..nonzero.len())];
            let f = random_morphism(a, b, &mut rng);
            candidates.push(four_term(&f, rng.gen_range(-1..=0)));
        }
    }
    for m in &nonzero {
        candidates.push(ChainComplex::disk(1, m));
        candidates.push(ChainComplex::sphere(0, m));
    }
    let mut family: Vec<ChainComplex> = Vec::new();
    for c in candidates {
        if family.len() >= size {
            break;
        }
        if !family.contains(&c) && tilde_member(spec, &c).holds() {
            family.push(c);
        }
    }
    let fspec = FamilySpec { seed, size, rule: format!("{} ({})", CHAIN_FAMILY_RULE, spec.name()) };
    (family, fspec)
}
