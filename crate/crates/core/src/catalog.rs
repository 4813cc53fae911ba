//! Deterministic module catalogs and seeded random modules, morphisms and
//! short exact sequences for property sweeps.
//!
//! Catalogs are direct sums of indecomposables drawn from a fixed list per
//! algebra, ordered by size and then lexicographically by summand index.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::homological::{class_ses, ext, hom_group};
use crate::linalg::{BaseRing, Mat, Vector};
use crate::module_cat::{direct_sum, Algebra, Module, ModuleError, Morphism, Ses};

pub const MAX_DIM_ENV: &str = "ABMC_MAX_DIM";
pub const DEFAULT_MAX_BOUND: usize = 8;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub module: Module,
    /// Indices into the indecomposable list, nondecreasing.
    pub summands: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CatalogSpec {
    pub algebra: String,
    pub bound: usize,
    pub rule: String,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub spec: CatalogSpec,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn modules(&self) -> Vec<Module> {
        self.entries.iter().map(|e| e.module.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// An indecomposable building block with its size (dimension over a field,
/// number of base generators otherwise).
#[derive(Clone, Debug)]
pub struct Indecomposable {
    pub name: String,
    pub module: Module,
    pub size: usize,
}

pub fn max_bound() -> usize {
    std::env::var(MAX_DIM_ENV).ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_BOUND)
}

/// Direct sums of indecomposables of total size at most `bound`.
///
/// Over `Z`, `bound` caps the invariant factors instead (at most three
/// generators).
pub fn module_catalog(alg: &Arc<Algebra>, bound: usize) -> Result<Catalog, ModuleError> {
    let cap = max_bound();
    if bound > cap {
        return Err(ModuleError::Unsupported(format!("bound {bound} exceeds the cap {cap} (set {MAX_DIM_ENV})")));
    }
    if alg.rank() == 1 && alg.base() == BaseRing::Integers {
        return Ok(integer_catalog(alg, bound));
    }
    let blocks = indecomposables(alg)?;
    let rule = format!("direct sums of indecomposables ({}) of total size <= {bound}", names(&blocks));
    let mut entries = vec![CatalogEntry { name: "0".into(), module: Module::zero(alg), summands: vec![] }];
    for total in 1..=bound {
        let mut combos = Vec::new();
        sums_of_size(&blocks, total, 0, &mut Vec::new(), &mut combos);
        for idx in combos {
            let parts: Vec<Module> = idx.iter().map(|&i| blocks[i].module.clone()).collect();
            let name = idx.iter().map(|&i| blocks[i].name.as_str()).collect::<Vec<_>>().join(" ⊕ ");
            let module = if parts.len() == 1 { parts[0].clone() } else { direct_sum(&parts)?.module };
            entries.push(CatalogEntry { name, module, summands: idx });
        }
    }
    Ok(Catalog { spec: CatalogSpec { algebra: alg.name().to_string(), bound, rule }, entries })
}

fn names(blocks: &[Indecomposable]) -> String {
    blocks.iter().map(|b| b.name.as_str()).collect::<Vec<_>>().join(", ")
}

fn sums_of_size(blocks: &[Indecomposable], left: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for i in start..blocks.len() {
        if blocks[i].size <= left {
            cur.push(i);
            sums_of_size(blocks, left - blocks[i].size, i, cur, out);
            cur.pop();
        }
    }
}

fn integer_catalog(alg: &Arc<Algebra>, bound: usize) -> Catalog {
    let rule = format!("canonical groups with invariant factors <= {bound}, at most 3 generators");
    let spec = CatalogSpec { algebra: alg.name().to_string(), bound, rule };
    let mut entries = vec![CatalogEntry { name: "0".into(), module: Module::zero(alg), summands: vec![] }];
    if bound == 0 {
        return Catalog { spec, entries };
    }
    let factors: Vec<i64> = (2..=bound as i64).collect();
    let mut chains: Vec<Vec<i64>> = vec![vec![]];
    for &d in &factors {
        chains.push(vec![d]);
    }
    for &a in &factors {
        for &b in &factors {
            if b % a == 0 {
                chains.push(vec![a, b]);
            }
        }
    }
    let mut all: Vec<Vec<i64>> = Vec::new();
    for free in 0..=2usize {
        for c in &chains {
            if c.len() + free == 0 || c.len() + free > 3 {
                continue;
            }
            let mut orders = c.clone();
            orders.extend(std::iter::repeat_n(0, free));
            all.push(orders);
        }
    }
    all.sort_by_key(|o| (o.len(), o.iter().filter(|x| **x == 0).count(), o.clone()));
    for orders in all {
        let module = Module::abelian(alg, &orders).expect("canonical orders");
        entries.push(CatalogEntry { name: module.structure(), module, summands: vec![] });
    }
    Catalog { spec, entries }
}

/// The indecomposable building blocks for the supported algebras.
pub fn indecomposables(alg: &Arc<Algebra>) -> Result<Vec<Indecomposable>, ModuleError> {
    let base = alg.base();
    let unsupported = || ModuleError::Unsupported(format!("no catalog for {}", alg.name()));
    if alg.rank() == 1 {
        return match base {
            BaseRing::PrimeField(p) => {
                Ok(vec![Indecomposable { name: format!("F{p}"), module: Module::free(alg, 1), size: 1 }])
            }
            BaseRing::Integers => Err(unsupported()),
        };
    }
    if let Some(n) = cyclic_order(alg) {
        return match base {
            BaseRing::PrimeField(p) => Ok(cyclic_field_blocks(alg, p as u64, n)),
            BaseRing::Integers if n == 2 => Ok(zc2_blocks(alg)),
            BaseRing::Integers => Err(unsupported()),
        };
    }
    if *alg.as_ref() == *Algebra::upper_triangular(base) {
        if let BaseRing::PrimeField(_) = base {
            return Ok(triangular_blocks(alg));
        }
    }
    Err(unsupported())
}

/// `Some(n)` when the basis is `1, g, …, g^{n−1}` of a cyclic group in that order.
fn cyclic_order(alg: &Algebra) -> Option<usize> {
    let g = alg.group()?;
    let n = alg.rank();
    let cyclic = (0..n).all(|a| (0..n).all(|b| g.product[a][b] == (a + b) % n));
    cyclic.then_some(n)
}

/// `k[x]/(f^e)` for the primary divisors `f^e` of `x^n − 1`, with `x = g`.
fn cyclic_field_blocks(alg: &Arc<Algebra>, p: u64, n: usize) -> Vec<Indecomposable> {
    let target = {
        let mut t = vec![0u64; n + 1];
        t[0] = p - 1;
        t[n] = 1;
        t
    };
    let mut divisors: Vec<Vec<u64>> = Vec::new();
    for deg in 1..=n {
        for code in 0..p.pow(deg as u32) {
            let mut poly = Vec::with_capacity(deg + 1);
            let mut c = code;
            for _ in 0..deg {
                poly.push(c % p);
                c /= p;
            }
            poly.push(1);
            if poly_rem(&target, &poly, p).iter().all(|&x| x == 0) {
                divisors.push(poly);
            }
        }
    }
    let irreducible = |f: &Vec<u64>| {
        let d = f.len() - 1;
        !divisors.iter().any(|g| {
            let e = g.len() - 1;
            e >= 1 && e < d && poly_rem(f, g, p).iter().all(|&x| x == 0)
        })
    };
    let irr: Vec<&Vec<u64>> = divisors.iter().filter(|f| irreducible(f)).collect();
    let mut blocks = Vec::new();
    for g in &divisors {
        let factors = irr.iter().filter(|f| poly_rem(g, f, p).iter().all(|&x| x == 0)).count();
        if factors != 1 {
            continue;
        }
        let d = g.len() - 1;
        let comp = Mat::from_fn(d, d, |i, j| {
            if i == j + 1 {
                BigInt::one()
            } else if j == d - 1 {
                BigInt::from((p - g[i]) % p)
            } else {
                BigInt::zero()
            }
        });
        let ring = alg.base();
        let mut actions = vec![Mat::identity(d)];
        for k in 1..n {
            actions.push(actions[k - 1].mul(&comp, &ring));
        }
        let module = Module::from_presentation(alg.clone(), d, &Mat::zeros(0, d), &actions).expect("cyclic module").module;
        let name = if d == 1 && g[0] == p - 1 {
            "k".to_string()
        } else if d == n {
            alg.name().to_string()
        } else {
            format!("k[g]/({})", poly_name(g))
        };
        blocks.push(Indecomposable { name, module, size: d });
    }
    blocks.sort_by_key(|b| b.size);
    blocks
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = crate::linalg::inv_mod(b[db], p);
    while r.len() > db {
        let lead = r[r.len() - 1] * inv % p;
        let shift = r.len() - 1 - db;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
        }
        r.pop();
    }
    r
}

fn poly_name(g: &[u64]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in g.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "g".into(),
            _ => format!("g^{k}"),
        };
        terms.push(match (c, k) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    terms.join("+")
}

fn zc2_blocks(alg: &Arc<Algebra>) -> Vec<Indecomposable> {
    let mut out = vec![
        Indecomposable { name: "Z".into(), module: Module::trivial(alg).unwrap(), size: 1 },
        Indecomposable { name: "Z-".into(), module: Module::sign(alg).unwrap(), size: 1 },
        Indecomposable { name: "Z[C2]".into(), module: Module::free(alg, 1), size: 2 },
    ];
    for m in [2i64, 3, 4] {
        out.push(Indecomposable { name: format!("Z/{m}"), module: Module::trivial_mod(alg, m).unwrap(), size: 1 });
        if m != 2 {
            let sign = Module::character(alg, m, &[1, -1]).unwrap();
            out.push(Indecomposable { name: format!("Z/{m}-"), module: sign, size: 1 });
        }
        let swap = [Mat::identity(2), Mat::from_i64(&[&[0, 1], &[1, 0]], 2)];
        let rel = Mat::from_i64(&[&[m, 0], &[0, m]], 2);
        let reg = Module::from_presentation(alg.clone(), 2, &rel, &swap).unwrap().module;
        out.push(Indecomposable { name: format!("(Z/{m})[C2]"), module: reg, size: 2 });
    }
    out.sort_by_key(|b| b.size);
    out
}

fn triangular_blocks(alg: &Arc<Algebra>) -> Vec<Indecomposable> {
    // basis e11, e12, e22
    let s1 = Module::from_presentation(
        alg.clone(),
        1,
        &Mat::zeros(0, 1),
        &[Mat::from_i64(&[&[1]], 1), Mat::from_i64(&[&[0]], 1), Mat::from_i64(&[&[0]], 1)],
    )
    .unwrap()
    .module;
    let s2 = Module::from_presentation(
        alg.clone(),
        1,
        &Mat::zeros(0, 1),
        &[Mat::from_i64(&[&[0]], 1), Mat::from_i64(&[&[0]], 1), Mat::from_i64(&[&[1]], 1)],
    )
    .unwrap()
    .module;
    // A·e22 = span(e12, e22)
    let p2 = Module::from_presentation(
        alg.clone(),
        2,
        &Mat::zeros(0, 2),
        &[
            Mat::from_i64(&[&[1, 0], &[0, 0]], 2),
            Mat::from_i64(&[&[0, 1], &[0, 0]], 2),
            Mat::from_i64(&[&[0, 0], &[0, 1]], 2),
        ],
    )
    .unwrap()
    .module;
    vec![
        Indecomposable { name: "S1".into(), module: s1, size: 1 },
        Indecomposable { name: "S2".into(), module: s2, size: 1 },
        Indecomposable { name: "P2".into(), module: p2, size: 2 },
    ]
}

/// Seeded source of random catalog modules, morphisms and sequences.
pub struct Sampler {
    rng: ChaCha8Rng,
    catalog: Catalog,
}

impl Sampler {
    pub fn new(catalog: Catalog, seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), catalog }
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn module(&mut self) -> Module {
        let i = self.rng.gen_range(0..self.catalog.len());
        let m = self.catalog.entries[i].module.clone();
        self.scramble(&m)
    }

    pub fn nonzero_module(&mut self) -> Module {
        loop {
            let m = self.module();
            if !m.is_zero() {
                return m;
            }
        }
    }

    /// Conjugate a base-free module by a random unimodular change of basis.
    pub fn scramble(&mut self, m: &Module) -> Module {
        if !m.is_base_free() || m.gens() < 2 {
            return m.clone();
        }
        let ring = m.ring();
        let g = m.gens();
        let (mut p, mut p_inv) = (Mat::identity(g), Mat::identity(g));
        for _ in 0..g {
            let (i, j) = (self.rng.gen_range(0..g), self.rng.gen_range(0..g));
            if i == j {
                continue;
            }
            let c = BigInt::from(self.rng.gen_range(-2i64..=2));
            // p ← (I + c E_ij)·p and p⁻¹ ← p⁻¹·(I − c E_ij)
            let mut e = Mat::identity(g);
            e.set(i, j, c.clone());
            p = e.mul(&p, &ring);
            let mut f = Mat::identity(g);
            f.set(i, j, -c);
            p_inv = p_inv.mul(&f, &ring);
        }
        let actions: Vec<Mat> = m.actions().iter().map(|a| p.mul(a, &ring).mul(&p_inv, &ring)).collect();
        Module::new(m.algebra().clone(), m.orders().to_vec(), actions).expect("conjugate of a module")
    }

    pub fn scalar(&mut self, ring: &BaseRing) -> BigInt {
        match ring {
            BaseRing::PrimeField(p) => BigInt::from(self.rng.gen_range(0..*p)),
            BaseRing::Integers => BigInt::from(self.rng.gen_range(-3i64..=3)),
        }
    }

    pub fn vector(&mut self, ring: &BaseRing, n: usize) -> Vector {
        (0..n).map(|_| self.scalar(ring)).collect()
    }

    /// Random combination of a Hom basis.
    pub fn morphism(&mut self, src: &Module, dst: &Module) -> Morphism {
        let h = hom_group(src, dst);
        let c = self.vector(&src.ring(), h.basis().len());
        h.element(&c)
    }

    pub fn any_morphism(&mut self) -> Morphism {
        let (a, b) = (self.module(), self.module());
        self.morphism(&a, &b)
    }

    /// Random extension of random catalog modules, with the class drawn at
    /// random (zero about a third of the time).
    pub fn ses(&mut self) -> Ses {
        let (a, c) = (self.module(), self.module());
        let e = ext(&c, &a, 1);
        let zero = self.rng.gen_range(0..3) == 0;
        let class: Vector = if zero {
            vec![BigInt::zero(); e.invariant_factors().len()]
        } else {
            self.vector(&a.ring(), e.invariant_factors().len())
        };
        class_ses(&e, &class)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2c2_blocks() {
        let a = Algebra::cyclic_group(BaseRing::PrimeField(2), 2);
        let b = indecomposables(&a).unwrap();
        let names: Vec<&str> = b.iter().map(|x| x.name.as_str()).collect();
        assert_eq!(names, ["k", "F2[C2]"]);
        let c = module_catalog(&a, 4).unwrap();
        // sums of 1s and 2s: partitions of 0..=4 into parts {1,2}
        assert_eq!(c.len(), 1 + 1 + 2 + 2 + 3);
    }

    #[test]
    fn f3c3_has_three_jordan_blocks() {
        let a = Algebra::cyclic_group(BaseRing::PrimeField(3), 3);
        let b = indecomposables(&a).unwrap();
        assert_eq!(b.iter().map(|x| x.size).collect::<Vec<_>>(), [1, 2, 3]);
    }

    #[test]
    fn f3c2_is_semisimple() {
        let a = Algebra::cyclic_group(BaseRing::PrimeField(3), 2);
        let b = indecomposables(&a).unwrap();
        assert_eq!(b.iter().map(|x| x.size).collect::<Vec<_>>(), [1, 1]);
    }

    #[test]
    fn integer_catalog_small() {
        let z = Algebra::base_ring(BaseRing::Integers);
        assert_eq!(module_catalog(&z, 0).unwrap().len(), 1);
        let c = module_catalog(&z, 4).unwrap();
        let names: Vec<String> = c.entries.iter().map(|e| e.name.clone()).collect();
        for want in ["0", "Z", "Z/2", "Z/3", "Z/4", "Z/2 ⊕ Z", "Z/2 ⊕ Z/4"] {
            assert!(names.iter().any(|n| n == want), "{want} missing from {names:?}");
        }
    }

    #[test]
    fn sampler_is_deterministic() {
        let a = Algebra::cyclic_group(BaseRing::PrimeField(2), 2);
        let run = || {
            let mut s = Sampler::new(module_catalog(&a, 3).unwrap(), 7);
            (0..5).map(|_| format!("{:?}", s.any_morphism())).collect::<Vec<_>>()
        };
        assert_eq!(run(), run());
    }
}
