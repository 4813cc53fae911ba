use std::fmt;
use std::sync::Arc;

use super::ChainError;
use crate::module_cat::{descend_through_epi, direct_sum, lift_through_mono, Algebra, Module, Morphism};

/// A bounded chain complex `X_hi → … → X_lo` with `d_n: X_n → X_{n-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainComplex {
    algebra: Arc<Algebra>,
    lo: i64,
    entries: Vec<Module>,
    /// `diffs[k] = d_{lo+k}`; `diffs[0]` maps to the zero module.
    diffs: Vec<Morphism>,
}

impl ChainComplex {
    /// `entries[k]` sits in degree `lo + k`; `diffs[k]` is `d_{lo+k+1}`.
    pub fn new(alg: &Arc<Algebra>, lo: i64, entries: Vec<Module>, diffs: Vec<Morphism>) -> Result<Self, ChainError> {
        if entries.is_empty() {
            return Ok(ChainComplex::zero(alg));
        }
        if diffs.len() + 1 != entries.len() {
            return Err(ChainError::Shape(format!("{} entries need {} differentials", entries.len(), entries.len() - 1)));
        }
        for m in &entries {
            if **m.algebra() != **alg {
                return Err(ChainError::Module(crate::module_cat::ModuleError::AlgebraMismatch));
            }
        }
        let zero = Module::zero(alg);
        let mut all = vec![Morphism::zero(&entries[0], &zero)];
        for (k, d) in diffs.into_iter().enumerate() {
            if d.src() != &entries[k + 1] || d.dst() != &entries[k] {
                return Err(ChainError::Shape(format!("d_{} has the wrong source or target", lo + k as i64 + 1)));
            }
            all.push(d);
        }
        for k in 1..all.len() {
            if !all[k - 1].compose(&all[k]).is_zero() {
                return Err(ChainError::DSquaredNonzero { degree: lo + k as i64 });
            }
        }
        Ok(ChainComplex { algebra: alg.clone(), lo, entries, diffs: all })
    }

    pub(crate) fn from_parts(alg: &Arc<Algebra>, lo: i64, entries: Vec<Module>, diffs: Vec<Morphism>) -> Self {
        if cfg!(debug_assertions) {
            return ChainComplex::new(alg, lo, entries, diffs).expect("valid complex");
        }
        if entries.is_empty() {
            return ChainComplex::zero(alg);
        }
        let mut all = vec![Morphism::zero(&entries[0], &Module::zero(alg))];
        all.extend(diffs);
        ChainComplex { algebra: alg.clone(), lo, entries, diffs: all }
    }

    pub fn zero(alg: &Arc<Algebra>) -> Self {
        ChainComplex { algebra: alg.clone(), lo: 0, entries: vec![], diffs: vec![] }
    }

    /// `A` in degrees `n` and `n-1`, identity differential.
    pub fn disk(n: i64, a: &Module) -> Self {
        ChainComplex::from_parts(a.algebra(), n - 1, vec![a.clone(), a.clone()], vec![Morphism::identity(a)])
    }

    /// `A` in degree `n`.
    pub fn sphere(n: i64, a: &Module) -> Self {
        ChainComplex::from_parts(a.algebra(), n, vec![a.clone()], vec![])
    }

    /// `(ΣX)_n = X_{n-1}` with differential `-d`.
    pub fn suspension(&self) -> Self {
        let diffs = self.diffs.iter().skip(1).map(Morphism::neg).collect();
        ChainComplex::from_parts(&self.algebra, self.lo + 1, self.entries.clone(), diffs)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.entries.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn in_window(&self, n: i64) -> bool {
        !self.entries.is_empty() && n >= self.lo && n <= self.hi()
    }

    pub fn entry(&self, n: i64) -> Module {
        if self.in_window(n) {
            self.entries[(n - self.lo) as usize].clone()
        } else {
            Module::zero(&self.algebra)
        }
    }

    pub fn entries(&self) -> &[Module] {
        &self.entries
    }

    /// `d_n: X_n → X_{n-1}`.
    pub fn d(&self, n: i64) -> Morphism {
        if self.in_window(n) {
            self.diffs[(n - self.lo) as usize].clone()
        } else {
            Morphism::zero(&self.entry(n), &self.entry(n - 1))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Module::is_zero)
    }

    /// Largest base rank of an entry.
    pub fn max_entry_gens(&self) -> usize {
        self.entries.iter().map(Module::gens).max().unwrap_or(0)
    }

    /// Inclusion `Z_n X → X_n`.
    pub fn cycles_inclusion(&self, n: i64) -> Morphism {
        self.d(n).kernel()
    }

    pub fn cycles(&self, n: i64) -> Module {
        self.cycles_inclusion(n).src().clone()
    }

    pub fn homology(&self, n: i64) -> Module {
        let z = self.cycles_inclusion(n);
        let b = lift_through_mono(&z, &self.d(n + 1)).expect("d∘d = 0");
        b.cokernel().dst().clone()
    }

    pub fn is_exact(&self) -> bool {
        self.degrees().all(|n| self.homology(n).is_zero())
    }

    /// Entries and differentials as one line, e.g. `F2 ← F2[C2]`.
    pub fn describe(&self) -> String {
        if self.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.degrees().rev().map(|n| format!("{}@{n}", self.entry(n).structure())).collect();
        parts.join(" → ")
    }

    pub fn direct_sum(parts: &[ChainComplex]) -> Result<ChainSum, ChainError> {
        let alg = parts.first().map(|c| c.algebra.clone()).ok_or_else(|| ChainError::Shape("empty sum".into()))?;
        let nonempty: Vec<&ChainComplex> = parts.iter().filter(|c| !c.is_empty()).collect();
        let (lo, hi) = match (nonempty.iter().map(|c| c.lo).min(), nonempty.iter().map(|c| c.hi()).max()) {
            (Some(l), Some(h)) => (l, h),
            _ => (0, -1),
        };
        let sums: Vec<_> = (lo..=hi)
            .map(|n| direct_sum(&parts.iter().map(|c| c.entry(n)).collect::<Vec<_>>()))
            .collect::<Result<_, _>>()?;
        let entries: Vec<Module> = sums.iter().map(|s| s.module.clone()).collect();
        let diffs: Vec<Morphism> = ((lo + 1)..=hi)
            .map(|n| {
                let (s, t) = (&sums[(n - lo) as usize], &sums[(n - 1 - lo) as usize]);
                let mut acc = Morphism::zero(&s.module, &t.module);
                for (k, c) in parts.iter().enumerate() {
                    acc = acc.add(&t.injections[k].compose(&c.d(n)).compose(&s.projections[k]));
                }
                acc
            })
            .collect();
        let sum = ChainComplex::from_parts(&alg, lo, entries, diffs);
        let injections = (0..parts.len())
            .map(|k| {
                let maps = parts[k]
                    .degrees()
                    .map(|n| {
                        if sum.in_window(n) {
                            sums[(n - lo) as usize].injections[k].clone()
                        } else {
                            Morphism::zero(&parts[k].entry(n), &sum.entry(n))
                        }
                    })
                    .collect();
                ChainMap::from_parts(&parts[k], &sum, maps)
            })
            .collect();
        let projections = (0..parts.len())
            .map(|k| {
                let maps = sum.degrees().map(|n| sums[(n - lo) as usize].projections[k].clone()).collect();
                ChainMap::from_parts(&sum, &parts[k], maps)
            })
            .collect();
        Ok(ChainSum { complex: sum, injections, projections })
    }
}

impl fmt::Display for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

#[derive(Clone, Debug)]
pub struct ChainSum {
    pub complex: ChainComplex,
    pub injections: Vec<ChainMap>,
    pub projections: Vec<ChainMap>,
}

/// Degreewise morphisms `f_n: X_n → Y_n` over the window of `X`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap {
    src: ChainComplex,
    dst: ChainComplex,
    maps: Vec<Morphism>,
}

impl ChainMap {
    pub fn new(src: &ChainComplex, dst: &ChainComplex, maps: Vec<Morphism>) -> Result<ChainMap, ChainError> {
        if maps.len() != src.len() {
            return Err(ChainError::Shape(format!("{} components for a window of {}", maps.len(), src.len())));
        }
        for (n, f) in src.degrees().zip(&maps) {
            if *f.src() != src.entry(n) || *f.dst() != dst.entry(n) {
                return Err(ChainError::Shape(format!("component in degree {n} has the wrong source or target")));
            }
        }
        let m = ChainMap { src: src.clone(), dst: dst.clone(), maps };
        for n in src.degrees() {
            if dst.d(n).compose(&m.component(n)) != m.component(n - 1).compose(&src.d(n)) {
                return Err(ChainError::NotChainMap { degree: n });
            }
        }
        Ok(m)
    }

    pub(crate) fn from_parts(src: &ChainComplex, dst: &ChainComplex, maps: Vec<Morphism>) -> ChainMap {
        if cfg!(debug_assertions) {
            return ChainMap::new(src, dst, maps).expect("valid chain map");
        }
        ChainMap { src: src.clone(), dst: dst.clone(), maps }
    }

    pub fn identity(x: &ChainComplex) -> ChainMap {
        ChainMap { src: x.clone(), dst: x.clone(), maps: x.entries.iter().map(Morphism::identity).collect() }
    }

    pub fn zero(x: &ChainComplex, y: &ChainComplex) -> ChainMap {
        let maps = x.degrees().map(|n| Morphism::zero(&x.entry(n), &y.entry(n))).collect();
        ChainMap { src: x.clone(), dst: y.clone(), maps }
    }

    pub fn src(&self) -> &ChainComplex {
        &self.src
    }

    pub fn dst(&self) -> &ChainComplex {
        &self.dst
    }

    pub fn components(&self) -> &[Morphism] {
        &self.maps
    }

    pub fn component(&self, n: i64) -> Morphism {
        if self.src.in_window(n) {
            self.maps[(n - self.src.lo) as usize].clone()
        } else {
            Morphism::zero(&self.src.entry(n), &self.dst.entry(n))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Morphism::is_zero)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ChainMap) -> ChainMap {
        assert!(inner.dst == self.src, "compose: complexes differ");
        let maps = inner.src.degrees().map(|n| self.component(n).compose(&inner.component(n))).collect();
        ChainMap { src: inner.src.clone(), dst: self.dst.clone(), maps }
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        assert!(self.src == other.src && self.dst == other.dst, "add: different Hom sets");
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect();
        ChainMap { src: self.src.clone(), dst: self.dst.clone(), maps }
    }

    pub fn neg(&self) -> ChainMap {
        ChainMap { src: self.src.clone(), dst: self.dst.clone(), maps: self.maps.iter().map(Morphism::neg).collect() }
    }

    pub fn sub(&self, other: &ChainMap) -> ChainMap {
        self.add(&other.neg())
    }

    pub fn is_mono(&self) -> bool {
        self.maps.iter().all(Morphism::is_mono)
    }

    pub fn is_epi(&self) -> bool {
        self.dst.degrees().all(|n| self.component(n).is_epi())
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    /// Degreewise kernel with the induced differential.
    pub fn kernel(&self) -> ChainMap {
        let incl: Vec<Morphism> = self.maps.iter().map(Morphism::kernel).collect();
        let entries: Vec<Module> = incl.iter().map(|k| k.src().clone()).collect();
        let diffs = (1..incl.len())
            .map(|k| {
                let n = self.src.lo + k as i64;
                lift_through_mono(&incl[k - 1], &self.src.d(n).compose(&incl[k])).expect("kernels form a subcomplex")
            })
            .collect();
        let kc = ChainComplex::from_parts(&self.src.algebra, self.src.lo, entries, diffs);
        ChainMap::from_parts(&kc, &self.src, incl)
    }

    /// Degreewise cokernel with the induced differential.
    pub fn cokernel(&self) -> ChainMap {
        let y = &self.dst;
        let proj: Vec<Morphism> = y.degrees().map(|n| self.component(n).cokernel()).collect();
        let entries: Vec<Module> = proj.iter().map(|p| p.dst().clone()).collect();
        let diffs = (1..proj.len())
            .map(|k| {
                let n = y.lo + k as i64;
                descend_through_epi(&proj[k], &proj[k - 1].compose(&y.d(n))).expect("images form a subcomplex")
            })
            .collect();
        let cc = ChainComplex::from_parts(&y.algebra, y.lo, entries, diffs);
        ChainMap::from_parts(y, &cc, proj)
    }
}

impl ChainSum {
    /// `Σ maps[k] ∘ π_k`.
    pub fn copair(&self, maps: &[ChainMap]) -> ChainMap {
        let mut acc = ChainMap::zero(&self.complex, maps[0].dst());
        for (f, p) in maps.iter().zip(&self.projections) {
            acc = acc.add(&f.compose(p));
        }
        acc
    }
}

/// Degreewise lift of `h` through the monomorphism `mono`.
pub fn chain_lift_through_mono(mono: &ChainMap, h: &ChainMap) -> Option<ChainMap> {
    let maps = h.src.degrees().map(|n| lift_through_mono(&mono.component(n), &h.component(n))).collect::<Option<_>>()?;
    ChainMap::new(&h.src, &mono.src, maps).ok()
}

/// Degreewise descent of `h` through the epimorphism `epi`.
pub fn chain_descend_through_epi(epi: &ChainMap, h: &ChainMap) -> Option<ChainMap> {
    let maps =
        epi.dst.degrees().map(|n| descend_through_epi(&epi.component(n), &h.component(n))).collect::<Option<_>>()?;
    ChainMap::new(&epi.dst, &h.dst, maps).ok()
}

#[derive(Clone, Debug)]
pub struct ChainPushout {
    pub object: ChainComplex,
    pub from_left: ChainMap,
    pub from_right: ChainMap,
    pub sum: ChainSum,
    pub quotient: ChainMap,
}

/// Pushout of `f: X → Y` and `g: X → Z`.
pub fn chain_pushout(f: &ChainMap, g: &ChainMap) -> Result<ChainPushout, ChainError> {
    assert!(f.src == g.src, "pushout needs a common source");
    let sum = ChainComplex::direct_sum(&[f.dst.clone(), g.dst.clone()])?;
    let h = sum.injections[0].compose(f).sub(&sum.injections[1].compose(g));
    let quotient = h.cokernel();
    let from_left = quotient.compose(&sum.injections[0]);
    let from_right = quotient.compose(&sum.injections[1]);
    Ok(ChainPushout { object: quotient.dst.clone(), from_left, from_right, sum, quotient })
}
