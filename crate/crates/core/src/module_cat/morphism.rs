use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::module::{well_defined, Module};
use super::ModuleError;
use crate::linalg::{self, reduce_rows, GroupSolver, Mat, Vector};

/// Module homomorphism, as a matrix on canonical generator coordinates.
/// Row `i` is reduced modulo the `i`-th target order, so equal maps have
/// equal matrices.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    src: Module,
    dst: Module,
    matrix: Mat,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism[{} → {}: {:?}]", self.src, self.dst, self.matrix)
    }
}

impl Morphism {
    pub fn new(src: &Module, dst: &Module, matrix: Mat) -> Result<Morphism, ModuleError> {
        if **src.algebra() != **dst.algebra() {
            return Err(ModuleError::AlgebraMismatch);
        }
        if matrix.shape() != (dst.gens(), src.gens()) {
            return Err(ModuleError::Shape(format!(
                "morphism matrix must be {}x{}, got {}x{}",
                dst.gens(),
                src.gens(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        let ring = src.ring();
        let mut matrix = matrix;
        reduce_rows(&ring, dst.orders(), &mut matrix);
        if !well_defined(&ring, src.orders(), dst.orders(), &matrix) {
            return Err(ModuleError::NotAMorphism("does not respect the torsion relations".into()));
        }
        for k in 0..src.algebra().rank() {
            let mut lhs = matrix.mul(src.action(k), &ring);
            let mut rhs = dst.action(k).mul(&matrix, &ring);
            reduce_rows(&ring, dst.orders(), &mut lhs);
            reduce_rows(&ring, dst.orders(), &mut rhs);
            if lhs != rhs {
                let label = src.algebra().labels()[k].clone();
                return Err(ModuleError::NotAMorphism(format!("not linear for {label}")));
            }
        }
        Ok(Morphism { src: src.clone(), dst: dst.clone(), matrix })
    }

    /// For maps that are module homomorphisms by construction.
    pub(crate) fn new_unchecked(src: &Module, dst: &Module, mut matrix: Mat) -> Morphism {
        reduce_rows(&src.ring(), dst.orders(), &mut matrix);
        let m = Morphism { src: src.clone(), dst: dst.clone(), matrix };
        debug_assert!(
            Morphism::new(src, dst, m.matrix.clone()).is_ok(),
            "invalid internal morphism {m:?}: {:?}",
            Morphism::new(src, dst, m.matrix.clone()).err()
        );
        m
    }

    pub fn from_i64(src: &Module, dst: &Module, rows: &[&[i64]]) -> Result<Morphism, ModuleError> {
        Morphism::new(src, dst, Mat::from_i64(rows, src.gens()))
    }

    pub fn identity(m: &Module) -> Morphism {
        Morphism::new_unchecked(m, m, Mat::identity(m.gens()))
    }

    pub fn zero(src: &Module, dst: &Module) -> Morphism {
        Morphism { src: src.clone(), dst: dst.clone(), matrix: Mat::zeros(dst.gens(), src.gens()) }
    }

    pub fn src(&self) -> &Module {
        &self.src
    }

    pub fn dst(&self) -> &Module {
        &self.dst
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, x: &[BigInt]) -> Vector {
        let mut y = self.matrix.mul_vec(x, &self.src.ring());
        self.dst.reduce(&mut y);
        y
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Morphism) -> Morphism {
        assert!(inner.dst == self.src, "compose: {} vs {}", inner.dst, self.src);
        let mut m = self.matrix.mul(&inner.matrix, &self.src.ring());
        reduce_rows(&self.src.ring(), self.dst.orders(), &mut m);
        Morphism { src: inner.src.clone(), dst: self.dst.clone(), matrix: m }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        assert!(self.src == other.src && self.dst == other.dst, "add: mismatched morphisms");
        let mut m = self.matrix.add(&other.matrix, &self.src.ring());
        reduce_rows(&self.src.ring(), self.dst.orders(), &mut m);
        Morphism { src: self.src.clone(), dst: self.dst.clone(), matrix: m }
    }

    pub fn neg(&self) -> Morphism {
        let mut m = self.matrix.neg(&self.src.ring());
        reduce_rows(&self.src.ring(), self.dst.orders(), &mut m);
        Morphism { src: self.src.clone(), dst: self.dst.clone(), matrix: m }
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> Morphism {
        let mut m = self.matrix.scale(c, &self.src.ring());
        reduce_rows(&self.src.ring(), self.dst.orders(), &mut m);
        Morphism { src: self.src.clone(), dst: self.dst.clone(), matrix: m }
    }

    /// Kernel object and its inclusion.
    pub fn kernel(&self) -> Morphism {
        let ring = self.src.ring();
        let (orders, incl) = linalg::kernel(&ring, self.src.orders(), self.dst.orders(), &self.matrix);
        let k = submodule(&self.src, orders, &incl).expect("kernel is a submodule");
        Morphism::new_unchecked(&k, &self.src, incl)
    }

    /// Cokernel projection.
    pub fn cokernel(&self) -> Morphism {
        let ring = self.src.ring();
        let quo = linalg::cokernel(&ring, self.dst.orders(), &self.matrix);
        let actions = self
            .dst
            .actions()
            .iter()
            .map(|a| quo.q.mul(a, &ring).mul(&quo.section, &ring))
            .collect();
        let c = Module::from_parts(self.src.algebra().clone(), quo.orders.clone(), actions);
        Morphism::new_unchecked(&self.dst, &c, quo.q)
    }

    /// `(image inclusion, corestriction)` with `self = incl ∘ corestriction`.
    pub fn image(&self) -> (Morphism, Morphism) {
        let ring = self.src.ring();
        let (orders, incl) = linalg::subgroup(&ring, self.dst.orders(), &self.matrix);
        let im = submodule(&self.dst, orders, &incl).expect("image is a submodule");
        let incl = Morphism::new_unchecked(&im, &self.dst, incl);
        let core = lift_through_mono(&incl, self).expect("map factors through its image");
        (incl, core)
    }

    pub fn is_mono(&self) -> bool {
        self.kernel().src().is_zero()
    }

    pub fn is_epi(&self) -> bool {
        self.cokernel().dst().is_zero()
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    pub fn inverse(&self) -> Option<Morphism> {
        if !self.is_iso() {
            return None;
        }
        descend_through_epi(self, &Morphism::identity(&self.src))
    }
}

/// Submodule of `m` with the given canonical orders and inclusion columns.
pub(crate) fn submodule(m: &Module, orders: Vec<BigInt>, incl: &Mat) -> Result<Module, ModuleError> {
    let ring = m.ring();
    let solver = GroupSolver::new(&ring, incl, m.orders());
    let mut actions = Vec::with_capacity(m.actions().len());
    for (k, a) in m.actions().iter().enumerate() {
        let image = a.mul(incl, &ring);
        let mut cols = Vec::with_capacity(incl.cols());
        for c in image.columns() {
            cols.push(solver.solve(&c).ok_or(ModuleError::NotSubmodule { basis: k })?);
        }
        actions.push(Mat::from_columns(orders.len(), &cols));
    }
    Ok(Module::from_parts(m.algebra().clone(), orders, actions))
}

/// `g` with `mono ∘ g = h`, when `h` lands in the image of `mono`.
pub fn lift_through_mono(mono: &Morphism, h: &Morphism) -> Option<Morphism> {
    assert!(mono.dst == h.dst, "lift_through_mono: targets differ");
    let ring = mono.src.ring();
    let solver = GroupSolver::new(&ring, &mono.matrix, mono.dst.orders());
    let cols = h.matrix.columns().iter().map(|c| solver.solve(c)).collect::<Option<Vec<_>>>()?;
    let g = Mat::from_columns(mono.src.gens(), &cols);
    let g = Morphism::new(&h.src, &mono.src, g).ok()?;
    (mono.compose(&g) == *h).then_some(g)
}

/// `g` with `g ∘ epi = h`, when `h` kills the kernel of `epi`.
pub fn descend_through_epi(epi: &Morphism, h: &Morphism) -> Option<Morphism> {
    assert!(epi.src == h.src, "descend_through_epi: sources differ");
    let ring = epi.src.ring();
    let solver = GroupSolver::new(&ring, &epi.matrix, epi.dst.orders());
    let n = epi.dst.gens();
    let mut cols = Vec::with_capacity(n);
    for t in 0..n {
        let e = super::module::unit_vector(n, t);
        let pre = solver.solve(&e)?;
        cols.push(h.matrix.mul_vec(&pre, &ring));
    }
    let g = Morphism::new(&epi.dst, &h.dst, Mat::from_columns(h.dst.gens(), &cols)).ok()?;
    (g.compose(epi) == *h).then_some(g)
}

/// Biproduct with injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

pub fn direct_sum(parts: &[Module]) -> Result<DirectSum, ModuleError> {
    let alg = match parts.first() {
        Some(m) => m.algebra().clone(),
        None => return Err(ModuleError::Shape("direct sum of no modules".into())),
    };
    if parts.iter().any(|m| **m.algebra() != *alg) {
        return Err(ModuleError::AlgebraMismatch);
    }
    Ok(direct_sum_over(&alg, parts))
}

pub(crate) fn direct_sum_over(alg: &std::sync::Arc<super::Algebra>, parts: &[Module]) -> DirectSum {
    let total: usize = parts.iter().map(Module::gens).sum();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut rel_rows: Vec<Vector> = Vec::new();
    let mut off = 0;
    for m in parts {
        offsets.push(off);
        for (j, o) in m.orders().iter().enumerate() {
            if !o.is_zero() {
                let mut r = vec![BigInt::zero(); total];
                r[off + j] = o.clone();
                rel_rows.push(r);
            }
        }
        off += m.gens();
    }
    let rel = Mat::from_fn(rel_rows.len(), total, |i, j| rel_rows[i][j].clone());
    let actions: Vec<Mat> = (0..alg.rank())
        .map(|k| {
            let mut a = Mat::zeros(total, total);
            for (m, &o) in parts.iter().zip(&offsets) {
                a.put(o, o, m.action(k));
            }
            a
        })
        .collect();
    let pres = Module::from_presentation(alg.clone(), total, &rel, &actions).expect("direct sum is well defined");
    let module = pres.module;
    let mut injections = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    for (m, &o) in parts.iter().zip(&offsets) {
        let idx: Vec<usize> = (o..o + m.gens()).collect();
        injections.push(Morphism::new_unchecked(m, &module, pres.to_canonical.select_cols(&idx)));
        projections.push(Morphism::new_unchecked(&module, m, pres.from_canonical.select_rows(&idx)));
    }
    DirectSum { module, injections, projections }
}

/// Map `⊕ sources → target` given by components.
pub fn copair(sum: &DirectSum, maps: &[Morphism]) -> Morphism {
    let mut acc = Morphism::zero(&sum.module, maps[0].dst());
    for (f, p) in maps.iter().zip(&sum.projections) {
        acc = acc.add(&f.compose(p));
    }
    acc
}

/// Map `source → ⊕ targets` given by components.
pub fn pair(sum: &DirectSum, maps: &[Morphism]) -> Morphism {
    let mut acc = Morphism::zero(maps[0].src(), &sum.module);
    for (f, i) in maps.iter().zip(&sum.injections) {
        acc = acc.add(&i.compose(f));
    }
    acc
}

/// Pullback square of `f: X → Z ← Y: g`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub object: Module,
    pub to_left: Morphism,
    pub to_right: Morphism,
    /// `X ⊕ Y` and the kernel inclusion `P → X ⊕ Y`.
    pub sum: DirectSum,
    pub inclusion: Morphism,
}

pub fn pullback(f: &Morphism, g: &Morphism) -> Pullback {
    assert!(f.dst == g.dst, "pullback needs a common target");
    let sum = direct_sum_over(f.src.algebra(), &[f.src.clone(), g.src.clone()]);
    let h = f.compose(&sum.projections[0]).sub(&g.compose(&sum.projections[1]));
    let k = h.kernel();
    Pullback {
        object: k.src().clone(),
        to_left: sum.projections[0].compose(&k),
        to_right: sum.projections[1].compose(&k),
        sum,
        inclusion: k,
    }
}

/// Pushout square of `f: Z → X, g: Z → Y`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub object: Module,
    pub from_left: Morphism,
    pub from_right: Morphism,
    /// `X ⊕ Y` and the cokernel projection `X ⊕ Y → P`.
    pub sum: DirectSum,
    pub quotient: Morphism,
}

pub fn pushout(f: &Morphism, g: &Morphism) -> Pushout {
    assert!(f.src == g.src, "pushout needs a common source");
    let sum = direct_sum_over(f.src.algebra(), &[f.dst.clone(), g.dst.clone()]);
    let h = sum.injections[0].compose(f).sub(&sum.injections[1].compose(g));
    let c = h.cokernel();
    Pushout {
        object: c.dst().clone(),
        from_left: c.compose(&sum.injections[0]),
        from_right: c.compose(&sum.injections[1]),
        sum,
        quotient: c,
    }
}
