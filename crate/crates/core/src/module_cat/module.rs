use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Algebra, ModuleError};
use crate::linalg::{quotient, reduce_rows, BaseRing, GroupSolver, Mat, Vector};

/// Finitely generated module over an [`Algebra`].
///
/// The underlying base-ring module is stored in canonical form
/// `R/(d₁) ⊕ … ⊕ R/(d_t) ⊕ R^f` with `d₁ | d₂ | …` non-units, so two modules
/// with the same underlying group have syntactically equal `orders`. Each
/// algebra basis element acts through a `g × g` matrix on generator
/// coordinates, well defined modulo the orders.
///
/// Cloning is cheap; the data sits behind an `Arc`.
#[derive(Clone)]
pub struct Module(Arc<ModuleData>);

struct ModuleData {
    algebra: Arc<Algebra>,
    orders: Vec<BigInt>,
    actions: Vec<Mat>,
    presentation: OnceLock<PresentationCache>,
    reduced: OnceLock<PresentationCache>,
    projective: OnceLock<bool>,
}

/// Cached canonical free presentation `0 → K → F → M → 0`.
#[derive(Clone)]
pub(crate) struct PresentationCache {
    pub free: Module,
    pub kernel: Module,
    pub incl: Mat,
    pub proj: Mat,
}

/// A module built from an arbitrary presentation, with the coordinate changes
/// between the presentation generators and the canonical generators.
#[derive(Clone, Debug)]
pub struct Presented {
    pub module: Module,
    /// canonical ← presentation
    pub to_canonical: Mat,
    /// presentation ← canonical
    pub from_canonical: Mat,
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.orders == other.0.orders
                && self.0.actions == other.0.actions
                && *self.0.algebra == *other.0.algebra)
    }
}

impl Eq for Module {}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module[{} over {}; actions {:?}]", self.structure(), self.0.algebra, self.0.actions)
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.structure())
    }
}

pub(crate) fn is_canonical(ring: &BaseRing, orders: &[BigInt]) -> bool {
    match ring {
        BaseRing::PrimeField(_) => orders.iter().all(Zero::is_zero),
        BaseRing::Integers => {
            let torsion: Vec<&BigInt> = orders.iter().take_while(|o| !o.is_zero()).collect();
            orders[torsion.len()..].iter().all(Zero::is_zero)
                && torsion.iter().all(|o| **o > BigInt::one())
                && torsion.windows(2).all(|w| ring.divide(w[1], w[0]).is_some())
        }
    }
}

/// Human-readable structure of a canonical group, e.g. `Z/2 ⊕ Z/4 ⊕ Z` or `F2^3`.
pub fn describe_orders(ring: &BaseRing, orders: &[BigInt]) -> String {
    if orders.is_empty() {
        return "0".into();
    }
    match ring {
        BaseRing::PrimeField(p) => {
            if orders.len() == 1 {
                format!("F{p}")
            } else {
                format!("F{p}^{}", orders.len())
            }
        }
        BaseRing::Integers => {
            let mut parts: Vec<String> =
                orders.iter().filter(|o| !o.is_zero()).map(|o| format!("Z/{o}")).collect();
            let free = orders.iter().filter(|o| o.is_zero()).count();
            match free {
                0 => {}
                1 => parts.push("Z".into()),
                k => parts.push(format!("Z^{k}")),
            }
            parts.join(" ⊕ ")
        }
    }
}

impl Module {
    /// Checked constructor from a canonical presentation.
    pub fn new(algebra: Arc<Algebra>, orders: Vec<BigInt>, actions: Vec<Mat>) -> Result<Module, ModuleError> {
        let ring = algebra.base();
        let orders: Vec<BigInt> = orders.iter().map(|o| ring.normalize_order(o)).collect();
        if !is_canonical(&ring, &orders) {
            return Err(ModuleError::NonCanonical(describe_orders(&ring, &orders)));
        }
        Module::from_parts_checked(algebra, orders, actions)
    }

    /// Internal constructor for results of constructions that are valid by
    /// design; validated in debug builds.
    pub(crate) fn from_parts(algebra: Arc<Algebra>, orders: Vec<BigInt>, mut actions: Vec<Mat>) -> Module {
        let ring = algebra.base();
        for a in &mut actions {
            reduce_rows(&ring, &orders, a);
        }
        let m = Module(Arc::new(ModuleData {
            algebra,
            orders,
            actions,
            presentation: OnceLock::new(),
            reduced: OnceLock::new(),
            projective: OnceLock::new(),
        }));
        debug_assert!(m.validate().is_ok(), "invalid internal module: {:?}", m.validate());
        m
    }

    /// Module given by `gens` generators, relation rows, and one action
    /// matrix per basis element (acting on generator coordinates).
    pub fn from_presentation(
        algebra: Arc<Algebra>,
        gens: usize,
        relations: &Mat,
        actions: &[Mat],
    ) -> Result<Presented, ModuleError> {
        let ring = algebra.base();
        if relations.cols() != gens {
            return Err(ModuleError::Shape(format!("relations must have {gens} columns")));
        }
        if actions.len() != algebra.rank() || actions.iter().any(|a| a.shape() != (gens, gens)) {
            return Err(ModuleError::Shape(format!(
                "need {} action matrices of size {gens}x{gens}",
                algebra.rank()
            )));
        }
        let rel_cols = relations.transpose();
        let solver = GroupSolver::new(&ring, &rel_cols, &vec![BigInt::zero(); gens]);
        for (k, a) in actions.iter().enumerate() {
            for r in rel_cols.columns() {
                if solver.solve(&a.mul_vec(&r, &ring)).is_none() {
                    return Err(ModuleError::ActionNotWellDefined { basis: k });
                }
            }
        }
        let quo = quotient(&ring, gens, &rel_cols);
        let new_actions: Vec<Mat> =
            actions.iter().map(|a| quo.q.mul(a, &ring).mul(&quo.section, &ring)).collect();
        let module = Module::from_parts_checked(algebra, quo.orders.clone(), new_actions)?;
        Ok(Presented { module, to_canonical: quo.q, from_canonical: quo.section })
    }

    fn from_parts_checked(algebra: Arc<Algebra>, orders: Vec<BigInt>, mut actions: Vec<Mat>) -> Result<Module, ModuleError> {
        let ring = algebra.base();
        for a in &mut actions {
            reduce_rows(&ring, &orders, a);
        }
        let m = Module(Arc::new(ModuleData {
            algebra,
            orders,
            actions,
            presentation: OnceLock::new(),
            reduced: OnceLock::new(),
            projective: OnceLock::new(),
        }));
        m.validate()?;
        Ok(m)
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Module {
        let actions = vec![Mat::zeros(0, 0); algebra.rank()];
        Module::from_parts(algebra.clone(), Vec::new(), actions)
    }

    /// Free module `A^r`: `r` blocks of the left regular representation.
    pub fn free(algebra: &Arc<Algebra>, r: usize) -> Module {
        let n = algebra.rank();
        let ring = algebra.base();
        let regular: Vec<Mat> = (0..n)
            .map(|a| Mat::from_fn(n, n, |k, b| algebra.structure_constants(a, b)[k].clone()))
            .collect();
        let actions = regular
            .iter()
            .map(|m| {
                let mut out = Mat::zeros(n * r, n * r);
                for blk in 0..r {
                    out.put(blk * n, blk * n, m);
                }
                out.reduce(&ring);
                out
            })
            .collect();
        let orders = vec![BigInt::zero(); n * r];
        Module(Arc::new(ModuleData {
            algebra: algebra.clone(),
            orders,
            actions,
            presentation: OnceLock::new(),
            reduced: OnceLock::new(),
            projective: OnceLock::new(),
        }))
    }

    /// Rank-one module `R/(modulus)` on which basis element `a` acts by the
    /// scalar `values[a]`. With `modulus = 0` this is a free base module.
    pub fn character(algebra: &Arc<Algebra>, modulus: i64, values: &[i64]) -> Result<Module, ModuleError> {
        let actions: Vec<Mat> = values.iter().map(|&v| Mat::from_i64(&[&[v]], 1)).collect();
        let rel = if modulus == 0 { Mat::zeros(0, 1) } else { Mat::from_i64(&[&[modulus]], 1) };
        Ok(Module::from_presentation(algebra.clone(), 1, &rel, &actions)?.module)
    }

    /// Base ring with every group element acting as the identity.
    pub fn trivial(algebra: &Arc<Algebra>) -> Result<Module, ModuleError> {
        Module::trivial_mod(algebra, 0)
    }

    /// `R/(n)` with trivial group action.
    pub fn trivial_mod(algebra: &Arc<Algebra>, n: i64) -> Result<Module, ModuleError> {
        if !algebra.is_group_algebra() {
            return Err(ModuleError::Unsupported("trivial module needs a group algebra".into()));
        }
        Module::character(algebra, n, &vec![1; algebra.rank()])
    }

    /// Sign character of `R[C2]`: `g ↦ -1`.
    pub fn sign(algebra: &Arc<Algebra>) -> Result<Module, ModuleError> {
        let g = algebra
            .group()
            .filter(|g| g.product.len() == 2)
            .ok_or_else(|| ModuleError::Unsupported("sign module needs a group of order 2".into()))?;
        let values: Vec<i64> = (0..2).map(|k| if k == g.identity { 1 } else { -1 }).collect();
        Module::character(algebra, 0, &values)
    }

    /// Base-ring module `⊕ R/(orders)` (rank-1 algebras only; actions are scalar).
    pub fn abelian(algebra: &Arc<Algebra>, orders: &[i64]) -> Result<Module, ModuleError> {
        if algebra.rank() != 1 {
            return Err(ModuleError::Unsupported("abelian constructor needs a rank-1 algebra".into()));
        }
        let g = orders.len();
        let rows: Vec<Vec<i64>> = orders
            .iter()
            .enumerate()
            .filter(|(_, &o)| o != 0)
            .map(|(i, &o)| (0..g).map(|j| if i == j { o } else { 0 }).collect())
            .collect();
        let rel = Mat::from_fn(rows.len(), g, |i, j| BigInt::from(rows[i][j]));
        Ok(Module::from_presentation(algebra.clone(), g, &rel, &[Mat::identity(g)])?.module)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.0.algebra
    }

    pub fn ring(&self) -> BaseRing {
        self.0.algebra.base()
    }

    pub fn gens(&self) -> usize {
        self.0.orders.len()
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.0.orders
    }

    pub fn actions(&self) -> &[Mat] {
        &self.0.actions
    }

    pub fn action(&self, basis: usize) -> &Mat {
        &self.0.actions[basis]
    }

    pub fn is_zero(&self) -> bool {
        self.0.orders.is_empty()
    }

    pub fn same_object(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// `Z/2 ⊕ Z` style description of the underlying group.
    pub fn structure(&self) -> String {
        describe_orders(&self.ring(), &self.0.orders)
    }

    /// Dimension over a prime field; free rank over the integers.
    pub fn free_rank(&self) -> usize {
        self.0.orders.iter().filter(|o| o.is_zero()).count()
    }

    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.0.orders.iter().filter(|o| !o.is_zero()).cloned().collect()
    }

    /// Underlying base module is free (no torsion invariant factors).
    pub fn is_base_free(&self) -> bool {
        self.0.orders.iter().all(Zero::is_zero)
    }

    /// Matrix of left multiplication by the algebra element `x`.
    pub fn element_action(&self, x: &[BigInt]) -> Mat {
        let ring = self.ring();
        let g = self.gens();
        let mut out = Mat::zeros(g, g);
        for (k, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.0.actions[k].scale(c, &ring), &ring);
            }
        }
        reduce_rows(&ring, &self.0.orders, &mut out);
        out
    }

    pub fn reduce(&self, v: &mut [BigInt]) {
        crate::linalg::reduce_vec(&self.ring(), &self.0.orders, v);
    }

    pub fn reduce_matrix(&self, m: &mut Mat) {
        reduce_rows(&self.ring(), &self.0.orders, m);
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        let alg = &self.0.algebra;
        let ring = alg.base();
        let g = self.gens();
        let orders = &self.0.orders;
        if self.0.actions.len() != alg.rank() || self.0.actions.iter().any(|a| a.shape() != (g, g)) {
            return Err(ModuleError::Shape("action matrices do not match generator count".into()));
        }
        let red = |mut m: Mat| {
            reduce_rows(&ring, orders, &mut m);
            m
        };
        for (k, a) in self.0.actions.iter().enumerate() {
            if !well_defined(&ring, orders, orders, a) {
                return Err(ModuleError::ActionNotWellDefined { basis: k });
            }
        }
        if red(self.element_action(alg.unit())) != red(Mat::identity(g)) {
            return Err(ModuleError::UnitAction);
        }
        for a in 0..alg.rank() {
            for b in 0..alg.rank() {
                let lhs = red(self.0.actions[a].mul(&self.0.actions[b], &ring));
                let rhs = self.element_action(alg.structure_constants(a, b));
                if lhs != rhs {
                    return Err(ModuleError::ActionAxiom { a, b });
                }
            }
        }
        Ok(())
    }

    pub(crate) fn presentation_cache(&self) -> &PresentationCache {
        self.0.presentation.get_or_init(|| super::build_free_presentation(self))
    }

    /// Memo for the projectivity test, computed by `test` on first use.
    pub(crate) fn projectivity(&self, test: impl FnOnce() -> bool) -> bool {
        *self.0.projective.get_or_init(test)
    }

    pub(crate) fn reduced_presentation_cache(&self) -> &PresentationCache {
        self.0.reduced.get_or_init(|| super::build_reduced_presentation(self))
    }
}

/// `o_j · F_ij ∈ (o'_i)` for all entries: `F` descends to the quotients.
pub(crate) fn well_defined(ring: &BaseRing, src: &[BigInt], dst: &[BigInt], f: &Mat) -> bool {
    (0..f.rows()).all(|i| {
        (0..f.cols()).all(|j| {
            if src[j].is_zero() {
                return true;
            }
            ring.reduce_mod(&(f.get(i, j) * &src[j]), &dst[i]).is_zero()
        })
    })
}

#[allow(dead_code)]
pub(crate) fn unit_vector(n: usize, k: usize) -> Vector {
    (0..n).map(|i| if i == k { BigInt::one() } else { BigInt::zero() }).collect()
}
