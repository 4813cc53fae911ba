//! Diagonally presented groups `⊕ R/(oᵢ)` over the base ring and maps between
//! them. An order of `0` is a free summand. Maps are matrices acting on
//! column vectors; a matrix `F` is a valid map `⊕R/(oⱼ) → ⊕R/(o'ᵢ)` when
//! `oⱼ·Fᵢⱼ ∈ (o'ᵢ)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::snf::{smith_normal_form, solve_with, Snf};
use super::{BaseRing, Mat, Vector};

pub fn reduce_vec(ring: &BaseRing, orders: &[BigInt], v: &mut [BigInt]) {
    for (x, o) in v.iter_mut().zip(orders) {
        *x = ring.reduce_mod(x, o);
    }
}

/// Reduce row `i` of `m` modulo `orders[i]`.
pub fn reduce_rows(ring: &BaseRing, orders: &[BigInt], m: &mut Mat) {
    assert_eq!(orders.len(), m.rows(), "row count vs orders");
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let x = ring.reduce_mod(m.get(i, j), &orders[i]);
            m.set(i, j, x);
        }
    }
}

/// `[A | diag(nonzero orders)]`: the relation columns of the target appended.
fn with_order_columns(ring: &BaseRing, a: &Mat, orders: &[BigInt]) -> Mat {
    let extra: Vec<usize> = orders.iter().enumerate().filter(|(_, o)| !ring.is_zero(o)).map(|(i, _)| i).collect();
    let mut rel = Mat::zeros(a.rows(), extra.len());
    for (c, &i) in extra.iter().enumerate() {
        rel.set(i, c, orders[i].clone());
    }
    a.hstack(&rel)
}

/// Canonical form of `R^n / span(relations)`.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// Invariant factors `d₁ | d₂ | …` (non-units) followed by zeros for the free part.
    pub orders: Vec<BigInt>,
    /// `k × n` projection onto canonical coordinates.
    pub q: Mat,
    /// `n × k` lift of canonical generators; `q·section = id` modulo `orders`.
    pub section: Mat,
}

pub fn quotient(ring: &BaseRing, n: usize, relations: &Mat) -> Quotient {
    assert_eq!(relations.rows(), n, "relation vectors live in R^n");
    let snf = smith_normal_form(ring, relations);
    let mut kept = Vec::new();
    let mut orders = Vec::new();
    for i in 0..n {
        let d = if i < snf.rank { snf.diag[i].clone() } else { BigInt::zero() };
        if !ring.is_unit(&d) {
            kept.push(i);
            orders.push(ring.normalize_order(&d));
        }
    }
    let mut q = snf.u.select_rows(&kept);
    reduce_rows(ring, &orders, &mut q);
    let section = snf.u_inv.select_cols(&kept);
    Quotient { orders, q, section }
}

/// Subgroup of `⊕R/(orders)` generated by the columns of `gens`: returns the
/// canonical orders of the subgroup and its inclusion matrix.
pub fn subgroup(ring: &BaseRing, orders: &[BigInt], gens: &Mat) -> (Vec<BigInt>, Mat) {
    let s = gens.cols();
    let sys = with_order_columns(ring, gens, orders);
    let snf = smith_normal_form(ring, &sys);
    let null_idx: Vec<usize> = (snf.rank..sys.cols()).collect();
    let null = snf.v.select_cols(&null_idx);
    let rel = null.submatrix(0, 0, s, null.cols());
    let quo = quotient(ring, s, &rel);
    let mut incl = gens.mul(&quo.section, ring);
    reduce_rows(ring, orders, &mut incl);
    (quo.orders, incl)
}

/// Kernel of `f : ⊕R/(src) → ⊕R/(dst)` as a canonical group with inclusion.
pub fn kernel(ring: &BaseRing, src: &[BigInt], dst: &[BigInt], f: &Mat) -> (Vec<BigInt>, Mat) {
    assert_eq!(f.shape(), (dst.len(), src.len()), "kernel: map shape");
    let g = src.len();
    let sys = with_order_columns(ring, f, dst);
    let snf = smith_normal_form(ring, &sys);
    let null_idx: Vec<usize> = (snf.rank..sys.cols()).collect();
    let gens = snf.v.select_cols(&null_idx).submatrix(0, 0, g, null_idx.len());
    subgroup(ring, src, &gens)
}

/// Cokernel of `f` into `⊕R/(dst)`.
pub fn cokernel(ring: &BaseRing, dst: &[BigInt], f: &Mat) -> Quotient {
    let rel = with_order_columns(ring, f, dst);
    quotient(ring, dst.len(), &rel)
}

/// Repeated solving of `F·x ≡ y (mod dst orders)` against one factorization.
#[derive(Clone, Debug)]
pub struct GroupSolver {
    ring: BaseRing,
    cols: usize,
    snf: Snf,
}

impl GroupSolver {
    pub fn new(ring: &BaseRing, f: &Mat, dst: &[BigInt]) -> Self {
        let sys = with_order_columns(ring, f, dst);
        GroupSolver { ring: *ring, cols: f.cols(), snf: smith_normal_form(ring, &sys) }
    }

    pub fn solve(&self, y: &[BigInt]) -> Option<Vector> {
        let mut x = solve_with(&self.ring, &self.snf, y)?;
        x.truncate(self.cols);
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn quotient_z2_plus_z3_is_cyclic() {
        let z = BaseRing::Integers;
        let q = quotient(&z, 2, &Mat::from_i64(&[&[2, 0], &[0, 3]], 2));
        assert_eq!(q.orders, ints(&[6]));
    }

    #[test]
    fn quotient_orders_canonical() {
        let z = BaseRing::Integers;
        let q = quotient(&z, 3, &Mat::from_i64(&[&[4, 0], &[0, 2], &[0, 0]], 2));
        assert_eq!(q.orders, ints(&[2, 4, 0]));
        // q·section = id modulo the orders
        let mut p = q.q.mul(&q.section, &z);
        reduce_rows(&z, &q.orders, &mut p);
        assert_eq!(p, Mat::identity(3));
    }

    #[test]
    fn kernel_of_doubling_on_z4() {
        let z = BaseRing::Integers;
        let (orders, incl) = kernel(&z, &ints(&[4]), &ints(&[4]), &Mat::from_i64(&[&[2]], 1));
        assert_eq!(orders, ints(&[2]));
        assert_eq!(incl, Mat::from_i64(&[&[2]], 1));
    }

    #[test]
    fn kernel_of_times_two_on_z_is_zero() {
        let z = BaseRing::Integers;
        let (orders, _) = kernel(&z, &ints(&[0]), &ints(&[0]), &Mat::from_i64(&[&[2]], 1));
        assert!(orders.is_empty());
        let c = cokernel(&z, &ints(&[0]), &Mat::from_i64(&[&[2]], 1));
        assert_eq!(c.orders, ints(&[2]));
    }

    #[test]
    fn solver_modular() {
        let z = BaseRing::Integers;
        let s = GroupSolver::new(&z, &Mat::from_i64(&[&[3]], 1), &ints(&[6]));
        assert!(s.solve(&ints(&[1])).is_none());
        let x = s.solve(&ints(&[3])).unwrap();
        assert_eq!(z.reduce_mod(&(&x[0] * 3 - 3), &BigInt::from(6)), BigInt::zero());
    }
}
