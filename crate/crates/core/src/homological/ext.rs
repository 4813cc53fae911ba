use num_bigint::BigInt;
use num_traits::Zero;

use super::{hom_group, solve_hom_system, HomGroup};
use crate::linalg::{self, BaseRing, Mat, Vector};
use crate::module_cat::{GroupTable, copair, descend_through_epi, describe_orders, dual_op, lift_through_mono, pushout, Module, Morphism, Ses};

/// Free resolution stages `0 → K_j → F_j → K_{j−1} → 0`, `K_{−1} = M`,
/// obtained by iterating the canonical free presentation.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: Module,
    pub stages: Vec<Ses>,
}

pub fn resolution(m: &Module, len: usize) -> Resolution {
    let mut stages: Vec<Ses> = Vec::with_capacity(len);
    for j in 0..len {
        let base = if j == 0 { m.clone() } else { stages[j - 1].left().clone() };
        stages.push(base.free_presentation());
    }
    Resolution { module: m.clone(), stages }
}

/// `i`-th syzygy; `syzygy(M, 0) = M`.
pub fn syzygy(m: &Module, i: usize) -> Module {
    let mut cur = m.clone();
    for _ in 0..i {
        cur = cur.free_presentation().left().clone();
    }
    cur
}

/// `Ext^i(M, N)` as the cokernel of `Hom(F_{i−1}, N) → Hom(K_{i−1}, N)`.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    src: Module,
    dst: Module,
    degree: usize,
    orders: Vec<BigInt>,
    stage: Ses,
    hom_k: HomGroup,
    q: Mat,
    section: Mat,
}

pub fn ext(m: &Module, n: &Module, i: usize) -> ExtGroup {
    assert!(i >= 1, "Ext degree must be positive; degree 0 is hom_group");
    ext_on(m, n, i, syzygy(m, i - 1).free_presentation())
}

/// Invariant factors of `Ext^i(M, N)` computed along reduced presentations.
/// Same group as [`ext`], usually much smaller matrices.
pub(crate) fn ext_orders(m: &Module, n: &Module, i: usize) -> Vec<BigInt> {
    assert!(i >= 1, "Ext degree must be positive; degree 0 is hom_group");
    let mut cur = m.clone();
    for _ in 1..i {
        cur = cur.reduced_presentation().left().clone();
    }
    ext_on(m, n, i, cur.reduced_presentation()).orders
}

fn ext_on(m: &Module, n: &Module, i: usize, stage: Ses) -> ExtGroup {
    let ring = m.ring();
    let incl = stage.mono();
    let hom_k = hom_group(stage.left(), n);
    let hom_f = hom_group(stage.middle(), n);
    let cols: Vec<Vector> = hom_f.basis().iter().map(|phi| hom_k.coordinates(&phi.compose(incl))).collect();
    let restriction = Mat::from_columns(hom_k.orders().len(), &cols);
    let quo = linalg::cokernel(&ring, hom_k.orders(), &restriction);
    ExtGroup {
        src: m.clone(),
        dst: n.clone(),
        degree: i,
        orders: quo.orders,
        stage,
        hom_k,
        q: quo.q,
        section: quo.section,
    }
}

impl ExtGroup {
    pub fn src(&self) -> &Module {
        &self.src
    }

    pub fn dst(&self) -> &Module {
        &self.dst
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Canonical invariant factors.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.orders
    }

    pub fn is_zero(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn structure(&self) -> String {
        describe_orders(&self.src.ring(), &self.orders)
    }

    /// The resolution stage `0 → K → F → K' → 0` the classes live on.
    pub fn stage(&self) -> &Ses {
        &self.stage
    }

    /// Cocycle `K → N` representing generator `t`.
    pub fn cocycle(&self, class: &[BigInt]) -> Morphism {
        let ring = self.src.ring();
        let v = self.section.mul_vec(class, &ring);
        self.hom_k.element(&v)
    }

    pub fn cocycle_basis(&self) -> Vec<Morphism> {
        (0..self.orders.len()).map(|t| self.cocycle(&crate::module_cat::unit_vector(self.orders.len(), t))).collect()
    }

    /// Class of a cocycle `K → N`.
    pub fn class_of(&self, cocycle: &Morphism) -> Vector {
        let ring = self.src.ring();
        let mut c = self.q.mul_vec(&self.hom_k.coordinates(cocycle), &ring);
        linalg::reduce_vec(&ring, &self.orders, &mut c);
        c
    }

    pub fn is_zero_class(&self, class: &[BigInt]) -> bool {
        class.iter().all(Zero::is_zero)
    }
}

/// Map out of `free_module(A, r)` sending the unit of block `j` to `values[j]`.
pub fn map_from_free(free: &Module, dst: &Module, values: &[Vector]) -> Morphism {
    let k = free.algebra().rank();
    let ring = dst.ring();
    let mut f = Mat::zeros(dst.gens(), free.gens());
    for (j, v) in values.iter().enumerate() {
        for b in 0..k {
            let img = dst.action(b).mul_vec(v, &ring);
            for (i, x) in img.into_iter().enumerate() {
                f.set(i, j * k + b, x);
            }
        }
    }
    Morphism::new_unchecked(free, dst, f)
}

/// Lift `h: F → C` along an epimorphism `p: B → C`, for `F` the middle of a
/// canonical free presentation (so `F` is free on block units).
pub fn lift_from_free(free: &Module, p: &Morphism, h: &Morphism) -> Option<Morphism> {
    let ring = p.src().ring();
    let k = free.algebra().rank();
    let solver = linalg::GroupSolver::new(&ring, p.matrix(), p.dst().orders());
    let unit = free.algebra().unit();
    let r = free.gens() / k;
    let mut values = Vec::with_capacity(r);
    for j in 0..r {
        let mut x = vec![BigInt::zero(); free.gens()];
        x[j * k..(j + 1) * k].clone_from_slice(unit);
        values.push(solver.solve(&h.apply(&x))?);
    }
    let lift = map_from_free(free, p.src(), &values);
    (p.compose(&lift) == *h).then_some(lift)
}

/// Class of `0 → A → B → C → 0` in `Ext¹(C, A)`.
pub fn ses_class(s: &Ses) -> (ExtGroup, Vector) {
    let e = ext(s.right(), s.left(), 1);
    let pres = e.stage();
    let beta = lift_from_free(pres.middle(), s.epi(), pres.epi()).expect("free modules are projective");
    let restricted = beta.compose(pres.mono());
    let phi = lift_through_mono(s.mono(), &restricted).expect("restriction lands in ker p = im i");
    let c = e.class_of(&phi);
    (e, c)
}

/// Extension `0 → A → P → C → 0` represented by `class ∈ Ext¹(C, A)`.
pub fn class_ses(e: &ExtGroup, class: &[BigInt]) -> Ses {
    assert_eq!(e.degree(), 1, "extensions realize degree-1 classes");
    let phi = e.cocycle(class);
    let pres = e.stage();
    let po = pushout(pres.mono(), &phi);
    let to_c = copair(&po.sum, &[pres.epi().clone(), Morphism::zero(e.dst(), e.src())]);
    let p = descend_through_epi(&po.quotient, &to_c).expect("copair vanishes on the pushout relations");
    Ses::new_unchecked(po.from_right, p)
}

/// A section `s: C → B` with `p∘s = id`, if one exists.
pub fn is_split(s: &Ses) -> Option<Morphism> {
    let c = s.right();
    let unknowns = [hom_group(c, s.middle())];
    let equations = [hom_group(c, c)];
    let p = s.epi();
    solve_hom_system(&unknowns, &equations, |_, b| vec![(0, p.compose(b))], &[Morphism::identity(c)])
        .map(|mut v| v.remove(0))
}

/// Over the integers a module with torsion is never projective (the algebra
/// is free over `Z`). Over a group algebra Higman's criterion decides:
/// `M` is projective iff `id = Σ_g g∘θ∘g⁻¹` for some base-linear `θ`.
/// Otherwise a free presentation must split; the reduced one is used, any
/// presentation splits iff the canonical one does.
pub fn is_projective(m: &Module) -> bool {
    m.projectivity(|| {
        if m.is_zero() {
            return true;
        }
        if m.ring() == BaseRing::Integers && m.orders().iter().any(|o| !o.is_zero()) {
            return false;
        }
        match m.algebra().group() {
            Some(g) => higman(m, g),
            None => is_split(&m.reduced_presentation()).is_some(),
        }
    })
}

fn higman(m: &Module, group: &GroupTable) -> bool {
    let ring = m.ring();
    let d = m.gens();
    let mut coeffs = vec![BigInt::zero(); d * d * d * d];
    for (g, &g_inv) in group.inverse.iter().enumerate() {
        let (a, b) = (m.action(g), m.action(g_inv));
        // (g θ g⁻¹)[r, c] = Σ a[r, i] θ[i, j] b[j, c]
        for r in 0..d {
            for i in 0..d {
                let x = a.get(r, i);
                if x.is_zero() {
                    continue;
                }
                for j in 0..d {
                    for c in 0..d {
                        let y = b.get(j, c);
                        if !y.is_zero() {
                            coeffs[(r * d + c) * d * d + i * d + j] += x * y;
                        }
                    }
                }
            }
        }
    }
    let sys = Mat::from_vec(d * d, d * d, coeffs.iter().map(|x| ring.reduce(x)).collect());
    let id: Vector = (0..d * d).map(|k| BigInt::from((k / d == k % d) as i64)).collect();
    linalg::solve_linear(&ring, &sys, &id).expect("square system").is_some()
}

/// Over a prime field via the dual over the opposite algebra; over the
/// integers no nonzero finitely generated module is injective.
pub fn is_injective(m: &Module) -> bool {
    match m.ring() {
        BaseRing::PrimeField(_) => is_projective(&dual_op(m).expect("field modules are base-free")),
        BaseRing::Integers => m.is_zero(),
    }
}

/// Projectivity of a `d`-th syzygy does not depend on the resolution, so
/// the reduced presentations are iterated.
pub fn proj_dim_at_most(m: &Module, d: usize) -> bool {
    let mut cur = m.clone();
    for _ in 0..d {
        if is_projective(&cur) {
            return true;
        }
        cur = cur.reduced_presentation().left().clone();
    }
    is_projective(&cur)
}

/// Least `d ≤ d_max` with `pd M ≤ d`.
pub fn projective_dimension(m: &Module, d_max: usize) -> Option<usize> {
    let mut cur = m.clone();
    for d in 0..=d_max {
        if is_projective(&cur) {
            return Some(d);
        }
        cur = cur.reduced_presentation().left().clone();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::module_catalog;
    use crate::module_cat::Algebra;

    #[test]
    fn reduced_orders_match_canonical_ext() {
        for (alg, bound) in [
            (Algebra::cyclic_group(BaseRing::PrimeField(2), 2), 3),
            (Algebra::cyclic_group(BaseRing::Integers, 2), 2),
            (Algebra::base_ring(BaseRing::Integers), 3),
        ] {
            let mods = module_catalog(&alg, bound).unwrap().modules();
            for m in mods.iter().take(8) {
                for n in mods.iter().take(8) {
                    for i in 1..=2 {
                        assert_eq!(ext_orders(m, n, i), ext(m, n, i).invariant_factors(), "{} {} {i}", m.structure(), n.structure());
                    }
                }
            }
        }
    }
}
