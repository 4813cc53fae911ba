use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::linalg::{self, quotient, BaseRing, GroupSolver, Mat, Vector};
use crate::module_cat::{describe_orders, Module, Morphism};

/// `Hom_A(M, N)` as a group `⊕ R/(orders)` with one basis morphism per
/// coordinate generator.
#[derive(Clone, Debug)]
pub struct HomGroup {
    src: Module,
    dst: Module,
    orders: Vec<BigInt>,
    basis: Vec<Morphism>,
    coords: Coords,
}

#[derive(Clone, Debug)]
enum Coords {
    /// Entry-wise parametrization: `F_ij = y_p · gen_p`, then `y = incl · c`.
    Entries { pairs: Vec<(usize, usize, BigInt)>, solver: GroupSolver },
    /// Source free of rank `r`: a map is its values on the block units.
    Free { rank: usize },
}

pub fn hom_group(m: &Module, n: &Module) -> HomGroup {
    assert!(**m.algebra() == **n.algebra(), "hom_group: algebras differ");
    if let Some(rank) = free_rank_of(m) {
        return hom_from_free(m, n, rank);
    }
    let ring = m.ring();
    let (gm, gn) = (m.gens(), n.gens());
    // base Hom: one cyclic coordinate per admissible entry
    let mut pairs = Vec::new();
    let mut pair_orders = Vec::new();
    for i in 0..gn {
        for j in 0..gm {
            let (oj, oi) = (&m.orders()[j], &n.orders()[i]);
            if oi.is_zero() {
                if oj.is_zero() {
                    pairs.push((i, j, BigInt::one()));
                    pair_orders.push(BigInt::zero());
                }
            } else {
                let h = ring.gcd(oj, oi);
                if ring.is_unit(&h) {
                    continue;
                }
                let g = if oj.is_zero() { BigInt::one() } else { oi / &h };
                pairs.push((i, j, g));
                pair_orders.push(h);
            }
        }
    }
    // linearity: F·A_a − B_a·F = 0 for every basis element acting nontrivially
    let alg = m.algebra();
    let active: Vec<usize> = (0..alg.rank()).filter(|&a| Some(a) != alg.unit_index()).collect();
    let mut rows: Vec<Vector> = Vec::new();
    let mut row_orders = Vec::new();
    for &a in &active {
        let (am, an) = (m.action(a), n.action(a));
        for i in 0..gn {
            for j in 0..gm {
                let row: Vector = pairs
                    .iter()
                    .map(|(pi, pj, g)| {
                        // coefficient of y_p in (E_{pi,pj} A − B E_{pi,pj})_{ij}
                        let mut c = BigInt::zero();
                        if *pi == i {
                            c += am.get(*pj, j);
                        }
                        if *pj == j {
                            c -= an.get(i, *pi);
                        }
                        ring.reduce(&(c * g))
                    })
                    .collect();
                rows.push(row);
                row_orders.push(n.orders()[i].clone());
            }
        }
    }
    let constraint = Mat::from_fn(rows.len(), pairs.len(), |r, c| rows[r][c].clone());
    let (orders, incl) = linalg::kernel(&ring, &pair_orders, &row_orders, &constraint);
    let basis = (0..orders.len())
        .map(|t| {
            let mut f = Mat::zeros(gn, gm);
            for (p, (i, j, g)) in pairs.iter().enumerate() {
                let v = incl.get(p, t);
                if !v.is_zero() {
                    let cur = f.get(*i, *j) + v * g;
                    f.set(*i, *j, cur);
                }
            }
            Morphism::new_unchecked(m, n, f)
        })
        .collect();
    let solver = GroupSolver::new(&ring, &incl, &pair_orders);
    HomGroup { src: m.clone(), dst: n.clone(), orders, basis, coords: Coords::Entries { pairs, solver } }
}

/// `Some(r)` when `m` is literally `free_module(A, r)`.
fn free_rank_of(m: &Module) -> Option<usize> {
    let n = m.algebra().rank();
    if !m.gens().is_multiple_of(n) || !m.is_base_free() {
        return None;
    }
    let r = m.gens() / n;
    (*m == Module::free(m.algebra(), r)).then_some(r)
}

fn hom_from_free(m: &Module, n: &Module, rank: usize) -> HomGroup {
    let alg = m.algebra();
    let k = alg.rank();
    let g = n.gens();
    let mut orders = Vec::with_capacity(rank * g);
    let mut basis = Vec::with_capacity(rank * g);
    for j in 0..rank {
        for t in 0..g {
            orders.push(n.orders()[t].clone());
            let mut f = Mat::zeros(g, rank * k);
            for b in 0..k {
                for i in 0..g {
                    f.set(i, j * k + b, n.action(b).get(i, t).clone());
                }
            }
            basis.push(Morphism::new_unchecked(m, n, f));
        }
    }
    HomGroup { src: m.clone(), dst: n.clone(), orders, basis, coords: Coords::Free { rank } }
}

impl HomGroup {
    pub fn src(&self) -> &Module {
        &self.src
    }

    pub fn dst(&self) -> &Module {
        &self.dst
    }

    pub fn ring(&self) -> BaseRing {
        self.src.ring()
    }

    /// Orders of the coordinate generators (not necessarily canonical).
    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    pub fn basis(&self) -> &[Morphism] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.orders.iter().all(|o| self.ring().is_unit(o))
    }

    /// Canonical invariant factors of the group.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        canonical_orders(&self.ring(), &self.orders)
    }

    pub fn structure(&self) -> String {
        describe_orders(&self.ring(), &self.invariant_factors())
    }

    pub fn element(&self, coeffs: &[BigInt]) -> Morphism {
        let mut acc = Morphism::zero(&self.src, &self.dst);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }

    /// Coordinates of `f` (reduced modulo the generator orders).
    pub fn coordinates(&self, f: &Morphism) -> Vector {
        assert!(f.src() == &self.src && f.dst() == &self.dst, "coordinates: wrong Hom group");
        let ring = self.ring();
        let mut c = match &self.coords {
            Coords::Free { rank } => {
                let k = self.src.algebra().rank();
                let unit = self.src.algebra().unit();
                let mut out = Vec::with_capacity(rank * self.dst.gens());
                for j in 0..*rank {
                    let mut x = vec![BigInt::zero(); rank * k];
                    x[j * k..(j + 1) * k].clone_from_slice(unit);
                    out.extend(f.apply(&x));
                }
                out
            }
            Coords::Entries { pairs, solver } => {
                let y: Vector = pairs
                    .iter()
                    .map(|(i, j, g)| {
                        let v = f.matrix().get(*i, *j);
                        if g.is_one() {
                            v.clone()
                        } else {
                            let (q, r) = v.div_rem(g);
                            debug_assert!(r.is_zero(), "entry not a multiple of its generator");
                            q
                        }
                    })
                    .collect();
                solver.solve(&y).expect("morphism lies in the Hom group")
            }
        };
        linalg::reduce_vec(&ring, &self.orders, &mut c);
        c
    }

    /// Every element, when the group is finite and has at most `limit` elements.
    pub fn enumerate(&self, limit: usize) -> Option<Vec<Morphism>> {
        let ring = self.ring();
        let sizes: Vec<usize> = self
            .orders
            .iter()
            .map(|o| {
                let o = if o.is_zero() { BigInt::from(ring.modulus()?) } else { o.clone() };
                usize::try_from(o).ok()
            })
            .collect::<Option<_>>()?;
        let total = sizes.iter().try_fold(1usize, |acc, s| acc.checked_mul(*s))?;
        if total > limit {
            return None;
        }
        let mut out = Vec::with_capacity(total);
        for mut idx in 0..total {
            let coeffs: Vector = sizes
                .iter()
                .map(|s| {
                    let c = idx % s;
                    idx /= s;
                    BigInt::from(c)
                })
                .collect();
            out.push(self.element(&coeffs));
        }
        Some(out)
    }
}

pub(crate) fn canonical_orders(ring: &BaseRing, orders: &[BigInt]) -> Vec<BigInt> {
    let n = orders.len();
    let rel = Mat::diagonal(orders);
    quotient(ring, n, &rel).orders
}
