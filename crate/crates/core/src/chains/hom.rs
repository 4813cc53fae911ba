use num_bigint::BigInt;
use num_traits::Zero;

use super::complex::{ChainComplex, ChainMap};
use crate::homological::{hom_group, solve_hom_system, HomGroup};
use crate::linalg::{self, cokernel, kernel, BaseRing, GroupSolver, Mat, Quotient, Vector};
use crate::module_cat::{describe_orders, Morphism};

/// `Hom_Ch(X, Y)` as the subgroup of `⊕_n Hom(X_n, Y_n)` cut out by `d f = f d`.
#[derive(Clone, Debug)]
pub struct ChainHom {
    src: ChainComplex,
    dst: ChainComplex,
    homs: Vec<HomGroup>,
    offsets: Vec<usize>,
    ambient: Vec<BigInt>,
    orders: Vec<BigInt>,
    /// Ambient coordinates of the generators, one column each.
    incl: Mat,
    solver: GroupSolver,
}

fn offsets_of(groups: &[HomGroup]) -> (Vec<usize>, Vec<BigInt>) {
    let mut offsets = Vec::with_capacity(groups.len());
    let mut orders = Vec::new();
    for h in groups {
        offsets.push(orders.len());
        orders.extend(h.orders().iter().cloned());
    }
    (offsets, orders)
}

pub fn chain_hom(x: &ChainComplex, y: &ChainComplex) -> ChainHom {
    let ring = x.algebra().base();
    let degrees: Vec<i64> = x.degrees().collect();
    let homs: Vec<HomGroup> = degrees.iter().map(|&n| hom_group(&x.entry(n), &y.entry(n))).collect();
    let (offsets, ambient) = offsets_of(&homs);
    // constraint in degree n: d^Y_n f_n - f_{n-1} d^X_n ∈ Hom(X_n, Y_{n-1})
    let cons: Vec<HomGroup> = degrees.iter().map(|&n| hom_group(&x.entry(n), &y.entry(n - 1))).collect();
    let (coff, corders) = offsets_of(&cons);
    let mut m = Mat::zeros(corders.len(), ambient.len());
    for (k, &n) in degrees.iter().enumerate() {
        for (b, f) in homs[k].basis().iter().enumerate() {
            let col = offsets[k] + b;
            let own = cons[k].coordinates(&y.d(n).compose(f));
            for (r, c) in own.into_iter().enumerate() {
                *m.get_mut(coff[k] + r, col) += c;
            }
            if k + 1 < degrees.len() {
                let next = cons[k + 1].coordinates(&f.compose(&x.d(n + 1)));
                for (r, c) in next.into_iter().enumerate() {
                    *m.get_mut(coff[k + 1] + r, col) -= c;
                }
            }
        }
    }
    let (orders, incl) = kernel(&ring, &ambient, &corders, &m);
    let solver = GroupSolver::new(&ring, &incl, &ambient);
    ChainHom { src: x.clone(), dst: y.clone(), homs, offsets, ambient, orders, incl, solver }
}

impl ChainHom {
    pub fn ring(&self) -> BaseRing {
        self.src.algebra().base()
    }

    pub fn src(&self) -> &ChainComplex {
        &self.src
    }

    pub fn dst(&self) -> &ChainComplex {
        &self.dst
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    pub fn is_zero(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn structure(&self) -> String {
        describe_orders(&self.ring(), &self.orders)
    }

    pub(crate) fn from_ambient(&self, c: &[BigInt]) -> ChainMap {
        let maps: Vec<Morphism> = self
            .homs
            .iter()
            .zip(&self.offsets)
            .map(|(h, &o)| h.element(&c[o..o + h.orders().len()]))
            .collect();
        ChainMap::from_parts(&self.src, &self.dst, maps)
    }

    pub(crate) fn ambient_coordinates(&self, f: &ChainMap) -> Vector {
        let mut out = Vec::with_capacity(self.ambient.len());
        for (k, n) in self.src.degrees().enumerate() {
            out.extend(self.homs[k].coordinates(&f.component(n)));
        }
        out
    }

    pub fn element(&self, coeffs: &[BigInt]) -> ChainMap {
        let ring = self.ring();
        let mut c = self.incl.mul_vec(coeffs, &ring);
        linalg::reduce_vec(&ring, &self.ambient, &mut c);
        self.from_ambient(&c)
    }

    pub fn basis(&self) -> Vec<ChainMap> {
        (0..self.orders.len()).map(|j| self.from_ambient(&self.incl.column(j))).collect()
    }

    pub fn coordinates(&self, f: &ChainMap) -> Vector {
        assert!(f.src() == &self.src && f.dst() == &self.dst, "coordinates: wrong Hom group");
        let mut c = self.solver.solve(&self.ambient_coordinates(f)).expect("chain map lies in the chain Hom group");
        linalg::reduce_vec(&self.ring(), &self.orders, &mut c);
        c
    }
}

/// `s_n: X_n → Y_{n+1}` over the window of `X`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainHomotopy {
    pub src: ChainComplex,
    pub dst: ChainComplex,
    pub maps: Vec<Morphism>,
}

impl ChainHomotopy {
    pub fn component(&self, n: i64) -> Morphism {
        if self.src.in_window(n) {
            self.maps[(n - self.src.lo()) as usize].clone()
        } else {
            Morphism::zero(&self.src.entry(n), &self.dst.entry(n + 1))
        }
    }

    /// The chain map `d s + s d`.
    pub fn boundary(&self) -> ChainMap {
        let maps = self
            .src
            .degrees()
            .map(|n| {
                self.dst.d(n + 1).compose(&self.component(n)).add(&self.component(n - 1).compose(&self.src.d(n)))
            })
            .collect();
        ChainMap::from_parts(&self.src, &self.dst, maps)
    }

    pub fn witnesses(&self, f: &ChainMap) -> bool {
        self.boundary() == *f
    }
}

fn homotopy_groups(x: &ChainComplex, y: &ChainComplex) -> Vec<HomGroup> {
    x.degrees().map(|n| hom_group(&x.entry(n), &y.entry(n + 1))).collect()
}

/// Solve `f_n = d s_n + s_{n-1} d` in every degree.
pub fn null_homotopy(f: &ChainMap) -> Option<ChainHomotopy> {
    let (x, y) = (f.src(), f.dst());
    if x.is_empty() {
        return Some(ChainHomotopy { src: x.clone(), dst: y.clone(), maps: vec![] });
    }
    let lo = x.lo();
    let unknowns = homotopy_groups(x, y);
    let equations: Vec<HomGroup> = x.degrees().map(|n| hom_group(&x.entry(n), &y.entry(n))).collect();
    let targets: Vec<Morphism> = x.degrees().map(|n| f.component(n)).collect();
    let len = x.len();
    let sol = solve_hom_system(
        &unknowns,
        &equations,
        |u, b| {
            let n = lo + u as i64;
            let mut out = vec![(u, y.d(n + 1).compose(b))];
            if u + 1 < len {
                out.push((u + 1, b.compose(&x.d(n + 1))));
            }
            out
        },
        &targets,
    )?;
    let h = ChainHomotopy { src: x.clone(), dst: y.clone(), maps: sol };
    debug_assert!(h.witnesses(f));
    Some(h)
}

/// Homotopy classes `[X, Y] = Hom_Ch(X, Y) / null-homotopic maps`.
#[derive(Clone, Debug)]
pub struct HomotopyClasses {
    pub hom: ChainHom,
    pub quotient: Quotient,
}

pub fn homotopy_classes(x: &ChainComplex, y: &ChainComplex) -> HomotopyClasses {
    let hom = chain_hom(x, y);
    let ring = hom.ring();
    let mut cols: Vec<Vector> = Vec::new();
    if !x.is_empty() {
        for (k, g) in homotopy_groups(x, y).iter().enumerate() {
            let n = x.lo() + k as i64;
            for b in g.basis() {
                let mut maps: Vec<Morphism> = x.degrees().map(|m| Morphism::zero(&x.entry(m), &y.entry(m))).collect();
                maps[k] = y.d(n + 1).compose(b);
                if k + 1 < maps.len() {
                    maps[k + 1] = b.compose(&x.d(n + 1));
                }
                let f = ChainMap::from_parts(x, y, maps);
                cols.push(hom.coordinates(&f));
            }
        }
    }
    let gens = Mat::from_columns(hom.orders().len(), &cols);
    let quotient = cokernel(&ring, hom.orders(), &gens);
    HomotopyClasses { hom, quotient }
}

impl HomotopyClasses {
    pub fn orders(&self) -> &[BigInt] {
        &self.quotient.orders
    }

    pub fn is_zero(&self) -> bool {
        self.quotient.orders.is_empty()
    }

    pub fn structure(&self) -> String {
        describe_orders(&self.hom.ring(), &self.quotient.orders)
    }

    pub fn class_of(&self, f: &ChainMap) -> Vector {
        let ring = self.hom.ring();
        let mut v = self.quotient.q.mul_vec(&self.hom.coordinates(f), &ring);
        linalg::reduce_vec(&ring, &self.quotient.orders, &mut v);
        v
    }

    pub fn is_null(&self, f: &ChainMap) -> bool {
        self.class_of(f).iter().all(Zero::is_zero)
    }
}
