use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ModuleError;
use crate::linalg::{BaseRing, Vector};

/// Group data for algebras whose basis is a finite group under multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub identity: usize,
    pub product: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
}

/// Finite-rank algebra over the base ring, free on its basis, given by
/// structure constants: `e_a · e_b = Σ_k mult[a][b][k] e_k`.
#[derive(Clone)]
pub struct Algebra {
    base: BaseRing,
    rank: usize,
    mult: Vec<Vec<Vector>>,
    unit: Vector,
    labels: Vec<String>,
    name: String,
    group: Option<GroupTable>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.rank == other.rank && self.mult == other.mult && self.unit == other.unit
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({})", self.name)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl Algebra {
    /// Validate a multiplication table; rejects non-associative or non-unital tables.
    pub fn new(
        base: BaseRing,
        mult: Vec<Vec<Vector>>,
        unit: Vector,
        labels: Option<Vec<String>>,
        name: impl Into<String>,
    ) -> Result<Arc<Algebra>, ModuleError> {
        let n = unit.len();
        if n == 0 {
            return Err(ModuleError::Shape("algebra rank must be at least 1".into()));
        }
        if mult.len() != n || mult.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(ModuleError::Shape(format!("multiplication table must be {n}x{n}x{n}")));
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("e{i}")).collect());
        if labels.len() != n {
            return Err(ModuleError::Shape("one label per basis element".into()));
        }
        let reduce = |v: &Vector| v.iter().map(|x| base.reduce(x)).collect::<Vector>();
        let mult: Vec<Vec<Vector>> = mult.iter().map(|row| row.iter().map(reduce).collect()).collect();
        let unit = reduce(&unit);
        let mut alg = Algebra { base, rank: n, mult, unit, labels, name: name.into(), group: None };
        alg.check_axioms()?;
        alg.group = alg.detect_group();
        Ok(Arc::new(alg))
    }

    fn check_axioms(&self) -> Result<(), ModuleError> {
        let n = self.rank;
        for a in 0..n {
            let ea = self.basis(a);
            if self.mul(&self.unit, &ea) != ea || self.mul(&ea, &self.unit) != ea {
                return Err(ModuleError::UnitViolation { basis: a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = &self.mult[a][b];
                for c in 0..n {
                    let left = self.mul(ab, &self.basis(c));
                    let right = self.mul(&self.basis(a), &self.mult[b][c]);
                    if left != right {
                        return Err(ModuleError::Associativity { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    fn detect_group(&self) -> Option<GroupTable> {
        let n = self.rank;
        let single = |v: &Vector| -> Option<usize> {
            let nz: Vec<usize> = (0..n).filter(|&k| !v[k].is_zero()).collect();
            (nz.len() == 1 && v[nz[0]].is_one()).then(|| nz[0])
        };
        let identity = single(&self.unit)?;
        let mut product = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                product[a][b] = single(&self.mult[a][b])?;
            }
        }
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| product[a][b] == identity && product[b][a] == identity))
            .collect::<Option<Vec<_>>>()?;
        Some(GroupTable { identity, product, inverse })
    }

    /// The base ring itself, as a rank-1 algebra.
    pub fn base_ring(base: BaseRing) -> Arc<Algebra> {
        let one = vec![BigInt::one()];
        Algebra::new(base, vec![vec![one.clone()]], one, Some(vec!["1".into()]), base.to_string())
            .expect("rank-1 table is valid")
    }

    /// Group algebra from a Cayley table (`product[a][b]` = index of `a·b`).
    pub fn group_algebra(
        base: BaseRing,
        product: &[Vec<usize>],
        labels: Vec<String>,
        name: impl Into<String>,
    ) -> Result<Arc<Algebra>, ModuleError> {
        let n = product.len();
        let basis = |k: usize| (0..n).map(|i| BigInt::from((i == k) as i64)).collect::<Vector>();
        let mult = product.iter().map(|row| row.iter().map(|&k| basis(k)).collect()).collect();
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| product[e][a] == a && product[a][e] == a))
            .ok_or_else(|| ModuleError::Shape("group table has no identity".into()))?;
        Algebra::new(base, mult, basis(identity), Some(labels), name)
    }

    /// `R[C_n]` with basis `1, g, …, g^{n-1}`.
    pub fn cyclic_group(base: BaseRing, n: usize) -> Arc<Algebra> {
        let product: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        Algebra::group_algebra(base, &product, labels, format!("{base}[C{n}]")).expect("cyclic table is valid")
    }

    /// Upper-triangular 2×2 matrices, basis `e11, e12, e22`.
    pub fn upper_triangular(base: BaseRing) -> Arc<Algebra> {
        let e = |k: usize| (0..3).map(|i| BigInt::from((i == k) as i64)).collect::<Vector>();
        let z = || vec![BigInt::zero(); 3];
        // e11 e11 = e11, e11 e12 = e12, e12 e22 = e12, e22 e22 = e22
        let mult = vec![vec![e(0), e(1), z()], vec![z(), z(), e(1)], vec![z(), z(), e(2)]];
        let unit = vec![BigInt::one(), BigInt::zero(), BigInt::one()];
        Algebra::new(base, mult, unit, Some(vec!["e11".into(), "e12".into(), "e22".into()]), format!("T2({base})"))
            .expect("triangular table is valid")
    }

    pub fn opposite(&self) -> Arc<Algebra> {
        let n = self.rank;
        let mult = (0..n).map(|a| (0..n).map(|b| self.mult[b][a].clone()).collect()).collect();
        let name = match self.name.strip_suffix("^op") {
            Some(s) => s.to_string(),
            None => format!("{}^op", self.name),
        };
        Algebra::new(self.base, mult, self.unit.clone(), Some(self.labels.clone()), name)
            .expect("opposite of a valid algebra is valid")
    }

    pub fn base(&self) -> BaseRing {
        self.base
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn structure_constants(&self, a: usize, b: usize) -> &Vector {
        &self.mult[a][b]
    }

    pub fn group(&self) -> Option<&GroupTable> {
        self.group.as_ref()
    }

    pub fn is_group_algebra(&self) -> bool {
        self.group.is_some()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.rank).all(|a| (0..self.rank).all(|b| self.mult[a][b] == self.mult[b][a]))
    }

    pub fn basis(&self, k: usize) -> Vector {
        (0..self.rank).map(|i| BigInt::from((i == k) as i64)).collect()
    }

    /// Index of a basis element equal to the unit, if any.
    pub fn unit_index(&self) -> Option<usize> {
        (0..self.rank).find(|&k| self.basis(k) == self.unit)
    }

    pub fn mul(&self, x: &[BigInt], y: &[BigInt]) -> Vector {
        let n = self.rank;
        let mut out = vec![BigInt::zero(); n];
        for a in 0..n {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..n {
                if y[b].is_zero() {
                    continue;
                }
                let c = &x[a] * &y[b];
                for (o, m) in out.iter_mut().zip(&self.mult[a][b]) {
                    if !m.is_zero() {
                        *o += &c * m;
                    }
                }
            }
        }
        out.iter().map(|v| self.base.reduce(v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_is_detected() {
        let a = Algebra::cyclic_group(BaseRing::PrimeField(2), 2);
        let g = a.group().unwrap();
        assert_eq!(g.identity, 0);
        assert_eq!(g.inverse, vec![0, 1]);
        assert!(a.is_commutative());
    }

    #[test]
    fn base_ring_is_rank_one() {
        let z = Algebra::base_ring(BaseRing::Integers);
        assert_eq!(z.rank(), 1);
        assert!(z.is_group_algebra());
    }

    #[test]
    fn unit_violation_rejected() {
        // e·e = 0 with unit e
        let err = Algebra::new(
            BaseRing::Integers,
            vec![vec![vec![BigInt::zero()]]],
            vec![BigInt::one()],
            None,
            "bad",
        )
        .unwrap_err();
        assert_eq!(err, ModuleError::UnitViolation { basis: 0 });
    }

    #[test]
    fn non_associative_rejected() {
        // basis {1, x, y}: x·y = x, y·x = y, x·x = y·y = 0, so (x·y)·x = 0 ≠ x = x·(y·x)
        let e = |k: usize| (0..3).map(|i| BigInt::from((i == k) as i64)).collect::<Vector>();
        let z = || vec![BigInt::zero(); 3];
        let mult = vec![vec![e(0), e(1), e(2)], vec![e(1), z(), e(1)], vec![e(2), e(2), z()]];
        let err = Algebra::new(BaseRing::Integers, mult, e(0), None, "bad").unwrap_err();
        assert!(matches!(err, ModuleError::Associativity { .. }), "{err:?}");
    }

    #[test]
    fn triangular_is_not_commutative() {
        let t = Algebra::upper_triangular(BaseRing::PrimeField(2));
        assert!(!t.is_commutative());
        assert!(!t.is_group_algebra());
        assert_ne!(*t, *t.opposite());
        assert_eq!(*t, *t.opposite().opposite());
    }
}
