use num_bigint::BigInt;
use num_traits::Zero;

use super::{Module, ModuleError, Morphism};
use crate::linalg::Mat;

/// `M ⊗ N` over the base ring with diagonal group action, together with the
/// change of coordinates from the pair basis `e_i ⊗ f_j` (index `i·|N| + j`).
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub module: Module,
    pub left: Module,
    pub right: Module,
    to_canonical: Mat,
    from_canonical: Mat,
}

pub fn tensor_diagonal(m: &Module, n: &Module) -> Result<TensorProduct, ModuleError> {
    let alg = m.algebra();
    if **alg != **n.algebra() {
        return Err(ModuleError::AlgebraMismatch);
    }
    if !alg.is_group_algebra() {
        return Err(ModuleError::Unsupported(format!("tensor over {} needs a group algebra", alg.name())));
    }
    let ring = m.ring();
    let (gm, gn) = (m.gens(), n.gens());
    let mut rel_rows = Vec::new();
    for i in 0..gm {
        for j in 0..gn {
            let o = ring.gcd(&m.orders()[i], &n.orders()[j]);
            if !o.is_zero() {
                let mut row = vec![BigInt::zero(); gm * gn];
                row[i * gn + j] = o;
                rel_rows.push(row);
            }
        }
    }
    let rel = Mat::from_fn(rel_rows.len(), gm * gn, |r, c| rel_rows[r][c].clone());
    let actions: Vec<Mat> = (0..alg.rank()).map(|k| m.action(k).kron(n.action(k), &ring)).collect();
    let pres = Module::from_presentation(alg.clone(), gm * gn, &rel, &actions)?;
    Ok(TensorProduct {
        module: pres.module,
        left: m.clone(),
        right: n.clone(),
        to_canonical: pres.to_canonical,
        from_canonical: pres.from_canonical,
    })
}

impl TensorProduct {
    /// `f ⊗ g : self → target`.
    pub fn map(&self, target: &TensorProduct, f: &Morphism, g: &Morphism) -> Morphism {
        assert!(f.src() == &self.left && g.src() == &self.right, "tensor map: sources");
        assert!(f.dst() == &target.left && g.dst() == &target.right, "tensor map: targets");
        let ring = self.module.ring();
        let k = f.matrix().kron(g.matrix(), &ring);
        let mat = target.to_canonical.mul(&k, &ring).mul(&self.from_canonical, &ring);
        Morphism::new_unchecked(&self.module, &target.module, mat)
    }

    /// Canonical coordinates of `e_i ⊗ f_j`.
    pub fn pure_tensor(&self, i: usize, j: usize) -> Vec<BigInt> {
        let mut v = self.to_canonical.column(i * self.right.gens() + j);
        self.module.reduce(&mut v);
        v
    }
}

/// Monoidal unit for the diagonal tensor: the base ring with trivial action.
pub fn tensor_unit(alg: &std::sync::Arc<super::Algebra>) -> Result<Module, ModuleError> {
    Module::trivial(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::BaseRing;
    use crate::module_cat::Algebra;

    #[test]
    fn coprime_torsion_vanishes() {
        let z = Algebra::base_ring(BaseRing::Integers);
        let t = tensor_diagonal(&Module::abelian(&z, &[2]).unwrap(), &Module::abelian(&z, &[3]).unwrap()).unwrap();
        assert!(t.module.is_zero());
        let t = tensor_diagonal(&Module::abelian(&z, &[4]).unwrap(), &Module::abelian(&z, &[6, 0]).unwrap()).unwrap();
        assert_eq!(t.module.structure(), "Z/2 ⊕ Z/4");
    }

    #[test]
    fn unit_law_and_free_absorption() {
        let a = Algebra::cyclic_group(BaseRing::PrimeField(2), 2);
        let k = Module::trivial(&a).unwrap();
        let f = Module::free(&a, 1);
        assert_eq!(tensor_diagonal(&k, &f).unwrap().module, f);
        let t = tensor_diagonal(&f, &k).unwrap();
        assert_eq!(t.module, f);
        let ff = tensor_diagonal(&f, &f).unwrap();
        assert_eq!(ff.module.gens(), 4);
    }
}
