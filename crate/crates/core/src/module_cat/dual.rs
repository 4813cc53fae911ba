use super::{Module, ModuleError, Morphism};

/// `Hom_base(M, base)` with transposed action, a module over the opposite
/// algebra. Defined when the underlying base module is free.
pub fn dual_op(m: &Module) -> Result<Module, ModuleError> {
    if !m.is_base_free() {
        return Err(ModuleError::Unsupported(format!("base dual of {} (torsion)", m.structure())));
    }
    let op = m.algebra().opposite();
    let actions = m.actions().iter().map(|a| a.transpose()).collect();
    Ok(Module::from_parts(op, m.orders().to_vec(), actions))
}

/// Contragredient dual over a group algebra: `(g·φ)(m) = φ(g⁻¹m)`.
pub fn contragredient(m: &Module) -> Result<Module, ModuleError> {
    let alg = m.algebra();
    let group = alg
        .group()
        .ok_or_else(|| ModuleError::Unsupported("contragredient dual needs a group algebra".into()))?;
    if !m.is_base_free() {
        return Err(ModuleError::Unsupported(format!("base dual of {} (torsion)", m.structure())));
    }
    let actions = (0..alg.rank()).map(|g| m.action(group.inverse[g]).transpose()).collect();
    Ok(Module::from_parts(alg.clone(), m.orders().to_vec(), actions))
}

/// Transpose of `f`, between [`dual_op`] modules.
pub fn dual_map(f: &Morphism, src_dual: &Module, dst_dual: &Module) -> Morphism {
    Morphism::new_unchecked(dst_dual, src_dual, f.matrix().transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::BaseRing;
    use crate::module_cat::Algebra;

    #[test]
    fn double_dual_is_identity() {
        let t = Algebra::upper_triangular(BaseRing::PrimeField(2));
        let p = Module::free(&t, 1);
        let d = dual_op(&p).unwrap();
        assert_ne!(**d.algebra(), *t);
        assert_eq!(dual_op(&d).unwrap(), p);
    }

    #[test]
    fn contragredient_of_sign_is_sign() {
        let a = Algebra::cyclic_group(BaseRing::Integers, 2);
        let s = Module::sign(&a).unwrap();
        assert_eq!(contragredient(&s).unwrap(), s);
        assert!(contragredient(&Module::trivial_mod(&a, 2).unwrap()).is_err());
    }
}
