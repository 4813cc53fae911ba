use super::{lift_through_mono, Module, ModuleError, Morphism};

/// Short exact sequence `0 → A --i--> B --p--> C → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ses {
    i: Morphism,
    p: Morphism,
}

impl Ses {
    pub fn new(i: Morphism, p: Morphism) -> Result<Ses, ModuleError> {
        if i.dst() != p.src() {
            return Err(ModuleError::NotExact("middle terms differ".into()));
        }
        if !p.compose(&i).is_zero() {
            return Err(ModuleError::NotExact("p ∘ i ≠ 0".into()));
        }
        if !i.is_mono() {
            return Err(ModuleError::NotExact("i is not injective".into()));
        }
        if !p.is_epi() {
            return Err(ModuleError::NotExact("p is not surjective".into()));
        }
        if lift_through_mono(&i, &p.kernel()).is_none() {
            return Err(ModuleError::NotExact("ker p is larger than im i".into()));
        }
        Ok(Ses { i, p })
    }

    pub(crate) fn new_unchecked(i: Morphism, p: Morphism) -> Ses {
        debug_assert!(Ses::new(i.clone(), p.clone()).is_ok(), "internal sequence not exact");
        Ses { i, p }
    }

    /// `0 → A → B → B/A → 0` from a monomorphism.
    pub fn from_mono(i: Morphism) -> Result<Ses, ModuleError> {
        if !i.is_mono() {
            return Err(ModuleError::NotExact("i is not injective".into()));
        }
        let p = i.cokernel();
        Ok(Ses { i, p })
    }

    /// `0 → ker p → B → C → 0` from an epimorphism.
    pub fn from_epi(p: Morphism) -> Result<Ses, ModuleError> {
        if !p.is_epi() {
            return Err(ModuleError::NotExact("p is not surjective".into()));
        }
        let i = p.kernel();
        Ok(Ses { i, p })
    }

    pub fn left(&self) -> &Module {
        self.i.src()
    }

    pub fn middle(&self) -> &Module {
        self.i.dst()
    }

    pub fn right(&self) -> &Module {
        self.p.dst()
    }

    pub fn mono(&self) -> &Morphism {
        &self.i
    }

    pub fn epi(&self) -> &Morphism {
        &self.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::BaseRing;
    use crate::module_cat::Algebra;

    #[test]
    fn doubling_sequence() {
        let a = Algebra::base_ring(BaseRing::Integers);
        let z = Module::free(&a, 1);
        let two = Morphism::from_i64(&z, &z, &[&[2]]).unwrap();
        let s = Ses::from_mono(two.clone()).unwrap();
        assert_eq!(s.right().structure(), "Z/2");
        assert!(Ses::new(two.clone(), Morphism::identity(&z)).is_err());
        let z4 = Module::abelian(&a, &[4]).unwrap();
        let q = Morphism::from_i64(&z, &z4, &[&[1]]).unwrap();
        // 2Z is not the kernel of Z → Z/4
        assert!(Ses::new(two, q).is_err());
    }
}
