use std::sync::Arc;

use serde::Serialize;

use super::ModelError;
use crate::cotorsion::{
    check_orthogonality, class_member, is_thick, thickness_samples, ClassDescriptor, CotorsionPair, OrthReport,
    ThickReport, Verdict,
};
use crate::module_cat::{Algebra, Module, Morphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    QuasiFrobenius,
    GorensteinProjective,
    Custom,
}

/// Abelian model structure from two compatible complete cotorsion pairs
/// `(C ∩ W, F)` and `(C, F ∩ W)`.
#[derive(Clone, Debug)]
pub struct ModelStructure {
    pub name: String,
    pub kind: ModelKind,
    pub c: ClassDescriptor,
    pub f: ClassDescriptor,
    pub w: ClassDescriptor,
    pub pair_cw_f: CotorsionPair,
    pub pair_c_fw: CotorsionPair,
    pub validation: Option<Validation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Validation {
    pub thick: ThickReport,
    pub orth_cw_f: OrthReport,
    pub orth_c_fw: OrthReport,
}

/// Verdicts for the five map classes.
#[derive(Clone, Debug, Serialize)]
pub struct MapClass {
    pub cofibration: Verdict,
    pub fibration: Verdict,
    pub acyclic_cofibration: Verdict,
    pub acyclic_fibration: Verdict,
    /// Filled in by [`super::is_weak_equivalence`]; `None` from `classify_map`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weak_equivalence: Option<Verdict>,
}

impl ModelStructure {
    /// Assemble without validation (for synthetic structures).
    pub fn assemble(
        name: impl Into<String>,
        kind: ModelKind,
        c: ClassDescriptor,
        f: ClassDescriptor,
        w: ClassDescriptor,
        pair_cw_f: CotorsionPair,
        pair_c_fw: CotorsionPair,
    ) -> ModelStructure {
        ModelStructure { name: name.into(), kind, c, f, w, pair_cw_f, pair_c_fw, validation: None }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.c.algebra
    }

    pub fn in_c(&self, m: &Module) -> Verdict {
        class_member(&self.c, m)
    }

    pub fn in_f(&self, m: &Module) -> Verdict {
        class_member(&self.f, m)
    }

    pub fn in_w(&self, m: &Module) -> Verdict {
        class_member(&self.w, m)
    }

    pub fn in_cw(&self, m: &Module) -> Verdict {
        let v = self.in_w(m);
        if v.is_no() {
            return v;
        }
        self.in_c(m).and(v)
    }

    pub fn in_fw(&self, m: &Module) -> Verdict {
        let v = self.in_w(m);
        if v.is_no() {
            return v;
        }
        self.in_f(m).and(v)
    }

    /// Quasi-Frobenius structure: `C = F = All`, `W = Projectives`.
    pub fn quasi_frobenius(alg: &Arc<Algebra>) -> ModelStructure {
        ModelStructure::assemble(
            format!("QF({})", alg.name()),
            ModelKind::QuasiFrobenius,
            ClassDescriptor::all(alg),
            ClassDescriptor::all(alg),
            ClassDescriptor::projectives(alg),
            CotorsionPair::projective(alg),
            CotorsionPair::injective(alg),
        )
    }

    /// Gorenstein projective structure: `C = GP`, `F = All`, `W = PdAtMost(d)`.
    pub fn gorenstein_projective(alg: &Arc<Algebra>, d: usize) -> ModelStructure {
        let gp = CotorsionPair::gorenstein(alg, d);
        ModelStructure::assemble(
            format!("Gorenstein-projective({})", alg.name()),
            ModelKind::GorensteinProjective,
            gp.left.clone(),
            ClassDescriptor::all(alg),
            ClassDescriptor::pd_at_most(alg, d),
            CotorsionPair::projective(alg),
            gp,
        )
    }

    /// Gorenstein injective structure (`C = All`). Only `d = 0` over a prime
    /// field, where it coincides with the quasi-Frobenius structure.
    pub fn gorenstein_injective(alg: &Arc<Algebra>, d: usize) -> Result<ModelStructure, ModelError> {
        if !alg.base().is_field() {
            return Err(ModelError::Unsupported(format!(
                "Gorenstein injective structure over {}: no preenvelopes by duality over the integers",
                alg.name()
            )));
        }
        if d != 0 {
            return Err(ModelError::Unsupported(format!("Gorenstein injective structure with d = {d}")));
        }
        let mut ms = ModelStructure::quasi_frobenius(alg);
        ms.name = format!("Gorenstein-injective({})", alg.name());
        ms.kind = ModelKind::QuasiFrobenius;
        Ok(ms)
    }

    pub fn classify_map(&self, f: &Morphism) -> MapClass {
        let cofibration = if f.is_mono() {
            self.in_c(f.cokernel().dst())
        } else {
            Verdict::from_bool(false, || "not a monomorphism".into())
        };
        let acyclic_cofibration = match &cofibration {
            Verdict::No { .. } => cofibration.clone(),
            v => v.clone().and(self.in_w(f.cokernel().dst())),
        };
        let fibration = if f.is_epi() {
            self.in_f(f.kernel().src())
        } else {
            Verdict::from_bool(false, || "not an epimorphism".into())
        };
        let acyclic_fibration = match &fibration {
            Verdict::No { .. } => fibration.clone(),
            v => v.clone().and(self.in_w(f.kernel().src())),
        };
        MapClass { cofibration, fibration, acyclic_cofibration, acyclic_fibration, weak_equivalence: None }
    }
}

/// Validate thickness of `W` and orthogonality of both pairs on `catalog`.
pub fn make_model_structure(mut ms: ModelStructure, catalog: &[Module], max_pairs: usize) -> Result<ModelStructure, ModelError> {
    let thick = is_thick(&ms.w, &thickness_samples(catalog, max_pairs));
    if let Some(item) = thick.first_failure() {
        return Err(ModelError::ThicknessFailed(item.certificate.clone().unwrap_or_else(|| item.sample.clone())));
    }
    let members = |p: &dyn Fn(&Module) -> Verdict| catalog.iter().filter(|m| p(m).holds()).cloned().collect::<Vec<_>>();
    let cw = members(&|m| ms.in_cw(m));
    let f = members(&|m| ms.in_f(m));
    let c = members(&|m| ms.in_c(m));
    let fw = members(&|m| ms.in_fw(m));
    let orth_cw_f = check_orthogonality(&cw, &f, 1);
    let orth_c_fw = check_orthogonality(&c, &fw, 1);
    for (r, name) in [(&orth_cw_f, "(C∩W, F)"), (&orth_c_fw, "(C, F∩W)")] {
        if let Some(cell) = r.failures().next() {
            return Err(ModelError::OrthogonalityFailed(format!(
                "{name}: Ext^{}({}, {}) = {}",
                cell.degree, r.left[cell.left], r.right[cell.right], cell.ext
            )));
        }
    }
    ms.validation = Some(Validation { thick, orth_cw_f, orth_c_fw });
    Ok(ms)
}
