use serde::Serialize;

use super::{ModelError, ModelStructure};
use crate::cotorsion::{special_preenvelope, special_precover, Certificate, CotorsionError, CotorsionPair, Verdict};
use crate::homological::{hom_group, solve_hom_system};
use crate::module_cat::{
    copair, descend_through_epi, direct_sum, lift_through_mono, pair, pullback, pushout, Module, Morphism,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorMode {
    /// `f = q ∘ j`, `j` a cofibration, `q` an acyclic fibration.
    CofThenAcyFib,
    /// `f = p ∘ i`, `i` an acyclic cofibration, `p` a fibration.
    AcyCofThenFib,
}

impl FactorMode {
    pub fn label(self) -> &'static str {
        match self {
            FactorMode::CofThenAcyFib => "cof-then-acyclic-fib",
            FactorMode::AcyCofThenFib => "acyclic-cof-then-fib",
        }
    }
}

/// Which branch of the construction ran.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorStage {
    /// Precover of the cokernel, pulled back.
    Mono,
    /// Preenvelope of the kernel, pushed out.
    Epi,
    /// `A → A ⊕ B → B`, epi case then mono case.
    General,
}

#[derive(Clone, Debug, Serialize)]
pub struct Membership {
    pub composite_exact: bool,
    pub first_mono: bool,
    pub second_epi: bool,
    /// Cokernel of the first map in `C` (or `C ∩ W`).
    pub first_cokernel: Verdict,
    /// Kernel of the second map in `F ∩ W` (or `F`).
    pub second_kernel: Verdict,
    pub first_cokernel_structure: String,
    pub second_kernel_structure: String,
}

#[derive(Clone, Debug)]
pub struct Factorization {
    pub mode: FactorMode,
    pub stage: FactorStage,
    pub first: Morphism,
    pub second: Morphism,
    pub verification: Membership,
}

fn pair_for(ms: &ModelStructure, mode: FactorMode) -> &CotorsionPair {
    match mode {
        FactorMode::CofThenAcyFib => &ms.pair_c_fw,
        FactorMode::AcyCofThenFib => &ms.pair_cw_f,
    }
}

/// `f` mono: precover `0 → K → QC → C → 0` of `C = cok f`, pull back along `B → C`.
fn mono_case(pr: &CotorsionPair, f: &Morphism) -> Result<(Morphism, Morphism), CotorsionError> {
    let c = f.cokernel();
    let approx = special_precover(pr, c.dst())?;
    let pb = pullback(&c, approx.ses.epi());
    let to_sum = pair(&pb.sum, &[f.clone(), Morphism::zero(f.src(), approx.ses.middle())]);
    let j = lift_through_mono(&pb.inclusion, &to_sum).expect("(f, 0) lands in the pullback");
    Ok((j, pb.to_left))
}

/// `f` epi: preenvelope `0 → K → RK → D → 0` of `K = ker f`, push out along `K → A`.
fn epi_case(pair: &CotorsionPair, f: &Morphism) -> Result<(Morphism, Morphism), CotorsionError> {
    let k = f.kernel();
    let approx = special_preenvelope(pair, k.src())?;
    let po = pushout(&k, approx.ses.mono());
    let from_sum = copair(&po.sum, &[f.clone(), Morphism::zero(approx.ses.middle(), f.dst())]);
    let q = descend_through_epi(&po.quotient, &from_sum).expect("(f, 0) kills the pushout relations");
    Ok((po.from_left, q))
}

pub fn factorize(ms: &ModelStructure, f: &Morphism, mode: FactorMode) -> Result<Factorization, ModelError> {
    let pr = pair_for(ms, mode);
    let (stage, first, second) = if f.is_mono() {
        let (j, q) = mono_case(pr, f)?;
        (FactorStage::Mono, j, q)
    } else if f.is_epi() {
        let (j, q) = epi_case(pr, f)?;
        (FactorStage::Epi, j, q)
    } else {
        let sum = direct_sum(&[f.src().clone(), f.dst().clone()])?;
        let i1 = sum.injections[0].clone();
        let g = copair(&sum, &[f.clone(), Morphism::identity(f.dst())]);
        let (j1, q1) = epi_case(pr, &g)?;
        let (j, q2) = mono_case(pr, &j1.compose(&i1))?;
        (FactorStage::General, j, q1.compose(&q2))
    };
    let verification = verify(ms, mode, f, &first, &second);
    if !verification.composite_exact || !verification.first_mono || !verification.second_epi {
        return Err(CotorsionError::ProviderFailed {
            stage: format!("{} factorization", mode.label()),
            certificate: Certificate::new("composite or exactness check failed"),
        }
        .into());
    }
    for (v, what) in [(&verification.first_cokernel, "first cokernel"), (&verification.second_kernel, "second kernel")] {
        if let Some(c) = v.certificate() {
            return Err(CotorsionError::ProviderFailed {
                stage: format!("{} factorization: {what}", mode.label()),
                certificate: c.clone(),
            }
            .into());
        }
    }
    Ok(Factorization { mode, stage, first, second, verification })
}

fn verify(ms: &ModelStructure, mode: FactorMode, f: &Morphism, first: &Morphism, second: &Morphism) -> Membership {
    let cok = first.cokernel().dst().clone();
    let ker = second.kernel().src().clone();
    let (first_cokernel, second_kernel) = match mode {
        FactorMode::CofThenAcyFib => (ms.in_c(&cok), ms.in_fw(&ker)),
        FactorMode::AcyCofThenFib => (ms.in_cw(&cok), ms.in_f(&ker)),
    };
    Membership {
        composite_exact: second.compose(first) == *f,
        first_mono: first.is_mono(),
        second_epi: second.is_epi(),
        first_cokernel,
        second_kernel,
        first_cokernel_structure: cok.structure(),
        second_kernel_structure: ker.structure(),
    }
}

/// A commutative square `p ∘ top = bottom ∘ i` with `i: A → B`, `p: X → Y`.
#[derive(Clone, Debug)]
pub struct LiftProblem {
    pub i: Morphism,
    pub p: Morphism,
    pub top: Morphism,
    pub bottom: Morphism,
}

#[derive(Clone, Debug)]
pub struct Lift {
    pub lift: Morphism,
    pub upper_triangle: bool,
    pub lower_triangle: bool,
}

/// Diagonal `h: B → X` with `h ∘ i = top` and `p ∘ h = bottom`.
pub fn lift(ms: &ModelStructure, problem: &LiftProblem) -> Result<Lift, ModelError> {
    let LiftProblem { i, p, top, bottom } = problem;
    if top.src() != i.src() || top.dst() != p.src() || bottom.src() != i.dst() || bottom.dst() != p.dst() {
        return Err(ModelError::Precondition("square has mismatched objects".into()));
    }
    if p.compose(top) != bottom.compose(i) {
        return Err(ModelError::Precondition("square does not commute".into()));
    }
    let ci = ms.classify_map(i);
    let cp = ms.classify_map(p);
    let ok = (ci.acyclic_cofibration.holds() && cp.fibration.holds())
        || (ci.cofibration.holds() && cp.acyclic_fibration.holds());
    if !ok {
        return Err(ModelError::Precondition(format!(
            "need (acyclic cofibration, fibration) or (cofibration, acyclic fibration); i: cofibration {}, acyclic {}; p: fibration {}, acyclic {}",
            ci.cofibration.label(),
            ci.acyclic_cofibration.label(),
            cp.fibration.label(),
            cp.acyclic_fibration.label()
        )));
    }
    let (b, x) = (i.dst(), p.src());
    let unknowns = [hom_group(b, x)];
    let equations = [hom_group(i.src(), x), hom_group(b, p.dst())];
    let sol = solve_hom_system(
        &unknowns,
        &equations,
        |_, h| vec![(0, h.compose(i)), (1, p.compose(h))],
        &[top.clone(), bottom.clone()],
    )
    .ok_or_else(|| ModelError::NotLiftable("the affine system for the diagonal has no solution".into()))?;
    let h = sol.into_iter().next().expect("one unknown");
    let upper_triangle = h.compose(i) == *top;
    let lower_triangle = p.compose(&h) == *bottom;
    if !(upper_triangle && lower_triangle) {
        return Err(ModelError::NotLiftable("solution fails a triangle".into()));
    }
    Ok(Lift { lift: h, upper_triangle, lower_triangle })
}

#[derive(Clone, Debug)]
pub struct WeakEquivalence {
    pub verdict: Verdict,
    pub factorization: Factorization,
}

/// Factor `f = q ∘ j` with `q` an acyclic fibration; `f` is a weak
/// equivalence exactly when `cok j ∈ W`.
pub fn is_weak_equivalence(ms: &ModelStructure, f: &Morphism) -> Result<WeakEquivalence, ModelError> {
    let factorization = factorize(ms, f, FactorMode::CofThenAcyFib)?;
    let cok: Module = factorization.first.cokernel().dst().clone();
    let verdict = ms.in_w(&cok);
    Ok(WeakEquivalence { verdict, factorization })
}

/// [`ModelStructure::classify_map`] with the weak-equivalence verdict filled in.
pub fn classify_map_full(ms: &ModelStructure, f: &Morphism) -> Result<super::MapClass, ModelError> {
    let mut c = ms.classify_map(f);
    c.weak_equivalence = Some(is_weak_equivalence(ms, f)?.verdict);
    Ok(c)
}
