use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::class::{class_member, ClassDescriptor, ClassKind, Verdict};
use super::gorenstein::{coinduction_embedding, WitnessFamily};
use super::CotorsionError;
use crate::module_cat::{dual_op, pushout, Algebra, Module, Morphism, Ses};

/// Constructive strategy producing approximation sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provider {
    /// `0 → K → F → X → 0`, the canonical free presentation.
    FreePresentation,
    /// `0 → 0 → X → X → 0` or `0 → X → X → 0 → 0`.
    Identity,
    /// Embedding into an injective through the dual of a free presentation
    /// (prime-field base).
    InjectiveEnvelope,
    /// Present `X`, coinduction-embed the kernel, push out (Gorenstein of
    /// dimension 1 over an integral group ring).
    SyzygyPushout,
    /// Take the [`Provider::SyzygyPushout`] precover `0 → Q → G → X → 0`,
    /// coinduction-embed `G` and push out along `G → X`.
    CoinductionPushout,
}

impl fmt::Display for Provider {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provider::FreePresentation => "free-presentation",
            Provider::Identity => "identity",
            Provider::InjectiveEnvelope => "injective-envelope",
            Provider::SyzygyPushout => "syzygy-pushout",
            Provider::CoinductionPushout => "coinduction-pushout",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct CotorsionPair {
    pub name: String,
    pub left: ClassDescriptor,
    pub right: ClassDescriptor,
    pub precover: Option<Provider>,
    pub preenvelope: Option<Provider>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Precover,
    Preenvelope,
}

/// A special precover `0 → E → D → X → 0` or preenvelope `0 → X → E → D → 0`
/// with the memberships of its outer terms.
#[derive(Clone, Debug)]
pub struct ApproxSes {
    pub ses: Ses,
    pub side: Side,
    pub provider: Provider,
    /// Membership of the term required to be in the left class.
    pub left_member: Verdict,
    /// Membership of the term required to be in the right class.
    pub right_member: Verdict,
}

impl ApproxSes {
    /// The term in the left class (middle of a precover, cokernel of a preenvelope).
    pub fn left_term(&self) -> &Module {
        match self.side {
            Side::Precover => self.ses.middle(),
            Side::Preenvelope => self.ses.right(),
        }
    }

    pub fn right_term(&self) -> &Module {
        match self.side {
            Side::Precover => self.ses.left(),
            Side::Preenvelope => self.ses.middle(),
        }
    }
}

impl CotorsionPair {
    pub fn new(
        name: impl Into<String>,
        left: ClassDescriptor,
        right: ClassDescriptor,
        precover: Option<Provider>,
        preenvelope: Option<Provider>,
    ) -> CotorsionPair {
        CotorsionPair { name: name.into(), left, right, precover, preenvelope }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.left.algebra
    }

    /// `(Projectives, All)`.
    pub fn projective(alg: &Arc<Algebra>) -> CotorsionPair {
        CotorsionPair::new(
            "(Projectives, All)",
            ClassDescriptor::projectives(alg),
            ClassDescriptor::all(alg),
            Some(Provider::FreePresentation),
            Some(Provider::Identity),
        )
    }

    /// `(All, Injectives)`; envelopes only over a prime field.
    pub fn injective(alg: &Arc<Algebra>) -> CotorsionPair {
        let env = alg.base().is_field().then_some(Provider::InjectiveEnvelope);
        CotorsionPair::new(
            "(All, Injectives)",
            ClassDescriptor::all(alg),
            ClassDescriptor::injectives(alg),
            Some(Provider::Identity),
            env,
        )
    }

    /// `(GorensteinProjective(d), PdAtMost(d))` with the default witness family.
    pub fn gorenstein(alg: &Arc<Algebra>, d: usize) -> CotorsionPair {
        let family = Arc::new(WitnessFamily::default_for(alg, d));
        let left = ClassDescriptor::new(ClassKind::GorensteinProjective { d, family }, alg);
        let (pre, env) = match (d, alg.base().is_field()) {
            (0, true) => (Some(Provider::Identity), Some(Provider::InjectiveEnvelope)),
            (1, false) if alg.is_group_algebra() => (Some(Provider::SyzygyPushout), Some(Provider::CoinductionPushout)),
            _ => (None, None),
        };
        CotorsionPair::new(format!("(GP, PdAtMost({d}))"), left, ClassDescriptor::pd_at_most(alg, d), pre, env)
    }
}

/// Special precover `0 → E → D → X → 0`, `D` in the left class, `E` in the right.
pub fn special_precover(pair: &CotorsionPair, x: &Module) -> Result<ApproxSes, CotorsionError> {
    let provider = pair.precover.ok_or_else(|| CotorsionError::NoProvider(format!("precover for {}", pair.name)))?;
    let ses = match provider {
        Provider::Identity => identity_precover(x),
        Provider::FreePresentation => x.free_presentation(),
        Provider::SyzygyPushout => syzygy_pushout(x)?,
        Provider::InjectiveEnvelope | Provider::CoinductionPushout => {
            return Err(CotorsionError::NoProvider(format!("{provider} does not build precovers")))
        }
    };
    finish(pair, ses, Side::Precover, provider)
}

/// Special preenvelope `0 → X → E → D → 0`, `E` in the right class, `D` in the left.
pub fn special_preenvelope(pair: &CotorsionPair, x: &Module) -> Result<ApproxSes, CotorsionError> {
    let provider =
        pair.preenvelope.ok_or_else(|| CotorsionError::NoProvider(format!("preenvelope for {}", pair.name)))?;
    if pair.right.is_decisive() && !matches!(pair.right.kind, ClassKind::All) && class_member(&pair.right, x).holds() {
        return finish(pair, identity_preenvelope(x), Side::Preenvelope, Provider::Identity);
    }
    let ses = match provider {
        Provider::Identity => identity_preenvelope(x),
        Provider::InjectiveEnvelope => injective_envelope(x)?,
        Provider::CoinductionPushout => {
            let pre = syzygy_pushout(x)?;
            let emb = coinduction_embedding(pre.middle())?;
            let po = pushout(&emb, pre.epi());
            // 0 → X → W' → A^r / G → 0
            Ses::from_mono(po.from_right)?
        }
        Provider::FreePresentation | Provider::SyzygyPushout => {
            return Err(CotorsionError::NoProvider(format!("{provider} does not build preenvelopes")))
        }
    };
    finish(pair, ses, Side::Preenvelope, provider)
}

fn finish(pair: &CotorsionPair, ses: Ses, side: Side, provider: Provider) -> Result<ApproxSes, CotorsionError> {
    let (l, r) = match side {
        Side::Precover => (ses.middle(), ses.left()),
        Side::Preenvelope => (ses.right(), ses.middle()),
    };
    let left_member = class_member(&pair.left, l);
    if let Some(c) = left_member.certificate() {
        return Err(CotorsionError::ProviderFailed { stage: format!("{provider}: left-class term"), certificate: c.clone() });
    }
    let right_member = class_member(&pair.right, r);
    if let Some(c) = right_member.certificate() {
        return Err(CotorsionError::ProviderFailed {
            stage: format!("{provider}: right-class term"),
            certificate: c.clone(),
        });
    }
    Ok(ApproxSes { ses, side, provider, left_member, right_member })
}

fn identity_precover(x: &Module) -> Ses {
    let zero = Module::zero(x.algebra());
    Ses::new_unchecked(Morphism::zero(&zero, x), Morphism::identity(x))
}

fn identity_preenvelope(x: &Module) -> Ses {
    let zero = Module::zero(x.algebra());
    Ses::new_unchecked(Morphism::identity(x), Morphism::zero(x, &zero))
}

/// `X = D(D(X)) → D(F)` for a free presentation `F → D(X)` over the opposite algebra.
fn injective_envelope(x: &Module) -> Result<Ses, CotorsionError> {
    let dx = dual_op(x)?;
    let pres = dx.free_presentation();
    let f = pres.middle();
    let df = Module::from_parts(x.algebra().clone(), f.orders().to_vec(), f.actions().iter().map(|a| a.transpose()).collect());
    let emb = Morphism::new(x, &df, pres.epi().matrix().transpose())?;
    Ok(Ses::from_mono(emb)?)
}

/// Push the reduced presentation `0 → K → P → X → 0` out along the
/// coinduction embedding `K → A^r`: `0 → A^r → P' → X → 0`.
fn syzygy_pushout(x: &Module) -> Result<Ses, CotorsionError> {
    let pres = x.reduced_presentation();
    let emb = coinduction_embedding(pres.left())?;
    let po = pushout(pres.mono(), &emb);
    // P' → X induced by (P → X, 0)
    let to_x = crate::module_cat::copair(&po.sum, &[pres.epi().clone(), Morphism::zero(emb.dst(), x)]);
    let p = crate::module_cat::descend_through_epi(&po.quotient, &to_x).expect("copair kills the pushout relations");
    Ok(Ses::new_unchecked(po.from_right, p))
}
