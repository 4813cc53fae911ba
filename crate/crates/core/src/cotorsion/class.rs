use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::gorenstein::{gp_test, WitnessFamily};
use crate::homological::{ext_orders, is_injective, is_projective, proj_dim_at_most};
use crate::module_cat::{describe_orders, Algebra, Module};

/// Why a module fails a membership test.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Certificate {
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ext: Option<String>,
    #[serde(skip)]
    pub witness_module: Option<Module>,
}

impl Certificate {
    pub fn new(reason: impl Into<String>) -> Certificate {
        Certificate { reason: reason.into(), witness: None, ext: None, witness_module: None }
    }

    pub fn ext_nonzero(witness: &Module, structure: String, degree: usize, left: bool) -> Certificate {
        let reason = if left {
            format!("Ext^{degree}(M, W) != 0")
        } else {
            format!("Ext^{degree}(W, M) != 0")
        };
        Certificate {
            reason,
            witness: Some(witness.structure()),
            ext: Some(structure),
            witness_module: Some(witness.clone()),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.reason)?;
        if let Some(w) = &self.witness {
            write!(f, " (witness {w}")?;
            if let Some(e) = &self.ext {
                write!(f, ", Ext = {e}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A finite witness family: seed, size and construction rule.
#[derive(Clone, Debug, Serialize, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub seed: u64,
    pub size: usize,
    pub rule: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Yes,
    No { certificate: Certificate },
    YesRelativeToFamily { family: FamilySpec },
}

impl Verdict {
    pub fn no(c: Certificate) -> Verdict {
        Verdict::No { certificate: c }
    }

    pub fn from_bool(b: bool, reason: impl FnOnce() -> String) -> Verdict {
        if b {
            Verdict::Yes
        } else {
            Verdict::no(Certificate::new(reason()))
        }
    }

    /// `Yes` or relative `Yes`.
    pub fn holds(&self) -> bool {
        !matches!(self, Verdict::No { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No { .. })
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::No { certificate } => Some(certificate),
            _ => None,
        }
    }

    /// Conjunction; relative-ness and the first failure propagate.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (v @ Verdict::No { .. }, _) | (_, v @ Verdict::No { .. }) => v,
            (v @ Verdict::YesRelativeToFamily { .. }, _) | (_, v @ Verdict::YesRelativeToFamily { .. }) => v,
            _ => Verdict::Yes,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No { .. } => "no",
            Verdict::YesRelativeToFamily { .. } => "yes-relative-to-family",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Yes => write!(f, "yes"),
            Verdict::No { certificate } => write!(f, "no: {certificate}"),
            Verdict::YesRelativeToFamily { family } => {
                write!(f, "yes relative to family (seed {:#x}, size {}, {})", family.seed, family.size, family.rule)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum ClassKind {
    All,
    Zero,
    Projectives,
    Injectives,
    PdAtMost(usize),
    RightOrthOf(Vec<Module>),
    LeftOrthOf(Vec<Module>),
    GorensteinProjective { d: usize, family: Arc<WitnessFamily> },
    Explicit(Vec<Module>),
}

/// A class of modules over one algebra with a membership test.
#[derive(Clone, Debug)]
pub struct ClassDescriptor {
    pub kind: ClassKind,
    pub algebra: Arc<Algebra>,
}

impl ClassDescriptor {
    pub fn new(kind: ClassKind, algebra: &Arc<Algebra>) -> ClassDescriptor {
        ClassDescriptor { kind, algebra: algebra.clone() }
    }

    pub fn all(a: &Arc<Algebra>) -> Self {
        Self::new(ClassKind::All, a)
    }

    pub fn zero(a: &Arc<Algebra>) -> Self {
        Self::new(ClassKind::Zero, a)
    }

    pub fn projectives(a: &Arc<Algebra>) -> Self {
        Self::new(ClassKind::Projectives, a)
    }

    pub fn injectives(a: &Arc<Algebra>) -> Self {
        Self::new(ClassKind::Injectives, a)
    }

    pub fn pd_at_most(a: &Arc<Algebra>, d: usize) -> Self {
        Self::new(ClassKind::PdAtMost(d), a)
    }

    pub fn explicit(a: &Arc<Algebra>, members: Vec<Module>) -> Self {
        Self::new(ClassKind::Explicit(members), a)
    }

    pub fn name(&self) -> String {
        match &self.kind {
            ClassKind::All => "All".into(),
            ClassKind::Zero => "Zero".into(),
            ClassKind::Projectives => "Projectives".into(),
            ClassKind::Injectives => "Injectives".into(),
            ClassKind::PdAtMost(d) => format!("PdAtMost({d})"),
            ClassKind::RightOrthOf(g) => format!("RightOrthOf[{}]", list(g)),
            ClassKind::LeftOrthOf(g) => format!("LeftOrthOf[{}]", list(g)),
            ClassKind::GorensteinProjective { d, .. } => format!("GorensteinProjective({d})"),
            ClassKind::Explicit(m) => format!("Explicit[{}]", list(m)),
        }
    }

    /// Membership is decided outright (no witness family involved).
    pub fn is_decisive(&self) -> bool {
        !matches!(self.kind, ClassKind::GorensteinProjective { .. })
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        match &self.kind {
            ClassKind::GorensteinProjective { family, .. } => Some(&family.spec),
            _ => None,
        }
    }
}

fn list(ms: &[Module]) -> String {
    ms.iter().map(Module::structure).collect::<Vec<_>>().join(", ")
}

pub fn class_member(c: &ClassDescriptor, m: &Module) -> Verdict {
    assert!(*c.algebra == **m.algebra(), "class_member: algebra mismatch");
    match &c.kind {
        ClassKind::All => Verdict::Yes,
        ClassKind::Zero => Verdict::from_bool(m.is_zero(), || "module is nonzero".into()),
        ClassKind::Projectives => {
            Verdict::from_bool(is_projective(m), || "not projective: the free presentation does not split".into())
        }
        ClassKind::Injectives => Verdict::from_bool(is_injective(m), || {
            if m.ring().is_field() {
                "not injective: the dual is not projective over the opposite algebra".into()
            } else {
                "not injective: no nonzero finitely generated module over the integers is injective".into()
            }
        }),
        ClassKind::PdAtMost(d) => {
            Verdict::from_bool(proj_dim_at_most(m, *d), || format!("projective dimension exceeds {d}"))
        }
        ClassKind::RightOrthOf(gens) => {
            for g in gens {
                let e = ext_orders(g, m, 1);
                if !e.is_empty() {
                    return Verdict::no(Certificate::ext_nonzero(g, describe_orders(&m.ring(), &e), 1, false));
                }
            }
            Verdict::Yes
        }
        ClassKind::LeftOrthOf(gens) => {
            for g in gens {
                let e = ext_orders(m, g, 1);
                if !e.is_empty() {
                    return Verdict::no(Certificate::ext_nonzero(g, describe_orders(&m.ring(), &e), 1, true));
                }
            }
            Verdict::Yes
        }
        ClassKind::GorensteinProjective { d, family } => gp_test(m, *d, family),
        ClassKind::Explicit(members) => {
            Verdict::from_bool(members.iter().any(|x| x == m), || "not among the listed modules".into())
        }
    }
}
