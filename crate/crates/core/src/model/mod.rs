//! Abelian model structures from two compatible complete cotorsion pairs:
//! map classes, factorizations, lifts, weak equivalences, stable homs and
//! the monoidal conditions.

mod factor;
mod monoidal;
mod stable;
mod structure;

pub use factor::{
    classify_map_full, factorize, is_weak_equivalence, lift, FactorMode, FactorStage, Factorization, Lift, LiftProblem, Membership,
    WeakEquivalence,
};
pub use monoidal::{monoidal_check, pushout_product, MonoidalItem, MonoidalReport, PushoutProduct};
pub use stable::{free_cover_lemma, stable_hom, StableHom};
pub use structure::{make_model_structure, MapClass, ModelKind, ModelStructure, Validation};

use thiserror::Error;

use crate::cotorsion::CotorsionError;
use crate::module_cat::ModuleError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("weak equivalences are not thick: {0}")]
    ThicknessFailed(String),
    #[error("orthogonality fails: {0}")]
    OrthogonalityFailed(String),
    #[error("precondition: {0}")]
    Precondition(String),
    #[error("no lift exists: {0}")]
    NotLiftable(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Cotorsion(#[from] CotorsionError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}
