//! Cotorsion pairs: class descriptors with certified membership, Ext
//! orthogonality, special approximations, thickness and hereditary checks,
//! and the Gorenstein projective classes.

mod class;
mod gorenstein;
mod orth;
mod pair;
mod thick;

pub use class::{class_member, Certificate, ClassDescriptor, ClassKind, FamilySpec, Verdict};
pub use gorenstein::{
    coinduction_embedding, gp_example, gp_test, ring_injective_dimension, WitnessFamily, DEFAULT_FAMILY_SEED,
    DEFAULT_FAMILY_SIZE,
};
pub use orth::{check_orthogonality, orthogonal_closure, OrthCell, OrthReport, OrthSide};
pub use pair::{special_preenvelope, special_precover, ApproxSes, CotorsionPair, Provider, Side};
pub use thick::{
    describe_ses, is_hereditary, is_thick, thickness_samples, ClosureItem, HereditaryReport, ThickItem, ThickReport,
    ThickSample,
};

use thiserror::Error;

use crate::module_cat::ModuleError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CotorsionError {
    #[error("no provider: {0}")]
    NoProvider(String),
    #[error("provider failed at {stage}: {certificate}")]
    ProviderFailed { stage: String, certificate: Certificate },
    #[error(transparent)]
    Module(#[from] ModuleError),
}
