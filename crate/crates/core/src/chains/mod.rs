//! Bounded chain complexes over a module category: disks, spheres, cycles
//! and homology, chain homotopies, the tilde and dg-tilde classes induced by
//! a cotorsion pair, and Ext¹ between complexes.

mod classes;
mod complex;
mod ext;
mod hom;
mod induced;

pub use classes::{
    chain_member, dg_member, four_term, is_contractible, ses_complex, tilde_member, witness_family, ChainClassSpec,
    ChainVariant, DEFAULT_CHAIN_FAMILY_SEED, DEFAULT_CHAIN_FAMILY_SIZE,
};
pub use complex::{
    chain_descend_through_epi, chain_lift_through_mono, chain_pushout, ChainComplex, ChainMap, ChainPushout, ChainSum,
};
pub use ext::{
    chain_ext1, chain_ext1_homotopy, chain_ext1_presentation, degreewise_split, disk_cover, ChainExt, ChainExtRoute,
};
pub use hom::{chain_hom, homotopy_classes, null_homotopy, ChainHom, ChainHomotopy, HomotopyClasses};
pub use induced::{
    chain_enough_injectives_pushout, complex_catalog, verify_induced_pair, ChainApprox, ChainApproxRoute,
    ChainClassRow, ChainOrthCell, ChainOrthReport, CompatibilityItem, InducedConfig, InducedPairReport,
};

use thiserror::Error;

use crate::cotorsion::CotorsionError;
use crate::module_cat::ModuleError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("d∘d is nonzero at degree {degree}")]
    DSquaredNonzero { degree: i64 },
    #[error("components do not commute with the differential at degree {degree}")]
    NotChainMap { degree: i64 },
    #[error(transparent)]
    Cotorsion(#[from] CotorsionError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}
