//! Hom and Ext over the canonical free resolution, extension classes,
//! splitting, syzygies, and projective/injective dimension tests.

mod ext;
mod hom;
mod solve;

pub use ext::{
    class_ses, ext, is_injective, is_projective, is_split, lift_from_free, map_from_free, proj_dim_at_most,
    projective_dimension, resolution, ses_class, syzygy, ExtGroup, Resolution,
};
pub(crate) use ext::ext_orders;
pub use hom::{hom_group, HomGroup};
pub use solve::solve_hom_system;

