pub mod linalg;
pub mod module_cat;
pub mod homological;
pub mod catalog;
pub mod cotorsion;
pub mod model;
pub mod chains;
