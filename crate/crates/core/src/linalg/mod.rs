//! Exact linear algebra over the integers and prime fields.
//!
//! Everything above this layer reduces to three primitives: Smith normal
//! form, solving `A·x = b` over the base ring, and kernels/quotients of maps
//! between diagonally presented groups `⊕ R/(dᵢ)`.

mod group;
mod mat;
mod ring;
mod snf;

pub use group::{cokernel, kernel, quotient, reduce_rows, reduce_vec, subgroup, GroupSolver, Quotient};
pub use mat::Mat;
pub use ring::BaseRing;
pub(crate) use ring::inv_mod;
pub use snf::{kernel_basis, smith_normal_form, solve_linear, Snf};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported bound 2^16")]
    PrimeTooLarge(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Column vector of base-ring scalars.
pub type Vector = Vec<num_bigint::BigInt>;
