//! Exact restricted-root-system combinatorics, the Harish-Chandra c-function via the
//! Gindikin–Karpelevich product, and the eigenvalues `c(λ+ρ)` of the dual
//! horospherical Radon transform on polynomial functions, with rank-one oracles.

pub mod error;
pub mod cfunction;
pub mod gamma;
pub mod numfmt;
pub mod oracle;
pub mod rational;
pub mod root_system;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
