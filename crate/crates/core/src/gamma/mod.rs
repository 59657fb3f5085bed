//! Gamma-function machinery: a numeric complex log-gamma and exact symbolic
//! products of gamma factors.

mod expr;
pub mod numeric;

pub use expr::{GammaExpr, GammaValue};
