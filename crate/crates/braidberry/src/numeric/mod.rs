//! Dense complex linear algebra: the small-matrix workhorse every other
//! module builds on.

mod eig;
mod matrix;

pub use eig::{herm_eig, HermEig};
pub use matrix::{C64, ComplexMatrix, ComplexVector};
