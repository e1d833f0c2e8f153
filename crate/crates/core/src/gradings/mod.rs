//! Involutions, Z2-gradings and Z2 x Z2-gradings of matrix Lie algebras.

pub mod catalog;
mod grading;
mod involution;
mod quaternionic;

pub use grading::{CentralizerDims, Z2Grading};
pub use involution::{Involution, Presentation};
pub use quaternionic::{Piece, Quaternionic};
