//! Exact computations with finite-dimensional Hopf algebras, their
//! Yetter-Drinfeld modules, and invariants built from them.

pub mod coend;
pub mod error;
pub mod hopf;
pub mod matrix;
pub mod poly;
pub mod qcqsa;
pub mod report;
pub mod scalar;
pub mod sparse;
pub mod tangle;
pub mod tensor;
pub mod yd;

pub use error::{Error, Result};
pub use hopf::{HopfAlgebra, HopfData};
pub use matrix::Matrix;
pub use report::{Check, Report};
pub use scalar::{Field, Scalar};
