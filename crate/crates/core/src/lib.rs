//! Exact symbolic computation for affine extensions of the principal
//! Ga-bundle SL2 -> A^2 minus the origin.

pub mod blowup;
pub mod derivation;
pub mod error;
pub mod families;
pub mod filtered;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod properties;
pub mod pullback;
pub mod report;
pub mod rewriter;
pub mod sequence;
pub mod suites;
pub mod trivial_ext;

pub use error::{Error, Result};
