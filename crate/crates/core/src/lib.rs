pub mod algebra;
pub mod cleft;
pub mod error;
pub mod harness;
pub mod homology;
pub mod linalg;
pub mod rep;
pub mod silting;

pub use error::{Error, Result};
