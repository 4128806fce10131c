//! Exact computations with support τ-tilting modules over basic algebras.

pub mod algebra;
pub mod endo;
pub mod enumerate;
pub mod error;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod rep;
pub mod tau_tilting;
pub mod tilting;

pub use error::{Error, Result};
