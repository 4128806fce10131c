//! Basic algebras: quiver presentations, structure constants, opposites.

mod basic;
mod build;
mod presentation;
mod quotient;

pub use basic::{Algebra, AlgebraParts, Product, ValidationReport};
pub use build::{build_algebra, linear_an};
pub use presentation::{Arrow, QuiverPresentation, Relation, Term};
pub use quotient::{annihilator, is_faithful, QuotientAlgebra};

