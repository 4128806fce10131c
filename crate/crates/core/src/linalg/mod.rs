//! Exact linear algebra over `Q` and `F_p`.

mod mat;
mod poly;
mod scalar;
mod span;

pub use mat::{vec_axpy, vec_is_zero, vec_mat, Mat, Rref};
pub use poly::{char_poly_rational, eigenvalues_in_field, rational_roots};
pub use scalar::{Field, Scalar};
pub use span::{QuotientCoords, Span};
