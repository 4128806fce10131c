//! Right modules as quiver representations.

mod approx;
mod decompose;
pub mod format;
mod hom;
mod module;
mod sub;

pub use approx::{left_approximation, left_approximation_by, right_approximation, right_approximation_by};
pub use decompose::{
    decompose, decompose_with_maps, distinct_up_to_iso, indecomposables_isomorphic, is_indecomposable, is_isomorphic,
    is_split_local, local_radical, num_distinct_summands, same_multiset, summand_classes, Decomposition,
};
pub use hom::{hom_basis, hom_dim, HomSpace};
pub use module::{standard_modules, Module, ModuleMap, StandardModules};
pub use sub::{
    cokernel, element_at, fac_contains, factor_through_mono, generated_submodule, image, image_graded, join_flat, kernel, quotient, radical_graded,
    radical_top_socle, reject_graded, socle_dims, socle_graded, split_flat, sub_contains, submodule, top_dims,
    trace_graded, Graded, RadicalTopSocle,
};

pub(crate) use hom::hom_basis_unchecked;
