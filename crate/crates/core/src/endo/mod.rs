//! Endomorphism algebras of basic modules and the functors between `mod A` and `mod End(T)`.

mod algebra;
mod functors;
mod iso;

pub use algebra::{endomorphism_algebra, SummandBookkeeping};
pub use functors::{
    ext1_functor_to_endo, ext1_functor_with, hom_functor_from_summands, hom_functor_to_endo, tensor_over_endo,
    tor1_over_endo, ExtFunctorData,
};
pub use iso::{find_epimorphism, find_isomorphism, AlgebraIso};
