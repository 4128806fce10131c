//! Resolutions, Ext, homological dimensions, the transpose and τ.

mod ext;
mod resolution;
mod stable;
mod tau;

pub use ext::{ext1_with_cover, ext_dim, ext_space, ext_vanishes_all, ext_vanishes_up_to, ExtSpace};
pub use resolution::{
    default_cutoff, gl_dim, id, map_from_projectives, minimal_presentation, pd, projective_cover, projective_sum,
    resolve, syzygy, Dimension, MinimalPresentation, ProjectiveCover, ResolutionTrace, Termination,
};
pub use stable::{injective_envelope, stable_hom_dim, StableMode};
pub use tau::{tau, tau_inv, transpose};
