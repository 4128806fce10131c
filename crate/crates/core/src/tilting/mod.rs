//! Classical and n-tilting predicates, torsion classes, iterated tilting,
//! Gorenstein detection and homological-dimension bounds.

mod bounds;
mod classical;
mod gorenstein;
mod torsion;

pub use bounds::{check_pd_bound_fac, check_pd_bound_sub, wakamatsu_check, wakamatsu_check_dual, Hypothesis, PdBoundReport, WakamatsuReport};
pub use classical::{
    is_classical_cotilting, is_classical_tilting, is_cotilting_n, is_faithful, is_partial_tilting, is_tilting_n, tilting_n_check,
    TiltingNCheck, MAX_TILTING_N,
};
pub use gorenstein::{
    classical_cotilting_modules, classical_tilting_modules, is_iwanaga_gorenstein, selfinjective_dim, verify_cor_2_8, verify_thm_2_6, verify_thm_2_7, Cor28Report, GorensteinReport,
    Thm26Report, Thm27Report,
};
pub use torsion::{
    build_iterated_chain, is_splitting_tilting, hull_catalog, torsion_tag_over_a, torsion_tag_over_b, ChainStep, IteratedChain,
    TorsionTagA, TorsionTagB,
};
