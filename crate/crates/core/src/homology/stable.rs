use super::resolution::projective_cover;
use crate::error::Result;
use crate::linalg::Span;
use crate::rep::{hom_basis, hom_basis_unchecked, HomSpace, Module, ModuleMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StableMode {
    /// Maps factoring through a projective module.
    ModProjectives,
    /// Maps factoring through an injective module.
    ModInjectives,
}

/// Injective envelope `m → I(m)`, dual to the projective cover of `Dm`.
pub fn injective_envelope(m: &Module) -> ModuleMap {
    let cover = projective_cover(&m.dual());
    let env = cover.map.dual();
    let target = env.target().clone();
    env.with_ends(m, &target)
}

/// `dim Hom(m, n)` minus the maps factoring through a projective (resp. injective).
pub fn stable_hom_dim(m: &Module, n: &Module, mode: StableMode) -> Result<usize> {
    let hom = HomSpace::from_basis(m, n, hom_basis(m, n)?);
    if hom.dim() == 0 {
        return Ok(0);
    }
    let mut span = Span::untracked(m.field(), hom.dim());
    match mode {
        StableMode::ModProjectives => {
            let p = projective_cover(n).map;
            for h in hom_basis_unchecked(m, p.source()) {
                span.insert(&hom.coords(&h.then(&p)).expect("composite is a homomorphism"));
            }
        }
        StableMode::ModInjectives => {
            let i = injective_envelope(m);
            for g in hom_basis_unchecked(i.target(), n) {
                span.insert(&hom.coords(&i.then(&g)).expect("composite is a homomorphism"));
            }
        }
    }
    Ok(hom.dim() - span.dim())
}
