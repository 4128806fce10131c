use super::resolution::{projective_cover, resolve, ProjectiveCover, Termination};
use crate::error::{Error, Result};
use crate::linalg::Span;
use crate::rep::{hom_basis, hom_basis_unchecked, kernel, HomSpace, Module, ModuleMap};

/// `Ext^i(m, n) = coker(Hom(P_{i-1}, n) → Hom(Ω^i m, n))`.
#[derive(Clone)]
pub struct ExtSpace {
    pub degree: usize,
    pub dim: usize,
    /// `Ω^i m` (or `m` itself for degree 0).
    pub syzygy: Module,
    /// `Ω^i m ↪ P_{i-1}` (absent in degree 0).
    pub inclusion: Option<ModuleMap>,
    pub hom: HomSpace,
    /// Span of the restricted maps (coboundaries) in `hom` coordinates.
    boundaries: Span,
    /// Maps whose classes form a basis of the Ext space.
    pub cocycles: Vec<ModuleMap>,
}

impl ExtSpace {
    /// Coordinates of the class of a map `Ω^i m → n` along [`cocycles`](Self::cocycles).
    pub fn class(&self, f: &ModuleMap) -> Option<Vec<crate::linalg::Scalar>> {
        let c = self.hom.coords(f)?;
        let mut probe = Span::new(self.boundaries.field(), self.hom.dim());
        for b in self.boundaries.basis() {
            probe.insert(b);
        }
        for z in &self.cocycles {
            probe.insert(&self.hom.coords(z).unwrap());
        }
        let all = probe.coords(&c)?;
        let nb = self.boundaries.dim();
        Some(all[nb..nb + self.cocycles.len()].to_vec())
    }

    pub fn is_coboundary(&self, f: &ModuleMap) -> bool {
        self.hom.coords(f).is_some_and(|c| self.boundaries.contains(&c))
    }
}

fn ext_from_parts(degree: usize, syz: &Module, incl: Option<&ModuleMap>, n: &Module) -> ExtSpace {
    let hom = HomSpace::from_basis(syz, n, hom_basis_unchecked(syz, n));
    let mut boundaries = Span::untracked(syz.field(), hom.dim());
    if let Some(incl) = incl {
        for g in hom_basis_unchecked(incl.target(), n) {
            let r = incl.then(&g);
            boundaries.insert(&hom.coords(&r).expect("restriction is a homomorphism"));
        }
    }
    let mut cocycles = Vec::new();
    let mut probe = boundaries.clone();
    for b in &hom.basis {
        if probe.insert(&hom.coords(b).unwrap()) {
            cocycles.push(b.clone());
        }
    }
    ExtSpace {
        degree,
        dim: cocycles.len(),
        syzygy: syz.clone(),
        inclusion: incl.cloned(),
        hom,
        boundaries,
        cocycles,
    }
}

pub fn ext_space(m: &Module, n: &Module, i: usize) -> Result<ExtSpace> {
    m.check_owner(n)?;
    if i == 0 {
        hom_basis(m, n)?;
        return Ok(ext_from_parts(0, m, None, n));
    }
    let mut cur = m.clone();
    let mut incl = None;
    for _ in 0..i {
        if cur.is_zero() {
            return Ok(ext_from_parts(i, &Module::zero(m.algebra()), None, n));
        }
        let c = projective_cover(&cur);
        let (k, inc) = kernel(&c.map);
        cur = k;
        incl = Some(inc);
    }
    Ok(ext_from_parts(i, &cur, incl.as_ref(), n))
}

pub fn ext_dim(m: &Module, n: &Module, i: usize) -> Result<usize> {
    Ok(ext_space(m, n, i)?.dim)
}

/// `Ext^1` from a given projective cover of `m`.
pub fn ext1_with_cover(cover: &ProjectiveCover, n: &Module) -> ExtSpace {
    let (k, incl) = kernel(&cover.map);
    ext_from_parts(1, &k, Some(&incl), n)
}

/// Whether `Ext^i(m, n) = 0` for all `1 ≤ i ≤ bound` (beyond the resolution
/// length everything vanishes).
pub fn ext_vanishes_up_to(m: &Module, n: &Module, bound: usize) -> Result<bool> {
    for i in 1..=bound {
        if ext_dim(m, n, i)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Ext^i(m, n) = 0` for all `i ≥ 1`, using the length of the resolution of `m`.
pub fn ext_vanishes_all(m: &Module, n: &Module, cutoff: usize) -> Result<bool> {
    let trace = resolve(m, cutoff)?;
    let top = match trace.termination {
        Termination::Finite(k) => k,
        Termination::Infinite { repeat, .. } => repeat,
        Termination::Unknown(c) => return Err(Error::ResolutionUnknown(c)),
    };
    for i in 1..=top.max(1) {
        let syz = &trace.syzygies[i];
        let incl = &trace.inclusions[i - 1];
        if ext_from_parts(i, syz, Some(incl), n).dim != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}
