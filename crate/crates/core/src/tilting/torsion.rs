use crate::algebra::Algebra;
use crate::endo::{endomorphism_algebra, find_isomorphism, tensor_over_endo, tor1_over_endo, SummandBookkeeping};
use crate::enumerate::{catalog, EnumerationBound};
use crate::error::{Error, Result};
use crate::homology::{default_cutoff, ext_dim, gl_dim};
use crate::rep::{decompose, distinct_up_to_iso, hom_dim, Module};

use super::classical::is_classical_tilting;

/// Membership in `T(T) = {Ext^1(T, -) = 0}` and `F(T) = {Hom(T, -) = 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionTagA {
    Torsion,
    TorsionFree,
    /// The zero module, in both classes.
    Zero,
    Neither,
}

/// Membership in `X(T) = {- ⊗_B T = 0}` and `Y(T) = {Tor_1^B(-, T) = 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionTagB {
    X,
    Y,
    Zero,
    Neither,
}

pub fn torsion_tag_over_a(bk: &SummandBookkeeping, m: &Module) -> Result<TorsionTagA> {
    let t = bk.sum();
    let torsion = ext_dim(&t, m, 1)? == 0;
    let free = hom_dim(&t, m)? == 0;
    Ok(match (torsion, free) {
        (true, true) => TorsionTagA::Zero,
        (true, false) => TorsionTagA::Torsion,
        (false, true) => TorsionTagA::TorsionFree,
        (false, false) => TorsionTagA::Neither,
    })
}

pub fn torsion_tag_over_b(bk: &SummandBookkeeping, y: &Module) -> Result<TorsionTagB> {
    let x = tensor_over_endo(y, bk)?.is_zero();
    let yy = tor1_over_endo(y, bk)?.is_zero();
    Ok(match (x, yy) {
        (true, true) => TorsionTagB::Zero,
        (true, false) => TorsionTagB::X,
        (false, true) => TorsionTagB::Y,
        (false, false) => TorsionTagB::Neither,
    })
}

/// Every indecomposable of the catalog over `B` lies in `X(T)` or `Y(T)`.
/// The caller asserts that the catalog is complete.
pub fn is_splitting_tilting(bk: &SummandBookkeeping, b_catalog: &[Module]) -> Result<bool> {
    for y in b_catalog {
        if torsion_tag_over_b(bk, y)? == TorsionTagB::Neither {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Indecomposables of `a` within the projective-injective hull caps,
/// enumerated over `F_2` when `a` is rational.
pub fn hull_catalog(a: &Algebra) -> Result<Vec<Module>> {
    catalog(a, &EnumerationBound::projective_injective_hull(a))
}

#[derive(Clone, Debug)]
pub struct ChainStep {
    pub bookkeeping: SummandBookkeeping,
    /// Size of the indecomposable catalog of the endomorphism algebra used for the splitting check.
    pub catalog_size: usize,
}

/// `A_0 = KQ, A_1 = End(T_0), ..., A_m = End(T_{m-1})`.
#[derive(Clone, Debug)]
pub struct IteratedChain {
    pub algebras: Vec<Algebra>,
    pub steps: Vec<ChainStep>,
}

impl IteratedChain {
    pub fn last(&self) -> &Algebra {
        self.algebras.last().expect("chain has a base algebra")
    }
}

/// Builds the chain from `a0` and tilting modules `steps[i]`, each given over
/// an algebra isomorphic to `A_i` (typically a presented copy). Every `T_i`
/// must be classical tilting and splitting.
pub fn build_iterated_chain(a0: &Algebra, steps: &[Module]) -> Result<IteratedChain> {
    let fail = |step: usize, reason: &str| Error::Chain { step, reason: reason.into() };
    let d0 = gl_dim(a0, default_cutoff(a0))?;
    if d0.at_most(1) != Some(true) {
        return Err(fail(0, "base algebra is not hereditary"));
    }
    let mut algebras = vec![a0.clone()];
    let mut out = Vec::new();
    for (i, t) in steps.iter().enumerate() {
        let current = algebras.last().expect("nonempty");
        let given = t.algebra();
        if given != current && find_isomorphism(given, current).is_none() && find_isomorphism(current, given).is_none() {
            return Err(fail(i, "module is not over an algebra isomorphic to the current one"));
        }
        if !is_classical_tilting(t)? {
            return Err(fail(i, "module is not classical tilting"));
        }
        let summands = distinct_up_to_iso(&decompose(t)?);
        let (b, bk) = endomorphism_algebra(&summands)?;
        let catalog = hull_catalog(&b)?;
        if !is_splitting_tilting(&bk, &catalog)? {
            return Err(fail(i, "tilting module is not splitting"));
        }
        out.push(ChainStep { bookkeeping: bk, catalog_size: catalog.len() });
        algebras.push(b);
    }
    Ok(IteratedChain { algebras, steps: out })
}
