use crate::algebra::Algebra;
use crate::error::Result;
use crate::homology::{ext_dim, id, pd, tau, tau_inv, Dimension};
use crate::rep::{hom_dim, Module};
use crate::tau_tilting::SupportTauTiltingPair;

use super::classical::{is_classical_cotilting, is_classical_tilting};

/// `id_A A`, computed as `pd` of `D(A_A)` over the opposite algebra.
pub fn selfinjective_dim(a: &Algebra, cutoff: usize) -> Result<Dimension> {
    id(&Module::regular(a), cutoff)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GorensteinReport {
    /// `id_A A`.
    pub right: Dimension,
    /// `id_{A^op} A`.
    pub left: Dimension,
}

impl GorensteinReport {
    pub fn is_gorenstein(&self) -> bool {
        self.right.is_finite() && self.left.is_finite()
    }

    /// When both are finite they coincide.
    pub fn dims_agree(&self) -> bool {
        !self.is_gorenstein() || self.right == self.left
    }

    /// Gorenstein with `id_A A ≤ k`.
    pub fn at_most(&self, k: usize) -> Option<bool> {
        match (self.right.at_most(k), self.left.at_most(k)) {
            (Some(a), Some(b)) => Some(a && b),
            (Some(false), None) | (None, Some(false)) => Some(false),
            _ => None,
        }
    }
}

pub fn is_iwanaga_gorenstein(a: &Algebra, cutoff: usize) -> Result<GorensteinReport> {
    Ok(GorensteinReport { right: selfinjective_dim(a, cutoff)?, left: selfinjective_dim(&a.opposite(), cutoff)? })
}

/// The three conditions `id_A A ≤ 1`, `DA` τ-rigid, `A` τ⁻¹-rigid, each from its own computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Thm27Report {
    pub id_at_most_one: Option<bool>,
    pub da_tau_rigid: bool,
    pub a_tau_inv_rigid: bool,
}

impl Thm27Report {
    pub fn consistent(&self) -> bool {
        self.id_at_most_one == Some(self.da_tau_rigid) && self.da_tau_rigid == self.a_tau_inv_rigid
    }
}

pub fn verify_thm_2_7(a: &Algebra, cutoff: usize) -> Result<Thm27Report> {
    let reg = Module::regular(a);
    let da = Module::cogenerator(a);
    Ok(Thm27Report {
        id_at_most_one: selfinjective_dim(a, cutoff)?.at_most(1),
        da_tau_rigid: hom_dim(&da, &tau(&da))? == 0,
        a_tau_inv_rigid: hom_dim(&tau_inv(&reg), &reg)? == 0,
    })
}

/// Classical tilting and cotilting modules assembled from a complete catalog
/// of indecomposables, compared against 1-Gorensteinness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm26Report {
    pub gorenstein: GorensteinReport,
    pub tilting: usize,
    pub cotilting: usize,
    pub cotilting_not_tilting: usize,
    pub tilting_not_cotilting: usize,
}

impl Thm26Report {
    pub fn one_gorenstein(&self) -> Option<bool> {
        self.gorenstein.at_most(1)
    }

    /// Every cotilting module is tilting, and every tilting module is
    /// cotilting, exactly when `A` is Gorenstein with `id_A A ≤ 1`.
    pub fn consistent(&self) -> bool {
        let Some(g) = self.one_gorenstein() else { return false };
        (self.cotilting_not_tilting == 0) == g && (self.tilting_not_cotilting == 0) == g
    }
}

/// Basic classical tilting modules assembled from a complete catalog of indecomposables.
pub fn classical_tilting_modules(a: &Algebra, catalog: &[Module], cutoff: usize) -> Result<Vec<Module>> {
    basic_candidates(a, catalog, false, cutoff)
}

/// Basic classical cotilting modules assembled from a complete catalog of indecomposables.
pub fn classical_cotilting_modules(a: &Algebra, catalog: &[Module], cutoff: usize) -> Result<Vec<Module>> {
    basic_candidates(a, catalog, true, cutoff)
}

/// Cliques of size `n` among indecomposables with `pd ≤ 1` (or `id ≤ 1`) and
/// pairwise vanishing `Ext^1`.
fn basic_candidates(a: &Algebra, catalog: &[Module], dual_side: bool, cutoff: usize) -> Result<Vec<Module>> {
    let n = a.num_vertices();
    let mut ok = Vec::new();
    for m in catalog {
        let d = if dual_side { id(m, cutoff)? } else { pd(m, cutoff)? };
        if d.at_most(1) == Some(true) && ext_dim(m, m, 1)? == 0 {
            ok.push(m.clone());
        }
    }
    let k = ok.len();
    let mut compat = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            compat[i][j] = ext_dim(&ok[i], &ok[j], 1)? == 0;
        }
    }
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(compat: &[Vec<bool>], n: usize, from: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == n {
            out.push(chosen.clone());
            return;
        }
        for i in from..compat.len() {
            if chosen.iter().all(|&j| compat[i][j] && compat[j][i]) {
                chosen.push(i);
                rec(compat, n, i + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut sets = Vec::new();
    rec(&compat, n, 0, &mut chosen, &mut sets);
    for s in sets {
        out.push(Module::direct_sum_of(a, &s.iter().map(|&i| ok[i].clone()).collect::<Vec<_>>()));
    }
    Ok(out)
}

pub fn verify_thm_2_6(a: &Algebra, catalog: &[Module], cutoff: usize) -> Result<Thm26Report> {
    let gorenstein = is_iwanaga_gorenstein(a, cutoff)?;
    let tilting = basic_candidates(a, catalog, false, cutoff)?;
    let cotilting = basic_candidates(a, catalog, true, cutoff)?;
    let mut cotilting_not_tilting = 0;
    for c in &cotilting {
        if !is_classical_tilting(c)? {
            cotilting_not_tilting += 1;
        }
    }
    let mut tilting_not_cotilting = 0;
    for t in &tilting {
        if !is_classical_cotilting(t)? {
            tilting_not_cotilting += 1;
        }
    }
    Ok(Thm26Report {
        gorenstein,
        tilting: tilting.len(),
        cotilting: cotilting.len(),
        cotilting_not_tilting,
        tilting_not_cotilting,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cor28Report {
    pub tau_tilting: usize,
    pub tau_inv_tilting: usize,
    /// Every τ-tilting module is τ⁻¹-tilting.
    pub all_tau_are_tau_inv: bool,
    /// Every τ⁻¹-tilting module is τ-tilting.
    pub all_tau_inv_are_tau: bool,
    pub one_gorenstein: Option<bool>,
}

impl Cor28Report {
    /// Either hypothesis forces `id_A A ≤ 1`.
    pub fn holds(&self) -> bool {
        !(self.all_tau_are_tau_inv || self.all_tau_inv_are_tau) || self.one_gorenstein == Some(true)
    }

    /// 1-Gorenstein while both hypotheses fail.
    pub fn converse_fails(&self) -> bool {
        self.one_gorenstein == Some(true) && !self.all_tau_are_tau_inv && !self.all_tau_inv_are_tau
    }
}

/// τ⁻¹-tilting modules are found as duals of τ-tilting modules over the opposite algebra.
pub fn verify_cor_2_8(
    a: &Algebra,
    pairs: &[SupportTauTiltingPair],
    opposite_pairs: &[SupportTauTiltingPair],
    cutoff: usize,
) -> Result<Cor28Report> {
    let n = a.num_vertices();
    let tau_tilting: Vec<Module> = pairs.iter().filter(|p| p.summands.len() == n).map(|p| p.module(a)).collect();
    let op = a.opposite();
    let tau_inv_tilting: Vec<Module> = opposite_pairs
        .iter()
        .filter(|p| p.summands.len() == n)
        .map(|p| p.module(&op).dual())
        .collect();
    let mut all_tau_are_tau_inv = true;
    for t in &tau_tilting {
        if hom_dim(&tau_inv(t), t)? != 0 {
            all_tau_are_tau_inv = false;
        }
    }
    let mut all_tau_inv_are_tau = true;
    for t in &tau_inv_tilting {
        if hom_dim(t, &tau(t))? != 0 {
            all_tau_inv_are_tau = false;
        }
    }
    Ok(Cor28Report {
        tau_tilting: tau_tilting.len(),
        tau_inv_tilting: tau_inv_tilting.len(),
        all_tau_are_tau_inv,
        all_tau_inv_are_tau,
        one_gorenstein: is_iwanaga_gorenstein(a, cutoff)?.at_most(1),
    })
}
