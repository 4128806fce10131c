use crate::endo::{endomorphism_algebra, hom_functor_from_summands, hom_functor_to_endo};
use crate::error::Result;
use crate::homology::{default_cutoff, ext_vanishes_all, id, pd, tau, Dimension};
use crate::rep::{
    cokernel, decompose, distinct_up_to_iso, fac_contains, hom_dim, kernel, left_approximation, right_approximation,
    sub_contains, Module,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WakamatsuReport {
    /// Dimension vector of the kernel (resp. cokernel) of the approximation.
    pub residual_dims: Vec<usize>,
    /// `dim Hom(Y, τT)` (resp. `dim Hom(T, Z)`); zero when the check passes.
    pub obstruction: usize,
}

impl WakamatsuReport {
    pub fn passed(&self) -> bool {
        self.obstruction == 0
    }
}

/// Kernel `Y` of a right add(T)-approximation `T' → x`, checked for `Hom(Y, τT) = 0`.
pub fn wakamatsu_check(t: &Module, x: &Module) -> Result<WakamatsuReport> {
    let g = right_approximation(t, x)?;
    let (y, _) = kernel(&g);
    Ok(WakamatsuReport { residual_dims: y.dims().to_vec(), obstruction: hom_dim(&y, &tau(t))? })
}

/// Cokernel `Z` of a left add(τT)-approximation `y → U`, checked for `Hom(T, Z) = 0`.
pub fn wakamatsu_check_dual(t: &Module, y: &Module) -> Result<WakamatsuReport> {
    let tt = tau(t);
    let z = if tt.is_zero() { Module::zero(y.algebra()) } else { cokernel(&left_approximation(y, &tt)?).0 };
    Ok(WakamatsuReport { residual_dims: z.dims().to_vec(), obstruction: hom_dim(t, &z)? })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    /// `pd_A M ≤ 1` (resp. `id_A N ≤ 1`).
    DimensionAtMostOne,
    /// Ext vanishing in all positive degrees, certified by the resolution length or its period.
    ExtVanishing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdBoundReport {
    /// `None` when the module is outside Fac T (resp. Sub τT) or neither hypothesis holds.
    pub hypothesis: Option<Hypothesis>,
    /// Projective dimension of `Hom(T, M)` over `B` (resp. `Hom(N, τT)` over `C`).
    pub lhs: Option<Dimension>,
    /// `pd_A M` (resp. `id_A N`).
    pub rhs: Dimension,
}

impl PdBoundReport {
    pub fn precondition_failed(&self) -> bool {
        self.hypothesis.is_none()
    }

    /// `Some(lhs ≤ rhs)` when both sides are determined and the hypotheses hold.
    pub fn holds(&self) -> Option<bool> {
        self.hypothesis?;
        match (self.lhs?, self.rhs) {
            (_, Dimension::Infinite) => Some(true),
            (Dimension::Finite(a), Dimension::Finite(b)) => Some(a <= b),
            (Dimension::Infinite, Dimension::Finite(_)) => Some(false),
            _ => None,
        }
    }
}

/// `pd_B Hom(T, M) ≤ pd_A M` for `M ∈ Fac T`, `B = End T`.
pub fn check_pd_bound_fac(t: &Module, m: &Module) -> Result<PdBoundReport> {
    let a = t.algebra();
    let cutoff = default_cutoff(a);
    let rhs = pd(m, cutoff)?;
    let hypothesis = if !fac_contains(t, m)? {
        None
    } else if rhs.at_most(1) == Some(true) {
        Some(Hypothesis::DimensionAtMostOne)
    } else if ext_vanishes_all(t, &m.direct_sum(t), cutoff)? {
        Some(Hypothesis::ExtVanishing)
    } else {
        None
    };
    if hypothesis.is_none() {
        return Ok(PdBoundReport { hypothesis, lhs: None, rhs });
    }
    let (b, bk) = endomorphism_algebra(&distinct_up_to_iso(&decompose(t)?))?;
    let y = hom_functor_to_endo(&bk, m)?;
    let lhs = pd(&y, default_cutoff(&b))?;
    Ok(PdBoundReport { hypothesis, lhs: Some(lhs), rhs })
}

/// `pd_C Hom(N, τT) ≤ id_A N` for `N ∈ Sub τT`, `C = End(τT)^op`.
pub fn check_pd_bound_sub(t: &Module, n: &Module) -> Result<PdBoundReport> {
    let a = t.algebra();
    let cutoff = default_cutoff(a);
    let u = tau(t);
    let rhs = id(n, cutoff)?;
    let hypothesis = if u.is_zero() || !sub_contains(&u, n)? {
        None
    } else if rhs.at_most(1) == Some(true) {
        Some(Hypothesis::DimensionAtMostOne)
    } else if ext_vanishes_all(&n.direct_sum(&u), &u, cutoff)? {
        Some(Hypothesis::ExtVanishing)
    } else {
        None
    };
    if hypothesis.is_none() {
        return Ok(PdBoundReport { hypothesis, lhs: None, rhs });
    }
    let (c, bk) = endomorphism_algebra(&distinct_up_to_iso(&decompose(&u)?))?;
    let y = hom_functor_from_summands(&bk, n)?;
    let lhs = pd(&y, default_cutoff(&c))?;
    Ok(PdBoundReport { hypothesis, lhs: Some(lhs), rhs })
}
