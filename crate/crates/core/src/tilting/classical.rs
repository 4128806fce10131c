use crate::error::{Error, Result};
use crate::homology::{default_cutoff, ext_dim, ext_vanishes_up_to, pd};
use crate::rep::{cokernel, distinct_up_to_iso, decompose, left_approximation_by, num_distinct_summands, Module};

pub use crate::algebra::is_faithful;

/// Largest `n` accepted by [`tilting_n_check`].
pub const MAX_TILTING_N: usize = 3;

/// `pd m ≤ 1` and `Ext^1(m, m) = 0`. Errors when the resolution is undetermined.
pub fn is_partial_tilting(m: &Module) -> Result<bool> {
    let cutoff = default_cutoff(m.algebra());
    let d = pd(m, cutoff)?;
    let small = d.at_most(1).ok_or(Error::ResolutionUnknown(cutoff))?;
    Ok(small && ext_dim(m, m, 1)? == 0)
}

/// Partial tilting with as many isomorphism classes of summands as vertices.
pub fn is_classical_tilting(m: &Module) -> Result<bool> {
    Ok(is_partial_tilting(m)? && num_distinct_summands(m)? == m.algebra().num_vertices())
}

/// `Dm` is classical tilting over the opposite algebra.
pub fn is_classical_cotilting(m: &Module) -> Result<bool> {
    is_classical_tilting(&m.dual())
}

/// Outcome of the three conditions for an `n`-tilting module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingNCheck {
    pub n: usize,
    pub pd_ok: bool,
    pub ext_ok: bool,
    /// Number of terms `T_0, ..., T_k` of the add(m)-coresolution of `A`, when it closes.
    pub coresolution_terms: Option<usize>,
    pub diagnostic: String,
}

impl TiltingNCheck {
    pub fn passed(&self) -> bool {
        self.pd_ok && self.ext_ok && self.coresolution_terms.is_some_and(|k| k <= self.n + 1)
    }
}

/// `pd m ≤ n`, `Ext^i(m, m) = 0` for `1 ≤ i ≤ n`, and `0 → A → T_0 → ... → T_n → 0`
/// built from iterated left add(m)-approximations.
pub fn tilting_n_check(m: &Module, n: usize) -> Result<TiltingNCheck> {
    if n > MAX_TILTING_N {
        return Err(Error::Dimension(format!("n = {n} exceeds the supported maximum {MAX_TILTING_N}")));
    }
    let a = m.algebra();
    let cutoff = default_cutoff(a);
    let pd_ok = pd(m, cutoff)?.at_most(n).ok_or(Error::ResolutionUnknown(cutoff))?;
    let ext_ok = ext_vanishes_up_to(m, m, n)?;
    let classes = distinct_up_to_iso(&decompose(m)?);
    let mut cur = Module::regular(a);
    let mut terms = 0;
    let mut diagnostic = String::new();
    let mut closed = None;
    while terms <= n {
        if cur.is_zero() {
            closed = Some(terms);
            break;
        }
        let f = left_approximation_by(&cur, &classes);
        if !f.is_injective() {
            diagnostic = format!("approximation {terms} is not injective");
            break;
        }
        terms += 1;
        cur = cokernel(&f).0;
    }
    if closed.is_none() && diagnostic.is_empty() {
        if cur.is_zero() {
            closed = Some(terms);
        } else {
            diagnostic = format!("cokernel nonzero after {terms} terms");
        }
    }
    Ok(TiltingNCheck { n, pd_ok, ext_ok, coresolution_terms: closed, diagnostic })
}

pub fn is_tilting_n(m: &Module, n: usize) -> Result<bool> {
    Ok(tilting_n_check(m, n)?.passed())
}

/// `Dm` is `n`-tilting over the opposite algebra.
pub fn is_cotilting_n(m: &Module, n: usize) -> Result<bool> {
    is_tilting_n(&m.dual(), n)
}
