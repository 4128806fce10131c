//! τ-rigidity, support τ-tilting pairs and their Hasse quiver.

use std::fmt::Write as _;

use crate::algebra::Algebra;
use crate::enumerate::{catalog, EnumerationBound};
use crate::error::Result;
use crate::homology::{ext_dim, tau, tau_inv};
use crate::rep::format::{layer_label, sum_label};
use crate::rep::{fac_contains, hom_dim, is_isomorphic, num_distinct_summands, Module};

/// `Hom(m, τm) = 0`.
pub fn is_tau_rigid(m: &Module) -> Result<bool> {
    Ok(hom_dim(m, &tau(m))? == 0)
}

/// `Hom(τ⁻¹m, m) = 0`.
pub fn is_tau_inv_rigid(m: &Module) -> Result<bool> {
    Ok(hom_dim(&tau_inv(m), m)? == 0)
}

/// τ-rigid with as many isomorphism classes of summands as vertices.
pub fn is_tau_tilting(m: &Module) -> Result<bool> {
    Ok(is_tau_rigid(m)? && num_distinct_summands(m)? == m.algebra().num_vertices())
}

pub fn is_tau_inv_tilting(m: &Module) -> Result<bool> {
    Ok(is_tau_inv_rigid(m)? && num_distinct_summands(m)? == m.algebra().num_vertices())
}

/// Indecomposable τ-rigid modules with dimension vectors within the caps.
/// Over `Q` the enumeration runs over `F_2` and members are lifted back.
pub fn indec_tau_rigid_catalog(a: &Algebra, bound: &EnumerationBound) -> Result<Vec<Module>> {
    let mods = catalog(a, bound)?;
    let mut out = Vec::new();
    for m in mods {
        if is_tau_rigid(&m)? {
            out.push(m);
        }
    }
    Ok(out)
}

/// Both sides of `Hom(x, τy) = 0 ⇔ Ext^1(y, Fac x) = 0`. `Fac x` is read off
/// the indecomposables of `catalog` generated by `x`, so the catalog must be complete.
pub fn fac_ext_criterion(x: &Module, y: &Module, catalog: &[Module]) -> Result<(bool, bool)> {
    let hom_side = hom_dim(x, &tau(y))? == 0;
    let mut ext_side = true;
    for z in catalog {
        if fac_contains(x, z)? && ext_dim(y, z, 1)? != 0 {
            ext_side = false;
            break;
        }
    }
    Ok((hom_side, ext_side))
}

/// Every basic τ-rigid module, as summand subsets of the pairs' modules,
/// deduplicated up to isomorphism.
pub fn basic_tau_rigid_modules(a: &Algebra, pairs: &[SupportTauTiltingPair]) -> Result<Vec<Module>> {
    let mut out: Vec<Module> = Vec::new();
    for p in pairs {
        let k = p.summands.len();
        for mask in 1u32..(1 << k) {
            let parts: Vec<Module> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| p.summands[i].clone()).collect();
            let m = Module::direct_sum_of(a, &parts);
            let mut seen = false;
            for x in &out {
                if x.dims() == m.dims() && is_isomorphic(x, &m)? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// A support τ-tilting pair `(M, P)` with `P = ⊕_{v ∈ support} P_v`.
#[derive(Clone, Debug)]
pub struct SupportTauTiltingPair {
    /// Pairwise non-isomorphic indecomposable summands of `M`.
    pub summands: Vec<Module>,
    /// Vertices `v` with `P_v` a summand of `P`.
    pub projective_vertices: Vec<usize>,
    /// `dim Hom(M, τM)`; zero for a valid pair.
    pub hom_m_tau_m: usize,
    /// `dim Hom(P, M)`; zero for a valid pair.
    pub hom_p_m: usize,
}

impl SupportTauTiltingPair {
    pub fn module(&self, a: &Algebra) -> Module {
        Module::direct_sum_of(a, &self.summands)
    }

    pub fn size(&self) -> usize {
        self.summands.len() + self.projective_vertices.len()
    }

    pub fn label(&self, a: &Algebra) -> String {
        let m = sum_label(&self.summands);
        if self.projective_vertices.is_empty() {
            return m;
        }
        let p: Vec<String> = self.projective_vertices.iter().map(|&v| format!("P{}", a.vertex_label(v))).collect();
        format!("{m} ; {}", p.join(" (+) "))
    }
}

fn sort_key(m: &Module) -> (Vec<usize>, Vec<i64>) {
    let entries = m.actions().iter().flat_map(|a| a.entries().iter().map(|x| x.symmetric_i64().unwrap_or(0))).collect();
    (m.dims().to_vec(), entries)
}

/// All support τ-tilting pairs with `M` built from the catalog, which the
/// caller asserts contains every indecomposable τ-rigid module.
pub fn stt_pairs(a: &Algebra, catalog: &[Module]) -> Result<Vec<SupportTauTiltingPair>> {
    let n = a.num_vertices();
    let mut cat: Vec<Module> = Vec::new();
    for m in catalog {
        if is_tau_rigid(m)? {
            cat.push(m.clone());
        }
    }
    cat.sort_by_key(sort_key);
    let taus: Vec<Module> = cat.iter().map(tau).collect();
    let k = cat.len();
    let mut compatible = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            compatible[i][j] = hom_dim(&cat[i], &taus[j])? == 0;
        }
    }
    let mut pairs = Vec::new();
    let mut chosen = Vec::new();
    cliques(&compatible, n, 0, &mut chosen, &mut |s: &[usize]| {
        let support: Vec<usize> = (0..n).filter(|&v| s.iter().all(|&i| cat[i].dim_at(v) == 0)).collect();
        if s.len() + support.len() == n {
            pairs.push(SupportTauTiltingPair {
                summands: s.iter().map(|&i| cat[i].clone()).collect(),
                projective_vertices: support,
                hom_m_tau_m: 0,
                hom_p_m: 0,
            });
        }
    });
    for p in &mut pairs {
        let m = p.module(a);
        p.hom_m_tau_m = hom_dim(&m, &tau(&m))?;
        let proj = Module::direct_sum_of(a, &p.projective_vertices.iter().map(|&v| Module::projective(a, v)).collect::<Vec<_>>());
        p.hom_p_m = hom_dim(&proj, &m)?;
    }
    pairs.sort_by_key(|p| {
        let total: usize = p.summands.iter().map(Module::dim).sum();
        (std::cmp::Reverse(total), p.summands.iter().map(sort_key).collect::<Vec<_>>(), p.projective_vertices.clone())
    });
    Ok(pairs)
}

/// Subsets of pairwise compatible indices (in both orders) of size at most `max`.
fn cliques(compat: &[Vec<bool>], max: usize, from: usize, chosen: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    emit(chosen);
    if chosen.len() == max {
        return;
    }
    for i in from..compat.len() {
        if compat[i][i] && chosen.iter().all(|&j| compat[i][j] && compat[j][i]) {
            chosen.push(i);
            cliques(compat, max, i + 1, chosen, emit);
            chosen.pop();
        }
    }
}

/// Support τ-tilting quiver: edges are Hasse covers of `Fac M ⊇ Fac M'`,
/// oriented from larger to smaller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseQuiver {
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl HasseQuiver {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn successors(&self, v: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.0 == v).map(|e| e.1).collect()
    }

    pub fn predecessors(&self, v: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.1 == v).map(|e| e.0).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.predecessors(v).is_empty()).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.successors(v).is_empty()).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = (0..self.len()).map(|v| self.predecessors(v).len()).collect();
        let mut stack: Vec<usize> = (0..self.len()).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for w in self.successors(v) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        seen == self.len()
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.successors(v).into_iter().chain(self.predecessors(v)) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Lines `i: label -> j k ...`.
    pub fn adjacency_report(&self) -> String {
        let mut out = String::new();
        for (v, l) in self.labels.iter().enumerate() {
            let succ: Vec<String> = self.successors(v).iter().map(usize::to_string).collect();
            writeln!(out, "{v}: {l} -> {}", succ.join(" ")).unwrap();
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph stt {\n");
        for (v, l) in self.labels.iter().enumerate() {
            writeln!(out, "  n{v} [label=\"{}\"];", l.replace('"', "\\\"")).unwrap();
        }
        for (s, t) in &self.edges {
            writeln!(out, "  n{s} -> n{t};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

pub fn stt_hasse_quiver(a: &Algebra, pairs: &[SupportTauTiltingPair]) -> Result<HasseQuiver> {
    let k = pairs.len();
    let mods: Vec<Module> = pairs.iter().map(|p| p.module(a)).collect();
    // geq[i][j]: Fac M_i contains every summand of M_j
    let mut geq = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut all = true;
            for s in &pairs[j].summands {
                if !fac_contains(&mods[i], s)? {
                    all = false;
                    break;
                }
            }
            geq[i][j] = all;
        }
    }
    let gt = |i: usize, j: usize| i != j && geq[i][j] && !geq[j][i];
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if gt(i, j) && !(0..k).any(|z| gt(i, z) && gt(z, j)) {
                edges.push((i, j));
            }
        }
    }
    Ok(HasseQuiver { labels: pairs.iter().map(|p| p.label(a)).collect(), edges })
}

/// Label of a single indecomposable, re-exported for catalog indexes.
pub fn module_label(m: &Module) -> String {
    layer_label(m)
}
