use std::fmt;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::linalg::{Mat, Scalar, Span};
use crate::rep::{is_isomorphic, kernel, radical_graded, Module, ModuleMap};

/// `P0 → m` with `P0 = ⊕ P_v^{mult[v]}` (copies ordered by vertex).
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub map: ModuleMap,
    /// Vertex of each projective copy, in order.
    pub vertices: Vec<usize>,
    /// For each copy, the image of its generator `e_v` (a flat element of `m`).
    pub generators: Vec<Vec<Scalar>>,
}

impl ProjectiveCover {
    pub fn multiplicities(&self) -> Vec<usize> {
        let n = self.map.target().algebra().num_vertices();
        let mut m = vec![0; n];
        for &v in &self.vertices {
            m[v] += 1;
        }
        m
    }
}

/// `⊕_k P_{vertices[k]}`.
pub fn projective_sum(algebra: &Algebra, vertices: &[usize]) -> Module {
    let ps: Vec<Module> = vertices.iter().map(|&v| Module::projective(algebra, v)).collect();
    Module::direct_sum_of(algebra, &ps)
}

/// Offsets of the copies of a projective sum inside each vertex component.
pub(crate) fn copy_offsets(algebra: &Algebra, vertices: &[usize]) -> Vec<Vec<usize>> {
    let n = algebra.num_vertices();
    let cartan = algebra.cartan_matrix();
    let mut acc = vec![0; n];
    let mut out = Vec::with_capacity(vertices.len());
    for &v in vertices {
        out.push(acc.clone());
        for w in 0..n {
            acc[w] += cartan[v][w];
        }
    }
    out
}

/// The map `⊕ P_{src[l]} → target` sending generator `l` to the flat element `images[l]`.
pub fn map_from_projectives(target: &Module, src: &[usize], images: &[Vec<Scalar>]) -> ModuleMap {
    let alg = target.algebra();
    let f = alg.field();
    let n = alg.num_vertices();
    let source = projective_sum(alg, src);
    let off = target.offsets();
    let blocks = (0..n)
        .map(|w| {
            let mut rows = Vec::new();
            for (l, &v) in src.iter().enumerate() {
                let x = &images[l][off[v]..off[v + 1]];
                for b in alg.basis_between(v, w) {
                    rows.push(crate::linalg::vec_mat(x, target.act(b)));
                }
            }
            Mat::from_rows(f, target.dim_at(w), rows)
        })
        .collect();
    ModuleMap::from_raw(&source, target, blocks)
}

/// Flat element of `⊕ P_{vertices[k]}` placing the algebra element `a ∈ e_v A` in copy `k`.
pub(crate) fn element_in_projective_sum(algebra: &Algebra, vertices: &[usize], k: usize, a: &[Scalar]) -> Vec<Scalar> {
    let n = algebra.num_vertices();
    let offs = copy_offsets(algebra, vertices);
    let cartan = algebra.cartan_matrix();
    let totals: Vec<usize> = (0..n).map(|w| vertices.iter().map(|&v| cartan[v][w]).sum()).collect();
    let mut vertex_off = vec![0; n + 1];
    for w in 0..n {
        vertex_off[w + 1] = vertex_off[w] + totals[w];
    }
    let v = vertices[k];
    let mut out = vec![algebra.field().zero(); vertex_off[n]];
    for w in 0..n {
        for (i, b) in algebra.basis_between(v, w).into_iter().enumerate() {
            out[vertex_off[w] + offs[k][w] + i] = a[b].clone();
        }
    }
    out
}

/// Reads copy `l`'s component of a flat element of `⊕ P_{vertices[l]}` as an algebra element.
pub(crate) fn component_in_projective_sum(
    algebra: &Algebra,
    vertices: &[usize],
    l: usize,
    x: &[Scalar],
) -> Vec<Scalar> {
    let n = algebra.num_vertices();
    let offs = copy_offsets(algebra, vertices);
    let cartan = algebra.cartan_matrix();
    let totals: Vec<usize> = (0..n).map(|w| vertices.iter().map(|&v| cartan[v][w]).sum()).collect();
    let mut vertex_off = vec![0; n + 1];
    for w in 0..n {
        vertex_off[w + 1] = vertex_off[w] + totals[w];
    }
    let v = vertices[l];
    let mut a = vec![algebra.field().zero(); algebra.dim()];
    for w in 0..n {
        for (i, b) in algebra.basis_between(v, w).into_iter().enumerate() {
            a[b] = x[vertex_off[w] + offs[l][w] + i].clone();
        }
    }
    a
}

/// Minimal projective cover: generators lift a basis of the top.
pub fn projective_cover(m: &Module) -> ProjectiveCover {
    let alg = m.algebra();
    let f = m.field();
    let rad = radical_graded(m);
    let off = m.offsets();
    let mut vertices = Vec::new();
    let mut generators = Vec::new();
    for v in 0..alg.num_vertices() {
        let span = Span::from_vectors(f, m.dim_at(v), &rad[v]);
        for c in span.complement() {
            let mut x = vec![f.zero(); m.dim()];
            x[off[v]..off[v + 1]].clone_from_slice(&c);
            vertices.push(v);
            generators.push(x);
        }
    }
    let map = map_from_projectives(m, &vertices, &generators);
    ProjectiveCover { map, vertices, generators }
}

/// `P1 → P0 → m → 0` with both covers minimal.
#[derive(Clone, Debug)]
pub struct MinimalPresentation {
    pub p1_to_p0: ModuleMap,
    pub p0_to_m: ModuleMap,
    pub p0_vertices: Vec<usize>,
    pub p1_vertices: Vec<usize>,
}

impl MinimalPresentation {
    pub fn p0_multiplicities(&self) -> Vec<usize> {
        count(&self.p0_vertices, self.p0_to_m.target().algebra().num_vertices())
    }
    pub fn p1_multiplicities(&self) -> Vec<usize> {
        count(&self.p1_vertices, self.p0_to_m.target().algebra().num_vertices())
    }
}

fn count(vs: &[usize], n: usize) -> Vec<usize> {
    let mut m = vec![0; n];
    for &v in vs {
        m[v] += 1;
    }
    m
}

pub fn minimal_presentation(m: &Module) -> MinimalPresentation {
    let c0 = projective_cover(m);
    let (k, incl) = kernel(&c0.map);
    let c1 = projective_cover(&k);
    let p1_to_p0 = c1.map.then(&incl);
    MinimalPresentation { p1_to_p0, p0_to_m: c0.map, p0_vertices: c0.vertices, p1_vertices: c1.vertices }
}

/// Outcome of a syzygy computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dimension {
    Finite(usize),
    Infinite,
    Unknown(usize),
}

impl Dimension {
    pub fn is_finite(self) -> bool {
        matches!(self, Dimension::Finite(_))
    }
    pub fn at_most(self, n: usize) -> Option<bool> {
        match self {
            Dimension::Finite(k) => Some(k <= n),
            Dimension::Infinite => Some(false),
            Dimension::Unknown(_) => None,
        }
    }
    pub fn max(self, other: Dimension) -> Dimension {
        use Dimension::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (Unknown(a), Unknown(b)) => Unknown(a.max(b)),
            (Unknown(a), _) | (_, Unknown(a)) => Unknown(a),
            (Finite(a), Finite(b)) => Finite(a.max(b)),
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(k) => write!(f, "{k}"),
            Dimension::Infinite => write!(f, "inf"),
            Dimension::Unknown(c) => write!(f, "unknown(cutoff {c})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    Finite(usize),
    /// `Ω^i ≅ Ω^j ≠ 0` with `i < j`.
    Infinite { first: usize, repeat: usize },
    Unknown(usize),
}

/// Syzygies `Ω^0 m, Ω^1 m, ...` with the covers and kernel inclusions.
#[derive(Clone, Debug)]
pub struct ResolutionTrace {
    pub syzygies: Vec<Module>,
    pub covers: Vec<ProjectiveCover>,
    /// `Ω^{i+1} ↪ P_i`.
    pub inclusions: Vec<ModuleMap>,
    pub termination: Termination,
}

impl ResolutionTrace {
    pub fn dimension(&self) -> Dimension {
        match self.termination {
            Termination::Finite(k) => Dimension::Finite(k),
            Termination::Infinite { .. } => Dimension::Infinite,
            Termination::Unknown(c) => Dimension::Unknown(c),
        }
    }
}

pub fn default_cutoff(algebra: &Algebra) -> usize {
    4 * algebra.dim()
}

/// Resolves until a zero syzygy, a repeated syzygy, or `cutoff` steps.
pub fn resolve(m: &Module, cutoff: usize) -> Result<ResolutionTrace> {
    let mut syzygies = vec![m.clone()];
    let mut covers = Vec::new();
    let mut inclusions = Vec::new();
    if m.is_zero() {
        return Ok(ResolutionTrace { syzygies, covers, inclusions, termination: Termination::Finite(0) });
    }
    for step in 0..=cutoff {
        let cur = syzygies[step].clone();
        let cover = projective_cover(&cur);
        let (k, incl) = kernel(&cover.map);
        covers.push(cover);
        inclusions.push(incl);
        if k.is_zero() {
            syzygies.push(k);
            return Ok(ResolutionTrace { syzygies, covers, inclusions, termination: Termination::Finite(step) });
        }
        for (i, earlier) in syzygies.iter().enumerate().skip(1) {
            if earlier.dims() == k.dims() && is_isomorphic(earlier, &k)? {
                let j = syzygies.len();
                syzygies.push(k);
                return Ok(ResolutionTrace {
                    syzygies,
                    covers,
                    inclusions,
                    termination: Termination::Infinite { first: i, repeat: j },
                });
            }
        }
        syzygies.push(k);
    }
    Ok(ResolutionTrace { syzygies, covers, inclusions, termination: Termination::Unknown(cutoff) })
}

pub fn pd(m: &Module, cutoff: usize) -> Result<Dimension> {
    Ok(resolve(m, cutoff)?.dimension())
}

/// Injective dimension, through the opposite algebra.
pub fn id(m: &Module, cutoff: usize) -> Result<Dimension> {
    pd(&m.dual(), cutoff)
}

pub fn gl_dim(algebra: &Algebra, cutoff: usize) -> Result<Dimension> {
    let mut d = Dimension::Finite(0);
    for v in 0..algebra.num_vertices() {
        d = d.max(pd(&Module::simple(algebra, v), cutoff)?);
    }
    Ok(d)
}

/// `Ω^k m` for `k` steps (zero once the resolution stops).
pub fn syzygy(m: &Module, k: usize) -> Module {
    let mut cur = m.clone();
    for _ in 0..k {
        if cur.is_zero() {
            break;
        }
        let c = projective_cover(&cur);
        cur = kernel(&c.map).0;
    }
    cur
}
