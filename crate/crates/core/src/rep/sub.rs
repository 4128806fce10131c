use super::hom::hom_basis_unchecked;
use super::module::{Module, ModuleMap};
use crate::error::Result;
use crate::linalg::{vec_is_zero, Mat, QuotientCoords, Scalar, Span};

/// Per-vertex subspaces of a module; vectors live in the vertex components.
pub type Graded = Vec<Vec<Vec<Scalar>>>;

/// Splits a flat element into vertex components.
pub fn split_flat(m: &Module, v: &[Scalar]) -> Vec<Vec<Scalar>> {
    let off = m.offsets();
    (0..m.dims().len()).map(|i| v[off[i]..off[i + 1]].to_vec()).collect()
}

pub fn join_flat(m: &Module, parts: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(m.dim());
    for p in parts {
        out.extend(p.iter().cloned());
    }
    out
}

fn vertex_vector(m: &Module, v: usize, x: &[Scalar]) -> Vec<Scalar> {
    let off = m.offsets();
    let mut out = vec![m.field().zero(); m.dim()];
    out[off[v]..off[v + 1]].clone_from_slice(x);
    out
}

/// The submodule generated by flat elements: closure under the generators.
pub fn generated_submodule(m: &Module, elements: &[Vec<Scalar>]) -> Graded {
    let alg = m.algebra();
    let f = m.field();
    let nv = alg.num_vertices();
    let mut spans: Vec<Span> = (0..nv).map(|v| Span::untracked(f, m.dim_at(v))).collect();
    let mut queue: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for e in elements {
        for (v, part) in split_flat(m, e).into_iter().enumerate() {
            if !vec_is_zero(&part) {
                queue.push((v, part));
            }
        }
    }
    while let Some((v, x)) = queue.pop() {
        if !spans[v].insert(&x) {
            continue;
        }
        for &g in alg.generators() {
            let (s, t) = alg.ends(g);
            if s != v || m.dim_at(t) == 0 {
                continue;
            }
            let y = crate::linalg::vec_mat(&x, m.act(g));
            if !vec_is_zero(&y) {
                queue.push((t, y));
            }
        }
    }
    spans.into_iter().map(|s| s.basis().to_vec()).collect()
}

/// The submodule with the given per-vertex basis, and its inclusion.
/// The subspaces must be closed under the action.
pub fn submodule(m: &Module, basis: &Graded) -> (Module, ModuleMap) {
    let alg = m.algebra();
    let f = m.field();
    let nv = alg.num_vertices();
    let spans: Vec<Span> = (0..nv).map(|v| Span::from_vectors(f, m.dim_at(v), &basis[v])).collect();
    let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
    let act = (0..alg.dim())
        .map(|b| {
            let (s, t) = alg.ends(b);
            let rows = basis[s]
                .iter()
                .map(|u| {
                    let y = crate::linalg::vec_mat(u, m.act(b));
                    spans[t].coords(&y).expect("subspace closed under the action")
                })
                .collect();
            Mat::from_rows(f, dims[t], rows)
        })
        .collect();
    let sub = Module::from_raw(alg, dims.clone(), act);
    let incl_blocks = (0..nv).map(|v| Mat::from_rows(f, m.dim_at(v), basis[v].clone())).collect();
    let incl = ModuleMap::from_raw(&sub, m, incl_blocks);
    (sub, incl)
}

/// `m / U` and the canonical projection, with complements chosen among
/// standard basis vectors.
pub fn quotient(m: &Module, sub: &Graded) -> (Module, ModuleMap) {
    let alg = m.algebra();
    let f = m.field();
    let nv = alg.num_vertices();
    let mut coords = Vec::with_capacity(nv);
    let mut comps = Vec::with_capacity(nv);
    for v in 0..nv {
        let span = Span::from_vectors(f, m.dim_at(v), &sub[v]);
        let basis = span.basis().to_vec();
        let comp = span.complement();
        coords.push(QuotientCoords::new(f, m.dim_at(v), &basis, &comp));
        comps.push(comp);
    }
    let dims: Vec<usize> = comps.iter().map(Vec::len).collect();
    let act = (0..alg.dim())
        .map(|b| {
            let (s, t) = alg.ends(b);
            let rows = comps[s].iter().map(|c| coords[t].class(&crate::linalg::vec_mat(c, m.act(b)))).collect();
            Mat::from_rows(f, dims[t], rows)
        })
        .collect();
    let q = Module::from_raw(alg, dims.clone(), act);
    let proj_blocks = (0..nv)
        .map(|v| {
            let rows = (0..m.dim_at(v))
                .map(|i| {
                    let mut e = vec![f.zero(); m.dim_at(v)];
                    e[i] = f.one();
                    coords[v].class(&e)
                })
                .collect();
            Mat::from_rows(f, dims[v], rows)
        })
        .collect();
    let proj = ModuleMap::from_raw(m, &q, proj_blocks);
    (q, proj)
}

/// Kernel of `f` with its inclusion into the source.
pub fn kernel(f: &ModuleMap) -> (Module, ModuleMap) {
    let basis: Graded = f.blocks().iter().map(|b| b.left_kernel_vectors()).collect();
    submodule(f.source(), &basis)
}

pub fn image_graded(f: &ModuleMap) -> Graded {
    f.blocks().iter().map(|b| b.row_space()).collect()
}

/// Image of `f`: the module, the corestriction onto it, and its inclusion.
pub fn image(f: &ModuleMap) -> (Module, ModuleMap, ModuleMap) {
    let basis = image_graded(f);
    let (im, incl) = submodule(f.target(), &basis);
    let field = f.source().field();
    let blocks = (0..basis.len())
        .map(|v| {
            let span = Span::from_vectors(field, f.target().dim_at(v), &basis[v]);
            let rows = f.block(v).to_rows().iter().map(|r| span.coords(r).expect("row in image")).collect();
            Mat::from_rows(field, basis[v].len(), rows)
        })
        .collect();
    let onto = ModuleMap::from_raw(f.source(), &im, blocks);
    (im, onto, incl)
}

/// `g` with `g.then(incl) = f`, when `f` lands in the image of the injection `incl`.
pub fn factor_through_mono(f: &ModuleMap, incl: &ModuleMap) -> Option<ModuleMap> {
    let field = f.source().field();
    let blocks = (0..f.blocks().len())
        .map(|v| {
            let rows = f.block(v).to_rows().iter().map(|r| incl.block(v).solve_left(r).ok().flatten()).collect::<Option<Vec<_>>>()?;
            Some(Mat::from_rows(field, incl.source().dim_at(v), rows))
        })
        .collect::<Option<Vec<_>>>()?;
    Some(ModuleMap::from_raw(f.source(), incl.source(), blocks))
}

/// Cokernel of `f` with the projection from the target.
pub fn cokernel(f: &ModuleMap) -> (Module, ModuleMap) {
    quotient(f.target(), &image_graded(f))
}

pub fn radical_graded(m: &Module) -> Graded {
    let alg = m.algebra();
    let f = m.field();
    let nv = alg.num_vertices();
    let mut spans: Vec<Span> = (0..nv).map(|v| Span::untracked(f, m.dim_at(v))).collect();
    for &g in alg.generators() {
        let t = alg.ends(g).1;
        for row in m.act(g).to_rows() {
            spans[t].insert(&row);
        }
    }
    spans.into_iter().map(|s| s.basis().to_vec()).collect()
}

pub fn socle_graded(m: &Module) -> Graded {
    let alg = m.algebra();
    let f = m.field();
    (0..alg.num_vertices())
        .map(|v| {
            let d = m.dim_at(v);
            let outgoing: Vec<&Mat> =
                alg.generators().iter().filter(|&&g| alg.ends(g).0 == v).map(|&g| m.act(g)).collect();
            if outgoing.is_empty() {
                return (0..d)
                    .map(|i| {
                        let mut e = vec![f.zero(); d];
                        e[i] = f.one();
                        e
                    })
                    .collect();
            }
            let mut stacked = outgoing[0].clone();
            for a in &outgoing[1..] {
                stacked = stacked.hstack(a);
            }
            stacked.left_kernel_vectors()
        })
        .collect()
}

/// Radical, top and socle, with `rad ↪ m`, `m ↠ top` and `soc ↪ m`.
pub struct RadicalTopSocle {
    pub radical: Module,
    pub radical_inclusion: ModuleMap,
    pub top: Module,
    pub top_projection: ModuleMap,
    pub socle: Module,
    pub socle_inclusion: ModuleMap,
}

pub fn radical_top_socle(m: &Module) -> RadicalTopSocle {
    let rad = radical_graded(m);
    let (radical, radical_inclusion) = submodule(m, &rad);
    let (top, top_projection) = quotient(m, &rad);
    let (socle, socle_inclusion) = submodule(m, &socle_graded(m));
    RadicalTopSocle { radical, radical_inclusion, top, top_projection, socle, socle_inclusion }
}

pub fn top_dims(m: &Module) -> Vec<usize> {
    let rad = radical_graded(m);
    m.dims().iter().zip(&rad).map(|(d, r)| d - r.len()).collect()
}

pub fn socle_dims(m: &Module) -> Vec<usize> {
    socle_graded(m).iter().map(Vec::len).collect()
}

/// Sum of the images of all maps `t → m`.
pub fn trace_graded(t: &Module, m: &Module) -> Graded {
    let f = m.field();
    let mut spans: Vec<Span> = (0..m.dims().len()).map(|v| Span::untracked(f, m.dim_at(v))).collect();
    for h in hom_basis_unchecked(t, m) {
        for (v, b) in h.blocks().iter().enumerate() {
            for row in b.to_rows() {
                spans[v].insert(&row);
            }
        }
    }
    spans.into_iter().map(|s| s.basis().to_vec()).collect()
}

/// Common kernel of all maps `n → u`.
pub fn reject_graded(u: &Module, n: &Module) -> Graded {
    let f = n.field();
    let maps = hom_basis_unchecked(n, u);
    (0..n.dims().len())
        .map(|v| {
            let d = n.dim_at(v);
            let blocks: Vec<&Mat> = maps.iter().map(|h| h.block(v)).filter(|b| b.cols() > 0).collect();
            if blocks.is_empty() {
                return (0..d)
                    .map(|i| {
                        let mut e = vec![f.zero(); d];
                        e[i] = f.one();
                        e
                    })
                    .collect();
            }
            let mut stacked = blocks[0].clone();
            for b in &blocks[1..] {
                stacked = stacked.hstack(b);
            }
            stacked.left_kernel_vectors()
        })
        .collect()
}

/// `m ∈ Fac t`: the trace of `t` in `m` is all of `m`.
pub fn fac_contains(t: &Module, m: &Module) -> Result<bool> {
    t.check_owner(m)?;
    Ok(trace_graded(t, m).iter().map(Vec::len).sum::<usize>() == m.dim())
}

/// `n ∈ Sub u`: the reject of `u` in `n` is zero.
pub fn sub_contains(u: &Module, n: &Module) -> Result<bool> {
    u.check_owner(n)?;
    Ok(reject_graded(u, n).iter().all(Vec::is_empty))
}

/// A flat element supported at one vertex.
pub fn element_at(m: &Module, v: usize, x: &[Scalar]) -> Vec<Scalar> {
    vertex_vector(m, v, x)
}
