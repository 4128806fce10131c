use super::algebra::SummandBookkeeping;
use crate::error::{Error, Result};
use crate::homology::{ext1_with_cover, map_from_projectives, projective_cover, ExtSpace, ProjectiveCover};
use crate::linalg::{Mat, Scalar, Span};
use crate::rep::{factor_through_mono, hom_basis, kernel, quotient, Graded, Module, ModuleMap};

fn check_base(bk: &SummandBookkeeping, m: &Module) -> Result<()> {
    if m.algebra() != bk.base() {
        return Err(Error::Bookkeeping("module is not over the algebra of the summands".into()));
    }
    Ok(())
}

fn check_endo(bk: &SummandBookkeeping, y: &Module) -> Result<()> {
    if y.algebra() != bk.algebra() {
        return Err(Error::Bookkeeping("module is not over the endomorphism algebra".into()));
    }
    Ok(())
}

/// Right module from per-vertex spaces with `(b, row r) ↦ coordinates` at the target vertex.
fn assemble(
    algebra: &crate::algebra::Algebra,
    dims: Vec<usize>,
    mut act_row: impl FnMut(usize, usize) -> Vec<Scalar>,
) -> Result<Module> {
    let f = algebra.field();
    let act = (0..algebra.dim())
        .map(|b| {
            let (s, t) = algebra.ends(b);
            Mat::from_rows(f, dims[t], (0..dims[s]).map(|r| act_row(b, r)).collect())
        })
        .collect();
    Module::new(algebra, dims, act)
}

/// `Hom_A(T, m)` as a right `B`-module: `Hom(T_i, m)` at vertex `i`, with
/// `B` acting by precomposition.
pub fn hom_functor_to_endo(bk: &SummandBookkeeping, m: &Module) -> Result<Module> {
    check_base(bk, m)?;
    let homs: Vec<Vec<ModuleMap>> = bk.summands.iter().map(|t| hom_basis(t, m)).collect::<Result<_>>()?;
    let spans: Vec<Span> = homs
        .iter()
        .zip(&bk.summands)
        .map(|(h, t)| {
            let len = t.dims().iter().zip(m.dims()).map(|(a, b)| a * b).sum();
            let mut s = Span::new(m.field(), len);
            for f in h {
                s.insert(&f.flatten());
            }
            s
        })
        .collect();
    let dims = homs.iter().map(Vec::len).collect();
    assemble(bk.algebra(), dims, |b, r| {
        let (j, i) = bk.algebra().ends(b);
        spans[i].coords(&bk.maps[b].then(&homs[j][r]).flatten()).expect("precomposite is a homomorphism")
    })
}

/// `Hom_A(n, U)` for `U = ⊕ U_i` as a right module over `C = End(U)^op`,
/// with `C` acting by postcomposition.
pub fn hom_functor_from_summands(bk: &SummandBookkeeping, n: &Module) -> Result<Module> {
    check_base(bk, n)?;
    let c = bk.algebra().opposite();
    let homs: Vec<Vec<ModuleMap>> = bk.summands.iter().map(|u| hom_basis(n, u)).collect::<Result<_>>()?;
    let spans: Vec<Span> = homs
        .iter()
        .zip(&bk.summands)
        .map(|(h, u)| {
            let len = n.dims().iter().zip(u.dims()).map(|(a, b)| a * b).sum();
            let mut s = Span::new(n.field(), len);
            for f in h {
                s.insert(&f.flatten());
            }
            s
        })
        .collect();
    let dims = homs.iter().map(Vec::len).collect();
    assemble(&c, dims, |b, r| {
        // in C the map U_i → U_j has ends (i, j)
        let (i, j) = c.ends(b);
        spans[j].coords(&homs[i][r].then(&bk.maps[b]).flatten()).expect("postcomposite is a homomorphism")
    })
}

/// `y ⊗_K T` presented as `⊕_i T_i^{dim y e_i}`, together with the balancing
/// relations and the quotient `y ⊗_B T`.
struct Tensor {
    free: Module,
    /// `copy_start[i]`: index of the first copy of `T_i`.
    copy_start: Vec<usize>,
    /// `copy_off[c][v]`: offset of copy `c` inside vertex `v` of `free`.
    copy_off: Vec<Vec<usize>>,
    proj: ModuleMap,
}

impl Tensor {
    fn new(bk: &SummandBookkeeping, y: &Module) -> Tensor {
        let base = bk.base();
        let f = base.field();
        let nv = base.num_vertices();
        let mut parts = Vec::new();
        let mut copy_start = Vec::new();
        for (i, t) in bk.summands.iter().enumerate() {
            copy_start.push(parts.len());
            for _ in 0..y.dim_at(i) {
                parts.push(t.clone());
            }
        }
        let free = Module::direct_sum_of(base, &parts);
        let mut copy_off = Vec::new();
        let mut acc = vec![0; nv];
        for p in &parts {
            copy_off.push(acc.clone());
            for v in 0..nv {
                acc[v] += p.dim_at(v);
            }
        }
        let mut rels: Graded = vec![Vec::new(); nv];
        let b_alg = bk.algebra();
        for b in 0..b_alg.dim() {
            if b_alg.is_idempotent(b) {
                continue;
            }
            let (j, i) = b_alg.ends(b);
            let fmap = &bk.maps[b];
            let yb = y.act(b);
            for r in 0..y.dim_at(j) {
                for v in 0..nv {
                    for l in 0..bk.summands[i].dim_at(v) {
                        // (y_r · b) ⊗ t_l  -  y_r ⊗ f(t_l)
                        let mut x = vec![f.zero(); free.dim_at(v)];
                        for s in 0..y.dim_at(i) {
                            let c = yb.get(r, s);
                            if !c.is_zero() {
                                let pos = copy_off[copy_start[i] + s][v] + l;
                                x[pos] = &x[pos] + c;
                            }
                        }
                        let o = copy_off[copy_start[j] + r][v];
                        for (k, c) in fmap.block(v).row(l).iter().enumerate() {
                            x[o + k] = &x[o + k] - c;
                        }
                        rels[v].push(x);
                    }
                }
            }
        }
        let (_, proj) = quotient(&free, &rels);
        Tensor { free, copy_start, copy_off, proj }
    }

    fn module(&self) -> &Module {
        self.proj.target()
    }
}

/// `y ⊗_B T` over the base algebra.
pub fn tensor_over_endo(y: &Module, bk: &SummandBookkeeping) -> Result<Module> {
    check_endo(bk, y)?;
    Ok(Tensor::new(bk, y).module().clone())
}

/// `g ⊗ T` between precomputed tensor presentations.
fn tensor_map(bk: &SummandBookkeeping, g: &ModuleMap, src: &Tensor, tgt: &Tensor) -> ModuleMap {
    let base = bk.base();
    let f = base.field();
    let nv = base.num_vertices();
    let y = g.source();
    let blocks = (0..nv)
        .map(|v| {
            let mut free = Mat::zeros(f, src.free.dim_at(v), tgt.free.dim_at(v));
            for (i, t) in bk.summands.iter().enumerate() {
                for r in 0..y.dim_at(i) {
                    let from = src.copy_off[src.copy_start[i] + r][v];
                    for s in 0..g.target().dim_at(i) {
                        let c = g.block(i).get(r, s);
                        if c.is_zero() {
                            continue;
                        }
                        let to = tgt.copy_off[tgt.copy_start[i] + s][v];
                        for l in 0..t.dim_at(v) {
                            let cur = free.get(from + l, to + l).clone();
                            free.set(from + l, to + l, &cur + c);
                        }
                    }
                }
            }
            let p = src.proj.block(v);
            let lift_rows = (0..p.cols())
                .map(|k| {
                    let mut e = vec![f.zero(); p.cols()];
                    e[k] = f.one();
                    p.solve_left(&e).ok().flatten().expect("projection is surjective")
                })
                .collect();
            let lift = Mat::from_rows(f, p.rows(), lift_rows);
            lift.mul(&free).mul(tgt.proj.block(v))
        })
        .collect();
    ModuleMap::new(src.module(), tgt.module(), blocks).expect("tensor of a homomorphism")
}

/// `Tor_1^B(y, T)`: kernel of `Ω y ⊗ T → P_0 ⊗ T` for the projective cover `P_0 → y`.
pub fn tor1_over_endo(y: &Module, bk: &SummandBookkeeping) -> Result<Module> {
    check_endo(bk, y)?;
    if y.is_zero() {
        return Ok(Module::zero(bk.base()));
    }
    let cover = projective_cover(y);
    let (omega, incl) = kernel(&cover.map);
    let src = Tensor::new(bk, &omega);
    let tgt = Tensor::new(bk, incl.target());
    let f = tensor_map(bk, &incl, &src, &tgt);
    Ok(kernel(&f).0)
}

/// Lift of `f: T_i → T_j` to the projective covers, `P_i → P_j`.
fn lift_to_covers(f: &ModuleMap, ci: &ProjectiveCover, cj: &ProjectiveCover) -> ModuleMap {
    let tj = cj.map.target();
    let off = tj.offsets();
    let pj = cj.map.source();
    let poff = pj.offsets();
    let images: Vec<Vec<Scalar>> = ci
        .vertices
        .iter()
        .zip(&ci.generators)
        .map(|(&u, g)| {
            let y = f.apply(g);
            let x = cj.map.block(u).solve_left(&y[off[u]..off[u + 1]]).ok().flatten().expect("cover is surjective");
            let mut flat = vec![tj.field().zero(); pj.dim()];
            flat[poff[u]..poff[u + 1]].clone_from_slice(&x);
            flat
        })
        .collect();
    map_from_projectives(pj, &ci.vertices, &images).with_ends(ci.map.source(), pj)
}

/// Projective covers of the summands and the `Ext^1(T_i, n)` spaces over them,
/// plus the syzygy maps `Ω T_i → Ω T_j` induced by each basis element of `B`.
pub struct ExtFunctorData {
    pub covers: Vec<ProjectiveCover>,
    /// Indexed by basis element of `B`.
    pub syzygy_maps: Vec<ModuleMap>,
}

impl ExtFunctorData {
    pub fn new(bk: &SummandBookkeeping) -> ExtFunctorData {
        let covers: Vec<ProjectiveCover> = bk.summands.iter().map(projective_cover).collect();
        let incls: Vec<ModuleMap> = covers.iter().map(|c| kernel(&c.map).1).collect();
        let syzygy_maps = (0..bk.maps.len())
            .map(|b| {
                let (j, i) = bk.algebra().ends(b);
                let lift = lift_to_covers(&bk.maps[b], &covers[i], &covers[j]);
                factor_through_mono(&incls[i].then(&lift), &incls[j]).expect("lift preserves syzygies")
            })
            .collect();
        ExtFunctorData { covers, syzygy_maps }
    }
}

/// `Ext_A^1(T, n)` as a right `B`-module, `B` acting by precomposition
/// through the lifted syzygy maps.
pub fn ext1_functor_to_endo(bk: &SummandBookkeeping, n: &Module) -> Result<Module> {
    ext1_functor_with(bk, &ExtFunctorData::new(bk), n)
}

pub fn ext1_functor_with(bk: &SummandBookkeeping, data: &ExtFunctorData, n: &Module) -> Result<Module> {
    check_base(bk, n)?;
    let spaces: Vec<ExtSpace> = data.covers.iter().map(|c| ext1_with_cover(c, n)).collect();
    // kernels are deterministic, so these syzygies coincide with the ones in `data`
    let dims = spaces.iter().map(|e| e.dim).collect();
    assemble(bk.algebra(), dims, |b, r| {
        let (j, i) = bk.algebra().ends(b);
        let phi = &spaces[j].cocycles[r];
        let moved = data.syzygy_maps[b].then(phi).with_ends(&spaces[i].syzygy, n);
        spaces[i].class(&moved).expect("restriction of a cocycle")
    })
}
