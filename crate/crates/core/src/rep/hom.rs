use super::module::{Module, ModuleMap};
use crate::error::Result;
use crate::linalg::{Mat, Scalar, Span};

/// Basis of `Hom_A(m, n)`: the solution space of the intertwining equations
/// imposed on the algebra generators.
pub fn hom_basis(m: &Module, n: &Module) -> Result<Vec<ModuleMap>> {
    m.check_owner(n)?;
    Ok(hom_basis_unchecked(m, n))
}

pub(crate) fn hom_basis_unchecked(m: &Module, n: &Module) -> Vec<ModuleMap> {
    let alg = m.algebra();
    let f = alg.field();
    let nv = alg.num_vertices();
    let mut off = vec![0usize; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + m.dim_at(v) * n.dim_at(v);
    }
    let unknowns = off[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    let var = |v: usize, r: usize, c: usize| off[v] + r * n.dim_at(v) + c;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for &g in alg.generators() {
        let (s, t) = alg.ends(g);
        let (am, an) = (m.act(g), n.act(g));
        for p in 0..m.dim_at(s) {
            for q in 0..n.dim_at(t) {
                // (act_M(g) f_t)_{pq} - (f_s act_N(g))_{pq}
                let mut row = vec![f.zero(); unknowns];
                let mut nonzero = false;
                for r in 0..m.dim_at(t) {
                    let a = am.get(p, r);
                    if !a.is_zero() {
                        let k = var(t, r, q);
                        row[k] = &row[k] + a;
                        nonzero = true;
                    }
                }
                for r in 0..n.dim_at(s) {
                    let b = an.get(r, q);
                    if !b.is_zero() {
                        let k = var(s, p, r);
                        row[k] = &row[k] - b;
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    let sol = if rows.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut e = vec![f.zero(); unknowns];
                e[i] = f.one();
                e
            })
            .collect()
    } else {
        Mat::from_rows(f, unknowns, rows).kernel_vectors()
    };
    sol.into_iter()
        .map(|x| {
            let blocks = (0..nv)
                .map(|v| {
                    let (r, c) = (m.dim_at(v), n.dim_at(v));
                    Mat::from_rows(f, c, (0..r).map(|i| x[off[v] + i * c..off[v] + (i + 1) * c].to_vec()).collect())
                })
                .collect();
            ModuleMap::from_raw(m, n, blocks)
        })
        .collect()
}

pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

/// `Hom(m, n)` with coordinates relative to a fixed basis.
#[derive(Clone)]
pub struct HomSpace {
    pub source: Module,
    pub target: Module,
    pub basis: Vec<ModuleMap>,
    span: Span,
}

impl HomSpace {
    pub fn new(m: &Module, n: &Module) -> Result<HomSpace> {
        let basis = hom_basis(m, n)?;
        Ok(HomSpace::from_basis(m, n, basis))
    }

    pub fn from_basis(m: &Module, n: &Module, basis: Vec<ModuleMap>) -> HomSpace {
        let len = (0..m.algebra().num_vertices()).map(|v| m.dim_at(v) * n.dim_at(v)).sum();
        let mut span = Span::new(m.field(), len);
        for b in &basis {
            let grew = span.insert(&b.flatten());
            debug_assert!(grew);
        }
        HomSpace { source: m.clone(), target: n.clone(), basis, span }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a map in the basis; `None` if it is not a homomorphism.
    pub fn coords(&self, f: &ModuleMap) -> Option<Vec<Scalar>> {
        self.span.coords(&f.flatten())
    }

    pub fn combination(&self, coeffs: &[Scalar]) -> ModuleMap {
        ModuleMap::linear_combination(&self.source, &self.target, &self.basis, coeffs)
    }
}
