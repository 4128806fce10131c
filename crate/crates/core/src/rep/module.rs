use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Scalar};

/// A finite-dimensional right module given by one block matrix per algebra
/// basis element: for `b ∈ e_s A e_t`, `act(b)` is `d_s × d_t` and sends the
/// `e_s`-component to the `e_t`-component (row vectors, acting on the right).
#[derive(Clone)]
pub struct Module(Arc<ModuleData>);

struct ModuleData {
    algebra: Algebra,
    dims: Vec<usize>,
    act: Vec<Mat>,
}

impl PartialEq for Module {
    fn eq(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.algebra == other.0.algebra && self.0.dims == other.0.dims && self.0.act == other.0.act)
    }
}

impl Eq for Module {}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?}", self.0.dims)
    }
}

impl Module {
    /// Checked constructor: block shapes, idempotents and every structure constant.
    pub fn new(algebra: &Algebra, dims: Vec<usize>, act: Vec<Mat>) -> Result<Module> {
        let m = Module::from_raw(algebra, dims, act);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_raw(algebra: &Algebra, dims: Vec<usize>, act: Vec<Mat>) -> Module {
        Module(Arc::new(ModuleData { algebra: algebra.clone(), dims, act }))
    }

    /// Builds the action of every basis element from the generator matrices
    /// (indexed like [`Algebra::generators`]) and validates the result.
    pub fn from_generators(algebra: &Algebra, dims: Vec<usize>, gens: Vec<Mat>) -> Result<Module> {
        let act = actions_from_generators(algebra, &dims, &gens)?;
        Module::new(algebra, dims, act)
    }

    pub fn zero(algebra: &Algebra) -> Module {
        let dims = vec![0; algebra.num_vertices()];
        let act = (0..algebra.dim()).map(|_| Mat::zeros(algebra.field(), 0, 0)).collect();
        Module::from_raw(algebra, dims, act)
    }

    pub fn simple(algebra: &Algebra, v: usize) -> Module {
        let mut dims = vec![0; algebra.num_vertices()];
        dims[v] = 1;
        let f = algebra.field();
        let act = (0..algebra.dim())
            .map(|b| {
                let (s, t) = algebra.ends(b);
                let mut m = Mat::zeros(f, dims[s], dims[t]);
                if b == algebra.idempotent(v) {
                    m.set(0, 0, f.one());
                }
                m
            })
            .collect();
        Module::from_raw(algebra, dims, act)
    }

    /// The indecomposable projective `e_v A`.
    pub fn projective(algebra: &Algebra, v: usize) -> Module {
        let n = algebra.num_vertices();
        let f = algebra.field();
        let comp: Vec<Vec<usize>> = (0..n).map(|j| algebra.basis_between(v, j)).collect();
        let dims: Vec<usize> = comp.iter().map(Vec::len).collect();
        let act = (0..algebra.dim())
            .map(|c| {
                let (s, t) = algebra.ends(c);
                let mut m = Mat::zeros(f, dims[s], dims[t]);
                for (r, &x) in comp[s].iter().enumerate() {
                    for (k, coeff) in algebra.product(x, c) {
                        let col = comp[t].iter().position(|&y| y == *k).expect("adapted basis");
                        m.set(r, col, coeff.clone());
                    }
                }
                m
            })
            .collect();
        Module::from_raw(algebra, dims, act)
    }

    /// The indecomposable injective `D(A e_v)`.
    pub fn injective(algebra: &Algebra, v: usize) -> Module {
        Module::projective(&algebra.opposite(), v).dual()
    }

    /// The regular module `A_A = ⊕ e_v A`.
    pub fn regular(algebra: &Algebra) -> Module {
        let ps: Vec<Module> = (0..algebra.num_vertices()).map(|v| Module::projective(algebra, v)).collect();
        Module::direct_sum_of(algebra, &ps)
    }

    /// `DA = ⊕ I_v`.
    pub fn cogenerator(algebra: &Algebra) -> Module {
        let is: Vec<Module> = (0..algebra.num_vertices()).map(|v| Module::injective(algebra, v)).collect();
        Module::direct_sum_of(algebra, &is)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0.algebra
    }
    pub fn field(&self) -> Field {
        self.0.algebra.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }
    pub fn dim_at(&self, v: usize) -> usize {
        self.0.dims[v]
    }
    pub fn dim(&self) -> usize {
        self.0.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn act(&self, b: usize) -> &Mat {
        &self.0.act[b]
    }
    pub fn actions(&self) -> &[Mat] {
        &self.0.act
    }
    pub fn same_algebra(&self, other: &Module) -> bool {
        self.0.algebra == other.0.algebra
    }
    pub(crate) fn check_owner(&self, other: &Module) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::OwnerMismatch)
        }
    }

    /// Offsets of the vertex components inside a flat element vector.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.0.dims.len() + 1);
        let mut acc = 0;
        off.push(0);
        for d in &self.0.dims {
            acc += d;
            off.push(acc);
        }
        off
    }

    pub fn validate(&self) -> Result<()> {
        let alg = &self.0.algebra;
        let dims = &self.0.dims;
        let f = alg.field();
        if dims.len() != alg.num_vertices() || self.0.act.len() != alg.dim() {
            return Err(Error::Module("wrong number of blocks".into()));
        }
        for b in 0..alg.dim() {
            let (s, t) = alg.ends(b);
            let m = &self.0.act[b];
            if m.rows() != dims[s] || m.cols() != dims[t] {
                return Err(Error::Module(format!("block of {} has wrong shape", alg.label(b))));
            }
            if m.field() != f && dims[s] * dims[t] > 0 {
                return Err(Error::Field("module entries over the wrong field".into()));
            }
        }
        for v in 0..alg.num_vertices() {
            if self.0.act[alg.idempotent(v)] != Mat::identity(f, dims[v]) {
                return Err(Error::Module(format!("idempotent at {} does not act as identity", alg.vertex_label(v))));
            }
        }
        for i in 0..alg.dim() {
            let (s, t) = alg.ends(i);
            if dims[s] == 0 {
                continue;
            }
            for j in 0..alg.dim() {
                let (s2, t2) = alg.ends(j);
                if s2 != t || dims[t2] == 0 {
                    continue;
                }
                let lhs = self.0.act[i].mul(&self.0.act[j]);
                let mut rhs = Mat::zeros(f, dims[s], dims[t2]);
                for (k, c) in alg.product(i, j) {
                    rhs.add_scaled(c, &self.0.act[*k]);
                }
                if lhs != rhs {
                    return Err(Error::Module(format!(
                        "action violates {} * {}",
                        alg.label(i),
                        alg.label(j)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `DM` over the opposite algebra: transposed blocks.
    pub fn dual(&self) -> Module {
        let op = self.0.algebra.opposite();
        let act = self.0.act.iter().map(Mat::transpose).collect();
        Module::from_raw(&op, self.0.dims.clone(), act)
    }

    pub fn direct_sum(&self, other: &Module) -> Module {
        Module::direct_sum_of(self.algebra(), &[self.clone(), other.clone()])
    }

    pub fn direct_sum_of(algebra: &Algebra, parts: &[Module]) -> Module {
        let n = algebra.num_vertices();
        let f = algebra.field();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dim_at(v)).sum()).collect();
        let act = (0..algebra.dim())
            .map(|b| {
                let (s, t) = algebra.ends(b);
                let mut m = Mat::zeros(f, dims[s], dims[t]);
                let (mut r0, mut c0) = (0, 0);
                for p in parts {
                    let blk = p.act(b);
                    for r in 0..blk.rows() {
                        for c in 0..blk.cols() {
                            m.set(r0 + r, c0 + c, blk.get(r, c).clone());
                        }
                    }
                    r0 += blk.rows();
                    c0 += blk.cols();
                }
                m
            })
            .collect();
        Module::from_raw(algebra, dims, act)
    }

    /// `M^k`.
    pub fn power(&self, k: usize) -> Module {
        Module::direct_sum_of(self.algebra(), &vec![self.clone(); k])
    }

    /// Element `v` (flat, vertex-graded) times basis element `b`.
    pub fn act_on(&self, v: &[Scalar], b: usize) -> Vec<Scalar> {
        let (s, t) = self.0.algebra.ends(b);
        let off = self.offsets();
        let mut out = vec![self.field().zero(); self.dim()];
        let m = &self.0.act[b];
        for r in 0..m.rows() {
            let x = &v[off[s] + r];
            if x.is_zero() {
                continue;
            }
            for c in 0..m.cols() {
                let e = m.get(r, c);
                if !e.is_zero() {
                    out[off[t] + c] = &out[off[t] + c] + &(x * e);
                }
            }
        }
        out
    }

    /// Same representation with each vertex basis changed by `g_v`: the new
    /// action is `g_s act(b) g_t^{-1}`.
    pub fn conjugate(&self, g: &[Mat]) -> Result<Module> {
        let inv: Vec<Mat> = g
            .iter()
            .map(|m| m.inverse().ok_or_else(|| Error::Module("conjugating matrix not invertible".into())))
            .collect::<Result<_>>()?;
        let alg = self.algebra();
        let act = (0..alg.dim())
            .map(|b| {
                let (s, t) = alg.ends(b);
                g[s].mul(self.act(b)).mul(&inv[t])
            })
            .collect();
        Ok(Module::from_raw(alg, self.0.dims.clone(), act))
    }
}

pub(crate) fn actions_from_generators(algebra: &Algebra, dims: &[usize], gens: &[Mat]) -> Result<Vec<Mat>> {
    let f = algebra.field();
    if gens.len() != algebra.generators().len() {
        return Err(Error::Module(format!(
            "expected {} generator matrices, got {}",
            algebra.generators().len(),
            gens.len()
        )));
    }
    if dims.len() != algebra.num_vertices() {
        return Err(Error::Module("dimension vector has wrong length".into()));
    }
    for (gi, &g) in algebra.generators().iter().enumerate() {
        let (s, t) = algebra.ends(g);
        if gens[gi].rows() != dims[s] || gens[gi].cols() != dims[t] {
            return Err(Error::Module(format!("matrix for {} has wrong shape", algebra.label(g))));
        }
    }
    let mut act = Vec::with_capacity(algebra.dim());
    for b in 0..algebra.dim() {
        let (s, t) = algebra.ends(b);
        if algebra.is_idempotent(b) {
            act.push(Mat::identity(f, dims[s]));
            continue;
        }
        let mut m = Mat::zeros(f, dims[s], dims[t]);
        for (word, c) in algebra.words(b) {
            let mut p = gens[word[0]].clone();
            for &w in &word[1..] {
                p = p.mul(&gens[w]);
            }
            m.add_scaled(c, &p);
        }
        act.push(m);
    }
    Ok(act)
}

/// A module homomorphism: one `dim M_v × dim N_v` block per vertex, acting on rows.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleMap {
    source: Module,
    target: Module,
    blocks: Vec<Mat>,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap({:?} -> {:?})", self.source.dims(), self.target.dims())
    }
}

impl ModuleMap {
    /// Checked constructor: block shapes and the intertwining identities.
    pub fn new(source: &Module, target: &Module, blocks: Vec<Mat>) -> Result<ModuleMap> {
        source.check_owner(target)?;
        let f = ModuleMap::from_raw(source, target, blocks);
        let n = source.algebra().num_vertices();
        if f.blocks.len() != n {
            return Err(Error::Module("wrong number of map blocks".into()));
        }
        for v in 0..n {
            if f.blocks[v].rows() != source.dim_at(v) || f.blocks[v].cols() != target.dim_at(v) {
                return Err(Error::Module("map block has wrong shape".into()));
            }
        }
        let alg = source.algebra();
        for b in 0..alg.dim() {
            let (s, t) = alg.ends(b);
            if source.act(b).mul(&f.blocks[t]) != f.blocks[s].mul(target.act(b)) {
                return Err(Error::Module(format!("map does not commute with {}", alg.label(b))));
            }
        }
        Ok(f)
    }

    pub(crate) fn from_raw(source: &Module, target: &Module, blocks: Vec<Mat>) -> ModuleMap {
        ModuleMap { source: source.clone(), target: target.clone(), blocks }
    }

    pub fn zero(source: &Module, target: &Module) -> ModuleMap {
        let f = source.field();
        let blocks =
            (0..source.algebra().num_vertices()).map(|v| Mat::zeros(f, source.dim_at(v), target.dim_at(v))).collect();
        ModuleMap::from_raw(source, target, blocks)
    }

    pub fn identity(m: &Module) -> ModuleMap {
        let blocks = m.dims().iter().map(|&d| Mat::identity(m.field(), d)).collect();
        ModuleMap::from_raw(m, m, blocks)
    }

    pub fn source(&self) -> &Module {
        &self.source
    }
    pub fn target(&self) -> &Module {
        &self.target
    }
    pub fn block(&self, v: usize) -> &Mat {
        &self.blocks[v]
    }
    pub fn blocks(&self) -> &[Mat] {
        &self.blocks
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &ModuleMap) -> ModuleMap {
        assert_eq!(self.target.dims(), other.source.dims(), "composition shape mismatch");
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect();
        ModuleMap::from_raw(&self.source, &other.target, blocks)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        other.then(self)
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        ModuleMap::from_raw(&self.source, &self.target, blocks)
    }

    pub fn scale(&self, s: &Scalar) -> ModuleMap {
        let blocks = self.blocks.iter().map(|a| a.scale(s)).collect();
        ModuleMap::from_raw(&self.source, &self.target, blocks)
    }

    pub fn linear_combination(source: &Module, target: &Module, maps: &[ModuleMap], coeffs: &[Scalar]) -> ModuleMap {
        let mut out = ModuleMap::zero(source, target);
        for (m, c) in maps.iter().zip(coeffs) {
            if !c.is_zero() {
                for (o, b) in out.blocks.iter_mut().zip(&m.blocks) {
                    o.add_scaled(c, b);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Mat::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Mat::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dims() == self.target.dims() && self.blocks.iter().all(Mat::is_invertible)
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let blocks = self.blocks.iter().map(Mat::inverse).collect::<Option<Vec<_>>>()?;
        Some(ModuleMap::from_raw(&self.target, &self.source, blocks))
    }

    /// Entries of all blocks, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    /// Image of a flat element of the source.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let so = self.source.offsets();
        let to = self.target.offsets();
        let mut out = vec![self.source.field().zero(); self.target.dim()];
        for (i, b) in self.blocks.iter().enumerate() {
            for r in 0..b.rows() {
                let x = &v[so[i] + r];
                if x.is_zero() {
                    continue;
                }
                for c in 0..b.cols() {
                    let e = b.get(r, c);
                    if !e.is_zero() {
                        out[to[i] + c] = &out[to[i] + c] + &(x * e);
                    }
                }
            }
        }
        out
    }

    /// `Df: DN → DM` over the opposite algebra.
    pub fn dual(&self) -> ModuleMap {
        let blocks = self.blocks.iter().map(Mat::transpose).collect();
        ModuleMap::from_raw(&self.target.dual(), &self.source.dual(), blocks)
    }

    /// Same blocks between replacement endpoints of identical shape.
    pub fn with_ends(&self, source: &Module, target: &Module) -> ModuleMap {
        debug_assert_eq!(source.dims(), self.source.dims());
        debug_assert_eq!(target.dims(), self.target.dims());
        ModuleMap::from_raw(source, target, self.blocks.clone())
    }
}

/// Projectives, injectives and simples, indexed by vertex.
pub struct StandardModules {
    pub projectives: Vec<Module>,
    pub injectives: Vec<Module>,
    pub simples: Vec<Module>,
}

pub fn standard_modules(algebra: &Algebra) -> StandardModules {
    let n = algebra.num_vertices();
    StandardModules {
        projectives: (0..n).map(|v| Module::projective(algebra, v)).collect(),
        injectives: (0..n).map(|v| Module::injective(algebra, v)).collect(),
        simples: (0..n).map(|v| Module::simple(algebra, v)).collect(),
    }
}
