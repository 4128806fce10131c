//! Brute-force enumeration of indecomposable modules over a prime field.

use crate::algebra::{Algebra, QuiverPresentation};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};
use crate::rep::{standard_modules, hom_basis, indecomposables_isomorphic, is_indecomposable, local_radical, Module};

pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationBound {
    /// Per-vertex dimension caps.
    pub caps: Vec<usize>,
    /// Maximal number of search nodes visited before giving up.
    pub budget: u64,
}

impl EnumerationBound {
    pub fn new(caps: Vec<usize>) -> EnumerationBound {
        EnumerationBound { caps, budget: DEFAULT_BUDGET }
    }

    /// Caps equal to the dimension vector of the regular module.
    pub fn regular(a: &Algebra) -> EnumerationBound {
        let caps = (0..a.num_vertices()).map(|v| (0..a.dim()).filter(|&b| a.ends(b).1 == v).count()).collect();
        EnumerationBound::new(caps)
    }

    /// Componentwise maximum of the dimension vectors of the indecomposable
    /// projectives and injectives.
    pub fn projective_injective_hull(a: &Algebra) -> EnumerationBound {
        let s = standard_modules(a);
        let mut caps = vec![0; a.num_vertices()];
        for m in s.projectives.iter().chain(&s.injectives) {
            for (c, &d) in caps.iter_mut().zip(m.dims()) {
                *c = (*c).max(d);
            }
        }
        EnumerationBound::new(caps)
    }

    pub fn with_budget(mut self, budget: u64) -> EnumerationBound {
        self.budget = budget;
        self
    }

    pub fn incremented(&self) -> EnumerationBound {
        EnumerationBound { caps: self.caps.iter().map(|c| c + 1).collect(), budget: self.budget }
    }

    /// Number of raw arrow-matrix tuples over `F_p` for all nonzero dimension vectors within the caps.
    pub fn raw_search_space(&self, a: &Algebra) -> u128 {
        let p = match a.field() {
            Field::Prime(p) => p as u128,
            Field::Rational => return u128::MAX,
        };
        let pres = a.presentation_or_derived();
        dim_vectors(&self.caps)
            .iter()
            .map(|d| {
                let e: u32 = pres.arrows.iter().map(|ar| (d[ar.source] * d[ar.target]) as u32).sum();
                p.checked_pow(e).unwrap_or(u128::MAX)
            })
            .fold(0u128, |acc, x| acc.saturating_add(x))
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    /// Pairwise non-isomorphic indecomposables, sorted by dimension vector then entries.
    pub modules: Vec<Module>,
    /// Indices of members whose endomorphism ring is local but not split, so
    /// they may decompose over an extension field.
    pub non_split: Vec<usize>,
    pub nodes_visited: u64,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }
}

fn dim_vectors(caps: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut d = vec![0; caps.len()];
    loop {
        if d.iter().any(|&x| x > 0) {
            out.push(d.clone());
        }
        let mut i = 0;
        loop {
            if i == caps.len() {
                return out;
            }
            if d[i] < caps[i] {
                d[i] += 1;
                break;
            }
            d[i] = 0;
            i += 1;
        }
    }
}

/// Row-major matrix over `F_p` with machine residues.
#[derive(Clone, Debug)]
struct SmallMat {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl SmallMat {
    fn zeros(rows: usize, cols: usize) -> SmallMat {
        SmallMat { rows, cols, data: vec![0; rows * cols] }
    }

    fn mul(&self, other: &SmallMat, p: u32) -> SmallMat {
        let mut out = SmallMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let o = &mut out.data[i * other.cols + j];
                    *o = (*o + a * other.data[k * other.cols + j]) % p;
                }
            }
        }
        out
    }

    fn axpy(&mut self, c: u32, other: &SmallMat, p: u32) {
        for (x, y) in self.data.iter_mut().zip(&other.data) {
            *x = (*x + c * y) % p;
        }
    }

    fn to_mat(&self, f: Field) -> Mat {
        Mat::from_rows(
            f,
            self.cols,
            (0..self.rows).map(|r| (0..self.cols).map(|c| f.from_i64(self.data[r * self.cols + c] as i64)).collect()).collect(),
        )
    }
}

struct Search<'a> {
    a: &'a Algebra,
    pres: QuiverPresentation,
    p: u32,
    order: Vec<usize>,
    /// `check_at[k]`: relations whose arrows are all assigned once `order[..=k]` is.
    check_at: Vec<Vec<usize>>,
    budget: u64,
    visited: u64,
    found: Vec<Module>,
    non_split: Vec<bool>,
}

impl Search<'_> {
    fn relation_holds(&self, r: usize, mats: &[Option<SmallMat>], d: &[usize]) -> bool {
        let rel = &self.pres.relations[r];
        let first = &self.pres.arrows[rel.terms[0].word[0]];
        let last = &self.pres.arrows[*rel.terms[0].word.last().expect("nonempty word")];
        let mut sum = SmallMat::zeros(d[first.source], d[last.target]);
        for t in &rel.terms {
            let mut x = mats[t.word[0]].clone().expect("assigned");
            for &w in &t.word[1..] {
                x = x.mul(mats[w].as_ref().expect("assigned"), self.p);
            }
            let c = t.coeff.rem_euclid(self.p as i64) as u32;
            sum.axpy(c, &x, self.p);
        }
        sum.data.iter().all(|&x| x == 0)
    }

    fn run(&mut self, d: &[usize]) -> Result<()> {
        let mut mats: Vec<Option<SmallMat>> = vec![None; self.pres.arrows.len()];
        self.assign(d, 0, &mut mats)
    }

    fn assign(&mut self, d: &[usize], k: usize, mats: &mut Vec<Option<SmallMat>>) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::Budget(format!(
                "{} search nodes exceed the budget with {} indecomposables found so far",
                self.visited,
                self.found.len()
            )));
        }
        if k == self.order.len() {
            return self.leaf(d, mats);
        }
        let arrow = self.order[k];
        let (s, t) = (self.pres.arrows[arrow].source, self.pres.arrows[arrow].target);
        let (rows, cols) = (d[s], d[t]);
        let candidates: Vec<SmallMat> = if k == 0 && s != t {
            // the first arrow may be brought to rank normal form
            (0..=rows.min(cols))
                .map(|r| {
                    let mut m = SmallMat::zeros(rows, cols);
                    for i in 0..r {
                        m.data[i * cols + i] = 1;
                    }
                    m
                })
                .collect()
        } else {
            let n = rows * cols;
            let total = (self.p as u64).checked_pow(n as u32).ok_or_else(|| Error::Budget("matrix space too large".into()))?;
            (0..total)
                .map(|mut code| {
                    let mut m = SmallMat::zeros(rows, cols);
                    for x in m.data.iter_mut() {
                        *x = (code % self.p as u64) as u32;
                        code /= self.p as u64;
                    }
                    m
                })
                .collect()
        };
        for c in candidates {
            mats[arrow] = Some(c);
            if self.check_at[k].iter().all(|&r| self.relation_holds(r, mats, d)) {
                self.assign(d, k + 1, mats)?;
            }
        }
        mats[arrow] = None;
        Ok(())
    }

    fn leaf(&mut self, d: &[usize], mats: &[Option<SmallMat>]) -> Result<()> {
        let f = self.a.field();
        let gens = mats.iter().map(|m| m.as_ref().expect("assigned").to_mat(f)).collect();
        let m = Module::from_generators(self.a, d.to_vec(), gens)?;
        let sig = signature(&m);
        if self.found.iter().any(|x| x.dims() == m.dims() && signature(x) == sig && indecomposables_isomorphic(x, &m)) {
            return Ok(());
        }
        if !is_indecomposable(&m)? {
            return Ok(());
        }
        let end = hom_basis(&m, &m)?;
        self.non_split.push(local_radical(&m, &end).is_none());
        self.found.push(m);
        Ok(())
    }
}

/// Ranks of every basis element's action; an isomorphism invariant.
fn signature(m: &Module) -> Vec<usize> {
    m.actions().iter().map(Mat::rank).collect()
}

/// Every indecomposable with dimension vector within the caps, up to isomorphism.
pub fn enumerate_indecomposables(a: &Algebra, bound: &EnumerationBound) -> Result<Catalog> {
    let n = a.presentation_or_derived().arrows.len();
    enumerate_with_order(a, bound, &(0..n).collect::<Vec<_>>())
}

/// As [`enumerate_indecomposables`], assigning arrow matrices in the given order.
pub fn enumerate_with_order(a: &Algebra, bound: &EnumerationBound, order: &[usize]) -> Result<Catalog> {
    let p = match a.field() {
        Field::Prime(p) => p,
        Field::Rational => return Err(Error::Field("enumeration needs a prime field".into())),
    };
    if bound.caps.len() != a.num_vertices() {
        return Err(Error::Dimension("caps do not match the number of vertices".into()));
    }
    let pres = a.presentation_or_derived();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..pres.arrows.len()).collect::<Vec<_>>() {
        return Err(Error::Dimension("arrow order is not a permutation".into()));
    }
    let mut pos = vec![0; order.len()];
    for (k, &ar) in order.iter().enumerate() {
        pos[ar] = k;
    }
    let mut check_at = vec![Vec::new(); order.len()];
    for (r, rel) in pres.relations.iter().enumerate() {
        if let Some(k) = rel.terms.iter().flat_map(|t| t.word.iter().map(|&w| pos[w])).max() {
            check_at[k].push(r);
        }
    }
    let mut search = Search {
        a,
        pres,
        p,
        order: order.to_vec(),
        check_at,
        budget: bound.budget,
        visited: 0,
        found: Vec::new(),
        non_split: Vec::new(),
    };
    for d in dim_vectors(&bound.caps) {
        search.run(&d)?;
    }
    let mut idx: Vec<usize> = (0..search.found.len()).collect();
    idx.sort_by_key(|&i| sort_key(&search.found[i]));
    let modules = idx.iter().map(|&i| search.found[i].clone()).collect();
    let non_split = idx.iter().enumerate().filter(|(_, &i)| search.non_split[i]).map(|(k, _)| k).collect();
    Ok(Catalog { modules, non_split, nodes_visited: search.visited })
}

fn sort_key(m: &Module) -> (Vec<usize>, Vec<i64>) {
    let entries = m.actions().iter().flat_map(|a| a.entries().iter().map(|x| x.symmetric_i64().unwrap_or(0))).collect();
    (m.dims().to_vec(), entries)
}

/// Re-runs the enumeration with every cap raised by one; true when nothing new
/// appears. Heuristic evidence of completeness only.
pub fn catalog_stability_probe(a: &Algebra, bound: &EnumerationBound) -> Result<bool> {
    let base = enumerate_indecomposables(a, bound)?;
    let wider = enumerate_indecomposables(a, &bound.incremented())?;
    Ok(wider.len() == base.len())
}

/// Reads a module over `F_p` with entries in `(-p/2, p/2]` as a module over
/// `target`, an algebra with the same generators over another field.
pub fn lift_module(m: &Module, target: &Algebra) -> Result<Module> {
    let src = m.algebra();
    if src.generators().len() != target.generators().len() || src.num_vertices() != target.num_vertices() {
        return Err(Error::OwnerMismatch);
    }
    let f = target.field();
    let gens = src
        .generators()
        .iter()
        .map(|&g| {
            let a = m.act(g);
            Mat::from_rows(
                f,
                a.cols(),
                a.to_rows().iter().map(|r| r.iter().map(|x| f.from_i64(x.symmetric_i64().unwrap_or(0))).collect()).collect(),
            )
        })
        .collect();
    Module::from_generators(target, m.dims().to_vec(), gens)
}

/// Enumerates over `F_p` and lifts every member back to `a`, re-validating
/// indecomposability over `a`'s field and pairwise non-isomorphism.
pub fn lifted_catalog(a: &Algebra, bound: &EnumerationBound, p: u32) -> Result<Vec<Module>> {
    let ap = a.reinterpret_over_field(Field::prime(p)?)?;
    let cat = enumerate_indecomposables(&ap, bound)?;
    if !cat.non_split.is_empty() {
        return Err(Error::CannotCertify("catalog member with non-split local endomorphism ring".into()));
    }
    let lifted: Vec<Module> = cat.modules.iter().map(|m| lift_module(m, a)).collect::<Result<_>>()?;
    for (i, m) in lifted.iter().enumerate() {
        if !is_indecomposable(m)? {
            return Err(Error::CannotCertify(format!("member {i} decomposes after lifting")));
        }
        if lifted[..i].iter().any(|x| x.dims() == m.dims() && indecomposables_isomorphic(x, m)) {
            return Err(Error::CannotCertify(format!("member {i} becomes isomorphic to an earlier one")));
        }
    }
    Ok(lifted)
}

/// Indecomposables of `a` within the bound: enumerated directly over a prime
/// field, over `F_2` and lifted when `a` is rational.
pub fn catalog(a: &Algebra, bound: &EnumerationBound) -> Result<Vec<Module>> {
    match a.field() {
        Field::Prime(_) => Ok(enumerate_indecomposables(a, bound)?.modules),
        Field::Rational => lifted_catalog(a, bound, 2),
    }
}
