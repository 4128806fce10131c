use crate::algebra::{Algebra, AlgebraParts};
use crate::error::{Error, Result};
use crate::linalg::{Scalar, Span};
use crate::rep::{hom_basis, indecomposables_isomorphic, is_indecomposable, local_radical, Module, ModuleMap};

/// Which map each basis element of `B = End(⊕ T_i)` stands for.
///
/// A map `T_i → T_j` is a basis element with ends `(j, i)`, so `Hom(T, T_j) = e_j B`
/// and the product `f·g` is `g.then(f)`.
#[derive(Clone, Debug)]
pub struct SummandBookkeeping {
    pub summands: Vec<Module>,
    /// Indexed by basis element of `B`.
    pub maps: Vec<ModuleMap>,
    /// `between[i][j]`: basis elements that are maps `T_i → T_j`.
    pub between: Vec<Vec<Vec<usize>>>,
    spans: Vec<Vec<Span>>,
    algebra: Algebra,
}

impl SummandBookkeeping {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn base(&self) -> &Algebra {
        self.summands[0].algebra()
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// `⊕ T_i` over the base algebra.
    pub fn sum(&self) -> Module {
        Module::direct_sum_of(self.base(), &self.summands)
    }

    /// Coefficients of a map `T_i → T_j` along `between[i][j]`.
    pub fn coords(&self, i: usize, j: usize, f: &ModuleMap) -> Option<Vec<Scalar>> {
        self.spans[i][j].coords(&f.flatten())
    }

    /// A map `T_i → T_j` as an element of `B`.
    pub fn element(&self, i: usize, j: usize, f: &ModuleMap) -> Option<Vec<Scalar>> {
        let c = self.coords(i, j, f)?;
        let mut x = vec![self.algebra.field().zero(); self.algebra.dim()];
        for (k, &b) in self.between[i][j].iter().enumerate() {
            x[b] = c[k].clone();
        }
        Some(x)
    }

    /// Summand index `i` of a basis element standing for a map out of `T_i`.
    pub fn source_of(&self, b: usize) -> usize {
        self.algebra.ends(b).1
    }

    pub fn target_of(&self, b: usize) -> usize {
        self.algebra.ends(b).0
    }
}

/// `B = End(⊕ T_i)` for pairwise non-isomorphic indecomposables with split local
/// endomorphism rings, together with the basis maps.
pub fn endomorphism_algebra(summands: &[Module]) -> Result<(Algebra, SummandBookkeeping)> {
    if summands.is_empty() {
        return Err(Error::Module("no summands".into()));
    }
    let base = summands[0].algebra();
    for t in summands {
        summands[0].check_owner(t)?;
    }
    for (i, t) in summands.iter().enumerate() {
        if !is_indecomposable(t)? {
            return Err(Error::NotIndecomposable(i));
        }
    }
    for i in 0..summands.len() {
        for j in 0..i {
            if indecomposables_isomorphic(&summands[i], &summands[j]) {
                return Err(Error::DuplicateSummand(j, i));
            }
        }
    }
    let field = base.field();
    let n = summands.len();
    // hom[i][j]: chosen basis of Hom(T_i, T_j); identities first on the diagonal
    let mut hom: Vec<Vec<Vec<ModuleMap>>> = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            hom[i][j] = if i == j {
                let end = hom_basis(&summands[i], &summands[i])?;
                let rad = local_radical(&summands[i], &end).ok_or(Error::NonSplitLocal(i))?;
                std::iter::once(ModuleMap::identity(&summands[i])).chain(rad).collect()
            } else {
                hom_basis(&summands[i], &summands[j])?
            };
        }
    }
    let mut maps = Vec::new();
    let mut ends = Vec::new();
    let mut labels = Vec::new();
    let mut between = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        between[i][i].push(maps.len());
        maps.push(hom[i][i][0].clone());
        ends.push((i, i));
        labels.push(format!("e{}", i + 1));
    }
    for i in 0..n {
        for j in 0..n {
            let skip = usize::from(i == j);
            for (k, f) in hom[i][j].iter().enumerate().skip(skip) {
                between[i][j].push(maps.len());
                maps.push(f.clone());
                ends.push((j, i));
                labels.push(format!("f{}_{}_{}", i + 1, j + 1, k + 1 - skip));
            }
        }
    }
    let spans: Vec<Vec<Span>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let len = summands[i].dims().iter().zip(summands[j].dims()).map(|(a, b)| a * b).sum();
                    let mut s = Span::new(field, len);
                    for &b in &between[i][j] {
                        s.insert(&maps[b].flatten());
                    }
                    s
                })
                .collect()
        })
        .collect();
    let d = maps.len();
    let mut mult = vec![vec![Vec::new(); d]; d];
    for x in 0..d {
        let (j, i) = ends[x];
        for y in 0..d {
            let (i2, k) = ends[y];
            if i2 != i {
                continue;
            }
            // x: T_i → T_j, y: T_k → T_i, x·y = y then x: T_k → T_j
            let prod = maps[y].then(&maps[x]);
            let c = spans[k][j].coords(&prod.flatten()).expect("composite lies in the Hom space");
            mult[x][y] = between[k][j].iter().zip(c).filter(|(_, c)| !c.is_zero()).map(|(&b, c)| (b, c)).collect();
        }
    }
    let algebra = Algebra::from_parts(AlgebraParts {
        field,
        vertex_labels: (1..=n).map(|i| i.to_string()).collect(),
        labels,
        ends,
        idempotents: (0..n).collect(),
        mult,
        presentation: None,
        paths: None,
    })?;
    let report = algebra.validate();
    if let Some(msg) = report.first_failure() {
        return Err(Error::Validation(format!("endomorphism algebra: {msg}")));
    }
    let bk = SummandBookkeeping { summands: summands.to_vec(), maps, between, spans, algebra: algebra.clone() };
    Ok((algebra, bk))
}
