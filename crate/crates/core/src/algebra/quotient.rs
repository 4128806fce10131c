use super::basic::{to_product, Algebra, AlgebraParts};
use crate::error::{Error, Result};
use crate::linalg::{vec_is_zero, Mat, Scalar, Span};
use crate::rep::Module;

/// `A / I` for a two-sided ideal `I ⊆ rad A`, on the basis elements of `A`
/// that are not pivots of `I`.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub algebra: Algebra,
    pub parent: Algebra,
    /// Parent basis index of each quotient basis element.
    pub kept: Vec<usize>,
    ideal: Span,
}

impl QuotientAlgebra {
    /// `ideal` must be spanned by vectors homogeneous for the vertex grading.
    pub fn new(parent: &Algebra, ideal: &[Vec<Scalar>]) -> Result<QuotientAlgebra> {
        let f = parent.field();
        let d = parent.dim();
        let mut span = Span::untracked(f, d);
        for v in ideal {
            span.insert(v);
        }
        // close under multiplication by basis elements on both sides
        let mut frontier: Vec<Vec<Scalar>> = span.basis().to_vec();
        while let Some(v) = frontier.pop() {
            for b in 0..d {
                let e = parent.unit_vector(b);
                for p in [parent.mul(&v, &e), parent.mul(&e, &v)] {
                    if span.insert(&p) {
                        frontier.push(p);
                    }
                }
            }
        }
        if parent.idempotents().iter().any(|&e| span.pivots().contains(&e)) {
            return Err(Error::Validation("ideal is not contained in the radical".into()));
        }
        let kept: Vec<usize> = (0..d).filter(|b| !span.pivots().contains(b)).collect();
        let mut pos = vec![usize::MAX; d];
        for (k, &b) in kept.iter().enumerate() {
            pos[b] = k;
        }
        let residue = |x: &[Scalar]| -> Vec<Scalar> {
            let r = span.reduce(x);
            kept.iter().map(|&b| r[b].clone()).collect()
        };
        let mult = kept
            .iter()
            .map(|&i| kept.iter().map(|&j| to_product(&residue(&parent.mul(&parent.unit_vector(i), &parent.unit_vector(j))))).collect())
            .collect();
        let algebra = Algebra::from_parts(AlgebraParts {
            field: f,
            vertex_labels: parent.vertex_labels().to_vec(),
            labels: kept.iter().map(|&b| parent.label(b).to_string()).collect(),
            ends: kept.iter().map(|&b| parent.ends(b)).collect(),
            idempotents: parent.idempotents().iter().map(|&e| pos[e]).collect(),
            mult,
            presentation: None,
            paths: None,
        })?;
        if let Some(msg) = algebra.validate().first_failure() {
            return Err(Error::Validation(format!("quotient algebra: {msg}")));
        }
        Ok(QuotientAlgebra { algebra, parent: parent.clone(), kept, ideal: span })
    }

    /// Coordinates of the class of a parent element.
    pub fn residue(&self, x: &[Scalar]) -> Vec<Scalar> {
        let r = self.ideal.reduce(x);
        self.kept.iter().map(|&b| r[b].clone()).collect()
    }

    pub fn in_ideal(&self, x: &[Scalar]) -> bool {
        self.ideal.contains(x)
    }

    pub fn ideal_dim(&self) -> usize {
        self.ideal.dim()
    }

    /// A parent module annihilated by the ideal, viewed over the quotient.
    pub fn descend(&self, m: &Module) -> Result<Module> {
        if m.algebra() != &self.parent {
            return Err(Error::OwnerMismatch);
        }
        for v in self.ideal.basis() {
            let f = m.field();
            let (s, t) = self.parent.ends(v.iter().position(|c| !c.is_zero()).expect("nonzero"));
            let mut acc = Mat::zeros(f, m.dim_at(s), m.dim_at(t));
            for (b, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    acc.add_scaled(c, m.act(b));
                }
            }
            if !acc.is_zero() {
                return Err(Error::Module("module is not annihilated by the ideal".into()));
            }
        }
        Module::new(&self.algebra, m.dims().to_vec(), self.kept.iter().map(|&b| m.act(b).clone()).collect())
    }

    /// A quotient module viewed over the parent algebra.
    pub fn lift(&self, m: &Module) -> Module {
        let f = m.field();
        let act = (0..self.parent.dim())
            .map(|b| {
                let (s, t) = self.parent.ends(b);
                let r = self.residue(&self.parent.unit_vector(b));
                let mut acc = Mat::zeros(f, m.dim_at(s), m.dim_at(t));
                for (k, c) in r.iter().enumerate() {
                    if !c.is_zero() {
                        acc.add_scaled(c, m.act(k));
                    }
                }
                acc
            })
            .collect();
        Module::new(&self.parent, m.dims().to_vec(), act).expect("lift of a quotient module")
    }
}

/// `ann(m) = {a ∈ A : m·a = 0}`, as vectors homogeneous for the vertex grading.
pub fn annihilator(m: &Module) -> Vec<Vec<Scalar>> {
    let a = m.algebra();
    let f = a.field();
    let n = a.num_vertices();
    let mut out = Vec::new();
    for s in 0..n {
        for t in 0..n {
            let bs = a.basis_between(s, t);
            if bs.is_empty() {
                continue;
            }
            // columns: flattened action of each basis element
            let cols: Vec<Vec<Scalar>> = bs.iter().map(|&b| m.act(b).entries().to_vec()).collect();
            let rows = m.dim_at(s) * m.dim_at(t);
            let kernel = if rows == 0 {
                (0..bs.len())
                    .map(|i| {
                        let mut e = vec![f.zero(); bs.len()];
                        e[i] = f.one();
                        e
                    })
                    .collect()
            } else {
                Mat::from_columns(f, rows, &cols).kernel_vectors()
            };
            for k in kernel {
                let mut x = vec![f.zero(); a.dim()];
                for (i, &b) in bs.iter().enumerate() {
                    x[b] = k[i].clone();
                }
                if !vec_is_zero(&x) {
                    out.push(x);
                }
            }
        }
    }
    out
}

/// The right annihilator of `m` is zero.
pub fn is_faithful(m: &Module) -> bool {
    annihilator(m).is_empty()
}
