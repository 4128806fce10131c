use super::mat::{vec_axpy, vec_is_zero, Mat};
use super::scalar::{Field, Scalar};

/// Incremental echelon basis of a subspace of `K^dim`.
///
/// Every offered vector is remembered by index, so coordinates of a member
/// can be expressed in terms of the offered family.
#[derive(Clone, Debug)]
pub struct Span {
    field: Field,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    // rows[i] = sum_j track[i][j] * offered[j]
    track: Vec<Vec<Scalar>>,
    offered: usize,
    tracking: bool,
}

impl Span {
    pub fn new(field: Field, dim: usize) -> Span {
        Span { field, dim, rows: Vec::new(), pivots: Vec::new(), track: Vec::new(), offered: 0, tracking: true }
    }

    /// A span that only answers membership; `coords` is unavailable.
    pub fn untracked(field: Field, dim: usize) -> Span {
        Span { tracking: false, ..Span::new(field, dim) }
    }

    pub fn from_vectors<'a>(field: Field, dim: usize, vs: impl IntoIterator<Item = &'a Vec<Scalar>>) -> Span {
        let mut s = Span::new(field, dim);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after elimination and the coefficients used per stored row.
    fn eliminate(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut r = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                vec_axpy(&mut r, &-&c, row);
            }
            coeffs.push(c);
        }
        (r, coeffs)
    }

    /// Residual of `v` modulo the span; supported off the pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.eliminate(v).0
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vec_is_zero(&self.eliminate(v).0)
    }

    /// Offers `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let idx = self.offered;
        self.offered += 1;
        if self.tracking {
            for t in &mut self.track {
                t.push(self.field.zero());
            }
        }
        let (mut r, coeffs) = self.eliminate(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else { return false };
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut() {
            *x = &*x * &inv;
        }
        if !self.tracking {
            self.rows.push(r);
            self.pivots.push(p);
            return true;
        }
        let mut t = vec![self.field.zero(); self.offered];
        t[idx] = inv.clone();
        for (c, tr) in coeffs.iter().zip(&self.track) {
            if !c.is_zero() {
                vec_axpy(&mut t, &-&(c * &inv), tr);
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        self.track.push(t);
        true
    }

    /// Coordinates of `v` in terms of the offered vectors, if `v` is in the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert!(self.tracking, "coords on an untracked span");
        let (r, coeffs) = self.eliminate(v);
        if !vec_is_zero(&r) {
            return None;
        }
        let mut out = vec![self.field.zero(); self.offered];
        for (c, t) in coeffs.iter().zip(&self.track) {
            vec_axpy(&mut out, c, t);
        }
        Some(out)
    }

    /// Standard-basis vectors extending this span to the whole space, in index order.
    pub fn complement(&self) -> Vec<Vec<Scalar>> {
        let mut probe = self.clone();
        let mut out = Vec::new();
        for i in 0..self.dim {
            let mut e = vec![self.field.zero(); self.dim];
            e[i] = self.field.one();
            if probe.insert(&e) {
                out.push(e);
            }
        }
        out
    }

    pub fn to_mat(&self) -> Mat {
        Mat::from_rows(self.field, self.dim, self.rows.clone())
    }
}

/// Coordinates with respect to a fixed family that splits as `U ⊕ C`, used
/// to read off classes in a quotient `V / U`.
#[derive(Clone, Debug)]
pub struct QuotientCoords {
    span: Span,
    sub_dim: usize,
    comp_dim: usize,
}

impl QuotientCoords {
    /// `sub` must be independent; `complement` must complete it to a basis.
    pub fn new(field: Field, dim: usize, sub: &[Vec<Scalar>], complement: &[Vec<Scalar>]) -> QuotientCoords {
        let mut span = Span::new(field, dim);
        for v in sub.iter().chain(complement) {
            let grew = span.insert(v);
            debug_assert!(grew, "family is not independent");
        }
        assert_eq!(span.dim(), dim, "family does not span the ambient space");
        QuotientCoords { span, sub_dim: sub.len(), comp_dim: complement.len() }
    }

    /// Coordinates of the class of `v` in `V / U` along the complement.
    pub fn class(&self, v: &[Scalar]) -> Vec<Scalar> {
        let c = self.span.coords(v).expect("family spans");
        c[self.sub_dim..self.sub_dim + self.comp_dim].to_vec()
    }

    /// Full coordinates `(u-part, c-part)`.
    pub fn split(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut c = self.span.coords(v).expect("family spans");
        let tail = c.split_off(self.sub_dim);
        (c, tail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_coords_and_membership() {
        let q = Field::Rational;
        let v = |xs: &[i64]| xs.iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>();
        let mut s = Span::new(q, 3);
        assert!(s.insert(&v(&[1, 1, 0])));
        assert!(s.insert(&v(&[0, 1, 1])));
        assert!(!s.insert(&v(&[1, 2, 1])));
        assert_eq!(s.dim(), 2);
        let c = s.coords(&v(&[2, 5, 3])).unwrap();
        assert_eq!(c, vec![q.from_i64(2), q.from_i64(3), q.zero()]);
        assert!(s.coords(&v(&[0, 0, 1])).is_none());
        assert_eq!(s.complement(), vec![v(&[1, 0, 0])]);
    }

    #[test]
    fn quotient_classes() {
        let q = Field::Rational;
        let v = |xs: &[i64]| xs.iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>();
        let qc = QuotientCoords::new(q, 2, &[v(&[1, 1])], &[v(&[1, 0])]);
        assert_eq!(qc.class(&v(&[3, 1])), v(&[2]));
    }
}
