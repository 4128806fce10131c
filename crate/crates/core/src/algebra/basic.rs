use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::presentation::{Arrow, QuiverPresentation, Relation, Term};
use crate::error::{Error, Result};
use crate::linalg::{vec_axpy, vec_is_zero, Field, Mat, Scalar, Span};

/// Sparse structure-constant row: `b_i * b_j = sum c_k b_k`.
pub type Product = Vec<(usize, Scalar)>;

/// A finite-dimensional basic algebra given by structure constants on an
/// adapted basis `idempotents ∪ radical`.
///
/// Cheap to clone; equality is structural (field, ends, idempotents and
/// structure constants), labels and provenance are ignored.
#[derive(Clone)]
pub struct Algebra(Arc<AlgebraData>);

pub struct AlgebraData {
    field: Field,
    vertex_labels: Vec<String>,
    labels: Vec<String>,
    ends: Vec<(usize, usize)>,
    idempotents: Vec<usize>,
    vertex_of_idempotent: Vec<Option<usize>>,
    mult: Vec<Vec<Product>>,
    generators: Vec<usize>,
    words: Vec<Vec<(Vec<usize>, Scalar)>>,
    presentation: Option<QuiverPresentation>,
    fingerprint: u64,
    opposite: OnceLock<Algebra>,
    op_of: Option<Weak<AlgebraData>>,
}

/// Raw ingredients for [`Algebra::from_parts`].
pub struct AlgebraParts {
    pub field: Field,
    pub vertex_labels: Vec<String>,
    pub labels: Vec<String>,
    pub ends: Vec<(usize, usize)>,
    pub idempotents: Vec<usize>,
    pub mult: Vec<Vec<Product>>,
    pub presentation: Option<QuiverPresentation>,
    /// Basis element -> word in arrow indices, when known (quiver provenance).
    pub paths: Option<Vec<Vec<usize>>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Algebra) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        let (a, b) = (&*self.0, &*other.0);
        a.fingerprint == b.fingerprint
            && a.field == b.field
            && a.ends == b.ends
            && a.idempotents == b.idempotents
            && a.mult == b.mult
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {}, {} vertices, {})", self.dim(), self.num_vertices(), self.field())
    }
}

impl Algebra {
    pub fn from_parts(parts: AlgebraParts) -> Result<Algebra> {
        Self::assemble(parts, None)
    }

    fn assemble(parts: AlgebraParts, op_of: Option<Weak<AlgebraData>>) -> Result<Algebra> {
        let AlgebraParts { field, vertex_labels, labels, ends, idempotents, mult, presentation, paths } = parts;
        let d = labels.len();
        if ends.len() != d || mult.len() != d || mult.iter().any(|r| r.len() != d) {
            return Err(Error::Validation("structure constant table has wrong shape".into()));
        }
        if idempotents.len() != vertex_labels.len() {
            return Err(Error::Validation("one idempotent per vertex required".into()));
        }
        let mut vertex_of_idempotent = vec![None; d];
        for (v, &e) in idempotents.iter().enumerate() {
            if e >= d || vertex_of_idempotent[e].is_some() {
                return Err(Error::Validation(format!("bad idempotent index {e}")));
            }
            vertex_of_idempotent[e] = Some(v);
        }
        let mut hasher = DefaultHasher::new();
        field.hash(&mut hasher);
        ends.hash(&mut hasher);
        idempotents.hash(&mut hasher);
        mult.hash(&mut hasher);
        let fingerprint = hasher.finish();

        let mut data = AlgebraData {
            field,
            vertex_labels,
            labels,
            ends,
            idempotents,
            vertex_of_idempotent,
            mult,
            generators: Vec::new(),
            words: Vec::new(),
            presentation,
            fingerprint,
            opposite: OnceLock::new(),
            op_of,
        };
        match paths {
            Some(paths) => {
                let arrows = data.presentation.as_ref().map_or(0, |p| p.arrows.len());
                data.generators = (0..arrows)
                    .map(|a| {
                        paths
                            .iter()
                            .position(|p| p.as_slice() == [a])
                            .ok_or_else(|| Error::Validation(format!("arrow {a} vanishes in the algebra")))
                    })
                    .collect::<Result<_>>()?;
                data.words = paths
                    .into_iter()
                    .enumerate()
                    .map(|(i, p)| if data.vertex_of_idempotent[i].is_some() { vec![] } else { vec![(p, field.one())] })
                    .collect();
            }
            None => {
                let (generators, words) = derive_generators(&data)?;
                data.generators = generators;
                data.words = words;
            }
        }
        Ok(Algebra(Arc::new(data)))
    }

    pub fn field(&self) -> Field {
        self.0.field
    }
    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }
    pub fn num_vertices(&self) -> usize {
        self.0.idempotents.len()
    }
    pub fn vertex_labels(&self) -> &[String] {
        &self.0.vertex_labels
    }
    pub fn vertex_label(&self, v: usize) -> &str {
        &self.0.vertex_labels[v]
    }
    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.0.vertex_labels.iter().position(|l| l == label)
    }
    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }
    pub fn label(&self, b: usize) -> &str {
        &self.0.labels[b]
    }
    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.0.labels.iter().position(|l| l == label)
    }
    /// `(s, t)` with `b ∈ e_s A e_t`.
    pub fn ends(&self, b: usize) -> (usize, usize) {
        self.0.ends[b]
    }
    pub fn idempotent(&self, v: usize) -> usize {
        self.0.idempotents[v]
    }
    pub fn idempotents(&self) -> &[usize] {
        &self.0.idempotents
    }
    pub fn is_idempotent(&self, b: usize) -> bool {
        self.0.vertex_of_idempotent[b].is_some()
    }
    /// Basis indices spanning the radical.
    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&b| !self.is_idempotent(b)).collect()
    }
    /// Radical basis elements whose classes span `rad / rad²`.
    pub fn generators(&self) -> &[usize] {
        &self.0.generators
    }
    /// Expression of basis element `b` as a combination of words in [`generators`](Self::generators).
    pub fn words(&self, b: usize) -> &[(Vec<usize>, Scalar)] {
        &self.0.words[b]
    }
    pub fn presentation(&self) -> Option<&QuiverPresentation> {
        self.0.presentation.as_ref()
    }
    pub fn product(&self, i: usize, j: usize) -> &Product {
        &self.0.mult[i][j]
    }
    pub fn ptr_eq(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Basis elements of `e_s A e_t`.
    pub fn basis_between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.0.ends[b] == (s, t)).collect()
    }

    /// `dim e_i A e_j`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut c = vec![vec![0; n]; n];
        for &(s, t) in &self.0.ends {
            c[s][t] += 1;
        }
        c
    }

    pub fn unit_vector(&self, b: usize) -> Vec<Scalar> {
        let mut v = vec![self.field().zero(); self.dim()];
        v[b] = self.field().one();
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field().zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.0.mult[i][j] {
                    out[*k] = &out[*k] + &(&ab * c);
                }
            }
        }
        out
    }

    /// The opposite algebra: same basis, `b_i ∘ b_j = b_j b_i`, ends swapped.
    /// `a.opposite().opposite()` returns `a` itself.
    pub fn opposite(&self) -> Algebra {
        if let Some(orig) = self.0.op_of.as_ref().and_then(Weak::upgrade) {
            return Algebra(orig);
        }
        self.0
            .opposite
            .get_or_init(|| {
                let d = self.dim();
                let mult = (0..d).map(|i| (0..d).map(|j| self.0.mult[j][i].clone()).collect()).collect();
                let paths = self.0.presentation.as_ref().map(|_| {
                    (0..d)
                        .map(|b| self.0.words[b].first().map(|(w, _)| w.iter().rev().copied().collect()).unwrap_or_default())
                        .collect()
                });
                let parts = AlgebraParts {
                    field: self.field(),
                    vertex_labels: self.0.vertex_labels.clone(),
                    labels: self.0.labels.clone(),
                    ends: self.0.ends.iter().map(|&(s, t)| (t, s)).collect(),
                    idempotents: self.0.idempotents.clone(),
                    mult,
                    presentation: self.0.presentation.as_ref().map(QuiverPresentation::opposite),
                    paths,
                };
                Algebra::assemble(parts, Some(Arc::downgrade(&self.0))).expect("opposite of a valid algebra")
            })
            .clone()
    }

    /// Maps every structure constant through `Z -> field`.
    pub fn reinterpret_over_field(&self, field: Field) -> Result<Algebra> {
        let map = |s: &Scalar| -> Result<Scalar> {
            match s {
                Scalar::Q(q) if q.is_integer() => field.from_rational(q),
                Scalar::Q(q) => Err(Error::NonIntegerConstant(q.to_string())),
                Scalar::Fp(..) => {
                    let v = s.symmetric_i64().expect("residue");
                    Ok(field.from_i64(v))
                }
            }
        };
        let d = self.dim();
        let mut mult = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                for (k, c) in &self.0.mult[i][j] {
                    let c = map(c)?;
                    if !c.is_zero() {
                        mult[i][j].push((*k, c));
                    }
                }
            }
        }
        let presentation = self.0.presentation.clone().map(|mut p| {
            p.field = field;
            p
        });
        let paths = presentation.as_ref().map(|_| {
            (0..d).map(|b| self.0.words[b].first().map(|(w, _)| w.clone()).unwrap_or_default()).collect()
        });
        let alg = Algebra::from_parts(AlgebraParts {
            field,
            vertex_labels: self.0.vertex_labels.clone(),
            labels: self.0.labels.clone(),
            ends: self.0.ends.clone(),
            idempotents: self.0.idempotents.clone(),
            mult,
            presentation,
            paths,
        })?;
        let report = alg.validate();
        if !report.passed() {
            return Err(Error::Validation(report.to_string()));
        }
        Ok(alg)
    }

    /// Checks associativity, unit, orthogonal idempotents, adapted basis,
    /// radical ideal, nilpotency and split semisimple quotient.
    pub fn validate(&self) -> ValidationReport {
        let mut failures = Vec::new();
        let d = self.dim();
        let n = self.num_vertices();
        let f = self.field();
        // idempotents and adaptedness
        for b in 0..d {
            let (s, t) = self.ends(b);
            if s >= n || t >= n {
                failures.push(format!("basis element {} has bad ends", self.label(b)));
                continue;
            }
            for v in 0..n {
                let e = self.idempotent(v);
                let left = self.mul(&self.unit_vector(e), &self.unit_vector(b));
                let right = self.mul(&self.unit_vector(b), &self.unit_vector(e));
                let want_l = if v == s { self.unit_vector(b) } else { vec![f.zero(); d] };
                let want_r = if v == t { self.unit_vector(b) } else { vec![f.zero(); d] };
                if left != want_l {
                    failures.push(format!("e_{} * {} != expected", self.vertex_label(v), self.label(b)));
                }
                if right != want_r {
                    failures.push(format!("{} * e_{} != expected", self.label(b), self.vertex_label(v)));
                }
            }
        }
        for (v, &e) in self.idempotents().iter().enumerate() {
            if self.ends(e) != (v, v) {
                failures.push(format!("idempotent of vertex {} is not in e_v A e_v", self.vertex_label(v)));
            }
        }
        // associativity on basis triples
        'assoc: for i in 0..d {
            for j in 0..d {
                if self.0.mult[i][j].is_empty() && self.ends(i).1 != self.ends(j).0 {
                    continue;
                }
                let ij = self.mul(&self.unit_vector(i), &self.unit_vector(j));
                for k in 0..d {
                    let left = self.mul(&ij, &self.unit_vector(k));
                    let jk = self.mul(&self.unit_vector(j), &self.unit_vector(k));
                    let right = self.mul(&self.unit_vector(i), &jk);
                    if left != right {
                        failures.push(format!(
                            "associativity fails on ({}, {}, {})",
                            self.label(i),
                            self.label(j),
                            self.label(k)
                        ));
                        break 'assoc;
                    }
                }
            }
        }
        // radical is an ideal
        let rad = self.radical_basis();
        for &r in &rad {
            for b in 0..d {
                for prod in [&self.0.mult[r][b], &self.0.mult[b][r]] {
                    if prod.iter().any(|(k, c)| !c.is_zero() && self.is_idempotent(*k)) {
                        failures.push(format!("radical not closed under multiplication by {}", self.label(b)));
                    }
                }
            }
        }
        // nilpotency: rad^k -> 0
        let mut power: Vec<Vec<Scalar>> = rad.iter().map(|&r| self.unit_vector(r)).collect();
        let mut steps = 0;
        while !power.is_empty() {
            steps += 1;
            if steps > d + 1 {
                failures.push("radical is not nilpotent".into());
                break;
            }
            let mut next = Span::untracked(f, d);
            for x in &power {
                for &r in &rad {
                    let p = self.mul(x, &self.unit_vector(r));
                    if !vec_is_zero(&p) {
                        next.insert(&p);
                    }
                }
            }
            power = next.basis().to_vec();
        }
        failures.dedup();
        ValidationReport { failures }
    }

    /// Length of the longest nonzero product of radical elements (Loewy length minus one).
    pub fn radical_nilpotency(&self) -> usize {
        let rad = self.radical_basis();
        let mut power: Vec<Vec<Scalar>> = rad.iter().map(|&r| self.unit_vector(r)).collect();
        let mut k = 0;
        while !power.is_empty() && k <= self.dim() {
            k += 1;
            let mut next = Span::untracked(self.field(), self.dim());
            for x in &power {
                for &r in &rad {
                    let p = self.mul(x, &self.unit_vector(r));
                    if !vec_is_zero(&p) {
                        next.insert(&p);
                    }
                }
            }
            power = next.basis().to_vec();
        }
        k
    }

    /// Evaluates a word in generator indices as an algebra element.
    pub fn eval_word(&self, word: &[usize]) -> Vec<Scalar> {
        let mut x = self.unit_vector(self.0.generators[word[0]]);
        for &g in &word[1..] {
            x = self.mul(&x, &self.unit_vector(self.0.generators[g]));
            if vec_is_zero(&x) {
                break;
            }
        }
        x
    }

    /// A quiver presentation: the stored one, or one derived with the
    /// generators as arrows and a spanning set of the relation ideal.
    pub fn presentation_or_derived(&self) -> QuiverPresentation {
        if let Some(p) = &self.0.presentation {
            return p.clone();
        }
        let gens = self.generators();
        let arrows: Vec<Arrow> = gens
            .iter()
            .enumerate()
            .map(|(gi, &g)| {
                let (s, t) = self.ends(g);
                Arrow { name: format!("g{gi}"), source: s, target: t }
            })
            .collect();
        let max_len = self.radical_nilpotency() + 1;
        // all composable words up to max_len
        let mut words: Vec<Vec<usize>> = (0..gens.len()).map(|g| vec![g]).collect();
        let mut frontier = words.clone();
        for _ in 1..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                let t = arrows[*w.last().unwrap()].target;
                for (g, a) in arrows.iter().enumerate() {
                    if a.source == t {
                        let mut w2 = w.clone();
                        w2.push(g);
                        next.push(w2);
                    }
                }
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        let values: Vec<Vec<Scalar>> = words.iter().map(|w| self.eval_word(w)).collect();
        // kernel of the evaluation map, per pair of endpoints
        let mut relations = Vec::new();
        let n = self.num_vertices();
        for s in 0..n {
            for t in 0..n {
                let idx: Vec<usize> = (0..words.len())
                    .filter(|&i| {
                        let w = &words[i];
                        arrows[w[0]].source == s && arrows[*w.last().unwrap()].target == t && w.len() >= 2
                    })
                    .collect();
                if idx.is_empty() {
                    continue;
                }
                let cols: Vec<Vec<Scalar>> = idx.iter().map(|&i| values[i].clone()).collect();
                let m = Mat::from_columns(self.field(), self.dim(), &cols);
                for kv in m.kernel_vectors() {
                    let coeffs = integer_coefficients(&kv);
                    let terms = idx
                        .iter()
                        .zip(coeffs)
                        .filter(|(_, c)| *c != 0)
                        .map(|(&i, c)| Term { coeff: c, word: words[i].clone() })
                        .collect();
                    relations.push(Relation { terms });
                }
            }
        }
        QuiverPresentation {
            field: self.field(),
            vertices: self.0.vertex_labels.clone(),
            arrows,
            relations,
            pathlen_bound: Some(max_len),
        }
    }

    /// A copy with new basis and vertex labels.
    pub fn relabeled(&self, vertex_labels: Vec<String>, labels: Vec<String>) -> Algebra {
        assert_eq!(vertex_labels.len(), self.num_vertices());
        assert_eq!(labels.len(), self.dim());
        let d = &self.0;
        let paths = d.presentation.as_ref().map(|_| {
            (0..self.dim()).map(|b| d.words[b].first().map(|(w, _)| w.clone()).unwrap_or_default()).collect()
        });
        Algebra::from_parts(AlgebraParts {
            field: d.field,
            vertex_labels,
            labels,
            ends: d.ends.clone(),
            idempotents: d.idempotents.clone(),
            mult: d.mult.clone(),
            presentation: d.presentation.clone(),
            paths,
        })
        .expect("relabeling preserves validity")
    }
}

fn integer_coefficients(v: &[Scalar]) -> Vec<i64> {
    if v.iter().all(|s| matches!(s, Scalar::Fp(..))) {
        return v.iter().map(|s| s.symmetric_i64().unwrap()).collect();
    }
    let mut lcm = BigInt::one();
    for s in v {
        if let Some(q) = s.as_rational() {
            lcm = lcm.lcm(q.denom());
        }
    }
    v.iter()
        .map(|s| {
            let q = s.as_rational().unwrap();
            (q.numer() * (&lcm / q.denom())).to_i64().expect("relation coefficient fits in i64")
        })
        .collect()
}

/// Greedy generators (radical basis elements independent modulo rad²) and
/// word expressions of every basis element.
fn derive_generators(data: &AlgebraData) -> Result<(Vec<usize>, Vec<Vec<(Vec<usize>, Scalar)>>)> {
    let d = data.labels.len();
    let f = data.field;
    let unit = |b: usize| {
        let mut v = vec![f.zero(); d];
        v[b] = f.one();
        v
    };
    let mul = |x: &[Scalar], y: &[Scalar]| {
        let mut out = vec![f.zero(); d];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (k, c) in &data.mult[i][j] {
                    out[*k] = &out[*k] + &(&(a * b) * c);
                }
            }
        }
        out
    };
    let rad: Vec<usize> = (0..d).filter(|&b| data.vertex_of_idempotent[b].is_none()).collect();
    let mut rad2 = Span::untracked(f, d);
    for &a in &rad {
        for &b in &rad {
            let p = mul(&unit(a), &unit(b));
            if !vec_is_zero(&p) {
                rad2.insert(&p);
            }
        }
    }
    let mut generators = Vec::new();
    for &r in &rad {
        if rad2.insert(&unit(r)) {
            generators.push(r);
        }
    }
    if rad2.dim() != rad.len() {
        return Err(Error::Validation("radical is not spanned by the radical basis".into()));
    }
    // breadth-first words, extending only those that enlarge the span
    let mut span = Span::new(f, d);
    let mut family: Vec<Vec<usize>> = Vec::new();
    let mut frontier: Vec<(Vec<usize>, Vec<Scalar>)> = Vec::new();
    for (gi, &g) in generators.iter().enumerate() {
        let v = unit(g);
        if span.insert(&v) {
            family.push(vec![gi]);
            frontier.push((vec![gi], v));
        }
    }
    let mut rounds = 0;
    while !frontier.is_empty() && span.dim() < rad.len() {
        rounds += 1;
        if rounds > d + 1 {
            return Err(Error::Validation("radical is not generated by its generators".into()));
        }
        let mut next = Vec::new();
        for (w, v) in &frontier {
            for (gi, &g) in generators.iter().enumerate() {
                let p = mul(v, &unit(g));
                if vec_is_zero(&p) {
                    continue;
                }
                if span.insert(&p) {
                    let mut w2 = w.clone();
                    w2.push(gi);
                    family.push(w2.clone());
                    next.push((w2, p));
                } else {
                    family.push(Vec::new()); // placeholder for a dependent offer
                }
            }
        }
        frontier = next;
    }
    if span.dim() < rad.len() {
        return Err(Error::Validation("radical is not generated by its generators".into()));
    }
    let mut words = vec![Vec::new(); d];
    for &r in &rad {
        let c = span.coords(&unit(r)).expect("radical spanned");
        let mut expr = Vec::new();
        for (k, coeff) in c.into_iter().enumerate() {
            if !coeff.is_zero() {
                debug_assert!(!family[k].is_empty());
                expr.push((family[k].clone(), coeff));
            }
        }
        words[r] = expr;
    }
    Ok((generators, words))
}

/// Outcome of [`Algebra::validate`]; lists every violated identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
    pub fn first_failure(&self) -> Option<&str> {
        self.failures.first().map(String::as_str)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass")
        } else {
            write!(f, "fail: {}", self.failures.join("; "))
        }
    }
}

/// Accumulates a linear combination of basis elements into a sparse product row.
pub(crate) fn to_product(v: &[Scalar]) -> Product {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

#[allow(dead_code)]
pub(crate) fn add_into(out: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    vec_axpy(out, s, v)
}
