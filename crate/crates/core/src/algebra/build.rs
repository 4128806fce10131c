use std::cmp::Ordering;
use std::collections::HashMap;

use super::basic::{to_product, Algebra, AlgebraParts};
use super::presentation::QuiverPresentation;
use crate::error::{Error, Result};
use crate::linalg::{vec_is_zero, Field, Scalar, Span};

/// A path: its start vertex and arrow word (empty for a trivial path).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Path {
    start: usize,
    word: Vec<usize>,
}

/// Builds `KQ / I` with basis a set of non-leading paths.
///
/// The truncation length `N` grows from the longest relation term until every
/// path of length `N` lies in the ideal; paths of length at least `N` are then
/// zero and the computation is exact. Fails with `NotAdmissible` if no
/// `N` up to the bound works.
pub fn build_algebra(qp: &QuiverPresentation) -> Result<Algebra> {
    qp.validate()?;
    let bound = qp.effective_bound();
    let longest = qp.relations.iter().flat_map(|r| r.terms.iter().map(|t| t.word.len())).max().unwrap_or(0);
    for n in longest.max(1)..=bound {
        if let Some(alg) = try_truncation(qp, n)? {
            return Ok(alg);
        }
    }
    Err(Error::NotAdmissible(bound))
}

fn enumerate_paths(qp: &QuiverPresentation, max_len: usize) -> Vec<Path> {
    let mut all: Vec<Path> = (0..qp.vertices.len()).map(|v| Path { start: v, word: vec![] }).collect();
    let mut frontier: Vec<(Path, usize)> = (0..qp.vertices.len()).map(|v| (all[v].clone(), v)).collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (p, end) in &frontier {
            for (a, arrow) in qp.arrows.iter().enumerate() {
                if arrow.source == *end {
                    let mut w = p.word.clone();
                    w.push(a);
                    next.push((Path { start: p.start, word: w }, arrow.target));
                }
            }
        }
        all.extend(next.iter().map(|(p, _)| p.clone()));
        frontier = next;
    }
    all
}

fn path_end(qp: &QuiverPresentation, p: &Path) -> usize {
    p.word.last().map_or(p.start, |&a| qp.arrows[a].target)
}

fn try_truncation(qp: &QuiverPresentation, n: usize) -> Result<Option<Algebra>> {
    let field = qp.field;
    let mut paths = enumerate_paths(qp, n);
    // columns: long paths first so that pivots land on them
    paths.sort_by(|a, b| match b.word.len().cmp(&a.word.len()) {
        Ordering::Equal => a.word.cmp(&b.word).then(a.start.cmp(&b.start)),
        o => o,
    });
    let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let dim = paths.len();

    // arrow multiplication on the truncated path space
    let concat = |p: &Path, a: usize, left: bool| -> Option<usize> {
        let arrow = &qp.arrows[a];
        let w = if left {
            if arrow.target != p.start {
                return None;
            }
            let mut w = vec![a];
            w.extend_from_slice(&p.word);
            Path { start: arrow.source, word: w }
        } else {
            if arrow.source != path_end(qp, p) {
                return None;
            }
            let mut w = p.word.clone();
            w.push(a);
            Path { start: p.start, word: w }
        };
        if w.word.len() > n {
            return None;
        }
        index.get(&w).copied()
    };
    let times_arrow = |v: &[Scalar], a: usize, left: bool| -> Vec<Scalar> {
        let mut out = vec![field.zero(); dim];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some(j) = concat(&paths[i], a, left) {
                out[j] = &out[j] + c;
            }
        }
        out
    };

    let mut ideal = Span::untracked(field, dim);
    let mut queue = Vec::new();
    for rel in &qp.relations {
        let mut v = vec![field.zero(); dim];
        let (s, _) = qp.word_ends(&rel.terms[0].word).expect("validated");
        for t in &rel.terms {
            if t.word.len() > n {
                continue;
            }
            let j = index[&Path { start: s, word: t.word.clone() }];
            v[j] = &v[j] + &field.from_i64(t.coeff);
        }
        queue.push(v);
    }
    while let Some(v) = queue.pop() {
        if vec_is_zero(&v) || !ideal.insert(&v) {
            continue;
        }
        let row = ideal.basis().last().unwrap().clone();
        for a in 0..qp.arrows.len() {
            for left in [false, true] {
                let w = times_arrow(&row, a, left);
                if !vec_is_zero(&w) {
                    queue.push(w);
                }
            }
        }
    }

    let unit = |i: usize| {
        let mut e = vec![field.zero(); dim];
        e[i] = field.one();
        e
    };
    let admissible = paths.iter().enumerate().filter(|(_, p)| p.word.len() == n).all(|(i, _)| ideal.contains(&unit(i)));
    if !admissible {
        return Ok(None);
    }

    let pivot: Vec<bool> = {
        let mut v = vec![false; dim];
        for &p in ideal.pivots() {
            v[p] = true;
        }
        v
    };
    let mut basis: Vec<usize> = (0..dim).filter(|&i| !pivot[i]).collect();
    basis.sort_by(|&x, &y| {
        let (a, b) = (&paths[x], &paths[y]);
        a.word.len().cmp(&b.word.len()).then(a.word.cmp(&b.word)).then(a.start.cmp(&b.start))
    });
    let mut position = vec![usize::MAX; dim];
    for (k, &i) in basis.iter().enumerate() {
        position[i] = k;
    }
    let d = basis.len();
    let normal_form = |w: Path| -> Vec<Scalar> {
        let mut out = vec![field.zero(); d];
        if w.word.len() >= n {
            return out;
        }
        let r = ideal.reduce(&unit(index[&w]));
        for (i, c) in r.into_iter().enumerate() {
            if !c.is_zero() {
                debug_assert!(position[i] != usize::MAX);
                out[position[i]] = c;
            }
        }
        out
    };

    let bpaths: Vec<&Path> = basis.iter().map(|&i| &paths[i]).collect();
    let mut mult = vec![vec![Vec::new(); d]; d];
    for (x, p) in bpaths.iter().enumerate() {
        let pe = path_end(qp, p);
        for (y, q) in bpaths.iter().enumerate() {
            if pe != q.start {
                continue;
            }
            let mut w = p.word.clone();
            w.extend_from_slice(&q.word);
            mult[x][y] = to_product(&normal_form(Path { start: p.start, word: w }));
        }
    }
    let labels = bpaths
        .iter()
        .map(|p| if p.word.is_empty() { format!("e{}", qp.vertices[p.start]) } else { qp.word_name(&p.word) })
        .collect();
    let ends = bpaths.iter().map(|p| (p.start, path_end(qp, p))).collect();
    let idempotents = (0..qp.vertices.len())
        .map(|v| bpaths.iter().position(|p| p.word.is_empty() && p.start == v).expect("trivial paths survive"))
        .collect();
    let algebra = Algebra::from_parts(AlgebraParts {
        field,
        vertex_labels: qp.vertices.clone(),
        labels,
        ends,
        idempotents,
        mult,
        presentation: Some(qp.clone()),
        paths: Some(bpaths.iter().map(|p| p.word.clone()).collect()),
    })?;
    Ok(Some(algebra))
}

/// The path algebra of a linearly oriented `A_n` quiver `1 -> 2 -> ... -> n`
/// modulo the given consecutive zero relations (pairs `(i, len)`: the path
/// of length `len` starting at vertex `i`, both 1-based).
pub fn linear_an(field: Field, n: usize, zero_paths: &[(usize, usize)]) -> Result<Algebra> {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut qp = QuiverPresentation::new(field);
    qp.vertices = labels.clone();
    for i in 1..n {
        qp = qp.arrow(&format!("a{i}"), &labels[i - 1], &labels[i]);
    }
    for &(i, len) in zero_paths {
        let word: Vec<String> = (i..i + len).map(|k| format!("a{k}")).collect();
        qp = qp.relation(&word.join("*"));
    }
    build_algebra(&qp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn auslander_k_x3() -> QuiverPresentation {
        QuiverPresentation::new(Field::Rational)
            .vertices(&["1", "2", "3"])
            .arrow("a1", "1", "2")
            .arrow("b2", "2", "1")
            .arrow("a2", "2", "3")
            .arrow("b1", "3", "2")
            .relation("a1*b2")
            .relation("a2*b1 - b2*a1")
    }

    #[test]
    fn auslander_algebra_dimensions() {
        let a = build_algebra(&auslander_k_x3()).unwrap();
        assert_eq!(a.dim(), 14);
        assert!(a.validate().passed());
        let c = a.cartan_matrix();
        let row_sums: Vec<usize> = c.iter().map(|r| r.iter().sum()).collect();
        assert_eq!(row_sums, vec![3, 5, 6]);
        assert_eq!(a.generators().len(), 4);
    }

    #[test]
    fn two_cycle_with_zero_relations() {
        let qp = QuiverPresentation::new(Field::Rational)
            .vertices(&["1", "2"])
            .arrow("a", "1", "2")
            .arrow("b", "2", "1")
            .relation("a*b")
            .relation("b*a");
        let a = build_algebra(&qp).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.cartan_matrix(), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn linear_a4_dims() {
        let a = linear_an(Field::Rational, 4, &[]).unwrap();
        assert_eq!(a.dim(), 10);
        let b = linear_an(Field::Rational, 4, &[(2, 2)]).unwrap();
        assert_eq!(b.dim(), 8);
        let c = linear_an(Field::Rational, 4, &[(1, 2), (2, 2)]).unwrap();
        assert_eq!(c.dim(), 7);
    }

    #[test]
    fn loop_without_relations_is_not_admissible() {
        let qp = QuiverPresentation::new(Field::Rational).vertices(&["1"]).arrow("x", "1", "1").with_bound(6);
        assert!(matches!(build_algebra(&qp), Err(Error::NotAdmissible(6))));
        let qp = qp.relation("x*x*x");
        assert_eq!(build_algebra(&qp).unwrap().dim(), 3);
    }

    #[test]
    fn opposite_is_involutive() {
        let a = build_algebra(&auslander_k_x3()).unwrap();
        let op = a.opposite();
        assert!(op.validate().passed());
        assert!(op.opposite().ptr_eq(&a));
        assert_eq!(op.cartan_matrix()[0][1], a.cartan_matrix()[1][0]);
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(op.product(i, j), a.product(j, i));
            }
        }
    }

    #[test]
    fn reinterpret_mod_p() {
        let a = build_algebra(&auslander_k_x3()).unwrap();
        let b = a.reinterpret_over_field(Field::Prime(2)).unwrap();
        assert_eq!(b.dim(), 14);
        assert!(b.validate().passed());
    }

    #[test]
    fn derived_presentation_rebuilds_same_dimension() {
        let a = build_algebra(&auslander_k_x3()).unwrap();
        let stripped = Algebra::from_parts(AlgebraParts {
            field: a.field(),
            vertex_labels: a.vertex_labels().to_vec(),
            labels: a.labels().to_vec(),
            ends: (0..a.dim()).map(|b| a.ends(b)).collect(),
            idempotents: a.idempotents().to_vec(),
            mult: (0..a.dim()).map(|i| (0..a.dim()).map(|j| a.product(i, j).clone()).collect()).collect(),
            presentation: None,
            paths: None,
        })
        .unwrap();
        assert_eq!(stripped, a);
        let qp = stripped.presentation_or_derived();
        let rebuilt = build_algebra(&qp).unwrap();
        assert_eq!(rebuilt.cartan_matrix(), a.cartan_matrix());
    }
}
