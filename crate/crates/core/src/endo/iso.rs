use crate::algebra::Algebra;
use crate::linalg::{vec_axpy, vec_is_zero, Scalar, Span};

/// An algebra isomorphism from a presented algebra: vertex `v` goes to
/// `vertex_map[v]` and arrow `k` to the element `arrow_images[k]`.
#[derive(Clone, Debug)]
pub struct AlgebraIso {
    pub vertex_map: Vec<usize>,
    pub arrow_images: Vec<Vec<Scalar>>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Nonzero combinations with coefficients in {-1, 0, 1} of the given basis elements.
fn sign_combinations(a: &Algebra, elems: &[usize]) -> Vec<Vec<Scalar>> {
    let f = a.field();
    let mut out: Vec<Vec<Scalar>> = Vec::new();
    let total = 3usize.pow(elems.len() as u32);
    for code in 1..total {
        let mut x = vec![f.zero(); a.dim()];
        let mut c = code;
        for &e in elems {
            let s = match c % 3 {
                0 => 0,
                1 => 1,
                _ => -1,
            };
            c /= 3;
            if s != 0 {
                x[e] = &x[e] + &f.from_i64(s);
            }
        }
        if !vec_is_zero(&x) && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// Searches for an isomorphism from `presented` (which must carry a quiver
/// presentation) onto `a`: a vertex bijection matching Cartan matrices, and
/// arrow images among signed sums of generators of `a` such that every
/// relation vanishes and the images generate `a`.
pub fn find_isomorphism(presented: &Algebra, a: &Algebra) -> Option<AlgebraIso> {
    if presented.dim() != a.dim() {
        return None;
    }
    search_onto(presented, a, true)
}

/// Like [`find_isomorphism`], but only asks for a surjection: `a` has the
/// quiver of `presented` and satisfies its relations, possibly with more.
pub fn find_epimorphism(presented: &Algebra, a: &Algebra) -> Option<AlgebraIso> {
    search_onto(presented, a, false)
}

fn search_onto(presented: &Algebra, a: &Algebra, exact: bool) -> Option<AlgebraIso> {
    let p = presented.presentation()?;
    let n = a.num_vertices();
    if presented.num_vertices() != n || presented.field() != a.field() {
        return None;
    }
    let cp = presented.cartan_matrix();
    let ca = a.cartan_matrix();
    let cartan_ok = |x: usize, y: usize| if exact { x == y } else { x >= y };
    let gens = a.generators();
    // arrows assigned in order; relation r is checked once its last arrow is placed
    let check_at: Vec<Vec<usize>> = {
        let mut v = vec![Vec::new(); p.arrows.len()];
        for (r, rel) in p.relations.iter().enumerate() {
            if let Some(m) = rel.terms.iter().flat_map(|t| t.word.iter().copied()).max() {
                v[m].push(r);
            }
        }
        v
    };
    for sigma in permutations(n) {
        if (0..n).any(|s| (0..n).any(|t| !cartan_ok(cp[s][t], ca[sigma[s]][sigma[t]]))) {
            continue;
        }
        let mut candidates = Vec::new();
        let mut ok = true;
        for arrow in &p.arrows {
            let (s, t) = (sigma[arrow.source], sigma[arrow.target]);
            let gs: Vec<usize> = gens.iter().copied().filter(|&g| a.ends(g) == (s, t)).collect();
            let wanted = p.arrows.iter().filter(|b| b.source == arrow.source && b.target == arrow.target).count();
            if gs.len() != wanted {
                ok = false;
                break;
            }
            candidates.push(sign_combinations(a, &gs));
        }
        if !ok {
            continue;
        }
        let mut chosen: Vec<Vec<Scalar>> = Vec::new();
        if search(presented, a, &candidates, &check_at, &mut chosen) {
            return Some(AlgebraIso { vertex_map: sigma, arrow_images: chosen });
        }
    }
    None
}

fn eval(a: &Algebra, images: &[Vec<Scalar>], word: &[usize]) -> Vec<Scalar> {
    let mut x = images[word[0]].clone();
    for &k in &word[1..] {
        x = a.mul(&x, &images[k]);
        if vec_is_zero(&x) {
            break;
        }
    }
    x
}

fn search(
    presented: &Algebra,
    a: &Algebra,
    candidates: &[Vec<Vec<Scalar>>],
    check_at: &[Vec<usize>],
    chosen: &mut Vec<Vec<Scalar>>,
) -> bool {
    let p = presented.presentation().expect("presented");
    let k = chosen.len();
    if k == candidates.len() {
        return generates(a, chosen);
    }
    for c in &candidates[k] {
        chosen.push(c.clone());
        let rel_ok = check_at[k].iter().all(|&r| {
            let mut sum = vec![a.field().zero(); a.dim()];
            for t in &p.relations[r].terms {
                vec_axpy(&mut sum, &a.field().from_i64(t.coeff), &eval(a, chosen, &t.word));
            }
            vec_is_zero(&sum)
        });
        if rel_ok && search(presented, a, candidates, check_at, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Whether the idempotents and the given elements generate `a` as an algebra.
fn generates(a: &Algebra, elems: &[Vec<Scalar>]) -> bool {
    let mut span = Span::untracked(a.field(), a.dim());
    for &e in a.idempotents() {
        span.insert(&a.unit_vector(e));
    }
    let mut frontier: Vec<Vec<Scalar>> = elems.iter().filter(|x| span.insert(x)).cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in elems {
                let y = a.mul(x, g);
                if span.insert(&y) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    span.dim() == a.dim()
}
