use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::hom_basis_unchecked;
use super::module::{Module, ModuleMap};
use super::sub::{submodule, Graded};
use crate::error::{Error, Result};
use crate::linalg::{eigenvalues_in_field, Field, Mat, Scalar, Span};

/// Random combinations tried after the basis and pair sweeps.
const RANDOM_TRIES: usize = 96;

/// `m = ⊕ summands`, with `π_a ∘ ι_b = δ_ab` and `Σ ι_a ∘ π_a = id`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Module>,
    pub inclusions: Vec<ModuleMap>,
    pub projections: Vec<ModuleMap>,
}

/// The unique eigenvalue of an endomorphism, if it has exactly one
/// (i.e. `f - λ` is nilpotent).
fn single_eigenvalue(f: &ModuleMap) -> Option<Scalar> {
    let m = f.source();
    let n = m.dim();
    let field = m.field();
    if n == 0 {
        return Some(field.zero());
    }
    let nilpotent_after = |c: &Scalar| {
        f.blocks().iter().all(|b| {
            let shifted = b.sub(&Mat::identity(field, b.rows()).scale(c));
            shifted.is_nilpotent()
        })
    };
    let tr = f.blocks().iter().fold(field.zero(), |acc, b| &acc + &b.trace());
    let nn = field.from_i64(n as i64);
    if !nn.is_zero() {
        let c = tr.checked_div(&nn).ok()?;
        return nilpotent_after(&c).then_some(c);
    }
    field.elements().unwrap().into_iter().find(|c| nilpotent_after(c))
}

/// Certifies that `End(m)` is split local: every basis endomorphism has a
/// single eigenvalue in the field, and the shifted elements span a
/// nilpotent ideal of codimension one.
pub fn is_split_local(m: &Module, end_basis: &[ModuleMap]) -> bool {
    local_radical(m, end_basis).is_some()
}

/// A basis of `rad End(m)` when `End(m)` is certified split local.
pub fn local_radical(m: &Module, end_basis: &[ModuleMap]) -> Option<Vec<ModuleMap>> {
    if m.dim() == 0 || end_basis.is_empty() {
        return None;
    }
    let field = m.field();
    let id = ModuleMap::identity(m);
    let mut shifted = Vec::new();
    for f in end_basis {
        let l = single_eigenvalue(f)?;
        shifted.push(f.add(&id.scale(&-&l)));
    }
    let len = id.flatten().len();
    let mut j = Span::untracked(field, len);
    let mut gens = Vec::new();
    for s in &shifted {
        if j.insert(&s.flatten()) {
            gens.push(s.clone());
        }
    }
    if j.dim() + 1 != end_basis.len() {
        return None;
    }
    for a in &gens {
        for b in &gens {
            if !j.contains(&a.then(b).flatten()) {
                return None;
            }
        }
    }
    // J is closed under products; its powers must vanish
    let mut power = gens.clone();
    for _ in 0..=m.dim() {
        if power.is_empty() {
            return Some(gens);
        }
        let mut next = Span::untracked(field, len);
        let mut next_maps = Vec::new();
        for p in &power {
            for g in &gens {
                let q = p.then(g);
                if !q.is_zero() && next.insert(&q.flatten()) {
                    next_maps.push(q);
                }
            }
        }
        power = next_maps;
    }
    power.is_empty().then_some(gens)
}

/// Fitting split along `g - c`: `(ker, im)` of its stable power, if both are nonzero.
fn fitting_split(m: &Module, g: &ModuleMap, c: &Scalar) -> Option<(Graded, Graded)> {
    let field = m.field();
    let n = m.dim();
    let mut ker: Graded = Vec::new();
    let mut im: Graded = Vec::new();
    let mut rank = 0;
    for b in g.blocks() {
        let h = b.sub(&Mat::identity(field, b.rows()).scale(c));
        let hp = h.pow(b.rows().max(1));
        let rs = hp.row_space();
        rank += rs.len();
        im.push(rs);
        ker.push(hp.left_kernel_vectors());
    }
    (rank > 0 && rank < n).then_some((ker, im))
}

fn candidate_split(m: &Module, g: &ModuleMap) -> Option<(Graded, Graded)> {
    let mut eigen: Vec<Scalar> = Vec::new();
    for b in g.blocks() {
        if b.rows() == 0 {
            continue;
        }
        for e in eigenvalues_in_field(b)? {
            if !eigen.contains(&e) {
                eigen.push(e);
            }
        }
    }
    eigen.iter().find_map(|c| fitting_split(m, g, c))
}

fn random_scalar(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        Field::Rational => field.from_i64(rng.gen_range(-7..=7)),
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
    }
}

/// Finds a nontrivial Fitting split of `m`, or certifies that `m` is
/// indecomposable (`Ok(None)`).
fn find_split(m: &Module) -> Result<Option<(Graded, Graded)>> {
    let basis = hom_basis_unchecked(m, m);
    if is_split_local(m, &basis) {
        return Ok(None);
    }
    let field = m.field();
    let k = basis.len();
    for g in &basis {
        if let Some(s) = candidate_split(m, g) {
            return Ok(Some(s));
        }
    }
    let one = field.one();
    for i in 0..k {
        for j in i + 1..k {
            for sign in [one.clone(), -&one] {
                let g = basis[i].add(&basis[j].scale(&sign));
                if let Some(s) = candidate_split(m, &g) {
                    return Ok(Some(s));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001 ^ (m.dim() as u64));
    for _ in 0..RANDOM_TRIES {
        let coeffs: Vec<Scalar> = (0..k).map(|_| random_scalar(field, &mut rng)).collect();
        let g = ModuleMap::linear_combination(m, m, &basis, &coeffs);
        if let Some(s) = candidate_split(m, &g) {
            return Ok(Some(s));
        }
    }
    Err(Error::CannotCertify(format!(
        "no splitting endomorphism and no locality certificate for a module of dimension vector {:?}",
        m.dims()
    )))
}

fn decompose_into(m: &Module, incl: ModuleMap, out: &mut Vec<(Module, ModuleMap)>) -> Result<()> {
    if m.dim() == 0 {
        return Ok(());
    }
    match find_split(m)? {
        None => out.push((m.clone(), incl)),
        Some((ker, im)) => {
            for part in [ker, im] {
                let (sub, i) = submodule(m, &part);
                decompose_into(&sub, i.then(&incl), out)?;
            }
        }
    }
    Ok(())
}

/// Krull–Schmidt decomposition by recursive Fitting splitting.
pub fn decompose(m: &Module) -> Result<Vec<Module>> {
    Ok(decompose_with_maps(m)?.summands)
}

pub fn decompose_with_maps(m: &Module) -> Result<Decomposition> {
    let mut parts = Vec::new();
    decompose_into(m, ModuleMap::identity(m), &mut parts)?;
    let field = m.field();
    let nv = m.dims().len();
    // per vertex, the stacked inclusion blocks form an invertible matrix
    let mut projections: Vec<Vec<Mat>> = vec![Vec::new(); parts.len()];
    for v in 0..nv {
        let rows: Vec<Vec<Scalar>> = parts.iter().flat_map(|(_, i)| i.block(v).to_rows()).collect();
        let s = Mat::from_rows(field, m.dim_at(v), rows);
        let inv = s.inverse().expect("summands span the module");
        let mut col = 0;
        for (a, (x, _)) in parts.iter().enumerate() {
            let d = x.dim_at(v);
            let mut blk = Mat::zeros(field, m.dim_at(v), d);
            for r in 0..m.dim_at(v) {
                for c in 0..d {
                    blk.set(r, c, inv.get(r, col + c).clone());
                }
            }
            projections[a].push(blk);
            col += d;
        }
    }
    let projections = parts.iter().zip(projections).map(|((x, _), b)| ModuleMap::from_raw(m, x, b)).collect();
    let (summands, inclusions) = parts.into_iter().unzip();
    Ok(Decomposition { summands, inclusions, projections })
}

pub fn is_indecomposable(m: &Module) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(false);
    }
    Ok(find_split(m)?.is_none())
}

/// Isomorphism test for indecomposables: `x ≅ y` iff some composite of
/// basis maps `x → y → x` is invertible.
pub fn indecomposables_isomorphic(x: &Module, y: &Module) -> bool {
    if x.dims() != y.dims() {
        return false;
    }
    if x == y {
        return true;
    }
    let fwd = hom_basis_unchecked(x, y);
    if fwd.is_empty() {
        return false;
    }
    for f in &fwd {
        if f.is_iso() {
            return true;
        }
    }
    let back = hom_basis_unchecked(y, x);
    fwd.iter().any(|f| back.iter().any(|g| f.then(g).is_iso()))
}

/// Matches two lists of indecomposables up to isomorphism and order.
pub fn same_multiset(a: &[Module], b: &[Module]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for x in a {
        for (j, y) in b.iter().enumerate() {
            if !used[j] && indecomposables_isomorphic(x, y) {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Whether some element of `Hom(m, n)` is invertible.
///
/// Screens invariants, sweeps basis maps and deterministic combinations,
/// then falls back on matching Krull–Schmidt decompositions.
pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    m.check_owner(n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m == n {
        return Ok(true);
    }
    let fwd = hom_basis_unchecked(m, n);
    let back = hom_basis_unchecked(n, m);
    if fwd.len() != back.len() || fwd.is_empty() {
        return Ok(false);
    }
    let end_m = hom_basis_unchecked(m, m).len();
    let end_n = hom_basis_unchecked(n, n).len();
    if end_m != end_n || end_m != fwd.len() {
        return Ok(false);
    }
    if fwd.iter().any(ModuleMap::is_iso) {
        return Ok(true);
    }
    let field = m.field();
    let k = fwd.len();
    let one = field.one();
    for i in 0..k {
        for j in i + 1..k {
            for sign in [one.clone(), -&one] {
                if fwd[i].add(&fwd[j].scale(&sign)).is_iso() {
                    return Ok(true);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x150_0001);
    for _ in 0..16 {
        let coeffs: Vec<Scalar> = (0..k).map(|_| random_scalar(field, &mut rng)).collect();
        if ModuleMap::linear_combination(m, n, &fwd, &coeffs).is_iso() {
            return Ok(true);
        }
    }
    Ok(same_multiset(&decompose(m)?, &decompose(n)?))
}

/// Isomorphism classes of indecomposable summands with multiplicities.
pub fn summand_classes(m: &Module) -> Result<Vec<(Module, usize)>> {
    let mut classes: Vec<(Module, usize)> = Vec::new();
    for x in decompose(m)? {
        match classes.iter_mut().find(|(y, _)| indecomposables_isomorphic(&x, y)) {
            Some(entry) => entry.1 += 1,
            None => classes.push((x, 1)),
        }
    }
    Ok(classes)
}

/// `|m|`: the number of pairwise non-isomorphic indecomposable summands.
pub fn num_distinct_summands(m: &Module) -> Result<usize> {
    Ok(summand_classes(m)?.len())
}

/// Removes repeated isomorphism classes from a list of indecomposables.
pub fn distinct_up_to_iso(mods: &[Module]) -> Vec<Module> {
    let mut out: Vec<Module> = Vec::new();
    for x in mods {
        if !out.iter().any(|y| indecomposables_isomorphic(x, y)) {
            out.push(x.clone());
        }
    }
    out
}
