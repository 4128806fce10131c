use super::decompose::{decompose, distinct_up_to_iso};
use super::hom::hom_basis_unchecked;
use super::module::{Module, ModuleMap};
use crate::error::Result;
use crate::linalg::{Mat, Span};

/// A right `add t`-approximation of `x`: every map `t → x` factors through it.
///
/// Starts from the evaluation map over Hom bases of the indecomposable
/// summands of `t` and greedily discards summands that are not needed.
pub fn right_approximation(t: &Module, x: &Module) -> Result<ModuleMap> {
    t.check_owner(x)?;
    let classes = distinct_up_to_iso(&decompose(t)?);
    Ok(right_approximation_by(&classes, x))
}

/// Right approximation by the additive closure of the given indecomposables.
pub fn right_approximation_by(classes: &[Module], x: &Module) -> ModuleMap {
    let alg = x.algebra();
    let field = x.field();
    let targets: Vec<Vec<ModuleMap>> = classes.iter().map(|c| hom_basis_unchecked(c, x)).collect();
    let internal: Vec<Vec<Vec<ModuleMap>>> =
        classes.iter().map(|a| classes.iter().map(|b| hom_basis_unchecked(a, b)).collect()).collect();
    let candidates: Vec<(usize, ModuleMap)> =
        targets.iter().enumerate().flat_map(|(b, maps)| maps.iter().map(move |f| (b, f.clone()))).collect();
    let mut keep = vec![true; candidates.len()];

    let factors = |keep: &[bool]| -> bool {
        for (a, maps) in targets.iter().enumerate() {
            if maps.is_empty() {
                continue;
            }
            let len = maps[0].flatten().len();
            let mut span = Span::untracked(field, len);
            for (k, (b, phi)) in candidates.iter().enumerate() {
                if !keep[k] {
                    continue;
                }
                for h in &internal[a][*b] {
                    span.insert(&h.then(phi).flatten());
                }
            }
            if span.dim() < maps.len() {
                return false;
            }
        }
        true
    };

    for k in 0..candidates.len() {
        keep[k] = false;
        if !factors(&keep) {
            keep[k] = true;
        }
    }

    let chosen: Vec<&(usize, ModuleMap)> = candidates.iter().zip(&keep).filter(|(_, &k)| k).map(|(c, _)| c).collect();
    let parts: Vec<Module> = chosen.iter().map(|(b, _)| classes[*b].clone()).collect();
    let source = Module::direct_sum_of(alg, &parts);
    let blocks = (0..alg.num_vertices())
        .map(|v| {
            let rows = chosen.iter().flat_map(|(_, phi)| phi.block(v).to_rows()).collect();
            Mat::from_rows(field, x.dim_at(v), rows)
        })
        .collect();
    ModuleMap::from_raw(&source, x, blocks)
}

/// A left `add u`-approximation of `x`, obtained by duality from a right
/// approximation over the opposite algebra.
pub fn left_approximation(x: &Module, u: &Module) -> Result<ModuleMap> {
    x.check_owner(u)?;
    let g = right_approximation(&u.dual(), &x.dual())?;
    let dg = g.dual();
    let target = dg.target().clone();
    Ok(dg.with_ends(x, &target))
}

/// Left approximation by the additive closure of the given indecomposables.
pub fn left_approximation_by(x: &Module, classes: &[Module]) -> ModuleMap {
    let duals: Vec<Module> = classes.iter().map(Module::dual).collect();
    let g = right_approximation_by(&duals, &x.dual());
    let dg = g.dual();
    let target = dg.target().clone();
    dg.with_ends(x, &target)
}
