use super::resolution::{component_in_projective_sum, element_in_projective_sum, map_from_projectives, minimal_presentation, projective_sum};
use crate::rep::{cokernel, Module};

/// `Tr m`: cokernel of `Hom_A(P0, A) → Hom_A(P1, A)` for a minimal
/// presentation `P1 → P0 → m`, as a module over the opposite algebra.
///
/// If generator `k` of `P1` maps to `Σ_l y_kl` (with `y_kl ∈ e_{v_l} A e_{u_k}`),
/// the dual map sends generator `l` of `⊕ P^op_{v_l}` to `Σ_k y_kl` in copy `k`
/// of `⊕ P^op_{u_k}`.
pub fn transpose(m: &Module) -> Module {
    let alg = m.algebra();
    let op = alg.opposite();
    if m.is_zero() {
        return Module::zero(&op);
    }
    let pres = minimal_presentation(m);
    let (u, v) = (&pres.p1_vertices, &pres.p0_vertices);
    if u.is_empty() {
        return Module::zero(&op);
    }
    let f = &pres.p1_to_p0;
    // y[k][l]
    let y: Vec<Vec<Vec<_>>> = (0..u.len())
        .map(|k| {
            let gen = element_in_projective_sum(alg, u, k, &alg.unit_vector(alg.idempotent(u[k])));
            let img = f.apply(&gen);
            (0..v.len()).map(|l| component_in_projective_sum(alg, v, l, &img)).collect()
        })
        .collect();
    let target = projective_sum(&op, u);
    let images: Vec<_> = (0..v.len())
        .map(|l| {
            let mut x = vec![op.field().zero(); target.dim()];
            for (k, row) in y.iter().enumerate() {
                let part = element_in_projective_sum(&op, u, k, &row[l]);
                for (a, b) in x.iter_mut().zip(part) {
                    *a = &*a + &b;
                }
            }
            x
        })
        .collect();
    let dual_map = map_from_projectives(&target, v, &images);
    cokernel(&dual_map).0
}

/// `τ m = D Tr m`.
pub fn tau(m: &Module) -> Module {
    transpose(m).dual()
}

/// `τ⁻¹ m = Tr D m`.
pub fn tau_inv(m: &Module) -> Module {
    transpose(&m.dual())
}
