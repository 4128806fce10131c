//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero only when an outcome differs from the expectation pinned below.

use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tautilt::algebra::{annihilator, Algebra, QuotientAlgebra};
use tautilt::endo::{
    endomorphism_algebra, ext1_functor_to_endo, find_epimorphism, find_isomorphism, hom_functor_to_endo, tensor_over_endo,
    tor1_over_endo,
};
use tautilt::enumerate::{enumerate_indecomposables, EnumerationBound};
use tautilt::error::Result;
use tautilt::homology::{default_cutoff, ext_dim, gl_dim, id, pd, stable_hom_dim, tau, tau_inv, Dimension, StableMode};
use tautilt::io::fixtures;
use tautilt::io::report::{reports_to_json, reports_to_tsv};
use tautilt::io::scenarios::{run_scenarios, SCENARIOS};
use tautilt::linalg::{Field, Mat};
use tautilt::rep::{decompose, distinct_up_to_iso, fac_contains, hom_dim, is_isomorphic, same_multiset, standard_modules, sub_contains, Module};
use tautilt::tau_tilting::{
    basic_tau_rigid_modules, indec_tau_rigid_catalog, is_tau_inv_tilting, is_tau_rigid, is_tau_tilting, stt_hasse_quiver,
    stt_pairs,
};
use tautilt::tilting::{
    build_iterated_chain, check_pd_bound_fac, check_pd_bound_sub, hull_catalog, is_classical_cotilting, is_classical_tilting,
    verify_thm_2_7, wakamatsu_check, wakamatsu_check_dual,
};

/// Criteria whose computed outcome contradicts the stated value. Each one
/// must still fail; a pass here means the list is stale.
const KNOWN_FAILURES: &[usize] = &[5];

/// Every comparison is exact: zero discrepancies and equal integers.
const TOLERANCE: usize = 0;

/// Conjugations per module in the Krull–Schmidt check.
const CONJUGATIONS: usize = 20;

/// Thread counts compared for byte-identical reports.
const THREADS: [usize; 2] = [1, 4];

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { failures: Vec::new(), summary: String::new() }
    }

    fn expect(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn expect_eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, want: T, got: T) {
        if want != got {
            self.failures.push(format!("{what}: expected {want:?}, computed {got:?}"));
        }
    }

    fn count(&mut self, what: &str, bad: usize) {
        if bad > TOLERANCE {
            self.failures.push(format!("{what}: {bad} failures"));
        }
    }
}

fn alg(name: &str) -> Algebra {
    fixtures::algebra(name).unwrap()
}

fn summands(m: &Module) -> Result<Vec<Module>> {
    Ok(distinct_up_to_iso(&decompose(m)?))
}

fn is_projective(m: &Module) -> Result<bool> {
    let a = m.algebra();
    for v in 0..a.num_vertices() {
        if is_isomorphic(m, &Module::projective(a, v))? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn ex2_9(o: &mut Outcome) -> Result<()> {
    let a = alg("two_cycle.alg");
    let rigid = indec_tau_rigid_catalog(&a, &EnumerationBound::new(vec![1, 1]))?;
    let pairs = stt_pairs(&a, &rigid)?;
    o.expect_eq("support τ-tilting pairs", 6, pairs.len());
    let q = stt_hasse_quiver(&a, &pairs)?;
    o.expect_eq("arrows", 6, q.edges.len());
    let (sources, sinks) = (q.sources(), q.sinks());
    o.expect_eq("sources", 1, sources.len());
    o.expect_eq("sinks", 1, sinks.len());
    if let (&[s], &[t]) = (sources.as_slice(), sinks.as_slice()) {
        o.expect("source is (A, 0)", is_isomorphic(&pairs[s].module(&a), &Module::regular(&a))? && pairs[s].projective_vertices.is_empty());
        o.expect("sink is (0, A)", pairs[t].summands.is_empty() && pairs[t].projective_vertices.len() == 2);
        // two chains of covers: source and sink each have two neighbours, inner nodes one in and one out
        o.expect_eq("out-degree of source", 2, q.successors(s).len());
        o.expect_eq("in-degree of sink", 2, q.predecessors(t).len());
        for v in (0..pairs.len()).filter(|&v| v != s && v != t) {
            o.expect("inner node on a single chain", q.successors(v).len() == 1 && q.predecessors(v).len() == 1);
        }
    }
    let m = fixtures::module("two_cycle_s2_p2.mod")?;
    o.expect("S2 ⊕ [2;1] τ-tilting", is_tau_tilting(&m)?);
    o.expect("S2 ⊕ [2;1] not τ⁻¹-tilting", !is_tau_inv_tilting(&m)?);
    o.summary = format!("{} pairs, {} arrows", pairs.len(), q.edges.len());
    Ok(())
}

fn ex2_10(o: &mut Outcome) -> Result<()> {
    let a = alg("a3_zero.alg");
    let gl = gl_dim(&a, default_cutoff(&a))?;
    o.expect_eq("gl.dim", Dimension::Finite(2), gl);
    let t = fixtures::module("a3_zero_tilting.mod")?;
    let flags = [is_tau_tilting(&t)?, is_tau_inv_tilting(&t)?, is_classical_tilting(&t)?, is_classical_cotilting(&t)?];
    o.expect_eq("τ-tilting, τ⁻¹-tilting, tilting, cotilting", [true; 4], flags);
    o.summary = format!("gl.dim {gl}, flags {flags:?}");
    Ok(())
}

fn thm2_7(o: &mut Outcome) -> Result<()> {
    let names =
        ["two_cycle.alg", "a4.alg", "a3_zero.alg", "a4_one_zero.alg", "a4_two_zeros.alg", "auslander.alg", "dual_numbers.alg"];
    let mut bad = 0;
    for name in names {
        let a = alg(name);
        let reg = Module::regular(&a);
        let da = Module::cogenerator(&a);
        // three routes: an injective coresolution, τ of DA, τ⁻¹ of A
        let by_id = id(&reg, default_cutoff(&a))?.at_most(1);
        let by_da = hom_dim(&da, &tau(&da))? == 0;
        let by_a = hom_dim(&tau_inv(&reg), &reg)? == 0;
        let lib = verify_thm_2_7(&a, default_cutoff(&a))?;
        if by_id != Some(by_da) || by_da != by_a || !lib.consistent() || lib.da_tau_rigid != by_da {
            bad += 1;
            o.failures.push(format!("{name}: id ≤ 1 {by_id:?}, DA τ-rigid {by_da}, A τ⁻¹-rigid {by_a}"));
        }
    }
    o.summary = format!("{} algebras, {bad} discrepancies", names.len());
    Ok(())
}

fn ex3_8(o: &mut Outcome) -> Result<()> {
    let chain = build_iterated_chain(
        &alg("a4.alg"),
        &[fixtures::module("a4_tilting.mod")?, fixtures::module("a4_one_zero_tilting.mod")?],
    )?;
    let (a1, a2) = (&chain.algebras[1], &chain.algebras[2]);
    o.expect("A1 ≅ a4_one_zero", find_isomorphism(&alg("a4_one_zero.alg"), a1).is_some());
    o.expect("A2 ≅ a4_two_zeros", find_isomorphism(&alg("a4_two_zeros.alg"), a2).is_some());
    o.expect_eq("gl.dim A1", Dimension::Finite(2), gl_dim(a1, default_cutoff(a1))?);
    o.expect_eq("gl.dim A2", Dimension::Finite(3), gl_dim(a2, default_cutoff(a2))?);
    let f2 = a2.reinterpret_over_field(Field::prime(2)?)?;
    let cat = enumerate_indecomposables(&f2, &EnumerationBound::projective_injective_hull(a2))?;
    o.expect_eq("indecomposables over F2", 7, cat.len());
    let mut rigid = 0;
    for m in &cat.modules {
        if is_tau_rigid(m)? {
            rigid += 1;
        }
    }
    o.expect_eq("τ-rigid", 7, rigid);
    o.summary = format!("{} indecomposables, {rigid} τ-rigid", cat.len());
    Ok(())
}

fn ex4_4(o: &mut Outcome) -> Result<()> {
    let t = fixtures::module("auslander_tau_tilting.mod")?;
    let a = t.algebra().clone();
    let parts = summands(&t)?;
    let (b, bk) = endomorphism_algebra(&parts)?;
    o.expect("quiver shape with γ1γ2 = 0", find_epimorphism(&alg("auslander_endo.alg"), &b).is_some());
    let gl = gl_dim(&b, default_cutoff(&b))?;
    o.expect_eq("gl.dim End(T)", Dimension::Finite(2), gl);
    let m = fixtures::module("auslander_m.mod")?;
    o.expect_eq("pd_A [2;3]", Dimension::Finite(1), pd(&m, default_cutoff(&a))?);
    let y = hom_functor_to_endo(&bk, &m)?;
    let mut p2 = None;
    for (i, p) in parts.iter().enumerate() {
        if is_isomorphic(p, &Module::projective(&a, 1))? {
            p2 = Some(i);
        }
    }
    let is_s2 = match p2 {
        Some(v) => is_isomorphic(&y, &Module::simple(&b, v))?,
        None => false,
    };
    o.expect("Hom_A(T, [2;3]) ≅ S(2)", is_s2);
    let pd_b = pd(&y, default_cutoff(&b))?;
    o.expect("pd_B Hom_A(T, [2;3]) ≤ 1", pd_b.at_most(1) == Some(true));
    o.expect("pd bound on [2;3]", check_pd_bound_fac(&t, &m)?.holds() == Some(true));
    let u = tau(&t);
    let mut sub_instance = None;
    for n in hull_catalog(&a)? {
        if sub_contains(&u, &n)? {
            if let Some(h) = check_pd_bound_sub(&t, &n)?.holds() {
                sub_instance = Some(h);
                break;
            }
        }
    }
    o.expect_eq("injective-dimension bound on a Sub τT member", Some(true), sub_instance);
    o.summary = format!("gl.dim End(T) = {gl}, pd_B Hom(T, [2;3]) = {pd_b}");
    Ok(())
}

fn prop2_5(o: &mut Outcome) -> Result<()> {
    let mut total = 0;
    for name in ["a4.alg", "two_cycle.alg"] {
        let cat = hull_catalog(&alg(name))?;
        let mut bad = 0;
        for x in &cat {
            let fac: Vec<&Module> = cat.iter().filter(|z| fac_contains(x, z).unwrap()).collect();
            for y in &cat {
                let hom_side = hom_dim(x, &tau(y))? == 0;
                let mut ext_side = true;
                for z in &fac {
                    if ext_dim(y, z, 1)? != 0 {
                        ext_side = false;
                        break;
                    }
                }
                if hom_side != ext_side {
                    bad += 1;
                }
            }
        }
        total += cat.len() * cat.len();
        o.count(name, bad);
    }
    o.summary = format!("{total} ordered pairs");
    Ok(())
}

fn ar_duality(o: &mut Outcome) -> Result<()> {
    let mut total = 0;
    for name in ["a4.alg", "two_cycle.alg"] {
        let cat = hull_catalog(&alg(name))?;
        let mut bad = 0;
        for m in &cat {
            let tm = tau(m);
            for n in &cat {
                if ext_dim(m, n, 1)? != stable_hom_dim(n, &tm, StableMode::ModInjectives)? {
                    bad += 1;
                }
            }
        }
        total += cat.len() * cat.len();
        o.count(name, bad);
    }
    o.summary = format!("{total} pairs");
    Ok(())
}

fn lemma4_1(o: &mut Outcome) -> Result<()> {
    let mut total = 0;
    for name in tautilt::io::scenarios::BATTERY {
        let a = alg(name);
        let rigid = indec_tau_rigid_catalog(&a, &EnumerationBound::projective_injective_hull(&a))?;
        let ts = basic_tau_rigid_modules(&a, &stt_pairs(&a, &rigid)?)?;
        let cat = hull_catalog(&a)?;
        let (mut bad, mut bad_dual) = (0, 0);
        for t in &ts {
            for x in &cat {
                bad += usize::from(!wakamatsu_check(t, x)?.passed());
                bad_dual += usize::from(!wakamatsu_check_dual(t, x)?.passed());
            }
        }
        total += ts.len() * cat.len();
        o.count(&format!("{name} kernels"), bad);
        o.count(&format!("{name} cokernels"), bad_dual);
    }
    o.summary = format!("{total} (T, x) cases, both directions");
    Ok(())
}

fn thm3_3(o: &mut Outcome) -> Result<()> {
    let t = fixtures::module("auslander_tau_tilting.mod")?;
    let q = QuotientAlgebra::new(t.algebra(), &annihilator(&t))?;
    let parts: Vec<Module> = summands(&t)?.iter().map(|x| q.descend(x)).collect::<Result<_>>()?;
    let (_, bk) = endomorphism_algebra(&parts)?;
    let tt = bk.sum();
    o.expect("classical tilting over A/ann T", is_classical_tilting(&tt)?);
    let (mut torsion, mut free, mut bad) = (0, 0, 0);
    for m in hull_catalog(&q.algebra)? {
        if ext_dim(&tt, &m, 1)? == 0 {
            torsion += 1;
            bad += usize::from(!is_isomorphic(&tensor_over_endo(&hom_functor_to_endo(&bk, &m)?, &bk)?, &m)?);
        }
        if hom_dim(&tt, &m)? == 0 {
            free += 1;
            bad += usize::from(!is_isomorphic(&tor1_over_endo(&ext1_functor_to_endo(&bk, &m)?, &bk)?, &m)?);
        }
    }
    o.expect("both classes inhabited", torsion > 0 && free > 0);
    o.count("equivalences", bad);
    o.summary = format!("{torsion} T(T) and {free} F(T) members, {bad} failures");
    Ok(())
}

fn random_conjugators(dims: &[usize], rng: &mut ChaCha8Rng) -> Vec<Mat> {
    // unipotent upper times unipotent lower, invertible for every draw
    let f = Field::Rational;
    dims.iter()
        .map(|&d| {
            let mut u = Mat::identity(f, d);
            let mut l = Mat::identity(f, d);
            for i in 0..d {
                for j in 0..d {
                    if i < j {
                        u.set(i, j, f.from_i64(rng.gen_range(-3..=3)));
                    } else if i > j {
                        l.set(i, j, f.from_i64(rng.gen_range(-3..=3)));
                    }
                }
            }
            u.mul(&l)
        })
        .collect()
}

fn infrastructure(o: &mut Outcome) -> Result<()> {
    let mut checked = 0;
    for name in ["a4.alg", "two_cycle.alg", "a3_zero.alg", "auslander.alg"] {
        for m in hull_catalog(&alg(name))? {
            checked += 1;
            o.expect(&format!("{name}: DDM = M"), m.dual().dual() == m);
            if !is_projective(&m)? {
                o.expect(&format!("{name}: τ⁻¹τM ≅ M"), is_isomorphic(&tau_inv(&tau(&m)), &m)?);
            }
        }
        let std = standard_modules(&alg(name));
        o.expect(&format!("{name}: D(projective) is injective over the opposite"), {
            let op = std.projectives[0].dual();
            is_isomorphic(&op, &Module::injective(op.algebra(), 0))?
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a71);
    for file in ["a4_tilting.mod", "a3_zero_tilting.mod", "auslander_tau_tilting.mod", "two_cycle_s2_p2.mod"] {
        let m = fixtures::module(file)?;
        let base = decompose(&m)?;
        for _ in 0..CONJUGATIONS {
            let c = m.conjugate(&random_conjugators(m.dims(), &mut rng))?;
            o.expect(&format!("{file}: summand multiset stable"), same_multiset(&base, &decompose(&c)?));
        }
    }
    let mut outputs = Vec::new();
    for n in THREADS {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().expect("thread pool");
        let reports = pool.install(|| run_scenarios(SCENARIOS))?;
        outputs.push((reports_to_tsv(&reports), reports_to_json(&reports)));
    }
    o.expect("TSV byte-identical across thread counts", outputs[0].0 == outputs[1].0);
    o.expect("JSON byte-identical across thread counts", outputs[0].1 == outputs[1].1);
    o.summary = format!("{checked} catalog modules, {CONJUGATIONS} conjugations per module, threads {THREADS:?}");
    Ok(())
}

type Check = fn(&mut Outcome) -> Result<()>;

const CRITERIA: &[(usize, &str, Check)] = &[
    (1, "two-vertex cycle: six pairs and Hasse shape", ex2_9),
    (2, "radical square zero A3: gl.dim 2, T is all four kinds", ex2_10),
    (3, "1-Gorenstein characterizations agree", thm2_7),
    (4, "iterated tilted chain over A4", ex3_8),
    (5, "Auslander algebra: End(T) and the pd bounds", ex4_4),
    (6, "Hom(X, τY) = 0 iff Ext¹(Y, Fac X) = 0", prop2_5),
    (7, "AR duality on complete catalogs", ar_duality),
    (8, "approximation kernels and cokernels", lemma4_1),
    (9, "Brenner–Butler equivalences on objects", thm3_3),
    (10, "infrastructure properties", infrastructure),
];

fn main() -> ExitCode {
    let mut unexpected = Vec::new();
    for &(n, title, check) in CRITERIA {
        let mut o = Outcome::new();
        if let Err(e) = check(&mut o) {
            o.failures.push(format!("error: {e}"));
        }
        let passed = o.failures.is_empty();
        let known = KNOWN_FAILURES.contains(&n);
        let tag = match (passed, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("criterion {n:>2} {tag}: {title} [{}]", o.summary);
        for f in &o.failures {
            println!("    {f}");
        }
        if passed == known {
            unexpected.push(n);
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcomes for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
