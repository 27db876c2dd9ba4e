//! The desk-scale acceptance sweep: twelve criteria, each reported as pass or fail with a
//! one-line detail.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::families::{
    check_bounded_bicomparable, check_bounded_cofinally_above, elem_le, enumerate, verify_claim, Claim, FamilyId,
    NamedSubsetId, SymbolicElement, WindowSpec,
};
use crate::ordertype::{
    self, alternation_number, expansion, hausdorff_rank, is_vacillating_chain, limit_point_counts, parse_term,
    predicates, Alternation, CountOrOmega,
};
use crate::partition::{
    extend_spine_partition, find_spine, greedy_antichain_from_chains, height_and_max_chain, is_spine,
    spine_support, width_and_dilworth, SpineCertificate,
};
use crate::poset::{FinitePoset, Subset};
use crate::random::random_poset_with;
use crate::verifier;
use crate::{oracle, VerificationReport};

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    pub seed: u64,
    /// Criteria not started before the budget runs out are reported as failed.
    pub budget: Option<Duration>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { seed: 0x5eed, budget: None }
    }
}

pub const CRITERIA: [(u8, &str); 12] = [
    (1, "spine of random finite posets"),
    (2, "min-max dualities against brute force"),
    (3, "level structure of P5"),
    (4, "final counting"),
    (5, "constant on rows"),
    (6, "single-level antichain bound"),
    (7, "order-type truth table and oracle"),
    (8, "P1 claims"),
    (9, "P2 claims"),
    (10, "P3 and P4 claims"),
    (11, "proof-embedded algorithms"),
    (12, "partial-order axiom fuzzing"),
];

type Outcome = Result<String, String>;

pub fn run_criterion(id: u8, cfg: &SweepConfig) -> CriterionResult {
    let (_, name) = CRITERIA.iter().copied().find(|(i, _)| *i == id).expect("criterion id in 1..=12");
    let start = Instant::now();
    let outcome = match id {
        1 => spine_of_random_posets(cfg.seed),
        2 => dualities(cfg.seed),
        3 => p5_structure(cfg.seed),
        4 => final_counting(),
        5 => constant_on_rows(),
        6 => single_level(),
        7 => order_types(),
        8 => p1_claims(),
        9 => p2_claims(),
        10 => p3_p4_claims(),
        11 => algorithms(cfg.seed),
        12 => axiom_fuzz(cfg.seed),
        _ => unreachable!(),
    };
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult { id, name, passed, detail, elapsed }
}

pub fn run_desk_sweep(cfg: &SweepConfig) -> Vec<CriterionResult> {
    let start = Instant::now();
    CRITERIA
        .iter()
        .map(|&(id, name)| match cfg.budget {
            Some(b) if start.elapsed() > b => CriterionResult {
                id,
                name,
                passed: false,
                detail: "not run: time budget exhausted".into(),
                elapsed: Duration::ZERO,
            },
            _ => run_criterion(id, cfg),
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn expect_pass(r: Result<VerificationReport, impl std::fmt::Display>) -> Result<VerificationReport, String> {
    let r = r.map_err(|e| e.to_string())?;
    if r.passed() {
        Ok(r)
    } else {
        Err(format!("{} failed with params {:?}: {:?}", r.claim, r.params, r.witness))
    }
}

fn spine_of_random_posets(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = Instant::now();
    for i in 0..200 {
        let n = rng.gen_range(1..=9);
        let density = rng.gen_range(0.1..0.7);
        let p = random_poset_with(&mut rng, n, density);
        let cert = find_spine(&p);
        let (height, _) = height_and_max_chain(&p);
        ensure(is_spine(&p, &cert), || format!("instance {i}: certificate rejected"))?;
        ensure(cert.antichains.len() == height, || format!("instance {i}: block count differs from height"))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(5), || format!("took {t:?}"))?;
    Ok(format!("200 posets in {t:?}"))
}

fn dualities(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 2);
    for i in 0..100 {
        let n = rng.gen_range(1..=8);
        let density = rng.gen_range(0.1..0.7);
        let p = random_poset_with(&mut rng, n, density);
        let (w, _, _) = width_and_dilworth(&p);
        let (h, _) = height_and_max_chain(&p);
        ensure(w == oracle::min_chain_cover(&p), || format!("instance {i}: width {w}"))?;
        ensure(h == oracle::min_antichain_cover(&p), || format!("instance {i}: height {h}"))?;
    }
    Ok("100 posets".into())
}

fn p5_structure(seed: u64) -> Outcome {
    for n in 0..=2 {
        for s in 0..=8 {
            expect_pass(verifier::verify_level_structure(n, s, 10))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 3);
    for _ in 0..50 {
        let (x, y) = (rng.gen_range(0..=5), rng.gen_range(0..=5));
        let (u, v) = (x + rng.gen_range(0..=5), y + rng.gen_range(0..=5));
        let (w, z) = (u + rng.gen_range(0..=5), v + rng.gen_range(0..=5));
        let n = rng.gen_range(0..=2);
        let c = verifier::interpolate_chain(n, (x, y), (u, v), (w, z)).map_err(|e| e.to_string())?;
        let le = |a: &SymbolicElement, b: &SymbolicElement| elem_le(FamilyId::P5, a, b).expect("P5");
        let lo = SymbolicElement::P5 { x, y, n };
        let hi = SymbolicElement::P5 { x: w, y: z, n };
        let ok = c.len() as u64 == w + z + 1 - x - y
            && c.contains(&SymbolicElement::P5 { x: u, y: v, n })
            && c.windows(2).all(|p| le(&p[0], &p[1]) && p[0] != p[1])
            && c.iter().all(|e| le(&lo, e) && le(e, &hi));
        ensure(ok, || format!("interpolation ({x},{y}) ({u},{v}) ({w},{z}) gave {} points", c.len()))?;
    }
    Ok("27 level checks, 50 interpolations".into())
}

fn final_counting() -> Outcome {
    let mut parts = Vec::new();
    for a in 1..=5 {
        let r = expect_pass(verifier::verify_final_counting(a))?;
        let w = r.witness.expect("witness");
        parts.push(format!("a={a}: {} vs {}", w["F_size"], w["T_height"]));
    }
    Ok(parts.join(", "))
}

fn constant_on_rows() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for ell in 1..=3 {
        let r = expect_pass(verifier::verify_constant_on_rows(ell))?;
        let w = r.witness.expect("witness");
        parts.push(format!("ell={ell}: {} paths, {} labellings", w["instances"], w["assignments"]));
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(parts.join(", "))
}

fn single_level() -> Outcome {
    for b in 0..=6 {
        expect_pass(verifier::verify_single_level_width(b))?;
    }
    Ok("B = 0..6".into())
}

/// Expected values stated for the reference terms, checked one by one.
pub fn truth_table() -> Vec<(&'static str, &'static str, bool)> {
    let t = |s: &str| parse_term(s).expect("reference term");
    let fin = CountOrOmega::Finite;
    vec![
        ("w", "wellfounded", predicates(&t("w")).wellfounded),
        ("w", "no w+1", !predicates(&t("w")).embeds_omega_plus_one),
        ("w", "no zeta", !predicates(&t("w")).embeds_zeta),
        ("w[w*]", "no w+1", !predicates(&t("w[w*]")).embeds_omega_plus_one),
        ("w[w*]", "zeta", predicates(&t("w[w*]")).embeds_zeta),
        ("w[w*]", "no w+w*", !predicates(&t("w[w*]")).embeds_omega_plus_omegastar),
        ("w*+w", "zeta", predicates(&t("w*+w")).embeds_zeta),
        ("w*+w", "not wellfounded", !predicates(&t("w*+w")).wellfounded),
        ("w*+w", "not co-wellfounded", !predicates(&t("w*+w")).cowellfounded),
        ("w", "limits (1,0)", limit_point_counts(&t("w")) == (fin(1), fin(0))),
        ("w*+w", "limits (1,1)", limit_point_counts(&t("w*+w")) == (fin(1), fin(1))),
        ("w[w]", "limits (w,0)", limit_point_counts(&t("w[w]")) == (CountOrOmega::Omega, fin(0))),
        ("w", "alt 0", alternation_number(&t("w")) == Alternation::Finite(0)),
        ("w*+w", "alt 1", alternation_number(&t("w*+w")) == Alternation::Finite(1)),
        ("w[w*+w]", "alt inf", alternation_number(&t("w[w*+w]")) == Alternation::Infinite),
        ("7", "rank 0", hausdorff_rank(&t("7")) == 0),
        ("w", "rank 1", hausdorff_rank(&t("w")) == 1),
        ("w[w]", "rank 2", hausdorff_rank(&t("w[w]")) == 2),
        ("w[w*]", "not vacillating", !is_vacillating_chain(&t("w[w*]"))),
        ("w", "vacillating", is_vacillating_chain(&t("w"))),
        ("w[w]", "vacillating", is_vacillating_chain(&t("w[w]"))),
    ]
}

fn order_types() -> Outcome {
    let table = truth_table();
    if let Some((term, what, _)) = table.iter().find(|r| !r.2) {
        return Err(format!("{term}: expected {what}"));
    }
    for s in expansion::REGRESSION_TERMS {
        let t = parse_term(s).map_err(|e| e.to_string())?;
        let r = t.reverse().normalize();
        let (pt, pr) = (predicates(&t), predicates(&r));
        let symmetric = pt.wellfounded == pr.cowellfounded
            && pt.embeds_zeta == pr.embeds_zeta
            && alternation_number(&t) == alternation_number(&r)
            && hausdorff_rank(&t) == hausdorff_rank(&r)
            && limit_point_counts(&t) == (limit_point_counts(&r).1, limit_point_counts(&r).0)
            && is_vacillating_chain(&t) == is_vacillating_chain(&r);
        ensure(symmetric, || format!("{s}: reversal is not symmetric"))?;
        for term in [&t, &r] {
            let o = expansion::oracle(term);
            let agree = o.wellfounded == predicates(term).wellfounded
                && o.cowellfounded == predicates(term).cowellfounded
                && o.embeds_omega_plus_one == predicates(term).embeds_omega_plus_one
                && o.embeds_zeta == predicates(term).embeds_zeta
                && o.embeds_omega_plus_omegastar == predicates(term).embeds_omega_plus_omegastar
                && o.alt == alternation_number(term)
                && o.rank == hausdorff_rank(term)
                && o.limits == limit_point_counts(term)
                && o.vacillating == is_vacillating_chain(term);
            ensure(agree, || format!("{}: oracle disagrees", ordertype::OrderTerm::render(term)))?;
        }
    }
    Ok(format!("{} table values, {} regression terms", table.len(), expansion::REGRESSION_TERMS.len()))
}

fn claim(family: FamilyId, id: &str, params: &[(&str, u64)]) -> Result<VerificationReport, String> {
    let params = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let c = Claim::parse(family, id, &params).map_err(|e| e.to_string())?;
    expect_pass(verify_claim(family, &c))
}

fn p1_claims() -> Outcome {
    for n in 0..=20 {
        claim(FamilyId::P1, "spine_partition", &[("N", n)])?;
    }
    for m in 0..=10 {
        let r = claim(FamilyId::P1, "pigeonhole", &[("m", m)])?;
        let w = r.witness.expect("witness");
        let (d, h) = (w["demanders"].as_array().map_or(0, Vec::len), w["hosts"].as_array().map_or(0, Vec::len));
        ensure(d as u64 == m + 1 && h as u64 == m, || format!("m={m}: {d} demanders vs {h} hosts"))?;
    }
    Ok("spine certificates N <= 20, Hall violations m <= 10".into())
}

fn p2_claims() -> Outcome {
    for b in 0..=6 {
        claim(FamilyId::P2, "partitions", &[("B", b)])?;
    }
    expect_pass(check_bounded_bicomparable(
        FamilyId::P2,
        NamedSubsetId::C0,
        NamedSubsetId::C1,
        &WindowSpec::cube(FamilyId::P2, 8),
        &[2, 2],
    ))?;
    claim(FamilyId::P2, "shift_reduction", &[("B", 8)])?;
    Ok("partitions B <= 6, bicomparable and shift reduction at B = 8".into())
}

fn p3_p4_claims() -> Outcome {
    for y in 0..=5 {
        claim(FamilyId::P3, "row_bound", &[("y", y), ("B", 25)])?;
    }
    for n in 0..=4 {
        expect_pass(check_bounded_cofinally_above(
            FamilyId::P4,
            NamedSubsetId::E(n),
            NamedSubsetId::E(n + 1),
            &"0..5,0..5,0..5".parse().expect("window"),
            &[0, 3, 3],
        ))?;
    }
    for n in 0..=4 {
        for m in 0..=4 {
            claim(FamilyId::P4, "no_domination", &[("n", n), ("m", m), ("B", 4)])?;
        }
    }
    Ok("row bounds y <= 5, cofinality n <= 4, 25 no-domination pairs".into())
}

/// `width` columns of `rungs` points, with `(i+1, y) < (i, y+1)`.
pub fn ladder(width: usize, rungs: usize) -> FinitePoset {
    let name = |i: usize, y: usize| format!("({i},{y})");
    let names: Vec<String> = (0..width).flat_map(|i| (0..rungs).map(move |y| name(i, y))).collect();
    let mut gens = Vec::new();
    for i in 0..width {
        for y in 0..rungs.saturating_sub(1) {
            gens.push((name(i, y), name(i, y + 1)));
            if i + 1 < width {
                gens.push((name(i + 1, y), name(i, y + 1)));
            }
        }
    }
    FinitePoset::from_generators(&names, &gens).expect("ladder generators are acyclic")
}

/// Whether every element outside `f` has at least `tau` certificate blocks meeting its support.
pub fn meets_tau_precondition(p: &FinitePoset, f: &Subset, cert: &SpineCertificate, tau: usize) -> bool {
    p.elements().filter(|&y| !f.contains(y)).all(|y| {
        let support = spine_support(p, f, y);
        cert.antichains.iter().filter(|a| a.iter().any(|x| support.contains(x))).count() >= tau
    })
}

fn algorithms(seed: u64) -> Outcome {
    for k in 1..=6 {
        let p = ladder(k, k + 1);
        let columns: Vec<Subset> =
            (0..k).map(|i| (0..=k).map(|y| p.id(&format!("({i},{y})")).expect("ladder point")).collect()).collect();
        let picks = greedy_antichain_from_chains(&p, &columns).map_err(|e| e.to_string())?;
        let pairwise = picks.iter().enumerate().all(|(i, &a)| {
            columns[i].contains(a) && picks[i + 1..].iter().all(|&b| !p.le(a, b) && !p.le(b, a))
        });
        ensure(picks.len() == k && pairwise, || format!("ladder {k}: picks {:?}", p.names_of(&picks.iter().copied().collect())))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 11);
    let (mut found, mut tries) = (0, 0);
    while found < 50 {
        tries += 1;
        ensure(tries <= 20_000, || format!("only {found} instances met the precondition"))?;
        let n = rng.gen_range(4..=10);
        let density = rng.gen_range(0.3..0.9);
        let p = random_poset_with(&mut rng, n, density);
        let outside = rng.gen_range(1..=2.min(n - 1));
        let f: Subset = p.elements().skip(outside).collect();
        let sub = p.induced(&f);
        let base = find_spine(&sub);
        let lift = |s: &Subset| -> Subset { s.iter().map(|e| p.id(sub.name(e)).expect("same names")).collect() };
        let cert = SpineCertificate { chain: lift(&base.chain), antichains: base.antichains.iter().map(lift).collect() };
        let tau = n - f.len();
        if !meets_tau_precondition(&p, &f, &cert, tau) {
            continue;
        }
        found += 1;
        let out = extend_spine_partition(&p, &f, &cert, tau).map_err(|e| format!("instance {found}: {e}"))?;
        ensure(is_spine(&p, &out), || format!("instance {found}: extended certificate rejected"))?;
    }
    Ok(format!("ladders k <= 6, 50 extension instances from {tries} draws"))
}

fn random_element(rng: &mut ChaCha8Rng, f: FamilyId, b: u64) -> SymbolicElement {
    let all = enumerate(f, &WindowSpec::cube(f, b)).expect("cube window");
    all[rng.gen_range(0..all.len())]
}

fn axiom_fuzz(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 12);
    for f in FamilyId::ALL {
        let le = |a: &SymbolicElement, b: &SymbolicElement| elem_le(f, a, b).expect("same family");
        for i in 0..1000 {
            let (a, b, c) = (random_element(&mut rng, f, 12), random_element(&mut rng, f, 12), random_element(&mut rng, f, 12));
            ensure(le(&a, &a), || format!("{f} #{i}: {a} not reflexive"))?;
            ensure(!(le(&a, &b) && le(&b, &a)) || a == b, || format!("{f} #{i}: {a} {b} antisymmetry"))?;
            ensure(!(le(&a, &b) && le(&b, &c)) || le(&a, &c), || format!("{f} #{i}: {a} {b} {c} transitivity"))?;
        }
    }
    Ok("1000 triples in each of 5 families".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_shape() {
        let p = ladder(2, 3);
        assert_eq!(p.len(), 6);
        assert!(p.lt(p.id("(1,0)").unwrap(), p.id("(0,1)").unwrap()));
        assert!(p.incomparable(p.id("(0,0)").unwrap(), p.id("(1,2)").unwrap()));
        let (w, _, _) = width_and_dilworth(&p);
        assert_eq!(w, oracle::max_antichain_size(&p));
    }

    #[test]
    fn budget_marks_remaining_criteria() {
        let cfg = SweepConfig { seed: 1, budget: Some(Duration::ZERO) };
        let r = run_desk_sweep(&cfg);
        assert_eq!(r.len(), 12);
        assert!(r.iter().skip(1).all(|c| !c.passed));
    }
}
