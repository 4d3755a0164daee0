//! Acceptance criteria. Each test writes one `PASS`/`FAIL` line to stderr
//! (bypassing the test harness capture) and then asserts.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::{Duration, Instant};

use wba_core::algebra::AlgebraElement;
use wba_core::arith::{parse_scalar, DeltaScalar};
use wba_core::diagram::{Generator, Shape, WalledDiagram};
use wba_core::fusion::identities::RationalSampler;
use wba_core::fusion::{
    default_h, fusion_idempotent, identity_checks, second_fusion_idempotent, FusionConfig, Variant,
};
use wba_core::tableaux::{enumerate_tableaux, WalledTableau};
use wba_core::verify::{
    check_defining_relations, check_exponents, check_jm_structure, check_proof_lemmas,
    check_system, interp_idempotent, laplacian_cases, SystemOptions,
};

const GOLDEN_RUNTIME: Duration = Duration::from_secs(1);
const LEMMA_RUNTIME: Duration = Duration::from_secs(30);
const IDENTITY_POINTS: usize = 20;
const MIN_NEGATIVE_CONTROLS: usize = 10;
const SEED: u64 = 20_240_601;

fn report(criterion: u32, title: &str, ok: bool, detail: &str) {
    let mark = if ok { "PASS" } else { "FAIL" };
    let mut err = std::io::stderr().lock();
    writeln!(err, "[acceptance {criterion}] {mark} {title}: {detail}").ok();
}

/// Shapes with `r, s ≥ 1` and `r + s ≤ max`.
fn fusion_shapes(max: usize) -> Vec<Shape> {
    let mut out = Vec::new();
    for n in 2..=max {
        for r in 1..n {
            out.push(Shape::new(r, n - r));
        }
    }
    out
}

fn golden() -> AlgebraElement {
    let shape = Shape::new(2, 2);
    let g = |x| AlgebraElement::generator(shape, x).unwrap();
    let left = &AlgebraElement::one(shape) - &g(Generator::S(1));
    let middle =
        &(&(&g(Generator::D) * &g(Generator::S(1))) * &g(Generator::S(3))) * &g(Generator::D);
    (&(&left * &middle) * &left).scale(&parse_scalar("1/(2*d*(d-1))").unwrap())
}

#[test]
fn criterion_1_golden_idempotent() {
    let start = Instant::now();
    let shape = Shape::new(2, 2);
    let t = WalledTableau::parse("L+1,1;L+2,1;L-2,1;L-1,1", shape).unwrap();
    let expected_contents: Vec<DeltaScalar> = [0, -1, 1, 0]
        .iter()
        .map(|&c| DeltaScalar::from_int(c))
        .collect();
    let h = default_h();
    let results = [
        (
            "first",
            fusion_idempotent(&t, &FusionConfig::first()).unwrap(),
        ),
        (
            "second/fwd",
            second_fusion_idempotent(&t, Variant::Forward, &h).unwrap(),
        ),
        (
            "second/mirror",
            second_fusion_idempotent(&t, Variant::Mirror, &h).unwrap(),
        ),
        ("interp", interp_idempotent(&t).unwrap()),
    ];
    let elapsed = start.elapsed();
    let want = golden();
    let mismatched: Vec<&str> = results
        .iter()
        .filter(|(_, e)| *e != want)
        .map(|(n, _)| *n)
        .collect();
    let ok = t.contents() == expected_contents && mismatched.is_empty() && elapsed < GOLDEN_RUNTIME;
    report(
        1,
        "golden idempotent of (2,2)",
        ok,
        &format!("mismatches {mismatched:?}, {elapsed:?} (limit {GOLDEN_RUNTIME:?})"),
    );
    assert!(ok);
}

fn system_line(shapes: &[Shape]) -> (bool, String) {
    let mut detail = Vec::new();
    let mut ok = true;
    for &shape in shapes {
        let r = check_system(shape, &SystemOptions::minimal()).unwrap();
        let spectra = r
            .tableaux
            .iter()
            .all(|c| c.idempotent && c.jm_spectrum && c.error.is_none());
        let pass = spectra && r.orthogonality_failures.is_empty() && r.complete;
        ok &= pass;
        detail.push(format!(
            "{}:{}{}",
            shape,
            r.tableau_count,
            if pass { "" } else { "!" }
        ));
    }
    (ok, detail.join(" "))
}

#[test]
fn criterion_2_complete_systems() {
    let start = Instant::now();
    let (ok, detail) = system_line(&fusion_shapes(5));
    report(
        2,
        "complete orthogonal systems, r+s <= 5",
        ok,
        &format!("{detail} in {:?}", start.elapsed()),
    );
    assert!(ok);
}

#[test]
fn criterion_2_complete_system_3_3() {
    let start = Instant::now();
    let (ok, detail) = system_line(&[Shape::new(3, 3)]);
    report(
        2,
        "complete orthogonal system, (3,3)",
        ok,
        &format!("{detail} in {:?}", start.elapsed()),
    );
    assert!(ok);
}

#[test]
fn criterion_3_dimension_identity() {
    let mut ok = true;
    let mut bad = Vec::new();
    for n in 0..=6usize {
        let factorial: u64 = (1..=n as u64).product();
        for r in 0..=n {
            let shape = Shape::new(r, n - r);
            let diagrams = WalledDiagram::all(shape).unwrap().count() as u64;
            let mut per_final: BTreeMap<String, u64> = BTreeMap::new();
            for t in enumerate_tableaux(shape, None) {
                *per_final
                    .entry(t.final_bipartition().to_string())
                    .or_default() += 1;
            }
            let squares: u64 = per_final.values().map(|m| m * m).sum();
            if diagrams != factorial || squares != factorial {
                ok = false;
                bad.push(format!("{shape}: {diagrams} diagrams, {squares} squared"));
            }
        }
    }
    let mut mult: Vec<u64> = {
        let mut per_final: BTreeMap<String, u64> = BTreeMap::new();
        for t in enumerate_tableaux(Shape::new(2, 2), None) {
            *per_final
                .entry(t.final_bipartition().to_string())
                .or_default() += 1;
        }
        per_final.values().copied().collect()
    };
    let square_sum: u64 = mult.iter().map(|m| m * m).sum();
    mult.sort_unstable();
    ok &= mult == vec![1, 1, 1, 1, 2, 4] && square_sum == 24;
    report(
        3,
        "dimension identity r+s <= 6",
        ok,
        &format!("(2,2) multiplicities {mult:?} squared sum {square_sum}; failures {bad:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_4_two_procedures_agree() {
    let mut sampler = RationalSampler::new(SEED);
    let mut hs = vec![default_h()];
    hs.extend((0..3).map(|_| sampler.generic_h()));
    let opts = SystemOptions {
        second_h: hs.clone(),
        mirror: true,
        literal: true,
        threads: 1,
    };
    let mut ok = true;
    let mut count = 0;
    let mut bad = Vec::new();
    for shape in fusion_shapes(4) {
        let r = check_system(shape, &opts).unwrap();
        for c in &r.tableaux {
            count += 1;
            let agree = c.error.is_none()
                && c.matches_interp
                && c.matches_second == Some(true)
                && c.matches_mirror == Some(true)
                && c.matches_literal == Some(true);
            if !agree {
                ok = false;
                bad.push(format!("{shape} {}", c.tableau));
            }
        }
    }
    let h_text: Vec<String> = hs.iter().map(ToString::to_string).collect();
    report(
        4,
        "first, second (both variants) and interpolation agree, r+s <= 4",
        ok,
        &format!("{count} tableaux, h in {h_text:?}; failures {bad:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_5_exponent_calculus() {
    let mut ok = true;
    let (mut tableaux, mut controls, mut control_tableaux) = (0, 0, 0);
    let mut bad = Vec::new();
    for shape in fusion_shapes(5) {
        let r = check_exponents(shape).unwrap();
        tableaux += r.tableaux;
        controls += r.negative_controls;
        control_tableaux += r.negative_control_tableaux;
        if !r.passed() {
            ok = false;
            bad.push(format!("{r:?}"));
        }
    }
    let laps: Vec<i64> = laplacian_cases().iter().map(|c| c.laplacian).collect();
    ok &= control_tableaux >= MIN_NEGATIVE_CONTROLS && laps == vec![-2, 0, -1];
    report(
        5,
        "exponent calculus r+s <= 5",
        ok,
        &format!(
            "{tableaux} tableaux, {controls} negative controls over {control_tableaux} tableaux \
             (need {MIN_NEGATIVE_CONTROLS}), laplacian cases {laps:?}; failures {bad:?}"
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_6_identity_suite() {
    let mut ok = true;
    let mut detail = Vec::new();
    for shape in [Shape::new(2, 2), Shape::new(2, 3)] {
        for res in identity_checks(shape, SEED, IDENTITY_POINTS).unwrap() {
            if !res.passed() {
                ok = false;
                detail.push(format!("{shape} {}: {:?}", res.name, res.failures));
            }
        }
    }
    // (2,3) has index triples for every identity
    let exercised: Vec<(String, usize)> = identity_checks(Shape::new(2, 3), SEED, IDENTITY_POINTS)
        .unwrap()
        .into_iter()
        .map(|r| (r.name, r.instances))
        .collect();
    ok &= exercised.iter().all(|(_, n)| *n >= IDENTITY_POINTS);
    for shape in [Shape::new(2, 2), Shape::new(3, 3)] {
        let rels = check_defining_relations(shape).unwrap();
        ok &= rels.len() == 8;
        for rel in rels {
            if !rel.passed() {
                ok = false;
                detail.push(format!("{shape} {}: {:?}", rel.name, rel.failures));
            }
            if shape == Shape::new(3, 3) && rel.instances == 0 {
                ok = false;
                detail.push(format!("{shape} {}: not exercised", rel.name));
            }
        }
    }
    report(
        6,
        "identity suite and defining relations",
        ok,
        &format!("(2,3) instances {exercised:?}; failures {detail:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_7_proof_lemmas() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = Vec::new();
    for shape in [
        Shape::new(1, 1),
        Shape::new(2, 1),
        Shape::new(1, 2),
        Shape::new(2, 2),
        Shape::new(3, 1),
    ] {
        for res in check_proof_lemmas(shape, SEED, 5).unwrap() {
            if !res.passed() || res.instances == 0 {
                ok = false;
                detail.push(format!("{shape} {}: {:?}", res.name, res.failures));
            }
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed < LEMMA_RUNTIME;
    report(
        7,
        "proof lemmas on shapes up to (2,2) and (3,1)",
        ok,
        &format!("{elapsed:?} (limit {LEMMA_RUNTIME:?}); failures {detail:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_8_jm_structure() {
    let mut ok = true;
    let mut instances = 0;
    let mut bad = Vec::new();
    for n in 1..=6usize {
        for r in 0..=n {
            let shape = Shape::new(r, n - r);
            for res in check_jm_structure(shape).unwrap() {
                instances += res.instances;
                if !res.passed() {
                    ok = false;
                    bad.push(format!("{shape} {}: {:?}", res.name, res.failures));
                }
            }
        }
    }
    report(
        8,
        "Jucys-Murphy commutation r+s <= 6",
        ok,
        &format!("{instances} commutators; failures {bad:?}"),
    );
    assert!(ok);
}
