//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any failed.
//!
//! Run with `cargo test -p triangle-torus-cli --test acceptance`.

use std::f64::consts::{PI, TAU};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use serde_json::Value;

use triangle_torus::measure::{analytic_measures, estimate_probability, sample_uniform, Region};
use triangle_torus::symmetry::{act, all_elements, multiplicity, orbit};
use triangle_torus::{
    classify, make_triple, rho, rho_preimages, LocusId, Orientation, PiRational, Sheet, TorusPoint,
    Vertex,
};
use tritorus::path::{trace, EventKind, Path};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn rel_err(got: f64, want: f64) -> f64 {
    ((got - want) / want).abs()
}

// 1 -------------------------------------------------------------------------

fn measure_closed_forms() -> Outcome {
    let m = analytic_measures();
    let (r2, r3, r6, pi2) = (2f64.sqrt(), 3f64.sqrt(), 6f64.sqrt(), PI * PI);
    let rows = [
        ("T", m.total, r3 * pi2),
        ("O", m.obtuse, 0.75 * r3 * pi2),
        ("A", m.acute, 0.25 * r3 * pi2),
        ("I", m.isosceles, 6.0 * r6 * PI),
        ("R", m.right, 3.0 * r2 * PI),
        ("D", m.degenerate, 6.0 * r2 * PI),
        ("OI", m.obtuse_isosceles, 3.0 * r6 * PI),
        ("AI", m.acute_isosceles, 3.0 * r6 * PI),
    ];
    let ratios = [
        ("O:A", 3.0),
        ("I:AI", 2.0),
        ("I:OI", 2.0),
        ("I:R", 2.0 * r3),
        ("D:R", 2.0),
    ];
    let mut worst: f64 = 0.0;
    for (name, got, want) in rows {
        let e = rel_err(got, want);
        worst = worst.max(e);
        check(
            e <= 1e-12,
            format!("μ({name}) = {got}, expected {want} (rel err {e:.2e})"),
        )?;
    }
    for (key, want) in ratios {
        let got = m.ratios[key];
        let e = rel_err(got, want);
        worst = worst.max(e);
        check(e <= 1e-12, format!("[{key}] = {got}, expected {want}"))?;
    }
    Ok(format!(
        "8 measures and 5 ratios, worst relative error {worst:.1e} ≤ 1e-12"
    ))
}

// 2 -------------------------------------------------------------------------

fn monte_carlo_obtuse() -> Outcome {
    const N: usize = 1_000_000;
    let band = 3.0 * (0.75f64 * 0.25 / N as f64).sqrt();
    let mut parts = Vec::new();
    for seed in [0u64, 1, 20_261_016] {
        let e = estimate_probability(Region::Obtuse, N, seed).map_err(|e| e.to_string())?;
        check(
            (e.probability - 0.75).abs() <= band,
            format!(
                "seed {seed}: P(obtuse) = {} outside 0.75 ± {band:.5}",
                e.probability
            ),
        )?;
        parts.push(format!(
            "seed {seed}: {:.5} ± {:.5}",
            e.probability, e.standard_error
        ));
    }
    Ok(format!(
        "n = 10⁶, band 0.75 ± {band:.5}; {}",
        parts.join(", ")
    ))
}

// 3 -------------------------------------------------------------------------

fn multiplicity_table() -> Outcome {
    let table = [
        ((0, 1, 0, 1), 12),
        ((2, 3, 4, 3), 6),
        ((1, 1, 1, 1), 4),
        ((2, 3, 0, 1), 2),
        ((1, 2, 1, 1), 2),
        ((1, 5, 3, 7), 1),
    ];
    for ((n1, d1, n2, d2), want) in table {
        let p = TorusPoint::from_fractions(n1, d1, n2, d2);
        let got = multiplicity(&p);
        check(
            got == want,
            format!("{p}: multiplicity {got}, expected {want}"),
        )?;
        check(
            classify(&p).multiplicity == want,
            format!("{p}: classify disagrees"),
        )?;
        check(orbit(&p).len() * want == 12, format!("{p}: orbit size"))?;
    }
    Ok("witnesses 12, 6, 4, 2, 2, 1 match exactly".into())
}

// 4 -------------------------------------------------------------------------

fn coord() -> impl Strategy<Value = PiRational> {
    (1i64..=60).prop_flat_map(|d| (0..2 * d).prop_map(move |n| PiRational::new(n, d)))
}

/// A point on the line locus `l`, parametrised by `x`.
fn on_line(l: LocusId, x: PiRational) -> TorusPoint {
    let eq = l.equation().expect("line locus");
    if eq.b.abs() == 1 {
        let xi2 = (&eq.offset - &x.scale(eq.a)).scale(eq.b);
        TorusPoint::new(x, xi2)
    } else {
        let xi1 = (&eq.offset - &x.scale(eq.b)).scale(eq.a);
        TorusPoint::new(xi1, x)
    }
}

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn preimage_structure() -> Outcome {
    let pi = PiRational::pi;
    let zero = PiRational::zero;
    let identity = rho_preimages(&TorusPoint::identity());
    let vertices = [
        (pi(), zero(), zero()),
        (zero(), pi(), zero()),
        (zero(), zero(), pi()),
        (-pi(), zero(), zero()),
        (zero(), -pi(), zero()),
        (zero(), zero(), -pi()),
    ]
    .map(|(a, b, c)| make_triple(a, b, c).unwrap());
    check(
        identity.len() == 6,
        format!("|ρ⁻¹(1)| = {}", identity.len()),
    )?;
    for v in &vertices {
        check(
            identity.contains(v),
            format!("vertex {v} missing from ρ⁻¹(1)"),
        )?;
    }

    let degenerate = (0usize..3, coord()).prop_filter_map("identity excluded", |(k, x)| {
        let p = on_line([LocusId::DA, LocusId::DB, LocusId::DC][k], x);
        (!p.is_identity()).then_some(p)
    });
    runner(100)
        .run(&degenerate, |p| {
            let pre = rho_preimages(&p);
            prop_assert_eq!(pre.len(), 2, "{}", p);
            prop_assert_eq!(pre[0].sheet(), Sheet::Plus);
            prop_assert_eq!(pre[1].sheet(), Sheet::Minus);
            for t in &pre {
                prop_assert!(t.is_degenerate());
                prop_assert_eq!(rho(t), p.clone());
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;

    // Every grid triangle on both sheets is among the preimages of its image.
    const N: i64 = 200;
    let mut triangles = 0;
    for i in 0..=N {
        for j in 0..=N - i {
            let (a, b) = (PiRational::new(i, N), PiRational::new(j, N));
            let c = &(&pi() - &a) - &b;
            for t in [
                make_triple(a.clone(), b.clone(), c.clone()).unwrap(),
                make_triple(-a.clone(), -b.clone(), -c.clone()).unwrap(),
            ] {
                let p = rho(&t);
                let pre = rho_preimages(&p);
                check(pre.contains(&t), format!("{t} not among preimages of {p}"))?;
                triangles += 1;
            }
        }
    }
    // Every point of a 200 × 200 grid on the torus is hit, and every
    // preimage maps back.
    for i in 0..N {
        for j in 0..N {
            let p = TorusPoint::new(PiRational::new(i, N / 2), PiRational::new(j, N / 2));
            let pre = rho_preimages(&p);
            check(!pre.is_empty(), format!("{p} has no preimage"))?;
            for t in &pre {
                check(rho(t) == p, format!("ρ({t}) ≠ {p}"))?;
            }
        }
    }
    Ok(format!(
        "identity has the 6 vertices; 100 degenerate points have 2 (plus, minus); \
         {triangles} sheet triangles and 40000 torus points round-trip"
    ))
}

// 5 -------------------------------------------------------------------------

fn point() -> impl Strategy<Value = TorusPoint> {
    prop_oneof![
        4 => (coord(), coord()).prop_map(|(a, b)| TorusPoint::new(a, b)),
        1 => (coord(), 0usize..12).prop_map(|(x, k)| on_line(LocusId::ALL[k], x)),
    ]
}

const SUBGROUP_LINES: [LocusId; 8] = [
    LocusId::DA,
    LocusId::DB,
    LocusId::DC,
    LocusId::IA,
    LocusId::IB,
    LocusId::IC,
    LocusId::IPerpA,
    LocusId::IPerpB,
];

fn group_and_action() -> Outcome {
    const CASES: u32 = 10_000;
    let equilateral = [(0, 1, 0, 1), (2, 3, 4, 3), (4, 3, 2, 3)]
        .map(|(a, b, c, d)| TorusPoint::from_fractions(a, b, c, d));
    let half = TorusPoint::new(PiRational::zero(), PiRational::pi());
    let half_b = TorusPoint::new(PiRational::pi(), PiRational::zero());
    let cosets = [
        (LocusId::RA, LocusId::DA, &half),
        (LocusId::RB, LocusId::DB, &half_b),
        (LocusId::RC, LocusId::DC, &half),
        (LocusId::AntiRight, LocusId::IC, &half),
    ];

    runner(CASES)
        .run(
            &(point(), point(), point(), coord(), coord()),
            |(p, q, r, x, y)| {
                // Abelian group.
                prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
                prop_assert_eq!(p.mul(&q), q.mul(&p));
                prop_assert_eq!(p.mul(&TorusPoint::identity()), p.clone());
                prop_assert!(p.mul(&p.inverse()).is_identity());

                // Left action, all 144 pairs.
                for g in all_elements() {
                    for h in all_elements() {
                        prop_assert_eq!(act(g.compose(h), &p), act(g, &act(h, &p)));
                    }
                }

                // Orbit-stabilizer and types on orbits.
                let base = classify(&p);
                prop_assert_eq!(orbit(&p).len() * base.multiplicity, 12);
                for g in all_elements() {
                    let c = classify(&act(g, &p));
                    prop_assert_eq!(c.flags.unlabeled(), base.flags.unlabeled());
                    prop_assert_eq!(c.multiplicity, base.multiplicity);
                    for v in Vertex::ALL {
                        let src = Vertex::from_index(g.perm.image(v.index()));
                        prop_assert_eq!(
                            c.flags.right_vertices.contains(v),
                            base.flags.right_vertices.contains(src)
                        );
                        prop_assert_eq!(
                            c.flags.isosceles_vertices.contains(v),
                            base.flags.isosceles_vertices.contains(src)
                        );
                    }
                }

                // Closure of the eight subgroup lines and the order-3 subgroup.
                for l in SUBGROUP_LINES {
                    let (a, b) = (on_line(l, x.clone()), on_line(l, y.clone()));
                    prop_assert!(a.mul(&b).in_locus(l), "{} {} {}", l, a, b);
                    prop_assert!(a.inverse().in_locus(l));
                }
                for a in &equilateral {
                    prop_assert!(a.inverse().in_locus(LocusId::Equilateral3));
                    for b in &equilateral {
                        prop_assert!(a.mul(b).in_locus(LocusId::Equilateral3));
                    }
                }

                // Cosets.
                for (coset, group, shift) in cosets {
                    let d = on_line(group, x.clone());
                    let c = on_line(coset, y.clone());
                    prop_assert!(shift.mul(&d).in_locus(coset));
                    prop_assert!(c.mul(&d).in_locus(coset));
                    prop_assert!(c.mul(&c.mul(&d).inverse()).in_locus(group));
                }
                Ok(())
            },
        )
        .map_err(|e| e.to_string())?;

    // Torsion witnesses.
    let order = |p: &TorusPoint| p.element_order().expect("torsion");
    for p in &equilateral[1..] {
        check(order(p) == 3.into(), format!("{p} should have order 3"))?;
    }
    for (a, b, c, d) in [(1, 1, 0, 1), (0, 1, 1, 1), (1, 1, 1, 1)] {
        let p = TorusPoint::from_fractions(a, b, c, d);
        check(order(&p) == 2.into(), format!("{p} should have order 2"))?;
    }
    for (a, b, c, d) in [(1, 2, 1, 1), (1, 2, 3, 2), (1, 1, 3, 2)] {
        let p = TorusPoint::from_fractions(a, b, c, d);
        for q in [p.inverse(), p] {
            check(order(&q) == 4.into(), format!("{q} should have order 4"))?;
        }
    }
    Ok(format!(
        "{CASES} random rational cases: group axioms, 144-pair action, orbit × multiplicity = 12, \
         flags on orbits, 9 subgroups, 4 cosets; torsion orders 3/2/4"
    ))
}

// 6 -------------------------------------------------------------------------

fn orientation_flip() -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = [
        "tritorus",
        "path",
        "1/3",
        "1/3",
        "1/3",
        "--velocity",
        "1",
        "0",
        "--steps",
        "300",
        "--json",
    ];
    let code = tritorus::run(args, &mut out, &mut err);
    check(code == 0, String::from_utf8_lossy(&err).to_string())?;
    let v: Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let events = v["events"].as_array().ok_or("no events")?;
    let dc = events
        .iter()
        .find(|e| e["locus"] == "D_C")
        .ok_or("no D_C crossing reported")?;
    let flip = events
        .iter()
        .find(|e| e["kind"] == "orientation_flip")
        .ok_or("no orientation flip reported")?;
    check(flip["step"] == dc["step"], "flip not at the D_C crossing")?;
    check(
        flip["before"] == "positive" && flip["after"] == "negative",
        format!("flip {} → {}", flip["before"], flip["after"]),
    )?;
    let coord = |k: &str| -> Result<f64, String> {
        flip["refined"][k]
            .as_str()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| format!("bad refined {k}"))
    };
    let printed = (coord("xi1")? - coord("xi2")?).abs();
    check(printed <= 1e-9, format!("printed residue {printed:e}"))?;

    // Unrounded residue straight from the tracer.
    let start = (2.0 * PI / 3.0, 4.0 * PI / 3.0);
    let events = trace(&Path {
        start,
        velocity: (1.0, 0.0),
        steps: 300,
        step_size: 0.01,
    })
    .map_err(|e| e.to_string())?;
    let e = events
        .iter()
        .find(|e| matches!(e.event_kind, EventKind::OrientationFlip { .. }))
        .ok_or("tracer reported no flip")?;
    check(
        e.event_kind
            == EventKind::OrientationFlip {
                before: Orientation::Positive,
                after: Orientation::Negative,
            },
        "tracer flip direction",
    )?;
    let residue = (e.refined_position.0 - e.refined_position.1).abs();
    check(residue <= 1e-9, format!("refined residue {residue:e}"))?;
    Ok(format!(
        "positive → negative at ξ₁ = ξ₂ = {:.10}, |ξ₁ − ξ₂| = {residue:.1e}",
        e.refined_position.0
    ))
}

// 7 -------------------------------------------------------------------------

/// Upper 0.001 quantile of χ² with 15 degrees of freedom.
const CHI2_15_999: f64 = 37.697;

fn uniformity() -> Outcome {
    const N: usize = 1_000_000;
    let seed = 7;
    let samples = sample_uniform(seed, N);
    check(samples.len() == N, "wrong sample count")?;
    let mut boxes = [0u64; 16];
    let mut positive = 0u64;
    for &(x, y) in &samples {
        check(
            (0.0..TAU).contains(&x) && (0.0..TAU).contains(&y),
            format!("({x}, {y}) outside"),
        )?;
        let bx = ((x / TAU * 4.0) as usize).min(3);
        let by = ((y / TAU * 4.0) as usize).min(3);
        boxes[4 * by + bx] += 1;
        positive += u64::from(y > x);
    }
    let expected = N as f64 / 16.0;
    let chi2: f64 = boxes
        .iter()
        .map(|&o| (o as f64 - expected).powi(2) / expected)
        .sum();
    check(
        chi2 < CHI2_15_999,
        format!("χ² = {chi2:.3} ≥ {CHI2_15_999}"),
    )?;
    let fraction = positive as f64 / N as f64;
    check(
        (fraction - 0.5).abs() <= 0.0015,
        format!("positive fraction {fraction} outside 0.5 ± 0.0015"),
    )?;
    Ok(format!(
        "seed {seed}: χ²(15) = {chi2:.3} < {CHI2_15_999}; positive fraction {fraction:.5}"
    ))
}

// ---------------------------------------------------------------------------

/// Side checks reported for information; they do not decide the outcome.
fn extra_monte_carlo() -> String {
    const N: usize = 1_000_000;
    let seed = 11;
    let mut parts = Vec::new();
    for region in [Region::Acute, Region::PositiveOrientation] {
        if let Ok(e) = estimate_probability(region, N, seed) {
            parts.push(format!(
                "P({}) = {:.5} ± {:.5}",
                region.name(),
                e.probability,
                e.standard_error
            ));
        }
    }
    let (mut pos, mut acute_pos) = (0u64, 0u64);
    for (x, y) in sample_uniform(seed, N) {
        let p = triangle_torus::approx::FloatPoint::new(x, y);
        if Region::PositiveOrientation.contains(&p) {
            pos += 1;
            acute_pos += u64::from(Region::Acute.contains(&p));
        }
    }
    parts.push(format!(
        "P(acute | positive) = {:.5}",
        acute_pos as f64 / pos as f64
    ));
    parts.join(", ")
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("measure closed forms and ratios", measure_closed_forms),
        ("Monte Carlo obtuse probability", monte_carlo_obtuse),
        ("multiplicity table", multiplicity_table),
        ("preimage structure", preimage_structure),
        ("group and action properties", group_and_action),
        ("orientation flip on path", orientation_flip),
        ("uniform sampler", uniformity),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let started = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({secs:.2}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {detail}", i + 1);
            }
        }
    }
    println!("info: {}", extra_monte_carlo());
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
