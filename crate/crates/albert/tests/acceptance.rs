//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. All comparisons are exact; the stated runtime budgets are asserted
//! with wall-clock measurements.

use albert::jordan::{Herm3, DIM};
use albert::plucker::{
    confluent, cross6, gram_h2, gram_h6, gram_positive_test, inverse_plucker, plucker_embed,
    wedge4, witt_index, Subspace, Vec6,
};
use albert::rng::SplitMix64;
use albert::scalar::{Field, GScalar, Rational};
use albert::spin::{
    commutes_with_h, det_invariance_of_images, preserves_bilinear, preserves_det, preserves_h,
    standard_generators, DetMode, Generator, GroupWord,
};
use albert::suites::{run, Backend, RunConfig, Suite};
use albert::veronese::{
    generate_nonisotropic_points, generate_weak_points, is_strongly_isotropic,
    is_strongly_isotropic_appendix, strong_fixture, HermC,
};
use std::time::Instant;

fn criterion(n: usize, pass: bool, what: &str) {
    println!(
        "criterion {n}: {} - {what}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} failed: {what}");
}

#[test]
fn criterion_1_composition_suite() {
    let started = Instant::now();
    let cfg = RunConfig {
        suites: vec![Suite::Composition],
        samples: 500,
        seed: 7,
        backend: Backend::Exact,
        fast: false,
        inject_table_fault: false,
    };
    let report = run(&cfg);
    let all_pass = report.pass();
    let witnesses_emitted = report.suites[0]
        .checks
        .iter()
        .filter(|c| c.name.contains("witness"))
        .all(|c| c.pass && c.details.is_some());
    let elapsed = started.elapsed();
    criterion(
        1,
        all_pass && witnesses_emitted && elapsed.as_secs() < 10,
        &format!(
            "composition identities on 500 samples over Q and Q(i), witnesses emitted, {:?} < 10s",
            elapsed
        ),
    );
}

#[test]
fn criterion_2_jordan_suite() {
    let started = Instant::now();
    let cfg = RunConfig {
        suites: vec![Suite::Jordan],
        samples: 200,
        seed: 7,
        backend: Backend::Exact,
        fast: false,
        inject_table_fault: false,
    };
    let report = run(&cfg);
    let elapsed = started.elapsed();
    criterion(
        2,
        report.pass() && elapsed.as_secs() < 30,
        &format!(
            "Jordan identity, bilinear associativity, polarization, det routes, adjoint identity on 200 samples, {:?} < 30s",
            elapsed
        ),
    );
}

#[test]
fn criterion_3_cross_product_exhaustive() {
    let started = Instant::now();
    let basis = Herm3::<Rational>::basis27();
    let gram = Herm3::<Rational>::gram_diag();
    let traces: Vec<Rational> = basis.iter().map(Herm3::trace).collect();

    // componentwise cross products and Jordan products of all basis pairs
    let mut cross_coords: Vec<Vec<Vec<Rational>>> = Vec::with_capacity(DIM);
    let mut jordan_coords: Vec<Vec<Vec<Rational>>> = Vec::with_capacity(DIM);
    for a in 0..DIM {
        let mut row_c = Vec::with_capacity(DIM);
        let mut row_j = Vec::with_capacity(DIM);
        for b in 0..DIM {
            row_c.push(basis[a].cross(&basis[b]).coords());
            row_j.push(basis[a].jordan_mul(&basis[b]).coords());
        }
        cross_coords.push(row_c);
        jordan_coords.push(row_j);
    }

    // (X x Y, Z) = 3 (X,Y,Z) for every ordered triple, i.e.
    // 2 (X x Y, e_c) = 6 (X,Y,e_c) with the trilinear trace expansion
    let mut checked = 0u64;
    for a in 0..DIM {
        for b in 0..DIM {
            let bil_ab = if a == b { gram[a].clone() } else { Rational::zero() };
            for c in 0..DIM {
                let lhs2 = {
                    let v = cross_coords[a][b][c].mul(&gram[c]);
                    v.add(&v.clone())
                };
                // 6(X,Y,Z) = 2 tr(XoYoZ) - tr X (Y,Z) - tr Y (X,Z)
                //            - tr Z (X,Y) + tr X tr Y tr Z
                let t = jordan_coords[a][b][c].mul(&gram[c]);
                let mut rhs6 = t.add(&t.clone());
                if b == c {
                    rhs6 = rhs6.sub(&traces[a].mul(&gram[b]));
                }
                if a == c {
                    rhs6 = rhs6.sub(&traces[b].mul(&gram[a]));
                }
                rhs6 = rhs6.sub(&traces[c].mul(&bil_ab));
                rhs6 = rhs6.add(&traces[a].mul(&traces[b]).mul(&traces[c]));
                assert_eq!(
                    lhs2, rhs6,
                    "(X x Y, Z) != 3(X,Y,Z) at basis triple ({a},{b},{c})"
                );
                checked += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    criterion(
        3,
        checked == 27 * 27 * 27 && elapsed.as_secs() < 120,
        &format!("cross-product duality on all {checked} ordered basis triples, {elapsed:?} < 2min"),
    );
}

#[test]
fn criterion_4_strong_isotropy_equivalence() {
    use albert::spin::orbit;
    use albert::veronese::collinear_strong_family;
    let mut weak = generate_weak_points(500, 20260807);
    // salt the pool with strongly isotropic points: the frozen collinear
    // family and a depth-1 orbit of the fixture
    weak.extend(collinear_strong_family());
    weak.extend(orbit(&strong_fixture(), &standard_generators()[..4], 1));
    let controls = generate_nonisotropic_points(100, 20260807);
    let mut strong_seen = 0usize;
    for p in weak.iter().chain(controls.iter()) {
        let defining = is_strongly_isotropic(p);
        let appendix = is_strongly_isotropic_appendix(p);
        assert_eq!(defining, appendix, "procedures disagree on {p}");
        if defining == Ok(true) {
            strong_seen += 1;
        }
    }
    // frozen regression fixture
    let fixture = strong_fixture();
    let fixture_ok = is_strongly_isotropic(&fixture) == Ok(true)
        && is_strongly_isotropic_appendix(&fixture) == Ok(true);
    criterion(
        4,
        fixture_ok,
        &format!(
            "procedures agree on {} weak points and {} controls ({} strong among them); frozen fixture certified",
            weak.len(),
            controls.len(),
            strong_seen
        ),
    );
}

#[test]
fn criterion_5_group_certification() {
    let started = Instant::now();
    for g in standard_generators() {
        let word = GroupWord(vec![g.clone()]);
        assert_eq!(
            preserves_det(&word, DetMode::Exhaustive),
            Ok(()),
            "{} must preserve det",
            g.label()
        );
        assert_eq!(preserves_h(&word), Ok(()), "{} must preserve h", g.label());
        match &g {
            Generator::Ta(_) | Generator::Rcs(_, _) => {
                assert_eq!(
                    preserves_bilinear(&word),
                    Ok(()),
                    "{} must preserve (.,.)",
                    g.label()
                );
                assert_eq!(
                    commutes_with_h(&word),
                    Ok(()),
                    "{} must commute with H",
                    g.label()
                );
            }
            Generator::Somega(_) => {}
        }
    }
    // the scaling map is the designated non-member witness
    let images: Vec<HermC> = HermC::basis27()
        .iter()
        .map(|b| b.scale(&GScalar::from_int(2)))
        .collect();
    assert!(det_invariance_of_images(&images, DetMode::Exhaustive).is_err());
    assert_eq!(
        HermC::identity().scale(&GScalar::from_int(2)).det(),
        GScalar::from_int(8),
        "det ratio of the scaling witness is 8"
    );
    let elapsed = started.elapsed();
    criterion(
        5,
        elapsed.as_secs() < 300,
        &format!(
            "exhaustive det certification for all built-in generators plus h/bilinear/H checks, {:?} < 5min",
            elapsed
        ),
    );
}

#[test]
fn criterion_6_toy_model() {
    assert_eq!(witt_index(&gram_h6()), 2, "witt(h6)");
    assert_eq!(witt_index(&gram_h2()), 7, "witt(h2)");
    assert_eq!(witt_index(&gram_positive_test(5)), 0, "witt(positive)");

    let mut rng = SplitMix64::new(42);
    let mut random_plane = || loop {
        let a = Vec6(std::array::from_fn(|_| {
            GScalar::from_ints(rng.int_in(-3, 3), rng.int_in(-3, 3))
        }));
        let b = Vec6(std::array::from_fn(|_| {
            GScalar::from_ints(rng.int_in(-3, 3), rng.int_in(-3, 3))
        }));
        let s = Subspace::from_spanning(&[a, b]);
        if s.dim() == 2 {
            return s;
        }
    };
    let mut confluent_pairs = 0usize;
    for round in 0..500 {
        let l1 = random_plane();
        // every third pair shares a basis vector, so both directions of the
        // equivalence get exercised
        let l2 = if round % 3 == 0 {
            let shared = l1.basis()[0].clone();
            loop {
                let other = random_plane();
                let cand = Subspace::from_spanning(&[shared.clone(), other.basis()[1].clone()]);
                if cand.dim() == 2 {
                    break cand;
                }
            }
        } else {
            random_plane()
        };
        let u = plucker_embed(&l1).unwrap();
        let v = plucker_embed(&l2).unwrap();
        assert_eq!(inverse_plucker(&u).unwrap(), l1, "round trip");
        let by_wedge = wedge4(&u, &v).iter().all(|c| c.is_zero());
        let by_cross = cross6(&u, &v).is_zero();
        let by_planes = confluent(&u, &v).unwrap();
        assert_eq!(by_wedge, by_cross);
        assert_eq!(by_wedge, by_planes);
        if by_wedge {
            confluent_pairs += 1;
        }
    }
    criterion(
        6,
        true,
        &format!(
            "witt(h6) = 2, witt(h2) = 7; round trip and three-way confluence on 500 pairs ({confluent_pairs} confluent)"
        ),
    );
}

#[test]
fn criterion_7_quadrangles() {
    use albert::geometry::{
        build_classical_sample, build_e6_sample, check_gq_axioms, classical_projection,
        w2_fixture, AuditMode,
    };
    use albert::veronese::collinear_strong_family;

    // the order-(2,2) fixture passes the full audit
    let w2 = check_gq_axioms(&w2_fixture(), AuditMode::Full);
    assert!(w2.gq_pass(), "{w2:?}");

    // 200 unique certified projections on generated non-incident pairs
    let sample = build_classical_sample(44, 77);
    let mut projections = 0usize;
    'outer: for p in &sample.points {
        for m in &sample.lines {
            if projections >= 200 {
                break 'outer;
            }
            if m.contains(&p.basis()[0]) {
                continue;
            }
            let (q, l) = classical_projection(p, m).expect("unique certified projection");
            let pv = &p.basis()[0];
            let qv = &q.basis()[0];
            assert!(l.contains(pv) && l.contains(qv) && m.contains(qv));
            assert!(l.totally_isotropic_h6());
            projections += 1;
        }
    }
    assert!(projections >= 200, "only {projections} projection pairs");

    // exceptional sample: orbit depth 2, at least 50 points, no digons or
    // triangles
    let seeds = collinear_strong_family();
    let gens = standard_generators();
    let e6 = build_e6_sample(&seeds, &gens[..4], 2, 56);
    assert!(e6.points.len() >= 50, "{} points", e6.points.len());
    let report = check_gq_axioms(&e6.sample, AuditMode::SampleLocal);
    assert!(report.digon_triangle_free(), "{report:?}");
    assert!(report.axiom_a_ok(), "{report:?}");
    criterion(
        7,
        true,
        &format!(
            "W(2) audit, {projections} certified projections, exceptional sample with {} points and no digons/triangles",
            e6.points.len()
        ),
    );
}

#[test]
fn criterion_8_determinism() {
    let exe = env!("CARGO_BIN_EXE_albert");
    let run_once = || {
        std::process::Command::new(exe)
            .args(["verify", "--suite", "all", "--seed", "7", "--json"])
            .output()
            .expect("binary runs")
    };
    let first = run_once();
    let second = run_once();
    assert!(first.status.success(), "verify run failed");
    assert_eq!(first.status.code(), second.status.code());
    criterion(
        8,
        first.stdout == second.stdout && !first.stdout.is_empty(),
        &format!(
            "two runs of `verify --suite all --seed 7 --json` produced byte-identical {}-byte reports",
            first.stdout.len()
        ),
    );
}

#[test]
fn exit_code_contract() {
    let exe = env!("CARGO_BIN_EXE_albert");
    let code = |args: &[&str]| {
        std::process::Command::new(exe)
            .args(args)
            .output()
            .expect("binary runs")
            .status
            .code()
            .unwrap()
    };
    // clean run on a quick suite
    assert_eq!(
        code(&["verify", "--suite", "plucker", "--samples", "20", "--seed", "3"]),
        0
    );
    // injected structure-table fault must be caught with exit 1
    assert_eq!(
        code(&[
            "verify",
            "--suite",
            "composition",
            "--samples",
            "16",
            "--seed",
            "3",
            "--inject-table-fault"
        ]),
        1
    );
    // usage errors are exit 2
    assert_eq!(code(&["verify", "--suite", "nonsense"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);

    // classify: the zero matrix is a usage error, a diagonal idempotent a
    // clean classification
    let dir = std::env::temp_dir();
    let zero_path = dir.join("albert_zero_point.json");
    let zero_entry = r#"{"level":3,"coeffs":[["0","0"],["0","0"],["0","0"],["0","0"],["0","0"],["0","0"],["0","0"],["0","0"]]}"#;
    std::fs::write(
        &zero_path,
        format!(
            r#"{{"xi":[["0","0"],["0","0"],["0","0"]],"x":[{zero_entry},{zero_entry},{zero_entry}]}}"#
        ),
    )
    .unwrap();
    assert_eq!(code(&["classify", zero_path.to_str().unwrap()]), 2);

    let e1_path = dir.join("albert_e1_point.json");
    std::fs::write(
        &e1_path,
        format!(
            r#"{{"xi":[["1","0"],["0","0"],["0","0"]],"x":[{zero_entry},{zero_entry},{zero_entry}]}}"#
        ),
    )
    .unwrap();
    let out = std::process::Command::new(exe)
        .args(["classify", e1_path.to_str().unwrap(), "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["veronese"], serde_json::json!(true));
    assert_eq!(v["weak"], serde_json::json!(false));

    // the Witt indices through the CLI
    let witt = |form: &str| {
        let out = std::process::Command::new(exe)
            .args(["witt", "--form", form])
            .output()
            .unwrap();
        String::from_utf8(out.stdout).unwrap().trim().to_string()
    };
    assert_eq!(witt("h2"), "7");
    assert_eq!(witt("h6"), "2");
}
