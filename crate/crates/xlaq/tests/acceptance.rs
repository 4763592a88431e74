//! The acceptance gate: one test per ship criterion.  Each test prints a
//! single `ACCEPTANCE criterion N: PASS` line on success (visible under
//! `cargo test --test acceptance -- --nocapture`); any failure here is a
//! release blocker.
//!
//! The criteria, in order: field-tower fidelity against frozen reference
//! data; frozen generator matrices; the trace/norm separation check; the
//! dual-distance sweeps; column-independence at t = q; full golden-table
//! reproduction for q = 3, 4, 5; spot-checked reproduction for q = 7;
//! closed-form dimension consistency; designed-distance validation over
//! every golden row; and cross-engine distance agreement.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use common::{
    brute_min_weight, brute_weight_outside, fixture_matrix, frozen_fields, power_table,
    random_code, random_nested_pair, to_poly, PolyField, D44, D50, E44, E50,
};
use rand::rngs::StdRng;
use rand::SeedableRng;
use xlaq::codes::{
    min_distance_bz, min_distance_coldep, min_distance_enum, relative_weight, EnumBudget,
};
use xlaq::css::{generate_table, theorem_k, InnerFamily, TableOptions, Theorem};
use xlaq::golden::{compare, read_golden};
use xlaq::verify::{run_sweep, CaseStatus, Sweep};
use xlaq::xl::{self, XlSpec};
use xlaq::{gf, BoundStatus, FieldElement};

const ALL_Q: [u8; 6] = [3, 4, 5, 7, 8, 9];

fn golden_path(q: u8) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("../../data/golden_q{q}.csv"))
}

/// Criterion 1 — field fidelity: the canonical α and β point rows match
/// the frozen reference lists verbatim for all six fields, and the
/// Zech-table addition agrees exhaustively with long-hand polynomial
/// addition.  Budget: under one second.
#[test]
fn criterion_01_field_fidelity() {
    let started = Instant::now();
    for f in frozen_fields() {
        let ctx = gf::ctx(f.q).unwrap();
        let points = ctx.points();
        assert_eq!(points.alphas, f.expected_alphas(ctx), "α row for q = {}", f.q);
        assert_eq!(points.betas, f.expected_betas(), "β row for q = {}", f.q);
        assert_eq!(points.r, f.beta_exps.len());

        let pf = PolyField::new(f.p, f.poly);
        let reps = power_table(&pf);
        let mut back: HashMap<Vec<u8>, FieldElement> = HashMap::new();
        back.insert(pf.zero(), FieldElement::Zero);
        for (i, rep) in reps.iter().enumerate() {
            back.insert(rep.clone(), FieldElement::Pow(i as u16));
        }
        let mut elements = vec![FieldElement::Zero];
        elements.extend((0..f.q2 - 1).map(FieldElement::Pow));
        for &x in &elements {
            let px = to_poly(x, &reps, pf.deg);
            for &y in &elements {
                let py = to_poly(y, &reps, pf.deg);
                assert_eq!(
                    ctx.add(x, y),
                    back[&pf.add(&px, &py)],
                    "{x} + {y} over GF({})",
                    f.q
                );
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("ACCEPTANCE criterion 1: PASS");
}

/// Criterion 2 — printed-matrix fidelity: the dimension-3 subcode at
/// q = 4, t = 4 (also reachable as the general (m, ℓ) = (2, 1) member),
/// the dimension-5 subcode at q = 4, t = 4, and the q = 5, t = 0
/// generators match their frozen reference matrices entry for entry.
#[test]
fn criterion_02_matrix_fidelity() {
    let d44 = xl::build_d(4, 4).unwrap();
    assert_eq!(common::mat_rows(&d44.gen), D44.map(|r| r.to_vec()).to_vec());
    let via_xl = xl::build_xl(&XlSpec { q: 4, t: 4, m: 2, ell: 1 }).unwrap();
    assert_eq!(common::mat_rows(&via_xl.gen), common::mat_rows(&d44.gen));

    let e44 = xl::build_e(4, 4).unwrap();
    let expected: Vec<Vec<u8>> = D44.iter().chain(E44_EXTRA.iter()).map(|r| r.to_vec()).collect();
    assert_eq!(common::mat_rows(&e44.gen), expected);

    let d50 = xl::build_d(5, 0).unwrap();
    assert_eq!(common::mat_rows(&d50.gen), D50.map(|r| r.to_vec()).to_vec());
    assert_eq!(d50.gen.row(1), [1, 2, 0, 1, 2, 4, 0, 4, 3, 3]);

    let e50 = xl::build_e(5, 0).unwrap();
    let expected: Vec<Vec<u8>> = D50.iter().chain(E50_EXTRA.iter()).map(|r| r.to_vec()).collect();
    assert_eq!(common::mat_rows(&e50.gen), expected);

    // The fixtures themselves are full-rank generators.
    assert_eq!(fixture_matrix(4, &D44).rank(), 3);
    assert_eq!(fixture_matrix(5, &D50).rank(), 3);
    println!("ACCEPTANCE criterion 2: PASS");
}

/// Criterion 3 — separation: the (trace, norm) pair separates the
/// canonical points, verified exhaustively for all six fields in under a
/// second.
#[test]
fn criterion_03_separation() {
    let started = Instant::now();
    for q in ALL_Q {
        let lemma = gf::verify_trace_norm_lemma(gf::ctx(q).unwrap());
        assert!(lemma.pass, "separation failed for q = {q}");
        assert!(lemma.counterexample.is_none());
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("ACCEPTANCE criterion 3: PASS");
}

/// Criterion 4 — dual-distance sweeps, exhaustive over all t for every
/// field: the dimension-3 subcode dual distance is 3 (4 at (4, 0)), the
/// dimension-5 subcode dual distance is 4 (6 at (4, 0)), and the
/// dimension-8 subcode dual distance is at least 5, with the two known
/// q = 5 refinements reported as findings rather than failures.
#[test]
fn criterion_04_dual_distance_sweeps() {
    let started = Instant::now();
    let budget = EnumBudget::default();

    let d = run_sweep(Sweep::DDual, &ALL_Q, &budget).unwrap();
    assert_eq!(d.counts(), (38, 0, 0), "cases: {:?}", d.cases);

    let e = run_sweep(Sweep::EDual, &ALL_Q, &budget).unwrap();
    assert_eq!(e.counts(), (38, 0, 0), "cases: {:?}", e.cases);

    let f = run_sweep(Sweep::FDual, &ALL_Q, &budget).unwrap();
    assert!(f.passed(), "cases: {:?}", f.cases);
    let findings: Vec<&str> = f
        .cases
        .iter()
        .filter(|c| c.status == CaseStatus::Finding)
        .map(|c| c.name.as_str())
        .collect();
    assert_eq!(findings, ["f-dual q=5 t=4", "f-dual q=5 t=5"]);

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    println!("ACCEPTANCE criterion 4: PASS");
}

/// Criterion 5 — independence at t = q: every 3 columns of the
/// dimension-5 subcode generator and every 4 columns of the dimension-8
/// subcode generator are linearly independent, exhaustively for every
/// applicable field.
#[test]
fn criterion_05_column_independence() {
    let started = Instant::now();
    for q in [4u8, 5, 7, 8, 9] {
        let e = xl::build_e(q, q).unwrap();
        assert!(
            e.gen.min_dependent_columns(3).is_none(),
            "dependent ≤ 3 columns at q = {q}"
        );
    }
    for q in [5u8, 7, 8, 9] {
        let f = xl::build_f(q, q).unwrap();
        assert!(
            f.gen.min_dependent_columns(4).is_none(),
            "dependent ≤ 4 columns at q = {q}"
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!("ACCEPTANCE criterion 5: PASS");
}

/// Criterion 6 — full golden reproduction for q = 3, 4, 5: every golden
/// row is matched with exact distances (the (d_z, δ) split rows
/// included), purity holds throughout, and no generated record violates
/// the classical bounds.
#[test]
fn criterion_06_small_field_tables() {
    let started = Instant::now();
    for (q, expected_rows) in [(3u8, 3usize), (4, 19), (5, 41)] {
        let golden = read_golden(&golden_path(q)).unwrap();
        assert_eq!(golden.len(), expected_rows, "golden census for q = {q}");
        assert!(
            golden.iter().all(|g| g.pure == Some(true)),
            "the q = {q} reference rows are all pure"
        );

        let records = generate_table(q, &TableOptions::default(), None).unwrap();
        let mismatches = compare(&records, &golden, true);
        assert!(
            mismatches.is_empty(),
            "q = {q}: {}",
            mismatches.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
        );
        assert!(
            records.iter().all(|r| r.bound_status != BoundStatus::Violation),
            "bound violation in the q = {q} table"
        );

        let by_key: HashMap<_, _> = records
            .iter()
            .map(|r| ((r.t, r.m, r.ell, r.inner), r))
            .collect();
        for g in &golden {
            let r = by_key[&(g.t, g.m, g.ell, g.inner)];
            assert!(r.exact_z && r.exact_x, "inexact matched row at q = {q}");
            assert_eq!(r.pure, Some(true), "impure matched row at q = {q}");
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(900), "took {elapsed:?}");
    println!("ACCEPTANCE criterion 6: PASS");
}

/// Criterion 7 — q = 7 spot checks: the eleven t = 0 reference entries
/// and the split entry at (t, m, ℓ) = (7, 6, 2) reproduce with exact d_x;
/// d_z is exact and equal wherever the engine terminates within budget,
/// and otherwise is a lower bound between the designed distance and the
/// reference value.  Budget: under thirty minutes.
#[test]
fn criterion_07_q7_spot_checks() {
    let started = Instant::now();
    let t0_shapes: BTreeSet<(usize, usize)> = [
        (2, 0),
        (2, 1),
        (3, 1),
        (3, 2),
        (4, 0),
        (4, 2),
        (4, 3),
        (5, 1),
        (5, 3),
        (5, 4),
        (6, 2),
    ]
    .into_iter()
    .collect();
    let golden = read_golden(&golden_path(7)).unwrap();
    let selected: Vec<_> = golden
        .iter()
        .filter(|g| {
            (g.t == 0 && t0_shapes.contains(&(g.m, g.ell))) || (g.t, g.m, g.ell) == (7, 6, 2)
        })
        .collect();
    assert_eq!(selected.len(), 37, "spot-check census");

    let budget = EnumBudget {
        work_limit: 1_000_000_000,
        ..EnumBudget::default()
    };
    for g in selected {
        let spec = XlSpec { q: 7, t: g.t, m: g.m, ell: g.ell };
        let (record, _) = xlaq::css::derive_record(&spec, g.inner, &budget, None).unwrap();
        assert_eq!((record.n, record.k), (g.n, g.k), "shape at {spec:?} {}", g.inner);
        assert_eq!(record.delta, g.delta, "designed distance at {spec:?} {}", g.inner);
        assert!(record.exact_x, "d_x must be exact at {spec:?} {}", g.inner);
        assert_eq!(record.d_x, g.d_x, "d_x at {spec:?} {}", g.inner);
        if record.exact_z {
            assert_eq!(record.d_z, g.d_z, "exact d_z at {spec:?} {}", g.inner);
        } else {
            assert!(
                record.d_z >= g.delta && record.d_z <= g.d_z,
                "d_z bound {} outside [{}, {}] at {spec:?} {}",
                record.d_z,
                g.delta,
                g.d_z,
                g.inner
            );
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1800), "took {elapsed:?}");
    println!("ACCEPTANCE criterion 7: PASS");
}

/// Criterion 8 — closed-form dimensions: across the full parameter grid
/// of every field, whenever a dimension shortcut's hypotheses hold, the
/// built nested pair exists and its net dimension equals the closed
/// form — including the net dimension 1 rows at q = 4.  Dimension
/// arithmetic only, under a minute.
#[test]
fn criterion_08_closed_form_dimensions() {
    let started = Instant::now();
    let mut checked = 0usize;
    for q in ALL_Q {
        for t in 0..=q {
            for m in 1..usize::from(q) {
                for ell in 0..m {
                    let spec = XlSpec { q, t, m, ell };
                    for family in [InnerFamily::Rep, InnerFamily::D, InnerFamily::E, InnerFamily::F]
                    {
                        let theorem = family.theorem().unwrap();
                        match theorem_k(theorem, &spec) {
                            Ok(k) => {
                                let inner = family.build(q, t).unwrap();
                                let outer = xl::build_xl(&spec).unwrap();
                                assert!(
                                    xlaq::codes::is_subcode(&inner, &outer).unwrap(),
                                    "{family} ⊄ outer at {spec:?}"
                                );
                                assert_eq!(
                                    outer.k - inner.k,
                                    k,
                                    "net dimension at {spec:?} with inner {family}"
                                );
                                assert!(k >= 1, "certified dimensions are positive");
                                checked += 1;
                            }
                            Err(xlaq::Error::HypothesisViolation { .. }) => {}
                            Err(other) => panic!("unexpected error at {spec:?}: {other}"),
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 300, "only {checked} certified cells");

    // The q = 4 exceptional rows: net dimension exactly 1 inside the
    // (3, 2) shape for 1 ≤ t ≤ 4, and no certificate at t = 0 or t = 5.
    for t in 1..=4 {
        let spec = XlSpec { q: 4, t, m: 3, ell: 2 };
        assert_eq!(theorem_k(Theorem::DxFour, &spec).unwrap(), 1);
    }
    for t in [0u8, 5] {
        let spec = XlSpec { q: 4, t, m: 3, ell: 2 };
        assert!(theorem_k(Theorem::DxFour, &spec).is_err());
    }

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("ACCEPTANCE criterion 8: PASS");
}

/// Criterion 9 — designed-distance validation: on every golden row of all
/// six fields the computed designed distance equals the stored value, and
/// the reference d_z equals it exactly except on the frozen list of
/// split entries, where it exceeds it by one.
#[test]
fn criterion_09_designed_distance_on_golden() {
    let split_keys: BTreeSet<(u8, u8, usize, usize)> = [
        (4, 4, 3, 2),
        (5, 4, 4, 1),
        (5, 5, 4, 1),
        (7, 0, 4, 0),
        (7, 1, 4, 0),
        (7, 7, 6, 2),
        (8, 3, 5, 0),
        (8, 4, 5, 0),
        (8, 6, 3, 2),
        (8, 7, 3, 2),
        (8, 7, 5, 4),
        (8, 8, 5, 4),
        (9, 0, 4, 0),
        (9, 5, 5, 3),
        (9, 6, 5, 4),
        (9, 7, 7, 3),
        (9, 8, 7, 1),
        (9, 9, 7, 0),
    ]
    .into_iter()
    .collect();

    let mut seen_splits = BTreeSet::new();
    let mut rows = 0usize;
    for q in ALL_Q {
        for g in read_golden(&golden_path(q)).unwrap() {
            rows += 1;
            let spec = XlSpec { q: g.q, t: g.t, m: g.m, ell: g.ell };
            let params = spec.params().unwrap();
            assert_eq!(params.delta, g.delta, "designed distance at {spec:?}");
            assert_eq!(params.n, g.n, "length at {spec:?}");
            let key = (g.q, g.t, g.m, g.ell);
            if g.d_z == g.delta + 1 {
                seen_splits.insert(key);
            } else {
                assert_eq!(g.d_z, g.delta, "non-split reference d_z at {spec:?}");
                assert!(!split_keys.contains(&key), "split entry lost its gap at {spec:?}");
            }
        }
    }
    assert_eq!(rows, 680, "golden census across all fields");
    assert_eq!(seen_splits, split_keys, "the split entries are exactly the frozen list");
    println!("ACCEPTANCE criterion 9: PASS");
}

/// Criterion 10 — engine agreement: on 200 seeded random codes over
/// GF(3)/GF(4) with qᵏ ≤ 10⁵, the enumeration, information-set, and
/// column-dependence engines agree exactly with a brute force; on 100
/// seeded random nested pairs the relative-weight search equals the
/// brute-force set-difference minimum.  Zero mismatches tolerated.
#[test]
fn criterion_10_engine_agreement() {
    let mut rng = StdRng::seed_from_u64(0xac1);
    let budget = EnumBudget::default();
    for trial in 0..200 {
        let q = if trial % 2 == 0 { 3 } else { 4 };
        let code = random_code(&mut rng, q);
        let brute = brute_min_weight(&code);
        let by_enum = min_distance_enum(&code);
        let by_bz = min_distance_bz(&code, &budget);
        let by_coldep = min_distance_coldep(&code, &budget);
        for (label, result) in [("enum", &by_enum), ("bz", &by_bz), ("coldep", &by_coldep)] {
            assert!(result.is_exact(), "{label} inexact on [{}, {}]_{q}", code.n, code.k);
            assert_eq!(
                result.value, brute,
                "{label} disagrees with brute force on [{}, {}]_{q}",
                code.n, code.k
            );
        }
    }

    let mut rng = StdRng::seed_from_u64(0xac2);
    for trial in 0..100 {
        let q = if trial % 2 == 0 { 3 } else { 4 };
        let (sub, sup) = random_nested_pair(&mut rng, q);
        let brute = brute_weight_outside(&sup, Some(&sub));
        let relative = relative_weight(&sup, &sub, &budget).unwrap();
        assert!(relative.is_exact());
        assert_eq!(
            relative.value, brute,
            "relative weight disagrees on [{}, {}] ⊃ [{}, {}] over GF({q})",
            sup.n, sup.k, sub.n, sub.k
        );
    }
    println!("ACCEPTANCE criterion 10: PASS");
}
