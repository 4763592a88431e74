//! Generator-matrix fidelity: the small distinguished subcodes are pinned
//! entry-for-entry to frozen reference matrices, and their dual distances
//! are certified twice — once by exhibiting explicit dependent column
//! sets, once by exhausting all smaller sets — without invoking the
//! distance engines, which are then cross-checked on top.

mod common;

use common::{
    fixture_matrix, mat_rows, D44, D44_TRIPLES, D50, D50_TRIPLE, E44, E44_QUADS, E50, E50_QUAD,
    E50_QUAD_KERNEL,
};
use xlaq::codes::{dual_distance, is_subcode, EnumBudget, Exactness};
use xlaq::gf;
use xlaq::xl::{self, XlSpec};

/// The q = 4, t = 4 subcode D equals its frozen generator exactly, and is
/// the same code the general builder produces for (m, ℓ) = (2, 1).
#[test]
fn d_generator_q4_is_frozen() {
    let d = xl::build_d(4, 4).unwrap();
    assert_eq!((d.n, d.k), (10, 3));
    assert_eq!(mat_rows(&d.gen), D44.map(|r| r.to_vec()).to_vec());

    let via_xl = xl::build_xl(&XlSpec { q: 4, t: 4, m: 2, ell: 1 }).unwrap();
    assert_eq!(mat_rows(&via_xl.gen), mat_rows(&d.gen));
}

/// The q = 4, t = 4 subcode E equals its frozen generator exactly; its
/// rows 0, 1, 3 are the D rows, and D sits inside E as a code.
#[test]
fn e_generator_q4_is_frozen() {
    let e = xl::build_e(4, 4).unwrap();
    assert_eq!((e.n, e.k), (10, 5));
    assert_eq!(mat_rows(&e.gen), E44.map(|r| r.to_vec()).to_vec());
    assert_eq!([E44[0], E44[1], E44[3]], D44);

    let d = xl::build_d(4, 4).unwrap();
    assert!(is_subcode(&d, &e).unwrap());
}

/// The q = 5, t = 0 subcodes D and E equal their frozen generators; the
/// middle D row is pinned on its own as the reference row.
#[test]
fn d_and_e_generators_q5_are_frozen() {
    let d = xl::build_d(5, 0).unwrap();
    assert_eq!((d.n, d.k), (10, 3));
    assert_eq!(mat_rows(&d.gen), D50.map(|r| r.to_vec()).to_vec());
    assert_eq!(d.gen.row(1), [1, 2, 0, 1, 2, 4, 0, 4, 3, 3]);

    let e = xl::build_e(5, 0).unwrap();
    assert_eq!((e.n, e.k), (10, 5));
    assert_eq!(mat_rows(&e.gen), E50.map(|r| r.to_vec()).to_vec());
    assert_eq!([E50[0], E50[1], E50[3]], D50);
    assert!(is_subcode(&d, &e).unwrap());
}

/// Each listed column triple of the frozen D generator at q = 4, t = 4 is
/// dependent, no pair is, so the dual distance is exactly 3 — and the
/// distance engine agrees.
#[test]
fn d_q4_dual_distance_three_certified_by_columns() {
    let g = fixture_matrix(4, &D44);
    for triple in D44_TRIPLES {
        let sub = g.select_columns(&triple);
        assert!(sub.rank() < 3, "columns {triple:?} must be dependent");
    }
    assert!(g.min_dependent_columns(2).is_none(), "no dependent pair");

    let d = xl::build_d(4, 4).unwrap();
    let result = dual_distance(&d, &EnumBudget::default());
    assert_eq!(result.exactness, Exactness::Exact);
    assert_eq!(result.value, 3);
}

/// The (q, t) = (4, 0) exception: the D dual distance rises to 4.
#[test]
fn d_q4_t0_dual_distance_is_four() {
    let d = xl::build_d(4, 0).unwrap();
    assert!(d.gen.min_dependent_columns(3).is_none(), "no three dependent columns");
    let result = dual_distance(&d, &EnumBudget::default());
    assert_eq!(result.exactness, Exactness::Exact);
    assert_eq!(result.value, 4);
}

/// The frozen D generator at q = 5, t = 0 has the listed dependent triple
/// and no dependent pair: dual distance exactly 3.
#[test]
fn d_q5_dual_distance_three_certified_by_columns() {
    let g = fixture_matrix(5, &D50);
    let sub = g.select_columns(&D50_TRIPLE);
    assert!(sub.rank() < 3, "columns {D50_TRIPLE:?} must be dependent");
    assert!(g.min_dependent_columns(2).is_none(), "no dependent pair");

    let d = xl::build_d(5, 0).unwrap();
    let result = dual_distance(&d, &EnumBudget::default());
    assert_eq!(result.exactness, Exactness::Exact);
    assert_eq!(result.value, 3);
}

/// Each listed column quadruple of the E generator at q = 4, t = 4 is
/// dependent, no triple is: dual distance exactly 4.
#[test]
fn e_q4_dual_distance_four_certified_by_columns() {
    let g = fixture_matrix(4, &E44);
    for quad in E44_QUADS {
        let sub = g.select_columns(&quad);
        assert!(sub.rank() < 4, "columns {quad:?} must be dependent");
    }
    assert!(g.min_dependent_columns(3).is_none(), "no dependent triple");

    let e = xl::build_e(4, 4).unwrap();
    let result = dual_distance(&e, &EnumBudget::default());
    assert_eq!(result.exactness, Exactness::Exact);
    assert_eq!(result.value, 4);
}

/// The frozen kernel combination over the listed E columns at q = 5,
/// t = 0 really sums to zero, computed long-hand on the fixture rows; no
/// dependent triple exists: dual distance exactly 4.
#[test]
fn e_q5_dual_distance_four_certified_by_kernel() {
    let tables = gf::ctx(5).unwrap().tables();
    for row in &E50 {
        let mut acc = 0u8;
        for (&col, &coef) in E50_QUAD.iter().zip(&E50_QUAD_KERNEL) {
            acc = tables.add(acc, tables.mul(coef, row[col]));
        }
        assert_eq!(acc, 0, "kernel combination must vanish on every row");
    }

    let g = fixture_matrix(5, &E50);
    assert!(g.min_dependent_columns(3).is_none(), "no dependent triple");

    let e = xl::build_e(5, 0).unwrap();
    let result = dual_distance(&e, &EnumBudget::default());
    assert_eq!(result.exactness, Exactness::Exact);
    assert_eq!(result.value, 4);
}

/// The (q, t) = (4, 0) exception for E: dual distance rises to 6.
#[test]
fn e_q4_t0_dual_distance_is_six() {
    let e = xl::build_e(4, 0).unwrap();
    assert!(e.gen.min_dependent_columns(5).is_none(), "no five dependent columns");
    let result = dual_distance(&e, &EnumBudget::default());
    assert_eq!(result.exactness, Exactness::Exact);
    assert_eq!(result.value, 6);
}
