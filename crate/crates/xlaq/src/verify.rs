//! Exhaustive verification sweeps for the structural claims behind the
//! family: the trace/norm separation property, the dual distances of the
//! named subcodes, the column-independence statements at t = q, and the
//! nesting lattice.
//!
//! Each sweep returns a [`VerifyReport`] of individual [`VerifyCase`]s.  A
//! case is [`CaseStatus::Fail`] when a hard claim is contradicted, and
//! [`CaseStatus::Finding`] when a computation legitimately refines a
//! stated expectation (the d(F⊥) sweep records such refinements rather
//! than failing); [`VerifyReport::passed`] tolerates findings but not
//! failures.

use serde::Serialize;

use crate::codes::{dual_distance, is_subcode, EnumBudget};
use crate::error::Result;
use crate::gf;
use crate::xl::{self, XlSpec};

/// Outcome of one verification case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseStatus {
    /// The claim holds as stated.
    Pass,
    /// The claim is contradicted.
    Fail,
    /// The computation refines the stated expectation without
    /// contradicting any hard claim.
    Finding,
}

/// One verified claim instance.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyCase {
    /// Human-readable case name, e.g. `d-dual q=5 t=2`.
    pub name: String,
    /// Outcome.
    pub status: CaseStatus,
    /// What was checked and what came out.
    pub detail: String,
}

/// The collected outcome of one or more sweeps.
#[derive(Debug, Clone, Default, Serialize)]
pub struct VerifyReport {
    /// All cases, in sweep order.
    pub cases: Vec<VerifyCase>,
}

impl VerifyReport {
    /// True when no case failed (findings are tolerated).
    #[must_use]
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.status != CaseStatus::Fail)
    }

    /// Counts as `(pass, finding, fail)`.
    #[must_use]
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for case in &self.cases {
            match case.status {
                CaseStatus::Pass => counts.0 += 1,
                CaseStatus::Finding => counts.1 += 1,
                CaseStatus::Fail => counts.2 += 1,
            }
        }
        counts
    }

    fn push(&mut self, name: String, status: CaseStatus, detail: String) {
        self.cases.push(VerifyCase { name, status, detail });
    }

    fn merge(&mut self, other: VerifyReport) {
        self.cases.extend(other.cases);
    }
}

/// The available sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sweep {
    /// Trace/norm separation on the field and on the canonical points.
    Separation,
    /// d(rep⊥) = 2 for every t.
    RepetitionDual,
    /// d(D⊥) = 3, except 4 at (q, t) = (4, 0).
    DDual,
    /// d(E⊥) = 4, except 6 at (q, t) = (4, 0).
    EDual,
    /// d(F⊥) ≥ 5, with refined expectation 6 at (5, t ≤ 3), (7, t ≤ 1),
    /// (8, 0).
    FDual,
    /// At t = q every 3 columns of the E generator are independent.
    ETriples,
    /// At t = q every 4 columns of the F generator are independent.
    FQuadruples,
    /// The structural nesting lattice and the named subcode chains.
    Nesting,
}

impl Sweep {
    /// Every sweep, in canonical order.
    pub const ALL: [Sweep; 8] = [
        Sweep::Separation,
        Sweep::RepetitionDual,
        Sweep::DDual,
        Sweep::EDual,
        Sweep::FDual,
        Sweep::ETriples,
        Sweep::FQuadruples,
        Sweep::Nesting,
    ];

    /// Stable name used in reports.
    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            Sweep::Separation => "separation",
            Sweep::RepetitionDual => "repetition-dual",
            Sweep::DDual => "d-dual",
            Sweep::EDual => "e-dual",
            Sweep::FDual => "f-dual",
            Sweep::ETriples => "e-triples",
            Sweep::FQuadruples => "f-quadruples",
            Sweep::Nesting => "nesting",
        }
    }

    /// Smallest q to which the sweep applies.
    fn min_q(self) -> u8 {
        match self {
            Sweep::Separation | Sweep::RepetitionDual | Sweep::Nesting => 3,
            Sweep::DDual | Sweep::EDual | Sweep::ETriples => 4,
            Sweep::FDual | Sweep::FQuadruples => 5,
        }
    }
}

/// The refined expectation for d(F⊥): 6 on a short list of small (q, t)
/// pairs, 5 everywhere else.
#[must_use]
pub fn expected_f_dual(q: u8, t: u8) -> usize {
    match (q, t) {
        (5, 0..=3) | (7, 0..=1) | (8, 0) => 6,
        _ => 5,
    }
}

/// Run one sweep over the given fields (unsupported or inapplicable q are
/// skipped silently).
///
/// # Errors
///
/// Propagates construction errors; none occur for supported q.
pub fn run_sweep(sweep: Sweep, qs: &[u8], budget: &EnumBudget) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for &q in qs {
        if q < sweep.min_q() || gf::ctx(q).is_err() {
            continue;
        }
        match sweep {
            Sweep::Separation => separation_cases(q, &mut report)?,
            Sweep::RepetitionDual => dual_sweep_cases(sweep, q, budget, &mut report)?,
            Sweep::DDual => dual_sweep_cases(sweep, q, budget, &mut report)?,
            Sweep::EDual => dual_sweep_cases(sweep, q, budget, &mut report)?,
            Sweep::FDual => dual_sweep_cases(sweep, q, budget, &mut report)?,
            Sweep::ETriples => independence_cases(q, 3, &mut report)?,
            Sweep::FQuadruples => independence_cases(q, 4, &mut report)?,
            Sweep::Nesting => nesting_cases(q, &mut report)?,
        }
    }
    Ok(report)
}

/// Run every applicable sweep.
///
/// # Errors
///
/// As [`run_sweep`].
pub fn run_all(qs: &[u8], budget: &EnumBudget) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for sweep in Sweep::ALL {
        report.merge(run_sweep(sweep, qs, budget)?);
    }
    Ok(report)
}

fn separation_cases(q: u8, report: &mut VerifyReport) -> Result<()> {
    let lemma = gf::verify_trace_norm_lemma(gf::ctx(q)?);
    let name = format!("separation q={q}");
    if lemma.pass {
        report.push(
            name,
            CaseStatus::Pass,
            format!(
                "{} field pairs and {} point pairs separated by (trace, norm)",
                lemma.field_pairs_checked, lemma.point_pairs_checked
            ),
        );
    } else {
        let (x, y) = lemma.counterexample.expect("failed lemma has a witness");
        report.push(name, CaseStatus::Fail, format!("counterexample: x = {x}, y = {y}"));
    }
    Ok(())
}

fn dual_sweep_cases(
    sweep: Sweep,
    q: u8,
    budget: &EnumBudget,
    report: &mut VerifyReport,
) -> Result<()> {
    for t in 0..=q {
        let (code, expected) = match sweep {
            Sweep::RepetitionDual => (xl::build_repetition(q, t)?, 2),
            Sweep::DDual => (xl::build_d(q, t)?, if (q, t) == (4, 0) { 4 } else { 3 }),
            Sweep::EDual => (xl::build_e(q, t)?, if (q, t) == (4, 0) { 6 } else { 4 }),
            Sweep::FDual => (xl::build_f(q, t)?, expected_f_dual(q, t)),
            _ => unreachable!("not a dual-distance sweep"),
        };
        let result = dual_distance(&code, budget);
        let name = format!("{} q={q} t={t}", sweep.name());
        if !result.is_exact() {
            report.push(
                name,
                CaseStatus::Fail,
                format!("budget exhausted at lower bound {}", result.value),
            );
        } else if result.value == expected {
            report.push(name, CaseStatus::Pass, format!("dual distance {}", result.value));
        } else if sweep == Sweep::FDual && result.value >= 5 {
            // The hard claim is d(F⊥) ≥ 5; a value differing from the
            // refined expectation is reported, not failed.
            report.push(
                name,
                CaseStatus::Finding,
                format!("dual distance {} (expected {expected})", result.value),
            );
        } else {
            report.push(
                name,
                CaseStatus::Fail,
                format!("dual distance {} (expected {expected})", result.value),
            );
        }
    }
    Ok(())
}

fn independence_cases(q: u8, size: usize, report: &mut VerifyReport) -> Result<()> {
    let t = q;
    let code = if size == 3 { xl::build_e(q, t)? } else { xl::build_f(q, t)? };
    let name = format!(
        "{} q={q} t={t}",
        if size == 3 { Sweep::ETriples.name() } else { Sweep::FQuadruples.name() }
    );
    match code.gen.min_dependent_columns(size) {
        None => report.push(
            name,
            CaseStatus::Pass,
            format!("every {size} columns of the {}×{} generator are independent", code.k, code.n),
        ),
        Some(set) => report.push(
            name,
            CaseStatus::Fail,
            format!("dependent columns {:?} with kernel {:?}", set.cols, set.kernel),
        ),
    }
    Ok(())
}

fn nesting_cases(q: u8, report: &mut VerifyReport) -> Result<()> {
    for t in [0, q] {
        let mut specs = Vec::new();
        for m in 1..usize::from(q) {
            for ell in 0..m {
                specs.push(XlSpec { q, t, m, ell });
            }
        }
        let codes: Vec<_> = specs.iter().map(xl::build_xl).collect::<Result<_>>()?;
        let mut checked = 0usize;
        let mut failures = Vec::new();
        for (a, ca) in specs.iter().zip(&codes) {
            for (b, cb) in specs.iter().zip(&codes) {
                checked += 1;
                let structural = xl::nested(a, b);
                let semantic = is_subcode(ca, cb)?;
                if structural != semantic {
                    failures.push(format!(
                        "({},{}) vs ({},{}): structural {structural}, semantic {semantic}",
                        a.m, a.ell, b.m, b.ell
                    ));
                } else if structural && xl::codimension(a, b)? != cb.k - ca.k {
                    failures.push(format!("codimension formula wrong for ({},{}) ⊂ ({},{})", a.m, a.ell, b.m, b.ell));
                }
            }
        }
        // The named subcode chains over the same points.
        if q >= 4 {
            let d = xl::build_d(q, t)?;
            let e = xl::build_e(q, t)?;
            let v32 = xl::build_xl(&XlSpec { q, t, m: 3, ell: 2 })?;
            for (label, sub, sup) in [("D ⊂ V[3,2]", &d, &v32), ("E ⊂ V[3,2]", &e, &v32)] {
                checked += 1;
                if !is_subcode(sub, sup)? {
                    failures.push(label.into());
                }
            }
        }
        if q >= 5 {
            let f = xl::build_f(q, t)?;
            let f1 = xl::build_f1(q, t)?;
            let f2 = xl::build_f2(q, t)?;
            let v43 = xl::build_xl(&XlSpec { q, t, m: 4, ell: 3 })?;
            for (label, sub, sup) in [
                ("F ⊂ F1", &f, &f1),
                ("F ⊂ F2", &f, &f2),
                ("F1 ⊂ V[4,3]", &f1, &v43),
                ("F2 ⊂ V[4,3]", &f2, &v43),
            ] {
                checked += 1;
                if !is_subcode(sub, sup)? {
                    failures.push(label.into());
                }
            }
        }
        let name = format!("nesting q={q} t={t}");
        if failures.is_empty() {
            report.push(name, CaseStatus::Pass, format!("{checked} containment checks"));
        } else {
            report.push(name, CaseStatus::Fail, failures.join("; "));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separation_passes_everywhere() {
        let report = run_sweep(Sweep::Separation, &[3, 4, 5, 7, 8, 9], &EnumBudget::default()).unwrap();
        assert_eq!(report.cases.len(), 6);
        assert!(report.passed());
        assert_eq!(report.counts(), (6, 0, 0));
    }

    #[test]
    fn repetition_dual_sweep_small_fields() {
        let report = run_sweep(Sweep::RepetitionDual, &[3, 4], &EnumBudget::default()).unwrap();
        assert_eq!(report.cases.len(), 4 + 5);
        assert!(report.passed());
    }

    #[test]
    fn d_dual_sweep_covers_the_q4_exception() {
        let report = run_sweep(Sweep::DDual, &[4], &EnumBudget::default()).unwrap();
        assert!(report.passed());
        assert!(report.cases[0].detail.contains("dual distance 4"));
        for case in &report.cases[1..] {
            assert!(case.detail.contains("dual distance 3"), "{case:?}");
        }
    }

    #[test]
    fn inapplicable_fields_are_skipped() {
        let report = run_sweep(Sweep::FDual, &[3, 4], &EnumBudget::default()).unwrap();
        assert!(report.cases.is_empty());
    }

    #[test]
    fn nesting_sweep_q4() {
        let report = run_sweep(Sweep::Nesting, &[4], &EnumBudget::default()).unwrap();
        assert!(report.passed(), "{:?}", report.cases);
    }

    #[test]
    fn expected_f_dual_pairs() {
        assert_eq!(expected_f_dual(5, 3), 6);
        assert_eq!(expected_f_dual(5, 4), 5);
        assert_eq!(expected_f_dual(7, 1), 6);
        assert_eq!(expected_f_dual(7, 2), 5);
        assert_eq!(expected_f_dual(8, 0), 6);
        assert_eq!(expected_f_dual(8, 1), 5);
        assert_eq!(expected_f_dual(9, 0), 5);
    }
}
