//! Asymmetric quantum codes from nested classical pairs, bound
//! certification, and table generation.
//!
//! # The CSS route
//!
//! A pair of classical codes C₁, C₂ ⊆ GF(q)ⁿ with C₁⊥ ⊆ C₂ yields an
//! asymmetric quantum code with parameters [[n, k₁ + k₂ − n, {d_z, d_x}]]_q
//! where
//!
//! ```text
//! d_z = wt(C₂ ∖ C₁⊥)        d_x = wt(C₁ ∖ C₂⊥)
//! ```
//!
//! and the code is *pure* exactly when d_z = d(C₂) and d_x = d(C₁).
//! [`derive_aqc`] computes all four distances with the engines in
//! [`crate::codes`] and reports purity whenever every constituent is exact.
//!
//! Here the pairs come from the XL family of [`crate::xl`]: a named inner
//! subcode I ⊂ C_q(t, m, ℓ) supplies C₁ = I⊥ and C₂ = C_q(t, m, ℓ), so the
//! net dimension is dim C₂ − dim I and d_x is controlled by the small dual
//! distance of I.  [`InnerFamily`] enumerates the available inner codes and
//! [`generate_table`] sweeps the whole (t, m, ℓ) grid for one q.
//!
//! # Dimension shortcuts
//!
//! For the four standard inner choices the net dimension has a closed form
//! in (m, ℓ) alone; [`theorem_k`] evaluates it after checking the
//! hypotheses under which the corresponding d_x value is guaranteed:
//!
//! | inner | d_x | net dimension  |
//! |-------|-----|----------------|
//! | rep   | 2   | m(m−1)/2 + ℓ     |
//! | D     | 3   | m(m−1)/2 + ℓ − 2 |
//! | E     | 4   | m(m−1)/2 + ℓ − 4 |
//! | F     | ≥ 5 | m(m−1)/2 + ℓ − 7 |
//!
//! # Optimality certification
//!
//! For exact (d_z, d_x) the dimension of any [[n, k, {d_z, d_x}]]_q code
//! obeys k ≤ log_q B_q(n, d_x) + log_q B_q(n, d_z) − n, where B_q(n, d) is
//! the largest size of a classical code with those parameters.  [`certify`]
//! instantiates B_q with the sharpest upper bound at hand — Singleton,
//! Griesmer, and an optional user-supplied [`BqTable`] — and grades each
//! record [`BoundStatus::Optimal`] (meets the cap), [`BoundStatus::BestKnown`]
//! (meets the table's lower bounds), [`BoundStatus::WithinBound`],
//! [`BoundStatus::Violation`], or [`BoundStatus::Unknown`] when a distance
//! is only bounded.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{is_subcode, min_distance, relative_weight, DistanceResult, EnumBudget, LinearCode};
use crate::error::{Error, Result};
use crate::gf;
use crate::xl::{self, XlSpec};

/// The inner subcodes available as the dual-contained side of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum InnerFamily {
    /// The repetition code C_q(t, 1, 0); dual distance 2.
    #[serde(rename = "rep")]
    Rep,
    /// D = C_q(t, 2, 1); dual distance 3 (4 at (q, t) = (4, 0)).
    #[serde(rename = "D")]
    D,
    /// E ⊂ C_q(t, 3, 2); dual distance 4 (6 at (q, t) = (4, 0)).
    #[serde(rename = "E")]
    E,
    /// The full member C_q(t, 3, 2) used directly as inner code.
    #[serde(rename = "V32")]
    V32,
    /// F ⊂ C_q(t, 4, 3); dual distance ≥ 5.
    #[serde(rename = "F")]
    F,
    /// F₁ = F ⊕ ⟨e_{1,3}⟩.
    #[serde(rename = "F1")]
    F1,
    /// F₂ = F ⊕ ⟨e_{2,3}⟩.
    #[serde(rename = "F2")]
    F2,
}

impl InnerFamily {
    /// Every family, in the fixed emission order used by [`generate_table`].
    pub const ALL: [InnerFamily; 7] = [
        InnerFamily::Rep,
        InnerFamily::D,
        InnerFamily::E,
        InnerFamily::V32,
        InnerFamily::F,
        InnerFamily::F1,
        InnerFamily::F2,
    ];

    /// Stable label used in CSV output and on the command line.
    #[must_use]
    pub fn label(self) -> &'static str {
        match self {
            InnerFamily::Rep => "rep",
            InnerFamily::D => "D",
            InnerFamily::E => "E",
            InnerFamily::V32 => "V32",
            InnerFamily::F => "F",
            InnerFamily::F1 => "F1",
            InnerFamily::F2 => "F2",
        }
    }

    /// Dimension of the inner code (independent of t).
    #[must_use]
    pub fn dim(self) -> usize {
        match self {
            InnerFamily::Rep => 1,
            InnerFamily::D => 3,
            InnerFamily::E => 5,
            InnerFamily::V32 => 6,
            InnerFamily::F => 8,
            InnerFamily::F1 | InnerFamily::F2 => 9,
        }
    }

    /// Smallest q for which the family is defined.
    #[must_use]
    pub fn min_q(self) -> u8 {
        match self {
            InnerFamily::Rep => 3,
            InnerFamily::D | InnerFamily::E | InnerFamily::V32 => 4,
            InnerFamily::F | InnerFamily::F1 | InnerFamily::F2 => 5,
        }
    }

    /// The dimension shortcut certified for this inner code, if any.
    #[must_use]
    pub fn theorem(self) -> Option<Theorem> {
        match self {
            InnerFamily::Rep => Some(Theorem::DxTwo),
            InnerFamily::D => Some(Theorem::DxThree),
            InnerFamily::E => Some(Theorem::DxFour),
            InnerFamily::F => Some(Theorem::DxFiveUp),
            InnerFamily::V32 | InnerFamily::F1 | InnerFamily::F2 => None,
        }
    }

    /// Build the inner code over GF(q) with t subfield points.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidSpec`] when q is below [`InnerFamily::min_q`];
    /// [`Error::UnsupportedField`] for an unsupported q.
    pub fn build(self, q: u8, t: u8) -> Result<LinearCode> {
        match self {
            InnerFamily::Rep => xl::build_repetition(q, t),
            InnerFamily::D => xl::build_d(q, t),
            InnerFamily::E => xl::build_e(q, t),
            InnerFamily::V32 => {
                if q < 4 {
                    return Err(Error::InvalidSpec {
                        reason: format!("inner family V32 requires q ≥ 4 (got q = {q})"),
                    });
                }
                xl::build_xl(&XlSpec { q, t, m: 3, ell: 2 })
            }
            InnerFamily::F => xl::build_f(q, t),
            InnerFamily::F1 => xl::build_f1(q, t),
            InnerFamily::F2 => xl::build_f2(q, t),
        }
    }
}

impl fmt::Display for InnerFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for InnerFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<InnerFamily> {
        InnerFamily::ALL
            .into_iter()
            .find(|f| f.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                what: "inner family".into(),
                detail: format!("unknown family {s:?}; expected one of rep, D, E, V32, F, F1, F2"),
            })
    }
}

/// The four dimension shortcuts, tagged by the d_x value they certify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Theorem {
    /// Inner code rep: d_x = 2, net dimension m(m−1)/2 + ℓ.
    DxTwo,
    /// Inner code D: d_x = 3, net dimension m(m−1)/2 + ℓ − 2.
    DxThree,
    /// Inner code E: d_x = 4, net dimension m(m−1)/2 + ℓ − 4.
    DxFour,
    /// Inner code F: d_x ≥ 5, net dimension m(m−1)/2 + ℓ − 7.
    DxFiveUp,
}

impl Theorem {
    /// Short label used in error messages.
    #[must_use]
    pub fn label(self) -> &'static str {
        match self {
            Theorem::DxTwo => "d_x=2",
            Theorem::DxThree => "d_x=3",
            Theorem::DxFour => "d_x=4",
            Theorem::DxFiveUp => "d_x>=5",
        }
    }
}

fn hypothesis_err<T>(which: Theorem, condition: &str) -> Result<T> {
    Err(Error::HypothesisViolation {
        theorem: which.label().into(),
        condition: condition.into(),
    })
}

/// Net dimension k of the asymmetric code built from the inner family of
/// `which` inside C_q(t, m, ℓ), after checking the hypotheses that
/// guarantee the certified d_x value:
///
/// * `DxTwo`: any valid tuple with m ≥ 2;
/// * `DxThree`: q ≥ 5 with m ≥ 3, or q = 4 with m = 3 and 1 ≤ t ≤ 4;
/// * `DxFour`: q ≥ 5 with m ≥ 4 or (m, ℓ) = (3, 2), or q = 4 with
///   (m, ℓ) = (3, 2) and 1 ≤ t ≤ 4;
/// * `DxFiveUp`: q ≥ 5 with m ≥ 5 or (m, ℓ) = (4, 3).
///
/// Within these hypotheses the result is always ≥ 1.
///
/// # Errors
///
/// [`Error::HypothesisViolation`] naming the failed condition; propagates
/// [`XlSpec::validated`].
pub fn theorem_k(which: Theorem, spec: &XlSpec) -> Result<usize> {
    let spec = spec.validated()?;
    let (q, t, m, ell) = (spec.q, spec.t, spec.m, spec.ell);
    let h = m * (m - 1) / 2;
    match which {
        Theorem::DxTwo => {
            if m < 2 {
                return hypothesis_err(which, "m ≥ 2 is required");
            }
            Ok(h + ell)
        }
        Theorem::DxThree => {
            if q == 4 {
                if m != 3 {
                    return hypothesis_err(which, "q = 4 requires m = 3");
                }
                if !(1..=4).contains(&t) {
                    return hypothesis_err(which, "q = 4 requires 1 ≤ t ≤ 4");
                }
            } else if q < 4 {
                return hypothesis_err(which, "q ≥ 4 is required");
            } else if m < 3 {
                return hypothesis_err(which, "m ≥ 3 is required");
            }
            Ok(h + ell - 2)
        }
        Theorem::DxFour => {
            if q == 4 {
                if m != 3 || ell != 2 {
                    return hypothesis_err(which, "q = 4 requires (m, ℓ) = (3, 2)");
                }
                if !(1..=4).contains(&t) {
                    return hypothesis_err(which, "q = 4 requires 1 ≤ t ≤ 4");
                }
            } else if q < 5 {
                return hypothesis_err(which, "q ≥ 4 is required");
            } else if m < 4 && !(m == 3 && ell == 2) {
                return hypothesis_err(which, "m ≥ 4 or (m, ℓ) = (3, 2) is required");
            }
            Ok(h + ell - 4)
        }
        Theorem::DxFiveUp => {
            if q < 5 {
                return hypothesis_err(which, "q ≥ 5 is required");
            }
            if m < 5 && !(m == 4 && ell == 3) {
                return hypothesis_err(which, "m ≥ 5 or (m, ℓ) = (4, 3) is required");
            }
            Ok(h + ell - 7)
        }
    }
}

/// Fully computed data of one derived asymmetric quantum code.
#[derive(Debug, Clone, Serialize)]
pub struct DerivedAqc {
    /// Field order.
    pub q: u8,
    /// Block length.
    pub n: usize,
    /// Net dimension k₁ + k₂ − n ≥ 1.
    pub k: usize,
    /// d(C₁), the classical distance controlling purity on the d_x side.
    pub d1: DistanceResult,
    /// d(C₂).
    pub d2: DistanceResult,
    /// d_z = wt(C₂ ∖ C₁⊥).
    pub dz: DistanceResult,
    /// d_x = wt(C₁ ∖ C₂⊥).
    pub dx: DistanceResult,
    /// Purity verdict, `None` while a constituent is only bounded.
    pub pure: Option<bool>,
}

/// Derive the asymmetric quantum code of the CSS pair (C₁, C₂) with
/// C₁⊥ ⊆ C₂, computing d_z, d_x, both classical distances, and purity.
///
/// # Errors
///
/// [`Error::LengthMismatch`] when the codes live in different ambient
/// spaces; [`Error::NotNested`] when C₁⊥ ⊄ C₂;
/// [`Error::ZeroDimension`] when k₁ + k₂ − n ≤ 0 (e.g. C₂ = C₁⊥, which
/// yields a trivial pair).
pub fn derive_aqc(c1: &LinearCode, c2: &LinearCode, budget: &EnumBudget) -> Result<DerivedAqc> {
    if c1.n != c2.n {
        return Err(Error::LengthMismatch { left: c1.n, right: c2.n });
    }
    let c1perp = c1.dual();
    if !is_subcode(&c1perp, c2)? {
        return Err(Error::NotNested {
            detail: "the dual of the first code is not contained in the second".into(),
        });
    }
    let k = c1.k as i64 + c2.k as i64 - c2.n as i64;
    if k <= 0 {
        return Err(Error::ZeroDimension { k });
    }
    let d2 = min_distance(c2, budget);
    derive_with_dual_and_d2(c1, &c1perp, c2, d2, budget)
}

/// The work shared by [`derive_aqc`] and [`generate_table`]: all remaining
/// distances given C₁, its dual, C₂, and a precomputed d(C₂).
fn derive_with_dual_and_d2(
    c1: &LinearCode,
    c1perp: &LinearCode,
    c2: &LinearCode,
    d2: DistanceResult,
    budget: &EnumBudget,
) -> Result<DerivedAqc> {
    let dz = relative_weight(c2, c1perp, budget)?;
    let c2perp = c2.dual();
    let dx = relative_weight(c1, &c2perp, budget)?;
    let d1 = min_distance(c1, budget);
    let pure = if d1.is_exact() && d2.is_exact() && dz.is_exact() && dx.is_exact() {
        Some(dz.value == d2.value && dx.value == d1.value)
    } else {
        None
    };
    Ok(DerivedAqc {
        q: c1.q,
        n: c1.n,
        k: (c1.k + c2.k - c2.n),
        d1,
        d2,
        dz,
        dx,
        pure,
    })
}

/// Certification outcome of one record against the active bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundStatus {
    /// k meets the cap from the sharpest available upper bounds.
    Optimal,
    /// k meets the table's lower bounds on both sides (but not the cap).
    BestKnown,
    /// k is below the cap with no table confirmation.
    WithinBound,
    /// k exceeds the cap — an inconsistency that must never occur.
    Violation,
    /// A distance is only a lower bound, so no grading applies.
    Unknown,
}

impl BoundStatus {
    /// Stable uppercase label used in CSV output.
    #[must_use]
    pub fn label(self) -> &'static str {
        match self {
            BoundStatus::Optimal => "OPTIMAL",
            BoundStatus::BestKnown => "BEST_KNOWN",
            BoundStatus::WithinBound => "WITHIN_BOUND",
            BoundStatus::Violation => "VIOLATION",
            BoundStatus::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for BoundStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for BoundStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<BoundStatus> {
        match s {
            "OPTIMAL" => Ok(BoundStatus::Optimal),
            "BEST_KNOWN" => Ok(BoundStatus::BestKnown),
            "WITHIN_BOUND" => Ok(BoundStatus::WithinBound),
            "VIOLATION" => Ok(BoundStatus::Violation),
            "UNKNOWN" => Ok(BoundStatus::Unknown),
            other => Err(Error::Parse {
                what: "bound status".into(),
                detail: format!("unknown status {other:?}"),
            }),
        }
    }
}

/// One row of a generated table: the derived code, its provenance in the
/// (t, m, ℓ) grid, and its certification.
#[derive(Debug, Clone, Serialize)]
pub struct AqcRecord {
    /// Field order.
    pub q: u8,
    /// Subfield point count of the outer code.
    pub t: u8,
    /// Outer column count.
    pub m: usize,
    /// Outer last-column fill.
    pub ell: usize,
    /// Inner family supplying C₁ = inner⊥.
    pub inner: InnerFamily,
    /// Block length.
    pub n: usize,
    /// Net dimension.
    pub k: usize,
    /// d_z value; when `exact_z` is false this is the best lower bound,
    /// never below the designed distance δ of the outer code.
    pub d_z: usize,
    /// Designed distance δ of the outer code.
    pub delta: usize,
    /// d_x value; a lower bound when `exact_x` is false.
    pub d_x: usize,
    /// Purity verdict, `None` while a constituent is only bounded.
    pub pure: Option<bool>,
    /// Whether `d_z` is exact.
    pub exact_z: bool,
    /// Whether `d_x` is exact.
    pub exact_x: bool,
    /// Certification against the active bounds.
    pub bound_status: BoundStatus,
}

/// The classical Singleton cap on the net dimension:
/// (n − d_x + 1) + (n − d_z + 1) − n.  May be ≤ 0 for strong distance
/// pairs, hence the signed return.
#[must_use]
pub fn singleton_bound_k(n: usize, d_x: usize, d_z: usize) -> i64 {
    n as i64 - d_x as i64 - d_z as i64 + 2
}

/// The largest k admitted by the Griesmer bound for an [n, k, d]_q code:
/// the maximal k with Σ_{i=0}^{k−1} ⌈d/qⁱ⌉ ≤ n.  For d = 1 this is n.
#[must_use]
pub fn griesmer_upper_k(q: u8, n: usize, d: usize) -> usize {
    assert!(d >= 1 && d <= n, "Griesmer bound needs 1 ≤ d ≤ n");
    let mut sum = 0usize;
    let mut k = 0usize;
    let mut qi: u128 = 1;
    loop {
        let term = (d as u128).div_ceil(qi) as usize;
        if sum + term > n {
            return k;
        }
        sum += term;
        k += 1;
        if k == n {
            return n;
        }
        qi = qi.saturating_mul(u128::from(q));
    }
}

/// An entry of a user-supplied best-known-codes table for one (q, n, d).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BqEntry {
    /// Dimension of the best known [n, k, d]_q code.
    pub k_lower: usize,
    /// Best known upper bound on that dimension.
    pub k_upper: usize,
}

/// A table of best-known classical code sizes, keyed by (q, n, d).
///
/// The text format is one entry per line, `q n d k_lower k_upper`,
/// whitespace-separated, with `#` starting a comment.  Duplicate keys keep
/// the last entry and record a warning.
#[derive(Debug, Clone, Default)]
pub struct BqTable {
    entries: HashMap<(u8, usize, usize), BqEntry>,
    /// Non-fatal anomalies observed while parsing (duplicate keys).
    pub warnings: Vec<String>,
}

impl BqTable {
    /// Parse the line-oriented text format.
    ///
    /// # Errors
    ///
    /// [`Error::Parse`] with the offending line number for malformed lines
    /// or entries violating k_lower ≤ k_upper ≤ n − d + 1.
    pub fn parse(text: &str) -> Result<BqTable> {
        let mut table = BqTable::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 5 {
                return Err(Error::Parse {
                    what: "bq table".into(),
                    detail: format!(
                        "line {line_no}: expected 5 fields `q n d k_lower k_upper`, got {}",
                        fields.len()
                    ),
                });
            }
            let num = |what: &str, s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::Parse {
                    what: "bq table".into(),
                    detail: format!("line {line_no}: {what} is not a non-negative integer: {s:?}"),
                })
            };
            let q = num("q", fields[0])?;
            let n = num("n", fields[1])?;
            let d = num("d", fields[2])?;
            let k_lower = num("k_lower", fields[3])?;
            let k_upper = num("k_upper", fields[4])?;
            if q < 2 || q > usize::from(u8::MAX) {
                return Err(Error::Parse {
                    what: "bq table".into(),
                    detail: format!("line {line_no}: q = {q} is not a valid field order"),
                });
            }
            if d < 1 || d > n {
                return Err(Error::Parse {
                    what: "bq table".into(),
                    detail: format!("line {line_no}: d = {d} is outside 1 ..= n = {n}"),
                });
            }
            if k_lower > k_upper || k_upper > n - d + 1 {
                return Err(Error::Parse {
                    what: "bq table".into(),
                    detail: format!(
                        "line {line_no}: need k_lower ≤ k_upper ≤ n − d + 1, got {k_lower} ≤ {k_upper} ≤ {}",
                        n - d + 1
                    ),
                });
            }
            let key = (q as u8, n, d);
            if table.entries.insert(key, BqEntry { k_lower, k_upper }).is_some() {
                table.warnings.push(format!(
                    "line {line_no}: duplicate entry for q={q} n={n} d={d}; keeping the later one"
                ));
            }
        }
        Ok(table)
    }

    /// Read and parse a table file.
    ///
    /// # Errors
    ///
    /// [`Error::Io`] on read failure, otherwise as [`BqTable::parse`].
    pub fn from_path(path: &Path) -> Result<BqTable> {
        BqTable::parse(&std::fs::read_to_string(path)?)
    }

    /// Look up the entry for (q, n, d).
    #[must_use]
    pub fn get(&self, q: u8, n: usize, d: usize) -> Option<&BqEntry> {
        self.entries.get(&(q, n, d))
    }

    /// Number of entries.
    #[must_use]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Whether the table holds no entries.
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The sharpest available upper bound on the dimension of an [n, ·, d]_q
/// code: the minimum of Singleton, Griesmer, and the table entry (if any).
#[must_use]
pub fn max_dim(q: u8, n: usize, d: usize, bq: Option<&BqTable>) -> usize {
    let singleton = n - d + 1;
    let griesmer = griesmer_upper_k(q, n, d);
    let table = bq
        .and_then(|t| t.get(q, n, d))
        .map_or(usize::MAX, |e| e.k_upper);
    singleton.min(griesmer).min(table)
}

/// Grade an [[n, k, {d_z, d_x}]]_q record with exact distances:
/// the cap is max_dim(n, d_x) + max_dim(n, d_z) − n.
#[must_use]
pub fn certify_exact(
    q: u8,
    n: usize,
    k: usize,
    d_z: usize,
    d_x: usize,
    bq: Option<&BqTable>,
) -> BoundStatus {
    let cap = max_dim(q, n, d_x, bq) as i64 + max_dim(q, n, d_z, bq) as i64 - n as i64;
    let k = k as i64;
    if k > cap {
        return BoundStatus::Violation;
    }
    if k == cap {
        return BoundStatus::Optimal;
    }
    if let Some(table) = bq {
        if let (Some(ex), Some(ez)) = (table.get(q, n, d_x), table.get(q, n, d_z)) {
            if k == ex.k_lower as i64 + ez.k_lower as i64 - n as i64 {
                return BoundStatus::BestKnown;
            }
        }
    }
    BoundStatus::WithinBound
}

/// Grade a record: [`BoundStatus::Unknown`] unless both distances are
/// exact, otherwise [`certify_exact`].
#[must_use]
pub fn certify(record: &AqcRecord, bq: Option<&BqTable>) -> BoundStatus {
    if !(record.exact_z && record.exact_x) {
        return BoundStatus::Unknown;
    }
    certify_exact(record.q, record.n, record.k, record.d_z, record.d_x, bq)
}

/// Options steering [`generate_table`].
#[derive(Debug, Clone, Default)]
pub struct TableOptions {
    /// Budget handed to every distance computation.
    pub budget: EnumBudget,
    /// Also emit the F₁ and F₂ rows (off by default: on the small fields
    /// they never beat the F rows).
    pub include_f12: bool,
    /// Restrict to these families; `None` selects the default set
    /// rep, D, E, V32, F (plus F₁, F₂ under `include_f12`).
    pub families: Option<Vec<InnerFamily>>,
}

impl TableOptions {
    fn family_list(&self) -> Vec<InnerFamily> {
        if let Some(families) = &self.families {
            return families.clone();
        }
        let mut list = vec![
            InnerFamily::Rep,
            InnerFamily::D,
            InnerFamily::E,
            InnerFamily::V32,
            InnerFamily::F,
        ];
        if self.include_f12 {
            list.push(InnerFamily::F1);
            list.push(InnerFamily::F2);
        }
        list
    }
}

/// Sweep the full (t, m, ℓ) grid for one q — t = 0 … q, m = 2 … q−1,
/// ℓ = 0 … m−1 — pairing every outer member with every applicable inner
/// family.  A family is emitted at a grid point when it is defined for q,
/// leaves net dimension ≥ 1, and is verified (by row reduction, not by
/// assumption) to be a subcode of the outer member.  d(C₂) is computed
/// once per grid point and shared across the families.
///
/// Rows are ordered by (t, m, ℓ, family order); the computation is
/// parallelized over grid points but the output order and content are
/// deterministic regardless of worker count.
///
/// # Errors
///
/// [`Error::UnsupportedField`] for an unsupported q; internal errors from
/// code construction are propagated.
pub fn generate_table(
    q: u8,
    opts: &TableOptions,
    bq: Option<&BqTable>,
) -> Result<Vec<AqcRecord>> {
    gf::ctx(q)?;
    let families = opts.family_list();
    let mut grid = Vec::new();
    for t in 0..=q {
        for m in 2..usize::from(q) {
            for ell in 0..m {
                grid.push((t, m, ell));
            }
        }
    }
    let per_point: Vec<Vec<AqcRecord>> = grid
        .par_iter()
        .map(|&(t, m, ell)| grid_point_records(q, t, m, ell, &families, &opts.budget, bq))
        .collect::<Result<_>>()?;
    Ok(per_point.into_iter().flatten().collect())
}

fn grid_point_records(
    q: u8,
    t: u8,
    m: usize,
    ell: usize,
    families: &[InnerFamily],
    budget: &EnumBudget,
    bq: Option<&BqTable>,
) -> Result<Vec<AqcRecord>> {
    let spec = XlSpec { q, t, m, ell };
    let outer = xl::build_xl(&spec)?;
    let params = spec.params()?;
    let d2 = min_distance(&outer, budget);
    let mut records = Vec::new();
    for &family in families {
        if q < family.min_q() {
            continue;
        }
        let inner = family.build(q, t)?;
        if inner.k >= outer.k {
            continue;
        }
        if !is_subcode(&inner, &outer)? {
            continue;
        }
        let c1 = inner.dual();
        let aqc = derive_with_dual_and_d2(&c1, &inner, &outer, d2.clone(), budget)?;
        records.push(make_record(&spec, family, params.delta, &aqc, bq));
    }
    Ok(records)
}

/// Assemble the CSV-facing record for a derived code: reported lower
/// bounds on d_z are floored at the designed distance, which certifies
/// d(C₂) ≤ d_z from below.
fn make_record(
    spec: &XlSpec,
    family: InnerFamily,
    delta: usize,
    aqc: &DerivedAqc,
    bq: Option<&BqTable>,
) -> AqcRecord {
    let exact_z = aqc.dz.is_exact();
    let exact_x = aqc.dx.is_exact();
    let d_z = if exact_z { aqc.dz.value } else { aqc.dz.value.max(delta) };
    let mut record = AqcRecord {
        q: spec.q,
        t: spec.t,
        m: spec.m,
        ell: spec.ell,
        inner: family,
        n: aqc.n,
        k: aqc.k,
        d_z,
        delta,
        d_x: aqc.dx.value,
        pure: aqc.pure,
        exact_z,
        exact_x,
        bound_status: BoundStatus::Unknown,
    };
    record.bound_status = certify(&record, bq);
    record
}

/// Derive the single record for one inner family inside C_q(t, m, ℓ),
/// with the full distance detail alongside.
///
/// # Errors
///
/// [`Error::InvalidSpec`] when the family is undefined for q;
/// [`Error::ZeroDimension`] when the inner code does not leave net
/// dimension ≥ 1; [`Error::NotNested`] when it is not contained in the
/// outer member; propagates [`XlSpec::validated`].
pub fn derive_record(
    spec: &XlSpec,
    family: InnerFamily,
    budget: &EnumBudget,
    bq: Option<&BqTable>,
) -> Result<(AqcRecord, DerivedAqc)> {
    let spec = spec.validated()?;
    let outer = xl::build_xl(&spec)?;
    let params = spec.params()?;
    let inner = family.build(spec.q, spec.t)?;
    if inner.k >= outer.k {
        return Err(Error::ZeroDimension {
            k: outer.k as i64 - inner.k as i64,
        });
    }
    if !is_subcode(&inner, &outer)? {
        return Err(Error::NotNested {
            detail: format!(
                "inner family {family} is not contained in C_{}({}, {}, {})",
                spec.q, spec.t, spec.m, spec.ell
            ),
        });
    }
    let d2 = min_distance(&outer, budget);
    let aqc = derive_with_dual_and_d2(&inner.dual(), &inner, &outer, d2, budget)?;
    let record = make_record(&spec, family, params.delta, &aqc, bq);
    Ok((record, aqc))
}
