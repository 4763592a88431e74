//! Golden-table snapshots: CSV writing, parsing, and comparison.
//!
//! A table run serializes to a 14-column CSV with header
//!
//! ```text
//! q,t,m,ell,inner,n,k,d_z,delta,d_x,pure,exact_z,exact_x,bound_status
//! ```
//!
//! where `pure` is `true`/`false`/`unknown` and `bound_status` is one of
//! the [`BoundStatus`] labels.  Golden reference files use the same
//! columns plus an optional trailing free-text `notes` column, which the
//! comparison ignores.
//!
//! [`compare`] is golden-driven: every golden row must be matched by a
//! generated record with the same key (q, t, m, ℓ, inner) and agreeing
//! values.  A generated record whose distance is only a lower bound is
//! accepted when the bound does not exceed the golden value (strict mode
//! insists on exactness); purity is compared only when both sides are
//! definite.  Independently of the golden rows, any generated record
//! graded [`BoundStatus::Violation`] is flagged.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use crate::css::{AqcRecord, BoundStatus, InnerFamily};
use crate::error::{Error, Result};

/// The 14 output columns, in order.
pub const CSV_HEADER: [&str; 14] = [
    "q", "t", "m", "ell", "inner", "n", "k", "d_z", "delta", "d_x", "pure", "exact_z", "exact_x",
    "bound_status",
];

fn pure_label(pure: Option<bool>) -> &'static str {
    match pure {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    }
}

fn parse_pure(s: &str) -> Result<Option<bool>> {
    match s {
        "true" => Ok(Some(true)),
        "false" => Ok(Some(false)),
        "unknown" => Ok(None),
        other => Err(Error::Parse {
            what: "golden csv".into(),
            detail: format!("purity must be true/false/unknown, got {other:?}"),
        }),
    }
}

/// Serialize records to the canonical CSV text.  The output is
/// byte-identical for identical record lists.
#[must_use]
pub fn records_to_csv(records: &[AqcRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in records {
        w.write_record([
            r.q.to_string(),
            r.t.to_string(),
            r.m.to_string(),
            r.ell.to_string(),
            r.inner.label().to_string(),
            r.n.to_string(),
            r.k.to_string(),
            r.d_z.to_string(),
            r.delta.to_string(),
            r.d_x.to_string(),
            pure_label(r.pure).to_string(),
            r.exact_z.to_string(),
            r.exact_x.to_string(),
            r.bound_status.label().to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

/// One parsed golden reference row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRow {
    /// Field order.
    pub q: u8,
    /// Subfield point count.
    pub t: u8,
    /// Outer column count.
    pub m: usize,
    /// Outer last-column fill.
    pub ell: usize,
    /// Inner family of the row.
    pub inner: InnerFamily,
    /// Block length.
    pub n: usize,
    /// Net dimension.
    pub k: usize,
    /// Reference d_z.
    pub d_z: usize,
    /// Designed distance of the outer code.
    pub delta: usize,
    /// Reference d_x.
    pub d_x: usize,
    /// Reference purity (may be unknown).
    pub pure: Option<bool>,
    /// Free-text annotations; ignored by [`compare`].
    pub notes: String,
}

/// Parse golden CSV text (14 columns, or 15 with a trailing `notes`).
///
/// # Errors
///
/// [`Error::Parse`] on header or field malformations.
pub fn parse_golden_csv(text: &str) -> Result<Vec<GoldenRow>> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .from_reader(text.as_bytes());
    {
        let headers = reader.headers().map_err(|e| Error::Parse {
            what: "golden csv".into(),
            detail: e.to_string(),
        })?;
        let got: Vec<&str> = headers.iter().collect();
        let ok = (got.len() == 14 || (got.len() == 15 && got[14] == "notes"))
            && got[..14] == CSV_HEADER;
        if !ok {
            return Err(Error::Parse {
                what: "golden csv".into(),
                detail: format!("unexpected header {got:?}"),
            });
        }
    }
    let mut rows = Vec::new();
    for (idx, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse {
            what: "golden csv".into(),
            detail: format!("row {}: {e}", idx + 2),
        })?;
        if record.len() != 14 && record.len() != 15 {
            return Err(Error::Parse {
                what: "golden csv".into(),
                detail: format!("row {}: expected 14 or 15 fields, got {}", idx + 2, record.len()),
            });
        }
        let field = |i: usize| record.get(i).unwrap_or("");
        let num = |name: &str, i: usize| -> Result<usize> {
            field(i).parse().map_err(|_| Error::Parse {
                what: "golden csv".into(),
                detail: format!("row {}: {name} is not an integer: {:?}", idx + 2, field(i)),
            })
        };
        rows.push(GoldenRow {
            q: num("q", 0)? as u8,
            t: num("t", 1)? as u8,
            m: num("m", 2)?,
            ell: num("ell", 3)?,
            inner: field(4).parse()?,
            n: num("n", 5)?,
            k: num("k", 6)?,
            d_z: num("d_z", 7)?,
            delta: num("delta", 8)?,
            d_x: num("d_x", 9)?,
            pure: parse_pure(field(10))?,
            notes: record.get(14).unwrap_or("").to_string(),
        });
    }
    Ok(rows)
}

/// Read and parse a golden file.
///
/// # Errors
///
/// [`Error::Io`] on read failure, otherwise as [`parse_golden_csv`].
pub fn read_golden(path: &Path) -> Result<Vec<GoldenRow>> {
    parse_golden_csv(&std::fs::read_to_string(path)?)
}

/// One disagreement between a generated table and a golden reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Field order of the row.
    pub q: u8,
    /// Subfield point count of the row.
    pub t: u8,
    /// Outer column count of the row.
    pub m: usize,
    /// Outer last-column fill of the row.
    pub ell: usize,
    /// Inner family of the row.
    pub inner: InnerFamily,
    /// Name of the disagreeing field.
    pub field: &'static str,
    /// The reference expectation.
    pub expected: String,
    /// What the generated table contains.
    pub got: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q={} t={} m={} ell={} inner={}: {} expected {}, got {}",
            self.q, self.t, self.m, self.ell, self.inner, self.field, self.expected, self.got
        )
    }
}

/// Compare generated records against golden rows.  Returns the list of
/// disagreements; an empty list means the table reproduces the reference.
///
/// With `require_exact`, a matched record whose distance is only a lower
/// bound is itself a mismatch; otherwise a lower bound is accepted
/// whenever it does not exceed the golden value.
#[must_use]
pub fn compare(records: &[AqcRecord], golden: &[GoldenRow], require_exact: bool) -> Vec<Mismatch> {
    let mut mismatches = Vec::new();
    let by_key: HashMap<(u8, u8, usize, usize, InnerFamily), &AqcRecord> = records
        .iter()
        .map(|r| ((r.q, r.t, r.m, r.ell, r.inner), r))
        .collect();
    for g in golden {
        let at = |field: &'static str, expected: String, got: String| Mismatch {
            q: g.q,
            t: g.t,
            m: g.m,
            ell: g.ell,
            inner: g.inner,
            field,
            expected,
            got,
        };
        let Some(r) = by_key.get(&(g.q, g.t, g.m, g.ell, g.inner)) else {
            mismatches.push(at("row", "present".into(), "missing".into()));
            continue;
        };
        for (field, expected, got) in
            [("n", g.n, r.n), ("k", g.k, r.k), ("delta", g.delta, r.delta)]
        {
            if expected != got {
                mismatches.push(at(field, expected.to_string(), got.to_string()));
            }
        }
        for (field, exact_field, exact, expected, got) in [
            ("d_z", "exact_z", r.exact_z, g.d_z, r.d_z),
            ("d_x", "exact_x", r.exact_x, g.d_x, r.d_x),
        ] {
            if exact {
                if expected != got {
                    mismatches.push(at(field, expected.to_string(), got.to_string()));
                }
            } else if require_exact {
                mismatches.push(at(exact_field, "true".into(), "false".into()));
            } else if got > expected {
                mismatches.push(at(
                    field,
                    format!("lower bound ≤ {expected}"),
                    got.to_string(),
                ));
            }
        }
        if let (Some(gp), Some(rp)) = (g.pure, r.pure) {
            if gp != rp {
                mismatches.push(at("pure", gp.to_string(), rp.to_string()));
            }
        }
    }
    // A bound violation is a defect regardless of the reference rows.
    for r in records {
        if r.bound_status == BoundStatus::Violation {
            mismatches.push(Mismatch {
                q: r.q,
                t: r.t,
                m: r.m,
                ell: r.ell,
                inner: r.inner,
                field: "bound_status",
                expected: "no VIOLATION".into(),
                got: BoundStatus::Violation.label().into(),
            });
        }
    }
    mismatches
}
