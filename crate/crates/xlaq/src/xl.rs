//! The XL evaluation-code family C_q(t, m, ℓ) and its distinguished
//! subcodes.
//!
//! # Construction
//!
//! Fix a supported q and its tower GF(q²)/GF(q) from [`crate::gf`].  For
//! 0 ≤ i ≤ j the symmetrized monomials
//!
//! ```text
//! e_{i,j}(x) = x^{iq+j} + x^{jq+i}   (i < j),        e_{i,i}(x) = x^{i(q+1)}
//! ```
//!
//! are Frobenius-stable (raising to the q-th power swaps the two terms,
//! since x^{q²} = x on GF(q²)), so they evaluate into GF(q) at *every* point
//! of GF(q²).  The space
//!
//! ```text
//! V_{m,ℓ} = ⟨ e_{i,j} : 0 ≤ i ≤ j ≤ m−2 ⟩ ⊕ ⟨ e_{i,m−1} : 0 ≤ i ≤ ℓ ⟩
//! ```
//!
//! is spanned by full columns j = 0 … m−2 plus a partial last column, and
//! the code C_q(t, m, ℓ) collects the evaluations of V_{m,ℓ} at the first t
//! subfield points α₁ … α_t followed by all r = (q²−q)/2 conjugate-pair
//! representatives β₁ … β_r.  Basis rows are ordered column-major —
//! e_{0,0}, e_{0,1}, e_{1,1}, e_{0,2}, … — so generator matrices are
//! reproducible entry-for-entry.
//!
//! # Parameters
//!
//! C_q(t, m, ℓ) is an [n, k] code with n = t + r and k = m(m−1)/2 + ℓ + 1,
//! and its minimum distance is at least the designed distance δ computed by
//! [`XlSpec::params`]; see [`XlParams::delta`] for the exact expression.
//!
//! # Distinguished subcodes
//!
//! Five named subcodes with small known dual distances feed the asymmetric
//! quantum constructions in [`crate::css`]:
//!
//! * [`build_repetition`] — C_q(t, 1, 0), the repetition code (dual
//!   distance 2);
//! * [`build_d`] — D = C_q(t, 2, 1), spanned by {1, trace, norm}
//!   (dual distance 3, except 4 at (q, t) = (4, 0)); requires q ≥ 4 so that
//!   a strictly larger XL code exists;
//! * [`build_e`] — E, spanned by {1, Tr, Tr², N, N²} ⊂ V_{3,2} (dual
//!   distance 4, except 6 at (4, 0)); requires q ≥ 4;
//! * [`build_f`] — F, spanned by {1, N, N², N³, Tr, Tr², Tr³, e_{1,2}}
//!   ⊂ V_{4,3} (dual distance ≥ 5); requires q ≥ 5;
//! * [`build_f1`] / [`build_f2`] — F extended by the row e_{1,3},
//!   respectively e_{2,3}; V_{4,3} = F ⊕ ⟨e_{1,3}, e_{2,3}⟩.
//!
//! The span identities behind the containments — Tr² = e_{0,2} + 2·e_{1,1}
//! and Tr³ = e_{0,3} + 3·e_{1,2} — are asserted as tests rather than
//! assumed.

use serde::Serialize;

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{self, FieldCtx, FieldElement};
use crate::linalg::GfMatrix;

/// The parameter tuple (q, t, m, ℓ) selecting one member of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct XlSpec {
    /// Field order, one of {3, 4, 5, 7, 8, 9}.
    pub q: u8,
    /// Number of subfield evaluation points, 0 ≤ t ≤ q.
    pub t: u8,
    /// Column count of the monomial triangle, 1 ≤ m ≤ q − 1 (m = 1 gives
    /// the repetition code).
    pub m: usize,
    /// Fill of the last column, 0 ≤ ℓ ≤ m − 1.
    pub ell: usize,
}

/// Derived parameters of one family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct XlParams {
    /// Block length n = t + (q² − q)/2.
    pub n: usize,
    /// Dimension k = m(m−1)/2 + ℓ + 1.
    pub k: usize,
    /// Designed distance: the minimum distance is known to be at least
    /// n − ½(q(m−1) + ℓ + g), and since distances are integers, δ is the
    /// ceiling of that (never below 1).  For m = 1 the code is the
    /// repetition code and δ = n exactly.
    pub delta: usize,
    /// The combinatorial correction term g entering δ:
    ///
    /// ```text
    /// q odd:                 g = min{ max{2(m−2), m+ℓ−1}, t }
    /// q even, ℓ ≤ m−2:       g = max{ min{m−2, t}, 2t−q }
    /// q even, ℓ = m−1:       g = max{ min{m−1, t}, 2t−q }
    /// ```
    pub g: usize,
}

impl XlSpec {
    /// Validate the tuple against the admissible ranges.
    ///
    /// # Errors
    ///
    /// [`Error::UnsupportedField`] for an unsupported q;
    /// [`Error::InvalidSpec`] when t > q, m is outside 1 … q−1, or
    /// ℓ > m − 1.
    pub fn validated(self) -> Result<XlSpec> {
        gf::ctx(self.q)?;
        if self.t > self.q {
            return Err(Error::InvalidSpec {
                reason: format!("t = {} exceeds q = {}", self.t, self.q),
            });
        }
        if self.m < 1 || self.m > usize::from(self.q) - 1 {
            return Err(Error::InvalidSpec {
                reason: format!(
                    "m = {} is outside the admissible range 1 ..= {}",
                    self.m,
                    self.q - 1
                ),
            });
        }
        if self.ell > self.m - 1 {
            return Err(Error::InvalidSpec {
                reason: format!("ℓ = {} exceeds m − 1 = {}", self.ell, self.m - 1),
            });
        }
        Ok(self)
    }

    /// The derived parameters (n, k, δ, g).
    ///
    /// # Errors
    ///
    /// Propagates [`XlSpec::validated`].
    pub fn params(&self) -> Result<XlParams> {
        let spec = self.validated()?;
        let q = usize::from(spec.q);
        let t = usize::from(spec.t);
        let r = (q * q - q) / 2;
        let n = t + r;
        let k = spec.m * (spec.m - 1) / 2 + spec.ell + 1;
        let (delta, g) = delta_and_g(q, t, spec.m, spec.ell, n);
        Ok(XlParams { n, k, delta, g })
    }
}

/// The designed distance δ and its correction term g.
fn delta_and_g(q: usize, t: usize, m: usize, ell: usize, n: usize) -> (usize, usize) {
    if m == 1 {
        // Repetition code: the distance is exactly n.
        return (n, 0);
    }
    let g = if q % 2 == 1 {
        (2 * (m - 2)).max(m + ell - 1).min(t)
    } else if ell <= m - 2 {
        (m - 2).min(t).max((2 * t).saturating_sub(q))
    } else {
        (m - 1).min(t).max((2 * t).saturating_sub(q))
    };
    // δ = ceil(n − (q(m−1) + ℓ + g)/2), floored at 1.
    let twice = 2 * n as i64 - (q * (m - 1) + ell + g) as i64;
    let delta = (twice + 1).div_euclid(2).max(1) as usize;
    (delta, g)
}

/// One symmetrized basis monomial e_{i,j}, 0 ≤ i ≤ j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BasisPoly {
    /// Row index within the column.
    pub i: usize,
    /// Column index.
    pub j: usize,
}

impl BasisPoly {
    /// Evaluate at a point of GF(q²); the result is Frobenius-fixed and
    /// therefore lies in GF(q).
    #[must_use]
    pub fn eval(&self, ctx: &FieldCtx, x: FieldElement) -> FieldElement {
        let q = u64::from(ctx.q);
        let (i, j) = (self.i as u64, self.j as u64);
        let first = ctx.pow(x, i * q + j);
        if self.i == self.j {
            first
        } else {
            ctx.add(first, ctx.pow(x, j * q + i))
        }
    }
}

impl std::fmt::Display for BasisPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "e[{},{}]", self.i, self.j)
    }
}

/// The ordered basis of V_{m,ℓ}: full columns j = 0 … m−2 (i ascending
/// within each), then the partial column m−1 up to row ℓ.
#[must_use]
pub fn basis_polys(m: usize, ell: usize) -> Vec<BasisPoly> {
    let mut polys = Vec::with_capacity(m * (m - 1) / 2 + ell + 1);
    for j in 0..m - 1 {
        for i in 0..=j {
            polys.push(BasisPoly { i, j });
        }
    }
    for i in 0..=ell {
        polys.push(BasisPoly { i, j: m - 1 });
    }
    polys
}

/// Build C_q(t, m, ℓ): evaluate the ordered basis of V_{m,ℓ} at the
/// canonical points.  The generator keeps the basis row order, its entries
/// all lie in GF(q), and its rank is exactly k = m(m−1)/2 + ℓ + 1.
///
/// # Errors
///
/// Propagates [`XlSpec::validated`].
pub fn build_xl(spec: &XlSpec) -> Result<LinearCode> {
    let spec = spec.validated()?;
    let ctx = gf::ctx(spec.q)?;
    let points = ctx.eval_points(spec.t)?;
    let rows: Vec<Vec<u8>> = basis_polys(spec.m, spec.ell)
        .iter()
        .map(|p| points.iter().map(|&x| ctx.symbol(p.eval(ctx, x))).collect())
        .collect();
    let code = LinearCode::new(GfMatrix::from_rows(spec.q, &rows)?)?;
    assert_eq!(code.k, spec.params()?.k, "basis rows must be independent");
    Ok(code)
}

/// Row expressions used by the named subcode generators.
enum RowExpr {
    /// The constant 1.
    One,
    /// Tr(x)^p = (x^q + x)^p.
    TracePow(u32),
    /// N(x)^p = x^{p(q+1)}.
    NormPow(u32),
    /// A single e_{i,j}.
    Basis(usize, usize),
}

fn eval_expr(ctx: &FieldCtx, expr: &RowExpr, x: FieldElement) -> FieldElement {
    match *expr {
        RowExpr::One => FieldElement::Pow(0),
        RowExpr::TracePow(p) => ctx.pow(ctx.trace(x), u64::from(p)),
        RowExpr::NormPow(p) => ctx.pow(ctx.norm(x), u64::from(p)),
        RowExpr::Basis(i, j) => BasisPoly { i, j }.eval(ctx, x),
    }
}

fn build_from_exprs(q: u8, t: u8, exprs: &[RowExpr]) -> Result<LinearCode> {
    let ctx = gf::ctx(q)?;
    let points = ctx.eval_points(t)?;
    let rows: Vec<Vec<u8>> = exprs
        .iter()
        .map(|e| {
            points
                .iter()
                .map(|&x| ctx.symbol(eval_expr(ctx, e, x)))
                .collect()
        })
        .collect();
    LinearCode::new(GfMatrix::from_rows(q, &rows)?)
}

fn require_min_q(q: u8, min_q: u8, family: &str) -> Result<()> {
    gf::ctx(q)?;
    if q < min_q {
        return Err(Error::InvalidSpec {
            reason: format!("inner family {family} requires q ≥ {min_q} (got q = {q})"),
        });
    }
    Ok(())
}

/// The repetition code C_q(t, 1, 0) = ⟨𝟙⟩.
///
/// # Errors
///
/// Propagates [`XlSpec::validated`].
pub fn build_repetition(q: u8, t: u8) -> Result<LinearCode> {
    build_xl(&XlSpec { q, t, m: 1, ell: 0 })
}

/// The subcode D = C_q(t, 2, 1), spanned by {1, x^q + x, x^{q+1}} — the
/// constant, trace, and norm rows, in that order.  Requires q ≥ 4, the
/// range on which a strictly larger family member exists above it.
///
/// # Errors
///
/// [`Error::InvalidSpec`] when q < 4; otherwise propagates
/// [`XlSpec::validated`].
pub fn build_d(q: u8, t: u8) -> Result<LinearCode> {
    require_min_q(q, 4, "D")?;
    build_xl(&XlSpec { q, t, m: 2, ell: 1 })
}

/// The subcode E ⊂ C_q(t, 3, 2), spanned by {1, Tr, Tr², N, N²} in that
/// row order.  Requires q ≥ 4.
///
/// # Errors
///
/// [`Error::InvalidSpec`] when q < 4; otherwise propagates
/// [`XlSpec::validated`].
pub fn build_e(q: u8, t: u8) -> Result<LinearCode> {
    require_min_q(q, 4, "E")?;
    build_from_exprs(
        q,
        t,
        &[
            RowExpr::One,
            RowExpr::TracePow(1),
            RowExpr::TracePow(2),
            RowExpr::NormPow(1),
            RowExpr::NormPow(2),
        ],
    )
}

const F_EXPRS: [RowExpr; 8] = [
    RowExpr::One,
    RowExpr::NormPow(1),
    RowExpr::NormPow(2),
    RowExpr::NormPow(3),
    RowExpr::TracePow(1),
    RowExpr::TracePow(2),
    RowExpr::TracePow(3),
    RowExpr::Basis(1, 2),
];

/// The subcode F ⊂ C_q(t, 4, 3), spanned by
/// {1, N, N², N³, Tr, Tr², Tr³, e_{1,2}} in that row order.  Requires
/// q ≥ 5 (V_{4,3} needs m = 4 ≤ q − 1).
///
/// # Errors
///
/// [`Error::InvalidSpec`] when q < 5; otherwise propagates
/// [`XlSpec::validated`].
pub fn build_f(q: u8, t: u8) -> Result<LinearCode> {
    require_min_q(q, 5, "F")?;
    build_from_exprs(q, t, &F_EXPRS)
}

fn build_f_extended(q: u8, t: u8, extra: RowExpr, family: &str) -> Result<LinearCode> {
    require_min_q(q, 5, family)?;
    let mut exprs: Vec<RowExpr> = F_EXPRS.into_iter().collect();
    exprs.push(extra);
    build_from_exprs(q, t, &exprs)
}

/// F₁ = F ⊕ ⟨e_{1,3}⟩, sitting strictly between F and C_q(t, 4, 3).
///
/// # Errors
///
/// As for [`build_f`].
pub fn build_f1(q: u8, t: u8) -> Result<LinearCode> {
    build_f_extended(q, t, RowExpr::Basis(1, 3), "F1")
}

/// F₂ = F ⊕ ⟨e_{2,3}⟩, the sibling extension of F.
///
/// # Errors
///
/// As for [`build_f`].
pub fn build_f2(q: u8, t: u8) -> Result<LinearCode> {
    build_f_extended(q, t, RowExpr::Basis(2, 3), "F2")
}

/// Structural containment on parameter tuples: V_{m,ℓ} ⊆ V_{s,j} exactly
/// when m < s (all of V_{m,ℓ}'s columns are full columns of V_{s,j}) or
/// m = s with ℓ ≤ j.  Requires matching q and t to compare codes at all.
#[must_use]
pub fn nested(sub: &XlSpec, sup: &XlSpec) -> bool {
    sub.q == sup.q
        && sub.t == sup.t
        && (sub.m < sup.m || (sub.m == sup.m && sub.ell <= sup.ell))
}

/// Dimension difference of a structurally nested pair:
/// dim C_q(t,s,j) − dim C_q(t,m,ℓ) = s(s−1)/2 − m(m−1)/2 + j − ℓ.
///
/// # Errors
///
/// [`Error::NotNested`] when the tuples are not structurally nested;
/// propagates [`XlSpec::validated`].
pub fn codimension(sub: &XlSpec, sup: &XlSpec) -> Result<usize> {
    let sub = sub.validated()?;
    let sup = sup.validated()?;
    if !nested(&sub, &sup) {
        return Err(Error::NotNested {
            detail: format!(
                "(q={}, t={}, m={}, ℓ={}) does not sit inside (q={}, t={}, m={}, ℓ={})",
                sub.q, sub.t, sub.m, sub.ell, sup.q, sup.t, sup.m, sup.ell
            ),
        });
    }
    Ok(sup.params()?.k - sub.params()?.k)
}
