//! Linear codes over GF(q) and their distance computations.
//!
//! # Codes
//!
//! A [`LinearCode`] is a full-row-rank generator matrix together with its
//! derived parameters.  Duals, nesting tests, and parity checks are thin
//! wrappers over [`crate::linalg`].
//!
//! # Distance engines
//!
//! Three independent engines compute minimum weights, and they cross-check
//! one another in the test suite:
//!
//! * **ENUM** — exhaustive codeword enumeration.  Messages are scanned in
//!   lexicographic order restricted to a first-nonzero-coordinate of 1 (one
//!   representative per scalar class), with the running codeword and its
//!   weight updated incrementally.  Used whenever qᵏ fits the configured
//!   limit; always exact, and the witness is the codeword of the
//!   lexicographically least minimum-weight message.
//! * **BZ** — the information-set bound refinement: systematic generators on
//!   greedily chosen disjoint information sets (rank-deficient tail sets
//!   included), enumerating low-weight messages against every set and
//!   terminating once the accumulated lower bound meets the best codeword
//!   found.
//! * **COLDEP** — column-dependence search: the minimum distance equals the
//!   size of the smallest dependent column set of a parity-check matrix, and
//!   the dual distance that of the generator matrix, both found by
//!   [`crate::linalg::GfMatrix::min_dependent_columns_budgeted`].
//!
//! Beyond the enumeration threshold the driver interleaves COLDEP and BZ
//! rounds, always running the engine whose next round is estimated cheaper,
//! and combines their certified lower bounds.  When the work budget runs out
//! the result degrades honestly to a [`Exactness::LowerBound`].
//!
//! # Relative weights
//!
//! [`relative_weight`] computes wt(C₂ \ C₁) for nested C₁ ⊂ C₂ — the
//! quantity behind both distances of a CSS pair.  Small codes enumerate
//! directly; large ones enumerate the weight-w codewords of C₂ level by
//! level (w = d(C₂), d(C₂)+1, …) through dependent column sets of the
//! parity-check matrix, testing each against C₁ membership, and escalate a
//! bounded number of levels before settling for a lower bound.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf;
use crate::linalg::{DependenceSearch, GfMatrix, RowBasis};

/// A linear [n, k] code over GF(q), presented by a full-row-rank generator.
#[derive(Debug, Clone, Serialize)]
pub struct LinearCode {
    /// Field order.
    pub q: u8,
    /// Block length.
    pub n: usize,
    /// Dimension.
    pub k: usize,
    /// k×n generator matrix, rows exactly as constructed.
    pub gen: GfMatrix,
}

/// How far a distance computation got.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Exactness {
    /// The reported value is the true minimum.
    Exact,
    /// The reported value is a certified lower bound only.
    LowerBound,
}

/// Which engine produced (or certified) the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    /// Exhaustive codeword enumeration.
    #[serde(rename = "ENUM")]
    Enum,
    /// Information-set enumeration with accumulated lower bounds.
    #[serde(rename = "BZ")]
    Bz,
    /// Minimal dependent column sets of a parity-check or generator matrix.
    #[serde(rename = "COLDEP")]
    ColDep,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Enum => "ENUM",
            Method::Bz => "BZ",
            Method::ColDep => "COLDEP",
        })
    }
}

/// Result of a minimum-distance or relative-weight computation.
#[derive(Debug, Clone, Serialize)]
pub struct DistanceResult {
    /// The distance, or its certified lower bound.
    pub value: usize,
    /// Whether `value` is exact.
    pub exactness: Exactness,
    /// Engine that settled the result.
    pub method: Method,
    /// A codeword of weight `value` (exact results only; the zero-dimension
    /// sentinel carries none).
    pub witness: Option<Vec<u8>>,
}

impl DistanceResult {
    /// Is this an exact value?
    #[must_use]
    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }
}

/// Budgets steering the distance engines.
#[derive(Debug, Clone, Copy)]
pub struct EnumBudget {
    /// Largest codeword count qᵏ still handled by full enumeration.
    pub enum_limit: u64,
    /// Work-unit ceiling for the COLDEP/BZ search beyond that.
    pub work_limit: u64,
    /// Extra weight levels tried by the relative-weight escalation.
    pub escalation_levels: u32,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            enum_limit: 20_000_000,
            work_limit: 200_000_000,
            escalation_levels: 3,
        }
    }
}

impl EnumBudget {
    /// A budget scaled for interactive use: `work_limit` replaced by the
    /// given value, other knobs at their defaults.
    #[must_use]
    pub fn with_work_limit(work_limit: u64) -> Self {
        EnumBudget {
            work_limit,
            ..EnumBudget::default()
        }
    }
}

/// Hamming weight of a symbol vector.
#[must_use]
pub fn weight(v: &[u8]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

impl LinearCode {
    /// Wrap a generator matrix whose rows are independent, preserving the
    /// row order exactly as given.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidSpec`] when the rows are dependent or the length is 0.
    pub fn new(gen: GfMatrix) -> Result<LinearCode> {
        if gen.cols == 0 {
            return Err(Error::InvalidSpec {
                reason: "code length must be positive".into(),
            });
        }
        let k = gen.rank();
        if k != gen.rows {
            return Err(Error::InvalidSpec {
                reason: format!(
                    "generator rows are dependent: {} rows, rank {k}",
                    gen.rows
                ),
            });
        }
        Ok(LinearCode {
            q: gen.q,
            n: gen.cols,
            k,
            gen,
        })
    }

    /// Build from spanning rows that may be dependent: the generator becomes
    /// the nonzero rows of the reduced row echelon form.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidSpec`] when the length is 0.
    pub fn from_span(m: &GfMatrix) -> Result<LinearCode> {
        if m.cols == 0 {
            return Err(Error::InvalidSpec {
                reason: "code length must be positive".into(),
            });
        }
        let (r, pivots) = m.rref();
        let rows: Vec<Vec<u8>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        let gen = if rows.is_empty() {
            GfMatrix::zero(m.q, 0, m.cols)?
        } else {
            GfMatrix::from_rows(m.q, &rows)?
        };
        Ok(LinearCode {
            q: m.q,
            n: m.cols,
            k: pivots.len(),
            gen,
        })
    }

    /// The dual code, generated by the null space of the generator.
    #[must_use]
    pub fn dual(&self) -> LinearCode {
        let gen = self.gen.null_space();
        LinearCode {
            q: self.q,
            n: self.n,
            k: self.n - self.k,
            gen,
        }
    }

    /// A parity-check matrix (generator of the dual).
    #[must_use]
    pub fn parity_check(&self) -> GfMatrix {
        self.gen.null_space()
    }

    /// Is `v` a codeword?
    #[must_use]
    pub fn contains(&self, v: &[u8]) -> bool {
        RowBasis::new(&self.gen).contains(v)
    }

    /// Encode a message (length k) to a codeword (length n).
    #[must_use]
    pub fn encode(&self, msg: &[u8]) -> Vec<u8> {
        assert_eq!(msg.len(), self.k, "message length must equal k");
        let t = gf::ctx(self.q).expect("supported q").tables();
        let mut out = vec![0u8; self.n];
        for (i, &c) in msg.iter().enumerate() {
            if c != 0 {
                for (o, &g) in out.iter_mut().zip(self.gen.row(i)) {
                    *o = t.add(*o, t.mul(c, g));
                }
            }
        }
        out
    }
}

/// Is `sub` a subcode of `sup` (as sets of codewords)?
///
/// # Errors
///
/// [`Error::LengthMismatch`] when the lengths differ.
pub fn is_subcode(sub: &LinearCode, sup: &LinearCode) -> Result<bool> {
    if sub.n != sup.n {
        return Err(Error::LengthMismatch {
            left: sub.n,
            right: sup.n,
        });
    }
    Ok(RowBasis::new(&sup.gen).contains_rows(&sub.gen))
}

/// qᵏ as u64, saturating.
fn pow_sat(q: u8, k: usize) -> u64 {
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc = acc.saturating_mul(u128::from(q));
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Binomial coefficient as u64, saturating.
fn binom_sat(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

// ---------------------------------------------------------------------------
// ENUM engine
// ---------------------------------------------------------------------------

/// Visit one representative of every scalar class of nonzero codewords in
/// lexicographic message order (messages with first nonzero coordinate 1,
/// later first-nonzero positions first).  The callback receives the codeword
/// and its weight; the running vector is updated incrementally.
fn enum_scan<F: FnMut(&[u8], usize)>(code: &LinearCode, mut visit: F) {
    let t = gf::ctx(code.q).expect("supported q").tables();
    let q = code.q;
    let n = code.n;
    let k = code.k;
    let mut acc = vec![0u8; n];
    let mut wt;

    // Messages with first nonzero at position p are lexicographically
    // smaller than those with first nonzero before p, so p descends.
    for p in (0..k).rev() {
        acc.copy_from_slice(code.gen.row(p));
        wt = weight(&acc);
        // Suffix positions p+1 … k−1 run through all of GF(q) in lex order.
        scan_suffix(code, t, p + 1, &mut acc, &mut wt, &mut visit);
    }

    fn scan_suffix<F: FnMut(&[u8], usize)>(
        code: &LinearCode,
        t: &gf::GfTables,
        pos: usize,
        acc: &mut Vec<u8>,
        wt: &mut usize,
        visit: &mut F,
    ) {
        if pos == code.k {
            visit(acc, *wt);
            return;
        }
        let row = code.gen.row(pos);
        let mut cur = 0u8;
        for next in 1..=code.q {
            scan_suffix(code, t, pos + 1, acc, wt, visit);
            // Step this coordinate's coefficient from `cur` to the next
            // symbol by adding their difference times the row; the final
            // step wraps to zero, restoring acc for the caller.  Stepping
            // by repeated +row would only reach the prime-subfield
            // multiples when q is a proper prime power.
            let target = if next == code.q { 0 } else { next };
            let diff = t.sub(target, cur);
            for (a, &r) in acc.iter_mut().zip(row) {
                if r != 0 {
                    let before = *a;
                    *a = t.add(before, t.mul(diff, r));
                    *wt = *wt + usize::from(*a != 0) - usize::from(before != 0);
                }
            }
            cur = target;
        }
    }
    let _ = q;
}

/// Exhaustive exact minimum distance; caller guarantees qᵏ is enumerable.
fn enum_min_distance(code: &LinearCode) -> DistanceResult {
    let mut best = code.n + 1;
    let mut witness = None;
    enum_scan(code, |cw, wt| {
        if wt < best {
            best = wt;
            witness = Some(cw.to_vec());
        }
    });
    DistanceResult {
        value: best,
        exactness: Exactness::Exact,
        method: Method::Enum,
        witness,
    }
}

// ---------------------------------------------------------------------------
// BZ engine
// ---------------------------------------------------------------------------

/// One systematic generator for the information-set bound.
struct InfoSet {
    /// Row-equivalent generator with unit columns on the set's pivots.
    gen: GfMatrix,
    /// k minus the number of pivot columns.
    deficit: usize,
}

/// Greedily partition the columns into information sets; later sets may be
/// rank-deficient, and columns supporting no further rank are left over.
fn information_sets(code: &LinearCode) -> Vec<InfoSet> {
    let mut used = vec![false; code.n];
    let mut sets = Vec::new();
    loop {
        let t = gf::ctx(code.q).expect("supported q").tables();
        let mut m = code.gen.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for (col, &col_used) in used.iter().enumerate() {
            if col_used || row == code.k {
                continue;
            }
            let Some(pr) = (row..code.k).find(|&r| m.at(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..code.n {
                    let tmp = m.at(row, c);
                    m.set(row, c, m.at(pr, c));
                    m.set(pr, c, tmp);
                }
            }
            let inv = t.inv(m.at(row, col));
            for c in 0..code.n {
                m.set(row, c, t.mul(inv, m.at(row, c)));
            }
            for r in 0..code.k {
                if r != row {
                    let f = m.at(r, col);
                    if f != 0 {
                        for c in 0..code.n {
                            let v = t.sub(m.at(r, c), t.mul(f, m.at(row, c)));
                            m.set(r, c, v);
                        }
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        if pivots.is_empty() {
            break;
        }
        for &p in &pivots {
            used[p] = true;
        }
        let deficit = code.k - pivots.len();
        sets.push(InfoSet { gen: m, deficit });
    }
    sets
}

/// State of an incremental BZ search.
struct BzState {
    sets: Vec<InfoSet>,
    /// Largest message weight fully enumerated across all sets.
    w_done: usize,
    /// Best codeword weight found so far, with a witness.
    upper: Option<(usize, Vec<u8>)>,
}

impl BzState {
    fn new(code: &LinearCode) -> BzState {
        BzState {
            sets: information_sets(code),
            w_done: 0,
            upper: None,
        }
    }

    /// Certified lower bound from the completed rounds.
    fn lower(&self) -> usize {
        self.sets
            .iter()
            .map(|s| (self.w_done + 1).saturating_sub(s.deficit))
            .sum()
    }

    /// Estimated work units of the next round.
    fn next_round_cost(&self, code: &LinearCode) -> u64 {
        let w = self.w_done + 1;
        let per_set = binom_sat(code.k, w)
            .saturating_mul(pow_sat(code.q, w.saturating_sub(1)))
            .saturating_mul(2 * code.n as u64);
        per_set.saturating_mul(self.sets.len() as u64)
    }

    /// Run one round (message weight `w_done + 1`) against every set.
    /// Returns false when the budget was exhausted mid-round (state then
    /// still certifies only the previously completed rounds).
    fn round(&mut self, code: &LinearCode, budget: u64, spent: &mut u64) -> bool {
        let w = self.w_done + 1;
        if w > code.k {
            // Everything is enumerated; the bound is tight by exhaustion.
            self.w_done = w;
            return true;
        }
        let t = gf::ctx(code.q).expect("supported q").tables();
        for set in &self.sets {
            let mut support: Vec<usize> = Vec::with_capacity(w);
            if !bz_enumerate(
                &set.gen,
                t,
                w,
                0,
                &mut support,
                &mut vec![0u8; code.n],
                &mut self.upper,
                budget,
                spent,
            ) {
                return false;
            }
        }
        self.w_done = w;
        true
    }
}

/// Enumerate codewords of all weight-w messages (first support coefficient
/// fixed to 1) against one systematic generator, updating the best upper
/// bound.  Returns false on budget exhaustion.
#[allow(clippy::too_many_arguments)]
fn bz_enumerate(
    gen: &GfMatrix,
    t: &gf::GfTables,
    w: usize,
    start: usize,
    support: &mut Vec<usize>,
    acc: &mut Vec<u8>,
    upper: &mut Option<(usize, Vec<u8>)>,
    budget: u64,
    spent: &mut u64,
) -> bool {
    let depth = support.len();
    if depth == w {
        *spent += acc.len() as u64;
        if *spent > budget {
            return false;
        }
        let wt = weight(acc);
        if upper.as_ref().is_none_or(|(u, _)| wt < *u) {
            *upper = Some((wt, acc.clone()));
        }
        return true;
    }
    for pos in start..=gen.rows - (w - depth) {
        support.push(pos);
        // Coefficient loop: position `pos` takes symbol 1 when it is the
        // first support element (scalar normalization), otherwise every
        // nonzero symbol.  Each step adds the difference to the previous
        // coefficient times the row.
        let last = if depth == 0 { 1 } else { t.q - 1 };
        let mut prev = 0u8;
        for c in 1..=last {
            add_row(acc, gen.row(pos), t.sub(c, prev), t);
            prev = c;
            if !bz_enumerate(gen, t, w, pos + 1, support, acc, upper, budget, spent) {
                return false;
            }
        }
        // Undo this position's contribution.
        add_row(acc, gen.row(pos), t.neg(prev), t);
        support.pop();
    }
    true
}

/// acc += f · row.
fn add_row(acc: &mut [u8], row: &[u8], f: u8, t: &gf::GfTables) {
    if f == 0 {
        return;
    }
    for (a, &r) in acc.iter_mut().zip(row) {
        if r != 0 {
            *a = t.add(*a, t.mul(f, r));
        }
    }
}

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

/// Minimum distance of `code` under the given budget.
///
/// Zero-dimensional codes report the sentinel n + 1 (exact, no witness).
/// Enumerable codes are solved exactly by ENUM.  Larger codes interleave
/// COLDEP and BZ rounds, cheapest next round first, and return an exact
/// value when either engine certifies one within the work budget, otherwise
/// the best combined lower bound.
#[must_use]
pub fn min_distance(code: &LinearCode, budget: &EnumBudget) -> DistanceResult {
    if code.k == 0 {
        return zero_dim_result(code);
    }
    if pow_sat(code.q, code.k) <= budget.enum_limit {
        return enum_min_distance(code);
    }

    let h = code.parity_check();
    let singleton_cap = code.n - code.k + 1;
    let mut spent = 0u64;
    let mut cd_done = 0usize; // column sizes fully exhausted on h
    let mut bz = BzState::new(code);

    loop {
        let cd_next = binom_sat(code.n, cd_done + 1).saturating_mul(h.rows.max(1) as u64);
        let bz_next = bz.next_round_cost(code);
        let run_coldep = cd_done < singleton_cap && cd_next <= bz_next;

        if run_coldep {
            // One COLDEP round: exhaust subsets of size cd_done + 1.
            match h.min_dependent_columns_budgeted(cd_done + 1, budget.work_limit, &mut spent) {
                DependenceSearch::Found(set) => {
                    let mut w = vec![0u8; code.n];
                    for (&c, &x) in set.cols.iter().zip(&set.kernel) {
                        w[c] = x;
                    }
                    debug_assert!(code.contains(&w));
                    return DistanceResult {
                        value: set.cols.len(),
                        exactness: Exactness::Exact,
                        method: Method::ColDep,
                        witness: Some(w),
                    };
                }
                DependenceSearch::Independent { completed } => {
                    cd_done = completed;
                    if cd_done + 1 > singleton_cap {
                        // No dependent set up to the Singleton cap: MDS.
                        return DistanceResult {
                            value: singleton_cap,
                            exactness: Exactness::Exact,
                            method: Method::ColDep,
                            witness: None,
                        };
                    }
                }
                DependenceSearch::BudgetExhausted { completed } => {
                    cd_done = completed;
                    break;
                }
            }
        } else {
            let before = bz.w_done;
            let finished = bz.round(code, budget.work_limit, &mut spent);
            if bz.w_done > code.k {
                // Exhausted the whole message space.
                let (value, witness) = bz.upper.clone().expect("nonzero code has codewords");
                return DistanceResult {
                    value,
                    exactness: Exactness::Exact,
                    method: Method::Bz,
                    witness: Some(witness),
                };
            }
            if let Some((u, w)) = bz.upper.clone() {
                if bz.lower() >= u {
                    return DistanceResult {
                        value: u,
                        exactness: Exactness::Exact,
                        method: Method::Bz,
                        witness: Some(w),
                    };
                }
            }
            if !finished && bz.w_done == before {
                break;
            }
        }
        if spent > budget.work_limit {
            break;
        }
    }

    // Budget exhausted: combine the certified lower bounds.
    let cd_lower = cd_done + 1;
    let bz_lower = bz.lower().max(1);
    let (value, method) = if cd_lower >= bz_lower {
        (cd_lower, Method::ColDep)
    } else {
        (bz_lower, Method::Bz)
    };
    DistanceResult {
        value: value.min(singleton_cap),
        exactness: Exactness::LowerBound,
        method,
        witness: None,
    }
}

/// The k = 0 sentinel result: value n + 1, exact, no witness.
fn zero_dim_result(code: &LinearCode) -> DistanceResult {
    DistanceResult {
        value: code.n + 1,
        exactness: Exactness::Exact,
        method: Method::Enum,
        witness: None,
    }
}

/// Exact minimum distance by exhaustive scan alone, ignoring the enum limit.
///
/// Cost is Θ(qᵏ⁻¹ · n); the caller keeps k small enough for that to be
/// affordable.  Intended for cross-checking the other engines.
#[must_use]
pub fn min_distance_enum(code: &LinearCode) -> DistanceResult {
    if code.k == 0 {
        return zero_dim_result(code);
    }
    enum_min_distance(code)
}

/// Minimum distance through the information-set engine alone.
///
/// Exact when the rounds certify a matching lower bound within the work
/// budget, otherwise the certified lower bound.
#[must_use]
pub fn min_distance_bz(code: &LinearCode, budget: &EnumBudget) -> DistanceResult {
    if code.k == 0 {
        return zero_dim_result(code);
    }
    let mut spent = 0u64;
    let mut bz = BzState::new(code);
    loop {
        let before = bz.w_done;
        let finished = bz.round(code, budget.work_limit, &mut spent);
        if bz.w_done > code.k {
            let (value, witness) = bz.upper.clone().expect("nonzero code has codewords");
            return DistanceResult {
                value,
                exactness: Exactness::Exact,
                method: Method::Bz,
                witness: Some(witness),
            };
        }
        if let Some((u, w)) = bz.upper.clone() {
            if bz.lower() >= u {
                return DistanceResult {
                    value: u,
                    exactness: Exactness::Exact,
                    method: Method::Bz,
                    witness: Some(w),
                };
            }
        }
        if (!finished && bz.w_done == before) || spent > budget.work_limit {
            return DistanceResult {
                value: bz.lower().max(1),
                exactness: Exactness::LowerBound,
                method: Method::Bz,
                witness: None,
            };
        }
    }
}

/// Minimum distance through the dependent-column engine alone.
///
/// Exact when the search completes within the work budget, otherwise the
/// certified lower bound.
#[must_use]
pub fn min_distance_coldep(code: &LinearCode, budget: &EnumBudget) -> DistanceResult {
    if code.k == 0 {
        return zero_dim_result(code);
    }
    let h = code.parity_check();
    let singleton_cap = code.n - code.k + 1;
    let mut spent = 0u64;
    match h.min_dependent_columns_budgeted(singleton_cap, budget.work_limit, &mut spent) {
        DependenceSearch::Found(set) => {
            let mut w = vec![0u8; code.n];
            for (&c, &x) in set.cols.iter().zip(&set.kernel) {
                w[c] = x;
            }
            debug_assert!(code.contains(&w));
            DistanceResult {
                value: set.cols.len(),
                exactness: Exactness::Exact,
                method: Method::ColDep,
                witness: Some(w),
            }
        }
        // Unreachable for a true parity check (any n−k+1 columns of an
        // (n−k)-row matrix are dependent), kept as the MDS answer.
        DependenceSearch::Independent { .. } => DistanceResult {
            value: singleton_cap,
            exactness: Exactness::Exact,
            method: Method::ColDep,
            witness: None,
        },
        DependenceSearch::BudgetExhausted { completed } => DistanceResult {
            value: completed + 1,
            exactness: Exactness::LowerBound,
            method: Method::ColDep,
            witness: None,
        },
    }
}

/// Minimum distance of the dual code.
#[must_use]
pub fn dual_distance(code: &LinearCode, budget: &EnumBudget) -> DistanceResult {
    min_distance(&code.dual(), budget)
}

/// Minimum weight of C₂ \ C₁ for a proper subcode C₁ ⊂ C₂.
///
/// # Errors
///
/// [`Error::LengthMismatch`], [`Error::NotNested`], or [`Error::EqualCodes`]
/// when the pair does not satisfy the precondition.
pub fn relative_weight(
    c2: &LinearCode,
    c1: &LinearCode,
    budget: &EnumBudget,
) -> Result<DistanceResult> {
    if c1.n != c2.n {
        return Err(Error::LengthMismatch {
            left: c1.n,
            right: c2.n,
        });
    }
    if !is_subcode(c1, c2)? {
        return Err(Error::NotNested {
            detail: format!(
                "[{}, {}] is not contained in [{}, {}]",
                c1.n, c1.k, c2.n, c2.k
            ),
        });
    }
    if c1.k == c2.k {
        return Err(Error::EqualCodes);
    }

    let inner = RowBasis::new(&c1.gen);
    if pow_sat(c2.q, c2.k) <= budget.enum_limit {
        let mut best = c2.n + 1;
        let mut witness = None;
        enum_scan(c2, |cw, wt| {
            if wt < best && !inner.contains(cw) {
                best = wt;
                witness = Some(cw.to_vec());
            }
        });
        debug_assert!(best <= c2.n, "a proper subcode leaves codewords outside");
        return Ok(DistanceResult {
            value: best,
            exactness: Exactness::Exact,
            method: Method::Enum,
            witness,
        });
    }

    // Escalation: walk weight levels upward from d(C₂), enumerating the
    // weight-w codewords of C₂ through dependent column sets of its parity
    // check and testing each against C₁.
    let base = min_distance(c2, budget);
    if !base.is_exact() {
        return Ok(DistanceResult {
            value: base.value,
            exactness: Exactness::LowerBound,
            method: base.method,
            witness: None,
        });
    }
    let h = c2.parity_check();
    let mut spent = 0u64;
    for level in 0..budget.escalation_levels {
        let w = base.value + level as usize;
        if w > c2.n {
            break;
        }
        let mut found: Option<Vec<u8>> = None;
        let complete = for_each_weight_w_codeword(&h, w, budget.work_limit, &mut spent, |cw| {
            if !inner.contains(cw) {
                found = Some(cw.to_vec());
                false
            } else {
                true
            }
        });
        if let Some(witness) = found {
            return Ok(DistanceResult {
                value: w,
                exactness: Exactness::Exact,
                method: Method::ColDep,
                witness: Some(witness),
            });
        }
        if !complete {
            return Ok(DistanceResult {
                value: w, // levels below w were completed and lie inside C₁
                exactness: Exactness::LowerBound,
                method: Method::ColDep,
                witness: None,
            });
        }
    }
    Ok(DistanceResult {
        value: base.value + budget.escalation_levels as usize,
        exactness: Exactness::LowerBound,
        method: Method::ColDep,
        witness: None,
    })
}

/// Enumerate every codeword of weight exactly w (one per scalar class) of
/// the code with parity-check matrix `h`, in deterministic order: supports
/// lexicographically, kernel vectors normalized.  The callback returns
/// false to stop early.  Returns false if the budget ran out.
fn for_each_weight_w_codeword<F: FnMut(&[u8]) -> bool>(
    h: &GfMatrix,
    w: usize,
    budget: u64,
    spent: &mut u64,
    mut visit: F,
) -> bool {
    let t = gf::ctx(h.q).expect("supported q").tables();
    let n = h.cols;
    if w == 0 || w > n {
        return true;
    }
    // DFS over supports with an incremental triangular basis; dependent
    // prefixes are allowed here (deficits accumulate), and at full depth any
    // deficit yields kernel vectors to expand.
    struct S<'a> {
        h: &'a GfMatrix,
        t: &'a gf::GfTables,
        w: usize,
        basis: Vec<(usize, Vec<u8>)>,
        chosen: Vec<usize>,
        deficit: usize,
        budget: u64,
        spent: &'a mut u64,
    }
    enum Out {
        Done,
        Stop,
        Budget,
    }
    impl S<'_> {
        fn go<F: FnMut(&[u8]) -> bool>(&mut self, start: usize, visit: &mut F) -> Out {
            let depth = self.chosen.len();
            if depth == self.w {
                if self.deficit > 0 && !self.emit(visit) {
                    return Out::Stop;
                }
                return Out::Done;
            }
            let slots = self.w - depth;
            for c in start..=self.h.cols - slots {
                *self.spent += (self.h.rows as u64).max(1);
                if *self.spent > self.budget {
                    return Out::Budget;
                }
                let mut col: Vec<u8> = (0..self.h.rows).map(|r| self.h.at(r, c)).collect();
                for (pr, b) in &self.basis {
                    let f = col[*pr];
                    if f != 0 {
                        for (x, &bv) in col.iter_mut().zip(b) {
                            *x = self.t.sub(*x, self.t.mul(f, bv));
                        }
                    }
                }
                self.chosen.push(c);
                match col.iter().position(|&x| x != 0) {
                    None => {
                        self.deficit += 1;
                        match self.go(c + 1, visit) {
                            Out::Done => {}
                            other => return other,
                        }
                        self.deficit -= 1;
                    }
                    Some(pr) => {
                        let inv = self.t.inv(col[pr]);
                        for x in &mut col {
                            *x = self.t.mul(inv, *x);
                        }
                        self.basis.push((pr, col));
                        match self.go(c + 1, visit) {
                            Out::Done => {}
                            other => return other,
                        }
                        self.basis.pop();
                    }
                }
                self.chosen.pop();
            }
            Out::Done
        }

        /// Expand the kernel of the chosen support and visit each fully
        /// supported normalized kernel vector.
        fn emit<F: FnMut(&[u8]) -> bool>(&mut self, visit: &mut F) -> bool {
            let sub = self.h.select_columns(&self.chosen);
            let ker = sub.null_space();
            debug_assert_eq!(ker.rows, self.deficit);
            // Enumerate normalized nonzero combinations of the kernel rows.
            let mut coeffs = vec![0u8; ker.rows];
            self.emit_rec(&ker, &mut coeffs, 0, false, visit)
        }

        fn emit_rec<F: FnMut(&[u8]) -> bool>(
            &self,
            ker: &GfMatrix,
            coeffs: &mut Vec<u8>,
            pos: usize,
            any: bool,
            visit: &mut F,
        ) -> bool {
            if pos == ker.rows {
                if !any {
                    return true;
                }
                let mut v = vec![0u8; self.w];
                for (i, &c) in coeffs.iter().enumerate() {
                    if c != 0 {
                        for (x, &kv) in v.iter_mut().zip(ker.row(i)) {
                            *x = self.t.add(*x, self.t.mul(c, kv));
                        }
                    }
                }
                if v.contains(&0) {
                    return true; // support is a proper subset: lower level
                }
                // Normalize the leading coefficient.
                let inv = self.t.inv(v[0]);
                let mut cw = vec![0u8; self.h.cols];
                for (&c, &x) in self.chosen.iter().zip(&v) {
                    cw[c] = self.t.mul(inv, x);
                }
                return visit(&cw);
            }
            // First nonzero coefficient is normalized to 1.
            let choices: &[u8] = if any {
                &[0, 1, 2, 3, 4, 5, 6, 7, 8][..self.t.q as usize]
            } else {
                &[0, 1]
            };
            for &c in choices {
                coeffs[pos] = c;
                if !self.emit_rec(ker, coeffs, pos + 1, any || c != 0, visit) {
                    return false;
                }
            }
            coeffs[pos] = 0;
            true
        }
    }

    let mut s = S {
        h,
        t,
        w,
        basis: Vec::new(),
        chosen: Vec::new(),
        deficit: 0,
        budget,
        spent,
    };
    !matches!(s.go(0, &mut visit), Out::Budget)
}

/// Purity evidence for a CSS pair (C₁, C₂) with C₁⊥ ⊂ C₂.
#[derive(Debug, Clone, Serialize)]
pub struct PurityCertificate {
    /// True/false when decidable from exact values; `None` when a
    /// constituent is only a lower bound.
    pub pure: Option<bool>,
    /// d(C₁).
    pub d1: DistanceResult,
    /// d(C₂).
    pub d2: DistanceResult,
    /// wt(C₂ \ C₁⊥).
    pub dz: DistanceResult,
    /// wt(C₁ \ C₂⊥).
    pub dx: DistanceResult,
}

/// Decide purity of the CSS pair (C₁, C₂): the derived quantum code is pure
/// exactly when d_z = d(C₂) and d_x = d(C₁).
///
/// # Errors
///
/// Propagates the nesting errors of [`relative_weight`].
pub fn is_pure(c1: &LinearCode, c2: &LinearCode, budget: &EnumBudget) -> Result<PurityCertificate> {
    let c1perp = c1.dual();
    let c2perp = c2.dual();
    let d1 = min_distance(c1, budget);
    let d2 = min_distance(c2, budget);
    let dz = relative_weight(c2, &c1perp, budget)?;
    let dx = relative_weight(c1, &c2perp, budget)?;
    let pure = if d1.is_exact() && d2.is_exact() && dz.is_exact() && dx.is_exact() {
        Some(dz.value == d2.value && dx.value == d1.value)
    } else {
        None
    };
    Ok(PurityCertificate { pure, d1, d2, dz, dx })
}
