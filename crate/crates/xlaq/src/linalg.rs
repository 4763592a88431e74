//! Dense linear algebra over GF(q) symbols.
//!
//! Matrices store their entries as the compact subfield symbols defined in
//! [`crate::gf`] (row-major `Vec<u8>`), and every operation dispatches
//! through the per-q arithmetic tables, so this module never touches
//! extension-field elements directly.
//!
//! Beyond the usual rank / reduced-row-echelon / null-space routines, the
//! module provides [`GfMatrix::min_dependent_columns`]: the smallest set of
//! linearly dependent columns, found by exhausting subset sizes in
//! increasing order and, within a size, visiting index sets
//! lexicographically.  Distance computations lean on it twice — the minimum
//! distance of a code is the smallest dependent column set of its
//! parity-check matrix, and the dual distance is the smallest dependent
//! column set of its generator matrix.
//!
//! # Determinism
//!
//! All elimination and search orders are fixed (ascending rows, ascending
//! columns, lexicographic subsets), so results — including witnesses — are
//! identical across runs and machines.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{self, GfTables};

/// A dense rows×cols matrix over GF(q), entries stored row-major as symbols.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GfMatrix {
    /// Field order.
    pub q: u8,
    /// Number of rows.
    pub rows: usize,
    /// Number of columns.
    pub cols: usize,
    /// Row-major entries, `entries[r * cols + c]`.
    pub entries: Vec<u8>,
}

/// Outcome of a budgeted minimal-dependent-column search.
#[derive(Debug, Clone)]
pub enum DependenceSearch {
    /// A smallest dependent set was found (its size is `set.cols.len()`
    /// and every subset of smaller size is independent).
    Found(DependentSet),
    /// All subsets of size ≤ the recorded bound are independent.
    Independent {
        /// Largest subset size fully exhausted.
        completed: usize,
    },
    /// The node budget ran out; sizes ≤ `completed` were fully exhausted.
    BudgetExhausted {
        /// Largest subset size fully exhausted before the budget ran out.
        completed: usize,
    },
}

/// A witnessed dependent column set.
#[derive(Debug, Clone, Serialize)]
pub struct DependentSet {
    /// Column indices, ascending; lexicographically least among all
    /// dependent sets of this (minimal) size.
    pub cols: Vec<usize>,
    /// Kernel coefficients on those columns, first nonzero scaled to 1;
    /// every coefficient is nonzero by minimality.
    pub kernel: Vec<u8>,
}

impl GfMatrix {
    /// An all-zero rows×cols matrix.
    ///
    /// # Errors
    ///
    /// [`Error::UnsupportedField`] for an unsupported q.
    pub fn zero(q: u8, rows: usize, cols: usize) -> Result<GfMatrix> {
        gf::ctx(q)?;
        Ok(GfMatrix {
            q,
            rows,
            cols,
            entries: vec![0; rows * cols],
        })
    }

    /// Build from explicit rows, which must agree in length.
    ///
    /// # Errors
    ///
    /// [`Error::UnsupportedField`] for an unsupported q;
    /// [`Error::LengthMismatch`] on ragged rows.
    pub fn from_rows(q: u8, data: &[Vec<u8>]) -> Result<GfMatrix> {
        gf::ctx(q)?;
        let cols = data.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(data.len() * cols);
        for row in data {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    left: row.len(),
                    right: cols,
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(GfMatrix {
            q,
            rows: data.len(),
            cols,
            entries,
        })
    }

    /// The n×n identity.
    #[must_use]
    pub fn identity(q: u8, n: usize) -> GfMatrix {
        let mut m = GfMatrix {
            q,
            rows: n,
            cols: n,
            entries: vec![0; n * n],
        };
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// Entry accessor.
    #[inline]
    #[must_use]
    pub fn at(&self, r: usize, c: usize) -> u8 {
        self.entries[r * self.cols + c]
    }

    /// Entry mutator.
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.entries[r * self.cols + c] = v;
    }

    /// Row slice.
    #[inline]
    #[must_use]
    pub fn row(&self, r: usize) -> &[u8] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    fn tb(&self) -> &'static GfTables {
        gf::ctx(self.q)
            .expect("matrix carries a supported q")
            .tables()
    }

    /// Stack `self` on top of `other`.
    ///
    /// # Errors
    ///
    /// [`Error::LengthMismatch`] when column counts differ.
    pub fn vstack(&self, other: &GfMatrix) -> Result<GfMatrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(GfMatrix {
            q: self.q,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// The transpose.
    #[must_use]
    pub fn transpose(&self) -> GfMatrix {
        let mut out = GfMatrix {
            q: self.q,
            rows: self.cols,
            cols: self.rows,
            entries: vec![0; self.entries.len()],
        };
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[c * self.rows + r] = self.at(r, c);
            }
        }
        out
    }

    /// Matrix product `self · rhs`.
    ///
    /// # Errors
    ///
    /// [`Error::LengthMismatch`] on inner-dimension mismatch.
    pub fn matmul(&self, rhs: &GfMatrix) -> Result<GfMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::LengthMismatch {
                left: self.cols,
                right: rhs.rows,
            });
        }
        let t = self.tb();
        let mut out = GfMatrix {
            q: self.q,
            rows: self.rows,
            cols: rhs.cols,
            entries: vec![0; self.rows * rhs.cols],
        };
        for r in 0..self.rows {
            for k in 0..self.cols {
                let x = self.at(r, k);
                if x == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let y = rhs.at(k, c);
                    if y != 0 {
                        let cur = out.at(r, c);
                        out.set(r, c, t.add(cur, t.mul(x, y)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self · vᵀ` for a row vector v of length `cols`.
    #[must_use]
    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        let t = self.tb();
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u8;
                for (c, &x) in v.iter().enumerate() {
                    if x != 0 {
                        let e = self.at(r, c);
                        if e != 0 {
                            acc = t.add(acc, t.mul(e, x));
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot column list.
    #[must_use]
    pub fn rref(&self) -> (GfMatrix, Vec<usize>) {
        let t = self.tb();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.at(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    let tmp = m.at(row, c);
                    m.set(row, c, m.at(pr, c));
                    m.set(pr, c, tmp);
                }
            }
            let inv = t.inv(m.at(row, col));
            for c in col..m.cols {
                m.set(row, c, t.mul(inv, m.at(row, c)));
            }
            for r in 0..m.rows {
                if r != row {
                    let f = m.at(r, col);
                    if f != 0 {
                        for c in col..m.cols {
                            let v = t.sub(m.at(r, c), t.mul(f, m.at(row, c)));
                            m.set(r, c, v);
                        }
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Matrix rank.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis (as rows) of {v : self · vᵀ = 0}, in the standard form where
    /// each free column contributes one basis vector.
    #[must_use]
    pub fn null_space(&self) -> GfMatrix {
        let t = self.tb();
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = Some(i);
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| pivot_set[*c].is_none()).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![0u8; self.cols];
            v[f] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = t.neg(r.at(i, f));
            }
            rows.push(v);
        }
        if rows.is_empty() {
            // Full column rank: the kernel is trivial, but the matrix must
            // keep the ambient width.
            return GfMatrix::zero(self.q, 0, self.cols).expect("q validated at construction");
        }
        GfMatrix::from_rows(self.q, &rows).expect("kernel rows share a length")
    }

    /// The submatrix keeping the given columns, in the given order.
    #[must_use]
    pub fn select_columns(&self, cols: &[usize]) -> GfMatrix {
        let mut out = GfMatrix {
            q: self.q,
            rows: self.rows,
            cols: cols.len(),
            entries: vec![0; self.rows * cols.len()],
        };
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.entries[r * cols.len() + j] = self.at(r, c);
            }
        }
        out
    }

    /// Smallest linearly dependent column set of size ≤ `w_max`, or `None`
    /// when all such subsets are independent.  The witness is the
    /// lexicographically least index set of the minimal size.
    #[must_use]
    pub fn min_dependent_columns(&self, w_max: usize) -> Option<DependentSet> {
        match self.min_dependent_columns_budgeted(w_max, u64::MAX, &mut 0) {
            DependenceSearch::Found(set) => Some(set),
            _ => None,
        }
    }

    /// Budgeted variant of [`GfMatrix::min_dependent_columns`].
    ///
    /// `spent` accumulates elementary work units (one per column-reduction
    /// step, weighted by row count); the search aborts between and within
    /// size rounds once `spent` exceeds `budget`, reporting the largest size
    /// that was *fully* exhausted, so callers can derive sound lower bounds.
    #[must_use]
    pub fn min_dependent_columns_budgeted(
        &self,
        w_max: usize,
        budget: u64,
        spent: &mut u64,
    ) -> DependenceSearch {
        // A 0-row matrix makes every single column dependent (its columns
        // live in the zero space).
        if self.rows == 0 {
            return if self.cols > 0 && w_max >= 1 {
                DependenceSearch::Found(DependentSet {
                    cols: vec![0],
                    kernel: vec![1],
                })
            } else {
                DependenceSearch::Independent { completed: w_max }
            };
        }
        let cap = w_max.min(self.cols);
        let mut search = ColumnSearch {
            m: self,
            t: self.tb(),
            basis: Vec::new(),
            chosen: Vec::new(),
            budget,
            spent,
        };
        for w in 1..=cap {
            match search.round(w, 0) {
                RoundOutcome::Found(cols) => {
                    let kernel = self.kernel_on(&cols);
                    return DependenceSearch::Found(DependentSet { cols, kernel });
                }
                RoundOutcome::Exhausted => {}
                RoundOutcome::Budget => {
                    return DependenceSearch::BudgetExhausted { completed: w - 1 }
                }
            }
        }
        DependenceSearch::Independent { completed: cap }
    }

    /// Kernel coefficients (first nonzero scaled to 1) of a dependent
    /// column set found by the search; the kernel is one-dimensional and
    /// fully supported because every proper subset is independent.
    fn kernel_on(&self, cols: &[usize]) -> Vec<u8> {
        let t = self.tb();
        let sub = self.select_columns(cols);
        let ker = sub.null_space();
        assert_eq!(ker.rows, 1, "minimal dependent set has a 1-dim kernel");
        let mut v = ker.row(0).to_vec();
        let lead = v.iter().copied().find(|&x| x != 0).expect("nonzero kernel");
        let inv = t.inv(lead);
        for x in &mut v {
            *x = t.mul(inv, *x);
        }
        assert!(
            v.iter().all(|&x| x != 0),
            "minimal dependent set has full kernel support"
        );
        v
    }
}

enum RoundOutcome {
    Found(Vec<usize>),
    Exhausted,
    Budget,
}

/// Depth-first lexicographic scan of column subsets of one size, keeping an
/// incremental triangular basis of the chosen prefix.  Because smaller sizes
/// are exhausted first, every proper prefix is independent and dependence
/// can only appear on the final column of a subset.
struct ColumnSearch<'a> {
    m: &'a GfMatrix,
    t: &'static GfTables,
    /// Triangular basis of the chosen prefix: (pivot row, reduced column).
    basis: Vec<(usize, Vec<u8>)>,
    chosen: Vec<usize>,
    budget: u64,
    spent: &'a mut u64,
}

impl ColumnSearch<'_> {
    fn round(&mut self, w: usize, _depth: usize) -> RoundOutcome {
        debug_assert!(self.basis.is_empty() && self.chosen.is_empty());
        self.extend(w, 0)
    }

    fn extend(&mut self, w: usize, start: usize) -> RoundOutcome {
        let depth = self.chosen.len();
        let slots = w - depth;
        // Leave room for the remaining slots.
        for c in start..=self.m.cols - slots {
            *self.spent += (self.m.rows as u64).max(1);
            if *self.spent > self.budget {
                return RoundOutcome::Budget;
            }
            let mut col: Vec<u8> = (0..self.m.rows).map(|r| self.m.at(r, c)).collect();
            for (pr, b) in &self.basis {
                let f = col[*pr];
                if f != 0 {
                    for (x, &bv) in col.iter_mut().zip(b) {
                        *x = self.t.sub(*x, self.t.mul(f, bv));
                    }
                }
            }
            match col.iter().position(|&x| x != 0) {
                None => {
                    // Dependent.  Sizes below w are exhausted, so this can
                    // only legitimately happen on the last column.
                    debug_assert_eq!(depth + 1, w, "dependence below the active size");
                    if depth + 1 == w {
                        let mut cols = self.chosen.clone();
                        cols.push(c);
                        self.unwind();
                        return RoundOutcome::Found(cols);
                    }
                }
                Some(pr) => {
                    if depth + 1 < w {
                        let inv = self.t.inv(col[pr]);
                        for x in &mut col {
                            *x = self.t.mul(inv, *x);
                        }
                        self.basis.push((pr, col));
                        self.chosen.push(c);
                        match self.extend(w, c + 1) {
                            RoundOutcome::Exhausted => {
                                self.basis.pop();
                                self.chosen.pop();
                            }
                            done => return done,
                        }
                    }
                }
            }
        }
        RoundOutcome::Exhausted
    }

    fn unwind(&mut self) {
        self.basis.clear();
        self.chosen.clear();
    }
}

/// A row-space membership tester built once from a generator-style matrix.
#[derive(Debug, Clone)]
pub struct RowBasis {
    q: u8,
    cols: usize,
    /// Nonzero rref rows.
    rows: Vec<Vec<u8>>,
    /// Pivot column of each rref row.
    pivots: Vec<usize>,
}

impl RowBasis {
    /// Reduce `m` once; membership tests afterwards cost O(rank · cols).
    #[must_use]
    pub fn new(m: &GfMatrix) -> RowBasis {
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        RowBasis {
            q: m.q,
            cols: m.cols,
            rows,
            pivots,
        }
    }

    /// The rank of the underlying matrix.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Does `v` lie in the row space?
    #[must_use]
    pub fn contains(&self, v: &[u8]) -> bool {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        let t = gf::ctx(self.q)
            .expect("basis carries a supported q")
            .tables();
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = w[p];
            if f != 0 {
                for (x, &rv) in w.iter_mut().zip(row) {
                    *x = t.sub(*x, t.mul(f, rv));
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// Does every row of `m` lie in the row space?
    #[must_use]
    pub fn contains_rows(&self, m: &GfMatrix) -> bool {
        (0..m.rows).all(|r| self.contains(m.row(r)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(q: u8, rows: &[&[u8]]) -> GfMatrix {
        GfMatrix::from_rows(q, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rank_and_rref_basics() {
        let a = m(5, &[&[1, 2, 3], &[2, 4, 2], &[0, 0, 0]]);
        assert_eq!(a.rank(), 2);
        // (2, 4, 1) = 2·(1, 2, 3) over GF(5), so this variant drops to rank 1.
        assert_eq!(m(5, &[&[1, 2, 3], &[2, 4, 1]]).rank(), 1);
        let id = GfMatrix::identity(7, 4);
        assert_eq!(id.rank(), 4);
        assert_eq!(GfMatrix::zero(3, 3, 5).unwrap().rank(), 0);
    }

    #[test]
    fn null_space_annihilates_and_has_complementary_dimension() {
        let a = m(4, &[&[1, 2, 3, 0, 1], &[0, 1, 1, 1, 0]]);
        let ns = a.null_space();
        assert_eq!(ns.rows, 5 - a.rank());
        for r in 0..ns.rows {
            assert!(a.apply(ns.row(r)).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn rref_is_idempotent() {
        let a = m(9, &[&[3, 1, 4, 1], &[5, 8, 2, 6], &[7, 0, 1, 2]]);
        let (r, p) = a.rref();
        let (r2, p2) = r.rref();
        assert_eq!(r, r2);
        assert_eq!(p, p2);
    }

    #[test]
    fn min_dependent_columns_finds_the_lexicographic_minimum() {
        // Columns 0 and 2 are parallel; {0, 2} is the unique dependent pair.
        let a = m(3, &[&[1, 0, 2, 1], &[2, 1, 1, 0]]);
        let set = a.min_dependent_columns(4).unwrap();
        assert_eq!(set.cols, vec![0, 2]);
        // Kernel: col0 + col2 = (1,2) + (2,1) = 0 over GF(3).
        assert_eq!(set.kernel, vec![1, 1]);
        assert!(GfMatrix::identity(5, 6).min_dependent_columns(6).is_none());
    }

    #[test]
    fn min_dependent_columns_respects_w_max() {
        // The only dependency involves three columns.
        let a = m(3, &[&[1, 0, 1], &[0, 1, 1]]);
        assert!(a.min_dependent_columns(2).is_none());
        let set = a.min_dependent_columns(3).unwrap();
        assert_eq!(set.cols, vec![0, 1, 2]);
    }

    #[test]
    fn budget_exhaustion_reports_completed_sizes() {
        let a = GfMatrix::identity(5, 8);
        let mut spent = 0;
        match a.min_dependent_columns_budgeted(8, 30, &mut spent) {
            DependenceSearch::BudgetExhausted { completed } => assert!(completed < 8),
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn zero_row_matrix_has_dependent_single_column() {
        let a = GfMatrix::zero(3, 0, 4).unwrap();
        let set = a.min_dependent_columns(2).unwrap();
        assert_eq!((set.cols.as_slice(), set.kernel.as_slice()), (&[0][..], &[1][..]));
    }

    #[test]
    fn row_basis_membership() {
        let a = m(7, &[&[1, 2, 3, 4], &[0, 1, 6, 2]]);
        let rb = RowBasis::new(&a);
        assert_eq!(rb.rank(), 2);
        // 3·row0 + row1.
        let t = gf::ctx(7).unwrap().tables();
        let combo: Vec<u8> = (0..4)
            .map(|c| t.add(t.mul(3, a.at(0, c)), a.at(1, c)))
            .collect();
        assert!(rb.contains(&combo));
        assert!(!rb.contains(&[1, 0, 0, 0]));
    }

    #[test]
    fn matmul_and_apply_agree() {
        let a = m(8, &[&[1, 4, 2], &[7, 0, 3]]);
        let v = [5u8, 1, 6];
        let col = GfMatrix::from_rows(8, &[v.to_vec()]).unwrap().transpose();
        let prod = a.matmul(&col).unwrap();
        assert_eq!(a.apply(&v), prod.entries);
    }
}
