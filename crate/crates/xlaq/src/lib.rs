//! Construction and analysis of XL evaluation codes over small fields, the
//! distinguished subcodes sitting inside them, and the asymmetric CSS quantum
//! codes those nested pairs generate.
//!
//! # Overview
//!
//! For q ∈ {3, 4, 5, 7, 8, 9} this crate builds the quadratic extension
//! GF(q²)/GF(q) with a fixed primitive element and a fixed ordering of
//! evaluation points, evaluates a symmetrized monomial basis to obtain the
//! q-ary linear codes C_q(t, m, ℓ), and derives:
//!
//! * the designed-distance parameters (n, k, δ) of every code in the family,
//! * the distinguished subcodes (repetition, D, E, F, F₁, F₂) whose duals
//!   have known small distances,
//! * asymmetric quantum codes [[n, k, {d_z, d_x}]]_q from nested pairs via
//!   the CSS construction, with purity checked and both distances verified
//!   by exact search whenever the configured budget allows,
//! * optimality certificates against the Singleton and Griesmer bounds,
//!   optionally sharpened by a user-supplied table of best-known dimensions.
//!
//! # Modules
//!
//! * [`gf`] — GF(q²)/GF(q) towers: Zech-logarithm arithmetic, trace, norm,
//!   canonical evaluation points, and the trace/norm separation check.
//! * [`linalg`] — dense matrices over GF(q): rank, null space, and minimal
//!   dependent column sets.
//! * [`codes`] — linear codes: duals, nesting, minimum / dual / relative
//!   distances with three independent engines, purity certificates.
//! * [`xl`] — the XL code family C_q(t, m, ℓ) and its named subcodes.
//! * [`css`] — asymmetric quantum codes from nested pairs, dimension
//!   formulas, bound certification, and full table generation.
//! * [`golden`] — CSV snapshot I/O and comparison for regression tables.
//! * [`verify`] — batch verification sweeps exposed to the CLI and tests.
//!
//! # Determinism
//!
//! Every search is deterministic: enumeration orders are fixed, witnesses are
//! tie-broken lexicographically, and parallel table generation preserves the
//! (t, m, ℓ, inner) row order regardless of worker count.
//!
//! # Example
//!
//! ```
//! use xlaq::xl::{XlSpec, build_xl};
//!
//! let spec = XlSpec { q: 5, t: 0, m: 3, ell: 2 }.validated().unwrap();
//! let code = build_xl(&spec).unwrap();
//! assert_eq!((code.n, code.k), (10, 6));
//! ```

pub mod codes;
pub mod css;
pub mod error;
pub mod gf;
pub mod golden;
pub mod linalg;
pub mod verify;
pub mod xl;

pub use codes::{DistanceResult, EnumBudget, Exactness, LinearCode, Method, PurityCertificate};
pub use css::{AqcRecord, BoundStatus, BqTable, InnerFamily, TableOptions, Theorem};
pub use error::{Error, Result};
pub use gf::{FieldCtx, FieldElement, PointOrder};
pub use linalg::GfMatrix;
pub use xl::{XlParams, XlSpec};
