//! Arithmetic in the towers GF(q²)/GF(q) for q ∈ {3, 4, 5, 7, 8, 9}.
//!
//! # Representation
//!
//! Each field GF(q²) is presented as GF(p)[x]/(f) for a fixed monic primitive
//! polynomial f over the prime field, with `a`, the class of x, as primitive
//! element.  A nonzero element is stored as the exponent i of `a^i`
//! (0 ≤ i < q² − 1); zero is a separate variant.  Multiplication is exponent
//! addition; addition goes through a Zech-logarithm table
//! (`a^i + a^j = a^i · (1 + a^{j−i})`).  The table is cross-checked at
//! construction time against direct polynomial arithmetic over GF(p) for
//! every pair of elements, so the two models cannot drift apart silently.
//!
//! # The subfield and its symbols
//!
//! GF(q) sits inside GF(q²) as zero together with the powers `a^{(q+1)k}`.
//! Matrix and codeword entries are stored as compact *symbols* 0 … q−1:
//!
//! * prime q (3, 5, 7): the symbol is the integer value of the element, i.e.
//!   the constant term of its polynomial representation, so GF(5) reads
//!   0, 1, 2, 3, 4 with the usual modular arithmetic;
//! * prime-power q (4, 8, 9): zero maps to 0 and `a^{(q+1)k}` maps to k + 1,
//!   so the symbols enumerate the subfield in discrete-log order.
//!
//! Symbol-level arithmetic is table-driven (see [`GfTables`]).
//!
//! # Canonical evaluation points
//!
//! Every q carries a fixed ordering α₁, …, α_q of the subfield and a fixed
//! list β₁, …, β_r (r = (q² − q)/2) containing exactly one member of each
//! conjugate pair {β, β^q} outside the subfield — the member with the
//! smaller exponent, listed in ascending exponent order.  Both lists are
//! stored verbatim and re-derived at construction; a mismatch aborts.
//!
//! The key separation fact used by the dual-distance arguments is checked by
//! [`verify_trace_norm_lemma`]: on α's and β's, two distinct points with the
//! same trace always have distinct norms (two points sharing both would be a
//! conjugate pair, and the point lists contain no such pair).

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Sentinel in the Zech table for "1 + a^i = 0".
const ZECH_NONE: u16 = u16::MAX;

/// An element of GF(q²): zero, or the exponent of the primitive element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldElement {
    /// The additive identity.
    Zero,
    /// `a^i` for the field's primitive element `a`.
    Pow(u16),
}

impl FieldElement {
    /// Is this the zero element?
    #[must_use]
    pub fn is_zero(self) -> bool {
        matches!(self, FieldElement::Zero)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Zero => write!(f, "0"),
            FieldElement::Pow(0) => write!(f, "1"),
            FieldElement::Pow(1) => write!(f, "a"),
            FieldElement::Pow(i) => write!(f, "a^{i}"),
        }
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The fixed evaluation-point ordering for one field.
#[derive(Debug, Clone, Serialize)]
pub struct PointOrder {
    /// The q subfield points α₁, …, α_q in their canonical order.
    pub alphas: Vec<FieldElement>,
    /// The r conjugate-pair representatives β₁, …, β_r in ascending
    /// exponent order.
    pub betas: Vec<FieldElement>,
    /// r = (q² − q)/2.
    pub r: usize,
}

/// Table-driven arithmetic on GF(q) symbols 0 … q−1.
///
/// All tables are derived from the parent [`FieldCtx`] and indexed row-major
/// by symbol, so linear algebra over GF(q) never touches field elements.
#[derive(Debug, Clone)]
pub struct GfTables {
    /// Subfield order.
    pub q: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl GfTables {
    /// `x + y` on symbols.
    #[inline]
    #[must_use]
    pub fn add(&self, x: u8, y: u8) -> u8 {
        self.add[x as usize * self.q as usize + y as usize]
    }

    /// `x · y` on symbols.
    #[inline]
    #[must_use]
    pub fn mul(&self, x: u8, y: u8) -> u8 {
        self.mul[x as usize * self.q as usize + y as usize]
    }

    /// `−x` on symbols.
    #[inline]
    #[must_use]
    pub fn neg(&self, x: u8) -> u8 {
        self.neg[x as usize]
    }

    /// `x − y` on symbols.
    #[inline]
    #[must_use]
    pub fn sub(&self, x: u8, y: u8) -> u8 {
        self.add(x, self.neg(y))
    }

    /// `x⁻¹` on symbols; panics on 0 (an internal misuse, not an input error).
    #[inline]
    #[must_use]
    pub fn inv(&self, x: u8) -> u8 {
        assert!(x != 0, "inverse of zero");
        self.inv[x as usize]
    }
}

/// A fully constructed GF(q²)/GF(q) tower with its canonical points.
#[derive(Debug)]
pub struct FieldCtx {
    /// Subfield order q.
    pub q: u8,
    /// Characteristic p.
    pub p: u8,
    /// Extension order q².
    pub q2: u16,
    /// Monic defining polynomial of GF(q²) over GF(p), ascending
    /// coefficients (constant first, leading 1 last).
    pub defining_poly: Vec<u8>,
    /// q² − 1, the order of the multiplicative group.
    order: u16,
    /// Zech logarithms: `zech[i]` is the exponent of `1 + a^i`, or
    /// [`ZECH_NONE`] when the sum is zero.
    zech: Vec<u16>,
    /// Polynomial representation of `a^i` (coefficients over GF(p)).
    poly_rep: Vec<Vec<u8>>,
    /// Exponent of the constant polynomial c, for c = 1 … p−1.
    log_of_const: Vec<u16>,
    /// GF(q) symbol of `a^i` for subfield exponents; `u8::MAX` elsewhere.
    sym_of_exp: Vec<u8>,
    /// Symbol → element, symbol 0 being zero.
    elem_of_sym: Vec<FieldElement>,
    /// Symbol-level arithmetic tables.
    tables: GfTables,
    /// Canonical evaluation points.
    points: PointOrder,
}

impl Serialize for FieldCtx {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FieldCtx", 6)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("q2", &self.q2)?;
        st.serialize_field("defining_poly", &self.defining_poly)?;
        st.serialize_field("subfield", &self.elem_of_sym)?;
        st.serialize_field("points", &self.points)?;
        st.end()
    }
}

/// Fixed presentation data for one supported q.
struct Presentation {
    p: u8,
    poly: &'static [u8],
    alphas: &'static [Pt],
    betas: &'static [u16],
}

/// Compact notation for the stored α lists: zero, a power of `a`, or a
/// prime-field integer.
enum Pt {
    Z,
    P(u16),
    I(u8),
}

use Pt::{I, P, Z};

fn presentation(q: u8) -> Result<Presentation> {
    let pres = match q {
        3 => Presentation {
            p: 3,
            poly: &[2, 2, 1], // x² + 2x + 2
            alphas: &[I(1), I(2), Z],
            betas: &[1, 2, 5],
        },
        4 => Presentation {
            p: 2,
            poly: &[1, 1, 0, 0, 1], // x⁴ + x + 1
            alphas: &[P(0), Z, P(5), P(10)],
            betas: &[1, 2, 3, 6, 7, 11],
        },
        5 => Presentation {
            p: 5,
            poly: &[2, 4, 1], // x² + 4x + 2
            alphas: &[I(1), I(4), Z, I(2), I(3)],
            betas: &[1, 2, 3, 4, 7, 8, 9, 13, 14, 19],
        },
        7 => Presentation {
            p: 7,
            poly: &[3, 6, 1], // x² + 6x + 3
            alphas: &[I(1), I(6), Z, I(2), I(5), I(3), I(4)],
            betas: &[
                1, 2, 3, 4, 5, 6, 9, 10, 11, 12, 13, 17, 18, 19, 20, 25, 26, 27, 33, 34, 41,
            ],
        },
        8 => Presentation {
            p: 2,
            poly: &[1, 1, 0, 1, 1, 0, 1], // x⁶ + x⁴ + x³ + x + 1
            alphas: &[P(0), P(45), P(36), P(27), P(18), Z, P(9), P(54)],
            betas: &[
                1, 2, 3, 4, 5, 6, 7, 10, 11, 12, 13, 14, 15, 19, 20, 21, 22, 23, 28, 29, 30, 31,
                37, 38, 39, 46, 47, 55,
            ],
        },
        9 => Presentation {
            p: 3,
            poly: &[2, 0, 0, 2, 1], // x⁴ + 2x³ + 2
            alphas: &[P(0), Z, P(70), P(60), P(50), I(2), P(30), P(20), P(10)],
            betas: &[
                1, 2, 3, 4, 5, 6, 7, 8, 11, 12, 13, 14, 15, 16, 17, 21, 22, 23, 24, 25, 26, 31,
                32, 33, 34, 35, 41, 42, 43, 44, 51, 52, 53, 61, 62, 71,
            ],
        },
        other => return Err(Error::UnsupportedField(other)),
    };
    Ok(pres)
}

/// Construct the tower for a supported q.  Equivalent to [`FieldCtx::new`].
pub fn make_field(q: u8) -> Result<FieldCtx> {
    FieldCtx::new(q)
}

/// Shared, lazily constructed contexts; the six supported fields are small
/// enough (≤ GF(81)) that constructing and retaining all of them is free.
pub fn ctx(q: u8) -> Result<&'static FieldCtx> {
    static CTXS: [OnceLock<FieldCtx>; 10] = [const { OnceLock::new() }; 10];
    if !matches!(q, 3 | 4 | 5 | 7 | 8 | 9) {
        return Err(Error::UnsupportedField(q));
    }
    Ok(CTXS[q as usize].get_or_init(|| {
        FieldCtx::new(q).expect("construction of a supported field cannot fail")
    }))
}

impl FieldCtx {
    /// Build GF(q²)/GF(q) from the fixed presentation, deriving and
    /// cross-checking every table.
    ///
    /// # Errors
    ///
    /// [`Error::UnsupportedField`] for q outside {3, 4, 5, 7, 8, 9};
    /// [`Error::FieldConstruction`] if any internal consistency check fails
    /// (which would indicate corrupted presentation data).
    pub fn new(q: u8) -> Result<FieldCtx> {
        let pres = presentation(q)?;
        let p = pres.p;
        let deg = pres.poly.len() - 1;
        let q2 = u16::from(q) * u16::from(q);
        let order = q2 - 1;
        let fail = |reason: &str| Error::FieldConstruction {
            q,
            reason: reason.to_string(),
        };
        if (p as u64).pow(deg as u32) != u64::from(q2) {
            return Err(fail("defining polynomial degree does not match q²"));
        }

        // Enumerate a⁰, a¹, … by repeated multiplication by a, reducing by
        // the monic defining polynomial.  Primitivity (a full cycle of
        // length q²−1) certifies in one stroke that the quotient is a field
        // and that a generates its multiplicative group.
        let mut poly_rep: Vec<Vec<u8>> = Vec::with_capacity(order as usize);
        let mut index: HashMap<Vec<u8>, u16> = HashMap::new();
        let mut cur = vec![0u8; deg];
        cur[0] = 1;
        for i in 0..order {
            if index.insert(cur.clone(), i).is_some() {
                return Err(fail("defining polynomial is not primitive"));
            }
            poly_rep.push(cur.clone());
            cur = mul_by_x(&cur, pres.poly, p);
        }
        if cur != poly_rep[0] {
            return Err(fail("primitive element order does not divide out"));
        }

        // Zech logarithms, then an exhaustive cross-check of Zech-based
        // addition against coefficient-wise polynomial addition.
        let mut zech = vec![ZECH_NONE; order as usize];
        for i in 0..order as usize {
            let mut s = poly_rep[i].clone();
            s[0] = (s[0] + 1) % p;
            if s.iter().any(|&c| c != 0) {
                zech[i] = index[&s];
            }
        }

        let log_of_const = (1..p)
            .map(|c| {
                let mut v = vec![0u8; deg];
                v[0] = c;
                index[&v]
            })
            .collect::<Vec<u16>>();

        // Subfield membership: a^i ∈ GF(q) iff (q+1) | i.
        let step = u16::from(q) + 1;
        let mut sym_of_exp = vec![u8::MAX; order as usize];
        let mut elem_of_sym = vec![FieldElement::Zero; q as usize];
        for k in 0..u16::from(q) - 1 {
            let e = (step * k) % order;
            let sym = if deg == 2 {
                // Prime subfield: the element is its constant term.
                let rep = &poly_rep[e as usize];
                if rep[1] != 0 {
                    return Err(fail("subfield element has a non-constant representation"));
                }
                rep[0]
            } else {
                (k + 1) as u8
            };
            sym_of_exp[e as usize] = sym;
            elem_of_sym[sym as usize] = FieldElement::Pow(e);
        }
        if elem_of_sym[1..].iter().any(|e| e.is_zero()) {
            return Err(fail("subfield symbols are not a bijection"));
        }

        let points = {
            let alphas = pres
                .alphas
                .iter()
                .map(|pt| match *pt {
                    Z => FieldElement::Zero,
                    P(e) => FieldElement::Pow(e),
                    I(c) => FieldElement::Pow(log_of_const[c as usize - 1]),
                })
                .collect::<Vec<_>>();
            let betas = pres
                .betas
                .iter()
                .map(|&e| FieldElement::Pow(e))
                .collect::<Vec<_>>();
            let r = betas.len();
            PointOrder { alphas, betas, r }
        };

        let mut ctx = FieldCtx {
            q,
            p,
            q2,
            defining_poly: pres.poly.to_vec(),
            order,
            zech,
            poly_rep,
            log_of_const,
            sym_of_exp,
            elem_of_sym,
            tables: GfTables {
                q,
                add: Vec::new(),
                mul: Vec::new(),
                neg: Vec::new(),
                inv: Vec::new(),
            },
            points,
        };
        ctx.check_addition_against_polynomials()
            .map_err(|reason| fail(&reason))?;
        ctx.build_symbol_tables();
        ctx.check_points().map_err(|reason| fail(&reason))?;
        Ok(ctx)
    }

    /// Exhaustively compare Zech-based addition with polynomial addition.
    fn check_addition_against_polynomials(&self) -> std::result::Result<(), String> {
        let index: HashMap<&Vec<u8>, u16> = self
            .poly_rep
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i as u16))
            .collect();
        for i in 0..self.order {
            for j in 0..self.order {
                let zech_sum = self.add(FieldElement::Pow(i), FieldElement::Pow(j));
                let mut poly_sum = self.poly_rep[i as usize].clone();
                for (c, &d) in poly_sum.iter_mut().zip(&self.poly_rep[j as usize]) {
                    *c = (*c + d) % self.p;
                }
                let expect = if poly_sum.iter().all(|&c| c == 0) {
                    FieldElement::Zero
                } else {
                    FieldElement::Pow(index[&poly_sum])
                };
                if zech_sum != expect {
                    return Err(format!("zech/polynomial disagreement at a^{i} + a^{j}"));
                }
            }
        }
        Ok(())
    }

    /// Derive GF(q) symbol tables from element arithmetic.
    fn build_symbol_tables(&mut self) {
        let q = self.q as usize;
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for x in 0..q {
            let ex = self.elem_of_sym[x];
            neg[x] = self.symbol(self.neg(ex));
            if x != 0 {
                inv[x] = self.symbol(self.inv(ex));
            }
            for y in 0..q {
                let ey = self.elem_of_sym[y];
                add[x * q + y] = self.symbol(self.add(ex, ey));
                mul[x * q + y] = self.symbol(self.mul(ex, ey));
            }
        }
        self.tables = GfTables {
            q: self.q,
            add,
            mul,
            neg,
            inv,
        };
    }

    /// Validate the stored point lists: the α's enumerate the subfield, the
    /// β's match the derived conjugate-pair representatives, and traces and
    /// norms of all points land in the subfield.
    fn check_points(&self) -> std::result::Result<(), String> {
        let mut seen = vec![false; self.q as usize];
        for &alpha in &self.points.alphas {
            if !self.in_subfield(alpha) {
                return Err(format!("α list contains non-subfield element {alpha}"));
            }
            let sym = self.symbol(alpha) as usize;
            if seen[sym] {
                return Err("α list repeats a subfield element".into());
            }
            seen[sym] = true;
        }
        if self.points.alphas.len() != self.q as usize || seen.iter().any(|&s| !s) {
            return Err("α list does not enumerate the subfield".into());
        }

        let step = u16::from(self.q) + 1;
        let mut derived = Vec::new();
        for e in 1..self.order {
            if e % step == 0 {
                continue;
            }
            let conj = (e as u32 * u32::from(self.q) % u32::from(self.order)) as u16;
            if e <= conj {
                derived.push(FieldElement::Pow(e));
            }
        }
        if derived != self.points.betas {
            return Err("β list disagrees with derived conjugate representatives".into());
        }
        if derived.len() != (self.q2 as usize - self.q as usize) / 2 {
            return Err("β count is not (q² − q)/2".into());
        }
        for &pt in self.points.alphas.iter().chain(&self.points.betas) {
            if !self.in_subfield(self.trace(pt)) || !self.in_subfield(self.norm(pt)) {
                return Err(format!("trace or norm of {pt} escapes the subfield"));
            }
        }
        Ok(())
    }

    /// q² − 1, the multiplicative order.
    #[must_use]
    pub fn group_order(&self) -> u16 {
        self.order
    }

    /// Symbol-level GF(q) arithmetic tables.
    #[must_use]
    pub fn tables(&self) -> &GfTables {
        &self.tables
    }

    /// The canonical evaluation points.
    #[must_use]
    pub fn points(&self) -> &PointOrder {
        &self.points
    }

    /// The evaluation sequence for length parameter t: α₁ … α_t followed by
    /// every β.  Length is n = t + r.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidSpec`] when t > q.
    pub fn eval_points(&self, t: u8) -> Result<Vec<FieldElement>> {
        if t > self.q {
            return Err(Error::InvalidSpec {
                reason: format!("t = {t} exceeds q = {q}", q = self.q),
            });
        }
        Ok(self.points.alphas[..t as usize]
            .iter()
            .chain(&self.points.betas)
            .copied()
            .collect())
    }

    /// `x + y`.
    #[must_use]
    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        match (x, y) {
            (FieldElement::Zero, _) => y,
            (_, FieldElement::Zero) => x,
            (FieldElement::Pow(i), FieldElement::Pow(j)) => {
                let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
                match self.zech[(hi - lo) as usize] {
                    ZECH_NONE => FieldElement::Zero,
                    z => FieldElement::Pow((lo + z) % self.order),
                }
            }
        }
    }

    /// `−x`.
    #[must_use]
    pub fn neg(&self, x: FieldElement) -> FieldElement {
        if self.p == 2 {
            return x;
        }
        match x {
            FieldElement::Zero => FieldElement::Zero,
            FieldElement::Pow(i) => FieldElement::Pow((i + self.order / 2) % self.order),
        }
    }

    /// `x − y`.
    #[must_use]
    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    /// `x · y`.
    #[must_use]
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        match (x, y) {
            (FieldElement::Zero, _) | (_, FieldElement::Zero) => FieldElement::Zero,
            (FieldElement::Pow(i), FieldElement::Pow(j)) => {
                FieldElement::Pow((u32::from(i) + u32::from(j)).rem_euclid(u32::from(self.order)) as u16)
            }
        }
    }

    /// `x⁻¹`; panics on zero (internal misuse, not an input error).
    #[must_use]
    pub fn inv(&self, x: FieldElement) -> FieldElement {
        match x {
            FieldElement::Zero => panic!("inverse of zero"),
            FieldElement::Pow(i) => FieldElement::Pow((self.order - i) % self.order),
        }
    }

    /// `x^e` with the convention 0⁰ = 1 (evaluation of the constant
    /// monomial).
    #[must_use]
    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        match x {
            FieldElement::Zero => {
                if e == 0 {
                    FieldElement::Pow(0)
                } else {
                    FieldElement::Zero
                }
            }
            FieldElement::Pow(i) => {
                FieldElement::Pow(((u64::from(i) * e) % u64::from(self.order)) as u16)
            }
        }
    }

    /// The Frobenius map x ↦ x^q of the extension over the subfield.
    #[must_use]
    pub fn frobenius(&self, x: FieldElement) -> FieldElement {
        self.pow(x, u64::from(self.q))
    }

    /// Trace onto the subfield: x + x^q.
    #[must_use]
    pub fn trace(&self, x: FieldElement) -> FieldElement {
        self.add(x, self.frobenius(x))
    }

    /// Norm onto the subfield: x^{q+1}.
    #[must_use]
    pub fn norm(&self, x: FieldElement) -> FieldElement {
        self.pow(x, u64::from(self.q) + 1)
    }

    /// Does x lie in the subfield GF(q)?
    #[must_use]
    pub fn in_subfield(&self, x: FieldElement) -> bool {
        match x {
            FieldElement::Zero => true,
            FieldElement::Pow(i) => i % (u16::from(self.q) + 1) == 0,
        }
    }

    /// GF(q) symbol of a subfield element; panics on non-subfield input
    /// (internal misuse — evaluation results are checked to land in GF(q)).
    #[must_use]
    pub fn symbol(&self, x: FieldElement) -> u8 {
        match x {
            FieldElement::Zero => 0,
            FieldElement::Pow(i) => {
                let s = self.sym_of_exp[i as usize];
                assert!(s != u8::MAX, "element a^{i} is not in the subfield");
                s
            }
        }
    }

    /// The subfield element carrying a GF(q) symbol.
    #[must_use]
    pub fn element_from_symbol(&self, sym: u8) -> FieldElement {
        self.elem_of_sym[sym as usize]
    }

    /// The element with prime-field integer value c (c < p).
    #[must_use]
    pub fn element_from_int(&self, c: u8) -> FieldElement {
        if c == 0 {
            FieldElement::Zero
        } else {
            FieldElement::Pow(self.log_of_const[c as usize - 1])
        }
    }

    /// Polynomial representation (ascending coefficients over GF(p)) of an
    /// element; all-zero for zero.
    #[must_use]
    pub fn polynomial_rep(&self, x: FieldElement) -> Vec<u8> {
        match x {
            FieldElement::Zero => vec![0; self.defining_poly.len() - 1],
            FieldElement::Pow(i) => self.poly_rep[i as usize].clone(),
        }
    }
}

/// Multiply a coefficient vector by x and reduce modulo the monic `poly`.
fn mul_by_x(v: &[u8], poly: &[u8], p: u8) -> Vec<u8> {
    let deg = v.len();
    let mut out = vec![0u8; deg];
    out[1..].copy_from_slice(&v[..deg - 1]);
    let carry = v[deg - 1];
    if carry != 0 {
        // x^deg ≡ −(poly without leading term)
        for (o, &c) in out.iter_mut().zip(poly) {
            let sub = (carry as u16 * c as u16) % u16::from(p);
            *o = ((u16::from(*o) + u16::from(p) - sub) % u16::from(p)) as u8;
        }
    }
    out
}

/// Outcome of the trace/norm separation check for one field.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    /// Subfield order.
    pub q: u8,
    /// Unordered pairs of distinct field elements examined for the
    /// field-wide statement.
    pub field_pairs_checked: u64,
    /// Unordered pairs of distinct evaluation points examined.
    pub point_pairs_checked: u64,
    /// True when both statements hold.
    pub pass: bool,
    /// A violating pair of evaluation points, if any.
    pub counterexample: Option<(FieldElement, FieldElement)>,
}

/// Check the separation property behind the dual-distance arguments.
///
/// Field-wide: two distinct elements of GF(q²) sharing both trace and norm
/// are a conjugate pair {x, x^q} with x outside the subfield (they are the
/// two roots of y² − Tr·y + N).  On the canonical points: since the α/β
/// lists contain no conjugate pair, two distinct points with equal traces
/// must have distinct norms.
#[must_use]
pub fn verify_trace_norm_lemma(ctx: &FieldCtx) -> LemmaReport {
    let mut all: Vec<FieldElement> = vec![FieldElement::Zero];
    all.extend((0..ctx.group_order()).map(FieldElement::Pow));

    let mut field_pairs = 0u64;
    let mut pass = true;
    let mut counterexample = None;
    for (i, &x) in all.iter().enumerate() {
        for &y in &all[i + 1..] {
            field_pairs += 1;
            if ctx.trace(x) == ctx.trace(y) && ctx.norm(x) == ctx.norm(y) {
                let conjugate = ctx.frobenius(x) == y && !ctx.in_subfield(x);
                if !conjugate {
                    pass = false;
                    counterexample.get_or_insert((x, y));
                }
            }
        }
    }

    let pts: Vec<FieldElement> = ctx
        .points()
        .alphas
        .iter()
        .chain(&ctx.points().betas)
        .copied()
        .collect();
    let mut point_pairs = 0u64;
    for (i, &x) in pts.iter().enumerate() {
        for &y in &pts[i + 1..] {
            point_pairs += 1;
            if ctx.trace(x) == ctx.trace(y) && ctx.norm(x) == ctx.norm(y) {
                pass = false;
                counterexample.get_or_insert((x, y));
            }
        }
    }

    LemmaReport {
        q: ctx.q,
        field_pairs_checked: field_pairs,
        point_pairs_checked: point_pairs,
        pass,
        counterexample,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SUPPORTED: [u8; 6] = [3, 4, 5, 7, 8, 9];

    #[test]
    fn construction_succeeds_for_all_supported_orders() {
        for q in SUPPORTED {
            let ctx = FieldCtx::new(q).unwrap();
            assert_eq!(ctx.q2, u16::from(q) * u16::from(q));
            assert_eq!(ctx.points().r, (ctx.q2 as usize - q as usize) / 2);
        }
    }

    #[test]
    fn unsupported_orders_are_rejected() {
        for q in [0, 1, 2, 6, 10, 11, 16] {
            assert!(matches!(FieldCtx::new(q), Err(Error::UnsupportedField(_))));
        }
    }

    #[test]
    fn gf9_frozen_facts() {
        // In GF(9) = GF(3)[x]/(x² + 2x + 2): a² = a + 1, a⁴ = 2,
        // Tr(a) = 1, N(a) = 2, and 1 + a = a².
        let ctx = ctx(3).unwrap();
        let a = FieldElement::Pow(1);
        assert_eq!(ctx.pow(a, 4), ctx.element_from_int(2));
        assert_eq!(ctx.trace(a), ctx.element_from_int(1));
        assert_eq!(ctx.norm(a), ctx.element_from_int(2));
        assert_eq!(ctx.add(FieldElement::Pow(0), a), FieldElement::Pow(2));
    }

    #[test]
    fn gf16_frozen_facts() {
        // In GF(16) = GF(2)[x]/(x⁴ + x + 1): Tr(a) = 1, N(a) = a⁵,
        // Tr(a³) = a¹⁰, and the subfield is {0, 1, a⁵, a¹⁰}.
        let ctx = ctx(4).unwrap();
        let a = FieldElement::Pow(1);
        assert_eq!(ctx.trace(a), FieldElement::Pow(0));
        assert_eq!(ctx.norm(a), FieldElement::Pow(5));
        assert_eq!(ctx.trace(FieldElement::Pow(3)), FieldElement::Pow(10));
        assert_eq!(ctx.symbol(FieldElement::Pow(5)), 2);
        assert_eq!(ctx.symbol(FieldElement::Pow(10)), 3);
    }

    #[test]
    fn gf25_frozen_facts() {
        // In GF(25) = GF(5)[x]/(x² + 4x + 2): N(a) = a⁶ = 2, Tr(a) = 1,
        // Tr(a²) = 2, and the integer symbols follow a⁶ᵏ powers:
        // a⁶ = 2, a¹² = 4, a¹⁸ = 3.
        let ctx = ctx(5).unwrap();
        let a = FieldElement::Pow(1);
        assert_eq!(ctx.norm(a), ctx.element_from_int(2));
        assert_eq!(ctx.trace(a), ctx.element_from_int(1));
        assert_eq!(ctx.trace(FieldElement::Pow(2)), ctx.element_from_int(2));
        assert_eq!(ctx.symbol(FieldElement::Pow(6)), 2);
        assert_eq!(ctx.symbol(FieldElement::Pow(12)), 4);
        assert_eq!(ctx.symbol(FieldElement::Pow(18)), 3);
    }

    #[test]
    fn gf81_integer_two_is_a_to_the_40() {
        let ctx = ctx(9).unwrap();
        assert_eq!(ctx.element_from_int(2), FieldElement::Pow(40));
        // 2 = −1, so its square is 1.
        assert_eq!(
            ctx.mul(FieldElement::Pow(40), FieldElement::Pow(40)),
            FieldElement::Pow(0)
        );
    }

    #[test]
    fn frobenius_fixes_exactly_the_subfield() {
        for q in SUPPORTED {
            let ctx = ctx(q).unwrap();
            let mut fixed = 1usize; // zero
            for i in 0..ctx.group_order() {
                let x = FieldElement::Pow(i);
                let is_fixed = ctx.frobenius(x) == x;
                assert_eq!(is_fixed, ctx.in_subfield(x));
                fixed += usize::from(is_fixed);
            }
            assert_eq!(fixed, q as usize);
        }
    }

    #[test]
    fn trace_is_additive_and_norm_is_multiplicative() {
        for q in SUPPORTED {
            let ctx = ctx(q).unwrap();
            let order = ctx.group_order();
            for i in (0..order).step_by(7) {
                for j in (0..order).step_by(5) {
                    let (x, y) = (FieldElement::Pow(i), FieldElement::Pow(j));
                    assert_eq!(
                        ctx.trace(ctx.add(x, y)),
                        ctx.add(ctx.trace(x), ctx.trace(y))
                    );
                    assert_eq!(ctx.norm(ctx.mul(x, y)), ctx.mul(ctx.norm(x), ctx.norm(y)));
                }
            }
        }
    }

    #[test]
    fn symbol_tables_match_element_arithmetic() {
        for q in SUPPORTED {
            let ctx = ctx(q).unwrap();
            let t = ctx.tables();
            for x in 0..q {
                let ex = ctx.element_from_symbol(x);
                for y in 0..q {
                    let ey = ctx.element_from_symbol(y);
                    assert_eq!(t.add(x, y), ctx.symbol(ctx.add(ex, ey)));
                    assert_eq!(t.mul(x, y), ctx.symbol(ctx.mul(ex, ey)));
                }
                if x != 0 {
                    assert_eq!(t.mul(x, t.inv(x)), 1);
                }
                assert_eq!(t.add(x, t.neg(x)), 0);
            }
        }
    }

    #[test]
    fn eval_points_prefix_and_length() {
        let ctx = ctx(7).unwrap();
        for t in 0..=7u8 {
            let pts = ctx.eval_points(t).unwrap();
            assert_eq!(pts.len(), t as usize + 21);
        }
        assert!(ctx.eval_points(8).is_err());
    }

    #[test]
    fn separation_lemma_holds_for_all_supported_orders() {
        for q in SUPPORTED {
            let report = verify_trace_norm_lemma(ctx(q).unwrap());
            assert!(report.pass, "separation fails for q = {q}");
            assert!(report.counterexample.is_none());
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(FieldElement::Zero.to_string(), "0");
        assert_eq!(FieldElement::Pow(0).to_string(), "1");
        assert_eq!(FieldElement::Pow(1).to_string(), "a");
        assert_eq!(FieldElement::Pow(13).to_string(), "a^13");
    }
}
