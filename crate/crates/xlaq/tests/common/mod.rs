//! Shared fixtures for the integration suites: frozen reference data for
//! the six field towers, frozen generator matrices with dual-weight
//! witnesses, an independent polynomial-arithmetic model, and brute-force
//! distance oracles.
//!
//! Everything here is deliberately written without reference to the
//! library's own arithmetic paths, so that agreement between a fixture and
//! the library is a genuine cross-check rather than a tautology.

#![allow(dead_code)]

use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::Rng;

use xlaq::codes::LinearCode;
use xlaq::gf::FieldElement::{self, Pow, Zero};
use xlaq::linalg::{GfMatrix, RowBasis};

/// How one field's canonical subfield row is written in the reference
/// data: prime fields list plain integers, prime-power fields list
/// explicit powers of the primitive element.
pub enum AlphaRow {
    /// Subfield symbols 0 … q−1 in canonical order.
    Ints(&'static [u8]),
    /// Explicit elements in canonical order.
    Elems(&'static [FieldElement]),
}

/// The frozen description of one GF(q²)/GF(q) tower.
pub struct FrozenField {
    /// Subfield order.
    pub q: u8,
    /// Characteristic.
    pub p: u8,
    /// Extension order q².
    pub q2: u16,
    /// Defining polynomial of GF(q²) over GF(p), ascending coefficients,
    /// monic, with the residue class of x as the primitive element.
    pub poly: &'static [u8],
    /// The q subfield points in canonical order.
    pub alphas: AlphaRow,
    /// Exponents of the r conjugate-pair representatives, ascending.
    pub beta_exps: &'static [u16],
}

impl FrozenField {
    /// The expected α row as field elements.
    pub fn expected_alphas(&self, ctx: &xlaq::FieldCtx) -> Vec<FieldElement> {
        match self.alphas {
            AlphaRow::Ints(symbols) => {
                symbols.iter().map(|&s| ctx.element_from_int(s)).collect()
            }
            AlphaRow::Elems(elems) => elems.to_vec(),
        }
    }

    /// The expected β row as field elements.
    pub fn expected_betas(&self) -> Vec<FieldElement> {
        self.beta_exps.iter().map(|&e| Pow(e)).collect()
    }
}

/// The six supported towers with their full frozen reference data.
pub fn frozen_fields() -> Vec<FrozenField> {
    vec![
        FrozenField {
            q: 3,
            p: 3,
            q2: 9,
            poly: &[2, 2, 1],
            alphas: AlphaRow::Ints(&[1, 2, 0]),
            beta_exps: &[1, 2, 5],
        },
        FrozenField {
            q: 4,
            p: 2,
            q2: 16,
            poly: &[1, 1, 0, 0, 1],
            alphas: AlphaRow::Elems(&[Pow(0), Zero, Pow(5), Pow(10)]),
            beta_exps: &[1, 2, 3, 6, 7, 11],
        },
        FrozenField {
            q: 5,
            p: 5,
            q2: 25,
            poly: &[2, 4, 1],
            alphas: AlphaRow::Ints(&[1, 4, 0, 2, 3]),
            beta_exps: &[1, 2, 3, 4, 7, 8, 9, 13, 14, 19],
        },
        FrozenField {
            q: 7,
            p: 7,
            q2: 49,
            poly: &[3, 6, 1],
            alphas: AlphaRow::Ints(&[1, 6, 0, 2, 5, 3, 4]),
            beta_exps: &[
                1, 2, 3, 4, 5, 6, 9, 10, 11, 12, 13, 17, 18, 19, 20, 25, 26, 27, 33, 34, 41,
            ],
        },
        FrozenField {
            q: 8,
            p: 2,
            q2: 64,
            poly: &[1, 1, 0, 1, 1, 0, 1],
            alphas: AlphaRow::Elems(&[
                Pow(0),
                Pow(45),
                Pow(36),
                Pow(27),
                Pow(18),
                Zero,
                Pow(9),
                Pow(54),
            ]),
            beta_exps: &[
                1, 2, 3, 4, 5, 6, 7, 10, 11, 12, 13, 14, 15, 19, 20, 21, 22, 23, 28, 29, 30, 31,
                37, 38, 39, 46, 47, 55,
            ],
        },
        FrozenField {
            q: 9,
            p: 3,
            q2: 81,
            poly: &[2, 0, 0, 2, 1],
            alphas: AlphaRow::Elems(&[
                Pow(0),
                Zero,
                Pow(70),
                Pow(60),
                Pow(50),
                Pow(40),
                Pow(30),
                Pow(20),
                Pow(10),
            ]),
            beta_exps: &[
                1, 2, 3, 4, 5, 6, 7, 8, 11, 12, 13, 14, 15, 16, 17, 21, 22, 23, 24, 25, 26, 31,
                32, 33, 34, 35, 41, 42, 43, 44, 51, 52, 53, 61, 62, 71,
            ],
        },
    ]
}

/// Long-hand arithmetic in GF(p)[x]/(f): coefficient vectors of length
/// deg f, ascending powers, reduced mod p.  Completely independent of the
/// library's Zech-table representation.
pub struct PolyField {
    /// Characteristic.
    pub p: u8,
    /// Degree of the modulus.
    pub deg: usize,
    /// Monic modulus, ascending coefficients, length deg + 1.
    pub modulus: Vec<u8>,
}

impl PolyField {
    /// Wrap a monic modulus of degree ≥ 2.
    pub fn new(p: u8, modulus: &[u8]) -> PolyField {
        assert!(modulus.len() >= 3, "degree must be at least 2");
        assert_eq!(*modulus.last().unwrap(), 1, "modulus must be monic");
        PolyField {
            p,
            deg: modulus.len() - 1,
            modulus: modulus.to_vec(),
        }
    }

    /// The zero residue.
    pub fn zero(&self) -> Vec<u8> {
        vec![0; self.deg]
    }

    /// The residue 1.
    pub fn one(&self) -> Vec<u8> {
        let mut v = self.zero();
        v[0] = 1;
        v
    }

    /// The residue x.
    pub fn x(&self) -> Vec<u8> {
        let mut v = self.zero();
        v[1] = 1;
        v
    }

    /// Coefficientwise sum mod p.
    pub fn add(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    /// Schoolbook product reduced by the monic modulus.
    pub fn mul(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let p = u16::from(self.p);
        let mut prod = vec![0u16; 2 * self.deg - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u16::from(x) * u16::from(y)) % p;
            }
        }
        for i in (self.deg..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &mj) in self.modulus[..self.deg].iter().enumerate() {
                let sub = (u16::from(mj) * c) % p;
                let idx = i - self.deg + j;
                prod[idx] = (prod[idx] + p - sub) % p;
            }
        }
        prod[..self.deg].iter().map(|&c| c as u8).collect()
    }

    /// b-th power by repeated multiplication.
    pub fn pow(&self, a: &[u8], e: u32) -> Vec<u8> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

/// All powers of x in GF(p)[x]/(f): entry i is the coefficient vector of
/// xⁱ.  Panics unless x has full multiplicative order (primitivity), which
/// must hold for every frozen modulus.
pub fn power_table(pf: &PolyField) -> Vec<Vec<u8>> {
    let order = u32::from(pf.p).pow(pf.deg as u32) - 1;
    let x = pf.x();
    let mut reps = Vec::with_capacity(order as usize);
    let mut cur = pf.one();
    for _ in 0..order {
        reps.push(cur.clone());
        cur = pf.mul(&cur, &x);
    }
    assert_eq!(cur, pf.one(), "x must have multiplicative order q² − 1");
    let distinct: HashSet<_> = reps.iter().cloned().collect();
    assert_eq!(distinct.len(), reps.len(), "powers of x must be distinct");
    reps
}

/// A library element in the independent coefficient-vector model.
pub fn to_poly(e: FieldElement, reps: &[Vec<u8>], deg: usize) -> Vec<u8> {
    match e {
        Zero => vec![0; deg],
        Pow(i) => reps[usize::from(i)].clone(),
    }
}

/// Frozen generator of the dimension-3 subcode at q = 4, t = 4 (length
/// 10), symbol alphabet 0 … 3.
pub const D44: [[u8; 10]; 3] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 1, 1, 3, 2, 2, 3],
    [1, 0, 3, 2, 2, 3, 1, 1, 2, 3],
];

/// Frozen generator of the dimension-5 subcode E at q = 4, t = 4: the
/// rows of [`D44`] with the two extending rows interleaved in the
/// construction's basis order.
pub const E44: [[u8; 10]; 5] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 1, 1, 3, 2, 2, 3],
    [0, 0, 0, 0, 1, 1, 2, 3, 3, 2],
    [1, 0, 3, 2, 2, 3, 1, 1, 2, 3],
    [1, 0, 2, 3, 3, 2, 1, 1, 3, 2],
];

/// Frozen generator of the dimension-3 subcode at q = 5, t = 0 (length
/// 10), symbol alphabet 0 … 4.
pub const D50: [[u8; 10]; 3] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 2, 0, 1, 2, 4, 0, 4, 3, 3],
    [2, 4, 3, 1, 3, 1, 2, 2, 4, 3],
];

/// Frozen generator of the dimension-5 subcode E at q = 5, t = 0, rows
/// in the construction's basis order as for [`E44`].
pub const E50: [[u8; 10]; 5] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 2, 0, 1, 2, 4, 0, 4, 3, 3],
    [1, 4, 0, 1, 4, 1, 0, 1, 4, 4],
    [2, 4, 3, 1, 3, 1, 2, 2, 4, 3],
    [4, 1, 4, 1, 4, 1, 4, 4, 1, 4],
];

/// Column triples of [`D44`] that are linearly dependent (weight-3 dual
/// words), 0-indexed.
pub const D44_TRIPLES: [[usize; 3]; 4] = [[0, 6, 7], [1, 8, 9], [2, 5, 9], [3, 4, 8]];

/// Column quadruples of the E generator at q = 4, t = 4 that are linearly
/// dependent (weight-4 dual words), 0-indexed.
pub const E44_QUADS: [[usize; 4]; 4] = [[0, 4, 6, 8], [2, 5, 6, 7], [1, 5, 6, 8], [3, 4, 6, 7]];

/// A dependent column triple of [`D50`].
pub const D50_TRIPLE: [usize; 3] = [0, 6, 7];

/// A dependent column quadruple of the E generator at q = 5, t = 0, with
/// its kernel coefficients in [`E50_QUAD_KERNEL`].
pub const E50_QUAD: [usize; 4] = [0, 1, 7, 8];

/// Coefficients combining the [`E50_QUAD`] columns to zero.
pub const E50_QUAD_KERNEL: [u8; 4] = [1, 2, 4, 3];

/// The generator rows of a matrix as owned vectors, for comparison with
/// frozen fixtures.
pub fn mat_rows(m: &GfMatrix) -> Vec<Vec<u8>> {
    (0..m.rows).map(|r| m.row(r).to_vec()).collect()
}

/// Stack fixed-width fixture rows into a matrix.
pub fn fixture_matrix(q: u8, rows: &[[u8; 10]]) -> GfMatrix {
    let data: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
    GfMatrix::from_rows(q, &data).expect("fixture rows are well-formed")
}

/// Minimum nonzero weight by plain odometer enumeration of all qᵏ
/// messages; n + 1 for a zero-dimensional code.
pub fn brute_min_weight(code: &LinearCode) -> usize {
    brute_weight_outside(code, None)
}

/// Minimum weight over codewords of `code` that lie outside the row space
/// of `excluded`, by plain enumeration; n + 1 when no such codeword
/// exists.
pub fn brute_weight_outside(code: &LinearCode, excluded: Option<&LinearCode>) -> usize {
    let basis = excluded.map(|c| RowBasis::new(&c.gen));
    let mut msg = vec![0u8; code.k];
    let mut best = code.n + 1;
    loop {
        let mut i = 0;
        while i < code.k {
            msg[i] += 1;
            if msg[i] < code.q {
                break;
            }
            msg[i] = 0;
            i += 1;
        }
        if i == code.k {
            break;
        }
        let cw = code.encode(&msg);
        let w = cw.iter().filter(|&&c| c != 0).count();
        if w < best && basis.as_ref().is_none_or(|b| !b.contains(&cw)) {
            best = w;
        }
    }
    best
}

/// A random code over GF(q) for q ∈ {3, 4} with qᵏ ≤ 10⁵, as a row span
/// (the rank, and hence k, may be any value up to the row count).
pub fn random_code(rng: &mut StdRng, q: u8) -> LinearCode {
    let cap: usize = match q {
        3 => 10,
        4 => 8,
        other => panic!("random codes are drawn over GF(3)/GF(4), not GF({other})"),
    };
    let n = rng.gen_range(4..=14);
    let rows = rng.gen_range(1..=cap.min(n));
    let mut g = GfMatrix::zero(q, rows, n).expect("supported q");
    for r in 0..rows {
        for c in 0..n {
            g.set(r, c, rng.gen_range(0..q));
        }
    }
    LinearCode::from_span(&g).expect("positive length")
}

/// A random proper nested pair (sub, sup) over GF(q), both of positive
/// dimension, with q^k of the larger code at most 10⁵.
pub fn random_nested_pair(rng: &mut StdRng, q: u8) -> (LinearCode, LinearCode) {
    loop {
        let sup = random_code(rng, q);
        if sup.k < 2 {
            continue;
        }
        let keep = rng.gen_range(1..sup.k);
        let rows: Vec<Vec<u8>> = (0..keep).map(|r| sup.gen.row(r).to_vec()).collect();
        let sub = LinearCode::from_span(&GfMatrix::from_rows(q, &rows).expect("row slice"))
            .expect("positive length");
        if sub.k >= 1 && sub.k < sup.k {
            return (sub, sup);
        }
    }
}
