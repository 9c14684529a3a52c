//! Balanced generalized weighing matrices over cyclic groups.
//!
//! A BGW(v, k, lambda; G) is a square v x v matrix with entries from
//! G ∪ {0} such that every row has exactly k nonzero entries and, for every
//! pair of distinct rows i, j, the multiset of quotients
//! { W[i][t] * W[j][t]^-1 : both nonzero } contains every element of G
//! exactly lambda/|G| times. Here G is always a cyclic group of order u,
//! its elements written as exponents of a generator omega, so matrix
//! entries are [`Entry::Zero`] or [`Entry::Pow`] (e) meaning omega^e.
//!
//! The construction: take F = GF(q^(m+1)) over K = GF(q), a primitive
//! element beta of F, and the first row (dlog of Tr(beta^i)) for
//! i = 0..v-1 where v = (q^(m+1)-1)/(q-1). The omega-circulant matrix over
//! that row, with omega = beta^v, is a BGW with the classical parameters
//! (v, q^m, q^m - q^(m-1)) over GF(q)* of order u = q-1.

use crate::gf::{self, FieldCtx, FieldElem};
use rayon::prelude::*;

/// A matrix or code symbol: zero, or omega^e in a cyclic group.
///
/// The group order u is carried by the containing matrix or code; the
/// derived ordering (Zero first, then ascending exponents) is the canonical
/// symbol order used everywhere for witnesses and output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Zero,
    Pow(u32),
}

impl Entry {
    pub fn is_zero(self) -> bool {
        self == Entry::Zero
    }

    /// Multiplication by omega^c in the group of order u; Zero is absorbing.
    pub fn scaled(self, c: u32, u: u32) -> Entry {
        match self {
            Entry::Zero => Entry::Zero,
            Entry::Pow(e) => Entry::Pow((e + c) % u),
        }
    }
}

impl std::fmt::Display for Entry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Entry::Zero => write!(f, "0"),
            Entry::Pow(e) => write!(f, "{e}"),
        }
    }
}

/// Input and construction errors (distinct from verification failures,
/// which are [`BgwFailure`]).
#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum BgwError {
    #[error(transparent)]
    Field(#[from] gf::GfError),
    #[error("{0} is not an odd prime power")]
    NotOddPrimePower(u64),
    #[error("exponent m must be at least 1")]
    ZeroExponent,
    #[error("group order must be at least 1")]
    ZeroGroupOrder,
    #[error("entry exponent {e} out of range for group order {u}")]
    ExponentOutOfRange { e: u32, u: u32 },
    #[error("row {row} has length {len}, expected {expected}")]
    RaggedRow {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("shift exponent {c} out of range for group order {u}")]
    ShiftOutOfRange { c: u32, u: u32 },
    #[error("declared circulant shift {c} does not match the matrix contents")]
    NotCirculant { c: u32 },
    #[error("{g} does not divide the group order {u}")]
    NotDivisor { g: u32, u: u32 },
    #[error("transform shape does not match a {rows} x {cols} matrix")]
    TransformShape { rows: usize, cols: usize },
    #[error("automorphism exponent {t} is not coprime to group order {u}")]
    AutNotCoprime { t: u32, u: u32 },
    #[error("sequence is not a permutation of 0..{n}")]
    NotPermutation { n: usize },
}

/// A rectangular (0, G)-matrix over the cyclic group of order u.
///
/// Immutable after construction; rows are stored densely. `shift`, when
/// present, records that the matrix is omega^c-circulant (each row is the
/// previous one rotated right with the wrapped entry scaled by omega^c).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMatrix {
    u: u32,
    ncols: usize,
    shift: Option<u32>,
    rows: Vec<Vec<Entry>>,
}

impl GMatrix {
    /// Validates shape and exponent ranges. The column count is taken from
    /// the first row; use [`GMatrix::with_cols`] for empty matrices.
    pub fn new(u: u32, rows: Vec<Vec<Entry>>) -> Result<Self, BgwError> {
        let ncols = rows.first().map_or(0, Vec::len);
        Self::with_cols(u, ncols, rows)
    }

    pub fn with_cols(u: u32, ncols: usize, rows: Vec<Vec<Entry>>) -> Result<Self, BgwError> {
        if u == 0 {
            return Err(BgwError::ZeroGroupOrder);
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(BgwError::RaggedRow {
                    row: r,
                    len: row.len(),
                    expected: ncols,
                });
            }
            for &e in row {
                if let Entry::Pow(e) = e {
                    if e >= u {
                        return Err(BgwError::ExponentOutOfRange { e, u });
                    }
                }
            }
        }
        Ok(GMatrix {
            u,
            ncols,
            shift: None,
            rows,
        })
    }

    /// Declares the matrix omega^c-circulant after checking that it is.
    pub fn declare_circulant(mut self, c: u32) -> Result<Self, BgwError> {
        if c >= self.u {
            return Err(BgwError::ShiftOutOfRange { c, u: self.u });
        }
        let v = self.nrows();
        if v != self.ncols {
            return Err(BgwError::NotCirculant { c });
        }
        for i in 0..v {
            for j in 0..v {
                let expect = if j >= i {
                    self.rows[0][j - i]
                } else {
                    self.rows[0][v + j - i].scaled(c, self.u)
                };
                if self.rows[i][j] != expect {
                    return Err(BgwError::NotCirculant { c });
                }
            }
        }
        self.shift = Some(c);
        Ok(self)
    }

    pub fn u(&self) -> u32 {
        self.u
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    /// The declared circulant shift exponent, if any.
    pub fn shift(&self) -> Option<u32> {
        self.shift
    }

    pub fn entry(&self, i: usize, j: usize) -> Entry {
        self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> &[Entry] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.rows[i].iter().filter(|e| !e.is_zero()).count()
    }

    /// The matrix omega^c * self (every entry scaled); drops any circulant
    /// declaration since only the first row would keep it honest.
    pub fn scaled(&self, c: u32) -> GMatrix {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|e| e.scaled(c, self.u)).collect())
            .collect();
        GMatrix {
            u: self.u,
            ncols: self.ncols,
            shift: None,
            rows,
        }
    }

    /// Sub-matrix keeping `rows` x `cols` in the given order.
    fn submatrix(&self, rows: &[usize], cols: std::ops::Range<usize>) -> GMatrix {
        let grid: Vec<Vec<Entry>> = rows
            .iter()
            .map(|&r| self.rows[r][cols.clone()].to_vec())
            .collect();
        GMatrix {
            u: self.u,
            ncols: cols.len(),
            shift: None,
            rows: grid,
        }
    }
}

/// Certificate of a verified BGW(v, k, lambda) over a group of order u.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BgwCert {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub u: u32,
}

impl std::fmt::Display for BgwCert {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "BGW({}, {}, {}) over a cyclic group of order {}",
            self.v, self.k, self.lambda, self.u
        )
    }
}

/// Why a matrix is not a BGW; carries the lexicographically first witness.
#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum BgwFailure {
    #[error("matrix is not square: {rows} x {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("order {v} is too small to test row pairs")]
    TooSmall { v: usize },
    #[error("row {row} has no nonzero entries")]
    EmptyRow { row: usize },
    #[error("row {row} has weight {weight}, expected {expected}")]
    RowWeightMismatch {
        row: usize,
        weight: usize,
        expected: usize,
    },
    #[error("rows 0 and 1 share no support, so lambda = 0")]
    LambdaZero,
    #[error("lambda = {lambda} is not divisible by the group order {u}")]
    LambdaNotDivisible { lambda: usize, u: u32 },
    #[error("rows {i} and {j} share {overlap} positions, expected lambda = {lambda}")]
    PairOverlapMismatch {
        i: usize,
        j: usize,
        overlap: usize,
        lambda: usize,
    },
    #[error(
        "rows {i} and {j}: quotient omega^{element} occurs {count} times, expected {expected}"
    )]
    PairUnbalanced {
        i: usize,
        j: usize,
        element: u32,
        count: usize,
        expected: usize,
    },
    #[error("parameters violate lambda*(v-1) = k*(k-1): v = {v}, k = {k}, lambda = {lambda}")]
    ParameterIdentity { v: usize, k: usize, lambda: usize },
}

/// Classical BGW parameters (v, k, lambda) = ((q^(m+1)-1)/(q-1), q^m,
/// q^m - q^(m-1)) for an odd prime power q and m >= 1, with the field
/// order q^(m+1) kept inside the supported cap.
pub fn classical_params(q: u64, m: u32) -> Result<(u64, u64, u64), BgwError> {
    let (p, _) = gf::is_prime_power(q).ok_or(BgwError::NotOddPrimePower(q))?;
    if p == 2 {
        return Err(BgwError::NotOddPrimePower(q));
    }
    if m == 0 {
        return Err(BgwError::ZeroExponent);
    }
    let order = (q as u128).pow(m + 1);
    if order > gf::FIELD_CAP as u128 {
        return Err(BgwError::Field(gf::GfError::CapExceeded {
            order,
            cap: gf::FIELD_CAP,
        }));
    }
    let order = order as u64;
    let v = (order - 1) / (q - 1);
    let k = q.pow(m);
    let lambda = k - q.pow(m - 1);
    Ok((v, k, lambda))
}

/// First row of the classical construction: entry i is the discrete log,
/// with respect to omega = beta^v, of the relative trace of beta^(-i) down
/// to GF(q). Exactly v - q^m entries are Zero (the trace's kernel meets
/// the enumerated coset representatives that often).
///
/// Powering the inverse of beta pairs with the omega-shift direction: the
/// trace identity Tr(beta^(s+v)) = omega * Tr(beta^s) then makes row i+1
/// of the circulant matrix exactly the omega^1-shift of row i, matching
/// the worked reference matrix. (Equivalently, this is the forward
/// construction applied to the primitive element beta^(-1).)
pub fn trace_row(q: u64, m: u32) -> Result<Vec<Entry>, BgwError> {
    let (v, k, _) = classical_params(q, m)?;
    let (p, t) = gf::is_prime_power(q).expect("validated by classical_params");
    let ctx = gf::build_field(p, t * (m + 1))?;
    let row = trace_row_in(&ctx, q)?;
    debug_assert_eq!(row.len(), v as usize);
    debug_assert_eq!(
        row.iter().filter(|e| e.is_zero()).count(),
        (v - k) as usize
    );
    Ok(row)
}

/// As [`trace_row`], but reusing an already-built field F = GF(q^(m+1)).
pub fn trace_row_in(ctx: &FieldCtx, q: u64) -> Result<Vec<Entry>, BgwError> {
    let n = ctx.order() - 1;
    let v = n / (q - 1);
    let mut row = Vec::with_capacity(v as usize);
    for i in 0..v {
        let e = if i == 0 { 0 } else { (n - i) as u32 };
        let tr = ctx.rel_trace(q, FieldElem::Pow(e))?;
        row.push(ctx.dlog_in_subfield(q, tr)?);
    }
    Ok(row)
}

/// The v x v omega^c-circulant matrix with the given first row:
/// A[i][j] = row[j-i] for i <= j and omega^c * row[(j-i) mod v] for j < i.
pub fn omega_circulant(first_row: &[Entry], u: u32, c: u32) -> Result<GMatrix, BgwError> {
    if u == 0 {
        return Err(BgwError::ZeroGroupOrder);
    }
    if c >= u {
        return Err(BgwError::ShiftOutOfRange { c, u });
    }
    for &e in first_row {
        if let Entry::Pow(e) = e {
            if e >= u {
                return Err(BgwError::ExponentOutOfRange { e, u });
            }
        }
    }
    let v = first_row.len();
    let rows: Vec<Vec<Entry>> = (0..v)
        .map(|i| {
            (0..v)
                .map(|j| {
                    if j >= i {
                        first_row[j - i]
                    } else {
                        first_row[v + j - i].scaled(c, u)
                    }
                })
                .collect()
        })
        .collect();
    Ok(GMatrix {
        u,
        ncols: v,
        shift: Some(c),
        rows,
    })
}

/// Exhaustively checks the balance property and returns the certificate.
///
/// Conditions, in the order they are reported: the matrix is square of
/// order v >= 2; every row has the same support size k > 0; lambda (the
/// support overlap of rows 0 and 1) is positive and divisible by u; every
/// row pair shares exactly lambda positions and its quotient multiset
/// contains each group element exactly lambda/u times; and
/// lambda*(v-1) = k*(k-1). The pair scan runs on the rayon pool; the
/// reported witness is the lexicographically smallest failing pair
/// regardless of thread count.
pub fn verify_bgw(w: &GMatrix) -> Result<BgwCert, BgwFailure> {
    let v = w.nrows();
    if !w.is_square() {
        return Err(BgwFailure::NotSquare {
            rows: v,
            cols: w.ncols(),
        });
    }
    if v < 2 {
        return Err(BgwFailure::TooSmall { v });
    }
    let k = w.row_weight(0);
    if k == 0 {
        return Err(BgwFailure::EmptyRow { row: 0 });
    }
    for i in 1..v {
        let wt = w.row_weight(i);
        if wt == 0 {
            return Err(BgwFailure::EmptyRow { row: i });
        }
        if wt != k {
            return Err(BgwFailure::RowWeightMismatch {
                row: i,
                weight: wt,
                expected: k,
            });
        }
    }

    // Pack entries as 0 = zero, e+1 = omega^e so the pair kernel runs on
    // flat integers.
    let u = w.u;
    let packed: Vec<Vec<u32>> = w
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| match e {
                    Entry::Zero => 0,
                    Entry::Pow(e) => e + 1,
                })
                .collect()
        })
        .collect();

    let overlap01 = packed[0]
        .iter()
        .zip(&packed[1])
        .filter(|(&a, &b)| a != 0 && b != 0)
        .count();
    if overlap01 == 0 {
        return Err(BgwFailure::LambdaZero);
    }
    let lambda = overlap01;
    if lambda % u as usize != 0 {
        return Err(BgwFailure::LambdaNotDivisible { lambda, u });
    }
    let per_element = lambda / u as usize;

    // First failing pair per leading row, then the global minimum; the
    // reduction is order-independent.
    let first_bad = (0..v - 1)
        .into_par_iter()
        .filter_map(|i| {
            let mut counts = vec![0usize; u as usize];
            let pi = &packed[i];
            for j in i + 1..v {
                let pj = &packed[j];
                counts.fill(0);
                let mut overlap = 0usize;
                for (&a, &b) in pi.iter().zip(pj) {
                    if a != 0 && b != 0 {
                        overlap += 1;
                        let mut d = a + u - b;
                        if d >= u {
                            d -= u;
                        }
                        counts[d as usize] += 1;
                    }
                }
                if overlap != lambda {
                    return Some((
                        i,
                        j,
                        BgwFailure::PairOverlapMismatch {
                            i,
                            j,
                            overlap,
                            lambda,
                        },
                    ));
                }
                if let Some(elem) = counts.iter().position(|&c| c != per_element) {
                    return Some((
                        i,
                        j,
                        BgwFailure::PairUnbalanced {
                            i,
                            j,
                            element: elem as u32,
                            count: counts[elem],
                            expected: per_element,
                        },
                    ));
                }
            }
            None
        })
        .min_by_key(|&(i, j, _)| (i, j));
    if let Some((_, _, failure)) = first_bad {
        return Err(failure);
    }

    if lambda * (v - 1) != k * (k - 1) {
        return Err(BgwFailure::ParameterIdentity { v, k, lambda });
    }
    Ok(BgwCert {
        v: v as u64,
        k: k as u64,
        lambda: lambda as u64,
        u,
    })
}

/// A monomial equivalence: row/column permutations, row/column scalings by
/// group elements, and a group automorphism x -> x^t.
///
/// Permutations are forward maps (`row_perm[r]` is the output position of
/// input row r); scalars are indexed by output position. Applying T to W
/// gives output[i][j] = omega^row_scalars[i] * W[rp^-1(i)][cp^-1(j)]^t *
/// omega^col_scalars[j], with Zero fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialTransform {
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
    pub row_scalars: Vec<u32>,
    pub col_scalars: Vec<u32>,
    pub aut_exp: u32,
}

fn invert_perm(perm: &[usize]) -> Result<Vec<usize>, BgwError> {
    let n = perm.len();
    let mut inv = vec![usize::MAX; n];
    for (i, &p) in perm.iter().enumerate() {
        if p >= n || inv[p] != usize::MAX {
            return Err(BgwError::NotPermutation { n });
        }
        inv[p] = i;
    }
    Ok(inv)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Inverse of t modulo u, defined when gcd(t, u) = 1; for u = 1 returns 0.
fn mod_inverse(t: u32, u: u32) -> Option<u32> {
    if u == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (u as i64, (t % u) as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(u as i64) as u32)
}

impl MonomialTransform {
    pub fn identity(nrows: usize, ncols: usize) -> Self {
        MonomialTransform {
            row_perm: (0..nrows).collect(),
            col_perm: (0..ncols).collect(),
            row_scalars: vec![0; nrows],
            col_scalars: vec![0; ncols],
            aut_exp: 1,
        }
    }

    pub fn nrows(&self) -> usize {
        self.row_perm.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_perm.len()
    }

    fn validate(&self, u: u32, nrows: usize, ncols: usize) -> Result<(), BgwError> {
        if self.row_perm.len() != nrows
            || self.col_perm.len() != ncols
            || self.row_scalars.len() != nrows
            || self.col_scalars.len() != ncols
        {
            return Err(BgwError::TransformShape {
                rows: nrows,
                cols: ncols,
            });
        }
        for &s in self.row_scalars.iter().chain(&self.col_scalars) {
            if s >= u {
                return Err(BgwError::ExponentOutOfRange { e: s, u });
            }
        }
        if gcd(self.aut_exp as u64 % u as u64, u as u64) != 1 {
            return Err(BgwError::AutNotCoprime {
                t: self.aut_exp,
                u,
            });
        }
        Ok(())
    }

    /// The transform applying `self` first, then `next`.
    pub fn then(&self, next: &Self, u: u32) -> Result<Self, BgwError> {
        self.validate(u, self.nrows(), self.ncols())?;
        next.validate(u, self.nrows(), self.ncols())?;
        let inv_rp2 = invert_perm(&next.row_perm)?;
        let inv_cp2 = invert_perm(&next.col_perm)?;
        invert_perm(&self.row_perm)?;
        invert_perm(&self.col_perm)?;
        let u64u = u as u64;
        let t2 = next.aut_exp as u64;
        let row_perm = self.row_perm.iter().map(|&r| next.row_perm[r]).collect();
        let col_perm = self.col_perm.iter().map(|&c| next.col_perm[c]).collect();
        let row_scalars = (0..self.nrows())
            .map(|i| {
                ((next.row_scalars[i] as u64 + t2 * self.row_scalars[inv_rp2[i]] as u64) % u64u)
                    as u32
            })
            .collect();
        let col_scalars = (0..self.ncols())
            .map(|j| {
                ((next.col_scalars[j] as u64 + t2 * self.col_scalars[inv_cp2[j]] as u64) % u64u)
                    as u32
            })
            .collect();
        Ok(MonomialTransform {
            row_perm,
            col_perm,
            row_scalars,
            col_scalars,
            aut_exp: ((self.aut_exp as u64 * t2) % u64u) as u32,
        })
    }

    /// The transform undoing `self`: self.then(self.inverse(u)) is the
    /// identity.
    pub fn inverse(&self, u: u32) -> Result<Self, BgwError> {
        self.validate(u, self.nrows(), self.ncols())?;
        let row_perm = invert_perm(&self.row_perm)?;
        let col_perm = invert_perm(&self.col_perm)?;
        let t_inv = mod_inverse(self.aut_exp, u).ok_or(BgwError::AutNotCoprime {
            t: self.aut_exp,
            u,
        })? as u64;
        let u64u = u as u64;
        let row_scalars = (0..self.nrows())
            .map(|i| {
                let s = self.row_scalars[self.row_perm[i]] as u64;
                ((u64u - t_inv * s % u64u) % u64u) as u32
            })
            .collect();
        let col_scalars = (0..self.ncols())
            .map(|j| {
                let s = self.col_scalars[self.col_perm[j]] as u64;
                ((u64u - t_inv * s % u64u) % u64u) as u32
            })
            .collect();
        Ok(MonomialTransform {
            row_perm,
            col_perm,
            row_scalars,
            col_scalars,
            aut_exp: t_inv as u32,
        })
    }
}

/// Applies a monomial equivalence; the result of a BGW is again a BGW with
/// the same certificate.
pub fn apply_monomial_equivalence(
    w: &GMatrix,
    t: &MonomialTransform,
) -> Result<GMatrix, BgwError> {
    t.validate(w.u, w.nrows(), w.ncols())?;
    let inv_rp = invert_perm(&t.row_perm)?;
    let inv_cp = invert_perm(&t.col_perm)?;
    let u = w.u as u64;
    let aut = t.aut_exp as u64 % u;
    let rows: Vec<Vec<Entry>> = (0..w.nrows())
        .map(|i| {
            (0..w.ncols())
                .map(|j| match w.rows[inv_rp[i]][inv_cp[j]] {
                    Entry::Zero => Entry::Zero,
                    Entry::Pow(e) => {
                        let e = (t.row_scalars[i] as u64
                            + aut * e as u64
                            + t.col_scalars[j] as u64)
                            % u;
                        Entry::Pow(e as u32)
                    }
                })
                .collect()
        })
        .collect();
    Ok(GMatrix {
        u: w.u,
        ncols: w.ncols,
        shift: None,
        rows,
    })
}

/// A BGW rearranged as the block matrix [[0-column, R], [1-column, D]]:
/// rows with Zero in column 0 on top (residual part R, row weight k), the
/// rest scaled so column 0 is all ones (derived part D, row weight k-1).
#[derive(Debug, Clone)]
pub struct NormalForm {
    pub residual: GMatrix,
    pub derived: GMatrix,
    /// Maps the input matrix to the block form.
    pub transform: MonomialTransform,
    pub cert: BgwCert,
}

impl NormalForm {
    /// The block matrix [[0-column, R], [1-column, D]] itself.
    pub fn reassemble(&self) -> GMatrix {
        let u = self.residual.u;
        let mut rows = Vec::with_capacity(self.residual.nrows() + self.derived.nrows());
        for r in self.residual.rows() {
            let mut row = Vec::with_capacity(r.len() + 1);
            row.push(Entry::Zero);
            row.extend_from_slice(r);
            rows.push(row);
        }
        for r in self.derived.rows() {
            let mut row = Vec::with_capacity(r.len() + 1);
            row.push(Entry::Pow(0));
            row.extend_from_slice(r);
            rows.push(row);
        }
        GMatrix {
            u,
            ncols: self.residual.ncols() + 1,
            shift: None,
            rows,
        }
    }
}

/// Verifies the matrix, then rearranges it into normal form. Row order
/// within each block is stable; columns beyond column 0 are untouched.
pub fn normalize(w: &GMatrix) -> Result<NormalForm, BgwFailure> {
    let cert = verify_bgw(w)?;
    Ok(normalize_certified(w, cert))
}

/// As [`normalize`], for a matrix whose certificate is already known from
/// [`verify_bgw`]; skips the quadratic re-verification.
pub fn normalize_certified(w: &GMatrix, cert: BgwCert) -> NormalForm {
    let v = w.nrows();
    let u = w.u;
    let mut order: Vec<usize> = Vec::with_capacity(v);
    order.extend((0..v).filter(|&r| w.rows[r][0].is_zero()));
    let zeros = order.len();
    order.extend((0..v).filter(|&r| !w.rows[r][0].is_zero()));

    let mut row_perm = vec![0usize; v];
    let mut row_scalars = vec![0u32; v];
    for (pos, &r) in order.iter().enumerate() {
        row_perm[r] = pos;
        if let Entry::Pow(e) = w.rows[r][0] {
            row_scalars[pos] = (u - e) % u;
        }
    }
    let transform = MonomialTransform {
        row_perm,
        col_perm: (0..v).collect(),
        row_scalars,
        col_scalars: vec![0; v],
        aut_exp: 1,
    };
    let block = apply_monomial_equivalence(w, &transform).expect("transform built to fit");
    debug_assert!(block.rows[..zeros].iter().all(|r| r[0] == Entry::Zero));
    debug_assert!(block.rows[zeros..].iter().all(|r| r[0] == Entry::Pow(0)));

    let top: Vec<usize> = (0..zeros).collect();
    let bottom: Vec<usize> = (zeros..v).collect();
    NormalForm {
        residual: block.submatrix(&top, 1..v),
        derived: block.submatrix(&bottom, 1..v),
        transform,
        cert,
    }
}

/// Pushes the matrix through the group epimorphism onto the subgroup of
/// order g (a divisor of u): exponents map to e mod g, zero stays zero.
/// A BGW(v, k, lambda) stays a BGW(v, k, lambda) over the smaller group.
pub fn reduce_group(w: &GMatrix, g: u32) -> Result<GMatrix, BgwError> {
    if g == 0 || w.u % g != 0 {
        return Err(BgwError::NotDivisor { g, u: w.u });
    }
    let rows = w
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| match e {
                    Entry::Zero => Entry::Zero,
                    Entry::Pow(e) => Entry::Pow(e % g),
                })
                .collect()
        })
        .collect();
    Ok(GMatrix {
        u: g,
        ncols: w.ncols,
        shift: w.shift.map(|c| c % g),
        rows,
    })
}
