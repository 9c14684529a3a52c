//! Constant-weight codes from reduced BGWs and their optimality
//! certificates.
//!
//! Reducing the classical BGW(v, q^m, q^m - q^(m-1)) over GF(q)* onto the
//! subgroup of order g (any divisor of q - 1) and collecting the rows of
//! omega'^j * W' for j = 0..g gives a (g+1)-ary constant-weight code with
//! parameters (v, g*v, d, q^m) where d = 2q^m - (g+1)(q^m - q^(m-1))/g;
//! the derived part of the normal form gives a companion
//! (v-1, q^m, d, q^m - 1) code. Both meet a Johnson bound with equality,
//! which this module certifies with exact integer arithmetic: the derived
//! code against the restricted bound, the full code against the
//! unrestricted bound fed by the derived one.

use crate::bgw::{self, BgwCert, BgwError, BgwFailure, Entry, GMatrix, NormalForm};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashSet};

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum CodeError {
    #[error(transparent)]
    Build(#[from] BgwError),
    #[error("underlying matrix is not a BGW: {0}")]
    Bgw(#[from] BgwFailure),
    #[error("codeword length mismatch: {a} vs {b}")]
    LengthMismatch { a: usize, b: usize },
    #[error("group order mismatch: {a} vs {b}")]
    GroupMismatch { a: u32, b: u32 },
    #[error("need at least two words, have {m}")]
    TooFewWords { m: usize },
    #[error("words have unequal weights: word 0 has {expected}, word {word} has {got}")]
    NotConstantWeight {
        word: usize,
        got: usize,
        expected: usize,
    },
    #[error("{g} does not divide q - 1 = {qm1}")]
    NotDivisor { g: u32, qm1: u64 },
    #[error("distance formula gives a non-integer for q={q}, m={m}, g={g}")]
    NonIntegerDistance { q: u64, m: u32, g: u32 },
    #[error("inner bound must be at least 1")]
    ZeroInnerBound,
    #[error("bound inputs must be positive with alphabet >= 2: n={n}, d={d}, w={w}, a={a}")]
    BadBoundInput { n: u64, d: u64, w: u64, a: u64 },
    #[error("scanned parameters {scanned} do not match claimed {claimed}")]
    ParamsMismatch {
        claimed: CodeParams,
        scanned: CodeParams,
    },
}

/// A word over the alphabet {Zero} ∪ {omega^0, .., omega^(g-1)} of size
/// g + 1. The derived ordering (group order, then symbols with Zero first)
/// gives the canonical word order used for sorted views.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    g: u32,
    symbols: Vec<Entry>,
}

impl Codeword {
    pub fn new(g: u32, symbols: Vec<Entry>) -> Result<Self, CodeError> {
        if g == 0 {
            return Err(BgwError::ZeroGroupOrder.into());
        }
        for &s in &symbols {
            if let Entry::Pow(e) = s {
                if e >= g {
                    return Err(BgwError::ExponentOutOfRange { e, u: g }.into());
                }
            }
        }
        Ok(Codeword { g, symbols })
    }

    pub fn zero(g: u32, n: usize) -> Result<Self, CodeError> {
        Codeword::new(g, vec![Entry::Zero; n])
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Entry] {
        &self.symbols
    }

    /// Number of nonzero symbols.
    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|s| !s.is_zero()).count()
    }

    pub fn is_zero_word(&self) -> bool {
        self.weight() == 0
    }
}

/// Number of positions where the words differ.
pub fn hamming_distance(x: &Codeword, y: &Codeword) -> Result<usize, CodeError> {
    if x.len() != y.len() {
        return Err(CodeError::LengthMismatch {
            a: x.len(),
            b: y.len(),
        });
    }
    if x.g != y.g {
        return Err(CodeError::GroupMismatch { a: x.g, b: y.g });
    }
    Ok(x.symbols
        .iter()
        .zip(&y.symbols)
        .filter(|(a, b)| a != b)
        .count())
}

/// Support size of a word (free-function spelling of [`Codeword::weight`]).
pub fn weight(x: &Codeword) -> usize {
    x.weight()
}

/// One omega^c-shift: (omega^c * x_{n-1}, x_0, .., x_{n-2}).
///
/// Panics if c is not a valid exponent for the word's group order.
pub fn omega_shift(x: &Codeword, c: u32) -> Codeword {
    assert!(c < x.g, "shift exponent {c} out of range for group order {}", x.g);
    if x.symbols.is_empty() {
        return x.clone();
    }
    let mut symbols = Vec::with_capacity(x.len());
    symbols.push(x.symbols[x.len() - 1].scaled(c, x.g));
    symbols.extend_from_slice(&x.symbols[..x.len() - 1]);
    Codeword { g: x.g, symbols }
}

/// A set of equal-length words over a common alphabet, kept in insertion
/// order with duplicates rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    n: usize,
    g: u32,
    words: Vec<Codeword>,
    seen: HashSet<Codeword>,
}

impl Code {
    pub fn new(n: usize, g: u32) -> Self {
        Code {
            n,
            g,
            words: Vec::new(),
            seen: HashSet::new(),
        }
    }

    pub fn from_words<I>(n: usize, g: u32, words: I) -> Result<Self, CodeError>
    where
        I: IntoIterator<Item = Codeword>,
    {
        let mut code = Code::new(n, g);
        for w in words {
            code.insert(w)?;
        }
        Ok(code)
    }

    /// Adds a word; returns false (and changes nothing) if it was already
    /// present.
    pub fn insert(&mut self, word: Codeword) -> Result<bool, CodeError> {
        if word.len() != self.n {
            return Err(CodeError::LengthMismatch {
                a: word.len(),
                b: self.n,
            });
        }
        if word.g != self.g {
            return Err(CodeError::GroupMismatch {
                a: word.g,
                b: self.g,
            });
        }
        if self.seen.contains(&word) {
            return Ok(false);
        }
        self.seen.insert(word.clone());
        self.words.push(word);
        Ok(true)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    /// Alphabet size a = g + 1.
    pub fn a(&self) -> u32 {
        self.g + 1
    }

    /// Number of words M.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &Codeword) -> bool {
        self.seen.contains(word)
    }

    /// Words in insertion (generation) order.
    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    /// Words in canonical order, for order-insensitive comparisons.
    pub fn sorted_words(&self) -> Vec<Codeword> {
        let mut v = self.words.clone();
        v.sort_unstable();
        v
    }
}

/// Closes a seed word under repeated omega^c-shifts; the shift is a
/// bijection, so the orbit is a cycle returning to the seed.
pub fn generate_from_seed(seed: &Codeword, c: u32) -> Code {
    let mut code = Code::new(seed.len(), seed.g);
    let mut cur = seed.clone();
    // n shifts scale the whole word by omega^c, so the orbit length
    // divides n * (order of omega^c); this bounds the loop.
    let cap = seed.len().max(1) * seed.g as usize + 1;
    for _ in 0..cap {
        code.insert(cur.clone()).expect("orbit words share n and g");
        cur = omega_shift(&cur, c);
        if cur == *seed {
            return code;
        }
    }
    unreachable!("omega-shift orbit did not close within n*g steps");
}

/// The distinct rows of a matrix, as a code over its group, in row order.
pub fn rows_as_code(w: &GMatrix) -> Code {
    let mut code = Code::new(w.ncols(), w.u());
    for row in w.rows() {
        let word = Codeword::new(w.u(), row.clone()).expect("matrix entries are in range");
        code.insert(word).expect("matrix rows share n and g");
    }
    code
}

/// Scanned parameters of a code: length n, size M, minimum distance d,
/// constant weight w, alphabet size a.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: u64,
    pub m: u64,
    pub d: u64,
    pub w: u64,
    pub a: u64,
}

impl std::fmt::Display for CodeParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(n={}, M={}, d={}, w={}) over alphabet {}",
            self.n, self.m, self.d, self.w, self.a
        )
    }
}

/// Inputs to the pipeline: field order q, trace extension exponent m,
/// target subgroup order g.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionRequest {
    pub q: u64,
    pub m: u32,
    pub g: u32,
}

impl ConstructionRequest {
    pub fn validate(&self) -> Result<(), CodeError> {
        bgw::classical_params(self.q, self.m)?;
        if self.g == 0 || (self.q - 1) % self.g as u64 != 0 {
            return Err(CodeError::NotDivisor {
                g: self.g,
                qm1: self.q - 1,
            });
        }
        Ok(())
    }
}

/// All pairwise Hamming distances of a code, with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceSet {
    counts: BTreeMap<u64, u64>,
}

impl DistanceSet {
    /// The minimum distance d.
    pub fn min(&self) -> u64 {
        *self.counts.keys().next().expect("built from >= 1 pair")
    }

    /// Distinct distances, ascending.
    pub fn values(&self) -> Vec<u64> {
        self.counts.keys().copied().collect()
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn num_distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn is_equidistant(&self) -> bool {
        self.counts.len() == 1
    }

    pub fn is_bidistant(&self) -> bool {
        self.counts.len() == 2
    }
}

fn pairwise_distance_counts<T: Copy + Eq + Sync>(flat: &[T], n: usize, m: usize) -> Vec<u64> {
    let zero = || vec![0u64; n + 1];
    (0..m.saturating_sub(1))
        .into_par_iter()
        .fold(zero, |mut acc, i| {
            let xi = &flat[i * n..(i + 1) * n];
            for j in i + 1..m {
                let xj = &flat[j * n..(j + 1) * n];
                let d = xi.iter().zip(xj).filter(|(a, b)| a != b).count();
                acc[d] += 1;
            }
            acc
        })
        .reduce(zero, |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        })
}

/// Exhaustive pairwise distance scan (Θ(M²·n), parallelized; the count
/// aggregation is a sum, so results do not depend on the thread count).
pub fn distance_set(code: &Code) -> Result<DistanceSet, CodeError> {
    let m = code.len();
    if m < 2 {
        return Err(CodeError::TooFewWords { m });
    }
    let n = code.n();
    // Pack symbols as flat integers (0 = Zero, e+1 = omega^e) so the inner
    // loop is a plain slice comparison.
    let raw = if code.g() <= u8::MAX as u32 - 1 {
        let flat: Vec<u8> = code
            .words
            .iter()
            .flat_map(|w| w.symbols.iter())
            .map(|s| match s {
                Entry::Zero => 0u8,
                Entry::Pow(e) => (e + 1) as u8,
            })
            .collect();
        pairwise_distance_counts(&flat, n, m)
    } else {
        let flat: Vec<u32> = code
            .words
            .iter()
            .flat_map(|w| w.symbols.iter())
            .map(|s| match s {
                Entry::Zero => 0u32,
                Entry::Pow(e) => e + 1,
            })
            .collect();
        pairwise_distance_counts(&flat, n, m)
    };
    debug_assert_eq!(raw.first().copied().unwrap_or(0), 0, "words must be distinct");
    let counts: BTreeMap<u64, u64> = raw
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(d, c)| (d as u64, c))
        .collect();
    Ok(DistanceSet { counts })
}

/// Distinct distances from the first word to every other word, sorted
/// ascending.
///
/// When the code is a single orbit of a group of distance-preserving maps
/// (the omega-shift and global scalar multiplications both are, and
/// [`ClassicalBgw::full_code`] closes one row under exactly those), every
/// pairwise distance d(x, y) = d(w0, h·w0) is already realized against the
/// first word, so this value set equals the full pairwise value set at
/// O(M·n) instead of O(M²·n) cost. For codes without that symmetry it is
/// only a subset.
pub fn distances_from_first(code: &Code) -> Result<Vec<u64>, CodeError> {
    let m = code.len();
    if m < 2 {
        return Err(CodeError::TooFewWords { m });
    }
    let first = &code.words[0];
    let mut seen = std::collections::BTreeSet::new();
    for w in &code.words[1..] {
        seen.insert(hamming_distance(first, w)? as u64);
    }
    Ok(seen.into_iter().collect())
}

/// Scanned parameters plus the full distance profile, from one scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeAnalysis {
    pub params: CodeParams,
    pub distances: DistanceSet,
}

/// One exhaustive pass: constant weight check, distance profile, and the
/// resulting (n, M, d, w, a).
pub fn analyze(code: &Code) -> Result<CodeAnalysis, CodeError> {
    let m = code.len();
    if m < 2 {
        return Err(CodeError::TooFewWords { m });
    }
    let expected = code.words[0].weight();
    for (i, word) in code.words.iter().enumerate().skip(1) {
        let got = word.weight();
        if got != expected {
            return Err(CodeError::NotConstantWeight {
                word: i,
                got,
                expected,
            });
        }
    }
    let distances = distance_set(code)?;
    let params = CodeParams {
        n: code.n() as u64,
        m: m as u64,
        d: distances.min(),
        w: expected as u64,
        a: code.a() as u64,
    };
    Ok(CodeAnalysis { params, distances })
}

/// Scanned (n, M, d, w, a) of a constant-weight code.
pub fn scan_params(code: &Code) -> Result<CodeParams, CodeError> {
    Ok(analyze(code)?.params)
}

fn check_bound_inputs(n: u64, d: u64, w: u64, a: u64) -> Result<(), CodeError> {
    if n == 0 || d == 0 || w == 0 || a < 2 {
        return Err(CodeError::BadBoundInput { n, d, w, a });
    }
    Ok(())
}

/// The denominator D = a·w² − 2(a−1)·n·w + n·d·(a−1) of the restricted
/// Johnson bound, exact.
pub fn restricted_denominator(n: u64, d: u64, w: u64, a: u64) -> i128 {
    let (n, d, w, a) = (n as i128, d as i128, w as i128, a as i128);
    a * w * w - 2 * (a - 1) * n * w + n * d * (a - 1)
}

/// Restricted Johnson bound on A_a(n, d, w): floor(n·d·(a−1)/D) when the
/// denominator D is positive, inapplicable (None) otherwise.
pub fn restricted_johnson(n: u64, d: u64, w: u64, a: u64) -> Result<Option<u64>, CodeError> {
    check_bound_inputs(n, d, w, a)?;
    let denom = restricted_denominator(n, d, w, a);
    if denom <= 0 {
        return Ok(None);
    }
    let num = n as i128 * d as i128 * (a as i128 - 1);
    Ok(Some((num / denom) as u64))
}

/// Unrestricted Johnson bound: floor((a−1)·n·inner/w), where `inner` is a
/// valid bound on A_a(n−1, d, w−1).
pub fn unrestricted_johnson(n: u64, d: u64, w: u64, a: u64, inner: u64) -> Result<u64, CodeError> {
    check_bound_inputs(n, d, w, a)?;
    if inner == 0 {
        return Err(CodeError::ZeroInnerBound);
    }
    let num = (a as u128 - 1) * n as u128 * inner as u128;
    Ok((num / w as u128) as u64)
}

/// The shortened-parameter restricted bound: an inner bound for the
/// unrestricted bound at (n, d, w). None when shortening is impossible or
/// the restricted bound is inapplicable.
pub fn derived_inner_bound(p: CodeParams) -> Option<u64> {
    if p.n <= 1 || p.w <= 1 {
        return None;
    }
    restricted_johnson(p.n - 1, p.d, p.w - 1, p.a).ok().flatten()
}

/// Predicted parameters of the derived and full codes for (q, m, g):
/// d = 2q^m − (g+1)(q^m − q^(m−1))/g, derived = (v−1, q^m, d, q^m−1),
/// full = (v, g·v, d, q^m), both over alphabet g+1.
pub fn predicted_params(req: ConstructionRequest) -> Result<(CodeParams, CodeParams), CodeError> {
    req.validate()?;
    let (v, k, lambda) = bgw::classical_params(req.q, req.m)?;
    let g = req.g as u64;
    let num = 2 * k * g - (g + 1) * lambda;
    if num % g != 0 {
        return Err(CodeError::NonIntegerDistance {
            q: req.q,
            m: req.m,
            g: req.g,
        });
    }
    let d = num / g;
    if g == req.q - 1 {
        debug_assert_eq!(d, k, "maximal subgroup gives an equidistant code");
    }
    if g == 2 {
        debug_assert_eq!(2 * d, req.q.pow(req.m - 1) * (req.q + 3));
    }
    let a = g + 1;
    let derived = CodeParams {
        n: v - 1,
        m: k,
        d,
        w: k - 1,
        a,
    };
    let full = CodeParams {
        n: v,
        m: g * v,
        d,
        w: k,
        a,
    };
    Ok((derived, full))
}

/// Evaluation of a code against the Johnson bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    /// Restricted bound at (n, d, w, a), when its denominator is positive.
    pub restricted: Option<u64>,
    /// Unrestricted bound, when an inner bound was supplied.
    pub unrestricted: Option<u64>,
    /// Restricted-bound denominator, kept for diagnostics.
    pub denominator: i128,
    pub achieved_m: u64,
    /// True iff M equals the best applicable bound.
    pub optimal: bool,
}

/// Bound evaluation from an existing scan: confirms the scanned parameters
/// equal the claimed ones, then compares M against the applicable bounds.
/// `inner` feeds the unrestricted bound (use [`derived_inner_bound`]).
pub fn check_optimal(
    analysis: &CodeAnalysis,
    claimed: CodeParams,
    inner: Option<u64>,
) -> Result<BoundReport, CodeError> {
    if analysis.params != claimed {
        return Err(CodeError::ParamsMismatch {
            claimed,
            scanned: analysis.params,
        });
    }
    let p = claimed;
    let denominator = restricted_denominator(p.n, p.d, p.w, p.a);
    let restricted = restricted_johnson(p.n, p.d, p.w, p.a)?;
    let unrestricted = match inner {
        Some(inner) => Some(unrestricted_johnson(p.n, p.d, p.w, p.a, inner)?),
        None => None,
    };
    let best = [restricted, unrestricted].into_iter().flatten().min();
    let optimal = best == Some(p.m);
    Ok(BoundReport {
        restricted,
        unrestricted,
        denominator,
        achieved_m: p.m,
        optimal,
    })
}

/// Scans the code and certifies it against the claimed parameters and the
/// Johnson bounds; see [`check_optimal`].
pub fn verify_optimal(
    code: &Code,
    claimed: CodeParams,
    inner: Option<u64>,
) -> Result<BoundReport, CodeError> {
    check_optimal(&analyze(code)?, claimed, inner)
}

/// The verified classical BGW for (q, m), built once and reused across
/// subgroup orders: field, trace row, circulant matrix, certificate, and
/// normal form.
#[derive(Debug, Clone)]
pub struct ClassicalBgw {
    q: u64,
    m: u32,
    matrix: GMatrix,
    cert: BgwCert,
    normal: NormalForm,
}

impl ClassicalBgw {
    pub fn build(q: u64, m: u32) -> Result<Self, CodeError> {
        let row = bgw::trace_row(q, m)?;
        let matrix = bgw::omega_circulant(&row, (q - 1) as u32, 1)?;
        let cert = bgw::verify_bgw(&matrix)?;
        let normal = bgw::normalize_certified(&matrix, cert);
        Ok(ClassicalBgw {
            q,
            m,
            matrix,
            cert,
            normal,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn matrix(&self) -> &GMatrix {
        &self.matrix
    }

    pub fn cert(&self) -> BgwCert {
        self.cert
    }

    pub fn normal_form(&self) -> &NormalForm {
        &self.normal
    }

    fn check_divisor(&self, g: u32) -> Result<(), CodeError> {
        if g == 0 || (self.q - 1) % g as u64 != 0 {
            return Err(CodeError::NotDivisor {
                g,
                qm1: self.q - 1,
            });
        }
        Ok(())
    }

    /// Rows of omega'^j * W' for j = 0..g, where W' is the matrix reduced
    /// onto the order-g subgroup: the (v, g·v, d, q^m) code.
    pub fn full_code(&self, g: u32) -> Result<Code, CodeError> {
        self.check_divisor(g)?;
        let reduced = bgw::reduce_group(&self.matrix, g)?;
        let mut code = Code::new(reduced.ncols(), g);
        for j in 0..g {
            let scaled = reduced.scaled(j);
            for row in scaled.rows() {
                let word = Codeword::new(g, row.clone())?;
                code.insert(word)?;
            }
        }
        Ok(code)
    }

    /// Rows of the reduced derived part D: the (v−1, q^m, d, q^m−1) code.
    pub fn derived_code(&self, g: u32) -> Result<Code, CodeError> {
        self.check_divisor(g)?;
        let reduced = bgw::reduce_group(&self.normal.derived, g)?;
        Ok(rows_as_code(&reduced))
    }
}

/// One-shot pipeline for the full code; see [`ClassicalBgw::full_code`].
pub fn full_code(req: ConstructionRequest) -> Result<Code, CodeError> {
    req.validate()?;
    ClassicalBgw::build(req.q, req.m)?.full_code(req.g)
}

/// One-shot pipeline for the derived code; see
/// [`ClassicalBgw::derived_code`].
pub fn derived_code(req: ConstructionRequest) -> Result<Code, CodeError> {
    req.validate()?;
    ClassicalBgw::build(req.q, req.m)?.derived_code(req.g)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: Entry = Entry::Zero;
    fn p(e: u32) -> Entry {
        Entry::Pow(e)
    }

    /// Sign-notation word over group order 2: '+' = omega^0, '-' = omega^1.
    fn pm(s: &str) -> Codeword {
        let symbols = s
            .chars()
            .map(|c| match c {
                '0' => Z,
                '+' => p(0),
                '-' => p(1),
                other => panic!("bad sign symbol {other:?}"),
            })
            .collect();
        Codeword::new(2, symbols).unwrap()
    }

    fn req(q: u64, m: u32, g: u32) -> ConstructionRequest {
        ConstructionRequest { q, m, g }
    }

    #[test]
    fn hamming_and_weight() {
        let x = pm("-+-0++");
        let y = pm("--+-0+");
        assert_eq!(hamming_distance(&x, &x).unwrap(), 0);
        assert_eq!(hamming_distance(&x, &y).unwrap(), 4);
        assert_eq!(x.weight(), 5);
        assert_eq!(weight(&pm("000000")), 0);
        assert_eq!(
            hamming_distance(&x, &pm("+-")),
            Err(CodeError::LengthMismatch { a: 6, b: 2 })
        );
        let other_group = Codeword::new(4, vec![p(3); 6]).unwrap();
        assert_eq!(
            hamming_distance(&x, &other_group),
            Err(CodeError::GroupMismatch { a: 2, b: 4 })
        );
    }

    #[test]
    fn hamming_matches_scalar_oracle() {
        // Deterministic pseudo-random pair via a fixed mixing function.
        let g = 5u32;
        let word = |seed: u64| {
            let symbols = (0..40)
                .map(|i| {
                    let x = (seed ^ (i as u64).wrapping_mul(0x9e3779b97f4a7c15)).wrapping_mul(31)
                        % (g as u64 + 1);
                    if x == 0 {
                        Z
                    } else {
                        p(x as u32 - 1)
                    }
                })
                .collect();
            Codeword::new(g, symbols).unwrap()
        };
        let (x, y) = (word(3), word(11));
        let mut expect = 0;
        for i in 0..x.len() {
            if x.symbols()[i] != y.symbols()[i] {
                expect += 1;
            }
        }
        assert_eq!(hamming_distance(&x, &y).unwrap(), expect);
    }

    #[test]
    fn shift_rule_and_orbits() {
        let zero = Codeword::zero(4, 6).unwrap();
        assert_eq!(omega_shift(&zero, 1), zero);

        let x = Codeword::new(4, vec![p(0), p(1), p(2), p(3), Z, p(2)]).unwrap();
        let shifted = omega_shift(&x, 1);
        assert_eq!(
            shifted.symbols(),
            &[p(3), p(0), p(1), p(2), p(3), Z] // omega * omega^2 wraps in front
        );
        // 24 single shifts return to the start for g = 4, n = 6.
        let mut cur = x.clone();
        for _ in 0..24 {
            cur = omega_shift(&cur, 1);
        }
        assert_eq!(cur, x);

        assert_eq!(generate_from_seed(&zero, 1).len(), 1);
    }

    #[test]
    fn orbit_sizes_from_reference_row() {
        let row4 = Codeword::new(4, vec![p(3), p(0), p(3), Z, p(0), p(0)]).unwrap();
        let orbit = generate_from_seed(&row4, 1);
        assert_eq!(orbit.len(), 24);
        // Every word in the orbit has the seed's weight.
        assert!(orbit.words().iter().all(|w| w.weight() == 5));

        let row2 = pm("-+-0++");
        let orbit = generate_from_seed(&row2, 1);
        assert_eq!(orbit.len(), 12);
    }

    #[test]
    fn code_set_semantics() {
        let mut code = Code::new(3, 2);
        let w1 = Codeword::new(2, vec![p(0), p(1), Z]).unwrap();
        assert!(code.insert(w1.clone()).unwrap());
        assert!(!code.insert(w1.clone()).unwrap());
        assert_eq!(code.len(), 1);
        assert!(code.contains(&w1));
        assert_eq!(
            code.insert(Codeword::new(2, vec![p(0)]).unwrap()),
            Err(CodeError::LengthMismatch { a: 1, b: 3 })
        );
        assert_eq!(
            code.insert(Codeword::new(4, vec![p(0), p(1), Z]).unwrap()),
            Err(CodeError::GroupMismatch { a: 4, b: 2 })
        );
    }

    #[test]
    fn rows_as_code_counts() {
        let row = vec![p(3), p(0), p(3), Z, p(0), p(0)];
        let w = bgw::omega_circulant(&row, 4, 1).unwrap();
        let code = rows_as_code(&w);
        assert_eq!(code.len(), 6);
        assert!(code.words().iter().all(|x| x.weight() == 5));

        let zeros = GMatrix::new(3, vec![vec![Z; 4]; 5]).unwrap();
        assert_eq!(rows_as_code(&zeros).len(), 1);
    }

    #[test]
    fn distance_profiles_of_reference_codes() {
        let full4 = full_code(req(5, 1, 4)).unwrap();
        let a4 = analyze(&full4).unwrap();
        assert_eq!(
            a4.params,
            CodeParams {
                n: 6,
                m: 24,
                d: 5,
                w: 5,
                a: 5
            }
        );
        assert!(a4.distances.is_equidistant());
        assert_eq!(a4.distances.values(), vec![5]);

        let full2 = full_code(req(5, 1, 2)).unwrap();
        let a2 = analyze(&full2).unwrap();
        assert_eq!(
            a2.params,
            CodeParams {
                n: 6,
                m: 12,
                d: 4,
                w: 5,
                a: 3
            }
        );
        assert!(a2.distances.is_bidistant());
        assert_eq!(a2.distances.min(), 4);
    }

    #[test]
    fn derived_codes_of_reference_pipeline() {
        let derived4 = derived_code(req(5, 1, 4)).unwrap();
        assert_eq!(
            scan_params(&derived4).unwrap(),
            CodeParams {
                n: 5,
                m: 5,
                d: 5,
                w: 4,
                a: 5
            }
        );
        let derived2 = derived_code(req(5, 1, 2)).unwrap();
        assert_eq!(
            scan_params(&derived2).unwrap(),
            CodeParams {
                n: 5,
                m: 5,
                d: 4,
                w: 4,
                a: 3
            }
        );
    }

    #[test]
    fn ternary_equidistant_spot_check() {
        let r = req(3, 2, 2);
        let (pred_derived, pred_full) = predicted_params(r).unwrap();
        assert_eq!(
            pred_full,
            CodeParams {
                n: 13,
                m: 26,
                d: 9,
                w: 9,
                a: 3
            }
        );
        assert_eq!(
            pred_derived,
            CodeParams {
                n: 12,
                m: 9,
                d: 9,
                w: 8,
                a: 3
            }
        );
        let full = full_code(r).unwrap();
        let analysis = analyze(&full).unwrap();
        assert_eq!(analysis.params, pred_full);
        assert!(analysis.distances.is_equidistant());
        let report =
            check_optimal(&analysis, pred_full, derived_inner_bound(pred_full)).unwrap();
        assert!(report.optimal);
        assert_eq!(report.achieved_m, 26);
    }

    #[test]
    fn full_code_matches_shift_orbit() {
        // The circulant structure makes the full code exactly the shift
        // orbit of its first word.
        let full = full_code(req(5, 1, 4)).unwrap();
        let orbit = generate_from_seed(&full.words()[0], 1);
        assert_eq!(orbit.sorted_words(), full.sorted_words());
    }

    #[test]
    fn restricted_bound_values() {
        assert_eq!(restricted_johnson(6, 5, 5, 5).unwrap(), Some(24));
        assert_eq!(restricted_denominator(6, 5, 5, 5), 5);
        assert_eq!(restricted_johnson(5, 5, 4, 5).unwrap(), Some(5));
        assert_eq!(restricted_denominator(5, 5, 4, 5), 20);
        assert_eq!(restricted_johnson(5, 4, 4, 3).unwrap(), Some(5));
        assert_eq!(restricted_denominator(5, 4, 4, 3), 8);
        // Negative denominator: inapplicable.
        assert_eq!(restricted_johnson(6, 2, 5, 3).unwrap(), None);
        assert_eq!(restricted_denominator(6, 2, 5, 3), -21);
        assert_eq!(
            restricted_johnson(0, 5, 5, 5),
            Err(CodeError::BadBoundInput {
                n: 0,
                d: 5,
                w: 5,
                a: 5
            })
        );
    }

    #[test]
    fn unrestricted_bound_values() {
        assert_eq!(unrestricted_johnson(6, 5, 5, 5, 5).unwrap(), 24);
        assert_eq!(unrestricted_johnson(6, 4, 5, 3, 5).unwrap(), 12);
        assert_eq!(
            unrestricted_johnson(6, 5, 5, 5, 0),
            Err(CodeError::ZeroInnerBound)
        );
    }

    #[test]
    fn predicted_params_reference_values() {
        let (_, full4) = predicted_params(req(5, 1, 4)).unwrap();
        assert_eq!(
            full4,
            CodeParams {
                n: 6,
                m: 24,
                d: 5,
                w: 5,
                a: 5
            }
        );
        let (derived2, full2) = predicted_params(req(5, 1, 2)).unwrap();
        assert_eq!(
            full2,
            CodeParams {
                n: 6,
                m: 12,
                d: 4,
                w: 5,
                a: 3
            }
        );
        assert_eq!(
            derived2,
            CodeParams {
                n: 5,
                m: 5,
                d: 4,
                w: 4,
                a: 3
            }
        );
        assert_eq!(
            predicted_params(req(5, 1, 3)),
            Err(CodeError::NotDivisor { g: 3, qm1: 4 })
        );
        assert_eq!(
            predicted_params(req(4, 1, 3)),
            Err(CodeError::Build(BgwError::NotOddPrimePower(4)))
        );
    }

    #[test]
    fn optimality_reports() {
        let r = req(5, 1, 4);
        let (pred_derived, pred_full) = predicted_params(r).unwrap();
        let full = full_code(r).unwrap();
        let report =
            verify_optimal(&full, pred_full, derived_inner_bound(pred_full)).unwrap();
        assert!(report.optimal);
        assert_eq!(report.restricted, Some(24));
        assert_eq!(report.unrestricted, Some(24));
        assert_eq!(report.denominator, 5);

        let derived = derived_code(r).unwrap();
        let report = verify_optimal(&derived, pred_derived, None).unwrap();
        assert!(report.optimal);
        assert_eq!(report.restricted, Some(5));
        assert_eq!(report.unrestricted, None);

        // Dropping a word: still constant-weight and equidistant, but one
        // short of the bound.
        let truncated =
            Code::from_words(6, 4, full.words()[..23].iter().cloned()).unwrap();
        let scanned = scan_params(&truncated).unwrap();
        assert_eq!(scanned.m, 23);
        let report =
            verify_optimal(&truncated, scanned, derived_inner_bound(scanned)).unwrap();
        assert!(!report.optimal);
        assert_eq!(report.achieved_m, 23);

        // Claiming the wrong parameters is an error, not a false verdict.
        assert!(matches!(
            verify_optimal(&truncated, pred_full, None),
            Err(CodeError::ParamsMismatch { .. })
        ));
    }

    #[test]
    fn binary_edge_of_the_family() {
        // g = 1 collapses the group entirely: a binary constant-weight
        // code from the matrix supports.
        let r = req(5, 1, 1);
        let (pred_derived, pred_full) = predicted_params(r).unwrap();
        assert_eq!(pred_full.d, 2);
        assert_eq!(pred_full.a, 2);
        let full = full_code(r).unwrap();
        let analysis = analyze(&full).unwrap();
        assert_eq!(analysis.params, pred_full);
        let report =
            check_optimal(&analysis, pred_full, derived_inner_bound(pred_full)).unwrap();
        assert!(report.optimal);
        let derived = derived_code(r).unwrap();
        assert_eq!(scan_params(&derived).unwrap(), pred_derived);
    }

    #[test]
    fn analyze_rejects_mixed_weights() {
        let mut code = Code::new(3, 2);
        code.insert(Codeword::new(2, vec![p(0), p(1), Z]).unwrap())
            .unwrap();
        code.insert(Codeword::new(2, vec![p(0), p(1), p(0)]).unwrap())
            .unwrap();
        assert_eq!(
            analyze(&code),
            Err(CodeError::NotConstantWeight {
                word: 1,
                got: 3,
                expected: 2
            })
        );
        let single = Code::from_words(3, 2, [Codeword::zero(2, 3).unwrap()]).unwrap();
        assert_eq!(distance_set(&single), Err(CodeError::TooFewWords { m: 1 }));
    }

    #[test]
    fn classical_bgw_reuse_matches_one_shot() {
        let pipeline = ClassicalBgw::build(3, 2).unwrap();
        assert_eq!(pipeline.cert().v, 13);
        for g in [1u32, 2] {
            assert_eq!(
                pipeline.full_code(g).unwrap(),
                full_code(req(3, 2, g)).unwrap()
            );
            assert_eq!(
                pipeline.derived_code(g).unwrap(),
                derived_code(req(3, 2, g)).unwrap()
            );
        }
        assert_eq!(
            pipeline.full_code(5),
            Err(CodeError::NotDivisor { g: 5, qm1: 2 })
        );
    }

    #[test]
    fn first_word_distances_cover_orbit_codes() {
        // Full codes are shift-and-scale orbits, so the distances seen from
        // the first word must equal the full pairwise value set.
        for (q, m, g) in [(5, 1, 4), (5, 1, 2), (7, 1, 2), (3, 2, 2), (9, 1, 4)] {
            let code = full_code(req(q, m, g)).unwrap();
            let fast = distances_from_first(&code).unwrap();
            let full = distance_set(&code).unwrap().values();
            assert_eq!(fast, full, "(q, m, g) = ({q}, {m}, {g})");
        }
        // A derived code is not such an orbit; the shortcut may miss values
        // but can never invent them.
        let code = derived_code(req(7, 1, 2)).unwrap();
        let fast = distances_from_first(&code).unwrap();
        let full = distance_set(&code).unwrap().values();
        assert!(fast.iter().all(|d| full.contains(d)));
    }
}
