//! Exact finite-field arithmetic for desk-scale fields GF(p^s).
//!
//! A [`FieldCtx`] owns discrete log/antilog tables for a fixed primitive
//! element, so multiplication, inversion and powering are table lookups.
//! Addition converts through the additive (coordinate-vector) representation.
//! Everything is exact integer arithmetic; there is no floating point here.

use crate::bgw::Entry;

/// Largest supported field order. Verification loops are quadratic or worse
/// in matrix order, so fields past this size are pointless for this crate.
pub const FIELD_CAP: u64 = 100_000;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("field order {order} exceeds the supported cap {cap}")]
    CapExceeded { order: u128, cap: u64 },
    #[error("GF({q}) is not a subfield of GF({order})")]
    NotSubfield { q: u64, order: u64 },
    #[error("element lies outside the subfield GF({q})")]
    NotInSubfield { q: u64 },
}

/// Trial-division primality test; plenty for orders below [`FIELD_CAP`].
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as (prime, multiplicity) pairs, ascending.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Decomposes `q` as `p^t` with `p` prime, if possible.
pub fn is_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factor(q);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

/// A polynomial over GF(p), little-endian coefficients (index = power of x).
///
/// Invariant: the leading coefficient is nonzero; the zero polynomial has an
/// empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    p: u64,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { p, coeffs }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x + c) % self.p;
        }
        acc
    }

    /// Remainder of `self` modulo the monic polynomial `m`.
    fn rem(&self, m: &Poly) -> Poly {
        debug_assert!(m.is_monic());
        let md = m.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        while r.len() > md {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - md;
            if lead != 0 {
                for (i, &mc) in m.coeffs.iter().enumerate() {
                    let idx = i + shift;
                    r[idx] = (r[idx] + self.p - lead * mc % self.p) % self.p;
                }
            }
            r.pop();
        }
        Poly::new(self.p, r)
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly::new(self.p, vec![]);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        Poly::new(self.p, out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// True iff the monic polynomial has no monic divisor of degree 1..=deg/2.
fn poly_is_irreducible(f: &Poly) -> bool {
    let p = f.p;
    let deg = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        // All monic polynomials of degree d, any order.
        let count = p.pow(d as u32);
        for k in 0..count {
            let mut coeffs = Vec::with_capacity(d + 1);
            let mut t = k;
            for _ in 0..d {
                coeffs.push(t % p);
                t /= p;
            }
            coeffs.push(1);
            let g = Poly::new(p, coeffs);
            if f.rem(&g).is_zero() {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible polynomial of degree `n`
/// over GF(p), comparing coefficient sequences from the constant term upward.
pub fn find_irreducible(p: u64, n: u32) -> Result<Poly, GfError> {
    if !is_prime(p) {
        return Err(GfError::NotPrime(p));
    }
    if n == 0 {
        return Err(GfError::ZeroDegree);
    }
    let order = (p as u128).pow(n);
    if order > FIELD_CAP as u128 {
        return Err(GfError::CapExceeded {
            order,
            cap: FIELD_CAP,
        });
    }
    let n = n as usize;
    let count = p.pow(n as u32);
    for k in 0..count {
        // Digits of k in base p, most significant first, give the candidate
        // coefficient sequence (c_0, .., c_{n-1}); ascending k is ascending
        // lexicographic order on that sequence.
        let mut coeffs = vec![0u64; n + 1];
        let mut t = k;
        for i in (0..n).rev() {
            coeffs[i] = t % p;
            t /= p;
        }
        coeffs[n] = 1;
        let f = Poly::new(p, coeffs);
        if poly_is_irreducible(&f) {
            return Ok(f);
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

/// An element of a [`FieldCtx`]: zero, or a power of the primitive element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Zero,
    /// The exponent e in beta^e, reduced into [0, order-2].
    Pow(u32),
}

impl FieldElem {
    pub const ONE: FieldElem = FieldElem::Pow(0);

    pub fn is_zero(self) -> bool {
        self == FieldElem::Zero
    }
}

/// A finite field GF(p^s) with log/antilog tables for a fixed primitive
/// element beta.
///
/// Elements are indexed additively: the element with coordinate vector
/// (c_0, .., c_{s-1}) in the basis (1, x, .., x^{s-1}) has index
/// `c_0 + c_1 p + .. + c_{s-1} p^{s-1}`; index 0 is zero and index 1 is one.
/// The context is immutable after construction and safe to share across
/// threads; every operation is a pure function of its inputs.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    p: u64,
    s: u32,
    order: u64,
    modulus: Poly,
    beta_index: usize,
    /// exp_table[e] = additive index of beta^e, for e in [0, order-2].
    exp_table: Vec<u32>,
    /// log_table[idx] = e with beta^e at additive index idx; None for zero.
    log_table: Vec<Option<u32>>,
}

/// Bootstrap multiplication on additive indices, used before tables exist.
fn mul_index(p: u64, s: u32, modulus: &Poly, a: usize, b: usize) -> usize {
    let unpack = |mut v: usize| {
        let mut c = vec![0u64; s as usize];
        for slot in c.iter_mut() {
            *slot = (v as u64) % p;
            v /= p as usize;
        }
        c
    };
    let pa = Poly::new(p, unpack(a));
    let pb = Poly::new(p, unpack(b));
    let r = pa.mul(&pb).rem(modulus);
    let mut idx = 0usize;
    for (i, &c) in r.coeffs().iter().enumerate() {
        idx += (c as usize) * (p as usize).pow(i as u32);
    }
    idx
}

fn pow_index(p: u64, s: u32, modulus: &Poly, mut base: usize, mut e: u64) -> usize {
    let mut acc = 1usize;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_index(p, s, modulus, acc, base);
        }
        base = mul_index(p, s, modulus, base, base);
        e >>= 1;
    }
    acc
}

/// Builds GF(p^s): smallest irreducible modulus, then the smallest primitive
/// element in the canonical element ordering (coordinate vectors compared
/// lexicographically from c_0 upward), then the log/antilog tables.
pub fn build_field(p: u64, s: u32) -> Result<FieldCtx, GfError> {
    let modulus = find_irreducible(p, s)?;
    let order = p.pow(s);
    let n1 = order - 1;
    let prime_factors: Vec<u64> = factor(n1).into_iter().map(|(q, _)| q).collect();
    let s_us = s as usize;

    // Candidates in canonical order: counter digits big-endian = (c_0,..,c_{s-1}).
    let mut beta_index = None;
    'search: for k in 1..order {
        let mut idx = 0usize;
        let mut t = k;
        for i in (0..s_us).rev() {
            let digit = t % p;
            t /= p;
            idx += (digit as usize) * (p as usize).pow(i as u32);
        }
        for &q in &prime_factors {
            if pow_index(p, s, &modulus, idx, n1 / q) == 1 {
                continue 'search;
            }
        }
        beta_index = Some(idx);
        break;
    }
    let beta_index = beta_index.expect("GF(p^s)* is cyclic, so a generator exists");

    let mut exp_table = Vec::with_capacity(n1 as usize);
    let mut log_table = vec![None; order as usize];
    let mut cur = 1usize;
    for e in 0..n1 {
        exp_table.push(cur as u32);
        debug_assert!(log_table[cur].is_none(), "beta has order < p^s - 1");
        log_table[cur] = Some(e as u32);
        cur = mul_index(p, s, &modulus, cur, beta_index);
    }
    debug_assert_eq!(cur, 1);

    Ok(FieldCtx {
        p,
        s,
        order,
        modulus,
        beta_index,
        exp_table,
        log_table,
    })
}

impl FieldCtx {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// Additive index of the primitive element beta.
    pub fn beta_index(&self) -> usize {
        self.beta_index
    }

    /// Coordinate vector (c_0, .., c_{s-1}) of an additive index.
    pub fn coords(&self, mut index: usize) -> Vec<u64> {
        let mut c = vec![0u64; self.s as usize];
        for slot in c.iter_mut() {
            *slot = (index as u64) % self.p;
            index /= self.p as usize;
        }
        c
    }

    pub fn element_index(&self, x: FieldElem) -> usize {
        match x {
            FieldElem::Zero => 0,
            FieldElem::Pow(e) => self.exp_table[e as usize] as usize,
        }
    }

    pub fn element_from_index(&self, index: usize) -> FieldElem {
        match self.log_table[index] {
            None => FieldElem::Zero,
            Some(e) => FieldElem::Pow(e),
        }
    }

    fn check(&self, x: FieldElem) {
        if let FieldElem::Pow(e) = x {
            assert!(
                (e as u64) < self.order - 1,
                "exponent {e} out of range for GF({}); element from another field?",
                self.order
            );
        }
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        let mut ia = self.element_index(a);
        let mut ib = self.element_index(b);
        let mut idx = 0usize;
        let mut scale = 1usize;
        for _ in 0..self.s {
            let da = (ia as u64) % self.p;
            let db = (ib as u64) % self.p;
            ia /= self.p as usize;
            ib /= self.p as usize;
            idx += ((da + db) % self.p) as usize * scale;
            scale *= self.p as usize;
        }
        self.element_from_index(idx)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        self.check(a);
        match a {
            FieldElem::Zero => FieldElem::Zero,
            _ if self.p == 2 => a,
            FieldElem::Pow(e) => {
                let n1 = (self.order - 1) as u32;
                FieldElem::Pow((e + n1 / 2) % n1)
            }
        }
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        match (a, b) {
            (FieldElem::Zero, _) | (_, FieldElem::Zero) => FieldElem::Zero,
            (FieldElem::Pow(e1), FieldElem::Pow(e2)) => {
                let n1 = (self.order - 1) as u64;
                FieldElem::Pow(((e1 as u64 + e2 as u64) % n1) as u32)
            }
        }
    }

    /// Multiplicative inverse. Panics on zero; see [`FieldCtx::checked_inv`].
    pub fn inv(&self, a: FieldElem) -> FieldElem {
        self.checked_inv(a).expect("zero has no inverse")
    }

    pub fn checked_inv(&self, a: FieldElem) -> Option<FieldElem> {
        self.check(a);
        match a {
            FieldElem::Zero => None,
            FieldElem::Pow(0) => Some(FieldElem::ONE),
            FieldElem::Pow(e) => {
                let n1 = (self.order - 1) as u32;
                Some(FieldElem::Pow(n1 - e))
            }
        }
    }

    /// a^e with the convention pow(_, 0) = one.
    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        self.check(a);
        match a {
            _ if e == 0 => FieldElem::ONE,
            FieldElem::Zero => FieldElem::Zero,
            FieldElem::Pow(x) => {
                let n1 = (self.order - 1) as u128;
                FieldElem::Pow(((x as u128 * e as u128) % n1) as u32)
            }
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElem) -> Option<u64> {
        match a {
            FieldElem::Zero => None,
            FieldElem::Pow(e) => {
                let n1 = self.order - 1;
                let g = num_gcd(e as u64, n1);
                Some(n1 / g)
            }
        }
    }

    /// Checks that GF(q) embeds in this field with index at least `min_index`,
    /// returning the extension degree [F : GF(q)].
    fn subfield_degree(&self, q: u64, min_index: u32) -> Result<u32, GfError> {
        let (qp, qt) = is_prime_power(q).ok_or(GfError::NotSubfield {
            q,
            order: self.order,
        })?;
        if qp != self.p || self.s % qt != 0 || self.s / qt < min_index {
            return Err(GfError::NotSubfield {
                q,
                order: self.order,
            });
        }
        Ok(self.s / qt)
    }

    /// Relative trace onto the subfield K = GF(q): the sum of x^(q^i) over
    /// i = 0..m where the extension degree [F:K] is m+1. Requires m >= 1.
    pub fn rel_trace(&self, q: u64, x: FieldElem) -> Result<FieldElem, GfError> {
        let ext = self.subfield_degree(q, 2)?;
        self.check(x);
        let mut acc = x;
        let mut term = x;
        for _ in 1..ext {
            term = self.pow(term, q);
            acc = self.add(acc, term);
        }
        debug_assert_eq!(self.pow(acc, q), acc, "trace must land in GF(q)");
        Ok(acc)
    }

    /// Discrete log of a subfield element with respect to omega = beta^v,
    /// v = (order-1)/(q-1); omega is a primitive element of GF(q).
    /// Zero maps to [`Entry::Zero`].
    pub fn dlog_in_subfield(&self, q: u64, x: FieldElem) -> Result<Entry, GfError> {
        self.subfield_degree(q, 1)?;
        self.check(x);
        match x {
            FieldElem::Zero => Ok(Entry::Zero),
            FieldElem::Pow(e) => {
                let v = (self.order - 1) / (q - 1);
                if e as u64 % v != 0 {
                    return Err(GfError::NotInSubfield { q });
                }
                Ok(Entry::Pow((e as u64 / v) as u32))
            }
        }
    }

    /// Exponent v with omega = beta^v the canonical generator of GF(q)*.
    pub fn subfield_generator_exponent(&self, q: u64) -> Result<u64, GfError> {
        self.subfield_degree(q, 1)?;
        Ok((self.order - 1) / (q - 1))
    }
}

fn num_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
