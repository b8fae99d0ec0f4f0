//! Prime-power finite fields GF(p^e).
//!
//! Elements are encoded as canonical integers in `[0, q)` whose base-`p`
//! digits (least significant first) are the coefficients of the polynomial
//! representative modulo the field's defining polynomial. Multiplication goes
//! through exp/log tables built once at construction; `q` is capped at 2^16.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NonPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus has degree {found}, expected {expected}")]
    DegreeMismatch { expected: u32, found: usize },
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus coefficient {0} is out of range")]
    BadCoefficient(u32),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("field order {0} exceeds the supported maximum")]
    TooLarge(u64),
    #[error("value {value} is not an element of GF({q})")]
    OutOfRange { value: u32, q: u32 },
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("division by zero")]
    DivisionByZero,
}

/// A field element stripped of its field; always interpreted against a
/// [`FieldSpec`] supplied by the caller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Serialized field description: `{ "p": int, "e": int, "modulus": [int, ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldBlock {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    // exp has length 2(q-1) so that log a + log b never needs a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    generator: u32,
}

/// GF(p^e) with a fixed defining polynomial. Cheap to clone.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.0.p)
            .field("e", &self.0.e)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `num` modulo the monic polynomial `den` over GF(p).
/// Coefficient vectors are little-endian.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    while r.len() > dd {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - dd;
        if lead != 0 {
            for (i, &c) in den.iter().enumerate() {
                let sub = (lead as u64 * c as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

/// True iff the monic polynomial has no monic factor of degree 1..=deg/2.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut cand = digits(low as u32, p, d);
            cand.push(1);
            if poly_rem(modulus, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn digits(mut v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(v % p);
        v /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

/// First monic irreducible polynomial of degree `e`, ordered by its base-`p`
/// integer encoding (equivalently, lexicographic from the leading coefficient down).
pub fn default_modulus(p: u32, e: u32) -> Vec<u32> {
    let e = e as usize;
    let count = (p as u64).pow(e as u32);
    for low in 0..count {
        let mut cand = digits(low as u32, p, e);
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn poly_mulmod(a: u32, b: u32, p: u32, modulus: &[u32]) -> u32 {
    let e = modulus.len() - 1;
    let da = digits(a, p, e);
    let db = digits(b, p, e);
    let mut prod = vec![0u32; 2 * e - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    let r = poly_rem(&prod, modulus, p);
    undigits(&r, p)
}

impl FieldSpec {
    /// Creates GF(p^e). Without an explicit modulus the default irreducible
    /// polynomial of [`default_modulus`] is used.
    pub fn new(p: u32, e: u32, modulus: Option<Vec<u32>>) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u64)
            .checked_pow(e)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(FieldError::TooLarge((p as u64).saturating_pow(e)))?;
        let modulus = match modulus {
            None => default_modulus(p, e),
            Some(m) => {
                if m.len() != e as usize + 1 {
                    return Err(FieldError::DegreeMismatch {
                        expected: e,
                        found: m.len().saturating_sub(1),
                    });
                }
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(FieldError::BadCoefficient(c));
                }
                if m[e as usize] != 1 {
                    return Err(FieldError::NotMonic);
                }
                if !is_irreducible(&m, p) {
                    return Err(FieldError::ReducibleModulus { p });
                }
                m
            }
        };
        Ok(Self::build(p, e, q as u32, modulus))
    }

    /// GF(p^e) with the default modulus; panics on invalid parameters.
    pub fn gf(p: u32, e: u32) -> Self {
        Self::new(p, e, None).expect("valid field parameters")
    }

    pub fn from_block(block: &FieldBlock) -> Result<Self, FieldError> {
        Self::new(block.p, block.e, Some(block.modulus.clone()))
    }

    pub fn to_block(&self) -> FieldBlock {
        FieldBlock {
            p: self.0.p,
            e: self.0.e,
            modulus: self.0.modulus.clone(),
        }
    }

    fn build(p: u32, e: u32, q: u32, modulus: Vec<u32>) -> Self {
        let order = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * order.max(1)];
        let mut log = vec![0u32; q as usize];
        // the multiplicative group is cyclic; scan for a generator
        let mut generator = 1u32;
        'search: for g in 1..q {
            let mut x = 1u32;
            for (i, slot) in exp.iter_mut().enumerate().take(order) {
                *slot = x;
                x = poly_mulmod(x, g, p, &modulus);
                if x == 1 && i + 1 < order {
                    continue 'search;
                }
            }
            generator = g;
            break;
        }
        for i in 0..order {
            exp[i + order] = exp[i];
            log[exp[i] as usize] = i as u32;
        }
        let neg = (0..q)
            .map(|v| {
                let d: Vec<u32> = digits(v, p, e as usize)
                    .into_iter()
                    .map(|c| (p - c) % p)
                    .collect();
                undigits(&d, p)
            })
            .collect();
        FieldSpec(Arc::new(Inner {
            p,
            e,
            q,
            modulus,
            exp,
            log,
            neg,
            generator,
        }))
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn e(&self) -> u32 {
        self.0.e
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> Elem {
        Elem(self.0.generator)
    }

    pub fn elem(&self, value: u32) -> Result<Elem, FieldError> {
        if value < self.0.q {
            Ok(Elem(value))
        } else {
            Err(FieldError::OutOfRange {
                value,
                q: self.0.q,
            })
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.0.q
    }

    /// All `q` elements in canonical order (0 first, then 1, ...).
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.0.e == 1 {
            return Elem((a.0 + b.0) % p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        Elem(out)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let l = self.0.log[a.0 as usize] + self.0.log[b.0 as usize];
        Elem(self.0.exp[l as usize])
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.0 == 0 {
            return None;
        }
        let order = self.0.q - 1;
        let l = self.0.log[a.0 as usize];
        Some(Elem(self.0.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        let inv = self.inv(b).ok_or(FieldError::DivisionByZero)?;
        Ok(self.mul(a, inv))
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let order = (self.0.q - 1) as u64;
        let l = (self.0.log[a.0 as usize] as u64 * (k % order)) % order;
        Elem(self.0.exp[l as usize])
    }

    /// `a^(p^j)`.
    pub fn frobenius(&self, a: Elem, j: u32) -> Elem {
        let mut x = a;
        for _ in 0..(j % self.0.e) {
            x = self.pow(x, self.0.p as u64);
        }
        x
    }

    /// Absolute trace to the prime subfield: `a + a^p + ... + a^(p^(e-1))`.
    pub fn trace(&self, a: Elem) -> Elem {
        let mut acc = Elem::ZERO;
        let mut x = a;
        for _ in 0..self.0.e {
            acc = self.add(acc, x);
            x = self.pow(x, self.0.p as u64);
        }
        debug_assert!(acc.0 < self.0.p);
        acc
    }

    /// Trace as an exponent of the primitive p-th root of unity, in `[0, p)`.
    #[inline]
    pub fn trace_exponent(&self, a: Elem) -> u32 {
        self.trace(a).0
    }

    /// Inner product `sum_i a_i b_i`.
    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter()
            .zip(b)
            .fold(Elem::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    pub fn bind(&self, a: Elem) -> FieldElem {
        FieldElem {
            spec: self.clone(),
            value: a,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A field element that carries its field, for checked arithmetic at API edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElem {
    pub spec: FieldSpec,
    pub value: Elem,
}

impl FieldElem {
    pub fn new(spec: &FieldSpec, value: u32) -> Result<Self, FieldError> {
        Ok(spec.bind(spec.elem(value)?))
    }

    pub fn arith(&self, other: &FieldElem, op: ArithOp) -> Result<FieldElem, FieldError> {
        if self.spec != other.spec {
            return Err(FieldError::SpecMismatch);
        }
        let f = &self.spec;
        let value = match op {
            ArithOp::Add => f.add(self.value, other.value),
            ArithOp::Sub => f.sub(self.value, other.value),
            ArithOp::Mul => f.mul(self.value, other.value),
            ArithOp::Div => f.div(self.value, other.value)?,
        };
        Ok(f.bind(value))
    }

    pub fn frobenius(&self, j: u32) -> FieldElem {
        self.spec.bind(self.spec.frobenius(self.value, j))
    }

    pub fn trace(&self) -> FieldElem {
        self.spec.bind(self.spec.trace(self.value))
    }
}
