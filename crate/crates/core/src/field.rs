//! Exact arithmetic in GF(p), GF(p^n) and the rationals behind one context type.
//!
//! A [`FieldCtx`] is a cheap, shareable handle. Elements ([`Fe`]) are plain values
//! that only make sense together with the context that produced them; every
//! operation goes through the context.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::UPoly;

/// Characteristic of a field: a prime, or infinite for the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Char {
    Prime(u64),
    Infinite,
}

impl Char {
    pub fn prime(self) -> Option<u64> {
        match self {
            Char::Prime(p) => Some(p),
            Char::Infinite => None,
        }
    }

    /// Elements of {1, p, p^2, ...} (just {1} in characteristic zero) not exceeding
    /// `limit`. The value 1 is always included, even when `limit` is 0.
    pub fn powers_up_to(self, limit: u64) -> Vec<u64> {
        let mut out = vec![1];
        if let Char::Prime(p) = self {
            let mut q = p;
            while q <= limit {
                out.push(q);
                match q.checked_mul(p) {
                    Some(next) => q = next,
                    None => break,
                }
            }
        }
        out
    }

    /// Largest element of {1, p, p^2, ...} not exceeding `n` (1 when `n` is 0 or the
    /// characteristic is infinite).
    pub fn largest_power_at_most(self, n: u64) -> u64 {
        *self.powers_up_to(n).last().expect("always contains 1")
    }
}

impl fmt::Display for Char {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Char::Prime(p) => write!(f, "{p}"),
            Char::Infinite => f.write_str("inf"),
        }
    }
}

/// A field element in canonical form.
///
/// * `Prime(r)`: residue in `[0, p)`.
/// * `Ext(c)`: exactly `n` coefficients over GF(p), `c[i]` multiplies `t^i`.
/// * `Rat(r)`: reduced fraction with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Fe {
    Prime(u64),
    Ext(Vec<u64>),
    Rat(BigRational),
}

/// Read-only view of what kind of field a context describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind<'a> {
    Prime(u64),
    /// `modulus` has `n + 1` entries, lowest degree first, and is monic.
    Extension { p: u64, n: usize, modulus: &'a [u64] },
    Rationals,
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum Inner {
    Prime { p: u64 },
    Extension { p: u64, n: usize, modulus: Vec<u64>, order: u64 },
    Rationals,
}

/// Computation context for one field. Immutable and `Send + Sync`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    inner: Arc<Inner>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.inner {
            Inner::Prime { p } => write!(f, "GF({p})"),
            Inner::Extension { p, n, modulus, .. } => {
                write!(f, "GF({p}^{n}) mod {modulus:?}")
            }
            Inner::Rationals => f.write_str("Q"),
        }
    }
}

/// Trial division. Fine for the desk-scale moduli this crate accepts.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Residues stay below 2^32, so products of two residues fit in a u64.
const MAX_PRIME: u64 = 1 << 32;

impl FieldCtx {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= MAX_PRIME {
            return Err(Error::FieldTooLarge(format!("p = {p} must be below 2^32")));
        }
        Ok(Self { inner: Arc::new(Inner::Prime { p }) })
    }

    pub fn rationals() -> Self {
        Self { inner: Arc::new(Inner::Rationals) }
    }

    /// GF(p^n). Without an explicit modulus the canonical one is used: the monic
    /// irreducible of degree `n` whose low coefficients `(c_0, ..., c_{n-1})` give the
    /// smallest integer `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`.
    pub fn extension(p: u64, n: usize, modulus: Option<&UPoly>) -> Result<Self> {
        let base = Self::prime(p)?;
        if n < 2 {
            return Err(Error::InvalidModulus(format!("extension degree must be at least 2, got {n}")));
        }
        let order = u32::try_from(n)
            .ok()
            .and_then(|e| p.checked_pow(e))
            .filter(|&q| q < (1 << 40))
            .ok_or_else(|| Error::FieldTooLarge(format!("{p}^{n} is too large")))?;
        let modulus = match modulus {
            Some(m) => {
                if m.ctx() != &base {
                    return Err(Error::InvalidModulus(format!("modulus must have coefficients in GF({p})")));
                }
                if m.degree().finite() != Some(n) {
                    return Err(Error::InvalidModulus(format!("modulus must have degree {n}")));
                }
                if m.lc() != Some(&base.one()) {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if !is_irreducible(m) {
                    return Err(Error::NotIrreducible { p });
                }
                m.clone()
            }
            None => canonical_modulus(&base, n),
        };
        let digits = modulus.coeffs().iter().map(|c| base.residue(c)).collect();
        Ok(Self {
            inner: Arc::new(Inner::Extension { p, n, modulus: digits, order }),
        })
    }

    pub fn kind(&self) -> FieldKind<'_> {
        match &*self.inner {
            Inner::Prime { p } => FieldKind::Prime(*p),
            Inner::Extension { p, n, modulus, .. } => FieldKind::Extension { p: *p, n: *n, modulus },
            Inner::Rationals => FieldKind::Rationals,
        }
    }

    pub fn characteristic(&self) -> Char {
        match &*self.inner {
            Inner::Prime { p } | Inner::Extension { p, .. } => Char::Prime(*p),
            Inner::Rationals => Char::Infinite,
        }
    }

    /// Number of elements; `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match &*self.inner {
            Inner::Prime { p } => Some(*p),
            Inner::Extension { order, .. } => Some(*order),
            Inner::Rationals => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Extension modulus as a polynomial over the prime subfield.
    pub fn modulus(&self) -> Option<UPoly> {
        match &*self.inner {
            Inner::Extension { p, modulus, .. } => {
                let base = Self::prime(*p).expect("validated at construction");
                let coeffs = modulus.iter().map(|&c| Fe::Prime(c)).collect();
                Some(UPoly::new(&base, coeffs))
            }
            _ => None,
        }
    }

    pub fn zero(&self) -> Fe {
        match &*self.inner {
            Inner::Prime { .. } => Fe::Prime(0),
            Inner::Extension { n, .. } => Fe::Ext(vec![0; *n]),
            Inner::Rationals => Fe::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Fe {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Fe {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Fe {
        match &*self.inner {
            Inner::Prime { p } => Fe::Prime(reduce_bigint(v, *p)),
            Inner::Extension { p, n, .. } => {
                let mut c = vec![0; *n];
                c[0] = reduce_bigint(v, *p);
                Fe::Ext(c)
            }
            Inner::Rationals => Fe::Rat(BigRational::from_integer(v.clone())),
        }
    }

    /// `num / den` mapped into the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Fe> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &*self.inner {
            Inner::Rationals => Ok(Fe::Rat(BigRational::new(num.clone(), den.clone()))),
            _ => self.div(&self.from_bigint(num), &self.from_bigint(den)),
        }
    }

    /// The class of `t` in GF(p)[t]/(modulus); `None` outside extension fields.
    pub fn generator(&self) -> Option<Fe> {
        match &*self.inner {
            Inner::Extension { n, .. } => {
                let mut c = vec![0; *n];
                c[1] = 1;
                Some(Fe::Ext(c))
            }
            _ => None,
        }
    }

    /// Residue of a prime-field element. Panics on other kinds.
    pub(crate) fn residue(&self, a: &Fe) -> u64 {
        match a {
            Fe::Prime(r) => *r,
            _ => panic!("not a prime-field element: {a:?}"),
        }
    }

    /// Whether `a` has the shape and ranges of a canonical element of this field.
    pub fn contains(&self, a: &Fe) -> bool {
        match (&*self.inner, a) {
            (Inner::Prime { p }, Fe::Prime(r)) => r < p,
            (Inner::Extension { p, n, .. }, Fe::Ext(c)) => c.len() == *n && c.iter().all(|x| x < p),
            (Inner::Rationals, Fe::Rat(_)) => true,
            _ => false,
        }
    }

    /// Brings a same-kind value into canonical form (reduces residues, reduces
    /// fractions). Idempotent on canonical elements.
    pub fn normalize(&self, a: &Fe) -> Fe {
        match (&*self.inner, a) {
            (Inner::Prime { p }, Fe::Prime(r)) => Fe::Prime(r % p),
            (Inner::Extension { p, n, modulus, .. }, Fe::Ext(c)) => {
                Fe::Ext(reduce_digits(c.iter().map(|x| x % p).collect(), *p, *n, modulus))
            }
            (Inner::Rationals, Fe::Rat(r)) => Fe::Rat(BigRational::new(r.numer().clone(), r.denom().clone())),
            _ => panic!("element {a:?} does not belong to {self:?}"),
        }
    }

    pub fn is_zero(&self, a: &Fe) -> bool {
        match a {
            Fe::Prime(r) => *r == 0,
            Fe::Ext(c) => c.iter().all(|&x| x == 0),
            Fe::Rat(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &Fe, b: &Fe) -> Fe {
        match (&*self.inner, a, b) {
            (Inner::Prime { p }, Fe::Prime(x), Fe::Prime(y)) => Fe::Prime((x + y) % p),
            (Inner::Extension { p, .. }, Fe::Ext(x), Fe::Ext(y)) => {
                Fe::Ext(x.iter().zip(y).map(|(u, v)| (u + v) % p).collect())
            }
            (Inner::Rationals, Fe::Rat(x), Fe::Rat(y)) => Fe::Rat(x + y),
            _ => self.mismatch(a, b),
        }
    }

    pub fn neg(&self, a: &Fe) -> Fe {
        match (&*self.inner, a) {
            (Inner::Prime { p }, Fe::Prime(x)) => Fe::Prime((p - x) % p),
            (Inner::Extension { p, .. }, Fe::Ext(x)) => Fe::Ext(x.iter().map(|u| (p - u) % p).collect()),
            (Inner::Rationals, Fe::Rat(x)) => Fe::Rat(-x),
            _ => self.mismatch(a, a),
        }
    }

    pub fn sub(&self, a: &Fe, b: &Fe) -> Fe {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        match (&*self.inner, a, b) {
            (Inner::Prime { p }, Fe::Prime(x), Fe::Prime(y)) => Fe::Prime(x * y % p),
            (Inner::Extension { p, n, modulus, .. }, Fe::Ext(x), Fe::Ext(y)) => {
                let mut prod = vec![0u64; 2 * n - 1];
                for (i, &u) in x.iter().enumerate() {
                    if u == 0 {
                        continue;
                    }
                    for (j, &v) in y.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + u * v % p) % p;
                    }
                }
                Fe::Ext(reduce_digits(prod, *p, *n, modulus))
            }
            (Inner::Rationals, Fe::Rat(x), Fe::Rat(y)) => Fe::Rat(x * y),
            _ => self.mismatch(a, b),
        }
    }

    pub fn inv(&self, a: &Fe) -> Result<Fe> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match (&*self.inner, a) {
            (Inner::Rationals, Fe::Rat(x)) => Ok(Fe::Rat(x.recip())),
            _ => {
                let q = self.order().expect("finite");
                Ok(self.pow_u64(a, q - 2))
            }
        }
    }

    pub fn div(&self, a: &Fe, b: &Fe) -> Result<Fe> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a^e`; negative exponents need `a != 0`. `0^0 = 1`.
    pub fn pow(&self, a: &Fe, e: i64) -> Result<Fe> {
        if e < 0 {
            let inv = self.inv(a)?;
            Ok(self.pow_u64(&inv, e.unsigned_abs()))
        } else {
            Ok(self.pow_u64(a, e as u64))
        }
    }

    pub fn pow_u64(&self, a: &Fe, mut e: u64) -> Fe {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// The unique `c` with `c^p = a`, computed as `a^(q/p)`.
    pub fn pth_root(&self, a: &Fe) -> Result<Fe> {
        match (&*self.inner, self.characteristic()) {
            (Inner::Prime { .. }, _) => Ok(a.clone()),
            (Inner::Extension { order, .. }, Char::Prime(p)) => Ok(self.pow_u64(a, order / p)),
            _ => Err(Error::NotFiniteField),
        }
    }

    /// All elements of a finite field, in canonical order.
    pub fn elements(&self) -> Result<Vec<Fe>> {
        let q = self.order().ok_or(Error::NotFiniteField)?;
        Ok((0..q).map(|i| self.element_at(i).expect("index in range")).collect())
    }

    /// Position of `a` in the canonical order: the residue for GF(p), the base-p
    /// integer `c_0 + c_1 p + ...` for extensions.
    pub fn index_of(&self, a: &Fe) -> Option<u64> {
        match (&*self.inner, a) {
            (Inner::Prime { .. }, Fe::Prime(r)) => Some(*r),
            (Inner::Extension { p, .. }, Fe::Ext(c)) => Some(c.iter().rev().fold(0, |acc, &d| acc * p + d)),
            _ => None,
        }
    }

    pub fn element_at(&self, mut idx: u64) -> Option<Fe> {
        if idx >= self.order()? {
            return None;
        }
        match &*self.inner {
            Inner::Prime { .. } => Some(Fe::Prime(idx)),
            Inner::Extension { p, n, .. } => {
                let mut c = vec![0; *n];
                for d in c.iter_mut() {
                    *d = idx % p;
                    idx /= p;
                }
                Some(Fe::Ext(c))
            }
            Inner::Rationals => None,
        }
    }

    /// Canonical total order: index order for finite fields, numeric order for Q.
    pub fn cmp_elems(&self, a: &Fe, b: &Fe) -> Ordering {
        match (a, b) {
            (Fe::Rat(x), Fe::Rat(y)) => x.cmp(y),
            (Fe::Prime(x), Fe::Prime(y)) => x.cmp(y),
            (Fe::Ext(x), Fe::Ext(y)) => x.iter().rev().cmp(y.iter().rev()),
            _ => self.mismatch(a, b),
        }
    }

    /// Embeds an element of the prime subfield (given as a residue) into this field.
    pub fn from_residue(&self, r: u64) -> Fe {
        self.from_i64(r as i64)
    }

    /// The residue `r` if `a` lies in the prime subfield GF(p).
    pub fn as_prime_subfield(&self, a: &Fe) -> Option<u64> {
        match a {
            Fe::Prime(r) => Some(*r),
            Fe::Ext(c) if c[1..].iter().all(|&x| x == 0) => Some(c[0]),
            _ => None,
        }
    }

    /// Rational value of an element of Q.
    pub fn as_rational<'a>(&self, a: &'a Fe) -> Option<&'a BigRational> {
        match a {
            Fe::Rat(r) => Some(r),
            _ => None,
        }
    }

    fn mismatch(&self, a: &Fe, b: &Fe) -> ! {
        panic!("elements {a:?}, {b:?} do not belong to {self:?}")
    }
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let mut r = v % &m;
    if r.is_negative() {
        r += &m;
    }
    u64::try_from(r).expect("residue below p")
}

/// Reduces a digit vector modulo the monic `modulus` (length `n + 1`), returning
/// exactly `n` digits.
fn reduce_digits(mut c: Vec<u64>, p: u64, n: usize, modulus: &[u64]) -> Vec<u64> {
    for k in (n..c.len()).rev() {
        let lead = c[k];
        if lead == 0 {
            continue;
        }
        c[k] = 0;
        for i in 0..n {
            let sub = lead * modulus[i] % p;
            c[k - n + i] = (c[k - n + i] + p - sub) % p;
        }
    }
    c.resize(n, 0);
    c
}

/// Rabin's irreducibility test for a monic polynomial over GF(p).
pub fn is_irreducible(f: &UPoly) -> bool {
    let Some(n) = f.degree().finite() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let ctx = f.ctx();
    let Char::Prime(p) = ctx.characteristic() else {
        panic!("Rabin test needs a finite prime field")
    };
    let x = UPoly::x(ctx);
    // frob[m] = x^(p^m) mod f
    let mut frob = vec![x.rem(f).expect("f nonzero")];
    for m in 1..=n {
        let next = frob[m - 1].powmod(p, f).expect("same ctx");
        frob.push(next);
    }
    let full = frob[n].sub(&x).expect("same ctx").rem(f).expect("f nonzero");
    if !full.is_zero() {
        return false;
    }
    distinct_prime_factors(n as u64).into_iter().all(|l| {
        let h = frob[n / l as usize].sub(&x).expect("same ctx");
        f.gcd(&h).expect("same ctx").degree() == crate::poly::Degree::Finite(0)
    })
}

fn canonical_modulus(base: &FieldCtx, n: usize) -> UPoly {
    let p = base.order().expect("prime field");
    let count = p.pow(n as u32);
    (0..count)
        .map(|mut idx| {
            let mut coeffs = Vec::with_capacity(n + 1);
            for _ in 0..n {
                coeffs.push(Fe::Prime(idx % p));
                idx /= p;
            }
            coeffs.push(Fe::Prime(1));
            UPoly::new(base, coeffs)
        })
        .find(is_irreducible)
        .expect("irreducible polynomials exist in every degree")
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.inner {
            Inner::Prime { p } => write!(f, "GF({p})"),
            Inner::Extension { p, n, .. } => write!(f, "GF({p}^{n})"),
            Inner::Rationals => f.write_str("Q"),
        }
    }
}

/// Convenience for tests and callers building rationals.
pub fn rational(num: i64, den: i64) -> Fe {
    Fe::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
}
