use crate::error::{Error, Result};
use crate::field::{Fe, FieldCtx};

use super::Degree;

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// Never stores trailing zeros, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UPoly {
    ctx: FieldCtx,
    coeffs: Vec<Fe>,
}

impl UPoly {
    pub fn new(ctx: &FieldCtx, coeffs: Vec<Fe>) -> Self {
        let mut p = Self { ctx: ctx.clone(), coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(ctx: &FieldCtx, coeffs: &[i64]) -> Self {
        Self::new(ctx, coeffs.iter().map(|&c| ctx.from_i64(c)).collect())
    }

    pub fn zero(ctx: &FieldCtx) -> Self {
        Self { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &FieldCtx) -> Self {
        Self::constant(ctx, ctx.one())
    }

    pub fn constant(ctx: &FieldCtx, c: Fe) -> Self {
        Self::new(ctx, vec![c])
    }

    pub fn x(ctx: &FieldCtx) -> Self {
        Self::monomial(ctx, ctx.one(), 1)
    }

    pub fn monomial(ctx: &FieldCtx, c: Fe, k: usize) -> Self {
        let mut coeffs = vec![ctx.zero(); k];
        coeffs.push(c);
        Self::new(ctx, coeffs)
    }

    /// `prod (x - r)` over the given roots, repeated roots allowed.
    pub fn from_roots(ctx: &FieldCtx, roots: &[Fe]) -> Self {
        roots.iter().fold(Self::one(ctx), |acc, r| {
            let lin = Self::new(ctx, vec![ctx.neg(r), ctx.one()]);
            acc.mul(&lin).expect("same ctx")
        })
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.ctx.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Option<&Fe> {
        self.coeffs.last()
    }

    fn same_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::CtxMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let ctx = &self.ctx;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => ctx.add(a, b),
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Self::new(ctx, coeffs))
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ctx.neg(c)).collect();
        Self { ctx: self.ctx.clone(), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Fe) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ctx.mul(a, c)).collect();
        Self::new(&self.ctx, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let ctx = &self.ctx;
        let mut out = vec![ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if ctx.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(&out[i + j], &ctx.mul(a, b));
            }
        }
        Ok(Self::new(ctx, out))
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ctx");
        }
        acc
    }

    /// `(q, r)` with `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.same_ctx(divisor)?;
        let ctx = &self.ctx;
        let Some(lead) = divisor.lc() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = ctx.inv(lead)?;
        let dn = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dn {
            return Ok((Self::zero(ctx), self.clone()));
        }
        let mut quot = vec![ctx.zero(); rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let c = ctx.mul(&rem[k + dn - 1], &lead_inv);
            if ctx.is_zero(&c) {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = ctx.sub(&rem[k + i], &ctx.mul(&c, d));
            }
            quot[k] = c;
        }
        rem.truncate(dn - 1);
        Ok((Self::new(ctx, quot), Self::new(ctx, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Quotient of a division known to be exact.
    pub(crate) fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        debug_assert!(r.is_zero(), "inexact division");
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(lead) => self.scale(&self.ctx.inv(lead).expect("nonzero lead")),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Formal derivative; in characteristic p the coefficient of `x^(kp)` dies.
    pub fn derivative(&self) -> Self {
        let ctx = &self.ctx;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| ctx.mul(c, &ctx.from_i64(i as i64)))
            .collect();
        Self::new(ctx, coeffs)
    }

    pub fn eval(&self, a: &Fe) -> Fe {
        let ctx = &self.ctx;
        self.coeffs.iter().rev().fold(ctx.zero(), |acc, c| ctx.add(&ctx.mul(&acc, a), c))
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &Self) -> Result<Self> {
        let mut base = self.rem(m)?;
        let mut acc = Self::one(&self.ctx).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?.rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?.rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Largest `h` with `x^h | self`; 0 for the zero polynomial.
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !self.ctx.is_zero(c)).unwrap_or(0)
    }

    /// `self / x^k`, dropping the low `k` coefficients.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.ctx.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { ctx: self.ctx.clone(), coeffs }
    }

    /// Indices of nonzero coefficients, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !self.ctx.is_zero(c)).map(|(i, _)| i)
    }
}
