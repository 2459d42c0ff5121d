use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Fe, FieldCtx};

use super::{Degree, UPoly};

/// Sparse bivariate polynomial: exponent pair `(i, j)` of `x^i y^j` to a nonzero
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BPoly {
    ctx: FieldCtx,
    terms: BTreeMap<(usize, usize), Fe>,
}

/// Homogeneous top of a nonzero `P(x, y)` of total degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomTop {
    /// The degree-`d` homogeneous part of `P`.
    pub p0: BPoly,
    /// `p0(x, 1)`; its coefficient of `x^i` is the coefficient of `x^i y^(d-i)` in `P`.
    pub pstar: UPoly,
}

/// The linear form `cx * x + cy * y + c0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactor {
    pub cx: Fe,
    pub cy: Fe,
    pub c0: Fe,
}

impl LinearFactor {
    pub fn new(cx: Fe, cy: Fe, c0: Fe) -> Self {
        Self { cx, cy, c0 }
    }
}

impl BPoly {
    pub fn zero(ctx: &FieldCtx) -> Self {
        Self { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &FieldCtx, c: Fe) -> Self {
        Self::from_terms(ctx, [((0, 0), c)])
    }

    pub fn one(ctx: &FieldCtx) -> Self {
        Self::constant(ctx, ctx.one())
    }

    pub fn x(ctx: &FieldCtx) -> Self {
        Self::from_terms(ctx, [((1, 0), ctx.one())])
    }

    pub fn y(ctx: &FieldCtx) -> Self {
        Self::from_terms(ctx, [((0, 1), ctx.one())])
    }

    /// Sums repeated exponents and drops zeros.
    pub fn from_terms(ctx: &FieldCtx, terms: impl IntoIterator<Item = ((usize, usize), Fe)>) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            accumulate(ctx, &mut out, e, c);
        }
        Self { ctx: ctx.clone(), terms: out }
    }

    /// Builds from integer coefficients, reduced into the field.
    pub fn from_i64_terms(ctx: &FieldCtx, terms: &[((usize, usize), i64)]) -> Self {
        Self::from_terms(ctx, terms.iter().map(|&(e, c)| (e, ctx.from_i64(c))))
    }

    /// `u(x)` viewed as a polynomial in `x` and `y`.
    pub fn from_upoly_x(u: &UPoly) -> Self {
        Self::from_terms(u.ctx(), u.coeffs().iter().enumerate().map(|(i, c)| ((i, 0), c.clone())))
    }

    /// The polynomial as a `UPoly` in `x`, if `y` does not occur.
    pub fn to_upoly_x(&self) -> Option<UPoly> {
        if self.terms.keys().any(|&(_, j)| j > 0) {
            return None;
        }
        let len = self.terms.keys().map(|&(i, _)| i + 1).max().unwrap_or(0);
        let mut coeffs = vec![self.ctx.zero(); len];
        for (&(i, _), c) in &self.terms {
            coeffs[i] = c.clone();
        }
        Some(UPoly::new(&self.ctx, coeffs))
    }

    /// Expanded product of `cx*x + cy*y + c0` over all factors.
    pub fn linear_product(ctx: &FieldCtx, factors: &[LinearFactor]) -> Result<Self> {
        let mut acc = Self::one(ctx);
        for f in factors {
            if ctx.is_zero(&f.cx) && ctx.is_zero(&f.cy) {
                return Err(Error::DegenerateFactor);
            }
            let lin = Self::from_terms(
                ctx,
                [((1, 0), f.cx.clone()), ((0, 1), f.cy.clone()), ((0, 0), f.c0.clone())],
            );
            acc = acc.mul(&lin)?;
        }
        Ok(acc)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Fe)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> Fe {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree `max(i + j)`.
    pub fn total_degree(&self) -> Degree {
        self.terms.keys().map(|&(i, j)| i + j).max().map_or(Degree::NegInf, Degree::Finite)
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
        let mut terms = self.terms.clone();
        for (&e, c) in &other.terms {
            accumulate(&self.ctx, &mut terms, e, c.clone());
        }
        Ok(Self { ctx: self.ctx.clone(), terms })
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(&e, c)| (e, self.ctx.neg(c))).collect();
        Self { ctx: self.ctx.clone(), terms }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Fe) -> Self {
        Self::from_terms(&self.ctx, self.terms.iter().map(|(&e, a)| (e, self.ctx.mul(a, c))))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let ctx = &self.ctx;
        let mut terms = BTreeMap::new();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &other.terms {
                accumulate(ctx, &mut terms, (i1 + i2, j1 + j2), ctx.mul(a, b));
            }
        }
        Ok(Self { ctx: ctx.clone(), terms })
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(&self.ctx), |acc, _| acc.mul(self).expect("same ctx"))
    }

    /// `P(a, b)`.
    pub fn eval(&self, a: &Fe, b: &Fe) -> Result<Fe> {
        let ctx = &self.ctx;
        if !ctx.contains(a) || !ctx.contains(b) {
            return Err(Error::CtxMismatch);
        }
        Ok(self.eval_unchecked(a, b))
    }

    pub(crate) fn eval_unchecked(&self, a: &Fe, b: &Fe) -> Fe {
        let ctx = &self.ctx;
        let mut acc = ctx.zero();
        for (&(i, j), c) in &self.terms {
            let term = ctx.mul(c, &ctx.mul(&ctx.pow_u64(a, i as u64), &ctx.pow_u64(b, j as u64)));
            acc = ctx.add(&acc, &term);
        }
        acc
    }

    /// The homogeneous top `P_0` and `P*(x) = P_0(x, 1)`.
    pub fn top(&self) -> Result<HomTop> {
        let d = self.total_degree().finite().ok_or(Error::ZeroPolynomial)?;
        let top_terms: BTreeMap<_, _> =
            self.terms.iter().filter(|(&(i, j), _)| i + j == d).map(|(&e, c)| (e, c.clone())).collect();
        let mut coeffs = vec![self.ctx.zero(); d + 1];
        for (&(i, _), c) in &top_terms {
            coeffs[i] = c.clone();
        }
        Ok(HomTop {
            p0: Self { ctx: self.ctx.clone(), terms: top_terms },
            pstar: UPoly::new(&self.ctx, coeffs),
        })
    }
}

fn accumulate(ctx: &FieldCtx, terms: &mut BTreeMap<(usize, usize), Fe>, e: (usize, usize), c: Fe) {
    if ctx.is_zero(&c) {
        return;
    }
    match terms.get_mut(&e) {
        Some(existing) => {
            let sum = ctx.add(existing, &c);
            if ctx.is_zero(&sum) {
                terms.remove(&e);
            } else {
                *existing = sum;
            }
        }
        None => {
            terms.insert(e, c);
        }
    }
}
