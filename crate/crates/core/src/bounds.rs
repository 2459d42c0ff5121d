//! Lower bounds for restricted sumsets `{a + b : a in A, b in B, P(a, b) != 0}`.
//!
//! [`theorem1_bound`] is the general bound driven by the homogeneous top of `P`;
//! the `cor*` functions are its closed-form specialisations to particular
//! families of `P`, and [`classical_bound`] collects the older results they
//! refine, for comparison.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Char, Fe, FieldCtx};
use crate::multiplicity::{mult_at, n_value, profile};
use crate::poly::{BPoly, LinearFactor};

/// Integer or `+inf`. `PosInf` compares above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    Finite(i64),
    PosInf,
}

impl ExtInt {
    pub fn min_with(self, v: i64) -> i64 {
        match self {
            ExtInt::Finite(a) => a.min(v),
            ExtInt::PosInf => v,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::PosInf => f.write_str("inf"),
        }
    }
}

/// `p - sub`, or `+inf` in characteristic zero.
fn char_minus(ch: Char, sub: i64) -> ExtInt {
    match ch {
        Char::Prime(p) => ExtInt::Finite(p as i64 - sub),
        Char::Infinite => ExtInt::PosInf,
    }
}

/// Smallest witnesses of the two top-coefficient conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    /// Smallest `i <= |A| - 1` with `P^(i, d - i) != 0`.
    pub row_witness: Option<usize>,
    /// Smallest `j <= |B| - 1` with `P^(d - j, j) != 0`.
    pub col_witness: Option<usize>,
}

impl Hypothesis {
    pub fn holds(&self) -> bool {
        self.row_witness.is_some() && self.col_witness.is_some()
    }
}

/// Every ingredient of the general bound for one `(P, |A|, |B|)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub d: usize,
    pub na: usize,
    pub nb: usize,
    pub row_witness: usize,
    pub col_witness: usize,
    /// `N(P*)`.
    pub n_pstar: u64,
    /// Multiplicity of `-1` as a root of `P*`.
    pub m_neg1: usize,
    /// `p - m_neg1`, infinite in characteristic zero.
    pub term_char: ExtInt,
    /// `|A| + |B| - 1 - d - N(P*)`.
    pub term_size: i64,
    /// `min(term_char, term_size)`; may be zero or negative.
    pub bound: i64,
    /// `max(bound, 0)`.
    pub effective: u64,
}

pub fn hypothesis(p: &BPoly, na: usize, nb: usize) -> Result<Hypothesis> {
    let d = p.total_degree().finite().ok_or(Error::ZeroPolynomial)?;
    let ctx = p.ctx();
    let row_witness = (0..na.min(d + 1)).find(|&i| !ctx.is_zero(&p.coeff(i, d - i)));
    let col_witness = (0..nb.min(d + 1)).find(|&j| !ctx.is_zero(&p.coeff(d - j, j)));
    Ok(Hypothesis { row_witness, col_witness })
}

/// Lower bound on `|{a + b : a in A, b in B, P(a, b) != 0}|` for any `A`, `B` of
/// sizes `na`, `nb` in the field of `P`:
///
/// `min(p - m_{P*}(-1), |A| + |B| - 1 - d - N(P*))`
///
/// where `d = deg P` and `P*(x) = P_0(x, 1)` for the degree-`d` homogeneous part
/// `P_0`. Refuses with [`Error::HypothesisNotMet`] unless some `i < |A|` has
/// `P^(i, d - i) != 0` and some `j < |B|` has `P^(d - j, j) != 0`.
pub fn theorem1_bound(p: &BPoly, na: usize, nb: usize) -> Result<BoundReport> {
    let d = p.total_degree().finite().ok_or(Error::ZeroPolynomial)?;
    if na == 0 || nb == 0 {
        return Err(Error::EmptySet);
    }
    let hyp = hypothesis(p, na, nb)?;
    let (Some(row_witness), Some(col_witness)) = (hyp.row_witness, hyp.col_witness) else {
        return Err(Error::HypothesisNotMet {
            row_missing: hyp.row_witness.is_none(),
            col_missing: hyp.col_witness.is_none(),
        });
    };
    let ctx = p.ctx();
    let pstar = p.top()?.pstar;
    let prof = profile(&pstar)?;
    let m_neg1 = mult_at(&pstar, &ctx.neg(&ctx.one()))?;
    assert_eq!(m_neg1, prof.m_neg1, "multiplicity of -1 disagrees with the profile");
    let n_pstar = n_value(&prof, ctx.characteristic());
    let term_char = char_minus(ctx.characteristic(), m_neg1 as i64);
    let term_size = na as i64 + nb as i64 - 1 - d as i64 - n_pstar as i64;
    let bound = term_char.min_with(term_size);
    Ok(BoundReport {
        d,
        na,
        nb,
        row_witness,
        col_witness,
        n_pstar,
        m_neg1,
        term_char,
        term_size,
        bound,
        effective: bound.max(0) as u64,
    })
}

/// Bound for `a^k b^m (a + b)^n != Q(a, b)` with `deg Q < k + m + n`:
/// `min(p - n, |A| + |B| - k - m - n - 1)`.
pub fn cor1_bound(ch: Char, k: usize, m: usize, n: usize, na: usize, nb: usize) -> Result<i64> {
    if na <= k || nb <= m {
        return Err(Error::SizeGuard { k, m, na, nb });
    }
    let size = na as i64 + nb as i64 - (k + m + n) as i64 - 1;
    Ok(char_minus(ch, n as i64).min_with(size))
}

/// `x^k y^m (x + y)^n - Q`.
pub fn build_cor1_poly(ctx: &FieldCtx, k: usize, m: usize, n: usize, q: &BPoly) -> Result<BPoly> {
    let limit = k + m + n;
    if q.total_degree().finite().is_some_and(|dq| dq >= limit) {
        return Err(Error::DegreeGuard { limit });
    }
    let mono = BPoly::from_terms(ctx, [((k, m), ctx.one())]);
    let sum = BPoly::x(ctx).add(&BPoly::y(ctx))?;
    mono.mul(&sum.pow(n))?.sub(q)
}

/// The closed form for `a - b not in S` without the characteristic-2 guard:
/// `min(p, |A| + |B| - |S| - q - 1)` with `q` the largest power of `p` not
/// exceeding `|S|`.
pub fn cor2_expression(ch: Char, na: usize, nb: usize, size_s: usize) -> i64 {
    let q = ch.largest_power_at_most(size_s as u64) as i64;
    let size = na as i64 + nb as i64 - size_s as i64 - q - 1;
    char_minus(ch, 0).min_with(size)
}

/// Bound for `a - b not in S`. Fails in characteristic 2, where the closed form is
/// not a valid lower bound.
pub fn cor2_bound(ch: Char, na: usize, nb: usize, size_s: usize) -> Result<i64> {
    if ch == Char::Prime(2) {
        return Err(Error::CharTwo);
    }
    if size_s == 0 {
        return Err(Error::GuardFailed("|S| must be at least 1".into()));
    }
    Ok(cor2_expression(ch, na, nb, size_s))
}

/// `prod_{s in S} (x - y - s)`.
pub fn build_cor2_poly(ctx: &FieldCtx, s: &[Fe]) -> Result<BPoly> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let factors: Vec<_> =
        s.iter().map(|e| LinearFactor::new(ctx.one(), ctx.neg(&ctx.one()), ctx.neg(e))).collect();
    BPoly::linear_product(ctx, &factors)
}

fn check_pairs(ctx: &FieldCtx, s: &[(Fe, Fe)]) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if s.iter().any(|(u, _)| ctx.is_zero(u)) {
        return Err(Error::ZeroU);
    }
    let distinct: BTreeSet<_> = s.iter().map(|(u, v)| (ElemKey(ctx, u), ElemKey(ctx, v))).collect();
    if distinct.len() != s.len() {
        return Err(Error::DuplicateElement);
    }
    Ok(())
}

/// Bound for `a + u b != v` for every `(u, v) in S`:
/// `min(p - #{v : (1, v) in S}, |A| + |B| - 2|S| - 1)`.
pub fn cor3_bound(ctx: &FieldCtx, na: usize, nb: usize, s: &[(Fe, Fe)]) -> Result<i64> {
    check_pairs(ctx, s)?;
    let one = ctx.one();
    let r = s.iter().filter(|(u, _)| *u == one).count() as i64;
    let size = na as i64 + nb as i64 - 2 * s.len() as i64 - 1;
    Ok(char_minus(ctx.characteristic(), r).min_with(size))
}

/// `prod_{(u, v) in S} (x + u y - v)`.
pub fn build_cor3_poly(ctx: &FieldCtx, s: &[(Fe, Fe)]) -> Result<BPoly> {
    check_pairs(ctx, s)?;
    let factors: Vec<_> = s.iter().map(|(u, v)| LinearFactor::new(ctx.one(), u.clone(), ctx.neg(v))).collect();
    BPoly::linear_product(ctx, &factors)
}

/// Older sumset bounds, kept for comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classical {
    /// `|A + B| >= min(p, |A| + |B| - 1)`.
    CauchyDavenport { na: usize, nb: usize },
    /// Sums of distinct elements of one set: `min(p, 2|A| - 3)`.
    ErdosHeilbronn { k: usize },
    /// Distinct sums with `|A| > |B| > 0`: `min(p, |A| + |B| - 2)`.
    AlonNathansonRuzsa { na: usize, nb: usize },
    /// Refinement of the `a - b not in S` bound for `|A| = |B| = k`, `|S|` even and
    /// below `p`: `min(p, 2k - |S| - 1)`.
    EvenDifferences { k: usize, size_s: usize },
}

pub fn classical_bound(kind: Classical, ch: Char) -> Result<i64> {
    let p = char_minus(ch, 0);
    let value = match kind {
        Classical::CauchyDavenport { na, nb } => p.min_with(na as i64 + nb as i64 - 1),
        Classical::ErdosHeilbronn { k } => p.min_with(2 * k as i64 - 3),
        Classical::AlonNathansonRuzsa { na, nb } => {
            if !(na > nb && nb > 0) {
                return Err(Error::GuardFailed(format!("needs |A| > |B| > 0, got {na}, {nb}")));
            }
            p.min_with(na as i64 + nb as i64 - 2)
        }
        Classical::EvenDifferences { k, size_s } => {
            if size_s % 2 != 0 {
                return Err(Error::GuardFailed(format!("needs |S| even, got {size_s}")));
            }
            if p <= ExtInt::Finite(size_s as i64) {
                return Err(Error::GuardFailed(format!("needs |S| < p, got |S| = {size_s}, p = {ch}")));
            }
            p.min_with(2 * k as i64 - size_s as i64 - 1)
        }
    };
    Ok(value)
}

/// Orders elements of one field for set membership checks.
struct ElemKey<'a>(&'a FieldCtx, &'a Fe);

impl PartialEq for ElemKey<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.1 == other.1
    }
}
impl Eq for ElemKey<'_> {}
impl PartialOrd for ElemKey<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for ElemKey<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp_elems(self.1, other.1)
    }
}
