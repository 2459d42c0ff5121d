//! Brute-force restricted sumsets and the harness that checks the bounds against
//! them.

mod prng;
mod sweep;

pub use prng::SplitMix64;
pub use sweep::{sweep, Pairing, SweepConfig, SweepMode, SweepRecord, SweepReport, HYPOTHESIS_SKIP};

use std::cmp::Ordering;

use crate::bounds::{theorem1_bound, BoundReport};
use crate::error::{Error, Result};
use crate::field::{Fe, FieldCtx};
use crate::poly::BPoly;

/// Finite set of field elements, kept in canonical element order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FSet {
    ctx: FieldCtx,
    elems: Vec<Fe>,
}

impl FSet {
    /// Rejects elements outside `ctx` and duplicates.
    pub fn new(ctx: &FieldCtx, mut elems: Vec<Fe>) -> Result<Self> {
        if elems.iter().any(|e| !ctx.contains(e)) {
            return Err(Error::CtxMismatch);
        }
        elems.sort_by(|a, b| ctx.cmp_elems(a, b));
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement);
        }
        Ok(Self { ctx: ctx.clone(), elems })
    }

    pub fn from_i64s(ctx: &FieldCtx, vals: &[i64]) -> Result<Self> {
        Self::new(ctx, vals.iter().map(|&v| ctx.from_i64(v)).collect())
    }

    /// Every element of a finite field.
    pub fn full(ctx: &FieldCtx) -> Result<Self> {
        Ok(Self { ctx: ctx.clone(), elems: ctx.elements()? })
    }

    /// Elements at the given canonical indices of a finite field.
    pub fn from_indices(ctx: &FieldCtx, idx: &[u64]) -> Result<Self> {
        let elems = idx
            .iter()
            .map(|&i| ctx.element_at(i).ok_or(Error::NotFiniteField))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx, elems)
    }

    fn collect_dedup(ctx: &FieldCtx, mut elems: Vec<Fe>) -> Self {
        elems.sort_by(|a, b| ctx.cmp_elems(a, b));
        elems.dedup();
        Self { ctx: ctx.clone(), elems }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn elems(&self) -> &[Fe] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, e: &Fe) -> bool {
        self.elems.binary_search_by(|x| self.ctx.cmp_elems(x, e)).is_ok()
    }

    /// Canonical indices (finite fields only).
    pub fn indices(&self) -> Option<Vec<u64>> {
        self.elems.iter().map(|e| self.ctx.index_of(e)).collect()
    }

    fn same_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::CtxMismatch)
        }
    }
}

impl PartialOrd for FSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FSet {
    /// Lexicographic in canonical element order. Only meaningful within one field.
    fn cmp(&self, other: &Self) -> Ordering {
        let ctx = &self.ctx;
        for (a, b) in self.elems.iter().zip(&other.elems) {
            match ctx.cmp_elems(a, b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.elems.len().cmp(&other.elems.len())
    }
}

fn sums_where(a: &FSet, b: &FSet, mut keep: impl FnMut(&Fe, &Fe) -> bool) -> Result<FSet> {
    a.same_ctx(b)?;
    let ctx = &a.ctx;
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in &a.elems {
        for y in &b.elems {
            if keep(x, y) {
                out.push(ctx.add(x, y));
            }
        }
    }
    Ok(FSet::collect_dedup(ctx, out))
}

/// `A + B`.
pub fn plain_sumset(a: &FSet, b: &FSet) -> Result<FSet> {
    sums_where(a, b, |_, _| true)
}

/// Sums `a + b` with `a != b`.
pub fn dot_sumset(a: &FSet, b: &FSet) -> Result<FSet> {
    sums_where(a, b, |x, y| x != y)
}

/// `{a + b : a in A, b in B, P(a, b) != 0}` by enumerating all of `A x B`.
pub fn restricted_sumset(a: &FSet, b: &FSet, p: &BPoly) -> Result<FSet> {
    if a.ctx != *p.ctx() {
        return Err(Error::CtxMismatch);
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let ctx = p.ctx().clone();
    sums_where(a, b, |x, y| !ctx.is_zero(&p.eval_unchecked(x, y)))
}

/// One brute-force check of the general bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRecord {
    pub card_c: usize,
    pub report: BoundReport,
    /// `card_c - effective`.
    pub slack: i64,
    /// `card_c >= bound`.
    pub ok: bool,
}

impl VerifyRecord {
    pub(crate) fn new(card_c: usize, report: BoundReport) -> Self {
        let slack = card_c as i64 - report.effective as i64;
        let ok = card_c as i64 >= report.bound;
        Self { card_c, report, slack, ok }
    }
}

pub fn verify_instance(a: &FSet, b: &FSet, p: &BPoly) -> Result<VerifyRecord> {
    let c = restricted_sumset(a, b, p)?;
    let report = theorem1_bound(p, a.len(), b.len())?;
    Ok(VerifyRecord::new(c.len(), report))
}

/// For `f` vanishing on `A x B`, checks that every top coefficient `f^(k1, k2)`
/// with `k1 + k2 = deg f`, `k1 < |A|`, `k2 < |B|` is zero.
pub fn cn_vanish_check(f: &BPoly, a: &FSet, b: &FSet) -> Result<bool> {
    let deg = f.total_degree().finite().ok_or(Error::ZeroPolynomial)?;
    if a.ctx != *f.ctx() || b.ctx != *f.ctx() {
        return Err(Error::CtxMismatch);
    }
    let ctx = f.ctx();
    for x in &a.elems {
        for y in &b.elems {
            if !ctx.is_zero(&f.eval_unchecked(x, y)) {
                return Err(Error::NotVanishing);
            }
        }
    }
    let ok = (0..a.len().min(deg + 1))
        .filter(|&k1| deg - k1 < b.len())
        .all(|k1| ctx.is_zero(&f.coeff(k1, deg - k1)));
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::LinearFactor;

    fn gf(p: u64) -> FieldCtx {
        FieldCtx::prime(p).unwrap()
    }

    fn set(ctx: &FieldCtx, v: &[i64]) -> FSet {
        FSet::from_i64s(ctx, v).unwrap()
    }

    fn x_minus_y(ctx: &FieldCtx) -> BPoly {
        BPoly::x(ctx).sub(&BPoly::y(ctx)).unwrap()
    }

    #[test]
    fn sumset_examples() {
        let f5 = gf(5);
        let s = set(&f5, &[0, 1]);
        assert_eq!(plain_sumset(&s, &s).unwrap(), set(&f5, &[0, 1, 2]));
        assert_eq!(dot_sumset(&s, &s).unwrap(), set(&f5, &[1]));
        let f7 = gf(7);
        let s = set(&f7, &[0, 1, 2]);
        assert_eq!(dot_sumset(&s, &s).unwrap(), set(&f7, &[1, 2, 3]));
        assert_eq!(restricted_sumset(&s, &s, &x_minus_y(&f7)).unwrap(), set(&f7, &[1, 2, 3]));
        assert_eq!(restricted_sumset(&s, &s, &BPoly::one(&f7)).unwrap(), plain_sumset(&s, &s).unwrap());
        let f3 = gf(3);
        let z = set(&f3, &[0]);
        let xy = BPoly::from_i64_terms(&f3, &[((1, 1), 1)]);
        assert!(restricted_sumset(&z, &z, &xy).unwrap().is_empty());
        let empty = FSet::new(&f3, vec![]).unwrap();
        assert_eq!(restricted_sumset(&empty, &z, &xy), Err(Error::EmptySet));
        assert_eq!(plain_sumset(&s, &z), Err(Error::CtxMismatch));
    }

    #[test]
    fn duplicates_rejected() {
        assert_eq!(FSet::from_i64s(&gf(5), &[1, 1]), Err(Error::DuplicateElement));
        // 6 = 1 in GF(5)
        assert_eq!(FSet::from_i64s(&gf(5), &[1, 6]), Err(Error::DuplicateElement));
    }

    #[test]
    fn verify_examples() {
        let f7 = gf(7);
        let s = set(&f7, &[0, 1, 2]);
        let r = verify_instance(&s, &s, &x_minus_y(&f7)).unwrap();
        assert_eq!((r.card_c, r.report.bound, r.slack, r.ok), (3, 3, 0, true));

        let r = verify_instance(&set(&f7, &[0, 1, 2, 3]), &set(&f7, &[0, 1, 2, 3, 4]), &BPoly::one(&f7)).unwrap();
        assert_eq!((r.card_c, r.report.bound, r.ok), (7, 7, true));
    }

    #[test]
    fn char_two_field_breaks_difference_bound() {
        let gf4 = FieldCtx::extension(2, 2, None).unwrap();
        let all = FSet::full(&gf4).unwrap();
        let s = &gf4.elements().unwrap()[1..];
        let p = crate::bounds::build_cor2_poly(&gf4, s).unwrap();
        let r = verify_instance(&all, &all, &p).unwrap();
        assert_eq!(r.card_c, 1);
        assert!(r.ok);
        assert_eq!(crate::bounds::cor2_expression(gf4.characteristic(), 4, 4, 3), 2);
    }

    #[test]
    fn cn_examples() {
        let f7 = gf(7);
        let a = set(&f7, &[0, 1, 2]);
        let b = set(&f7, &[3, 5]);
        let roots_a: Vec<_> =
            a.elems().iter().map(|e| LinearFactor::new(f7.one(), f7.zero(), f7.neg(e))).collect();
        let roots_b: Vec<_> =
            b.elems().iter().map(|e| LinearFactor::new(f7.zero(), f7.one(), f7.neg(e))).collect();
        let fa = BPoly::linear_product(&f7, &roots_a).unwrap();
        let fb = BPoly::linear_product(&f7, &roots_b).unwrap();
        assert!(cn_vanish_check(&fa, &a, &b).unwrap());
        let f = x_minus_y(&f7).mul(&fa).unwrap().mul(&fb).unwrap();
        assert!(cn_vanish_check(&f, &a, &b).unwrap());

        let z = set(&f7, &[0]);
        assert!(cn_vanish_check(&x_minus_y(&f7), &z, &z).unwrap());
        assert_eq!(cn_vanish_check(&x_minus_y(&f7), &a, &a), Err(Error::NotVanishing));
        assert_eq!(cn_vanish_check(&BPoly::zero(&f7), &a, &a), Err(Error::ZeroPolynomial));
    }
}
