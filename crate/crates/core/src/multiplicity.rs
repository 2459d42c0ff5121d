//! Root multiplicities in the algebraic closure, computed from squarefree structure.
//!
//! Over a perfect field a squarefree polynomial of degree `n` has exactly `n`
//! distinct roots in the closure, so the squarefree decomposition
//! `P = unit * x^e0 * prod S_m^m` tells us how many closure roots have each
//! multiplicity without ever constructing them. The root `-1` is separated out by
//! evaluating each part there.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Char, Fe, FieldCtx};
use crate::poly::UPoly;

/// `P = unit * x^e0 * prod_m parts[m]^m`, every part monic, squarefree, coprime to
/// the others and with nonzero constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqfDecomp {
    pub ctx: FieldCtx,
    pub unit: Fe,
    pub e0: usize,
    pub parts: BTreeMap<usize, UPoly>,
}

impl SqfDecomp {
    pub fn reconstruct(&self) -> UPoly {
        let ctx = &self.ctx;
        let mut acc = UPoly::monomial(ctx, self.unit.clone(), self.e0);
        for (&m, s) in &self.parts {
            acc = acc.mul(&s.pow(m)).expect("same ctx");
        }
        acc
    }
}

/// Multiset of closure-root multiplicities of a nonzero polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultProfile {
    /// `m -> number of distinct roots outside {0, -1} with multiplicity exactly m`.
    pub counts: BTreeMap<usize, usize>,
    pub m_neg1: usize,
    pub m_zero: usize,
    pub degree: usize,
}

impl MultProfile {
    /// Number of distinct nonzero closure roots (including `-1`).
    pub fn distinct_nonzero_roots(&self) -> usize {
        self.counts.values().sum::<usize>() + usize::from(self.m_neg1 > 0)
    }
}

/// Which alternative of the gap lemma holds for `(P, k, l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaVerdict {
    DivisibleByXl,
    DegAtMostK,
    NqWitness { q: u64, value: i64 },
    /// None of the alternatives holds. Only an implementation bug can produce this.
    Violation,
}

pub fn squarefree_decompose(p: &UPoly) -> Result<SqfDecomp> {
    let ctx = p.ctx();
    let unit = p.lc().ok_or(Error::ZeroPolynomial)?.clone();
    let e0 = p.x_valuation();
    let f = p.shift_down(e0).monic();
    let parts = match ctx.characteristic() {
        Char::Infinite => yun(&f)?,
        Char::Prime(q) => musser(&f, q)?,
    };
    Ok(SqfDecomp { ctx: ctx.clone(), unit, e0, parts })
}

/// Yun's algorithm; valid in characteristic zero.
fn yun(f: &UPoly) -> Result<BTreeMap<usize, UPoly>> {
    let mut out = BTreeMap::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative();
    let g = f.gcd(&df)?;
    let mut w = f.div_exact(&g)?;
    let mut y = df.div_exact(&g)?;
    let mut i = 1;
    while !w.is_constant() {
        let z = y.sub(&w.derivative())?;
        let a = w.gcd(&z)?;
        if !a.is_constant() {
            out.insert(i, a.clone());
        }
        w = w.div_exact(&a)?;
        y = z.div_exact(&a)?;
        i += 1;
    }
    Ok(out)
}

/// Characteristic-p variant: peel off the factors whose multiplicity is prime to p,
/// then take the p-th root of what is left and recurse with multiplicities scaled.
fn musser(f: &UPoly, p: u64) -> Result<BTreeMap<usize, UPoly>> {
    let mut out = BTreeMap::new();
    if f.is_constant() {
        return Ok(out);
    }
    let mut c = f.gcd(&f.derivative())?;
    let mut w = f.div_exact(&c)?;
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c)?;
        let z = w.div_exact(&y)?;
        if !z.is_constant() {
            out.insert(i, z);
        }
        i += 1;
        w = y;
        c = c.div_exact(&w)?;
    }
    if !c.is_constant() {
        let root = poly_pth_root(&c, p)?;
        let p = p as usize;
        for (m, s) in musser(&root, p as u64)? {
            out.insert(m * p, s);
        }
    }
    Ok(out)
}

/// `g` with `g(x)^p = c(x)`, for `c` with vanishing derivative.
fn poly_pth_root(c: &UPoly, p: u64) -> Result<UPoly> {
    let ctx = c.ctx();
    let p = p as usize;
    let mut coeffs = Vec::new();
    for (i, a) in c.coeffs().iter().enumerate() {
        if i % p == 0 {
            coeffs.push(ctx.pth_root(a)?);
        } else {
            debug_assert!(ctx.is_zero(a), "not a p-th power");
        }
    }
    Ok(UPoly::new(ctx, coeffs))
}

/// Largest `m` with `(x - alpha)^m | P`.
pub fn mult_at(p: &UPoly, alpha: &Fe) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ctx = p.ctx();
    if !ctx.contains(alpha) {
        return Err(Error::CtxMismatch);
    }
    let mut cur = p.coeffs().to_vec();
    let mut m = 0;
    // Synthetic division by (x - alpha) until the remainder is nonzero.
    loop {
        let mut quot = vec![ctx.zero(); cur.len() - 1];
        let mut carry = ctx.zero();
        for k in (0..cur.len()).rev() {
            carry = ctx.add(&ctx.mul(&carry, alpha), &cur[k]);
            if k > 0 {
                quot[k - 1] = carry.clone();
            }
        }
        if !ctx.is_zero(&carry) {
            return Ok(m);
        }
        m += 1;
        cur = quot;
    }
}

pub fn profile(p: &UPoly) -> Result<MultProfile> {
    let dec = squarefree_decompose(p)?;
    let ctx = p.ctx();
    let minus_one = ctx.neg(&ctx.one());
    let mut prof = MultProfile {
        m_zero: dec.e0,
        degree: p.degree().finite().expect("nonzero"),
        ..MultProfile::default()
    };
    for (&m, s) in &dec.parts {
        let deg = s.degree().finite().expect("nonconstant part");
        let hits_neg1 = ctx.is_zero(&s.eval(&minus_one));
        if hits_neg1 {
            prof.m_neg1 = m;
        }
        let c = deg - usize::from(hits_neg1);
        if c > 0 {
            prof.counts.insert(m, c);
        }
    }
    Ok(prof)
}

/// `q * #{a != 0 : m(a) >= q} - sum_{a != 0} (m(a) mod q)`. The root `-1` counts.
pub fn nq_value(prof: &MultProfile, q: u64) -> i64 {
    assert!(q >= 1, "q must be positive");
    let q = q as i64;
    let mut at_least_q = 0i64;
    let mut residues = 0i64;
    let all = prof.counts.iter().map(|(&m, &c)| (m as i64, c as i64));
    let neg1 = (prof.m_neg1 > 0).then_some((prof.m_neg1 as i64, 1));
    for (m, c) in all.chain(neg1) {
        if m >= q {
            at_least_q += c;
        }
        residues += c * (m % q);
    }
    q * at_least_q - residues
}

/// `max_q q * #{a not in {0, -1} : m(a) >= q}` over the powers `q` of the
/// characteristic (just `q = 1` in characteristic zero).
pub fn n_value(prof: &MultProfile, ch: Char) -> u64 {
    // Powers above the degree cannot reach any multiplicity and contribute 0.
    let limit = prof.degree.max(1) as u64;
    ch.powers_up_to(limit)
        .into_iter()
        .map(|q| {
            let roots: usize = prof.counts.range(q as usize..).map(|(_, &c)| c).sum();
            q * roots as u64
        })
        .max()
        .unwrap_or(0)
}

/// Consecutive nonzero-coefficient indices `k < l` with at least one zero
/// coefficient between them.
pub fn coefficient_gaps(p: &UPoly) -> Result<Vec<(usize, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let support: Vec<usize> = p.support().collect();
    Ok(support.windows(2).filter(|w| w[1] - w[0] >= 2).map(|w| (w[0], w[1])).collect())
}

/// Checks the alternatives in order: `x^l | P`, `deg P <= k`, then `N_q(P) >= l - k`
/// for `q = 1, p, p^2, ...`.
pub fn lemma1_check(p: &UPoly, k: usize, l: usize) -> Result<LemmaVerdict> {
    if k >= l {
        return Err(Error::InvalidGap { k, l });
    }
    let ctx = p.ctx();
    if let Some(index) = (k + 1..l).find(|&i| !ctx.is_zero(&p.coeff(i))) {
        return Err(Error::GapHypothesisFails { k, l, index });
    }
    if p.is_zero() || p.x_valuation() >= l {
        return Ok(LemmaVerdict::DivisibleByXl);
    }
    let deg = p.degree().finite().expect("nonzero");
    if deg <= k {
        return Ok(LemmaVerdict::DegAtMostK);
    }
    let prof = profile(p)?;
    let need = (l - k) as i64;
    let verdict = ctx
        .characteristic()
        .powers_up_to(deg as u64)
        .into_iter()
        .map(|q| (q, nq_value(&prof, q)))
        .find(|&(_, v)| v >= need)
        .map_or(LemmaVerdict::Violation, |(q, value)| LemmaVerdict::NqWitness { q, value });
    Ok(verdict)
}
