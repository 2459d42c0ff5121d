#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rsumset::{BPoly, Fe, FieldCtx, UPoly};

pub fn gf(p: u64) -> FieldCtx {
    FieldCtx::prime(p).unwrap()
}

pub fn ext(p: u64, n: usize) -> FieldCtx {
    FieldCtx::extension(p, n, None).unwrap()
}

/// The contexts most property tests run over.
pub fn all_ctxs() -> Vec<FieldCtx> {
    vec![gf(2), gf(3), gf(5), gf(7), ext(2, 2), ext(3, 2), ext(2, 3), FieldCtx::rationals()]
}

pub fn rand_elem<R: Rng>(ctx: &FieldCtx, rng: &mut R) -> Fe {
    match ctx.order() {
        Some(q) => ctx.element_at(rng.gen_range(0..q)).unwrap(),
        None => ctx
            .from_ratio(&BigInt::from(rng.gen_range(-9i64..=9)), &BigInt::from(rng.gen_range(1i64..=4)))
            .unwrap(),
    }
}

pub fn rand_nonzero<R: Rng>(ctx: &FieldCtx, rng: &mut R) -> Fe {
    loop {
        let e = rand_elem(ctx, rng);
        if !ctx.is_zero(&e) {
            return e;
        }
    }
}

/// Random polynomial of degree at most `max_deg`; roughly a third of the
/// coefficients are forced to zero so that coefficient gaps are common.
pub fn rand_upoly<R: Rng>(ctx: &FieldCtx, rng: &mut R, max_deg: usize) -> UPoly {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs = (0..=deg)
        .map(|_| if rng.gen_bool(0.35) { ctx.zero() } else { rand_elem(ctx, rng) })
        .collect();
    UPoly::new(ctx, coeffs)
}

pub fn rand_nonzero_upoly<R: Rng>(ctx: &FieldCtx, rng: &mut R, max_deg: usize) -> UPoly {
    loop {
        let p = rand_upoly(ctx, rng, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

/// `unit * x^e * prod f_i^{m_i}` with small random factors: exercises repeated
/// roots, p-th powers and roots at 0 and -1.
pub fn rand_structured_upoly<R: Rng>(ctx: &FieldCtx, rng: &mut R, max_deg: usize) -> UPoly {
    let mut acc = UPoly::constant(ctx, rand_nonzero(ctx, rng));
    let mut deg = 0;
    let e = rng.gen_range(0..=2);
    acc = acc.shift_up(e);
    deg += e;
    for _ in 0..rng.gen_range(0..=4) {
        let fd = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=5);
        if deg + fd * m > max_deg {
            continue;
        }
        let mut coeffs: Vec<Fe> = (0..fd).map(|_| rand_elem(ctx, rng)).collect();
        coeffs.push(ctx.one());
        if rng.gen_bool(0.2) {
            // (x + 1)
            coeffs = vec![ctx.one(), ctx.one()];
        }
        let f = UPoly::new(ctx, coeffs);
        let fd = f.degree().finite().unwrap();
        acc = acc.mul(&f.pow(m)).unwrap();
        deg += fd * m;
    }
    acc
}

pub fn rand_bpoly<R: Rng>(ctx: &FieldCtx, rng: &mut R, max_deg: usize, max_terms: usize) -> BPoly {
    let n = rng.gen_range(0..=max_terms);
    BPoly::from_terms(
        ctx,
        (0..n).map(|_| {
            let i = rng.gen_range(0..=max_deg);
            let j = rng.gen_range(0..=max_deg - i);
            ((i, j), rand_elem(ctx, rng))
        }),
    )
}

/// Random `k`-subset of a finite field.
pub fn rand_subset<R: Rng>(ctx: &FieldCtx, rng: &mut R, k: usize) -> Vec<Fe> {
    let q = ctx.order().unwrap();
    let idx = rand::seq::index::sample(rng, q as usize, k);
    idx.into_iter().map(|i| ctx.element_at(i as u64).unwrap()).collect()
}
