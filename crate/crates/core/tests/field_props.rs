mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rsumset::Error;

#[test]
fn field_axioms_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for ctx in all_ctxs() {
        for _ in 0..10_000 {
            let (a, b, c) = (rand_elem(&ctx, &mut rng), rand_elem(&ctx, &mut rng), rand_elem(&ctx, &mut rng));
            assert_eq!(ctx.add(&ctx.add(&a, &b), &c), ctx.add(&a, &ctx.add(&b, &c)), "{ctx:?}");
            assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)), "{ctx:?}");
            assert_eq!(ctx.mul(&a, &b), ctx.mul(&b, &a));
            assert_eq!(ctx.mul(&a, &ctx.add(&b, &c)), ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c)));
            assert!(ctx.is_zero(&ctx.add(&a, &ctx.neg(&a))));
            if ctx.is_zero(&a) {
                assert_eq!(ctx.inv(&a), Err(Error::DivisionByZero));
            } else {
                assert_eq!(ctx.mul(&a, &ctx.inv(&a).unwrap()), ctx.one());
                assert_eq!(ctx.mul(&ctx.div(&b, &a).unwrap(), &a), b);
            }
            assert!(ctx.contains(&a));
            assert_eq!(ctx.normalize(&a), a);
            assert_eq!(ctx.normalize(&ctx.normalize(&a)), a);
        }
    }
}

#[test]
fn integer_embedding_is_a_ring_map() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for ctx in all_ctxs() {
        for _ in 0..1000 {
            use rand::Rng;
            let (x, y) = (rng.gen_range(-1000i64..1000), rng.gen_range(-1000i64..1000));
            assert_eq!(ctx.add(&ctx.from_i64(x), &ctx.from_i64(y)), ctx.from_i64(x + y));
            assert_eq!(ctx.mul(&ctx.from_i64(x), &ctx.from_i64(y)), ctx.from_i64(x * y));
        }
    }
}

#[test]
fn multiplicative_group_order() {
    for ctx in [gf(7), ext(2, 2), ext(3, 2), ext(2, 3), ext(5, 2)] {
        let q = ctx.order().unwrap();
        for a in ctx.elements().unwrap() {
            if !ctx.is_zero(&a) {
                assert_eq!(ctx.pow_u64(&a, q - 1), ctx.one());
            }
        }
    }
}
