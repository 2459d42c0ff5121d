mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rsumset::bounds::{classical_bound, theorem1_bound, Classical};
use rsumset::{BPoly, Error, FieldCtx};

#[test]
fn constant_polynomial_gives_cauchy_davenport() {
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    for ctx in all_ctxs() {
        for _ in 0..200 {
            let c = BPoly::constant(&ctx, rand_nonzero(&ctx, &mut rng));
            let (na, nb) = (rng.gen_range(1..=12), rng.gen_range(1..=12));
            let r = theorem1_bound(&c, na, nb).unwrap();
            let cd = classical_bound(Classical::CauchyDavenport { na, nb }, ctx.characteristic()).unwrap();
            assert_eq!(r.bound, cd);
        }
    }
}

#[test]
fn difference_polynomial_gives_erdos_heilbronn() {
    for ctx in [gf(3), gf(5), gf(7), gf(11), ext(3, 2), FieldCtx::rationals()] {
        let p = BPoly::x(&ctx).sub(&BPoly::y(&ctx)).unwrap();
        for k in 1..=12 {
            let r = theorem1_bound(&p, k, k).unwrap();
            assert_eq!(r.bound, classical_bound(Classical::ErdosHeilbronn { k }, ctx.characteristic()).unwrap());
        }
    }
}

fn ctx_strategy() -> impl Strategy<Value = FieldCtx> {
    prop::sample::select(all_ctxs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bound_monotone_in_sizes(ctx in ctx_strategy(), seed in any::<u64>(), na in 1usize..10, nb in 1usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = rand_bpoly(&ctx, &mut rng, 4, 5);
        prop_assume!(!p.is_zero());
        if let Ok(r) = theorem1_bound(&p, na, nb) {
            // The hypothesis only gets easier with larger sets.
            let ra = theorem1_bound(&p, na + 1, nb).unwrap();
            let rb = theorem1_bound(&p, na, nb + 1).unwrap();
            prop_assert!(ra.bound >= r.bound);
            prop_assert!(rb.bound >= r.bound);
            prop_assert_eq!(r.effective, r.bound.max(0) as u64);
            prop_assert!(r.n_pstar <= r.d as u64);
        }
    }

    #[test]
    fn witnesses_are_genuine(ctx in ctx_strategy(), seed in any::<u64>(), na in 1usize..8, nb in 1usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = rand_bpoly(&ctx, &mut rng, 4, 5);
        prop_assume!(!p.is_zero());
        let d = p.total_degree().finite().unwrap();
        match theorem1_bound(&p, na, nb) {
            Ok(r) => {
                prop_assert!(r.row_witness < na && !ctx.is_zero(&p.coeff(r.row_witness, d - r.row_witness)));
                prop_assert!(r.col_witness < nb && !ctx.is_zero(&p.coeff(d - r.col_witness, r.col_witness)));
                prop_assert!((0..r.row_witness).all(|i| ctx.is_zero(&p.coeff(i, d - i))));
            }
            Err(Error::HypothesisNotMet { row_missing, col_missing }) => {
                prop_assert!(row_missing || col_missing);
                if row_missing {
                    prop_assert!((0..na.min(d + 1)).all(|i| ctx.is_zero(&p.coeff(i, d - i))));
                }
                if col_missing {
                    prop_assert!((0..nb.min(d + 1)).all(|j| ctx.is_zero(&p.coeff(d - j, j))));
                }
            }
            Err(e) => prop_assert!(false, "unexpected error {e:?}"),
        }
    }
}
