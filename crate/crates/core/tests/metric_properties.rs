//! Metric axioms of the sum-rank distance on random small profiles.

use proptest::prelude::*;
use sumrank::metrics::{sum_rank_distance, sum_rank_weight, BlockProfile, SumRankVector};
use sumrank::FieldCtx;

fn profile_and_words() -> impl Strategy<Value = (u64, Vec<(usize, usize)>, [Vec<u32>; 3])> {
    (prop_oneof![Just(2u64), Just(3u64)], prop::collection::vec((1usize..=3, 1usize..=3), 1..=4)).prop_flat_map(
        |(q, blocks)| {
            let len: usize = blocks.iter().map(|&(a, b)| a * b).sum();
            let word = prop::collection::vec(0..q as u32, len);
            (Just(q), Just(blocks), [word.clone(), word.clone(), word])
        },
    )
}

fn vector(ctx: &FieldCtx, profile: &BlockProfile, raw: &[u32]) -> SumRankVector {
    let flat: Vec<_> = raw.iter().map(|&v| ctx.elem(v as u64).unwrap()).collect();
    SumRankVector::from_flat(ctx, profile, &flat).unwrap()
}

proptest! {
    #[test]
    fn triangle_inequality((q, blocks, words) in profile_and_words()) {
        let ctx = FieldCtx::prime(q).unwrap();
        let profile = BlockProfile::new(blocks).unwrap();
        let [x, y, z] = words.map(|w| vector(&ctx, &profile, &w));
        let dxz = sum_rank_distance(&x, &z).unwrap();
        let dxy = sum_rank_distance(&x, &y).unwrap();
        let dyz = sum_rank_distance(&y, &z).unwrap();
        prop_assert!(dxz <= dxy + dyz);
        prop_assert_eq!(dxy, sum_rank_distance(&y, &x).unwrap());
        prop_assert_eq!(sum_rank_distance(&x, &x).unwrap(), 0);
        prop_assert_eq!(dxy, sum_rank_weight(&x.sub(&y).unwrap()));
        prop_assert!(dxy <= profile.max_weight());
    }
}
