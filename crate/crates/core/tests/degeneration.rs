//! The sum-rank oracle against independent Hamming and rank-metric oracles.

mod common;

use common::*;
use rand::Rng;
use sumrank::codes::HammingLinearCode;
use sumrank::metrics::min_distance_exhaustive;
use sumrank::FieldCtx;

#[test]
fn one_by_one_blocks_give_hamming_distance() {
    let mut r = rng(7);
    for i in 0..50 {
        let p = if i % 2 == 0 { 2 } else { 3 };
        let k = r.gen_range(1..=if p == 2 { 8 } else { 5 });
        let n = r.gen_range(k..=k + 5);
        let g = random_full_rank(p, k, n, &mut r);
        let blocks = vec![(1, 1); n];
        let sr = sum_rank_code(p, &blocks, &g, k);
        let expected = brute_hamming_distance(&g, k, n, p);
        assert_eq!(min_distance_exhaustive(&sr, 24).unwrap(), expected, "case {i}");

        let ctx = FieldCtx::prime(p).unwrap();
        let ham = HammingLinearCode::new(to_mat(&ctx, k, n, &g), None).unwrap();
        assert_eq!(min_distance_exhaustive(&ham, 24).unwrap(), expected, "case {i}");
    }
}

#[test]
fn single_block_gives_rank_distance() {
    let mut r = rng(11);
    for i in 0..20 {
        let p = if i % 2 == 0 { 2 } else { 3 };
        let rows = r.gen_range(1..=3);
        let cols = r.gen_range(rows..=4);
        let k = r.gen_range(1..=(rows * cols).min(if p == 2 { 8 } else { 5 }));
        let g = random_full_rank(p, k, rows * cols, &mut r);
        let sr = sum_rank_code(p, &[(rows, cols)], &g, k);
        let expected = codewords(&g, k, rows * cols, p)
            .iter()
            .skip(1)
            .map(|w| rank_by_kernel_count(w, rows, cols, p))
            .min()
            .unwrap();
        assert_eq!(min_distance_exhaustive(&sr, 24).unwrap(), expected, "case {i}");
    }
}

#[test]
fn kernel_count_rank_agrees_with_elimination() {
    let mut r = rng(3);
    for _ in 0..200 {
        let p = if r.gen_bool(0.5) { 2 } else { 3 };
        let (n, m) = (r.gen_range(1..=4), r.gen_range(1..=4));
        let a: Vec<u64> = (0..n * m).map(|_| r.gen_range(0..p)).collect();
        assert_eq!(rank_by_kernel_count(&a, n, m, p), rank_mod_p(a, n, m, p));
    }
}
