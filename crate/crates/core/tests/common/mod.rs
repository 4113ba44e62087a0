//! Helpers shared by the integration tests: random codes over prime fields
//! and brute-force distance oracles that only use integer arithmetic mod p.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sumrank::codes::{concatenate, gabidulin, reed_solomon, sum_zero_code, SumRankLinearCode};
use sumrank::metrics::BlockProfile;
use sumrank::{FieldCtx, Mat};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rank of a row-major `rows x cols` matrix over `F_p` by Gaussian elimination.
pub fn rank_mod_p(mut a: Vec<u64>, rows: usize, cols: usize, p: u64) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        for j in 0..cols {
            a.swap(piv * cols + j, rank * cols + j);
        }
        let inv = (1..p).find(|x| x * a[rank * cols + c] % p == 1).unwrap();
        for r in 0..rows {
            if r != rank && a[r * cols + c] != 0 {
                let f = a[r * cols + c] * inv % p;
                for j in 0..cols {
                    a[r * cols + j] = (a[r * cols + j] + (p - f) * a[rank * cols + j]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of an `n x m` block as `m - log_p |ker|`, counting the kernel by brute force.
pub fn rank_by_kernel_count(block: &[u64], n: usize, m: usize, p: u64) -> usize {
    let total = p.pow(m as u32);
    let mut kernel = 0u64;
    let mut x = vec![0u64; m];
    for idx in 0..total {
        let mut v = idx;
        for xi in x.iter_mut() {
            *xi = v % p;
            v /= p;
        }
        let zero = (0..n).all(|r| (0..m).map(|c| block[r * m + c] * x[c]).sum::<u64>() % p == 0);
        kernel += u64::from(zero);
    }
    let mut log = 0;
    while kernel > 1 {
        kernel /= p;
        log += 1;
    }
    m - log
}

/// Random full-row-rank `k x n` matrix over `F_p`, row-major.
pub fn random_full_rank(p: u64, k: usize, n: usize, rng: &mut ChaCha8Rng) -> Vec<u64> {
    loop {
        let g: Vec<u64> = (0..k * n).map(|_| rng.gen_range(0..p)).collect();
        if rank_mod_p(g.clone(), k, n, p) == k {
            return g;
        }
    }
}

pub fn to_mat(ctx: &FieldCtx, rows: usize, cols: usize, g: &[u64]) -> Mat {
    let data = g.iter().map(|&v| ctx.elem(v).unwrap()).collect();
    Mat::new(ctx, rows, cols, data).unwrap()
}

pub fn from_mat(m: &Mat) -> Vec<u64> {
    m.data().iter().map(|e| e.index() as u64).collect()
}

/// Every codeword `x G` for `x` running over `F_p^k` in counting order.
pub fn codewords(g: &[u64], k: usize, n: usize, p: u64) -> Vec<Vec<u64>> {
    let total = p.pow(k as u32);
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut v = idx;
        let mut word = vec![0u64; n];
        for i in 0..k {
            let x = v % p;
            v /= p;
            for j in 0..n {
                word[j] = (word[j] + x * g[i * n + j]) % p;
            }
        }
        out.push(word);
    }
    out
}

pub fn brute_hamming_distance(g: &[u64], k: usize, n: usize, p: u64) -> usize {
    codewords(g, k, n, p)
        .iter()
        .skip(1)
        .map(|w| w.iter().filter(|&&x| x != 0).count())
        .min()
        .unwrap()
}

pub fn brute_sum_rank_weight(word: &[u64], blocks: &[(usize, usize)], p: u64) -> usize {
    let mut off = 0;
    let mut total = 0;
    for &(n, m) in blocks {
        total += rank_by_kernel_count(&word[off..off + n * m], n, m, p);
        off += n * m;
    }
    total
}

/// Minimum sum-rank distance over all pairs of distinct codewords.
pub fn brute_pairwise_sum_rank(g: &[u64], k: usize, blocks: &[(usize, usize)], p: u64) -> usize {
    let n: usize = blocks.iter().map(|&(a, b)| a * b).sum();
    let words = codewords(g, k, n, p);
    let mut best = usize::MAX;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            let diff: Vec<u64> = a.iter().zip(b).map(|(&x, &y)| (x + p - y) % p).collect();
            best = best.min(brute_sum_rank_weight(&diff, blocks, p));
        }
    }
    best
}

pub fn sum_rank_code(p: u64, blocks: &[(usize, usize)], g: &[u64], k: usize) -> SumRankLinearCode {
    let ctx = FieldCtx::prime(p).unwrap();
    let profile = BlockProfile::new(blocks.to_vec()).unwrap();
    let gen = to_mat(&ctx, k, profile.ambient_dim(), g);
    SumRankLinearCode::new(profile, gen, None).unwrap()
}

/// A concatenation in the sweep: outer RS `[n, k1]` over `F_{q^{k2}}`, inner code
/// described by `inner`.
#[derive(Clone, Copy, Debug)]
pub enum Inner {
    Gabidulin { m: usize, deg: usize },
    SumZero { m: usize, t: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct SweepCase {
    pub q: u64,
    pub inner: Inner,
    pub n: usize,
    pub k1: usize,
}

impl SweepCase {
    pub fn build(&self) -> SumRankLinearCode {
        let base = FieldCtx::prime(self.q).unwrap();
        let inner = match self.inner {
            Inner::Gabidulin { m, deg } => gabidulin(&base, m, deg).unwrap(),
            Inner::SumZero { m, t } => sum_zero_code(&base, m, t).unwrap(),
        };
        let big = FieldCtx::extension(&base, inner.k()).unwrap();
        let outer = reed_solomon(&big, self.n, self.k1).unwrap();
        concatenate(&outer, &inner).unwrap()
    }

    /// Inner dimension `k2`, the extension degree of the outer field.
    pub fn inner_dim(&self) -> usize {
        match self.inner {
            Inner::Gabidulin { m, deg } => m * (deg + 1),
            Inner::SumZero { m, t } => m * m * (t - 1),
        }
    }

    pub fn designed(&self) -> usize {
        let d2 = match self.inner {
            Inner::Gabidulin { m, deg } => m - deg,
            Inner::SumZero { .. } => 2,
        };
        (self.n - self.k1 + 1) * d2
    }
}

/// At least twenty concatenations over `F_2` and `F_3` with `m <= 2`, `n <= 7`
/// and at most `2^20` codewords each.
pub fn sweep_cases() -> Vec<SweepCase> {
    use Inner::*;
    let mut cases = Vec::new();
    let mut push = |q, inner, n, k1| cases.push(SweepCase { q, inner, n, k1 });
    // q = 2
    push(2, Gabidulin { m: 1, deg: 0 }, 2, 1);
    push(2, Gabidulin { m: 2, deg: 0 }, 3, 1);
    push(2, Gabidulin { m: 2, deg: 0 }, 3, 2);
    push(2, Gabidulin { m: 2, deg: 0 }, 4, 2);
    push(2, Gabidulin { m: 2, deg: 0 }, 4, 3);
    push(2, Gabidulin { m: 2, deg: 1 }, 3, 2);
    push(2, Gabidulin { m: 2, deg: 1 }, 5, 3);
    push(2, Gabidulin { m: 2, deg: 1 }, 7, 4);
    push(2, Gabidulin { m: 2, deg: 1 }, 7, 5);
    push(2, SumZero { m: 1, t: 2 }, 2, 1);
    push(2, SumZero { m: 1, t: 3 }, 3, 2);
    push(2, SumZero { m: 1, t: 4 }, 7, 3);
    push(2, SumZero { m: 1, t: 4 }, 6, 5);
    push(2, SumZero { m: 2, t: 2 }, 5, 2);
    push(2, SumZero { m: 2, t: 2 }, 7, 4);
    // q = 3
    push(3, Gabidulin { m: 1, deg: 0 }, 3, 2);
    push(3, Gabidulin { m: 2, deg: 0 }, 4, 2);
    push(3, Gabidulin { m: 2, deg: 0 }, 7, 4);
    push(3, Gabidulin { m: 2, deg: 1 }, 5, 2);
    push(3, Gabidulin { m: 2, deg: 1 }, 7, 3);
    push(3, SumZero { m: 1, t: 2 }, 3, 1);
    push(3, SumZero { m: 1, t: 3 }, 6, 3);
    push(3, SumZero { m: 2, t: 2 }, 4, 2);
    cases
}
