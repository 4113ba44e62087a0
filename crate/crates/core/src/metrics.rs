//! Hamming, rank and sum-rank weights, and the exhaustive minimum-distance
//! oracle for linear codes in any of those metrics.

use std::sync::atomic::{AtomicUsize, Ordering};

use log::warn;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::matrix::{axpy, rank_in_place, Mat};

/// Matrix sizes `(n_i, m_i)` of the blocks of a sum-rank space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockProfile {
    blocks: Vec<(usize, usize)>,
}

impl BlockProfile {
    pub fn new(blocks: Vec<(usize, usize)>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidProfile("no blocks".into()));
        }
        if let Some(&(n, m)) = blocks.iter().find(|&&(n, m)| n == 0 || m == 0) {
            return Err(Error::InvalidProfile(format!("empty block {n}x{m}")));
        }
        if blocks.iter().any(|&(n, m)| n > m) {
            warn!("block profile has a block with more rows than columns");
        }
        Ok(BlockProfile { blocks })
    }

    pub fn uniform(rows: usize, cols: usize, t: usize) -> Result<Self> {
        Self::new(vec![(rows, cols); t])
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// Block length.
    pub fn t(&self) -> usize {
        self.blocks.len()
    }

    /// `N = sum n_i`.
    pub fn total_rows(&self) -> usize {
        self.blocks.iter().map(|b| b.0).sum()
    }

    /// `sum n_i m_i`, the number of coordinates over the base field.
    pub fn ambient_dim(&self) -> usize {
        self.blocks.iter().map(|b| b.0 * b.1).sum()
    }

    /// Largest possible sum-rank weight.
    pub fn max_weight(&self) -> usize {
        self.blocks.iter().map(|b| b.0.min(b.1)).sum()
    }

    pub fn rows_le_cols(&self) -> bool {
        self.blocks.iter().all(|&(n, m)| n <= m)
    }

    /// `m_1 >= m_2 >= ... >= m_t`.
    pub fn cols_nonincreasing(&self) -> bool {
        self.blocks.windows(2).all(|w| w[0].1 >= w[1].1)
    }

    /// This profile concatenated `times` times.
    pub fn repeat(&self, times: usize) -> Result<Self> {
        Self::new(self.blocks.repeat(times))
    }

    /// `(offset, rows, cols)` of each block in the flat coordinate vector.
    pub fn layout(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.blocks.iter().scan(0, |off, &(n, m)| {
            let here = *off;
            *off += n * m;
            Some((here, n, m))
        })
    }

    /// Compact text form, e.g. `15x(2x2)` or `(1x2),(2x2)`.
    pub fn describe(&self) -> String {
        let first = self.blocks[0];
        if self.blocks.iter().all(|&b| b == first) {
            format!("{}x({}x{})", self.t(), first.0, first.1)
        } else {
            self.blocks
                .iter()
                .map(|(n, m)| format!("({n}x{m})"))
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

/// A tuple of matrices `(x_1, ..., x_t)` shaped by a [`BlockProfile`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumRankVector {
    profile: BlockProfile,
    blocks: Vec<Mat>,
}

impl SumRankVector {
    pub fn new(profile: BlockProfile, blocks: Vec<Mat>) -> Result<Self> {
        if blocks.len() != profile.t() {
            return Err(Error::ProfileMismatch);
        }
        let ctx = blocks[0].ctx();
        for (b, &(n, m)) in blocks.iter().zip(profile.blocks()) {
            if b.ctx() != ctx {
                return Err(Error::FieldMismatch);
            }
            if b.rows() != n || b.cols() != m {
                return Err(Error::ProfileMismatch);
            }
        }
        Ok(SumRankVector { profile, blocks })
    }

    pub fn zero(ctx: &FieldCtx, profile: &BlockProfile) -> Self {
        let blocks = profile
            .blocks()
            .iter()
            .map(|&(n, m)| Mat::zeros(ctx, n, m))
            .collect();
        SumRankVector {
            profile: profile.clone(),
            blocks,
        }
    }

    /// Splits a flat vector: block 1 row-major, then block 2 row-major, ...
    pub fn from_flat(ctx: &FieldCtx, profile: &BlockProfile, flat: &[FieldElem]) -> Result<Self> {
        if flat.len() != profile.ambient_dim() {
            return Err(Error::LengthMismatch {
                expected: profile.ambient_dim(),
                got: flat.len(),
            });
        }
        let blocks = profile
            .layout()
            .map(|(off, n, m)| Mat::new(ctx, n, m, flat[off..off + n * m].to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Ok(SumRankVector {
            profile: profile.clone(),
            blocks,
        })
    }

    pub fn flatten(&self) -> Vec<FieldElem> {
        self.blocks.iter().flat_map(|b| b.data().iter().copied()).collect()
    }

    pub fn profile(&self) -> &BlockProfile {
        &self.profile
    }

    pub fn blocks(&self) -> &[Mat] {
        &self.blocks
    }

    pub fn sub(&self, other: &SumRankVector) -> Result<SumRankVector> {
        if self.profile != other.profile {
            return Err(Error::ProfileMismatch);
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(SumRankVector {
            profile: self.profile.clone(),
            blocks,
        })
    }
}

pub fn sum_rank_weight(x: &SumRankVector) -> usize {
    x.blocks.iter().map(Mat::rank).sum()
}

pub fn sum_rank_distance(x: &SumRankVector, y: &SumRankVector) -> Result<usize> {
    Ok(sum_rank_weight(&x.sub(y)?))
}

pub fn rank_distance(a: &Mat, b: &Mat) -> Result<usize> {
    Ok(a.sub(b)?.rank())
}

pub fn hamming_weight(v: &[FieldElem]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

pub fn hamming_distance(ctx: &FieldCtx, v: &[FieldElem], w: &[FieldElem]) -> Result<usize> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch {
            expected: v.len(),
            got: w.len(),
        });
    }
    Ok(v.iter().zip(w).filter(|(&a, &b)| ctx.sub(a, b) != FieldElem::ZERO).count())
}

/// Sum-rank weight of a flat codeword, using `scratch` for elimination.
pub fn flat_sum_rank_weight(
    ctx: &FieldCtx,
    profile: &BlockProfile,
    word: &[FieldElem],
    scratch: &mut Vec<FieldElem>,
) -> usize {
    profile
        .layout()
        .map(|(off, n, m)| {
            let block = &word[off..off + n * m];
            if n * m == 1 {
                return usize::from(!block[0].is_zero());
            }
            if block.iter().all(|e| e.is_zero()) {
                return 0;
            }
            scratch.clear();
            scratch.extend_from_slice(block);
            rank_in_place(ctx, scratch, n, m)
        })
        .sum()
}

/// A linear code given by a generator matrix, measured in its own metric.
pub trait LinearCode: Sync {
    fn field(&self) -> &FieldCtx;

    fn generator(&self) -> &Mat;

    fn dimension(&self) -> usize {
        self.generator().rows()
    }

    /// Weight of a codeword in the code's metric.
    fn codeword_weight(&self, word: &[FieldElem], scratch: &mut Vec<FieldElem>) -> usize;
}

/// Settings for [`min_distance_exhaustive_with`].
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Refuse codes with more than `2^cap_bits` codewords.
    pub cap_bits: u32,
    pub threads: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap_bits: 24,
            threads: 1,
        }
    }
}

/// `log2` of the number of codewords.
pub fn enumeration_bits(code: &dyn LinearCode) -> f64 {
    code.dimension() as f64 * (code.field().order() as f64).log2()
}

/// Exact minimum distance by enumerating every nonzero codeword.
pub fn min_distance_exhaustive(code: &dyn LinearCode, cap_bits: u32) -> Result<usize> {
    min_distance_exhaustive_with(
        code,
        &OracleConfig {
            cap_bits,
            ..OracleConfig::default()
        },
    )
}

pub fn min_distance_exhaustive_with(code: &dyn LinearCode, cfg: &OracleConfig) -> Result<usize> {
    let k = code.dimension();
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let bits = enumeration_bits(code);
    if bits > cfg.cap_bits as f64 + 1e-9 || bits > 62.0 {
        return Err(Error::TooLarge {
            bits,
            cap: cfg.cap_bits,
        });
    }
    let q = code.field().order() as u64;
    let threads = cfg.threads.max(1);

    // Fix the top `fixed` message digits per chunk and Gray-walk the rest.
    let mut fixed = 0;
    while threads > 1 && fixed < k && q.pow(fixed as u32) < 8 * threads as u64 {
        fixed += 1;
    }
    let chunks = q.pow(fixed as u32);
    let best = AtomicUsize::new(usize::MAX);
    let next = AtomicUsize::new(0);

    let worker = || {
        let mut local = usize::MAX;
        loop {
            let c = next.fetch_add(1, Ordering::Relaxed) as u64;
            if c >= chunks || local == 1 {
                break;
            }
            local = local.min(walk_chunk(code, k - fixed, c));
        }
        best.fetch_min(local, Ordering::Relaxed);
    };
    if threads == 1 {
        worker();
    } else {
        std::thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(worker);
            }
        });
    }
    Ok(best.into_inner())
}

/// Minimum weight over the codewords whose high digits spell `prefix`,
/// skipping the zero message.
fn walk_chunk(code: &dyn LinearCode, free: usize, prefix: u64) -> usize {
    let ctx = code.field();
    let g = code.generator();
    let q = ctx.order() as u64;
    let mut word = vec![FieldElem::ZERO; g.cols()];
    let mut p = prefix;
    for row in free..g.rows() {
        let d = p % q;
        p /= q;
        if d != 0 {
            axpy(ctx, &mut word, FieldElem::from_index(d as u32), g.row(row));
        }
    }
    let mut scratch = Vec::new();
    let mut best = if prefix == 0 {
        usize::MAX
    } else {
        code.codeword_weight(&word, &mut scratch)
    };

    let mut digits = vec![0u64; free];
    let mut up = vec![true; free];
    let total = q.pow(free as u32);
    for step in 1..total {
        let mut j = 0;
        let mut s = step;
        while s % q == 0 {
            s /= q;
            j += 1;
        }
        let old = digits[j];
        let new = if up[j] { old + 1 } else { old - 1 };
        digits[j] = new;
        if new == 0 || new == q - 1 {
            up[j] = !up[j];
        }
        let delta = ctx.sub(FieldElem::from_index(new as u32), FieldElem::from_index(old as u32));
        axpy(ctx, &mut word, delta, g.row(j));
        best = best.min(code.codeword_weight(&word, &mut scratch));
        if best == 1 {
            break;
        }
    }
    best
}
