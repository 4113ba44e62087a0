//! Linear codes with explicit generator matrices: Reed–Solomon outer codes,
//! Gabidulin inner codes, the sum-to-zero code, and concatenation of a
//! Hamming-metric outer code with a sum-rank inner code.
//!
//! Sum-rank codewords are flat vectors over the base field laid out block by
//! block, each block row-major.

pub mod descriptor;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::matrix::Mat;
use crate::metrics::{flat_sum_rank_weight, hamming_weight, BlockProfile, LinearCode, SumRankVector};

pub use descriptor::{AnyCode, CodeDescriptor};

/// A linear code in the Hamming metric over `gen.ctx()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HammingLinearCode {
    gen: Mat,
    d_design: Option<usize>,
}

impl HammingLinearCode {
    /// Wraps a generator matrix, which must have full row rank.
    pub fn new(gen: Mat, d_design: Option<usize>) -> Result<Self> {
        check_full_rank(&gen)?;
        Ok(HammingLinearCode { gen, d_design })
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.gen.ctx()
    }

    /// Length.
    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    /// Dimension.
    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn gen(&self) -> &Mat {
        &self.gen
    }

    pub fn d_design(&self) -> Option<usize> {
        self.d_design
    }

    pub fn encode(&self, msg: &[FieldElem]) -> Result<Vec<FieldElem>> {
        self.gen.vec_mul(msg)
    }
}

impl LinearCode for HammingLinearCode {
    fn field(&self) -> &FieldCtx {
        self.gen.ctx()
    }

    fn generator(&self) -> &Mat {
        &self.gen
    }

    fn codeword_weight(&self, word: &[FieldElem], _scratch: &mut Vec<FieldElem>) -> usize {
        hamming_weight(word)
    }
}

/// A linear sum-rank code over `gen.ctx()` with a given block profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumRankLinearCode {
    profile: BlockProfile,
    gen: Mat,
    d_design: Option<usize>,
}

impl SumRankLinearCode {
    /// `gen` must have `profile.ambient_dim()` columns and full row rank.
    pub fn new(profile: BlockProfile, gen: Mat, d_design: Option<usize>) -> Result<Self> {
        if gen.cols() != profile.ambient_dim() {
            return Err(Error::ShapeMismatch(format!(
                "generator has {} columns, profile needs {}",
                gen.cols(),
                profile.ambient_dim()
            )));
        }
        check_full_rank(&gen)?;
        Ok(SumRankLinearCode {
            profile,
            gen,
            d_design,
        })
    }

    pub fn base(&self) -> &FieldCtx {
        self.gen.ctx()
    }

    pub fn profile(&self) -> &BlockProfile {
        &self.profile
    }

    /// Dimension over the base field.
    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn gen(&self) -> &Mat {
        &self.gen
    }

    pub fn d_design(&self) -> Option<usize> {
        self.d_design
    }

    pub fn encode(&self, msg: &[FieldElem]) -> Result<Vec<FieldElem>> {
        self.gen.vec_mul(msg)
    }

    pub fn encode_vector(&self, msg: &[FieldElem]) -> Result<SumRankVector> {
        let flat = self.encode(msg)?;
        SumRankVector::from_flat(self.base(), &self.profile, &flat)
    }

    /// Same code with its generator replaced by the RREF row-space basis.
    pub fn canonicalized(&self) -> SumRankLinearCode {
        SumRankLinearCode {
            gen: self.gen.row_space_basis(),
            ..self.clone()
        }
    }
}

impl LinearCode for SumRankLinearCode {
    fn field(&self) -> &FieldCtx {
        self.gen.ctx()
    }

    fn generator(&self) -> &Mat {
        &self.gen
    }

    fn codeword_weight(&self, word: &[FieldElem], scratch: &mut Vec<FieldElem>) -> usize {
        flat_sum_rank_weight(self.gen.ctx(), &self.profile, word, scratch)
    }
}

fn check_full_rank(gen: &Mat) -> Result<()> {
    let rank = gen.rank();
    if rank != gen.rows() {
        return Err(Error::RankDeficient {
            rank,
            expected: gen.rows(),
        });
    }
    Ok(())
}

/// `[n, k, n-k+1]` Reed–Solomon code: polynomials of degree `< k` evaluated
/// at the first `n` field elements in canonical order (zero included).
pub fn reed_solomon(ctx: &FieldCtx, n: usize, k: usize) -> Result<HammingLinearCode> {
    if n > ctx.order() as usize {
        return Err(Error::LengthExceedsField {
            n,
            order: ctx.order(),
        });
    }
    if k == 0 || k > n {
        return Err(Error::DegreeOutOfRange(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let points: Vec<FieldElem> = ctx.elements().take(n).collect();
    let mut gen = Mat::zeros(ctx, k, n);
    for (j, &a) in points.iter().enumerate() {
        let mut power = FieldElem::ONE;
        for i in 0..k {
            gen.set(i, j, power);
            power = ctx.mul(power, a);
        }
    }
    HammingLinearCode::new(gen, Some(n - k + 1))
}

/// The polynomial basis `{1, x, ..., x^{s-1}}` of `big` over its tower level `sub`.
fn polynomial_basis(big: &FieldCtx, sub: &FieldCtx) -> Result<Vec<FieldElem>> {
    let deg = big
        .degree_over(sub)
        .ok_or(Error::NotSubfield(sub.order() as u64))?;
    (0..deg)
        .map(|j| {
            let mut unit = vec![FieldElem::ZERO; deg];
            unit[j] = FieldElem::ONE;
            big.from_coords_over(&unit, sub)
        })
        .collect()
}

/// Gabidulin code in `F_q^{(n,n)}`: the maps `v -> sum_{i<=deg} a_i v^{q^i}`
/// on `F_{q^n}`, written as matrices in the polynomial basis (column `j` holds
/// the image of the `j`-th basis element). Dimension `n (deg+1)`, rank
/// distance `n - deg`.
pub fn gabidulin(q_ctx: &FieldCtx, n: usize, deg: usize) -> Result<SumRankLinearCode> {
    if n == 0 || deg >= n {
        return Err(Error::DegreeOutOfRange(format!("need 0 <= deg <= n-1, got deg={deg}, n={n}")));
    }
    let big = FieldCtx::extension(q_ctx, n)?;
    let q = q_ctx.order() as u64;
    let basis = polynomial_basis(&big, q_ctx)?;
    let mut rows = Vec::with_capacity(n * (deg + 1));
    for i in 0..=deg {
        let twisted = basis
            .iter()
            .map(|&b| big.frobenius_power(b, i as u64, q))
            .collect::<Result<Vec<_>>>()?;
        for &a in &basis {
            let mut word = vec![FieldElem::ZERO; n * n];
            for (col, &tb) in twisted.iter().enumerate() {
                let image = big.coords_over(big.mul(a, tb), q_ctx)?;
                for (row, v) in image.into_iter().enumerate() {
                    word[row * n + col] = v;
                }
            }
            rows.push(word);
        }
    }
    let gen = Mat::from_rows(q_ctx, n * n, &rows)?;
    SumRankLinearCode::new(BlockProfile::uniform(n, n, 1)?, gen, Some(n - deg))
}

/// `{ (X_1, ..., X_t) : X_1 + ... + X_t = 0 }` with `m x m` blocks.
/// Dimension `m^2 (t-1)`, sum-rank distance 2.
pub fn sum_zero_code(q_ctx: &FieldCtx, m: usize, t: usize) -> Result<SumRankLinearCode> {
    if t < 2 {
        return Err(Error::BlockLengthTooSmall(t));
    }
    if m == 0 {
        return Err(Error::DegreeOutOfRange("matrix size must be positive".into()));
    }
    let block = m * m;
    let minus_one = q_ctx.neg(FieldElem::ONE);
    let mut rows = Vec::with_capacity(block * (t - 1));
    for i in 0..t - 1 {
        for pos in 0..block {
            let mut word = vec![FieldElem::ZERO; block * t];
            word[i * block + pos] = FieldElem::ONE;
            word[(t - 1) * block + pos] = minus_one;
            rows.push(word);
        }
    }
    let gen = Mat::from_rows(q_ctx, block * t, &rows)?;
    SumRankLinearCode::new(BlockProfile::uniform(m, m, t)?, gen, Some(2))
}

/// Concatenates an outer code over `F_{q^{k2}}` with an inner sum-rank code of
/// dimension `k2` over `F_q`: each outer symbol `c` becomes `pi(c) * G_inner`,
/// where `pi` is the polynomial-basis coordinate map.
///
/// Generator rows are indexed by (message position `i`, basis element `l`)
/// with `l` varying fastest, so the message is the flattened `pi`-image of the
/// outer message.
pub fn concatenate(outer: &HammingLinearCode, inner: &SumRankLinearCode) -> Result<SumRankLinearCode> {
    let big = outer.ctx();
    let sub = inner.base();
    let k2 = inner.k();
    let ext_deg = big.degree_over(sub).ok_or(Error::FieldMismatch)?;
    if ext_deg != k2 {
        return Err(Error::DimensionMismatch(format!(
            "outer alphabet has degree {ext_deg} over the inner base field, inner dimension is {k2}"
        )));
    }
    let basis = polynomial_basis(big, sub)?;
    let inner_len = inner.profile().ambient_dim();
    let mut rows = Vec::with_capacity(outer.k() * k2);
    for i in 0..outer.k() {
        let g_row = outer.gen().row(i);
        for &b in &basis {
            let mut word = Vec::with_capacity(outer.n() * inner_len);
            for &c in g_row {
                let coords = big.coords_over(big.mul(b, c), sub)?;
                word.extend(inner.encode(&coords)?);
            }
            rows.push(word);
        }
    }
    let profile = inner.profile().repeat(outer.n())?;
    let gen = Mat::from_rows(sub, profile.ambient_dim(), &rows)?;
    let d_design = outer.d_design().zip(inner.d_design()).map(|(a, b)| a * b);
    SumRankLinearCode::new(profile, gen, d_design)
}

/// Reed–Solomon `[n, n-d1+1, d1]` over `F_{q^{k2}}` concatenated with the
/// Gabidulin code in `F_q^{(m,m)}` of rank distance `d`, where
/// `k2 = m (m-d+1)`. Sum-rank distance at least `d1 d`, dimension
/// `(n-d1+1) k2`.
pub fn explicit_family(
    q_ctx: &FieldCtx,
    n: usize,
    m: usize,
    d: usize,
    d1: usize,
) -> Result<SumRankLinearCode> {
    if d == 0 || d > m {
        return Err(Error::DegreeOutOfRange(format!("need 0 < d <= m, got d={d}, m={m}")));
    }
    if d1 == 0 || d1 > n {
        return Err(Error::DegreeOutOfRange(format!("need 1 <= d1 <= n, got d1={d1}, n={n}")));
    }
    let k2 = m * (m - d + 1);
    let big = FieldCtx::extension(q_ctx, k2)?;
    let outer = reed_solomon(&big, n, n - d1 + 1)?;
    let inner = gabidulin(q_ctx, m, m - d)?;
    concatenate(&outer, &inner)
}
