//! Rate/distance bounds for sum-rank codes and curve sampling.
//!
//! Integer-valued bounds use exact integer arithmetic, straight-line bounds
//! use exact rationals, and the Gilbert–Varshamov-like bounds are evaluated in
//! `f64`. Library functions return raw values; clamping to `[0, 1]` is left to
//! the presentation layer.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::prime_power;
use crate::metrics::BlockProfile;

/// Default truncation of the product defining `gamma_q`.
pub const GAMMA_TOLERANCE: f64 = 1.0 / (1u64 << 60) as f64;

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn check_prime_power(q: u64) -> Result<()> {
    prime_power(q).map(|_| ()).ok_or(Error::NotPrimePower(q))
}

/// Largest `log_q |C|` allowed by the Singleton-like bound for minimum
/// sum-rank distance `d_sr`: write `d_sr = n_1 + ... + n_{j-1} + delta + 1`
/// with `0 <= delta <= n_j - 1` and return `sum_{i>=j} n_i m_i - m_j delta`.
/// The value does not depend on `q`.
pub fn singleton_like_max_dim(profile: &BlockProfile, d_sr: usize) -> Result<usize> {
    if !profile.cols_nonincreasing() {
        return Err(Error::UnsortedProfile);
    }
    let total = profile.total_rows();
    if d_sr == 0 || d_sr > total {
        return Err(Error::DistanceOutOfRange { d: d_sr, max: total });
    }
    let blocks = profile.blocks();
    let mut before = 0;
    for (j, &(n_j, m_j)) in blocks.iter().enumerate() {
        if d_sr <= before + n_j {
            let delta = d_sr - 1 - before;
            let tail: usize = blocks[j..].iter().map(|&(n, m)| n * m).sum();
            return Ok(tail - m_j * delta);
        }
        before += n_j;
    }
    unreachable!("d_sr <= total rows")
}

/// `gamma_q = prod_{i>=1} (1 - q^{-i})^{-1}`, summed in the log domain until
/// the next log-factor drops below `tolerance`.
pub fn gamma_q(q: u64, tolerance: f64) -> f64 {
    let qf = q as f64;
    let mut log_sum = 0.0;
    let mut x = 1.0 / qf;
    loop {
        let term = -(-x).ln_1p();
        if term < tolerance {
            break;
        }
        log_sum += term;
        x /= qf;
    }
    log_sum.exp()
}

fn log_q(x: f64, q: u64) -> f64 {
    x.ln() / (q as f64).ln()
}

fn check_gv_shape(q: u64, n: usize, m: usize, t: usize) -> Result<()> {
    check_prime_power(q)?;
    if n == 0 || m == 0 || t == 0 {
        return Err(Error::DomainError("n, m and t must be positive".into()));
    }
    if n > m {
        return Err(Error::DomainError(format!("need n <= m, got n={n}, m={m}")));
    }
    Ok(())
}

/// Exact GV-like rate for a distance `d` given `sum_{i=1}^{d-1} ln(1+(t-1)/i)`.
fn gv_exact_from_sum(q: u64, n: usize, m: usize, t: usize, d: usize, ln_sum: f64) -> f64 {
    let (nf, mf) = (n as f64, m as f64);
    let big_n = (n * t) as f64;
    let delta = d as f64 / big_n;
    let ratio_nm = nf / mf;
    let lq = (q as f64).ln();
    delta * delta * ratio_nm - delta * (1.0 + ratio_nm + 2.0 * nf / (big_n * mf))
        + 1.0
        + 1.0 / big_n
        + nf / (big_n * mf)
        + nf / (big_n * big_n * mf)
        - (ln_sum / lq + log_q((d - 1) as f64, q)) / (big_n * mf)
        - log_q(gamma_q(q, GAMMA_TOLERANCE), q) / (nf * mf)
}

/// Right-hand side of the finite-length GV-like bound at integer distance `d`
/// (`delta = d / N`, `N = n t`). Requires `2 < d <= N` and `n <= m`.
pub fn gv_exact_rate(q: u64, n: usize, m: usize, t: usize, d: usize) -> Result<f64> {
    check_gv_shape(q, n, m, t)?;
    if d <= 2 {
        return Err(Error::DistanceTooSmall(d));
    }
    if d > n * t {
        return Err(Error::DistanceOutOfRange { d, max: n * t });
    }
    let tm1 = (t - 1) as f64;
    let ln_sum: f64 = (1..d).map(|i| (tm1 / i as f64).ln_1p()).sum();
    Ok(gv_exact_from_sum(q, n, m, t, d, ln_sum))
}

/// `(d, rate)` for every `d` in `3..=N`, sharing the running sum.
pub fn gv_exact_series(q: u64, n: usize, m: usize, t: usize) -> Result<Vec<(usize, f64)>> {
    check_gv_shape(q, n, m, t)?;
    let tm1 = (t - 1) as f64;
    let mut ln_sum = (tm1).ln_1p() + (tm1 / 2.0).ln_1p();
    let mut out = Vec::new();
    for d in 3..=n * t {
        out.push((d, gv_exact_from_sum(q, n, m, t, d, ln_sum)));
        ln_sum += (tm1 / d as f64).ln_1p();
    }
    Ok(out)
}

/// Asymptotic GV-like rate for square `m x m` blocks as `t -> infinity`,
/// without the vanishing term.
pub fn gv_asymptotic_rate(q: u64, m: usize, delta: f64) -> Result<f64> {
    check_prime_power(q)?;
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::DomainError(format!("delta = {delta} is outside (0, 1)")));
    }
    if m == 0 {
        return Err(Error::DomainError("m must be positive".into()));
    }
    let mf = m as f64;
    Ok((delta - 1.0).powi(2)
        - delta / mf * log_q(1.0 + 1.0 / (delta * mf), q)
        - log_q(1.0 + delta * mf, q) / (mf * mf)
        - log_q(gamma_q(q, GAMMA_TOLERANCE), q) / (mf * mf))
}

/// `a R + b delta >= c` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
}

impl Line {
    /// Solves the line for `R` at the given `delta`.
    pub fn rate_at(&self, delta: &BigRational) -> BigRational {
        (&self.c - &self.b * delta) / &self.a
    }

    pub fn rate_at_f64(&self, delta: f64) -> f64 {
        let (a, b, c) = (to_f64(&self.a), to_f64(&self.b), to_f64(&self.c));
        (c - b * delta) / a
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) R + ({}) delta >= {}", self.a, self.b, self.c)
    }
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `1 - 1/(p^r - 1)`, the rate-plus-distance level reached by codes over
/// `F_{p^{2r}}` meeting the Tsfasman–Vlăduţ–Zink bound.
pub fn tvz_hamming_rhs(p: u64, r: u32) -> Result<BigRational> {
    check_prime_power(p)?;
    if r == 0 {
        return Err(Error::DomainError("r must be positive".into()));
    }
    let pr = BigInt::from(p).pow(r);
    Ok(BigRational::one() - BigRational::new(BigInt::one(), pr - BigInt::one()))
}

/// TVZ-like line for `m x m` blocks over `F_p`, `p` a square prime power:
/// `R + delta <= 1 - 2/(sqrt p - 1) + 1/(m (sqrt p - 1))`.
pub fn tvz_like_sr_line(p: u64, m: usize) -> Result<Line> {
    let s = p.isqrt();
    if s * s != p || prime_power(s).is_none() {
        return Err(Error::NotSquare(p));
    }
    if m == 0 {
        return Err(Error::DomainError("m must be positive".into()));
    }
    let sm1 = (s - 1) as i64;
    let c = BigRational::one() - ratio(2, sm1) + ratio(1, m as i64 * sm1);
    Ok(Line {
        a: BigRational::one(),
        b: BigRational::one(),
        c,
    })
}

pub fn tvz_like_sr_rate(p: u64, m: usize, delta: &BigRational) -> Result<BigRational> {
    Ok(tvz_like_sr_line(p, m)?.rate_at(delta))
}

/// The concatenation line from an inner code of block length `t`, `m x m`
/// blocks, dimension `2r` and sum-rank distance `d` over `F_p`, composed with
/// TVZ-attaining outer codes over `F_{p^{2r}}`:
/// `(m^2 t / 2r) R + (m t / d) delta >= 1 - 1/(p^r - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcatLine {
    pub p: u64,
    pub m: usize,
    pub t: usize,
    pub r: u32,
    pub d: usize,
    pub line: Line,
}

pub fn concat_line(p: u64, m: usize, t: usize, inner_dim: usize, inner_d: usize) -> Result<ConcatLine> {
    check_prime_power(p)?;
    if inner_dim == 0 || !inner_dim.is_multiple_of(2) {
        return Err(Error::OddInnerDimension(inner_dim));
    }
    if m == 0 || t == 0 || inner_d == 0 {
        return Err(Error::DomainError("m, t and d must be positive".into()));
    }
    let r = (inner_dim / 2) as u32;
    let (m, t, d) = (m as i64, t as i64, inner_d as i64);
    let line = Line {
        a: ratio(m * m * t, inner_dim as i64),
        b: ratio(m * t, d),
        c: tvz_hamming_rhs(p, r)?,
    };
    Ok(ConcatLine {
        p,
        m: m as usize,
        t: t as usize,
        r,
        d: d as usize,
        line,
    })
}

/// Rate on the concatenation line at `delta`.
pub fn concat_line_rate(
    p: u64,
    m: usize,
    t: usize,
    inner_dim: usize,
    inner_d: usize,
    delta: &BigRational,
) -> Result<BigRational> {
    Ok(concat_line(p, m, t, inner_dim, inner_d)?.line.rate_at(delta))
}

/// Parameters of a linearized Reed–Solomon code: `m x m` blocks over `F_q`,
/// block length `t <= q - 1`, distance `d`, dimension `k = m (m t - d + 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LrsParams {
    pub q: u64,
    pub m: usize,
    pub t: usize,
    pub d: usize,
    pub k: usize,
}

pub fn lrs_params(q: u64, m: usize, t: usize, d: usize) -> Result<LrsParams> {
    check_prime_power(q)?;
    if m == 0 || t == 0 {
        return Err(Error::ParamConstraintViolated("m >= 1 and t >= 1".into()));
    }
    if t as u64 > q - 1 {
        return Err(Error::ParamConstraintViolated(format!("t <= q - 1 (t = {t}, q = {q})")));
    }
    if d == 0 || d > m * t {
        return Err(Error::ParamConstraintViolated(format!("0 < d <= m t (d = {d}, m t = {})", m * t)));
    }
    Ok(LrsParams {
        q,
        m,
        t,
        d,
        k: m * (m * t - d + 1),
    })
}

/// Concatenation line with a linearized Reed–Solomon inner code of distance `d`.
pub fn lrs_line(p: u64, m: usize, t: usize, d: usize) -> Result<ConcatLine> {
    let lrs = lrs_params(p, m, t, d)?;
    if lrs.k % 2 != 0 {
        return Err(Error::ParamConstraintViolated(format!(
            "m (m t - d + 1) even (it is {})",
            lrs.k
        )));
    }
    concat_line(p, m, t, lrs.k, d)
}

/// Named inner-code choices for the concatenation line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// Sum-to-zero inner code: dimension `m^2 (t-1)`, distance 2.
    D2,
    /// Linearized Reed–Solomon inner code with `d = m t / 2`.
    LrsHalf,
    /// Linearized Reed–Solomon inner code with `d = m t`.
    LrsMax,
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "d2" => Ok(Preset::D2),
            "lrs_half" => Ok(Preset::LrsHalf),
            "lrs_max" => Ok(Preset::LrsMax),
            _ => Err(Error::Parse(format!("unknown preset {s:?} (d2, lrs_half, lrs_max)"))),
        }
    }
}

pub fn concat_preset(kind: Preset, p: u64, m: usize, t: usize) -> Result<ConcatLine> {
    let out = match kind {
        Preset::D2 => {
            if t < 2 {
                return Err(Error::ParamConstraintViolated("t >= 2".into()));
            }
            let dim = m * m * (t - 1);
            if !dim.is_multiple_of(2) {
                return Err(Error::ParamConstraintViolated(format!("m^2 (t - 1) even (it is {dim})")));
            }
            concat_line(p, m, t, dim, 2)?
        }
        Preset::LrsHalf | Preset::LrsMax => {
            if !m.is_multiple_of(2) {
                return Err(Error::ParamConstraintViolated(format!("m even (m = {m})")));
            }
            let d = if kind == Preset::LrsHalf { m * t / 2 } else { m * t };
            lrs_line(p, m, t, d)?
        }
    };
    if !out.line.c.is_positive() {
        return Err(Error::ParamConstraintViolated(format!(
            "p^r > 2 (p = {p}, r = {})",
            out.r
        )));
    }
    Ok(out)
}

/// Identity of a bound, as printed in curve output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    SingletonLike,
    GvExact,
    GvAsymptotic,
    TvzLikeSr,
    ConcatLine,
}

impl BoundId {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::SingletonLike => "singleton_like",
            BoundId::GvExact => "gv_exact",
            BoundId::GvAsymptotic => "gv_asymptotic",
            BoundId::TvzLikeSr => "tvz_like_sr",
            BoundId::ConcatLine => "concat_line",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            BoundId::SingletonLike,
            BoundId::GvExact,
            BoundId::GvAsymptotic,
            BoundId::TvzLikeSr,
            BoundId::ConcatLine,
        ]
        .into_iter()
        .find(|b| b.as_str() == s)
        .ok_or_else(|| Error::Parse(format!("unknown bound {s:?}")))
    }
}

/// A bound together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundSpec {
    /// Uniform `n x m` blocks, block length `t`; sampled at every `d = 1..=n t`.
    SingletonLike { n: usize, m: usize, t: usize },
    /// Sampled at every `d = 3..=n t`.
    GvExact { q: u64, n: usize, m: usize, t: usize },
    GvAsymptotic { q: u64, m: usize },
    TvzLikeSr { p: u64, m: usize },
    Concat(ConcatLine),
}

impl BoundSpec {
    pub fn id(&self) -> BoundId {
        match self {
            BoundSpec::SingletonLike { .. } => BoundId::SingletonLike,
            BoundSpec::GvExact { .. } => BoundId::GvExact,
            BoundSpec::GvAsymptotic { .. } => BoundId::GvAsymptotic,
            BoundSpec::TvzLikeSr { .. } => BoundId::TvzLikeSr,
            BoundSpec::Concat(_) => BoundId::ConcatLine,
        }
    }

    pub fn params(&self) -> BTreeMap<&'static str, u64> {
        let entries: Vec<(&'static str, u64)> = match self {
            BoundSpec::SingletonLike { n, m, t } => vec![("n", *n as u64), ("m", *m as u64), ("t", *t as u64)],
            BoundSpec::GvExact { q, n, m, t } => {
                vec![("q", *q), ("n", *n as u64), ("m", *m as u64), ("t", *t as u64)]
            }
            BoundSpec::GvAsymptotic { q, m } => vec![("q", *q), ("m", *m as u64)],
            BoundSpec::TvzLikeSr { p, m } => vec![("p", *p), ("m", *m as u64)],
            BoundSpec::Concat(c) => vec![
                ("p", c.p),
                ("m", c.m as u64),
                ("t", c.t as u64),
                ("r", c.r as u64),
                ("d", c.d as u64),
            ],
        };
        entries.into_iter().collect()
    }
}

/// Evenly spaced `delta` values `start, start + step, ... <= stop`, exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    start: BigRational,
    stop: BigRational,
    step: BigRational,
}

impl Grid {
    /// Points must lie in `(0, 1)`; `start > stop` gives an empty grid.
    pub fn new(start: BigRational, stop: BigRational, step: BigRational) -> Result<Self> {
        if !step.is_positive() {
            return Err(Error::InvalidGrid("step must be positive".into()));
        }
        if start <= stop && (!start.is_positive() || stop >= BigRational::one()) {
            return Err(Error::InvalidGrid("grid points must lie strictly inside (0, 1)".into()));
        }
        Ok(Grid { start, stop, step })
    }

    pub fn empty() -> Self {
        Grid {
            start: BigRational::one(),
            stop: BigRational::zero(),
            step: BigRational::one(),
        }
    }

    pub fn points(&self) -> Vec<BigRational> {
        let mut out = Vec::new();
        let mut x = self.start.clone();
        while x <= self.stop {
            out.push(x.clone());
            x += &self.step;
        }
        out
    }

    pub fn contains_range(&self, x: &BigRational) -> bool {
        &self.start <= x && x <= &self.stop
    }
}

impl Default for Grid {
    /// `0.005:0.995:0.005`.
    fn default() -> Self {
        Grid::new(ratio(1, 200), ratio(199, 200), ratio(1, 200)).expect("valid default grid")
    }
}

impl FromStr for Grid {
    type Err = Error;

    /// `start:stop:step`, each a decimal (`0.005`) or a fraction (`1/200`).
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(Error::InvalidGrid(format!("expected start:stop:step, got {s:?}")));
        };
        Grid::new(parse_rational(a)?, parse_rational(b)?, parse_rational(c)?)
    }
}

/// Parses `12`, `-0.25`, `3/8` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad number {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = BigInt::from(10u32).pow(frac.len() as u32);
    let v = BigRational::new(digits, scale);
    Ok(if neg { -v } else { v })
}

/// Sampled `(delta, R)` pairs of one bound.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundCurve {
    pub bound_id: BoundId,
    pub params: BTreeMap<&'static str, u64>,
    /// Distinguishes curves of the same bound in one output, e.g. `t=2`.
    pub tag: Option<String>,
    pub samples: Vec<(BigRational, f64)>,
}

impl BoundCurve {
    /// The value written to the `bound_id` column.
    pub fn label(&self) -> String {
        match &self.tag {
            None => self.bound_id.to_string(),
            Some(t) => format!("{}[{t}]", self.bound_id),
        }
    }
}

/// Evaluates `spec` on `grid`. Bounds defined at integer distances
/// (Singleton-like, exact GV-like) are sampled at every `d / N` inside the
/// grid's range instead of at the grid points.
pub fn sample_curve(spec: &BoundSpec, grid: &Grid) -> Result<BoundCurve> {
    let samples = match spec {
        BoundSpec::SingletonLike { n, m, t } => {
            let profile = BlockProfile::uniform(*n, *m, *t)?;
            let big_n = (n * t) as i64;
            let ambient = (n * m * t) as f64;
            let mut out = Vec::new();
            for d in 1..=n * t {
                let delta = ratio(d as i64, big_n);
                if grid.contains_range(&delta) {
                    out.push((delta, singleton_like_max_dim(&profile, d)? as f64 / ambient));
                }
            }
            out
        }
        BoundSpec::GvExact { q, n, m, t } => {
            let big_n = (n * t) as i64;
            gv_exact_series(*q, *n, *m, *t)?
                .into_iter()
                .map(|(d, r)| (ratio(d as i64, big_n), r))
                .filter(|(delta, _)| grid.contains_range(delta))
                .collect()
        }
        BoundSpec::GvAsymptotic { q, m } => grid
            .points()
            .into_iter()
            .map(|delta| {
                let r = gv_asymptotic_rate(*q, *m, to_f64(&delta))?;
                Ok((delta, r))
            })
            .collect::<Result<Vec<_>>>()?,
        BoundSpec::TvzLikeSr { p, m } => {
            let line = tvz_like_sr_line(*p, *m)?;
            line_samples(&line, grid)
        }
        BoundSpec::Concat(c) => line_samples(&c.line, grid),
    };
    Ok(BoundCurve {
        bound_id: spec.id(),
        params: spec.params(),
        tag: None,
        samples,
    })
}

fn line_samples(line: &Line, grid: &Grid) -> Vec<(BigRational, f64)> {
    grid.points()
        .into_iter()
        .map(|delta| {
            let r = to_f64(&line.rate_at(&delta));
            (delta, r)
        })
        .collect()
}

/// Formats with 12 significant digits in plain decimal notation, trailing
/// zeros removed.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (11 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// Writes `delta,rate,bound_id` rows for each curve. With `clamp`, rates are
/// clamped to `[0, 1]` for display.
pub fn write_curves_csv<W: Write>(curves: &[BoundCurve], clamp: bool, out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let io = |e: csv::Error| Error::Parse(format!("csv output failed: {e}"));
    w.write_record(["delta", "rate", "bound_id"]).map_err(io)?;
    for curve in curves {
        let label = curve.label();
        for (delta, rate) in &curve.samples {
            let r = if clamp { rate.clamp(0.0, 1.0) } else { *rate };
            w.write_record([format_sig12(to_f64(delta)), format_sig12(r), label.clone()])
                .map_err(io)?;
        }
    }
    w.flush().map_err(|e| Error::Parse(format!("csv output failed: {e}")))?;
    Ok(())
}

/// One reproducible figure: a set of curves and a note on parameter choices.
#[derive(Clone, Debug)]
pub struct Figure {
    pub number: u32,
    pub title: &'static str,
    pub explain: String,
    pub curves: Vec<(BoundSpec, Option<String>)>,
}

impl Figure {
    pub fn sample(&self, grid: &Grid) -> Result<Vec<BoundCurve>> {
        self.curves
            .iter()
            .map(|(spec, tag)| {
                let mut c = sample_curve(spec, grid)?;
                c.tag = tag.clone();
                Ok(c)
            })
            .collect()
    }
}

/// Parameter sets for the comparison figures.
///
/// 1: `d2` line over `F_2` vs GV-like; 2: `d2` line over `F_9` vs TVZ-like;
/// 3: `lrs_half` lines over `F_3` (`t = 1, 2`) vs GV-like; 4: `lrs_half` over
/// `F_16`, `4x4` blocks, `t = 8` vs TVZ-like; 5: `lrs_max` over `F_7`, `t = 2`
/// vs GV-like; 6: GV-like, TVZ-like and `lrs_max` (`t = 1, 2`) over `F_49`;
/// 7: `d2` line over `F_4` with `r = 4`; 8: `lrs_max` over `F_25`, `t = 4` vs
/// TVZ-like.
pub fn figure(number: u32) -> Result<Figure> {
    let t_tag = |t: usize| Some(format!("t={t}"));
    let fig = match number {
        1 => {
            let line = concat_preset(Preset::D2, 2, 2, 3)?;
            Figure {
                number,
                title: "d2 concatenation line vs GV-like bound, 2x2 blocks over F_2",
                explain: format!(
                    "GV-like asymptotic bound with q=2, m=2; sum-to-zero inner code with m=2, t=3 (r=4): {}",
                    line.line
                ),
                curves: vec![
                    (BoundSpec::GvAsymptotic { q: 2, m: 2 }, None),
                    (BoundSpec::Concat(line), None),
                ],
            }
        }
        2 => {
            let line = concat_preset(Preset::D2, 9, 2, 4)?;
            Figure {
                number,
                title: "d2 concatenation line vs TVZ-like bound, 2x2 blocks over F_9",
                explain: format!(
                    "TVZ-like bound with p=9, m=2; sum-to-zero inner code with m=2, t=4 so that r=6: {}",
                    line.line
                ),
                curves: vec![
                    (BoundSpec::TvzLikeSr { p: 9, m: 2 }, None),
                    (BoundSpec::Concat(line), None),
                ],
            }
        }
        3 => {
            let l1 = concat_preset(Preset::LrsHalf, 3, 2, 1)?;
            let l2 = concat_preset(Preset::LrsHalf, 3, 2, 2)?;
            Figure {
                number,
                title: "linearized RS (d = mt/2) lines vs GV-like bound, 2x2 blocks over F_3",
                explain: format!(
                    "GV-like asymptotic bound with q=3, m=2; lrs_half lines with p=3, m=2 at t=1 ({}) and t=2 ({})",
                    l1.line, l2.line
                ),
                curves: vec![
                    (BoundSpec::GvAsymptotic { q: 3, m: 2 }, None),
                    (BoundSpec::Concat(l1), t_tag(1)),
                    (BoundSpec::Concat(l2), t_tag(2)),
                ],
            }
        }
        4 => {
            let line = concat_preset(Preset::LrsHalf, 16, 4, 8)?;
            Figure {
                number,
                title: "linearized RS (d = mt/2) line vs TVZ-like bound, 4x4 blocks over F_16",
                explain: format!(
                    "TVZ-like bound with p=16, m=4; lrs_half line with p=16, m=4, t=8 (r=34): {}",
                    line.line
                ),
                curves: vec![
                    (BoundSpec::TvzLikeSr { p: 16, m: 4 }, None),
                    (BoundSpec::Concat(line), None),
                ],
            }
        }
        5 => {
            let line = concat_preset(Preset::LrsMax, 7, 2, 2)?;
            Figure {
                number,
                title: "linearized RS (d = mt) line vs GV-like bound, 2x2 blocks over F_7",
                explain: format!(
                    "GV-like asymptotic bound with q=7, m=2; lrs_max line with p=7, m=2, t=2 (r=1): {}",
                    line.line
                ),
                curves: vec![
                    (BoundSpec::GvAsymptotic { q: 7, m: 2 }, None),
                    (BoundSpec::Concat(line), None),
                ],
            }
        }
        6 => {
            let l1 = concat_preset(Preset::LrsMax, 49, 2, 1)?;
            let l2 = concat_preset(Preset::LrsMax, 49, 2, 2)?;
            Figure {
                number,
                title: "GV-like, TVZ-like and linearized RS (d = mt) lines, 2x2 blocks over F_49",
                explain: format!(
                    "GV-like asymptotic bound with q=49, m=2; TVZ-like bound with p=49, m=2; lrs_max lines with p=49, m=2 at t=1 ({}) and t=2 ({})",
                    l1.line, l2.line
                ),
                curves: vec![
                    (BoundSpec::GvAsymptotic { q: 49, m: 2 }, None),
                    (BoundSpec::TvzLikeSr { p: 49, m: 2 }, None),
                    (BoundSpec::Concat(l1), t_tag(1)),
                    (BoundSpec::Concat(l2), t_tag(2)),
                ],
            }
        }
        7 => {
            let line = concat_preset(Preset::D2, 4, 2, 3)?;
            Figure {
                number,
                title: "d2 concatenation line, 2x2 blocks over F_4",
                explain: format!(
                    "sum-to-zero inner code with p=4, m=2, t=3 (r=4): {}; the TVZ-like bound gives no positive rate over F_4",
                    line.line
                ),
                curves: vec![(BoundSpec::Concat(line), None)],
            }
        }
        8 => {
            let line = concat_preset(Preset::LrsMax, 25, 2, 4)?;
            Figure {
                number,
                title: "linearized RS (d = mt) line vs TVZ-like bound, 2x2 blocks over F_25",
                explain: format!(
                    "TVZ-like bound with p=25, m=2; lrs_max line with p=25, m=2, t=4 (r=1): {}",
                    line.line
                ),
                curves: vec![
                    (BoundSpec::TvzLikeSr { p: 25, m: 2 }, None),
                    (BoundSpec::Concat(line), None),
                ],
            }
        }
        n => return Err(Error::Parse(format!("no figure preset {n} (1..=8)"))),
    };
    Ok(fig)
}
