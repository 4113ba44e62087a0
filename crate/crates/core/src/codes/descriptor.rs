//! Text descriptors for constructible codes:
//! `rs:q^s:n:k`, `gab:q:n:deg`, `sumzero:q:m:t`, `concat:<outer>:<inner>`,
//! `explicit:q:n:m:d:d1`.

use std::fmt;
use std::str::FromStr;

use super::{
    concatenate, explicit_family, gabidulin, reed_solomon, sum_zero_code, HammingLinearCode,
    SumRankLinearCode,
};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::matrix::Mat;
use crate::metrics::{BlockProfile, LinearCode};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeDescriptor {
    ReedSolomon { field: FieldCtx, n: usize, k: usize },
    Gabidulin { q: FieldCtx, n: usize, deg: usize },
    SumZero { q: FieldCtx, m: usize, t: usize },
    Concat { outer: Box<CodeDescriptor>, inner: Box<CodeDescriptor> },
    Explicit { q: FieldCtx, n: usize, m: usize, d: usize, d1: usize },
}

/// A built code of either metric.
#[derive(Clone, Debug)]
pub enum AnyCode {
    Hamming(HammingLinearCode),
    SumRank(SumRankLinearCode),
}

impl AnyCode {
    pub fn d_design(&self) -> Option<usize> {
        match self {
            AnyCode::Hamming(c) => c.d_design(),
            AnyCode::SumRank(c) => c.d_design(),
        }
    }

    /// Block profile; a Hamming code of length `n` reads as `n` blocks of `1x1`.
    pub fn profile(&self) -> BlockProfile {
        match self {
            AnyCode::Hamming(c) => {
                BlockProfile::uniform(1, 1, c.n()).expect("codes have positive length")
            }
            AnyCode::SumRank(c) => c.profile().clone(),
        }
    }

    pub fn is_sum_rank(&self) -> bool {
        matches!(self, AnyCode::SumRank(_))
    }

    /// Encodes and splits into blocks; Hamming codewords come back as one `1 x n` row.
    pub fn encode_blocks(&self, msg: &[FieldElem]) -> Result<Vec<Mat>> {
        match self {
            AnyCode::Hamming(c) => {
                let word = c.encode(msg)?;
                Ok(vec![Mat::new(c.ctx(), 1, word.len(), word)?])
            }
            AnyCode::SumRank(c) => Ok(c.encode_vector(msg)?.blocks().to_vec()),
        }
    }
}

impl LinearCode for AnyCode {
    fn field(&self) -> &FieldCtx {
        match self {
            AnyCode::Hamming(c) => c.field(),
            AnyCode::SumRank(c) => c.field(),
        }
    }

    fn generator(&self) -> &Mat {
        match self {
            AnyCode::Hamming(c) => c.generator(),
            AnyCode::SumRank(c) => c.generator(),
        }
    }

    fn codeword_weight(&self, word: &[FieldElem], scratch: &mut Vec<FieldElem>) -> usize {
        match self {
            AnyCode::Hamming(c) => c.codeword_weight(word, scratch),
            AnyCode::SumRank(c) => c.codeword_weight(word, scratch),
        }
    }
}

impl CodeDescriptor {
    pub fn build(&self) -> Result<AnyCode> {
        Ok(match self {
            CodeDescriptor::ReedSolomon { field, n, k } => AnyCode::Hamming(reed_solomon(field, *n, *k)?),
            CodeDescriptor::Gabidulin { q, n, deg } => AnyCode::SumRank(gabidulin(q, *n, *deg)?),
            CodeDescriptor::SumZero { q, m, t } => AnyCode::SumRank(sum_zero_code(q, *m, *t)?),
            CodeDescriptor::Explicit { q, n, m, d, d1 } => {
                AnyCode::SumRank(explicit_family(q, *n, *m, *d, *d1)?)
            }
            CodeDescriptor::Concat { outer, inner } => {
                let AnyCode::Hamming(outer) = outer.build()? else {
                    return Err(Error::Parse("concat outer code must be a Hamming-metric code".into()));
                };
                let AnyCode::SumRank(inner) = inner.build()? else {
                    return Err(Error::Parse("concat inner code must be a sum-rank code".into()));
                };
                AnyCode::SumRank(concatenate(&outer, &inner)?)
            }
        })
    }

    fn parse_tokens<'a>(tokens: &mut impl Iterator<Item = &'a str>) -> Result<Self> {
        let kind = tokens
            .next()
            .ok_or_else(|| Error::Parse("empty code descriptor".into()))?;
        match kind {
            "rs" => {
                let field = next_field(tokens, kind)?;
                let [n, k] = numbers(tokens, kind)?;
                Ok(CodeDescriptor::ReedSolomon { field, n, k })
            }
            "gab" => {
                let q = next_field(tokens, kind)?;
                let [n, deg] = numbers(tokens, kind)?;
                Ok(CodeDescriptor::Gabidulin { q, n, deg })
            }
            "sumzero" => {
                let q = next_field(tokens, kind)?;
                let [m, t] = numbers(tokens, kind)?;
                Ok(CodeDescriptor::SumZero { q, m, t })
            }
            "explicit" => {
                let q = next_field(tokens, kind)?;
                let [n, m, d, d1] = numbers(tokens, kind)?;
                Ok(CodeDescriptor::Explicit { q, n, m, d, d1 })
            }
            "concat" => {
                let outer = Box::new(Self::parse_tokens(tokens)?);
                let inner = Box::new(Self::parse_tokens(tokens)?);
                Ok(CodeDescriptor::Concat { outer, inner })
            }
            other => Err(Error::Parse(format!("unknown code kind {other:?}"))),
        }
    }
}

fn next_field<'a>(tokens: &mut impl Iterator<Item = &'a str>, kind: &str) -> Result<FieldCtx> {
    tokens
        .next()
        .ok_or_else(|| Error::Parse(format!("{kind}: missing field")))?
        .parse()
}

fn numbers<'a, const N: usize>(tokens: &mut impl Iterator<Item = &'a str>, kind: &str) -> Result<[usize; N]> {
    let mut out = [0usize; N];
    for slot in out.iter_mut() {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("{kind}: expected {N} integer parameters")))?;
        *slot = tok
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{kind}: bad integer {tok:?}")))?;
    }
    Ok(out)
}

impl FromStr for CodeDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.trim().split(':');
        let desc = Self::parse_tokens(&mut tokens)?;
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse(format!("trailing input {extra:?} in {s:?}")));
        }
        Ok(desc)
    }
}

impl fmt::Display for CodeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeDescriptor::ReedSolomon { field, n, k } => write!(f, "rs:{}:{n}:{k}", field.descriptor()),
            CodeDescriptor::Gabidulin { q, n, deg } => write!(f, "gab:{}:{n}:{deg}", q.descriptor()),
            CodeDescriptor::SumZero { q, m, t } => write!(f, "sumzero:{}:{m}:{t}", q.descriptor()),
            CodeDescriptor::Concat { outer, inner } => write!(f, "concat:{outer}:{inner}"),
            CodeDescriptor::Explicit { q, n, m, d, d1 } => {
                write!(f, "explicit:{}:{n}:{m}:{d}:{d1}", q.descriptor())
            }
        }
    }
}
