//! Dense matrices over a [`FieldCtx`].
//!
//! Storage is row-major. `0 x n` and `n x 0` matrices are legal and have rank 0.
//! Elimination pivots on the first nonzero entry of each column, scanning rows
//! top to bottom.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{split_top_level, FieldCtx, FieldElem};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    ctx: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Mat {
    pub fn new(ctx: &FieldCtx, rows: usize, cols: usize, data: Vec<FieldElem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|e| e.index() >= ctx.order()) {
            return Err(Error::InvalidElement {
                index: bad.index() as u64,
                order: ctx.order(),
            });
        }
        Ok(Mat {
            ctx: ctx.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(ctx: &FieldCtx, rows: usize, cols: usize) -> Self {
        Mat {
            ctx: ctx.clone(),
            rows,
            cols,
            data: vec![FieldElem::ZERO; rows * cols],
        }
    }

    pub fn identity(ctx: &FieldCtx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.data[i * n + i] = FieldElem::ONE;
        }
        m
    }

    /// Builds a matrix from rows of equal length; `cols` is needed when there are no rows.
    pub fn from_rows(ctx: &FieldCtx, cols: usize, rows: &[Vec<FieldElem>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Self::new(ctx, rows.len(), cols, data)
    }

    #[inline]
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn data(&self) -> &[FieldElem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElem {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(&self.ctx, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut scratch = self.data.clone();
        rank_in_place(&self.ctx, &mut scratch, self.rows, self.cols)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut out = self.clone();
        let pivots = rref_in_place(&self.ctx, &mut out.data, self.rows, self.cols);
        (out, pivots)
    }

    /// Nonzero rows of the RREF: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let k = pivots.len();
        Mat {
            ctx: self.ctx.clone(),
            rows: k,
            cols: self.cols,
            data: r.data[..k * self.cols].to_vec(),
        }
    }

    /// Rows form a basis of `{ v : A v^T = 0 }`.
    pub fn kernel(&self) -> Mat {
        let ctx = &self.ctx;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(ctx, free.len(), self.cols);
        for (i, &f) in free.iter().enumerate() {
            out.set(i, f, FieldElem::ONE);
            for (pr, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, ctx.neg(r.get(pr, f)));
            }
        }
        out
    }

    fn check_same(&self, other: &Mat) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.check_same(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.ctx.add(a, b))
            .collect();
        Ok(Mat { data, ..self.clone() })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.check_same(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.ctx.sub(a, b))
            .collect();
        Ok(Mat { data, ..self.clone() })
    }

    pub fn scalar_mul(&self, s: FieldElem) -> Mat {
        let data = self.data.iter().map(|&a| self.ctx.mul(s, a)).collect();
        Mat { data, ..self.clone() }
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.ctx != other.ctx {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ctx = &self.ctx;
        let mut out = Mat::zeros(ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = ctx.add(out.data[idx], ctx.mul(a, other.get(l, j)));
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `v * self`.
    pub fn vec_mul(&self, v: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if v.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let ctx = &self.ctx;
        let mut out = vec![FieldElem::ZERO; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            axpy(ctx, &mut out, a, self.row(i));
        }
        Ok(out)
    }

    /// Parses rows separated by `;` and entries by `,`, entries in the field's
    /// element syntax (extension elements parenthesized).
    pub fn parse(ctx: &FieldCtx, text: &str) -> Result<Mat> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Mat::zeros(ctx, 0, 0));
        }
        let rows = split_top_level(text, ';')?
            .into_iter()
            .map(|row| {
                split_top_level(row, ',')?
                    .into_iter()
                    .map(|e| ctx.parse_elem(e))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let cols = rows[0].len();
        Mat::from_rows(ctx, cols, &rows)
    }

    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|&e| self.ctx.format_nested(e))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat<{}>[{}x{}: {}]", self.ctx, self.rows, self.cols, self.to_text())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `acc += a * x`, entrywise.
#[inline]
pub fn axpy(ctx: &FieldCtx, acc: &mut [FieldElem], a: FieldElem, x: &[FieldElem]) {
    if a == FieldElem::ONE {
        for (o, &b) in acc.iter_mut().zip(x) {
            *o = ctx.add(*o, b);
        }
    } else {
        for (o, &b) in acc.iter_mut().zip(x) {
            *o = ctx.add(*o, ctx.mul(a, b));
        }
    }
}

/// Rank of a row-major `rows x cols` buffer; the buffer is clobbered.
pub fn rank_in_place(ctx: &FieldCtx, m: &mut [FieldElem], rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in c..cols {
                m.swap(p * cols + j, rank * cols + j);
            }
        }
        let inv = ctx.inv(m[rank * cols + c]).expect("pivot is nonzero");
        for r in rank + 1..rows {
            let lead = m[r * cols + c];
            if lead.is_zero() {
                continue;
            }
            let factor = ctx.neg(ctx.mul(lead, inv));
            for j in c..cols {
                let v = m[rank * cols + j];
                m[r * cols + j] = ctx.add(m[r * cols + j], ctx.mul(factor, v));
            }
        }
        rank += 1;
    }
    rank
}

fn rref_in_place(ctx: &FieldCtx, m: &mut [FieldElem], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r0 = 0;
    for c in 0..cols {
        if r0 == rows {
            break;
        }
        let Some(p) = (r0..rows).find(|&r| !m[r * cols + c].is_zero()) else {
            continue;
        };
        if p != r0 {
            for j in 0..cols {
                m.swap(p * cols + j, r0 * cols + j);
            }
        }
        let inv = ctx.inv(m[r0 * cols + c]).expect("pivot is nonzero");
        for j in 0..cols {
            m[r0 * cols + j] = ctx.mul(inv, m[r0 * cols + j]);
        }
        for r in 0..rows {
            if r == r0 {
                continue;
            }
            let lead = m[r * cols + c];
            if lead.is_zero() {
                continue;
            }
            let factor = ctx.neg(lead);
            for j in 0..cols {
                let v = m[r0 * cols + j];
                m[r * cols + j] = ctx.add(m[r * cols + j], ctx.mul(factor, v));
            }
        }
        pivots.push(c);
        r0 += 1;
    }
    pivots
}
