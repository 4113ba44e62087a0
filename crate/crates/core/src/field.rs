//! Prime fields `F_p` and relative extension towers `F_{q^s}` over them.
//!
//! An element is a plain index into its field. For a prime field the index is
//! the residue. For an extension of degree `s` over a base of order `Q`, the
//! element with coefficient vector `(c_0, ..., c_{s-1})` in the polynomial
//! basis `{1, x, ..., x^{s-1}}` has index `c_0 + c_1 Q + ... + c_{s-1} Q^{s-1}`.
//! Index order is therefore the canonical enumeration order (last coordinate
//! most significant), and the index written in base `p` is the flattened
//! coefficient vector over the prime field.
//!
//! All arithmetic is defined through coefficient vectors reduced modulo the
//! tower's modulus polynomials. Extensions of order at most [`TABLE_ORDER_MAX`]
//! additionally carry exp/log tables generated from that same arithmetic, so
//! the fast path agrees with the reference path element for element.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest extension-field order accepted.
pub const FIELD_ORDER_MAX: u32 = 1 << 20;

/// Extensions up to this order get exp/log multiplication tables.
pub const TABLE_ORDER_MAX: u32 = 1 << 16;

/// An element of some [`FieldCtx`], stored as its canonical index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// Callers guarantee `i` is below the field order.
    #[inline]
    pub(crate) const fn from_index(i: u32) -> Self {
        FieldElem(i)
    }

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A finite field: either `F_p` or an extension of another `FieldCtx`.
///
/// Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct FieldCtx(Arc<Inner>);

struct Inner {
    kind: Kind,
    order: u32,
    characteristic: u32,
    tables: Option<LogTables>,
}

enum Kind {
    Prime,
    Extension {
        base: FieldCtx,
        degree: usize,
        /// Monic, constant term first, length `degree + 1`.
        modulus: Vec<FieldElem>,
    },
}

struct LogTables {
    /// `exp[i] = g^i` for `i < 2 (order - 1)`, so sums of two logs need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Returns `(p, e)` with `n = p^e`, or `None` if `n` is not a prime power.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2u64;
    let mut m = n;
    while p * p <= m {
        if m.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if !m.is_multiple_of(p) {
        // n itself is prime
        return Some((n, 1));
    }
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldCtx {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldCtx(Arc::new(Inner {
            kind: Kind::Prime,
            order: p as u32,
            characteristic: p as u32,
            tables: None,
        })))
    }

    /// Extension of `base` of the given degree with the canonical modulus.
    ///
    /// The canonical modulus is the first monic irreducible polynomial in
    /// lexicographic order of its coefficient tuple `(c_0, ..., c_{s-1})`,
    /// `c_0` compared first, coefficients ordered by element index.
    /// Degree 1 returns `base` itself.
    pub fn extension(base: &FieldCtx, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if degree == 1 {
            return Ok(base.clone());
        }
        check_order(base.order(), degree)?;
        let modulus = canonical_modulus(base, degree);
        Self::assemble(base.clone(), modulus)
    }

    /// Extension of `base` by an explicit monic irreducible modulus
    /// (coefficients constant term first).
    pub fn with_modulus(base: &FieldCtx, modulus: Vec<FieldElem>) -> Result<Self> {
        if modulus.len() < 2 || modulus.last() != Some(&FieldElem::ONE) {
            return Err(Error::InvalidModulus);
        }
        for c in &modulus {
            base.check(*c)?;
        }
        let degree = modulus.len() - 1;
        check_order(base.order(), degree)?;
        if !is_irreducible(base, &modulus) {
            return Err(Error::InvalidModulus);
        }
        Self::assemble(base.clone(), modulus)
    }

    fn assemble(base: FieldCtx, modulus: Vec<FieldElem>) -> Result<Self> {
        let degree = modulus.len() - 1;
        let order = base.order().pow(degree as u32);
        let characteristic = base.characteristic();
        let plain = FieldCtx(Arc::new(Inner {
            kind: Kind::Extension { base, degree, modulus },
            order,
            characteristic,
            tables: None,
        }));
        if order > TABLE_ORDER_MAX {
            return Ok(plain);
        }
        let tables = plain.build_tables();
        let Inner { kind, .. } = Arc::try_unwrap(plain.0).unwrap_or_else(|_| unreachable!());
        Ok(FieldCtx(Arc::new(Inner {
            kind,
            order,
            characteristic,
            tables: Some(tables),
        })))
    }

    fn build_tables(&self) -> LogTables {
        let order = self.order();
        let group = (order - 1) as u64;
        let factors = prime_factors(group);
        let generator = (1..order)
            .map(FieldElem)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&l| self.pow_reference(g, group / l) != FieldElem::ONE)
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(2 * group as usize);
        let mut log = vec![0u32; order as usize];
        let mut acc = FieldElem::ONE;
        for i in 0..group as u32 {
            exp.push(acc.0);
            log[acc.0 as usize] = i;
            acc = self.mul_reference(acc, generator);
        }
        exp.extend_from_within(..);
        LogTables { exp, log }
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.0.order
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.characteristic
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self.0.kind, Kind::Prime)
    }

    /// Degree over the immediate base (1 for a prime field).
    pub fn degree(&self) -> usize {
        match &self.0.kind {
            Kind::Prime => 1,
            Kind::Extension { degree, .. } => *degree,
        }
    }

    pub fn base(&self) -> Option<&FieldCtx> {
        match &self.0.kind {
            Kind::Prime => None,
            Kind::Extension { base, .. } => Some(base),
        }
    }

    /// Modulus polynomial over the immediate base, constant term first.
    pub fn modulus(&self) -> Option<&[FieldElem]> {
        match &self.0.kind {
            Kind::Prime => None,
            Kind::Extension { modulus, .. } => Some(modulus),
        }
    }

    /// This field followed by each base down to the prime field.
    pub fn tower(&self) -> Vec<FieldCtx> {
        let mut out = vec![self.clone()];
        while let Some(b) = out.last().and_then(|f| f.base()).cloned() {
            out.push(b);
        }
        out
    }

    /// Tower level of the given order, if there is one.
    pub fn subfield_of_order(&self, q: u64) -> Option<FieldCtx> {
        self.tower().into_iter().find(|f| f.order() as u64 == q)
    }

    /// Degree of this field over `sub`, if `sub` is a level of its tower.
    pub fn degree_over(&self, sub: &FieldCtx) -> Option<usize> {
        let mut deg = 1;
        for level in self.tower() {
            if &level == sub {
                return Some(deg);
            }
            deg *= level.degree();
        }
        None
    }

    /// Tower descriptor in `p^s1^s2` notation.
    pub fn descriptor(&self) -> String {
        match &self.0.kind {
            Kind::Prime => self.order().to_string(),
            Kind::Extension { base, degree, .. } => format!("{}^{}", base.descriptor(), degree),
        }
    }

    #[inline]
    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    #[inline]
    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    pub fn elem(&self, index: u64) -> Result<FieldElem> {
        if index < self.order() as u64 {
            Ok(FieldElem(index as u32))
        } else {
            Err(Error::InvalidElement {
                index,
                order: self.order(),
            })
        }
    }

    fn check(&self, e: FieldElem) -> Result<()> {
        self.elem(e.0 as u64).map(|_| ())
    }

    /// All elements in canonical order, starting at zero.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + Clone {
        (0..self.order()).map(FieldElem)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.0.characteristic;
        if p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        if self.is_prime_field() {
            return FieldElem(((a.0 as u64 + b.0 as u64) % p as u64) as u32);
        }
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        FieldElem(out)
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let p = self.0.characteristic;
        if p == 2 || a.0 == 0 {
            return a;
        }
        if self.is_prime_field() {
            return FieldElem(p - a.0);
        }
        let mut x = a.0;
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        FieldElem(out)
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        match (&self.0.kind, &self.0.tables) {
            (Kind::Prime, _) => {
                FieldElem(((a.0 as u64 * b.0 as u64) % self.0.order as u64) as u32)
            }
            (_, Some(t)) => {
                let s = t.log[a.0 as usize] + t.log[b.0 as usize];
                FieldElem(t.exp[s as usize])
            }
            _ => self.mul_reference(a, b),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        if a.0 == 0 {
            return None;
        }
        let group = self.order() - 1;
        if let Some(t) = &self.0.tables {
            let l = t.log[a.0 as usize];
            return Some(FieldElem(t.exp[((group - l) % group) as usize]));
        }
        Some(self.pow(a, group as u64 - 1))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        self.inv(b)
            .map(|bi| self.mul(a, bi))
            .ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn pow_reference(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_reference(acc, base);
            }
            base = self.mul_reference(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplication through coefficient vectors and modular reduction.
    fn mul_reference(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let (base, degree, modulus) = match &self.0.kind {
            Kind::Prime => {
                return FieldElem(((a.0 as u64 * b.0 as u64) % self.0.order as u64) as u32)
            }
            Kind::Extension {
                base,
                degree,
                modulus,
            } => (base, *degree, modulus),
        };
        let ca = self.digits(a);
        let cb = self.digits(b);
        let mut prod = vec![FieldElem::ZERO; 2 * degree - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = base.add(prod[i + j], base.mul(x, y));
            }
        }
        poly_reduce(base, &mut prod, modulus);
        prod.truncate(degree);
        self.compose(&prod)
    }

    fn digits(&self, e: FieldElem) -> Vec<FieldElem> {
        let q = self.base().map_or(self.order(), |b| b.order());
        let mut x = e.0;
        (0..self.degree())
            .map(|_| {
                let d = x % q;
                x /= q;
                FieldElem(d)
            })
            .collect()
    }

    fn compose(&self, coeffs: &[FieldElem]) -> FieldElem {
        let q = self.base().map_or(self.order(), |b| b.order());
        FieldElem(coeffs.iter().rev().fold(0u32, |acc, c| acc * q + c.0))
    }

    /// Coefficients of `e` over the immediate base in the polynomial basis
    /// `{1, x, ..., x^{s-1}}`. This is the coordinate bijection used to feed
    /// outer-code symbols into an inner code.
    pub fn pi_coords(&self, e: FieldElem) -> Result<Vec<FieldElem>> {
        if self.is_prime_field() {
            return Err(Error::NotExtension);
        }
        self.check(e)?;
        Ok(self.digits(e))
    }

    /// Inverse of [`FieldCtx::pi_coords`].
    pub fn from_pi_coords(&self, coeffs: &[FieldElem]) -> Result<FieldElem> {
        let base = self.base().ok_or(Error::NotExtension)?;
        if coeffs.len() != self.degree() {
            return Err(Error::LengthMismatch {
                expected: self.degree(),
                got: coeffs.len(),
            });
        }
        for c in coeffs {
            base.check(*c)?;
        }
        Ok(self.compose(coeffs))
    }

    /// Coordinates of `e` over any tower level `sub`, flattening intermediate
    /// levels: coordinate `i * deg(base/sub) + j` is the `j`-th coordinate of
    /// the `i`-th coefficient. `sub == self` yields `[e]`.
    pub fn coords_over(&self, e: FieldElem, sub: &FieldCtx) -> Result<Vec<FieldElem>> {
        let deg = self
            .degree_over(sub)
            .ok_or(Error::NotSubfield(sub.order() as u64))?;
        self.check(e)?;
        let q = sub.order();
        let mut x = e.0;
        Ok((0..deg)
            .map(|_| {
                let d = x % q;
                x /= q;
                FieldElem(d)
            })
            .collect())
    }

    /// Inverse of [`FieldCtx::coords_over`].
    pub fn from_coords_over(&self, coords: &[FieldElem], sub: &FieldCtx) -> Result<FieldElem> {
        let deg = self
            .degree_over(sub)
            .ok_or(Error::NotSubfield(sub.order() as u64))?;
        if coords.len() != deg {
            return Err(Error::LengthMismatch {
                expected: deg,
                got: coords.len(),
            });
        }
        for c in coords {
            sub.check(*c)?;
        }
        let q = sub.order();
        Ok(FieldElem(coords.iter().rev().fold(0u32, |acc, c| acc * q + c.0)))
    }

    /// `e^(q^i)` where `q` is the order of a level of this tower.
    pub fn frobenius_power(&self, e: FieldElem, i: u64, q: u64) -> Result<FieldElem> {
        let sub = self.subfield_of_order(q).ok_or(Error::NotSubfield(q))?;
        self.check(e)?;
        let period = self
            .degree_over(&sub)
            .expect("tower level has a degree") as u64;
        let mut out = e;
        for _ in 0..(i % period) {
            out = self.pow(out, q);
        }
        Ok(out)
    }

    /// Serializes an element: prime-field elements as a decimal residue,
    /// extension elements as comma-separated base coefficients, constant term
    /// first, with nested extension coefficients parenthesized.
    pub fn format_elem(&self, e: FieldElem) -> String {
        match &self.0.kind {
            Kind::Prime => e.0.to_string(),
            Kind::Extension { base, .. } => self
                .digits(e)
                .into_iter()
                .map(|c| base.format_nested(c))
                .collect::<Vec<_>>()
                .join(","),
        }
    }

    /// Like [`FieldCtx::format_elem`], parenthesized for extension fields so
    /// the result can sit inside a comma-separated list.
    pub fn format_nested(&self, e: FieldElem) -> String {
        if self.is_prime_field() {
            self.format_elem(e)
        } else {
            format!("({})", self.format_elem(e))
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<FieldElem> {
        let s = s.trim();
        match &self.0.kind {
            Kind::Prime => {
                let v: u64 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad element {s:?} for F_{}", self.order())))?;
                self.elem(v)
            }
            Kind::Extension { base, degree, .. } => {
                let inner = strip_parens(s);
                let parts = split_top_level(inner, ',')?;
                if parts.len() != *degree {
                    return Err(Error::Parse(format!(
                        "element {s:?} needs {degree} coefficients over F_{}",
                        base.order()
                    )));
                }
                let coeffs = parts
                    .iter()
                    .map(|p| base.parse_elem(p))
                    .collect::<Result<Vec<_>>>()?;
                Ok(self.compose(&coeffs))
            }
        }
    }

    fn same_structure(&self, other: &FieldCtx) -> bool {
        match (&self.0.kind, &other.0.kind) {
            (Kind::Prime, Kind::Prime) => self.order() == other.order(),
            (
                Kind::Extension {
                    base: b1,
                    modulus: m1,
                    ..
                },
                Kind::Extension {
                    base: b2,
                    modulus: m2,
                    ..
                },
            ) => m1 == m2 && b1 == b2,
            _ => false,
        }
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.same_structure(other)
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus() {
            None => write!(f, "F_{}", self.order()),
            Some(m) => {
                let base = self.base().expect("extension has a base");
                let coeffs: Vec<String> = m.iter().map(|c| base.format_nested(*c)).collect();
                write!(f, "F_{} [{} | {}]", self.order(), self.descriptor(), coeffs.join(","))
            }
        }
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.order())
    }
}

impl FromStr for FieldCtx {
    type Err = Error;

    /// Parses `p`, `p^s`, `p^s1^s2`, ...
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.trim().split('^');
        let p: u64 = parts
            .next()
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad field descriptor {s:?}")))?;
        let mut field = FieldCtx::prime(p)?;
        for part in parts {
            let deg: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad field descriptor {s:?}")))?;
            field = FieldCtx::extension(&field, deg)?;
        }
        Ok(field)
    }
}

fn check_order(base_order: u32, degree: usize) -> Result<()> {
    let order = (base_order as u128).checked_pow(degree as u32).unwrap_or(u128::MAX);
    if order > FIELD_ORDER_MAX as u128 {
        return Err(Error::FieldTooLarge {
            order,
            max: FIELD_ORDER_MAX,
        });
    }
    Ok(())
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') && matching_close(t) == Some(t.len() - 1) {
        &t[1..t.len() - 1]
    } else {
        t
    }
}

fn matching_close(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Splits on `sep` outside parentheses.
pub(crate) fn split_top_level(s: &str, sep: char) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
                }
            }
            c if c == sep && depth == 0 => {
                out.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
    }
    out.push(s[start..].trim());
    Ok(out)
}

/// Reduces `poly` (constant first) in place modulo a monic `modulus`.
fn poly_reduce(base: &FieldCtx, poly: &mut [FieldElem], modulus: &[FieldElem]) {
    let deg = modulus.len() - 1;
    for i in (deg..poly.len()).rev() {
        let lead = poly[i];
        if lead.is_zero() {
            continue;
        }
        for (j, &c) in modulus.iter().enumerate() {
            let k = i - deg + j;
            poly[k] = base.sub(poly[k], base.mul(lead, c));
        }
    }
}

fn is_divisible(base: &FieldCtx, f: &[FieldElem], g: &[FieldElem]) -> bool {
    let mut r = f.to_vec();
    poly_reduce(base, &mut r, g);
    r[..g.len() - 1].iter().all(|c| c.is_zero())
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(base: &FieldCtx, f: &[FieldElem]) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    if f[0].is_zero() {
        return false;
    }
    let q = base.order() as u64;
    let mut g = Vec::with_capacity(deg / 2 + 1);
    for e in 1..=deg / 2 {
        for idx in 0..q.pow(e as u32) {
            g.clear();
            let mut x = idx;
            for _ in 0..e {
                g.push(FieldElem((x % q) as u32));
                x /= q;
            }
            g.push(FieldElem::ONE);
            if is_divisible(base, f, &g) {
                return false;
            }
        }
    }
    true
}

fn canonical_modulus(base: &FieldCtx, degree: usize) -> Vec<FieldElem> {
    let q = base.order() as u64;
    let total = q.pow(degree as u32);
    let mut f = vec![FieldElem::ZERO; degree + 1];
    f[degree] = FieldElem::ONE;
    for idx in 0..total {
        // c_0 is the most significant digit of the counter
        let mut x = idx;
        for i in (0..degree).rev() {
            f[i] = FieldElem((x % q) as u32);
            x /= q;
        }
        if is_irreducible(base, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
