//! Sparse multivariate polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ring::RingContext;
use crate::scalar::{rat, Rational};

/// Exponent vector over the variables of a [`RingContext`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(alloc::vec![0; nvars])
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut e = alloc::vec![0; nvars];
        e[v] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u16>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if b > a {
                return None;
            }
            e.push(a - b);
        }
        Some(Monomial(e))
    }

    /// Weight in `Z^m × Z^n`: `x_ij` contributes `e_i` to the row part and `e_j` to the column part.
    pub fn weight(&self, ctx: &RingContext) -> Vec<i32> {
        let mut w = ctx.zero_weight();
        for (v, &e) in self.0.iter().enumerate() {
            if e > 0 {
                let (i, j) = ctx.var_indices(v);
                w[i - 1] += e as i32;
                w[ctx.m + j - 1] += e as i32;
            }
        }
        w
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::one();
        for (v, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                acc *= &point[v];
            }
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![0u16; nvars];
    fn rec(v: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if v + 1 == cur.len() {
            cur[v] = left as u16;
            out.push(Monomial(cur.clone()));
            cur[v] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[v] = e as u16;
            rec(v + 1, left - e, cur, out);
        }
        cur[v] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// All monomials whose weight has the given row sums and column sums
/// (nonnegative integer matrices with prescribed margins).
pub fn monomials_with_margins(ctx: &RingContext, rows: &[i32], cols: &[i32]) -> Vec<Monomial> {
    let mut out = Vec::new();
    if rows.iter().any(|&r| r < 0) || cols.iter().any(|&c| c < 0) {
        return out;
    }
    let rs: i32 = rows.iter().sum();
    let cs: i32 = cols.iter().sum();
    if rs != cs {
        return out;
    }
    let mut cur = alloc::vec![0u16; ctx.nvars()];
    let mut col_left: Vec<i32> = cols.to_vec();
    fn fill_row(
        ctx: &RingContext,
        i: usize,
        j: usize,
        row_left: i32,
        rows: &[i32],
        col_left: &mut Vec<i32>,
        cur: &mut Vec<u16>,
        out: &mut Vec<Monomial>,
    ) {
        if i == ctx.m {
            if col_left.iter().all(|&c| c == 0) {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        if j == ctx.n {
            if row_left == 0 {
                let next = if i + 1 < ctx.m { rows[i + 1] } else { 0 };
                fill_row(ctx, i + 1, 0, next, rows, col_left, cur, out);
            }
            return;
        }
        let remaining_cols: i32 = col_left[j + 1..].iter().sum();
        let lo = (row_left - remaining_cols).max(0);
        let hi = row_left.min(col_left[j]);
        let v = i * ctx.n + j;
        for e in lo..=hi {
            cur[v] = e as u16;
            col_left[j] -= e;
            fill_row(ctx, i, j + 1, row_left - e, rows, col_left, cur, out);
            col_left[j] += e;
        }
        cur[v] = 0;
    }
    fill_row(ctx, 0, 0, rows[0], rows, &mut col_left, &mut cur, &mut out);
    out
}

/// A polynomial in the variables of a fixed context, stored as a map from
/// monomials to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = SparsePoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        SparsePoly::constant(nvars, Rational::one())
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        SparsePoly::constant(nvars, rat(c))
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        SparsePoly::monomial(Monomial::var(nvars, v), Rational::one())
    }

    /// The variable `x_ij` (1-based).
    pub fn x(ctx: &RingContext, i: usize, j: usize) -> Self {
        SparsePoly::var(ctx.nvars(), ctx.var(i, j))
    }

    pub fn monomial(mono: Monomial, c: Rational) -> Self {
        let mut p = SparsePoly::zero(mono.nvars());
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn add_assign(&mut self, other: &SparsePoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &SparsePoly, s: &Rational) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn scale(&self, s: &Rational) -> SparsePoly {
        if s.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    /// Minimum and maximum total degree of the terms, `None` for zero.
    pub fn degree_range(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += c * m.eval(point);
        }
        acc
    }

    pub fn pow(&self, k: u32) -> SparsePoly {
        let mut acc = SparsePoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Human-readable form with variables written `x{i}{j}`.
    pub fn display<'a>(&'a self, ctx: &'a RingContext) -> PolyDisplay<'a> {
        PolyDisplay { p: self, ctx }
    }
}

impl<'a> Add<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<'a> Sub<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-Rational::one())
    }
}

impl<'a> Mul<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars.max(rhs.nvars));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

pub struct PolyDisplay<'a> {
    p: &'a SparsePoly,
    ctx: &'a RingContext,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.p.terms.iter().rev().enumerate() {
            let neg = *c < Rational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = a.is_one();
            if !unit || m.is_one() {
                write!(f, "{a}")?;
            }
            let mut first = unit;
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                let (i, j) = self.ctx.var_indices(v);
                write!(f, "x{i}{j}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
