//! Multivariate Laurent polynomials over the integers.
//!
//! Everything here is exact: arithmetic, divisibility, gcd (subresultant
//! pseudo-remainder sequences after reduction to the primitive univariate
//! case), determinants of polynomial matrices, and elementary ideals of
//! presentation matrices.  Units of the Laurent ring are `±monomial`, so
//! equality of invariants is always tested on unit-normalized
//! representatives.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LaurentError {
    #[error("variable names must be distinct and nonempty")]
    BadVarSet,
    #[error("division by the zero polynomial")]
    DivByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("gcd requires at least one nonzero input")]
    GcdAllZero,
    #[error("operation undefined on the zero polynomial")]
    ZeroInput,
    #[error("substitution target for `{0}` must be a unit (it meets a negative exponent)")]
    NonInvertibleTarget(String),
    #[error("row/column index out of range")]
    IndexOutOfRange,
}

/// Ordered list of distinct variable names.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Self, LaurentError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(LaurentError::BadVarSet);
            }
        }
        Ok(VarSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Exact multivariate Laurent polynomial with integer coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vectors, which fixes the
/// lexicographic term order used for canonical printing and for leading-term
/// selection during division.  Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &VarSet) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &VarSet, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn monomial(vars: &VarSet, exps: Vec<i64>, coeff: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        let mut p = Self::zero(vars);
        let c = coeff.into();
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `x_i` as a polynomial.
    pub fn var(vars: &VarSet, i: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        Self::monomial(vars, exps, 1)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    /// True for `±monomial`, the units of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn insert_term(&mut self, exps: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "varset mismatch");
    }

    pub fn neg_ref(&self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c);
        }
        out
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.same_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.same_vars(other);
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(exps, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = Self::zero(&self.vars);
        for (e, k) in &self.terms {
            out.terms.insert(e.clone(), k * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(&self.vars, 1);
        for _ in 0..n {
            out = out.mul_ref(self);
        }
        out
    }

    /// Per-variable minimum exponent over the support; `None` for zero.
    fn min_exps(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |mut acc, e| {
            for (a, &b) in acc.iter_mut().zip(e) {
                if b < *a {
                    *a = b;
                }
            }
            acc
        }))
    }

    fn max_exp_of(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|e| e[var]).max()
    }

    fn min_exp_of(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|e| e[var]).min()
    }

    /// Multiply by the monomial with exponent vector `delta`.
    pub fn shifted(&self, delta: &[i64]) -> Self {
        assert_eq!(delta.len(), self.vars.len());
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.terms
                .insert(e.iter().zip(delta).map(|(a, b)| a + b).collect(), c.clone());
        }
        out
    }

    /// Shift so every variable has minimum exponent zero.  Returns the shift
    /// applied (the negated minimum exponents).
    fn to_nonneg(&self) -> (Self, Vec<i64>) {
        match self.min_exps() {
            None => (self.clone(), vec![0; self.vars.len()]),
            Some(mins) => {
                let delta: Vec<i64> = mins.iter().map(|m| -m).collect();
                (self.shifted(&delta), delta)
            }
        }
    }

    /// Canonical associate: minimum exponent zero in every variable and the
    /// lexicographically-first term has positive coefficient.
    pub fn normalize_unit(&self) -> Result<Self, LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::ZeroInput);
        }
        let (mut p, _) = self.to_nonneg();
        if p.terms.values().next().unwrap().is_negative() {
            p = p.neg_ref();
        }
        Ok(p)
    }

    /// Exact quotient `self / q`; errors when no exact quotient exists.
    pub fn exact_div(&self, q: &Self) -> Result<Self, LaurentError> {
        self.same_vars(q);
        if q.is_zero() {
            return Err(LaurentError::DivByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let (p1, sp) = self.to_nonneg();
        let (q1, sq) = q.to_nonneg();
        let r1 = poly_divide(&p1, &q1).ok_or(LaurentError::NotDivisible)?;
        // self = t^{-sp} p1, q = t^{-sq} q1, so the quotient shifts by sq - sp.
        let delta: Vec<i64> = sq.iter().zip(&sp).map(|(a, b)| a - b).collect();
        Ok(r1.shifted(&delta))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_ok()
    }

    /// Unit-normalized greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self, LaurentError> {
        self.same_vars(other);
        if self.is_zero() && other.is_zero() {
            return Err(LaurentError::GcdAllZero);
        }
        if self.is_zero() {
            return other.normalize_unit();
        }
        if other.is_zero() {
            return self.normalize_unit();
        }
        let (a, _) = self.to_nonneg();
        let (b, _) = other.to_nonneg();
        gcd_nonneg(&a, &b).normalize_unit()
    }

    pub fn gcd_many<'a, I: IntoIterator<Item = &'a LaurentPoly>>(
        items: I,
    ) -> Result<Self, LaurentError> {
        let mut acc: Option<LaurentPoly> = None;
        for p in items {
            if p.is_zero() {
                continue;
            }
            acc = Some(match acc {
                None => p.normalize_unit()?,
                Some(g) => {
                    if g.is_one() {
                        g
                    } else {
                        g.gcd(p)?
                    }
                }
            });
        }
        acc.ok_or(LaurentError::GcdAllZero)
    }

    /// The associate `±var^k · self` whose support in `var` is symmetric
    /// about zero, with positive leading coefficient in `var`.  When the
    /// exponent span is odd no centered associate exists; the support is
    /// placed on `{-m, ..., m+1}` and the second component is `true`.
    pub fn symmetrize(&self, var: usize) -> Result<(Self, bool), LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::ZeroInput);
        }
        let lo = self.min_exp_of(var).unwrap();
        let hi = self.max_exp_of(var).unwrap();
        let span = hi - lo;
        let (shift, asymmetric) = if span % 2 == 0 {
            (-(lo + span / 2), false)
        } else {
            (-(span - 1) / 2 - lo, true)
        };
        let mut delta = vec![0; self.vars.len()];
        delta[var] = shift;
        let mut out = self.shifted(&delta);
        // sign: positive leading coefficient in the distinguished variable
        let top = out.max_exp_of(var).unwrap();
        let lead_sign = out
            .terms
            .iter()
            .filter(|(e, _)| e[var] == top)
            .map(|(_, c)| c)
            .next()
            .unwrap();
        if lead_sign.is_negative() {
            out = out.neg_ref();
        }
        Ok((out, asymmetric))
    }

    /// Exact substitution into a new variable set.  `images[i]` replaces
    /// variable `i`; a variable occurring with a negative exponent must map
    /// to a unit.
    pub fn substitute(
        &self,
        out_vars: &VarSet,
        images: &[LaurentPoly],
    ) -> Result<Self, LaurentError> {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        for im in images {
            assert_eq!(&im.vars, out_vars, "varset mismatch");
        }
        let mut out = Self::zero(out_vars);
        for (e, c) in &self.terms {
            let mut term = Self::constant(out_vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let base = if k > 0 {
                    images[i].clone()
                } else {
                    invert_unit(&images[i]).ok_or_else(|| {
                        LaurentError::NonInvertibleTarget(self.vars.name(i).to_string())
                    })?
                };
                term = term.mul_ref(&base.pow(k.unsigned_abs() as u32));
            }
            out = out.add_ref(&term);
        }
        Ok(out)
    }

    /// Rename variables without touching the terms.
    pub fn rename_vars(&self, out_vars: &VarSet) -> Self {
        assert_eq!(out_vars.len(), self.vars.len());
        LaurentPoly { vars: out_vars.clone(), terms: self.terms.clone() }
    }

    /// Serialization-friendly view: `(exponent vector, coefficient)` pairs in
    /// lexicographic order.
    pub fn term_pairs(&self) -> Vec<(Vec<i64>, BigInt)> {
        self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect()
    }

    pub fn from_term_pairs(
        vars: &VarSet,
        pairs: &[(Vec<i64>, BigInt)],
    ) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in pairs {
            assert_eq!(e.len(), vars.len());
            p.insert_term(e.clone(), c.clone());
        }
        p
    }
}

fn invert_unit(p: &LaurentPoly) -> Option<LaurentPoly> {
    if !p.is_unit() {
        return None;
    }
    let (e, c) = p.terms.iter().next().unwrap();
    Some(LaurentPoly::monomial(
        &p.vars,
        e.iter().map(|x| -x).collect(),
        c.clone(),
    ))
}

/// Long division in the ordinary (nonnegative-exponent) polynomial ring with
/// lexicographic leading terms.  Returns `None` when the division is inexact.
fn poly_divide(p: &LaurentPoly, q: &LaurentPoly) -> Option<LaurentPoly> {
    let (qe, qc) = q.terms.iter().next_back().unwrap();
    let mut rem = p.clone();
    let mut quot = LaurentPoly::zero(&p.vars);
    while !rem.is_zero() {
        let (re, rc) = {
            let (re, rc) = rem.terms.iter().next_back().unwrap();
            (re.clone(), rc.clone())
        };
        let mut de = Vec::with_capacity(re.len());
        for (a, b) in re.iter().zip(qe) {
            let d = a - b;
            if d < 0 {
                return None;
            }
            de.push(d);
        }
        let (dc, r) = rc.div_rem(qc);
        if !r.is_zero() {
            return None;
        }
        let t = LaurentPoly::monomial(&p.vars, de, dc);
        rem = rem.sub_ref(&t.mul_ref(q));
        quot = quot.add_ref(&t);
    }
    Some(quot)
}

/// gcd of two nonzero polynomials with nonnegative exponents.  Recursive
/// content/primitive-part reduction; primitive pseudo-remainder sequence in
/// the main variable.
fn gcd_nonneg(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let nvars = a.vars.len();
    let main = (0..nvars).find(|&v| {
        a.max_exp_of(v).unwrap_or(0) > 0 || b.max_exp_of(v).unwrap_or(0) > 0
    });
    let Some(main) = main else {
        // both are integer constants
        let ca = a.terms.values().next().unwrap();
        let cb = b.terms.values().next().unwrap();
        return LaurentPoly::constant(&a.vars, ca.gcd(cb));
    };
    let (ca, pa) = content_pp(a, main);
    let (cb, pb) = content_pp(b, main);
    let cg = gcd_nonneg(&ca, &cb);

    let (mut f, mut g) = if deg_of(a, main) >= deg_of(b, main) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g, main);
        f = g;
        g = if r.is_zero() {
            r
        } else {
            let (_, pp) = content_pp(&r, main);
            pp
        };
    }
    cg.mul_ref(&f)
}

fn deg_of(p: &LaurentPoly, var: usize) -> i64 {
    p.max_exp_of(var).unwrap_or(0)
}

/// Coefficient of `var^k` as a polynomial in the remaining variables
/// (exponent of `var` zeroed out).
fn coeff_at(p: &LaurentPoly, var: usize, k: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero(&p.vars);
    for (e, c) in &p.terms {
        if e[var] == k {
            let mut e2 = e.clone();
            e2[var] = 0;
            out.terms.insert(e2, c.clone());
        }
    }
    out
}

/// `(content, primitive part)` with respect to `var`.
fn content_pp(p: &LaurentPoly, var: usize) -> (LaurentPoly, LaurentPoly) {
    let deg = deg_of(p, var);
    let mut content: Option<LaurentPoly> = None;
    for k in 0..=deg {
        let c = coeff_at(p, var, k);
        if c.is_zero() {
            continue;
        }
        content = Some(match content {
            None => c,
            Some(g) => {
                if g.is_one() {
                    g
                } else {
                    gcd_nonneg(&g, &c)
                }
            }
        });
    }
    let content = content.expect("content of nonzero polynomial");
    // make the content's sign canonical so pp keeps the sign of p
    let content = if content.terms.values().next().unwrap().is_negative() {
        content.neg_ref()
    } else {
        content
    };
    let pp = p.exact_div(&content).expect("content divides");
    (content, pp)
}

/// Pseudo-remainder of `f` by `g` in the main variable: repeatedly multiply
/// through by the leading coefficient of `g` and cancel.
fn pseudo_rem(f: &LaurentPoly, g: &LaurentPoly, var: usize) -> LaurentPoly {
    let dg = deg_of(g, var);
    let lcg = coeff_at(g, var, dg);
    let mut r = f.clone();
    while !r.is_zero() {
        let dr = deg_of(&r, var);
        if dr < dg {
            break;
        }
        let lcr = coeff_at(&r, var, dr);
        let mut shift = vec![0; f.vars.len()];
        shift[var] = dr - dg;
        r = r
            .mul_ref(&lcg)
            .sub_ref(&g.mul_ref(&lcr).shifted(&shift));
    }
    r
}

// ---------------------------------------------------------------------------
// canonical text form

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono = monomial_text(&self.vars, e);
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn monomial_text(vars: &VarSet, exps: &[i64]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{}", vars.name(i), e)),
        }
    }
    parts.join("*")
}

// ---------------------------------------------------------------------------
// matrices of polynomials

/// Dense matrix of Laurent polynomials (presentation matrices, `tI - M`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: VarSet,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zero(vars: &VarSet, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            vars: vars.clone(),
            entries: vec![LaurentPoly::zero(vars); rows * cols],
        }
    }

    pub fn from_fn(
        vars: &VarSet,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPoly,
    ) -> Self {
        let mut m = Self::zero(vars, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                *m.get_mut(i, j) = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut LaurentPoly {
        &mut self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        assert_eq!(p.vars(), &self.vars);
        self.entries[i * self.cols + j] = p;
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self, LaurentError> {
        if rows.iter().any(|&i| i >= self.rows) || cols.iter().any(|&j| j >= self.cols) {
            return Err(LaurentError::IndexOutOfRange);
        }
        Ok(Self::from_fn(&self.vars, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        }))
    }

    /// Exact determinant of the submatrix on the given row and column sets.
    pub fn minor_det(&self, rows: &[usize], cols: &[usize]) -> Result<LaurentPoly, LaurentError> {
        assert_eq!(rows.len(), cols.len(), "minor must be square");
        self.submatrix(rows, cols)?.det()
    }

    /// Exact determinant: cofactor expansion up to 4x4, fraction-free
    /// elimination above that.
    pub fn det(&self) -> Result<LaurentPoly, LaurentError> {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::constant(&self.vars, 1));
        }
        // clear negative exponents row by row; the determinant picks up the
        // product of the row monomials, undone at the end
        let mut cleared = self.clone();
        let mut total_shift = vec![0i64; self.vars.len()];
        for i in 0..n {
            let mut mins: Option<Vec<i64>> = None;
            for j in 0..n {
                if let Some(m) = cleared.get(i, j).min_exps() {
                    mins = Some(match mins {
                        None => m,
                        Some(mut acc) => {
                            for (a, b) in acc.iter_mut().zip(&m) {
                                if *b < *a {
                                    *a = *b;
                                }
                            }
                            acc
                        }
                    });
                }
            }
            if let Some(mins) = mins {
                let delta: Vec<i64> = mins.iter().map(|m| -m).collect();
                if delta.iter().any(|&d| d != 0) {
                    for j in 0..n {
                        let shifted = cleared.get(i, j).shifted(&delta);
                        *cleared.get_mut(i, j) = shifted;
                    }
                    for (t, d) in total_shift.iter_mut().zip(&delta) {
                        *t += d;
                    }
                }
            }
        }
        let d = if n <= 4 {
            cleared.det_cofactor()
        } else {
            cleared.det_bareiss()?
        };
        let back: Vec<i64> = total_shift.iter().map(|t| -t).collect();
        Ok(d.shifted(&back))
    }

    fn det_cofactor(&self) -> LaurentPoly {
        let n = self.rows;
        match n {
            0 => LaurentPoly::constant(&self.vars, 1),
            1 => self.get(0, 0).clone(),
            _ => {
                let mut acc = LaurentPoly::zero(&self.vars);
                for i in 0..n {
                    let a = self.get(i, 0);
                    if a.is_zero() {
                        continue;
                    }
                    let rows: Vec<usize> = (0..n).filter(|&r| r != i).collect();
                    let cols: Vec<usize> = (1..n).collect();
                    let sub = self
                        .submatrix(&rows, &cols)
                        .expect("indices in range")
                        .det_cofactor();
                    let term = a.mul_ref(&sub);
                    acc = if i % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
                }
                acc
            }
        }
    }

    fn det_bareiss(&self) -> Result<LaurentPoly, LaurentError> {
        let n = self.rows;
        let mut a: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = false;
        let mut prev = LaurentPoly::constant(&self.vars, 1);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = !sign;
                    }
                    None => return Ok(LaurentPoly::zero(&self.vars)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j]
                        .mul_ref(&a[k][k])
                        .sub_ref(&a[i][k].mul_ref(&a[k][j]));
                    a[i][j] = num.exact_div(&prev)?;
                }
                a[i][k] = LaurentPoly::zero(&self.vars);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign { d.neg_ref() } else { d })
    }

    /// Unit-normalized generator of the k-th elementary ideal of an
    /// `r x n` presentation matrix: the gcd of all `(n-k) x (n-k)` minors.
    /// Returns 0 when there are no minors of that size (zero ideal) and 1
    /// when `n - k <= 0` (full ideal).
    pub fn elementary_ideal_gcd(&self, k: usize) -> Result<LaurentPoly, LaurentError> {
        let n = self.cols;
        let r = self.rows;
        if n <= k {
            return Ok(LaurentPoly::constant(&self.vars, 1));
        }
        let m = n - k;
        if m > r {
            return Ok(LaurentPoly::zero(&self.vars));
        }
        let mut acc: Option<LaurentPoly> = None;
        'outer: for rows in combinations(r, m) {
            for cols in combinations(n, m) {
                let d = self.minor_det(&rows, &cols)?;
                if d.is_zero() {
                    continue;
                }
                acc = Some(match acc {
                    None => d.normalize_unit()?,
                    Some(g) => g.gcd(&d)?,
                });
                if acc.as_ref().unwrap().is_one() {
                    break 'outer;
                }
            }
        }
        Ok(acc.unwrap_or_else(|| LaurentPoly::zero(&self.vars)))
    }
}

/// All size-`k` subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).combinations(k).collect()
}
