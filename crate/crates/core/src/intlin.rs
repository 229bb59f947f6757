//! Exact integer linear algebra: Smith normal form with transforms, rank,
//! determinant, characteristic polynomial, cokernel structure.
//!
//! Entries are arbitrary-precision throughout; the matrices in this crate
//! stay small (at most a few dozen rows), so no modular tricks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::laurent::{LaurentPoly, PolyMatrix, VarSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntLinError {
    #[error("matrix must be square")]
    NotSquare,
}

/// Dense integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, x.clone().into());
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    /// Inverse of a unimodular matrix via the adjugate.  Panics when the
    /// determinant is not `±1`.
    pub fn unimodular_inverse(&self) -> Self {
        let n = self.rows;
        assert!(self.is_square());
        let d = self.det().expect("square");
        assert!(d.abs().is_one(), "matrix is not unimodular");
        let adj = Self::from_fn(n, n, |i, j| {
            // cofactor C_ji
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let sub = Self::from_fn(n - 1, n - 1, |a, b| self.get(rows[a], cols[b]).clone());
            let minor = sub.det().expect("square");
            if (i + j) % 2 == 0 {
                minor
            } else {
                -minor
            }
        });
        if d.is_one() {
            adj
        } else {
            adj.neg()
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt, IntLinError> {
        if !self.is_square() {
            return Err(IntLinError::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = !sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev; // exact by Bareiss
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign { -d } else { d })
    }

    /// Rank over the rationals: the number of nonzero Smith diagonal entries.
    pub fn rank(&self) -> usize {
        snf(self).diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Characteristic polynomial `det(tI - M)` in the single variable `t`.
    pub fn char_poly(&self) -> Result<LaurentPoly, IntLinError> {
        if !self.is_square() {
            return Err(IntLinError::NotSquare);
        }
        let vars = VarSet::new(vec!["t"]).expect("valid varset");
        let t = LaurentPoly::var(&vars, 0);
        let m = PolyMatrix::from_fn(&vars, self.rows, self.cols, |i, j| {
            let diag = if i == j { t.clone() } else { LaurentPoly::zero(&vars) };
            diag.sub_ref(&LaurentPoly::constant(&vars, self.get(i, j).clone()))
        });
        Ok(m.det().expect("integer entries stay divisible"))
    }

    /// Structure of `Z^rows / image(M)`.
    pub fn cokernel(&self) -> AbelianGroupSpec {
        let s = snf(self);
        let diag = s.diagonal();
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        AbelianGroupSpec {
            free_rank: self.rows - nonzero,
            torsion: diag
                .iter()
                .filter(|d| !d.is_zero() && !d.is_one())
                .cloned()
                .collect(),
        }
    }

    /// Basis of the integer kernel, read off the right Smith transform.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let s = snf(self);
        let diag = s.diagonal();
        let mut basis = Vec::new();
        for j in 0..self.cols {
            let zero_col = j >= diag.len() || diag[j].is_zero();
            if zero_col {
                basis.push((0..self.cols).map(|i| s.v.get(i, j).clone()).collect());
            }
        }
        basis
    }
}

/// Smith decomposition `U * M * V = D` with unimodular `U`, `V` and a
/// nonnegative divisibility-chain diagonal `D`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

/// Finitely generated abelian group: free rank plus a torsion divisibility
/// chain (each coefficient > 1, each dividing the next).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupSpec {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

/// Smith normal form with smallest-nonzero-pivot selection and full
/// reduction.  Deterministic for a fixed input.
pub fn snf(m: &IntMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let n = rows.min(cols);
    let mut k = 0;
    while k < n {
        // pivot: smallest nonzero absolute value in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if !a.get(i, j).is_zero()
                    && pivot
                        .map(|(pi, pj)| a.get(i, j).abs() < a.get(pi, pj).abs())
                        .unwrap_or(true)
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut a, &mut u, k, pi);
        swap_cols(&mut a, &mut v, k, pj);

        // clear row and column k; re-pivot whenever a remainder shrinks
        loop {
            let mut clean = true;
            for i in k + 1..rows {
                if !a.get(i, k).is_zero() {
                    let q = div_round(a.get(i, k), a.get(k, k));
                    if !q.is_zero() {
                        row_sub(&mut a, &mut u, i, k, &q);
                    }
                    if !a.get(i, k).is_zero() {
                        // remainder strictly smaller in absolute value
                        swap_rows(&mut a, &mut u, k, i);
                        clean = false;
                    }
                }
            }
            for j in k + 1..cols {
                if !a.get(k, j).is_zero() {
                    let q = div_round(a.get(k, j), a.get(k, k));
                    if !q.is_zero() {
                        col_sub(&mut a, &mut v, j, k, &q);
                    }
                    if !a.get(k, j).is_zero() {
                        swap_cols(&mut a, &mut v, k, j);
                        clean = false;
                    }
                }
            }
            if clean
                && (k + 1..rows).all(|i| a.get(i, k).is_zero())
                && (k + 1..cols).all(|j| a.get(k, j).is_zero())
            {
                break;
            }
        }

        // divisibility: fold any non-multiple into the pivot position
        let mut redo = false;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if !a.get(i, j).mod_floor(a.get(k, k)).is_zero() {
                    // add column j to column k, then rerun elimination at k
                    let minus_one = -BigInt::one();
                    col_sub(&mut a, &mut v, k, j, &minus_one);
                    redo = true;
                    break 'scan;
                }
            }
        }
        if !redo {
            k += 1;
        }
    }

    // nonnegative diagonal, sign absorbed into U
    for i in 0..n {
        if a.get(i, i).is_negative() {
            for j in 0..cols {
                let x = -a.get(i, j).clone();
                a.set(i, j, x);
            }
            for j in 0..rows {
                let x = -u.get(i, j).clone();
                u.set(i, j, x);
            }
        }
    }

    SmithForm { d: a, u, v }
}

fn swap_rows(a: &mut IntMatrix, u: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..a.cols() {
        let x = a.get(i, c).clone();
        let y = a.get(j, c).clone();
        a.set(i, c, y);
        a.set(j, c, x);
    }
    for c in 0..u.cols() {
        let x = u.get(i, c).clone();
        let y = u.get(j, c).clone();
        u.set(i, c, y);
        u.set(j, c, x);
    }
}

fn swap_cols(a: &mut IntMatrix, v: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for r in 0..a.rows() {
        let x = a.get(r, i).clone();
        let y = a.get(r, j).clone();
        a.set(r, i, y);
        a.set(r, j, x);
    }
    for r in 0..v.rows() {
        let x = v.get(r, i).clone();
        let y = v.get(r, j).clone();
        v.set(r, i, y);
        v.set(r, j, x);
    }
}

/// row_i -= q * row_k
fn row_sub(a: &mut IntMatrix, u: &mut IntMatrix, i: usize, k: usize, q: &BigInt) {
    for c in 0..a.cols() {
        let x = a.get(i, c) - q * a.get(k, c);
        a.set(i, c, x);
    }
    for c in 0..u.cols() {
        let x = u.get(i, c) - q * u.get(k, c);
        u.set(i, c, x);
    }
}

/// col_j -= q * col_k
fn col_sub(a: &mut IntMatrix, v: &mut IntMatrix, j: usize, k: usize, q: &BigInt) {
    for r in 0..a.rows() {
        let x = a.get(r, j) - q * a.get(r, k);
        a.set(r, j, x);
    }
    for r in 0..v.rows() {
        let x = v.get(r, j) - q * v.get(r, k);
        v.set(r, j, x);
    }
}

/// Quotient rounded to nearest, which keeps remainders at most half the
/// pivot during reduction.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Check the full Smith contract: reconstruction, nonnegative divisibility
/// chain, unimodular transforms.
pub fn verify_snf(m: &IntMatrix, s: &SmithForm) -> bool {
    if s.u.mul(m).mul(&s.v) != s.d {
        return false;
    }
    let diag = s.diagonal();
    for i in 0..diag.len() {
        if diag[i].is_negative() {
            return false;
        }
        if i + 1 < diag.len() && !diag[i].is_zero() && !diag[i + 1].mod_floor(&diag[i]).is_zero()
        {
            return false;
        }
        if i + 1 < diag.len() && diag[i].is_zero() && !diag[i + 1].is_zero() {
            return false;
        }
    }
    // off-diagonal of D must vanish
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            if i != j && !s.d.get(i, j).is_zero() {
                return false;
            }
        }
    }
    s.u.det().map(|d| d.abs().is_one()).unwrap_or(false)
        && s.v.det().map(|d| d.abs().is_one()).unwrap_or(false)
}

/// Row-style Hermite normal form: a canonical `W * M` for unimodular `W`,
/// in row echelon with positive pivots and reduced entries above each
/// pivot.  For a surjective map onto `Z^rows` every pivot is 1.
pub fn hnf_rows(m: &IntMatrix) -> IntMatrix {
    let mut h = m.clone();
    let (rows, cols) = (h.rows(), h.cols());
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        // clear below row r by repeated smallest-pivot reduction
        loop {
            let mut pivot: Option<usize> = None;
            for i in r..rows {
                if !h.get(i, col).is_zero()
                    && pivot.map_or(true, |p| h.get(i, col).magnitude() < h.get(p, col).magnitude())
                {
                    pivot = Some(i);
                }
            }
            let Some(p) = pivot else { break };
            if p != r {
                for j in 0..cols {
                    let a = h.get(r, j).clone();
                    let b = h.get(p, j).clone();
                    h.set(r, j, b);
                    h.set(p, j, a);
                }
            }
            let mut done = true;
            for i in r + 1..rows {
                if h.get(i, col).is_zero() {
                    continue;
                }
                let q = div_round(h.get(i, col), h.get(r, col));
                for j in 0..cols {
                    let v = h.get(i, j) - &q * h.get(r, j);
                    h.set(i, j, v);
                }
                if !h.get(i, col).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, col).is_zero() {
            continue;
        }
        if h.get(r, col).is_negative() {
            for j in 0..cols {
                let v = -h.get(r, j);
                h.set(r, j, v);
            }
        }
        for i in 0..r {
            let q = h.get(i, col).div_floor(h.get(r, col));
            if q.is_zero() {
                continue;
            }
            for j in 0..cols {
                let v = h.get(i, j) - &q * h.get(r, j);
                h.set(i, j, v);
            }
        }
        r += 1;
    }
    h
}
