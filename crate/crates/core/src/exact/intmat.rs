//! Integer matrices with Hermite and Smith normal forms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMat {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} integer matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix with `cols` columns from integer rows. Panics on ragged input.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let entries = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
        Self { rows: rows.len(), cols, entries }
    }

    pub fn from_big_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Self { rows: n, cols, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    fn at(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Rows as `i64`, or `None` if some entry does not fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(ToPrimitive::to_i64).collect())
            .collect()
    }

    pub fn mul(&self, rhs: &IntMat) -> Result<IntMat> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    *out.at(i, j) += a * rhs.get(t, j);
                }
            }
        }
        Ok(out)
    }

    /// Exact determinant by integer Bareiss elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "det of non-square {}x{} integer matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut prev = BigInt::one();
        let mut negate = false;
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
        Ok(if negate { -d } else { d })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] -= q · row[src]
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = q * self.get(src, c);
            *self.at(dst, c) -= v;
        }
    }

    /// col[dst] -= q · col[src]
    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = q * self.get(r, src);
            *self.at(r, dst) -= v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -std::mem::take(self.at(r, c));
            *self.at(r, c) = v;
        }
    }

    fn truncate_rows(&mut self, rows: usize) {
        self.entries.truncate(rows * self.cols);
        self.rows = rows;
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Row Hermite normal form `h` together with a unimodular `u`.
///
/// `u` is square of size `m.rows()`; the first `h.rows()` rows of `u·m` equal
/// `h` and the remaining rows of `u·m` are zero.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub h: IntMat,
    pub u: IntMat,
    /// Pivot column of each row of `h`.
    pub pivots: Vec<usize>,
}

/// Canonical row Hermite normal form: positive pivots, entries above each
/// pivot reduced into `[0, pivot)`, zero rows dropped.
pub fn hnf(m: &IntMat) -> Hnf {
    let mut h = m.clone();
    let mut u = IntMat::identity(m.rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        loop {
            let piv = (r..m.rows)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&a, &b| h.get(a, c).abs().cmp(&h.get(b, c).abs()));
            let Some(piv) = piv else { break };
            h.swap_rows(r, piv);
            u.swap_rows(r, piv);
            let mut clean = true;
            for i in r + 1..m.rows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c).div_floor(h.get(r, c));
                h.sub_row(i, r, &q);
                u.sub_row(i, r, &q);
                if !h.get(i, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h.get(i, c).div_floor(h.get(r, c));
            h.sub_row(i, r, &q);
            u.sub_row(i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    h.truncate_rows(r);
    Hnf { h, u, pivots }
}

/// Smith normal form `left · m · right = diag(d_1, …, d_min)` with
/// `d_i ≥ 0` and `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub diag: Vec<BigInt>,
    pub left: IntMat,
    pub right: IntMat,
}

impl Snf {
    /// Product of the nonzero invariant factors.
    pub fn nonzero_product(&self) -> BigInt {
        self.diag.iter().filter(|d| !d.is_zero()).product()
    }

    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn snf(m: &IntMat) -> Snf {
    let mut a = m.clone();
    let mut left = IntMat::identity(m.rows);
    let mut right = IntMat::identity(m.cols);
    let size = m.rows.min(m.cols);
    for t in 0..size {
        // Smallest nonzero entry of the trailing block goes to (t, t).
        let mut best: Option<(usize, usize)> = None;
        for i in t..m.rows {
            for j in t..m.cols {
                let v = a.get(i, j);
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap_rows(t, bi);
        left.swap_rows(t, bi);
        a.swap_cols(t, bj);
        right.swap_cols(t, bj);

        loop {
            let mut changed = false;
            for i in t + 1..m.rows {
                if !a.get(i, t).is_zero() {
                    let q = a.get(i, t).div_floor(a.get(t, t));
                    a.sub_row(i, t, &q);
                    left.sub_row(i, t, &q);
                }
            }
            for j in t + 1..m.cols {
                if !a.get(t, j).is_zero() {
                    let q = a.get(t, j).div_floor(a.get(t, t));
                    a.sub_col(j, t, &q);
                    right.sub_col(j, t, &q);
                }
            }
            // A remainder smaller than the pivot becomes the new pivot.
            let pivot_abs = a.get(t, t).abs();
            let mut smaller: Option<(usize, usize)> = None;
            for i in t + 1..m.rows {
                let v = a.get(i, t);
                if !v.is_zero() && v.abs() < pivot_abs {
                    smaller = Some((i, t));
                    break;
                }
            }
            if smaller.is_none() {
                for j in t + 1..m.cols {
                    let v = a.get(t, j);
                    if !v.is_zero() && v.abs() < pivot_abs {
                        smaller = Some((t, j));
                        break;
                    }
                }
            }
            if let Some((i, j)) = smaller {
                a.swap_rows(t, i);
                left.swap_rows(t, i);
                a.swap_cols(t, j);
                right.swap_cols(t, j);
                changed = true;
            }
            if changed {
                continue;
            }
            let row_clear = (t + 1..m.cols).all(|j| a.get(t, j).is_zero());
            let col_clear = (t + 1..m.rows).all(|i| a.get(i, t).is_zero());
            if !(row_clear && col_clear) {
                continue;
            }
            // Divisibility: fold an offending row into row t and repeat.
            let p = a.get(t, t).clone();
            let offender = (t + 1..m.rows)
                .find(|&i| (t + 1..m.cols).any(|j| !a.get(i, j).is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    a.sub_row(t, i, &minus_one);
                    left.sub_row(t, i, &minus_one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }
    let diag = (0..size).map(|t| a.get(t, t).clone()).collect();
    Snf { diag, left, right }
}
