//! Dense matrices over the Gaussian rationals with fraction-free elimination.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::GaussianRational;
use crate::error::{Error, Result};

/// Row-major dense matrix of Gaussian rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = GaussianRational::one();
        }
        m
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries = rows.iter().flatten().map(|&v| GaussianRational::from_int(v)).collect();
        Self { rows: r, cols: c, entries }
    }

    /// Vandermonde matrix with entry `(i, j) = nodes[i]^j`.
    pub fn vandermonde(nodes: &[i64]) -> Self {
        let n = nodes.len();
        let rows: Vec<Vec<i64>> =
            nodes.iter().map(|&x| (0..n as u32).map(|j| x.pow(j)).collect()).collect();
        Self::from_int_rows(&rows)
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

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Submatrix on the given row and column indices (in the given order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        Self { rows: rows.len(), cols: cols.len(), entries }
    }

    /// The `k×k` minor on `rows` and the first `k = rows.len()` columns.
    pub fn leading_minor(&self, rows: &[usize]) -> GaussianRational {
        let cols: Vec<usize> = (0..rows.len()).collect();
        det(&self.select(rows, &cols)).expect("selected minor is square")
    }

    pub fn mul(&self, rhs: &Mat) -> Result<Mat> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = GaussianRational::zero();
                for t in 0..self.cols {
                    acc = &acc + &(self.get(i, t) * rhs.get(t, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Determinant by Bareiss elimination with row pivoting.
pub fn det(m: &Mat) -> Result<GaussianRational> {
    if !m.is_square() {
        return Err(Error::Dimension(format!("det of non-square {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(GaussianRational::one());
    }
    let mut a: Vec<Vec<GaussianRational>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut prev = GaussianRational::one();
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(GaussianRational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = &num / &prev;
            }
            a[i][k] = GaussianRational::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Rank over the Gaussian rationals by fraction-free row echelon reduction.
pub fn rank(m: &Mat) -> usize {
    let mut a: Vec<Vec<GaussianRational>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    let mut prev = GaussianRational::one();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..m.rows {
            for j in c + 1..m.cols {
                let num = &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j]);
                a[i][j] = &num / &prev;
            }
            a[i][c] = GaussianRational::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// On-disk matrix layout: `{"rows": m, "cols": n, "entries": [["1/2", "3+i"], …]}`.
#[derive(Serialize, Deserialize)]
struct MatFile {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<serde_json::Value>>,
}

impl Mat {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: MatFile = serde_json::from_str(text)?;
        if file.entries.len() != file.rows {
            return Err(Error::Dimension(format!(
                "declared {} rows, found {}",
                file.rows,
                file.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(file.rows * file.cols);
        for row in &file.entries {
            if row.len() != file.cols {
                return Err(Error::Dimension(format!(
                    "declared {} columns, found a row of {}",
                    file.cols,
                    row.len()
                )));
            }
            for v in row {
                let z = match v {
                    serde_json::Value::String(s) => s.parse()?,
                    serde_json::Value::Number(n) => n
                        .as_i64()
                        .map(GaussianRational::from_int)
                        .ok_or_else(|| Error::Parse(format!("non-integer number {n}")))?,
                    other => return Err(Error::Parse(format!("bad matrix entry {other}"))),
                };
                entries.push(z);
            }
        }
        Mat::new(file.rows, file.cols, entries)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<Vec<serde_json::Value>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|z| z.to_string().into()).collect())
            .collect();
        serde_json::json!({ "rows": self.rows, "cols": self.cols, "entries": entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(re: i64, im: i64) -> GaussianRational {
        &GaussianRational::from_int(re) + &(&GaussianRational::from_int(im) * &GaussianRational::i())
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&Mat::identity(3)).unwrap(), GaussianRational::one());
        let m = Mat::from_int_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(det(&m).unwrap(), GaussianRational::from_int(-2));
        let m = Mat::new(2, 2, vec![gi(0, 1), gi(1, 0), gi(1, 0), gi(0, 1)]).unwrap();
        assert_eq!(det(&m).unwrap(), GaussianRational::from_int(-2));
    }

    #[test]
    fn det_needs_pivoting() {
        let m = Mat::from_int_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        assert_eq!(det(&m).unwrap(), GaussianRational::from_int(-1));
        let m = Mat::from_int_rows(&[vec![0, 0], vec![0, 5]]);
        assert!(det(&m).unwrap().is_zero());
    }

    #[test]
    fn det_rejects_non_square() {
        assert!(matches!(det(&Mat::zeros(2, 3)), Err(Error::Dimension(_))));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Mat::zeros(2, 3)), 0);
        assert_eq!(rank(&Mat::identity(4)), 4);
        assert_eq!(rank(&Mat::from_int_rows(&[vec![1, 2], vec![2, 4]])), 1);
        assert_eq!(rank(&Mat::from_int_rows(&[vec![0, 1, 2], vec![0, 2, 4], vec![1, 0, 0]])), 2);
    }

    #[test]
    fn vandermonde_det() {
        // prod_{i<j} (x_j - x_i) for nodes 1, 2, 3 is 1·2·1 = 2
        assert_eq!(det(&Mat::vandermonde(&[1, 2, 3])).unwrap(), GaussianRational::from_int(2));
    }

    #[test]
    fn json_roundtrip() {
        let text = r#"{"rows":2,"cols":2,"entries":[["1","1/2+i"],[3,"-3/4"]]}"#;
        let m = Mat::from_json(text).unwrap();
        assert_eq!(m.get(1, 0), &GaussianRational::from_int(3));
        let back = Mat::from_json(&m.to_json().to_string()).unwrap();
        assert_eq!(back, m);
        assert!(Mat::from_json(r#"{"rows":2,"cols":2,"entries":[["1","2"]]}"#).is_err());
    }
}
