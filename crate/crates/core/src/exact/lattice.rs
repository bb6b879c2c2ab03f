use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::intmat::{hnf, snf, IntMat};
use crate::error::{Error, Result};

/// A sublattice of `Z^d`, stored by its canonical row Hermite basis.
///
/// Two lattices are equal iff their Hermite bases are equal, so the derived
/// `PartialEq` is lattice equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    ambient_dim: usize,
    basis: IntMat,
    pivots: Vec<usize>,
}

impl IntegerLattice {
    /// Lattice generated by the rows of `gens`.
    pub fn from_intmat(gens: &IntMat) -> Self {
        let res = hnf(gens);
        Self { ambient_dim: gens.cols(), basis: res.h, pivots: res.pivots }
    }

    pub fn from_generators(dim: usize, gens: &[Vec<i64>]) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.len() != dim) {
            return Err(Error::Dimension(format!(
                "generator of length {} in a lattice of dimension {dim}",
                bad.len()
            )));
        }
        Ok(Self::from_intmat(&IntMat::from_rows(dim, gens)))
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_intmat(&IntMat::zeros(0, dim))
    }

    /// The full lattice `Z^d`.
    pub fn full(dim: usize) -> Self {
        Self::from_intmat(&IntMat::identity(dim))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Integer coordinates of `v` in the Hermite basis, or `None` if `v` is
    /// not a lattice member. Solved by back-substitution on the pivots.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if v.len() != self.ambient_dim {
            return Err(Error::Dimension(format!(
                "vector of length {} against a lattice in dimension {}",
                v.len(),
                self.ambient_dim
            )));
        }
        let mut residual = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (i, &p) in self.pivots.iter().enumerate() {
            if residual[..p].iter().any(|x| !x.is_zero()) {
                return Ok(None);
            }
            let pivot = self.basis.get(i, p);
            let (q, r) = residual[p].div_rem(pivot);
            if !r.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                for (c, slot) in residual.iter_mut().enumerate().skip(p) {
                    *slot -= &q * self.basis.get(i, c);
                }
            }
            coords.push(q);
        }
        if residual.iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
        Ok(Some(coords))
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.contains_big(&v)
    }

    pub fn contains_big(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// The Hermite basis as `i64` rows with pivot columns, for fast enumeration.
    pub fn small_basis(&self) -> Option<Vec<(usize, Vec<i64>)>> {
        let rows = self.basis.to_i64_rows()?;
        Some(self.pivots.iter().copied().zip(rows).collect())
    }
}

impl fmt::Display for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lattice of rank {} in Z^{}", self.rank(), self.ambient_dim)
    }
}

/// Index of a sublattice: finite, or infinite when the ranks differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(n) => write!(f, "{n}"),
            LatticeIndex::Infinite => f.write_str("infinite"),
        }
    }
}

/// `[sup : sub]`, computed from the Smith form of the coordinate matrix of
/// `sub`'s basis expressed in `sup`'s basis.
pub fn lattice_index(sub: &IntegerLattice, sup: &IntegerLattice) -> Result<LatticeIndex> {
    if sub.ambient_dim != sup.ambient_dim {
        return Err(Error::Dimension(format!(
            "lattices live in Z^{} and Z^{}",
            sub.ambient_dim, sup.ambient_dim
        )));
    }
    let mut coords = Vec::with_capacity(sub.rank());
    for r in 0..sub.rank() {
        match sup.coordinates(sub.basis.row(r))? {
            Some(c) => coords.push(c),
            None => {
                let row: Vec<String> = sub.basis.row(r).iter().map(ToString::to_string).collect();
                return Err(Error::Containment(format!("generator ({}) not in superlattice", row.join(","))));
            }
        }
    }
    if sub.rank() != sup.rank() {
        return Ok(LatticeIndex::Infinite);
    }
    let m = IntMat::from_big_rows(sup.rank(), coords);
    Ok(LatticeIndex::Finite(snf(&m).nonzero_product().abs()))
}
