use super::hull::Hull;
use super::pointset::{Point, PointSet};
use crate::error::{Error, Result};
use crate::exact::IntegerLattice;
use crate::par::{self, Execution};

/// All points of `shift + lattice` inside the box `[lo, hi]`.
///
/// Walks the Hermite basis row by row: the coefficient of row `i` is bounded
/// by the box at its pivot column, and every column strictly between two
/// pivots is final once the earlier row is fixed, so it is checked right away.
pub fn lattice_points_in_box(
    lattice: &IntegerLattice,
    shift: &[i64],
    lo: &[i64],
    hi: &[i64],
) -> Result<Vec<Point>> {
    let d = lattice.ambient_dim();
    if shift.len() != d || lo.len() != d || hi.len() != d {
        return Err(Error::Dimension("box, shift and lattice dimensions differ".into()));
    }
    let basis = lattice
        .small_basis()
        .ok_or_else(|| Error::Invalid("lattice basis does not fit in 64-bit integers".into()))?;
    let mut out = Vec::new();
    let first_pivot = basis.first().map_or(d, |(p, _)| *p);
    if (0..first_pivot).any(|j| shift[j] < lo[j] || shift[j] > hi[j]) {
        return Ok(out);
    }
    let mut x = shift.to_vec();
    walk(&basis, 0, &mut x, lo, hi, &mut out);
    Ok(out)
}

fn walk(
    basis: &[(usize, Vec<i64>)],
    i: usize,
    x: &mut Point,
    lo: &[i64],
    hi: &[i64],
    out: &mut Vec<Point>,
) {
    let d = x.len();
    if i == basis.len() {
        out.push(x.clone());
        return;
    }
    let (p, row) = &basis[i];
    let p = *p;
    let step = row[p];
    debug_assert!(step > 0);
    let c_lo = (lo[p] - x[p]).div_euclid(step) + i64::from((lo[p] - x[p]).rem_euclid(step) != 0);
    let c_hi = (hi[p] - x[p]).div_euclid(step);
    let next = basis.get(i + 1).map_or(d, |(q, _)| *q);
    for c in c_lo..=c_hi {
        for j in p..d {
            x[j] += c * row[j];
        }
        if (p + 1..next).all(|j| x[j] >= lo[j] && x[j] <= hi[j]) {
            walk(basis, i + 1, x, lo, hi, out);
        }
        for j in p..d {
            x[j] -= c * row[j];
        }
    }
}

impl Hull {
    /// Points of `shift + lattice` inside `scale · conv(a)`.
    pub fn lattice_points(
        &self,
        lattice: &IntegerLattice,
        shift: &[i64],
        scale: i64,
        exec: Execution,
    ) -> Result<Vec<Point>> {
        let (lo, hi) = self.vertices().bounding_box().ok_or(Error::EmptyPointSet)?;
        let lo: Vec<i64> = lo.iter().map(|x| x * scale).collect();
        let hi: Vec<i64> = hi.iter().map(|x| x * scale).collect();
        let candidates = lattice_points_in_box(lattice, shift, &lo, &hi)?;
        Ok(par::filter(exec, candidates, |p| self.contains_scaled(p, scale)))
    }
}

/// All points of `shift + lattice` in `conv(a)`.
///
/// Every point of `a` must itself lie in `shift + lattice`.
pub fn lattice_points_in_hull(a: &PointSet, lattice: &IntegerLattice, shift: &[i64]) -> Result<PointSet> {
    if a.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if shift.len() != a.dim() || lattice.ambient_dim() != a.dim() {
        return Err(Error::Dimension(format!(
            "points in dimension {}, shift of length {}, lattice in dimension {}",
            a.dim(),
            shift.len(),
            lattice.ambient_dim()
        )));
    }
    check_in_coset(a, lattice, shift)?;
    let hull = Hull::new(a)?;
    let pts = hull.lattice_points(lattice, shift, 1, Execution::default())?;
    Ok(PointSet::from_unchecked(a.dim(), pts))
}

pub(crate) fn check_in_coset(a: &PointSet, lattice: &IntegerLattice, shift: &[i64]) -> Result<()> {
    for p in a {
        let diff: Vec<i64> = p.iter().zip(shift).map(|(x, s)| x - s).collect();
        if !lattice.contains(&diff)? {
            return Err(Error::SaturationDomain(format!("{p:?} - {shift:?} is not in the lattice")));
        }
    }
    Ok(())
}
