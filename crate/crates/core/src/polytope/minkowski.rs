use std::collections::HashSet;

use super::pointset::{Point, PointSet};
use crate::error::{Error, Result};

/// `A + B = {a + b}`, deduplicated.
pub fn minkowski_sum(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension(format!(
            "Minkowski sum of sets in dimensions {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    let mut seen: HashSet<Point> = HashSet::with_capacity(a.len() * b.len());
    for p in a {
        for q in b {
            seen.insert(p.iter().zip(q).map(|(x, y)| x + y).collect());
        }
    }
    Ok(PointSet::from_unchecked(a.dim(), seen.into_iter().collect()))
}

/// `m`-fold Minkowski sum of `a` with itself; `{0}` for `m = 0`.
pub fn dilate(a: &PointSet, m: usize) -> PointSet {
    let mut acc = PointSet::origin(a.dim());
    for _ in 0..m {
        acc = minkowski_sum(&acc, a).expect("same dimension");
    }
    acc
}
