use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Point = Vec<i64>;

/// A finite set of integer points in `Z^d`, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
}

#[derive(Deserialize)]
struct PointSetFile {
    dim: usize,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(dim: usize, mut points: Vec<Point>) -> Result<Self> {
        if let Some(bad) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::Dimension(format!(
                "point of length {} in a set of dimension {dim}",
                bad.len()
            )));
        }
        points.sort_unstable();
        points.dedup();
        Ok(Self { dim, points })
    }

    /// Builds from points that are already known to have length `dim`.
    pub(crate) fn from_unchecked(dim: usize, mut points: Vec<Point>) -> Self {
        debug_assert!(points.iter().all(|p| p.len() == dim));
        points.sort_unstable();
        points.dedup();
        Self { dim, points }
    }

    pub fn empty(dim: usize) -> Self {
        Self { dim, points: Vec::new() }
    }

    /// `{0}` in `Z^dim`.
    pub fn origin(dim: usize) -> Self {
        Self { dim, points: vec![vec![0; dim]] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.binary_search_by(|q| q.as_slice().cmp(p)).is_ok()
    }

    /// `{p + shift}`.
    pub fn translate(&self, shift: &[i64]) -> Result<Self> {
        if shift.len() != self.dim {
            return Err(Error::Dimension(format!(
                "shift of length {} for a set of dimension {}",
                shift.len(),
                self.dim
            )));
        }
        // Translation preserves lexicographic order.
        let points = self
            .points
            .iter()
            .map(|p| p.iter().zip(shift).map(|(a, b)| a + b).collect())
            .collect();
        Ok(Self { dim: self.dim, points })
    }

    pub fn negate(&self) -> Self {
        Self::from_unchecked(self.dim, self.points.iter().map(|p| p.iter().map(|x| -x).collect()).collect())
    }

    /// Points in `self` but not in `other`.
    pub fn difference(&self, other: &PointSet) -> Self {
        let points = self.points.iter().filter(|p| !other.contains(p)).cloned().collect();
        Self { dim: self.dim, points }
    }

    pub fn intersection(&self, other: &PointSet) -> Self {
        let points = self.points.iter().filter(|p| other.contains(p)).cloned().collect();
        Self { dim: self.dim, points }
    }

    /// Coordinate-wise `(min, max)`, or `None` when empty.
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        let first = self.points.first()?;
        let mut lo = first.clone();
        let mut hi = first.clone();
        for p in &self.points[1..] {
            for j in 0..self.dim {
                lo[j] = lo[j].min(p[j]);
                hi[j] = hi[j].max(p[j]);
            }
        }
        Some((lo, hi))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PointSetFile = serde_json::from_str(text)?;
        Self::new(file.dim, file.points)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("point sets serialise")
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .points
            .iter()
            .map(|p| format!("({})", p.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{{{}}}", pts.join(", "))
    }
}
