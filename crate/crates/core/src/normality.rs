//! Holes in graded affine semigroups, and the normality check for torus
//! orbit closures in flag varieties.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{IntegerLattice, Mat};
use crate::par::{self, Execution};
use crate::polytope::{lattice_points_in_box, minkowski_sum, Hull, Point, PointSet};
use crate::roots::DominantWeight;
use crate::weights::weight_set;

/// Degree bound used when none is given.
pub const DEFAULT_MAX_DEGREE: usize = 4;

/// Semigroup generators lying on one level `f(x) = s` of a linear grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedGenerators {
    gens: PointSet,
    functional: Vec<i64>,
    s: i64,
}

impl GradedGenerators {
    /// Grades by coordinate sum.
    pub fn new(gens: PointSet) -> Result<Self> {
        let f = vec![1; gens.dim()];
        Self::with_functional(gens, f)
    }

    /// Every generator must satisfy `functional · g = s` with `s > 0`; the
    /// lone exception is the generator set `{0}`.
    pub fn with_functional(gens: PointSet, functional: Vec<i64>) -> Result<Self> {
        let Some(first) = gens.points().first() else {
            return Err(Error::EmptyPointSet);
        };
        if functional.len() != gens.dim() {
            return Err(Error::Dimension(format!(
                "grading functional of length {} for points in Z^{}",
                functional.len(),
                gens.dim()
            )));
        }
        let eval = |p: &[i64]| p.iter().zip(&functional).map(|(a, b)| a * b).sum::<i64>();
        let s = eval(first);
        if let Some(p) = gens.iter().find(|p| eval(p) != s) {
            return Err(Error::Grading { expected: s, found: eval(p) });
        }
        let trivial = gens.len() == 1 && first.iter().all(|&x| x == 0);
        if s <= 0 && !trivial {
            return Err(Error::Invalid(format!("generators must have positive degree, got {s}")));
        }
        Ok(Self { gens, functional, s })
    }

    pub fn dim(&self) -> usize {
        self.gens.dim()
    }

    pub fn gens(&self) -> &PointSet {
        &self.gens
    }

    pub fn grading(&self) -> i64 {
        self.s
    }

    pub fn functional(&self) -> &[i64] {
        &self.functional
    }

    /// The lattice of differences `g − a₀`, so that `Z(A) = a₀ + L` on every slice.
    pub fn difference_lattice(&self) -> Result<IntegerLattice> {
        let a0 = &self.gens.points()[0];
        let diffs: Vec<Point> = self.gens.iter().map(|p| p.iter().zip(a0).map(|(x, y)| x - y).collect()).collect();
        IntegerLattice::from_generators(self.dim(), &diffs)
    }
}

/// All sums of exactly `d` generators.
pub fn degree_slice(gg: &GradedGenerators, d: usize) -> PointSet {
    degree_slices(gg, d).pop().expect("at least degree 0")
}

/// Slices `0..=d`, each built from the previous one.
fn degree_slices(gg: &GradedGenerators, d: usize) -> Vec<PointSet> {
    let mut out = vec![PointSet::origin(gg.dim())];
    for _ in 0..d {
        let next = minkowski_sum(out.last().expect("nonempty"), &gg.gens).expect("same dimension");
        out.push(next);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hole {
    pub degree: usize,
    pub point: Point,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleReport {
    pub checked_up_to: usize,
    pub holes: Vec<Hole>,
    #[serde(rename = "normal_up_to_D")]
    pub normal_up_to_d: bool,
}

impl HoleReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("hole reports serialise")
    }
}

/// Points of `Z(A)` in `d·conv(A)` that are not sums of `d` generators, for
/// every `1 ≤ d ≤ max_degree`.
pub fn holes_up_to(gg: &GradedGenerators, max_degree: usize) -> Result<HoleReport> {
    holes_up_to_with(gg, max_degree, Execution::default())
}

pub fn holes_up_to_with(gg: &GradedGenerators, max_degree: usize, exec: Execution) -> Result<HoleReport> {
    if max_degree == 0 {
        return Err(Error::Invalid("the degree bound must be at least 1".into()));
    }
    let lattice = gg.difference_lattice()?;
    let hull = Hull::new(&gg.gens)?;
    let (lo, hi) = gg.gens.bounding_box().ok_or(Error::EmptyPointSet)?;
    let a0 = &gg.gens.points()[0];
    let slices = degree_slices(gg, max_degree);
    let degrees: Vec<usize> = (1..=max_degree).collect();
    let per_degree = par::map(exec, &degrees, |&d| -> Result<Vec<Hole>> {
        let di = d as i64;
        let shift: Point = a0.iter().map(|x| x * di).collect();
        let lo: Point = lo.iter().map(|x| x * di).collect();
        let hi: Point = hi.iter().map(|x| x * di).collect();
        let candidates = lattice_points_in_box(&lattice, &shift, &lo, &hi)?;
        let slice = &slices[d];
        Ok(candidates
            .into_iter()
            .filter(|p| !slice.contains(p) && hull.contains_scaled(p, di))
            .map(|point| Hole { degree: d, point })
            .collect())
    });
    let mut holes = Vec::new();
    for h in per_degree {
        holes.extend(h?);
    }
    Ok(HoleReport { checked_up_to: max_degree, normal_up_to_d: holes.is_empty(), holes })
}

/// Hole check for the orbit closure of `g` in the flag variety of `λ̃`,
/// whose semigroup is generated by `wt_λ(g)`.
pub fn orbit_closure_normality(g: &Mat, l: &DominantWeight, max_degree: usize) -> Result<HoleReport> {
    let ws = weight_set(g, l)?;
    holes_up_to(&GradedGenerators::new(ws.points)?, max_degree)
}
