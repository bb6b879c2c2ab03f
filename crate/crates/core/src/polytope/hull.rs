//! LP-based face detection: hull membership, vertices and edges.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::lp::{q, solve_standard, StdOutcome, Q};
use super::pointset::{Point, PointSet};
use crate::error::{Error, Result};

/// Witness for a hull-membership answer.
#[derive(Clone, Debug, PartialEq)]
pub enum HullCertificate {
    /// `q = Σ w_p · p` with `w_p > 0`, `Σ w_p = 1`.
    Inside { weights: Vec<(Point, Q)> },
    /// `f·p ≤ bound` for every point of the set while `f·q > bound`.
    Outside { functional: Vec<Q>, bound: Q },
}

impl HullCertificate {
    pub fn is_inside(&self) -> bool {
        matches!(self, HullCertificate::Inside { .. })
    }

    /// Re-checks the certificate against `q` and the point set it was issued for.
    pub fn verify(&self, q: &[Q], a: &PointSet) -> bool {
        match self {
            HullCertificate::Inside { weights } => {
                let mut acc = vec![Q::zero(); q.len()];
                let mut total = Q::zero();
                for (p, w) in weights {
                    if !a.contains(p) || !w.is_positive() {
                        return false;
                    }
                    for (slot, &x) in acc.iter_mut().zip(p) {
                        *slot += w * super::lp::q(x);
                    }
                    total += w;
                }
                total.is_one() && acc.as_slice() == q
            }
            HullCertificate::Outside { functional, bound } => {
                dot_q(functional, q) > *bound
                    && a.iter().all(|p| dot_qi(functional, p) <= *bound)
            }
        }
    }
}

impl HullCertificate {
    /// `{"inside": true, "weights": [{"point", "weight"}]}` or
    /// `{"inside": false, "functional", "bound"}`, rationals as strings.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            HullCertificate::Inside { weights } => serde_json::json!({
                "inside": true,
                "weights": weights
                    .iter()
                    .map(|(p, w)| serde_json::json!({"point": p, "weight": w.to_string()}))
                    .collect::<Vec<_>>(),
            }),
            HullCertificate::Outside { functional, bound } => serde_json::json!({
                "inside": false,
                "functional": functional.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "bound": bound.to_string(),
            }),
        }
    }
}

pub(crate) fn to_q(p: &[i64]) -> Vec<Q> {
    p.iter().map(|&x| q(x)).collect()
}

fn dot_q(f: &[Q], x: &[Q]) -> Q {
    f.iter().zip(x).map(|(a, b)| a * b).sum()
}

fn dot_qi(f: &[Q], p: &[i64]) -> Q {
    f.iter().zip(p).filter(|(_, &x)| x != 0).map(|(a, &x)| a * q(x)).sum()
}

/// Solves the barycentric feasibility problem `Σ λ_p p = q, Σ λ_p = 1, λ ≥ 0`.
fn barycentric(target: &[Q], pts: &[Point]) -> HullCertificate {
    let d = target.len();
    let mut a: Vec<Vec<Q>> = (0..d).map(|j| pts.iter().map(|p| q(p[j])).collect()).collect();
    a.push(vec![Q::one(); pts.len()]);
    let mut b = target.to_vec();
    b.push(Q::one());
    let c = vec![Q::zero(); pts.len()];
    match solve_standard(&a, &b, &c) {
        StdOutcome::Optimal { x, .. } => HullCertificate::Inside {
            weights: pts
                .iter()
                .zip(x)
                .filter(|(_, w)| w.is_positive())
                .map(|(p, w)| (p.clone(), w))
                .collect(),
        },
        StdOutcome::Infeasible { farkas } => {
            // f·p + y0 ≤ 0 on the set and f·q + y0 > 0
            let bound = -farkas[d].clone();
            let mut functional = farkas;
            functional.truncate(d);
            HullCertificate::Outside { functional, bound }
        }
        StdOutcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
    }
}

fn check_query(q: &[Q], a: &PointSet) -> Result<()> {
    if a.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if q.len() != a.dim() {
        return Err(Error::Dimension(format!(
            "query of length {} against points of dimension {}",
            q.len(),
            a.dim()
        )));
    }
    Ok(())
}

/// True iff `q` is a convex combination of the points of `a`.
pub fn hull_member(q: &[Q], a: &PointSet) -> Result<bool> {
    Ok(hull_certificate(q, a)?.is_inside())
}

pub fn hull_certificate(q: &[Q], a: &PointSet) -> Result<HullCertificate> {
    check_query(q, a)?;
    Ok(barycentric(q, a.points()))
}

/// True iff `conv(a)` and `conv(b)` share a point.
pub fn hulls_intersect(a: &PointSet, b: &PointSet) -> Result<bool> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if a.dim() != b.dim() {
        return Err(Error::Dimension(format!("hulls in dimensions {} and {}", a.dim(), b.dim())));
    }
    let (na, nb) = (a.len(), b.len());
    let mut rows: Vec<Vec<Q>> = (0..a.dim())
        .map(|j| a.iter().map(|p| q(p[j])).chain(b.iter().map(|p| q(-p[j]))).collect())
        .collect();
    rows.push((0..na + nb).map(|i| q(i64::from(i < na))).collect());
    rows.push((0..na + nb).map(|i| q(i64::from(i >= na))).collect());
    let mut rhs = vec![Q::zero(); a.dim()];
    rhs.extend([Q::one(), Q::one()]);
    let c = vec![Q::zero(); na + nb];
    Ok(matches!(solve_standard(&rows, &rhs, &c), StdOutcome::Optimal { .. }))
}

/// Scales a rational functional to a primitive integer one with the same sign pattern.
fn integral_functional(f: &[Q]) -> Vec<BigInt> {
    let l = f.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = f.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

fn dot_int(f: &[BigInt], p: &[i64]) -> BigInt {
    f.iter().zip(p).filter(|(_, &x)| x != 0).map(|(a, &x)| a * BigInt::from(x)).sum()
}

/// Vertices of `conv(a)`: the points of `a` not in the hull of the others.
///
/// Points that are the midpoint of two other points are discarded first.
/// The rest go through an incremental extreme-point search: a candidate
/// outside the hull of the vertices found so far yields a separating
/// functional, whose lexicographically largest maximiser over `a` is a new
/// vertex.
pub fn vertices(a: &PointSet) -> Result<PointSet> {
    if a.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if a.len() <= 2 {
        return Ok(a.clone());
    }
    let pts = a.points();
    let set: HashSet<&[i64]> = pts.iter().map(Vec::as_slice).collect();
    let mut mirror = vec![0i64; a.dim()];
    let candidates: Vec<&Point> = pts
        .iter()
        .filter(|p| {
            !pts.iter().any(|o| {
                if o == *p {
                    return false;
                }
                for j in 0..p.len() {
                    mirror[j] = 2 * p[j] - o[j];
                }
                set.contains(mirror.as_slice())
            })
        })
        .collect();

    let mut found: Vec<Point> = Vec::new();
    for p in &candidates {
        loop {
            if found.contains(p) {
                break;
            }
            let functional = if found.is_empty() {
                None
            } else {
                match barycentric(&to_q(p), &found) {
                    HullCertificate::Inside { .. } => break,
                    HullCertificate::Outside { functional, .. } => Some(integral_functional(&functional)),
                }
            };
            let best = match functional {
                None => (*candidates.iter().max().expect("nonempty")).clone(),
                Some(f) => {
                    let mut best: Option<(BigInt, &Point)> = None;
                    for c in &candidates {
                        let v = dot_int(&f, c);
                        let better = match &best {
                            None => true,
                            Some((bv, bp)) => v > *bv || (v == *bv && *c > *bp),
                        };
                        if better {
                            best = Some((v, c));
                        }
                    }
                    best.expect("nonempty").1.clone()
                }
            };
            found.push(best);
        }
    }
    Ok(PointSet::from_unchecked(a.dim(), found))
}

/// An edge `{u, v}` of `conv(a)` with a functional `f` satisfying
/// `f(u) = f(v) ≥ f(w) + 1` for every other vertex `w`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Edge {
    pub u: Point,
    pub v: Point,
    #[serde(skip)]
    pub functional: Vec<Q>,
}

impl Edge {
    pub fn direction(&self) -> Point {
        self.v.iter().zip(&self.u).map(|(a, b)| a - b).collect()
    }
}

/// Edges of `conv(a)` as unordered vertex pairs `(u, v)` with `u < v`.
pub fn edges(a: &PointSet) -> Result<Vec<(Point, Point)>> {
    Ok(edges_with_functionals(a)?.into_iter().map(|e| (e.u, e.v)).collect())
}

/// Edge detection by maximising the separation margin.
///
/// The margin problem `max δ: f(u) = f(v) ≥ f(w) + δ` is solved through its
/// dual, which asks whether the midpoint of `u` and `v` can be written using
/// any other vertex; the optimal duals are the separating functional. Pairs
/// whose sum is also the sum of another vertex pair are rejected without LP.
pub fn edges_with_functionals(a: &PointSet) -> Result<Vec<Edge>> {
    let verts = vertices(a)?;
    let vs = verts.points();
    let n = vs.len();
    let d = a.dim();
    if n < 2 {
        return Ok(Vec::new());
    }
    let mut sums: HashMap<Point, u32> = HashMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let s: Point = vs[i].iter().zip(&vs[j]).map(|(x, y)| x + y).collect();
            *sums.entry(s).or_default() += 1;
        }
    }
    let mut cols: Vec<Vec<Q>> = (0..d).map(|j| vs.iter().map(|p| q(p[j])).collect()).collect();
    cols.push(vec![Q::one(); n]);

    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let s: Point = vs[i].iter().zip(&vs[j]).map(|(x, y)| x + y).collect();
            if sums[&s] > 1 {
                continue;
            }
            let mut b = to_q(&s);
            b.push(q(2));
            let c: Vec<Q> = (0..n).map(|k| if k == i || k == j { Q::zero() } else { -Q::one() }).collect();
            let StdOutcome::Optimal { value, duals, .. } = solve_standard(&cols, &b, &c) else {
                unreachable!("the midpoint of two vertices is always representable");
            };
            if value.is_zero() {
                let mut functional = duals;
                functional.truncate(d);
                out.push(Edge { u: vs[i].clone(), v: vs[j].clone(), functional });
            }
        }
    }
    Ok(out)
}

/// Subset-indicator functionals are evaluated only up to this dimension.
const SUBSET_FILTER_MAX_DIM: usize = 10;

/// A point set prepared for many membership queries against its hull.
#[derive(Clone, Debug)]
pub struct Hull {
    dim: usize,
    vertices: PointSet,
    /// For each nonempty coordinate subset (bitmask), `(max, min)` of the
    /// coordinate sum over the vertices. Violating one proves non-membership.
    subset_bounds: Vec<(i64, i64)>,
}

impl Hull {
    pub fn new(a: &PointSet) -> Result<Self> {
        let vertices = vertices(a)?;
        let dim = a.dim();
        let mut subset_bounds = Vec::new();
        if dim <= SUBSET_FILTER_MAX_DIM {
            subset_bounds.reserve(1 << dim);
            subset_bounds.push((0, 0));
            for mask in 1usize..(1 << dim) {
                let mut hi = i64::MIN;
                let mut lo = i64::MAX;
                for v in vertices.iter() {
                    let s: i64 = (0..dim).filter(|j| mask >> j & 1 == 1).map(|j| v[j]).sum();
                    hi = hi.max(s);
                    lo = lo.min(s);
                }
                subset_bounds.push((hi, lo));
            }
        }
        Ok(Self { dim, vertices, subset_bounds })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &PointSet {
        &self.vertices
    }

    /// Finds a subset functional separating `p / scale` from the hull.
    fn subset_violation(&self, p: &[i64], scale: i64) -> Option<(usize, bool)> {
        for mask in 1..self.subset_bounds.len() {
            let s: i64 = (0..self.dim).filter(|j| mask >> j & 1 == 1).map(|j| p[j]).sum();
            let (hi, lo) = self.subset_bounds[mask];
            if s > hi * scale {
                return Some((mask, true));
            }
            if s < lo * scale {
                return Some((mask, false));
            }
        }
        None
    }

    /// Membership of the rational point `p / scale` in the hull.
    pub fn contains_scaled(&self, p: &[i64], scale: i64) -> bool {
        assert!(scale > 0, "scale must be positive");
        if self.subset_violation(p, scale).is_some() {
            return false;
        }
        if scale == 1 && self.vertices.contains(p) {
            return true;
        }
        let target: Vec<Q> = p.iter().map(|&x| Q::new(x.into(), scale.into())).collect();
        barycentric(&target, self.vertices.points()).is_inside()
    }

    pub fn contains(&self, target: &[Q]) -> bool {
        self.certificate(target).is_inside()
    }

    pub fn certificate(&self, target: &[Q]) -> HullCertificate {
        assert_eq!(target.len(), self.dim, "query dimension");
        if target.iter().all(|x| x.is_integer()) {
            let p: Vec<i64> = target.iter().filter_map(|x| num_traits::ToPrimitive::to_i64(&x.to_integer())).collect();
            if p.len() == self.dim {
                if let Some((mask, upper)) = self.subset_violation(&p, 1) {
                    let sign = if upper { 1 } else { -1 };
                    let functional = (0..self.dim)
                        .map(|j| if mask >> j & 1 == 1 { q(sign) } else { Q::zero() })
                        .collect();
                    let (hi, lo) = self.subset_bounds[mask];
                    let bound = if upper { q(hi) } else { q(-lo) };
                    return HullCertificate::Outside { functional, bound };
                }
            }
        }
        barycentric(target, self.vertices.points())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(d: usize, pts: &[&[i64]]) -> PointSet {
        PointSet::new(d, pts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    fn qr(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn hull_intersection() {
        let a = PointSet::new(2, vec![vec![0, 0], vec![2, 2]]).unwrap();
        let b = PointSet::new(2, vec![vec![0, 2], vec![2, 0]]).unwrap();
        let c = PointSet::new(2, vec![vec![3, 0], vec![3, 5]]).unwrap();
        assert!(hulls_intersect(&a, &b).unwrap());
        assert!(!hulls_intersect(&a, &c).unwrap());
        assert!(hulls_intersect(&a, &a).unwrap());
    }

    #[test]
    fn membership_examples() {
        let tri = ps(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(hull_member(&to_q(&[1, 0]), &tri).unwrap());
        assert!(hull_member(&[qr(1, 3), qr(1, 3)], &tri).unwrap());
        let cert = hull_certificate(&to_q(&[1, 1]), &tri).unwrap();
        assert!(!cert.is_inside());
        assert!(cert.verify(&to_q(&[1, 1]), &tri));
        let inside = hull_certificate(&[qr(1, 3), qr(1, 3)], &tri).unwrap();
        assert!(inside.verify(&[qr(1, 3), qr(1, 3)], &tri));
    }

    #[test]
    fn membership_errors() {
        assert!(matches!(hull_member(&[], &PointSet::empty(0)), Err(Error::EmptyPointSet)));
        let tri = ps(2, &[&[0, 0], &[1, 0]]);
        assert!(matches!(hull_member(&to_q(&[1]), &tri), Err(Error::Dimension(_))));
    }

    #[test]
    fn vertex_examples() {
        let line = ps(2, &[&[0, 0], &[1, 0], &[2, 0]]);
        assert_eq!(vertices(&line).unwrap(), ps(2, &[&[0, 0], &[2, 0]]));
        let sq = ps(2, &[&[0, 0], &[0, 2], &[2, 0], &[2, 2], &[1, 1]]);
        assert_eq!(vertices(&sq).unwrap(), ps(2, &[&[0, 0], &[0, 2], &[2, 0], &[2, 2]]));
        // center not a lattice midpoint of the corners of this square
        let sq = ps(2, &[&[0, 0], &[0, 3], &[3, 0], &[3, 3], &[1, 2]]);
        assert_eq!(vertices(&sq).unwrap().len(), 4);
        let one = ps(3, &[&[1, 2, 3]]);
        assert_eq!(vertices(&one).unwrap(), one);
    }

    #[test]
    fn edge_examples() {
        let sq = ps(2, &[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]);
        let e = edges(&sq).unwrap();
        assert_eq!(e.len(), 4);
        assert!(!e.contains(&(vec![0, 0], vec![1, 1])));
        assert!(!e.contains(&(vec![0, 1], vec![1, 0])));

        let line = ps(2, &[&[0, 0], &[1, 0], &[2, 0]]);
        assert_eq!(edges(&line).unwrap(), vec![(vec![0, 0], vec![2, 0])]);

        let oct = ps(
            3,
            &[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]],
        );
        assert_eq!(edges(&oct).unwrap().len(), 12);
    }

    #[test]
    fn edge_functionals_separate() {
        let pent = ps(2, &[&[0, 0], &[2, 0], &[3, 2], &[1, 3], &[-1, 2], &[1, 1]]);
        let verts = vertices(&pent).unwrap();
        let es = edges_with_functionals(&pent).unwrap();
        assert_eq!(es.len(), 5);
        for e in &es {
            let fu = dot_qi(&e.functional, &e.u);
            assert_eq!(fu, dot_qi(&e.functional, &e.v));
            for w in verts.iter().filter(|w| **w != e.u && **w != e.v) {
                assert!(dot_qi(&e.functional, w) + Q::one() <= fu);
            }
        }
    }

    #[test]
    fn hull_struct_prefilter() {
        let tri = ps(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 0]]);
        let h = Hull::new(&tri).unwrap();
        assert_eq!(h.vertices().len(), 3);
        assert!(h.contains_scaled(&[1, 1, 0], 1));
        assert!(h.contains_scaled(&[2, 2, 2], 3));
        assert!(!h.contains_scaled(&[3, 0, 0], 1));
        assert!(!h.contains_scaled(&[1, 1, 1], 1));
        let cert = h.certificate(&to_q(&[3, 0, -1]));
        assert!(cert.verify(&to_q(&[3, 0, -1]), &tri));
    }
}
