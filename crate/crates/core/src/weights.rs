//! Weight sets of flags, root saturation, and torus semistability with
//! bracket-monomial witnesses.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{det, GaussianRational, Mat};
use crate::matroid::{indicator, matroid_from_matrix, one_based};
use crate::par::Execution;
use crate::polytope::{
    edges, lattice_points_in_hull, minkowski_sum, HullCertificate, Hull, Point, PointSet, Q,
};
use crate::roots::{fundamental_decomposition, weyl_hull_member, DominantWeight, RootSet, WeightVec};

/// `wt_λ(g)` in GL coordinates: every point has coordinate sum `grading`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSet {
    pub n: usize,
    pub grading: i64,
    pub points: PointSet,
}

impl WeightSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.contains(p)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"n": self.n, "grading": self.grading, "points": self.points.points()})
    }
}

pub(crate) fn check_invertible(g: &Mat) -> Result<()> {
    if !g.is_square() {
        return Err(Error::Dimension(format!("expected a square matrix, got {}x{}", g.rows(), g.cols())));
    }
    if det(g)?.is_zero() {
        return Err(Error::Singular);
    }
    Ok(())
}

fn level_bases(g: &Mat, k: usize) -> Result<Vec<Vec<usize>>> {
    Ok(matroid_from_matrix(g, k)?.bases().to_vec())
}

fn level_points(g: &Mat, k: usize) -> Result<PointSet> {
    let n = g.rows();
    let pts = level_bases(g, k)?.iter().map(|b| indicator(n, b)).collect();
    PointSet::new(n, pts)
}

/// `wt_{ϖ_k}(g)`: indicators of the nonvanishing Plücker coordinates.
pub fn fundamental_weight_set(g: &Mat, k: usize) -> Result<WeightSet> {
    check_invertible(g)?;
    let n = g.rows();
    if k == 0 || k > n {
        return Err(Error::Invalid(format!("level k = {k} outside 1..={n}")));
    }
    Ok(WeightSet { n, grading: k as i64, points: level_points(g, k)? })
}

/// `wt_λ(g)` as the Minkowski sum of `a_k` copies of each `wt_{ϖ_k}(g)`.
pub fn weight_set(g: &Mat, l: &DominantWeight) -> Result<WeightSet> {
    check_invertible(g)?;
    let n = g.rows();
    if l.n() != n {
        return Err(Error::Dimension(format!("λ in Z^{} for a {n}x{n} matrix", l.n())));
    }
    Ok(WeightSet { n, grading: l.size(), points: weight_points(g, l)? })
}

fn weight_points(g: &Mat, l: &DominantWeight) -> Result<PointSet> {
    let n = g.rows();
    let mut acc = PointSet::origin(n);
    for (k, a) in fundamental_decomposition(l).levels() {
        let f = level_points(g, k)?;
        for _ in 0..a {
            acc = minkowski_sum(&acc, &f)?;
        }
    }
    Ok(acc)
}

/// Outcome of the root-saturation test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    /// Hull edges not parallel to any root.
    pub edge_violations: Vec<(Point, Point)>,
    /// Points of `conv(a) ∩ (shift + lattice)` missing from `a`.
    pub missing_points: PointSet,
    pub is_saturated: bool,
}

/// Checks that the hull edges of `a` are root-parallel and that `a` contains
/// every point of `shift + rs.lattice` in its hull.
pub fn root_saturation_check(a: &PointSet, rs: &RootSet, shift: &[i64]) -> Result<SaturationReport> {
    if a.dim() != rs.dim() {
        return Err(Error::Dimension(format!("points in Z^{} against roots in Z^{}", a.dim(), rs.dim())));
    }
    let filled = lattice_points_in_hull(a, rs.lattice(), shift)?;
    let missing_points = filled.difference(a);
    let edge_violations: Vec<(Point, Point)> = edges(a)?
        .into_iter()
        .filter(|(u, v)| !rs.is_root_parallel(&v.iter().zip(u).map(|(x, y)| x - y).collect::<Vec<_>>()))
        .collect();
    let is_saturated = edge_violations.is_empty() && missing_points.is_empty();
    Ok(SaturationReport { edge_violations, missing_points, is_saturated })
}

/// The two memberships compared by the saturation lemma.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationLemmaReport {
    pub big_n: u64,
    /// `N·μ ∈ wt_{Nλ}(g)`.
    pub scaled_member: bool,
    /// `μ ∈ wt_λ(g)`.
    pub member: bool,
}

impl SaturationLemmaReport {
    pub fn agrees(&self) -> bool {
        self.scaled_member == self.member
    }
}

pub fn saturation_lemma_check(
    g: &Mat,
    l: &DominantWeight,
    mu: &WeightVec,
    big_n: u64,
) -> Result<SaturationLemmaReport> {
    if big_n == 0 {
        return Err(Error::Invalid("N must be at least 1".into()));
    }
    if mu.n() != l.n() {
        return Err(Error::Dimension(format!("μ in Z^{} against λ in Z^{}", mu.n(), l.n())));
    }
    if mu.grading() != l.size() {
        return Err(Error::Grading { expected: l.size(), found: mu.grading() });
    }
    let member = weight_set(g, l)?.contains(mu.coords());
    let scaled_member = if big_n == 1 {
        member
    } else {
        let nn = big_n as i64;
        weight_set(g, &l.scale(nn))?.contains(mu.scale(nn).coords())
    };
    Ok(SaturationLemmaReport { big_n, scaled_member, member })
}

/// A product of leading minors `[I]_k` of `g`, one per factor.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BracketMonomial {
    /// `(k, I)` with `I` a 0-based sorted `k`-subset of rows.
    pub factors: Vec<(usize, Vec<usize>)>,
}

#[derive(Serialize)]
struct FactorJson {
    k: usize,
    #[serde(rename = "I")]
    rows: Vec<usize>,
}

impl BracketMonomial {
    pub fn weight(&self, n: usize) -> Point {
        let mut w = vec![0; n];
        for (_, rows) in &self.factors {
            for &r in rows {
                w[r] += 1;
            }
        }
        w
    }

    /// The product of the factor minors.
    pub fn evaluate(&self, g: &Mat) -> GaussianRational {
        self.factors
            .iter()
            .fold(GaussianRational::one(), |acc, (_, rows)| &acc * &g.leading_minor(rows))
    }

    /// Every factor is a nonzero minor and the total weight is `target`.
    pub fn verify(&self, g: &Mat, target: &[i64]) -> bool {
        self.factors.iter().all(|(k, rows)| rows.len() == *k && !g.leading_minor(rows).is_zero())
            && self.weight(g.rows()) == target
    }

    /// Factor counts per level, indexed by `k − 1`.
    pub fn level_counts(&self, n: usize) -> Vec<u64> {
        let mut c = vec![0; n];
        for (k, _) in &self.factors {
            c[k - 1] += 1;
        }
        c
    }

    /// `[{"k": 2, "I": [2, 3]}, …]` with 1-based rows.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(
            self.factors
                .iter()
                .map(|(k, rows)| FactorJson { k: *k, rows: one_based(rows) })
                .collect::<Vec<_>>(),
        )
        .expect("factors serialise")
    }
}

/// Precomputed suffix sums for bracket-monomial searches with fixed
/// factor counts per level.
#[derive(Clone, Debug)]
pub struct WitnessSearch {
    n: usize,
    /// Level index of each factor, in search order.
    seq: Vec<usize>,
    levels: Vec<(usize, Vec<Vec<usize>>)>,
    /// `reachable[j]`: every weight of a product of the factors `j..`.
    reachable: Vec<PointSet>,
}

impl WitnessSearch {
    /// `counts` lists `(k, a_k)`: `a_k` factors at level `k`.
    pub fn new(g: &Mat, counts: &[(usize, u64)]) -> Result<Self> {
        let n = g.rows();
        let mut seq = Vec::new();
        let mut levels = Vec::new();
        let mut level_sets = Vec::new();
        let mut sorted = counts.to_vec();
        sorted.sort_unstable();
        for (k, a) in sorted {
            if a == 0 {
                continue;
            }
            let b = level_bases(g, k)?;
            level_sets.push(PointSet::new(n, b.iter().map(|x| indicator(n, x)).collect())?);
            levels.push((k, b));
            seq.extend(std::iter::repeat_n(levels.len() - 1, a as usize));
        }
        let mut reachable = vec![PointSet::origin(n)];
        for &lvl in seq.iter().rev() {
            let next = minkowski_sum(&level_sets[lvl], reachable.last().expect("nonempty"))?;
            reachable.push(next);
        }
        reachable.reverse();
        Ok(Self { n, seq, levels, reachable })
    }

    /// All weights carried by some product with these factor counts.
    pub fn reachable(&self) -> &PointSet {
        &self.reachable[0]
    }

    /// Chooses factors in increasing `k`, each the lexicographically first
    /// basis that can still be completed to weight `target`.
    pub fn find(&self, target: &[i64]) -> Option<BracketMonomial> {
        if target.len() != self.n || !self.reachable[0].contains(target) {
            return None;
        }
        let mut rem = target.to_vec();
        let mut factors = Vec::with_capacity(self.seq.len());
        for (j, &lvl) in self.seq.iter().enumerate() {
            let (k, bases) = &self.levels[lvl];
            let chosen = bases
                .iter()
                .find(|b| {
                    let mut r = rem.clone();
                    for &e in b.iter() {
                        r[e] -= 1;
                    }
                    self.reachable[j + 1].contains(&r)
                })
                .expect("suffix sums guarantee a completion");
            for &e in chosen {
                rem[e] -= 1;
            }
            factors.push((*k, chosen.clone()));
        }
        Some(BracketMonomial { factors })
    }
}

pub fn find_witness(g: &Mat, counts: &[(usize, u64)], target: &[i64]) -> Result<Option<BracketMonomial>> {
    Ok(WitnessSearch::new(g, counts)?.find(target))
}

/// Outcome of the semistability test for `g` under the `μ`-twisted torus action on `L_λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct SemistabilityReport {
    pub semistable: bool,
    /// `λ − μ` lies in the root lattice.
    pub in_root_lattice_case: bool,
    /// The smallest degree `N` with `N(λ − μ)` in the root lattice, when semistable.
    pub witness_degree: Option<u64>,
    /// The GL weight `N·μ̃` the witness must carry, graded by `N·|λ̃|`.
    pub target: Point,
    pub witness: Option<BracketMonomial>,
    /// Certificate for `μ̃` against `conv(wt_λ(g))`.
    pub hull_certificate: HullCertificate,
    /// `μ̃` failed the Weyl-orbit hull test; the weight set was not built.
    pub weyl_precheck_failed: bool,
}

impl SemistabilityReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "semistable": self.semistable,
            "in_root_lattice_case": self.in_root_lattice_case,
            "witness_degree": self.witness_degree,
            "target": self.target,
            "witness": self.witness.as_ref().map(BracketMonomial::to_json),
            "hull_certificate": self.hull_certificate.to_json(),
            "weyl_precheck_failed": self.weyl_precheck_failed,
        })
    }
}

/// Separates `t / scale` from the permutohedron of `λ̃` by a top-coordinate
/// indicator, or `None` when `t / scale` lies inside.
fn weyl_separator(t: &[i64], scale: i64, l: &DominantWeight) -> Option<HullCertificate> {
    let mut order: Vec<usize> = (0..t.len()).collect();
    order.sort_by(|&a, &b| t[b].cmp(&t[a]).then(a.cmp(&b)));
    let (mut lhs, mut rhs) = (0i64, 0i64);
    for (m, &idx) in order.iter().enumerate() {
        lhs += t[idx];
        rhs += l.coords()[m];
        if lhs > rhs * scale {
            let mut functional = vec![Q::zero(); t.len()];
            for &i in &order[..=m] {
                functional[i] = Q::one();
            }
            return Some(HullCertificate::Outside { functional, bound: Q::from_integer(rhs.into()) });
        }
    }
    None
}

/// `(in root lattice case, degree, degree·μ̃)` for `μ` against `λ̃`.
fn lift(l: &DominantWeight, mu: &WeightVec) -> (bool, i64, Point) {
    let ni = l.n() as i64;
    let diff = l.size() - mu.grading();
    let r = diff.rem_euclid(ni);
    let degree = if r == 0 { 1 } else { ni / ni.gcd(&r) };
    let target = mu.coords().iter().map(|&x| degree * x + degree * diff / ni).collect();
    (r == 0, degree, target)
}

fn precheck_report(l: &DominantWeight, mu: &WeightVec) -> Result<Option<SemistabilityReport>> {
    if l.n() != mu.n() {
        return Err(Error::Dimension(format!("λ in Z^{}, μ in Z^{}", l.n(), mu.n())));
    }
    let (in_root_lattice_case, degree, target) = lift(l, mu);
    Ok(weyl_separator(&target, degree, l).map(|cert| {
        debug_assert!(!weyl_hull_member(&WeightVec::new(target.clone()), &l.scale(degree)).unwrap_or(true));
        SemistabilityReport {
            semistable: false,
            in_root_lattice_case,
            witness_degree: None,
            target,
            witness: None,
            hull_certificate: cert,
            weyl_precheck_failed: true,
        }
    }))
}

/// Weight set, hull and witness tables of one `(g, λ̃)`, shared across
/// many semistability queries.
#[derive(Debug)]
pub struct SemistabilityContext {
    g: Mat,
    l: DominantWeight,
    weights: PointSet,
    hull: Hull,
    searches: Mutex<HashMap<i64, Arc<WitnessSearch>>>,
}

impl SemistabilityContext {
    pub fn new(g: &Mat, l: &DominantWeight) -> Result<Self> {
        let weights = weight_set(g, l)?.points;
        let hull = Hull::new(&weights)?;
        Ok(Self { g: g.clone(), l: l.clone(), weights, hull, searches: Mutex::default() })
    }

    pub fn weight_set(&self) -> &PointSet {
        &self.weights
    }

    fn search(&self, degree: i64) -> Result<Arc<WitnessSearch>> {
        if let Some(s) = self.searches.lock().expect("unpoisoned").get(&degree) {
            return Ok(Arc::clone(s));
        }
        let counts: Vec<(usize, u64)> =
            fundamental_decomposition(&self.l).levels().map(|(k, a)| (k, a * degree as u64)).collect();
        let s = Arc::new(WitnessSearch::new(&self.g, &counts)?);
        self.searches.lock().expect("unpoisoned").insert(degree, Arc::clone(&s));
        Ok(s)
    }

    pub fn check(&self, mu: &WeightVec) -> Result<SemistabilityReport> {
        if let Some(rep) = precheck_report(&self.l, mu)? {
            return Ok(rep);
        }
        let (in_root_lattice_case, degree, target) = lift(&self.l, mu);
        let q: Vec<Q> = target.iter().map(|&x| Q::new(x.into(), degree.into())).collect();
        let hull_certificate = self.hull.certificate(&q);
        let semistable = hull_certificate.is_inside();
        let (witness_degree, witness) = if semistable {
            (Some(degree as u64), self.search(degree)?.find(&target))
        } else {
            (None, None)
        };
        Ok(SemistabilityReport {
            semistable,
            in_root_lattice_case,
            witness_degree,
            target,
            witness,
            hull_certificate,
            weyl_precheck_failed: false,
        })
    }
}

/// Decides semistability by hull membership of `μ̃` in `conv(wt_λ(g))` and
/// builds a bracket-monomial witness at the smallest admissible degree.
pub fn semistable(g: &Mat, l: &DominantWeight, mu: &WeightVec) -> Result<SemistabilityReport> {
    check_invertible(g)?;
    if l.n() != g.rows() {
        return Err(Error::Dimension(format!("λ in Z^{} for a {n}x{n} matrix", l.n(), n = g.rows())));
    }
    if let Some(rep) = precheck_report(l, mu)? {
        return Ok(rep);
    }
    SemistabilityContext::new(g, l)?.check(mu)
}

/// The weights of the coordinates where `v` does not vanish.
pub fn projective_point_weight_set(v: &[GaussianRational], coord_weights: &[Point]) -> Result<PointSet> {
    if v.len() != coord_weights.len() {
        return Err(Error::Dimension(format!("{} coordinates but {} weights", v.len(), coord_weights.len())));
    }
    if v.iter().all(Zero::is_zero) {
        return Err(Error::Invalid("the zero vector is not a projective point".into()));
    }
    let dim = coord_weights[0].len();
    PointSet::new(dim, v.iter().zip(coord_weights).filter(|(x, _)| !x.is_zero()).map(|(_, w)| w.clone()).collect())
}

/// Lattice points of `conv(wt_λ(g))` in the grading slice `λ̃ + Q(R)`.
pub fn hull_slice(ws: &WeightSet, l: &DominantWeight, exec: Execution) -> Result<PointSet> {
    let rs = crate::roots::type_a_roots(ws.n)?;
    let hull = Hull::new(&ws.points)?;
    Ok(PointSet::from_unchecked(ws.n, hull.lattice_points(rs.lattice(), l.coords(), 1, exec)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{b2_roots, type_a_roots};

    fn dw(s: &str) -> DominantWeight {
        s.parse().unwrap()
    }

    fn wv(v: &[i64]) -> WeightVec {
        WeightVec::new(v.to_vec())
    }

    fn vand3() -> Mat {
        Mat::vandermonde(&[1, 2, 3])
    }

    #[test]
    fn fundamental_sets() {
        assert_eq!(fundamental_weight_set(&Mat::identity(3), 1).unwrap().points.points(), &[vec![1, 0, 0]]);
        assert_eq!(fundamental_weight_set(&vand3(), 1).unwrap().len(), 3);
        let w = fundamental_weight_set(&Mat::identity(3), 2).unwrap();
        assert_eq!((w.grading, w.points.points()), (2, &[vec![1, 1, 0]][..]));
        let singular = Mat::from_int_rows(&[vec![1, 2], vec![2, 4]]);
        assert!(matches!(fundamental_weight_set(&singular, 1), Err(Error::Singular)));
    }

    #[test]
    fn weight_set_examples() {
        assert_eq!(weight_set(&vand3(), &dw("0,0,0")).unwrap().points, PointSet::origin(3));
        let w = weight_set(&vand3(), &dw("2,1,0")).unwrap();
        assert_eq!(w.len(), 7);
        assert!(w.points.iter().all(|p| p.iter().sum::<i64>() == 3));
        assert_eq!(weight_set(&Mat::identity(3), &dw("1,1,0")).unwrap().points.points(), &[vec![1, 1, 0]]);
    }

    #[test]
    fn saturation_examples() {
        let l = dw("2,1,0");
        let w = weight_set(&vand3(), &l).unwrap();
        let shifted = w.points.translate(&[-2, -1, 0]).unwrap();
        let rs = type_a_roots(3).unwrap();
        assert!(root_saturation_check(&shifted, &rs, &[0, 0, 0]).unwrap().is_saturated);

        let sq = PointSet::new(2, vec![vec![1, 0], vec![0, 1], vec![0, -1], vec![-1, 0]]).unwrap();
        let rep = root_saturation_check(&sq, &b2_roots(), &[1, 0]).unwrap();
        assert!(!rep.is_saturated);
        assert_eq!(rep.missing_points.points(), &[vec![0, 0]]);
        assert!(rep.edge_violations.is_empty());

        let single = PointSet::new(3, vec![vec![1, -1, 0]]).unwrap();
        assert!(root_saturation_check(&single, &rs, &[0, 0, 0]).unwrap().is_saturated);
        assert!(root_saturation_check(&single, &rs, &[1, 0, 0]).is_err());
    }

    #[test]
    fn saturation_lemma_examples() {
        let l = dw("1,0,0");
        let r = saturation_lemma_check(&vand3(), &l, &wv(&[0, 1, 0]), 2).unwrap();
        assert_eq!((r.scaled_member, r.member), (true, true));
        let r = saturation_lemma_check(&Mat::identity(3), &l, &wv(&[0, 1, 0]), 2).unwrap();
        assert_eq!((r.scaled_member, r.member), (false, false));
        let r = saturation_lemma_check(&vand3(), &l, &wv(&[0, 1, 0]), 1).unwrap();
        assert!(r.agrees());
        assert!(matches!(
            saturation_lemma_check(&vand3(), &l, &wv(&[1, 1, 0]), 2),
            Err(Error::Grading { expected: 1, found: 2 })
        ));
    }

    #[test]
    fn semistable_identity_rejects() {
        let rep = semistable(&Mat::identity(3), &dw("1,0,0"), &wv(&[0, 1, 0])).unwrap();
        assert!(!rep.semistable);
        assert!(rep.witness.is_none());
        let ws = weight_set(&Mat::identity(3), &dw("1,0,0")).unwrap();
        let q: Vec<Q> = [0, 1, 0].iter().map(|&x| Q::from_integer(x.into())).collect();
        assert!(rep.hull_certificate.verify(&q, &ws.points));
        assert!(!rep.hull_certificate.is_inside());
    }

    #[test]
    fn semistable_vandermonde_witness() {
        let g = vand3();
        let rep = semistable(&g, &dw("2,1,0"), &wv(&[1, 1, 1])).unwrap();
        assert!(rep.semistable && rep.in_root_lattice_case);
        assert_eq!(rep.witness_degree, Some(1));
        let w = rep.witness.unwrap();
        assert_eq!(w.factors, vec![(1, vec![0]), (2, vec![1, 2])]);
        assert!(w.verify(&g, &[1, 1, 1]));
        assert!(!w.evaluate(&g).is_zero());
        assert_eq!(w.to_json(), serde_json::json!([{"k": 1, "I": [1]}, {"k": 2, "I": [2, 3]}]));
    }

    #[test]
    fn semistable_trivial_weight() {
        let rep = semistable(&vand3(), &dw("0,0,0"), &wv(&[0, 0, 0])).unwrap();
        assert!(rep.semistable);
        assert_eq!(rep.witness, Some(BracketMonomial::default()));
    }

    #[test]
    fn semistable_normalises_and_lifts_degree() {
        // same SL weight as (1,1,1): shifted by a constant
        let rep = semistable(&vand3(), &dw("2,1,0"), &wv(&[0, 0, 0])).unwrap();
        assert!(rep.semistable && rep.in_root_lattice_case);
        assert_eq!(rep.target, vec![1, 1, 1]);
        // |λ| − |μ| = 1 mod 3: degree 3
        let rep = semistable(&vand3(), &dw("1,0,0"), &wv(&[0, 0, 0])).unwrap();
        assert!(!rep.in_root_lattice_case);
        assert!(rep.semistable);
        assert_eq!(rep.witness_degree, Some(3));
        assert_eq!(rep.target, vec![1, 1, 1]);
        assert!(rep.witness.unwrap().verify(&vand3(), &[1, 1, 1]));
    }

    #[test]
    fn weyl_precheck_certificate() {
        let rep = semistable(&vand3(), &dw("1,0,0"), &wv(&[2, -1, 0])).unwrap();
        assert!(!rep.semistable && rep.weyl_precheck_failed);
        let ws = weight_set(&vand3(), &dw("1,0,0")).unwrap();
        let q: Vec<Q> = [2, -1, 0].iter().map(|&x| Q::from_integer(x.into())).collect();
        assert!(rep.hull_certificate.verify(&q, &ws.points));
    }

    #[test]
    fn so5_point() {
        let v: Vec<GaussianRational> = ["1", "i", "0", "i", "1"].iter().map(|s| s.parse().unwrap()).collect();
        let cw = vec![vec![1, 0], vec![0, 1], vec![0, 0], vec![0, -1], vec![-1, 0]];
        let ws = projective_point_weight_set(&v, &cw).unwrap();
        assert_eq!(ws.points(), &[vec![-1, 0], vec![0, -1], vec![0, 1], vec![1, 0]]);
        let e1: Vec<GaussianRational> = (0..5).map(|i| GaussianRational::from_int(i64::from(i == 0))).collect();
        assert_eq!(projective_point_weight_set(&e1, &cw).unwrap().points(), &[vec![1, 0]]);
        let ones = vec![GaussianRational::one(); 5];
        assert_eq!(projective_point_weight_set(&ones, &cw).unwrap().len(), 5);
        assert!(projective_point_weight_set(&vec![GaussianRational::zero(); 5], &cw).is_err());
    }

    #[test]
    fn hull_slice_matches_weight_set() {
        let l = dw("2,1,0");
        let w = weight_set(&vand3(), &l).unwrap();
        assert_eq!(hull_slice(&w, &l, Execution::Sequential).unwrap(), w.points);
    }
}
