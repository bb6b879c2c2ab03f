//! Matroids given by explicit basis lists, their polytopes, and the
//! edge/exchange correspondence for matroid polytopes.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Mat};
use crate::par::{self, Execution};
use crate::polytope::{edges, is_parallel, Point, PointSet};

/// A matroid on `{0, …, n−1}` of rank `k`, stored as its sorted list of bases.
///
/// Ground-set elements are 0-based here and 1-based in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    k: usize,
    bases: Vec<Vec<usize>>,
}

impl Matroid {
    /// Builds a basis family. The exchange axiom is not enforced here; see
    /// [`check_exchange`].
    pub fn new(n: usize, k: usize, bases: Vec<Vec<usize>>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::Invalid("a matroid needs at least one basis".into()));
        }
        let mut bases: Vec<Vec<usize>> = bases
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &bases {
            if b.len() != k || b.windows(2).any(|w| w[0] == w[1]) || b.iter().any(|&e| e >= n) {
                return Err(Error::Invalid(format!("{b:?} is not a {k}-subset of a {n}-element ground set")));
            }
        }
        bases.sort_unstable();
        bases.dedup();
        Ok(Self { n, k, bases })
    }

    /// The uniform matroid `U(k, n)`.
    pub fn uniform(k: usize, n: usize) -> Self {
        Self { n, k, bases: k_subsets(n, k) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn bases(&self) -> &[Vec<usize>] {
        &self.bases
    }

    pub fn is_basis(&self, b: &[usize]) -> bool {
        self.bases.binary_search_by(|x| x.as_slice().cmp(b)).is_ok()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: MatroidFile = serde_json::from_str(text)?;
        let bases = f
            .bases
            .into_iter()
            .map(|b| {
                b.into_iter()
                    .map(|e| e.checked_sub(1).ok_or_else(|| Error::Invalid("ground set is 1-based".into())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(f.n, f.k, bases)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MatroidFile {
            n: self.n,
            k: self.k,
            bases: self.bases.iter().map(|b| one_based(b)).collect(),
        })
        .expect("matroids serialise")
    }
}

#[derive(Serialize, Deserialize)]
struct MatroidFile {
    n: usize,
    k: usize,
    bases: Vec<Vec<usize>>,
}

pub(crate) fn one_based(b: &[usize]) -> Vec<usize> {
    b.iter().map(|e| e + 1).collect()
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bs: Vec<String> = self
            .bases
            .iter()
            .map(|b| format!("{{{}}}", one_based(b).iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "M(n={}, k={}): {}", self.n, self.k, bs.join(" "))
    }
}

/// All `k`-subsets of `{0, …, n−1}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Every `k×k` minor on the first `k` columns, in lexicographic row order.
pub fn leading_minors(g: &Mat, k: usize, exec: Execution) -> Vec<(Vec<usize>, GaussianRational)> {
    let subsets = k_subsets(g.rows(), k);
    par::map(exec, &subsets, |rows| (rows.clone(), g.leading_minor(rows)))
}

/// The matroid whose bases are the row sets `I` with a nonzero minor on
/// rows `I` and the first `k` columns of `g`.
pub fn matroid_from_matrix(g: &Mat, k: usize) -> Result<Matroid> {
    if k == 0 || k > g.cols() || k > g.rows() {
        return Err(Error::Invalid(format!("k = {k} out of range for a {}x{} matrix", g.rows(), g.cols())));
    }
    let bases: Vec<Vec<usize>> = leading_minors(g, k, Execution::default())
        .into_iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(rows, _)| rows)
        .collect();
    if bases.is_empty() {
        return Err(Error::NoBases { k });
    }
    Ok(Matroid { n: g.rows(), k, bases })
}

/// A failure of the exchange axiom: no `y ∈ b2 ∖ b1` makes `b1 − x + y` a basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeViolation {
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
    pub x: usize,
}

/// Returns the first violation in lexicographic scan order over `(b1, b2, x)`.
pub fn check_exchange(m: &Matroid) -> Option<ExchangeViolation> {
    let mut swapped = Vec::with_capacity(m.k);
    for b1 in &m.bases {
        for b2 in &m.bases {
            for &x in b1.iter().filter(|x| !b2.contains(x)) {
                let ok = b2.iter().filter(|y| !b1.contains(y)).any(|&y| {
                    swapped.clear();
                    swapped.extend(b1.iter().copied().filter(|&e| e != x));
                    swapped.push(y);
                    swapped.sort_unstable();
                    m.is_basis(&swapped)
                });
                if !ok {
                    return Some(ExchangeViolation { b1: b1.clone(), b2: b2.clone(), x });
                }
            }
        }
    }
    None
}

pub fn indicator(n: usize, b: &[usize]) -> Point {
    let mut v = vec![0; n];
    for &e in b {
        v[e] = 1;
    }
    v
}

/// Indicator vectors of the bases, one point per basis.
pub fn matroid_polytope(m: &Matroid) -> PointSet {
    PointSet::from_unchecked(m.n, m.bases.iter().map(|b| indicator(m.n, b)).collect())
}

fn support(p: &[i64]) -> Vec<usize> {
    p.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect()
}

fn is_type_a_direction(v: &[i64]) -> bool {
    crate::roots::as_type_a_root(v).is_some() || crate::roots::as_type_a_root(&v.iter().map(|x| -x).collect::<Vec<_>>()).is_some()
}

/// Outcome of checking the edge/exchange correspondence on one matroid.
#[derive(Clone, Debug, Default, Serialize)]
pub struct GgmsReport {
    pub vertices: usize,
    pub edges: usize,
    /// Hull edges whose direction is not parallel to any `e_i − e_j`.
    pub non_root_edges: Vec<(Point, Point)>,
    /// Hull edges between bases that differ in more than one element.
    pub edges_without_exchange: Vec<(Vec<usize>, Vec<usize>)>,
    /// Single-exchange basis pairs that are not hull edges.
    pub exchanges_without_edge: Vec<(Vec<usize>, Vec<usize>)>,
    pub pass: bool,
}

pub fn verify_ggms(m: &Matroid) -> Result<GgmsReport> {
    let poly = matroid_polytope(m);
    let es = edges(&poly)?;
    let mut report = GgmsReport { vertices: poly.len(), edges: es.len(), ..Default::default() };
    for (u, v) in &es {
        let dir: Point = v.iter().zip(u).map(|(a, b)| a - b).collect();
        if !is_type_a_direction(&dir) {
            report.non_root_edges.push((u.clone(), v.clone()));
        }
        let (bu, bv) = (support(u), support(v));
        if bu.iter().filter(|e| !bv.contains(e)).count() != 1 {
            report.edges_without_exchange.push((bu, bv));
        }
    }
    for (i, b1) in m.bases.iter().enumerate() {
        for b2 in &m.bases[i + 1..] {
            if b1.iter().filter(|e| !b2.contains(e)).count() == 1 {
                let (u, v) = (indicator(m.n, b1), indicator(m.n, b2));
                let key = if u < v { (u, v) } else { (v, u) };
                if !es.contains(&key) {
                    report.exchanges_without_edge.push((b1.clone(), b2.clone()));
                }
            }
        }
    }
    report.pass = report.non_root_edges.is_empty()
        && report.edges_without_exchange.is_empty()
        && report.exchanges_without_edge.is_empty();
    Ok(report)
}

/// Result of reading a 0/1 point set back as a matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolytopeMatroid {
    Matroid(Matroid),
    /// A hull edge `u → v` whose direction is not a root.
    NotAMatroid { u: Point, v: Point, direction: Point },
    /// All edges are root-parallel yet the exchange axiom fails. Never
    /// produced for correct input; reported rather than hidden.
    ConverseViolation(ExchangeViolation),
}

/// Treats the points as basis indicators: accepted iff every hull edge is
/// parallel to a root, after which the exchange axiom is re-verified.
pub fn matroid_from_root_edge_polytope(a: &PointSet) -> Result<PolytopeMatroid> {
    let Some(first) = a.points().first() else {
        return Err(Error::EmptyPointSet);
    };
    let k: i64 = first.iter().sum();
    for p in a {
        if p.iter().any(|&x| x != 0 && x != 1) {
            return Err(Error::Invalid(format!("{p:?} is not a 0/1 vector")));
        }
        if p.iter().sum::<i64>() != k {
            return Err(Error::Invalid("points have different coordinate sums".into()));
        }
    }
    for (u, v) in edges(a)? {
        let direction: Point = v.iter().zip(&u).map(|(x, y)| x - y).collect();
        if !is_type_a_direction(&direction) {
            return Ok(PolytopeMatroid::NotAMatroid { u, v, direction });
        }
    }
    let m = Matroid::new(a.dim(), k as usize, a.iter().map(|p| support(p)).collect())?;
    Ok(match check_exchange(&m) {
        None => PolytopeMatroid::Matroid(m),
        Some(v) => PolytopeMatroid::ConverseViolation(v),
    })
}

/// Direction test used by callers that only have the roots as points.
pub fn edge_is_root_parallel(u: &[i64], v: &[i64], roots: &PointSet) -> bool {
    let dir: Point = v.iter().zip(u).map(|(a, b)| a - b).collect();
    roots.iter().any(|r| is_parallel(&dir, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, k: usize, bases: &[&[usize]]) -> Matroid {
        Matroid::new(n, k, bases.iter().map(|b| b.iter().map(|e| e - 1).collect()).collect()).unwrap()
    }

    #[test]
    fn subsets_in_order() {
        assert_eq!(k_subsets(4, 2).len(), 6);
        assert_eq!(k_subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(k_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(k_subsets(2, 3).is_empty());
    }

    #[test]
    fn from_matrix_examples() {
        let id = matroid_from_matrix(&Mat::identity(3), 2).unwrap();
        assert_eq!(id.bases(), &[vec![0, 1]]);
        let v = matroid_from_matrix(&Mat::vandermonde(&[1, 2, 3]), 2).unwrap();
        assert_eq!(v.bases().len(), 3);
        let full = matroid_from_matrix(&Mat::identity(4), 4).unwrap();
        assert_eq!(full.bases(), &[vec![0, 1, 2, 3]]);
    }

    #[test]
    fn from_matrix_rank_deficient() {
        let g = Mat::from_int_rows(&[vec![1, 2, 0], vec![2, 4, 0], vec![3, 6, 1]]);
        assert!(matches!(matroid_from_matrix(&g, 2), Err(Error::NoBases { k: 2 })));
    }

    #[test]
    fn exchange_examples() {
        assert_eq!(check_exchange(&Matroid::uniform(2, 4)), None);
        let bad = fam(4, 2, &[&[1, 2], &[3, 4]]);
        assert_eq!(check_exchange(&bad), Some(ExchangeViolation { b1: vec![0, 1], b2: vec![2, 3], x: 0 }));
        assert_eq!(check_exchange(&fam(3, 2, &[&[1, 3]])), None);
    }

    #[test]
    fn polytope_examples() {
        assert_eq!(matroid_polytope(&fam(3, 1, &[&[2]])).len(), 1);
        let u13 = matroid_polytope(&Matroid::uniform(1, 3));
        assert_eq!(u13.points(), &[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        let u24 = matroid_polytope(&Matroid::uniform(2, 4));
        assert_eq!(crate::polytope::vertices(&u24).unwrap().len(), 6);
    }

    #[test]
    fn ggms_examples() {
        let r = verify_ggms(&Matroid::uniform(2, 4)).unwrap();
        assert!(r.pass);
        assert_eq!(r.edges, 12);
        let single = verify_ggms(&fam(4, 2, &[&[1, 2]])).unwrap();
        assert!(single.pass);
        assert_eq!(single.edges, 0);
    }

    #[test]
    fn converse_examples() {
        let bad = matroid_polytope(&fam(4, 2, &[&[1, 2], &[3, 4]]));
        match matroid_from_root_edge_polytope(&bad).unwrap() {
            PolytopeMatroid::NotAMatroid { direction, .. } => {
                assert!(direction == vec![1, 1, -1, -1] || direction == vec![-1, -1, 1, 1]);
            }
            other => panic!("expected rejection, got {other:?}"),
        }
        let u24 = matroid_polytope(&Matroid::uniform(2, 4));
        assert_eq!(
            matroid_from_root_edge_polytope(&u24).unwrap(),
            PolytopeMatroid::Matroid(Matroid::uniform(2, 4))
        );
        let pt = PointSet::new(3, vec![vec![1, 0, 1]]).unwrap();
        assert_eq!(
            matroid_from_root_edge_polytope(&pt).unwrap(),
            PolytopeMatroid::Matroid(fam(3, 2, &[&[1, 3]]))
        );
        let mixed = PointSet::new(3, vec![vec![1, 0, 1], vec![1, 0, 0]]).unwrap();
        assert!(matroid_from_root_edge_polytope(&mixed).is_err());
        let nonbinary = PointSet::new(2, vec![vec![2, 0]]).unwrap();
        assert!(matroid_from_root_edge_polytope(&nonbinary).is_err());
    }

    #[test]
    fn json_is_one_based() {
        let m = Matroid::from_json(r#"{"n":3,"k":2,"bases":[[1,2],[2,3]]}"#).unwrap();
        assert_eq!(m.bases(), &[vec![0, 1], vec![1, 2]]);
        assert_eq!(m.to_json(), serde_json::json!({"n": 3, "k": 2, "bases": [[1, 2], [2, 3]]}));
        assert!(Matroid::from_json(r#"{"n":3,"k":2,"bases":[[0,2]]}"#).is_err());
    }
}
