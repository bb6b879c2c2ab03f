//! Brute-force oracles shared by the integration tests.
//!
//! The hull oracle handles point sets in dimension at most 3. It finds the
//! affine hull, projects onto coordinates where the projection is injective,
//! and enumerates supporting hyperplanes through every d-subset of points.

#![allow(dead_code)]

use std::collections::BTreeSet;

use flagweights::exact::IntegerLattice;
use flagweights::polytope::{Point, PointSet};

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn rank(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x = *x * a - p * b;
                }
                let g = m[i].iter().fold(0, |acc, &x| gcd(acc, x));
                if g > 1 {
                    for x in m[i].iter_mut() {
                        *x /= g;
                    }
                }
            }
        }
        r += 1;
    }
    r
}

fn diffs(pts: &[Point], idx: &[usize], base: usize) -> Vec<Vec<i128>> {
    idx.iter()
        .map(|&i| pts[i].iter().zip(&pts[base]).map(|(a, b)| i128::from(a - b)).collect())
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Faces of `conv(pts[idx])` as indices into `pts`.
#[derive(Debug, Default)]
struct Faces {
    vertices: BTreeSet<usize>,
    edges: BTreeSet<(usize, usize)>,
}

/// Affine rank of `pts[idx]` and a set of coordinates on which it projects injectively.
fn affine_frame(pts: &[Point], idx: &[usize]) -> (usize, Vec<usize>) {
    let d = diffs(pts, idx, idx[0]);
    let r = rank(&d);
    let dim = pts[0].len();
    let coords = subsets(dim, r)
        .into_iter()
        .find(|cs| {
            let proj: Vec<Vec<i128>> = d.iter().map(|row| cs.iter().map(|&c| row[c]).collect()).collect();
            rank(&proj) == r
        })
        .expect("some coordinate projection is injective");
    (r, coords)
}

fn proj(p: &Point, coords: &[usize]) -> Vec<i128> {
    coords.iter().map(|&c| i128::from(p[c])).collect()
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalise(mut f: Vec<i128>, mut b: i128) -> (Vec<i128>, i128) {
    let g = f.iter().fold(b, |acc, &x| gcd(acc, x));
    if g > 1 {
        for x in f.iter_mut() {
            *x /= g;
        }
        b /= g;
    }
    (f, b)
}

/// A supporting hyperplane `f·x ≤ b` and the indices of the points on it.
type Facet = ((Vec<i128>, i128), Vec<usize>);

/// Supporting hyperplanes in projected coordinates.
fn facets(pp: &[Vec<i128>], r: usize) -> Vec<Facet> {
    let n = pp.len();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut consider = |f: Vec<i128>, b: i128| {
        if f.iter().all(|&x| x == 0) {
            return;
        }
        for (f, b) in [(f.clone(), b), (f.iter().map(|x| -x).collect(), -b)] {
            if pp.iter().all(|p| dot(&f, p) <= b) {
                let key = normalise(f, b);
                if seen.insert(key.clone()) {
                    let on: Vec<usize> = (0..n).filter(|&i| dot(&key.0, &pp[i]) == key.1).collect();
                    out.push((key, on));
                }
            }
        }
    };
    match r {
        1 => {
            for p in pp {
                consider(vec![1], p[0]);
            }
        }
        2 => {
            for s in subsets(n, 2) {
                let (a, c) = (&pp[s[0]], &pp[s[1]]);
                let f = vec![-(c[1] - a[1]), c[0] - a[0]];
                let b = dot(&f, a);
                consider(f, b);
            }
        }
        3 => {
            for s in subsets(n, 3) {
                let (a, b, c) = (&pp[s[0]], &pp[s[1]], &pp[s[2]]);
                let u: Vec<i128> = (0..3).map(|i| b[i] - a[i]).collect();
                let v: Vec<i128> = (0..3).map(|i| c[i] - a[i]).collect();
                let f = vec![u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]];
                let rhs = dot(&f, a);
                consider(f, rhs);
            }
        }
        _ => {}
    }
    out
}

fn faces(pts: &[Point], idx: &[usize]) -> Faces {
    let (r, coords) = affine_frame(pts, idx);
    let pp: Vec<Vec<i128>> = idx.iter().map(|&i| proj(&pts[i], &coords)).collect();
    let mut out = Faces::default();
    match r {
        0 => {
            out.vertices.insert(idx[0]);
        }
        1 => {
            let lo = (0..idx.len()).min_by_key(|&i| &pp[i]).expect("nonempty");
            let hi = (0..idx.len()).max_by_key(|&i| &pp[i]).expect("nonempty");
            out.vertices.extend([idx[lo], idx[hi]]);
            out.edges.insert(ordered(pts, idx[lo], idx[hi]));
        }
        _ => {
            for (_, on) in facets(&pp, r) {
                let sub: Vec<usize> = on.iter().map(|&i| idx[i]).collect();
                let f = faces(pts, &sub);
                out.edges.extend(f.edges);
                out.vertices.extend(f.vertices);
            }
        }
    }
    out
}

fn ordered(pts: &[Point], i: usize, j: usize) -> (usize, usize) {
    if pts[i] < pts[j] {
        (i, j)
    } else {
        (j, i)
    }
}

pub fn oracle_vertices(a: &PointSet) -> Vec<Point> {
    let pts = a.points();
    let idx: Vec<usize> = (0..pts.len()).collect();
    faces(pts, &idx).vertices.into_iter().map(|i| pts[i].clone()).collect()
}

/// Edges as `(u, v)` with `u < v`, sorted.
pub fn oracle_edges(a: &PointSet) -> Vec<(Point, Point)> {
    let pts = a.points();
    let idx: Vec<usize> = (0..pts.len()).collect();
    let mut e: Vec<(Point, Point)> =
        faces(pts, &idx).edges.into_iter().map(|(i, j)| (pts[i].clone(), pts[j].clone())).collect();
    e.sort();
    e
}

/// Is `num / den` in `conv(a)`?
pub fn oracle_member(a: &PointSet, num: &[i64], den: i64) -> bool {
    assert!(den > 0);
    let pts = a.points();
    let idx: Vec<usize> = (0..pts.len()).collect();
    let (r, coords) = affine_frame(pts, &idx);
    let base = &pts[0];
    let mut rows = diffs(pts, &idx, 0);
    rows.push(num.iter().zip(base).map(|(&x, &b)| i128::from(x) - i128::from(den) * i128::from(b)).collect());
    if rank(&rows) != r {
        return false;
    }
    let q: Vec<i128> = coords.iter().map(|&c| i128::from(num[c])).collect();
    let pp: Vec<Vec<i128>> = pts.iter().map(|p| proj(p, &coords)).collect();
    match r {
        0 => true,
        _ => facets(&pp, r).iter().all(|((f, b), _)| dot(f, &q) <= b * i128::from(den)),
    }
}

/// Holes of the graded semigroup generated by `gens` (coordinate-sum graded)
/// up to degree `max_d`, by enumerating all multisets of generators and
/// scanning the bounding box of every dilate.
pub fn oracle_holes(gens: &PointSet, max_d: usize) -> Vec<(usize, Point)> {
    let dim = gens.dim();
    let pts = gens.points();
    let a0 = &pts[0];
    let diffs: Vec<Point> = pts.iter().map(|p| p.iter().zip(a0).map(|(x, y)| x - y).collect()).collect();
    let lattice = IntegerLattice::from_generators(dim, &diffs).unwrap();
    let (lo, hi) = gens.bounding_box().unwrap();
    let mut out = Vec::new();
    for d in 1..=max_d {
        let mut sums = BTreeSet::new();
        multisets(pts, d, 0, &mut vec![0; dim], &mut sums);
        let di = d as i64;
        let mut x: Point = lo.iter().map(|v| v * di).collect();
        'scan: loop {
            let rel: Point = x.iter().zip(a0).map(|(v, a)| v - a * di).collect();
            if lattice.contains(&rel).unwrap() && oracle_member(gens, &x, di) && !sums.contains(&x) {
                out.push((d, x.clone()));
            }
            let mut j = 0;
            loop {
                if j == dim {
                    break 'scan;
                }
                if x[j] < hi[j] * di {
                    x[j] += 1;
                    break;
                }
                x[j] = lo[j] * di;
                j += 1;
            }
        }
    }
    out.sort();
    out
}

fn multisets(pts: &[Point], left: usize, from: usize, acc: &mut Point, out: &mut BTreeSet<Point>) {
    if left == 0 {
        out.insert(acc.clone());
        return;
    }
    for i in from..pts.len() {
        for (a, x) in acc.iter_mut().zip(&pts[i]) {
            *a += x;
        }
        multisets(pts, left - 1, i, acc, out);
        for (a, x) in acc.iter_mut().zip(&pts[i]) {
            *a -= x;
        }
    }
}

pub fn ps(dim: usize, pts: &[&[i64]]) -> PointSet {
    PointSet::new(dim, pts.iter().map(|p| p.to_vec()).collect()).unwrap()
}

mod self_check {
    use super::*;

    #[test]
    fn oracle_on_known_shapes() {
        let sq = ps(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[1, 1]]);
        assert_eq!(oracle_vertices(&sq).len(), 4);
        assert_eq!(oracle_edges(&sq).len(), 4);
        let cube: Vec<Point> = (0..8).map(|m| (0..3).map(|j| (m >> j) & 1).collect()).collect();
        let cube = PointSet::new(3, cube).unwrap();
        assert_eq!(oracle_vertices(&cube).len(), 8);
        assert_eq!(oracle_edges(&cube).len(), 12);
        assert!(oracle_member(&cube, &[1, 1, 1], 2));
        assert!(!oracle_member(&cube, &[3, 1, 1], 2));
        let tri = ps(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(oracle_edges(&tri).len(), 3);
        assert!(oracle_member(&tri, &[1, 1, 1], 3));
        assert!(!oracle_member(&tri, &[1, 1, 0], 3));
        let planted = ps(2, &[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        assert_eq!(oracle_holes(&planted, 2), vec![(1, vec![2, 2])]);
    }
}
