//! Type-A root and weight conventions, plus the B2 root system used as a
//! counterexample fixture.
//!
//! Weights of `SL(n)` are handled through `GL(n)` lifts in `Z^n`: two integer
//! vectors represent the same `SL(n)` weight iff they differ by a constant
//! vector, and the coordinate sum is the grading.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{lattice_index, snf, IntMat, IntegerLattice, LatticeIndex};
use crate::polytope::{Point, PointSet};

/// An integer weight with its grading `Σ coords`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightVec {
    coords: Vec<i64>,
}

impl WeightVec {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn zero(n: usize) -> Self {
        Self { coords: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    pub fn grading(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn shift(&self, c: i64) -> Self {
        Self::new(self.coords.iter().map(|x| x + c).collect())
    }

    pub fn scale(&self, m: i64) -> Self {
        Self::new(self.coords.iter().map(|x| x * m).collect())
    }

    /// The representative of the same `SL(n)` weight with grading `g`, if
    /// one exists (`g - grading` divisible by `n`).
    pub fn normalize_to_grading(&self, g: i64) -> Option<Self> {
        let n = self.n() as i64;
        let diff = g - self.grading();
        (n > 0 && diff % n == 0).then(|| self.shift(diff / n))
    }

    /// Same `SL(n)` weight: differ by a constant vector.
    pub fn same_sl_weight(&self, other: &Self) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let Some(c) = other.coords.first().zip(self.coords.first()).map(|(a, b)| a - b) else {
            return true;
        };
        self.coords.iter().zip(&other.coords).all(|(a, b)| b - a == c)
    }
}

impl FromStr for WeightVec {
    type Err = Error;

    /// Comma-separated integers, e.g. `"1,1,-2"`.
    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad weight entry {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coords))
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A dominant `GL(n)` lift: weakly decreasing, nonnegative, last entry 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DominantWeight {
    lambda: WeightVec,
}

impl DominantWeight {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Invalid("dominant weight needs at least one coordinate".into()));
        }
        if coords.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{coords:?} is not weakly decreasing")));
        }
        if *coords.last().expect("nonempty") != 0 {
            return Err(Error::Invalid(format!("{coords:?} must end in 0")));
        }
        Ok(Self { lambda: WeightVec::new(coords) })
    }

    /// The zero weight in `Z^n`.
    pub fn zero(n: usize) -> Self {
        Self { lambda: WeightVec::zero(n) }
    }

    /// Builds `Σ a_k ϖ̃_k` in `Z^n`.
    pub fn from_decomposition(n: usize, d: &FundDecomp) -> Result<Self> {
        Self::new(d.reconstruct(n))
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    pub fn weight(&self) -> &WeightVec {
        &self.lambda
    }

    pub fn coords(&self) -> &[i64] {
        self.lambda.coords()
    }

    /// `|λ̃|`.
    pub fn size(&self) -> i64 {
        self.lambda.grading()
    }

    pub fn scale(&self, m: i64) -> Self {
        assert!(m >= 0, "dominant weights scale by nonnegative integers");
        Self { lambda: self.lambda.scale(m) }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::Dimension(format!("weights in Z^{} and Z^{}", self.n(), other.n())));
        }
        Self::new(self.coords().iter().zip(other.coords()).map(|(a, b)| a + b).collect())
    }
}

impl FromStr for DominantWeight {
    type Err = Error;

    /// Partition strings such as `"2,1,0"`.
    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.parse::<WeightVec>()?.into_coords())
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.lambda.fmt(f)
    }
}

/// Coefficients `a_1 … a_{n-1}` of `λ̃ = Σ a_k ϖ̃_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FundDecomp {
    pub a: Vec<u64>,
}

impl FundDecomp {
    pub fn reconstruct(&self, n: usize) -> Vec<i64> {
        let mut out = vec![0i64; n];
        for (k, &ak) in self.a.iter().enumerate() {
            for slot in out.iter_mut().take(k + 1) {
                *slot += ak as i64;
            }
        }
        out
    }

    /// `(level k, multiplicity a_k)` for every `a_k > 0`, `k` 1-based.
    pub fn levels(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.a.iter().enumerate().filter(|(_, &a)| a > 0).map(|(k, &a)| (k + 1, a))
    }
}

/// `ϖ̃_k = e_1 + … + e_k` in `Z^n`.
pub fn fundamental_weight(n: usize, k: usize) -> Vec<i64> {
    (0..n).map(|i| i64::from(i < k)).collect()
}

pub fn fundamental_decomposition(l: &DominantWeight) -> FundDecomp {
    let c = l.coords();
    let a = (0..c.len().saturating_sub(1)).map(|k| (c[k] - c[k + 1]) as u64).collect();
    FundDecomp { a }
}

/// Roots closed under negation, with the lattice they span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    roots: PointSet,
    lattice: IntegerLattice,
}

impl RootSet {
    pub fn new(roots: PointSet, lattice: IntegerLattice) -> Result<Self> {
        for r in &roots {
            let neg: Point = r.iter().map(|x| -x).collect();
            if !roots.contains(&neg) {
                return Err(Error::Invalid(format!("root set not closed under negation at {r:?}")));
            }
            if !lattice.contains(r)? {
                return Err(Error::Invalid(format!("root {r:?} outside its lattice")));
            }
        }
        Ok(Self { roots, lattice })
    }

    pub fn dim(&self) -> usize {
        self.roots.dim()
    }

    pub fn roots(&self) -> &PointSet {
        &self.roots
    }

    pub fn lattice(&self) -> &IntegerLattice {
        &self.lattice
    }

    pub fn is_root_parallel(&self, v: &[i64]) -> bool {
        crate::polytope::parallel_to_any(v, &self.roots)
    }
}

/// `{e_i − e_j : i ≠ j}` in `Z^n`, spanning `{v : Σ v = 0}`.
pub fn type_a_roots(n: usize) -> Result<RootSet> {
    if n < 2 {
        return Err(Error::Invalid(format!("type A roots need n >= 2, got {n}")));
    }
    let mut roots = Vec::with_capacity(n * (n - 1));
    for i in 0..n {
        for j in 0..n {
            if i != j {
                roots.push(root_vector(n, i, j));
            }
        }
    }
    let simple: Vec<Point> = (0..n - 1).map(|i| root_vector(n, i, i + 1)).collect();
    let lattice = IntegerLattice::from_generators(n, &simple)?;
    RootSet::new(PointSet::from_unchecked(n, roots), lattice)
}

/// The B2 roots `±e1, ±e2, ±e1 ± e2` in `Z^2`; their lattice is `Z^2`.
pub fn b2_roots() -> RootSet {
    let roots = vec![
        vec![1, 0],
        vec![-1, 0],
        vec![0, 1],
        vec![0, -1],
        vec![1, 1],
        vec![-1, -1],
        vec![1, -1],
        vec![-1, 1],
    ];
    let lattice = IntegerLattice::from_generators(2, &roots).expect("dimension 2");
    RootSet::new(PointSet::from_unchecked(2, roots), lattice).expect("B2 is closed under negation")
}

/// `e_i − e_j` (0-based) in `Z^n`.
pub fn root_vector(n: usize, i: usize, j: usize) -> Point {
    let mut v = vec![0; n];
    v[i] = 1;
    v[j] = -1;
    v
}

/// Reads `v` as `e_i − e_j`, returning 0-based `(i, j)`.
pub fn as_type_a_root(v: &[i64]) -> Option<(usize, usize)> {
    let mut plus = None;
    let mut minus = None;
    for (idx, &x) in v.iter().enumerate() {
        match x {
            0 => {}
            1 if plus.is_none() => plus = Some(idx),
            -1 if minus.is_none() => minus = Some(idx),
            _ => return None,
        }
    }
    plus.zip(minus)
}

/// `Q(R)` membership for type A: zero grading.
pub fn in_root_lattice(v: &WeightVec) -> bool {
    v.grading() == 0
}

/// Is `mu` in the convex hull of the permutations of `λ̃`? Decided by
/// majorisation of the sorted coordinates.
pub fn weyl_hull_member(mu: &WeightVec, l: &DominantWeight) -> Result<bool> {
    if mu.n() != l.n() {
        return Err(Error::Dimension(format!("weight in Z^{} against λ in Z^{}", mu.n(), l.n())));
    }
    if mu.grading() != l.size() {
        return Err(Error::Grading { expected: l.size(), found: mu.grading() });
    }
    let mut sorted = mu.coords().to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut lhs = 0;
    let mut rhs = 0;
    for (m, lam) in sorted.iter().zip(l.coords()) {
        lhs += m;
        rhs += lam;
        if lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A basis of the type-A root lattice extending an independent root list.
#[derive(Clone, Debug, Serialize)]
pub struct BasisExtension {
    /// Input roots followed by the added ones.
    pub basis: Vec<Point>,
    pub added: Vec<Point>,
    /// Smith invariant factors of the `(n−1)×n` coordinate matrix.
    #[serde(serialize_with = "ser_bigints")]
    pub invariant_factors: Vec<BigInt>,
    /// `[Q(R) : span(basis)]`.
    #[serde(serialize_with = "ser_index")]
    pub index: LatticeIndex,
}

impl BasisExtension {
    pub fn is_unimodular(&self) -> bool {
        self.index == LatticeIndex::Finite(BigInt::one()) && self.invariant_factors.iter().all(One::is_one)
    }
}

fn ser_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn ser_index<S: serde::Serializer>(v: &LatticeIndex, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Path between `from` and `to` in the forest, as indices into `edges`.
fn forest_path(n: usize, edges: &[(usize, usize)], from: usize, to: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for (idx, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, idx));
        adj[b].push((a, idx));
    }
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::from([from]);
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(w, idx) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some((v, idx));
                queue.push_back(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = to;
    while let Some((p, idx)) = prev[cur] {
        path.push(idx);
        cur = p;
    }
    path.reverse();
    path
}

/// Extends independent type-A roots to a basis of `Q(R)`.
///
/// Roots are oriented edges of the complete graph `K_n`; independence is the
/// absence of cycles, and the extension completes the forest to a spanning
/// tree using the lexicographically first available edges `e_i − e_j`
/// (`i < j`). The result carries a Smith-form certificate of index 1.
pub fn extend_to_root_basis(roots: &[Point], n: usize) -> Result<BasisExtension> {
    if n < 2 {
        return Err(Error::Invalid(format!("type A roots need n >= 2, got {n}")));
    }
    let mut dsu = Dsu((0..n).collect());
    let mut tree: Vec<(usize, usize)> = Vec::new();
    for r in roots {
        if r.len() != n {
            return Err(Error::Dimension(format!("root of length {} in Z^{n}", r.len())));
        }
        let (i, j) = as_type_a_root(r)
            .ok_or_else(|| Error::Invalid(format!("{r:?} is not a type-A root e_i - e_j")))?;
        if !dsu.union(i, j) {
            let mut cycle: Vec<(usize, usize)> =
                forest_path(n, &tree, j, i).into_iter().map(|idx| tree[idx]).collect();
            cycle.push((i, j));
            return Err(Error::Independence {
                cycle: cycle.into_iter().map(|(a, b)| (a + 1, b + 1)).collect(),
            });
        }
        tree.push((i, j));
    }
    let mut added = Vec::new();
    'outer: for i in 0..n {
        for j in i + 1..n {
            if tree.len() + added.len() == n - 1 {
                break 'outer;
            }
            if dsu.union(i, j) {
                added.push(root_vector(n, i, j));
            }
        }
    }
    let mut basis: Vec<Point> = roots.to_vec();
    basis.extend(added.iter().cloned());
    let m = IntMat::from_rows(n, &basis);
    let invariant_factors = snf(&m).diag;
    let span = IntegerLattice::from_intmat(&m);
    let index = lattice_index(&span, type_a_roots(n)?.lattice())?;
    Ok(BasisExtension { basis, added, invariant_factors, index })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_a_counts() {
        let r2 = type_a_roots(2).unwrap();
        assert_eq!(r2.roots().points(), &[vec![-1, 1], vec![1, -1]]);
        assert_eq!(type_a_roots(3).unwrap().roots().len(), 6);
        let r4 = type_a_roots(4).unwrap();
        assert_eq!(r4.roots().len(), 12);
        assert_eq!(r4.lattice().rank(), 3);
        assert!(type_a_roots(1).is_err());
    }

    #[test]
    fn b2_fixture() {
        let b2 = b2_roots();
        assert!(b2.roots().contains(&[1, -1]));
        assert_eq!(b2.lattice(), &IntegerLattice::full(2));
        assert_eq!(
            lattice_index(b2.lattice(), &IntegerLattice::full(2)).unwrap(),
            LatticeIndex::Finite(1.into())
        );
        let neg = b2.roots().negate();
        assert_eq!(&neg, b2.roots());
    }

    #[test]
    fn decompositions() {
        let cases: [(&[i64], &[u64]); 3] = [(&[1, 0, 0], &[1, 0]), (&[2, 1, 0], &[1, 1]), (&[3, 3, 0, 0], &[0, 3, 0])];
        for (lam, a) in cases {
            let l = DominantWeight::new(lam.to_vec()).unwrap();
            let d = fundamental_decomposition(&l);
            assert_eq!(d.a, a);
            assert_eq!(d.reconstruct(lam.len()), lam);
        }
    }

    #[test]
    fn dominant_validation() {
        assert!("2,1,0".parse::<DominantWeight>().is_ok());
        assert!("1,2,0".parse::<DominantWeight>().is_err());
        assert!("2,1,1".parse::<DominantWeight>().is_err());
        assert!("2,x,0".parse::<DominantWeight>().is_err());
    }

    #[test]
    fn normalization() {
        let mu = WeightVec::new(vec![1, 0, 0]);
        assert_eq!(mu.normalize_to_grading(4), Some(WeightVec::new(vec![2, 1, 1])));
        assert_eq!(mu.normalize_to_grading(3), None);
        assert!(mu.same_sl_weight(&WeightVec::new(vec![3, 2, 2])));
        assert!(!mu.same_sl_weight(&WeightVec::new(vec![3, 2, 1])));
    }

    #[test]
    fn root_lattice_membership() {
        assert!(in_root_lattice(&WeightVec::zero(3)));
        assert!(in_root_lattice(&WeightVec::new(vec![1, -1, 0])));
        assert!(!in_root_lattice(&WeightVec::new(vec![1, 0, 0])));
    }

    #[test]
    fn weyl_hull() {
        let l = DominantWeight::new(vec![2, 1, 0]).unwrap();
        assert!(weyl_hull_member(&WeightVec::new(vec![2, 1, 0]), &l).unwrap());
        assert!(weyl_hull_member(&WeightVec::new(vec![1, 1, 1]), &l).unwrap());
        assert!(!weyl_hull_member(&WeightVec::new(vec![3, 0, 0]), &l).unwrap());
        let l1 = DominantWeight::new(vec![1, 0, 0]).unwrap();
        for p in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
            assert!(weyl_hull_member(&WeightVec::new(p.to_vec()), &l1).unwrap());
        }
        assert!(matches!(
            weyl_hull_member(&WeightVec::new(vec![1, 1, 0]), &l1),
            Err(Error::Grading { .. })
        ));
    }

    #[test]
    fn basis_extension() {
        let full = extend_to_root_basis(&[root_vector(3, 0, 1), root_vector(3, 1, 2)], 3).unwrap();
        assert!(full.added.is_empty());
        assert!(full.is_unimodular());

        let one = extend_to_root_basis(&[root_vector(3, 0, 2)], 3).unwrap();
        assert_eq!(one.added, vec![root_vector(3, 0, 1)]);
        assert_eq!(one.invariant_factors, vec![BigInt::one(), BigInt::one()]);
        assert!(one.is_unimodular());
    }

    #[test]
    fn basis_extension_rejects() {
        let cyc = extend_to_root_basis(
            &[root_vector(3, 0, 1), root_vector(3, 1, 2), root_vector(3, 2, 0)],
            3,
        );
        match cyc {
            Err(Error::Independence { cycle }) => assert_eq!(cycle.len(), 3),
            other => panic!("expected a cycle, got {other:?}"),
        }
        assert!(matches!(extend_to_root_basis(&[vec![1, -1], vec![1, 1]], 2), Err(Error::Invalid(_))));
    }

    #[test]
    fn b2_pair_has_index_two() {
        let pair = IntegerLattice::from_generators(2, &[vec![1, -1], vec![1, 1]]).unwrap();
        assert_eq!(
            lattice_index(&pair, b2_roots().lattice()).unwrap(),
            LatticeIndex::Finite(2.into())
        );
        assert_eq!(snf(&IntMat::from_rows(2, &[vec![1, -1], vec![1, 1]])).diag, vec![BigInt::one(), 2.into()]);
    }
}
