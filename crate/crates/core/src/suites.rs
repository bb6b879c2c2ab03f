//! Property suites over seeded corpora. Each suite checks one family of
//! statements instance by instance and keeps the first counterexample.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::corpus::{random_dominant, random_forest, random_invertible, random_invertible_sparse, random_root, CorpusSpec};
use crate::error::{Error, Result};
use crate::exact::Mat;
use crate::matroid::{check_exchange, k_subsets, matroid_from_matrix, matroid_from_root_edge_polytope, verify_ggms, Matroid, PolytopeMatroid, matroid_polytope};
use crate::normality::{orbit_closure_normality, DEFAULT_MAX_DEGREE};
use crate::par::{self, Execution};
use crate::polytope::{hulls_intersect, Point, PointSet, Q};
use crate::roots::{extend_to_root_basis, fundamental_weight, type_a_roots, DominantWeight, WeightVec};
use crate::weights::{fundamental_weight_set, hull_slice, root_saturation_check, weight_set, SemistabilityContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Hull edges of matroid polytopes of random matrices are exactly the basis exchanges.
    Ggms,
    /// Every basis family on at most four elements: exchange axiom iff root-parallel edges.
    GgmsExhaustive,
    /// Weight sets and fundamental weight sets, shifted into the root lattice, are root-saturated.
    Saturation,
    /// `Nμ ∈ wt_{Nλ}(g)` iff `μ ∈ wt_λ(g)` for `N ∈ {2, 3}`.
    SatLemma,
    /// Semistability reports carry valid witnesses or valid separating functionals.
    Witness,
    /// Root-saturated sets with intersecting hulls intersect.
    Intersection,
    /// Torus orbit closures have no semigroup holes up to the default degree bound.
    Normality,
    /// Forests of roots extend to unimodular bases of the root lattice.
    Basis,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Ggms,
        Suite::GgmsExhaustive,
        Suite::Saturation,
        Suite::SatLemma,
        Suite::Witness,
        Suite::Intersection,
        Suite::Normality,
        Suite::Basis,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ggms => "ggms",
            Suite::GgmsExhaustive => "ggms-exhaustive",
            Suite::Saturation => "saturation",
            Suite::SatLemma => "sat-lemma",
            Suite::Witness => "witness",
            Suite::Intersection => "intersection",
            Suite::Normality => "normality",
            Suite::Basis => "basis",
        }
    }

    /// Corpus parameters used when the caller gives only a seed and a count.
    pub fn default_spec(self, seed: u64, count: usize) -> CorpusSpec {
        let (n_max, entry_bound, lambda_sum_max) = match self {
            Suite::Ggms => (6, 9, 0),
            Suite::GgmsExhaustive => (4, 0, 0),
            Suite::Saturation | Suite::SatLemma | Suite::Witness => (5, 9, 8),
            Suite::Intersection => (5, 3, 3),
            Suite::Normality => (5, 9, 8),
            Suite::Basis => (8, 0, 0),
        };
        CorpusSpec { seed, count, n_max, entry_bound, lambda_sum_max }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::Invalid(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub spec: CorpusSpec,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_counterexample: Option<Value>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("suite reports serialise")
    }
}

type Outcome = std::result::Result<(), Value>;

pub fn run_suite(suite: Suite, spec: &CorpusSpec, exec: Execution) -> SuiteReport {
    let outcomes: Vec<Outcome> = match suite {
        Suite::GgmsExhaustive => {
            let families = all_basis_families(spec.n_max.min(4));
            par::map(exec, &families, ggms_exhaustive_instance)
        }
        _ => par::map_range(exec, spec.count, |i| {
            let inst = match suite {
                Suite::Ggms => ggms_instance,
                Suite::Saturation => saturation_instance,
                Suite::SatLemma => sat_lemma_instance,
                Suite::Witness => witness_instance,
                Suite::Intersection => intersection_instance,
                Suite::Normality => normality_instance,
                Suite::Basis => basis_instance,
                Suite::GgmsExhaustive => unreachable!(),
            };
            inst(spec, i).map_err(|v| with_index(v, i))
        }),
    };
    let failed = outcomes.iter().filter(|o| o.is_err()).count();
    SuiteReport {
        suite: suite.name().to_string(),
        spec: *spec,
        instances: outcomes.len(),
        passed: outcomes.len() - failed,
        failed,
        first_counterexample: outcomes.into_iter().find_map(|o| o.err()),
    }
}

fn with_index(mut v: Value, i: usize) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("instance".into(), json!(i));
    }
    v
}

fn fail_err(e: Error) -> Value {
    json!({"error": e.to_string()})
}

fn check(ok: bool, detail: impl FnOnce() -> Value) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

/// Dimension of instance `i`, uniform in `lo..=spec.n_max`.
fn pick_n(rng: &mut impl Rng, lo: usize, spec: &CorpusSpec) -> usize {
    rng.random_range(lo..=spec.n_max.max(lo))
}

fn ggms_instance(spec: &CorpusSpec, i: usize) -> Outcome {
    let mut rng = spec.rng(i);
    let n = pick_n(&mut rng, 2, spec);
    // odd instances are sparse so that non-uniform matroids appear
    let zero_prob = if i % 2 == 1 { 0.4 } else { 0.0 };
    let g = random_invertible_sparse(&mut rng, n, spec.entry_bound, zero_prob);
    for k in 1..=n {
        let m = matroid_from_matrix(&g, k).map_err(fail_err)?;
        let ctx = || json!({"matrix": g.to_json(), "k": k, "matroid": m.to_json()});
        if let Some(v) = check_exchange(&m) {
            return Err(json!({"case": ctx(), "exchange_violation": v}));
        }
        let report = verify_ggms(&m).map_err(fail_err)?;
        check(report.pass, || json!({"case": ctx(), "report": report}))?;
    }
    Ok(())
}

/// Every nonempty basis family of every rank on `1..=n_max` elements.
pub fn all_basis_families(n_max: usize) -> Vec<Matroid> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for k in 0..=n {
            let subsets = k_subsets(n, k);
            for mask in 1u64..(1 << subsets.len()) {
                let bases = subsets.iter().enumerate().filter(|(j, _)| mask >> j & 1 == 1).map(|(_, b)| b.clone()).collect();
                out.push(Matroid::new(n, k, bases).expect("valid subsets"));
            }
        }
    }
    out
}

fn ggms_exhaustive_instance(m: &Matroid) -> Outcome {
    let exchange = check_exchange(m);
    let verdict = matroid_from_root_edge_polytope(&matroid_polytope(m)).map_err(fail_err)?;
    let ok = match &verdict {
        PolytopeMatroid::Matroid(back) => exchange.is_none() && back == m,
        PolytopeMatroid::NotAMatroid { .. } => exchange.is_some(),
        PolytopeMatroid::ConverseViolation(_) => false,
    };
    check(ok, || json!({"family": m.to_json(), "exchange_violation": exchange, "verdict": format!("{verdict:?}")}))
}

fn weight_instance(spec: &CorpusSpec, i: usize) -> (Mat, DominantWeight, ChaCha8Rng) {
    let mut rng = spec.rng(i);
    let n = pick_n(&mut rng, 2, spec);
    let g = random_invertible(&mut rng, n, spec.entry_bound);
    let l = random_dominant(&mut rng, n, spec.lambda_sum_max);
    (g, l, rng)
}

fn instance_json(g: &Mat, l: &DominantWeight) -> Value {
    json!({"matrix": g.to_json(), "lambda": l.coords()})
}

fn saturation_instance(spec: &CorpusSpec, i: usize) -> Outcome {
    let (g, l, _) = weight_instance(spec, i);
    let n = g.rows();
    let rs = type_a_roots(n).map_err(fail_err)?;
    let zero = vec![0; n];
    let neg_l: Point = l.coords().iter().map(|x| -x).collect();
    let ws = weight_set(&g, &l).map_err(fail_err)?;
    let shifted = ws.points.translate(&neg_l).map_err(fail_err)?;
    let rep = root_saturation_check(&shifted, &rs, &zero).map_err(fail_err)?;
    check(rep.is_saturated, || json!({"case": instance_json(&g, &l), "report": rep}))?;
    for k in 1..n {
        let fw: Point = fundamental_weight(n, k).iter().map(|x| -x).collect();
        let f = fundamental_weight_set(&g, k).map_err(fail_err)?.points.translate(&fw).map_err(fail_err)?;
        let rep = root_saturation_check(&f, &rs, &zero).map_err(fail_err)?;
        check(rep.is_saturated, || json!({"case": instance_json(&g, &l), "k": k, "report": rep}))?;
    }
    Ok(())
}

fn sat_lemma_instance(spec: &CorpusSpec, i: usize) -> Outcome {
    let (g, l, _) = weight_instance(spec, i);
    let ws = weight_set(&g, &l).map_err(fail_err)?;
    let slice = hull_slice(&ws, &l, Execution::Sequential).map_err(fail_err)?;
    for big_n in [2i64, 3] {
        let scaled = weight_set(&g, &l.scale(big_n)).map_err(fail_err)?;
        for mu in &slice {
            let nmu: Point = mu.iter().map(|x| x * big_n).collect();
            let (a, b) = (scaled.contains(&nmu), ws.contains(mu));
            check(a == b, || {
                json!({"case": instance_json(&g, &l), "N": big_n, "mu": mu, "scaled_member": a, "member": b})
            })?;
        }
    }
    Ok(())
}

fn witness_instance(spec: &CorpusSpec, i: usize) -> Outcome {
    let (g, l, mut rng) = weight_instance(spec, i);
    let n = g.rows();
    let ctx = SemistabilityContext::new(&g, &l).map_err(fail_err)?;
    let ws = weight_set(&g, &l).map_err(fail_err)?;
    let slice = hull_slice(&ws, &l, Execution::Sequential).map_err(fail_err)?;
    let hi = l.size().max(1) + 1;
    let extra: Vec<Point> = (0..4).map(|_| (0..n).map(|_| rng.random_range(-1..=hi)).collect()).collect();
    for mu in slice.iter().chain(&extra) {
        let rep = ctx.check(&WeightVec::new(mu.clone())).map_err(fail_err)?;
        let fail = |why: &str| json!({"case": instance_json(&g, &l), "mu": mu, "why": why, "report": rep.to_json()});
        let degree = infer_degree(&l, mu);
        let q: Vec<Q> = rep.target.iter().map(|&x| Q::new(x.into(), degree.into())).collect();
        check(rep.hull_certificate.verify(&q, &ws.points), || fail("invalid hull certificate"))?;
        if rep.semistable {
            let Some(w) = &rep.witness else { return Err(fail("semistable without witness")) };
            let degree_ok = rep.witness_degree == Some(degree as u64) && (!rep.in_root_lattice_case || degree == 1);
            check(w.verify(&g, &rep.target) && degree_ok, || fail("invalid witness"))?;
        } else {
            check(!slice.contains(mu), || fail("slice point reported unstable"))?;
        }
    }
    Ok(())
}

/// The degree at which `μ` is lifted against `λ̃`.
fn infer_degree(l: &DominantWeight, mu: &[i64]) -> i64 {
    let ni = l.n() as i64;
    let r = (l.size() - mu.iter().sum::<i64>()).rem_euclid(ni);
    if r == 0 {
        1
    } else {
        ni / num_integer::gcd(ni, r)
    }
}

fn intersection_instance(spec: &CorpusSpec, i: usize) -> Outcome {
    let mut rng = spec.rng(i);
    let n = pick_n(&mut rng, 3, spec);
    for _ in 0..1000 {
        let mut side = || -> Result<(Mat, DominantWeight, PointSet)> {
            let g = random_invertible_sparse(&mut rng, n, spec.entry_bound, 0.5);
            let l = random_dominant(&mut rng, n, spec.lambda_sum_max);
            let neg: Point = l.coords().iter().map(|x| -x).collect();
            let pts = weight_set(&g, &l)?.points.translate(&neg)?;
            Ok((g, l, pts))
        };
        let (ga, la, a) = side().map_err(fail_err)?;
        let (gb, lb, b) = side().map_err(fail_err)?;
        let mut t = vec![0; n];
        for _ in 0..rng.random_range(0..=2) {
            for (x, r) in t.iter_mut().zip(random_root(&mut rng, n)) {
                *x += r;
            }
        }
        let b = b.translate(&t).map_err(fail_err)?;
        if !hulls_intersect(&a, &b).map_err(fail_err)? {
            continue;
        }
        return check(!a.intersection(&b).is_empty(), || {
            json!({"a": instance_json(&ga, &la), "b": instance_json(&gb, &lb), "translation": t,
                   "a_points": a.points(), "b_points": b.points()})
        });
    }
    Err(json!({"error": "no pair with intersecting hulls in 1000 draws"}))
}

fn normality_instance(spec: &CorpusSpec, i: usize) -> Outcome {
    let (g, l, _) = weight_instance(spec, i);
    let rep = orbit_closure_normality(&g, &l, DEFAULT_MAX_DEGREE).map_err(fail_err)?;
    check(rep.normal_up_to_d, || json!({"case": instance_json(&g, &l), "report": rep}))
}

fn basis_instance(spec: &CorpusSpec, i: usize) -> Outcome {
    let mut rng = spec.rng(i);
    let n = pick_n(&mut rng, 2, spec);
    let mut forest = random_forest(&mut rng, n);
    let ctx = |f: &[Point]| json!({"n": n, "roots": f});
    let ext = extend_to_root_basis(&forest, n).map_err(|e| json!({"case": ctx(&forest), "error": e.to_string()}))?;
    let ok = ext.is_unimodular()
        && ext.basis.len() == n - 1
        && ext.basis[..forest.len()] == forest[..]
        && ext.added.iter().all(|r| crate::roots::as_type_a_root(r).is_some_and(|(a, b)| a < b));
    check(ok, || json!({"case": ctx(&forest), "extension": ext}))?;

    // close a cycle and expect the dependency to be named
    {
        forest = ext.basis.clone();
        forest.push(random_root(&mut rng, n));
        match extend_to_root_basis(&forest, n) {
            Err(Error::Independence { cycle }) => {
                let mut degree = vec![0usize; n + 1];
                for (x, y) in &cycle {
                    degree[*x] += 1;
                    degree[*y] += 1;
                }
                check(!cycle.is_empty() && degree.iter().all(|d| d % 2 == 0), || {
                    json!({"case": ctx(&forest), "cycle": cycle})
                })?;
            }
            other => return Err(json!({"case": ctx(&forest), "unexpected": format!("{other:?}")})),
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn family_counts() {
        // n = 1: {∅}, {{0}}; n = 2: 1 + 3 + 1
        assert_eq!(all_basis_families(1).len(), 2);
        assert_eq!(all_basis_families(2).len(), 2 + 5);
    }

    #[test]
    fn small_runs_pass() {
        for s in Suite::ALL {
            let mut spec = s.default_spec(11, 3);
            spec.n_max = spec.n_max.min(3);
            spec.lambda_sum_max = spec.lambda_sum_max.min(3);
            let rep = run_suite(s, &spec, Execution::Sequential);
            assert!(rep.all_passed(), "{s}: {:?}", rep.first_counterexample);
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let spec = Suite::Basis.default_spec(3, 20);
        assert_eq!(
            run_suite(Suite::Basis, &spec, Execution::Sequential),
            run_suite(Suite::Basis, &spec, Execution::Parallel)
        );
    }
}
