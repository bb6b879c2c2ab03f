//! Seeded random instance streams.
//!
//! Instance `i` of a corpus draws from its own ChaCha8 stream keyed by
//! `(seed, i)`, so instances can be generated in any order or in parallel.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exact::{det, Mat};
use crate::polytope::Point;
use crate::roots::{root_vector, DominantWeight, FundDecomp};
use num_traits::Zero;

/// Parameters of a deterministic instance stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub n_max: usize,
    pub entry_bound: i64,
    pub lambda_sum_max: i64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        Self { seed: 7, count: 100, n_max: 5, entry_bound: 9, lambda_sum_max: 8 }
    }
}

impl CorpusSpec {
    /// The generator for instance `i`.
    pub fn rng(&self, i: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(i as u64);
        rng
    }
}

/// Uniform integer entries in `[−bound, bound]`, resampled until invertible.
pub fn random_invertible(rng: &mut impl Rng, n: usize, bound: i64) -> Mat {
    random_invertible_sparse(rng, n, bound, 0.0)
}

/// Like [`random_invertible`], but each entry is forced to zero with
/// probability `zero_prob`.
pub fn random_invertible_sparse(rng: &mut impl Rng, n: usize, bound: i64, zero_prob: f64) -> Mat {
    loop {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| if rng.random_bool(zero_prob) { 0 } else { rng.random_range(-bound..=bound) })
                    .collect()
            })
            .collect();
        let m = Mat::from_int_rows(&rows);
        if !det(&m).expect("square").is_zero() {
            return m;
        }
    }
}

/// A dominant GL weight in `Z^n` with last entry 0 and `|λ̃| ≤ max_sum`,
/// built by adding random fundamental weights.
pub fn random_dominant(rng: &mut impl Rng, n: usize, max_sum: i64) -> DominantWeight {
    let budget = rng.random_range(0..=max_sum.max(0));
    let mut a = vec![0u64; n.saturating_sub(1)];
    let mut size = 0i64;
    if n >= 2 {
        loop {
            let fits: Vec<usize> = (1..n).filter(|&k| size + k as i64 <= budget).collect();
            let Some(&k) = fits.as_slice().choose(rng) else { break };
            a[k - 1] += 1;
            size += k as i64;
        }
    }
    DominantWeight::from_decomposition(n, &FundDecomp { a }).expect("decomposition of the right length")
}

/// A uniformly chosen root `e_i − e_j` of `Z^n`.
pub fn random_root(rng: &mut impl Rng, n: usize) -> Point {
    let i = rng.random_range(0..n);
    let mut j = rng.random_range(0..n - 1);
    if j >= i {
        j += 1;
    }
    root_vector(n, i, j)
}

/// A random forest in `K_n` as oriented roots `e_i − e_j`.
pub fn random_forest(rng: &mut impl Rng, n: usize) -> Vec<Point> {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs.shuffle(rng);
    let target = rng.random_range(0..n);
    let mut comp: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for (i, j) in pairs {
        if out.len() == target {
            break;
        }
        let (ci, cj) = (comp[i], comp[j]);
        if ci == cj {
            continue;
        }
        for c in comp.iter_mut() {
            if *c == cj {
                *c = ci;
            }
        }
        out.push(if rng.random_bool(0.5) { root_vector(n, i, j) } else { root_vector(n, j, i) });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let spec = CorpusSpec::default();
        let a = random_invertible(&mut spec.rng(3), 4, 9);
        let b = random_invertible(&mut spec.rng(3), 4, 9);
        assert_eq!(a, b);
        assert_ne!(a, random_invertible(&mut spec.rng(4), 4, 9));
    }

    #[test]
    fn dominant_weights_in_range() {
        let spec = CorpusSpec::default();
        for i in 0..50 {
            let l = random_dominant(&mut spec.rng(i), 4, 8);
            assert!(l.size() <= 8);
            assert_eq!(l.coords()[3], 0);
        }
    }

    #[test]
    fn forests_are_acyclic() {
        let spec = CorpusSpec::default();
        for i in 0..50 {
            let f = random_forest(&mut spec.rng(i), 6);
            assert!(f.len() < 6);
            assert!(crate::roots::extend_to_root_basis(&f, 6).is_ok());
        }
    }
}
