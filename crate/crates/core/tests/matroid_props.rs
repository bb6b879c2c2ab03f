use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use flagweights::corpus::random_invertible_sparse;
use flagweights::exact::{rank, Mat};
use flagweights::matroid::{check_exchange, k_subsets, matroid_from_matrix, verify_ggms};

fn matrix() -> impl Strategy<Value = Mat> {
    (2usize..=5, any::<u64>(), 0u8..=2).prop_map(|(n, seed, z)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_invertible_sparse(&mut rng, n, 3, f64::from(z) * 0.25)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn matrix_matroids_satisfy_exchange(g in matrix(), k in 1usize..=5) {
        let k = k.min(g.rows());
        let m = matroid_from_matrix(&g, k).unwrap();
        prop_assert_eq!(check_exchange(&m), None);
        prop_assert!(verify_ggms(&m).unwrap().pass);
    }

    #[test]
    fn bases_match_rank_oracle(g in matrix(), k in 1usize..=5) {
        let n = g.rows();
        let k = k.min(n);
        let m = matroid_from_matrix(&g, k).unwrap();
        let cols: Vec<usize> = (0..k).collect();
        let expect: Vec<Vec<usize>> =
            k_subsets(n, k).into_iter().filter(|rows| rank(&g.select(rows, &cols)) == k).collect();
        prop_assert_eq!(m.bases(), &expect[..]);
    }
}
