//! Exact computations for torus orbits in `SL(n, C)` flag varieties.
//!
//! A point of `G/P_λ` is given by an invertible matrix `g`. Its weight set
//! `wt_λ(g)` is a Minkowski sum of matroid polytope vertex sets built from
//! the nonvanishing leading minors of `g`. On top of that the crate decides
//! torus semistability with explicit bracket-monomial witnesses, checks
//! root-saturation, and searches for semigroup holes that would obstruct
//! projective normality of the orbit closure.
//!
//! All arithmetic is exact: Gaussian rationals for matrix entries, big
//! rationals for linear programs, and Hermite/Smith forms for lattices.
//!
//! ```
//! use flagweights::exact::Mat;
//! use flagweights::roots::{DominantWeight, WeightVec};
//! use flagweights::weights::semistable;
//!
//! let g = Mat::from_int_rows(&[vec![1, 1, 1], vec![1, 2, 4], vec![1, 3, 9]]);
//! let l = DominantWeight::new(vec![2, 1, 0]).unwrap();
//! let rep = semistable(&g, &l, &WeightVec::new(vec![1, 1, 1])).unwrap();
//! assert!(rep.semistable);
//! assert!(rep.witness.unwrap().verify(&g, &[1, 1, 1]));
//! ```
//!
//! The `parallel` feature (on by default) runs independent jobs on rayon;
//! [`par::Execution::Sequential`] forces single-threaded execution at runtime.

pub mod corpus;
pub mod demo;
pub mod error;
pub mod exact;
pub mod matroid;
pub mod normality;
pub mod par;
pub mod polytope;
pub mod roots;
pub mod suites;
pub mod weights;

pub use error::{Error, Result};
