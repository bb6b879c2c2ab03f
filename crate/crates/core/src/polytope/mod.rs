//! Exact polyhedral kernel over finite integer point sets.
//!
//! Faces are found with linear programs rather than a convex-hull algorithm,
//! so the same code works in every ambient dimension.

mod enumerate;
mod hull;
pub mod lp;
mod minkowski;
mod pointset;

pub use enumerate::{lattice_points_in_box, lattice_points_in_hull};
pub use hull::{edges, edges_with_functionals, hull_certificate, hull_member, hulls_intersect, vertices, Edge, Hull, HullCertificate};
pub use lp::{lp_solve, Constraint, LinearProgram, LpOutcome, Relation, Q};
pub use minkowski::{dilate, minkowski_sum};
pub use pointset::{Point, PointSet};


/// True iff `v` is a nonzero multiple of some element of `roots`.
pub fn parallel_to_any(v: &[i64], roots: &PointSet) -> bool {
    roots.iter().any(|r| is_parallel(v, r))
}

/// Nonzero `u`, `v` with `u = c·v` for some rational `c ≠ 0`.
pub fn is_parallel(u: &[i64], v: &[i64]) -> bool {
    if u.iter().all(|&x| x == 0) || v.iter().all(|&x| x == 0) {
        return false;
    }
    // all 2x2 minors of [u; v] vanish
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            if i128::from(u[i]) * i128::from(v[j]) != i128::from(u[j]) * i128::from(v[i]) {
                return false;
            }
        }
    }
    true
}
