//! The isotropic-line example in `SO(5)`: a weight set with root-parallel
//! edges that is not root-saturated, recovered only in degree 2.

use serde_json::json;

use crate::error::Result;
use crate::exact::GaussianRational;
use crate::polytope::{minkowski_sum, Point, PointSet};
use crate::roots::b2_roots;
use crate::weights::{projective_point_weight_set, root_saturation_check, SaturationReport};

#[derive(Clone, Debug)]
pub struct So5Demo {
    pub vector: Vec<GaussianRational>,
    pub coord_weights: Vec<Point>,
    pub weight_set: PointSet,
    pub saturation: SaturationReport,
    pub square_sum: PointSet,
    pub origin_in_square_sum: bool,
}

impl So5Demo {
    pub fn weight_set_matches(&self) -> bool {
        self.weight_set.points() == [vec![-1, 0], vec![0, -1], vec![0, 1], vec![1, 0]]
    }

    pub fn saturation_matches(&self) -> bool {
        !self.saturation.is_saturated
            && self.saturation.edge_violations.is_empty()
            && self.saturation.missing_points.points() == [vec![0, 0]]
    }

    pub fn matches_expected(&self) -> bool {
        self.weight_set_matches() && self.saturation_matches() && self.origin_in_square_sum
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "vector": self.vector.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "coord_weights": self.coord_weights,
            "weight_set": self.weight_set.points(),
            "saturation": self.saturation,
            "square_sum": self.square_sum.points(),
            "origin_in_square_sum": self.origin_in_square_sum,
            "matches_expected": self.matches_expected(),
        })
    }
}

/// Builds the point `(1, i, 0, i, 1)` with the `B2` coordinate weights.
pub fn so5_demo() -> Result<So5Demo> {
    let vector: Vec<GaussianRational> = ["1", "i", "0", "i", "1"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_>>()?;
    let coord_weights = vec![vec![1, 0], vec![0, 1], vec![0, 0], vec![0, -1], vec![-1, 0]];
    let weight_set = projective_point_weight_set(&vector, &coord_weights)?;
    let saturation = root_saturation_check(&weight_set, &b2_roots(), &[1, 0])?;
    let square_sum = minkowski_sum(&weight_set, &weight_set)?;
    let origin_in_square_sum = square_sum.contains(&[0, 0]);
    Ok(So5Demo { vector, coord_weights, weight_set, saturation, square_sum, origin_in_square_sum })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demo_matches() {
        let d = so5_demo().unwrap();
        assert!(d.weight_set_matches());
        assert!(d.saturation_matches());
        assert!(d.origin_in_square_sum);
        assert_eq!(d.square_sum.len(), 9);
    }
}
