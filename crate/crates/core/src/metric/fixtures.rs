//! Small hand-written metrics used throughout the tests and the CLI suites.

use super::Metric;
use crate::rational::int;

/// The four-point metric with distances 2 around the square 1-2-3-4 and 3 on
/// the diagonals.
pub fn four_points() -> Metric {
    Metric::from_upper(4, [2, 3, 2, 2, 3, 2].map(int).to_vec()).expect("valid fixture")
}

/// [`four_points`] shifted by -1/2 at every node: 1 around the square, 2 on
/// the diagonals.
pub fn four_points_ideal() -> Metric {
    Metric::from_upper(4, [1, 2, 1, 1, 2, 1].map(int).to_vec()).expect("valid fixture")
}
