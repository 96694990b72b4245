//! Exact-arithmetic geometry kernel for the taxicab (L1) plane.
//!
//! Distances, circles, angle measure in t-radians, the isometry group, and
//! the isosceles-triangle base-angle analysis are all computed over exact
//! rationals, so every geometric claim in this crate is checked by exact
//! equality rather than by tolerance.

// errors carry the offending exact values, which makes the Err variants big;
// all fallible paths here are cold
#![allow(clippy::result_large_err)]

pub mod angle;
pub mod circle;
pub mod cli;
pub mod error;
pub mod i5t;
pub mod isometry;
pub mod line;
pub mod metric;
pub mod point;
pub mod scalar;
pub mod svg;

pub use angle::{angle_measure, angle_standard_position, directed_arc, is_right_angle, TAngle};
pub use circle::{CirclePosition, Side, TaxicabCircle};
pub use error::{GeomError, ParseError};
pub use i5t::{
    base_angles, classify_configuration, i5t_analyze, i5t_condition, normalize_triangle,
    Configuration, ConfigurationKind, I5TReport, IsoscelesTriangle,
};
pub use isometry::{
    find_distance_change_witness, is_taxicab_isometry_affine, taxicab_reflect, taxicab_rotate,
    AffineMap, AffineVerdict, Isometry, LinearPart, SpecialAxis,
};
pub use line::Line;
pub use metric::{euclidean_distance_squared, midpoint, taxicab_distance};
pub use point::Point;
pub use scalar::Scalar;
