//! Error types shared across the kernel.

use thiserror::Error;

use crate::point::Point;
use crate::scalar::Scalar;

/// Failure to read a literal in the CLI grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational literal `{0}` (expected INT, INT/INT, or a finite decimal)")]
    Scalar(String),
    #[error("invalid point `{0}` (expected `x,y` with rational components)")]
    Point(String),
    #[error("invalid line `{0}` (expected forms like `y=x`, `x=0`, `y=2x`, `y=1/2x-3`)")]
    Line(String),
    #[error("invalid isometry `{0}` (expected `linear=<name> t=<x>,<y>`)")]
    Isometry(String),
}

/// Domain failure of a kernel operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("cannot build a line through coincident points {0}")]
    CoincidentPoints(Point),
    #[error("circle radius must be positive, got {0}")]
    NonPositiveRadius(Scalar),
    #[error("point {point} is not on the circle with center {center} and radius {radius}")]
    PointNotOnCircle {
        point: Point,
        center: Point,
        radius: Scalar,
    },
    #[error("ray direction must be nonzero")]
    ZeroDirection,
    #[error("degenerate ray: point coincides with the vertex {0}")]
    RayThroughVertex(Point),
    #[error("standard-position formula requires a positive slope, got {0}")]
    SlopeNotPositive(Scalar),
    #[error("cannot rotate the center {0} about itself")]
    RotateCenter(Point),
    #[error("point at the origin has no quadrant configuration")]
    PointAtOrigin,
    #[error("triangle legs have unequal taxicab lengths {0} and {1}")]
    UnequalLegs(Scalar, Scalar),
    #[error("degenerate triangle: vertices are collinear or coincide")]
    DegenerateTriangle,
    #[error("pair is not in a canonical orientation; route it through triangle normalization")]
    NonCanonicalPair,
    #[error("no point pairs supplied")]
    EmptyPairList,
    #[error("closed-form base angle {closed_form} disagrees with measured {measured} at {vertex}")]
    ClosedFormMismatch {
        vertex: Point,
        closed_form: Scalar,
        measured: Scalar,
    },
}
