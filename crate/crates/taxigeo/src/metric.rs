//! The two distance measures and the shared midpoint.

use crate::point::Point;
use crate::scalar::Scalar;

/// Taxicab distance |Δx| + |Δy|.
pub fn taxicab_distance(p: &Point, q: &Point) -> Scalar {
    (&p.x - &q.x).abs() + (&p.y - &q.y).abs()
}

/// Square of the Euclidean distance, kept squared so it stays rational.
pub fn euclidean_distance_squared(p: &Point, q: &Point) -> Scalar {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    &dx * &dx + &dy * &dy
}

/// Component-wise average; the midpoint is the same in both geometries.
pub fn midpoint(a: &Point, b: &Point) -> Point {
    let half = Scalar::ratio(1, 2);
    Point::new((&a.x + &b.x) * &half, (&a.y + &b.y) * half)
}
