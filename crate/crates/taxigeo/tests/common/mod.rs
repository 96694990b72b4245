//! Independent oracles used by the integration suites.
//!
//! Nothing here calls the kernel's arc parametrization or angle code: arc
//! length is re-derived by walking the circle corner to corner and summing
//! raw |Δx| + |Δy| per segment, so it can referee those implementations.

use taxigeo::{Point, Scalar};

/// Which corner a counterclockwise walk starting at `p` reaches next.
/// `p` must lie on the circle (|dx| + |dy| = r).
fn next_corner_ccw(center: &Point, r: &Scalar, p: &Point) -> Point {
    let dx = &p.x - &center.x;
    let dy = &p.y - &center.y;
    let east = Point::new(&center.x + r, center.y.clone());
    let north = Point::new(center.x.clone(), &center.y + r);
    let west = Point::new(&center.x - r, center.y.clone());
    let south = Point::new(center.x.clone(), &center.y - r);
    if dx.is_positive() && !dy.is_negative() {
        north // northeast side, east corner included
    } else if !dx.is_positive() && dy.is_positive() {
        west // northwest side, north corner included
    } else if dx.is_negative() && !dy.is_positive() {
        south // southwest side, west corner included
    } else {
        east // southeast side, south corner included
    }
}

fn seg_len(a: &Point, b: &Point) -> Scalar {
    (&a.x - &b.x).abs() + (&a.y - &b.y).abs()
}

/// True when walking counterclockwise from `from` reaches `to` without
/// passing the corner `from` is heading toward (both on the same side arc).
fn reaches_directly(center: &Point, r: &Scalar, from: &Point, to: &Point) -> bool {
    if next_corner_ccw(center, r, from) != next_corner_ccw(center, r, to) {
        return false;
    }
    let heading = next_corner_ccw(center, r, from);
    // x decreases toward the north and west corners, increases toward the
    // south and east corners
    if heading.y > center.y || heading.x < center.x {
        to.x <= from.x
    } else {
        to.x >= from.x
    }
}

/// Arc length of the counterclockwise walk from `a` to `b`, accumulated
/// segment by segment through the corners.
pub fn corner_walk_arc(center: &Point, r: &Scalar, a: &Point, b: &Point) -> Scalar {
    assert_eq!(&seg_len(a, center), r, "a not on the circle");
    assert_eq!(&seg_len(b, center), r, "b not on the circle");
    if a == b {
        return Scalar::zero();
    }
    let mut total = Scalar::zero();
    let mut cur = a.clone();
    for _ in 0..6 {
        if reaches_directly(center, r, &cur, b) {
            return total + seg_len(&cur, b);
        }
        let corner = next_corner_ccw(center, r, &cur);
        total = total + seg_len(&cur, &corner);
        cur = corner;
        if &cur == b {
            return total;
        }
    }
    unreachable!("walk visits at most four corners");
}

/// Point where the ray from `vertex` toward `p` crosses the unit circle
/// about `vertex`, computed from first principles.
pub fn unit_ray_point(vertex: &Point, p: &Point) -> Point {
    let dx = &p.x - &vertex.x;
    let dy = &p.y - &vertex.y;
    let norm = dx.abs() + dy.abs();
    assert!(norm.is_positive(), "ray through the vertex is degenerate");
    Point::new(&vertex.x + &(&dx / &norm), &vertex.y + &(&dy / &norm))
}

/// Counterclockwise arc on the unit circle from the ray toward `p` to the
/// ray toward `q`, in [0, 8).
pub fn oracle_directed_arc(vertex: &Point, p: &Point, q: &Point) -> Scalar {
    let one = Scalar::one();
    corner_walk_arc(
        vertex,
        &one,
        &unit_ray_point(vertex, p),
        &unit_ray_point(vertex, q),
    )
}

/// Undirected taxicab angle measure in [0, 4], by the corner walk.
pub fn oracle_angle(vertex: &Point, p: &Point, q: &Point) -> Scalar {
    let arc = oracle_directed_arc(vertex, p, q);
    let complement = Scalar::from(8) - &arc;
    arc.min(complement)
}
