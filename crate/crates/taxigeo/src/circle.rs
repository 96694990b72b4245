//! Taxicab circles.
//!
//! A circle of radius `r` is the diamond |Δx| + |Δy| = r with four sides of
//! Euclidean slope ±1 and total perimeter 8r. Sides are numbered S1..S4
//! counterclockwise starting from the northeast side, and points on the
//! circle are addressed by counterclockwise arc length from the east corner.

use std::fmt;

use crate::error::GeomError;
use crate::metric::taxicab_distance;
use crate::point::Point;
use crate::scalar::Scalar;

/// One of the four sides, counterclockwise: S1 northeast, S2 northwest,
/// S3 southwest, S4 southeast.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    S1,
    S2,
    S3,
    S4,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::S1, Side::S2, Side::S3, Side::S4];

    /// Index 0..=3 in counterclockwise order.
    pub fn index(self) -> u8 {
        match self {
            Side::S1 => 0,
            Side::S2 => 1,
            Side::S3 => 2,
            Side::S4 => 3,
        }
    }

    pub fn ccw_next(self) -> Side {
        Side::ALL[((self.index() + 1) % 4) as usize]
    }

    pub fn ccw_prev(self) -> Side {
        Side::ALL[((self.index() + 3) % 4) as usize]
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.index() + 1)
    }
}

/// Where a point sits on a circle.
///
/// A corner is shared by two sides; it is classified on the side that starts
/// there in counterclockwise order (the east corner belongs to S1), with
/// `corner` set so no information is lost.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CirclePosition {
    pub side: Side,
    pub corner: bool,
}

impl CirclePosition {
    /// The other side meeting at this point, when it is a corner.
    pub fn shared_with(&self) -> Option<Side> {
        self.corner.then(|| self.side.ccw_prev())
    }
}

impl fmt::Display for CirclePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shared_with() {
            Some(prev) => write!(f, "corner {}/{}", prev, self.side),
            None => write!(f, "{}", self.side),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaxicabCircle {
    center: Point,
    radius: Scalar,
}

impl TaxicabCircle {
    pub fn new(center: Point, radius: Scalar) -> Result<Self, GeomError> {
        if !radius.is_positive() {
            return Err(GeomError::NonPositiveRadius(radius));
        }
        Ok(TaxicabCircle { center, radius })
    }

    /// The unit circle used to measure angles at `vertex`.
    pub fn unit(vertex: Point) -> Self {
        TaxicabCircle {
            center: vertex,
            radius: Scalar::one(),
        }
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn radius(&self) -> &Scalar {
        &self.radius
    }

    /// Total arc length, exactly 8r.
    pub fn perimeter(&self) -> Scalar {
        Scalar::from(8) * &self.radius
    }

    pub fn contains(&self, p: &Point) -> bool {
        taxicab_distance(p, &self.center) == self.radius
    }

    /// Corners in counterclockwise order: east, north, west, south.
    pub fn corners(&self) -> [Point; 4] {
        let (cx, cy, r) = (&self.center.x, &self.center.y, &self.radius);
        [
            Point::new(cx + r, cy.clone()),
            Point::new(cx.clone(), cy + r),
            Point::new(cx - r, cy.clone()),
            Point::new(cx.clone(), cy - r),
        ]
    }

    /// Endpoints of a side in counterclockwise order.
    pub fn side_endpoints(&self, side: Side) -> (Point, Point) {
        let c = self.corners();
        let i = side.index() as usize;
        (c[i].clone(), c[(i + 1) % 4].clone())
    }

    /// Side classification of `p`, or `None` when `p` is not on the circle.
    pub fn position(&self, p: &Point) -> Option<CirclePosition> {
        if !self.contains(p) {
            return None;
        }
        let dx = &p.x - &self.center.x;
        let dy = &p.y - &self.center.y;
        let pos = match (dx.signum(), dy.signum()) {
            (1, 1) => CirclePosition { side: Side::S1, corner: false },
            (-1, 1) => CirclePosition { side: Side::S2, corner: false },
            (-1, -1) => CirclePosition { side: Side::S3, corner: false },
            (1, -1) => CirclePosition { side: Side::S4, corner: false },
            (1, 0) => CirclePosition { side: Side::S1, corner: true },
            (0, 1) => CirclePosition { side: Side::S2, corner: true },
            (-1, 0) => CirclePosition { side: Side::S3, corner: true },
            (0, -1) => CirclePosition { side: Side::S4, corner: true },
            _ => unreachable!("on-circle point cannot coincide with the center"),
        };
        Some(pos)
    }

    /// Counterclockwise arc length from the east corner to `p`, in [0, 8r).
    pub fn arc_position(&self, p: &Point) -> Result<Scalar, GeomError> {
        let pos = self.position(p).ok_or_else(|| GeomError::PointNotOnCircle {
            point: p.clone(),
            center: self.center.clone(),
            radius: self.radius.clone(),
        })?;
        let (cx, r) = (&self.center.x, &self.radius);
        let two = Scalar::from(2);
        let s = match pos.side {
            // along a slope-±1 side, arc length accrues as 2|Δx|
            Side::S1 => &two * &(cx + r - &p.x),
            Side::S2 => &two * r + &two * &(cx - &p.x),
            Side::S3 => Scalar::from(4) * r + &two * &(&p.x - cx + r),
            Side::S4 => Scalar::from(6) * r + &two * &(&p.x - cx),
        };
        Ok(s)
    }

    /// The point at counterclockwise arc length `s` from the east corner.
    /// `s` is reduced modulo the perimeter, so any rational is accepted.
    pub fn point_at_arc(&self, s: &Scalar) -> Point {
        let s = s.rem_euclid(&self.perimeter());
        let side_span = Scalar::from(2) * &self.radius;
        let k: i64 = (&s / &side_span)
            .floor_int()
            .try_into()
            .expect("side index in 0..4");
        let t = s - Scalar::from(k) * &side_span;
        let half_t = t * Scalar::ratio(1, 2);
        let (cx, cy, r) = (&self.center.x, &self.center.y, &self.radius);
        match k {
            0 => Point::new(cx + r - &half_t, cy + &half_t),
            1 => Point::new(cx - &half_t, cy + r - &half_t),
            2 => Point::new(cx - r + &half_t, cy - &half_t),
            3 => Point::new(cx + &half_t, cy - r + &half_t),
            _ => unreachable!("arc reduced modulo the perimeter"),
        }
    }

    /// Counterclockwise arc length from `a` to `b`, in [0, 8r).
    ///
    /// Both points must lie on the circle; the offending point is named in
    /// the error otherwise.
    pub fn arc_length_ccw(&self, a: &Point, b: &Point) -> Result<Scalar, GeomError> {
        let sa = self.arc_position(a)?;
        let sb = self.arc_position(b)?;
        Ok((sb - sa).rem_euclid(&self.perimeter()))
    }

    /// The unique point where the ray from the center along `direction`
    /// meets the circle. `direction` is relative to the center.
    pub fn ray_intersection(&self, direction: &Point) -> Result<Point, GeomError> {
        let norm = direction.taxicab_norm();
        if norm.is_zero() {
            return Err(GeomError::ZeroDirection);
        }
        let k = &self.radius / norm;
        Ok(&self.center + &direction.scale(&k))
    }
}
