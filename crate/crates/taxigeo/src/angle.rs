//! Angle measure in t-radians.
//!
//! A t-radian subtends unit arc length on the unit taxicab circle about the
//! vertex, so a full turn is 8 and a right angle is 2. Undirected measures
//! are folded into [0, 4]; counterclockwise directed arcs live in [0, 8).

use std::fmt;

use crate::circle::TaxicabCircle;
use crate::error::GeomError;
use crate::point::Point;
use crate::scalar::Scalar;

/// An angle measured in t-radians.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TAngle(Scalar);

impl TAngle {
    pub fn new(value: Scalar) -> Self {
        TAngle(value)
    }

    pub fn value(&self) -> &Scalar {
        &self.0
    }

    pub fn into_scalar(self) -> Scalar {
        self.0
    }
}

impl fmt::Display for TAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for TAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TAngle({})", self.0)
    }
}

impl From<Scalar> for TAngle {
    fn from(value: Scalar) -> Self {
        TAngle(value)
    }
}

impl serde::Serialize for TAngle {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// Closed form for an acute angle in standard position: an angle opening
/// counterclockwise from the positive x-axis to a ray of positive `slope`
/// measures 2 − 2/(1 + slope) t-radians.
pub fn angle_standard_position(slope: &Scalar) -> Result<TAngle, GeomError> {
    if !slope.is_positive() {
        return Err(GeomError::SlopeNotPositive(slope.clone()));
    }
    let two = Scalar::from(2);
    Ok(TAngle(&two - &(two.clone() / (Scalar::one() + slope))))
}

fn unit_points(
    vertex: &Point,
    p: &Point,
    q: &Point,
) -> Result<(TaxicabCircle, Point, Point), GeomError> {
    if p == vertex || q == vertex {
        return Err(GeomError::RayThroughVertex(vertex.clone()));
    }
    let unit = TaxicabCircle::unit(vertex.clone());
    let up = unit.ray_intersection(&(p - vertex))?;
    let uq = unit.ray_intersection(&(q - vertex))?;
    Ok((unit, up, uq))
}

/// Counterclockwise arc on the unit circle about `vertex` from the ray
/// toward `p` to the ray toward `q`, in [0, 8).
pub fn directed_arc(vertex: &Point, p: &Point, q: &Point) -> Result<TAngle, GeomError> {
    let (unit, up, uq) = unit_points(vertex, p, q)?;
    let arc = unit
        .arc_length_ccw(&up, &uq)
        .expect("ray intersections lie on the unit circle");
    Ok(TAngle(arc))
}

/// Undirected taxicab measure of the angle ∠(p, vertex, q), in [0, 4].
pub fn angle_measure(vertex: &Point, p: &Point, q: &Point) -> Result<TAngle, GeomError> {
    let arc = directed_arc(vertex, p, q)?.into_scalar();
    let complement = Scalar::from(8) - &arc;
    Ok(TAngle(arc.min(complement)))
}

/// True exactly when the angle measures 2 t-radians, which happens exactly
/// for Euclidean-perpendicular rays.
pub fn is_right_angle(vertex: &Point, p: &Point, q: &Point) -> Result<bool, GeomError> {
    Ok(angle_measure(vertex, p, q)?.value() == &Scalar::from(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(n: i64, d: i64) -> TAngle {
        TAngle::new(Scalar::ratio(n, d))
    }

    #[test]
    fn standard_position_formula() {
        assert_eq!(angle_standard_position(&Scalar::one()).unwrap(), t(1, 1));
        // frozen from the arc-length walk: ray (3,1) meets the unit circle at
        // (3/4,1/4), 1/2 beyond the east corner
        assert_eq!(angle_standard_position(&Scalar::ratio(1, 3)).unwrap(), t(1, 2));
        assert_eq!(angle_standard_position(&Scalar::from(3)).unwrap(), t(3, 2));
        assert!(angle_standard_position(&Scalar::zero()).is_err());
        assert!(angle_standard_position(&Scalar::from(-2)).is_err());
    }

    #[test]
    fn right_and_straight_angles() {
        let o = Point::origin();
        assert_eq!(
            angle_measure(&o, &Point::ints(1, 0), &Point::ints(0, 1)).unwrap(),
            t(2, 1)
        );
        assert_eq!(
            angle_measure(&o, &Point::ints(1, 0), &Point::ints(-1, 0)).unwrap(),
            t(4, 1)
        );
        assert!(is_right_angle(&o, &Point::ints(1, 0), &Point::ints(0, 1)).unwrap());
        assert!(is_right_angle(&o, &Point::ints(1, 2), &Point::ints(-2, 1)).unwrap());
        assert!(!is_right_angle(&o, &Point::ints(1, 0), &Point::ints(1, 1)).unwrap());
    }

    #[test]
    fn off_origin_vertex() {
        // frozen from the corner walk; also the quadrant-I base angle 3 − 2·3/4
        let vertex = Point::ints(3, 1);
        let measured = angle_measure(
            &vertex,
            &Point::origin(),
            &Point::new(Scalar::ratio(3, 2), Scalar::ratio(5, 2)),
        )
        .unwrap();
        assert_eq!(measured, t(3, 2));
    }

    #[test]
    fn directed_arc_orientation() {
        let o = Point::origin();
        let east = Point::ints(1, 0);
        let north = Point::ints(0, 1);
        assert_eq!(directed_arc(&o, &east, &north).unwrap(), t(2, 1));
        assert_eq!(directed_arc(&o, &north, &east).unwrap(), t(6, 1));
        let d = Point::ints(1, 1);
        assert_eq!(directed_arc(&o, &d, &d).unwrap(), t(0, 1));
    }

    #[test]
    fn degenerate_rays_rejected() {
        let v = Point::ints(2, 2);
        assert!(matches!(
            angle_measure(&v, &v, &Point::ints(3, 3)),
            Err(GeomError::RayThroughVertex(_))
        ));
        assert!(matches!(
            directed_arc(&v, &Point::ints(3, 3), &v),
            Err(GeomError::RayThroughVertex(_))
        ));
    }

    /// Angle measure is not preserved by general taxicab rotations: a
    /// deterministic search over small integer triples produces a witness
    /// whose measure changes under rotation by 1 t-radian about the origin.
    #[test]
    fn rotation_non_invariance_witness() {
        use crate::isometry::taxicab_rotate;
        let origin = Point::origin();
        let theta = TAngle::new(Scalar::one());
        let mut grid = Vec::new();
        for x in -2i64..=2 {
            for y in -2i64..=2 {
                if x != 0 || y != 0 {
                    grid.push(Point::ints(x, y));
                }
            }
        }
        let mut witness = None;
        'search: for v in &grid {
            for p in &grid {
                for q in &grid {
                    if p == v || q == v {
                        continue;
                    }
                    let before = angle_measure(v, p, q).unwrap();
                    let (rv, rp, rq) = (
                        taxicab_rotate(v, &origin, &theta).unwrap(),
                        taxicab_rotate(p, &origin, &theta).unwrap(),
                        taxicab_rotate(q, &origin, &theta).unwrap(),
                    );
                    if rp == rv || rq == rv {
                        continue;
                    }
                    let after = angle_measure(&rv, &rp, &rq).unwrap();
                    if before != after {
                        witness = Some((v.clone(), p.clone(), q.clone(), before, after));
                        break 'search;
                    }
                }
            }
        }
        let (v, p, q, before, after) = witness.expect("angles must not be rotation invariant");
        assert_ne!(before, after, "witness ({v}; {p}; {q})");
    }

    proptest! {
        /// The whole isometry group preserves angle measure.
        #[test]
        fn group_invariance(p in arb_point(), q in arb_point(), v in arb_point(),
                            i in 0usize..8, t in arb_point()) {
            prop_assume!(p != v && q != v);
            let f = crate::isometry::Isometry::new(crate::isometry::LinearPart::ALL[i], t);
            let before = angle_measure(&v, &p, &q).unwrap();
            let after = angle_measure(&f.apply(&v), &f.apply(&p), &f.apply(&q)).unwrap();
            prop_assert_eq!(before, after);
        }
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-300i64..300, 1i64..30).prop_map(|(n, d)| Scalar::ratio(n, d))
    }

    fn arb_point() -> impl Strategy<Value = Point> {
        (arb_scalar(), arb_scalar()).prop_map(|(x, y)| Point::new(x, y))
    }

    proptest! {
        #[test]
        fn translation_invariance(p in arb_point(), q in arb_point(), v in arb_point(), tr in arb_point()) {
            prop_assume!(p != v && q != v);
            let m1 = angle_measure(&v, &p, &q).unwrap();
            let m2 = angle_measure(&(&v + &tr), &(&p + &tr), &(&q + &tr)).unwrap();
            prop_assert_eq!(m1, m2);
        }

        #[test]
        fn symmetry_and_bounds(p in arb_point(), q in arb_point(), v in arb_point()) {
            prop_assume!(p != v && q != v);
            let m = angle_measure(&v, &p, &q).unwrap();
            prop_assert_eq!(m.clone(), angle_measure(&v, &q, &p).unwrap());
            prop_assert!(!m.value().is_negative());
            prop_assert!(m.value() <= &Scalar::from(4));
        }

        #[test]
        fn directed_arcs_are_complementary(p in arb_point(), q in arb_point(), v in arb_point()) {
            prop_assume!(p != v && q != v);
            let pq = directed_arc(&v, &p, &q).unwrap().into_scalar();
            let qp = directed_arc(&v, &q, &p).unwrap().into_scalar();
            if pq.is_zero() {
                prop_assert!(qp.is_zero());
            } else {
                prop_assert_eq!(pq + qp, Scalar::from(8));
            }
        }

        #[test]
        fn directed_arc_additivity(r1 in arb_point(), r2 in arb_point(), r3 in arb_point(), v in arb_point()) {
            prop_assume!(r1 != v && r2 != v && r3 != v);
            let a12 = directed_arc(&v, &r1, &r2).unwrap().into_scalar();
            let a23 = directed_arc(&v, &r2, &r3).unwrap().into_scalar();
            let a13 = directed_arc(&v, &r1, &r3).unwrap().into_scalar();
            prop_assert_eq!((a12 + a23).rem_euclid(&Scalar::from(8)), a13);
        }

        #[test]
        fn ray_scaling_invariance(p in arb_point(), q in arb_point(), v in arb_point(), kn in 1i64..40, kd in 1i64..40) {
            prop_assume!(p != v && q != v);
            let k = Scalar::ratio(kn, kd);
            let p_scaled = &v + &(&p - &v).scale(&k);
            let m1 = angle_measure(&v, &p, &q).unwrap();
            let m2 = angle_measure(&v, &p_scaled, &q).unwrap();
            prop_assert_eq!(m1, m2);
        }
    }
}
