//! Base angles of isosceles triangles.
//!
//! An isosceles triangle with its apex at the origin is a pair of radii of a
//! taxicab circle. Whether the two base angles are equal depends on how the
//! pair sits relative to the quadrants:
//!
//! * same quadrant: equal iff each point's horizontal component matches the
//!   other's vertical component (as magnitudes);
//! * adjacent quadrants: equal iff horizontal components match and vertical
//!   components match (as magnitudes);
//! * opposing quadrants: always equal.
//!
//! [`i5t_analyze`] normalizes a triangle with a group isometry, evaluates the
//! case's closed-form base angles, re-measures both angles from scratch on
//! the unit circle, and reports whether the coordinate condition predicted
//! the measured equality. Axis points belong to both neighboring quadrants,
//! so a pair may qualify for several configurations at once; all of them are
//! tracked.

use std::fmt;

use serde::ser::SerializeStruct;

use crate::angle::{angle_measure, TAngle};
use crate::circle::TaxicabCircle;
use crate::error::GeomError;
use crate::isometry::{Isometry, LinearPart};
use crate::metric::taxicab_distance;
use crate::point::Point;
use crate::scalar::Scalar;

/// Quadrant configuration of a pair of nonzero points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConfigurationKind {
    SameQuadrant,
    AdjacentQuadrants,
    OpposingQuadrants,
}

impl ConfigurationKind {
    pub fn name(self) -> &'static str {
        match self {
            ConfigurationKind::SameQuadrant => "same_quadrant",
            ConfigurationKind::AdjacentQuadrants => "adjacent_quadrants",
            ConfigurationKind::OpposingQuadrants => "opposing_quadrants",
        }
    }
}

impl fmt::Display for ConfigurationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The primary configuration of a pair plus every configuration it qualifies
/// for when axis membership makes several possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub kind: ConfigurationKind,
    pub all_kinds: Vec<ConfigurationKind>,
}

/// Closed quadrants containing `p`, as a bitmask over quadrants 1..=4.
/// Axis points belong to both neighboring quadrants.
fn quadrant_mask(p: &Point) -> u8 {
    let (sx, sy) = (p.x.signum(), p.y.signum());
    let mut mask = 0u8;
    if sx >= 0 && sy >= 0 {
        mask |= 1 << 0;
    }
    if sx <= 0 && sy >= 0 {
        mask |= 1 << 1;
    }
    if sx <= 0 && sy <= 0 {
        mask |= 1 << 2;
    }
    if sx >= 0 && sy <= 0 {
        mask |= 1 << 3;
    }
    mask
}

/// Classifies the quadrant configuration of `p` and `q` (apex already at the
/// origin). When axis points allow several readings, the primary kind is the
/// most separated one: opposing, then adjacent, then same.
pub fn classify_configuration(p: &Point, q: &Point) -> Result<Configuration, GeomError> {
    if p.is_origin() || q.is_origin() {
        return Err(GeomError::PointAtOrigin);
    }
    let (mp, mq) = (quadrant_mask(p), quadrant_mask(q));
    let mut same = false;
    let mut adjacent = false;
    let mut opposing = false;
    for a in 0..4u8 {
        if mp & (1 << a) == 0 {
            continue;
        }
        for b in 0..4u8 {
            if mq & (1 << b) == 0 {
                continue;
            }
            match (4 + a - b) % 4 {
                0 => same = true,
                2 => opposing = true,
                _ => adjacent = true,
            }
        }
    }
    let mut all_kinds = Vec::new();
    if same {
        all_kinds.push(ConfigurationKind::SameQuadrant);
    }
    if adjacent {
        all_kinds.push(ConfigurationKind::AdjacentQuadrants);
    }
    if opposing {
        all_kinds.push(ConfigurationKind::OpposingQuadrants);
    }
    let kind = *all_kinds.last().expect("a nonzero point is in some quadrant");
    Ok(Configuration { kind, all_kinds })
}

/// A nondegenerate isosceles triangle: two legs of equal positive taxicab
/// length meeting at the apex, with the three vertices not collinear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoscelesTriangle {
    apex: Point,
    p: Point,
    q: Point,
}

impl IsoscelesTriangle {
    pub fn new(apex: Point, p: Point, q: Point) -> Result<Self, GeomError> {
        let leg_p = taxicab_distance(&p, &apex);
        let leg_q = taxicab_distance(&q, &apex);
        if leg_p.is_zero() || leg_q.is_zero() {
            return Err(GeomError::DegenerateTriangle);
        }
        if leg_p != leg_q {
            return Err(GeomError::UnequalLegs(leg_p, leg_q));
        }
        if (&p - &apex).cross(&(&q - &apex)).is_zero() {
            return Err(GeomError::DegenerateTriangle);
        }
        Ok(IsoscelesTriangle { apex, p, q })
    }

    pub fn apex(&self) -> &Point {
        &self.apex
    }

    pub fn p(&self) -> &Point {
        &self.p
    }

    pub fn q(&self) -> &Point {
        &self.q
    }

    pub fn leg_length(&self) -> Scalar {
        taxicab_distance(&self.p, &self.apex)
    }

    /// Image of the triangle under a group isometry (still isosceles, since
    /// the legs keep their lengths).
    pub fn transform(&self, f: &Isometry) -> IsoscelesTriangle {
        IsoscelesTriangle {
            apex: f.apply(&self.apex),
            p: f.apply(&self.p),
            q: f.apply(&self.q),
        }
    }
}

/// The pair ordered so the counterclockwise arc from the first point to the
/// second is the apex angle (< 4 t-radians). Requires a nondegenerate pair
/// on a common circle about the origin.
fn ccw_order<'a>(circle: &TaxicabCircle, p: &'a Point, q: &'a Point) -> (&'a Point, &'a Point) {
    let sp = circle.arc_position(p).expect("p lies on the circle");
    let sq = circle.arc_position(q).expect("q lies on the circle");
    let directed = (sq - sp).rem_euclid(&circle.perimeter());
    let half = Scalar::from(4) * circle.radius();
    debug_assert!(directed != half, "collinear pair has no orientation");
    if directed < half {
        (p, q)
    } else {
        (q, p)
    }
}

fn in_quadrant(p: &Point, quadrant: u8) -> bool {
    quadrant_mask(p) & (1 << (quadrant - 1)) != 0
}

/// Which canonical case a counterclockwise-ordered pair realizes, if any.
fn canonical_case(behind: &Point, ahead: &Point) -> Option<ConfigurationKind> {
    if !in_quadrant(behind, 1) {
        return None;
    }
    if in_quadrant(ahead, 1) {
        Some(ConfigurationKind::SameQuadrant)
    } else if in_quadrant(ahead, 2) {
        Some(ConfigurationKind::AdjacentQuadrants)
    } else if in_quadrant(ahead, 3) {
        Some(ConfigurationKind::OpposingQuadrants)
    } else {
        None
    }
}

/// Moves the apex to the origin and the legs into one of the canonical
/// orientations (pair in quadrant I; split across I and II; split across
/// I, II, III) using a group isometry. Returns the isometry together with
/// the images of `p` and `q`, in argument order.
pub fn normalize_triangle(t: &IsoscelesTriangle) -> (Isometry, Point, Point) {
    let radius = t.leg_length();
    let circle = TaxicabCircle::new(Point::origin(), radius).expect("positive leg length");
    let preferences = [
        ConfigurationKind::SameQuadrant,
        ConfigurationKind::AdjacentQuadrants,
        ConfigurationKind::OpposingQuadrants,
    ];
    for want in preferences {
        for linear in LinearPart::ALL {
            let f = Isometry::new(linear, -&linear.apply(t.apex()));
            let p = f.apply(t.p());
            let q = f.apply(t.q());
            let (behind, ahead) = ccw_order(&circle, &p, &q);
            if canonical_case(behind, ahead) == Some(want) {
                return (f, p, q);
            }
        }
    }
    unreachable!("some quarter turn lands any nondegenerate pair in a canonical case")
}

fn validate_origin_pair(p: &Point, q: &Point) -> Result<Scalar, GeomError> {
    let rp = p.taxicab_norm();
    let rq = q.taxicab_norm();
    if rp.is_zero() || rq.is_zero() || p.cross(q).is_zero() {
        return Err(GeomError::DegenerateTriangle);
    }
    if rp != rq {
        return Err(GeomError::UnequalLegs(rp, rq));
    }
    Ok(rp)
}

/// Closed-form base angles of the origin triangle with legs to `p` and `q`.
///
/// The pair must already be in a canonical orientation (see
/// [`normalize_triangle`]). The first angle sits at the counterclockwise
/// earlier leg, the second at the later one, so the result does not depend
/// on the argument order.
pub fn base_angles(p: &Point, q: &Point) -> Result<(TAngle, TAngle), GeomError> {
    let r = validate_origin_pair(p, q)?;
    let circle = TaxicabCircle::new(Point::origin(), r.clone()).expect("positive radius");
    let (behind, ahead) = ccw_order(&circle, p, q);
    let case = canonical_case(behind, ahead).ok_or(GeomError::NonCanonicalPair)?;
    let two = Scalar::from(2);
    let three = Scalar::from(3);
    let four = Scalar::from(4);
    match case {
        ConfigurationKind::SameQuadrant => {
            // angle at each vertex is 1 + the standard-position angle of the
            // chord seen from it: 3 − 2x/r at the earlier leg, 3 − 2y/r at
            // the later leg
            let alpha = &three - &(&two * &behind.x / &r);
            let beta = three - &two * &ahead.y / r;
            Ok((TAngle::new(alpha), TAngle::new(beta)))
        }
        ConfigurationKind::AdjacentQuadrants => {
            // earlier leg (x0,y0) in QI, later (−x1,y1) in QII; the formulas
            // assume y0 ≥ y1, and mirroring across x=0 swaps the roles
            let (x0, y0) = (&behind.x, &behind.y);
            let (x1, y1) = (-&ahead.x, ahead.y.clone());
            let mirrored = *y0 < y1;
            let (x0, y0, x1, y1) = if mirrored {
                (x1.clone(), y1.clone(), x0.clone(), y0.clone())
            } else {
                (x0.clone(), y0.clone(), x1.clone(), y1.clone())
            };
            let chord = &x1 + &x0 + &y0 - &y1;
            debug_assert_eq!(chord, taxicab_distance(behind, ahead));
            let span = &two * &(&x0 + &x1) / &chord;
            let alpha = &span - &(&two * &x0 / &r);
            let beta = four - span - &two * &x1 / r;
            if mirrored {
                Ok((TAngle::new(beta), TAngle::new(alpha)))
            } else {
                Ok((TAngle::new(alpha), TAngle::new(beta)))
            }
        }
        ConfigurationKind::OpposingQuadrants => {
            // earlier leg (x0,y0) in QI, later (−x1,−y1) in QIII
            let (x0, y0) = (&behind.x, &behind.y);
            let (x1, y1) = (-&ahead.x, -&ahead.y);
            let alpha = (y0 - &y1) / &r;
            let beta = (x1 - x0) / r;
            Ok((TAngle::new(alpha), TAngle::new(beta)))
        }
    }
}

/// Evaluates the base-angle equality condition for the origin pair, without
/// requiring a canonical orientation.
///
/// Components are compared as magnitudes. An axis pair that qualifies for
/// several configurations satisfies the condition if any qualifying
/// configuration's condition holds.
pub fn i5t_condition(p: &Point, q: &Point) -> Result<bool, GeomError> {
    validate_origin_pair(p, q)?;
    let config = classify_configuration(p, q)?;
    let holds = config.all_kinds.iter().any(|kind| match kind {
        ConfigurationKind::SameQuadrant => {
            p.x.abs() == q.y.abs() && q.x.abs() == p.y.abs()
        }
        ConfigurationKind::AdjacentQuadrants => {
            p.x.abs() == q.x.abs() && p.y.abs() == q.y.abs()
        }
        ConfigurationKind::OpposingQuadrants => true,
    });
    Ok(holds)
}

/// Everything the analysis establishes about one triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct I5TReport {
    pub configuration: Configuration,
    /// Normalized images of the two legs.
    pub p: Point,
    pub q: Point,
    pub radius: Scalar,
    /// The smaller closed-form base angle. The pair is reported in ascending
    /// order because reflections swap which leg comes first counterclockwise,
    /// and the report must be invariant under the whole group.
    pub alpha: TAngle,
    /// The larger closed-form base angle.
    pub beta: TAngle,
    pub condition_predicted: bool,
    pub angles_equal_measured: bool,
    pub agreement: bool,
    pub normalizing_isometry: Isometry,
}

impl serde::Serialize for I5TReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let names: Vec<&str> = self.configuration.all_kinds.iter().map(|k| k.name()).collect();
        let mut s = serializer.serialize_struct("I5TReport", 11)?;
        s.serialize_field("configuration", self.configuration.kind.name())?;
        s.serialize_field("all_kinds", &names)?;
        s.serialize_field("p", &self.p)?;
        s.serialize_field("q", &self.q)?;
        s.serialize_field("radius", &self.radius)?;
        s.serialize_field("alpha", &self.alpha)?;
        s.serialize_field("beta", &self.beta)?;
        s.serialize_field("condition_predicted", &self.condition_predicted)?;
        s.serialize_field("angles_equal_measured", &self.angles_equal_measured)?;
        s.serialize_field("agreement", &self.agreement)?;
        s.serialize_field("normalizing_isometry", &self.normalizing_isometry.to_string())?;
        s.end()
    }
}

impl I5TReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    /// The tuple that must be invariant under isometric transport.
    pub fn transport_tuple(&self) -> (TAngle, TAngle, bool, bool) {
        (
            self.alpha.clone(),
            self.beta.clone(),
            self.condition_predicted,
            self.agreement,
        )
    }
}

/// Full analysis: normalize, classify, evaluate the closed forms, re-measure
/// both angles directly on the unit circle, and compare prediction with
/// measurement. The closed form must match the measurement exactly; a
/// mismatch is reported as an error rather than papered over.
pub fn i5t_analyze(t: &IsoscelesTriangle) -> Result<I5TReport, GeomError> {
    let (f, p, q) = normalize_triangle(t);
    let configuration = classify_configuration(&p, &q)?;
    let (alpha, beta) = base_angles(&p, &q)?;

    let radius = p.taxicab_norm();
    let circle = TaxicabCircle::new(Point::origin(), radius.clone()).expect("positive radius");
    let origin = Point::origin();
    let (behind, ahead) = ccw_order(&circle, &p, &q);
    let measured_alpha = angle_measure(behind, &origin, ahead)?;
    let measured_beta = angle_measure(ahead, &origin, behind)?;
    for (vertex, closed, measured) in [
        (behind, &alpha, &measured_alpha),
        (ahead, &beta, &measured_beta),
    ] {
        if closed != measured {
            return Err(GeomError::ClosedFormMismatch {
                vertex: vertex.clone(),
                closed_form: closed.value().clone(),
                measured: measured.value().clone(),
            });
        }
    }

    let condition_predicted = i5t_condition(&p, &q)?;
    let angles_equal_measured = measured_alpha == measured_beta;
    let (alpha, beta) = if alpha <= beta { (alpha, beta) } else { (beta, alpha) };
    Ok(I5TReport {
        configuration,
        p,
        q,
        radius,
        alpha,
        beta,
        condition_predicted,
        angles_equal_measured,
        agreement: condition_predicted == angles_equal_measured,
        normalizing_isometry: f,
    })
}
