//! Taxicab isometries and the maps that fail to be one.
//!
//! The distance-preserving maps assembled here are exactly the compositions
//! of translations, quarter-turn rotations, and the four special reflections.
//! Every such composition collapses to a canonical form: one of the eight
//! signed-permutation linear parts followed by a translation. The general
//! taxicab rotation and reflection (arbitrary angle, arbitrary mirror line)
//! are also provided; away from the special cases they change distances, and
//! a deterministic grid search produces the witness pair.

use std::fmt;
use std::str::FromStr;

use crate::angle::TAngle;
use crate::circle::TaxicabCircle;
use crate::error::{GeomError, ParseError};
use crate::line::Line;
use crate::metric::taxicab_distance;
use crate::point::Point;
use crate::scalar::Scalar;

/// The eight signed-permutation linear maps: the dihedral group of the
/// square, which is precisely the set of linear taxicab isometries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinearPart {
    Identity,
    /// Rotation by 2 t-radians: (x,y) ↦ (−y,x).
    Rot2,
    /// Rotation by 4 t-radians: (x,y) ↦ (−x,−y).
    Rot4,
    /// Rotation by 6 t-radians: (x,y) ↦ (y,−x).
    Rot6,
    /// Reflection across y=0: (x,y) ↦ (x,−y).
    ReflectXAxis,
    /// Reflection across x=0: (x,y) ↦ (−x,y).
    ReflectYAxis,
    /// Reflection across y=x: (x,y) ↦ (y,x).
    ReflectYEqX,
    /// Reflection across y=−x: (x,y) ↦ (−y,−x).
    ReflectYEqNegX,
}

use LinearPart::*;

impl LinearPart {
    pub const ALL: [LinearPart; 8] = [
        Identity,
        Rot2,
        Rot4,
        Rot6,
        ReflectXAxis,
        ReflectYAxis,
        ReflectYEqX,
        ReflectYEqNegX,
    ];

    pub fn apply(self, p: &Point) -> Point {
        match self {
            Identity => p.clone(),
            Rot2 => Point::new(-&p.y, p.x.clone()),
            Rot4 => Point::new(-&p.x, -&p.y),
            Rot6 => Point::new(p.y.clone(), -&p.x),
            ReflectXAxis => Point::new(p.x.clone(), -&p.y),
            ReflectYAxis => Point::new(-&p.x, p.y.clone()),
            ReflectYEqX => Point::new(p.y.clone(), p.x.clone()),
            ReflectYEqNegX => Point::new(-&p.y, -&p.x),
        }
    }

    fn apply_ints(self, (x, y): (i8, i8)) -> (i8, i8) {
        match self {
            Identity => (x, y),
            Rot2 => (-y, x),
            Rot4 => (-x, -y),
            Rot6 => (y, -x),
            ReflectXAxis => (x, -y),
            ReflectYAxis => (-x, y),
            ReflectYEqX => (y, x),
            ReflectYEqNegX => (-y, -x),
        }
    }

    /// Matrix columns (images of the basis vectors).
    pub fn columns(self) -> ((i8, i8), (i8, i8)) {
        (self.apply_ints((1, 0)), self.apply_ints((0, 1)))
    }

    pub fn from_columns(c1: (i8, i8), c2: (i8, i8)) -> Option<LinearPart> {
        LinearPart::ALL
            .into_iter()
            .find(|l| l.columns() == (c1, c2))
    }

    /// Group product: `self ∘ other` (other acts first).
    pub fn compose(self, other: LinearPart) -> LinearPart {
        let c1 = self.apply_ints(other.apply_ints((1, 0)));
        let c2 = self.apply_ints(other.apply_ints((0, 1)));
        LinearPart::from_columns(c1, c2)
            .expect("signed permutations are closed under composition")
    }

    pub fn inverse(self) -> LinearPart {
        match self {
            Rot2 => Rot6,
            Rot6 => Rot2,
            other => other, // identity, the half turn, and reflections are involutions
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Identity => "identity",
            Rot2 => "rot2",
            Rot4 => "rot4",
            Rot6 => "rot6",
            ReflectXAxis => "reflect_x_axis",
            ReflectYAxis => "reflect_y_axis",
            ReflectYEqX => "reflect_y_eq_x",
            ReflectYEqNegX => "reflect_y_eq_neg_x",
        }
    }
}

impl fmt::Display for LinearPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LinearPart {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LinearPart::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| ParseError::Isometry(s.to_owned()))
    }
}

/// One of the four mirror directions that preserve taxicab distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialAxis {
    /// y = x
    YEqX,
    /// y = −x
    YEqNegX,
    /// y = 0
    XAxis,
    /// x = 0
    YAxis,
}

impl SpecialAxis {
    pub const ALL: [SpecialAxis; 4] = [
        SpecialAxis::YEqX,
        SpecialAxis::YEqNegX,
        SpecialAxis::XAxis,
        SpecialAxis::YAxis,
    ];

    pub fn linear(self) -> LinearPart {
        match self {
            SpecialAxis::YEqX => ReflectYEqX,
            SpecialAxis::YEqNegX => ReflectYEqNegX,
            SpecialAxis::XAxis => ReflectXAxis,
            SpecialAxis::YAxis => ReflectYAxis,
        }
    }

    /// The mirror line of this direction passing through `p`.
    pub fn line_through(self, p: &Point) -> Line {
        let one = Scalar::one;
        let zero = Scalar::zero;
        match self {
            SpecialAxis::YEqX => Line::from_coefficients(one(), -one(), &p.x - &p.y),
            SpecialAxis::YEqNegX => Line::from_coefficients(one(), one(), &p.x + &p.y),
            SpecialAxis::XAxis => Line::from_coefficients(zero(), one(), p.y.clone()),
            SpecialAxis::YAxis => Line::from_coefficients(one(), zero(), p.x.clone()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SpecialAxis::YEqX => "y=x",
            SpecialAxis::YEqNegX => "y=-x",
            SpecialAxis::XAxis => "y=0",
            SpecialAxis::YAxis => "x=0",
        }
    }
}

impl fmt::Display for SpecialAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpecialAxis {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SpecialAxis::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| ParseError::Isometry(s.to_owned()))
    }
}

/// A taxicab isometry in canonical form: `p ↦ linear(p) + translation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isometry {
    linear: LinearPart,
    translation: Point,
}

impl Isometry {
    pub fn new(linear: LinearPart, translation: Point) -> Self {
        Isometry { linear, translation }
    }

    pub fn identity() -> Self {
        Isometry::new(Identity, Point::origin())
    }

    pub fn linear(&self) -> LinearPart {
        self.linear
    }

    pub fn translation(&self) -> &Point {
        &self.translation
    }

    pub fn is_identity(&self) -> bool {
        self.linear == Identity && self.translation.is_origin()
    }

    /// Translation by `v`.
    pub fn translation_by(v: Point) -> Self {
        Isometry::new(Identity, v)
    }

    /// Rotation by 2n t-radians counterclockwise about `center` (n reduced
    /// modulo 4; arbitrary centers come from conjugation with translations).
    pub fn rotation_2n(n: i64, center: &Point) -> Self {
        let linear = match n.rem_euclid(4) {
            0 => Identity,
            1 => Rot2,
            2 => Rot4,
            3 => Rot6,
            _ => unreachable!(),
        };
        Isometry::new(linear, center - &linear.apply(center))
    }

    /// Reflection across the line of direction `axis` passing through
    /// `through`.
    pub fn reflection_special(axis: SpecialAxis, through: &Point) -> Self {
        let linear = axis.linear();
        Isometry::new(linear, through - &linear.apply(through))
    }

    pub fn apply(&self, p: &Point) -> Point {
        &self.linear.apply(p) + &self.translation
    }

    /// Canonical form of `self ∘ other` (other acts first).
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry::new(
            self.linear.compose(other.linear),
            &self.linear.apply(&other.translation) + &self.translation,
        )
    }

    pub fn invert(&self) -> Isometry {
        let inv = self.linear.inverse();
        Isometry::new(inv, -&inv.apply(&self.translation))
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "linear={} t={}", self.linear, self.translation)
    }
}

impl FromStr for Isometry {
    type Err = ParseError;

    /// Parses the text form `linear=<name> t=<x>,<y>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::Isometry(s.to_owned());
        let mut parts = s.split_whitespace();
        let linear = parts
            .next()
            .and_then(|w| w.strip_prefix("linear="))
            .ok_or_else(bad)?
            .parse::<LinearPart>()
            .map_err(|_| bad())?;
        let translation = parts
            .next()
            .and_then(|w| w.strip_prefix("t="))
            .ok_or_else(bad)?
            .parse::<Point>()
            .map_err(|_| bad())?;
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(Isometry::new(linear, translation))
    }
}

impl serde::Serialize for Isometry {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Isometry", 2)?;
        s.serialize_field("linear", self.linear.name())?;
        s.serialize_field("t", &self.translation)?;
        s.end()
    }
}

/// A general affine candidate map `p ↦ M·p + offset`, not necessarily an
/// isometry. Row-major matrix: x' = xx·x + xy·y, y' = yx·x + yy·y.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub xx: Scalar,
    pub xy: Scalar,
    pub yx: Scalar,
    pub yy: Scalar,
    pub offset: Point,
}

impl AffineMap {
    pub fn new(xx: Scalar, xy: Scalar, yx: Scalar, yy: Scalar, offset: Point) -> Self {
        AffineMap { xx, xy, yx, yy, offset }
    }

    pub fn linear(xx: Scalar, xy: Scalar, yx: Scalar, yy: Scalar) -> Self {
        AffineMap::new(xx, xy, yx, yy, Point::origin())
    }

    pub fn from_isometry(f: &Isometry) -> Self {
        let ((xx, yx), (xy, yy)) = f.linear().columns();
        AffineMap::new(
            Scalar::from(i64::from(xx)),
            Scalar::from(i64::from(xy)),
            Scalar::from(i64::from(yx)),
            Scalar::from(i64::from(yy)),
            f.translation().clone(),
        )
    }

    pub fn apply(&self, p: &Point) -> Point {
        let x = &self.xx * &p.x + &self.xy * &p.y;
        let y = &self.yx * &p.x + &self.yy * &p.y;
        &Point::new(x, y) + &self.offset
    }

    /// True iff the linear part is a signed permutation matrix, i.e. the map
    /// can be written as an [`Isometry`].
    pub fn is_signed_permutation(&self) -> bool {
        let unit = |s: &Scalar| s.abs() == Scalar::one();
        let axis_aligned =
            unit(&self.xx) && self.yx.is_zero() && self.xy.is_zero() && unit(&self.yy);
        let axis_swapped =
            self.xx.is_zero() && unit(&self.yx) && unit(&self.xy) && self.yy.is_zero();
        axis_aligned || axis_swapped
    }
}

/// Outcome of the affine isometry decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineVerdict {
    pub isometry: bool,
    /// For rejected maps, the first grid pair whose distance changes.
    pub witness: Option<(Point, Point)>,
}

/// Decides whether an affine map preserves taxicab distance.
///
/// Acceptance is the signed-permutation test on the linear part; rejection
/// comes with a witness pair found by [`find_distance_change_witness`].
pub fn is_taxicab_isometry_affine(m: &AffineMap) -> AffineVerdict {
    if m.is_signed_permutation() {
        return AffineVerdict { isometry: true, witness: None };
    }
    let witness = find_distance_change_witness(|p| Some(m.apply(p)), 4);
    debug_assert!(witness.is_some(), "non-isometry must fail on the small grid");
    AffineVerdict { isometry: false, witness }
}

/// First pair of integer grid points (|coordinates| ≤ `bound`) whose taxicab
/// distance changes under `map`.
///
/// Points are ordered by (taxicab norm, x, y) and unordered pairs are scanned
/// in lexicographic index order, so the reported witness is deterministic.
/// `map` may return `None` to skip points outside its domain.
pub fn find_distance_change_witness<F>(map: F, bound: i64) -> Option<(Point, Point)>
where
    F: Fn(&Point) -> Option<Point>,
{
    let mut grid: Vec<(i64, i64)> = (-bound..=bound)
        .flat_map(|x| (-bound..=bound).map(move |y| (x, y)))
        .collect();
    grid.sort_by_key(|&(x, y)| (x.abs() + y.abs(), x, y));
    let points: Vec<Point> = grid.into_iter().map(|(x, y)| Point::ints(x, y)).collect();
    let images: Vec<Option<Point>> = points.iter().map(&map).collect();
    for i in 0..points.len() {
        let Some(pi) = &images[i] else { continue };
        for j in (i + 1)..points.len() {
            let Some(pj) = &images[j] else { continue };
            if taxicab_distance(pi, pj) != taxicab_distance(&points[i], &points[j]) {
                return Some((points[i].clone(), points[j].clone()));
            }
        }
    }
    None
}

/// A sampled check of the defining equation d(P,Q) = d(f(P),f(Q)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleReport {
    pub checked: usize,
    pub first_failure: Option<SampleFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleFailure {
    pub pair: (Point, Point),
    pub original: Scalar,
    pub image: Scalar,
}

impl SampleReport {
    pub fn pass(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks the defining equation exactly on every supplied pair.
pub fn verify_isometry_samples(
    m: &AffineMap,
    pairs: &[(Point, Point)],
) -> Result<SampleReport, GeomError> {
    if pairs.is_empty() {
        return Err(GeomError::EmptyPairList);
    }
    let mut first_failure = None;
    for (p, q) in pairs {
        let original = taxicab_distance(p, q);
        let image = taxicab_distance(&m.apply(p), &m.apply(q));
        if original != image && first_failure.is_none() {
            first_failure = Some(SampleFailure {
                pair: (p.clone(), q.clone()),
                original,
                image,
            });
        }
    }
    Ok(SampleReport { checked: pairs.len(), first_failure })
}

/// Moves `p` counterclockwise along the taxicab circle about `center` by
/// `theta` t-radians (arc length theta times the radius). Preserves the
/// distance to the center; distances between other pairs generally change.
pub fn taxicab_rotate(p: &Point, center: &Point, theta: &TAngle) -> Result<Point, GeomError> {
    if p == center {
        return Err(GeomError::RotateCenter(center.clone()));
    }
    let radius = taxicab_distance(p, center);
    let circle = TaxicabCircle::new(center.clone(), radius.clone())
        .expect("distinct points give a positive radius");
    let s = circle
        .arc_position(p)
        .expect("p lies on its own circle");
    Ok(circle.point_at_arc(&(s + theta.value() * &radius)))
}

/// Reflects `p` across `l`: the segment p–p' is Euclidean-perpendicular to
/// `l` with its midpoint on `l`, which pins p' uniquely and makes the two
/// taxicab distances to the midpoint equal. Coincides with the Euclidean
/// reflection; a taxicab isometry only for the four special directions.
pub fn taxicab_reflect(p: &Point, l: &Line) -> Point {
    let e = l.eval(p);
    let denom = l.a() * l.a() + l.b() * l.b();
    let k = Scalar::from(2) * e / denom;
    Point::new(&p.x - &(l.a() * &k), &p.y - &(l.b() * &k))
}
