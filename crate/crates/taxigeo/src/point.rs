//! Points of the plane, with exact component-wise equality.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::ParseError;
use crate::scalar::Scalar;

/// A point (or translation vector) with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(Scalar::zero(), Scalar::zero())
    }

    /// Integer-coordinate shorthand, handy in tests and figures.
    pub fn ints(x: i64, y: i64) -> Self {
        Point::new(Scalar::from(x), Scalar::from(y))
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Cross product of `self` and `other` as vectors from the origin.
    /// Zero exactly when the two are collinear with the origin.
    pub fn cross(&self, other: &Point) -> Scalar {
        &self.x * &other.y - &self.y * &other.x
    }

    /// Euclidean dot product of `self` and `other` as vectors.
    pub fn dot(&self, other: &Point) -> Scalar {
        &self.x * &other.x + &self.y * &other.y
    }

    /// |x| + |y|: taxicab distance to the origin.
    pub fn taxicab_norm(&self) -> Scalar {
        self.x.abs() + self.y.abs()
    }

    pub fn scale(&self, k: &Scalar) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Point({},{})", self.x, self.y)
    }
}

impl FromStr for Point {
    type Err = ParseError;

    /// Accepts `x,y` where both components are rational literals.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (x, y) = s.split_once(',').ok_or_else(|| ParseError::Point(s.to_owned()))?;
        let x: Scalar = x.parse().map_err(|_| ParseError::Point(s.to_owned()))?;
        let y: Scalar = y.parse().map_err(|_| ParseError::Point(s.to_owned()))?;
        Ok(Point::new(x, y))
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-&self.x, -&self.y)
    }
}

impl serde::Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let p: Point = "3/2,-5".parse().unwrap();
        assert_eq!(p, Point::new(Scalar::ratio(3, 2), Scalar::from(-5)));
        assert_eq!(p.to_string(), "3/2,-5");
        let q: Point = "0.5,0.25".parse().unwrap();
        assert_eq!(q.to_string(), "1/2,1/4");
    }

    #[test]
    fn rejects_malformed_points() {
        for text in ["", "1", "1,2,3", "a,b", "1,", ",2", "1, 2"] {
            assert!(text.parse::<Point>().is_err(), "accepted {text:?}");
        }
    }

    #[test]
    fn vector_arithmetic() {
        let a = Point::ints(1, 2);
        let b = Point::ints(-3, 5);
        assert_eq!(&a + &b, Point::ints(-2, 7));
        assert_eq!(&a - &b, Point::ints(4, -3));
        assert_eq!(-&a, Point::ints(-1, -2));
        assert_eq!(a.cross(&b), Scalar::from(11));
        assert_eq!(a.dot(&b), Scalar::from(7));
        assert_eq!(b.taxicab_norm(), Scalar::from(8));
    }
}
