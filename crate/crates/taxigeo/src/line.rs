//! Lines in normalized coefficient form.
//!
//! A line is stored as `A·x + B·y = C` with (A, B, C) scaled to coprime
//! integers whose first nonzero coefficient among (A, B) is positive, so two
//! lines are geometrically equal exactly when their representations are equal.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::error::{GeomError, ParseError};
use crate::point::Point;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Line {
    a: Scalar,
    b: Scalar,
    c: Scalar,
}

impl Line {
    /// Build from arbitrary rational coefficients of `a·x + b·y = c`.
    ///
    /// Panics if both `a` and `b` are zero; callers constructing lines from
    /// user input go through [`Line::from_str`] or [`Line::through`], which
    /// reject that case.
    pub fn from_coefficients(a: Scalar, b: Scalar, c: Scalar) -> Self {
        assert!(
            !(a.is_zero() && b.is_zero()),
            "line requires a nonzero normal"
        );
        // clear denominators
        let lcm = [&a, &b, &c]
            .iter()
            .map(|s| s.denominator().clone())
            .fold(BigInt::from(1), |acc, d| acc.lcm(&d));
        let lcm = Scalar::from_bigint(lcm);
        let (a, b, c) = (&a * &lcm, &b * &lcm, &c * &lcm);
        // reduce to lowest common terms
        let gcd = a
            .numerator()
            .gcd(b.numerator())
            .gcd(&c.numerator().abs());
        let gcd = Scalar::from_bigint(gcd);
        let (mut a, mut b, mut c) = (&a / &gcd, &b / &gcd, &c / &gcd);
        // first nonzero of (a, b) positive
        let lead = if a.is_zero() { &b } else { &a };
        if lead.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        Line { a, b, c }
    }

    /// The line through two distinct points.
    pub fn through(p: &Point, q: &Point) -> Result<Self, GeomError> {
        if p == q {
            return Err(GeomError::CoincidentPoints(p.clone()));
        }
        let d = q - p;
        let a = d.y.clone();
        let b = -&d.x;
        let c = &a * &p.x + &b * &p.y;
        Ok(Line::from_coefficients(a, b, c))
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    /// `a·x + b·y − c`; zero exactly on the line.
    pub fn eval(&self, p: &Point) -> Scalar {
        &self.a * &p.x + &self.b * &p.y - &self.c
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    /// A direction vector of the line.
    pub fn direction(&self) -> Point {
        Point::new(self.b.clone(), -&self.a)
    }

    /// True iff the two lines meet at Euclidean right angles (which by the
    /// right-angle lemma is also the taxicab right angle).
    pub fn is_perpendicular(&self, other: &Line) -> bool {
        self.direction().dot(&other.direction()).is_zero()
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x+{}y={}", self.a, self.b, self.c)
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Line({})", self)
    }
}

impl FromStr for Line {
    type Err = ParseError;

    /// Accepts `x=<r>`, `y=<r>`, `y=<m>x`, and `y=<m>x±<k>`, where `<r>`,
    /// `<m>`, `<k>` are rational literals and a bare `x` or `-x` means slope
    /// ±1 (so `y=x` and `y=-x` parse as expected).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::Line(s.to_owned());
        if let Some(rhs) = s.strip_prefix("x=") {
            let r: Scalar = rhs.parse().map_err(|_| bad())?;
            return Ok(Line::from_coefficients(Scalar::one(), Scalar::zero(), r));
        }
        let rhs = s.strip_prefix("y=").ok_or_else(bad)?;
        let Some(xpos) = rhs.find('x') else {
            let r: Scalar = rhs.parse().map_err(|_| bad())?;
            return Ok(Line::from_coefficients(Scalar::zero(), Scalar::one(), r));
        };
        let (coeff, rest) = (&rhs[..xpos], &rhs[xpos + 1..]);
        let slope: Scalar = match coeff {
            "" => Scalar::one(),
            "-" => -Scalar::one(),
            lit => lit.parse().map_err(|_| bad())?,
        };
        let intercept: Scalar = if rest.is_empty() {
            Scalar::zero()
        } else {
            let (sign, lit) = match rest.split_at(1) {
                ("+", lit) => (Scalar::one(), lit),
                ("-", lit) => (-Scalar::one(), lit),
                _ => return Err(bad()),
            };
            let k: Scalar = lit.parse().map_err(|_| bad())?;
            if k.is_negative() {
                return Err(bad());
            }
            sign * k
        };
        // y = m·x + k  ⇒  -m·x + y = k
        Ok(Line::from_coefficients(-slope, Scalar::one(), intercept))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(s: &str) -> Line {
        s.parse().unwrap()
    }

    #[test]
    fn through_named_examples() {
        let diag = Line::through(&Point::ints(0, 0), &Point::ints(1, 1)).unwrap();
        assert_eq!(
            diag,
            Line::from_coefficients(Scalar::one(), Scalar::from(-1), Scalar::zero())
        );
        assert_eq!(diag, line("y=x"));

        let horiz = Line::through(&Point::ints(0, 2), &Point::ints(5, 2)).unwrap();
        assert_eq!(horiz, line("y=2"));

        let vert = Line::through(&Point::ints(3, 0), &Point::ints(3, 7)).unwrap();
        assert_eq!(vert, line("x=3"));
    }

    #[test]
    fn coincident_points_rejected() {
        let p = Point::ints(2, 2);
        assert!(matches!(
            Line::through(&p, &p),
            Err(GeomError::CoincidentPoints(_))
        ));
    }

    #[test]
    fn normalization_makes_equality_structural() {
        let l1 = Line::from_coefficients(Scalar::from(2), Scalar::from(-2), Scalar::zero());
        let l2 = Line::from_coefficients(Scalar::from(-3), Scalar::from(3), Scalar::zero());
        let l3 = Line::from_coefficients(Scalar::ratio(1, 2), Scalar::ratio(-1, 2), Scalar::zero());
        assert_eq!(l1, l2);
        assert_eq!(l1, l3);
        assert_eq!(l1, line("y=x"));
    }

    #[test]
    fn perpendicularity() {
        assert!(line("y=x").is_perpendicular(&line("y=-x")));
        assert!(!line("y=0").is_perpendicular(&line("y=0")));
        assert!(line("y=2x").is_perpendicular(&line("y=-1/2x")));
        assert!(line("x=1").is_perpendicular(&line("y=-7")));
        assert!(!line("y=2x").is_perpendicular(&line("y=2x+1")));
    }

    #[test]
    fn equation_parser_forms() {
        assert_eq!(line("y=2x"), Line::through(&Point::ints(0, 0), &Point::ints(1, 2)).unwrap());
        assert_eq!(
            line("y=1/2x-3"),
            Line::through(&Point::ints(0, -3), &Point::ints(2, -2)).unwrap()
        );
        assert_eq!(line("y=-x"), Line::through(&Point::ints(0, 0), &Point::ints(1, -1)).unwrap());
        assert_eq!(line("y=-2x+1.5"), {
            let m = Scalar::from(-2);
            Line::from_coefficients(-m, Scalar::one(), Scalar::ratio(3, 2))
        });
        for text in ["", "z=1", "y=", "y=xx", "y=2x*3", "y=2x+-3", "x=0,0"] {
            assert!(text.parse::<Line>().is_err(), "accepted {text:?}");
        }
    }

    #[test]
    fn contains_and_eval() {
        let l = line("y=2x+1");
        assert!(l.contains(&Point::ints(0, 1)));
        assert!(l.contains(&Point::ints(2, 5)));
        assert!(!l.contains(&Point::ints(1, 1)));
        assert!(l.eval(&Point::ints(1, 1)).is_negative() != l.eval(&Point::ints(0, 2)).is_negative());
    }
}
