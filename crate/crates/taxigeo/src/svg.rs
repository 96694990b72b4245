//! Static SVG diagrams of the kernel's standard figures.
//!
//! Scenes are built from exact rational coordinates; rounding to pixels (3
//! decimal places) happens only while writing the final attribute strings,
//! so identical inputs give byte-identical output.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::circle::TaxicabCircle;
use crate::point::Point;
use crate::scalar::Scalar;

/// The named figures the CLI can emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureName {
    Circle,
    UnitCircle,
    RotationReflection,
    Case1,
    Case2,
    Case3,
}

impl FigureName {
    pub const ALL: [FigureName; 6] = [
        FigureName::Circle,
        FigureName::UnitCircle,
        FigureName::RotationReflection,
        FigureName::Case1,
        FigureName::Case2,
        FigureName::Case3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureName::Circle => "circle",
            FigureName::UnitCircle => "unit-circle",
            FigureName::RotationReflection => "rotation-reflection",
            FigureName::Case1 => "case1",
            FigureName::Case2 => "case2",
            FigureName::Case3 => "case3",
        }
    }
}

impl FromStr for FigureName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FigureName::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown figure `{s}` (expected one of circle, unit-circle, \
                     rotation-reflection, case1, case2, case3)"
                )
            })
    }
}

/// Stroke styling of a segment or polyline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrokeKind {
    /// A side of a taxicab circle.
    Side,
    /// Coordinate axis or tick.
    Axis,
    /// First highlighted radius.
    RadiusA,
    /// Second highlighted radius.
    RadiusB,
    /// Chord between the two legs.
    Chord,
    /// Dashed construction guide.
    Guide,
    /// Dotted connector.
    Dotted,
    /// Angle-arc annotation along a small taxicab circle.
    Arc,
}

impl StrokeKind {
    fn stroke(self) -> &'static str {
        match self {
            StrokeKind::Side => "#000000",
            StrokeKind::Axis => "#000000",
            StrokeKind::RadiusA => "#2960a8",
            StrokeKind::RadiusB => "#c0392b",
            StrokeKind::Chord => "#2e8b57",
            StrokeKind::Guide => "#666666",
            StrokeKind::Dotted => "#666666",
            StrokeKind::Arc => "#7d3c98",
        }
    }

    fn width(self) -> &'static str {
        match self {
            StrokeKind::Side => "2",
            StrokeKind::Axis => "1",
            StrokeKind::Arc => "1.5",
            _ => "1.5",
        }
    }

    fn dash(self) -> Option<&'static str> {
        match self {
            StrokeKind::Guide => Some("6,4"),
            StrokeKind::Dotted => Some("2,3"),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub enum Element {
    Segment { a: Point, b: Point, kind: StrokeKind },
    Polyline { points: Vec<Point>, kind: StrokeKind },
    Dot { at: Point },
    Label { at: Point, text: String },
}

/// A figure in exact coordinates plus the pixel scale to render it at.
#[derive(Debug, Clone)]
pub struct SvgScene {
    pub elements: Vec<Element>,
    pub scale: u32,
}

impl SvgScene {
    pub fn new(scale: u32) -> Self {
        SvgScene { elements: Vec::new(), scale }
    }

    fn segment(&mut self, a: Point, b: Point, kind: StrokeKind) {
        self.elements.push(Element::Segment { a, b, kind });
    }

    fn dot(&mut self, at: Point) {
        self.elements.push(Element::Dot { at });
    }

    fn label(&mut self, at: Point, text: impl Into<String>) {
        self.elements.push(Element::Label { at, text: text.into() });
    }

    /// Every exact coordinate appearing in the scene.
    fn coordinates(&self) -> impl Iterator<Item = &Point> {
        self.elements.iter().flat_map(|e| -> Box<dyn Iterator<Item = &Point>> {
            match e {
                Element::Segment { a, b, .. } => Box::new([a, b].into_iter()),
                Element::Polyline { points, .. } => Box::new(points.iter()),
                Element::Dot { at } | Element::Label { at, .. } => Box::new(std::iter::once(at)),
            }
        })
    }

    pub fn render(&self) -> String {
        let margin = Scalar::ratio(3, 4);
        let mut min_x: Option<Scalar> = None;
        let mut max_x: Option<Scalar> = None;
        let mut min_y: Option<Scalar> = None;
        let mut max_y: Option<Scalar> = None;
        for p in self.coordinates() {
            let fold = |slot: &mut Option<Scalar>, v: &Scalar, lower: bool| {
                let replace = match slot {
                    None => true,
                    Some(cur) => (v < cur) == lower,
                };
                if replace {
                    *slot = Some(v.clone());
                }
            };
            fold(&mut min_x, &p.x, true);
            fold(&mut max_x, &p.x, false);
            fold(&mut min_y, &p.y, true);
            fold(&mut max_y, &p.y, false);
        }
        let min_x = min_x.unwrap_or_else(Scalar::zero);
        let max_x = max_x.unwrap_or_else(Scalar::zero);
        let min_y = min_y.unwrap_or_else(Scalar::zero);
        let max_y = max_y.unwrap_or_else(Scalar::zero);
        let scale = Scalar::from(i64::from(self.scale));

        let to_px = |p: &Point| -> (String, String) {
            let px = (&p.x - &min_x + &margin) * &scale;
            let py = (&max_y - &p.y + &margin) * &scale;
            (round3(&px), round3(&py))
        };
        let width = ceil_int(&((&max_x - &min_x + &margin + &margin) * &scale));
        let height = ceil_int(&((&max_y - &min_y + &margin + &margin) * &scale));

        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
             viewBox=\"0 0 {width} {height}\">"
        );
        for e in &self.elements {
            match e {
                Element::Segment { a, b, kind } => {
                    let (x1, y1) = to_px(a);
                    let (x2, y2) = to_px(b);
                    let dash = kind
                        .dash()
                        .map(|d| format!(" stroke-dasharray=\"{d}\""))
                        .unwrap_or_default();
                    let _ = writeln!(
                        out,
                        "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" \
                         stroke=\"{}\" stroke-width=\"{}\"{dash}/>",
                        kind.stroke(),
                        kind.width()
                    );
                }
                Element::Polyline { points, kind } => {
                    let coords: Vec<String> = points
                        .iter()
                        .map(|p| {
                            let (x, y) = to_px(p);
                            format!("{x},{y}")
                        })
                        .collect();
                    let _ = writeln!(
                        out,
                        "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"/>",
                        coords.join(" "),
                        kind.stroke(),
                        kind.width()
                    );
                }
                Element::Dot { at } => {
                    let (cx, cy) = to_px(at);
                    let _ = writeln!(out, "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"3\" fill=\"#000000\"/>");
                }
                Element::Label { at, text } => {
                    let (x, y) = to_px(at);
                    let _ = writeln!(
                        out,
                        "<text x=\"{x}\" y=\"{y}\" font-family=\"sans-serif\" font-size=\"13\" \
                         text-anchor=\"middle\">{}</text>",
                        escape(text)
                    );
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Exact half-up rounding to 3 decimal places, printed with a fixed number
/// of digits.
fn round3(v: &Scalar) -> String {
    let scaled = v * Scalar::from(1000) + Scalar::ratio(1, 2);
    let n: BigInt = scaled.floor_int();
    let (n, neg) = if n < BigInt::from(0) { (-n, true) } else { (n, false) };
    let int = &n / 1000;
    let frac = &n % 1000;
    format!("{}{int}.{frac:03}", if neg { "-" } else { "" })
}

fn ceil_int(v: &Scalar) -> BigInt {
    -(-v).floor_int()
}

fn pt(x: &str, y: &str) -> Point {
    Point::new(x.parse().unwrap(), y.parse().unwrap())
}

fn shift(p: &Point, dx: &Scalar) -> Point {
    Point::new(&p.x + dx, p.y.clone())
}

/// Polyline tracing the angle between the rays `vertex→a` and `vertex→b`
/// along the taxicab circle of radius `rho` about the vertex, through any
/// intervening corners. The shorter (undirected) side is drawn.
fn angle_arc(vertex: &Point, a: &Point, b: &Point, rho: Scalar) -> Vec<Point> {
    let circle = TaxicabCircle::new(vertex.clone(), rho).expect("positive annotation radius");
    let pa = circle.ray_intersection(&(a - vertex)).expect("ray a");
    let pb = circle.ray_intersection(&(b - vertex)).expect("ray b");
    let sa = circle.arc_position(&pa).expect("on circle");
    let sb = circle.arc_position(&pb).expect("on circle");
    let perimeter = circle.perimeter();
    let half = Scalar::ratio(1, 2) * &perimeter;
    let d_ab = (&sb - &sa).rem_euclid(&perimeter);
    let (start, length) = if d_ab <= half {
        (sa, d_ab)
    } else {
        (sb, perimeter.clone() - d_ab)
    };
    let side_span = Scalar::from(2) * circle.radius();
    let mut points = vec![circle.point_at_arc(&start)];
    // first corner strictly past the start
    let mut c = &side_span * &(Scalar::from_bigint((&start / &side_span).floor_int()) + Scalar::one());
    let end = &start + &length;
    while c < end {
        points.push(circle.point_at_arc(&c));
        c = c + &side_span;
    }
    points.push(circle.point_at_arc(&end));
    points
}

/// Midpoint of the drawn angle arc pushed slightly outward; a good label spot.
fn arc_label_spot(vertex: &Point, a: &Point, b: &Point, rho: Scalar) -> Point {
    let circle = TaxicabCircle::new(vertex.clone(), rho).expect("positive annotation radius");
    let pa = circle.ray_intersection(&(a - vertex)).expect("ray a");
    let pb = circle.ray_intersection(&(b - vertex)).expect("ray b");
    let sa = circle.arc_position(&pa).expect("on circle");
    let sb = circle.arc_position(&pb).expect("on circle");
    let perimeter = circle.perimeter();
    let half = Scalar::ratio(1, 2) * &perimeter;
    let d_ab = (&sb - &sa).rem_euclid(&perimeter);
    let mid = if d_ab <= half {
        sa + d_ab * Scalar::ratio(1, 2)
    } else {
        sb + (perimeter - d_ab) * Scalar::ratio(1, 2)
    };
    let on_arc = circle.point_at_arc(&mid);
    vertex + &(&on_arc - vertex).scale(&Scalar::ratio(3, 2))
}

/// Builds one of the named figures at the given pixels-per-unit scale.
pub fn figure(name: FigureName, scale: u32) -> SvgScene {
    match name {
        FigureName::Circle => circle_figure(scale),
        FigureName::UnitCircle => unit_circle_figure(scale),
        FigureName::RotationReflection => rotation_reflection_figure(scale),
        FigureName::Case1 => case_figure(scale, Point::ints(3, 1), "β=7/4", "α=3/2", false),
        FigureName::Case2 => case_figure(scale, Point::ints(-3, 1), "α=3/4", "β=1", true),
        FigureName::Case3 => case_figure(scale, Point::ints(-3, -1), "α=3/8", "β=3/8", true),
    }
}

fn push_diamond(scene: &mut SvgScene, circle: &TaxicabCircle) {
    for side in crate::circle::Side::ALL {
        let (a, b) = circle.side_endpoints(side);
        scene.segment(a, b, StrokeKind::Side);
    }
}

fn circle_figure(scale: u32) -> SvgScene {
    let mut scene = SvgScene::new(scale);
    let circle = TaxicabCircle::new(Point::origin(), Scalar::from(4)).unwrap();
    push_diamond(&mut scene, &circle);
    scene.dot(Point::origin());
    scene.label(pt("0", "1/3"), "(0,0)");
    scene.label(pt("5/2", "5/2"), "S1");
    scene.label(pt("-5/2", "5/2"), "S2");
    scene.label(pt("-5/2", "-5/2"), "S3");
    scene.label(pt("5/2", "-5/2"), "S4");
    scene
}

fn unit_circle_figure(scale: u32) -> SvgScene {
    let mut scene = SvgScene::new(scale);
    let circle = TaxicabCircle::new(Point::origin(), Scalar::one()).unwrap();
    push_diamond(&mut scene, &circle);
    scene.segment(pt("-9/8", "0"), pt("9/8", "0"), StrokeKind::Axis);
    scene.segment(pt("0", "-9/8"), pt("0", "9/8"), StrokeKind::Axis);
    scene.label(pt("1/4", "1"), "1");
    scene.label(pt("1/4", "-1"), "-1");
    scene.label(pt("-1", "-1/4"), "-1");
    scene.label(pt("1", "-1/4"), "1");
    scene
}

fn rotation_reflection_figure(scale: u32) -> SvgScene {
    let mut scene = SvgScene::new(scale);

    // left panel: P rotated 1 t-radian counterclockwise to P' along the circle
    let p = Point::ints(3, 1);
    let p_rot = Point::ints(1, 3);
    let origin = Point::origin();
    scene.segment(pt("-1/4", "0"), pt("17/4", "0"), StrokeKind::Axis);
    scene.segment(pt("0", "-1/4"), pt("0", "17/4"), StrokeKind::Axis);
    scene.segment(Point::ints(0, 4), Point::ints(4, 0), StrokeKind::Side);
    scene.segment(origin.clone(), p.clone(), StrokeKind::RadiusA);
    scene.segment(origin.clone(), p_rot.clone(), StrokeKind::RadiusB);
    scene.elements.push(Element::Polyline {
        points: angle_arc(&origin, &p, &p_rot, Scalar::ratio(3, 4)),
        kind: StrokeKind::Arc,
    });
    scene.dot(p.clone());
    scene.dot(p_rot.clone());
    scene.dot(origin.clone());
    scene.label(pt("13/4", "5/4"), "P");
    scene.label(pt("5/4", "13/4"), "P'");
    scene.label(pt("1/4", "-1/4"), "Q");
    scene.label(arc_label_spot(&origin, &p, &p_rot, Scalar::ratio(3, 4)), "θ=1");

    // right panel, shifted right: P reflected across l: y=x/2
    let dx = Scalar::from(6);
    let rp = shift(&Point::ints(2, 0), &dx);
    let rp_img = shift(&pt("6/5", "8/5"), &dx);
    let rm = shift(&pt("8/5", "4/5"), &dx);
    scene.segment(shift(&pt("-1/4", "0"), &dx), shift(&pt("17/4", "0"), &dx), StrokeKind::Axis);
    scene.segment(shift(&pt("0", "-1/4"), &dx), shift(&pt("0", "17/4"), &dx), StrokeKind::Axis);
    scene.segment(shift(&Point::origin(), &dx), shift(&Point::ints(4, 2), &dx), StrokeKind::Guide);
    scene.segment(rp.clone(), rp_img.clone(), StrokeKind::Dotted);
    scene.dot(rp);
    scene.dot(rp_img);
    scene.dot(rm);
    scene.label(shift(&pt("9/4", "1/4"), &dx), "P");
    scene.label(shift(&pt("3/2", "19/10"), &dx), "P'");
    scene.label(shift(&pt("2", "3/4"), &dx), "M");
    scene.label(shift(&pt("7/2", "9/4"), &dx), "l");
    scene
}

/// Shared layout of the three base-angle figures: first leg to (3/2,5/2),
/// second leg to `q`, radius 4, with the stated angle labels at each leg.
fn case_figure(scale: u32, q: Point, label_at_p: &str, label_at_q: &str, wide: bool) -> SvgScene {
    let mut scene = SvgScene::new(scale);
    let origin = Point::origin();
    let p = pt("3/2", "5/2");
    let circle = TaxicabCircle::new(origin.clone(), Scalar::from(4)).unwrap();

    let x_min = if wide { pt("-17/4", "0") } else { pt("-1/4", "0") };
    scene.segment(x_min, pt("17/4", "0"), StrokeKind::Axis);
    let y_min = if q.y.is_negative() { pt("0", "-17/4") } else { pt("0", "-1/4") };
    scene.segment(y_min, pt("0", "17/4"), StrokeKind::Axis);
    push_diamond(&mut scene, &circle);

    scene.segment(origin.clone(), p.clone(), StrokeKind::RadiusA);
    scene.segment(origin.clone(), q.clone(), StrokeKind::RadiusB);
    scene.segment(p.clone(), q.clone(), StrokeKind::Chord);

    // dashed guides dropping the leg coordinates onto the axes
    for leg in [&p, &q] {
        scene.segment(leg.clone(), Point::new(leg.x.clone(), Scalar::zero()), StrokeKind::Guide);
        scene.segment(leg.clone(), Point::new(Scalar::zero(), leg.y.clone()), StrokeKind::Guide);
    }

    // angle arcs: θ at the apex, the base angles at the legs
    let rho = Scalar::ratio(1, 2);
    scene.elements.push(Element::Polyline {
        points: angle_arc(&origin, &p, &q, Scalar::ratio(3, 4)),
        kind: StrokeKind::Arc,
    });
    scene.elements.push(Element::Polyline {
        points: angle_arc(&p, &origin, &q, rho.clone()),
        kind: StrokeKind::Arc,
    });
    scene.elements.push(Element::Polyline {
        points: angle_arc(&q, &origin, &p, rho.clone()),
        kind: StrokeKind::Arc,
    });
    scene.label(
        arc_label_spot(&origin, &p, &q, Scalar::ratio(3, 4)),
        "θ",
    );
    scene.label(arc_label_spot(&p, &origin, &q, rho.clone()), label_at_p);
    scene.label(arc_label_spot(&q, &origin, &p, rho), label_at_q);

    scene.dot(p.clone());
    scene.dot(q.clone());
    scene.dot(origin.clone());
    scene.label(pt("2", "23/8"), format!("P({},{})", p.x, p.y));
    let label_dx = if q.x.is_negative() {
        Scalar::ratio(-5, 8)
    } else {
        Scalar::ratio(1, 2)
    };
    let label_dy = if q.y.is_negative() {
        Scalar::ratio(-1, 2)
    } else {
        Scalar::ratio(1, 3)
    };
    let q_label_at = Point::new(&q.x + &label_dx, &q.y + &label_dy);
    scene.label(q_label_at, format!("Q({},{})", q.x, q.y));
    scene.label(pt("-1/2", "-1/4"), "O(0,0)");
    scene.label(crate::metric::midpoint(&origin, &p), "r");
    scene.label(crate::metric::midpoint(&origin, &q), "r");
    scene.label(crate::metric::midpoint(&p, &q), "c");
    scene
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_names_round_trip() {
        for f in FigureName::ALL {
            assert_eq!(f.name().parse::<FigureName>().unwrap(), f);
        }
        assert!("nope".parse::<FigureName>().is_err());
    }

    #[test]
    fn rendering_is_deterministic() {
        for f in FigureName::ALL {
            let a = figure(f, 40).render();
            let b = figure(f, 40).render();
            assert_eq!(a, b, "figure {} not byte-stable", f.name());
        }
    }

    #[test]
    fn unit_circle_has_four_sides_and_axes() {
        let svg = figure(FigureName::UnitCircle, 40).render();
        let lines = svg.matches("<line ").count();
        let sides = svg.matches("stroke-width=\"2\"").count();
        assert_eq!(lines, 6, "expected 4 sides + 2 axes:\n{svg}");
        assert_eq!(sides, 4, "expected exactly the 4 circle sides bold");
    }

    #[test]
    fn case3_labels_equal_angles() {
        let svg = figure(FigureName::Case3, 40).render();
        assert!(svg.contains("α=3/8") && svg.contains("β=3/8"), "{svg}");
        assert!(svg.contains("Q(-3,-1)"));
        assert!(svg.contains("P(3/2,5/2)"));
    }

    #[test]
    fn scale_changes_pixel_geometry() {
        let small = figure(FigureName::UnitCircle, 20).render();
        let large = figure(FigureName::UnitCircle, 80).render();
        assert_ne!(small, large);
    }

    #[test]
    fn round3_is_exact_half_up() {
        assert_eq!(round3(&Scalar::ratio(1, 3)), "0.333");
        assert_eq!(round3(&Scalar::ratio(1, 2000)), "0.001"); // exactly .0005 rounds up
        assert_eq!(round3(&Scalar::from(2)), "2.000");
        assert_eq!(round3(&Scalar::ratio(-1, 3)), "-0.333");
        assert_eq!(round3(&Scalar::ratio(12345, 8)), "1543.125");
    }

    #[test]
    fn angle_arc_walks_through_corners() {
        // quarter turn about the origin crosses the north corner
        let pts = angle_arc(
            &Point::origin(),
            &Point::ints(1, 1),
            &Point::ints(-1, 1),
            Scalar::one(),
        );
        assert_eq!(pts.len(), 3);
        assert_eq!(pts[1], Point::ints(0, 1));
    }
}
