//! The `taxi` command line.
//!
//! Points are written `x,y` with rational components (`3/2,-5`, `0.25,1`),
//! angles and distances print as canonical rational literals, and structured
//! results (isometries, triangle reports) print as single-line JSON. Exit
//! status is 0 on success, 2 on a usage error, 1 on a domain error.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand};

use crate::angle::{angle_measure, directed_arc, TAngle};
use crate::circle::TaxicabCircle;
use crate::error::GeomError;
use crate::i5t::{i5t_analyze, IsoscelesTriangle};
use crate::isometry::{taxicab_reflect, taxicab_rotate, Isometry};
use crate::line::Line;
use crate::metric::{euclidean_distance_squared, midpoint, taxicab_distance};
use crate::point::Point;
use crate::scalar::Scalar;
use crate::svg::{figure, FigureName};

/// Pixels per unit for SVG output.
pub const SVG_SCALE_VAR: &str = "TAXI_SVG_SCALE";
const DEFAULT_SVG_SCALE: u32 = 40;

#[derive(Parser)]
#[command(
    name = "taxi",
    about = "Exact geometry in the taxicab plane",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Taxicab distance between two points
    Dist {
        #[arg(allow_hyphen_values = true)]
        p: Point,
        #[arg(allow_hyphen_values = true)]
        q: Point,
        /// Print the squared Euclidean distance instead
        #[arg(long)]
        euclidean_squared: bool,
    },
    /// Midpoint of a segment
    Midpoint {
        #[arg(allow_hyphen_values = true)]
        a: Point,
        #[arg(allow_hyphen_values = true)]
        b: Point,
    },
    /// Taxicab measure of the angle at VERTEX subtended by P and Q
    Angle {
        #[arg(allow_hyphen_values = true)]
        vertex: Point,
        #[arg(allow_hyphen_values = true)]
        p: Point,
        #[arg(allow_hyphen_values = true)]
        q: Point,
        /// Print the counterclockwise arc from P to Q (in [0,8)) instead of
        /// the undirected measure
        #[arg(long)]
        directed: bool,
    },
    /// Queries against the taxicab circle with the given center and radius
    #[command(group(
        ArgGroup::new("query").required(true).args(["classify", "at_arc", "arc", "ray"])
    ))]
    Circle {
        #[arg(allow_hyphen_values = true)]
        center: Point,
        #[arg(allow_hyphen_values = true)]
        radius: Scalar,
        /// Which side of the circle the point lies on
        #[arg(long, value_name = "POINT", allow_hyphen_values = true)]
        classify: Option<Point>,
        /// Point at a counterclockwise arc length from the east corner
        #[arg(long, value_name = "ARC", allow_hyphen_values = true)]
        at_arc: Option<Scalar>,
        /// Counterclockwise arc length between two on-circle points
        #[arg(long, value_names = ["A", "B"], num_args = 2, allow_hyphen_values = true)]
        arc: Option<Vec<Point>>,
        /// Where the ray from the center in this direction meets the circle
        #[arg(long, value_name = "DIR", allow_hyphen_values = true)]
        ray: Option<Point>,
    },
    /// Rotate P counterclockwise about CENTER by THETA t-radians along the
    /// taxicab circle
    Rotate {
        #[arg(allow_hyphen_values = true)]
        p: Point,
        #[arg(allow_hyphen_values = true)]
        center: Point,
        #[arg(allow_hyphen_values = true)]
        theta: Scalar,
    },
    /// Reflect P across a line (forms: y=x, y=-x, x=0, y=0, x=2, y=1/2x-3)
    Reflect {
        #[arg(allow_hyphen_values = true)]
        p: Point,
        line: Line,
    },
    /// Work with a distance-preserving map in the form `linear=<name> t=<x>,<y>`
    #[command(group(ArgGroup::new("action").multiple(false).args(["apply", "compose", "invert"])))]
    Isometry {
        spec: Isometry,
        /// Apply the isometry to a point
        #[arg(long, value_name = "POINT", allow_hyphen_values = true)]
        apply: Option<Point>,
        /// Compose with another isometry (the other acts first)
        #[arg(long, value_name = "SPEC")]
        compose: Option<Isometry>,
        /// Print the inverse isometry
        #[arg(long)]
        invert: bool,
    },
    /// Analyze an isosceles triangle: configuration, base angles, and the
    /// base-angle equality condition
    Triangle {
        #[arg(allow_hyphen_values = true)]
        apex: Point,
        #[arg(allow_hyphen_values = true)]
        p: Point,
        #[arg(allow_hyphen_values = true)]
        q: Point,
    },
    /// Emit one of the standard figures as SVG
    Figure { name: FigureName },
}

/// Exit status plus captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[allow(clippy::large_enum_variant)] // one short-lived value per invocation
enum CliError {
    Domain(GeomError),
    Usage(String),
}

impl From<GeomError> for CliError {
    fn from(e: GeomError) -> Self {
        CliError::Domain(e)
    }
}

/// Parses and runs one invocation. `argv` includes the program name.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandOutput {
                    status: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => CommandOutput {
                    status: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    match execute(cli.command) {
        Ok(stdout) => CommandOutput {
            status: 0,
            stdout,
            stderr: String::new(),
        },
        Err(CliError::Domain(e)) => CommandOutput {
            status: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        Err(CliError::Usage(msg)) => CommandOutput {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn svg_scale() -> Result<u32, CliError> {
    match std::env::var(SVG_SCALE_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SVG_SCALE),
        Err(std::env::VarError::NotUnicode(_)) => Err(CliError::Usage(format!(
            "{SVG_SCALE_VAR} must be a positive integer"
        ))),
        Ok(text) => match text.parse::<u32>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::Usage(format!(
                "{SVG_SCALE_VAR} must be a positive integer, got `{text}`"
            ))),
        },
    }
}

fn execute(command: Command) -> Result<String, CliError> {
    match command {
        Command::Dist { p, q, euclidean_squared } => {
            let d = if euclidean_squared {
                euclidean_distance_squared(&p, &q)
            } else {
                taxicab_distance(&p, &q)
            };
            Ok(format!("{d}\n"))
        }
        Command::Midpoint { a, b } => Ok(format!("{}\n", midpoint(&a, &b))),
        Command::Angle { vertex, p, q, directed } => {
            let measure = if directed {
                directed_arc(&vertex, &p, &q)?
            } else {
                angle_measure(&vertex, &p, &q)?
            };
            Ok(format!("{measure}\n"))
        }
        Command::Circle { center, radius, classify, at_arc, arc, ray } => {
            let circle = TaxicabCircle::new(center, radius)?;
            if let Some(p) = classify {
                return Ok(match circle.position(&p) {
                    Some(pos) => format!("{pos}\n"),
                    None => "absent\n".to_owned(),
                });
            }
            if let Some(s) = at_arc {
                return Ok(format!("{}\n", circle.point_at_arc(&s)));
            }
            if let Some(pair) = arc {
                let len = circle.arc_length_ccw(&pair[0], &pair[1])?;
                return Ok(format!("{len}\n"));
            }
            let direction = ray.expect("clap guarantees one query is present");
            Ok(format!("{}\n", circle.ray_intersection(&direction)?))
        }
        Command::Rotate { p, center, theta } => {
            let image = taxicab_rotate(&p, &center, &TAngle::new(theta))?;
            Ok(format!("{image}\n"))
        }
        Command::Reflect { p, line } => Ok(format!("{}\n", taxicab_reflect(&p, &line))),
        Command::Isometry { spec, apply, compose, invert } => {
            if let Some(p) = apply {
                return Ok(format!("{}\n", spec.apply(&p)));
            }
            let result = if let Some(other) = compose {
                spec.compose(&other)
            } else if invert {
                spec.invert()
            } else {
                spec
            };
            let json = serde_json::to_string(&result).expect("isometry serializes");
            Ok(format!("{json}\n"))
        }
        Command::Triangle { apex, p, q } => {
            let triangle = IsoscelesTriangle::new(apex, p, q)?;
            let report = i5t_analyze(&triangle)?;
            Ok(format!("{}\n", report.to_json()))
        }
        Command::Figure { name } => {
            let scale = svg_scale()?;
            Ok(figure(name, scale).render())
        }
    }
}
