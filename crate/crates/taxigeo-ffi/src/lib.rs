//! C ABI over the taxigeo kernel.
//!
//! All geometry stays exact: points, angles, and distances cross the
//! boundary as canonical rational literals (`p/q` or a bare integer,
//! points as `x,y`). Objects are opaque handles owned by the library;
//! every `*_free` releases exactly what the matching constructor returned,
//! and strings returned by the library are released with
//! [`tg_string_free`].
//!
//! Fallible functions return a [`TgStatus`]; on failure the thread-local
//! message from [`tg_last_error_message`] describes what went wrong.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::str::FromStr;

use taxigeo::{
    angle_measure, directed_arc, euclidean_distance_squared, i5t_analyze, midpoint,
    taxicab_distance, taxicab_reflect, taxicab_rotate, Isometry, IsoscelesTriangle, Line, Point,
    Scalar, SpecialAxis, TAngle,
};

/// Result code of a fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TgStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A literal failed to parse (rational, point, line, axis, isometry).
    ParseError = 2,
    /// The inputs were outside an operation's domain.
    DomainError = 3,
}

/// An exact point of the taxicab plane (opaque).
pub struct TgPoint(Point);

/// A taxicab isometry in canonical form (opaque).
pub struct TgIsometry(Isometry);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(message: impl Into<String>) {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message.into());
}

fn fail(status: TgStatus, message: impl Into<String>) -> TgStatus {
    set_error(message);
    status
}

/// Message from the most recent failure on this thread, as a fresh string
/// the caller releases with [`tg_string_free`]. Empty if nothing failed yet.
#[no_mangle]
pub extern "C" fn tg_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| into_c_string(slot.borrow().clone()))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("kernel strings never contain NUL")
        .into_raw()
}

/// # Safety
/// `ptr` must be null or a valid NUL-terminated C string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, TgStatus> {
    if ptr.is_null() {
        return Err(fail(TgStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        fail(TgStatus::ParseError, "string argument is not valid UTF-8")
    })
}

/// # Safety
/// `ptr` must be null or a pointer previously returned by this library and
/// not yet freed.
unsafe fn read_handle<'a, T>(ptr: *const T) -> Result<&'a T, TgStatus> {
    ptr.as_ref()
        .ok_or_else(|| fail(TgStatus::NullPointer, "null handle argument"))
}

/// # Safety
/// `out` must be a valid location to store the result.
unsafe fn write_out<T>(out: *mut T, value: T) -> TgStatus {
    if out.is_null() {
        return fail(TgStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    TgStatus::Ok
}

fn parse_scalar(text: &str) -> Result<Scalar, TgStatus> {
    Scalar::from_str(text).map_err(|e| fail(TgStatus::ParseError, e.to_string()))
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string pointer returned by this library, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn tg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a point from its `x,y` literal.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid output
/// location.
#[no_mangle]
pub unsafe extern "C" fn tg_point_parse(text: *const c_char, out: *mut *mut TgPoint) -> TgStatus {
    let text = match read_str(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match Point::from_str(text) {
        Ok(p) => write_out(out, Box::into_raw(Box::new(TgPoint(p)))),
        Err(e) => fail(TgStatus::ParseError, e.to_string()),
    }
}

/// Builds a point from two rational literals.
///
/// # Safety
/// As [`tg_point_parse`], for both coordinate strings.
#[no_mangle]
pub unsafe extern "C" fn tg_point_new(
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut TgPoint,
) -> TgStatus {
    let (x, y) = match (read_str(x), read_str(y)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(s), _) | (_, Err(s)) => return s,
    };
    let (x, y) = match (parse_scalar(x), parse_scalar(y)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(s), _) | (_, Err(s)) => return s,
    };
    write_out(out, Box::into_raw(Box::new(TgPoint(Point::new(x, y)))))
}

/// Canonical `x,y` literal of a point, or null if `p` is null.
///
/// # Safety
/// `p` must be null or a live point handle.
#[no_mangle]
pub unsafe extern "C" fn tg_point_format(p: *const TgPoint) -> *mut c_char {
    match p.as_ref() {
        Some(p) => into_c_string(p.0.to_string()),
        None => std::ptr::null_mut(),
    }
}

/// # Safety
/// `p` must be null or a live point handle; it is consumed.
#[no_mangle]
pub unsafe extern "C" fn tg_point_free(p: *mut TgPoint) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

unsafe fn distance_impl(
    p: *const TgPoint,
    q: *const TgPoint,
    out: *mut *mut c_char,
    f: fn(&Point, &Point) -> Scalar,
) -> TgStatus {
    match (read_handle(p), read_handle(q)) {
        (Ok(p), Ok(q)) => write_out(out, into_c_string(f(&p.0, &q.0).to_string())),
        (Err(s), _) | (_, Err(s)) => s,
    }
}

/// Taxicab distance |Δx| + |Δy| as a rational literal.
///
/// # Safety
/// `p` and `q` must be live point handles, `out` a valid output location.
#[no_mangle]
pub unsafe extern "C" fn tg_taxicab_distance(
    p: *const TgPoint,
    q: *const TgPoint,
    out: *mut *mut c_char,
) -> TgStatus {
    distance_impl(p, q, out, taxicab_distance)
}

/// Squared Euclidean distance as a rational literal.
///
/// # Safety
/// As [`tg_taxicab_distance`].
#[no_mangle]
pub unsafe extern "C" fn tg_euclidean_distance_squared(
    p: *const TgPoint,
    q: *const TgPoint,
    out: *mut *mut c_char,
) -> TgStatus {
    distance_impl(p, q, out, euclidean_distance_squared)
}

/// Midpoint of the segment from `p` to `q`.
///
/// # Safety
/// As [`tg_taxicab_distance`], with `out` receiving a new point handle.
#[no_mangle]
pub unsafe extern "C" fn tg_midpoint(
    p: *const TgPoint,
    q: *const TgPoint,
    out: *mut *mut TgPoint,
) -> TgStatus {
    match (read_handle(p), read_handle(q)) {
        (Ok(p), Ok(q)) => write_out(
            out,
            Box::into_raw(Box::new(TgPoint(midpoint(&p.0, &q.0)))),
        ),
        (Err(s), _) | (_, Err(s)) => s,
    }
}

unsafe fn angle_impl(
    vertex: *const TgPoint,
    p: *const TgPoint,
    q: *const TgPoint,
    out: *mut *mut c_char,
    f: fn(&Point, &Point, &Point) -> Result<TAngle, taxigeo::GeomError>,
) -> TgStatus {
    let (vertex, p, q) = match (read_handle(vertex), read_handle(p), read_handle(q)) {
        (Ok(v), Ok(p), Ok(q)) => (v, p, q),
        (Err(s), _, _) | (_, Err(s), _) | (_, _, Err(s)) => return s,
    };
    match f(&vertex.0, &p.0, &q.0) {
        Ok(angle) => write_out(out, into_c_string(angle.to_string())),
        Err(e) => fail(TgStatus::DomainError, e.to_string()),
    }
}

/// Undirected taxicab angle at `vertex` in t-radians (range [0, 4]).
///
/// # Safety
/// All three points must be live handles, `out` a valid output location.
#[no_mangle]
pub unsafe extern "C" fn tg_angle_measure(
    vertex: *const TgPoint,
    p: *const TgPoint,
    q: *const TgPoint,
    out: *mut *mut c_char,
) -> TgStatus {
    angle_impl(vertex, p, q, out, angle_measure)
}

/// Counterclockwise arc from the ray toward `p` to the ray toward `q`
/// (range [0, 8)).
///
/// # Safety
/// As [`tg_angle_measure`].
#[no_mangle]
pub unsafe extern "C" fn tg_directed_arc(
    vertex: *const TgPoint,
    p: *const TgPoint,
    q: *const TgPoint,
    out: *mut *mut c_char,
) -> TgStatus {
    angle_impl(vertex, p, q, out, directed_arc)
}

/// Parses `linear=<name> t=<x>,<y>`.
///
/// # Safety
/// `spec` must be a valid NUL-terminated string, `out` a valid output
/// location.
#[no_mangle]
pub unsafe extern "C" fn tg_isometry_parse(
    spec: *const c_char,
    out: *mut *mut TgIsometry,
) -> TgStatus {
    let spec = match read_str(spec) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match Isometry::from_str(spec) {
        Ok(f) => write_out(out, Box::into_raw(Box::new(TgIsometry(f)))),
        Err(e) => fail(TgStatus::ParseError, e.to_string()),
    }
}

/// Translation by the vector `v`.
///
/// # Safety
/// `v` must be a live point handle, `out` a valid output location.
#[no_mangle]
pub unsafe extern "C" fn tg_isometry_translation(
    v: *const TgPoint,
    out: *mut *mut TgIsometry,
) -> TgStatus {
    match read_handle(v) {
        Ok(v) => write_out(
            out,
            Box::into_raw(Box::new(TgIsometry(Isometry::translation_by(v.0.clone())))),
        ),
        Err(s) => s,
    }
}

/// Rotation by 2n t-radians counterclockwise about `center`.
///
/// # Safety
/// `center` must be a live point handle, `out` a valid output location.
#[no_mangle]
pub unsafe extern "C" fn tg_isometry_rotation_2n(
    n: i64,
    center: *const TgPoint,
    out: *mut *mut TgIsometry,
) -> TgStatus {
    match read_handle(center) {
        Ok(c) => write_out(
            out,
            Box::into_raw(Box::new(TgIsometry(Isometry::rotation_2n(n, &c.0)))),
        ),
        Err(s) => s,
    }
}

/// Reflection across the axis direction (`"y=x"`, `"y=-x"`, `"y=0"`,
/// `"x=0"`) through the given point.
///
/// # Safety
/// `axis` must be a valid string, `through` a live point handle, `out` a
/// valid output location.
#[no_mangle]
pub unsafe extern "C" fn tg_isometry_reflection(
    axis: *const c_char,
    through: *const TgPoint,
    out: *mut *mut TgIsometry,
) -> TgStatus {
    let axis = match read_str(axis) {
        Ok(a) => a,
        Err(status) => return status,
    };
    let through = match read_handle(through) {
        Ok(p) => p,
        Err(s) => return s,
    };
    match SpecialAxis::from_str(axis) {
        Ok(axis) => write_out(
            out,
            Box::into_raw(Box::new(TgIsometry(Isometry::reflection_special(
                axis,
                &through.0,
            )))),
        ),
        Err(_) => fail(
            TgStatus::ParseError,
            format!("unknown axis `{axis}` (expected y=x, y=-x, y=0, or x=0)"),
        ),
    }
}

/// Canonical form of `f ∘ g` (g acts first).
///
/// # Safety
/// `f` and `g` must be live isometry handles, `out` a valid output location.
#[no_mangle]
pub unsafe extern "C" fn tg_isometry_compose(
    f: *const TgIsometry,
    g: *const TgIsometry,
    out: *mut *mut TgIsometry,
) -> TgStatus {
    match (read_handle(f), read_handle(g)) {
        (Ok(f), Ok(g)) => write_out(
            out,
            Box::into_raw(Box::new(TgIsometry(f.0.compose(&g.0)))),
        ),
        (Err(s), _) | (_, Err(s)) => s,
    }
}

/// The inverse isometry.
///
/// # Safety
/// `f` must be a live isometry handle, `out` a valid output location.
#[no_mangle]
pub unsafe extern "C" fn tg_isometry_invert(
    f: *const TgIsometry,
    out: *mut *mut TgIsometry,
) -> TgStatus {
    match read_handle(f) {
        Ok(f) => write_out(out, Box::into_raw(Box::new(TgIsometry(f.0.invert())))),
        Err(s) => s,
    }
}

/// Applies the isometry to a point.
///
/// # Safety
/// `f` and `p` must be live handles, `out` a valid output location.
#[no_mangle]
pub unsafe extern "C" fn tg_isometry_apply(
    f: *const TgIsometry,
    p: *const TgPoint,
    out: *mut *mut TgPoint,
) -> TgStatus {
    match (read_handle(f), read_handle(p)) {
        (Ok(f), Ok(p)) => write_out(
            out,
            Box::into_raw(Box::new(TgPoint(f.0.apply(&p.0)))),
        ),
        (Err(s), _) | (_, Err(s)) => s,
    }
}

/// Text form `linear=<name> t=<x>,<y>`, or null if `f` is null.
///
/// # Safety
/// `f` must be null or a live isometry handle.
#[no_mangle]
pub unsafe extern "C" fn tg_isometry_format(f: *const TgIsometry) -> *mut c_char {
    match f.as_ref() {
        Some(f) => into_c_string(f.0.to_string()),
        None => std::ptr::null_mut(),
    }
}

/// # Safety
/// `f` must be null or a live isometry handle; it is consumed.
#[no_mangle]
pub unsafe extern "C" fn tg_isometry_free(f: *mut TgIsometry) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Rotates `p` counterclockwise about `center` by `theta` t-radians
/// (a rational literal) along the taxicab circle.
///
/// # Safety
/// `p` and `center` must be live point handles, `theta` a valid string,
/// `out` a valid output location.
#[no_mangle]
pub unsafe extern "C" fn tg_taxicab_rotate(
    p: *const TgPoint,
    center: *const TgPoint,
    theta: *const c_char,
    out: *mut *mut TgPoint,
) -> TgStatus {
    let (p, center) = match (read_handle(p), read_handle(center)) {
        (Ok(p), Ok(c)) => (p, c),
        (Err(s), _) | (_, Err(s)) => return s,
    };
    let theta = match read_str(theta).and_then(parse_scalar) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match taxicab_rotate(&p.0, &center.0, &TAngle::new(theta)) {
        Ok(image) => write_out(out, Box::into_raw(Box::new(TgPoint(image)))),
        Err(e) => fail(TgStatus::DomainError, e.to_string()),
    }
}

/// Reflects `p` across a line given in equation form (`y=x`, `x=0`,
/// `y=1/2x-3`, ...).
///
/// # Safety
/// `p` must be a live point handle, `line` a valid string, `out` a valid
/// output location.
#[no_mangle]
pub unsafe extern "C" fn tg_taxicab_reflect(
    p: *const TgPoint,
    line: *const c_char,
    out: *mut *mut TgPoint,
) -> TgStatus {
    let p = match read_handle(p) {
        Ok(p) => p,
        Err(s) => return s,
    };
    let line = match read_str(line) {
        Ok(l) => l,
        Err(status) => return status,
    };
    match Line::from_str(line) {
        Ok(line) => write_out(
            out,
            Box::into_raw(Box::new(TgPoint(taxicab_reflect(&p.0, &line)))),
        ),
        Err(e) => fail(TgStatus::ParseError, e.to_string()),
    }
}

/// Analyzes the isosceles triangle with the given apex and legs; on success
/// `out` receives the single-line JSON report.
///
/// # Safety
/// All three points must be live handles, `out` a valid output location.
#[no_mangle]
pub unsafe extern "C" fn tg_triangle_analyze(
    apex: *const TgPoint,
    p: *const TgPoint,
    q: *const TgPoint,
    out: *mut *mut c_char,
) -> TgStatus {
    let (apex, p, q) = match (read_handle(apex), read_handle(p), read_handle(q)) {
        (Ok(a), Ok(p), Ok(q)) => (a, p, q),
        (Err(s), _, _) | (_, Err(s), _) | (_, _, Err(s)) => return s,
    };
    let triangle = match IsoscelesTriangle::new(apex.0.clone(), p.0.clone(), q.0.clone()) {
        Ok(t) => t,
        Err(e) => return fail(TgStatus::DomainError, e.to_string()),
    };
    match i5t_analyze(&triangle) {
        Ok(report) => write_out(out, into_c_string(report.to_json())),
        Err(e) => fail(TgStatus::DomainError, e.to_string()),
    }
}
