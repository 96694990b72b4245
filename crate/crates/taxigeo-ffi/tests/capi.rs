//! Exercises the C ABI exactly as a foreign caller would: strings in,
//! handles and strings out, explicit frees.

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use taxigeo_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn point(s: &str) -> *mut TgPoint {
    let mut out = ptr::null_mut();
    let status = unsafe { tg_point_parse(cstr(s).as_ptr(), &mut out) };
    assert_eq!(status, TgStatus::Ok, "parsing point {s}");
    out
}

fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let s = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_owned();
    unsafe { tg_string_free(ptr) };
    s
}

fn last_error() -> String {
    take_string(tg_last_error_message())
}

#[test]
fn point_round_trip() {
    let p = point("3/2,-5");
    let text = take_string(unsafe { tg_point_format(p) });
    assert_eq!(text, "3/2,-5");
    unsafe { tg_point_free(p) };

    let mut out = ptr::null_mut();
    let status = unsafe { tg_point_new(cstr("0.5").as_ptr(), cstr("1/4").as_ptr(), &mut out) };
    assert_eq!(status, TgStatus::Ok);
    assert_eq!(take_string(unsafe { tg_point_format(out) }), "1/2,1/4");
    unsafe { tg_point_free(out) };
}

#[test]
fn distances_and_midpoint() {
    let p = point("0,0");
    let q = point("3,4");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { tg_taxicab_distance(p, q, &mut s) }, TgStatus::Ok);
    assert_eq!(take_string(s), "7");
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { tg_euclidean_distance_squared(p, q, &mut s) },
        TgStatus::Ok
    );
    assert_eq!(take_string(s), "25");
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { tg_midpoint(p, q, &mut m) }, TgStatus::Ok);
    assert_eq!(take_string(unsafe { tg_point_format(m) }), "3/2,2");
    unsafe {
        tg_point_free(p);
        tg_point_free(q);
        tg_point_free(m);
    }
}

#[test]
fn angles_through_the_boundary() {
    let vertex = point("3,1");
    let p = point("0,0");
    let q = point("3/2,5/2");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { tg_angle_measure(vertex, p, q, &mut s) }, TgStatus::Ok);
    assert_eq!(take_string(s), "3/2");

    let origin = point("0,0");
    let east = point("1,0");
    let north = point("0,1");
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { tg_directed_arc(origin, north, east, &mut s) },
        TgStatus::Ok
    );
    assert_eq!(take_string(s), "6");

    // degenerate ray: p coincides with the vertex
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { tg_angle_measure(origin, origin, east, &mut s) },
        TgStatus::DomainError
    );
    assert!(last_error().contains("degenerate"));
    unsafe {
        tg_point_free(vertex);
        tg_point_free(p);
        tg_point_free(q);
        tg_point_free(origin);
        tg_point_free(east);
        tg_point_free(north);
    }
}

#[test]
fn isometries_compose_and_apply() {
    let mut yx = ptr::null_mut();
    let origin = point("0,0");
    assert_eq!(
        unsafe { tg_isometry_reflection(cstr("y=x").as_ptr(), origin, &mut yx) },
        TgStatus::Ok
    );
    let mut y0 = ptr::null_mut();
    assert_eq!(
        unsafe { tg_isometry_reflection(cstr("y=0").as_ptr(), origin, &mut y0) },
        TgStatus::Ok
    );
    let mut composed = ptr::null_mut();
    assert_eq!(
        unsafe { tg_isometry_compose(yx, y0, &mut composed) },
        TgStatus::Ok
    );
    assert_eq!(
        take_string(unsafe { tg_isometry_format(composed) }),
        "linear=rot2 t=0,0"
    );

    let p = point("3,1");
    let mut image = ptr::null_mut();
    assert_eq!(unsafe { tg_isometry_apply(composed, p, &mut image) }, TgStatus::Ok);
    assert_eq!(take_string(unsafe { tg_point_format(image) }), "-1,3");

    let mut inverse = ptr::null_mut();
    assert_eq!(unsafe { tg_isometry_invert(composed, &mut inverse) }, TgStatus::Ok);
    assert_eq!(
        take_string(unsafe { tg_isometry_format(inverse) }),
        "linear=rot6 t=0,0"
    );

    let mut parsed = ptr::null_mut();
    assert_eq!(
        unsafe { tg_isometry_parse(cstr("linear=rot6 t=1/2,-3").as_ptr(), &mut parsed) },
        TgStatus::Ok
    );
    assert_eq!(
        take_string(unsafe { tg_isometry_format(parsed) }),
        "linear=rot6 t=1/2,-3"
    );

    let mut bogus = ptr::null_mut();
    assert_eq!(
        unsafe { tg_isometry_parse(cstr("linear=warp t=0,0").as_ptr(), &mut bogus) },
        TgStatus::ParseError
    );

    unsafe {
        tg_point_free(origin);
        tg_point_free(p);
        tg_point_free(image);
        tg_isometry_free(yx);
        tg_isometry_free(y0);
        tg_isometry_free(composed);
        tg_isometry_free(inverse);
        tg_isometry_free(parsed);
    }
}

#[test]
fn rotate_and_reflect() {
    let p = point("2,0");
    let origin = point("0,0");
    let mut image = ptr::null_mut();
    assert_eq!(
        unsafe { tg_taxicab_rotate(p, origin, cstr("1").as_ptr(), &mut image) },
        TgStatus::Ok
    );
    assert_eq!(take_string(unsafe { tg_point_format(image) }), "1,1");
    unsafe { tg_point_free(image) };

    // rotating the center is a domain error
    let mut bad = ptr::null_mut();
    assert_eq!(
        unsafe { tg_taxicab_rotate(origin, origin, cstr("1").as_ptr(), &mut bad) },
        TgStatus::DomainError
    );
    assert!(!last_error().is_empty());

    let e = point("1,0");
    let mut reflected = ptr::null_mut();
    assert_eq!(
        unsafe { tg_taxicab_reflect(e, cstr("y=2x").as_ptr(), &mut reflected) },
        TgStatus::Ok
    );
    assert_eq!(take_string(unsafe { tg_point_format(reflected) }), "-3/5,4/5");

    unsafe {
        tg_point_free(p);
        tg_point_free(origin);
        tg_point_free(e);
        tg_point_free(reflected);
    }
}

#[test]
fn triangle_report_json() {
    let apex = point("0,0");
    let p = point("3/2,5/2");
    let q = point("-3,-1");
    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { tg_triangle_analyze(apex, p, q, &mut json) },
        TgStatus::Ok
    );
    let text = take_string(json);
    assert!(text.contains("\"configuration\":\"opposing_quadrants\""));
    assert!(text.contains("\"alpha\":\"3/8\""));
    assert!(text.contains("\"agreement\":true"));

    // unequal legs are rejected through the same boundary
    let r = point("1,0");
    let s = point("0,2");
    let mut bad = ptr::null_mut();
    assert_eq!(
        unsafe { tg_triangle_analyze(apex, r, s, &mut bad) },
        TgStatus::DomainError
    );
    assert!(last_error().contains("unequal"));

    unsafe {
        tg_point_free(apex);
        tg_point_free(p);
        tg_point_free(q);
        tg_point_free(r);
        tg_point_free(s);
    }
}

#[test]
fn null_arguments_are_rejected() {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { tg_point_parse(ptr::null(), &mut out) },
        TgStatus::NullPointer
    );
    let p = point("1,1");
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { tg_taxicab_distance(p, ptr::null(), &mut s) },
        TgStatus::NullPointer
    );
    assert_eq!(unsafe { tg_point_format(ptr::null()) }, ptr::null_mut());
    assert_eq!(
        unsafe { tg_point_parse(cstr("zebra").as_ptr(), &mut out) },
        TgStatus::ParseError
    );
    assert!(last_error().contains("zebra"));
    unsafe { tg_point_free(p) };
    // freeing null is a no-op
    unsafe {
        tg_point_free(ptr::null_mut());
        tg_isometry_free(ptr::null_mut());
        tg_string_free(ptr::null_mut());
    }
}
