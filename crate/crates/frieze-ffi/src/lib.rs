//! C ABI for the frieze library.
//!
//! Objects cross the boundary as opaque handles; reports and data files
//! cross as JSON strings (the same formats the CLI emits), with every number
//! an exact fraction string. Every function returns a status code; output
//! parameters are written only on FRIEZE_OK (verification functions also
//! write their report on FRIEZE_ASSERTION_FAILED so callers can inspect the
//! findings).
//!
//! Strings returned through `char **` are owned by this library and must be
//! released with `frieze_string_free`; handles with the matching `_free`.
//! Every function is sound for null arguments (it returns
//! FRIEZE_NULL_POINTER); non-null pointers must come from this library and
//! respect the usual aliasing rules.
#![allow(clippy::missing_safety_doc)]

use std::ffi::{c_char, c_int, CStr, CString};

use frieze::geometry::{random_polygon, Polygon};
use frieze::grassmannian::CoordinateMatrix;
use frieze::grids::{check_diamond_determinants, check_s_diamonds, SSubfriezeVariant};
use frieze::heronian::HeronianFrieze;
use frieze::io;
use frieze::relations::{brute_force_relations, enumerate_relations};

/// Success.
pub const FRIEZE_OK: c_int = 0;
/// A mathematical assertion failed (nonzero residual or determinant).
pub const FRIEZE_ASSERTION_FAILED: c_int = 1;
/// Invalid input: bad JSON, bad parameters, out-of-range indices.
pub const FRIEZE_INVALID_INPUT: c_int = 2;
/// A required pointer argument was null, or a string was not UTF-8.
pub const FRIEZE_NULL_POINTER: c_int = 3;

/// Opaque polygon handle.
pub struct FriezePolygon(Polygon);

/// Opaque Heronian frieze handle.
pub struct FriezeHeronian(HeronianFrieze);

fn write_out<T>(out: *mut *mut T, value: T) -> c_int {
    if out.is_null() {
        return FRIEZE_NULL_POINTER;
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    FRIEZE_OK
}

fn write_string(out: *mut *mut c_char, value: String) -> c_int {
    if out.is_null() {
        return FRIEZE_NULL_POINTER;
    }
    match CString::new(value) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            FRIEZE_OK
        }
        Err(_) => FRIEZE_INVALID_INPUT,
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

/// Parse a polygon from its JSON file format.
#[no_mangle]
pub unsafe extern "C" fn frieze_polygon_from_json(
    json: *const c_char,
    out: *mut *mut FriezePolygon,
) -> c_int {
    let Some(text) = read_str(json) else {
        return FRIEZE_NULL_POINTER;
    };
    match io::parse_polygon_json(text) {
        Ok(p) => write_out(out, FriezePolygon(p)),
        Err(_) => FRIEZE_INVALID_INPUT,
    }
}

/// Deterministic random polygon; identical arguments yield identical
/// polygons.
#[no_mangle]
pub unsafe extern "C" fn frieze_polygon_random(
    n: usize,
    seed: u64,
    bound: u64,
    out: *mut *mut FriezePolygon,
) -> c_int {
    match random_polygon(n, seed, bound) {
        Ok(p) => write_out(out, FriezePolygon(p)),
        Err(_) => FRIEZE_INVALID_INPUT,
    }
}

/// Number of vertices, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn frieze_polygon_order(polygon: *const FriezePolygon) -> usize {
    polygon.as_ref().map_or(0, |p| p.0.n())
}

/// Serialize a polygon to its JSON file format.
#[no_mangle]
pub unsafe extern "C" fn frieze_polygon_to_json(
    polygon: *const FriezePolygon,
    out: *mut *mut c_char,
) -> c_int {
    let Some(p) = polygon.as_ref() else {
        return FRIEZE_NULL_POINTER;
    };
    let doc = io::polygon_to_file(&p.0);
    write_string(out, serde_json::to_string_pretty(&doc).expect("serializable"))
}

#[no_mangle]
pub unsafe extern "C" fn frieze_polygon_free(polygon: *mut FriezePolygon) {
    if !polygon.is_null() {
        drop(Box::from_raw(polygon));
    }
}

/// Build the polygonal Heronian frieze of a polygon.
#[no_mangle]
pub unsafe extern "C" fn frieze_build(
    polygon: *const FriezePolygon,
    out: *mut *mut FriezeHeronian,
) -> c_int {
    let Some(p) = polygon.as_ref() else {
        return FRIEZE_NULL_POINTER;
    };
    write_out(out, FriezeHeronian(HeronianFrieze::from_polygon(&p.0)))
}

/// Parse a frieze from its JSON export format.
#[no_mangle]
pub unsafe extern "C" fn frieze_from_json(
    json: *const c_char,
    out: *mut *mut FriezeHeronian,
) -> c_int {
    let Some(text) = read_str(json) else {
        return FRIEZE_NULL_POINTER;
    };
    match io::parse_frieze_json(text) {
        Ok(f) => write_out(out, FriezeHeronian(f)),
        Err(_) => FRIEZE_INVALID_INPUT,
    }
}

/// Serialize a frieze to its JSON export format.
#[no_mangle]
pub unsafe extern "C" fn frieze_to_json(
    frieze: *const FriezeHeronian,
    out: *mut *mut c_char,
) -> c_int {
    let Some(f) = frieze.as_ref() else {
        return FRIEZE_NULL_POINTER;
    };
    let doc = io::frieze_to_file(&f.0);
    write_string(out, serde_json::to_string_pretty(&doc).expect("serializable"))
}

#[no_mangle]
pub unsafe extern "C" fn frieze_free(frieze: *mut FriezeHeronian) {
    if !frieze.is_null() {
        drop(Box::from_raw(frieze));
    }
}

/// Check every diamond equation and boundary condition of a frieze. Writes a
/// JSON report and returns FRIEZE_OK when all residuals vanish,
/// FRIEZE_ASSERTION_FAILED otherwise (the report lists the violations).
#[no_mangle]
pub unsafe extern "C" fn frieze_verify(
    frieze: *const FriezeHeronian,
    report_out: *mut *mut c_char,
) -> c_int {
    let Some(f) = frieze.as_ref() else {
        return FRIEZE_NULL_POINTER;
    };
    let report = f.0.verify();
    let doc = serde_json::json!({
        "n": f.0.n(),
        "diamonds_checked": report.diamonds_checked,
        "violations": io::frieze_report_violations(&report),
        "passed": report.passed(),
    });
    let status = write_string(report_out, serde_json::to_string_pretty(&doc).expect("serializable"));
    if status != FRIEZE_OK {
        return status;
    }
    if report.passed() {
        FRIEZE_OK
    } else {
        FRIEZE_ASSERTION_FAILED
    }
}

/// Enumerate the Heronian minor relations of order n as a JSON array. With
/// `oracle` nonzero the brute-force oracle runs too and a disagreement
/// returns FRIEZE_ASSERTION_FAILED.
#[no_mangle]
pub unsafe extern "C" fn frieze_relations_json(
    n: usize,
    oracle: c_int,
    out: *mut *mut c_char,
) -> c_int {
    if n < 4 {
        return FRIEZE_INVALID_INPUT;
    }
    let relations = enumerate_relations(n);
    let mut identical = true;
    if oracle != 0 {
        identical = brute_force_relations(n) == relations;
    }
    let docs: Vec<_> = relations
        .iter()
        .map(|r| io::relation_to_json(r, None, None).expect("no polygon supplied"))
        .collect();
    let status = write_string(
        out,
        serde_json::to_string_pretty(&docs).expect("serializable"),
    );
    if status != FRIEZE_OK {
        return status;
    }
    if identical {
        FRIEZE_OK
    } else {
        FRIEZE_ASSERTION_FAILED
    }
}

/// S-subfrieze variant selectors for `frieze_s_diamond_check`.
pub const FRIEZE_S_PRIMARY: c_int = 0;
pub const FRIEZE_S_ALTERNATE: c_int = 1;

/// Sweep all 4×4 S-subfrieze diamond determinants of a polygon (n >= 5).
/// FRIEZE_OK when every determinant vanishes and the S = 2m pairing holds.
#[no_mangle]
pub unsafe extern "C" fn frieze_s_diamond_check(
    polygon: *const FriezePolygon,
    variant: c_int,
    report_out: *mut *mut c_char,
) -> c_int {
    let Some(p) = polygon.as_ref() else {
        return FRIEZE_NULL_POINTER;
    };
    let variant = match variant {
        FRIEZE_S_PRIMARY => SSubfriezeVariant::Primary,
        FRIEZE_S_ALTERNATE => SSubfriezeVariant::Alternate,
        _ => return FRIEZE_INVALID_INPUT,
    };
    let report = match check_s_diamonds(&p.0, variant) {
        Ok(r) => r,
        Err(_) => return FRIEZE_INVALID_INPUT,
    };
    let doc = serde_json::json!({
        "kind": variant.as_str(),
        "n": report.n,
        "entrywise_twice_minor": report.entrywise_twice_minor,
        "determinant_report": io::s_report_entries(&report),
        "passed": report.passed(),
    });
    let status = write_string(report_out, serde_json::to_string_pretty(&doc).expect("serializable"));
    if status != FRIEZE_OK {
        return status;
    }
    if report.passed() {
        FRIEZE_OK
    } else {
        FRIEZE_ASSERTION_FAILED
    }
}

/// Sweep size×size Plücker-frieze diamond determinants over a polygon's
/// k-row matrix (k = 2 or 3). Vanishing is asserted when size = k + 1.
#[no_mangle]
pub unsafe extern "C" fn frieze_plucker_diamond_check(
    polygon: *const FriezePolygon,
    k: usize,
    size: usize,
    report_out: *mut *mut c_char,
) -> c_int {
    let Some(p) = polygon.as_ref() else {
        return FRIEZE_NULL_POINTER;
    };
    let matrix = match k {
        3 => CoordinateMatrix::from_polygon(&p.0),
        2 => CoordinateMatrix::xy_from_polygon(&p.0),
        _ => return FRIEZE_INVALID_INPUT,
    };
    let report = match check_diamond_determinants(&matrix, size) {
        Ok(r) => r,
        Err(_) => return FRIEZE_INVALID_INPUT,
    };
    let doc = serde_json::json!({
        "kind": "plucker",
        "k": report.k,
        "n": report.n,
        "size": report.size,
        "vanishing_asserted": report.vanishing_asserted,
        "determinant_report": io::determinant_report_entries(&report),
        "passed": report.passed(),
    });
    let status = write_string(report_out, serde_json::to_string_pretty(&doc).expect("serializable"));
    if status != FRIEZE_OK {
        return status;
    }
    if report.passed() {
        FRIEZE_OK
    } else {
        FRIEZE_ASSERTION_FAILED
    }
}

/// Release a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn frieze_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
