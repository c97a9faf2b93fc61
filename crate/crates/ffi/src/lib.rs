//! C ABI over `superweyl`.
//!
//! Values cross the boundary as opaque handles (`SwKappa`, `SwPoint`,
//! `SwOrbit`) created by `sw_*_parse`/constructor functions and released by
//! the matching `sw_*_free`. Rationals and reports cross as NUL-terminated
//! UTF-8 strings (`"p/q"` and JSON) owned by the caller and released with
//! `sw_string_free`. Every fallible function returns an `SwStatus`; on
//! failure `sw_last_error_message` describes the error for the calling
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use superweyl::classification::{classify_kappa, reduce_to_minimal};
use superweyl::groupoid::{default_cap, orbit, Kappa, Orbit, Point, UVPoint};
use superweyl::invariants::{are_equivalent, b_l, p_l, q_l};
use superweyl::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DivisionByZero = 4,
    ZeroKappa = 5,
    UnknownVariable = 6,
    DimensionMismatch = 7,
    StepLimitExceeded = 8,
    InternalVerificationFailed = 9,
    NotNegativeSpecial = 10,
    NotPositiveSpecial = 11,
    ConnectivityUnverified = 12,
    GenericityExhausted = 13,
    UnsupportedKappa = 14,
    DegenerateDenominator = 15,
    Panic = 16,
}

impl From<&Error> for SwStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::DivisionByZero => SwStatus::DivisionByZero,
            Error::ZeroKappa => SwStatus::ZeroKappa,
            Error::UnknownVariable(_) => SwStatus::UnknownVariable,
            Error::DimensionMismatch { .. } => SwStatus::DimensionMismatch,
            Error::StepLimitExceeded { .. } => SwStatus::StepLimitExceeded,
            Error::InternalVerificationFailed(_) => SwStatus::InternalVerificationFailed,
            Error::NotNegativeSpecial { .. } => SwStatus::NotNegativeSpecial,
            Error::NotPositiveSpecial { .. } => SwStatus::NotPositiveSpecial,
            Error::ConnectivityUnverified { .. } => SwStatus::ConnectivityUnverified,
            Error::GenericityExhausted { .. } => SwStatus::GenericityExhausted,
            Error::UnsupportedKappa(_) => SwStatus::UnsupportedKappa,
            Error::DegenerateDenominator => SwStatus::DegenerateDenominator,
            Error::Parse(_) => SwStatus::ParseError,
        }
    }
}

/// A nonzero rational parameter.
pub struct SwKappa(Kappa);

/// A point in `(x, y)` coordinates.
pub struct SwPoint(Point);

/// An enumerated orbit.
pub struct SwOrbit(Orbit);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

struct Failure(SwStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(SwStatus::from(&e), e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

/// Runs `body`, recording any failure or panic for `sw_last_error_message`.
fn guard(body: impl FnOnce() -> FfiResult<()>) -> SwStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SwStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            SwStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> FfiResult<&'a str> {
    if s.is_null() {
        return Err(Failure(
            SwStatus::NullPointer,
            "null string argument".into(),
        ));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(SwStatus::InvalidUtf8, e.to_string()))
}

unsafe fn read<'a, T>(p: *const T) -> FfiResult<&'a T> {
    p.as_ref()
        .ok_or_else(|| Failure(SwStatus::NullPointer, "null handle argument".into()))
}

unsafe fn write<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(Failure(
            SwStatus::NullPointer,
            "null output argument".into(),
        ));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    let s = CString::new(s).map_err(|e| Failure(SwStatus::Panic, e.to_string()))?;
    write(out, s.into_raw())
}

fn json<T: serde::Serialize>(value: &T) -> FfiResult<String> {
    serde_json::to_string(value)
        .map_err(|e| Failure(SwStatus::InternalVerificationFailed, e.to_string()))
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn sw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn sw_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"p"` or `"p/q"`; zero is rejected.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_kappa_parse(text: *const c_char, out: *mut *mut SwKappa) -> SwStatus {
    guard(|| {
        let kappa: Kappa = read_str(text)?.parse()?;
        write(out, Box::into_raw(Box::new(SwKappa(kappa))))
    })
}

/// # Safety
/// `kappa` must come from `sw_kappa_parse` and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn sw_kappa_free(kappa: *mut SwKappa) {
    if !kappa.is_null() {
        drop(Box::from_raw(kappa));
    }
}

/// Parses `"x=3,4;y=1/2"`.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_point_parse(text: *const c_char, out: *mut *mut SwPoint) -> SwStatus {
    guard(|| {
        let point: Point = read_str(text)?.parse()?;
        write(out, Box::into_raw(Box::new(SwPoint(point))))
    })
}

/// Parses `"u=...;v=..."` and converts to `(x, y)` at `kappa`.
///
/// # Safety
/// Arguments must be valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_point_from_uv(
    text: *const c_char,
    kappa: *const SwKappa,
    out: *mut *mut SwPoint,
) -> SwStatus {
    guard(|| {
        let uv: UVPoint = read_str(text)?.parse()?;
        let point = uv.to_xy(&read(kappa)?.0);
        write(out, Box::into_raw(Box::new(SwPoint(point))))
    })
}

/// # Safety
/// `point` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn sw_point_free(point: *mut SwPoint) {
    if !point.is_null() {
        drop(Box::from_raw(point));
    }
}

/// Canonical text form `"x=...;y=..."`.
///
/// # Safety
/// `point` must be valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_point_to_string(
    point: *const SwPoint,
    out: *mut *mut c_char,
) -> SwStatus {
    guard(|| write_string(out, read(point)?.0.to_string()))
}

/// Classification of `kappa` for `(n, m)` as JSON.
///
/// # Safety
/// `kappa` must be valid; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_classify(
    kappa: *const SwKappa,
    n: usize,
    m: usize,
    out_json: *mut *mut c_char,
) -> SwStatus {
    guard(|| write_string(out_json, json(&classify_kappa(&read(kappa)?.0, n, m))?))
}

/// Enumerates the orbit of `seed`. `cap = 0` selects `(n+m)! + 1`.
///
/// # Safety
/// Handles must be valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_orbit(
    seed: *const SwPoint,
    kappa: *const SwKappa,
    cap: usize,
    out: *mut *mut SwOrbit,
) -> SwStatus {
    guard(|| {
        let seed = &read(seed)?.0;
        let cap = if cap == 0 {
            default_cap(seed.n(), seed.m())
        } else {
            cap
        };
        let o = orbit(seed, &read(kappa)?.0, cap);
        write(out, Box::into_raw(Box::new(SwOrbit(o))))
    })
}

/// # Safety
/// `orbit` must come from `sw_orbit` and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn sw_orbit_free(orbit: *mut SwOrbit) {
    if !orbit.is_null() {
        drop(Box::from_raw(orbit));
    }
}

/// Number of points enumerated; 0 for NULL.
///
/// # Safety
/// `orbit` must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sw_orbit_len(orbit: *const SwOrbit) -> usize {
    orbit.as_ref().map_or(0, |o| o.0.len())
}

/// Whether enumeration finished below the cap; false for NULL.
///
/// # Safety
/// `orbit` must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sw_orbit_is_complete(orbit: *const SwOrbit) -> bool {
    orbit.as_ref().is_some_and(|o| o.0.complete)
}

/// Whether `point` was enumerated; false if either is NULL.
///
/// # Safety
/// Handles must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sw_orbit_contains(orbit: *const SwOrbit, point: *const SwPoint) -> bool {
    match (orbit.as_ref(), point.as_ref()) {
        (Some(o), Some(p)) => o.0.contains(&p.0),
        _ => false,
    }
}

/// Points, edges, completeness and cap as JSON.
///
/// # Safety
/// `orbit` must be valid; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_orbit_to_json(
    orbit: *const SwOrbit,
    out_json: *mut *mut c_char,
) -> SwStatus {
    guard(|| write_string(out_json, json(&read(orbit)?.0)?))
}

/// Exact equivalence of two points of equal dimensions.
///
/// # Safety
/// Handles must be valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_are_equivalent(
    a: *const SwPoint,
    b: *const SwPoint,
    kappa: *const SwKappa,
    out: *mut bool,
) -> SwStatus {
    guard(|| {
        let cert = are_equivalent(&read(a)?.0, &read(b)?.0, &read(kappa)?.0)?;
        write(out, cert.equal)
    })
}

/// Which invariant family `sw_invariant` evaluates.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SwFamily {
    Q = 0,
    P = 1,
    B = 2,
}

/// `q_l`, `p_l` or `b_l` at a point, as a `"p/q"` string.
///
/// # Safety
/// Handles must be valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sw_invariant(
    family: SwFamily,
    point: *const SwPoint,
    kappa: *const SwKappa,
    l: u32,
    out: *mut *mut c_char,
) -> SwStatus {
    guard(|| {
        let (p, k) = (&read(point)?.0, &read(kappa)?.0);
        let value = match family {
            SwFamily::Q => q_l(p, k, l),
            SwFamily::P => p_l(p, k, l),
            SwFamily::B => b_l(&p.to_uv(k), k, l),
        };
        write_string(out, value.to_string())
    })
}

/// Lowers `point` to its minimal form in at most `max_steps` moves.
///
/// # Safety
/// Handles must be valid; `out` and `steps` writable (`steps` may be NULL).
#[no_mangle]
pub unsafe extern "C" fn sw_reduce_to_minimal(
    point: *const SwPoint,
    kappa: *const SwKappa,
    max_steps: usize,
    out: *mut *mut SwPoint,
    steps: *mut usize,
) -> SwStatus {
    guard(|| {
        let red = reduce_to_minimal(&read(point)?.0, &read(kappa)?.0, max_steps)?;
        if !steps.is_null() {
            steps.write(red.steps);
        }
        write(out, Box::into_raw(Box::new(SwPoint(red.minimal))))
    })
}
