//! C ABI over the core library.
//!
//! Every function returns a [`SykStatus`]. Results come back through out
//! pointers; strings are NUL-terminated UTF-8 JSON owned by the caller and
//! released with [`syk_string_free`]. On failure a message for the calling
//! thread is available from [`syk_last_error`].
//!
//! Pointer contract for every `unsafe` entry point: string arguments are
//! NUL-terminated, handles are live (not yet freed), and out pointers are
//! writable. NULL anywhere is reported as `NullArgument`, never dereferenced.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use syk::algebra::{Signature, Yangian};
use syk::api::{self, PbwCheck};
use syk::gauss::Composition;
use syk::json::{element_from_str, element_to_string};
use syk::morphisms::MapKind;
use syk::pbw::Family;
use syk::verify::{Suite, Verifier};
use syk::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SykStatus {
    Ok = 0,
    /// A verification ran and found failures; the report is still returned.
    CheckFailed = 1,
    Parse = 2,
    WrongShape = 3,
    OutOfRange = 4,
    OrderTooSmall = 5,
    Internal = 6,
    NullArgument = 7,
    InvalidUtf8 = 8,
    Panic = 9,
}

impl From<&Error> for SykStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse(_) => SykStatus::Parse,
            Error::WrongShape(_) | Error::InvalidComposition(_) => SykStatus::WrongShape,
            Error::IndexOutOfRange(_) | Error::DegreeExceeded { .. } => SykStatus::OutOfRange,
            Error::OrderTooSmall { .. } => SykStatus::OrderTooSmall,
            Error::OutOfKnownRange { .. } | Error::NotUnitriangularConstantTerm | Error::DimensionMismatch(_) => {
                SykStatus::Internal
            }
        }
    }
}

/// Y(gl(M|N)) with its memoized normal-ordering engine.
pub struct SykAlgebra {
    y: Yangian,
}

/// An algebra together with the Gauss blocks of one composition.
pub struct SykVerifier {
    v: Verifier,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes were removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(SykStatus);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        set_error(e.to_string());
        Fail(SykStatus::from(&e))
    }
}

fn fail(status: SykStatus, msg: &str) -> Fail {
    set_error(msg.to_string());
    Fail(status)
}

/// Clears the thread's error, runs `f`, and converts panics to a status.
fn guard(f: impl FnOnce() -> Result<SykStatus, Fail>) -> SykStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Fail(s))) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("internal panic: {msg}"));
            SykStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(fail(SykStatus::NullArgument, &format!("{what} is NULL")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(SykStatus::InvalidUtf8, &format!("{what} is not UTF-8")))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(fail(SykStatus::NullArgument, "output pointer is NULL"));
    }
    let c = CString::new(s).map_err(|_| fail(SykStatus::Internal, "output contains NUL"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_json(out: *mut *mut c_char, v: &serde_json::Value) -> Result<(), Fail> {
    put_string(out, v.to_string())
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, Fail> {
    Ok(s.parse::<T>()?)
}

/// Version string of the library; static, do not free.
#[no_mangle]
pub extern "C" fn syk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn syk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn syk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn syk_algebra_new(m: u32, n: u32, out: *mut *mut SykAlgebra) -> SykStatus {
    guard(|| {
        if out.is_null() {
            return Err(fail(SykStatus::NullArgument, "output pointer is NULL"));
        }
        let sig = Signature::new(m as usize, n as usize)?;
        *out = Box::into_raw(Box::new(SykAlgebra { y: Yangian::new(sig) }));
        Ok(SykStatus::Ok)
    })
}

#[no_mangle]
pub unsafe extern "C" fn syk_algebra_free(a: *mut SykAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Normal form of an element given as JSON.
#[no_mangle]
pub unsafe extern "C" fn syk_normal_form(a: *const SykAlgebra, element: *const c_char, out: *mut *mut c_char) -> SykStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| fail(SykStatus::NullArgument, "algebra is NULL"))?;
        let x = element_from_str(text(element, "element")?, Some(a.y.signature()))?;
        put_string(out, element_to_string(&a.y.normal_form(&x)))?;
        Ok(SykStatus::Ok)
    })
}

/// Product of two elements, in normal form.
#[no_mangle]
pub unsafe extern "C" fn syk_multiply(
    a: *const SykAlgebra,
    left: *const c_char,
    right: *const c_char,
    out: *mut *mut c_char,
) -> SykStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| fail(SykStatus::NullArgument, "algebra is NULL"))?;
        let sig = Some(a.y.signature());
        let x = element_from_str(text(left, "left")?, sig)?;
        let z = element_from_str(text(right, "right")?, sig)?;
        put_string(out, element_to_string(&a.y.multiply(&x, &z)))?;
        Ok(SykStatus::Ok)
    })
}

/// Builds the Gauss blocks of `mu` (e.g. `"2,1|1"`) to order `k`.
#[no_mangle]
pub unsafe extern "C" fn syk_verifier_new(mu: *const c_char, k: u32, out: *mut *mut SykVerifier) -> SykStatus {
    guard(|| {
        if out.is_null() {
            return Err(fail(SykStatus::NullArgument, "output pointer is NULL"));
        }
        let mu: Composition = parse(text(mu, "mu")?)?;
        *out = Box::into_raw(Box::new(SykVerifier { v: Verifier::new(&mu, k as usize)? }));
        Ok(SykStatus::Ok)
    })
}

#[no_mangle]
pub unsafe extern "C" fn syk_verifier_free(v: *mut SykVerifier) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Runs a suite (`levi`, `even`, `mn11`, `m2n1`, `thm73`, `lemma72`, `all`).
/// Returns `CheckFailed` with the report when any check fails.
#[no_mangle]
pub unsafe extern "C" fn syk_verifier_run(v: *const SykVerifier, suite: *const c_char, report: *mut *mut c_char) -> SykStatus {
    guard(|| {
        let v = v.as_ref().ok_or_else(|| fail(SykStatus::NullArgument, "verifier is NULL"))?;
        let suite: Suite = parse(text(suite, "suite")?)?;
        let rep = v.v.run(suite)?;
        put_json(report, &serde_json::to_value(&rep).expect("report serializes"))?;
        Ok(if rep.ok() { SykStatus::Ok } else { SykStatus::CheckFailed })
    })
}

/// Gauss blocks of `mu` as JSON.
#[no_mangle]
pub unsafe extern "C" fn syk_gauss(mu: *const c_char, k: u32, out: *mut *mut c_char) -> SykStatus {
    guard(|| {
        let mu: Composition = parse(text(mu, "mu")?)?;
        put_json(out, &api::gauss(&mu, k as usize)?)?;
        Ok(SykStatus::Ok)
    })
}

/// Applies `rho`, `omega`, `phi`, `psi` or `zeta` (with `shift` for the
/// last two) on Y(gl(m|n)) truncated at `k`. `expr` is `t12`, `t12^(2)`
/// or element/series JSON.
#[no_mangle]
pub unsafe extern "C" fn syk_map(
    name: *const c_char,
    shift: u32,
    m: u32,
    n: u32,
    k: u32,
    expr: *const c_char,
    out: *mut *mut c_char,
) -> SykStatus {
    guard(|| {
        let kind = MapKind::parse(text(name, "name")?, shift as usize)?;
        let sig = Signature::new(m as usize, n as usize)?;
        put_json(out, &api::map(kind, sig, k as usize, text(expr, "expr")?)?)?;
        Ok(SykStatus::Ok)
    })
}

/// PBW window summary `{count, rank, span_targets, span_failures, ...}`.
/// `family` is `full`, `D-only`, `E-only`, `F-only` or `t-gens`; `check`
/// is `rank`, `span` or `both`.
#[no_mangle]
pub unsafe extern "C" fn syk_pbw(
    mu: *const c_char,
    deg: u32,
    len: u32,
    k: u32,
    family: *const c_char,
    check: *const c_char,
    out: *mut *mut c_char,
) -> SykStatus {
    guard(|| {
        let mu: Composition = parse(text(mu, "mu")?)?;
        let family: Family = parse(text(family, "family")?)?;
        let check: PbwCheck = parse(text(check, "check")?)?;
        let s = api::pbw(&mu, deg as usize, len as usize, k as usize, family, check)?;
        put_json(out, &serde_json::to_value(&s).expect("summary serializes"))?;
        Ok(if s.ok() { SykStatus::Ok } else { SykStatus::CheckFailed })
    })
}

/// Graded bracket checks up to graded degree `k_max`.
#[no_mangle]
pub unsafe extern "C" fn syk_graded_check(mu: *const c_char, k_max: u32, out: *mut *mut c_char) -> SykStatus {
    guard(|| {
        let mu: Composition = parse(text(mu, "mu")?)?;
        let (v, ok) = api::gr_check(&mu, k_max as usize)?;
        put_json(out, &v)?;
        Ok(if ok { SykStatus::Ok } else { SykStatus::CheckFailed })
    })
}
