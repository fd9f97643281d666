use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use serde_json::Value;
use syk_ffi::*;

fn take(s: *mut c_char) -> Value {
    assert!(!s.is_null());
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { syk_string_free(s) };
    v
}

fn last_error() -> String {
    let p = syk_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn algebra_round_trip() {
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { syk_algebra_new(1, 1, &mut a) }, SykStatus::Ok);
    let x = c(r#"{"terms":[{"coeff":"1","word":[[2,1,1],[1,2,1]]}]}"#);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { syk_normal_form(a, x.as_ptr(), &mut out) }, SykStatus::Ok);
    assert_eq!(take(out)["terms"].as_array().unwrap().len(), 3);

    // t12 t12 = 0
    let t12 = c(r#"{"terms":[{"coeff":"1","word":[[1,2,1]]}]}"#);
    assert_eq!(unsafe { syk_multiply(a, t12.as_ptr(), t12.as_ptr(), &mut out) }, SykStatus::Ok);
    assert_eq!(take(out), serde_json::json!({"terms": []}));

    let bad = c("{");
    assert_eq!(unsafe { syk_normal_form(a, bad.as_ptr(), &mut out) }, SykStatus::Parse);
    assert!(last_error().contains("parse"));
    unsafe { syk_algebra_free(a) };
}

#[test]
fn null_and_shape_errors() {
    assert_eq!(unsafe { syk_algebra_new(0, 0, &mut ptr::null_mut()) }, SykStatus::OutOfRange);
    assert_eq!(unsafe { syk_algebra_new(1, 1, ptr::null_mut()) }, SykStatus::NullArgument);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { syk_normal_form(ptr::null(), c("{}").as_ptr(), &mut out) }, SykStatus::NullArgument);

    let mut v = ptr::null_mut();
    assert_eq!(unsafe { syk_verifier_new(c("1|1").as_ptr(), 2, &mut v) }, SykStatus::Ok);
    assert_eq!(unsafe { syk_verifier_run(v, c("lemma72").as_ptr(), &mut out) }, SykStatus::WrongShape);
    assert!(last_error().contains("lemma72"));
    assert_eq!(unsafe { syk_verifier_run(v, c("bogus").as_ptr(), &mut out) }, SykStatus::Parse);
    unsafe { syk_verifier_free(v) };
    // a successful call clears the message
    assert_eq!(unsafe { syk_gauss(c("1|1").as_ptr(), 1, &mut out) }, SykStatus::Ok);
    take(out);
    assert!(syk_last_error().is_null());
}

#[test]
fn verify_and_pbw() {
    let mut v = ptr::null_mut();
    assert_eq!(unsafe { syk_verifier_new(c("1,1|1").as_ptr(), 2, &mut v) }, SykStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { syk_verifier_run(v, c("thm73").as_ptr(), &mut out) }, SykStatus::Ok);
    let rep = take(out);
    assert_eq!(rep["failed"], 0);
    assert!(rep["total"].as_u64().unwrap() > 0);
    unsafe { syk_verifier_free(v) };

    let s = unsafe { syk_pbw(c("1|1").as_ptr(), 0, 1, 1, c("full").as_ptr(), c("both").as_ptr(), &mut out) };
    assert_eq!(s, SykStatus::Ok);
    let p = take(out);
    assert_eq!((p["count"].as_u64(), p["rank"].as_u64()), (Some(4), Some(4)));

    assert_eq!(unsafe { syk_graded_check(c("1|1").as_ptr(), 1, &mut out) }, SykStatus::Ok);
    assert_eq!(take(out)["failed"], 0);
}

#[test]
fn map_zeta() {
    let mut out = ptr::null_mut();
    let s = unsafe { syk_map(c("zeta").as_ptr(), 0, 1, 1, 2, c("t11").as_ptr(), &mut out) };
    assert_eq!(s, SykStatus::Ok);
    assert_eq!(take(out)["target"], "(1|1)");
    let s = unsafe { syk_map(c("psi").as_ptr(), 1, 1, 1, 2, c("t12^(1)").as_ptr(), &mut out) };
    assert_eq!(s, SykStatus::Ok);
    assert_eq!(take(out)["target"], "(2|1)");
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(syk_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/syk.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["syk_normal_form", "syk_verifier_run", "syk_string_free", "SYK_STATUS_CHECK_FAILED"] {
        assert!(text.contains(f), "{f} missing from the header");
    }
    let status = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
}
