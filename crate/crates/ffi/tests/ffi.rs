use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use qschur_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    qschur_string_free(s);
    out
}

fn last_error() -> String {
    unsafe {
        CStr::from_ptr(qschur_last_error())
            .to_str()
            .unwrap()
            .to_owned()
    }
}

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn lhs_equals_rhs() {
    unsafe {
        for n in 0..8 {
            let (mut l, mut r) = (ptr::null_mut(), ptr::null_mut());
            assert_eq!(qschur_lhs(n, &mut l), QschurStatus::Ok);
            assert_eq!(qschur_rhs(n, &mut r), QschurStatus::Ok);
            let mut eq = false;
            assert_eq!(qschur_poly_equal(l, r, &mut eq), QschurStatus::Ok);
            assert!(eq, "N={n}");
            qschur_poly_free(l);
            qschur_poly_free(r);
        }
    }
}

#[test]
fn display_json_and_coefficients() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(qschur_lhs(2, &mut p), QschurStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(qschur_poly_to_string(p, &mut s), QschurStatus::Ok);
        assert_eq!(take(s), "1 + q + q^2 + q^3 + q^4 + 2 q^5 + q^6 + q^7");

        assert_eq!(qschur_poly_coefficient(p, 10, &mut s), QschurStatus::Ok);
        assert_eq!(take(s), "2");
        assert_eq!(qschur_poly_coefficient(p, 9, &mut s), QschurStatus::Ok);
        assert_eq!(take(s), "0");

        assert_eq!(qschur_poly_to_json(p, &mut s), QschurStatus::Ok);
        let json = take(s);
        assert!(json.starts_with(r#"[[0,"1"],[2,"1"]"#));
        let mut back = ptr::null_mut();
        let cj = c(&json);
        assert_eq!(
            qschur_poly_from_json(cj.as_ptr(), &mut back),
            QschurStatus::Ok
        );
        let mut eq = false;
        qschur_poly_equal(p, back, &mut eq);
        assert!(eq);
        qschur_poly_free(back);
        qschur_poly_free(p);
    }
}

#[test]
fn ring_operations() {
    unsafe {
        // [2,1]_q = 1 + q; squared is 1 + 2q + q^2.
        let mut b = ptr::null_mut();
        assert_eq!(qschur_gauss_binomial(2, 1, 1, &mut b), QschurStatus::Ok);
        let (mut sq, mut sum, mut diff, mut copy) = (
            ptr::null_mut(),
            ptr::null_mut(),
            ptr::null_mut(),
            ptr::null_mut(),
        );
        assert_eq!(qschur_poly_mul(b, b, &mut sq), QschurStatus::Ok);
        assert_eq!(qschur_poly_add(b, b, &mut sum), QschurStatus::Ok);
        assert_eq!(qschur_poly_sub(sq, sq, &mut diff), QschurStatus::Ok);
        assert_eq!(qschur_poly_clone(sum, &mut copy), QschurStatus::Ok);
        let mut s = ptr::null_mut();
        qschur_poly_to_string(sq, &mut s);
        assert_eq!(take(s), "1 + 2 q + q^2");
        qschur_poly_to_string(copy, &mut s);
        assert_eq!(take(s), "2 + 2 q");
        qschur_poly_to_string(diff, &mut s);
        assert_eq!(take(s), "0");
        for p in [b, sq, sum, diff, copy] {
            qschur_poly_free(p);
        }
    }
}

#[test]
fn errors_and_null_pointers() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(
            qschur_gauss_binomial(3, 1, 0, &mut p),
            QschurStatus::InvalidArgument
        );
        assert!(last_error().contains("modulus"));
        assert_eq!(qschur_lhs(1, ptr::null_mut()), QschurStatus::NullPointer);
        let mut s = ptr::null_mut();
        assert_eq!(
            qschur_poly_to_json(ptr::null(), &mut s),
            QschurStatus::NullPointer
        );
        assert_eq!(last_error(), "p is null");
        let bad = c("[[0,1]]");
        assert_eq!(
            qschur_poly_from_json(bad.as_ptr(), &mut p),
            QschurStatus::InvalidArgument
        );
        qschur_poly_free(ptr::null_mut());
        qschur_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_reports() {
    unsafe {
        let mut out = ptr::null_mut();
        let (id, params) = (c("SCHUR_POLY"), c(r#"{"N":3}"#));
        assert_eq!(
            qschur_verify_json(id.as_ptr(), params.as_ptr(), &mut out),
            QschurStatus::Ok
        );
        let report: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(report["status"], "verified");
        assert_eq!(report["params"]["N"], 3);

        let unknown = c("NOT_AN_IDENTITY");
        assert_eq!(
            qschur_verify_json(unknown.as_ptr(), params.as_ptr(), &mut out),
            QschurStatus::InvalidArgument
        );
        let garbage = c("{N:");
        assert_eq!(
            qschur_verify_json(id.as_ptr(), garbage.as_ptr(), &mut out),
            QschurStatus::InvalidArgument
        );
    }
}

#[test]
fn partitions_and_bijection() {
    unsafe {
        let mut ok = false;
        let good = c("1,4,8,12");
        assert_eq!(
            qschur_is_admissible(good.as_ptr(), &mut ok),
            QschurStatus::Ok
        );
        assert!(ok);
        let bad = c("3,6");
        assert_eq!(
            qschur_is_admissible(bad.as_ptr(), &mut ok),
            QschurStatus::Ok
        );
        assert!(!ok);
        let malformed = c("6,3");
        assert_eq!(
            qschur_is_admissible(malformed.as_ptr(), &mut ok),
            QschurStatus::InvalidArgument
        );

        let mut out = ptr::null_mut();
        let p = c("5,8");
        assert_eq!(
            qschur_bijection_decode(p.as_ptr(), &mut out),
            QschurStatus::Ok
        );
        let enc = take(out);
        assert_eq!(enc, r#"{"n1":0,"n2":2,"m":0,"r":[],"rho2":[1],"rho1":[]}"#);
        let ce = c(&enc);
        assert_eq!(
            qschur_bijection_encode(ce.as_ptr(), &mut out),
            QschurStatus::Ok
        );
        assert_eq!(take(out), "5,8");

        assert_eq!(
            qschur_bijection_decode(bad.as_ptr(), &mut out),
            QschurStatus::NotAdmissible
        );
        let wrong = c(r#"{"n1":0,"n2":2,"m":0,"r":[],"rho2":[1,2],"rho1":[]}"#);
        assert_eq!(
            qschur_bijection_encode(wrong.as_ptr(), &mut out),
            QschurStatus::InvalidArgument
        );
    }
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(qschur_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header =
        std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/qschur.h"))
            .unwrap();
    for name in [
        "typedef struct QschurPoly QschurPoly",
        "QSCHUR_STATUS_DISCREPANCY = 5",
        "qschur_lhs(",
        "qschur_rhs(",
        "qschur_gauss_binomial(",
        "qschur_poly_mul(",
        "qschur_poly_to_json(",
        "qschur_poly_from_json(",
        "qschur_poly_coefficient(",
        "qschur_poly_free(",
        "qschur_string_free(",
        "qschur_verify_json(",
        "qschur_is_admissible(",
        "qschur_bijection_decode(",
        "qschur_bijection_encode(",
        "qschur_last_error(",
        "qschur_version(",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "qschur.h"

int main(void) {
    QschurPoly *l = NULL, *r = NULL;
    bool eq = false;
    char *s = NULL;
    if (qschur_lhs(3, &l) != QSCHUR_STATUS_OK) return 1;
    if (qschur_rhs(3, &r) != QSCHUR_STATUS_OK) return 2;
    if (qschur_poly_equal(l, r, &eq) != QSCHUR_STATUS_OK || !eq) return 3;
    if (qschur_poly_coefficient(l, 14, &s) != QSCHUR_STATUS_OK) return 4;
    if (strcmp(s, "3") != 0) return 5;
    qschur_string_free(s);
    if (qschur_bijection_decode("3,6", &s) != QSCHUR_STATUS_NOT_ADMISSIBLE) return 6;
    if (strlen(qschur_last_error()) == 0) return 7;
    qschur_poly_free(l);
    qschur_poly_free(r);
    printf("ok %s\n", qschur_version());
    return 0;
}
"#;

/// Compiles a C client against the header and the static library.
#[test]
fn c_client_links_and_runs() {
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libqschur_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if !lib.exists() || Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("client.c");
    let bin = dir.path().join("client");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C client failed to build");
    let out = Command::new(&bin).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        format!("ok {}\n", env!("CARGO_PKG_VERSION"))
    );
}
