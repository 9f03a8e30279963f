//! C ABI over `qschur`.
//!
//! Every fallible call returns a [`QschurStatus`]; on anything but `OK` the
//! message is available from [`qschur_last_error`] on the same thread.
//! Polynomials are opaque [`QschurPoly`] handles released with
//! [`qschur_poly_free`]. Strings handed out by the library are released with
//! [`qschur_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qschur::bijection::{apply_motions_strict, decode, Encoding};
use qschur::partitions::{is_schur_admissible, Partition};
use qschur::qcoeff::gauss_binomial;
use qschur::schur_sums::{lhs_schur, rhs_schur, verify, IdentityId, Params};
use qschur::{Error, QPoly};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QschurStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// Partition breaks the gap conditions.
    NotAdmissible = 3,
    DecodeFailed = 4,
    /// Verification ran and the two sides differ.
    Discrepancy = 5,
    Panic = 6,
}

/// Opaque polynomial handle.
pub struct QschurPoly {
    inner: QPoly,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let mut bytes = msg.into();
    bytes.retain(|&b| b != 0);
    let c = CString::new(bytes).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> QschurStatus {
    match e {
        Error::NotAdmissible(_) => QschurStatus::NotAdmissible,
        Error::DecodeFailed(_) => QschurStatus::DecodeFailed,
        _ => QschurStatus::InvalidArgument,
    }
}

/// Runs `f`, turning errors and panics into a status plus the thread's last
/// error message.
fn guard<F>(f: F) -> QschurStatus
where
    F: FnOnce() -> Result<QschurStatus, (QschurStatus, String)>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            QschurStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (QschurStatus, String) {
    (status_of(&e), e.to_string())
}

fn invalid(msg: impl Into<String>) -> (QschurStatus, String) {
    (QschurStatus::InvalidArgument, msg.into())
}

fn null(what: &str) -> (QschurStatus, String) {
    (QschurStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (QschurStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(format!("{what} is not UTF-8")))
}

unsafe fn poly_ref<'a>(
    p: *const QschurPoly,
    what: &str,
) -> Result<&'a QPoly, (QschurStatus, String)> {
    p.as_ref().map(|h| &h.inner).ok_or_else(|| null(what))
}

unsafe fn put_poly(
    out: *mut *mut QschurPoly,
    p: QPoly,
) -> Result<QschurStatus, (QschurStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(QschurPoly { inner: p }));
    Ok(QschurStatus::Ok)
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (QschurStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s)
        .map_err(|_| invalid("output contains a nul byte"))?
        .into_raw();
    Ok(())
}

/// Message of the last failed call on this thread. Empty if none. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qschur_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn qschur_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Left side of the polynomial identity at `n`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qschur_lhs(n: i64, out: *mut *mut QschurPoly) -> QschurStatus {
    guard(|| put_poly(out, lhs_schur(n)))
}

/// Right side of the polynomial identity at `n`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qschur_rhs(n: i64, out: *mut *mut QschurPoly) -> QschurStatus {
    guard(|| put_poly(out, rhs_schur(n)))
}

/// Gaussian binomial `[top, bottom]` in the base `q^modulus`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qschur_gauss_binomial(
    top: i64,
    bottom: i64,
    modulus: u32,
    out: *mut *mut QschurPoly,
) -> QschurStatus {
    guard(|| {
        if modulus == 0 {
            return Err(lib_err(Error::ZeroModulus));
        }
        put_poly(out, (*gauss_binomial(top, bottom, modulus)).clone())
    })
}

/// Copies `p`.
///
/// # Safety
/// `p` must be a live handle or null; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qschur_poly_clone(
    p: *const QschurPoly,
    out: *mut *mut QschurPoly,
) -> QschurStatus {
    guard(|| {
        let p = poly_ref(p, "p")?;
        put_poly(out, p.clone())
    })
}

unsafe fn binary(
    a: *const QschurPoly,
    b: *const QschurPoly,
    out: *mut *mut QschurPoly,
    op: fn(&QPoly, &QPoly) -> QPoly,
) -> QschurStatus {
    guard(|| {
        let (a, b) = (poly_ref(a, "a")?, poly_ref(b, "b")?);
        put_poly(out, op(a, b))
    })
}

/// `out = a + b`.
///
/// # Safety
/// `a`, `b` live handles; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qschur_poly_add(
    a: *const QschurPoly,
    b: *const QschurPoly,
    out: *mut *mut QschurPoly,
) -> QschurStatus {
    binary(a, b, out, |a, b| a + b)
}

/// `out = a - b`.
///
/// # Safety
/// As [`qschur_poly_add`].
#[no_mangle]
pub unsafe extern "C" fn qschur_poly_sub(
    a: *const QschurPoly,
    b: *const QschurPoly,
    out: *mut *mut QschurPoly,
) -> QschurStatus {
    binary(a, b, out, |a, b| a - b)
}

/// `out = a * b`.
///
/// # Safety
/// As [`qschur_poly_add`].
#[no_mangle]
pub unsafe extern "C" fn qschur_poly_mul(
    a: *const QschurPoly,
    b: *const QschurPoly,
    out: *mut *mut QschurPoly,
) -> QschurStatus {
    binary(a, b, out, |a, b| a * b)
}

/// Writes whether `a == b` to `out`.
///
/// # Safety
/// `a`, `b` live handles; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn qschur_poly_equal(
    a: *const QschurPoly,
    b: *const QschurPoly,
    out: *mut bool,
) -> QschurStatus {
    guard(|| {
        let (a, b) = (poly_ref(a, "a")?, poly_ref(b, "b")?);
        if out.is_null() {
            return Err(null("out"));
        }
        *out = a == b;
        Ok(QschurStatus::Ok)
    })
}

/// Coefficient of `q^(half_exp/2)` as a decimal string.
///
/// # Safety
/// `p` a live handle; `out` valid for a pointer write. Free the string with
/// [`qschur_string_free`].
#[no_mangle]
pub unsafe extern "C" fn qschur_poly_coefficient(
    p: *const QschurPoly,
    half_exp: i64,
    out: *mut *mut c_char,
) -> QschurStatus {
    guard(|| {
        let p = poly_ref(p, "p")?;
        put_string(out, p.coefficient(half_exp).to_string())?;
        Ok(QschurStatus::Ok)
    })
}

/// Serializes as `[[half_exp, "coefficient"], ...]`.
///
/// # Safety
/// As [`qschur_poly_coefficient`].
#[no_mangle]
pub unsafe extern "C" fn qschur_poly_to_json(
    p: *const QschurPoly,
    out: *mut *mut c_char,
) -> QschurStatus {
    guard(|| {
        let p = poly_ref(p, "p")?;
        put_string(
            out,
            serde_json::to_string(p).map_err(|e| invalid(e.to_string()))?,
        )?;
        Ok(QschurStatus::Ok)
    })
}

/// Human-readable form, e.g. `1 + q + q^2`.
///
/// # Safety
/// As [`qschur_poly_coefficient`].
#[no_mangle]
pub unsafe extern "C" fn qschur_poly_to_string(
    p: *const QschurPoly,
    out: *mut *mut c_char,
) -> QschurStatus {
    guard(|| {
        let p = poly_ref(p, "p")?;
        put_string(out, p.to_string())?;
        Ok(QschurStatus::Ok)
    })
}

/// Parses the JSON form produced by [`qschur_poly_to_json`].
///
/// # Safety
/// `json` a nul-terminated string; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qschur_poly_from_json(
    json: *const c_char,
    out: *mut *mut QschurPoly,
) -> QschurStatus {
    guard(|| {
        let s = read_str(json, "json")?;
        let p: QPoly = serde_json::from_str(s).map_err(|e| invalid(e.to_string()))?;
        put_poly(out, p)
    })
}

/// # Safety
/// `p` must come from this library and not be freed twice. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn qschur_poly_free(p: *mut QschurPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `s` must come from this library and not be freed twice. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn qschur_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Verifies `identity` (e.g. `"SCHUR_POLY"`) at `params_json`
/// (e.g. `{"N":3}`) and writes the report JSON. Returns `OK` when verified
/// and `DISCREPANCY` when the sides differ; the report is written either way.
///
/// # Safety
/// `identity`, `params_json` nul-terminated strings; `out_report` valid for a
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn qschur_verify_json(
    identity: *const c_char,
    params_json: *const c_char,
    out_report: *mut *mut c_char,
) -> QschurStatus {
    guard(|| {
        let id: IdentityId = read_str(identity, "identity")?.parse().map_err(lib_err)?;
        let params: Params = serde_json::from_str(read_str(params_json, "params_json")?)
            .map_err(|e| invalid(format!("params: {e}")))?;
        let report = verify(id, &params).map_err(lib_err)?;
        let json = serde_json::to_string(&report).map_err(|e| invalid(e.to_string()))?;
        put_string(out_report, json)?;
        Ok(if report.verified() {
            QschurStatus::Ok
        } else {
            QschurStatus::Discrepancy
        })
    })
}

/// Writes whether the comma-separated partition satisfies the gap conditions.
///
/// # Safety
/// `partition` a nul-terminated string; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn qschur_is_admissible(
    partition: *const c_char,
    out: *mut bool,
) -> QschurStatus {
    guard(|| {
        let p: Partition = read_str(partition, "partition")?.parse().map_err(lib_err)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = is_schur_admissible(&p);
        Ok(QschurStatus::Ok)
    })
}

/// Decodes a partition into `{"n1","n2","m","r","rho2","rho1"}` JSON.
///
/// # Safety
/// `partition` a nul-terminated string; `out_json` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qschur_bijection_decode(
    partition: *const c_char,
    out_json: *mut *mut c_char,
) -> QschurStatus {
    guard(|| {
        let p: Partition = read_str(partition, "partition")?.parse().map_err(lib_err)?;
        let e = decode(&p).map_err(lib_err)?;
        put_string(
            out_json,
            serde_json::to_string(&e).map_err(|e| invalid(e.to_string()))?,
        )?;
        Ok(QschurStatus::Ok)
    })
}

/// Inverse of [`qschur_bijection_decode`]: writes the comma-separated
/// partition.
///
/// # Safety
/// `encoding_json` a nul-terminated string; `out_partition` valid for a
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn qschur_bijection_encode(
    encoding_json: *const c_char,
    out_partition: *mut *mut c_char,
) -> QschurStatus {
    guard(|| {
        let e: Encoding = serde_json::from_str(read_str(encoding_json, "encoding_json")?)
            .map_err(|e| invalid(format!("encoding: {e}")))?;
        let p = apply_motions_strict(e.config, &e.motions).map_err(lib_err)?;
        put_string(out_partition, p.to_string())?;
        Ok(QschurStatus::Ok)
    })
}
