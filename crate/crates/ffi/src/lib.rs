//! C ABI over the `trdeg` library.
//!
//! Every fallible function returns a [`TrdegStatus`]; on failure the message
//! is available from [`trdeg_last_error_message`] on the same thread. Objects
//! are handed out as opaque pointers and must be released with the matching
//! `*_free` function. Strings returned by the library are owned by the caller
//! and released with [`trdeg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use trdeg::{
    cl_search, known_dim, pid_pair_certificate, search_submonic_relation, AlgebraConfig, ClOutcome, DependenceVerdict,
    Error, MonomialOrdering, Ring, SubmonicCertificate,
};

/// Result codes shared by all functions.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrdegStatus {
    Ok = 0,
    /// The search finished without finding anything within its bounds.
    NotFound = 1,
    Parse = 2,
    Unsupported = 3,
    ResourceExceeded = 4,
    InvalidArgument = 5,
    Internal = 6,
    NullPointer = 7,
    /// A certificate did not pass verification.
    Rejected = 8,
}

/// A parsed coefficient ring or algebra.
pub struct TrdegRing {
    ring: Ring,
}

/// A verified submonic dependence certificate.
pub struct TrdegCertificate {
    cert: SubmonicCertificate,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior nul"));
}

fn status_of(e: &Error) -> TrdegStatus {
    match e {
        Error::Syntax { .. }
        | Error::UnknownVariable(_)
        | Error::CoefficientNotInRing(_)
        | Error::InvalidRing(_)
        | Error::InvalidOrdering(_) => TrdegStatus::Parse,
        Error::Unsupported(_) | Error::NonFieldCoefficients(_) => TrdegStatus::Unsupported,
        Error::ResourceExceeded { .. } => TrdegStatus::ResourceExceeded,
        Error::Internal(_) => TrdegStatus::Internal,
        _ => TrdegStatus::InvalidArgument,
    }
}

struct Fail(TrdegStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Run `f`, translating errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<TrdegStatus, Fail>) -> TrdegStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside the library");
            TrdegStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(TrdegStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(TrdegStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(TrdegStatus::NullPointer, format!("{what} is null")))
}

fn out_ptr<T>(p: *mut T, what: &str) -> Result<(), Fail> {
    if p.is_null() {
        Err(Fail(TrdegStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

unsafe fn str_array(items: *const *const c_char, len: usize) -> Result<Vec<String>, Fail> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if items.is_null() {
        return Err(Fail(TrdegStatus::NullPointer, "element array is null".into()));
    }
    std::slice::from_raw_parts(items, len)
        .iter()
        .enumerate()
        .map(|(i, &p)| str_arg(p, &format!("element {i}")).map(str::to_owned))
        .collect()
}

/// Message describing the last failure on this thread. The pointer stays
/// valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn trdeg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by the library.
///
/// # Safety
/// `s` must be null or a string obtained from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn trdeg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a ring such as `ZZ`, `Zmod(6)` or `Poly(QQ; x,y)`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trdeg_ring_parse(text: *const c_char, out: *mut *mut TrdegRing) -> TrdegStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let ring: Ring = str_arg(text, "text")?.parse()?;
        *out = Box::into_raw(Box::new(TrdegRing { ring }));
        Ok(TrdegStatus::Ok)
    })
}

/// # Safety
/// `ring` must be null or a handle from [`trdeg_ring_parse`], freed once.
#[no_mangle]
pub unsafe extern "C" fn trdeg_ring_free(ring: *mut TrdegRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Canonical printed form of a ring.
///
/// # Safety
/// `ring` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn trdeg_ring_to_string(ring: *const TrdegRing, out: *mut *mut c_char) -> TrdegStatus {
    guard(|| {
        out_ptr(out, "out")?;
        *out = c_string(ref_arg(ring, "ring")?.ring.to_string());
        Ok(TrdegStatus::Ok)
    })
}

/// Krull dimension of a ring whose dimension is known in closed form.
///
/// # Safety
/// `ring` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trdeg_ring_known_dim(ring: *const TrdegRing, out: *mut i64) -> TrdegStatus {
    guard(|| {
        out_ptr(out, "out")?;
        *out = known_dim(&ref_arg(ring, "ring")?.ring)?;
        Ok(TrdegStatus::Ok)
    })
}

/// Search for a submonic relation of total degree at most `max_degree`
/// among `n_elems` elements of `algebra`, viewed as a `coeffs`-algebra.
/// Returns [`TrdegStatus::NotFound`] when no relation exists within the bound.
///
/// # Safety
/// Ring handles must be live, `elems` must point to `n_elems` strings,
/// `ordering` must be a string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trdeg_search(
    coeffs: *const TrdegRing,
    algebra: *const TrdegRing,
    elems: *const *const c_char,
    n_elems: usize,
    ordering: *const c_char,
    max_degree: u32,
    out: *mut *mut TrdegCertificate,
) -> TrdegStatus {
    guard(|| {
        out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let config = AlgebraConfig::new(ref_arg(coeffs, "coeffs")?.ring.clone(), ref_arg(algebra, "algebra")?.ring.clone())?;
        let texts = str_array(elems, n_elems)?;
        let elems = config.parse_elements(&texts)?;
        let ord: MonomialOrdering = str_arg(ordering, "ordering")?.parse()?;
        match search_submonic_relation(&config, &elems, &ord, max_degree)? {
            DependenceVerdict::Dependent(cert) => {
                *out = Box::into_raw(Box::new(TrdegCertificate { cert: *cert }));
                Ok(TrdegStatus::Ok)
            }
            DependenceVerdict::NoRelationUpTo(d) => {
                Err(Fail(TrdegStatus::NotFound, format!("no submonic relation of degree <= {d}")))
            }
        }
    })
}

/// Certificate for a pair of integers given in decimal.
///
/// # Safety
/// `a` and `b` must be strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trdeg_pid_pair(a: *const c_char, b: *const c_char, out: *mut *mut TrdegCertificate) -> TrdegStatus {
    guard(|| {
        out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let parse = |p, what| -> Result<BigInt, Fail> {
            let s = str_arg(p, what)?;
            s.trim()
                .parse()
                .map_err(|_| Fail(TrdegStatus::Parse, format!("{what}: `{s}` is not an integer")))
        };
        let cert = pid_pair_certificate(&parse(a, "a")?, &parse(b, "b")?)?;
        *out = Box::into_raw(Box::new(TrdegCertificate { cert }));
        Ok(TrdegStatus::Ok)
    })
}

/// # Safety
/// `cert` must be null or a certificate handle, freed once.
#[no_mangle]
pub unsafe extern "C" fn trdeg_certificate_free(cert: *mut TrdegCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// The relation as a polynomial string.
///
/// # Safety
/// `cert` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trdeg_certificate_poly(cert: *const TrdegCertificate, out: *mut *mut c_char) -> TrdegStatus {
    guard(|| {
        out_ptr(out, "out")?;
        *out = c_string(ref_arg(cert, "cert")?.cert.poly_string());
        Ok(TrdegStatus::Ok)
    })
}

/// # Safety
/// `cert` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trdeg_certificate_to_json(cert: *const TrdegCertificate, out: *mut *mut c_char) -> TrdegStatus {
    guard(|| {
        out_ptr(out, "out")?;
        *out = c_string(ref_arg(cert, "cert")?.cert.to_json());
        Ok(TrdegStatus::Ok)
    })
}

/// Load a certificate from JSON. Loading re-checks it; a certificate that
/// does not verify is returned with [`TrdegStatus::Rejected`] and no handle.
///
/// # Safety
/// `json` must be a string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trdeg_certificate_from_json(json: *const c_char, out: *mut *mut TrdegCertificate) -> TrdegStatus {
    guard(|| {
        out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let cert = SubmonicCertificate::from_json(str_arg(json, "json")?)?;
        if let Err(why) = cert.check() {
            return Err(Fail(TrdegStatus::Rejected, why.to_string()));
        }
        *out = Box::into_raw(Box::new(TrdegCertificate { cert }));
        Ok(TrdegStatus::Ok)
    })
}

/// Re-run verification: [`TrdegStatus::Ok`] or [`TrdegStatus::Rejected`].
///
/// # Safety
/// `cert` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn trdeg_certificate_verify(cert: *const TrdegCertificate) -> TrdegStatus {
    guard(|| match ref_arg(cert, "cert")?.cert.check() {
        Ok(()) => Ok(TrdegStatus::Ok),
        Err(why) => Err(Fail(TrdegStatus::Rejected, why.to_string())),
    })
}

/// Search exponents up to `max_exp` with `prod a_i^{m_i}` in the ideal
/// generated by the `a_j * prod_{i<=j} a_i^{m_i}`; on success writes the
/// certificate as JSON.
///
/// # Safety
/// `ring` must be a live handle, `elems` must point to `n_elems` strings and
/// `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trdeg_cl_search_json(
    ring: *const TrdegRing,
    elems: *const *const c_char,
    n_elems: usize,
    max_exp: u32,
    out_json: *mut *mut c_char,
) -> TrdegStatus {
    guard(|| {
        out_ptr(out_json, "out_json")?;
        *out_json = ptr::null_mut();
        let ring = &ref_arg(ring, "ring")?.ring;
        let elems = str_array(elems, n_elems)?
            .iter()
            .map(|t| ring.parse_elem(t))
            .collect::<trdeg::Result<Vec<_>>>()?;
        match cl_search(ring, &elems, max_exp)? {
            ClOutcome::Found(cert) => {
                *out_json = c_string(cert.to_json());
                Ok(TrdegStatus::Ok)
            }
            ClOutcome::NotFoundUpTo(m) => Err(Fail(TrdegStatus::NotFound, format!("no exponents up to {m}"))),
        }
    })
}
