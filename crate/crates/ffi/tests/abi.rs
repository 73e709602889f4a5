use std::ffi::{c_char, CStr, CString};
use std::ptr;

use trdeg_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    trdeg_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(trdeg_last_error_message()).to_str().unwrap().to_owned()
}

unsafe fn ring(text: &str) -> *mut TrdegRing {
    let mut r = ptr::null_mut();
    assert_eq!(trdeg_ring_parse(cstr(text).as_ptr(), &mut r), TrdegStatus::Ok);
    r
}

unsafe fn search(coeffs: &str, algebra: &str, elems: &[&str], ord: &str, d: u32) -> (TrdegStatus, *mut TrdegCertificate) {
    let (c, a) = (ring(coeffs), ring(algebra));
    let owned: Vec<CString> = elems.iter().map(|e| cstr(e)).collect();
    let ptrs: Vec<*const c_char> = owned.iter().map(|e| e.as_ptr()).collect();
    let mut cert = ptr::null_mut();
    let status = trdeg_search(c, a, ptrs.as_ptr(), ptrs.len(), cstr(ord).as_ptr(), d, &mut cert);
    trdeg_ring_free(c);
    trdeg_ring_free(a);
    (status, cert)
}

#[test]
fn integer_pair_relation() {
    unsafe {
        let (status, cert) = search("ZZ", "ZZ", &["12", "18"], "lex:x1>x2", 3);
        assert_eq!(status, TrdegStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(trdeg_certificate_poly(cert, &mut s), TrdegStatus::Ok);
        assert_eq!(take(s), "x2^2 - 27*x1");
        assert_eq!(trdeg_certificate_verify(cert), TrdegStatus::Ok);
        trdeg_certificate_free(cert);
    }
}

#[test]
fn json_round_trip_and_tampering() {
    unsafe {
        let (_, cert) = search("Zmod(6)", "Zmod(6)", &["5"], "lex", 3);
        let mut json = ptr::null_mut();
        assert_eq!(trdeg_certificate_to_json(cert, &mut json), TrdegStatus::Ok);
        let json = take(json);
        trdeg_certificate_free(cert);

        let mut back = ptr::null_mut();
        assert_eq!(trdeg_certificate_from_json(cstr(&json).as_ptr(), &mut back), TrdegStatus::Ok);
        assert_eq!(trdeg_certificate_verify(back), TrdegStatus::Ok);
        trdeg_certificate_free(back);

        let mut v: serde_json::Value = serde_json::from_str(&json).unwrap();
        v["elements"][0] = "2".into();
        let mut bad = ptr::null_mut();
        let status = trdeg_certificate_from_json(cstr(&v.to_string()).as_ptr(), &mut bad);
        assert_eq!(status, TrdegStatus::Rejected);
        assert!(bad.is_null());
        assert!(!last_error().is_empty());
    }
}

#[test]
fn negative_search_is_not_found() {
    unsafe {
        let (status, cert) = search("ZZ", "Poly(ZZ; x,y)", &["x", "y"], "lex", 3);
        assert_eq!(status, TrdegStatus::NotFound);
        assert!(cert.is_null());
        assert!(last_error().contains("degree <= 3"));
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(trdeg_ring_parse(cstr("Poly(ZZ; x").as_ptr(), &mut r), TrdegStatus::Parse);
        assert!(r.is_null());
        assert_eq!(trdeg_ring_parse(ptr::null(), &mut r), TrdegStatus::NullPointer);
        assert_eq!(trdeg_ring_parse(cstr("ZZ").as_ptr(), ptr::null_mut()), TrdegStatus::NullPointer);

        let (status, _) = search("Poly(ZZ; x)", "Poly(ZZ; x)", &["x"], "lex", 2);
        assert_eq!(status, TrdegStatus::Unsupported);

        let (status, _) = search("ZZ", "Poly(ZZ; x)", &["x"; 12], "lex", 12);
        assert_eq!(status, TrdegStatus::ResourceExceeded);

        let (status, _) = search("ZZ", "ZZ", &["1/2"], "lex", 2);
        assert_ne!(status, TrdegStatus::Ok);

        assert_eq!(trdeg_certificate_verify(ptr::null()), TrdegStatus::NullPointer);
        trdeg_certificate_free(ptr::null_mut());
        trdeg_ring_free(ptr::null_mut());
        trdeg_string_free(ptr::null_mut());
    }
}

#[test]
fn dimensions_and_printing() {
    unsafe {
        for (text, dim) in [("ZZ", 1), ("QQ", 0), ("Poly(ZZ; x,y)", 3), ("Quot(Poly(QQ; x,y,z); [x*z, y*z])", 2)] {
            let r = ring(text);
            let mut d = -1;
            assert_eq!(trdeg_ring_known_dim(r, &mut d), TrdegStatus::Ok);
            assert_eq!(d, dim, "{text}");
            trdeg_ring_free(r);
        }
        let r = ring("Poly( GF(5) ;x, y )");
        let mut s = ptr::null_mut();
        assert_eq!(trdeg_ring_to_string(r, &mut s), TrdegStatus::Ok);
        assert_eq!(take(s), "Poly(GF(5); x,y)");
        trdeg_ring_free(r);
    }
}

#[test]
fn pid_pair_and_cl() {
    unsafe {
        let mut cert = ptr::null_mut();
        assert_eq!(trdeg_pid_pair(cstr("12").as_ptr(), cstr("18").as_ptr(), &mut cert), TrdegStatus::Ok);
        let mut s = ptr::null_mut();
        trdeg_certificate_poly(cert, &mut s);
        assert_eq!(take(s), "x2^2 - 27*x1");
        trdeg_certificate_free(cert);
        assert_eq!(trdeg_pid_pair(cstr("x").as_ptr(), cstr("18").as_ptr(), &mut cert), TrdegStatus::Parse);

        let r = ring("Zmod(12)");
        let elems = [cstr("2")];
        let ptrs: Vec<*const c_char> = elems.iter().map(|e| e.as_ptr()).collect();
        let mut json = ptr::null_mut();
        assert_eq!(trdeg_cl_search_json(r, ptrs.as_ptr(), 1, 4, &mut json), TrdegStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["exponents"], serde_json::json!([2]));
        assert_eq!(trdeg_cl_search_json(r, ptrs.as_ptr(), 1, 1, &mut json), TrdegStatus::NotFound);
        assert!(json.is_null());
        trdeg_ring_free(r);
    }
}
