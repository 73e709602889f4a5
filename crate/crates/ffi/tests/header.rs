//! The checked-in header must match the exported symbols, and a C program
//! built against it must run.

use std::path::{Path, PathBuf};
use std::process::Command;

const FUNCTIONS: &[&str] = &[
    "trdeg_last_error_message",
    "trdeg_string_free",
    "trdeg_ring_parse",
    "trdeg_ring_free",
    "trdeg_ring_to_string",
    "trdeg_ring_known_dim",
    "trdeg_search",
    "trdeg_pid_pair",
    "trdeg_certificate_free",
    "trdeg_certificate_poly",
    "trdeg_certificate_to_json",
    "trdeg_certificate_from_json",
    "trdeg_certificate_verify",
    "trdeg_cl_search_json",
];

fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_every_function() {
    let header = std::fs::read_to_string(crate_dir().join("include/trdeg.h")).unwrap();
    for f in FUNCTIONS {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(header.contains("TRDEG_STATUS_NOT_FOUND = 1"));
    assert!(header.contains("typedef struct TrdegRing TrdegRing;"));
}

fn static_lib() -> Option<PathBuf> {
    let profile_dir = std::env::current_exe().ok()?.parent()?.parent()?.to_path_buf();
    let lib = profile_dir.join("libtrdeg_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_and_runs() {
    let Some(lib) = static_lib() else {
        panic!("static library not built next to the test binary");
    };
    let out_dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let exe = out_dir.join("trdeg_smoke");
    let status = Command::new("cc")
        .arg(crate_dir().join("tests/smoke.c"))
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler on PATH");
    assert!(status.success());
    let run = Command::new(&exe).output().unwrap();
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(run.status.success(), "{stdout}\n{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(stdout.trim(), "x2^2 - 27*x1\nparse error: 2");
}
