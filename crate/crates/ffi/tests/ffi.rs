use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use rbd_ffi::*;

fn parse(text: &str) -> *mut RbdDiagram {
    let text = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { rbd_diagram_parse(text.as_ptr(), &mut out, ptr::null_mut()) };
    assert_eq!(status, RbdStatus::Ok);
    out
}

fn take_string(s: *mut c_char) -> String {
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { rbd_string_free(s) };
    owned
}

fn last_error() -> String {
    let p = rbd_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn parse_render_and_errors() {
    let d = parse("A1 * A2 + A3");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { rbd_diagram_render(d, &mut s) }, RbdStatus::Ok);
    assert_eq!(take_string(s), "A1 * A2 + A3");

    let bad = CString::new("A1 * * A2").unwrap();
    let mut out = ptr::null_mut();
    let mut pos = 0usize;
    assert_eq!(
        unsafe { rbd_diagram_parse(bad.as_ptr(), &mut out, &mut pos) },
        RbdStatus::ParseError
    );
    assert_eq!(pos, 5);
    assert!(out.is_null());
    assert!(last_error().contains("unexpected token"));

    assert_eq!(
        unsafe { rbd_diagram_parse(ptr::null(), &mut out, ptr::null_mut()) },
        RbdStatus::NullPointer
    );
    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { rbd_diagram_parse(invalid.as_ptr().cast(), &mut out, ptr::null_mut()) },
        RbdStatus::InvalidUtf8
    );
    unsafe { rbd_diagram_free(d) };
    unsafe { rbd_diagram_free(ptr::null_mut()) };
}

#[test]
fn evaluate_and_tables() {
    let d = parse("A1 * A2");
    let mut bit = 9u8;
    assert_eq!(unsafe { rbd_diagram_evaluate(d, [1u8, 1].as_ptr(), 2, &mut bit) }, RbdStatus::Ok);
    assert_eq!(bit, 1);
    assert_eq!(unsafe { rbd_diagram_evaluate(d, [1u8, 0].as_ptr(), 2, &mut bit) }, RbdStatus::Ok);
    assert_eq!(bit, 0);
    assert_eq!(
        unsafe { rbd_diagram_evaluate(d, [1u8].as_ptr(), 1, &mut bit) },
        RbdStatus::InvalidArgument
    );
    let mut n = 0usize;
    assert_eq!(unsafe { rbd_diagram_component_count(d, &mut n) }, RbdStatus::Ok);
    assert_eq!(n, 2);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { rbd_diagram_truth_table(d, &mut s) }, RbdStatus::Ok);
    assert_eq!(take_string(s), "0001");
    assert_eq!(unsafe { rbd_diagram_canonical(d, &mut s) }, RbdStatus::Ok);
    assert_eq!(take_string(s), "root 2\n2 1 0 3\n3 2 0 1\n");
    unsafe { rbd_diagram_free(d) };
}

#[test]
fn equality() {
    let (a, b, c) = (parse("A1*(A2+A3)"), parse("A1*A2 + A1*A3"), parse("A1 + A2"));
    let mut eq = false;
    assert_eq!(unsafe { rbd_diagram_equal(a, b, &mut eq) }, RbdStatus::Ok);
    assert!(eq);
    assert_eq!(unsafe { rbd_diagram_equal(a, c, &mut eq) }, RbdStatus::Ok);
    assert!(!eq);
    assert_eq!(unsafe { rbd_diagram_equal(a, ptr::null(), &mut eq) }, RbdStatus::NullPointer);
    unsafe {
        rbd_diagram_free(a);
        rbd_diagram_free(b);
        rbd_diagram_free(c);
    }
}

#[test]
fn reliability() {
    let d = parse("A1 * A1 + A2 * ~A1");
    let p = rbd_assignment_new();
    assert_eq!(unsafe { rbd_assignment_set(p, 1, 0.9) }, RbdStatus::Ok);
    let mut r = 0.0;
    assert_eq!(
        unsafe { rbd_reliability(d, p, RbdMethod::Exact, &mut r) },
        RbdStatus::MissingProbability
    );
    assert_eq!(unsafe { rbd_assignment_set(p, 2, 0.5) }, RbdStatus::Ok);
    assert_eq!(unsafe { rbd_assignment_set(p, 2, 1.5) }, RbdStatus::InvalidArgument);
    assert_eq!(unsafe { rbd_assignment_set(p, 0, 0.5) }, RbdStatus::InvalidArgument);
    assert_eq!(unsafe { rbd_reliability(d, p, RbdMethod::Exact, &mut r) }, RbdStatus::Ok);
    let mut brute = 0.0;
    assert_eq!(unsafe { rbd_reliability(d, p, RbdMethod::BruteForce, &mut brute) }, RbdStatus::Ok);
    assert!((r - 0.95).abs() < 1e-12);
    assert!((r - brute).abs() < 1e-12);

    let mut rep = RbdMonteCarloReport::default();
    assert_eq!(unsafe { rbd_reliability_montecarlo(d, p, 50_000, 3, &mut rep) }, RbdStatus::Ok);
    assert_eq!(rep.samples, 50_000);
    assert!((rep.estimate - r).abs() <= 5.0 * rep.standard_error);
    assert_eq!(unsafe { rbd_reliability_montecarlo(d, p, 0, 3, &mut rep) }, RbdStatus::InvalidArgument);

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { rbd_reliability_polynomial(d, &mut s) }, RbdStatus::Ok);
    assert_eq!(take_string(s), "r1 + r2 - r1*r2");

    let text = CString::new("A1 = 0.9\nA1 = 0.8\n").unwrap();
    let mut q = ptr::null_mut();
    assert_eq!(unsafe { rbd_assignment_parse(text.as_ptr(), &mut q) }, RbdStatus::InvalidArgument);
    assert!(last_error().contains("line 2"));
    unsafe {
        rbd_assignment_free(p);
        rbd_diagram_free(d);
    }
}

#[test]
fn enumeration() {
    let mut count = 0u64;
    assert_eq!(unsafe { rbd_enumerate_classes(2, &mut count) }, RbdStatus::Ok);
    assert_eq!(count, 16);
    assert_eq!(unsafe { rbd_enumerate_classes(9, &mut count) }, RbdStatus::InvalidArgument);
    assert_eq!(unsafe { rbd_enumerate_classes(2, ptr::null_mut()) }, RbdStatus::NullPointer);
}

fn which(tool: &str) -> bool {
    Command::new(tool).arg("--version").output().is_ok()
}

#[test]
fn c_program_links_against_static_library() {
    if !which("cc") {
        eprintln!("skipping: no C compiler on PATH");
        return;
    }
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test binary>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("librbd_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("rbd_smoke");
    let status = Command::new("cc")
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
