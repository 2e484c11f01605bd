use std::ffi::{CStr, CString, c_char};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use grcodes_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { gr_string_free(s) };
    out
}

fn ring(p: u64, s: usize, a: u32) -> *mut GrCyclicRing {
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { gr_cyclic_ring_new(p, s, a, &mut r) }, GrStatus::Ok);
    r
}

fn code_text(c: *const GrCode) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { gr_code_to_string(c, &mut s) }, GrStatus::Ok);
    take_string(s)
}

#[test]
fn ring_and_code_round_trip() {
    let r = ring(2, 2, 1);
    let mut n = 0;
    assert_eq!(unsafe { gr_cyclic_ring_length(r, &mut n) }, GrStatus::Ok);
    assert_eq!(n, 2);

    let text = CString::new("full(2,2,1;1,1;[T(1)])").unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { gr_code_parse(r, text.as_ptr(), &mut c) }, GrStatus::Ok);
    assert_eq!(code_text(c), "full(2,2,1;1,1;[T(1)])");

    let mut log = 0;
    assert_eq!(unsafe { gr_code_log_cardinality(c, &mut log) }, GrStatus::Ok);
    assert_eq!(log, 4);

    let mut d = ptr::null_mut();
    assert_eq!(unsafe { gr_code_dual(c, GrDualKind::Euclidean, &mut d) }, GrStatus::Ok);
    let mut sd = false;
    assert_eq!(unsafe { gr_code_is_self_dual(c, GrDualKind::Euclidean, &mut sd) }, GrStatus::Ok);
    let mut eq = false;
    assert_eq!(unsafe { gr_code_equal(c, d, &mut eq) }, GrStatus::Ok);
    assert_eq!(sd, eq);

    unsafe {
        gr_code_free(d);
        gr_code_free(c);
        gr_cyclic_ring_free(r);
    }
}

#[test]
fn enumeration_lists_self_dual_codes() {
    let r = ring(2, 1, 1);
    let mut list = ptr::null_mut();
    assert_eq!(unsafe { gr_enumerate(r, GrCodeFamily::EuclideanSelfDual, &mut list) }, GrStatus::Ok);
    let mut len = 0;
    assert_eq!(unsafe { gr_code_list_len(list, &mut len) }, GrStatus::Ok);
    assert!(len > 0);
    for i in 0..len {
        let mut c = ptr::null_mut();
        assert_eq!(unsafe { gr_code_list_get(list, i, &mut c) }, GrStatus::Ok);
        let mut sd = false;
        assert_eq!(unsafe { gr_code_is_self_dual(c, GrDualKind::Euclidean, &mut sd) }, GrStatus::Ok);
        assert!(sd, "{}", code_text(c));
        unsafe { gr_code_free(c) };
    }
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { gr_code_list_get(list, len, &mut c) }, GrStatus::OutOfBounds);
    assert!(c.is_null());

    let mut all = ptr::null_mut();
    assert_eq!(unsafe { gr_enumerate(r, GrCodeFamily::AllCyclic, &mut all) }, GrStatus::Ok);
    let mut total = 0;
    assert_eq!(unsafe { gr_code_list_len(all, &mut total) }, GrStatus::Ok);
    assert!(total > len);
    unsafe {
        gr_code_list_free(all);
        gr_code_list_free(list);
        gr_cyclic_ring_free(r);
    }
}

#[test]
fn count_matches_library() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { gr_count_self_dual(2, 1, 14, &mut s) }, GrStatus::Ok);
    let expected = grcodes::counting::count_e_composite(2, 1, 14).unwrap().to_string();
    assert_eq!(take_string(s), expected);
}

#[test]
fn errors_set_status_and_message() {
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { gr_cyclic_ring_new(4, 1, 1, &mut r) }, GrStatus::Domain);
    assert!(r.is_null());
    let msg = take_string(gr_last_error_message());
    assert!(msg.contains("not prime"), "{msg}");

    let r = ring(2, 1, 1);
    let bad = CString::new("full(2,1,1;").unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { gr_code_parse(r, bad.as_ptr(), &mut c) }, GrStatus::Parse);
    assert_eq!(unsafe { gr_code_parse(r, ptr::null(), &mut c) }, GrStatus::NullPointer);
    assert_eq!(unsafe { gr_code_to_string(ptr::null(), ptr::null_mut()) }, GrStatus::NullPointer);
    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { gr_code_parse(r, invalid.as_ptr().cast(), &mut c) },
        GrStatus::InvalidUtf8
    );
    unsafe {
        gr_cyclic_ring_free(r);
        gr_code_free(ptr::null_mut());
        gr_string_free(ptr::null_mut());
    }
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_api() {
    let header = std::fs::read_to_string(manifest_dir().join("include/grcodes.h")).unwrap();
    assert!(header.contains("GRCODES_H"));
    for name in [
        "gr_last_error_message",
        "gr_string_free",
        "gr_cyclic_ring_new",
        "gr_code_parse",
        "gr_code_dual",
        "gr_enumerate",
        "gr_count_self_dual",
        "typedef struct GrCode GrCode",
        "GR_STATUS_OK",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

#[test]
fn c_program_links_against_static_library() {
    let dir = manifest_dir();
    let target = dir.join("../../target");
    let profile = if cfg!(debug_assertions) { "debug" } else { "release" };
    let lib = target.join(profile).join("libgrcodes_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: static library or C compiler unavailable");
        return;
    }
    let out_dir = std::env::temp_dir().join(format!("grcodes_ffi_{}", std::process::id()));
    std::fs::create_dir_all(&out_dir).unwrap();
    let src = out_dir.join("main.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "grcodes.h"
int main(void) {
    GrCyclicRing *r = NULL;
    if (gr_cyclic_ring_new(2, 1, 1, &r) != GR_STATUS_OK) return 1;
    GrCodeList *l = NULL;
    if (gr_enumerate(r, GR_CODE_FAMILY_EUCLIDEAN_SELF_DUAL, &l) != GR_STATUS_OK) return 2;
    size_t n = 0;
    gr_code_list_len(l, &n);
    char *count = NULL;
    gr_count_self_dual(2, 1, 2, &count);
    printf("%zu %s\n", n, count);
    gr_string_free(count);
    gr_code_list_free(l);
    gr_cyclic_ring_free(r);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = out_dir.join("main");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success());
    let text = String::from_utf8(run.stdout).unwrap();
    let fields: Vec<&str> = text.split_whitespace().collect();
    assert_eq!(fields.len(), 2);
    assert_eq!(fields[0], fields[1]);
    std::fs::remove_dir_all(&out_dir).ok();
}
