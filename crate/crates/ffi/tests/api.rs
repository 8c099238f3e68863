use std::ffi::{CStr, CString};
use std::ptr;

use qecc_ffi::*;

fn registry() -> *mut QeccRegistry {
    let mut reg = ptr::null_mut();
    assert_eq!(unsafe { qecc_registry_bundled(&mut reg) }, QeccStatus::Ok);
    reg
}

fn code(reg: *const QeccRegistry, name: &str) -> Result<*mut QeccCode, QeccStatus> {
    let name = CString::new(name).unwrap();
    let mut out = ptr::null_mut();
    match unsafe { qecc_code_from_registry(reg, name.as_ptr(), &mut out) } {
        QeccStatus::Ok => Ok(out),
        s => Err(s),
    }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(qecc_last_error_message()) }.to_string_lossy().into_owned()
}

#[test]
fn registry_names_round_trip() {
    let reg = registry();
    let len = unsafe { qecc_registry_len(reg) };
    assert!(len >= 20);
    let mut names = Vec::new();
    for i in 0..len {
        let mut p = ptr::null();
        assert_eq!(unsafe { qecc_registry_name(reg, i, &mut p) }, QeccStatus::Ok);
        names.push(unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned());
    }
    assert!(names.iter().any(|n| n == "steane-8-3-3"));
    let mut p = ptr::null();
    assert_eq!(unsafe { qecc_registry_name(reg, len, &mut p) }, QeccStatus::InvalidArgument);
    unsafe { qecc_registry_free(reg) };
}

#[test]
fn verify_signed_and_plus_codes() {
    let reg = registry();
    let g8 = code(reg, "g8").unwrap();
    assert_eq!(unsafe { (qecc_code_n(g8), qecc_code_k(g8)) }, (8, 3));
    let mut r = QeccOracleResult::default();
    assert_eq!(unsafe { qecc_verify_joint(g8, 1, &mut r) }, QeccStatus::Ok);
    assert!(r.pass);
    assert_eq!((r.states, r.conflict_count), (200, 0));
    assert_eq!(unsafe { qecc_verify_joint(g8, 2, &mut r) }, QeccStatus::Ok);
    assert!(!r.pass && r.conflict_count > 0);

    let p10 = code(reg, "plus-10-2-3").unwrap();
    assert_eq!(unsafe { qecc_verify_pair(p10, 1, 1, &mut r) }, QeccStatus::Ok);
    assert!(r.pass);

    let mut text = ptr::null_mut();
    assert_eq!(unsafe { qecc_code_listing(g8, &mut text) }, QeccStatus::Ok);
    let listing = unsafe { CStr::from_ptr(text) }.to_str().unwrap().to_owned();
    unsafe { qecc_string_free(text) };
    assert_eq!(listing, include_str!("../../core/data/steane-8-3-3.listing"));

    unsafe {
        qecc_code_free(g8);
        qecc_code_free(p10);
        qecc_registry_free(reg);
    }
}

#[test]
fn errors_carry_status_and_message() {
    let reg = registry();
    assert_eq!(code(reg, "no-such-code").unwrap_err(), QeccStatus::UnknownCode);
    assert!(last_error().contains("no-such-code"));
    assert_eq!(code(reg, "hamming-7-4-3").unwrap_err(), QeccStatus::InvalidArgument);

    let big = code(reg, "plus-17-7-3").unwrap();
    let mut r = QeccOracleResult::default();
    assert_eq!(unsafe { qecc_verify_joint(big, 1, &mut r) }, QeccStatus::ScaleCap);
    unsafe {
        qecc_code_free(big);
        qecc_registry_free(reg);
    }

    let bad = CString::new("name: x\nkind: signed\n").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qecc_code_from_record(bad.as_ptr(), &mut out) }, QeccStatus::Parse);
    assert!(out.is_null());
}

#[test]
fn record_text_builds_a_code() {
    let text = CString::new(
        include_str!("../../core/registry/laflamme-5-1-3.rec")
            .replace("laflamme-5-1-3", "copy-5-1-3")
            .replace("aliases: g5\n", ""),
    )
    .unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qecc_code_from_record(text.as_ptr(), &mut out) }, QeccStatus::Ok, "{}", last_error());
    let mut r = QeccOracleResult::default();
    assert_eq!(unsafe { qecc_verify_joint(out, 1, &mut r) }, QeccStatus::Ok);
    assert!(r.pass && r.states == 32);
    unsafe { qecc_code_free(out) };
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/qecc.h");
    for f in [
        "qecc_last_error_message",
        "qecc_registry_bundled",
        "qecc_registry_free",
        "qecc_registry_len",
        "qecc_registry_name",
        "qecc_code_from_registry",
        "qecc_code_from_record",
        "qecc_code_free",
        "qecc_code_n",
        "qecc_code_k",
        "qecc_verify_joint",
        "qecc_verify_pair",
        "qecc_code_listing",
        "qecc_string_free",
        "qecc_hamming_bound",
        "qecc_min_n_for",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
}
