//! C ABI for the qecc library.
//!
//! Handles are opaque and owned by the caller once returned; release them
//! with the matching `*_free` function. Every fallible call returns a
//! [`QeccStatus`] and leaves a message readable through
//! [`qecc_last_error_message`] on failure.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use qecc::error::Error;
use qecc::qstate::{min_n_for, quantum_hamming_bound, verify_orthogonal, Budget, SignedCode};
use qecc::registry::{Built, Record, Registry};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QeccStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownCode = 4,
    InvalidArgument = 5,
    ScaleCap = 6,
    InvalidCode = 7,
    Internal = 8,
}

/// Bundled code registry.
pub struct QeccRegistry {
    inner: Registry,
    names: Vec<CString>,
}

/// A code with explicit code vectors (signed, or a plus code with all signs +1).
pub struct QeccCode {
    inner: SignedCode,
}

/// Outcome of the state oracle.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct QeccOracleResult {
    pub pass: bool,
    pub states: u64,
    pub conflict_count: u64,
}

/// Quantum Hamming bound for `(n, K, t)`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct QeccBoundResult {
    pub satisfied: bool,
    pub perfect: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: QeccStatus, msg: impl Into<String>) -> QeccStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> QeccStatus {
    let status = match &e {
        Error::Parse(_) | Error::Io(_) => QeccStatus::Parse,
        Error::UnknownCode(_) => QeccStatus::UnknownCode,
        Error::ScaleCap { .. } => QeccStatus::ScaleCap,
        Error::InvalidParameter(_) | Error::DimensionTooLarge { .. } | Error::TableCoverage { .. } => {
            QeccStatus::InvalidArgument
        }
        Error::Inconsistent(_) => QeccStatus::Internal,
        _ => QeccStatus::InvalidCode,
    };
    fail(status, e.to_string())
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, QeccStatus> {
    if s.is_null() {
        return Err(fail(QeccStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(QeccStatus::InvalidUtf8, "argument is not UTF-8"))
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(QeccStatus::NullPointer, concat!("null argument: ", stringify!($p)));
        })+
    };
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qecc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Opens the bundled registry.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qecc_registry_bundled(out: *mut *mut QeccRegistry) -> QeccStatus {
    non_null!(out);
    let inner = Registry::bundled();
    let names =
        inner.records().iter().map(|r| CString::new(r.name.as_str()).expect("names have no NUL")).collect();
    *out = Box::into_raw(Box::new(QeccRegistry { inner, names }));
    QeccStatus::Ok
}

/// # Safety
/// `reg` must be null or a handle from [`qecc_registry_bundled`], freed once.
#[no_mangle]
pub unsafe extern "C" fn qecc_registry_free(reg: *mut QeccRegistry) {
    if !reg.is_null() {
        drop(Box::from_raw(reg));
    }
}

/// Number of entries, or 0 for a null handle.
///
/// # Safety
/// `reg` must be null or a live registry handle.
#[no_mangle]
pub unsafe extern "C" fn qecc_registry_len(reg: *const QeccRegistry) -> usize {
    reg.as_ref().map_or(0, |r| r.names.len())
}

/// Name of entry `index`; the string lives as long as the registry.
///
/// # Safety
/// `reg` must be a live registry handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qecc_registry_name(
    reg: *const QeccRegistry,
    index: usize,
    out: *mut *const c_char,
) -> QeccStatus {
    non_null!(reg, out);
    let reg = &*reg;
    match reg.names.get(index) {
        Some(name) => {
            *out = name.as_ptr();
            QeccStatus::Ok
        }
        None => {
            fail(QeccStatus::InvalidArgument, format!("index {index} out of range (len {})", reg.names.len()))
        }
    }
}

fn code_from_built(built: Built, name: &str) -> Result<SignedCode, QeccStatus> {
    match built {
        Built::Signed(s) => Ok(s),
        Built::Plus(p) => SignedCode::from_plus(&p).map_err(from_error),
        _ => Err(fail(QeccStatus::InvalidArgument, format!("{name} has no code vectors"))),
    }
}

/// Builds the signed or plus code named `name` (aliases accepted).
///
/// # Safety
/// `reg` must be a live registry handle, `name` a NUL-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qecc_code_from_registry(
    reg: *const QeccRegistry,
    name: *const c_char,
    out: *mut *mut QeccCode,
) -> QeccStatus {
    non_null!(reg, out);
    let name = try_status!(read_str(name));
    let reg = &(*reg).inner;
    let built = try_status!(reg.build(name).map_err(from_error));
    let inner = try_status!(code_from_built(built, name));
    *out = Box::into_raw(Box::new(QeccCode { inner }));
    QeccStatus::Ok
}

/// Builds a code from registry record text. Records may refer to bundled
/// entries by name.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qecc_code_from_record(text: *const c_char, out: *mut *mut QeccCode) -> QeccStatus {
    non_null!(out);
    let text = try_status!(read_str(text));
    let record: Record = try_status!(text.parse().map_err(from_error));
    let reg = try_status!(Registry::with_extra(record.clone()).map_err(from_error));
    let built = try_status!(reg.build_record(&record, 0).map_err(from_error));
    let inner = try_status!(code_from_built(built, &record.name));
    *out = Box::into_raw(Box::new(QeccCode { inner }));
    QeccStatus::Ok
}

/// # Safety
/// `code` must be null or a code handle, freed once.
#[no_mangle]
pub unsafe extern "C" fn qecc_code_free(code: *mut QeccCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Number of physical qubits, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live code handle.
#[no_mangle]
pub unsafe extern "C" fn qecc_code_n(code: *const QeccCode) -> usize {
    code.as_ref().map_or(0, |c| c.inner.n())
}

/// Number of encoded qubits, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live code handle.
#[no_mangle]
pub unsafe extern "C" fn qecc_code_k(code: *const QeccCode) -> usize {
    code.as_ref().map_or(0, |c| c.inner.k())
}

unsafe fn verify_with(code: *const QeccCode, budget: Budget, out: *mut QeccOracleResult) -> QeccStatus {
    non_null!(code, out);
    let report = try_status!(verify_orthogonal(&(*code).inner, budget).map_err(from_error));
    *out = QeccOracleResult {
        pass: report.pass,
        states: report.states as u64,
        conflict_count: report.conflict_count,
    };
    QeccStatus::Ok
}

/// Runs the state oracle against all errors of weight at most `t`.
///
/// # Safety
/// `code` must be a live code handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qecc_verify_joint(
    code: *const QeccCode,
    t: usize,
    out: *mut QeccOracleResult,
) -> QeccStatus {
    verify_with(code, Budget::Joint { t }, out)
}

/// Runs the state oracle against `tx` amplitude and `tz` phase errors.
///
/// # Safety
/// `code` must be a live code handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qecc_verify_pair(
    code: *const QeccCode,
    tx: usize,
    tz: usize,
    out: *mut QeccOracleResult,
) -> QeccStatus {
    verify_with(code, Budget::Pair { tx, tz }, out)
}

/// Full code-vector listing; release it with [`qecc_string_free`].
///
/// # Safety
/// `code` must be a live code handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qecc_code_listing(code: *const QeccCode, out: *mut *mut c_char) -> QeccStatus {
    non_null!(code, out);
    let text = try_status!((*code).inner.listing().map_err(from_error));
    *out = CString::new(text).expect("listing has no NUL").into_raw();
    QeccStatus::Ok
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn qecc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Evaluates the quantum Hamming bound.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qecc_hamming_bound(
    n: usize,
    k: usize,
    t: usize,
    out: *mut QeccBoundResult,
) -> QeccStatus {
    non_null!(out);
    let r = quantum_hamming_bound(n, k, t);
    *out = QeccBoundResult { satisfied: r.satisfied, perfect: r.perfect };
    QeccStatus::Ok
}

/// Smallest `n` allowed by the quantum Hamming bound for `K` and `t`.
#[no_mangle]
pub extern "C" fn qecc_min_n_for(k: usize, t: usize) -> usize {
    min_n_for(k, t)
}
