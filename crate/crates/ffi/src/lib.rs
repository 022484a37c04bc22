//! C ABI for coneproc.
//!
//! Objects cross the boundary as opaque handles that the caller releases
//! with the matching `_free` function. Every fallible function returns a
//! [`ConeprocStatus`]; on failure, [`coneproc_last_error`] describes what
//! went wrong on the calling thread. Strings returned to the caller are
//! released with [`coneproc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use coneproc::analysis::{nullcontrollability_verdict, reachability_verdict, VerdictStatus};
use coneproc::cli::{parse_input, Input};
use coneproc::exactnum::Rational;
use coneproc::informativity::{
    cone_json, decide_nullcontrollability, decide_reachability, DecideOptions, DecisionPath,
    InformativityJson, InformativityReport, Verdict,
};
use coneproc::process::{ConvexProcess, DataSet};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeprocStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    DimensionMismatch = 3,
    /// The input parsed but describes the wrong kind of object.
    WrongKind = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeprocProperty {
    Reachability = 0,
    NullControllability = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeprocVerdict {
    Informative = 0,
    NotInformative = 1,
    InconclusiveAssumptions = 2,
    Indeterminate = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeprocPath {
    Theorem = 0,
    OracleFallback = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeprocAnalysisStatus {
    Holds = 0,
    Fails = 1,
    AssumptionsNotMet = 2,
    Indeterminate = 3,
}

/// Measured transitions.
pub struct ConeprocDataset(DataSet);

/// A convex process given by its graph cone.
pub struct ConeprocProcess(ConvexProcess);

/// An informativity decision with its evidence.
pub struct ConeprocReport(InformativityReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

type Failure = (ConeprocStatus, String);

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ConeprocStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ConeprocStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            set_error(format!("internal panic: {msg}"));
            ConeprocStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    (ConeprocStatus::NullPointer, format!("{what} is NULL"))
}

fn from_core(e: coneproc::Error) -> Failure {
    let status = match e {
        coneproc::Error::DimensionMismatch { .. } => ConeprocStatus::DimensionMismatch,
        _ => ConeprocStatus::InvalidInput,
    };
    (status, e.to_string())
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    // SAFETY: caller passes either NULL or a live handle from this library.
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-NULL out pointers must be writable per the API contract.
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    // SAFETY: caller passes a NUL-terminated string.
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|e| (ConeprocStatus::InvalidInput, format!("{what} is not UTF-8: {e}")))
}

unsafe fn ints(p: *const i64, len: usize, what: &str) -> Result<Vec<Rational>, Failure> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if p.is_null() {
        return Err(null(what));
    }
    // SAFETY: caller guarantees `len` readable elements.
    let s = unsafe { std::slice::from_raw_parts(p, len) };
    Ok(s.iter().map(|&v| Rational::from_integer(v.into())).collect())
}

unsafe fn fractions(num: *const i64, den: *const i64, len: usize, what: &str) -> Result<Vec<Rational>, Failure> {
    let n = unsafe { ints(num, len, what)? };
    let d = unsafe { ints(den, len, what)? };
    n.into_iter()
        .zip(d)
        .map(|(n, d)| {
            if d == Rational::from_integer(0.into()) {
                Err((ConeprocStatus::InvalidInput, format!("{what}: zero denominator")))
            } else {
                Ok(n / d)
            }
        })
        .collect()
}

fn c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|e| (ConeprocStatus::InvalidInput, e.to_string()))
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn coneproc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the most recent failure on this thread, or NULL. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn coneproc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn coneproc_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: `s` came from `CString::into_raw`.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Creates an empty data set of state dimension `n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_dataset_new(n: usize, out: *mut *mut ConeprocDataset) -> ConeprocStatus {
    guard(|| unsafe { write_out(out, boxed(ConeprocDataset(DataSet::new(n))), "out") })
}

/// Parses the JSON or CSV input format (data only).
///
/// # Safety
/// `input` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_dataset_from_text(
    input: *const c_char,
    out: *mut *mut ConeprocDataset,
) -> ConeprocStatus {
    guard(|| {
        let s = unsafe { text(input, "input")? };
        match parse_input(s).map_err(|e| (ConeprocStatus::InvalidInput, e.to_string()))? {
            Input::Data(d) => unsafe { write_out(out, boxed(ConeprocDataset(d)), "out") },
            Input::Process(_) => Err((
                ConeprocStatus::WrongKind,
                "input describes a process, not measured data".to_string(),
            )),
        }
    })
}

/// Appends the pair `(x, y)` with integer entries; both arrays have `len`
/// entries, which must equal the state dimension.
///
/// # Safety
/// `ds` must be a live handle; `x` and `y` must point to `len` values.
#[no_mangle]
pub unsafe extern "C" fn coneproc_dataset_push_pair(
    ds: *mut ConeprocDataset,
    x: *const i64,
    y: *const i64,
    len: usize,
) -> ConeprocStatus {
    guard(|| {
        // SAFETY: caller passes NULL or a live, unaliased handle.
        let ds = unsafe { ds.as_mut() }.ok_or_else(|| null("dataset"))?;
        let (x, y) = unsafe { (ints(x, len, "x")?, ints(y, len, "y")?) };
        ds.0.push(x, y).map_err(from_core)
    })
}

/// Appends the pair with entries `x_num[i] / x_den[i]`, `y_num[i] / y_den[i]`.
///
/// # Safety
/// `ds` must be a live handle; all four arrays must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn coneproc_dataset_push_rational_pair(
    ds: *mut ConeprocDataset,
    x_num: *const i64,
    x_den: *const i64,
    y_num: *const i64,
    y_den: *const i64,
    len: usize,
) -> ConeprocStatus {
    guard(|| {
        // SAFETY: caller passes NULL or a live, unaliased handle.
        let ds = unsafe { ds.as_mut() }.ok_or_else(|| null("dataset"))?;
        let x = unsafe { fractions(x_num, x_den, len, "x")? };
        let y = unsafe { fractions(y_num, y_den, len, "y")? };
        ds.0.push(x, y).map_err(from_core)
    })
}

/// Number of distinct nonzero pairs; 0 for NULL.
///
/// # Safety
/// `ds` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn coneproc_dataset_len(ds: *const ConeprocDataset) -> usize {
    unsafe { ds.as_ref() }.map_or(0, |d| d.0.len())
}

/// # Safety
/// `ds` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn coneproc_dataset_free(ds: *mut ConeprocDataset) {
    if !ds.is_null() {
        // SAFETY: `ds` came from `Box::into_raw`.
        drop(unsafe { Box::from_raw(ds) });
    }
}

/// Decides informativity. `q_max = 0` selects the default horizon `2n`;
/// `fallback` only affects reachability.
///
/// # Safety
/// `ds` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_decide(
    ds: *const ConeprocDataset,
    property: ConeprocProperty,
    fallback: bool,
    q_max: usize,
    out: *mut *mut ConeprocReport,
) -> ConeprocStatus {
    guard(|| {
        let ds = unsafe { deref(ds, "dataset")? };
        let opts = DecideOptions {
            fallback,
            q_max: (q_max > 0).then_some(q_max),
        };
        let report = match property {
            ConeprocProperty::Reachability => decide_reachability(&ds.0, &opts),
            ConeprocProperty::NullControllability => decide_nullcontrollability(&ds.0, &opts),
        }
        .map_err(from_core)?;
        unsafe { write_out(out, boxed(ConeprocReport(report)), "out") }
    })
}

fn verdict_code(v: Verdict) -> ConeprocVerdict {
    match v {
        Verdict::Informative => ConeprocVerdict::Informative,
        Verdict::NotInformative => ConeprocVerdict::NotInformative,
        Verdict::InconclusiveAssumptions => ConeprocVerdict::InconclusiveAssumptions,
        Verdict::Indeterminate => ConeprocVerdict::Indeterminate,
    }
}

/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_report_verdict(
    report: *const ConeprocReport,
    out: *mut ConeprocVerdict,
) -> ConeprocStatus {
    guard(|| {
        let r = unsafe { deref(report, "report")? };
        unsafe { write_out(out, verdict_code(r.0.verdict), "out") }
    })
}

/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_report_path(report: *const ConeprocReport, out: *mut ConeprocPath) -> ConeprocStatus {
    guard(|| {
        let r = unsafe { deref(report, "report")? };
        let path = match r.0.path {
            DecisionPath::Theorem => ConeprocPath::Theorem,
            DecisionPath::OracleFallback => ConeprocPath::OracleFallback,
        };
        unsafe { write_out(out, path, "out") }
    })
}

/// The report as JSON; free the string with [`coneproc_string_free`].
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_report_to_json(
    report: *const ConeprocReport,
    out: *mut *mut c_char,
) -> ConeprocStatus {
    guard(|| {
        let r = unsafe { deref(report, "report")? };
        let json = serde_json::to_string(&InformativityJson::from(&r.0)).expect("report serializes");
        unsafe { write_out(out, c_string(json)?, "out") }
    })
}

/// # Safety
/// `report` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn coneproc_report_free(report: *mut ConeprocReport) {
    if !report.is_null() {
        // SAFETY: `report` came from `Box::into_raw`.
        drop(unsafe { Box::from_raw(report) });
    }
}

/// The most powerful unfalsified process of the data.
///
/// # Safety
/// `ds` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_process_from_data(
    ds: *const ConeprocDataset,
    out: *mut *mut ConeprocProcess,
) -> ConeprocStatus {
    guard(|| {
        let ds = unsafe { deref(ds, "dataset")? };
        unsafe { write_out(out, boxed(ConeprocProcess(ConvexProcess::from_data(&ds.0))), "out") }
    })
}

/// Parses a process description (graph generators, graph inequalities or
/// `A`, `B`, `C`); measured data are accepted too and become `H_D`.
///
/// # Safety
/// `input` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_process_from_text(
    input: *const c_char,
    out: *mut *mut ConeprocProcess,
) -> ConeprocStatus {
    guard(|| {
        let s = unsafe { text(input, "input")? };
        let h = match parse_input(s).map_err(|e| (ConeprocStatus::InvalidInput, e.to_string()))? {
            Input::Data(d) => ConvexProcess::from_data(&d),
            Input::Process(h) => h,
        };
        unsafe { write_out(out, boxed(ConeprocProcess(h)), "out") }
    })
}

fn derive_process(
    p: *const ConeprocProcess,
    out: *mut *mut ConeprocProcess,
    f: impl FnOnce(&ConvexProcess) -> ConvexProcess,
) -> ConeprocStatus {
    guard(|| {
        let p = unsafe { deref(p, "process")? };
        unsafe { write_out(out, boxed(ConeprocProcess(f(&p.0))), "out") }
    })
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_process_negative_dual(
    p: *const ConeprocProcess,
    out: *mut *mut ConeprocProcess,
) -> ConeprocStatus {
    derive_process(p, out, ConvexProcess::negative_dual)
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_process_positive_dual(
    p: *const ConeprocProcess,
    out: *mut *mut ConeprocProcess,
) -> ConeprocStatus {
    derive_process(p, out, ConvexProcess::positive_dual)
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_process_inverse(
    p: *const ConeprocProcess,
    out: *mut *mut ConeprocProcess,
) -> ConeprocStatus {
    derive_process(p, out, ConvexProcess::inverse)
}

/// State dimension; 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn coneproc_process_dim(p: *const ConeprocProcess) -> usize {
    unsafe { p.as_ref() }.map_or(0, |p| p.0.state_dim())
}

/// Whether `(x, y)` lies in the graph.
///
/// # Safety
/// `p` must be a live handle, `x` and `y` must point to `len` values and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_process_contains_pair(
    p: *const ConeprocProcess,
    x: *const i64,
    y: *const i64,
    len: usize,
    out: *mut bool,
) -> ConeprocStatus {
    guard(|| {
        let p = unsafe { deref(p, "process")? };
        let (x, y) = unsafe { (ints(x, len, "x")?, ints(y, len, "y")?) };
        let inside = p.0.contains_pair(&x, &y).map_err(from_core)?;
        unsafe { write_out(out, inside, "out") }
    })
}

/// Applies the theorem for `property` directly to the process.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_process_analyze(
    p: *const ConeprocProcess,
    property: ConeprocProperty,
    out: *mut ConeprocAnalysisStatus,
) -> ConeprocStatus {
    guard(|| {
        let p = unsafe { deref(p, "process")? };
        let v = match property {
            ConeprocProperty::Reachability => reachability_verdict(&p.0),
            ConeprocProperty::NullControllability => nullcontrollability_verdict(&p.0),
        };
        let status = match v.status {
            VerdictStatus::Holds => ConeprocAnalysisStatus::Holds,
            VerdictStatus::Fails => ConeprocAnalysisStatus::Fails,
            VerdictStatus::AssumptionsNotMet => ConeprocAnalysisStatus::AssumptionsNotMet,
            VerdictStatus::Indeterminate => ConeprocAnalysisStatus::Indeterminate,
        };
        unsafe { write_out(out, status, "out") }
    })
}

/// Canonical generators and inequalities of the graph as JSON.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_process_graph_json(p: *const ConeprocProcess, out: *mut *mut c_char) -> ConeprocStatus {
    guard(|| {
        let p = unsafe { deref(p, "process")? };
        let json = serde_json::to_string(&cone_json(p.0.graph())).expect("cone serializes");
        unsafe { write_out(out, c_string(json)?, "out") }
    })
}

/// # Safety
/// `p` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn coneproc_process_free(p: *mut ConeprocProcess) {
    if !p.is_null() {
        // SAFETY: `p` came from `Box::into_raw`.
        drop(unsafe { Box::from_raw(p) });
    }
}

/// One-shot decision from input text. `out_json` may be NULL; otherwise it
/// receives the report, to be freed with [`coneproc_string_free`].
///
/// # Safety
/// `input` must be a NUL-terminated string, `out_verdict` writable and
/// `out_json` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn coneproc_check_text(
    input: *const c_char,
    property: ConeprocProperty,
    fallback: bool,
    out_verdict: *mut ConeprocVerdict,
    out_json: *mut *mut c_char,
) -> ConeprocStatus {
    guard(|| {
        let s = unsafe { text(input, "input")? };
        let Input::Data(d) = parse_input(s).map_err(|e| (ConeprocStatus::InvalidInput, e.to_string()))? else {
            return Err((ConeprocStatus::WrongKind, "input describes a process, not measured data".to_string()));
        };
        let opts = DecideOptions { fallback, q_max: None };
        let report = match property {
            ConeprocProperty::Reachability => decide_reachability(&d, &opts),
            ConeprocProperty::NullControllability => decide_nullcontrollability(&d, &opts),
        }
        .map_err(from_core)?;
        unsafe { write_out(out_verdict, verdict_code(report.verdict), "out_verdict")? };
        if !out_json.is_null() {
            let json = serde_json::to_string(&InformativityJson::from(&report)).expect("report serializes");
            unsafe { out_json.write(c_string(json)?) };
        }
        Ok(())
    })
}
