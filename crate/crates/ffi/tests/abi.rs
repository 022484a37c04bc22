use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use coneproc_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { coneproc_string_free(s) };
    out
}

fn last_error() -> String {
    let p = coneproc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

const PLANAR_TRAJECTORY: &str = r#"{"n": 2, "trajectories": [[[0, 0], [1, 0], [0, 1], [0, -1], [-1, 0]]]}"#;

fn planar_trajectory() -> *mut ConeprocDataset {
    let text = CString::new(PLANAR_TRAJECTORY).unwrap();
    let mut ds = ptr::null_mut();
    assert_eq!(unsafe { coneproc_dataset_from_text(text.as_ptr(), &mut ds) }, ConeprocStatus::Ok);
    ds
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(coneproc_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn planar_trajectory_reachability_through_handles() {
    let ds = planar_trajectory();
    assert_eq!(unsafe { coneproc_dataset_len(ds) }, 4);
    let mut report = ptr::null_mut();
    let st = unsafe { coneproc_decide(ds, ConeprocProperty::Reachability, true, 0, &mut report) };
    assert_eq!(st, ConeprocStatus::Ok);
    let mut verdict = ConeprocVerdict::Indeterminate;
    let mut path = ConeprocPath::Theorem;
    unsafe {
        assert_eq!(coneproc_report_verdict(report, &mut verdict), ConeprocStatus::Ok);
        assert_eq!(coneproc_report_path(report, &mut path), ConeprocStatus::Ok);
    }
    assert_eq!(verdict, ConeprocVerdict::Informative);
    assert_eq!(path, ConeprocPath::OracleFallback);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { coneproc_report_to_json(report, &mut json) }, ConeprocStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["verdict"], "INFORMATIVE");
    assert_eq!(v["path"], "ORACLE_FALLBACK");

    let mut strict = ptr::null_mut();
    let st = unsafe { coneproc_decide(ds, ConeprocProperty::Reachability, false, 0, &mut strict) };
    assert_eq!(st, ConeprocStatus::Ok);
    unsafe { coneproc_report_verdict(strict, &mut verdict) };
    assert_eq!(verdict, ConeprocVerdict::InconclusiveAssumptions);

    unsafe {
        coneproc_report_free(report);
        coneproc_report_free(strict);
        coneproc_dataset_free(ds);
    }
}

#[test]
fn pushing_pairs_matches_parsed_input() {
    let mut ds = ptr::null_mut();
    assert_eq!(unsafe { coneproc_dataset_new(1, &mut ds) }, ConeprocStatus::Ok);
    let states = [1i64, 2, 1, 0, -2, -3, -1];
    for w in states.windows(2) {
        let st = unsafe { coneproc_dataset_push_pair(ds, &w[0], &w[1], 1) };
        assert_eq!(st, ConeprocStatus::Ok);
    }
    let (num, den) = ([1i64], [2i64]);
    let st = unsafe { coneproc_dataset_push_rational_pair(ds, num.as_ptr(), den.as_ptr(), num.as_ptr(), den.as_ptr(), 1) };
    assert_eq!(st, ConeprocStatus::Ok);
    assert_eq!(unsafe { coneproc_dataset_len(ds) }, 7);
    unsafe { coneproc_dataset_free(ds) };
}

#[test]
fn errors_are_reported() {
    let mut ds = ptr::null_mut();
    unsafe { coneproc_dataset_new(1, &mut ds) };
    let x = [1i64, 2];
    let st = unsafe { coneproc_dataset_push_pair(ds, x.as_ptr(), x.as_ptr(), 2) };
    assert_eq!(st, ConeprocStatus::DimensionMismatch);
    assert!(!last_error().is_empty());

    let zero = [0i64];
    let one = [1i64];
    let st = unsafe { coneproc_dataset_push_rational_pair(ds, one.as_ptr(), zero.as_ptr(), one.as_ptr(), one.as_ptr(), 1) };
    assert_eq!(st, ConeprocStatus::InvalidInput);
    assert!(last_error().contains("denominator"));

    let mut report = ptr::null_mut();
    let st = unsafe { coneproc_decide(ds, ConeprocProperty::Reachability, true, 0, &mut report) };
    assert_eq!(st, ConeprocStatus::InvalidInput);
    assert!(report.is_null());

    let st = unsafe { coneproc_decide(ptr::null(), ConeprocProperty::Reachability, true, 0, &mut report) };
    assert_eq!(st, ConeprocStatus::NullPointer);
    let st = unsafe { coneproc_dataset_new(1, ptr::null_mut()) };
    assert_eq!(st, ConeprocStatus::NullPointer);

    let bad = CString::new(r#"{"n": 1, "pairs": [[0.5, 1]]}"#).unwrap();
    let mut other = ptr::null_mut();
    let st = unsafe { coneproc_dataset_from_text(bad.as_ptr(), &mut other) };
    assert_eq!(st, ConeprocStatus::InvalidInput);

    let process = CString::new(r#"{"n": 1, "generators": [["0", "1"], ["1", "1"]]}"#).unwrap();
    let st = unsafe { coneproc_dataset_from_text(process.as_ptr(), &mut other) };
    assert_eq!(st, ConeprocStatus::WrongKind);

    unsafe {
        coneproc_dataset_free(ds);
        coneproc_dataset_free(ptr::null_mut());
        coneproc_report_free(ptr::null_mut());
        coneproc_process_free(ptr::null_mut());
        coneproc_string_free(ptr::null_mut());
    }
}

#[test]
fn process_duals_and_analysis() {
    let text = CString::new(r#"{"n": 1, "generators": [["0", "1"], ["1", "1"]]}"#).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { coneproc_process_from_text(text.as_ptr(), &mut h) }, ConeprocStatus::Ok);
    assert_eq!(unsafe { coneproc_process_dim(h) }, 1);

    let mut inside = false;
    let st = unsafe { coneproc_process_contains_pair(h, &1, &3, 1, &mut inside) };
    assert_eq!(st, ConeprocStatus::Ok);
    assert!(inside);
    unsafe { coneproc_process_contains_pair(h, &1, &0, 1, &mut inside) };
    assert!(!inside);

    let mut neg = ptr::null_mut();
    let mut pos = ptr::null_mut();
    let mut inv = ptr::null_mut();
    unsafe {
        assert_eq!(coneproc_process_negative_dual(h, &mut neg), ConeprocStatus::Ok);
        assert_eq!(coneproc_process_positive_dual(h, &mut pos), ConeprocStatus::Ok);
        assert_eq!(coneproc_process_inverse(h, &mut inv), ConeprocStatus::Ok);
    }
    // The negative dual of cone{(0,1), (1,1)} contains (0,1) and (-1,1).
    unsafe { coneproc_process_contains_pair(neg, &-1, &1, 1, &mut inside) };
    assert!(inside);
    unsafe { coneproc_process_contains_pair(inv, &3, &1, 1, &mut inside) };
    assert!(inside);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { coneproc_process_graph_json(neg, &mut json) }, ConeprocStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 2);

    let mut status = ConeprocAnalysisStatus::Indeterminate;
    let st = unsafe { coneproc_process_analyze(h, ConeprocProperty::Reachability, &mut status) };
    assert_eq!(st, ConeprocStatus::Ok);
    assert_eq!(status, ConeprocAnalysisStatus::AssumptionsNotMet);

    unsafe {
        coneproc_process_free(h);
        coneproc_process_free(neg);
        coneproc_process_free(pos);
        coneproc_process_free(inv);
    }
}

#[test]
fn process_from_data_contains_the_data() {
    let ds = planar_trajectory();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { coneproc_process_from_data(ds, &mut h) }, ConeprocStatus::Ok);
    let mut inside = false;
    let (x, y) = ([0i64, -1], [-1i64, 0]);
    unsafe { coneproc_process_contains_pair(h, x.as_ptr(), y.as_ptr(), 2, &mut inside) };
    assert!(inside);
    let (x, y) = ([0i64, 0], [-1i64, 0]);
    unsafe { coneproc_process_contains_pair(h, x.as_ptr(), y.as_ptr(), 2, &mut inside) };
    assert!(!inside);
    unsafe {
        coneproc_process_free(h);
        coneproc_dataset_free(ds);
    }
}

#[test]
fn check_text_one_shot() {
    let text = CString::new(PLANAR_TRAJECTORY).unwrap();
    let mut verdict = ConeprocVerdict::Indeterminate;
    let mut json = ptr::null_mut();
    let st = unsafe { coneproc_check_text(text.as_ptr(), ConeprocProperty::NullControllability, true, &mut verdict, &mut json) };
    assert_eq!(st, ConeprocStatus::Ok);
    assert_eq!(verdict, ConeprocVerdict::InconclusiveAssumptions);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["property"], "null-controllability");

    let st = unsafe { coneproc_check_text(text.as_ptr(), ConeprocProperty::Reachability, true, &mut verdict, ptr::null_mut()) };
    assert_eq!(st, ConeprocStatus::Ok);
    assert_eq!(verdict, ConeprocVerdict::Informative);
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(manifest_dir().join("include/coneproc.h")).unwrap();
    for name in [
        "coneproc_version",
        "coneproc_last_error",
        "coneproc_string_free",
        "coneproc_dataset_new",
        "coneproc_dataset_from_text",
        "coneproc_dataset_push_pair",
        "coneproc_dataset_push_rational_pair",
        "coneproc_dataset_len",
        "coneproc_dataset_free",
        "coneproc_decide",
        "coneproc_report_verdict",
        "coneproc_report_path",
        "coneproc_report_to_json",
        "coneproc_report_free",
        "coneproc_process_from_data",
        "coneproc_process_from_text",
        "coneproc_process_negative_dual",
        "coneproc_process_positive_dual",
        "coneproc_process_inverse",
        "coneproc_process_dim",
        "coneproc_process_contains_pair",
        "coneproc_process_analyze",
        "coneproc_process_graph_json",
        "coneproc_process_free",
        "coneproc_check_text",
        "typedef struct ConeprocDataset ConeprocDataset",
        "CONEPROC_STATUS_DIMENSION_MISMATCH",
        "CONEPROC_VERDICT_NOT_INFORMATIVE",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

fn staticlib() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let dir = exe.parent()?.parent()?;
    let lib = dir.join("libconeproc_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_and_runs() {
    let Ok(cc) = std::env::var("CC").or_else(|_| which("cc").ok_or(())) else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let Some(lib) = staticlib() else {
        eprintln!("static library not built; skipping");
        return;
    };
    let out_dir = tempfile_dir();
    let exe = out_dir.join("smoke");
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest_dir().join("include"))
        .arg(manifest_dir().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("compiler runs");
    assert!(status.success(), "C program failed to compile");
    let run = Command::new(&exe).output().expect("smoke test runs");
    assert!(run.status.success(), "smoke test exited with {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "1");
}

fn which(name: &str) -> Option<String> {
    let path = std::env::var_os("PATH")?;
    std::env::split_paths(&path)
        .map(|d| d.join(name))
        .find(|p| p.is_file())
        .map(|p| p.to_string_lossy().into_owned())
}

fn tempfile_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("coneproc-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
