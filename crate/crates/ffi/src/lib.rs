//! C interface to the signed alliance library.
//!
//! Graphs live behind the opaque [`SdaGraph`] handle. Every call returns an
//! [`SdaStatus`]; on failure [`sda_last_error`] describes the cause. Strings
//! handed out by the library must be released with [`sda_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use signed_alliance::building::{build_alliance, ReductionMode};
use signed_alliance::cli::{solve_min_alliance, AutoThresholds, SolverChoice};
use signed_alliance::fpt::analyze_parameters;
use signed_alliance::io::{parse_edge_list, read_graph};
use signed_alliance::verify::check_alliance;
use signed_alliance::{Error, SignedGraph};

/// Opaque graph handle.
pub struct SdaGraph {
    inner: SignedGraph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdaStatus {
    Ok = 0,
    /// Well-posed negative answer: not an alliance, or nothing within the bound.
    NoSolution = 1,
    NullPointer = 2,
    InvalidUtf8 = 3,
    Parse = 4,
    UnknownVertex = 5,
    InvalidArgument = 6,
    Precondition = 7,
    Io = 8,
    Internal = 9,
}

/// Sentinel for "no required vertex".
pub const SDA_NO_VERTEX: usize = usize::MAX;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SdaStatus {
    match e {
        Error::MalformedLine { .. } | Error::DuplicateEdge { .. } | Error::SelfLoop(_) => {
            SdaStatus::Parse
        }
        Error::UnknownVertex(_) => SdaStatus::UnknownVertex,
        Error::EmptySet | Error::InvalidArgument(_) => SdaStatus::InvalidArgument,
        Error::Io(_) => SdaStatus::Io,
        Error::InternalVerificationFailed(_) => SdaStatus::Internal,
        _ => SdaStatus::Precondition,
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guarded(f: impl FnOnce() -> Result<SdaStatus, (SdaStatus, String)>) -> SdaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => {
            set_error("");
            s
        }
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            SdaStatus::Internal
        }
    }
}

fn lib(e: Error) -> (SdaStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (SdaStatus, String) {
    (SdaStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (SdaStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (SdaStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn graph_arg<'a>(g: *const SdaGraph) -> Result<&'a SignedGraph, (SdaStatus, String)> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| null("graph"))
}

unsafe fn slice_arg<'a>(
    p: *const usize,
    len: usize,
    what: &str,
) -> Result<&'a [usize], (SdaStatus, String)> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn emit(g: SignedGraph, out: *mut *mut SdaGraph) -> Result<SdaStatus, (SdaStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(SdaGraph { inner: g }));
    Ok(SdaStatus::Ok)
}

unsafe fn emit_string(s: String, out: *mut *mut c_char) -> Result<(), (SdaStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s)
        .map_err(|_| (SdaStatus::Internal, "string holds NUL".into()))?
        .into_raw();
    Ok(())
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn sda_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses `.sg` edge-list text into a new graph stored in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sda_graph_parse(
    text: *const c_char,
    out: *mut *mut SdaGraph,
) -> SdaStatus {
    guarded(|| {
        let g = parse_edge_list(str_arg(text, "text")?).map_err(lib)?;
        emit(g, out)
    })
}

/// Reads an `.sg` file into a new graph stored in `*out`.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sda_graph_read(path: *const c_char, out: *mut *mut SdaGraph) -> SdaStatus {
    guarded(|| {
        let g = read_graph(std::path::Path::new(str_arg(path, "path")?)).map_err(lib)?;
        emit(g, out)
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sda_graph_free(g: *mut SdaGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sda_graph_vertex_count(g: *const SdaGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.n())
}

/// Edge count, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sda_graph_edge_count(g: *const SdaGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// Index of the vertex named `label`.
///
/// # Safety
/// `g` must be a live handle, `label` NUL-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sda_graph_index_of(
    g: *const SdaGraph,
    label: *const c_char,
    out: *mut usize,
) -> SdaStatus {
    guarded(|| {
        let g = graph_arg(g)?;
        let v = g.index_of(str_arg(label, "label")?).map_err(lib)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = v;
        Ok(SdaStatus::Ok)
    })
}

/// Label of vertex `v` as a new string.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sda_graph_label(
    g: *const SdaGraph,
    v: usize,
    out: *mut *mut c_char,
) -> SdaStatus {
    guarded(|| {
        let g = graph_arg(g)?;
        g.check_vertex(v).map_err(lib)?;
        emit_string(g.label(v).to_string(), out)?;
        Ok(SdaStatus::Ok)
    })
}

/// `Ok` when the `len` vertices at `set` form a defensive alliance,
/// `NoSolution` when they do not. A report is stored in `*report_json` unless
/// it is null.
///
/// # Safety
/// `set` must hold `len` indices; `report_json` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn sda_check_alliance(
    g: *const SdaGraph,
    set: *const usize,
    len: usize,
    report_json: *mut *mut c_char,
) -> SdaStatus {
    guarded(|| {
        let g = graph_arg(g)?;
        let report = check_alliance(g, slice_arg(set, len, "set")?).map_err(lib)?;
        if !report_json.is_null() {
            emit_string(report.to_json(g).to_string(), report_json)?;
        }
        Ok(if report.valid {
            SdaStatus::Ok
        } else {
            SdaStatus::NoSolution
        })
    })
}

/// Minimum alliance of size at most `k` containing `required` (or any, for
/// [`SDA_NO_VERTEX`]), chosen by the automatic solver dispatch. The result
/// document goes to `*result_json`.
///
/// # Safety
/// `g` must be a live handle and `result_json` valid.
#[no_mangle]
pub unsafe extern "C" fn sda_min_alliance(
    g: *const SdaGraph,
    k: usize,
    required: usize,
    result_json: *mut *mut c_char,
) -> SdaStatus {
    guarded(|| {
        let g = graph_arg(g)?;
        let required = (required != SDA_NO_VERTEX).then_some(required);
        let (r, solver) = solve_min_alliance(
            g,
            k,
            required,
            SolverChoice::Auto,
            None,
            &AutoThresholds::default(),
        )
        .map_err(lib)?;
        let mut doc = r.to_json(g);
        doc["solver"] = solver.into();
        emit_string(doc.to_string(), result_json)?;
        Ok(if r.found() {
            SdaStatus::Ok
        } else {
            SdaStatus::NoSolution
        })
    })
}

/// Minimum sign-flip plan turning `target` into an alliance within budget `k`.
/// `literal` selects the literal reduction rule instead of the corrected one.
///
/// # Safety
/// `target` must hold `len` indices and `plan_json` be valid.
#[no_mangle]
pub unsafe extern "C" fn sda_build(
    g: *const SdaGraph,
    target: *const usize,
    len: usize,
    k: usize,
    literal: bool,
    plan_json: *mut *mut c_char,
) -> SdaStatus {
    guarded(|| {
        let g = graph_arg(g)?;
        let mode = if literal {
            ReductionMode::Literal
        } else {
            ReductionMode::Corrected
        };
        let plan = build_alliance(g, slice_arg(target, len, "target")?, k, mode).map_err(lib)?;
        let doc = plan
            .as_ref()
            .map_or_else(|| "null".to_string(), |p| p.to_json(g).to_string());
        emit_string(doc, plan_json)?;
        Ok(if plan.is_some() {
            SdaStatus::Ok
        } else {
            SdaStatus::NoSolution
        })
    })
}

/// Structural parameter report.
///
/// # Safety
/// `g` must be a live handle and `report_json` valid.
#[no_mangle]
pub unsafe extern "C" fn sda_analyze(
    g: *const SdaGraph,
    report_json: *mut *mut c_char,
) -> SdaStatus {
    guarded(|| {
        let g = graph_arg(g)?;
        let doc = serde_json::to_string(&analyze_parameters(g))
            .map_err(|e| (SdaStatus::Internal, e.to_string()))?;
        emit_string(doc, report_json)?;
        Ok(SdaStatus::Ok)
    })
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sda_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
