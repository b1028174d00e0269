//! C ABI over `splitgraph`.
//!
//! Graphs live behind the opaque `SgGraph` handle. Every function returns an
//! `SgStatus` and writes results through out-pointers, which are left
//! untouched on failure. After a failure `sg_last_error_message` describes
//! the error on the calling thread. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use splitgraph::deficiency::{beta0_star_bruteforce_bounded, beta0_star_fast, DeficiencyError, DEFAULT_ORACLE_BOUND};
use splitgraph::format::{parse_graph6, write_graph6};
use splitgraph::graph::{Graph, GraphError};
use splitgraph::harness::{verify_main_theorem, HarnessError, Verdict};
use splitgraph::operators::{counterexample_graph, splitting_graph, FamilySpec};
use splitgraph::solvers::{edge_cover_number, independence_number, matching_number, vertex_cover_number, SolveError};

/// Opaque graph handle. Create with `sg_graph_from_*`, release with
/// `sg_graph_free`.
pub struct SgGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    /// The graph exceeds a size limit of the requested computation.
    Capacity = 4,
    /// The invariant is undefined for this graph, e.g. an edge cover with an
    /// isolated vertex.
    UndefinedInvariant = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SgVerdict {
    Holds = 0,
    Fails = 1,
    NotApplicable = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(SgStatus, String);

impl Failure {
    fn null(what: &str) -> Self {
        Self(SgStatus::NullPointer, format!("{what} is null"))
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        let status = match e {
            GraphError::Capacity { .. } => SgStatus::Capacity,
            _ => SgStatus::InvalidArgument,
        };
        Self(status, e.to_string())
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let status = match e {
            SolveError::TooLarge { .. } => SgStatus::Capacity,
            SolveError::IsolatedVertex(_) => SgStatus::UndefinedInvariant,
            _ => SgStatus::InvalidArgument,
        };
        Self(status, e.to_string())
    }
}

impl From<DeficiencyError> for Failure {
    fn from(e: DeficiencyError) -> Self {
        match e {
            DeficiencyError::Solve(s) => s.into(),
            DeficiencyError::Graph(g) => g.into(),
            DeficiencyError::OverOracleBound { .. } => Self(SgStatus::Capacity, e.to_string()),
            _ => Self(SgStatus::InvalidArgument, e.to_string()),
        }
    }
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Solve(s) => s.into(),
            HarnessError::Graph(g) => g.into(),
            HarnessError::Deficiency(d) => d.into(),
            other => Self(SgStatus::InvalidArgument, other.to_string()),
        }
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SgStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {message}"));
            SgStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const SgGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| Failure::null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn into_handle(g: Graph) -> *mut SgGraph {
    Box::into_raw(Box::new(SgGraph { inner: g }))
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn sg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses one graph6 string.
///
/// # Safety
/// `text` must be a valid nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_graph_from_graph6(text: *const c_char, out: *mut *mut SgGraph) -> SgStatus {
    guard(|| {
        if text.is_null() {
            return Err(Failure::null("text"));
        }
        let s = CStr::from_ptr(text).to_str().map_err(|e| Failure(SgStatus::ParseError, e.to_string()))?;
        let g = parse_graph6(s).map_err(|e| Failure(SgStatus::ParseError, e.to_string()))?;
        write_out(out, into_handle(g))
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs laid out as
/// `u0, v0, u1, v1, ...`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be null
/// when `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut SgGraph,
) -> SgStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(Failure::null("edges"));
        } else {
            let len = edge_count
                .checked_mul(2)
                .ok_or_else(|| Failure(SgStatus::InvalidArgument, "edge count overflows".into()))?;
            std::slice::from_raw_parts(edges, len)
        };
        let g = Graph::new(n, flat.chunks_exact(2).map(|p| (p[0], p[1])))?;
        write_out(out, into_handle(g))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sg_graph_free(g: *mut SgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_graph_order(g: *const SgGraph, out: *mut usize) -> SgStatus {
    guard(|| write_out(out, graph_ref(g)?.order()))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_graph_edge_count(g: *const SgGraph, out: *mut usize) -> SgStatus {
    guard(|| write_out(out, graph_ref(g)?.edge_count()))
}

/// graph6 encoding; release the string with `sg_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_graph_to_graph6(g: *const SgGraph, out: *mut *mut c_char) -> SgStatus {
    guard(|| {
        let s = CString::new(write_graph6(graph_ref(g)?)).expect("graph6 is printable ASCII");
        write_out(out, s.into_raw())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn sg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The splitting graph; copy of vertex `v` is `n + v`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_splitting_graph(g: *const SgGraph, out: *mut *mut SgGraph) -> SgStatus {
    guard(|| {
        let split = splitting_graph(graph_ref(g)?)?;
        write_out(out, into_handle(split.into_graph()))
    })
}

/// The pendant-family graph `G_k` of order `n`, for `n <= k <= 2n - 2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sg_counterexample_graph(n: usize, k: usize, out: *mut *mut SgGraph) -> SgStatus {
    guard(|| {
        let spec = FamilySpec::new(n, k).map_err(|e| Failure(SgStatus::InvalidArgument, e.to_string()))?;
        write_out(out, into_handle(counterexample_graph(spec).graph))
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_independence_number(g: *const SgGraph, out: *mut usize) -> SgStatus {
    guard(|| write_out(out, independence_number(graph_ref(g)?)?))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_vertex_cover_number(g: *const SgGraph, out: *mut usize) -> SgStatus {
    guard(|| write_out(out, vertex_cover_number(graph_ref(g)?)?))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_matching_number(g: *const SgGraph, out: *mut usize) -> SgStatus {
    guard(|| write_out(out, matching_number(graph_ref(g)?)?))
}

/// Fails with `UNDEFINED_INVARIANT` when the graph has an isolated vertex.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_edge_cover_number(g: *const SgGraph, out: *mut usize) -> SgStatus {
    guard(|| write_out(out, edge_cover_number(graph_ref(g)?)?))
}

/// `β₀*` by exhaustive search; orders above 20 give `CAPACITY`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_beta0_star(g: *const SgGraph, out: *mut i64) -> SgStatus {
    guard(|| write_out(out, beta0_star_bruteforce_bounded(graph_ref(g)?, DEFAULT_ORACLE_BOUND)?.value))
}

/// `β₀*` through bipartite matching.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_beta0_star_fast(g: *const SgGraph, out: *mut i64) -> SgStatus {
    guard(|| write_out(out, beta0_star_fast(graph_ref(g)?)?))
}

/// Checks `β₀(S(G)) = n + β₀*(G)`; not applicable to disconnected graphs
/// and graphs of order below 2.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sg_verify_main_theorem(g: *const SgGraph, out: *mut SgVerdict) -> SgStatus {
    guard(|| {
        let verdict = match verify_main_theorem(graph_ref(g)?)?.verdict {
            Verdict::Holds => SgVerdict::Holds,
            Verdict::Fails => SgVerdict::Fails,
            Verdict::NotApplicable => SgVerdict::NotApplicable,
        };
        write_out(out, verdict)
    })
}
