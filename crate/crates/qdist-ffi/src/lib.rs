//! C ABI for the qdist distance oracles and code constructions.
//!
//! Objects cross the boundary as opaque handles allocated by this library
//! and released with the matching `*_free` call; strings returned to the
//! caller are released with [`qdist_string_free`].  Every fallible call
//! returns a [`QdistStatus`]; on failure the out-parameters are left
//! untouched and a thread-local message, readable through
//! [`qdist_last_error`], says what went wrong.  Panics never unwind across
//! the boundary — they are caught and surfaced as `Panic`.
//!
//! The matching header is committed at `include/qdist.h` and regenerated
//! on every build.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qdist::codes::LinearCode;
use qdist::css::{css_from_pair, hgp, CssCode};
use qdist::distance::{
    css_distance, graph_state_distance, graph_state_x_distance, min_distance, set_oracle_threads,
    DistanceResult, DistanceValue,
};
use qdist::gf2::BitMatrix;
use qdist::graphs::{graph_code, polarity_graph, Graph};
use qdist::matio::{format_matrix, parse_matrix};
use qdist::Error;

/// Status of a call across the C boundary.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QdistStatus {
    /// The call succeeded and its out-parameters are valid.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A text argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A text input was syntactically malformed; see [`qdist_last_error`].
    Format = 3,
    /// The inputs were outside an operation's domain (dimension mismatch,
    /// rank deficiency, a composite where a prime is needed, ...).
    Invalid = 4,
    /// An internal panic was caught at the boundary; state is unharmed but
    /// the result is unusable.
    Panic = 5,
}

/// Written by the distance calls when the distance is infinite — a zero
/// code, or a quantum code with no logical operators.
pub const QDIST_DISTANCE_INFINITE: u64 = u64::MAX;

/// A GF(2) matrix.
pub struct QdistMatrix(BitMatrix);

/// A binary linear code.
pub struct QdistCode(LinearCode);

/// A CSS quantum code.
pub struct QdistCss(CssCode);

/// An undirected graph.
pub struct QdistGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn remember(message: String) {
    let text = CString::new(message)
        .unwrap_or_else(|_| CString::new("error text contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn status_of(err: &Error) -> QdistStatus {
    match err {
        Error::Format { .. } | Error::Io { .. } => QdistStatus::Format,
        _ => QdistStatus::Invalid,
    }
}

fn fail(err: &Error) -> QdistStatus {
    remember(err.to_string());
    status_of(err)
}

fn null_arg(name: &str) -> QdistStatus {
    remember(format!("{name} must not be null"));
    QdistStatus::NullArgument
}

/// Runs `body` without letting a panic unwind into the caller.
fn guarded(body: impl FnOnce() -> QdistStatus) -> QdistStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            remember("internal panic caught at the C boundary".into());
            QdistStatus::Panic
        }
    }
}

unsafe fn write_distance(
    result: DistanceResult,
    out_distance: *mut u64,
    out_witness: *mut *mut c_char,
) -> QdistStatus {
    if out_distance.is_null() {
        return null_arg("out_distance");
    }
    *out_distance = match result.value {
        DistanceValue::Finite(v) => v,
        DistanceValue::Infinite => QDIST_DISTANCE_INFINITE,
    };
    if !out_witness.is_null() {
        *out_witness = match result.witness {
            Some(w) => CString::new(w.to_string())
                .expect("bit strings contain no NUL")
                .into_raw(),
            None => std::ptr::null_mut(),
        };
    }
    QdistStatus::Ok
}

/// The message from the most recent failure on this thread, or null if no
/// call has failed yet.  The pointer stays valid until the next failing
/// call on the same thread.
#[no_mangle]
pub extern "C" fn qdist_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

/// Caps oracle worker threads.  Zero or one disables parallelism; results
/// never depend on this, only throughput does.
#[no_mangle]
pub extern "C" fn qdist_set_threads(threads: usize) {
    set_oracle_threads(threads.max(1));
}

/// Releases a string returned by this library.  A null `s` is a no-op.
///
/// # Safety
/// `s` must have been returned by a `qdist_*` call and not freed before.
#[no_mangle]
pub unsafe extern "C" fn qdist_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Parses matrix text — a `rows cols` header, then `rows` lines of `0`/`1`
/// characters (`#` comments and blank lines are skipped) — into a new
/// handle written to `*out`.
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` to writable
/// storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn qdist_matrix_parse(
    text: *const c_char,
    out: *mut *mut QdistMatrix,
) -> QdistStatus {
    guarded(|| {
        if text.is_null() {
            return null_arg("text");
        }
        if out.is_null() {
            return null_arg("out");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            remember("matrix text is not valid UTF-8".into());
            return QdistStatus::InvalidUtf8;
        };
        match parse_matrix(text) {
            Ok(m) => {
                *out = Box::into_raw(Box::new(QdistMatrix(m)));
                QdistStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Renders a matrix in the same text format `qdist_matrix_parse` reads,
/// writing a newly allocated string to `*out`.
///
/// # Safety
/// `matrix` must be a live handle and `out` writable storage for one
/// pointer; release the string with [`qdist_string_free`].
#[no_mangle]
pub unsafe extern "C" fn qdist_matrix_format(
    matrix: *const QdistMatrix,
    out: *mut *mut c_char,
) -> QdistStatus {
    guarded(|| {
        if matrix.is_null() {
            return null_arg("matrix");
        }
        if out.is_null() {
            return null_arg("out");
        }
        let text = format_matrix(&(*matrix).0);
        *out = CString::new(text)
            .expect("matrix text contains no NUL")
            .into_raw();
        QdistStatus::Ok
    })
}

/// Row count, or 0 for a null handle.
///
/// # Safety
/// `matrix` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qdist_matrix_rows(matrix: *const QdistMatrix) -> usize {
    if matrix.is_null() {
        return 0;
    }
    (*matrix).0.rows()
}

/// Column count, or 0 for a null handle.
///
/// # Safety
/// `matrix` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qdist_matrix_cols(matrix: *const QdistMatrix) -> usize {
    if matrix.is_null() {
        return 0;
    }
    (*matrix).0.cols()
}

/// The entry at `(row, col)`; false for a null handle or an out-of-range
/// index.
///
/// # Safety
/// `matrix` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qdist_matrix_get(
    matrix: *const QdistMatrix,
    row: usize,
    col: usize,
) -> bool {
    if matrix.is_null() {
        return false;
    }
    let m = &(*matrix).0;
    row < m.rows() && col < m.cols() && m.get(row, col)
}

/// Releases a matrix handle.  A null handle is a no-op.
///
/// # Safety
/// `matrix` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qdist_matrix_free(matrix: *mut QdistMatrix) {
    if !matrix.is_null() {
        drop(Box::from_raw(matrix));
    }
}

// ---------------------------------------------------------------------------
// Linear codes
// ---------------------------------------------------------------------------

/// Builds the code `{x : Hx = 0}` from a parity-check matrix, writing a
/// new handle to `*out`.  `h` need not be full rank; it is reduced.
///
/// # Safety
/// `h` must be a live matrix handle and `out` writable storage for one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn qdist_code_from_parity_check(
    h: *const QdistMatrix,
    out: *mut *mut QdistCode,
) -> QdistStatus {
    guarded(|| {
        if h.is_null() {
            return null_arg("h");
        }
        if out.is_null() {
            return null_arg("out");
        }
        match LinearCode::from_parity_check((*h).0.clone()) {
            Ok(code) => {
                *out = Box::into_raw(Box::new(QdistCode(code)));
                QdistStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Block length `n`, or 0 for a null handle.
///
/// # Safety
/// `code` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qdist_code_n(code: *const QdistCode) -> usize {
    if code.is_null() {
        return 0;
    }
    (*code).0.n()
}

/// Dimension `k`, or 0 for a null handle.
///
/// # Safety
/// `code` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qdist_code_k(code: *const QdistCode) -> usize {
    if code.is_null() {
        return 0;
    }
    (*code).0.k()
}

/// Writes a handle to the dual code to `*out`.
///
/// # Safety
/// `code` must be a live handle and `out` writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn qdist_code_dual(
    code: *const QdistCode,
    out: *mut *mut QdistCode,
) -> QdistStatus {
    guarded(|| {
        if code.is_null() {
            return null_arg("code");
        }
        if out.is_null() {
            return null_arg("out");
        }
        *out = Box::into_raw(Box::new(QdistCode((*code).0.dual())));
        QdistStatus::Ok
    })
}

/// Exact minimum distance.  Writes [`QDIST_DISTANCE_INFINITE`] for the
/// zero code.  When `out_witness` is non-null it receives a `0`/`1` string
/// holding a minimum-weight codeword (null when the distance is infinite);
/// release it with [`qdist_string_free`].
///
/// # Safety
/// `code` must be a live handle, `out_distance` writable storage for one
/// `uint64_t`, and `out_witness` null or writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn qdist_code_distance(
    code: *const QdistCode,
    out_distance: *mut u64,
    out_witness: *mut *mut c_char,
) -> QdistStatus {
    guarded(|| {
        if code.is_null() {
            return null_arg("code");
        }
        write_distance(min_distance(&(*code).0), out_distance, out_witness)
    })
}

/// Releases a code handle.  A null handle is a no-op.
///
/// # Safety
/// `code` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qdist_code_free(code: *mut QdistCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

// ---------------------------------------------------------------------------
// CSS codes
// ---------------------------------------------------------------------------

/// Builds a CSS code from X and Z checks, writing a new handle to `*out`.
/// The rows of `hx` must be orthogonal to the rows of `hz`.
///
/// # Safety
/// `hx` and `hz` must be live matrix handles and `out` writable storage
/// for one pointer.
#[no_mangle]
pub unsafe extern "C" fn qdist_css_from_pair(
    hx: *const QdistMatrix,
    hz: *const QdistMatrix,
    out: *mut *mut QdistCss,
) -> QdistStatus {
    guarded(|| {
        if hx.is_null() {
            return null_arg("hx");
        }
        if hz.is_null() {
            return null_arg("hz");
        }
        if out.is_null() {
            return null_arg("out");
        }
        match css_from_pair((*hx).0.clone(), (*hz).0.clone()) {
            Ok(css) => {
                *out = Box::into_raw(Box::new(QdistCss(css)));
                QdistStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// The hypergraph product of two full-row-rank parity checks, written to
/// `*out` as a CSS code with parameters
/// `[[n1 n2 + r1 r2, k1 k2, min(d1, d2)]]`.
///
/// # Safety
/// `h1` and `h2` must be live matrix handles and `out` writable storage
/// for one pointer.
#[no_mangle]
pub unsafe extern "C" fn qdist_hgp(
    h1: *const QdistMatrix,
    h2: *const QdistMatrix,
    out: *mut *mut QdistCss,
) -> QdistStatus {
    guarded(|| {
        if h1.is_null() {
            return null_arg("h1");
        }
        if h2.is_null() {
            return null_arg("h2");
        }
        if out.is_null() {
            return null_arg("out");
        }
        match hgp(&(*h1).0, &(*h2).0) {
            Ok(css) => {
                *out = Box::into_raw(Box::new(QdistCss(css)));
                QdistStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Physical qubit count `n`, or 0 for a null handle.
///
/// # Safety
/// `css` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qdist_css_n(css: *const QdistCss) -> usize {
    if css.is_null() {
        return 0;
    }
    (*css).0.n()
}

/// Logical qubit count `k`, or 0 for a null handle.
///
/// # Safety
/// `css` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qdist_css_k(css: *const QdistCss) -> usize {
    if css.is_null() {
        return 0;
    }
    (*css).0.k()
}

/// Exact quantum distance: the least weight over X- and Z-type logical
/// representatives.  Writes [`QDIST_DISTANCE_INFINITE`] when `k = 0`.  The
/// optional witness is a minimum-weight logical operator on the winning
/// side.
///
/// # Safety
/// `css` must be a live handle, `out_distance` writable storage for one
/// `uint64_t`, and `out_witness` null or writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn qdist_css_distance(
    css: *const QdistCss,
    out_distance: *mut u64,
    out_witness: *mut *mut c_char,
) -> QdistStatus {
    guarded(|| {
        if css.is_null() {
            return null_arg("css");
        }
        write_distance(css_distance(&(*css).0), out_distance, out_witness)
    })
}

/// Releases a CSS handle.  A null handle is a no-op.
///
/// # Safety
/// `css` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qdist_css_free(css: *mut QdistCss) {
    if !css.is_null() {
        drop(Box::from_raw(css));
    }
}

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

/// Builds a graph from a symmetric adjacency matrix, writing a new handle
/// to `*out`.  Diagonal ones are rejected unless `allow_loops` is set.
///
/// # Safety
/// `adjacency` must be a live matrix handle and `out` writable storage for
/// one pointer.
#[no_mangle]
pub unsafe extern "C" fn qdist_graph_from_adjacency(
    adjacency: *const QdistMatrix,
    allow_loops: bool,
    out: *mut *mut QdistGraph,
) -> QdistStatus {
    guarded(|| {
        if adjacency.is_null() {
            return null_arg("adjacency");
        }
        if out.is_null() {
            return null_arg("out");
        }
        match Graph::from_adjacency((*adjacency).0.clone(), allow_loops) {
            Ok(graph) => {
                *out = Box::into_raw(Box::new(QdistGraph(graph)));
                QdistStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// The polarity graph of the projective plane over GF(p), `p` prime:
/// `p^2 + p + 1` vertices, degrees `p` and `p + 1`, no 4-cycles.
///
/// # Safety
/// `out` must be writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn qdist_polarity_graph(p: u64, out: *mut *mut QdistGraph) -> QdistStatus {
    guarded(|| {
        if out.is_null() {
            return null_arg("out");
        }
        match polarity_graph(p) {
            Ok(graph) => {
                *out = Box::into_raw(Box::new(QdistGraph(graph)));
                QdistStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qdist_graph_n(graph: *const QdistGraph) -> usize {
    if graph.is_null() {
        return 0;
    }
    (*graph).0.n()
}

/// The graph code `[I | A]` of the graph's adjacency matrix, written to
/// `*out` as a `[2n, n]` linear code.
///
/// # Safety
/// `graph` must be a live handle and `out` writable storage for one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn qdist_graph_code(
    graph: *const QdistGraph,
    out: *mut *mut QdistCode,
) -> QdistStatus {
    guarded(|| {
        if graph.is_null() {
            return null_arg("graph");
        }
        if out.is_null() {
            return null_arg("out");
        }
        *out = Box::into_raw(Box::new(QdistCode(graph_code(&(*graph).0))));
        QdistStatus::Ok
    })
}

/// Graph state distance: the least `wt(x OR Ax)` over nonzero `x`.  The
/// optional witness is a minimizing `x` (its own weight may be smaller
/// than the distance).
///
/// # Safety
/// `graph` must be a live handle, `out_distance` writable storage for one
/// `uint64_t`, and `out_witness` null or writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn qdist_graph_state_distance(
    graph: *const QdistGraph,
    out_distance: *mut u64,
    out_witness: *mut *mut c_char,
) -> QdistStatus {
    guarded(|| {
        if graph.is_null() {
            return null_arg("graph");
        }
        write_distance(graph_state_distance(&(*graph).0), out_distance, out_witness)
    })
}

/// X-type graph state distance: the least weight of a nonzero kernel
/// vector of the adjacency matrix, or [`QDIST_DISTANCE_INFINITE`] when the
/// kernel is trivial.
///
/// # Safety
/// `graph` must be a live handle, `out_distance` writable storage for one
/// `uint64_t`, and `out_witness` null or writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn qdist_graph_state_x_distance(
    graph: *const QdistGraph,
    out_distance: *mut u64,
    out_witness: *mut *mut c_char,
) -> QdistStatus {
    guarded(|| {
        if graph.is_null() {
            return null_arg("graph");
        }
        write_distance(
            graph_state_x_distance(&(*graph).0),
            out_distance,
            out_witness,
        )
    })
}

/// Releases a graph handle.  A null handle is a no-op.
///
/// # Safety
/// `graph` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qdist_graph_free(graph: *mut QdistGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HAMMING: &str = "3 7\n0001111\n0110011\n1010101\n";

    unsafe fn parsed(text: &str) -> *mut QdistMatrix {
        let text = CString::new(text).unwrap();
        let mut out = std::ptr::null_mut();
        assert_eq!(qdist_matrix_parse(text.as_ptr(), &mut out), QdistStatus::Ok);
        out
    }

    unsafe fn owned(s: *mut c_char) -> String {
        assert!(!s.is_null());
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        qdist_string_free(s);
        text
    }

    #[test]
    fn matrices_round_trip_and_expose_entries() {
        unsafe {
            let m = parsed("2 3\n101\n010\n");
            assert_eq!(qdist_matrix_rows(m), 2);
            assert_eq!(qdist_matrix_cols(m), 3);
            assert!(qdist_matrix_get(m, 0, 0));
            assert!(!qdist_matrix_get(m, 1, 2));
            assert!(!qdist_matrix_get(m, 9, 9));
            let mut text = std::ptr::null_mut();
            assert_eq!(qdist_matrix_format(m, &mut text), QdistStatus::Ok);
            assert_eq!(owned(text), "2 3\n101\n010\n");
            qdist_matrix_free(m);
        }
    }

    #[test]
    fn hamming_distance_and_witness_cross_the_boundary() {
        unsafe {
            let h = parsed(HAMMING);
            let mut code = std::ptr::null_mut();
            assert_eq!(qdist_code_from_parity_check(h, &mut code), QdistStatus::Ok);
            qdist_matrix_free(h);
            assert_eq!(qdist_code_n(code), 7);
            assert_eq!(qdist_code_k(code), 4);

            let mut d = 0u64;
            let mut witness = std::ptr::null_mut();
            assert_eq!(
                qdist_code_distance(code, &mut d, &mut witness),
                QdistStatus::Ok
            );
            assert_eq!(d, 3);
            let w = owned(witness);
            assert_eq!(w.len(), 7);
            assert_eq!(w.chars().filter(|&c| c == '1').count(), 3);

            let mut dual = std::ptr::null_mut();
            assert_eq!(qdist_code_dual(code, &mut dual), QdistStatus::Ok);
            let mut dd = 0u64;
            assert_eq!(
                qdist_code_distance(dual, &mut dd, std::ptr::null_mut()),
                QdistStatus::Ok
            );
            assert_eq!(dd, 4);
            qdist_code_free(dual);
            qdist_code_free(code);
        }
    }

    #[test]
    fn the_zero_code_reports_an_infinite_distance() {
        unsafe {
            let h = parsed("2 2\n10\n01\n");
            let mut code = std::ptr::null_mut();
            assert_eq!(qdist_code_from_parity_check(h, &mut code), QdistStatus::Ok);
            qdist_matrix_free(h);
            let mut d = 0u64;
            let mut witness = std::ptr::null_mut::<c_char>();
            assert_eq!(
                qdist_code_distance(code, &mut d, &mut witness),
                QdistStatus::Ok
            );
            assert_eq!(d, QDIST_DISTANCE_INFINITE);
            assert!(witness.is_null());
            qdist_code_free(code);
        }
    }

    #[test]
    fn hgp_builds_the_expected_quantum_code() {
        unsafe {
            let h1 = parsed(HAMMING);
            let h2 = parsed("2 3\n110\n011\n");
            let mut css = std::ptr::null_mut();
            assert_eq!(qdist_hgp(h1, h2, &mut css), QdistStatus::Ok);
            qdist_matrix_free(h1);
            qdist_matrix_free(h2);
            assert_eq!(qdist_css_n(css), 27);
            assert_eq!(qdist_css_k(css), 4);
            let mut d = 0u64;
            assert_eq!(
                qdist_css_distance(css, &mut d, std::ptr::null_mut()),
                QdistStatus::Ok
            );
            assert_eq!(d, 3);
            qdist_css_free(css);
        }
    }

    #[test]
    fn graph_state_distances_match_the_library_oracles() {
        unsafe {
            // K4 minus the (2, 3) edge: graph state distance 2.
            let adj = parsed("4 4\n0111\n1011\n1100\n1100\n");
            let mut graph = std::ptr::null_mut();
            assert_eq!(
                qdist_graph_from_adjacency(adj, false, &mut graph),
                QdistStatus::Ok
            );
            qdist_matrix_free(adj);
            let mut d = 0u64;
            assert_eq!(
                qdist_graph_state_distance(graph, &mut d, std::ptr::null_mut()),
                QdistStatus::Ok
            );
            assert_eq!(d, 2);
            qdist_graph_free(graph);

            // The all-ones 2x2 adjacency (loops allowed) has kernel {11}.
            let adj = parsed("2 2\n11\n11\n");
            let mut graph = std::ptr::null_mut();
            assert_eq!(
                qdist_graph_from_adjacency(adj, true, &mut graph),
                QdistStatus::Ok
            );
            qdist_matrix_free(adj);
            let mut witness = std::ptr::null_mut();
            assert_eq!(
                qdist_graph_state_x_distance(graph, &mut d, &mut witness),
                QdistStatus::Ok
            );
            assert_eq!(d, 2);
            assert_eq!(owned(witness), "11");
            qdist_graph_free(graph);
        }
    }

    #[test]
    fn polarity_graph_code_has_the_frozen_distance() {
        unsafe {
            let mut graph = std::ptr::null_mut();
            assert_eq!(qdist_polarity_graph(3, &mut graph), QdistStatus::Ok);
            assert_eq!(qdist_graph_n(graph), 13);
            let mut code = std::ptr::null_mut();
            assert_eq!(qdist_graph_code(graph, &mut code), QdistStatus::Ok);
            qdist_graph_free(graph);
            assert_eq!(qdist_code_n(code), 26);
            assert_eq!(qdist_code_k(code), 13);
            let mut d = 0u64;
            assert_eq!(
                qdist_code_distance(code, &mut d, std::ptr::null_mut()),
                QdistStatus::Ok
            );
            assert_eq!(d, 4);
            qdist_code_free(code);
        }
    }

    #[test]
    fn failures_set_statuses_and_the_thread_local_message() {
        unsafe {
            // Null arguments.
            let mut out = std::ptr::null_mut();
            assert_eq!(
                qdist_matrix_parse(std::ptr::null(), &mut out),
                QdistStatus::NullArgument
            );
            assert!(owned_error().contains("null"));

            // Malformed text, with its line number.
            let bad = CString::new("not a matrix").unwrap();
            assert_eq!(
                qdist_matrix_parse(bad.as_ptr(), &mut out),
                QdistStatus::Format
            );
            assert!(owned_error().contains("line 1"));

            // Non-UTF-8 text.
            let bytes = [0xFFu8, 0x00];
            assert_eq!(
                qdist_matrix_parse(bytes.as_ptr().cast(), &mut out),
                QdistStatus::InvalidUtf8
            );

            // A composite where a prime is required.
            let mut graph = std::ptr::null_mut();
            assert_eq!(qdist_polarity_graph(4, &mut graph), QdistStatus::Invalid);
            assert!(owned_error().contains("not prime"));

            // Non-orthogonal CSS pair.
            let hx = parsed("1 2\n11\n");
            let hz = parsed("1 2\n10\n");
            let mut css = std::ptr::null_mut();
            assert_eq!(qdist_css_from_pair(hx, hz, &mut css), QdistStatus::Invalid);
            assert!(owned_error().contains("orthogonal"));
            qdist_matrix_free(hx);
            qdist_matrix_free(hz);
        }
    }

    fn owned_error() -> String {
        let ptr = qdist_last_error();
        assert!(!ptr.is_null());
        unsafe { CStr::from_ptr(ptr).to_str().unwrap().to_owned() }
    }
}
