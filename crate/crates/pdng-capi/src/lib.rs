//! C ABI for the graph toolkit: opaque graph handles, integer status codes,
//! caller-freed strings. Vertex sets cross the boundary as u64 bitmasks
//! (bit v = vertex v), which covers the full supported order range (<= 62).
//!
//! Ownership rules: every `*mut PdngGraph` produced here is freed with
//! `pdng_graph_free`, every `*mut c_char` with `pdng_string_free`. Passing
//! null to a free function is a no-op; passing null anywhere else yields
//! `PDNG_STATUS_NULL_ARGUMENT`.

use pdng::graph::Graph;
use pdng::graph6::{emit_graph6, parse_graph6};
use pdng::ng::{ng_report, NGParams};
use pdng::solvers;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdngStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// The graph6 input did not parse.
    ParseError = 2,
    /// A parameter was out of range (order > 62, bad endpoint, loop edge).
    InvalidArgument = 3,
    /// Internal failure; a bug in this library.
    Internal = 4,
}

/// Opaque graph handle.
pub struct PdngGraph {
    inner: Graph,
}

fn graph_out(out: *mut *mut PdngGraph, g: Graph) -> PdngStatus {
    unsafe { *out = Box::into_raw(Box::new(PdngGraph { inner: g })) };
    PdngStatus::Ok
}

fn string_out(out: *mut *mut c_char, s: String) -> PdngStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            PdngStatus::Ok
        }
        Err(_) => PdngStatus::Internal,
    }
}

/// Parse one graph6 line (strict: padding bits must be zero) into a new
/// graph handle.
#[no_mangle]
pub extern "C" fn pdng_graph_from_graph6(
    line: *const c_char,
    out: *mut *mut PdngGraph,
) -> PdngStatus {
    if line.is_null() || out.is_null() {
        return PdngStatus::NullArgument;
    }
    let text = match unsafe { CStr::from_ptr(line) }.to_str() {
        Ok(t) => t,
        Err(_) => return PdngStatus::ParseError,
    };
    match parse_graph6(text.trim(), true) {
        Ok(g) => graph_out(out, g),
        Err(_) => PdngStatus::ParseError,
    }
}

/// Build a graph on `n` vertices from `num_edges` pairs laid out flat as
/// u0,v0,u1,v1,... Duplicate edges are fine; loops are rejected.
#[no_mangle]
pub extern "C" fn pdng_graph_build(
    n: u32,
    edges: *const u32,
    num_edges: usize,
    out: *mut *mut PdngGraph,
) -> PdngStatus {
    if out.is_null() || (edges.is_null() && num_edges > 0) {
        return PdngStatus::NullArgument;
    }
    let flat = if num_edges == 0 {
        &[][..]
    } else {
        unsafe { std::slice::from_raw_parts(edges, num_edges * 2) }
    };
    let pairs: Vec<(usize, usize)> = flat
        .chunks_exact(2)
        .map(|e| (e[0] as usize, e[1] as usize))
        .collect();
    match Graph::build(n as usize, &pairs) {
        Ok(g) => graph_out(out, g),
        Err(_) => PdngStatus::InvalidArgument,
    }
}

/// Free a graph handle. Null is a no-op.
#[no_mangle]
pub extern "C" fn pdng_graph_free(g: *mut PdngGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Number of vertices, or -1 if the handle is null.
#[no_mangle]
pub extern "C" fn pdng_graph_order(g: *const PdngGraph) -> i32 {
    if g.is_null() {
        return -1;
    }
    unsafe { &*g }.inner.order() as i32
}

/// Number of edges, or -1 if the handle is null.
#[no_mangle]
pub extern "C" fn pdng_graph_size(g: *const PdngGraph) -> i32 {
    if g.is_null() {
        return -1;
    }
    unsafe { &*g }.inner.size() as i32
}

/// New handle holding the complement graph.
#[no_mangle]
pub extern "C" fn pdng_graph_complement(
    g: *const PdngGraph,
    out: *mut *mut PdngGraph,
) -> PdngStatus {
    if g.is_null() || out.is_null() {
        return PdngStatus::NullArgument;
    }
    let complement = unsafe { &*g }.inner.complement();
    graph_out(out, complement)
}

/// Canonical-size graph6 encoding of the graph (caller frees).
#[no_mangle]
pub extern "C" fn pdng_graph_to_graph6(
    g: *const PdngGraph,
    out: *mut *mut c_char,
) -> PdngStatus {
    if g.is_null() || out.is_null() {
        return PdngStatus::NullArgument;
    }
    string_out(out, emit_graph6(&unsafe { &*g }.inner))
}

type Solver = fn(&Graph) -> solvers::SolveResult;

fn solve_into(
    g: *const PdngGraph,
    value: *mut u32,
    witness: *mut u64,
    solver: Solver,
) -> PdngStatus {
    if g.is_null() || value.is_null() {
        return PdngStatus::NullArgument;
    }
    let graph = &unsafe { &*g }.inner;
    match catch_unwind(AssertUnwindSafe(|| solver(graph))) {
        Ok(result) => {
            unsafe { *value = result.value as u32 };
            if !witness.is_null() {
                unsafe { *witness = result.witness.0 };
            }
            PdngStatus::Ok
        }
        Err(_) => PdngStatus::Internal,
    }
}

/// Exact power domination number; `witness` (optional) receives one optimal
/// set as a bitmask.
#[no_mangle]
pub extern "C" fn pdng_gamma_p(
    g: *const PdngGraph,
    value: *mut u32,
    witness: *mut u64,
) -> PdngStatus {
    solve_into(g, value, witness, solvers::gamma_p)
}

/// Exact domination number; `witness` (optional) receives one optimal set
/// as a bitmask.
#[no_mangle]
pub extern "C" fn pdng_gamma(
    g: *const PdngGraph,
    value: *mut u32,
    witness: *mut u64,
) -> PdngStatus {
    solve_into(g, value, witness, solvers::gamma)
}

/// Exact zero forcing number; `witness` (optional) receives one optimal set
/// as a bitmask.
#[no_mangle]
pub extern "C" fn pdng_zero_forcing(
    g: *const PdngGraph,
    value: *mut u32,
    witness: *mut u64,
) -> PdngStatus {
    solve_into(g, value, witness, solvers::zero_forcing)
}

/// Bound-check report for the graph against its complement, as a JSON
/// object (caller frees). `with_gamma` / `with_zero_forcing` add those
/// parameters; `deep_structure` enables the connectivity- and
/// planarity-dependent checks.
#[no_mangle]
pub extern "C" fn pdng_ng_report_json(
    g: *const PdngGraph,
    with_gamma: bool,
    with_zero_forcing: bool,
    deep_structure: bool,
    out: *mut *mut c_char,
) -> PdngStatus {
    if g.is_null() || out.is_null() {
        return PdngStatus::NullArgument;
    }
    let graph = &unsafe { &*g }.inner;
    let params = NGParams {
        with_gamma,
        with_zero_forcing,
        deep_structure,
    };
    match catch_unwind(AssertUnwindSafe(|| ng_report(graph, params))) {
        Ok(report) => match serde_json_string(&report) {
            Some(json) => string_out(out, json),
            None => PdngStatus::Internal,
        },
        Err(_) => PdngStatus::Internal,
    }
}

fn serde_json_string(report: &pdng::ng::NGReport) -> Option<String> {
    serde_json::to_string(report).ok()
}

/// Free a string returned by this library. Null is a no-op.
#[no_mangle]
pub extern "C" fn pdng_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
