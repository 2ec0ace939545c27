//! C ABI over `dompoly-core`.
//!
//! Every function returns a [`DpStatus`] and writes results through out
//! pointers. Graphs and profiles are opaque handles released with
//! [`dp_graph_free`] and [`dp_profile_free`]; strings returned by the library
//! are released with [`dp_string_free`]. After a non-OK status,
//! [`dp_last_error_message`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use dompoly_core::analysis::min_degree_condition_holds;
use dompoly_core::domination::{multipartite_profile, RecurrenceFamily};
use dompoly_core::report::profile_json;
use dompoly_core::{analyze_shape, brute_force_profile, DominationProfile, EnumConfig, Error, FamilySpec, Graph};

/// Opaque graph handle.
pub struct DpGraph(Graph);

/// Opaque domination profile handle.
pub struct DpProfile(DominationProfile);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed graph text, bad vertex, bad family parameters.
    InvalidInput = 3,
    /// Order above the enumeration cap or the 64-vertex limit.
    TooLarge = 4,
    /// Index outside `0..=n`.
    OutOfRange = 5,
    /// A coefficient does not fit in 64 bits; use the string accessor.
    Overflow = 6,
    /// The graph has no vertices.
    EmptyGraph = 7,
    /// A Rust panic was caught at the boundary. This is a bug.
    Panic = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DpFamily {
    Path = 0,
    Cycle = 1,
    /// `K_2` with a path hanging off one end; order at least 4.
    LGraph = 2,
    Complete = 3,
    /// `K_1` joined to `n` disjoint edges (order `2n + 1`).
    Friendship = 4,
}

/// Shape summary of a profile. `mode_min`/`mode_max` bound the mode set.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DpShape {
    pub unimodal: bool,
    pub logconcave: bool,
    pub mode_min: usize,
    pub mode_max: usize,
    /// Whether `lc_witness` holds a failing index.
    pub has_lc_witness: bool,
    pub lc_witness: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(DpStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::OrderOverflow(_) | Error::CapExceeded { .. } => DpStatus::TooLarge,
            Error::EmptyGraph => DpStatus::EmptyGraph,
            _ => DpStatus::InvalidInput,
        };
        Fail(status, e.to_string())
    }
}

fn fail(status: DpStatus, msg: impl Into<String>) -> Fail {
    Fail(status, msg.into())
}

/// Runs `f`, records any error and converts panics to [`DpStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> DpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            DpStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(&format!("panic: {msg}"));
            DpStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| fail(DpStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(fail(DpStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(fail(DpStatus::NullPointer, format!("{what} is null")));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library strings contain no nul bytes").into_raw()
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Message for the last failed call on this thread; empty after success.
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn dp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn dp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn dp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph6 string (orders up to 62).
///
/// # Safety
/// `text` must be a valid nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_graph_from_graph6(text: *const c_char, out: *mut *mut DpGraph) -> DpStatus {
    guard(|| {
        if text.is_null() {
            return Err(fail(DpStatus::NullPointer, "text is null"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| fail(DpStatus::InvalidUtf8, e.to_string()))?;
        let g = Graph::parse_graph6(text.trim())?;
        write(out, boxed(DpGraph(g)))
    })
}

/// Builds a graph on `n` vertices from `m` edges given as `2m` endpoints
/// `u0, v0, u1, v1, ...`.
///
/// # Safety
/// `endpoints` must point to `2 * m` readable values (may be null when `m` is 0).
#[no_mangle]
pub unsafe extern "C" fn dp_graph_from_edges(
    n: usize,
    endpoints: *const usize,
    m: usize,
    out: *mut *mut DpGraph,
) -> DpStatus {
    guard(|| {
        let len = m.checked_mul(2).ok_or_else(|| fail(DpStatus::InvalidInput, "edge count overflows"))?;
        let flat = slice(endpoints, len, "endpoints")?;
        let edges: Vec<(usize, usize)> = flat.chunks_exact(2).map(|e| (e[0], e[1])).collect();
        let g = Graph::from_edge_list(n, &edges)?;
        write(out, boxed(DpGraph(g)))
    })
}

/// Generates a named family member. For [`DpFamily::Friendship`], `n` is
/// the number of triangles.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_graph_family(family: DpFamily, n: usize, out: *mut *mut DpGraph) -> DpStatus {
    guard(|| {
        let g = match family {
            DpFamily::Path => FamilySpec::Path(n).generate()?,
            DpFamily::Cycle => FamilySpec::Cycle(n).generate()?,
            DpFamily::LGraph => FamilySpec::LGraph(n).generate()?,
            DpFamily::Complete => FamilySpec::Complete(n).generate()?,
            DpFamily::Friendship => FamilySpec::Complete(1)
                .generate()?
                .join(&FamilySpec::MatchingUnion(n).generate()?)?,
        };
        write(out, boxed(DpGraph(g)))
    })
}

/// Complete multipartite graph with the given part sizes.
///
/// # Safety
/// `parts` must point to `k` readable values.
#[no_mangle]
pub unsafe extern "C" fn dp_graph_complete_multipartite(
    parts: *const usize,
    k: usize,
    out: *mut *mut DpGraph,
) -> DpStatus {
    guard(|| {
        let parts = slice(parts, k, "parts")?.to_vec();
        let g = FamilySpec::CompleteMultipartite(parts).generate()?;
        write(out, boxed(DpGraph(g)))
    })
}

/// Frees a graph. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn dp_graph_free(g: *mut DpGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_graph_order(g: *const DpGraph, out: *mut usize) -> DpStatus {
    guard(|| write(out, deref(g, "graph")?.0.order()))
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_graph_edge_count(g: *const DpGraph, out: *mut usize) -> DpStatus {
    guard(|| write(out, deref(g, "graph")?.0.edge_count()))
}

/// Fails with [`DpStatus::EmptyGraph`] on the order-0 graph.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_graph_min_degree(g: *const DpGraph, out: *mut usize) -> DpStatus {
    guard(|| write(out, deref(g, "graph")?.0.min_degree()?))
}

/// Whether `2^delta >= n^2`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_graph_min_degree_condition(g: *const DpGraph, out: *mut bool) -> DpStatus {
    guard(|| write(out, min_degree_condition_holds(&deref(g, "graph")?.0)))
}

/// graph6 encoding; free the result with [`dp_string_free`].
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_graph_to_graph6(g: *const DpGraph, out: *mut *mut c_char) -> DpStatus {
    guard(|| {
        let text = deref(g, "graph")?.0.to_graph6()?;
        write(out, c_string(text))
    })
}

/// Counts dominating sets of every size by enumeration. `threads` 0 uses
/// the global pool; `cap` 0 uses the default cap of 26 (hard limit 40).
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_profile_brute_force(
    g: *const DpGraph,
    threads: usize,
    cap: usize,
    out: *mut *mut DpProfile,
) -> DpStatus {
    guard(|| {
        let g = deref(g, "graph")?;
        let mut cfg = EnumConfig::default();
        if threads > 0 {
            cfg.threads = Some(threads);
        }
        if cap > 0 {
            cfg.cap = cap;
        }
        let p = brute_force_profile(&g.0, &cfg)?;
        write(out, boxed(DpProfile(p)))
    })
}

/// Closed-form profile of the complete multipartite graph; no size cap
/// beyond 64 vertices.
///
/// # Safety
/// `parts` must point to `k` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_profile_multipartite(
    parts: *const usize,
    k: usize,
    out: *mut *mut DpProfile,
) -> DpStatus {
    guard(|| {
        let parts = slice(parts, k, "parts")?;
        write(out, boxed(DpProfile(multipartite_profile(parts)?)))
    })
}

/// Profile of a path, cycle or L graph of any order via the three-term
/// recurrence.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_profile_recurrence(family: DpFamily, n: usize, out: *mut *mut DpProfile) -> DpStatus {
    guard(|| {
        let fam = match family {
            DpFamily::Path => RecurrenceFamily::Path,
            DpFamily::Cycle => RecurrenceFamily::Cycle,
            DpFamily::LGraph => RecurrenceFamily::LGraph,
            other => return Err(fail(DpStatus::InvalidInput, format!("no recurrence for {other:?}"))),
        };
        if n < fam.min_order() {
            return Err(fail(DpStatus::InvalidInput, format!("{fam:?} needs n >= {}", fam.min_order())));
        }
        write(out, boxed(DpProfile(fam.profile(n)?)))
    })
}

/// Frees a profile. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn dp_profile_free(p: *mut DpProfile) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live profile handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_profile_order(p: *const DpProfile, out: *mut usize) -> DpStatus {
    guard(|| write(out, deref(p, "profile")?.0.order()))
}

/// Domination number.
///
/// # Safety
/// `p` must be a live profile handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_profile_gamma(p: *const DpProfile, out: *mut usize) -> DpStatus {
    guard(|| write(out, deref(p, "profile")?.0.gamma()))
}

fn index_check(p: &DominationProfile, i: usize) -> Result<(), Fail> {
    if i > p.order() {
        return Err(fail(DpStatus::OutOfRange, format!("index {i} exceeds order {}", p.order())));
    }
    Ok(())
}

/// `d_i` as a 64-bit integer, or [`DpStatus::Overflow`].
///
/// # Safety
/// `p` must be a live profile handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_profile_coefficient_u64(p: *const DpProfile, i: usize, out: *mut u64) -> DpStatus {
    guard(|| {
        let p = &deref(p, "profile")?.0;
        index_check(p, i)?;
        let d = u64::try_from(p.d(i)).map_err(|_| fail(DpStatus::Overflow, format!("d_{i} exceeds 64 bits")))?;
        write(out, d)
    })
}

/// `d_i` in decimal; free the result with [`dp_string_free`].
///
/// # Safety
/// `p` must be a live profile handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_profile_coefficient_string(p: *const DpProfile, i: usize, out: *mut *mut c_char) -> DpStatus {
    guard(|| {
        let p = &deref(p, "profile")?.0;
        index_check(p, i)?;
        write(out, c_string(p.d(i).to_string()))
    })
}

/// # Safety
/// `p` must be a live profile handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_profile_shape(p: *const DpProfile, out: *mut DpShape) -> DpStatus {
    guard(|| {
        let p = &deref(p, "profile")?.0;
        let s = analyze_shape(p.poly())?;
        let shape = DpShape {
            unimodal: s.unimodal,
            logconcave: s.logconcave,
            mode_min: s.mode_set.first().copied().unwrap_or(0),
            mode_max: s.mode_max,
            has_lc_witness: s.lc_witness.is_some(),
            lc_witness: s.lc_witness.unwrap_or(0),
        };
        write(out, shape)
    })
}

/// JSON object `{n, gamma, d, r}` with decimal-string coefficients; free
/// the result with [`dp_string_free`].
///
/// # Safety
/// `p` must be a live profile handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dp_profile_to_json(p: *const DpProfile, out: *mut *mut c_char) -> DpStatus {
    guard(|| {
        let p = &deref(p, "profile")?.0;
        write(out, c_string(profile_json(p).to_string()))
    })
}
