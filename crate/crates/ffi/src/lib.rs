//! C ABI for `dice-entropy`.
//!
//! Objects cross the boundary as opaque handles (`DiceHypergraph`, `DicePmf`) created by
//! `dice_*` constructors and released with the matching `*_free`. Every fallible function
//! returns a [`DiceStatus`] and writes its result through an out-pointer; on failure
//! [`dice_last_error`] describes what went wrong on the calling thread. Strings returned
//! through `char **` are owned by the caller and released with [`dice_string_free`].
//!
//! The header `include/dice_entropy.h` is generated from this file by the build script.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dice_entropy::closed_form::{binomial_even_pmf, cycle_colour_pmf};
use dice_entropy::entropy_bounds::{cycle_lower_bound, massey_bound, verify_bounds, vertex_count_bound};
use dice_entropy::exact_dist::{
    exact_moments, exact_pmf, exact_pmf_enumeration, exact_pmf_inclusion_exclusion, monte_carlo_pmf,
};
use dice_entropy::hypergraph::{canonical_form, parse_hypergraph, SpecialKind};
use dice_entropy::search::maximize_entropy;
use dice_entropy::{Error, Hypergraph, Pmf};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiceStatus {
    Ok = 0,
    /// Malformed hypergraph or out-of-range parameter.
    InvalidInput = 1,
    /// Instance exceeds a size cap or enumeration budget.
    CapExceeded = 2,
    Io = 3,
    NullPointer = 4,
    /// Text argument is not valid UTF-8.
    Utf8 = 5,
    /// Internal panic caught at the boundary.
    Panic = 6,
}

/// Exact engine selection for [`dice_pmf_exact`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiceEngine {
    /// Cheapest exact engine that accepts the instance.
    Auto = 0,
    Enumerate = 1,
    InclusionExclusion = 2,
}

/// Built-in special graphs for [`dice_hypergraph_special`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiceSpecial {
    /// Perfect matching with every edge doubled (even `n`).
    DoubleEdges = 0,
    /// Star centred at vertex 0 plus the edge `{1, 2}`.
    StarPlusEdge = 1,
}

/// Opaque hypergraph handle.
pub struct DiceHypergraph(Hypergraph);

/// Opaque exact probability mass function handle.
pub struct DicePmf(Pmf);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> DiceStatus {
    match e {
        Error::Io(_) => DiceStatus::Io,
        e if e.is_cap() => DiceStatus::CapExceeded,
        _ => DiceStatus::InvalidInput,
    }
}

enum Failure {
    Core(Error),
    Null(&'static str),
    Utf8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> DiceStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DiceStatus::Ok,
        Ok(Err(Failure::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("null pointer passed as {what}"));
            DiceStatus::NullPointer
        }
        Ok(Err(Failure::Utf8)) => {
            set_error("text argument is not valid UTF-8".into());
            DiceStatus::Utf8
        }
        Err(_) => {
            set_error("internal panic".into());
            DiceStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure::Utf8)?;
    write(out, c.into_raw())
}

unsafe fn write_hypergraph(out: *mut *mut DiceHypergraph, h: Hypergraph) -> Result<(), Failure> {
    write(out, Box::into_raw(Box::new(DiceHypergraph(h))))
}

unsafe fn write_pmf(out: *mut *mut DicePmf, p: Pmf) -> Result<(), Failure> {
    write(out, Box::into_raw(Box::new(DicePmf(p))))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serializes")
}

/// Message for the last failed call on this thread, or NULL. Valid until the next failing
/// call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn dice_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn dice_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a hypergraph from `m * r` vertex indices laid out edge after edge.
///
/// # Safety
/// `vertices` must point to `m * r` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_hypergraph_new(
    n: usize,
    r: usize,
    vertices: *const usize,
    m: usize,
    out: *mut *mut DiceHypergraph,
) -> DiceStatus {
    guard(|| {
        if vertices.is_null() && m > 0 {
            return Err(Failure::Null("vertices"));
        }
        let len = m
            .checked_mul(r)
            .ok_or(Error::InvalidParameter("m * r overflows".into()))?;
        let flat = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(vertices, len)
        };
        let edges = if r == 0 {
            Vec::new()
        } else {
            flat.chunks(r).map(<[usize]>::to_vec).collect()
        };
        write_hypergraph(out, Hypergraph::new(n, r, edges)?)
    })
}

/// Parses the text (or JSON) hypergraph format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_hypergraph_parse(text: *const c_char, out: *mut *mut DiceHypergraph) -> DiceStatus {
    guard(|| {
        if text.is_null() {
            return Err(Failure::Null("text"));
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| Failure::Utf8)?;
        write_hypergraph(out, parse_hypergraph(s)?)
    })
}

/// The `n`-cycle, `n >= 3`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_hypergraph_cycle(n: usize, out: *mut *mut DiceHypergraph) -> DiceStatus {
    guard(|| write_hypergraph(out, Hypergraph::cycle(n)?))
}

/// The circular hypergraph with edges `{i, ..., i + r - 1} mod n`, `n > r >= 2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_hypergraph_circular(n: usize, r: usize, out: *mut *mut DiceHypergraph) -> DiceStatus {
    guard(|| write_hypergraph(out, Hypergraph::circular(n, r)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_hypergraph_special(
    n: usize,
    kind: DiceSpecial,
    out: *mut *mut DiceHypergraph,
) -> DiceStatus {
    let kind = match kind {
        DiceSpecial::DoubleEdges => SpecialKind::DoubleEdges,
        DiceSpecial::StarPlusEdge => SpecialKind::StarPlusEdge,
    };
    guard(|| write_hypergraph(out, Hypergraph::special(n, kind)?))
}

/// Releases a hypergraph. NULL is ignored.
///
/// # Safety
/// `h` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn dice_hypergraph_free(h: *mut DiceHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Vertex count; 0 for NULL.
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dice_hypergraph_n(h: *const DiceHypergraph) -> usize {
    h.as_ref().map_or(0, |h| h.0.n())
}

/// Edge count; 0 for NULL.
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dice_hypergraph_m(h: *const DiceHypergraph) -> usize {
    h.as_ref().map_or(0, |h| h.0.m())
}

/// Edge size; 0 for NULL.
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dice_hypergraph_r(h: *const DiceHypergraph) -> usize {
    h.as_ref().map_or(0, |h| h.0.r())
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_hypergraph_degree(h: *const DiceHypergraph, v: usize, out: *mut usize) -> DiceStatus {
    guard(|| write(out, deref(h, "h")?.0.degree(v)?))
}

/// Max degree minus min degree.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_hypergraph_degree_gap(h: *const DiceHypergraph, out: *mut usize) -> DiceStatus {
    guard(|| write(out, deref(h, "h")?.0.degree_gap()))
}

/// Isomorphism-invariant key such as `n4r2:01-01-23-23` (needs `n <= 8`).
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_hypergraph_canonical_key(h: *const DiceHypergraph, out: *mut *mut c_char) -> DiceStatus {
    guard(|| write_string(out, canonical_form(&deref(h, "h")?.0)?.to_string()))
}

/// Text serialization accepted by [`dice_hypergraph_parse`].
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_hypergraph_to_text(h: *const DiceHypergraph, out: *mut *mut c_char) -> DiceStatus {
    guard(|| write_string(out, deref(h, "h")?.0.to_text()))
}

/// Exact law of the number of hit vertices.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_pmf_exact(
    h: *const DiceHypergraph,
    engine: DiceEngine,
    out: *mut *mut DicePmf,
) -> DiceStatus {
    guard(|| {
        let h = &deref(h, "h")?.0;
        let p = match engine {
            DiceEngine::Auto => exact_pmf(h)?,
            DiceEngine::Enumerate => exact_pmf_enumeration(h)?,
            DiceEngine::InclusionExclusion => exact_pmf_inclusion_exclusion(h)?,
        };
        write_pmf(out, p)
    })
}

/// Closed-form law of the colour count of the `n`-cycle.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_pmf_cycle(n: u32, out: *mut *mut DicePmf) -> DiceStatus {
    guard(|| write_pmf(out, cycle_colour_pmf(n)?))
}

/// `Bin(n, 1/2)` conditioned on an even outcome.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_pmf_binomial_even(n: u32, out: *mut *mut DicePmf) -> DiceStatus {
    guard(|| write_pmf(out, binomial_even_pmf(n)?))
}

/// Releases a law. NULL is ignored.
///
/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn dice_pmf_free(p: *mut DicePmf) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of support points; 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dice_pmf_len(p: *const DicePmf) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Support point `i` (ascending) and its probability as a double.
///
/// # Safety
/// `p` must be a live handle; `x` and `prob` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_pmf_get(p: *const DicePmf, i: usize, x: *mut i64, prob: *mut f64) -> DiceStatus {
    guard(|| {
        let p = &deref(p, "p")?.0;
        if i >= p.len() {
            return Err(
                Error::InvalidParameter(format!("index {i} out of range for {} support points", p.len())).into(),
            );
        }
        write(x, p.support()[i])?;
        write(prob, p.float_probs()[i])
    })
}

/// Exact probability of support point `i` as `"num/den"`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_pmf_get_exact(p: *const DicePmf, i: usize, out: *mut *mut c_char) -> DiceStatus {
    guard(|| {
        let p = &deref(p, "p")?.0;
        let q = p
            .probs()
            .get(i)
            .ok_or_else(|| Error::InvalidParameter(format!("index {i} out of range for {} support points", p.len())))?;
        write_string(out, format!("{}/{}", q.numer(), q.denom()))
    })
}

/// Shannon entropy in bits.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_pmf_entropy(p: *const DicePmf, out: *mut f64) -> DiceStatus {
    guard(|| write(out, deref(p, "p")?.0.entropy()))
}

/// CSV `x,numerator,denominator,probability_float`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_pmf_to_csv(p: *const DicePmf, out: *mut *mut c_char) -> DiceStatus {
    guard(|| write_string(out, deref(p, "p")?.0.to_csv()))
}

/// Monte Carlo estimate of the law as JSON; reproducible given `seed`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_monte_carlo_json(
    h: *const DiceHypergraph,
    samples: u64,
    seed: u64,
    out: *mut *mut c_char,
) -> DiceStatus {
    guard(|| write_string(out, to_json(&monte_carlo_pmf(&deref(h, "h")?.0, samples, seed)?)))
}

/// Exact hit probabilities, mean and variance as JSON (rationals as `"num/den"`).
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_moments_json(h: *const DiceHypergraph, out: *mut *mut c_char) -> DiceStatus {
    guard(|| write_string(out, to_json(&exact_moments(&deref(h, "h")?.0))))
}

/// Exact entropy and variance against the upper bounds, as JSON.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_bounds_json(h: *const DiceHypergraph, out: *mut *mut c_char) -> DiceStatus {
    guard(|| write_string(out, to_json(&verify_bounds(&deref(h, "h")?.0)?)))
}

/// `1/2 log2(2 pi e (variance + 1/12))`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_massey_bound(variance: f64, out: *mut f64) -> DiceStatus {
    guard(|| write(out, massey_bound(variance)?))
}

/// `1/2 log2 n + 1/2 log2(pi e)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_vertex_count_bound(n: usize, out: *mut f64) -> DiceStatus {
    guard(|| write(out, vertex_count_bound(n)?))
}

/// Entropy lower bound for the `n`-cycle.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_cycle_lower_bound(n: usize, out: *mut f64) -> DiceStatus {
    guard(|| write(out, cycle_lower_bound(n)?))
}

/// Exhaustive entropy maximisation over all `(n, m, r)` multi-hypergraphs, as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dice_search_json(
    n: usize,
    m: usize,
    r: usize,
    up_to_iso: bool,
    top_k: usize,
    out: *mut *mut c_char,
) -> DiceStatus {
    guard(|| write_string(out, to_json(&maximize_entropy(n, m, r, up_to_iso, top_k)?)))
}
