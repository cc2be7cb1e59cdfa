// Copyright 2026 The pairdecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! C ABI over `pairdecomp`.
//!
//! Every fallible function returns a [`PdStatus`]; on failure a message is
//! available from [`pd_last_error_message`] on the same thread. Handles are
//! opaque, owned by the caller once returned, and released with the matching
//! `*_free`. Indices are 0-based. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use pairdecomp::io::{parse_graph, parse_profile};
use pairdecomp::pairspace::{decompose, vertex_scores, PairwiseVector};
use pairdecomp::tsp::{
    exact_hamiltonian, heuristic_hamiltonian, lower_bound_symmetric, path_length, CostGraph,
    Objective,
};
use pairdecomp::voting::{borda_direct, dodgson_scores, margins_from_profile, Profile};
use pairdecomp::{Error, Rational};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Index = 4,
    Domain = 5,
    Capacity = 6,
    Mode = 7,
    /// A value does not fit in 64-bit numerator and denominator.
    Overflow = 8,
    /// The caller's output buffer is shorter than required.
    BufferTooSmall = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdMethod {
    Exact = 0,
    Heuristic = 1,
}

/// `numer / denom` in lowest terms with `denom > 0`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PdRational {
    pub numer: i64,
    pub denom: i64,
}

/// Antisymmetric pairwise vector.
pub struct PdVector(PairwiseVector);

/// Ranked ballot profile.
pub struct PdProfile(Profile);

/// Complete cost graph.
pub struct PdGraph(CostGraph);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: PdStatus, msg: &str) -> PdStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> PdStatus {
    let status = match e {
        Error::Index(_) => PdStatus::Index,
        Error::Domain(_) => PdStatus::Domain,
        Error::Capacity { .. } => PdStatus::Capacity,
        Error::Mode { .. } => PdStatus::Mode,
        Error::Parse { .. } => PdStatus::Parse,
    };
    fail(status, &e.to_string())
}

/// Runs `f`, turning panics into `PdStatus::Panic`.
fn guard(f: impl FnOnce() -> Result<(), PdStatus>) -> PdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            PdStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(PdStatus::Panic, &msg)
        }
    }
}

fn lift<T>(r: pairdecomp::Result<T>) -> Result<T, PdStatus> {
    r.map_err(from_error)
}

fn to_c(r: Rational) -> Result<PdRational, PdStatus> {
    match (i64::try_from(r.numer()), i64::try_from(r.denom())) {
        (Ok(numer), Ok(denom)) => Ok(PdRational { numer, denom }),
        _ => Err(fail(
            PdStatus::Overflow,
            &format!("{r} does not fit in 64 bits"),
        )),
    }
}

fn from_c(r: PdRational) -> Result<Rational, PdStatus> {
    if r.denom == 0 {
        return Err(fail(PdStatus::Domain, "zero denominator"));
    }
    Ok(Rational::new(r.numer as i128, r.denom as i128))
}

unsafe fn text<'a>(ptr: *const c_char) -> Result<&'a str, PdStatus> {
    if ptr.is_null() {
        return Err(fail(PdStatus::NullPointer, "text is null"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(PdStatus::InvalidUtf8, "text is not UTF-8"))
}

unsafe fn handle<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, PdStatus> {
    ptr.as_ref()
        .ok_or_else(|| fail(PdStatus::NullPointer, &format!("{what} is null")))
}

unsafe fn out_slot<'a, T>(ptr: *mut T, what: &str) -> Result<&'a mut T, PdStatus> {
    ptr.as_mut()
        .ok_or_else(|| fail(PdStatus::NullPointer, &format!("{what} is null")))
}

unsafe fn write_all<T: Copy>(out: *mut T, len: usize, values: &[T]) -> Result<(), PdStatus> {
    if out.is_null() {
        return Err(fail(PdStatus::NullPointer, "output buffer is null"));
    }
    if len < values.len() {
        return Err(fail(
            PdStatus::BufferTooSmall,
            &format!("output buffer holds {len}, need {}", values.len()),
        ));
    }
    std::ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    Ok(())
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Message for the most recent failure on this thread; empty after a
/// success. Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn pd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a vector on `n` alternatives from `len = n(n-1)/2` entries
/// `d(i, j)`, `i < j`, in lexicographic pair order.
///
/// # Safety
/// `entries` must point to `len` readable values and `out` to a writable slot.
#[no_mangle]
pub unsafe extern "C" fn pd_vector_new(
    n: usize,
    entries: *const PdRational,
    len: usize,
    out: *mut *mut PdVector,
) -> PdStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        if entries.is_null() {
            return Err(fail(PdStatus::NullPointer, "entries is null"));
        }
        let values = std::slice::from_raw_parts(entries, len)
            .iter()
            .map(|&r| from_c(r))
            .collect::<Result<Vec<_>, _>>()?;
        *out = boxed(PdVector(lift(PairwiseVector::from_entries(n, values))?));
        Ok(())
    })
}

/// # Safety
/// `v` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pd_vector_free(v: *mut PdVector) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Alternative count, or 0 for a null handle.
///
/// # Safety
/// `v` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_vector_n(v: *const PdVector) -> usize {
    v.as_ref().map_or(0, |v| v.0.n())
}

/// `d(i, j)` for any distinct `i, j`.
///
/// # Safety
/// `v` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_vector_value(
    v: *const PdVector,
    i: usize,
    j: usize,
    out: *mut PdRational,
) -> PdStatus {
    guard(|| {
        let v = &handle(v, "vector")?.0;
        let out = out_slot(out, "out")?;
        if i >= v.n() || j >= v.n() || i == j {
            return Err(fail(
                PdStatus::Index,
                &format!("pair ({i}, {j}) invalid for n = {}", v.n()),
            ));
        }
        *out = to_c(v.value(i, j))?;
        Ok(())
    })
}

/// Vertex scores `S_j = sum_k d(j, k)` into `out[0..n]`.
///
/// # Safety
/// `v` must be a live handle and `out` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn pd_vector_scores(
    v: *const PdVector,
    out: *mut PdRational,
    len: usize,
) -> PdStatus {
    guard(|| {
        let v = &handle(v, "vector")?.0;
        let scores = vertex_scores(v)
            .into_iter()
            .map(to_c)
            .collect::<Result<Vec<_>, _>>()?;
        write_all(out, len, &scores)
    })
}

/// Orthogonal split into strongly transitive and cyclic parts; both new
/// handles belong to the caller.
///
/// # Safety
/// `v` must be a live handle; `st_out` and `cyclic_out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_vector_decompose(
    v: *const PdVector,
    st_out: *mut *mut PdVector,
    cyclic_out: *mut *mut PdVector,
) -> PdStatus {
    guard(|| {
        let v = &handle(v, "vector")?.0;
        let st_out = out_slot(st_out, "st_out")?;
        let cyclic_out = out_slot(cyclic_out, "cyclic_out")?;
        let dec = decompose(v);
        *st_out = boxed(PdVector(dec.st));
        *cyclic_out = boxed(PdVector(dec.cyclic));
        Ok(())
    })
}

/// Parses profile text (`COUNT: NAME > ... > NAME` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_profile_parse(
    text_ptr: *const c_char,
    out: *mut *mut PdProfile,
) -> PdStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let np = lift(parse_profile(text(text_ptr)?))?;
        *out = boxed(PdProfile(np.profile));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pd_profile_free(p: *mut PdProfile) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Alternative count, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_profile_alternatives(p: *const PdProfile) -> usize {
    p.as_ref().map_or(0, |p| p.0.n())
}

/// Voter count, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_profile_voters(p: *const PdProfile) -> u64 {
    p.as_ref().map_or(0, |p| p.0.voters())
}

/// Margins `d(i, j) = support(i over j) - N/2` as a new vector handle.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_profile_margins(
    p: *const PdProfile,
    out: *mut *mut PdVector,
) -> PdStatus {
    guard(|| {
        let p = &handle(p, "profile")?.0;
        *out_slot(out, "out")? = boxed(PdVector(margins_from_profile(p)));
        Ok(())
    })
}

/// Borda tallies into `out[0..n]`.
///
/// # Safety
/// `p` must be a live handle and `out` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn pd_profile_borda(
    p: *const PdProfile,
    out: *mut PdRational,
    len: usize,
) -> PdStatus {
    guard(|| {
        let p = &handle(p, "profile")?.0;
        let t = borda_direct(p)
            .tallies
            .into_iter()
            .map(to_c)
            .collect::<Result<Vec<_>, _>>()?;
        write_all(out, len, &t)
    })
}

/// Dodgson scores (adjacent swaps) into `out[0..n]`.
///
/// # Safety
/// `p` must be a live handle and `out` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn pd_profile_dodgson(
    p: *const PdProfile,
    out: *mut u64,
    len: usize,
) -> PdStatus {
    guard(|| {
        let p = &handle(p, "profile")?.0;
        let r = lift(dodgson_scores(p))?;
        write_all(out, len, &r.scores)
    })
}

/// Parses graph text (`asym N` or `sym N`, then `I J W` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_parse(
    text_ptr: *const c_char,
    out: *mut *mut PdGraph,
) -> PdStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        *out = boxed(PdGraph(lift(parse_graph(text(text_ptr)?))?));
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_free(g: *mut PdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_n(g: *const PdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Length of the walk `vertices[0..len]`, closed back to the start when
/// `closed` is true.
///
/// # Safety
/// `g` must be a live handle, `vertices` readable for `len`, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_path_length(
    g: *const PdGraph,
    vertices: *const usize,
    len: usize,
    closed: bool,
    out: *mut PdRational,
) -> PdStatus {
    guard(|| {
        let g = &handle(g, "graph")?.0;
        let out = out_slot(out, "out")?;
        if vertices.is_null() {
            return Err(fail(PdStatus::NullPointer, "vertices is null"));
        }
        let walk = std::slice::from_raw_parts(vertices, len);
        *out = to_c(lift(path_length(g, walk, closed))?)?;
        Ok(())
    })
}

/// Hamiltonian circuit by `method`; writes the `n` tour vertices (starting
/// at 0) into `tour_out` and the length into `length_out`.
///
/// # Safety
/// `g` must be a live handle, `tour_out` must hold `tour_len` values and
/// `length_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_circuit(
    g: *const PdGraph,
    method: PdMethod,
    longest: bool,
    tour_out: *mut usize,
    tour_len: usize,
    length_out: *mut PdRational,
) -> PdStatus {
    guard(|| {
        let g = &handle(g, "graph")?.0;
        let length_out = out_slot(length_out, "length_out")?;
        let objective = if longest {
            Objective::Longest
        } else {
            Objective::Shortest
        };
        let r = lift(match method {
            PdMethod::Exact => exact_hamiltonian(g, objective),
            PdMethod::Heuristic => heuristic_hamiltonian(g, objective),
        })?;
        write_all(tour_out, tour_len, &r.tour)?;
        *length_out = to_c(r.length)?;
        Ok(())
    })
}

/// Lower bound on the shortest circuit of a symmetric graph.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_lower_bound(g: *const PdGraph, out: *mut PdRational) -> PdStatus {
    guard(|| {
        let g = &handle(g, "graph")?.0;
        let out = out_slot(out, "out")?;
        *out = to_c(lift(lower_bound_symmetric(g))?)?;
        Ok(())
    })
}
