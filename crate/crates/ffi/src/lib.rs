//! C ABI over `rbd-core`.
//!
//! Diagrams and probability assignments are opaque handles created by this
//! library and released with the matching `*_free` function. Every fallible
//! call returns an [`RbdStatus`]; on failure a description is available from
//! [`rbd_last_error_message`] on the same thread. Strings returned through
//! `char **` outputs are owned by the caller and released with
//! [`rbd_string_free`].
//!
//! State bits and class counts follow the command line conventions: bit `i`
//! of a state belongs to the `i`-th component of the diagram in ascending
//! index order.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rbd_core::canonical::NodeStore;
use rbd_core::{
    enumerate_classes, equals, parse, reliability_bruteforce, reliability_exact,
    reliability_montecarlo, reliability_polynomial, render, ComponentId, Diagram, Error,
    GeneratingSet, ReliabilityAssignment, StateAssignment,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RbdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    MissingComponent = 5,
    MissingProbability = 6,
    NotBuiltUpon = 7,
    CapExceeded = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RbdMethod {
    /// Shannon expansion over the canonical form.
    Exact = 0,
    /// Sum over all component states; at most 20 components.
    BruteForce = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct RbdMonteCarloReport {
    pub estimate: f64,
    pub standard_error: f64,
    pub samples: u64,
    pub seed: u64,
}

/// Opaque diagram handle.
pub struct RbdDiagram(Diagram);

/// Opaque probability assignment handle.
pub struct RbdAssignment(ReliabilityAssignment);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

struct Failure(RbdStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse(_) => RbdStatus::ParseError,
            Error::MissingComponent(_) => RbdStatus::MissingComponent,
            Error::MissingProbability(_) => RbdStatus::MissingProbability,
            Error::NotBuiltUpon(_) => RbdStatus::NotBuiltUpon,
            Error::CapExceeded { .. } | Error::StoreCapacity(_) => RbdStatus::CapExceeded,
            _ => RbdStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(RbdStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> RbdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RbdStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            RbdStatus::Panic
        }
    }
}

unsafe fn read_text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(RbdStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn diagram<'a>(p: *const RbdDiagram) -> Result<&'a Diagram, Failure> {
    p.as_ref().map(|d| &d.0).ok_or_else(|| null("diagram"))
}

unsafe fn assignment<'a>(p: *const RbdAssignment) -> Result<&'a ReliabilityAssignment, Failure> {
    p.as_ref().map(|a| &a.0).ok_or_else(|| null("assignment"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let s = CString::new(s).map_err(|e| Failure(RbdStatus::InvalidArgument, e.to_string()))?;
    write_out(out, s.into_raw())
}

/// Message describing the last failure on this thread, or null if none.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rbd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn rbd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an expression. On a parse error the character offset is stored in
/// `error_position` when it is not null.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rbd_diagram_parse(
    text: *const c_char,
    out: *mut *mut RbdDiagram,
    error_position: *mut usize,
) -> RbdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let source = read_text(text, "text")?;
        match parse(source) {
            Ok(d) => write_out(out, Box::into_raw(Box::new(RbdDiagram(d)))),
            Err(e) => {
                if !error_position.is_null() {
                    error_position.write(e.position);
                }
                Err(Error::from(e).into())
            }
        }
    })
}

/// # Safety
/// `d` must come from [`rbd_diagram_parse`] and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rbd_diagram_free(d: *mut RbdDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rbd_diagram_render(d: *const RbdDiagram, out: *mut *mut c_char) -> RbdStatus {
    guard(|| write_string(out, render(diagram(d)?)))
}

/// Number of distinct components in the diagram.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rbd_diagram_component_count(d: *const RbdDiagram, out: *mut usize) -> RbdStatus {
    guard(|| write_out(out, diagram(d)?.components().len()))
}

/// Structure function under `len` state bytes (0 failed, nonzero functioning),
/// one per component in ascending index order. Writes 0 or 1 to `out`.
///
/// # Safety
/// `states` must point to `len` readable bytes (or be null with `len == 0`).
#[no_mangle]
pub unsafe extern "C" fn rbd_diagram_evaluate(
    d: *const RbdDiagram,
    states: *const u8,
    len: usize,
    out: *mut u8,
) -> RbdStatus {
    guard(|| {
        let d = diagram(d)?;
        let bytes: &[u8] = match (states.is_null(), len) {
            (_, 0) => &[],
            (true, _) => return Err(null("states")),
            (false, _) => std::slice::from_raw_parts(states, len),
        };
        let bits: Vec<bool> = bytes.iter().map(|b| *b != 0).collect();
        let s = StateAssignment::from_bits(&GeneratingSet::of(d), &bits)?;
        write_out(out, u8::from(d.evaluate(&s)?))
    })
}

/// Truth table as a string of `0`/`1`, entry `k` for state number `k`.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rbd_diagram_truth_table(d: *const RbdDiagram, out: *mut *mut c_char) -> RbdStatus {
    guard(|| {
        let d = diagram(d)?;
        let table = d.truth_table(&GeneratingSet::of(d))?;
        write_string(out, table.iter().map(|b| if *b { '1' } else { '0' }).collect())
    })
}

/// Equality as Boolean terms.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rbd_diagram_equal(
    a: *const RbdDiagram,
    b: *const RbdDiagram,
    out: *mut bool,
) -> RbdStatus {
    guard(|| {
        let (a, b) = (diagram(a)?, diagram(b)?);
        write_out(out, equals(a, b, &GeneratingSet::union([a, b]))?)
    })
}

/// Canonical form as the adjacency-list text printed by `rbd canon`.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rbd_diagram_canonical(d: *const RbdDiagram, out: *mut *mut c_char) -> RbdStatus {
    guard(|| {
        let d = diagram(d)?;
        let mut store = NodeStore::new(GeneratingSet::of(d));
        let form = store.canonicalize(d)?;
        write_string(out, store.export(form)?)
    })
}

/// An empty assignment.
#[no_mangle]
pub extern "C" fn rbd_assignment_new() -> *mut RbdAssignment {
    Box::into_raw(Box::new(RbdAssignment(ReliabilityAssignment::default())))
}

/// Parses the `A<k> = <p>` text format.
///
/// # Safety
/// `text` must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rbd_assignment_parse(
    text: *const c_char,
    out: *mut *mut RbdAssignment,
) -> RbdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let a = ReliabilityAssignment::parse(read_text(text, "text")?)?;
        write_out(out, Box::into_raw(Box::new(RbdAssignment(a))))
    })
}

/// Sets the probability of `A<index>`.
///
/// # Safety
/// `a` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn rbd_assignment_set(a: *mut RbdAssignment, index: u32, probability: f64) -> RbdStatus {
    guard(|| {
        let a = a.as_mut().ok_or_else(|| null("assignment"))?;
        a.0.insert(ComponentId::new(index)?, probability)?;
        Ok(())
    })
}

/// # Safety
/// `a` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rbd_assignment_free(a: *mut RbdAssignment) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Probability that the diagram functions.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rbd_reliability(
    d: *const RbdDiagram,
    a: *const RbdAssignment,
    method: RbdMethod,
    out: *mut f64,
) -> RbdStatus {
    guard(|| {
        let (d, p) = (diagram(d)?, assignment(a)?);
        let set = GeneratingSet::of(d);
        let r = match method {
            RbdMethod::Exact => reliability_exact(d, &set, p)?,
            RbdMethod::BruteForce => reliability_bruteforce(d, &set, p)?,
        };
        write_out(out, r)
    })
}

/// Monte Carlo estimate; reproducible for a given seed.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rbd_reliability_montecarlo(
    d: *const RbdDiagram,
    a: *const RbdAssignment,
    samples: u64,
    seed: u64,
    out: *mut RbdMonteCarloReport,
) -> RbdStatus {
    guard(|| {
        let (d, p) = (diagram(d)?, assignment(a)?);
        let rep = reliability_montecarlo(d, &GeneratingSet::of(d), p, samples, seed)?;
        write_out(
            out,
            RbdMonteCarloReport {
                estimate: rep.estimate,
                standard_error: rep.standard_error,
                samples: rep.samples,
                seed: rep.seed,
            },
        )
    })
}

/// Reliability polynomial in the `rbd poly` text format.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rbd_reliability_polynomial(d: *const RbdDiagram, out: *mut *mut c_char) -> RbdStatus {
    guard(|| {
        let d = diagram(d)?;
        write_string(out, reliability_polynomial(d, &GeneratingSet::of(d))?.to_string())
    })
}

/// Number of distinct diagrams over `n <= 4` components.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rbd_enumerate_classes(n: u32, out: *mut u64) -> RbdStatus {
    guard(|| write_out(out, enumerate_classes(n as usize, false)?.count))
}
