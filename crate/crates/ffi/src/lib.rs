//! C ABI over `pyth-core`.
//!
//! Objects cross the boundary as opaque handles created and released by the
//! paired `*_new` / `*_free` functions. Fallible calls return a
//! [`PythStatus`]; the message for the most recent failure on the calling
//! thread is available from [`pyth_last_error`]. Triple members cross as
//! `uint64_t`; larger values are reported as [`PythStatus::Overflow`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pyth_core::report::CheckRecord;
use pyth_core::{Error, SearchOptions, Verdict};

/// Status codes returned by fallible calls.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PythStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotPythagorean = 3,
    NotPrimitive = 4,
    ParityViolation = 5,
    PartitionViolation = 6,
    SieveSoundnessViolation = 7,
    Overflow = 8,
    OutOfRange = 9,
    Internal = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PythClass {
    K1 = 1,
    K2 = 2,
    K3 = 3,
    K4 = 4,
    K5 = 5,
    K6 = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PythVerdict {
    Pass = 0,
    NotApplicable = 1,
    Fail = 2,
}

/// Opaque primitive triple.
pub struct PythTriple(pyth_core::PythTriple);

/// Opaque ordered enumerator of primitive triples.
pub struct PythTripleIter(pyth_core::PrimitiveTriples);

/// Opaque search outcome with its verdict.
pub struct PythReport(pyth_core::Theorem2Outcome);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> PythStatus {
    match err {
        Error::Domain(_) | Error::InvalidParams { .. } => PythStatus::InvalidArgument,
        Error::NotPythagorean { .. } => PythStatus::NotPythagorean,
        Error::NotPrimitive { .. } => PythStatus::NotPrimitive,
        Error::ParityViolation { .. } => PythStatus::ParityViolation,
        Error::PartitionViolation { .. } => PythStatus::PartitionViolation,
        Error::SieveSoundnessViolation { .. } => PythStatus::SieveSoundnessViolation,
        _ => PythStatus::Internal,
    }
}

fn fail(status: PythStatus, msg: impl Into<String>) -> PythStatus {
    set_error(msg);
    status
}

fn from_error(err: Error) -> PythStatus {
    fail(status_of(&err), err.to_string())
}

/// Runs `body`, turning panics into `Internal`.
fn guard(body: impl FnOnce() -> PythStatus) -> PythStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|_| fail(PythStatus::Internal, "panic in pyth-ffi"))
}

fn class_to_c(k: pyth_core::GptClass) -> PythClass {
    use pyth_core::GptClass::*;
    match k {
        K1 => PythClass::K1,
        K2 => PythClass::K2,
        K3 => PythClass::K3,
        K4 => PythClass::K4,
        K5 => PythClass::K5,
        K6 => PythClass::K6,
    }
}

fn store<T>(out: *mut *mut T, value: T) {
    // SAFETY: callers check `out` for null before building the value.
    unsafe { *out = Box::into_raw(Box::new(value)) };
}

/// Message for the last failed call on this thread, or NULL.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pyth_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Validates `(a, b, c)` in either leg order and stores a new handle in `out`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn pyth_triple_validate(a: u64, b: u64, c: u64, out: *mut *mut PythTriple) -> PythStatus {
    guard(|| {
        if out.is_null() {
            return fail(PythStatus::NullPointer, "out is NULL");
        }
        match pyth_core::validate(a, b, c) {
            Ok(t) => {
                store(out, PythTriple(t));
                PythStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Builds the triple `(s² − t², 2st, s² + t²)`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn pyth_triple_from_params(s: u64, t: u64, out: *mut *mut PythTriple) -> PythStatus {
    guard(|| {
        if out.is_null() {
            return fail(PythStatus::NullPointer, "out is NULL");
        }
        match pyth_core::TripleParams::new(s, t) {
            Ok(p) => {
                store(out, PythTriple(pyth_core::PythTriple::from_params(&p)));
                PythStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Copies the members out; `Overflow` if any exceeds `uint64_t`.
///
/// # Safety
/// `triple` must be a live handle; `a`, `b`, `c` must be valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn pyth_triple_members(
    triple: *const PythTriple,
    a: *mut u64,
    b: *mut u64,
    c: *mut u64,
) -> PythStatus {
    guard(|| {
        if triple.is_null() || a.is_null() || b.is_null() || c.is_null() {
            return fail(PythStatus::NullPointer, "NULL argument");
        }
        match (*triple).0.to_u64s() {
            Some((x, y, z)) => {
                (*a, *b, *c) = (x, y, z);
                PythStatus::Ok
            }
            None => fail(PythStatus::Overflow, format!("{} does not fit in uint64_t", (*triple).0)),
        }
    })
}

/// # Safety
/// `triple` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pyth_triple_free(triple: *mut PythTriple) {
    if !triple.is_null() {
        drop(Box::from_raw(triple));
    }
}

/// # Safety
/// `triple` must be a live handle; `out` a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pyth_triple_classify(triple: *const PythTriple, out: *mut PythClass) -> PythStatus {
    guard(|| {
        if triple.is_null() || out.is_null() {
            return fail(PythStatus::NullPointer, "NULL argument");
        }
        match pyth_core::classify(&(*triple).0) {
            Ok(k) => {
                *out = class_to_c(k);
                PythStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Reports whether `60 | abc` and `3 ∤ c`.
///
/// # Safety
/// `triple` must be a live handle; the flag pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn pyth_triple_divisibility(
    triple: *const PythTriple,
    product_div_60: *mut bool,
    c_not_div_3: *mut bool,
) -> PythStatus {
    guard(|| {
        if triple.is_null() || product_div_60.is_null() || c_not_div_3.is_null() {
            return fail(PythStatus::NullPointer, "NULL argument");
        }
        let r = pyth_core::verify_theorem1(&(*triple).0);
        *product_div_60 = r.product_div_60;
        *c_not_div_3 = r.c_not_div_3;
        PythStatus::Ok
    })
}

/// Whether `μ·ν = b^(4k2+2)` for the split at `(k1, k2, k3)`.
///
/// # Safety
/// `triple` must be a live handle; `holds` a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pyth_mu_nu_identity(
    triple: *const PythTriple,
    k1: u32,
    k2: u32,
    k3: u32,
    holds: *mut bool,
) -> PythStatus {
    guard(|| {
        if triple.is_null() || holds.is_null() {
            return fail(PythStatus::NullPointer, "NULL argument");
        }
        *holds = pyth_core::mu_nu_split(&(*triple).0, k1, k2, k3).identity_holds;
        PythStatus::Ok
    })
}

/// Enumerator over primitive triples with `c ≤ c_max`, ascending by `(c, a)`.
#[no_mangle]
pub extern "C" fn pyth_enumerate_new(c_max: u64) -> *mut PythTripleIter {
    Box::into_raw(Box::new(PythTripleIter(pyth_core::enumerate_primitive(&c_max.into()))))
}

/// Stores the next triple in `out` and returns true, or returns false at the end.
///
/// # Safety
/// `iter` must be a live enumerator; `out` a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pyth_enumerate_next(iter: *mut PythTripleIter, out: *mut *mut PythTriple) -> bool {
    if iter.is_null() || out.is_null() {
        set_error("NULL argument");
        return false;
    }
    match (*iter).0.next() {
        Some(t) => {
            store(out, PythTriple(t));
            true
        }
        None => false,
    }
}

/// # Safety
/// `iter` must be NULL or an enumerator not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pyth_enumerate_free(iter: *mut PythTripleIter) {
    if !iter.is_null() {
        drop(Box::from_raw(iter));
    }
}

/// Sieved search over `1 ≤ x, y, z ≤ bound` with a verdict for K1 ∪ K3.
///
/// `moduli` may be NULL when `n_moduli` is 0; pass `use_default_moduli` to
/// ignore both and use the built-in set. `oracle_crosscheck` also enables the
/// audited exponent-shape pruning layer.
///
/// # Safety
/// `triple` must be a live handle; `moduli` must point to `n_moduli` values
/// unless `n_moduli` is 0; `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pyth_check(
    triple: *const PythTriple,
    bound: u32,
    moduli: *const u64,
    n_moduli: usize,
    use_default_moduli: bool,
    oracle_crosscheck: bool,
    out: *mut *mut PythReport,
) -> PythStatus {
    guard(|| {
        if triple.is_null() || out.is_null() || (moduli.is_null() && n_moduli > 0 && !use_default_moduli) {
            return fail(PythStatus::NullPointer, "NULL argument");
        }
        let mut opts = SearchOptions::default();
        if !use_default_moduli {
            opts.moduli = if n_moduli == 0 { Vec::new() } else { std::slice::from_raw_parts(moduli, n_moduli).to_vec() };
        }
        opts.oracle_crosscheck = oracle_crosscheck;
        opts.lemma2_layer = oracle_crosscheck;
        match pyth_core::theorem2_check(&(*triple).0, bound, &opts) {
            Ok(o) => {
                store(out, PythReport(o));
                PythStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pyth_report_verdict(report: *const PythReport) -> PythVerdict {
    let report = &*report;
    match report.0.verdict {
        Verdict::Pass => PythVerdict::Pass,
        Verdict::NotApplicable => PythVerdict::NotApplicable,
        Verdict::Fail => PythVerdict::Fail,
    }
}

/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pyth_report_solution_count(report: *const PythReport) -> usize {
    let report = &*report;
    report.0.report.solutions.len()
}

/// # Safety
/// `report` must be a live handle; `x`, `y`, `z` valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn pyth_report_solution(
    report: *const PythReport,
    index: usize,
    x: *mut u32,
    y: *mut u32,
    z: *mut u32,
) -> PythStatus {
    guard(|| {
        if report.is_null() || x.is_null() || y.is_null() || z.is_null() {
            return fail(PythStatus::NullPointer, "NULL argument");
        }
        let report = &*report;
        match report.0.report.solutions.get(index) {
            Some(s) => {
                (*x, *y, *z) = (s.x, s.y, s.z);
                PythStatus::Ok
            }
            None => fail(PythStatus::OutOfRange, format!("solution index {index} out of range")),
        }
    })
}

/// Lattice accounting: examined + pruned_by_sieve + pruned_by_magnitude = bound³.
///
/// # Safety
/// `report` must be a live handle; the count pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn pyth_report_counts(
    report: *const PythReport,
    examined: *mut u64,
    pruned_by_sieve: *mut u64,
    pruned_by_magnitude: *mut u64,
) -> PythStatus {
    guard(|| {
        if report.is_null() || examined.is_null() || pruned_by_sieve.is_null() || pruned_by_magnitude.is_null() {
            return fail(PythStatus::NullPointer, "NULL argument");
        }
        let r = &(*report).0.report;
        *examined = r.candidates_examined;
        *pruned_by_sieve = r.candidates_pruned_by_sieve;
        *pruned_by_magnitude = r.candidates_pruned_by_magnitude;
        PythStatus::Ok
    })
}

/// The report as the JSON record written by `pyth check`.
///
/// Free the result with [`pyth_string_free`]. Returns NULL on failure.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pyth_report_to_json(report: *const PythReport) -> *mut c_char {
    if report.is_null() {
        set_error("NULL argument");
        return ptr::null_mut();
    }
    let record = CheckRecord::new(&(*report).0);
    match serde_json::to_string(&record) {
        Ok(s) => CString::new(s).map_or(ptr::null_mut(), CString::into_raw),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `report` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pyth_report_free(report: *mut PythReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pyth_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of non-trivial solutions found by the `(s, t)` system scan.
///
/// # Safety
/// `hits` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pyth_lemma1_scan(s_max: u64, exp_bound: u32, hits: *mut u64) -> PythStatus {
    guard(|| {
        if hits.is_null() {
            return fail(PythStatus::NullPointer, "NULL argument");
        }
        if s_max < 2 || exp_bound < 1 {
            return fail(PythStatus::InvalidArgument, "s_max must be at least 2 and exp_bound at least 1");
        }
        *hits = pyth_core::lemma1_scan(s_max, exp_bound).hits.len() as u64;
        PythStatus::Ok
    })
}
