//! C interface to the meanders library.
//!
//! Systems live behind an opaque `MeandersSystem` handle created by one of
//! the constructors and released with `meanders_system_free`. Every fallible
//! call returns a `MeandersStatus`; on failure `meanders_last_error` gives a
//! message for the calling thread. Strings handed out by the library are
//! released with `meanders_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use meanders::cycles::{count_cycles, largest_half_length, special_counts};
use meanders::harness::Family;
use meanders::{deserialize, serialize, Error, MeanderSystem, Pairing, RngStream};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeandersStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidInput = 3,
    Internal = 4,
}

/// Opaque handle to a meander system.
pub struct MeandersSystem(MeanderSystem);

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MeandersSpecialCounts {
    pub ringlets: u64,
    pub rings: u64,
    pub staples: u64,
    pub upper_staples: u64,
    pub lower_staples: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: MeandersStatus, msg: impl Into<String>) -> MeandersStatus {
    set_error(msg.into());
    status
}

fn from_error(e: Error) -> MeandersStatus {
    let status = if e.is_validation() {
        MeandersStatus::InvalidInput
    } else {
        MeandersStatus::InvalidArgument
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> MeandersStatus) -> MeandersStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(MeandersStatus::Internal, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, MeandersStatus> {
    if p.is_null() {
        return Err(fail(MeandersStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(MeandersStatus::InvalidArgument, "string is not UTF-8"))
}

unsafe fn system_arg<'a>(p: *const MeandersSystem) -> Result<&'a MeanderSystem, MeandersStatus> {
    p.as_ref()
        .map(|s| &s.0)
        .ok_or_else(|| fail(MeandersStatus::NullPointer, "null system handle"))
}

unsafe fn put<T>(out: *mut T, value: T) -> MeandersStatus {
    if out.is_null() {
        return fail(MeandersStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    MeandersStatus::Ok
}

unsafe fn put_system(out: *mut *mut MeandersSystem, ms: MeanderSystem) -> MeandersStatus {
    if out.is_null() {
        return fail(MeandersStatus::NullPointer, "null output pointer");
    }
    out.write(Box::into_raw(Box::new(MeandersSystem(ms))));
    MeandersStatus::Ok
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn meanders_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Draws replicate `index` of family `family` (for example `"uniform"`,
/// `"comb"`, `"sg(1,0,1)"`) at half-size `n` with the given seed.
///
/// # Safety
/// `family` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn meanders_sample(
    family: *const c_char,
    n: usize,
    seed: u64,
    index: u64,
    out: *mut *mut MeandersSystem,
) -> MeandersStatus {
    guard(|| {
        let name = match str_arg(family) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let sampler = match name.parse::<Family>().and_then(|f| f.sampler(n)) {
            Ok(s) => s,
            Err(e) => return from_error(e),
        };
        put_system(out, sampler.sample(&mut RngStream::new(seed, index)))
    })
}

/// Builds a system from two 0-based partner arrays of length `len = 2n`.
///
/// # Safety
/// `upper` and `lower` must each point to `len` readable values.
#[no_mangle]
pub unsafe extern "C" fn meanders_system_from_partners(
    upper: *const u32,
    lower: *const u32,
    len: usize,
    out: *mut *mut MeandersSystem,
) -> MeandersStatus {
    guard(|| {
        if upper.is_null() || lower.is_null() {
            return fail(MeandersStatus::NullPointer, "null partner array");
        }
        let up = std::slice::from_raw_parts(upper, len).to_vec();
        let low = std::slice::from_raw_parts(lower, len).to_vec();
        let built = Pairing::new(up)
            .map_err(|source| Error::Validation {
                side: "upper",
                source,
            })
            .and_then(|u| {
                let l = Pairing::new(low).map_err(|source| Error::Validation {
                    side: "lower",
                    source,
                })?;
                MeanderSystem::new(u, l)
            });
        match built {
            Ok(ms) => put_system(out, ms),
            Err(e) => from_error(e),
        }
    })
}

/// Parses `{"n": .., "upper": [..], "lower": [..]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn meanders_system_from_json(
    json: *const c_char,
    out: *mut *mut MeandersSystem,
) -> MeandersStatus {
    guard(|| {
        let text = match str_arg(json) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match deserialize(text) {
            Ok(ms) => put_system(out, ms),
            Err(e) => from_error(e),
        }
    })
}

/// Renders a system as JSON. Release the string with
/// `meanders_string_free`.
///
/// # Safety
/// `system` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn meanders_system_to_json(
    system: *const MeandersSystem,
    out: *mut *mut c_char,
) -> MeandersStatus {
    guard(|| match system_arg(system) {
        Ok(ms) => {
            let s = CString::new(serialize(ms)).expect("JSON has no NUL bytes");
            put(out, s.into_raw())
        }
        Err(s) => s,
    })
}

/// Half-size of the system, or 0 for a null handle.
///
/// # Safety
/// `system` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn meanders_system_n(system: *const MeandersSystem) -> usize {
    system.as_ref().map_or(0, |s| s.0.n())
}

/// Copies the partner arrays into caller buffers of length `len`, which
/// must equal `2n`.
///
/// # Safety
/// `upper` and `lower` must each point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn meanders_system_partners(
    system: *const MeandersSystem,
    upper: *mut u32,
    lower: *mut u32,
    len: usize,
) -> MeandersStatus {
    guard(|| {
        let ms = match system_arg(system) {
            Ok(ms) => ms,
            Err(s) => return s,
        };
        if upper.is_null() || lower.is_null() {
            return fail(MeandersStatus::NullPointer, "null output buffer");
        }
        if len != 2 * ms.n() {
            return fail(
                MeandersStatus::InvalidArgument,
                format!("buffer length {len}, system has {} points", 2 * ms.n()),
            );
        }
        ptr::copy_nonoverlapping(ms.upper().as_slice().as_ptr(), upper, len);
        ptr::copy_nonoverlapping(ms.lower().as_slice().as_ptr(), lower, len);
        MeandersStatus::Ok
    })
}

/// # Safety
/// `system` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn meanders_system_free(system: *mut MeandersSystem) {
    if !system.is_null() {
        drop(Box::from_raw(system));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn meanders_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `system` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn meanders_count_cycles(
    system: *const MeandersSystem,
    out: *mut u64,
) -> MeandersStatus {
    guard(|| match system_arg(system) {
        Ok(ms) => put(out, count_cycles(ms) as u64),
        Err(s) => s,
    })
}

/// # Safety
/// `system` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn meanders_largest_half_length(
    system: *const MeandersSystem,
    out: *mut u64,
) -> MeandersStatus {
    guard(|| match system_arg(system) {
        Ok(ms) => put(out, largest_half_length(ms) as u64),
        Err(s) => s,
    })
}

/// # Safety
/// `system` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn meanders_special_counts(
    system: *const MeandersSystem,
    out: *mut MeandersSpecialCounts,
) -> MeandersStatus {
    guard(|| match system_arg(system) {
        Ok(ms) => {
            let s = special_counts(ms);
            put(
                out,
                MeandersSpecialCounts {
                    ringlets: s.ringlets as u64,
                    rings: s.rings as u64,
                    staples: s.staples as u64,
                    upper_staples: s.upper_staples as u64,
                    lower_staples: s.lower_staples as u64,
                },
            )
        }
        Err(s) => s,
    })
}

fn expectation(n: usize, out: *mut f64, f: fn(usize) -> f64) -> MeandersStatus {
    if n == 0 {
        return fail(MeandersStatus::InvalidArgument, "n must be at least 1");
    }
    // SAFETY: callers pass a writable pointer or NULL, which `put` rejects
    guard(|| unsafe { put(out, f(n)) })
}

/// Exact mean number of ringlets in a uniform system of half-size `n`.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn meanders_expected_ringlets(n: usize, out: *mut f64) -> MeandersStatus {
    expectation(n, out, meanders::analytic::expected_ringlets)
}

/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn meanders_expected_rings(n: usize, out: *mut f64) -> MeandersStatus {
    expectation(n, out, meanders::analytic::expected_rings)
}

/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn meanders_expected_staples(n: usize, out: *mut f64) -> MeandersStatus {
    expectation(n, out, meanders::analytic::expected_staples)
}

/// Limiting probability that a relaxed two-block rainbow has `x` cycles.
/// Returns NaN for `x = 0`.
#[no_mangle]
pub extern "C" fn meanders_rainbow_gcd_law(x: u64) -> f64 {
    if x == 0 {
        return f64::NAN;
    }
    meanders::analytic::rainbow_gcd_law(x)
}
