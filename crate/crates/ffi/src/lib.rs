//! C ABI for the mdspairs library.
//!
//! Constructed objects live behind opaque handles; every fallible call
//! returns an `MpStatus` code and leaves a message retrievable through
//! [`mp_last_error_message`]. Strings returned by this library must be
//! released with [`mp_string_free`], handles with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mdspairs::construct::{
    construct_pair, feasibility, ConstructConfig, FeasibilityVerdict, PairRequest,
};
use mdspairs::export::{AeaqeccExport, FeasibilityExport, PairExport};
use mdspairs::quantum::build_pure_mds_aeaqecc;
use mdspairs::{Error, IntersectionPair};

/// Result codes shared by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MpStatus {
    Ok = 0,
    InvalidArgument = 1,
    Infeasible = 2,
    OutOfScope = 3,
    InternalDefect = 4,
    NullPointer = 5,
}

/// Feasibility classification of a parameter tuple.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MpFeasibility {
    Feasible = 0,
    InfeasibleProven = 1,
    OutOfScopeTuple = 2,
    InvalidTuple = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> MpStatus {
    match e {
        Error::Infeasible(_) | Error::Degenerate(_) => MpStatus::Infeasible,
        Error::OutOfScope(_) => MpStatus::OutOfScope,
        Error::VerificationFailed(_) => MpStatus::InternalDefect,
        _ => MpStatus::InvalidArgument,
    }
}

fn to_c_string(s: String) -> *mut c_char {
    match CString::new(s) {
        Ok(c) => c.into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

fn config(enum_bound: u64) -> ConstructConfig {
    let mut cfg = ConstructConfig::default();
    if enum_bound > 0 {
        cfg.enum_bound = enum_bound as u128;
    }
    cfg
}

/// A verified intersection pair together with the request it answers.
pub struct MpPair {
    request: PairRequest,
    pair: IntersectionPair,
}

/// A derived quantum parameter set together with its underlying pair.
pub struct MpAeaqecc {
    request: PairRequest,
    pair: IntersectionPair,
    params: mdspairs::AeaqeccParams,
}

/// The default message-enumeration bound used when 0 is passed.
#[no_mangle]
pub extern "C" fn mp_default_enum_bound() -> u64 {
    mdspairs::DEFAULT_ENUM_BOUND as u64
}

/// The most recent error message on this thread, or NULL. Free with
/// `mp_string_free`.
#[no_mangle]
pub extern "C" fn mp_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(c) => c.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn mp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Classifies a parameter tuple.
#[no_mangle]
pub extern "C" fn mp_feasible(q: u64, n: u64, k1: u64, k2: u64, l: u64) -> MpFeasibility {
    clear_error();
    let verdict = catch_unwind(|| {
        let req = PairRequest::new(q, n as usize, k1 as usize, k2 as usize, l as usize)?;
        Ok::<_, Error>(feasibility(&req))
    });
    match verdict {
        Ok(Ok(FeasibilityVerdict::Feasible(_))) => MpFeasibility::Feasible,
        Ok(Ok(FeasibilityVerdict::InfeasibleProven(why))) => {
            set_error(why);
            MpFeasibility::InfeasibleProven
        }
        Ok(Ok(FeasibilityVerdict::OutOfScope(why))) => {
            set_error(why);
            MpFeasibility::OutOfScopeTuple
        }
        Ok(Err(e)) => {
            set_error(e.to_string());
            MpFeasibility::InvalidTuple
        }
        Err(_) => {
            set_error("internal panic".into());
            MpFeasibility::InvalidTuple
        }
    }
}

/// Full feasibility report as a JSON string (free with `mp_string_free`);
/// NULL when the tuple itself is malformed.
#[no_mangle]
pub extern "C" fn mp_feasible_json(q: u64, n: u64, k1: u64, k2: u64, l: u64) -> *mut c_char {
    clear_error();
    let out = catch_unwind(|| {
        let req = PairRequest::new(q, n as usize, k1 as usize, k2 as usize, l as usize)?;
        let verdict = feasibility(&req);
        Ok::<_, Error>(serde_json::to_string(&FeasibilityExport::new(&req, &verdict)).unwrap())
    });
    match out {
        Ok(Ok(json)) => to_c_string(json),
        Ok(Err(e)) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
        Err(_) => {
            set_error("internal panic".into());
            ptr::null_mut()
        }
    }
}

/// Constructs and verifies an intersection pair. On success writes a handle
/// to `out`; pass `enum_bound = 0` for the default verification bound.
///
/// # Safety
/// `out` must be null or point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn mp_pair_build(
    q: u64,
    n: u64,
    k1: u64,
    k2: u64,
    l: u64,
    enum_bound: u64,
    out: *mut *mut MpPair,
) -> MpStatus {
    clear_error();
    if out.is_null() {
        set_error("output pointer is null".into());
        return MpStatus::NullPointer;
    }
    let built = catch_unwind(|| {
        let request = PairRequest::new(q, n as usize, k1 as usize, k2 as usize, l as usize)?;
        let pair = construct_pair(&request, &config(enum_bound))?;
        Ok::<_, Error>(MpPair { request, pair })
    });
    match built {
        Ok(Ok(p)) => {
            unsafe { *out = Box::into_raw(Box::new(p)) };
            MpStatus::Ok
        }
        Ok(Err(e)) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            MpStatus::InternalDefect
        }
    }
}

/// Frees a pair handle. NULL is ignored.
///
/// # Safety
/// `p` must have come from `mp_pair_build` and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn mp_pair_free(p: *mut MpPair) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Verified intersection dimension, or -1 on NULL.
///
/// # Safety
/// `p` must be null or a live handle from `mp_pair_build`.
#[no_mangle]
pub unsafe extern "C" fn mp_pair_l_verified(p: *const MpPair) -> i64 {
    if p.is_null() {
        return -1;
    }
    unsafe { (*p).pair.l_verified as i64 }
}

/// Construction route tag (free with `mp_string_free`), or NULL.
///
/// # Safety
/// `p` must be null or a live handle from `mp_pair_build`.
#[no_mangle]
pub unsafe extern "C" fn mp_pair_route(p: *const MpPair) -> *mut c_char {
    if p.is_null() {
        return ptr::null_mut();
    }
    to_c_string(unsafe { (*p).pair.route.tag().to_string() })
}

/// Full pair record as JSON (free with `mp_string_free`), or NULL.
///
/// # Safety
/// `p` must be null or a live handle from `mp_pair_build`.
#[no_mangle]
pub unsafe extern "C" fn mp_pair_to_json(p: *const MpPair) -> *mut c_char {
    if p.is_null() {
        return ptr::null_mut();
    }
    let res = catch_unwind(AssertUnwindSafe(|| {
        let p = unsafe { &*p };
        serde_json::to_string(&PairExport::from_pair(&p.request, &p.pair)).unwrap()
    }));
    match res {
        Ok(json) => to_c_string(json),
        Err(_) => {
            set_error("internal panic".into());
            ptr::null_mut()
        }
    }
}

/// Runs the pure-MDS pipeline: builds the pair, derives the quantum
/// parameters by exhaustive enumeration, and checks them against the
/// closed-form claim.
///
/// # Safety
/// `out` must be null or point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn mp_aeaqecc_build(
    q: u64,
    n: u64,
    k1: u64,
    k2: u64,
    l: u64,
    enum_bound: u64,
    out: *mut *mut MpAeaqecc,
) -> MpStatus {
    clear_error();
    if out.is_null() {
        set_error("output pointer is null".into());
        return MpStatus::NullPointer;
    }
    let built = catch_unwind(|| {
        let request = PairRequest::new(q, n as usize, k1 as usize, k2 as usize, l as usize)?;
        let (pair, params) = build_pure_mds_aeaqecc(&request, &config(enum_bound))?;
        Ok::<_, Error>(MpAeaqecc {
            request,
            pair,
            params,
        })
    });
    match built {
        Ok(Ok(a)) => {
            unsafe { *out = Box::into_raw(Box::new(a)) };
            MpStatus::Ok
        }
        Ok(Err(e)) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            MpStatus::InternalDefect
        }
    }
}

/// Frees a quantum-parameter handle. NULL is ignored.
///
/// # Safety
/// `a` must have come from `mp_aeaqecc_build` and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn mp_aeaqecc_free(a: *mut MpAeaqecc) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Code length, or -1 on NULL.
///
/// # Safety
/// `a` must be null or a live handle from `mp_aeaqecc_build`.
#[no_mangle]
pub unsafe extern "C" fn mp_aeaqecc_n(a: *const MpAeaqecc) -> i64 {
    if a.is_null() {
        return -1;
    }
    unsafe { (*a).params.n as i64 }
}

/// Logical dimension, or -1 on NULL.
///
/// # Safety
/// `a` must be null or a live handle from `mp_aeaqecc_build`.
#[no_mangle]
pub unsafe extern "C" fn mp_aeaqecc_k(a: *const MpAeaqecc) -> i64 {
    if a.is_null() {
        return -1;
    }
    unsafe { (*a).params.k as i64 }
}

/// Phase-flip distance, or -1 on NULL.
///
/// # Safety
/// `a` must be null or a live handle from `mp_aeaqecc_build`.
#[no_mangle]
pub unsafe extern "C" fn mp_aeaqecc_dz(a: *const MpAeaqecc) -> i64 {
    if a.is_null() {
        return -1;
    }
    unsafe { (*a).params.dz as i64 }
}

/// Qudit-flip distance, or -1 on NULL.
///
/// # Safety
/// `a` must be null or a live handle from `mp_aeaqecc_build`.
#[no_mangle]
pub unsafe extern "C" fn mp_aeaqecc_dx(a: *const MpAeaqecc) -> i64 {
    if a.is_null() {
        return -1;
    }
    unsafe { (*a).params.dx as i64 }
}

/// Maximally entangled state count, or -1 on NULL.
///
/// # Safety
/// `a` must be null or a live handle from `mp_aeaqecc_build`.
#[no_mangle]
pub unsafe extern "C" fn mp_aeaqecc_c(a: *const MpAeaqecc) -> i64 {
    if a.is_null() {
        return -1;
    }
    unsafe { (*a).params.c as i64 }
}

/// 1 when both distances equal the dual minimum weights, 0 otherwise,
/// -1 on NULL.
///
/// # Safety
/// `a` must be null or a live handle from `mp_aeaqecc_build`.
#[no_mangle]
pub unsafe extern "C" fn mp_aeaqecc_is_pure(a: *const MpAeaqecc) -> i32 {
    if a.is_null() {
        return -1;
    }
    unsafe { (*a).params.pure as i32 }
}

/// 1 when dx + dz = n - k + c + 2, 0 otherwise, -1 on NULL.
///
/// # Safety
/// `a` must be null or a live handle from `mp_aeaqecc_build`.
#[no_mangle]
pub unsafe extern "C" fn mp_aeaqecc_is_mds(a: *const MpAeaqecc) -> i32 {
    if a.is_null() {
        return -1;
    }
    unsafe { (*a).params.mds as i32 }
}

/// Full record as JSON (free with `mp_string_free`), or NULL.
///
/// # Safety
/// `a` must be null or a live handle from `mp_aeaqecc_build`.
#[no_mangle]
pub unsafe extern "C" fn mp_aeaqecc_to_json(a: *const MpAeaqecc) -> *mut c_char {
    if a.is_null() {
        return ptr::null_mut();
    }
    let res = catch_unwind(AssertUnwindSafe(|| {
        let a = unsafe { &*a };
        serde_json::to_string(&AeaqeccExport::new(&a.request, &a.pair, &a.params)).unwrap()
    }));
    match res {
        Ok(json) => to_c_string(json),
        Err(_) => {
            set_error("internal panic".into());
            ptr::null_mut()
        }
    }
}
