//! C ABI for the tqs library.
//!
//! The exported surface mirrors the CLI decisions: Hirzebruch-Jung
//! expansions, the critical-pair and type-R predicates, the abelian R2
//! decision, and the group-to-singularity pipeline behind an opaque handle.
//! Every function returns a [`TqsStatus`]; results travel through out
//! pointers. A thread-local message for the most recent failure is available
//! via [`tqs_last_error`].
//!
//! The matching header is checked in at `include/tqs.h`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use tqs::abelian::{is_r2_abelian, AbelianGroup};
use tqs::catalog::{family_generators, table_prediction, FamilySpec};
use tqs::cyclic_sing::{is_type_r, CyclicType};
use tqs::error::Error;
use tqs::hjcf;
use tqs::invariant::{singularity_of_group, GroupSingularity};
use tqs::matgrp::{
    pgl_image_type, pseudoreflection_subgroup, scalar_subgroup, FiniteMatrixGroup, GroupFile,
};

/// Status codes, aligned with the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TqsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    TooLarge = 3,
    Internal = 4,
    BufferTooSmall = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(e: &Error) -> TqsStatus {
    set_error(&e.to_string());
    match e {
        Error::GroupTooLarge(_) | Error::ConductorTooLarge(_, _) => TqsStatus::TooLarge,
        Error::Internal(_)
        | Error::InconsistentExpansion(_)
        | Error::NotNormal
        | Error::NotReflectionGroup => TqsStatus::Internal,
        _ => TqsStatus::InvalidArgument,
    }
}

/// Copy the most recent error message into `buf` (NUL-terminated,
/// truncating); returns the full message length in bytes without the NUL.
#[no_mangle]
pub extern "C" fn tqs_last_error(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|slot| {
        let msg = slot.borrow();
        let bytes = msg.as_bytes();
        if !buf.is_null() && cap > 0 {
            let n = bytes.len().min(cap - 1);
            unsafe {
                ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
                *buf.add(n) = 0;
            }
        }
        bytes.len()
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn tqs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Hirzebruch-Jung expansion of n/d. Writes at most `cap` terms to `out` and
/// stores the full length in `written`; fails with BufferTooSmall when the
/// expansion does not fit.
#[no_mangle]
pub extern "C" fn tqs_hj_expand(
    n: u64,
    d: u64,
    out: *mut u64,
    cap: usize,
    written: *mut usize,
) -> TqsStatus {
    if written.is_null() || (out.is_null() && cap > 0) {
        return TqsStatus::NullPointer;
    }
    match hjcf::hj_expand(n, d) {
        Ok(terms) => {
            unsafe { *written = terms.len() };
            if terms.len() > cap {
                set_error("expansion longer than the output buffer");
                return TqsStatus::BufferTooSmall;
            }
            for (i, t) in terms.iter().enumerate() {
                unsafe { *out.add(i) = *t };
            }
            TqsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Critical-pair decision for (n, d); both criteria are evaluated and must
/// agree.
#[no_mangle]
pub extern "C" fn tqs_is_critical_pair(n: u64, d: u64, out: *mut bool) -> TqsStatus {
    if out.is_null() {
        return TqsStatus::NullPointer;
    }
    let shape = match hjcf::is_critical_pair(n, d) {
        Ok(b) => b,
        Err(e) => return status_of(&e),
    };
    let arith = match hjcf::is_critical_pair_arith(n, d) {
        Ok(b) => b,
        Err(e) => return status_of(&e),
    };
    if shape != arith {
        set_error("critical-pair criteria disagree");
        return TqsStatus::Internal;
    }
    unsafe { *out = shape };
    TqsStatus::Ok
}

/// Type-R decision for 1/n(1,d) in characteristic `p` (0 or a prime not
/// dividing n).
#[no_mangle]
pub extern "C" fn tqs_is_type_r(n: u64, d: u64, p: u64, out: *mut bool) -> TqsStatus {
    if out.is_null() {
        return TqsStatus::NullPointer;
    }
    let t = match CyclicType::new(n, d) {
        Ok(t) => t,
        Err(e) => return status_of(&e),
    };
    match is_type_r(&t, p) {
        Ok(b) => {
            unsafe { *out = b };
            TqsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// The inverse of d modulo n, in 1..=n.
#[no_mangle]
pub extern "C" fn tqs_mod_inverse(d: u64, n: u64, out: *mut u64) -> TqsStatus {
    if out.is_null() {
        return TqsStatus::NullPointer;
    }
    match hjcf::mod_inverse(d, n) {
        Ok(b) => {
            unsafe { *out = b };
            TqsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Closed-form R2 decision for the abelian group with the given cyclic
/// factors (any factor list; it is normalized internally).
#[no_mangle]
pub extern "C" fn tqs_abelian_is_r2(factors: *const u64, len: usize, out: *mut bool) -> TqsStatus {
    if out.is_null() || (factors.is_null() && len > 0) {
        return TqsStatus::NullPointer;
    }
    let slice = if len == 0 {
        &[]
    } else {
        unsafe { std::slice::from_raw_parts(factors, len) }
    };
    match AbelianGroup::new(slice) {
        Ok(g) => {
            unsafe { *out = is_r2_abelian(&g) };
            TqsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Opaque handle to a finite matrix group.
pub struct TqsGroup {
    group: FiniteMatrixGroup,
}

/// Kind tag for `tqs_group_singularity`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TqsSingularityKind {
    Smooth = 0,
    Cyclic = 1,
    NonCyclicQuotient = 2,
}

fn group_from_json(json: &str, max_order: u64) -> Result<FiniteMatrixGroup, Error> {
    let gf = GroupFile::from_json(json)?;
    let gens = gf.to_matrices()?;
    FiniteMatrixGroup::generate(&gens, max_order)
}

/// Build a group from the JSON generator format (fields `conductor` and
/// `generators`). On success the handle must be released with
/// `tqs_group_free`.
#[no_mangle]
pub extern "C" fn tqs_group_from_json(
    json: *const c_char,
    max_order: u64,
    out: *mut *mut TqsGroup,
) -> TqsStatus {
    if json.is_null() || out.is_null() {
        return TqsStatus::NullPointer;
    }
    let json = match unsafe { CStr::from_ptr(json) }.to_str() {
        Ok(s) => s,
        Err(_) => {
            set_error("group JSON is not valid UTF-8");
            return TqsStatus::InvalidArgument;
        }
    };
    match group_from_json(json, max_order) {
        Ok(group) => {
            unsafe { *out = Box::into_raw(Box::new(TqsGroup { group })) };
            TqsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Build one member of the nine families by tag (for example "muS4").
/// `m` is required for the D-families and must be 0 otherwise.
#[no_mangle]
pub extern "C" fn tqs_group_from_family(
    name: *const c_char,
    q: u64,
    m: u64,
    max_order: u64,
    out: *mut *mut TqsGroup,
) -> TqsStatus {
    if name.is_null() || out.is_null() {
        return TqsStatus::NullPointer;
    }
    let name = match unsafe { CStr::from_ptr(name) }.to_str() {
        Ok(s) => s,
        Err(_) => {
            set_error("family name is not valid UTF-8");
            return TqsStatus::InvalidArgument;
        }
    };
    let build = || -> Result<FiniteMatrixGroup, Error> {
        let family = name.parse()?;
        let spec = FamilySpec::new(family, q, if m == 0 { None } else { Some(m) })?;
        let (_, gens) = family_generators(&spec)?;
        FiniteMatrixGroup::generate(&gens, max_order)
    };
    match build() {
        Ok(group) => {
            unsafe { *out = Box::into_raw(Box::new(TqsGroup { group })) };
            TqsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Expected not-R flag of a family member per the classification table.
#[no_mangle]
pub extern "C" fn tqs_family_predicted_not_r(
    name: *const c_char,
    q: u64,
    m: u64,
    out: *mut bool,
) -> TqsStatus {
    if name.is_null() || out.is_null() {
        return TqsStatus::NullPointer;
    }
    let name = match unsafe { CStr::from_ptr(name) }.to_str() {
        Ok(s) => s,
        Err(_) => return TqsStatus::InvalidArgument,
    };
    let compute = || -> Result<bool, Error> {
        let family = name.parse()?;
        let spec = FamilySpec::new(family, q, if m == 0 { None } else { Some(m) })?;
        Ok(table_prediction(&spec))
    };
    match compute() {
        Ok(b) => {
            unsafe { *out = b };
            TqsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

#[no_mangle]
pub extern "C" fn tqs_group_order(g: *const TqsGroup) -> u64 {
    if g.is_null() {
        return 0;
    }
    unsafe { &*g }.group.order()
}

/// Order of the subgroup of scalar matrices (0 on failure).
#[no_mangle]
pub extern "C" fn tqs_group_center_order(g: *const TqsGroup) -> u64 {
    if g.is_null() {
        return 0;
    }
    scalar_subgroup(&unsafe { &*g }.group).unwrap_or(0)
}

/// Order of the subgroup generated by pseudoreflections (0 on failure).
#[no_mangle]
pub extern "C" fn tqs_group_reflection_order(g: *const TqsGroup) -> u64 {
    if g.is_null() {
        return 0;
    }
    pseudoreflection_subgroup(&unsafe { &*g }.group)
        .map(|p| p.order())
        .unwrap_or(0)
}

/// Isomorphism type of the image in PGL_2 as a short tag ("C6", "D4", "A5").
#[no_mangle]
pub extern "C" fn tqs_group_pgl_image(
    g: *const TqsGroup,
    buf: *mut c_char,
    cap: usize,
) -> TqsStatus {
    if g.is_null() || buf.is_null() {
        return TqsStatus::NullPointer;
    }
    let image = match pgl_image_type(&unsafe { &*g }.group) {
        Ok(i) => i.to_string(),
        Err(e) => return status_of(&e),
    };
    let bytes = image.as_bytes();
    if bytes.len() + 1 > cap {
        set_error("tag longer than the output buffer");
        return TqsStatus::BufferTooSmall;
    }
    unsafe {
        ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, bytes.len());
        *buf.add(bytes.len()) = 0;
    }
    TqsStatus::Ok
}

/// Classify the quotient singularity of the group. For the cyclic kind the
/// normalized type 1/n(1,d) is stored in `out_n`/`out_d`; otherwise both are
/// set to 1. `out_type_r` is the type-R verdict in characteristic 0.
#[no_mangle]
pub extern "C" fn tqs_group_singularity(
    g: *const TqsGroup,
    out_kind: *mut TqsSingularityKind,
    out_n: *mut u64,
    out_d: *mut u64,
    out_type_r: *mut bool,
) -> TqsStatus {
    if g.is_null() || out_kind.is_null() || out_n.is_null() || out_d.is_null() || out_type_r.is_null()
    {
        return TqsStatus::NullPointer;
    }
    match singularity_of_group(&unsafe { &*g }.group) {
        Ok(sing) => {
            let (kind, n, d, type_r) = match &sing {
                GroupSingularity::Smooth => (TqsSingularityKind::Smooth, 1, 1, true),
                GroupSingularity::NonCyclicQuotient => {
                    (TqsSingularityKind::NonCyclicQuotient, 1, 1, true)
                }
                GroupSingularity::Classified { quotient, type_r } => (
                    TqsSingularityKind::Cyclic,
                    quotient.n(),
                    quotient.d(),
                    *type_r,
                ),
            };
            unsafe {
                *out_kind = kind;
                *out_n = n;
                *out_d = d;
                *out_type_r = type_r;
            }
            TqsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Release a group handle. Null is tolerated.
#[no_mangle]
pub extern "C" fn tqs_group_free(g: *mut TqsGroup) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}
