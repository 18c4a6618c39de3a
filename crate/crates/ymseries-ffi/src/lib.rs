//! C ABI for `ymseries`.
//!
//! Rational functions cross the boundary as opaque `YmRatFun` handles that
//! the caller releases with `ym_ratfun_free`. Every fallible function returns
//! a `YmStatus`; on failure a description is available from
//! `ym_last_error_message` on the same thread. Text is written into
//! caller-owned buffers in the style of `snprintf`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ymseries::closedforms::{flat_series, Engine, FlatSeriesRequest};
use ymseries::exactalg::series_expand;
use ymseries::gaugeseries::{betti_degrees, bg_orientable};
use ymseries::strata::verify_recursion;
use ymseries::{Family, GroupSpec, RatFun, TopClass, YmError};

/// `U(n)`.
pub const YM_FAMILY_U: u32 = 0;
/// `SU(n)`.
pub const YM_FAMILY_SU: u32 = 1;
/// `SO(2n+1)`.
pub const YM_FAMILY_SO_ODD: u32 = 2;
/// `SO(2n)`.
pub const YM_FAMILY_SO_EVEN: u32 = 3;
/// `Sp(n)`.
pub const YM_FAMILY_SP: u32 = 4;
/// `Spin(2n+1)`.
pub const YM_FAMILY_SPIN_ODD: u32 = 5;
/// `Spin(2n)`.
pub const YM_FAMILY_SPIN_EVEN: u32 = 6;

/// Evaluate both routes and fail unless they agree.
pub const YM_ENGINE_BOTH: u32 = 0;
/// The general parabolic sum.
pub const YM_ENGINE_GENERAL: u32 = 1;
/// The family-specific closed formula.
pub const YM_ENGINE_SPECIALIZED: u32 = 2;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Unsupported = 3,
    TopClassMismatch = 4,
    Arithmetic = 5,
    EngineMismatch = 6,
    BufferTooSmall = 7,
    Overflow = 8,
    Internal = 9,
}

/// Opaque handle to an exact rational function in `t`.
pub struct YmRatFun {
    inner: RatFun,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(YmStatus, String);

impl From<YmError> for Failure {
    fn from(e: YmError) -> Self {
        let status = match &e {
            YmError::Alg(_)
            | YmError::NonIntegerExponent(_)
            | YmError::NonIntegerCodimension(_) => YmStatus::Arithmetic,
            YmError::UnsupportedRank { .. } | YmError::UnsupportedFamily(_) => {
                YmStatus::Unsupported
            }
            YmError::TopClassMismatch { .. } => YmStatus::TopClassMismatch,
            YmError::EngineMismatch(_) => YmStatus::EngineMismatch,
            _ => YmStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<ymseries::exactalg::AlgError> for Failure {
    fn from(e: ymseries::exactalg::AlgError) -> Self {
        Failure(YmStatus::Arithmetic, e.to_string())
    }
}

fn fail<T>(status: YmStatus, msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure(status, msg.into()))
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> YmStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            YmStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal error");
            YmStatus::Internal
        }
    }
}

fn family_of(code: u32) -> Result<Family, Failure> {
    Ok(match code {
        YM_FAMILY_U => Family::U,
        YM_FAMILY_SU => Family::SU,
        YM_FAMILY_SO_ODD => Family::SOodd,
        YM_FAMILY_SO_EVEN => Family::SOeven,
        YM_FAMILY_SP => Family::Sp,
        YM_FAMILY_SPIN_ODD => Family::SpinOdd,
        YM_FAMILY_SPIN_EVEN => Family::SpinEven,
        _ => {
            return fail(
                YmStatus::InvalidArgument,
                format!("unknown family code {code}"),
            )
        }
    })
}

fn engine_of(code: u32) -> Result<Engine, Failure> {
    Ok(match code {
        YM_ENGINE_BOTH => Engine::Both,
        YM_ENGINE_GENERAL => Engine::General,
        YM_ENGINE_SPECIALIZED => Engine::Specialized,
        _ => {
            return fail(
                YmStatus::InvalidArgument,
                format!("unknown engine code {code}"),
            )
        }
    })
}

/// Reads the class argument: the degree for `U(n)`, `w₂` for the orthogonal
/// families, and `0` for everything else.
fn class_of(g: &GroupSpec, class: i64) -> Result<TopClass, Failure> {
    match g.family {
        Family::U => Ok(TopClass::Degree(class)),
        Family::SOodd | Family::SOeven => match class {
            0 | 1 => Ok(TopClass::W2(class as u8)),
            _ => fail(
                YmStatus::TopClassMismatch,
                format!("w2 must be 0 or 1, got {class}"),
            ),
        },
        _ if class == 0 => Ok(TopClass::Trivial),
        _ => fail(
            YmStatus::TopClassMismatch,
            format!("{g} only has the trivial class"),
        ),
    }
}

fn group_of(family: u32, n: u32) -> Result<GroupSpec, Failure> {
    Ok(GroupSpec::new(family_of(family)?, n as usize)?)
}

unsafe fn handle<'a>(f: *const YmRatFun) -> Result<&'a RatFun, Failure> {
    match f.as_ref() {
        Some(h) => Ok(&h.inner),
        None => fail(YmStatus::NullPointer, "null handle"),
    }
}

unsafe fn store(out: *mut *mut YmRatFun, f: RatFun) -> Result<(), Failure> {
    if out.is_null() {
        return fail(YmStatus::NullPointer, "null output pointer");
    }
    *out = Box::into_raw(Box::new(YmRatFun { inner: f }));
    Ok(())
}

unsafe fn write_text(
    s: &str,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> Result<(), Failure> {
    let size = s.len() + 1;
    if !needed.is_null() {
        *needed = size;
    }
    if buf.is_null() && len == 0 {
        return Ok(());
    }
    if buf.is_null() {
        return fail(YmStatus::NullPointer, "null buffer");
    }
    if len < size {
        return fail(
            YmStatus::BufferTooSmall,
            format!("buffer holds {len} bytes, {size} needed"),
        );
    }
    std::ptr::copy_nonoverlapping(s.as_ptr(), buf as *mut u8, s.len());
    *buf.add(s.len()) = 0;
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ym_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Description of the last failure on the calling thread, or an empty string.
/// The pointer stays valid until the next call into the library on this
/// thread.
#[no_mangle]
pub extern "C" fn ym_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Poincaré series of the flat connections of genus `ell` for the group
/// `family(n)` with topological class `class`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn ym_flat_series(
    family: u32,
    n: u32,
    class: i64,
    ell: u32,
    engine: u32,
    out: *mut *mut YmRatFun,
) -> YmStatus {
    guard(|| {
        let g = group_of(family, n)?;
        let c = class_of(&g, class)?;
        let engine = engine_of(engine)?;
        let f = flat_series(&FlatSeriesRequest::new(g, c, ell), engine)?;
        store(out, f)
    })
}

/// Poincaré series of the classifying space of the gauge group of genus `ell`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn ym_gauge_series(
    family: u32,
    n: u32,
    ell: u32,
    out: *mut *mut YmRatFun,
) -> YmStatus {
    guard(|| {
        let g = group_of(family, n)?;
        store(out, bg_orientable(&betti_degrees(&g), ell))
    })
}

/// Checks the stratification recursion to degree `degree` and writes the
/// verdict to `holds`.
///
/// # Safety
/// `holds` must be a valid pointer to writable storage for one `bool`.
#[no_mangle]
pub unsafe extern "C" fn ym_verify_recursion(
    family: u32,
    n: u32,
    class: i64,
    ell: u32,
    degree: u32,
    holds: *mut bool,
) -> YmStatus {
    guard(|| {
        if holds.is_null() {
            return fail(YmStatus::NullPointer, "null output pointer");
        }
        let g = group_of(family, n)?;
        let c = class_of(&g, class)?;
        let report = verify_recursion(&g, c, ell, degree as usize)?;
        *holds = report.holds;
        Ok(())
    })
}

/// Parses the canonical text form, for example `"(1+t^3)/(1-t^2)"`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer to
/// writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn ym_ratfun_parse(text: *const c_char, out: *mut *mut YmRatFun) -> YmStatus {
    guard(|| {
        if text.is_null() {
            return fail(YmStatus::NullPointer, "null text");
        }
        let s = match CStr::from_ptr(text).to_str() {
            Ok(s) => s,
            Err(_) => return fail(YmStatus::InvalidArgument, "text is not UTF-8"),
        };
        store(out, RatFun::parse(s)?)
    })
}

/// Product of two rational functions as a new handle.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer to writable
/// storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn ym_ratfun_mul(
    a: *const YmRatFun,
    b: *const YmRatFun,
    out: *mut *mut YmRatFun,
) -> YmStatus {
    guard(|| {
        let f = handle(a)?.mul(handle(b)?);
        store(out, f)
    })
}

/// Writes whether `a` and `b` are the same rational function.
///
/// # Safety
/// `a` and `b` must be live handles and `equal` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ym_ratfun_equal(
    a: *const YmRatFun,
    b: *const YmRatFun,
    equal: *mut bool,
) -> YmStatus {
    guard(|| {
        if equal.is_null() {
            return fail(YmStatus::NullPointer, "null output pointer");
        }
        *equal = handle(a)? == handle(b)?;
        Ok(())
    })
}

/// Writes the canonical text form into `buf`. `needed` receives the required
/// size including the terminating NUL; passing a null `buf` with `len == 0`
/// only queries that size.
///
/// # Safety
/// `f` must be a live handle, `buf` must point to `len` writable bytes or be
/// null, and `needed` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn ym_ratfun_to_text(
    f: *const YmRatFun,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> YmStatus {
    guard(|| write_text(&handle(f)?.to_text(), buf, len, needed))
}

/// Same as `ym_ratfun_to_text` with LaTeX output.
///
/// # Safety
/// See `ym_ratfun_to_text`.
#[no_mangle]
pub unsafe extern "C" fn ym_ratfun_to_latex(
    f: *const YmRatFun,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> YmStatus {
    guard(|| write_text(&handle(f)?.to_latex(), buf, len, needed))
}

/// Writes the power series coefficients of `t^0..t^order` into `out`, which
/// must hold `order + 1` entries.
///
/// # Safety
/// `f` must be a live handle and `out` must point to `len` writable entries.
#[no_mangle]
pub unsafe extern "C" fn ym_ratfun_series(
    f: *const YmRatFun,
    order: u32,
    out: *mut i64,
    len: usize,
) -> YmStatus {
    guard(|| {
        let f = handle(f)?;
        if out.is_null() {
            return fail(YmStatus::NullPointer, "null output buffer");
        }
        let size = order as usize + 1;
        if len < size {
            return fail(
                YmStatus::BufferTooSmall,
                format!("buffer holds {len} entries, {size} needed"),
            );
        }
        let coeffs = series_expand(f, order as usize)?;
        let Some(values) = coeffs.to_i64() else {
            return fail(YmStatus::Overflow, "a coefficient does not fit in 64 bits");
        };
        for (i, v) in values.iter().take(size).enumerate() {
            *out.add(i) = *v;
        }
        Ok(())
    })
}

/// Releases a handle. Null is accepted and ignored.
///
/// # Safety
/// `f` must be null or a handle not yet released.
#[no_mangle]
pub unsafe extern "C" fn ym_ratfun_free(f: *mut YmRatFun) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}
