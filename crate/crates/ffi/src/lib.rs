//! C ABI for the grassmann kernel.
//!
//! Elements cross the boundary as opaque `GrElement` handles owned by the
//! caller and released with [`gr_element_free`]. Strings returned through
//! `char **` out-parameters are allocated here and released with
//! [`gr_string_free`]. Every fallible call returns a [`GrStatus`]; on
//! failure [`gr_last_error_message`] describes the error for the calling
//! thread. Panics never unwind across the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use grassmann::cli::{element_json, eval_element, eval_free, parse, print_element, Namespace};
use grassmann::{calculus, grading, pi, Element, Error};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    ZeroElement = 5,
    Panic = 6,
}

/// Substitution domain for [`gr_check_identity`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrDomain {
    All = 0,
    Even = 1,
    Odd = 2,
}

/// Opaque handle to an element of the Grassmann algebra.
pub struct GrElement(Element);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("nul bytes replaced");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn status_of(e: &Error) -> GrStatus {
    match e {
        Error::Syntax { .. } | Error::Namespace(_) => GrStatus::ParseError,
        Error::ZeroElement => GrStatus::ZeroElement,
        _ => GrStatus::InvalidArgument,
    }
}

fn fail(status: GrStatus, message: impl Into<String>) -> GrStatus {
    set_error(message.into());
    status
}

/// Runs `body`, converting errors and panics into status codes.
fn guard<F>(body: F) -> GrStatus
where
    F: FnOnce() -> Result<(), GrStatus>,
{
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => GrStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(GrStatus::Panic, "internal panic"),
    }
}

fn kernel<T>(result: grassmann::Result<T>) -> Result<T, GrStatus> {
    result.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, GrStatus> {
    if text.is_null() {
        return Err(fail(GrStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(GrStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn element<'a>(handle: *const GrElement) -> Result<&'a Element, GrStatus> {
    handle
        .as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(GrStatus::NullPointer, "null element handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), GrStatus> {
    if out.is_null() {
        return Err(fail(GrStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_element(out: *mut *mut GrElement, value: Element) -> Result<(), GrStatus> {
    write_out(out, Box::into_raw(Box::new(GrElement(value))))
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> Result<(), GrStatus> {
    let c = CString::new(value).map_err(|_| fail(GrStatus::InvalidArgument, "interior nul"))?;
    write_out(out, c.into_raw())
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `p` must be NULL or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gr_element_free(p: *mut GrElement) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Parses and evaluates an expression over generators `x1..xn`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_parse(
    text: *const c_char,
    n: u32,
    out: *mut *mut GrElement,
) -> GrStatus {
    guard(|| {
        let text = read_str(text)?;
        let expr = kernel(parse(text, Namespace::Generators))?;
        let value = kernel(eval_element(&expr, n))?;
        write_element(out, value)
    })
}

/// The generator `x_index`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_generator(index: u32, out: *mut *mut GrElement) -> GrStatus {
    guard(|| {
        if index == 0 {
            return Err(fail(
                GrStatus::InvalidArgument,
                "generator indices are 1-based",
            ));
        }
        write_element(out, Element::generator(index))
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_clone(
    p: *const GrElement,
    out: *mut *mut GrElement,
) -> GrStatus {
    guard(|| write_element(out, element(p)?.clone()))
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_add(
    a: *const GrElement,
    b: *const GrElement,
    out: *mut *mut GrElement,
) -> GrStatus {
    guard(|| write_element(out, element(a)?.add(element(b)?)))
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_sub(
    a: *const GrElement,
    b: *const GrElement,
    out: *mut *mut GrElement,
) -> GrStatus {
    guard(|| write_element(out, element(a)?.sub(element(b)?)))
}

/// Grassmann product `ab`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_mul(
    a: *const GrElement,
    b: *const GrElement,
    out: *mut *mut GrElement,
) -> GrStatus {
    guard(|| write_element(out, element(a)?.mul(element(b)?)))
}

/// `ab - ba`
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_commutator(
    a: *const GrElement,
    b: *const GrElement,
    out: *mut *mut GrElement,
) -> GrStatus {
    guard(|| write_element(out, grading::commutator(element(a)?, element(b)?)))
}

/// `ab + ba`
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_anticommutator(
    a: *const GrElement,
    b: *const GrElement,
    out: *mut *mut GrElement,
) -> GrStatus {
    guard(|| write_element(out, grading::anticommutator(element(a)?, element(b)?)))
}

/// Terms of even degree.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_even_part(
    p: *const GrElement,
    out: *mut *mut GrElement,
) -> GrStatus {
    guard(|| write_element(out, grading::even_part(element(p)?)))
}

/// Terms of odd degree.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_odd_part(
    p: *const GrElement,
    out: *mut *mut GrElement,
) -> GrStatus {
    guard(|| write_element(out, grading::odd_part(element(p)?)))
}

/// `p` minus its constant term.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_soul(
    p: *const GrElement,
    out: *mut *mut GrElement,
) -> GrStatus {
    guard(|| write_element(out, calculus::soul(element(p)?)))
}

/// Left derivative by `x_index`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_left_derivative(
    p: *const GrElement,
    index: u32,
    out: *mut *mut GrElement,
) -> GrStatus {
    guard(|| write_element(out, calculus::left_derivative(element(p)?, index)))
}

/// Berezin integral over `x_index` (equal to the left derivative).
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_berezin_integral(
    p: *const GrElement,
    index: u32,
    out: *mut *mut GrElement,
) -> GrStatus {
    guard(|| write_element(out, calculus::berezin_integral(element(p)?, index)))
}

/// Writes `p^exponent`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_pow(
    p: *const GrElement,
    exponent: u32,
    out: *mut *mut GrElement,
) -> GrStatus {
    guard(|| write_element(out, element(p)?.pow(exponent)))
}

/// Exact equality of canonical forms. NULL handles compare unequal.
///
/// # Safety
/// `a` and `b` must be NULL or live handles.
#[no_mangle]
pub unsafe extern "C" fn gr_element_equals(a: *const GrElement, b: *const GrElement) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gr_element_is_zero(p: *const GrElement) -> bool {
    p.as_ref().is_some_and(|h| h.0.is_zero())
}

/// Canonical text form, e.g. `1 + 3*x1*x2`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_to_string(
    p: *const GrElement,
    out: *mut *mut c_char,
) -> GrStatus {
    guard(|| write_string(out, print_element(element(p)?)))
}

/// JSON object keyed by dot-joined monomial indices.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_to_json(
    p: *const GrElement,
    out: *mut *mut c_char,
) -> GrStatus {
    guard(|| write_string(out, element_json(element(p)?).to_string()))
}

/// Coefficient of 1, as a rational string such as `7` or `-3/2`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_body(p: *const GrElement, out: *mut *mut c_char) -> GrStatus {
    guard(|| write_string(out, calculus::body(element(p)?).to_string()))
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_is_central(
    p: *const GrElement,
    n: u32,
    out: *mut bool,
) -> GrStatus {
    guard(|| write_out(out, grading::is_central(element(p)?, n)))
}

/// Least `k <= cap` with `p^k = 0`; writes 0 when no such `k` exists.
/// Fails with `ZeroElement` for `p = 0`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_element_nil_index(
    p: *const GrElement,
    cap: u32,
    out: *mut u32,
) -> GrStatus {
    guard(|| {
        let report = kernel(calculus::nil_index(element(p)?, cap))?;
        write_out(out, report.index.unwrap_or(0))
    })
}

/// Checks whether the polynomial `text` in `y1, y2, ...` is an identity of
/// the algebra on `n` generators. When it fails and `witness` is non-NULL,
/// the counterexample is written there as `y1 -> ...` lines.
///
/// # Safety
/// `text` must be a NUL-terminated string; `holds` must be writable;
/// `witness` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn gr_check_identity(
    text: *const c_char,
    n: u32,
    domain: GrDomain,
    trials: u64,
    seed: u64,
    holds: *mut bool,
    witness: *mut *mut c_char,
) -> GrStatus {
    guard(|| {
        let text = read_str(text)?;
        let f = kernel(parse(text, Namespace::Indeterminates).and_then(|e| eval_free(&e)))?;
        let domain = match domain {
            GrDomain::All => pi::Domain::All,
            GrDomain::Even => pi::Domain::Even,
            GrDomain::Odd => pi::Domain::Odd,
        };
        let verdict = kernel(pi::is_identity(&f, n, domain, trials, seed))?;
        write_out(holds, verdict.holds)?;
        if !witness.is_null() {
            let listing = verdict
                .witness
                .as_ref()
                .map(grassmann::cli::print::print_substitution);
            match listing {
                Some(listing) => write_string(witness, listing)?,
                None => witness.write(ptr::null_mut()),
            }
        }
        Ok(())
    })
}

/// Whether the free polynomial `text` in `x1..xn` lies in the ideal
/// generated by `x_i x_j + x_j x_i`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gr_in_ideal(text: *const c_char, n: u32, out: *mut bool) -> GrStatus {
    guard(|| {
        let text = read_str(text)?;
        let f = kernel(parse(text, Namespace::Generators).and_then(|e| eval_free(&e)))?;
        write_out(out, kernel(pi::in_ideal(&f, n))?)
    })
}
