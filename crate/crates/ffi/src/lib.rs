//! C ABI over `strictclose`.
//!
//! Algebras and complexes are opaque heap handles created by `*_parse` or
//! `*_from_*` and released with the matching `*_free`. Every fallible call
//! returns an [`ScStatus`]; on failure [`sc_last_error_message`] describes
//! the error for the calling thread. Degree boxes are passed as `dim`
//! bounds, or `NULL` for the default box.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use strictclose::{
    default_box, format, is_strictly_closed, normalization, sr_is_strictly_closed, strict_closure, ClosedVerdict,
    ConductorVerdict, DegreeBox, Error, ExponentVector, MonomialAlgebra, SimplicialComplex, WeakArfDecision,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    DimensionMismatch = 4,
    NotContained = 5,
    FractionGroupMismatch = 6,
    OutsideBox = 7,
    Overflow = 8,
    InvalidComplex = 9,
    BufferTooSmall = 10,
    Panic = 11,
}

/// Three-way answer, numbered like the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScVerdict {
    Holds = 0,
    Fails = 1,
    Indeterminate = 2,
}

/// Opaque monomial algebra.
pub struct ScAlgebra {
    inner: MonomialAlgebra,
}

/// Opaque simplicial complex.
pub struct ScComplex {
    inner: SimplicialComplex,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(ScStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::DimensionMismatch { .. } => ScStatus::DimensionMismatch,
            Error::InvalidInput(_) | Error::NotInExtension(_) | Error::PresentationIncomplete(_) => ScStatus::InvalidInput,
            Error::NotContained(_) => ScStatus::NotContained,
            Error::FractionGroupMismatch => ScStatus::FractionGroupMismatch,
            Error::OutsideBox(_) => ScStatus::OutsideBox,
            Error::Overflow => ScStatus::Overflow,
            Error::Parse { .. } => ScStatus::Parse,
            Error::InvalidComplex(_) => ScStatus::InvalidComplex,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(ScStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `f`, turning errors and panics into a status plus a message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ScStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            ScStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            ScStatus::Panic
        }
    }
}

unsafe fn read_text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null("text"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(ScStatus::InvalidInput, "text is not valid UTF-8".into()))
}

unsafe fn algebra<'a>(a: *const ScAlgebra) -> Result<&'a MonomialAlgebra, Failure> {
    a.as_ref().map(|h| &h.inner).ok_or_else(|| null("algebra"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn new_handle(inner: MonomialAlgebra) -> *mut ScAlgebra {
    Box::into_raw(Box::new(ScAlgebra { inner }))
}

/// `bounds` holds `dim` entries, or is NULL for the default box.
unsafe fn degree_box(r: &MonomialAlgebra, bounds: *const u32) -> Result<DegreeBox, Failure> {
    if bounds.is_null() {
        return Ok(default_box(r)?);
    }
    let b = std::slice::from_raw_parts(bounds, r.dim()).to_vec();
    Ok(DegreeBox::new(ExponentVector::new(b))?)
}

/// Last error message on this thread, or NULL. Valid until the next call
/// into this library from the same thread.
#[no_mangle]
pub extern "C" fn sc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses an algebra file (`ambient d`, `generators`, rows, `end`).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_algebra_parse(text: *const c_char, out: *mut *mut ScAlgebra) -> ScStatus {
    guard(|| {
        let r = format::parse_algebra(read_text(text)?)?;
        write_out(out, new_handle(r))
    })
}

/// Builds an algebra from `count` generators stored row by row in `coords`
/// (`count * dim` entries).
///
/// # Safety
/// `coords` must point to `count * dim` readable values (it may be NULL when
/// `count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_algebra_from_generators(
    dim: usize,
    coords: *const u32,
    count: usize,
    out: *mut *mut ScAlgebra,
) -> ScStatus {
    guard(|| {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()).into());
        }
        let flat: &[u32] = match count {
            0 => &[],
            _ if coords.is_null() => return Err(null("coords")),
            _ => std::slice::from_raw_parts(coords, count.checked_mul(dim).ok_or(Error::Overflow)?),
        };
        let gens = flat.chunks(dim).map(|c| ExponentVector::new(c.to_vec()));
        let r = MonomialAlgebra::from_generators(dim, gens)?;
        write_out(out, new_handle(r))
    })
}

/// # Safety
/// `a` must be NULL or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sc_algebra_free(a: *mut ScAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Ambient dimension, or 0 for NULL.
///
/// # Safety
/// `a` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sc_algebra_dim(a: *const ScAlgebra) -> usize {
    a.as_ref().map_or(0, |h| h.inner.dim())
}

/// Number of minimal generators, or 0 for NULL.
///
/// # Safety
/// `a` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sc_algebra_generator_count(a: *const ScAlgebra) -> usize {
    a.as_ref().map_or(0, |h| h.inner.generators().len())
}

/// Copies the minimal generators, lexicographically sorted and row by row,
/// into `buf` of length `len >= count * dim`.
///
/// # Safety
/// `a` must be a live handle and `buf` must hold `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn sc_algebra_generators(a: *const ScAlgebra, buf: *mut u32, len: usize) -> ScStatus {
    guard(|| {
        let r = algebra(a)?;
        let need = r.generators().len() * r.dim();
        if len < need {
            return Err(Failure(ScStatus::BufferTooSmall, format!("need {need} entries, got {len}")));
        }
        if need == 0 {
            return Ok(());
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        let dst = std::slice::from_raw_parts_mut(buf, need);
        for (chunk, g) in dst.chunks_mut(r.dim()).zip(r.generators()) {
            chunk.copy_from_slice(g.coords());
        }
        Ok(())
    })
}

/// The algebra in file format. Free with [`sc_string_free`]; NULL on error.
///
/// # Safety
/// `a` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sc_algebra_to_string(a: *const ScAlgebra) -> *mut c_char {
    let mut result = ptr::null_mut();
    guard(|| {
        let s = format::write_algebra(algebra(a)?);
        result = CString::new(s).map_err(|_| Failure(ScStatus::InvalidInput, "embedded NUL".into()))?.into_raw();
        Ok(())
    });
    result
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Whether the monomial with exponent `v` (`dim` entries) lies in the algebra.
///
/// # Safety
/// `a` must be a live handle, `v` must hold `dim` values, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sc_algebra_contains(a: *const ScAlgebra, v: *const u32, dim: usize, out: *mut bool) -> ScStatus {
    guard(|| {
        let r = algebra(a)?;
        if v.is_null() {
            return Err(null("v"));
        }
        let v = ExponentVector::new(std::slice::from_raw_parts(v, dim).to_vec());
        write_out(out, r.contains(&v)?)
    })
}

/// Normalization found inside the box. `complete` may be NULL.
///
/// # Safety
/// `a` must be a live handle, `bounds` NULL or `dim` values, `out` writable,
/// `complete` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn sc_normalization(
    a: *const ScAlgebra,
    bounds: *const u32,
    out: *mut *mut ScAlgebra,
    complete: *mut bool,
) -> ScStatus {
    guard(|| {
        let r = algebra(a)?;
        let domain = degree_box(r, bounds)?;
        let (norm, done) = normalization(r, &domain)?;
        if !complete.is_null() {
            complete.write(done);
        }
        write_out(out, new_handle(norm))
    })
}

/// Strict closure of `base` in `ext`, or in the normalization of `base` when
/// `ext` is NULL. `complete` may be NULL.
///
/// # Safety
/// `base` must be a live handle, `ext` NULL or a live handle, `bounds` NULL
/// or `dim` values, `out` writable, `complete` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn sc_strict_closure(
    base: *const ScAlgebra,
    ext: *const ScAlgebra,
    bounds: *const u32,
    out: *mut *mut ScAlgebra,
    complete: *mut bool,
) -> ScStatus {
    guard(|| {
        let r = algebra(base)?;
        let domain = degree_box(r, bounds)?;
        let (t, t_complete) = match ext.as_ref() {
            Some(h) => (h.inner.clone(), true),
            None => normalization(r, &domain)?,
        };
        let report = strict_closure(r, &t, &domain)?;
        if !complete.is_null() {
            complete.write(report.complete && t_complete);
        }
        write_out(out, new_handle(report.closure))
    })
}

/// Strict closedness in the normalization.
///
/// # Safety
/// `a` must be a live handle, `bounds` NULL or `dim` values, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sc_is_strictly_closed(a: *const ScAlgebra, bounds: *const u32, out: *mut ScVerdict) -> ScStatus {
    guard(|| {
        let r = algebra(a)?;
        let verdict = match is_strictly_closed(r, &degree_box(r, bounds)?)? {
            ClosedVerdict::StrictlyClosed => ScVerdict::Holds,
            ClosedVerdict::NotStrictlyClosed { .. } => ScVerdict::Fails,
            ClosedVerdict::Indeterminate => ScVerdict::Indeterminate,
        };
        write_out(out, verdict)
    })
}

/// Weak-Arf decision (exact in one variable). On `Fails`, the witness
/// `(a, b, c)` is written to `witness` (`3 * dim` values) unless it is NULL.
///
/// # Safety
/// `a` must be a live handle, `bounds` NULL or `dim` values, `out` writable,
/// `witness` NULL or `3 * dim` writable values.
#[no_mangle]
pub unsafe extern "C" fn sc_weak_arf(
    a: *const ScAlgebra,
    bounds: *const u32,
    out: *mut ScVerdict,
    witness: *mut u32,
) -> ScStatus {
    guard(|| {
        let r = algebra(a)?;
        let verdict = match strictclose::decide_weak_arf(r, &degree_box(r, bounds)?)? {
            WeakArfDecision::WeaklyArf => ScVerdict::Holds,
            WeakArfDecision::Indeterminate => ScVerdict::Indeterminate,
            WeakArfDecision::NotWeaklyArf(w) => {
                if !witness.is_null() {
                    let dst = std::slice::from_raw_parts_mut(witness, 3 * r.dim());
                    for (chunk, v) in dst.chunks_mut(r.dim()).zip([&w.a, &w.b, &w.c]) {
                        chunk.copy_from_slice(v.coords());
                    }
                }
                ScVerdict::Fails
            }
        };
        write_out(out, verdict)
    })
}

/// Whether the maximal ideal times the normalization lies in the algebra.
///
/// # Safety
/// `a` must be a live handle, `bounds` NULL or `dim` values, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sc_conductor_criterion(a: *const ScAlgebra, bounds: *const u32, out: *mut ScVerdict) -> ScStatus {
    guard(|| {
        let r = algebra(a)?;
        let verdict = match strictclose::conductor_criterion(r, &degree_box(r, bounds)?)? {
            ConductorVerdict::Holds => ScVerdict::Holds,
            ConductorVerdict::Fails { .. } => ScVerdict::Fails,
            ConductorVerdict::Indeterminate => ScVerdict::Indeterminate,
        };
        write_out(out, verdict)
    })
}

/// Parses a complex file (`vertices n`, `facets`, rows, `end`).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sc_complex_parse(text: *const c_char, out: *mut *mut ScComplex) -> ScStatus {
    guard(|| {
        let inner = format::parse_complex(read_text(text)?)?;
        write_out(out, Box::into_raw(Box::new(ScComplex { inner })))
    })
}

/// Builds a complex from `facet_count` facets; facet `i` has
/// `facet_sizes[i]` consecutive 1-based labels in `labels`.
///
/// # Safety
/// `facet_sizes` must hold `facet_count` values, `labels` their sum, and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_complex_from_facets(
    n_vertices: usize,
    labels: *const u32,
    facet_sizes: *const usize,
    facet_count: usize,
    out: *mut *mut ScComplex,
) -> ScStatus {
    guard(|| {
        if facet_sizes.is_null() || labels.is_null() {
            return Err(null("facets"));
        }
        let sizes = std::slice::from_raw_parts(facet_sizes, facet_count);
        let total = sizes.iter().try_fold(0usize, |acc, &s| acc.checked_add(s)).ok_or(Error::Overflow)?;
        let flat = std::slice::from_raw_parts(labels, total);
        let mut facets = Vec::with_capacity(facet_count);
        let mut at = 0;
        for &s in sizes {
            facets.push(flat[at..at + s].iter().map(|&v| v as usize).collect());
            at += s;
        }
        let inner = SimplicialComplex::new(n_vertices, &facets)?;
        write_out(out, Box::into_raw(Box::new(ScComplex { inner })))
    })
}

/// # Safety
/// `c` must be NULL or a complex handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sc_complex_free(c: *mut ScComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Strict closedness of the Stanley-Reisner ring; exact.
///
/// # Safety
/// `c` must be a live complex handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sc_sr_is_strictly_closed(c: *const ScComplex, out: *mut bool) -> ScStatus {
    guard(|| {
        let delta = c.as_ref().map(|h| &h.inner).ok_or_else(|| null("complex"))?;
        write_out(out, sr_is_strictly_closed(delta))
    })
}
