//! C interface to `polydiff`.
//!
//! Matrices are returned as opaque `PdMatrix` handles owned by the caller
//! and released with `pd_matrix_free`. Every fallible call returns a
//! `PdStatus`; `PD_STATUS_OK` is zero.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use polydiff::dynamic::{AnyMatrix, AnyVector, BasisRequest};
use polydiff::{BasisKind, Error, FieldTag, Rational, Scalar};

pub struct PdMatrix {
    inner: AnyMatrix,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DimensionMismatch = 3,
    DuplicateNodes = 4,
    Singular = 5,
    FieldDemotion = 6,
    IndexOutOfRange = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdBasis {
    Monomial = 0,
    Chebyshev = 1,
    Legendre = 2,
    Newton = 3,
    Lagrange = 4,
    Hermite = 5,
    Bernstein = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdField {
    Rational = 0,
    Real = 1,
    Complex = 2,
}

impl From<PdBasis> for BasisKind {
    fn from(b: PdBasis) -> Self {
        match b {
            PdBasis::Monomial => BasisKind::Monomial,
            PdBasis::Chebyshev => BasisKind::Chebyshev,
            PdBasis::Legendre => BasisKind::Legendre,
            PdBasis::Newton => BasisKind::Newton,
            PdBasis::Lagrange => BasisKind::Lagrange,
            PdBasis::Hermite => BasisKind::Hermite,
            PdBasis::Bernstein => BasisKind::Bernstein,
        }
    }
}

impl From<&Error> for PdStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::DimensionMismatch { .. } | Error::NotSquare { .. } | Error::ConfluencyLength { .. } => {
                PdStatus::DimensionMismatch
            }
            Error::DuplicateNodes { .. } => PdStatus::DuplicateNodes,
            Error::Singular | Error::NonInvertibleSeries => PdStatus::Singular,
            Error::FieldDemotion { .. } => PdStatus::FieldDemotion,
            Error::IndexOutOfRange(_) => PdStatus::IndexOutOfRange,
            _ => PdStatus::InvalidArgument,
        }
    }
}

fn guard(f: impl FnOnce() -> Result<(), PdStatus>) -> PdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PdStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => PdStatus::Internal,
    }
}

fn build(req: &BasisRequest, field: FieldTag, pinv: bool, out: *mut *mut PdMatrix) -> Result<(), PdStatus> {
    if out.is_null() {
        return Err(PdStatus::NullPointer);
    }
    let m = req.build(field, pinv).map_err(|e| PdStatus::from(&e))?;
    // SAFETY: `out` is non-null and the caller promises it is writable.
    unsafe { *out = Box::into_raw(Box::new(PdMatrix { inner: m })) };
    Ok(())
}

/// # Safety
/// `confluency` is null or points to `count` readable values.
unsafe fn read_confluency(confluency: *const usize, count: usize) -> Vec<usize> {
    if confluency.is_null() {
        Vec::new()
    } else {
        slice::from_raw_parts(confluency, count).to_vec()
    }
}

/// Differentiation matrix (or antiderivative with `pinv`) of a degree-indexed
/// basis in exact rational arithmetic.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn pd_matrix_degree(basis: PdBasis, degree: usize, pinv: bool, out: *mut *mut PdMatrix) -> PdStatus {
    guard(|| {
        let mut req = BasisRequest::new(basis.into());
        req.degree = Some(degree);
        build(&req, FieldTag::Rational, pinv, out)
    })
}

/// Node-based basis (`Newton`, `Lagrange`, `Hermite`) on double nodes.
/// `confluency` may be null (all ones); only Hermite accepts it.
///
/// # Safety
/// `nodes` points to `count` doubles, `confluency` is null or points to
/// `count` values, and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pd_matrix_nodes_f64(
    basis: PdBasis,
    nodes: *const f64,
    confluency: *const usize,
    count: usize,
    pinv: bool,
    out: *mut *mut PdMatrix,
) -> PdStatus {
    guard(|| {
        if nodes.is_null() {
            return Err(PdStatus::NullPointer);
        }
        let mut req = BasisRequest::new(basis.into());
        req.nodes = slice::from_raw_parts(nodes, count).iter().map(|&v| Scalar::Real(v)).collect();
        req.confluency = read_confluency(confluency, count);
        build(&req, FieldTag::Real, pinv, out)
    })
}

/// Node-based basis on exact rational nodes `num[i] / den[i]`.
///
/// # Safety
/// `num` and `den` point to `count` values each, `confluency` is null or
/// points to `count` values, and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pd_matrix_nodes_rational(
    basis: PdBasis,
    num: *const i64,
    den: *const i64,
    confluency: *const usize,
    count: usize,
    pinv: bool,
    out: *mut *mut PdMatrix,
) -> PdStatus {
    guard(|| {
        if num.is_null() || den.is_null() {
            return Err(PdStatus::NullPointer);
        }
        let num = slice::from_raw_parts(num, count);
        let den = slice::from_raw_parts(den, count);
        if den.contains(&0) {
            return Err(PdStatus::InvalidArgument);
        }
        let mut req = BasisRequest::new(basis.into());
        req.nodes = num
            .iter()
            .zip(den)
            .map(|(&n, &d)| Scalar::Rational(Rational::new(n.into(), d.into())))
            .collect();
        req.confluency = read_confluency(confluency, count);
        build(&req, FieldTag::Rational, pinv, out)
    })
}

/// # Safety
/// `m` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_matrix_rows(m: *const PdMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.inner.rows())
}

/// # Safety
/// `m` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_matrix_cols(m: *const PdMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.inner.cols())
}

/// # Safety
/// `m` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pd_matrix_field(m: *const PdMatrix, out: *mut PdField) -> PdStatus {
    guard(|| {
        let (Some(m), false) = (m.as_ref(), out.is_null()) else {
            return Err(PdStatus::NullPointer);
        };
        *out = match m.inner.tag() {
            FieldTag::Rational => PdField::Rational,
            FieldTag::Real => PdField::Real,
            FieldTag::Complex => PdField::Complex,
        };
        Ok(())
    })
}

/// Entry `(i, j)` as a double pair; the imaginary part is zero unless the
/// matrix is complex.
///
/// # Safety
/// `m` is a live handle; `re` and `im` are writable (`im` may be null).
#[no_mangle]
pub unsafe extern "C" fn pd_matrix_get(m: *const PdMatrix, i: usize, j: usize, re: *mut f64, im: *mut f64) -> PdStatus {
    guard(|| {
        let (Some(m), false) = (m.as_ref(), re.is_null()) else {
            return Err(PdStatus::NullPointer);
        };
        let v = m.inner.get(i, j).ok_or(PdStatus::IndexOutOfRange)?;
        let c = v.promote(FieldTag::Complex).map_err(|e| PdStatus::from(&e))?;
        let Scalar::Complex(c) = c else {
            return Err(PdStatus::Internal);
        };
        *re = c.re;
        if !im.is_null() {
            *im = c.im;
        }
        Ok(())
    })
}

/// Entry `(i, j)` as text (`p/q` for rationals). Free with `pd_string_free`.
/// Returns null on a bad handle or index.
///
/// # Safety
/// `m` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_matrix_entry_string(m: *const PdMatrix, i: usize, j: usize) -> *mut c_char {
    m.as_ref()
        .and_then(|m| m.inner.get(i, j))
        .and_then(|v| CString::new(v.to_string()).ok())
        .map_or(ptr::null_mut(), CString::into_raw)
}

/// `out = M·v` in double precision. Fails with `PD_STATUS_FIELD_DEMOTION`
/// on complex matrices.
///
/// # Safety
/// `v` points to `len` doubles and `out` to `out_len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn pd_matrix_apply_f64(
    m: *const PdMatrix,
    v: *const f64,
    len: usize,
    out: *mut f64,
    out_len: usize,
) -> PdStatus {
    guard(|| {
        let Some(m) = m.as_ref() else {
            return Err(PdStatus::NullPointer);
        };
        if v.is_null() || out.is_null() {
            return Err(PdStatus::NullPointer);
        }
        if out_len != m.inner.rows() {
            return Err(PdStatus::DimensionMismatch);
        }
        let x = AnyVector::Real(slice::from_raw_parts(v, len).to_vec());
        let y = m
            .inner
            .promote(FieldTag::Real)
            .and_then(|r| r.apply(&x))
            .map_err(|e| PdStatus::from(&e))?;
        let AnyVector::Real(y) = y else {
            return Err(PdStatus::Internal);
        };
        slice::from_raw_parts_mut(out, out_len).copy_from_slice(&y);
        Ok(())
    })
}

/// `‖M‖_∞`, or NaN for a null handle.
///
/// # Safety
/// `m` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_matrix_inf_norm(m: *const PdMatrix) -> f64 {
    m.as_ref().map_or(f64::NAN, |m| m.inner.inf_norm())
}

/// # Safety
/// `m` is null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pd_matrix_free(m: *mut PdMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `s` is null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn pd_status_message(status: PdStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        PdStatus::Ok => b"ok\0",
        PdStatus::NullPointer => b"null pointer\0",
        PdStatus::InvalidArgument => b"invalid argument\0",
        PdStatus::DimensionMismatch => b"dimension mismatch\0",
        PdStatus::DuplicateNodes => b"duplicate nodes\0",
        PdStatus::Singular => b"singular matrix\0",
        PdStatus::FieldDemotion => b"field demotion\0",
        PdStatus::IndexOutOfRange => b"index out of range\0",
        PdStatus::Internal => b"internal error\0",
    };
    msg.as_ptr().cast()
}
