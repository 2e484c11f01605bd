//! C interface to `grcodes`.
//!
//! Every function returns a [`GrStatus`]; on failure the message is kept per
//! thread and read with [`gr_last_error_message`]. Handles are opaque and
//! released with their matching `*_free` function. Strings returned to the
//! caller are released with [`gr_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString, c_char};
use std::panic::{AssertUnwindSafe, catch_unwind};
use std::ptr;

use grcodes::Error;
use grcodes::counting;
use grcodes::cyclic::{CanonicalCode, CodeParams, CyclicRing};
use grcodes::duality::{self, DualKind};
use grcodes::literal;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Limit = 5,
    OutOfBounds = 6,
    Internal = 7,
}

/// Which inner product a dual or self-duality test uses.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrDualKind {
    Euclidean = 0,
    Hermitian = 1,
}

impl From<GrDualKind> for DualKind {
    fn from(k: GrDualKind) -> Self {
        match k {
            GrDualKind::Euclidean => DualKind::Euclidean,
            GrDualKind::Hermitian => DualKind::Hermitian,
        }
    }
}

/// What [`gr_enumerate`] lists.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrCodeFamily {
    AllCyclic = 0,
    EuclideanSelfDual = 1,
    HermitianSelfDual = 2,
}

/// `GR(p^2, s)[u]/(u^(p^a) - 1)`.
pub struct GrCyclicRing {
    inner: CyclicRing,
}

/// A canonical code together with its ring.
pub struct GrCode {
    ring: CyclicRing,
    code: CanonicalCode,
}

pub struct GrCodeList {
    ring: CyclicRing,
    codes: Vec<CanonicalCode>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> GrStatus {
    match err {
        Error::Parse { .. } => GrStatus::Parse,
        Error::LimitExceeded { .. } => GrStatus::Limit,
        Error::Internal(_) => GrStatus::Internal,
        _ => GrStatus::Domain,
    }
}

enum Fail {
    Status(GrStatus, String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

// Run `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> GrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GrStatus::Ok,
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            GrStatus::Internal
        }
    }
}

fn null(what: &str) -> Fail {
    Fail::Status(GrStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    // SAFETY: caller passes a nul-terminated string
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|_| Fail::Status(GrStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    // SAFETY: non-null handles come from this library
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    // SAFETY: caller provides writable storage
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail::Status(GrStatus::Internal, "nul in output".into()))?;
    if out.is_null() {
        return Err(null("output pointer"));
    }
    // SAFETY: as above
    unsafe { out.write(c.into_raw()) };
    Ok(())
}

/// Message of the last failed call on this thread, or null if none.
/// Release with `gr_string_free`.
#[unsafe(no_mangle)]
pub extern "C" fn gr_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(c) => c.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: allocated by CString::into_raw
        drop(unsafe { CString::from_raw(s) });
    }
}

/// # Safety
/// `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_cyclic_ring_new(p: u64, s: usize, a: u32, out: *mut *mut GrCyclicRing) -> GrStatus {
    guard(|| {
        let inner = CyclicRing::new(CodeParams::new(p, s, a)?)?;
        unsafe { write_out(out, Box::into_raw(Box::new(GrCyclicRing { inner }))) }
    })
}

/// # Safety
/// `ring` must be null or a handle from `gr_cyclic_ring_new`.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_cyclic_ring_free(ring: *mut GrCyclicRing) {
    if !ring.is_null() {
        // SAFETY: allocated by Box::into_raw
        drop(unsafe { Box::from_raw(ring) });
    }
}

/// Length `p^a` of the ring's codes.
///
/// # Safety
/// `ring` must be a live handle and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_cyclic_ring_length(ring: *const GrCyclicRing, out: *mut usize) -> GrStatus {
    guard(|| unsafe {
        let r = deref(ring, "ring")?;
        write_out(out, r.inner.length())
    })
}

/// Parse a code literal such as `full(2,2,1;1,1;[T(1)])` over `ring`.
///
/// # Safety
/// `ring` must be a live handle, `text` a nul-terminated string, `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_code_parse(ring: *const GrCyclicRing, text: *const c_char, out: *mut *mut GrCode) -> GrStatus {
    guard(|| unsafe {
        let r = deref(ring, "ring")?;
        let text = read_str(text, "text")?;
        let code = literal::parse_code_literal(text)?.resolve(&r.inner)?;
        let handle = GrCode { ring: r.inner.clone(), code };
        write_out(out, Box::into_raw(Box::new(handle)))
    })
}

/// # Safety
/// `code` must be null or a handle produced by this library.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_code_free(code: *mut GrCode) {
    if !code.is_null() {
        // SAFETY: allocated by Box::into_raw
        drop(unsafe { Box::from_raw(code) });
    }
}

/// Literal form of `code`. Release with `gr_string_free`.
///
/// # Safety
/// `code` must be a live handle and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_code_to_string(code: *const GrCode, out: *mut *mut c_char) -> GrStatus {
    guard(|| unsafe {
        let c = deref(code, "code")?;
        write_string(out, literal::format_code(&c.ring.params(), c.ring.ring(), &c.code))
    })
}

/// `log_p |C|`.
///
/// # Safety
/// `code` must be a live handle and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_code_log_cardinality(code: *const GrCode, out: *mut usize) -> GrStatus {
    guard(|| unsafe {
        let c = deref(code, "code")?;
        write_out(out, c.ring.log_cardinality(&c.code))
    })
}

/// # Safety
/// `code` must be a live handle and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_code_dual(code: *const GrCode, kind: GrDualKind, out: *mut *mut GrCode) -> GrStatus {
    guard(|| unsafe {
        let c = deref(code, "code")?;
        let d = duality::dual(&c.ring, &c.code, kind.into())?;
        let handle = GrCode { ring: c.ring.clone(), code: d };
        write_out(out, Box::into_raw(Box::new(handle)))
    })
}

/// # Safety
/// `code` must be a live handle and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_code_is_self_dual(code: *const GrCode, kind: GrDualKind, out: *mut bool) -> GrStatus {
    guard(|| unsafe {
        let c = deref(code, "code")?;
        write_out(out, duality::is_self_dual(&c.ring, &c.code, kind.into())?)
    })
}

/// Whether two codes over the same ring are equal.
///
/// # Safety
/// Both handles must be live and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_code_equal(a: *const GrCode, b: *const GrCode, out: *mut bool) -> GrStatus {
    guard(|| unsafe {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        write_out(out, a.ring.params() == b.ring.params() && a.code == b.code)
    })
}

/// # Safety
/// `ring` must be a live handle and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_enumerate(ring: *const GrCyclicRing, family: GrCodeFamily, out: *mut *mut GrCodeList) -> GrStatus {
    guard(|| unsafe {
        let r = deref(ring, "ring")?;
        let codes = match family {
            GrCodeFamily::AllCyclic => r.inner.enumerate_ideals()?.collect(),
            GrCodeFamily::EuclideanSelfDual => duality::enumerate_self_dual(&r.inner, DualKind::Euclidean)?,
            GrCodeFamily::HermitianSelfDual => duality::enumerate_self_dual(&r.inner, DualKind::Hermitian)?,
        };
        let list = GrCodeList { ring: r.inner.clone(), codes };
        write_out(out, Box::into_raw(Box::new(list)))
    })
}

/// # Safety
/// `list` must be a live handle and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_code_list_len(list: *const GrCodeList, out: *mut usize) -> GrStatus {
    guard(|| unsafe {
        let l = deref(list, "list")?;
        write_out(out, l.codes.len())
    })
}

/// Copy of the `index`-th code; release with `gr_code_free`.
///
/// # Safety
/// `list` must be a live handle and `out` writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_code_list_get(list: *const GrCodeList, index: usize, out: *mut *mut GrCode) -> GrStatus {
    guard(|| unsafe {
        let l = deref(list, "list")?;
        let code = l.codes.get(index).cloned().ok_or_else(|| {
            Fail::Status(GrStatus::OutOfBounds, format!("index {index} of {}", l.codes.len()))
        })?;
        write_out(out, Box::into_raw(Box::new(GrCode { ring: l.ring.clone(), code })))
    })
}

/// # Safety
/// `list` must be null or a handle from `gr_enumerate`.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_code_list_free(list: *mut GrCodeList) {
    if !list.is_null() {
        // SAFETY: allocated by Box::into_raw
        drop(unsafe { Box::from_raw(list) });
    }
}

/// Number of Euclidean self-dual cyclic codes of length `n` over
/// `GR(p^2, s)`, as a decimal string. Release with `gr_string_free`.
///
/// # Safety
/// `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn gr_count_self_dual(p: u64, s: usize, n: u64, out: *mut *mut c_char) -> GrStatus {
    guard(|| unsafe { write_string(out, counting::count_e_composite(p, s, n)?.to_string()) })
}
