//! C ABI for parsing and running sessions and for Hom/Ext dimensions between session modules.
//!
//! Every function returns a [`GpwStatus`]; on anything but `Ok` the message is available from
//! [`gpw_last_error`] on the same thread. Handles are opaque and freed by their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gpw_core::homological::ext_dims;
use gpw_core::module::hom_dim;
use gpw_core::session::{parse_session, run_tasks, Report, ReportFormat, Session, SessionError};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GpwStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    UnknownReference = 4,
    ValidationFailed = 5,
    /// A computation between session objects failed, for instance modules over different algebras.
    Computation = 6,
    /// The output buffer is too short.
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GpwFormat {
    Text = 0,
    Structured = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GpwCounts {
    pub ok: usize,
    pub refuted: usize,
    pub infeasible: usize,
    pub error: usize,
}

/// A parsed and validated session.
pub struct GpwSession(Session);

/// The report of one run.
pub struct GpwReport(Report);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

type Failure = (GpwStatus, String);

fn set_error(msg: String) {
    // interior NULs cannot cross the ABI
    let c = CString::new(msg.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> GpwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GpwStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("internal panic: {msg}"));
            GpwStatus::Panic
        }
    }
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err((GpwStatus::NullArgument, format!("{what} is null")))
    } else {
        Ok(())
    }
}

/// # Safety
/// `p` must be null or point to a NUL-terminated string valid for the call.
unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    non_null(p, what)?;
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| (GpwStatus::InvalidUtf8, format!("{what}: {e}")))
}

fn session_status(e: &SessionError) -> GpwStatus {
    match e {
        SessionError::Syntax { .. } => GpwStatus::Syntax,
        SessionError::UnknownReference { .. } => GpwStatus::UnknownReference,
        SessionError::ValidationFailed { .. } => GpwStatus::ValidationFailed,
    }
}

/// Message of the last failed call on this thread, or null. Owned by the library and valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gpw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn gpw_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses and validates a session document.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn gpw_session_parse(text: *const c_char, out: *mut *mut GpwSession) -> GpwStatus {
    guard(|| {
        non_null(out, "out")?;
        let text = str_arg(text, "text")?;
        let session = parse_session(text).map_err(|e| (session_status(&e), e.to_string()))?;
        *out = Box::into_raw(Box::new(GpwSession(session)));
        Ok(())
    })
}

/// # Safety
/// `session` must be null or a handle from [`gpw_session_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gpw_session_free(session: *mut GpwSession) {
    if !session.is_null() {
        drop(Box::from_raw(session));
    }
}

/// # Safety
/// `session` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gpw_session_task_count(session: *const GpwSession, out: *mut usize) -> GpwStatus {
    guard(|| {
        non_null(session, "session")?;
        non_null(out, "out")?;
        *out = (*session).0.tasks.len();
        Ok(())
    })
}

/// Runs every task of the session.
///
/// # Safety
/// `session` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gpw_session_run(session: *const GpwSession, out: *mut *mut GpwReport) -> GpwStatus {
    guard(|| {
        non_null(session, "session")?;
        non_null(out, "out")?;
        let report = run_tasks(&(*session).0);
        *out = Box::into_raw(Box::new(GpwReport(report)));
        Ok(())
    })
}

/// # Safety
/// `report` must be null or a handle from [`gpw_session_run`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gpw_report_free(report: *mut GpwReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gpw_report_counts(report: *const GpwReport, out: *mut GpwCounts) -> GpwStatus {
    guard(|| {
        non_null(report, "report")?;
        non_null(out, "out")?;
        let c = (*report).0.summary;
        *out = GpwCounts {
            ok: c.ok,
            refuted: c.refuted,
            infeasible: c.infeasible,
            error: c.error,
        };
        Ok(())
    })
}

/// Renders the report; the string is freed with [`gpw_string_free`].
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gpw_report_emit(
    report: *const GpwReport,
    format: GpwFormat,
    out: *mut *mut c_char,
) -> GpwStatus {
    guard(|| {
        non_null(report, "report")?;
        non_null(out, "out")?;
        let format = match format {
            GpwFormat::Text => ReportFormat::Text,
            GpwFormat::Structured => ReportFormat::Structured,
        };
        let body = (*report).0.emit(format);
        let c = CString::new(body).map_err(|e| (GpwStatus::Computation, e.to_string()))?;
        *out = c.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gpw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `dim Hom(M, N)` for modules named in the session.
///
/// # Safety
/// `session` must be a live handle, the names NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gpw_hom_dim(
    session: *const GpwSession,
    m: *const c_char,
    n: *const c_char,
    out: *mut usize,
) -> GpwStatus {
    guard(|| {
        non_null(session, "session")?;
        non_null(out, "out")?;
        let reg = &(*session).0.registry;
        let lookup = |name| reg.module(name, "gpw_hom_dim").map_err(|e| (session_status(&e), e.to_string()));
        let (m, n) = (lookup(str_arg(m, "m")?)?, lookup(str_arg(n, "n")?)?);
        *out = hom_dim(&m, &n).map_err(|e| (GpwStatus::Computation, e.to_string()))?;
        Ok(())
    })
}

/// `dim Ext^i(M, N)` for `0 ≤ i ≤ i_max` into `dims`, which must hold `i_max + 1` entries.
///
/// # Safety
/// `session` must be a live handle, the names NUL-terminated and `dims` writable for `len`
/// entries.
#[no_mangle]
pub unsafe extern "C" fn gpw_ext_dims(
    session: *const GpwSession,
    m: *const c_char,
    n: *const c_char,
    i_max: usize,
    dims: *mut usize,
    len: usize,
) -> GpwStatus {
    guard(|| {
        non_null(session, "session")?;
        non_null(dims, "dims")?;
        if len <= i_max {
            return Err((GpwStatus::BufferTooSmall, format!("need {} entries, got {len}", i_max + 1)));
        }
        let reg = &(*session).0.registry;
        let lookup = |name| reg.module(name, "gpw_ext_dims").map_err(|e| (session_status(&e), e.to_string()));
        let (m, n) = (lookup(str_arg(m, "m")?)?, lookup(str_arg(n, "n")?)?);
        let v = ext_dims(&m, &n, i_max).map_err(|e| (GpwStatus::Computation, e.to_string()))?;
        std::slice::from_raw_parts_mut(dims, len)[..v.len()].copy_from_slice(&v);
        Ok(())
    })
}
