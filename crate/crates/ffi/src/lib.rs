//! C ABI over the `sporadic` crate.
//!
//! Objects cross the boundary as opaque handles that the caller frees with
//! the matching `*_free` function. Every fallible call returns an
//! [`SpStatus`]; on failure the message is available from
//! [`sp_last_error`] on the same thread. Strings returned through out
//! pointers are owned by the caller and released with [`sp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use num_bigint::BigUint;
use sporadic::cli::{self, CheckStatus};
use sporadic::data::DataDir;
use sporadic::{molien, rdplan, CharacterTable, Error, MolienProfile};

/// Result codes. `SP_STATUS_OK` is zero; everything else is a failure.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Validation = 4,
    NotFound = 5,
    OutOfRange = 6,
    InvalidArgument = 7,
    Io = 8,
    /// The value does not fit the requested integer type.
    Overflow = 9,
    Panic = 10,
}

/// A data directory: manifest, tables, models and group metadata.
pub struct SpData(DataDir);

/// A validated character table.
pub struct SpTable(Arc<CharacterTable>);

/// Invariant counts `m_0..m_D` for one character.
pub struct SpProfile(MolienProfile);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> SpStatus {
    match e {
        Error::Parse { .. } => SpStatus::Parse,
        Error::Validation(_)
        | Error::NotRational(_)
        | Error::MissingPowerMap { .. }
        | Error::NonIntegerCoefficient { .. }
        | Error::CapExceeded { .. }
        | Error::ProfileTooShort { .. } => SpStatus::Validation,
        Error::UnknownGroup(_) | Error::MissingTable(_) | Error::MissingGroup(_) => SpStatus::NotFound,
        Error::IndexOutOfRange { .. } => SpStatus::OutOfRange,
        Error::InvalidArgument(_) => SpStatus::InvalidArgument,
        Error::Io { .. } => SpStatus::Io,
    }
}

struct Fail(SpStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(SpStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            SpStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SpStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(SpStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn sp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn sp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Opens a data directory containing `manifest.json`.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_data_open(path: *const c_char, out: *mut *mut SpData) -> SpStatus {
    guard(|| {
        let path = str_arg(path, "path")?;
        let data = DataDir::open(path)?;
        data.metadata()?;
        put(out, Box::into_raw(Box::new(SpData(data))), "out")
    })
}

/// # Safety
/// `data` must be null or a handle from `sp_data_open`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sp_data_free(data: *mut SpData) {
    if !data.is_null() {
        drop(Box::from_raw(data));
    }
}

/// Parses and validates a character table from JSON bytes.
///
/// # Safety
/// `bytes` must point to `len` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_table_from_json(bytes: *const u8, len: usize, out: *mut *mut SpTable) -> SpStatus {
    guard(|| {
        if bytes.is_null() {
            return Err(null("bytes"));
        }
        let table = CharacterTable::from_json_bytes(std::slice::from_raw_parts(bytes, len))?;
        put(out, Box::into_raw(Box::new(SpTable(Arc::new(table)))), "out")
    })
}

/// Loads a shipped table by name.
///
/// # Safety
/// `data` must be a live handle, `name` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn sp_data_table(data: *const SpData, name: *const c_char, out: *mut *mut SpTable) -> SpStatus {
    guard(|| {
        let data = handle(data, "data")?;
        let table = data.0.table(str_arg(name, "name")?)?;
        put(out, Box::into_raw(Box::new(SpTable(table))), "out")
    })
}

/// # Safety
/// `table` must be null or a table handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sp_table_free(table: *mut SpTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// # Safety
/// `table` must be a live handle; `classes` and `characters` writable.
#[no_mangle]
pub unsafe extern "C" fn sp_table_shape(table: *const SpTable, classes: *mut usize, characters: *mut usize) -> SpStatus {
    guard(|| {
        let t = &handle(table, "table")?.0;
        put(classes, t.num_classes(), "classes")?;
        put(characters, t.characters().len(), "characters")
    })
}

/// Writes the table name as a new string.
///
/// # Safety
/// `table` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sp_table_name(table: *const SpTable, out: *mut *mut c_char) -> SpStatus {
    guard(|| {
        let t = &handle(table, "table")?.0;
        put(out, c_string(t.name().to_owned()), "out")
    })
}

/// Invariant counts up to `max_degree` for character `index` of `table`.
///
/// # Safety
/// `table` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sp_molien(
    table: *const SpTable,
    index: usize,
    max_degree: usize,
    out: *mut *mut SpProfile,
) -> SpStatus {
    guard(|| {
        let t = &handle(table, "table")?.0;
        let p = molien::molien_coefficients(t, index, max_degree)?;
        put(out, Box::into_raw(Box::new(SpProfile(p))), "out")
    })
}

/// Invariant counts for a sporadic group (through its plan) or a table name.
///
/// # Safety
/// `data` must be a live handle, `name` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn sp_molien_group(
    data: *const SpData,
    name: *const c_char,
    max_degree: usize,
    out: *mut *mut SpProfile,
) -> SpStatus {
    guard(|| {
        let data = handle(data, "data")?;
        if max_degree < 1 {
            return Err(Fail(SpStatus::InvalidArgument, "degree limit must be at least 1".into()));
        }
        let (_, p) = cli::molien_for(&data.0, str_arg(name, "name")?, max_degree)?;
        put(out, Box::into_raw(Box::new(SpProfile(p))), "out")
    })
}

/// # Safety
/// `profile` must be null or a profile handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sp_profile_free(profile: *mut SpProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}

/// Number of coefficients, `D + 1`.
///
/// # Safety
/// `profile` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sp_profile_len(profile: *const SpProfile, out: *mut usize) -> SpStatus {
    guard(|| put(out, handle(profile, "profile")?.0.coefficients.len(), "out"))
}

/// `m_d` as an unsigned 64-bit integer; `SP_OVERFLOW` if it does not fit.
///
/// # Safety
/// `profile` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sp_profile_coefficient(profile: *const SpProfile, degree: usize, out: *mut u64) -> SpStatus {
    guard(|| {
        let m = coefficient(handle(profile, "profile")?, degree)?;
        let v = u64::try_from(m).map_err(|_| Fail(SpStatus::Overflow, format!("m_{degree} = {m} exceeds 64 bits")))?;
        put(out, v, "out")
    })
}

/// `m_d` in decimal, as a new string.
///
/// # Safety
/// `profile` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sp_profile_coefficient_str(
    profile: *const SpProfile,
    degree: usize,
    out: *mut *mut c_char,
) -> SpStatus {
    guard(|| {
        let m = coefficient(handle(profile, "profile")?, degree)?;
        put(out, c_string(m.to_string()), "out")
    })
}

/// The series in `1 + t^2 + ... + O(t^N)` notation, as a new string.
///
/// # Safety
/// `profile` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sp_profile_series(profile: *const SpProfile, out: *mut *mut c_char) -> SpStatus {
    guard(|| put(out, c_string(handle(profile, "profile")?.0.format_series()), "out"))
}

fn coefficient(p: &SpProfile, degree: usize) -> Result<&BigUint, Fail> {
    let len = p.0.coefficients.len();
    p.0.coefficient(degree).ok_or_else(|| Error::IndexOutOfRange { what: "degree", index: degree, len }.into())
}

/// The dimension bound for a group: `dim P(V)` minus the number of
/// invariants in its plan.
///
/// # Safety
/// `data` must be a live handle, `group` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn sp_bound(data: *const SpData, group: *const c_char, out: *mut i64) -> SpStatus {
    guard(|| {
        let meta = handle(data, "data")?.0.metadata()?;
        let plan = meta.plan(str_arg(group, "group")?)?;
        put(out, rdplan::compute_bound(plan).rd_bound, "out")
    })
}

/// Runs every check over the data directory. Writes the number of failed
/// checks and, if `report` is not null, the text report as a new string.
///
/// # Safety
/// `data` must be a live handle; `failed` writable; `report` null or writable.
#[no_mangle]
pub unsafe extern "C" fn sp_verify(data: *const SpData, failed: *mut usize, report: *mut *mut c_char) -> SpStatus {
    guard(|| {
        let lines = cli::verify(&handle(data, "data")?.0)?;
        let n = lines.iter().filter(|l| l.status == CheckStatus::Fail).count();
        put(failed, n, "failed")?;
        if !report.is_null() {
            let text: String = lines.iter().map(|l| format!("{l}\n")).collect();
            report.write(c_string(text));
        }
        Ok(())
    })
}
