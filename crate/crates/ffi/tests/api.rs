use std::ffi::{CStr, CString};
use std::ptr;

use sporadic_ffi::*;

fn data_path() -> CString {
    CString::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data")).unwrap()
}

fn last_error() -> String {
    let p = sp_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    sp_string_free(s);
    out
}

fn open() -> *mut SpData {
    let mut data = ptr::null_mut();
    assert_eq!(unsafe { sp_data_open(data_path().as_ptr(), &mut data) }, SpStatus::Ok);
    data
}

#[test]
fn molien_through_handles() {
    unsafe {
        let data = open();
        let name = CString::new("M11").unwrap();
        let mut table = ptr::null_mut();
        assert_eq!(sp_data_table(data, name.as_ptr(), &mut table), SpStatus::Ok);
        let (mut classes, mut chars) = (0, 0);
        assert_eq!(sp_table_shape(table, &mut classes, &mut chars), SpStatus::Ok);
        assert_eq!((classes, chars), (10, 10));
        let mut s = ptr::null_mut();
        assert_eq!(sp_table_name(table, &mut s), SpStatus::Ok);
        assert_eq!(take(s), "M11");

        let mut profile = ptr::null_mut();
        assert_eq!(sp_molien_group(data, name.as_ptr(), 13, &mut profile), SpStatus::Ok);
        let mut len = 0;
        assert_eq!(sp_profile_len(profile, &mut len), SpStatus::Ok);
        assert_eq!(len, 14);
        let mut m = 0u64;
        assert_eq!(sp_profile_coefficient(profile, 13, &mut m), SpStatus::Ok);
        assert_eq!(m, 91);
        assert_eq!(sp_profile_coefficient(profile, 14, &mut m), SpStatus::OutOfRange);
        assert!(last_error().contains("out of range"));
        let mut series = ptr::null_mut();
        assert_eq!(sp_profile_series(profile, &mut series), SpStatus::Ok);
        assert!(take(series).ends_with("91t^13 + O(t^14)"));

        sp_profile_free(profile);
        sp_table_free(table);
        sp_data_free(data);
    }
}

#[test]
fn big_coefficients_as_strings() {
    unsafe {
        let data = open();
        let name = CString::new("ON").unwrap();
        let mut profile = ptr::null_mut();
        assert_eq!(sp_molien_group(data, name.as_ptr(), 15, &mut profile), SpStatus::Ok);
        let mut m = 0u64;
        assert_eq!(sp_profile_coefficient(profile, 15, &mut m), SpStatus::Ok);
        assert_eq!(m, 230067642077481);
        let mut s = ptr::null_mut();
        assert_eq!(sp_profile_coefficient_str(profile, 12, &mut s), SpStatus::Ok);
        assert_eq!(take(s), "14039408007");
        sp_profile_free(profile);
        sp_data_free(data);
    }
}

#[test]
fn bounds_and_verify() {
    unsafe {
        let data = open();
        let mut b = 0i64;
        let m = CString::new("M").unwrap();
        assert_eq!(sp_bound(data, m.as_ptr(), &mut b), SpStatus::Ok);
        assert_eq!(b, 196874);
        let nope = CString::new("Nope").unwrap();
        assert_eq!(sp_bound(data, nope.as_ptr(), &mut b), SpStatus::NotFound);

        let mut failed = usize::MAX;
        let mut report = ptr::null_mut();
        assert_eq!(sp_verify(data, &mut failed, &mut report), SpStatus::Ok);
        let report = take(report);
        assert_eq!(failed, 0, "{report}");
        assert!(report.contains("PASS [bound] M: computed 196874"));
        sp_data_free(data);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut table = ptr::null_mut();
        let truncated = br#"{"group": "S3", "order": 6, "classes": ["#;
        assert_eq!(sp_table_from_json(truncated.as_ptr(), truncated.len(), &mut table), SpStatus::Parse);
        assert!(table.is_null());
        assert!(last_error().starts_with("parse error"));

        assert_eq!(sp_table_from_json(ptr::null(), 0, &mut table), SpStatus::NullPointer);
        assert_eq!(sp_data_open(ptr::null(), ptr::null_mut()), SpStatus::NullPointer);

        let missing = CString::new("/nonexistent/data").unwrap();
        let mut data = ptr::null_mut();
        assert_ne!(sp_data_open(missing.as_ptr(), &mut data), SpStatus::Ok);
        assert!(data.is_null());

        let data = open();
        let mut profile = ptr::null_mut();
        let m11 = CString::new("M11").unwrap();
        assert_eq!(sp_molien_group(data, m11.as_ptr(), 0, &mut profile), SpStatus::InvalidArgument);
        let bad = [0xffu8, 0];
        assert_eq!(sp_molien_group(data, bad.as_ptr().cast(), 4, &mut profile), SpStatus::InvalidUtf8);
        sp_data_free(data);

        sp_string_free(ptr::null_mut());
        sp_table_free(ptr::null_mut());
        let v = CStr::from_ptr(sp_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn table_from_bytes() {
    let bytes = std::fs::read(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/tables/A5.json")).unwrap();
    unsafe {
        let mut table = ptr::null_mut();
        assert_eq!(sp_table_from_json(bytes.as_ptr(), bytes.len(), &mut table), SpStatus::Ok);
        let mut profile = ptr::null_mut();
        assert_eq!(sp_molien(table, 1, 12, &mut profile), SpStatus::Ok);
        let mut m = 0u64;
        sp_profile_coefficient(profile, 10, &mut m);
        assert_eq!(m, 3);
        assert_eq!(sp_molien(table, 99, 12, &mut profile), SpStatus::OutOfRange);
        sp_profile_free(profile);
        sp_table_free(table);
    }
}
