use std::ffi::{CStr, CString};
use std::ptr;

use meanders_ffi::*;

unsafe fn last_error() -> String {
    CStr::from_ptr(meanders_last_error())
        .to_string_lossy()
        .into_owned()
}

#[test]
fn sample_inspect_and_free() {
    unsafe {
        let fam = CString::new("comb").unwrap();
        let mut sys = ptr::null_mut();
        assert_eq!(
            meanders_sample(fam.as_ptr(), 50, 3, 0, &mut sys),
            MeandersStatus::Ok
        );
        assert_eq!(meanders_system_n(sys), 50);

        let mut cycles = 0;
        assert_eq!(meanders_count_cycles(sys, &mut cycles), MeandersStatus::Ok);
        let mut largest = 0;
        assert_eq!(
            meanders_largest_half_length(sys, &mut largest),
            MeandersStatus::Ok
        );
        assert!(cycles >= 1 && (1..=50).contains(&largest));

        let mut counts = MeandersSpecialCounts::default();
        assert_eq!(
            meanders_special_counts(sys, &mut counts),
            MeandersStatus::Ok
        );
        assert_eq!(counts.staples, counts.upper_staples + counts.lower_staples);

        let mut json = ptr::null_mut();
        assert_eq!(meanders_system_to_json(sys, &mut json), MeandersStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(
            meanders_system_from_json(json, &mut back),
            MeandersStatus::Ok
        );
        let (mut u1, mut l1, mut u2, mut l2) = (
            vec![0u32; 100],
            vec![0u32; 100],
            vec![0u32; 100],
            vec![0u32; 100],
        );
        assert_eq!(
            meanders_system_partners(sys, u1.as_mut_ptr(), l1.as_mut_ptr(), 100),
            MeandersStatus::Ok
        );
        assert_eq!(
            meanders_system_partners(back, u2.as_mut_ptr(), l2.as_mut_ptr(), 100),
            MeandersStatus::Ok
        );
        assert_eq!((u1, l1), (u2, l2));

        meanders_string_free(json);
        meanders_system_free(back);
        meanders_system_free(sys);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut sys = ptr::null_mut();
        let crossing = [2u32, 3, 0, 1];
        let flat = [1u32, 0, 3, 2];
        assert_eq!(
            meanders_system_from_partners(crossing.as_ptr(), flat.as_ptr(), 4, &mut sys),
            MeandersStatus::InvalidInput
        );
        assert!(last_error().contains("cross"), "{}", last_error());
        assert!(sys.is_null());

        let fam = CString::new("no-such-family").unwrap();
        assert_eq!(
            meanders_sample(fam.as_ptr(), 5, 0, 0, &mut sys),
            MeandersStatus::InvalidArgument
        );
        assert_eq!(
            meanders_sample(ptr::null(), 5, 0, 0, &mut sys),
            MeandersStatus::NullPointer
        );

        let bad = CString::new("{\"n\":1}").unwrap();
        assert_eq!(
            meanders_system_from_json(bad.as_ptr(), &mut sys),
            MeandersStatus::InvalidInput
        );

        let mut out = 0u64;
        assert_eq!(
            meanders_count_cycles(ptr::null(), &mut out),
            MeandersStatus::NullPointer
        );
        assert_eq!(meanders_system_n(ptr::null()), 0);
        meanders_system_free(ptr::null_mut());
        meanders_string_free(ptr::null_mut());
    }
}

#[test]
fn analytic_helpers() {
    unsafe {
        let mut v = 0.0;
        assert_eq!(meanders_expected_ringlets(2, &mut v), MeandersStatus::Ok);
        assert_eq!(v, 0.75);
        assert_eq!(
            meanders_expected_staples(0, &mut v),
            MeandersStatus::InvalidArgument
        );
        assert_eq!(
            meanders_expected_rings(3, ptr::null_mut()),
            MeandersStatus::NullPointer
        );
    }
    let p1 = meanders_rainbow_gcd_law(1);
    assert!((p1 - 6.0 / std::f64::consts::PI.powi(2)).abs() < 1e-12);
    assert!(meanders_rainbow_gcd_law(0).is_nan());
}
