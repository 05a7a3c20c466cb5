use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use dice_entropy_ffi::*;

unsafe fn take_string(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    dice_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(dice_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn cycle_law_through_handles() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(dice_hypergraph_cycle(3, &mut h), DiceStatus::Ok);
        assert_eq!(
            (dice_hypergraph_n(h), dice_hypergraph_m(h), dice_hypergraph_r(h)),
            (3, 3, 2)
        );

        let mut p = ptr::null_mut();
        assert_eq!(dice_pmf_exact(h, DiceEngine::Enumerate, &mut p), DiceStatus::Ok);
        assert_eq!(dice_pmf_len(p), 2);
        let (mut x, mut prob) = (0i64, 0f64);
        assert_eq!(dice_pmf_get(p, 0, &mut x, &mut prob), DiceStatus::Ok);
        assert_eq!((x, prob), (2, 0.75));
        let mut s = ptr::null_mut();
        assert_eq!(dice_pmf_get_exact(p, 1, &mut s), DiceStatus::Ok);
        assert_eq!(take_string(s), "1/4");
        assert_eq!(dice_pmf_get(p, 2, &mut x, &mut prob), DiceStatus::InvalidInput);

        let mut bits = 0.0;
        assert_eq!(dice_pmf_entropy(p, &mut bits), DiceStatus::Ok);
        assert!((bits - 0.811278).abs() < 1e-6);

        assert_eq!(dice_pmf_to_csv(p, &mut s), DiceStatus::Ok);
        assert_eq!(
            take_string(s),
            "x,numerator,denominator,probability_float\n2,3,4,0.75\n3,1,4,0.25\n"
        );

        let mut q = ptr::null_mut();
        assert_eq!(
            dice_pmf_exact(h, DiceEngine::InclusionExclusion, &mut q),
            DiceStatus::Ok
        );
        assert_eq!(dice_pmf_to_csv(q, &mut s), DiceStatus::Ok);
        assert_eq!(
            take_string(s),
            "x,numerator,denominator,probability_float\n2,3,4,0.75\n3,1,4,0.25\n"
        );

        dice_pmf_free(q);
        dice_pmf_free(p);
        dice_hypergraph_free(h);
    }
}

#[test]
fn construction_errors_set_codes_and_messages() {
    unsafe {
        let mut h = ptr::null_mut();
        let repeated = [0usize, 0];
        assert_eq!(
            dice_hypergraph_new(2, 2, repeated.as_ptr(), 1, &mut h),
            DiceStatus::InvalidInput
        );
        assert!(h.is_null());
        assert!(last_error().contains("repeats vertex 0"));

        let out_of_range = [0usize, 5];
        assert_eq!(
            dice_hypergraph_new(3, 2, out_of_range.as_ptr(), 1, &mut h),
            DiceStatus::InvalidInput
        );
        assert!(last_error().contains("out of range"));

        assert_eq!(
            dice_hypergraph_new(3, 2, ptr::null(), 1, &mut h),
            DiceStatus::NullPointer
        );
        assert_eq!(dice_hypergraph_cycle(3, ptr::null_mut()), DiceStatus::NullPointer);
        assert_eq!(dice_hypergraph_cycle(2, &mut h), DiceStatus::InvalidInput);

        let mut big = ptr::null_mut();
        assert_eq!(dice_hypergraph_cycle(9, &mut big), DiceStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(dice_hypergraph_canonical_key(big, &mut s), DiceStatus::CapExceeded);
        dice_hypergraph_free(big);

        assert_eq!(dice_search_json(9, 9, 2, true, 3, &mut s), DiceStatus::CapExceeded);
        assert_eq!(dice_pmf_len(ptr::null()), 0);
        dice_hypergraph_free(ptr::null_mut());
        dice_pmf_free(ptr::null_mut());
        dice_string_free(ptr::null_mut());
    }
}

#[test]
fn parse_degree_and_keys() {
    unsafe {
        let text = CString::new("n=4 r=2\n0 1\n1 0\n2 3\n3 2\n").unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(dice_hypergraph_parse(text.as_ptr(), &mut h), DiceStatus::Ok);
        let mut d = 0usize;
        assert_eq!(dice_hypergraph_degree(h, 2, &mut d), DiceStatus::Ok);
        assert_eq!(d, 2);
        assert_eq!(dice_hypergraph_degree(h, 4, &mut d), DiceStatus::InvalidInput);
        assert_eq!(dice_hypergraph_degree_gap(h, &mut d), DiceStatus::Ok);
        assert_eq!(d, 0);

        let mut s = ptr::null_mut();
        assert_eq!(dice_hypergraph_canonical_key(h, &mut s), DiceStatus::Ok);
        assert_eq!(take_string(s), "n4r2:01-01-23-23");

        let mut special = ptr::null_mut();
        assert_eq!(
            dice_hypergraph_special(4, DiceSpecial::DoubleEdges, &mut special),
            DiceStatus::Ok
        );
        assert_eq!(dice_hypergraph_to_text(special, &mut s), DiceStatus::Ok);
        assert_eq!(take_string(s), "n=4 r=2\n0 1\n0 1\n2 3\n2 3\n");
        assert_eq!(
            dice_hypergraph_special(4, DiceSpecial::StarPlusEdge, &mut special),
            DiceStatus::Ok
        );
        assert_eq!(dice_hypergraph_degree_gap(special, &mut d), DiceStatus::Ok);
        assert_eq!(d, 2);

        let bad = CString::new("n=3 r=2\n0 1 2\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(dice_hypergraph_parse(bad.as_ptr(), &mut g), DiceStatus::InvalidInput);

        dice_hypergraph_free(special);
        dice_hypergraph_free(h);
    }
}

#[test]
fn bounds_and_closed_forms() {
    unsafe {
        let mut v = 0.0;
        assert_eq!(dice_massey_bound(0.0, &mut v), DiceStatus::Ok);
        assert!((v - 0.2546143).abs() < 1e-6);
        assert_eq!(dice_massey_bound(-1.0, &mut v), DiceStatus::InvalidInput);
        assert_eq!(dice_vertex_count_bound(3, &mut v), DiceStatus::Ok);
        assert!((v - 2.33957).abs() < 1e-4);
        assert_eq!(dice_cycle_lower_bound(4, &mut v), DiceStatus::Ok);
        assert!((v - 0.80668).abs() < 1e-4);

        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(dice_pmf_cycle(7, &mut a), DiceStatus::Ok);
        assert_eq!(dice_pmf_binomial_even(7, &mut b), DiceStatus::Ok);
        let (mut ha, mut hb) = (0.0, 0.0);
        dice_pmf_entropy(a, &mut ha);
        dice_pmf_entropy(b, &mut hb);
        assert!((ha - hb).abs() < 1e-12);
        dice_pmf_free(a);
        dice_pmf_free(b);
    }
}

#[test]
fn json_reports() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(dice_hypergraph_cycle(3, &mut h), DiceStatus::Ok);
        let mut s = ptr::null_mut();

        assert_eq!(dice_moments_json(h, &mut s), DiceStatus::Ok);
        let m: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(m["variance"], "3/16");
        assert_eq!(m["mean"], "9/4");

        assert_eq!(dice_bounds_json(h, &mut s), DiceStatus::Ok);
        let b: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(b["violations"], serde_json::json!([]));

        assert_eq!(dice_monte_carlo_json(h, 5000, 9, &mut s), DiceStatus::Ok);
        let first = take_string(s);
        assert_eq!(dice_monte_carlo_json(h, 5000, 9, &mut s), DiceStatus::Ok);
        assert_eq!(first, take_string(s));

        assert_eq!(dice_search_json(4, 4, 2, true, 3, &mut s), DiceStatus::Ok);
        let r: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(r["candidates_evaluated"], 11);
        dice_hypergraph_free(h);
    }
}
