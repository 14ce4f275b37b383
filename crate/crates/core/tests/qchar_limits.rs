//! Invariants of w-normalized q-characters and projected limits.

use qchar_core::cartan::{CartanDatum, WeylWord};
use qchar_core::limits::{
    const_flip, factor_const_nonconst, projected_limit, verify_all, LimitRequest,
};
use qchar_core::qchar::{fm_expand, kr_highest_weight, w_normalized_qchar, DEFAULT_STEP_CAP};
use qchar_core::rings::{CAMonomial, Monomial, YMonomial};

fn datum(s: &str) -> CartanDatum {
    CartanDatum::from_label(s).unwrap()
}

#[test]
fn w_normalized_lies_in_cone_with_unit_extremal_term() {
    let d = datum("A2");
    for i in 0..2 {
        for k in 1..=6 {
            let q = fm_expand(&d, &kr_highest_weight(&d, i, k, 0), DEFAULT_STEP_CAP).unwrap();
            for w in d.weyl_elements() {
                // errors if any degree leaves wΛ₋
                let n = w_normalized_qchar(&d, &q, &w).unwrap();
                assert_eq!(n.coeff(&CAMonomial::one()), 1, "i={} k={k} {w:?}", i + 1);
                assert_eq!(n.coeff_sum(), q.dimension());
            }
        }
    }
}

fn sl3_s1_limit(cap: i64, widen: bool) -> String {
    let d = datum("A2");
    let mut req = LimitRequest::new(&d, &"s1".parse().unwrap(), 0, &YMonomial::one(), cap);
    if widen {
        req.k_max += 10;
        req.r_min -= 10;
    }
    let rep = projected_limit(&req).unwrap();
    assert!(rep.converged);
    rep.value.unwrap().canonical_text()
}

#[test]
fn larger_budgets_do_not_change_the_limit() {
    assert_eq!(sl3_s1_limit(3, false), sl3_s1_limit(3, true));
}

#[test]
fn factorization_round_trip_and_double_flip() {
    let d = datum("A2");
    for w in ["s1", "s2s1"] {
        let w: WeylWord = w.parse().unwrap();
        let req = LimitRequest::new(&d, &w, 0, &YMonomial::one(), 4);
        let s = projected_limit(&req).unwrap().value.unwrap();
        let (c, a) = factor_const_nonconst(&s).unwrap();
        assert_eq!(c.mul(&a).unwrap().poly(), s.poly(), "{w:?}");
        let back = const_flip(&d, &const_flip(&d, &c).unwrap()).unwrap();
        assert_eq!(back.poly(), c.poly());
        assert!(d.same_element(back.cone().word(), c.cone().word()));
    }
}

#[test]
fn catalog_has_no_refuted_clause() {
    for rep in verify_all() {
        assert_eq!(rep.refuted(), 0, "{}", rep.to_text());
        assert_eq!(rep.inconclusive(), 0, "{}", rep.to_text());
    }
}
