//! Invariants of root data, Weyl groups and the braid action.

use proptest::prelude::*;
use qchar_core::braid::{braid_act_word, braid_relation_words, Dir};
use qchar_core::cartan::{CartanDatum, Cone, WeightVector, WeylWord};
use qchar_core::rings::{wt_degree, YMonomial};

const TYPES: [&str; 6] = ["A1", "A2", "A3", "B2", "C3", "G2"];

fn datum(s: &str) -> CartanDatum {
    CartanDatum::from_label(s).unwrap()
}

#[test]
fn length_is_inversion_count() {
    for t in TYPES {
        let d = datum(t);
        for w in d.weyl_elements() {
            let r = d.reduce_word(&w);
            assert_eq!(r.len(), d.inversion_count(&w), "{t} {w:?}");
            assert_eq!(d.length(&w), r.len());
        }
    }
}

#[test]
fn reduced_words_of_w0_agree_on_fundamental_weights() {
    for t in TYPES {
        let d = datum(t);
        let w0 = d.longest_word().clone();
        // w0 is an involution, so the reversed word is another reduced word
        let other = w0.reversed();
        assert!(d.same_element(&w0, &other), "{t}");
        for i in 0..d.rank() {
            let om = WeightVector::fundamental(d.rank(), i);
            assert_eq!(d.weyl_act_weight(&w0, &om), d.weyl_act_weight(&other, &om));
        }
    }
}

#[test]
fn w0_sends_simple_roots_to_negative_barred() {
    for t in TYPES {
        let d = datum(t);
        for i in 0..d.rank() {
            let img = d.weyl_act_weight(d.longest_word(), &d.simple_root(i));
            assert_eq!(img, d.simple_root(d.bar(i)).scale(-1), "{t} node {}", i + 1);
        }
    }
}

#[test]
fn cone_membership_matches_inverse_image() {
    // β ∈ wΛ₋ iff w^{-1}β has all coordinates ≤ 0
    for t in ["A2", "B2", "G2"] {
        let d = datum(t);
        let rank = d.rank();
        for w in d.weyl_elements() {
            let cone = Cone::new(&d, &w);
            for a in -3i64..=3 {
                for b in -3i64..=3 {
                    let beta = [a, b];
                    let pre = d.weyl_act_root_inverse(&w, &beta);
                    let inside = pre.iter().all(|&x| x <= 0);
                    assert_eq!(
                        cone.coords(&beta[..rank]).is_some(),
                        inside,
                        "{t} {w:?} {beta:?}"
                    );
                }
            }
        }
    }
}

fn arb_y(rank: usize) -> impl Strategy<Value = YMonomial> {
    prop::collection::vec((0..rank, -4i64..=4, -2i64..=2), 0..4)
        .prop_map(|ts| YMonomial::from_terms(&ts))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn braid_relations_hold(t in 0usize..TYPES.len(), seed in any::<u64>()) {
        let d = datum(TYPES[t]);
        let rank = d.rank();
        let m = YMonomial::from_terms(&[
            ((seed % rank as u64) as usize, (seed % 7) as i64 - 3, 1),
            (((seed / 7) % rank as u64) as usize, ((seed / 49) % 5) as i64 - 2, -1),
        ]);
        for i in 0..rank {
            for j in 0..rank {
                if i == j { continue; }
                let (l, r) = braid_relation_words(&d, i, j);
                prop_assert_eq!(
                    braid_act_word(&d, &l, Dir::Forward, &m),
                    braid_act_word(&d, &r, Dir::Forward, &m)
                );
            }
        }
    }

    #[test]
    fn inverse_undoes_forward_in_a3(m in arb_y(3), w in prop::collection::vec(0usize..3, 0..5)) {
        let d = datum("A3");
        let w = WeylWord(w);
        let there = braid_act_word(&d, &w, Dir::Forward, &m);
        prop_assert_eq!(braid_act_word(&d, &w, Dir::Inverse, &there), m);
    }

    #[test]
    fn braid_action_lifts_weyl_action_in_b2(m in arb_y(2), w in prop::collection::vec(0usize..2, 0..5)) {
        let d = datum("B2");
        let w = WeylWord(w);
        let img = braid_act_word(&d, &w, Dir::Forward, &m);
        prop_assert_eq!(wt_degree(&img, &d), d.weyl_act_weight(&w, &wt_degree(&m, &d)));
    }
}
