use crate::rings::{CAMonomial, ExpMap, SparsePoly};

/// `π_R`: replaces every `A_{i,s}^{±1}` with `s < R` by `e^{±α_i}`.
pub fn project_monomial(r: i64, m: &CAMonomial) -> CAMonomial {
    let mut a = ExpMap::new();
    let mut e = m.e.clone();
    for (k, x) in m.a.iter() {
        if k.shift < r {
            e.add(k.node, x);
        } else {
            a.add(*k, x);
        }
    }
    CAMonomial { a, e }
}

pub fn project_pi_r(r: i64, p: &SparsePoly<CAMonomial>) -> SparsePoly<CAMonomial> {
    p.map_monomials(|m| project_monomial(r, m))
}

/// Forgets spectral parameters entirely: `A_{i,s} ↦ e^{α_i}`.
pub fn forget_spectral(p: &SparsePoly<CAMonomial>) -> SparsePoly<CAMonomial> {
    project_pi_r(i64::MAX, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;
    use crate::qchar::kr_normalized_closed;
    use crate::rings::{Monomial, WtDegree};
    use proptest::prelude::*;

    #[test]
    fn sl2_example() {
        let a1 = CartanDatum::from_label("A1").unwrap();
        let chi = kr_normalized_closed(&a1, 0, 3, 0).unwrap();
        let p = project_pi_r(-1, &chi);
        let x = CAMonomial::a_var(0, 0, -1);
        let want = SparsePoly::from_terms([
            (CAMonomial::one(), 1),
            (x.clone(), 1),
            (x.mul(&CAMonomial::e_root(&[-1])), 1),
            (x.mul(&CAMonomial::e_root(&[-2])), 1),
        ]);
        assert_eq!(p, want);
        assert_eq!(project_pi_r(i64::MIN, &chi), chi);
    }

    fn arb_ca() -> impl Strategy<Value = SparsePoly<CAMonomial>> {
        let mono = (
            prop::collection::vec((0usize..2, -4i64..4, -2i64..3), 0..4),
            prop::collection::vec(-2i64..3, 2),
        )
            .prop_map(|(a, e)| CAMonomial::from_a_terms(&a).mul(&CAMonomial::e_root(&e)));
        prop::collection::vec((mono, -2i64..3), 0..4).prop_map(SparsePoly::from_terms)
    }

    proptest! {
        #[test]
        fn homomorphism(x in arb_ca(), y in arb_ca(), r in -5i64..5) {
            let a2 = CartanDatum::from_label("A2").unwrap();
            prop_assert_eq!(project_pi_r(r, &(&x * &y)), &project_pi_r(r, &x) * &project_pi_r(r, &y));
            for (m, _) in x.iter() {
                prop_assert_eq!(project_monomial(r, m).wt_degree(&a2), m.wt_degree(&a2));
            }
        }
    }
}
