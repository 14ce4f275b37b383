use crate::cartan::{CartanDatum, Cone, WeylWord};
use crate::error::Result;
use crate::rings::{CAMonomial, GradedSeries, Monomial, SparsePoly};

/// `1/(1 − x)^p` truncated at the cone height cap, for a monomial `x` of
/// positive height.
pub fn geometric_power(cone: &Cone, cap: i64, x: &CAMonomial, p: u32) -> Result<GradedSeries> {
    let one = GradedSeries::one(cone.clone(), cap);
    let h = one.height(x).unwrap_or(0).max(1);
    let base = SparsePoly::from_terms((0..=cap / h).map(|n| (x.pow(n), 1)));
    let base = GradedSeries::from_poly(cone.clone(), cap, &base)?;
    (0..p).try_fold(one, |acc, _| acc.mul(&base))
}

/// `∏_α (1/(1 − e^{σα}))^{mult(α)}` over positive roots.
fn root_product(
    datum: &CartanDatum,
    cone: &Cone,
    cap: i64,
    sign: i64,
    mult: impl Fn(&[i64]) -> i64,
) -> Result<GradedSeries> {
    let mut acc = GradedSeries::one(cone.clone(), cap);
    for root in datum.positive_roots() {
        let p = mult(root);
        if p > 0 {
            let x = CAMonomial::e_root(&root.iter().map(|c| sign * c).collect::<Vec<_>>());
            acc = acc.mul(&geometric_power(cone, cap, &x, p as u32)?)?;
        }
    }
    Ok(acc)
}

/// `∏_{α>0} (1/(1 − e^α))^{α(ω∨_ī)}` in the cone `w0Λ₋`.
pub fn w0_product_formula(datum: &CartanDatum, i: usize, cap: i64) -> Result<GradedSeries> {
    datum.check_node(i)?;
    let cone = Cone::new(datum, datum.longest_word());
    let ib = datum.bar(i);
    root_product(datum, &cone, cap, 1, |root| root[ib])
}

/// `∏_{α>0} (1/(1 − e^{−α}))^{max(0, α(μ))}` in the cone `Λ₋`, with `μ`
/// given in the basis of fundamental coweights.
pub fn shifted_const_formula(datum: &CartanDatum, mu: &[i64], cap: i64) -> Result<GradedSeries> {
    let cone = Cone::new(datum, &WeylWord::identity());
    root_product(datum, &cone, cap, -1, |root| {
        root.iter().zip(mu).map(|(c, m)| c * m).sum::<i64>().max(0)
    })
}

/// `Σ_{t=-1}^{last} ∏_{s=0}^{t} A^{-1}_{node, start − step·s}`, i.e. the
/// partial products of a descending A-string (`last = None` runs until the
/// height cap is exceeded).
pub fn a_chain(
    cone: &Cone,
    cap: i64,
    node: usize,
    start: i64,
    step: i64,
    last: Option<i64>,
) -> Result<GradedSeries> {
    let probe = GradedSeries::one(cone.clone(), cap);
    let mut poly = SparsePoly::one();
    let mut cur = CAMonomial::one();
    let mut t = 0i64;
    loop {
        if last.is_some_and(|l| t > l) {
            break;
        }
        cur = cur.mul(&CAMonomial::a_var(node, start - step * t, -1));
        match probe.height(&cur) {
            Some(h) if h <= cap => poly.add_term(cur.clone(), 1),
            Some(_) if last.is_none() => break,
            Some(_) => {}
            None => poly.add_term(cur.clone(), 1),
        }
        t += 1;
        if t > cap + 1 && last.is_none() {
            break;
        }
    }
    GradedSeries::from_poly(cone.clone(), cap, &poly)
}

/// `Σ_{M ≥ N ≥ 0} e^{σ(Nα1 + Mα2)}` for type A2.
pub fn sl3_s2s1_constant(cone: &Cone, cap: i64, sign: i64) -> Result<GradedSeries> {
    let a = geometric_power(cone, cap, &CAMonomial::e_root(&[0, sign]), 1)?;
    let b = geometric_power(cone, cap, &CAMonomial::e_root(&[sign, sign]), 1)?;
    a.mul(&b)
}

/// Paper closed forms for `π^w_{q,∞}` in types A1 and A2 with `i = 1`,
/// `m = 1`.
pub mod closed {
    use super::*;

    pub fn sl2_e(datum: &CartanDatum, cap: i64) -> Result<GradedSeries> {
        a_chain(&Cone::new(datum, &WeylWord::identity()), cap, 0, 0, 2, None)
    }

    pub fn sl2_s1(datum: &CartanDatum, cap: i64) -> Result<GradedSeries> {
        let cone = Cone::new(datum, &WeylWord::from_labels(&[1]));
        geometric_power(&cone, cap, &CAMonomial::e_root(&[1]), 1)
    }

    /// `Σ_{−1 ≤ m ≤ n} ∏_{l=0}^{n} A^{-1}_{1,−2l} ∏_{s=0}^{m} A^{-1}_{2,−2s+1}`.
    pub fn sl3_e(datum: &CartanDatum, cap: i64) -> Result<GradedSeries> {
        let cone = Cone::new(datum, &WeylWord::identity());
        let mut poly = SparsePoly::zero();
        for n in -1..cap {
            for m in -1..=n {
                let mut x = CAMonomial::one();
                for l in 0..=n {
                    x = x.mul(&CAMonomial::a_var(0, -2 * l, -1));
                }
                for s in 0..=m {
                    x = x.mul(&CAMonomial::a_var(1, -2 * s + 1, -1));
                }
                poly.add_term(x, 1);
            }
        }
        GradedSeries::from_poly(cone, cap, &poly)
    }

    /// `(Σ_n e^{nα1}) (Σ_{m≥−1} ∏_{s=0}^{m} A^{-1}_{2,1−2s})`.
    pub fn sl3_s1(datum: &CartanDatum, cap: i64) -> Result<GradedSeries> {
        let cone = Cone::new(datum, &WeylWord::from_labels(&[1]));
        let c = geometric_power(&cone, cap, &CAMonomial::e_root(&[1, 0]), 1)?;
        c.mul(&a_chain(&cone, cap, 1, 1, 2, None)?)
    }

    /// `Σ_{M≥N≥0} e^{Nα1+Mα2}`.
    pub fn sl3_s2s1(datum: &CartanDatum, cap: i64) -> Result<GradedSeries> {
        sl3_s2s1_constant(&Cone::new(datum, &WeylWord::from_labels(&[2, 1])), cap, 1)
    }

    /// Non-constant part for `w = s1`, `m = Y_{2,2}⋯Y_{2,2l}`:
    /// `Σ_{N≥−1} Σ_{M=−1}^{min(N,l−1)} ∏_{j=0}^{N} A^{-1}_{2,2l+1−2j} ∏_{s=0}^{M} A^{-1}_{1,2l+2−2s}`.
    pub fn minaff_s1_a(cone: &Cone, cap: i64, l: i64) -> Result<GradedSeries> {
        let mut poly = SparsePoly::zero();
        for n in -1..=2 * cap {
            for m in -1..=n.min(l - 1) {
                let mut x = CAMonomial::one();
                for j in 0..=n {
                    x = x.mul(&CAMonomial::a_var(1, 2 * l + 1 - 2 * j, -1));
                }
                for s in 0..=m {
                    x = x.mul(&CAMonomial::a_var(0, 2 * l + 2 - 2 * s, -1));
                }
                poly.add_term(x, 1);
            }
        }
        let probe = GradedSeries::one(cone.clone(), cap);
        let poly = poly.filter(|x, _| probe.height(x).is_none_or(|h| h <= cap));
        GradedSeries::from_poly(cone.clone(), cap, &poly)
    }

    /// Non-constant part for `w = s2s1`: `1 + A^{-1}_{1,2l+2} + ⋯ + ∏_{s=0}^{l−1} A^{-1}_{1,2l+2−2s}`.
    ///
    /// The node-1 string stops at `s = l−1`: one more factor would give a
    /// weight outside the module (see the weight test below).
    pub fn minaff_s2s1_a(cone: &Cone, cap: i64, l: i64) -> Result<GradedSeries> {
        a_chain(cone, cap, 0, 2 * l + 2, 2, Some(l - 1))
    }

    pub fn minaff_s1(datum: &CartanDatum, cap: i64, l: i64) -> Result<GradedSeries> {
        let cone = Cone::new(datum, &WeylWord::from_labels(&[1]));
        let c = geometric_power(&cone, cap, &CAMonomial::e_root(&[1, 0]), 1)?;
        c.mul(&minaff_s1_a(&cone, cap, l)?)
    }

    pub fn minaff_s2s1(datum: &CartanDatum, cap: i64, l: i64) -> Result<GradedSeries> {
        let cone = Cone::new(datum, &WeylWord::from_labels(&[2, 1]));
        sl3_s2s1_constant(&cone, cap, 1)?.mul(&minaff_s2s1_a(&cone, cap, l)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> CartanDatum {
        CartanDatum::from_label(s).unwrap()
    }

    #[test]
    fn w0_formula_small() {
        let a1 = datum("A1");
        let s = w0_product_formula(&a1, 0, 5).unwrap();
        let want = SparsePoly::from_terms((0..=5).map(|n| (CAMonomial::e_root(&[n]), 1)));
        assert_eq!(s.poly(), &want);

        // A2, i=1, ī=2: roots α2 and α1+α2 carry α(ω∨_2) = 1
        let a2 = datum("A2");
        let s = w0_product_formula(&a2, 0, 4).unwrap();
        let mut brute = SparsePoly::zero();
        for x in 0..=4i64 {
            for y in 0..=4i64 {
                if x + 2 * y <= 4 {
                    // e^{xα2} e^{y(α1+α2)}
                    brute.add_term(CAMonomial::e_root(&[y, x + y]), 1);
                }
            }
        }
        assert_eq!(s.poly(), &brute);
    }

    #[test]
    fn shifted_const_small() {
        let a2 = datum("A2");
        // antidominant coweight gives c = 1
        let c = shifted_const_formula(&a2, &[-1, -2], 6).unwrap();
        assert_eq!(c.poly(), &SparsePoly::one());
        let a1 = datum("A1");
        let c = shifted_const_formula(&a1, &[1], 3).unwrap();
        let want = SparsePoly::from_terms((0..=3).map(|n| (CAMonomial::e_root(&[-n]), 1)));
        assert_eq!(c.poly(), &want);
        let c = shifted_const_formula(&a2, &[0, 1], 6).unwrap();
        assert_eq!(
            c,
            sl3_s2s1_constant(&Cone::new(&a2, &WeylWord::identity()), 6, -1).unwrap()
        );
    }

    #[test]
    fn geometric_square_coefficients() {
        // 1/(1−x)^2 = Σ (n+1) x^n
        let a1 = datum("A1");
        let cone = Cone::new(&a1, &WeylWord::identity());
        let s = geometric_power(&cone, 4, &CAMonomial::e_root(&[-1]), 2).unwrap();
        for n in 0..=4 {
            assert_eq!(s.coeff(&CAMonomial::e_root(&[-n])), n + 1);
        }
    }

    #[test]
    fn closed_forms_term_counts() {
        let a2 = datum("A2");
        // w = e: pairs −1 ≤ m ≤ n with (n+1)+(m+1) ≤ 2
        assert_eq!(closed::sl3_e(&a2, 2).unwrap().len(), 4);
        assert_eq!(closed::sl2_s1(&datum("A1"), 10).unwrap().len(), 11);
    }

    fn dominant_conjugate(
        d: &CartanDatum,
        mut w: crate::cartan::WeightVector,
    ) -> crate::cartan::WeightVector {
        while let Some(i) = w.0.iter().position(|&c| c < 0) {
            w = d.reflect_weight(i, &w);
        }
        w
    }

    #[test]
    fn minaff_node1_string_length() {
        // Extremal weight s2s1(kω1 + lω2) lowered by j copies of α1 must stay
        // a weight of L(kω1 + lω2): j = l is allowed, j = l+1 is not.
        let a2 = datum("A2");
        let w = WeylWord::from_labels(&[2, 1]);
        for l in 1..=3 {
            for k in 1..=5 {
                let lambda = crate::cartan::WeightVector(vec![k, l]);
                let ext = a2.weyl_act_weight(&w, &lambda);
                for (j, allowed) in [(l, true), (l + 1, false)] {
                    let mu = ext.sub(&a2.simple_root(0).scale(j));
                    let diff = a2
                        .weight_to_root_int(&lambda.sub(&dominant_conjugate(&a2, mu)))
                        .unwrap();
                    assert_eq!(diff.iter().all(|&c| c >= 0), allowed, "k={k} l={l} j={j}");
                }
            }
        }
        let cone = Cone::new(&a2, &w);
        assert_eq!(closed::minaff_s2s1_a(&cone, 10, 2).unwrap().len(), 3);
        assert_eq!(closed::minaff_s2s1_a(&cone, 10, 1).unwrap().len(), 2);
    }
}
