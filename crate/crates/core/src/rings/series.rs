use std::fmt;

use super::monomial::{CAMonomial, Monomial};
use super::poly::SparsePoly;
use crate::cartan::Cone;
use crate::error::{Error, Result};

/// Element of the completion of `𝒞𝒜` along the cone `wΛ₋`, truncated at
/// cone height `height_cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    cone: Cone,
    height_cap: i64,
    terms: SparsePoly<CAMonomial>,
}

impl GradedSeries {
    pub fn zero(cone: Cone, height_cap: i64) -> Self {
        GradedSeries {
            cone,
            height_cap,
            terms: SparsePoly::zero(),
        }
    }

    pub fn one(cone: Cone, height_cap: i64) -> Self {
        GradedSeries {
            cone,
            height_cap,
            terms: SparsePoly::one(),
        }
    }

    /// Truncates `poly` at the height cap; fails when a degree leaves the cone.
    pub fn from_poly(cone: Cone, height_cap: i64, poly: &SparsePoly<CAMonomial>) -> Result<Self> {
        let mut s = Self::zero(cone, height_cap);
        for (m, c) in poly.iter() {
            let h = s
                .height(m)
                .ok_or_else(|| Error::OutsideCone(m.fmt_with_rank(s.rank())))?;
            if h <= height_cap {
                s.terms.add_term(m.clone(), c);
            }
        }
        Ok(s)
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn height_cap(&self) -> i64 {
        self.height_cap
    }

    pub fn rank(&self) -> usize {
        self.cone.rank()
    }

    pub fn poly(&self) -> &SparsePoly<CAMonomial> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &CAMonomial) -> i64 {
        self.terms.coeff(m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CAMonomial, i64)> + '_ {
        self.terms.iter()
    }

    /// Cone height of a monomial's Λ-degree, `None` outside the cone.
    pub fn height(&self, m: &CAMonomial) -> Option<i64> {
        self.cone.height(&m.degree(self.rank()))
    }

    /// Terms sorted by (height, monomial).
    pub fn sorted_terms(&self) -> Vec<(i64, CAMonomial, i64)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (self.height(m).unwrap_or(0), m.clone(), c))
            .collect();
        v.sort();
        v
    }

    pub fn truncate(&self, cap: i64) -> Self {
        let cap = cap.min(self.height_cap);
        GradedSeries {
            cone: self.cone.clone(),
            height_cap: cap,
            terms: self
                .terms
                .filter(|m, _| self.height(m).is_some_and(|h| h <= cap)),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.cone == other.cone && self.height_cap == other.height_cap {
            Ok(())
        } else {
            Err(Error::IncompatibleSeries)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(GradedSeries {
            terms: &self.terms + &other.terms,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(GradedSeries {
            terms: &self.terms - &other.terms,
            ..self.clone()
        })
    }

    pub fn scale(&self, k: i64) -> Self {
        GradedSeries {
            terms: self.terms.scale(k),
            ..self.clone()
        }
    }

    /// Product truncated back to the height cap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let a: Vec<_> = self.sorted_terms();
        let b: Vec<_> = other.sorted_terms();
        let mut out = SparsePoly::zero();
        for (ha, ma, ca) in &a {
            for (hb, mb, cb) in &b {
                if ha + hb > self.height_cap {
                    break;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(GradedSeries {
            terms: out,
            ..self.clone()
        })
    }

    pub fn mul_monomial(&self, m: &CAMonomial) -> Result<Self> {
        Self::from_poly(
            self.cone.clone(),
            self.height_cap,
            &self.terms.mul_monomial(m),
        )
    }

    /// Applies a degree-preserving substitution to every monomial.
    pub fn map_monomials(&self, f: impl FnMut(&CAMonomial) -> CAMonomial) -> Result<Self> {
        Self::from_poly(
            self.cone.clone(),
            self.height_cap,
            &self.terms.map_monomials(f),
        )
    }

    /// Multiplicative inverse, provided the degree-0 part is exactly `1`.
    pub fn inverse(&self) -> Result<Self> {
        let zero_part = self.terms.filter(|m, _| self.height(m) == Some(0));
        if zero_part != SparsePoly::one() {
            return Err(Error::NonUnitLeadingTerm(zero_part.to_string()));
        }
        // a = 1 + r with r of positive height; a^{-1} = Σ (−r)^n
        let one = Self::one(self.cone.clone(), self.height_cap);
        let minus_r = one.sub(self)?;
        let mut acc = one.clone();
        let mut power = one;
        for _ in 0..self.height_cap {
            power = power.mul(&minus_r)?;
            if power.is_empty() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc)
    }

    /// Canonical text: terms ordered by height, then monomial.
    pub fn canonical_text(&self) -> String {
        let rank = self.rank();
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(h, m, c)| format!("{h}:{c}:{}", m.fmt_with_rank(rank)))
            .collect();
        format!(
            "cone={};N={};{}",
            self.cone.word().to_labels_string(),
            self.height_cap,
            parts.join(";")
        )
    }
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let rank = self.rank();
        for (idx, (_, m, c)) in self.sorted_terms().into_iter().enumerate() {
            let abs = c.abs();
            if idx > 0 {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let body = m.fmt_with_rank(rank);
            match (abs, m.is_one()) {
                (1, _) => write!(f, "{body}")?,
                (_, true) => write!(f, "{abs}")?,
                _ => write!(f, "{abs}*{body}")?,
            }
        }
        Ok(())
    }
}

/// The unique `c` with `c·a = S` up to the common height cap.
pub fn graded_divide(s: &GradedSeries, a: &GradedSeries) -> Result<GradedSeries> {
    s.check_compatible(a)?;
    s.mul(&a.inverse()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanDatum, WeylWord};
    use proptest::prelude::*;

    fn geometric(cone: &Cone, root: &[i64], n: i64) -> GradedSeries {
        let poly = SparsePoly::from_terms((0..=n).map(|k| {
            let r: Vec<i64> = root.iter().map(|x| x * k).collect();
            (CAMonomial::e_root(&r), 1)
        }));
        GradedSeries::from_poly(cone.clone(), n, &poly).unwrap()
    }

    #[test]
    fn divide_by_one_and_self() {
        let a1 = CartanDatum::from_label("A1").unwrap();
        let cone = Cone::new(&a1, &WeylWord::from_labels(&[1]));
        let s = geometric(&cone, &[1], 3);
        let one = GradedSeries::one(cone.clone(), 3);
        assert_eq!(graded_divide(&s, &one).unwrap(), s);
        assert_eq!(graded_divide(&s, &s).unwrap(), one);
    }

    #[test]
    fn divide_sl3_example() {
        let a2 = CartanDatum::from_label("A2").unwrap();
        let cone = Cone::new(&a2, &WeylWord::from_labels(&[1]));
        let c = geometric(&cone, &[1, 0], 2);
        let a = GradedSeries::from_poly(
            cone.clone(),
            2,
            &SparsePoly::from_terms([(CAMonomial::one(), 1), (CAMonomial::a_var(1, 1, -1), 1)]),
        )
        .unwrap();
        let s = c.mul(&a).unwrap();
        // A^{-1}_{2,1} has height 2 in this cone
        assert_eq!(s.len(), 4);
        assert_eq!(graded_divide(&s, &a).unwrap(), c);
    }

    #[test]
    fn outside_cone_and_non_unit() {
        let a1 = CartanDatum::from_label("A1").unwrap();
        let cone = Cone::new(&a1, &WeylWord::identity());
        let bad = SparsePoly::from_monomial(CAMonomial::e_root(&[1]));
        assert!(matches!(
            GradedSeries::from_poly(cone.clone(), 3, &bad),
            Err(Error::OutsideCone(_))
        ));
        let two = GradedSeries::one(cone.clone(), 3).scale(2);
        assert!(matches!(
            graded_divide(&two, &two),
            Err(Error::NonUnitLeadingTerm(_))
        ));
    }

    fn arb_series(cone: Cone, cap: i64) -> impl Strategy<Value = GradedSeries> {
        prop::collection::vec((0i64..3, 0i64..3, -1i64..2, -2i64..3), 0..6).prop_map(move |t| {
            let poly = SparsePoly::from_terms(t.into_iter().map(|(x, y, s, c)| {
                // A^{-1}_{1,s} carries degree −α1 ∈ Λ₋
                let m = CAMonomial::e_root(&[-x, -y]).mul(&CAMonomial::a_var(0, s, -1));
                (m, c)
            }));
            GradedSeries::from_poly(cone.clone(), cap, &poly).unwrap()
        })
    }

    fn cone_e() -> Cone {
        Cone::new(
            &CartanDatum::from_label("A2").unwrap(),
            &WeylWord::identity(),
        )
    }

    proptest! {
        #[test]
        fn truncated_product_matches_full(a in arb_series(cone_e(), 4), b in arb_series(cone_e(), 4)) {
            let full = a.poly() * b.poly();
            let expect = GradedSeries::from_poly(cone_e(), 4, &full).unwrap();
            prop_assert_eq!(a.mul(&b).unwrap(), expect);
        }

        #[test]
        fn divide_inverts_product(s in arb_series(cone_e(), 4), r in arb_series(cone_e(), 4)) {
            let one = GradedSeries::one(cone_e(), 4);
            // a = 1 + (positive-height part of r)
            let a = one.add(&GradedSeries::from_poly(
                cone_e(), 4, &r.poly().filter(|m, _| r.height(m).unwrap() > 0)).unwrap()).unwrap();
            let prod = s.mul(&a).unwrap();
            prop_assert_eq!(graded_divide(&prod, &a).unwrap(), s);
        }
    }
}
