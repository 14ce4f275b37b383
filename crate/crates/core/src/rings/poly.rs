use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;

/// Finite ℤ-linear combination of monomials with zero coefficients dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly<M: Monomial> {
    terms: BTreeMap<M, i64>,
}

impl<M: Monomial> Default for SparsePoly<M> {
    fn default() -> Self {
        SparsePoly {
            terms: BTreeMap::new(),
        }
    }
}

impl<M: Monomial> SparsePoly<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(M::one())
    }

    pub fn from_monomial(m: M) -> Self {
        let mut p = Self::zero();
        p.add_term(m, 1);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (M, i64)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: M, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if *v == 0 {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn coeff(&self, m: &M) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&M, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn monomials(&self) -> impl Iterator<Item = &M> + '_ {
        self.terms.keys()
    }

    /// Sum of coefficients (the dimension, for characters).
    pub fn coeff_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.clone(), c * k))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &M) -> Self {
        SparsePoly {
            terms: self.terms.iter().map(|(x, &c)| (x.mul(m), c)).collect(),
        }
    }

    /// Applies `f` to every monomial, merging coefficients of coinciding
    /// images.
    pub fn map_monomials<N: Monomial>(&self, mut f: impl FnMut(&M) -> N) -> SparsePoly<N> {
        let mut out = SparsePoly::zero();
        for (m, &c) in &self.terms {
            out.add_term(f(m), c);
        }
        out
    }

    pub fn try_map_monomials<N: Monomial, E>(
        &self,
        mut f: impl FnMut(&M) -> Result<N, E>,
    ) -> Result<SparsePoly<N>, E> {
        let mut out = SparsePoly::zero();
        for (m, &c) in &self.terms {
            out.add_term(f(m)?, c);
        }
        Ok(out)
    }

    pub fn filter(&self, mut keep: impl FnMut(&M, i64) -> bool) -> Self {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, &c)| keep(m, c))
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<M: Monomial> fmt::Display for SparsePoly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.iter().enumerate() {
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            if idx > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            if abs != 1 {
                if m.is_one() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "{abs}*{m}")?;
                }
            } else {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl<M: Monomial> Add for &SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn add(self, rhs: Self) -> SparsePoly<M> {
        let mut out = self.clone();
        for (m, c) in rhs.iter() {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<M: Monomial> Sub for &SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn sub(self, rhs: Self) -> SparsePoly<M> {
        let mut out = self.clone();
        for (m, c) in rhs.iter() {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<M: Monomial> Neg for &SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn neg(self) -> SparsePoly<M> {
        self.scale(-1)
    }
}

impl<M: Monomial> Mul for &SparsePoly<M> {
    type Output = SparsePoly<M>;
    fn mul(self, rhs: Self) -> SparsePoly<M> {
        let mut out = SparsePoly::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in rhs.iter() {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl<M: Monomial> $tr for SparsePoly<M> {
            type Output = SparsePoly<M>;
            fn $f(self, rhs: Self) -> SparsePoly<M> {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::monomial::YMonomial;
    use proptest::prelude::*;

    fn arb_mono() -> impl Strategy<Value = YMonomial> {
        prop::collection::vec((0usize..2, -3i64..3, -2i64..3), 0..3)
            .prop_map(|t| YMonomial::from_terms(&t))
    }

    fn arb_poly() -> impl Strategy<Value = SparsePoly<YMonomial>> {
        prop::collection::vec((arb_mono(), -3i64..4), 0..5).prop_map(SparsePoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a * &SparsePoly::one(), a.clone());
        }
    }

    #[test]
    fn display() {
        let p = SparsePoly::from_terms([
            (YMonomial::var(0, -1, 1), 1),
            (YMonomial::var(0, 1, -1), -2),
            (YMonomial::default(), 3),
        ]);
        assert_eq!(p.to_string(), "3 + Y[1,-1] - 2*Y[1,1]^-1");
        assert_eq!(p.coeff_sum(), 2);
    }
}
