use std::fmt;
use std::hash::Hash;

use super::expmap::ExpMap;

/// A spectral variable index `(i, s)` standing for the parameter `a·q^s` at
/// node `i` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpectralIndex {
    pub node: usize,
    pub shift: i64,
}

impl SpectralIndex {
    pub fn new(node: usize, shift: i64) -> Self {
        SpectralIndex { node, shift }
    }
}

/// Multiplicative group operations shared by every monomial flavor.
pub trait Monomial: Clone + Ord + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync {
    fn one() -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
    fn is_one(&self) -> bool;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Self::one(), |acc, _| acc.mul(&base))
    }
}

fn fmt_var(f: &mut fmt::Formatter<'_>, name: &str, k: &SpectralIndex, e: i64) -> fmt::Result {
    write!(f, "{name}[{},{}]", k.node + 1, k.shift)?;
    if e != 1 {
        write!(f, "^{e}")?;
    }
    Ok(())
}

fn fmt_vec(f: &mut fmt::Formatter<'_>, name: &str, v: &ExpMap<usize>, rank: usize) -> fmt::Result {
    let dense = v.to_dense(rank.max(v.min_len()));
    let parts: Vec<String> = dense.iter().map(|x| x.to_string()).collect();
    write!(f, "{name}[{}]", parts.join(","))
}

/// Monomial in the variables `Y_{i,aq^s}^{±1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YMonomial {
    pub y: ExpMap<SpectralIndex>,
}

impl YMonomial {
    pub fn var(node: usize, shift: i64, e: i64) -> Self {
        YMonomial {
            y: ExpMap::single(SpectralIndex::new(node, shift), e),
        }
    }

    pub fn from_terms(terms: &[(usize, i64, i64)]) -> Self {
        YMonomial {
            y: terms
                .iter()
                .map(|&(n, s, e)| (SpectralIndex::new(n, s), e))
                .collect(),
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.y.iter().all(|(_, e)| e > 0)
    }

    /// Dominant in direction `i`: no negative power of `Y_{i,·}`.
    pub fn is_dominant_at(&self, i: usize) -> bool {
        self.y.iter().all(|(k, e)| k.node != i || e > 0)
    }

    pub fn max_node(&self) -> Option<usize> {
        self.y.keys().map(|k| k.node).max()
    }
}

impl Monomial for YMonomial {
    fn one() -> Self {
        Self::default()
    }
    fn mul(&self, other: &Self) -> Self {
        YMonomial {
            y: self.y.merged(&other.y, 1),
        }
    }
    fn inv(&self) -> Self {
        YMonomial {
            y: self.y.negated(),
        }
    }
    fn is_one(&self) -> bool {
        self.y.is_empty()
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, e) in self.y.iter() {
            fmt_var(f, "Y", k, e)?;
        }
        Ok(())
    }
}

/// Monomial in `A_{i,aq^s}^{±1}` and `e^β` with `β ∈ Λ` in simple-root
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CAMonomial {
    pub a: ExpMap<SpectralIndex>,
    pub e: ExpMap<usize>,
}

impl CAMonomial {
    pub fn a_var(node: usize, shift: i64, e: i64) -> Self {
        CAMonomial {
            a: ExpMap::single(SpectralIndex::new(node, shift), e),
            e: ExpMap::new(),
        }
    }

    pub fn e_root(root: &[i64]) -> Self {
        CAMonomial {
            a: ExpMap::new(),
            e: ExpMap::from_dense(root),
        }
    }

    pub fn from_a_terms(terms: &[(usize, i64, i64)]) -> Self {
        CAMonomial {
            a: terms
                .iter()
                .map(|&(n, s, e)| (SpectralIndex::new(n, s), e))
                .collect(),
            e: ExpMap::new(),
        }
    }

    /// Λ-degree in simple-root coordinates: `Σ a_exp·α_i + e`.
    pub fn degree(&self, rank: usize) -> Vec<i64> {
        let mut v = self.e.to_dense(rank);
        for (k, x) in self.a.iter() {
            v[k.node] += x;
        }
        v
    }

    pub fn is_pure_e(&self) -> bool {
        self.a.is_empty()
    }

    pub fn is_pure_a(&self) -> bool {
        self.e.is_empty()
    }

    pub fn a_part(&self) -> CAMonomial {
        CAMonomial {
            a: self.a.clone(),
            e: ExpMap::new(),
        }
    }

    pub fn fmt_with_rank(&self, rank: usize) -> String {
        struct W<'a>(&'a CAMonomial, usize);
        impl fmt::Display for W<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.write(f, self.1)
            }
        }
        W(self, rank).to_string()
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, rank: usize) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        if !self.e.is_empty() {
            fmt_vec(f, "e", &self.e, rank)?;
        }
        for (k, e) in self.a.iter() {
            fmt_var(f, "A", k, e)?;
        }
        Ok(())
    }
}

impl Monomial for CAMonomial {
    fn one() -> Self {
        Self::default()
    }
    fn mul(&self, other: &Self) -> Self {
        CAMonomial {
            a: self.a.merged(&other.a, 1),
            e: self.e.merged(&other.e, 1),
        }
    }
    fn inv(&self) -> Self {
        CAMonomial {
            a: self.a.negated(),
            e: self.e.negated(),
        }
    }
    fn is_one(&self) -> bool {
        self.a.is_empty() && self.e.is_empty()
    }
}

impl fmt::Display for CAMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

/// ℓ-weight monomial `q^λ ∏ Ψ_{i,aq^s}^{±1}` with `λ` in ω-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LWeightMonomial {
    pub psi: ExpMap<SpectralIndex>,
    pub wt: ExpMap<usize>,
}

impl LWeightMonomial {
    pub fn psi_var(node: usize, shift: i64, e: i64) -> Self {
        LWeightMonomial {
            psi: ExpMap::single(SpectralIndex::new(node, shift), e),
            wt: ExpMap::new(),
        }
    }

    pub fn from_terms(wt: &[i64], psi: &[(usize, i64, i64)]) -> Self {
        LWeightMonomial {
            psi: psi
                .iter()
                .map(|&(n, s, e)| (SpectralIndex::new(n, s), e))
                .collect(),
            wt: ExpMap::from_dense(wt),
        }
    }

    pub fn weight(&self, rank: usize) -> Vec<i64> {
        self.wt.to_dense(rank)
    }

    pub fn fmt_with_rank(&self, rank: usize) -> String {
        let mut s = String::new();
        if self.is_one() {
            return "1".into();
        }
        if !self.wt.is_empty() {
            let dense = self.wt.to_dense(rank.max(self.wt.min_len()));
            let parts: Vec<String> = dense.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("q^w[{}]", parts.join(",")));
        }
        for (k, e) in self.psi.iter() {
            s.push_str(&format!("Psi[{},{}]", k.node + 1, k.shift));
            if e != 1 {
                s.push_str(&format!("^{e}"));
            }
        }
        s
    }
}

impl Monomial for LWeightMonomial {
    fn one() -> Self {
        Self::default()
    }
    fn mul(&self, other: &Self) -> Self {
        LWeightMonomial {
            psi: self.psi.merged(&other.psi, 1),
            wt: self.wt.merged(&other.wt, 1),
        }
    }
    fn inv(&self) -> Self {
        LWeightMonomial {
            psi: self.psi.negated(),
            wt: self.wt.negated(),
        }
    }
    fn is_one(&self) -> bool {
        self.psi.is_empty() && self.wt.is_empty()
    }
}

impl fmt::Display for LWeightMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with_rank(0))
    }
}

/// Formal exponential `e^λ` of an integral weight in ω-coordinates; the
/// target of usual characters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeightMonomial {
    pub wt: ExpMap<usize>,
}

impl WeightMonomial {
    pub fn from_weight(w: &[i64]) -> Self {
        WeightMonomial {
            wt: ExpMap::from_dense(w),
        }
    }

    pub fn weight(&self, rank: usize) -> Vec<i64> {
        self.wt.to_dense(rank)
    }

    pub fn fmt_with_rank(&self, rank: usize) -> String {
        if self.is_one() {
            return "1".into();
        }
        let dense = self.wt.to_dense(rank.max(self.wt.min_len()));
        let parts: Vec<String> = dense.iter().map(|x| x.to_string()).collect();
        format!("e^w[{}]", parts.join(","))
    }
}

impl Monomial for WeightMonomial {
    fn one() -> Self {
        Self::default()
    }
    fn mul(&self, other: &Self) -> Self {
        WeightMonomial {
            wt: self.wt.merged(&other.wt, 1),
        }
    }
    fn inv(&self) -> Self {
        WeightMonomial {
            wt: self.wt.negated(),
        }
    }
    fn is_one(&self) -> bool {
        self.wt.is_empty()
    }
}

impl fmt::Display for WeightMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with_rank(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y_display_and_inverse() {
        let m = YMonomial::from_terms(&[(0, -1, 1), (1, 2, -2)]);
        assert_eq!(m.to_string(), "Y[1,-1]Y[2,2]^-2");
        assert!(m.mul(&m.inv()).is_one());
        assert_eq!(YMonomial::one().to_string(), "1");
        assert_eq!(m.pow(-2), m.inv().mul(&m.inv()));
    }

    #[test]
    fn ca_degree() {
        // A^{-1}_{1,0} e^{α1} has degree 0
        let m = CAMonomial::a_var(0, 0, -1).mul(&CAMonomial::e_root(&[1]));
        assert_eq!(m.degree(1), vec![0]);
        // A_{1,-1} A^{-1}_{2,0} has degree α1 − α2
        let m = CAMonomial::from_a_terms(&[(0, -1, 1), (1, 0, -1)]);
        assert_eq!(m.degree(2), vec![1, -1]);
        assert_eq!(m.fmt_with_rank(2), "A[1,-1]A[2,0]^-1");
        assert_eq!(CAMonomial::e_root(&[0, 2]).fmt_with_rank(2), "e[0,2]");
    }

    #[test]
    fn lweight_display() {
        let m = LWeightMonomial::from_terms(&[0, 2], &[(0, 2, 1), (1, 5, -1)]);
        assert_eq!(m.fmt_with_rank(2), "q^w[0,2]Psi[1,2]Psi[2,5]^-1");
    }
}
