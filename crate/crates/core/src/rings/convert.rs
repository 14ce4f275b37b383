use super::expmap::ExpMap;
use super::monomial::{
    CAMonomial, LWeightMonomial, Monomial, SpectralIndex, WeightMonomial, YMonomial,
};
use super::poly::SparsePoly;
use crate::cartan::{CartanDatum, WeightVector};
use crate::error::{Error, Result};

/// Shift offsets of the neighbor factors attached to a Cartan entry `c < 0`.
pub fn neighbor_offsets(c: i64) -> &'static [i64] {
    match c {
        -1 => &[0],
        -2 => &[-1, 1],
        -3 => &[-2, 0, 2],
        _ => &[],
    }
}

/// Weight of a monomial, in ω-coordinates.
pub trait WtDegree {
    fn wt_degree(&self, datum: &CartanDatum) -> WeightVector;
}

impl WtDegree for YMonomial {
    fn wt_degree(&self, datum: &CartanDatum) -> WeightVector {
        let mut v = vec![0; datum.rank()];
        for (k, e) in self.y.iter() {
            v[k.node] += e;
        }
        WeightVector(v)
    }
}

impl WtDegree for CAMonomial {
    fn wt_degree(&self, datum: &CartanDatum) -> WeightVector {
        datum.root_to_weight(&self.degree(datum.rank()))
    }
}

impl WtDegree for LWeightMonomial {
    fn wt_degree(&self, datum: &CartanDatum) -> WeightVector {
        WeightVector(self.wt.to_dense(datum.rank()))
    }
}

impl WtDegree for WeightMonomial {
    fn wt_degree(&self, datum: &CartanDatum) -> WeightVector {
        WeightVector(self.wt.to_dense(datum.rank()))
    }
}

pub fn wt_degree<M: WtDegree>(m: &M, datum: &CartanDatum) -> WeightVector {
    m.wt_degree(datum)
}

/// `A_{i,s}` as a Y-monomial.
pub fn a_var_to_y(datum: &CartanDatum, node: usize, shift: i64) -> YMonomial {
    let d = datum.d(node);
    let mut y = ExpMap::new();
    y.add(SpectralIndex::new(node, shift - d), 1);
    y.add(SpectralIndex::new(node, shift + d), 1);
    for j in 0..datum.rank() {
        if j != node {
            for &o in neighbor_offsets(datum.cartan(j, node)) {
                y.add(SpectralIndex::new(j, shift + o), -1);
            }
        }
    }
    YMonomial { y }
}

/// Substitutes `A_{i,s}` by its Y-expansion. The `e`-part must be trivial.
pub fn a_expand_to_y(datum: &CartanDatum, m: &CAMonomial) -> Result<YMonomial> {
    if !m.e.is_empty() {
        return Err(Error::NotAnAMonomial(format!(
            "{} has a nontrivial e-part",
            m.fmt_with_rank(datum.rank())
        )));
    }
    Ok(m.a.iter().fold(YMonomial::one(), |acc, (k, e)| {
        acc.mul(&a_var_to_y(datum, k.node, k.shift).pow(e))
    }))
}

/// Inverse of [`a_expand_to_y`] by elimination on the smallest shift.
pub fn y_ratio_to_a(datum: &CartanDatum, m: &YMonomial) -> Result<CAMonomial> {
    let Some(max_shift) = m.y.keys().map(|k| k.shift).max() else {
        return Ok(CAMonomial::one());
    };
    let mut residual = m.clone();
    let mut a = ExpMap::new();
    while let Some(s) = residual.y.keys().map(|k| k.shift).min() {
        if s > max_shift {
            return Err(Error::NotAnAMonomial(m.to_string()));
        }
        let at_s: Vec<(usize, i64)> = residual
            .y
            .iter()
            .filter(|(k, _)| k.shift == s)
            .map(|(k, e)| (k.node, e))
            .collect();
        for (node, e) in at_s {
            let t = s + datum.d(node);
            a.add(SpectralIndex::new(node, t), e);
            residual = residual.div(&a_var_to_y(datum, node, t).pow(e));
        }
    }
    Ok(CAMonomial {
        a,
        e: ExpMap::new(),
    })
}

/// `Y_{i,s} ↦ q^{ω_i} Ψ_{i,s−d_i} Ψ^{-1}_{i,s+d_i}`.
pub fn embed_y_as_lweight(datum: &CartanDatum, m: &YMonomial) -> LWeightMonomial {
    let mut out = LWeightMonomial::one();
    for (k, e) in m.y.iter() {
        let d = datum.d(k.node);
        out.psi.add(SpectralIndex::new(k.node, k.shift - d), e);
        out.psi.add(SpectralIndex::new(k.node, k.shift + d), -e);
        out.wt.add(k.node, e);
    }
    out
}

fn weight_monomial(w: &WeightVector) -> WeightMonomial {
    WeightMonomial::from_weight(&w.0)
}

/// Usual character of a q-character: `Y_{i,s} ↦ e^{ω_i}`.
pub fn usual_char_y(datum: &CartanDatum, p: &SparsePoly<YMonomial>) -> SparsePoly<WeightMonomial> {
    p.map_monomials(|m| weight_monomial(&m.wt_degree(datum)))
}

/// Usual character of a `𝒞𝒜`-element: `A_{i,s}, e^{α_i} ↦ e^{α_i}`.
pub fn usual_char_ca(
    datum: &CartanDatum,
    p: &SparsePoly<CAMonomial>,
) -> SparsePoly<WeightMonomial> {
    p.map_monomials(|m| weight_monomial(&m.wt_degree(datum)))
}

/// Applies `e^λ ↦ e^{wλ}`.
pub fn weyl_act_char(
    datum: &CartanDatum,
    w: &crate::cartan::WeylWord,
    p: &SparsePoly<WeightMonomial>,
) -> SparsePoly<WeightMonomial> {
    p.map_monomials(|m| weight_monomial(&datum.weyl_act_weight(w, &m.wt_degree(datum))))
}
