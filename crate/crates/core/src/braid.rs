//! Braid group actions `T_i` on Y-monomials and on ℓ-weights.

use crate::cartan::{CartanDatum, WeylWord};
use crate::rings::convert::neighbor_offsets;
use crate::rings::{ExpMap, LWeightMonomial, Monomial, SparsePoly, SpectralIndex, YMonomial};

/// Direction of a braid action: `T_i` or `T_i^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    Forward,
    Inverse,
}

impl Dir {
    pub fn sign(self) -> i64 {
        match self {
            Dir::Forward => 1,
            Dir::Inverse => -1,
        }
    }

    pub fn from_sign(s: i64) -> Option<Dir> {
        match s {
            1 => Some(Dir::Forward),
            -1 => Some(Dir::Inverse),
            _ => None,
        }
    }
}

/// Image of one variable under `T_i^{±1}`, where `neighbor(j)` is the Cartan
/// entry selecting the neighbor factors.
fn act_variable(
    datum: &CartanDatum,
    i: usize,
    dir: Dir,
    shift: i64,
    neighbor: impl Fn(usize) -> i64,
) -> ExpMap<SpectralIndex> {
    let d = datum.d(i);
    let sg = dir.sign();
    let mut out = ExpMap::single(SpectralIndex::new(i, shift + sg * 2 * d), -1);
    for j in 0..datum.rank() {
        if j != i {
            for &o in neighbor_offsets(neighbor(j)) {
                out.add(SpectralIndex::new(j, shift + sg * d + o), 1);
            }
        }
    }
    out
}

fn act_map(
    datum: &CartanDatum,
    i: usize,
    dir: Dir,
    vars: &ExpMap<SpectralIndex>,
    neighbor: impl Fn(usize) -> i64 + Copy,
) -> ExpMap<SpectralIndex> {
    let mut out = ExpMap::new();
    for (k, e) in vars.iter() {
        if k.node == i {
            out = out.merged(&act_variable(datum, i, dir, k.shift, neighbor).scaled(e), 1);
        } else {
            out.add(*k, e);
        }
    }
    out
}

/// `T_i^{±1}` on a Y-monomial.
pub fn braid_act_y(datum: &CartanDatum, i: usize, dir: Dir, m: &YMonomial) -> YMonomial {
    YMonomial {
        y: act_map(datum, i, dir, &m.y, |j| datum.cartan(j, i)),
    }
}

/// `T_i^{±1}` on an ℓ-weight; the prefactor is reflected by `s_i`.
pub fn braid_act_lweight(
    datum: &CartanDatum,
    i: usize,
    dir: Dir,
    psi: &LWeightMonomial,
) -> LWeightMonomial {
    let wt = crate::cartan::WeightVector(psi.wt.to_dense(datum.rank()));
    LWeightMonomial {
        psi: act_map(datum, i, dir, &psi.psi, |j| datum.cartan(i, j)),
        wt: ExpMap::from_dense(&datum.reflect_weight(i, &wt).0),
    }
}

/// Values carrying a braid group action.
pub trait BraidActable: Sized {
    fn braid_act(&self, datum: &CartanDatum, i: usize, dir: Dir) -> Self;
}

impl BraidActable for YMonomial {
    fn braid_act(&self, datum: &CartanDatum, i: usize, dir: Dir) -> Self {
        braid_act_y(datum, i, dir, self)
    }
}

impl BraidActable for LWeightMonomial {
    fn braid_act(&self, datum: &CartanDatum, i: usize, dir: Dir) -> Self {
        braid_act_lweight(datum, i, dir, self)
    }
}

impl<M: Monomial + BraidActable> BraidActable for SparsePoly<M> {
    fn braid_act(&self, datum: &CartanDatum, i: usize, dir: Dir) -> Self {
        self.map_monomials(|m| m.braid_act(datum, i, dir))
    }
}

/// `T_w = T_{i_1}⋯T_{i_r}` (rightmost letter applied first), or its inverse
/// `T_{i_r}^{-1}⋯T_{i_1}^{-1}` for [`Dir::Inverse`].
pub fn braid_act_word<X: BraidActable + Clone>(
    datum: &CartanDatum,
    w: &WeylWord,
    dir: Dir,
    x: &X,
) -> X {
    match dir {
        Dir::Forward => w
            .letters()
            .iter()
            .rev()
            .fold(x.clone(), |acc, &i| acc.braid_act(datum, i, dir)),
        Dir::Inverse => w
            .letters()
            .iter()
            .fold(x.clone(), |acc, &i| acc.braid_act(datum, i, dir)),
    }
}

/// Order of `s_i s_j` dictated by `C_ij C_ji`.
pub fn braid_order(datum: &CartanDatum, i: usize, j: usize) -> usize {
    match datum.cartan(i, j) * datum.cartan(j, i) {
        0 => 2,
        1 => 3,
        2 => 4,
        _ => 6,
    }
}

/// The two sides `T_iT_jT_i⋯` and `T_jT_iT_j⋯` of the braid relation.
pub fn braid_relation_words(datum: &CartanDatum, i: usize, j: usize) -> (WeylWord, WeylWord) {
    let m = braid_order(datum, i, j);
    let alt =
        |a: usize, b: usize| WeylWord((0..m).map(|t| if t % 2 == 0 { a } else { b }).collect());
    (alt(i, j), alt(j, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::embed_y_as_lweight;

    fn datum(s: &str) -> CartanDatum {
        CartanDatum::from_label(s).unwrap()
    }

    #[test]
    fn y_examples() {
        let a1 = datum("A1");
        assert_eq!(
            braid_act_y(&a1, 0, Dir::Forward, &YMonomial::var(0, 0, 1)),
            YMonomial::var(0, 2, -1)
        );
        let a2 = datum("A2");
        let img = braid_act_y(&a2, 0, Dir::Forward, &YMonomial::var(0, 0, 1));
        assert_eq!(img, YMonomial::from_terms(&[(0, 2, -1), (1, 1, 1)]));
        assert_eq!(
            braid_act_y(&a2, 0, Dir::Inverse, &img),
            YMonomial::var(0, 0, 1)
        );
    }

    #[test]
    fn y_examples_non_simply_laced() {
        // B2: α1 long (d=2); C_21 = −2 gives two neighbor factors
        let b2 = datum("B2");
        let img = braid_act_y(&b2, 0, Dir::Forward, &YMonomial::var(0, 0, 1));
        assert_eq!(
            img,
            YMonomial::from_terms(&[(0, 4, -1), (1, 1, 1), (1, 3, 1)])
        );
        // G2: α2 long (d=3), C_12 = −3
        let g2 = datum("G2");
        let img = braid_act_y(&g2, 1, Dir::Forward, &YMonomial::var(1, 0, 1));
        assert_eq!(
            img,
            YMonomial::from_terms(&[(1, 6, -1), (0, 1, 1), (0, 3, 1), (0, 5, 1)])
        );
    }

    #[test]
    fn lweight_examples() {
        let a2 = datum("A2");
        let src = LWeightMonomial::psi_var(0, 0, -1);
        let s1 = WeylWord::from_labels(&[1]);
        assert_eq!(
            braid_act_word(&a2, &s1, Dir::Forward, &src),
            LWeightMonomial::from_terms(&[], &[(0, 2, 1), (1, 1, -1)])
        );
        let s2s1 = WeylWord::from_labels(&[2, 1]);
        assert_eq!(
            braid_act_word(&a2, &s2s1, Dir::Forward, &src),
            LWeightMonomial::psi_var(1, 3, 1)
        );
        let a1 = datum("A1");
        let p = LWeightMonomial::psi_var(0, 0, 1);
        let there = braid_act_lweight(&a1, 0, Dir::Forward, &p);
        assert_eq!(braid_act_lweight(&a1, 0, Dir::Inverse, &there), p);
    }

    #[test]
    fn word_action_on_minimal_affinization_source() {
        // source Ψ^{-1}_{1,0} · embed(Y_{2,2} Y_{2,4})
        let a2 = datum("A2");
        let m = YMonomial::from_terms(&[(1, 2, 1), (1, 4, 1)]);
        let src = LWeightMonomial::psi_var(0, 0, -1).mul(&embed_y_as_lweight(&a2, &m));
        let act = |labels: &[usize]| {
            braid_act_word(&a2, &WeylWord::from_labels(labels), Dir::Forward, &src)
        };
        assert_eq!(
            act(&[1]),
            LWeightMonomial::from_terms(&[0, 2], &[(0, 2, 1), (1, 5, -1)])
        );
        assert_eq!(
            act(&[2, 1]),
            LWeightMonomial::from_terms(&[2, -2], &[(0, 2, 1), (0, 6, -1), (1, 7, 1)])
        );
        assert_eq!(
            act(&[1, 2, 1]),
            LWeightMonomial::from_terms(&[-2, 0], &[(0, 8, 1), (0, 4, -1), (1, 3, 1)])
        );
        assert_eq!(act(&[]), src);
    }

    #[test]
    fn relation_words() {
        let g2 = datum("G2");
        let (a, b) = braid_relation_words(&g2, 0, 1);
        assert_eq!(a.len(), 6);
        assert_eq!(b.letters()[0], 1);
    }
}
