//! q-characters of Kirillov–Reshetikhin modules and minimal affinizations,
//! and their w-normalizations.

use std::collections::{BTreeMap, HashMap};

use crate::braid::{braid_act_word, braid_act_y, Dir};
use crate::cartan::{CartanDatum, Cone, Family, WeylWord};
use crate::error::{Error, Result};
use crate::rings::{
    a_expand_to_y, a_var_to_y, y_ratio_to_a, CAMonomial, Monomial, SparsePoly, YMonomial,
};

/// Default bound on processed monomials in [`fm_expand`].
pub const DEFAULT_STEP_CAP: usize = 200_000;

/// A q-character together with its ℓ-highest monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCharacter {
    pub poly: SparsePoly<YMonomial>,
    pub head: YMonomial,
}

impl QCharacter {
    /// `χ̃_q = χ_q / M` as a polynomial in the `A^{-1}`.
    pub fn normalized(&self, datum: &CartanDatum) -> Result<SparsePoly<CAMonomial>> {
        self.poly
            .try_map_monomials(|m| y_ratio_to_a(datum, &m.div(&self.head)))
    }

    pub fn dimension(&self) -> i64 {
        self.poly.coeff_sum()
    }
}

/// `M_k = ∏_{t=1}^{k} Y_{i, base + d_i(1−2t)}`.
pub fn kr_highest_weight(datum: &CartanDatum, i: usize, k: usize, base_shift: i64) -> YMonomial {
    let d = datum.d(i);
    let terms: Vec<(usize, i64, i64)> = (1..=k as i64)
        .map(|t| (i, base_shift + d * (1 - 2 * t), 1))
        .collect();
    YMonomial::from_terms(&terms)
}

/// Recognizes `M` as a KR string `M_k` at node `i`, returning `(i, k, base)`.
pub fn detect_kr(datum: &CartanDatum, m: &YMonomial) -> Option<(usize, usize, i64)> {
    let first = m.y.keys().next()?;
    let i = first.node;
    let k = m.y.iter().map(|(_, e)| e).sum::<i64>();
    if k <= 0 {
        return None;
    }
    let top = m.y.keys().map(|s| s.shift).max()?;
    let base = top + datum.d(i);
    let cand = kr_highest_weight(datum, i, k as usize, base);
    (cand == *m).then_some((i, k as usize, base))
}

fn a_prod(terms: impl IntoIterator<Item = (usize, i64)>) -> CAMonomial {
    let t: Vec<(usize, i64, i64)> = terms.into_iter().map(|(n, s)| (n, s, -1)).collect();
    CAMonomial::from_a_terms(&t)
}

/// Closed-form normalized character `χ̃_q(L(M_k))` for types A1 and A2.
pub fn kr_normalized_closed(
    datum: &CartanDatum,
    i: usize,
    k: usize,
    base_shift: i64,
) -> Result<SparsePoly<CAMonomial>> {
    datum.check_node(i)?;
    let t = datum.type_label;
    let k = k as i64;
    let mut out = SparsePoly::zero();
    match (t.family, t.rank) {
        (Family::A, 1) => {
            for n in 0..=k {
                out.add_term(a_prod((0..n).map(|t| (0, base_shift - 2 * t))), 1);
            }
        }
        (Family::A, 2) => {
            let (p, q) = (i, 1 - i);
            for n in -1..k {
                for m in -1..=n {
                    let mono = a_prod(
                        (0..=n)
                            .map(|l| (p, base_shift - 2 * l))
                            .chain((0..=m).map(|s| (q, base_shift - 2 * s + 1))),
                    );
                    out.add_term(mono, 1);
                }
            }
        }
        _ => {
            return Err(Error::ClosedFormUnavailable(format!(
                "KR closed form only for A1, A2 (got {t})"
            )))
        }
    }
    Ok(out)
}

/// Closed-form `χ_q(L(M_k))` for types A1 and A2.
pub fn kr_qchar_closed(
    datum: &CartanDatum,
    i: usize,
    k: usize,
    base_shift: i64,
) -> Result<QCharacter> {
    let head = kr_highest_weight(datum, i, k, base_shift);
    let norm = kr_normalized_closed(datum, i, k, base_shift)?;
    let poly = norm.try_map_monomials(|a| Ok::<_, Error>(head.mul(&a_expand_to_y(datum, a)?)))?;
    Ok(QCharacter { poly, head })
}

/// Splits the multiset of shifts into strings with step `step`, greedily
/// from the smallest shift. Returns the top shift and length of each string.
fn split_strings(shifts: &BTreeMap<i64, i64>, step: i64) -> Vec<(i64, usize)> {
    let mut left = shifts.clone();
    let mut out = Vec::new();
    while let Some((&start, _)) = left.iter().next() {
        let mut cur = start;
        let mut len = 0;
        while let Some(c) = left.get_mut(&cur) {
            *c -= 1;
            if *c == 0 {
                left.remove(&cur);
            }
            len += 1;
            cur += step;
        }
        out.push((cur - step, len));
    }
    out
}

/// Normalized rank-one character at node `j` of the j-part of `m`, as a list
/// of `(lowering monomial in Y, multiplicity)`.
fn rank_one_lowerings(datum: &CartanDatum, j: usize, m: &YMonomial) -> Vec<(YMonomial, i64)> {
    let d = datum.d(j);
    let mut shifts = BTreeMap::new();
    for (k, e) in m.y.iter() {
        if k.node == j {
            *shifts.entry(k.shift).or_insert(0) += e;
        }
    }
    let mut acc: HashMap<YMonomial, i64> = HashMap::from([(YMonomial::one(), 1)]);
    for (top, len) in split_strings(&shifts, 2 * d) {
        let mut string_terms = Vec::with_capacity(len + 1);
        let mut cur = YMonomial::one();
        string_terms.push(cur.clone());
        for t in 0..len as i64 {
            cur = cur.div(&a_var_to_y(datum, j, top + d - 2 * d * t));
            string_terms.push(cur.clone());
        }
        let mut next = HashMap::new();
        for (x, c) in &acc {
            for s in &string_terms {
                *next.entry(x.mul(s)).or_insert(0) += c;
            }
        }
        acc = next;
    }
    acc.into_iter().collect()
}

struct FmEntry {
    depth: i64,
    colors: Vec<i64>,
}

/// Frenkel–Mukhin expansion of `χ_q(L(M))` for dominant `M`.
pub fn fm_expand(datum: &CartanDatum, head: &YMonomial, step_cap: usize) -> Result<QCharacter> {
    if let Some(n) = head.max_node() {
        datum.check_node(n)?;
    }
    if !head.is_dominant() {
        return Err(Error::NotDominant(head.to_string()));
    }
    let rank = datum.rank();
    let mut pending: BTreeMap<i64, Vec<YMonomial>> = BTreeMap::from([(0, vec![head.clone()])]);
    let mut entries: HashMap<YMonomial, FmEntry> = HashMap::from([(
        head.clone(),
        FmEntry {
            depth: 0,
            colors: vec![0; rank],
        },
    )]);
    let mut result = SparsePoly::zero();
    let mut steps = 0usize;
    while let Some((&depth, _)) = pending.iter().next() {
        let level = pending.remove(&depth).unwrap();
        for m in level {
            steps += 1;
            if steps > step_cap {
                return Err(Error::StepCapExceeded(step_cap));
            }
            let colors = entries[&m].colors.clone();
            let mult = if m == *head {
                1
            } else {
                let mut demanded = None;
                for (j, &c) in colors.iter().enumerate() {
                    if !m.is_dominant_at(j) {
                        match demanded {
                            None => demanded = Some(c),
                            Some(x) if x != c => return Err(Error::FmInconsistent(m.to_string())),
                            _ => {}
                        }
                    }
                }
                demanded.ok_or_else(|| Error::FmInconsistent(m.to_string()))?
            };
            if mult <= 0 {
                return Err(Error::FmInconsistent(m.to_string()));
            }
            result.add_term(m.clone(), mult);
            for j in 0..rank {
                if !m.is_dominant_at(j) {
                    continue;
                }
                let extra = mult - colors[j];
                if extra < 0 {
                    return Err(Error::FmInconsistent(m.to_string()));
                }
                if extra == 0 {
                    continue;
                }
                for (low, c) in rank_one_lowerings(datum, j, &m) {
                    let target = m.mul(&low);
                    if target == m {
                        continue;
                    }
                    let entry = entries.entry(target.clone()).or_insert_with(|| {
                        let ratio = y_ratio_to_a(datum, &target.div(head))
                            .expect("lowering by A-monomials");
                        let depth = -ratio.a.iter().map(|(_, e)| e).sum::<i64>();
                        pending.entry(depth).or_default().push(target.clone());
                        FmEntry {
                            depth,
                            colors: vec![0; rank],
                        }
                    });
                    debug_assert!(entry.depth > depth);
                    entry.colors[j] += extra * c;
                }
            }
        }
    }
    Ok(QCharacter {
        poly: result,
        head: head.clone(),
    })
}

/// `χ_q^w = χ_q / T_w M` rewritten in the `A_{i,s}`, checked to lie in `wΛ₋`.
pub fn w_normalized_qchar(
    datum: &CartanDatum,
    q: &QCharacter,
    w: &WeylWord,
) -> Result<SparsePoly<CAMonomial>> {
    let w = datum.reduce_word(w);
    let twm = braid_act_word(datum, &w, Dir::Forward, &q.head);
    let cone = Cone::new(datum, &w);
    q.poly.try_map_monomials(|m| {
        let a = y_ratio_to_a(datum, &m.div(&twm))?;
        if cone.coords(&a.degree(datum.rank())).is_none() {
            return Err(Error::NormalizationNotInCone(a.fmt_with_rank(datum.rank())));
        }
        Ok(a)
    })
}

/// `T_w M` for a single letter sequence; convenience wrapper.
pub fn extremal_monomial(datum: &CartanDatum, m: &YMonomial, w: &WeylWord) -> YMonomial {
    w.letters().iter().rev().fold(m.clone(), |acc, &i| {
        braid_act_y(datum, i, Dir::Forward, &acc)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{usual_char_y, weyl_act_char, WeightMonomial};

    fn datum(s: &str) -> CartanDatum {
        CartanDatum::from_label(s).unwrap()
    }

    #[test]
    fn kr_weights() {
        let a1 = datum("A1");
        assert_eq!(kr_highest_weight(&a1, 0, 1, 0), YMonomial::var(0, -1, 1));
        assert_eq!(
            kr_highest_weight(&a1, 0, 3, 0),
            YMonomial::from_terms(&[(0, -5, 1), (0, -3, 1), (0, -1, 1)])
        );
        let b2 = datum("B2");
        assert_eq!(
            kr_highest_weight(&b2, 0, 2, 0),
            YMonomial::from_terms(&[(0, -6, 1), (0, -2, 1)])
        );
        assert_eq!(
            detect_kr(&b2, &kr_highest_weight(&b2, 0, 2, 4)),
            Some((0, 2, 4))
        );
        assert_eq!(
            detect_kr(&b2, &YMonomial::from_terms(&[(0, -6, 1), (0, -4, 1)])),
            None
        );
    }

    #[test]
    fn closed_examples() {
        let a1 = datum("A1");
        let n = kr_normalized_closed(&a1, 0, 2, 0).unwrap();
        let want = SparsePoly::from_terms([
            (CAMonomial::one(), 1),
            (CAMonomial::a_var(0, 0, -1), 1),
            (CAMonomial::from_a_terms(&[(0, 0, -1), (0, -2, -1)]), 1),
        ]);
        assert_eq!(n, want);
        let q = kr_qchar_closed(&a1, 0, 1, 0).unwrap();
        let want =
            SparsePoly::from_terms([(YMonomial::var(0, -1, 1), 1), (YMonomial::var(0, 1, -1), 1)]);
        assert_eq!(q.poly, want);

        let a2 = datum("A2");
        let n = kr_normalized_closed(&a2, 0, 1, 0).unwrap();
        let want = SparsePoly::from_terms([
            (CAMonomial::one(), 1),
            (CAMonomial::a_var(0, 0, -1), 1),
            (CAMonomial::from_a_terms(&[(0, 0, -1), (1, 1, -1)]), 1),
        ]);
        assert_eq!(n, want);
        assert!(kr_normalized_closed(&datum("B2"), 0, 1, 0).is_err());
    }

    #[test]
    fn fm_fundamental_sl3() {
        let a2 = datum("A2");
        let q = fm_expand(&a2, &YMonomial::var(0, -1, 1), DEFAULT_STEP_CAP).unwrap();
        let want = SparsePoly::from_terms([
            (YMonomial::var(0, -1, 1), 1),
            (YMonomial::from_terms(&[(0, 1, -1), (1, 0, 1)]), 1),
            (YMonomial::var(1, 2, -1), 1),
        ]);
        assert_eq!(q.poly, want);
        let u = usual_char_y(&a2, &q.poly);
        let want = SparsePoly::from_terms([
            (WeightMonomial::from_weight(&[1, 0]), 1),
            (WeightMonomial::from_weight(&[-1, 1]), 1),
            (WeightMonomial::from_weight(&[0, -1]), 1),
        ]);
        assert_eq!(u, want);
    }

    #[test]
    fn fm_matches_closed_small() {
        let a1 = datum("A1");
        for k in 1..=5 {
            assert_eq!(
                fm_expand(&a1, &kr_highest_weight(&a1, 0, k, 0), DEFAULT_STEP_CAP).unwrap(),
                kr_qchar_closed(&a1, 0, k, 0).unwrap()
            );
        }
        let a2 = datum("A2");
        for i in 0..2 {
            for k in 1..=4 {
                assert_eq!(
                    fm_expand(&a2, &kr_highest_weight(&a2, i, k, 3), DEFAULT_STEP_CAP).unwrap(),
                    kr_qchar_closed(&a2, i, k, 3).unwrap()
                );
            }
        }
    }

    #[test]
    fn fm_dimensions() {
        let cases = [
            ("B2", 0, 5),
            ("B2", 1, 4),
            ("G2", 0, 7),
            ("G2", 1, 15),
            ("C3", 0, 6),
            ("A3", 1, 6),
            ("D4", 0, 8),
        ];
        for (t, i, dim) in cases {
            let d = datum(t);
            let q = fm_expand(&d, &kr_highest_weight(&d, i, 1, 0), DEFAULT_STEP_CAP).unwrap();
            assert_eq!(q.dimension(), dim, "{t} node {}", i + 1);
        }
        let a2 = datum("A2");
        let m = YMonomial::from_terms(&[(0, -3, 1), (0, -1, 1), (1, 2, 1)]);
        assert_eq!(
            fm_expand(&a2, &m, DEFAULT_STEP_CAP).unwrap().dimension(),
            15
        );
    }

    #[test]
    fn fm_errors() {
        let a1 = datum("A1");
        assert!(matches!(
            fm_expand(&a1, &YMonomial::var(0, 0, -1), DEFAULT_STEP_CAP),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(
            fm_expand(&a1, &kr_highest_weight(&a1, 0, 4, 0), 2),
            Err(Error::StepCapExceeded(2))
        ));
        assert!(matches!(
            fm_expand(&a1, &YMonomial::var(1, 0, 1), DEFAULT_STEP_CAP),
            Err(Error::UnknownNode { .. })
        ));
    }

    #[test]
    fn usual_char_is_weyl_invariant() {
        let a2 = datum("A2");
        let m = YMonomial::from_terms(&[(0, -3, 1), (0, -1, 1), (1, 2, 1)]);
        let u = usual_char_y(&a2, &fm_expand(&a2, &m, DEFAULT_STEP_CAP).unwrap().poly);
        for w in a2.weyl_elements() {
            assert_eq!(weyl_act_char(&a2, &w, &u), u);
        }
    }

    #[test]
    fn normalizations() {
        let a1 = datum("A1");
        let q = kr_qchar_closed(&a1, 0, 1, 0).unwrap();
        let s1 = WeylWord::from_labels(&[1]);
        let n = w_normalized_qchar(&a1, &q, &s1).unwrap();
        assert_eq!(
            n,
            SparsePoly::from_terms([(CAMonomial::one(), 1), (CAMonomial::a_var(0, 0, 1), 1)])
        );
        assert_eq!(
            w_normalized_qchar(&a1, &q, &WeylWord::identity()).unwrap(),
            q.normalized(&a1).unwrap()
        );
        let a2 = datum("A2");
        for k in 1..=4 {
            let q = kr_qchar_closed(&a2, 0, k, 0).unwrap();
            for w in a2.weyl_elements() {
                let n = w_normalized_qchar(&a2, &q, &w).unwrap();
                assert_eq!(n.coeff(&CAMonomial::one()), 1);
            }
        }
    }
}
