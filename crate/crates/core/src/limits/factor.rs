use crate::cartan::{CartanDatum, Cone, WeylWord};
use crate::error::{Error, Result};
use crate::rings::{graded_divide, CAMonomial, GradedSeries, Monomial, SparsePoly};

/// Splits `S = c × a` with `c` pure in `e^β` and `a` free of `e`.
pub fn factor_const_nonconst(s: &GradedSeries) -> Result<(GradedSeries, GradedSeries)> {
    let a = GradedSeries::from_poly(
        s.cone().clone(),
        s.height_cap(),
        &s.poly().filter(|m, _| m.is_pure_a()),
    )?;
    let c = graded_divide(s, &a).map_err(|e| match e {
        Error::NonUnitLeadingTerm(t) => Error::FactorizationFailed(t),
        other => other,
    })?;
    if let Some((_, m, _)) = c
        .sorted_terms()
        .into_iter()
        .find(|(_, m, _)| !m.is_pure_e())
    {
        return Err(Error::FactorizationFailed(m.fmt_with_rank(s.rank())));
    }
    Ok((c, a))
}

/// `c ↦ c^{-1}`: `e^β ↦ e^{−β}`, moving from the cone `w` to `w·w0`.
pub fn const_flip(datum: &CartanDatum, c: &GradedSeries) -> Result<GradedSeries> {
    let rank = datum.rank();
    let target = Cone::new(datum, &c.cone().word().concat(datum.longest_word()));
    let mut poly = SparsePoly::zero();
    for (m, coeff) in c.iter() {
        if !m.is_pure_e() {
            return Err(Error::FlipLeftCone(format!(
                "{} is not a constant term",
                m.fmt_with_rank(rank)
            )));
        }
        let flipped = CAMonomial {
            a: m.a.clone(),
            e: m.e.negated(),
        };
        if target.coords(&flipped.degree(rank)).is_none() {
            return Err(Error::FlipLeftCone(flipped.fmt_with_rank(rank)));
        }
        poly.add_term(flipped, coeff);
    }
    GradedSeries::from_poly(target, c.height_cap(), &poly)
}

/// Outcome of comparing two truncated series, possibly over different cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub equal: bool,
    pub compared_terms: usize,
    pub witness: Option<String>,
}

/// Compares `x` and `y` on every degree that both truncations determine:
/// degrees inside both cones with heights within both caps. A term of one
/// side whose degree lies outside the other cone is a disagreement.
pub fn compare_truncations(x: &GradedSeries, y: &GradedSeries) -> Comparison {
    let rank = x.rank();
    let mut compared = 0;
    let check = |a: &GradedSeries, b: &GradedSeries, compared: &mut usize| -> Option<String> {
        for (m, c) in a.iter() {
            match b.height(m) {
                None => {
                    return Some(format!(
                        "{} outside the cone of the other side",
                        m.fmt_with_rank(rank)
                    ))
                }
                Some(h) if h <= b.height_cap() => {
                    *compared += 1;
                    if b.coeff(m) != c {
                        return Some(format!(
                            "{}: {} vs {}",
                            m.fmt_with_rank(rank),
                            c,
                            b.coeff(m)
                        ));
                    }
                }
                Some(_) => {}
            }
        }
        None
    };
    let witness = check(x, y, &mut compared).or_else(|| {
        let mut unused = 0;
        check(y, x, &mut unused)
    });
    Comparison {
        equal: witness.is_none(),
        compared_terms: compared,
        witness,
    }
}

/// All `λ ∈ Λ₋` of height `h` (root coordinates).
fn negative_degrees_of_height(rank: usize, h: i64) -> Vec<Vec<i64>> {
    fn rec(rank: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == rank - 1 {
            cur.push(-left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(-x);
            rec(rank, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rank, h, &mut Vec::new(), &mut out);
    out
}

/// Largest `H` such that every degree of `Λ₋` of height at most `H` that
/// lies in one of the given cones is within that series' height cap.
pub fn determined_window(series: &[&GradedSeries], limit: i64) -> i64 {
    let rank = series[0].rank();
    for h in 0..=limit {
        for deg in negative_degrees_of_height(rank, h) {
            for s in series {
                if let Some(hh) = s.cone().height(&deg) {
                    if hh > s.height_cap() {
                        return h - 1;
                    }
                }
            }
        }
    }
    limit
}

/// `c^{-1} × a` as an element of the completion along `Λ₋`, valid up to the
/// returned height. `None` when a factor has support outside `Λ₋`.
pub fn flipped_product(
    flipped_c: &GradedSeries,
    a: &GradedSeries,
) -> Option<(SparsePoly<CAMonomial>, i64)> {
    let rank = a.rank();
    let in_neg = |s: &GradedSeries| {
        s.iter()
            .all(|(m, _)| m.degree(rank).iter().all(|&x| x <= 0))
    };
    if !in_neg(flipped_c) || !in_neg(a) {
        return None;
    }
    let window = determined_window(&[flipped_c, a], flipped_c.height_cap().max(a.height_cap()));
    let e_height = |m: &CAMonomial| -m.degree(rank).iter().sum::<i64>();
    let mut prod = SparsePoly::zero();
    for (x, cx) in flipped_c.iter() {
        if e_height(x) > window {
            continue;
        }
        for (y, cy) in a.iter() {
            let z = x.mul(y);
            if e_height(&z) <= window {
                prod.add_term(z, cx * cy);
            }
        }
    }
    Some((prod, window))
}

/// Cone of `Λ₋`, truncated at `cap`, holding a polynomial of degrees in `Λ₋`.
pub fn in_negative_cone(
    datum: &CartanDatum,
    cap: i64,
    p: &SparsePoly<CAMonomial>,
) -> Result<GradedSeries> {
    GradedSeries::from_poly(Cone::new(datum, &WeylWord::identity()), cap, p)
}
