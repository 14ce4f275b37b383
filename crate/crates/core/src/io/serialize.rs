//! Text, LaTeX and JSON renderings of ring elements.
//!
//! Text output is the canonical syntax read back by [`super::parse`].
//! LaTeX prints a spectral shift `s` as `aq^{s}` with the anchor `a` kept
//! symbolic.

use serde_json::{json, Value};

use crate::cartan::CartanDatum;
use crate::rings::{
    CAMonomial, ExpMap, GradedSeries, LWeightMonomial, Monomial, SparsePoly, SpectralIndex,
    WeightMonomial, YMonomial,
};

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            _ => Err(format!(
                "unknown format '{s}' (expected text, latex or json)"
            )),
        }
    }
}

/// Monomials with canonical text and LaTeX forms.
pub trait Render: Monomial {
    fn text(&self, rank: usize) -> String;
    fn latex(&self, rank: usize) -> String;
}

fn latex_spectral(node: usize, shift: i64) -> String {
    match shift {
        0 => format!("{},a", node + 1),
        1 => format!("{},aq", node + 1),
        s => format!("{},aq^{{{s}}}", node + 1),
    }
}

fn latex_var(name: &str, k: &SpectralIndex, e: i64) -> String {
    let sup = if e == 1 {
        String::new()
    } else {
        format!("^{{{e}}}")
    };
    format!("{name}{sup}_{{{}}}", latex_spectral(k.node, k.shift))
}

/// `c1\alpha_1-\alpha_2+…` for a dense coefficient vector.
fn latex_lincomb(v: &[i64], basis: &str) -> String {
    let mut out = String::new();
    for (i, &c) in v.iter().enumerate().filter(|(_, c)| **c != 0) {
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&format!("\\{basis}_{}", i + 1));
    }
    out
}

fn dense(v: &ExpMap<usize>, rank: usize) -> Vec<i64> {
    v.to_dense(rank.max(v.min_len()))
}

impl Render for YMonomial {
    fn text(&self, _rank: usize) -> String {
        self.to_string()
    }
    fn latex(&self, _rank: usize) -> String {
        if self.is_one() {
            return "1".into();
        }
        self.y.iter().map(|(k, e)| latex_var("Y", k, e)).collect()
    }
}

impl Render for CAMonomial {
    fn text(&self, rank: usize) -> String {
        self.fmt_with_rank(rank)
    }
    fn latex(&self, rank: usize) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut s = String::new();
        if !self.e.is_empty() {
            s.push_str(&format!(
                "e^{{{}}}",
                latex_lincomb(&dense(&self.e, rank), "alpha")
            ));
        }
        for (k, e) in self.a.iter() {
            s.push_str(&latex_var("A", k, e));
        }
        s
    }
}

impl Render for LWeightMonomial {
    fn text(&self, rank: usize) -> String {
        self.fmt_with_rank(rank)
    }
    fn latex(&self, rank: usize) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut s = String::new();
        if !self.wt.is_empty() {
            s.push_str(&format!(
                "e^{{{}}}",
                latex_lincomb(&dense(&self.wt, rank), "omega")
            ));
        }
        for (k, e) in self.psi.iter() {
            s.push_str(&latex_var("\\Psi", k, e));
        }
        s
    }
}

impl Render for WeightMonomial {
    fn text(&self, rank: usize) -> String {
        self.fmt_with_rank(rank)
    }
    fn latex(&self, rank: usize) -> String {
        if self.is_one() {
            return "1".into();
        }
        format!("e^{{{}}}", latex_lincomb(&dense(&self.wt, rank), "omega"))
    }
}

fn join_terms<'a, M: Render + 'a>(
    terms: impl IntoIterator<Item = (&'a M, i64)>,
    rank: usize,
    latex: bool,
) -> String {
    let (plus, minus, times) = if latex {
        ("+", "-", "")
    } else {
        (" + ", " - ", "*")
    };
    let mut out = String::new();
    for (idx, (m, c)) in terms.into_iter().enumerate() {
        if c < 0 {
            out.push_str(if idx == 0 { "-" } else { minus });
        } else if idx > 0 {
            out.push_str(plus);
        }
        let body = if latex { m.latex(rank) } else { m.text(rank) };
        let abs = c.abs();
        if abs == 1 {
            out.push_str(&body);
        } else if m.is_one() {
            out.push_str(&abs.to_string());
        } else {
            out.push_str(&format!("{abs}{times}{body}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn poly_text<M: Render>(p: &SparsePoly<M>, rank: usize) -> String {
    join_terms(p.iter(), rank, false)
}

pub fn poly_latex<M: Render>(p: &SparsePoly<M>, rank: usize) -> String {
    join_terms(p.iter(), rank, true)
}

/// Series terms in increasing height, ties broken by monomial order.
pub fn series_text(s: &GradedSeries) -> String {
    let terms = s.sorted_terms();
    join_terms(terms.iter().map(|(_, m, c)| (m, *c)), s.rank(), false)
}

pub fn series_latex(s: &GradedSeries) -> String {
    let terms = s.sorted_terms();
    join_terms(terms.iter().map(|(_, m, c)| (m, *c)), s.rank(), true)
}

/// `{datum, head, terms:[{mono, coeff}], grading, truncation}` for a plain
/// polynomial.
pub fn poly_json<M: Render>(datum: &CartanDatum, head: Option<String>, p: &SparsePoly<M>) -> Value {
    let rank = datum.rank();
    let terms: Vec<Value> = p
        .iter()
        .map(|(m, c)| json!({"mono": m.text(rank), "coeff": c}))
        .collect();
    json!({
        "datum": datum.type_label.to_string(),
        "head": head,
        "terms": terms,
        "grading": Value::Null,
        "truncation": Value::Null,
    })
}

/// JSON form of a truncated series; each term carries its cone height.
pub fn series_json(datum: &CartanDatum, head: Option<String>, s: &GradedSeries) -> Value {
    let rank = datum.rank();
    let terms: Vec<Value> = s
        .sorted_terms()
        .into_iter()
        .map(|(h, m, c)| json!({"mono": m.text(rank), "coeff": c, "height": h}))
        .collect();
    json!({
        "datum": datum.type_label.to_string(),
        "head": head,
        "terms": terms,
        "grading": {"cone": s.cone().word().to_string()},
        "truncation": {"height_cap": s.height_cap()},
    })
}

pub fn render_poly<M: Render>(
    datum: &CartanDatum,
    head: Option<String>,
    p: &SparsePoly<M>,
    format: Format,
) -> String {
    match format {
        Format::Text => poly_text(p, datum.rank()),
        Format::Latex => poly_latex(p, datum.rank()),
        Format::Json => serde_json::to_string_pretty(&poly_json(datum, head, p)).unwrap(),
    }
}

pub fn render_series(
    datum: &CartanDatum,
    head: Option<String>,
    s: &GradedSeries,
    format: Format,
) -> String {
    match format {
        Format::Text => series_text(s),
        Format::Latex => series_latex(s),
        Format::Json => serde_json::to_string_pretty(&series_json(datum, head, s)).unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse::parse_poly;
    use crate::limits::formulas::closed;
    use crate::qchar::fm_expand;

    #[test]
    fn sl2_s1_latex() {
        let a1 = CartanDatum::from_label("A1").unwrap();
        let s = closed::sl2_s1(&a1, 3).unwrap();
        assert_eq!(
            series_latex(&s),
            "1+e^{\\alpha_1}+e^{2\\alpha_1}+e^{3\\alpha_1}"
        );
    }

    #[test]
    fn sl2_fundamental_json_has_two_terms() {
        let a1 = CartanDatum::from_label("A1").unwrap();
        let head = YMonomial::var(0, 0, 1);
        let q = fm_expand(&a1, &head, 1000).unwrap();
        let v = poly_json(&a1, Some(head.to_string()), &q.poly);
        assert_eq!(v["terms"].as_array().unwrap().len(), 2);
        assert_eq!(v["datum"], "A1");
        assert_eq!(v["head"], "Y[1,0]");
    }

    #[test]
    fn latex_spectral_parameters() {
        let m = YMonomial::from_terms(&[(0, -1, 1), (0, 0, 1), (1, 1, -2)]);
        assert_eq!(m.latex(2), "Y_{1,aq^{-1}}Y_{1,a}Y^{-2}_{2,aq}");
        let a = CAMonomial::a_var(0, 4, -1).mul(&CAMonomial::e_root(&[-1, 1]));
        assert_eq!(a.latex(2), "e^{-\\alpha_1+\\alpha_2}A^{-1}_{1,aq^{4}}");
        let l = LWeightMonomial::from_terms(&[0, 2], &[(0, 2, 1), (1, 5, -1)]);
        assert_eq!(
            l.latex(2),
            "e^{2\\omega_2}\\Psi_{1,aq^{2}}\\Psi^{-1}_{2,aq^{5}}"
        );
    }

    #[test]
    fn text_round_trip() {
        let a2 = CartanDatum::from_label("A2").unwrap();
        let p = SparsePoly::from_terms([
            (CAMonomial::one(), 3),
            (
                CAMonomial::a_var(1, -3, -2).mul(&CAMonomial::e_root(&[0, 2])),
                -4,
            ),
            (CAMonomial::e_root(&[-1, 0]), 1),
        ]);
        let text = poly_text(&p, 2);
        assert_eq!(parse_poly::<CAMonomial>(&text, &a2).unwrap(), p);
        assert_eq!(poly_text(&SparsePoly::<YMonomial>::zero(), 2), "0");
    }
}
