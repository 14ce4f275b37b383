//! Parser for the canonical text syntax of ring elements.
//!
//! Grammar (whitespace allowed between tokens):
//!
//! ```text
//! expr    := ["-"] term (("+" | "-") term)*
//! term    := int | [int ["*"]] factor (["*"] factor)*
//! factor  := atom ["^" int] | "1"
//! atom    := Y[i,s] | A[i,s] | Psi[i,s] | e[c1,..] | q^w[c1,..] | e^w[c1,..]
//! ```
//!
//! Node labels are 1-based in text and 0-based in memory.

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::rings::ExpMap;
use crate::rings::{
    CAMonomial, LWeightMonomial, Monomial, SparsePoly, SpectralIndex, WeightMonomial, YMonomial,
};

/// One variable or exponential in a parsed monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Y(SpectralIndex),
    A(SpectralIndex),
    Psi(SpectralIndex),
    /// `e[...]`: root coordinates.
    E(Vec<i64>),
    /// `q^w[...]`: ω-coordinates.
    QW(Vec<i64>),
    /// `e^w[...]`: ω-coordinates.
    EW(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub atom: Atom,
    pub exp: i64,
    pub pos: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprTerm {
    pub coeff: i64,
    pub factors: Vec<Factor>,
}

/// Parse tree of a sum of monomials; flavor-agnostic until converted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprAst {
    pub terms: Vec<ExprTerm>,
}

/// Which monomial ring a parsed expression lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Y,
    CA,
    LWeight,
    Weight,
}

impl Atom {
    fn flavor(&self) -> Flavor {
        match self {
            Atom::Y(_) => Flavor::Y,
            Atom::A(_) | Atom::E(_) => Flavor::CA,
            Atom::Psi(_) | Atom::QW(_) => Flavor::LWeight,
            Atom::EW(_) => Flavor::Weight,
        }
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn starts_with(&mut self, s: &str) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(s.as_bytes())
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{s}'")))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(Error::parse(start, "expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn int_list(&mut self) -> Result<Vec<i64>> {
        self.expect("[")?;
        let mut v = vec![self.int()?];
        while self.eat(",") {
            v.push(self.int()?);
        }
        self.expect("]")?;
        Ok(v)
    }

    fn index(&mut self) -> Result<SpectralIndex> {
        self.expect("[")?;
        let pos = self.pos;
        let node = self.int()?;
        if node < 1 {
            return Err(Error::parse(pos, "node labels start at 1"));
        }
        self.expect(",")?;
        let shift = self.int()?;
        self.expect("]")?;
        Ok(SpectralIndex::new(node as usize - 1, shift))
    }

    fn at_factor(&mut self) -> bool {
        matches!(self.peek(), Some(b'Y' | b'A' | b'P' | b'e' | b'q' | b'1'))
    }

    fn atom(&mut self) -> Result<Atom> {
        if self.eat("Psi") {
            Ok(Atom::Psi(self.index()?))
        } else if self.eat("Y") {
            Ok(Atom::Y(self.index()?))
        } else if self.eat("A") {
            Ok(Atom::A(self.index()?))
        } else if self.eat("q^w") {
            Ok(Atom::QW(self.int_list()?))
        } else if self.eat("e^w") {
            Ok(Atom::EW(self.int_list()?))
        } else if self.eat("e") {
            Ok(Atom::E(self.int_list()?))
        } else {
            Err(Error::parse(self.pos, "expected Y, A, Psi, e, q^w or e^w"))
        }
    }

    fn factor(&mut self) -> Result<Factor> {
        self.skip_ws();
        let pos = self.pos;
        let atom = self.atom()?;
        let exp = if self.eat("^") { self.int()? } else { 1 };
        Ok(Factor { atom, exp, pos })
    }

    fn term(&mut self, sign: i64) -> Result<ExprTerm> {
        let mut coeff = sign;
        let mut factors = Vec::new();
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff *= self.int()?;
            if !self.eat("*") && !self.at_factor() {
                return Ok(ExprTerm { coeff, factors });
            }
        }
        loop {
            // a literal `1` factor is the empty product
            if self.peek() == Some(b'1') {
                self.pos += 1;
            } else {
                factors.push(self.factor()?);
            }
            let star = self.eat("*");
            if !star && !self.at_factor() {
                break;
            }
        }
        Ok(ExprTerm { coeff, factors })
    }
}

/// Parses `text` into a flavor-agnostic tree.
pub fn parse_ast(text: &str) -> Result<ExprAst> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut sign = if lx.eat("-") { -1 } else { 1 };
    loop {
        terms.push(lx.term(sign)?);
        if lx.eat("+") {
            sign = 1;
        } else if lx.eat("-") {
            sign = -1;
        } else {
            break;
        }
    }
    if lx.peek().is_some() {
        return Err(Error::parse(lx.pos, "unexpected trailing input"));
    }
    Ok(ExprAst { terms })
}

impl ExprAst {
    /// The unique flavor of every atom, `None` for a constant.
    pub fn flavor(&self) -> Result<Option<Flavor>> {
        let mut found: Option<Flavor> = None;
        for f in self.terms.iter().flat_map(|t| &t.factors) {
            let fl = f.atom.flavor();
            match found {
                Some(g) if g != fl => {
                    return Err(Error::parse(f.pos, "mixes variables of different rings"))
                }
                _ => found = Some(fl),
            }
        }
        Ok(found)
    }

    /// Converts into a polynomial of the requested flavor.
    pub fn to_poly<M: FromAtoms>(&self, datum: &CartanDatum) -> Result<SparsePoly<M>> {
        let mut p = SparsePoly::zero();
        for t in &self.terms {
            let mut m = M::one();
            for f in &t.factors {
                m = m.mul(&M::from_atom(datum, f)?.pow(f.exp));
            }
            p.add_term(m, t.coeff);
        }
        Ok(p)
    }
}

/// Monomial flavors that can be built from parsed atoms.
pub trait FromAtoms: Monomial {
    const FLAVOR: Flavor;
    fn from_atom(datum: &CartanDatum, f: &Factor) -> Result<Self>;
}

fn check_index(datum: &CartanDatum, k: &SpectralIndex) -> Result<SpectralIndex> {
    datum.check_node(k.node)?;
    Ok(*k)
}

fn check_vec(datum: &CartanDatum, v: &[i64], pos: usize) -> Result<ExpMap<usize>> {
    if v.len() > datum.rank() {
        return Err(Error::parse(
            pos,
            format!("vector of length {} exceeds rank {}", v.len(), datum.rank()),
        ));
    }
    Ok(ExpMap::from_dense(v))
}

fn wrong_flavor(f: &Factor, want: Flavor) -> Error {
    Error::parse(
        f.pos,
        format!("variable does not belong to the {want:?} ring"),
    )
}

impl FromAtoms for YMonomial {
    const FLAVOR: Flavor = Flavor::Y;
    fn from_atom(datum: &CartanDatum, f: &Factor) -> Result<Self> {
        match &f.atom {
            Atom::Y(k) => {
                let k = check_index(datum, k)?;
                Ok(YMonomial::var(k.node, k.shift, 1))
            }
            _ => Err(wrong_flavor(f, Self::FLAVOR)),
        }
    }
}

impl FromAtoms for CAMonomial {
    const FLAVOR: Flavor = Flavor::CA;
    fn from_atom(datum: &CartanDatum, f: &Factor) -> Result<Self> {
        match &f.atom {
            Atom::A(k) => {
                let k = check_index(datum, k)?;
                Ok(CAMonomial::a_var(k.node, k.shift, 1))
            }
            Atom::E(v) => Ok(CAMonomial {
                a: ExpMap::new(),
                e: check_vec(datum, v, f.pos)?,
            }),
            _ => Err(wrong_flavor(f, Self::FLAVOR)),
        }
    }
}

impl FromAtoms for LWeightMonomial {
    const FLAVOR: Flavor = Flavor::LWeight;
    fn from_atom(datum: &CartanDatum, f: &Factor) -> Result<Self> {
        match &f.atom {
            Atom::Psi(k) => {
                let k = check_index(datum, k)?;
                Ok(LWeightMonomial::psi_var(k.node, k.shift, 1))
            }
            Atom::QW(v) => Ok(LWeightMonomial {
                psi: ExpMap::new(),
                wt: check_vec(datum, v, f.pos)?,
            }),
            _ => Err(wrong_flavor(f, Self::FLAVOR)),
        }
    }
}

impl FromAtoms for WeightMonomial {
    const FLAVOR: Flavor = Flavor::Weight;
    fn from_atom(datum: &CartanDatum, f: &Factor) -> Result<Self> {
        match &f.atom {
            Atom::EW(v) => Ok(WeightMonomial {
                wt: check_vec(datum, v, f.pos)?,
            }),
            _ => Err(wrong_flavor(f, Self::FLAVOR)),
        }
    }
}

/// A parsed ring element with its detected flavor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingValue {
    Y(SparsePoly<YMonomial>),
    CA(SparsePoly<CAMonomial>),
    LWeight(SparsePoly<LWeightMonomial>),
    Weight(SparsePoly<WeightMonomial>),
}

/// Parses `text` and picks the ring from the variables it uses; constants
/// are read in the Y-ring.
pub fn parse_expr(text: &str, datum: &CartanDatum) -> Result<RingValue> {
    let ast = parse_ast(text)?;
    Ok(match ast.flavor()?.unwrap_or(Flavor::Y) {
        Flavor::Y => RingValue::Y(ast.to_poly(datum)?),
        Flavor::CA => RingValue::CA(ast.to_poly(datum)?),
        Flavor::LWeight => RingValue::LWeight(ast.to_poly(datum)?),
        Flavor::Weight => RingValue::Weight(ast.to_poly(datum)?),
    })
}

/// Parses a polynomial of a known flavor.
pub fn parse_poly<M: FromAtoms>(text: &str, datum: &CartanDatum) -> Result<SparsePoly<M>> {
    parse_ast(text)?.to_poly(datum)
}

/// Parses a single monomial with coefficient 1.
pub fn parse_monomial<M: FromAtoms>(text: &str, datum: &CartanDatum) -> Result<M> {
    let p: SparsePoly<M> = parse_poly(text, datum)?;
    let mut it = p.iter();
    match (it.next(), it.next()) {
        (Some((m, 1)), None) => Ok(m.clone()),
        _ => Err(Error::parse(0, "expected a single monomial")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::wt_degree;

    fn a2() -> CartanDatum {
        CartanDatum::from_label("A2").unwrap()
    }

    #[test]
    fn y_monomial() {
        let m: YMonomial = parse_monomial("Y[1,-1]Y[2,2]^2", &a2()).unwrap();
        assert_eq!(m, YMonomial::from_terms(&[(0, -1, 1), (1, 2, 2)]));
    }

    #[test]
    fn psi_inverse() {
        let m: LWeightMonomial = parse_monomial("Psi[1,0]^-1", &a2()).unwrap();
        assert_eq!(m, LWeightMonomial::psi_var(0, 0, -1));
        assert!(m.wt.is_empty());
    }

    #[test]
    fn ca_with_space_has_degree_minus_two_alpha1() {
        let d = a2();
        let m: CAMonomial = parse_monomial("A[1,0]^-1 e[-1,0]", &d).unwrap();
        assert_eq!(m.degree(2), vec![-2, 0]);
        // weight of A_{1,0}^{-1} e^{-α1} is −2α1 = (−4, 2) in ω-coordinates
        assert_eq!(wt_degree(&m, &d).0, vec![-4, 2]);
    }

    #[test]
    fn sums_and_coefficients() {
        let d = a2();
        let p: SparsePoly<YMonomial> = parse_poly("3 + Y[1,-1] - 2*Y[1,1]^-1", &d).unwrap();
        assert_eq!(p.coeff(&YMonomial::one()), 3);
        assert_eq!(p.coeff(&YMonomial::var(0, 1, -1)), -2);
        let q: SparsePoly<YMonomial> = parse_poly("-1 + 2 Y[2,0] * Y[2,2]", &d).unwrap();
        assert_eq!(q.coeff(&YMonomial::one()), -1);
        assert_eq!(q.coeff(&YMonomial::from_terms(&[(1, 0, 1), (1, 2, 1)])), 2);
    }

    #[test]
    fn errors_carry_positions() {
        let d = a2();
        match parse_expr("Y[1,0]Y[1,", &d) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 10),
            other => panic!("{other:?}"),
        }
        match parse_expr("Y[1,0] A[1,0]", &d) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_expr("Y[3,0]", &d),
            Err(Error::UnknownNode { node: 2, rank: 2 })
        ));
        assert!(matches!(
            parse_expr("e[1,0,0]", &d),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_expr("Y[1,0] )", &d),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn flavor_detection() {
        let d = a2();
        assert!(matches!(parse_expr("1", &d).unwrap(), RingValue::Y(_)));
        assert!(matches!(
            parse_expr("q^w[0,1]Psi[2,3]", &d).unwrap(),
            RingValue::LWeight(_)
        ));
        assert!(matches!(
            parse_expr("e^w[1,-1]", &d).unwrap(),
            RingValue::Weight(_)
        ));
        assert!(matches!(
            parse_expr("e[1,1] + A[2,1]^-1", &d).unwrap(),
            RingValue::CA(_)
        ));
    }
}
