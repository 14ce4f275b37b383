//! Finite-type root data: Cartan matrices, weight and root lattices, Weyl
//! group words and the cones `wΛ₋`.
//!
//! Nodes are 0-based internally and follow Bourbaki numbering. The Cartan
//! matrix uses the convention `C[i][j] = ⟨α_i^∨, α_j⟩`, so that
//! `α_j = Σ_i C[i][j] ω_i` and `D·C` is symmetric for `D = diag(d_i)`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A finite Dynkin type such as `A2` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    pub family: Family,
    pub rank: usize,
}

impl TypeLabel {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(TypeLabel { family, rank })
        } else {
            Err(Error::UnsupportedType(format!("{family:?}{rank}")))
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnsupportedType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnsupportedType(s.to_string()))?;
        TypeLabel::new(family, rank)
    }
}

impl Serialize for TypeLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TypeLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A weight in the fundamental-weight basis `(ω_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(rank: usize) -> Self {
        WeightVector(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        WeightVector(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> WeightVector {
        WeightVector(self.0.iter().map(|a| a * k).collect())
    }
}

/// A word `s_{i_1} ⋯ s_{i_r}` in the simple reflections (0-based letters).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord(letters)
    }

    /// Builds a word from 1-based node labels, as written in the paper-style
    /// notation `s2s1 ↦ [2, 1]`.
    pub fn from_labels(labels: &[usize]) -> Self {
        WeylWord(labels.iter().map(|l| l - 1).collect())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &WeylWord) -> WeylWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        WeylWord(v)
    }

    pub fn reversed(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    /// 1-based comma list, `e` for the identity.
    pub fn to_labels_string(&self) -> String {
        if self.0.is_empty() {
            return "e".to_string();
        }
        self.0
            .iter()
            .map(|l| (l + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for l in &self.0 {
            write!(f, "s{}", l + 1)?;
        }
        Ok(())
    }
}

impl FromStr for WeylWord {
    type Err = Error;

    /// Accepts `e`, an empty string, `2,1` or `s2s1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(WeylWord::identity());
        }
        let parts: Vec<&str> = if s.contains(',') {
            s.split(',').collect()
        } else if s.starts_with('s') {
            s.split('s').filter(|p| !p.is_empty()).collect()
        } else {
            vec![s]
        };
        let mut letters = Vec::with_capacity(parts.len());
        for p in parts {
            let label: usize = p
                .trim()
                .parse()
                .map_err(|_| Error::parse(0, format!("bad Weyl word letter {p:?}")))?;
            if label == 0 {
                return Err(Error::parse(0, "Weyl word letters are 1-based"));
            }
            letters.push(label - 1);
        }
        Ok(WeylWord(letters))
    }
}

impl Serialize for WeylWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_labels_string())
    }
}

impl<'de> Deserialize<'de> for WeylWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Finite-type root datum.
#[derive(Debug, Clone)]
pub struct CartanDatum {
    pub type_label: TypeLabel,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    pub dual_coxeter: i64,
    pub lacing: i64,
    bar: Vec<usize>,
    cartan_inv: Vec<Vec<Rational64>>,
    positive_roots: Vec<Vec<i64>>,
    longest: WeylWord,
}

impl PartialEq for CartanDatum {
    fn eq(&self, other: &Self) -> bool {
        self.type_label == other.type_label
    }
}

impl Eq for CartanDatum {}

fn cartan_matrix(t: TypeLabel) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match t.family {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
    }
    match t.family {
        // α_n short
        Family::B => c[n - 1][n - 2] = -2,
        // α_n long
        Family::C => c[n - 2][n - 1] = -2,
        // α_1, α_2 long; α_3, α_4 short
        Family::F => c[2][1] = -2,
        // α_1 short, α_2 long
        Family::G => c[0][1] = -3,
        _ => {}
    }
    c
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn symmetrize(c: &[Vec<i64>]) -> Vec<i64> {
    let n = c.len();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    d[0] = Some(Rational64::from_integer(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && c[i][j] != 0 && d[j].is_none() {
                // d_i C_ij = d_j C_ji
                d[j] = Some(d[i].unwrap() * Rational64::new(c[i][j], c[j][i]));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Rational64> = d
        .into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect();
    let lcm = d
        .iter()
        .fold(1i64, |acc, x| acc / gcd(acc, *x.denom()) * x.denom());
    let ints: Vec<i64> = d.iter().map(|x| (x * lcm).to_integer()).collect();
    let g = ints.iter().fold(0, |acc, &x| gcd(acc, x));
    ints.into_iter().map(|x| x / g).collect()
}

fn invert(c: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = c.len();
    let mut a: Vec<Vec<Rational64>> = c
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..n).map(|j| Rational64::from_integer((i == j) as i64)));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| a[r][col] != Rational64::from_integer(0))
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f != Rational64::from_integer(0) {
                    for k in 0..2 * n {
                        let v = a[col][k];
                        a[r][k] -= f * v;
                    }
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

fn dual_coxeter(t: TypeLabel) -> i64 {
    let n = t.rank as i64;
    match t.family {
        Family::A => n + 1,
        Family::B => 2 * n - 1,
        Family::C => n + 1,
        Family::D => 2 * n - 2,
        Family::E => match n {
            6 => 12,
            7 => 18,
            _ => 30,
        },
        Family::F => 9,
        Family::G => 4,
    }
}

/// Supported-type constructor.
pub fn build_cartan(type_label: TypeLabel) -> CartanDatum {
    CartanDatum::new(type_label)
}

impl CartanDatum {
    pub fn new(type_label: TypeLabel) -> Self {
        let cartan = cartan_matrix(type_label);
        let symmetrizer = symmetrize(&cartan);
        let cartan_inv = invert(&cartan);
        let lacing = *symmetrizer.iter().max().unwrap();
        let mut datum = CartanDatum {
            type_label,
            cartan,
            symmetrizer,
            dual_coxeter: dual_coxeter(type_label),
            lacing,
            bar: Vec::new(),
            cartan_inv,
            positive_roots: Vec::new(),
            longest: WeylWord::identity(),
        };
        datum.positive_roots = datum.compute_positive_roots();
        let rank = datum.rank();
        datum.longest = datum.word_from_rho_image(&WeightVector(vec![-1; rank]));
        datum.bar = (0..rank)
            .map(|i| {
                let img = datum.weyl_act_root(&datum.longest, &unit(rank, i));
                (0..rank)
                    .find(|&j| {
                        img.iter()
                            .enumerate()
                            .all(|(k, &x)| x == -((k == j) as i64))
                    })
                    .expect("w0 maps simple roots to negative simple roots")
            })
            .collect();
        datum
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Ok(CartanDatum::new(label.parse()?))
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn d(&self, i: usize) -> i64 {
        self.symmetrizer[i]
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// The involution `i ↦ ī` with `w0(α_i) = −α_ī`.
    pub fn bar(&self, i: usize) -> usize {
        self.bar[i]
    }

    pub fn bar_involution(&self) -> &[usize] {
        &self.bar
    }

    pub fn longest_word(&self) -> &WeylWord {
        &self.longest
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node < self.rank() {
            Ok(())
        } else {
            Err(Error::UnknownNode {
                node,
                rank: self.rank(),
            })
        }
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// `α_i` in the ω-basis: the i-th column of the Cartan matrix.
    pub fn simple_root(&self, i: usize) -> WeightVector {
        WeightVector((0..self.rank()).map(|j| self.cartan[j][i]).collect())
    }

    /// Converts simple-root coordinates to ω-coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> WeightVector {
        let n = self.rank();
        WeightVector(
            (0..n)
                .map(|k| (0..n).map(|j| self.cartan[k][j] * root[j]).sum())
                .collect(),
        )
    }

    /// Exact simple-root coordinates of a weight.
    pub fn weight_to_root(&self, w: &WeightVector) -> Vec<Rational64> {
        let n = self.rank();
        (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| self.cartan_inv[j][k] * Rational64::from_integer(w.0[k]))
                    .sum()
            })
            .collect()
    }

    /// Simple-root coordinates when the weight lies in the root lattice Λ.
    pub fn weight_to_root_int(&self, w: &WeightVector) -> Option<Vec<i64>> {
        self.weight_to_root(w)
            .into_iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    /// The invariant form `(λ, μ)` normalized by `(α_i, α_j) = d_i C_ij`.
    pub fn inner(&self, a: &WeightVector, b: &WeightVector) -> Rational64 {
        let ra = self.weight_to_root(a);
        let rb = self.weight_to_root(b);
        let n = self.rank();
        let mut acc = Rational64::from_integer(0);
        for i in 0..n {
            for j in 0..n {
                acc += ra[i]
                    * rb[j]
                    * Rational64::from_integer(self.symmetrizer[i] * self.cartan[i][j]);
            }
        }
        acc
    }

    /// `s_i λ = λ − ⟨λ, α_i^∨⟩ α_i` on ω-coordinates.
    pub fn reflect_weight(&self, i: usize, w: &WeightVector) -> WeightVector {
        let li = w.0[i];
        WeightVector(
            w.0.iter()
                .enumerate()
                .map(|(j, &x)| x - li * self.cartan[j][i])
                .collect(),
        )
    }

    /// `s_i β` on simple-root coordinates.
    pub fn reflect_root(&self, i: usize, beta: &[i64]) -> Vec<i64> {
        let pairing: i64 = (0..self.rank()).map(|j| self.cartan[i][j] * beta[j]).sum();
        let mut out = beta.to_vec();
        out[i] -= pairing;
        out
    }

    /// Applies `w = s_{i_1} ⋯ s_{i_r}` to a weight, rightmost letter first.
    pub fn weyl_act_weight(&self, word: &WeylWord, w: &WeightVector) -> WeightVector {
        word.0
            .iter()
            .rev()
            .fold(w.clone(), |acc, &i| self.reflect_weight(i, &acc))
    }

    pub fn weyl_act_root(&self, word: &WeylWord, beta: &[i64]) -> Vec<i64> {
        word.0
            .iter()
            .rev()
            .fold(beta.to_vec(), |acc, &i| self.reflect_root(i, &acc))
    }

    /// `w^{-1}` applied to root coordinates.
    pub fn weyl_act_root_inverse(&self, word: &WeylWord, beta: &[i64]) -> Vec<i64> {
        word.0
            .iter()
            .fold(beta.to_vec(), |acc, &i| self.reflect_root(i, &acc))
    }

    pub fn rho(&self) -> WeightVector {
        WeightVector(vec![1; self.rank()])
    }

    /// Reduced word of the element `w` determined by `w(ρ)`, built from left
    /// descents (smallest index first).
    pub fn word_from_rho_image(&self, image: &WeightVector) -> WeylWord {
        let mut v = image.clone();
        let mut letters = Vec::new();
        while let Some(i) = v.0.iter().position(|&c| c < 0) {
            letters.push(i);
            v = self.reflect_weight(i, &v);
        }
        WeylWord(letters)
    }

    /// Reduced word obtained by the exchange condition: each new letter
    /// either extends the current reduced prefix or cancels the unique letter
    /// where the image of `α_i` turns negative.
    pub fn reduce_word(&self, word: &WeylWord) -> WeylWord {
        let n = self.rank();
        let mut reduced: Vec<usize> = Vec::with_capacity(word.len());
        for &i in &word.0 {
            let mut beta = unit(n, i);
            let mut cancel = None;
            for p in (0..reduced.len()).rev() {
                let j = reduced[p];
                if is_unit(&beta, j) {
                    cancel = Some(p);
                    break;
                }
                beta = self.reflect_root(j, &beta);
            }
            match cancel {
                Some(p) => {
                    reduced.remove(p);
                }
                None => reduced.push(i),
            }
        }
        WeylWord(reduced)
    }

    /// `#{α > 0 : w(α) < 0}`.
    pub fn inversion_count(&self, word: &WeylWord) -> usize {
        self.positive_roots
            .iter()
            .filter(|a| self.weyl_act_root(word, a).iter().all(|&x| x <= 0))
            .count()
    }

    pub fn length(&self, word: &WeylWord) -> usize {
        self.reduce_word(word).len()
    }

    /// Two words represent the same element iff they agree on `ρ`.
    pub fn same_element(&self, a: &WeylWord, b: &WeylWord) -> bool {
        self.weyl_act_weight(a, &self.rho()) == self.weyl_act_weight(b, &self.rho())
    }

    /// All Weyl group elements as canonical reduced words (BFS by length).
    /// Intended for small ranks.
    pub fn weyl_elements(&self) -> Vec<WeylWord> {
        let mut seen: HashMap<WeightVector, ()> = HashMap::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([self.rho()]);
        seen.insert(self.rho(), ());
        while let Some(v) = queue.pop_front() {
            out.push(self.word_from_rho_image(&v));
            for i in 0..self.rank() {
                let u = self.reflect_weight(i, &v);
                if seen.insert(u.clone(), ()).is_none() {
                    queue.push_back(u);
                }
            }
        }
        out
    }

    fn compute_positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut roots: BTreeSet<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
        let mut layer: Vec<Vec<i64>> = roots.iter().cloned().collect();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    // p = max{p : β − pα_i is a root}
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if roots.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..n).map(|j| self.cartan[i][j] * beta[j]).sum();
                    let q = p - pairing;
                    if q > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if roots.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            layer = next;
        }
        let mut v: Vec<Vec<i64>> = roots.into_iter().collect();
        v.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
        v
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn is_unit(v: &[i64], i: usize) -> bool {
    v.iter().enumerate().all(|(k, &x)| x == (k == i) as i64)
}

/// Coordinates of a degree in the cone `wΛ₋ = ⊕ ℕ w(−α_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeCoords {
    pub coords: Vec<i64>,
    pub height: i64,
}

/// The cone `wΛ₋` with a cached integer matrix for `λ ↦ −w^{-1}λ`.
#[derive(Debug, Clone)]
pub struct Cone {
    word: WeylWord,
    to_cone: Vec<Vec<i64>>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.to_cone == other.to_cone
    }
}

impl Eq for Cone {}

impl Cone {
    pub fn new(datum: &CartanDatum, word: &WeylWord) -> Self {
        let n = datum.rank();
        let word = datum.reduce_word(word);
        // column j = −w^{-1}(α_j)
        let cols: Vec<Vec<i64>> = (0..n)
            .map(|j| {
                datum
                    .weyl_act_root_inverse(&word, &unit(n, j))
                    .into_iter()
                    .map(|x| -x)
                    .collect()
            })
            .collect();
        let to_cone = (0..n)
            .map(|i| (0..n).map(|j| cols[j][i]).collect())
            .collect();
        Cone { word, to_cone }
    }

    pub fn word(&self) -> &WeylWord {
        &self.word
    }

    pub fn rank(&self) -> usize {
        self.to_cone.len()
    }

    /// Raw coordinates, possibly negative.
    pub fn raw_coords(&self, root: &[i64]) -> Vec<i64> {
        self.to_cone
            .iter()
            .map(|row| row.iter().zip(root).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn coords(&self, root: &[i64]) -> Option<ConeCoords> {
        let coords = self.raw_coords(root);
        if coords.iter().all(|&c| c >= 0) {
            let height = coords.iter().sum();
            Some(ConeCoords { coords, height })
        } else {
            None
        }
    }

    pub fn height(&self, root: &[i64]) -> Option<i64> {
        self.coords(root).map(|c| c.height)
    }
}

/// Decomposes `λ` (ω-coordinates) in the cone `wΛ₋`; `None` when `λ ∉ wΛ₋`.
pub fn cone_coords(datum: &CartanDatum, lambda: &WeightVector, w: &WeylWord) -> Option<ConeCoords> {
    let root = datum.weight_to_root_int(lambda)?;
    Cone::new(datum, w).coords(&root)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> CartanDatum {
        CartanDatum::from_label(s).unwrap()
    }

    #[test]
    fn a1_and_a2_tables() {
        let a1 = datum("A1");
        assert_eq!(a1.cartan_matrix(), &[vec![2]]);
        assert_eq!(a1.symmetrizers(), &[1]);
        assert_eq!(a1.bar(0), 0);

        let a2 = datum("A2");
        assert_eq!(a2.cartan_matrix(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.bar(0), 1);
        assert_eq!(a2.bar(1), 0);
        assert_eq!(a2.longest_word().len(), 3);
    }

    #[test]
    fn bar_matches_explicit_w0() {
        // root-permutation oracle: apply s1 s2 s1 letter by letter
        let a2 = datum("A2");
        let w0 = WeylWord::from_labels(&[1, 2, 1]);
        let img = a2.weyl_act_root(&w0, &[1, 0]);
        assert_eq!(img, vec![0, -1]);
    }

    #[test]
    fn b2_pairing_and_symmetrizer() {
        let b2 = datum("B2");
        assert_eq!(b2.symmetrizers(), &[2, 1]);
        assert_eq!(b2.cartan_matrix(), &[vec![2, -1], vec![-2, 2]]);
        for i in 0..2 {
            for j in 0..2 {
                let p = b2.inner(&b2.simple_root(i), &WeightVector::fundamental(2, j));
                let want = if i == j { b2.d(i) } else { 0 };
                assert_eq!(p, Rational64::from_integer(want));
            }
        }
    }

    #[test]
    fn symmetrized_cartan_is_symmetric_for_all_types() {
        for s in [
            "A1", "A4", "B3", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2",
        ] {
            let d = datum(s);
            let n = d.rank();
            for i in 0..n {
                assert_eq!(d.cartan(i, i), 2);
                for j in 0..n {
                    assert_eq!(d.d(i) * d.cartan(i, j), d.d(j) * d.cartan(j, i), "{s}");
                    if i != j {
                        assert!((-3..=0).contains(&d.cartan(i, j)));
                    }
                }
                assert_eq!(d.bar(d.bar(i)), i);
            }
        }
    }

    #[test]
    fn positive_root_counts() {
        let expected = [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ];
        for (s, count) in expected {
            let d = datum(s);
            assert_eq!(d.positive_roots().len(), count, "{s}");
            assert_eq!(d.longest_word().len(), count, "{s}");
        }
    }

    #[test]
    fn dual_coxeter_and_lacing() {
        assert_eq!(datum("A2").dual_coxeter, 3);
        assert_eq!(datum("B2").lacing, 2);
        assert_eq!(datum("G2").dual_coxeter, 4);
        assert_eq!(datum("G2").lacing, 3);
    }

    #[test]
    fn unsupported_types() {
        assert!("D3".parse::<TypeLabel>().is_err());
        assert!("E9".parse::<TypeLabel>().is_err());
        assert!("X2".parse::<TypeLabel>().is_err());
        assert!("A0".parse::<TypeLabel>().is_err());
    }

    #[test]
    fn reflections() {
        let a1 = datum("A1");
        let s1 = WeylWord::from_labels(&[1]);
        assert_eq!(
            a1.weyl_act_weight(&s1, &WeightVector(vec![1])),
            WeightVector(vec![-1])
        );

        let a2 = datum("A2");
        let alpha1 = a2.simple_root(0);
        assert_eq!(a2.weyl_act_weight(&s1, &alpha1), alpha1.scale(-1));
        let theta = a2.simple_root(0).add(&a2.simple_root(1));
        let s2s1 = WeylWord::from_labels(&[2, 1]);
        // s1(α1+α2) = α2, s2(α2) = −α2
        assert_eq!(
            a2.weyl_act_weight(&s2s1, &theta),
            a2.simple_root(1).scale(-1)
        );
        // brute-force matrix check: s2 s1 (−α1) = α1 + α2
        assert_eq!(a2.weyl_act_weight(&s2s1, &alpha1.scale(-1)), theta);
    }

    #[test]
    fn word_reduction() {
        let a1 = datum("A1");
        assert!(a1.reduce_word(&WeylWord::from_labels(&[1, 1])).is_empty());

        let a2 = datum("A2");
        let x = WeylWord::from_labels(&[1, 2, 1]);
        let y = WeylWord::from_labels(&[2, 1, 2]);
        assert!(a2.same_element(&x, &y));
        assert_eq!(a2.reduce_word(&x), x);

        let long = WeylWord::from_labels(&[1, 2, 1, 2]);
        let r = a2.reduce_word(&long);
        assert_eq!(r.len(), 2);
        assert!(a2.same_element(&r, &long));
        // exhaustive oracle over W(A2): exactly one element agrees, of length 2
        let hits: Vec<_> = a2
            .weyl_elements()
            .into_iter()
            .filter(|w| a2.same_element(w, &long))
            .collect();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].len(), 2);
    }

    #[test]
    fn group_orders() {
        for (s, order) in [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("G2", 12)] {
            assert_eq!(datum(s).weyl_elements().len(), order);
        }
    }

    #[test]
    fn cone_examples() {
        let a1 = datum("A1");
        let e = WeylWord::identity();
        let s1 = WeylWord::from_labels(&[1]);
        let c = cone_coords(&a1, &a1.simple_root(0).scale(-1), &e).unwrap();
        assert_eq!((c.coords, c.height), (vec![1], 1));
        let c = cone_coords(&a1, &a1.simple_root(0), &s1).unwrap();
        assert_eq!((c.coords, c.height), (vec![1], 1));
        assert!(cone_coords(&a1, &a1.simple_root(0), &e).is_none());
        // ω1 is not in the root lattice
        assert!(cone_coords(&a1, &WeightVector(vec![1]), &e).is_none());

        let a2 = datum("A2");
        let s2 = WeylWord::from_labels(&[2]);
        let c = cone_coords(&a2, &a2.simple_root(1), &s2).unwrap();
        assert_eq!((c.coords, c.height), (vec![0, 1], 1));
        let s1s2s1 = WeylWord::from_labels(&[1, 2, 1]);
        let theta = a2.simple_root(0).add(&a2.simple_root(1));
        assert_eq!(cone_coords(&a2, &theta, &s1s2s1).unwrap().height, 2);
    }
}
