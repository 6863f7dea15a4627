//! PBW words and normal-form rewriting in U(sv).
//!
//! A word is canonical when its factors are sorted by the key of a
//! [`PbwOrder`]. Normalization swaps the leftmost out-of-order adjacent pair
//! `x y -> y x + [x, y]` until every word is canonical.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::lie::{bracket_gen, Family, Generator, HalfInteger, LieElement};
use crate::rational::{self, int, Rational};

/// Total order on generators fixing which words are canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PbwOrder {
    /// `M < Y < L`, indices ascending inside each block.
    #[default]
    Block,
    /// The b- part (`M_{n<=0}`, `Y_{n+1/2<0}`, `L_{n<=0}`) in block order,
    /// followed by the sv+ part in block order. Raising factors end up on the
    /// right, which is the shape a Whittaker vector sees.
    Triangular,
}

fn family_rank(f: Family) -> u8 {
    match f {
        Family::M => 0,
        Family::Y => 1,
        Family::L => 2,
    }
}

impl PbwOrder {
    fn key(self, g: Generator) -> (bool, u8, i64) {
        let raising = match self {
            PbwOrder::Block => false,
            PbwOrder::Triangular => g.is_raising(),
        };
        (raising, family_rank(g.family), g.index)
    }
}

/// A canonical monomial: factors with positive exponents in written order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PbwWord {
    factors: Vec<(Generator, u32)>,
}

impl PbwWord {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Groups a sorted generator sequence into `(generator, exponent)` runs.
    fn from_sorted(gens: &[Generator]) -> Self {
        let mut factors: Vec<(Generator, u32)> = Vec::new();
        for &g in gens {
            match factors.last_mut() {
                Some((h, e)) if *h == g => *e += 1,
                _ => factors.push((g, 1)),
            }
        }
        Self { factors }
    }

    /// Builds the block-order canonical word from factor/exponent pairs.
    pub fn from_factors(factors: impl IntoIterator<Item = (Generator, u32)>) -> Self {
        let mut gens = Vec::new();
        for (g, e) in factors {
            gens.extend(std::iter::repeat_n(g, e as usize));
        }
        gens.sort_by_key(|g| PbwOrder::Block.key(*g));
        Self::from_sorted(&gens)
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.factors
    }

    /// Factors expanded with repetition, in written order.
    pub fn expand(&self) -> Vec<Generator> {
        self.factors.iter().flat_map(|(g, e)| std::iter::repeat_n(*g, *e as usize)).collect()
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        self.factors.iter().find(|(h, _)| *h == g).map_or(0, |(_, e)| *e)
    }

    /// Exponent map of one family.
    pub fn family_exponents(&self, family: Family) -> BTreeMap<i64, u32> {
        self.factors.iter().filter(|(g, _)| g.family == family).map(|(g, e)| (g.index, *e)).collect()
    }

    pub fn len(&self) -> usize {
        self.factors.iter().map(|(_, e)| *e as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn weight(&self) -> HalfInteger {
        self.factors.iter().map(|(g, e)| HalfInteger::from_doubled(g.weight().doubled * i64::from(*e))).sum()
    }

    /// Parses `"M-1 Y-1 L0^3"`; `"1"` or the empty string is the unit word.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(Self::unit());
        }
        let mut pairs = Vec::new();
        for tok in text.split_whitespace() {
            let (g, e) = match tok.split_once('^') {
                Some((g, e)) => {
                    (g, e.parse::<u32>().map_err(|_| ParseError::new(0, format!("bad exponent in `{tok}`")))?)
                }
                None => (tok, 1),
            };
            pairs.push((g.parse::<Generator>()?, e));
        }
        Ok(Self::from_factors(pairs))
    }
}

impl fmt::Display for PbwWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Result of [`uea_weight`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(HalfInteger),
    Inhomogeneous,
    /// The zero element lies in every weight space.
    Zero,
}

/// Finite rational combination of canonical words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UeaElement {
    terms: BTreeMap<PbwWord, Rational>,
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(int(1))
    }

    pub fn scalar(c: Rational) -> Self {
        Self::term(PbwWord::unit(), c)
    }

    pub fn term(w: PbwWord, c: Rational) -> Self {
        let mut u = Self::zero();
        u.add_term(w, c);
        u
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(PbwWord::from_factors([(g, 1)]), int(1))
    }

    pub fn from_lie(x: &LieElement) -> Self {
        let mut u = Self::zero();
        for (g, c) in x.iter() {
            u.add_term(PbwWord::from_factors([(*g, 1)]), c.clone());
        }
        u
    }

    /// Normal form of the block-order power `g^e`.
    pub fn power(g: Generator, e: u32) -> Self {
        Self::term(PbwWord::from_factors([(g, e)]), int(1))
    }

    pub fn add_term(&mut self, w: PbwWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &PbwWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PbwWord, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn add_scaled(&mut self, other: &UeaElement, c: &Rational) {
        for (w, x) in other.iter() {
            self.add_term(w.clone(), x * c);
        }
    }

    /// Re-normalizes every word under `order`.
    pub fn reorder(&self, order: PbwOrder) -> Self {
        let mut nf = Normalizer::new(order);
        for (w, c) in self.iter() {
            nf.push(w.expand(), c.clone());
        }
        nf.finish()
    }
}

impl Add for &UeaElement {
    type Output = UeaElement;
    fn add(self, o: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(o, &Rational::one());
        out
    }
}

impl Sub for &UeaElement {
    type Output = UeaElement;
    fn sub(self, o: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(o, &int(-1));
        out
    }
}

impl Neg for &UeaElement {
    type Output = UeaElement;
    fn neg(self) -> UeaElement {
        self.scale(&int(-1))
    }
}

impl fmt::Display for UeaElement {
    /// Expression syntax accepted by [`crate::expr::parse_expression`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> =
                w.factors().iter().map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") }).collect();
            if w.is_unit() {
                write!(f, "{}", rational::to_short(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", rational::to_short(&mag), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct UeaTerm {
    word: String,
    #[serde(with = "rational::serde_pq")]
    coeff: Rational,
}

impl Serialize for UeaElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<UeaTerm> = self.iter().map(|(w, c)| UeaTerm { word: w.to_string(), coeff: c.clone() }).collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UeaElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<UeaTerm>::deserialize(d)?;
        let mut u = UeaElement::zero();
        for t in terms {
            let w = PbwWord::parse(&t.word).map_err(serde::de::Error::custom)?;
            // Reading a word normalizes it, so any factor order is accepted.
            u.add_scaled(&normal_form(&w.expand(), &int(1)), &t.coeff);
        }
        Ok(u)
    }
}

fn inversions(order: PbwOrder, w: &[Generator]) -> usize {
    let keys: Vec<_> = w.iter().map(|g| order.key(*g)).collect();
    let mut n = 0;
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            if keys[i] > keys[j] {
                n += 1;
            }
        }
    }
    n
}

/// Worklist rewriter.
///
/// Pending words are keyed by `(length, inversions, word)` and processed
/// largest first. A swap lowers the inversion count by one and a bracket
/// lowers the length, so every pending word has received all of its
/// contributions by the time it is popped.
pub struct Normalizer {
    order: PbwOrder,
    pending: BTreeMap<(usize, usize, Vec<Generator>), Rational>,
    done: UeaElement,
}

impl Normalizer {
    pub fn new(order: PbwOrder) -> Self {
        Self { order, pending: BTreeMap::new(), done: UeaElement::zero() }
    }

    pub fn push(&mut self, word: Vec<Generator>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let inv = inversions(self.order, &word);
        self.push_keyed(word.len(), inv, word, c);
    }

    fn push_keyed(&mut self, len: usize, inv: usize, word: Vec<Generator>, c: Rational) {
        let key = (len, inv, word);
        match self.pending.get_mut(&key) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.pending.remove(&key);
                }
            }
            None => {
                self.pending.insert(key, c);
            }
        }
    }

    pub fn finish(mut self) -> UeaElement {
        while let Some(((len, inv, word), c)) = self.pending.pop_last() {
            let pos = word.windows(2).position(|p| self.order.key(p[0]) > self.order.key(p[1]));
            let Some(i) = pos else {
                self.done.add_term(PbwWord::from_sorted(&word), c);
                continue;
            };
            let (x, y) = (word[i], word[i + 1]);
            let mut swapped = word.clone();
            swapped.swap(i, i + 1);
            self.push_keyed(len, inv - 1, swapped, c.clone());
            for (g, b) in bracket_gen(x, y).iter() {
                let mut shorter = Vec::with_capacity(len - 1);
                shorter.extend_from_slice(&word[..i]);
                shorter.push(*g);
                shorter.extend_from_slice(&word[i + 2..]);
                self.push(shorter, &c * b);
            }
        }
        self.done
    }
}

/// `coeff * word` rewritten into block-order canonical form.
pub fn normal_form(word: &[Generator], coeff: &Rational) -> UeaElement {
    normal_form_in(PbwOrder::Block, word, coeff)
}

pub fn normal_form_in(order: PbwOrder, word: &[Generator], coeff: &Rational) -> UeaElement {
    let mut nf = Normalizer::new(order);
    nf.push(word.to_vec(), coeff.clone());
    nf.finish()
}

pub fn multiply(a: &UeaElement, b: &UeaElement) -> UeaElement {
    multiply_in(PbwOrder::Block, a, b)
}

pub fn multiply_in(order: PbwOrder, a: &UeaElement, b: &UeaElement) -> UeaElement {
    let mut nf = Normalizer::new(order);
    for (wa, ca) in a.iter() {
        let ea = wa.expand();
        for (wb, cb) in b.iter() {
            let mut word = ea.clone();
            word.extend(wb.expand());
            nf.push(word, ca * cb);
        }
    }
    nf.finish()
}

/// `[a, b] = ab - ba` in U(sv).
pub fn commutator(a: &UeaElement, b: &UeaElement) -> UeaElement {
    &multiply(a, b) - &multiply(b, a)
}

pub fn uea_weight(u: &UeaElement) -> Homogeneity {
    let mut weights = u.iter().map(|(w, _)| w.weight());
    match weights.next() {
        None => Homogeneity::Zero,
        Some(first) if weights.all(|x| x == first) => Homogeneity::Homogeneous(first),
        Some(_) => Homogeneity::Inhomogeneous,
    }
}

/// `(ad g)^m (u)`.
pub fn ad_power(g: Generator, u: &UeaElement, m: u32) -> UeaElement {
    let g = UeaElement::generator(g);
    let mut cur = u.clone();
    for _ in 0..m {
        if cur.is_zero() {
            break;
        }
        cur = commutator(&g, &cur);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn word(s: &str) -> PbwWord {
        PbwWord::parse(s).unwrap()
    }

    fn gens(s: &str) -> Vec<Generator> {
        s.split_whitespace().map(|t| t.parse().unwrap()).collect()
    }

    #[test]
    fn single_swap() {
        let u = normal_form(&gens("L1 L-1"), &int(1));
        let mut expected = UeaElement::term(word("L-1 L1"), int(1));
        expected.add_term(word("L0"), int(-2));
        assert_eq!(u, expected);
    }

    #[test]
    fn m1_past_l_minus_one_squared() {
        // M_1 L_{-1}^2 = L_{-1}^2 M_1 - 2 L_{-1} M_0, compared as elements of U(sv)
        let lhs = normal_form(&gens("M1 L-1 L-1"), &int(1));
        let rhs = &normal_form(&gens("L-1 L-1 M1"), &int(1)) - &normal_form(&gens("L-1 M0"), &int(2));
        assert_eq!(lhs, rhs);
        // block order already has M_1 leftmost
        assert_eq!(lhs, UeaElement::term(word("M1 L-1^2"), int(1)));
    }

    #[test]
    fn y_correction_term() {
        let u = normal_form(&gens("M0 L-5 Y-1"), &int(1));
        let mut expected = UeaElement::term(word("M0 Y-1 L-5"), int(1));
        // [L_{-5}, Y_{-1/2}] = (-1 + 6/2) Y_{-11/2}
        expected.add_term(word("M0 Y-6"), int(2));
        assert_eq!(u, expected);
    }

    #[test]
    fn unit_and_sorted_products() {
        let x = normal_form(&gens("Y3 L2 M-1 L-4"), &frac(3, 7));
        assert_eq!(multiply(&UeaElement::one(), &x), x);
        assert_eq!(multiply(&x, &UeaElement::one()), x);
        let l = UeaElement::generator(Generator::l(-1));
        assert_eq!(multiply(&l, &l), UeaElement::power(Generator::l(-1), 2));
    }

    #[test]
    fn weights() {
        let u = UeaElement::term(word("M-1 Y-1 L-2"), int(1));
        assert_eq!(uea_weight(&u), Homogeneity::Homogeneous(HalfInteger::from_doubled(-7)));
        assert_eq!(uea_weight(&UeaElement::one()), Homogeneity::Homogeneous(HalfInteger::ZERO));
        let v = &UeaElement::generator(Generator::l(-1)) + &UeaElement::generator(Generator::m(-2));
        assert_eq!(uea_weight(&v), Homogeneity::Inhomogeneous);
        assert_eq!(uea_weight(&UeaElement::zero()), Homogeneity::Zero);
    }

    #[test]
    fn ad_nilpotency_examples() {
        let l = UeaElement::generator(Generator::l(-3));
        assert!(ad_power(Generator::m(2), &l, 2).is_zero());
        assert!(!ad_power(Generator::m(2), &l, 1).is_zero());
        let l4 = UeaElement::generator(Generator::l(-4));
        assert!(ad_power(Generator::y(0), &l4, 3).is_zero());
        assert_eq!(ad_power(Generator::y(0), &l4, 0), l4);
    }

    #[test]
    fn triangular_order_moves_raising_right() {
        let u = normal_form_in(PbwOrder::Triangular, &gens("M1 L-1"), &int(1));
        let mut expected = UeaElement::zero();
        expected.add_term(PbwWord { factors: vec![(Generator::l(-1), 1), (Generator::m(1), 1)] }, int(1));
        expected.add_term(word("M0"), int(-1));
        assert_eq!(u, expected);
    }

    #[test]
    fn word_text() {
        assert_eq!(word("L0^3 L-2 Y-1 M-1 M0^2").to_string(), "M-1 M0^2 Y-1 L-2 L0^3");
        assert_eq!(word("1").to_string(), "1");
    }
}
