//! Generators of sv and the bracket.
//!
//! The basis is `L_n`, `M_n`, `Y_{n+1/2}` for `n` in Z. A `Y` generator is
//! keyed by the integer `n`, so `Generator::y(-1)` is `Y_{-1/2}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::rational::{self, frac, int, Rational};

/// Generator family. The derived order `L < M < Y` is the serialization order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    L,
    M,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub family: Family,
    pub index: i64,
}

impl Generator {
    pub const fn new(family: Family, index: i64) -> Self {
        Self { family, index }
    }

    pub const fn l(n: i64) -> Self {
        Self::new(Family::L, n)
    }

    pub const fn m(n: i64) -> Self {
        Self::new(Family::M, n)
    }

    /// `Y_{n+1/2}`.
    pub const fn y(n: i64) -> Self {
        Self::new(Family::Y, n)
    }

    pub fn weight(self) -> HalfInteger {
        gen_weight(self)
    }

    /// Member of sv+ (strictly positive weight).
    pub fn is_raising(self) -> bool {
        self.weight().doubled > 0
    }

    /// Member of b- = sv- + h (non-positive weight).
    pub fn is_lowering_or_cartan(self) -> bool {
        !self.is_raising()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            Family::L => 'L',
            Family::M => 'M',
            Family::Y => 'Y',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for Generator {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('L') => Family::L,
            Some('M') => Family::M,
            Some('Y') => Family::Y,
            _ => return Err(ParseError::new(0, format!("unknown generator `{s}`"))),
        };
        let index =
            chars.as_str().parse::<i64>().map_err(|_| ParseError::new(1, format!("bad generator index in `{s}`")))?;
        Ok(Self { family, index })
    }
}

impl Serialize for Generator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A half-integer stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInteger {
    pub doubled: i64,
}

impl HalfInteger {
    pub const ZERO: Self = Self { doubled: 0 };

    pub const fn from_doubled(doubled: i64) -> Self {
        Self { doubled }
    }

    pub const fn from_int(n: i64) -> Self {
        Self { doubled: 2 * n }
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    pub fn to_rational(self) -> Rational {
        frac(self.doubled, 2)
    }

    /// Parses `3`, `-7/2`, `2.5`.
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| ParseError::new(0, format!("bad half-integer `{s}`")))?;
            return match q.trim() {
                "2" => Ok(Self::from_doubled(p)),
                "1" => Ok(Self::from_int(p)),
                _ => Err(ParseError::new(0, format!("`{s}` is not a half-integer"))),
            };
        }
        if let Some(stripped) = s.strip_suffix(".5") {
            let whole: i64 = stripped.parse().map_err(|_| ParseError::new(0, format!("bad half-integer `{s}`")))?;
            let sign = if stripped.starts_with('-') { -1 } else { 1 };
            return Ok(Self::from_doubled(2 * whole + sign));
        }
        s.parse::<i64>().map(Self::from_int).map_err(|_| ParseError::new(0, format!("bad half-integer `{s}`")))
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl Add for HalfInteger {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::from_doubled(self.doubled + o.doubled)
    }
}

impl Sub for HalfInteger {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::from_doubled(self.doubled - o.doubled)
    }
}

impl Neg for HalfInteger {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_doubled(-self.doubled)
    }
}

impl std::iter::Sum for HalfInteger {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

/// `[L_0, g] = gen_weight(g) g`.
pub fn gen_weight(g: Generator) -> HalfInteger {
    match g.family {
        Family::L | Family::M => HalfInteger::from_int(g.index),
        Family::Y => HalfInteger::from_doubled(2 * g.index + 1),
    }
}

/// Finite linear combination of generators with nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LieElement {
    terms: BTreeMap<Generator, Rational>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(g, int(1))
    }

    pub fn term(g: Generator, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(g, c);
        e
    }

    pub fn add_term(&mut self, g: Generator, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&g);
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

    pub fn coeff(&self, g: Generator) -> Rational {
        self.terms.get(&g).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in serialization order (`L < M < Y`, then index ascending).
    pub fn iter(&self) -> impl Iterator<Item = (&Generator, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(g, x)| (*g, x * c)).collect() }
    }
}

impl From<Generator> for LieElement {
    fn from(g: Generator) -> Self {
        Self::generator(g)
    }
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, o: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (g, c) in o.iter() {
            out.add_term(*g, c.clone());
        }
        out
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, o: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (g, c) in o.iter() {
            out.add_term(*g, -c.clone());
        }
        out
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        self.scale(&int(-1))
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::pbw::UeaElement::from_lie(self))
    }
}

#[derive(Serialize, Deserialize)]
struct LieTerm {
    gen: Generator,
    #[serde(with = "rational::serde_pq")]
    coeff: Rational,
}

impl Serialize for LieElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<LieTerm> = self.iter().map(|(g, c)| LieTerm { gen: *g, coeff: c.clone() }).collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LieElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<LieTerm>::deserialize(d)?;
        let mut e = LieElement::zero();
        for t in terms {
            e.add_term(t.gen, t.coeff);
        }
        Ok(e)
    }
}

/// A bracket on generators, extended bilinearly by [`bracket_with`].
///
/// [`Sv`] is the algebra itself; other implementations exist only so the
/// verification harness can feed a deliberately broken table to its checks.
pub trait StructureConstants {
    fn bracket_gen(&self, a: Generator, b: Generator) -> LieElement;
}

/// The defining relations of the Schrödinger-Virasoro algebra.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sv;

fn shifted(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("generator index overflow")
}

impl StructureConstants for Sv {
    fn bracket_gen(&self, a: Generator, b: Generator) -> LieElement {
        use Family::*;
        let (m, n) = (a.index, b.index);
        match (a.family, b.family) {
            (L, L) => LieElement::term(Generator::l(shifted(m, n)), int(n - m)),
            (L, M) => LieElement::term(Generator::m(shifted(m, n)), int(n)),
            (M, L) => LieElement::term(Generator::m(shifted(m, n)), int(-m)),
            // (n + (1-m)/2) Y_{m+n+1/2}
            (L, Y) => LieElement::term(Generator::y(shifted(m, n)), frac(2 * n + 1 - m, 2)),
            (Y, L) => LieElement::term(Generator::y(shifted(m, n)), frac(-(2 * m + 1 - n), 2)),
            (Y, Y) => LieElement::term(Generator::m(shifted(shifted(m, n), 1)), int(n - m)),
            (M, M) | (M, Y) | (Y, M) => LieElement::zero(),
        }
    }
}

pub fn bracket_gen(a: Generator, b: Generator) -> LieElement {
    Sv.bracket_gen(a, b)
}

pub fn bracket_with<S: StructureConstants + ?Sized>(table: &S, a: &LieElement, b: &LieElement) -> LieElement {
    let mut out = LieElement::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            let prod = cx * cy;
            for (g, c) in table.bracket_gen(*x, *y).iter() {
                out.add_term(*g, c * &prod);
            }
        }
    }
    out
}

pub fn bracket(a: &LieElement, b: &LieElement) -> LieElement {
    bracket_with(&Sv, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_gens(bound: i64) -> Vec<Generator> {
        let mut v = Vec::new();
        for fam in [Family::L, Family::M, Family::Y] {
            for n in -bound..=bound {
                v.push(Generator::new(fam, n));
            }
        }
        v
    }

    #[test]
    fn defining_relation_examples() {
        assert_eq!(bracket_gen(Generator::l(1), Generator::l(-1)), LieElement::term(Generator::l(0), int(-2)));
        assert_eq!(bracket_gen(Generator::l(2), Generator::m(-1)), LieElement::term(Generator::m(1), int(-1)));
        assert_eq!(bracket_gen(Generator::y(0), Generator::y(-2)), LieElement::term(Generator::m(-1), int(-2)));
        assert!(bracket_gen(Generator::m(3), Generator::y(0)).is_zero());
    }

    #[test]
    fn bilinear_example() {
        let a = &LieElement::generator(Generator::l(1)) + &LieElement::generator(Generator::m(1));
        let b = LieElement::generator(Generator::l(-1));
        let mut expected = LieElement::term(Generator::l(0), int(-2));
        expected.add_term(Generator::m(0), int(-1));
        assert_eq!(bracket(&a, &b), expected);
        assert!(bracket(&a, &a).is_zero());
        assert!(bracket(&LieElement::zero(), &a).is_zero());
    }

    #[test]
    fn weights() {
        assert_eq!(gen_weight(Generator::m(-2)), HalfInteger::from_int(-2));
        assert_eq!(gen_weight(Generator::y(-1)), HalfInteger::from_doubled(-1));
        assert_eq!(gen_weight(Generator::l(0)), HalfInteger::ZERO);
    }

    #[test]
    fn grading_and_centrality() {
        for g in all_gens(8) {
            let w = gen_weight(g).to_rational();
            assert_eq!(bracket_gen(Generator::l(0), g), LieElement::term(g, w), "{g}");
            assert!(bracket_gen(Generator::m(0), g).is_zero(), "{g}");
        }
    }

    #[test]
    fn antisymmetry_and_jacobi_exhaustive() {
        let gens = all_gens(4);
        for &a in &gens {
            for &b in &gens {
                let ab = bracket_gen(a, b);
                assert!((&ab + &bracket_gen(b, a)).is_zero());
            }
        }
        for &a in &gens {
            for &b in &gens {
                for &c in &gens {
                    let (a, b, c) = (LieElement::from(a), LieElement::from(b), LieElement::from(c));
                    let j = &(&bracket(&a, &bracket(&b, &c)) + &bracket(&b, &bracket(&c, &a)))
                        + &bracket(&c, &bracket(&a, &b));
                    assert!(j.is_zero());
                }
            }
        }
    }

    #[test]
    fn text_forms() {
        assert_eq!(Generator::y(-1).to_string(), "Y-1");
        assert_eq!("M-12".parse::<Generator>().unwrap(), Generator::m(-12));
        assert!("Q1".parse::<Generator>().is_err());
        assert_eq!(HalfInteger::parse("7/2").unwrap(), HalfInteger::from_doubled(7));
        assert_eq!(HalfInteger::parse("-2.5").unwrap(), HalfInteger::from_doubled(-5));
        assert_eq!(HalfInteger::from_doubled(-7).to_string(), "-7/2");
        let mut e = LieElement::term(Generator::y(0), frac(1, 2));
        e.add_term(Generator::l(-1), int(-2));
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(json, r#"[{"gen":"L-1","coeff":"-2/1"},{"gen":"Y0","coeff":"1/2"}]"#);
        assert_eq!(serde_json::from_str::<LieElement>(&json).unwrap(), e);
    }
}
