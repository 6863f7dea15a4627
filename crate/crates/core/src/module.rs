//! Whittaker modules `W_ψ`, `L_{ψ,ξ}` and the Verma module `V(ξ,ζ)`.
//!
//! A basis vector `M_0^k M_{-μ} Y_{-1/2-ν̃} L_{-λ̃} w` is a [`BasisIndex`].
//! Generators act recursively: a raising generator is commuted rightward one
//! factor at a time (`g x u w = x (g u w) + [g, x] u w`) until it reaches `w`,
//! where it becomes `ψ(g)`. Lowering and Cartan generators are multiplied in
//! on the left and the resulting `U(b-)` word is normalized.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Result, SvError};
use crate::lie::{bracket_gen, Family, Generator, HalfInteger, LieElement};
use crate::partition::{Partition, Pseudopartition};
use crate::pbw::{normal_form, PbwWord, UeaElement};
use crate::rational::{self, frac, int, Rational};

/// A Lie homomorphism `ψ: sv+ -> Q`, fixed by its values on `L_1`, `L_2`,
/// `M_1` and `Y_{1/2}`. Every other basis element of sv+ maps to zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhittakerHom {
    #[serde(with = "rational::serde_pq")]
    pub eta1: Rational,
    #[serde(with = "rational::serde_pq")]
    pub eta2: Rational,
    #[serde(with = "rational::serde_pq")]
    pub m1: Rational,
    #[serde(with = "rational::serde_pq")]
    pub eta3: Rational,
}

impl Default for WhittakerHom {
    fn default() -> Self {
        Self::zero()
    }
}

impl WhittakerHom {
    pub fn new(eta1: Rational, eta2: Rational, m1: Rational, eta3: Rational) -> Self {
        Self { eta1, eta2, m1, eta3 }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero())
    }

    /// `ψ(M_1) != 0`.
    pub fn is_nonsingular(&self) -> bool {
        !self.m1.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.eta1.is_zero() && self.eta2.is_zero() && self.m1.is_zero() && self.eta3.is_zero()
    }

    /// `ψ(g)` for `g` in sv+; zero for everything else.
    pub fn value(&self, g: Generator) -> Rational {
        match (g.family, g.index) {
            (Family::L, 1) => self.eta1.clone(),
            (Family::L, 2) => self.eta2.clone(),
            (Family::M, 1) => self.m1.clone(),
            (Family::Y, 0) => self.eta3.clone(),
            _ => Rational::zero(),
        }
    }

    /// Copy with the value on one of `L_1`, `L_2`, `M_1`, `Y_{1/2}` replaced.
    pub fn with_value(&self, g: Generator, v: Rational) -> Option<Self> {
        let mut out = self.clone();
        match (g.family, g.index) {
            (Family::L, 1) => out.eta1 = v,
            (Family::L, 2) => out.eta2 = v,
            (Family::M, 1) => out.m1 = v,
            (Family::Y, 0) => out.eta3 = v,
            _ => return None,
        }
        Some(out)
    }
}

/// Which module the action takes place in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ModuleSpec {
    /// `W_ψ`
    Universal { psi: WhittakerHom },
    /// `L_{ψ,ξ} = W_ψ / (M_0 - ξ) W_ψ`
    Quotient {
        psi: WhittakerHom,
        #[serde(with = "rational::serde_pq")]
        xi: Rational,
    },
    /// `V(ξ,ζ)`, defined only for `ψ ≡ 0`, so no `ψ` is stored.
    Verma {
        #[serde(with = "rational::serde_pq")]
        xi: Rational,
        #[serde(with = "rational::serde_pq")]
        zeta: Rational,
    },
}

impl fmt::Display for WhittakerHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eta1={}, eta2={}, m1={}, eta3={}", self.eta1, self.eta2, self.m1, self.eta3)
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Universal { psi } => write!(f, "W_psi({psi})"),
            Self::Quotient { psi, xi } => write!(f, "L_psi,xi({psi}; xi={xi})"),
            Self::Verma { xi, zeta } => write!(f, "V(xi={xi}, zeta={zeta})"),
        }
    }
}

impl ModuleSpec {
    pub fn universal(psi: WhittakerHom) -> Self {
        Self::Universal { psi }
    }

    pub fn quotient(psi: WhittakerHom, xi: Rational) -> Self {
        Self::Quotient { psi, xi }
    }

    pub fn verma(xi: Rational, zeta: Rational) -> Self {
        Self::Verma { xi, zeta }
    }

    pub fn psi(&self) -> WhittakerHom {
        match self {
            Self::Universal { psi } | Self::Quotient { psi, .. } => psi.clone(),
            Self::Verma { .. } => WhittakerHom::zero(),
        }
    }

    pub fn psi_value(&self, g: Generator) -> Rational {
        match self {
            Self::Universal { psi } | Self::Quotient { psi, .. } => psi.value(g),
            Self::Verma { .. } => Rational::zero(),
        }
    }

    /// Whether `b` is a basis vector of this module.
    pub fn admits(&self, b: &BasisIndex) -> bool {
        match self {
            Self::Universal { .. } => true,
            Self::Quotient { .. } => b.k == 0,
            Self::Verma { .. } => b.k == 0 && b.lambda.is_partition(),
        }
    }

    /// Turns `c · word · w` (a `U(b-)` word) into a basis coordinate.
    fn reduce(&self, word: &PbwWord, c: Rational) -> (BasisIndex, Rational) {
        let mut b = BasisIndex::from_lowering_word(word).expect("word lies in U(b-)");
        let mut c = c;
        match self {
            Self::Universal { .. } => {}
            Self::Quotient { xi, .. } => {
                c *= xi.clone().pow(b.k);
                b.k = 0;
            }
            Self::Verma { xi, zeta } => {
                c *= xi.clone().pow(b.k);
                b.k = 0;
                c *= zeta.clone().pow(b.lambda.multiplicity(0));
                b.lambda.set_multiplicity(0, 0);
            }
        }
        (b, c)
    }
}

/// `M_0^k M_{-μ} Y_{-1/2-ν̃} L_{-λ̃} w`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BasisIndex {
    pub k: u32,
    pub mu: Partition,
    pub nu: Pseudopartition,
    pub lambda: Pseudopartition,
}

impl BasisIndex {
    /// The cyclic vector `w` itself.
    pub fn cyclic() -> Self {
        Self::default()
    }

    pub fn new(k: u32, mu: Partition, nu: Pseudopartition, lambda: Pseudopartition) -> Self {
        Self { k, mu, nu, lambda }
    }

    /// `|μ| + |1/2+ν̃| + |λ̃|`
    pub fn degree(&self) -> HalfInteger {
        HalfInteger::from_int(self.mu.size() as i64)
            + self.nu.shifted_size()
            + HalfInteger::from_int(self.lambda.size() as i64)
    }

    /// `λ(0)`
    pub fn l0(&self) -> u32 {
        self.lambda.multiplicity(0)
    }

    /// `#(μ, ν̃, λ̃)`
    pub fn count(&self) -> u64 {
        self.mu.count() + self.nu.count() + self.lambda.count()
    }

    /// Block-order word `M_{-μ} M_0^k Y_{-1/2-ν̃} L_{-λ̃}` with repetition.
    pub fn word(&self) -> Vec<Generator> {
        let mut w = Vec::new();
        for (part, e) in self.mu.exponents().rev() {
            w.extend(std::iter::repeat_n(Generator::m(-(part as i64)), e as usize));
        }
        w.extend(std::iter::repeat_n(Generator::m(0), self.k as usize));
        for (part, e) in self.nu.exponents().rev() {
            w.extend(std::iter::repeat_n(Generator::y(-(part as i64) - 1), e as usize));
        }
        for (part, e) in self.lambda.exponents().rev() {
            w.extend(std::iter::repeat_n(Generator::l(-(part as i64)), e as usize));
        }
        w
    }

    pub fn pbw_word(&self) -> PbwWord {
        let mut factors = Vec::new();
        let w = self.word();
        for g in w {
            factors.push((g, 1));
        }
        PbwWord::from_factors(factors)
    }

    /// Inverse of [`BasisIndex::pbw_word`]; `None` if a factor is raising.
    pub fn from_lowering_word(word: &PbwWord) -> Option<Self> {
        let mut b = Self::cyclic();
        for &(g, e) in word.factors() {
            match g.family {
                Family::M if g.index == 0 => b.k += e,
                Family::M if g.index < 0 => b.mu.push((-g.index) as u64, e),
                Family::Y if g.index < 0 => b.nu.push((-g.index - 1) as u64, e),
                Family::L if g.index <= 0 => b.lambda.push((-g.index) as u64, e),
                _ => return None,
            }
        }
        Some(b)
    }

    fn with_extra_k(&self, k: u32) -> Self {
        let mut b = self.clone();
        b.k += k;
        b
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.pbw_word();
        if word.is_unit() {
            return write!(f, "w");
        }
        for (g, e) in word.factors() {
            if *e == 1 {
                write!(f, "{g}*")?;
            } else {
                write!(f, "{g}^{e}*")?;
            }
        }
        write!(f, "w")
    }
}

#[derive(Serialize, Deserialize)]
struct BasisIndexJson {
    k: u32,
    mu: Vec<u64>,
    nu: Vec<u64>,
    lambda: Vec<u64>,
}

impl Serialize for BasisIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BasisIndexJson { k: self.k, mu: self.mu.parts(), nu: self.nu.parts(), lambda: self.lambda.parts() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BasisIndex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = BasisIndexJson::deserialize(d)?;
        let mu = Partition::from_parts(j.mu).ok_or_else(|| serde::de::Error::custom("mu parts must be positive"))?;
        Ok(Self { k: j.k, mu, nu: Pseudopartition::from_parts(j.nu), lambda: Pseudopartition::from_parts(j.lambda) })
    }
}

/// `maxdeg` value: a half-integer, or `-∞` for the zero vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DegreeBound {
    NegInfinity,
    Finite(HalfInteger),
}

impl fmt::Display for DegreeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NegInfinity => write!(f, "-inf"),
            Self::Finite(h) => write!(f, "{h}"),
        }
    }
}

/// Finite rational combination of basis vectors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModuleVector {
    terms: BTreeMap<BasisIndex, Rational>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn cyclic() -> Self {
        Self::basis(BasisIndex::cyclic())
    }

    pub fn basis(b: BasisIndex) -> Self {
        Self::term(b, int(1))
    }

    pub fn term(b: BasisIndex, c: Rational) -> Self {
        let mut v = Self::zero();
        v.add_term(b, c);
        v
    }

    pub fn add_term(&mut self, b: BasisIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &ModuleVector, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (b, x) in other.iter() {
            self.add_term(b.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect() }
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

    pub fn coeff(&self, b: &BasisIndex) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn indices(&self) -> impl Iterator<Item = &BasisIndex> {
        self.terms.keys()
    }

    /// Applies `b -> M_0^k b` to every term (only meaningful in `W_ψ`).
    fn times_m0_power(&self, k: u32) -> Self {
        if k == 0 {
            return self.clone();
        }
        Self { terms: self.terms.iter().map(|(b, c)| (b.with_extra_k(k), c.clone())).collect() }
    }
}

impl Add for &ModuleVector {
    type Output = ModuleVector;
    fn add(self, o: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(o, &Rational::one());
        out
    }
}

impl Sub for &ModuleVector {
    type Output = ModuleVector;
    fn sub(self, o: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(o, &int(-1));
        out
    }
}

impl FromIterator<(BasisIndex, Rational)> for ModuleVector {
    fn from_iter<I: IntoIterator<Item = (BasisIndex, Rational)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (b, c) in iter {
            v.add_term(b, c);
        }
        v
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{}*{b}", rational::to_short(&mag))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct VectorTerm {
    index: BasisIndex,
    #[serde(with = "rational::serde_pq")]
    coeff: Rational,
}

impl Serialize for ModuleVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<VectorTerm> =
            self.iter().map(|(b, c)| VectorTerm { index: b.clone(), coeff: c.clone() }).collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ModuleVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<VectorTerm>::deserialize(d)?;
        Ok(terms.into_iter().map(|t| (t.index, t.coeff)).collect())
    }
}

/// Checks that every term of `v` is a basis vector of `spec`.
pub fn validate(v: &ModuleVector, spec: &ModuleSpec) -> Result<()> {
    match v.indices().find(|b| !spec.admits(b)) {
        None => Ok(()),
        Some(b) => Err(SvError::InvalidVector(format!("{b} is not a basis vector of this module"))),
    }
}

/// `c · x · word · w` for a non-raising `x` and a `U(b-)` word.
fn lower_on_word(x: Generator, word: &[Generator], c: &Rational, spec: &ModuleSpec, out: &mut ModuleVector) {
    let mut full = Vec::with_capacity(word.len() + 1);
    full.push(x);
    full.extend_from_slice(word);
    for (w, a) in normal_form(&full, c).iter() {
        let (b, s) = spec.reduce(w, a.clone());
        out.add_term(b, s);
    }
}

/// `g · word · w`, where `word` is a block-ordered `U(b-)` word.
fn act_on_word(g: Generator, word: &[Generator], spec: &ModuleSpec) -> ModuleVector {
    let mut out = ModuleVector::zero();
    if !g.is_raising() {
        lower_on_word(g, word, &int(1), spec, &mut out);
        return out;
    }
    let Some((&x, rest)) = word.split_first() else {
        out.add_term(BasisIndex::cyclic(), spec.psi_value(g));
        return out;
    };
    // g x u w = x (g u w) + [g, x] u w
    let inner = act_on_word(g, rest, spec);
    for (b, c) in inner.iter() {
        lower_on_word(x, &b.word(), c, spec, &mut out);
    }
    for (h, c) in bracket_gen(g, x).iter() {
        out.add_scaled(&act_on_word(*h, rest, spec), c);
    }
    out
}

/// The action of a single generator.
pub fn act_gen(g: Generator, v: &ModuleVector, spec: &ModuleSpec) -> ModuleVector {
    let mut out = ModuleVector::zero();
    for (b, c) in v.iter() {
        let image = if g.is_raising() && b.k > 0 {
            // M_0 is central: act on the M_0-free part, then restore M_0^k.
            let stripped = BasisIndex { k: 0, ..b.clone() };
            act_on_word(g, &stripped.word(), spec).times_m0_power(b.k)
        } else {
            act_on_word(g, &b.word(), spec)
        };
        out.add_scaled(&image, c);
    }
    out
}

pub fn act_lie(x: &LieElement, v: &ModuleVector, spec: &ModuleSpec) -> ModuleVector {
    let mut out = ModuleVector::zero();
    for (g, c) in x.iter() {
        out.add_scaled(&act_gen(*g, v, spec), c);
    }
    out
}

/// `u · v`, applying each word's factors right to left.
pub fn act(u: &UeaElement, v: &ModuleVector, spec: &ModuleSpec) -> ModuleVector {
    let mut out = ModuleVector::zero();
    for (word, c) in u.iter() {
        let mut cur = v.clone();
        for g in word.expand().iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = act_gen(*g, &cur, spec);
        }
        out.add_scaled(&cur, c);
    }
    out
}

/// `g · v = g v - ψ(g) v` for `g` in sv+.
pub fn dot_act(g: Generator, v: &ModuleVector, spec: &ModuleSpec) -> Result<ModuleVector> {
    if !g.is_raising() {
        return Err(SvError::NotPositive(g));
    }
    let mut out = act_gen(g, v, spec);
    out.add_scaled(v, &-spec.psi_value(g));
    Ok(out)
}

pub fn maxdeg(v: &ModuleVector) -> DegreeBound {
    v.indices().map(|b| DegreeBound::Finite(b.degree())).max().unwrap_or(DegreeBound::NegInfinity)
}

/// `max_{L_0}`; `None` for the zero vector.
pub fn max_l0(v: &ModuleVector) -> Option<u32> {
    v.indices().map(BasisIndex::l0).max()
}

/// The Whittaker-vector generator `z` for a singular `ψ`.
///
/// With `for_quotient = Some(ξ)` every `M_0` is replaced by `ξ`, giving the
/// element acting on `L_{ψ,ξ}`.
pub fn z_element(psi: &WhittakerHom, for_quotient: Option<&Rational>) -> Result<UeaElement> {
    if psi.is_nonsingular() {
        return Err(SvError::NonsingularPsi);
    }
    let (e1, e2, e3) = (&psi.eta1, &psi.eta2, &psi.eta3);
    // an M_0 factor, or ξ in the quotient
    let m0 = |power: u32| -> UeaElement {
        match for_quotient {
            Some(xi) => UeaElement::scalar(xi.clone().pow(power)),
            None => UeaElement::power(Generator::m(0), power),
        }
    };
    let g = |gens: &[Generator]| normal_form(gens, &int(1));
    let times = |a: &UeaElement, b: &UeaElement| crate::pbw::multiply(a, b);
    let l0 = g(&[Generator::l(0)]);
    let mut z = UeaElement::zero();
    if e1.is_zero() && e2.is_zero() && e3.is_zero() {
        z = l0;
    } else if !e2.is_zero() || !e3.is_zero() {
        z.add_scaled(&times(&l0, &m0(2)), &int(1));
        z.add_scaled(&times(&g(&[Generator::m(-2)]), &m0(1)), &-e2.clone());
        z.add_scaled(&times(&g(&[Generator::m(-1)]), &m0(1)), &-e1.clone());
        z.add_scaled(&g(&[Generator::m(-1), Generator::m(-1)]), e2);
        z.add_scaled(&times(&g(&[Generator::y(-1)]), &m0(1)), &-(e3 * frac(1, 2)));
        z.add_scaled(&g(&[Generator::m(-1)]), &(e3 * e3 * frac(1, 2)));
    } else {
        z.add_scaled(&times(&l0, &m0(1)), &int(1));
        z.add_scaled(&g(&[Generator::m(-1)]), &-e1.clone());
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn psi_m1() -> WhittakerHom {
        WhittakerHom::new(int(0), int(0), int(1), int(0))
    }

    fn vec_of(gens: &[Generator], spec: &ModuleSpec) -> ModuleVector {
        act(&normal_form(gens, &int(1)), &ModuleVector::cyclic(), spec)
    }

    fn idx(k: u32, mu: &[u64], nu: &[u64], lambda: &[u64]) -> BasisIndex {
        BasisIndex::new(
            k,
            Partition::from_parts(mu.iter().copied()).unwrap(),
            Pseudopartition::from_parts(nu.iter().copied()),
            Pseudopartition::from_parts(lambda.iter().copied()),
        )
    }

    #[test]
    fn m1_on_l_minus_one() {
        let spec = ModuleSpec::universal(psi_m1());
        let v = ModuleVector::basis(idx(0, &[], &[], &[1]));
        let out = act_gen(Generator::m(1), &v, &spec);
        let mut expected = v.clone();
        expected.add_term(idx(1, &[], &[], &[]), int(-1));
        assert_eq!(out, expected);
        let dot = dot_act(Generator::m(1), &v, &spec).unwrap();
        assert_eq!(dot, ModuleVector::term(idx(1, &[], &[], &[]), int(-1)));
        assert!(dot_act(Generator::m(1), &dot, &spec).unwrap().is_zero());
    }

    #[test]
    fn y_half_on_y_minus_half() {
        let spec = ModuleSpec::universal(psi_m1());
        let v = ModuleVector::basis(idx(0, &[], &[0], &[]));
        assert_eq!(act_gen(Generator::y(0), &v, &spec), ModuleVector::term(idx(1, &[], &[], &[]), int(-1)));
    }

    #[test]
    fn cartan_on_cyclic() {
        let w = ModuleVector::cyclic();
        let verma = ModuleSpec::verma(int(3), frac(5, 2));
        assert_eq!(act_gen(Generator::l(0), &w, &verma), w.scale(&frac(5, 2)));
        assert_eq!(act_gen(Generator::m(0), &w, &verma), w.scale(&int(3)));
        let q = ModuleSpec::quotient(psi_m1(), int(-2));
        assert_eq!(act_gen(Generator::m(0), &w, &q), w.scale(&int(-2)));
        let u = ModuleSpec::universal(psi_m1());
        assert_eq!(act_gen(Generator::m(0), &w, &u), ModuleVector::basis(idx(1, &[], &[], &[])));
        assert_eq!(act_gen(Generator::l(0), &w, &u), ModuleVector::basis(idx(0, &[], &[], &[0])));
    }

    #[test]
    fn free_lowering_and_unit() {
        let spec = ModuleSpec::universal(psi_m1());
        let v = act(&UeaElement::generator(Generator::l(-2)), &ModuleVector::cyclic(), &spec);
        assert_eq!(v, ModuleVector::basis(idx(0, &[], &[], &[2])));
        assert_eq!(act(&UeaElement::one(), &v, &spec), v);
    }

    #[test]
    fn word_action_matches_sequential() {
        let spec = ModuleSpec::universal(psi_m1());
        let w = ModuleVector::cyclic();
        let u = normal_form(&[Generator::m(1), Generator::l(-1)], &int(1));
        let seq = act_gen(Generator::m(1), &act_gen(Generator::l(-1), &w, &spec), &spec);
        assert_eq!(act(&u, &w, &spec), seq);
    }

    #[test]
    fn dot_rejects_lowering_and_kills_cyclic() {
        let spec = ModuleSpec::universal(WhittakerHom::new(int(1), int(2), int(3), int(4)));
        assert!(matches!(dot_act(Generator::l(0), &ModuleVector::cyclic(), &spec), Err(SvError::NotPositive(_))));
        for g in [Generator::l(1), Generator::l(2), Generator::m(1), Generator::y(0), Generator::y(1), Generator::l(5)]
        {
            assert!(dot_act(g, &ModuleVector::cyclic(), &spec).unwrap().is_zero(), "{g}");
        }
    }

    #[test]
    fn degree_statistics() {
        let mut v = ModuleVector::basis(idx(0, &[1], &[], &[]));
        v.add_term(idx(0, &[], &[], &[1, 2]), int(1));
        assert_eq!(maxdeg(&v), DegreeBound::Finite(HalfInteger::from_int(3)));
        assert_eq!(maxdeg(&ModuleVector::zero()), DegreeBound::NegInfinity);
        assert_eq!(max_l0(&ModuleVector::zero()), None);
        let l0sq = ModuleVector::basis(idx(0, &[], &[], &[0, 0]));
        assert_eq!(maxdeg(&l0sq), DegreeBound::Finite(HalfInteger::ZERO));
        assert_eq!(max_l0(&l0sq), Some(2));
        assert_eq!(maxdeg(&ModuleVector::cyclic()), DegreeBound::Finite(HalfInteger::ZERO));
        let y = ModuleVector::basis(idx(0, &[], &[0], &[]));
        assert_eq!(maxdeg(&y), DegreeBound::Finite(HalfInteger::from_doubled(1)));
    }

    #[test]
    fn z_element_cases() {
        let z0 = z_element(&WhittakerHom::zero(), None).unwrap();
        assert_eq!(z0, UeaElement::generator(Generator::l(0)));
        let z2 = z_element(&WhittakerHom::new(int(0), int(0), int(0), int(1)), None).unwrap();
        let mut e = UeaElement::zero();
        e.add_term(PbwWord::parse("M0^2 L0").unwrap(), int(1));
        e.add_term(PbwWord::parse("M0 Y-1").unwrap(), frac(-1, 2));
        e.add_term(PbwWord::parse("M-1").unwrap(), frac(1, 2));
        assert_eq!(z2, e);
        let z3 = z_element(&WhittakerHom::new(int(2), int(0), int(0), int(0)), None).unwrap();
        let mut e = UeaElement::zero();
        e.add_term(PbwWord::parse("M0 L0").unwrap(), int(1));
        e.add_term(PbwWord::parse("M-1").unwrap(), int(-2));
        assert_eq!(z3, e);
        assert!(matches!(z_element(&psi_m1(), None), Err(SvError::NonsingularPsi)));
        let zq = z_element(&WhittakerHom::new(int(2), int(0), int(0), int(0)), Some(&int(3))).unwrap();
        let mut e = UeaElement::zero();
        e.add_term(PbwWord::parse("L0").unwrap(), int(3));
        e.add_term(PbwWord::parse("M-1").unwrap(), int(-2));
        assert_eq!(zq, e);
    }

    #[test]
    fn quotient_and_verma_reduction() {
        let q = ModuleSpec::quotient(WhittakerHom::zero(), int(2));
        // Y_{1/2} Y_{-1/2} w̄ = [Y_{1/2}, Y_{-1/2}] w̄ = -M_0 w̄ = -2 w̄
        let v = vec_of(&[Generator::y(0), Generator::y(-1)], &q);
        assert_eq!(v, ModuleVector::cyclic().scale(&int(-2)));
        let verma = ModuleSpec::verma(int(1), int(4));
        // L_1 L_{-1} w = [L_1, L_{-1}] w = -2 L_0 w = -2ζ w
        let v = vec_of(&[Generator::l(1), Generator::l(-1)], &verma);
        assert_eq!(v, ModuleVector::cyclic().scale(&int(-8)));
    }

    #[test]
    fn json_shapes() {
        let b = idx(1, &[2], &[0], &[0, 3]);
        assert_eq!(serde_json::to_string(&b).unwrap(), r#"{"k":1,"mu":[2],"nu":[0],"lambda":[0,3]}"#);
        let spec = ModuleSpec::quotient(psi_m1(), frac(1, 2));
        let j = serde_json::to_string(&spec).unwrap();
        assert_eq!(j, r#"{"type":"quotient","psi":{"eta1":"0/1","eta2":"0/1","m1":"1/1","eta3":"0/1"},"xi":"1/2"}"#);
        assert_eq!(serde_json::from_str::<ModuleSpec>(&j).unwrap(), spec);
        let v = ModuleVector::term(b, frac(-3, 4));
        let j = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<ModuleVector>(&j).unwrap(), v);
        assert!(serde_json::from_str::<BasisIndex>(r#"{"k":0,"mu":[0],"nu":[],"lambda":[]}"#).is_err());
    }
}
