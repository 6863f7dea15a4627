//! Text expressions for elements of U(sv).
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff | [coeff '*'] factor ('*' factor)*
//! coeff  := int ['/' int]
//! factor := ('L'|'M'|'Y') int ['^' int]   |   'w'  (vector expressions only)
//! ```
//!
//! `Y<n>` is `Y_{n+1/2}`. The result is normalized.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::ParseError;
use crate::lie::{Family, Generator};
use crate::module::{act, ModuleSpec, ModuleVector};
use crate::pbw::{Normalizer, PbwOrder, UeaElement};
use crate::rational::Rational;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    allow_w: bool,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(text.parse().expect("digits"))
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let neg = if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        let n = self.digits()?;
        let n: i64 = n.try_into().map_err(|_| ParseError::new(start, "index out of range"))?;
        Ok(if neg { -n } else { n })
    }

    fn coeff(&mut self) -> Result<Rational, ParseError> {
        let p = self.digits()?;
        self.skip_ws();
        if self.src.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let q = self.digits()?;
            if !q.is_positive() {
                return Err(ParseError::new(at, "zero denominator"));
            }
            return Ok(Rational::new(p, q));
        }
        Ok(Rational::from_integer(p))
    }

    /// `Ok(None)` for the cyclic vector `w`.
    fn factor(&mut self) -> Result<Option<(Generator, u32)>, ParseError> {
        let family = match self.peek() {
            Some(b'L') => Family::L,
            Some(b'M') => Family::M,
            Some(b'Y') => Family::Y,
            Some(b'w') if self.allow_w => {
                self.pos += 1;
                return Ok(None);
            }
            Some(c) => return Err(self.err(format!("unknown token `{}`", c as char))),
            None => return Err(self.err("unexpected end of input")),
        };
        self.pos += 1;
        let index = self.signed_int()?;
        let mut exp = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            exp = self.digits()?.try_into().map_err(|_| ParseError::new(at, "exponent out of range"))?;
        }
        Ok(Some((Generator::new(family, index), exp)))
    }

    /// One term as (coefficient, generator word, saw `w`).
    fn term(&mut self) -> Result<(Rational, Vec<Generator>, bool), ParseError> {
        let mut coeff = Rational::one();
        let mut word = Vec::new();
        let mut saw_w = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.coeff()?;
            if self.peek() != Some(b'*') {
                return Ok((coeff, word, saw_w));
            }
            self.pos += 1;
        }
        loop {
            if saw_w {
                return Err(self.err("`w` must be the last factor"));
            }
            match self.factor()? {
                Some((g, e)) => word.extend(std::iter::repeat_n(g, e as usize)),
                None => saw_w = true,
            }
            if self.peek() != Some(b'*') {
                return Ok((coeff, word, saw_w));
            }
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Vec<(Rational, Vec<Generator>, bool)>, ParseError> {
        if self.peek().is_none() {
            return Err(self.err("empty expression"));
        }
        let mut terms = Vec::new();
        let mut sign = Rational::one();
        match self.peek() {
            Some(b'-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (c, word, w) = self.term()?;
            terms.push((c * &sign, word, w));
            match self.peek() {
                None => return Ok(terms),
                Some(b'+') => sign = Rational::one(),
                Some(b'-') => sign = -Rational::one(),
                Some(c) => return Err(self.err(format!("unexpected `{}`", c as char))),
            }
            self.pos += 1;
        }
    }
}

fn normalized_source(text: &str) -> String {
    text.replace('\u{2212}', "-")
}

fn parse_terms(text: &str, allow_w: bool) -> Result<Vec<(Rational, Vec<Generator>, bool)>, ParseError> {
    let src = normalized_source(text);
    let mut p = Parser { src: src.as_bytes(), pos: 0, allow_w };
    p.expr()
}

/// Parses and normalizes an element of U(sv).
pub fn parse_expression(text: &str) -> Result<UeaElement, ParseError> {
    let mut nf = Normalizer::new(PbwOrder::Block);
    for (c, word, _) in parse_terms(text, false)? {
        nf.push(word, c);
    }
    Ok(nf.finish())
}

/// Parses `u` or `u*w` and returns `u·w` in `spec`.
pub fn parse_vector_expression(text: &str, spec: &ModuleSpec) -> Result<ModuleVector, ParseError> {
    let mut nf = Normalizer::new(PbwOrder::Block);
    for (c, word, _) in parse_terms(text, true)? {
        nf.push(word, c);
    }
    Ok(act(&nf.finish(), &ModuleVector::cyclic(), spec))
}

/// Parses a single generator token such as `Y-1`.
pub fn parse_generator(text: &str) -> Result<Generator, ParseError> {
    normalized_source(text).parse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::{normal_form, PbwWord};
    use crate::rational::{frac, int};

    #[test]
    fn examples() {
        let u = parse_expression("L1*L-1").unwrap();
        assert_eq!(u, normal_form(&[Generator::l(1), Generator::l(-1)], &int(1)));
        assert_eq!(u.to_string(), "L-1*L1 - 2*L0");
        assert_eq!(parse_expression("M0^2").unwrap(), UeaElement::power(Generator::m(0), 2));
        assert_eq!(parse_expression("3/2*Y-1").unwrap(), UeaElement::generator(Generator::y(-1)).scale(&frac(3, 2)));
    }

    #[test]
    fn signs_scalars_and_unicode_minus() {
        let u = parse_expression("−L−1 + 2 - 1/3*M-2*M1").unwrap();
        let mut e = UeaElement::zero();
        e.add_term(PbwWord::parse("L-1").unwrap(), int(-1));
        e.add_term(PbwWord::unit(), int(2));
        e.add_term(PbwWord::parse("M-2 M1").unwrap(), frac(-1, 3));
        assert_eq!(u, e);
        assert!(parse_expression("L1 - L1").unwrap().is_zero());
        assert!(parse_expression("0").unwrap().is_zero());
    }

    #[test]
    fn errors() {
        assert_eq!(parse_expression("").unwrap_err().msg, "empty expression");
        let e = parse_expression("L1*Q2").unwrap_err();
        assert_eq!(e.pos, 3);
        assert!(parse_expression("L1 +").is_err());
        assert!(parse_expression("1/0*L1").is_err());
        assert!(parse_expression("L").is_err());
        assert!(parse_expression("L1*w").is_err());
    }

    #[test]
    fn vectors() {
        let spec = ModuleSpec::universal(crate::module::WhittakerHom::zero());
        let v = parse_vector_expression("2*M-1*L-2*w + w", &spec).unwrap();
        assert_eq!(parse_vector_expression(&v.to_string(), &spec).unwrap(), v);
        assert!(parse_vector_expression("w*L1", &spec).is_err());
    }
}
