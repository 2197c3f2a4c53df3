//! Text and structured-record forms of symmetric functions.
//!
//! The text grammar is a sum of signed terms, each a product of rational
//! constants, basis symbols `b[λ]` and parenthesised sums:
//! `s[3,1] + 2*s[2,2] - s[1,1,1,1]`, `1/2*p[2] + 1/2*p[1,1]`, `h[2]*(e[1] - 1)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::basis::{Basis, Expansion};
use super::partition::Partition;
use super::symfunc::SymFunc;
use crate::error::{Error, Result};

/// Writes `Σ c_k * label(k)` with the sign conventions used everywhere in
/// text output: unit coefficients are elided and `0` denotes the empty sum.
pub fn format_terms<'a, K: 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (&'a K, &'a BigRational)>,
    label: impl Fn(&K) -> String,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        if abs.is_one() {
            write!(f, "{}", label(k))?;
        } else {
            write!(f, "{}*{}", abs, label(k))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.basis.letter();
        format_terms(f, &self.terms, |k| format!("{b}{k}"))
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, self.src))
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.bump() {
            Some(c) if c == want => Ok(()),
            _ => Err(self.err(&format!("expected `{want}`"))),
        }
    }

    fn expr(&mut self) -> Result<SymFunc> {
        let mut acc = SymFunc::zero();
        let mut sign = 1;
        match self.peek() {
            Some('-') => {
                self.bump();
                sign = -1;
            }
            Some('+') => {
                self.bump();
            }
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
            match self.peek() {
                Some('+') => {
                    self.bump();
                    sign = 1;
                }
                Some('-') => {
                    self.bump();
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SymFunc> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.bump();
            let f = self.factor()?;
            acc = acc.multiply(&f);
        }
        Ok(acc)
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err("expected a number"))
    }

    fn factor(&mut self) -> Result<SymFunc> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.number()?;
                let mut value = BigRational::from_integer(num);
                if self.peek() == Some('/') {
                    self.bump();
                    let den = self.number()?;
                    if den == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    value /= BigRational::from_integer(den);
                }
                Ok(SymFunc::constant(value))
            }
            Some(c) => {
                let basis = Basis::from_letter(c).ok_or_else(|| self.err("unknown basis symbol"))?;
                self.bump();
                self.expect('[')?;
                self.skip_ws();
                let start = self.pos;
                let end = self.src[start..]
                    .find(']')
                    .map(|i| start + i)
                    .ok_or_else(|| self.err("unterminated partition"))?;
                let lambda: Partition = self.src[start..end].parse()?;
                self.pos = end + 1;
                Ok(SymFunc::basis_element(basis, lambda))
            }
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses the text grammar into an element of the internal basis.
pub fn parse_symfunc(src: &str) -> Result<SymFunc> {
    let mut p = Parser { src, pos: 0 };
    if p.peek().is_none() {
        return Err(Error::Parse("empty symmetric-function literal".into()));
    }
    let f = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}

/// One term of a structured record. Integers are decimal strings so that
/// arbitrarily large values survive JSON round trips.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub partition: Partition,
    pub numerator: String,
    pub denominator: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymRecord {
    pub basis: String,
    pub terms: Vec<TermRecord>,
}

pub(crate) fn term_records(terms: &BTreeMap<Partition, BigRational>) -> Vec<TermRecord> {
    terms
        .iter()
        .map(|(k, c)| TermRecord {
            partition: k.clone(),
            numerator: c.numer().to_string(),
            denominator: c.denom().to_string(),
        })
        .collect()
}

pub(crate) fn terms_from_records(terms: &[TermRecord]) -> Result<BTreeMap<Partition, BigRational>> {
    let mut out = BTreeMap::new();
    for t in terms {
        let num: BigInt = t
            .numerator
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator `{}`", t.numerator)))?;
        let den: BigInt = t
            .denominator
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator `{}`", t.denominator)))?;
        if den == BigInt::from(0) {
            return Err(Error::Parse("zero denominator".into()));
        }
        super::symfunc::add_into(&mut out, t.partition.clone(), BigRational::new(num, den));
    }
    Ok(out)
}

impl From<&Expansion> for SymRecord {
    fn from(e: &Expansion) -> Self {
        SymRecord { basis: e.basis.to_string(), terms: term_records(&e.terms) }
    }
}

impl TryFrom<&SymRecord> for Expansion {
    type Error = Error;
    fn try_from(r: &SymRecord) -> Result<Expansion> {
        Ok(Expansion { basis: r.basis.parse()?, terms: terms_from_records(&r.terms)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn print_parse_round_trip() {
        let text = "s[3,1] + 2*s[2,2] - s[1,1,1,1]";
        let f = parse_symfunc(text).unwrap();
        assert_eq!(f.expand(Basis::S).to_string(), text);
        let q = parse_symfunc("1/2*p[2] + 1/2*p[1,1]").unwrap();
        assert_eq!(q.expand(Basis::H).to_string(), "h[2]");
        assert_eq!(SymFunc::zero().expand(Basis::S).to_string(), "0");
        assert_eq!(parse_symfunc("-s[1]").unwrap().expand(Basis::S).to_string(), "-s[1]");
    }

    #[test]
    fn products_and_constants() {
        let f = parse_symfunc("h[2]*h[1] - h[3]").unwrap();
        assert_eq!(f.expand(Basis::S).to_string(), "s[2,1]");
        let g = parse_symfunc("3").unwrap();
        assert_eq!(g.expand(Basis::S).to_string(), "3*s[]");
        let h = parse_symfunc("(s[1] + 1)*(s[1] - 1)").unwrap();
        assert_eq!(h.expand(Basis::S).to_string(), "-s[] + s[2] + s[1,1]");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "x[1]", "s[2,3]", "s[1", "2*", "s[1] s[2]", "1/0"] {
            assert!(parse_symfunc(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn record_round_trip() {
        let e = parse_symfunc("1/3*p[2] - p[1]").unwrap().expand(Basis::P);
        let rec = SymRecord::from(&e);
        assert_eq!(rec.terms[0].numerator, "-1");
        assert_eq!(Expansion::try_from(&rec).unwrap(), e);
    }
}
