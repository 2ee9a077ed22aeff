//! Text and JSON forms of polynomials.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! poly     := sign? term (("+" | "-") term)*
//! term     := rational? ("*"? factor)*
//! factor   := "X" index "^(" integer ")" | blade
//! blade    := "e" digits        e0 is the scalar; e21 = e2 e1 = −e12
//! rational := integer ("/" positive-integer)?
//! ```
//!
//! The canonical printer lists terms by multi-index, then blade, always ends a
//! term with its blade and omits unit magnitudes, so `parse(print(p)) == p`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::clifford::{Blade, CliffordElement, MultiIndex};
use crate::error::{Error, Result};
use crate::factorial::FamilySign;
use crate::polynomial::LatticePolynomial;
use crate::rational::{parse_rational, Rational};

pub const SCHEMA_VERSION: &str = "1";

struct Parser {
    chars: Vec<char>,
    pos: usize,
    n: usize,
}

impl Parser {
    fn location(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>, expected: &[&str]) -> Error {
        let (line, column) = self.location(pos);
        Error::Parse {
            line,
            column,
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<(usize, String)> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, self.chars[start..self.pos].iter().collect()))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            let found = self.describe_here();
            Err(self.error_at(self.pos, format!("unexpected {found}"), &[&format!("`{c}`")]))
        }
    }

    fn describe_here(&self) -> String {
        match self.chars.get(self.pos) {
            Some(c) => format!("`{c}`"),
            None => "end of input".to_string(),
        }
    }

    fn rational(&mut self) -> Result<Option<Rational>> {
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Ok(None);
        }
        let (_, num) = self.digits().expect("digit checked above");
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let Some((_, den)) = self.digits() else {
                return Err(self.error_at(at, format!("unexpected {}", self.describe_here()), &["denominator"]));
            };
            if den.chars().all(|c| c == '0') {
                return Err(self.error_at(at, "zero denominator", &["positive integer"]));
            }
            return Ok(Some(parse_rational(&format!("{num}/{den}")).expect("digits form a rational")));
        }
        Ok(Some(parse_rational(&num).expect("digits form an integer")))
    }

    fn axis(&mut self, at: usize, text: &str) -> Result<usize> {
        let a: usize = text.parse().map_err(|_| self.error_at(at, "axis index too large", &[]))?;
        if a == 0 {
            return Err(self.error_at(at, "axis indices start at 1", &["axis 1.."]));
        }
        if a > self.n {
            return Err(self.error_at(at, format!("axis {a} exceeds dimension {}", self.n), &[]));
        }
        Ok(a)
    }

    /// Returns the term's multi-index and coefficient.
    fn term(&mut self) -> Result<(MultiIndex, CliffordElement)> {
        let start = self.pos;
        let scalar = self.rational()?;
        let mut alpha = vec![0u32; self.n];
        let mut seen = vec![false; self.n];
        let mut coeff = CliffordElement::scalar(self.n, scalar.clone().unwrap_or_else(Rational::one));
        let mut factors = 0;
        loop {
            let star = self.peek() == Some('*');
            if star {
                self.pos += 1;
            }
            match self.peek() {
                Some('X') => {
                    self.pos += 1;
                    let at = self.pos;
                    let Some((_, idx)) = self.digits() else {
                        return Err(self.error_at(at, format!("unexpected {}", self.describe_here()), &["axis index"]));
                    };
                    let axis = self.axis(at, &idx)?;
                    if seen[axis - 1] {
                        return Err(self.error_at(at, format!("axis {axis} repeated within a term"), &[]));
                    }
                    seen[axis - 1] = true;
                    self.expect('^')?;
                    self.expect('(')?;
                    self.skip_ws();
                    let at = self.pos;
                    let Some((_, power)) = self.digits() else {
                        return Err(self.error_at(at, format!("unexpected {}", self.describe_here()), &["integer"]));
                    };
                    alpha[axis - 1] = power.parse().map_err(|_| self.error_at(at, "exponent too large", &[]))?;
                    self.expect(')')?;
                }
                Some('e') => {
                    self.pos += 1;
                    let at = self.pos;
                    let Some((_, idx)) = self.digits() else {
                        return Err(self.error_at(
                            at,
                            format!("unexpected {}", self.describe_here()),
                            &["blade digits"],
                        ));
                    };
                    let blade = if idx == "0" {
                        CliffordElement::one(self.n)
                    } else {
                        let mut axes = Vec::new();
                        for (k, c) in idx.chars().enumerate() {
                            if c == '0' {
                                return Err(self.error_at(at + k, "e0 cannot be combined with other axes", &[]));
                            }
                            axes.push(self.axis(at + k, &c.to_string())?);
                        }
                        let (neg, b) = Blade::from_indices(&axes);
                        CliffordElement::blade(self.n, b, if neg { -Rational::one() } else { Rational::one() })
                    };
                    coeff = &coeff * &blade;
                }
                _ if star => {
                    let found = self.describe_here();
                    return Err(self.error_at(self.pos, format!("unexpected {found}"), &["`X`", "`e`"]));
                }
                _ => break,
            }
            factors += 1;
        }
        if scalar.is_none() && factors == 0 {
            let found = self.describe_here();
            return Err(self.error_at(start.max(self.pos), format!("unexpected {found}"), &["rational", "`X`", "`e`"]));
        }
        Ok((MultiIndex::new(alpha), coeff))
    }
}

/// Parses the text grammar into a polynomial over `(n, h, family)`.
pub fn parse_polynomial(text: &str, n: usize, h: &Rational, family: FamilySign) -> Result<LatticePolynomial> {
    let mut out = LatticePolynomial::new(n, h.clone(), family)?;
    let mut p = Parser { chars: text.chars().collect(), pos: 0, n };
    let mut negative = match p.peek() {
        Some('-') => {
            p.pos += 1;
            true
        }
        Some('+') => {
            p.pos += 1;
            false
        }
        _ => false,
    };
    loop {
        let (alpha, coeff) = p.term()?;
        out.add_term(alpha, if negative { -&coeff } else { coeff });
        match p.peek() {
            None => break,
            Some('+') => negative = false,
            Some('-') => negative = true,
            Some(_) => {
                let found = p.describe_here();
                return Err(p.error_at(p.pos, format!("unexpected {found}"), &["`+`", "`-`", "end of input"]));
            }
        }
        p.pos += 1;
    }
    Ok(out)
}

fn write_magnitude(out: &mut String, v: &Rational, rest_nonempty: bool) {
    let mag = v.abs();
    if !mag.is_one() {
        let _ = write!(out, "{mag}");
        if rest_nonempty {
            out.push(' ');
        }
    }
}

/// Canonical text form.
pub fn print_polynomial(p: &LatticePolynomial) -> String {
    let mut out = String::new();
    for (alpha, coeff) in p.terms() {
        let mut factors = String::new();
        for (i, &a) in alpha.entries().iter().enumerate() {
            if a > 0 {
                let _ = write!(factors, "X{}^({}) ", i + 1, a);
            }
        }
        for (blade, v) in coeff.terms() {
            let negative = v.is_negative();
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            write_magnitude(&mut out, v, true);
            out.push_str(&factors);
            let _ = write!(out, "{blade}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `{"0":"1","12":"-1/3"}`
pub fn clifford_to_map(c: &CliffordElement) -> BTreeMap<String, String> {
    c.terms().map(|(b, v)| (b.key(), v.to_string())).collect()
}

pub fn clifford_from_map(n: usize, map: &BTreeMap<String, String>) -> Result<CliffordElement> {
    let mut out = CliffordElement::zero(n);
    for (key, value) in map {
        let axes: Vec<usize> = if key == "0" {
            Vec::new()
        } else {
            key.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d >= 1 && (d as usize) <= n => Ok(d as usize),
                    _ => Err(Error::InvalidArgument(format!("blade key `{key}` is invalid for dimension {n}"))),
                })
                .collect::<Result<_>>()?
        };
        let (neg, blade) = Blade::from_indices(&axes);
        let v = parse_rational(value)?;
        out.add_assign_term(blade, if neg { -v } else { v });
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    alpha: Vec<u32>,
    coeff: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    n: usize,
    h: String,
    family: FamilySign,
    terms: Vec<TermJson>,
}

impl Serialize for LatticePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson {
            n: self.n(),
            h: self.h().to_string(),
            family: self.family(),
            terms: self
                .terms()
                .map(|(a, c)| TermJson { alpha: a.entries().to_vec(), coeff: clifford_to_map(c) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(d)?;
        from_json_form(raw).map_err(serde::de::Error::custom)
    }
}

fn from_json_form(raw: PolynomialJson) -> Result<LatticePolynomial> {
    let mut p = LatticePolynomial::new(raw.n, parse_rational(&raw.h)?, raw.family)?;
    for t in raw.terms {
        if t.alpha.len() != raw.n {
            return Err(Error::DimensionMismatch { left: raw.n, right: t.alpha.len() });
        }
        p.add_term(MultiIndex::new(t.alpha), clifford_from_map(raw.n, &t.coeff)?);
    }
    Ok(p)
}

pub fn polynomial_to_json(p: &LatticePolynomial) -> serde_json::Value {
    serde_json::to_value(p).expect("polynomials always serialize")
}

pub fn polynomial_from_json(text: &str) -> Result<LatticePolynomial> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
        expected: Vec::new(),
    })
}

/// Parses a comma-separated rational point such as `3,1/2`.
pub fn parse_point(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

/// Parses a comma-separated multi-index such as `2,0,1`.
pub fn parse_multi_index(text: &str) -> Result<MultiIndex> {
    text.split(',')
        .map(|t| {
            t.trim().parse::<u32>().map_err(|_| Error::InvalidArgument(format!("`{t}` is not a non-negative integer")))
        })
        .collect::<Result<Vec<_>>>()
        .map(MultiIndex::new)
}

/// Integer lattice coordinates such as `4,-1`.
pub fn parse_lattice_point(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .ok()
                .and_then(|b| i64::try_from(b).ok())
                .ok_or_else(|| Error::InvalidArgument(format!("`{t}` is not an integer")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn parse(text: &str, n: usize) -> Result<LatticePolynomial> {
        parse_polynomial(text, n, &int(1), FamilySign::Minus)
    }

    #[test]
    fn parses_examples() {
        let p = parse("X1^(2) e0", 2).unwrap();
        let expect = LatticePolynomial::monomial(
            2,
            int(1),
            FamilySign::Minus,
            MultiIndex::new(vec![2, 0]),
            CliffordElement::one(2),
        )
        .unwrap();
        assert_eq!(p, expect);
        let m = parse("1/2 X1^(1) e0 + 1/2 X2^(1) e21", 2).unwrap();
        assert_eq!(print_polynomial(&m), "-1/2 X2^(1) e12 + 1/2 X1^(1) e0");
        match parse("X3^(1) e1", 2) {
            Err(Error::Parse { message, line, column, .. }) => {
                assert_eq!(message, "axis 3 exceeds dimension 2");
                assert_eq!((line, column), (1, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions_and_expectations() {
        match parse("X1^(2) e0 +\n  * + e1", 2) {
            Err(Error::Parse { line, column, expected, .. }) => {
                assert_eq!((line, column), (2, 5));
                assert!(expected.contains(&"`X`".to_string()));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse("X1^(1) X1^(2)", 2).is_err());
        assert!(parse("1/0 e1", 2).is_err());
        assert!(parse("", 2).is_err());
    }

    #[test]
    fn printing_is_canonical() {
        let p = parse("-e1 + 3 + 2*X2^(1)*e12 - X1^(1) X2^(3) e2", 2).unwrap();
        let text = print_polynomial(&p);
        assert_eq!(text, "3 e0 - e1 + 2 X2^(1) e12 - X1^(1) X2^(3) e2");
        assert_eq!(parse(&text, 2).unwrap(), p);
        assert_eq!(print_polynomial(&p.zero_like()), "0");
    }

    #[test]
    fn json_form() {
        let p = parse_polynomial("X1^(2) e0 - 1/3 X1^(2) e12", 2, &rat(1, 2), FamilySign::Minus).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"n":2,"h":"1/2","family":"-","terms":[{"alpha":[2,0],"coeff":{"0":"1","12":"-1/3"}}]}"#);
        assert_eq!(polynomial_from_json(&json).unwrap(), p);
        assert!(polynomial_from_json(r#"{"n":2,"h":"1","family":"-","terms":[{"alpha":[1],"coeff":{}}]}"#).is_err());
    }
}
