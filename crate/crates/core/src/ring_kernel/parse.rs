use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::Arc;

use super::element::{coerce, GradedElement, Monomial};
use super::spec::{Family, GradedRingSpec};
use crate::error::{Error, Result};

/// Unevaluated element literal: a signed sum of products.
#[derive(Clone, Debug, PartialEq)]
pub struct RawExpr {
    pub terms: Vec<RawTerm>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RawTerm {
    pub negative: bool,
    pub factors: Vec<RawPower>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RawPower {
    pub factor: RawFactor,
    pub power: i64,
    /// 1-based column of the factor in the literal.
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RawFactor {
    Number(BigRational),
    Generator { name: String, ghost: bool },
    Group(RawExpr),
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    ghosts: bool,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { column: self.pos + 1, message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect::<String>().parse().unwrap())
    }

    fn expr(&mut self) -> Result<RawExpr> {
        let mut terms = vec![];
        self.skip_ws();
        let mut negative = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            negative = c == '-';
            self.pos += 1;
        }
        loop {
            let factors = self.product()?;
            terms.push(RawTerm { negative, factors });
            self.skip_ws();
            match self.peek() {
                Some(c @ ('+' | '-')) => {
                    negative = c == '-';
                    self.pos += 1;
                }
                _ => break,
            }
        }
        Ok(RawExpr { terms })
    }

    fn starts_factor(c: char) -> bool {
        c.is_ascii_alphanumeric() || c == '('
    }

    fn product(&mut self) -> Result<Vec<RawPower>> {
        let mut out = vec![self.power()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    self.skip_ws();
                    out.push(self.power()?);
                }
                Some(c) if Self::starts_factor(c) => out.push(self.power()?),
                _ => return Ok(out),
            }
        }
    }

    fn power(&mut self) -> Result<RawPower> {
        self.skip_ws();
        let column = self.pos + 1;
        let factor = self.factor()?;
        let mut power = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            let neg = if self.peek() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let Some(n) = self.digits() else { return self.err("expected an integer exponent") };
            let n: i64 = n.try_into().map_err(|_| Error::Parse { column: self.pos, message: "exponent too large".into() })?;
            power = if neg { -n } else { n };
        }
        Ok(RawPower { factor, power, column })
    }

    fn factor(&mut self) -> Result<RawFactor> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(RawFactor::Group(inner))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits().unwrap();
                let mut den = BigInt::one();
                if self.peek() == Some('/') {
                    self.pos += 1;
                    match self.digits() {
                        Some(d) if !d.is_zero() => den = d,
                        _ => return self.err("expected a nonzero denominator"),
                    }
                }
                Ok(RawFactor::Number(BigRational::new(num, den)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let mut ghost = false;
                if self.ghosts && self.peek() == Some('*') && is_edge_name(&name) {
                    self.pos += 1;
                    ghost = true;
                }
                Ok(RawFactor::Generator { name, ghost })
            }
            Some(c) => self.err(format!("unexpected character {c:?}")),
            None => self.err("unexpected end of literal"),
        }
    }
}

fn is_edge_name(name: &str) -> bool {
    name.strip_prefix('e').is_some_and(|r| !r.is_empty() && r.chars().all(|c| c.is_ascii_digit()))
}

fn index_suffix(name: &str, prefix: char) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    rest.parse::<usize>().ok().filter(|&k| k >= 1).map(|k| k - 1)
}

/// Parses an element literal without evaluating it.
pub fn parse_raw(ring: &GradedRingSpec, literal: &str) -> Result<RawExpr> {
    let mut p = Parser {
        chars: literal.chars().collect(),
        pos: 0,
        ghosts: matches!(ring.family, Family::Leavitt(_)),
        _src: literal,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return p.err(format!("unexpected character {:?}", p.chars[p.pos]));
    }
    Ok(e)
}

/// Parses and normalizes an element literal.
pub fn parse_element(ring: &Arc<GradedRingSpec>, literal: &str) -> Result<GradedElement> {
    let raw = parse_raw(ring, literal)?;
    normalize(&raw, ring)
}

/// Evaluates a raw literal to its normal form.
pub fn normalize(raw: &RawExpr, ring: &Arc<GradedRingSpec>) -> Result<GradedElement> {
    let mut acc = GradedElement::zero(ring);
    for term in &raw.terms {
        let mut prod = GradedElement::one(ring);
        for f in &term.factors {
            prod = prod.mul(&eval_power(f, ring)?)?;
        }
        if term.negative {
            prod = prod.neg();
        }
        acc = acc.add(&prod)?;
    }
    Ok(acc)
}

fn eval_power(f: &RawPower, ring: &Arc<GradedRingSpec>) -> Result<GradedElement> {
    let at = |message: String| Error::Parse { column: f.column, message };
    match &f.factor {
        RawFactor::Number(q) => {
            let q = coerce(ring.base, q).map_err(|e| at(e.to_string()))?;
            let v = if f.power >= 0 {
                num_traits::pow(q, f.power as usize)
            } else {
                let inv = ring
                    .base
                    .inverse(&q)
                    .ok_or_else(|| at("negative power of a non-unit constant".into()))?;
                num_traits::pow(inv, f.power.unsigned_abs() as usize)
            };
            GradedElement::constant(ring, &v)
        }
        RawFactor::Generator { name, ghost } => {
            if name == "t" && !ghost {
                if let Some(e) = t_power(ring, f.power) {
                    return Ok(e);
                }
            }
            let g = generator(ring, name, *ghost)?;
            if f.power < 0 {
                return Err(at(format!("negative power of non-invertible generator {name}")));
            }
            g.pow(f.power as u32)
        }
        RawFactor::Group(inner) => {
            if f.power < 0 {
                return Err(at("negative power of a parenthesized expression".into()));
            }
            normalize(inner, ring)?.pow(f.power as u32)
        }
    }
}

fn t_power(ring: &Arc<GradedRingSpec>, k: i64) -> Option<GradedElement> {
    let one = BigRational::one();
    match &ring.family {
        Family::Laurent => Some(GradedElement::from_terms(ring, [(k, Monomial::Power, one)])),
        Family::SkewLaurentPerm { sigma } => Some(GradedElement::from_terms(
            ring,
            (0..sigma.len()).map(|i| (k, Monomial::Idempotent(i), one.clone())),
        )),
        _ => None,
    }
}

/// The element named by a generator symbol.
pub fn generator(ring: &Arc<GradedRingSpec>, name: &str, ghost: bool) -> Result<GradedElement> {
    let unknown = || Error::UnknownGenerator(if ghost { format!("{name}*") } else { name.to_string() });
    let one = BigRational::one();
    match &ring.family {
        Family::Laurent => Err(unknown()),
        Family::SkewLaurentPerm { sigma } => match index_suffix(name, 'e') {
            Some(i) if i < sigma.len() && !ghost => {
                Ok(GradedElement::from_terms(ring, [(0, Monomial::Idempotent(i), one)]))
            }
            _ => Err(unknown()),
        },
        Family::Leavitt(g) => {
            if let Some(v) = index_suffix(name, 'v').filter(|&v| v < g.vertices() && !ghost) {
                return Ok(GradedElement::from_terms(
                    ring,
                    [(0, Monomial::Path { p: vec![], q: vec![], vertex: v }, one)],
                ));
            }
            match index_suffix(name, 'e') {
                Some(e) if e < g.edges().len() => {
                    let (p, q, d) = if ghost { (vec![], vec![e], -1) } else { (vec![e], vec![], 1) };
                    Ok(GradedElement::from_terms(ring, [(d, Monomial::Path { p, q, vertex: g.range(e) }, one)]))
                }
                _ => Err(unknown()),
            }
        }
        Family::Relation { degrees, .. } => {
            let idx = ["A", "B", "C", "D"].iter().position(|g| *g == name).filter(|_| !ghost).ok_or_else(unknown)?;
            let mut e = [0u32; 4];
            e[idx] = 1;
            Ok(GradedElement::from_terms(ring, [(degrees[idx], Monomial::Relation(e), one)]))
        }
    }
}
