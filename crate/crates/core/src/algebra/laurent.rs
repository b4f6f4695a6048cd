use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use super::base::BaseRing;
use super::ring::{EuclideanRing, Ring};

/// Finite sum of `c * t^e` with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: BTreeMap<i64, BigRational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: BigRational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut terms: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e, c) in it {
            *terms.entry(e).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(c, e)` when the element is a single nonzero term.
    pub fn as_monomial(&self) -> Option<(&BigRational, i64)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c, *e))
        } else {
            None
        }
    }

    /// Multiplication by `t^n`.
    pub fn shift(&self, n: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + n, c.clone())).collect(),
        }
    }

    /// Keeps only the terms whose exponent satisfies `keep`.
    pub fn restrict(&self, keep: impl Fn(i64) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(**e))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    fn map_coeffs(&self, f: impl Fn(&BigRational) -> BigRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_laurent(self))
    }
}

/// Renders highest exponent first, e.g. `3*t^2 - 1/2*t^-1`.
pub fn render_laurent(p: &Laurent) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let var = match *e {
            0 => String::new(),
            1 => "t".into(),
            e => format!("t^{e}"),
        };
        if var.is_empty() {
            out.push_str(&BaseRing::render_coeff(&mag));
        } else if mag.is_one() {
            out.push_str(&var);
        } else {
            out.push_str(&format!("{}*{}", BaseRing::render_coeff(&mag), var));
        }
    }
    out
}

/// Which half of the Laurent ring a coefficient ring is: `R0`, `R>=0`, `R<=0` or `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Support {
    Zero,
    NonNeg,
    NonPos,
    Full,
}

impl Support {
    pub fn admits(&self, e: i64) -> bool {
        match self {
            Support::Zero => e == 0,
            Support::NonNeg => e >= 0,
            Support::NonPos => e <= 0,
            Support::Full => true,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Support::Zero => "R0",
            Support::NonNeg => "Rge0",
            Support::NonPos => "Rle0",
            Support::Full => "R",
        }
    }

    pub fn parse_tag(s: &str) -> Option<Self> {
        match s {
            "R0" => Some(Support::Zero),
            "Rge0" => Some(Support::NonNeg),
            "Rle0" => Some(Support::NonPos),
            "R" => Some(Support::Full),
            _ => None,
        }
    }
}

/// `base[t, 1/t]` or one of its graded subrings, selected by `support`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LaurentRing {
    pub base: BaseRing,
    pub support: Support,
}

impl LaurentRing {
    pub fn new(base: BaseRing, support: Support) -> Self {
        Self { base, support }
    }

    pub fn with_support(&self, support: Support) -> Self {
        Self { base: self.base, support }
    }

    /// Support check plus base coefficient normal form.
    pub fn contains(&self, p: &Laurent) -> bool {
        p.terms.iter().all(|(e, c)| {
            self.support.admits(*e) && self.base.coerce(c).as_ref() == Some(c)
        })
    }

    pub fn t_pow(&self, n: i64) -> Laurent {
        Laurent::monomial(BigRational::one(), n)
    }

    pub fn constant(&self, c: BigRational) -> Laurent {
        Laurent::constant(self.base.coerce(&c).expect("constant coerces into base"))
    }

    fn reduce(&self, p: Laurent) -> Laurent {
        match self.base {
            BaseRing::Prime(_) => p.map_coeffs(|c| self.base.coerce(c).expect("integral")),
            _ => p,
        }
    }

    fn require_field(&self) {
        assert!(
            self.support == Support::Zero || self.base.is_field(),
            "Euclidean division over {} requires a field base",
            self.support.tag()
        );
    }

    fn lead_high(p: &Laurent) -> (i64, BigRational) {
        let (e, c) = p.terms.iter().next_back().expect("nonzero");
        (*e, c.clone())
    }

    fn lead_low(p: &Laurent) -> (i64, BigRational) {
        let (e, c) = p.terms.iter().next().expect("nonzero");
        (*e, c.clone())
    }

    /// Long division eliminating from the top (`high = true`) or from the bottom.
    fn long_division(&self, a: &Laurent, b: &Laurent, high: bool) -> (Laurent, Laurent) {
        let (be, bc) = if high { Self::lead_high(b) } else { Self::lead_low(b) };
        let binv = self.base.inverse(&bc).expect("field base");
        let mut q = Laurent::zero();
        let mut r = a.clone();
        while !r.is_zero() {
            let (re, rc) = if high { Self::lead_high(&r) } else { Self::lead_low(&r) };
            if (high && re < be) || (!high && re > be) {
                break;
            }
            let term = Laurent::monomial(self.base.mul(&rc, &binv), re - be);
            r = self.sub(&r, &self.mul(&term, b));
            q = self.add(&q, &term);
        }
        (q, r)
    }
}

impl Ring for LaurentRing {
    type Elem = Laurent;

    fn zero(&self) -> Laurent {
        Laurent::zero()
    }

    fn one(&self) -> Laurent {
        Laurent::constant(BigRational::one())
    }

    fn from_i64(&self, n: i64) -> Laurent {
        Laurent::constant(self.base.from_i64(n))
    }

    fn add(&self, a: &Laurent, b: &Laurent) -> Laurent {
        let mut terms = a.terms.clone();
        for (e, c) in &b.terms {
            *terms.entry(*e).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        self.reduce(Laurent { terms })
    }

    fn neg(&self, a: &Laurent) -> Laurent {
        self.reduce(a.map_coeffs(|c| -c))
    }

    fn mul(&self, a: &Laurent, b: &Laurent) -> Laurent {
        if a.is_zero() || b.is_zero() {
            return Laurent::zero();
        }
        let mut terms: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                *terms.entry(ea + eb).or_default() += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        self.reduce(Laurent { terms })
    }

    fn is_zero(&self, a: &Laurent) -> bool {
        a.is_zero()
    }

    fn render(&self, a: &Laurent) -> String {
        render_laurent(a)
    }
}

impl EuclideanRing for LaurentRing {
    type Size = BigUint;

    fn snf_capable(&self) -> bool {
        self.support == Support::Zero || self.base.is_field()
    }

    fn size(&self, a: &Laurent) -> BigUint {
        let (lo, hi) = (a.min_deg().unwrap_or(0), a.max_deg().unwrap_or(0));
        match self.support {
            Support::Zero => self.base.size(&a.coeff(0)),
            Support::NonNeg => BigUint::from(hi.max(0) as u64),
            Support::NonPos => BigUint::from((-lo).max(0) as u64),
            Support::Full => BigUint::from((hi - lo) as u64),
        }
    }

    fn div_rem(&self, a: &Laurent, b: &Laurent) -> (Laurent, Laurent) {
        assert!(!b.is_zero(), "division by zero");
        self.require_field();
        match self.support {
            Support::Zero => {
                let (q, r) = self.base.div_rem(&a.coeff(0), &b.coeff(0));
                (Laurent::constant(q), Laurent::constant(r))
            }
            Support::NonNeg => self.long_division(a, b, true),
            Support::NonPos => self.long_division(a, b, false),
            Support::Full => {
                if a.is_zero() {
                    return (Laurent::zero(), Laurent::zero());
                }
                let (la, lb) = (a.min_deg().unwrap(), b.min_deg().unwrap());
                let (a0, b0) = (a.shift(-la), b.shift(-lb));
                let (q0, r0) = self.long_division(&a0, &b0, true);
                (q0.shift(la - lb), r0.shift(la))
            }
        }
    }

    fn unit_inverse(&self, a: &Laurent) -> Option<Laurent> {
        let (c, e) = a.as_monomial()?;
        if e != 0 && self.support != Support::Full {
            return None;
        }
        let inv = self.base.inverse(c)?;
        Some(Laurent::monomial(inv, -e))
    }

    fn normalizing_unit(&self, a: &Laurent) -> Laurent {
        if a.is_zero() {
            return self.one();
        }
        match self.support {
            Support::Zero => Laurent::constant(self.base.normalizing_unit(&a.coeff(0))),
            Support::NonNeg => Laurent::constant(self.base.normalizing_unit(&Self::lead_high(a).1)),
            Support::NonPos => Laurent::constant(self.base.normalizing_unit(&Self::lead_low(a).1)),
            Support::Full => {
                let u = self.base.normalizing_unit(&Self::lead_high(a).1);
                Laurent::monomial(u, -a.min_deg().unwrap())
            }
        }
    }
}

/// Convenience constructor for integer coefficients.
pub fn lp(terms: &[(i64, i64)]) -> Laurent {
    Laurent::from_terms(
        terms
            .iter()
            .map(|(e, c)| (*e, BigRational::from_integer(BigInt::from(*c)))),
    )
}
