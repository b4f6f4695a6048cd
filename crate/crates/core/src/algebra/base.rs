use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::ring::{EuclideanRing, Ring};

/// Coefficient base underlying the degree-zero part of every supported family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BaseRing {
    Rationals,
    /// Prime field; the modulus is checked for primality at construction.
    Prime(u64),
    Integers,
}

impl BaseRing {
    pub fn prime(p: u64) -> Option<Self> {
        is_prime(p).then_some(BaseRing::Prime(p))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, BaseRing::Integers)
    }

    /// Image of a rational number in this base, `None` if it has no image
    /// (non-integral in `Z`, denominator divisible by `p` in `F_p`).
    pub fn coerce(&self, q: &BigRational) -> Option<BigRational> {
        match self {
            BaseRing::Rationals => Some(q.clone()),
            BaseRing::Integers => q.is_integer().then(|| q.clone()),
            BaseRing::Prime(p) => {
                let p = BigInt::from(*p);
                let num = q.numer().mod_floor(&p);
                let den = q.denom().mod_floor(&p);
                let inv = mod_inverse(&den, &p)?;
                Some(BigRational::from_integer((num * inv).mod_floor(&p)))
            }
        }
    }

    pub fn from_int(&self, n: &BigInt) -> BigRational {
        self.coerce(&BigRational::from_integer(n.clone()))
            .expect("integers always coerce")
    }

    /// Canonical spec string: `Q`, `Z` or `Fp:<p>`.
    pub fn tag(&self) -> String {
        match self {
            BaseRing::Rationals => "Q".into(),
            BaseRing::Integers => "Z".into(),
            BaseRing::Prime(p) => format!("Fp:{p}"),
        }
    }

    pub fn parse_tag(s: &str) -> Result<Self, String> {
        match s.trim() {
            "Q" => Ok(BaseRing::Rationals),
            "Z" => Ok(BaseRing::Integers),
            other => {
                let p = other
                    .strip_prefix("Fp:")
                    .ok_or_else(|| format!("unknown base ring {other:?}"))?;
                let p: u64 = p
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad prime in base ring {other:?}"))?;
                BaseRing::prime(p).ok_or_else(|| format!("{p} is not prime"))
            }
        }
    }

    pub fn render_coeff(q: &BigRational) -> String {
        if q.is_integer() {
            q.numer().to_string()
        } else {
            format!("{}/{}", q.numer(), q.denom())
        }
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(p);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(p))
    } else {
        None
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring for BaseRing {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        self.from_int(&BigInt::from(n))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a + b)
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        self.reduce(-a)
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a * b)
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn render(&self, a: &BigRational) -> String {
        BaseRing::render_coeff(a)
    }
}

impl BaseRing {
    fn reduce(&self, q: BigRational) -> BigRational {
        match self {
            BaseRing::Prime(_) => self.coerce(&q).expect("field elements stay integral"),
            _ => q,
        }
    }

    pub fn inverse(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            return None;
        }
        match self {
            BaseRing::Rationals => Some(a.recip()),
            BaseRing::Integers => (a.abs().is_one()).then(|| a.clone()),
            BaseRing::Prime(p) => {
                let p = BigInt::from(*p);
                mod_inverse(a.numer(), &p).map(BigRational::from_integer)
            }
        }
    }
}

impl EuclideanRing for BaseRing {
    type Size = BigUint;

    fn size(&self, a: &BigRational) -> BigUint {
        match self {
            BaseRing::Integers => a.numer().magnitude().clone(),
            _ => BigUint::zero(),
        }
    }

    fn div_rem(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        match self {
            BaseRing::Integers => {
                let (q, r) = a.numer().div_rem(b.numer());
                (BigRational::from_integer(q), BigRational::from_integer(r))
            }
            _ => {
                let inv = self.inverse(b).expect("nonzero divisor in a field");
                (self.mul(a, &inv), BigRational::zero())
            }
        }
    }

    fn unit_inverse(&self, a: &BigRational) -> Option<BigRational> {
        self.inverse(a)
    }

    fn normalizing_unit(&self, a: &BigRational) -> BigRational {
        match self {
            BaseRing::Integers => {
                if a.is_negative() {
                    -BigRational::one()
                } else {
                    BigRational::one()
                }
            }
            _ => self.inverse(a).unwrap_or_else(BigRational::one),
        }
    }
}

/// Small-integer view used when reporting exponents and ranks.
pub fn to_i64(q: &BigRational) -> Option<i64> {
    q.is_integer().then(|| q.numer().to_i64()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn prime_field_reduces_fractions() {
        let f7 = BaseRing::prime(7).unwrap();
        assert_eq!(f7.coerce(&q(1, 2)), Some(q(4, 1)));
        assert_eq!(f7.coerce(&q(1, 7)), None);
        assert_eq!(f7.mul(&q(3, 1), &q(5, 1)), q(1, 1));
        assert!(BaseRing::prime(9).is_none());
    }

    #[test]
    fn integer_division_keeps_remainder_small() {
        let z = BaseRing::Integers;
        let (qq, r) = z.div_rem(&q(-7, 1), &q(3, 1));
        assert_eq!(z.add(&z.mul(&qq, &q(3, 1)), &r), q(-7, 1));
        assert!(z.size(&r) < z.size(&q(3, 1)));
        assert_eq!(z.normalize(&q(-4, 1)), q(4, 1));
    }

    #[test]
    fn tags_round_trip() {
        for b in [BaseRing::Rationals, BaseRing::Integers, BaseRing::Prime(5)] {
            assert_eq!(BaseRing::parse_tag(&b.tag()).unwrap(), b);
        }
        assert!(BaseRing::parse_tag("Fp:4").is_err());
    }
}
