use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{EuclideanRing, Ring};

/// The integers with `BigInt` elements; carrier ring for abelian-group presentations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

impl EuclideanRing for Integers {
    type Size = BigUint;

    fn size(&self, a: &BigInt) -> BigUint {
        a.magnitude().clone()
    }

    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        Integer::div_rem(a, b)
    }

    fn unit_inverse(&self, a: &BigInt) -> Option<BigInt> {
        a.abs().is_one().then(|| a.clone())
    }

    fn normalizing_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
}
