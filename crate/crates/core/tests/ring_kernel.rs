mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use common::{random_element, rng, sample_rings};
use gradedk::algebra::BaseRing;
use gradedk::ring_kernel::{
    confluence_probe, parse_element, strong_grading_witness, GradedElement, GradedRingSpec, Graph, Monomial,
};
use gradedk::Error;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative_and_distributive(seed in any::<u64>()) {
        let mut r = rng(seed);
        for ring in sample_rings() {
            let a = random_element(&mut r, &ring, 3, 2);
            let b = random_element(&mut r, &ring, 3, 2);
            let c = random_element(&mut r, &ring, 3, 2);
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(&ab_c, &a_bc, "associativity in {}", ring.family.name());
            let left = a.mul(&b.add(&c).unwrap()).unwrap();
            let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            let left = a.add(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn degrees_add_on_homogeneous_products(seed in any::<u64>()) {
        let mut r = rng(seed);
        for ring in sample_rings() {
            let a = random_element(&mut r, &ring, 3, 3);
            let b = random_element(&mut r, &ring, 3, 3);
            for i in a.support() {
                for j in b.support() {
                    let p = a.component(i).mul(&b.component(j)).unwrap();
                    prop_assert!(p.is_zero() || p.homogeneous_degree() == Some(i + j));
                }
            }
            let ab = a.mul(&b).unwrap();
            for d in ab.support() {
                prop_assert!(a.support().iter().any(|i| b.support().contains(&(d - i))));
            }
        }
    }

    #[test]
    fn components_reassemble(seed in any::<u64>()) {
        let mut r = rng(seed);
        for ring in sample_rings() {
            let a = random_element(&mut r, &ring, 4, 3);
            let mut sum = GradedElement::zero(&ring);
            for d in a.support() {
                sum = sum.add(&a.component(d)).unwrap();
            }
            prop_assert_eq!(sum, a.clone());
            let again = parse_element(&ring, &a.render()).unwrap();
            prop_assert_eq!(again, a);
        }
    }

    #[test]
    fn skew_products_match_the_operator_model(seed in any::<u64>()) {
        let mut r = rng(seed);
        for sigma in [vec![1, 0], vec![1, 2, 0], vec![0, 2, 1]] {
            let ring = Arc::new(GradedRingSpec::skew_laurent_perm(BaseRing::Rationals, sigma.clone()).unwrap());
            let a = random_element(&mut r, &ring, 3, 3);
            let b = random_element(&mut r, &ring, 3, 3);
            let expected = act(&sigma, &coordinates(&a), &coordinates(&b));
            prop_assert_eq!(coordinates(&a.mul(&b).unwrap()), expected);
        }
    }

    #[test]
    fn cuntz_krieger_sum_is_the_identity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ring = Arc::new(GradedRingSpec::leavitt(BaseRing::Rationals, Graph::rose(2)).unwrap());
        let ck2 = parse_element(&ring, "e1 e1* + e2 e2*").unwrap();
        let x = random_element(&mut r, &ring, 3, 2);
        prop_assert_eq!(ck2.mul(&x).unwrap(), x.clone());
        prop_assert_eq!(x.mul(&ck2).unwrap(), x);
    }
}

/// Coordinates of `sum c e_j t^m` as a map `(m, j) -> c`.
fn coordinates(a: &GradedElement) -> BTreeMap<(i64, usize), BigRational> {
    let mut out = BTreeMap::new();
    for (d, m, c) in a.terms() {
        match m {
            Monomial::Idempotent(j) => {
                out.insert((d, *j), c.clone());
            }
            other => panic!("unexpected skew monomial {other:?}"),
        }
    }
    out
}

/// Left action of `a` on the free module with basis `x_{m,j} = e_j t^m`, where
/// `e_i x_{m,j} = δ_ij x_{m,j}` and `t x_{m,j} = x_{m+1,σ(j)}`.
fn act(
    sigma: &[usize],
    a: &BTreeMap<(i64, usize), BigRational>,
    v: &BTreeMap<(i64, usize), BigRational>,
) -> BTreeMap<(i64, usize), BigRational> {
    let n = sigma.len();
    let shift = |k: i64, j: usize| -> usize {
        let mut j = j;
        if k >= 0 {
            for _ in 0..k {
                j = sigma[j];
            }
        } else {
            for _ in 0..-k {
                j = (0..n).find(|&i| sigma[i] == j).unwrap();
            }
        }
        j
    };
    let mut out: BTreeMap<(i64, usize), BigRational> = BTreeMap::new();
    for (&(m, i), c) in a {
        for (&(m2, j), c2) in v {
            // e_i t^m x_{m2,j} = e_i x_{m+m2, σ^m(j)}
            let target = shift(m, j);
            if target == i {
                *out.entry((m + m2, target)).or_insert_with(BigRational::zero) += c * c2;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[test]
fn swap_twist_squares_to_zero() {
    let ring = Arc::new(GradedRingSpec::skew_laurent_perm(BaseRing::Rationals, vec![1, 0]).unwrap());
    let x = parse_element(&ring, "e1 t").unwrap();
    assert!(x.mul(&x).unwrap().is_zero());
    let y = parse_element(&ring, "e2 t").unwrap();
    assert_eq!(x.mul(&y).unwrap(), parse_element(&ring, "e1 t^2").unwrap());
}

#[test]
fn specified_normal_forms() {
    let laurent = Arc::new(GradedRingSpec::laurent(BaseRing::Rationals));
    assert_eq!(parse_element(&laurent, "t*t^-1").unwrap(), GradedElement::one(&laurent));
    let prod = parse_element(&laurent, "t+1").unwrap().mul(&parse_element(&laurent, "t^-1").unwrap()).unwrap();
    assert_eq!(prod, parse_element(&laurent, "1 + t^-1").unwrap());

    let l2 = Arc::new(GradedRingSpec::leavitt(BaseRing::Rationals, Graph::rose(2)).unwrap());
    assert!(parse_element(&l2, "e1* e2").unwrap().is_zero());
    assert_eq!(parse_element(&l2, "e1* e1").unwrap(), GradedElement::one(&l2));

    let rel = Arc::new(GradedRingSpec::relation_default(BaseRing::Rationals));
    assert_eq!(parse_element(&rel, "A B").unwrap(), parse_element(&rel, "1 - C D").unwrap());
    assert!(matches!(parse_element(&rel, "A^9"), Err(Error::WindowExceeded { .. })));
}

#[test]
fn renormalizing_is_the_identity() {
    let mut r = rng(7);
    for ring in sample_rings() {
        for _ in 0..20 {
            let a = random_element(&mut r, &ring, 4, 3);
            assert_eq!(parse_element(&ring, &a.render()).unwrap(), a);
        }
    }
}

#[test]
fn witnesses_verify_in_every_sample_ring() {
    for ring in sample_rings() {
        let w = strong_grading_witness(&ring).unwrap();
        for sign in [1, -1] {
            let mut sum = GradedElement::zero(&ring);
            for (x, y) in w.pairs(sign) {
                sum = sum.add(&x.mul(y).unwrap()).unwrap();
            }
            assert_eq!(sum, GradedElement::one(&ring), "{}", ring.family.name());
        }
    }
}

#[test]
fn mixed_rings_are_rejected() {
    let a = Arc::new(GradedRingSpec::laurent(BaseRing::Rationals));
    let b = Arc::new(GradedRingSpec::laurent(BaseRing::prime(3).unwrap()));
    let x = GradedElement::one(&a);
    let y = GradedElement::one(&b);
    assert_eq!(x.mul(&y), Err(Error::MixedRings));
}

#[test]
fn confluence_probe_examples() {
    let l2 = GradedRingSpec::leavitt(BaseRing::Rationals, Graph::rose(2)).unwrap();
    assert!(confluence_probe(&l2, 4).all_agree);
    let rel = GradedRingSpec::relation_default(BaseRing::Rationals);
    assert!(confluence_probe(&rel, 3).all_agree);
    let laurent = GradedRingSpec::laurent(BaseRing::Rationals);
    assert!(confluence_probe(&laurent, 5).all_agree);
}

#[test]
fn prime_field_coefficients_reduce() {
    let ring = Arc::new(GradedRingSpec::laurent(BaseRing::prime(5).unwrap()));
    let x = parse_element(&ring, "7 t").unwrap();
    assert_eq!(x, parse_element(&ring, "2 t").unwrap());
    assert!(parse_element(&ring, "5 t^3").unwrap().is_zero());
}
