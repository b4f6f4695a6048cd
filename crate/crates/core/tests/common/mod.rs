//! Seeded random generators shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use gradedk::algebra::{BaseRing, Laurent, LaurentRing, Matrix, Support};
use gradedk::homology::ChainComplex;
use gradedk::ring_kernel::{parse_element, Family, GradedElement, GradedRingSpec, Graph};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed from `GK_SEED` when set, otherwise the given default.
pub fn env_seed(default: u64) -> u64 {
    std::env::var("GK_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(default)
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Generator names of a ring, for random literals.
pub fn generators(ring: &GradedRingSpec) -> Vec<String> {
    match &ring.family {
        Family::Laurent => vec!["t".into(), "t^-1".into()],
        Family::SkewLaurentPerm { sigma } => {
            let mut g: Vec<String> = (1..=sigma.len()).map(|i| format!("e{i}")).collect();
            g.extend(["t".into(), "t^-1".into()]);
            g
        }
        Family::Leavitt(graph) => {
            let mut g: Vec<String> = (1..=graph.vertices()).map(|i| format!("v{i}")).collect();
            for e in 1..=graph.edges().len() {
                g.push(format!("e{e}"));
                g.push(format!("e{e}*"));
            }
            g
        }
        Family::Relation { .. } => ["A", "B", "C", "D"].map(String::from).to_vec(),
    }
}

/// A random literal with up to `terms` terms, each a small coefficient times a word
/// of at most `word_len` generators.
pub fn random_literal(rng: &mut impl Rng, ring: &GradedRingSpec, terms: usize, word_len: usize) -> String {
    let gens = generators(ring);
    let n = rng.gen_range(1..=terms);
    let mut parts = vec![];
    for _ in 0..n {
        let c: i64 = rng.gen_range(-3..=3);
        let len = rng.gen_range(0..=word_len);
        let word: Vec<&str> = (0..len).map(|_| gens[rng.gen_range(0..gens.len())].as_str()).collect();
        if word.is_empty() {
            parts.push(format!("({c})"));
        } else {
            parts.push(format!("({c}) {}", word.join(" ")));
        }
    }
    parts.join(" + ")
}

pub fn random_element(rng: &mut impl Rng, ring: &Arc<GradedRingSpec>, terms: usize, word_len: usize) -> GradedElement {
    let lit = random_literal(rng, ring, terms, word_len);
    parse_element(ring, &lit).unwrap_or_else(|e| panic!("{lit}: {e}"))
}

pub fn sample_rings() -> Vec<Arc<GradedRingSpec>> {
    vec![
        Arc::new(GradedRingSpec::laurent(BaseRing::Rationals)),
        Arc::new(GradedRingSpec::laurent(BaseRing::prime(5).unwrap())),
        Arc::new(GradedRingSpec::skew_laurent_perm(BaseRing::Rationals, vec![1, 0]).unwrap()),
        Arc::new(GradedRingSpec::skew_laurent_perm(BaseRing::Rationals, vec![1, 2, 0]).unwrap()),
        Arc::new(GradedRingSpec::leavitt(BaseRing::Rationals, Graph::rose(2)).unwrap()),
        Arc::new(
            GradedRingSpec::leavitt(BaseRing::Rationals, Graph::new(2, vec![(0, 0), (0, 1), (1, 0)]).unwrap()).unwrap(),
        ),
        Arc::new(GradedRingSpec::relation_default(BaseRing::Rationals)),
    ]
}

/// Random Laurent polynomial with exponents in `lo..=hi` and small coefficients.
pub fn random_laurent(rng: &mut impl Rng, lo: i64, hi: i64, density: f64) -> Laurent {
    let mut terms = vec![];
    for e in lo..=hi {
        if rng.gen_bool(density) {
            terms.push((e, q(rng.gen_range(-2..=2))));
        }
    }
    Laurent::from_terms(terms)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> Matrix<Laurent> {
    Matrix::from_fn(rows, cols, |_, _| random_laurent(rng, lo, hi, 0.4))
}

/// Unimodular matrix over any support: product of elementary row operations with
/// monomial multipliers of exponent in `lo..=hi`.
pub fn random_unimodular(rng: &mut impl Rng, ring: &LaurentRing, n: usize, lo: i64, hi: i64) -> Matrix<Laurent> {
    let mut m = Matrix::identity(ring, n);
    if n < 2 {
        return m;
    }
    for _ in 0..2 * n {
        let a = rng.gen_range(0..n);
        let b = (a + rng.gen_range(1..n)) % n;
        let c = Laurent::monomial(q(rng.gen_range(-2..=2)), rng.gen_range(lo..=hi));
        m.add_row_multiple(ring, a, b, &c);
    }
    m
}

/// Random valid complex: a direct sum of one-step pieces `R -> R` with random
/// entries and free summands, scrambled by unimodular changes of basis.
pub fn random_complex(rng: &mut impl Rng, ring: LaurentRing, bottom: i64, len: usize, max_rank: usize) -> ChainComplex {
    let (lo, hi) = match ring.support {
        Support::Zero => (0, 0),
        Support::NonNeg => (0, 2),
        Support::NonPos => (-2, 0),
        Support::Full => (-1, 1),
    };
    let mut c = ChainComplex::zero(ring);
    let pieces = rng.gen_range(1..=max_rank.max(1));
    for _ in 0..pieces {
        let k = bottom + rng.gen_range(0..len as i64);
        let piece = if k > bottom && rng.gen_bool(0.6) {
            let mut p = random_laurent(rng, lo, hi, 0.5);
            if p.is_zero() {
                p = Laurent::monomial(q(1), lo.max(0).min(hi));
            }
            ChainComplex::new(ring, k - 1, vec![1, 1], vec![Matrix::from_rows(vec![vec![p]], 1)]).unwrap()
        } else {
            ChainComplex::concentrated(ring, k, 1)
        };
        c = c.direct_sum(&piece).unwrap();
    }
    scramble(rng, &c)
}

/// Conjugates every differential by random unimodular bases.
pub fn scramble(rng: &mut impl Rng, c: &ChainComplex) -> ChainComplex {
    let ring = c.ring();
    let (lo, hi) = match ring.support {
        Support::Zero => (0, 0),
        Support::NonNeg => (0, 1),
        Support::NonPos => (-1, 0),
        Support::Full => (-1, 1),
    };
    let bases: Vec<(Matrix<Laurent>, Matrix<Laurent>)> = c
        .degrees()
        .map(|k| {
            let u = random_unimodular(rng, &ring, c.rank(k), lo, hi);
            let inv = gradedk::algebra::smith::inverse(&ring, &u).unwrap().expect("unimodular");
            (u, inv)
        })
        .collect();
    let idx = |k: i64| (k - c.bottom()) as usize;
    let diffs = (c.bottom() + 1..=c.top())
        .map(|k| bases[idx(k - 1)].0.mul(&ring, &c.d(k)).mul(&ring, &bases[idx(k)].1))
        .collect();
    ChainComplex::new(ring, c.bottom(), c.ranks().to_vec(), diffs).unwrap()
}
