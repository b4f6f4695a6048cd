use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

use super::spec::{perm_power, Family, GradedRingSpec, Graph};
use crate::algebra::laurent::Support;
use crate::algebra::{BaseRing, Laurent, Ring};
use crate::error::{Error, Result};

/// Normal-form monomial. For the Laurent and skew families the power of `t` is the
/// component key and is not repeated here.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Monomial {
    /// `t^d`.
    Power,
    /// `e_i t^d`.
    Idempotent(usize),
    /// `p q*` with `vertex = r(p) = r(q)`; both empty means the vertex idempotent.
    Path { p: Vec<usize>, q: Vec<usize>, vertex: usize },
    /// `A^a B^b C^c D^d` with `min(a, b) = 0`.
    Relation([u32; 4]),
}

pub type Component = BTreeMap<Monomial, BigRational>;

/// Element of a graded ring, stored as degree-indexed homogeneous components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    ring: Arc<GradedRingSpec>,
    components: BTreeMap<i64, Component>,
}

impl GradedElement {
    pub fn zero(ring: &Arc<GradedRingSpec>) -> Self {
        Self { ring: ring.clone(), components: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<GradedRingSpec>) -> Self {
        let terms: Vec<(i64, Monomial, BigRational)> = match &ring.family {
            Family::Laurent => vec![(0, Monomial::Power, BigRational::one())],
            Family::SkewLaurentPerm { sigma } => {
                (0..sigma.len()).map(|i| (0, Monomial::Idempotent(i), BigRational::one())).collect()
            }
            Family::Leavitt(g) => (0..g.vertices())
                .map(|v| (0, Monomial::Path { p: vec![], q: vec![], vertex: v }, BigRational::one()))
                .collect(),
            Family::Relation { .. } => vec![(0, Monomial::Relation([0; 4]), BigRational::one())],
        };
        Self::from_terms(ring, terms)
    }

    pub fn constant(ring: &Arc<GradedRingSpec>, c: &BigRational) -> Result<Self> {
        let c = coerce(ring.base, c)?;
        Ok(Self::one(ring).scale(&c))
    }

    /// Assembles an element from normal-form monomials; coefficients are reduced
    /// into the base and zero terms dropped.
    pub fn from_terms(
        ring: &Arc<GradedRingSpec>,
        terms: impl IntoIterator<Item = (i64, Monomial, BigRational)>,
    ) -> Self {
        let mut components: BTreeMap<i64, Component> = BTreeMap::new();
        for (d, m, c) in terms {
            *components.entry(d).or_default().entry(m).or_default() += c;
        }
        let mut out = Self { ring: ring.clone(), components };
        out.clean();
        out
    }

    fn clean(&mut self) {
        let base = self.ring.base;
        for comp in self.components.values_mut() {
            for c in comp.values_mut() {
                *c = base.coerce(c).expect("coefficients stay in the base");
            }
            comp.retain(|_, c| !c.is_zero());
        }
        self.components.retain(|_, comp| !comp.is_empty());
    }

    pub fn ring(&self) -> &Arc<GradedRingSpec> {
        &self.ring
    }

    pub fn components(&self) -> &BTreeMap<i64, Component> {
        &self.components
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Monomial, &BigRational)> + '_ {
        self.components
            .iter()
            .flat_map(|(d, comp)| comp.iter().map(move |(m, c)| (*d, m, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn support(&self) -> Vec<i64> {
        self.components.keys().copied().collect()
    }

    /// The degree when the element is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        if self.components.len() == 1 {
            self.components.keys().next().copied()
        } else {
            None
        }
    }

    pub fn component(&self, d: i64) -> Self {
        let mut components = BTreeMap::new();
        if let Some(c) = self.components.get(&d) {
            components.insert(d, c.clone());
        }
        Self { ring: self.ring.clone(), components }
    }

    /// Subring membership by support inspection.
    pub fn lies_in(&self, support: Support) -> bool {
        self.components.keys().all(|d| support.admits(*d))
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let terms = self.terms().chain(other.terms()).map(|(d, m, c)| (d, m.clone(), c.clone()));
        Ok(Self::from_terms(&self.ring, terms))
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let terms = self.terms().map(|(d, m, x)| (d, m.clone(), x * c));
        Self::from_terms(&self.ring, terms)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut acc: Vec<(i64, Monomial, BigRational)> = Vec::new();
        for (d1, m1, c1) in self.terms() {
            for (d2, m2, c2) in other.terms() {
                let coeff = c1 * c2;
                for (m, k) in mul_monomials(&self.ring, (d1, m1), (d2, m2))? {
                    let d = monomial_degree(&self.ring, d1 + d2, &m);
                    acc.push((d, m, &coeff * k));
                }
            }
        }
        Ok(Self::from_terms(&self.ring, acc))
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = Self::one(&self.ring);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Literal in the element grammar; parsing it back gives the same element.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (d, comp) in self.components.iter().rev() {
            for (m, c) in comp {
                let word = render_monomial(&self.ring, *d, m);
                let neg = c.is_negative();
                let mag = c.abs();
                if first {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                first = false;
                match (word.is_empty(), mag.is_one()) {
                    (true, _) => out.push_str(&BaseRing::render_coeff(&mag)),
                    (false, true) => out.push_str(&word),
                    (false, false) => {
                        out.push_str(&BaseRing::render_coeff(&mag));
                        out.push('*');
                        out.push_str(&word);
                    }
                }
            }
        }
        out
    }

    /// Laurent-family view as a Laurent polynomial.
    pub fn to_laurent(&self) -> Option<Laurent> {
        if self.ring.family != Family::Laurent {
            return None;
        }
        Some(Laurent::from_terms(self.terms().map(|(d, _, c)| (d, c.clone()))))
    }

    pub fn from_laurent(ring: &Arc<GradedRingSpec>, p: &Laurent) -> Result<Self> {
        if ring.family != Family::Laurent {
            return Err(Error::InvalidSpec("Laurent polynomials need the laurent family".into()));
        }
        let mut terms = vec![];
        for (e, c) in p.terms() {
            terms.push((e, Monomial::Power, coerce(ring.base, c)?));
        }
        Ok(Self::from_terms(ring, terms))
    }
}

pub(crate) fn coerce(base: BaseRing, c: &BigRational) -> Result<BigRational> {
    base.coerce(c).ok_or_else(|| Error::Parse {
        column: 0,
        message: format!("coefficient {} has no image in {}", BaseRing::render_coeff(c), base.tag()),
    })
}

/// Degree of a monomial; `key` is the degree carried alongside key-less monomials.
pub fn monomial_degree(ring: &GradedRingSpec, key: i64, m: &Monomial) -> i64 {
    match (m, &ring.family) {
        (Monomial::Path { p, q, .. }, _) => p.len() as i64 - q.len() as i64,
        (Monomial::Relation(e), Family::Relation { degrees, .. }) => {
            (0..4).map(|i| e[i] as i64 * degrees[i]).sum()
        }
        _ => key,
    }
}

fn render_monomial(ring: &GradedRingSpec, d: i64, m: &Monomial) -> String {
    let tpow = |d: i64| match d {
        0 => String::new(),
        1 => "t".to_string(),
        d => format!("t^{d}"),
    };
    match m {
        Monomial::Power => tpow(d),
        Monomial::Idempotent(i) => {
            let t = tpow(d);
            if t.is_empty() {
                format!("e{}", i + 1)
            } else {
                format!("e{}*{}", i + 1, t)
            }
        }
        Monomial::Path { p, q, vertex } => {
            if p.is_empty() && q.is_empty() {
                return format!("v{}", vertex + 1);
            }
            let mut parts: Vec<String> = p.iter().map(|e| format!("e{}", e + 1)).collect();
            parts.extend(q.iter().rev().map(|e| format!("e{}*", e + 1)));
            parts.join(" ")
        }
        Monomial::Relation(e) => {
            let _ = ring;
            let mut parts = vec![];
            for (i, name) in ["A", "B", "C", "D"].iter().enumerate() {
                match e[i] {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    k => parts.push(format!("{name}^{k}")),
                }
            }
            parts.join("*")
        }
    }
}

/// Product of two normal-form monomials as a combination of normal-form monomials.
/// Degrees of key-less monomials are `d1 + d2`.
pub fn mul_monomials(
    ring: &GradedRingSpec,
    (d1, m1): (i64, &Monomial),
    (_, m2): (i64, &Monomial),
) -> Result<Vec<(Monomial, BigRational)>> {
    let one = BigRational::one();
    match (&ring.family, m1, m2) {
        (Family::Laurent, Monomial::Power, Monomial::Power) => Ok(vec![(Monomial::Power, one)]),
        (Family::SkewLaurentPerm { sigma }, Monomial::Idempotent(i), Monomial::Idempotent(j)) => {
            if *i == perm_power(sigma, d1, *j) {
                Ok(vec![(Monomial::Idempotent(*i), one)])
            } else {
                Ok(vec![])
            }
        }
        (Family::Leavitt(g), Monomial::Path { p: p1, q: q1, vertex: v1 }, Monomial::Path { p: p2, q: q2, vertex: v2 }) => {
            Ok(leavitt_product(g, (p1, q1, *v1), (p2, q2, *v2)))
        }
        (Family::Relation { window, .. }, Monomial::Relation(a), Monomial::Relation(b)) => {
            let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
            let length = e.iter().map(|x| *x as usize).sum::<usize>();
            if length > *window {
                return Err(Error::WindowExceeded { length, window: *window });
            }
            Ok(relation_reduce(e))
        }
        _ => Err(Error::MixedRings),
    }
}

/// `A^a B^b C^c D^d` rewritten with `AB -> 1 - CD` until `min(a, b) = 0`.
pub fn relation_reduce(e: [u32; 4]) -> Vec<(Monomial, BigRational)> {
    let m = e[0].min(e[1]);
    let mut out = Vec::new();
    let mut binom = BigInt::one();
    for i in 0..=m {
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.push((
            Monomial::Relation([e[0] - m, e[1] - m, e[2] + i, e[3] + i]),
            BigRational::from_integer(&binom * sign),
        ));
        binom = binom * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    out
}

type PathWord<'a> = (&'a Vec<usize>, &'a Vec<usize>, usize);

fn leavitt_product(g: &Graph, (p1, q1, v1): PathWord, (p2, q2, v2): PathWord) -> Vec<(Monomial, BigRational)> {
    let start2 = p2.first().map_or(v2, |&e| g.source(e));
    let (p, q, vertex) = if q1.len() <= p2.len() && p2[..q1.len()] == q1[..] {
        if q1.is_empty() && v1 != start2 {
            return vec![];
        }
        let mut p = p1.clone();
        p.extend_from_slice(&p2[q1.len()..]);
        (p, q2.clone(), v2)
    } else if p2.len() < q1.len() && q1[..p2.len()] == p2[..] {
        if p2.is_empty() && g.source(q1[0]) != v2 {
            return vec![];
        }
        let mut q = q2.clone();
        q.extend_from_slice(&q1[p2.len()..]);
        (p1.clone(), q, v1)
    } else {
        return vec![];
    };
    leavitt_reduce(g, p, q, vertex)
}

/// Applies the CK2 rewrite to trailing special-edge pairs until none remain.
pub fn leavitt_reduce(g: &Graph, p: Vec<usize>, q: Vec<usize>, vertex: usize) -> Vec<(Monomial, BigRational)> {
    let mut out: BTreeMap<Monomial, BigRational> = BTreeMap::new();
    let mut stack = vec![(p, q, vertex, BigRational::one())];
    while let Some((mut p, mut q, vertex, c)) = stack.pop() {
        let trailing = match (p.last(), q.last()) {
            (Some(&a), Some(&b)) if a == b && g.special_edge(g.source(a)) == Some(a) => Some(a),
            _ => None,
        };
        match trailing {
            Some(e) => {
                let w = g.source(e);
                p.pop();
                q.pop();
                for f in g.out_edges(w) {
                    if f != e {
                        let (mut pf, mut qf) = (p.clone(), q.clone());
                        pf.push(f);
                        qf.push(f);
                        stack.push((pf, qf, g.range(f), -c.clone()));
                    }
                }
                stack.push((p, q, w, c));
            }
            None => {
                *out.entry(Monomial::Path { p, q, vertex }).or_default() += c;
            }
        }
    }
    out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl Ring for Arc<GradedRingSpec> {
    type Elem = GradedElement;

    fn zero(&self) -> GradedElement {
        GradedElement::zero(self)
    }

    fn one(&self) -> GradedElement {
        GradedElement::one(self)
    }

    fn from_i64(&self, n: i64) -> GradedElement {
        GradedElement::one(self).scale(&BigRational::from_integer(n.into()))
    }

    fn add(&self, a: &GradedElement, b: &GradedElement) -> GradedElement {
        a.add(b).expect("same ring")
    }

    fn neg(&self, a: &GradedElement) -> GradedElement {
        a.neg()
    }

    fn mul(&self, a: &GradedElement, b: &GradedElement) -> GradedElement {
        a.mul(b).expect("product within the ring's limits")
    }

    fn is_zero(&self, a: &GradedElement) -> bool {
        a.is_zero()
    }

    fn render(&self, a: &GradedElement) -> String {
        a.render()
    }
}
