use num_rational::BigRational;
use num_traits::One;
use std::sync::Arc;

use super::element::{GradedElement, Monomial};
use super::parse::{generator, parse_element};
use super::spec::{Family, GradedRingSpec, Graph};
use crate::error::{Error, Result};

/// Pairs certifying `R_1 R_{-1} = R_0 = R_{-1} R_1`.
#[derive(Clone, Debug, PartialEq)]
pub struct StrongGradingWitness {
    /// `(x_j, y_j)` with `x_j` in degree 1, `y_j` in degree -1, `sum x_j y_j = 1`.
    pub pos: Vec<(GradedElement, GradedElement)>,
    /// `(u_i, v_i)` with `u_i` in degree -1, `v_i` in degree 1, `sum u_i v_i = 1`.
    pub neg: Vec<(GradedElement, GradedElement)>,
}

impl StrongGradingWitness {
    /// Checks degrees and both sums by ring arithmetic.
    pub fn verify(&self) -> Result<()> {
        check_pairs(&self.pos, 1, "pos")?;
        check_pairs(&self.neg, -1, "neg")
    }

    /// The pairs for one sign: `pos` for `+1`, `neg` for `-1`.
    pub fn pairs(&self, sign: i64) -> &[(GradedElement, GradedElement)] {
        if sign >= 0 {
            &self.pos
        } else {
            &self.neg
        }
    }
}

fn check_pairs(pairs: &[(GradedElement, GradedElement)], first_degree: i64, label: &str) -> Result<()> {
    let Some((x0, _)) = pairs.first() else {
        return Err(Error::Internal(format!("empty {label} witness")));
    };
    let ring = x0.ring().clone();
    let mut sum = GradedElement::zero(&ring);
    for (x, y) in pairs {
        let ok = x.homogeneous_degree() == Some(first_degree) && y.homogeneous_degree() == Some(-first_degree);
        if !ok {
            return Err(Error::Internal(format!(
                "{label} witness pair ({}, {}) has the wrong degrees",
                x.render(),
                y.render()
            )));
        }
        sum = sum.add(&x.mul(y)?)?;
    }
    if sum != GradedElement::one(&ring) {
        return Err(Error::Internal(format!("{label} witness sums to {} instead of 1", sum.render())));
    }
    Ok(())
}

/// Builds and verifies a strong grading witness.
pub fn strong_grading_witness(ring: &Arc<GradedRingSpec>) -> Result<StrongGradingWitness> {
    let w = match &ring.family {
        Family::Laurent | Family::SkewLaurentPerm { .. } => {
            let t = parse_element(ring, "t")?;
            let tinv = parse_element(ring, "t^-1")?;
            StrongGradingWitness { pos: vec![(t.clone(), tinv.clone())], neg: vec![(tinv, t)] }
        }
        Family::Leavitt(g) => leavitt_witness(ring, g)?,
        Family::Relation { degrees, .. } => relation_witness(ring, degrees)?,
    };
    w.verify()?;
    Ok(w)
}

fn path_elem(ring: &Arc<GradedRingSpec>, g: &Graph, p: Vec<usize>, q: Vec<usize>) -> GradedElement {
    let vertex = match (p.last(), q.last()) {
        (Some(&e), _) | (None, Some(&e)) => g.range(e),
        (None, None) => unreachable!("paths are nonempty here"),
    };
    let d = p.len() as i64 - q.len() as i64;
    GradedElement::from_terms(ring, [(d, Monomial::Path { p, q, vertex }, BigRational::one())])
}

/// All paths of exactly `len` edges starting at `v`.
fn paths_from(g: &Graph, v: usize, len: usize) -> Vec<Vec<usize>> {
    let mut layer = vec![vec![]];
    for _ in 0..len {
        let mut next = vec![];
        for p in &layer {
            let end = p.last().map_or(v, |&e: &usize| g.range(e));
            for e in g.out_edges(end) {
                let mut q = p.clone();
                q.push(e);
                next.push(q);
            }
        }
        layer = next;
    }
    layer
}

/// Some path of exactly `len` edges ending at `v`, found by walking backwards.
fn path_into(g: &Graph, v: usize, len: usize) -> Option<Vec<usize>> {
    fn go(g: &Graph, v: usize, len: usize, acc: &mut Vec<usize>) -> bool {
        if len == 0 {
            return true;
        }
        for e in g.in_edges(v) {
            acc.push(e);
            if go(g, g.source(e), len - 1, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = vec![];
    go(g, v, len, &mut acc).then(|| {
        acc.reverse();
        acc
    })
}

fn leavitt_witness(ring: &Arc<GradedRingSpec>, g: &Graph) -> Result<StrongGradingWitness> {
    if let Some(v) = g.first_sink() {
        return Err(Error::GraphHasSink(v));
    }
    let pos = (0..g.edges().len())
        .map(|e| Ok((generator(ring, &format!("e{}", e + 1), false)?, generator(ring, &format!("e{}", e + 1), true)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut neg = vec![];
    for w in 0..g.vertices() {
        if let Some(&e) = g.in_edges(w).first() {
            // e* e = r(e) = w
            neg.push((path_elem(ring, g, vec![], vec![e]), path_elem(ring, g, vec![e], vec![])));
            continue;
        }
        // A source: w = sum of p p* over paths of length N from w, and each endpoint
        // of such a long path lies downstream of a cycle, so it receives a path q of
        // length N + 1 with p p* = (p q*)(q p*).
        let n = g.vertices();
        for p in paths_from(g, w, n) {
            let end = g.range(*p.last().expect("n >= 1"));
            let q = path_into(g, end, n + 1).ok_or_else(|| {
                Error::Internal(format!("no path of length {} into v{}", n + 1, end + 1))
            })?;
            neg.push((path_elem(ring, g, p.clone(), q.clone()), path_elem(ring, g, q, p)));
        }
    }
    Ok(StrongGradingWitness { pos, neg })
}

fn relation_witness(ring: &Arc<GradedRingSpec>, degrees: &[i64; 4]) -> Result<StrongGradingWitness> {
    let gen = |i: usize| generator(ring, ["A", "B", "C", "D"][i], false);
    let mut pos = vec![];
    let mut neg = vec![];
    for (a, b) in [(0usize, 1usize), (2, 3)] {
        let (x, y) = match degrees[a] {
            1 => (gen(a)?, gen(b)?),
            -1 => (gen(b)?, gen(a)?),
            _ => {
                return Err(Error::InvalidSpec(format!(
                    "no strong grading witness for generator degrees {degrees:?}"
                )))
            }
        };
        neg.push((y.clone(), x.clone()));
        pos.push((x, y));
    }
    Ok(StrongGradingWitness { pos, neg })
}
