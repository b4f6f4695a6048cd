use std::collections::BTreeMap;

use crate::algebra::smith::{inverse, smith};
use crate::algebra::{LaurentRing, Matrix, Support};
use crate::error::{Error, Result};
use crate::homology::{base_change, homology, ChainComplex, ChainMap, Mat, RingMap};

/// `D ≅ ⊕_k D(k, E_k)` with the basis changes realizing it.
#[derive(Clone, Debug)]
pub struct AcyclicDecomposition {
    /// `(level, rank E_level)` for every nonzero summand, lowest level first.
    pub summands: Vec<(i64, usize)>,
    /// Block form with `D_k = E_{k+1} ⊕ E_k` and `d_k` the identity from the `E_k` block
    /// onto the `E_k` block of `D_{k-1}`.
    pub standard: ChainComplex,
    /// Columns of `basis[k]` are the new basis of `D_k`; `D.d(k) * basis[k] = basis[k-1] * standard.d(k)`.
    pub basis: BTreeMap<i64, Mat>,
}

impl AcyclicDecomposition {
    /// `basis[k-1] * standard.d(k) * basis[k]^{-1}`, which must reproduce `D`.
    pub fn reassemble(&self) -> Result<ChainComplex> {
        let c = &self.standard;
        let ring = c.ring();
        let mut inv = BTreeMap::new();
        for (k, p) in &self.basis {
            let q = inverse(&ring, p)?.ok_or_else(|| Error::Internal(format!("basis change in degree {k} is singular")))?;
            inv.insert(*k, q);
        }
        let diffs = (c.bottom() + 1..=c.top())
            .map(|k| self.basis[&(k - 1)].mul(&ring, &c.d(k)).mul(&ring, &inv[&k]))
            .collect();
        ChainComplex::new(ring, c.bottom(), c.ranks().to_vec(), diffs)
    }

    /// The iso `standard -> D` as a chain map.
    pub fn iso_to(&self, d: &ChainComplex) -> Result<ChainMap> {
        ChainMap::new(self.standard.clone(), d.clone(), self.basis.clone())
    }
}

/// `⊕ D(k, rank_k)` in the block layout of [`AcyclicDecomposition::standard`].
pub fn standard_complex(ring: LaurentRing, bottom: i64, ranks_of_d: &BTreeMap<i64, usize>, len: usize) -> ChainComplex {
    let r = |k: i64| ranks_of_d.get(&k).copied().unwrap_or(0);
    let top = bottom + len as i64 - 1;
    let ranks = (bottom..=top).map(|k| r(k + 1) + r(k)).collect();
    let diffs = (bottom + 1..=top)
        .map(|k| {
            // rows: E_k ⊕ E_{k-1}, cols: E_{k+1} ⊕ E_k
            let mut m = Matrix::zero(&ring, r(k) + r(k - 1), r(k + 1) + r(k));
            for i in 0..r(k) {
                m.set(i, r(k + 1) + i, crate::algebra::Laurent::constant(num_traits::One::one()));
            }
            m
        })
        .collect();
    ChainComplex::new(ring, bottom, ranks, diffs).expect("standard shapes")
}

/// Splits an acyclic complex over a Euclidean coefficient ring into elementary pieces.
pub fn split_acyclic(d: &ChainComplex) -> Result<AcyclicDecomposition> {
    let ring = d.ring();
    let h = homology(d)?;
    if let Some(bad) = h.degrees.iter().find(|x| !x.is_zero()) {
        return Err(Error::NotAcyclic(bad.degree));
    }
    // W_k: first rank(d_k) columns of the right transform of d_k; they map onto a basis of im d_k.
    let mut complement: BTreeMap<i64, Mat> = BTreeMap::new();
    let mut ranks_of_d: BTreeMap<i64, usize> = BTreeMap::new();
    for k in d.bottom() + 1..=d.top() {
        let s = smith(&ring, d.d_ref(k).expect("stored"))?;
        let cols: Vec<usize> = (0..s.rank).collect();
        complement.insert(k, s.right.select_columns(&cols));
        if s.rank > 0 {
            ranks_of_d.insert(k, s.rank);
        }
    }
    let w = |k: i64| complement.get(&k).cloned().unwrap_or_else(|| Matrix::zero(&ring, d.rank(k), 0));
    let mut basis = BTreeMap::new();
    for k in d.degrees() {
        let boundaries = d.d(k + 1).mul(&ring, &w(k + 1));
        basis.insert(k, boundaries.hstack(&w(k)));
    }
    let standard = standard_complex(ring, d.bottom(), &ranks_of_d, d.ranks().len());
    let summands = ranks_of_d.into_iter().collect();
    let out = AcyclicDecomposition { summands, standard, basis };
    // exact certificate: the basis change is a chain iso
    out.iso_to(d)?;
    for (k, p) in &out.basis {
        if inverse(&ring, p)?.is_none() {
            return Err(Error::Internal(format!("split basis in degree {k} is not invertible")));
        }
    }
    Ok(out)
}

/// Result of lifting an acyclic complex along `L -> R`.
#[derive(Clone, Debug)]
pub struct AcyclicLift {
    /// `(level, rank)` of added elementary summands; the stabilization is `D ⊕ ⊕ D(level, rank)`.
    pub pads: Vec<(i64, usize)>,
    pub stabilized: ChainComplex,
    /// Acyclic complex over `L`.
    pub lifted: ChainComplex,
    /// `lifted ⊗ R -> stabilized`, checked as an exact chain isomorphism.
    pub iso: ChainMap,
}

/// Lifts an acyclic complex over `R` to one over `R_{<=0}` or `R_{>=0}`.
///
/// Free modules are induced, so no padding is needed: the elementary block form has
/// entries 0 and 1 only.
pub fn lift_acyclic(d: &ChainComplex, target: Support) -> Result<AcyclicLift> {
    let ring = d.ring();
    let along = match target {
        Support::NonPos => RingMap::LocalizeNonPos,
        Support::NonNeg => RingMap::LocalizeNonNeg,
        other => return Err(Error::InvalidSpec(format!("lift target must be Rle0 or Rge0, got {}", other.tag()))),
    };
    if ring.support != Support::Full {
        return Err(Error::TagMismatch { tag: along.tag().into(), found: ring.support.tag().into() });
    }
    let split = split_acyclic(d)?;
    let lifted = split.standard.with_ring(ring.with_support(target));
    let induced = base_change(along, &lifted)?;
    let iso = ChainMap::new(induced, d.clone(), split.basis.clone())?;
    Ok(AcyclicLift { pads: vec![], stabilized: d.clone(), lifted, iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::lp;
    use crate::algebra::BaseRing;
    use crate::homology::is_acyclic;

    fn full() -> LaurentRing {
        LaurentRing::new(BaseRing::Rationals, Support::Full)
    }

    #[test]
    fn elementary_complex_is_one_summand() {
        let d = ChainComplex::elementary(full(), 3, 2);
        let s = split_acyclic(&d).unwrap();
        assert_eq!(s.summands, vec![(3, 2)]);
        assert_eq!(s.reassemble().unwrap(), d);
    }

    #[test]
    fn multiplication_by_t_lifts_to_the_identity() {
        let d = ChainComplex::new(full(), 0, vec![1, 1], vec![Matrix::from_rows(vec![vec![lp(&[(1, 1)])]], 1)]).unwrap();
        let lift = lift_acyclic(&d, Support::NonPos).unwrap();
        assert!(lift.pads.is_empty());
        assert_eq!(lift.lifted.d(1).get(0, 0), &lp(&[(0, 1)]));
        assert_eq!(lift.lifted.ring().support, Support::NonPos);
        assert!(is_acyclic(&lift.lifted).unwrap());
    }

    #[test]
    fn non_acyclic_input_is_refused() {
        let c = ChainComplex::concentrated(full(), 0, 1);
        assert_eq!(split_acyclic(&c).unwrap_err(), Error::NotAcyclic(0));
    }
}
