use std::collections::BTreeMap;

use super::complex::{ChainComplex, ChainMap};
use crate::algebra::Matrix;
use crate::error::Result;

fn degree_span(a: &ChainComplex, b: &ChainComplex) -> Option<(i64, i64)> {
    let parts: Vec<_> = [a, b].into_iter().filter(|c| c.total_rank() > 0).collect();
    if parts.is_empty() {
        return None;
    }
    let lo = parts.iter().map(|c| c.bottom()).min().unwrap();
    let hi = parts.iter().map(|c| c.top()).max().unwrap();
    Some((lo, hi))
}

/// `cone(f)_k = X_{k-1} ⊕ Y_k` with `d = [[-d_X, 0], [f, d_Y]]`.
pub fn mapping_cone(f: &ChainMap) -> Result<ChainComplex> {
    let (x, y) = (f.source(), f.target());
    let ring = f.ring();
    let shifted = x.suspension();
    let Some((lo, hi)) = degree_span(&shifted, y) else {
        return Ok(ChainComplex::zero(ring));
    };
    let ranks = (lo..=hi).map(|k| x.rank(k - 1) + y.rank(k)).collect();
    let diffs = (lo + 1..=hi)
        .map(|k| {
            Matrix::from_blocks(
                &ring,
                &[
                    vec![x.d(k - 1).neg(&ring), Matrix::zero(&ring, x.rank(k - 2), y.rank(k))],
                    vec![f.component(k - 1), y.d(k)],
                ],
            )
        })
        .collect();
    ChainComplex::new(ring, lo, ranks, diffs)
}

/// Mapping cylinder with its structure maps.
#[derive(Clone, Debug)]
pub struct Cylinder {
    /// `cyl_k = X_k ⊕ X_{k-1} ⊕ Y_k`.
    pub complex: ChainComplex,
    /// `X -> cyl`; its cokernel is the cone, giving `X -> cyl -> cone(f)`.
    pub source_inclusion: ChainMap,
    pub target_inclusion: ChainMap,
    pub projection_to_cone: ChainMap,
    /// `cyl -> Y`, a homotopy inverse of `target_inclusion`.
    pub retraction: ChainMap,
    pub cone: ChainComplex,
}

pub fn mapping_cylinder(f: &ChainMap) -> Result<Cylinder> {
    let (x, y) = (f.source(), f.target());
    let ring = f.ring();
    let cone = mapping_cone(f)?;
    let (lo, hi) = match degree_span(x, y) {
        Some((lo, hi)) if x.total_rank() > 0 => (lo, hi.max(x.top() + 1)),
        Some(span) => span,
        None => (0, -1),
    };
    let zero = |r, c| Matrix::zero(&ring, r, c);
    let ranks: Vec<usize> = (lo..=hi).map(|k| x.rank(k) + x.rank(k - 1) + y.rank(k)).collect();
    let diffs = (lo + 1..=hi)
        .map(|k| {
            let (a, b, c) = (x.rank(k), x.rank(k - 1), y.rank(k));
            let (b1, c1) = (x.rank(k - 2), y.rank(k - 1));
            Matrix::from_blocks(
                &ring,
                &[
                    vec![x.d(k), Matrix::identity(&ring, b).neg(&ring), zero(b, c)],
                    vec![zero(b1, a), x.d(k - 1).neg(&ring), zero(b1, c)],
                    vec![zero(c1, a), f.component(k - 1), y.d(k)],
                ],
            )
        })
        .collect();
    let cyl = if ranks.is_empty() { ChainComplex::zero(ring) } else { ChainComplex::new(ring, lo, ranks, diffs)? };

    let mut src = BTreeMap::new();
    let mut tgt = BTreeMap::new();
    let mut proj = BTreeMap::new();
    let mut retr = BTreeMap::new();
    for k in lo..=hi {
        let (a, b, c) = (x.rank(k), x.rank(k - 1), y.rank(k));
        src.insert(k, Matrix::identity(&ring, a).vstack(&zero(b + c, a)));
        tgt.insert(k, zero(a + b, c).vstack(&Matrix::identity(&ring, c)));
        proj.insert(k, zero(b + c, a).hstack(&Matrix::identity(&ring, b + c)));
        retr.insert(k, f.component(k).hstack(&zero(c, b)).hstack(&Matrix::identity(&ring, c)));
    }
    Ok(Cylinder {
        source_inclusion: ChainMap::new(x.clone(), cyl.clone(), src)?,
        target_inclusion: ChainMap::new(y.clone(), cyl.clone(), tgt)?,
        projection_to_cone: ChainMap::new(cyl.clone(), cone.clone(), proj)?,
        retraction: ChainMap::new(cyl.clone(), y.clone(), retr)?,
        complex: cyl,
        cone,
    })
}

/// `D ⊕ D(k_1, m_1) ⊕ ...` with the split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Stabilization {
    pub complex: ChainComplex,
    pub inclusion: ChainMap,
    pub projection: ChainMap,
}

/// Adds elementary complexes `D(level, rank)` for each `(level, rank)` pad.
pub fn stabilize(c: &ChainComplex, pads: &[(i64, usize)]) -> Result<Stabilization> {
    let ring = c.ring();
    let mut out = c.clone();
    for &(level, rank) in pads {
        if rank > 0 {
            out = out.direct_sum(&ChainComplex::elementary(ring, level, rank))?;
        }
    }
    let mut inc = BTreeMap::new();
    let mut proj = BTreeMap::new();
    for k in out.degrees() {
        let (n, m) = (c.rank(k), out.rank(k));
        inc.insert(k, Matrix::identity(&ring, n).vstack(&Matrix::zero(&ring, m - n, n)));
        proj.insert(k, Matrix::identity(&ring, n).hstack(&Matrix::zero(&ring, n, m - n)));
    }
    Ok(Stabilization {
        inclusion: ChainMap::new(c.clone(), out.clone(), inc)?,
        projection: ChainMap::new(out.clone(), c.clone(), proj)?,
        complex: out,
    })
}
