use std::collections::BTreeMap;

use crate::algebra::{Laurent, Matrix, Ring, Support};
use crate::error::{Error, Result};
use crate::homology::{base_change, stabilize, ChainComplex, ChainMap, RingMap, Stabilization};

/// A complex over a half ring whose base change is isomorphic to the input.
#[derive(Clone, Debug)]
pub struct Truncation {
    pub lifted: ChainComplex,
    /// Basis of degree `k` is rescaled by `t^shift[k]`.
    pub shifts: BTreeMap<i64, i64>,
    /// Per differential, the largest degree (for `R_{<=0}`) or the negated smallest degree
    /// (for `R_{>=0}`) by which `d_k` leaves the half ring; zero when already inside.
    pub overshoot: BTreeMap<i64, i64>,
    /// `lifted ⊗ R -> D`, diagonal with entries `t^shift[k]`.
    pub iso: ChainMap,
}

fn localization(target: Support) -> Result<RingMap> {
    match target {
        Support::NonPos => Ok(RingMap::LocalizeNonPos),
        Support::NonNeg => Ok(RingMap::LocalizeNonNeg),
        other => Err(Error::InvalidSpec(format!("target must be Rle0 or Rge0, got {}", other.tag()))),
    }
}

/// How far the entries of `m` reach outside the half ring `target`.
fn reach(m: &Matrix<Laurent>, target: Support) -> i64 {
    let degrees = m.iter().filter_map(|x| match target {
        Support::NonPos => x.max_deg(),
        _ => x.min_deg().map(|e| -e),
    });
    degrees.max().unwrap_or(0).max(0)
}

/// Rescales the bases of `D` by powers of `t` so every differential lands in `target`.
///
/// Working down from the top degree, `shift[k-1] = shift[k] ± overshoot(d_k)`, so each
/// rescaled `d_k` is `t^(shift[k] - shift[k-1]) d_k`. Composites of rescaled
/// differentials are rescaled composites and vanish with them; the check loop only
/// guards the bookkeeping.
pub fn degree_truncation_factor(d: &ChainComplex, target: Support) -> Result<Truncation> {
    let ring = d.ring();
    let along = localization(target)?;
    if ring.support != Support::Full {
        return Err(Error::TagMismatch { tag: along.tag().into(), found: ring.support.tag().into() });
    }
    let sign = if target == Support::NonPos { 1 } else { -1 };
    let overshoot: BTreeMap<i64, i64> = (d.bottom() + 1..=d.top()).map(|k| (k, reach(&d.d(k), target))).collect();
    let naive: i64 = overshoot.values().sum();
    let cap = 4 * naive.max(1);
    let mut shifts = BTreeMap::new();
    let mut extra: BTreeMap<i64, i64> = BTreeMap::new();
    let lifted_ring = ring.with_support(target);
    loop {
        shifts.clear();
        let mut acc = 0;
        shifts.insert(d.top(), 0);
        for k in (d.bottom() + 1..=d.top()).rev() {
            acc += sign * (overshoot[&k] + extra.get(&k).copied().unwrap_or(0));
            shifts.insert(k - 1, acc);
        }
        let diffs: Vec<_> = (d.bottom() + 1..=d.top())
            .map(|k| {
                let t = ring.t_pow(shifts[&k] - shifts[&(k - 1)]);
                d.d(k).map(|x| ring.mul(&t, x))
            })
            .collect();
        let lifted = ChainComplex::new(lifted_ring, d.bottom(), d.ranks().to_vec(), diffs)?;
        match lifted.validate() {
            Ok(()) => {
                let induced = base_change(along, &lifted)?;
                let comps = d.degrees().map(|k| (k, Matrix::scalar(&ring, d.rank(k), &ring.t_pow(shifts[&k])))).collect();
                let iso = ChainMap::new(induced, d.clone(), comps)?;
                return Ok(Truncation { lifted, shifts, overshoot, iso });
            }
            Err(v) => {
                let k = v.degree;
                let e = extra.entry(k).or_insert(0);
                *e += 1;
                if extra.values().sum::<i64>() > cap {
                    return Err(Error::Internal(format!(
                        "degree enlargement exceeded 4x the naive bound {naive} at degree {k}: {v}"
                    )));
                }
            }
        }
    }
}

/// Which padding the stabilization step uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PadPolicy {
    /// No pads: free modules are already induced.
    #[default]
    Minimal,
    /// One pad `D(k+1, rank D_k)` per level with nonzero rank, as in the existence proof.
    ProofStyle,
}

#[derive(Clone, Debug)]
pub struct InducedLift {
    pub pads: Vec<(i64, usize)>,
    pub stabilization: Stabilization,
    pub truncation: Truncation,
}

/// Stabilizes `D` per `policy`, then factors the result through `target`.
pub fn make_induced(d: &ChainComplex, target: Support, policy: PadPolicy) -> Result<InducedLift> {
    let pads: Vec<(i64, usize)> = match policy {
        PadPolicy::Minimal => vec![],
        PadPolicy::ProofStyle => d.degrees().filter(|&k| d.rank(k) > 0).map(|k| (k + 1, d.rank(k))).collect(),
    };
    let stabilization = stabilize(d, &pads)?;
    let truncation = degree_truncation_factor(&stabilization.complex, target)?;
    Ok(InducedLift { pads, stabilization, truncation })
}
