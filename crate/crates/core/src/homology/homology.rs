use super::complex::{ChainComplex, ChainMap};
use super::constructions::mapping_cone;
use crate::algebra::laurent::render_laurent;
use crate::algebra::smith::invariant_factors;
use crate::algebra::{EuclideanRing, Laurent, LaurentRing, Support};
use crate::error::Result;

/// `H_k ≅ R^free_rank ⊕ ⊕ R/(torsion_i)` with non-unit torsion factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHomology {
    pub degree: i64,
    pub free_rank: usize,
    pub torsion: Vec<Laurent>,
}

impl DegreeHomology {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn render(&self, ring: &LaurentRing) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let name = ring_name(ring);
        let mut parts = vec![];
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 { name.clone() } else { format!("{name}^{}", self.free_rank) });
        }
        for f in &self.torsion {
            parts.push(format!("{name}/({})", render_laurent(f)));
        }
        parts.join(" + ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub ring: LaurentRing,
    pub degrees: Vec<DegreeHomology>,
}

impl Homology {
    pub fn is_zero(&self) -> bool {
        self.degrees.iter().all(DegreeHomology::is_zero)
    }

    pub fn at(&self, k: i64) -> Option<&DegreeHomology> {
        self.degrees.iter().find(|h| h.degree == k)
    }
}

/// Human-readable name such as `Q[t,t^-1]` or `Z`.
pub fn ring_name(ring: &LaurentRing) -> String {
    let base = match ring.base {
        crate::algebra::BaseRing::Prime(p) => format!("F{p}"),
        b => b.tag(),
    };
    match ring.support {
        Support::Zero => base,
        Support::NonNeg => format!("{base}[t]"),
        Support::NonPos => format!("{base}[t^-1]"),
        Support::Full => format!("{base}[t,t^-1]"),
    }
}

/// Homology in every stored degree via Smith normal form of each differential.
pub fn homology(c: &ChainComplex) -> Result<Homology> {
    let ring = c.ring();
    let factors = c
        .differentials()
        .iter()
        .map(|d| invariant_factors(&ring, d))
        .collect::<Result<Vec<_>>>()?;
    // factors of d_k, empty outside the stored range
    let of = |k: i64| -> &[Laurent] {
        let i = k - c.bottom() - 1;
        if i >= 0 && (i as usize) < factors.len() {
            &factors[i as usize]
        } else {
            &[]
        }
    };
    let degrees = c
        .degrees()
        .map(|k| {
            let outgoing = of(k).len();
            let incoming = of(k + 1);
            DegreeHomology {
                degree: k,
                free_rank: c.rank(k) - outgoing - incoming.len(),
                torsion: incoming.iter().filter(|f| !ring.is_unit(f)).cloned().collect(),
            }
        })
        .collect();
    Ok(Homology { ring, degrees })
}

pub fn is_acyclic(c: &ChainComplex) -> Result<bool> {
    Ok(homology(c)?.is_zero())
}

/// A chain map is a quasi-isomorphism exactly when its cone is acyclic.
pub fn is_quasi_iso(f: &ChainMap) -> Result<bool> {
    is_acyclic(&mapping_cone(f)?)
}
