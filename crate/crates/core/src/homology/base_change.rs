use std::fmt;
use std::str::FromStr;

use super::complex::{ChainComplex, ChainMap, Mat};
use crate::algebra::{Laurent, LaurentRing, Support};
use crate::error::{Error, Result};

/// The six structure maps between `R_0`, `R_{>=0}`, `R_{<=0}` and `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingMap {
    /// `R_0 -> R_{<=0}`
    IncludeNonPos,
    /// `R_0 -> R_{>=0}`
    IncludeNonNeg,
    /// `R_{<=0} -> R`
    LocalizeNonPos,
    /// `R_{>=0} -> R`
    LocalizeNonNeg,
    /// `R_{<=0} -> R_0`, killing `t^-1`
    AugmentNonPos,
    /// `R_{>=0} -> R_0`, killing `t`
    AugmentNonNeg,
}

impl RingMap {
    pub const ALL: [RingMap; 6] = [
        RingMap::IncludeNonPos,
        RingMap::IncludeNonNeg,
        RingMap::LocalizeNonPos,
        RingMap::LocalizeNonNeg,
        RingMap::AugmentNonPos,
        RingMap::AugmentNonNeg,
    ];

    pub fn domain(self) -> Support {
        match self {
            RingMap::IncludeNonPos | RingMap::IncludeNonNeg => Support::Zero,
            RingMap::LocalizeNonPos | RingMap::AugmentNonPos => Support::NonPos,
            RingMap::LocalizeNonNeg | RingMap::AugmentNonNeg => Support::NonNeg,
        }
    }

    pub fn codomain(self) -> Support {
        match self {
            RingMap::IncludeNonPos => Support::NonPos,
            RingMap::IncludeNonNeg => Support::NonNeg,
            RingMap::LocalizeNonPos | RingMap::LocalizeNonNeg => Support::Full,
            RingMap::AugmentNonPos | RingMap::AugmentNonNeg => Support::Zero,
        }
    }

    /// Short name: `i-`, `i+`, `j-`, `j+`, `p-`, `p+`.
    pub fn tag(self) -> &'static str {
        match self {
            RingMap::IncludeNonPos => "i-",
            RingMap::IncludeNonNeg => "i+",
            RingMap::LocalizeNonPos => "j-",
            RingMap::LocalizeNonNeg => "j+",
            RingMap::AugmentNonPos => "p-",
            RingMap::AugmentNonNeg => "p+",
        }
    }

    pub fn apply(self, x: &Laurent) -> Laurent {
        match self {
            RingMap::AugmentNonPos | RingMap::AugmentNonNeg => Laurent::constant(x.coeff(0)),
            _ => x.clone(),
        }
    }

    fn check(self, ring: LaurentRing) -> Result<LaurentRing> {
        if ring.support != self.domain() {
            return Err(Error::TagMismatch {
                tag: self.tag().into(),
                found: ring.support.tag().into(),
            });
        }
        Ok(ring.with_support(self.codomain()))
    }

    fn apply_matrix(self, m: &Mat) -> Mat {
        m.map(|x| self.apply(x))
    }
}

impl fmt::Display for RingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for RingMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RingMap::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown ring map {s:?}; expected one of i-, i+, j-, j+, p-, p+")))
    }
}

/// `C ⊗ target`, entrywise on the differentials.
pub fn base_change(map: RingMap, c: &ChainComplex) -> Result<ChainComplex> {
    let ring = map.check(c.ring())?;
    let diffs = c.differentials().iter().map(|d| map.apply_matrix(d)).collect();
    ChainComplex::new(ring, c.bottom(), c.ranks().to_vec(), diffs)
}

pub fn base_change_map(map: RingMap, f: &ChainMap) -> Result<ChainMap> {
    let source = base_change(map, f.source())?;
    let target = base_change(map, f.target())?;
    let comps = f.components().iter().map(|(k, m)| (*k, map.apply_matrix(m))).collect();
    ChainMap::unchecked(source, target, comps)
}
