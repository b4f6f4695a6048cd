use super::base_change::{base_change, RingMap};
use super::complex::ChainComplex;
use super::homology::{homology, Homology};
use crate::algebra::Support;
use crate::error::{Error, Result};

pub const DEFAULT_WITNESS_CAP: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domination {
    /// `C ⊗ R` is acyclic.
    pub dominated: bool,
    /// Smallest `n` with `t^n: C -> C` null-homotopic over `R_{>=0}`; `None` when not
    /// dominated or when `n` exceeds the cap.
    pub witness: Option<u32>,
    pub cap: u32,
    pub laurent_homology: Homology,
}

/// Decides `R_0`-finite domination of a free complex over `R_{>=0}` by acyclicity of
/// `C ⊗ R`, then searches for the witness exponent.
pub fn r0_finite_domination(c: &ChainComplex, cap: u32) -> Result<Domination> {
    let ring = c.ring();
    if ring.support != Support::NonNeg {
        return Err(Error::TagMismatch { tag: "Rge0".into(), found: ring.support.tag().into() });
    }
    if !ring.base.is_field() {
        return Err(Error::Capability(format!(
            "finite domination needs a field of coefficients, got {}",
            ring.base
        )));
    }
    let laurent_homology = homology(&base_change(RingMap::LocalizeNonNeg, c)?)?;
    let dominated = laurent_homology.is_zero();
    let witness = if dominated { null_homotopy_exponent(c)?.filter(|&n| n <= cap) } else { None };
    Ok(Domination { dominated, witness, cap, laurent_homology })
}

/// Over the PID `k[t]` a bounded free complex splits into summands `R` and
/// `R --d--> R`. On the latter `t^n` is null-homotopic iff `d | t^n`; on the former never.
/// So the exponent is the largest `m` over torsion factors `t^m` of `H_*(C)`, and
/// there is none when homology has a free part or a factor that is not a power of `t`.
fn null_homotopy_exponent(c: &ChainComplex) -> Result<Option<u32>> {
    let h = homology(c)?;
    let mut n = 0u32;
    for degree in &h.degrees {
        if degree.free_rank > 0 {
            return Ok(None);
        }
        for f in &degree.torsion {
            match f.as_monomial() {
                Some((_, m)) => n = n.max(m as u32),
                None => return Ok(None),
            }
        }
    }
    Ok(Some(n))
}
