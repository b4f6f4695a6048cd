//! Complexes of sheaves on the projective line over the Laurent ring.
//!
//! A sheaf is a triple `Y⁻ -> Y⁰ <- Y⁺` of free complexes over `R_{<=0}`, `R` and
//! `R_{>=0}`. Free modules over the half rings come with canonical bases, so
//! `R_{<=k} = t^k R_{<=0}` and every structure map is a matrix over `R`.

mod cohomology;
mod sheaf;

use serde::Serialize;

pub use cohomology::{cohomology, GradedPiece, LevelCohomology, SheafCohomology};
pub use sheaf::{h_equivalence_class, psi, twist, twisting_sheaf, HClasses, SheafComplex, SheafMorphism, SheafViolation};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProbePoint {
    pub k: i64,
    pub l: i64,
    pub h1: usize,
    pub pass: bool,
}

/// Outcome of a finite search for twists with nonzero `H¹`. Passing is evidence,
/// not a proof, that the sheaf belongs to the subcategory cut out by the vanishing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vect0Probe {
    pub window: i64,
    pub points: Vec<ProbePoint>,
    pub pass: bool,
    pub first_failure: Option<(i64, i64)>,
    pub note: &'static str,
}

/// Checks `H¹(Y(k, l)) = 0` for `|k|, |l| <= window` with `k + l >= 0`.
pub fn vect0_probe(y: &SheafComplex, window: i64) -> Result<Vect0Probe> {
    y.check_sheaf_condition()?;
    let mut points = vec![];
    for k in -window..=window {
        for l in (-window..=window).filter(|l| k + l >= 0) {
            let h1 = cohomology(&twist(y, k, l)?)?.h1_total();
            points.push(ProbePoint { k, l, h1, pass: h1 == 0 });
        }
    }
    let first_failure = points.iter().find(|p| !p.pass).map(|p| (p.k, p.l));
    Ok(Vect0Probe {
        window,
        pass: first_failure.is_none(),
        points,
        first_failure,
        note: "finite probe over the window only; not a membership proof",
    })
}
