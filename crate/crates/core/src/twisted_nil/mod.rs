//! Twisted endomorphisms `α: C ⊗ R_{±1} -> C` of complexes over `R_0` in the Laurent
//! family, identified with plain chain endomorphisms through `R_{±1} = t^{±1} R_0`.
//!
//! Nilpotency up to homotopy is decided through the mapping half-torus: `α` is
//! homotopy nilpotent exactly when the half-torus becomes acyclic over `R`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::smith::{image_basis, rank, solve};
use crate::algebra::{BaseRing, Laurent, LaurentRing, Matrix, Ring, Support};
use crate::error::{Error, Result};
use crate::homology::{
    base_change, homology, mapping_cone, ChainComplex, ChainMap, Homology, Mat, RingMap,
};
use crate::ring_kernel::{strong_grading_witness, GradedElement, GradedRingSpec, StrongGradingWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn exponent(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    /// The half ring `C ⊗ R_{>=0}` or `C ⊗ R_{<=0}` lives over.
    pub fn half(self) -> Support {
        match self {
            Sign::Positive => Support::NonNeg,
            Sign::Negative => Support::NonPos,
        }
    }

    fn include(self) -> RingMap {
        match self {
            Sign::Positive => RingMap::IncludeNonNeg,
            Sign::Negative => RingMap::IncludeNonPos,
        }
    }

    fn localize(self) -> RingMap {
        match self {
            Sign::Positive => RingMap::LocalizeNonNeg,
            Sign::Negative => RingMap::LocalizeNonPos,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedEndomorphism {
    alpha: ChainMap,
    sign: Sign,
}

impl TwistedEndomorphism {
    /// `alpha` must be a chain endomorphism of a complex over `R_0`.
    pub fn new(alpha: ChainMap, sign: Sign) -> Result<Self> {
        if alpha.source() != alpha.target() {
            return Err(Error::Shape("a twisted endomorphism needs source = target".into()));
        }
        if alpha.ring().support != Support::Zero {
            return Err(Error::TagMismatch { tag: "R0".into(), found: alpha.ring().support.tag().into() });
        }
        Ok(Self { alpha, sign })
    }

    pub fn zero(c: &ChainComplex, sign: Sign) -> Result<Self> {
        Self::new(ChainMap::zero(c, c), sign)
    }

    pub fn complex(&self) -> &ChainComplex {
        self.alpha.source()
    }

    pub fn alpha(&self) -> &ChainMap {
        &self.alpha
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn base(&self) -> BaseRing {
        self.alpha.ring().base
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.sign != other.sign {
            return Err(Error::InvalidSpec("direct sum of twisted endomorphisms of opposite sign".into()));
        }
        Self::new(self.alpha.direct_sum(&other.alpha)?, self.sign)
    }
}

/// `α^(n)`; `α^(0)` is the identity.
pub fn iterate(e: &TwistedEndomorphism, n: u32) -> Result<ChainMap> {
    let mut out = ChainMap::identity(e.complex());
    for _ in 0..n {
        out = e.alpha.compose(&out)?;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Nilpotency {
    pub nilpotent: bool,
    /// Smallest `n` with `α^(n) = 0`.
    pub index: Option<u32>,
    pub bound: u32,
}

/// Strict nilpotency by direct iteration up to `bound`.
pub fn is_nilpotent(e: &TwistedEndomorphism, bound: u32) -> Result<Nilpotency> {
    let mut power = ChainMap::identity(e.complex());
    for n in 0..=bound {
        if power.is_zero() {
            return Ok(Nilpotency { nilpotent: true, index: Some(n), bound });
        }
        power = e.alpha.compose(&power)?;
    }
    Ok(Nilpotency { nilpotent: false, index: None, bound })
}

/// `Σ λ_j μ_j` where `x_j = λ_j t^{±1}` and `y_j t^{±1} = μ_j`; equals 1 for any valid witness.
fn witness_scalar(base: BaseRing, witness: &StrongGradingWitness, sign: Sign) -> Result<Laurent> {
    let ring = Arc::new(GradedRingSpec::laurent(base));
    let s = sign.exponent();
    let t_out = GradedElement::from_laurent(&ring, &Laurent::monomial(num_traits::One::one(), -s))?;
    let t_in = GradedElement::from_laurent(&ring, &Laurent::monomial(num_traits::One::one(), s))?;
    let mut acc = GradedElement::zero(&ring);
    for (x, y) in witness.pairs(s) {
        if x.ring().family != ring.family || x.ring().base != base {
            return Err(Error::MixedRings);
        }
        let lambda = t_out.mul(x)?;
        let mu = y.mul(&t_in)?;
        acc = acc.add(&lambda.mul(&mu)?)?;
    }
    let scalar = acc
        .to_laurent()
        .filter(|p| p.max_deg().unwrap_or(0) == 0 && p.min_deg().unwrap_or(0) == 0)
        .ok_or_else(|| Error::Internal("witness scalar is not in degree zero".into()))?;
    Ok(scalar)
}

/// The map `χ: C ⊗ R_{>=1} -> C ⊗ R_{>=0}` with the source identified with
/// `C ⊗ R_{>=0}` through `t`, giving the matrix `t - α` (or `t^-1 - α` for negative sign).
pub fn chi(e: &TwistedEndomorphism) -> Result<ChainMap> {
    let w = strong_grading_witness(&Arc::new(GradedRingSpec::laurent(e.base())))?;
    chi_with_witness(e, &w)
}

pub fn chi_with_witness(e: &TwistedEndomorphism, witness: &StrongGradingWitness) -> Result<ChainMap> {
    let scalar = witness_scalar(e.base(), witness, e.sign)?;
    let c = base_change(e.sign.include(), e.complex())?;
    let ring = c.ring();
    let t = Laurent::monomial(num_traits::One::one(), e.sign.exponent());
    let comps = c
        .degrees()
        .map(|k| {
            let a = e.alpha.component(k).map(|x| ring.mul(x, &scalar));
            (k, Matrix::scalar(&ring, c.rank(k), &t).sub(&ring, &a))
        })
        .collect();
    ChainMap::new(c.clone(), c, comps)
}

/// Exact identities certifying `0 -> C ⊗ R_{>=1} -> C ⊗ R_{>=0} -> C^α -> 0` on a window
/// of t-degrees `0..=window`, together with the `R_0`-splittings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceCertificate {
    pub window: u32,
    pub levels: Vec<i64>,
    /// `π χ = 0`.
    pub composite_vanishes: bool,
    /// `ρ χ = id`, so `χ` is injective.
    pub chi_split_injective: bool,
    /// `π σ = id`, so `π` is surjective.
    pub pi_split_surjective: bool,
    /// `χ ρ + σ π = id`, so `ker π = im χ`.
    pub middle_exact: bool,
    /// `χ` and `π` commute with the differentials.
    pub natural_in_degree: bool,
}

impl SequenceCertificate {
    pub fn holds(&self) -> bool {
        self.composite_vanishes
            && self.chi_split_injective
            && self.pi_split_surjective
            && self.middle_exact
            && self.natural_in_degree
    }
}

/// Truncated matrices over `R_0` for one chain level: source has t-degrees `1..=n`,
/// middle `0..=n`, target is `C_k` itself.
struct Window {
    chi: Mat,
    pi: Mat,
    rho: Mat,
    sigma: Mat,
}

fn window_maps(ring: &LaurentRing, a: &Mat, n: usize) -> Window {
    let r = a.rows();
    let one = ring.one();
    let mut chi = Matrix::zero(ring, r * (n + 1), r * n);
    // e t^j -> e t^j - A e t^{j-1}; block j of the middle holds t-degree j
    for j in 1..=n {
        for i in 0..r {
            chi.set(j * r + i, (j - 1) * r + i, one.clone());
            for p in 0..r {
                chi.set((j - 1) * r + p, (j - 1) * r + i, ring.neg(a.get(p, i)));
            }
        }
    }
    let mut powers = vec![Matrix::identity(ring, r)];
    for j in 1..=n {
        let next = a.mul(ring, &powers[j - 1]);
        powers.push(next);
    }
    // π(e t^j) = A^j e
    let mut pi = Matrix::zero(ring, r, r * (n + 1));
    for (j, pw) in powers.iter().enumerate() {
        for p in 0..r {
            for i in 0..r {
                pi.set(p, j * r + i, pw.get(p, i).clone());
            }
        }
    }
    // ρ(e t^j) = Σ_{i<j} A^i e t^{j-i}
    let mut rho = Matrix::zero(ring, r * n, r * (n + 1));
    for j in 1..=n {
        for i in 0..j {
            let target = j - i;
            for p in 0..r {
                for q in 0..r {
                    let cur = ring.add(rho.get((target - 1) * r + p, j * r + q), powers[i].get(p, q));
                    rho.set((target - 1) * r + p, j * r + q, cur);
                }
            }
        }
    }
    let sigma = Matrix::identity(ring, r).vstack(&Matrix::zero(ring, r * n, r));
    Window { chi, pi, rho, sigma }
}

/// Checks the characteristic sequence of `e` degreewise; the window covers every
/// t-degree touched by `χ` plus one power of `α` per unit of rank.
pub fn characteristic_sequence(e: &TwistedEndomorphism) -> Result<SequenceCertificate> {
    let c = e.complex();
    let ring = c.ring();
    let n = 2 + c.ranks().iter().copied().max().unwrap_or(0);
    let mut cert = SequenceCertificate {
        window: n as u32,
        levels: c.degrees().collect(),
        composite_vanishes: true,
        chi_split_injective: true,
        pi_split_surjective: true,
        middle_exact: true,
        natural_in_degree: true,
    };
    let windows: BTreeMap<i64, Window> = c.degrees().map(|k| (k, window_maps(&ring, &e.alpha.component(k), n))).collect();
    for (k, w) in &windows {
        let r = c.rank(*k);
        cert.composite_vanishes &= w.pi.mul(&ring, &w.chi).is_zero(&ring);
        cert.chi_split_injective &= w.rho.mul(&ring, &w.chi) == Matrix::identity(&ring, r * n);
        cert.pi_split_surjective &= w.pi.mul(&ring, &w.sigma) == Matrix::identity(&ring, r);
        let id = w.chi.mul(&ring, &w.rho).add(&ring, &w.sigma.mul(&ring, &w.pi));
        cert.middle_exact &= id == Matrix::identity(&ring, r * (n + 1));
    }
    for k in c.degrees().skip(1) {
        let d = c.d(k);
        let blocks = |copies: usize| {
            let parts: Vec<&Mat> = std::iter::repeat(&d).take(copies).collect();
            Matrix::block_diag(&ring, &parts)
        };
        let (wk, wl) = (&windows[&k], &windows[&(k - 1)]);
        cert.natural_in_degree &= blocks(n + 1).mul(&ring, &wk.chi) == wl.chi.mul(&ring, &blocks(n));
        cert.natural_in_degree &= d.mul(&ring, &wk.pi) == wl.pi.mul(&ring, &blocks(n + 1));
    }
    Ok(cert)
}

#[derive(Clone, Debug)]
pub struct HalfTorus {
    pub chi: ChainMap,
    /// `cone(χ)` over the half ring of the sign.
    pub complex: ChainComplex,
}

pub fn half_torus(e: &TwistedEndomorphism) -> Result<HalfTorus> {
    let chi = chi(e)?;
    let complex = mapping_cone(&chi)?;
    Ok(HalfTorus { chi, complex })
}

/// Certifies that the half-torus computes `C^α`: its homology is torsion and has the
/// same total dimension over the base field as the homology of `C` in each degree.
pub fn half_torus_certificate(e: &TwistedEndomorphism) -> Result<bool> {
    require_field(e)?;
    let t = half_torus(e)?;
    let ht = homology(&t.complex)?;
    let hc = homology(e.complex())?;
    Ok(e.complex().degrees().chain(t.complex.degrees()).all(|k| {
        let dim_c = hc.at(k).map_or(0, |h| h.free_rank);
        match ht.at(k) {
            None => dim_c == 0,
            Some(h) => {
                // dim_k k[t]/(f) is the degree of f in t (or in t^-1)
                let degree = |f: &Laurent| match e.sign {
                    Sign::Positive => f.max_deg().unwrap(),
                    Sign::Negative => -f.min_deg().unwrap(),
                };
                let torsion_dim: i64 = h.torsion.iter().map(degree).sum();
                h.free_rank == 0 && torsion_dim as usize == dim_c
            }
        }
    }))
}

fn require_field(e: &TwistedEndomorphism) -> Result<()> {
    if e.base().is_field() {
        Ok(())
    } else {
        Err(Error::Capability(format!(
            "homotopy nilpotency is decided over a field of coefficients, got {}",
            e.base()
        )))
    }
}

/// Homology of the half-torus after inverting `t`.
pub fn localized_half_torus_homology(e: &TwistedEndomorphism) -> Result<Homology> {
    require_field(e)?;
    let t = half_torus(e)?;
    homology(&base_change(e.sign.localize(), &t.complex)?)
}

/// `T(C, α) ⊗ R` is acyclic.
pub fn is_homotopy_nilpotent(e: &TwistedEndomorphism) -> Result<bool> {
    Ok(localized_half_torus_homology(e)?.is_zero())
}

/// Independent check over the base field: `α` is homotopy nilpotent iff the stable
/// image `im α^N` (with `N` the largest rank), a subcomplex on which `α` is
/// invertible, is acyclic.
pub fn stable_image_is_acyclic(e: &TwistedEndomorphism) -> Result<bool> {
    require_field(e)?;
    let c = e.complex();
    let ring = c.ring();
    let n = c.ranks().iter().copied().max().unwrap_or(0) as u32;
    let power = iterate(e, n)?;
    let bases: BTreeMap<i64, Mat> =
        c.degrees().map(|k| Ok((k, image_basis(&ring, &power.component(k))?))).collect::<Result<_>>()?;
    let basis = |k: i64| bases.get(&k).cloned().unwrap_or_else(|| Matrix::zero(&ring, c.rank(k), 0));
    let mut ranks_d = BTreeMap::new();
    for k in c.degrees().skip(1) {
        let pushed = c.d(k).mul(&ring, &basis(k));
        let restricted = solve(&ring, &basis(k - 1), &pushed)?
            .ok_or_else(|| Error::Internal(format!("stable image is not a subcomplex in degree {k}")))?;
        ranks_d.insert(k, rank(&ring, &restricted)?);
    }
    Ok(c.degrees().all(|k| {
        let dim = basis(k).cols();
        dim == ranks_d.get(&k).copied().unwrap_or(0) + ranks_d.get(&(k + 1)).copied().unwrap_or(0)
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilMembership {
    pub sign: Sign,
    /// Free of finite rank, hence projective over `R_0`.
    pub projective: bool,
    /// Bounded and finitely generated, hence finitely dominated over `R_0`.
    pub finitely_dominated: bool,
    pub strictly_nilpotent: Option<u32>,
    pub homotopy_nilpotent: bool,
    /// Acyclicity of `T(C, α) ⊗ R` agrees with the stable-image test.
    pub cross_check_agrees: bool,
    pub half_torus_certified: bool,
    pub member: bool,
    pub failures: Vec<String>,
}

pub fn nil_membership(e: &TwistedEndomorphism) -> Result<NilMembership> {
    let homotopy_nilpotent = is_homotopy_nilpotent(e)?;
    let stable = stable_image_is_acyclic(e)?;
    let bound = e.complex().ranks().iter().copied().max().unwrap_or(0) as u32 + 1;
    let strict = is_nilpotent(e, bound)?;
    let mut failures = vec![];
    if !homotopy_nilpotent {
        failures.push("alpha is not homotopy nilpotent: T(C, alpha) tensor R has homology".to_string());
    }
    if homotopy_nilpotent != stable {
        failures.push("half-torus verdict disagrees with the stable-image test".to_string());
    }
    let certified = half_torus_certificate(e)?;
    if !certified {
        failures.push("half-torus homology does not match C^alpha".to_string());
    }
    Ok(NilMembership {
        sign: e.sign,
        projective: true,
        finitely_dominated: true,
        strictly_nilpotent: strict.index,
        homotopy_nilpotent,
        cross_check_agrees: homotopy_nilpotent == stable,
        half_torus_certified: certified,
        member: homotopy_nilpotent,
        failures,
    })
}
