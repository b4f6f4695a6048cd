use crate::algebra::smith::inverse;
use crate::algebra::{BaseRing, Laurent, LaurentRing, Matrix, Support};
use crate::error::{Error, Result};
use crate::homology::{base_change, base_change_map, is_quasi_iso, ChainComplex, ChainMap, RingMap};

/// A complex of sheaves `Y⁻ -> Y⁰ <- Y⁺` with free components over `R_{<=0}`, `R` and
/// `R_{>=0}`. The structure maps are stored through their adjoints over `R`, which
/// have the same matrices in the chosen bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheafComplex {
    minus: ChainComplex,
    zero: ChainComplex,
    plus: ChainComplex,
    upsilon_minus: ChainMap,
    upsilon_plus: ChainMap,
    twist: (i64, i64),
}

/// Which adjoint map fails to be invertible, and where.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheafViolation {
    pub map: &'static str,
    pub degree: i64,
    pub reason: String,
}

impl From<SheafViolation> for Error {
    fn from(v: SheafViolation) -> Self {
        Error::SheafCondition(format!("{} in chain degree {}: {}", v.map, v.degree, v.reason))
    }
}

fn require(c: &ChainComplex, support: Support, what: &str) -> Result<()> {
    if c.ring().support != support {
        return Err(Error::TagMismatch { tag: format!("{what} over {}", support.tag()), found: c.ring().support.tag().into() });
    }
    if !c.ring().base.is_field() {
        return Err(Error::Capability(format!("sheaves are handled over a field of coefficients, got {}", c.ring().base)));
    }
    c.validate()?;
    Ok(())
}

impl SheafComplex {
    /// `upsilon_minus[k]` and `upsilon_plus[k]` are matrices over `R` from the bases of
    /// `Y⁻_k`, `Y⁺_k` to that of `Y⁰_k`; commutation with the differentials is checked.
    pub fn new(
        minus: ChainComplex,
        zero: ChainComplex,
        plus: ChainComplex,
        upsilon_minus: std::collections::BTreeMap<i64, Matrix<Laurent>>,
        upsilon_plus: std::collections::BTreeMap<i64, Matrix<Laurent>>,
        twist: (i64, i64),
    ) -> Result<Self> {
        require(&minus, Support::NonPos, "Y-")?;
        require(&zero, Support::Full, "Y0")?;
        require(&plus, Support::NonNeg, "Y+")?;
        let um = ChainMap::new(base_change(RingMap::LocalizeNonPos, &minus)?, zero.clone(), upsilon_minus)?;
        let up = ChainMap::new(base_change(RingMap::LocalizeNonNeg, &plus)?, zero.clone(), upsilon_plus)?;
        Ok(Self { minus, zero, plus, upsilon_minus: um, upsilon_plus: up, twist })
    }

    pub fn minus(&self) -> &ChainComplex {
        &self.minus
    }

    pub fn zero(&self) -> &ChainComplex {
        &self.zero
    }

    pub fn plus(&self) -> &ChainComplex {
        &self.plus
    }

    pub fn upsilon_minus(&self) -> &ChainMap {
        &self.upsilon_minus
    }

    pub fn upsilon_plus(&self) -> &ChainMap {
        &self.upsilon_plus
    }

    pub fn twist_data(&self) -> (i64, i64) {
        self.twist
    }

    pub fn base(&self) -> BaseRing {
        self.zero.ring().base
    }

    pub fn ring(&self) -> LaurentRing {
        self.zero.ring()
    }

    /// Chain degrees where any component is nonzero.
    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        let parts = [&self.minus, &self.zero, &self.plus];
        let nonzero: Vec<_> = parts.iter().filter(|c| c.total_rank() > 0).collect();
        if nonzero.is_empty() {
            return 0..=-1;
        }
        let lo = nonzero.iter().map(|c| c.bottom()).min().unwrap();
        let hi = nonzero.iter().map(|c| c.top()).max().unwrap();
        lo..=hi
    }

    /// Both adjoints are isomorphisms over `R`; square shapes are checked first.
    pub fn check_sheaf_condition(&self) -> std::result::Result<(), SheafViolation> {
        let ring = self.ring();
        for (name, map) in [("upsilon_minus#", &self.upsilon_minus), ("upsilon_plus#", &self.upsilon_plus)] {
            for k in self.degrees() {
                let m = map.component(k);
                if m.rows() != m.cols() {
                    return Err(SheafViolation {
                        map: name,
                        degree: k,
                        reason: format!("{}x{} matrix is not square", m.rows(), m.cols()),
                    });
                }
                match inverse(&ring, &m) {
                    Ok(Some(_)) => {}
                    Ok(None) => {
                        return Err(SheafViolation { map: name, degree: k, reason: "matrix is not invertible over R".into() })
                    }
                    Err(e) => return Err(SheafViolation { map: name, degree: k, reason: e.to_string() }),
                }
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let minus = self.minus.direct_sum(&other.minus)?;
        let zero = self.zero.direct_sum(&other.zero)?;
        let plus = self.plus.direct_sum(&other.plus)?;
        let um = self.upsilon_minus.direct_sum(&other.upsilon_minus)?;
        let up = self.upsilon_plus.direct_sum(&other.upsilon_plus)?;
        let twist = if self.twist == other.twist { self.twist } else { (0, 0) };
        Self::new(minus, zero, plus, um.components().clone(), up.components().clone(), twist)
    }
}

/// `O(k, l) = (R_{<=k} -> R <- R_{>=-l})` with `R_{<=k}` free on `t^k` over `R_{<=0}`.
pub fn twisting_sheaf(base: BaseRing, k: i64, l: i64) -> Result<SheafComplex> {
    let p = ChainComplex::concentrated(LaurentRing::new(base, Support::Zero), 0, 1);
    psi(&p, k, l)
}

/// `Ψ_{k,l}(P) = P ⊗ O(k, l)` for a complex `P` over `R_0`.
pub fn psi(p: &ChainComplex, k: i64, l: i64) -> Result<SheafComplex> {
    if p.ring().support != Support::Zero {
        return Err(Error::TagMismatch { tag: "R0".into(), found: p.ring().support.tag().into() });
    }
    let minus = base_change(RingMap::IncludeNonPos, p)?;
    let plus = base_change(RingMap::IncludeNonNeg, p)?;
    let zero = base_change(RingMap::LocalizeNonPos, &minus)?;
    let ring = zero.ring();
    let um = p.degrees().map(|d| (d, Matrix::scalar(&ring, p.rank(d), &ring.t_pow(k)))).collect();
    let up = p.degrees().map(|d| (d, Matrix::scalar(&ring, p.rank(d), &ring.t_pow(-l)))).collect();
    SheafComplex::new(minus, zero, plus, um, up, (k, l))
}

/// `Y(a, b)`: the bases of `Y⁻` and `Y⁺` are rescaled by `t^a` and `t^-b`.
pub fn twist(y: &SheafComplex, a: i64, b: i64) -> Result<SheafComplex> {
    let ring = y.ring();
    let scale = |m: &ChainMap, e: i64| {
        m.components().iter().map(|(k, x)| (*k, x.scale(&ring, &ring.t_pow(e)))).collect()
    };
    SheafComplex::new(
        y.minus.clone(),
        y.zero.clone(),
        y.plus.clone(),
        scale(&y.upsilon_minus, a),
        scale(&y.upsilon_plus, -b),
        (y.twist.0 + a, y.twist.1 + b),
    )
}

/// Componentwise chain maps with both squares commuting exactly.
#[derive(Clone, Debug)]
pub struct SheafMorphism {
    pub source: SheafComplex,
    pub target: SheafComplex,
    pub minus: ChainMap,
    pub zero: ChainMap,
    pub plus: ChainMap,
}

impl SheafMorphism {
    pub fn new(source: SheafComplex, target: SheafComplex, minus: ChainMap, zero: ChainMap, plus: ChainMap) -> Result<Self> {
        let checks = [
            (&minus, &source.minus, &target.minus, "minus"),
            (&zero, &source.zero, &target.zero, "zero"),
            (&plus, &source.plus, &target.plus, "plus"),
        ];
        for (f, s, t, name) in checks {
            if f.source() != s || f.target() != t {
                return Err(Error::Shape(format!("{name} component has the wrong endpoints")));
            }
        }
        let left = zero.compose(&source.upsilon_minus)?;
        let right = target.upsilon_minus.compose(&base_change_map(RingMap::LocalizeNonPos, &minus)?)?;
        if !same_components(&left, &right) {
            return Err(Error::NotChainMap("the square through upsilon_minus does not commute".into()));
        }
        let left = zero.compose(&source.upsilon_plus)?;
        let right = target.upsilon_plus.compose(&base_change_map(RingMap::LocalizeNonNeg, &plus)?)?;
        if !same_components(&left, &right) {
            return Err(Error::NotChainMap("the square through upsilon_plus does not commute".into()));
        }
        Ok(Self { source, target, minus, zero, plus })
    }

    pub fn identity(y: &SheafComplex) -> Self {
        Self {
            source: y.clone(),
            target: y.clone(),
            minus: ChainMap::identity(&y.minus),
            zero: ChainMap::identity(&y.zero),
            plus: ChainMap::identity(&y.plus),
        }
    }

    /// The unique morphism to the zero sheaf.
    pub fn to_zero(y: &SheafComplex) -> Result<Self> {
        let ring = y.ring();
        let z = |s: Support| ChainComplex::zero(ring.with_support(s));
        let target = SheafComplex::new(z(Support::NonPos), z(Support::Full), z(Support::NonNeg), Default::default(), Default::default(), y.twist)?;
        Ok(Self {
            minus: ChainMap::zero(&y.minus, &target.minus),
            zero: ChainMap::zero(&y.zero, &target.zero),
            plus: ChainMap::zero(&y.plus, &target.plus),
            source: y.clone(),
            target,
        })
    }
}

fn same_components(a: &ChainMap, b: &ChainMap) -> bool {
    a.span().chain(b.span()).all(|k| a.component(k) == b.component(k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HClasses {
    pub minus: bool,
    pub zero: bool,
    pub plus: bool,
    /// All three components are quasi-isomorphisms.
    pub all: bool,
}

/// Which components of `f` are quasi-isomorphisms. Between sheaves, `h⁻` and `h⁺`
/// each imply `h⁰`; a violation is reported as an internal error.
pub fn h_equivalence_class(f: &SheafMorphism) -> Result<HClasses> {
    let minus = is_quasi_iso(&f.minus)?;
    let zero = is_quasi_iso(&f.zero)?;
    let plus = is_quasi_iso(&f.plus)?;
    if (minus || plus) && !zero {
        return Err(Error::Internal("a one-sided equivalence failed to be an equivalence over R".into()));
    }
    Ok(HClasses { minus, zero, plus, all: minus && zero && plus })
}
