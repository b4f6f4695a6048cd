use num_bigint::BigInt;
use serde::Serialize;

use super::group::{exactness_witness, ker_coker, CanonicalForm, FpAbelianGroup, GroupMap, KerCoker};
use super::package::K0Package;
use crate::error::{Error, Result};
use crate::homology::ChainComplex;

/// Which shift defines the shift difference.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub enum ShiftChoice {
    #[default]
    MinusOne,
    PlusOne,
}

#[derive(Clone, Debug)]
pub struct ShiftDifference {
    /// `id - s_{∓1}` on `K0(R_0)`.
    pub map: GroupMap,
    pub sker: FpAbelianGroup,
    pub scoker: FpAbelianGroup,
    pub parts: KerCoker,
}

pub fn shift_difference(pkg: &K0Package, choice: ShiftChoice) -> Result<ShiftDifference> {
    let s = match choice {
        ShiftChoice::MinusOne => pkg.shift.clone(),
        ShiftChoice::PlusOne => pkg.shift_power(1)?,
    };
    let map = GroupMap::identity(&pkg.r0).sub(&s)?;
    let parts = ker_coker(&map);
    Ok(ShiftDifference { sker: parts.kernel.clone(), scoker: parts.cokernel.clone(), map, parts })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NilSign {
    Minus,
    Plus,
}

/// `NK^±_0 = coker(i^±_*)`, after checking `K0(R_{±}) ≅ K0(R_0) ⊕ NK^±_0`.
pub fn nk0(pkg: &K0Package, sign: NilSign) -> Result<FpAbelianGroup> {
    let (i, half) = match sign {
        NilSign::Minus => (&pkg.i_minus, &pkg.neg),
        NilSign::Plus => (&pkg.i_plus, &pkg.pos),
    };
    let nk = ker_coker(i).cokernel;
    if !half.isomorphic(&pkg.r0.direct_sum(&nk)) {
        return Err(Error::InvalidPackage(format!(
            "{} is not {} + {}, so the induction does not split",
            half.to_string_form(),
            pkg.r0.to_string_form(),
            nk.to_string_form()
        )));
    }
    Ok(nk)
}

/// `coker(K0(R_{<=0}) ⊕ K0(R_{>=0}) -> K0(R))`, the sum of the two inductions.
pub fn rk_minus1(pkg: &K0Package) -> Result<KerCoker> {
    Ok(ker_coker(&GroupMap::sum_map(&pkg.j_minus, &pkg.j_plus)?))
}

#[derive(Clone, Debug)]
pub struct EtaBetaAlpha {
    /// `diag(i⁻ (id - s_{-1}), i⁺)`.
    pub map: GroupMap,
    pub parts: KerCoker,
}

/// The composite on `K0(R_0)²`, with its kernel identified with the shift kernel and its
/// cokernel with `NK⁻ ⊕ scoker ⊕ NK⁺`; a failed identification rejects the package.
pub fn eta_beta_alpha(pkg: &K0Package) -> Result<EtaBetaAlpha> {
    let sd = shift_difference(pkg, ShiftChoice::MinusOne)?;
    let map = pkg.i_minus.compose(&sd.map)?.direct_sum(&pkg.i_plus);
    let parts = ker_coker(&map);
    if !parts.kernel.isomorphic(&sd.sker) {
        return Err(Error::InvalidPackage(format!(
            "kernel {} differs from the shift kernel {}",
            parts.kernel.to_string_form(),
            sd.sker.to_string_form()
        )));
    }
    let expected = nk0(pkg, NilSign::Minus)?.direct_sum(&sd.scoker).direct_sum(&nk0(pkg, NilSign::Plus)?);
    if !parts.cokernel.isomorphic(&expected) {
        return Err(Error::InvalidPackage(format!(
            "cokernel {} differs from NK- + scoker + NK+ = {}",
            parts.cokernel.to_string_form(),
            expected.to_string_form()
        )));
    }
    Ok(EtaBetaAlpha { map, parts })
}

/// `γ η^{-1} = (j⁻, j⁻ i⁻ p⁺ - j⁺)` on `K0(R_{<=0}) ⊕ K0(R_{>=0})`.
fn gamma_eta_inverse(pkg: &K0Package) -> Result<GroupMap> {
    let corrected = pkg.j_minus.compose(&pkg.i_minus)?.compose(&pkg.p_plus)?.sub(&pkg.j_plus)?;
    GroupMap::sum_map(&pkg.j_minus, &corrected)
}

/// Certificate for `0 -> NK⁻ ⊕ scoker ⊕ NK⁺ -> K0(R) -> K_{-1} -> 0`.
#[derive(Clone, Debug, Serialize)]
pub struct Ft0Certificate {
    pub package: String,
    pub nk_minus: CanonicalForm,
    pub scoker: CanonicalForm,
    pub nk_plus: CanonicalForm,
    pub sker: CanonicalForm,
    pub left: CanonicalForm,
    pub k0_r: CanonicalForm,
    pub k_minus1: CanonicalForm,
    pub left_well_defined: bool,
    pub left_injective: bool,
    pub exact_at_k0_r: bool,
    pub right_surjective: bool,
    pub witness: Option<String>,
}

impl Ft0Certificate {
    pub fn passes(&self) -> bool {
        self.left_well_defined && self.left_injective && self.exact_at_k0_r && self.right_surjective
    }

    /// `0 -> A -> B -> C -> 0` with canonical forms.
    pub fn render(&self) -> String {
        format!("0 -> {} -> {} -> {} -> 0", self.left, self.k0_r, self.k_minus1)
    }
}

/// The left map is `γ η^{-1}` on representatives in `coker(ηβα)`, the right map the
/// projection onto `coker(j⁻ + j⁺)`; each stage is decided by Smith reduction.
pub fn ft0_check(pkg: &K0Package) -> Result<Ft0Certificate> {
    pkg.validate()?;
    let sd = shift_difference(pkg, ShiftChoice::MinusOne)?;
    let nk_minus = nk0(pkg, NilSign::Minus)?;
    let nk_plus = nk0(pkg, NilSign::Plus)?;
    let eba = eta_beta_alpha(pkg)?;
    let coker = eba.parts.cokernel.clone();
    let ge = gamma_eta_inverse(pkg)?;
    let k_minus1 = rk_minus1(pkg)?;
    let right = k_minus1.projection.clone();
    let mut cert = Ft0Certificate {
        package: pkg.name.clone(),
        nk_minus: nk_minus.canonical(),
        scoker: sd.scoker.canonical(),
        nk_plus: nk_plus.canonical(),
        sker: sd.sker.canonical(),
        left: coker.canonical(),
        k0_r: pkg.full.canonical(),
        k_minus1: k_minus1.cokernel.canonical(),
        left_well_defined: false,
        left_injective: false,
        exact_at_k0_r: false,
        right_surjective: right.is_surjective(),
        witness: None,
    };
    let left = match GroupMap::new(coker, pkg.full.clone(), ge.matrix().clone()) {
        Ok(m) => m,
        Err(e) => {
            cert.witness = Some(format!("left map: {e}"));
            return Ok(cert);
        }
    };
    cert.left_well_defined = true;
    let kernel = ker_coker(&left).kernel;
    cert.left_injective = kernel.is_trivial();
    if !cert.left_injective {
        cert.witness = Some(format!("left map has kernel {}", kernel.to_string_form()));
    }
    let at_middle = exactness_witness(&left, &right)?;
    cert.exact_at_k0_r = at_middle.is_none();
    if cert.witness.is_none() {
        cert.witness = at_middle;
    }
    Ok(cert)
}

/// Certificate for `K0(R_0)² -βα-> K0(R_{<=0}) ⊕ K0(R_{>=0}) -γ-> K0(R) -> K_{-1} -> 0`.
#[derive(Clone, Debug, Serialize)]
pub struct Mv0Certificate {
    pub package: String,
    pub exact_at_halves: bool,
    pub exact_at_k0_r: bool,
    pub right_surjective: bool,
    pub witness: Option<String>,
}

impl Mv0Certificate {
    pub fn passes(&self) -> bool {
        self.exact_at_halves && self.exact_at_k0_r && self.right_surjective
    }
}

/// Classes of the components of `Ψ_{k,l}(P)`: `i⁻ s_k` and `i⁺ s_{-l}`.
pub fn psi_classes(pkg: &K0Package, k: i64, l: i64) -> Result<(GroupMap, GroupMap)> {
    Ok((pkg.i_minus.compose(&pkg.shift_power(k)?)?, pkg.i_plus.compose(&pkg.shift_power(-l)?)?))
}

/// `β α (P, Q) = β(-Ψ_{-1,0} P + Ψ_{0,0} P + Ψ_{0,0} Q)`, with `K0(P¹)` presented as
/// `K0(R_0)²`.
pub fn beta_alpha(pkg: &K0Package) -> Result<GroupMap> {
    let (m1, p1) = psi_classes(pkg, -1, 0)?;
    let (m0, p0) = psi_classes(pkg, 0, 0)?;
    let on_p_minus = m0.sub(&m1)?;
    let on_p_plus = p0.sub(&p1)?;
    GroupMap::from_blocks(&[&pkg.r0, &pkg.r0], &[&pkg.neg, &pkg.pos], &[vec![&on_p_minus, &m0], vec![&on_p_plus, &p0]])
}

pub fn mv0_check(pkg: &K0Package) -> Result<Mv0Certificate> {
    pkg.validate()?;
    let ba = beta_alpha(pkg)?;
    let gamma = GroupMap::sum_map(&pkg.j_minus, &pkg.j_plus.neg())?;
    let right = ker_coker(&gamma).projection;
    let w1 = exactness_witness(&ba, &gamma)?;
    let w2 = exactness_witness(&gamma, &right)?;
    Ok(Mv0Certificate {
        package: pkg.name.clone(),
        exact_at_halves: w1.is_none(),
        exact_at_k0_r: w2.is_none(),
        right_surjective: right.is_surjective(),
        witness: w1.map(|w| format!("at K0(R<=0) + K0(R>=0): {w}")).or(w2.map(|w| format!("at K0(R): {w}"))),
    })
}

/// `Σ (-1)^k rank C_k`, the class of a free complex in `K0` of its coefficient ring on
/// the generator `[ring]`.
pub fn euler_class(c: &ChainComplex) -> i64 {
    c.degrees().map(|k| if k.rem_euclid(2) == 0 { c.rank(k) as i64 } else { -(c.rank(k) as i64) }).sum()
}

/// Induction maps a class can be tested against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Induction {
    IMinus,
    IPlus,
    JMinus,
    JPlus,
}

impl Induction {
    pub fn parse(tag: &str) -> Option<Self> {
        match tag {
            "i-" => Some(Self::IMinus),
            "i+" => Some(Self::IPlus),
            "j-" => Some(Self::JMinus),
            "j+" => Some(Self::JPlus),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Obstruction {
    pub group: CanonicalForm,
    #[serde(serialize_with = "super::group::as_strings")]
    pub coordinates: Vec<BigInt>,
    /// Zero exactly when the class is stably induced.
    pub vanishes: bool,
}

/// Image of `class` in `coker(f_*)`.
pub fn stably_induced_obstruction(pkg: &K0Package, class: &[BigInt], along: Induction) -> Result<Obstruction> {
    let f = match along {
        Induction::IMinus => &pkg.i_minus,
        Induction::IPlus => &pkg.i_plus,
        Induction::JMinus => &pkg.j_minus,
        Induction::JPlus => &pkg.j_plus,
    };
    if class.len() != f.target().generators() {
        return Err(Error::Shape(format!("class has {} entries, expected {}", class.len(), f.target().generators())));
    }
    let coker = ker_coker(f).cokernel;
    let coordinates = coker.coordinates(class);
    let vanishes = coker.vanishes(&crate::algebra::Matrix::column_vector(class.to_vec()));
    Ok(Obstruction { group: coker.canonical(), coordinates, vanishes })
}
