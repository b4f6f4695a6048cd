//! Input file formats. Every spec serializes back to a canonical form that parses to
//! the same value.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use gradedk::algebra::{BaseRing, Laurent, LaurentRing, Matrix, Support};
use gradedk::homology::{ChainComplex, ChainMap};
use gradedk::k_zero::{K0Package, PackageSpec};
use gradedk::projective_line::{psi, twisting_sheaf, SheafComplex};
use gradedk::ring_kernel::{parse_element, GradedRingSpec, Graph};
use gradedk::twisted_nil::{Sign, TwistedEndomorphism};
use gradedk::Error;
use serde::{Deserialize, Serialize};

/// Failure to read or interpret an input; maps to exit status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

pub type InputResult<T> = Result<T, InputError>;

pub fn read(path: &Path) -> InputResult<String> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))
}

fn json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> InputResult<T> {
    serde_json::from_str(text).map_err(|e| InputError(format!("malformed {what} JSON at line {}, column {}: {e}", e.line(), e.column())))
}

fn base(tag: &str) -> InputResult<BaseRing> {
    BaseRing::parse_tag(tag).map_err(InputError)
}

fn default_base() -> String {
    "Q".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    pub ring: RingSection,
    /// Literals to normalize and report.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<String>,
}

/// `sigma` and `edges` are 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSection {
    pub family: String,
    #[serde(default = "default_base")]
    pub base: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<[i64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<usize>,
}

impl RingFile {
    pub fn parse(text: &str) -> InputResult<Self> {
        let mut file: RingFile = toml::from_str(text).map_err(|e| InputError(format!("malformed ring TOML: {e}")))?;
        file.ring.base = base(&file.ring.base)?.tag();
        Ok(file)
    }

    pub fn canonical(&self) -> String {
        toml::to_string(self).expect("ring specs serialize")
    }

    pub fn build(&self) -> InputResult<Arc<GradedRingSpec>> {
        let r = &self.ring;
        let b = base(&r.base)?;
        let spec = match r.family.as_str() {
            "laurent" => GradedRingSpec::laurent(b),
            "skew_laurent_perm" => {
                let sigma = r.sigma.clone().ok_or_else(|| InputError("skew_laurent_perm needs sigma".into()))?;
                if let Some(n) = r.n {
                    if n != sigma.len() {
                        return Err(InputError(format!("n = {n} but sigma has {} entries", sigma.len())));
                    }
                }
                let zero_based = sigma.iter().map(|&s| s.checked_sub(1).ok_or(Error::SigmaNotBijective)).collect::<Result<Vec<_>, _>>()?;
                GradedRingSpec::skew_laurent_perm(b, zero_based)?
            }
            "leavitt" => {
                let vertices = r.vertices.ok_or_else(|| InputError("leavitt needs vertices".into()))?;
                let edges = r
                    .edges
                    .clone()
                    .unwrap_or_default()
                    .into_iter()
                    .map(|[s, d]| match (s.checked_sub(1), d.checked_sub(1)) {
                        (Some(s), Some(d)) => Ok((s, d)),
                        _ => Err(InputError("edges are 1-indexed".into())),
                    })
                    .collect::<InputResult<Vec<_>>>()?;
                GradedRingSpec::leavitt(b, Graph::new(vertices, edges)?)?
            }
            "relation" => match (r.degrees, r.window) {
                (None, None) => GradedRingSpec::relation_default(b),
                (d, w) => GradedRingSpec::relation(b, d.unwrap_or([1, -1, 1, -1]), w.unwrap_or(8))?,
            },
            other => return Err(InputError(format!("unknown family {other:?}"))),
        };
        Ok(Arc::new(spec))
    }
}

pub type MatrixSpec = Vec<Vec<String>>;

/// JSON object keys are strings; inside a tagged enum serde cannot coerce them to
/// integers on its own.
fn degree_keys<'de, D: serde::Deserializer<'de>>(d: D) -> Result<BTreeMap<i64, MatrixSpec>, D::Error> {
    let raw = BTreeMap::<String, MatrixSpec>::deserialize(d)?;
    raw.into_iter()
        .map(|(k, m)| k.trim().parse::<i64>().map(|k| (k, m)).map_err(|_| serde::de::Error::custom(format!("degree key {k:?} is not an integer"))))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub ring_tag: String,
    #[serde(default = "default_base")]
    pub base: String,
    pub bottom: i64,
    pub ranks: Vec<usize>,
    /// `differentials[i]` is `d_{bottom+i+1}`, rows indexed by degree `bottom+i`.
    #[serde(default)]
    pub differentials: Vec<MatrixSpec>,
}

fn entry(base: BaseRing, literal: &str, place: &str) -> InputResult<Laurent> {
    let ring = Arc::new(GradedRingSpec::laurent(base));
    let e = parse_element(&ring, literal).map_err(|e| InputError(format!("{place}: {e}")))?;
    Ok(e.to_laurent().expect("Laurent literals stay Laurent"))
}

/// Parses a matrix with the given shape; `place` names it in error messages.
fn matrix(base: BaseRing, m: &MatrixSpec, rows: usize, cols: usize, place: &str) -> InputResult<Matrix<Laurent>> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        let got_cols = m.first().map_or(0, Vec::len);
        return Err(InputError(format!("{place}: expected {rows}x{cols}, got {}x{got_cols}", m.len())));
    }
    let mut out = vec![];
    for (i, row) in m.iter().enumerate() {
        let mut r = vec![];
        for (j, lit) in row.iter().enumerate() {
            r.push(entry(base, lit, &format!("{place} entry ({i},{j})"))?);
        }
        out.push(r);
    }
    Ok(Matrix::from_rows(out, cols))
}

impl ComplexSpec {
    pub fn parse(text: &str) -> InputResult<Self> {
        let mut spec: Self = json(text, "complex")?;
        spec.normalize()?;
        Ok(spec)
    }

    fn normalize(&mut self) -> InputResult<()> {
        self.base = base(&self.base)?.tag();
        Ok(())
    }

    pub fn canonical(&self) -> String {
        serde_json::to_string_pretty(self).expect("complex specs serialize")
    }

    pub fn ring(&self) -> InputResult<LaurentRing> {
        let support = Support::parse_tag(&self.ring_tag).ok_or_else(|| InputError(format!("unknown ring tag {:?}", self.ring_tag)))?;
        Ok(LaurentRing::new(base(&self.base)?, support))
    }

    pub fn build(&self) -> InputResult<ChainComplex> {
        let ring = self.ring()?;
        let expected = self.ranks.len().saturating_sub(1);
        if self.differentials.len() != expected {
            return Err(InputError(format!("{} ranks need {expected} differentials, got {}", self.ranks.len(), self.differentials.len())));
        }
        let mut diffs = vec![];
        for (i, m) in self.differentials.iter().enumerate() {
            let k = self.bottom + i as i64 + 1;
            if m.len() != self.ranks[i] || m.iter().any(|r| r.len() != self.ranks[i + 1]) {
                return Err(InputError(format!("matrix rank mismatch with degree index {k}")));
            }
            diffs.push(matrix(ring.base, m, self.ranks[i], self.ranks[i + 1], &format!("d_{k}"))?);
        }
        let c = ChainComplex::new(ring, self.bottom, self.ranks.clone(), diffs)?;
        c.validate().map_err(Error::from)?;
        Ok(c)
    }
}

fn map_components(base: BaseRing, source: &ChainComplex, target: &ChainComplex, comps: &BTreeMap<i64, MatrixSpec>, name: &str) -> InputResult<BTreeMap<i64, Matrix<Laurent>>> {
    comps
        .iter()
        .map(|(k, m)| Ok((*k, matrix(base, m, target.rank(*k), source.rank(*k), &format!("{name}[{k}]"))?)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum SignSpec {
    #[default]
    Positive,
    Negative,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistedSpec {
    pub complex: ComplexSpec,
    #[serde(deserialize_with = "degree_keys")]
    pub alpha: BTreeMap<i64, MatrixSpec>,
    #[serde(default)]
    pub sign: SignSpec,
}

impl TwistedSpec {
    pub fn parse(text: &str) -> InputResult<Self> {
        let mut spec: Self = json(text, "twisted endomorphism")?;
        spec.complex.normalize()?;
        Ok(spec)
    }

    pub fn canonical(&self) -> String {
        serde_json::to_string_pretty(self).expect("twisted specs serialize")
    }

    pub fn build(&self) -> InputResult<TwistedEndomorphism> {
        let c = self.complex.build()?;
        let comps = map_components(c.ring().base, &c, &c, &self.alpha, "alpha")?;
        let alpha = ChainMap::new(c.clone(), c, comps)?;
        let sign = match self.sign {
            SignSpec::Positive => Sign::Positive,
            SignSpec::Negative => Sign::Negative,
        };
        Ok(TwistedEndomorphism::new(alpha, sign)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SheafSpec {
    /// Explicit triple; `upsilon_*[k]` maps the basis of degree `k` into that of `Y0_k`.
    Triple {
        minus: ComplexSpec,
        zero: ComplexSpec,
        plus: ComplexSpec,
        #[serde(deserialize_with = "degree_keys")]
        upsilon_minus: BTreeMap<i64, MatrixSpec>,
        #[serde(deserialize_with = "degree_keys")]
        upsilon_plus: BTreeMap<i64, MatrixSpec>,
        #[serde(default)]
        twist: [i64; 2],
    },
    /// `Ψ_{k,l}` of a complex over `R0`.
    Psi { complex: ComplexSpec, k: i64, l: i64 },
    /// The twisting sheaf `O(k, l)`.
    Twisting {
        #[serde(default = "default_base")]
        base: String,
        k: i64,
        l: i64,
    },
}

impl SheafSpec {
    pub fn parse(text: &str) -> InputResult<Self> {
        let mut spec: Self = json(text, "sheaf")?;
        match &mut spec {
            SheafSpec::Triple { minus, zero, plus, .. } => {
                minus.normalize()?;
                zero.normalize()?;
                plus.normalize()?;
            }
            SheafSpec::Psi { complex, .. } => complex.normalize()?,
            SheafSpec::Twisting { base: b, .. } => *b = base(b)?.tag(),
        }
        Ok(spec)
    }

    pub fn canonical(&self) -> String {
        serde_json::to_string_pretty(self).expect("sheaf specs serialize")
    }

    pub fn build(&self) -> InputResult<SheafComplex> {
        Ok(match self {
            SheafSpec::Triple { minus, zero, plus, upsilon_minus, upsilon_plus, twist } => {
                let (m, z, p) = (minus.build()?, zero.build()?, plus.build()?);
                let b = z.ring().base;
                let um = map_components(b, &m, &z, upsilon_minus, "upsilon_minus")?;
                let up = map_components(b, &p, &z, upsilon_plus, "upsilon_plus")?;
                SheafComplex::new(m, z, p, um, up, (twist[0], twist[1]))?
            }
            SheafSpec::Psi { complex, k, l } => psi(&complex.build()?, *k, *l)?,
            SheafSpec::Twisting { base: b, k, l } => twisting_sheaf(base(b)?, *k, *l)?,
        })
    }
}

/// A K0 package comes from a ring TOML (families with an oracle) or a package JSON.
pub fn load_package(path: &Path) -> InputResult<K0Package> {
    let text = read(path)?;
    if path.extension().is_some_and(|e| e == "toml") {
        let ring = RingFile::parse(&text)?.build()?;
        Ok(K0Package::for_ring(&ring)?)
    } else {
        let spec: PackageSpec = json(&text, "package")?;
        Ok(K0Package::from_spec(spec)?)
    }
}
