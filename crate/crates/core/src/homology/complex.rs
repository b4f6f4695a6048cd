use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Laurent, LaurentRing, Matrix, Ring};
use crate::error::{Error, Result};

pub type Mat = Matrix<Laurent>;

/// Bounded complex of free modules; `diffs[i]` is `d_{bottom+i+1}`, a
/// `rank(bottom+i) x rank(bottom+i+1)` matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ring: LaurentRing,
    bottom: i64,
    ranks: Vec<usize>,
    diffs: Vec<Mat>,
}

/// First failing condition found by [`ChainComplex::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub degree: i64,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {}: {}", self.degree, self.message)
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::InvalidComplex(v.to_string())
    }
}

impl ChainComplex {
    /// Checks matrix shapes only; use [`validate`](Self::validate) for `d∘d = 0` and supports.
    pub fn new(ring: LaurentRing, bottom: i64, ranks: Vec<usize>, diffs: Vec<Mat>) -> Result<Self> {
        if diffs.len() != ranks.len().saturating_sub(1) {
            return Err(Error::Shape(format!(
                "{} ranks need {} differentials, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (i, d) in diffs.iter().enumerate() {
            let k = bottom + i as i64 + 1;
            if d.shape() != (ranks[i], ranks[i + 1]) {
                return Err(Error::Shape(format!(
                    "matrix rank mismatch with degree index {k}: d_{k} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    ranks[i],
                    ranks[i + 1]
                )));
            }
        }
        Ok(Self { ring, bottom, ranks, diffs })
    }

    pub fn zero(ring: LaurentRing) -> Self {
        Self { ring, bottom: 0, ranks: vec![], diffs: vec![] }
    }

    /// `R^rank` in a single degree.
    pub fn concentrated(ring: LaurentRing, degree: i64, rank: usize) -> Self {
        Self { ring, bottom: degree, ranks: vec![rank], diffs: vec![] }
    }

    /// `D(level, rank)`: identity differential from degree `level` to `level - 1`.
    pub fn elementary(ring: LaurentRing, level: i64, rank: usize) -> Self {
        Self {
            ring,
            bottom: level - 1,
            ranks: vec![rank, rank],
            diffs: vec![Matrix::identity(&ring, rank)],
        }
    }

    pub fn ring(&self) -> LaurentRing {
        self.ring
    }

    pub fn bottom(&self) -> i64 {
        self.bottom
    }

    /// Highest stored degree; `bottom - 1` for an empty rank list.
    pub fn top(&self) -> i64 {
        self.bottom + self.ranks.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.bottom..=self.top()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, k: i64) -> usize {
        if k < self.bottom || k > self.top() {
            0
        } else {
            self.ranks[(k - self.bottom) as usize]
        }
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// `d_k: C_k -> C_{k-1}`; a zero matrix outside the stored range.
    pub fn d(&self, k: i64) -> Mat {
        match self.d_ref(k) {
            Some(m) => m.clone(),
            None => Matrix::zero(&self.ring, self.rank(k - 1), self.rank(k)),
        }
    }

    pub fn d_ref(&self, k: i64) -> Option<&Mat> {
        let i = k - self.bottom - 1;
        (i >= 0 && (i as usize) < self.diffs.len()).then(|| &self.diffs[i as usize])
    }

    pub fn differentials(&self) -> &[Mat] {
        &self.diffs
    }

    /// Same data over another coefficient ring; entries are not checked.
    pub fn with_ring(&self, ring: LaurentRing) -> Self {
        Self { ring, ..self.clone() }
    }

    /// Degreewise direct sum over the union of the degree ranges.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        if self.ranks.is_empty() {
            return Ok(other.clone());
        }
        if other.ranks.is_empty() {
            return Ok(self.clone());
        }
        let lo = self.bottom.min(other.bottom);
        let hi = self.top().max(other.top());
        let ranks = (lo..=hi).map(|k| self.rank(k) + other.rank(k)).collect();
        let diffs = (lo + 1..=hi)
            .map(|k| Matrix::block_diag(&self.ring, &[&self.d(k), &other.d(k)]))
            .collect();
        Self::new(self.ring, lo, ranks, diffs)
    }

    /// `(ΣC)_k = C_{k-1}` with differential `-d`.
    pub fn suspension(&self) -> Self {
        Self {
            ring: self.ring,
            bottom: self.bottom + 1,
            ranks: self.ranks.clone(),
            diffs: self.diffs.iter().map(|d| d.neg(&self.ring)).collect(),
        }
    }

    /// Drops zero ranks at both ends.
    pub fn trimmed(&self) -> Self {
        let first = self.ranks.iter().position(|&r| r > 0);
        let Some(first) = first else { return Self::zero(self.ring) };
        let last = self.ranks.iter().rposition(|&r| r > 0).unwrap();
        Self {
            ring: self.ring,
            bottom: self.bottom + first as i64,
            ranks: self.ranks[first..=last].to_vec(),
            diffs: self.diffs[first..last].to_vec(),
        }
    }

    /// Confirms `d_k ∘ d_{k+1} = 0` and that every entry lies in the coefficient ring.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        for (i, d) in self.diffs.iter().enumerate() {
            let k = self.bottom + i as i64 + 1;
            for r in 0..d.rows() {
                for c in 0..d.cols() {
                    let x = d.get(r, c);
                    if !self.ring.contains(x) {
                        return Err(Violation {
                            degree: k,
                            message: format!(
                                "entry ({r},{c}) of d_{k} = {} lies outside {} over {}",
                                self.ring.render(x),
                                self.ring.support.tag(),
                                self.ring.base
                            ),
                        });
                    }
                }
            }
        }
        for i in 1..self.diffs.len() {
            let k = self.bottom + i as i64;
            if !self.diffs[i - 1].mul(&self.ring, &self.diffs[i]).is_zero(&self.ring) {
                return Err(Violation {
                    degree: k,
                    message: format!("d_{k} ∘ d_{} is nonzero", k + 1),
                });
            }
        }
        Ok(())
    }
}

/// Per-degree matrices `f_k: S_k -> T_k`; absent degrees are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    comps: BTreeMap<i64, Mat>,
}

impl ChainMap {
    /// Checks shapes and the commutation `d f = f d` exactly.
    pub fn new(source: ChainComplex, target: ChainComplex, comps: BTreeMap<i64, Mat>) -> Result<Self> {
        let f = Self::unchecked(source, target, comps)?;
        f.check_commutes()?;
        Ok(f)
    }

    /// Checks shapes but not commutation.
    pub fn unchecked(source: ChainComplex, target: ChainComplex, comps: BTreeMap<i64, Mat>) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::MixedRings);
        }
        for (k, m) in &comps {
            if m.shape() != (target.rank(*k), source.rank(*k)) {
                return Err(Error::Shape(format!(
                    "chain map component in degree {k} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    target.rank(*k),
                    source.rank(*k)
                )));
            }
        }
        let ring = source.ring;
        let comps = comps.into_iter().filter(|(_, m)| !m.is_zero(&ring)).collect();
        Ok(Self { source, target, comps })
    }

    pub fn from_fn(source: &ChainComplex, target: &ChainComplex, f: impl Fn(i64) -> Mat) -> Result<Self> {
        let lo = source.bottom().max(target.bottom());
        let hi = source.top().min(target.top());
        let comps = (lo..=hi).map(|k| (k, f(k))).collect();
        Self::new(source.clone(), target.clone(), comps)
    }

    pub fn identity(c: &ChainComplex) -> Self {
        let ring = c.ring();
        let comps = c
            .degrees()
            .filter(|&k| c.rank(k) > 0)
            .map(|k| (k, Matrix::identity(&ring, c.rank(k))))
            .collect();
        Self { source: c.clone(), target: c.clone(), comps }
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> Self {
        Self { source: source.clone(), target: target.clone(), comps: BTreeMap::new() }
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn ring(&self) -> LaurentRing {
        self.source.ring()
    }

    pub fn component(&self, k: i64) -> Mat {
        self.comps
            .get(&k)
            .cloned()
            .unwrap_or_else(|| Matrix::zero(&self.source.ring(), self.target.rank(k), self.source.rank(k)))
    }

    pub fn components(&self) -> &BTreeMap<i64, Mat> {
        &self.comps
    }

    /// Degrees where either complex is nonzero.
    pub fn span(&self) -> std::ops::RangeInclusive<i64> {
        let lo = self.source.bottom().min(self.target.bottom());
        let hi = self.source.top().max(self.target.top());
        lo..=hi
    }

    fn check_commutes(&self) -> Result<()> {
        let ring = self.ring();
        for k in self.span() {
            let lhs = self.target.d(k).mul(&ring, &self.component(k));
            let rhs = self.component(k - 1).mul(&ring, &self.source.d(k));
            if lhs != rhs {
                return Err(Error::NotChainMap(format!("d f != f d in degree {k}")));
            }
        }
        Ok(())
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ChainMap) -> Result<Self> {
        if first.target != self.source {
            return Err(Error::Shape("composition of non-composable chain maps".into()));
        }
        let ring = self.ring();
        let comps = first
            .span()
            .map(|k| (k, self.component(k).mul(&ring, &first.component(k))))
            .collect();
        Self::unchecked(first.source.clone(), self.target.clone(), comps)
    }

    pub fn add(&self, other: &ChainMap) -> Result<Self> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Shape("sum of chain maps with different endpoints".into()));
        }
        let ring = self.ring();
        let comps = self.span().map(|k| (k, self.component(k).add(&ring, &other.component(k)))).collect();
        Self::unchecked(self.source.clone(), self.target.clone(), comps)
    }

    pub fn neg(&self) -> Self {
        let ring = self.ring();
        Self {
            source: self.source.clone(),
            target: self.target.clone(),
            comps: self.comps.iter().map(|(k, m)| (*k, m.neg(&ring))).collect(),
        }
    }

    /// `f ⊕ g` between direct sums.
    pub fn direct_sum(&self, other: &ChainMap) -> Result<Self> {
        let source = self.source.direct_sum(&other.source)?;
        let target = self.target.direct_sum(&other.target)?;
        let ring = self.ring();
        let comps = source
            .degrees()
            .map(|k| (k, Matrix::block_diag(&ring, &[&self.component(k), &other.component(k)])))
            .collect();
        Self::unchecked(source, target, comps)
    }

    /// Same matrices between replacement endpoints of identical ranks.
    pub fn with_endpoints(&self, source: ChainComplex, target: ChainComplex) -> Result<Self> {
        Self::unchecked(source, target, self.comps.clone())
    }

    /// True when all components vanish.
    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }
}
