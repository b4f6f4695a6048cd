use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Deserialize;

use super::group::{FpAbelianGroup, GroupMap, IntMatrix};
use crate::algebra::smith::inverse;
use crate::algebra::{BaseRing, Integers, Matrix};
use crate::error::{Error, Result};
use crate::ring_kernel::{parse_element, Family, GradedRingSpec};

/// K0 groups of `R_0`, `R_{<=0}`, `R_{>=0}`, `R` with the maps induced by the ring maps
/// between them and the shift `s_{-1}` on `K0(R_0)`.
#[derive(Clone, Debug)]
pub struct K0Package {
    pub name: String,
    pub r0: FpAbelianGroup,
    pub neg: FpAbelianGroup,
    pub pos: FpAbelianGroup,
    pub full: FpAbelianGroup,
    pub i_minus: GroupMap,
    pub i_plus: GroupMap,
    pub p_minus: GroupMap,
    pub p_plus: GroupMap,
    pub j_minus: GroupMap,
    pub j_plus: GroupMap,
    pub shift: GroupMap,
    /// How each entry was obtained, keyed by group or map name.
    pub provenance: BTreeMap<String, String>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidPackage(msg.into())
}

fn int(entries: Vec<Vec<i64>>, rows: usize, cols: usize) -> Result<IntMatrix> {
    if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
        return Err(Error::Shape(format!("expected a {rows}x{cols} integer matrix")));
    }
    Ok(Matrix::from_fn(rows, cols, |i, j| BigInt::from(entries[i][j])))
}

impl K0Package {
    /// Builds the maps and checks `p∓ i∓ = id`, `j⁻ i⁻ = j⁺ i⁺` and that the shift is
    /// invertible.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        groups: [FpAbelianGroup; 4],
        i_minus: IntMatrix,
        i_plus: IntMatrix,
        p_minus: IntMatrix,
        p_plus: IntMatrix,
        j_minus: IntMatrix,
        j_plus: IntMatrix,
        shift: IntMatrix,
        provenance: BTreeMap<String, String>,
    ) -> Result<Self> {
        let [r0, neg, pos, full] = groups;
        let map = |s: &FpAbelianGroup, t: &FpAbelianGroup, m: IntMatrix, what: &str| {
            GroupMap::new(s.clone(), t.clone(), m).map_err(|e| invalid(format!("{what}: {e}")))
        };
        let pkg = Self {
            name: name.into(),
            i_minus: map(&r0, &neg, i_minus, "i-")?,
            i_plus: map(&r0, &pos, i_plus, "i+")?,
            p_minus: map(&neg, &r0, p_minus, "p-")?,
            p_plus: map(&pos, &r0, p_plus, "p+")?,
            j_minus: map(&neg, &full, j_minus, "j-")?,
            j_plus: map(&pos, &full, j_plus, "j+")?,
            shift: map(&r0, &r0, shift, "s_-1")?,
            r0,
            neg,
            pos,
            full,
            provenance,
        };
        pkg.validate()?;
        Ok(pkg)
    }

    pub fn validate(&self) -> Result<()> {
        let id = GroupMap::identity(&self.r0);
        if !self.p_minus.compose(&self.i_minus)?.equals(&id) {
            return Err(invalid("p-_* i-_* is not the identity"));
        }
        if !self.p_plus.compose(&self.i_plus)?.equals(&id) {
            return Err(invalid("p+_* i+_* is not the identity"));
        }
        if !self.j_minus.compose(&self.i_minus)?.equals(&self.j_plus.compose(&self.i_plus)?) {
            return Err(invalid("j-_* i-_* differs from j+_* i+_*"));
        }
        if !self.shift.is_iso() {
            return Err(invalid("the shift s_-1 is not invertible"));
        }
        Ok(())
    }

    /// `s_k` for any `k`, from `s_{-1}` and its inverse.
    pub fn shift_power(&self, k: i64) -> Result<GroupMap> {
        let base = if k <= 0 {
            self.shift.clone()
        } else {
            // the shift is an automorphism; any integer inverse of a generator-level lift
            // is a valid representative when one exists
            let inv = inverse(&Integers, self.shift.matrix())?
                .ok_or_else(|| invalid("s_-1 has no integer inverse on generators; pass s_1 explicitly"))?;
            GroupMap::new(self.r0.clone(), self.r0.clone(), inv)?
        };
        let mut out = GroupMap::identity(&self.r0);
        for _ in 0..k.unsigned_abs() {
            out = base.compose(&out)?;
        }
        Ok(out)
    }

    /// Laurent ring over a field or `Z`: every group is `Z` and every map the identity.
    pub fn laurent(base: BaseRing) -> Self {
        let z = FpAbelianGroup::free(1);
        let one = || Matrix::identity(&Integers, 1);
        let reason = match base {
            BaseRing::Integers => "Z[t] and Z[t,1/t] are regular and K0 of Z is Z; induced classes are free",
            _ => "principal ideal domains: projectives are free, K0 = Z generated by the ring",
        };
        let provenance = ["r0", "neg", "pos", "full", "shift"].iter().map(|k| (k.to_string(), reason.to_string())).collect();
        Self::new(
            format!("laurent/{base}"),
            [z.clone(), z.clone(), z.clone(), z],
            one(),
            one(),
            one(),
            one(),
            one(),
            one(),
            one(),
            provenance,
        )
        .expect("the Laurent package is consistent")
    }

    /// Skew Laurent ring over `base^n` with `t e_j = e_σ(j) t`.
    ///
    /// The shift and the classes over `R` are read off from ring arithmetic: `s_{-1}[e_j]`
    /// is the `[e_i]` with `e_j t^-1 e_i != 0`, and `e_i R ≅ e_j R` whenever some
    /// `e_j t^k e_i` is nonzero. Over the half rings the idempotents stay independent.
    pub fn skew_permutation(base: BaseRing, sigma: Vec<usize>) -> Result<Self> {
        let n = sigma.len();
        let ring = Arc::new(GradedRingSpec::skew_laurent_perm(base, sigma)?);
        let nonzero = |j: usize, k: i64, i: usize| -> Result<bool> {
            Ok(!parse_element(&ring, &format!("e{} t^{k} e{}", j + 1, i + 1))?.is_zero())
        };
        let mut shift = Matrix::zero(&Integers, n, n);
        for j in 0..n {
            let targets: Vec<usize> = (0..n).filter_map(|i| nonzero(j, -1, i).map(|b| b.then_some(i)).transpose()).collect::<Result<_>>()?;
            let [i] = targets[..] else {
                return Err(Error::Internal(format!("e{} t^-1 meets {} idempotents", j + 1, targets.len())));
            };
            shift.set(i, j, BigInt::from(1));
        }
        // union-find over the idempotents
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for i in 0..n {
            for j in 0..n {
                for k in -(n as i64)..=(n as i64) {
                    if nonzero(j, k, i)? {
                        let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut classes: Vec<usize> = vec![];
        let mut membership = vec![0; n];
        for (i, slot) in membership.iter_mut().enumerate() {
            let r = root(&mut parent, i);
            let pos = classes.iter().position(|&c| c == r).unwrap_or_else(|| {
                classes.push(r);
                classes.len() - 1
            });
            *slot = pos;
        }
        let c = classes.len();
        let induce = Matrix::from_fn(c, n, |a, j| BigInt::from((membership[j] == a) as i64));
        let zn = FpAbelianGroup::free(n);
        let id = || Matrix::identity(&Integers, n);
        let provenance = BTreeMap::from([
            ("r0".into(), "K0 of a product of fields: one Z per idempotent".into()),
            ("shift".into(), "ring arithmetic: s_-1[e_j] = [e_i] with e_j t^-1 e_i nonzero".into()),
            ("neg".into(), "tensor ring over the product: K0 agrees with the degree-zero part".into()),
            ("pos".into(), "tensor ring over the product: K0 agrees with the degree-zero part".into()),
            ("full".into(), format!("ring arithmetic: {c} isomorphism classes of e_j R, one matrix ring per class")),
        ]);
        Self::new(
            format!("skew/{base}/{n}"),
            [zn.clone(), zn.clone(), zn, FpAbelianGroup::free(c)],
            id(),
            id(),
            id(),
            id(),
            induce.clone(),
            induce,
            shift,
            provenance,
        )
    }

    /// Package for a ring spec, when its family has one.
    pub fn for_ring(ring: &GradedRingSpec) -> Result<Self> {
        match &ring.family {
            Family::Laurent => Ok(Self::laurent(ring.base)),
            Family::SkewLaurentPerm { sigma } => Self::skew_permutation(ring.base, sigma.clone()),
            Family::Leavitt(_) => Err(Error::NoPackage("leavitt family".into())),
            Family::Relation { .. } => Err(Error::NoPackage("relation family".into())),
        }
    }

    pub fn from_spec(spec: PackageSpec) -> Result<Self> {
        let group = |g: &GroupSpec| -> Result<FpAbelianGroup> {
            let rel = Matrix::from_fn(g.generators, g.relations.len(), |i, j| {
                BigInt::from(g.relations[j].get(i).copied().unwrap_or(0))
            });
            if g.relations.iter().any(|r| r.len() != g.generators) {
                return Err(Error::Shape(format!("relations must have {} entries", g.generators)));
            }
            FpAbelianGroup::new(g.generators, rel)
        };
        let gs = &spec.groups;
        let (r0, neg, pos, full) = (group(&gs.r0)?, group(&gs.neg)?, group(&gs.pos)?, group(&gs.full)?);
        let m = |x: &Vec<Vec<i64>>, t: &FpAbelianGroup, s: &FpAbelianGroup| int(x.clone(), t.generators(), s.generators());
        let mp = &spec.maps;
        Self::new(
            spec.name,
            [r0.clone(), neg.clone(), pos.clone(), full.clone()],
            m(&mp.i_minus, &neg, &r0)?,
            m(&mp.i_plus, &pos, &r0)?,
            m(&mp.p_minus, &r0, &neg)?,
            m(&mp.p_plus, &r0, &pos)?,
            m(&mp.j_minus, &full, &neg)?,
            m(&mp.j_plus, &full, &pos)?,
            m(&mp.shift, &r0, &r0)?,
            spec.provenance,
        )
    }
}

/// `{"generators": 2, "relations": [[0, 2]]}` is `Z ⊕ Z/2`; each relation is a vector.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub generators: usize,
    #[serde(default)]
    pub relations: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupsSpec {
    pub r0: GroupSpec,
    pub neg: GroupSpec,
    pub pos: GroupSpec,
    pub full: GroupSpec,
}

/// Row-major matrices, target generators by source generators.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapsSpec {
    pub i_minus: Vec<Vec<i64>>,
    pub i_plus: Vec<Vec<i64>>,
    pub p_minus: Vec<Vec<i64>>,
    pub p_plus: Vec<Vec<i64>>,
    pub j_minus: Vec<Vec<i64>>,
    pub j_plus: Vec<Vec<i64>>,
    pub shift: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PackageSpec {
    pub name: String,
    pub groups: GroupsSpec,
    pub maps: MapsSpec,
    #[serde(default)]
    pub provenance: BTreeMap<String, String>,
}
