use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Serialize, Serializer};

use crate::algebra::smith::{kernel_basis, smith, solve};
use crate::algebra::{Integers, Matrix};
use crate::error::{Error, Result};

pub type IntMatrix = Matrix<BigInt>;

pub fn int_matrix(rows: usize, cols: usize, entries: &[i64]) -> IntMatrix {
    assert_eq!(entries.len(), rows * cols, "entry count");
    Matrix::from_fn(rows, cols, |i, j| BigInt::from(entries[i * cols + j]))
}

pub(crate) fn as_strings<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(BigInt::to_string))
}

/// `m = u * d * v` with `u`, `v` unimodular and `d` diagonal in divisibility order.
#[derive(Clone, Debug)]
pub struct IntegerSnf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

pub fn snf(m: &IntMatrix) -> IntegerSnf {
    let s = smith(&Integers, m).expect("the integers admit Smith reduction");
    IntegerSnf { u: s.left_inv, d: s.diag, v: s.right_inv }
}

/// `Z^free_rank ⊕ ⊕ Z/torsion_i` with `1 < torsion_1 | torsion_2 | ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CanonicalForm {
    pub free_rank: usize,
    #[serde(serialize_with = "as_strings")]
    pub torsion: Vec<BigInt>,
}

impl CanonicalForm {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = vec![];
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" + "))
    }
}

/// `Z^generators / (column span of relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpAbelianGroup {
    generators: usize,
    relations: IntMatrix,
}

impl FpAbelianGroup {
    pub fn new(generators: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != generators {
            return Err(Error::Shape(format!(
                "relation matrix has {} rows for {generators} generators",
                relations.rows()
            )));
        }
        Ok(Self { generators, relations })
    }

    pub fn free(n: usize) -> Self {
        Self { generators: n, relations: Matrix::zero(&Integers, n, 0) }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn cyclic(order: i64) -> Self {
        Self { generators: 1, relations: int_matrix(1, 1, &[order]) }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self {
            generators: self.generators + other.generators,
            relations: Matrix::block_diag(&Integers, &[&self.relations, &other.relations]),
        }
    }

    pub fn canonical(&self) -> CanonicalForm {
        let s = smith(&Integers, &self.relations).expect("integer Smith reduction");
        let torsion = s.invariant_factors().into_iter().map(|d| d.abs()).filter(|d| !d.is_one()).collect();
        CanonicalForm { free_rank: self.generators - s.rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.canonical().is_trivial()
    }

    /// Canonical form rendered as `Z^2 + Z/4`.
    pub fn to_string_form(&self) -> String {
        self.canonical().to_string()
    }

    pub fn isomorphic(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Whether every column of `x` (in generator coordinates) is zero in the group.
    pub fn vanishes(&self, x: &IntMatrix) -> bool {
        if x.cols() == 0 || x.is_zero(&Integers) {
            return true;
        }
        solve(&Integers, &self.relations, x).expect("integer solve").is_some()
    }

    /// Coordinates of `x` on the canonical cyclic summands: torsion entries are reduced
    /// into `0..d`, free entries follow.
    pub fn coordinates(&self, x: &[BigInt]) -> Vec<BigInt> {
        let s = smith(&Integers, &self.relations).expect("integer Smith reduction");
        let y = s.left.apply(&Integers, x);
        let mut out = vec![];
        for (i, yi) in y.into_iter().enumerate() {
            if i < s.rank {
                let d = s.diag.get(i, i).abs();
                if !d.is_one() {
                    out.push(((yi % &d) + &d) % &d);
                }
            } else {
                out.push(yi);
            }
        }
        out
    }
}

/// A homomorphism given on generators; column `j` is the image of generator `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMap {
    source: FpAbelianGroup,
    target: FpAbelianGroup,
    matrix: IntMatrix,
}

impl GroupMap {
    /// Checks that relations of the source land in the relation span of the target.
    pub fn new(source: FpAbelianGroup, target: FpAbelianGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.shape() != (target.generators, source.generators) {
            return Err(Error::Shape(format!(
                "group map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.generators,
                source.generators
            )));
        }
        let images = matrix.mul(&Integers, &source.relations);
        for j in 0..images.cols() {
            let col = images.select_columns(&[j]);
            if !target.vanishes(&col) {
                return Err(Error::IllDefinedMap(format!(
                    "source relation {j} maps to {:?}, which is nonzero in the target",
                    col.column(0).iter().map(BigInt::to_string).collect::<Vec<_>>()
                )));
            }
        }
        Ok(Self { source, target, matrix })
    }

    pub fn identity(g: &FpAbelianGroup) -> Self {
        Self { source: g.clone(), target: g.clone(), matrix: Matrix::identity(&Integers, g.generators) }
    }

    pub fn zero(source: &FpAbelianGroup, target: &FpAbelianGroup) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zero(&Integers, target.generators, source.generators),
        }
    }

    pub fn source(&self) -> &FpAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FpAbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &GroupMap) -> Result<GroupMap> {
        if first.target != self.source {
            return Err(Error::Shape("composing group maps with mismatched middle group".into()));
        }
        Ok(Self { source: first.source.clone(), target: self.target.clone(), matrix: self.matrix.mul(&Integers, &first.matrix) })
    }

    pub fn add(&self, other: &GroupMap) -> Result<GroupMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Shape("adding group maps with different endpoints".into()));
        }
        Ok(Self { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.add(&Integers, &other.matrix) })
    }

    pub fn neg(&self) -> GroupMap {
        Self { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.neg(&Integers) }
    }

    pub fn sub(&self, other: &GroupMap) -> Result<GroupMap> {
        self.add(&other.neg())
    }

    /// `f ⊕ g` on `A ⊕ C -> B ⊕ D`.
    pub fn direct_sum(&self, other: &GroupMap) -> GroupMap {
        Self {
            source: self.source.direct_sum(&other.source),
            target: self.target.direct_sum(&other.target),
            matrix: Matrix::block_diag(&Integers, &[&self.matrix, &other.matrix]),
        }
    }

    /// `(x, y) -> f x + g y` on `A ⊕ C -> B`.
    pub fn sum_map(f: &GroupMap, g: &GroupMap) -> Result<GroupMap> {
        if f.target != g.target {
            return Err(Error::Shape("sum map needs a common target".into()));
        }
        Ok(Self { source: f.source.direct_sum(&g.source), target: f.target.clone(), matrix: f.matrix.hstack(&g.matrix) })
    }

    /// Block matrix of maps `grid[row][col]: source_col -> target_row`.
    pub fn from_blocks(sources: &[&FpAbelianGroup], targets: &[&FpAbelianGroup], grid: &[Vec<&GroupMap>]) -> Result<GroupMap> {
        let source = sources.iter().skip(1).fold(sources[0].clone(), |a, b| a.direct_sum(b));
        let target = targets.iter().skip(1).fold(targets[0].clone(), |a, b| a.direct_sum(b));
        let blocks: Vec<Vec<IntMatrix>> = grid.iter().map(|row| row.iter().map(|m| m.matrix.clone()).collect()).collect();
        Self::new(source, target, Matrix::from_blocks(&Integers, &blocks))
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.apply(&Integers, x)
    }

    pub fn is_zero(&self) -> bool {
        self.target.vanishes(&self.matrix)
    }

    /// Equality as homomorphisms, not as matrices.
    pub fn equals(&self, other: &GroupMap) -> bool {
        self.source == other.source && self.target == other.target && self.sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }

    /// Whether `x` (target coordinates) lies in the image.
    pub fn image_contains(&self, x: &[BigInt]) -> bool {
        let a = self.matrix.hstack(&self.target.relations);
        let b = Matrix::column_vector(x.to_vec());
        solve(&Integers, &a, &b).expect("integer solve").is_some()
    }

    pub fn is_injective(&self) -> bool {
        ker_coker(self).kernel.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        ker_coker(self).cokernel.is_trivial()
    }

    pub fn is_iso(&self) -> bool {
        let kc = ker_coker(self);
        kc.kernel.is_trivial() && kc.cokernel.is_trivial()
    }
}

/// Checks of `0 -> ker -> A -> B -> coker -> 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KerCokerCertificate {
    pub inclusion_injective: bool,
    pub inclusion_then_map_vanishes: bool,
    pub map_then_projection_vanishes: bool,
    pub projection_surjective: bool,
}

impl KerCokerCertificate {
    pub fn holds(&self) -> bool {
        self.inclusion_injective && self.inclusion_then_map_vanishes && self.map_then_projection_vanishes && self.projection_surjective
    }
}

#[derive(Clone, Debug)]
pub struct KerCoker {
    pub kernel: FpAbelianGroup,
    pub inclusion: GroupMap,
    pub cokernel: FpAbelianGroup,
    pub projection: GroupMap,
    pub certificate: KerCokerCertificate,
}

fn top_rows(m: &IntMatrix, n: usize) -> IntMatrix {
    m.submatrix(0..n, 0..m.cols())
}

/// `x ∈ Z^{g_S}` lies in the kernel iff `M x ∈ span(rel_T)`; the kernel subgroup is
/// generated by the projection of `ker [M | rel_T]`, and its relations are the
/// combinations landing in `span(rel_S)`.
pub fn ker_coker(f: &GroupMap) -> KerCoker {
    let (s, t) = (&f.source, &f.target);
    let gens = top_rows(&kernel_basis(&Integers, &f.matrix.hstack(&t.relations)).expect("integer kernel"), s.generators);
    let m = gens.cols();
    let rel = top_rows(&kernel_basis(&Integers, &gens.hstack(&s.relations)).expect("integer kernel"), m);
    let kernel = FpAbelianGroup { generators: m, relations: rel };
    let inclusion = GroupMap { source: kernel.clone(), target: s.clone(), matrix: gens };

    let cokernel = FpAbelianGroup { generators: t.generators, relations: t.relations.hstack(&f.matrix) };
    let projection = GroupMap { source: t.clone(), target: cokernel.clone(), matrix: Matrix::identity(&Integers, t.generators) };

    let inclusion_injective = {
        // a combination of kernel generators that vanishes in the source must be a relation
        let a = inclusion.matrix.hstack(&s.relations);
        let z = top_rows(&kernel_basis(&Integers, &a).expect("integer kernel"), m);
        kernel.vanishes(&z)
    };
    let certificate = KerCokerCertificate {
        inclusion_injective,
        inclusion_then_map_vanishes: t.vanishes(&f.matrix.mul(&Integers, &inclusion.matrix)),
        map_then_projection_vanishes: cokernel.vanishes(&f.matrix),
        projection_surjective: true,
    };
    KerCoker { kernel, inclusion, cokernel, projection, certificate }
}

/// Exactness of `A -f-> B -g-> C` at `B`; on failure, an element of `ker g` outside `im f`
/// or a generator whose image under `g ∘ f` is nonzero.
pub fn exactness_witness(f: &GroupMap, g: &GroupMap) -> Result<Option<String>> {
    let gf = g.compose(f)?;
    for j in 0..gf.matrix.cols() {
        if !gf.target.vanishes(&gf.matrix.select_columns(&[j])) {
            return Ok(Some(format!("g(f(generator {j})) is nonzero")));
        }
    }
    let ker = ker_coker(g).inclusion;
    for j in 0..ker.matrix.cols() {
        let x = ker.matrix.column(j);
        if !f.image_contains(&x) {
            let shown: Vec<String> = x.iter().map(BigInt::to_string).collect();
            return Ok(Some(format!("kernel element [{}] is not in the image", shown.join(", "))));
        }
    }
    Ok(None)
}
