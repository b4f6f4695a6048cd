use crate::algebra::BaseRing;
use crate::error::{Error, Result};

/// Default bound on word length for the relation family.
pub const DEFAULT_RELATION_WINDOW: usize = 8;

/// Finite directed graph with edges stored as `(source, range)`, all 0-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::InvalidSpec("graph needs at least one vertex".into()));
        }
        if let Some((s, r)) = edges.iter().find(|(s, r)| *s >= vertices || *r >= vertices) {
            return Err(Error::InvalidSpec(format!(
                "edge [{}, {}] leaves the vertex range 1..={vertices}",
                s + 1,
                r + 1
            )));
        }
        Ok(Self { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn source(&self, e: usize) -> usize {
        self.edges[e].0
    }

    pub fn range(&self, e: usize) -> usize {
        self.edges[e].1
    }

    pub fn out_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].0 == v).collect()
    }

    pub fn in_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].1 == v).collect()
    }

    pub fn first_sink(&self) -> Option<usize> {
        (0..self.vertices).find(|&v| self.out_edges(v).is_empty())
    }

    pub fn is_sink_free(&self) -> bool {
        self.first_sink().is_none()
    }

    /// Edge eliminated by the CK2 rewrite at `v`: the lowest-index edge leaving `v`.
    pub fn special_edge(&self, v: usize) -> Option<usize> {
        self.edges.iter().position(|(s, _)| *s == v)
    }

    /// The Leavitt graph `L_n`: one vertex with `n` loops.
    pub fn rose(n: usize) -> Self {
        Self { vertices: 1, edges: vec![(0, 0); n] }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Laurent,
    /// `base^n` crossed with `Z`, where `t e_j = e_{sigma(j)} t`; `sigma` is 0-indexed.
    SkewLaurentPerm { sigma: Vec<usize> },
    Leavitt(Graph),
    /// `base[A,B,C,D]/(AB + CD - 1)` with the given generator degrees.
    Relation { degrees: [i64; 4], window: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Laurent => "laurent",
            Family::SkewLaurentPerm { .. } => "skew_laurent_perm",
            Family::Leavitt(_) => "leavitt",
            Family::Relation { .. } => "relation",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedRingSpec {
    pub base: BaseRing,
    pub family: Family,
}

impl GradedRingSpec {
    pub fn laurent(base: BaseRing) -> Self {
        Self { base, family: Family::Laurent }
    }

    /// `sigma` is 0-indexed and must be a bijection of `0..n`.
    pub fn skew_laurent_perm(base: BaseRing, sigma: Vec<usize>) -> Result<Self> {
        let n = sigma.len();
        if n == 0 {
            return Err(Error::InvalidSpec("skew family needs n >= 1".into()));
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(Error::SigmaNotBijective);
            }
            seen[s] = true;
        }
        Ok(Self { base, family: Family::SkewLaurentPerm { sigma } })
    }

    pub fn leavitt(base: BaseRing, graph: Graph) -> Result<Self> {
        if let Some(v) = graph.first_sink() {
            return Err(Error::GraphHasSink(v));
        }
        Ok(Self { base, family: Family::Leavitt(graph) })
    }

    /// The relation ring; the relation `AB + CD - 1` must be homogeneous.
    pub fn relation(base: BaseRing, degrees: [i64; 4], window: usize) -> Result<Self> {
        if degrees[0] + degrees[1] != 0 || degrees[2] + degrees[3] != 0 {
            return Err(Error::InvalidSpec(format!(
                "relation AB + CD - 1 is not homogeneous for degrees {degrees:?}"
            )));
        }
        if window == 0 {
            return Err(Error::InvalidSpec("relation window must be positive".into()));
        }
        Ok(Self { base, family: Family::Relation { degrees, window } })
    }

    pub fn relation_default(base: BaseRing) -> Self {
        Self::relation(base, [1, -1, 1, -1], DEFAULT_RELATION_WINDOW).expect("default degrees are homogeneous")
    }

    /// `Some(true/false)` for the Leavitt family, `None` otherwise.
    pub fn sink_free(&self) -> Option<bool> {
        match &self.family {
            Family::Leavitt(g) => Some(g.is_sink_free()),
            _ => None,
        }
    }
}

/// Permutation power `sigma^k(j)`, negative `k` meaning the inverse.
pub fn perm_power(sigma: &[usize], k: i64, j: usize) -> usize {
    let n = sigma.len() as i64;
    if n == 0 {
        return j;
    }
    let mut x = j;
    if k >= 0 {
        for _ in 0..k {
            x = sigma[x];
        }
    } else {
        let mut inv = vec![0; sigma.len()];
        for (i, &s) in sigma.iter().enumerate() {
            inv[s] = i;
        }
        for _ in 0..(-k) {
            x = inv[x];
        }
    }
    x
}

/// Cycles of a permutation, each listed from its smallest element.
pub fn cycles(sigma: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; sigma.len()];
    let mut out = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = vec![];
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push(x);
            x = sigma[x];
        }
        out.push(cyc);
    }
    out
}
