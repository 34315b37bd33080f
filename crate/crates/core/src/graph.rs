//! Threshold graphs T(n, sigma): construction, adjacency, complement
//! labelings, recognition, enumeration, and coedge-ideal generators.
//!
//! A threshold graph is built by inserting vertices 0, 1, ..., n one at a
//! time, each new vertex entering either isolated or dominating (adjacent to
//! everything already present). Here the build sequence is encoded as the
//! pair (n, sigma) with sigma ⊆ {1, ..., n} the set of vertices inserted
//! isolated; vertex 0 carries no flag. For u < v this makes uv an edge
//! exactly when v ∉ sigma, so adjacency is always derived from (n, sigma),
//! never stored. The pair is a complete isomorphism invariant, which is what
//! makes exhaustive enumeration over subsets meaningful.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A threshold graph on vertices {0, ..., n} with isolated-insertion set
/// sigma ⊆ {1, ..., n}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr")]
pub struct ThresholdGraph {
    n: usize,
    sigma: BTreeSet<usize>,
}

/// Wire form of a graph; deserialization funnels through [`ThresholdGraph::new`]
/// so invalid sigma sets are rejected rather than silently admitted.
#[derive(Deserialize)]
struct GraphRepr {
    n: usize,
    sigma: Vec<usize>,
}

impl TryFrom<GraphRepr> for ThresholdGraph {
    type Error = Error;

    fn try_from(repr: GraphRepr) -> Result<Self> {
        ThresholdGraph::new(repr.n, repr.sigma)
    }
}

/// An unordered non-adjacent pair, normalized to u < v.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonEdge {
    u: usize,
    v: usize,
}

impl NonEdge {
    /// Pairs the two endpoints, normalizing order. The endpoints must be
    /// distinct; membership in a particular graph's complement is checked by
    /// the labeling methods, not here.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::IdenticalVertices(a));
        }
        Ok(NonEdge { u: a.min(b), v: a.max(b) })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }
}

/// Closed integer interval [lo, hi] of homological degrees hit by a non-edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelInterval {
    lo: usize,
    hi: usize,
}

impl LabelInterval {
    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn contains(&self, k: usize) -> bool {
        self.lo <= k && k <= self.hi
    }

    // A closed interval always holds at least one degree, so there is no
    // matching `is_empty`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }
}

/// A non-edge together with both of its labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabeledNonEdge {
    pub edge: NonEdge,
    /// Interval label: [u+1, u+1+i(v)] where i is [`ThresholdGraph::isolated_above`].
    pub beta: LabelInterval,
    /// Point label: u+1+i(v), the top of the interval.
    pub lambda: usize,
}

/// How to extend a graph (or the matching sequence) by one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shift {
    /// New vertex adjacent to everything: n+1 ∉ sigma.
    Dominating,
    /// New vertex isolated at insertion: n+1 ∈ sigma.
    Isolated,
}

impl ThresholdGraph {
    /// Builds T(n, sigma). Requires n ≥ 1 and sigma ⊆ {1, ..., n}.
    pub fn new(n: usize, sigma: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NTooSmall);
        }
        let sigma: BTreeSet<usize> = sigma.into_iter().collect();
        for &s in &sigma {
            if s < 1 || s > n {
                return Err(Error::SigmaOutOfRange(s));
            }
        }
        Ok(ThresholdGraph { n, sigma })
    }

    /// Decodes a subset index: bit i-1 of `mask` set means i ∈ sigma. This is
    /// the canonical enumeration order used everywhere graphs are listed.
    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!((1..=63).contains(&n) && mask < (1 << n));
        let sigma = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        ThresholdGraph { n, sigma }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> &BTreeSet<usize> {
        &self.sigma
    }

    /// Number of vertices, n + 1.
    pub fn vertex_count(&self) -> usize {
        self.n + 1
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v > self.n {
            return Err(Error::VertexOutOfRange(v));
        }
        Ok(())
    }

    /// Whether uv is an edge: true exactly when max(u, v) ∉ sigma.
    pub fn is_edge(&self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::IdenticalVertices(u));
        }
        Ok(!self.sigma.contains(&u.max(v)))
    }

    fn edge_unchecked(&self, u: usize, v: usize) -> bool {
        !self.sigma.contains(&u.max(v))
    }

    /// All non-adjacent pairs, grouped by larger endpoint ascending, smaller
    /// endpoint ascending within a group. The count is sum of sigma, since
    /// v ∈ sigma misses exactly the v vertices below it.
    pub fn non_edges(&self) -> Vec<NonEdge> {
        let mut out = Vec::with_capacity(self.sigma.iter().sum());
        for &v in &self.sigma {
            for u in 0..v {
                out.push(NonEdge { u, v });
            }
        }
        out
    }

    /// i(v): how many members of sigma lie strictly above v, i.e. how many
    /// later vertices entered isolated.
    pub fn isolated_above(&self, v: usize) -> usize {
        self.sigma.range(v + 1..).count()
    }

    fn require_non_edge(&self, e: NonEdge) -> Result<()> {
        self.check_vertex(e.v)?;
        if self.edge_unchecked(e.u, e.v) {
            return Err(Error::NotANonEdge { u: e.u, v: e.v });
        }
        Ok(())
    }

    /// Interval label of a non-edge uv (u < v): [u+1, u+1+i(v)].
    pub fn beta_label(&self, e: NonEdge) -> Result<LabelInterval> {
        self.require_non_edge(e)?;
        Ok(LabelInterval { lo: e.u + 1, hi: e.u + 1 + self.isolated_above(e.v) })
    }

    /// Point label of a non-edge uv (u < v): u+1+i(v).
    pub fn lambda_label(&self, e: NonEdge) -> Result<usize> {
        self.require_non_edge(e)?;
        Ok(e.u + 1 + self.isolated_above(e.v))
    }

    /// Every non-edge with both labels attached, in [`Self::non_edges`] order.
    pub fn labeled_complement(&self) -> Vec<LabeledNonEdge> {
        self.non_edges()
            .into_iter()
            .map(|edge| {
                let above = self.isolated_above(edge.v);
                LabeledNonEdge {
                    edge,
                    beta: LabelInterval { lo: edge.u + 1, hi: edge.u + 1 + above },
                    lambda: edge.u + 1 + above,
                }
            })
            .collect()
    }

    /// T(n+1, sigma): appends vertex n+1 adjacent to everything.
    pub fn append_dominating(&self) -> Self {
        ThresholdGraph { n: self.n + 1, sigma: self.sigma.clone() }
    }

    /// T(n+1, sigma ∪ {n+1}): appends vertex n+1 isolated.
    pub fn append_isolated(&self) -> Self {
        let mut sigma = self.sigma.clone();
        sigma.insert(self.n + 1);
        ThresholdGraph { n: self.n + 1, sigma }
    }

    pub fn shift(&self, mode: Shift) -> Self {
        match mode {
            Shift::Dominating => self.append_dominating(),
            Shift::Isolated => self.append_isolated(),
        }
    }

    /// Materializes the adjacency matrix.
    pub fn adjacency(&self) -> Adjacency {
        let size = self.vertex_count();
        let mut rows = vec![vec![false; size]; size];
        for u in 0..size {
            for v in (u + 1)..size {
                if self.edge_unchecked(u, v) {
                    rows[u][v] = true;
                    rows[v][u] = true;
                }
            }
        }
        Adjacency { rows }
    }

    /// Generators x_u x_v of the coedge ideal, one per non-edge, sorted
    /// lexicographically by (u, v). Empty exactly when the graph is complete
    /// (sigma = ∅), where the ideal is zero and every Betti number vanishes.
    pub fn coedge_generators(&self) -> Vec<NonEdge> {
        let mut gens = self.non_edges();
        gens.sort();
        gens
    }
}

/// Output style for coedge-ideal monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialStyle {
    /// `x0*x3`
    Plain,
    /// `x_0*x_3`, underscore-subscripted for CAS import.
    Cas,
}

/// Renders one squarefree quadratic generator.
pub fn format_monomial(e: NonEdge, style: MonomialStyle) -> String {
    match style {
        MonomialStyle::Plain => format!("x{}*x{}", e.u, e.v),
        MonomialStyle::Cas => format!("x_{}*x_{}", e.u, e.v),
    }
}

/// Streams all 2^n threshold graphs on n+1 vertices in subset-index order:
/// graph k has i ∈ sigma exactly when bit i-1 of k is set. So the list
/// begins ∅, {1}, {2}, {1,2}, {3}, ... and ends {1, ..., n}.
///
/// Panics if n = 0 or n > 63; the practical range is far smaller.
pub fn enumerate(n: usize) -> impl Iterator<Item = ThresholdGraph> {
    assert!(n >= 1, "enumeration needs n >= 1");
    assert!(n <= 63, "n too large for enumeration: {n}");
    (0u64..1 << n).map(move |mask| ThresholdGraph::from_mask(n, mask))
}

/// Symmetric, loop-free boolean adjacency matrix used as recognition input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjacency {
    rows: Vec<Vec<bool>>,
}

impl Adjacency {
    /// Validates squareness, symmetry, and a zero diagonal.
    pub fn new(rows: Vec<Vec<bool>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::NotSimpleGraph);
        }
        for row in &rows {
            if row.len() != size {
                return Err(Error::NotSimpleGraph);
            }
        }
        for u in 0..size {
            if rows[u][u] {
                return Err(Error::NotSimpleGraph);
            }
            for v in (u + 1)..size {
                if rows[u][v] != rows[v][u] {
                    return Err(Error::NotSimpleGraph);
                }
            }
        }
        Ok(Adjacency { rows })
    }

    /// Builds the matrix on vertices {0, ..., m} from an edge list.
    /// Duplicate edges are tolerated; loops are not.
    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let size = m + 1;
        let mut rows = vec![vec![false; size]; size];
        for &(u, v) in edges {
            if u > m {
                return Err(Error::VertexOutOfRange(u));
            }
            if v > m {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::NotSimpleGraph);
            }
            rows[u][v] = true;
            rows[v][u] = true;
        }
        Ok(Adjacency { rows })
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v]
    }
}

/// Recovers (n, sigma) from an adjacency matrix by peeling: a threshold graph
/// always has a vertex that is currently dominating or currently isolated,
/// and that vertex was the last one inserted. Peeling in reverse therefore
/// reads the build sequence back off; any valid peel order yields the same
/// pair because (n, sigma) is a complete invariant. O(m^2) over m+1 vertices.
///
/// Rejects graphs with no peelable vertex ("not a threshold graph") and
/// single-vertex input (n = 0 is excluded from the representation).
pub fn recognize(adj: &Adjacency) -> Result<ThresholdGraph> {
    let size = adj.vertex_count();
    if size < 2 {
        return Err(Error::NTooSmall);
    }
    let n = size - 1;
    let mut alive = vec![true; size];
    let mut degree = vec![0usize; size];
    for u in 0..size {
        degree[u] = (0..size).filter(|&v| adj.has_edge(u, v)).count();
    }
    let mut sigma = BTreeSet::new();
    for position in (1..=n).rev() {
        let remaining = position + 1;
        // A dominating and an isolated vertex cannot coexist once two or
        // more vertices remain (the pair would have to be both adjacent and
        // non-adjacent), so at most one branch fires; we scan from the top
        // so ties among equal candidates resolve deterministically.
        let mut dominating = None;
        let mut isolated = None;
        for v in (0..size).rev().filter(|&v| alive[v]) {
            if dominating.is_none() && degree[v] == remaining - 1 {
                dominating = Some(v);
            }
            if isolated.is_none() && degree[v] == 0 {
                isolated = Some(v);
            }
        }
        let peeled = match (dominating, isolated) {
            (Some(v), _) => v,
            (None, Some(v)) => {
                sigma.insert(position);
                v
            }
            (None, None) => return Err(Error::NotThreshold),
        };
        alive[peeled] = false;
        if degree[peeled] > 0 {
            for v in (0..size).filter(|&v| alive[v]) {
                if adj.has_edge(peeled, v) {
                    degree[v] -= 1;
                }
            }
        }
    }
    ThresholdGraph::new(n, sigma)
}
