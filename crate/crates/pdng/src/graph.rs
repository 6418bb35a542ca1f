//! Simple undirected graphs on at most 62 vertices.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, so every set
//! operation the solvers need (closed neighborhoods, frontier expansion,
//! forcing scans) is a handful of word ops.  The 62-vertex cap keeps every
//! vertex set in a single word and matches the single-byte graph6 size range.

use std::fmt;

use thiserror::Error;

/// Hard cap on graph order: vertex sets must fit in a `u64` and the graph6
/// encoder only emits single-byte sizes (n <= 62).
pub const MAX_VERTICES: usize = 62;

/// Errors from graph construction and accessors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} out of range 1..={MAX_VERTICES}")]
    OrderOutOfRange(usize),
    #[error("edge ({0}, {1}) is a self-loop")]
    SelfLoop(usize, usize),
    #[error("vertex {0} out of range for order-{1} graph")]
    VertexOutOfRange(usize, usize),
    #[error("vertex set {0:?} is not a subset of the vertex set of an order-{1} graph")]
    SetOutOfRange(VertexSet, usize),
    #[error("empty vertex set where a non-empty set is required")]
    EmptySet,
}

/// A set of vertices of a graph of order <= 62, as a bitmask.
///
/// The containing graph's order is implied by context; operations that mix a
/// `VertexSet` with a [`Graph`] validate the mask against the graph's order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline(always)]
    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    /// Full vertex set {0, .., n-1}.
    #[inline(always)]
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        let mut s = VertexSet(0);
        for v in vs {
            s.insert(v);
        }
        s
    }

    #[inline(always)]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline(always)]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    #[inline(always)]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline(always)]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline(always)]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline(always)]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline(always)]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline(always)]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline(always)]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Lowest-index vertex, if any.
    #[inline(always)]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterate members in ascending index order.
    #[inline]
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An undirected simple graph with vertices 0..n-1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Build a graph from an explicit order and edge list.
    ///
    /// Duplicate edges are tolerated (the adjacency is a set); self-loops and
    /// out-of-range endpoints are rejected, as are orders outside 1..=62.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut g = Graph {
            n,
            adj: vec![0; n],
        };
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u, v));
            }
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        g.debug_validate();
        Ok(g)
    }

    /// Build directly from adjacency masks. Internal constructor for
    /// generators and parsers that already produce valid rows.
    pub(crate) fn from_adj(adj: Vec<u64>) -> Graph {
        let g = Graph { n: adj.len(), adj };
        g.debug_validate();
        g
    }

    #[inline]
    fn debug_validate(&self) {
        debug_assert!(self.n >= 1 && self.n <= MAX_VERTICES);
        let full = VertexSet::full(self.n).0;
        for v in 0..self.n {
            debug_assert_eq!(self.adj[v] & !full, 0, "adjacency bits beyond order");
            debug_assert_eq!(self.adj[v] >> v & 1, 0, "self-loop at {v}");
            for u in VertexSet(self.adj[v]).iter() {
                debug_assert!(self.adj[u] >> v & 1 == 1, "asymmetric edge {u}-{v}");
            }
        }
    }

    #[inline(always)]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Open neighborhood N(v) as a bitmask.
    #[inline(always)]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood N[v].
    #[inline(always)]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline(always)]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut es = Vec::with_capacity(self.size());
        for v in 0..self.n {
            for u in VertexSet(self.adj[v] & !(u64::MAX << v)).iter() {
                es.push((u, v));
            }
        }
        es
    }

    /// Closed neighborhood N[S] of a set.
    pub fn closed_neighborhood(&self, s: VertexSet) -> Result<VertexSet, GraphError> {
        self.check_set(s)?;
        let mut out = s.0;
        for v in s.iter() {
            out |= self.adj[v];
        }
        Ok(VertexSet(out))
    }

    fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        if s.is_subset_of(self.vertices()) {
            Ok(())
        } else {
            Err(GraphError::SetOutOfRange(s, self.n))
        }
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1 << v))
            .collect();
        Graph::from_adj(adj)
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 1 {
                continue;
            }
            let comp = self.reach(v);
            seen |= comp.0;
            comps.push(comp);
        }
        comps
    }

    /// Vertices reachable from `v` (including `v`).
    pub fn reach(&self, v: usize) -> VertexSet {
        let mut comp = 1u64 << v;
        loop {
            let mut next = comp;
            for u in VertexSet(comp).iter() {
                next |= self.adj[u];
            }
            if next == comp {
                return VertexSet(comp);
            }
            comp = next;
        }
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0) == self.vertices()
    }

    /// Induced subgraph on a non-empty vertex set, relabeled 0..|W|-1 in
    /// ascending order of the original indices.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Graph, GraphError> {
        self.check_set(w)?;
        if w.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let verts = w.to_vec();
        let mut adj = vec![0u64; verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            for (j, &u) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(v, u) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Ok(Graph::from_adj(adj))
    }

    /// Disjoint union with consecutive relabeling: `self` keeps its labels,
    /// `other`'s vertices shift up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|a| a << self.n));
        Ok(Graph::from_adj(adj))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
