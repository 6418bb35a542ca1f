//! Structural graph metrics: degrees, diameter, connectivity, super edge
//! connectivity, and planarity.
//!
//! Everything here is exact. Vertex and edge connectivity run unit-capacity
//! max-flow (Menger); planarity searches for a K5 or K3,3 subdivision after
//! an edge-count prefilter, which is exponential in the worst case but fine
//! for the intended range (n <= 16). Metrics are cached lazily per graph via
//! [`Metrics`], so hypothesis evaluation only pays for what it reads.

use std::cell::OnceCell;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("operation requires a connected graph")]
    Disconnected,
}

/// Graph diameter; `Infinite` for disconnected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Diameter::Finite(d) => d >= k,
            Diameter::Infinite => true,
        }
    }

    pub fn is(self, k: usize) -> bool {
        self == Diameter::Finite(k)
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => ser.serialize_u64(*d as u64),
            Diameter::Infinite => ser.serialize_str("inf"),
        }
    }
}

/// (minimum degree, maximum degree).
pub fn degree_stats(g: &Graph) -> (usize, usize) {
    let mut lo = usize::MAX;
    let mut hi = 0;
    for v in 0..g.order() {
        let d = g.degree(v);
        lo = lo.min(d);
        hi = hi.max(d);
    }
    (lo, hi)
}

/// `Some(r)` iff every vertex has degree exactly `r`.
pub fn regularity(g: &Graph) -> Option<usize> {
    let (lo, hi) = degree_stats(g);
    (lo == hi).then_some(lo)
}

pub fn is_regular(g: &Graph, r: usize) -> bool {
    regularity(g) == Some(r)
}

/// Eccentricity sweep by bitset BFS; `Infinite` iff disconnected.
pub fn diameter(g: &Graph) -> Diameter {
    let n = g.order();
    let full = g.vertices();
    let mut diam = 0usize;
    for v in 0..n {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        let mut dist = 0usize;
        while seen != full {
            let mut next = VertexSet::EMPTY;
            for u in frontier.iter() {
                next = next.union(g.neighbors(u));
            }
            next = next.difference(seen);
            if next.is_empty() {
                return Diameter::Infinite;
            }
            seen = seen.union(next);
            frontier = next;
            dist += 1;
        }
        diam = diam.max(dist);
    }
    Diameter::Finite(diam)
}

// ---------------------------------------------------------------------------
// Max-flow core (unit-ish capacities, tiny node counts)
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct Arc {
    to: usize,
    cap: u32,
    rev: usize,
}

struct FlowNet {
    adj: Vec<Vec<Arc>>,
}

impl FlowNet {
    fn new(nodes: usize) -> FlowNet {
        FlowNet {
            adj: vec![Vec::new(); nodes],
        }
    }

    /// Directed arc with residual counterpart of capacity `back`.
    fn add_arc(&mut self, u: usize, v: usize, cap: u32, back: u32) {
        let ru = self.adj[u].len();
        let rv = self.adj[v].len();
        self.adj[u].push(Arc {
            to: v,
            cap,
            rev: rv,
        });
        self.adj[v].push(Arc {
            to: u,
            cap: back,
            rev: ru,
        });
    }

    /// Max flow from `s` to `t`, stopping early once `limit` is reached.
    /// Augments along shortest paths, one unit of bottleneck at a time
    /// (capacities here are tiny, so this is plenty).
    fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0u32;
        let mut parent: Vec<(usize, usize)> = vec![(usize::MAX, 0); self.adj.len()];
        while flow < limit {
            for p in parent.iter_mut() {
                p.0 = usize::MAX;
            }
            parent[s] = (s, 0);
            let mut queue = std::collections::VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                for (i, arc) in self.adj[u].iter().enumerate() {
                    if arc.cap > 0 && parent[arc.to].0 == usize::MAX {
                        parent[arc.to] = (u, i);
                        if arc.to == t {
                            break 'bfs;
                        }
                        queue.push_back(arc.to);
                    }
                }
            }
            if parent[t].0 == usize::MAX {
                break;
            }
            // Bottleneck along the path, then push it.
            let mut bottleneck = u32::MAX;
            let mut v = t;
            while v != s {
                let (u, i) = parent[v];
                bottleneck = bottleneck.min(self.adj[u][i].cap);
                v = u;
            }
            let mut v = t;
            while v != s {
                let (u, i) = parent[v];
                let rev = self.adj[u][i].rev;
                self.adj[u][i].cap -= bottleneck;
                self.adj[v][rev].cap += bottleneck;
                v = u;
            }
            flow += bottleneck;
        }
        flow
    }
}

/// Max number of internally vertex-disjoint s-t paths (s, t nonadjacent),
/// capped at `limit`: standard vertex-splitting construction.
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: u32) -> u32 {
    let n = g.order();
    let mut net = FlowNet::new(2 * n);
    let big = n as u32;
    for v in 0..n {
        net.add_arc(2 * v, 2 * v + 1, 1, 0); // v_in -> v_out, vertex capacity 1
    }
    for (u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, big, 0);
        net.add_arc(2 * v + 1, 2 * u, big, 0);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Vertex connectivity. 0 for disconnected graphs (and K1), n-1 for K_n,
/// otherwise the minimum over nonadjacent pairs of Menger flow values.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 || !g.is_connected() {
        return 0;
    }
    if g.size() == n * (n - 1) / 2 {
        return n - 1;
    }
    let mut best = degree_stats(g).0 as u32; // kappa <= delta
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) && best > 0 {
                best = best.min(local_vertex_connectivity(g, s, t, best));
            }
        }
    }
    best as usize
}

/// Max s-t flow in the undirected unit-capacity graph, capped at `limit`.
fn local_edge_connectivity(g: &Graph, s: usize, t: usize, limit: u32) -> u32 {
    let mut net = FlowNet::new(g.order());
    for (u, v) in g.edges() {
        // An undirected unit edge: each direction is the other's residual.
        net.add_arc(u, v, 1, 1);
    }
    net.max_flow(s, t, limit)
}

/// Edge connectivity. 0 for disconnected graphs (and K1); otherwise the
/// minimum s-t flow with s fixed at vertex 0 (any cut separates 0 from
/// something).
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 || !g.is_connected() {
        return 0;
    }
    let mut best = degree_stats(g).0 as u32; // lambda <= delta
    for t in 1..n {
        if best == 0 {
            break;
        }
        best = best.min(local_edge_connectivity(g, 0, t, best));
    }
    best as usize
}

// ---------------------------------------------------------------------------
// Super edge connectivity
// ---------------------------------------------------------------------------

/// True iff `size`-cliques exist within `cands` (all cands pairwise checks in
/// `g`). Standard extension search over ascending vertex indices.
fn has_clique_within(g: &Graph, cands: VertexSet, size: usize) -> bool {
    fn extend(g: &Graph, allowed: VertexSet, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if allowed.len() < need {
            return false;
        }
        for v in allowed.iter() {
            // Only extend upward to avoid revisiting subsets.
            let upper = VertexSet(allowed.0 & !(u64::MAX >> (63 - v)));
            if extend(g, upper.intersection(g.neighbors(v)), need - 1) {
                return true;
            }
        }
        false
    }
    extend(g, cands, size)
}

/// Smallest cut separating contracted pair {s1,s2} from {t1,t2}, capped.
fn pair_cut(g: &Graph, s: (usize, usize), t: (usize, usize), limit: u32) -> u32 {
    let n = g.order();
    // Map s.0/s.1 -> node s.0, t.0/t.1 -> node t.0, rest to themselves.
    let map = |v: usize| {
        if v == s.1 {
            s.0
        } else if v == t.1 {
            t.0
        } else {
            v
        }
    };
    let mut net = FlowNet::new(n);
    for (u, v) in g.edges() {
        let (a, b) = (map(u), map(v));
        if a != b {
            net.add_arc(a, b, 1, 1);
        }
    }
    net.max_flow(s.0, t.0, limit)
}

/// Definitional super edge connectivity: lambda = delta and every minimum
/// edge cut isolates a single vertex. The nontrivial-cut search contracts
/// every disjoint pair of vertex pairs and asks for a cut of size <= lambda;
/// a cut with both sides of order >= 2 exists iff some such contracted pair
/// admits one.
pub fn is_super_lambda_definitional(g: &Graph) -> Result<bool, MetricsError> {
    if !g.is_connected() {
        return Err(MetricsError::Disconnected);
    }
    let n = g.order();
    let lambda = edge_connectivity(g);
    let (delta, _) = degree_stats(g);
    if lambda != delta {
        // Trivial cuts have size >= delta > lambda, so no minimum cut is
        // trivial.
        return Ok(false);
    }
    if n < 4 {
        return Ok(true);
    }
    let limit = lambda as u32 + 1;
    for s1 in 0..n {
        for s2 in s1 + 1..n {
            // Pair-of-pairs is unordered: insist the source pair holds the
            // smaller minimum to skip mirrored duplicates.
            for t1 in s1 + 1..n {
                if t1 == s2 {
                    continue;
                }
                for t2 in t1 + 1..n {
                    if t2 == s1 || t2 == s2 {
                        continue;
                    }
                    if pair_cut(g, (s1, s2), (t1, t2), limit) <= lambda as u32 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Wang-Li criterion for diameter-2 graphs with delta >= 2: super-lambda
/// iff there is no complete subgraph K_delta all of whose vertices have
/// degree exactly delta in G. Callers must ensure diameter 2 and delta >= 2;
/// the dispatcher below does, and a property test cross-checks this against
/// the definitional computation on every such graph of order <= 8.
pub fn is_super_lambda_wang_li(g: &Graph) -> bool {
    let (delta, _) = degree_stats(g);
    debug_assert!(delta >= 2);
    let cands = VertexSet::from_iter((0..g.order()).filter(|&v| g.degree(v) == delta));
    !has_clique_within(g, cands, delta)
}

/// Super edge connectivity: true iff lambda = delta and no minimum edge cut
/// leaves two components of order >= 2. Rejects disconnected input.
///
/// Dispatch: diameter-2 graphs with delta >= 2 use the Wang-Li
/// characterization; everything else (including delta = 1, where diameter 2
/// rules out nontrivial bridges) takes the definitional path.
pub fn is_super_lambda(g: &Graph) -> Result<bool, MetricsError> {
    if !g.is_connected() {
        return Err(MetricsError::Disconnected);
    }
    if diameter(g).is(2) && degree_stats(g).0 >= 2 {
        Ok(is_super_lambda_wang_li(g))
    } else {
        is_super_lambda_definitional(g)
    }
}

// ---------------------------------------------------------------------------
// Planarity
// ---------------------------------------------------------------------------

/// Enumerate simple u-v paths whose internal vertices avoid `blocked`,
/// calling `f` with the internal-vertex set of each; stops early when `f`
/// returns true.
fn for_each_path(
    g: &Graph,
    cur: usize,
    target: usize,
    blocked: VertexSet,
    internals: VertexSet,
    f: &mut dyn FnMut(VertexSet) -> bool,
) -> bool {
    for w in g.neighbors(cur).iter() {
        if w == target {
            if f(internals) {
                return true;
            }
        } else if !blocked.contains(w) && !internals.contains(w) {
            if for_each_path(g, w, target, blocked, internals.union(VertexSet::singleton(w)), f) {
                return true;
            }
        }
    }
    false
}

/// Try to route all `pairs` as internally disjoint paths avoiding `branch`
/// vertices. If the pair is an edge, only the direct edge is tried: any
/// routing using a longer path stays valid after swapping it for the edge,
/// so this loses no solutions.
fn route_pairs(g: &Graph, branch: VertexSet, pairs: &[(usize, usize)], used: VertexSet) -> bool {
    let Some(&(u, v)) = pairs.first() else {
        return true;
    };
    if g.has_edge(u, v) {
        return route_pairs(g, branch, &pairs[1..], used);
    }
    let blocked = branch.union(used);
    for_each_path(g, u, v, blocked, VertexSet::EMPTY, &mut |internals| {
        route_pairs(g, branch, &pairs[1..], used.union(internals))
    })
}

fn subsets_of_size(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            rec(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(pool, k, 0, &mut cur, &mut out);
    out
}

fn has_k5_subdivision(g: &Graph) -> bool {
    let cands: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 4).collect();
    for branch in subsets_of_size(&cands, 5) {
        let bset = VertexSet::from_iter(branch.iter().copied());
        let mut pairs = Vec::with_capacity(10);
        for i in 0..5 {
            for j in i + 1..5 {
                pairs.push((branch[i], branch[j]));
            }
        }
        if route_pairs(g, bset, &pairs, VertexSet::EMPTY) {
            return true;
        }
    }
    false
}

fn has_k33_subdivision(g: &Graph) -> bool {
    let cands: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 3).collect();
    for six in subsets_of_size(&cands, 6) {
        let bset = VertexSet::from_iter(six.iter().copied());
        // Split the six into two sides of three; fixing six[0] on side A
        // halves the symmetric duplicates.
        for rest in subsets_of_size(&[1, 2, 3, 4, 5], 2) {
            let side_a = [six[0], six[rest[0]], six[rest[1]]];
            let side_b: Vec<usize> = (1..6)
                .filter(|i| !rest.contains(i))
                .map(|i| six[i])
                .collect();
            let mut pairs = Vec::with_capacity(9);
            for &a in &side_a {
                for &b in &side_b {
                    pairs.push((a, b));
                }
            }
            if route_pairs(g, bset, &pairs, VertexSet::EMPTY) {
                return true;
            }
        }
    }
    false
}

fn component_is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n <= 4 {
        return true;
    }
    if g.size() > 3 * n - 6 {
        return false;
    }
    !has_k33_subdivision(g) && !has_k5_subdivision(g)
}

/// Kuratowski-based planarity test: planar iff no component contains a
/// subdivision of K5 or K3,3. Exponential in the worst case; intended for
/// n <= 16.
pub fn is_planar(g: &Graph) -> bool {
    g.components()
        .into_iter()
        .all(|comp| component_is_planar(&g.induced_subgraph(comp).expect("nonempty component")))
}

// ---------------------------------------------------------------------------
// Cached metrics and the materialized report
// ---------------------------------------------------------------------------

/// Lazily computed, cached metrics for one graph. Single-threaded by design
/// (sweeps create one per graph per worker).
pub struct Metrics<'g> {
    g: &'g Graph,
    degree_stats: OnceCell<(usize, usize)>,
    diameter: OnceCell<Diameter>,
    kappa: OnceCell<usize>,
    lambda: OnceCell<usize>,
    super_lambda: OnceCell<Option<bool>>,
    planar: OnceCell<bool>,
    components: OnceCell<Vec<usize>>,
}

impl<'g> Metrics<'g> {
    pub fn new(g: &'g Graph) -> Metrics<'g> {
        Metrics {
            g,
            degree_stats: OnceCell::new(),
            diameter: OnceCell::new(),
            kappa: OnceCell::new(),
            lambda: OnceCell::new(),
            super_lambda: OnceCell::new(),
            planar: OnceCell::new(),
            components: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn degree_stats(&self) -> (usize, usize) {
        *self.degree_stats.get_or_init(|| degree_stats(self.g))
    }

    pub fn diameter(&self) -> Diameter {
        *self.diameter.get_or_init(|| diameter(self.g))
    }

    pub fn kappa(&self) -> usize {
        *self.kappa.get_or_init(|| vertex_connectivity(self.g))
    }

    pub fn lambda(&self) -> usize {
        *self.lambda.get_or_init(|| edge_connectivity(self.g))
    }

    /// `None` when disconnected.
    pub fn super_lambda(&self) -> Option<bool> {
        *self
            .super_lambda
            .get_or_init(|| is_super_lambda(self.g).ok())
    }

    pub fn planar(&self) -> bool {
        *self.planar.get_or_init(|| is_planar(self.g))
    }

    /// Component orders, ascending.
    pub fn component_orders(&self) -> &[usize] {
        self.components.get_or_init(|| {
            let mut orders: Vec<usize> =
                self.g.components().iter().map(|c| c.len()).collect();
            orders.sort_unstable();
            orders
        })
    }

    pub fn is_connected(&self) -> bool {
        self.component_orders().len() == 1
    }

    pub fn regularity(&self) -> Option<usize> {
        let (lo, hi) = self.degree_stats();
        (lo == hi).then_some(lo)
    }
}

/// Fully materialized structure metrics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub min_degree: usize,
    pub max_degree: usize,
    pub diameter: Diameter,
    pub kappa: usize,
    pub lambda: usize,
    /// `None` when the graph is disconnected (super-lambda is undefined).
    pub is_super_lambda: Option<bool>,
    pub is_planar: bool,
    pub is_regular_of: Option<usize>,
    pub component_orders: Vec<usize>,
}

pub fn structure_report(g: &Graph) -> StructureReport {
    let m = Metrics::new(g);
    let (min_degree, max_degree) = m.degree_stats();
    StructureReport {
        min_degree,
        max_degree,
        diameter: m.diameter(),
        kappa: m.kappa(),
        lambda: m.lambda(),
        is_super_lambda: m.super_lambda(),
        is_planar: m.planar(),
        is_regular_of: m.regularity(),
        component_orders: m.component_orders().to_vec(),
    }
}
