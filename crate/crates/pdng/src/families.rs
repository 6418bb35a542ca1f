//! Deterministic constructors for named graphs and parametric families, a
//! textual spec format for the CLI, and a recognizer for the triple-gadget
//! family used in the extremal characterizations.
//!
//! Labelings are fixed so witnesses are reproducible:
//! * `path`/`cycle`: vertices in walk order.
//! * `complete_bipartite(p, q)`: first part `0..p`, second `p..p+q`.
//! * `star(n)`: center 0.
//! * `r_k3(r)`: triangle i on `3i..3i+3`.
//! * `comb(k)`: spine vertex i at `2i`, its leaf at `2i+1`.
//! * `necklace(r)`: copy i of K4 minus an edge on `4i..4i+3` with the
//!   missing edge between `4i` and `4i+1`; consecutive copies joined by an
//!   edge from `4i+1` to `4(i+1) mod 4r` (the degree-2 vertices).
//! * `t_family`: base vertex v at `3v`, its gadget pair at `3v+1`, `3v+2`.
//! * `petersen`: outer cycle `0..5`, inner 5-cycle-of-step-2 on `5..10`,
//!   spokes `i -- i+5`.

use crate::graph::{Graph, GraphError, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family parameter: {0}")]
    BadParameter(String),
    #[error("cannot parse family spec `{0}`")]
    BadSpec(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(msg: impl Into<String>) -> FamilyError {
    FamilyError::BadParameter(msg.into())
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::build(n, &edges)?)
}

/// Cycles need n >= 3: C1 and C2 are not simple graphs.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::build(n, &edges)?)
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::build(n, &edges)?)
}

pub fn edgeless(n: usize) -> Result<Graph, FamilyError> {
    Ok(Graph::build(n, &[])?)
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph, FamilyError> {
    if p < 1 || q < 1 {
        return Err(bad(format!("complete bipartite needs p, q >= 1, got {p}, {q}")));
    }
    let mut edges = Vec::new();
    for u in 0..p {
        for v in p..p + q {
            edges.push((u, v));
        }
    }
    Ok(Graph::build(p + q, &edges)?)
}

/// K_{1,n-1} on n vertices.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Ok(Graph::build(n, &edges)?)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::build(10, &edges).expect("fixed construction")
}

/// r disjoint triangles.
pub fn r_k3(r: usize) -> Result<Graph, FamilyError> {
    if r < 1 {
        return Err(bad("rK3 needs r >= 1".to_string()));
    }
    let mut edges = Vec::new();
    for i in 0..r {
        let b = 3 * i;
        edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2)]);
    }
    Ok(Graph::build(3 * r, &edges)?)
}

/// Path P_k with one pendant leaf on every spine vertex (order 2k).
pub fn comb(k: usize) -> Result<Graph, FamilyError> {
    if k < 1 {
        return Err(bad("comb needs k >= 1".to_string()));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((2 * i, 2 * i + 1));
        if i + 1 < k {
            edges.push((2 * i, 2 * (i + 1)));
        }
    }
    Ok(Graph::build(2 * k, &edges)?)
}

/// Cyclic chain of r copies of K4 minus an edge, consecutive copies joined
/// through their degree-2 vertices; 3-regular on 4r vertices.
pub fn necklace(r: usize) -> Result<Graph, FamilyError> {
    if r < 2 {
        return Err(bad(format!("necklace needs r >= 2, got {r}")));
    }
    let n = 4 * r;
    let mut edges = Vec::new();
    for i in 0..r {
        let b = 4 * i;
        // K4 on b..b+4 minus the edge (b, b+1).
        edges.extend([(b, b + 2), (b, b + 3), (b + 1, b + 2), (b + 1, b + 3), (b + 2, b + 3)]);
        edges.push((b + 1, (b + 4) % n));
    }
    Ok(Graph::build(n, &edges)?)
}

/// Attach a pair of new vertices to every vertex of a connected base graph;
/// `gadget_edge[v]` decides whether v's pair is itself joined by an edge.
pub fn t_family(base: &Graph, gadget_edge: &[bool]) -> Result<Graph, FamilyError> {
    let h = base.order();
    if !base.is_connected() {
        return Err(bad("t-family base must be connected".to_string()));
    }
    if gadget_edge.len() != h {
        return Err(bad(format!(
            "t-family needs one gadget flag per base vertex: {} vs {}",
            gadget_edge.len(),
            h
        )));
    }
    let mut edges: Vec<_> = base.edges().iter().map(|&(u, v)| (3 * u, 3 * v)).collect();
    for v in 0..h {
        edges.push((3 * v, 3 * v + 1));
        edges.push((3 * v, 3 * v + 2));
        if gadget_edge[v] {
            edges.push((3 * v + 1, 3 * v + 2));
        }
    }
    Ok(Graph::build(3 * h, &edges)?)
}

/// Two pendant leaves on every vertex of the base: `t_family` with no
/// gadget edges.
pub fn two_leaves(base: &Graph) -> Result<Graph, FamilyError> {
    t_family(base, &vec![false; base.order()])
}

/// Disjoint union of a nonempty list of graphs, laid out in order.
pub fn disjoint_union_all(parts: &[Graph]) -> Result<Graph, FamilyError> {
    let (first, rest) = parts
        .split_first()
        .ok_or_else(|| bad("union needs at least one part".to_string()))?;
    let mut g = first.clone();
    for p in rest {
        g = g.disjoint_union(p)?;
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// FamilySpec
// ---------------------------------------------------------------------------

/// Parsed form of the textual family syntax used by the CLI, e.g.
/// `path:7`, `necklace:3`, `complete_bipartite:3:3`,
/// `tfamily:path:3:edges=010`, `twoleaves:cycle:4`, `union:rk3:2+path:4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Edgeless(usize),
    Petersen,
    RK3(usize),
    Comb(usize),
    Necklace(usize),
    TFamily { base: Box<FamilySpec>, gadget_edges: Vec<bool> },
    TwoLeaves { base: Box<FamilySpec> },
    DisjointUnion(Vec<FamilySpec>),
}

impl FamilySpec {
    pub fn parse(text: &str) -> Result<FamilySpec, FamilyError> {
        let err = || FamilyError::BadSpec(text.to_string());
        let int = |s: &str| s.parse::<usize>().map_err(|_| err());
        let (head, rest) = match text.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (text, None),
        };
        let one = || int(rest.ok_or_else(err)?);
        match head {
            "path" => Ok(FamilySpec::Path(one()?)),
            "cycle" => Ok(FamilySpec::Cycle(one()?)),
            "complete" => Ok(FamilySpec::Complete(one()?)),
            "star" => Ok(FamilySpec::Star(one()?)),
            "edgeless" => Ok(FamilySpec::Edgeless(one()?)),
            "rk3" => Ok(FamilySpec::RK3(one()?)),
            "comb" => Ok(FamilySpec::Comb(one()?)),
            "necklace" => Ok(FamilySpec::Necklace(one()?)),
            "petersen" => match rest {
                None => Ok(FamilySpec::Petersen),
                Some(_) => Err(err()),
            },
            "complete_bipartite" => {
                let (p, q) = rest.ok_or_else(err)?.split_once(':').ok_or_else(err)?;
                Ok(FamilySpec::CompleteBipartite(int(p)?, int(q)?))
            }
            "tfamily" => {
                let rest = rest.ok_or_else(err)?;
                let (base, flags) = match rest.rsplit_once(":edges=") {
                    Some((b, f)) => {
                        let flags = f
                            .chars()
                            .map(|c| match c {
                                '0' => Ok(false),
                                '1' => Ok(true),
                                _ => Err(err()),
                            })
                            .collect::<Result<Vec<bool>, _>>()?;
                        (b, Some(flags))
                    }
                    None => (rest, None),
                };
                let base = Box::new(FamilySpec::parse(base)?);
                let gadget_edges = match flags {
                    Some(f) => f,
                    None => vec![false; generate(&base)?.order()],
                };
                Ok(FamilySpec::TFamily { base, gadget_edges })
            }
            "twoleaves" => Ok(FamilySpec::TwoLeaves {
                base: Box::new(FamilySpec::parse(rest.ok_or_else(err)?)?),
            }),
            "union" => {
                let parts = rest
                    .ok_or_else(err)?
                    .split('+')
                    .map(FamilySpec::parse)
                    .collect::<Result<Vec<_>, _>>()?;
                if parts.is_empty() {
                    return Err(err());
                }
                Ok(FamilySpec::DisjointUnion(parts))
            }
            _ => Err(err()),
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    match spec {
        FamilySpec::Path(n) => path(*n),
        FamilySpec::Cycle(n) => cycle(*n),
        FamilySpec::Complete(n) => complete(*n),
        FamilySpec::CompleteBipartite(p, q) => complete_bipartite(*p, *q),
        FamilySpec::Star(n) => star(*n),
        FamilySpec::Edgeless(n) => edgeless(*n),
        FamilySpec::Petersen => Ok(petersen()),
        FamilySpec::RK3(r) => r_k3(*r),
        FamilySpec::Comb(k) => comb(*k),
        FamilySpec::Necklace(r) => necklace(*r),
        FamilySpec::TFamily { base, gadget_edges } => t_family(&generate(base)?, gadget_edges),
        FamilySpec::TwoLeaves { base } => two_leaves(&generate(base)?),
        FamilySpec::DisjointUnion(parts) => {
            let graphs = parts.iter().map(generate).collect::<Result<Vec<_>, _>>()?;
            disjoint_union_all(&graphs)
        }
    }
}

// ---------------------------------------------------------------------------
// T-family recognizer
// ---------------------------------------------------------------------------

/// Decompose G as a t-family graph if possible: a partition of V into
/// triples (v, a, b) where a, b are adjacent to v, see nothing outside the
/// triple, and the base vertices v induce a connected graph. Returns the
/// first decomposition in a fixed search order, as (base, gadget, gadget)
/// triples sorted by base vertex.
pub fn is_in_t_family(g: &Graph) -> Option<Vec<(usize, usize, usize)>> {
    let n = g.order();
    if n % 3 != 0 {
        return None;
    }
    let mut triples: Vec<(usize, usize, usize)> = Vec::new();
    if !decompose(g, VertexSet::EMPTY, &mut triples) {
        return None;
    }
    triples.sort_unstable();
    Some(triples)
}

/// A gadget pair (a, b) for base v must satisfy N[a] <= {v, a, b} and
/// N[b] <= {v, a, b}, with both adjacent to v.
fn valid_triple(g: &Graph, v: usize, a: usize, b: usize) -> bool {
    let triple = VertexSet::from_iter([v, a, b]);
    g.has_edge(v, a)
        && g.has_edge(v, b)
        && g.closed_neighbors(a).is_subset_of(triple)
        && g.closed_neighbors(b).is_subset_of(triple)
}

fn decompose(g: &Graph, assigned: VertexSet, triples: &mut Vec<(usize, usize, usize)>) -> bool {
    let n = g.order();
    let free = VertexSet(g.vertices().0 & !assigned.0);
    let u = match free.min() {
        None => {
            // Full partition found; the base must induce a connected graph.
            let base = VertexSet::from_iter(triples.iter().map(|t| t.0));
            return g
                .induced_subgraph(base)
                .map(|h| h.is_connected())
                .unwrap_or(false);
        }
        Some(u) => u,
    };
    // The lowest free vertex u is either the base of its triple or one of
    // the two gadgets; try every consistent triple containing it.
    for a in 0..n {
        if a == u || !free.contains(a) {
            continue;
        }
        for b in a + 1..n {
            if b == u || !free.contains(b) {
                continue;
            }
            for &(v, x, y) in &[(u, a, b), (a, u, b), (b, u, a)] {
                if valid_triple(g, v, x, y) {
                    let next = assigned.union(VertexSet::from_iter([u, a, b]));
                    triples.push((v, x.min(y), x.max(y)));
                    if decompose(g, next, triples) {
                        return true;
                    }
                    triples.pop();
                }
            }
        }
    }
    false
}
