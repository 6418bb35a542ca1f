//! graph6 encoding, canonical forms, and isomorph-free enumeration.
//!
//! The graph6 dialect here is the single-byte-size one: `n + 63` in the first
//! byte (so n <= 62), followed by ceil(n(n-1)/2 / 6) bytes each carrying six
//! bits of the upper triangle of the adjacency matrix in column order
//! x01, x02, x12, x03, x13, x23, ..., most significant bit first, zero padded.
//!
//! Canonical forms are computed by a backtracking search for the
//! lexicographically smallest column-order adjacency bit string over all
//! permutations that respect iterated degree refinement, which is a complete
//! isomorphism invariant. Enumeration extends each representative of order
//! k by one vertex in all 2^k ways and keeps one representative per canonical
//! form; every order-(k+1) graph contains an order-k induced subgraph, so the
//! extension step is exhaustive.

use std::collections::HashSet;
use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

/// Hard cap for built-in exhaustive enumeration; beyond this the
/// isomorphism-class counts explode and catalogs are consumed from files.
pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} outside graph6 range 63..=126")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("multi-byte size prefix: orders above 62 are not supported")]
    OrderTooLarge,
    #[error("the order-zero graph is not supported")]
    OrderZero,
    #[error("built-in enumeration supports orders 1..={MAX_ENUMERATION_ORDER}, not {0}; larger catalogs are read from files")]
    EnumerationOrderUnsupported(usize),
    #[error("payload has {got} bytes, expected {want} for order {n}")]
    PayloadLength { n: usize, want: usize, got: usize },
    #[error("nonzero padding bits in final payload byte")]
    NonzeroPadding,
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Graph6Error>,
    },
    #[error("line {line}: i/o error: {msg}")]
    Io { line: usize, msg: String },
}

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2 + 5) / 6
}

/// Parse a single graph6 line.
///
/// `strict` additionally rejects nonzero padding bits in the final payload
/// byte; both modes reject out-of-range bytes, bad lengths, and the
/// multi-byte size prefix (`~`, i.e. orders above 62).
pub fn parse_graph6(s: &str, strict: bool) -> Result<Graph, Graph6Error> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange { byte: b, offset });
        }
    }
    if bytes[0] == 126 {
        return Err(Graph6Error::OrderTooLarge);
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::OrderZero);
    }
    debug_assert!(n <= MAX_VERTICES, "single-byte sizes stop at 62");
    let want = payload_len(n);
    let got = bytes.len() - 1;
    if got != want {
        return Err(Graph6Error::PayloadLength { n, want, got });
    }
    let mut adj = vec![0u64; n];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    if strict && bit % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        let used = bit % 6;
        if last & ((1 << (6 - used)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_adj(adj))
}

/// Encode a graph as a canonical (zero-padded) graph6 line.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = vec![63 + n as u8];
    out.resize(1 + payload_len(n), 63);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                out[1 + bit / 6] += 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Line-oriented reader for graph6 streams.
///
/// Yields `(line_number, graph)` pairs; blank lines are skipped and an
/// optional `>>graph6<<` header prefix is stripped. Errors carry the line
/// number so tolerant callers can log and continue.
pub struct Graph6Reader<R> {
    reader: R,
    strict: bool,
    line: usize,
    buf: String,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R, strict: bool) -> Self {
        Graph6Reader {
            reader,
            strict,
            line: 0,
            buf: String::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<(usize, Graph), Graph6Error>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            self.line += 1;
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => {
                    return Some(Err(Graph6Error::Io {
                        line: self.line,
                        msg: e.to_string(),
                    }))
                }
            }
            let mut s = self.buf.trim();
            if let Some(rest) = s.strip_prefix(">>graph6<<") {
                s = rest.trim();
            }
            if s.is_empty() {
                continue;
            }
            let line = self.line;
            return Some(
                parse_graph6(s, self.strict)
                    .map(|g| (line, g))
                    .map_err(|e| Graph6Error::AtLine {
                        line,
                        source: Box::new(e),
                    }),
            );
        }
    }
}

/// A complete isomorphism invariant: two graphs have equal canonical forms
/// iff they are isomorphic. The bytes are the graph6 encoding of the
/// canonically relabeled graph, so `as_graph6()` doubles as a canonical
/// graph6 emitter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.0).expect("canonical form is ASCII")
    }

    pub fn into_graph(&self) -> Graph {
        parse_graph6(self.as_graph6(), true).expect("canonical form round-trips")
    }
}

/// Iterated degree refinement (1-dimensional Weisfeiler-Leman).
///
/// Returns a color per vertex, as dense ranks of isomorphism-invariant
/// signatures, stable under further refinement. Restricting the canonical
/// permutation search to color-preserving permutations is sound because the
/// color of a vertex is determined by graph structure alone.
fn wl_colors(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut colors: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    loop {
        // Signature: own color plus sorted neighbor colors.
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut new_colors = vec![0u32; n];
        let mut next = 0u32;
        for w in 0..n {
            if w > 0 && sigs[order[w]] != sigs[order[w - 1]] {
                next += 1;
            }
            new_colors[order[w]] = next;
        }
        if new_colors == colors {
            return colors;
        }
        colors = new_colors;
    }
}

/// State for the lexicographic-minimum relabeling search.
struct CanonSearch<'g> {
    g: &'g Graph,
    n: usize,
    /// Color required at each position (positions sorted by color).
    pos_color: Vec<u32>,
    colors: Vec<u32>,
    assigned: Vec<usize>,
    used: u64,
    /// Best (smallest) column value found per position; u64::MAX = unset.
    best: Vec<u64>,
    found: bool,
}

impl<'g> CanonSearch<'g> {
    fn run(g: &'g Graph) -> Vec<u64> {
        let n = g.order();
        let colors = wl_colors(g);
        let mut pos_color: Vec<u32> = colors.clone();
        pos_color.sort_unstable();
        let mut s = CanonSearch {
            g,
            n,
            pos_color,
            colors,
            assigned: Vec::with_capacity(n),
            used: 0,
            best: vec![u64::MAX; n],
            found: false,
        };
        s.dfs(0);
        debug_assert!(s.found);
        s.best
    }

    fn dfs(&mut self, j: usize) {
        if j == self.n {
            self.found = true;
            return;
        }
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.colors[v] != self.pos_color[j] {
                continue;
            }
            // Column j of the permuted adjacency matrix: bit (j-1-i) holds
            // edge(assigned[i], v), so integer order equals string order.
            let mut col = 0u64;
            for (i, &u) in self.assigned.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    col |= 1 << (j - 1 - i);
                }
            }
            if col > self.best[j] {
                continue;
            }
            if col < self.best[j] {
                self.best[j] = col;
                for slot in &mut self.best[j + 1..] {
                    *slot = u64::MAX;
                }
                self.found = false;
            }
            self.assigned.push(v);
            self.used |= 1 << v;
            self.dfs(j + 1);
            self.assigned.pop();
            self.used &= !(1 << v);
        }
    }
}

/// Canonical form of a graph (complete isomorphism invariant).
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let cols = CanonSearch::run(g);
    let n = g.order();
    let mut adj = vec![0u64; n];
    for (j, col) in cols.iter().enumerate().take(n).skip(1) {
        for i in 0..j {
            if col >> (j - 1 - i) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    let canon = Graph::from_adj(adj);
    CanonicalForm(emit_graph6(&canon).into_bytes())
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

/// All graphs of order `k+1` obtainable by adding one vertex to `parent`,
/// one per canonical form, appended to `out` as (form, graph) pairs.
fn extend_one_vertex(parent: &Graph, seen: &mut HashSet<CanonicalForm>, out: &mut Vec<Graph>) {
    let k = parent.order();
    for nb in 0u64..1 << k {
        let mut adj: Vec<u64> = (0..k)
            .map(|v| parent.neighbors(v).0 | ((nb >> v & 1) << k))
            .collect();
        adj.push(nb);
        let child = Graph::from_adj(adj);
        let form = canonical_form(&child);
        if seen.insert(form.clone()) {
            out.push(form.into_graph());
        }
    }
}

/// Exhaustive isomorph-free enumeration of all graphs of order `n <= 8`,
/// exactly one representative per isomorphism class, in ascending canonical
/// graph6 order. Larger orders must come from external catalogs.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>, Graph6Error> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Graph6Error::EnumerationOrderUnsupported(n));
    }
    let mut level = vec![Graph::build(1, &[]).expect("K1")];
    for _ in 1..n {
        level = extend_level(&level);
    }
    Ok(level)
}

/// One extension sweep: all representatives of order k+1 from those of
/// order k, deduplicated by canonical form, sorted by canonical graph6.
pub(crate) fn extend_level(level: &[Graph]) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut next = Vec::new();
    for parent in level {
        extend_one_vertex(parent, &mut seen, &mut next);
    }
    next.sort_by_key(|g| emit_graph6(g));
    next
}
