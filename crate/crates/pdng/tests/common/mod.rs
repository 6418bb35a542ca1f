//! Shared oracles and corpora for the integration suites.
//!
//! Everything here is deliberately independent of the library's own
//! algorithms: class counting by lexicographic-minimum orbit filtering and,
//! separately, by Burnside's lemma over the full symmetric group; reference
//! solvers with no pruning, no component split, and their own forcing loop;
//! connectivity by exhaustive cut enumeration; and a second graph6 encoder
//! written straight from the format description. Agreement between these
//! and the production code is what the property and acceptance suites
//! assert.

#![allow(dead_code)] // each test target uses its own subset

use pdng::graph::{Graph, VertexSet};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------------
// Independent class counting
// ---------------------------------------------------------------------------

fn edge_index(n: usize, i: usize, j: usize) -> usize {
    // Column-major upper triangle: pairs (i, j), i < j, ordered by j then i.
    debug_assert!(i < j && j < n);
    j * (j - 1) / 2 + i
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn rec(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(k + 1, items, out);
            items.swap(k, i);
        }
    }
    rec(0, &mut items, &mut out);
    out
}

fn permute_mask(n: usize, mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    for j in 1..n {
        for i in 0..j {
            if mask >> edge_index(n, i, j) & 1 == 1 {
                let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                out |= 1 << edge_index(n, a, b);
            }
        }
    }
    out
}

/// Number of isomorphism classes of order n by brute force over all labeled
/// graphs: a labeled graph is counted iff its edge mask is the numeric
/// minimum of its orbit under all n! relabelings. Practical for n <= 6.
pub fn labeled_class_count(n: usize) -> usize {
    assert!((1..=6).contains(&n), "labeled enumeration is for n <= 6");
    let perms = permutations(n);
    let edges = n * (n - 1) / 2;
    let mut count = 0usize;
    'mask: for mask in 0u64..1 << edges {
        for perm in &perms {
            if permute_mask(n, mask, perm) < mask {
                continue 'mask;
            }
        }
        count += 1;
    }
    count
}

/// Number of isomorphism classes of order n by Burnside's lemma: the average
/// over all vertex permutations of 2^(number of edge orbits). Exact for any
/// n where iterating n! permutations is affordable (here n <= 9).
pub fn burnside_class_count(n: usize) -> u64 {
    assert!((1..=9).contains(&n), "keep the permutation count sane");
    let mut total: u64 = 0;
    let mut factorial: u64 = 1;
    for k in 2..=n as u64 {
        factorial *= k;
    }
    for perm in permutations(n) {
        let mut seen = vec![false; n * (n - 1) / 2];
        let mut orbits = 0u32;
        for j in 1..n {
            for i in 0..j {
                if seen[edge_index(n, i, j)] {
                    continue;
                }
                orbits += 1;
                let (mut a, mut b) = (i, j);
                loop {
                    seen[edge_index(n, a.min(b), a.max(b))] = true;
                    (a, b) = (perm[a], perm[b]);
                    if a.min(b) == i && a.max(b) == j {
                        break;
                    }
                }
            }
        }
        total += 1u64 << orbits;
    }
    assert_eq!(total % factorial, 0, "Burnside total must divide evenly");
    total / factorial
}

// ---------------------------------------------------------------------------
// Reference graph6 encoder
// ---------------------------------------------------------------------------

/// Second encoder, written directly from the format description: size byte
/// n + 63, then the column-major upper-triangle bits packed six per byte,
/// most significant first, zero-padded.
pub fn reference_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bits: Vec<bool> = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (k, &bit) in chunk.iter().enumerate() {
            if bit {
                value |= 1 << (5 - k);
            }
        }
        out.push((value + 63) as char);
    }
    out
}

// ---------------------------------------------------------------------------
// Reference solvers (no pruning, no component split, own forcing loop)
// ---------------------------------------------------------------------------

fn ref_force(g: &Graph, obs: &mut Vec<bool>) {
    let n = g.order();
    loop {
        let mut changed = false;
        for v in 0..n {
            if !obs[v] {
                continue;
            }
            let mut white = None;
            let mut count = 0;
            for u in 0..n {
                if g.has_edge(v, u) && !obs[u] {
                    white = Some(u);
                    count += 1;
                }
            }
            if count == 1 {
                obs[white.expect("counted one")] = true;
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

fn ref_pd_closed(g: &Graph, subset: &[usize]) -> bool {
    let n = g.order();
    let mut obs = vec![false; n];
    for &v in subset {
        obs[v] = true;
        for u in 0..n {
            if g.has_edge(v, u) {
                obs[u] = true;
            }
        }
    }
    ref_force(g, &mut obs);
    obs.iter().all(|&b| b)
}

fn ref_dominates(g: &Graph, subset: &[usize]) -> bool {
    let n = g.order();
    let mut covered = vec![false; n];
    for &v in subset {
        covered[v] = true;
        for u in 0..n {
            if g.has_edge(v, u) {
                covered[u] = true;
            }
        }
    }
    covered.iter().all(|&b| b)
}

fn ref_zero_forces(g: &Graph, subset: &[usize]) -> bool {
    let mut obs = vec![false; g.order()];
    for &v in subset {
        obs[v] = true;
    }
    ref_force(g, &mut obs);
    obs.iter().all(|&b| b)
}

/// Smallest k for which some k-subset satisfies `good`, by exhaustive
/// recursive enumeration in ascending k.
fn min_subset_size(n: usize, good: &mut dyn FnMut(&[usize]) -> bool) -> usize {
    fn rec(
        n: usize,
        start: usize,
        left: usize,
        acc: &mut Vec<usize>,
        good: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if left == 0 {
            return good(acc);
        }
        for v in start..n {
            acc.push(v);
            if rec(n, v + 1, left - 1, acc, good) {
                acc.pop();
                return true;
            }
            acc.pop();
        }
        false
    }
    for k in 0..=n {
        if rec(n, 0, k, &mut Vec::new(), good) {
            return k;
        }
    }
    unreachable!("the full vertex set always works")
}

pub fn reference_gamma_p(g: &Graph) -> usize {
    min_subset_size(g.order(), &mut |s| !s.is_empty() && ref_pd_closed(g, s))
}

pub fn reference_gamma(g: &Graph) -> usize {
    min_subset_size(g.order(), &mut |s| ref_dominates(g, s))
}

pub fn reference_zero_forcing(g: &Graph) -> usize {
    min_subset_size(g.order(), &mut |s| ref_zero_forces(g, s))
}

// ---------------------------------------------------------------------------
// Brute-force connectivity
// ---------------------------------------------------------------------------

fn connected_ignoring(g: &Graph, removed: u64) -> bool {
    let n = g.order();
    let alive: Vec<usize> = (0..n).filter(|v| removed >> v & 1 == 0).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &u in &alive {
            if !seen[u] && g.has_edge(v, u) {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

/// Vertex connectivity by exhaustive cut-set enumeration (complete graphs
/// are n - 1 by convention).
pub fn brute_vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.size() == n * (n - 1) / 2 {
        return n.saturating_sub(1);
    }
    for k in 0..n {
        for cut in 0u64..1 << n {
            if cut.count_ones() as usize != k {
                continue;
            }
            if n - k >= 2 && !connected_ignoring(g, cut) {
                return k;
            }
        }
    }
    unreachable!("a non-complete graph has a separating set")
}

/// Edge connectivity as the minimum crossing-edge count over all proper
/// bipartitions (0 when already disconnected).
pub fn brute_edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 || !g.is_connected() {
        return 0;
    }
    let mut best = usize::MAX;
    for side in 1u64..(1 << n) - 1 {
        let mut crossing = 0;
        for j in 1..n {
            for i in 0..j {
                if g.has_edge(i, j) && (side >> i & 1) != (side >> j & 1) {
                    crossing += 1;
                }
            }
        }
        best = best.min(crossing);
    }
    best
}

/// Super edge connectivity by definition: every minimum-cardinality edge
/// cut isolates one vertex. `None` for disconnected graphs.
pub fn brute_super_lambda(g: &Graph) -> Option<bool> {
    let n = g.order();
    if !g.is_connected() {
        return None;
    }
    let lambda = brute_edge_connectivity(g);
    for side in 1u64..(1 << n) - 1 {
        let mut crossing = 0;
        for j in 1..n {
            for i in 0..j {
                if g.has_edge(i, j) && (side >> i & 1) != (side >> j & 1) {
                    crossing += 1;
                }
            }
        }
        let small = (side.count_ones() as usize).min(n - side.count_ones() as usize);
        if crossing == lambda && small != 1 {
            return Some(false);
        }
    }
    Some(true)
}

// ---------------------------------------------------------------------------
// Random corpora
// ---------------------------------------------------------------------------

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, edge_prob: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.random_bool(edge_prob) {
                edges.push((i, j));
            }
        }
    }
    Graph::build(n, &edges).expect("sound parameters")
}

/// The standard 500-graph random corpus used by the closure property suite:
/// orders 1..=20, edge densities spread over (0, 1).
pub fn closure_corpus() -> Vec<Graph> {
    let mut rng = seeded_rng(0x9e3779b97f4a7c15);
    (0..500)
        .map(|i| {
            let n = 1 + (i % 20);
            let p = [0.1, 0.25, 0.5, 0.75, 0.9][i / 20 % 5];
            random_graph(&mut rng, n, p)
        })
        .collect()
}

pub fn random_subset(rng: &mut ChaCha8Rng, g: &Graph) -> VertexSet {
    let mask: u64 = rng.random();
    VertexSet(mask & g.vertices().0)
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

pub fn permute_graph(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    Graph::build(g.order(), &edges).expect("permutation preserves soundness")
}

// ---------------------------------------------------------------------------
// Property suites
//
// Shared by the property test target and the acceptance gate; each panics
// with a descriptive message on the first violation.
// ---------------------------------------------------------------------------

use pdng::graph6::{canonical_form, emit_graph6, enumerate_all, parse_graph6};
use pdng::metrics::{
    degree_stats, diameter, is_super_lambda_definitional, is_super_lambda_wang_li,
};
use pdng::solvers::{gamma_p, pd_closure, zf_closure, zf_closure_with_chooser};

/// Closure laws on the 500-graph random corpus: monotonicity and idempotence
/// of both closures, the pd = zf-after-domination identity, and (on 120 of
/// the graphs) independence of the forcing order.
pub fn suite_closure_properties() {
    let corpus = closure_corpus();
    let mut rng = seeded_rng(42);
    for g in &corpus {
        let s = random_subset(&mut rng, g);
        let t = s.union(random_subset(&mut rng, g));
        let zs = zf_closure(g, s).expect("in range");
        let zt = zf_closure(g, t).expect("in range");
        assert!(
            zs.is_subset_of(zt),
            "zf closure not monotone on {}: {s} vs {t}",
            emit_graph6(g)
        );
        let ps = pd_closure(g, s).expect("in range");
        let pt = pd_closure(g, t).expect("in range");
        assert!(
            ps.is_subset_of(pt),
            "pd closure not monotone on {}: {s} vs {t}",
            emit_graph6(g)
        );
        assert_eq!(zf_closure(g, zs).expect("in range"), zs, "zf closure not idempotent");
        assert_eq!(zf_closure(g, ps).expect("in range"), ps, "pd closure not forcing-closed");
        let dominated = g.closed_neighborhood(s).expect("in range");
        assert_eq!(
            ps,
            zf_closure(g, dominated).expect("in range"),
            "pd_closure != zf_closure of the dominated set on {}",
            emit_graph6(g)
        );
    }
    for (i, g) in corpus.iter().take(120).enumerate() {
        let b = random_subset(&mut rng, g);
        let canonical = zf_closure(g, b).expect("in range");
        let dominated = g.closed_neighborhood(b).expect("in range");
        let pd_canonical = pd_closure(g, b).expect("in range");
        for round in 0..3u64 {
            let mut order_rng = seeded_rng(0xc0ffee + 1000 * i as u64 + round);
            let mut chooser = |k: usize| order_rng.random_range(0..k);
            let shuffled = zf_closure_with_chooser(g, b, &mut chooser).expect("in range");
            assert_eq!(
                shuffled,
                canonical,
                "forcing order changed the closure on {} from {b}",
                emit_graph6(g)
            );
            let pd_shuffled =
                zf_closure_with_chooser(g, dominated, &mut chooser).expect("in range");
            assert_eq!(
                pd_shuffled,
                pd_canonical,
                "forcing order changed the pd closure on {} from {b}",
                emit_graph6(g)
            );
        }
    }
}

/// graph6 round trip on every graph of order <= 7, cross-checked against the
/// independent encoder above.
pub fn suite_graph6_round_trip() {
    for n in 1..=7 {
        for g in enumerate_all(n).expect("enumeration in range") {
            let text = emit_graph6(&g);
            assert_eq!(
                text,
                reference_graph6(&g),
                "encoders disagree on an order-{n} graph"
            );
            let back = parse_graph6(&text, true).expect("own output parses");
            assert_eq!(back, g, "round trip changed {text}");
        }
    }
}

/// Canonical forms are relabeling invariants: 1000 random (graph,
/// permutation) pairs.
pub fn suite_canonical_relabeling() {
    let mut rng = seeded_rng(7);
    for i in 0..1000 {
        let n = 1 + (i % 10);
        let g = random_graph(&mut rng, n, [0.2, 0.5, 0.8][i % 3]);
        let perm = random_permutation(&mut rng, n);
        let h = permute_graph(&g, &perm);
        assert_eq!(
            canonical_form(&g),
            canonical_form(&h),
            "relabeling changed the canonical form of {}",
            emit_graph6(&g)
        );
    }
}

/// Wang-Li agrees with the definitional computation on every graph where the
/// dispatcher uses it: connected, diameter 2, minimum degree >= 2, n <= 8.
pub fn suite_super_lambda_agreement() {
    for n in 2..=8 {
        for g in enumerate_all(n).expect("enumeration in range") {
            if !g.is_connected() || !diameter(&g).is(2) || degree_stats(&g).0 < 2 {
                continue;
            }
            let fast = is_super_lambda_wang_li(&g);
            let slow = is_super_lambda_definitional(&g).expect("connected");
            assert_eq!(fast, slow, "Wang-Li disagrees on {}", emit_graph6(&g));
        }
    }
}

/// The pruned production solver equals the unpruned whole-graph reference on
/// every graph of order <= 7.
pub fn suite_pruned_vs_unpruned_gamma_p() {
    for n in 1..=7 {
        for g in enumerate_all(n).expect("enumeration in range") {
            assert_eq!(
                gamma_p(&g).value,
                reference_gamma_p(&g),
                "pruned solver differs on {}",
                emit_graph6(&g)
            );
        }
    }
}
