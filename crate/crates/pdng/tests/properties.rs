//! Property suites: the library's algorithms against independent oracles,
//! algebraic laws of the closures, and structural invariants, over both the
//! complete small-order catalogs and seeded random corpora.

mod common;

use common::*;
use pdng::families;
use pdng::graph::{Graph, VertexSet};
use pdng::graph6::{canonical_form, emit_graph6, enumerate_all, parse_graph6};
use pdng::metrics::{
    degree_stats, diameter, edge_connectivity, is_planar, is_super_lambda, structure_report,
    vertex_connectivity, Diameter,
};
use pdng::solvers::{gamma, gamma_p, is_power_dominating, zero_forcing, zf_closure};
use proptest::prelude::*;

#[test]
fn closure_laws_hold_on_the_random_corpus() {
    suite_closure_properties();
}

#[test]
fn graph6_round_trips_every_small_graph() {
    suite_graph6_round_trip();
}

#[test]
fn canonical_form_is_a_relabeling_invariant() {
    suite_canonical_relabeling();
}

#[test]
fn wang_li_matches_definitional_super_lambda() {
    suite_super_lambda_agreement();
}

#[test]
fn pruned_gamma_p_matches_the_unpruned_reference() {
    suite_pruned_vs_unpruned_gamma_p();
}

#[test]
fn gamma_and_zero_forcing_match_the_unpruned_reference() {
    for n in 1..=7 {
        for g in enumerate_all(n).expect("in range") {
            let text = emit_graph6(&g);
            assert_eq!(gamma(&g).value, reference_gamma(&g), "gamma differs on {text}");
            assert_eq!(
                zero_forcing(&g).value,
                reference_zero_forcing(&g),
                "zero forcing differs on {text}"
            );
        }
    }
}

#[test]
fn connectivity_matches_exhaustive_cut_search() {
    for n in 1..=7 {
        for g in enumerate_all(n).expect("in range") {
            let text = emit_graph6(&g);
            assert_eq!(
                vertex_connectivity(&g),
                brute_vertex_connectivity(&g),
                "kappa differs on {text}"
            );
            assert_eq!(
                edge_connectivity(&g),
                brute_edge_connectivity(&g),
                "lambda differs on {text}"
            );
            assert_eq!(
                is_super_lambda(&g).ok(),
                brute_super_lambda(&g),
                "super-lambda differs on {text}"
            );
        }
    }
}

#[test]
fn solver_witnesses_are_valid_and_sized_to_the_value() {
    let mut corpus = closure_corpus();
    for n in 1..=6 {
        corpus.extend(enumerate_all(n).expect("in range"));
    }
    for g in &corpus {
        let text = emit_graph6(g);
        let pd = gamma_p(g);
        assert_eq!(pd.witness.len(), pd.value, "pd witness size on {text}");
        assert!(
            is_power_dominating(g, pd.witness).expect("in range"),
            "pd witness invalid on {text}"
        );
        let dom = gamma(g);
        assert_eq!(dom.witness.len(), dom.value, "gamma witness size on {text}");
        assert_eq!(
            g.closed_neighborhood(dom.witness).expect("in range"),
            g.vertices(),
            "gamma witness invalid on {text}"
        );
        let zf = zero_forcing(g);
        assert_eq!(zf.witness.len(), zf.value, "zf witness size on {text}");
        assert_eq!(
            zf_closure(g, zf.witness).expect("in range"),
            g.vertices(),
            "zf witness invalid on {text}"
        );
    }
}

#[test]
fn graph_core_invariants_hold_on_every_small_graph() {
    for n in 1..=7 {
        for g in enumerate_all(n).expect("in range") {
            let text = emit_graph6(&g);
            let gc = g.complement();
            assert_eq!(gc.complement(), g, "complement not an involution on {text}");
            assert_eq!(g.size() + gc.size(), n * (n - 1) / 2, "edge counts on {text}");
            let comps = g.components();
            let mut union = VertexSet::EMPTY;
            for c in &comps {
                assert!(union.intersection(*c).is_empty(), "components overlap on {text}");
                union = union.union(*c);
            }
            assert_eq!(union, g.vertices(), "components miss vertices on {text}");
            if comps.len() >= 2 {
                assert!(gc.is_connected(), "complement of disconnected {text} disconnected");
            }
            let complete = g.size() == n * (n - 1) / 2;
            assert_eq!(
                diameter(&g) == Diameter::Finite(1),
                complete && n >= 2,
                "diameter-1 test on {text}"
            );
            if n >= 3 && g.size() > 3 * n - 6 {
                assert!(!is_planar(&g), "Euler bound missed on {text}");
            }
            if g.is_connected() {
                let report = structure_report(&g);
                assert!(
                    report.kappa <= report.lambda && report.lambda <= report.min_degree,
                    "kappa <= lambda <= delta broken on {text}"
                );
            }
        }
    }
}

#[test]
fn solvers_are_additive_over_disjoint_unions() {
    let mut rng = seeded_rng(99);
    let pool: Vec<Graph> = (3..=5)
        .flat_map(|n| enumerate_all(n).expect("in range"))
        .collect();
    for _ in 0..200 {
        let a = &pool[rng.random_range(0..pool.len())];
        let b = &pool[rng.random_range(0..pool.len())];
        let u = a.disjoint_union(b).expect("fits");
        assert_eq!(gamma_p(&u).value, gamma_p(a).value + gamma_p(b).value);
        assert_eq!(gamma(&u).value, gamma(a).value + gamma(b).value);
        assert_eq!(zero_forcing(&u).value, zero_forcing(a).value + zero_forcing(b).value);
    }
}

#[test]
fn enumeration_counts_match_two_independent_oracles() {
    let expected: [u64; 8] = [1, 2, 4, 11, 34, 156, 1044, 12346];
    for n in 1..=8usize {
        let burnside = burnside_class_count(n);
        assert_eq!(burnside, expected[n - 1], "Burnside count at n={n}");
        if n <= 6 {
            assert_eq!(
                labeled_class_count(n) as u64,
                burnside,
                "labeled brute-force count at n={n}"
            );
        }
        assert_eq!(
            enumerate_all(n).expect("in range").len() as u64,
            burnside,
            "enumeration count at n={n}"
        );
    }
}

#[test]
fn out_of_range_sets_are_rejected() {
    let g = families::path(4).expect("valid");
    assert!(zf_closure(&g, VertexSet::full(5)).is_err());
    assert!(is_power_dominating(&g, VertexSet::singleton(4)).is_err());
    assert!(g.closed_neighborhood(VertexSet::full(5)).is_err());
}

proptest! {
    #[test]
    fn graph6_round_trips_random_graphs(seed in any::<u64>(), n in 1usize..=40, p in 0.05f64..0.95) {
        let mut rng = seeded_rng(seed);
        let g = random_graph(&mut rng, n, p);
        let text = emit_graph6(&g);
        prop_assert_eq!(text.clone(), reference_graph6(&g));
        prop_assert_eq!(parse_graph6(&text, true).expect("own output parses"), g);
    }

    #[test]
    fn complement_involution_on_random_graphs(seed in any::<u64>(), n in 1usize..=40, p in 0.05f64..0.95) {
        let mut rng = seeded_rng(seed);
        let g = random_graph(&mut rng, n, p);
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn zf_closure_is_monotone_on_random_graphs(seed in any::<u64>(), n in 1usize..=20, extra in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let g = random_graph(&mut rng, n, 0.4);
        let s = random_subset(&mut rng, &g);
        let t = s.union(VertexSet(extra & g.vertices().0));
        let zs = zf_closure(&g, s).expect("in range");
        let zt = zf_closure(&g, t).expect("in range");
        prop_assert!(zs.is_subset_of(zt));
    }

    #[test]
    fn canonical_form_invariance_on_random_relabelings(seed in any::<u64>(), n in 1usize..=9) {
        let mut rng = seeded_rng(seed);
        let g = random_graph(&mut rng, n, 0.5);
        let perm = random_permutation(&mut rng, n);
        prop_assert_eq!(canonical_form(&g), canonical_form(&permute_graph(&g, &perm)));
    }

    #[test]
    fn gamma_p_is_below_gamma_and_zero_forcing(seed in any::<u64>(), n in 1usize..=9, p in 0.1f64..0.9) {
        // gamma and Z are incomparable (P4 has gamma 2 and Z 1); only
        // gamma_p sits below both.
        let mut rng = seeded_rng(seed);
        let g = random_graph(&mut rng, n, p);
        let pd = gamma_p(&g).value;
        let dom = gamma(&g).value;
        let zf = zero_forcing(&g).value;
        prop_assert!(pd <= dom, "gamma_p {} > gamma {}", pd, dom);
        prop_assert!(pd <= zf, "gamma_p {} > Z {}", pd, zf);
    }

    #[test]
    fn kappa_le_lambda_le_delta_on_random_graphs(seed in any::<u64>(), n in 2usize..=10, p in 0.2f64..0.9) {
        let mut rng = seeded_rng(seed);
        let g = random_graph(&mut rng, n, p);
        let kappa = vertex_connectivity(&g);
        let lambda = edge_connectivity(&g);
        let (delta, _) = degree_stats(&g);
        prop_assert!(kappa <= lambda && lambda <= delta);
    }
}
