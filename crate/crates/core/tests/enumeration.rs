use aalpha_core::bounds::{BoundId, GraphAnalysis};
use aalpha_core::generators::{
    connected_masks, enumerate_connected, generate_h, graph_from_mask, h_feasible, mask_pairs,
};
use aalpha_core::graph6::{parse_graph6, write_graph6};
use aalpha_core::invariants::{clique_number, das_z1_upper_slack_exact};
use aalpha_core::{Graph, InvariantSet};

fn brute_force_connected_count(n: usize) -> usize {
    let pairs = mask_pairs(n);
    (0..1u64 << pairs.len())
        .filter(|&mask| graph_from_mask(n, mask).is_connected())
        .count()
}

#[test]
fn labeled_connected_counts() {
    // OEIS A001187.
    let expected = [1, 1, 4, 38, 728, 26704];
    for (n, &count) in (1..=6).zip(&expected) {
        assert_eq!(connected_masks(n).unwrap().len(), count);
        assert_eq!(brute_force_connected_count(n), count);
    }
    assert_eq!(connected_masks(7).unwrap().len(), 1_866_256);
    assert!(connected_masks(8).is_err());
}

#[test]
fn t33_equality_exactly_on_regular_or_h_family() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let analysis = GraphAnalysis::new(g);
            let expected = analysis.invariants.is_regular() || analysis.invariants.is_h_family();
            for alpha in [0.0, 0.3, 0.7] {
                let (_, reports) = analysis.evaluate(alpha).unwrap();
                let t33 = reports.iter().find(|r| r.id == BoundId::T33).unwrap();
                assert_eq!(
                    t33.equality(),
                    expected,
                    "{} at alpha = {alpha}",
                    write_graph6(&analysis.graph).unwrap()
                );
            }
        }
    }
}

#[test]
fn das_upper_equality_iff_degrees_in_two_values() {
    for n in 2..=6 {
        for g in enumerate_connected(n).unwrap() {
            let inv = InvariantSet::compute(&g);
            let slack = das_z1_upper_slack_exact(n, inv.m, inv.min_degree, inv.zagreb1);
            let extremal = inv
                .degree_sequence
                .iter()
                .all(|&d| d == inv.min_degree || d == n - 1);
            assert!(slack >= 0);
            assert_eq!(slack == 0, extremal, "{:?}", inv.degree_sequence);
        }
    }
}

#[test]
fn second_max_equals_max_iff_regular() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let inv = InvariantSet::compute(&g);
            let profile = g.structure_profile();
            assert_eq!(
                inv.second_max_degree == inv.max_degree,
                profile.distinct_degree_count == 1
            );
        }
    }
}

#[test]
fn h_family_generator() {
    for n in 3..=12 {
        for d2 in 1..n - 1 {
            if !h_feasible(n, d2) {
                assert!(generate_h(n, d2).is_err());
                continue;
            }
            let g = generate_h(n, d2).unwrap();
            let inv = InvariantSet::compute(&g);
            assert!(g.is_connected());
            assert!(inv.is_h_family());
            assert_eq!(inv.second_max_degree, d2);
            assert_eq!(inv.min_degree, d2);
            assert_eq!(g.degrees()[0], n - 1);
        }
    }
    assert!(!h_feasible(6, 2));
    assert!(generate_h(5, 4).is_err());
}

#[test]
fn clique_number_on_petersen_and_c5() {
    let petersen = parse_graph6("IheA@GUAo").unwrap();
    assert_eq!(petersen.n(), 10);
    assert_eq!(petersen.m(), 15);
    assert!(petersen.degrees().iter().all(|&d| d == 3));
    assert_eq!(clique_number(&petersen), 2);
    assert_eq!(petersen.diameter(), Some(2));

    let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
    let inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)];
    let edges: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
    assert_eq!(
        write_graph6(&Graph::from_edges(10, &edges).unwrap()).unwrap(),
        "IheA@GUAo"
    );

    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
    assert_eq!(write_graph6(&c5).unwrap(), "Dhc");
    assert_eq!(clique_number(&c5), 2);
}
