use aalpha_core::bounds::{bound_mean_lower, bound_p210, BoundId};
use aalpha_core::generators::mask_pairs;
use aalpha_core::graph6::{parse_graph6, write_graph6};
use aalpha_core::spectra::{build_a_alpha, rayleigh_quotient, sym_eigensystem, sym_eigenvalues};
use aalpha_core::{evaluate_all, Graph, InvariantSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges: Vec<_> = mask_pairs(n)
                .into_iter()
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", Graph::is_connected)
}

fn alpha() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), Just(1.0), 0.0..=1.0]
}

proptest! {
    #[test]
    fn handshake(g in graph(16)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
        prop_assert_eq!(g.edges().count(), g.m());
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let s = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn eigen_reconstruction(g in graph(12), a in alpha()) {
        let m = build_a_alpha(&g, a).unwrap();
        let s = sym_eigensystem(&m).unwrap();
        let vectors = s.eigenvectors.as_ref().unwrap();
        let n = g.n();
        let scale = m.matrix().frobenius_norm().max(1.0);
        for (lambda, v) in s.eigenvalues.iter().zip(vectors) {
            let mv = m.matrix().mul_vec(v);
            let err = mv.iter().zip(v).map(|(x, y)| (x - lambda * y).abs()).fold(0.0, f64::max);
            prop_assert!(err <= 1e-10 * scale, "residual {err}");
            let top = v.iter().copied().fold(0.0f64, |acc, x| if x.abs() > acc.abs() { x } else { acc });
            prop_assert!(top > 0.0);
        }
        for i in 0..n {
            for j in 0..n {
                let dot: f64 = vectors[i].iter().zip(&vectors[j]).map(|(x, y)| x * y).sum();
                let expected = if i == j { 1.0 } else { 0.0 };
                prop_assert!((dot - expected).abs() < 1e-10);
            }
        }
        prop_assert!(s.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn rayleigh_quotient_between_extremes(
        g in graph(10),
        a in alpha(),
        raw in prop::collection::vec(-1.0f64..1.0, 10),
    ) {
        let x = &raw[..g.n()];
        prop_assume!(x.iter().any(|v| v.abs() > 1e-3));
        let m = build_a_alpha(&g, a).unwrap();
        let s = sym_eigenvalues(&m).unwrap();
        let r = rayleigh_quotient(&m, x).unwrap();
        prop_assert!(r <= s.largest() + 1e-9 && r >= s.smallest() - 1e-9);
    }

    #[test]
    fn per_index_degree_bound(g in graph(12), a in alpha()) {
        let s = sym_eigenvalues(&build_a_alpha(&g, a).unwrap()).unwrap();
        let r = bound_p210(&g.degree_sequence(), &s);
        prop_assert!(!r.is_violation(1e-9), "{:?}", r);
        for (lambda, d) in s.eigenvalues.iter().zip(g.degree_sequence()) {
            prop_assert!(*lambda <= d as f64 + 1e-9);
        }
    }

    #[test]
    fn mean_degree_lower_bound(g in graph(12), a in alpha()) {
        let inv = InvariantSet::compute(&g);
        let s = sym_eigenvalues(&build_a_alpha(&g, a).unwrap()).unwrap();
        prop_assert!(s.largest() >= inv.mean_degree - 1e-9);
        prop_assert!(!bound_mean_lower(&inv, &s).is_violation(1e-9));
    }

    #[test]
    fn reports_never_fail_on_connected_graphs(g in connected_graph(11), a in alpha()) {
        let e = evaluate_all(&g, a).unwrap();
        for r in &e.reports {
            prop_assert!(!r.is_violation(1e-9), "{:?}", r);
        }
        let gap = |id| e.reports.iter().find(|r| r.id == id).and_then(|r| r.bound_value());
        if let (Some(t34), Some(c35)) = (gap(BoundId::T34), gap(BoundId::C35)) {
            prop_assert!(c35 >= t34 - 1e-9);
        }
    }

    #[test]
    fn t31_t32_strict_on_irregular_graphs(g in connected_graph(10), a in 0.0f64..=0.9) {
        prop_assume!(g.structure_profile().is_irregular());
        let e = evaluate_all(&g, a).unwrap();
        for id in [BoundId::T31, BoundId::T32] {
            let r = e.reports.iter().find(|r| r.id == id).unwrap();
            prop_assert!(r.gap().unwrap() > 1e-12, "{:?}", r);
        }
    }

    #[test]
    fn invariant_ordering(g in graph(14)) {
        let inv = InvariantSet::compute(&g);
        prop_assert!(inv.min_degree <= inv.second_max_degree);
        prop_assert!(inv.second_max_degree <= inv.max_degree);
        prop_assert!(inv.min_degree as f64 <= inv.mean_degree + 1e-12);
        prop_assert!(inv.mean_degree <= inv.max_degree as f64 + 1e-12);
        prop_assert_eq!(inv.clique_number == g.n(), g.m() == g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(inv.clique_number >= 2, g.m() >= 1);
        let z1: u64 = g.degrees().iter().map(|&d| (d * d) as u64).sum();
        prop_assert_eq!(inv.zagreb1, z1);
    }
}
