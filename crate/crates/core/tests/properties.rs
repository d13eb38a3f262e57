use std::collections::BTreeSet;

use chromabij::chromatic::{chi_poly_nbc_with_stats, poly_from_nbc_coefficients};
use chromabij::{
    acyclic_orientation_count, broken_circuits, chi_poly, is_forest, is_nbc, named_graph,
    nbc_coefficients, nbc_subsets, omega, phi, psi, specialize, x_all_subgraphs, x_nbc, Budget,
    ChiMethod, EdgeSubset, Graph, NamedGraph, Orientation,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn budget() -> Budget {
    Budget::default()
}

/// A graph on up to `max_n` vertices with its edges in a random order.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            (Just(n), subsequence(pairs, 0..=len))
        })
        .prop_flat_map(|(n, edges)| (Just(n), Just(edges).prop_shuffle()))
        .prop_map(|(n, edges)| Graph::new(n, edges).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chi_routes_agree(g in arb_graph(6)) {
        let nbc = chi_poly(&g, ChiMethod::Nbc, &budget()).unwrap();
        for m in ChiMethod::ALL {
            prop_assert_eq!(&chi_poly(&g, m, &budget()).unwrap(), &nbc);
        }
        prop_assert_eq!(nbc.degree(), Some(g.vertex_count()));
    }

    #[test]
    fn csf_does_not_depend_on_edge_order(g in arb_graph(6)) {
        let sorted = Graph::from_edge_set(g.vertex_count(), g.edges().iter().copied()).unwrap();
        let x = x_nbc(&g, &budget()).unwrap();
        prop_assert_eq!(&x, &x_nbc(&sorted, &budget()).unwrap());
        prop_assert_eq!(&x, &x_all_subgraphs(&g, &budget()).unwrap());
        prop_assert_eq!(omega(&omega(&x)), x.clone());
        prop_assert_eq!(specialize(&x), chi_poly(&g, ChiMethod::Subgraphs, &budget()).unwrap());
        prop_assert_eq!(
            nbc_coefficients(&g, &budget()).unwrap(),
            nbc_coefficients(&sorted, &budget()).unwrap()
        );
    }

    #[test]
    fn nbc_sets_are_forests_avoiding_broken_circuits(g in arb_graph(6)) {
        let bcs = broken_circuits(&g);
        let nbc = nbc_subsets(&g, &budget()).unwrap();
        for s in &nbc {
            prop_assert!(is_forest(&g, s).unwrap());
            prop_assert!(bcs.iter().all(|b| !b.is_subset(s)));
        }
        let a = nbc_coefficients(&g, &budget()).unwrap();
        prop_assert_eq!(a.iter().sum::<u64>(), nbc.len() as u64);
        prop_assert_eq!(
            poly_from_nbc_coefficients(g.vertex_count(), &a),
            chi_poly(&g, ChiMethod::Nbc, &budget()).unwrap()
        );
        let (_, stats) = chi_poly_nbc_with_stats(&g, &budget()).unwrap();
        prop_assert_eq!(stats.subsets, nbc.len() as u64);
        prop_assert!(stats.subsets <= 1 << g.edge_count());
    }

    #[test]
    fn phi_psi_round_trip(g in arb_graph(6), mask in any::<u64>()) {
        let m = g.edge_count();
        let o = Orientation::from_mask(m, mask & ((1u64 << m) - 1));
        if o.is_acyclic(&g).unwrap() {
            let s = phi(&g, &o).unwrap();
            prop_assert!(is_nbc(&g, &s).unwrap());
            prop_assert_eq!(psi(&g, &s).unwrap(), o);
        } else {
            prop_assert!(phi(&g, &o).is_err());
        }
    }
}

#[test]
fn acyclic_orientations_match_nbc_sets_on_fixtures() {
    for name in NamedGraph::ALL {
        let g = named_graph(name);
        let count = acyclic_orientation_count(&g, &budget()).unwrap();
        let nbc: BTreeSet<EdgeSubset> = nbc_subsets(&g, &budget()).unwrap().into_iter().collect();
        assert_eq!(count, nbc.len().into(), "{name}");
    }
}

#[test]
fn budget_errors_are_reported() {
    let tight = Budget { colorings: 100, subsets: 100 };
    let k5 = Graph::complete(5);
    assert!(matches!(
        chi_poly(&k5, ChiMethod::Subgraphs, &tight),
        Err(chromabij::Error::BudgetExceeded { .. })
    ));
    assert!(matches!(
        chi_poly(&k5, ChiMethod::Count, &tight),
        Err(chromabij::Error::BudgetExceeded { .. })
    ));
    assert!(chi_poly(&Graph::path(5), ChiMethod::Nbc, &tight).is_ok());
}
