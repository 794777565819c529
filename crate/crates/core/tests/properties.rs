mod common;

use common::oracle;
use middlemen::io::{emit_edge_list, parse_edge_list, EdgeListDocument};
use middlemen::robustness::robustness_of;
use middlemen::{
    betweenness, ij_middlemen, is_contested_by, middleman_power, middleman_set,
    minimal_contesting_set, DirectedNetwork, NodeId, RobustnessConfig,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn network(max_n: usize) -> impl Strategy<Value = DirectedNetwork> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(proptest::bool::weighted(0.35), n * n),
            )
        })
        .prop_map(|(n, bits)| {
            let arcs = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && bits[u * n + v]);
            DirectedNetwork::from_index_arcs(n, arcs).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn deletion_test_matches_path_intersection(net in network(6)) {
        let m = oracle::matrix(&net);
        for i in net.nodes() {
            for j in net.nodes().filter(|&j| j != i) {
                let got: Vec<usize> = ij_middlemen(&net, i, j).unwrap().iter().map(|v| v.0).collect();
                prop_assert_eq!(got, oracle::ij_middlemen(&m, i.0, j.0));
            }
        }
    }

    #[test]
    fn brokerage_counts_disconnected_pairs(net in network(7)) {
        let m = oracle::matrix(&net);
        let power = middleman_power(&net);
        for i in net.nodes() {
            prop_assert_eq!(power.brokerage(i), oracle::disconnected_pairs(&m, i.0) as u64);
        }
        prop_assert_eq!(power.total_potential(), oracle::potential_brokerage(&m) as u64);
        let report = middleman_set(&net);
        for i in net.nodes() {
            prop_assert_eq!(report.is_middleman(i), power.brokerage(i) > 0);
        }
    }

    #[test]
    fn betweenness_matches_geodesics(net in network(6)) {
        let m = oracle::matrix(&net);
        let bc = betweenness(&net);
        prop_assert_eq!(&bc, &oracle::betweenness(&m));
        let total = bc.iter().fold(BigRational::from_integer(BigInt::from(0)), |a, b| a + b);
        prop_assert_eq!(total, oracle::interior_slots(&m));
    }

    #[test]
    fn undirected_middlemen_are_symmetric(net in network(6)) {
        let u = net.symmetrize();
        for i in u.nodes() {
            for j in u.nodes().filter(|&j| j != i) {
                prop_assert_eq!(ij_middlemen(&u, i, j).unwrap(), ij_middlemen(&u, j, i).unwrap());
            }
        }
    }

    #[test]
    fn minimal_sets_contest_and_nothing_smaller_does(net in network(6)) {
        let m = oracle::matrix(&net);
        for i in net.nodes().filter(|&i| net.is_intermediary(i)) {
            let r = minimal_contesting_set(&net, i).unwrap();
            prop_assert_eq!(r.minimal_set.as_ref().map(Vec::len), oracle::min_contesting_size(&m, i.0));
            if let Some(set) = &r.minimal_set {
                prop_assert!(is_contested_by(&net, i, set).unwrap());
            }
        }
    }

    #[test]
    fn edge_list_round_trip(net in network(7), undirected in any::<bool>()) {
        let net = if undirected { net.symmetrize() } else { net };
        let doc = EdgeListDocument::from_network(&net);
        let text = emit_edge_list(&doc);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        let again = back.to_network().unwrap();
        prop_assert_eq!(again.labels(), net.labels());
        let arcs: Vec<(NodeId, NodeId)> = again.arcs().collect();
        prop_assert_eq!(arcs, net.arcs().collect::<Vec<_>>());
        prop_assert_eq!(emit_edge_list(&back), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn robustness_matches_exhaustive_search(net in network(5)) {
        let m = oracle::matrix(&net);
        for i in middleman_set(&net).middlemen() {
            let r = robustness_of(&net, i, &RobustnessConfig::default()).unwrap();
            let (rho, dual, psi) = r.triple();
            prop_assert_eq!(Some(rho), oracle::arc_addition(&m, i.0, rho));
            prop_assert_eq!(dual, oracle::arc_deletion(&m, i.0));
            prop_assert_eq!(psi, oracle::node_deletion(&m, i.0));
        }
    }
}
