use proptest::prelude::*;
use proptest::sample::subsequence;

use srg_paths::catalog::instance;
use srg_paths::claims::STS13_FIXTURES;
use srg_paths::families::{cyclic_latin, latin_square_graph, LatinSquare};
use srg_paths::formats::{parse_graph6, parse_latin, parse_sts, write_graph6, write_latin, write_sts};
use srg_paths::witness::{latin_cop5, latin_p5, p4_witness};
use srg_paths::{find_induced, is_cograph, srg_params, Error, Graph, Pattern, PatternName};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let mut edges = Vec::new();
            for v in 0..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

/// A random isotope of the cyclic square: rows, columns and symbols permuted.
fn latin_isotope() -> impl Strategy<Value = LatinSquare> {
    (5usize..=9).prop_flat_map(|m| (permutation(m), permutation(m), permutation(m))).prop_map(|(r, c, s)| {
        let l = cyclic_latin(r.len()).unwrap();
        let m = r.len();
        LatinSquare::new((0..m).map(|i| (0..m).map(|j| s[l.get(r[i], c[j])]).collect()).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in graph(20)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
    }

    #[test]
    fn layers_partition_the_vertices(g in graph(20), s in any::<prop::sample::Index>()) {
        prop_assume!(g.n() > 0);
        let source = s.index(g.n());
        let d = g.distance_layers(source).unwrap();
        let total: usize = d.sizes().iter().sum::<usize>() + d.unreachable.len();
        prop_assert_eq!(total, g.n());
        prop_assert_eq!(d.layer(0).to_vec(), vec![source]);
        for i in 1..d.layers.len() {
            for v in d.layer(i).iter() {
                // every vertex at distance i has a neighbour at distance i - 1
                prop_assert!(d.layer(i - 1).iter().any(|u| g.has_edge(u, v)));
            }
        }
        prop_assert_eq!(d.unreachable.is_empty(), g.is_connected());
    }

    #[test]
    fn full_induced_subgraph_is_identity(g in graph(20)) {
        let all: Vec<usize> = (0..g.n()).collect();
        prop_assert_eq!(g.induced_subgraph(&all).unwrap(), g);
    }

    #[test]
    fn acyclic_iff_forest(g in graph(14)) {
        let forest = g.edge_count() + g.components().len() == g.n();
        prop_assert_eq!(g.girth().is_none(), forest);
        if let Some(c) = g.shortest_cycle() {
            prop_assert_eq!(Some(c.len()), g.girth());
            for i in 0..c.len() {
                prop_assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
            }
        }
    }

    #[test]
    fn cograph_iff_no_induced_p4(g in graph(10)) {
        prop_assert_eq!(is_cograph(&g), !find_induced(&g, &Pattern::new(PatternName::P4)).found);
    }

    #[test]
    fn search_witnesses_validate(g in graph(12), i in 0usize..7) {
        let p = PatternName::ALL[i];
        let pattern = Pattern::new(p);
        let out = find_induced(&g, &pattern);
        if let Some(w) = &out.witness {
            prop_assert!(pattern.matches_in_order(&g, w));
        }
        // complementing the host swaps a pattern with its complement
        if let Some(cp) = p.complement() {
            let again = find_induced(&g.complement(), &Pattern::new(cp));
            prop_assert_eq!(again.found, out.found);
        }
    }

    #[test]
    fn graph6_round_trip(g in graph(70)) {
        let text = write_graph6(&g);
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(write_graph6(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn latin_constructions_on_isotopes(l in latin_isotope()) {
        let g = latin_square_graph(&l);
        let w = latin_p5(&l).unwrap();
        prop_assert!(Pattern::new(PatternName::P5).matches_in_order(&g, &w.vertices));
        prop_assert_eq!(latin_p5(&l).unwrap(), w);
        if l.order() >= 6 {
            let w = latin_cop5(&l).unwrap();
            prop_assert!(Pattern::new(PatternName::CoP5).matches_in_order(&g, &w.vertices));
        }
        prop_assert_eq!(parse_latin(&write_latin(&l)).unwrap(), l);
    }

    #[test]
    fn p4_witness_survives_relabelling(
        (spec, perm) in prop::sample::select(vec!["petersen", "johnson2:6", "kneser2:7", "hamming2:4", "latin:5", "sts13:1", "mols:5"])
            .prop_flat_map(|s| { let n = instance(s).unwrap().graph.n(); (Just(s), permutation(n)) })
    ) {
        let base = instance(spec).unwrap().graph;
        let g = relabel(&base, &perm);
        prop_assert_eq!(srg_params(&g), srg_params(&base));
        let w = p4_witness(&g).unwrap();
        prop_assert!(Pattern::new(PatternName::P4).matches_in_order(&g, &w.vertices));
        prop_assert_eq!(w.branch, p4_witness(&base).unwrap().branch);
        prop_assert_eq!(p4_witness(&g).unwrap(), w);
    }

    #[test]
    fn mutated_sts_fixture_is_rejected(
        which in 0usize..2,
        block in 0usize..26,
        slot in 0usize..3,
        point in 1usize..=13,
    ) {
        let s = parse_sts(STS13_FIXTURES[which]).unwrap();
        prop_assert_eq!(parse_sts(&write_sts(&s)).unwrap(), s.clone());
        let mut blocks: Vec<[usize; 3]> = s.blocks().to_vec();
        prop_assume!(!blocks[block].contains(&point));
        blocks[block][slot] = point;
        let mut text = String::from("13\n");
        for b in &blocks {
            text += &format!("{} {} {}\n", b[0], b[1], b[2]);
        }
        prop_assert!(matches!(parse_sts(&text), Err(Error::NotSts(_))));
    }

    #[test]
    fn dropping_blocks_is_rejected(which in 0usize..2, keep in subsequence((0..26).collect::<Vec<_>>(), 0..26)) {
        let s = parse_sts(STS13_FIXTURES[which]).unwrap();
        let mut text = String::from("13\n");
        for &i in &keep {
            let b = s.blocks()[i];
            text += &format!("{} {} {}\n", b[0], b[1], b[2]);
        }
        prop_assert!(parse_sts(&text).is_err());
    }
}
