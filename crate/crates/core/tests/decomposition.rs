mod common;

use std::collections::BTreeSet;

use allpath::{decompose, delete_vertices, is_two_connected, neighbors_into, Graph, VertexSet};
use common::{articulation_bf, components_uf, connected_graph, graph_and_set, reference_blocks};
use proptest::prelude::*;

fn blocks_of(g: &Graph) -> BTreeSet<VertexSet> {
    decompose(g)
        .blocks()
        .map(|b| b.iter().copied().collect())
        .collect()
}

proptest! {
    #[test]
    fn adjacency_is_symmetric_and_counts_edges(g in connected_graph(12)) {
        let degree_sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.m());
        for u in 0..g.n() {
            prop_assert!(g.neighbors(u).windows(2).all(|w| w[0] < w[1]));
            for &v in g.neighbors(u) {
                prop_assert!(g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn deletion_partitions_the_rest((g, s) in graph_and_set(9)) {
        let parts = delete_vertices(&g, &s);
        let expected: Vec<VertexSet> = components_uf(&g, &s).into_iter().collect();
        let mut sorted = parts.clone();
        sorted.sort();
        prop_assert_eq!(&sorted, &expected);
        let union: VertexSet = parts.iter().flat_map(|p| p.iter()).collect();
        let total: usize = parts.iter().map(VertexSet::len).sum();
        prop_assert_eq!(total, union.len());
        prop_assert_eq!(union, VertexSet::full(g.n()).difference(&s));
    }

    #[test]
    fn empty_deletion_is_connected(g in connected_graph(12)) {
        prop_assert_eq!(delete_vertices(&g, &VertexSet::new()), vec![VertexSet::full(g.n())]);
    }

    #[test]
    fn neighbors_into_stays_inside_y((g, x) in graph_and_set(9), ybits in any::<u64>()) {
        let y = VertexSet::from_bits(ybits, g.n());
        let nb = neighbors_into(&g, &x, &y);
        prop_assert!(nb.is_subset(&y));
        for v in y.iter() {
            let adjacent = g.neighbors(v).iter().any(|&u| x.contains(u));
            prop_assert_eq!(nb.contains(v), adjacent);
        }
    }

    #[test]
    fn cut_vertices_match_brute_force(g in connected_graph(10)) {
        let t = decompose(&g);
        let cuts: VertexSet = t.cut_vertices().iter().copied().collect();
        prop_assert_eq!(cuts, articulation_bf(&g));
    }

    #[test]
    fn blocks_match_reference(g in connected_graph(9)) {
        prop_assert_eq!(blocks_of(&g), reference_blocks(&g));
    }

    #[test]
    fn block_cut_tree_is_a_tree(g in connected_graph(12)) {
        let t = decompose(&g);
        // Every edge in exactly one block.
        for (u, v) in g.edges() {
            let holders = t.blocks().filter(|b| b.contains(&u) && b.contains(&v)).count();
            prop_assert_eq!(holders, 1);
        }
        // Blocks overlap in at most one vertex, always a cut vertex.
        for a in 0..t.block_count() {
            for b in a + 1..t.block_count() {
                let shared: Vec<_> = t.block(a).iter().filter(|v| t.block(b).contains(v)).collect();
                prop_assert!(shared.len() <= 1);
                for &&v in &shared {
                    prop_assert!(t.is_cut_vertex(v));
                }
            }
        }
        let edges = t.tree_edges().count();
        prop_assert_eq!(edges + 1, t.node_count());
        // Connected: union-find over tree nodes.
        let mut uf = common::UnionFind::new(t.block_count() + g.n());
        for (b, z) in t.tree_edges() {
            uf.union(b, t.block_count() + z);
        }
        let roots: BTreeSet<usize> = (0..t.block_count())
            .chain(t.cut_vertices().iter().map(|&z| t.block_count() + z))
            .map(|x| uf.find(x))
            .collect();
        prop_assert_eq!(roots.len(), 1);
        if t.block_count() > 1 {
            for b in 0..t.block_count() {
                prop_assert!(!t.block_cut_vertices(b).is_empty());
            }
            let stats = t.end_block_stats();
            for &b in &stats.end_blocks {
                prop_assert_eq!(t.block_cut_vertices(b).len(), 1);
            }
            if g.n() >= 3 {
                prop_assert!(stats.eb >= 2);
            }
        }
        for v in 0..g.n() {
            prop_assert_eq!(t.is_cut_vertex(v), t.blocks_of(v).len() >= 2);
        }
    }

    #[test]
    fn two_connected_iff_one_block(g in connected_graph(10)) {
        let t = decompose(&g);
        prop_assert_eq!(is_two_connected(&g), t.block_count() == 1 && g.n() >= 3);
    }
}

#[test]
fn decomposition_is_deterministic() {
    let g = allpath::generators::seven_block_graph();
    assert_eq!(decompose(&g), decompose(&g));
}

#[test]
fn deep_path_does_not_overflow() {
    let n = 1_000_000;
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    let g = Graph::from_edges(n, &edges).unwrap();
    let t = decompose(&g);
    assert_eq!(t.block_count(), n - 1);
    assert_eq!(t.end_block_stats().eb, 2);
}
