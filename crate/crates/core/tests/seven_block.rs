mod common;

use std::collections::BTreeSet;

use allpath::generators::seven_block_graph;
use allpath::{decompose, delete_vertices, is_convex, AllPath, VertexSet};
use common::{components_uf, labels};

fn names(list: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = list.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}

#[test]
fn blocks_and_cut_vertices() {
    let g = seven_block_graph();
    let t = decompose(&g);
    let blocks: BTreeSet<Vec<String>> = t
        .blocks()
        .map(|b| labels(&g, &b.iter().copied().collect()))
        .collect();
    let expected: BTreeSet<Vec<String>> = [
        &["a", "b"][..],
        &["b", "c", "d"],
        &["b", "e", "g", "f"],
        &["f", "l", "u", "v", "w"],
        &["h", "i", "j", "k", "l"],
        &["w", "x"],
        &["w", "y", "z"],
    ]
    .iter()
    .map(|b| names(b))
    .collect();
    assert_eq!(blocks, expected);
    let cuts: VertexSet = t.cut_vertices().iter().copied().collect();
    assert_eq!(labels(&g, &cuts), names(&["b", "f", "l", "w"]));

    let stats = t.end_block_stats();
    assert_eq!((stats.eb, stats.b), (5, 2));
    let ends: BTreeSet<Vec<String>> = stats
        .end_blocks
        .iter()
        .map(|&b| labels(&g, &t.block(b).iter().copied().collect()))
        .collect();
    let expected_ends: BTreeSet<Vec<String>> = [
        &["a", "b"][..],
        &["b", "c", "d"],
        &["h", "i", "j", "k", "l"],
        &["w", "x"],
        &["w", "y", "z"],
    ]
    .iter()
    .map(|b| names(b))
    .collect();
    assert_eq!(ends, expected_ends);
}

#[test]
fn interval_of_b_j_w() {
    let g = seven_block_graph();
    let q = AllPath::new(&g);
    let s = g.labeled_set(["b", "j", "w"]).unwrap();
    let pruned = q.pruned_tree(&s).unwrap();
    let survivors: BTreeSet<Vec<String>> = pruned
        .surviving_blocks()
        .into_iter()
        .map(|b| labels(&g, &q.tree().block(b).iter().copied().collect()))
        .collect();
    let expected: BTreeSet<Vec<String>> = [
        &["b", "e", "g", "f"][..],
        &["f", "l", "u", "v", "w"],
        &["h", "i", "j", "k", "l"],
    ]
    .iter()
    .map(|b| names(b))
    .collect();
    assert_eq!(survivors, expected);

    let interval = q.interval(&s);
    assert_eq!(
        labels(&g, &interval),
        names(&["b", "e", "f", "g", "h", "i", "j", "k", "l", "u", "v", "w"])
    );
    assert_eq!(q.hull(&s), interval);
    assert!(is_convex(&g, &interval));
}

#[test]
fn numbers() {
    let g = seven_block_graph();
    let q = AllPath::new(&g);
    let r = q.report();
    assert_eq!((r.c, r.i, r.h, r.gin), (17, 5, 5, 1));
    assert!(q.is_convex(&r.max_convex_witness));
    assert_eq!(r.max_convex_witness.len(), 17);
    // Adding any outside vertex breaks convexity or reaches V.
    for v in (0..g.n()).filter(|&v| !r.max_convex_witness.contains(v)) {
        let mut bigger = r.max_convex_witness.clone();
        bigger.insert(v);
        assert!(bigger.len() == g.n() || !q.is_convex(&bigger));
    }
    assert_eq!(q.interval(&r.min_interval_witness), VertexSet::full(g.n()));
}

#[test]
fn deletion_matches_union_find() {
    let g = seven_block_graph();
    let s = g.labeled_set(["b", "j", "w"]).unwrap();
    let parts: BTreeSet<VertexSet> = delete_vertices(&g, &s).into_iter().collect();
    assert_eq!(parts, components_uf(&g, &s));
}
