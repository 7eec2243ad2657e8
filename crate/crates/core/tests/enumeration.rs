//! Graph keys, root clouds and their CSV output.

use std::collections::BTreeMap;

use bichroma_core::canon::are_isomorphic;
use bichroma_core::enumeration::{
    cloud_csv, connected_graphs, graph_key, labelled_graph, root_cloud, Universe, COLOURED_KINDS,
};
use bichroma_core::verify::check_root_set;
use bichroma_core::SimpleGraph;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn isomorphic_by_search(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.n() == b.n() && permutations(a.n()).iter().any(|p| &a.permuted(p) == b)
}

#[test]
fn keys_collide_exactly_for_isomorphic_graphs() {
    let n = 5;
    let graphs: Vec<SimpleGraph> = (0..1u64 << 10)
        .map(|code| labelled_graph(n, code, &COLOURED_KINDS[..2]).shadow())
        .collect();
    let mut by_key: BTreeMap<String, Vec<&SimpleGraph>> = BTreeMap::new();
    for g in &graphs {
        by_key.entry(graph_key(g)).or_default().push(g);
    }
    assert_eq!(by_key.len(), 34);
    for class in by_key.values() {
        for g in class {
            assert!(isomorphic_by_search(class[0], g));
        }
    }
    // one representative against every other class
    let reps: Vec<&SimpleGraph> = by_key.values().map(|c| c[0]).collect();
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            if a.edge_count() == b.edge_count() {
                assert!(!isomorphic_by_search(a, b));
                assert!(!are_isomorphic(a, b));
            }
        }
    }
}

#[test]
fn clouds_are_deterministic() {
    let a = cloud_csv(&root_cloud(5, Universe::Bichromatic, false).unwrap());
    let b = cloud_csv(&root_cloud(5, Universe::Bichromatic, false).unwrap());
    assert_eq!(a, b);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(3)
        .build()
        .unwrap();
    let c = pool.install(|| cloud_csv(&root_cloud(5, Universe::Bichromatic, false).unwrap()));
    assert_eq!(a, c);
}

#[test]
fn cloud_sizes_and_root_sets() {
    let mono = root_cloud(5, Universe::Monochromatic, false).unwrap();
    assert_eq!(mono.len(), 21);
    let bi = root_cloud(5, Universe::Bichromatic, true).unwrap();
    let full = root_cloud(5, Universe::Bichromatic, false).unwrap();
    assert!(bi.len() < full.len());
    let expected: usize = connected_graphs(5)
        .unwrap()
        .iter()
        .map(|g| 1 << g.edge_count())
        .sum();
    assert_eq!(full.len(), expected);
    for r in mono.iter().chain(&full) {
        check_root_set(&r.polynomial, &r.roots).unwrap();
        for &root in &r.roots.integer_roots {
            assert_eq!(r.polynomial.eval_i64(root), 0.into());
        }
    }
    let csv = cloud_csv(&mono);
    let rows = csv.lines().count() - 1;
    assert_eq!(rows, 5 * mono.len());
}
