//! Canonical labelling by exhaustive permutation search.
//!
//! The canonical form of a graph is the relabelling whose pair sequence,
//! read in graph6 order (`(0,1), (0,2), (1,2), (0,3), ...`), is
//! lexicographically smallest over all `n!` relabellings. Vertices are
//! placed one position at a time and a branch is cut as soon as its prefix
//! exceeds the best sequence found so far, which keeps the search far below
//! `n!` except on very symmetric graphs.

use crate::graph::{EdgeKind, MixedGraph, SimpleGraph};

/// Returns `order` with `order[i]` the vertex placed at position `i` in the
/// canonical relabelling. `value(u, v)` must be symmetric.
pub fn canonical_order(n: usize, value: impl Fn(usize, usize) -> u8) -> Vec<usize> {
    let table: Vec<Vec<u8>> = (0..n)
        .map(|u| (0..n).map(|v| value(u, v)).collect())
        .collect();
    let mut search = Search {
        table: &table,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        current: Vec::with_capacity(n * n.saturating_sub(1) / 2),
        best: None,
        best_order: (0..n).collect(),
    };
    search.run();
    search.best_order
}

struct Search<'a> {
    table: &'a [Vec<u8>],
    order: Vec<usize>,
    used: Vec<bool>,
    current: Vec<u8>,
    best: Option<Vec<u8>>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self) {
        let n = self.table.len();
        let j = self.order.len();
        if j == n {
            self.best = Some(self.current.clone());
            self.best_order = self.order.clone();
            return;
        }
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            let mark = self.current.len();
            for &u in &self.order {
                self.current.push(self.table[u][v]);
            }
            // Only the new column can differ from the best prefix: earlier
            // columns were equal or the branch would have been cut.
            let keep = match &self.best {
                None => true,
                Some(best) => self.current[mark..] <= best[mark..self.current.len()],
            };
            if keep {
                let strictly_less = self
                    .best
                    .as_ref()
                    .is_some_and(|best| self.current[mark..] < best[mark..self.current.len()]);
                if strictly_less {
                    // A smaller prefix invalidates the old best beyond this point.
                    self.best = None;
                }
                self.used[v] = true;
                self.order.push(v);
                self.run();
                self.order.pop();
                self.used[v] = false;
            }
            self.current.truncate(mark);
        }
    }
}

/// Inverse of an order: `perm[v]` is the new label of vertex `v`.
pub fn order_to_perm(order: &[usize]) -> Vec<usize> {
    let mut perm = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    perm
}

pub fn canonical_simple(g: &SimpleGraph) -> SimpleGraph {
    let order = canonical_order(g.n(), |u, v| g.has_edge(u, v) as u8);
    g.permuted(&order_to_perm(&order))
}

fn kind_code(k: Option<EdgeKind>) -> u8 {
    match k {
        None => 0,
        Some(EdgeKind::Red) => 1,
        Some(EdgeKind::Blue) => 2,
        Some(EdgeKind::Flexible) => 3,
    }
}

/// Canonical relabelling of a mixed graph (edge kinds are distinguished,
/// colours are not swapped).
pub fn canonical_mixed(m: &MixedGraph) -> MixedGraph {
    let order = canonical_order(m.n(), |u, v| kind_code(m.kind(u, v)));
    m.permuted(&order_to_perm(&order))
}

/// All automorphisms of `g` as permutations `perm[v] = image of v`, found
/// by extending partial maps that preserve adjacency. Identity first.
pub fn automorphisms(g: &SimpleGraph) -> Vec<Vec<usize>> {
    fn extend(g: &SimpleGraph, map: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = g.n();
        let v = map.len();
        if v == n {
            out.push(map.clone());
            return;
        }
        for image in 0..n {
            if used[image] || g.degree(image) != g.degree(v) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(map[u], image)) {
                used[image] = true;
                map.push(image);
                extend(g, map, used, out);
                map.pop();
                used[image] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(
        g,
        &mut Vec::with_capacity(g.n()),
        &mut vec![false; g.n()],
        &mut out,
    );
    out
}

/// Brute-force isomorphism test, for cross-checking canonical keys.
pub fn are_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<_> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<_> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    fn extend(a: &SimpleGraph, b: &SimpleGraph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == a.n() {
            return true;
        }
        for image in 0..b.n() {
            if used[image] || a.degree(v) != b.degree(image) {
                continue;
            }
            if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], image)) {
                used[image] = true;
                map.push(image);
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[image] = false;
            }
        }
        false
    }
    extend(a, b, &mut Vec::new(), &mut vec![false; b.n()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::to_graph6;
    use crate::graph::fixtures::*;

    fn pair_sequence(g: &SimpleGraph) -> Vec<bool> {
        let n = g.n();
        (1..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .map(|(i, j)| g.has_edge(i, j))
            .collect()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for slot in 0..n {
                let mut q = p.clone();
                q.insert(slot, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn canonical_matches_full_permutation_minimum() {
        for g in [
            path(5),
            cycle(5),
            SimpleGraph::complete(4),
            cycle(6),
            path(6).complement(),
        ] {
            let brute = permutations(g.n())
                .into_iter()
                .map(|p| pair_sequence(&g.permuted(&p)))
                .min()
                .unwrap();
            assert_eq!(pair_sequence(&canonical_simple(&g)), brute, "{g:?}");
        }
    }

    #[test]
    fn isomorphic_graphs_share_a_form() {
        let g = path(5);
        let h = g.permuted(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_simple(&g), canonical_simple(&h));
        assert_ne!(canonical_simple(&g), canonical_simple(&cycle(5)));
        assert_eq!(
            to_graph6(&canonical_simple(&SimpleGraph::complete(3))),
            "Bw"
        );
    }

    #[test]
    fn mixed_canonical_keeps_kinds() {
        let m = two_k2();
        let relabelled = m.permuted(&[2, 3, 0, 1]);
        assert_eq!(canonical_mixed(&m), canonical_mixed(&relabelled));
        let both_red = g(4, &[(0, 1, EdgeKind::Red), (2, 3, EdgeKind::Red)]);
        assert_ne!(canonical_mixed(&m), canonical_mixed(&both_red));
        let c = canonical_mixed(&m);
        assert_eq!(c.count_kind(EdgeKind::Red), 1);
        assert_eq!(c.count_kind(EdgeKind::Blue), 1);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&SimpleGraph::complete(4)).len(), 24);
        assert_eq!(automorphisms(&cycle(5)).len(), 10);
        assert_eq!(automorphisms(&path(4)).len(), 2);
        assert_eq!(automorphisms(&SimpleGraph::new(0)).len(), 1);
        assert_eq!(automorphisms(&path(3))[0], vec![0, 1, 2]);
    }

    #[test]
    fn isomorphism_test() {
        assert!(are_isomorphic(
            &cycle(6),
            &cycle(6).permuted(&[5, 3, 1, 0, 2, 4])
        ));
        assert!(!are_isomorphic(&cycle(6), &path(6)));
    }
}
