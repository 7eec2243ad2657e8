//! When does 2-edge-colouring a graph leave its chromatic polynomial
//! unchanged?
//!
//! A 2-edge-coloured graph is chromatically invariant when its polynomial
//! equals the ordinary chromatic polynomial of its underlying graph. That
//! happens exactly when it has no induced bichromatic 2-path and no induced
//! bichromatic 2K2, or equivalently when no two disjoint independent sets
//! induce both a red and a blue edge. Graphs admitting an invariant
//! colouring in which every vertex meets both colours are exactly joins of
//! two graphs without isolated vertices.

use std::fmt;

use thiserror::Error;

use crate::chromatic::{classical_chromatic, poly_recursive};
use crate::graph::{bits, full_mask, EdgeKind, MixedGraph, SimpleGraph};

/// Largest graph [`independent_pair_witness`] will search.
pub const WITNESS_SEARCH_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvarianceError {
    #[error("edge {u}-{v} is flexible; a 2-edge-coloured graph is required")]
    HasFlexibleEdges { u: usize, v: usize },
    #[error("{n} vertices exceeds the {limit}-vertex search limit")]
    TooLarge { n: usize, limit: usize },
    #[error("not a join: {0}")]
    NotAJoin(String),
    #[error("vertex {vertex} has no neighbour on its own side")]
    IsolatedVertexInSide { vertex: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    /// `red_end`-`centre` red, `centre`-`blue_end` blue, ends non-adjacent.
    TwoPath {
        red_end: usize,
        centre: usize,
        blue_end: usize,
    },
    /// Two vertex-disjoint edges, one of each colour, inducing nothing else.
    TwoK2 {
        red: (usize, usize),
        blue: (usize, usize),
    },
}

impl Witness {
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = match *self {
            Witness::TwoPath {
                red_end,
                centre,
                blue_end,
            } => vec![red_end, centre, blue_end],
            Witness::TwoK2 { red, blue } => vec![red.0, red.1, blue.0, blue.1],
        };
        v.sort_unstable();
        v
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::TwoPath {
                red_end,
                centre,
                blue_end,
            } => {
                write!(
                    f,
                    "bichromatic 2-path {red_end}-{centre} (R), {centre}-{blue_end} (B)"
                )
            }
            Witness::TwoK2 { red, blue } => write!(
                f,
                "bichromatic 2K2 {}-{} (R), {}-{} (B)",
                red.0, red.1, blue.0, blue.1
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvarianceReport {
    pub invariant: bool,
    pub witness: Option<Witness>,
}

impl fmt::Display for InvarianceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("chromatically invariant"),
            Some(w) => write!(f, "not chromatically invariant: {w}"),
        }
    }
}

fn require_coloured(g: &MixedGraph) -> Result<(), InvarianceError> {
    match g.first_flexible() {
        Some((u, v)) => Err(InvarianceError::HasFlexibleEdges { u, v }),
        None => Ok(()),
    }
}

/// Both colour classes non-empty.
pub fn is_nontrivial(g: &MixedGraph) -> bool {
    g.is_bichromatic()
}

/// Searches for an induced bichromatic 2-path, then an induced bichromatic
/// 2K2. Each kind is searched in increasing order of its sorted vertex
/// tuple, so the witness is the lexicographically least of its kind.
pub fn is_invariant_structural(g: &MixedGraph) -> Result<InvarianceReport, InvarianceError> {
    require_coloured(g)?;
    let witness = least_two_path(g).or_else(|| least_two_k2(g));
    Ok(InvarianceReport {
        invariant: witness.is_none(),
        witness,
    })
}

fn least_two_path(g: &MixedGraph) -> Option<Witness> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                // each vertex of the triple may be the centre
                for (centre, x, y) in [(a, b, c), (b, a, c), (c, a, b)] {
                    if g.adjacent(x, y) {
                        continue;
                    }
                    match (g.kind(centre, x), g.kind(centre, y)) {
                        (Some(EdgeKind::Red), Some(EdgeKind::Blue)) => {
                            return Some(Witness::TwoPath {
                                red_end: x,
                                centre,
                                blue_end: y,
                            })
                        }
                        (Some(EdgeKind::Blue), Some(EdgeKind::Red)) => {
                            return Some(Witness::TwoPath {
                                red_end: y,
                                centre,
                                blue_end: x,
                            })
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    None
}

fn least_two_k2(g: &MixedGraph) -> Option<Witness> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    let edges: Vec<(usize, usize, EdgeKind)> = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (quad[i], quad[j])))
                        .filter_map(|(u, v)| g.kind(u, v).map(|k| (u, v, k)))
                        .collect();
                    if edges.len() != 2 {
                        continue;
                    }
                    let (e, f) = (edges[0], edges[1]);
                    if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                        continue;
                    }
                    match (e.2, f.2) {
                        (EdgeKind::Red, EdgeKind::Blue) => {
                            return Some(Witness::TwoK2 {
                                red: (e.0, e.1),
                                blue: (f.0, f.1),
                            })
                        }
                        (EdgeKind::Blue, EdgeKind::Red) => {
                            return Some(Witness::TwoK2 {
                                red: (f.0, f.1),
                                blue: (e.0, e.1),
                            })
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    None
}

/// Invariance decided by comparing polynomials directly.
pub fn is_invariant_by_polynomial(g: &MixedGraph) -> Result<bool, InvarianceError> {
    require_coloured(g)?;
    Ok(poly_recursive(g) == classical_chromatic(&g.shadow()))
}

/// Two disjoint vertex sets, each sorted.
pub type VertexSplit = (Vec<usize>, Vec<usize>);

/// Disjoint non-empty independent sets `(I1, I2)` of the underlying graph
/// whose induced subgraph has both a red and a blue edge.
///
/// Every assignment of each vertex to `I1`, `I2` or neither is tried in
/// lexicographic order (vertex 0 most significant, `I1 < I2 < neither`),
/// pruning assignments that break independence; the first success is
/// returned, with both sets sorted.
pub fn independent_pair_witness(g: &MixedGraph) -> Result<Option<VertexSplit>, InvarianceError> {
    require_coloured(g)?;
    if g.n() > WITNESS_SEARCH_LIMIT {
        return Err(InvarianceError::TooLarge {
            n: g.n(),
            limit: WITNESS_SEARCH_LIMIT,
        });
    }
    fn search(g: &MixedGraph, v: usize, sets: &mut [u64; 2]) -> bool {
        if v == g.n() {
            let (a, b) = (sets[0], sets[1]);
            let crossing =
                |mask: fn(&MixedGraph, usize) -> u64| bits(a).any(|u| mask(g, u) & b != 0);
            return a != 0
                && b != 0
                && crossing(MixedGraph::red_mask)
                && crossing(MixedGraph::blue_mask);
        }
        for side in 0..2 {
            if g.shadow_mask(v) & sets[side] == 0 {
                sets[side] |= 1 << v;
                if search(g, v + 1, sets) {
                    return true;
                }
                sets[side] &= !(1 << v);
            }
        }
        search(g, v + 1, sets)
    }
    let mut sets = [0u64; 2];
    Ok(search(g, 0, &mut sets).then(|| (bits(sets[0]).collect(), bits(sets[1]).collect())))
}

/// A split `(X, Y)` of the join factors of `g` such that neither side's
/// induced graph has an isolated vertex; the most balanced split is tried
/// first. `None` if `g` is not a join or no split works.
pub fn admits_invariant_colouring(g: &SimpleGraph) -> Option<VertexSplit> {
    let factors: Vec<u64> = g
        .join_factors()
        .iter()
        .map(|f| f.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let k = factors.len();
    if !(2..=63).contains(&k) {
        return None;
    }
    let all = full_mask(g.n());
    // Groupings with factor 0 on side X; the rest choose freely.
    let mut groupings: Vec<u64> = (0..1u64 << (k - 1))
        .map(|choice| {
            let mut x = factors[0];
            for (i, &f) in factors.iter().enumerate().skip(1) {
                if choice >> (i - 1) & 1 == 1 {
                    x |= f;
                }
            }
            x
        })
        .filter(|&x| x != all)
        .collect();
    let imbalance = |x: &u64| (2 * x.count_ones() as i64 - g.n() as i64).abs();
    groupings.sort_by_key(|x| (imbalance(x), *x));
    groupings
        .into_iter()
        .find(|&x| !g.has_isolated_in(x) && !g.has_isolated_in(all & !x))
        .map(|x| (bits(x).collect(), bits(all & !x).collect()))
}

/// Colours the edges inside each side red and the joining edges blue.
pub fn construct_join_colouring(
    g: &SimpleGraph,
    x: &[usize],
    y: &[usize],
) -> Result<MixedGraph, InvarianceError> {
    let n = g.n();
    let to_mask = |side: &[usize]| -> Result<u64, InvarianceError> {
        side.iter().try_fold(0u64, |m, &v| {
            if v >= n {
                Err(InvarianceError::NotAJoin(format!(
                    "vertex {v} out of range"
                )))
            } else {
                Ok(m | 1 << v)
            }
        })
    };
    let (xm, ym) = (to_mask(x)?, to_mask(y)?);
    if xm & ym != 0 || xm | ym != full_mask(n) || xm == 0 || ym == 0 {
        return Err(InvarianceError::NotAJoin(
            "sides must be non-empty and partition the vertex set".into(),
        ));
    }
    for u in bits(xm) {
        let missing = ym & !g.neighbours(u);
        if missing != 0 {
            let v = missing.trailing_zeros();
            return Err(InvarianceError::NotAJoin(format!(
                "vertices {u} and {v} are not adjacent"
            )));
        }
    }
    for side in [xm, ym] {
        if let Some(v) = bits(side).find(|&v| g.neighbours(v) & side == 0) {
            return Err(InvarianceError::IsolatedVertexInSide { vertex: v });
        }
    }
    let mut out = MixedGraph::new(n);
    for (u, v) in g.edges() {
        let internal = (xm >> u & 1) == (xm >> v & 1);
        let kind = if internal {
            EdgeKind::Red
        } else {
            EdgeKind::Blue
        };
        out.add_edge(u, v, kind).expect("edge of a simple graph");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::EdgeKind::*;

    #[test]
    fn structural_examples() {
        assert!(
            is_invariant_structural(&k4_red_matching())
                .unwrap()
                .invariant
        );
        let r = is_invariant_structural(&two_path()).unwrap();
        assert_eq!(
            r.witness,
            Some(Witness::TwoPath {
                red_end: 0,
                centre: 1,
                blue_end: 2
            })
        );
        let r = is_invariant_structural(&two_k2()).unwrap();
        assert_eq!(
            r.witness,
            Some(Witness::TwoK2 {
                red: (0, 1),
                blue: (2, 3)
            })
        );
        assert!(!r.invariant);
        assert_eq!(
            is_invariant_structural(&g(2, &[(0, 1, Flexible)])),
            Err(InvarianceError::HasFlexibleEdges { u: 0, v: 1 })
        );
    }

    #[test]
    fn witness_prefers_two_paths_and_least_tuples() {
        // 2K2 on {0,1,2,3} and a 2-path on {2,4,5}
        let m = g(6, &[(0, 1, Red), (2, 3, Blue), (4, 2, Blue), (4, 5, Red)]);
        let r = is_invariant_structural(&m).unwrap();
        assert_eq!(
            r.witness,
            Some(Witness::TwoPath {
                red_end: 5,
                centre: 4,
                blue_end: 2
            })
        );
        assert_eq!(r.witness.unwrap().vertices(), vec![2, 4, 5]);
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(
            is_invariant_by_polynomial(&MixedGraph::from_simple(&cycle(5), Red)),
            Ok(true)
        );
        assert_eq!(is_invariant_by_polynomial(&two_path()), Ok(false));
        assert_eq!(is_invariant_by_polynomial(&k4_red_matching()), Ok(true));
    }

    #[test]
    fn independent_pair_examples() {
        assert_eq!(
            independent_pair_witness(&two_k2()).unwrap(),
            Some((vec![0, 2], vec![1, 3]))
        );
        assert_eq!(
            independent_pair_witness(&two_path()).unwrap(),
            Some((vec![0, 2], vec![1]))
        );
        assert_eq!(
            independent_pair_witness(&mono_clique(5, Blue)).unwrap(),
            None
        );
        assert_eq!(
            independent_pair_witness(&MixedGraph::new(17)),
            Err(InvarianceError::TooLarge { n: 17, limit: 16 })
        );
    }

    #[test]
    fn synthesis_examples() {
        let k6 = SimpleGraph::complete(6);
        let (x, y) = admits_invariant_colouring(&k6).unwrap();
        assert_eq!((x.len(), y.len()), (3, 3));
        assert_eq!(admits_invariant_colouring(&cycle(4)), None);
        assert_eq!(admits_invariant_colouring(&path(5)), None);

        let k4 = construct_join_colouring(&SimpleGraph::complete(4), &[0, 1], &[2, 3]).unwrap();
        assert_eq!(k4.count_kind(Red), 2);
        assert_eq!(k4.count_kind(Blue), 4);
        assert!(k4.kind(0, 1) == Some(Red) && k4.kind(2, 3) == Some(Red));

        let k6c = construct_join_colouring(&k6, &x, &y).unwrap();
        assert_eq!((k6c.count_kind(Red), k6c.count_kind(Blue)), (6, 9));
        assert!(is_invariant_structural(&k6c).unwrap().invariant);

        assert!(matches!(
            construct_join_colouring(&cycle(4), &[0, 2], &[1, 3]),
            Err(InvarianceError::IsolatedVertexInSide { vertex: 0 })
        ));
        assert!(matches!(
            construct_join_colouring(&path(4), &[0, 1], &[2, 3]),
            Err(InvarianceError::NotAJoin(_))
        ));
        assert!(matches!(
            construct_join_colouring(&k6, &[0, 1], &[2, 3]),
            Err(InvarianceError::NotAJoin(_))
        ));
    }

    #[test]
    fn nontrivial_means_both_colours() {
        assert!(is_nontrivial(&two_k2()));
        assert!(!is_nontrivial(&mono_clique(3, Red)));
    }
}
