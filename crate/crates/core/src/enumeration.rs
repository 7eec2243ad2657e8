//! Exhaustive generation of small graphs and their edge colourings, the
//! root clouds built from them, and exhaustive audits of the engines and
//! formulas.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{automorphisms, canonical_simple};
use crate::chromatic::{
    audit_against, classical_chromatic, poly_interpolated, poly_partition, poly_recursive,
};
use crate::format::{to_graph6, write_meg};
use crate::graph::{EdgeKind, MixedGraph, SimpleGraph, StructuralCensus};
use crate::invariance::{
    independent_pair_witness, is_invariant_by_polynomial, is_invariant_structural,
};
use crate::poly::{slash_coeffs, IntPolynomial};
use crate::roots::{find_roots, fmt_f64, RootError, RootSet, DEFAULT_TOLERANCE};

/// Largest order for graph enumeration.
pub const MAX_ENUMERATION: usize = 7;
/// Largest order for root clouds.
pub const MAX_CLOUD: usize = 6;
/// Largest order for labelled mixed-graph exhaustion.
pub const MAX_MIXED_AUDIT: usize = 4;
/// Largest order for labelled 2-edge-colouring exhaustion.
pub const MAX_COLOURED_AUDIT: usize = 5;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnumError {
    #[error("n = {n} exceeds the limit of {max} for {what}")]
    TooLarge {
        n: usize,
        max: usize,
        what: &'static str,
    },
    #[error("root finding failed for {graph_key} colouring {colouring_id}: {source}")]
    Roots {
        graph_key: String,
        colouring_id: u64,
        source: RootError,
    },
}

fn too_large(n: usize, max: usize, what: &'static str) -> Result<(), EnumError> {
    if n > max {
        Err(EnumError::TooLarge { n, max, what })
    } else {
        Ok(())
    }
}

/// graph6 string of the canonical relabelling; equal exactly for
/// isomorphic graphs.
pub fn graph_key(g: &SimpleGraph) -> String {
    to_graph6(&canonical_simple(g))
}

/// All graphs on `n` vertices up to isomorphism, each in canonical form,
/// sorted by key. Built by adding a vertex to every graph on `n - 1`
/// vertices in every possible way.
pub fn all_graphs(n: usize) -> Result<Vec<SimpleGraph>, EnumError> {
    too_large(n, MAX_ENUMERATION, "graph enumeration")?;
    let mut level: BTreeMap<String, SimpleGraph> = BTreeMap::new();
    level.insert(to_graph6(&SimpleGraph::new(0)), SimpleGraph::new(0));
    for size in 1..=n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for nbrs in 0..1u64 << (size - 1) {
                let mut h = SimpleGraph::new(size);
                for (u, v) in g.edges() {
                    h.add_edge(u, v).expect("copied edge");
                }
                for u in crate::graph::bits(nbrs) {
                    h.add_edge(u, size - 1).expect("new edge");
                }
                let c = canonical_simple(&h);
                next.entry(to_graph6(&c)).or_insert(c);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// Connected graphs on `n` vertices up to isomorphism, canonical and
/// sorted by key.
pub fn connected_graphs(n: usize) -> Result<Vec<SimpleGraph>, EnumError> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(SimpleGraph::is_connected)
        .collect())
}

/// One 2-edge-colouring of a fixed graph. Bit `i` of `id` set means the
/// `i`-th edge in lexicographic order is blue, so id 0 is all red.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    pub id: u64,
    pub graph: MixedGraph,
}

pub fn colouring_from_id(g: &SimpleGraph, id: u64) -> MixedGraph {
    let mut m = MixedGraph::new(g.n());
    for (i, (u, v)) in g.edges().enumerate() {
        let kind = if id >> i & 1 == 1 {
            EdgeKind::Blue
        } else {
            EdgeKind::Red
        };
        m.add_edge(u, v, kind).expect("edge of a simple graph");
    }
    m
}

/// All `2^|E|` red/blue colourings in id order, or with `dedup` the least
/// id of each orbit under automorphisms of `g` and swapping the colours.
pub fn colourings_of(g: &SimpleGraph, dedup: bool) -> Vec<Colouring> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() < 64, "too many edges to enumerate colourings");
    let total = 1u64 << edges.len();
    let ids: Vec<u64> = if dedup {
        orbit_representatives(g, &edges)
    } else {
        (0..total).collect()
    };
    ids.into_iter()
        .map(|id| Colouring {
            id,
            graph: colouring_from_id(g, id),
        })
        .collect()
}

fn orbit_representatives(g: &SimpleGraph, edges: &[(usize, usize)]) -> Vec<u64> {
    let index: std::collections::HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    // Each automorphism as a permutation of edge positions.
    let edge_maps: Vec<Vec<usize>> = automorphisms(g)
        .iter()
        .map(|perm| {
            edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                    index[&(a, b)]
                })
                .collect()
        })
        .collect();
    let all = (1u64 << edges.len()) - 1;
    let mut seen = vec![false; 1usize << edges.len()];
    let mut reps = Vec::new();
    for id in 0..=all {
        if seen[id as usize] {
            continue;
        }
        reps.push(id);
        for map in &edge_maps {
            let mut image = 0u64;
            for (i, &j) in map.iter().enumerate() {
                image |= (id >> i & 1) << j;
            }
            seen[image as usize] = true;
            seen[(image ^ all) as usize] = true;
        }
    }
    reps
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Universe {
    /// Every red/blue colouring of every connected graph.
    Bichromatic,
    /// Every connected graph with its ordinary chromatic polynomial.
    Monochromatic,
}

impl std::str::FromStr for Universe {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bichromatic" => Ok(Universe::Bichromatic),
            "monochromatic" => Ok(Universe::Monochromatic),
            other => Err(format!(
                "unknown universe `{other}` (bichromatic or monochromatic)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnumerationRecord {
    pub graph_key: String,
    pub colouring_id: u64,
    pub polynomial: IntPolynomial,
    pub roots: RootSet,
}

/// Polynomials and roots over a universe of connected `n`-vertex graphs,
/// ordered by `(graph_key, colouring_id)`. Polynomial and root work runs on
/// the current rayon pool; output order does not depend on it.
pub fn root_cloud(
    n: usize,
    universe: Universe,
    dedup: bool,
) -> Result<Vec<EnumerationRecord>, EnumError> {
    too_large(n, MAX_CLOUD, "root clouds")?;
    let graphs = connected_graphs(n)?;
    let jobs: Vec<(String, SimpleGraph, u64)> = graphs
        .iter()
        .flat_map(|g| {
            let key = graph_key(g);
            let ids: Vec<u64> = match universe {
                Universe::Monochromatic => vec![0],
                Universe::Bichromatic => {
                    colourings_of(g, dedup).into_iter().map(|c| c.id).collect()
                }
            };
            ids.into_iter().map(move |id| (key.clone(), g.clone(), id))
        })
        .collect();
    let polys: Vec<IntPolynomial> = jobs
        .par_iter()
        .map(|(_, g, id)| match universe {
            Universe::Monochromatic => classical_chromatic(g),
            Universe::Bichromatic => poly_recursive(&colouring_from_id(g, *id)),
        })
        .collect();
    // Many colourings share a polynomial; find each distinct one's roots once.
    let mut distinct: Vec<&IntPolynomial> = polys.iter().collect();
    distinct.sort_by_key(|p| slash_coeffs(p));
    distinct.dedup();
    let solved: Vec<(String, Result<RootSet, RootError>)> = distinct
        .par_iter()
        .map(|p| (slash_coeffs(p), find_roots(p, DEFAULT_TOLERANCE)))
        .collect();
    let table: std::collections::HashMap<String, Result<RootSet, RootError>> =
        solved.into_iter().collect();
    jobs.into_iter()
        .zip(polys)
        .map(|((graph_key, _, colouring_id), polynomial)| {
            let roots = table[&slash_coeffs(&polynomial)]
                .clone()
                .map_err(|source| EnumError::Roots {
                    graph_key: graph_key.clone(),
                    colouring_id,
                    source,
                })?;
            Ok(EnumerationRecord {
                graph_key,
                colouring_id,
                polynomial,
                roots,
            })
        })
        .collect()
}

pub const CLOUD_CSV_HEADER: &str = "graph_key,colouring_id,degree,coeffs,re,im,residual";

/// One row per root, repeated by multiplicity, conjugates on separate rows.
pub fn cloud_csv(records: &[EnumerationRecord]) -> String {
    let mut out = String::with_capacity(records.len() * 64);
    out.push_str(CLOUD_CSV_HEADER);
    out.push('\n');
    for r in records {
        let degree = r.polynomial.degree().unwrap_or(0);
        let coeffs = slash_coeffs(&r.polynomial);
        for (z, residual) in r.roots.all_roots() {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.graph_key,
                r.colouring_id,
                degree,
                coeffs,
                fmt_f64(z.re),
                fmt_f64(z.im),
                fmt_f64(residual)
            );
        }
    }
    out
}

/// Each vertex pair independently absent, red, blue or flexible with
/// probabilities 0.4, 0.2, 0.2, 0.2.
pub fn random_mixed_graph<R: Rng>(n: usize, rng: &mut R) -> MixedGraph {
    let mut m = MixedGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let kind = match rng.random_range(0..10u8) {
                0..=3 => continue,
                4 | 5 => EdgeKind::Red,
                6 | 7 => EdgeKind::Blue,
                _ => EdgeKind::Flexible,
            };
            m.add_edge(u, v, kind).expect("fresh pair");
        }
    }
    m
}

/// `count` graphs from [`random_mixed_graph`] with a ChaCha8 stream seeded
/// by `seed`.
pub fn random_mixed_graphs(n: usize, count: usize, seed: u64) -> Vec<MixedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_mixed_graph(n, &mut rng))
        .collect()
}

/// Labelled graph number `code` when each of the `C(n, 2)` pairs, in
/// lexicographic order, takes one of `kinds` (`None` meaning absent) as the
/// successive base-`kinds.len()` digits of `code`.
pub fn labelled_graph(n: usize, mut code: u64, kinds: &[Option<EdgeKind>]) -> MixedGraph {
    let base = kinds.len() as u64;
    let mut m = MixedGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if let Some(k) = kinds[(code % base) as usize] {
                m.add_edge(u, v, k).expect("fresh pair");
            }
            code /= base;
        }
    }
    m
}

pub const MIXED_KINDS: [Option<EdgeKind>; 4] = [
    None,
    Some(EdgeKind::Red),
    Some(EdgeKind::Blue),
    Some(EdgeKind::Flexible),
];
pub const COLOURED_KINDS: [Option<EdgeKind>; 3] = [None, Some(EdgeKind::Red), Some(EdgeKind::Blue)];

/// A graph on which the third-coefficient formula and the true coefficient
/// differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThirdDisagreement {
    pub graph: MixedGraph,
    pub census: StructuralCensus,
    pub formula: i64,
    pub truth: i64,
}

impl ThirdDisagreement {
    /// Edges as `u-vK` tokens, e.g. `0-1R 2-3B`.
    pub fn edge_list(&self) -> String {
        let edges: Vec<String> = self
            .graph
            .edges()
            .map(|(u, v, k)| format!("{u}-{v}{}", k.letter()))
            .collect();
        edges.join(" ")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditSummary {
    pub n: usize,
    /// Labelled mixed graphs checked (0 when `n` exceeds the mixed limit).
    pub mixed_instances: usize,
    /// All three engines equal.
    pub engine_agreements: usize,
    /// Degree `n`, monic, zero constant term.
    pub shape_agreements: usize,
    pub second_agreements: usize,
    /// Instances where the third-coefficient formula applies (`n >= 2`).
    pub third_checked: usize,
    pub third_agreements: usize,
    pub third_disagreements: Vec<ThirdDisagreement>,
    /// Labelled 2-edge-coloured graphs checked.
    pub coloured_instances: usize,
    /// Structural test equals polynomial comparison.
    pub structural_vs_polynomial: usize,
    /// Independent-set witness exists exactly when the structural test fails.
    pub witness_vs_structural: usize,
}

impl AuditSummary {
    /// Everything except the third-coefficient formula agrees.
    pub fn core_checks_pass(&self) -> bool {
        self.engine_agreements == self.mixed_instances
            && self.shape_agreements == self.mixed_instances
            && self.second_agreements == self.mixed_instances
            && self.structural_vs_polynomial == self.coloured_instances
            && self.witness_vs_structural == self.coloured_instances
    }

    /// Failures other than the known third-coefficient discrepancies. Those
    /// are tolerated only off complete shadows: on a complete shadow the
    /// formula reduces to its base case and must hold.
    pub fn unexpected(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut tally = |what: &str, good: usize, total: usize| {
            if good != total {
                out.push(format!("{what}: {} of {total} disagree", total - good));
            }
        };
        tally("engines", self.engine_agreements, self.mixed_instances);
        tally(
            "degree and leading terms",
            self.shape_agreements,
            self.mixed_instances,
        );
        tally(
            "second coefficient",
            self.second_agreements,
            self.mixed_instances,
        );
        tally(
            "structural vs polynomial",
            self.structural_vs_polynomial,
            self.coloured_instances,
        );
        tally(
            "independent-set vs structural",
            self.witness_vs_structural,
            self.coloured_instances,
        );
        for d in &self.third_disagreements {
            if !is_known_third_discrepancy(&d.graph) {
                out.push(format!(
                    "third coefficient on a complete shadow: {} (formula {}, true {})",
                    d.edge_list(),
                    d.formula,
                    d.truth
                ));
            }
        }
        out
    }

    /// Adds one mixed-graph result to the tallies.
    pub fn absorb(&mut self, o: InstanceAudit) {
        self.mixed_instances += 1;
        self.engine_agreements += o.engines as usize;
        self.shape_agreements += o.shape as usize;
        self.second_agreements += o.second as usize;
        if let Some(third) = o.third {
            self.third_checked += 1;
            match third {
                Ok(()) => self.third_agreements += 1,
                Err(d) => self.third_disagreements.push(d),
            }
        }
    }

    pub fn third_flags(&self, graph: &MixedGraph) -> Option<&ThirdDisagreement> {
        self.third_disagreements.iter().find(|d| &d.graph == graph)
    }
}

impl fmt::Display for AuditSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "exhaustive audit, n = {}", self.n)?;
        if self.mixed_instances > 0 {
            let m = self.mixed_instances;
            writeln!(f, "labelled mixed graphs: {m}")?;
            writeln!(f, "  engines agree: {}/{m}", self.engine_agreements)?;
            writeln!(
                f,
                "  degree n, monic, no constant term: {}/{m}",
                self.shape_agreements
            )?;
            writeln!(
                f,
                "  second coefficient formula: {}/{m}",
                self.second_agreements
            )?;
            writeln!(
                f,
                "  third coefficient formula: {}/{} ({} disagreements)",
                self.third_agreements,
                self.third_checked,
                self.third_disagreements.len()
            )?;
        }
        if self.coloured_instances > 0 {
            let c = self.coloured_instances;
            writeln!(f, "labelled 2-edge-coloured graphs: {c}")?;
            writeln!(
                f,
                "  structural test = polynomial test: {}/{c}",
                self.structural_vs_polynomial
            )?;
            writeln!(
                f,
                "  independent-set test = structural test: {}/{c}",
                self.witness_vs_structural
            )?;
        }
        Ok(())
    }
}

/// Whether a third-coefficient disagreement on `m` is of the documented
/// kind, i.e. its shadow is not complete.
pub fn is_known_third_discrepancy(m: &MixedGraph) -> bool {
    !m.shadow().is_complete()
}

/// The third-coefficient disagreements as CSV:
/// `n,edges,R,B,F,P,T,O,formula,true`.
pub fn third_disagreement_csv(summary: &AuditSummary) -> String {
    let mut out = String::from("n,edges,R,B,F,P,T,O,formula,true\n");
    for d in &summary.third_disagreements {
        let c = &d.census;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            d.graph.n(),
            d.edge_list(),
            c.red_count,
            c.blue_count,
            c.flex_count,
            c.ppair_count,
            c.triangle_count,
            c.obstruct_count,
            d.formula,
            d.truth
        );
    }
    out
}

/// Per-graph result of [`audit_instance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceAudit {
    pub shadow_complete: bool,
    /// All three engines equal.
    pub engines: bool,
    /// Degree `n`, monic, zero constant term.
    pub shape: bool,
    pub second: bool,
    /// `None` below two vertices, where the formula does not apply.
    pub third: Option<Result<(), ThirdDisagreement>>,
}

/// Checks one mixed graph against the engines and both coefficient
/// formulas, taking the interpolated polynomial as the truth.
pub fn audit_instance(m: &MixedGraph) -> InstanceAudit {
    let n = m.n();
    let reference = poly_interpolated(m).expect("colouring counts interpolate");
    let engines = poly_recursive(m) == reference && poly_partition(m) == reference;
    let shape = reference.degree() == Some(n)
        && reference.is_monic()
        && (n == 0 || reference.coeff(0) == 0.into());
    let (second, third) = if n == 0 {
        (true, None)
    } else if n == 1 {
        let truth = reference.coeff(0).to_i64();
        (
            crate::chromatic::coeff_formula_second(m).ok() == truth,
            None,
        )
    } else {
        let a = audit_against(m, &reference).expect("n >= 2");
        let third = if a.agrees_third {
            Ok(())
        } else {
            Err(ThirdDisagreement {
                graph: m.clone(),
                census: m.census(),
                formula: a.formula_third,
                truth: a.true_third,
            })
        };
        (a.agrees_second, Some(third))
    };
    InstanceAudit {
        shadow_complete: m.shadow().is_complete(),
        engines,
        shape,
        second,
        third,
    }
}

fn audit_coloured(g: &MixedGraph) -> (bool, bool) {
    let structural = is_invariant_structural(g)
        .expect("no flexible edges")
        .invariant;
    let by_poly = is_invariant_by_polynomial(g).expect("no flexible edges");
    let witness = independent_pair_witness(g).expect("small graph").is_some();
    (structural == by_poly, witness != structural)
}

/// Runs every labelled mixed graph on `n <= 4` vertices through the three
/// engines and both coefficient formulas, and every labelled
/// 2-edge-coloured graph on `n <= 5` vertices through the three invariance
/// tests. For `n = 5` only the second part runs.
pub fn exhaustive_audit(n: usize) -> Result<AuditSummary, EnumError> {
    too_large(n, MAX_COLOURED_AUDIT, "exhaustive audits")?;
    let pairs = (n * n.saturating_sub(1) / 2) as u32;
    let mut s = AuditSummary {
        n,
        ..AuditSummary::default()
    };
    if n <= MAX_MIXED_AUDIT {
        let outcomes: Vec<InstanceAudit> = (0..4u64.pow(pairs))
            .into_par_iter()
            .map(|code| audit_instance(&labelled_graph(n, code, &MIXED_KINDS)))
            .collect();
        outcomes.into_iter().for_each(|o| s.absorb(o));
    }
    let outcomes: Vec<(bool, bool)> = (0..3u64.pow(pairs))
        .into_par_iter()
        .map(|code| audit_coloured(&labelled_graph(n, code, &COLOURED_KINDS)))
        .collect();
    s.coloured_instances = outcomes.len();
    for (a, b) in outcomes {
        s.structural_vs_polynomial += a as usize;
        s.witness_vs_structural += b as usize;
    }
    Ok(s)
}

/// MEG text of each disagreement, separated by blank lines.
pub fn third_disagreement_megs(summary: &AuditSummary) -> String {
    summary
        .third_disagreements
        .iter()
        .map(|d| {
            format!(
                "# formula {} true {}\n{}",
                d.formula,
                d.truth,
                write_meg(&d.graph)
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::fixtures::*;
    use std::collections::HashSet;

    #[test]
    fn graph_counts() {
        let connected: Vec<usize> = (1..=6)
            .map(|n| connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
        let all: Vec<usize> = (0..=5).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34]);
        assert!(matches!(
            connected_graphs(8),
            Err(EnumError::TooLarge { n: 8, .. })
        ));
    }

    #[test]
    fn labelled_census_matches_unlabelled_count() {
        // every labelled graph on 4 vertices lands on one of the 11 keys,
        // and all 11 keys occur
        let keys: HashSet<String> = (0..64u64)
            .map(|code| graph_key(&labelled_graph(4, code, &COLOURED_KINDS[..2]).shadow()))
            .collect();
        let generated: HashSet<String> = all_graphs(4).unwrap().iter().map(graph_key).collect();
        assert_eq!(keys, generated);
    }

    #[test]
    fn keys_are_sound() {
        let graphs = all_graphs(5).unwrap();
        for (i, a) in graphs.iter().enumerate() {
            assert_eq!(&canonical_simple(a), a);
            for b in &graphs[i + 1..] {
                assert!(!are_isomorphic(a, b));
            }
        }
        let g = cycle(5);
        assert_eq!(graph_key(&g), graph_key(&g.permuted(&[2, 4, 1, 0, 3])));
    }

    #[test]
    fn colouring_examples() {
        let edge = SimpleGraph::complete(2);
        assert_eq!(colourings_of(&edge, false).len(), 2);
        assert_eq!(colourings_of(&edge, true).len(), 1);
        assert_eq!(colourings_of(&SimpleGraph::complete(3), true).len(), 2);
        let all = colourings_of(&SimpleGraph::complete(3), false);
        assert_eq!(all[0].graph.count_kind(EdgeKind::Blue), 0);
        assert_eq!(all[1].graph.kind(0, 1), Some(EdgeKind::Blue));
        // K4 colourings up to symmetry and swap: 64 colourings, 6 classes
        assert_eq!(colourings_of(&SimpleGraph::complete(4), true).len(), 6);
    }

    #[test]
    fn small_clouds() {
        let mono = root_cloud(2, Universe::Monochromatic, false).unwrap();
        assert_eq!(mono.len(), 1);
        assert_eq!(mono[0].roots.integer_roots, vec![0, 1]);
        let csv = cloud_csv(&mono);
        assert_eq!(csv, "graph_key,colouring_id,degree,coeffs,re,im,residual\nA_,0,2,0/-1/1,0,0,0\nA_,0,2,0/-1/1,1,0,0\n");
        let bi = root_cloud(4, Universe::Bichromatic, false).unwrap();
        let expected: usize = connected_graphs(4)
            .unwrap()
            .iter()
            .map(|g| 1usize << g.edge_count())
            .sum();
        assert_eq!(bi.len(), expected);
        assert!(bi
            .windows(2)
            .all(|w| (&w[0].graph_key, w[0].colouring_id) < (&w[1].graph_key, w[1].colouring_id)));
    }

    #[test]
    fn random_graphs_are_seeded() {
        let a = random_mixed_graphs(6, 20, 7);
        assert_eq!(a, random_mixed_graphs(6, 20, 7));
        assert_ne!(a, random_mixed_graphs(6, 20, 8));
        let edges: usize = random_mixed_graphs(6, 400, 1)
            .iter()
            .map(|m| m.edge_count())
            .sum();
        let rate = edges as f64 / (400.0 * 15.0);
        assert!((0.55..0.65).contains(&rate), "{rate}");
    }

    #[test]
    fn audit_small_orders() {
        let two = exhaustive_audit(2).unwrap();
        assert_eq!(two.mixed_instances, 4);
        assert!(two.core_checks_pass());
        assert!(two.third_disagreements.is_empty());
        let four = exhaustive_audit(4).unwrap();
        assert_eq!(four.mixed_instances, 4096);
        assert!(four.core_checks_pass());
        assert!(four.unexpected().is_empty());
        let flagged = four.third_flags(&two_k2()).unwrap();
        assert_eq!((flagged.formula, flagged.truth), (0, -1));
        assert!(four.third_flags(&double_witness_c4()).is_some());
        assert!(four.third_flags(&p4_mixed()).is_none());
        assert!(
            third_disagreement_csv(&four).lines().count() == 1 + four.third_disagreements.len()
        );
        assert!(exhaustive_audit(6).is_err());
    }
}
