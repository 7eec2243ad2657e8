//! Chromatic polynomials of mixed 2-edge-coloured graphs.
//!
//! A `k`-colouring maps vertices to `0..k` so that adjacent vertices get
//! different colours and no unordered pair of colours `{a, b}` carries both
//! a red edge and a blue edge. Three independent routes to the polynomial
//! are provided:
//!
//! * [`poly_interpolated`] counts colourings for `k = 0..=n` and
//!   interpolates.
//! * [`poly_recursive`] applies `P(M) = P(M + xy) + P(M_xy)` on a legal pair
//!   until every pair is adjacent or bichromatic, where the value is the
//!   falling factorial.
//! * [`poly_partition`] sums `N_k * x(x-1)...(x-k+1)` over the valid
//!   partitions of the vertex set into `k` blocks.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::canon::canonical_mixed;
use crate::graph::{bits, full_mask, MixedGraph, SimpleGraph};
use crate::poly::{IntPolynomial, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("needs at least {needed} vertices, graph has {n}")]
    TooFewVertices { needed: usize, n: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Largest palette [`count_colourings`] accepts.
pub const MAX_COLOURS: usize = 128;

/// Shared bookkeeping for the two colouring searches: the colour (or block)
/// of each placed vertex and, per unordered colour pair, how many red and
/// blue edges run between the two classes.
struct Classes<'a> {
    m: &'a MixedGraph,
    colour: Vec<usize>,
    width: usize,
    red: Vec<u32>,
    blue: Vec<u32>,
}

impl<'a> Classes<'a> {
    fn new(m: &'a MixedGraph, width: usize) -> Self {
        Classes {
            m,
            colour: vec![usize::MAX; m.n()],
            width,
            red: vec![0; width * width],
            blue: vec![0; width * width],
        }
    }

    #[inline]
    fn slot(&self, a: usize, b: usize) -> usize {
        a.min(b) * self.width + a.max(b)
    }

    /// Tries to give `v` colour `c` given the colours of `0..v`; on success
    /// records the new class-pair edges and returns true.
    fn place(&mut self, v: usize, c: usize) -> bool {
        let lower = (1u64 << v) - 1;
        let m = self.m;
        let mut red_classes = 0u128;
        let mut blue_classes = 0u128;
        for u in bits(m.shadow_mask(v) & lower) {
            if self.colour[u] == c {
                return false;
            }
        }
        for u in bits(m.red_mask(v) & lower) {
            let cu = self.colour[u];
            if self.blue[self.slot(cu, c)] > 0 {
                return false;
            }
            red_classes |= 1 << cu;
        }
        for u in bits(m.blue_mask(v) & lower) {
            let cu = self.colour[u];
            if self.red[self.slot(cu, c)] > 0 {
                return false;
            }
            blue_classes |= 1 << cu;
        }
        if red_classes & blue_classes != 0 {
            return false;
        }
        self.colour[v] = c;
        self.adjust(v, true);
        true
    }

    fn unplace(&mut self, v: usize) {
        self.adjust(v, false);
        self.colour[v] = usize::MAX;
    }

    fn adjust(&mut self, v: usize, up: bool) {
        let lower = (1u64 << v) - 1;
        let c = self.colour[v];
        for u in bits(self.m.red_mask(v) & lower) {
            let s = self.slot(self.colour[u], c);
            if up {
                self.red[s] += 1
            } else {
                self.red[s] -= 1
            }
        }
        for u in bits(self.m.blue_mask(v) & lower) {
            let s = self.slot(self.colour[u], c);
            if up {
                self.blue[s] += 1
            } else {
                self.blue[s] -= 1
            }
        }
    }
}

/// Number of `k`-colourings of `m`.
///
/// Panics if `k` exceeds [`MAX_COLOURS`].
pub fn count_colourings(m: &MixedGraph, k: usize) -> u64 {
    assert!(k <= MAX_COLOURS, "at most {MAX_COLOURS} colours supported");
    let n = m.n();
    if n == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    fn walk(cls: &mut Classes, v: usize, k: usize) -> u64 {
        if v == cls.m.n() {
            return 1;
        }
        let mut total = 0;
        for c in 0..k {
            if cls.place(v, c) {
                total += walk(cls, v + 1, k);
                cls.unplace(v);
            }
        }
        total
    }
    // All colours are interchangeable, so fix vertex 0 and scale by k.
    let mut cls = Classes::new(m, k);
    cls.place(0, 0);
    k as u64 * walk(&mut cls, 1, k)
}

/// Interpolates the colouring counts at `k = 0..=n`.
pub fn poly_interpolated(m: &MixedGraph) -> Result<IntPolynomial, EngineError> {
    let values: Vec<BigInt> = (0..=m.n())
        .map(|k| BigInt::from(count_colourings(m, k)))
        .collect();
    Ok(IntPolynomial::interpolate(&values)?)
}

/// `sum_k counts[k] * x(x-1)...(x-k+1)`.
pub fn from_falling_counts(counts: &[u128]) -> IntPolynomial {
    counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| IntPolynomial::falling_factorial(k).scale(&BigInt::from(c)))
        .sum()
}

/// `N_k` for `k = 0..=n`: partitions of the vertex set into `k` independent
/// blocks with no block pair joined by both a red and a blue edge.
pub fn partition_counts(m: &MixedGraph) -> Vec<u128> {
    let n = m.n();
    let mut counts = vec![0u128; n + 1];
    if n == 0 {
        counts[0] = 1;
        return counts;
    }
    fn walk(cls: &mut Classes, v: usize, blocks: usize, counts: &mut [u128]) {
        if v == cls.m.n() {
            counts[blocks] += 1;
            return;
        }
        for b in 0..=blocks {
            if cls.place(v, b) {
                walk(cls, v + 1, blocks.max(b + 1), counts);
                cls.unplace(v);
            }
        }
    }
    let mut cls = Classes::new(m, n);
    cls.place(0, 0);
    walk(&mut cls, 1, 1, &mut counts);
    counts
}

/// Partitions are visited in restricted-growth order, pruning a prefix as
/// soon as it violates a constraint.
pub fn poly_partition(m: &MixedGraph) -> IntPolynomial {
    from_falling_counts(&partition_counts(m))
}

/// Least `k` admitting a `k`-colouring; 0 for the empty graph.
pub fn chromatic_number(m: &MixedGraph) -> usize {
    fn exists(cls: &mut Classes, v: usize, blocks: usize, cap: usize) -> bool {
        if v == cls.m.n() {
            return true;
        }
        for b in 0..=blocks.min(cap - 1) {
            if cls.place(v, b) {
                let found = exists(cls, v + 1, blocks.max(b + 1), cap);
                cls.unplace(v);
                if found {
                    return true;
                }
            }
        }
        false
    }
    let n = m.n();
    if n == 0 {
        return 0;
    }
    (1..=n)
        .find(|&cap| {
            let mut cls = Classes::new(m, n);
            cls.place(0, 0);
            exists(&mut cls, 1, 1, cap)
        })
        .expect("the discrete partition is always valid")
}

/// Pairs the recurrence may split on: distinct, non-adjacent and not a
/// bichromatic pair.
pub fn legal_pairs(m: &MixedGraph) -> Vec<(usize, usize)> {
    let n = m.n();
    let pp = m.ppair_masks();
    let mut out = Vec::new();
    for x in 0..n {
        let blocked = m.shadow_mask(x) | pp[x] | (1 << x);
        for y in bits(!blocked & full_mask(n) & !((1u64 << x) - 1)) {
            out.push((x, y));
        }
    }
    out
}

/// Memoisation policy for [`RecursiveEngine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Cache {
    #[default]
    Off,
    /// Keyed on the graph as labelled.
    Labelled,
    /// Keyed on the canonical relabelling; graphs above
    /// [`CANONICAL_CACHE_LIMIT`] vertices fall back to labelled keys.
    Canonical,
}

pub const CANONICAL_CACHE_LIMIT: usize = 8;

/// The add-edge/identify recurrence. Each leaf of the recursion is a graph
/// on `k` vertices contributing one falling factorial of degree `k`, so the
/// recursion only counts leaves per `k` and builds the polynomial once.
#[derive(Debug, Default)]
pub struct RecursiveEngine {
    cache: Cache,
    memo: HashMap<MixedGraph, Vec<u128>>,
}

impl RecursiveEngine {
    pub fn new(cache: Cache) -> Self {
        RecursiveEngine {
            cache,
            memo: HashMap::new(),
        }
    }

    pub fn poly(&mut self, m: &MixedGraph) -> IntPolynomial {
        from_falling_counts(&self.leaf_counts(m))
    }

    pub fn leaf_counts(&mut self, m: &MixedGraph) -> Vec<u128> {
        let key = match self.cache {
            Cache::Off => None,
            Cache::Canonical if m.n() <= CANONICAL_CACHE_LIMIT => Some(canonical_mixed(m)),
            _ => Some(m.clone()),
        };
        if let Some(hit) = key.as_ref().and_then(|k| self.memo.get(k)) {
            return hit.clone();
        }
        let counts = match choose_pair(m) {
            None => {
                let mut c = vec![0u128; m.n() + 1];
                c[m.n()] = 1;
                c
            }
            Some((x, y)) => {
                let joined = m.add_flexible(x, y).expect("legal pair is non-adjacent");
                let merged = m.identify(x, y).expect("legal pair identifies cleanly");
                let mut c = self.leaf_counts(&joined);
                for (slot, v) in c.iter_mut().zip(self.leaf_counts(&merged)) {
                    *slot += v;
                }
                c
            }
        };
        if let Some(k) = key {
            self.memo.insert(k, counts.clone());
        }
        counts
    }
}

/// Legal pair with the most common shadow neighbours (first in
/// lexicographic order on ties); `None` when the base case applies.
fn choose_pair(m: &MixedGraph) -> Option<(usize, usize)> {
    let n = m.n();
    let pp = m.ppair_masks();
    let mut best: Option<((usize, usize), u32)> = None;
    for x in 0..n {
        let sx = m.shadow_mask(x);
        let free = !(sx | pp[x]) & full_mask(n) & !((1u64 << x << 1).wrapping_sub(1));
        for y in bits(free) {
            let common = (sx & m.shadow_mask(y)).count_ones();
            if best.is_none_or(|(_, c)| common > c) {
                best = Some(((x, y), common));
            }
        }
    }
    best.map(|(p, _)| p)
}

pub fn poly_recursive(m: &MixedGraph) -> IntPolynomial {
    RecursiveEngine::new(Cache::Off).poly(m)
}

/// `P(M + xy) + P(M_xy)` for a caller-chosen legal pair.
pub fn split_on(m: &MixedGraph, x: usize, y: usize) -> Result<IntPolynomial, crate::GraphError> {
    let merged = m.identify(x, y)?;
    let joined = m.add_flexible(x, y)?;
    Ok(poly_recursive(&joined) + poly_recursive(&merged))
}

/// Ordinary chromatic polynomial by deletion-contraction, memoised on the
/// labelled adjacency.
pub fn classical_chromatic(g: &SimpleGraph) -> IntPolynomial {
    fn go(g: &SimpleGraph, memo: &mut HashMap<SimpleGraph, IntPolynomial>) -> IntPolynomial {
        let n = g.n();
        let Some((u, v)) = g.edges().next() else {
            let mut c = vec![BigInt::from(0); n + 1];
            c[n] = BigInt::from(1);
            return IntPolynomial::new(c);
        };
        if g.is_complete() {
            return IntPolynomial::falling_factorial(n);
        }
        if let Some(p) = memo.get(g) {
            return p.clone();
        }
        let p = go(&g.without_edge(u, v), memo) - go(&g.contract(u, v), memo);
        memo.insert(g.clone(), p.clone());
        p
    }
    go(g, &mut HashMap::new())
}

fn choose2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// `-(|R| + |B| + |F| + |P|)`, the claimed coefficient of `x^(n-1)`.
pub fn coeff_formula_second(m: &MixedGraph) -> Result<i64, EngineError> {
    if m.n() < 1 {
        return Err(EngineError::TooFewVertices {
            needed: 1,
            n: m.n(),
        });
    }
    let c = m.census();
    Ok(-((c.red_count + c.blue_count + c.flex_count + c.ppair_count) as i64))
}

/// `C(|R| + |B| + |P| + |F|, 2) - |T| - |P| - |O|`, the claimed coefficient
/// of `x^(n-2)`. This is the published formula taken at face value; it is
/// known to disagree with the true coefficient on some graphs (the
/// bichromatic 2K2 among them), which [`audit_coefficients`] reports.
pub fn coeff_formula_third(m: &MixedGraph) -> Result<i64, EngineError> {
    if m.n() < 2 {
        return Err(EngineError::TooFewVertices {
            needed: 2,
            n: m.n(),
        });
    }
    let c = m.census();
    let edges_and_pairs = (c.red_count + c.blue_count + c.ppair_count + c.flex_count) as i64;
    Ok(choose2(edges_and_pairs)
        - c.triangle_count as i64
        - c.ppair_count as i64
        - c.obstruct_count as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoefficientAudit {
    pub formula_second: i64,
    pub true_second: i64,
    pub formula_third: i64,
    pub true_third: i64,
    pub agrees_second: bool,
    pub agrees_third: bool,
}

/// Compares both coefficient formulas with the interpolated polynomial.
pub fn audit_coefficients(m: &MixedGraph) -> Result<CoefficientAudit, EngineError> {
    let p = poly_interpolated(m)?;
    audit_against(m, &p)
}

/// As [`audit_coefficients`] with a polynomial already in hand.
pub fn audit_against(m: &MixedGraph, p: &IntPolynomial) -> Result<CoefficientAudit, EngineError> {
    let n = m.n();
    let formula_second = coeff_formula_second(m)?;
    let formula_third = coeff_formula_third(m)?;
    let true_second = p.coeff(n - 1).to_i64().expect("coefficient fits in i64");
    let true_third = p.coeff(n - 2).to_i64().expect("coefficient fits in i64");
    Ok(CoefficientAudit {
        formula_second,
        true_second,
        formula_third,
        true_third,
        agrees_second: formula_second == true_second,
        agrees_third: formula_third == true_third,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::EdgeKind::{self, *};
    use crate::partitions::{block_count, RestrictedGrowth};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn every_mixed_graph(n: usize) -> impl Iterator<Item = MixedGraph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        (0..4u64.pow(pairs.len() as u32)).map(move |mut code| {
            let mut m = MixedGraph::new(n);
            for &(u, v) in &pairs {
                let c = (code % 4) as usize;
                code /= 4;
                if c < 3 {
                    m.add_edge(u, v, EdgeKind::ALL[c]).unwrap();
                }
            }
            m
        })
    }

    /// Unpruned reference: checks every set partition in full.
    fn partition_reference(m: &MixedGraph) -> IntPolynomial {
        let mut counts = vec![0u128; m.n() + 1];
        for rgs in RestrictedGrowth::new(m.n()) {
            let ok = m.edges().all(|(u, v, _)| rgs[u] != rgs[v])
                && m.edges().all(|(a, b, ka)| {
                    m.edges().all(|(c, d, kb)| {
                        let same = (rgs[a].min(rgs[b]), rgs[a].max(rgs[b]))
                            == (rgs[c].min(rgs[d]), rgs[c].max(rgs[d]));
                        !(same && ka == Red && kb == Blue)
                    })
                });
            if ok {
                counts[block_count(&rgs)] += 1;
            }
        }
        if m.n() == 0 {
            counts[0] = 1;
        }
        from_falling_counts(&counts)
    }

    #[test]
    fn colouring_counts() {
        assert_eq!(count_colourings(&two_k2(), 2), 0);
        assert_eq!(count_colourings(&two_k2(), 3), 24);
        assert_eq!(count_colourings(&two_k2(), 0), 0);
        assert_eq!(count_colourings(&MixedGraph::new(0), 0), 1);
        assert_eq!(count_colourings(&two_path(), 3), 6);
        // the blue edge may not reuse the red edge's colour pair in either order
        assert_eq!(count_colourings(&two_k2(), 4), 4 * 3 * (4 * 3 - 2));
    }

    #[test]
    fn interpolated_examples() {
        assert_eq!(poly_interpolated(&two_path()).unwrap(), p(&[0, 2, -3, 1]));
        assert_eq!(
            poly_interpolated(&mono_clique(3, Red)).unwrap(),
            p(&[0, 2, -3, 1])
        );
        assert_eq!(poly_interpolated(&two_k2()).unwrap(), p(&[0, 2, -1, -2, 1]));
        assert_eq!(
            poly_interpolated(&MixedGraph::new(0)).unwrap(),
            IntPolynomial::one()
        );
    }

    #[test]
    fn recursive_examples() {
        assert_eq!(
            poly_recursive(&k4_red_matching()),
            IntPolynomial::falling_factorial(4)
        );
        assert_eq!(poly_recursive(&two_k2()), p(&[0, 2, -1, -2, 1]));
        assert_eq!(poly_recursive(&MixedGraph::new(2)), p(&[0, 0, 1]));
        assert_eq!(poly_recursive(&MixedGraph::new(0)), IntPolynomial::one());
        // the hand trace: split on {0, 2}
        let left = p(&[0, 0, 2, -3, 1]);
        let right = p(&[0, 2, -3, 1]);
        assert_eq!(split_on(&two_k2(), 0, 2).unwrap(), left + right);
    }

    #[test]
    fn partition_examples() {
        assert_eq!(partition_counts(&two_path()), vec![0, 0, 0, 1]);
        assert_eq!(poly_partition(&g(2, &[(0, 1, Flexible)])), p(&[0, -1, 1]));
        // Both 2-block partitions put the red and the blue edge across one block pair.
        assert_eq!(partition_counts(&two_k2()), vec![0, 0, 0, 4, 1]);
        assert_eq!(poly_partition(&two_k2()), p(&[0, 2, -1, -2, 1]));
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&two_path()), 3);
        assert_eq!(chromatic_number(&two_k2()), 3);
        assert_eq!(chromatic_number(&MixedGraph::new(5)), 1);
        assert_eq!(chromatic_number(&MixedGraph::new(0)), 0);
        assert_eq!(chromatic_number(&mono_clique(4, Blue)), 4);
    }

    #[test]
    fn classical_examples() {
        assert_eq!(
            classical_chromatic(&SimpleGraph::complete(3)),
            p(&[0, 2, -3, 1])
        );
        assert_eq!(classical_chromatic(&cycle(4)), p(&[0, -3, 6, -4, 1]));
        assert_eq!(classical_chromatic(&SimpleGraph::new(1)), p(&[0, 1]));
        assert_eq!(
            classical_chromatic(&SimpleGraph::new(0)),
            IntPolynomial::one()
        );
        let petersen_like = cycle(5).complement();
        assert_eq!(
            classical_chromatic(&petersen_like),
            classical_chromatic(&cycle(5))
        );
    }

    #[test]
    fn formula_examples() {
        assert_eq!(coeff_formula_second(&two_path()), Ok(-3));
        assert_eq!(coeff_formula_second(&mono_clique(5, Red)), Ok(-10));
        assert_eq!(coeff_formula_second(&MixedGraph::new(3)), Ok(0));
        assert!(coeff_formula_second(&MixedGraph::new(0)).is_err());
        for n in 2..7 {
            let e = (n * (n - 1) / 2) as i64;
            let t = (n * (n - 1) * (n - 2) / 6) as i64;
            assert_eq!(
                coeff_formula_third(&mono_clique(n, Blue)),
                Ok(choose2(e) - t)
            );
        }
        assert_eq!(coeff_formula_third(&p4_mixed()), Ok(2));
        assert_eq!(coeff_formula_third(&two_k2()), Ok(0));
        assert_eq!(
            coeff_formula_third(&MixedGraph::new(1)),
            Err(EngineError::TooFewVertices { needed: 2, n: 1 })
        );
    }

    #[test]
    fn audits() {
        let a = audit_coefficients(&two_path()).unwrap();
        assert!(a.agrees_second && a.agrees_third);
        assert_eq!((a.true_second, a.true_third), (-3, 2));
        let a = audit_coefficients(&two_k2()).unwrap();
        assert!(a.agrees_second && !a.agrees_third);
        assert_eq!((a.formula_third, a.true_third), (0, -1));
        let a = audit_coefficients(&mono_clique(4, Red)).unwrap();
        assert!(a.agrees_second && a.agrees_third);
        let a = audit_coefficients(&double_witness_c4()).unwrap();
        assert_eq!((a.formula_second, a.true_second), (-5, -5));
        assert_eq!((a.formula_third, a.true_third), (9, 8));
        assert_eq!(audit_coefficients(&p4_mixed()).unwrap().true_third, 2);
    }

    #[test]
    fn engines_agree_on_every_small_graph() {
        for n in 0..=4 {
            for m in every_mixed_graph(n) {
                let reference = poly_interpolated(&m).unwrap();
                assert_eq!(poly_recursive(&m), reference, "{m:?}");
                assert_eq!(poly_partition(&m), reference, "{m:?}");
                if n <= 3 {
                    assert_eq!(partition_reference(&m), reference, "{m:?}");
                }
            }
        }
    }

    #[test]
    fn split_choice_does_not_matter() {
        for n in 2..=4 {
            for m in every_mixed_graph(n) {
                let reference = poly_recursive(&m);
                for (x, y) in legal_pairs(&m) {
                    assert_eq!(split_on(&m, x, y).unwrap(), reference, "{m:?} on {x},{y}");
                }
            }
        }
    }

    #[test]
    fn caches_do_not_change_results() {
        for m in every_mixed_graph(4).step_by(7) {
            let plain = poly_recursive(&m);
            assert_eq!(RecursiveEngine::new(Cache::Labelled).poly(&m), plain);
            assert_eq!(RecursiveEngine::new(Cache::Canonical).poly(&m), plain);
        }
        let mut shared = RecursiveEngine::new(Cache::Canonical);
        for m in every_mixed_graph(3) {
            assert_eq!(shared.poly(&m), poly_recursive(&m));
        }
    }

    #[test]
    fn legal_pairs_exclude_adjacent_and_bichromatic() {
        assert_eq!(legal_pairs(&two_path()), vec![]);
        assert_eq!(legal_pairs(&two_k2()), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(
            legal_pairs(&MixedGraph::new(3)),
            vec![(0, 1), (0, 2), (1, 2)]
        );
    }

    mod props {
        use super::*;
        use crate::graph::props::arb_mixed;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]

            #[test]
            fn degree_monic_no_constant(m in arb_mixed(6)) {
                let p = poly_recursive(&m);
                prop_assert_eq!(p.degree(), Some(m.n()));
                prop_assert!(p.is_monic());
                prop_assert_eq!(p.coeff(0), BigInt::from(0));
            }

            #[test]
            fn second_coefficient_formula(m in arb_mixed(6)) {
                let p = poly_partition(&m);
                prop_assert_eq!(
                    coeff_formula_second(&m).unwrap(),
                    p.coeff(m.n() - 1).to_i64().unwrap()
                );
            }

            #[test]
            fn colour_swap_invariance(m in arb_mixed(6)) {
                prop_assert_eq!(poly_recursive(&m.colour_swap()), poly_recursive(&m));
            }

            #[test]
            fn monochromatic_reduction(m in arb_mixed(6), kind in 0usize..3) {
                let mono = MixedGraph::from_simple(&m.shadow(), EdgeKind::ALL[kind]);
                prop_assert_eq!(poly_recursive(&mono), classical_chromatic(&m.shadow()));
            }

            #[test]
            fn classical_dominates(m in arb_mixed(6)) {
                let coloured = MixedGraph::from_edges(
                    m.n(),
                    m.edges().map(|(u, v, k)| (u, v, if k == Flexible { Red } else { k })),
                ).unwrap();
                let classical = classical_chromatic(&coloured.shadow());
                for k in 0..=m.n() + 2 {
                    prop_assert!(classical.eval_i64(k as i64) >= BigInt::from(count_colourings(&coloured, k)));
                }
            }

            #[test]
            fn chromatic_number_is_first_positive_count(m in arb_mixed(6)) {
                let chi = chromatic_number(&m);
                if m.n() > 0 {
                    prop_assert!(count_colourings(&m, chi) > 0);
                    prop_assert_eq!(count_colourings(&m, chi - 1), 0);
                }
            }
        }
    }
}
