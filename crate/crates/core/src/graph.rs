//! Mixed 2-edge-coloured graphs and the structural queries the engines and
//! coefficient formulas are built on.
//!
//! A [`MixedGraph`] has vertices `0..n` and at most one edge per unordered
//! pair, tagged [`EdgeKind::Red`], [`EdgeKind::Blue`] or
//! [`EdgeKind::Flexible`]. Flexible edges only force their ends apart; the
//! coloured edges additionally take part in the red/blue clash condition.
//!
//! Adjacency is stored as one `u64` bitmask per vertex and per kind, which
//! caps graphs at [`MAX_VERTICES`] vertices. Everything here is exponential
//! well before that.
//!
//! # Bichromatic pairs
//!
//! The set returned by [`MixedGraph::bichromatic_pairs`] counts *pairs* of
//! vertices, not paths: two non-adjacent vertices `x`, `y` with a common
//! neighbour `u` such that `xu` is red and `uy` is blue contribute one
//! element no matter how many such centres exist. Non-adjacency is taken in
//! the shadow, so a flexible edge between `x` and `y` removes the pair. This
//! is the reading under which the second-coefficient formula holds (a
//! 4-cycle with two witnessing centres is the smallest instance that tells
//! the readings apart).

use std::fmt;

use thiserror::Error;

/// Largest vertex count representable by the bitmask adjacency.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    SameVertex(usize),
    #[error("vertices {0} and {1} are already adjacent")]
    AlreadyAdjacent(usize, usize),
    #[error("cannot identify {0} and {1}: they are adjacent or the ends of a bichromatic 2-path")]
    IllegalPair(usize, usize),
    #[error("identifying {x} and {y} would place a red and a blue edge on the pair with {w}")]
    ColourClash { x: usize, y: usize, w: usize },
    #[error("graph on {0} vertices exceeds the {MAX_VERTICES}-vertex limit")]
    TooManyVertices(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Red,
    Blue,
    Flexible,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 3] = [EdgeKind::Red, EdgeKind::Blue, EdgeKind::Flexible];

    pub fn is_coloured(self) -> bool {
        !matches!(self, EdgeKind::Flexible)
    }

    /// Red and blue exchanged, flexible fixed.
    pub fn swapped(self) -> EdgeKind {
        match self {
            EdgeKind::Red => EdgeKind::Blue,
            EdgeKind::Blue => EdgeKind::Red,
            EdgeKind::Flexible => EdgeKind::Flexible,
        }
    }

    pub fn letter(self) -> char {
        match self {
            EdgeKind::Red => 'R',
            EdgeKind::Blue => 'B',
            EdgeKind::Flexible => 'F',
        }
    }

    pub fn from_letter(c: char) -> Option<EdgeKind> {
        match c {
            'R' => Some(EdgeKind::Red),
            'B' => Some(EdgeKind::Blue),
            'F' => Some(EdgeKind::Flexible),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            EdgeKind::Red => "red",
            EdgeKind::Blue => "blue",
            EdgeKind::Flexible => "flexible",
        };
        f.write_str(name)
    }
}

#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Order-preserving compaction of a bitmask that drops bit `gone`.
#[inline]
pub(crate) fn drop_bit(mask: u64, gone: usize) -> u64 {
    let low = mask & ((1u64 << gone) - 1);
    let high = if gone + 1 >= 64 {
        0
    } else {
        mask >> (gone + 1)
    };
    low | (high << gone)
}

/// Order-preserving compaction of `mask` onto the positions selected by `keep`.
#[inline]
pub(crate) fn compact(mask: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    for (slot, v) in bits(keep).enumerate() {
        if mask >> v & 1 == 1 {
            out |= 1 << slot;
        }
    }
    out
}

/// A loop-free simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`].
    pub fn new(n: usize) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "graph on {n} vertices exceeds {MAX_VERTICES}"
        );
        SimpleGraph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            g.adj[u] = full_mask(n) & !(1 << u);
        }
        g
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = SimpleGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_masks(adj: Vec<u64>) -> Self {
        SimpleGraph { n: adj.len(), adj }
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    pub fn complement(&self) -> SimpleGraph {
        let all = full_mask(self.n);
        let adj = (0..self.n)
            .map(|u| !self.adj[u] & all & !(1 << u))
            .collect();
        SimpleGraph { n: self.n, adj }
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected components as vertex masks, ordered by least vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_masks().len() == 1
    }

    /// Number of 3-cliques.
    pub fn triangle_count(&self) -> usize {
        let mut count = 0;
        for u in 0..self.n {
            let higher = self.adj[u] & !full_mask(u + 1);
            for v in bits(higher) {
                count += (self.adj[v] & higher & !full_mask(v + 1)).count_ones() as usize;
            }
        }
        count
    }

    /// Factors of the join decomposition: the vertex sets of the connected
    /// components of the complement. A single factor means the graph is not
    /// a join.
    pub fn join_factors(&self) -> Vec<Vec<usize>> {
        self.complement()
            .component_masks()
            .into_iter()
            .map(|m| bits(m).collect())
            .collect()
    }

    /// Induced subgraph on the vertices of `keep`, compacted in order.
    pub fn induced_mask(&self, keep: u64) -> SimpleGraph {
        let adj = bits(keep).map(|v| compact(self.adj[v], keep)).collect();
        SimpleGraph::from_masks(adj)
    }

    /// True if some vertex of `side` has no neighbour inside `side`.
    pub fn has_isolated_in(&self, side: u64) -> bool {
        bits(side).any(|v| self.adj[v] & side == 0)
    }

    /// Relabelled copy: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> SimpleGraph {
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g
    }

    /// `u` and `v` merged into `min(u, v)`'s slot, parallel edges collapsed
    /// and any edge between them dropped; higher vertices shift down.
    pub fn contract(&self, u: usize, v: usize) -> SimpleGraph {
        let (keep, gone) = (u.min(v), u.max(v));
        let mut adj = self.adj.clone();
        adj[keep] |= adj[gone];
        for (w, mask) in adj.iter_mut().enumerate() {
            if w != keep && *mask >> gone & 1 == 1 {
                *mask |= 1 << keep;
            }
        }
        adj[keep] &= !(1 << keep) & !(1 << gone);
        adj.remove(gone);
        SimpleGraph::from_masks(adj.into_iter().map(|m| drop_bit(m, gone)).collect())
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph({}; ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Edge counts feeding the coefficient formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct StructuralCensus {
    pub red_count: usize,
    pub blue_count: usize,
    pub flex_count: usize,
    /// Bichromatic 2-path end pairs (pair semantics).
    pub ppair_count: usize,
    /// 3-cliques of the shadow.
    pub triangle_count: usize,
    /// Obstructing (red, blue) edge pairs.
    pub obstruct_count: usize,
}

impl StructuralCensus {
    pub fn shadow_edges(&self) -> usize {
        self.red_count + self.blue_count + self.flex_count
    }
}

impl fmt::Display for StructuralCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "red={} blue={} flexible={} bichromatic_pairs={} triangles={} obstructing={}",
            self.red_count,
            self.blue_count,
            self.flex_count,
            self.ppair_count,
            self.triangle_count,
            self.obstruct_count
        )
    }
}

/// A red edge paired with a blue edge, each as `(low, high)`.
pub type EdgePair = ((usize, usize), (usize, usize));

/// Mixed 2-edge-coloured graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    n: usize,
    red: Vec<u64>,
    blue: Vec<u64>,
    flex: Vec<u64>,
}

impl MixedGraph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`].
    pub fn new(n: usize) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "graph on {n} vertices exceeds {MAX_VERTICES}"
        );
        MixedGraph {
            n,
            red: vec![0; n],
            blue: vec![0; n],
            flex: vec![0; n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, EdgeKind)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = MixedGraph::new(n);
        for (u, v, kind) in edges {
            g.add_edge(u, v, kind)?;
        }
        Ok(g)
    }

    /// Every edge of `g` with the same kind.
    pub fn from_simple(g: &SimpleGraph, kind: EdgeKind) -> Self {
        let mut m = MixedGraph::new(g.n());
        for (u, v) in g.edges() {
            m.put(u, v, kind);
        }
        m
    }

    /// Inserts a new edge. Fails on loops, out-of-range endpoints and pairs
    /// that already carry an edge.
    pub fn add_edge(&mut self, u: usize, v: usize, kind: EdgeKind) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        if self.adjacent(u, v) {
            return Err(GraphError::AlreadyAdjacent(u.min(v), u.max(v)));
        }
        self.put(u, v, kind);
        Ok(())
    }

    #[inline]
    pub(crate) fn put(&mut self, u: usize, v: usize, kind: EdgeKind) {
        let masks = match kind {
            EdgeKind::Red => &mut self.red,
            EdgeKind::Blue => &mut self.blue,
            EdgeKind::Flexible => &mut self.flex,
        };
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self, u: usize, v: usize) -> Option<EdgeKind> {
        if u >= self.n || v >= self.n {
            return None;
        }
        if self.red[u] >> v & 1 == 1 {
            Some(EdgeKind::Red)
        } else if self.blue[u] >> v & 1 == 1 {
            Some(EdgeKind::Blue)
        } else if self.flex[u] >> v & 1 == 1 {
            Some(EdgeKind::Flexible)
        } else {
            None
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.shadow_mask(u) >> v & 1 == 1
    }

    #[inline]
    pub fn red_mask(&self, v: usize) -> u64 {
        self.red[v]
    }

    #[inline]
    pub fn blue_mask(&self, v: usize) -> u64 {
        self.blue[v]
    }

    #[inline]
    pub fn flex_mask(&self, v: usize) -> u64 {
        self.flex[v]
    }

    #[inline]
    pub fn shadow_mask(&self, v: usize) -> u64 {
        self.red[v] | self.blue[v] | self.flex[v]
    }

    /// Edges `(u, v, kind)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeKind)> + '_ {
        (0..self.n).flat_map(move |u| {
            bits(self.shadow_mask(u) >> u >> 1).map(move |d| {
                let v = u + 1 + d;
                (u, v, self.kind(u, v).expect("edge present"))
            })
        })
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n)
            .map(|v| self.shadow_mask(v).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn count_kind(&self, kind: EdgeKind) -> usize {
        let masks = match kind {
            EdgeKind::Red => &self.red,
            EdgeKind::Blue => &self.blue,
            EdgeKind::Flexible => &self.flex,
        };
        masks.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_flexible(&self) -> bool {
        self.flex.iter().any(|&m| m != 0)
    }

    /// First flexible edge, if any.
    pub fn first_flexible(&self) -> Option<(usize, usize)> {
        self.edges()
            .find(|e| e.2 == EdgeKind::Flexible)
            .map(|(u, v, _)| (u, v))
    }

    /// Both colour classes non-empty.
    pub fn is_bichromatic(&self) -> bool {
        self.red.iter().any(|&m| m != 0) && self.blue.iter().any(|&m| m != 0)
    }

    pub fn shadow(&self) -> SimpleGraph {
        SimpleGraph::from_masks((0..self.n).map(|v| self.shadow_mask(v)).collect())
    }

    /// For each vertex `x`, the mask of vertices `y` such that `{x, y}` is a
    /// bichromatic pair.
    pub(crate) fn ppair_masks(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.n];
        for u in 0..self.n {
            let (r, b) = (self.red[u], self.blue[u]);
            if r == 0 || b == 0 {
                continue;
            }
            for x in bits(r) {
                out[x] |= b;
            }
            for y in bits(b) {
                out[y] |= r;
            }
        }
        for (x, m) in out.iter_mut().enumerate() {
            *m &= !self.shadow_mask(x) & !(1 << x);
        }
        out
    }

    /// Unordered pairs `(x, y)`, `x < y`, non-adjacent in the shadow with a
    /// common neighbour joined to one by a red edge and to the other by a
    /// blue edge. Sorted.
    pub fn bichromatic_pairs(&self) -> Vec<(usize, usize)> {
        let masks = self.ppair_masks();
        (0..self.n)
            .flat_map(|x| bits(masks[x] >> x >> 1).map(move |d| (x, x + 1 + d)))
            .collect()
    }

    /// Shadow plus one edge per bichromatic pair.
    pub fn closure_graph(&self) -> SimpleGraph {
        let p = self.ppair_masks();
        SimpleGraph::from_masks((0..self.n).map(|v| self.shadow_mask(v) | p[v]).collect())
    }

    /// Pairs (red edge, blue edge) on four distinct vertices whose four
    /// endpoints induce a bipartite subgraph of the closure graph. A 4-vertex
    /// graph containing an edge is 2-chromatic iff it has no triangle.
    pub fn obstructing_pairs(&self) -> Vec<EdgePair> {
        let closure = self.closure_graph();
        let reds: Vec<_> = self.edges().filter(|e| e.2 == EdgeKind::Red).collect();
        let blues: Vec<_> = self.edges().filter(|e| e.2 == EdgeKind::Blue).collect();
        let mut out = Vec::new();
        for &(a, b, _) in &reds {
            for &(c, d, _) in &blues {
                let quad = (1u64 << a) | (1 << b) | (1 << c) | (1 << d);
                if quad.count_ones() != 4 {
                    continue;
                }
                if closure.induced_mask(quad).triangle_count() == 0 {
                    out.push(((a, b), (c, d)));
                }
            }
        }
        out
    }

    pub fn census(&self) -> StructuralCensus {
        StructuralCensus {
            red_count: self.count_kind(EdgeKind::Red),
            blue_count: self.count_kind(EdgeKind::Blue),
            flex_count: self.count_kind(EdgeKind::Flexible),
            ppair_count: self.bichromatic_pairs().len(),
            triangle_count: self.shadow().triangle_count(),
            obstruct_count: self.obstructing_pairs().len(),
        }
    }

    /// `M + xy`: the pair `{x, y}` gains a flexible edge.
    pub fn add_flexible(&self, x: usize, y: usize) -> Result<MixedGraph, GraphError> {
        let mut out = self.clone();
        out.add_edge(x, y, EdgeKind::Flexible)?;
        Ok(out)
    }

    /// True when `{x, y}` may be split on by the add-edge/identify
    /// recurrence: distinct, non-adjacent, and not a bichromatic pair.
    pub fn is_legal_pair(&self, x: usize, y: usize) -> bool {
        x != y && x < self.n && y < self.n && !self.adjacent(x, y) && !self.is_ppair(x, y)
    }

    fn is_ppair(&self, x: usize, y: usize) -> bool {
        (self.red[x] & self.blue[y]) != 0 || (self.blue[x] & self.red[y]) != 0
    }

    /// `M_xy`: `x` and `y` merged into one vertex occupying `min(x, y)`'s
    /// slot; higher vertices shift down by one. Parallel edges of equal kind
    /// collapse, and a coloured edge absorbs a parallel flexible edge.
    pub fn identify(&self, x: usize, y: usize) -> Result<MixedGraph, GraphError> {
        for w in [x, y] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if x == y {
            return Err(GraphError::SameVertex(x));
        }
        if !self.is_legal_pair(x, y) {
            return Err(GraphError::IllegalPair(x.min(y), x.max(y)));
        }
        let (keep, gone) = (x.min(y), x.max(y));
        let clash = (self.red[keep] | self.red[gone]) & (self.blue[keep] | self.blue[gone]);
        if clash != 0 {
            let w = clash.trailing_zeros() as usize;
            return Err(GraphError::ColourClash {
                x: keep,
                y: gone,
                w,
            });
        }
        let merge = |masks: &[u64]| -> Vec<u64> {
            let mut m = masks.to_vec();
            m[keep] |= m[gone];
            for (v, mask) in m.iter_mut().enumerate() {
                if v != keep && *mask >> gone & 1 == 1 {
                    *mask |= 1 << keep;
                }
            }
            m.remove(gone);
            m.iter().map(|&mask| drop_bit(mask, gone)).collect()
        };
        let red = merge(&self.red);
        let blue = merge(&self.blue);
        let mut flex = merge(&self.flex);
        for (v, f) in flex.iter_mut().enumerate() {
            *f &= !(red[v] | blue[v]);
        }
        Ok(MixedGraph {
            n: self.n - 1,
            red,
            blue,
            flex,
        })
    }

    /// Red and blue exchanged.
    pub fn colour_swap(&self) -> MixedGraph {
        MixedGraph {
            n: self.n,
            red: self.blue.clone(),
            blue: self.red.clone(),
            flex: self.flex.clone(),
        }
    }

    /// Induced subgraph on `vertices` (any order, duplicates ignored),
    /// relabelled in increasing order.
    ///
    /// Panics if a vertex is out of range.
    pub fn induced(&self, vertices: &[usize]) -> MixedGraph {
        let mut keep = 0u64;
        for &v in vertices {
            assert!(
                v < self.n,
                "vertex {v} out of range for a graph on {} vertices",
                self.n
            );
            keep |= 1 << v;
        }
        self.induced_mask(keep)
    }

    pub(crate) fn induced_mask(&self, keep: u64) -> MixedGraph {
        let pick = |masks: &[u64]| bits(keep).map(|v| compact(masks[v], keep)).collect();
        MixedGraph {
            n: keep.count_ones() as usize,
            red: pick(&self.red),
            blue: pick(&self.blue),
            flex: pick(&self.flex),
        }
    }

    /// Relabelled copy: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> MixedGraph {
        let mut g = MixedGraph::new(self.n);
        for (u, v, k) in self.edges() {
            g.put(perm[u], perm[v], k);
        }
        g
    }

    /// Disjoint union; `other`'s vertices follow this graph's.
    pub fn disjoint_union(&self, other: &MixedGraph) -> MixedGraph {
        let mut g = MixedGraph::new(self.n + other.n);
        for (u, v, k) in self.edges() {
            g.put(u, v, k);
        }
        for (u, v, k) in other.edges() {
            g.put(u + self.n, v + self.n, k);
        }
        g
    }
}

impl fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedGraph({}; ", self.n)?;
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v, k)| format!("{u}-{v}{}", k.letter()))
            .collect();
        write!(f, "{})", edges.join(" "))
    }
}

/// Small graphs that come up repeatedly in examples and checks.
pub mod named {
    use super::*;
    use EdgeKind::*;

    fn g(n: usize, edges: &[(usize, usize, EdgeKind)]) -> MixedGraph {
        MixedGraph::from_edges(n, edges.iter().copied()).expect("valid named graph")
    }

    /// 0-1 red, 2-3 blue.
    pub fn two_k2() -> MixedGraph {
        g(4, &[(0, 1, Red), (2, 3, Blue)])
    }

    /// 0-1 red, 1-2 blue.
    pub fn two_path() -> MixedGraph {
        g(3, &[(0, 1, Red), (1, 2, Blue)])
    }

    /// 4-cycle 0-1-3-2-0 with both bichromatic centres witnessing {0, 3}.
    pub fn double_witness_c4() -> MixedGraph {
        g(4, &[(0, 1, Red), (0, 2, Red), (1, 3, Blue), (2, 3, Blue)])
    }

    /// 0-1 red, 1-2 flexible, 2-3 blue.
    pub fn p4_mixed() -> MixedGraph {
        g(4, &[(0, 1, Red), (1, 2, Flexible), (2, 3, Blue)])
    }

    /// K4 with red perfect matching {01, 23}, the rest blue.
    pub fn k4_red_matching() -> MixedGraph {
        g(
            4,
            &[
                (0, 1, Red),
                (2, 3, Red),
                (0, 2, Blue),
                (0, 3, Blue),
                (1, 2, Blue),
                (1, 3, Blue),
            ],
        )
    }

    pub fn path(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges")
    }

    pub fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges")
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use EdgeKind::*;

    #[test]
    fn shadow_erases_kinds() {
        let s = two_k2().shadow();
        assert_eq!(s.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert_eq!(MixedGraph::new(3).shadow(), SimpleGraph::new(3));
        let tri = g(3, &[(0, 1, Red), (1, 2, Blue), (0, 2, Flexible)]).shadow();
        assert_eq!(tri, SimpleGraph::complete(3));
    }

    #[test]
    fn bichromatic_pairs_count_pairs() {
        assert_eq!(two_path().bichromatic_pairs(), vec![(0, 2)]);
        assert_eq!(double_witness_c4().bichromatic_pairs(), vec![(0, 3)]);
        assert!(mono_clique(4, Red).bichromatic_pairs().is_empty());
        let mono_path = MixedGraph::from_simple(&path(5), Blue);
        assert!(mono_path.bichromatic_pairs().is_empty());
    }

    #[test]
    fn flexible_edge_blocks_a_pair() {
        let blocked = g(3, &[(0, 1, Red), (1, 2, Blue), (0, 2, Flexible)]);
        assert!(blocked.bichromatic_pairs().is_empty());
    }

    #[test]
    fn closure_graph_examples() {
        assert_eq!(two_path().closure_graph(), SimpleGraph::complete(3));
        assert_eq!(two_k2().closure_graph(), two_k2().shadow());
        let c4 = double_witness_c4().closure_graph();
        assert_eq!(c4.edge_count(), 5);
        assert!(c4.has_edge(0, 3));
        assert!(!c4.has_edge(1, 2));
    }

    #[test]
    fn obstructing_pairs_examples() {
        assert_eq!(two_k2().obstructing_pairs(), vec![((0, 1), (2, 3))]);
        assert_eq!(p4_mixed().obstructing_pairs(), vec![((0, 1), (2, 3))]);
        assert!(two_path().obstructing_pairs().is_empty());
        assert!(double_witness_c4().obstructing_pairs().is_empty());
    }

    #[test]
    fn census_examples() {
        let c = |r, b, f, p, t, o| StructuralCensus {
            red_count: r,
            blue_count: b,
            flex_count: f,
            ppair_count: p,
            triangle_count: t,
            obstruct_count: o,
        };
        assert_eq!(two_k2().census(), c(1, 1, 0, 0, 0, 1));
        assert_eq!(mono_clique(3, Red).census(), c(3, 0, 0, 0, 1, 0));
        assert_eq!(two_path().census(), c(1, 1, 0, 1, 0, 0));
    }

    #[test]
    fn add_flexible_examples() {
        let m = two_k2().add_flexible(0, 2).unwrap();
        assert_eq!(m.kind(0, 2), Some(Flexible));
        assert_eq!(m.kind(0, 1), Some(Red));
        assert_eq!(m.kind(2, 3), Some(Blue));
        assert_eq!(m.edge_count(), 3);

        let single = MixedGraph::new(2).add_flexible(0, 1).unwrap();
        assert_eq!(single.edges().collect::<Vec<_>>(), vec![(0, 1, Flexible)]);

        assert_eq!(
            two_k2().add_flexible(1, 0),
            Err(GraphError::AlreadyAdjacent(0, 1))
        );
        assert_eq!(two_k2().add_flexible(2, 2), Err(GraphError::SameVertex(2)));
    }

    #[test]
    fn identify_examples() {
        let merged = two_k2().identify(0, 2).unwrap();
        assert_eq!(merged.n(), 3);
        assert_eq!(
            merged.edges().collect::<Vec<_>>(),
            vec![(0, 1, Red), (0, 2, Blue)]
        );

        let point = MixedGraph::new(2).identify(0, 1).unwrap();
        assert_eq!(point.n(), 1);
        assert_eq!(point.edge_count(), 0);

        assert_eq!(
            two_path().identify(0, 2),
            Err(GraphError::IllegalPair(0, 2))
        );
    }

    #[test]
    fn identify_collapses_parallel_edges() {
        // 0-2 red and 1-2 flexible: merging 0 and 1 keeps one red edge.
        let m = g(3, &[(0, 2, Red), (1, 2, Flexible)]);
        assert_eq!(
            m.identify(1, 0).unwrap().edges().collect::<Vec<_>>(),
            vec![(0, 1, Red)]
        );
        let m = g(3, &[(0, 2, Blue), (1, 2, Blue)]);
        assert_eq!(
            m.identify(0, 1).unwrap().edges().collect::<Vec<_>>(),
            vec![(0, 1, Blue)]
        );
        let m = g(4, &[(0, 1, Flexible), (1, 3, Flexible), (2, 3, Red)]);
        let merged = m.identify(0, 3).unwrap();
        assert_eq!(
            merged.edges().collect::<Vec<_>>(),
            vec![(0, 1, Flexible), (0, 2, Red)]
        );
    }

    #[test]
    fn identify_never_clashes_on_small_graphs() {
        for n in 2..=4 {
            let pairs: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for code in 0..4usize.pow(pairs.len() as u32) {
                let mut m = MixedGraph::new(n);
                let mut c = code;
                for &(u, v) in &pairs {
                    if c % 4 != 3 {
                        m.put(u, v, EdgeKind::ALL[c % 4]);
                    }
                    c /= 4;
                }
                for &(x, y) in &pairs {
                    if m.is_legal_pair(x, y) {
                        assert!(m.identify(x, y).is_ok(), "{m:?} on {x},{y}");
                    }
                }
            }
        }
    }

    #[test]
    fn join_factors_examples() {
        let c4 = cycle(4).join_factors();
        assert_eq!(c4, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(path(5).join_factors().len(), 1);
        let k6 = SimpleGraph::complete(6).join_factors();
        assert_eq!(k6, (0..6).map(|v| vec![v]).collect::<Vec<_>>());
    }

    #[test]
    fn colour_swap_examples() {
        let red = g(2, &[(0, 1, Red)]);
        assert_eq!(red.colour_swap(), g(2, &[(0, 1, Blue)]));
        let flex = MixedGraph::from_simple(&cycle(5), Flexible);
        assert_eq!(flex.colour_swap(), flex);
        assert_eq!(two_k2().colour_swap(), g(4, &[(0, 1, Blue), (2, 3, Red)]));
    }

    #[test]
    fn induced_examples() {
        let k3 = mono_clique(3, Red);
        assert_eq!(k3.induced(&[0, 1]), g(2, &[(0, 1, Red)]));
        assert_eq!(two_k2().induced(&[]), MixedGraph::new(0));
        assert_eq!(two_k2().induced(&[2, 0, 1]), g(3, &[(0, 1, Red)]));
        assert_eq!(two_k2().induced(&[1, 2, 3]), g(3, &[(1, 2, Blue)]));
    }

    #[test]
    fn add_edge_rejects_bad_input() {
        let mut m = MixedGraph::new(3);
        assert_eq!(
            m.add_edge(0, 3, Red),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(m.add_edge(1, 1, Red), Err(GraphError::SameVertex(1)));
        m.add_edge(2, 0, Blue).unwrap();
        assert_eq!(
            m.add_edge(0, 2, Red),
            Err(GraphError::AlreadyAdjacent(0, 2))
        );
        assert_eq!(m.kind(0, 2), Some(Blue));
    }

    #[test]
    fn triangle_count_matches_brute_force() {
        let k5 = SimpleGraph::complete(5);
        assert_eq!(k5.triangle_count(), 10);
        assert_eq!(cycle(4).triangle_count(), 0);
        assert_eq!(cycle(3).triangle_count(), 1);
    }
}
