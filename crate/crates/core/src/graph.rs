//! Immutable simple undirected graphs over dense vertex ids `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex, so the subset-heavy
//! solvers get cheap membership tests and set algebra. Graphs are never
//! mutated after construction and are safe to share across threads.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
    #[error("isomorphism search supports order <= {max}, got {order}")]
    OrderTooLarge { order: usize, max: usize },
}

/// Subset of `0..universe` backed by 64-bit blocks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    blocks: Vec<u64>,
}

fn block_count(universe: usize) -> usize {
    universe.div_ceil(64)
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            blocks: vec![0; block_count(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for v in 0..universe {
            set.blocks[v / 64] |= 1 << (v % 64);
        }
        set
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut set = Self::empty(universe);
        set.insert(v);
        set
    }

    /// Builds a set from explicit members, rejecting out-of-range ids.
    pub fn from_members<I>(universe: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(universe);
        for v in members {
            if v >= universe {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: universe,
                });
            }
            set.blocks[v / 64] |= 1 << (v % 64);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.blocks[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.blocks[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.blocks[v / 64] &= !(1 << (v % 64));
    }

    pub fn min_member(&self) -> Option<usize> {
        for (i, &b) in self.blocks.iter().enumerate() {
            if b != 0 {
                return Some(i * 64 + b.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &b)| {
            let mut rest = b;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * 64 + v)
                }
            })
        })
    }

    /// Members in ascending order.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "vertex sets over different universes"
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_universe(other);
        let mut out = self.clone();
        out.union_in_place(other);
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_universe(other);
        let mut out = self.clone();
        out.intersect_in_place(other);
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_universe(other);
        let mut out = self.clone();
        out.difference_in_place(other);
        out
    }

    pub fn complement(&self) -> Self {
        let mut out = Self::full(self.universe);
        out.difference_in_place(self);
        out
    }

    pub fn union_in_place(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersect_in_place(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn difference_in_place(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & b == 0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph: no loops, no parallel edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops, duplicate edges (in
    /// either orientation) and out-of-range endpoints are construction
    /// errors, not silent normalizations.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![VertexSet::empty(n); n];
        let mut m = 0;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u].insert(v);
            adj[v].insert(u);
            m += 1;
        }
        let graph = Graph { n, m, adj };
        debug_assert_eq!(
            graph.adj.iter().map(VertexSet::len).sum::<usize>(),
            2 * graph.m,
            "handshake violated"
        );
        Ok(graph)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as (u, v) pairs with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        Ok((0..self.n).map(|v| self.degree(v)).min().unwrap())
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    /// N(X): vertices outside `x` adjacent to at least one member of `x`.
    pub fn neighborhood_of(&self, x: &VertexSet) -> VertexSet {
        assert_eq!(x.universe(), self.n, "set universe differs from graph order");
        let mut out = VertexSet::empty(self.n);
        for v in x.iter() {
            out.union_in_place(&self.adj[v]);
        }
        out.difference_in_place(x);
        out
    }

    /// Connected components of the subgraph induced on `V \ s`, ordered by
    /// each component's minimum vertex id. Empty iff `s` covers all vertices.
    pub fn components_after_removal(&self, s: &VertexSet) -> Vec<VertexSet> {
        assert_eq!(s.universe(), self.n, "set universe differs from graph order");
        let mut remaining = s.complement();
        let mut components = Vec::new();
        while let Some(start) = remaining.min_member() {
            let mut component = VertexSet::singleton(self.n, start);
            let mut frontier = component.clone();
            loop {
                let mut next = VertexSet::empty(self.n);
                for v in frontier.iter() {
                    next.union_in_place(&self.adj[v]);
                }
                next.intersect_in_place(&remaining);
                next.difference_in_place(&component);
                if next.is_empty() {
                    break;
                }
                component.union_in_place(&next);
                frontier = next;
            }
            remaining.difference_in_place(&component);
            components.push(component);
        }
        components
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_after_removal(&VertexSet::empty(self.n))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn has_triangle(&self) -> bool {
        for (u, v) in self.edges() {
            if !self.adj[u].intersection(&self.adj[v]).is_empty() {
                return true;
            }
        }
        false
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

/// Largest order accepted by [`are_isomorphic`].
pub const MAX_ISOMORPHISM_ORDER: usize = 12;

/// Exact isomorphism test by degree-pruned permutation search. Intended for
/// structural golden tests on small graphs only.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    for g in [a, b] {
        if g.order() > MAX_ISOMORPHISM_ORDER {
            return Err(GraphError::OrderTooLarge {
                order: g.order(),
                max: MAX_ISOMORPHISM_ORDER,
            });
        }
    }
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    let n = a.order();
    let mut deg_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return Ok(false);
    }

    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == a.order() {
            return true;
        }
        for w in 0..b.order() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
                map.push(w);
                used[w] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    Ok(extend(a, b, &mut map, &mut used))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn build_path_has_expected_degrees() {
        let g = path(4);
        let degrees: Vec<_> = (0..4).map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![1, 2, 2, 1]);
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn build_rejects_self_loop() {
        assert_eq!(
            Graph::build(3, &[(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
    }

    #[test]
    fn build_rejects_duplicate_edges_in_either_orientation() {
        assert_eq!(
            Graph::build(3, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(1, 0)
        );
        assert_eq!(
            Graph::build(3, &[(0, 1), (0, 1)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
    }

    #[test]
    fn build_rejects_out_of_range_ids() {
        assert_eq!(
            Graph::build(3, &[(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 3, order: 3 }
        );
    }

    #[test]
    fn build_cycle_counts() {
        let g = cycle(5);
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 5);
        assert!(g.is_connected());
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(path(4).min_degree().unwrap(), 1);
        assert_eq!(complete(4).min_degree().unwrap(), 3);
        let empty = Graph::build(0, &[]).unwrap();
        assert_eq!(empty.min_degree().unwrap_err(), GraphError::EmptyGraph);
    }

    #[test]
    fn neighborhood_examples() {
        let c5 = cycle(5);
        let x = VertexSet::from_members(5, [0]).unwrap();
        assert_eq!(c5.neighborhood_of(&x).to_vec(), vec![1, 4]);

        let c6 = cycle(6);
        let x = VertexSet::from_members(6, [1, 2]).unwrap();
        assert_eq!(c6.neighborhood_of(&x).to_vec(), vec![0, 3]);

        let k4 = complete(4);
        let all = VertexSet::full(4);
        assert!(k4.neighborhood_of(&all).is_empty());
    }

    #[test]
    fn components_after_removal_examples() {
        let c6 = cycle(6);
        let s = VertexSet::from_members(6, [0, 3]).unwrap();
        let comps = c6.components_after_removal(&s);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![1, 2]);
        assert_eq!(comps[1].to_vec(), vec![4, 5]);

        let p5 = path(5);
        let s = VertexSet::from_members(5, [2]).unwrap();
        let comps = p5.components_after_removal(&s);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(comps[1].to_vec(), vec![3, 4]);

        let k4 = complete(4);
        let s = VertexSet::from_members(4, [0]).unwrap();
        let comps = k4.components_after_removal(&s);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn removing_everything_leaves_no_components() {
        let g = cycle(4);
        assert!(g.components_after_removal(&VertexSet::full(4)).is_empty());
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = cycle(4);
        let k22 = Graph::build(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(are_isomorphic(&c4, &k22).unwrap());
        assert!(!are_isomorphic(&cycle(5), &path(5)).unwrap());
    }

    #[test]
    fn isomorphism_rejects_large_orders() {
        let g = path(13);
        assert_eq!(
            are_isomorphic(&g, &g).unwrap_err(),
            GraphError::OrderTooLarge { order: 13, max: 12 }
        );
    }

    #[test]
    fn triangle_scan() {
        assert!(complete(3).has_triangle());
        assert!(!cycle(5).has_triangle());
        assert!(!path(6).has_triangle());
    }

    /// Brute-force reference: try all n! bijections without pruning.
    fn iso_all_permutations(a: &Graph, b: &Graph) -> bool {
        if a.order() != b.order() {
            return false;
        }
        let n = a.order();
        let mut perm: Vec<usize> = (0..n).collect();
        fn heap(perm: &mut Vec<usize>, k: usize, a: &Graph, b: &Graph, hit: &mut bool) {
            if *hit {
                return;
            }
            if k <= 1 {
                let ok = a.edges().iter().all(|&(u, v)| b.has_edge(perm[u], perm[v]))
                    && a.size() == b.size();
                if ok {
                    *hit = true;
                }
                return;
            }
            for i in 0..k {
                heap(perm, k - 1, a, b, hit);
                if k % 2 == 0 {
                    perm.swap(i, k - 1);
                } else {
                    perm.swap(0, k - 1);
                }
            }
        }
        let mut hit = false;
        heap(&mut perm, n, a, b, &mut hit);
        hit
    }

    #[test]
    fn pruned_isomorphism_matches_full_permutation_search() {
        let samples = [path(5), cycle(5), cycle(6), complete(4), path(1)];
        for a in &samples {
            for b in &samples {
                assert_eq!(
                    are_isomorphic(a, b).unwrap(),
                    iso_all_permutations(a, b),
                    "{a:?} vs {b:?}"
                );
            }
        }
    }

    fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(proptest::bool::ANY, pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::build(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn handshake_holds(g in arbitrary_graph(12)) {
            let total: usize = g.vertices().map(|v| g.degree(v)).sum();
            prop_assert_eq!(total, 2 * g.size());
        }

        #[test]
        fn components_partition_the_leftover_vertices(
            g in arbitrary_graph(10),
            picks in proptest::collection::vec(proptest::bool::ANY, 10),
        ) {
            let n = g.order();
            let s = VertexSet::from_members(n, (0..n).filter(|&v| picks[v])).unwrap();
            let comps = g.components_after_removal(&s);
            let mut seen = VertexSet::empty(n);
            for c in &comps {
                prop_assert!(c.is_disjoint_from(&seen));
                prop_assert!(!c.is_empty());
                seen.union_in_place(c);
            }
            prop_assert_eq!(seen, s.complement());
            // no edge joins two distinct components
            for (i, c) in comps.iter().enumerate() {
                for d in comps.iter().skip(i + 1) {
                    prop_assert!(g.neighborhood_of(c).is_disjoint_from(d));
                }
            }
        }

        #[test]
        fn singleton_neighborhood_is_adjacency(g in arbitrary_graph(10)) {
            for v in g.vertices() {
                let nb = g.neighborhood_of(&VertexSet::singleton(g.order(), v));
                prop_assert_eq!(&nb, g.neighbors(v));
            }
        }

        #[test]
        fn relabeling_preserves_isomorphism(g in arbitrary_graph(7), seed in 0u64..1000) {
            let n = g.order();
            // deterministic shuffle driven by a tiny LCG
            let mut perm: Vec<usize> = (0..n).collect();
            let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                perm.swap(i, j);
            }
            let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
            let h = Graph::build(n, &edges).unwrap();
            prop_assert!(are_isomorphic(&g, &h).unwrap());
        }
    }
}
