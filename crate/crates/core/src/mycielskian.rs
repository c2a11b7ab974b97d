//! The Mycielskian transform.
//!
//! For a graph G on vertices `0..n`, the Mycielskian keeps the originals,
//! adds a twin `n + i` for every original `i`, and one root `2n`. Every edge
//! `ij` of G survives and additionally connects `i` with the twin of `j` and
//! `j` with the twin of `i`; the root is joined to every twin and to nothing
//! else. The fixed id layout (originals, twins, root) keeps cut sets in the
//! transformed graph readable and makes twin arithmetic a pure index shift.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq)]
pub enum MycielskiError {
    #[error("iteration step would produce order {next}, over the bound {bound}")]
    OrderBound { next: usize, bound: usize },
    #[error("set member {0} is not an original vertex (originals are 0..{1})")]
    NotOriginal(usize, usize),
    #[error("set universe {got} matches neither the base order {base} nor {mu}")]
    UniverseMismatch { got: usize, base: usize, mu: usize },
}

/// Role of a vertex id in a Mycielskian graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// A vertex of the base graph, same id.
    Original(usize),
    /// The twin of original `i`, living at id `base + i`.
    Twin(usize),
    /// The apex vertex adjacent to exactly the twins.
    Root,
}

/// Maps ids of a Mycielskian graph back to their roles in the base graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MycielskiLabel {
    base_order: usize,
}

impl MycielskiLabel {
    pub fn base_order(&self) -> usize {
        self.base_order
    }

    /// Order of the transformed graph, `2n + 1`.
    pub fn order(&self) -> usize {
        2 * self.base_order + 1
    }

    pub fn root(&self) -> usize {
        2 * self.base_order
    }

    pub fn role(&self, v: usize) -> Option<Role> {
        let n = self.base_order;
        match v {
            _ if v < n => Some(Role::Original(v)),
            _ if v < 2 * n => Some(Role::Twin(v - n)),
            _ if v == 2 * n => Some(Role::Root),
            _ => None,
        }
    }

    /// Twin partner of `v`: original to twin or twin to original.
    pub fn twin_of(&self, v: usize) -> Option<usize> {
        match self.role(v)? {
            Role::Original(i) => Some(self.base_order + i),
            Role::Twin(i) => Some(i),
            Role::Root => None,
        }
    }

    /// Element-wise twin F' of a set F of originals, as a subset of the
    /// transformed graph's vertices. `f` may live over the base universe or
    /// over the transformed universe (with only original members).
    pub fn twin_set(&self, f: &VertexSet) -> Result<VertexSet, MycielskiError> {
        let n = self.base_order;
        if f.universe() != n && f.universe() != self.order() {
            return Err(MycielskiError::UniverseMismatch {
                got: f.universe(),
                base: n,
                mu: self.order(),
            });
        }
        let mut out = VertexSet::empty(self.order());
        for v in f.iter() {
            if v >= n {
                return Err(MycielskiError::NotOriginal(v, n));
            }
            out.insert(n + v);
        }
        Ok(out)
    }
}

/// Builds the Mycielskian of `g` along with the id-role map.
pub fn mycielskian(g: &Graph) -> (Graph, MycielskiLabel) {
    let n = g.order();
    assert!(n >= 1, "the transform needs at least one vertex");
    let mut edges = Vec::with_capacity(3 * g.size() + n);
    for (u, v) in g.edges() {
        edges.push((u, v));
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    for i in 0..n {
        edges.push((n + i, 2 * n));
    }
    let mu = Graph::build(2 * n + 1, &edges).unwrap();
    debug_assert_eq!(mu.order(), 2 * n + 1);
    debug_assert_eq!(mu.size(), 3 * g.size() + n);
    (mu, MycielskiLabel { base_order: n })
}

/// Order bound that [`iterate`] enforces before each step.
pub const DEFAULT_ORDER_BOUND: usize = 10_000;

/// Applies the transform `k` times; `k = 0` returns the input unchanged.
pub fn iterate(g: &Graph, k: usize) -> Result<Graph, MycielskiError> {
    iterate_bounded(g, k, DEFAULT_ORDER_BOUND)
}

/// As [`iterate`], refusing any step whose result would exceed `bound`
/// vertices (each step roughly doubles the order).
pub fn iterate_bounded(g: &Graph, k: usize, bound: usize) -> Result<Graph, MycielskiError> {
    let mut current = g.clone();
    for _ in 0..k {
        let next = 2 * current.order() + 1;
        if next > bound {
            return Err(MycielskiError::OrderBound { next, bound });
        }
        current = mycielskian(&current).0;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{connected_graphs, random_graph, FamilySpec};
    use crate::graph::are_isomorphic;

    fn family(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn path_transform_counts() {
        let (mu, label) = mycielskian(&family("path:4"));
        assert_eq!(mu.order(), 9);
        assert_eq!(mu.size(), 13);
        assert_eq!(label.root(), 8);
        assert_eq!(mu.min_degree().unwrap(), 2);
    }

    #[test]
    fn k2_transform_is_the_five_cycle() {
        let (mu, _) = mycielskian(&family("complete:2"));
        assert!(are_isomorphic(&mu, &family("cycle:5")).unwrap());
    }

    #[test]
    fn root_is_adjacent_to_exactly_the_twins_of_a_path() {
        for n in 1..=7 {
            let g = FamilySpec::Path(n).build().unwrap();
            let (mu, label) = mycielskian(&g);
            let twins = VertexSet::from_members(label.order(), n..2 * n).unwrap();
            assert_eq!(mu.neighbors(label.root()), &twins);
        }
    }

    #[test]
    fn degree_laws_hold_on_random_graphs() {
        for seed in 0..20 {
            let g = random_graph(9, 0.4, seed).unwrap();
            let n = g.order();
            let (mu, label) = mycielskian(&g);
            for v in g.vertices() {
                assert_eq!(mu.degree(v), 2 * g.degree(v));
                assert_eq!(mu.degree(n + v), g.degree(v) + 1);
            }
            assert_eq!(mu.degree(label.root()), n);
            // the twin layer is independent
            for u in n..2 * n {
                for w in u + 1..2 * n {
                    assert!(!mu.has_edge(u, w));
                }
            }
        }
    }

    #[test]
    fn transform_preserves_triangle_freeness_and_connectivity() {
        let mut checked = 0;
        for g in connected_graphs(5).unwrap() {
            if g.has_triangle() {
                continue;
            }
            let (mu, _) = mycielskian(&g);
            assert!(!mu.has_triangle());
            assert!(mu.is_connected());
            checked += 1;
        }
        assert!(checked > 0);
        let (mu_pet, _) = mycielskian(&family("petersen"));
        assert!(!mu_pet.has_triangle());
    }

    #[test]
    fn twin_set_examples() {
        let g = family("cycle:6");
        let (_, label) = mycielskian(&g);
        assert!(label
            .twin_set(&VertexSet::empty(6))
            .unwrap()
            .is_empty());
        let f = VertexSet::from_members(6, [0, 3]).unwrap();
        assert_eq!(label.twin_set(&f).unwrap().to_vec(), vec![6, 9]);
        // twin members are rejected
        let bad = VertexSet::from_members(13, [6]).unwrap();
        assert_eq!(label.twin_set(&bad), Err(MycielskiError::NotOriginal(6, 6)));
        // twin-of composed twice is the identity on originals
        for v in 0..6 {
            assert_eq!(label.twin_of(label.twin_of(v).unwrap()), Some(v));
        }
        assert_eq!(label.twin_of(label.root()), None);
    }

    #[test]
    fn iteration_examples() {
        let k2 = family("complete:2");
        assert_eq!(iterate(&k2, 0).unwrap(), k2);
        let twice = iterate(&k2, 2).unwrap();
        assert_eq!(twice.order(), 11);
        assert_eq!(twice.size(), 20);
        let (mu_p3, _) = mycielskian(&family("path:3"));
        assert_eq!((mu_p3.order(), mu_p3.size()), (7, 9));
    }

    #[test]
    fn iteration_respects_the_order_bound() {
        let k2 = family("complete:2");
        // orders run 2, 5, 11, ..., 6143, 12287; the 12th step goes over
        assert!(iterate(&k2, 11).is_ok());
        assert_eq!(
            iterate(&k2, 12).unwrap_err(),
            MycielskiError::OrderBound { next: 12287, bound: 10_000 }
        );
        assert_eq!(
            iterate_bounded(&k2, 1, 4).unwrap_err(),
            MycielskiError::OrderBound { next: 5, bound: 4 }
        );
    }
}
