//! Exact classical and g-extra vertex connectivity.
//!
//! `vertex_connectivity` follows the cut definition that counts reduction to
//! a trivial graph, so complete graphs get n - 1. `extra_connectivity` is a
//! certificate-producing exhaustive search over candidate cut sizes: the
//! naive method enumerates every subset through the generic graph interface
//! and serves as the correctness oracle; the pruned method runs over packed
//! 64-bit adjacency masks and applies sound bounds only (no start below the
//! classical connectivity, no size beyond n - 2(g + 1)). Both return the
//! lexicographically smallest minimum cut, so their outcomes are identical.

use thiserror::Error;

use crate::flow::{PathsOutcome, VertexFlow};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq)]
pub enum SolveError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("connectivity needs at least two vertices")]
    TooSmall,
    #[error("order {order} exceeds the {method} search budget of {budget} vertices")]
    BudgetExceeded {
        order: usize,
        budget: usize,
        method: &'static str,
    },
    #[error("the packed search supports order <= 64, got {0}")]
    OrderUnsupported(usize),
}

/// Search strategy for [`extra_connectivity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Plain subset enumeration in increasing size; the reference oracle.
    Naive,
    /// Mask-based enumeration with sound size bounds.
    Pruned,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Naive => "naive",
            Method::Pruned => "pruned",
        }
    }

    /// Default largest order each method accepts.
    pub fn default_budget(self) -> usize {
        match self {
            Method::Naive => 12,
            Method::Pruned => 20,
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "naive" => Ok(Method::Naive),
            "pruned" => Ok(Method::Pruned),
            other => Err(format!("unknown method '{other}' (expected naive or pruned)")),
        }
    }
}

/// A g-extra cut together with the component sizes it leaves behind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtraCutCertificate {
    pub g: usize,
    pub cut: VertexSet,
    /// Component orders of the graph minus the cut, ascending.
    pub component_sizes: Vec<usize>,
}

impl ExtraCutCertificate {
    pub fn value(&self) -> usize {
        self.cut.len()
    }
}

/// Result of an exact g-extra connectivity solve. `NotFound` is explicit:
/// some graphs admit no g-extra cut at all and that is not a number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Found(ExtraCutCertificate),
    NotFound,
}

impl SolveOutcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            SolveOutcome::Found(cert) => Some(cert.value()),
            SolveOutcome::NotFound => None,
        }
    }

    pub fn certificate(&self) -> Option<&ExtraCutCertificate> {
        match self {
            SolveOutcome::Found(cert) => Some(cert),
            SolveOutcome::NotFound => None,
        }
    }
}

/// Classical vertex connectivity of a connected graph with n >= 2.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, SolveError> {
    vertex_connectivity_with_cut(g).map(|(k, _)| k)
}

/// Classical vertex connectivity plus a witness: a minimum set whose removal
/// disconnects the graph or reduces it to a single vertex.
pub fn vertex_connectivity_with_cut(g: &Graph) -> Result<(usize, VertexSet), SolveError> {
    let n = g.order();
    if n < 2 {
        return Err(SolveError::TooSmall);
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    if g.is_complete() {
        // removing all but one vertex leaves a trivial graph
        let cut = VertexSet::from_members(n, 1..n).unwrap();
        return Ok((n - 1, cut));
    }

    // Any minimum cut either misses some fixed vertex v (then v is separated
    // from a non-neighbor) or contains v (then two neighbors of v fall into
    // different components). So flows from a minimum-degree vertex to its
    // non-neighbors, plus flows between non-adjacent neighbor pairs, cover
    // every minimum cut. N(v) itself is always a cut and seeds the bound.
    let v = g
        .vertices()
        .min_by_key(|&u| (g.degree(u), u))
        .expect("n >= 2");
    let mut best = g.degree(v);
    let mut best_cut = g.neighbors(v).clone();

    let mut net = VertexFlow::new(g);
    let mut candidates: Vec<(usize, usize)> = g
        .vertices()
        .filter(|&t| t != v && !g.has_edge(v, t))
        .map(|t| (v, t))
        .collect();
    let neighbors = g.neighbors(v).to_vec();
    for (i, &a) in neighbors.iter().enumerate() {
        for &b in &neighbors[i + 1..] {
            if !g.has_edge(a, b) {
                candidates.push((a, b));
            }
        }
    }
    for (s, t) in candidates {
        if let PathsOutcome::Exact { value, cut } = net.disjoint_paths(s, t, best) {
            debug_assert!(value < best);
            best = value;
            best_cut = VertexSet::from_members(n, cut).unwrap();
        }
    }
    Ok((best, best_cut))
}

/// True iff removing `s` leaves at least two components, all of order >= g + 1.
pub fn is_g_extra_cut(g: &Graph, s: &VertexSet, extra: usize) -> bool {
    let components = g.components_after_removal(s);
    components.len() >= 2 && components.iter().all(|c| c.len() >= extra + 1)
}

/// Exact g-extra connectivity under the method's default budget.
pub fn extra_connectivity(g: &Graph, extra: usize, method: Method) -> Result<SolveOutcome, SolveError> {
    extra_connectivity_budgeted(g, extra, method, method.default_budget())
}

/// Exact g-extra connectivity with an explicit order budget. Exceeding the
/// budget is a clean refusal, never a partial answer.
pub fn extra_connectivity_budgeted(
    g: &Graph,
    extra: usize,
    method: Method,
    budget: usize,
) -> Result<SolveOutcome, SolveError> {
    let n = g.order();
    if n > budget {
        return Err(SolveError::BudgetExceeded {
            order: n,
            budget,
            method: method.name(),
        });
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    match method {
        Method::Naive => solve_naive(g, extra),
        Method::Pruned => solve_pruned(g, extra),
    }
}

/// Calls `f` on every k-subset of `0..n` in lexicographic order until it
/// returns true; reports whether any call did.
fn for_each_combination<F: FnMut(&[usize]) -> bool>(n: usize, k: usize, mut f: F) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        if k == 0 {
            return false;
        }
        // rightmost index that can still move
        let mut i = k - 1;
        while idx[i] == n - k + i {
            if i == 0 {
                return false;
            }
            i -= 1;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Largest cut size worth trying: two components of order g + 1 must fit.
fn size_limit(n: usize, extra: usize) -> Option<usize> {
    n.checked_sub(2 * (extra + 1))
}

fn solve_naive(g: &Graph, extra: usize) -> Result<SolveOutcome, SolveError> {
    let n = g.order();
    let Some(limit) = size_limit(n, extra) else {
        return Ok(SolveOutcome::NotFound);
    };
    for size in 0..=limit {
        let mut hit = None;
        for_each_combination(n, size, |combo| {
            let cut = VertexSet::from_members(n, combo.iter().copied()).unwrap();
            let components = g.components_after_removal(&cut);
            if components.len() >= 2 && components.iter().all(|c| c.len() >= extra + 1) {
                let mut sizes: Vec<usize> = components.iter().map(VertexSet::len).collect();
                sizes.sort_unstable();
                hit = Some(ExtraCutCertificate {
                    g: extra,
                    cut,
                    component_sizes: sizes,
                });
                true
            } else {
                false
            }
        });
        if let Some(cert) = hit {
            return Ok(SolveOutcome::Found(cert));
        }
    }
    Ok(SolveOutcome::NotFound)
}

/// Adjacency packed into one u64 mask per vertex.
struct MaskGraph {
    adj: Vec<u64>,
    full: u64,
}

impl MaskGraph {
    fn new(g: &Graph) -> Option<Self> {
        let n = g.order();
        if n > 64 {
            return None;
        }
        let mut adj = vec![0u64; n];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Some(MaskGraph { adj, full })
    }

    fn closure(&self, seed: u64, allowed: u64) -> u64 {
        let mut component = seed & allowed;
        let mut frontier = component;
        while frontier != 0 {
            let mut grow = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                grow |= self.adj[v];
            }
            frontier = grow & allowed & !component;
            component |= frontier;
        }
        component
    }

    /// Component sizes of the graph minus `cut` if that forms a g-extra cut.
    fn extra_cut_sizes(&self, cut: u64, min_size: usize) -> Option<Vec<usize>> {
        let rest = self.full & !cut;
        if rest == 0 {
            return None;
        }
        let first = self.closure(1 << rest.trailing_zeros(), rest);
        if first == rest {
            return None;
        }
        let mut sizes = Vec::new();
        let mut remaining = rest;
        let mut component = first;
        loop {
            let size = component.count_ones() as usize;
            if size < min_size {
                return None;
            }
            sizes.push(size);
            remaining &= !component;
            if remaining == 0 {
                break;
            }
            component = self.closure(1 << remaining.trailing_zeros(), remaining);
        }
        sizes.sort_unstable();
        Some(sizes)
    }
}

fn solve_pruned(g: &Graph, extra: usize) -> Result<SolveOutcome, SolveError> {
    let n = g.order();
    let Some(limit) = size_limit(n, extra) else {
        return Ok(SolveOutcome::NotFound);
    };
    let masks = MaskGraph::new(g).ok_or(SolveError::OrderUnsupported(n))?;
    // a g-extra cut disconnects the graph, so nothing below kappa can work
    let kappa = vertex_connectivity(g)?;
    if kappa > limit {
        return Ok(SolveOutcome::NotFound);
    }
    for size in kappa..=limit {
        let mut hit = None;
        for_each_combination(n, size, |combo| {
            let mut cut = 0u64;
            for &v in combo {
                cut |= 1 << v;
            }
            if let Some(sizes) = masks.extra_cut_sizes(cut, extra + 1) {
                hit = Some((cut, sizes));
                true
            } else {
                false
            }
        });
        if let Some((cut, sizes)) = hit {
            let members = (0..n).filter(|&v| cut >> v & 1 == 1);
            return Ok(SolveOutcome::Found(ExtraCutCertificate {
                g: extra,
                cut: VertexSet::from_members(n, members).unwrap(),
                component_sizes: sizes,
            }));
        }
    }
    Ok(SolveOutcome::NotFound)
}
