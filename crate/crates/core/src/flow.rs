//! Unit-capacity vertex-splitting flow network, used to count internally
//! vertex-disjoint paths between non-adjacent vertex pairs.
//!
//! Every vertex v becomes v_in -> v_out with capacity one; every edge uv
//! becomes u_out -> v_in and v_out -> u_in with effectively unbounded
//! capacity, so minimum cuts consist of vertex arcs only and translate
//! directly into vertex cuts.

use crate::graph::Graph;

pub(crate) struct VertexFlow {
    n: usize,
    to: Vec<u32>,
    cap0: Vec<u32>,
    cap: Vec<u32>,
    head: Vec<Vec<u32>>,
    parent: Vec<u32>,
    visited: Vec<bool>,
    queue: Vec<u32>,
}

pub(crate) enum PathsOutcome {
    /// Augmentation stopped early once the cap was matched.
    AtLeastCap,
    /// Exact count with a minimum separating vertex set.
    Exact { value: usize, cut: Vec<usize> },
}

const NO_PARENT: u32 = u32::MAX;

fn in_node(v: usize) -> usize {
    2 * v
}

fn out_node(v: usize) -> usize {
    2 * v + 1
}

impl VertexFlow {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut net = VertexFlow {
            n,
            to: Vec::new(),
            cap0: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); 2 * n],
            parent: vec![NO_PARENT; 2 * n],
            visited: vec![false; 2 * n],
            queue: Vec::with_capacity(2 * n),
        };
        let big = n as u32 + 1;
        for v in 0..n {
            net.add_arc(in_node(v), out_node(v), 1);
        }
        for (u, v) in g.edges() {
            net.add_arc(out_node(u), in_node(v), big);
            net.add_arc(out_node(v), in_node(u), big);
        }
        net.cap = net.cap0.clone();
        net
    }

    fn add_arc(&mut self, a: usize, b: usize, c: u32) {
        let id = self.to.len() as u32;
        self.to.push(b as u32);
        self.cap0.push(c);
        self.to.push(a as u32);
        self.cap0.push(0);
        self.head[a].push(id);
        self.head[b].push(id + 1);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.visited.fill(false);
        self.queue.clear();
        self.visited[s] = true;
        self.queue.push(s as u32);
        let mut i = 0;
        while i < self.queue.len() {
            let u = self.queue[i] as usize;
            i += 1;
            for &arc in &self.head[u] {
                let w = self.to[arc as usize] as usize;
                if !self.visited[w] && self.cap[arc as usize] > 0 {
                    self.visited[w] = true;
                    self.parent[w] = arc;
                    if w == t {
                        return true;
                    }
                    self.queue.push(w as u32);
                }
            }
        }
        false
    }

    /// Counts vertex-disjoint paths between the non-adjacent pair (s, t),
    /// stopping early once `cap_limit` paths are found.
    pub(crate) fn disjoint_paths(&mut self, s: usize, t: usize, cap_limit: usize) -> PathsOutcome {
        self.cap.copy_from_slice(&self.cap0);
        let source = out_node(s);
        let sink = in_node(t);
        let mut flow = 0;
        loop {
            if flow >= cap_limit {
                return PathsOutcome::AtLeastCap;
            }
            if !self.bfs(source, sink) {
                // min cut: vertices whose in side is reachable but out side is not
                let cut = (0..self.n)
                    .filter(|&v| self.visited[in_node(v)] && !self.visited[out_node(v)])
                    .collect::<Vec<_>>();
                debug_assert_eq!(cut.len(), flow);
                return PathsOutcome::Exact { value: flow, cut };
            }
            let mut node = sink;
            let mut bottleneck = u32::MAX;
            while node != source {
                let arc = self.parent[node] as usize;
                bottleneck = bottleneck.min(self.cap[arc]);
                node = self.to[arc ^ 1] as usize;
            }
            let mut node = sink;
            while node != source {
                let arc = self.parent[node] as usize;
                self.cap[arc] -= bottleneck;
                self.cap[arc ^ 1] += bottleneck;
                node = self.to[arc ^ 1] as usize;
            }
            flow += bottleneck as usize;
        }
    }
}
