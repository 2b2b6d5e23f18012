//! Vertex connectivity through unit-capacity max-flow on the vertex-split
//! network (Menger).

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Augmenting-path max flow, stopping early once `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: i32) -> i32 {
        let mut flow = 0;
        let mut via = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::new();
        while flow < limit {
            via.iter_mut().for_each(|x| *x = usize::MAX);
            queue.clear();
            queue.push_back(s);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &arc in &self.adj[u] {
                    let v = self.head[arc];
                    if self.cap[arc] > 0 && v != s && via[v] == usize::MAX {
                        via[v] = arc;
                        if v == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut v = t;
            while v != s {
                let arc = via[v];
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                v = self.head[arc ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths for a
/// non-adjacent pair, i.e. the size of a minimum `s`–`t` vertex separator.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    local_with_limit(g, s, t, g.n())
}

fn local_with_limit(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let n = g.n();
    // vertex v splits into v_in = 2v and v_out = 2v + 1
    let big = n as i32;
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, c);
    }
    for &(a, b) in g.edges() {
        net.add_arc(2 * a + 1, 2 * b, big);
        net.add_arc(2 * b + 1, 2 * a, big);
    }
    net.max_flow(2 * s + 1, 2 * t, limit as i32) as usize
}

/// Exact vertex connectivity `v(G)`, with the convention `v(K_n) = n - 1`.
///
/// Uses Even's scheme: some vertex among the first `v(G) + 1` lies outside a
/// minimum separator, so only those vertices need to act as sources.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    if !super::is_connected(g) {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut best = n - 1;
    let mut source = 0;
    while source <= best && source < n {
        for target in source + 1..n {
            if !g.has_edge(source, target) {
                best = best.min(local_with_limit(g, source, target, best));
            }
        }
        source += 1;
    }
    Ok(best)
}
