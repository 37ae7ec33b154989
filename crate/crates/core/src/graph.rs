//! Finite simple graphs and canonical cycle enumeration.
//!
//! Hosts are tiny (complete and complete multipartite graphs on ≤ 16
//! vertices), so the representation favours determinism over asymptotics:
//! sorted edge list, sorted adjacency, and a cycle enumeration whose order is
//! part of the public contract — parallel searches and checkpoint/resume both
//! key off it.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::ops::ControlFlow;

pub type VertexId = u32;
pub type EdgeId = usize;

/// Undirected simple graph. Edges are stored as `(u, v)` with `u < v`,
/// sorted; `EdgeId` is the index into that list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    vertices: u32,
    edges: Vec<(VertexId, VertexId)>,
}

impl Graph {
    pub fn new(
        vertices: u32,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Graph> {
        let mut norm: Vec<(VertexId, VertexId)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::structural(format!("loop edge at vertex {u}")));
            }
            if u >= vertices || v >= vertices {
                return Err(Error::structural(format!(
                    "edge ({u}, {v}) exceeds vertex count {vertices}"
                )));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::structural("duplicate edge".to_string()));
        }
        Ok(Graph {
            vertices,
            edges: norm,
        })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: u32) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    /// Complete bipartite graph; parts are `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: u32, b: u32) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::new(a + b, edges).expect("bipartite graph is simple")
    }

    /// Complete tripartite graph; parts are consecutive vertex ranges.
    pub fn complete_tripartite(a: u32, b: u32, c: u32) -> Graph {
        let p1 = 0..a;
        let p2 = a..a + b;
        let p3 = a + b..a + b + c;
        let mut edges = Vec::new();
        for u in p1.clone() {
            edges.extend(p2.clone().map(|v| (u, v)));
            edges.extend(p3.clone().map(|v| (u, v)));
        }
        for u in p2 {
            edges.extend(p3.clone().map(|v| (u, v)));
        }
        Graph::new(a + b + c, edges).expect("tripartite graph is simple")
    }

    /// Cycle graph on `n ≥ 3` vertices.
    pub fn cycle_graph(n: u32) -> Graph {
        assert!(n >= 3);
        let edges = (0..n).map(|u| (u, (u + 1) % n));
        Graph::new(n, edges).expect("cycle graph is simple")
    }

    /// Well-known hosts by name: `K<n>` (complete, n ≤ 16), `K33` or
    /// `K3,3` (complete bipartite 3+3), `K331` or `K3,3,1` (complete
    /// tripartite 3+3+1), `C<n>` (cycle). Case-insensitive.
    pub fn by_name(name: &str) -> Result<Graph> {
        let name = name.to_ascii_uppercase().replace(',', "");
        match name.as_str() {
            "K33" => return Ok(Graph::complete_bipartite(3, 3)),
            "K331" => return Ok(Graph::complete_tripartite(3, 3, 1)),
            _ => {}
        }
        if let Some(digits) = name.strip_prefix('K') {
            if let Ok(n) = digits.parse::<u32>() {
                if (3..=16).contains(&n) {
                    return Ok(Graph::complete(n));
                }
            }
        }
        if let Some(digits) = name.strip_prefix('C') {
            if let Ok(n) = digits.parse::<u32>() {
                if (3..=64).contains(&n) {
                    return Ok(Graph::cycle_graph(n));
                }
            }
        }
        Err(Error::invalid(format!("unknown graph name: {name}")))
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertices
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.vertices as usize];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    /// Visit every simple cycle of length `len` exactly once, in canonical
    /// order, as a vertex path `p`: `p[0]` is the cycle's minimum vertex,
    /// `p[1] < p[len-1]` fixes the direction, and paths arrive
    /// lexicographically. Return `ControlFlow::Break` from the callback to
    /// stop early.
    pub fn for_each_cycle<F>(&self, len: usize, mut f: F) -> ControlFlow<()>
    where
        F: FnMut(&[VertexId]) -> ControlFlow<()>,
    {
        self.for_each_cycle_from_prefix(len, &[], &mut f)
    }

    /// All length-`len` cycles in canonical order.
    pub fn cycles(&self, len: usize) -> Vec<Vec<VertexId>> {
        let mut out = Vec::new();
        let _ = self.for_each_cycle(len, |p| {
            out.push(p.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    /// Canonical depth-`depth` cycle-path prefixes, in the same lexicographic
    /// order the full enumeration visits them. Concatenating the completions
    /// of each prefix (via [`Graph::for_each_cycle_from_prefix`]) reproduces
    /// [`Graph::for_each_cycle`] exactly; parallel searches exploit that.
    pub fn cycle_prefixes(&self, len: usize, depth: usize) -> Vec<Vec<VertexId>> {
        assert!(depth >= 1 && depth <= len);
        let adj = self.adjacency();
        let mut out = Vec::new();
        let mut path: Vec<VertexId> = Vec::new();
        for root in 0..self.vertices {
            path.push(root);
            prefix_dfs(&adj, root, depth, &mut path, &mut out);
            path.pop();
        }
        out
    }

    /// Visit, in canonical order, the length-`len` cycles whose path starts
    /// with `prefix` (an output of [`Graph::cycle_prefixes`]; empty means
    /// all).
    pub fn for_each_cycle_from_prefix<F>(
        &self,
        len: usize,
        prefix: &[VertexId],
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[VertexId]) -> ControlFlow<()>,
    {
        assert!(len >= 3, "cycles have length at least 3");
        assert!(prefix.len() <= len);
        let adj = self.adjacency();
        let mut used = vec![false; self.vertices as usize];
        let mut path = prefix.to_vec();
        for &v in prefix {
            used[v as usize] = true;
        }
        if prefix.is_empty() {
            for root in 0..self.vertices {
                path.push(root);
                used[root as usize] = true;
                cycle_dfs(&adj, len, &mut path, &mut used, f)?;
                used[root as usize] = false;
                path.pop();
            }
            ControlFlow::Continue(())
        } else {
            cycle_dfs(&adj, len, &mut path, &mut used, f)
        }
    }
}

fn cycle_dfs<F>(
    adj: &[Vec<VertexId>],
    len: usize,
    path: &mut Vec<VertexId>,
    used: &mut [bool],
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[VertexId]) -> ControlFlow<()>,
{
    let root = path[0];
    if path.len() == len {
        let last = *path.last().unwrap();
        if adj[last as usize].binary_search(&root).is_ok() && path[1] < path[len - 1] {
            f(path)?;
        }
        return ControlFlow::Continue(());
    }
    let last = *path.last().unwrap() as usize;
    for &w in &adj[last] {
        if w > root && !used[w as usize] {
            path.push(w);
            used[w as usize] = true;
            cycle_dfs(adj, len, path, used, f)?;
            used[w as usize] = false;
            path.pop();
        }
    }
    ControlFlow::Continue(())
}

fn prefix_dfs(
    adj: &[Vec<VertexId>],
    root: VertexId,
    depth: usize,
    path: &mut Vec<VertexId>,
    out: &mut Vec<Vec<VertexId>>,
) {
    if path.len() == depth {
        out.push(path.clone());
        return;
    }
    let last = *path.last().unwrap() as usize;
    for &w in adj[last].iter().filter(|&&w| w > root) {
        if !path.contains(&w) {
            path.push(w);
            prefix_dfs(adj, root, depth, path, out);
            path.pop();
        }
    }
}
