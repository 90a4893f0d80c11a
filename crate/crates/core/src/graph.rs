//! Graph, spanning tree, rooted tree and vertex ordering types.
//!
//! Vertices are dense `0..n` indices inside the library. Files, the CLI and
//! the `Display` impls use 1-based ids; the `from_one_based` constructors
//! exist so callers can write instances the way they are usually drawn.

use std::collections::VecDeque;
use std::fmt;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

fn edge_key(u: Vertex, v: Vertex) -> u64 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    ((a as u64) << 32) | b as u64
}

fn normalize(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph with sorted adjacency lists and hashed edge
/// membership.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_set: FxHashSet<u64>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices. Rejects self-loops, parallel edges and
    /// out-of-range ids. Connectivity is not required here.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut adj = vec![Vec::new(); n];
        let mut edge_set = FxHashSet::default();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !edge_set.insert(edge_key(u, v)) {
                let (a, b) = normalize(u, v);
                return Err(Error::DuplicateEdge(a, b));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let m = edge_set.len();
        Ok(Graph { adj, edge_set, m })
    }

    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Graph::new(n, edges.iter().map(|&(u, v)| (one_to_zero(u, n), one_to_zero(v, n))))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.edge_set.contains(&edge_key(u, v))
    }

    /// Edges as `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let dist = bfs_distances(self, 0);
        dist.iter().all(Option::is_some)
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.vertex_count() })
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().map(|(u, v)| (u + 1, v + 1)).collect();
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &edges)
            .finish()
    }
}

// Out-of-range ids (including 0) map to a sentinel that `Graph::new` rejects.
fn one_to_zero(x: usize, n: usize) -> usize {
    x.checked_sub(1).unwrap_or(n)
}

/// Shortest-path edge counts from `root`; `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, root: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[root] = Some(0);
    queue.push_back(root);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap_or(0);
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("complement of a simple graph is simple")
}

/// Subgraph induced by `vertices`, relabelled densely. The returned vector
/// maps each new vertex to its id in `g` (sorted ascending).
pub fn induced_subgraph(g: &Graph, vertices: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
    if vertices.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let mut keep: Vec<Vertex> = vertices.to_vec();
    keep.sort_unstable();
    keep.dedup();
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in keep.iter().enumerate() {
        g.check_vertex(v)?;
        index[v] = i;
    }
    let mut edges = Vec::new();
    for (i, &v) in keep.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = index[w];
            if j != usize::MAX && i < j {
                edges.push((i, j));
            }
        }
    }
    Ok((Graph::new(keep.len(), edges)?, keep))
}

/// An edge set over a fixed vertex universe that is meant to be a spanning
/// tree. Construction only checks ids; use [`SpanningTree::is_tree`] or
/// [`validate_spanning_tree`] for the structural property.
#[derive(Clone, PartialEq, Eq)]
pub struct SpanningTree {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl SpanningTree {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push(normalize(u, v));
        }
        list.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Ok(SpanningTree { n, edges: list, adj })
    }

    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        SpanningTree::new(n, edges.iter().map(|&(u, v)| (one_to_zero(u, n), one_to_zero(v, n))))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// `n - 1` distinct edges forming a connected graph.
    pub fn is_tree(&self) -> bool {
        if self.n == 0 || self.edges.len() != self.n - 1 {
            return false;
        }
        if self.edges.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}

impl fmt::Debug for SpanningTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect();
        f.debug_struct("SpanningTree").field("n", &self.n).field("edges", &edges).finish()
    }
}

/// True iff `t` has `n - 1` edges, all in `g`, and connects every vertex.
pub fn validate_spanning_tree(g: &Graph, t: &SpanningTree) -> Result<bool> {
    if g.vertex_count() != t.vertex_count() {
        return Err(Error::UniverseMismatch { graph: g.vertex_count(), tree: t.vertex_count() });
    }
    Ok(t.edges().iter().all(|&(u, v)| g.has_edge(u, v)) && t.is_tree())
}

pub(crate) fn require_spanning_tree(g: &Graph, t: &SpanningTree) -> Result<()> {
    if validate_spanning_tree(g, t)? {
        Ok(())
    } else {
        Err(Error::NotSpanningTree)
    }
}

/// A spanning tree oriented towards a root, with Euler intervals for O(1)
/// ancestor queries.
#[derive(Clone, Debug)]
pub struct RootedTree {
    root: Vertex,
    parent: Vec<Option<Vertex>>,
    children: Vec<Vec<Vertex>>,
    depth: Vec<usize>,
    euler_in: Vec<usize>,
    euler_out: Vec<usize>,
}

pub fn root_tree(t: &SpanningTree, root: Vertex) -> Result<RootedTree> {
    let n = t.vertex_count();
    if root >= n {
        return Err(Error::VertexOutOfRange { vertex: root, n });
    }
    if !t.is_tree() {
        return Err(Error::NotSpanningTree);
    }
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut depth = vec![0; n];
    let mut euler_in = vec![0; n];
    let mut euler_out = vec![0; n];
    let mut clock = 0;
    // (vertex, index of the next neighbor to look at)
    let mut stack: Vec<(Vertex, usize)> = vec![(root, 0)];
    euler_in[root] = clock;
    clock += 1;
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        if let Some(&w) = t.neighbors(v).get(*next) {
            *next += 1;
            if Some(w) == parent[v] {
                continue;
            }
            parent[w] = Some(v);
            children[v].push(w);
            depth[w] = depth[v] + 1;
            euler_in[w] = clock;
            clock += 1;
            stack.push((w, 0));
        } else {
            euler_out[v] = clock;
            clock += 1;
            stack.pop();
        }
    }
    Ok(RootedTree { root, parent, children, depth, euler_in, euler_out })
}

impl RootedTree {
    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    pub fn depth(&self, v: Vertex) -> usize {
        self.depth[v]
    }

    pub fn euler_interval(&self, v: Vertex) -> (usize, usize) {
        (self.euler_in[v], self.euler_out[v])
    }

    /// True iff `u` lies on the path from `v` to the root (`u == v` included).
    pub fn is_ancestor(&self, u: Vertex, v: Vertex) -> bool {
        self.euler_in[u] <= self.euler_in[v] && self.euler_out[v] <= self.euler_out[u]
    }
}

/// A permutation of the vertex set together with its inverse.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    order: Vec<Vertex>,
    // 1-based position of each vertex
    position: Vec<usize>,
}

impl VertexOrdering {
    pub fn new(order: Vec<Vertex>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != 0 {
                return Err(Error::NotPermutation);
            }
            position[v] = i + 1;
        }
        Ok(VertexOrdering { order, position })
    }

    pub fn from_one_based(order: &[usize]) -> Result<Self> {
        let n = order.len();
        VertexOrdering::new(order.iter().map(|&v| one_to_zero(v, n)).collect())
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.order.iter().map(|&v| v + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.order
    }

    pub fn first(&self) -> Option<Vertex> {
        self.order.first().copied()
    }

    /// 1-based position of `v`.
    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    pub fn precedes(&self, u: Vertex, v: Vertex) -> bool {
        self.position[u] < self.position[v]
    }
}

impl fmt::Debug for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexOrdering({self})")
    }
}

impl fmt::Display for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}
