//! F-trees, L-trees and caterpillar decompositions.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, SpanningTree, Vertex, VertexOrdering};

fn build_tree<F>(g: &Graph, sigma: &VertexOrdering, pick: F) -> Result<SpanningTree>
where
    F: Fn(&mut dyn Iterator<Item = Vertex>) -> Option<Vertex>,
{
    if sigma.len() != g.vertex_count() {
        return Err(Error::NotPermutation);
    }
    let mut edges = Vec::with_capacity(g.vertex_count().saturating_sub(1));
    for &v in sigma.as_slice().iter().skip(1) {
        let pv = sigma.position(v);
        let mut earlier = g.neighbors(v).iter().copied().filter(|&w| sigma.position(w) < pv);
        let parent = pick(&mut earlier).ok_or(Error::InvalidOrder(v))?;
        edges.push((v, parent));
    }
    SpanningTree::new(g.vertex_count(), edges)
}

/// Tree joining every vertex to its earliest neighbor in `sigma`.
pub fn build_f_tree(g: &Graph, sigma: &VertexOrdering) -> Result<SpanningTree> {
    build_tree(g, sigma, |it| it.min_by_key(|&w| sigma.position(w)))
}

/// Tree joining every vertex to its latest neighbor preceding it in `sigma`.
pub fn build_l_tree(g: &Graph, sigma: &VertexOrdering) -> Result<SpanningTree> {
    build_tree(g, sigma, |it| it.max_by_key(|&w| sigma.position(w)))
}

/// A dominating path of a tree with every other vertex hanging off it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaterpillarDecomposition {
    pub spine: Vec<Vertex>,
    /// `(leaf, attachment)` with `attachment` on the spine, sorted by leaf.
    pub leaves: Vec<(Vertex, Vertex)>,
}

impl CaterpillarDecomposition {
    fn from_spine(t: &SpanningTree, spine: Vec<Vertex>) -> Option<Self> {
        let n = t.vertex_count();
        let mut on_spine = vec![false; n];
        for &v in &spine {
            on_spine[v] = true;
        }
        let mut leaves = Vec::new();
        for v in 0..n {
            if on_spine[v] {
                continue;
            }
            let attach = t.neighbors(v).iter().copied().find(|&w| on_spine[w])?;
            leaves.push((v, attach));
        }
        Some(CaterpillarDecomposition { spine, leaves })
    }

    fn reversed(&self) -> Self {
        let mut spine = self.spine.clone();
        spine.reverse();
        CaterpillarDecomposition { spine, leaves: self.leaves.clone() }
    }
}

// Farthest vertex from `from` (smallest id among ties) and BFS parents.
fn farthest(t: &SpanningTree, from: Vertex) -> (Vertex, Vec<Option<Vertex>>) {
    let n = t.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![None; n];
    let mut queue = VecDeque::from([from]);
    dist[from] = 0;
    while let Some(v) = queue.pop_front() {
        for &w in t.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    let best = (0..n).max_by_key(|&v| (dist[v], std::cmp::Reverse(v))).expect("non-empty tree");
    (best, parent)
}

/// A longest path of `t`, found by two sweeps.
pub fn diameter_path(t: &SpanningTree) -> Vec<Vertex> {
    let (a, _) = farthest(t, 0);
    let (b, parent) = farthest(t, a);
    let mut path = vec![b];
    let mut cur = b;
    while let Some(p) = parent[cur] {
        path.push(p);
        cur = p;
    }
    path.reverse();
    path
}

/// Every vertex lies on `spine` or is adjacent to it in `t`.
pub fn is_dominating_path(t: &SpanningTree, spine: &[Vertex]) -> bool {
    if spine.is_empty() || spine.windows(2).any(|w| !t.contains_edge(w[0], w[1])) {
        return false;
    }
    let mut on = vec![false; t.vertex_count()];
    for &v in spine {
        on[v] = true;
    }
    (0..t.vertex_count()).all(|v| on[v] || t.neighbors(v).iter().any(|&w| on[w]))
}

/// The path of non-leaf vertices of a caterpillar, or `None` if `t` is not a
/// caterpillar. Trees with at most two vertices have the smallest vertex as
/// their core.
pub fn caterpillar_core(t: &SpanningTree) -> Option<Vec<Vertex>> {
    if !t.is_tree() {
        return None;
    }
    let path = diameter_path(t);
    if !is_dominating_path(t, &path) {
        return None;
    }
    if path.len() <= 2 {
        return Some(vec![*path.iter().min().expect("non-empty")]);
    }
    Some(path[1..path.len() - 1].to_vec())
}

/// Decompositions of `t` derived from its diameter path: the path itself and
/// the variants with one or both end vertices reclassified as leaves, each in
/// both orientations. Empty iff `t` is not a caterpillar.
pub fn caterpillar_decompositions(t: &SpanningTree) -> Vec<CaterpillarDecomposition> {
    if !t.is_tree() {
        return Vec::new();
    }
    let path = diameter_path(t);
    if !is_dominating_path(t, &path) {
        return Vec::new();
    }
    let k = path.len();
    let mut out: Vec<CaterpillarDecomposition> = Vec::new();
    for (trim_start, trim_end) in [(false, false), (true, false), (false, true), (true, true)] {
        let lo = usize::from(trim_start);
        let hi = k - usize::from(trim_end);
        if lo >= hi {
            continue;
        }
        let Some(d) = CaterpillarDecomposition::from_spine(t, path[lo..hi].to_vec()) else {
            continue;
        };
        let r = d.reversed();
        for candidate in [d, r] {
            if !out.contains(&candidate) {
                out.push(candidate);
            }
        }
    }
    out
}
