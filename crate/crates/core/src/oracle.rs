//! Brute-force reference implementations for small graphs.
//!
//! Nothing here shares code with the incremental label machinery: search
//! orders come from [`candidates_from_prefix`], which recomputes labels from
//! scratch at every step.

use crate::error::Result;
use crate::graph::{complement, require_spanning_tree, root_tree, Graph, SpanningTree, Vertex, VertexOrdering};
use crate::recognize::Side;
use crate::search::{candidates_from_prefix, run_search, SearchKind, TieBreak};

/// Lazily enumerates every `kind` ordering of `g`, optionally only those
/// starting at `start`, in lexicographic order of vertex ids.
pub fn enumerate_search_orders(g: &Graph, kind: SearchKind, start: Option<Vertex>) -> SearchOrders<'_> {
    let first = match start {
        Some(s) => vec![s],
        None => g.vertices().collect(),
    };
    SearchOrders { g, kind, prefix: Vec::new(), stack: vec![(first, 0)] }
}

pub struct SearchOrders<'a> {
    g: &'a Graph,
    kind: SearchKind,
    prefix: Vec<Vertex>,
    // choices for position `i` and the next one to try
    stack: Vec<(Vec<Vertex>, usize)>,
}

impl Iterator for SearchOrders<'_> {
    type Item = VertexOrdering;

    fn next(&mut self) -> Option<VertexOrdering> {
        let n = self.g.vertex_count();
        loop {
            let (choices, next) = self.stack.last_mut()?;
            if *next == choices.len() {
                self.stack.pop();
                self.prefix.pop();
                continue;
            }
            let v = choices[*next];
            *next += 1;
            self.prefix.push(v);
            if self.prefix.len() == n {
                let out = VertexOrdering::new(self.prefix.clone()).expect("prefix is a permutation");
                self.prefix.pop();
                return Some(out);
            }
            let cands = candidates_from_prefix(self.g, self.kind, &self.prefix);
            self.stack.push((cands, 0));
        }
    }
}

/// Searches every root for a `kind` ordering whose `side` tree is `t`,
/// returning the first found. Exhaustive; exponential in the worst case.
///
/// A branch is cut as soon as some vertex's tree parent is ruled out: when it
/// is chosen with the wrong F- or L-parent, or, for F-trees, when its first
/// visited neighbor is not its parent.
pub fn oracle_recognize(
    g: &Graph,
    t: &SpanningTree,
    kind: SearchKind,
    side: Side,
) -> Result<Option<VertexOrdering>> {
    require_spanning_tree(g, t)?;
    let n = g.vertex_count();
    for root in g.vertices() {
        let rt = root_tree(t, root)?;
        let mut position = vec![0usize; n];
        let mut prefix = vec![root];
        position[root] = 1;
        if extend(g, kind, side, &|v| rt.parent(v), &mut prefix, &mut position) {
            return Ok(Some(VertexOrdering::new(prefix).expect("complete prefix")));
        }
    }
    Ok(None)
}

fn extend(
    g: &Graph,
    kind: SearchKind,
    side: Side,
    parent: &dyn Fn(Vertex) -> Option<Vertex>,
    prefix: &mut Vec<Vertex>,
    position: &mut [usize],
) -> bool {
    if prefix.len() == g.vertex_count() {
        return true;
    }
    for v in candidates_from_prefix(g, kind, prefix) {
        let earlier = g.neighbors(v).iter().copied().filter(|&w| position[w] != 0);
        let chosen = match side {
            Side::F => earlier.min_by_key(|&w| position[w]),
            Side::L => earlier.max_by_key(|&w| position[w]),
        };
        if chosen.is_none() || chosen != parent(v) {
            continue;
        }
        prefix.push(v);
        position[v] = prefix.len();
        // An F-parent is fixed as soon as the first neighbor is visited.
        let settled = side == Side::L
            || g.neighbors(v).iter().all(|&w| {
                position[w] != 0
                    || parent(w) == Some(v)
                    || g.neighbors(w).iter().any(|&x| x != v && position[x] != 0)
            });
        if settled && extend(g, kind, side, parent, prefix, position) {
            return true;
        }
        position[v] = 0;
        prefix.pop();
    }
    false
}

/// Every spanning tree of `g`.
pub fn enumerate_spanning_trees(g: &Graph) -> Vec<SpanningTree> {
    let n = g.vertex_count();
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n.saturating_sub(1));
    let comp: Vec<usize> = (0..n).collect();
    grow_trees(n, &edges, 0, &comp, &mut chosen, &mut out);
    out
}

fn grow_trees(
    n: usize,
    edges: &[(Vertex, Vertex)],
    from: usize,
    comp: &[usize],
    chosen: &mut Vec<(Vertex, Vertex)>,
    out: &mut Vec<SpanningTree>,
) {
    if chosen.len() + 1 == n {
        out.push(SpanningTree::new(n, chosen.iter().copied()).expect("valid edges"));
        return;
    }
    if edges.len() - from < n - 1 - chosen.len() {
        return;
    }
    for i in from..edges.len() {
        let (u, v) = edges[i];
        if comp[u] == comp[v] {
            continue;
        }
        let (keep, drop) = (comp[u], comp[v]);
        let merged: Vec<usize> = comp.iter().map(|&c| if c == drop { keep } else { c }).collect();
        chosen.push((u, v));
        grow_trees(n, edges, i + 1, &merged, chosen, out);
        chosen.pop();
    }
}

/// Chordality via a perfect elimination ordering: the reverse of any LBFS.
pub fn is_chordal(g: &Graph) -> bool {
    let sigma = run_search(g, SearchKind::Lbfs, 0, &TieBreak::MinId).expect("vertex 0 exists");
    // Every vertex's earlier neighbors must form a clique.
    sigma.as_slice().iter().all(|&v| {
        let pv = sigma.position(v);
        let earlier: Vec<Vertex> =
            g.neighbors(v).iter().copied().filter(|&w| sigma.position(w) < pv).collect();
        earlier.iter().enumerate().all(|(i, &a)| earlier[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

/// Whether `g` has an induced cycle on at least `min_len` vertices.
pub fn has_induced_cycle(g: &Graph, min_len: usize) -> bool {
    let mut path = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    g.vertices().any(|s| {
        path.push(s);
        on_path[s] = true;
        let found = grow_cycle(g, min_len, &mut path, &mut on_path);
        on_path[s] = false;
        path.pop();
        found
    })
}

// Extends an induced path whose first vertex is its minimum.
fn grow_cycle(g: &Graph, min_len: usize, path: &mut Vec<Vertex>, on_path: &mut [bool]) -> bool {
    let s = path[0];
    let last = *path.last().expect("non-empty path");
    for &w in g.neighbors(last) {
        if w <= s || on_path[w] {
            continue;
        }
        let inner = if path.len() >= 2 { &path[1..path.len() - 1] } else { &[][..] };
        if inner.iter().any(|&x| g.has_edge(w, x)) {
            continue;
        }
        if path.len() >= 2 && g.has_edge(w, s) {
            if path.len() + 1 >= min_len {
                return true;
            }
            continue;
        }
        path.push(w);
        on_path[w] = true;
        let found = grow_cycle(g, min_len, path, on_path);
        on_path[w] = false;
        path.pop();
        if found {
            return true;
        }
    }
    false
}

/// Neither `g` nor its complement has an induced cycle on five or more
/// vertices.
pub fn is_weakly_chordal_bruteforce(g: &Graph) -> bool {
    !has_induced_cycle(g, 5) && !has_induced_cycle(&complement(g), 5)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_one_based(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn enumerates_c4_orders() {
        let g = c4();
        assert_eq!(enumerate_search_orders(&g, SearchKind::Gen, None).count(), 16);
        let lbfs: Vec<Vec<usize>> = enumerate_search_orders(&g, SearchKind::Lbfs, Some(0))
            .map(|s| s.to_one_based())
            .collect();
        assert_eq!(lbfs, vec![vec![1, 2, 4, 3], vec![1, 4, 2, 3]]);
    }

    #[test]
    fn spanning_tree_counts() {
        assert_eq!(enumerate_spanning_trees(&c4()).len(), 4);
        let k4 = Graph::from_one_based(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(enumerate_spanning_trees(&k4).len(), 16);
    }

    #[test]
    fn chordality() {
        assert!(!is_chordal(&c4()));
        assert!(has_induced_cycle(&c4(), 4));
        let c5 = Graph::from_one_based(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
        assert!(!is_weakly_chordal_bruteforce(&c5));
        assert!(is_weakly_chordal_bruteforce(&c4()));
        let k3 = Graph::from_one_based(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(is_chordal(&k3) && !has_induced_cycle(&k3, 4));
    }

    #[test]
    fn oracle_on_c4() {
        let g = c4();
        let path = SpanningTree::from_one_based(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let w = oracle_recognize(&g, &path, SearchKind::Ldfs, Side::L).unwrap().unwrap();
        assert_eq!(w.to_one_based(), vec![1, 2, 3, 4]);
        let w = oracle_recognize(&g, &path, SearchKind::Lbfs, Side::F).unwrap().unwrap();
        assert_eq!(w.to_one_based(), vec![2, 3, 1, 4]);
        let k4 = Graph::from_one_based(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        let star = SpanningTree::from_one_based(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(oracle_recognize(&k4, &star, SearchKind::Dfs, Side::L).unwrap().is_none());
    }
}
