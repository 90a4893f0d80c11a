#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use searchtree::{Graph, SearchKind, SpanningTree, TieBreak, Vertex, VertexOrdering};

/// Every connected labeled graph on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .filter_map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::new(n, edges).unwrap();
            g.is_connected().then_some(g)
        })
        .collect()
}

/// A random connected graph: a random tree plus each other pair with
/// probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = empty_matrix(n);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges[perm[i].min(perm[j])][perm[i].max(perm[j])] = true;
    }
    for (u, row) in edges.iter_mut().enumerate() {
        for cell in &mut row[u + 1..] {
            if !*cell && rng.gen_bool(p) {
                *cell = true;
            }
        }
    }
    from_matrix(n, &edges)
}

fn empty_matrix(n: usize) -> Vec<Vec<bool>> {
    vec![vec![false; n]; n]
}

fn from_matrix(n: usize, m: &[Vec<bool>]) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| m[u][v]).map(move |v| (u, v)));
    Graph::new(n, edges.collect::<Vec<_>>()).unwrap()
}

/// A random connected split graph with a non-empty clique.
pub fn random_split<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let k = rng.gen_range(1..=n);
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let (clique, independent) = perm.split_at(k);
    let mut m = vec![vec![false; n]; n];
    let mut set = |a: usize, b: usize| {
        m[a.min(b)][a.max(b)] = true;
    };
    for (i, &a) in clique.iter().enumerate() {
        for &b in &clique[i + 1..] {
            set(a, b);
        }
    }
    let density: f64 = rng.gen_range(0.2..0.9);
    for &w in independent {
        let forced = clique[rng.gen_range(0..k)];
        set(w, forced);
        for &c in clique {
            if rng.gen_bool(density) {
                set(w, c);
            }
        }
    }
    from_matrix(n, &m)
}

/// A uniformly weighted random spanning tree (random-order Kruskal).
pub fn random_spanning_tree<R: Rng>(rng: &mut R, g: &Graph) -> SpanningTree {
    let n = g.vertex_count();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    edges.shuffle(rng);
    let mut dsu: Vec<usize> = (0..n).collect();
    fn find(d: &mut [usize], mut x: usize) -> usize {
        while d[x] != x {
            d[x] = d[d[x]];
            x = d[x];
        }
        x
    }
    let mut chosen = Vec::new();
    for (u, v) in edges {
        let (a, b) = (find(&mut dsu, u), find(&mut dsu, v));
        if a != b {
            dsu[a] = b;
            chosen.push((u, v));
        }
    }
    SpanningTree::new(n, chosen).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> VertexOrdering {
    let mut p: Vec<Vertex> = (0..n).collect();
    p.shuffle(rng);
    VertexOrdering::new(p).unwrap()
}

pub fn random_tie_break<R: Rng>(rng: &mut R, n: usize) -> TieBreak {
    match rng.gen_range(0..3) {
        0 => TieBreak::MinId,
        1 => TieBreak::MaxId,
        _ => TieBreak::Explicit(random_permutation(rng, n)),
    }
}

pub fn random_search_order<R: Rng>(rng: &mut R, g: &Graph, kind: SearchKind) -> VertexOrdering {
    let start = rng.gen_range(0..g.vertex_count());
    let tb = random_tie_break(rng, g.vertex_count());
    searchtree::run_search(g, kind, start, &tb).unwrap()
}

/// Half of the time a uniformly random spanning tree, otherwise the F- or
/// L-tree of a random search, so that positive instances are common.
pub fn tree_for<R: Rng>(rng: &mut R, g: &Graph) -> SpanningTree {
    if rng.gen_bool(0.5) {
        return random_spanning_tree(rng, g);
    }
    let kind = *SearchKind::ALL.choose(rng).unwrap();
    let sigma = random_search_order(rng, g, kind);
    if rng.gen_bool(0.5) {
        searchtree::build_f_tree(g, &sigma).unwrap()
    } else {
        searchtree::build_l_tree(g, &sigma).unwrap()
    }
}

/// Whether `g` splits into a clique and an independent set, by trying every
/// subset as the clique.
pub fn is_split_bruteforce(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0u32..1 << n).any(|mask| {
        let inside = |v: usize| mask >> v & 1 == 1;
        g.vertices().all(|u| {
            g.vertices().filter(|&v| v > u).all(|v| {
                let e = g.has_edge(u, v);
                match (inside(u), inside(v)) {
                    (true, true) => e,
                    (false, false) => !e,
                    _ => true,
                }
            })
        })
    })
}
