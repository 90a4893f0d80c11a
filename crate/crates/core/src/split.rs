//! Split graphs: partition recognition and linear-time search tree
//! recognition.
//!
//! On a split graph with clique `C` and independent set `I`, every search
//! that visits the clique first ends with the independent vertices in label
//! order, and their labels are frozen once `C` is done. Both recognizers
//! therefore only ever decide the clique prefix and hand the rest to
//! [`LabelState::complete_frozen`].

use crate::error::{Error, Result};
use crate::graph::{require_spanning_tree, root_tree, Graph, SpanningTree, Vertex};
use crate::recognize::{unsupported, RecognitionResult};
use crate::search::{LabelState, SearchKind};
use crate::tree::caterpillar_core;

/// A partition of a split graph into a clique and an independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<Vertex>,
    pub independent: Vec<Vertex>,
    in_clique: Vec<bool>,
}

impl SplitPartition {
    pub fn in_clique(&self, v: Vertex) -> bool {
        self.in_clique[v]
    }
}

/// Splits `g` into a clique and an independent set, if possible.
///
/// Uses the degree sequence criterion: with degrees sorted non-increasingly
/// and `k` the largest index with `d_k >= k - 1`, `g` is split iff the top `k`
/// degrees sum to `k(k-1)` plus the sum of the others. The resulting sides are
/// verified explicitly.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.vertex_count();
    // counting sort by degree, descending, ties by id
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in g.vertices() {
        buckets[g.degree(v)].push(v);
    }
    let sorted: Vec<Vertex> = buckets.into_iter().rev().flatten().collect();
    let k = (0..n).take_while(|&i| g.degree(sorted[i]) >= i).count();
    let head: usize = sorted[..k].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = sorted[k..].iter().map(|&v| g.degree(v)).sum();
    if head != k * (k - 1) + tail {
        return None;
    }
    let mut in_clique = vec![false; n];
    for &v in &sorted[..k] {
        in_clique[v] = true;
    }
    let clique_ok = sorted[..k]
        .iter()
        .all(|&v| g.neighbors(v).iter().filter(|&&w| in_clique[w]).count() == k - 1);
    let independent_ok =
        sorted[k..].iter().all(|&v| g.neighbors(v).iter().all(|&w| in_clique[w]));
    if !clique_ok || !independent_ok {
        return None;
    }
    let mut clique = sorted[..k].to_vec();
    let mut independent = sorted[k..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    Some(SplitPartition { clique, independent, in_clique })
}

fn witness(
    g: &Graph,
    kind: SearchKind,
    prefix: &[Vertex],
    roots_tried: usize,
) -> RecognitionResult {
    let mut st = LabelState::new(g, kind);
    for &v in prefix {
        st.visit(g, v);
    }
    st.complete_frozen(g);
    RecognitionResult::yes(prefix[0], st.into_ordering(), roots_tried, prefix.len() as u64)
}

fn require_split(g: &Graph, t: &SpanningTree) -> Result<SplitPartition> {
    require_spanning_tree(g, t)?;
    split_partition(g).ok_or(Error::NotSplit)
}

/// F-tree recognition on split graphs for BFS, LBFS, LDFS, MCS and MNS.
///
/// All five searches recognize the same F-trees here: the tree is an F-tree
/// iff some root `r` and clique order make every vertex's tree parent its
/// first visited neighbor.
pub fn recognize_split_f_tree(g: &Graph, t: &SpanningTree, kind: SearchKind) -> Result<RecognitionResult> {
    let partition = require_split(g, t)?;
    recognize_split_f_tree_with(g, t, kind, &partition)
}

pub(crate) fn recognize_split_f_tree_with(
    g: &Graph,
    t: &SpanningTree,
    kind: SearchKind,
    part: &SplitPartition,
) -> Result<RecognitionResult> {
    use SearchKind::*;
    if !matches!(kind, Bfs | Lbfs | Ldfs | Mcs | Mns) {
        return Err(unsupported(kind));
    }
    if g.vertex_count() == 1 {
        return Ok(witness(g, kind, &[0], 1));
    }
    let roots = f_root_candidates(g, t, part);
    for (i, &r) in roots.iter().enumerate() {
        if let Some(prefix) = f_clique_prefix(g, t, part, r)? {
            return Ok(witness(g, kind, &prefix, i + 1));
        }
    }
    Ok(RecognitionResult::no(roots.len(), 0))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

// Roots worth checking, in increasing order. The root sees all its
// neighbors first, so its tree and graph degrees agree. A clique root has
// every other clique vertex as a child. An independent root of degree at
// least two must touch each component of T[C] exactly once, and a pendant
// independent root behaves exactly like its neighbor, so it is skipped.
fn f_root_candidates(g: &Graph, t: &SpanningTree, part: &SplitPartition) -> Vec<Vertex> {
    let mut roots: Vec<Vertex> = Vec::new();
    for &c in &part.clique {
        if t.degree(c) == g.degree(c) {
            roots.push(c);
        }
    }
    let n = g.vertex_count();
    let mut dsu: Vec<usize> = (0..n).collect();
    let mut components = part.clique.len();
    for &(u, v) in t.edges() {
        if part.in_clique(u) && part.in_clique(v) {
            let (a, b) = (find(&mut dsu, u), find(&mut dsu, v));
            if a != b {
                dsu[a] = b;
                components -= 1;
            }
        }
    }
    if components >= 2 {
        for &w in &part.independent {
            if g.degree(w) < 2 || t.degree(w) != g.degree(w) || g.degree(w) != components {
                continue;
            }
            let mut reps: Vec<usize> = g.neighbors(w).iter().map(|&c| find(&mut dsu, c)).collect();
            reps.sort_unstable();
            reps.dedup();
            if reps.len() == components {
                roots.push(w);
            }
        }
    }
    roots.sort_unstable();
    roots
}

// For a fixed root, a clique order making `t` the F-tree, as the visiting
// prefix `r, c_1, ..., c_k`. Clique vertices adjacent to an independent
// root form the first block; the rest must all hang off the first vertex of
// that block. An independent vertex must see its tree parent before its
// other neighbors, which orders clique vertices within a block.
fn f_clique_prefix(
    g: &Graph,
    t: &SpanningTree,
    part: &SplitPartition,
    r: Vertex,
) -> Result<Option<Vec<Vertex>>> {
    let rt = root_tree(t, r)?;
    if g.neighbors(r).iter().any(|&w| rt.parent(w) != Some(r)) {
        return Ok(None);
    }
    let n = g.vertex_count();
    // block 0 is visited before block 1, usize::MAX marks non-clique or root
    let mut block = vec![usize::MAX; n];
    let mut first = None;
    if part.in_clique(r) {
        for &c in &part.clique {
            if c != r {
                block[c] = 0;
            }
        }
    } else {
        for &c in g.neighbors(r) {
            block[c] = 0;
        }
        for &c in &part.clique {
            if block[c] == 0 {
                continue;
            }
            let p = match rt.parent(c) {
                Some(p) if block[p] == 0 => p,
                _ => return Ok(None),
            };
            if *first.get_or_insert(p) != p {
                return Ok(None);
            }
            block[c] = 1;
        }
    }
    let mut succ: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &w in &part.independent {
        if w == r || part.in_clique(r) && g.has_edge(w, r) {
            continue;
        }
        let p = rt.parent(w).expect("non-root vertex has a parent");
        for &x in g.neighbors(w) {
            if x == p {
                continue;
            }
            if block[p] > block[x] || Some(x) == first {
                return Ok(None);
            }
            if block[p] == block[x] {
                succ[p].push(x);
                indeg[x] += 1;
            }
        }
    }
    let mut prefix = vec![r];
    for b in 0..2 {
        let members: Vec<Vertex> = part.clique.iter().copied().filter(|&c| block[c] == b).collect();
        let mut queue: Vec<Vertex> = Vec::with_capacity(members.len());
        if b == 0 {
            if let Some(f) = first {
                queue.push(f);
            }
        }
        queue.extend(members.iter().copied().filter(|&c| indeg[c] == 0 && Some(c) != first));
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &x in &succ[v] {
                indeg[x] -= 1;
                if indeg[x] == 0 {
                    queue.push(x);
                }
            }
        }
        if queue.len() != members.len() {
            return Ok(None);
        }
        prefix.extend(queue);
    }
    Ok(Some(prefix))
}

/// L-tree recognition on split graphs for LBFS, LDFS, MCS and MNS.
///
/// Such a tree is a caterpillar whose spine, read from the root, is the
/// clique prefix of a search: it contains the whole clique, no leaf sees a
/// spine vertex after its attachment point, and every independent spine
/// vertex is reached exactly when the clique vertices before it are done
/// and is followed by its remaining neighbors without a gap.
pub fn recognize_split_l_tree(g: &Graph, t: &SpanningTree, kind: SearchKind) -> Result<RecognitionResult> {
    let partition = require_split(g, t)?;
    recognize_split_l_tree_with(g, t, kind, &partition)
}

pub(crate) fn recognize_split_l_tree_with(
    g: &Graph,
    t: &SpanningTree,
    kind: SearchKind,
    part: &SplitPartition,
) -> Result<RecognitionResult> {
    use SearchKind::*;
    if !matches!(kind, Lbfs | Ldfs | Mcs | Mns) {
        return Err(unsupported(kind));
    }
    let Some(core) = caterpillar_core(t) else {
        return Ok(RecognitionResult::no(0, 0));
    };
    let spines = spine_variants(g, t, part, &core);
    for (i, spine) in spines.iter().enumerate() {
        if spine_is_clique_prefix(g, t, part, spine) {
            return Ok(witness(g, kind, spine, i + 1));
        }
    }
    Ok(RecognitionResult::no(spines.len(), 0))
}

// Candidate spines: the core path in both directions, optionally extended by
// a leaf at the start and a clique leaf at the end. The path must contain the
// clique, and an independent vertex can only start it if its degree lets it
// be followed by a clique vertex it is not the L-parent of.
fn spine_variants(g: &Graph, t: &SpanningTree, part: &SplitPartition, core: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut on_core = vec![false; g.vertex_count()];
    for &v in core {
        on_core[v] = true;
    }
    let leaves_at = |v: Vertex| -> Vec<Vertex> {
        t.neighbors(v).iter().copied().filter(|&w| !on_core[w]).collect()
    };
    let mut orientations = vec![core.to_vec()];
    if core.len() > 1 {
        orientations.push(core.iter().rev().copied().collect());
    }
    let mut out = Vec::new();
    for path in orientations {
        let s = path[0];
        let e = *path.last().expect("non-empty core");
        let start_leaves = leaves_at(s);
        let end_leaves = leaves_at(e);
        let mut starts: Vec<Option<Vertex>> = vec![None];
        starts.extend(start_leaves.iter().copied().filter(|&w| part.in_clique(w)).take(2).map(Some));
        if let Some(&w) = start_leaves.iter().find(|&&w| !part.in_clique(w) && g.degree(w) >= 2) {
            starts.push(Some(w));
        }
        let mut ends: Vec<Option<Vertex>> = vec![None];
        ends.extend(end_leaves.iter().copied().filter(|&w| part.in_clique(w)).take(2).map(Some));
        for &a in &starts {
            for &b in &ends {
                if a.is_some() && a == b {
                    continue;
                }
                let mut spine = Vec::with_capacity(path.len() + 2);
                spine.extend(a);
                spine.extend(path.iter().copied());
                spine.extend(b);
                if !out.contains(&spine) {
                    out.push(spine);
                }
            }
        }
    }
    out
}

fn spine_is_clique_prefix(g: &Graph, t: &SpanningTree, part: &SplitPartition, spine: &[Vertex]) -> bool {
    let n = g.vertex_count();
    // 1-based spine position, 0 off the spine
    let mut pos = vec![0usize; n];
    for (i, &v) in spine.iter().enumerate() {
        pos[v] = i + 1;
    }
    if part.clique.iter().any(|&c| pos[c] == 0) {
        return false;
    }
    for w in g.vertices() {
        if pos[w] != 0 {
            continue;
        }
        let Some(&a) = t.neighbors(w).iter().find(|&&x| pos[x] != 0) else {
            return false;
        };
        if g.neighbors(w).iter().any(|&x| pos[x] > pos[a]) {
            return false;
        }
    }
    let mut clique_before = 0;
    for (i, &v) in spine.iter().enumerate() {
        let i = i + 1;
        if part.in_clique(v) {
            clique_before += 1;
            continue;
        }
        let nbrs = g.neighbors(v);
        let earlier = nbrs.iter().filter(|&&x| pos[x] < i).count();
        if earlier != clique_before {
            return false;
        }
        let reach = i + nbrs.len() - earlier;
        if nbrs.iter().any(|&x| pos[x] > reach) {
            return false;
        }
    }
    true
}
