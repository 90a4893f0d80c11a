//! The labelled graph searches: generic search, BFS, DFS, LBFS, LDFS, MCS and
//! MNS.
//!
//! [`LabelState`] keeps the labels of unvisited vertices up to date as the
//! search advances and answers which vertices a valid next step may pick.
//! [`candidates_from_prefix`] answers the same question from scratch, straight
//! from the definition of each search; [`validate_order`] and the oracle use
//! this second route so that they do not share code with the incremental one.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexOrdering};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SearchKind {
    /// Generic connected search: any vertex adjacent to a visited one.
    Gen,
    Bfs,
    Dfs,
    Lbfs,
    Ldfs,
    Mcs,
    Mns,
}

impl SearchKind {
    pub const ALL: [SearchKind; 7] = [
        SearchKind::Gen,
        SearchKind::Bfs,
        SearchKind::Dfs,
        SearchKind::Lbfs,
        SearchKind::Ldfs,
        SearchKind::Mcs,
        SearchKind::Mns,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SearchKind::Gen => "gen",
            SearchKind::Bfs => "bfs",
            SearchKind::Dfs => "dfs",
            SearchKind::Lbfs => "lbfs",
            SearchKind::Ldfs => "ldfs",
            SearchKind::Mcs => "mcs",
            SearchKind::Mns => "mns",
        }
    }
}

impl fmt::Display for SearchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        SearchKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown search kind `{s}`"))
    }
}

/// How `run_search` picks among several valid next vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    #[default]
    MinId,
    MaxId,
    /// Earlier vertices in the ordering have higher priority.
    Explicit(VertexOrdering),
}

impl TieBreak {
    pub fn choose(&self, candidates: &[Vertex]) -> Option<Vertex> {
        match self {
            TieBreak::MinId => candidates.iter().copied().min(),
            TieBreak::MaxId => candidates.iter().copied().max(),
            TieBreak::Explicit(priority) => {
                candidates.iter().copied().min_by_key(|&v| priority.position(v))
            }
        }
    }
}

#[derive(Clone, Debug)]
enum Labels {
    Reached(Vec<bool>),
    /// Position of the earliest visited neighbor.
    FirstNeighbor(Vec<Option<usize>>),
    /// Position of the latest visited neighbor.
    LastNeighbor(Vec<Option<usize>>),
    /// `n - i` appended for every visited neighbor at step `i`.
    Lex(Vec<Vec<usize>>),
    /// Step `i` recorded for every visited neighbor, compared most recent first.
    LexRecent(Vec<Vec<usize>>),
    Count(Vec<usize>),
    /// Steps of visited neighbors, ascending.
    Sets(Vec<Vec<usize>>),
}

fn is_subset(small: &[usize], large: &[usize]) -> bool {
    let mut it = large.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

// A label gains at most one entry per neighbor.
fn sized_labels(g: &Graph) -> Vec<Vec<usize>> {
    g.vertices().map(|v| Vec::with_capacity(g.degree(v))).collect()
}

/// Incrementally maintained labels of a partially executed search.
#[derive(Clone, Debug)]
pub struct LabelState {
    kind: SearchKind,
    visited: Vec<Vertex>,
    // 1-based step at which a vertex was visited, 0 while unvisited
    position: Vec<usize>,
    first_neighbor: Vec<Option<Vertex>>,
    last_neighbor: Vec<Option<Vertex>>,
    labels: Labels,
}

impl LabelState {
    pub fn new(g: &Graph, kind: SearchKind) -> Self {
        let n = g.vertex_count();
        let labels = match kind {
            SearchKind::Gen => Labels::Reached(vec![false; n]),
            SearchKind::Bfs => Labels::FirstNeighbor(vec![None; n]),
            SearchKind::Dfs => Labels::LastNeighbor(vec![None; n]),
            SearchKind::Lbfs => Labels::Lex(sized_labels(g)),
            SearchKind::Ldfs => Labels::LexRecent(sized_labels(g)),
            SearchKind::Mcs => Labels::Count(vec![0; n]),
            SearchKind::Mns => Labels::Sets(sized_labels(g)),
        };
        LabelState {
            kind,
            visited: Vec::with_capacity(n),
            position: vec![0; n],
            first_neighbor: vec![None; n],
            last_neighbor: vec![None; n],
            labels,
        }
    }

    pub fn kind(&self) -> SearchKind {
        self.kind
    }

    pub fn visited(&self) -> &[Vertex] {
        &self.visited
    }

    pub fn is_visited(&self, v: Vertex) -> bool {
        self.position[v] != 0
    }

    pub fn is_complete(&self) -> bool {
        self.visited.len() == self.position.len()
    }

    /// Visited neighbor with the smallest step, i.e. the F-tree parent `v`
    /// would receive if it were visited next.
    pub fn earliest_visited_neighbor(&self, v: Vertex) -> Option<Vertex> {
        self.first_neighbor[v]
    }

    /// Visited neighbor with the largest step (the L-tree parent).
    pub fn latest_visited_neighbor(&self, v: Vertex) -> Option<Vertex> {
        self.last_neighbor[v]
    }

    /// Marks `v` as the next vertex of the search and updates the labels of
    /// its unvisited neighbors.
    pub fn visit(&mut self, g: &Graph, v: Vertex) {
        assert!(!self.is_visited(v), "vertex {v} visited twice");
        let n = self.position.len();
        let step = self.visited.len() + 1;
        self.position[v] = step;
        self.visited.push(v);
        for &w in g.neighbors(v) {
            if self.position[w] != 0 {
                continue;
            }
            self.first_neighbor[w].get_or_insert(v);
            self.last_neighbor[w] = Some(v);
            match &mut self.labels {
                Labels::Reached(r) => r[w] = true,
                Labels::FirstNeighbor(p) => {
                    p[w].get_or_insert(step);
                }
                Labels::LastNeighbor(p) => p[w] = Some(step),
                Labels::Lex(l) => l[w].push(n - step),
                Labels::LexRecent(l) => l[w].push(step),
                Labels::Count(c) => c[w] += 1,
                Labels::Sets(s) => s[w].push(step),
            }
        }
    }

    fn reached(&self, v: Vertex) -> bool {
        self.first_neighbor[v].is_some()
    }

    // Total preorder used by every kind except MNS: `Greater` means `a` is
    // preferred over `b`.
    fn compare(&self, a: Vertex, b: Vertex) -> Ordering {
        match &self.labels {
            Labels::Reached(r) => r[a].cmp(&r[b]),
            Labels::FirstNeighbor(p) => match (p[a], p[b]) {
                (Some(x), Some(y)) => y.cmp(&x),
                (x, y) => x.is_some().cmp(&y.is_some()),
            },
            Labels::LastNeighbor(p) => p[a].cmp(&p[b]),
            Labels::Lex(l) => l[a].cmp(&l[b]),
            Labels::LexRecent(l) => l[a].iter().rev().cmp(l[b].iter().rev()),
            Labels::Count(c) => c[a].cmp(&c[b]),
            Labels::Sets(s) => s[a].len().cmp(&s[b].len()),
        }
    }

    /// Exactly the vertices a valid next step of this search may choose.
    pub fn candidates(&self) -> Result<Vec<Vertex>> {
        if self.is_complete() {
            return Err(Error::Exhausted);
        }
        let unvisited: Vec<Vertex> =
            (0..self.position.len()).filter(|&v| !self.is_visited(v)).collect();
        let reached: Vec<Vertex> = unvisited.iter().copied().filter(|&v| self.reached(v)).collect();
        // Before the first step (or if nothing is reachable) every unvisited
        // vertex may start the search.
        if reached.is_empty() {
            return Ok(unvisited);
        }
        if let Labels::Sets(sets) = &self.labels {
            return Ok(inclusion_maximal(&reached, |v| &sets[v]));
        }
        if let Labels::Reached(_) = self.labels {
            return Ok(reached);
        }
        let best = reached
            .iter()
            .copied()
            .reduce(|a, b| if self.compare(b, a) == Ordering::Greater { b } else { a })
            .expect("non-empty");
        Ok(reached.into_iter().filter(|&v| self.compare(v, best) == Ordering::Equal).collect())
    }

    /// Visits every remaining vertex in label order. Only valid when no
    /// unvisited vertex has an unvisited neighbor, so the remaining labels can
    /// no longer change.
    pub fn complete_frozen(&mut self, g: &Graph) {
        let mut rest: Vec<Vertex> =
            (0..self.position.len()).filter(|&v| !self.is_visited(v)).collect();
        assert!(
            rest.iter().all(|&v| g.neighbors(v).iter().all(|&w| self.is_visited(w))),
            "complete_frozen called while labels can still change"
        );
        rest.sort_by(|&a, &b| self.compare(b, a).then(a.cmp(&b)));
        for v in rest {
            self.visit(g, v);
        }
    }

    pub fn into_ordering(self) -> VertexOrdering {
        assert!(self.is_complete(), "search is not finished");
        VertexOrdering::new(self.visited).expect("visited list is a permutation")
    }
}

fn inclusion_maximal<'a, F>(reached: &[Vertex], label: F) -> Vec<Vertex>
where
    F: Fn(Vertex) -> &'a [usize],
{
    let max_len = reached.iter().map(|&v| label(v).len()).max().unwrap_or(0);
    reached
        .iter()
        .copied()
        .filter(|&v| {
            let lv = label(v);
            lv.len() == max_len
                || !reached.iter().any(|&u| label(u).len() > lv.len() && is_subset(lv, label(u)))
        })
        .collect()
}

/// Candidate set of the next step; see [`LabelState::candidates`].
pub fn step_candidates(st: &LabelState) -> Result<Vec<Vertex>> {
    st.candidates()
}

/// Runs the search from `start`, resolving ties with `tie_break`.
pub fn run_search(
    g: &Graph,
    kind: SearchKind,
    start: Vertex,
    tie_break: &TieBreak,
) -> Result<VertexOrdering> {
    g.check_vertex(start)?;
    let mut st = LabelState::new(g, kind);
    st.visit(g, start);
    while !st.is_complete() {
        let candidates = st.candidates()?;
        let v = tie_break.choose(&candidates).expect("candidate set is never empty");
        st.visit(g, v);
    }
    Ok(st.into_ordering())
}

/// Candidate set of the next step recomputed from the visited prefix alone.
pub fn candidates_from_prefix(g: &Graph, kind: SearchKind, prefix: &[Vertex]) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut position = vec![0usize; n];
    for (i, &v) in prefix.iter().enumerate() {
        position[v] = i + 1;
    }
    let unvisited: Vec<Vertex> = (0..n).filter(|&v| position[v] == 0).collect();
    // Ascending positions of the visited neighbors of each unvisited vertex.
    let seen: Vec<(Vertex, Vec<usize>)> = unvisited
        .iter()
        .map(|&v| {
            let mut ps: Vec<usize> =
                g.neighbors(v).iter().map(|&w| position[w]).filter(|&p| p != 0).collect();
            ps.sort_unstable();
            (v, ps)
        })
        .filter(|(_, ps)| !ps.is_empty())
        .collect();
    if seen.is_empty() {
        return unvisited;
    }
    let pick_max = |key: &dyn Fn(&[usize]) -> Vec<usize>| -> Vec<Vertex> {
        let keyed: Vec<(Vertex, Vec<usize>)> = seen.iter().map(|(v, ps)| (*v, key(ps))).collect();
        let best = keyed.iter().map(|(_, k)| k.clone()).max().expect("non-empty");
        keyed.into_iter().filter(|(_, k)| *k == best).map(|(v, _)| v).collect()
    };
    match kind {
        SearchKind::Gen => seen.iter().map(|(v, _)| *v).collect(),
        // smallest earliest position wins, encoded as a larger key
        SearchKind::Bfs => pick_max(&|ps| vec![n - ps[0]]),
        SearchKind::Dfs => pick_max(&|ps| vec![ps[ps.len() - 1]]),
        SearchKind::Lbfs => pick_max(&|ps| ps.iter().map(|p| n - p).collect()),
        SearchKind::Ldfs => pick_max(&|ps| ps.iter().rev().copied().collect()),
        SearchKind::Mcs => pick_max(&|ps| vec![ps.len()]),
        SearchKind::Mns => seen
            .iter()
            .filter(|(_, ps)| {
                !seen.iter().any(|(_, qs)| qs.len() > ps.len() && is_subset(ps, qs))
            })
            .map(|(v, _)| *v)
            .collect(),
    }
}

/// True iff every `sigma(i)` is a valid choice after `sigma(1..i)`.
pub fn validate_order(g: &Graph, kind: SearchKind, sigma: &VertexOrdering) -> Result<bool> {
    if sigma.len() != g.vertex_count() {
        return Err(Error::NotPermutation);
    }
    let order = sigma.as_slice();
    Ok((0..order.len()).all(|i| candidates_from_prefix(g, kind, &order[..i]).contains(&order[i])))
}
