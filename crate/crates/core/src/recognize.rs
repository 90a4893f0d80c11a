//! Search tree recognition on general graphs.
//!
//! Every recognizer works root by root. [`constrained_search`] simulates a
//! search from a fixed root and only ever picks vertices whose F- or L-parent
//! would be their parent in the queried tree; in backtracking mode it explores
//! all such choices and is exact. The LDFS L-tree recognizer uses the greedy
//! mode, which needs no backtracking, and the DFS L-tree recognizer decides
//! with the palm-tree condition before searching for a witness.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{
    bfs_distances, require_spanning_tree, root_tree, Graph, RootedTree, SpanningTree, Vertex,
    VertexOrdering,
};
use crate::search::{validate_order, LabelState, SearchKind};
use crate::split;
use crate::tree::{build_f_tree, build_l_tree};

/// Which search tree of an ordering is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// First-in tree: each vertex joins its earliest visited neighbor.
    F,
    /// Last-in tree: each vertex joins its latest earlier neighbor.
    L,
}

impl Side {
    pub fn build_tree(self, g: &Graph, sigma: &VertexOrdering) -> Result<SpanningTree> {
        match self {
            Side::F => build_f_tree(g, sigma),
            Side::L => build_l_tree(g, sigma),
        }
    }

    /// The parent `v` would get if it were visited next in `st`.
    pub fn pending_parent(self, st: &LabelState, v: Vertex) -> Option<Vertex> {
        match self {
            Side::F => st.earliest_visited_neighbor(v),
            Side::L => st.latest_visited_neighbor(v),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::F => "f",
            Side::L => "l",
        })
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "f" => Ok(Side::F),
            "l" => Ok(Side::L),
            _ => Err(format!("unknown tree side `{s}` (expected f or l)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Take the smallest admissible vertex; fail when none is admissible.
    Greedy,
    /// Explore every admissible vertex depth-first.
    Backtrack,
}

/// Limit on the number of search nodes a recognition may expand.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_nodes: None }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes: Some(max_nodes) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Yes,
    No,
    /// The budget ran out before the question was settled.
    Inconclusive,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Yes => "yes",
            Outcome::No => "no",
            Outcome::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub root: Vertex,
    pub ordering: VertexOrdering,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionResult {
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    pub roots_tried: usize,
    pub nodes_expanded: u64,
}

impl RecognitionResult {
    pub fn recognized(&self) -> bool {
        self.outcome == Outcome::Yes
    }

    pub(crate) fn no(roots_tried: usize, nodes_expanded: u64) -> Self {
        RecognitionResult { outcome: Outcome::No, witness: None, roots_tried, nodes_expanded }
    }

    pub(crate) fn yes(root: Vertex, ordering: VertexOrdering, roots_tried: usize, nodes: u64) -> Self {
        RecognitionResult {
            outcome: Outcome::Yes,
            witness: Some(Witness { root, ordering }),
            roots_tried,
            nodes_expanded: nodes,
        }
    }

    /// Replays the witness: it must be a valid `kind` ordering starting at
    /// the reported root whose `side` tree is `t`. Vacuously true when there
    /// is no witness.
    pub fn verify(&self, g: &Graph, t: &SpanningTree, kind: SearchKind, side: Side) -> Result<bool> {
        let Some(w) = &self.witness else {
            return Ok(true);
        };
        Ok(w.ordering.first() == Some(w.root)
            && validate_order(g, kind, &w.ordering)?
            && side.build_tree(g, &w.ordering)? == *t)
    }
}

/// Result of a single-root constrained search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstrainedOutcome {
    Found(VertexOrdering),
    NotFound,
    Inconclusive,
}

struct Engine<'a> {
    g: &'a Graph,
    tree: RootedTree,
    kind: SearchKind,
    side: Side,
    nodes: u64,
    limit: Option<u64>,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, t: &SpanningTree, kind: SearchKind, side: Side, root: Vertex) -> Result<Self> {
        Ok(Engine { g, tree: root_tree(t, root)?, kind, side, nodes: 0, limit: None })
    }

    fn out_of_budget(&self) -> bool {
        self.limit.is_some_and(|l| self.nodes > l)
    }

    /// Visits `v` and reports whether the tree can still come out right.
    /// A vertex's F-parent is fixed by its first visited neighbor, and its
    /// L-parent is lost for good once a later neighbor follows the tree
    /// parent, so both are checked as soon as `v` touches them.
    fn visit(&mut self, st: &mut LabelState, v: Vertex) -> bool {
        self.nodes += 1;
        st.visit(self.g, v);
        self.g.neighbors(v).iter().all(|&w| {
            if st.is_visited(w) {
                return true;
            }
            let parent = self.tree.parent(w);
            match self.side {
                Side::F => st.earliest_visited_neighbor(w) != Some(v) || parent == Some(v),
                Side::L => match parent {
                    Some(p) => p == v || !st.is_visited(p),
                    None => false,
                },
            }
        })
    }

    fn admissible(&self, st: &LabelState) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = st
            .candidates()
            .unwrap_or_default()
            .into_iter()
            .filter(|&v| {
                let parent = self.tree.parent(v);
                parent.is_some() && self.side.pending_parent(st, v) == parent
            })
            .collect();
        out.sort_unstable();
        out
    }

    fn run(&mut self, mode: Mode) -> ConstrainedOutcome {
        let mut st = LabelState::new(self.g, self.kind);
        if !self.visit(&mut st, self.tree.root()) {
            return ConstrainedOutcome::NotFound;
        }
        match mode {
            Mode::Greedy => self.greedy(st),
            Mode::Backtrack => self.backtrack(st),
        }
    }

    fn greedy(&mut self, mut st: LabelState) -> ConstrainedOutcome {
        while !st.is_complete() {
            if self.out_of_budget() {
                return ConstrainedOutcome::Inconclusive;
            }
            let Some(&v) = self.admissible(&st).first() else {
                return ConstrainedOutcome::NotFound;
            };
            if !self.visit(&mut st, v) {
                return ConstrainedOutcome::NotFound;
            }
        }
        ConstrainedOutcome::Found(st.into_ordering())
    }

    fn backtrack(&mut self, st: LabelState) -> ConstrainedOutcome {
        if st.is_complete() {
            return ConstrainedOutcome::Found(st.into_ordering());
        }
        struct Frame {
            state: Option<LabelState>,
            choices: Vec<Vertex>,
            next: usize,
        }
        let choices = self.admissible(&st);
        let mut stack = vec![Frame { state: Some(st), choices, next: 0 }];
        while let Some(top) = stack.last_mut() {
            if top.next >= top.choices.len() {
                stack.pop();
                continue;
            }
            if self.out_of_budget() {
                return ConstrainedOutcome::Inconclusive;
            }
            let v = top.choices[top.next];
            top.next += 1;
            // The last choice of a frame takes its state instead of cloning.
            let mut child = if top.next == top.choices.len() {
                top.state.take().expect("state present until last choice")
            } else {
                top.state.clone().expect("state present until last choice")
            };
            if !self.visit(&mut child, v) {
                continue;
            }
            if child.is_complete() {
                return ConstrainedOutcome::Found(child.into_ordering());
            }
            let choices = self.admissible(&child);
            if !choices.is_empty() {
                stack.push(Frame { state: Some(child), choices, next: 0 });
            }
        }
        ConstrainedOutcome::NotFound
    }
}

fn constrained_counted(
    g: &Graph,
    t: &SpanningTree,
    kind: SearchKind,
    side: Side,
    root: Vertex,
    mode: Mode,
    limit: Option<u64>,
) -> Result<(ConstrainedOutcome, u64)> {
    let mut engine = Engine::new(g, t, kind, side, root)?;
    engine.limit = limit;
    let outcome = engine.run(mode);
    Ok((outcome, engine.nodes))
}

/// Simulates `kind` from `root`, allowing only vertices whose `side` parent
/// equals their parent in `t` rooted at `root`. Any returned ordering is a
/// valid `kind` ordering whose `side` tree is `t`.
pub fn constrained_search(
    g: &Graph,
    t: &SpanningTree,
    kind: SearchKind,
    side: Side,
    root: Vertex,
    mode: Mode,
    budget: Budget,
) -> Result<ConstrainedOutcome> {
    require_spanning_tree(g, t)?;
    g.check_vertex(root)?;
    Ok(constrained_counted(g, t, kind, side, root, mode, budget.max_nodes)?.0)
}

/// Tries `roots` in order with a shared node budget.
fn per_root<I>(
    g: &Graph,
    t: &SpanningTree,
    kind: SearchKind,
    side: Side,
    mode: Mode,
    budget: Budget,
    roots: I,
) -> Result<RecognitionResult>
where
    I: IntoIterator<Item = Vertex>,
{
    let mut nodes = 0u64;
    let mut tried = 0;
    let mut inconclusive = false;
    for root in roots {
        tried += 1;
        let remaining = match budget.max_nodes {
            Some(max) if nodes >= max => {
                inconclusive = true;
                break;
            }
            Some(max) => Some(max - nodes),
            None => None,
        };
        let (outcome, used) = constrained_counted(g, t, kind, side, root, mode, remaining)?;
        nodes += used;
        match outcome {
            ConstrainedOutcome::Found(ordering) => {
                return Ok(RecognitionResult::yes(root, ordering, tried, nodes));
            }
            ConstrainedOutcome::Inconclusive => inconclusive = true,
            ConstrainedOutcome::NotFound => {}
        }
    }
    if inconclusive {
        Ok(RecognitionResult {
            outcome: Outcome::Inconclusive,
            witness: None,
            roots_tried: tried,
            nodes_expanded: nodes,
        })
    } else {
        Ok(RecognitionResult::no(tried, nodes))
    }
}

/// L-tree recognition for LDFS: the greedy constrained LDFS from every root.
pub fn recognize_ldfs_l_tree(g: &Graph, t: &SpanningTree) -> Result<RecognitionResult> {
    require_spanning_tree(g, t)?;
    per_root(g, t, SearchKind::Ldfs, Side::L, Mode::Greedy, Budget::unlimited(), g.vertices())
}

/// Every non-tree edge of `g` joins an ancestor and a descendant of `rt`.
pub fn satisfies_palm_condition(g: &Graph, rt: &RootedTree) -> bool {
    g.edges().all(|(u, v)| rt.is_ancestor(u, v) || rt.is_ancestor(v, u))
}

/// L-tree recognition for DFS via the palm-tree condition.
pub fn recognize_dfs_l_tree(g: &Graph, t: &SpanningTree) -> Result<RecognitionResult> {
    require_spanning_tree(g, t)?;
    let mut nodes = 0;
    let mut tried = 0;
    for root in g.vertices() {
        tried += 1;
        let rt = root_tree(t, root)?;
        if !satisfies_palm_condition(g, &rt) {
            continue;
        }
        let (outcome, used) =
            constrained_counted(g, t, SearchKind::Dfs, Side::L, root, Mode::Backtrack, None)?;
        nodes += used;
        if let ConstrainedOutcome::Found(ordering) = outcome {
            return Ok(RecognitionResult::yes(root, ordering, tried, nodes));
        }
        debug_assert!(false, "palm root {root} admits no DFS witness");
    }
    Ok(RecognitionResult::no(tried, nodes))
}

/// Roots whose tree depths equal graph distances. An F-tree of BFS always
/// satisfies this, since each vertex hangs off a neighbor one layer up.
pub fn bfs_layer_roots(g: &Graph, t: &SpanningTree) -> Result<Vec<Vertex>> {
    require_spanning_tree(g, t)?;
    let mut roots = Vec::new();
    for root in g.vertices() {
        let rt = root_tree(t, root)?;
        let dist = bfs_distances(g, root);
        if g.vertices().all(|v| dist[v] == Some(rt.depth(v))) {
            roots.push(root);
        }
    }
    Ok(roots)
}

/// F-tree recognition for BFS: distance filter, then backtracking.
pub fn recognize_bfs_f_tree(g: &Graph, t: &SpanningTree, budget: Budget) -> Result<RecognitionResult> {
    let roots = bfs_layer_roots(g, t)?;
    let mut result = per_root(g, t, SearchKind::Bfs, Side::F, Mode::Backtrack, budget, roots)?;
    result.roots_tried = g.vertex_count();
    Ok(result)
}

/// Exact recognition for any search and side by backtracking from every root.
pub fn recognize_by_backtracking(
    g: &Graph,
    t: &SpanningTree,
    kind: SearchKind,
    side: Side,
    budget: Budget,
) -> Result<RecognitionResult> {
    require_spanning_tree(g, t)?;
    per_root(g, t, kind, side, Mode::Backtrack, budget, g.vertices())
}

/// Decides whether `t` is the `side` tree of some `kind` search on `g`,
/// picking the cheapest method that applies.
pub fn recognize(
    g: &Graph,
    t: &SpanningTree,
    kind: SearchKind,
    side: Side,
    budget: Budget,
) -> Result<RecognitionResult> {
    require_spanning_tree(g, t)?;
    use SearchKind::*;
    if let Some(partition) = split::split_partition(g) {
        match (kind, side) {
            (Bfs | Lbfs | Ldfs | Mcs | Mns, Side::F) => {
                return split::recognize_split_f_tree_with(g, t, kind, &partition);
            }
            (Lbfs | Ldfs | Mcs | Mns, Side::L) => {
                return split::recognize_split_l_tree_with(g, t, kind, &partition);
            }
            _ => {}
        }
    }
    match (kind, side) {
        (Bfs, Side::F) => recognize_bfs_f_tree(g, t, budget),
        (Dfs, Side::L) => recognize_dfs_l_tree(g, t),
        (Ldfs, Side::L) => recognize_ldfs_l_tree(g, t),
        _ => recognize_by_backtracking(g, t, kind, side, budget),
    }
}

pub(crate) fn unsupported(kind: SearchKind) -> Error {
    Error::UnsupportedKind(kind)
}
