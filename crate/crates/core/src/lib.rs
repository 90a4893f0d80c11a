//! Graph searches and their search trees.
//!
//! Implements the searches GEN, BFS, DFS, LBFS, LDFS, MCS and MNS, builds
//! their first-in (F) and last-in (L) trees, and decides whether a given
//! spanning tree is such a tree. Vertices are `0..n` internally; file formats,
//! the command line and `Display` output use 1-based ids.

pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod recognize;
pub mod reduction;
pub mod search;
pub mod split;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{
    bfs_distances, complement, induced_subgraph, root_tree, validate_spanning_tree, Graph, RootedTree,
    SpanningTree, Vertex, VertexOrdering,
};
pub use recognize::{
    constrained_search, recognize, recognize_bfs_f_tree, recognize_by_backtracking, recognize_dfs_l_tree,
    recognize_ldfs_l_tree, Budget, ConstrainedOutcome, Mode, Outcome, RecognitionResult, Side, Witness,
};
pub use search::{candidates_from_prefix, run_search, step_candidates, validate_order, LabelState, SearchKind, TieBreak};
pub use split::{recognize_split_f_tree, recognize_split_l_tree, split_partition, SplitPartition};
pub use tree::{build_f_tree, build_l_tree, caterpillar_core, caterpillar_decompositions, CaterpillarDecomposition};
