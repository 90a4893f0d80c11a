//! Small named instances shipped with the crate.

use crate::graph::{Graph, SpanningTree};
use crate::io::{parse_dimacs_cnf, parse_graph_file, parse_tree_file};
use crate::reduction::CnfFormula;

macro_rules! graph_fixture {
    ($($(#[$doc:meta])* $name:ident => $file:literal;)*) => {$(
        $(#[$doc])*
        pub fn $name() -> Graph {
            parse_graph_file(include_str!(concat!("../fixtures/", $file, ".graph")))
                .expect("fixture parses")
        }
    )*};
}

macro_rules! tree_fixture {
    ($($(#[$doc:meta])* $name:ident => $file:literal;)*) => {$(
        $(#[$doc])*
        pub fn $name() -> (Graph, SpanningTree) {
            let g = parse_graph_file(include_str!(concat!("../fixtures/", $file, ".graph")))
                .expect("fixture parses");
            let t = parse_tree_file(include_str!(concat!("../fixtures/", $file, ".tree")), &g)
                .expect("fixture parses");
            (g, t)
        }
    )*};
}

graph_fixture! {
    p4 => "p4";
    c4 => "c4";
    c5 => "c5";
    k3 => "k3";
    k4 => "k4";
    /// Triangle 1 2 3 with pendant 4 on 3.
    k3p => "k3p";
    /// Clique {1, 2, 3}, independent set {4, 5}.
    split2 => "split2";
}

tree_fixture! {
    /// Vertices r a b x y are 1..5; the tree is {ra, rb, ax, by}.
    apex22 => "apex22";
    /// A BFS F-tree that is neither an LBFS nor an MNS F-tree.
    fig1a => "fig1a";
    /// An MNS and BFS F-tree that is not an LBFS F-tree.
    fig1b => "fig1b";
    /// An F-tree of MNS, BFS and LBFS that is not an MCS F-tree.
    fig1c => "fig1c";
    /// A DFS L-tree that is not an LDFS L-tree.
    fig1d => "fig1d";
}

/// (¬x1 ∨ x2 ∨ ¬x3)(¬x1 ∨ ¬x3 ∨ ¬x4)(¬x1 ∨ x3 ∨ ¬x4).
pub fn fig2_formula() -> CnfFormula {
    parse_dimacs_cnf(include_str!("../fixtures/fig2.cnf"), true).expect("fixture parses")
}

/// (¬x1 ∨ x2 ∨ ¬x3)(x1 ∨ ¬x3 ∨ x4)(¬x1 ∨ ¬x3 ∨ ¬x4).
pub fn fig3_formula() -> CnfFormula {
    parse_dimacs_cnf(include_str!("../fixtures/fig3.cnf"), true).expect("fixture parses")
}

/// (x1 ∨ x1 ∨ x1).
pub fn sat1_formula() -> CnfFormula {
    parse_dimacs_cnf(include_str!("../fixtures/sat1.cnf"), true).expect("fixture parses")
}

/// (x1 ∨ x1 ∨ x1)(¬x1 ∨ ¬x1 ∨ ¬x1).
pub fn unsat1_formula() -> CnfFormula {
    parse_dimacs_cnf(include_str!("../fixtures/unsat1.cnf"), true).expect("fixture parses")
}
