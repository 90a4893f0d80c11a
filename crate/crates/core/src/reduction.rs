//! Gadget instances encoding 3-SAT as F-tree recognition.
//!
//! Vertex numbering is fixed: the `2k` literal vertices come first (`x_i` at
//! `i - 1`, `¬x_i` at `k + i - 1`), then the per-clause gadgets, then the
//! special vertices. Roles are recorded alongside.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, SpanningTree, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    /// 1-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn from_signed(lit: i64) -> Self {
        Literal { var: lit.unsigned_abs() as usize, positive: lit > 0 }
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "~x{}", self.var)
        }
    }
}

/// A 3-CNF formula. Literals may repeat within a clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    /// Builds a formula from signed 1-based literals (`-2` is `¬x2`).
    pub fn new(variable_count: usize, clauses: &[[i64; 3]]) -> Result<Self> {
        let mut out = Vec::with_capacity(clauses.len());
        for (index, clause) in clauses.iter().enumerate() {
            let mut lits = [Literal { var: 1, positive: true }; 3];
            for (slot, &lit) in clause.iter().enumerate() {
                if lit == 0 || lit.unsigned_abs() as usize > variable_count {
                    return Err(Error::MalformedClause {
                        index: index + 1,
                        reason: format!("literal {lit} outside variables 1..={variable_count}"),
                    });
                }
                lits[slot] = Literal::from_signed(lit);
            }
            out.push(lits);
        }
        Ok(CnfFormula { variable_count, clauses: out })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.eval(assignment)))
    }

    /// Vertex of `lit` in either reduction instance.
    pub fn literal_vertex(&self, lit: Literal) -> Vertex {
        if lit.positive {
            lit.var - 1
        } else {
            self.variable_count + lit.var - 1
        }
    }

    fn clause_vertices(&self, j: usize) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.clauses[j].iter().map(|&l| self.literal_vertex(l)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// Role of a vertex in a reduction instance. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Literal(Literal),
    ClauseC(usize),
    ClauseA(usize),
    ClauseT(usize),
    R,
    P,
    Q,
    U,
    A,
    B,
    T,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Literal(l) => write!(f, "{l}"),
            Role::ClauseC(j) => write!(f, "c{j}"),
            Role::ClauseA(j) => write!(f, "a{j}"),
            Role::ClauseT(j) => write!(f, "t{j}"),
            Role::R => f.write_str("r"),
            Role::P => f.write_str("p"),
            Role::Q => f.write_str("q"),
            Role::U => f.write_str("u"),
            Role::A => f.write_str("a"),
            Role::B => f.write_str("b"),
            Role::T => f.write_str("t"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionInstance {
    pub graph: Graph,
    pub tree: SpanningTree,
    /// `roles[v]` is the role of vertex `v`.
    pub roles: Vec<Role>,
}

impl ReductionInstance {
    pub fn vertex_of(&self, role: Role) -> Option<Vertex> {
        self.roles.iter().position(|&r| r == role)
    }
}

fn literal_roles(k: usize) -> Vec<Role> {
    let pos = (1..=k).map(|var| Role::Literal(Literal { var, positive: true }));
    let neg = (1..=k).map(|var| Role::Literal(Literal { var, positive: false }));
    pos.chain(neg).collect()
}

// All pairs of literal vertices except complementary ones.
fn literal_edges(k: usize, edges: &mut Vec<(Vertex, Vertex)>) {
    for u in 0..2 * k {
        for v in u + 1..2 * k {
            if v != u + k {
                edges.push((u, v));
            }
        }
    }
}

fn assemble(n: usize, edges: Vec<(Vertex, Vertex)>, tree: Vec<(Vertex, Vertex)>, roles: Vec<Role>) -> ReductionInstance {
    debug_assert_eq!(roles.len(), n);
    let graph = Graph::new(n, edges).expect("gadget edges are simple");
    let tree = SpanningTree::new(n, tree).expect("gadget tree edges are in range");
    debug_assert!(crate::graph::validate_spanning_tree(&graph, &tree).unwrap_or(false));
    ReductionInstance { graph, tree, roles }
}

/// The instance whose tree is an LBFS F-tree iff `f` is satisfiable.
///
/// Per clause `j` there are vertices `a_j`, `c_j`, `t_j` forming a triangle,
/// with `c_j` joined to its literals. `r` and `u` see everything except the
/// `t_j` and each other, `p` sees the literals and `q`, and `q` sees the
/// literals and every `a_j`. The tree is the star at `r` plus `up` and every
/// `c_j t_j`.
pub fn build_lbfs_instance(f: &CnfFormula) -> ReductionInstance {
    let k = f.variable_count;
    let l = f.clauses.len();
    let a = |j: usize| 2 * k + 3 * j;
    let c = |j: usize| 2 * k + 3 * j + 1;
    let t = |j: usize| 2 * k + 3 * j + 2;
    let r = 2 * k + 3 * l;
    let (p, q, u) = (r + 1, r + 2, r + 3);
    let n = r + 4;

    let mut roles = literal_roles(k);
    for j in 1..=l {
        roles.extend([Role::ClauseA(j), Role::ClauseC(j), Role::ClauseT(j)]);
    }
    roles.extend([Role::R, Role::P, Role::Q, Role::U]);

    let mut edges = Vec::new();
    literal_edges(k, &mut edges);
    for j in 0..l {
        edges.extend([(a(j), c(j)), (c(j), t(j)), (a(j), t(j))]);
        edges.extend(f.clause_vertices(j).into_iter().map(|x| (c(j), x)));
    }
    let mut r_nbrs: Vec<Vertex> = (0..2 * k).collect();
    r_nbrs.extend((0..l).flat_map(|j| [a(j), c(j)]));
    r_nbrs.extend([p, q]);
    for &x in &r_nbrs {
        edges.push((r, x));
        edges.push((u, x));
    }
    for x in 0..2 * k {
        edges.push((p, x));
        edges.push((q, x));
    }
    edges.push((p, q));
    edges.extend((0..l).map(|j| (q, a(j))));

    let mut tree: Vec<(Vertex, Vertex)> = r_nbrs.iter().map(|&x| (r, x)).collect();
    tree.push((u, p));
    tree.extend((0..l).map(|j| (c(j), t(j))));
    assemble(n, edges, tree, roles)
}

/// The instance whose tree is an MNS (and MCS) F-tree iff `f` is
/// satisfiable.
///
/// Clause vertices `c_j` form an independent set and see every literal
/// outside their clause. `r`, `p`, `q` and `a` see all literals and clause
/// vertices, `b` sees the literals, and the specials are further joined by
/// `ab ap aq bq br bt pr qr qt`. The tree is the star at `r` plus `pa` and
/// `bt`.
pub fn build_mns_instance(f: &CnfFormula) -> ReductionInstance {
    let k = f.variable_count;
    let l = f.clauses.len();
    let c = |j: usize| 2 * k + j;
    let r = 2 * k + l;
    let (p, q, a, b, t) = (r + 1, r + 2, r + 3, r + 4, r + 5);
    let n = r + 6;

    let mut roles = literal_roles(k);
    roles.extend((1..=l).map(Role::ClauseC));
    roles.extend([Role::R, Role::P, Role::Q, Role::A, Role::B, Role::T]);

    let mut edges = Vec::new();
    literal_edges(k, &mut edges);
    for j in 0..l {
        let own = f.clause_vertices(j);
        edges.extend((0..2 * k).filter(|x| !own.contains(x)).map(|x| (c(j), x)));
    }
    let xc: Vec<Vertex> = (0..2 * k + l).collect();
    for hub in [r, p, q, a] {
        edges.extend(xc.iter().map(|&x| (hub, x)));
    }
    edges.extend((0..2 * k).map(|x| (b, x)));
    edges.extend([(a, b), (a, p), (a, q), (b, q), (b, r), (b, t), (p, r), (q, r), (q, t)]);

    let mut tree: Vec<(Vertex, Vertex)> = xc.iter().map(|&x| (r, x)).collect();
    tree.extend([(r, b), (r, p), (r, q), (p, a), (b, t)]);
    assemble(n, edges, tree, roles)
}

/// A satisfying assignment (`assignment[i]` is the value of `x_{i+1}`),
/// found by trying all `2^k` assignments in binary counting order with
/// `x_1` as the most significant bit and `false < true`.
pub fn sat_bruteforce(f: &CnfFormula) -> Option<Vec<bool>> {
    let k = f.variable_count;
    assert!(k < 64, "too many variables for brute force");
    (0u64..1 << k).find_map(|bits| {
        let assignment: Vec<bool> = (0..k).map(|i| bits >> (k - 1 - i) & 1 == 1).collect();
        f.is_satisfied_by(&assignment).then_some(assignment)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unsat1() -> CnfFormula {
        CnfFormula::new(1, &[[1, 1, 1], [-1, -1, -1]]).unwrap()
    }

    #[test]
    fn rejects_bad_literals() {
        assert!(matches!(
            CnfFormula::new(2, &[[1, 3, 2]]),
            Err(Error::MalformedClause { index: 1, .. })
        ));
        assert!(CnfFormula::new(2, &[[1, 0, 2]]).is_err());
    }

    #[test]
    fn sat() {
        let f = CnfFormula::new(1, &[[1, 1, 1]]).unwrap();
        assert_eq!(sat_bruteforce(&f), Some(vec![true]));
        assert_eq!(sat_bruteforce(&unsat1()), None);
    }

    #[test]
    fn lbfs_instance_sizes() {
        let f = CnfFormula::new(1, &[[1, 1, 1]]).unwrap();
        let inst = build_lbfs_instance(&f);
        assert_eq!(inst.graph.vertex_count(), 9);
        assert_eq!(build_lbfs_instance(&unsat1()).graph.vertex_count(), 12);
        assert_eq!(inst.roles.iter().map(|r| r.to_string()).collect::<Vec<_>>(), [
            "x1", "~x1", "a1", "c1", "t1", "r", "p", "q", "u"
        ]);
        let r = inst.vertex_of(Role::R).unwrap();
        let t1 = inst.vertex_of(Role::ClauseT(1)).unwrap();
        assert!(!inst.graph.has_edge(r, t1));
        assert!(!inst.graph.has_edge(0, 1));
    }

    #[test]
    fn mns_instance_sizes() {
        let f = CnfFormula::new(1, &[[1, 1, 1]]).unwrap();
        let inst = build_mns_instance(&f);
        assert_eq!(inst.graph.vertex_count(), 9);
        assert_eq!(build_mns_instance(&unsat1()).graph.vertex_count(), 10);
        let c1 = inst.vertex_of(Role::ClauseC(1)).unwrap();
        assert_eq!(inst.graph.neighbors(c1).len(), 1 + 4);
        assert_eq!(inst.tree.edges().len(), 8);
    }
}
