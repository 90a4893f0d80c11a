//! Plain-text formats for graphs, trees, orderings and CNF formulas.
//!
//! Graph files start with a header `n m` followed by `m` lines `u v`; tree
//! files start with `n` followed by `n - 1` edge lines. Ids are 1-based,
//! blank lines are ignored and `#` starts a comment line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, SpanningTree, VertexOrdering};
use crate::reduction::{CnfFormula, ReductionInstance};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers<const N: usize>(line: usize, text: &str) -> Result<[usize; N]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != N {
        return Err(parse_err(line, format!("expected {N} integers, found `{text}`")));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| parse_err(line, format!("`{f}` is not a non-negative integer")))?;
    }
    Ok(out)
}

fn edge_at(line: usize, text: &str, n: usize) -> Result<(usize, usize)> {
    let [u, v] = numbers::<2>(line, text)?;
    for x in [u, v] {
        if x == 0 || x > n {
            return Err(parse_err(line, format!("vertex {x} is outside 1..={n}")));
        }
    }
    if u == v {
        return Err(parse_err(line, format!("self-loop at vertex {u}")));
    }
    Ok((u - 1, v - 1))
}

pub fn parse_graph_file(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header `n m`"))?;
    let [n, m] = numbers::<2>(hline, header)?;
    if n == 0 {
        return Err(parse_err(hline, "graph must have at least one vertex"));
    }
    let mut seen = rustc_hash::FxHashSet::default();
    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for (line, text) in lines {
        last = line;
        let (u, v) = edge_at(line, text, n)?;
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line, format!("duplicate edge {} {}", u + 1, v + 1)));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(last, format!("header announces {m} edges, found {}", edges.len())));
    }
    let g = Graph::new(n, edges).map_err(|e| parse_err(last, e.to_string()))?;
    if !g.is_connected() {
        return Err(parse_err(hline, "graph is not connected"));
    }
    Ok(g)
}

/// Parses a tree file and checks that it spans `g`.
pub fn parse_tree_file(text: &str, g: &Graph) -> Result<SpanningTree> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header `n`"))?;
    let [n] = numbers::<1>(hline, header)?;
    if n != g.vertex_count() {
        return Err(parse_err(hline, format!("tree has {n} vertices, graph has {}", g.vertex_count())));
    }
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut last = hline;
    for (line, text) in lines {
        last = line;
        let (u, v) = edge_at(line, text, n)?;
        if !g.has_edge(u, v) {
            return Err(parse_err(line, format!("{} {} is not an edge of the graph", u + 1, v + 1)));
        }
        edges.push((u, v));
    }
    if edges.len() + 1 != n {
        return Err(parse_err(last, format!("a spanning tree needs {} edges, found {}", n - 1, edges.len())));
    }
    let t = SpanningTree::new(n, edges).map_err(|e| parse_err(last, e.to_string()))?;
    if !t.is_tree() {
        return Err(parse_err(last, "edges do not form a spanning tree"));
    }
    Ok(t)
}

pub fn write_graph_file(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

pub fn write_tree_file(t: &SpanningTree) -> String {
    let mut out = format!("{}\n", t.vertex_count());
    for &(u, v) in t.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Parses 1-based ids separated by whitespace or commas.
pub fn parse_ordering(text: &str) -> Result<VertexOrdering> {
    let mut ids = Vec::new();
    for (line, content) in content_lines(text) {
        for f in content.split(|c: char| c.is_whitespace() || c == ',').filter(|f| !f.is_empty()) {
            let id: usize = f.parse().map_err(|_| parse_err(line, format!("`{f}` is not a vertex id")))?;
            ids.push(id);
        }
    }
    VertexOrdering::from_one_based(&ids).map_err(|e| parse_err(1, e.to_string()))
}

/// Parses DIMACS CNF. Clauses with fewer than three literals are padded by
/// repeating their literals unless `strict` is set, in which case they are
/// rejected. Longer clauses are always rejected.
pub fn parse_dimacs_cnf(text: &str, strict: bool) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses: Vec<[i64; 3]> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    let mut current_line = 0;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('c') || content.starts_with('%') {
            continue;
        }
        last = line;
        if content.starts_with('p') {
            let fields: Vec<&str> = content.split_whitespace().collect();
            if header.is_some() || fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(parse_err(line, "expected header `p cnf <variables> <clauses>`"));
            }
            let k = fields[2].parse().map_err(|_| parse_err(line, "bad variable count"))?;
            let l = fields[3].parse().map_err(|_| parse_err(line, "bad clause count"))?;
            header = Some((k, l, line));
            continue;
        }
        let Some((k, _, _)) = header else {
            return Err(parse_err(line, "clause before `p cnf` header"));
        };
        for f in content.split_whitespace() {
            let lit: i64 = f.parse().map_err(|_| parse_err(line, format!("`{f}` is not a literal")))?;
            if lit == 0 {
                clauses.push(pad_clause(&current, current_line, strict)?);
                current.clear();
                continue;
            }
            if lit.unsigned_abs() as usize > k {
                return Err(parse_err(line, format!("literal {lit} exceeds {k} variables")));
            }
            if current.is_empty() {
                current_line = line;
            }
            current.push(lit);
        }
    }
    let Some((k, l, hline)) = header else {
        return Err(parse_err(1, "missing `p cnf` header"));
    };
    if !current.is_empty() {
        return Err(parse_err(current_line, "clause is not terminated by 0"));
    }
    if clauses.len() != l {
        return Err(parse_err(last.max(hline), format!("header announces {l} clauses, found {}", clauses.len())));
    }
    CnfFormula::new(k, &clauses)
}

fn pad_clause(lits: &[i64], line: usize, strict: bool) -> Result<[i64; 3]> {
    match lits.len() {
        3 => Ok([lits[0], lits[1], lits[2]]),
        0 => Err(parse_err(line, "empty clause")),
        1 | 2 if !strict => Ok([lits[0], lits[1 % lits.len()], lits[2 % lits.len()]]),
        n => Err(parse_err(line, format!("clause has {n} literals, expected 3"))),
    }
}

/// Role sidecar: one `id role` line per vertex.
pub fn write_roles(instance: &ReductionInstance) -> String {
    let mut out = String::new();
    for (v, role) in instance.roles.iter().enumerate() {
        let _ = writeln!(out, "{} {role}", v + 1);
    }
    out
}
