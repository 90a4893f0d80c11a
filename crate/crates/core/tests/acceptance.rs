//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits with a
//! failure status if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use searchtree::fixtures;
use searchtree::oracle::{is_weakly_chordal_bruteforce, oracle_recognize};
use searchtree::reduction::{build_lbfs_instance, build_mns_instance, sat_bruteforce, CnfFormula, Role};
use searchtree::{
    build_l_tree, constrained_search, induced_subgraph, recognize, recognize_bfs_f_tree, recognize_by_backtracking,
    recognize_dfs_l_tree, recognize_ldfs_l_tree, recognize_split_f_tree, recognize_split_l_tree, run_search,
    split_partition, validate_order, Budget, ConstrainedOutcome, Graph, Mode, Outcome, RecognitionResult,
    SearchKind, Side, SpanningTree, TieBreak, Vertex, VertexOrdering,
};

use SearchKind::*;

const PAIRS: [(SearchKind, Side); 6] =
    [(Bfs, Side::F), (Dfs, Side::L), (Ldfs, Side::L), (Lbfs, Side::F), (Mcs, Side::F), (Mns, Side::F)];

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, id: &str, ok: bool, detail: String) {
        println!("{} [{id}] {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failures += 1;
        }
    }
}

// Direct general-graph recognizer for a pair, bypassing the split shortcut.
fn general(g: &Graph, t: &SpanningTree, kind: SearchKind, side: Side) -> RecognitionResult {
    match (kind, side) {
        (Bfs, Side::F) => recognize_bfs_f_tree(g, t, Budget::unlimited()),
        (Dfs, Side::L) => recognize_dfs_l_tree(g, t),
        (Ldfs, Side::L) => recognize_ldfs_l_tree(g, t),
        _ => recognize_by_backtracking(g, t, kind, side, Budget::unlimited()),
    }
    .unwrap()
}

// Mismatches between the recognizers and the oracle on one pair.
fn compare_with_oracle(g: &Graph, t: &SpanningTree) -> usize {
    let mut bad = 0;
    for (kind, side) in PAIRS {
        let expected = oracle_recognize(g, t, kind, side).unwrap().is_some();
        for r in [recognize(g, t, kind, side, Budget::unlimited()).unwrap(), general(g, t, kind, side)] {
            let ok = r.outcome != Outcome::Inconclusive
                && r.recognized() == expected
                && r.verify(g, t, kind, side).unwrap();
            if !ok {
                bad += 1;
                eprintln!("mismatch {kind}/{side}: g={g:?} t={t:?} oracle={expected} got={:?}", r.outcome);
            }
        }
    }
    bad
}

fn criterion_1(rep: &mut Report) {
    let mut pairs = 0;
    let mut bad = 0;
    for n in 1..=5 {
        for g in common::connected_graphs(n) {
            for t in searchtree::oracle::enumerate_spanning_trees(&g) {
                pairs += 1;
                bad += compare_with_oracle(&g, &t);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let random = 3000;
    for _ in 0..random {
        let n = rng.gen_range(6..=8);
        let p = rng.gen_range(0.1..0.8);
        let g = common::random_connected(&mut rng, n, p);
        let t = common::tree_for(&mut rng, &g);
        bad += compare_with_oracle(&g, &t);
    }
    rep.line(
        "1",
        bad == 0,
        format!(
            "oracle completeness: {pairs} exhaustive pairs (n <= 5) and {random} random pairs (6 <= n <= 8), \
             6 search/side pairs each: {bad} mismatches (tolerance 0)"
        ),
    );
}

fn criterion_2(rep: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let graphs = 300;
    let mut bad = 0;
    let mut positives = (0, 0);
    for _ in 0..graphs {
        let n = rng.gen_range(2..=8);
        let g = common::random_split(&mut rng, n);
        for _ in 0..3 {
            let t = common::tree_for(&mut rng, &g);
            let f: Vec<bool> = [Bfs, Lbfs, Ldfs, Mcs, Mns]
                .iter()
                .map(|&k| oracle_recognize(&g, &t, k, Side::F).unwrap().is_some())
                .collect();
            let l: Vec<bool> = [Lbfs, Ldfs, Mcs, Mns]
                .iter()
                .map(|&k| oracle_recognize(&g, &t, k, Side::L).unwrap().is_some())
                .collect();
            if f.iter().any(|&x| x != f[0]) || l.iter().any(|&x| x != l[0]) {
                bad += 1;
                eprintln!("kinds disagree on g={g:?} t={t:?}: F {f:?} L {l:?}");
                continue;
            }
            positives.0 += usize::from(f[0]);
            positives.1 += usize::from(l[0]);
            for kind in [Bfs, Lbfs, Ldfs, Mcs, Mns] {
                let r = recognize_split_f_tree(&g, &t, kind).unwrap();
                if r.recognized() != f[0] || !r.verify(&g, &t, kind, Side::F).unwrap() {
                    bad += 1;
                    eprintln!("split F {kind}: g={g:?} t={t:?} expected {}", f[0]);
                }
            }
            for kind in [Lbfs, Ldfs, Mcs, Mns] {
                let r = recognize_split_l_tree(&g, &t, kind).unwrap();
                if r.recognized() != l[0] || !r.verify(&g, &t, kind, Side::L).unwrap() {
                    bad += 1;
                    eprintln!("split L {kind}: g={g:?} t={t:?} expected {}", l[0]);
                }
            }
        }
    }
    rep.line(
        "2",
        bad == 0,
        format!(
            "split equivalences: {graphs} split graphs (n <= 8) x 3 trees, {} F-positive, {} L-positive: \
             {bad} mismatches (tolerance 0)",
            positives.0, positives.1
        ),
    );
}

// Every multiset of `l` clauses over `k` variables, each clause a multiset of
// three literals.
fn all_formulas(k: usize, l: usize) -> Vec<CnfFormula> {
    let lits: Vec<i64> = (1..=k as i64).flat_map(|v| [v, -v]).collect();
    let mut clauses = Vec::new();
    for a in 0..lits.len() {
        for b in a..lits.len() {
            for c in b..lits.len() {
                clauses.push([lits[a], lits[b], lits[c]]);
            }
        }
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; l];
    loop {
        let chosen: Vec<[i64; 3]> = idx.iter().map(|&i| clauses[i]).collect();
        out.push(CnfFormula::new(k, &chosen).unwrap());
        // next non-decreasing index tuple
        let Some(pos) = (0..l).rev().find(|&i| idx[i] + 1 < clauses.len()) else {
            break;
        };
        let v = idx[pos] + 1;
        for x in &mut idx[pos..] {
            *x = v;
        }
    }
    out
}

#[derive(Default)]
struct ReductionTally {
    formulas: usize,
    satisfiable: usize,
    mismatches: usize,
    not_weakly_chordal: usize,
    shape_violations: usize,
}

fn check_formula(f: &CnfFormula, tally: &mut ReductionTally) {
    tally.formulas += 1;
    let sat = sat_bruteforce(f).is_some();
    tally.satisfiable += usize::from(sat);
    let lbfs = build_lbfs_instance(f);
    let mns = build_mns_instance(f);
    for inst in [&lbfs, &mns] {
        if !is_weakly_chordal_bruteforce(&inst.graph) {
            tally.not_weakly_chordal += 1;
        }
    }
    let w = oracle_recognize(&lbfs.graph, &lbfs.tree, Lbfs, Side::F).unwrap();
    if w.is_some() != sat {
        tally.mismatches += 1;
        eprintln!("LBFS reduction mismatch on {f:?}");
    }
    for kind in [Mns, Mcs] {
        let w = oracle_recognize(&mns.graph, &mns.tree, kind, Side::F).unwrap();
        if w.is_some() != sat {
            tally.mismatches += 1;
            eprintln!("{kind} reduction mismatch on {f:?}");
        }
        if kind == Mns {
            if let Some(sigma) = w {
                if !mns_witness_shape(f, &mns.roles, &sigma) {
                    tally.shape_violations += 1;
                    eprintln!("MNS witness {sigma} of {f:?} has the wrong shape");
                }
            }
        }
    }
}

// b precedes every clause vertex, and the ordering starts with r, p and one
// literal of each complementary pair.
fn mns_witness_shape(f: &CnfFormula, roles: &[Role], sigma: &VertexOrdering) -> bool {
    let k = f.variable_count();
    let at = |role: Role| roles.iter().position(|&r| r == role).unwrap();
    let b = at(Role::B);
    let b_first = (1..=f.clauses().len()).all(|j| sigma.precedes(b, at(Role::ClauseC(j))));
    let s = sigma.as_slice();
    let head = s[0] == at(Role::R) && s[1] == at(Role::P);
    let mut vars: Vec<usize> = Vec::new();
    for &v in &s[2..2 + k] {
        match roles[v] {
            Role::Literal(l) => vars.push(l.var),
            _ => return false,
        }
    }
    vars.sort_unstable();
    vars.dedup();
    b_first && head && vars.len() == k
}

fn criterion_3(rep: &mut Report) {
    let mut tally = ReductionTally::default();
    for k in 1..=2 {
        for l in 1..=2 {
            for f in all_formulas(k, l) {
                check_formula(&f, &mut tally);
            }
        }
    }
    let exhaustive = tally.formulas;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let sampled = 60;
    for _ in 0..sampled {
        let l = rng.gen_range(1..=3);
        let clauses: Vec<[i64; 3]> = (0..l)
            .map(|_| {
                let mut c = [0i64; 3];
                for x in &mut c {
                    let v = rng.gen_range(1..=3i64);
                    *x = if rng.gen_bool(0.5) { v } else { -v };
                }
                c
            })
            .collect();
        check_formula(&CnfFormula::new(3, &clauses).unwrap(), &mut tally);
    }
    let before = tally.formulas;
    let unsat2 = CnfFormula::new(2, &[[1, 2, 2], [1, -2, -2], [-1, 2, 2], [-1, -2, -2]]).unwrap();
    for f in [fixtures::fig2_formula(), fixtures::fig3_formula(), unsat2] {
        check_formula(&f, &mut tally);
    }
    let extra = tally.formulas - before;
    let ok = tally.mismatches == 0 && tally.not_weakly_chordal == 0 && tally.shape_violations == 0;
    rep.line(
        "3",
        ok,
        format!(
            "reductions: {exhaustive} exhaustive formulas (k <= 2, l <= 2), {sampled} sampled (k = 3, l <= 3) \
             and {extra} larger ones (both fixture formulas and an unsatisfiable k = 2, l = 4 formula), \
             {} satisfiable: {} equivalence mismatches, {} instances not weakly chordal, {} MNS witness shape \
             violations (tolerance 0 each)",
            tally.satisfiable, tally.mismatches, tally.not_weakly_chordal, tally.shape_violations
        ),
    );
}

fn criterion_4(rep: &mut Report) {
    let (g, t) = fixtures::fig1d();
    let dfs = recognize_dfs_l_tree(&g, &t).unwrap();
    let ldfs = recognize_ldfs_l_tree(&g, &t).unwrap();
    let mut ok = dfs.recognized() && dfs.verify(&g, &t, Dfs, Side::L).unwrap() && !ldfs.recognized();
    let mut claims = 2;
    let oracle = |(g, t): &(Graph, SpanningTree), kind| oracle_recognize(g, t, kind, Side::F).unwrap().is_some();
    type Claims = ((Graph, SpanningTree), &'static [(SearchKind, bool)]);
    let cases: [Claims; 3] = [
        (fixtures::fig1a(), &[(Bfs, true), (Lbfs, false), (Mns, false)]),
        (fixtures::fig1b(), &[(Mns, true), (Bfs, true), (Lbfs, false)]),
        (fixtures::fig1c(), &[(Mns, true), (Bfs, true), (Lbfs, true), (Mcs, false)]),
    ];
    for (fixture, expected) in &cases {
        for &(kind, want) in *expected {
            claims += 1;
            let got = oracle(fixture, kind);
            let rec = recognize(&fixture.0, &fixture.1, kind, Side::F, Budget::unlimited()).unwrap().recognized();
            if got != want || rec != want {
                ok = false;
                eprintln!("fixture claim {kind} F = {want} failed: oracle {got}, recognizer {rec}");
            }
        }
    }
    let (g, t) = fixtures::fig1d();
    for (kind, want) in [(Dfs, true), (Ldfs, false)] {
        claims += 1;
        if oracle_recognize(&g, &t, kind, Side::L).unwrap().is_some() != want {
            ok = false;
        }
    }
    rep.line(
        "4",
        ok,
        format!("fixtures: DFS L-tree yes and LDFS L-tree no on the 7-vertex palm example; {claims} tree claims checked"),
    );
}

fn three_point(g: &Graph, sigma: &VertexOrdering) -> bool {
    let s = sigma.as_slice();
    let n = s.len();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            (j + 1..n).all(|k| {
                let (a, b, c) = (s[i], s[j], s[k]);
                !(g.has_edge(a, c) && !g.has_edge(a, b))
                    || s[..j].iter().any(|&d| g.has_edge(d, b) && !g.has_edge(d, c))
            })
        })
    })
}

// For every independent vertex followed by some clique vertex: the clique
// vertices before it are all neighbors, and its remaining neighbors come
// directly after it.
fn split_order(g: &Graph, sigma: &VertexOrdering) -> bool {
    let part = split_partition(g).expect("split graph");
    let s = sigma.as_slice();
    let last_clique = s.iter().rposition(|&v| part.in_clique(v)).unwrap();
    s.iter().enumerate().take(last_clique).all(|(i, &v)| {
        if part.in_clique(v) {
            return true;
        }
        let before: Vec<Vertex> = s[..i].iter().copied().filter(|&c| part.in_clique(c)).collect();
        let l = before.len();
        before.iter().all(|&c| g.has_edge(v, c))
            && s[i + 1..i + 1 + g.degree(v) - l].iter().all(|&w| g.has_edge(v, w))
    })
}

fn criterion_5(rep: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let runs = 1200;
    let mut violations = 0;
    let mut split_runs = 0;
    for _ in 0..runs {
        let n = rng.gen_range(2..=10);
        let split = rng.gen_bool(0.3);
        let p = rng.gen_range(0.1..0.8);
        let g = if split { common::random_split(&mut rng, n) } else { common::random_connected(&mut rng, n, p) };
        let kind = *[Lbfs, Ldfs, Mcs, Mns].choose(&mut rng).unwrap();
        let sigma = common::random_search_order(&mut rng, &g, kind);
        let implied: &[SearchKind] = match kind {
            Lbfs => &[Lbfs, Bfs, Mns, Gen],
            Ldfs => &[Ldfs, Dfs, Mns, Gen],
            Mcs => &[Mcs, Mns, Gen],
            _ => &[Mns, Gen],
        };
        let mut ok = implied.iter().all(|&k| validate_order(&g, k, &sigma).unwrap());
        ok &= three_point(&g, &sigma);
        if split_partition(&g).is_some() {
            split_runs += 1;
            ok &= split_order(&g, &sigma);
        }
        if !ok {
            violations += 1;
            eprintln!("hierarchy violation: {kind} ordering {sigma} on {g:?}");
        }
    }
    rep.line(
        "5",
        violations == 0,
        format!(
            "search hierarchy: {runs} random runs ({split_runs} on split graphs) checked for implied kinds, 3-point \
             and split-order conditions: {violations} violations (tolerance 0)"
        ),
    );
}

fn restriction(t: &SpanningTree, keep: &[Vertex], map: &[Vertex]) -> Option<SpanningTree> {
    let mut index = vec![usize::MAX; t.vertex_count()];
    for (new, &old) in map.iter().enumerate() {
        index[old] = new;
    }
    let edges: Vec<(Vertex, Vertex)> = t
        .edges()
        .iter()
        .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
        .map(|&(u, v)| (index[u], index[v]))
        .collect();
    let sub = SpanningTree::new(keep.len(), edges).ok()?;
    sub.is_tree().then_some(sub)
}

fn criterion_6(rep: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut instances = (0, 0);
    let mut subgraphs = (0, 0);
    let mut violations = 0;
    while instances.0 < 250 || instances.1 < 250 {
        let n = rng.gen_range(3..=8);
        let p = rng.gen_range(0.2..0.8);
        let g = common::random_connected(&mut rng, n, p);
        let kind = if instances.0 <= instances.1 { Ldfs } else { Dfs };
        let sigma = common::random_search_order(&mut rng, &g, kind);
        let t = build_l_tree(&g, &sigma).unwrap();
        let r = if kind == Ldfs { recognize_ldfs_l_tree(&g, &t) } else { recognize_dfs_l_tree(&g, &t) }.unwrap();
        let Some(w) = r.witness else {
            violations += 1;
            eprintln!("{kind} L-tree of {sigma} not recognized on {g:?}");
            continue;
        };
        if kind == Ldfs { instances.0 += 1 } else { instances.1 += 1 }
        for mask in 1u32..1 << n {
            if mask >> w.root & 1 == 0 {
                continue;
            }
            let keep: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let (sub, map) = induced_subgraph(&g, &keep).unwrap();
            if !sub.is_connected() {
                continue;
            }
            let Some(sub_t) = restriction(&t, &keep, &map) else {
                continue;
            };
            let root = map.iter().position(|&v| v == w.root).unwrap();
            if kind == Ldfs {
                subgraphs.0 += 1;
                let accepted = recognize_ldfs_l_tree(&sub, &sub_t).unwrap().recognized();
                let rooted = matches!(
                    constrained_search(&sub, &sub_t, Ldfs, Side::L, root, Mode::Greedy, Budget::unlimited()).unwrap(),
                    ConstrainedOutcome::Found(_)
                );
                if !accepted || !rooted {
                    violations += 1;
                    eprintln!("LDFS restriction to {keep:?} rejected on {g:?} with tree {t:?}");
                }
            } else {
                // drop a random subset of the non-tree edges as well
                let edges: Vec<(Vertex, Vertex)> = sub
                    .edges()
                    .filter(|&(u, v)| sub_t.contains_edge(u, v) || rng.gen_bool(0.5))
                    .collect();
                let partial = Graph::new(sub.vertex_count(), edges).unwrap();
                subgraphs.1 += 1;
                if !recognize_dfs_l_tree(&partial, &sub_t).unwrap().recognized() {
                    violations += 1;
                    eprintln!("DFS restriction to {keep:?} rejected on {g:?} with tree {t:?}");
                }
            }
        }
    }
    rep.line(
        "6",
        violations == 0,
        format!(
            "restrictions: {} LDFS instances ({} induced subgraphs) and {} DFS instances ({} subgraphs): \
             {violations} violations (tolerance 0)",
            instances.0, subgraphs.0, instances.1, subgraphs.1
        ),
    );
}

fn best_of<F: FnMut()>(reps: usize, mut f: F) -> Duration {
    (0..reps)
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed()
        })
        .min()
        .unwrap()
}

// A split graph with about `m` edges: a clique of size about sqrt(m) holding
// half of the edges and independent vertices of degree up to 20.
fn large_split(rng: &mut ChaCha8Rng, m: usize) -> Graph {
    let k = ((m as f64).sqrt() as usize).max(4);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m + k);
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    let mut next = k;
    let deg_cap = 20.min(k);
    while edges.len() < m {
        let d = rng.gen_range(1..=deg_cap);
        for c in rand::seq::index::sample(rng, k, d) {
            edges.push((next, c));
        }
        next += 1;
    }
    Graph::new(next, edges).unwrap()
}

// Canonical positive trees: the F-tree of a BFS from clique vertex 0 and the
// L-tree of the ordering "clique by id, then the rest".
fn split_trees(g: &Graph) -> (SpanningTree, SpanningTree) {
    let part = split_partition(g).unwrap();
    let mut f_edges = Vec::new();
    let mut l_edges = Vec::new();
    let rank: Vec<usize> = {
        let mut r = vec![usize::MAX; g.vertex_count()];
        for (i, &c) in part.clique.iter().enumerate() {
            r[c] = i;
        }
        r
    };
    let root = part.clique[0];
    for (i, &c) in part.clique.iter().enumerate().skip(1) {
        f_edges.push((root, c));
        l_edges.push((part.clique[i - 1], c));
    }
    for &w in &part.independent {
        let nbrs = g.neighbors(w);
        let first = *nbrs.iter().min_by_key(|&&c| rank[c]).unwrap();
        let last = *nbrs.iter().max_by_key(|&&c| rank[c]).unwrap();
        f_edges.push((if g.has_edge(w, root) { root } else { first }, w));
        l_edges.push((last, w));
    }
    let n = g.vertex_count();
    (SpanningTree::new(n, f_edges).unwrap(), SpanningTree::new(n, l_edges).unwrap())
}

fn criterion_7(rep: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    // LDFS on n = 200, m about 2000
    let n = 200;
    let g = common::random_connected(&mut rng, n, (2000.0 - 199.0) / (n * (n - 1) / 2 - 199) as f64);
    let sigma = run_search(&g, Ldfs, 0, &TieBreak::Explicit(common::random_permutation(&mut rng, n))).unwrap();
    let positive = build_l_tree(&g, &sigma).unwrap();
    let negative = common::random_spanning_tree(&mut rng, &g);
    let mut ok_ldfs = true;
    let ldfs_time = best_of(1, || {
        ok_ldfs &= recognize_ldfs_l_tree(&g, &positive).unwrap().recognized();
        ok_ldfs &= !recognize_ldfs_l_tree(&g, &negative).unwrap().recognized();
    });
    rep.line(
        "7a",
        ok_ldfs && ldfs_time < Duration::from_secs(5),
        format!(
            "LDFS L-tree recognition, n = {n}, m = {}, one positive and one negative tree: {:.3} s (limit 5 s)",
            g.edge_count(),
            ldfs_time.as_secs_f64()
        ),
    );

    let mut times = Vec::new();
    let mut correct = true;
    for m in [10_000usize, 100_000, 1_000_000] {
        let g = large_split(&mut rng, m);
        let (f_tree, l_tree) = split_trees(&g);
        let random = common::random_spanning_tree(&mut rng, &g);
        let t = best_of(3, || {
            correct &= recognize_split_f_tree(&g, &f_tree, Mns).unwrap().recognized();
            correct &= recognize_split_l_tree(&g, &l_tree, Lbfs).unwrap().recognized();
            // random trees are almost never search trees; timing covers the no path
            recognize_split_f_tree(&g, &random, Mns).unwrap();
            recognize_split_l_tree(&g, &random, Lbfs).unwrap();
        });
        times.push((m, g.edge_count(), t));
    }
    let at = |i: usize| times[i].2.as_secs_f64();
    let ratio_low = at(1) / at(0).max(1e-6);
    let ratio_high = at(2) / at(1).max(1e-6);
    let linear = ratio_low <= 25.0 && ratio_high <= 25.0;
    let detail: Vec<String> =
        times.iter().map(|(_, m, t)| format!("m = {m}: {:.4} s", t.as_secs_f64())).collect();
    rep.line(
        "7b",
        correct && at(1) < 1.0 && linear,
        format!(
            "split F/L recognition (4 calls, best of 3): {}; m = 1e5 under 1 s; growth ratios {ratio_low:.1} and \
             {ratio_high:.1} per 10x edges (limit 25)",
            detail.join(", ")
        ),
    );
}

fn main() {
    let mut rep = Report { failures: 0 };
    let start = Instant::now();
    criterion_4(&mut rep);
    criterion_5(&mut rep);
    criterion_2(&mut rep);
    criterion_6(&mut rep);
    criterion_7(&mut rep);
    criterion_1(&mut rep);
    criterion_3(&mut rep);
    println!("acceptance: {} failing criteria, {:.1} s", rep.failures, start.elapsed().as_secs_f64());
    if rep.failures > 0 {
        std::process::exit(1);
    }
}
