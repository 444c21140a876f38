//! Brute-force graph oracles.
//!
//! Everything in this module is a generic graph algorithm operating on the
//! adjacency structure alone — no `q`, no `n`, no knowledge of the windmill
//! block layout. That independence is the point: when these searches agree
//! with the closed-form predictors, the agreement is evidence, not
//! bookkeeping.
//!
//! The searches for clique, independence, chromatic and domination numbers
//! are exact and exponential in the worst case; callers gate them by graph
//! order (the verifier and CLI default to `q^n <= 65`).

use crate::graph::DepGraph;
use crate::{Error, Result};
use serde::Serialize;

/// Answer of the block-decomposition planarity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Planarity {
    Planar,
    Nonplanar,
    /// Some biconnected block is not a clique, so the clique-block criterion
    /// does not apply. An honest non-answer.
    Unknown,
}

/// A certificate that can be revalidated independently of the search that
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    IndependentSet(Vec<usize>),
    Coloring(Vec<u32>),
    EdgeCut(Vec<(usize, usize)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleValue {
    Count(u64),
    Flag(bool),
    Planarity(Planarity),
    Skipped(String),
}

impl Serialize for OracleValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            OracleValue::Count(v) => s.serialize_u64(*v),
            OracleValue::Flag(v) => s.serialize_bool(*v),
            OracleValue::Planarity(p) => p.serialize(s),
            OracleValue::Skipped(reason) => {
                use serde::ser::SerializeStruct;
                let mut st = s.serialize_struct("Skipped", 1)?;
                st.serialize_field("skipped", reason)?;
                st.end()
            }
        }
    }
}

/// One invariant as computed by an oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub name: &'static str,
    pub value: OracleValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Number of unordered adjacent pairs.
pub fn edge_count(g: &DepGraph) -> u64 {
    let n = g.order();
    let mut m = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            m += u64::from(g.is_edge(i, j));
        }
    }
    m
}

pub fn is_complete(g: &DepGraph) -> bool {
    let n = g.order();
    (0..n).all(|i| ((i + 1)..n).all(|j| g.is_edge(i, j)))
}

fn bfs_distances(g: &DepGraph, source: usize) -> Vec<i64> {
    let n = g.order();
    let mut dist = vec![-1i64; n];
    dist[source] = 0;
    let mut queue = std::collections::VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if dist[v] < 0 {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

pub fn is_connected(g: &DepGraph) -> bool {
    g.order() == 0 || bfs_distances(g, 0).iter().all(|&d| d >= 0)
}

/// Maximum BFS eccentricity; errors on a disconnected graph.
pub fn diameter(g: &DepGraph) -> Result<u64> {
    let mut best = 0i64;
    for s in 0..g.order() {
        let dist = bfs_distances(g, s);
        for &d in &dist {
            if d < 0 {
                return Err(Error::Disconnected);
            }
            best = best.max(d);
        }
    }
    Ok(best as u64)
}

/// All `size`-subsets of `0..n`, lexicographic; stops early when `f` says so.
fn any_subset(n: usize, size: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        n: usize,
        size: usize,
        start: usize,
        acc: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if acc.len() == size {
            return f(acc);
        }
        let needed = size - acc.len();
        for v in start..=(n - needed) {
            acc.push(v);
            if rec(n, size, v + 1, acc, f) {
                return true;
            }
            acc.pop();
        }
        false
    }
    if size > n {
        return false;
    }
    if size == 0 {
        return f(&[]);
    }
    rec(n, size, 0, &mut Vec::with_capacity(size), f)
}

/// Least s such that some s-subset dominates the graph, searched upward.
pub fn domination_number(g: &DepGraph) -> u64 {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    for s in 1..=n {
        let found = any_subset(n, s, &mut |d: &[usize]| {
            (0..n).all(|v| d.contains(&v) || d.iter().any(|&u| g.is_edge(u, v)))
        });
        if found {
            return s as u64;
        }
    }
    unreachable!("the full vertex set always dominates")
}

/// Branch-and-bound maximum clique with a greedy colouring bound.
fn max_clique_bb(adj: &[Vec<bool>]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return vec![];
    }
    // initial candidate order: degree descending (stable)
    let mut order: Vec<usize> = (0..n).collect();
    let degree = |v: usize| adj[v].iter().filter(|&&e| e).count();
    order.sort_by_key(|&v| std::cmp::Reverse(degree(v)));

    fn expand(
        adj: &[Vec<bool>],
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
        candidates: &[usize],
    ) {
        if candidates.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        // greedy colouring of the candidates; the colour index bounds the
        // clique size attainable from each prefix
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in candidates {
            match classes
                .iter_mut()
                .find(|class| class.iter().all(|&u| !adj[u][v]))
            {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut coloured: Vec<(usize, usize)> = Vec::with_capacity(candidates.len());
        for (colour, class) in classes.iter().enumerate() {
            for &v in class {
                coloured.push((v, colour + 1));
            }
        }
        for i in (0..coloured.len()).rev() {
            let (v, bound) = coloured[i];
            if current.len() + bound <= best.len() {
                return;
            }
            current.push(v);
            let next: Vec<usize> = coloured[..i]
                .iter()
                .map(|&(u, _)| u)
                .filter(|&u| adj[u][v])
                .collect();
            expand(adj, current, best, &next);
            current.pop();
        }
    }

    let mut best = Vec::new();
    expand(adj, &mut Vec::new(), &mut best, &order);
    best.sort_unstable();
    best
}

fn adjacency_rows(g: &DepGraph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|i| (0..n).map(|j| g.is_edge(i, j)).collect())
        .collect()
}

/// Maximum independent set, exact (clique search on the complement).
/// Returns the size and a witness set.
pub fn independence_number(g: &DepGraph) -> (u64, Vec<usize>) {
    let n = g.order();
    let complement: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i != j && !g.is_edge(i, j)).collect())
        .collect();
    let set = max_clique_bb(&complement);
    (set.len() as u64, set)
}

/// Clique number by exact branch and bound.
pub fn clique_number(g: &DepGraph) -> u64 {
    max_clique_bb(&adjacency_rows(g)).len() as u64
}

/// All maximal cliques, Bron–Kerbosch with pivoting. Each clique is sorted;
/// the list is sorted for determinism.
pub fn maximal_cliques(g: &DepGraph) -> Vec<Vec<usize>> {
    fn bk(
        adj: &[Vec<bool>],
        r: &mut Vec<usize>,
        mut p: Vec<usize>,
        mut x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut clique = r.clone();
            clique.sort_unstable();
            out.push(clique);
            return;
        }
        if p.is_empty() {
            return;
        }
        // pivot: the candidate (from P ∪ X) with most neighbours in P
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
            .unwrap();
        let todo: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
        for v in todo {
            let np: Vec<usize> = p.iter().copied().filter(|&u| adj[v][u]).collect();
            let nx: Vec<usize> = x.iter().copied().filter(|&u| adj[v][u]).collect();
            r.push(v);
            bk(adj, r, np, nx, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }

    let adj = adjacency_rows(g);
    let mut out = Vec::new();
    bk(
        &adj,
        &mut Vec::new(),
        (0..g.order()).collect(),
        Vec::new(),
        &mut out,
    );
    out.sort();
    out
}

fn colourable_with(g: &DepGraph, order: &[usize], colours: u32) -> Option<Vec<u32>> {
    fn rec(
        g: &DepGraph,
        order: &[usize],
        colours: u32,
        pos: usize,
        max_used: u32,
        assignment: &mut Vec<u32>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        // symmetry break: at most one fresh colour beyond those in use
        let limit = colours.min(max_used + 1);
        for c in 0..limit {
            let ok = g.neighbors(v).all(|u| assignment[u] != c);
            if ok {
                assignment[v] = c;
                if rec(g, order, colours, pos + 1, max_used.max(c + 1), assignment) {
                    return true;
                }
                assignment[v] = u32::MAX;
            }
        }
        false
    }

    let mut assignment = vec![u32::MAX; g.order()];
    if rec(g, order, colours, 0, 0, &mut assignment) {
        Some(assignment)
    } else {
        None
    }
}

/// Exact chromatic number by iterative deepening from the clique lower
/// bound, with a witness colouring.
pub fn chromatic_number(g: &DepGraph) -> (u64, Vec<u32>) {
    let n = g.order();
    if n == 0 {
        return (0, vec![]);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let lower = clique_number(g).max(1);
    let mut t = lower as u32;
    loop {
        if let Some(colouring) = colourable_with(g, &order, t) {
            return (t as u64, colouring);
        }
        t += 1;
    }
}

/// Connected with all degrees even.
pub fn is_eulerian(g: &DepGraph) -> bool {
    is_connected(g) && (0..g.order()).all(|v| g.degree(v) % 2 == 0)
}

/// Unit-capacity max flow (Edmonds–Karp). Returns the value and the final
/// residual capacities.
fn max_flow_unit(g: &DepGraph, source: usize, sink: usize) -> (u64, Vec<Vec<i64>>) {
    let n = g.order();
    let mut cap = vec![vec![0i64; n]; n];
    for (i, row) in cap.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            if g.is_edge(i, j) {
                *slot = 1;
            }
        }
    }
    let mut flow = 0u64;
    loop {
        let mut parent = vec![usize::MAX; n];
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if parent[v] == usize::MAX && cap[u][v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return (flow, cap);
        }
        let mut v = sink;
        while v != source {
            let u = parent[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}

/// Global minimum edge cut: min over targets of max flow from vertex 0.
/// Returns the cut size and the crossing edges of one minimum cut.
pub fn edge_connectivity(g: &DepGraph) -> (u64, Vec<(usize, usize)>) {
    let n = g.order();
    if n < 2 {
        return (0, vec![]);
    }
    let mut best: Option<(u64, Vec<Vec<i64>>)> = None;
    for t in 1..n {
        let (value, residual) = max_flow_unit(g, 0, t);
        let better = best.as_ref().map_or(true, |(b, _)| value < *b);
        if better {
            let done = value == 0;
            best = Some((value, residual));
            if done {
                break;
            }
        }
    }
    let (value, residual) = best.unwrap();
    // source side of the cut = vertices reachable in the residual graph
    let mut reach = vec![false; n];
    reach[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            if !reach[v] && residual[u][v] > 0 {
                reach[v] = true;
                queue.push_back(v);
            }
        }
    }
    let mut cut = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if g.is_edge(i, j) && reach[i] != reach[j] {
                cut.push((i, j));
            }
        }
    }
    (value, cut)
}

fn connected_after_removal(g: &DepGraph, removed: &[usize]) -> bool {
    let n = g.order();
    let alive: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
    if alive.len() <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::from([alive[0]]);
    seen[alive[0]] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if !seen[v] && !removed.contains(&v) {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count == alive.len()
}

/// Smallest vertex set whose removal disconnects the graph, by exhaustive
/// search over subset sizes up to the minimum degree. Complete graphs have
/// no disconnecting set and return order - 1 by convention.
pub fn vertex_connectivity(g: &DepGraph) -> u64 {
    let n = g.order();
    if is_complete(g) {
        return n.saturating_sub(1) as u64;
    }
    if !is_connected(g) {
        return 0;
    }
    let min_degree = (0..n).map(|v| g.degree(v)).min().unwrap();
    for s in 1..=min_degree {
        let found = any_subset(n, s, &mut |cut: &[usize]| !connected_after_removal(g, cut));
        if found {
            return s as u64;
        }
    }
    // κ <= δ for non-complete graphs, so the loop always returns
    unreachable!("non-complete graph with connectivity above its minimum degree")
}

/// Biconnected blocks (vertex sets) by the lowpoint DFS with an edge stack.
fn biconnected_blocks(g: &DepGraph) -> Vec<Vec<usize>> {
    let n = g.order();

    struct Dfs<'a> {
        g: &'a DepGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        edge_stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<usize>>,
    }

    impl Dfs<'_> {
        fn visit(&mut self, v: usize, parent: usize) {
            self.disc[v] = self.timer;
            self.low[v] = self.timer;
            self.timer += 1;
            for w in 0..self.g.order() {
                if !self.g.is_edge(v, w) || w == parent {
                    continue;
                }
                if self.disc[w] == usize::MAX {
                    self.edge_stack.push((v, w));
                    self.visit(w, v);
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] >= self.disc[v] {
                        // (v, w) closes a block: pop it off the edge stack
                        let mut verts = std::collections::BTreeSet::new();
                        while let Some(&(a, b)) = self.edge_stack.last() {
                            self.edge_stack.pop();
                            verts.insert(a);
                            verts.insert(b);
                            if (a, b) == (v, w) {
                                break;
                            }
                        }
                        self.blocks.push(verts.into_iter().collect());
                    }
                } else if self.disc[w] < self.disc[v] {
                    self.edge_stack.push((v, w));
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
            }
        }
    }

    let mut dfs = Dfs {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        timer: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
    };
    for root in 0..n {
        if dfs.disc[root] == usize::MAX {
            dfs.visit(root, usize::MAX);
        }
    }
    dfs.blocks
}

/// Planarity by block decomposition: a graph is planar iff all of its blocks
/// are, and a complete block K_m is planar iff m <= 4. Blocks that are not
/// cliques yield [`Planarity::Unknown`].
pub fn planarity_by_blocks(g: &DepGraph) -> Planarity {
    let mut verdict = Planarity::Planar;
    for block in biconnected_blocks(g) {
        let clique = block
            .iter()
            .all(|&u| block.iter().all(|&v| u == v || g.is_edge(u, v)));
        if !clique {
            return Planarity::Unknown;
        }
        if block.len() > 4 {
            verdict = Planarity::Nonplanar;
        }
    }
    verdict
}

/// Exhaustive backtracking isomorphism test with degree pruning; capped at
/// 32 vertices.
pub fn are_isomorphic(g1: &DepGraph, g2: &DepGraph) -> Result<bool> {
    const BOUND: usize = 32;
    let n = g1.order();
    if n > BOUND || g2.order() > BOUND {
        return Err(Error::Capacity {
            what: "graph order for the isomorphism search",
            requested: n.max(g2.order()) as u128,
            bound: BOUND as u128,
        });
    }
    if n != g2.order() {
        return Ok(false);
    }
    let deg1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let deg2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    let mut sorted1 = deg1.clone();
    let mut sorted2 = deg2.clone();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return Ok(false);
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        g1: &DepGraph,
        g2: &DepGraph,
        order: &[usize],
        pos: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        deg1: &[usize],
        deg2: &[usize],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        for w in 0..g2.order() {
            if used[w] || deg1[v] != deg2[w] {
                continue;
            }
            let consistent = order[..pos]
                .iter()
                .all(|&u| g1.is_edge(v, u) == g2.is_edge(w, map[u]));
            if consistent {
                map[v] = w;
                used[w] = true;
                if rec(g1, g2, order, pos + 1, map, used, deg1, deg2) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }

    // map g1 vertices in degree-descending order
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg1[v]));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(rec(g1, g2, &order, 0, &mut map, &mut used, &deg1, &deg2))
}

/// Run every oracle on one graph, skipping the exponential searches when the
/// order exceeds `np_bound`. Powers the CLI invariant dump.
pub fn run_all(g: &DepGraph, np_bound: u64) -> Vec<OracleResult> {
    let mut out: Vec<OracleResult> = Vec::new();
    let mut push = |name: &'static str, value: OracleValue, witness: Option<Witness>| {
        out.push(OracleResult {
            name,
            value,
            witness,
        });
    };
    push("edge_count", OracleValue::Count(edge_count(g)), None);
    push("is_complete", OracleValue::Flag(is_complete(g)), None);
    let diam = match diameter(g) {
        Ok(d) => OracleValue::Count(d),
        Err(_) => OracleValue::Skipped("graph is disconnected".into()),
    };
    push("diameter", diam, None);

    let gated = g.order() as u64 <= np_bound;
    let skip = || OracleValue::Skipped(format!("order {} exceeds bound {np_bound}", g.order()));
    if gated {
        push(
            "domination_number",
            OracleValue::Count(domination_number(g)),
            None,
        );
        let (alpha, set) = independence_number(g);
        push(
            "independence_number",
            OracleValue::Count(alpha),
            Some(Witness::IndependentSet(set)),
        );
        push("clique_number", OracleValue::Count(clique_number(g)), None);
        let (chi, colouring) = chromatic_number(g);
        push(
            "chromatic_number",
            OracleValue::Count(chi),
            Some(Witness::Coloring(colouring)),
        );
    } else {
        push("domination_number", skip(), None);
        push("independence_number", skip(), None);
        push("clique_number", skip(), None);
        push("chromatic_number", skip(), None);
    }
    push("is_eulerian", OracleValue::Flag(is_eulerian(g)), None);
    let (lambda, cut) = edge_connectivity(g);
    push(
        "edge_connectivity",
        OracleValue::Count(lambda),
        Some(Witness::EdgeCut(cut)),
    );
    push(
        "vertex_connectivity",
        OracleValue::Count(vertex_connectivity(g)),
        None,
    );
    push(
        "planarity",
        OracleValue::Planarity(planarity_by_blocks(g)),
        None,
    );
    out
}
