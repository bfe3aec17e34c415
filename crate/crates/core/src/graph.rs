//! Undirected graphs with explicit loops, plus the fixed shapes that show up
//! as forbiddance-graph components (paths, cycles, ladders, prisms).

use std::collections::VecDeque;
use std::fmt::Write as _;

/// A simple undirected graph on `0..n` with a separate loop set. Loops are
/// never stored as self-adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    loops: Vec<bool>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            loops: vec![false; n],
        }
    }

    /// Builds from an edge list; `(v, v)` entries become loops and repeated
    /// edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g.normalize();
        g
    }

    /// Adds `u ~ v` (a loop when `u == v`). Call [`Graph::normalize`] after a
    /// batch of insertions.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            self.loops[u] = true;
        } else {
            self.adj[u].push(v);
            self.adj[v].push(u);
        }
    }

    pub(crate) fn normalize(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
            list.dedup();
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            self.loops[u]
        } else {
            self.adj[u].binary_search(&v).is_ok()
        }
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops[v]
    }

    pub fn loop_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.loops[v]).collect()
    }

    pub fn has_loops(&self) -> bool {
        self.loops.iter().any(|&l| l)
    }

    /// Common degree if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map(Vec::len)?;
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Connected components among vertices where `keep` holds, each sorted,
    /// listed by smallest vertex.
    pub fn components_where(&self, keep: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] || !keep(start) {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] && keep(w) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_where(|_| true)
    }

    /// Induced subgraph on `vertices` (loops kept), relabelled `0..len`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = std::collections::HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            local.insert(v, i);
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            g.loops[i] = self.loops[v];
            for w in &self.adj[v] {
                if let Some(&j) = local.get(w) {
                    g.adj[i].push(j);
                }
            }
        }
        g.normalize();
        g
    }

    /// Disjoint union, relabelling `other` after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut g = self.clone();
        g.loops.extend_from_slice(&other.loops);
        g.adj
            .extend(other.adj.iter().map(|l| l.iter().map(|v| v + shift).collect()));
        g
    }

    /// One edge per line as `u v` with `u <= v`; loops are written `v v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for u in 0..self.vertex_count() {
            if self.loops[u] {
                let _ = writeln!(out, "{u} {u}");
            }
            for &v in &self.adj[u] {
                if u < v {
                    let _ = writeln!(out, "{u} {v}");
                }
            }
        }
        out
    }

    /// Neighbourhood bitmasks; only valid for graphs with at most 64 vertices.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.vertex_count() <= 64);
        self.adj
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect()
    }

    // ------------------------------------------------------------------------
    // Standard shapes
    // ------------------------------------------------------------------------

    /// `P_n`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// `C_n`; `C_1` is one looped vertex and `C_2` is a single edge.
    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 1 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges)
    }

    /// `P_n [] P_2`: rails `0..n` and `n..2n`, rung `i ~ n + i`.
    pub fn ladder(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push((i, n + i));
            if i + 1 < n {
                edges.push((i, i + 1));
                edges.push((n + i, n + i + 1));
            }
        }
        Graph::from_edges(2 * n, &edges)
    }

    /// `C_n [] P_2` for `n >= 3`.
    pub fn prism(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            let j = (i + 1) % n;
            edges.push((i, n + i));
            edges.push((i, j));
            edges.push((n + i, n + j));
        }
        Graph::from_edges(2 * n, &edges)
    }
}

/// Searches for a bijection `pattern -> host` preserving adjacency both ways,
/// returning `witness[p] = host vertex`. Loops are ignored. `transitive`
/// tells the search that `pattern` is vertex-transitive, so a single anchor
/// image suffices. Gives up after `budget` extension steps.
pub fn find_isomorphism(
    pattern: &Graph,
    host: &Graph,
    transitive: bool,
    budget: usize,
) -> Option<Vec<usize>> {
    let n = pattern.vertex_count();
    if n != host.vertex_count() || pattern.edge_count() != host.edge_count() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let mut pd: Vec<usize> = (0..n).map(|v| pattern.degree(v)).collect();
    let mut hd: Vec<usize> = (0..n).map(|v| host.degree(v)).collect();
    let (pd_sorted, hd_sorted) = {
        pd.sort_unstable();
        hd.sort_unstable();
        (pd, hd)
    };
    if pd_sorted != hd_sorted {
        return None;
    }
    // BFS order over the pattern from a minimum-degree anchor
    let anchor = (0..n).min_by_key(|&v| pattern.degree(v)).unwrap();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([anchor]);
    seen[anchor] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in pattern.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if order.len() != n {
        // disconnected patterns are not needed here
        return None;
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let anchor_candidates: Vec<usize> = (0..n)
        .filter(|&h| host.degree(h) == pattern.degree(anchor))
        .take(if transitive { 1 } else { n })
        .collect();

    let candidates = |depth: usize, map: &[usize], used: &[bool]| -> Vec<usize> {
        let p = order[depth];
        if depth == 0 {
            return anchor_candidates.clone();
        }
        host.neighbors(map[parent[p]])
            .iter()
            .copied()
            .filter(|&h| {
                !used[h]
                    && host.degree(h) == pattern.degree(p)
                    && pattern
                        .neighbors(p)
                        .iter()
                        .filter(|&&q| map[q] != usize::MAX)
                        .all(|&q| host.has_edge(h, map[q]))
            })
            .collect()
    };

    // explicit backtracking stack of (candidates, next index)
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(candidates(0, &map, &used), 0)];
    let mut steps = 0usize;
    while !stack.is_empty() {
        let depth = stack.len() - 1;
        let p = order[depth];
        let (cands, next) = stack.last_mut().unwrap();
        if map[p] != usize::MAX {
            used[map[p]] = false;
            map[p] = usize::MAX;
        }
        if *next >= cands.len() {
            stack.pop();
            continue;
        }
        let h = cands[*next];
        *next += 1;
        steps += 1;
        if steps > budget {
            return None;
        }
        map[p] = h;
        used[h] = true;
        if depth + 1 == n {
            // adjacency counts match and every pattern edge maps to a host
            // edge, so non-edges are preserved too
            return Some(map);
        }
        let c = candidates(depth + 1, &map, &used);
        stack.push((c, 0));
    }
    None
}
