//! Undirected graphs with optional loops, induced-substructure search and
//! the pattern families used by the structural analyses.
//!
//! Vertices are dense integers `0..n`. Loops are tracked separately from
//! edges; `N(v)` contains `v` exactly when `v` has a loop. All search
//! routines that speak about induced paths/cycles operate on the underlying
//! simple graph (loops ignored).

use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<bool>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?}, loops={:?})", self.n, self.edges(), self.loops())
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, adj: vec![vec![false; n]; n], m: 0 }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of non-loop edges.
    pub fn size(&self) -> usize {
        self.m
    }

    /// Inserts the edge `uv` (`u != v`). Returns false if already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        if self.adj[u][v] {
            return false;
        }
        self.adj[u][v] = true;
        self.adj[v][u] = true;
        self.m += 1;
        true
    }

    pub fn add_loop(&mut self, v: usize) -> bool {
        assert!(v < self.n, "bad loop {v}");
        if self.adj[v][v] {
            return false;
        }
        self.adj[v][v] = true;
        true
    }

    /// True for edges `uv` with `u != v`, and for loops when `u == v`.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    #[inline]
    pub fn has_loop(&self, v: usize) -> bool {
        self.adj[v][v]
    }

    /// Open neighborhood in the paper's sense: contains `v` iff `v` has a loop.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.adj[v][u]).collect()
    }

    /// Neighbors in the underlying simple graph (never contains `v`).
    pub fn simple_neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| u != v && self.adj[v][u]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| u != v && self.adj[v][u]).count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v][v]).collect()
    }

    pub fn is_loopless(&self) -> bool {
        (0..self.n).all(|v| !self.adj[v][v])
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|v| self.adj[v][v])
    }

    /// Induced subgraph on `verts`; vertex `i` of the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            if self.adj[u][u] {
                g.add_loop(i);
            }
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.adj[u][v] {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for v in self.loops() {
            g.add_loop(v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        for v in other.loops() {
            g.add_loop(v + off);
        }
        g
    }

    pub fn path(k: usize) -> Graph {
        let mut g = Graph::new(k);
        for i in 1..k {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn cycle(k: usize) -> Graph {
        assert!(k >= 3);
        let mut g = Graph::path(k);
        g.add_edge(k - 1, 0);
        g
    }

    pub fn complete(k: usize) -> Graph {
        let mut g = Graph::new(k);
        for u in 0..k {
            for v in u + 1..k {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn with_all_loops(mut self) -> Graph {
        for v in 0..self.n {
            self.add_loop(v);
        }
        self
    }

    /// Maximal connected vertex sets, ordered by smallest contained vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            let mut queue = vec![s];
            seen[s] = true;
            while let Some(v) = queue.pop() {
                for u in 0..self.n {
                    if u != v && self.adj[v][u] && !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Proper 2-coloring of the underlying simple graph, if one exists.
    /// A loop makes the graph non-bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        if !self.is_loopless() {
            return None;
        }
        let mut side = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = vec![s];
            while let Some(v) = queue.pop() {
                let sv = side[v].unwrap();
                for u in 0..self.n {
                    if u != v && self.adj[v][u] {
                        match side[u] {
                            None => {
                                side[u] = Some(!sv);
                                queue.push(u);
                            }
                            Some(su) if su == sv => return None,
                            _ => {}
                        }
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }
}

/// Pattern families forbidden by the structural algorithms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PatternFamily {
    /// Path on `t` vertices.
    Path(usize),
    /// Subdivided claw `S_{a,b,c}`: three paths of `a`, `b`, `c` extra
    /// vertices glued at a common center (vertex 0). Branch vertices are
    /// numbered consecutively: `1..=a`, `a+1..=a+b`, `a+b+1..=a+b+c`.
    SubdividedClaw(usize, usize, usize),
    Triangle,
    /// Induced `k`-cycle (vertices `0..k`) with a pendant `t`-vertex path
    /// (`k..k+t`) attached to cycle vertex 0.
    CycleTail(usize, usize),
    /// Induced `k`-cycle with a pendant `t`-vertex path whose first vertex
    /// is adjacent to the two consecutive cycle vertices 0 and 1. This is
    /// the line graph of the corresponding `CycleTail`.
    CycleTriangleTail(usize, usize),
    Custom(GraphJson),
}

const PATTERN_CAP: usize = 64;

pub fn materialize_pattern(family: &PatternFamily) -> Result<Graph, Error> {
    let chk = |x: usize, lo: usize| {
        if x < lo || x > PATTERN_CAP {
            Err(Error::BadParameter(format!("pattern parameter {x} out of range [{lo},{PATTERN_CAP}]")))
        } else {
            Ok(())
        }
    };
    match family {
        PatternFamily::Path(t) => {
            chk(*t, 1)?;
            Ok(Graph::path(*t))
        }
        PatternFamily::SubdividedClaw(a, b, c) => {
            chk(*a, 1)?;
            chk(*b, 1)?;
            chk(*c, 1)?;
            let mut g = Graph::new(a + b + c + 1);
            let mut next = 1;
            for &len in &[*a, *b, *c] {
                let mut prev = 0;
                for _ in 0..len {
                    g.add_edge(prev, next);
                    prev = next;
                    next += 1;
                }
            }
            Ok(g)
        }
        PatternFamily::Triangle => Ok(Graph::complete(3)),
        PatternFamily::CycleTail(k, t) => {
            chk(*k, 3)?;
            chk(*t, 1)?;
            let mut g = Graph::cycle(*k);
            let mut g2 = Graph::new(k + t);
            for (u, v) in g.edges() {
                g2.add_edge(u, v);
            }
            g = g2;
            g.add_edge(0, *k);
            for i in 1..*t {
                g.add_edge(k + i - 1, k + i);
            }
            Ok(g)
        }
        PatternFamily::CycleTriangleTail(k, t) => {
            chk(*k, 3)?;
            chk(*t, 1)?;
            let mut g = Graph::new(k + t);
            for i in 0..*k {
                g.add_edge(i, (i + 1) % k);
            }
            g.add_edge(0, *k);
            g.add_edge(1, *k);
            for i in 1..*t {
                g.add_edge(k + i - 1, k + i);
            }
            Ok(g)
        }
        PatternFamily::Custom(j) => j.to_graph(),
    }
}

/// Searches for an induced embedding of `pattern` (loopless) into the
/// underlying simple graph of `host`: an injective map preserving edges and
/// non-edges of the pattern. Deterministic for a fixed vertex ordering.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    contains_induced_budgeted(host, pattern, u64::MAX).unwrap_or(None)
}

/// Budgeted variant: `Err` when the node budget is exhausted before the
/// search completed (absence is then unattested).
pub fn contains_induced_budgeted(
    host: &Graph,
    pattern: &Graph,
    budget: u64,
) -> Result<Option<Vec<usize>>, Error> {
    assert!(pattern.is_loopless(), "pattern must be loopless");
    let p = pattern.order();
    if p > host.order() {
        return Ok(None);
    }
    if p == 0 {
        return Ok(Some(Vec::new()));
    }
    // Order pattern vertices so that each one after the first is adjacent to
    // an earlier one when possible (keeps the partial map constrained).
    let order = {
        let mut order: Vec<usize> = Vec::with_capacity(p);
        let mut placed = vec![false; p];
        let mut degs: Vec<usize> = (0..p).map(|v| pattern.degree(v)).collect();
        while order.len() < p {
            let mut best: Option<usize> = None;
            for v in 0..p {
                if placed[v] {
                    continue;
                }
                let attached = order.iter().any(|&u| pattern.has_edge(u, v));
                let key = (attached, degs[v], std::cmp::Reverse(v));
                if best.map_or(true, |b| {
                    let bk = (order.iter().any(|&u| pattern.has_edge(u, b)), degs[b], std::cmp::Reverse(b));
                    key > bk
                }) {
                    best = Some(v);
                }
            }
            let v = best.unwrap();
            placed[v] = true;
            degs[v] = pattern.degree(v);
            order.push(v);
        }
        order
    };
    let mut map = vec![usize::MAX; p];
    let mut used = vec![false; host.order()];
    let mut nodes: u64 = 0;
    fn rec(
        host: &Graph,
        pattern: &Graph,
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool, Error> {
        if depth == order.len() {
            return Ok(true);
        }
        let pv = order[depth];
        for hv in 0..host.order() {
            if used[hv] {
                continue;
            }
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::BudgetExceeded("induced-subgraph search node budget".into()));
            }
            let ok = order[..depth].iter().all(|&pu| {
                let hu = map[pu];
                pattern.has_edge(pu, pv) == (hu != hv && host.has_edge(hu, hv))
            });
            if ok {
                map[pv] = hv;
                used[hv] = true;
                if rec(host, pattern, order, depth + 1, map, used, nodes, budget)? {
                    return Ok(true);
                }
                used[hv] = false;
                map[pv] = usize::MAX;
            }
        }
        Ok(false)
    }
    if rec(host, pattern, &order, 0, &mut map, &mut used, &mut nodes, budget)? {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Enumerates induced paths of the underlying simple graph, up to
/// `max_vertices` vertices, each undirected path reported once with its
/// smaller endpoint first. Single-vertex sequences count as induced paths.
/// With `endpoints = Some((u, u'))` only induced `u`-`u'` paths are
/// returned (the singleton `[u]` when `u == u'`).
///
/// Worst-case output size is `O(n^max_vertices)`; callers opt in via the cap.
pub fn enumerate_induced_paths(
    g: &Graph,
    endpoints: Option<(usize, usize)>,
    max_vertices: usize,
) -> Vec<Vec<usize>> {
    assert!(max_vertices >= 1);
    let mut out = Vec::new();
    let mut emit = |p: &[usize]| out.push(p.to_vec());
    match endpoints {
        Some((u, v)) => {
            let (a, b) = (u.min(v), u.max(v));
            if a == b {
                emit(&[a]);
                return out;
            }
            let mut path = vec![a];
            let mut on = vec![false; g.order()];
            on[a] = true;
            induced_path_dfs(g, &mut path, &mut on, max_vertices, &mut |p| {
                let last = *p.last().unwrap();
                if last == b {
                    emit(p);
                }
            });
        }
        None => {
            for s in 0..g.order() {
                emit(&[s]);
            }
            for s in 0..g.order() {
                let mut path = vec![s];
                let mut on = vec![false; g.order()];
                on[s] = true;
                induced_path_dfs(g, &mut path, &mut on, max_vertices, &mut |p| {
                    if p[0] < *p.last().unwrap() {
                        emit(p);
                    }
                });
            }
        }
    }
    out
}

/// DFS with on-path chord pruning; calls `visit` on every induced path of
/// 2..=max vertices extending the current prefix.
fn induced_path_dfs(
    g: &Graph,
    path: &mut Vec<usize>,
    on: &mut Vec<bool>,
    max: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if path.len() >= max {
        return;
    }
    let last = *path.last().unwrap();
    for w in 0..g.order() {
        if on[w] || w == last || !g.has_edge(last, w) {
            continue;
        }
        // w must not be adjacent to any earlier path vertex
        if path[..path.len() - 1].iter().any(|&u| u != w && g.has_edge(u, w)) {
            continue;
        }
        path.push(w);
        on[w] = true;
        visit(path);
        induced_path_dfs(g, path, on, max, visit);
        on[w] = false;
        path.pop();
    }
}

/// Complete enumeration of induced cycles with at least `min_len` vertices,
/// emitted in nondecreasing length and truncated after `cap` items (the
/// returned flag is set when the cap was reached). Each cycle appears once,
/// rooted at its smallest vertex with the smaller neighbor second.
pub fn enumerate_induced_cycles(g: &Graph, min_len: usize, cap: usize) -> (Vec<Vec<usize>>, bool) {
    assert!(min_len >= 3);
    let n = g.order();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for k in min_len..=n {
        if out.len() >= cap {
            return (out, true);
        }
        for root in 0..n {
            if out.len() >= cap {
                return (out, true);
            }
            let mut path = vec![root];
            let mut on = vec![false; n];
            on[root] = true;
            cycle_dfs(g, k, root, &mut path, &mut on, &mut out, cap);
        }
    }
    (out, false)
}

fn cycle_dfs(
    g: &Graph,
    k: usize,
    root: usize,
    path: &mut Vec<usize>,
    on: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) {
    if out.len() >= cap {
        return;
    }
    if path.len() == k {
        let last = *path.last().unwrap();
        if g.has_edge(last, root) && path[1] < last {
            out.push(path.clone());
        }
        return;
    }
    let last = *path.last().unwrap();
    for w in root + 1..g.order() {
        if on[w] || !g.has_edge(last, w) {
            continue;
        }
        // Interior cycle vertices may touch neither the root nor any other
        // non-consecutive path vertex; the second vertex necessarily touches
        // the root, and the closing vertex is allowed to.
        let pos = path.len();
        let closes_next = pos + 1 == k;
        if pos >= 2 && !closes_next && g.has_edge(w, root) {
            continue;
        }
        if pos >= 2 && path[1..pos - 1].iter().any(|&u| g.has_edge(u, w)) {
            continue;
        }
        path.push(w);
        on[w] = true;
        cycle_dfs(g, k, root, path, on, out, cap);
        on[w] = false;
        path.pop();
    }
}

/// Line graph of a loopless graph together with the bijection
/// edge-of-`g` -> vertex-of-result (index `i` is the `i`-th edge in the
/// lexicographic `(u, v)` order, `u < v`).
pub fn line_graph(g: &Graph) -> Result<(Graph, Vec<(usize, usize)>), Error> {
    if !g.is_loopless() {
        return Err(Error::BadParameter("line graph of a graph with loops".into()));
    }
    let edges = g.edges();
    let mut lg = Graph::new(edges.len());
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                lg.add_edge(i, j);
            }
        }
    }
    Ok((lg, edges))
}

/// Isomorphism test with loops respected. Backtracking over color-refined
/// candidate classes; adequate for the small graphs used in tests and
/// shape checks (<= 16 vertices or so).
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() || a.loops().len() != b.loops().len() {
        return false;
    }
    let n = a.order();
    let colors = |g: &Graph| -> Vec<u64> {
        let mut col: Vec<u64> = (0..n).map(|v| (g.degree(v) as u64) << 1 | g.has_loop(v) as u64).collect();
        for _ in 0..n {
            let mut next: Vec<u64> = Vec::with_capacity(n);
            for v in 0..n {
                let mut ns: Vec<u64> = (0..n).filter(|&u| u != v && g.has_edge(u, v)).map(|u| col[u]).collect();
                ns.sort_unstable();
                let mut h: u64 = col[v].wrapping_mul(0x9e3779b97f4a7c15);
                for x in ns {
                    h = h.wrapping_mul(31).wrapping_add(x);
                }
                next.push(h);
            }
            if next == col {
                break;
            }
            col = next;
        }
        col
    };
    let ca = colors(a);
    let cb = colors(b);
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(a: &Graph, b: &Graph, ca: &[u64], cb: &[u64], v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        let n = a.order();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || ca[v] != cb[w] || a.has_loop(v) != b.has_loop(w) {
                continue;
            }
            if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
                map[v] = w;
                used[w] = true;
                if rec(a, b, ca, cb, v + 1, map, used) {
                    return true;
                }
                used[w] = false;
                map[v] = usize::MAX;
            }
        }
        false
    }
    rec(a, b, &ca, &cb, 0, &mut map, &mut used)
}

/// JSON form: `{"n": n, "edges": [[u,v],...], "loops": [v,...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub loops: Vec<usize>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson { n: g.order(), edges: g.edges(), loops: g.loops() }
    }

    pub fn to_graph(&self) -> Result<Graph, Error> {
        let mut g = Graph::new(self.n);
        for &(u, v) in &self.edges {
            if u >= self.n || v >= self.n {
                return Err(Error::BadParameter(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(Error::BadParameter(format!("loop ({u},{u}) listed as an edge")));
            }
            if !g.add_edge(u, v) {
                return Err(Error::BadParameter(format!("duplicate edge ({u},{v})")));
            }
        }
        for &v in &self.loops {
            if v >= self.n {
                return Err(Error::BadParameter(format!("loop {v} out of range")));
            }
            if !g.add_loop(v) {
                return Err(Error::BadParameter(format!("duplicate loop {v}")));
            }
        }
        Ok(g)
    }
}

/// Edge-list text format: header `p graph n m`, then `m` lines `e u v`
/// with 1-based vertices; a loop is written `e v v`.
pub fn parse_edge_list(text: &str) -> Result<Graph, Error> {
    let mut g: Option<Graph> = None;
    let mut claimed = 0usize;
    let mut lines_seen = 0usize;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts.as_slice() {
            ["p", "graph", n, m] => {
                if g.is_some() {
                    return Err(Error::BadParameter("duplicate header".into()));
                }
                let n: usize = n.parse().map_err(|_| Error::BadParameter("bad n".into()))?;
                claimed = m.parse().map_err(|_| Error::BadParameter("bad m".into()))?;
                g = Some(Graph::new(n));
            }
            ["e", u, v] => {
                let g = g.as_mut().ok_or_else(|| Error::BadParameter("edge before header".into()))?;
                let u: usize = u.parse().map_err(|_| Error::BadParameter("bad vertex".into()))?;
                let v: usize = v.parse().map_err(|_| Error::BadParameter("bad vertex".into()))?;
                if u == 0 || v == 0 || u > g.order() || v > g.order() {
                    return Err(Error::BadParameter(format!("vertex out of range in `e {u} {v}`")));
                }
                let inserted = if u == v { g.add_loop(u - 1) } else { g.add_edge(u - 1, v - 1) };
                if !inserted {
                    return Err(Error::BadParameter(format!("duplicate edge `e {u} {v}`")));
                }
                lines_seen += 1;
            }
            _ => return Err(Error::BadParameter(format!("unrecognized line: {line}"))),
        }
    }
    let g = g.ok_or_else(|| Error::BadParameter("missing header".into()))?;
    if lines_seen != claimed {
        return Err(Error::BadParameter(format!("header claims {claimed} edges, found {lines_seen}")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let loops = g.loops();
    let mut s = format!("p graph {} {}\n", g.order(), edges.len() + loops.len());
    for (u, v) in edges {
        s.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    for v in loops {
        s.push_str(&format!("e {} {}\n", v + 1, v + 1));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_claw_is_k13() {
        let g = materialize_pattern(&PatternFamily::SubdividedClaw(1, 1, 1)).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 3);
        assert_eq!(g.degree(0), 3);
    }

    #[test]
    fn pattern_cycle_tail() {
        let g = materialize_pattern(&PatternFamily::CycleTail(7, 3)).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.size(), 10);
    }

    #[test]
    fn pattern_single_vertex_path() {
        let g = materialize_pattern(&PatternFamily::Path(1)).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn pattern_rejects_out_of_range() {
        assert!(materialize_pattern(&PatternFamily::Path(0)).is_err());
        assert!(materialize_pattern(&PatternFamily::CycleTail(2, 1)).is_err());
        assert!(materialize_pattern(&PatternFamily::Path(65)).is_err());
    }

    #[test]
    fn induced_p4_absent_in_c4() {
        let c4 = Graph::cycle(4);
        assert!(contains_induced(&c4, &Graph::path(4)).is_none());
    }

    #[test]
    fn claw_contains_s111() {
        let claw = materialize_pattern(&PatternFamily::SubdividedClaw(1, 1, 1)).unwrap();
        let m = contains_induced(&claw, &claw.clone()).unwrap();
        assert_eq!(m.len(), 4);
    }

    #[test]
    fn b73_longest_induced_path_has_9_vertices() {
        // An induced P10 would use all 10 vertices of B'_{7,3} and hence
        // induce all 10 of its edges; a 10-vertex path has only 9.
        let b = materialize_pattern(&PatternFamily::CycleTail(7, 3)).unwrap();
        assert!(contains_induced(&b, &Graph::path(9)).is_some());
        assert!(contains_induced(&b, &Graph::path(10)).is_none());
    }

    #[test]
    fn paths_p3_endpoints() {
        let g = Graph::path(3);
        let ps = enumerate_induced_paths(&g, Some((0, 2)), 3);
        assert_eq!(ps, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn paths_c5_max2() {
        let g = Graph::cycle(5);
        let ps = enumerate_induced_paths(&g, None, 2);
        let single = ps.iter().filter(|p| p.len() == 1).count();
        let edges = ps.iter().filter(|p| p.len() == 2).count();
        assert_eq!(single, 5);
        assert_eq!(edges, 5);
    }

    #[test]
    fn paths_c6_two_arcs() {
        let g = Graph::cycle(6);
        let ps = enumerate_induced_paths(&g, Some((0, 3)), 6);
        assert_eq!(ps.len(), 2);
    }

    #[test]
    fn endpoint_filter_matches_free_enumeration() {
        let mut g = Graph::cycle(6);
        g.add_edge(0, 3);
        g.add_edge(1, 4);
        for u in 0..6 {
            for v in u..6 {
                let direct = enumerate_induced_paths(&g, Some((u, v)), 6);
                let filtered: Vec<_> = enumerate_induced_paths(&g, None, 6)
                    .into_iter()
                    .filter(|p| p[0] == u.min(v) && *p.last().unwrap() == u.max(v))
                    .collect();
                let mut a = direct.clone();
                let mut b = filtered.clone();
                a.sort();
                b.sort();
                assert_eq!(a, b, "endpoints ({u},{v})");
            }
        }
    }

    #[test]
    fn cycles_c6() {
        let (cs, trunc) = enumerate_induced_cycles(&Graph::cycle(6), 4, 100);
        assert!(!trunc);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].len(), 6);
    }

    #[test]
    fn cycles_k4_none_of_len4() {
        let (cs, _) = enumerate_induced_cycles(&Graph::complete(4), 4, 100);
        assert!(cs.is_empty());
    }

    #[test]
    fn petersen_has_12_induced_c5() {
        // outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5)
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, i + 5);
        }
        let (cs, trunc) = enumerate_induced_cycles(&g, 5, 20);
        assert!(trunc); // more than 20 induced cycles exist (C5s and C6s)
        assert_eq!(cs.iter().take_while(|c| c.len() == 5).count(), 12);
    }

    #[test]
    fn line_graph_small_cases() {
        let (lp4, _) = line_graph(&Graph::path(4)).unwrap();
        assert!(are_isomorphic(&lp4, &Graph::path(3)));
        let (lk3, _) = line_graph(&Graph::complete(3)).unwrap();
        assert!(are_isomorphic(&lk3, &Graph::complete(3)));
        let claw = materialize_pattern(&PatternFamily::SubdividedClaw(1, 1, 1)).unwrap();
        let (lclaw, _) = line_graph(&claw).unwrap();
        assert!(are_isomorphic(&lclaw, &Graph::complete(3)));
    }

    #[test]
    fn line_graph_rejects_loops() {
        let mut g = Graph::path(2);
        g.add_loop(0);
        assert!(line_graph(&g).is_err());
    }

    #[test]
    fn cycle_triangle_tail_is_line_graph_of_cycle_tail() {
        for (k, t) in [(5, 2), (6, 3), (7, 3)] {
            let b = materialize_pattern(&PatternFamily::CycleTail(k, t)).unwrap();
            let bd = materialize_pattern(&PatternFamily::CycleTriangleTail(k, t)).unwrap();
            let (lb, _) = line_graph(&b).unwrap();
            assert!(are_isomorphic(&lb, &bd), "k={k} t={t}");
        }
    }

    #[test]
    fn components_ordering() {
        assert_eq!(Graph::path(3).components().len(), 1);
        let mut g = Graph::new(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(Graph::new(3).components(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn json_round_trip_and_rejects() {
        let mut g = Graph::cycle(4);
        g.add_loop(2);
        let j = GraphJson::from_graph(&g);
        assert_eq!(j.to_graph().unwrap(), g);
        let bad = GraphJson { n: 3, edges: vec![(0, 1), (1, 0)], loops: vec![] };
        assert!(bad.to_graph().is_err());
        let bad2 = GraphJson { n: 3, edges: vec![(1, 1)], loops: vec![] };
        assert!(bad2.to_graph().is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let mut g = Graph::cycle(5);
        g.add_loop(0);
        let s = write_edge_list(&g);
        assert_eq!(parse_edge_list(&s).unwrap(), g);
        assert!(parse_edge_list("p graph 3 2\ne 1 2\n").is_err()); // count mismatch
        assert!(parse_edge_list("p graph 3 2\ne 1 2\ne 1 2\n").is_err()); // duplicate
    }

    #[test]
    fn iso_distinguishes_loops() {
        let a = Graph::path(2);
        let mut b = Graph::path(2);
        b.add_loop(0);
        assert!(!are_isomorphic(&a, &b));
        assert!(are_isomorphic(&Graph::cycle(5), &Graph::cycle(5)));
        assert!(!are_isomorphic(&Graph::cycle(6), &Graph::path(6)));
    }
}
