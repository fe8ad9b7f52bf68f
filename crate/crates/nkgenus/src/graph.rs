//! Simple undirected graphs: construction, graph6/edge-list formats,
//! generators, maximum matching (blossom algorithm), vertex connectivity,
//! bipartiteness, and induced-subgraph utilities.
//!
//! Vertices are dense 0-based indices. Graphs are immutable after
//! construction; deletions return a remapped copy plus the index mapping so
//! results can be reported in the original labels.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::VecDeque;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("loop at vertex {0} is not allowed")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("invalid generator parameter: {0}")]
    BadParameter(String),
    #[error("order {order} exceeds the subset-scan cap {cap}")]
    ScanCapExceeded { order: usize, cap: usize },
    #[error("matching edge {0}-{1} is not in the graph")]
    MatchingEdgeAbsent(usize, usize),
    #[error("matching edges share vertex {0}")]
    MatchingNotDisjoint(usize),
}

/// An immutable simple undirected graph on vertices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Build a graph from an explicit vertex count and edge list.
    /// Rejects loops, duplicate edges, and out-of-range endpoints.
    pub fn new(order: usize, edge_list: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if order == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); order];
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= order {
                return Err(GraphError::VertexOutOfRange { v: u, n: order });
            }
            if v >= order {
                return Err(GraphError::VertexOutOfRange { v, n: order });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            edges.push((a, b));
            adj[a].push(b);
            adj[b].push(a);
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { adj, edges })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Index of edge `{u, v}` in the lexicographic edge order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count() == n * (n - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == n
    }

    /// The subgraph induced by deleting `s`, plus the mapping from new
    /// vertex indices to the original labels.
    pub fn induced_delete(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let n = self.order();
        let mut keep = vec![true; n];
        for &v in s.members() {
            keep[v] = false;
        }
        let kept: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
        let mut new_index = vec![usize::MAX; n];
        for (i, &v) in kept.iter().enumerate() {
            new_index[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep[u] && keep[v])
            .map(|&(u, v)| (new_index[u], new_index[v]))
            .collect();
        let g = Graph::new(kept.len().max(1), &edges)
            .expect("induced subgraph of a valid graph is valid");
        // Deleting every vertex leaves the empty graph; represent it with
        // order 0 semantics via an empty mapping (the caller treats an empty
        // mapping as the empty graph, which vacuously has a perfect matching).
        (g, kept)
    }

    /// graph6 serialization (canonical, no header).
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out: Vec<u8> = Vec::new();
        if n <= 62 {
            out.push(63 + n as u8);
        } else if n <= 258047 {
            out.push(126);
            out.push(63 + ((n >> 12) & 0x3f) as u8);
            out.push(63 + ((n >> 6) & 0x3f) as u8);
            out.push(63 + (n & 0x3f) as u8);
        } else {
            panic!("graph6 serialization supports at most 258047 vertices");
        }
        let mut bit_acc = 0u8;
        let mut bit_count = 0;
        for j in 1..n {
            for i in 0..j {
                bit_acc = (bit_acc << 1) | u8::from(self.has_edge(i, j));
                bit_count += 1;
                if bit_count == 6 {
                    out.push(63 + bit_acc);
                    bit_acc = 0;
                    bit_count = 0;
                }
            }
        }
        if bit_count > 0 {
            out.push(63 + (bit_acc << (6 - bit_count)));
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }
}

/// Input format for [`parse_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

/// Parse a graph in the named format, or auto-detect when `format` is `None`:
/// a `>>graph6<<` header or a single non-numeric line means graph6, lines of
/// vertex pairs mean an edge list.
pub fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph, GraphError> {
    match format {
        Some(GraphFormat::Graph6) => parse_graph6(text),
        Some(GraphFormat::EdgeList) => parse_edge_list(text),
        None => {
            let trimmed = text.trim();
            if trimmed.starts_with(">>graph6<<") {
                return parse_graph6(text);
            }
            let data_lines: Vec<&str> = trimmed
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .collect();
            let looks_like_edges = !data_lines.is_empty()
                && data_lines.iter().all(|l| {
                    let toks: Vec<&str> = l.split_whitespace().collect();
                    toks.len() == 2 && toks.iter().all(|t| t.chars().all(|c| c.is_ascii_digit()))
                });
            if looks_like_edges {
                parse_edge_list(text)
            } else {
                parse_graph6(text)
            }
        }
    }
}

/// Parse the graph6 format: optional `>>graph6<<` header, a vertex count,
/// then the upper triangle of the adjacency matrix packed 6 bits per byte
/// (column-major: x(0,1), x(0,2), x(1,2), x(0,3), ...).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix(">>graph6<<") {
        s = rest;
    }
    let bytes = s.as_bytes();
    let err = |msg: &str| GraphError::Graph6(msg.to_string());
    if bytes.is_empty() {
        return Err(err("empty input"));
    }
    let sixbit = |b: u8| -> Result<usize, GraphError> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(err(&format!("byte {b} out of graph6 range 63..=126")))
        }
    };
    let (n, header_len) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(err("vertex counts above 258047 are not supported"));
        }
        if bytes.len() < 4 {
            return Err(err("truncated vertex count"));
        }
        let n = (sixbit(bytes[1])? << 12) | (sixbit(bytes[2])? << 6) | sixbit(bytes[3])?;
        (n, 4)
    } else {
        (sixbit(bytes[0])?, 1)
    };
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - header_len != nbytes {
        return Err(err(&format!(
            "expected {nbytes} adjacency bytes for {n} vertices, found {}",
            bytes.len() - header_len
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[header_len + bit / 6];
            let val = sixbit(byte)?;
            if (val >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges)
}

/// Parse an edge list: one `u v` pair per line, `#` starts a comment, blank
/// lines ignored. The vertex count is the largest index plus one.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut max_vertex = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(GraphError::EdgeList(format!(
                "line {}: expected two vertex indices, got {line:?}",
                lineno + 1
            )));
        }
        let parse = |t: &str| {
            t.parse::<usize>().map_err(|_| {
                GraphError::EdgeList(format!("line {}: bad vertex index {t:?}", lineno + 1))
            })
        };
        let (u, v) = (parse(toks[0])?, parse(toks[1])?);
        max_vertex = max_vertex.max(u).max(v);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(GraphError::EdgeList("no edges given".to_string()));
    }
    Graph::new(max_vertex + 1, &edges)
}

/// The complete graph on n vertices.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::BadParameter("complete graph needs n >= 1".into()));
    }
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges)
}

/// The cycle on n >= 3 vertices.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParameter("cycle needs n >= 3".into()));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// The complete bipartite graph with part sizes a and b.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(GraphError::BadParameter("complete bipartite needs a, b >= 1".into()));
    }
    let edges: Vec<(usize, usize)> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::new(a + b, &edges)
}

/// The icosahedron: 12 vertices, 30 edges, 5-regular, planar, 5-connected.
pub fn icosahedron() -> Graph {
    const ADJ: [[usize; 5]; 12] = [
        [1, 2, 3, 4, 5],
        [0, 2, 5, 6, 7],
        [0, 1, 3, 7, 8],
        [0, 2, 4, 8, 9],
        [0, 3, 5, 9, 10],
        [0, 1, 4, 10, 6],
        [1, 5, 7, 10, 11],
        [1, 2, 6, 8, 11],
        [2, 3, 7, 9, 11],
        [3, 4, 8, 10, 11],
        [4, 5, 9, 6, 11],
        [6, 7, 8, 9, 10],
    ];
    let mut edges = Vec::new();
    for (u, nbrs) in ADJ.iter().enumerate() {
        for &v in nbrs {
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::new(12, &edges).expect("icosahedron adjacency is valid")
}

/// Erdos–Renyi random graph G(n, p), deterministic for a fixed seed.
pub fn random(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::BadParameter("random graph needs n >= 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::BadParameter(format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// A sorted, duplicate-free subset of a graph's vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    /// Build a vertex set, checking indices against the given order.
    /// Duplicates are collapsed (set semantics).
    pub fn new(
        order: usize,
        members: impl IntoIterator<Item = usize>,
    ) -> Result<VertexSet, GraphError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.iter().find(|&&v| v >= order) {
            return Err(GraphError::VertexOutOfRange { v, n: order });
        }
        Ok(VertexSet { members })
    }

    pub fn empty() -> VertexSet {
        VertexSet { members: Vec::new() }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A set of pairwise vertex-disjoint edges of a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Build a matching, checking that every edge is in `host` and that the
    /// edges are pairwise disjoint.
    pub fn new(host: &Graph, edges: &[(usize, usize)]) -> Result<Matching, GraphError> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        let mut used = vec![false; host.order()];
        for &(u, v) in edges {
            if !host.has_edge(u, v) {
                return Err(GraphError::MatchingEdgeAbsent(u, v));
            }
            for w in [u, v] {
                if used[w] {
                    return Err(GraphError::MatchingNotDisjoint(w));
                }
                used[w] = true;
            }
            norm.push(if u < v { (u, v) } else { (v, u) });
        }
        norm.sort_unstable();
        Ok(Matching { edges: norm })
    }

    pub fn empty() -> Matching {
        Matching { edges: Vec::new() }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The matched vertices, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "}}")
    }
}

/// Maximum matching on a general graph via the blossom algorithm
/// (BFS alternating trees with blossom contraction, O(V^3)).
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.order();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    // Greedy seed to cut down the number of augmenting phases.
    for v in 0..n {
        if mate[v].is_none() {
            for &u in g.neighbors(v) {
                if mate[u].is_none() {
                    mate[v] = Some(u);
                    mate[u] = Some(v);
                    break;
                }
            }
        }
    }
    for root in 0..n {
        if mate[root].is_none() {
            find_augmenting_path(g, &mut mate, root);
        }
    }
    let edges: Vec<(usize, usize)> =
        (0..n).filter_map(|v| mate[v].map(|u| (v, u))).filter(|&(v, u)| v < u).collect();
    Matching::new(g, &edges).expect("blossom output is a valid matching")
}

// Parent pointers discovered by the alternating BFS, shared by the helpers.
struct SearchState {
    parent: Vec<usize>,
    base: Vec<usize>,
}

const NONE: usize = usize::MAX;

/// One phase of the blossom algorithm: grow an alternating BFS tree from the
/// exposed `root`, contracting blossoms as they appear; on reaching another
/// exposed vertex, flip the augmenting path in place. Returns whether the
/// matching grew.
fn find_augmenting_path(g: &Graph, mate: &mut [Option<usize>], root: usize) -> bool {
    let n = g.order();
    let mut st = SearchState { parent: vec![NONE; n], base: (0..n).collect() };
    let mut in_queue = vec![false; n];
    let mut queue = VecDeque::from([root]);
    in_queue[root] = true;
    while let Some(v) = queue.pop_front() {
        for &to in g.neighbors(v) {
            if st.base[v] == st.base[to] || mate[v] == Some(to) {
                continue;
            }
            if to == root || mate[to].is_some_and(|m| st.parent[m] != NONE) {
                // An odd cycle (blossom): contract it to its base.
                let cur_base = lowest_common_base(&st, mate, v, to);
                let mut in_blossom = vec![false; n];
                mark_blossom_path(&mut st, mate, v, cur_base, to, &mut in_blossom);
                mark_blossom_path(&mut st, mate, to, cur_base, v, &mut in_blossom);
                for i in 0..n {
                    if in_blossom[st.base[i]] {
                        st.base[i] = cur_base;
                        if !in_queue[i] {
                            in_queue[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if st.parent[to] == NONE {
                st.parent[to] = v;
                match mate[to] {
                    None => {
                        // Exposed vertex: augmenting path found. Flip it.
                        let mut v = to;
                        while v != NONE {
                            let pv = st.parent[v];
                            let next = mate[pv];
                            mate[v] = Some(pv);
                            mate[pv] = Some(v);
                            v = next.unwrap_or(NONE);
                        }
                        return true;
                    }
                    Some(m) => {
                        if !in_queue[m] {
                            in_queue[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
    }
    false
}

fn lowest_common_base(st: &SearchState, mate: &[Option<usize>], a: usize, b: usize) -> usize {
    let mut seen = vec![false; st.base.len()];
    let mut v = a;
    loop {
        v = st.base[v];
        seen[v] = true;
        match mate[v] {
            None => break,
            Some(m) => {
                if st.parent[m] == NONE {
                    break;
                }
                v = st.parent[m];
            }
        }
    }
    let mut v = b;
    loop {
        v = st.base[v];
        if seen[v] {
            return v;
        }
        v = st.parent[mate[v].expect("non-base blossom vertex is matched")];
    }
}

fn mark_blossom_path(
    st: &mut SearchState,
    mate: &[Option<usize>],
    mut v: usize,
    base: usize,
    mut child: usize,
    in_blossom: &mut [bool],
) {
    while st.base[v] != base {
        let m = mate[v].expect("blossom path vertex is matched");
        in_blossom[st.base[v]] = true;
        in_blossom[st.base[m]] = true;
        st.parent[v] = child;
        child = m;
        v = st.parent[m];
    }
}

/// Whether the graph has a perfect matching (even order and a maximum
/// matching covering every vertex).
pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order() % 2 == 0 && 2 * maximum_matching(g).len() == g.order()
}

/// Vertex connectivity: the minimum number of vertex deletions that
/// disconnect the graph (or n-1 for complete graphs). Computed by
/// maximum flow between non-adjacent vertex pairs on the split digraph.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    // kappa = min over non-adjacent pairs (s, t) of the maximum number of
    // internally disjoint s-t paths. The graph is not complete, so at least
    // one such pair exists.
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(st_vertex_flow(g, s, t));
            }
        }
    }
    best
}

/// Max-flow from s to t in the vertex-split digraph: each vertex becomes an
/// in/out pair joined by a unit-capacity arc; each edge becomes two
/// effectively unbounded arcs. The flow value equals the maximum number of
/// internally disjoint s-t paths (s, t non-adjacent).
fn st_vertex_flow(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.order();
    let node_in = |v: usize| 2 * v;
    let node_out = |v: usize| 2 * v + 1;
    let mut flow = FlowNetwork::new(2 * n);
    let big = n as i64;
    for v in 0..n {
        flow.add_arc(node_in(v), node_out(v), 1);
    }
    for &(u, v) in g.edges() {
        flow.add_arc(node_out(u), node_in(v), big);
        flow.add_arc(node_out(v), node_in(u), big);
    }
    flow.max_flow(node_out(s), node_in(t)) as usize
}

/// Dinic's algorithm on a small network.
struct FlowNetwork {
    to: Vec<usize>,
    cap: Vec<i64>,
    head: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> FlowNetwork {
        FlowNetwork { to: Vec::new(), cap: Vec::new(), head: vec![Vec::new(); nodes] }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        self.head[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(cap);
        self.head[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let n = self.head.len();
        let mut total = 0;
        loop {
            // BFS level graph.
            let mut level = vec![NONE; n];
            level[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &e in &self.head[v] {
                    if self.cap[e] > 0 && level[self.to[e]] == NONE {
                        level[self.to[e]] = level[v] + 1;
                        queue.push_back(self.to[e]);
                    }
                }
            }
            if level[t] == NONE {
                return total;
            }
            let mut iter = vec![0usize; n];
            loop {
                let pushed = self.dfs(s, t, i64::MAX, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn dfs(&mut self, v: usize, t: usize, limit: i64, level: &[usize], iter: &mut [usize]) -> i64 {
        if v == t {
            return limit;
        }
        while iter[v] < self.head[v].len() {
            let e = self.head[v][iter[v]];
            let to = self.to[e];
            if self.cap[e] > 0 && level[to] == level[v] + 1 {
                let pushed = self.dfs(to, t, limit.min(self.cap[e]), level, iter);
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            iter[v] += 1;
        }
        0
    }
}

/// A proper 2-coloring (false/true sides) if the graph is bipartite.
pub fn two_coloring(g: &Graph) -> Option<Vec<bool>> {
    let n = g.order();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for &u in g.neighbors(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!cv);
                        queue.push_back(u);
                    }
                    Some(cu) => {
                        if cu == cv {
                            return None;
                        }
                    }
                }
            }
        }
    }
    Some(color.into_iter().map(|c| c.unwrap()).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g).is_some()
}

/// The maximum number of vertices over all induced bipartite subgraphs,
/// found by scanning every vertex subset. Exponential in the order; the cap
/// bounds the order that will be scanned.
pub fn max_induced_bipartite_order(g: &Graph, cap: usize) -> Result<usize, GraphError> {
    let n = g.order();
    if n > cap || n > 63 {
        return Err(GraphError::ScanCapExceeded { order: n, cap: cap.min(63) });
    }
    let nbr: Vec<u64> =
        (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u))).collect();
    let mut best = 0usize;
    for mask in 0u64..(1u64 << n) {
        if (mask.count_ones() as usize) <= best {
            continue;
        }
        if induced_is_bipartite(&nbr, mask) {
            best = mask.count_ones() as usize;
        }
    }
    Ok(best)
}

fn induced_is_bipartite(nbr: &[u64], mask: u64) -> bool {
    let mut side = [0u64; 2];
    let mut uncolored = mask;
    while uncolored != 0 {
        let seed = uncolored.trailing_zeros() as usize;
        let mut frontier = 1u64 << seed;
        let mut cur = 0usize;
        side[cur] |= frontier;
        uncolored &= !frontier;
        while frontier != 0 {
            let mut reached = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                reached |= nbr[v] & mask;
            }
            if reached & side[cur] != 0 {
                return false;
            }
            let fresh = reached & !side[0] & !side[1];
            cur ^= 1;
            side[cur] |= fresh;
            uncolored &= !fresh;
            frontier = fresh;
        }
    }
    true
}
