//! Signed rotation systems and the cellular embeddings they define: face
//! tracing, Euler characteristic, per-vertex curvature ledgers, control
//! points, degree-bound verification, and genus bounds.
//!
//! A rotation system assigns each vertex a cyclic order of its incident
//! edges and each edge a sign. Positive edges preserve the local sense of
//! rotation, negative edges reverse it; a system whose signature is
//! switching-equivalent to all-positive describes an embedding in an
//! orientable surface, any other system a non-orientable one. Faces are
//! recovered by the next-edge rule, and `|G| - e + f` gives the Euler
//! characteristic of the carrier surface.

mod search;

pub use search::{
    genus_upper_bound_search, min_genus_exhaustive, MinGenusResult, SearchResult,
    DEFAULT_NONORIENTABLE_EDGE_CAP, DEFAULT_ORIENTABLE_EDGE_CAP, DEFAULT_SEARCH_BUDGET,
};

use crate::formulas::Surface;
use crate::graph::{Graph, VertexSet};
use num::{BigInt, BigRational, Zero};
use std::collections::VecDeque;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("face tracing requires a connected host graph")]
    Disconnected,
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("invalid edge signs: {0}")]
    InvalidSigns(String),
    #[error("malformed rotation text: {0}")]
    Parse(String),
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("the check needs at least {need} vertices, got {got}")]
    TooFewVertices { need: usize, got: usize },
    #[error("report does not match the graph: {0}")]
    HostMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("exhaustive search supports at most {cap} edges, got {edges}")]
    ExhaustiveCapExceeded { edges: usize, cap: usize },
    #[error("no cellular non-orientable embedding exists: the graph has no cycle")]
    NonorientableNeedsCycle,
}

/// A signed rotation system over a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    host: Graph,
    /// Per vertex, the incident edges (as edge indices) in cyclic order.
    rotations: Vec<Vec<usize>>,
    /// Per edge index, +1 or -1.
    signs: Vec<i8>,
}

impl RotationSystem {
    /// Build a rotation system from per-vertex neighbor orders and a list of
    /// negative edges. Each vertex's list must be a permutation of its
    /// neighborhood; every negative edge must exist in the host.
    pub fn new(
        host: Graph,
        neighbor_orders: &[Vec<usize>],
        negative_edges: &[(usize, usize)],
    ) -> Result<RotationSystem, EmbeddingError> {
        let n = host.order();
        if neighbor_orders.len() != n {
            return Err(EmbeddingError::InvalidRotation(format!(
                "expected {n} rotation lists, got {}",
                neighbor_orders.len()
            )));
        }
        let mut rotations = Vec::with_capacity(n);
        for (v, order) in neighbor_orders.iter().enumerate() {
            let mut sorted: Vec<usize> = order.clone();
            sorted.sort_unstable();
            if sorted != host.neighbors(v) {
                return Err(EmbeddingError::InvalidRotation(format!(
                    "vertex {v}: rotation {order:?} is not a permutation of its neighbors"
                )));
            }
            let edges: Vec<usize> =
                order.iter().map(|&w| host.edge_index(v, w).expect("validated neighbor")).collect();
            rotations.push(edges);
        }
        let mut signs = vec![1i8; host.edge_count()];
        for &(u, v) in negative_edges {
            let Some(e) = host.edge_index(u, v) else {
                return Err(EmbeddingError::InvalidSigns(format!("{u}-{v} is not an edge")));
            };
            if signs[e] == -1 {
                return Err(EmbeddingError::InvalidSigns(format!("{u}-{v} listed twice")));
            }
            signs[e] = -1;
        }
        Ok(RotationSystem { host, rotations, signs })
    }

    /// Internal constructor for search code that already works in edge
    /// indices. Validity is checked in debug builds only.
    pub(crate) fn from_edge_rotations(
        host: Graph,
        rotations: Vec<Vec<usize>>,
        signs: Vec<i8>,
    ) -> RotationSystem {
        debug_assert_eq!(rotations.len(), host.order());
        debug_assert_eq!(signs.len(), host.edge_count());
        debug_assert!(signs.iter().all(|&s| s == 1 || s == -1));
        RotationSystem { host, rotations, signs }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// The rotation at `v` as neighbor labels in cyclic order.
    pub fn neighbor_order(&self, v: usize) -> Vec<usize> {
        self.rotations[v]
            .iter()
            .map(|&e| {
                let (a, b) = self.host.edges()[e];
                if a == v {
                    b
                } else {
                    a
                }
            })
            .collect()
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<i8> {
        self.host.edge_index(u, v).map(|e| self.signs[e])
    }

    pub fn negative_edges(&self) -> Vec<(usize, usize)> {
        self.host
            .edges()
            .iter()
            .zip(&self.signs)
            .filter(|(_, &s)| s == -1)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn all_positive(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    /// Parse the rotation text format: one line per vertex
    /// (`v: w1 w2 ... wd` listing neighbors in cyclic order, vertices must
    /// cover 0..n-1), then an optional final `-: u1 v1, u2 v2` line naming
    /// the negative edges. `#` starts a comment.
    pub fn parse(text: &str) -> Result<RotationSystem, EmbeddingError> {
        let err = |msg: String| EmbeddingError::Parse(msg);
        let mut vertex_lines: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut negatives: Vec<(usize, usize)> = Vec::new();
        let mut saw_negatives = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((head, rest)) = line.split_once(':') else {
                return Err(err(format!("line {}: missing ':'", lineno + 1)));
            };
            let head = head.trim();
            let rest = rest.trim();
            if head == "-" {
                if saw_negatives {
                    return Err(err(format!("line {}: repeated sign section", lineno + 1)));
                }
                saw_negatives = true;
                for part in rest.split(',') {
                    let part = part.trim();
                    if part.is_empty() {
                        continue;
                    }
                    let toks: Vec<&str> = part.split_whitespace().collect();
                    if toks.len() != 2 {
                        return Err(err(format!(
                            "line {}: negative edge {part:?} is not a vertex pair",
                            lineno + 1
                        )));
                    }
                    let u = toks[0].parse::<usize>().map_err(|_| {
                        err(format!("line {}: bad vertex {:?}", lineno + 1, toks[0]))
                    })?;
                    let v = toks[1].parse::<usize>().map_err(|_| {
                        err(format!("line {}: bad vertex {:?}", lineno + 1, toks[1]))
                    })?;
                    negatives.push((u, v));
                }
            } else {
                let v = head
                    .parse::<usize>()
                    .map_err(|_| err(format!("line {}: bad vertex label {head:?}", lineno + 1)))?;
                if vertex_lines.iter().any(|&(u, _)| u == v) {
                    return Err(err(format!("line {}: vertex {v} repeated", lineno + 1)));
                }
                let mut nbrs = Vec::new();
                for tok in rest.split_whitespace() {
                    let w = tok
                        .parse::<usize>()
                        .map_err(|_| err(format!("line {}: bad neighbor {tok:?}", lineno + 1)))?;
                    nbrs.push(w);
                }
                vertex_lines.push((v, nbrs));
            }
        }
        if vertex_lines.is_empty() {
            return Err(err("no vertex lines".into()));
        }
        let n = vertex_lines.iter().map(|&(v, _)| v).max().unwrap() + 1;
        let mut orders: Vec<Option<Vec<usize>>> = vec![None; n];
        for (v, nbrs) in vertex_lines {
            orders[v] = Some(nbrs);
        }
        let mut neighbor_orders = Vec::with_capacity(n);
        for (v, o) in orders.into_iter().enumerate() {
            neighbor_orders.push(o.ok_or_else(|| err(format!("vertex {v} has no rotation line")))?);
        }
        // Derive the host from the rotation lines themselves; symmetry and
        // simplicity are enforced by graph construction plus the
        // permutation check in `new`.
        let mut edges = Vec::new();
        for (v, order) in neighbor_orders.iter().enumerate() {
            for &w in order {
                if w >= n {
                    return Err(err(format!("vertex {v} lists out-of-range neighbor {w}")));
                }
                if v < w {
                    edges.push((v, w));
                }
                if !neighbor_orders.get(w).is_some_and(|o| o.contains(&v)) {
                    return Err(err(format!("edge {v}-{w} is not listed symmetrically")));
                }
            }
        }
        let host = Graph::new(n, &edges).map_err(|e| err(e.to_string()))?;
        RotationSystem::new(host, &neighbor_orders, &negatives)
    }

    /// Serialize to the rotation text format parsed by [`Self::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in 0..self.host.order() {
            let nbrs: Vec<String> = self.neighbor_order(v).iter().map(|w| w.to_string()).collect();
            if nbrs.is_empty() {
                let _ = writeln!(out, "{v}:");
            } else {
                let _ = writeln!(out, "{v}: {}", nbrs.join(" "));
            }
        }
        let negatives = self.negative_edges();
        if !negatives.is_empty() {
            let parts: Vec<String> = negatives.iter().map(|(u, v)| format!("{u} {v}")).collect();
            let _ = writeln!(out, "-: {}", parts.join(", "));
        }
        out
    }
}

/// One traced face: the closed boundary walk as a vertex sequence. The walk
/// length equals the face size (number of edge traversals).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<usize>,
}

impl Face {
    pub fn size(&self) -> usize {
        self.walk.len()
    }
}

/// Per-vertex entry of the curvature ledger.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLedger {
    pub degree: usize,
    /// Number of face-angles at this vertex lying in triangular faces.
    pub triangle_corners: usize,
    /// 1 - d(v)/2 + sum of 1/x_i over the face-angles at v, exact.
    pub contribution: BigRational,
}

/// Everything recovered from tracing a rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    order: usize,
    edge_count: usize,
    faces: Vec<Face>,
    euler_characteristic: i64,
    orientable: bool,
    ledger: Vec<VertexLedger>,
    control: VertexSet,
}

impl EmbeddingReport {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.euler_characteristic
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn ledger(&self) -> &[VertexLedger] {
        &self.ledger
    }

    /// The surface carrying this embedding.
    pub fn surface(&self) -> Surface {
        let chi = self.euler_characteristic;
        if self.orientable {
            debug_assert!(chi <= 2 && (2 - chi) % 2 == 0);
            Surface::orientable(((2 - chi) / 2) as u64)
        } else {
            debug_assert!(chi <= 1);
            Surface::non_orientable((2 - chi) as u64)
                .expect("non-orientable characteristic is at most 1")
        }
    }
}

/// The contribution Φ(v) of a vertex in a traced report.
pub fn euler_contribution(
    report: &EmbeddingReport,
    v: usize,
) -> Result<BigRational, EmbeddingError> {
    report
        .ledger
        .get(v)
        .map(|l| l.contribution.clone())
        .ok_or(EmbeddingError::VertexOutOfRange { v, n: report.order })
}

/// All vertices whose contribution is at least χ/|G|. Never empty: the
/// contributions sum to χ, so some vertex attains the average.
pub fn control_points(report: &EmbeddingReport) -> VertexSet {
    report.control.clone()
}

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Trace all faces of a rotation system and assemble the full report.
///
/// States are (directed edge, side) pairs — 4e in total. A step flips the
/// side across a negative edge, then leaves along the rotation successor of
/// the entry edge on the positive side or its predecessor on the negative
/// side. Orbits of this step come in mirror pairs describing the same face
/// with opposite boundary orientation, so the face count is half the orbit
/// count.
pub fn trace_faces(rs: &RotationSystem) -> Result<EmbeddingReport, EmbeddingError> {
    let g = rs.host();
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected);
    }
    let n = g.order();
    let e = g.edge_count();
    if e == 0 {
        // A single vertex: one face covering the whole sphere. The vertex
        // ledger is pinned to Φ = χ = 2 so the rational identities hold in
        // this degenerate case, where the face is not bounded by any edge.
        let ledger =
            vec![VertexLedger { degree: 0, triangle_corners: 0, contribution: rational(2, 1) }];
        return Ok(EmbeddingReport {
            order: 1,
            edge_count: 0,
            faces: vec![Face { walk: vec![] }],
            euler_characteristic: 2,
            orientable: true,
            ledger,
            control: VertexSet::new(1, [0]).expect("vertex 0 exists"),
        });
    }

    // Arc encoding: arc = 2*edge + dir, dir 0 runs low->high endpoint.
    // State encoding: state = 2*arc + side, side 0 = positive.
    let arc_head = |arc: usize| {
        let (u, v) = g.edges()[arc >> 1];
        if arc & 1 == 0 {
            v
        } else {
            u
        }
    };
    let arc_tail = |arc: usize| {
        let (u, v) = g.edges()[arc >> 1];
        if arc & 1 == 0 {
            u
        } else {
            v
        }
    };
    let out_arc = |v: usize, edge: usize| {
        let (a, _) = g.edges()[edge];
        if v == a {
            2 * edge
        } else {
            2 * edge + 1
        }
    };
    // Position of each incident edge inside each vertex's rotation.
    let mut pos = vec![usize::MAX; n * e.max(1)];
    for v in 0..n {
        for (i, &edge) in rs.rotations[v].iter().enumerate() {
            pos[v * e + edge] = i;
        }
    }
    let next_state = |state: usize| {
        let side = state & 1;
        let arc = state >> 1;
        let edge = arc >> 1;
        let head = arc_head(arc);
        let side2 = if rs.signs[edge] == 1 { side } else { 1 - side };
        let rot = &rs.rotations[head];
        let d = rot.len();
        let i = pos[head * e + edge];
        debug_assert!(i != usize::MAX);
        let next_edge = if side2 == 0 { rot[(i + 1) % d] } else { rot[(i + d - 1) % d] };
        2 * out_arc(head, next_edge) + side2
    };
    // The mirror involution: reverse the arc and flip the side across the
    // edge sign. It anti-commutes with the step, pairing each orbit with
    // its reversal.
    let mirror = |state: usize| {
        let side = state & 1;
        let arc = state >> 1;
        let edge = arc >> 1;
        let side2 = if rs.signs[edge] == 1 { 1 - side } else { side };
        2 * (arc ^ 1) + side2
    };

    let states = 4 * e;
    let mut orbit_of = vec![usize::MAX; states];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for s0 in 0..states {
        if orbit_of[s0] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = Vec::new();
        let mut s = s0;
        loop {
            debug_assert_eq!(orbit_of[s], usize::MAX, "step function must be a permutation");
            orbit_of[s] = id;
            orbit.push(s);
            s = next_state(s);
            if s == s0 {
                break;
            }
        }
        orbits.push(orbit);
    }
    assert!(orbits.len() % 2 == 0, "orbits come in mirror pairs");
    let mirror_of: Vec<usize> = orbits.iter().map(|o| orbit_of[mirror(o[0])]).collect();
    for (i, &m) in mirror_of.iter().enumerate() {
        assert!(m != i, "a face walk cannot be its own reversal");
        assert_eq!(mirror_of[m], i);
        assert_eq!(orbits[i].len(), orbits[m].len());
    }

    // Keep the lower-indexed orbit of each pair; orbit ids increase with
    // their smallest state, so this choice and the face order are canonical.
    let chosen: Vec<usize> = (0..orbits.len()).filter(|&i| i < mirror_of[i]).collect();
    let f = chosen.len();

    let mut faces = Vec::with_capacity(f);
    let mut corners: Vec<Vec<usize>> = vec![Vec::new(); n]; // face sizes per corner
    let mut edge_uses = vec![0usize; e];
    for &oid in &chosen {
        let orbit = &orbits[oid];
        let size = orbit.len();
        let walk: Vec<usize> = orbit.iter().map(|&s| arc_tail(s >> 1)).collect();
        for &s in orbit {
            corners[arc_head(s >> 1)].push(size);
            edge_uses[(s >> 1) >> 1] += 1;
        }
        faces.push(Face { walk });
    }
    assert!(edge_uses.iter().all(|&c| c == 2), "every edge bounds exactly two face sides");
    let chi = n as i64 - e as i64 + f as i64;
    if n >= 3 {
        assert!(faces.iter().all(|fc| fc.size() >= 3), "simple hosts have no tiny faces");
    }

    let mut ledger = Vec::with_capacity(n);
    let mut phi_sum = BigRational::zero();
    for (v, vertex_corners) in corners.iter().enumerate() {
        let d = g.degree(v);
        assert_eq!(vertex_corners.len(), d, "each edge end yields one face-angle");
        let mut phi = rational(1, 1) - rational(d as i64, 2);
        let mut triangles = 0;
        for &size in vertex_corners {
            phi += rational(1, size as i64);
            if size == 3 {
                triangles += 1;
            }
        }
        phi_sum += &phi;
        ledger.push(VertexLedger { degree: d, triangle_corners: triangles, contribution: phi });
    }
    assert_eq!(phi_sum, BigRational::from_integer(BigInt::from(chi)));

    let threshold = BigRational::new(BigInt::from(chi), BigInt::from(n as i64));
    let control: Vec<usize> = (0..n).filter(|&v| ledger[v].contribution >= threshold).collect();
    assert!(!control.is_empty(), "some contribution reaches the average");

    Ok(EmbeddingReport {
        order: n,
        edge_count: e,
        faces,
        euler_characteristic: chi,
        orientable: signature_is_orientable(g, &rs.signs),
        ledger,
        control: VertexSet::new(n, control).expect("control points are vertices"),
    })
}

/// Whether a sign assignment is switching-equivalent to all-positive, i.e.
/// every cycle has positive sign product. Decided by propagating vertex
/// potentials over a spanning tree and checking the non-tree edges.
fn signature_is_orientable(g: &Graph, signs: &[i8]) -> bool {
    let n = g.order();
    let mut potential: Vec<Option<i8>> = vec![None; n];
    for start in 0..n {
        if potential[start].is_some() {
            continue;
        }
        potential[start] = Some(1);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let pv = potential[v].unwrap();
            for &u in g.neighbors(v) {
                let s = signs[g.edge_index(v, u).unwrap()];
                match potential[u] {
                    None => {
                        potential[u] = Some(pv * s);
                        queue.push_back(u);
                    }
                    Some(pu) => {
                        if pu != pv * s {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Does a designated control point satisfy the curvature bound
/// `d/6 <= d/4 - x/12 <= 1 - χ/|G|`? The designated vertex is the
/// lowest-index maximizer of the contribution, which always qualifies as a
/// control point. Requires at least 3 vertices so every face has size >= 3.
pub fn verify_control_lemma(report: &EmbeddingReport) -> Result<bool, EmbeddingError> {
    if report.order < 3 {
        return Err(EmbeddingError::TooFewVertices { need: 3, got: report.order });
    }
    let v = (0..report.order)
        .max_by(|&a, &b| {
            report.ledger[a].contribution.cmp(&report.ledger[b].contribution).then(b.cmp(&a))
            // prefer the lower index on ties
        })
        .expect("nonempty ledger");
    debug_assert!(report.control.members().contains(&v));
    let d = report.ledger[v].degree as i64;
    let x = report.ledger[v].triangle_corners as i64;
    let mid = rational(d, 4) - rational(x, 12);
    let lo_ok = rational(d, 6) <= mid;
    let hi = rational(1, 1)
        - BigRational::new(
            BigInt::from(report.euler_characteristic),
            BigInt::from(report.order as i64),
        );
    Ok(lo_ok && mid <= hi)
}

/// Does every vertex meet the degree lower bound implied by its triangle
/// count: `d(v) >= n+k+1+ceil(x/2)` when `x <= 2k-2`, and `d(v) >= n+2k+1`
/// otherwise? `report` must be a trace of `g`; `k >= 1`.
pub fn verify_degree_bound(
    g: &Graph,
    n: usize,
    k: usize,
    report: &EmbeddingReport,
) -> Result<bool, EmbeddingError> {
    if k == 0 {
        return Err(EmbeddingError::InvalidParameter("the degree bound needs k >= 1".into()));
    }
    if report.order != g.order() || report.edge_count != g.edge_count() {
        return Err(EmbeddingError::HostMismatch(format!(
            "report is for {} vertices / {} edges, graph has {} / {}",
            report.order,
            report.edge_count,
            g.order(),
            g.edge_count()
        )));
    }
    if (0..g.order()).any(|v| report.ledger[v].degree != g.degree(v)) {
        return Err(EmbeddingError::HostMismatch("vertex degrees differ".into()));
    }
    Ok((0..g.order()).all(|v| {
        let d = g.degree(v);
        let x = report.ledger[v].triangle_corners;
        if x + 2 <= 2 * k {
            d >= n + k + 1 + x.div_ceil(2)
        } else {
            d >= n + 2 * k + 1
        }
    }))
}

/// Euler-formula genus lower bound for simple connected graphs on at least
/// 3 vertices: every face has size >= 3, so `e <= 3n - 6 + 3(2 - χ)` ...
/// rearranged per orientability and clamped at the smallest legal genus.
pub fn euler_genus_lower_bound(g: &Graph, orientable: bool) -> Result<u64, EmbeddingError> {
    if g.order() < 3 {
        return Err(EmbeddingError::TooFewVertices { need: 3, got: g.order() });
    }
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected);
    }
    Ok(genus_floor(g, orientable))
}

/// The same bound without the arity guard, for internal early-exit use.
/// Orders below 3 fall back to the trivial floor (0 orientable,
/// 1 non-orientable).
pub(crate) fn genus_floor(g: &Graph, orientable: bool) -> u64 {
    let n = g.order() as i64;
    let e = g.edge_count() as i64;
    if g.order() < 3 {
        return if orientable { 0 } else { 1 };
    }
    let excess = e - 3 * n + 6;
    // ceil(a/b) for signed a, positive b: -floor(-a/b).
    if orientable {
        (-(-excess).div_euclid(6)).max(0) as u64
    } else {
        (-(-excess).div_euclid(3)).max(1) as u64
    }
}
