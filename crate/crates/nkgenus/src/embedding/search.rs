//! Minimum-genus machinery: an exhaustive scan over rotation systems for
//! desk-scale graphs and a seeded hill-climbing upper-bound search for
//! anything larger.
//!
//! Both searches are deliberately sequential: candidates are visited in a
//! fixed documented order and the reported witness is the first candidate
//! attaining the final minimum, so results are byte-reproducible no matter
//! how the caller configures thread pools.

use super::{genus_floor, trace_faces, EmbeddingError, RotationSystem};
use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest edge count the orientable exhaustive scan accepts by default.
pub const DEFAULT_ORIENTABLE_EDGE_CAP: usize = 15;
/// Largest edge count the non-orientable exhaustive scan accepts by default.
pub const DEFAULT_NONORIENTABLE_EDGE_CAP: usize = 12;
/// Default number of face-tracing evaluations for the upper-bound search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;

/// Hard ceiling imposed by the bitmask face tracer (4e states in a u128).
const TRACER_EDGE_LIMIT: usize = 32;

/// Result of an exhaustive scan: the exact minimum genus, the first
/// rotation system attaining it in scan order, and the number of candidates
/// traced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinGenusResult {
    pub genus: u64,
    pub witness: RotationSystem,
    pub candidates: u64,
}

/// Result of the upper-bound search: the best (smallest) genus found, its
/// witness, and the number of evaluations spent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub genus: u64,
    pub witness: RotationSystem,
    pub evaluations: u64,
}

/// Table-driven face tracer. For the current rotation system it keeps, per
/// incoming arc, the outgoing arc continuing the face on either side, so a
/// candidate differing at one vertex costs only that vertex's rebuild.
struct Tracer<'a> {
    g: &'a Graph,
    /// Current rotation at each vertex, as edge indices in cyclic order.
    rotations: Vec<Vec<usize>>,
    /// succ[a]: outgoing arc after entering along arc `a`, taking the
    /// rotation successor at the head (positive side).
    succ: Vec<u32>,
    /// pred[a]: same, taking the rotation predecessor (negative side).
    pred: Vec<u32>,
    /// Bit i set = edge i is negative.
    neg_mask: u64,
}

fn in_arc(g: &Graph, v: usize, edge: usize) -> usize {
    if g.edges()[edge].1 == v {
        2 * edge
    } else {
        2 * edge + 1
    }
}

fn out_arc(g: &Graph, v: usize, edge: usize) -> usize {
    if g.edges()[edge].0 == v {
        2 * edge
    } else {
        2 * edge + 1
    }
}

impl<'a> Tracer<'a> {
    fn new(g: &'a Graph) -> Tracer<'a> {
        let arcs = 2 * g.edge_count();
        let mut tracer = Tracer {
            g,
            rotations: vec![Vec::new(); g.order()],
            succ: vec![0; arcs],
            pred: vec![0; arcs],
            neg_mask: 0,
        };
        for v in 0..g.order() {
            let edges: Vec<usize> =
                g.neighbors(v).iter().map(|&w| g.edge_index(v, w).unwrap()).collect();
            tracer.set_rotation_edges(v, edges);
        }
        tracer
    }

    fn set_rotation_edges(&mut self, v: usize, edges: Vec<usize>) {
        let d = edges.len();
        for i in 0..d {
            let enter = in_arc(self.g, v, edges[i]);
            self.succ[enter] = out_arc(self.g, v, edges[(i + 1) % d]) as u32;
            self.pred[enter] = out_arc(self.g, v, edges[(i + d - 1) % d]) as u32;
        }
        self.rotations[v] = edges;
    }

    fn set_rotation_labels(&mut self, v: usize, labels: &[usize]) {
        let edges: Vec<usize> = labels.iter().map(|&w| self.g.edge_index(v, w).unwrap()).collect();
        self.set_rotation_edges(v, edges);
    }

    fn swap_rotation_positions(&mut self, v: usize, i: usize, j: usize) {
        let mut edges = std::mem::take(&mut self.rotations[v]);
        edges.swap(i, j);
        self.set_rotation_edges(v, edges);
    }

    fn set_signs(&mut self, cotree: &[usize], pattern: u64) {
        let mut mask = 0u64;
        for (bit, &edge) in cotree.iter().enumerate() {
            if pattern >> bit & 1 == 1 {
                mask |= 1 << edge;
            }
        }
        self.neg_mask = mask;
    }

    /// Face count of the all-positive system: cycles of the successor map
    /// over the 2e arcs.
    fn count_faces_orientable(&self) -> usize {
        let total = 2 * self.g.edge_count();
        let mut unvisited: u64 = if total == 64 { u64::MAX } else { (1u64 << total) - 1 };
        let mut faces = 0;
        while unvisited != 0 {
            let start = unvisited.trailing_zeros() as usize;
            let mut a = start;
            loop {
                unvisited &= !(1u64 << a);
                a = self.succ[a] as usize;
                if a == start {
                    break;
                }
            }
            faces += 1;
        }
        faces
    }

    /// Face count of the signed system: orbits over the 4e (arc, side)
    /// states come in mirror pairs, two per face.
    fn count_faces_signed(&self) -> usize {
        let total = 4 * self.g.edge_count();
        let mut unvisited: u128 = if total == 128 { u128::MAX } else { (1u128 << total) - 1 };
        let mut orbits = 0;
        while unvisited != 0 {
            let start = unvisited.trailing_zeros() as usize;
            let mut s = start;
            loop {
                unvisited &= !(1u128 << s);
                let arc = s >> 1;
                let side = (s & 1) ^ ((self.neg_mask >> (arc >> 1)) & 1) as usize;
                let next = if side == 0 { self.succ[arc] } else { self.pred[arc] };
                s = (next as usize) << 1 | side;
                if s == start {
                    break;
                }
            }
            orbits += 1;
        }
        debug_assert!(orbits % 2 == 0, "orbits pair under mirror reversal");
        orbits / 2
    }

    fn genus(&self, orientable: bool) -> u64 {
        let n = self.g.order() as i64;
        let e = self.g.edge_count() as i64;
        if orientable {
            let chi = n - e + self.count_faces_orientable() as i64;
            debug_assert!((2 - chi) % 2 == 0 && chi <= 2);
            ((2 - chi) / 2) as u64
        } else {
            let chi = n - e + self.count_faces_signed() as i64;
            debug_assert!(chi <= 1, "a non-orientable signature cannot reach the sphere");
            (2 - chi) as u64
        }
    }
}

/// Advance `a` to its lexicographic successor permutation; on the last
/// permutation, reset to ascending order and report the wrap.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Odometer over all rotation systems: each vertex's cyclic order is
/// enumerated as the (d-1)! linear orders that fix its first (smallest)
/// neighbor, and the global order is lexicographic over vertices with the
/// last vertex varying fastest.
struct Odometer {
    labels: Vec<Vec<usize>>,
}

impl Odometer {
    fn new(g: &Graph) -> Odometer {
        Odometer { labels: (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect() }
    }

    /// Step to the next candidate, applying every changed vertex to the
    /// tracer. Returns false once all candidates have been visited.
    fn advance(&mut self, tracer: &mut Tracer) -> bool {
        for v in (0..self.labels.len()).rev() {
            let tail = &mut self.labels[v][1..];
            let advanced = next_permutation(tail);
            tracer.set_rotation_labels(v, &self.labels[v]);
            if advanced {
                return true;
            }
            // This vertex wrapped to its first order; carry to the previous.
        }
        false
    }
}

/// Non-tree edges of a breadth-first spanning tree rooted at 0, ascending.
fn cotree_edges(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut tree_edge = vec![false; g.edge_count()];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                tree_edge[g.edge_index(v, u).unwrap()] = true;
                queue.push_back(u);
            }
        }
    }
    (0..g.edge_count()).filter(|&e| !tree_edge[e]).collect()
}

fn pattern_signs(edge_count: usize, cotree: &[usize], pattern: u64) -> Vec<i8> {
    let mut signs = vec![1i8; edge_count];
    for (bit, &edge) in cotree.iter().enumerate() {
        if pattern >> bit & 1 == 1 {
            signs[edge] = -1;
        }
    }
    signs
}

/// Exact minimum genus by exhaustive scan over rotation systems.
///
/// Orientable: all-positive signs, every combination of vertex rotations.
/// Non-orientable: spanning-tree edges are normalized positive (switching
/// equivalence) and for each rotation candidate every nonzero cotree sign
/// pattern is traced in ascending order; all such signatures are genuinely
/// non-orientable, so the scan is exactly the non-orientable embedding
/// space. The scan stops early when the Euler-formula floor is attained.
/// The witness is the first candidate in scan order achieving the minimum.
pub fn min_genus_exhaustive(
    g: &Graph,
    orientable: bool,
    edge_cap: Option<usize>,
) -> Result<MinGenusResult, EmbeddingError> {
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected);
    }
    let cap = edge_cap
        .unwrap_or(if orientable {
            DEFAULT_ORIENTABLE_EDGE_CAP
        } else {
            DEFAULT_NONORIENTABLE_EDGE_CAP
        })
        .min(TRACER_EDGE_LIMIT);
    let e = g.edge_count();
    if e > cap {
        return Err(EmbeddingError::ExhaustiveCapExceeded { edges: e, cap });
    }
    if e == 0 {
        // A single vertex; the sphere is the only candidate.
        if !orientable {
            return Err(EmbeddingError::NonorientableNeedsCycle);
        }
        let witness = RotationSystem::from_edge_rotations(g.clone(), vec![Vec::new()], Vec::new());
        return Ok(MinGenusResult { genus: 0, witness, candidates: 1 });
    }
    let cotree = cotree_edges(g);
    if !orientable && cotree.is_empty() {
        return Err(EmbeddingError::NonorientableNeedsCycle);
    }
    let floor = genus_floor(g, orientable);
    let mut tracer = Tracer::new(g);
    let mut odometer = Odometer::new(g);
    let mut candidates: u64 = 0;
    let mut best: Option<(u64, Vec<Vec<usize>>, u64)> = None;
    'scan: loop {
        if orientable {
            candidates += 1;
            let genus = tracer.genus(true);
            if best.as_ref().is_none_or(|(b, _, _)| genus < *b) {
                best = Some((genus, tracer.rotations.clone(), 0));
                if genus <= floor {
                    break 'scan;
                }
            }
        } else {
            for pattern in 1..(1u64 << cotree.len()) {
                candidates += 1;
                tracer.set_signs(&cotree, pattern);
                let genus = tracer.genus(false);
                if best.as_ref().is_none_or(|(b, _, _)| genus < *b) {
                    best = Some((genus, tracer.rotations.clone(), pattern));
                    if genus <= floor {
                        break 'scan;
                    }
                }
            }
        }
        if !odometer.advance(&mut tracer) {
            break;
        }
    }
    let (genus, rotations, pattern) = best.expect("at least one candidate was traced");
    let signs = pattern_signs(e, &cotree, pattern);
    let witness = RotationSystem::from_edge_rotations(g.clone(), rotations, signs);
    // Safety net: re-derive the surface with the independent rich tracer.
    let report = trace_faces(&witness)?;
    assert_eq!(report.orientable(), orientable);
    assert_eq!(report.surface().genus(), genus, "fast and rich tracers agree");
    assert!(genus >= floor);
    Ok(MinGenusResult { genus, witness, candidates })
}

/// Seeded hill-climbing upper bound on the genus.
///
/// Restart loop: randomize all rotations (and, non-orientable, a nonzero
/// cotree sign pattern), then repeatedly propose a local move — swapping two
/// positions in one vertex's rotation, or flipping one cotree sign — and
/// accept whenever the face count does not drop. Every trace costs one unit
/// of `budget`. The returned genus is always an upper bound on the true
/// minimum; it is exact whenever it meets the Euler-formula floor, and the
/// search stops early in that case. Deterministic for a fixed seed.
pub fn genus_upper_bound_search(
    g: &Graph,
    orientable: bool,
    budget: u64,
    seed: u64,
) -> Result<SearchResult, EmbeddingError> {
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected);
    }
    let n = g.order();
    let e = g.edge_count();
    if e > TRACER_EDGE_LIMIT {
        return Err(EmbeddingError::InvalidParameter(format!(
            "upper-bound search supports at most {TRACER_EDGE_LIMIT} edges, got {e}"
        )));
    }
    if e == 0 {
        if !orientable {
            return Err(EmbeddingError::NonorientableNeedsCycle);
        }
        let witness = RotationSystem::from_edge_rotations(g.clone(), vec![Vec::new()], Vec::new());
        return Ok(SearchResult { genus: 0, witness, evaluations: 0 });
    }
    let cotree = cotree_edges(g);
    if !orientable && cotree.is_empty() {
        return Err(EmbeddingError::NonorientableNeedsCycle);
    }
    let c = cotree.len();
    let floor = genus_floor(g, orientable);
    let movable: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    let restart_len = 64 * e.max(4) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tracer = Tracer::new(g);
    let mut evaluations: u64 = 0;
    let mut best: Option<(u64, Vec<Vec<usize>>, u64)> = None;

    'outer: while evaluations < budget {
        // Restart from a random candidate.
        let mut scratch: Vec<usize> = Vec::new();
        for v in 0..n {
            scratch.clear();
            scratch.extend_from_slice(g.neighbors(v));
            // Shuffle the tail; the first slot is a free cyclic anchor.
            for i in (2..scratch.len()).rev() {
                let j = rng.gen_range(1..=i);
                scratch.swap(i, j);
            }
            tracer.set_rotation_labels(v, &scratch);
        }
        let mut pattern: u64 = if orientable { 0 } else { rng.gen_range(1..(1u64 << c)) };
        tracer.set_signs(&cotree, pattern);
        let mut current = tracer.genus(orientable);
        evaluations += 1;
        if best.as_ref().is_none_or(|(b, _, _)| current < *b) {
            best = Some((current, tracer.rotations.clone(), pattern));
            if current <= floor {
                break 'outer;
            }
        }
        let only_candidate = movable.is_empty() && (orientable || c == 1);

        let mut steps = 0u64;
        while steps < restart_len && evaluations < budget && !only_candidate {
            steps += 1;
            let sign_move = !orientable && (movable.is_empty() || rng.gen_range(0..4u32) == 0);
            if sign_move {
                let bit = rng.gen_range(0..c);
                let flipped = pattern ^ (1 << bit);
                if flipped == 0 {
                    continue; // never step onto an orientable signature
                }
                tracer.set_signs(&cotree, flipped);
                let genus = tracer.genus(orientable);
                evaluations += 1;
                if genus <= current {
                    current = genus;
                    pattern = flipped;
                } else {
                    tracer.set_signs(&cotree, pattern);
                }
            } else {
                let v = movable[rng.gen_range(0..movable.len())];
                let d = g.degree(v);
                let i = rng.gen_range(1..d);
                let mut j = rng.gen_range(1..d);
                if i == j {
                    j = if j + 1 < d { j + 1 } else { 1 };
                }
                tracer.swap_rotation_positions(v, i, j);
                let genus = tracer.genus(orientable);
                evaluations += 1;
                if genus <= current {
                    current = genus;
                } else {
                    tracer.swap_rotation_positions(v, i, j);
                }
            }
            if best.as_ref().is_none_or(|(b, _, _)| current < *b) {
                best = Some((current, tracer.rotations.clone(), pattern));
                if current <= floor {
                    break 'outer;
                }
            }
        }
        if only_candidate {
            break;
        }
    }

    let (genus, rotations, pattern) = best.expect("at least one candidate was traced");
    let signs = pattern_signs(e, &cotree, pattern);
    let witness = RotationSystem::from_edge_rotations(g.clone(), rotations, signs);
    let report = trace_faces(&witness)?;
    assert_eq!(report.orientable(), orientable);
    assert_eq!(report.surface().genus(), genus, "fast and rich tracers agree");
    Ok(SearchResult { genus, witness, evaluations })
}
