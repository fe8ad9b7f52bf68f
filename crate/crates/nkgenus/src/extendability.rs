//! Brute-force, witness-producing deciders for matching extendability,
//! factor-criticality, and the combined delete-then-extend property, plus
//! structural property checks built on them.
//!
//! Everything here is an oracle: correctness and reproducibility over speed.
//! Subsets are enumerated in colexicographic order and matchings in
//! lexicographic order of their sorted edge-index tuples, so failing
//! witnesses are deterministic. Enumeration may fan out across worker
//! threads, but results (including work counts and the reported witness)
//! are identical for any worker count: workers evaluate disjoint chunks and
//! a sequential fold replays the enumeration order.

use crate::graph::{
    has_perfect_matching, is_bipartite, max_induced_bipartite_order, vertex_connectivity, Graph,
    Matching, VertexSet,
};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

/// Default work limit: number of (subset, matching) subproblems a decider
/// may examine before giving up.
pub const DEFAULT_WORK_CAP: u64 = 10_000_000;

/// Items evaluated together between fold steps.
const CHUNK: usize = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeciderError {
    /// The enumeration would examine more than `cap` subproblems.
    #[error("work limit {cap} exceeded")]
    CapExceeded { cap: u64 },
    /// The property's size/parity preconditions fail, so the question is
    /// ill-posed rather than false.
    #[error("not applicable: {0}")]
    NotApplicable(String),
    /// A structural check was invoked outside its hypotheses.
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
}

/// A concrete counterexample: deleting `deleted` and the vertices of
/// `matching` leaves a graph with no perfect matching. Either part may be
/// empty depending on which property failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub deleted: VertexSet,
    pub matching: Matching,
}

impl Witness {
    fn deleted_only(deleted: VertexSet) -> Witness {
        Witness { deleted, matching: Matching::empty() }
    }

    fn matching_only(matching: Matching) -> Witness {
        Witness { deleted: VertexSet::empty(), matching }
    }
}

/// Outcome of a decider: whether the property holds, the first
/// counterexample in enumeration order when it does not, and how many
/// subproblems were examined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    pub work: u64,
}

impl Verdict {
    fn holds(work: u64) -> Verdict {
        Verdict { holds: true, witness: None, work }
    }

    fn fails(witness: Witness, work: u64) -> Verdict {
        Verdict { holds: false, witness: Some(witness), work }
    }
}

/// Re-check a witness against the graph it was produced for: deleting the
/// witness vertices must leave a (nonempty) graph with no perfect matching.
pub fn witness_refutes(g: &Graph, w: &Witness) -> bool {
    let mut drop: Vec<usize> = w.deleted.members().to_vec();
    drop.extend(w.matching.vertices());
    let Ok(set) = VertexSet::new(g.order(), drop) else {
        return false;
    };
    let (h, map) = g.induced_delete(&set);
    !map.is_empty() && !has_perfect_matching(&h)
}

/// Perfect matching after deleting `drop` (an empty remainder counts as
/// perfectly matched by the empty matching).
fn pm_after_delete(g: &Graph, drop: &VertexSet) -> bool {
    let (h, map) = g.induced_delete(drop);
    map.is_empty() || has_perfect_matching(&h)
}

/// Per-item result inside a scan. `work` counts the perfect-matching tests
/// the item consumed up to its decision point.
enum ItemOutcome {
    Pass {
        work: u64,
    },
    Fail {
        work: u64,
        witness: Witness,
    },
    /// The item alone would blow the whole work limit.
    Bail,
}

/// Evaluate `test` over `items` with chunked parallel fan-out, then fold the
/// results in enumeration order. The fold reproduces exactly what a
/// sequential run would report: cumulative work, the first failure, and the
/// precise point where the work limit would have been exceeded.
fn scan<T, I, F>(items: I, base_work: u64, cap: u64, test: F) -> Result<Verdict, DeciderError>
where
    T: Send + Sync,
    I: Iterator<Item = T>,
    F: Fn(&T) -> ItemOutcome + Send + Sync,
{
    let mut total = base_work;
    let mut items = items.peekable();
    let mut chunk: Vec<T> = Vec::with_capacity(CHUNK);
    while items.peek().is_some() {
        chunk.clear();
        chunk.extend(items.by_ref().take(CHUNK));
        let results: Vec<ItemOutcome> = chunk.par_iter().map(&test).collect();
        for outcome in results {
            match outcome {
                ItemOutcome::Pass { work } => {
                    total = total.saturating_add(work);
                    if total > cap {
                        return Err(DeciderError::CapExceeded { cap });
                    }
                }
                ItemOutcome::Fail { work, witness } => {
                    total = total.saturating_add(work);
                    if total > cap {
                        return Err(DeciderError::CapExceeded { cap });
                    }
                    return Ok(Verdict::fails(witness, total));
                }
                ItemOutcome::Bail => return Err(DeciderError::CapExceeded { cap }),
            }
        }
    }
    Ok(Verdict::holds(total))
}

/// Does every matching of `k` edges extend to a perfect matching?
///
/// Evaluates the bare definition: the graph must have even order and a
/// perfect matching, and every k-matching must survive deletion of its
/// vertices. When the graph has no k-matching at all the quantifier is
/// vacuous and the answer is determined by the perfect-matching test alone.
/// `k = 0` likewise reduces to the perfect-matching test.
pub fn is_k_extendable(g: &Graph, k: usize, cap: u64) -> Result<Verdict, DeciderError> {
    if 1 > cap {
        return Err(DeciderError::CapExceeded { cap });
    }
    if g.order() % 2 == 1 || !has_perfect_matching(g) {
        // The empty witness re-checks genuinely: deleting nothing leaves a
        // graph with no perfect matching.
        return Ok(Verdict::fails(Witness::matching_only(Matching::empty()), 1));
    }
    scan(KMatchings::new(g, k), 1, cap, |indices| {
        let drop = matching_vertices(g, indices);
        if pm_after_delete(g, &drop) {
            ItemOutcome::Pass { work: 1 }
        } else {
            let edges: Vec<(usize, usize)> = indices.iter().map(|&e| g.edges()[e]).collect();
            let m = Matching::new(g, &edges).expect("enumerated matching is valid");
            ItemOutcome::Fail { work: 1, witness: Witness::matching_only(m) }
        }
    })
}

fn matching_vertices(g: &Graph, edge_indices: &[usize]) -> VertexSet {
    let vs = edge_indices.iter().flat_map(|&e| {
        let (u, v) = g.edges()[e];
        [u, v]
    });
    VertexSet::new(g.order(), vs).expect("matching endpoints are in range")
}

/// Does deleting any `n` vertices leave a graph with a perfect matching?
///
/// Orders below `n` make the universal quantifier empty of content (there is
/// no n-subset to delete), reported as not-applicable rather than true or
/// false. A parity mismatch (odd `|G| - n`) is a genuine failure: the first
/// subset in enumeration order is already a counterexample.
pub fn is_n_factor_critical(g: &Graph, n: usize, cap: u64) -> Result<Verdict, DeciderError> {
    let order = g.order();
    if order < n {
        return Err(DeciderError::NotApplicable(format!(
            "graph order {order} is smaller than n = {n}"
        )));
    }
    if 1 > cap {
        return Err(DeciderError::CapExceeded { cap });
    }
    if (order - n) % 2 == 1 {
        let s = VertexSet::new(order, 0..n).expect("prefix subset is in range");
        debug_assert!(!pm_after_delete(g, &s));
        return Ok(Verdict::fails(Witness::deleted_only(s), 1));
    }
    scan(ColexSubsets::new(order, n), 0, cap, |subset| {
        let s = VertexSet::new(order, subset.iter().copied()).expect("subset is in range");
        if pm_after_delete(g, &s) {
            ItemOutcome::Pass { work: 1 }
        } else {
            ItemOutcome::Fail { work: 1, witness: Witness::deleted_only(s) }
        }
    })
}

/// Does deleting any `n` vertices leave a k-extendable graph?
///
/// The property is defined only for orders at least `n + 2k + 2` with
/// `|G| - n` even; anything else is not-applicable. `n = 0` degenerates to
/// [`is_k_extendable`] and `k = 0` to the perfect-matching test on every
/// deletion, so the two special families coincide with their classical
/// definitions by construction.
pub fn is_nk_graph(g: &Graph, n: usize, k: usize, cap: u64) -> Result<Verdict, DeciderError> {
    let order = g.order();
    if order < n + 2 * k + 2 {
        return Err(DeciderError::NotApplicable(format!(
            "graph order {order} is below the minimum {} for this (n, k)",
            n + 2 * k + 2
        )));
    }
    if (order - n) % 2 == 1 {
        return Err(DeciderError::NotApplicable(format!(
            "graph order {order} minus n = {n} is odd"
        )));
    }
    scan(ColexSubsets::new(order, n), 0, cap, |subset| {
        let s = VertexSet::new(order, subset.iter().copied()).expect("subset is in range");
        k_extendable_after_delete(g, &s, k, cap)
    })
}

/// Sequential k-extendability test of `g - deleted`, with work counted
/// against `cap` locally (a single item exceeding the whole limit bails).
/// Witness matchings are reported in the labels of `g`.
fn k_extendable_after_delete(g: &Graph, deleted: &VertexSet, k: usize, cap: u64) -> ItemOutcome {
    let (h, map) = g.induced_delete(deleted);
    let mut work: u64 = 1;
    if work > cap {
        return ItemOutcome::Bail;
    }
    if !has_perfect_matching(&h) {
        return ItemOutcome::Fail { work, witness: Witness::deleted_only(deleted.clone()) };
    }
    for indices in KMatchings::new(&h, k) {
        work += 1;
        if work > cap {
            return ItemOutcome::Bail;
        }
        let drop = matching_vertices(&h, &indices);
        if !pm_after_delete(&h, &drop) {
            let edges: Vec<(usize, usize)> = indices
                .iter()
                .map(|&e| {
                    let (u, v) = h.edges()[e];
                    (map[u], map[v])
                })
                .collect();
            let m = Matching::new(g, &edges).expect("remapped matching is valid in the host");
            return ItemOutcome::Fail {
                work,
                witness: Witness { deleted: deleted.clone(), matching: m },
            };
        }
    }
    ItemOutcome::Pass { work }
}

fn require_connected(g: &Graph, what: &str) -> Result<(), DeciderError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(DeciderError::PreconditionUnmet(format!("{what} requires a connected graph")))
    }
}

/// Classical consequences of k-extendability: the graph is also
/// (k-1)-extendable and is (k+1)-connected. Intended for graphs already
/// verified k-extendable; `k >= 1`.
pub fn check_plummer_basics(g: &Graph, k: usize, cap: u64) -> Result<bool, DeciderError> {
    if k == 0 {
        return Err(DeciderError::PreconditionUnmet(
            "the downward/connectivity consequences need k >= 1".into(),
        ));
    }
    require_connected(g, "the extendability consequence check")?;
    let down = is_k_extendable(g, k - 1, cap)?;
    Ok(down.holds && vertex_connectivity(g) >= k + 1)
}

/// Structural consequences of the delete-then-extend property: with
/// `n >= 2` the graph also has the (n-2, k+1) property, and its minimum
/// degree and connectivity satisfy `delta >= kappa >= n + k + 1`. Intended
/// for graphs already verified to have the (n, k) property; `n, k >= 1`.
pub fn check_nk_basics(g: &Graph, n: usize, k: usize, cap: u64) -> Result<bool, DeciderError> {
    if n == 0 || k == 0 {
        return Err(DeciderError::PreconditionUnmet(
            "the structural consequence check needs n >= 1 and k >= 1".into(),
        ));
    }
    require_connected(g, "the structural consequence check")?;
    let shifted_ok = if n >= 2 { is_nk_graph(g, n - 2, k + 1, cap)?.holds } else { true };
    let kappa = vertex_connectivity(g);
    Ok(shifted_ok && g.min_degree() >= kappa && kappa >= n + k + 1)
}

/// No induced bipartite subgraph may have more than `|G| - n - 1` vertices
/// when the graph has the (n, k) property with `n >= 1`. The subset scan is
/// exponential; `scan_cap` bounds the order it will attempt.
pub fn check_bipartite_bound(
    g: &Graph,
    n: usize,
    k: usize,
    scan_cap: usize,
) -> Result<bool, DeciderError> {
    if n == 0 || k == 0 {
        return Err(DeciderError::PreconditionUnmet(
            "the induced-bipartite bound needs n >= 1 and k >= 1".into(),
        ));
    }
    require_connected(g, "the induced-bipartite bound check")?;
    let best = max_induced_bipartite_order(g, scan_cap)
        .map_err(|e| DeciderError::PreconditionUnmet(e.to_string()))?;
    Ok(best + n + 1 <= g.order())
}

/// For a k-extendable graph on at most `4k` vertices: it is bipartite or at
/// least 2k-connected. Intended for graphs already verified k-extendable.
pub fn check_louyu_dichotomy(g: &Graph, k: usize) -> Result<bool, DeciderError> {
    if k == 0 {
        return Err(DeciderError::PreconditionUnmet("the dichotomy needs k >= 1".into()));
    }
    require_connected(g, "the dichotomy check")?;
    if g.order() > 4 * k {
        return Err(DeciderError::PreconditionUnmet(format!(
            "the dichotomy applies to orders <= 4k = {}, got {}",
            4 * k,
            g.order()
        )));
    }
    Ok(is_bipartite(g) || vertex_connectivity(g) >= 2 * k)
}

/// All k-subsets of `0..n` in colexicographic order.
struct ColexSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl ColexSubsets {
    fn new(n: usize, k: usize) -> ColexSubsets {
        let current = if k <= n { Some((0..k).collect()) } else { None };
        ColexSubsets { n, current }
    }
}

impl Iterator for ColexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let s = self.current.as_mut().unwrap();
        let k = s.len();
        // Successor: bump the smallest position that has headroom, resetting
        // everything below it to the minimal prefix.
        let mut bumped = false;
        for i in 0..k {
            let limit = if i + 1 < k { s[i + 1] } else { self.n };
            if s[i] + 1 < limit {
                s[i] += 1;
                for (j, slot) in s.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                bumped = true;
                break;
            }
        }
        if !bumped {
            self.current = None;
        }
        Some(out)
    }
}

/// All k-matchings of a graph as ascending edge-index tuples, in
/// lexicographic order of those tuples.
struct KMatchings<'a> {
    g: &'a Graph,
    k: usize,
    chosen: Vec<usize>,
    used: Vec<bool>,
    next_edge: usize,
    done: bool,
}

impl<'a> KMatchings<'a> {
    fn new(g: &'a Graph, k: usize) -> KMatchings<'a> {
        KMatchings {
            g,
            k,
            chosen: Vec::with_capacity(k),
            used: vec![false; g.order()],
            next_edge: 0,
            done: k == 0,
        }
    }

    fn set_used(&mut self, edge: usize, value: bool) {
        let (u, v) = self.g.edges()[edge];
        self.used[u] = value;
        self.used[v] = value;
    }
}

impl Iterator for KMatchings<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        loop {
            if self.chosen.len() == self.k {
                let out = self.chosen.clone();
                // Backtrack past the deepest choice so the scan resumes.
                let last = self.chosen.pop().expect("k >= 1 here");
                self.set_used(last, false);
                self.next_edge = last + 1;
                return Some(out);
            }
            if self.next_edge >= self.g.edge_count() {
                match self.chosen.pop() {
                    None => {
                        self.done = true;
                        return None;
                    }
                    Some(last) => {
                        self.set_used(last, false);
                        self.next_edge = last + 1;
                    }
                }
            } else {
                let e = self.next_edge;
                self.next_edge += 1;
                let (u, v) = self.g.edges()[e];
                if !self.used[u] && !self.used[v] {
                    self.used[u] = true;
                    self.used[v] = true;
                    self.chosen.push(e);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, icosahedron};

    const CAP: u64 = DEFAULT_WORK_CAP;

    #[test]
    fn colex_subsets_order() {
        let subsets: Vec<Vec<usize>> = ColexSubsets::new(4, 2).collect();
        assert_eq!(
            subsets,
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(ColexSubsets::new(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(ColexSubsets::new(2, 3).count(), 0);
        assert_eq!(ColexSubsets::new(5, 5).count(), 1);
    }

    #[test]
    fn k_matchings_order() {
        let c6 = cycle(6).unwrap();
        // Edges of C_6 sort as (0,1) (0,5) (1,2) (2,3) (3,4) (4,5).
        let two: Vec<Vec<usize>> = KMatchings::new(&c6, 2).collect();
        assert_eq!(two[0], vec![0, 3]);
        assert_eq!(two[1], vec![0, 4]);
        for pair in &two {
            let (a, b) = (c6.edges()[pair[0]], c6.edges()[pair[1]]);
            assert!(a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1);
        }
        assert_eq!(KMatchings::new(&c6, 3).count(), 2);
        assert_eq!(KMatchings::new(&c6, 0).count(), 0);
        assert_eq!(KMatchings::new(&c6, 4).count(), 0);
    }

    #[test]
    fn cycle_extendability() {
        let c6 = cycle(6).unwrap();
        let one = is_k_extendable(&c6, 1, CAP).unwrap();
        assert!(one.holds);
        assert_eq!(one.work, 7);
        let two = is_k_extendable(&c6, 2, CAP).unwrap();
        assert!(!two.holds);
        let w = two.witness.unwrap();
        assert_eq!(w.matching.to_string(), "{0-1, 3-4}");
        assert!(w.deleted.is_empty());
        assert_eq!(two.work, 3);
        assert!(witness_refutes(&c6, &w));
    }

    #[test]
    fn complete_graph_extendability() {
        let k4 = complete(4).unwrap();
        assert!(is_k_extendable(&k4, 1, CAP).unwrap().holds);
        let k6 = complete(6).unwrap();
        assert!(is_k_extendable(&k6, 2, CAP).unwrap().holds);
        // Odd order: the empty witness certifies the missing perfect matching.
        let k5 = complete(5).unwrap();
        let v = is_k_extendable(&k5, 1, CAP).unwrap();
        assert!(!v.holds);
        assert!(witness_refutes(&k5, &v.witness.unwrap()));
    }

    #[test]
    fn vacuous_extendability_beyond_matching_number() {
        // K_2 has no 3-matching; the quantifier is vacuous and the perfect
        // matching decides.
        let k2 = complete(2).unwrap();
        let v = is_k_extendable(&k2, 3, CAP).unwrap();
        assert!(v.holds);
        assert_eq!(v.work, 1);
    }

    #[test]
    fn factor_criticality() {
        let c6 = cycle(6).unwrap();
        let v = is_n_factor_critical(&c6, 2, CAP).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.deleted.to_string(), "{0, 2}");
        assert_eq!(v.work, 2);
        assert!(witness_refutes(&c6, &w));

        assert!(is_n_factor_critical(&complete(7).unwrap(), 5, CAP).unwrap().holds);
        assert!(is_n_factor_critical(&complete(6).unwrap(), 4, CAP).unwrap().holds);
        assert!(is_n_factor_critical(&icosahedron(), 4, CAP).unwrap().holds);

        // Parity failure is genuine: deleting one vertex leaves odd order.
        let odd = is_n_factor_critical(&c6, 1, CAP).unwrap();
        assert!(!odd.holds);
        assert_eq!(odd.witness.as_ref().unwrap().deleted.to_string(), "{0}");
        assert!(witness_refutes(&c6, odd.witness.as_ref().unwrap()));

        assert!(matches!(
            is_n_factor_critical(&complete(4).unwrap(), 5, CAP),
            Err(DeciderError::NotApplicable(_))
        ));
        // n = 0 reduces to the perfect-matching test.
        assert!(is_n_factor_critical(&complete(4).unwrap(), 0, CAP).unwrap().holds);
        assert!(!is_n_factor_critical(&cycle(5).unwrap(), 0, CAP).unwrap().holds);
    }

    #[test]
    fn nk_graph_decider() {
        let k6 = complete(6).unwrap();
        let v = is_nk_graph(&k6, 2, 1, CAP).unwrap();
        assert!(v.holds);
        assert_eq!(v.work, 105);
        assert!(is_nk_graph(&icosahedron(), 2, 1, CAP).unwrap().holds);
        assert!(matches!(is_nk_graph(&k6, 3, 1, CAP), Err(DeciderError::NotApplicable(_))));
        assert!(matches!(
            is_nk_graph(&complete(4).unwrap(), 2, 1, CAP),
            Err(DeciderError::NotApplicable(_))
        ));
        // C_6 is not a (2,0)-graph; the witness carries only deleted vertices.
        let c6 = cycle(6).unwrap();
        let bad = is_nk_graph(&c6, 2, 0, CAP).unwrap();
        assert!(!bad.holds);
        assert!(witness_refutes(&c6, bad.witness.as_ref().unwrap()));
        // A failing inner matching is remapped to original labels.
        let eight = cycle(8).unwrap();
        let nk = is_nk_graph(&eight, 0, 2, CAP).unwrap();
        assert!(!nk.holds);
        let w = nk.witness.unwrap();
        assert!(w.deleted.is_empty());
        assert!(witness_refutes(&eight, &w));
    }

    #[test]
    fn nk_degenerate_cases_match_classical_deciders() {
        // (0, k) agrees with is_k_extendable, including work accounting.
        let k6 = complete(6).unwrap();
        let via_nk = is_nk_graph(&k6, 0, 2, CAP).unwrap();
        let direct = is_k_extendable(&k6, 2, CAP).unwrap();
        assert_eq!(via_nk, direct);
        // (n, 0) agrees with is_n_factor_critical.
        let via_nk = is_nk_graph(&k6, 2, 0, CAP).unwrap();
        let direct = is_n_factor_critical(&k6, 2, CAP).unwrap();
        assert_eq!(via_nk, direct);
    }

    #[test]
    fn cap_semantics_are_exact() {
        let c6 = cycle(6).unwrap();
        // 1-extendability of C_6 takes exactly 7 tests.
        assert!(is_k_extendable(&c6, 1, 7).is_ok());
        assert!(matches!(is_k_extendable(&c6, 1, 6), Err(DeciderError::CapExceeded { cap: 6 })));
        // The failing run stops at 3 tests, so a cap of 3 suffices.
        assert!(is_k_extendable(&c6, 2, 3).is_ok());
        assert!(matches!(is_k_extendable(&c6, 2, 2), Err(DeciderError::CapExceeded { cap: 2 })));
        assert!(matches!(is_k_extendable(&c6, 1, 0), Err(DeciderError::CapExceeded { cap: 0 })));
    }

    #[test]
    fn plummer_consequences() {
        assert!(check_plummer_basics(&complete(4).unwrap(), 1, CAP).unwrap());
        assert!(check_plummer_basics(&cycle(6).unwrap(), 1, CAP).unwrap());
        assert!(check_plummer_basics(&complete(6).unwrap(), 2, CAP).unwrap());
        assert!(matches!(
            check_plummer_basics(&complete(4).unwrap(), 0, CAP),
            Err(DeciderError::PreconditionUnmet(_))
        ));
        let split = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(matches!(
            check_plummer_basics(&split, 1, CAP),
            Err(DeciderError::PreconditionUnmet(_))
        ));
    }

    #[test]
    fn nk_consequences() {
        assert!(check_nk_basics(&complete(6).unwrap(), 2, 1, CAP).unwrap());
        assert!(check_nk_basics(&icosahedron(), 2, 1, CAP).unwrap());
        assert!(check_nk_basics(&complete(8).unwrap(), 2, 2, CAP).unwrap());
    }

    #[test]
    fn bipartite_bound() {
        assert!(check_bipartite_bound(&complete(6).unwrap(), 2, 1, 20).unwrap());
        assert!(check_bipartite_bound(&icosahedron(), 2, 1, 20).unwrap());
        assert!(check_bipartite_bound(&complete(8).unwrap(), 2, 2, 20).unwrap());
    }

    #[test]
    fn louyu_dichotomy() {
        assert!(check_louyu_dichotomy(&complete(4).unwrap(), 1).unwrap());
        assert!(check_louyu_dichotomy(&cycle(4).unwrap(), 1).unwrap());
        assert!(check_louyu_dichotomy(&complete(8).unwrap(), 2).unwrap());
        assert!(matches!(
            check_louyu_dichotomy(&cycle(6).unwrap(), 1),
            Err(DeciderError::PreconditionUnmet(_))
        ));
    }

    #[test]
    fn complete_graph_ground_truth() {
        for n in 1..=4 {
            let g = complete(n + 2).unwrap();
            assert!(is_n_factor_critical(&g, n, CAP).unwrap().holds, "K_{} vs n={n}", n + 2);
        }
        for (n, k) in
            [(0usize, 0usize), (0, 1), (0, 2), (1, 0), (2, 0), (1, 1), (2, 1), (3, 0), (4, 0)]
        {
            if n + 2 * k <= 6 {
                let g = complete(n + 2 * k + 2).unwrap();
                assert!(
                    is_nk_graph(&g, n, k, CAP).unwrap().holds,
                    "K_{} vs ({n},{k})",
                    n + 2 * k + 2
                );
            }
        }
    }

    #[test]
    fn nk_graphs_with_positive_n_are_not_bipartite() {
        let instances: Vec<(Graph, usize, usize)> = vec![
            (complete(6).unwrap(), 2, 1),
            (icosahedron(), 2, 1),
            (complete(8).unwrap(), 2, 2),
            (complete(5).unwrap(), 1, 1),
        ];
        for (g, n, k) in instances {
            assert!(is_nk_graph(&g, n, k, CAP).unwrap().holds);
            assert!(!is_bipartite(&g));
        }
        // Bipartite k-extendable graphs exist, but only with n = 0.
        let k33 = complete_bipartite(3, 3).unwrap();
        assert!(is_k_extendable(&k33, 1, CAP).unwrap().holds);
        assert!(is_bipartite(&k33));
    }
}
