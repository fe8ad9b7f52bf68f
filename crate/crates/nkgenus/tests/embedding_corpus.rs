//! Seeded corpus of random rotation systems on random connected hosts,
//! checking the structural invariants of every traced embedding: Euler's
//! relation, double edge coverage, the contribution ledger summing to the
//! characteristic, the control-point rule, and the text round-trip.

use nkgenus::embedding::{
    control_points, euler_contribution, trace_faces, verify_control_lemma, RotationSystem,
};
use nkgenus::graph::random;
use num::{BigInt, BigRational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

#[test]
fn random_rotation_systems_satisfy_all_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut traced = 0;
    let mut with_negatives = 0;
    let mut seed = 0u64;
    while traced < 220 {
        seed += 1;
        let n = rng.gen_range(3..=10);
        let p = rng.gen_range(0.3..0.8);
        let g = random(n, p, seed).unwrap();
        if !g.is_connected() || g.edge_count() == 0 {
            continue;
        }
        traced += 1;

        let mut orders: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            let mut nbrs = g.neighbors(v).to_vec();
            nbrs.shuffle(&mut rng);
            orders.push(nbrs);
        }
        let negatives: Vec<(usize, usize)> = if traced % 2 == 0 {
            g.edges().iter().copied().filter(|_| rng.gen_bool(0.35)).collect()
        } else {
            Vec::new()
        };
        if !negatives.is_empty() {
            with_negatives += 1;
        }
        let rs = RotationSystem::new(g.clone(), &orders, &negatives).unwrap();
        let report = trace_faces(&rs).unwrap();

        // Euler's relation, straight from the reported counts.
        let f = report.face_count() as i64;
        assert_eq!(
            report.euler_characteristic(),
            n as i64 - g.edge_count() as i64 + f,
            "seed {seed}"
        );

        // Every edge is traversed exactly twice across all boundary walks.
        let mut uses: HashMap<(usize, usize), usize> = HashMap::new();
        for face in report.faces() {
            let walk = &face.walk;
            assert!(walk.len() >= 3, "face of size {} on order {n}", walk.len());
            for i in 0..walk.len() {
                let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
                assert!(g.has_edge(a, b), "walk step {a}-{b} is not an edge");
                *uses.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        for &e in g.edges() {
            assert_eq!(uses.get(&e).copied().unwrap_or(0), 2, "edge {e:?} seed {seed}");
        }

        // Contributions sum to the Euler characteristic.
        let total: BigRational = (0..n).map(|v| euler_contribution(&report, v).unwrap()).sum();
        assert_eq!(total, BigRational::from_integer(BigInt::from(report.euler_characteristic())));

        // Control points are exactly the vertices at or above average.
        let control = control_points(&report);
        assert!(!control.is_empty(), "control set empty at seed {seed}");
        let average =
            BigRational::new(BigInt::from(report.euler_characteristic()), BigInt::from(n as i64));
        for v in 0..n {
            let phi = euler_contribution(&report, v).unwrap();
            assert_eq!(
                control.members().contains(&v),
                phi >= average,
                "control membership of {v} at seed {seed}"
            );
        }

        // The degree/triangle bound at the designated control point.
        assert_eq!(verify_control_lemma(&report), Ok(true), "seed {seed}");

        // Orientability bookkeeping: an orientable characteristic is even.
        if report.orientable() {
            assert_eq!(report.euler_characteristic().rem_euclid(2), 0);
        }

        // Text round-trip preserves the system exactly.
        let back = RotationSystem::parse(&rs.to_text()).unwrap();
        for v in 0..n {
            assert_eq!(back.neighbor_order(v), rs.neighbor_order(v), "vertex {v} seed {seed}");
        }
        assert_eq!(back.negative_edges(), rs.negative_edges());
    }
    assert!(with_negatives >= 60, "signed regime under-sampled: {with_negatives}");
}
