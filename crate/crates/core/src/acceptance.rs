//! The acceptance suite: one runnable check per acceptance criterion, shared
//! by the `acceptance` integration test target and the CLI `selftest`
//! subcommand. Every check is exact; tolerances are wall-clock limits only.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigUint;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::bounds::{
    audit_descending, branch_indices, branch_indices_memoized, change_all, descending_change_set,
    optimize_constants, theorem2_constants, trivializable_bound,
};
use crate::diagram::{
    closed_two_braid, cube_knotted_projection, resolutions, standard_plum_diagram,
    theta_clasp_diagram, trivial_plum_diagram, Diagram,
};
use crate::graph::{spanning_tree_bfs, Dir, EdgeEnd, EdgeId, PlanarGraph, SpanningTree, VertexId};
use crate::invariants::{
    bracket_determinant, knot_determinant, linking_vector, nontriviality_certificate, Verdict,
};
use crate::l1::{min_l1, subclaim_search, verify_unknotting_number, Budget, L1Problem, PrefixOutcome, SolveOutcome};
use crate::moves::{crossing_change_delta, move_set, PairClass};
use crate::plum::build_plum_graph;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
    pub millis: u128,
}

impl CriterionResult {
    pub fn status(&self) -> &'static str {
        if self.passed {
            "pass"
        } else {
            "fail"
        }
    }
}

fn run<F: FnOnce() -> (bool, String)>(id: u32, name: &'static str, f: F) -> CriterionResult {
    let start = Instant::now();
    let (passed, details) = f();
    CriterionResult { id, name, passed, details, millis: start.elapsed().as_millis() }
}

/// Runs every acceptance criterion, in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ]
}

/// Linking vector of the standard diagram: (2n+1, 0, ..., 0) for n = 1..6,
/// exact, under 5 seconds total.
pub fn criterion_1() -> CriterionResult {
    run(1, "standard linking vectors", || {
        let start = Instant::now();
        for n in 1..=6usize {
            let p = match build_plum_graph(n) {
                Ok(p) => p,
                Err(e) => return (false, format!("n={}: {}", n, e)),
            };
            let d = standard_plum_diagram(&p);
            let lv = match linking_vector(&d, &p) {
                Ok(lv) => lv,
                Err(e) => return (false, format!("n={}: {}", n, e)),
            };
            let mut expected = vec![0i64; n];
            expected[0] = 2 * n as i64 + 1;
            if lv.entries != expected {
                return (false, format!("n={}: got {}", n, lv));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 5.0 {
            return (false, format!("exceeded 5 s: {:?}", elapsed));
        }
        (true, format!("L(f_(2n+1)) = (2n+1,0,...,0) for n=1..6 in {:?}", elapsed))
    })
}

/// Lower bound by exhaustive search: min_l1(move_set(n), (2n+1,0,...,0)) = 2n
/// for n = 1..4; n = 4 within 120 seconds.
pub fn criterion_2() -> CriterionResult {
    run(2, "exhaustive lower bounds", || {
        let budget = Budget::default();
        for n in 1..=4usize {
            let start = Instant::now();
            let ms = match move_set(n) {
                Ok(ms) => ms,
                Err(e) => return (false, format!("n={}: {}", n, e)),
            };
            let mut target = vec![0i64; n];
            target[0] = 2 * n as i64 + 1;
            let problem = L1Problem::exact(n, ms.generators(), target);
            match min_l1(&problem, &budget) {
                Ok(SolveOutcome::Solved(sol)) => {
                    if sol.cost != 2 * n as u64 {
                        return (false, format!("n={}: minimum {} != {}", n, sol.cost, 2 * n));
                    }
                    if n == 4 && start.elapsed().as_secs_f64() >= 120.0 {
                        return (false, format!("n=4 took {:?}", start.elapsed()));
                    }
                }
                Ok(SolveOutcome::Unresolved { reason, .. }) => {
                    return (false, format!("n={}: unresolved ({})", n, reason))
                }
                Err(e) => return (false, format!("n={}: {}", n, e)),
            }
        }
        (true, "min-L1 over B_(2n+1) equals 2n for n=1..4".into())
    })
}

/// Upper bound, algebraic form: the explicit 2n-term sequence sums to
/// (2n+1,0,...,0) with every term a realized equatorial-equatorial move
/// vector, for n = 1..12, under 1 second.
pub fn criterion_3() -> CriterionResult {
    run(3, "explicit unknotting sequences", || {
        let start = Instant::now();
        for n in 1..=12usize {
            let report = match verify_unknotting_number(n, 0, &Budget::default()) {
                Ok(r) => r,
                Err(e) => return (false, format!("n={}: {}", n, e)),
            };
            if !report.upper.ok() {
                return (
                    false,
                    format!(
                        "n={}: terms={} realized={} sums={}",
                        n,
                        report.upper.terms.len(),
                        report.upper.all_realized_equatorial,
                        report.upper.sums_to_target
                    ),
                );
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 1.0 {
            return (false, format!("exceeded 1 s: {:?}", elapsed));
        }
        (true, format!("2n-term sequences check out for n=1..12 in {:?}", elapsed))
    })
}

/// Move-set reproduction: enumeration equals the closed form B_{2n+1} up to
/// sign for n = 2..5, with q realized by all three pair classes.
pub fn criterion_4() -> CriterionResult {
    run(4, "move-set reproduction", || {
        for n in 2..=5usize {
            let ms = match move_set(n) {
                Ok(ms) => ms,
                Err(e) => return (false, format!("n={}: {}", n, e)),
            };
            if ms.vectors != ms.closed_form.set() {
                return (false, format!("n={}: enumerated set differs from closed form", n));
            }
            for class in [
                PairClass::EquatorialEquatorial,
                PairClass::EquatorialSpoke,
                PairClass::NorthSouthSpoke,
            ] {
                if !ms.realized_by_class(class).contains(&ms.closed_form.q) {
                    return (false, format!("n={}: q not realized by {}", n, class.name()));
                }
            }
        }
        (true, "enumerated sets equal B_(2n+1) for n=2..5, q realized by all classes".into())
    })
}

/// Subclaims: prefix-constrained minima equal n+k for n = 2..4 and k = 1..n;
/// the achievable coordinate-(k+2) sets at minimal cost lie in {0,1} for
/// k = 1 and {-1,0,1} otherwise (when k <= n-2).
pub fn criterion_5() -> CriterionResult {
    run(5, "subclaims", || {
        for n in 2..=4usize {
            let ms = match move_set(n) {
                Ok(ms) => ms,
                Err(e) => return (false, format!("n={}: {}", n, e)),
            };
            for k in 1..=n {
                match subclaim_search(&ms, k, &Budget::default()) {
                    Ok(PrefixOutcome::Solved { cost, coordinate_values }) => {
                        if cost != (n + k) as u64 {
                            return (false, format!("n={} k={}: cost {} != {}", n, k, cost, n + k));
                        }
                        if k + 2 <= n {
                            let values = coordinate_values.unwrap_or_default();
                            let allowed: BTreeSet<i64> = if k == 1 {
                                [0, 1].into_iter().collect()
                            } else {
                                [-1, 0, 1].into_iter().collect()
                            };
                            if !values.is_subset(&allowed) {
                                return (
                                    false,
                                    format!("n={} k={}: coordinate values {:?}", n, k, values),
                                );
                            }
                        }
                    }
                    Ok(PrefixOutcome::Unresolved { reason, .. }) => {
                        return (false, format!("n={} k={}: unresolved ({})", n, k, reason))
                    }
                    Err(e) => return (false, format!("n={} k={}: {}", n, k, e)),
                }
            }
        }
        (true, "prefix minima equal n+k with bounded coordinate sets".into())
    })
}

/// Cube knotted projection: all 8 resolutions certified nontrivial; the
/// multiset of Hopf-witness counts is {3,3,1,1,1,1,1,1}; under 1 second.
pub fn criterion_6() -> CriterionResult {
    run(6, "cube knotted projection", || {
        let start = Instant::now();
        let (_, proj) = cube_knotted_projection();
        let diagrams = match resolutions(&proj, 20) {
            Ok(d) => d,
            Err(e) => return (false, e.to_string()),
        };
        if diagrams.len() != 8 {
            return (false, format!("{} resolutions", diagrams.len()));
        }
        let mut hopf = Vec::new();
        for d in &diagrams {
            let cert = match nontriviality_certificate(d) {
                Ok(c) => c,
                Err(e) => return (false, e.to_string()),
            };
            if cert.verdict != Verdict::Nontrivial {
                return (false, "a resolution was not certified nontrivial".into());
            }
            hopf.push(cert.hopf_count());
        }
        hopf.sort_unstable();
        if hopf != vec![1, 1, 1, 1, 1, 1, 3, 3] {
            return (false, format!("Hopf multiset {:?}", hopf));
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 1.0 {
            return (false, format!("exceeded 1 s: {:?}", elapsed));
        }
        (true, format!("8 resolutions nontrivial, Hopf counts {{3,3,1,1,1,1,1,1}} in {:?}", elapsed))
    })
}

/// Cube structure: exactly 3 pairs of mutually disjoint cycles.
pub fn criterion_7() -> CriterionResult {
    run(7, "disjoint cycle pairs of the cube", || {
        let p = match build_plum_graph(1) {
            Ok(p) => p,
            Err(e) => return (false, e.to_string()),
        };
        let pairs = p.graph().disjoint_cycle_pairs();
        if pairs.len() != 3 {
            return (false, format!("{} pairs", pairs.len()));
        }
        if !pairs.iter().all(|(a, b)| a.len() == 4 && b.len() == 4) {
            return (false, "a pair is not two 4-cycles".into());
        }
        (true, "exactly 3 pairs, each two 4-cycles".into())
    })
}

/// Determinant consistency: the equator sub-diagram of the standard diagram
/// has determinant 2n+1 for n = 1..5, agreeing with the independent
/// state-sum oracle.
pub fn criterion_8() -> CriterionResult {
    run(8, "torus-knot determinants", || {
        for n in 1..=5usize {
            let p = match build_plum_graph(n) {
                Ok(p) => p,
                Err(e) => return (false, e.to_string()),
            };
            let d = standard_plum_diagram(&p);
            let eq = match crate::diagram::restrict_to_cycles(&d, &[p.equator().clone()]) {
                Ok(eq) => eq,
                Err(e) => return (false, e.to_string()),
            };
            let expected = BigUint::from(2 * n as u32 + 1);
            match (knot_determinant(&eq), bracket_determinant(&eq)) {
                (Ok(goeritz), Ok(bracket)) => {
                    if goeritz != expected || bracket != expected {
                        return (
                            false,
                            format!("n={}: goeritz {} bracket {} expected {}", n, goeritz, bracket, expected),
                        );
                    }
                }
                (Err(e), _) | (_, Err(e)) => return (false, format!("n={}: {}", n, e)),
            }
        }
        (true, "det = 2n+1 for n=1..5 on both routes".into())
    })
}

/// Cross-module delta property: 200 seeded random trials over n in {1,2,3}:
/// the linking-vector difference under one crossing change equals plus or
/// minus the move vector of the crossing's edge pair.
pub fn criterion_9() -> CriterionResult {
    run(9, "crossing-change deltas", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x706c756d);
        // resolutions of the standard projections, per n
        let mut pools: Vec<(crate::plum::PlumGraph, Vec<Diagram>)> = Vec::new();
        for n in 1..=3usize {
            let p = match build_plum_graph(n) {
                Ok(p) => p,
                Err(e) => return (false, e.to_string()),
            };
            let d = standard_plum_diagram(&p);
            let rs = match resolutions(&d.projection(), 20) {
                Ok(rs) => rs,
                Err(e) => return (false, e.to_string()),
            };
            pools.push((p, rs));
        }
        for trial in 0..200 {
            let (p, rs) = &pools[rng.gen_range(0..pools.len())];
            let d = &rs[rng.gen_range(0..rs.len())];
            let crossings = d.crossing_ids();
            let x = crossings[rng.gen_range(0..crossings.len())];
            let (e1, e2) = match d.crossing_edges(x) {
                Ok(pair) => pair,
                Err(e) => return (false, e.to_string()),
            };
            let base = match linking_vector(d, p) {
                Ok(v) => v,
                Err(e) => return (false, e.to_string()),
            };
            let changed = match d.crossing_change(x).and_then(|d2| linking_vector(&d2, p)) {
                Ok(v) => v,
                Err(e) => return (false, e.to_string()),
            };
            let delta = changed.delta(&base);
            let mv = match crossing_change_delta(p, e1, e2, 1) {
                Ok(mv) => mv,
                Err(e) => return (false, e.to_string()),
            };
            let neg: Vec<i64> = mv.vector.iter().map(|&v| -v).collect();
            if delta != mv.vector && delta != neg {
                return (
                    false,
                    format!("trial {}: delta {:?} vs move vector {:?}", trial, delta, mv.vector),
                );
            }
        }
        (true, "200 randomized trials consistent".into())
    })
}

/// Theorem pipeline for the linear bound: triangle and cycle graphs give
/// (A, B) = (1/2, 0); branch indices agree with the memoized oracle on 50
/// random graph/tree pairs; descending change sets respect the pigeonhole
/// bound and pass the descending audit; under 10 seconds.
pub fn criterion_10() -> CriterionResult {
    run(10, "linear-bound pipeline", || {
        let start = Instant::now();
        use num_rational::Ratio;
        // triangle and cycle graphs
        for k in [3usize, 4, 6, 9] {
            let g = cycle_graph(k);
            let (_, c) = match optimize_constants(&g, 100_000) {
                Ok(x) => x,
                Err(e) => return (false, e.to_string()),
            };
            if c.coeff != Ratio::new(1, 2) || c.offset != Ratio::from_integer(0) {
                return (false, format!("cycle {}: (A,B) = ({}, {})", k, c.coeff, c.offset));
            }
        }
        // random graph/tree pairs against the memoized oracle
        let mut rng = ChaCha8Rng::seed_from_u64(0x62726e63);
        for trial in 0..50 {
            let (g, t) = random_graph_and_tree(&mut rng);
            let a = match branch_indices(&g, &t) {
                Ok(a) => a,
                Err(e) => return (false, format!("trial {}: {}", trial, e)),
            };
            let b = match branch_indices_memoized(&g, &t) {
                Ok(b) => b,
                Err(e) => return (false, format!("trial {}: {}", trial, e)),
            };
            if a != b {
                return (false, format!("trial {}: branch indices disagree", trial));
            }
            if a.values.iter().any(|&v| v < 1) {
                return (false, format!("trial {}: branch index below 1", trial));
            }
            let c = match theorem2_constants(&g, &t) {
                Ok(c) => c,
                Err(e) => return (false, format!("trial {}: {}", trial, e)),
            };
            if c.coeff < Ratio::new(1, 2) || c.offset < Ratio::from_integer(0) {
                return (false, format!("trial {}: constants out of range", trial));
            }
        }
        // descending change sets on the braid family and the fixtures
        for m in 1..=8usize {
            let (g, d, _) = closed_two_braid(m);
            let order: Vec<(EdgeId, Dir)> = g.edges().map(|e| (e, Dir::Fwd)).collect();
            let set = match descending_change_set(&d, &[], &order) {
                Ok(s) => s,
                Err(e) => return (false, e.to_string()),
            };
            if set.min_changes() as u64 > trivializable_bound(m as u64) {
                return (false, format!("braid {}: min {} > floor(c/2)", m, set.min_changes()));
            }
            let changed = match change_all(&d, &set.descending_set) {
                Ok(d) => d,
                Err(e) => return (false, e.to_string()),
            };
            match audit_descending(&changed, &[], &order) {
                Ok(true) => {}
                Ok(false) => return (false, format!("braid {}: audit failed", m)),
                Err(e) => return (false, e.to_string()),
            }
        }
        let (_, d) = theta_clasp_diagram();
        let order = vec![(EdgeId(1), Dir::Fwd), (EdgeId(2), Dir::Fwd)];
        let set = match descending_change_set(&d, &[EdgeId(0)], &order) {
            Ok(s) => s,
            Err(e) => return (false, e.to_string()),
        };
        if set.min_changes() as u64 > trivializable_bound(2) {
            return (false, "theta clasp exceeds the halving bound".into());
        }
        // crossing-free diagrams need no changes at all
        let p = match build_plum_graph(1) {
            Ok(p) => p,
            Err(e) => return (false, e.to_string()),
        };
        let d = trivial_plum_diagram(&p);
        let t = match spanning_tree_bfs(p.graph(), VertexId(0)) {
            Ok(t) => t,
            Err(e) => return (false, e.to_string()),
        };
        let order: Vec<(EdgeId, Dir)> = p
            .graph()
            .edges()
            .filter(|e| !t.contains(*e))
            .map(|e| (e, Dir::Fwd))
            .collect();
        match descending_change_set(&d, &t.edges, &order) {
            Ok(s) if s.min_changes() == 0 => {}
            Ok(s) => return (false, format!("crossing-free diagram needs {} changes", s.min_changes())),
            Err(e) => return (false, e.to_string()),
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 10.0 {
            return (false, format!("exceeded 10 s: {:?}", elapsed));
        }
        (true, format!("constants, 50 oracle pairs, and descending audits in {:?}", elapsed))
    })
}

fn cycle_graph(k: usize) -> PlanarGraph {
    let endpoints: Vec<_> = (0..k).map(|i| (VertexId(i), VertexId((i + 1) % k))).collect();
    let rotation: Vec<Vec<_>> = (0..k)
        .map(|i| {
            vec![
                EdgeEnd::new(EdgeId(i), 0),
                EdgeEnd::new(EdgeId((i + k - 1) % k), 1),
            ]
        })
        .collect();
    PlanarGraph::new(k, endpoints, rotation).expect("cycle graph")
}

/// Random connected multigraph (loops and parallel edges allowed) with a
/// spanning tree: tree edges first, then extra edges, rotations shuffled.
fn random_graph_and_tree(rng: &mut ChaCha8Rng) -> (PlanarGraph, SpanningTree) {
    let nv = rng.gen_range(2..=9usize);
    let mut endpoints: Vec<(VertexId, VertexId)> = Vec::new();
    for v in 1..nv {
        let parent = rng.gen_range(0..v);
        endpoints.push((VertexId(parent), VertexId(v)));
    }
    let tree_edges: Vec<EdgeId> = (0..nv - 1).map(EdgeId).collect();
    let extras = rng.gen_range(0..=4usize);
    for _ in 0..extras {
        let a = rng.gen_range(0..nv);
        // bias towards loops and parallels now and then
        let b = if rng.gen_bool(0.2) { a } else { rng.gen_range(0..nv) };
        endpoints.push((VertexId(a), VertexId(b)));
    }
    let mut rotation: Vec<Vec<EdgeEnd>> = vec![Vec::new(); nv];
    for (i, &(a, b)) in endpoints.iter().enumerate() {
        rotation[a.0].push(EdgeEnd::new(EdgeId(i), 0));
        rotation[b.0].push(EdgeEnd::new(EdgeId(i), 1));
    }
    for rot in &mut rotation {
        rot.shuffle(rng);
    }
    let g = PlanarGraph::new(nv, endpoints, rotation).expect("structurally valid");
    let root = VertexId(rng.gen_range(0..nv));
    (g, SpanningTree { edges: tree_edges, root })
}
