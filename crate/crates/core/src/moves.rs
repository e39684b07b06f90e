//! The move space: how the linking vector of a diagram of P_{2n+1} can change
//! under a single crossing change between two disjoint edges.
//!
//! Deltas are computed from first principles. A crossing change between
//! disjoint edges d and e, with sign parameter epsilon, changes lk(N_i, S_j)
//! by epsilon * sigma(N_i, d) * sigma(S_j, e) for every disjoint region-cycle
//! pair with one of the edges in each, where sigma is +1 exactly when the
//! cycle traverses the edge along its reference orientation. Accumulating
//! into the offset buckets of L(f) yields the move vector. The closed-form
//! list B_{2n+1} is kept as a labelled fixture and the enumeration is checked
//! against it.

use std::collections::BTreeSet;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::graph::EdgeId;
use crate::invariants::linking_vector;
use crate::plum::{build_plum_graph, EdgeRole, PlumGraph, RegionId};

/// Crossing-change pair classes on P_{2n+1}. Two spokes of the same pole are
/// never disjoint (they share the pole), so three classes suffice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PairClass {
    EquatorialEquatorial,
    EquatorialSpoke,
    NorthSouthSpoke,
}

impl PairClass {
    pub fn name(self) -> &'static str {
        match self {
            PairClass::EquatorialEquatorial => "equatorial-equatorial",
            PairClass::EquatorialSpoke => "equatorial-spoke",
            PairClass::NorthSouthSpoke => "north-south-spoke",
        }
    }
}

/// The change of L(f) produced by one crossing change between a disjoint
/// edge pair, with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveVector {
    pub vector: Vec<i64>,
    pub pair: (EdgeId, EdgeId),
    pub class: PairClass,
    pub epsilon: i64,
}

fn classify(p: &PlumGraph, d: EdgeId, e: EdgeId) -> PairClass {
    let eq = |x: EdgeId| matches!(p.edge_role(x), EdgeRole::Equatorial(_));
    match (eq(d), eq(e)) {
        (true, true) => PairClass::EquatorialEquatorial,
        (false, false) => PairClass::NorthSouthSpoke,
        _ => PairClass::EquatorialSpoke,
    }
}

fn edges_disjoint(p: &PlumGraph, d: EdgeId, e: EdgeId) -> bool {
    if d == e {
        return false;
    }
    let (a1, b1) = p.graph().endpoints(d);
    let (a2, b2) = p.graph().endpoints(e);
    a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2
}

/// All unordered pairs of vertex-disjoint edges, classified uniformly.
pub fn disjoint_edge_pairs(p: &PlumGraph) -> Vec<(EdgeId, EdgeId, PairClass)> {
    let mut out = Vec::new();
    let edges: Vec<EdgeId> = p.graph().edges().collect();
    for (i, &d) in edges.iter().enumerate() {
        for &e in &edges[i + 1..] {
            if edges_disjoint(p, d, e) {
                out.push((d, e, classify(p, d, e)));
            }
        }
    }
    out
}

/// Move vector of a crossing change between disjoint edges `d` and `e`.
pub fn crossing_change_delta(p: &PlumGraph, d: EdgeId, e: EdgeId, epsilon: i64) -> Result<MoveVector> {
    if !edges_disjoint(p, d, e) {
        return Err(Error::EdgesNotDisjoint);
    }
    debug_assert!(epsilon == 1 || epsilon == -1);
    let mut vector = vec![0i64; p.n()];
    let mut add = |north: RegionId, south: RegionId, d_edge: EdgeId, e_edge: EdgeId| {
        let (RegionId::N(i), RegionId::S(j)) = (north, south) else {
            return;
        };
        if !p.regions_disjoint(i as i64, j as i64) {
            return;
        }
        let s = p.traversal_sign(north, d_edge) * p.traversal_sign(south, e_edge);
        vector[p.offset_bucket(i as i64, j as i64) - 1] += s;
    };
    for rd in p.regions_of_edge(d) {
        for re in p.regions_of_edge(e) {
            match (rd, re) {
                (RegionId::N(_), RegionId::S(_)) => add(rd, re, d, e),
                (RegionId::S(_), RegionId::N(_)) => add(re, rd, e, d),
                _ => {}
            }
        }
    }
    for x in &mut vector {
        *x *= epsilon;
    }
    Ok(MoveVector { vector, pair: (d, e), class: classify(p, d, e), epsilon })
}

/// Canonical sign: first nonzero entry positive. Returns None for the zero
/// vector.
pub fn canonical_sign(v: &[i64]) -> Option<Vec<i64>> {
    let first = v.iter().find(|&&x| x != 0)?;
    if *first > 0 {
        Some(v.to_vec())
    } else {
        Some(v.iter().map(|&x| -x).collect())
    }
}

/// The closed-form generator list B_{2n+1}, labelled as
/// a_1..a_n, b_1..b_{n-1}, c_1..c_{n-1}, d = e_0, e_1..e_{n-2},
/// p = e_{n-1}, q = b_n = c_n = e_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormB {
    pub n: usize,
    pub a: Vec<Vec<i64>>,
    pub b: Vec<Vec<i64>>,
    pub c: Vec<Vec<i64>>,
    pub d: Option<Vec<i64>>,
    pub e: Vec<Vec<i64>>,
    pub p: Option<Vec<i64>>,
    pub q: Vec<i64>,
}

impl ClosedFormB {
    pub fn new(n: usize) -> ClosedFormB {
        assert!(n >= 1);
        let unit = |i: usize| -> Vec<i64> {
            let mut v = vec![0i64; n];
            v[i - 1] = 1;
            v
        };
        let a = (1..=n).map(|i| unit(i).iter().map(|x| 2 * x).collect()).collect();
        let b = (1..n)
            .map(|i| {
                let mut v = unit(i);
                v[i] = 1;
                v
            })
            .collect();
        let c = (1..n)
            .map(|i| {
                let mut v = unit(i);
                v[i] = -1;
                v
            })
            .collect();
        let d = (n >= 2).then(|| {
            let mut v = vec![0i64; n];
            v[0] = 2;
            v[1] = -2;
            v
        });
        let e = (1..=n.saturating_sub(2))
            .map(|i| {
                let mut v = vec![0i64; n];
                v[i - 1] = 1;
                v[i] = -2;
                v[i + 1] = 1;
                v
            })
            .collect();
        let p = (n >= 2).then(|| {
            let mut v = vec![0i64; n];
            v[n - 2] = 1;
            v[n - 1] = -2;
            v
        });
        let q = unit(n);
        ClosedFormB { n, a, b, c, d, e, p, q }
    }

    /// b_k for 1 <= k <= n (b_n coincides with q).
    pub fn b_at(&self, k: usize) -> &[i64] {
        assert!((1..=self.n).contains(&k));
        if k == self.n {
            &self.q
        } else {
            &self.b[k - 1]
        }
    }

    /// c_k for 1 <= k <= n (c_n coincides with q).
    pub fn c_at(&self, k: usize) -> &[i64] {
        assert!((1..=self.n).contains(&k));
        if k == self.n {
            &self.q
        } else {
            &self.c[k - 1]
        }
    }

    /// e_k for 0 <= k <= n: e_0 = d, e_{n-1} = p, e_n = q. Not every index
    /// exists at small n (e.g. e_0 needs dimension 2).
    pub fn e_at(&self, k: usize) -> Option<&[i64]> {
        assert!(k <= self.n);
        if k == 0 {
            self.d.as_deref()
        } else if k <= self.n.saturating_sub(2) {
            Some(&self.e[k - 1])
        } else if k == self.n - 1 {
            self.p.as_deref()
        } else {
            Some(&self.q)
        }
    }

    /// The deduplicated set, up to sign.
    pub fn set(&self) -> BTreeSet<Vec<i64>> {
        let mut out = BTreeSet::new();
        for v in self.iter_all() {
            out.insert(canonical_sign(&v).expect("labels are nonzero"));
        }
        out
    }

    fn iter_all(&self) -> Vec<Vec<i64>> {
        let mut all: Vec<Vec<i64>> = Vec::new();
        all.extend(self.a.iter().cloned());
        all.extend(self.b.iter().cloned());
        all.extend(self.c.iter().cloned());
        all.extend(self.d.iter().cloned());
        all.extend(self.e.iter().cloned());
        all.extend(self.p.iter().cloned());
        all.push(self.q.clone());
        all
    }
}

/// Enumerated move set of P_{2n+1}: the per-pair table, the deduplicated
/// vector set up to sign, and the labelled closed form it provably equals.
#[derive(Debug, Clone)]
pub struct MoveSet {
    pub n: usize,
    /// One entry per disjoint edge pair (epsilon = +1), in pair-id order.
    pub table: Vec<MoveVector>,
    /// Deduplicated nonzero vectors, canonical sign.
    pub vectors: BTreeSet<Vec<i64>>,
    pub closed_form: ClosedFormB,
}

impl MoveSet {
    /// Generator list for L1 problems, in deterministic order.
    pub fn generators(&self) -> Vec<Vec<i64>> {
        self.vectors.iter().cloned().collect()
    }

    /// Vectors realized by pairs of the given class, canonical sign.
    pub fn realized_by_class(&self, class: PairClass) -> BTreeSet<Vec<i64>> {
        self.table
            .iter()
            .filter(|mv| mv.class == class)
            .filter_map(|mv| canonical_sign(&mv.vector))
            .collect()
    }
}

/// Enumerates the move set of P_{2n+1} and checks it reproduces the closed
/// form B_{2n+1} exactly (up to sign), including the coincidence
/// q = b_n = c_n = e_n: the boundary vector q is realized by all three pair
/// classes (for n >= 2).
pub fn move_set(n: usize) -> Result<MoveSet> {
    let p = build_plum_graph(n)?;
    move_set_of(&p)
}

/// As [`move_set`], over an already built plum graph.
pub fn move_set_of(p: &PlumGraph) -> Result<MoveSet> {
    let n = p.n();
    let mut table = Vec::new();
    let mut vectors = BTreeSet::new();
    for (d, e, _) in disjoint_edge_pairs(p) {
        let mv = crossing_change_delta(p, d, e, 1)?;
        if let Some(canon) = canonical_sign(&mv.vector) {
            vectors.insert(canon);
        }
        table.push(mv);
    }
    let closed_form = ClosedFormB::new(n);
    assert_eq!(
        vectors,
        closed_form.set(),
        "enumerated move set must reproduce the closed form at n = {}",
        n
    );
    let set = MoveSet { n, table, vectors, closed_form };
    if n >= 2 {
        for class in [
            PairClass::EquatorialEquatorial,
            PairClass::EquatorialSpoke,
            PairClass::NorthSouthSpoke,
        ] {
            assert!(
                set.realized_by_class(class).contains(&set.closed_form.q),
                "q must be realized by {} pairs",
                class.name()
            );
        }
    }
    Ok(set)
}

/// Report of the cross-module consistency check: for each crossing of the
/// diagram, the linking-vector difference under that crossing change equals
/// plus or minus the move vector of the crossing's edge pair.
#[derive(Debug, Clone)]
pub struct DeltaRealizationReport {
    pub n: usize,
    pub crossings_checked: usize,
    pub consistent: bool,
}

pub fn verify_delta_realization(p: &PlumGraph, d: &Diagram) -> Result<DeltaRealizationReport> {
    let base = linking_vector(d, p)?;
    let mut consistent = true;
    let crossings = d.crossing_ids();
    for &x in &crossings {
        let (e1, e2) = d.crossing_edges(x)?;
        let changed = linking_vector(&d.crossing_change(x)?, p)?;
        let delta = changed.delta(&base);
        let mv = crossing_change_delta(p, e1, e2, 1)?;
        let neg: Vec<i64> = mv.vector.iter().map(|&v| -v).collect();
        if delta != mv.vector && delta != neg {
            consistent = false;
        }
    }
    Ok(DeltaRealizationReport { n: p.n(), crossings_checked: crossings.len(), consistent })
}
