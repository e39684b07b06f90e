//! The plum graphs P_{2n+1}.
//!
//! P_{2n+1} consists of a (4n+2)-cycle (the equator), a north pole adjacent
//! to every other equator vertex, and a south pole adjacent to the remaining
//! ones. Walking the equator the vertices read u_1, v_{n+2}, u_2, v_{n+3},
//! ..., u_{2n+1}, v_{n+1} with suffixes mod 2n+1; the u_i neighbour the north
//! pole, the v_j the south pole. The faces of its sphere embedding are the
//! 4n+2 oriented region cycles
//!
//!   N_i = u_i v_{i+n+1} u_{i+1} v_N u_i,
//!   S_i = v_i u_{i+n+1} v_{i+1} v_S v_i.
//!
//! N_i and S_j are vertex-disjoint exactly when (j - i) mod (2n+1) avoids
//! {n, n+1}; all linking data of a spatial embedding is organized along the
//! pairs (N_i, S_j) and their offset.

use crate::error::{Error, Result};
use crate::graph::{Cycle, Dir, EdgeEnd, EdgeId, PlanarGraph, VertexId};

/// Role of a vertex of P_{2n+1}. Indices are 1-based mod 2n+1, following the
/// cyclic labelling of the equator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    NorthPole,
    SouthPole,
    /// u_i, adjacent to the north pole.
    U(usize),
    /// v_j, adjacent to the south pole.
    V(usize),
}

/// Role of an edge of P_{2n+1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeRole {
    /// Equator edge at cyclic position `pos` (0-based, 4n+2 positions).
    Equatorial(usize),
    /// Spoke v_N -- u_i.
    NorthSpoke(usize),
    /// Spoke v_S -- v_j.
    SouthSpoke(usize),
}

/// Identifier of a region cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionId {
    N(usize),
    S(usize),
}

/// The labelled plum graph P_{2n+1} with its sphere embedding and oriented
/// region cycles.
#[derive(Debug, Clone)]
pub struct PlumGraph {
    n: usize,
    graph: PlanarGraph,
    v_north: VertexId,
    v_south: VertexId,
    /// u[i-1] = u_i
    u: Vec<VertexId>,
    /// v[j-1] = v_j
    v: Vec<VertexId>,
    equator: Cycle,
    north_cycles: Vec<Cycle>,
    south_cycles: Vec<Cycle>,
}

impl PlumGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// 2n+1, the index modulus.
    pub fn m(&self) -> usize {
        2 * self.n + 1
    }

    pub fn graph(&self) -> &PlanarGraph {
        &self.graph
    }

    pub fn north_pole(&self) -> VertexId {
        self.v_north
    }

    pub fn south_pole(&self) -> VertexId {
        self.v_south
    }

    /// Normalizes a 1-based suffix into 1..=2n+1.
    pub fn norm(&self, i: i64) -> usize {
        let m = self.m() as i64;
        (((i - 1) % m + m) % m + 1) as usize
    }

    pub fn u(&self, i: i64) -> VertexId {
        self.u[self.norm(i) - 1]
    }

    pub fn v(&self, j: i64) -> VertexId {
        self.v[self.norm(j) - 1]
    }

    pub fn vertex_role(&self, vid: VertexId) -> VertexRole {
        if vid == self.v_north {
            VertexRole::NorthPole
        } else if vid == self.v_south {
            VertexRole::SouthPole
        } else if vid.0 >= 2 && vid.0 < 2 + self.m() {
            VertexRole::U(vid.0 - 1)
        } else {
            VertexRole::V(vid.0 - 1 - self.m())
        }
    }

    pub fn edge_role(&self, e: EdgeId) -> EdgeRole {
        let m = self.m();
        if e.0 < 2 * m {
            EdgeRole::Equatorial(e.0)
        } else if e.0 < 3 * m {
            EdgeRole::NorthSpoke(e.0 - 2 * m + 1)
        } else {
            EdgeRole::SouthSpoke(e.0 - 3 * m + 1)
        }
    }

    /// Equator edge at cyclic position `pos` in 0..4n+2.
    pub fn equator_edge(&self, pos: usize) -> EdgeId {
        EdgeId(pos % (2 * self.m()))
    }

    pub fn north_spoke(&self, i: i64) -> EdgeId {
        EdgeId(2 * self.m() + self.norm(i) - 1)
    }

    pub fn south_spoke(&self, j: i64) -> EdgeId {
        EdgeId(3 * self.m() + self.norm(j) - 1)
    }

    pub fn equator(&self) -> &Cycle {
        &self.equator
    }

    pub fn north_cycle(&self, i: i64) -> &Cycle {
        &self.north_cycles[self.norm(i) - 1]
    }

    pub fn south_cycle(&self, i: i64) -> &Cycle {
        &self.south_cycles[self.norm(i) - 1]
    }

    pub fn region_cycle(&self, id: RegionId) -> &Cycle {
        match id {
            RegionId::N(i) => self.north_cycle(i as i64),
            RegionId::S(i) => self.south_cycle(i as i64),
        }
    }

    pub fn region_ids(&self) -> impl Iterator<Item = RegionId> {
        let m = self.m();
        (1..=m).map(RegionId::N).chain((1..=m).map(RegionId::S))
    }

    /// The two region cycles containing an edge. Equatorial edges lie in one
    /// north and one south cycle, spokes in two cycles of the same kind.
    pub fn regions_of_edge(&self, e: EdgeId) -> [RegionId; 2] {
        let m = self.m() as i64;
        let norm = |i: i64| self.norm(i);
        match self.edge_role(e) {
            EdgeRole::Equatorial(pos) => {
                if pos % 2 == 0 {
                    // u_i -> v_{i+n+1} with i = pos/2 + 1: lies in N_i and S_{i+n}
                    let i = pos as i64 / 2 + 1;
                    [RegionId::N(norm(i)), RegionId::S(norm(i + self.n as i64))]
                } else {
                    // v_j -> u_{j+n+1} with j such that pos_v(j) = pos: lies in S_j and N_{j+n}
                    let i = (pos as i64 - 1) / 2 + 1; // equator u-index before this edge
                    let j = i + self.n as i64 + 1;
                    let _ = m;
                    [RegionId::N(norm(j + self.n as i64)), RegionId::S(norm(j))]
                }
            }
            EdgeRole::NorthSpoke(i) => {
                let i = i as i64;
                [RegionId::N(norm(i - 1)), RegionId::N(norm(i))]
            }
            EdgeRole::SouthSpoke(j) => {
                let j = j as i64;
                [RegionId::S(norm(j - 1)), RegionId::S(norm(j))]
            }
        }
    }

    /// Whether N_i and S_j are vertex-disjoint: offset (j-i) mod 2n+1 outside
    /// {n, n+1}.
    pub fn regions_disjoint(&self, i: i64, j: i64) -> bool {
        let m = self.m() as i64;
        let r = ((j - i) % m + m) % m;
        r != self.n as i64 && r != self.n as i64 + 1
    }

    /// Linking-vector bucket (1-based, in 1..=n) of the pair (N_i, S_j).
    /// Panics on non-disjoint pairs.
    pub fn offset_bucket(&self, i: i64, j: i64) -> usize {
        let m = self.m() as i64;
        let r = ((j - i) % m + m) % m;
        assert!(
            r != self.n as i64 && r != self.n as i64 + 1,
            "pair (N_{}, S_{}) is not disjoint",
            i,
            j
        );
        1 + r.min(m - r) as usize
    }

    /// +1 if the region cycle traverses the edge along its reference
    /// orientation, -1 otherwise. Panics if the cycle does not contain it.
    pub fn traversal_sign(&self, id: RegionId, e: EdgeId) -> i64 {
        match self.region_cycle(id).dir_of(e) {
            Some(Dir::Fwd) => 1,
            Some(Dir::Rev) => -1,
            None => panic!("edge {:?} not on region cycle {:?}", e, id),
        }
    }
}

/// Builds P_{2n+1} with its sphere embedding: the equator drawn as a round
/// counterclockwise circle, the north pole inside, the south pole outside.
/// All labels and ids are deterministic.
pub fn build_plum_graph(n: usize) -> Result<PlumGraph> {
    if n == 0 {
        return Err(Error::InvalidN);
    }
    let m = 2 * n + 1;
    let v_north = VertexId(0);
    let v_south = VertexId(1);
    let u: Vec<VertexId> = (0..m).map(|i| VertexId(2 + i)).collect();
    let v: Vec<VertexId> = (0..m).map(|j| VertexId(2 + m + j)).collect();
    let norm0 = |i: i64| -> usize {
        // 0-based index into u/v arrays from a 1-based suffix
        let mm = m as i64;
        ((((i - 1) % mm) + mm) % mm) as usize
    };

    // equator vertex at cyclic position t (0..2m)
    let equator_vertex = |t: usize| -> VertexId {
        let t = t % (2 * m);
        if t % 2 == 0 {
            u[t / 2]
        } else {
            // v_{i+n+1} after u_i with i = (t-1)/2 + 1
            let i = (t - 1) / 2 + 1;
            v[norm0(i as i64 + n as i64 + 1)]
        }
    };

    let mut endpoints = Vec::with_capacity(4 * m);
    for t in 0..2 * m {
        endpoints.push((equator_vertex(t), equator_vertex(t + 1)));
    }
    for i in 0..m {
        endpoints.push((v_north, u[i]));
    }
    for j in 0..m {
        endpoints.push((v_south, v[j]));
    }

    let eq_edge = |t: usize| EdgeId(t % (2 * m));
    let north_spoke = |i1: usize| EdgeId(2 * m + i1 - 1); // i1 is 1-based
    let south_spoke = |j1: usize| EdgeId(3 * m + j1 - 1);

    // position of v_j on the equator
    let pos_v = |j1: usize| -> usize { (2 * (norm0(j1 as i64 + n as i64) ) + 1) % (2 * m) };
    // check: v_j sits after u_i with i = j + n (1-based), i.e. at 2(i-1)+1

    let mut rotation: Vec<Vec<EdgeEnd>> = vec![Vec::new(); 2 + 2 * m];
    // north pole sees the spokes in u-index order (counterclockwise around it)
    rotation[v_north.0] = (1..=m).map(|i| EdgeEnd::new(north_spoke(i), 0)).collect();
    // south pole sees the spokes clockwise in the plane: v_1 then descending
    rotation[v_south.0] = std::iter::once(1)
        .chain((2..=m).rev())
        .map(|j| EdgeEnd::new(south_spoke(j), 0))
        .collect();
    for i1 in 1..=m {
        // u_{i1} at position 2(i1-1): counterclockwise [forward, spoke, backward]
        let t = 2 * (i1 - 1);
        let fwd = EdgeEnd::new(eq_edge(t), 0);
        let back = EdgeEnd::new(eq_edge((t + 2 * m - 1) % (2 * m)), 1);
        let spoke = EdgeEnd::new(north_spoke(i1), 1);
        rotation[u[i1 - 1].0] = vec![fwd, spoke, back];
    }
    for j1 in 1..=m {
        // v_{j1}: counterclockwise [forward, backward, spoke] (spoke points outward)
        let t = pos_v(j1);
        let fwd = EdgeEnd::new(eq_edge(t), 0);
        let back = EdgeEnd::new(eq_edge((t + 2 * m - 1) % (2 * m)), 1);
        let spoke = EdgeEnd::new(south_spoke(j1), 1);
        rotation[v[j1 - 1].0] = vec![fwd, back, spoke];
    }

    let graph = PlanarGraph::new(2 + 2 * m, endpoints, rotation)?;
    graph.check_sphere()?;

    let equator = Cycle::new((0..2 * m).map(|t| (eq_edge(t), Dir::Fwd)).collect());
    graph.check_cycle(&equator)?;

    let mut north_cycles = Vec::with_capacity(m);
    let mut south_cycles = Vec::with_capacity(m);
    for i1 in 1..=m {
        // N_i = u_i -> v_{i+n+1} -> u_{i+1} -> v_N -> u_i
        let t = 2 * (i1 - 1);
        let c = Cycle::new(vec![
            (eq_edge(t), Dir::Fwd),
            (eq_edge(t + 1), Dir::Fwd),
            (north_spoke(norm0(i1 as i64 + 1) + 1), Dir::Rev),
            (north_spoke(i1), Dir::Fwd),
        ]);
        graph.check_cycle(&c)?;
        north_cycles.push(c);
        // S_i = v_i -> u_{i+n+1} -> v_{i+1} -> v_S -> v_i
        let t = pos_v(i1);
        let c = Cycle::new(vec![
            (eq_edge(t), Dir::Fwd),
            (eq_edge(t + 1), Dir::Fwd),
            (south_spoke(norm0(i1 as i64 + 1) + 1), Dir::Rev),
            (south_spoke(i1), Dir::Fwd),
        ]);
        graph.check_cycle(&c)?;
        south_cycles.push(c);
    }

    let plum = PlumGraph {
        n,
        graph,
        v_north,
        v_south,
        u,
        v,
        equator,
        north_cycles,
        south_cycles,
    };

    debug_assert_eq!(plum.graph.num_vertices(), 4 * n + 4);
    debug_assert_eq!(plum.graph.num_edges(), 8 * n + 4);
    Ok(plum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn rejects_n_zero() {
        assert!(matches!(build_plum_graph(0), Err(Error::InvalidN)));
    }

    #[test]
    fn cube_is_p3() {
        let p = build_plum_graph(1).unwrap();
        assert_eq!(p.graph().num_vertices(), 8);
        assert_eq!(p.graph().num_edges(), 12);
        assert_eq!(p.graph().faces().len(), 6);
        assert_eq!(p.equator().len(), 6);
        assert_eq!(p.graph().degree(p.north_pole()), 3);
        assert_eq!(p.graph().degree(p.south_pole()), 3);
    }

    #[test]
    fn pole_degrees_and_counts() {
        for n in 1..=6 {
            let p = build_plum_graph(n).unwrap();
            assert_eq!(p.graph().num_vertices(), 4 * n + 4);
            assert_eq!(p.graph().num_edges(), 8 * n + 4);
            assert_eq!(p.equator().len(), 4 * n + 2);
            assert_eq!(p.graph().degree(p.north_pole()), 2 * n + 1);
            assert_eq!(p.graph().degree(p.south_pole()), 2 * n + 1);
        }
    }

    #[test]
    fn equator_cyclic_order_is_u1_v_n2_u2() {
        for n in 1..=4 {
            let p = build_plum_graph(n).unwrap();
            let verts = p.graph().cycle_vertices(p.equator()).unwrap();
            for i in 1..=(2 * n + 1) as i64 {
                let t = 2 * (i as usize - 1);
                assert_eq!(verts[t], p.u(i));
                assert_eq!(verts[t + 1], p.v(i + n as i64 + 1));
            }
        }
    }

    #[test]
    fn region_cycles_are_the_faces() {
        for n in 1..=8 {
            let p = build_plum_graph(n).unwrap();
            let m = 2 * n + 1;
            let faces: HashSet<Cycle> = p
                .graph()
                .faces()
                .into_iter()
                .map(|f| {
                    Cycle::new(
                        f.into_iter()
                            .map(|ee| (ee.edge, if ee.end == 0 { Dir::Fwd } else { Dir::Rev }))
                            .collect(),
                    )
                    .canonical()
                })
                .collect();
            assert_eq!(faces.len(), 4 * n + 2);
            let regions: HashSet<Cycle> = p
                .region_ids()
                .map(|id| p.region_cycle(id).canonical())
                .collect();
            assert_eq!(regions.len(), 2 * m);
            assert_eq!(faces, regions);
        }
    }

    #[test]
    fn region_disjointness_matches_offset_criterion() {
        for n in 1..=8 {
            let p = build_plum_graph(n).unwrap();
            let m = (2 * n + 1) as i64;
            for i in 1..=m {
                for j in 1..=m {
                    let ni: HashSet<_> = p
                        .graph()
                        .cycle_vertices(p.north_cycle(i))
                        .unwrap()
                        .into_iter()
                        .collect();
                    let sj: HashSet<_> = p
                        .graph()
                        .cycle_vertices(p.south_cycle(j))
                        .unwrap()
                        .into_iter()
                        .collect();
                    assert_eq!(
                        ni.is_disjoint(&sj),
                        p.regions_disjoint(i, j),
                        "n={} i={} j={}",
                        n,
                        i,
                        j
                    );
                }
            }
        }
    }

    #[test]
    fn two_north_cycles_meet_at_the_pole() {
        let p = build_plum_graph(2).unwrap();
        for i in 1..=5i64 {
            for j in (i + 1)..=5 {
                let a: HashSet<_> = p
                    .graph()
                    .cycle_vertices(p.north_cycle(i))
                    .unwrap()
                    .into_iter()
                    .collect();
                let b: HashSet<_> = p
                    .graph()
                    .cycle_vertices(p.north_cycle(j))
                    .unwrap()
                    .into_iter()
                    .collect();
                assert!(a.intersection(&b).any(|&v| v == p.north_pole()));
            }
        }
    }

    #[test]
    fn cube_has_three_disjoint_cycle_pairs_of_squares() {
        let p = build_plum_graph(1).unwrap();
        let pairs = p.graph().disjoint_cycle_pairs();
        assert_eq!(pairs.len(), 3);
        for (a, b) in &pairs {
            assert_eq!(a.len(), 4);
            assert_eq!(b.len(), 4);
        }
    }

    #[test]
    fn cube_has_28_cycles_matching_oracle() {
        let p = build_plum_graph(1).unwrap();
        let cycles = p.graph().enumerate_cycles();
        assert_eq!(cycles.len(), 28);
        // independent oracle: connected 2-regular edge subsets
        assert_eq!(crate::testutil::cycle_count_oracle(p.graph()), 28);
        for c in &cycles {
            p.graph().check_cycle(c).unwrap();
        }
    }

    #[test]
    fn p5_disjoint_pairs_follow_offsets() {
        let p = build_plum_graph(2).unwrap();
        let pairs = p.graph().disjoint_cycle_pairs();
        // among region-cycle pairs, the disjoint (N_i, S_j) are exactly those
        // with offset outside {2, 3}
        let canon_n: Vec<Cycle> = (1..=5).map(|i| p.north_cycle(i).canonical()).collect();
        let canon_s: Vec<Cycle> = (1..=5).map(|j| p.south_cycle(j).canonical()).collect();
        for i in 1..=5i64 {
            for j in 1..=5i64 {
                let want = p.regions_disjoint(i, j);
                let got = pairs.iter().any(|(a, b)| {
                    let (a, b) = (a.canonical(), b.canonical());
                    (a == canon_n[i as usize - 1] && b == canon_s[j as usize - 1])
                        || (b == canon_n[i as usize - 1] && a == canon_s[j as usize - 1])
                });
                assert_eq!(got, want, "i={} j={}", i, j);
            }
        }
    }

    #[test]
    fn edge_region_membership_is_consistent() {
        for n in 1..=5 {
            let p = build_plum_graph(n).unwrap();
            for e in p.graph().edges() {
                let [r1, r2] = p.regions_of_edge(e);
                assert_ne!(r1, r2);
                for r in [r1, r2] {
                    assert!(p.region_cycle(r).contains_edge(e), "n={} e={:?} r={:?}", n, e, r);
                }
                // and no other region contains it
                let count = p
                    .region_ids()
                    .filter(|&id| p.region_cycle(id).contains_edge(e))
                    .count();
                assert_eq!(count, 2);
            }
        }
    }
}
