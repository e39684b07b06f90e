//! Abstract planar multigraphs with rotation systems.
//!
//! A [`PlanarGraph`] is a multigraph (loops and parallel edges allowed) whose
//! combinatorial embedding is given by a rotation system: for every vertex,
//! the counterclockwise cyclic order of its incident edge-ends. Faces are the
//! orbits of the usual next-dart permutation, so a sphere embedding satisfies
//! `V - E + F = 2` on every connected component.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

/// Dense vertex identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

/// Dense edge identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

/// One of the two ends of an edge. `end` is 0 at `endpoints().0`, 1 at
/// `endpoints().1`; a loop carries both ends at the same vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeEnd {
    pub edge: EdgeId,
    pub end: u8,
}

impl EdgeEnd {
    pub fn new(edge: EdgeId, end: u8) -> Self {
        debug_assert!(end < 2);
        EdgeEnd { edge, end }
    }

    pub fn opposite(self) -> Self {
        EdgeEnd { edge: self.edge, end: 1 - self.end }
    }
}

/// Traversal direction of an edge relative to its reference orientation
/// (tail = endpoint 0, head = endpoint 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    Fwd,
    Rev,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Fwd => Dir::Rev,
            Dir::Rev => Dir::Fwd,
        }
    }
}

/// Abstract planar multigraph with a rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarGraph {
    /// endpoints[e] = (tail, head); reference orientation is tail -> head.
    endpoints: Vec<(VertexId, VertexId)>,
    /// rotation[v] = counterclockwise cyclic order of incident edge-ends.
    rotation: Vec<Vec<EdgeEnd>>,
}

impl PlanarGraph {
    /// Builds a graph from endpoint pairs and a rotation system and checks
    /// structural consistency: every edge-end appears exactly once, at the
    /// rotation of its own endpoint. The rotation system itself is trusted
    /// input; use [`PlanarGraph::check_sphere`] for the Euler test.
    pub fn new(
        num_vertices: usize,
        endpoints: Vec<(VertexId, VertexId)>,
        rotation: Vec<Vec<EdgeEnd>>,
    ) -> Result<Self> {
        if rotation.len() != num_vertices {
            return Err(Error::InvalidGraph(format!(
                "rotation given for {} vertices, expected {}",
                rotation.len(),
                num_vertices
            )));
        }
        for (e, &(a, b)) in endpoints.iter().enumerate() {
            for v in [a, b] {
                if v.0 >= num_vertices {
                    return Err(Error::InvalidGraph(format!(
                        "edge {} touches unknown vertex {}",
                        e, v.0
                    )));
                }
            }
        }
        let g = PlanarGraph { endpoints, rotation };
        let mut seen = HashSet::new();
        for (v, rot) in g.rotation.iter().enumerate() {
            for &ee in rot {
                if ee.edge.0 >= g.endpoints.len() || ee.end > 1 {
                    return Err(Error::InvalidGraph(format!(
                        "rotation at vertex {} names unknown edge-end {:?}",
                        v, ee
                    )));
                }
                if g.end_vertex(ee) != VertexId(v) {
                    return Err(Error::InvalidGraph(format!(
                        "edge-end {:?} listed at vertex {} but belongs to vertex {}",
                        ee,
                        v,
                        g.end_vertex(ee).0
                    )));
                }
                if !seen.insert(ee) {
                    return Err(Error::InvalidGraph(format!(
                        "edge-end {:?} appears twice in the rotation system",
                        ee
                    )));
                }
            }
        }
        if seen.len() != 2 * g.endpoints.len() {
            return Err(Error::InvalidGraph(format!(
                "rotation system lists {} edge-ends, expected {}",
                seen.len(),
                2 * g.endpoints.len()
            )));
        }
        Ok(g)
    }

    pub fn num_vertices(&self) -> usize {
        self.rotation.len()
    }

    pub fn num_edges(&self) -> usize {
        self.endpoints.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.num_vertices()).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.num_edges()).map(EdgeId)
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.endpoints[e.0]
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (a, b) = self.endpoints(e);
        a == b
    }

    /// Vertex carrying the given edge-end.
    pub fn end_vertex(&self, ee: EdgeEnd) -> VertexId {
        let (a, b) = self.endpoints(ee.edge);
        if ee.end == 0 {
            a
        } else {
            b
        }
    }

    /// The other endpoint of `e` as seen from `v`. For a loop this is `v`.
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn rotation_at(&self, v: VertexId) -> &[EdgeEnd] {
        &self.rotation[v.0]
    }

    /// Degree with loops counted twice (= rotation length).
    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v.0].len()
    }

    pub fn edges_at(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.rotation[v.0].iter().map(|ee| ee.edge)
    }

    pub fn edges_between(&self, a: VertexId, b: VertexId) -> Vec<EdgeId> {
        self.edges()
            .filter(|&e| {
                let (x, y) = self.endpoints(e);
                (x, y) == (a, b) || (x, y) == (b, a)
            })
            .collect()
    }

    pub fn num_components(&self) -> usize {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        let mut comps = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            comps += 1;
            let mut queue = VecDeque::from([VertexId(s)]);
            seen[s] = true;
            while let Some(v) = queue.pop_front() {
                for e in self.edges_at(v) {
                    let w = self.other_endpoint(e, v);
                    if !seen[w.0] {
                        seen[w.0] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.num_vertices() <= 1 || self.num_components() == 1
    }

    /// Faces of the rotation system. Each face is the cyclic list of darts
    /// (edge-end departed along) with the face on the left; the next dart
    /// after arriving at `w` via end `h` departs along the rotation successor
    /// of `h` at `w`.
    pub fn faces(&self) -> Vec<Vec<EdgeEnd>> {
        let mut next_in_rot: HashMap<EdgeEnd, EdgeEnd> = HashMap::new();
        for rot in &self.rotation {
            let k = rot.len();
            for i in 0..k {
                next_in_rot.insert(rot[i], rot[(i + 1) % k]);
            }
        }
        let mut visited: HashSet<EdgeEnd> = HashSet::new();
        let mut faces = Vec::new();
        for e in 0..self.num_edges() {
            for end in 0..2u8 {
                let start = EdgeEnd::new(EdgeId(e), end);
                if visited.contains(&start) {
                    continue;
                }
                let mut face = Vec::new();
                let mut dart = start;
                loop {
                    visited.insert(dart);
                    face.push(dart);
                    let arrive = dart.opposite();
                    dart = next_in_rot[&arrive];
                    if dart == start {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Euler check for a sphere embedding: `V - E + F = 2` per component,
    /// i.e. `V - E + F = 2 * #components` with orbit-counted faces.
    pub fn check_sphere(&self) -> Result<()> {
        let v = self.num_vertices() as i64;
        let e = self.num_edges() as i64;
        let f = self.faces().len() as i64;
        let c = self.num_components() as i64;
        if v - e + f != 2 * c {
            return Err(Error::InvalidGraph(format!(
                "Euler check failed: V={} E={} F={} components={}",
                v, e, f, c
            )));
        }
        Ok(())
    }
}

/// Oriented simple cycle: consecutive edges share the matching endpoint, the
/// walk is closed, and no vertex repeats.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    pub edges: Vec<(EdgeId, Dir)>,
}

impl Cycle {
    pub fn new(edges: Vec<(EdgeId, Dir)>) -> Self {
        Cycle { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.iter().any(|&(d, _)| d == e)
    }

    /// Traversal direction of `e` inside this cycle, if present.
    pub fn dir_of(&self, e: EdgeId) -> Option<Dir> {
        self.edges.iter().find(|&&(d, _)| d == e).map(|&(_, dir)| dir)
    }

    pub fn reversed(&self) -> Cycle {
        Cycle {
            edges: self.edges.iter().rev().map(|&(e, d)| (e, d.flip())).collect(),
        }
    }

    /// Canonical form: lexicographically least rotation of the smaller of the
    /// two orientations. Quotients out start point and orientation, which is
    /// what set comparisons need.
    pub fn canonical(&self) -> Cycle {
        let best_rotation = |c: &Cycle| -> Vec<(EdgeId, Dir)> {
            let k = c.edges.len();
            (0..k)
                .map(|s| {
                    let mut rot: Vec<(EdgeId, Dir)> = Vec::with_capacity(k);
                    rot.extend_from_slice(&c.edges[s..]);
                    rot.extend_from_slice(&c.edges[..s]);
                    rot
                })
                .min()
                .unwrap_or_default()
        };
        let a = best_rotation(self);
        let b = best_rotation(&self.reversed());
        Cycle { edges: a.min(b) }
    }
}

impl PlanarGraph {
    /// Vertex visited *before* traversing each cycle edge; `vertices[i]` is the
    /// start of `edges[i]`.
    pub fn cycle_vertices(&self, c: &Cycle) -> Result<Vec<VertexId>> {
        if c.is_empty() {
            return Err(Error::InvalidCycle("empty cycle".into()));
        }
        let start_of = |&(e, d): &(EdgeId, Dir)| -> (VertexId, VertexId) {
            let (a, b) = self.endpoints(e);
            match d {
                Dir::Fwd => (a, b),
                Dir::Rev => (b, a),
            }
        };
        let mut verts = Vec::with_capacity(c.len());
        for i in 0..c.len() {
            let (from, to) = start_of(&c.edges[i]);
            let (next_from, _) = start_of(&c.edges[(i + 1) % c.len()]);
            if to != next_from {
                return Err(Error::InvalidCycle(format!(
                    "edge {} ends at vertex {} but the next edge starts at {}",
                    c.edges[i].0 .0, to.0, next_from.0
                )));
            }
            verts.push(from);
        }
        let distinct: HashSet<_> = verts.iter().collect();
        if distinct.len() != verts.len() {
            return Err(Error::InvalidCycle("repeated vertex".into()));
        }
        Ok(verts)
    }

    pub fn check_cycle(&self, c: &Cycle) -> Result<()> {
        self.cycle_vertices(c).map(|_| ())
    }

    /// All simple cycles, each exactly once up to rotation and reflection.
    /// Length-1 cycles are loops, length-2 cycles are pairs of parallel edges.
    pub fn enumerate_cycles(&self) -> Vec<Cycle> {
        let mut found: HashSet<Cycle> = HashSet::new();
        let mut out = Vec::new();
        let n = self.num_vertices();
        for s in 0..n {
            let start = VertexId(s);
            // path state: edges walked and vertices visited (excluding returns to start)
            let mut path: Vec<(EdgeId, Dir)> = Vec::new();
            let mut visited: HashSet<VertexId> = HashSet::from([start]);
            self.cycle_dfs(start, start, &mut path, &mut visited, &mut |cyc: &Cycle| {
                let canon = cyc.canonical();
                if found.insert(canon.clone()) {
                    out.push(canon);
                }
            });
        }
        out.sort();
        out
    }

    fn cycle_dfs(
        &self,
        start: VertexId,
        cur: VertexId,
        path: &mut Vec<(EdgeId, Dir)>,
        visited: &mut HashSet<VertexId>,
        emit: &mut impl FnMut(&Cycle),
    ) {
        for &ee in self.rotation_at(cur) {
            let e = ee.edge;
            let (a, b) = self.endpoints(e);
            let (next, dir) = if self.is_loop(e) {
                // a loop only closes a cycle by itself at the start vertex
                if path.is_empty() && cur == start && ee.end == 0 {
                    emit(&Cycle::new(vec![(e, Dir::Fwd)]));
                }
                continue;
            } else if a == cur {
                (b, Dir::Fwd)
            } else {
                debug_assert_eq!(b, cur);
                (a, Dir::Rev)
            };
            if next == start {
                // closing edge: a 2-cycle must use two distinct edges
                if path.len() >= 2 || (path.len() == 1 && path[0].0 != e) {
                    let mut edges = path.clone();
                    edges.push((e, dir));
                    emit(&Cycle::new(edges));
                }
                continue;
            }
            // restrict to vertices above the start so each cycle is rooted at
            // its minimal vertex exactly once
            if next < start || visited.contains(&next) {
                continue;
            }
            path.push((e, dir));
            visited.insert(next);
            self.cycle_dfs(start, next, path, visited, emit);
            visited.remove(&next);
            path.pop();
        }
    }

    /// All unordered pairs of vertex-disjoint simple cycles.
    pub fn disjoint_cycle_pairs(&self) -> Vec<(Cycle, Cycle)> {
        let cycles = self.enumerate_cycles();
        let vsets: Vec<HashSet<VertexId>> = cycles
            .iter()
            .map(|c| self.cycle_vertices(c).expect("enumerated cycle is valid").into_iter().collect())
            .collect();
        let mut pairs = Vec::new();
        for i in 0..cycles.len() {
            for j in i + 1..cycles.len() {
                if vsets[i].is_disjoint(&vsets[j]) {
                    pairs.push((cycles[i].clone(), cycles[j].clone()));
                }
            }
        }
        pairs
    }
}

/// Spanning tree of a connected graph, with a distinguished root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub edges: Vec<EdgeId>,
    pub root: VertexId,
}

impl SpanningTree {
    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    /// Checks the tree against its graph: acyclic, connected, spanning.
    pub fn check(&self, g: &PlanarGraph) -> Result<()> {
        if self.root.0 >= g.num_vertices() {
            return Err(Error::InvalidTree(format!("unknown root {}", self.root.0)));
        }
        if self.edges.len() + 1 != g.num_vertices() {
            return Err(Error::InvalidTree(format!(
                "{} edges cannot span {} vertices",
                self.edges.len(),
                g.num_vertices()
            )));
        }
        let mut uf = UnionFind::new(g.num_vertices());
        for &e in &self.edges {
            if e.0 >= g.num_edges() {
                return Err(Error::InvalidTree(format!("unknown edge {}", e.0)));
            }
            let (a, b) = g.endpoints(e);
            if !uf.union(a.0, b.0) {
                return Err(Error::InvalidTree("tree edges contain a cycle".into()));
            }
        }
        Ok(())
    }

    /// Tree degree of a vertex.
    pub fn degree(&self, g: &PlanarGraph, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&e| {
                let (a, b) = g.endpoints(e);
                a == v || b == v
            })
            .count()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    /// Returns false if the two elements were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// BFS spanning tree from `root`, edges discovered in rotation order.
pub fn spanning_tree_bfs(g: &PlanarGraph, root: VertexId) -> Result<SpanningTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut seen = vec![false; g.num_vertices()];
    seen[root.0] = true;
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for e in g.edges_at(v) {
            let w = g.other_endpoint(e, v);
            if !seen[w.0] {
                seen[w.0] = true;
                edges.push(e);
                queue.push_back(w);
            }
        }
    }
    edges.sort();
    edges.dedup();
    Ok(SpanningTree { edges, root })
}

/// DFS spanning tree from `root`.
pub fn spanning_tree_dfs(g: &PlanarGraph, root: VertexId) -> Result<SpanningTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut seen = vec![false; g.num_vertices()];
    seen[root.0] = true;
    let mut edges = Vec::new();
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for e in g.edges_at(v) {
            let w = g.other_endpoint(e, v);
            if !seen[w.0] {
                seen[w.0] = true;
                edges.push(e);
                stack.push(v);
                stack.push(w);
                break;
            }
        }
    }
    edges.sort();
    edges.dedup();
    Ok(SpanningTree { edges, root })
}

/// All spanning trees (rooted at vertex 0), by backtracking over edges in id
/// order. Desk-scale only: errors once more than `cap` trees are found.
pub fn all_spanning_trees(g: &PlanarGraph, cap: usize) -> Result<Vec<SpanningTree>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let need = g.num_vertices() - 1;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    rec_trees(g, 0, need, &mut UnionFind::new(g.num_vertices()), &mut chosen, &mut out, cap)?;
    Ok(out)
}

fn rec_trees(
    g: &PlanarGraph,
    idx: usize,
    need: usize,
    uf: &mut UnionFind,
    chosen: &mut Vec<EdgeId>,
    out: &mut Vec<SpanningTree>,
    cap: usize,
) -> Result<()> {
    if chosen.len() == need {
        if out.len() >= cap {
            return Err(Error::CapExceeded(format!("more than {} spanning trees", cap)));
        }
        out.push(SpanningTree { edges: chosen.clone(), root: VertexId(0) });
        return Ok(());
    }
    if idx >= g.num_edges() || g.num_edges() - idx < need - chosen.len() {
        return Ok(());
    }
    let e = EdgeId(idx);
    let (a, b) = g.endpoints(e);
    // include e if it joins two components
    let mut with = UnionFind { parent: uf.parent.clone() };
    if with.union(a.0, b.0) {
        chosen.push(e);
        rec_trees(g, idx + 1, need, &mut with, chosen, out, cap)?;
        chosen.pop();
    }
    rec_trees(g, idx + 1, need, uf, chosen, out, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{cycle_count_oracle, theta, triangle};

    #[test]
    fn triangle_faces_and_euler() {
        let g = triangle();
        assert_eq!(g.faces().len(), 2);
        g.check_sphere().unwrap();
    }

    #[test]
    fn theta_faces_and_euler() {
        let g = theta();
        assert_eq!(g.faces().len(), 3);
        g.check_sphere().unwrap();
    }

    #[test]
    fn triangle_has_one_cycle() {
        let g = triangle();
        let cycles = g.enumerate_cycles();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles.len(), cycle_count_oracle(&g));
        assert_eq!(cycles[0].len(), 3);
        g.check_cycle(&cycles[0]).unwrap();
    }

    #[test]
    fn theta_has_three_cycles() {
        let g = theta();
        let cycles = g.enumerate_cycles();
        assert_eq!(cycles.len(), 3);
        assert_eq!(cycles.len(), cycle_count_oracle(&g));
        assert!(cycles.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn loop_graph_cycle() {
        // single vertex with one loop
        let endpoints = vec![(VertexId(0), VertexId(0))];
        let rotation = vec![vec![EdgeEnd::new(EdgeId(0), 0), EdgeEnd::new(EdgeId(0), 1)]];
        let g = PlanarGraph::new(1, endpoints, rotation).unwrap();
        g.check_sphere().unwrap();
        assert_eq!(g.enumerate_cycles().len(), 1);
    }

    #[test]
    fn triangle_has_no_disjoint_pairs() {
        assert!(triangle().disjoint_cycle_pairs().is_empty());
    }

    #[test]
    fn triangle_bfs_tree_is_a_path() {
        let g = triangle();
        let t = spanning_tree_bfs(&g, VertexId(0)).unwrap();
        t.check(&g).unwrap();
        assert_eq!(t.edges.len(), 2);
    }

    /// Kirchhoff matrix-tree oracle: the spanning-tree count is any cofactor
    /// of the Laplacian (loops ignored, parallel edges accumulated).
    fn kirchhoff_count(g: &PlanarGraph) -> u64 {
        use num_bigint::BigInt;
        let n = g.num_vertices();
        let mut lap = vec![vec![BigInt::from(0); n]; n];
        for e in g.edges() {
            let (a, b) = g.endpoints(e);
            if a == b {
                continue;
            }
            lap[a.0][a.0] += 1;
            lap[b.0][b.0] += 1;
            lap[a.0][b.0] -= 1;
            lap[b.0][a.0] -= 1;
        }
        let minor: Vec<Vec<BigInt>> = (1..n)
            .map(|i| (1..n).map(|j| lap[i][j].clone()).collect())
            .collect();
        let det = crate::matrix::determinant(minor);
        u64::try_from(det).expect("tree counts are nonnegative")
    }

    #[test]
    fn theta_has_three_spanning_trees() {
        let g = theta();
        let trees = all_spanning_trees(&g, 1000).unwrap();
        assert_eq!(trees.len(), 3);
        assert_eq!(kirchhoff_count(&g) as usize, trees.len());
        for t in &trees {
            t.check(&g).unwrap();
        }
    }

    #[test]
    fn spanning_tree_enumeration_matches_kirchhoff() {
        for g in [triangle(), theta(), crate::plum::build_plum_graph(1).unwrap().graph().clone()] {
            let trees = all_spanning_trees(&g, 1_000_000).unwrap();
            assert_eq!(trees.len() as u64, kirchhoff_count(&g));
        }
    }

    #[test]
    fn cycle_enumeration_matches_oracle_on_random_multigraphs() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..12 {
            let nv = rng.gen_range(2..=6usize);
            let ne = rng.gen_range(1..=12usize);
            let endpoints: Vec<(VertexId, VertexId)> = (0..ne)
                .map(|_| (VertexId(rng.gen_range(0..nv)), VertexId(rng.gen_range(0..nv))))
                .collect();
            let mut rotation: Vec<Vec<EdgeEnd>> = vec![Vec::new(); nv];
            for (i, &(a, b)) in endpoints.iter().enumerate() {
                rotation[a.0].push(EdgeEnd::new(EdgeId(i), 0));
                rotation[b.0].push(EdgeEnd::new(EdgeId(i), 1));
            }
            let g = PlanarGraph::new(nv, endpoints, rotation).unwrap();
            let cycles = g.enumerate_cycles();
            for c in &cycles {
                g.check_cycle(c).unwrap();
            }
            assert_eq!(cycles.len(), crate::testutil::cycle_count_oracle(&g));
        }
    }

    #[test]
    fn disconnected_graph_rejected_for_trees() {
        let endpoints = vec![];
        let rotation = vec![vec![], vec![]];
        let g = PlanarGraph::new(2, endpoints, rotation).unwrap();
        assert!(matches!(spanning_tree_bfs(&g, VertexId(0)), Err(Error::Disconnected)));
        assert!(matches!(all_spanning_trees(&g, 10), Err(Error::Disconnected)));
    }

    #[test]
    fn cycle_canonical_form_quotients_rotation_and_reflection() {
        let c = Cycle::new(vec![(EdgeId(1), Dir::Fwd), (EdgeId(2), Dir::Fwd), (EdgeId(0), Dir::Rev)]);
        let rotated = Cycle::new(vec![(EdgeId(2), Dir::Fwd), (EdgeId(0), Dir::Rev), (EdgeId(1), Dir::Fwd)]);
        assert_eq!(c.canonical(), rotated.canonical());
        assert_eq!(c.canonical(), c.reversed().canonical());
    }
}
