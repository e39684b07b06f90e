//! Diagrams of spatial graph embeddings as combinatorial planar maps.
//!
//! A [`Diagram`] lies over an abstract [`PlanarGraph`]: its nodes are the
//! graph vertices plus 4-valent crossings, its arcs are the pieces of edges
//! between consecutive nodes, and every node carries the counterclockwise
//! rotation of its incident arc-ends. Crossings record which opposite slot
//! pair passes over. Diagrams are immutable; edits return new values.
//!
//! Crossing sign convention (used by everything downstream): a crossing
//! between two oriented strands is +1 exactly when the under-strand direction
//! is the over-strand direction rotated +90 degrees counterclockwise.

mod build;
mod project;
mod restrict;

pub use build::{
    closed_two_braid, cube_knotted_projection, kink_diagram, standard_plum_diagram,
    theta_clasp_diagram, trivial_plum_diagram,
};
pub use project::{resolutions, ProjNode, Projection};
pub use restrict::restrict_to_cycles;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, PlanarGraph, VertexId};

/// Dense arc identifier within one diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcId(pub usize);

/// Dense node identifier within one diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub usize);

/// Identifier of a crossing: the id of its node. Stable under
/// `crossing_change` and `mirror`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingId(pub usize);

impl CrossingId {
    pub fn node(self) -> NodeId {
        NodeId(self.0)
    }
}

/// One of the two ends of an arc; end 0 points toward the tail of the
/// underlying edge chain, end 1 toward the head.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcEnd {
    pub arc: ArcId,
    pub end: u8,
}

impl ArcEnd {
    pub fn new(arc: ArcId, end: u8) -> Self {
        debug_assert!(end < 2);
        ArcEnd { arc, end }
    }

    pub fn opposite(self) -> Self {
        ArcEnd { arc: self.arc, end: 1 - self.end }
    }
}

/// Piece of an abstract edge between consecutive diagram nodes. Arcs of one
/// edge are ordered by `seq` along the edge's reference orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub edge: EdgeId,
    pub seq: usize,
}

/// Over/under data of a crossing: the two strand pairs, each pair sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingInfo {
    pub over: [ArcEnd; 2],
    pub under: [ArcEnd; 2],
}

impl CrossingInfo {
    pub fn new(mut over: [ArcEnd; 2], mut under: [ArcEnd; 2]) -> Self {
        over.sort();
        under.sort();
        CrossingInfo { over, under }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Vertex(VertexId),
    Crossing(CrossingInfo),
}

impl Node {
    pub fn is_crossing(&self) -> bool {
        matches!(self, Node::Crossing(_))
    }
}

/// A diagram invariant violation; `RawDiagram::violations` returns these as
/// data rather than failing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    UnknownIndex(String),
    EndPlacement(String),
    VertexCoverage(String),
    NodeDegree(String),
    BrokenChain(String),
    NonAlternatingCrossing(String),
    CrossingStrands(String),
    EulerMismatch(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownIndex(s) => write!(f, "unknown index: {}", s),
            Violation::EndPlacement(s) => write!(f, "arc-end placement: {}", s),
            Violation::VertexCoverage(s) => write!(f, "vertex coverage: {}", s),
            Violation::NodeDegree(s) => write!(f, "node degree: {}", s),
            Violation::BrokenChain(s) => write!(f, "broken edge chain: {}", s),
            Violation::NonAlternatingCrossing(s) => write!(f, "non-alternating crossing: {}", s),
            Violation::CrossingStrands(s) => write!(f, "crossing strands: {}", s),
            Violation::EulerMismatch(s) => write!(f, "Euler mismatch: {}", s),
        }
    }
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::UnknownIndex(_) => "unknown-index",
            Violation::EndPlacement(_) => "end-placement",
            Violation::VertexCoverage(_) => "vertex-coverage",
            Violation::NodeDegree(_) => "node-degree",
            Violation::BrokenChain(_) => "broken-chain",
            Violation::NonAlternatingCrossing(_) => "non-alternating-crossing",
            Violation::CrossingStrands(_) => "crossing-strands",
            Violation::EulerMismatch(_) => "euler-mismatch",
        }
    }
}

/// Unvalidated diagram data, as loaded from a file or assembled by hand.
#[derive(Debug, Clone)]
pub struct RawDiagram {
    pub graph: PlanarGraph,
    pub nodes: Vec<Node>,
    pub arcs: Vec<Arc>,
    pub rotation: Vec<Vec<ArcEnd>>,
}

/// Validated immutable diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    graph: PlanarGraph,
    nodes: Vec<Node>,
    arcs: Vec<Arc>,
    rotation: Vec<Vec<ArcEnd>>,
    /// arc -> (node, slot) of each end
    end_pos: Vec<[(NodeId, usize); 2]>,
    /// edge -> its arcs ordered by seq
    chains: Vec<Vec<ArcId>>,
}

impl RawDiagram {
    /// Checks every diagram invariant and reports the failures as data. An
    /// empty list means the data forms a valid diagram.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();

        if self.rotation.len() != self.nodes.len() {
            out.push(Violation::UnknownIndex(format!(
                "{} rotation lists for {} nodes",
                self.rotation.len(),
                self.nodes.len()
            )));
            return out;
        }
        for (i, a) in self.arcs.iter().enumerate() {
            if a.edge.0 >= self.graph.num_edges() {
                out.push(Violation::UnknownIndex(format!(
                    "arc {} references unknown edge {}",
                    i, a.edge.0
                )));
                return out;
            }
        }
        for node in &self.nodes {
            if let Node::Vertex(v) = node {
                if v.0 >= self.graph.num_vertices() {
                    out.push(Violation::UnknownIndex(format!("unknown vertex {}", v.0)));
                    return out;
                }
            }
        }

        // each graph vertex is represented by exactly one node
        let mut vertex_nodes: HashMap<VertexId, usize> = HashMap::new();
        for node in &self.nodes {
            if let Node::Vertex(v) = node {
                *vertex_nodes.entry(*v).or_insert(0) += 1;
            }
        }
        for v in self.graph.vertices() {
            match vertex_nodes.get(&v) {
                Some(1) => {}
                Some(k) => out.push(Violation::VertexCoverage(format!(
                    "vertex {} has {} nodes",
                    v.0, k
                ))),
                None => out.push(Violation::VertexCoverage(format!(
                    "vertex {} has no node",
                    v.0
                ))),
            }
        }

        // every arc-end appears exactly once in the rotation system
        let mut end_pos: HashMap<ArcEnd, (NodeId, usize)> = HashMap::new();
        let mut duplicates = false;
        for (n, rot) in self.rotation.iter().enumerate() {
            for (slot, &ae) in rot.iter().enumerate() {
                if ae.arc.0 >= self.arcs.len() || ae.end > 1 {
                    out.push(Violation::UnknownIndex(format!(
                        "rotation at node {} names unknown arc-end {:?}",
                        n, ae
                    )));
                    return out;
                }
                if end_pos.insert(ae, (NodeId(n), slot)).is_some() {
                    out.push(Violation::EndPlacement(format!(
                        "arc-end {:?} appears twice",
                        ae
                    )));
                    duplicates = true;
                }
            }
        }
        if end_pos.len() != 2 * self.arcs.len() || duplicates {
            if end_pos.len() != 2 * self.arcs.len() {
                out.push(Violation::EndPlacement(format!(
                    "{} arc-ends placed, expected {}",
                    end_pos.len(),
                    2 * self.arcs.len()
                )));
            }
            return out;
        }

        // node degrees
        for (n, node) in self.nodes.iter().enumerate() {
            let deg = self.rotation[n].len();
            match node {
                Node::Vertex(v) => {
                    if deg != self.graph.degree(*v) {
                        out.push(Violation::NodeDegree(format!(
                            "vertex node {} has {} arc-ends, vertex {} has degree {}",
                            n,
                            deg,
                            v.0,
                            self.graph.degree(*v)
                        )));
                    }
                }
                Node::Crossing(_) => {
                    if deg != 4 {
                        out.push(Violation::NodeDegree(format!(
                            "crossing node {} has degree {}",
                            n, deg
                        )));
                    }
                }
            }
        }
        if !out.is_empty() {
            return out;
        }

        let vertex_node: HashMap<VertexId, NodeId> = self
            .nodes
            .iter()
            .enumerate()
            .filter_map(|(i, nd)| match nd {
                Node::Vertex(v) => Some((*v, NodeId(i))),
                _ => None,
            })
            .collect();

        // edge chains: smoothing all crossings must reconstruct the abstract
        // graph exactly (labelled incidence structure)
        let mut chains: Vec<Vec<ArcId>> = vec![Vec::new(); self.graph.num_edges()];
        for (i, a) in self.arcs.iter().enumerate() {
            chains[a.edge.0].push(ArcId(i));
        }
        for e in self.graph.edges() {
            let chain = &mut chains[e.0];
            chain.sort_by_key(|&a| self.arcs[a.0].seq);
            if chain.is_empty() {
                out.push(Violation::BrokenChain(format!("edge {} has no arcs", e.0)));
                continue;
            }
            for (k, &a) in chain.iter().enumerate() {
                if self.arcs[a.0].seq != k {
                    out.push(Violation::BrokenChain(format!(
                        "edge {} arcs are not numbered 0..{}",
                        e.0,
                        chain.len()
                    )));
                    break;
                }
            }
            let (tail, head) = self.graph.endpoints(e);
            let first = ArcEnd::new(chain[0], 0);
            let last = ArcEnd::new(*chain.last().unwrap(), 1);
            if end_pos[&first].0 != vertex_node[&tail] {
                out.push(Violation::BrokenChain(format!(
                    "edge {} does not start at vertex {}",
                    e.0, tail.0
                )));
            }
            if end_pos[&last].0 != vertex_node[&head] {
                out.push(Violation::BrokenChain(format!(
                    "edge {} does not end at vertex {}",
                    e.0, head.0
                )));
            }
            for w in chain.windows(2) {
                let out_end = ArcEnd::new(w[0], 1);
                let in_end = ArcEnd::new(w[1], 0);
                let (n1, s1) = end_pos[&out_end];
                let (n2, s2) = end_pos[&in_end];
                if n1 != n2 {
                    out.push(Violation::BrokenChain(format!(
                        "edge {}: consecutive arcs {} and {} meet at different nodes",
                        e.0, w[0].0, w[1].0
                    )));
                    continue;
                }
                if !self.nodes[n1.0].is_crossing() {
                    out.push(Violation::BrokenChain(format!(
                        "edge {}: interior junction at non-crossing node {}",
                        e.0, n1.0
                    )));
                    continue;
                }
                if (s1 + 2) % 4 != s2 {
                    out.push(Violation::BrokenChain(format!(
                        "edge {}: strand does not pass straight through crossing node {}",
                        e.0, n1.0
                    )));
                }
            }
        }

        // crossings: over/under are the two strand pairs, each in opposite slots
        for (n, node) in self.nodes.iter().enumerate() {
            if let Node::Crossing(info) = node {
                let rot = &self.rotation[n];
                let mut named: Vec<ArcEnd> = info.over.iter().chain(info.under.iter()).copied().collect();
                named.sort();
                let mut here: Vec<ArcEnd> = rot.clone();
                here.sort();
                if named != here {
                    out.push(Violation::CrossingStrands(format!(
                        "crossing node {}: over/under do not name its four arc-ends",
                        n
                    )));
                    continue;
                }
                let slot = |ae: ArcEnd| rot.iter().position(|&x| x == ae).unwrap();
                let (o0, o1) = (slot(info.over[0]), slot(info.over[1]));
                if (o0 + 2) % 4 != o1 && (o1 + 2) % 4 != o0 {
                    out.push(Violation::NonAlternatingCrossing(format!(
                        "crossing node {}: over pair occupies adjacent slots",
                        n
                    )));
                }
            }
        }
        if !out.is_empty() {
            return out;
        }

        // Euler check on the diagram planar map: V' - E' + F' = 2 per component
        let v = self.nodes.len() as i64;
        let e = self.arcs.len() as i64;
        let f = faces_of(&self.rotation, &end_pos) as i64;
        let c = map_components(self.nodes.len(), &self.rotation, &end_pos) as i64;
        if v - e + f != 2 * c {
            out.push(Violation::EulerMismatch(format!(
                "V'={} E'={} F'={} components={}",
                v, e, f, c
            )));
        }
        out
    }

    /// Validates and freezes into a [`Diagram`].
    pub fn validate(self) -> std::result::Result<Diagram, Vec<Violation>> {
        let violations = self.violations();
        if !violations.is_empty() {
            return Err(violations);
        }
        let mut end_pos = vec![[(NodeId(0), 0); 2]; self.arcs.len()];
        for (n, rot) in self.rotation.iter().enumerate() {
            for (slot, &ae) in rot.iter().enumerate() {
                end_pos[ae.arc.0][ae.end as usize] = (NodeId(n), slot);
            }
        }
        let mut chains: Vec<Vec<ArcId>> = vec![Vec::new(); self.graph.num_edges()];
        for (i, a) in self.arcs.iter().enumerate() {
            chains[a.edge.0].push(ArcId(i));
        }
        for chain in &mut chains {
            chain.sort_by_key(|&a| self.arcs[a.0].seq);
        }
        Ok(Diagram {
            graph: self.graph,
            nodes: self.nodes,
            arcs: self.arcs,
            rotation: self.rotation,
            end_pos,
            chains,
        })
    }
}

/// Number of faces of a planar map given per-node rotations.
fn faces_of(rotation: &[Vec<ArcEnd>], end_pos: &HashMap<ArcEnd, (NodeId, usize)>) -> usize {
    let mut visited: HashSet<ArcEnd> = HashSet::new();
    let mut faces = 0;
    for rot in rotation {
        for &start in rot {
            // darts are "departing" arc-ends
            if visited.contains(&start) {
                continue;
            }
            faces += 1;
            let mut dart = start;
            loop {
                visited.insert(dart);
                let arrive = dart.opposite();
                let (n, s) = end_pos[&arrive];
                let rot = &rotation[n.0];
                dart = rot[(s + 1) % rot.len()];
                if dart == start {
                    break;
                }
            }
        }
    }
    faces
}

fn map_components(
    num_nodes: usize,
    rotation: &[Vec<ArcEnd>],
    end_pos: &HashMap<ArcEnd, (NodeId, usize)>,
) -> usize {
    let mut seen = vec![false; num_nodes];
    let mut comps = 0;
    for s in 0..num_nodes {
        if seen[s] {
            continue;
        }
        comps += 1;
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(n) = queue.pop_front() {
            for &ae in &rotation[n] {
                let (m, _) = end_pos[&ae.opposite()];
                if !seen[m.0] {
                    seen[m.0] = true;
                    queue.push_back(m.0);
                }
            }
        }
    }
    comps
}

impl Diagram {
    pub fn new(
        graph: PlanarGraph,
        nodes: Vec<Node>,
        arcs: Vec<Arc>,
        rotation: Vec<Vec<ArcEnd>>,
    ) -> Result<Self> {
        RawDiagram { graph, nodes, arcs, rotation }.validate().map_err(|v| {
            Error::InvalidDiagram(
                v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; "),
            )
        })
    }

    pub fn graph(&self) -> &PlanarGraph {
        &self.graph
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn rotation_at(&self, n: NodeId) -> &[ArcEnd] {
        &self.rotation[n.0]
    }

    pub fn rotations(&self) -> &[Vec<ArcEnd>] {
        &self.rotation
    }

    /// (node, slot) carrying the given arc-end.
    pub fn end_location(&self, ae: ArcEnd) -> (NodeId, usize) {
        self.end_pos[ae.arc.0][ae.end as usize]
    }

    /// Arcs of an edge ordered along its reference orientation.
    pub fn chain(&self, e: EdgeId) -> &[ArcId] {
        &self.chains[e.0]
    }

    pub fn crossing_ids(&self) -> Vec<CrossingId> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, n)| n.is_crossing())
            .map(|(i, _)| CrossingId(i))
            .collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_crossing()).count()
    }

    pub fn crossing_info(&self, x: CrossingId) -> Result<&CrossingInfo> {
        match self.nodes.get(x.0) {
            Some(Node::Crossing(info)) => Ok(info),
            _ => Err(Error::UnknownCrossing(x.0)),
        }
    }

    /// The two edges whose strands meet at a crossing (equal for a
    /// self-crossing): (over edge, under edge).
    pub fn crossing_edges(&self, x: CrossingId) -> Result<(EdgeId, EdgeId)> {
        let info = self.crossing_info(x)?;
        Ok((
            self.arcs[info.over[0].arc.0].edge,
            self.arcs[info.under[0].arc.0].edge,
        ))
    }

    /// Swaps over and under at one crossing; an involution.
    pub fn crossing_change(&self, x: CrossingId) -> Result<Diagram> {
        let info = self.crossing_info(x)?;
        let mut nodes = self.nodes.clone();
        nodes[x.0] = Node::Crossing(CrossingInfo::new(info.under, info.over));
        Ok(Diagram {
            graph: self.graph.clone(),
            nodes,
            arcs: self.arcs.clone(),
            rotation: self.rotation.clone(),
            end_pos: self.end_pos.clone(),
            chains: self.chains.clone(),
        })
    }

    /// Swaps over and under at every crossing; linking numbers negate.
    pub fn mirror(&self) -> Diagram {
        let nodes = self
            .nodes
            .iter()
            .map(|n| match n {
                Node::Vertex(v) => Node::Vertex(*v),
                Node::Crossing(info) => Node::Crossing(CrossingInfo::new(info.under, info.over)),
            })
            .collect();
        Diagram {
            graph: self.graph.clone(),
            nodes,
            arcs: self.arcs.clone(),
            rotation: self.rotation.clone(),
            end_pos: self.end_pos.clone(),
            chains: self.chains.clone(),
        }
    }

    /// Re-checks all invariants (generator self-check; always empty for
    /// values produced by this crate).
    pub fn violations(&self) -> Vec<Violation> {
        RawDiagram {
            graph: self.graph.clone(),
            nodes: self.nodes.clone(),
            arcs: self.arcs.clone(),
            rotation: self.rotation.clone(),
        }
        .violations()
    }

    pub fn faces_count(&self) -> usize {
        let mut end_pos = HashMap::new();
        for (n, rot) in self.rotation.iter().enumerate() {
            for (slot, &ae) in rot.iter().enumerate() {
                end_pos.insert(ae, (NodeId(n), slot));
            }
        }
        faces_of(&self.rotation, &end_pos)
    }

    /// Forgets over/under information.
    pub fn projection(&self) -> Projection {
        Projection::of(self)
    }

    pub fn raw(&self) -> RawDiagram {
        RawDiagram {
            graph: self.graph.clone(),
            nodes: self.nodes.clone(),
            arcs: self.arcs.clone(),
            rotation: self.rotation.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plum::build_plum_graph;

    #[test]
    fn trivial_diagram_is_valid_and_crossing_free() {
        for n in 1..=4 {
            let p = build_plum_graph(n).unwrap();
            let d = trivial_plum_diagram(&p);
            assert_eq!(d.crossing_count(), 0);
            assert!(d.violations().is_empty());
        }
    }

    #[test]
    fn standard_diagram_has_2n_plus_1_crossings() {
        for n in 1..=5 {
            let p = build_plum_graph(n).unwrap();
            let d = standard_plum_diagram(&p);
            assert_eq!(d.crossing_count(), 2 * n + 1);
            assert!(d.violations().is_empty());
            // all crossings between pairs of equatorial edges
            for x in d.crossing_ids() {
                let (a, b) = d.crossing_edges(x).unwrap();
                assert!(a.0 < 4 * n + 2, "n={} over edge {:?} not equatorial", n, a);
                assert!(b.0 < 4 * n + 2, "n={} under edge {:?} not equatorial", n, b);
            }
        }
    }

    #[test]
    fn crossing_change_is_an_involution() {
        let p = build_plum_graph(2).unwrap();
        let d = standard_plum_diagram(&p);
        for x in d.crossing_ids() {
            let once = d.crossing_change(x).unwrap();
            assert_ne!(once, d);
            assert_eq!(once.crossing_count(), d.crossing_count());
            let twice = once.crossing_change(x).unwrap();
            assert_eq!(twice, d);
        }
    }

    #[test]
    fn mirror_is_an_involution_and_fixes_crossing_free_diagrams() {
        let p = build_plum_graph(1).unwrap();
        let d = standard_plum_diagram(&p);
        assert_eq!(d.mirror().mirror(), d);
        let t = trivial_plum_diagram(&p);
        assert_eq!(t.mirror(), t);
    }

    #[test]
    fn unknown_crossing_rejected() {
        let p = build_plum_graph(1).unwrap();
        let d = trivial_plum_diagram(&p);
        assert!(matches!(
            d.crossing_change(CrossingId(999)),
            Err(Error::UnknownCrossing(999))
        ));
    }

    #[test]
    fn non_alternating_crossing_is_reported() {
        let p = build_plum_graph(1).unwrap();
        let d = standard_plum_diagram(&p);
        let mut raw = d.raw();
        // corrupt one crossing: name an adjacent slot pair as the over pair
        let x = d.crossing_ids()[0];
        let rot = raw.rotation[x.0].clone();
        if let Node::Crossing(info) = &mut raw.nodes[x.0] {
            info.over = [rot[0], rot[1]];
            info.under = [rot[2], rot[3]];
            let mut o = info.over;
            o.sort();
            info.over = o;
            let mut u = info.under;
            u.sort();
            info.under = u;
        }
        let violations = raw.violations();
        assert!(
            violations
                .iter()
                .any(|v| v.kind() == "non-alternating-crossing"),
            "got {:?}",
            violations
        );
    }

    #[test]
    fn braid_fixture_is_valid() {
        for m in 1..=6 {
            let (_, d, cycles) = closed_two_braid(m);
            assert!(d.violations().is_empty(), "m={}", m);
            assert_eq!(d.crossing_count(), m);
            assert_eq!(cycles.len(), if m % 2 == 1 { 1 } else { 2 });
        }
    }

    #[test]
    fn kink_and_clasp_fixtures_are_valid() {
        let (_, d) = kink_diagram(true);
        assert!(d.violations().is_empty());
        assert_eq!(d.crossing_count(), 1);
        let (_, d) = theta_clasp_diagram();
        assert!(d.violations().is_empty());
        assert_eq!(d.crossing_count(), 2);
    }
}
