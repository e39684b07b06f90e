//! JSON file formats for graphs, diagrams, projections, and trees.
//!
//! The graph format is
//! `{"vertices":[..],"edges":[[id,a,b],..],"rotation":{"v":[[edge,end],..]}}`
//! with dense ids listed in order. The diagram format extends it with nodes,
//! arcs `[id,edge,seq]`, per-node rotation lists of arc-ends, and a
//! `crossings` array carrying `over`/`under` arc-end pairs; projections use
//! the same schema with the over/under fields absent. Writing is canonical
//! (struct field order, map keys sorted numerically, compact separators), so
//! files produced here round-trip bit-exactly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::diagram::{Arc, ArcEnd, ArcId, CrossingInfo, Diagram, Node, ProjNode, Projection, RawDiagram};
use crate::error::{Error, Result};
use crate::graph::{EdgeEnd, EdgeId, PlanarGraph, SpanningTree, VertexId};

// ---------------------------------------------------------------------------
// graphs
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphFile {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize, usize)>,
    pub rotation: BTreeMap<usize, Vec<(usize, u8)>>,
}

pub fn graph_to_file(g: &PlanarGraph) -> GraphFile {
    GraphFile {
        vertices: (0..g.num_vertices()).collect(),
        edges: g
            .edges()
            .map(|e| {
                let (a, b) = g.endpoints(e);
                (e.0, a.0, b.0)
            })
            .collect(),
        rotation: g
            .vertices()
            .map(|v| {
                let ends = g.rotation_at(v).iter().map(|ee| (ee.edge.0, ee.end)).collect();
                (v.0, ends)
            })
            .collect(),
    }
}

pub fn graph_from_file(f: &GraphFile) -> Result<PlanarGraph> {
    for (i, &v) in f.vertices.iter().enumerate() {
        if v != i {
            return Err(Error::InvalidGraph("vertex ids must be dense and in order".into()));
        }
    }
    let mut endpoints = Vec::with_capacity(f.edges.len());
    for (i, &(id, a, b)) in f.edges.iter().enumerate() {
        if id != i {
            return Err(Error::InvalidGraph("edge ids must be dense and in order".into()));
        }
        endpoints.push((VertexId(a), VertexId(b)));
    }
    let mut rotation = vec![Vec::new(); f.vertices.len()];
    for (&v, ends) in &f.rotation {
        if v >= f.vertices.len() {
            return Err(Error::InvalidGraph(format!("rotation names unknown vertex {}", v)));
        }
        rotation[v] = ends.iter().map(|&(e, end)| EdgeEnd::new(EdgeId(e), end)).collect();
    }
    PlanarGraph::new(f.vertices.len(), endpoints, rotation)
}

pub fn graph_to_json(g: &PlanarGraph) -> String {
    serde_json::to_string(&graph_to_file(g)).expect("serializable")
}

pub fn graph_from_json(s: &str) -> Result<PlanarGraph> {
    graph_from_file(&serde_json::from_str(s)?)
}

// ---------------------------------------------------------------------------
// diagrams and projections
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct NodeEntry {
    pub id: usize,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CrossingEntry {
    pub id: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub over: Option<[(usize, u8); 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub under: Option<[(usize, u8); 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DiagramFile {
    pub graph: GraphFile,
    pub nodes: Vec<NodeEntry>,
    pub arcs: Vec<(usize, usize, usize)>,
    pub rotation: BTreeMap<usize, Vec<(usize, u8)>>,
    pub crossings: Vec<CrossingEntry>,
}

fn arc_end_pair(pair: &[ArcEnd; 2]) -> [(usize, u8); 2] {
    [(pair[0].arc.0, pair[0].end), (pair[1].arc.0, pair[1].end)]
}

pub fn diagram_to_file(d: &Diagram) -> DiagramFile {
    let nodes = d
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, n)| match n {
            Node::Vertex(v) => NodeEntry { id: i, kind: "vertex".into(), vertex: Some(v.0) },
            Node::Crossing(_) => NodeEntry { id: i, kind: "crossing".into(), vertex: None },
        })
        .collect();
    let crossings = d
        .nodes()
        .iter()
        .enumerate()
        .filter_map(|(i, n)| match n {
            Node::Crossing(info) => Some(CrossingEntry {
                id: i,
                over: Some(arc_end_pair(&info.over)),
                under: Some(arc_end_pair(&info.under)),
            }),
            Node::Vertex(_) => None,
        })
        .collect();
    DiagramFile {
        graph: graph_to_file(d.graph()),
        nodes,
        arcs: d.arcs().iter().enumerate().map(|(i, a)| (i, a.edge.0, a.seq)).collect(),
        rotation: d
            .rotations()
            .iter()
            .enumerate()
            .map(|(n, rot)| (n, rot.iter().map(|ae| (ae.arc.0, ae.end)).collect()))
            .collect(),
        crossings,
    }
}

/// Raw (unvalidated) diagram data from a file; validate to obtain a
/// [`Diagram`] or inspect the violations.
pub fn raw_diagram_from_file(f: &DiagramFile) -> Result<RawDiagram> {
    let graph = graph_from_file(&f.graph)?;
    let mut arcs = Vec::with_capacity(f.arcs.len());
    for (i, &(id, edge, seq)) in f.arcs.iter().enumerate() {
        if id != i {
            return Err(Error::InvalidDiagram("arc ids must be dense and in order".into()));
        }
        arcs.push(Arc { edge: EdgeId(edge), seq });
    }
    let ends = |pair: &[(usize, u8); 2]| -> [ArcEnd; 2] {
        [
            ArcEnd::new(ArcId(pair[0].0), pair[0].1),
            ArcEnd::new(ArcId(pair[1].0), pair[1].1),
        ]
    };
    let mut nodes = Vec::with_capacity(f.nodes.len());
    for (i, entry) in f.nodes.iter().enumerate() {
        if entry.id != i {
            return Err(Error::InvalidDiagram("node ids must be dense and in order".into()));
        }
        match entry.kind.as_str() {
            "vertex" => {
                let v = entry
                    .vertex
                    .ok_or_else(|| Error::InvalidDiagram(format!("vertex node {} without vertex", i)))?;
                nodes.push(Node::Vertex(VertexId(v)));
            }
            "crossing" => {
                let c = f
                    .crossings
                    .iter()
                    .find(|c| c.id == i)
                    .ok_or_else(|| Error::InvalidDiagram(format!("crossing node {} missing from crossings", i)))?;
                let (over, under) = match (&c.over, &c.under) {
                    (Some(o), Some(u)) => (ends(o), ends(u)),
                    _ => {
                        return Err(Error::InvalidDiagram(format!(
                            "crossing {} lacks over/under data (projection file?)",
                            i
                        )))
                    }
                };
                nodes.push(Node::Crossing(CrossingInfo::new(over, under)));
            }
            other => {
                return Err(Error::InvalidDiagram(format!("unknown node kind {:?}", other)))
            }
        }
    }
    let mut rotation = vec![Vec::new(); f.nodes.len()];
    for (&n, ends) in &f.rotation {
        if n >= f.nodes.len() {
            return Err(Error::InvalidDiagram(format!("rotation names unknown node {}", n)));
        }
        rotation[n] = ends.iter().map(|&(a, e)| ArcEnd::new(ArcId(a), e)).collect();
    }
    Ok(RawDiagram { graph, nodes, arcs, rotation })
}

pub fn diagram_from_file(f: &DiagramFile) -> Result<Diagram> {
    raw_diagram_from_file(f)?.validate().map_err(|v| {
        Error::InvalidDiagram(v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; "))
    })
}

pub fn diagram_to_json(d: &Diagram) -> String {
    serde_json::to_string(&diagram_to_file(d)).expect("serializable")
}

pub fn diagram_from_json(s: &str) -> Result<Diagram> {
    diagram_from_file(&serde_json::from_str(s)?)
}

pub fn projection_to_file(p: &Projection) -> DiagramFile {
    let nodes = p
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| match n {
            ProjNode::Vertex(v) => NodeEntry { id: i, kind: "vertex".into(), vertex: Some(v.0) },
            ProjNode::Crossing => NodeEntry { id: i, kind: "crossing".into(), vertex: None },
        })
        .collect();
    let crossings = p
        .nodes
        .iter()
        .enumerate()
        .filter_map(|(i, n)| match n {
            ProjNode::Crossing => Some(CrossingEntry { id: i, over: None, under: None }),
            ProjNode::Vertex(_) => None,
        })
        .collect();
    DiagramFile {
        graph: graph_to_file(&p.graph),
        nodes,
        arcs: p.arcs.iter().enumerate().map(|(i, a)| (i, a.edge.0, a.seq)).collect(),
        rotation: p
            .rotation
            .iter()
            .enumerate()
            .map(|(n, rot)| (n, rot.iter().map(|ae| (ae.arc.0, ae.end)).collect()))
            .collect(),
        crossings,
    }
}

pub fn projection_from_file(f: &DiagramFile) -> Result<Projection> {
    let graph = graph_from_file(&f.graph)?;
    let mut arcs = Vec::with_capacity(f.arcs.len());
    for (i, &(id, edge, seq)) in f.arcs.iter().enumerate() {
        if id != i {
            return Err(Error::InvalidDiagram("arc ids must be dense and in order".into()));
        }
        arcs.push(Arc { edge: EdgeId(edge), seq });
    }
    let mut nodes = Vec::with_capacity(f.nodes.len());
    for (i, entry) in f.nodes.iter().enumerate() {
        if entry.id != i {
            return Err(Error::InvalidDiagram("node ids must be dense and in order".into()));
        }
        match entry.kind.as_str() {
            "vertex" => nodes.push(ProjNode::Vertex(VertexId(entry.vertex.ok_or_else(
                || Error::InvalidDiagram(format!("vertex node {} without vertex", i)),
            )?))),
            "crossing" => nodes.push(ProjNode::Crossing),
            other => return Err(Error::InvalidDiagram(format!("unknown node kind {:?}", other))),
        }
    }
    let mut rotation = vec![Vec::new(); f.nodes.len()];
    for (&n, ends) in &f.rotation {
        if n >= f.nodes.len() {
            return Err(Error::InvalidDiagram(format!("rotation names unknown node {}", n)));
        }
        rotation[n] = ends.iter().map(|&(a, e)| ArcEnd::new(ArcId(a), e)).collect();
    }
    let p = Projection { graph, nodes, arcs, rotation };
    let violations = p.violations();
    if !violations.is_empty() {
        return Err(Error::InvalidDiagram(
            violations.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; "),
        ));
    }
    Ok(p)
}

pub fn projection_to_json(p: &Projection) -> String {
    serde_json::to_string(&projection_to_file(p)).expect("serializable")
}

pub fn projection_from_json(s: &str) -> Result<Projection> {
    projection_from_file(&serde_json::from_str(s)?)
}

// ---------------------------------------------------------------------------
// spanning trees
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TreeFile {
    pub edges: Vec<usize>,
    pub root: usize,
}

pub fn tree_to_file(t: &SpanningTree) -> TreeFile {
    TreeFile { edges: t.edges.iter().map(|e| e.0).collect(), root: t.root.0 }
}

pub fn tree_from_file(f: &TreeFile) -> SpanningTree {
    SpanningTree {
        edges: f.edges.iter().map(|&e| EdgeId(e)).collect(),
        root: VertexId(f.root),
    }
}

pub fn tree_to_json(t: &SpanningTree) -> String {
    serde_json::to_string(&tree_to_file(t)).expect("serializable")
}

pub fn tree_from_json(s: &str) -> Result<SpanningTree> {
    Ok(tree_from_file(&serde_json::from_str(s)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{cube_knotted_projection, standard_plum_diagram, trivial_plum_diagram};
    use crate::graph::spanning_tree_bfs;
    use crate::plum::build_plum_graph;
    use crate::testutil::{theta, triangle};
    use proptest::prelude::*;

    #[test]
    fn graph_roundtrip_is_lossless_and_bit_exact() {
        for g in [
            triangle(),
            theta(),
            build_plum_graph(1).unwrap().graph().clone(),
            build_plum_graph(3).unwrap().graph().clone(),
        ] {
            let s = graph_to_json(&g);
            let back = graph_from_json(&s).unwrap();
            assert_eq!(back, g);
            assert_eq!(graph_to_json(&back), s);
        }
    }

    #[test]
    fn diagram_roundtrip_is_lossless_and_bit_exact() {
        for n in 1..=3 {
            let p = build_plum_graph(n).unwrap();
            for d in [standard_plum_diagram(&p), trivial_plum_diagram(&p)] {
                let s = diagram_to_json(&d);
                let back = diagram_from_json(&s).unwrap();
                assert_eq!(back, d);
                assert_eq!(diagram_to_json(&back), s);
            }
        }
    }

    #[test]
    fn projection_roundtrip_is_lossless_and_bit_exact() {
        let (_, proj) = cube_knotted_projection();
        let s = projection_to_json(&proj);
        let back = projection_from_json(&s).unwrap();
        assert_eq!(back, proj);
        assert_eq!(projection_to_json(&back), s);
        // projection crossings carry no over/under data
        assert!(!s.contains("over"));
    }

    #[test]
    fn tree_roundtrip() {
        let p = build_plum_graph(2).unwrap();
        let t = spanning_tree_bfs(p.graph(), VertexId(3)).unwrap();
        let s = tree_to_json(&t);
        let back = tree_from_json(&s).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn projection_file_rejected_as_diagram() {
        let (_, proj) = cube_knotted_projection();
        let f = projection_to_file(&proj);
        assert!(matches!(diagram_from_file(&f), Err(Error::InvalidDiagram(_))));
    }

    #[test]
    fn non_dense_ids_rejected() {
        let g = triangle();
        let mut f = graph_to_file(&g);
        f.edges[1].0 = 7;
        assert!(graph_from_file(&f).is_err());
        let mut f2 = graph_to_file(&g);
        f2.vertices = vec![0, 2, 3];
        assert!(graph_from_file(&f2).is_err());
    }

    proptest! {
        /// Round-tripping any structurally valid multigraph through the file
        /// format is the identity.
        #[test]
        fn random_multigraph_roundtrip(
            nv in 1usize..6,
            raw_edges in proptest::collection::vec((0usize..6, 0usize..6), 0..10),
            seed in 0u64..1000,
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let endpoints: Vec<(VertexId, VertexId)> = raw_edges
                .iter()
                .map(|&(a, b)| (VertexId(a % nv), VertexId(b % nv)))
                .collect();
            let mut ends: Vec<Vec<EdgeEnd>> = vec![Vec::new(); nv];
            for (i, &(a, b)) in endpoints.iter().enumerate() {
                ends[a.0].push(EdgeEnd::new(EdgeId(i), 0));
                ends[b.0].push(EdgeEnd::new(EdgeId(i), 1));
            }
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            for rot in &mut ends {
                rot.shuffle(&mut rng);
            }
            let g = PlanarGraph::new(nv, endpoints, ends).unwrap();
            let back = graph_from_json(&graph_to_json(&g)).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
