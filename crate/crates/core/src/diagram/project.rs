//! Projections: diagrams with over/under information erased, and the
//! enumeration of all diagrams resolving a projection.

use crate::diagram::{Arc, ArcEnd, CrossingInfo, Diagram, Node, NodeId, RawDiagram};
use crate::error::{Error, Result};
use crate::graph::{PlanarGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjNode {
    Vertex(VertexId),
    Crossing,
}

/// A diagram shadow: the same planar map with no over/under data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub graph: PlanarGraph,
    pub nodes: Vec<ProjNode>,
    pub arcs: Vec<Arc>,
    pub rotation: Vec<Vec<ArcEnd>>,
}

impl Projection {
    pub fn of(d: &Diagram) -> Projection {
        Projection {
            graph: d.graph().clone(),
            nodes: d
                .nodes()
                .iter()
                .map(|n| match n {
                    Node::Vertex(v) => ProjNode::Vertex(*v),
                    Node::Crossing(_) => ProjNode::Crossing,
                })
                .collect(),
            arcs: d.arcs().to_vec(),
            rotation: d.rotations().to_vec(),
        }
    }

    pub fn crossing_nodes(&self) -> Vec<NodeId> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, n)| matches!(n, ProjNode::Crossing))
            .map(|(i, _)| NodeId(i))
            .collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossing_nodes().len()
    }

    /// One resolved diagram: crossing `j` (in sorted node order) takes the
    /// over pair at slots {bit_j, bit_j + 2} of its rotation.
    fn resolve(&self, code: u64) -> Result<Diagram> {
        let crossings = self.crossing_nodes();
        let nodes = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, n)| match n {
                ProjNode::Vertex(v) => Node::Vertex(*v),
                ProjNode::Crossing => {
                    let j = crossings.iter().position(|c| c.0 == i).unwrap();
                    let bit = ((code >> j) & 1) as usize;
                    let rot = &self.rotation[i];
                    Node::Crossing(CrossingInfo::new(
                        [rot[bit], rot[bit + 2]],
                        [rot[(bit + 1) % 4], rot[(bit + 3) % 4]],
                    ))
                }
            })
            .collect();
        Diagram::new(self.graph.clone(), nodes, self.arcs.clone(), self.rotation.clone())
    }
}

/// All 2^c diagrams resolving a projection, in binary-counter order over the
/// sorted crossing ids. Errors if the projection has more than `cap`
/// crossings.
pub fn resolutions(p: &Projection, cap: usize) -> Result<Vec<Diagram>> {
    let c = p.crossing_count();
    if c > cap {
        return Err(Error::CapExceeded(format!(
            "projection has {} crossings, resolution cap is {}",
            c, cap
        )));
    }
    (0..(1u64 << c)).map(|code| p.resolve(code)).collect()
}

impl Projection {
    /// Structural validity of the underlying planar map (same checks as a
    /// diagram minus the over/under clauses): realized by resolving all
    /// crossings arbitrarily and validating the result.
    pub fn violations(&self) -> Vec<super::Violation> {
        match self.resolve(0) {
            Ok(_) => Vec::new(),
            Err(_) => {
                // rebuild the raw diagram to extract the precise violations
                let crossings = self.crossing_nodes();
                let nodes = self
                    .nodes
                    .iter()
                    .enumerate()
                    .map(|(i, n)| match n {
                        ProjNode::Vertex(v) => Node::Vertex(*v),
                        ProjNode::Crossing => {
                            let _ = crossings.iter().position(|c| c.0 == i);
                            let rot = &self.rotation[i];
                            if rot.len() == 4 {
                                Node::Crossing(CrossingInfo::new([rot[0], rot[2]], [rot[1], rot[3]]))
                            } else {
                                Node::Crossing(CrossingInfo::new(
                                    [ArcEnd::new(crate::diagram::ArcId(0), 0); 2],
                                    [ArcEnd::new(crate::diagram::ArcId(0), 1); 2],
                                ))
                            }
                        }
                    })
                    .collect();
                RawDiagram {
                    graph: self.graph.clone(),
                    nodes,
                    arcs: self.arcs.clone(),
                    rotation: self.rotation.clone(),
                }
                .violations()
            }
        }
    }
}
