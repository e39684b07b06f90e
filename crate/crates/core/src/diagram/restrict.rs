//! Sub-diagram extraction: restricting a diagram to one or two disjoint
//! cycles of its graph yields a knot or 2-component link diagram.

use std::collections::{HashMap, HashSet};

use crate::diagram::{ArcEnd, ArcId, CrossingId, Diagram, Node};
use crate::error::{Error, Result};
use crate::graph::{Cycle, Dir, VertexId};
use crate::link::{LinkCrossing, LinkDiagram, SegEnd};

/// Restricts `d` to the given vertex-disjoint simple cycles (one or two).
/// Arcs off the cycles are deleted, degree-2 graph vertices are smoothed,
/// crossings that lost a strand are smoothed; component `i` of the result is
/// cycle `i`, oriented by the cycle's edge directions.
pub fn restrict_to_cycles(d: &Diagram, cycles: &[Cycle]) -> Result<LinkDiagram> {
    if cycles.is_empty() || cycles.len() > 2 {
        return Err(Error::Precondition(format!(
            "restriction takes 1 or 2 cycles, got {}",
            cycles.len()
        )));
    }
    let mut all_vertices: HashSet<VertexId> = HashSet::new();
    for c in cycles {
        for v in d.graph().cycle_vertices(c)? {
            if !all_vertices.insert(v) {
                return Err(Error::NotDisjoint);
            }
        }
    }

    // retained edges
    let mut retained: HashSet<usize> = HashSet::new();
    for c in cycles {
        for &(e, _) in &c.edges {
            retained.insert(e.0);
        }
    }

    // crossings kept: both strand edges retained
    let mut kept: HashSet<usize> = HashSet::new();
    for x in d.crossing_ids() {
        let (a, b) = d.crossing_edges(x)?;
        if retained.contains(&a.0) && retained.contains(&b.0) {
            kept.insert(x.0);
        }
    }

    let mut seg_component: Vec<usize> = Vec::new();
    let mut free_loops: Vec<usize> = Vec::new();
    // per kept crossing: original rotation slot -> new segment end
    let mut slot_fill: HashMap<(usize, usize), SegEnd> = HashMap::new();

    for (comp, cycle) in cycles.iter().enumerate() {
        // the full arc walk of this component, each arc with its travel direction
        let mut walk: Vec<(ArcId, Dir)> = Vec::new();
        for &(e, dir) in &cycle.edges {
            let chain = d.chain(e);
            match dir {
                Dir::Fwd => walk.extend(chain.iter().map(|&a| (a, Dir::Fwd))),
                Dir::Rev => walk.extend(chain.iter().rev().map(|&a| (a, Dir::Rev))),
            }
        }
        // junction i sits between walk[i] and walk[i+1]
        let junction_node = |i: usize| {
            let (arc, dir) = walk[i];
            let ae = match dir {
                Dir::Fwd => ArcEnd::new(arc, 1),
                Dir::Rev => ArcEnd::new(arc, 0),
            };
            d.end_location(ae)
        };
        let cuts: Vec<usize> = (0..walk.len())
            .filter(|&i| {
                let (node, _) = junction_node(i);
                kept.contains(&node.0)
            })
            .collect();
        if cuts.is_empty() {
            free_loops.push(comp);
            continue;
        }
        // one segment per cut: segment r runs from cut r's out side to cut
        // (r+1)'s in side
        let base = seg_component.len();
        for _ in 0..cuts.len() {
            seg_component.push(comp);
        }
        for (r, &i) in cuts.iter().enumerate() {
            let (node, _) = junction_node(i);
            let (in_arc, in_dir) = walk[i];
            let in_ae = match in_dir {
                Dir::Fwd => ArcEnd::new(in_arc, 1),
                Dir::Rev => ArcEnd::new(in_arc, 0),
            };
            let (out_arc, out_dir) = walk[(i + 1) % walk.len()];
            let out_ae = match out_dir {
                Dir::Fwd => ArcEnd::new(out_arc, 0),
                Dir::Rev => ArcEnd::new(out_arc, 1),
            };
            let (_, in_slot) = d.end_location(in_ae);
            let (out_node, out_slot) = d.end_location(out_ae);
            debug_assert_eq!(out_node.0, node.0, "walk leaves a different node than it entered");
            // the segment ending at this cut is r, the one starting is r+1
            let ending = base + r;
            let starting = base + (r + 1) % cuts.len();
            slot_fill.insert((node.0, in_slot), SegEnd { seg: ending, end: 1 });
            slot_fill.insert((node.0, out_slot), SegEnd { seg: starting, end: 0 });
        }
    }

    let mut crossings = Vec::new();
    let mut kept_sorted: Vec<usize> = kept.into_iter().collect();
    kept_sorted.sort_unstable();
    for node in kept_sorted {
        let mut slots = [SegEnd { seg: usize::MAX, end: 0 }; 4];
        for (s, slot) in slots.iter_mut().enumerate() {
            *slot = *slot_fill.get(&(node, s)).ok_or_else(|| {
                Error::InvalidDiagram(format!(
                    "kept crossing {} not fully traversed by the cycles",
                    node
                ))
            })?;
        }
        let info = match &d.nodes()[node] {
            Node::Crossing(info) => info,
            _ => unreachable!("kept set only holds crossings"),
        };
        let (_, over_slot) = d.end_location(info.over[0]);
        crossings.push(LinkCrossing {
            source: CrossingId(node),
            slots,
            over_parity: (over_slot % 2) as u8,
        });
    }

    Ok(LinkDiagram {
        num_components: cycles.len(),
        seg_component,
        crossings,
        free_loops,
    })
}
