//! The linear-bound pipeline u(f) <= A c(f) + B, the halving bound for
//! trivializable graphs, and descending-diagram change sets.
//!
//! Given a spanning tree T of G rooted at v, every edge gets a branch index
//! b(e): 1 off the tree, and on a tree edge the sum of the indices of the
//! other edges at its far endpoint (loops counted twice), evaluated from the
//! leaves toward the root. Shrinking T multiplies crossings by at most
//! a = (max b(e))^2, after spending at most b = sum over tree vertices of
//! degree >= 3 of k_u (l_u - 1) extra crossings to fix cyclic orders. The
//! resulting constants are A = a/2 and B = a b / 2.

use std::collections::{HashMap, VecDeque};

use num_rational::Ratio;

use crate::diagram::{ArcEnd, CrossingId, Diagram, Node};
use crate::error::{Error, Result};
use crate::graph::{all_spanning_trees, Dir, EdgeId, PlanarGraph, SpanningTree, VertexId};

/// Branch index b(e) for every edge, relative to a rooted spanning tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchIndexMap {
    /// indexed by edge id
    pub values: Vec<u64>,
}

impl BranchIndexMap {
    pub fn get(&self, e: EdgeId) -> u64 {
        self.values[e.0]
    }

    pub fn max(&self) -> u64 {
        self.values.iter().copied().max().unwrap_or(1)
    }
}

/// Parent edge of every non-root vertex and vertex depths, for a rooted tree.
fn tree_orientation(g: &PlanarGraph, t: &SpanningTree) -> Result<(Vec<Option<EdgeId>>, Vec<usize>)> {
    t.check(g)?;
    let n = g.num_vertices();
    let mut adj: Vec<Vec<(EdgeId, VertexId)>> = vec![Vec::new(); n];
    for &e in &t.edges {
        let (a, b) = g.endpoints(e);
        adj[a.0].push((e, b));
        adj[b.0].push((e, a));
    }
    let mut parent_edge: Vec<Option<EdgeId>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    depth[t.root.0] = 0;
    let mut queue = VecDeque::from([t.root]);
    while let Some(v) = queue.pop_front() {
        for &(e, w) in &adj[v.0] {
            if depth[w.0] == usize::MAX {
                depth[w.0] = depth[v.0] + 1;
                parent_edge[w.0] = Some(e);
                queue.push_back(w);
            }
        }
    }
    Ok((parent_edge, depth))
}

/// Branch indices evaluated from the leaves toward the root: tree edges are
/// processed farthest-first, so every other edge at the far endpoint is
/// already known. A far endpoint of graph-degree 1 has an empty sum; its
/// index is defined as 1.
pub fn branch_indices(g: &PlanarGraph, t: &SpanningTree) -> Result<BranchIndexMap> {
    let (parent_edge, depth) = tree_orientation(g, t)?;
    let mut values = vec![0u64; g.num_edges()];
    for e in g.edges() {
        if !t.contains(e) {
            values[e.0] = 1;
        }
    }
    // far endpoint of a tree edge = the deeper endpoint (its child side)
    let mut order: Vec<(usize, EdgeId, VertexId)> = Vec::new();
    for v in g.vertices() {
        if let Some(e) = parent_edge[v.0] {
            order.push((depth[v.0], e, v));
        }
    }
    order.sort_by(|a, b| b.0.cmp(&a.0));
    for (_, e, far) in order {
        let mut sum = 0u64;
        let mut empty = true;
        for &ee in g.rotation_at(far) {
            if ee.edge == e {
                continue;
            }
            empty = false;
            sum += values[ee.edge.0];
        }
        debug_assert!(empty || sum > 0, "children computed before parents");
        values[e.0] = if empty { 1 } else { sum };
    }
    Ok(BranchIndexMap { values })
}

/// Independent recomputation of the branch indices by top-down memoized
/// recursion; the selftest checks it against [`branch_indices`] on random
/// graph/tree pairs.
pub fn branch_indices_memoized(g: &PlanarGraph, t: &SpanningTree) -> Result<BranchIndexMap> {
    let (parent_edge, depth) = tree_orientation(g, t)?;
    // far endpoint per tree edge
    let mut far: HashMap<EdgeId, VertexId> = HashMap::new();
    for v in g.vertices() {
        if let Some(e) = parent_edge[v.0] {
            far.insert(e, v);
        }
    }
    let _ = depth;
    fn eval(
        g: &PlanarGraph,
        far: &HashMap<EdgeId, VertexId>,
        e: EdgeId,
        memo: &mut HashMap<EdgeId, u64>,
    ) -> u64 {
        if let Some(&v) = memo.get(&e) {
            return v;
        }
        let value = match far.get(&e) {
            None => 1,
            Some(&w) => {
                let mut sum = 0u64;
                let mut empty = true;
                for &ee in g.rotation_at(w) {
                    if ee.edge == e {
                        continue;
                    }
                    empty = false;
                    sum += eval(g, far, ee.edge, memo);
                }
                if empty {
                    1
                } else {
                    sum
                }
            }
        };
        memo.insert(e, value);
        value
    }
    let mut memo = HashMap::new();
    let values = g.edges().map(|e| eval(g, &far, e, &mut memo)).collect();
    Ok(BranchIndexMap { values })
}

/// k_u = floor((deg(u, G) - 1) / 2), so deg(u, G) is 2 k_u + 1 or 2 k_u + 2.
pub fn half_degree(g: &PlanarGraph, v: VertexId) -> u64 {
    ((g.degree(v).max(1) - 1) / 2) as u64
}

/// Reorder cost b = sum of k_u (l_u - 1) over the vertices with tree degree
/// l_u >= 3; fixing the cyclic order at each such vertex costs at most that
/// many extra crossings.
pub fn reorder_cost(g: &PlanarGraph, t: &SpanningTree) -> Result<u64> {
    t.check(g)?;
    let mut total = 0u64;
    for v in g.vertices() {
        let l = t.degree(g, v) as u64;
        if l >= 3 {
            total += half_degree(g, v) * (l - 1);
        }
    }
    Ok(total)
}

/// The constants of the linear bound for one rooted spanning tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundConstants {
    pub branch: BranchIndexMap,
    /// reorder cost b
    pub reorder: u64,
    /// a = (max branch index)^2
    pub a: u64,
    /// A = a / 2
    pub coeff: Ratio<i64>,
    /// B = a b / 2
    pub offset: Ratio<i64>,
}

impl BoundConstants {
    /// Evaluates the bound c -> A c + B.
    pub fn bound(&self, crossings: u64) -> Ratio<i64> {
        self.coeff * Ratio::from_integer(crossings as i64) + self.offset
    }
}

pub fn theorem2_constants(g: &PlanarGraph, t: &SpanningTree) -> Result<BoundConstants> {
    let branch = branch_indices(g, t)?;
    let reorder = reorder_cost(g, t)?;
    let a = branch.max() * branch.max();
    Ok(BoundConstants {
        branch,
        reorder,
        a,
        coeff: Ratio::new(a as i64, 2),
        offset: Ratio::new((a * reorder) as i64, 2),
    })
}

/// Exhaustive minimization of (A, B) over all spanning trees and all roots,
/// lexicographically, tie-broken by the canonical tree encoding (sorted edge
/// ids, then root id). Desk scale: errors beyond `tree_cap` spanning trees.
pub fn optimize_constants(g: &PlanarGraph, tree_cap: usize) -> Result<(SpanningTree, BoundConstants)> {
    let trees = all_spanning_trees(g, tree_cap)?;
    let mut best: Option<(SpanningTree, BoundConstants)> = None;
    for tree in trees {
        for root in g.vertices() {
            let t = SpanningTree { edges: tree.edges.clone(), root };
            let c = theorem2_constants(g, &t)?;
            let better = match &best {
                None => true,
                Some((bt, bc)) => {
                    let key = (c.coeff, c.offset, t.edges.clone(), t.root);
                    let best_key = (bc.coeff, bc.offset, bt.edges.clone(), bt.root);
                    key < best_key
                }
            };
            if better {
                best = Some((t, c));
            }
        }
    }
    best.ok_or_else(|| Error::InvalidGraph("no spanning tree".into()))
}

/// The halving bound for trivializable graphs: u(f) <= floor(c / 2).
pub fn trivializable_bound(crossings: u64) -> u64 {
    crossings / 2
}

// ---------------------------------------------------------------------------
// descending change sets
// ---------------------------------------------------------------------------

/// Crossing subsets that make a diagram descending. Changing
/// `descending_set` makes the earlier strand pass over at every crossing;
/// changing `complement` yields the mirror-descending diagram. Either way at
/// most min(|A|, c - |A|) <= floor(c / 2) changes suffice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescendingChangeSet {
    pub descending_set: Vec<CrossingId>,
    pub complement: Vec<CrossingId>,
}

impl DescendingChangeSet {
    pub fn min_changes(&self) -> usize {
        self.descending_set.len().min(self.complement.len())
    }

    pub fn best(&self) -> &[CrossingId] {
        if self.descending_set.len() <= self.complement.len() {
            &self.descending_set
        } else {
            &self.complement
        }
    }
}

fn check_forest(g: &PlanarGraph, forest: &[EdgeId]) -> Result<()> {
    let mut uf = crate::graph::UnionFind::new(g.num_vertices());
    let mut seen = std::collections::HashSet::new();
    for &e in forest {
        if e.0 >= g.num_edges() || !seen.insert(e) {
            return Err(Error::InvalidTree(format!("bad forest edge {}", e.0)));
        }
        let (a, b) = g.endpoints(e);
        if !uf.union(a.0, b.0) {
            return Err(Error::InvalidTree("forest edges contain a cycle".into()));
        }
    }
    Ok(())
}

/// Traversal time of every strand passage, keyed by (crossing, incoming
/// arc-end): the pair (edge rank in the ordering, position along the edge in
/// its traversal direction).
fn passage_times(
    d: &Diagram,
    order: &[(EdgeId, Dir)],
) -> Result<HashMap<(usize, ArcEnd), (usize, usize)>> {
    let mut times = HashMap::new();
    for (rank, &(e, dir)) in order.iter().enumerate() {
        let chain = d.chain(e);
        let passages = chain.len() - 1;
        for j in 0..passages {
            let in_end = ArcEnd::new(chain[j], 1);
            let (node, _) = d.end_location(in_end);
            let time = match dir {
                Dir::Fwd => j,
                Dir::Rev => passages - 1 - j,
            };
            // in the reversed traversal the strand enters the crossing via
            // the other arc of the junction
            let key_end = match dir {
                Dir::Fwd => in_end,
                Dir::Rev => ArcEnd::new(chain[j + 1], 0),
            };
            times.insert((node.0, key_end), (rank, time));
        }
    }
    Ok(times)
}

fn ordering_covers(d: &Diagram, forest: &[EdgeId], order: &[(EdgeId, Dir)]) -> Result<()> {
    let mut expected: Vec<usize> = d
        .graph()
        .edges()
        .filter(|e| !forest.contains(e))
        .map(|e| e.0)
        .collect();
    expected.sort_unstable();
    let mut got: Vec<usize> = order.iter().map(|&(e, _)| e.0).collect();
    got.sort_unstable();
    if expected != got {
        return Err(Error::Precondition(
            "ordering must list exactly the non-tree edges, once each".into(),
        ));
    }
    Ok(())
}

/// The descending change set of a diagram whose crossings avoid the forest:
/// A is the set of crossings where the strand earlier in the traversal order
/// passes under. Changing A yields a descending diagram, changing the
/// complement its mirror; both are diagrams of trivial embeddings.
pub fn descending_change_set(
    d: &Diagram,
    forest: &[EdgeId],
    order: &[(EdgeId, Dir)],
) -> Result<DescendingChangeSet> {
    check_forest(d.graph(), forest)?;
    ordering_covers(d, forest, order)?;
    for x in d.crossing_ids() {
        let (a, b) = d.crossing_edges(x)?;
        if forest.contains(&a) || forest.contains(&b) {
            return Err(Error::Precondition(format!(
                "crossing {} involves a tree edge",
                x.0
            )));
        }
    }
    let times = passage_times(d, order)?;
    let mut descending_set = Vec::new();
    let mut complement = Vec::new();
    for x in d.crossing_ids() {
        let info = d.crossing_info(x)?;
        // each strand's incoming arc-end is the pair member with end = 1 at
        // this crossing, except for a reversed edge where it is the end-0 one;
        // passage_times keyed both variants, so look up both pair members
        let time_of = |pair: &[ArcEnd; 2]| -> (usize, usize) {
            pair.iter()
                .filter_map(|&ae| times.get(&(x.0, ae)).copied())
                .next()
                .expect("every crossing strand lies on an ordered edge")
        };
        let over_time = time_of(&info.over);
        let under_time = time_of(&info.under);
        debug_assert_ne!(over_time, under_time);
        if under_time < over_time {
            // the earlier strand passes under
            descending_set.push(x);
        } else {
            complement.push(x);
        }
    }
    Ok(DescendingChangeSet { descending_set, complement })
}

/// Audits that a diagram is descending for the given ordering: at every
/// crossing the earlier strand passes over.
pub fn audit_descending(d: &Diagram, forest: &[EdgeId], order: &[(EdgeId, Dir)]) -> Result<bool> {
    let set = descending_change_set(d, forest, order)?;
    Ok(set.descending_set.is_empty())
}

/// Applies crossing changes at all the given crossings.
pub fn change_all(d: &Diagram, set: &[CrossingId]) -> Result<Diagram> {
    let mut out = d.clone();
    for &x in set {
        out = out.crossing_change(x)?;
    }
    Ok(out)
}

/// True when no crossing of the diagram touches an arc of a forest edge.
pub fn crossings_avoid_forest(d: &Diagram, forest: &[EdgeId]) -> bool {
    d.nodes().iter().enumerate().all(|(i, n)| match n {
        Node::Crossing(_) => {
            let (a, b) = d.crossing_edges(CrossingId(i)).expect("crossing node");
            !forest.contains(&a) && !forest.contains(&b)
        }
        Node::Vertex(_) => true,
    })
}
