//! Shared fixtures and independent oracles for unit tests.

use std::collections::HashSet;

use crate::graph::{EdgeEnd, EdgeId, PlanarGraph, VertexId};

/// Triangle embedded in the plane: vertices 0,1,2 counterclockwise.
pub(crate) fn triangle() -> PlanarGraph {
    let e = |i| EdgeId(i);
    let endpoints = vec![
        (VertexId(0), VertexId(1)),
        (VertexId(1), VertexId(2)),
        (VertexId(2), VertexId(0)),
    ];
    let rotation = vec![
        vec![EdgeEnd::new(e(0), 0), EdgeEnd::new(e(2), 1)],
        vec![EdgeEnd::new(e(1), 0), EdgeEnd::new(e(0), 1)],
        vec![EdgeEnd::new(e(2), 0), EdgeEnd::new(e(1), 1)],
    ];
    PlanarGraph::new(3, endpoints, rotation).unwrap()
}

/// Theta graph: two vertices joined by three parallel edges.
pub(crate) fn theta() -> PlanarGraph {
    let endpoints = vec![
        (VertexId(0), VertexId(1)),
        (VertexId(0), VertexId(1)),
        (VertexId(0), VertexId(1)),
    ];
    let rotation = vec![
        vec![
            EdgeEnd::new(EdgeId(0), 0),
            EdgeEnd::new(EdgeId(1), 0),
            EdgeEnd::new(EdgeId(2), 0),
        ],
        vec![
            EdgeEnd::new(EdgeId(2), 1),
            EdgeEnd::new(EdgeId(1), 1),
            EdgeEnd::new(EdgeId(0), 1),
        ],
    ];
    PlanarGraph::new(2, endpoints, rotation).unwrap()
}

/// Independent cycle oracle: a simple cycle is exactly a connected 2-regular
/// edge subset, so enumerate all edge subsets. Usable up to ~16 edges.
pub(crate) fn cycle_count_oracle(g: &PlanarGraph) -> usize {
    let m = g.num_edges();
    assert!(m <= 16, "oracle is exponential in edges");
    let mut count = 0;
    'subset: for mask in 1u32..(1 << m) {
        let mut deg = vec![0usize; g.num_vertices()];
        let mut verts = HashSet::new();
        for e in 0..m {
            if mask & (1 << e) != 0 {
                let (a, b) = g.endpoints(EdgeId(e));
                deg[a.0] += 1;
                deg[b.0] += 1;
                verts.insert(a.0);
                verts.insert(b.0);
            }
        }
        for &v in &verts {
            if deg[v] != 2 {
                continue 'subset;
            }
        }
        let start = *verts.iter().next().unwrap();
        let mut seen = HashSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for e in 0..m {
                if mask & (1 << e) != 0 {
                    let (a, b) = g.endpoints(EdgeId(e));
                    for (x, y) in [(a, b), (b, a)] {
                        if x.0 == v && !seen.contains(&y.0) {
                            seen.insert(y.0);
                            stack.push(y.0);
                        }
                    }
                }
            }
        }
        if seen.len() == verts.len() {
            count += 1;
        }
    }
    count
}
