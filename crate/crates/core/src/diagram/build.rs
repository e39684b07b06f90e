//! Diagram generators: the trivial and standard plum diagrams, the knotted
//! cube projection, and small hand-verified fixtures.
//!
//! The standard diagram of P_{2n+1} places the equator as the closure of a
//! positive 2-braid with 2n+1 crossings winding twice around an annulus and
//! routes every spoke crossing-free through the two pole faces: each inner
//! strand segment carries one u vertex reached from the north pole at the
//! center, each outer segment one v vertex reached from the south pole
//! outside. The builder self-validates by computing the first linking-vector
//! entry and flips the global mirror if the sign comes out negative; it never
//! adjusts individual crossings.

use crate::diagram::{restrict_to_cycles, Arc, ArcEnd, ArcId, CrossingInfo, Diagram, Node, NodeId, Projection};
use crate::graph::{Cycle, Dir, EdgeEnd, EdgeId, PlanarGraph, VertexId};
use crate::plum::PlumGraph;

/// The crossing-free diagram of the sphere embedding of P_{2n+1}: node
/// rotations are exactly the graph's rotation system.
pub fn trivial_plum_diagram(p: &PlumGraph) -> Diagram {
    diagram_of_embedding(p.graph())
}

/// A crossing-free diagram of any sphere-embedded graph.
pub(crate) fn diagram_of_embedding(g: &PlanarGraph) -> Diagram {
    let nodes: Vec<Node> = g.vertices().map(Node::Vertex).collect();
    let arcs: Vec<Arc> = g.edges().map(|e| Arc { edge: e, seq: 0 }).collect();
    let rotation: Vec<Vec<ArcEnd>> = g
        .vertices()
        .map(|v| {
            g.rotation_at(v)
                .iter()
                .map(|ee: &EdgeEnd| ArcEnd::new(ArcId(ee.edge.0), ee.end))
                .collect()
        })
        .collect();
    Diagram::new(g.clone(), nodes, arcs, rotation).expect("embedding diagram is valid")
}

/// The standard spatial diagram of P_{2n+1}, with exactly 2n+1 crossings, all
/// between pairs of equatorial edges; its equator sub-diagram is the closed
/// positive 2-braid form of the (2, 2n+1)-torus knot and its linking vector
/// is (2n+1, 0, ..., 0).
pub fn standard_plum_diagram(p: &PlumGraph) -> Diagram {
    let n = p.n();
    let m = 2 * n + 1;
    let g = p.graph().clone();

    // 1-based suffix normalization
    let norm1 = |x: i64| -> usize {
        let mm = m as i64;
        (((x - 1) % mm + mm) % mm + 1) as usize
    };
    // u (or v) index whose segment lies on gap t (0-based)
    let idx_at_gap = |t: usize| -> usize { norm1((n as i64 + 1) * t as i64 + 1) };
    // equator edge ids
    let eq_u_edge = |alpha: usize| 2 * (alpha - 1); // u_alpha -> v_{alpha+n+1}
    let eq_v_edge = |alpha: usize| (2 * ((alpha + n - 1) % m) + 1) % (2 * m); // v_alpha -> u_{alpha+n+1}
    let north_spoke = |i: usize| 2 * m + i - 1;
    let south_spoke = |j: usize| 3 * m + j - 1;
    let spoke_arc = |edge: usize| 2 * (2 * m) + (edge - 2 * m);

    // nodes: vertices 0..2m+2 then crossings c_0..c_{m-1}
    let mut nodes: Vec<Node> = g.vertices().map(Node::Vertex).collect();
    let crossing_node = |gap: usize| NodeId(2 * m + 2 + gap);

    // arcs: equatorial edge t splits into arcs 2t, 2t+1; spokes are single arcs
    let mut arcs: Vec<Arc> = Vec::with_capacity(6 * m);
    for t in 0..2 * m {
        arcs.push(Arc { edge: EdgeId(t), seq: 0 });
        arcs.push(Arc { edge: EdgeId(t), seq: 1 });
    }
    for s in 2 * m..4 * m {
        arcs.push(Arc { edge: EdgeId(s), seq: 0 });
    }

    let mut rotation: Vec<Vec<ArcEnd>> = vec![Vec::new(); 2 * m + 2];

    // crossing c_g sits between gap g-1 and gap g; strand E1 runs from the
    // inner segment of gap g-1 to the outer segment of gap g, strand E2 the
    // other way around. Counterclockwise slot order with the pole at the
    // center on the left of travel: [E2 out, E1 in, E2 in, E1 out].
    for gap in 0..m {
        let alpha = norm1((n as i64 + 1) * (gap as i64 - 1) + 1);
        let e1 = eq_u_edge(alpha);
        let e2 = eq_v_edge(alpha);
        let e1_in = ArcEnd::new(ArcId(2 * e1), 1);
        let e1_out = ArcEnd::new(ArcId(2 * e1 + 1), 0);
        let e2_in = ArcEnd::new(ArcId(2 * e2), 1);
        let e2_out = ArcEnd::new(ArcId(2 * e2 + 1), 0);
        nodes.push(Node::Crossing(CrossingInfo::new([e1_in, e1_out], [e2_in, e2_out])));
        rotation.push(vec![e2_out, e1_in, e2_in, e1_out]);
    }

    // pole rotations: spokes in counterclockwise gap order around the north
    // pole, reversed gap order as seen from the south pole
    rotation[p.north_pole().0] = (0..m)
        .map(|t| ArcEnd::new(ArcId(spoke_arc(north_spoke(idx_at_gap(t)))), 0))
        .collect();
    rotation[p.south_pole().0] = std::iter::once(0)
        .chain((1..m).rev())
        .map(|t| ArcEnd::new(ArcId(spoke_arc(south_spoke(idx_at_gap(t)))), 0))
        .collect();

    // rim vertices: u_i on the inner segment of its gap sees
    // [forward, spoke, backward]; v_j on the outer segment [forward, backward, spoke]
    for i in 1..=m {
        let t = eq_u_edge(i); // forward equatorial edge at u_i
        let t_prev = (t + 2 * m - 1) % (2 * m);
        rotation[p.u(i as i64).0] = vec![
            ArcEnd::new(ArcId(2 * t), 0),
            ArcEnd::new(ArcId(spoke_arc(north_spoke(i))), 1),
            ArcEnd::new(ArcId(2 * t_prev + 1), 1),
        ];
    }
    for j in 1..=m {
        let t = eq_v_edge(j);
        let t_prev = (t + 2 * m - 1) % (2 * m);
        rotation[p.v(j as i64).0] = vec![
            ArcEnd::new(ArcId(2 * t), 0),
            ArcEnd::new(ArcId(2 * t_prev + 1), 1),
            ArcEnd::new(ArcId(spoke_arc(south_spoke(j))), 1),
        ];
    }

    debug_assert_eq!(nodes.len(), 2 * m + 2 + m);
    debug_assert!(crossing_node(m - 1).0 < nodes.len());
    let d = Diagram::new(g, nodes, arcs, rotation).expect("standard plum diagram is valid");

    // self-validation: the first linking-vector entry must be +(2n+1);
    // a negative sign is fixed by the global mirror, anything else is a bug
    let ell1 = first_linking_entry(&d, p);
    if ell1 == m as i64 {
        d
    } else if ell1 == -(m as i64) {
        d.mirror()
    } else {
        panic!("standard plum diagram self-check failed: ell_1 = {}", ell1);
    }
}

fn first_linking_entry(d: &Diagram, p: &PlumGraph) -> i64 {
    let m = p.m() as i64;
    (1..=m)
        .map(|i| {
            restrict_to_cycles(d, &[p.north_cycle(i).clone(), p.south_cycle(i).clone()])
                .and_then(|ld| ld.linking_number())
                .expect("region pair restricts to a 2-component link")
        })
        .sum()
}

/// The knotted projection of the cube: the shadow of the standard diagram of
/// P_3, three crossings, each between two equatorial edges. Every one of its
/// 2^3 resolutions is a nontrivial embedding.
pub fn cube_knotted_projection() -> (PlumGraph, Projection) {
    let p = crate::plum::build_plum_graph(1).expect("n = 1 is valid");
    let proj = standard_plum_diagram(&p).projection();
    (p, proj)
}

/// Closed 2-braid diagram with `m` positive crossings over its underlying
/// cycle graph(s): a (2, m)-torus knot diagram for odd m (one 2m-cycle), a
/// (2, m)-torus link diagram for even m (two m-cycles). Returns the graph,
/// the diagram, and the cycles of the components oriented along the braid.
pub fn closed_two_braid(m: usize) -> (PlanarGraph, Diagram, Vec<Cycle>) {
    assert!(m >= 1);
    let num_vertices = 2 * m;
    // curve structure: position k of a component sits on gap (k mod m), on the
    // inner side iff its side parity is even; moving forward crosses c_{(k+1) mod m}
    // edges: edge ids follow curve positions per component
    struct Step {
        edge: usize,
        from_inner: bool,
        crossing: usize,
    }
    let mut steps: Vec<Step> = Vec::new();
    let mut components: Vec<Vec<usize>> = Vec::new(); // vertex ids in curve order
    let mut comp_edges: Vec<Vec<usize>> = Vec::new();
    if m % 2 == 1 {
        components.push((0..2 * m).collect());
        comp_edges.push((0..2 * m).collect());
        for k in 0..2 * m {
            steps.push(Step { edge: k, from_inner: k % 2 == 0, crossing: (k + 1) % m });
        }
    } else {
        components.push((0..m).collect());
        components.push((m..2 * m).collect());
        comp_edges.push((0..m).collect());
        comp_edges.push((m..2 * m).collect());
        for k in 0..m {
            steps.push(Step { edge: k, from_inner: k % 2 == 0, crossing: (k + 1) % m });
        }
        for k in 0..m {
            steps.push(Step { edge: m + k, from_inner: k % 2 == 1, crossing: (k + 1) % m });
        }
    }

    // abstract graph: each component is a cycle graph along its curve order
    let mut endpoints = vec![(VertexId(0), VertexId(0)); 2 * m];
    for (comp, verts) in components.iter().enumerate() {
        let len = verts.len();
        for (i, &v) in verts.iter().enumerate() {
            let e = comp_edges[comp][i];
            endpoints[e] = (VertexId(v), VertexId(verts[(i + 1) % len]));
        }
    }
    let mut g_rotation: Vec<Vec<EdgeEnd>> = vec![Vec::new(); num_vertices];
    for (comp, verts) in components.iter().enumerate() {
        let len = verts.len();
        for (i, &v) in verts.iter().enumerate() {
            let fwd = comp_edges[comp][i];
            let back = comp_edges[comp][(i + len - 1) % len];
            g_rotation[v] = vec![EdgeEnd::new(EdgeId(fwd), 0), EdgeEnd::new(EdgeId(back), 1)];
        }
    }
    let graph = PlanarGraph::new(num_vertices, endpoints, g_rotation).expect("braid graph");

    // diagram: edge e -> arcs 2e (into its crossing), 2e+1 (out of it)
    let mut nodes: Vec<Node> = graph.vertices().map(Node::Vertex).collect();
    let arcs: Vec<Arc> = (0..2 * m)
        .flat_map(|e| [Arc { edge: EdgeId(e), seq: 0 }, Arc { edge: EdgeId(e), seq: 1 }])
        .collect();
    let mut rotation: Vec<Vec<ArcEnd>> = vec![Vec::new(); num_vertices];

    // per crossing, its E1 (inner -> outer) and E2 (outer -> inner) edges
    let mut e1_of = vec![usize::MAX; m];
    let mut e2_of = vec![usize::MAX; m];
    for s in &steps {
        if s.from_inner {
            e1_of[s.crossing] = s.edge;
        } else {
            e2_of[s.crossing] = s.edge;
        }
    }
    for c in 0..m {
        let (e1, e2) = (e1_of[c], e2_of[c]);
        assert!(e1 != usize::MAX && e2 != usize::MAX);
        let e1_in = ArcEnd::new(ArcId(2 * e1), 1);
        let e1_out = ArcEnd::new(ArcId(2 * e1 + 1), 0);
        let e2_in = ArcEnd::new(ArcId(2 * e2), 1);
        let e2_out = ArcEnd::new(ArcId(2 * e2 + 1), 0);
        nodes.push(Node::Crossing(CrossingInfo::new([e1_in, e1_out], [e2_in, e2_out])));
        rotation.push(vec![e2_out, e1_in, e2_in, e1_out]);
    }
    for (comp, verts) in components.iter().enumerate() {
        let len = verts.len();
        for (i, &v) in verts.iter().enumerate() {
            let fwd = comp_edges[comp][i];
            let back = comp_edges[comp][(i + len - 1) % len];
            rotation[v] = vec![ArcEnd::new(ArcId(2 * fwd), 0), ArcEnd::new(ArcId(2 * back + 1), 1)];
        }
    }

    let d = Diagram::new(graph.clone(), nodes, arcs, rotation).expect("braid diagram is valid");
    let cycles: Vec<Cycle> = comp_edges
        .iter()
        .map(|edges| Cycle::new(edges.iter().map(|&e| (EdgeId(e), Dir::Fwd)).collect()))
        .collect();
    (graph, d, cycles)
}

/// One-vertex loop graph with a single Reidemeister-I kink; `positive`
/// selects the kink's sign.
pub fn kink_diagram(positive: bool) -> (PlanarGraph, Diagram) {
    let graph = PlanarGraph::new(
        1,
        vec![(VertexId(0), VertexId(0))],
        vec![vec![EdgeEnd::new(EdgeId(0), 0), EdgeEnd::new(EdgeId(0), 1)]],
    )
    .expect("loop graph");
    let arcs = vec![
        Arc { edge: EdgeId(0), seq: 0 },
        Arc { edge: EdgeId(0), seq: 1 },
        Arc { edge: EdgeId(0), seq: 2 },
    ];
    let a = |i, end| ArcEnd::new(ArcId(i), end);
    // strand X enters via arc 0 and leaves into the small loop (arc 1),
    // strand Y returns from the loop and leaves along arc 2
    let x_pair = [a(0, 1), a(1, 0)];
    let y_pair = [a(1, 1), a(2, 0)];
    let info = if positive {
        CrossingInfo::new(x_pair, y_pair)
    } else {
        CrossingInfo::new(y_pair, x_pair)
    };
    let nodes = vec![Node::Vertex(VertexId(0)), Node::Crossing(info)];
    let rotation = vec![
        vec![a(0, 0), a(2, 1)],
        vec![a(0, 1), a(1, 1), a(1, 0), a(2, 0)],
    ];
    let d = Diagram::new(graph.clone(), nodes, arcs, rotation).expect("kink diagram is valid");
    (graph, d)
}

/// Theta graph whose edges e1 and e2 cross twice (e2 passing over both
/// times) while e0 stays crossing-free; exercises descending change sets
/// with a nonempty forest.
pub fn theta_clasp_diagram() -> (PlanarGraph, Diagram) {
    let ee = |e, end| EdgeEnd::new(EdgeId(e), end);
    let graph = PlanarGraph::new(
        2,
        vec![
            (VertexId(0), VertexId(1)),
            (VertexId(0), VertexId(1)),
            (VertexId(0), VertexId(1)),
        ],
        vec![
            vec![ee(2, 0), ee(1, 0), ee(0, 0)],
            vec![ee(0, 1), ee(1, 1), ee(2, 1)],
        ],
    )
    .expect("theta graph");

    let a = |i, end| ArcEnd::new(ArcId(i), end);
    let arcs = vec![
        Arc { edge: EdgeId(0), seq: 0 }, // arc 0: e0 whole
        Arc { edge: EdgeId(1), seq: 0 }, // arcs 1..4: e1 through both crossings
        Arc { edge: EdgeId(1), seq: 1 },
        Arc { edge: EdgeId(1), seq: 2 },
        Arc { edge: EdgeId(2), seq: 0 }, // arcs 4..7: e2
        Arc { edge: EdgeId(2), seq: 1 },
        Arc { edge: EdgeId(2), seq: 2 },
    ];
    let nodes = vec![
        Node::Vertex(VertexId(0)),
        Node::Vertex(VertexId(1)),
        Node::Crossing(CrossingInfo::new([a(4, 1), a(5, 0)], [a(1, 1), a(2, 0)])),
        Node::Crossing(CrossingInfo::new([a(5, 1), a(6, 0)], [a(2, 1), a(3, 0)])),
    ];
    let rotation = vec![
        vec![a(4, 0), a(1, 0), a(0, 0)],
        vec![a(0, 1), a(3, 1), a(6, 1)],
        vec![a(2, 0), a(5, 0), a(1, 1), a(4, 1)],
        vec![a(3, 0), a(5, 1), a(2, 1), a(6, 0)],
    ];
    let d = Diagram::new(graph.clone(), nodes, arcs, rotation).expect("theta clasp is valid");
    (graph, d)
}
