//! The worked example graphs, built in code. The JSON copies under
//! `fixtures/` at the workspace root are checked against these.
//!
//! Edge `k` (0-based id) is the edge called `e_{k+1}` in the usual drawings,
//! so polynomial variable `a_{k+1}` is its slope.

use crate::algebra::{rational, BiPoly, Rational};
use crate::graph::{GraphBuilder, PlanarGraph};
use crate::injective::{Arc, Orientation};
use crate::triangulation::Triangulation;

/// Two unit squares sharing the edge e4, plus a pendant edge e8.
pub fn two_squares() -> PlanarGraph {
    let mut b = GraphBuilder::new();
    let e1 = b.edge("p00", "p02");
    let e2 = b.edge("p02", "p22");
    let e3 = b.edge("p20", "p00");
    let e4 = b.edge("p22", "p20");
    let e5 = b.edge("p22", "p42");
    let e6 = b.edge("p40", "p20");
    let e7 = b.edge("p42", "p40");
    b.edge("p42", "p62");
    b.face(&[(e1, 1), (e2, 1), (e4, 1), (e3, 1)]);
    b.face(&[(e4, -1), (e5, 1), (e7, 1), (e6, 1)]);
    b.build()
}

/// Single triangle, all edges clockwise.
pub fn triangle() -> PlanarGraph {
    let mut b = GraphBuilder::new();
    let e1 = b.edge("a", "b");
    let e2 = b.edge("b", "c");
    let e3 = b.edge("c", "a");
    b.face(&[(e1, 1), (e2, 1), (e3, 1)]);
    b.build()
}

/// Three 4-cycles around a common interior vertex `C`, pairwise sharing an edge.
pub fn morgan_scott() -> PlanarGraph {
    let mut b = GraphBuilder::new();
    let e1 = b.edge("Lu", "T");
    let e2 = b.edge("Ll", "Lu");
    let e3 = b.edge("T", "C");
    let e4 = b.edge("C", "Ll");
    let e5 = b.edge("B", "Ll");
    let e6 = b.edge("Rl", "B");
    let e7 = b.edge("C", "Rl");
    let e8 = b.edge("T", "Ru");
    let e9 = b.edge("Ru", "Rl");
    b.face(&[(e3, 1), (e4, 1), (e2, 1), (e1, 1)]);
    b.face(&[(e7, 1), (e6, 1), (e5, 1), (e4, -1)]);
    b.face(&[(e8, 1), (e9, 1), (e7, -1), (e3, -1)]);
    b.build()
}

/// The lens graph: a 2-cycle face (e1, e2) with a square above and a
/// subdivided square below. Its M^ext is square with vanishing determinant.
pub fn lens_non_generic() -> PlanarGraph {
    let mut b = GraphBuilder::new();
    let e1 = b.edge("A", "Bv");
    let e2 = b.edge("Bv", "A");
    let e3 = b.edge("P", "A");
    let e4 = b.edge("Bv", "R");
    let e5 = b.edge("Q", "P");
    let e6 = b.edge("R", "Q");
    let e7 = b.edge("A", "S");
    let e8 = b.edge("U", "Bv");
    let e9 = b.edge("S", "U");
    b.face(&[(e1, 1), (e2, 1)]);
    b.face(&[(e7, 1), (e9, 1), (e8, 1), (e1, -1)]);
    b.face(&[(e2, -1), (e4, 1), (e6, 1), (e5, 1), (e3, 1)]);
    b.build()
}

/// Square e1..e4 with a triangle e4 e5 e6 glued on; the triangle's edges are
/// directed anticlockwise.
pub fn splittable() -> PlanarGraph {
    let mut b = GraphBuilder::new();
    let e1 = b.edge("p02", "p22");
    let e2 = b.edge("p00", "p02");
    let e3 = b.edge("p20", "p00");
    let e4 = b.edge("p22", "p20");
    let e5 = b.edge("p20", "q41");
    let e6 = b.edge("q41", "p22");
    b.face(&[(e1, 1), (e4, 1), (e3, 1), (e2, 1)]);
    b.face(&[(e4, -1), (e6, -1), (e5, -1)]);
    b.build()
}

/// Five faces, fifteen edges; faces F2 and F5 share the two edges e6, e7.
pub fn phi_dual() -> PlanarGraph {
    let mut b = GraphBuilder::new();
    let e1 = b.edge("Lu", "T");
    let e2 = b.edge("Ll", "Lu");
    let e3 = b.edge("C", "Ll");
    let e4 = b.edge("T", "C");
    let e5 = b.edge("B", "Ll");
    let e6 = b.edge("M", "B");
    let e7 = b.edge("Rl", "M");
    let e8 = b.edge("C", "Rl");
    let e9 = b.edge("T", "Ru");
    let e10 = b.edge("Ru", "Rl");
    let e11 = b.edge("Ru", "Y");
    let e12 = b.edge("Y", "X");
    let e13 = b.edge("X", "Rl");
    let e14 = b.edge("X", "BB");
    let e15 = b.edge("BB", "B");
    b.face(&[(e4, 1), (e3, 1), (e2, 1), (e1, 1)]);
    b.face(&[(e8, 1), (e7, 1), (e6, 1), (e5, 1), (e3, -1)]);
    b.face(&[(e9, 1), (e10, 1), (e8, -1), (e4, -1)]);
    b.face(&[(e11, 1), (e12, 1), (e13, 1), (e10, -1)]);
    b.face(&[(e13, -1), (e14, 1), (e15, 1), (e6, -1), (e7, -1)]);
    b.build()
}

/// Two triangles sharing the edge e3; each is minimal contractible.
pub fn shared_edge_triangles() -> PlanarGraph {
    let mut b = GraphBuilder::new();
    let e1 = b.edge("L", "U");
    let e2 = b.edge("U", "R");
    let e3 = b.edge("R", "L");
    let e4 = b.edge("R", "D");
    let e5 = b.edge("D", "L");
    b.face(&[(e1, 1), (e2, 1), (e3, 1)]);
    b.face(&[(e3, -1), (e4, 1), (e5, 1)]);
    b.build()
}

/// A single loop face.
pub fn loop_face() -> PlanarGraph {
    let mut b = GraphBuilder::new();
    let e = b.edge("v", "v");
    b.face(&[(e, 1)]);
    b.build()
}

/// A single 2-cycle face.
pub fn two_cycle() -> PlanarGraph {
    let mut b = GraphBuilder::new();
    let e1 = b.edge("u", "v");
    let e2 = b.edge("v", "u");
    b.face(&[(e1, 1), (e2, 1)]);
    b.build()
}

/// A dual orientation with multi-edges, every vertex of in-degree three,
/// that admits no coloring without a monochromatic directed cycle.
pub fn coloring_counterexample() -> Orientation {
    let pairs = [
        (0, 3),
        (0, 3),
        (0, 4),
        (0, 4),
        (0, 1),
        (0, 1),
        (2, 1),
        (1, 0),
        (0, 2),
        (3, 0),
        (2, 3),
        (2, 4),
        (4, 0),
        (2, 2),
        (2, 2),
    ];
    let arcs = pairs
        .iter()
        .enumerate()
        .map(|(edge, &(from, to))| Arc { edge, from, to })
        .collect();
    Orientation::new(5, arcs)
}

/// All structural fixtures by name.
pub fn all() -> Vec<(&'static str, PlanarGraph)> {
    vec![
        ("two-squares", two_squares()),
        ("triangle", triangle()),
        ("morgan-scott", morgan_scott()),
        ("lens-non-generic", lens_non_generic()),
        ("splittable", splittable()),
        ("phi-dual", phi_dual()),
        ("shared-edge-triangles", shared_edge_triangles()),
        ("loop-face", loop_face()),
        ("two-cycle", two_cycle()),
    ]
}

/// Slopes `1, 2, …, n` by edge position.
pub fn consecutive_slopes(n: usize) -> Vec<Rational> {
    (1..=n as i64).map(rational::int).collect()
}

/// The two-square graph with the hand-made spline of general polynomial
/// labels: returns `(graph, edge labels, vertex values)` in position order.
pub fn hand_spline() -> (PlanarGraph, Vec<BiPoly>, Vec<BiPoly>) {
    let g = two_squares();
    let x = BiPoly::x();
    let y = BiPoly::y();
    let x2 = x.pow(2);
    let y2 = y.pow(2);
    let xy = &x * &y;
    let labels = vec![
        x2.clone(),
        y2.clone(),
        x.clone(),
        y.clone(),
        xy.clone(),
        y2.clone(),
        xy.clone(),
        &x2 + &y2,
    ];
    let value = |name: &str| -> BiPoly {
        match name {
            "p00" => BiPoly::zero(),
            "p02" | "p20" => x2.clone(),
            "p22" | "p40" => &x2 + &y2,
            "p42" => (&x + &y).pow(2),
            "p62" => xy.scale(&rational::int(2)),
            other => panic!("unexpected vertex {other}"),
        }
    };
    let values = g.vertices.iter().map(|v| value(v)).collect();
    (g, labels, values)
}

fn points(coords: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
    coords.iter().map(|&(x, y)| (rational::int(x), rational::int(y))).collect()
}

/// Six triangles whose dual carries the non-homogeneous labels
/// x+y-1, x-y-1, x-y+1, x+y+1, x-2y+2, x+2y+2 and x.
pub fn homogenization_triangulation() -> Triangulation {
    Triangulation::new(
        points(&[(0, 1), (0, -1), (1, 0), (2, 3), (-2, 0), (2, -3)]),
        vec![[0, 1, 2], [4, 0, 1], [3, 0, 2], [5, 1, 2], [4, 3, 0], [4, 5, 1]],
    )
}

/// A Morgan–Scott type triangulation: an inner triangle inside an outer one,
/// joined by six edges so each inner vertex has four incident triangles.
pub fn morgan_scott_triangulation() -> Triangulation {
    // 0..3 outer A, B, C; 3..6 inner a, b, c
    Triangulation::new(
        points(&[(-19, -15), (19, -15), (0, 19), (-5, -3), (6, -4), (1, 7)]),
        vec![[3, 4, 5], [0, 1, 3], [1, 4, 3], [1, 2, 4], [2, 5, 4], [2, 0, 5], [0, 3, 5]],
    )
}

/// One triangle, no interior edges.
pub fn single_triangle_triangulation() -> Triangulation {
    Triangulation::new(points(&[(0, 0), (3, 1), (1, 4)]), vec![[0, 1, 2]])
}
