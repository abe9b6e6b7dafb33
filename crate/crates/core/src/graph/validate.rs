use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use super::{PlanarGraph, Sign};

/// A single violated invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Issue {
    DuplicateVertex { vertex: String },
    DuplicateEdgeId { id: usize },
    UnknownEndpoint { edge: usize },
    EmptyFace { face: usize },
    UnknownFaceEdge { face: usize, position: usize },
    RepeatedEdgeInFace { face: usize, edge: usize },
    OpenWalk { face: usize, position: usize },
    MacLane { edge: usize, faces: Vec<usize> },
    SameSignOnSharedEdge { edge: usize, faces: Vec<usize> },
    Euler { vertices: usize, edges: usize, faces: usize },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::DuplicateVertex { vertex } => write!(f, "vertex {vertex:?} declared twice"),
            Issue::DuplicateEdgeId { id } => write!(f, "edge id {id} used twice"),
            Issue::UnknownEndpoint { edge } => write!(f, "edge {edge} has an undeclared endpoint"),
            Issue::EmptyFace { face } => write!(f, "face {face} has an empty cycle"),
            Issue::UnknownFaceEdge { face, position } => {
                write!(f, "face {face} entry {position} refers to a missing edge")
            }
            Issue::RepeatedEdgeInFace { face, edge } => {
                write!(f, "face {face} lists edge {edge} more than once")
            }
            Issue::OpenWalk { face, position } => {
                write!(f, "face {face} is not a closed walk at entry {position}")
            }
            Issue::MacLane { edge, faces } => {
                write!(f, "MacLane condition: edge {edge} lies on {} faces {faces:?}", faces.len())
            }
            Issue::SameSignOnSharedEdge { edge, faces } => {
                write!(f, "edge {edge} has the same sign in faces {faces:?}")
            }
            Issue::Euler { vertices, edges, faces } => write!(
                f,
                "Euler relation fails on a component: v - e + f = {vertices} - {edges} + {faces} != 1"
            ),
        }
    }
}

/// Diagnostics from [`PlanarGraph::validate`]; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.issues.iter().map(ToString::to_string).collect();
        write!(f, "{}", lines.join("; "))
    }
}

pub(super) fn validate(g: &PlanarGraph) -> ValidationReport {
    let mut issues = Vec::new();
    let n = g.vertices.len();

    let mut seen = BTreeSet::new();
    for v in &g.vertices {
        if !seen.insert(v) {
            issues.push(Issue::DuplicateVertex { vertex: v.clone() });
        }
    }
    let mut ids = BTreeSet::new();
    for (i, e) in g.edges.iter().enumerate() {
        if !ids.insert(e.id) {
            issues.push(Issue::DuplicateEdgeId { id: e.id });
        }
        if e.tail >= n || e.head >= n {
            issues.push(Issue::UnknownEndpoint { edge: i });
        }
    }
    let endpoints_ok = g.edges.iter().all(|e| e.tail < n && e.head < n);

    let mut faces_ok = true;
    for (fi, face) in g.faces.iter().enumerate() {
        if face.entries.is_empty() {
            issues.push(Issue::EmptyFace { face: fi });
            faces_ok = false;
            continue;
        }
        let mut in_face = BTreeSet::new();
        for (pos, entry) in face.entries.iter().enumerate() {
            if entry.edge >= g.edges.len() {
                issues.push(Issue::UnknownFaceEdge { face: fi, position: pos });
                faces_ok = false;
            } else if !in_face.insert(entry.edge) {
                issues.push(Issue::RepeatedEdgeInFace { face: fi, edge: entry.edge });
            }
        }
        if !faces_ok || !endpoints_ok {
            continue;
        }
        // Walk: entry i ends where entry i+1 starts.
        let ends = |pos: usize| {
            let en = face.entries[pos];
            let e = &g.edges[en.edge];
            match en.sign {
                Sign::Plus => (e.tail, e.head),
                Sign::Minus => (e.head, e.tail),
            }
        };
        let k = face.entries.len();
        for pos in 0..k {
            let (_, end) = ends(pos);
            let (start, _) = ends((pos + 1) % k);
            if end != start {
                issues.push(Issue::OpenWalk { face: fi, position: pos });
                break;
            }
        }
    }
    if !faces_ok {
        return ValidationReport { issues };
    }

    for (edge, on) in g.faces_of_edges().iter().enumerate() {
        let faces: Vec<usize> = on.iter().map(|&(f, _)| f).collect();
        if on.len() > 2 {
            issues.push(Issue::MacLane { edge, faces });
        } else if on.len() == 2 && on[0].1 == on[1].1 {
            issues.push(Issue::SameSignOnSharedEdge { edge, faces });
        }
    }

    if endpoints_ok {
        let (comp, count) = g.components();
        let mut v = vec![0usize; count];
        let mut e = vec![0usize; count];
        let mut f = vec![0usize; count];
        for &c in &comp {
            v[c] += 1;
        }
        for edge in &g.edges {
            e[comp[edge.tail]] += 1;
        }
        let mut face_comp = BTreeMap::new();
        for (fi, face) in g.faces.iter().enumerate() {
            let c = comp[g.edges[face.entries[0].edge].tail];
            face_comp.insert(fi, c);
            f[c] += 1;
        }
        for c in 0..count {
            if f[c] > 0 && v[c] as i64 - e[c] as i64 + f[c] as i64 != 1 {
                issues.push(Issue::Euler {
                    vertices: v[c],
                    edges: e[c],
                    faces: f[c],
                });
            }
        }
    }
    ValidationReport { issues }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::GraphBuilder;

    #[test]
    fn fixtures_are_valid() {
        for (name, g) in fixtures::all() {
            assert!(g.validate().is_valid(), "{name}: {}", g.validate());
        }
    }

    #[test]
    fn three_faces_on_one_edge() {
        let mut b = GraphBuilder::new();
        let e = b.edge("u", "v");
        let p = b.edge("v", "u");
        let q = b.edge("v", "u");
        let r = b.edge("v", "u");
        b.face(&[(e, 1), (p, 1)]);
        b.face(&[(e, -1), (q, -1)]);
        b.face(&[(e, 1), (r, 1)]);
        let report = b.build().validate();
        assert!(report.issues.iter().any(|i| matches!(i, Issue::MacLane { edge: 0, .. })));
    }

    #[test]
    fn open_walk_detected() {
        let mut b = GraphBuilder::new();
        let e0 = b.edge("a", "b");
        let e1 = b.edge("b", "c");
        let e2 = b.edge("a", "c");
        b.face(&[(e0, 1), (e1, 1), (e2, 1)]);
        let report = b.build().validate();
        assert!(matches!(report.issues[0], Issue::OpenWalk { face: 0, .. }));
    }

    #[test]
    fn same_sign_on_shared_edge() {
        let mut g = fixtures::two_squares();
        g.faces[1].entries[0].sign = Sign::Plus;
        let report = g.validate();
        assert!(report.issues.iter().any(|i| matches!(i, Issue::SameSignOnSharedEdge { .. })));
    }

    #[test]
    fn annulus_fails_euler() {
        // Ring of four quadrilaterals around an undeclared hole.
        let mut b = GraphBuilder::new();
        let outer: Vec<usize> = (0..4).map(|i| b.edge(&format!("o{i}"), &format!("o{}", (i + 1) % 4))).collect();
        let inner: Vec<usize> = (0..4).map(|i| b.edge(&format!("i{i}"), &format!("i{}", (i + 1) % 4))).collect();
        let spokes: Vec<usize> = (0..4).map(|i| b.edge(&format!("i{i}"), &format!("o{i}"))).collect();
        for i in 0..4 {
            let j = (i + 1) % 4;
            b.face(&[(spokes[i], 1), (outer[i], 1), (spokes[j], -1), (inner[i], -1)]);
        }
        let report = b.build().validate();
        assert!(report.issues.iter().any(|i| matches!(i, Issue::Euler { .. })), "{report}");
    }
}
