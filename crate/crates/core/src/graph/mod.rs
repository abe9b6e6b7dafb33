//! Directed planar graphs given together with their bounded face cycles.
//!
//! Edges and faces are addressed by position in [`PlanarGraph::edges`] and
//! [`PlanarGraph::faces`]. Each edge also carries an `id`; for parsed graphs
//! the two agree, while graphs derived by taking subgraphs or contracting keep
//! the ids of the graph they came from. Polynomial variable `a_k` always means
//! the label slope of the edge with id `k - 1`.

mod io;
mod validate;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};

pub use io::GraphJson;
pub use validate::{Issue, ValidationReport};

use crate::algebra::{rational, Quadratic, Rational};
use crate::error::{Error, Result};

/// Orientation of an edge relative to the clockwise walk around a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    /// The edge points clockwise around the face.
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// Monic label `(x + a·y + b)²`; `b == None` is the homogeneous `(x + a·y)²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabel {
    pub a: Rational,
    pub b: Option<Rational>,
}

impl EdgeLabel {
    pub fn homogeneous(a: Rational) -> Self {
        EdgeLabel { a, b: None }
    }

    pub fn affine(a: Rational, b: Rational) -> Self {
        EdgeLabel { a, b: Some(b) }
    }

    /// Normalizes the line `αx + βy + γ = 0` to monic form. A zero constant
    /// still yields `b = Some(0)`, i.e. a non-homogeneous label whose line
    /// happens to pass through the origin.
    pub fn from_line(alpha: &Rational, beta: &Rational, gamma: &Rational) -> Option<Self> {
        if alpha.is_zero() {
            return None;
        }
        Some(EdgeLabel::affine(beta / alpha, gamma / alpha))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.b.is_none()
    }

    pub fn homogenized(&self) -> Self {
        EdgeLabel::homogeneous(self.a.clone())
    }

    /// The expanded square of the label's line.
    pub fn quadratic(&self) -> Quadratic {
        Quadratic::square_of_line(&self.a, &self.b.clone().unwrap_or_else(Rational::zero))
    }
}

/// Shown as `(x + 2y - 1)^2`, or `(x)^2` when both coefficients vanish.
impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x")?;
        let sign = |r: &Rational| if r.is_negative() { "-" } else { "+" };
        if !self.a.is_zero() {
            let mag = self.a.abs();
            if mag.is_one() {
                write!(f, " {} y", sign(&self.a))?;
            } else {
                write!(f, " {} {}y", sign(&self.a), rational::format(&mag))?;
            }
        }
        if let Some(b) = self.b.as_ref().filter(|b| !b.is_zero()) {
            write!(f, " {} {}", sign(b), rational::format(&b.abs()))?;
        }
        write!(f, ")^2")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: usize,
    pub tail: usize,
    pub head: usize,
    pub label: Option<EdgeLabel>,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaceEntry {
    /// Position of the edge in [`PlanarGraph::edges`].
    pub edge: usize,
    pub sign: Sign,
}

/// Closed clockwise walk around a bounded face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCycle {
    pub id: usize,
    pub entries: Vec<FaceEntry>,
}

impl FaceCycle {
    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|e| e.edge)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sign_of(&self, edge: usize) -> Option<Sign> {
        self.entries.iter().find(|e| e.edge == edge).map(|e| e.sign)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PlanarGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
    pub faces: Vec<FaceCycle>,
}

/// `G_S` together with its counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSubgraph {
    pub graph: PlanarGraph,
    pub e: usize,
    pub f: usize,
}

impl FaceSubgraph {
    pub fn deficiency(&self) -> i64 {
        self.e as i64 - 3 * self.f as i64
    }
}

impl PlanarGraph {
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge_ids(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.id).collect()
    }

    pub fn face_ids(&self) -> Vec<usize> {
        self.faces.iter().map(|f| f.id).collect()
    }

    pub fn edge_position(&self, id: usize) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn face_position(&self, id: usize) -> Option<usize> {
        self.faces.iter().position(|f| f.id == id)
    }

    /// For each edge, the faces containing it with their signs.
    pub fn faces_of_edges(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut out = vec![Vec::new(); self.edges.len()];
        for (fi, face) in self.faces.iter().enumerate() {
            for entry in &face.entries {
                if entry.edge < out.len() {
                    out[entry.edge].push((fi, entry.sign));
                }
            }
        }
        out
    }

    /// Edges that lie on at least one bounded face.
    pub fn face_edges(&self) -> BTreeSet<usize> {
        self.faces.iter().flat_map(|f| f.edges()).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.tail] += 1;
            deg[e.head] += 1;
        }
        deg
    }

    /// Component index per vertex, plus the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            if e.tail < n && e.head < n {
                adj[e.tail].push(e.head);
                adj[e.head].push(e.tail);
            }
        }
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    pub fn validate(&self) -> ValidationReport {
        validate::validate(self)
    }

    /// Errors with [`Error::InvalidGraph`] listing every issue.
    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(report.to_string()))
        }
    }

    /// Repeatedly deletes vertices of degree at most one together with their
    /// edges. Face cycles are untouched; leaf edges lie on no face.
    pub fn remove_leaves(&self) -> PlanarGraph {
        let on_face = self.face_edges();
        let mut alive_edge = vec![true; self.edges.len()];
        let mut alive_vertex = vec![true; self.vertices.len()];
        let mut deg = self.degrees();
        let mut queue: VecDeque<usize> = (0..self.vertices.len()).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = queue.pop_front() {
            if !alive_vertex[v] || deg[v] > 1 {
                continue;
            }
            alive_vertex[v] = false;
            for (i, e) in self.edges.iter().enumerate() {
                if alive_edge[i] && (e.tail == v || e.head == v) && !on_face.contains(&i) {
                    alive_edge[i] = false;
                    let other = if e.tail == v { e.head } else { e.tail };
                    deg[v] -= 1;
                    if other != v {
                        deg[other] -= 1;
                        if deg[other] <= 1 && alive_vertex[other] {
                            queue.push_back(other);
                        }
                    }
                }
            }
        }
        self.restrict(&alive_vertex, &alive_edge, &vec![true; self.faces.len()])
    }

    /// `G_S`: exactly the vertices and edges on the faces at positions `s`.
    pub fn subgraph_from_faces(&self, s: &[usize]) -> FaceSubgraph {
        let chosen: BTreeSet<usize> = s.iter().copied().collect();
        let mut keep_edge = vec![false; self.edges.len()];
        for &f in &chosen {
            for e in self.faces[f].edges() {
                keep_edge[e] = true;
            }
        }
        let mut keep_vertex = vec![false; self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            if keep_edge[i] {
                keep_vertex[e.tail] = true;
                keep_vertex[e.head] = true;
            }
        }
        let keep_face: Vec<bool> = (0..self.faces.len()).map(|f| chosen.contains(&f)).collect();
        let graph = self.restrict(&keep_vertex, &keep_edge, &keep_face);
        FaceSubgraph {
            e: graph.num_edges(),
            f: graph.num_faces(),
            graph,
        }
    }

    /// Keeps the flagged vertices, edges and faces, re-indexing positions.
    /// Kept edges must have kept endpoints; kept faces must use kept edges.
    pub(crate) fn restrict(&self, keep_vertex: &[bool], keep_edge: &[bool], keep_face: &[bool]) -> PlanarGraph {
        let mut vmap = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (i, name) in self.vertices.iter().enumerate() {
            if keep_vertex[i] {
                vmap[i] = vertices.len();
                vertices.push(name.clone());
            }
        }
        let mut emap = vec![usize::MAX; self.edges.len()];
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if keep_edge[i] {
                emap[i] = edges.len();
                edges.push(Edge {
                    id: e.id,
                    tail: vmap[e.tail],
                    head: vmap[e.head],
                    label: e.label.clone(),
                });
            }
        }
        let faces = self
            .faces
            .iter()
            .enumerate()
            .filter(|(i, _)| keep_face[*i])
            .map(|(_, f)| FaceCycle {
                id: f.id,
                entries: f
                    .entries
                    .iter()
                    .map(|en| FaceEntry {
                        edge: emap[en.edge],
                        sign: en.sign,
                    })
                    .collect(),
            })
            .collect();
        PlanarGraph {
            vertices,
            edges,
            faces,
        }
    }

    /// Labels by edge position.
    pub fn labels(&self) -> Vec<Option<EdgeLabel>> {
        self.edges.iter().map(|e| e.label.clone()).collect()
    }

    /// Copy with the given labels (by edge position) attached.
    pub fn with_labels(&self, labels: &[Option<EdgeLabel>]) -> PlanarGraph {
        let mut g = self.clone();
        for (e, l) in g.edges.iter_mut().zip(labels) {
            e.label = l.clone();
        }
        g
    }

    /// Copy with homogeneous labels `(x + a_i y)²` given by position.
    pub fn with_slopes(&self, slopes: &[Rational]) -> PlanarGraph {
        let labels: Vec<Option<EdgeLabel>> = slopes.iter().map(|a| Some(EdgeLabel::homogeneous(a.clone()))).collect();
        self.with_labels(&labels)
    }

    /// Slopes by variable index (edge id), as needed for polynomial evaluation.
    pub fn slope_assignment(&self) -> Vec<Option<Rational>> {
        let n = self.edges.iter().map(|e| e.id + 1).max().unwrap_or(0);
        let mut out = vec![None; n];
        for e in &self.edges {
            out[e.id] = e.label.as_ref().map(|l| l.a.clone());
        }
        out
    }

    /// Reverses an edge's direction, flipping its sign in every face.
    pub fn reverse_edge(&mut self, edge: usize) {
        let e = &mut self.edges[edge];
        std::mem::swap(&mut e.tail, &mut e.head);
        for face in &mut self.faces {
            for entry in &mut face.entries {
                if entry.edge == edge {
                    entry.sign = entry.sign.flipped();
                }
            }
        }
    }

    pub fn from_json(text: &str) -> Result<PlanarGraph> {
        io::parse(text)
    }

    pub fn to_json(&self) -> GraphJson {
        io::to_json(self)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("graph serializes")
    }
}

/// Small builder used by tests, examples and the book.
///
/// ```
/// use splinedim::graph::GraphBuilder;
/// let mut b = GraphBuilder::new();
/// let e0 = b.edge("u", "v");
/// let e1 = b.edge("v", "w");
/// let e2 = b.edge("w", "u");
/// b.face(&[(e0, 1), (e1, 1), (e2, 1)]);
/// let g = b.build();
/// assert!(g.validate().is_valid());
/// ```
#[derive(Default)]
pub struct GraphBuilder {
    graph: PlanarGraph,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, name: &str) -> usize {
        if let Some(i) = self.graph.vertex_index(name) {
            return i;
        }
        self.graph.vertices.push(name.to_string());
        self.graph.vertices.len() - 1
    }

    /// Adds an edge; its id is its position.
    pub fn edge(&mut self, tail: &str, head: &str) -> usize {
        let tail = self.vertex(tail);
        let head = self.vertex(head);
        let id = self.graph.edges.len();
        self.graph.edges.push(Edge {
            id,
            tail,
            head,
            label: None,
        });
        id
    }

    pub fn labeled_edge(&mut self, tail: &str, head: &str, label: EdgeLabel) -> usize {
        let e = self.edge(tail, head);
        self.graph.edges[e].label = Some(label);
        e
    }

    /// Adds a face from `(edge, ±1)` pairs in clockwise walk order.
    pub fn face(&mut self, entries: &[(usize, i64)]) -> usize {
        let id = self.graph.faces.len();
        self.graph.faces.push(FaceCycle {
            id,
            entries: entries
                .iter()
                .map(|&(edge, s)| FaceEntry {
                    edge,
                    sign: Sign::from_value(s).expect("sign must be 1 or -1"),
                })
                .collect(),
        });
        id
    }

    pub fn build(self) -> PlanarGraph {
        self.graph
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn path_graph_loses_all_edges() {
        let mut b = GraphBuilder::new();
        b.edge("a", "b");
        b.edge("b", "c");
        b.edge("c", "d");
        let g = b.build().remove_leaves();
        assert_eq!(g.num_edges(), 0);
    }

    #[test]
    fn pendant_edge_removed() {
        let g = fixtures::two_squares();
        let h = g.remove_leaves();
        assert_eq!(h.num_edges(), 7);
        assert_eq!(h.faces.len(), 2);
        assert!(h.edges.iter().all(|e| e.id != 7));
        assert!(h.validate().is_valid());
    }

    #[test]
    fn leafless_graph_is_fixed() {
        let g = fixtures::morgan_scott();
        assert_eq!(g.remove_leaves(), g);
    }

    #[test]
    fn subgraph_counts() {
        let g = fixtures::splittable();
        let s = g.subgraph_from_faces(&[1]);
        assert_eq!((s.e, s.f, s.deficiency()), (3, 1, 0));
        let g = fixtures::lens_non_generic();
        let s = g.subgraph_from_faces(&[0]);
        assert_eq!((s.e, s.f, s.deficiency()), (2, 1, -1));
        let all = g.subgraph_from_faces(&[0, 1, 2]);
        assert_eq!(all.e, 9);
    }

    #[test]
    fn subgraph_union_of_edges() {
        let g = fixtures::phi_dual();
        let ids = |s: &FaceSubgraph| s.graph.edge_ids().into_iter().collect::<BTreeSet<_>>();
        let a = g.subgraph_from_faces(&[0, 2]);
        let b = g.subgraph_from_faces(&[1, 4]);
        let u = g.subgraph_from_faces(&[0, 1, 2, 4]);
        let union: BTreeSet<_> = ids(&a).union(&ids(&b)).copied().collect();
        assert_eq!(ids(&u), union);
    }

    #[test]
    fn remove_leaves_idempotent_on_fixtures() {
        for (_, g) in fixtures::all() {
            let once = g.remove_leaves();
            assert_eq!(once.remove_leaves(), once);
            assert_eq!(once.faces.len(), g.faces.len());
        }
    }
}
