use super::EdgeInjectiveFn;
use crate::error::{Error, Result};
use crate::graph::PlanarGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualEnds {
    /// Edge on exactly one face.
    Loop(usize),
    /// Edge shared by two faces, stored with the smaller position first.
    Link(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualEdge {
    /// Position of the carried edge of `G`.
    pub carries: usize,
    pub ends: DualEnds,
}

/// `G*`: faces as vertices, one dual edge per face edge of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub vertices: usize,
    pub edges: Vec<DualEdge>,
}

impl DualGraph {
    pub fn loops_at(&self, face: usize) -> usize {
        self.edges.iter().filter(|d| d.ends == DualEnds::Loop(face)).count()
    }

    /// Neighbouring faces through shared edges, sorted, with repetition for
    /// multi-edges.
    pub fn neighbours(&self, face: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|d| match d.ends {
                DualEnds::Link(a, b) if a == face => Some(b),
                DualEnds::Link(a, b) if b == face => Some(a),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn has_multi_edges(&self) -> bool {
        let mut links: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter_map(|d| match d.ends {
                DualEnds::Link(a, b) => Some((a, b)),
                DualEnds::Loop(_) => None,
            })
            .collect();
        links.sort_unstable();
        links.windows(2).any(|w| w[0] == w[1])
    }
}

pub fn build_dual(g: &PlanarGraph) -> DualGraph {
    let edges = g
        .faces_of_edges()
        .iter()
        .enumerate()
        .filter_map(|(e, on)| {
            let ends = match on.as_slice() {
                [] => return None,
                [(f, _)] => DualEnds::Loop(*f),
                [(a, _), (b, _), ..] => DualEnds::Link(*a.min(b), *a.max(b)),
            };
            Some(DualEdge { carries: e, ends })
        })
        .collect();
    DualGraph {
        vertices: g.num_faces(),
        edges,
    }
}

/// A directed dual edge; `from == to` for loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    /// Carried edge (position in `G`, or any label for abstract orientations).
    pub edge: usize,
    pub from: usize,
    pub to: usize,
}

impl Arc {
    pub fn is_loop(&self) -> bool {
        self.from == self.to
    }
}

/// `G*_φ`: every assigned dual edge points toward the face it is assigned to.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orientation {
    pub vertices: usize,
    pub arcs: Vec<Arc>,
}

impl Orientation {
    /// Abstract orientation, for dual graphs given directly.
    pub fn new(vertices: usize, arcs: Vec<Arc>) -> Self {
        Orientation { vertices, arcs }
    }

    /// Orientation of `G*` induced by `phi`; edges outside the image are omitted.
    pub fn from_phi(g: &PlanarGraph, phi: &EdgeInjectiveFn) -> Orientation {
        let on = g.faces_of_edges();
        let mut arcs = Vec::new();
        for (face, set) in phi.assignment.iter().enumerate() {
            for &e in set {
                let from = on[e].iter().map(|&(f, _)| f).find(|&f| f != face).unwrap_or(face);
                arcs.push(Arc { edge: e, from, to: face });
            }
        }
        arcs.sort();
        Orientation {
            vertices: g.num_faces(),
            arcs,
        }
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.to == v).count()
    }

    pub fn ensure_total(&self) -> Result<()> {
        match (0..self.vertices).find(|&v| self.in_degree(v) != 3) {
            None => Ok(()),
            Some(v) => Err(Error::InvalidGraph(format!(
                "vertex {v} has in-degree {} in the orientation, expected 3",
                self.in_degree(v)
            ))),
        }
    }

    /// Assignment read back from arc heads.
    pub fn to_phi(&self) -> EdgeInjectiveFn {
        let mut phi = EdgeInjectiveFn::empty(self.vertices);
        for a in &self.arcs {
            phi.assignment[a.to].insert(a.edge);
        }
        phi
    }

    /// Reverses the arcs at the given indices.
    pub fn reversed(&self, arcs: &[usize]) -> Orientation {
        let mut out = self.clone();
        for &i in arcs {
            let a = &mut out.arcs[i];
            std::mem::swap(&mut a.from, &mut a.to);
        }
        out.arcs.sort();
        out
    }

    pub fn non_loop_arcs(&self) -> Vec<usize> {
        (0..self.arcs.len()).filter(|&i| !self.arcs[i].is_loop()).collect()
    }
}
