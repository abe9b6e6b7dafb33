//! Contracting minimal contractible face sets, the dimension algorithm built
//! on it, and the polynomials describing labels in special position.
//!
//! If `S` is contractible then every face of `S` uses only edges of `G_S`,
//! so after ordering columns as (edges of `G_S` | rest) `M^ext` is lower
//! block triangular. When `M^ext_{G_S}` has full column rank the ranks add
//! and the problem passes to `G \ G_S`.

mod locus;
mod search;

use std::collections::BTreeSet;

use serde::Serialize;

pub use locus::{residual_minors, special_locus, special_locus_with, SpecialLocus, StageLocus, RESIDUAL_MINOR_LIMIT};
pub use search::{
    find_minimal_contractible, is_contractible, minimal_contractible_sets, EXHAUSTIVE_FACE_LIMIT, SMALL_SUBSET_SIZE,
};

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeLabel, FaceCycle, PlanarGraph};
use crate::spline::build_mext;

/// Shape of a minimal contractible subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MinimalKind {
    Loop,
    TwoCycle,
    ThreeCycle,
    /// Several faces with `e = 3f`.
    Balanced,
}

/// `G_S` must be one of the shapes allowed for a minimal contractible
/// subgraph when two faces share at most one edge.
pub fn classify_minimal_contractible(g: &PlanarGraph) -> Result<MinimalKind> {
    let e = g.face_edges().len();
    let f = g.num_faces();
    let vertices: BTreeSet<usize> = g
        .face_edges()
        .into_iter()
        .flat_map(|i| [g.edges[i].tail, g.edges[i].head])
        .collect();
    match (f, e) {
        (1, 1) => Ok(MinimalKind::Loop),
        (1, 2) if vertices.len() == 2 => Ok(MinimalKind::TwoCycle),
        (1, 3) if vertices.len() == 3 => Ok(MinimalKind::ThreeCycle),
        (f, e) if f > 1 && e == 3 * f => Ok(MinimalKind::Balanced),
        _ => Err(Error::HypothesisViolation(format!(
            "minimal contractible subgraph with {f} faces, {e} edges and {} vertices is not a loop, 2-cycle, 3-cycle or balanced",
            vertices.len()
        ))),
    }
}

/// A vertex created by merging a connected component of `G_S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MergedVertex {
    pub name: String,
    pub members: Vec<String>,
}

/// `G \ G_S` with its bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: PlanarGraph,
    pub merged: Vec<MergedVertex>,
    /// Ids of faces left without edges, which are dropped.
    pub dropped_faces: Vec<usize>,
}

/// Deletes the edges of `G_S` and merges each connected component of `G_S`
/// into one vertex. Other faces keep their cycles minus the deleted edges.
pub fn contract(g: &PlanarGraph, s: &[usize]) -> Result<PlanarGraph> {
    Ok(contract_with_map(g, s)?.graph)
}

pub fn contract_with_map(g: &PlanarGraph, s: &[usize]) -> Result<Contraction> {
    let ids = |s: &[usize]| s.iter().map(|&f| g.faces[f].id).collect::<Vec<_>>();
    if s.is_empty() || s.iter().any(|&f| f >= g.num_faces()) || !is_contractible(g, s).0 {
        return Err(Error::NotContractible(ids(s)));
    }
    let chosen: BTreeSet<usize> = s.iter().copied().collect();
    let mut in_sub = vec![false; g.num_edges()];
    for &f in &chosen {
        for e in g.faces[f].edges() {
            in_sub[e] = true;
        }
    }
    // union-find over the vertices joined by edges of G_S
    let mut parent: Vec<usize> = (0..g.num_vertices()).collect();
    fn find(p: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while p[r] != r {
            r = p[r];
        }
        let mut x = v;
        while p[x] != r {
            let next = p[x];
            p[x] = r;
            x = next;
        }
        r
    }
    for (i, e) in g.edges.iter().enumerate() {
        if in_sub[i] {
            let (a, b) = (find(&mut parent, e.tail), find(&mut parent, e.head));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let roots: Vec<usize> = (0..g.num_vertices()).map(|v| find(&mut parent, v)).collect();
    let mut vmap = vec![usize::MAX; g.num_vertices()];
    let mut vertices = Vec::new();
    let mut merged = Vec::new();
    for v in 0..g.num_vertices() {
        if roots[v] != v {
            vmap[v] = vmap[roots[v]];
            continue;
        }
        let members: Vec<String> = (0..g.num_vertices())
            .filter(|&u| roots[u] == v)
            .map(|u| g.vertices[u].clone())
            .collect();
        vmap[v] = vertices.len();
        if members.len() > 1 {
            let name = format!("[{}]", members.join("+"));
            vertices.push(name.clone());
            merged.push(MergedVertex { name, members });
        } else {
            vertices.push(g.vertices[v].clone());
        }
    }
    let mut emap = vec![usize::MAX; g.num_edges()];
    let mut edges = Vec::new();
    for (i, e) in g.edges.iter().enumerate() {
        if !in_sub[i] {
            emap[i] = edges.len();
            edges.push(Edge {
                id: e.id,
                tail: vmap[e.tail],
                head: vmap[e.head],
                label: e.label.clone(),
            });
        }
    }
    let mut faces = Vec::new();
    let mut dropped_faces = Vec::new();
    for (i, face) in g.faces.iter().enumerate() {
        if chosen.contains(&i) {
            continue;
        }
        let entries: Vec<_> = face
            .entries
            .iter()
            .filter(|en| !in_sub[en.edge])
            .map(|en| crate::graph::FaceEntry {
                edge: emap[en.edge],
                sign: en.sign,
            })
            .collect();
        if entries.is_empty() {
            dropped_faces.push(face.id);
        } else {
            faces.push(FaceCycle { id: face.id, entries });
        }
    }
    Ok(Contraction {
        graph: PlanarGraph {
            vertices,
            edges,
            faces,
        },
        merged,
        dropped_faces,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContractionOptions {
    /// Reject stages where two minimal contractible sets share an edge.
    /// Duals of triangulations never have such pairs, so callers may skip
    /// the check for them.
    pub check_shared_edges: bool,
}

impl Default for ContractionOptions {
    fn default() -> Self {
        ContractionOptions {
            check_shared_edges: true,
        }
    }
}

/// One contraction step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    /// Face ids of `S_i`.
    pub faces: Vec<usize>,
    /// `G_{S_i}` inside the stage graph.
    pub subgraph: PlanarGraph,
    /// `e_S - 3 f_S`.
    pub deficiency: i64,
    pub kind: MinimalKind,
    /// How many minimal contractible sets the stage graph had.
    pub alternatives: usize,
    pub merged: Vec<MergedVertex>,
    pub dropped_faces: Vec<usize>,
    /// Exact rank of `M^ext_{G_S}` when labels were supplied.
    pub rank: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResidualKind {
    NoContractibleSubset,
    SingleFace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionTrace {
    pub stages: Vec<Stage>,
    pub residual: PlanarGraph,
    pub residual_kind: ResidualKind,
    /// Ids of residual edges on no face; each adds one to the dimension.
    pub unused_edges: Vec<usize>,
    /// `e_R - 3 f_R` over the residual face edges.
    pub residual_deficiency: i64,
    /// Set when `e_R < 3 f_R`, so the residual contributes nothing.
    pub clamped: bool,
    pub residual_rank: Option<usize>,
    pub dimension: usize,
}

/// Generic spline dimension by repeated contraction, checking every stage
/// against exact ranks when labels (by edge position) are supplied.
pub fn dimension_by_contraction(
    g: &PlanarGraph,
    labels: Option<&[Option<EdgeLabel>]>,
) -> Result<(usize, ContractionTrace)> {
    dimension_by_contraction_with(g, labels, ContractionOptions::default())
}

pub fn dimension_by_contraction_with(
    g: &PlanarGraph,
    labels: Option<&[Option<EdgeLabel>]>,
    opts: ContractionOptions,
) -> Result<(usize, ContractionTrace)> {
    g.ensure_valid()?;
    let mut current = match labels {
        Some(l) => g.with_labels(l),
        None => g.clone(),
    };
    let mut stages = Vec::new();
    loop {
        let sets = minimal_contractible_sets(&current);
        let Some(s) = sets.first().cloned() else { break };
        if opts.check_shared_edges {
            check_shared_edges(&current, &sets)?;
        }
        let sub = current.subgraph_from_faces(&s);
        let kind = classify_minimal_contractible(&sub.graph)?;
        let rank = match labels {
            Some(_) => {
                let r = build_mext(&sub.graph, &sub.graph.labels())?.matrix.rank();
                if r != sub.e {
                    return Err(Error::SpecialPosition {
                        stage: stages.len() + 1,
                        detail: format!("rank of M^ext on faces {:?} is {r}, expected {}", ids(&current, &s), sub.e),
                    });
                }
                Some(r)
            }
            None => None,
        };
        let c = contract_with_map(&current, &s)?;
        stages.push(Stage {
            faces: ids(&current, &s),
            deficiency: sub.deficiency(),
            subgraph: sub.graph,
            kind,
            alternatives: sets.len(),
            merged: c.merged,
            dropped_faces: c.dropped_faces,
            rank,
        });
        current = c.graph;
    }
    let on_face = current.face_edges();
    let e_r = on_face.len();
    let f_r = current.num_faces();
    let unused_edges: Vec<usize> = (0..current.num_edges())
        .filter(|e| !on_face.contains(e))
        .map(|e| current.edges[e].id)
        .collect();
    let residual_rank = match labels {
        Some(_) => {
            let r = build_mext(&current, &current.labels())?.matrix.rank();
            let expected = e_r.min(3 * f_r);
            if r != expected {
                return Err(Error::SpecialPosition {
                    stage: stages.len() + 1,
                    detail: format!("rank of the residual M^ext is {r}, expected {expected}"),
                });
            }
            Some(r)
        }
        None => None,
    };
    let deficiency = e_r as i64 - 3 * f_r as i64;
    let dimension = unused_edges.len() + deficiency.max(0) as usize;
    let trace = ContractionTrace {
        stages,
        residual_kind: if f_r == 1 {
            ResidualKind::SingleFace
        } else {
            ResidualKind::NoContractibleSubset
        },
        residual: current,
        unused_edges,
        residual_deficiency: deficiency,
        clamped: deficiency < 0,
        residual_rank,
        dimension,
    };
    Ok((dimension, trace))
}

fn ids(g: &PlanarGraph, s: &[usize]) -> Vec<usize> {
    s.iter().map(|&f| g.faces[f].id).collect()
}

/// Errors if two of the given face sets share an edge.
pub(crate) fn check_shared_edges(g: &PlanarGraph, sets: &[Vec<usize>]) -> Result<()> {
    let edge_sets: Vec<BTreeSet<usize>> = sets
        .iter()
        .map(|s| s.iter().flat_map(|&f| g.faces[f].edges()).collect())
        .collect();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if !edge_sets[i].is_disjoint(&edge_sets[j]) {
                return Err(Error::SharedEdgeViolation {
                    first: ids(g, &sets[i]),
                    second: ids(g, &sets[j]),
                });
            }
        }
    }
    Ok(())
}
