//! Edge-injective functions: each face picks at most three of its own
//! edges, with no edge picked twice. A total one (three per face) selects a
//! nonvanishing block term in the Leibniz expansion of a maximal minor of
//! `M^ext`, and orients the dual graph so every face has in-degree three.

mod coloring;
mod cycles;
mod dual;
mod enumerate;
mod expansion;
mod greedy;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

pub use coloring::{find_coloring, ColoredOrientation};
pub use cycles::{count_directed_cycles, simple_cycles, CYCLE_COUNT_LIMIT};
pub use dual::{build_dual, Arc, DualEdge, DualEnds, DualGraph, Orientation};
pub use enumerate::{
    brute_force_total, closure_by_reversal, enumerate_all, max_image_brute_force, total_images, ENUMERATION_EDGE_LIMIT,
    ENUMERATION_LIMIT,
};
pub use expansion::{det_expansion, functions_with_image};
pub use greedy::{greedy_maximal, greedy_with_demand, Greedy};

use crate::graph::PlanarGraph;

/// Assignment of edges (by position) to faces (by position).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeInjectiveFn {
    pub assignment: Vec<BTreeSet<usize>>,
}

impl EdgeInjectiveFn {
    pub fn empty(faces: usize) -> Self {
        EdgeInjectiveFn {
            assignment: vec![BTreeSet::new(); faces],
        }
    }

    pub fn image(&self) -> Vec<usize> {
        let mut img: Vec<usize> = self.assignment.iter().flatten().copied().collect();
        img.sort_unstable();
        img
    }

    pub fn image_size(&self) -> usize {
        self.assignment.iter().map(BTreeSet::len).sum()
    }

    /// Three edges on every face.
    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(|s| s.len() == 3)
    }

    /// Checks the defining conditions against `g`.
    pub fn is_valid_for(&self, g: &PlanarGraph) -> bool {
        if self.assignment.len() != g.num_faces() {
            return false;
        }
        let mut used = BTreeSet::new();
        for (f, set) in self.assignment.iter().enumerate() {
            if set.len() > 3 {
                return false;
            }
            for &e in set {
                if g.faces[f].sign_of(e).is_none() || !used.insert(e) {
                    return false;
                }
            }
        }
        true
    }

    /// Face id → sorted edge ids, the wire form.
    pub fn to_ids(&self, g: &PlanarGraph) -> BTreeMap<String, Vec<usize>> {
        self.assignment
            .iter()
            .enumerate()
            .map(|(f, set)| {
                let mut ids: Vec<usize> = set.iter().map(|&e| g.edges[e].id).collect();
                ids.sort_unstable();
                (g.faces[f].id.to_string(), ids)
            })
            .collect()
    }
}

/// Wire form `{"assignment":{"0":[1,2,3]},"leftover":[8]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssignmentJson {
    pub assignment: BTreeMap<String, Vec<usize>>,
    pub leftover: Vec<usize>,
}

impl AssignmentJson {
    pub fn new(g: &PlanarGraph, phi: &EdgeInjectiveFn) -> Self {
        let image: BTreeSet<usize> = phi.image().into_iter().collect();
        AssignmentJson {
            assignment: phi.to_ids(g),
            leftover: (0..g.num_edges()).filter(|e| !image.contains(e)).map(|e| g.edges[e].id).collect(),
        }
    }
}
