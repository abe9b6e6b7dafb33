use std::collections::{BTreeSet, VecDeque};

use super::dual::{build_dual, DualGraph};
use super::EdgeInjectiveFn;
use crate::graph::PlanarGraph;

/// Result of the greedy construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Greedy {
    pub phi: EdgeInjectiveFn,
    /// Edges (positions) outside the image, including edges on no face.
    pub leftover: Vec<usize>,
    /// Face sets (positions) reachable from a face whose augmentation
    /// stalled. Every edge on such a set is owned inside it and the set owns
    /// fewer edges than its demand, so it is contractible.
    pub stalls: Vec<Vec<usize>>,
    /// Order in which faces were saturated.
    pub order: Vec<usize>,
}

/// Maximal edge-injective function with three edges demanded per face.
pub fn greedy_maximal(g: &PlanarGraph) -> Greedy {
    greedy_with_demand(g, &vec![3; g.num_faces()], None)
}

/// Breadth-first over the dual starting from the face with the most
/// boundary-only edges; ties and restarts go to the smallest position.
fn face_order(dual: &DualGraph, first: Option<usize>) -> Vec<usize> {
    let n = dual.vertices;
    let loops: Vec<usize> = (0..n).map(|f| dual.loops_at(f)).collect();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut start = first;
    while order.len() < n {
        let s = start.take().unwrap_or_else(|| {
            (0..n)
                .filter(|&f| !seen[f])
                .max_by(|&a, &b| loops[a].cmp(&loops[b]).then(b.cmp(&a)))
                .expect("unvisited face")
        });
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(f) = queue.pop_front() {
            order.push(f);
            for w in dual.neighbours(f) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// Greedy saturation with augmenting paths for per-face demands.
///
/// Each face in turn takes free edges from its own boundary; when none are
/// left it searches breadth-first for a path of faces `F = X0, X1, …, Xk`
/// where `X_{i+1}` owns an edge of `X_i` and `Xk` still has a free edge,
/// then shifts one edge down the path. Faces found in a stalled search are
/// cached: no later search can get an edge out of them.
///
/// `first` forces the face processed first (used to boost one face's
/// demand when hunting for tight face sets).
pub fn greedy_with_demand(g: &PlanarGraph, demand: &[usize], first: Option<usize>) -> Greedy {
    let n = g.num_faces();
    let dual = build_dual(g);
    let order = face_order(&dual, first);
    let boundary: Vec<Vec<usize>> = g
        .faces
        .iter()
        .map(|f| {
            let mut v: Vec<usize> = f.edges().collect();
            v.sort_unstable();
            v
        })
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; g.num_edges()];
    let mut owned: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut dead = vec![false; n];
    let mut stalls = Vec::new();

    for &f in &order {
        for &e in &boundary[f] {
            if owned[f].len() >= demand[f] {
                break;
            }
            if owner[e].is_none() {
                owner[e] = Some(f);
                owned[f].insert(e);
            }
        }
        while owned[f].len() < demand[f] {
            match augment(f, &boundary, &mut owner, &mut owned, &dead) {
                Ok(()) => {}
                Err(reached) => {
                    for &x in &reached {
                        dead[x] = true;
                    }
                    stalls.push(reached);
                    break;
                }
            }
        }
    }

    let phi = EdgeInjectiveFn { assignment: owned };
    let image: BTreeSet<usize> = phi.image().into_iter().collect();
    Greedy {
        leftover: (0..g.num_edges()).filter(|e| !image.contains(e)).collect(),
        phi,
        stalls,
        order,
    }
}

/// One augmentation for face `f`; on failure returns the sorted set of
/// faces reached.
fn augment(
    f: usize,
    boundary: &[Vec<usize>],
    owner: &mut [Option<usize>],
    owned: &mut [BTreeSet<usize>],
    dead: &[bool],
) -> Result<(), Vec<usize>> {
    let n = owned.len();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut visited = vec![false; n];
    visited[f] = true;
    let mut queue = VecDeque::from([f]);
    while let Some(x) = queue.pop_front() {
        if let Some(&free) = boundary[x].iter().find(|&&e| owner[e].is_none()) {
            owner[free] = Some(x);
            owned[x].insert(free);
            // Walk back: each parent takes the edge its child gave up.
            let mut child = x;
            while let Some((p, e)) = parent[child] {
                owned[child].remove(&e);
                owned[p].insert(e);
                owner[e] = Some(p);
                child = p;
            }
            return Ok(());
        }
        for &e in &boundary[x] {
            if let Some(y) = owner[e] {
                if y != x && !visited[y] && !dead[y] {
                    visited[y] = true;
                    parent[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
    }
    Err((0..n).filter(|&x| visited[x]).collect())
}
