use std::collections::{BTreeSet, HashSet, VecDeque};

use super::cycles::simple_cycles;
use super::dual::Orientation;
use super::greedy::greedy_maximal;
use super::EdgeInjectiveFn;
use crate::error::{Error, Result};
use crate::graph::PlanarGraph;

/// Largest number of face edges accepted by the exhaustive searches.
pub const ENUMERATION_EDGE_LIMIT: usize = 30;

/// Cap on functions (or search nodes) produced by one enumeration.
pub const ENUMERATION_LIMIT: usize = 200_000;

fn edge_guard(g: &PlanarGraph) -> Result<()> {
    let n = g.face_edges().len();
    if n > ENUMERATION_EDGE_LIMIT {
        return Err(Error::SizeGuard {
            what: "face edges",
            size: n,
            limit: ENUMERATION_EDGE_LIMIT,
        });
    }
    Ok(())
}

fn boundaries(g: &PlanarGraph) -> Vec<Vec<usize>> {
    g.faces
        .iter()
        .map(|f| {
            let mut v: Vec<usize> = f.edges().collect();
            v.sort_unstable();
            v
        })
        .collect()
}

/// All total edge-injective functions using only `allowed` edges.
fn total_within(g: &PlanarGraph, allowed: &[bool], limit: usize) -> Result<Vec<EdgeInjectiveFn>> {
    let bounds: Vec<Vec<usize>> = boundaries(g)
        .into_iter()
        .map(|b| b.into_iter().filter(|&e| allowed[e]).collect())
        .collect();
    let mut used = vec![false; g.num_edges()];
    let mut current = EdgeInjectiveFn::empty(g.num_faces());
    let mut out = Vec::new();
    fill(&bounds, 0, &mut used, &mut current, &mut out, limit)?;
    out.sort();
    Ok(out)
}

fn fill(
    bounds: &[Vec<usize>],
    f: usize,
    used: &mut [bool],
    current: &mut EdgeInjectiveFn,
    out: &mut Vec<EdgeInjectiveFn>,
    limit: usize,
) -> Result<()> {
    if f == bounds.len() {
        if out.len() >= limit {
            return Err(Error::SizeGuard {
                what: "edge-injective functions",
                size: out.len() + 1,
                limit,
            });
        }
        out.push(current.clone());
        return Ok(());
    }
    let free: Vec<usize> = bounds[f].iter().copied().filter(|&e| !used[e]).collect();
    for i in 0..free.len() {
        for j in i + 1..free.len() {
            for k in j + 1..free.len() {
                let triple = [free[i], free[j], free[k]];
                for &e in &triple {
                    used[e] = true;
                }
                current.assignment[f] = triple.into_iter().collect();
                let r = fill(bounds, f + 1, used, current, out, limit);
                for &e in &triple {
                    used[e] = false;
                }
                r?;
            }
        }
    }
    current.assignment[f].clear();
    Ok(())
}

/// Every total edge-injective function, by backtracking over per-face
/// 3-subsets with disjointness pruning.
pub fn brute_force_total(g: &PlanarGraph) -> Result<Vec<EdgeInjectiveFn>> {
    edge_guard(g)?;
    total_within(g, &vec![true; g.num_edges()], ENUMERATION_LIMIT)
}

/// Largest image of any edge-injective function, by branch and bound.
pub fn max_image_brute_force(g: &PlanarGraph) -> Result<usize> {
    edge_guard(g)?;
    let bounds = boundaries(g);
    let mut used = vec![false; g.num_edges()];
    let mut best = 0;
    best_from(&bounds, 0, 0, &mut used, &mut best);
    Ok(best)
}

fn best_from(bounds: &[Vec<usize>], f: usize, size: usize, used: &mut [bool], best: &mut usize) {
    if f == bounds.len() {
        *best = (*best).max(size);
        return;
    }
    let optimistic: usize = bounds[f..]
        .iter()
        .map(|b| b.iter().filter(|&&e| !used[e]).count().min(3))
        .sum();
    if size + optimistic <= *best {
        return;
    }
    let free: Vec<usize> = bounds[f].iter().copied().filter(|&e| !used[e]).collect();
    let take = free.len().min(3);
    for k in (0..=take).rev() {
        for chosen in crate::spline::subsets(free.len(), k) {
            for &c in &chosen {
                used[free[c]] = true;
            }
            best_from(bounds, f + 1, size + k, used, best);
            for &c in &chosen {
                used[free[c]] = false;
            }
        }
    }
}

/// Every function reachable from `start` by reversing simple directed
/// cycles of the induced dual orientation.
pub fn closure_by_reversal(g: &PlanarGraph, start: &EdgeInjectiveFn) -> Result<Vec<EdgeInjectiveFn>> {
    let first = Orientation::from_phi(g, start);
    let mut seen: BTreeSet<EdgeInjectiveFn> = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([first]);
    while let Some(o) = queue.pop_front() {
        for cycle in simple_cycles(&o) {
            let next = o.reversed(&cycle);
            let phi = next.to_phi();
            if seen.insert(phi) {
                if seen.len() > ENUMERATION_LIMIT {
                    return Err(Error::SizeGuard {
                        what: "edge-injective functions",
                        size: seen.len(),
                        limit: ENUMERATION_LIMIT,
                    });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// The set Φ of total edge-injective functions, computed by brute force and
/// by cycle-reversal closure from the greedy function; the two must agree.
///
/// When the graph has more face edges than `3f`, unused edges are discarded
/// first: Φ is taken over the image of the greedy function.
pub fn enumerate_all(g: &PlanarGraph) -> Result<Vec<EdgeInjectiveFn>> {
    edge_guard(g)?;
    let greedy = greedy_maximal(g);
    if !greedy.phi.is_total() {
        return Err(Error::NoneExists);
    }
    let mut allowed = vec![false; g.num_edges()];
    for e in greedy.phi.image() {
        allowed[e] = true;
    }
    let brute = total_within(g, &allowed, ENUMERATION_LIMIT)?;
    let closure = closure_by_reversal(g, &greedy.phi)?;
    if brute != closure {
        return Err(Error::EnumerationMismatch(format!(
            "brute force found {} functions, cycle reversal {}",
            brute.len(),
            closure.len()
        )));
    }
    if brute.is_empty() {
        return Err(Error::NoneExists);
    }
    Ok(brute)
}

/// Distinct images (sorted edge positions) of total edge-injective
/// functions. `limit` caps the number of search states visited.
pub fn total_images(g: &PlanarGraph, limit: usize) -> Result<Vec<Vec<usize>>> {
    let bounds = boundaries(g);
    let mut used = vec![false; g.num_edges()];
    let mut visited = HashSet::new();
    let mut images = BTreeSet::new();
    images_from(&bounds, 0, &mut used, &mut visited, &mut images, limit)?;
    Ok(images.into_iter().collect())
}

fn images_from(
    bounds: &[Vec<usize>],
    f: usize,
    used: &mut [bool],
    visited: &mut HashSet<(usize, Vec<bool>)>,
    images: &mut BTreeSet<Vec<usize>>,
    limit: usize,
) -> Result<()> {
    if !visited.insert((f, used.to_vec())) {
        return Ok(());
    }
    if visited.len() > limit {
        return Err(Error::SizeGuard {
            what: "edge-injective search states",
            size: visited.len(),
            limit,
        });
    }
    if f == bounds.len() {
        images.insert((0..used.len()).filter(|&e| used[e]).collect());
        return Ok(());
    }
    let free: Vec<usize> = bounds[f].iter().copied().filter(|&e| !used[e]).collect();
    for t in crate::spline::subsets(free.len(), 3) {
        for &c in &t {
            used[free[c]] = true;
        }
        let r = images_from(bounds, f + 1, used, visited, images, limit);
        for &c in &t {
            used[free[c]] = false;
        }
        r?;
    }
    Ok(())
}
