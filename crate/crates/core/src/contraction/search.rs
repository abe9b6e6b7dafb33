//! Finding minimal contractible face sets.

use std::collections::BTreeSet;

use crate::graph::PlanarGraph;
use crate::injective::{build_dual, greedy_maximal, greedy_with_demand};

/// Face counts up to which [`minimal_contractible_sets`] is exhaustive.
pub const EXHAUSTIVE_FACE_LIMIT: usize = 16;

/// Connected face sets up to this size are always searched.
pub const SMALL_SUBSET_SIZE: usize = 6;

const SMALL_SUBSET_BUDGET: usize = 200_000;

/// `(contractible, e_S, f_S)` for the faces at positions `s`.
pub fn is_contractible(g: &PlanarGraph, s: &[usize]) -> (bool, usize, usize) {
    let sub = g.subgraph_from_faces(s);
    (sub.e <= 3 * sub.f, sub.e, sub.f)
}

fn deficiency_ok(edge_masks: &[Vec<u64>], s: &[usize]) -> bool {
    let words = edge_masks.first().map_or(0, Vec::len);
    let mut union = vec![0u64; words];
    for &f in s {
        for (u, m) in union.iter_mut().zip(&edge_masks[f]) {
            *u |= m;
        }
    }
    let e: u32 = union.iter().map(|w| w.count_ones()).sum();
    e as usize <= 3 * s.len()
}

fn edge_masks(g: &PlanarGraph) -> Vec<Vec<u64>> {
    let words = g.num_edges().div_ceil(64).max(1);
    g.faces
        .iter()
        .map(|f| {
            let mut m = vec![0u64; words];
            for e in f.edges() {
                m[e / 64] |= 1 << (e % 64);
            }
            m
        })
        .collect()
}

/// All minimal contractible subsets of `faces` (positions in `g`), found by
/// a pass over every subset. The full set is a candidate only when
/// `include_full` is set.
fn exhaustive_within(g: &PlanarGraph, faces: &[usize], include_full: bool) -> Vec<Vec<usize>> {
    let n = faces.len();
    assert!(n <= EXHAUSTIVE_FACE_LIMIT, "exhaustive search over {n} faces");
    let masks = edge_masks(g);
    let words = masks.first().map_or(1, Vec::len);
    let size = 1usize << n;
    let mut union = vec![vec![0u64; words]; size];
    let mut contractible = vec![false; size];
    let mut has = vec![false; size];
    let mut out = Vec::new();
    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        let mut u = union[rest].clone();
        for (w, m) in u.iter_mut().zip(&masks[faces[low]]) {
            *w |= m;
        }
        let e: u32 = u.iter().map(|w| w.count_ones()).sum();
        union[s] = u;
        let is_full = s == size - 1;
        contractible[s] = (e as usize) <= 3 * s.count_ones() as usize && (include_full || !is_full);
        let below = (0..n).any(|i| s & (1 << i) != 0 && has[s ^ (1 << i)]);
        has[s] = contractible[s] || below;
        if contractible[s] && !below {
            out.push((0..n).filter(|&i| s & (1 << i) != 0).map(|i| faces[i]).collect());
        }
    }
    out.sort();
    out
}

/// Connected face sets of size at most `k`, each produced once.
fn connected_subsets(g: &PlanarGraph, k: usize, budget: usize) -> Vec<Vec<usize>> {
    let dual = build_dual(g);
    let n = g.num_faces();
    let adj: Vec<BTreeSet<usize>> = (0..n).map(|f| dual.neighbours(f).into_iter().collect()).collect();
    let mut out = Vec::new();
    for root in 0..n {
        let ext: Vec<usize> = adj[root].iter().copied().filter(|&w| w > root).collect();
        grow(&adj, root, &mut vec![root], ext, k, &mut out, budget);
        if out.len() >= budget {
            break;
        }
    }
    out
}

fn grow(
    adj: &[BTreeSet<usize>],
    root: usize,
    sub: &mut Vec<usize>,
    mut ext: Vec<usize>,
    k: usize,
    out: &mut Vec<Vec<usize>>,
    budget: usize,
) {
    if out.len() >= budget {
        return;
    }
    let mut sorted = sub.clone();
    sorted.sort_unstable();
    out.push(sorted);
    if sub.len() == k {
        return;
    }
    while let Some(w) = ext.pop() {
        let mut next = ext.clone();
        for &u in &adj[w] {
            let exclusive = u > root
                && !sub.contains(&u)
                && u != w
                && !next.contains(&u)
                && sub.iter().all(|&x| !adj[x].contains(&u));
            if exclusive {
                next.push(u);
            }
        }
        sub.push(w);
        grow(adj, root, sub, next, k, out, budget);
        sub.pop();
    }
}

/// Shrinks a contractible set to a minimal one inside it.
fn minimize(g: &PlanarGraph, s: &[usize], masks: &[Vec<u64>]) -> Vec<Vec<usize>> {
    let mut cur = s.to_vec();
    if cur.len() > EXHAUSTIVE_FACE_LIMIT {
        let mut i = 0;
        while i < cur.len() {
            let mut trial = cur.clone();
            trial.remove(i);
            if !trial.is_empty() && deficiency_ok(masks, &trial) {
                cur = trial;
            } else {
                i += 1;
            }
        }
    }
    if cur.len() <= EXHAUSTIVE_FACE_LIMIT {
        exhaustive_within(g, &cur, true)
    } else {
        vec![cur]
    }
}

/// Minimal contractible proper subsets of the faces, as sorted position
/// lists in lexicographic order.
///
/// Exhaustive up to [`EXHAUSTIVE_FACE_LIMIT`] faces. Beyond that the
/// candidates are the stalled sets of the greedy construction (also with
/// one face asking for a fourth edge, which exposes sets with `e = 3f`) and
/// all connected sets of at most [`SMALL_SUBSET_SIZE`] faces, each shrunk to
/// a minimal set.
pub fn minimal_contractible_sets(g: &PlanarGraph) -> Vec<Vec<usize>> {
    let n = g.num_faces();
    if n <= EXHAUSTIVE_FACE_LIMIT {
        let all: Vec<usize> = (0..n).collect();
        return exhaustive_within(g, &all, false);
    }
    let masks = edge_masks(g);
    let mut candidates: BTreeSet<Vec<usize>> = greedy_maximal(g).stalls.into_iter().collect();
    for f0 in 0..n {
        let mut demand = vec![3; n];
        demand[f0] = 4;
        candidates.extend(greedy_with_demand(g, &demand, Some(f0)).stalls);
    }
    candidates.extend(
        connected_subsets(g, SMALL_SUBSET_SIZE, SMALL_SUBSET_BUDGET)
            .into_iter()
            .filter(|s| deficiency_ok(&masks, s)),
    );
    let mut found = BTreeSet::new();
    for c in candidates {
        if c.len() == n || !deficiency_ok(&masks, &c) {
            continue;
        }
        found.extend(minimize(g, &c, &masks));
    }
    let found: Vec<Vec<usize>> = found.into_iter().collect();
    found
        .iter()
        .filter(|s| {
            !found
                .iter()
                .any(|t| t.len() < s.len() && t.iter().all(|x| s.contains(x)))
        })
        .cloned()
        .collect()
}

/// The lexicographically least minimal contractible proper subset.
pub fn find_minimal_contractible(g: &PlanarGraph) -> Option<Vec<usize>> {
    minimal_contractible_sets(g).into_iter().next()
}
