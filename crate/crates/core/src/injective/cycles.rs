use std::collections::HashMap;

use super::dual::Orientation;
use crate::error::{Error, Result};

/// Largest number of non-loop arcs [`count_directed_cycles`] accepts.
pub const CYCLE_COUNT_LIMIT: usize = 40;

/// Simple directed cycles through non-loop arcs, as lists of arc indices.
///
/// Each cycle is reported once, rooted at its smallest vertex; parallel arcs
/// give distinct cycles.
pub fn simple_cycles(o: &Orientation) -> Vec<Vec<usize>> {
    let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); o.vertices];
    for i in o.non_loop_arcs() {
        out_arcs[o.arcs[i].from].push(i);
    }
    let mut cycles = Vec::new();
    let mut on_path = vec![false; o.vertices];
    let mut path = Vec::new();
    for s in 0..o.vertices {
        on_path[s] = true;
        walk(o, &out_arcs, s, s, &mut on_path, &mut path, &mut cycles);
        on_path[s] = false;
    }
    cycles
}

fn walk(
    o: &Orientation,
    out_arcs: &[Vec<usize>],
    s: usize,
    v: usize,
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    cycles: &mut Vec<Vec<usize>>,
) {
    for &i in &out_arcs[v] {
        let w = o.arcs[i].to;
        if w == s {
            path.push(i);
            cycles.push(path.clone());
            path.pop();
        } else if w > s && !on_path[w] {
            on_path[w] = true;
            path.push(i);
            walk(o, out_arcs, s, w, on_path, path, cycles);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Number of nonempty sets of non-loop arcs in which every vertex has equal
/// in- and out-degree. These are exactly the edge-disjoint unions of simple
/// directed cycles, so vertex-disjoint unions count once as a whole.
pub fn count_directed_cycles(o: &Orientation) -> Result<u64> {
    let arcs = o.non_loop_arcs();
    if arcs.len() > CYCLE_COUNT_LIMIT {
        return Err(Error::SizeGuard {
            what: "non-loop dual arcs",
            size: arcs.len(),
            limit: CYCLE_COUNT_LIMIT,
        });
    }
    // Index after which a vertex is never touched again, so its balance
    // must be settled by then.
    let mut last = vec![None; o.vertices];
    for (k, &i) in arcs.iter().enumerate() {
        last[o.arcs[i].from] = Some(k);
        last[o.arcs[i].to] = Some(k);
    }
    let mut memo = HashMap::new();
    let balance = vec![0i32; o.vertices];
    Ok(count_from(o, &arcs, &last, 0, balance, &mut memo) - 1)
}

fn count_from(
    o: &Orientation,
    arcs: &[usize],
    last: &[Option<usize>],
    k: usize,
    balance: Vec<i32>,
    memo: &mut HashMap<(usize, Vec<i32>), u64>,
) -> u64 {
    if k == arcs.len() {
        return u64::from(balance.iter().all(|&b| b == 0));
    }
    if let Some(&c) = memo.get(&(k, balance.clone())) {
        return c;
    }
    let a = o.arcs[arcs[k]];
    let settled = |b: &[i32]| [a.from, a.to].iter().all(|&v| last[v] != Some(k) || b[v] == 0);
    let mut total = 0;
    if settled(&balance) {
        total += count_from(o, arcs, last, k + 1, balance.clone(), memo);
    }
    let mut with = balance.clone();
    with[a.from] += 1;
    with[a.to] -= 1;
    if settled(&with) {
        total += count_from(o, arcs, last, k + 1, with, memo);
    }
    memo.insert((k, balance), total);
    total
}
