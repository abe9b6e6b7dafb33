#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use splinedim::algebra::{rational, Rational};
use splinedim::graph::{EdgeLabel, GraphBuilder, PlanarGraph};
use splinedim::triangulation::Triangulation;

/// One traversal of an edge along a walk.
#[derive(Clone, Copy)]
struct Step {
    edge: usize,
    from: usize,
    to: usize,
    /// Along the edge's direction; needed to tell the two ways round a loop.
    forward: bool,
}

struct Grower {
    edges: usize,
    b: GraphBuilder,
    names: usize,
    /// Outer boundary as a clockwise closed walk.
    outer: Vec<Step>,
    faces: usize,
}

impl Grower {
    fn vertex(&mut self) -> usize {
        let v = self.names;
        self.names += 1;
        self.b.vertex(&format!("v{v}"));
        v
    }

    fn edge(&mut self, rng: &mut impl Rng, from: usize, to: usize) -> Step {
        let forward = rng.gen_bool(0.5);
        let (t, h) = if forward { (from, to) } else { (to, from) };
        let id = self.b.edge(&format!("v{t}"), &format!("v{h}"));
        self.edges += 1;
        Step { edge: id, from, to, forward }
    }

    fn face(&mut self, walk: &[Step]) {
        let entries: Vec<(usize, i64)> = walk
            .iter()
            .map(|s| (s.edge, if s.forward { 1 } else { -1 }))
            .collect();
        self.b.face(&entries);
        self.faces += 1;
    }

    fn path(&mut self, rng: &mut impl Rng, u: usize, v: usize, len: usize) -> Vec<Step> {
        let mut steps = Vec::new();
        let mut cur = u;
        for k in 0..len {
            let next = if k + 1 == len { v } else { self.vertex() };
            steps.push(self.edge(rng, cur, next));
            cur = next;
        }
        steps
    }
}

/// A random valid graph: a first face, then ears glued along a stretch of
/// the outer boundary, then a few pendant edges. Faces hug the boundary, so
/// the result is a disk with cut vertices allowed.
pub fn random_graph(rng: &mut impl Rng, max_faces: usize, max_edges: usize) -> PlanarGraph {
    let mut g = Grower {
        b: GraphBuilder::new(),
        names: 0,
        outer: Vec::new(),
        edges: 0,
        faces: 0,
    };
    let k = *[1usize, 2, 3, 3, 3, 4, 4, 5].get(rng.gen_range(0..8)).unwrap();
    let k = k.min(max_edges);
    let first = g.vertex();
    let mut cur = first;
    let mut walk = Vec::new();
    for i in 0..k {
        let next = if i + 1 == k { first } else { g.vertex() };
        walk.push(g.edge(rng, cur, next));
        cur = next;
    }
    g.face(&walk);
    g.outer = walk;
    let target = rng.gen_range(1..=max_faces);
    let mut attempts = 0;
    while g.faces < target && attempts < 50 {
        attempts += 1;
        let n = g.outer.len();
        // shared stretch: mostly one edge; zero glues a petal at a vertex
        let s = match rng.gen_range(0..20) {
            0 | 1 => 0,
            2..=14 => 1,
            15..=17 => 2,
            _ => 3,
        };
        // sharing the whole boundary would enclose the old disk
        if s >= n {
            continue;
        }
        let len = rng.gen_range(1..=4usize);
        if g.edges + len > max_edges {
            continue;
        }
        let start = rng.gen_range(0..n);
        let seg: Vec<Step> = (0..s).map(|i| g.outer[(start + i) % n]).collect();
        let u = g.outer[start].from;
        let v = seg.last().map_or(u, |st| st.to);
        let new_path = g.path(rng, u, v, len);
        let mut face: Vec<Step> = seg
            .iter()
            .rev()
            .map(|st| Step {
                edge: st.edge,
                from: st.to,
                to: st.from,
                forward: !st.forward,
            })
            .collect();
        face.extend(new_path.iter().copied());
        g.face(&face);
        let mut outer = Vec::with_capacity(n - s + len);
        outer.extend(new_path);
        for i in 0..(n - s) {
            outer.push(g.outer[(start + s + i) % n]);
        }
        g.outer = outer;
    }
    let leaves = rng.gen_range(0..=2usize);
    for _ in 0..leaves {
        if g.edges >= max_edges {
            break;
        }
        let at = rng.gen_range(0..g.names);
        let w = g.vertex();
        g.edge(rng, at, w);
    }
    g.b.build()
}

/// Distinct random slopes, one per edge position.
pub fn random_slopes(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    let mut seen = BTreeSet::new();
    while seen.len() < n {
        seen.insert(rational::frac(rng.gen_range(-400..=400), rng.gen_range(1..=23)));
    }
    let mut v: Vec<Rational> = seen.into_iter().collect();
    // shuffle so edge order is unrelated to size
    for i in (1..v.len()).rev() {
        v.swap(i, rng.gen_range(0..=i));
    }
    v
}

pub fn homogeneous_labels(slopes: &[Rational]) -> Vec<Option<EdgeLabel>> {
    slopes.iter().map(|a| Some(EdgeLabel::homogeneous(a.clone()))).collect()
}

/// Slopes by variable index for polynomial evaluation.
pub fn assignment(g: &PlanarGraph, slopes: &[Rational]) -> Vec<Option<Rational>> {
    g.with_slopes(slopes).slope_assignment()
}

/// A triangle subdivided by random point insertions inside triangles and on
/// interior edges.
pub fn random_subdivided_triangle(rng: &mut impl Rng, insertions: usize) -> Triangulation {
    let p = |x: i64, y: i64| (rational::int(x), rational::int(y));
    let mut points = vec![p(0, 0), p(97, 3), p(31, 89)];
    let mut triangles: Vec<[usize; 3]> = vec![[0, 1, 2]];
    for _ in 0..insertions {
        let t = Triangulation::new(points.clone(), triangles.clone());
        let interior = t.interior_edges();
        if !interior.is_empty() && rng.gen_bool(0.3) {
            let (a, b) = interior[rng.gen_range(0..interior.len())];
            let w = rational::frac(rng.gen_range(1..=9), 10);
            let (pa, pb) = (&points[a], &points[b]);
            let q = (&pa.0 + (&pb.0 - &pa.0) * &w, &pa.1 + (&pb.1 - &pa.1) * &w);
            let qi = points.len();
            points.push(q);
            let mut next = Vec::new();
            for tri in &triangles {
                if tri.contains(&a) && tri.contains(&b) {
                    let c = *tri.iter().find(|&&x| x != a && x != b).unwrap();
                    next.push([a, qi, c]);
                    next.push([qi, b, c]);
                } else {
                    next.push(*tri);
                }
            }
            triangles = next;
        } else {
            let k = rng.gen_range(0..triangles.len());
            let [a, b, c] = triangles[k];
            let w: Vec<i64> = (0..3).map(|_| rng.gen_range(1..=7)).collect();
            let sum = rational::int(w.iter().sum());
            let coord = |f: fn(&(Rational, Rational)) -> &Rational| {
                (f(&points[a]) * rational::int(w[0]) + f(&points[b]) * rational::int(w[1]) + f(&points[c]) * rational::int(w[2]))
                    / &sum
            };
            let q = (coord(|p| &p.0), coord(|p| &p.1));
            let qi = points.len();
            points.push(q);
            triangles.swap_remove(k);
            triangles.extend([[a, b, qi], [b, c, qi], [c, a, qi]]);
        }
    }
    Triangulation::new(points, triangles)
}

/// One region `R` of a subdivided triangle, a union of triangles on interior
/// points bounded by a simple cycle `B`, measured in `G*_φ`.
#[derive(Clone, Debug)]
pub struct CycleSample {
    pub n: usize,
    /// Arcs of `R` off `B` whose head lies on `B`.
    pub m: usize,
    pub vertices: usize,
    pub edges: usize,
}

fn sorted_pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Boundary edges and vertex count when `tris` is a disk with a simple
/// boundary cycle.
fn disk_boundary(tris: &[[usize; 3]]) -> Option<(BTreeSet<(usize, usize)>, BTreeSet<usize>)> {
    let mut count = std::collections::BTreeMap::new();
    for t in tris {
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            *count.entry(sorted_pair(a, b)).or_insert(0) += 1;
        }
    }
    let boundary: BTreeSet<(usize, usize)> = count.iter().filter(|(_, &c)| c == 1).map(|(&e, _)| e).collect();
    let vertices: BTreeSet<usize> = tris.iter().flatten().copied().collect();
    let on_b: BTreeSet<usize> = boundary.iter().flat_map(|&(a, b)| [a, b]).collect();
    // simple cycle: every boundary vertex has boundary degree 2, and one loop
    for &v in &on_b {
        if boundary.iter().filter(|&&(a, b)| a == v || b == v).count() != 2 {
            return None;
        }
    }
    let start = *on_b.iter().next()?;
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(a, b) in &boundary {
            let w = if a == v { b } else if b == v { a } else { continue };
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    let euler = vertices.len() as i64 - count.len() as i64 + tris.len() as i64;
    (seen.len() == on_b.len() && euler == 1).then_some((boundary, on_b))
}

/// Samples regions of random subdivided triangles and measures `n`, `m`.
pub fn cycle_samples(rng: &mut impl Rng, count: usize) -> Vec<CycleSample> {
    use splinedim::injective::{greedy_maximal, Orientation};

    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count && tries < 50 * count {
        tries += 1;
        let insertions = rng.gen_range(8..=20);
        let t = random_subdivided_triangle(rng, insertions);
        let (x0, y0) = t.auto_rotation();
        let t = t.rotated(&x0, &y0).unwrap();
        let d = t.dualize().unwrap();
        let r = greedy_maximal(&d.graph);
        assert!(r.phi.is_total(), "dual of a subdivided triangle has a total function");
        let o = Orientation::from_phi(&d.graph, &r.phi);
        let interior: BTreeSet<usize> = t.interior_vertices().into_iter().collect();
        let candidates: Vec<[usize; 3]> =
            t.triangles.iter().copied().filter(|tri| tri.iter().all(|p| interior.contains(p))).collect();
        if candidates.is_empty() {
            continue;
        }
        let mut region = vec![candidates[rng.gen_range(0..candidates.len())]];
        let steps = rng.gen_range(0..12);
        for _ in 0..steps {
            let edges: BTreeSet<(usize, usize)> = region
                .iter()
                .flat_map(|t| [sorted_pair(t[0], t[1]), sorted_pair(t[1], t[2]), sorted_pair(t[2], t[0])])
                .collect();
            let next: Vec<[usize; 3]> = candidates
                .iter()
                .copied()
                .filter(|c| !region.contains(c))
                .filter(|c| [sorted_pair(c[0], c[1]), sorted_pair(c[1], c[2]), sorted_pair(c[2], c[0])].iter().any(|e| edges.contains(e)))
                .collect();
            if next.is_empty() {
                break;
            }
            let c = next[rng.gen_range(0..next.len())];
            let mut grown = region.clone();
            grown.push(c);
            if disk_boundary(&grown).is_some() {
                region = grown;
            }
        }
        let (boundary, on_b) = disk_boundary(&region).expect("region stays a disk");
        let position: std::collections::BTreeMap<(usize, usize), usize> =
            d.edge_points.iter().enumerate().map(|(i, &(p, q))| (sorted_pair(p, q), i)).collect();
        let edges: BTreeSet<(usize, usize)> = region
            .iter()
            .flat_map(|t| [sorted_pair(t[0], t[1]), sorted_pair(t[1], t[2]), sorted_pair(t[2], t[0])])
            .collect();
        let mut m = 0;
        for e in edges.iter().filter(|e| !boundary.contains(e)) {
            let pos = position[e];
            let arc = o.arcs.iter().find(|a| a.edge == pos).expect("every edge is assigned");
            if on_b.contains(&d.face_points[arc.to]) {
                m += 1;
            }
        }
        let vertices = region.iter().flatten().copied().collect::<BTreeSet<_>>().len();
        out.push(CycleSample {
            n: on_b.len(),
            m,
            vertices,
            edges: edges.len(),
        });
    }
    out
}
