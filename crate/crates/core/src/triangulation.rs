//! Planar triangulations and their labeled dual graphs.
//!
//! The dual has one vertex per triangle and one edge per interior edge of
//! the triangulation; its faces are the fans of triangles around interior
//! vertices. The dual edge crossing the segment on the line
//! `αx + βy + γ = 0` is labeled `(x + (β/α) y + γ/α)²`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{rational, Rational};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeLabel, FaceCycle, FaceEntry, PlanarGraph, Sign};

pub type Point = (Rational, Rational);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub points: Vec<Point>,
    pub triangles: Vec<[usize; 3]>,
}

#[derive(Serialize, Deserialize)]
struct TriangulationJson {
    points: Vec<PointJson>,
    triangles: Vec<[usize; 3]>,
}

#[derive(Serialize, Deserialize)]
struct PointJson(
    #[serde(with = "rational::serde_str")] Rational,
    #[serde(with = "rational::serde_str")] Rational,
);

/// `α x + β y + γ = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Line {
    #[serde(with = "rational::serde_str")]
    pub alpha: Rational,
    #[serde(with = "rational::serde_str")]
    pub beta: Rational,
    #[serde(with = "rational::serde_str")]
    pub gamma: Rational,
}

impl Line {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        Line { alpha, beta, gamma }
    }

    pub fn through(p: &Point, q: &Point) -> Line {
        let alpha = &q.1 - &p.1;
        let beta = &p.0 - &q.0;
        let gamma = -(&alpha * &p.0) - &beta * &p.1;
        Line { alpha, beta, gamma }
    }

    /// The line in the coordinates `(X, Y)` with
    /// `(x, y) = (x0 X − y0 Y, y0 X + x0 Y)`.
    pub fn rotated(&self, x0: &Rational, y0: &Rational) -> Line {
        Line {
            alpha: &self.alpha * x0 + &self.beta * y0,
            beta: &self.beta * x0 - &self.alpha * y0,
            gamma: self.gamma.clone(),
        }
    }

    /// The monic label, or `None` for a horizontal line.
    pub fn label(&self) -> Option<EdgeLabel> {
        EdgeLabel::from_line(&self.alpha, &self.beta, &self.gamma)
    }

    pub fn contains(&self, p: &Point) -> bool {
        (&self.alpha * &p.0 + &self.beta * &p.1 + &self.gamma).is_zero()
    }
}

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Counterclockwise angular order of direction vectors, starting from the
/// positive x axis.
fn angle_cmp(u: &Point, v: &Point) -> Ordering {
    let half = |p: &Point| u8::from(!(p.1.is_positive() || (p.1.is_zero() && p.0.is_positive())));
    half(u).cmp(&half(v)).then_with(|| {
        let c = &u.0 * &v.1 - &u.1 * &v.0;
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// The dual graph with its geometric bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dual {
    /// Dual graph with the non-homogeneous labels attached.
    pub graph: PlanarGraph,
    /// Supporting line per dual edge (by position).
    pub lines: Vec<Line>,
    /// Endpoints (point indices) of the interior edge per dual edge.
    pub edge_points: Vec<(usize, usize)>,
    /// Interior point per face.
    pub face_points: Vec<usize>,
}

impl Dual {
    pub fn labels(&self) -> Vec<Option<EdgeLabel>> {
        self.graph.labels()
    }
}

impl Triangulation {
    pub fn new(points: Vec<Point>, triangles: Vec<[usize; 3]>) -> Self {
        Triangulation { points, triangles }
    }

    /// `{"points":[["0","1"],...],"triangles":[[0,1,2],...]}`; coordinates
    /// may also be JSON integers.
    pub fn from_json(text: &str) -> Result<Triangulation> {
        let raw: TriangulationJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Triangulation {
            points: raw.points.into_iter().map(|PointJson(x, y)| (x, y)).collect(),
            triangles: raw.triangles,
        })
    }

    pub fn to_json_string(&self) -> String {
        let raw = TriangulationJson {
            points: self.points.iter().map(|(x, y)| PointJson(x.clone(), y.clone())).collect(),
            triangles: self.triangles.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("triangulation serializes")
    }

    /// Undirected edge `(min, max)` → triangles containing it.
    pub fn edge_map(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let mut map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (t, tri) in self.triangles.iter().enumerate() {
            for k in 0..3 {
                let (p, q) = (tri[k], tri[(k + 1) % 3]);
                map.entry((p.min(q), p.max(q))).or_default().push(t);
            }
        }
        map
    }

    pub fn validate(&self) -> Result<()> {
        for (t, tri) in self.triangles.iter().enumerate() {
            if let Some(&bad) = tri.iter().find(|&&p| p >= self.points.len()) {
                return Err(Error::InvalidTriangulation(format!("triangle {t} uses missing point {bad}")));
            }
            if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                return Err(Error::Degenerate(t));
            }
            let [a, b, c] = tri.map(|i| &self.points[i]);
            if cross(a, b, c).is_zero() {
                return Err(Error::Degenerate(t));
            }
        }
        for (&(p, q), ts) in &self.edge_map() {
            if ts.len() > 2 {
                return Err(Error::InvalidTriangulation(format!(
                    "edge ({p}, {q}) lies in {} triangles",
                    ts.len()
                )));
            }
            let (a, b) = (&self.points[p], &self.points[q]);
            for (r, pt) in self.points.iter().enumerate() {
                if r == p || r == q || !cross(a, b, pt).is_zero() {
                    continue;
                }
                let along = (&pt.0 - &a.0) * (&b.0 - &a.0) + (&pt.1 - &a.1) * (&b.1 - &a.1);
                let len = (&b.0 - &a.0) * (&b.0 - &a.0) + (&b.1 - &a.1) * (&b.1 - &a.1);
                if along.is_positive() && along < len {
                    return Err(Error::InvalidTriangulation(format!(
                        "point {r} lies inside edge ({p}, {q}); the triangulation is not edge-to-edge"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Edges shared by two triangles, sorted.
    pub fn interior_edges(&self) -> Vec<(usize, usize)> {
        self.edge_map().into_iter().filter(|(_, ts)| ts.len() == 2).map(|(e, _)| e).collect()
    }

    pub fn boundary_edges(&self) -> Vec<(usize, usize)> {
        self.edge_map().into_iter().filter(|(_, ts)| ts.len() == 1).map(|(e, _)| e).collect()
    }

    /// Points used by some triangle and lying on no boundary edge, sorted.
    pub fn interior_vertices(&self) -> Vec<usize> {
        let mut used = vec![false; self.points.len()];
        for tri in &self.triangles {
            for &p in tri {
                used[p] = true;
            }
        }
        for (p, q) in self.boundary_edges() {
            used[p] = false;
            used[q] = false;
        }
        (0..self.points.len()).filter(|&p| used[p]).collect()
    }

    /// Points on the boundary, sorted.
    pub fn boundary_vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.boundary_edges().into_iter().flat_map(|(p, q)| [p, q]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn centroid(&self, t: usize) -> Point {
        let three = rational::int(3);
        let [a, b, c] = self.triangles[t].map(|i| &self.points[i]);
        ((&a.0 + &b.0 + &c.0) / &three, (&a.1 + &b.1 + &c.1) / &three)
    }

    /// Builds the labeled dual graph.
    pub fn dualize(&self) -> Result<Dual> {
        self.validate()?;
        let edges = self.edge_map();
        let mut graph_edges = Vec::new();
        let mut lines = Vec::new();
        let mut edge_points = Vec::new();
        let mut position: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (&(p, q), ts) in &edges {
            if ts.len() != 2 {
                continue;
            }
            let line = Line::through(&self.points[p], &self.points[q]);
            let label = line.label().ok_or(Error::HorizontalEdge(p, q))?;
            let (t1, t2) = (ts[0].min(ts[1]), ts[0].max(ts[1]));
            position.insert((p, q), graph_edges.len());
            graph_edges.push(Edge {
                id: graph_edges.len(),
                tail: t1,
                head: t2,
                label: Some(label),
            });
            lines.push(line);
            edge_points.push((p, q));
        }
        let interior = self.interior_vertices();
        let mut faces = Vec::new();
        for &v in &interior {
            let centre = &self.points[v];
            let mut fan: Vec<(usize, Point)> = (0..self.triangles.len())
                .filter(|&t| self.triangles[t].contains(&v))
                .map(|t| {
                    let c = self.centroid(t);
                    (t, (&c.0 - &centre.0, &c.1 - &centre.1))
                })
                .collect();
            // clockwise: descending angle, starting at the smallest triangle
            fan.sort_by(|a, b| angle_cmp(&b.1, &a.1));
            let start = fan.iter().enumerate().min_by_key(|(_, (t, _))| *t).map(|(i, _)| i).unwrap_or(0);
            fan.rotate_left(start);
            let mut entries = Vec::new();
            for k in 0..fan.len() {
                let (t, u) = (fan[k].0, fan[(k + 1) % fan.len()].0);
                let shared: Vec<usize> = self.triangles[t]
                    .iter()
                    .copied()
                    .filter(|&w| w != v && self.triangles[u].contains(&w))
                    .collect();
                let [w] = shared[..] else {
                    return Err(Error::InvalidTriangulation(format!(
                        "triangles {t} and {u} around point {v} do not share an edge"
                    )));
                };
                let e = position[&(v.min(w), v.max(w))];
                let sign = if graph_edges[e].tail == t { Sign::Plus } else { Sign::Minus };
                entries.push(FaceEntry { edge: e, sign });
            }
            faces.push(FaceCycle {
                id: faces.len(),
                entries,
            });
        }
        let graph = PlanarGraph {
            vertices: (0..self.triangles.len()).map(|t| format!("T{t}")).collect(),
            edges: graph_edges,
            faces,
        };
        Ok(Dual {
            graph,
            lines,
            edge_points,
            face_points: interior,
        })
    }

    /// The points mapped by `(x, y) ↦ R⁻¹(x, y)` with `R = [[x0, −y0], [y0, x0]]`,
    /// so that lines transform as in [`Line::rotated`].
    pub fn rotated(&self, x0: &Rational, y0: &Rational) -> Result<Triangulation> {
        let norm = x0 * x0 + y0 * y0;
        if norm.is_zero() {
            return Err(Error::BadRotation {
                x0: rational::format(x0),
                y0: rational::format(y0),
                index: 0,
            });
        }
        for (i, (p, q)) in self.interior_edges().into_iter().enumerate() {
            let l = Line::through(&self.points[p], &self.points[q]).rotated(x0, y0);
            if l.alpha.is_zero() {
                return Err(Error::BadRotation {
                    x0: rational::format(x0),
                    y0: rational::format(y0),
                    index: i,
                });
            }
        }
        let points = self
            .points
            .iter()
            .map(|(x, y)| ((x0 * x + y0 * y) / &norm, (x0 * y - y0 * x) / &norm))
            .collect();
        Ok(Triangulation {
            points,
            triangles: self.triangles.clone(),
        })
    }

    /// A small integer rotation making no interior edge horizontal.
    pub fn auto_rotation(&self) -> (Rational, Rational) {
        let lines: Vec<Line> = self
            .interior_edges()
            .into_iter()
            .map(|(p, q)| Line::through(&self.points[p], &self.points[q]))
            .collect();
        // each line rules out one direction, so some pair with |x0|, |y0| ≤ n works
        for n in 1i64.. {
            for x0 in -n..=n {
                for y0 in -n..=n {
                    if x0.abs().max(y0.abs()) != n && n > 1 {
                        continue;
                    }
                    let (x, y) = (rational::int(x0), rational::int(y0));
                    if (x0, y0) != (0, 0) && lines.iter().all(|l| !l.rotated(&x, &y).alpha.is_zero()) {
                        return (x, y);
                    }
                }
            }
        }
        unreachable!("finitely many lines exclude finitely many directions")
    }
}

/// Applies the rotation to lines, failing if one becomes horizontal.
pub fn rotate_lines(lines: &[Line], x0: &Rational, y0: &Rational) -> Result<Vec<Line>> {
    lines
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let r = l.rotated(x0, y0);
            if r.alpha.is_zero() {
                Err(Error::BadRotation {
                    x0: rational::format(x0),
                    y0: rational::format(y0),
                    index: i,
                })
            } else {
                Ok(r)
            }
        })
        .collect()
}

/// Drops the constant term of every label, keeping the originals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homogenized {
    pub labels: Vec<Option<EdgeLabel>>,
    pub originals: Vec<Option<EdgeLabel>>,
}

pub fn homogenize(labels: &[Option<EdgeLabel>]) -> Homogenized {
    Homogenized {
        labels: labels.iter().map(|l| l.as_ref().map(EdgeLabel::homogenized)).collect(),
        originals: labels.to_vec(),
    }
}

/// Outcome of the translatability test for one face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceWitness {
    pub face: usize,
    /// A point on every label line of the face.
    pub witness: Option<Point>,
    pub reason: Option<String>,
}

/// For every face, a common point of the lines `x + a y + b = 0` of its
/// edge labels, if there is one.
pub fn face_translatable_check(g: &PlanarGraph, labels: &[Option<EdgeLabel>]) -> Vec<FaceWitness> {
    g.faces
        .iter()
        .map(|face| {
            let mut lines = Vec::new();
            for e in face.edges() {
                match labels.get(e).and_then(Option::as_ref) {
                    Some(l) => lines.push((l.a.clone(), l.b.clone().unwrap_or_else(rational::zero))),
                    None => {
                        return FaceWitness {
                            face: face.id,
                            witness: None,
                            reason: Some(format!("edge {} has no label", g.edges[e].id)),
                        }
                    }
                }
            }
            let fail = |reason: String| FaceWitness {
                face: face.id,
                witness: None,
                reason: Some(reason),
            };
            let (a0, b0) = &lines[0];
            let point = match lines.iter().find(|(a, _)| a != a0) {
                Some((a1, b1)) => {
                    let y = (b1 - b0) / (a0 - a1);
                    (-(a0 * &y) - b0, y)
                }
                None => (-b0.clone(), rational::zero()),
            };
            match lines.iter().position(|(a, b)| !(&point.0 + a * &point.1 + b).is_zero()) {
                None => FaceWitness {
                    face: face.id,
                    witness: Some(point),
                    reason: None,
                },
                Some(i) => fail(format!(
                    "label lines of edges {} and {} do not meet on the others",
                    g.edges[face.entries[0].edge].id,
                    g.edges[face.entries[i].edge].id
                )),
            }
        })
        .collect()
}

/// Classical `C¹` quadratic spline dimension on the triangulation, which
/// exceeds the dual spline dimension by the six global quadratics.
pub fn classical_dimension(dual_dimension: usize) -> usize {
    dual_dimension + 6
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::spline::spline_dimension;

    fn int(n: i64) -> Rational {
        rational::int(n)
    }

    #[test]
    fn homogenization_example_labels() {
        let d = fixtures::homogenization_triangulation().dualize().unwrap();
        assert_eq!(d.graph.num_edges(), 7);
        let shown: Vec<String> = d.labels().iter().map(|l| l.as_ref().unwrap().to_string()).collect();
        let mut sorted = shown.clone();
        sorted.sort();
        let mut expected: Vec<String> = [
            EdgeLabel::affine(int(1), int(-1)),
            EdgeLabel::affine(int(-1), int(-1)),
            EdgeLabel::affine(int(-1), int(1)),
            EdgeLabel::affine(int(1), int(1)),
            EdgeLabel::affine(int(-2), int(2)),
            EdgeLabel::affine(int(2), int(2)),
            EdgeLabel::homogeneous(int(0)),
        ]
        .iter()
        .map(ToString::to_string)
        .collect();
        expected.sort();
        assert_eq!(sorted, expected);
        assert!(d.graph.validate().is_valid(), "{}", d.graph.validate());
    }

    #[test]
    fn morgan_scott_dual_shape() {
        let t = fixtures::morgan_scott_triangulation();
        let d = t.dualize().unwrap();
        assert_eq!((d.graph.num_edges(), d.graph.num_faces()), (9, 3));
        assert!(d.graph.faces.iter().all(|f| f.len() == 4));
        assert!(d.graph.validate().is_valid(), "{}", d.graph.validate());
        assert_eq!(t.interior_edges().len(), 9);
        assert_eq!(t.interior_vertices(), vec![3, 4, 5]);
    }

    #[test]
    fn single_triangle_dual() {
        let d = fixtures::single_triangle_triangulation().dualize().unwrap();
        assert_eq!((d.graph.num_vertices(), d.graph.num_edges(), d.graph.num_faces()), (1, 0, 0));
    }

    #[test]
    fn witnesses_are_interior_points() {
        let t = fixtures::morgan_scott_triangulation();
        let d = t.dualize().unwrap();
        let w = face_translatable_check(&d.graph, &d.labels());
        for (fw, &p) in w.iter().zip(&d.face_points) {
            assert_eq!(fw.witness.as_ref(), Some(&t.points[p]));
        }
    }

    #[test]
    fn parallel_lines_not_translatable() {
        let g = fixtures::two_cycle();
        let labels = vec![
            Some(EdgeLabel::affine(int(0), int(1))),
            Some(EdgeLabel::affine(int(0), int(2))),
        ];
        let w = face_translatable_check(&g, &labels);
        assert!(w[0].witness.is_none());
        let homogeneous = homogenize(&labels).labels;
        assert_eq!(face_translatable_check(&g, &homogeneous)[0].witness, Some((int(0), int(0))));
    }

    #[test]
    fn rotation_formula() {
        let l = Line::new(int(0), int(1), int(5));
        let r = l.rotated(&int(0), &int(1));
        assert_eq!(r.alpha, int(1));
        assert_eq!(r.label(), Some(EdgeLabel::affine(int(0), int(5))));
        let same = Line::new(int(2), int(3), int(1)).rotated(&int(1), &int(0));
        assert_eq!(same, Line::new(int(2), int(3), int(1)));
        assert!(rotate_lines(&[Line::new(int(1), int(1), int(0))], &int(1), &int(-1)).is_err());
    }

    #[test]
    fn rotated_points_match_rotated_lines() {
        let t = fixtures::morgan_scott_triangulation();
        let (x0, y0) = (int(2), int(1));
        let r = t.rotated(&x0, &y0).unwrap();
        for (p, q) in t.interior_edges() {
            let rotated = Line::through(&t.points[p], &t.points[q]).rotated(&x0, &y0);
            assert!(rotated.contains(&r.points[p]) && rotated.contains(&r.points[q]));
        }
    }

    #[test]
    fn horizontal_edge_and_rotation() {
        let t = Triangulation::new(
            vec![(int(0), int(0)), (int(4), int(0)), (int(2), int(3)), (int(2), int(-3))],
            vec![[0, 1, 2], [0, 3, 1]],
        );
        assert_eq!(t.dualize().err(), Some(Error::HorizontalEdge(0, 1)));
        let (x0, y0) = t.auto_rotation();
        let d = t.rotated(&x0, &y0).unwrap().dualize().unwrap();
        assert_eq!(d.graph.num_edges(), 1);
    }

    #[test]
    fn dimension_is_rotation_invariant() {
        let t = fixtures::morgan_scott_triangulation();
        let base = t.dualize().unwrap();
        let h = homogenize(&base.labels()).labels;
        let d0 = spline_dimension(&base.graph, &h, 0).unwrap();
        for (x0, y0) in [(1, 1), (3, -2), (1, 5)] {
            let r = t.rotated(&int(x0), &int(y0)).unwrap().dualize().unwrap();
            let hr = homogenize(&r.labels()).labels;
            assert_eq!(spline_dimension(&r.graph, &hr, 0).unwrap(), d0);
        }
    }

    #[test]
    fn invalid_inputs() {
        let collinear = Triangulation::new(vec![(int(0), int(0)), (int(1), int(1)), (int(2), int(2))], vec![[0, 1, 2]]);
        assert_eq!(collinear.validate(), Err(Error::Degenerate(0)));
        let hanging = Triangulation::new(
            vec![(int(0), int(0)), (int(2), int(0)), (int(0), int(2)), (int(1), int(0)), (int(1), int(-1))],
            vec![[0, 1, 2], [0, 3, 4]],
        );
        assert!(matches!(hanging.validate(), Err(Error::InvalidTriangulation(_))));
    }

    #[test]
    fn json_round_trip() {
        let t = fixtures::homogenization_triangulation();
        assert_eq!(Triangulation::from_json(&t.to_json_string()).unwrap(), t);
        let ints = r#"{"points":[[0,0],[1,0],["1/2","3"]],"triangles":[[0,1,2]]}"#;
        assert_eq!(Triangulation::from_json(ints).unwrap().points[2].0, rational::frac(1, 2));
    }
}
