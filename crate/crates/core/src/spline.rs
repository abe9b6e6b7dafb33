//! Cycle basis matrices and the spline dimension.
//!
//! For a face with edges `e` of sign `ε` and label `(x + a_e y)²`, the cycle
//! condition `Σ ε z_e (x + a_e y)² = 0` splits into the x², xy and y²
//! coefficient equations `Σ ε z_e = 0`, `Σ 2 ε a_e z_e = 0`, and
//! `Σ ε a_e² z_e = 0`. The middle row is stored without the factor 2, which
//! scales a whole row and changes neither rank nor kernel.

use std::collections::VecDeque;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{divides, BiPoly, MultiPoly, PolyMatrix, Quadratic, Rational, RationalMatrix};
use crate::error::{Error, Result};
use crate::graph::{EdgeLabel, PlanarGraph};
use crate::injective;

/// `M`: one row per face, one column per edge, entries in {0, ±1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleBasisMatrix {
    pub matrix: RationalMatrix,
    /// Face id per row.
    pub row_face: Vec<usize>,
    /// Edge id per column.
    pub col_edge: Vec<usize>,
}

/// `M^ext`: three rows `(ε, ε a, ε a²)` per face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedMatrix {
    pub matrix: RationalMatrix,
    /// Face id per row triple.
    pub row_face: Vec<usize>,
    pub col_edge: Vec<usize>,
    pub symbolic: Option<PolyMatrix>,
}

pub fn build_m(g: &PlanarGraph) -> Result<CycleBasisMatrix> {
    g.ensure_valid()?;
    let mut m = RationalMatrix::zeros(g.num_faces(), g.num_edges());
    for (r, face) in g.faces.iter().enumerate() {
        for en in &face.entries {
            m.set(r, en.edge, Rational::from_integer(BigInt::from(en.sign.value())));
        }
    }
    Ok(CycleBasisMatrix {
        matrix: m,
        row_face: g.face_ids(),
        col_edge: g.edge_ids(),
    })
}

/// Slope of every face edge; errors on missing or non-homogeneous labels.
fn face_slopes(g: &PlanarGraph, labels: &[Option<EdgeLabel>]) -> Result<Vec<Option<Rational>>> {
    let mut slopes = vec![None; g.num_edges()];
    for e in g.face_edges() {
        let id = g.edges[e].id;
        match labels.get(e).and_then(Option::as_ref) {
            None => return Err(Error::MissingLabel(id)),
            Some(l) if !l.is_homogeneous() => return Err(Error::NonHomogeneousLabel(id)),
            Some(l) => slopes[e] = Some(l.a.clone()),
        }
    }
    Ok(slopes)
}

/// Numeric `M^ext` for labels given by edge position.
pub fn build_mext(g: &PlanarGraph, labels: &[Option<EdgeLabel>]) -> Result<ExtendedMatrix> {
    let slopes = face_slopes(g, labels)?;
    let mut m = RationalMatrix::zeros(3 * g.num_faces(), g.num_edges());
    for (r, face) in g.faces.iter().enumerate() {
        for en in &face.entries {
            let a = slopes[en.edge].as_ref().expect("face edge has a slope");
            let s = Rational::from_integer(BigInt::from(en.sign.value()));
            m.set(3 * r, en.edge, s.clone());
            m.set(3 * r + 1, en.edge, &s * a);
            m.set(3 * r + 2, en.edge, &s * a * a);
        }
    }
    Ok(ExtendedMatrix {
        matrix: m,
        row_face: g.face_ids(),
        col_edge: g.edge_ids(),
        symbolic: None,
    })
}

/// `M^ext` at the labels stored on the graph.
pub fn build_mext_from_graph(g: &PlanarGraph) -> Result<ExtendedMatrix> {
    build_mext(g, &g.labels())
}

/// Symbolic `M^ext` in the variables `a_{id+1}`.
pub fn symbolic_mext(g: &PlanarGraph) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(3 * g.num_faces(), g.num_edges());
    for (r, face) in g.faces.iter().enumerate() {
        for en in &face.entries {
            let s = BigInt::from(en.sign.value());
            let a = MultiPoly::var(g.edges[en.edge].id);
            m.set(3 * r, en.edge, MultiPoly::constant(s.clone()));
            m.set(3 * r + 1, en.edge, a.scale(&s));
            m.set(3 * r + 2, en.edge, a.pow(2).scale(&s));
        }
    }
    m
}

/// `M^ext` with both the numeric matrix and its symbolic mirror.
pub fn build_mext_with_symbolic(g: &PlanarGraph, labels: &[Option<EdgeLabel>]) -> Result<ExtendedMatrix> {
    let mut ext = build_mext(g, labels)?;
    ext.symbolic = Some(symbolic_mext(g));
    Ok(ext)
}

/// `e_G - rank(M^ext)`. The base vertex does not affect the value; it is
/// only checked for existence.
pub fn spline_dimension(g: &PlanarGraph, labels: &[Option<EdgeLabel>], v0: usize) -> Result<usize> {
    if v0 >= g.num_vertices() && g.num_vertices() > 0 {
        return Err(Error::InvalidGraph(format!("base vertex {v0} does not exist")));
    }
    let ext = build_mext(g, labels)?;
    Ok(g.num_edges() - ext.matrix.rank())
}

/// `min(e_G, 3 f_G)`, the size of a maximal square submatrix of `M^ext`.
pub fn maximal_minor_size(g: &PlanarGraph) -> usize {
    g.num_edges().min(3 * g.num_faces())
}

/// Outcome of [`generic_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericReport {
    pub generic: bool,
    /// Size of the maximal minors examined.
    pub d: usize,
    /// Edge ids of the witness columns.
    pub witness_columns: Option<Vec<usize>>,
    /// Row indices of the witness (only when `d < 3 f`).
    pub witness_rows: Option<Vec<usize>>,
    /// The witness determinant, when computed symbolically.
    pub polynomial: Option<MultiPoly>,
    pub candidates_checked: usize,
    pub note: String,
}

/// Exhaustive column search is only attempted up to this many edges.
pub const EXHAUSTIVE_COLUMNS_LIMIT: usize = 12;

/// Decides whether some `d×d` minor of `M^ext` is a nonzero polynomial.
///
/// With `symbolic == false` a sampled full-rank evaluation is accepted as
/// proof of genericity and no polynomial is returned; otherwise (and
/// whenever sampling fails) the witness determinant is computed exactly.
pub fn generic_check(g: &PlanarGraph, symbolic: bool) -> Result<GenericReport> {
    g.ensure_valid()?;
    let d = maximal_minor_size(g);
    let f = g.num_faces();
    if d == 0 {
        return Ok(GenericReport {
            generic: true,
            d,
            witness_columns: Some(Vec::new()),
            witness_rows: None,
            polynomial: Some(MultiPoly::one()),
            candidates_checked: 0,
            note: "empty minor".into(),
        });
    }
    let sym = symbolic_mext(g);

    if !symbolic {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..3 {
            let point = random_point(g, &mut rng);
            let m = sym.evaluate(&point)?;
            if m.rank() == d {
                let cols = m.pivot_columns();
                let rows = if d < 3 * f { Some(m.transpose().pivot_columns()) } else { None };
                return Ok(GenericReport {
                    generic: true,
                    d,
                    witness_columns: Some(cols.iter().map(|&c| g.edges[c].id).collect()),
                    witness_rows: rows,
                    polynomial: None,
                    candidates_checked: 1,
                    note: "full rank at a sampled rational point".into(),
                });
            }
        }
    }

    if d == 3 * f {
        generic_by_images(g, &sym, d)
    } else {
        generic_by_rows(g, &sym, d)
    }
}

fn generic_by_images(g: &PlanarGraph, sym: &PolyMatrix, d: usize) -> Result<GenericReport> {
    let greedy = injective::greedy_maximal(g);
    if greedy.phi.image_size() < d {
        return Ok(GenericReport {
            generic: false,
            d,
            witness_columns: None,
            witness_rows: None,
            polynomial: None,
            candidates_checked: 0,
            note: format!(
                "a maximal edge-injective function covers only {} of {} needed columns, so every {d}x{d} minor vanishes identically",
                greedy.phi.image_size(),
                d
            ),
        });
    }
    let mut checked = 0;
    let mut images = vec![greedy.phi.image()];
    for img in injective::total_images(g, injective::ENUMERATION_LIMIT)? {
        if !images.contains(&img) {
            images.push(img);
        }
    }
    for cols in &images {
        checked += 1;
        let p = injective::det_expansion(g, cols)?;
        if !p.is_zero() {
            return Ok(GenericReport {
                generic: true,
                d,
                witness_columns: Some(cols.iter().map(|&c| g.edges[c].id).collect()),
                witness_rows: None,
                polynomial: Some(p),
                candidates_checked: checked,
                note: "nonzero edge-injective expansion".into(),
            });
        }
    }
    if g.num_edges() <= EXHAUSTIVE_COLUMNS_LIMIT {
        let rows: Vec<usize> = (0..sym.rows()).collect();
        for cols in subsets(g.num_edges(), d) {
            checked += 1;
            let p = sym.submatrix(&rows, &cols).det()?;
            if !p.is_zero() {
                return Err(Error::EnumerationMismatch(format!(
                    "column set {cols:?} has a nonzero minor but no edge-injective image"
                )));
            }
        }
    }
    Ok(GenericReport {
        generic: false,
        d,
        witness_columns: None,
        witness_rows: None,
        polynomial: None,
        candidates_checked: checked,
        note: "every candidate determinant vanishes identically".into(),
    })
}

fn generic_by_rows(g: &PlanarGraph, sym: &PolyMatrix, d: usize) -> Result<GenericReport> {
    let cols: Vec<usize> = (0..g.num_edges()).collect();
    let mut checked = 0;
    for rows in subsets(sym.rows(), d) {
        checked += 1;
        if checked > 20_000 {
            return Err(Error::SizeGuard {
                what: "row subsets for genericity",
                size: checked,
                limit: 20_000,
            });
        }
        let p = sym.submatrix(&rows, &cols).det()?;
        if !p.is_zero() {
            return Ok(GenericReport {
                generic: true,
                d,
                witness_columns: Some(g.edge_ids()),
                witness_rows: Some(rows),
                polynomial: Some(p),
                candidates_checked: checked,
                note: "nonzero cofactor expansion".into(),
            });
        }
    }
    Ok(GenericReport {
        generic: false,
        d,
        witness_columns: None,
        witness_rows: None,
        polynomial: None,
        candidates_checked: checked,
        note: "every row subset determinant vanishes identically".into(),
    })
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                current = Some(next);
                break;
            }
        }
        Some(out)
    })
}

/// Random rational slopes indexed by edge id, for sampling.
pub fn random_point(g: &PlanarGraph, rng: &mut impl Rng) -> Vec<Rational> {
    let n = g.edges.iter().map(|e| e.id + 1).max().unwrap_or(0);
    (0..n)
        .map(|_| Rational::new(BigInt::from(rng.gen_range(-1000i64..=1000)), BigInt::from(rng.gen_range(1i64..=97))))
        .collect()
}

/// True when the labels drop the rank of `M^ext` below `min(e, 3f)`.
/// Errors with [`Error::NotGeneric`] when no labels could achieve that rank.
pub fn special_position_test(g: &PlanarGraph, labels: &[Option<EdgeLabel>]) -> Result<bool> {
    let report = generic_check(g, false)?;
    if !report.generic {
        return Err(Error::NotGeneric);
    }
    let ext = build_mext(g, labels)?;
    Ok(ext.matrix.rank() < report.d)
}

/// A vertex labeling by quadratics, zero at the base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplineVector {
    /// By vertex position.
    pub vertex_values: Vec<Quadratic>,
    pub basepoint: usize,
}

impl SplineVector {
    /// Def. of a spline: each edge difference is a multiple of its label.
    pub fn satisfies(&self, g: &PlanarGraph) -> bool {
        let labels: Vec<BiPoly> = g
            .edges
            .iter()
            .map(|e| e.label.as_ref().map_or_else(BiPoly::zero, |l| l.quadratic().to_poly()))
            .collect();
        let values: Vec<BiPoly> = self.vertex_values.iter().map(Quadratic::to_poly).collect();
        verify_vertex_labeling(g, &labels, &values)
    }
}

/// Integrates each kernel vector of `M^ext` along a spanning tree from `v0`.
pub fn splines_from_kernel(g: &PlanarGraph, labels: &[Option<EdgeLabel>], v0: usize) -> Result<Vec<SplineVector>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if v0 >= g.num_vertices() {
        return Err(Error::InvalidGraph(format!("base vertex {v0} does not exist")));
    }
    let mut quads = Vec::with_capacity(g.num_edges());
    for (i, e) in g.edges.iter().enumerate() {
        match labels.get(i).and_then(Option::as_ref) {
            None => return Err(Error::MissingLabel(e.id)),
            Some(l) if !l.is_homogeneous() => return Err(Error::NonHomogeneousLabel(e.id)),
            Some(l) => quads.push(l.quadratic()),
        }
    }
    let ext = build_mext(g, labels)?;

    // BFS tree: parent edge per vertex.
    let n = g.num_vertices();
    let mut incident = vec![Vec::new(); n];
    for (i, e) in g.edges.iter().enumerate() {
        incident[e.tail].push(i);
        incident[e.head].push(i);
    }
    let mut order = Vec::with_capacity(n);
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[v0] = true;
    let mut queue = VecDeque::from([v0]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &i in &incident[v] {
            let e = &g.edges[i];
            let w = if e.tail == v { e.head } else { e.tail };
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(i);
                queue.push_back(w);
            }
        }
    }

    Ok(ext
        .matrix
        .kernel_basis()
        .into_iter()
        .map(|c| {
            let mut values = vec![Quadratic::zero(); n];
            for &v in order.iter().skip(1) {
                let i = parent[v].expect("tree edge");
                let e = &g.edges[i];
                let step = quads[i].scale(&c[i]);
                values[v] = if e.head == v {
                    values[e.tail].add(&step)
                } else {
                    values[e.head].sub(&step)
                };
            }
            SplineVector {
                vertex_values: values,
                basepoint: v0,
            }
        })
        .collect())
}

/// Checks that along every edge the difference of vertex values is a
/// multiple of the edge's label. Labels and values may be any polynomials;
/// a zero label only accepts a zero difference.
pub fn verify_vertex_labeling(g: &PlanarGraph, labels: &[BiPoly], values: &[BiPoly]) -> bool {
    g.edges.iter().enumerate().all(|(i, e)| {
        let diff = &values[e.head] - &values[e.tail];
        let label = &labels[i];
        if label.is_zero() {
            return diff.is_zero();
        }
        matches!(divides(label, &diff), Ok(Some(_)))
    })
}

/// Rank of `M^ext` at the given labels.
pub fn mext_rank(g: &PlanarGraph, labels: &[Option<EdgeLabel>]) -> Result<usize> {
    Ok(build_mext(g, labels)?.matrix.rank())
}
