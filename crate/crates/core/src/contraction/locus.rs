//! Polynomials whose zero sets describe labels in special position.

use num_traits::Zero;

use super::{check_shared_edges, classify_minimal_contractible, contract_with_map, minimal_contractible_sets};
use super::{ContractionOptions, MinimalKind};
use crate::algebra::{Assignment, MultiPoly, SYMBOLIC_DET_LIMIT};
use crate::error::{Error, Result};
use crate::graph::PlanarGraph;
use crate::injective::det_expansion;
use crate::spline::{subsets, symbolic_mext};

/// Cap on the number of residual minors examined.
pub const RESIDUAL_MINOR_LIMIT: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageLocus {
    pub faces: Vec<usize>,
    pub kind: MinimalKind,
    pub deficiency: i64,
    /// The stage is in special position exactly where this vanishes.
    pub polynomial: MultiPoly,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialLocus {
    pub stages: Vec<StageLocus>,
    /// Face ids of the residual graph.
    pub residual_faces: Vec<usize>,
    /// Nonzero maximal minors of the residual `M^ext`; the residual is in
    /// special position on the intersection of their zero sets.
    pub residual: Vec<MultiPoly>,
    /// Maximal minors that vanish identically and are omitted.
    pub zero_minors: usize,
}

impl SpecialLocus {
    /// True when no stage polynomial vanishes and some residual minor does
    /// not, i.e. the labels are not in special position anywhere.
    pub fn avoids<A: Assignment + ?Sized>(&self, at: &A) -> Result<bool> {
        for s in &self.stages {
            if s.polynomial.evaluate(at)?.is_zero() {
                return Ok(false);
            }
        }
        if self.residual.is_empty() {
            return Ok(true);
        }
        for p in &self.residual {
            if !p.evaluate(at)?.is_zero() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Index of the first stage (1-based) whose polynomial vanishes, with
    /// the residual counted as the stage after the last contraction.
    pub fn first_special_stage<A: Assignment + ?Sized>(&self, at: &A) -> Result<Option<usize>> {
        for (i, s) in self.stages.iter().enumerate() {
            if s.polynomial.evaluate(at)?.is_zero() {
                return Ok(Some(i + 1));
            }
        }
        if !self.residual.is_empty() {
            for p in &self.residual {
                if !p.evaluate(at)?.is_zero() {
                    return Ok(None);
                }
            }
            return Ok(Some(self.stages.len() + 1));
        }
        Ok(None)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    r as usize
}

/// The nonzero maximal minors of `M^ext` over the face edges of `g`, and
/// the count of identically vanishing ones.
///
/// With `e ≥ 3f` the minors are the `3f`-column submatrices, expanded over
/// edge-injective functions. With `e < 3f` they are the `e × e` row
/// selections, expanded by cofactors.
pub fn residual_minors(g: &PlanarGraph) -> Result<(Vec<MultiPoly>, usize)> {
    let cols: Vec<usize> = g.face_edges().into_iter().collect();
    let rows = 3 * g.num_faces();
    let (k, n) = if cols.len() >= rows { (rows, cols.len()) } else { (cols.len(), rows) };
    let count = binomial(n, k);
    if count > RESIDUAL_MINOR_LIMIT {
        return Err(Error::SizeGuard {
            what: "maximal minors of the residual M^ext",
            size: count,
            limit: RESIDUAL_MINOR_LIMIT,
        });
    }
    // A single loop or 2-cycle face: its rank drops only where its own
    // stage polynomial vanishes, so report that instead of the row minors.
    match classify_minimal_contractible(g) {
        Ok(MinimalKind::Loop) => return Ok((vec![MultiPoly::one()], 0)),
        Ok(MinimalKind::TwoCycle) => {
            let ids: Vec<usize> = cols.iter().map(|&e| g.edges[e].id).collect();
            return Ok((vec![MultiPoly::difference(ids[0], ids[1])], 0));
        }
        _ => {}
    }
    let mut out: Vec<MultiPoly> = Vec::new();
    let mut zero = 0;
    if cols.len() >= rows {
        for pick in subsets(cols.len(), rows) {
            let chosen: Vec<usize> = pick.iter().map(|&i| cols[i]).collect();
            push_minor(det_expansion(g, &chosen)?, &mut out, &mut zero);
        }
    } else {
        if cols.len() > SYMBOLIC_DET_LIMIT {
            return Err(Error::SizeGuard {
                what: "symbolic determinant size",
                size: cols.len(),
                limit: SYMBOLIC_DET_LIMIT,
            });
        }
        let m = symbolic_mext(g);
        for pick in subsets(rows, cols.len()) {
            push_minor(m.submatrix(&pick, &cols).det()?, &mut out, &mut zero);
        }
    }
    Ok((out, zero))
}

fn push_minor(p: MultiPoly, out: &mut Vec<MultiPoly>, zero: &mut usize) {
    if p.is_zero() {
        *zero += 1;
    } else if !out.contains(&p) && !out.contains(&-&p) {
        out.push(p);
    }
}

/// Special-position polynomials stage by stage, following the same stages
/// as [`super::dimension_by_contraction`].
///
/// A loop stage contributes the constant 1: its `M^ext` column `(1, a, a²)`
/// never vanishes, so it is never special.
pub fn special_locus(g: &PlanarGraph) -> Result<SpecialLocus> {
    special_locus_with(g, ContractionOptions::default())
}

pub fn special_locus_with(g: &PlanarGraph, opts: ContractionOptions) -> Result<SpecialLocus> {
    g.ensure_valid()?;
    let mut current = g.clone();
    let mut stages = Vec::new();
    loop {
        let sets = minimal_contractible_sets(&current);
        let Some(s) = sets.first().cloned() else { break };
        if opts.check_shared_edges {
            check_shared_edges(&current, &sets)?;
        }
        let sub = current.subgraph_from_faces(&s);
        let kind = classify_minimal_contractible(&sub.graph)?;
        let edge_ids: Vec<usize> = sub.graph.edges.iter().map(|e| e.id).collect();
        let (polynomial, note) = match kind {
            MinimalKind::Loop => (
                MultiPoly::one(),
                Some(format!(
                    "a loop column (1, a{n}, a{n}^2) never vanishes, so this stage is never special",
                    n = edge_ids[0] + 1
                )),
            ),
            MinimalKind::TwoCycle => (MultiPoly::difference(edge_ids[0], edge_ids[1]), None),
            MinimalKind::ThreeCycle | MinimalKind::Balanced => {
                let all: Vec<usize> = (0..sub.graph.num_edges()).collect();
                let p = det_expansion(&sub.graph, &all)?;
                if p.is_zero() {
                    return Err(Error::HypothesisViolation(format!(
                        "the determinant of the minimal contractible subgraph on faces {:?} vanishes identically",
                        s.iter().map(|&f| current.faces[f].id).collect::<Vec<_>>()
                    )));
                }
                (p, None)
            }
        };
        stages.push(StageLocus {
            faces: s.iter().map(|&f| current.faces[f].id).collect(),
            kind,
            deficiency: sub.deficiency(),
            polynomial,
            note,
        });
        current = contract_with_map(&current, &s)?.graph;
    }
    let (residual, zero_minors) = residual_minors(&current)?;
    Ok(SpecialLocus {
        stages,
        residual_faces: current.face_ids(),
        residual,
        zero_minors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn lens_locus() {
        let locus = special_locus(&fixtures::lens_non_generic()).unwrap();
        assert_eq!(locus.stages.len(), 2);
        assert_eq!(locus.stages[0].polynomial, MultiPoly::difference(0, 1));
        let v = MultiPoly::product([
            &MultiPoly::difference(6, 7),
            &MultiPoly::difference(6, 8),
            &MultiPoly::difference(7, 8),
        ]);
        let p = &locus.stages[1].polynomial;
        assert!(*p == v || *p == -&v);
        assert_eq!(locus.residual.len(), 4);
        assert_eq!(locus.zero_minors, 0);
    }

    #[test]
    fn triangle_locus_is_residual_determinant() {
        let locus = special_locus(&fixtures::triangle()).unwrap();
        assert!(locus.stages.is_empty());
        assert_eq!(locus.residual.len(), 1);
        assert_eq!(locus.residual[0].num_terms(), 6);
    }

    #[test]
    fn two_cycle_locus() {
        let locus = special_locus(&fixtures::two_cycle()).unwrap();
        assert_eq!(locus.residual.len(), 1);
        assert_eq!(locus.residual[0], MultiPoly::difference(0, 1));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(18, 15), 816);
        assert_eq!(binomial(3, 5), 0);
    }
}
