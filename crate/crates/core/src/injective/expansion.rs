use num_bigint::BigInt;

use super::enumerate::ENUMERATION_LIMIT;
use super::EdgeInjectiveFn;
use crate::algebra::MultiPoly;
use crate::error::{Error, Result};
use crate::graph::PlanarGraph;

/// Total edge-injective functions whose image is exactly `cols` (sorted
/// edge positions, `|cols| = 3f`).
pub fn functions_with_image(g: &PlanarGraph, cols: &[usize]) -> Result<Vec<EdgeInjectiveFn>> {
    if cols.len() != 3 * g.num_faces() {
        return Err(Error::NonSquare {
            rows: 3 * g.num_faces(),
            cols: cols.len(),
        });
    }
    let mut allowed = vec![false; g.num_edges()];
    for &c in cols {
        allowed[c] = true;
    }
    let bounds: Vec<Vec<usize>> = g
        .faces
        .iter()
        .map(|f| {
            let mut v: Vec<usize> = f.edges().filter(|&e| allowed[e]).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let mut out = Vec::new();
    let mut used = vec![false; g.num_edges()];
    let mut current = EdgeInjectiveFn::empty(g.num_faces());
    search(&bounds, 0, &mut used, &mut current, &mut out)?;
    Ok(out)
}

fn search(
    bounds: &[Vec<usize>],
    f: usize,
    used: &mut [bool],
    current: &mut EdgeInjectiveFn,
    out: &mut Vec<EdgeInjectiveFn>,
) -> Result<()> {
    if f == bounds.len() {
        if out.len() >= ENUMERATION_LIMIT {
            return Err(Error::SizeGuard {
                what: "edge-injective functions",
                size: out.len() + 1,
                limit: ENUMERATION_LIMIT,
            });
        }
        out.push(current.clone());
        return Ok(());
    }
    let free: Vec<usize> = bounds[f].iter().copied().filter(|&e| !used[e]).collect();
    for t in crate::spline::subsets(free.len(), 3) {
        let triple: Vec<usize> = t.iter().map(|&i| free[i]).collect();
        for &e in &triple {
            used[e] = true;
        }
        current.assignment[f] = triple.iter().copied().collect();
        let r = search(bounds, f + 1, used, current, out);
        for &e in &triple {
            used[e] = false;
        }
        r?;
    }
    current.assignment[f].clear();
    Ok(())
}

/// Parity of a permutation given as a list of distinct ranks.
fn permutation_sign(p: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `det N` for the square submatrix of `M^ext` on the columns `cols`
/// (sorted edge positions), as a sum over edge-injective functions of
/// products of signed 3×3 Vandermonde determinants.
///
/// Rows stay in face order. For a function φ the columns listed block by
/// block (each block sorted) form a permutation λ_φ of `cols`; the term is
/// `sgn(λ_φ) Π_F ε_i ε_j ε_k (a_j − a_i)(a_k − a_i)(a_k − a_j)`.
pub fn det_expansion(g: &PlanarGraph, cols: &[usize]) -> Result<MultiPoly> {
    let mut sorted = cols.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != cols.len() {
        return Err(Error::InvalidGraph("repeated column in det_expansion".into()));
    }
    let functions = functions_with_image(g, &sorted)?;
    let rank_of = |e: usize| sorted.binary_search(&e).expect("column in the set");
    let var = |e: usize| MultiPoly::var(g.edges[e].id);
    let mut total = MultiPoly::zero();
    for phi in &functions {
        let lambda: Vec<usize> = phi.assignment.iter().flatten().map(|&e| rank_of(e)).collect();
        let mut sign = permutation_sign(&lambda);
        let mut term = MultiPoly::one();
        for (f, block) in phi.assignment.iter().enumerate() {
            let b: Vec<usize> = block.iter().copied().collect();
            for &e in &b {
                sign *= g.faces[f].sign_of(e).expect("edge on face").value();
            }
            let (i, j, k) = (var(b[0]), var(b[1]), var(b[2]));
            term = &term * &MultiPoly::product([&(&j - &i), &(&k - &i), &(&k - &j)]);
        }
        total = &total + &term.scale(&BigInt::from(sign));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::spline::symbolic_mext;

    fn full_det(g: &PlanarGraph) -> MultiPoly {
        let m = symbolic_mext(g);
        let rows: Vec<usize> = (0..m.rows()).collect();
        let cols: Vec<usize> = (0..m.cols()).collect();
        m.submatrix(&rows, &cols).det().unwrap()
    }

    #[test]
    fn triangle_matches_cofactor() {
        let g = fixtures::triangle();
        let p = det_expansion(&g, &[0, 1, 2]).unwrap();
        assert_eq!(p, full_det(&g));
        let v = MultiPoly::product([
            &MultiPoly::difference(0, 1),
            &MultiPoly::difference(1, 2),
            &MultiPoly::difference(2, 0),
        ]);
        assert!(p == v || p == -&v);
    }

    #[test]
    fn splittable_is_product_of_blocks() {
        let g = fixtures::splittable();
        let cols: Vec<usize> = (0..6).collect();
        let p = det_expansion(&g, &cols).unwrap();
        assert_eq!(p, full_det(&g));
        assert_eq!(functions_with_image(&g, &cols).unwrap().len(), 1);
    }

    #[test]
    fn lens_full_minor() {
        let g = fixtures::lens_non_generic();
        let cols: Vec<usize> = (0..9).collect();
        assert!(det_expansion(&g, &cols).unwrap().is_zero());
    }

    #[test]
    fn wrong_size_rejected() {
        let g = fixtures::triangle();
        assert!(matches!(det_expansion(&g, &[0, 1]), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn sign_parity() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[2, 0, 1]), 1);
    }
}
