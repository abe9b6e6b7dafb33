use serde_json::{json, Value};
use splinedim::algebra::{rational, RationalMatrix};
use splinedim::contraction::{dimension_by_contraction_with, special_locus_with, ContractionOptions, ContractionTrace};
use splinedim::injective::{count_directed_cycles, enumerate_all, find_coloring, greedy_maximal, AssignmentJson, Orientation};
use splinedim::spline::{build_mext, generic_check};
use splinedim::triangulation::{classical_dimension, face_translatable_check, homogenize};
use splinedim::Error;

use crate::input::{Prepared, Raw};
use crate::report::{EXIT_DISAGREE, EXIT_INVALID, EXIT_OK};
use crate::Method;

pub struct Done {
    pub results: Value,
    pub summary: String,
    pub code: i32,
    pub warnings: Vec<String>,
}

impl Done {
    fn ok(results: Value, summary: String) -> Self {
        Done {
            results,
            summary,
            code: EXIT_OK,
            warnings: Vec::new(),
        }
    }
}

fn matrix_json(m: &RationalMatrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|r| m.row(r).iter().map(rational::format).collect()).collect();
    json!(rows)
}

/// Contraction options for the input: triangulation duals never have two
/// minimal sets sharing an edge, so the check is skipped for them.
fn options(p: &Prepared) -> ContractionOptions {
    ContractionOptions {
        check_shared_edges: p.triangulation.is_none(),
    }
}

fn trace_json(t: &ContractionTrace) -> Value {
    let stages: Vec<Value> = t
        .stages
        .iter()
        .map(|s| {
            json!({
                "faces": s.faces,
                "kind": s.kind,
                "deficiency": s.deficiency,
                "edges": s.subgraph.edge_ids(),
                "alternatives": s.alternatives,
                "merged": s.merged,
                "dropped_faces": s.dropped_faces,
                "rank": s.rank,
            })
        })
        .collect();
    json!({
        "stages": stages,
        "residual": t.residual.to_json(),
        "residual_kind": t.residual_kind,
        "unused_edges": t.unused_edges,
        "residual_deficiency": t.residual_deficiency,
        "clamped": t.clamped,
        "residual_rank": t.residual_rank,
        "dimension": t.dimension,
    })
}

pub fn validate(raw: &Raw) -> Done {
    match raw {
        Raw::Graph(g) => {
            let report = g.validate();
            let messages: Vec<String> = report.issues.iter().map(ToString::to_string).collect();
            let valid = report.is_valid();
            let summary = if valid { "valid".to_string() } else { format!("invalid: {report}") };
            Done {
                results: json!({ "kind": "graph", "valid": valid, "issues": report.issues, "messages": messages }),
                summary,
                code: if valid { EXIT_OK } else { EXIT_INVALID },
                warnings: Vec::new(),
            }
        }
        Raw::Triangulation(t) => {
            let r = t.validate().and_then(|_| t.dualize().map(|_| ()));
            let (valid, message) = match &r {
                Ok(()) => (true, None),
                Err(e) => (false, Some(e.to_string())),
            };
            Done {
                results: json!({ "kind": "triangulation", "valid": valid, "messages": message.iter().collect::<Vec<_>>() }),
                summary: message.map_or("valid".into(), |m| format!("invalid: {m}")),
                code: if valid { EXIT_OK } else { EXIT_INVALID },
                warnings: Vec::new(),
            }
        }
    }
}

pub fn dualize(p: &Prepared, homogenized: bool, check: bool) -> Result<Done, Error> {
    let Some((t, dual)) = &p.triangulation else {
        return Err(Error::Parse("dualize needs a triangulation input".into()));
    };
    let original = dual.labels();
    let shown = if homogenized { homogenize(&original).labels } else { original.clone() };
    let graph = dual.graph.with_labels(&shown);
    let lines: Vec<String> = shown.iter().flatten().map(ToString::to_string).collect();
    let mut results = json!({
        "graph": graph.to_json(),
        "labels": lines,
        "interior_edges": dual.edge_points,
        "interior_vertices": dual.face_points,
        "triangles": t.triangles.len(),
    });
    if homogenized {
        results["originals"] = json!(original.iter().flatten().map(ToString::to_string).collect::<Vec<_>>());
    }
    if check {
        let w: Vec<Value> = face_translatable_check(&dual.graph, &original)
            .into_iter()
            .map(|w| {
                json!({
                    "face": w.face,
                    "witness": w.witness.map(|(x, y)| vec![rational::format(&x), rational::format(&y)]),
                    "reason": w.reason,
                })
            })
            .collect();
        results["translatable"] = json!(w);
    }
    let summary = format!(
        "dual graph: {} vertices, {} edges, {} faces",
        graph.num_vertices(),
        graph.num_edges(),
        graph.num_faces()
    );
    Ok(Done::ok(results, summary))
}

pub fn rank(p: &Prepared, dump: bool) -> Result<Done, Error> {
    let ext = build_mext(&p.graph, &p.labels)?;
    let rank = ext.matrix.rank();
    let mut results = json!({
        "rank": rank,
        "edges": p.graph.num_edges(),
        "faces": p.graph.num_faces(),
        "maximal_minor_size": splinedim::spline::maximal_minor_size(&p.graph),
    });
    if dump {
        results["matrix"] = matrix_json(&ext.matrix);
        results["columns"] = json!(ext.col_edge);
    }
    Ok(Done::ok(results, format!("rank(M^ext) = {rank}")))
}

pub fn dim(p: &Prepared, method: Method, dump: bool, classical: bool) -> Result<Done, Error> {
    let mut results = json!({});
    let mut warnings = Vec::new();
    let mut dims = Vec::new();
    if matches!(method, Method::Matrix | Method::Both) {
        let ext = build_mext(&p.graph, &p.labels)?;
        let rank = ext.matrix.rank();
        let d = p.graph.num_edges() - rank;
        results["matrix"] = json!({ "dimension": d, "rank": rank, "edges": p.graph.num_edges() });
        if dump {
            results["matrix"]["matrix"] = matrix_json(&ext.matrix);
        }
        dims.push(("matrix", d));
    }
    if matches!(method, Method::Contraction | Method::Both) {
        match dimension_by_contraction_with(&p.graph, Some(&p.labels), options(p)) {
            Ok((d, trace)) => {
                results["contraction"] = trace_json(&trace);
                dims.push(("contraction", d));
            }
            // the matrix value still stands; a special position only means
            // the contraction route does not apply to these labels
            Err(e @ Error::SpecialPosition { .. }) if method == Method::Both => {
                warnings.push(format!("contraction skipped: {e}"));
                results["contraction"] = Value::Null;
            }
            Err(e) => return Err(e),
        }
    }
    let d = dims[0].1;
    results["dimension"] = json!(d);
    if classical {
        if p.triangulation.is_none() {
            warnings.push("--classical assumes the graph is the dual of a triangulation".into());
        }
        results["classical_dimension"] = json!(classical_dimension(d));
    }
    let shown: Vec<String> = dims.iter().map(|(m, d)| format!("{m} {d}")).collect();
    let disagree = disagree(&dims);
    let summary = if disagree {
        format!("methods disagree: {}", shown.join(", "))
    } else {
        format!("dimension {d} ({})", shown.join(", "))
    };
    Ok(Done {
        results,
        summary,
        code: if disagree { EXIT_DISAGREE } else { EXIT_OK },
        warnings,
    })
}

/// True when two methods gave different dimensions.
fn disagree(dims: &[(&str, usize)]) -> bool {
    dims.windows(2).any(|w| w[0].1 != w[1].1)
}

pub fn generic(p: &Prepared, symbolic: bool) -> Result<Done, Error> {
    let r = generic_check(&p.graph, symbolic)?;
    let summary = format!("generic: {} (minors of size {})", r.generic, r.d);
    Ok(Done::ok(
        json!({
            "generic": r.generic,
            "minor_size": r.d,
            "witness_columns": r.witness_columns,
            "witness_rows": r.witness_rows,
            "polynomial": r.polynomial.map(|p| p.to_string()),
            "candidates_checked": r.candidates_checked,
            "note": r.note,
        }),
        summary,
    ))
}

pub fn edge_injective(p: &Prepared, all: bool, coloring: bool) -> Result<Done, Error> {
    let g = &p.graph;
    let r = greedy_maximal(g);
    let stalls: Vec<Vec<usize>> = r.stalls.iter().map(|s| s.iter().map(|&f| g.faces[f].id).collect()).collect();
    let mut results = json!({
        "greedy": {
            "assignment": AssignmentJson::new(g, &r.phi),
            "image_size": r.phi.image_size(),
            "total": r.phi.is_total(),
            "stalls": stalls,
            "face_order": r.order.iter().map(|&f| g.faces[f].id).collect::<Vec<_>>(),
        }
    });
    let mut summary = format!("greedy image {} of {} edges", r.phi.image_size(), g.num_edges());
    if all {
        let functions = enumerate_all(g)?;
        let mut listed = Vec::new();
        for phi in &functions {
            let cycles = count_directed_cycles(&Orientation::from_phi(g, phi))?;
            listed.push(json!({ "assignment": phi.to_ids(g), "directed_cycles": cycles }));
        }
        results["all"] = json!({ "count": functions.len(), "functions": listed });
        summary.push_str(&format!("; |Φ| = {}", functions.len()));
    }
    if coloring {
        let c = find_coloring(&Orientation::from_phi(g, &r.phi))?;
        let arcs: Vec<Value> = c
            .orientation
            .arcs
            .iter()
            .zip(&c.colors)
            .map(|(a, &color)| {
                json!({
                    "edge": g.edges[a.edge].id,
                    "from": g.faces[a.from].id,
                    "to": g.faces[a.to].id,
                    "color": color,
                })
            })
            .collect();
        results["coloring"] = json!({ "arcs": arcs, "audit": c.audit() });
        summary.push_str("; coloring found");
    }
    Ok(Done::ok(results, summary))
}

pub fn contract(p: &Prepared) -> Result<Done, Error> {
    let labeled = p.labels.iter().any(Option::is_some);
    let labels = labeled.then_some(p.labels.as_slice());
    let (d, trace) = dimension_by_contraction_with(&p.graph, labels, options(p))?;
    let summary = format!("{} stages, dimension {d}", trace.stages.len());
    Ok(Done::ok(trace_json(&trace), summary))
}

pub fn special_locus(p: &Prepared) -> Result<Done, Error> {
    let g = &p.graph;
    let locus = special_locus_with(g, options(p))?;
    let stages: Vec<Value> = locus
        .stages
        .iter()
        .map(|s| {
            json!({
                "faces": s.faces,
                "kind": s.kind,
                "deficiency": s.deficiency,
                "polynomial": s.polynomial.to_string(),
                "note": s.note,
            })
        })
        .collect();
    let mut results = json!({
        "stages": stages,
        "residual_faces": locus.residual_faces,
        "residual": locus.residual.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "zero_minors": locus.zero_minors,
    });
    let labeled = g.face_edges().into_iter().all(|e| p.labels[e].as_ref().is_some_and(|l| l.is_homogeneous()));
    let mut summary = format!("{} stage polynomials, {} residual minors", locus.stages.len(), locus.residual.len());
    if labeled {
        let at = g.slope_assignment();
        let avoids = locus.avoids(&at)?;
        results["evaluation"] = json!({
            "avoids": avoids,
            "first_special_stage": locus.first_special_stage(&at)?,
        });
        summary.push_str(if avoids { "; labels avoid the locus" } else { "; labels are in special position" });
    }
    Ok(Done::ok(results, summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disagreement_is_detected() {
        assert!(!disagree(&[("matrix", 1), ("contraction", 1)]));
        assert!(disagree(&[("matrix", 1), ("contraction", 2)]));
        assert!(!disagree(&[("matrix", 4)]));
    }
}
