use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Edge, EdgeLabel, FaceCycle, FaceEntry, PlanarGraph, Sign};
use crate::algebra::rational::{self, Rational};
use crate::error::{Error, Result};

/// Wire form: `{"vertices":[..],"edges":[{"id":0,"tail":"u","head":"v","a":"3/2","b":"-1/2"}],"faces":[[{"edge":0,"sign":1}]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexName>,
    pub edges: Vec<EdgeJson>,
    #[serde(default)]
    pub faces: Vec<Vec<EntryJson>>,
}

/// Vertex ids are opaque; numbers are accepted and kept as their decimal text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexName {
    Text(String),
    Number(i64),
}

impl VertexName {
    fn text(&self) -> String {
        match self {
            VertexName::Text(s) => s.clone(),
            VertexName::Number(n) => n.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: usize,
    pub tail: VertexName,
    pub head: VertexName,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "rational::serde_opt_str")]
    pub a: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "rational::serde_opt_str")]
    pub b: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub edge: usize,
    pub sign: i64,
}

pub(super) fn parse(text: &str) -> Result<PlanarGraph> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    from_wire(raw)
}

pub(super) fn from_wire(raw: GraphJson) -> Result<PlanarGraph> {
    let vertices: Vec<String> = raw.vertices.iter().map(VertexName::text).collect();
    let index: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let lookup = |v: &VertexName| {
        let t = v.text();
        index
            .get(t.as_str())
            .copied()
            .ok_or_else(|| Error::Parse(format!("edge endpoint {t:?} is not a declared vertex")))
    };

    let mut edges = Vec::with_capacity(raw.edges.len());
    for e in &raw.edges {
        let label = match (&e.a, &e.b) {
            (Some(a), b) => Some(EdgeLabel { a: a.clone(), b: b.clone() }),
            (None, None) => None,
            (None, Some(_)) => {
                return Err(Error::Parse(format!("edge {} has a constant b but no slope a", e.id)));
            }
        };
        edges.push(Edge {
            id: e.id,
            tail: lookup(&e.tail)?,
            head: lookup(&e.head)?,
            label,
        });
    }
    edges.sort_by_key(|e| e.id);
    let mut position = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        if position.insert(e.id, i).is_some() {
            return Err(Error::Parse(format!("edge id {} used twice", e.id)));
        }
    }

    let mut faces = Vec::with_capacity(raw.faces.len());
    for (fi, entries) in raw.faces.iter().enumerate() {
        let mut cycle = Vec::with_capacity(entries.len());
        for en in entries {
            let edge = *position
                .get(&en.edge)
                .ok_or_else(|| Error::Parse(format!("face {fi} refers to unknown edge {}", en.edge)))?;
            let sign = Sign::from_value(en.sign)
                .ok_or_else(|| Error::Parse(format!("face {fi} has sign {} (expected 1 or -1)", en.sign)))?;
            cycle.push(FaceEntry { edge, sign });
        }
        faces.push(FaceCycle { id: fi, entries: cycle });
    }
    Ok(PlanarGraph { vertices, edges, faces })
}

pub(super) fn to_json(g: &PlanarGraph) -> GraphJson {
    GraphJson {
        vertices: g.vertices.iter().cloned().map(VertexName::Text).collect(),
        edges: g
            .edges
            .iter()
            .map(|e| EdgeJson {
                id: e.id,
                tail: VertexName::Text(g.vertices[e.tail].clone()),
                head: VertexName::Text(g.vertices[e.head].clone()),
                a: e.label.as_ref().map(|l| l.a.clone()),
                b: e.label.as_ref().and_then(|l| l.b.clone()),
            })
            .collect(),
        faces: g
            .faces
            .iter()
            .map(|f| {
                f.entries
                    .iter()
                    .map(|en| EntryJson {
                        edge: g.edges[en.edge].id,
                        sign: en.sign.value() as i64,
                    })
                    .collect()
            })
            .collect(),
    }
}
