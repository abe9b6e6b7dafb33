use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use splinedim::algebra::rational;
use splinedim::triangulation::{face_translatable_check, homogenize, Dual, Triangulation};
use splinedim::{EdgeLabel, Error, PlanarGraph};

/// What the input file turned into, ready for a command.
pub struct Prepared {
    pub digest: String,
    pub graph: PlanarGraph,
    pub labels: Vec<Option<EdgeLabel>>,
    pub triangulation: Option<(Triangulation, Dual)>,
    pub warnings: Vec<String>,
}

pub struct LoadOptions<'a> {
    pub labels: Option<&'a str>,
    pub homogenize: bool,
    pub rotate: Option<&'a str>,
    pub seed: Option<u64>,
}

pub enum Raw {
    Graph(PlanarGraph),
    Triangulation(Triangulation),
}

pub fn read(path: &Path) -> Result<(String, Raw), Error> {
    let bytes = fs::read(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let digest = crate::report::digest(&bytes);
    let text = String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let raw = if value.get("points").is_some() {
        Raw::Triangulation(Triangulation::from_json(&text)?)
    } else {
        Raw::Graph(PlanarGraph::from_json(&text)?)
    };
    Ok((digest, raw))
}

/// `x0,y0` or `auto`.
pub fn rotate(t: &Triangulation, spec: &str) -> Result<Triangulation, Error> {
    let (x0, y0) = if spec == "auto" {
        t.auto_rotation()
    } else {
        let (x, y) = spec
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("rotation {spec:?} is not x0,y0 or auto")))?;
        (rational::parse(x.trim())?, rational::parse(y.trim())?)
    };
    t.rotated(&x0, &y0)
}

pub fn load(path: &Path, opts: &LoadOptions) -> Result<Prepared, Error> {
    let (digest, raw) = read(path)?;
    let mut warnings = Vec::new();
    match raw {
        Raw::Graph(graph) => {
            let mut labels = match (opts.labels, opts.seed) {
                (Some(spec), _) => parse_labels(spec, graph.num_edges())?,
                (None, Some(seed)) => random_labels(seed, graph.num_edges()),
                (None, None) => graph.labels(),
            };
            if opts.homogenize {
                labels = homogenize(&labels).labels;
            }
            let graph = graph.with_labels(&labels);
            Ok(Prepared {
                digest,
                graph,
                labels,
                triangulation: None,
                warnings,
            })
        }
        Raw::Triangulation(t) => {
            t.validate()?;
            let t = match opts.rotate {
                Some(spec) => rotate(&t, spec)?,
                None => t,
            };
            let dual = t.dualize()?;
            for w in face_translatable_check(&dual.graph, &dual.labels()) {
                if let Some(reason) = w.reason {
                    warnings.push(format!("face {} is not translatable: {reason}", w.face));
                }
            }
            // dimensions of a triangulation are always read off the
            // homogenized labels
            let labels = homogenize(&dual.labels()).labels;
            Ok(Prepared {
                digest,
                graph: dual.graph.with_labels(&labels),
                labels,
                triangulation: Some((t, dual)),
                warnings,
            })
        }
    }
}

/// Inline `1,2,3/2,_` or `1:-1,...` (slope:constant), or a file holding
/// either that text or a JSON array of strings and nulls.
pub fn parse_labels(spec: &str, edges: usize) -> Result<Vec<Option<EdgeLabel>>, Error> {
    let text = if Path::new(spec).is_file() {
        fs::read_to_string(spec).map_err(|e| Error::Parse(format!("{spec}: {e}")))?
    } else {
        spec.to_string()
    };
    let text = text.trim();
    let entries: Vec<Option<String>> = if text.starts_with('[') {
        let v: Vec<Value> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        v.into_iter()
            .map(|x| match x {
                Value::Null => Ok(None),
                Value::String(s) => Ok(Some(s)),
                Value::Number(n) => Ok(Some(n.to_string())),
                other => Err(Error::Parse(format!("label {other} is not a string"))),
            })
            .collect::<Result<_, _>>()?
    } else {
        text.split(',')
            .map(|s| s.trim())
            .map(|s| (!(s == "_" || s.is_empty())).then(|| s.to_string()))
            .collect()
    };
    if entries.len() != edges {
        return Err(Error::Parse(format!("{} labels given for {edges} edges", entries.len())));
    }
    entries
        .into_iter()
        .map(|e| match e {
            None => Ok(None),
            Some(s) => match s.split_once(':') {
                Some((a, b)) => Ok(Some(EdgeLabel::affine(rational::parse(a.trim())?, rational::parse(b.trim())?))),
                None => Ok(Some(EdgeLabel::homogeneous(rational::parse(&s)?))),
            },
        })
        .collect()
}

/// Distinct random slopes `p/q`, reproducible from the seed.
pub fn random_labels(seed: u64, edges: usize) -> Vec<Option<EdgeLabel>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = Vec::new();
    while seen.len() < edges {
        let a = rational::frac(rng.gen_range(-500..=500), rng.gen_range(1..=31));
        if !seen.contains(&a) {
            seen.push(a);
        }
    }
    seen.into_iter().map(|a| Some(EdgeLabel::homogeneous(a))).collect()
}
