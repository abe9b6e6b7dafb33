//! The JSON fixtures under `fixtures/` must match the graphs built in code.
//! Run with `BLESS=1` to rewrite them.

use std::fs;
use std::path::PathBuf;

use splinedim::fixtures;
use splinedim::triangulation::Triangulation;
use splinedim::PlanarGraph;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn bless() -> bool {
    std::env::var_os("BLESS").is_some()
}

fn check(path: PathBuf, expected: &str) -> String {
    if bless() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, format!("{expected}\n")).unwrap();
    }
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}; run with BLESS=1", path.display()))
}

#[test]
fn graph_fixtures_round_trip() {
    for (name, g) in fixtures::all() {
        let text = check(root().join("graphs").join(format!("{name}.json")), &g.to_json_string());
        let parsed = PlanarGraph::from_json(&text).unwrap();
        assert_eq!(parsed, g, "{name}");
    }
}

#[test]
fn triangulation_fixtures_round_trip() {
    let all = [
        ("homogenization", fixtures::homogenization_triangulation()),
        ("morgan-scott", fixtures::morgan_scott_triangulation()),
        ("single-triangle", fixtures::single_triangle_triangulation()),
    ];
    for (name, t) in all {
        let text = check(root().join("triangulations").join(format!("{name}.json")), &t.to_json_string());
        assert_eq!(Triangulation::from_json(&text).unwrap(), t, "{name}");
    }
}
