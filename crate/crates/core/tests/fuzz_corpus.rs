//! Replays the fuzz seed corpus through the fuzz targets' checks on stable.

use std::fs;
use std::path::PathBuf;

use sgcolor::color::verify;
use sgcolor::construct::color_53;
use sgcolor::exact::Certificate;
use sgcolor::{generate, Coloring, DemandMap, SignedGraph};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let text = fs::read_to_string(&path).unwrap();
            (path.file_name().unwrap().to_string_lossy().into_owned(), text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn graph_seeds_round_trip() {
    let mut parsed = 0;
    for (name, text) in seeds("parse_graph") {
        if let Ok(g) = SignedGraph::parse(&text) {
            let out = g.to_text();
            assert_eq!(SignedGraph::parse(&out).unwrap(), g, "{name}");
            parsed += 1;
        }
    }
    assert!(parsed >= 3);
}

#[test]
fn coloring_seeds_round_trip() {
    let mut parsed = 0;
    for (name, text) in seeds("parse_coloring") {
        if let Ok(f) = Coloring::parse(&text) {
            assert_eq!(Coloring::parse(&f.to_text()).unwrap(), f, "{name}");
            parsed += 1;
        }
    }
    assert!(parsed >= 2);
}

#[test]
fn certificate_seeds_round_trip() {
    let mut parsed = 0;
    for (name, text) in seeds("parse_certificate") {
        if let Ok(c) = Certificate::parse(&text) {
            assert_eq!(Certificate::parse(&c.to_text()).unwrap(), c, "{name}");
            parsed += 1;
        }
    }
    assert!(parsed >= 2);
}

#[test]
fn pipeline_seeds_color_or_exclude() {
    let k4 = generate::k4_minus();
    for (name, text) in seeds("color_pipeline") {
        let Ok(g) = SignedGraph::parse(&text) else { continue };
        match color_53(&g).unwrap() {
            Some(f) => assert!(verify(&g, &f, &DemandMap::constant(g.n(), 3)).is_ok(), "{name}"),
            None => assert!(g.same_underlying(&k4) && g.switching_equivalent(&k4).unwrap(), "{name}"),
        }
    }
}
