use std::path::PathBuf;

use fact_core::corpus::{corpus_run, materialize, Corpus, CorpusConfig, Instance};
use fact_core::io::parse_json;
use fact_core::Report;

fn data_dir() -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "data"].iter().collect()
}

fn load(name: &str) -> Corpus {
    let dir = data_dir();
    let cfg = CorpusConfig::parse(&std::fs::read_to_string(dir.join(name)).unwrap()).unwrap();
    materialize(&cfg, &dir).unwrap()
}

#[test]
fn default_corpus_is_green() {
    let c = load("corpus.json");
    let r = corpus_run(&c).unwrap();
    assert!(r.ok(), "{r}");
    assert_eq!(r.get_stat("instances.set"), Some(8));
    assert_eq!(r.get_stat("instances.cat"), Some(8));
    assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
}

#[test]
fn default_corpus_regenerates_identically() {
    let a = load("corpus.json").to_json();
    let b = load("corpus.json").to_json();
    assert_eq!(a, b);
    let back: Corpus = parse_json(&a).unwrap();
    assert_eq!(back.to_json(), a);
}

#[test]
fn file_entries_keep_their_names() {
    let c = load("corpus.json");
    let names: Vec<String> = c.instances.iter().map(Instance::name).collect();
    for n in ["M3", "Z6", "MO2", "Wright triangle", "Sub(GF(3)^2)", "M2(GF(3))"] {
        assert!(names.iter().any(|x| x == n), "{n}");
    }
}

#[test]
fn n5_corpus_is_red_with_witness() {
    let r = corpus_run(&load("n5_corpus.json")).unwrap();
    assert!(!r.ok());
    let w: Vec<_> = r.witnesses_for("lattice:N5.precondition").collect();
    assert_eq!(w.len(), 1);
}

#[test]
fn every_failed_verdict_has_a_witness() {
    for r in [corpus_run(&load("n5_corpus.json")).unwrap()] {
        for v in r.failed() {
            assert!(r.witnesses_for(&v.name).next().is_some(), "{}", v.name);
        }
    }
}
