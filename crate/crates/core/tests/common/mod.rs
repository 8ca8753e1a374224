#![allow(dead_code)]

use std::path::PathBuf;

use tcss::{build_from_corpus, BuildOptions, Dictionary};

pub const TRAINING: [&str; 6] = [
    "sotu_post1950.txt",
    "alice29.txt",
    "asyoulik.txt",
    "plrabn12.txt",
    "moby.txt",
    "wn_gloss.txt",
];

pub const EBOOKS: [&str; 3] = ["lcet10.txt", "kjv.txt", "web_nt.txt"];

pub fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(rel)
}

pub fn read_fixture(rel: &str) -> Vec<u8> {
    std::fs::read(fixture(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

/// Dictionary from every training text at the default capacities.
pub fn trained_dictionary() -> Dictionary {
    let corpus: Vec<Vec<u8>> = TRAINING
        .iter()
        .map(|f| read_fixture(&format!("training/{f}")))
        .collect();
    let manifest =
        build_from_corpus(&corpus, &BuildOptions::default()).expect("training corpus builds");
    Dictionary::from_manifest(manifest).expect("built manifest loads")
}

/// A small dictionary for tests that only need some vocabulary.
pub fn small_dictionary() -> Dictionary {
    let corpus = [
        read_fixture("training/alice29.txt"),
        read_fixture("training/asyoulik.txt"),
    ];
    let opts = BuildOptions {
        words_size: 4000,
        composite_size: 200,
        ..BuildOptions::default()
    };
    Dictionary::from_manifest(build_from_corpus(&corpus, &opts).unwrap()).unwrap()
}
