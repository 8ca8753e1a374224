//! Builds a dictionary manifest from the training texts and prints what
//! landed in each section.
//!
//!     cargo run --example build_dictionary

use std::error::Error;
use std::path::Path;

use tcss::{build_from_corpus, BuildOptions, Dictionary};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/training");
    let corpus = ["alice29.txt", "asyoulik.txt"]
        .iter()
        .map(|f| std::fs::read(dir.join(f)))
        .collect::<Result<Vec<_>, _>>()?;

    let opts = BuildOptions {
        words_size: 5000,
        composite_size: 200,
        ..BuildOptions::default()
    };
    let manifest = build_from_corpus(&corpus, &opts)?;
    println!("common:      {}", manifest.common.len());
    println!("words:       {}", manifest.words.len());
    println!("composites:  {}", manifest.composites.len());
    println!("first common words: {}", manifest.common[..12].join(" "));
    let shown: Vec<String> = manifest
        .composites
        .iter()
        .take(8)
        .map(|c| c.join(" "))
        .collect();
    println!("top composites: {}", shown.join(" | "));
    for (kind, list) in ["n't", "'s", "'m", "'ll"]
        .iter()
        .zip(&manifest.contractions)
    {
        println!(
            "contractions {kind:4} {}",
            list.iter().take(6).cloned().collect::<Vec<_>>().join(" ")
        );
    }

    // the text form reloads to the same dictionary
    let text = manifest.to_text();
    let dict = Dictionary::load_manifest(text.as_bytes())?;
    println!("manifest: {} bytes, hash {:016x}", text.len(), dict.hash());
    let the = dict.lookup_word(b"the").ok_or("'the' missing")?;
    println!("'the' -> {} ({})", the.0, the.class().name());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
