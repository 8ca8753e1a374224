//! Whole-word search directly over a compressed container, checked against
//! a plain byte scan of the original text.
//!
//!     cargo run --release --example compressed_search

use std::error::Error;
use std::path::Path;

use tcss::codec::compress_container;
use tcss::{
    build_from_corpus, build_plan, naive_scan, scan, BuildOptions, CompressOptions, Dictionary,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let corpus = ["alice29.txt", "asyoulik.txt", "plrabn12.txt"]
        .iter()
        .map(|f| std::fs::read(root.join("training").join(f)))
        .collect::<Result<Vec<_>, _>>()?;
    let dict = Dictionary::from_manifest(build_from_corpus(&corpus, &BuildOptions::default())?)?;
    let text = std::fs::read(root.join("ebooks/lcet10.txt"))?;
    let container = compress_container(
        &text,
        &dict,
        CompressOptions {
            parse2: true,
            parse4: true,
        },
    );

    println!(
        "{:<12} {:>7} {:>10} {:>10}  via",
        "word", "matches", "tokens", "chars"
    );
    for word in [
        "the",
        "text",
        "electronic",
        "Gutenberg",
        "SGML",
        "1991",
        "of",
    ] {
        let plan = build_plan(word.as_bytes(), &dict)?;
        let found = scan(&container, &dict, &plan)?;
        let naive = naive_scan(&text, word.as_bytes());
        let offsets: Vec<u64> = found.matches.iter().map(|m| m.char_offset).collect();
        if offsets != naive.matches {
            return Err(format!("{word}: compressed scan disagrees with the byte scan").into());
        }
        let via = found
            .matches
            .first()
            .map(|m| format!("{:?}", m.via))
            .unwrap_or_default();
        println!(
            "{word:<12} {:>7} {:>10} {:>10}  {via}{}",
            offsets.len(),
            found.token_comparisons,
            naive.char_comparisons,
            if plan.needs_escape_scan {
                " (escape scan)"
            } else {
                ""
            },
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
