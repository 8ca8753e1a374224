//! Compression report plus a query benchmark: token comparisons over the
//! container against character comparisons over the raw text.
//!
//!     cargo run --release --example sbf_benchmark [-- --json]

use std::error::Error;
use std::path::Path;

use tcss::metrics::bench_report;
use tcss::{build_from_corpus, BuildOptions, CompressOptions, Dictionary};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let corpus = ["alice29.txt", "asyoulik.txt", "plrabn12.txt", "moby.txt"]
        .iter()
        .map(|f| std::fs::read(root.join("training").join(f)))
        .collect::<Result<Vec<_>, _>>()?;
    let dict = Dictionary::from_manifest(build_from_corpus(&corpus, &BuildOptions::default())?)?;
    let text = std::fs::read(root.join("ebooks/web_nt.txt"))?;

    let queries = [
        "Jesus",
        "the",
        "disciples",
        "bread",
        "Jerusalem",
        "faith",
        "hundred",
        "Zacchaeus",
    ];
    let report = bench_report(&text, &dict, CompressOptions::default(), &queries)?;
    if std::env::args().any(|a| a == "--json") {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
