//! Compresses a held-out e-book under every parse configuration and checks
//! that each container decodes back to the original bytes.
//!
//!     cargo run --release --example compress_roundtrip

use std::error::Error;
use std::path::Path;

use tcss::codec::compress_with_stats;
use tcss::{build_from_corpus, decompress, BuildOptions, CompressOptions, Dictionary};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let corpus = ["alice29.txt", "asyoulik.txt", "plrabn12.txt", "moby.txt"]
        .iter()
        .map(|f| std::fs::read(root.join("training").join(f)))
        .collect::<Result<Vec<_>, _>>()?;
    let dict = Dictionary::from_manifest(build_from_corpus(&corpus, &BuildOptions::default())?)?;
    let text = std::fs::read(root.join("ebooks/lcet10.txt"))?;

    println!("{} bytes of input", text.len());
    for opts in CompressOptions::ALL {
        let (container, stages) = compress_with_stats(&text, &dict, opts);
        let bytes = tcss::codec::write_container(&container);
        let restored = decompress(&bytes, &dict)?;
        if restored != text {
            return Err(format!("round trip failed for {opts:?}").into());
        }
        println!(
            "parse2={:<5} parse4={:<5} -> {:>7} bytes  z={:.4}  tokens {} / {} / {}  aliases {}",
            opts.parse2,
            opts.parse4,
            bytes.len(),
            1.0 - bytes.len() as f64 / text.len() as f64,
            stages.parse1_tokens,
            stages.parse2_tokens,
            stages.parse4_tokens,
            stages.aliases,
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
