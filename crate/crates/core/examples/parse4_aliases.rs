//! Repeated token sequences replaced by aliases defined in the container
//! header.
//!
//!     cargo run --example parse4_aliases

use std::error::Error;

use tcss::codec::compress_with_stats;
use tcss::{decompress, CompressOptions, Dictionary};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dict = Dictionary::load_manifest(
        b"[common]\nthe\nof\nand\nto\nin\n[words]\nchorus\nsing\nverse\nnight\nall\nlong\nwe\n",
    )?;
    let mut text = Vec::new();
    for verse in 1..=6 {
        text.extend_from_slice(format!("verse {verse}\n").as_bytes());
        text.extend_from_slice(b"and we sing the chorus all night long, all night long.\n\n");
    }

    for opts in [
        CompressOptions {
            parse2: true,
            parse4: false,
        },
        CompressOptions {
            parse2: true,
            parse4: true,
        },
    ] {
        let (c, stages) = compress_with_stats(&text, &dict, opts);
        let bytes = tcss::codec::write_container(&c);
        assert_eq!(decompress(&bytes, &dict)?, text);
        println!(
            "parse4={:<5} {} tokens, {} bytes on disk ({} in the alias table)",
            opts.parse4,
            c.tokens.len(),
            bytes.len(),
            stages.alias_table_bytes
        );
        for a in &c.aliases {
            let surface: Vec<String> = a
                .expansion
                .iter()
                .map(|t| {
                    dict.surface(*t)
                        .map(|s| String::from_utf8_lossy(s).into_owned())
                        .unwrap_or_else(|| format!("<{}>", t.0))
                })
                .collect();
            println!("  alias {} = {}", a.alias.0, surface.join(" "));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
