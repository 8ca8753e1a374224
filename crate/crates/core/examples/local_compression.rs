//! Per-word saving of the new-word escapes: closed forms next to the bytes
//! the codec actually spends on a word of each length.
//!
//!     cargo run --example local_compression

use std::error::Error;

use tcss::codec::compress_container;
use tcss::metrics::{
    local_compression_alnum, local_compression_alnum_stated, local_compression_numeric,
    measured_local_compression,
};
use tcss::{CompressOptions, Dictionary};

/// Bytes spent on `word` followed by one space, measured by compressing
/// "word a" and discounting the token of the trailing letter.
fn escaped_bytes(word: &[u8], dict: &Dictionary) -> usize {
    let mut text = word.to_vec();
    text.extend_from_slice(b" a");
    let c = compress_container(&text, dict, CompressOptions::default());
    2 * (c.tokens.len() - 1)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dict = Dictionary::load_manifest(b"[common]\nthe\n")?;
    println!(" n  alnum      measured   1/n form   numeric    measured");
    for n in 1..=12 {
        let alpha = "q".repeat(n);
        let digits = "7".repeat(n);
        println!(
            "{n:2}  {:<10} {:<10} {:<10} {:<10} {:<10}",
            local_compression_alnum(n)?.to_string(),
            measured_local_compression(n, escaped_bytes(alpha.as_bytes(), &dict)).to_string(),
            local_compression_alnum_stated(n)?.to_string(),
            local_compression_numeric(n)?.to_string(),
            measured_local_compression(n, escaped_bytes(digits.as_bytes(), &dict)).to_string(),
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
