//! How words missing from the dictionary, punctuation and stray bytes are
//! spelled out as token chains.
//!
//!     cargo run --example escape_codes

use std::error::Error;

use tcss::codec::compress_container;
use tcss::index_space::{
    alnum_chain, decode_alnum_pair, decode_numeric_triplet, numeric_chain, separator_chain,
};
use tcss::{CompressOptions, Dictionary, TokenIndex};

fn show(tokens: &[TokenIndex]) -> String {
    tokens
        .iter()
        .map(|t| format!("{}:{}", t.0, t.class().name()))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut chain = Vec::new();
    alnum_chain(b"Quux9", &mut chain)?;
    println!("Quux9    -> {}", show(&chain));
    for &t in &chain {
        let (a, b, start) = decode_alnum_pair(t)?;
        let b = b.to_byte().map(|b| b as char).unwrap_or('_');
        println!(
            "           {} {}{} start={start}",
            t.0,
            a.to_byte().unwrap_or(b'?') as char,
            b
        );
    }

    chain.clear();
    numeric_chain(b"1990", &mut chain)?;
    println!("1990     -> {}", show(&chain));
    for &t in &chain {
        let (triplet, start) = decode_numeric_triplet(t)?;
        let (digits, len) = triplet.digits();
        println!(
            "           {} {:?} start={start}",
            t.0,
            std::str::from_utf8(&digits[..len])?
        );
    }

    chain.clear();
    separator_chain(b"?!\" (", &mut chain)?;
    println!("?!\" (    -> {}", show(&chain));

    // inside a real stream: dictionary words, an implicit space, escapes
    let dict = Dictionary::load_manifest(b"[common]\nthe\nof\n[words]\nhouse\n")?;
    let text = b"the house of Quux9, 1990\t\x01\xe9";
    let c = compress_container(text, &dict, CompressOptions::default());
    println!("{:?}", String::from_utf8_lossy(text));
    println!("  {} bytes -> {} tokens", text.len(), c.tokens.len());
    println!("  {}", show(&c.tokens));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
