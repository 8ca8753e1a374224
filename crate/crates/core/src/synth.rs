//! Seeded document generators for tests, examples and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::dictionary::Dictionary;
use crate::index_space::SEPARATOR_TABLE;

const ALNUM: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

/// Every single-word surface of the dictionary: common, words, contractions.
pub fn vocabulary(dict: &Dictionary) -> Vec<&str> {
    let m = dict.manifest();
    m.common
        .iter()
        .chain(&m.words)
        .chain(m.contractions.iter().flatten())
        .map(String::as_str)
        .collect()
}

pub fn random_alnum_word<R: Rng>(rng: &mut R, len: usize) -> Vec<u8> {
    (0..len)
        .map(|_| *ALNUM.choose(rng).expect("non-empty"))
        .collect()
}

pub fn random_numeric_word<R: Rng>(rng: &mut R, len: usize) -> Vec<u8> {
    (0..len).map(|_| rng.gen_range(b'0'..=b'9')).collect()
}

/// A stress document mixing dictionary words, composites, new alphanumeric
/// and numeric words, punctuation runs, long space runs, tabs, CRLF, control
/// and high bytes.
pub fn mixed_document<R: Rng>(rng: &mut R, dict: &Dictionary, pieces: usize) -> Vec<u8> {
    let vocab = vocabulary(dict);
    let composites = &dict.manifest().composites;
    let mut out = Vec::new();
    for _ in 0..pieces {
        match rng.gen_range(0..100) {
            0..=44 if !vocab.is_empty() => {
                out.extend_from_slice(vocab.choose(rng).expect("non-empty").as_bytes())
            }
            45..=49 if !composites.is_empty() => out.extend_from_slice(
                composites
                    .choose(rng)
                    .expect("non-empty")
                    .join(" ")
                    .as_bytes(),
            ),
            50..=59 => {
                let len = rng.gen_range(1..=20);
                out.extend(random_alnum_word(rng, len));
            }
            60..=64 => {
                let len = rng.gen_range(1..=12);
                out.extend(random_numeric_word(rng, len));
            }
            65..=72 => {
                let len = rng.gen_range(1..=6);
                out.extend((0..len).map(|_| *SEPARATOR_TABLE.choose(rng).expect("non-empty")));
            }
            73..=75 => {
                let len = rng.gen_range(2..=130);
                out.resize(out.len() + len, b' ');
            }
            76..=78 => out.push(b'\t'),
            79..=82 => out.extend_from_slice(b"\r\n"),
            83..=84 => out.push(b'\n'),
            85..=87 => out.push(rng.gen_range(0..32)),
            88..=90 => out.push(rng.gen_range(127..=255)),
            _ => out.push(b' '),
        }
        if rng.gen_bool(0.6) {
            out.push(b' ');
        }
    }
    out
}

/// Running text of dictionary words: single spaces, with sentence breaks
/// and line breaks at roughly natural rates. Words are drawn with a
/// rank-based skew so that common words dominate, as in prose.
pub fn dictionary_prose<R: Rng>(rng: &mut R, dict: &Dictionary, target_bytes: usize) -> Vec<u8> {
    let vocab = vocabulary(dict);
    assert!(!vocab.is_empty(), "dictionary has no words");
    let mut out = Vec::with_capacity(target_bytes + 64);
    let mut since_break = 0;
    while out.len() < target_bytes {
        // rank ~ exp(uniform) skews toward the front of the list
        let rank = (rng.gen::<f64>() * (vocab.len() as f64).ln()).exp() as usize - 1;
        out.extend_from_slice(vocab[rank.min(vocab.len() - 1)].as_bytes());
        since_break += 1;
        let sep: &[u8] = match rng.gen_range(0..100) {
            0..=5 => b". ",
            6..=9 => b", ",
            10..=13 if since_break > 8 => {
                since_break = 0;
                b"\n"
            }
            _ => b" ",
        };
        out.extend_from_slice(sep);
    }
    out
}

/// Redundancy-free text: words drawn uniformly from the dictionary's
/// `[common]` and `[words]` lists, separated by single spaces.
pub fn uniform_words<R: Rng>(rng: &mut R, dict: &Dictionary, count: usize) -> Vec<u8> {
    let m = dict.manifest();
    let pool: Vec<&str> = m
        .common
        .iter()
        .chain(&m.words)
        .map(String::as_str)
        .collect();
    let mut out = Vec::new();
    for i in 0..count {
        if i > 0 {
            out.push(b' ');
        }
        out.extend_from_slice(pool.choose(rng).expect("non-empty dictionary").as_bytes());
    }
    out
}
