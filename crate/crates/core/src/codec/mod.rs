//! Compression pipeline, container format and decoder.

mod container;
mod parse;
mod parse4;
pub(crate) mod walker;

pub(crate) use container::AliasTable;
pub use container::{
    read_container, write_container, AliasDefinition, Container, ALIAS_BASE, FLAG_PARSE2,
    FLAG_PARSE4, HEADER_LEN, MAGIC, MAX_ALIASES, MAX_EXPANSION, VERSION,
};
pub use parse::{compress_parse1, compress_parse2, escape_word, SINGLE_SPACE};
pub use parse4::compress_parse4;

use serde::Serialize;

use crate::dictionary::Dictionary;
use crate::error::CodecError;
use crate::tokenizer::lex;
use walker::Walker;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompressOptions {
    pub parse2: bool,
    pub parse4: bool,
}

impl Default for CompressOptions {
    fn default() -> Self {
        CompressOptions {
            parse2: true,
            parse4: false,
        }
    }
}

impl CompressOptions {
    pub const ALL: [CompressOptions; 4] = [
        CompressOptions {
            parse2: false,
            parse4: false,
        },
        CompressOptions {
            parse2: true,
            parse4: false,
        },
        CompressOptions {
            parse2: false,
            parse4: true,
        },
        CompressOptions {
            parse2: true,
            parse4: true,
        },
    ];
}

/// Token counts after each stage; a disabled stage repeats the previous count.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ParseStats {
    pub parse1_tokens: usize,
    pub parse2_tokens: usize,
    pub parse4_tokens: usize,
    pub aliases: usize,
    pub alias_table_bytes: usize,
}

pub fn compress_with_stats(
    text: &[u8],
    dict: &Dictionary,
    opts: CompressOptions,
) -> (Container, ParseStats) {
    let mut tokens = compress_parse1(&lex(text, dict), dict);
    let mut stats = ParseStats {
        parse1_tokens: tokens.len(),
        ..Default::default()
    };
    let mut flags = 0;
    if opts.parse2 {
        tokens = compress_parse2(&tokens, dict);
        flags |= FLAG_PARSE2;
    }
    stats.parse2_tokens = tokens.len();
    let mut aliases = Vec::new();
    if opts.parse4 {
        (aliases, tokens) = compress_parse4(&tokens);
        flags |= FLAG_PARSE4;
    }
    stats.parse4_tokens = tokens.len();
    let container = Container {
        flags,
        dict_hash: dict.hash(),
        original_len: text.len() as u64,
        aliases,
        tokens,
    };
    stats.aliases = container.aliases.len();
    stats.alias_table_bytes = container.alias_table_len();
    (container, stats)
}

pub fn compress_container(text: &[u8], dict: &Dictionary, opts: CompressOptions) -> Container {
    compress_with_stats(text, dict, opts).0
}

pub fn compress(text: &[u8], dict: &Dictionary, opts: CompressOptions) -> Vec<u8> {
    write_container(&compress_container(text, dict, opts))
}

pub(crate) fn check_hash(c: &Container, dict: &Dictionary) -> Result<(), CodecError> {
    if c.dict_hash != dict.hash() {
        return Err(CodecError::HashMismatch {
            container: c.dict_hash,
            dictionary: dict.hash(),
        });
    }
    Ok(())
}

pub fn decompress_container(c: &Container, dict: &Dictionary) -> Result<Vec<u8>, CodecError> {
    check_hash(c, dict)?;
    let table = AliasTable::new(c)?;
    let mut out = Vec::with_capacity(c.original_len.min(1 << 30) as usize);
    let mut walker = Walker::new(dict);
    let mut position = 0;
    for &t in &c.tokens {
        match table.lookup(t)? {
            Some(expansion) => {
                for &e in expansion {
                    walker.step(position, e, &mut out)?;
                    position += 1;
                }
            }
            None => {
                walker.step(position, t, &mut out)?;
                position += 1;
            }
        }
    }
    if walker.offset() != c.original_len {
        return Err(CodecError::LengthMismatch {
            decoded: walker.offset(),
            expected: c.original_len,
        });
    }
    Ok(out)
}

pub fn decompress(bytes: &[u8], dict: &Dictionary) -> Result<Vec<u8>, CodecError> {
    decompress_container(&read_container(bytes)?, dict)
}
