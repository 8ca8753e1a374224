//! Token-at-a-time decoder state shared by decompression and search.

use crate::dictionary::Dictionary;
use crate::error::CodecError;
use crate::index_space::{
    decode_alnum_pair, decode_literal_byte, decode_numeric_triplet, decode_run_length,
    decode_separator_pair, BlockClass, TokenIndex,
};

/// Sink for decoded bytes. Search uses [`Discard`] and only tracks offsets.
pub(crate) trait Output {
    fn put(&mut self, bytes: &[u8]);
}

impl Output for Vec<u8> {
    #[inline]
    fn put(&mut self, bytes: &[u8]) {
        self.extend_from_slice(bytes);
    }
}

pub(crate) struct Discard;

impl Output for Discard {
    #[inline]
    fn put(&mut self, _: &[u8]) {}
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Chain {
    None,
    /// Last token was a single-word token or a word repeat.
    Word,
    Alnum,
    Numeric,
    Separator,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Event<'d> {
    /// A single-token word whose surface starts at `start`.
    Word {
        token: TokenIndex,
        surface: &'d [u8],
        start: u64,
    },
    /// `count` copies of `token`, each preceded by one space; the first copy
    /// starts at `first`.
    Repeat {
        token: TokenIndex,
        surface: &'d [u8],
        first: u64,
        count: usize,
    },
    /// First token of an escaped new word starting at `start`.
    EscapeStart {
        start: u64,
    },
    EscapeContinue,
    Other,
}

pub(crate) struct Walker<'d> {
    dict: &'d Dictionary,
    offset: u64,
    prev_word: bool,
    chain: Chain,
    padded: bool,
    last_word: TokenIndex,
}

impl<'d> Walker<'d> {
    pub(crate) fn new(dict: &'d Dictionary) -> Self {
        Walker {
            dict,
            offset: 0,
            prev_word: false,
            chain: Chain::None,
            padded: false,
            last_word: TokenIndex(0),
        }
    }

    /// Bytes produced so far.
    pub(crate) fn offset(&self) -> u64 {
        self.offset
    }

    #[inline]
    fn emit<O: Output>(&mut self, out: &mut O, bytes: &[u8]) {
        out.put(bytes);
        self.offset += bytes.len() as u64;
    }

    /// Writes the implicit space owed to a preceding word and returns the
    /// offset where the new word begins.
    #[inline]
    fn begin_word<O: Output>(&mut self, out: &mut O) -> u64 {
        if self.prev_word {
            self.emit(out, b" ");
        }
        self.prev_word = true;
        self.offset
    }

    #[inline]
    fn end_word(&mut self) {
        self.prev_word = false;
    }

    fn continuation(&self, position: usize, kind: Chain) -> Result<(), CodecError> {
        if self.chain != kind {
            return Err(CodecError::MalformedChain {
                position,
                reason: "continuation token without a matching start",
            });
        }
        if self.padded {
            return Err(CodecError::MalformedChain {
                position,
                reason: "continuation after a padded final token",
            });
        }
        Ok(())
    }

    pub(crate) fn step<O: Output>(
        &mut self,
        position: usize,
        t: TokenIndex,
        out: &mut O,
    ) -> Result<Event<'d>, CodecError> {
        let invalid = CodecError::InvalidToken {
            position,
            token: t.0,
        };
        let class = t.class();
        if class.is_single_word() {
            let surface = self.dict.surface(t).ok_or(invalid)?;
            let start = self.begin_word(out);
            self.emit(out, surface);
            self.chain = Chain::Word;
            self.last_word = t;
            return Ok(Event::Word {
                token: t,
                surface,
                start,
            });
        }
        let event = match class {
            BlockClass::WordRepeat => {
                if self.chain != Chain::Word {
                    return Err(CodecError::MalformedChain {
                        position,
                        reason: "word repeat without a preceding word",
                    });
                }
                let (_, count) = decode_run_length(t).map_err(|_| invalid)?;
                let token = self.last_word;
                let surface = self.dict.surface(token).expect("validated when first seen");
                let first = self.offset + 1;
                for _ in 0..count {
                    self.emit(out, b" ");
                    self.emit(out, surface);
                }
                return Ok(Event::Repeat {
                    token,
                    surface,
                    first,
                    count,
                });
            }
            BlockClass::AlnumStart | BlockClass::AlnumRepeat => {
                let (c1, c2, is_start) = decode_alnum_pair(t).map_err(|_| invalid)?;
                let event = if is_start {
                    let start = self.begin_word(out);
                    self.chain = Chain::Alnum;
                    Event::EscapeStart { start }
                } else {
                    self.continuation(position, Chain::Alnum)?;
                    Event::EscapeContinue
                };
                let (b1, b2) = (c1.to_byte().expect("non-pad"), c2.to_byte());
                self.emit(out, &[b1]);
                if let Some(b2) = b2 {
                    self.emit(out, &[b2]);
                }
                self.padded = b2.is_none();
                return Ok(event);
            }
            BlockClass::NumericStart | BlockClass::NumericRepeat => {
                let (tr, is_start) = decode_numeric_triplet(t).map_err(|_| invalid)?;
                let event = if is_start {
                    let start = self.begin_word(out);
                    self.chain = Chain::Numeric;
                    Event::EscapeStart { start }
                } else {
                    self.continuation(position, Chain::Numeric)?;
                    Event::EscapeContinue
                };
                let (digits, n) = tr.digits();
                self.emit(out, &digits[..n]);
                self.padded = tr.is_padded();
                return Ok(event);
            }
            BlockClass::SeparatorStart | BlockClass::SeparatorRepeat => {
                let (s1, s2, is_start) = decode_separator_pair(t).map_err(|_| invalid)?;
                if is_start {
                    self.chain = Chain::Separator;
                } else {
                    self.continuation(position, Chain::Separator)?;
                }
                self.emit(out, &[s1.to_byte().expect("non-pad")]);
                if let Some(b) = s2.to_byte() {
                    self.emit(out, &[b]);
                }
                self.padded = s2.is_pad();
                self.end_word();
                return Ok(Event::Other);
            }
            BlockClass::SpaceRun => {
                let (_, n) = decode_run_length(t).map_err(|_| invalid)?;
                self.emit(out, &[b' '; 51][..n]);
                Event::Other
            }
            BlockClass::Newline => {
                self.emit(out, b"\n");
                Event::Other
            }
            BlockClass::Tab => {
                self.emit(out, b"\t");
                Event::Other
            }
            BlockClass::LiteralByte | BlockClass::ControlByte => {
                let b = decode_literal_byte(t).map_err(|_| invalid)?;
                self.emit(out, &[b]);
                Event::Other
            }
            _ => return Err(invalid),
        };
        self.chain = Chain::None;
        self.end_word();
        Ok(event)
    }
}
