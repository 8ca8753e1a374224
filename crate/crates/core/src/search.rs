//! Whole-word search directly over the compressed token stream.
//!
//! A query compiles into a table from tokens to the byte offsets where the
//! word sits inside that token's surface: the word's own token, plus every
//! composite and contraction that contains it. Words missing from the
//! dictionary can only appear as escape chains, so for them the scan also
//! matches the exact escape sequence with chain boundaries checked.

use serde::Serialize;

use crate::codec::walker::{Discard, Event, Walker};
use crate::codec::{check_hash, escape_word, AliasTable, Container};
use crate::dictionary::Dictionary;
use crate::error::{CodecError, SearchError};
use crate::index_space::{BlockClass, TokenIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MatchVia {
    SingleToken,
    Composite,
    Contraction,
    Escape,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Match {
    /// Index into the alias-expanded token stream.
    pub token_offset: u64,
    /// Byte offset of the word in the decompressed text.
    pub char_offset: u64,
    pub via: MatchVia,
}

/// A token whose surface embeds the query at the given byte offsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub token: TokenIndex,
    pub offsets: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct SearchPlan {
    pub word: Vec<u8>,
    /// The word's own token when it is in the dictionary.
    pub single_tokens: Vec<TokenIndex>,
    /// Composites and contractions containing the word as a whole word.
    pub composite_tokens: Vec<Embedding>,
    pub escape_sequence: Vec<TokenIndex>,
    pub needs_escape_scan: bool,
    /// Dense token -> index into `hits`, 0 meaning no match.
    table: Vec<u32>,
    hits: Vec<(MatchVia, Vec<u32>)>,
}

impl SearchPlan {
    #[inline]
    fn hit(&self, t: TokenIndex) -> Option<&(MatchVia, Vec<u32>)> {
        match self.table[t.0 as usize] {
            0 => None,
            i => Some(&self.hits[i as usize - 1]),
        }
    }
}

fn validate(w: &[u8]) -> Result<(), SearchError> {
    if w.is_empty() {
        return Err(SearchError::EmptyQuery);
    }
    if w.iter().all(u8::is_ascii_alphanumeric) {
        return Ok(());
    }
    let text = String::from_utf8_lossy(w).into_owned();
    let parts: Vec<&[u8]> = w
        .split(|b| b.is_ascii_whitespace())
        .filter(|p| !p.is_empty())
        .collect();
    if parts.len() > 1
        && parts
            .iter()
            .all(|p| p.iter().all(u8::is_ascii_alphanumeric))
    {
        return Err(SearchError::MultiWord(text));
    }
    Err(SearchError::InvalidQuery(text))
}

pub fn build_plan(w: &[u8], dict: &Dictionary) -> Result<SearchPlan, SearchError> {
    validate(w)?;
    let mut plan = SearchPlan {
        word: w.to_vec(),
        single_tokens: Vec::new(),
        composite_tokens: Vec::new(),
        escape_sequence: Vec::new(),
        needs_escape_scan: false,
        table: vec![0; 1 << 16],
        hits: Vec::new(),
    };
    match dict.lookup_word(w) {
        Some(t) => {
            plan.single_tokens.push(t);
            plan.hits.push((MatchVia::SingleToken, vec![0]));
            plan.table[t.0 as usize] = plan.hits.len() as u32;
        }
        None => {
            escape_word(w, &mut plan.escape_sequence);
            plan.needs_escape_scan = true;
        }
    }
    for c in dict.components_of(w) {
        match plan.composite_tokens.last_mut() {
            Some(e) if e.token == c.token => e.offsets.push(c.offset),
            _ => plan.composite_tokens.push(Embedding {
                token: c.token,
                offsets: vec![c.offset],
            }),
        }
    }
    for e in &plan.composite_tokens {
        let via = if e.token.class() == BlockClass::Composite {
            MatchVia::Composite
        } else {
            MatchVia::Contraction
        };
        plan.hits.push((via, e.offsets.clone()));
        plan.table[e.token.0 as usize] = plan.hits.len() as u32;
    }
    Ok(plan)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub matches: Vec<Match>,
    pub token_comparisons: u64,
}

/// Partial match of the escape sequence.
struct EscapeWindow {
    matched: usize,
    char_offset: u64,
    token_offset: u64,
}

pub fn scan(
    container: &Container,
    dict: &Dictionary,
    plan: &SearchPlan,
) -> Result<ScanResult, SearchError> {
    check_hash(container, dict)?;
    let aliases = AliasTable::new(container)?;
    let esc = &plan.escape_sequence[..];
    let continuation = match esc.first().map(|t| t.class()) {
        Some(BlockClass::NumericStart) => BlockClass::NumericRepeat,
        _ => BlockClass::AlnumRepeat,
    };

    let mut result = ScanResult::default();
    let mut walker = Walker::new(dict);
    let mut window: Option<EscapeWindow> = None;
    let mut position = 0usize;

    let mut visit = |t: TokenIndex, result: &mut ScanResult| -> Result<(), CodecError> {
        result.token_comparisons += 1;
        if let Some(w) = window.as_mut() {
            if w.matched == esc.len() {
                if t.class() != continuation {
                    result.matches.push(Match {
                        token_offset: w.token_offset,
                        char_offset: w.char_offset,
                        via: MatchVia::Escape,
                    });
                }
                window = None;
            } else {
                result.token_comparisons += 1;
                if t == esc[w.matched] {
                    w.matched += 1;
                } else {
                    window = None;
                }
            }
        }
        match walker.step(position, t, &mut Discard)? {
            Event::Word { token, start, .. } => {
                if let Some((via, offsets)) = plan.hit(token) {
                    for &o in offsets {
                        result.matches.push(Match {
                            token_offset: position as u64,
                            char_offset: start + o as u64,
                            via: *via,
                        });
                    }
                }
            }
            Event::Repeat {
                token,
                surface,
                first,
                count,
            } => {
                if let Some((via, offsets)) = plan.hit(token) {
                    let stride = surface.len() as u64 + 1;
                    for r in 0..count as u64 {
                        for &o in offsets {
                            result.matches.push(Match {
                                token_offset: position as u64,
                                char_offset: first + r * stride + o as u64,
                                via: *via,
                            });
                        }
                    }
                }
            }
            Event::EscapeStart { start } if plan.needs_escape_scan && t == esc[0] => {
                window = Some(EscapeWindow {
                    matched: 1,
                    char_offset: start,
                    token_offset: position as u64,
                });
            }
            _ => {}
        }
        position += 1;
        Ok(())
    };

    for &t in &container.tokens {
        match aliases.lookup(t)? {
            Some(expansion) => {
                for &e in expansion {
                    visit(e, &mut result)?;
                }
            }
            None => visit(t, &mut result)?,
        }
    }
    if let Some(w) = window {
        if w.matched == esc.len() {
            result.matches.push(Match {
                token_offset: w.token_offset,
                char_offset: w.char_offset,
                via: MatchVia::Escape,
            });
        }
    }
    if walker.offset() != container.original_len {
        return Err(CodecError::LengthMismatch {
            decoded: walker.offset(),
            expected: container.original_len,
        }
        .into());
    }
    Ok(result)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NaiveResult {
    /// Byte offsets of whole-word occurrences.
    pub matches: Vec<u64>,
    pub char_comparisons: u64,
}

/// Brute-force whole-word scan of raw text. Every byte is compared against
/// the first query byte; candidates are then extended and boundary-checked,
/// each extra byte examined counting as one more comparison.
pub fn naive_scan(text: &[u8], w: &[u8]) -> NaiveResult {
    let mut r = NaiveResult::default();
    let Some(&first) = w.first() else {
        r.char_comparisons = text.len() as u64;
        return r;
    };
    let word_byte = |i: usize| text[i].is_ascii_alphanumeric();
    for i in 0..text.len() {
        r.char_comparisons += 1;
        if text[i] != first {
            continue;
        }
        if i > 0 {
            r.char_comparisons += 1;
            if word_byte(i - 1) {
                continue;
            }
        }
        let mut j = 1;
        while j < w.len() && i + j < text.len() {
            r.char_comparisons += 1;
            if text[i + j] != w[j] {
                break;
            }
            j += 1;
        }
        if j < w.len() {
            continue;
        }
        let end = i + w.len();
        if end < text.len() {
            r.char_comparisons += 1;
            if word_byte(end) {
                continue;
            }
        }
        r.matches.push(i as u64);
    }
    r
}
