//! Parse I (lexeme indexing) and Parse II (composites and word repeats).

use crate::dictionary::Dictionary;
use crate::index_space::{
    alnum_chain, literal_byte_token, numeric_chain, run_length_token, separator_chain, RunKind,
    TokenIndex, MAX_SPACE_RUN, MAX_WORD_REPEAT,
};
use crate::tokenizer::Lexeme;

/// A lone space outside a word gap: separator pair (space, pad).
pub const SINGLE_SPACE: TokenIndex = TokenIndex(532);

/// Escape chain for a word missing from the dictionary.
pub fn escape_word(word: &[u8], out: &mut Vec<TokenIndex>) {
    let result = if word.iter().all(u8::is_ascii_digit) {
        numeric_chain(word, out)
    } else {
        alnum_chain(word, out)
    };
    result.expect("tokenizer words are alphanumeric");
}

fn space_run(mut n: usize, out: &mut Vec<TokenIndex>) {
    while n > MAX_SPACE_RUN {
        // never leave a single trailing space, which has no run token
        let take = if n - MAX_SPACE_RUN == 1 {
            MAX_SPACE_RUN - 1
        } else {
            MAX_SPACE_RUN
        };
        out.push(run_length_token(RunKind::SpaceRun, take).expect("in range"));
        n -= take;
    }
    out.push(run_length_token(RunKind::SpaceRun, n).expect("in range"));
}

pub fn compress_parse1(lexemes: &[Lexeme<'_>], dict: &Dictionary) -> Vec<TokenIndex> {
    let mut out = Vec::with_capacity(lexemes.len());
    for (i, lexeme) in lexemes.iter().enumerate() {
        match *lexeme {
            Lexeme::Word(w) => match dict.lookup_word(w) {
                Some(t) => out.push(t),
                None => escape_word(w, &mut out),
            },
            Lexeme::Spaces(1) => {
                let between_words = i > 0
                    && matches!(lexemes[i - 1], Lexeme::Word(_))
                    && matches!(lexemes.get(i + 1), Some(Lexeme::Word(_)));
                if !between_words {
                    out.push(SINGLE_SPACE);
                }
            }
            Lexeme::Spaces(n) => space_run(n, &mut out),
            Lexeme::Newline => out.push(TokenIndex::NEWLINE),
            Lexeme::Tab => out.push(TokenIndex::TAB),
            Lexeme::Symbols(s) => separator_chain(s, &mut out).expect("separator bytes"),
            Lexeme::Raw(b) => out.push(literal_byte_token(b)),
        }
    }
    out
}

fn is_word_token(t: TokenIndex) -> bool {
    t.class().is_single_word()
}

/// Greedy longest-match composite replacement, then collapse of runs of an
/// identical single-token word into the word plus word-repeat tokens.
pub fn compress_parse2(tokens: &[TokenIndex], dict: &Dictionary) -> Vec<TokenIndex> {
    let mut merged = Vec::with_capacity(tokens.len());
    let mut i = 0;
    while i < tokens.len() {
        if is_word_token(tokens[i]) {
            if let Some((c, n)) = dict.match_composite(tokens, i) {
                merged.push(c);
                i += n;
                continue;
            }
        }
        merged.push(tokens[i]);
        i += 1;
    }

    let mut out = Vec::with_capacity(merged.len());
    let mut i = 0;
    while i < merged.len() {
        let t = merged[i];
        let mut run = 1;
        if is_word_token(t) {
            while merged.get(i + run) == Some(&t) {
                run += 1;
            }
        }
        out.push(t);
        let mut extra = run - 1;
        while extra > 0 {
            let k = extra.min(MAX_WORD_REPEAT);
            out.push(run_length_token(RunKind::WordRepeat, k).expect("in range"));
            extra -= k;
        }
        i += run;
    }
    out
}
