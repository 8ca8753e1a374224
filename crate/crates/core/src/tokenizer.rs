//! Lossless split of 8-bit text into words, whitespace and separator runs.

use crate::dictionary::Dictionary;
use crate::index_space::is_separator_byte;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Lexeme<'a> {
    /// `[A-Za-z0-9]+`, or a dictionary contraction such as `isn't`.
    Word(&'a [u8]),
    /// A run of `0x20` only.
    Spaces(usize),
    Newline,
    Tab,
    /// Separator-table characters, possibly including spaces, never only spaces.
    Symbols(&'a [u8]),
    /// Any byte outside the word and separator alphabets.
    Raw(u8),
}

impl Lexeme<'_> {
    pub fn len(&self) -> usize {
        match self {
            Lexeme::Word(w) | Lexeme::Symbols(w) => w.len(),
            Lexeme::Spaces(n) => *n,
            Lexeme::Newline | Lexeme::Tab | Lexeme::Raw(_) => 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn write_to(&self, out: &mut Vec<u8>) {
        match *self {
            Lexeme::Word(w) | Lexeme::Symbols(w) => out.extend_from_slice(w),
            Lexeme::Spaces(n) => out.resize(out.len() + n, b' '),
            Lexeme::Newline => out.push(b'\n'),
            Lexeme::Tab => out.push(b'\t'),
            Lexeme::Raw(b) => out.push(b),
        }
    }
}

/// Streaming lexer over a byte slice.
pub struct Lexer<'a, 'd> {
    text: &'a [u8],
    pos: usize,
    dict: &'d Dictionary,
}

impl<'a, 'd> Lexer<'a, 'd> {
    pub fn new(text: &'a [u8], dict: &'d Dictionary) -> Self {
        Lexer { text, pos: 0, dict }
    }

    fn alnum_end(&self, from: usize) -> usize {
        let mut i = from;
        while i < self.text.len() && self.text[i].is_ascii_alphanumeric() {
            i += 1;
        }
        i
    }
}

impl<'a> Iterator for Lexer<'a, '_> {
    type Item = Lexeme<'a>;

    fn next(&mut self) -> Option<Lexeme<'a>> {
        let text = self.text;
        let start = self.pos;
        let &b = text.get(start)?;
        let (lexeme, end) = if b.is_ascii_alphanumeric() {
            let mut end = self.alnum_end(start);
            // one apostrophe may join a dictionary contraction
            if text.get(end) == Some(&b'\'')
                && text.get(end + 1).is_some_and(u8::is_ascii_alphanumeric)
            {
                let ext = self.alnum_end(end + 1);
                if self.dict.is_contraction(&text[start..ext]) {
                    end = ext;
                }
            }
            (Lexeme::Word(&text[start..end]), end)
        } else if b == b'\n' {
            (Lexeme::Newline, start + 1)
        } else if b == b'\t' {
            (Lexeme::Tab, start + 1)
        } else if is_separator_byte(b) {
            let mut end = start;
            let mut only_spaces = true;
            while end < text.len() && is_separator_byte(text[end]) {
                only_spaces &= text[end] == b' ';
                end += 1;
            }
            let lexeme = if only_spaces {
                Lexeme::Spaces(end - start)
            } else {
                Lexeme::Symbols(&text[start..end])
            };
            (lexeme, end)
        } else {
            (Lexeme::Raw(b), start + 1)
        };
        self.pos = end;
        Some(lexeme)
    }
}

pub fn lex<'a>(text: &'a [u8], dict: &Dictionary) -> Vec<Lexeme<'a>> {
    Lexer::new(text, dict).collect()
}

pub fn render(lexemes: &[Lexeme<'_>]) -> Vec<u8> {
    let mut out = Vec::with_capacity(lexemes.iter().map(Lexeme::len).sum());
    for l in lexemes {
        l.write_to(&mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dict() -> Dictionary {
        Dictionary::load_manifest(b"[common]\nthe\n[contractions_nt]\nisn't\n").unwrap()
    }

    #[test]
    fn examples() {
        let d = dict();
        use Lexeme::*;
        assert_eq!(lex(b"in the", &d), [Word(b"in"), Spaces(1), Word(b"the")]);
        assert_eq!(
            lex(b"end.\nNew", &d),
            [Word(b"end"), Symbols(b"."), Newline, Word(b"New")]
        );
        assert_eq!(lex(b"isn't", &d), [Word(b"isn't")]);
        assert_eq!(lex(b"don't", &d), [Word(b"don"), Symbols(b"'"), Word(b"t")]);
        assert_eq!(
            lex(b"Xisn't", &d),
            [Word(b"Xisn"), Symbols(b"'"), Word(b"t")]
        );
        assert_eq!(lex(b"co-op", &d), [Word(b"co"), Symbols(b"-"), Word(b"op")]);
        assert_eq!(
            lex(b"a, \t\r\n  b", &d),
            [
                Word(b"a"),
                Symbols(b", "),
                Tab,
                Raw(b'\r'),
                Newline,
                Spaces(2),
                Word(b"b")
            ]
        );
        assert_eq!(lex(b"isn'", &d), [Word(b"isn"), Symbols(b"'")]);
        assert!(lex(b"", &d).is_empty());
    }

    #[test]
    fn render_examples() {
        assert_eq!(render(&[Lexeme::Word(b"a")]), b"a");
        assert_eq!(render(&[Lexeme::Spaces(3)]), b"   ");
    }

    proptest! {
        #[test]
        fn render_inverts_lex(text in proptest::collection::vec(any::<u8>(), 0..200)) {
            let d = dict();
            prop_assert_eq!(render(&lex(&text, &d)), text);
        }

        #[test]
        fn lexemes_are_maximal(text in "[a-z' .,\n\t]{0,60}") {
            let d = dict();
            let lx = lex(text.as_bytes(), &d);
            for w in lx.windows(2) {
                let mergeable = matches!(
                    (w[0], w[1]),
                    (Lexeme::Word(_), Lexeme::Word(_))
                        | (Lexeme::Spaces(_), Lexeme::Spaces(_))
                        | (Lexeme::Symbols(_), Lexeme::Symbols(_))
                        | (Lexeme::Spaces(_), Lexeme::Symbols(_))
                        | (Lexeme::Symbols(_), Lexeme::Spaces(_))
                );
                prop_assert!(!mergeable, "{:?}", w);
            }
        }
    }
}
