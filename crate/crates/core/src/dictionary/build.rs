//! Frequency-ranked dictionary construction from a training corpus.

use std::collections::HashMap;

use super::manifest::{is_contraction_form, ContractionKind, DictionaryManifest};
use super::{Dictionary, COMMON_CAPACITY, COMPOSITE_CAPACITY, WORDS_CAPACITY};
use crate::error::DictionaryError;
use crate::tokenizer::{Lexeme, Lexer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub common_size: usize,
    pub words_size: usize,
    pub composite_size: usize,
    /// Minimum occurrences for a 2- or 3-word sequence to become a composite.
    pub composite_min_count: usize,
    pub word_min_count: usize,
    pub contraction_min_count: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            common_size: COMMON_CAPACITY,
            words_size: 40_000,
            composite_size: COMPOSITE_CAPACITY,
            composite_min_count: 3,
            word_min_count: 1,
            contraction_min_count: 2,
        }
    }
}

/// Interns word surfaces to dense ids.
#[derive(Default)]
struct Interner<'a> {
    ids: HashMap<&'a [u8], u32>,
    words: Vec<&'a [u8]>,
    counts: Vec<u64>,
}

impl<'a> Interner<'a> {
    fn add(&mut self, w: &'a [u8]) -> u32 {
        let next = self.words.len() as u32;
        let id = *self.ids.entry(w).or_insert(next);
        if id == next {
            self.words.push(w);
            self.counts.push(0);
        }
        self.counts[id as usize] += 1;
        id
    }
}

fn ranked<K: Ord>(mut entries: Vec<(K, u64)>) -> Vec<K> {
    entries.sort_unstable_by(|(ka, ca), (kb, cb)| cb.cmp(ca).then_with(|| ka.cmp(kb)));
    entries.into_iter().map(|(k, _)| k).collect()
}

fn count_contractions<D: AsRef<[u8]>>(corpus: &[D]) -> HashMap<&[u8], u64> {
    let mut counts = HashMap::new();
    for doc in corpus {
        let text = doc.as_ref();
        let mut i = 0;
        while i < text.len() {
            if !text[i].is_ascii_alphanumeric() {
                i += 1;
                continue;
            }
            let start = i;
            while i < text.len() && text[i].is_ascii_alphanumeric() {
                i += 1;
            }
            if text.get(i) == Some(&b'\'') {
                let mut j = i + 1;
                while j < text.len() && text[j].is_ascii_alphanumeric() {
                    j += 1;
                }
                let form = &text[start..j];
                if is_contraction_form(form) && ContractionKind::of(form).is_some() {
                    *counts.entry(form).or_insert(0) += 1;
                }
            }
        }
    }
    counts
}

/// Ranks words by descending frequency (ties lexicographic) into `[common]`
/// and `[words]`, and frequent 2- and 3-word sequences into `[composites]`.
///
/// Single letters are never emitted since they own a fixed block.
pub fn build_from_corpus<D: AsRef<[u8]>>(
    corpus: &[D],
    opts: &BuildOptions,
) -> Result<DictionaryManifest, DictionaryError> {
    if corpus.iter().all(|d| d.as_ref().is_empty()) {
        return Err(DictionaryError::EmptyCorpus);
    }
    let mut manifest = DictionaryManifest::default();

    let mut by_kind: [Vec<(&[u8], u64)>; 4] = Default::default();
    for (form, n) in count_contractions(corpus) {
        if n as usize >= opts.contraction_min_count {
            let kind = ContractionKind::of(form).expect("classified during counting");
            by_kind[kind.index()].push((form, n));
        }
    }
    for kind in ContractionKind::ALL {
        let list = std::mem::take(&mut by_kind[kind.index()]);
        manifest.contractions[kind.index()] = ranked(list)
            .into_iter()
            .take(kind.capacity())
            .map(|f| String::from_utf8(f.to_vec()).expect("ascii"))
            .collect();
    }
    let lexer_dict = Dictionary::from_manifest(manifest.clone())?;

    // Word stream per document; None marks anything but a single space.
    let mut interner = Interner::default();
    let mut bigrams: HashMap<[u32; 2], u64> = HashMap::new();
    let mut trigrams: HashMap<[u32; 3], u64> = HashMap::new();
    for doc in corpus {
        let mut window: [Option<u32>; 3] = [None; 3];
        let mut pending_space = false;
        for lexeme in Lexer::new(doc.as_ref(), &lexer_dict) {
            match lexeme {
                Lexeme::Word(w) => {
                    let id = interner.add(w);
                    if !pending_space {
                        window = [None; 3];
                    }
                    window = [window[1], window[2], Some(id)];
                    if let [_, Some(a), Some(b)] = window {
                        *bigrams.entry([a, b]).or_insert(0) += 1;
                    }
                    if let [Some(a), Some(b), Some(c)] = window {
                        *trigrams.entry([a, b, c]).or_insert(0) += 1;
                    }
                    pending_space = false;
                }
                Lexeme::Spaces(1) if !pending_space && window[2].is_some() => pending_space = true,
                _ => {
                    window = [None; 3];
                    pending_space = false;
                }
            }
        }
    }

    let eligible =
        |w: &[u8]| !(w.len() == 1 && w[0].is_ascii_alphabetic()) && !lexer_dict.is_contraction(w);
    let words: Vec<(&[u8], u64)> = interner
        .words
        .iter()
        .zip(&interner.counts)
        .filter(|(w, &n)| eligible(w) && n as usize >= opts.word_min_count)
        .map(|(&w, &n)| (w, n))
        .collect();
    let mut ranked_words = ranked(words).into_iter();
    let to_string = |w: &[u8]| String::from_utf8(w.to_vec()).expect("ascii");
    manifest.common = ranked_words
        .by_ref()
        .take(opts.common_size.min(COMMON_CAPACITY))
        .map(to_string)
        .collect();
    manifest.words = ranked_words
        .take(opts.words_size.min(WORDS_CAPACITY))
        .map(to_string)
        .collect();

    let selected: std::collections::HashSet<&[u8]> = manifest
        .common
        .iter()
        .chain(&manifest.words)
        .map(|w| w.as_bytes())
        .collect();
    let resolvable = |ids: &[u32]| {
        ids.iter()
            .all(|&i| selected.contains(interner.words[i as usize]))
            && ids.windows(2).any(|p| p[0] != p[1])
    };
    let min = opts.composite_min_count.max(1) as u64;
    let mut grams: Vec<(Vec<&[u8]>, u64)> = Vec::new();
    let surfaces = |ids: &[u32]| ids.iter().map(|&i| interner.words[i as usize]).collect();
    grams.extend(
        bigrams
            .iter()
            .filter(|(g, &n)| n >= min && resolvable(&g[..]))
            .map(|(g, &n)| (surfaces(&g[..]), n)),
    );
    grams.extend(
        trigrams
            .iter()
            .filter(|(g, &n)| n >= min && resolvable(&g[..]))
            .map(|(g, &n)| (surfaces(&g[..]), n)),
    );
    manifest.composites = ranked(grams)
        .into_iter()
        .take(opts.composite_size.min(COMPOSITE_CAPACITY))
        .map(|g| g.into_iter().map(to_string).collect())
        .collect();
    Ok(manifest)
}
