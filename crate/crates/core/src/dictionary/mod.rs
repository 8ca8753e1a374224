//! The shared reference model: common words, the main word list, composites
//! and contractions, with every lookup the codec and the searcher need.
//!
//! Token assignment is positional. `common[i]` is token `i`, `words[i]` is
//! `3000 + i`, `composites[i]` is `52000 + i`, contraction lists fill their
//! blocks in order, and the 52 single letters are implicitly `2600..=2651`.

mod build;
mod manifest;

use std::collections::HashMap;

pub use build::{build_from_corpus, BuildOptions};
pub use manifest::{manifest_hash, ContractionKind, DictionaryManifest};

use crate::error::DictionaryError;
use crate::index_space::{BlockClass, TokenIndex};

const COMMON_BASE: u16 = 0;
const WORDS_BASE: u16 = 3000;
const COMPOSITE_BASE: u16 = 52000;
const SINGLE_LETTER_BASE: u16 = 2600;
const CONTRACTION_BASES: [u16; 4] = [353, 394, 409, 412];

pub const COMMON_CAPACITY: usize = 256;
pub const WORDS_CAPACITY: usize = 49000;
pub const COMPOSITE_CAPACITY: usize = 1000;

/// A whole-word occurrence inside a multi-word or apostrophe entry.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Component {
    pub token: TokenIndex,
    /// Byte offset of the word inside the entry's surface.
    pub offset: u32,
}

#[derive(Clone, Debug)]
pub struct Dictionary {
    manifest: DictionaryManifest,
    hash: u64,
    by_surface: HashMap<Box<[u8]>, TokenIndex>,
    /// Dense token -> surface table; empty for unassigned tokens.
    surfaces: Vec<Box<[u8]>>,
    composites: HashMap<Box<[TokenIndex]>, TokenIndex>,
    composite_words: Vec<Box<[TokenIndex]>>,
    max_composite_len: usize,
    components: HashMap<Box<[u8]>, Vec<Component>>,
}

impl Dictionary {
    /// Parses manifest bytes and binds the result to their FNV-1a hash.
    pub fn load_manifest(bytes: &[u8]) -> Result<Self, DictionaryError> {
        let manifest = DictionaryManifest::parse(bytes)?;
        Self::with_hash(manifest, manifest_hash(bytes))
    }

    /// Builds from an in-memory manifest, hashing its canonical text.
    pub fn from_manifest(manifest: DictionaryManifest) -> Result<Self, DictionaryError> {
        let hash = manifest_hash(manifest.to_text().as_bytes());
        Self::with_hash(manifest, hash)
    }

    fn with_hash(manifest: DictionaryManifest, hash: u64) -> Result<Self, DictionaryError> {
        check_capacity("common", manifest.common.len(), COMMON_CAPACITY)?;
        check_capacity("words", manifest.words.len(), WORDS_CAPACITY)?;
        check_capacity("composites", manifest.composites.len(), COMPOSITE_CAPACITY)?;
        for kind in ContractionKind::ALL {
            check_capacity(
                kind.section(),
                manifest.contractions[kind.index()].len(),
                kind.capacity(),
            )?;
        }

        let mut dict = Dictionary {
            hash,
            by_surface: HashMap::new(),
            surfaces: vec![Box::default(); 1 << 16],
            composites: HashMap::new(),
            composite_words: Vec::new(),
            max_composite_len: 0,
            components: HashMap::new(),
            manifest: DictionaryManifest::default(),
        };

        for (i, b) in (b'a'..=b'z').chain(b'A'..=b'Z').enumerate() {
            dict.assign(&[b], TokenIndex(SINGLE_LETTER_BASE + i as u16))?;
        }
        for (i, w) in manifest.common.iter().enumerate() {
            dict.assign(w.as_bytes(), TokenIndex(COMMON_BASE + i as u16))?;
        }
        for (i, w) in manifest.words.iter().enumerate() {
            dict.assign(w.as_bytes(), TokenIndex(WORDS_BASE + i as u16))?;
        }
        for kind in ContractionKind::ALL {
            let base = CONTRACTION_BASES[kind.index()];
            for (i, w) in manifest.contractions[kind.index()].iter().enumerate() {
                let token = TokenIndex(base + i as u16);
                dict.assign(w.as_bytes(), token)?;
                dict.index_components(w.as_bytes(), token);
            }
        }
        for (i, parts) in manifest.composites.iter().enumerate() {
            let token = TokenIndex(COMPOSITE_BASE + i as u16);
            let joined = parts.join(" ");
            let seq = parts
                .iter()
                .map(|p| {
                    dict.lookup_word(p.as_bytes()).ok_or_else(|| {
                        DictionaryError::UnknownCompositeWord {
                            composite: joined.clone(),
                            word: p.clone(),
                        }
                    })
                })
                .collect::<Result<Box<[TokenIndex]>, _>>()?;
            if dict.composites.insert(seq.clone(), token).is_some() {
                return Err(DictionaryError::Duplicate(joined));
            }
            dict.max_composite_len = dict.max_composite_len.max(seq.len());
            dict.composite_words.push(seq);
            dict.surfaces[token.0 as usize] = joined.as_bytes().into();
            dict.index_components(joined.as_bytes(), token);
        }
        dict.manifest = manifest;
        Ok(dict)
    }

    fn assign(&mut self, surface: &[u8], token: TokenIndex) -> Result<(), DictionaryError> {
        if self.by_surface.insert(surface.into(), token).is_some() {
            return Err(DictionaryError::Duplicate(
                String::from_utf8_lossy(surface).into_owned(),
            ));
        }
        self.surfaces[token.0 as usize] = surface.into();
        Ok(())
    }

    /// Records every maximal alphanumeric run of `surface` as a component.
    fn index_components(&mut self, surface: &[u8], token: TokenIndex) {
        let mut i = 0;
        while i < surface.len() {
            if !surface[i].is_ascii_alphanumeric() {
                i += 1;
                continue;
            }
            let start = i;
            while i < surface.len() && surface[i].is_ascii_alphanumeric() {
                i += 1;
            }
            self.components
                .entry(surface[start..i].into())
                .or_default()
                .push(Component {
                    token,
                    offset: start as u32,
                });
        }
    }

    pub fn hash(&self) -> u64 {
        self.hash
    }

    pub fn manifest(&self) -> &DictionaryManifest {
        &self.manifest
    }

    /// Exact, case-sensitive lookup over common words, single letters, the
    /// word list and contractions.
    #[inline]
    pub fn lookup_word(&self, w: &[u8]) -> Option<TokenIndex> {
        self.by_surface.get(w).copied()
    }

    #[inline]
    pub fn is_contraction(&self, w: &[u8]) -> bool {
        self.lookup_word(w).is_some_and(|t| {
            matches!(
                t.class(),
                BlockClass::ContractionNt
                    | BlockClass::ContractionS
                    | BlockClass::ContractionM
                    | BlockClass::ContractionLl
            )
        })
    }

    /// Surface text of a single-token word or composite, `None` when the
    /// slot is unassigned.
    #[inline]
    pub fn surface(&self, t: TokenIndex) -> Option<&[u8]> {
        let s = &self.surfaces[t.0 as usize];
        (!s.is_empty()).then_some(&s[..])
    }

    /// Word tokens of composite `t`.
    pub fn composite_parts(&self, t: TokenIndex) -> Option<&[TokenIndex]> {
        let i = t.0.checked_sub(COMPOSITE_BASE)? as usize;
        (t.class() == BlockClass::Composite)
            .then(|| self.composite_words.get(i).map(|s| &s[..]))
            .flatten()
    }

    /// All composite tokens whose word sequence contains `w`, ascending.
    pub fn composites_containing(&self, w: &[u8]) -> Vec<TokenIndex> {
        let Some(word) = self.lookup_word(w) else {
            return Vec::new();
        };
        self.composite_words
            .iter()
            .enumerate()
            .filter(|(_, parts)| parts.contains(&word))
            .map(|(i, _)| TokenIndex(COMPOSITE_BASE + i as u16))
            .collect()
    }

    /// Every occurrence of `w` as a whole word inside a composite or a
    /// contraction, in token order.
    pub fn components_of(&self, w: &[u8]) -> &[Component] {
        self.components.get(w).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Longest composite whose word tokens match `tokens[pos..]`.
    pub fn match_composite(
        &self,
        tokens: &[TokenIndex],
        pos: usize,
    ) -> Option<(TokenIndex, usize)> {
        let rest = tokens.get(pos..)?;
        let longest = self.max_composite_len.min(rest.len());
        (2..=longest)
            .rev()
            .find_map(|n| self.composites.get(&rest[..n]).map(|&t| (t, n)))
    }

    pub fn composite_count(&self) -> usize {
        self.composite_words.len()
    }
}

fn check_capacity(
    section: &'static str,
    count: usize,
    capacity: usize,
) -> Result<(), DictionaryError> {
    if count > capacity {
        return Err(DictionaryError::CapacityExceeded {
            section,
            count,
            capacity,
        });
    }
    Ok(())
}
