//! Plain-text dictionary manifest: `[section]` headers, one entry per line.

use std::fmt::Write as _;

use crate::error::DictionaryError;

/// Which of the four contraction blocks an entry belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ContractionKind {
    Nt,
    S,
    M,
    Ll,
}

impl ContractionKind {
    pub const ALL: [ContractionKind; 4] = [
        ContractionKind::Nt,
        ContractionKind::S,
        ContractionKind::M,
        ContractionKind::Ll,
    ];

    pub fn section(self) -> &'static str {
        match self {
            ContractionKind::Nt => "contractions_nt",
            ContractionKind::S => "contractions_s",
            ContractionKind::M => "contractions_m",
            ContractionKind::Ll => "contractions_ll",
        }
    }

    pub(crate) fn suffix(self) -> &'static [u8] {
        match self {
            ContractionKind::Nt => b"n't",
            ContractionKind::S => b"'s",
            ContractionKind::M => b"'m",
            ContractionKind::Ll => b"'ll",
        }
    }

    /// Classifies `X'Y` surface forms by suffix (ASCII case-insensitive).
    pub fn of(form: &[u8]) -> Option<ContractionKind> {
        if !is_contraction_form(form) {
            return None;
        }
        let lower = form.to_ascii_lowercase();
        ContractionKind::ALL
            .into_iter()
            .find(|k| lower.ends_with(k.suffix()))
    }

    pub fn capacity(self) -> usize {
        match self {
            ContractionKind::Nt => 41,
            ContractionKind::S => 15,
            ContractionKind::M => 3,
            ContractionKind::Ll => 15,
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

/// Sectioned contents of a dictionary, in manifest order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DictionaryManifest {
    pub common: Vec<String>,
    pub words: Vec<String>,
    pub composites: Vec<Vec<String>>,
    /// Indexed by [`ContractionKind`] order: n't, 's, 'm, 'll.
    pub contractions: [Vec<String>; 4],
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Section {
    Common,
    Words,
    Composites,
    Contraction(ContractionKind),
}

impl Section {
    fn parse(name: &str) -> Option<Section> {
        Some(match name {
            "common" => Section::Common,
            "words" => Section::Words,
            "composites" => Section::Composites,
            "contractions_nt" => Section::Contraction(ContractionKind::Nt),
            "contractions_s" => Section::Contraction(ContractionKind::S),
            "contractions_m" => Section::Contraction(ContractionKind::M),
            "contractions_ll" => Section::Contraction(ContractionKind::Ll),
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Section::Common => "common",
            Section::Words => "words",
            Section::Composites => "composites",
            Section::Contraction(k) => k.section(),
        }
    }
}

/// `[A-Za-z0-9]+`
pub(crate) fn is_plain_word(w: &[u8]) -> bool {
    !w.is_empty() && w.iter().all(u8::is_ascii_alphanumeric)
}

/// `[A-Za-z0-9]+'[A-Za-z0-9]+`
pub(crate) fn is_contraction_form(w: &[u8]) -> bool {
    let mut parts = w.split(|&b| b == b'\'');
    matches!(
        (parts.next(), parts.next(), parts.next()),
        (Some(a), Some(b), None) if is_plain_word(a) && is_plain_word(b)
    )
}

impl DictionaryManifest {
    /// Parses manifest bytes. Blank lines are skipped; capacities and
    /// cross-references are checked when the manifest becomes a
    /// [`crate::Dictionary`].
    pub fn parse(bytes: &[u8]) -> Result<Self, DictionaryError> {
        let mut m = DictionaryManifest::default();
        let mut section = None;
        for (i, raw) in bytes.split(|&b| b == b'\n').enumerate() {
            let line = i + 1;
            if raw.is_empty() {
                continue;
            }
            if raw[0] == b'[' {
                let header = String::from_utf8_lossy(raw).into_owned();
                let name = header
                    .strip_prefix('[')
                    .and_then(|h| h.strip_suffix(']'))
                    .and_then(Section::parse)
                    .ok_or(DictionaryError::MalformedHeader {
                        line,
                        header: header.clone(),
                    })?;
                section = Some(name);
                continue;
            }
            let sec = section.ok_or(DictionaryError::EntryOutsideSection { line })?;
            let invalid = || DictionaryError::InvalidEntry {
                line,
                section: sec.name(),
                entry: String::from_utf8_lossy(raw).into_owned(),
            };
            // validated entries are pure ASCII
            let text = || String::from_utf8(raw.to_vec()).expect("ascii entry");
            match sec {
                Section::Common | Section::Words => {
                    if !is_plain_word(raw) {
                        return Err(invalid());
                    }
                    let list = if sec == Section::Common {
                        &mut m.common
                    } else {
                        &mut m.words
                    };
                    list.push(text());
                }
                Section::Composites => {
                    let parts: Vec<&[u8]> = raw.split(|&b| b == b' ').collect();
                    let ok = parts.len() >= 2
                        && parts
                            .iter()
                            .all(|p| is_plain_word(p) || is_contraction_form(p));
                    if !ok {
                        return Err(invalid());
                    }
                    m.composites
                        .push(text().split(' ').map(str::to_owned).collect());
                }
                Section::Contraction(kind) => {
                    if ContractionKind::of(raw) != Some(kind) {
                        return Err(invalid());
                    }
                    m.contractions[kind.index()].push(text());
                }
            }
        }
        Ok(m)
    }

    /// Serializes all seven sections in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut section = |name: &str, entries: &mut dyn Iterator<Item = String>| {
            let _ = writeln!(out, "[{name}]");
            for e in entries {
                out.push_str(&e);
                out.push('\n');
            }
        };
        section("common", &mut self.common.iter().cloned());
        section("words", &mut self.words.iter().cloned());
        section(
            "composites",
            &mut self.composites.iter().map(|c| c.join(" ")),
        );
        for kind in ContractionKind::ALL {
            section(
                kind.section(),
                &mut self.contractions[kind.index()].iter().cloned(),
            );
        }
        out
    }
}

/// FNV-1a, 64-bit, over the exact manifest bytes.
pub fn manifest_hash(bytes: &[u8]) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    bytes
        .iter()
        .fold(OFFSET, |h, &b| (h ^ b as u64).wrapping_mul(PRIME))
}
