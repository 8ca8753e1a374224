//! The 16-bit reference space and its stateless escape codecs.
//!
//! Every value `0..=65535` belongs to exactly one [`BlockClass`]. Words from
//! the dictionary, composites and contractions get fixed slots; words that
//! are not in the dictionary are spelled out two characters (or three digits)
//! per token; separator runs are spelled out two characters per token.
//!
//! | block            | range          |
//! |------------------|----------------|
//! | common words     | 0–255          |
//! | word repeat      | 256–300        |
//! | space run        | 301–350        |
//! | newline / tab    | 351 / 352      |
//! | contractions     | 353–426        |
//! | separator pairs  | 500–2599       |
//! | single letters   | 2600–2659      |
//! | literal bytes    | 2660–2915      |
//! | dictionary words | 3000–51999     |
//! | composites       | 52000–52999    |
//! | numeric triplets | 53500–55919    |
//! | alnum pairs      | 56500–64968    |
//! | aliases          | 64969–65535    |

use std::fmt;

use crate::error::IndexError;

/// One entry of the reference space. Always serialized as two big-endian bytes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TokenIndex(pub u16);

impl TokenIndex {
    pub const NEWLINE: TokenIndex = TokenIndex(351);
    pub const TAB: TokenIndex = TokenIndex(352);

    #[inline]
    pub const fn value(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn class(self) -> BlockClass {
        classify(self)
    }

    #[inline]
    pub const fn to_be_bytes(self) -> [u8; 2] {
        self.0.to_be_bytes()
    }

    #[inline]
    pub const fn from_be_bytes(b: [u8; 2]) -> Self {
        TokenIndex(u16::from_be_bytes(b))
    }
}

impl fmt::Debug for TokenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for TokenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u16> for TokenIndex {
    fn from(v: u16) -> Self {
        TokenIndex(v)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BlockClass {
    CommonWord,
    WordRepeat,
    SpaceRun,
    Newline,
    Tab,
    ContractionNt,
    ContractionS,
    ContractionM,
    ContractionLl,
    SeparatorStart,
    SeparatorRepeat,
    SingleLetter,
    LiteralByte,
    ControlByte,
    DictionaryWord,
    Composite,
    NumericStart,
    NumericRepeat,
    AlnumStart,
    AlnumRepeat,
    Alias,
    Reserved,
}

/// An inclusive range of the reference space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Block {
    pub class: BlockClass,
    pub low: u16,
    pub high: u16,
}

impl Block {
    const fn new(class: BlockClass, low: u16, high: u16) -> Self {
        Block { class, low, high }
    }

    #[inline]
    pub fn contains(&self, t: TokenIndex) -> bool {
        (self.low..=self.high).contains(&t.0)
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        (self.high - self.low) as usize + 1
    }
}

/// The full partition of `0..=65535`, sorted by `low`, gaps included as `Reserved`.
pub const BLOCKS: [Block; 26] = {
    use BlockClass::*;
    [
        Block::new(CommonWord, 0, 255),
        Block::new(WordRepeat, 256, 300),
        Block::new(SpaceRun, 301, 350),
        Block::new(Newline, 351, 351),
        Block::new(Tab, 352, 352),
        Block::new(ContractionNt, 353, 393),
        Block::new(ContractionS, 394, 408),
        Block::new(ContractionM, 409, 411),
        Block::new(ContractionLl, 412, 426),
        Block::new(Reserved, 427, 499),
        Block::new(SeparatorStart, 500, 1549),
        Block::new(SeparatorRepeat, 1550, 2599),
        Block::new(SingleLetter, 2600, 2659),
        Block::new(LiteralByte, 2660, 2899),
        Block::new(ControlByte, 2900, 2915),
        Block::new(Reserved, 2916, 2999),
        Block::new(DictionaryWord, 3000, 51999),
        Block::new(Composite, 52000, 52999),
        Block::new(Reserved, 53000, 53499),
        Block::new(NumericStart, 53500, 54709),
        Block::new(NumericRepeat, 54710, 55919),
        Block::new(Reserved, 55920, 56499),
        Block::new(AlnumStart, 56500, 60468),
        Block::new(Reserved, 60469, 60999),
        Block::new(AlnumRepeat, 61000, 64968),
        Block::new(Alias, 64969, 65535),
    ]
};

impl BlockClass {
    /// The canonical range of a non-reserved class.
    pub fn block(self) -> Option<Block> {
        if self == BlockClass::Reserved {
            return None;
        }
        BLOCKS.iter().copied().find(|b| b.class == self)
    }

    pub fn name(self) -> &'static str {
        use BlockClass::*;
        match self {
            CommonWord => "common word",
            WordRepeat => "word repeat",
            SpaceRun => "space run",
            Newline => "newline",
            Tab => "tab",
            ContractionNt => "n't contraction",
            ContractionS => "'s contraction",
            ContractionM => "'m contraction",
            ContractionLl => "'ll contraction",
            SeparatorStart => "separator start",
            SeparatorRepeat => "separator repeat",
            SingleLetter => "single letter",
            LiteralByte => "literal byte",
            ControlByte => "control byte",
            DictionaryWord => "dictionary word",
            Composite => "composite",
            NumericStart => "numeric start",
            NumericRepeat => "numeric repeat",
            AlnumStart => "alnum start",
            AlnumRepeat => "alnum repeat",
            Alias => "alias",
            Reserved => "reserved",
        }
    }

    /// Classes whose single token stands for one or more whole words.
    pub fn is_single_word(self) -> bool {
        use BlockClass::*;
        matches!(
            self,
            CommonWord
                | DictionaryWord
                | SingleLetter
                | Composite
                | ContractionNt
                | ContractionS
                | ContractionM
                | ContractionLl
        )
    }
}

static CLASS_TABLE: [BlockClass; 65536] = {
    let mut table = [BlockClass::Reserved; 65536];
    let mut b = 0;
    while b < BLOCKS.len() {
        let mut t = BLOCKS[b].low as usize;
        while t <= BLOCKS[b].high as usize {
            table[t] = BLOCKS[b].class;
            t += 1;
        }
        b += 1;
    }
    table
};

/// Returns the unique block containing `t`.
#[inline]
pub fn classify(t: TokenIndex) -> BlockClass {
    CLASS_TABLE[t.0 as usize]
}

// ---------------------------------------------------------------------------
// alphanumeric pairs

pub const ALNUM_START_BASE: u16 = 56500;
pub const ALNUM_REPEAT_BASE: u16 = 61000;
const ALNUM_RADIX: u16 = 63;

/// A character of the 63-symbol new-word alphabet: pad, `a-z`, `A-Z`, `0-9`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AlnumChar(u8);

impl AlnumChar {
    pub const PAD: AlnumChar = AlnumChar(0);

    pub fn from_byte(b: u8) -> Option<Self> {
        match b {
            b'a'..=b'z' => Some(AlnumChar(b - b'a' + 1)),
            b'A'..=b'Z' => Some(AlnumChar(b - b'A' + 27)),
            b'0'..=b'9' => Some(AlnumChar(b - b'0' + 53)),
            _ => None,
        }
    }

    pub fn from_code(code: u8) -> Option<Self> {
        (code < 63).then_some(AlnumChar(code))
    }

    #[inline]
    pub fn code(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_pad(self) -> bool {
        self.0 == 0
    }

    /// The source byte, `None` for the pad.
    pub fn to_byte(self) -> Option<u8> {
        match self.0 {
            0 => None,
            1..=26 => Some(b'a' + self.0 - 1),
            27..=52 => Some(b'A' + self.0 - 27),
            _ => Some(b'0' + self.0 - 53),
        }
    }
}

pub fn encode_alnum_pair(
    c1: AlnumChar,
    c2: AlnumChar,
    is_start: bool,
) -> Result<TokenIndex, IndexError> {
    if c1.is_pad() {
        return Err(IndexError::LeadingPad);
    }
    let base = if is_start {
        ALNUM_START_BASE
    } else {
        ALNUM_REPEAT_BASE
    };
    Ok(TokenIndex(base + ALNUM_RADIX * c1.0 as u16 + c2.0 as u16))
}

pub fn decode_alnum_pair(t: TokenIndex) -> Result<(AlnumChar, AlnumChar, bool), IndexError> {
    let (base, is_start) = match classify(t) {
        BlockClass::AlnumStart => (ALNUM_START_BASE, true),
        BlockClass::AlnumRepeat => (ALNUM_REPEAT_BASE, false),
        _ => return Err(IndexError::WrongBlock(t.0, "alnum pair")),
    };
    let code = t.0 - base;
    let c1 = AlnumChar((code / ALNUM_RADIX) as u8);
    let c2 = AlnumChar((code % ALNUM_RADIX) as u8);
    if c1.is_pad() {
        return Err(IndexError::LeadingPad);
    }
    Ok((c1, c2, is_start))
}

/// Spells `word` (all bytes in the alnum alphabet) as a start token followed
/// by continuation tokens.
pub fn alnum_chain(word: &[u8], out: &mut Vec<TokenIndex>) -> Result<(), IndexError> {
    for (i, pair) in word.chunks(2).enumerate() {
        let c1 = AlnumChar::from_byte(pair[0]).ok_or(IndexError::NotInAlphabet(pair[0]))?;
        let c2 = match pair.get(1) {
            Some(&b) => AlnumChar::from_byte(b).ok_or(IndexError::NotInAlphabet(b))?,
            None => AlnumChar::PAD,
        };
        out.push(encode_alnum_pair(c1, c2, i == 0)?);
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// numeric triplets

pub const NUMERIC_START_BASE: u16 = 53500;
pub const NUMERIC_REPEAT_BASE: u16 = 54710;
const DIGIT_PAD: u8 = 10;

/// Up to three decimal digits; missing trailing digits are padded.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct NumericTriplet {
    d1: u8,
    p2: u8,
    p3: u8,
}

impl NumericTriplet {
    /// `p2`/`p3` use 10 for pad.
    pub fn new(d1: u8, p2: u8, p3: u8) -> Result<Self, IndexError> {
        if d1 > 9 {
            return Err(IndexError::LeadingPad);
        }
        if p2 > DIGIT_PAD || p3 > DIGIT_PAD {
            return Err(IndexError::NotInAlphabet(p2.max(p3)));
        }
        if p2 == DIGIT_PAD && p3 != DIGIT_PAD {
            return Err(IndexError::PadBeforeDigit);
        }
        Ok(NumericTriplet { d1, p2, p3 })
    }

    /// From 1–3 ASCII digits.
    pub fn from_digits(digits: &[u8]) -> Result<Self, IndexError> {
        let digit = |b: u8| {
            if b.is_ascii_digit() {
                Ok(b - b'0')
            } else {
                Err(IndexError::NotInAlphabet(b))
            }
        };
        match *digits {
            [a] => Self::new(digit(a)?, DIGIT_PAD, DIGIT_PAD),
            [a, b] => Self::new(digit(a)?, digit(b)?, DIGIT_PAD),
            [a, b, c] => Self::new(digit(a)?, digit(b)?, digit(c)?),
            _ => Err(IndexError::LeadingPad),
        }
    }

    #[inline]
    pub fn code(self) -> u16 {
        self.d1 as u16 * 121 + self.p2 as u16 * 11 + self.p3 as u16
    }

    pub fn digit_count(self) -> usize {
        1 + (self.p2 != DIGIT_PAD) as usize + (self.p3 != DIGIT_PAD) as usize
    }

    pub fn is_padded(self) -> bool {
        self.p3 == DIGIT_PAD
    }

    /// The ASCII digits, pads stripped.
    pub fn digits(self) -> ([u8; 3], usize) {
        let mut out = [b'0' + self.d1, 0, 0];
        let mut n = 1;
        for p in [self.p2, self.p3] {
            if p != DIGIT_PAD {
                out[n] = b'0' + p;
                n += 1;
            }
        }
        (out, n)
    }
}

pub fn encode_numeric_triplet(tr: NumericTriplet, is_start: bool) -> TokenIndex {
    let base = if is_start {
        NUMERIC_START_BASE
    } else {
        NUMERIC_REPEAT_BASE
    };
    TokenIndex(base + tr.code())
}

pub fn decode_numeric_triplet(t: TokenIndex) -> Result<(NumericTriplet, bool), IndexError> {
    let (base, is_start) = match classify(t) {
        BlockClass::NumericStart => (NUMERIC_START_BASE, true),
        BlockClass::NumericRepeat => (NUMERIC_REPEAT_BASE, false),
        _ => return Err(IndexError::WrongBlock(t.0, "numeric triplet")),
    };
    let code = t.0 - base;
    let tr = NumericTriplet::new(
        (code / 121) as u8,
        ((code % 121) / 11) as u8,
        (code % 11) as u8,
    )?;
    Ok((tr, is_start))
}

/// Spells a purely numeric word as triplet tokens.
pub fn numeric_chain(word: &[u8], out: &mut Vec<TokenIndex>) -> Result<(), IndexError> {
    for (i, chunk) in word.chunks(3).enumerate() {
        out.push(encode_numeric_triplet(
            NumericTriplet::from_digits(chunk)?,
            i == 0,
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// separator pairs

pub const SEPARATOR_START_BASE: u16 = 500;
pub const SEPARATOR_REPEAT_BASE: u16 = 1550;
const SEPARATOR_RADIX: u16 = 32;

/// Separator alphabet, codes 1..=31 (code 0 is the pad). Bit-exact format.
pub const SEPARATOR_TABLE: [u8; 31] = *b" .,;:!?\"'()-_/\\*&+=<>[]{}@#$%|~";

const SEPARATOR_CODES: [u8; 256] = {
    let mut t = [0u8; 256];
    let mut i = 0;
    while i < SEPARATOR_TABLE.len() {
        t[SEPARATOR_TABLE[i] as usize] = i as u8 + 1;
        i += 1;
    }
    t
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SeparatorChar(u8);

impl SeparatorChar {
    pub const PAD: SeparatorChar = SeparatorChar(0);

    #[inline]
    pub fn from_byte(b: u8) -> Option<Self> {
        match SEPARATOR_CODES[b as usize] {
            0 => None,
            c => Some(SeparatorChar(c)),
        }
    }

    pub fn from_code(code: u8) -> Option<Self> {
        (code < 32).then_some(SeparatorChar(code))
    }

    #[inline]
    pub fn code(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_pad(self) -> bool {
        self.0 == 0
    }

    pub fn to_byte(self) -> Option<u8> {
        (self.0 > 0).then(|| SEPARATOR_TABLE[self.0 as usize - 1])
    }
}

/// True for bytes that can appear inside a separator run.
#[inline]
pub fn is_separator_byte(b: u8) -> bool {
    SEPARATOR_CODES[b as usize] != 0
}

pub fn encode_separator_pair(
    s1: SeparatorChar,
    s2: SeparatorChar,
    is_start: bool,
) -> Result<TokenIndex, IndexError> {
    if s1.is_pad() {
        return Err(IndexError::LeadingPad);
    }
    let base = if is_start {
        SEPARATOR_START_BASE
    } else {
        SEPARATOR_REPEAT_BASE
    };
    Ok(TokenIndex(
        base + SEPARATOR_RADIX * s1.0 as u16 + s2.0 as u16,
    ))
}

pub fn decode_separator_pair(
    t: TokenIndex,
) -> Result<(SeparatorChar, SeparatorChar, bool), IndexError> {
    let (base, is_start) = match classify(t) {
        BlockClass::SeparatorStart => (SEPARATOR_START_BASE, true),
        BlockClass::SeparatorRepeat => (SEPARATOR_REPEAT_BASE, false),
        _ => return Err(IndexError::WrongBlock(t.0, "separator pair")),
    };
    let code = t.0 - base;
    if code >= SEPARATOR_RADIX * SEPARATOR_RADIX {
        return Err(IndexError::Unassigned(t.0));
    }
    let s1 = SeparatorChar((code / SEPARATOR_RADIX) as u8);
    if s1.is_pad() {
        return Err(IndexError::LeadingPad);
    }
    Ok((s1, SeparatorChar((code % SEPARATOR_RADIX) as u8), is_start))
}

/// Spells a run of separator bytes as pair tokens.
pub fn separator_chain(run: &[u8], out: &mut Vec<TokenIndex>) -> Result<(), IndexError> {
    for (i, pair) in run.chunks(2).enumerate() {
        let s1 = SeparatorChar::from_byte(pair[0]).ok_or(IndexError::NotInAlphabet(pair[0]))?;
        let s2 = match pair.get(1) {
            Some(&b) => SeparatorChar::from_byte(b).ok_or(IndexError::NotInAlphabet(b))?,
            None => SeparatorChar::PAD,
        };
        out.push(encode_separator_pair(s1, s2, i == 0)?);
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// literal bytes

pub const LITERAL_BASE: u16 = 2660;
pub const CONTROL_BASE: u16 = 2900;

/// Token carrying one raw byte. Bytes 16–255 use the literal block, 0–15 the
/// control block.
pub fn literal_byte_token(b: u8) -> TokenIndex {
    if b >= 16 {
        TokenIndex(LITERAL_BASE + (b as u16 - 16))
    } else {
        TokenIndex(CONTROL_BASE + b as u16)
    }
}

pub fn decode_literal_byte(t: TokenIndex) -> Result<u8, IndexError> {
    match classify(t) {
        BlockClass::LiteralByte => Ok((t.0 - LITERAL_BASE + 16) as u8),
        BlockClass::ControlByte => Ok((t.0 - CONTROL_BASE) as u8),
        _ => Err(IndexError::WrongBlock(t.0, "literal byte")),
    }
}

// ---------------------------------------------------------------------------
// run lengths

pub const WORD_REPEAT_BASE: u16 = 256;
pub const SPACE_RUN_BASE: u16 = 301;
pub const MAX_WORD_REPEAT: usize = 45;
pub const MAX_SPACE_RUN: usize = 51;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RunKind {
    /// Additional repeats of the preceding word, 1..=45.
    WordRepeat,
    /// A run of 2..=51 spaces.
    SpaceRun,
}

pub fn run_length_token(kind: RunKind, count: usize) -> Result<TokenIndex, IndexError> {
    let (min, max, base) = match kind {
        RunKind::WordRepeat => (1, MAX_WORD_REPEAT, WORD_REPEAT_BASE),
        RunKind::SpaceRun => (2, MAX_SPACE_RUN, SPACE_RUN_BASE),
    };
    if !(min..=max).contains(&count) {
        return Err(IndexError::RunLength { count, min, max });
    }
    Ok(TokenIndex(base + (count - min) as u16))
}

pub fn decode_run_length(t: TokenIndex) -> Result<(RunKind, usize), IndexError> {
    match classify(t) {
        BlockClass::WordRepeat => Ok((RunKind::WordRepeat, (t.0 - WORD_REPEAT_BASE) as usize + 1)),
        BlockClass::SpaceRun => Ok((RunKind::SpaceRun, (t.0 - SPACE_RUN_BASE) as usize + 2)),
        _ => Err(IndexError::WrongBlock(t.0, "run length")),
    }
}
