//! Binary container: 24-byte header, alias table, big-endian token stream.

use crate::error::CodecError;
use crate::index_space::{BlockClass, TokenIndex};

pub const MAGIC: [u8; 4] = *b"TCSS";
pub const VERSION: u8 = 0x01;
pub const HEADER_LEN: usize = 24;

pub const FLAG_PARSE2: u8 = 0b01;
pub const FLAG_PARSE4: u8 = 0b10;

pub const ALIAS_BASE: u16 = 64969;
pub const MAX_ALIASES: usize = 567;
pub const MAX_EXPANSION: usize = 255;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AliasDefinition {
    pub alias: TokenIndex,
    pub expansion: Vec<TokenIndex>,
}

impl AliasDefinition {
    /// Bytes this record occupies in the header.
    pub fn encoded_len(&self) -> usize {
        3 + 2 * self.expansion.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Container {
    pub flags: u8,
    pub dict_hash: u64,
    pub original_len: u64,
    pub aliases: Vec<AliasDefinition>,
    pub tokens: Vec<TokenIndex>,
}

impl Container {
    pub fn parse2(&self) -> bool {
        self.flags & FLAG_PARSE2 != 0
    }

    pub fn parse4(&self) -> bool {
        self.flags & FLAG_PARSE4 != 0
    }

    pub fn alias_table_len(&self) -> usize {
        self.aliases.iter().map(AliasDefinition::encoded_len).sum()
    }

    /// Serialized size without building the bytes.
    pub fn encoded_len(&self) -> usize {
        HEADER_LEN + self.alias_table_len() + 2 * self.tokens.len()
    }

    /// Token stream with every alias replaced by its expansion.
    pub fn expanded(&self) -> Result<Vec<TokenIndex>, CodecError> {
        let table = AliasTable::new(self)?;
        let mut out = Vec::with_capacity(self.tokens.len());
        for &t in &self.tokens {
            match table.lookup(t)? {
                Some(exp) => out.extend_from_slice(exp),
                None => out.push(t),
            }
        }
        Ok(out)
    }
}

/// Dense alias lookup; unaliased tokens expand to themselves.
pub(crate) struct AliasTable<'c> {
    slots: Vec<Option<&'c [TokenIndex]>>,
    enabled: bool,
}

impl<'c> AliasTable<'c> {
    pub(crate) fn new(c: &'c Container) -> Result<Self, CodecError> {
        let mut slots = vec![None; MAX_ALIASES];
        for def in &c.aliases {
            let slot = alias_slot(def.alias).ok_or(CodecError::InvalidAlias(def.alias.0))?;
            slots[slot] = Some(&def.expansion[..]);
        }
        Ok(AliasTable {
            slots,
            enabled: c.parse4(),
        })
    }

    #[inline]
    pub(crate) fn lookup(&self, t: TokenIndex) -> Result<Option<&'c [TokenIndex]>, CodecError> {
        match alias_slot(t) {
            None => Ok(None),
            Some(slot) if self.enabled => self.slots[slot]
                .map(Some)
                .ok_or(CodecError::UndefinedAlias(t.0)),
            Some(_) => Err(CodecError::UndefinedAlias(t.0)),
        }
    }
}

#[inline]
pub(crate) fn alias_slot(t: TokenIndex) -> Option<usize> {
    (t.class() == BlockClass::Alias).then(|| (t.0 - ALIAS_BASE) as usize)
}

pub fn write_container(c: &Container) -> Vec<u8> {
    let mut out = Vec::with_capacity(c.encoded_len());
    out.extend_from_slice(&MAGIC);
    out.push(VERSION);
    out.push(c.flags);
    out.extend_from_slice(&c.dict_hash.to_be_bytes());
    out.extend_from_slice(&c.original_len.to_be_bytes());
    out.extend_from_slice(&(c.aliases.len() as u16).to_be_bytes());
    for def in &c.aliases {
        out.extend_from_slice(&def.alias.to_be_bytes());
        out.push(def.expansion.len() as u8);
        for t in &def.expansion {
            out.extend_from_slice(&t.to_be_bytes());
        }
    }
    for t in &c.tokens {
        out.extend_from_slice(&t.to_be_bytes());
    }
    out
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize, err: CodecError) -> Result<&'a [u8], CodecError> {
        let s = self.bytes.get(self.pos..self.pos + n).ok_or(err)?;
        self.pos += n;
        Ok(s)
    }

    fn u16(&mut self, err: CodecError) -> Result<u16, CodecError> {
        let s = self.take(2, err)?;
        Ok(u16::from_be_bytes([s[0], s[1]]))
    }

    fn u64(&mut self) -> Result<u64, CodecError> {
        let s = self.take(8, CodecError::Truncated("header"))?;
        Ok(u64::from_be_bytes(s.try_into().expect("8 bytes")))
    }
}

pub fn read_container(bytes: &[u8]) -> Result<Container, CodecError> {
    let mut r = Reader { bytes, pos: 0 };
    if r.take(4, CodecError::BadMagic)? != MAGIC {
        return Err(CodecError::BadMagic);
    }
    let version = r.take(1, CodecError::Truncated("header"))?[0];
    if version != VERSION {
        return Err(CodecError::UnsupportedVersion(version));
    }
    let flags = r.take(1, CodecError::Truncated("header"))?[0];
    let dict_hash = r.u64()?;
    let original_len = r.u64()?;
    let alias_count = r.u16(CodecError::Truncated("header"))? as usize;

    let mut seen = [false; MAX_ALIASES];
    let mut aliases = Vec::with_capacity(alias_count.min(MAX_ALIASES));
    for _ in 0..alias_count {
        let alias = TokenIndex(r.u16(CodecError::AliasOverrun)?);
        let len = r.take(1, CodecError::AliasOverrun)?[0] as usize;
        let raw = r.take(2 * len, CodecError::AliasOverrun)?;
        let expansion: Vec<TokenIndex> = raw
            .chunks_exact(2)
            .map(|p| TokenIndex::from_be_bytes([p[0], p[1]]))
            .collect();
        let slot = alias_slot(alias).ok_or(CodecError::InvalidAlias(alias.0))?;
        let valid = !seen[slot]
            && len >= 2
            && expansion
                .iter()
                .all(|t| !matches!(t.class(), BlockClass::Alias | BlockClass::Reserved));
        if !valid {
            return Err(CodecError::InvalidAlias(alias.0));
        }
        seen[slot] = true;
        aliases.push(AliasDefinition { alias, expansion });
    }

    let rest = &bytes[r.pos..];
    if !rest.len().is_multiple_of(2) {
        return Err(CodecError::OddLength);
    }
    let tokens = rest
        .chunks_exact(2)
        .map(|p| TokenIndex::from_be_bytes([p[0], p[1]]))
        .collect();
    Ok(Container {
        flags,
        dict_hash,
        original_len,
        aliases,
        tokens,
    })
}
