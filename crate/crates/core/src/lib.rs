//! Word-referencing text compression with whole-word search over the
//! compressed token stream.
//!
//! Text is split into words and separator runs, each word is replaced by a
//! two-byte index into a shared dictionary, and words outside the dictionary
//! are spelled with escape tokens. Searches compile a query into the token
//! patterns that can spell it and scan the token stream without decoding.
//!
//! ```
//! use tcss::codec::{compress, decompress, CompressOptions};
//! use tcss::Dictionary;
//!
//! let dict = Dictionary::load_manifest(b"[common]\nthe\nin\n[words]\nhouse\n[composites]\nin the\n").unwrap();
//! let packed = compress(b"in the house", &dict, CompressOptions::default());
//! assert_eq!(decompress(&packed, &dict).unwrap(), b"in the house");
//! ```

pub mod cli;
pub mod codec;
pub mod dictionary;
pub mod error;
pub mod index_space;
pub mod metrics;
pub mod search;
pub mod synth;
pub mod tokenizer;

pub use codec::{compress, decompress, CompressOptions, Container};
pub use dictionary::{build_from_corpus, BuildOptions, Dictionary, DictionaryManifest};
pub use index_space::{BlockClass, TokenIndex};
pub use search::{build_plan, naive_scan, scan, SearchPlan};
