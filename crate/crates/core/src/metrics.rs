//! Closed-form compression and search quantities, and the benchmark report.

use std::fmt::{self, Write as _};
use std::time::Instant;

use serde::Serialize;

use crate::codec::{compress_with_stats, CompressOptions, Container, ParseStats, HEADER_LEN};
use crate::dictionary::Dictionary;
use crate::error::MetricsError;
use crate::search::{build_plan, naive_scan, scan};

/// Exact non-negative rational, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Fraction {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den).max(1);
        Fraction {
            num: num / g,
            den: den / g,
        }
    }

    pub fn zero() -> Fraction {
        Fraction { num: 0, den: 1 }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// z = (A - B) / A.
pub fn compression_ratio(original: u64, compressed: u64) -> Result<f64, MetricsError> {
    if original == 0 {
        return Err(MetricsError::ZeroOriginal);
    }
    Ok((original as f64 - compressed as f64) / original as f64)
}

/// Predicted search saving in percent, 50 (1 + z).
pub fn predicted_sbf(z: f64) -> f64 {
    50.0 * (1.0 + z)
}

/// Fractional saving of an escaped alphanumeric word of length `n` plus its
/// trailing space: `n + 1` source bytes against `2 ceil(n/2)` token bytes.
pub fn local_compression_alnum(n: usize) -> Result<Fraction, MetricsError> {
    match n {
        0 => Err(MetricsError::ZeroLength),
        n if n % 2 == 1 => Ok(Fraction::zero()),
        n => Ok(Fraction::new(1, n as u64 + 1)),
    }
}

/// The commonly quoted even-length form `1/n`, kept for side-by-side
/// reporting. Odd lengths give 0.
pub fn local_compression_alnum_stated(n: usize) -> Result<Fraction, MetricsError> {
    match n {
        0 => Err(MetricsError::ZeroLength),
        n if n % 2 == 1 => Ok(Fraction::zero()),
        n => Ok(Fraction::new(1, n as u64)),
    }
}

/// Fractional saving of an escaped numeric word of length `n` plus its
/// trailing space, by residue of `n` mod 3.
pub fn local_compression_numeric(n: usize) -> Result<Fraction, MetricsError> {
    let n = n as u64;
    match n % 3 {
        _ if n == 0 => Err(MetricsError::ZeroLength),
        0 => Ok(Fraction::new(n + 3, 3 * n + 3)),
        2 => Ok(Fraction::new(1, 3)),
        _ => Ok(Fraction::new(n - 1, 3 * n + 3)),
    }
}

/// `(n + 1 - escaped) / (n + 1)` from an observed escape byte count.
pub fn measured_local_compression(n: usize, escaped_bytes: usize) -> Fraction {
    let original = n as u64 + 1;
    Fraction::new(original.saturating_sub(escaped_bytes as u64), original)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QueryReport {
    pub word: String,
    pub matches: usize,
    pub naive_matches: usize,
    pub token_comparisons: u64,
    pub char_comparisons: u64,
    pub scan_micros: u128,
    pub naive_micros: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchSummary {
    pub queries: Vec<QueryReport>,
    pub token_comparisons: u64,
    pub char_comparisons: u64,
    /// Percent of character comparisons avoided.
    pub measured_sbf: f64,
    /// Same saving in wall time; hardware dependent.
    pub wall_time_saving: f64,
    pub all_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompressionReport {
    pub original_bytes: u64,
    pub compressed_bytes: u64,
    pub header_bytes: u64,
    pub ratio: f64,
    /// Ratio ignoring the fixed header.
    pub ratio_without_header: f64,
    pub token_count: usize,
    pub predicted_sbf: f64,
    pub parse2: bool,
    pub parse4: bool,
    /// Known only when the report was produced while compressing.
    pub stages: Option<ParseStats>,
    pub search: Option<SearchSummary>,
}

impl CompressionReport {
    /// Size figures recoverable from a container alone.
    pub fn from_container(c: &Container) -> Result<Self, MetricsError> {
        let a = c.original_len;
        let b = c.encoded_len() as u64;
        let ratio = compression_ratio(a, b)?;
        Ok(CompressionReport {
            original_bytes: a,
            compressed_bytes: b,
            header_bytes: HEADER_LEN as u64,
            ratio,
            ratio_without_header: compression_ratio(a, b - HEADER_LEN as u64)?,
            token_count: c.tokens.len(),
            predicted_sbf: predicted_sbf(ratio),
            parse2: c.parse2(),
            parse4: c.parse4(),
            stages: None,
            search: None,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(s, "{k}: {v}");
        };
        line("original_bytes", self.original_bytes.to_string());
        line("compressed_bytes", self.compressed_bytes.to_string());
        line("header_bytes", self.header_bytes.to_string());
        line("ratio", format!("{:.4}", self.ratio));
        line(
            "ratio_without_header",
            format!("{:.4}", self.ratio_without_header),
        );
        line("token_count", self.token_count.to_string());
        line("parse2", self.parse2.to_string());
        line("parse4", self.parse4.to_string());
        if let Some(st) = &self.stages {
            line("parse1_tokens", st.parse1_tokens.to_string());
            line("parse2_tokens", st.parse2_tokens.to_string());
            line("parse4_tokens", st.parse4_tokens.to_string());
            line("aliases", st.aliases.to_string());
            line("alias_table_bytes", st.alias_table_bytes.to_string());
        }
        line("predicted_sbf", format!("{:.2}", self.predicted_sbf));
        if let Some(search) = &self.search {
            line("measured_sbf", format!("{:.2}", search.measured_sbf));
            line(
                "wall_time_saving",
                format!("{:.2}", search.wall_time_saving),
            );
            line("token_comparisons", search.token_comparisons.to_string());
            line("char_comparisons", search.char_comparisons.to_string());
            line("search_agrees", search.all_agree.to_string());
            for q in &search.queries {
                line(
                    "query",
                    format!(
                        "{} matches={} tokens={} chars={} scan_us={} naive_us={}",
                        q.word,
                        q.matches,
                        q.token_comparisons,
                        q.char_comparisons,
                        q.scan_micros,
                        q.naive_micros
                    ),
                );
            }
        }
        s
    }
}

/// Compresses `document`, then runs every query both over the container and
/// over the raw text.
pub fn bench_report<Q: AsRef<[u8]>>(
    document: &[u8],
    dict: &Dictionary,
    opts: CompressOptions,
    queries: &[Q],
) -> Result<CompressionReport, MetricsError> {
    let (container, stages) = compress_with_stats(document, dict, opts);
    let mut report = CompressionReport::from_container(&container)?;
    report.stages = Some(stages);

    let search = if queries.is_empty() {
        None
    } else {
        let mut reports = Vec::with_capacity(queries.len());
        for q in queries {
            let q = q.as_ref();
            let plan = build_plan(q, dict)?;
            let t0 = Instant::now();
            let scanned = scan(&container, dict, &plan)?;
            let scan_micros = t0.elapsed().as_micros();
            let t1 = Instant::now();
            let naive = naive_scan(document, q);
            let naive_micros = t1.elapsed().as_micros();
            let agree = scanned.matches.len() == naive.matches.len()
                && scanned
                    .matches
                    .iter()
                    .zip(&naive.matches)
                    .all(|(m, &o)| m.char_offset == o);
            reports.push((
                agree,
                QueryReport {
                    word: String::from_utf8_lossy(q).into_owned(),
                    matches: scanned.matches.len(),
                    naive_matches: naive.matches.len(),
                    token_comparisons: scanned.token_comparisons,
                    char_comparisons: naive.char_comparisons,
                    scan_micros,
                    naive_micros,
                },
            ));
        }
        let tokens: u64 = reports.iter().map(|(_, r)| r.token_comparisons).sum();
        let chars: u64 = reports.iter().map(|(_, r)| r.char_comparisons).sum();
        let scan_t: u128 = reports.iter().map(|(_, r)| r.scan_micros).sum();
        let naive_t: u128 = reports.iter().map(|(_, r)| r.naive_micros).sum();
        let saving = |fast: f64, slow: f64| {
            if slow > 0.0 {
                100.0 * (slow - fast) / slow
            } else {
                0.0
            }
        };
        Some(SearchSummary {
            all_agree: reports.iter().all(|(a, _)| *a),
            queries: reports.into_iter().map(|(_, r)| r).collect(),
            token_comparisons: tokens,
            char_comparisons: chars,
            measured_sbf: saving(tokens as f64, chars as f64),
            wall_time_saving: saving(scan_t as f64, naive_t as f64),
        })
    };

    report.search = search;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_examples() {
        let z = compression_ratio(5_014_247, 1_420_802).unwrap();
        assert!((z - 0.7166).abs() < 1e-4);
        assert_eq!(compression_ratio(100, 100).unwrap(), 0.0);
        let z = compression_ratio(5300, 2000).unwrap();
        assert!((z - 0.6226).abs() < 1e-4);
        assert!(compression_ratio(0, 1).is_err());
    }

    #[test]
    fn sbf_examples() {
        assert!((predicted_sbf(0.7) - 85.0).abs() < 1e-9);
        assert_eq!(predicted_sbf(0.0), 50.0);
        assert!((predicted_sbf(0.6226) - 81.13).abs() < 1e-2);
        assert!(predicted_sbf(0.3) < predicted_sbf(0.31));
    }

    #[test]
    fn local_compression_examples() {
        assert_eq!(local_compression_alnum(5).unwrap(), Fraction::zero());
        assert_eq!(local_compression_alnum(4).unwrap(), Fraction::new(1, 5));
        assert_eq!(local_compression_alnum(1).unwrap(), Fraction::zero());
        assert_eq!(
            local_compression_alnum_stated(4).unwrap(),
            Fraction::new(1, 4)
        );
        assert!(local_compression_alnum(0).is_err());
        assert_eq!(local_compression_numeric(3).unwrap(), Fraction::new(1, 2));
        assert_eq!(local_compression_numeric(5).unwrap(), Fraction::new(1, 3));
        assert_eq!(local_compression_numeric(4).unwrap(), Fraction::new(1, 5));
        assert!(local_compression_numeric(0).is_err());
    }

    #[test]
    fn closed_forms_match_byte_accounting() {
        for n in 1..=60usize {
            let alnum_bytes = 2 * n.div_ceil(2);
            let numeric_bytes = 2 * n.div_ceil(3);
            assert_eq!(
                local_compression_alnum(n).unwrap(),
                measured_local_compression(n, alnum_bytes)
            );
            assert_eq!(
                local_compression_numeric(n).unwrap(),
                measured_local_compression(n, numeric_bytes)
            );
        }
    }

    #[test]
    fn empty_query_set_has_no_search_section() {
        let d = Dictionary::load_manifest(b"[common]\nthe\n").unwrap();
        let queries: [&str; 0] = [];
        let r = bench_report(b"the the cat", &d, CompressOptions::default(), &queries).unwrap();
        assert!(r.search.is_none());
        assert!(r.to_text().contains("ratio: "));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["original_bytes"], 11);
        assert!(json["search"].is_null());
    }

    #[test]
    fn report_with_queries() {
        let d = Dictionary::load_manifest(b"[common]\nthe\ncat\n").unwrap();
        let r = bench_report(
            b"the cat the dog",
            &d,
            CompressOptions::default(),
            &["the", "dog"],
        )
        .unwrap();
        let s = r.search.unwrap();
        assert!(s.all_agree);
        assert_eq!(s.queries[0].matches, 2);
        assert_eq!(s.queries[1].matches, 1);
    }
}
