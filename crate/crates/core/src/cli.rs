//! Command-line front end. The `tcss` binary is a thin wrapper around [`run`].

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::codec::{compress, decompress_container, read_container, CompressOptions};
use crate::dictionary::{build_from_corpus, BuildOptions, Dictionary};
use crate::metrics::{bench_report, CompressionReport};
use crate::search::{build_plan, scan};

#[derive(Parser, Debug)]
#[command(
    name = "tcss",
    version,
    about = "Word-referencing text compression and compressed-domain search"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a dictionary manifest from training text.
    BuildDict(BuildDictArgs),
    /// Compress text into a container.
    Compress(CodecArgs),
    /// Restore the original text from a container.
    Decompress(IoArgs),
    /// Find whole-word occurrences inside a container.
    Search(SearchArgs),
    /// Print size figures of a container.
    Stats(StatsArgs),
    /// Compress, search and report against the raw-text baseline.
    Bench(BenchArgs),
    /// Check that text survives a compress/decompress round trip.
    Verify(CodecArgs),
}

#[derive(Args, Debug)]
pub struct BuildDictArgs {
    /// Training text; repeat for several files, `-` for stdin.
    #[arg(long = "input", required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, default_value = "-")]
    pub output: PathBuf,
    #[arg(long, default_value_t = 256)]
    pub common_size: usize,
    #[arg(long, default_value_t = 40_000)]
    pub words_size: usize,
    #[arg(long, default_value_t = 3)]
    pub composite_min_count: usize,
}

#[derive(Args, Debug)]
pub struct IoArgs {
    #[arg(long)]
    pub dict: PathBuf,
    #[arg(long, default_value = "-")]
    pub input: PathBuf,
    #[arg(long, default_value = "-")]
    pub output: PathBuf,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct ParseFlags {
    /// Also run Parse IV (sequence aliases).
    #[arg(long)]
    pub parse4: bool,
    /// Skip Parse II (composites and word repeats).
    #[arg(long)]
    pub no_parse2: bool,
}

impl ParseFlags {
    fn options(self) -> CompressOptions {
        CompressOptions {
            parse2: !self.no_parse2,
            parse4: self.parse4,
        }
    }
}

#[derive(Args, Debug)]
pub struct CodecArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[command(flatten)]
    pub parses: ParseFlags,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub dict: PathBuf,
    #[arg(long, default_value = "-")]
    pub input: PathBuf,
    #[arg(long)]
    pub word: String,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    #[arg(long, default_value = "-")]
    pub input: PathBuf,
    /// Optional; when given, the container's dictionary hash is checked.
    #[arg(long)]
    pub dict: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long)]
    pub dict: PathBuf,
    #[arg(long, default_value = "-")]
    pub input: PathBuf,
    /// One query word per line.
    #[arg(long)]
    pub queries: Option<PathBuf>,
    #[command(flatten)]
    pub parses: ParseFlags,
    #[arg(long)]
    pub json: bool,
}

type CliResult = Result<(), Box<dyn std::error::Error>>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &Path) -> Result<Vec<u8>, Box<dyn std::error::Error>> {
        if path == Path::new("-") {
            let mut buf = Vec::new();
            self.stdin.read_to_end(&mut buf)?;
            Ok(buf)
        } else {
            fs::read(path).map_err(|e| format!("{}: {e}", path.display()).into())
        }
    }

    fn write(&mut self, path: &Path, bytes: &[u8]) -> CliResult {
        if path == Path::new("-") {
            self.stdout.write_all(bytes)?;
            self.stdout.flush()?;
        } else {
            fs::write(path, bytes).map_err(|e| format!("{}: {e}", path.display()))?;
        }
        Ok(())
    }

    fn load_dict(&mut self, path: &Path) -> Result<Dictionary, Box<dyn std::error::Error>> {
        let bytes = self.read(path)?;
        Ok(Dictionary::load_manifest(&bytes)?)
    }
}

/// Parses `args` (including the program name) and executes the subcommand.
/// Returns the process exit status: 0 on success, 1 on a runtime error and
/// 2 on a usage error.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return if code == 0 { 0 } else { 2 };
        }
    };
    let mut io = Io { stdin, stdout };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<i32, Box<dyn std::error::Error>> {
    match command {
        Command::BuildDict(a) => {
            let corpus = a
                .inputs
                .iter()
                .map(|p| io.read(p))
                .collect::<Result<Vec<_>, _>>()?;
            let opts = BuildOptions {
                common_size: a.common_size,
                words_size: a.words_size,
                composite_min_count: a.composite_min_count,
                ..BuildOptions::default()
            };
            let manifest = build_from_corpus(&corpus, &opts)?;
            io.write(&a.output, manifest.to_text().as_bytes())?;
        }
        Command::Compress(a) => {
            let dict = io.load_dict(&a.io.dict)?;
            let text = io.read(&a.io.input)?;
            io.write(&a.io.output, &compress(&text, &dict, a.parses.options()))?;
        }
        Command::Decompress(a) => {
            let dict = io.load_dict(&a.dict)?;
            let container = read_container(&io.read(&a.input)?)?;
            io.write(&a.output, &decompress_container(&container, &dict)?)?;
        }
        Command::Search(a) => {
            let dict = io.load_dict(&a.dict)?;
            let container = read_container(&io.read(&a.input)?)?;
            let plan = build_plan(a.word.as_bytes(), &dict)?;
            let result = scan(&container, &dict, &plan)?;
            let offsets: Vec<String> = result
                .matches
                .iter()
                .map(|m| m.char_offset.to_string())
                .collect();
            let out = format!(
                "{} matches\noffsets: {}\ntoken_comparisons: {}\n",
                result.matches.len(),
                offsets.join(" "),
                result.token_comparisons
            );
            io.write(Path::new("-"), out.as_bytes())?;
        }
        Command::Stats(a) => {
            let container = read_container(&io.read(&a.input)?)?;
            if let Some(path) = &a.dict {
                let dict = io.load_dict(path)?;
                crate::codec::check_hash(&container, &dict)?;
            }
            let report = CompressionReport::from_container(&container)?;
            let out = if a.json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            io.write(Path::new("-"), out.as_bytes())?;
        }
        Command::Bench(a) => {
            let dict = io.load_dict(&a.dict)?;
            let text = io.read(&a.input)?;
            let queries: Vec<Vec<u8>> = match &a.queries {
                Some(p) => io
                    .read(p)?
                    .split(|&b| b == b'\n')
                    .map(|l| l.strip_suffix(b"\r").unwrap_or(l).to_vec())
                    .filter(|l| !l.is_empty())
                    .collect(),
                None => Vec::new(),
            };
            let report = bench_report(&text, &dict, a.parses.options(), &queries)?;
            let out = if a.json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            io.write(Path::new("-"), out.as_bytes())?;
        }
        Command::Verify(a) => {
            let dict = io.load_dict(&a.io.dict)?;
            let text = io.read(&a.io.input)?;
            let packed = compress(&text, &dict, a.parses.options());
            let ok = crate::codec::decompress(&packed, &dict).is_ok_and(|d| d == text);
            let msg = if ok {
                "round-trip OK\n"
            } else {
                "round-trip FAILED\n"
            };
            io.write(Path::new("-"), msg.as_bytes())?;
            return Ok(if ok { 0 } else { 1 });
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &[u8]) -> (i32, Vec<u8>, String) {
        let mut input = stdin;
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("tcss").chain(args.iter().copied()),
            &mut input,
            &mut out,
            &mut err,
        );
        (code, out, String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&[], b"").0, 2);
        assert_eq!(call(&["compress"], b"").0, 2);
        assert_eq!(call(&["frobnicate"], b"").0, 2);
        let (code, out, _) = call(&["--help"], b"");
        assert_eq!(code, 0);
        assert!(String::from_utf8(out).unwrap().contains("build-dict"));
    }

    #[test]
    fn runtime_errors_exit_1() {
        let (code, _, err) = call(&["compress", "--dict", "/nonexistent/dict.txt"], b"x");
        assert_eq!(code, 1);
        assert!(err.starts_with("error: "));
    }
}
