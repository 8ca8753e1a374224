//! The `tcss` binary end to end, through files and pipes.

mod common;

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn tcss(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tcss"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn text(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn build_dict(dir: &Path) -> std::path::PathBuf {
    let dict = dir.join("dict.txt");
    let alice = common::fixture("training/alice29.txt");
    let o = tcss(
        &[
            "build-dict",
            "--input",
            path(&alice),
            "--words-size",
            "3000",
            "--output",
            path(&dict),
        ],
        b"",
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    dict
}

#[test]
fn files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let dict = build_dict(dir.path());
    let src = common::fixture("training/asyoulik.txt");
    let packed = dir.path().join("a.tcss");
    let restored = dir.path().join("a.txt");

    let o = tcss(
        &[
            "compress",
            "--dict",
            path(&dict),
            "--input",
            path(&src),
            "--output",
            path(&packed),
            "--parse4",
        ],
        b"",
    );
    assert!(o.status.success());
    let o = tcss(
        &[
            "decompress",
            "--dict",
            path(&dict),
            "--input",
            path(&packed),
            "--output",
            path(&restored),
        ],
        b"",
    );
    assert!(o.status.success());
    assert_eq!(
        std::fs::read(&restored).unwrap(),
        std::fs::read(&src).unwrap()
    );

    let o = tcss(
        &["stats", "--input", path(&packed), "--dict", path(&dict)],
        b"",
    );
    let out = text(&o);
    assert!(out.contains("parse4: true"), "{out}");
    assert!(out.contains(&format!(
        "original_bytes: {}",
        std::fs::metadata(&src).unwrap().len()
    )));
}

#[test]
fn pipes_and_search() {
    let dir = tempfile::tempdir().unwrap();
    let dict = build_dict(dir.path());
    let doc = b"The Queen said the cat said nothing. Zyzzyva and 2024 and zyzzyva Zyzzyva.\n";
    let o = tcss(&["compress", "--dict", path(&dict)], doc);
    assert!(o.status.success());
    let packed = o.stdout;
    assert_eq!(&packed[..4], b"TCSS");

    let o = tcss(&["decompress", "--dict", path(&dict)], &packed);
    assert_eq!(o.stdout, doc);

    let o = tcss(
        &["search", "--dict", path(&dict), "--word", "Zyzzyva"],
        &packed,
    );
    let out = text(&o);
    assert!(out.starts_with("2 matches\noffsets: 37 66\n"), "{out}");
    let o = tcss(
        &["search", "--dict", path(&dict), "--word", "said"],
        &packed,
    );
    assert!(
        text(&o).starts_with("2 matches\noffsets: 10 23\n"),
        "{}",
        text(&o)
    );

    let o = tcss(&["verify", "--dict", path(&dict), "--no-parse2"], doc);
    assert!(o.status.success());
    assert_eq!(text(&o), "round-trip OK\n");
}

#[test]
fn bench_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let dict = build_dict(dir.path());
    let queries = dir.path().join("q.txt");
    std::fs::write(&queries, "Rosalind\nthe\r\n\nOrlando\n").unwrap();
    let src = common::fixture("training/asyoulik.txt");
    let o = tcss(
        &[
            "bench",
            "--dict",
            path(&dict),
            "--input",
            path(&src),
            "--queries",
            path(&queries),
            "--json",
        ],
        b"",
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["search"]["queries"].as_array().unwrap().len(), 3);
    assert_eq!(v["search"]["all_agree"], true);
    assert!(v["ratio"].as_f64().unwrap() > 0.2);
    assert!(v["stages"]["parse1_tokens"].as_u64().unwrap() >= v["token_count"].as_u64().unwrap());
}

#[test]
fn failures_report_and_exit_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let dict = build_dict(dir.path());

    let o = tcss(&["decompress", "--dict", path(&dict)], b"not a container");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "));

    let other = dir.path().join("other.txt");
    std::fs::write(&other, "[common]\nthe\n").unwrap();
    let packed = tcss(&["compress", "--dict", path(&dict)], b"hello there").stdout;
    let o = tcss(&["decompress", "--dict", path(&other)], &packed);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("hash"));

    let o = tcss(
        &["search", "--dict", path(&dict), "--word", "two words"],
        &packed,
    );
    assert_eq!(o.status.code(), Some(1));

    let o = tcss(&["compress"], b"");
    assert_eq!(o.status.code(), Some(2));
}
