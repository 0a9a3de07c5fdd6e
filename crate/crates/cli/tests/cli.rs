use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn nw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nw"))
        .args(args)
        .env_remove("NW_JOBS")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn table(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../tables/order{n}.nw"))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

/// Parses `1,-1,i,-i` rows and checks `HH* = dim·I` with plain integers.
fn quaternary_ok(block: &str) -> (usize, bool) {
    let rows: Vec<Vec<(i64, i64)>> = block
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            l.split(',')
                .map(|t| match t {
                    "1" => (1, 0),
                    "-1" => (-1, 0),
                    "i" => (0, 1),
                    "-i" => (0, -1),
                    other => panic!("bad token {other:?}"),
                })
                .collect()
        })
        .collect();
    let dim = rows.len();
    let ok = rows.iter().all(|r| r.len() == dim)
        && (0..dim).all(|i| {
            (0..dim).all(|j| {
                // Σ_k h_ik · conj(h_jk)
                let (mut re, mut im) = (0, 0);
                for (&(a, b), &(c, d)) in rows[i].iter().zip(&rows[j]) {
                    re += a * c + b * d;
                    im += b * c - a * d;
                }
                (re, im) == (if i == j { dim as i64 } else { 0 }, 0)
            })
        });
    (dim, ok)
}

#[test]
fn decompose_prints_pairs_and_count() {
    let out = nw(&["decompose", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(-1, 1, 1, 1)\n(1, 1, 1, 1)\ncount: 2\n");
}

#[test]
fn count_small_orders() {
    for (n, k) in [(1, "1"), (3, "1"), (7, "3"), (9, "5")] {
        let out = nw(&["count", "--order", &n.to_string()]);
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), k, "n = {n}");
    }
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(nw(&["count", "--order", "8"]).status.code(), Some(2));
    assert_eq!(nw(&["decompose"]).status.code(), Some(2));
    assert_eq!(nw(&["verify", "/nonexistent/file.nw"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.nw");
    // B is not symmetric
    std::fs::write(&bad, "n=3\nA: +++\nB: ++-\nC: +++\nD: +++\n").unwrap();
    let out = nw(&["verify", p(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn verify_tables() {
    for (n, order) in [(47, 188), (53, 212), (59, 236)] {
        let out = nw(&["verify", p(&table(n))]);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
        let text = stdout(&out);
        assert!(text.contains(&format!("hadamard_{order}=pass")));
        assert!(text.ends_with("verified: 1/1\n"));
    }
}

#[test]
fn verify_reports_failure_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("not_additive.nw");
    std::fs::write(&file, "n=3\nA: +++\nB: +++\nC: +++\nD: +++\n").unwrap();
    let out = nw(&["verify", p(&file)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("additivity=fail"));
    assert!(stdout(&out).ends_with("verified: 0/1\n"));
}

#[test]
fn search_output_verifies_and_is_canonical() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("n9.nw");
    let out = nw(&["search", "--order", "9", "--out", p(&out_file)]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("classes: 5\n"));
    let text = std::fs::read_to_string(&out_file).unwrap();
    assert!(text.starts_with("# order: 9\n# mode: full\n"));
    assert_eq!(text.matches("n=9").count(), 5);

    let verify = nw(&["verify", p(&out_file)]);
    assert!(verify.status.success());

    // the representatives are already canonical, so canon is a fixed point
    let canon_file = dir.path().join("canon.nw");
    let canon = nw(&["canon", p(&out_file), "--out", p(&canon_file)]);
    assert!(canon.status.success());
    assert_eq!(stdout(&canon), "records: 5\nclasses: 5\n");
    let strip = |t: &str| t.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(&std::fs::read_to_string(&canon_file).unwrap()), strip(&text));
}

#[test]
fn search_is_independent_of_job_count() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.nw");
    let eight = dir.path().join("eight.nw");
    let env_jobs = dir.path().join("env.nw");
    assert!(nw(&["search", "--order", "13", "--jobs", "1", "--out", p(&one)])
        .status
        .success());
    assert!(nw(&["search", "--order", "13", "--jobs", "8", "--out", p(&eight)])
        .status
        .success());
    let via_env = Command::new(env!("CARGO_BIN_EXE_nw"))
        .args(["search", "--order", "13", "--out", p(&env_jobs)])
        .env("NW_JOBS", "4")
        .output()
        .unwrap();
    assert!(via_env.status.success());
    let a = std::fs::read(&one).unwrap();
    assert_eq!(a, std::fs::read(&eight).unwrap());
    assert_eq!(a, std::fs::read(&env_jobs).unwrap());
}

#[test]
fn quaternary_export_passes_independent_check() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("h.txt");
    let out = nw(&["quaternary", p(&table(59)), "--out", p(&out_file)]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "record 1: quaternary_order=118 verified=pass\n");
    let text = std::fs::read_to_string(&out_file).unwrap();
    assert!(text.starts_with("# order: 118\n"));
    assert_eq!(quaternary_ok(&text), (118, true));
}

#[test]
fn quaternary_of_every_order_seven_class() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("n7.nw");
    let hq = dir.path().join("h7.txt");
    assert!(nw(&["search", "--order", "7", "--out", p(&cat)]).status.success());
    assert!(nw(&["quaternary", p(&cat), "--out", p(&hq)]).status.success());
    let text = std::fs::read_to_string(&hq).unwrap();
    let blocks: Vec<&str> = text.split("\n\n").collect();
    assert_eq!(blocks.len(), 3);
    for b in blocks {
        assert_eq!(quaternary_ok(b), (14, true));
    }
}

#[test]
fn first_only_in_almost_symmetric_mode() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("as.nw");
    let out = nw(&[
        "search",
        "--order",
        "15",
        "--mode",
        "almost-symmetric",
        "--first-only",
        "--out",
        p(&out_file),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("raw_solutions: 1\n"));
    assert!(nw(&["verify", p(&out_file)]).status.success());
}
