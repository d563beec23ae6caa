use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn ramsey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramsey")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn line<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(' ')))
        .unwrap_or_else(|| panic!("no `{key}` line in:\n{out}"))
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

const K4_PLAIN: &str = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
const C5: &str = "c five-cycle\np edge 5 10\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\ne 1 1\ne 2 2\ne 3 3\ne 4 4\ne 5 5\n";

#[test]
fn eval_k4_with_loops_free() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k4.dimacs", K4_PLAIN);
    let o = ramsey(&["eval", "--graph", &g, "--fn", "3", "--loops-free", "--witness"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(line(&out, "RESULT"), "true");
    assert_eq!(line(&out, "f(n)"), "3");
    let w: Vec<usize> = line(&out, "witness").split(' ').map(|t| t.parse().unwrap()).collect();
    assert!(w.len() >= 3 && w.iter().all(|&v| (1..=4).contains(&v)));
}

#[test]
fn eval_k4_without_loops_has_no_eligible_vertex() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k4.dimacs", K4_PLAIN);
    let o = ramsey(&["eval", "--graph", &g, "--fn", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(line(&stdout(&o), "RESULT"), "false");
}

#[test]
fn eval_c5_log_threshold_is_false() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c5.dimacs", C5);
    let o = ramsey(&["eval", "--graph", &g, "--fn", "ceil(log2(n))"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(line(&stdout(&o), "f(n)"), "3");
    let o = ramsey(&["eval", "--graph", &g, "--fn", "2", "--witness"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn every_strategy_agrees() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c5.dimacs", C5);
    for s in ["auto", "enum", "vc", "bnb", "oracle"] {
        for (f, code) in [("2", 0), ("3", 1)] {
            let o = ramsey(&["eval", "--graph", &g, "--fn", f, "--strategy", s]);
            assert_eq!(o.status.code(), Some(code), "strategy {s}, f = {f}");
        }
    }
}

#[test]
fn model_input_reports_zero_based_ids() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.txt", "# triangle on 1..3 plus lone 0\nn 4\nS 1 1\nS 2 2\nS 3 3\nS 1 2\nS 2 1\nS 1 3\nS 3 1\nS 2 3\nS 3 2\nS 0 1\n");
    let o = ramsey(&["eval", "--model", &m, "--fn", "3", "--witness"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(line(&stdout(&o), "witness"), "1 2 3");
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c5.dimacs", C5);
    let o = ramsey(&["eval", "--graph", &g, "--fn", "n + 2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds"));
    let bad = write(&dir, "bad.dimacs", "p edge 3 1\ne 1 9\n");
    let o = ramsey(&["eval", "--graph", &bad, "--fn", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ramsey(&["eval", "--graph", &g, "--fn", "n +"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ramsey(&["eval", "--fn", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_reports_cases() {
    let cases = [
        ("ceil(1/2 * n)", "Case3", "intractable under ETH"),
        ("n - 2", "Case4", "tractable"),
        ("5", "Case1", "tractable"),
        ("ceil(sqrt(n))", "Case2", "intractable under ETH"),
        ("n - ceil(log2(n))", "Case4", "tractable"),
    ];
    for (f, case, verdict) in cases {
        let o = ramsey(&["classify", "--fn", f]);
        assert_eq!(o.status.code(), Some(0), "{f}");
        let out = stdout(&o);
        assert!(line(&out, "case").starts_with(case), "{f}: {out}");
        assert!(line(&out, "verdict").starts_with(verdict), "{f}: {out}");
    }
    let out = stdout(&ramsey(&["classify", "--fn", "5"]));
    assert!(line(&out, "case").contains("c=5"), "{out}");
}

#[test]
fn probe_recovers_values() {
    for (f, n, expect) in [("ceil(sqrt(n))", "100", "10"), ("n - 3", "40", "37"), ("n + 1", "7", "> n")] {
        let o = ramsey(&["probe", "--fn", f, "--n", n]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        assert_eq!(line(&out, &format!("f({n})")), expect, "{f}");
    }
}

fn eval_code(g: &str, f: &str) -> Option<i32> {
    ramsey(&["eval", "--graph", g, "--fn", f]).status.code()
}

#[test]
fn reductions_preserve_answers() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c5.dimacs", C5);
    // C5 has a 2-clique but no 3-clique
    for (kind, f, target, expect) in [
        ("pad", "ceil(log2(n))", "2", 0),
        ("pad", "ceil(log2(n))", "3", 1),
        ("sublinear", "ceil(sqrt(n))", "2", 0),
        ("sublinear", "ceil(sqrt(n))", "3", 1),
        ("linear", "ceil(1/2 * n)", "2", 0),
        ("linear", "ceil(1/2 * n)", "3", 1),
    ] {
        let out = path(&dir, &format!("{kind}-{target}.dimacs"));
        let o = ramsey(&["reduce", kind, "--graph", &g, "--fn", f, "--target", target, "--out", &out]);
        assert_eq!(o.status.code(), Some(0), "{kind} {target}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(Path::new(&format!("{out}.params")).exists());
        assert_eq!(eval_code(&out, f), Some(expect), "{kind} {target}");
    }
}

#[test]
fn reduction_rejects_wrong_case() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c5.dimacs", C5);
    let out = path(&dir, "x.dimacs");
    let o = ramsey(&["reduce", "linear", "--graph", &g, "--fn", "n - 1", "--target", "2", "--out", &out]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = path(&dir, "a.dimacs");
    let b = path(&dir, "b.dimacs");
    for out in [&a, &b] {
        let o = ramsey(&["gen", "--model", "planted", "--n", "40", "--k", "12", "--p", "0.3", "--seed", "9", "--out", out]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(eval_code(&a, "12"), Some(0));
}

#[test]
fn oracle_check_passes() {
    let o = ramsey(&["oracle-check", "--max-n", "8", "--trials", "15", "--fn", "ceil(log2(n)) + 1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("OK"));
    let o = ramsey(&["oracle-check", "--max-n", "25"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_writes_csv() {
    let dir = TempDir::new().unwrap();
    let out = path(&dir, "bench.csv");
    let o = ramsey(&[
        "bench", "--fn", "n - ceil(log2(n))", "--family", "near-complete", "--n-min", "20", "--n-max", "200", "--step",
        "60", "--trials", "2", "--out", &out,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut reader = csv::Reader::from_path(&out).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(str::to_owned).collect();
    assert_eq!(header, ["fn", "n", "k", "strategy", "outcome", "wall_us", "subsets", "nodes", "branches", "seed"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| &r[3] == "VertexCoverNearN" && (&r[4] == "true" || &r[4] == "false")));
}

#[test]
fn bench_reports_exhausted_budget() {
    let o = ramsey(&[
        "bench", "--fn", "ceil(1/3 * n)", "--family", "gnp", "--p", "0.9", "--n-min", "300", "--n-max", "300",
        "--strategy", "bnb", "--budget-ms", "0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let row = out.lines().nth(1).unwrap();
    assert!(row.contains(",budget-exhausted,"), "{row}");
}
