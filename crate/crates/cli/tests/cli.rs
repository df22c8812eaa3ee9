use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn seppath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seppath")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_path_edge_list() {
    let o = seppath(&["gen", "path", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "5 4\n0 1\n1 2\n2 3\n3 4\n");
}

#[test]
fn gen_is_deterministic() {
    let a = seppath(&["gen", "gnp", "20", "0.5", "--seed", "1"]);
    let b = seppath(&["gen", "gnp", "20", "0.5", "--seed", "1"]);
    assert_eq!(stdout(&a), stdout(&b));
    let comb = stdout(&seppath(&["gen", "comb", "6"]));
    assert!(comb.starts_with("18 17\n"));
}

#[test]
fn gen_rejects_bad_input() {
    assert_eq!(seppath(&["gen", "nope", "5"]).status.code(), Some(1));
    assert_eq!(seppath(&["gen", "gnp", "5"]).status.code(), Some(1));
    assert_eq!(seppath(&["gen", "path", "0"]).status.code(), Some(1));
    assert_eq!(seppath(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn construct_verify_localize() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "p7.txt", &stdout(&seppath(&["gen", "path", "7"])));
    let sys = dir.path().join("sys.txt");

    let o = seppath(&["construct", s(&graph), "--strategy", "tree", "--out", s(&sys)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("size=3 verified=true"));
    assert!(fs::read_to_string(&sys).unwrap().starts_with("3\n"));

    let o = seppath(&["verify", s(&graph), s(&sys)]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["separating"], true);
    assert_eq!(report["uncovered"], serde_json::json!([0]));

    // Edge 0-1 is covered by nothing, so a clean run points at it.
    let o = seppath(&["localize", s(&graph), s(&sys)]);
    assert_eq!(stdout(&o), "0 1\n");
    let o = seppath(&["localize", s(&graph), s(&sys), "0", "1", "2"]);
    assert_eq!(o.status.code(), Some(3));
    let o = seppath(&["localize", s(&graph), s(&sys), "9"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn every_edge_localizes() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "g.txt", &stdout(&seppath(&["gen", "gnp", "12", "0.4", "--seed", "3"])));
    let o = seppath(&["construct", s(&graph)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let sys = write(&dir, "sys.txt", &text);
    let paths: Vec<Vec<usize>> = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
        .collect();
    let edges = fs::read_to_string(&graph).unwrap();
    for line in edges.lines().skip(1) {
        let e: Vec<usize> = line.split_whitespace().map(|x| x.parse().unwrap()).collect();
        let failed: Vec<String> = paths
            .iter()
            .enumerate()
            .filter(|(_, p)| p.windows(2).any(|w| (w[0] == e[0] && w[1] == e[1]) || (w[0] == e[1] && w[1] == e[0])))
            .map(|(i, _)| i.to_string())
            .collect();
        if failed.is_empty() {
            continue;
        }
        let mut args = vec!["localize", s(&graph), s(&sys)];
        args.extend(failed.iter().map(String::as_str));
        assert_eq!(stdout(&seppath(&args)), format!("{} {}\n", e[0], e[1]));
    }
}

#[test]
fn non_separating_system() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    let sys = write(&dir, "sys.txt", "1\n0 1 2 3\n");
    let o = seppath(&["verify", s(&graph), s(&sys)]);
    assert_eq!(o.status.code(), Some(4));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["witness"], serde_json::json!([0, 1]));
    assert_eq!(seppath(&["localize", s(&graph), s(&sys), "0"]).status.code(), Some(4));
}

#[test]
fn parse_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "bad.txt", "3 2\n0 1\n");
    assert_eq!(seppath(&["construct", s(&graph)]).status.code(), Some(1));
    let good = write(&dir, "p3.txt", "3 2\n0 1\n1 2\n");
    let sys = write(&dir, "sys.txt", "1\n0 2\n");
    assert_eq!(seppath(&["verify", s(&good), s(&sys)]).status.code(), Some(1));
    assert_eq!(seppath(&["verify", "/nonexistent", s(&sys)]).status.code(), Some(1));
}

#[test]
fn strategy_failure_exits_two() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "p7.txt", &stdout(&seppath(&["gen", "path", "7"])));
    let o = seppath(&["construct", s(&graph), "--strategy", "min-degree", "--c", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("precondition"));
}

#[test]
fn solve_reports_json() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "k4.txt", &stdout(&seppath(&["gen", "complete", "4"])));
    let o = seppath(&["solve", s(&graph)]);
    assert!(o.status.success());
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["value"], 3);
    assert_eq!(r["proved_optimal"], true);
    assert_eq!(r["witness"].as_array().unwrap().len(), 3);
    let o = seppath(&["solve", s(&graph), "--catalog-cap", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_csv() {
    let o = seppath(&["bench", "paths", "3..12", "--strategy", "path"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("graph,n,m,strategy,size,size_per_n,verified,millis"));
    for (line, n) in lines.zip(3..) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[1], n.to_string());
        assert_eq!(cols[4], (n / 2).to_string());
        assert_eq!(cols[6], "true");
    }

    let o = seppath(&["bench", "combs", "2..10", "--strategy", "comb"]);
    for line in stdout(&o).lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let order: usize = cols[1].parse().unwrap();
        assert_eq!(cols[4].parse::<usize>().unwrap(), order / 3 + 1);
    }

    let strip = |t: String| t.lines().map(|l| l.rsplit_once(',').unwrap().0.to_string()).collect::<Vec<_>>();
    let a = strip(stdout(&seppath(&["bench", "gnp:60..120:p=0.5:step=30", "--seed", "4"])));
    let b = strip(stdout(&seppath(&["bench", "gnp", "n=60..120", "p=0.5", "step=30", "--seed", "4"])));
    assert_eq!(a, b);
    assert!(a.iter().skip(1).all(|l| l.ends_with(",true")));
    assert_eq!(seppath(&["bench", "nope:1..3"]).status.code(), Some(1));
}
