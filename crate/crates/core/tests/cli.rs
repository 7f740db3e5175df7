use std::process::{Command, Output};

use sfq::ring::RatQT;
use sfq::symfun::SymFun;

fn sfq_in(dir: &std::path::Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sfq"))
        .args(args)
        .env("SFQ_CACHE_DIR", dir)
        .output()
        .expect("run sfq")
}

fn sfq(args: &[&str]) -> (i32, String) {
    let dir = tempfile::tempdir().unwrap();
    let out = sfq_in(dir.path(), args);
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn expand_examples() {
    assert_eq!(sfq(&["expand", "macdonald-H", "--mu", "2", "--basis", "s"]), (0, "s[2] + q*s[1,1]\n".into()));
    assert_eq!(sfq(&["expand", "hl-Q", "--mu", "1"]), (0, "(-t + 1)*s[1]\n".into()));
    assert_eq!(sfq(&["expand", "macdonald-H", "--mu", "-"]), (0, "1\n".into()));
    assert_eq!(sfq(&["expand", "macdonald-Htilde", "--mu", "1,1"]), (0, "s[2] + t*s[1,1]\n".into()));
}

#[test]
fn expand_json_round_trips() {
    for family in ["macdonald-H", "macdonald-Htilde", "integral-J", "hl-Q", "hl-H"] {
        for basis in ["s", "m", "e", "h", "p"] {
            let (code, json) = sfq(&["expand", family, "--mu", "2,1", "--basis", basis, "--format", "json"]);
            assert_eq!(code, 0);
            let f: SymFun<RatQT> = serde_json::from_str(&json).unwrap();
            assert_eq!(serde_json::to_string(&f).unwrap(), json.trim_end(), "{family} in {basis}");
            let (_, text) = sfq(&["expand", family, "--mu", "2,1", "--basis", basis]);
            assert_eq!(f.to_string(), text.trim_end());
        }
    }
}

#[test]
fn kostka_tables() {
    let (code, csv) = sfq(&["kostka", "qt", "--n", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(csv, "lambda\\mu,2,\"1,1\"\n2,1,t\n\"1,1\",q,1\n");
    let (code, text) = sfq(&["kostka", "foulkes", "--n", "1"]);
    assert_eq!((code, text.as_str()), (0, "   1\n1  1\n"));
    let (code, json) = sfq(&["kostka", "qt", "--n", "0", "--format", "json"]);
    assert_eq!(code, 0);
    let m = sfq::matrix::PartitionMatrix::from_json(&json).unwrap();
    assert_eq!(m.order.len(), 1);
    assert_eq!(m.get(&sfq::partitions::Partition::empty(), &sfq::partitions::Partition::empty()).to_string(), "1");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["expand", "macdonald-X", "--mu", "1"][..],
        &["expand", "macdonald-H", "--mu", "1,2"],
        &["expand", "macdonald-H", "--mu", "2", "--basis", "x"],
        &["verify", "everything"],
        &["kostka", "qt"],
        &["verify", "all", "--vars", "0"],
        &[],
    ] {
        assert_eq!(sfq(args).0, 2, "{args:?}");
    }
    assert_eq!(sfq(&["--help"]).0, 0);
}

#[test]
fn verify_reports_and_determinism() {
    let (code, a) = sfq(&["verify", "all", "--max-n", "2", "--jobs", "2"]);
    assert_eq!(code, 0);
    let (_, b) = sfq(&["verify", "all", "--max-n", "2", "--jobs", "1", "--no-cache"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["suite"], "all");
    let checks = v["checks"].as_array().unwrap();
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for c in checks {
        assert_eq!(c.as_object().unwrap().len(), 4);
        assert_eq!(c["status"], "pass");
        assert!(!c["paper_ref"].as_str().unwrap().is_empty());
    }
    assert_eq!(sfq(&["verify", "duality", "--max-n", "4"]).0, 0);
}

#[test]
fn cache_management() {
    let dir = tempfile::tempdir().unwrap();
    let run = |args: &[&str]| String::from_utf8(sfq_in(dir.path(), args).stdout).unwrap();
    assert_eq!(run(&["cache", "path"]).trim_end(), dir.path().display().to_string());
    assert_eq!(run(&["cache", "list"]).trim(), "");
    let first = run(&["kostka", "qt", "--n", "3"]);
    assert!(run(&["cache", "list"]).contains("qt-kostka-n3.json"));
    assert_eq!(run(&["kostka", "qt", "--n", "3"]), first);

    // a tampered entry is detected and recomputed
    let path = dir.path().join("qt-kostka-n3.json");
    let text = std::fs::read_to_string(&path).unwrap().replace("q^3", "q^4");
    std::fs::write(&path, text).unwrap();
    assert_eq!(run(&["kostka", "qt", "--n", "3"]), first);

    assert_eq!(run(&["cache", "clear"]).trim(), "removed 1 files");
    let _ = run(&["--no-cache", "kostka", "qt", "--n", "3"]);
    assert_eq!(run(&["cache", "list"]).trim(), "");
}
