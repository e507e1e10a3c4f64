use std::process::{Command, Output};

use annular::render::code_from_svg;
use annular::AnnularMatching;

fn annular(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_annular"))
        .args(args)
        .env("ANNULAR_OFFLINE", "1")
        .env("ANNULAR_CACHE_DIR", std::env::temp_dir().join("annular-cli-test-cache"))
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = annular(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_queries() {
    assert_eq!(stdout(&["count", "--outer", "6", "--inner", "6"]), "34\n");
    assert_eq!(stdout(&["count", "--outer", "3", "--inner", "2"]), "0\n");
    assert_eq!(stdout(&["count", "--total", "8"]), "57\n");
    assert_eq!(stdout(&["count", "--total", "26"]), "3544416\n");
    assert_eq!(stdout(&["count", "--circular", "3"]), "2\n");
    assert_eq!(stdout(&["count", "--necklace", "4,2"]), "3\n");
    assert_eq!(stdout(&["count", "--outer", "6", "--inner", "4", "--crosscuts", "2"]), "5\n");
}

#[test]
fn count_json() {
    let text = stdout(&["count", "--outer", "12", "--inner", "12", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["value"], "24198");
    assert_eq!(doc["query"]["kind"], "ann");
    assert_eq!(doc["query"]["outer"], 12);
}

#[test]
fn infeasible_flags_fail() {
    for args in [
        vec!["count", "--total", "8", "--circular", "3"],
        vec!["count", "--outer", "6"],
        vec!["count", "--inner", "6"],
        vec!["count"],
        vec!["count", "--necklace", "1,2,3"],
        vec!["count", "--circular", "0"],
        vec!["count", "--outer", "6", "--inner", "4", "--crosscuts", "1"],
    ] {
        let out = annular(&args);
        assert!(!out.status.success(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn tables() {
    let csv = stdout(&["table", "maximal", "--n", "0..10", "--k", "0..10"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[0], "n,k=0,k=1,k=2,k=3,k=4,k=5,k=6,k=7,k=8,k=9,k=10");
    assert!(lines[11].ends_with(",1001603"));
    assert_eq!(lines[1..].iter().map(|l| l.split(',').count() - 1).sum::<usize>(), 121);

    let ann = stdout(&["table", "ann", "--max", "12"]);
    assert!(ann.lines().nth(1).unwrap() == "0,1,,1,,2,,4,,10,,26,,80");
    assert!(ann.lines().last().unwrap().ends_with(",24198"));
    assert_eq!(ann, stdout(&["table", "ann", "--max", "12"]));
    let zeros = stdout(&["table", "ann", "--max", "2", "--zeros"]);
    assert_eq!(zeros, "n,m=0,m=1,m=2\n0,1,0,1\n1,0,1,0\n2,1,0,2\n");

    let total = stdout(&["table", "total", "--max", "13"]);
    assert_eq!(total.lines().last(), Some("13,3544416"));

    let json = stdout(&["table", "total", "--max", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["kind"], "total");
    assert_eq!(doc["cells"][3][0], "20");
}

#[test]
fn enumerate_listing() {
    assert_eq!(
        stdout(&["enumerate", "--n", "1", "--m", "0", "--k", "1"]),
        "# annular-codes v1 n=1 m=0 k=1\n(UD|)\ntotal 1\n"
    );
    let two = stdout(&["enumerate", "--n", "1", "--m", "1", "--k", "2"]);
    let codes: Vec<&str> = two.lines().filter(|l| l.starts_with('(')).collect();
    assert_eq!(codes, ["(UD|)(|UD)", "(UD|UD)(|)"]);
    let five = stdout(&["enumerate", "--n", "2", "--m", "1", "--k", "2"]);
    let codes: Vec<&str> = five.lines().filter(|l| l.starts_with('(')).collect();
    assert_eq!(codes.len(), 5);
    let mut sorted = codes.clone();
    sorted.sort_unstable();
    assert_eq!(codes, sorted);
    assert!(five.ends_with("total 5\n"));
    for code in codes {
        assert_eq!(AnnularMatching::parse(code).unwrap().code(), code);
    }
    let out = annular(&["enumerate", "--n", "8", "--m", "0", "--k", "0"]);
    assert!(!out.status.success());
}

#[test]
fn verify_small() {
    let text = stdout(&["verify", "--max-endpoints", "6", "--sequences"]);
    assert!(text.contains("PASS formula=oracle"));
    assert!(text.contains("PASS sequences"));
    assert!(text.contains(" 0 failed"));
}

#[test]
fn render_embeds_code() {
    let svg = stdout(&["render", "--code", "(UUDD|UD)(|)"]);
    assert!(svg.contains("<svg"));
    assert_eq!(svg.matches("class=\"crosscut\"").count(), 2);
    assert_eq!(code_from_svg(&svg).unwrap(), AnnularMatching::parse("(UUDD|UD)(|)").unwrap());
    assert!(!annular(&["render", "--code", "(UD"]).status.success());
}

#[test]
fn bijections() {
    assert_eq!(stdout(&["bijection", "--code", "(UD|)", "--to", "necklace"]), "BBW\n");
    assert_eq!(stdout(&["bijection", "--code", "(UUDD|)", "--to", "linear"]), "UUDD\n");
    assert_eq!(stdout(&["bijection", "--code", "(UD|UD)(|)", "--to", "split"]), "(UD|)(|)\n(|UD)(|)\n");
    let graph = stdout(&["bijection", "--code", "(|)(|)(|)", "--to", "graph"]);
    let doc: serde_json::Value = serde_json::from_str(&graph).unwrap();
    assert_eq!(doc["vertex_count"], 3);
    assert!(!annular(&["bijection", "--code", "(|)(|)", "--to", "linear"]).status.success());
}

#[test]
fn fetch_offline() {
    let out = annular(&["fetch", "A003239"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("A003239 offset 0 (Bundled): 1,1,2,4,10,26,80,246,810,2704,9252"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert!(!annular(&["fetch", "A000045"]).status.success());
}
