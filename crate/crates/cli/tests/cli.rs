use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn drdlab(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drdlab"))
        .current_dir(dir)
        .env_remove("DRDLAB_SEED")
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn gen(dir: &Path, args: &[&str]) {
    let out = drdlab(dir, &[&["gen"], args].concat());
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn gen_block_cycle_file() {
    let tmp = TempDir::new().unwrap();
    gen(
        tmp.path(),
        &[
            "--family",
            "blockcycle",
            "--t",
            "3",
            "--rho",
            "2",
            "-o",
            "bc.dg",
        ],
    );
    let text = fs::read_to_string(tmp.path().join("bc.dg")).unwrap();
    let g = drdlab::edgelist::parse(&text).unwrap();
    assert_eq!((g.n(), g.edge_count()), (6, 12));
}

#[test]
fn gen_srd_directory() {
    let tmp = TempDir::new().unwrap();
    gen(
        tmp.path(),
        &["--family", "srd", "--params", "6,2,1,0,1", "-o", "out"],
    );
    let index = fs::read_to_string(tmp.path().join("out/index.txt")).unwrap();
    let files: Vec<&str> = index
        .lines()
        .filter_map(|l| l.strip_prefix("file "))
        .collect();
    assert!(!files.is_empty());
    for f in files {
        assert!(tmp.path().join("out").join(f).exists());
    }
}

#[test]
fn gen_rejects_bad_parameters() {
    let tmp = TempDir::new().unwrap();
    assert_eq!(
        code(&drdlab(
            tmp.path(),
            &["gen", "--family", "blockcycle", "--t", "1", "--rho", "2"]
        )),
        2
    );
    assert_eq!(
        code(&drdlab(
            tmp.path(),
            &["gen", "--family", "srd", "--params", "6,2,1", "-o", "x"]
        )),
        2
    );
    assert_eq!(code(&drdlab(tmp.path(), &["gen", "--family", "gamma"])), 2);
    assert_eq!(
        code(&drdlab(
            tmp.path(),
            &["gen", "--family", "nope", "--n", "3"]
        )),
        2
    );
}

#[test]
fn gen_writes_stdout_without_output() {
    let tmp = TempDir::new().unwrap();
    let out = drdlab(tmp.path(), &["gen", "--family", "dcycle", "--n", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(drdlab::edgelist::parse(&stdout(&out)).unwrap().n(), 4);
}

#[test]
fn check_exit_codes() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    gen(
        dir,
        &[
            "--family",
            "blockcycle",
            "--t",
            "3",
            "--rho",
            "2",
            "-o",
            "bc.dg",
        ],
    );
    gen(dir, &["--family", "gamma", "--n", "5", "-o", "gamma5.dg"]);
    let out = drdlab(dir, &["check", "--what", "drd", "bc.dg"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("true"));
    let out = drdlab(dir, &["check", "--what", "normal", "gamma5.dg"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("false"));
    assert!(stdout(&out).contains("witness"));
    assert_eq!(
        code(&drdlab(dir, &["check", "--what", "wdrd", "gamma5.dg"])),
        0
    );
    assert_eq!(
        code(&drdlab(dir, &["check", "--what", "drd", "gamma5.dg"])),
        1
    );
    assert_eq!(
        code(&drdlab(dir, &["check", "--what", "srd", "missing.dg"])),
        2
    );
    let out = drdlab(dir, &["check", "--what", "type", "bc.dg"]);
    assert_eq!((code(&out), stdout(&out).trim()), (0, "long"));
    assert_eq!(
        code(&drdlab(dir, &["check", "--what", "type", "gamma5.dg"])),
        2
    );
    fs::write(dir.join("bad.dg"), "digraph 2\ne 0 5\n").unwrap();
    assert_eq!(code(&drdlab(dir, &["check", "--what", "drd", "bad.dg"])), 2);
}

#[test]
fn cut_listings() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    gen(
        dir,
        &[
            "--family",
            "blockcycle",
            "--t",
            "3",
            "--rho",
            "2",
            "-o",
            "bc.dg",
        ],
    );
    gen(dir, &["--family", "gamma", "--n", "5", "-o", "gamma5.dg"]);
    gen(
        dir,
        &["--family", "srd", "--params", "8,3,2,1,1", "-o", "srd8"],
    );

    let out = stdout(&drdlab(dir, &["cut", "--edge", "--enumerate", "bc.dg"]));
    assert!(out.starts_with("edge-connectivity 2\n"));
    let cuts: Vec<&str> = out.lines().filter(|l| l.starts_with("cut ")).collect();
    assert!(!cuts.is_empty());
    assert!(cuts.iter().all(|l| l.contains("Star(")));

    let out = drdlab(dir, &["cut", "--vertex", "srd8/srd-8-3-2-1-1-0.dg"]);
    assert_eq!(
        (code(&out), stdout(&out)),
        (0, "vertex-connectivity 2\n".to_string())
    );

    let out = stdout(&drdlab(
        dir,
        &["cut", "--edge", "gamma5.dg", "--enumerate", "--classify"],
    ));
    assert!(out.contains("NonTrivial"));
    assert!(out.lines().any(|l| l.starts_with("class NonTrivial ")));
}

#[test]
fn cut_rejects_disconnected_input() {
    let tmp = TempDir::new().unwrap();
    fs::write(tmp.path().join("path.dg"), "digraph 2\ne 0 1\n").unwrap();
    let out = drdlab(tmp.path(), &["cut", "--edge", "path.dg"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("from 1 to 0"));
}

#[test]
fn verify_default_catalog_is_deterministic() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    let args = [
        "verify",
        "--all",
        "--default-catalog",
        "--seed",
        "1",
        "--report",
        "r.json",
    ];
    let first = drdlab(dir, &args);
    assert_eq!(code(&first), 0, "{}", stdout(&first));
    let report_a = fs::read_to_string(dir.join("r.json")).unwrap();
    let second = drdlab(dir, &args);
    let report_b = fs::read_to_string(dir.join("r.json")).unwrap();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(report_a, report_b);
    let json: serde_json::Value = serde_json::from_str(&report_a).unwrap();
    assert_eq!(json["seed"], 1);
    assert_eq!(json["summary"]["fail"], 0);
    assert!(json["catalog"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["hash"].as_str().unwrap().len() == 64));
    assert!(json["results"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r.get("timing_ms").is_none()));
}

#[test]
fn verify_seed_from_environment() {
    let tmp = TempDir::new().unwrap();
    gen(
        tmp.path(),
        &["--family", "dcycle", "--n", "5", "-o", "c5.dg"],
    );
    let out = Command::new(env!("CARGO_BIN_EXE_drdlab"))
        .current_dir(tmp.path())
        .env("DRDLAB_SEED", "42")
        .args(["verify", "--all", "c5.dg"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("seed=42"));
}

#[test]
fn verify_gamma_range() {
    let tmp = TempDir::new().unwrap();
    let out = drdlab(
        tmp.path(),
        &["verify", "--theorem", "gamma", "--n", "3..10"],
    );
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out)
            .lines()
            .filter(|l| l.starts_with("pass gamma-family"))
            .count(),
        8
    );
    assert_eq!(
        code(&drdlab(
            tmp.path(),
            &["verify", "--theorem", "gamma", "--n", "1..40"]
        )),
        2
    );
}

#[test]
fn verify_corrupted_block_cycle_fails_with_witness() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    gen(
        dir,
        &[
            "--family",
            "blockcycle",
            "--t",
            "3",
            "--rho",
            "2",
            "-o",
            "bc.dg",
        ],
    );
    let text = fs::read_to_string(dir.join("bc.dg")).unwrap();
    let g = drdlab::edgelist::parse(&text).unwrap();
    let (u, v) = g.edges()[0];
    let w = (0..g.n())
        .find(|&w| w != u && w != v && !g.has_edge(u, w))
        .unwrap();
    let edges: Vec<_> = g
        .edges()
        .into_iter()
        .map(|e| if e == (u, v) { (u, w) } else { e })
        .collect();
    let corrupted = drdlab::Digraph::from_edge_list(g.n(), &edges).unwrap();
    drdlab::edgelist::write_file(dir.join("corrupted.dg"), &corrupted, None).unwrap();

    let out = drdlab(
        dir,
        &[
            "verify",
            "--theorem",
            "drd",
            "corrupted.dg",
            "--report",
            "r.json",
        ],
    );
    assert_eq!(code(&out), 1);
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("r.json")).unwrap()).unwrap();
    let result = &json["results"][0];
    assert_eq!(result["verdict"], "fail");
    let witness: drdlab::harness::Witness =
        serde_json::from_value(result["witness"].clone()).unwrap();
    assert!(drdlab::harness::replay(&corrupted, &witness));
}

#[test]
fn verify_vertex_cut_alias_and_preconditions() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    gen(
        dir,
        &["--family", "srd", "--params", "8,3,2,1,1", "-o", "srd8"],
    );
    gen(dir, &["--family", "dcycle", "--n", "5", "-o", "c5.dg"]);
    assert_eq!(
        code(&drdlab(
            dir,
            &["verify", "--theorem", "figure1", "srd8/srd-8-3-2-1-1-0.dg"]
        )),
        0
    );
    assert_eq!(
        code(&drdlab(
            dir,
            &["verify", "--theorem", "vertex-cut", "c5.dg"]
        )),
        2
    );
    assert_eq!(code(&drdlab(dir, &["verify", "--all", "nothing.dg"])), 2);
    assert_eq!(code(&drdlab(dir, &["verify", "--all"])), 2);
}

#[test]
fn search_exit_codes() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    let out = drdlab(
        dir,
        &[
            "search",
            "--conjecture",
            "--exhaustive",
            "--max-n",
            "6",
            "--max-k",
            "2",
            "--out",
            "s",
        ],
    );
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("0 counterexample(s)"));
    assert!(dir.join("s/report.json").exists());
    assert_eq!(
        code(&drdlab(dir, &["search", "--conjecture", "--catalog"])),
        0
    );
    assert_eq!(
        code(&drdlab(
            dir,
            &["search", "--conjecture", "--exhaustive", "--max-n", "20"]
        )),
        2
    );
    assert_eq!(
        code(&drdlab(
            dir,
            &["search", "--conjecture", "--exhaustive", "--max-k", "4"]
        )),
        2
    );
}
