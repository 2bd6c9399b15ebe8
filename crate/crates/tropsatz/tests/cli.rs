use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;
use tropsatz::formats::{read_json, CertificateFile, FactsFile, MacaulayFile, SystemFile};
use tropsatz_core::nullsatz::verify_primary;

fn tropsatz(args: &[&str]) -> Output {
    tropsatz_logged(args, "quiet")
}

fn tropsatz_logged(args: &[&str], level: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropsatz")).args(args).env("TROPSATZ_LOG", level).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

const INTRO: &str = r#"{"semiring":"R","kind":"tropical","num_vars":1,"polynomials":[
  {"monomials":[{"coef":"0","exp":[0]},{"coef":"0","exp":[1]}]},
  {"monomials":[{"coef":"0","exp":[0]},{"coef":"1","exp":[1]}]}]}"#;

const SINGLE: &str = r#"{"semiring":"R","kind":"tropical","num_vars":1,"polynomials":[
  {"monomials":[{"coef":"0","exp":[0]},{"coef":"0","exp":[1]}]}]}"#;

#[test]
fn solve_intro_writes_a_verifying_certificate() {
    let dir = TempDir::new().unwrap();
    let sys = write(dir.path(), "intro.json", INTRO);
    let cert = dir.path().join("cert.json");
    let o = tropsatz(&["solve", sys.to_str().unwrap(), "--certificate", cert.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("UNSOLVABLE"));
    let file: CertificateFile = read_json(&cert).unwrap();
    let (system, _) = read_json::<SystemFile>(&sys).unwrap().to_system().unwrap();
    assert!(verify_primary(&system, &file.to_certificate().unwrap().unwrap()));
    let o = tropsatz(&["verify", sys.to_str().unwrap(), cert.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "VALID");
}

#[test]
fn solve_single_and_check_root() {
    let dir = TempDir::new().unwrap();
    let sys = write(dir.path(), "single.json", SINGLE);
    let s = sys.to_str().unwrap();
    let o = tropsatz(&["solve", s]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "SOLVABLE\n0\n");
    assert_eq!(code(&tropsatz(&["check-root", s, "--point", "0"])), 0);
    assert_eq!(code(&tropsatz(&["check-root", s, "--point", "-1"])), 1);
    assert_eq!(code(&tropsatz(&["check-root", s, "--point", "0,1"])), 2);
    let o = tropsatz(&["solve", s, "--semiring", "Rinf"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn oracle_and_solve_agree_on_lmp() {
    let dir = TempDir::new().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(code(&tropsatz(&["gen", "lmp", "2", "2", "--out", d])), 0);
    let facts: FactsFile = read_json(&dir.path().join("lmp_2_2.facts.json")).unwrap();
    assert_eq!(facts.has_root, Some(false));
    assert_eq!(facts.witness, ["0", "0", "-1"]);
    for file in [facts.system.clone(), facts.minplus_system.clone().unwrap()] {
        let p = dir.path().join(file);
        let p = p.to_str().unwrap();
        assert_eq!(code(&tropsatz(&["oracle", p])), 1);
        assert_eq!(code(&tropsatz(&["solve", p])), 1);
    }
}

#[test]
fn macaulay_output() {
    let dir = TempDir::new().unwrap();
    let sys = write(dir.path(), "intro.json", INTRO);
    let out = dir.path().join("m.json");
    let o = tropsatz(&["macaulay", sys.to_str().unwrap(), "--bound", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("N = 6:"));
    let MacaulayFile::Single(m) = read_json(&out).unwrap() else { panic!("expected one matrix") };
    assert_eq!((m.rows, m.cols), (12, 7));
    assert_eq!(m.legend.as_ref().unwrap()[0], vec![0]);
    let o = tropsatz(&["macaulay", sys.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn linsolve_and_duality() {
    let dir = TempDir::new().unwrap();
    // Rows (0, 0) and (0, 1): no solution with both columns finite.
    let a = write(dir.path(), "a.json", r#"{"rows":2,"cols":2,"entries":[[0,0,"0"],[0,1,"0"],[1,0,"0"],[1,1,"1"]]}"#);
    let a = a.to_str().unwrap();
    let o = tropsatz(&["linsolve", a, "--finite", "0,1"]);
    assert_eq!((code(&o), stdout(&o).trim().to_string()), (1, "NONE".into()));
    let o = tropsatz(&["duality", a, "--finite", "0,1"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("DUAL"));
    // x0 <= x1 + 1 and x1 <= x0.
    let l = write(dir.path(), "l.json", r#"{"rows":2,"cols":2,"entries":[[0,0,"0"],[1,1,"0"]]}"#);
    let r = write(dir.path(), "r.json", r#"{"rows":2,"cols":2,"entries":[[0,1,"1"],[1,0,"0"]]}"#);
    let (l, r) = (l.to_str().unwrap(), r.to_str().unwrap());
    let o = tropsatz(&["linsolve", l, "--minplus", r, "--finite", "0,1"]);
    assert_eq!(code(&o), 0);
    let o = tropsatz(&["linsolve", l, "--minplus", r, "--strict", "--finite", "0"]);
    assert_eq!(code(&o), 0);
    // x0 <= x1 <= x0 has solutions, its strict version none.
    let tight = write(dir.path(), "t.json", r#"{"rows":2,"cols":2,"entries":[[0,1,"0"],[1,0,"0"]]}"#);
    let tight = tight.to_str().unwrap();
    assert_eq!(code(&tropsatz(&["linsolve", l, "--minplus", tight, "--eq", "--finite", "0,1"])), 0);
    let o = tropsatz(&["linsolve", l, "--minplus", tight, "--strict", "--finite", "0"]);
    assert_eq!((code(&o), stdout(&o).trim().to_string()), (1, "NONE".into()));
    let o = tropsatz(&["duality", l, "--minplus", r, "--finite", "0,1"]);
    assert!(stdout(&o).starts_with("PRIMAL"));
}

#[test]
fn reduce_round() {
    let dir = TempDir::new().unwrap();
    let sys = write(dir.path(), "single.json", SINGLE);
    let out = dir.path().join("mp.json");
    assert_eq!(
        code(&tropsatz(&["reduce", sys.to_str().unwrap(), "--to", "minplus", "--out", out.to_str().unwrap()])),
        0
    );
    let mp: SystemFile = read_json(&out).unwrap();
    assert_eq!(mp.polynomials.len(), 2);
    assert_eq!(code(&tropsatz(&["check-root", out.to_str().unwrap(), "--point", "0"])), 0);
    let back = dir.path().join("t.json");
    assert_eq!(
        code(&tropsatz(&["reduce", out.to_str().unwrap(), "--to", "tropical", "--out", back.to_str().unwrap()])),
        0
    );
    assert_eq!(code(&tropsatz(&["check-root", back.to_str().unwrap(), "--point", "0,0"])), 0);
    assert_eq!(code(&tropsatz(&["check-root", back.to_str().unwrap(), "--point", "0,1"])), 1);
    assert_eq!(code(&tropsatz(&["reduce", sys.to_str().unwrap(), "--to", "tropical"])), 2);
}

#[test]
fn game_output() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "g.json", r#"{"rows":1,"cols":1,"row_edges":[[0,0,"0"]],"col_edges":[[0,0,"1"]]}"#);
    let o = tropsatz(&["game", g.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "r0\tcolumn\t0\nc0\tcolumn\t0\n");
}

#[test]
fn errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"semiring":"R","kind":"tropical","num_vars":1,"polynomials":[{"monomials":[{"coef":"x","exp":[0]}]}]}"#,
    );
    let o = tropsatz(&["solve", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(code(&tropsatz(&["solve", "/nonexistent.json"])), 2);
    assert_eq!(code(&tropsatz(&["frobnicate"])), 2);
    assert_eq!(code(&tropsatz(&["gen", "lmp", "1", "--out", dir.path().to_str().unwrap()])), 2);
}

#[test]
fn generated_fixtures_round_trip() {
    let dir = TempDir::new().unwrap();
    let d = dir.path().to_str().unwrap();
    for args in [&["lmp", "3", "2"][..], &["inf_family", "2", "2"], &["stepped_pyramid", "6"], &["stripes", "4"]] {
        let mut full = vec!["gen"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--out", d]);
        assert_eq!(code(&tropsatz(&full)), 0, "{args:?}");
    }
    for entry in fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_str().unwrap().to_string();
        if name.ends_with(".facts.json") {
            continue;
        }
        let file: SystemFile = read_json(&path).unwrap();
        let (sys, semiring) = file.to_system().unwrap();
        assert_eq!(SystemFile::from_system(&sys, semiring), file, "{name}");
    }
}

#[test]
fn log_levels() {
    let dir = TempDir::new().unwrap();
    let sys = write(dir.path(), "single.json", SINGLE);
    let s = sys.to_str().unwrap();
    assert!(tropsatz_logged(&["solve", s], "quiet").stderr.is_empty());
    let o = tropsatz_logged(&["solve", s], "info");
    assert!(String::from_utf8_lossy(&o.stderr).contains("deciding 1 polynomials"));
    assert_eq!(stdout(&o), "SOLVABLE\n0\n");
}
