use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srg-paths")).current_dir(dir).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn gen_johnson_writes_graph6_and_params() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["gen", "johnson2", "6", "-o", "j62.g6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("(15,8,4,4)"));
    let text = fs::read_to_string(dir.path().join("j62.g6")).unwrap();
    let g = srg_paths::formats::parse_graph6(text.trim()).unwrap();
    assert_eq!(g, srg_paths::families::named_family(srg_paths::families::FamilyKind::Johnson2, 6).unwrap());
}

#[test]
fn gen_bose_nine_is_multipartite() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(dir.path(), &["gen", "sts-block", "--bose", "9", "-o", "s9.g6"])), 0);
    let o = run(dir.path(), &["check", "s9.g6"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("K_{4x3}"), "{out}");
    assert!(out.contains("primitive: false"));
}

#[test]
fn gen_bad_order_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["gen", "johnson2", "1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad order"));
}

#[test]
fn find_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    run(d, &["gen", "petersen", "-o", "pet.g6"]);
    run(d, &["gen", "johnson2", "5", "-o", "j5.g6"]);
    assert_eq!(code(&run(d, &["find", "pet.g6", "-p", "P5"])), 0);
    assert_eq!(code(&run(d, &["find", "pet.g6", "-p", "COP5"])), 1);
    assert_eq!(code(&run(d, &["find", "j5.g6", "-p", "P5"])), 1);
    fs::write(d.join("bad.g6"), "garbage!!\n").unwrap();
    assert!(code(&run(d, &["find", "bad.g6", "-p", "P4"])) >= 2);
    assert!(code(&run(d, &["find", "missing.g6", "-p", "P4"])) >= 2);
    assert!(code(&run(d, &["find", "pet.g6", "-p", "P9"])) >= 2);
}

#[test]
fn find_both_modes_agree() {
    let dir = tempfile::tempdir().unwrap();
    for (family, pattern) in [("sts13:1", "P5"), ("latin:7", "COP5"), ("kneser2:6", "P5"), ("petersen", "P4")] {
        let o = run(dir.path(), &["find", "--family", family, "-p", pattern, "--mode", "both"]);
        assert_eq!(code(&o), 0, "{family} {pattern}: {}", stdout(&o));
        assert!(stdout(&o).contains("constructive:"));
    }
}

#[test]
fn witness_prints_published_path() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["witness", "sts13:2", "-p", "P5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("[1 2 3, 1 4 5, 4 6 7, 6 8 9, 8 10 11]"));
    assert_eq!(code(&run(dir.path(), &["witness", "johnson2:5", "-p", "P5"])), 1);
}

#[test]
fn survey_manifest_and_empty() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("empty.txt"), "# nothing\n").unwrap();
    let o = run(d, &["survey", "empty.txt"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 1);

    fs::write(d.join("m.txt"), "c5 graph6 Dhc\nj6 family johnson2:6\n").unwrap();
    let o = run(d, &["survey", "m.txt", "--no-timing"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("c5,5,2,0,1,true,P4,true,"));
    assert!(out.contains("c5,5,2,0,1,true,P5,false,"));

    fs::write(d.join("broken.txt"), "x graph6-file nope.g6\nc5 graph6 Dhc\n").unwrap();
    let o = run(d, &["survey", "broken.txt"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("c5,5,"), "run continues past a failed entry");
}

#[test]
fn verify_paper_default_only_and_fault() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let a = run(d, &["verify-paper"]);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
    let b = run(d, &["verify-paper"]);
    assert_eq!(a.stdout, b.stdout);

    let o = run(d, &["verify-paper", "--only", "johnson"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().skip(1).all(|l| l.starts_with("johnson,")));

    let o = run(d, &["verify-paper", "--inject-fault"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).lines().any(|l| l.contains("Petersen") && l.ends_with(",fail")));
}

#[test]
fn thread_cap_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_srg-paths"))
        .current_dir(dir.path())
        .env("SRG_PATHS_THREADS", "1")
        .args(["find", "--family", "hamming2:5", "-p", "COP5"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let o = Command::new(env!("CARGO_BIN_EXE_srg-paths"))
        .env("SRG_PATHS_THREADS", "many")
        .args(["find", "--family", "hamming2:5", "-p", "COP5"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}
