use std::process::{Command, Output};

fn rhg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rhg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn terminals_lists_det_positions() {
    let o = rhg(&["terminals", "--Q", "7,2,1,10"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| !l.starts_with("count")).count(), 68);
    assert!(out.ends_with("count=68 det=68\n"));
}

#[test]
fn solve_formats() {
    let o = rhg(&["solve", "rw:1,1,0,1", "--window", "30", "--format", "positions"]);
    let first: Vec<_> = stdout(&o).lines().take(7).map(String::from).collect();
    assert_eq!(first, ["0,0", "1,3", "2,3", "3,8", "4,11", "5,8", "6,16"]);

    let dir = tempfile::tempdir().unwrap();
    let bin = dir.path().join("t.bin");
    let o = rhg(&["solve", "wythoff", "--window", "9", "--format", "bin", "--out", bin.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(&std::fs::read(&bin).unwrap()[..4], b"RHGO");

    let o = rhg(&["solve", "nim", "--window", "2"]);
    assert!(stdout(&o).starts_with("X,Y,outcome\n0,0,P\n0,1,N\n"));
}

#[test]
fn json_game_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    std::fs::write(
        &path,
        r#"{"Q":[1,1,0,1],"region":"BQ","moveKind":"qtransformed","finite":[],"rays":[[1,0],[0,1],[1,1]]}"#,
    )
    .unwrap();
    let o = rhg(&["compare", path.to_str().unwrap(), "rw:1,1,0,1", "--window", "60"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_and_compare_exit_codes() {
    let o = rhg(&["verify", "--Q", "7,2,1,10", "--moves", "wythoff", "--window", "150"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS"));

    let o = rhg(&["compare", "ext-b", "rn:7,2,1,10", "--window", "50"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(4,4)"));
}

#[test]
fn error_exit_codes() {
    assert_eq!(rhg(&["terminals", "--Q", "1,1,1,1"]).status.code(), Some(2));
    assert_eq!(rhg(&["solve", "no-such-game", "--window", "5"]).status.code(), Some(2));
    assert_eq!(rhg(&["solve", "ext-a", "--window", "5", "--fast"]).status.code(), Some(0));
    assert_eq!(rhg(&["verify", "--Q", "2,0,0,1", "--moves", "random:k=0", "--window", "5"]).status.code(), Some(2));
    assert_eq!(rhg(&["convergents", "nim", "--window", "5"]).status.code(), Some(4));
    let o = Command::new(env!("CARGO_BIN_EXE_rhg"))
        .args(["solve", "nim", "--window", "5000"])
        .env("RHG_MEM_CAP_MB", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("capacity"));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("big.ppm");
    let o = rhg(&["render", "nim", "--window", "100000", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!out.exists());
}

#[test]
fn convergents_report() {
    let o = rhg(&["convergents", "rw:1,1,0,1", "--window", "20000", "--closed-form"]);
    let out = stdout(&o);
    assert!(out.contains("clusters=2"), "{out}");
    assert!(out.contains("estimate=1.618"));
    assert!(out.contains("estimate=2.618"));
    assert!(out.contains("theory rn=2"));
}

#[test]
fn render_and_figures() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("w.svg");
    assert!(rhg(&["render", "wythoff", "--window", "20", "--out", svg.to_str().unwrap()]).status.success());
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    let o = rhg(&["figures", "--out-dir", dir.path().to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 9);
    assert!(dir.path().join("ext-c.ppm").exists());
}
