use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubic-dga")).args(args).output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_theorem_on_k4_file() {
    let g = fixture("k4.json");
    let e = fixture("k4_embedding.json");
    let o = cli(&["verify-theorem", "--graph", g.to_str().unwrap(), "--embedding", e.to_str().unwrap(), "--field", "fp:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("24 = 24 × 1"));
}

#[test]
fn d2check_on_transcribed_garden() {
    let g = fixture("g1.json");
    let gd = fixture("g1_garden.json");
    let o = cli(&["d2check", "--graph", g.to_str().unwrap(), "--garden", gd.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "∂² = 0 over ℤ\n");
}

#[test]
fn malformed_graph_exits_two() {
    let dir = std::env::temp_dir().join(format!("cubic-dga-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"vertices": [[0, 1, 2]], "pairing": [[0, 1]]}"#).unwrap();
    let o = cli(&["faces", "--graph", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let missing = cli(&["faces", "--graph", dir.join("absent.json").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_two() {
    assert_eq!(cli(&["faces", "--bogus"]).status.code(), Some(2));
    assert_eq!(cli(&["augcount", "--fixture", "k4", "--field", "fp:4"]).status.code(), Some(2));
}

#[test]
fn failed_verification_exits_one() {
    let o = cli(&["d2check", "--fixture", "prism4m"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(cli(&["d2check", "--fixture", "prism4m", "--field", "fp:2"]).status.code(), Some(0));
}

#[test]
fn differential_prints_published_dy() {
    let o = cli(&["differential", "--fixture", "g1"]);
    assert!(stdout(&o).contains("d(y) = -e1^-2*f1 + e3^-1*e4^-1*f2 - e6^-2*f3\n"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["moves-check", "--fixture", "g2", "--seed", "9", "--format", "json"][..],
        &["tversal", "--fixture", "cube", "--root", "3"][..],
        &["color-from-aug", "--fixture", "prism", "--field", "gf:2,2", "--index", "2"][..],
    ] {
        let a = cli(args);
        let b = cli(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn json_reports_parse_as_objects() {
    let o = cli(&["mu-identity", "--fixture", "prism", "--field", "fp:3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.trim_start().starts_with('{') && s.contains("\"product_identity\""));
}

#[test]
fn fixtures_dump_includes_graph() {
    let o = cli(&["fixtures", "dump", "g2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# graph"));
    assert_eq!(cli(&["fixtures", "dump", "nope"]).status.code(), Some(2));
}
