use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn ratxs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratxs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

#[test]
fn lamplighter_fixture_is_a_cross_section() {
    let lang = fixture("lamplighter.json");
    let o = ratxs(&[
        "xsection",
        "check",
        "--lang",
        lang.to_str().unwrap(),
        "--group",
        "wr(C2,Z)",
        "--cap",
        "14",
        "--radius",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&o);
    assert_eq!(r["injective"], true);
    assert_eq!(r["words"], 6730);
    assert_eq!(r["uncovered"].as_array().unwrap().len(), 0);
}

#[test]
fn non_injective_language_exits_one() {
    let o = ratxs(&[
        "xsection", "check", "--regex", "t*T*", "--group", "Z", "--cap", "4", "--radius", "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(json(&o)["collision"].is_array());
}

#[test]
fn crossing_number_of_h3() {
    let o = ratxs(&["houghton", "crossing", "--element", "h3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "3");
    let o = ratxs(&["houghton", "crossing", "--element", "(1 -1)(2 -2); shift=0"]);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn membership_answers() {
    let o = ratxs(&[
        "houghton", "membership", "--element", "h13", "--sym", "0:3", "--m", "2", "--depth", "8",
    ]);
    assert!(o.status.success());
    assert_eq!(json(&o)["answer"], "no_within_bounds");
    let o = ratxs(&[
        "houghton", "membership", "--element", "atatatTTT", "--s", "(1 2)", "--m", "1",
    ]);
    assert_eq!(json(&o)["witness"], "((1 2)t)((1 2)t)((1 2)T)(eT)");
}

#[test]
fn grigorchuk_quotient_and_sections() {
    let o = ratxs(&["grig", "quotient-size", "--n", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "128");
    let o = ratxs(&["grig", "section", "--word", "b", "--vertex", "10"]);
    assert_eq!(json(&o)["section"], "a");
    let o = ratxs(&["grig", "relators", "--i", "1"]);
    assert!(o.status.success());
}

#[test]
fn capacity_and_usage_exit_two() {
    let o = ratxs(&["grig", "quotient-size", "--n", "4", "--cap", "100"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ratxs(&["order", "contains", "--cone", "nonsense", "--word", "t"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ratxs(&["houghton"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dot_output_matches_golden_files() {
    for name in ["integers", "lamplighter"] {
        let lang = fixture(&format!("{name}.json"));
        let o = ratxs(&["automaton", "dot", "--lang", lang.to_str().unwrap()]);
        let golden = std::fs::read_to_string(fixture(&format!("{name}.dot"))).unwrap();
        assert_eq!(stdout(&o), golden, "{name}");
    }
}

#[test]
fn json_round_trips() {
    for name in ["integers", "lamplighter"] {
        let path = fixture(&format!("{name}.json"));
        let src = std::fs::read_to_string(&path).unwrap();
        let o = ratxs(&["automaton", "trim", "--lang", path.to_str().unwrap()]);
        assert_eq!(stdout(&o), src, "{name}");
    }
}

#[test]
fn built_wreath_section_matches_fixture() {
    let dir = std::env::temp_dir().join(format!("ratxs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let built = dir.join("built.json");
    let o = ratxs(&["xsection", "build-wreath"]);
    assert!(o.status.success());
    std::fs::write(&built, &o.stdout).unwrap();
    let hand = fixture("lamplighter.json");
    let o = ratxs(&[
        "automaton",
        "combine",
        "--op",
        "difference",
        "--lang",
        built.to_str().unwrap(),
        "--other",
        hand.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let diff = dir.join("diff.json");
    std::fs::write(&diff, &o.stdout).unwrap();
    let o = ratxs(&["automaton", "enumerate", "--lang", diff.to_str().unwrap(), "--cap", "10"]);
    assert_eq!(json(&o), serde_json::json!([]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn classify_reports_growth() {
    let o = ratxs(&["automaton", "classify", "--regex", "(a|b)*"]);
    assert_eq!(json(&o)["class"], "exponential");
    let o = ratxs(&["automaton", "classify", "--regex", "a*b*"]);
    assert_eq!(json(&o)["class"], "polynomial_bounded");
}

#[test]
fn verify_suite_passes() {
    let o = ratxs(&["verify", "suite", "--radius", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(json(&o).as_array().unwrap().len() >= 10);
}
