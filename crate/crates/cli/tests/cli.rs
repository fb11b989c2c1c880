use std::process::{Command, Output};

fn tonal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tonal"))
        .args(args)
        .output()
        .expect("spawn tonal")
}

fn stdout(args: &[&str]) -> String {
    let out = tonal(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn convert_day_number() {
    let text = stdout(&["convert", "197"]);
    assert!(text.contains("name 2-Movement (2,17)"));
    assert!(text.contains("layout pair 4, row 4, col 2"));
}

#[test]
fn convert_name_and_alias_agree() {
    let a: serde_json::Value =
        serde_json::from_str(&stdout(&["convert", "4-Deer", "--format", "json"])).unwrap();
    let b: serde_json::Value =
        serde_json::from_str(&stdout(&["convert", "4-Mazatl", "--format", "json"])).unwrap();
    assert_eq!(a, b);
    assert_eq!(a["day"], 147);
    assert_eq!(
        (a["pair"].as_u64(), a["row"].as_u64(), a["col"].as_u64()),
        (Some(4), Some(3), Some(4))
    );
}

#[test]
fn last_day_is_thirteen_flower() {
    assert!(stdout(&["convert", "260"]).contains("name 13-Flower"));
    assert!(stdout(&["convert", "13-Flower"]).starts_with("day 260\n"));
}

#[test]
fn oriented_orbit_restricted_to_signs() {
    let text = stdout(&[
        "orbit",
        "--a",
        "0",
        "--b",
        "4",
        "--seed",
        "1-Crocodile",
        "--restrict",
        "sign",
    ]);
    assert!(text.contains("length 5"));
    assert!(text.trim_end().ends_with("1,5,9,13,17"));
}

#[test]
fn tables_are_deterministic() {
    for name in ["trecenas", "veintenas", "orientations", "sigma", "layout"] {
        for format in ["text", "json", "csv"] {
            let args = ["table", name, "--format", format];
            assert_eq!(stdout(&args), stdout(&args), "{name} {format}");
        }
    }
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["convert", "0"][..],
        &["convert", "261"],
        &["convert", "14-Deer"],
        &["convert", "4-Dragon"],
        &["table", "months"],
        &["orbit", "--a", "13", "--b", "0", "--seed", "1-Crocodile"],
        &["orbit", "--a", "0", "--b", "20", "--seed", "1-Crocodile"],
        &[],
    ] {
        assert_eq!(tonal(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn verify_exits_zero() {
    let out = tonal(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("all 15 suites passed"));
}
