use std::process::{Command, Output};

fn skewdyck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewdyck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = skewdyck(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn half_length_series() {
    assert_eq!(
        stdout(&["series", "--order", "9", "--half-length"]),
        "1 1 2 6 20 71 262 994 3852\n"
    );
}

#[test]
fn bivariate_row_five() {
    let text = stdout(&["bivariate", "--order", "7"]);
    assert_eq!(text.lines().nth(5), Some("5: 71 64 2"));
    let tsv = stdout(&["bivariate", "--order", "7", "--format", "tsv"]);
    assert_eq!(tsv.lines().nth(5), Some("5\t71\t64\t2"));
}

#[test]
fn count_at_t_one() {
    assert_eq!(stdout(&["count", "4", "0", "--t-eval", "one"]), "3\n");
    assert_eq!(stdout(&["count", "6", "0"]), "6 + 4t\n");
    assert_eq!(stdout(&["count", "6", "0", "--t-eval", "zero"]), "6\n");
    assert_eq!(stdout(&["count", "6", "2", "--t-eval", "1/2"]), "19/2\n");
}

#[test]
fn verify_passes() {
    let out = skewdyck(&["verify", "--order", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("PASS ")).count() >= 10);
    assert!(!text.contains("FAIL"));
}

#[test]
fn series_matches_level_zero() {
    for order in ["1", "7", "12"] {
        for half in [true, false] {
            let mut a = vec!["series", "--t-eval", "zero", "--order", order];
            let mut b = vec!["levels", "0", "--order", order];
            if half {
                a.push("--half-length");
                b.push("--half-length");
            }
            assert_eq!(stdout(&a), stdout(&b), "order {order} half {half}");
        }
    }
    assert_eq!(
        stdout(&[
            "series",
            "--t-eval",
            "track",
            "--order",
            "8",
            "--half-length",
            "--format",
            "json"
        ]),
        stdout(&[
            "levels",
            "0",
            "--t-eval",
            "track",
            "--order",
            "8",
            "--half-length",
            "--format",
            "json"
        ]),
    );
}

#[test]
fn json_schema() {
    let text = stdout(&[
        "series",
        "--order",
        "5",
        "--half-length",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["sequence"], serde_json::json!(["1", "1", "2", "6", "20"]));
    assert_eq!(v["variable"], "z(half)");
    assert_eq!(v["t_mode"], "zero");
    let text = stdout(&[
        "levels", "1", "--order", "4", "--format", "json", "--t-eval", "track",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["variable"], "z");
    assert_eq!(
        v["sequence"],
        serde_json::json!([["0"], ["1"], ["0"], ["2"]])
    );
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["bivariate", "--order", "12", "--format", "json"][..],
        &["asympt", "--format", "tsv"],
        &["verify", "--order", "10"],
        &["render", "UUUDRDUD"],
    ] {
        assert_eq!(skewdyck(args).stdout, skewdyck(args).stdout, "{args:?}");
    }
}

#[test]
fn asympt_default_rows_converge() {
    let text = stdout(&["asympt", "--format", "tsv"]);
    let ratios: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split('\t').nth(3).unwrap().parse().unwrap())
        .collect();
    assert_eq!(ratios.len(), 6);
    assert!(ratios
        .windows(2)
        .all(|w| (w[1] - 1.0).abs() < (w[0] - 1.0).abs()));
    assert!((ratios[5] - 1.0).abs() < 0.002);
}

#[test]
fn render_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.svg");
    let out = skewdyck(&["render", "UUDR", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg, stdout(&["render", "UUDR"]));
    assert!(svg.contains("stroke=\"red\""));
}

#[test]
fn flag_errors_exit_two() {
    for args in [
        &["series", "--t-eval", "often"][..],
        &["series", "--format", "xml"],
        &["series", "--order", "0"],
        &["levels", "3", "--half-length"],
        &["bivariate", "--t-eval", "one"],
        &["render", "UR"],
        &["render", "UXD"],
        &["nonsense"],
    ] {
        let out = skewdyck(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    assert!(stdout(&["--help"]).contains("bivariate"));
}
