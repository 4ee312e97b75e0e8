use std::process::{Command, Output};

fn redword(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_redword"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eg_prints_both_tableaux() {
    let o = redword(&["eg", "4", "2", "1", "2", "3", "2", "4"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "P:\n  1 2 4\n  2 3\n  3\n  4\nQ:\n  1 3 7\n  2 6\n  4\n  5\n"
    );
}

#[test]
fn bump_and_inverse() {
    let o = redword(&["bump", "1", "2", "1", "--start", "1"]);
    assert_eq!(stdout(&o), "start 1 [1: shift] => 1 3 2\n");
    let o = redword(&["bump", "1", "3", "2", "--start", "1", "--inverse"]);
    assert_eq!(stdout(&o), "start 1 [1: 1->2] => 2 3 2\n");
}

#[test]
fn bad_letters_exit_nonzero_with_a_column() {
    let o = redword(&["eg", "1", "0", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 3"));
    let o = redword(&["eg", "1", "-2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_errors_exit_nonzero() {
    let o = redword(&["little", "1", "1", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("not_reduced"));
}

#[test]
fn enum_counts() {
    let o = redword(&["enum", "5", "4", "3", "2", "1", "--count"]);
    assert_eq!(stdout(&o), "768\n");
}

#[test]
fn render_formats() {
    let o = redword(&["render", "1", "2", "1", "--highlight", "2"]);
    let text = stdout(&o);
    assert!(text.contains('#'));
    assert_eq!(text.lines().next().unwrap().rsplit(' ').next(), Some("3"));
    let a = stdout(&redword(&["render", "1", "--format", "svg"]));
    let b = stdout(&redword(&["render", "1", "--format", "svg"]));
    assert_eq!(a, b);
    assert!(a.contains("id=\"crossing-1\""));
}

#[test]
fn verify_small_profile() {
    let o = redword(&["verify", "--n", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    let o = redword(&["verify", "--n", "3", "--json"]);
    let reports: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(reports
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["failures"] == serde_json::json!([])));
    assert_eq!(redword(&["verify", "--n", "9"]).status.code(), Some(2));
}
