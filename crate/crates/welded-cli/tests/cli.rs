//! End-to-end tests of the command-line interface: exit codes, output
//! stability, format handling and the fixture override.

use std::process::{Command, Output};

fn welded(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_welded"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn invariants_on_trivial_is_all_zero() {
    let out = welded(&["invariants", "--text", "n=2\n1:\n2:\n", "--degree", "1"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"degree\":1,\"entries\":{\"LINK:1,2\":0,\"LINK:2,1\":0}}\n"
    );
    let out = welded(&[
        "invariants",
        "--text",
        "n=2\n1:\n2:\n",
        "--degree",
        "3",
        "--out",
        "text",
    ]);
    assert!(out.status.success());
    for line in stdout(&out).lines() {
        assert!(line.ends_with(" = 0"), "nonzero entry on trivial: {line}");
    }
}

#[test]
fn invariants_text_output() {
    let out = welded(&[
        "invariants",
        "--text",
        "n=2\n1: O a +\n2: U a +\n",
        "--degree",
        "1",
        "--out",
        "text",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "LINK:1,2 = 1\nLINK:2,1 = 0\n");
}

#[test]
fn outputs_are_byte_stable() {
    let args = [
        "invariants",
        "--text",
        "Z[1,2]^1 E[2]^-1",
        "--format",
        "word",
        "--degree",
        "2",
    ];
    let a = welded(&args);
    let b = welded(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn wtree_format_accepted() {
    let out = welded(&[
        "invariants",
        "--text",
        "strands 2 ; [1@1/2 (2@1/3)]",
        "--format",
        "wtree",
        "--degree",
        "1",
        "--out",
        "text",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("LINK:1,2 = 1"));
}

#[test]
fn closure_prints_gauss_code_and_alphas() {
    let out = welded(&[
        "closure", "--text", "A[1,2]^1", "--format", "word", "--list", "1,-2", "--kmax", "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n=1\n"));
    assert!(text.contains("alpha_2 = 1"));
}

#[test]
fn normal_form_verify_and_conjecture_flag() {
    let out = welded(&[
        "normal-form",
        "--text",
        "TO1^1",
        "--format",
        "word",
        "--degree",
        "3",
        "--verify",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("word: TO1^1"));
    assert!(text.contains("conjecture-dependent: yes"));
    assert!(text.contains("round-trip: ok"));
}

#[test]
fn ft_check_pass_and_fail_exit_codes() {
    let ok = welded(&[
        "ft-check",
        "--text",
        "n=2\n1: O a + O b -\n2: U a + U b -\n",
        "--invariant",
        "LINK:1,2",
        "--degree",
        "1",
    ]);
    assert!(ok.status.success());
    assert!(stdout(&ok).contains("\"max_violation\":0"));

    let fail = welded(&[
        "ft-check",
        "--text",
        "n=2\n1: O a +\n2: U a +\n",
        "--invariant",
        "LINK:1,2",
        "--degree",
        "0",
    ]);
    assert_eq!(fail.status.code(), Some(3));
    assert!(stdout(&fail).contains("\"max_violation\":1"));
}

#[test]
fn relations_and_tables_and_conjecture_pass() {
    for cmd in ["relations", "conjecture", "tables"] {
        let out = welded(&[cmd]);
        assert!(out.status.success(), "{cmd} failed:\n{}", stdout(&out));
    }
    assert!(stdout(&welded(&["relations"])).lines().count() >= 12);
}

#[test]
fn fixture_env_override() {
    let dir = std::env::temp_dir().join("welded-fixtures-test");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("section4_pairs.txt"), "9 9 9 9 9\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_welded"))
        .arg("tables")
        .env("WELDEDCALC_FIXTURES", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("MISMATCH"));
}

#[test]
fn exit_codes_for_usage_and_parse_errors() {
    // usage: missing input
    let out = welded(&["invariants", "--degree", "2"]);
    assert_eq!(out.status.code(), Some(1));
    // usage: unknown flag
    let out = welded(&["invariants", "--bogus"]);
    assert_eq!(out.status.code(), Some(1));
    // parse error in the diagram text
    let out = welded(&["invariants", "--text", "n=2\n1: O a +\n2: U a -\n"]);
    assert_eq!(out.status.code(), Some(2));
    // unsupported degree is a usage-class error
    let out = welded(&["invariants", "--text", "n=2\n1:\n2:\n", "--degree", "7"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn stdin_input() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_welded"))
        .args([
            "invariants",
            "--input",
            "-",
            "--degree",
            "1",
            "--out",
            "text",
        ])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"n=2\n1: O a -\n2: U a -\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("LINK:1,2 = -1"));
}
