use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_absentseq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = run(args, stdin.as_bytes());
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str], stdin: &str) -> i32 {
    run(args, stdin.as_bytes()).status.code().unwrap()
}

#[test]
fn arches_and_universality() {
    assert_eq!(ok(&["arches"], "1121332211322"), "11213|3221|132|2\niota=3\n");
    assert_eq!(ok(&["arches"], "1223313\n"), "1223|313\niota=1\n");
    assert_eq!(ok(&["universality"], "1121332211322"), "3\n");
    assert_eq!(ok(&["--alphabet", "ints", "arches"], "7 9 7 9"), "7 9|7 9|\niota=2\n");
}

#[test]
fn counts_and_longest() {
    assert_eq!(ok(&["sas", "--count"], "1223313"), "1\n");
    assert_eq!(ok(&["mas", "--count"], "11211111"), "4\n");
    assert_eq!(ok(&["longest-mas"], "11121222"), "11112222\n");
    assert_eq!(ok(&["longest-mas", "--length-only"], "11121222"), "8\n");
}

#[test]
fn listings() {
    assert_eq!(ok(&["sas"], "1223313"), "32\n");
    let mut all: Vec<String> = ok(&["mas"], "11211111").lines().map(String::from).collect();
    all.sort();
    assert_eq!(all, vec!["11111111", "1112", "2111111", "22"]);
    let mut sk: Vec<String> = ok(&["mas", "--engine", "skeleton"], "11211111").lines().map(String::from).collect();
    sk.sort();
    assert_eq!(sk, all);
    assert_eq!(ok(&["mas", "--limit", "2"], "11211111").lines().count(), 2);
    assert_eq!(ok(&["--alphabet", "ints", "sas"], "10 20 10"), "20 20\n");
}

#[test]
fn checks() {
    assert_eq!(ok(&["check", "--kind", "sas", "--pattern", "32"], "1223313"), "true\n");
    assert_eq!(ok(&["check", "--kind", "sas", "--pattern", "33"], "1223313"), "false\n");
    assert_eq!(ok(&["check", "--kind", "mas", "--pattern", "1112"], "11211111"), "true\n");
    assert_eq!(ok(&["check", "--kind", "mas", "--pattern", "212"], "11211111"), "false\n");
    assert_eq!(ok(&["check", "--kind", "subsequence", "--pattern", "211"], "1121332211322"), "true\n");
    assert_eq!(ok(&["check", "--kind", "mas-prefix", "--pattern", "111", "--verify"], "11211111"), "true\n");
}

#[test]
fn replay_is_byte_identical() {
    let words = ["1121332211322", "1223313", "11211111", "abcacbbca", "aaaa", "x"];
    for w in words {
        for (cmd, engine) in [("sas", "skeleton"), ("mas", "direct"), ("mas", "skeleton")] {
            let plain = ok(&[cmd, "--engine", engine], w);
            let records = ok(&[cmd, "--engine", engine, "--incremental"], w);
            assert!(records.starts_with("v=1\n"));
            assert_eq!(ok(&["replay"], &records), plain, "{cmd} {engine} on {w}");
            let structured = ok(&["--format", "structured", cmd, "--engine", engine], w);
            assert_eq!(ok(&["replay"], &structured), plain, "{cmd} {engine} on {w}");
        }
    }
    let plain = ok(&["--alphabet", "ints", "mas"], "10 7 10 300 7");
    let records = ok(&["--alphabet", "ints", "mas", "--incremental"], "10 7 10 300 7");
    assert_eq!(ok(&["replay"], &records), plain);
}

#[test]
fn verify_passes_on_small_words() {
    for w in ["1121332211322", "1223313", "11211111", "abcacbbca", "2"] {
        for args in [
            vec!["sas"],
            vec!["sas", "--count"],
            vec!["sas", "--incremental"],
            vec!["mas"],
            vec!["mas", "--count"],
            vec!["mas", "--engine", "skeleton", "--incremental"],
            vec!["mas", "--limit", "3"],
            vec!["longest-mas"],
            vec!["arches"],
        ] {
            let mut a = vec!["--verify"];
            a.extend(args);
            assert_eq!(code(&a, w), 0, "{a:?} on {w}");
        }
    }
    // too long for the checker: answer anyway and warn
    let long = "12".repeat(40);
    let out = run(&["--verify", "mas", "--count"], long.as_bytes());
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("skipped"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["--help"], ""), 0);
    assert_eq!(code(&["--version"], ""), 0);
    assert_eq!(code(&["frobnicate"], "12"), 1);
    assert_eq!(code(&["sas", "--count", "--limit", "2"], "12"), 1);
    assert_eq!(code(&["check", "--kind", "nope", "--pattern", "1"], "12"), 1);
    assert_eq!(code(&["sas"], ""), 2);
    assert_eq!(code(&["--alphabet", "ints", "sas"], "1 x"), 2);
    assert_eq!(code(&["--alphabet", "ints", "sas"], "1 0"), 2);
    assert_eq!(code(&["check", "--kind", "mas", "--pattern", "9"], "12"), 2);
    assert_eq!(code(&["sas", "/nonexistent/file"], ""), 2);
    assert_eq!(code(&["replay"], "not records"), 2);
    assert_eq!(code(&["replay"], "v=1\n{\"type\":\"init\",\"letters\":[1]}\n"), 2);
}

#[test]
fn replay_rejects_forged_segments() {
    let records = ok(&["mas", "--engine", "skeleton", "--incremental"], "1121332211322");
    let header = records.lines().nth(1).unwrap();
    let forged = format!("v=1\n{header}\n{{\"type\":\"init\",\"letters\":[1]}}\n{{\"type\":\"edit\",\"keep\":0,\"append\":[{{\"path\":[\"13:12\",\"1:0\"]}}]}}\n");
    assert_eq!(code(&["replay"], &forged), 2);
    let forged = format!(
        "v=1\n{header}\n{{\"type\":\"init\",\"letters\":[1]}}\n{{\"type\":\"edit\",\"keep\":5,\"append\":[]}}\n"
    );
    assert_eq!(code(&["replay"], &forged), 2);
}

#[test]
fn reads_files() {
    let dir = std::env::temp_dir().join(format!("absentseq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("w.txt");
    std::fs::write(&p, "1223313\n").unwrap();
    assert_eq!(ok(&["sas", p.to_str().unwrap()], ""), "32\n");
    std::fs::remove_dir_all(&dir).unwrap();
}
