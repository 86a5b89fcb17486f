use std::process::{Command, Output};

use g2clasp::VerifyReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2clasp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn report(o: &Output) -> VerifyReport {
    serde_json::from_slice(&o.stdout).expect("valid report json")
}

#[test]
fn verify_all_numeric_json() {
    let o = run(&["verify", "all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = report(&o);
    assert_eq!(r.schema_version, 1);
    assert_eq!(r.summary.total, 22 + 1 + 12 + 1);
    assert_eq!(r.summary.failed, 0);
    assert_eq!(r.summary.seed, Some(1));
    assert!(r.results.iter().all(|c| c.probes.len() == 5 && c.elapsed_ms.is_none()));
    let again = serde_json::to_string_pretty(&r).unwrap() + "\n";
    assert_eq!(again, stdout(&o));
}

#[test]
fn verify_all_symbolic_json() {
    let o = run(&["verify", "all", "--mode", "symbolic", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = report(&o);
    assert_eq!(r.summary.passed, 36);
    assert_eq!(r.summary.seed, None);
    let signs: Vec<i8> = r.results.iter().filter_map(|c| c.sign).collect();
    assert_eq!(signs, vec![1, -1, 1, 1, -1, 1, 1, -1, 1, 1, -1, 1]);
}

#[test]
fn selected_recursions_are_reproducible() {
    let args = ["verify", "recursions", "--only", "2,10", "--mode", "numeric", "--points", "5", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("2/2 passed"));
    let serial = run(&[&args[..], &["--parallelism", "1"]].concat());
    let wide = run(&[&args[..], &["--parallelism", "8"]].concat());
    assert_eq!(serial.stdout, wide.stdout);
    let other_seed = run(&["verify", "recursions", "--only", "2,10", "--seed", "8", "--format", "json"]);
    assert_ne!(other_seed.stdout, run(&["verify", "recursions", "--only", "2,10", "--seed", "7", "--format", "json"]).stdout);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "recursions", "--mode", "numeric", "--points", "0"][..],
        &["verify", "recursions", "--parallelism", "0"],
        &["verify", "recursions", "--only", "23"],
        &["verify", "matrix", "--only", "2"],
        &["verify", "everything"],
        &["verify", "all", "--mode", "fuzzy"],
        &["coeff", "3", "1", "0"],
        &["coeff", "1", "1", "0", "--q", "2"],
        &["coeff", "2", "0", "0", "--i", "1"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn csv_and_timings() {
    let o = run(&["verify", "qdim", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("kind,id,mode,status,fund,mu,word,sign,witness,probes,elapsed_ms"));
    assert!(lines.next().unwrap().starts_with("qdim,loops,numeric,PASS,"));
    let timed = report(&run(&["verify", "matrix", "--format", "json", "--timings"]));
    assert!(timed.results[0].elapsed_ms.is_some());
}

#[test]
fn coeff_lookups() {
    let o = run(&["coeff", "2", "3", "-2", "--a", "2", "--b", "3"]);
    assert_eq!(stdout(&o).trim(), "[12][15][33]/([6][12][30])");
    assert_eq!(stdout(&run(&["coeff", "1", "1", "0"])).trim(), "1");
    assert_eq!(stdout(&run(&["coeff", "1", "-1", "1"])).trim(), "-[a+1]/[a]");
    // -[3]/[2] at q = 2: -(21/4)/(5/2)
    assert_eq!(stdout(&run(&["coeff", "1", "-1", "1", "--a", "2", "--b", "0", "--q", "2"])).trim(), "-21/10");
    let bad = run(&["coeff", "1", "-2", "1", "--a", "1", "--b", "1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("[a-1] = 0"), "{}", stderr(&bad));
    let unknown = run(&["coeff", "1", "5", "5"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains("not in the support"));
    assert!(run(&["coeff", "2", "0", "0", "--i", "1", "--j", "2"]).status.success());
}

#[test]
fn tables() {
    let o = run(&["table", "--a", "6", "--b", "4", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 7 + 12 + 4 + 1);
    assert_eq!(rows.iter().filter(|r| r.starts_with("K,")).count(), 7);
    assert_eq!(rows.iter().filter(|r| r.starts_with("R00,")).count(), 4);
    assert_eq!(run(&["table"]).stdout, o.stdout);

    let bad = run(&["table", "--a", "2", "--b", "0"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("[3b] = 0"));

    let json: serde_json::Value = serde_json::from_slice(&run(&["table", "--a", "10", "--b", "10", "--format", "json"]).stdout).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!((json["a"].as_i64(), json["b"].as_i64()), (Some(10), Some(10)));
    for row in json["rows"].as_array().unwrap() {
        for field in ["kind", "fund", "m", "n", "i", "j", "value"] {
            assert!(row.get(field).is_some(), "{field}");
        }
    }
}
