use std::process::{Command, Output};

fn run_with(workers: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starcut"))
        .args(args)
        .env("STARCUT_WORKERS", workers)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_with("1", args)
}

fn out(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn err(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn field<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('\t')))
}

#[test]
fn tables_rows_and_usage() {
    let o = run(&["tables", "--max-r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        out(&o),
        "r\tf(r)\tg(r)\tmin_dim_Q\tmin_dim_FQ\n2\t5\t6\t6\t7\n"
    );
    let o = run(&["tables", "--max-r", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(err(&o).contains("--max-r"));
    assert!(out(&o).is_empty());
}

#[test]
fn run_record_is_one_json_line() {
    let o = run(&["tables", "--max-r", "3"]);
    let stderr = err(&o);
    let records: Vec<&str> = stderr.lines().filter(|l| l.starts_with('{')).collect();
    assert_eq!(records.len(), 1);
    let v: serde_json::Value = serde_json::from_str(records[0]).unwrap();
    assert_eq!(v["outcome"], "success");
    assert_eq!(v["exit_code"], 0);
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn construct_writes_and_rechecks_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let p = path.to_str().unwrap();
    let o = run(&["construct", "-f", "q", "-n", "12", "-r", "6", "-o", p]);
    assert_eq!(o.status.code(), Some(0), "{}", err(&o));
    let text = out(&o);
    assert_eq!(field(&text, "stars"), Some("6"));
    assert_eq!(field(&text, "verified"), Some("yes"));
    assert_eq!(field(&text, "intersections"), Some("none"));

    let o = run(&["solve", "--check-witness", p]);
    assert_eq!(o.status.code(), Some(0), "{}", err(&o));
    assert_eq!(field(&out(&o), "verified"), Some("yes"));
    assert_eq!(field(&out(&o), "reserialized"), Some("identical"));
}

#[test]
fn construct_reports_folded_intersection() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let o = run(&[
        "construct",
        "-f",
        "fq",
        "-n",
        "6",
        "-r",
        "7",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = out(&o);
    assert_eq!(field(&text, "stars"), Some("4"));
    assert_eq!(field(&text, "intersections"), Some("1"));
    assert_eq!(field(&text, "pair"), Some("1\t4\t100000,001111"));
}

#[test]
fn construct_rejects_q2() {
    let o = run(&["construct", "-f", "q", "-n", "2", "-r", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(err(&o).contains("no structure cut exists"));
}

#[test]
fn tampered_witness_fails_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let p = path.to_str().unwrap();
    assert_eq!(
        run(&["construct", "-f", "q", "-n", "4", "-r", "2", "-o", p])
            .status
            .code(),
        Some(0)
    );
    let text = std::fs::read_to_string(&path).unwrap();
    // Drop the second star; one K_{1,2} cannot isolate anything in Q_4.
    let mut w: serde_json::Value = serde_json::from_str(&text).unwrap();
    w["stars"].as_array_mut().unwrap().truncate(1);
    std::fs::write(&path, serde_json::to_string_pretty(&w).unwrap() + "\n").unwrap();
    let o = run(&["solve", "--check-witness", p]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(field(&out(&o), "verified"), Some("no"));
}

#[test]
fn solve_matches_known_values() {
    let o = run(&[
        "solve",
        "-f",
        "q",
        "-n",
        "4",
        "-r",
        "3",
        "--mode",
        "substructure",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&out(&o), "value"), Some("Exact(2)"));
    assert_eq!(field(&out(&o), "agreement"), Some("yes"));

    let o = run(&[
        "solve",
        "-f",
        "q",
        "-n",
        "5",
        "-r",
        "4",
        "--mode",
        "substructure",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&out(&o), "value"), Some("Exact(3)"));

    let o = run(&["solve", "-f", "q", "-n", "2", "-r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&out(&o), "value"), Some("NoCutExists"));
}

#[test]
fn solve_open_case_writes_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json");
    let o = run(&[
        "solve",
        "-f",
        "fq",
        "-n",
        "4",
        "-r",
        "2",
        "--cert",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&out(&o), "known"), Some("open"));
    assert_eq!(field(&out(&o), "agreement"), Some("n/a"));
    let c: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(c["value"]["kind"], "exact");
    assert_eq!(c["claim"]["family"], "FQ");
    assert!(c["witness"]["stars"].is_array());
}

#[test]
fn solve_budget_exhaustion_is_inconclusive() {
    let o = run(&[
        "solve",
        "-f",
        "q",
        "-n",
        "5",
        "-r",
        "5",
        "--budget-components",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(
        field(&out(&o), "value"),
        Some("Inconclusive(upper bound 3)")
    );
}

#[test]
fn solve_usage_errors() {
    assert_eq!(
        run(&["solve", "-f", "q", "-n", "9", "-r", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["solve", "-f", "x", "-n", "4", "-r", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["solve", "-f", "q", "-n", "4"]).status.code(), Some(2));
    assert_eq!(
        run(&["solve", "-f", "q", "-n", "4", "-r", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn lemma_commands() {
    let o = run(&[
        "lemmas",
        "--id",
        "common-neighbors",
        "--family",
        "q",
        "--n",
        "3..5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        out(&o).lines().filter(|l| l.contains("\tpass\t")).count(),
        3
    );

    let o = run(&[
        "lemmas",
        "--id",
        "common-neighbors",
        "--family",
        "fq",
        "--n",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = out(&o);
    assert!(text.contains("\tpass-with-exception\t"));
    assert!(text.contains("\t110,011\t"), "{text}");
    assert!(!text.contains("unexpected"));

    let o = run(&[
        "lemmas",
        "--id",
        "star-bounds",
        "--family",
        "q",
        "--n",
        "5",
        "--r",
        "4",
        "--kmax",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(out(&o).contains("star-bounds\tQ_5\t4\t4\tpass\t"));

    let o = run(&["lemmas", "--id", "star-bounds", "--family", "q", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(out(&o).is_empty());
}

#[test]
fn conjecture_survey_confirms_small_hypercubes() {
    let o = run(&["conjecture", "-f", "q", "--n", "3..5", "--r", "2..5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = out(&o);
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split('\t').collect();
        let n: usize = cols[0].trim_start_matches("Q_").parse().unwrap();
        let r: usize = cols[1].parse().unwrap();
        let want = if r <= n { "CONFIRMED" } else { "SKIPPED" };
        assert_eq!(cols[4], want, "{line}");
    }
}

#[test]
fn conjecture_marks_open_cells() {
    let o = run(&[
        "conjecture",
        "-f",
        "q",
        "--n",
        "7",
        "--r",
        "7",
        "--mode",
        "structure",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(
        out(&o),
        "graph\tr\tmode\tconjectured\tstatus\tdetail\n\
         Q_7\t7\tstructure\t4\tOPEN\tupper bound 4 (verified construction)\n"
    );
}

#[test]
fn output_does_not_depend_on_worker_count() {
    let cases: [&[&str]; 3] = [
        &["solve", "-f", "q", "-n", "5", "-r", "3"],
        &[
            "solve",
            "-f",
            "fq",
            "-n",
            "5",
            "-r",
            "4",
            "--mode",
            "substructure",
        ],
        &["conjecture", "-f", "fq", "--n", "3..4", "--r", "2..3"],
    ];
    for args in cases {
        let one = run_with("1", args);
        let four = run_with("4", args);
        assert_eq!(one.status.code(), four.status.code(), "{args:?}");
        assert_eq!(one.stdout, four.stdout, "{args:?}");
    }
}
