use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nniep")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_nniep"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn verdict<'a>(report: &'a Value, problem: &str) -> &'a Value {
    report["result"]["verdicts"].as_array().unwrap().iter().find(|v| v["problem"] == problem).unwrap()
}

#[test]
fn check_classic_list() {
    let o = run(&["check", r#"{"values": ["3", "3", "-2", "-2", "-2"]}"#, "--json"]);
    assert_eq!(code(&o), 1);
    let r = json_of(&o);
    let niep = verdict(&r, "NIEP");
    assert_eq!(niep["status"], "NOT_REALIZABLE");
    let w = &niep["certificates"][0]["report"]["witness"];
    assert_eq!((w["4s4"].as_str(), w["s2^2"].as_str()), (Some("840"), Some("900")));
}

#[test]
fn check_three_quarters() {
    let o = run(&["check", r#"["15/4", "9/4", "-2", "-2", "-2"]"#, "--json"]);
    assert_eq!(code(&o), 1);
    let r = json_of(&o);
    let niep = verdict(&r, "NIEP");
    assert_eq!(niep["status"], "REALIZABLE");
    assert_eq!(niep["certificates"][0]["source"], "family:lm_sigma_hat");
    assert_eq!(verdict(&r, "D-RNIEP")["status"], "NOT_REALIZABLE");
    assert_eq!(verdict(&r, "SNIEP")["status"], "NOT_REALIZABLE");
}

#[test]
fn check_single_positive_value() {
    let o = run(&["check", r#"{"values": ["3", "-1", "-1", "-1"]}"#, "--json"]);
    assert_eq!(code(&o), 0);
    let niep = verdict(&json_of(&o), "NIEP").clone();
    assert_eq!(niep["status"], "REALIZABLE");
    assert_eq!(niep["certificates"][0]["source"], "suleimanova_companion");
}

#[test]
fn check_reads_stdin_and_files() {
    let input = r#"{"values": ["4", "2", "-2", "-2", "-2"]}"#;
    let a = run_stdin(&["check", "-", "--json"], input);
    let path = tmp("sigma_hat_one.json", input);
    let b = run(&["check", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(code(&run(&["check", "{\"values\": [\"3\","])), 2);
    assert_eq!(code(&run(&["check", r#"{"values": ["x"]}"#])), 2);
    assert_eq!(code(&run(&["check", "/no/such/file.json"])), 2);
    assert_eq!(code(&run(&["check"])), 2);
    let o = run(&["check", "[]", "--json"]);
    assert_eq!(code(&o), 2);
    assert_eq!(json_of(&o)["exit_code"], 2);
}

#[test]
fn explain_attaches_rationales() {
    let o = run(&["check", r#"["3", "3", "-2", "-2", "-2"]"#, "--json", "--explain"]);
    let r = json_of(&o);
    assert!(r["result"]["conditions"].as_array().unwrap().iter().all(|c| c["explain"].is_string()));
    let text = String::from_utf8(run(&["check", r#"["3", "3", "-2", "-2", "-2"]"#, "--explain"]).stdout).unwrap();
    assert!(text.contains("why: five values summing to zero need 4·s_4 ≥ s_2²"));
}

#[test]
fn construct_family_and_catalog() {
    let o = run(&["construct", "lm_sigma_hat", "--t", "1", "--json"]);
    assert_eq!(code(&o), 0);
    let r = json_of(&o);
    assert_eq!(r["result"]["matrix"]["entries"][4][0], "64");
    assert_eq!(r["result"]["spectrum"]["values"], serde_json::json!(["4", "2", "-2", "-2", "-2"]));
    assert_eq!(r["result"]["verification"]["charpoly_match"], true);

    let o = run(&["construct", "jordan_sigma_3_4", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_of(&o)["result"]["verification"]["diagonalizable"], false);
}

#[test]
fn construct_below_threshold_reports_witness() {
    let o = run(&["construct", "lm_sigma_hat", "--t", "2/5", "--json"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json_of(&o)["result"]["witness"], serde_json::json!([5, 2]));
    let text = String::from_utf8(run(&["construct", "lm_sigma_hat", "--t", "2/5"]).stdout).unwrap();
    assert!(text.contains("first negative entry (5, 2)"));
}

#[test]
fn construct_argument_errors() {
    assert_eq!(code(&run(&["construct", "no_such_matrix"])), 2);
    assert_eq!(code(&run(&["construct", "lm_sigma_hat"])), 2);
    assert_eq!(code(&run(&["construct", "sym_sigma_t1", "--t", "1"])), 2);
    assert_eq!(code(&run(&["construct", "perturbed", "--t", "-1"])), 2);
}

fn matrix_json(name: &str) -> String {
    let r = json_of(&run(&["construct", name, "--json"]));
    nniep::json::to_canonical_string(&r["result"]["matrix"])
}

#[test]
fn verify_catalog_matrices() {
    let m = tmp("sym_sigma_t1.json", &matrix_json("sym_sigma_t1"));
    let o = run(&["verify", m.to_str().unwrap(), r#"["4", "3", "-2", "-2", "-2"]"#, "--json"]);
    assert_eq!(code(&o), 0);
    let v = &json_of(&o)["result"]["verification"];
    for key in ["charpoly_match", "nonnegative", "symmetric"] {
        assert_eq!(v[key], true, "{key}");
    }

    let m = tmp("jordan.json", &matrix_json("jordan_sigma_3_4"));
    let o = run(&["verify", m.to_str().unwrap(), r#"["15/4", "9/4", "-2", "-2", "-2"]"#, "--json"]);
    assert_eq!(code(&o), 0);
    let r = json_of(&o);
    assert_eq!(r["result"]["verification"]["diagonalizable"], false);
    let at_minus_two = r["result"]["jordan"].as_array().unwrap().iter().find(|j| j["eigenvalue"] == "-2").unwrap();
    assert_eq!(at_minus_two["block_sizes"], serde_json::json!([2, 1]));
}

#[test]
fn verify_failures() {
    let identity = r#"{"entries": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}"#;
    assert_eq!(code(&run(&["verify", identity, r#"["1", "2"]"#])), 2);
    assert_eq!(code(&run(&["verify", identity, r#"["1", "1", "2"]"#])), 1);
    assert_eq!(code(&run(&["verify", identity, r#"["1", "1", "1"]"#])), 0);
    let negative = r#"{"entries": [["0", "-1"], ["-1", "0"]]}"#;
    assert_eq!(code(&run(&["verify", negative, r#"["1", "-1"]"#])), 1);
}

#[test]
fn construct_output_round_trips() {
    for name in ["sym_sigma_t1", "sym_sigma_hat_t1", "jordan_sigma_3_4"] {
        let emitted = matrix_json(name);
        let path = tmp(&format!("{name}_rt.json"), &emitted);
        let spectrum =
            nniep::json::to_canonical_string(&json_of(&run(&["construct", name, "--json"]))["result"]["spectrum"]);
        let o = run(&["verify", path.to_str().unwrap(), &spectrum, "--json"]);
        assert_eq!(code(&o), 0, "{name}");
        let echoed = nniep::json::to_canonical_string(&json_of(&o)["inputs"]["matrix"]);
        assert_eq!(echoed, emitted, "{name}");
    }
}

#[test]
fn threshold_reports() {
    let o = run(&["threshold", "lm_sigma_hat", "--json"]);
    assert_eq!(code(&o), 0);
    let r = json_of(&o);
    assert_eq!(r["result"]["entry_witness"], serde_json::json!([5, 2]));
    assert!(r["result"]["threshold_decimal"].as_str().unwrap().starts_with("0.43799"));

    let o = run(&["threshold", "perturbed", "--eps", "1/1000000000", "--json"]);
    let r = json_of(&o);
    let iv = &r["result"]["interval"];
    let lo = nniep::exact::parse_rational(iv["lo"].as_str().unwrap()).unwrap();
    let hi = nniep::exact::parse_rational(iv["hi"].as_str().unwrap()).unwrap();
    assert!(hi - lo <= nniep::exact::rat(1, 1_000_000_000));
    assert!(r["result"]["threshold_decimal"].as_str().unwrap().starts_with("0.43541534"));

    assert_eq!(code(&run(&["threshold", "nope"])), 2);
    assert_eq!(code(&run(&["threshold", "perturbed", "--eps", "0"])), 2);
}

#[test]
fn fit_exit_codes() {
    let o = run(&["fit-meehan", "--t", "0.52", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_of(&o)["result"]["nonnegative"], true);
    assert_eq!(code(&run(&["fit-meehan", "--t", "0.50"])), 1);
    assert_eq!(code(&run(&["fit-meehan", "--t", "-1"])), 2);
    assert_eq!(code(&run(&["fit-meehan", "--t", "0"])), 2);
}

#[test]
fn roots_examples() {
    let o = run(&["roots", r#"["-15", "0", "78", "0", "1"]"#, "--json"]);
    assert_eq!(code(&o), 0);
    let r = json_of(&o);
    let positive: Vec<&Value> = r["result"]["roots"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|iv| !iv["lo"].as_str().unwrap().starts_with('-'))
        .collect();
    assert_eq!(positive.len(), 1);
    assert!(positive[0]["decimal"].as_str().unwrap().starts_with("0.43799"));

    let r = json_of(&run(&["roots", r#"{"coeffs": ["-4", "0", "1"]}"#, "--json"]));
    let decimals: Vec<&str> =
        r["result"]["roots"].as_array().unwrap().iter().map(|iv| iv["decimal"].as_str().unwrap()).collect();
    assert_eq!(decimals.len(), 2);
    assert!(decimals[0].starts_with("-1.99999") || decimals[0].starts_with("-2.0"));
    assert!(decimals[1].starts_with("1.99999") || decimals[1].starts_with("2.0"));

    let o = run(&["roots", r#"["1", "0", "1"]"#, "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_of(&o)["result"]["count"], 0);
    assert_eq!(code(&run(&["roots", "[]"])), 2);
    assert_eq!(code(&run(&["roots", r#"["0", "0"]"#])), 2);
}

#[test]
fn text_carries_the_json_numbers() {
    let cases: [&[&str]; 4] = [
        &["threshold", "perturbed"],
        &["roots", r#"["-15", "0", "78", "0", "1"]"#],
        &["check", r#"["97/25", "3", "-2", "-2", "-2"]"#],
        &["fit-meehan", "--t", "0.75"],
    ];
    for args in cases {
        let text = String::from_utf8(run(args).stdout).unwrap();
        let mut with_json = args.to_vec();
        with_json.push("--json");
        let report = json_of(&run(&with_json));
        let mut numbers = Vec::new();
        collect_numbers(&report["result"], &mut numbers);
        for n in numbers {
            // signs of polynomial terms are rendered as operators
            let n = n.trim_start_matches('-');
            assert!(text.contains(n), "{args:?}: {n} missing from text");
        }
    }
}

/// Leaf strings that look numeric, excluding nested certificate payloads.
fn collect_numbers(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::String(s) if s.parse::<f64>().is_ok() || s.contains('/') && !s.contains(' ') => out.push(s.clone()),
        Value::Array(a) => a.iter().for_each(|x| collect_numbers(x, out)),
        Value::Object(o) => {
            for (k, x) in o {
                if !matches!(k.as_str(), "premise_certificate" | "matrix" | "verification" | "conditions" | "spectrum")
                {
                    collect_numbers(x, out);
                }
            }
        }
        _ => {}
    }
}
