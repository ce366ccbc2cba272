use std::process::Command;

use idem::cli::{dispatch, evaluate, CommandResult};
use serde_json::Value;

fn run(args: &str) -> CommandResult {
    dispatch(std::iter::once("idem").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let r = run(&format!("{args} --json"));
    assert_eq!(r.exit_code, 0, "{args}: {}", r.stderr);
    serde_json::from_str(&r.stdout).unwrap()
}

/// One invocation per subcommand; audit is covered in tests/audit.rs.
const COMMANDS: &[&str] = &[
    "modinfo 360",
    "idempotents 12",
    "order 100 42",
    "classify 12 2",
    "sets 12",
    "sets 12 --regular --class 4",
    "sets 36 --normal",
    "orbit 12 2",
    "solve 12 2 4",
    "solve 12 2 5",
    "omega 12 4",
    "gproots 12",
    "counts 20 1 4",
    "counts 12 4 2",
    "classify-fn psi 60",
    "algebra 30",
    "idemop 12 complement 4",
    "idemop 12 circ 4 9",
    "quadratic 12 5",
    "quadratic 12 0",
    "sqrt 15 1",
    "tower 100 42 100",
];

#[test]
fn pinned_examples() {
    assert_eq!(run("tower 100 42 100").stdout, "56\n");
    assert_eq!(run("idempotents 12 --json").stdout, "{\"m\":12,\"idempotents\":[1,4,9,12]}\n");
    assert_eq!(run("idempotents 12").stdout, "1,4,9,12\n");
    let r = run("solve 12 2 5");
    assert_eq!(r.exit_code, 0);
    assert!(r.stdout.contains("solutions: (none)") && r.stdout.contains("verdict: unsolvable"));
    let s = json("solve 12 2 5");
    assert_eq!(s["solutions"], serde_json::json!([]));
    assert_eq!(s["verdict"], "unsolvable");
    assert_eq!(s["bc01_verdict"], false);
    assert_eq!(json("order 100 42")["order"], 20);
    assert_eq!(json("orbit 12 2")["orbit"], serde_json::json!([2, 4]));
    assert_eq!(json("sqrt 9 1")["product"], 8);
    assert_eq!(json("idemop 12 otimes 4 9")["value"], 1);
    assert_eq!(json("gproots 12")["gproots"], serde_json::json!([3, 5, 7, 8, 11, 12]));
}

#[test]
fn negatives_are_canonicalized() {
    assert_eq!(json("order 12 -10"), json("order 12 2"));
    assert_eq!(json("solve 12 2 -8")["a"], 4);
    assert_eq!(json("idemop 12 complement -8")["value"], 9);
    assert_eq!(json("tower 100 -58 3")["base"], 42);
    assert_eq!(json("quadratic 12 -7")["solutions"], json("quadratic 12 5")["solutions"]);
    assert_eq!(json("order 12 0")["a"], 12);
}

#[test]
fn bad_input_exits_2_with_usage() {
    for args in [
        "",
        "frobnicate 3",
        "order 12",
        "order 12 x",
        "order 0 1",
        "order -12 1",
        "idemop 12 circ 2 4",
        "idemop 12 rotate 4",
        "sqrt 12 1",
        "omega 12 2",
        "counts 12 2 1",
        "tower 100 42 0",
        "classify-fn nope 10",
        "audit 9..5",
        "audit 2..10 --theorems zz99",
    ] {
        let r = run(args);
        assert_eq!(r.exit_code, 2, "`{args}` gave {r:?}");
        assert!(r.stdout.is_empty());
        assert!(r.stderr.contains("Usage"), "`{args}` stderr: {}", r.stderr);
    }
    let help = run("--help");
    assert_eq!(help.exit_code, 0);
    assert!(help.stdout.contains("m denotes the zero class"));
}

#[test]
fn cap_exceeded_exits_3() {
    for args in ["--max-enum 10 solve 12 2 4", "sets 100 --max-enum 99", "--max-enum 5 sqrt 15 1"] {
        let r = run(args);
        assert_eq!(r.exit_code, 3, "`{args}` gave {r:?}");
        assert!(r.stderr.contains("cap"));
    }
    assert_eq!(run("--max-enum 12 solve 12 2 4").exit_code, 0);
    // Closed-form commands never enumerate.
    assert_eq!(run("--max-enum 1 order 1000003 2").exit_code, 0);
}

#[test]
fn binary_reads_env_cap_and_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_idem");
    let out = Command::new(bin).args(["gproots", "12"]).env("IDEM_MAX_ENUM", "11").output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(bin).args(["gproots", "12"]).env("IDEM_MAX_ENUM", "11").args(["--max-enum", "12"]).output();
    assert_eq!(out.unwrap().status.code(), Some(0));
    let out = Command::new(bin).args(["tower", "100", "42", "100"]).env_remove("IDEM_MAX_ENUM").output().unwrap();
    assert_eq!((out.status.code(), String::from_utf8(out.stdout).unwrap()), (Some(0), "56\n".into()));
    let out = Command::new(bin).args(["order"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("Usage"));
}

#[test]
fn json_payloads_round_trip() {
    for args in COMMANDS {
        let r = run(&format!("{args} --json"));
        assert_eq!(r.exit_code, 0, "{args}: {}", r.stderr);
        let v: Value = serde_json::from_str(&r.stdout).unwrap();
        let again = serde_json::to_string(&v).unwrap() + "\n";
        assert_eq!(again, r.stdout, "{args}");
        let v2: Value = serde_json::from_str(&again).unwrap();
        assert_eq!(v, v2);
    }
}

fn ints(s: &str) -> Vec<u64> {
    s.split(|c: char| !c.is_ascii_digit()).filter(|t| !t.is_empty()).map(|t| t.parse().unwrap()).collect()
}

fn leaf_ints(v: &Value, out: &mut Vec<u64>) {
    match v {
        Value::Number(n) => out.push(n.as_u64().unwrap()),
        Value::String(s) => out.extend(ints(s)),
        Value::Array(a) => a.iter().for_each(|x| leaf_ints(x, out)),
        Value::Object(o) => o.values().for_each(|x| leaf_ints(x, out)),
        Value::Bool(_) | Value::Null => {}
    }
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    for args in COMMANDS {
        let (reply, _) = evaluate(std::iter::once("idem").chain(args.split_whitespace())).unwrap();
        let text = run(args).stdout;
        assert_eq!(text, reply.text());
        let from_text: Vec<u64> = text.lines().flat_map(|l| ints(l.split_once(": ").map_or(l, |(_, v)| v))).collect();
        let mut from_json = Vec::new();
        for (_, v) in &reply.answer {
            leaf_ints(v, &mut from_json);
        }
        assert_eq!(from_text, from_json, "{args}");
        // The JSON document is the echoed inputs followed by exactly these answers.
        let doc = json(args);
        for (k, v) in &reply.answer {
            assert_eq!(&doc[*k], v, "{args} {k}");
        }
    }
}

#[test]
fn sets_are_ascending() {
    for args in COMMANDS {
        let r = run(args);
        for line in r.stdout.lines() {
            let v = line.split_once(": ").map_or(line, |(_, v)| v);
            if v.contains(',') && !line.contains("decompositions") && !line.contains("counterexample") {
                let xs = ints(v);
                let name = line.split(':').next().unwrap();
                // Tables and the complement map are indexed by E_m, factors are (p, α)
                // pairs and law names are prose.
                if ["complement", "circ", "otimes", "simdiff", "factorization", "laws"]
                    .iter()
                    .any(|t| name.starts_with(t))
                {
                    continue;
                }
                assert!(xs.windows(2).all(|w| w[0] < w[1]), "{args}: {line}");
            }
        }
    }
}
