use std::process::Command;

use g2_cartan::scalar::parse_rational;
use g2_cartan::Scalar;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_g2cartan")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf8"))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let (code, text) = run(&a);
    (code, serde_json::from_str(&text).unwrap_or_else(|e| panic!("{:?}: {}\n{}", args, e, text)))
}

fn schema() -> jsonschema::JSONSchema {
    let text = include_str!("../schema/report.schema.json");
    let v: Value = serde_json::from_str(text).expect("schema parses");
    jsonschema::JSONSchema::compile(&v).expect("schema compiles")
}

fn assert_valid(v: &Value) {
    let s = schema();
    if let Err(errs) = s.validate(v) {
        let msgs: Vec<String> = errs.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {:#?}", msgs);
    };
}

const SAMPLES: &[&[&str]] = &[
    &["verify-core"],
    &["curvature-module"],
    &["prolong", "--quartic", "1,0,0,0,0"],
    &["prolong", "--quartic", "0,0,1,0,0"],
    &["model", "verify", "--label", "N.6"],
    &["model", "verify", "--label", "D.6", "--a", "3/2"],
    &["model", "verify", "--label", "N.7"],
    &["model", "holonomy", "--label", "N.7", "--c", "0"],
    &["model", "einstein", "--label", "D.6", "--a", "0"],
    &["model", "iii6"],
    &["realform", "--label", "D.6", "--a", "1", "--psi", "tilde_1"],
    &["realform", "classify", "--label", "D.6", "--a", "1"],
    &["rolling", "--rho", "5/2"],
    &["rolling", "--rho", "3"],
    &["covariants", "--model", "N.6"],
];

#[test]
fn reports_validate_against_schema() {
    for args in SAMPLES {
        let (code, v) = json(args);
        assert_eq!(code, 0, "{:?}", args);
        assert_eq!(v["pass"], true, "{:?}", args);
        assert_valid(&v);
    }
}

#[test]
fn schema_rejects_malformed_reports() {
    let (_, mut v) = json(&["rolling", "--rho", "3"]);
    v["symmetry_dim"] = serde_json::json!(7);
    assert!(!schema().is_valid(&v));
    let (_, mut v) = json(&["rolling", "--rho", "2"]);
    v["a"] = serde_json::json!("sqrt(2)");
    assert!(!schema().is_valid(&v));
    v.as_object_mut().unwrap().remove("checks");
    assert!(!schema().is_valid(&v));
}

#[test]
fn verify_core_counts() {
    let (_, v) = json(&["verify-core"]);
    let jacobi = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "jacobi").unwrap();
    assert_eq!(jacobi["count"], 364);
    assert_eq!(jacobi["pass"], true);
}

#[test]
fn n6_curvature_coefficients() {
    let (code, v) = json(&["model", "verify", "--label", "N.6"]);
    assert_eq!(code, 0);
    let k: Vec<&str> = v["curvature"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(&k[..5], ["42", "-30", "20", "-4", "6"]);
}

#[test]
fn rolling_reports() {
    let (code, v) = json(&["rolling", "--rho", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["exceptional"], true);
    assert_eq!(v["symmetry_dim"], 14);
    assert_eq!(v["residuals_zero"], true);
    let (_, v) = json(&["rolling", "--rho", "5/2"]);
    assert_eq!(v["a2"], "-30276/2431");
    assert_eq!(v["psi"], "tilde_i");
    assert_eq!(v["exceptional"], false);
    let (_, v) = json(&["rolling", "--rho", "5"]);
    assert_eq!(v["a2"], "1521/224");
    assert_eq!(v["psi"], "tilde_-1");
    let (_, v) = json(&["rolling", "--rho", "2"]);
    assert_eq!(v["ext"], "s^2=36/7");
    assert_eq!(v["a"], "1*i*s");
}

#[test]
fn realform_signature_at_zero() {
    let (code, v) = json(&["realform", "--label", "D.6", "--a", "0", "--psi", "tilde_i"]);
    assert_eq!(code, 0);
    assert_eq!(v["signature"], serde_json::json!([3, 3, 0]));
    assert_eq!(v["type"], "so(1,3)");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["rolling", "--rho", "abc"]).0, 2);
    assert_eq!(run(&["rolling", "--rho", "1"]).0, 2);
    assert_eq!(run(&["model", "verify", "--label", "Q.9"]).0, 2);
    assert_eq!(run(&["model", "verify", "--label", "D.6", "--a", "1*s"]).0, 2);
    assert_eq!(run(&["nonsense"]).0, 2);
    assert_eq!(run(&["prolong", "--quartic", "0,0,0,0,0"]).0, 2);
    // a failed check
    let (code, v) = json(&["realform", "--label", "D.6", "--a", "1", "--psi", "tau_i"]);
    assert_eq!(code, 1);
    assert_eq!(v["pass"], false);
    assert_valid(&v);
}

#[test]
fn output_is_deterministic() {
    for args in [&["realform", "classify", "--label", "D.6", "--a", "2"][..], &["rolling", "--rho", "4"]] {
        let mut a = args.to_vec();
        a.push("--json");
        assert_eq!(run(&a), run(&a));
    }
}

/// Every string under the given keys re-parses (with the echoed extension) and re-renders identically.
fn round_trip(v: &Value, ext: Option<&g2_cartan::Rational>, count: &mut usize) {
    match v {
        Value::String(s) => {
            let x = Scalar::parse(s, ext).unwrap_or_else(|e| panic!("{:?}: {}", s, e));
            assert_eq!(&x.render(), s);
            *count += 1;
        }
        Value::Array(xs) => xs.iter().for_each(|x| round_trip(x, ext, count)),
        Value::Object(m) => m.values().for_each(|x| round_trip(x, ext, count)),
        _ => {}
    }
}

#[test]
fn scalars_round_trip() {
    let cases: &[(&[&str], &[&str])] = &[
        (&["rolling", "--rho", "2"], &["a", "a2"]),
        (&["rolling", "--rho", "3"], &[]),
        (&["realform", "--label", "D.6", "--a", "3/2*i", "--psi", "psi_i"], &["params"]),
        (&["model", "verify", "--label", "D.6", "--ext", "r=2", "--a", "1*s"], &["params", "curvature"]),
        (&["covariants", "--model", "D.6", "--a", "2"], &["F"]),
        (&["curvature-module"], &[]),
    ];
    for (args, keys) in cases {
        let (code, v) = json(args);
        assert_eq!(code, 0, "{:?}", args);
        let ext = v["ext"].as_str().map(|e| parse_rational(e.trim_start_matches("s^2=")).unwrap());
        let mut n = 0;
        for k in *keys {
            round_trip(&v[*k], ext.as_ref(), &mut n);
        }
        for list in ["basis", "embedding", "G", "chains"] {
            if let Some(items) = v[list].as_array() {
                for it in items {
                    for field in ["element", "coefficient", "terms"] {
                        match (field, &it[field]) {
                            ("terms", Value::Array(ts)) => {
                                ts.iter().for_each(|t| round_trip(&t["value"], ext.as_ref(), &mut n))
                            }
                            ("coefficient", c) if list == "G" => round_trip(c, ext.as_ref(), &mut n),
                            ("element", e) => round_trip(e, ext.as_ref(), &mut n),
                            _ => {}
                        }
                    }
                }
            }
        }
        assert!(n > 0, "{:?} produced no scalars", args);
    }
    let (_, v) = json(&["model", "verify", "--label", "D.6", "--ext", "r=2", "--a", "1*s"]);
    assert_eq!(v["ext"], "s^2=2");
}
