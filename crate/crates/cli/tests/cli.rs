use serde_json::Value;

use qnum_cli::{run, Outcome};

fn qnum(args: &str) -> Outcome {
    run(std::iter::once("qnum").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let out = qnum(&format!("{args} --format json"));
    assert_eq!(out.code, 0, "{args}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn rat_json_envelope() {
    let v = json("rat 5/2");
    assert_eq!(v["schemaVersion"], "1");
    assert_eq!(v["command"], "rat");
    assert_eq!(v["result"]["num"], serde_json::json!([1, 2, 1, 1]));
    assert_eq!(v["result"]["den"], serde_json::json!([1, 1]));
    assert_eq!(v["result"]["agree"], true);
}

#[test]
fn negative_fraction_is_a_value_not_a_flag() {
    let v = json("rat -3/2");
    assert_eq!(v["result"]["num"], serde_json::json!([-1, -1, -1]));
    assert_eq!(v["result"]["den"], serde_json::json!([0, 0, 1, 1]));
}

#[test]
fn usage_errors_exit_2() {
    for args in ["rat 5/0", "bogus", "rat", "farey --depth 99", "irr --periodic 1 --prefix 2", "verify all --max-den 100000"] {
        let out = qnum(args);
        assert_eq!(out.code, 2, "{args}");
        assert!(out.stdout.is_empty(), "{args}");
        assert!(!out.stderr.is_empty(), "{args}");
    }
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(qnum("--help").code, 0);
    assert_eq!(qnum("--version").code, 0);
}

#[test]
fn unsupported_format_exits_2() {
    let out = qnum("qbinom 4 2 --format dot");
    assert_eq!(out.code, 2);
}

#[test]
fn output_is_deterministic() {
    for args in ["irr --periodic 1,2 --order 20", "verify methods --max-den 10 --count 50 --seed 3", "farey --depth 4"] {
        for format in ["text", "json"] {
            let a = qnum(&format!("{args} --format {format}"));
            let b = qnum(&format!("{args} --format {format}"));
            assert_eq!(a, b, "{args}");
        }
    }
}

#[test]
fn series_json_round_trips() {
    let v = json("irr --periodic 1 --order 16");
    let s = qnum_core::json::series_from_json(&v["result"]["series"]).unwrap();
    assert_eq!(s.coeff(15), (-12735).into());
    assert_eq!(s.coeff(16), 30372.into());
    let again = serde_json::to_value(&s).unwrap();
    assert_eq!(again, v["result"]["series"]);
}

#[test]
fn algebraic_source_matches_periodic() {
    let a = json("irr --algebraic x^2-x-1 --interval 1,2 --order 12");
    let p = json("irr --periodic 1 --order 12");
    assert_eq!(a["result"]["series"], p["result"]["series"]);
}

#[test]
fn golden_radius() {
    let v = json("radius --metallic 1");
    let r = v["result"]["value"].as_f64().unwrap();
    assert!((r - 0.381966).abs() < 1e-6);
    assert_eq!(v["result"]["certified"], true);
}

#[test]
fn radius_of_integer_is_infinite() {
    let v = json("radius --rational 3");
    assert_eq!(v["result"]["value"], Value::Null);
    assert_eq!(v["result"]["infinite"], true);
}

#[test]
fn diff_of_farey_neighbors_is_q_power() {
    let v = json("diff 3/2 1");
    assert_eq!(v["result"]["qPower"], 2);
    assert_eq!(v["result"]["fareyNeighbors"], true);
}

#[test]
fn trace_of_printed_word() {
    let v = json("trace T3 S T2 S T2 S T S T S");
    assert_eq!(v["result"]["trace"], serde_json::json!([1, 1, 2, 1, 1]));
    assert_eq!(v["result"]["palindromic"], true);
}

#[test]
fn hankel_golden_row() {
    let v = json("hankel --target golden --shift 1 --count 8");
    assert_eq!(v["result"]["values"], serde_json::json!([1, 0, -1, 1, -1, 0, 1, -1]));
}

#[test]
fn somos_on_golden_shift_3_fails_with_exit_1() {
    assert_eq!(qnum("somos --target golden --shift 0 --count 40").code, 0);
    assert_eq!(qnum("somos --target golden --shift 3 --count 40").code, 1);
}

#[test]
fn vieta_holds() {
    let v = json("vieta nonagon --order 20");
    assert_eq!(v["result"]["holds"], true);
}

#[test]
fn stabilize_left_matches_flat_value() {
    let v = json("stabilize 1 --side left --count 20 --order 12");
    assert_eq!(v["result"]["agreesWith"], serde_json::json!(["left_flat"]));
}

#[test]
fn farey_dot_output() {
    let out = qnum("farey --depth 2 --format dot");
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("digraph"));
    assert!(out.stdout.contains("n0 -> n1"));
}

#[test]
fn verify_all_passes_at_small_ceilings() {
    let out = qnum("verify all --max-den 20 --count 200 --depth 8 --order 24");
    assert_eq!(out.code, 0, "{}", out.stdout);
}

#[test]
fn bundled_fixtures_check() {
    let out = qnum("fixtures --check");
    assert_eq!(out.code, 0, "{}", out.stdout);
}

#[test]
fn regenerate_is_idempotent() {
    let dir = std::env::temp_dir().join(format!("qnum-fixtures-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fixtures.json");
    std::fs::write(&path, qnum_core::fixtures::FIXTURES_JSON).unwrap();
    let out = qnum(&format!("fixtures --regenerate {} --format json", path.display()));
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["result"]["changed"], serde_json::json!([]));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), qnum_core::fixtures::FIXTURES_JSON);
    std::fs::remove_dir_all(&dir).unwrap();
}
