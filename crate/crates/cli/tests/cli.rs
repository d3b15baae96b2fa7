use std::path::PathBuf;
use std::process::{Command, Output};

fn hact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hact"))
        .args(args)
        .env_remove("HACT_PRESET_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hact-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

const BAD_SL2: &str = "[algebra bad_sl2]
generators = a b c d
relations = b*a = q*a*b; c*a = q^-1*a*c; c*b = b*c;
  d*b = q^-1*b*d; d*c = q^-1*c*d;
  d*a = 1 + q^-1*b*c; a*d = 1 + q*b*c
order_weights = a:1, d:1
";

#[test]
fn tch_on_es_passes() {
    let o = hact(&["verify", "--preset", "es_fibration", "--checks", "tch", "--max-degree", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("tch es_fibration"), "{s}");
    assert!(s.ends_with("0 failures\n"), "{s}");
}

#[test]
fn hopf_on_desk_passes() {
    let o = hact(&["verify", "--preset", "smash_desk", "--checks", "hopf"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("hopf o_u1"));
}

#[test]
fn corrupted_relation_fails_confluence() {
    let dir = scratch("bad");
    let file = dir.join("bad.hact");
    std::fs::write(&file, BAD_SL2).unwrap();
    let o = hact(&["verify", "--file", file.to_str().unwrap(), "--format", "report"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["failures"].as_u64().unwrap() > 0);
    let conf = &v["suites"][0];
    assert_eq!(conf["suite"], "confluence");
    assert!(conf["entries"].as_array().unwrap().iter().any(|e| e["status"] == "fail"));
}

#[test]
fn es_translation_table_is_stable() {
    let a = hact(&["table", "--preset", "es_fibration", "--what", "translation"]);
    let b = hact(&["table", "--preset", "es_fibration", "--what", "translation"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a), include_str!("fixtures/es_translation.table"));
    assert_eq!(stdout(&a).lines().filter(|l| l.starts_with('τ')).count(), 8);
}

#[test]
fn es_counit_table() {
    let o = hact(&["table", "--preset", "es_fibration", "--what", "counit"]);
    assert!(stdout(&o).lines().any(|l| l == "ε(δ)  = 1 - B0"), "{}", stdout(&o));
}

#[test]
fn usage_errors() {
    for args in [
        &["verify", "--preset", "es_fibration", "--checks", ""][..],
        &["verify", "--preset", "es_fibration", "--checks", "bogus"],
        &["verify", "--preset", "es_fibration", "--max-degree", "0"],
        &["verify"],
        &["verify", "--preset", "es_fibration", "--file", "x.hact"],
        &["table", "--preset", "es_fibration", "--what", "antipode"],
    ] {
        let o = hact(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn missing_preset_and_missing_what() {
    let o = hact(&["verify", "--preset", "no_such_thing"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not found"));
    let o = hact(&["table", "--preset", "smash_desk"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn es_differentials() {
    let o = hact(&["calculus", "--preset", "es_fibration", "--max-degree", "1", "--what", "d"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("d(β)  = -β@1 + q^2*β@β + δ̃@β̃"), "{s}");
    assert!(s.contains("d(γ)  = -γ@1 + γ@γ + γ̃@α̃"), "{s}");
}

#[test]
fn desk_calculus_report() {
    let o = hact(&["calculus", "--preset", "smash_desk", "--format", "report", "x*t - x", "t^2 - 2*t + 1"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["failures"], 0);
    assert_eq!(v["tables"].as_array().unwrap().len(), 2);
    let dims = v["dimensions"].as_array().unwrap();
    assert_eq!(dims.len(), 4);
    assert!(dims.iter().all(|d| d["plus"].as_u64() >= d["ideal"].as_u64()));
}

#[test]
fn ideal_containing_one_is_rejected() {
    let o = hact(&["calculus", "--preset", "smash_desk", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("counit"));
}

#[test]
fn ideal_above_truncation_is_rejected() {
    let o = hact(&["calculus", "--preset", "smash_desk", "--max-degree", "2", "x*t^2 - x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--max-degree"));
}

#[test]
fn preset_dir_and_out() {
    let dir = scratch("presets");
    std::fs::write(dir.join("dual.hact"), "[algebra dual]\ngenerators = e\nrelations = e*e = 0\n").unwrap();
    let out = dir.join("report.json");
    let o = Command::new(env!("CARGO_BIN_EXE_hact"))
        .args(["verify", "--preset", "dual", "--format", "report", "--out", out.to_str().unwrap()])
        .env("HACT_PRESET_DIR", &dir)
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["target"], "dual");
    assert_eq!(v["kind"], "algebra");
}

#[test]
fn surjection_kernel_suite() {
    let o = hact(&["verify", "--preset", "smash_slq2", "--checks", "kernel", "--max-degree", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("kernel: "));
    assert!(stdout(&o).contains("homogeneous: "));
}
