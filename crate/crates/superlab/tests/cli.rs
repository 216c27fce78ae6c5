use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use superlab::report::strip_timings;

fn superlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superlab"))
        .args(args)
        .env_remove("SUPERLAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("superlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn read_json(p: &PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn verify_young_passes_and_writes_a_report() {
    let path = tmp("young.json");
    let o = superlab(&["verify", "--suite", "young", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let r = read_json(&path);
    assert_eq!(r["schema"], "superlab-report/1");
    assert_eq!(r["summary"]["failed"], 0);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["origin"].is_string()));
}

#[test]
fn verify_alt_includes_the_exe_value() {
    let o = superlab(&["verify", "--suite", "alt", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("= 2/1*exe"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert_eq!(superlab(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(superlab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn failing_check_exits_one() {
    let m = tmp("failing.toml");
    std::fs::write(
        &m,
        "schema = 1\n[[check]]\nid = \"commutative\"\nsuite = \"jordan\"\nkind = \"identity\"\norigin = \"trivial\"\n\
         algebra = \"catalog:alt_B\"\npoly = \"1/1*(x1 x2) - 1/1*(x2 x1)\"\n",
    )
    .unwrap();
    let o = superlab(&["verify", "--suite", "jordan", "--manifest", m.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn reports_are_deterministic_for_a_seed() {
    let (a, b) = (tmp("t1.json"), tmp("t2.json"));
    for p in [&a, &b] {
        let o = superlab(&["verify", "--suite", "transfer", "--seed", "5", "--jobs", "3", "--report", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (mut ra, mut rb) = (read_json(&a), read_json(&b));
    assert!(ra["elapsed_ms"].is_u64());
    strip_timings(&mut ra);
    strip_timings(&mut rb);
    assert_eq!(ra, rb);
    assert_eq!(ra["seed"], 5);
}

#[test]
fn seed_falls_back_to_the_environment() {
    let p = tmp("env.json");
    let o = Command::new(env!("CARGO_BIN_EXE_superlab"))
        .args(["verify", "--suite", "young", "--report", p.to_str().unwrap()])
        .env("SUPERLAB_SEED", "77")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(read_json(&p)["seed"], 77);
}

#[test]
fn check_examples() {
    let o = superlab(&["check", "--algebra", "catalog:jord_A", "--poly", "lib:metabelian", "--mode", "superidentity"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds"));

    let o = superlab(&["check", "--algebra", "catalog:malc_An:3", "--poly", "family:malc_fn:4", "--mode", "identity"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let file = tmp("tiny.json");
    std::fs::write(
        &file,
        r#"{"name":"t","field":"Q","basis":[{"label":"a","parity":0},{"label":"b","parity":0}],
            "products":[{"l":"a","r":"a","value":[{"b":"b","c":"1/1"}]}]}"#,
    )
    .unwrap();
    let src = format!("file:{}", file.display());
    let o = superlab(&["check", "--algebra", &src, "--poly", "1/1*(x1 x2)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness x1:even x2:even; x1=a, x2=a -> 1/1*b"), "{}", stdout(&o));
}

#[test]
fn parse_errors_exit_two() {
    let o = superlab(&["check", "--algebra", "catalog:jord_A", "--poly", "1/1*(x1 x2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte"));
    assert_eq!(superlab(&["check", "--algebra", "catalog:nope", "--poly", "lib:nil3"]).status.code(), Some(2));
    assert_eq!(superlab(&["check", "--algebra", "file:/nonexistent.json", "--poly", "lib:nil3"]).status.code(), Some(2));
}

#[test]
fn degree_cap_and_override() {
    let args = ["eval", "--algebra", "catalog:malc_An:7", "--poly", "family:malc_fn:7", "--assign"];
    let assign = "1=1/1*1, 2=e1, 3=e2, 4=e3, 5=e4, 6=e5, 7=e6";
    let o = superlab(&[&args[..], &[assign]].concat());
    assert_eq!(o.status.code(), Some(2));
    let o = superlab(&[&args[..], &[assign, "--max-degree", "7"]].concat());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "1440/1*E1E2E3E4E5E6");
}

#[test]
fn eval_prints_the_value() {
    let o = superlab(&["eval", "--algebra", "catalog:alt_B", "--poly", "lib:nil3", "--assign", "1=e, 2=x, 3=e"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2/1*exe");
}

#[test]
fn young_prints_the_worked_example() {
    let o = superlab(&["young", "phi", "--rows", "2", "--cols", "2", "--word", "1 2 3 4"]);
    assert_eq!(o.status.code(), Some(0));
    let want = superlab::assoc_expr::parse("(x1 o x2) o (x3 o x4) - (x3 o x2) o (x1 o x4)").unwrap();
    assert_eq!(stdout(&o).trim(), want.to_string());
    // the same table as a column-major permutation
    let o2 = superlab(&["young", "phi", "--rows", "2", "--cols", "2", "--word", "1 2 3 4", "--tau", "1 3 2 4"]);
    assert_eq!(stdout(&o2), stdout(&o));
    let o3 = superlab(&["young", "psi", "--rows", "2", "--cols", "2", "--word", "1 2 3", "--fill", "column"]);
    assert_eq!(o3.status.code(), Some(2));
}

#[test]
fn catalog_export_round_trips() {
    let o = superlab(&["catalog", "export", "--name", "jord_Bn", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let alg = superlab::algebra_json::from_json(&text).unwrap();
    assert_eq!(alg.name(), "jord_Bn(3)");
    assert_eq!(superlab::algebra_json::to_json(&alg), text);
    let o = superlab(&["catalog", "export", "--name", "eps_A", "--n", "-1", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"Q(eps)\"") || stdout(&o).contains("\"Q\""));
    assert!(stdout(&superlab(&["catalog", "list"])).contains("malc_barAn"));
}

#[test]
fn envelope_dimensions() {
    use superlab_core::algebra::Algebra;
    use superlab_core::poly::Parity;
    let a = superlab_core::catalog::jord_a().algebra;
    let (a0, a1) = (a.basis_of_parity(Parity::Even).len(), a.basis_of_parity(Parity::Odd).len());
    for (n, g0, g1) in [(0u32, 1usize, 0usize), (2, 2, 2), (3, 4, 4)] {
        let out = tmp(&format!("env{n}.json"));
        let o = superlab(&["envelope", "--algebra", "catalog:jord_A", "--n", &n.to_string(), "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let e = superlab::algebra_json::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(e.dim(), g0 * a0 + g1 * a1, "n = {n}");
        if n == 0 {
            // A_0 with unit legs: envelope index k is the k-th even basis vector
            let evens = a.basis_of_parity(Parity::Even);
            for k in 0..e.dim() {
                for l in 0..e.dim() {
                    let got: Vec<(usize, String)> =
                        e.product(k, l).coords().iter().map(|(m, c)| (evens[*m], c.to_text())).collect();
                    let want: Vec<(usize, String)> =
                        a.product(evens[k], evens[l]).coords().iter().map(|(m, c)| (*m, c.to_text())).collect();
                    assert_eq!(got, want);
                }
            }
        }
    }
}
