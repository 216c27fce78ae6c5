//! Running a list of checks concurrently and assembling the report.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::checks::{self, Context, Outcome, Status};
use crate::manifest::CheckSpec;

pub const SCHEMA: &str = "superlab-report/1";

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub spec: CheckSpec,
    pub outcome: Outcome,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub max_degree: usize,
    pub results: Vec<CheckResult>,
    pub elapsed: Duration,
}

/// Runs `specs` on up to `jobs` threads; results keep manifest order.
pub fn run(suite: &str, specs: Vec<CheckSpec>, ctx: &Context, jobs: usize) -> Report {
    let start = Instant::now();
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<CheckResult>>> = specs.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..jobs.clamp(1, specs.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(spec) = specs.get(i) else { break };
                let t = Instant::now();
                let outcome = checks::run(spec, ctx);
                let r = CheckResult { spec: spec.clone(), outcome, elapsed: t.elapsed() };
                *slots[i].lock().expect("no panics while holding the slot") = Some(r);
            });
        }
    });
    let results = slots
        .into_iter()
        .map(|m| m.into_inner().expect("slot lock").expect("every check ran"))
        .collect();
    Report { suite: suite.into(), seed: ctx.seed, max_degree: ctx.max_degree, results, elapsed: start.elapsed() }
}

impl Report {
    pub fn count(&self, s: Status) -> usize {
        self.results.iter().filter(|r| r.outcome.status == s).count()
    }

    pub fn all_pass(&self) -> bool {
        self.count(Status::Pass) == self.results.len()
    }

    /// Process exit code: 0 when every check passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    /// The JSON report. Without timings the value depends only on the
    /// suite, the seed and the version.
    pub fn to_value(&self, timings: bool) -> Value {
        let checks: Vec<Value> = self
            .results
            .iter()
            .map(|r| {
                let mut v = json!({
                    "id": r.spec.id,
                    "suite": r.spec.suite,
                    "kind": r.spec.kind.name(),
                    "origin": r.spec.origin.name(),
                    "criterion": r.spec.criterion,
                    "status": r.outcome.status.name(),
                    "detail": r.outcome.detail,
                    "value": r.outcome.value,
                });
                if timings {
                    v["elapsed_ms"] = json!(r.elapsed.as_millis() as u64);
                }
                v
            })
            .collect();
        let mut v = json!({
            "schema": SCHEMA,
            "version": env!("CARGO_PKG_VERSION"),
            "suite": self.suite,
            "seed": self.seed,
            "max_degree": self.max_degree,
            "summary": {
                "total": self.results.len(),
                "passed": self.count(Status::Pass),
                "failed": self.count(Status::Fail),
                "errors": self.count(Status::Error),
            },
            "checks": checks,
        });
        if timings {
            v["elapsed_ms"] = json!(self.elapsed.as_millis() as u64);
        }
        v
    }

    pub fn to_json(&self, timings: bool) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value(timings)).expect("JSON values serialize");
        s.push('\n');
        s
    }

    /// One line per check, then a summary line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            let tag = match r.outcome.status {
                Status::Pass => "PASS ",
                Status::Fail => "FAIL ",
                Status::Error => "ERROR",
            };
            s.push_str(&format!("{tag} {:<28} {} ({:.2}s)\n", r.spec.id, r.outcome.detail, r.elapsed.as_secs_f64()));
            if r.outcome.status != Status::Pass {
                if let Some(v) = &r.outcome.value {
                    s.push_str(&format!("      {v}\n"));
                }
            }
        }
        s.push_str(&format!(
            "suite {}: {} passed, {} failed, {} errors ({:.2}s)\n",
            self.suite,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Error),
            self.elapsed.as_secs_f64()
        ));
        s
    }
}

/// Removes every `elapsed_ms` key, recursively.
pub fn strip_timings(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("elapsed_ms");
            m.values_mut().for_each(strip_timings);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timings),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifest::Manifest;

    #[test]
    fn order_and_determinism_do_not_depend_on_jobs() {
        let specs = Manifest::builtin().suite("young").unwrap();
        let ctx = Context::default();
        let a = run("young", specs.clone(), &ctx, 1);
        let b = run("young", specs, &ctx, 4);
        assert_eq!(a.to_json(false), b.to_json(false));
        let mut with = a.to_value(true);
        strip_timings(&mut with);
        assert_eq!(with, a.to_value(false));
        assert_eq!(a.to_value(false)["schema"], SCHEMA);
    }
}
