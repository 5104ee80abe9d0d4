use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};
use shk_core::battery::{is_known_counterexample, run_trial, BatteryConfig, Check, TrialResult};

pub struct CheckSummary {
    pub check: Check,
    pub trials: Vec<TrialResult>,
}

impl CheckSummary {
    pub fn evaluated(&self) -> usize {
        self.trials.iter().map(|t| t.evaluated).sum()
    }

    pub fn skipped(&self) -> usize {
        self.trials.iter().map(|t| t.skipped.len()).sum()
    }

    pub fn violations(&self) -> usize {
        self.trials.iter().map(|t| t.violations.len()).sum()
    }
}

pub fn run(checks: &[Check], cfg: &BatteryConfig) -> Vec<CheckSummary> {
    let tasks: Vec<(Check, usize)> = checks
        .iter()
        .flat_map(|&c| (0..cfg.trial_count(c)).map(move |t| (c, t)))
        .collect();
    let mut results: Vec<(Check, TrialResult)> = tasks
        .into_par_iter()
        .map(|(c, t)| (c, run_trial(c, cfg, t)))
        .collect();
    results.sort_by_key(|(c, r)| (*c, r.trial));
    checks
        .iter()
        .map(|&check| CheckSummary {
            check,
            trials: results
                .iter()
                .filter(|(c, _)| *c == check)
                .map(|(_, r)| r.clone())
                .collect(),
        })
        .collect()
}

pub fn to_text(summaries: &[CheckSummary]) -> String {
    let mut out = String::new();
    for s in summaries {
        writeln!(
            out,
            "{}: {} trials, {} relations checked, {} skipped, {} violations",
            s.check,
            s.trials.len(),
            s.evaluated(),
            s.skipped(),
            s.violations()
        )
        .unwrap();
    }
    for s in summaries {
        for v in s.trials.iter().flat_map(|t| &t.violations) {
            let known = if is_known_counterexample(&v.relation) {
                " (known counterexample)"
            } else {
                ""
            };
            writeln!(out, "\nVIOLATION {} trial {}: {}{known}", v.check, v.trial, v.relation).unwrap();
            writeln!(out, "  {}", v.detail).unwrap();
            for line in v.instance.lines() {
                writeln!(out, "  | {line}").unwrap();
            }
        }
    }
    out
}

pub fn to_json(summaries: &[CheckSummary], cfg: &BatteryConfig) -> Value {
    let checks: Vec<Value> = summaries
        .iter()
        .map(|s| {
            let violations: Vec<Value> = s
                .trials
                .iter()
                .flat_map(|t| &t.violations)
                .map(|v| {
                    json!({
                        "trial": v.trial,
                        "relation": v.relation,
                        "detail": v.detail,
                        "instance": v.instance,
                        "known_counterexample": is_known_counterexample(&v.relation),
                    })
                })
                .collect();
            json!({
                "check": s.check.name(),
                "trials": s.trials.len(),
                "evaluated": s.evaluated(),
                "skipped": s.skipped(),
                "violations": violations,
            })
        })
        .collect();
    json!({
        "schema": 1,
        "seed": cfg.seed,
        "vertices": cfg.vertices,
        "facets": cfg.facets,
        "fields": cfg.fields.iter().map(|f| f.short_name()).collect::<Vec<_>>(),
        "checks": checks,
    })
}
