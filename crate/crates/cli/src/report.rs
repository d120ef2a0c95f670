//! Structured-text analysis report.
//!
//! One document with fixed sections and `key = value` lines:
//!
//! * `[inputs]` - the reduced fuzzy random data, full precision
//! * `[moments]` - per-cell expected value, sigma, and one-sigma interval
//! * `[fit]` - coefficients, objective, trace summary, termination
//! * `[evaluation]` - per-observation comparison rows and aggregate metrics
//! * `[tests]` - one-way ANOVA and paired t-test
//!
//! Numbers carry nine decimals so a re-parsed report agrees with the
//! computed values to well beyond six significant digits.

use crate::pipeline::AnalysisOutcome;
use lingreg_core::regression::{Termination, TraceStage, VertexCheckMode};
use std::fmt::Write as _;

fn fmt_num(x: f64) -> String {
    format!("{x:.9}")
}

fn fmt_interval(iv: &lingreg_core::frv::Interval) -> String {
    format!("[{}, {}]", fmt_num(iv.lower()), fmt_num(iv.upper()))
}

pub fn termination_name(t: Termination) -> &'static str {
    match t {
        Termination::SignStable => "sign-stable",
        Termination::MaxIterations => "max-iterations",
        Termination::AugmentationConverged => "augmentation-converged",
    }
}

pub fn vertex_mode_name(mode: VertexCheckMode) -> &'static str {
    match mode {
        VertexCheckMode::LowerLineOnly => "paper",
        VertexCheckMode::FullInclusion => "full-inclusion",
    }
}

/// Renders the report; `timestamp` is written only when given so identical
/// inputs can produce byte-identical documents.
pub fn render(outcome: &AnalysisOutcome, timestamp: Option<u64>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# lingreg analysis report");
    let _ = writeln!(s, "format_version = 1");
    if let Some(ts) = timestamp {
        let _ = writeln!(s, "generated_at_unix = {ts}");
    }
    let _ = writeln!(s, "observations = {}", outcome.observations.join(","));
    let _ = writeln!(s, "input_groups = {}", outcome.input_groups.join(","));
    let _ = writeln!(s, "output_group = {}", outcome.output_group);

    let _ = writeln!(s, "\n[inputs]");
    for cell in &outcome.cells {
        for (idx, (t, p)) in cell.reduced.components().iter().enumerate() {
            let _ = writeln!(
                s,
                "component = {}/{} index={} center={} left={} right={} probability={}",
                cell.group,
                cell.category,
                idx + 1,
                fmt_num(t.center()),
                fmt_num(t.left()),
                fmt_num(t.right()),
                fmt_num(*p),
            );
        }
    }

    let _ = writeln!(s, "\n[moments]");
    for (i, obs) in outcome.observations.iter().enumerate() {
        for (j, group) in outcome.input_groups.iter().enumerate() {
            let m = &outcome.input_moments[i][j];
            let _ = writeln!(
                s,
                "moment = {group}/{obs} role=X{} e={} sigma={} interval={}",
                j + 1,
                fmt_num(m.expected),
                fmt_num(m.sigma),
                fmt_interval(&m.interval),
            );
        }
        let m = &outcome.output_moments[i];
        let _ = writeln!(
            s,
            "moment = {}/{obs} role=Y e={} sigma={} interval={}",
            outcome.output_group,
            fmt_num(m.expected),
            fmt_num(m.sigma),
            fmt_interval(&m.interval),
        );
    }

    let _ = writeln!(s, "\n[fit]");
    for (j, c) in outcome.fit.coefficients.iter().enumerate() {
        let _ = writeln!(
            s,
            "coefficient = A{} lower={} upper={} center={}",
            j + 1,
            fmt_num(c.lower),
            fmt_num(c.upper),
            fmt_num(c.center()),
        );
    }
    let _ = writeln!(s, "objective = {}", fmt_num(outcome.fit.objective));
    let _ = writeln!(
        s,
        "terminated_by = {}",
        termination_name(outcome.fit.terminated_by)
    );
    let _ = writeln!(
        s,
        "s2 = {}",
        outcome
            .s2
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    for step in &outcome.fit.trace {
        let stage = match step.stage {
            TraceStage::Initial => "initial".to_string(),
            TraceStage::Signed { round } => format!("signed-{round}"),
            TraceStage::Augmented { round } => format!("augmented-{round}"),
        };
        let coefs = step
            .coefficients
            .iter()
            .map(|c| format!("[{}, {}]", fmt_num(c.lower), fmt_num(c.upper)))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(
            s,
            "trace = {stage} objective={} coefficients={coefs}",
            fmt_num(step.objective),
        );
    }

    let _ = writeln!(s, "\n[evaluation]");
    for c in &outcome.comparisons {
        let _ = writeln!(
            s,
            "row = {} observed={} predicted={} observed_weight={} predicted_weight={} \
             diff={} pct_error={} covered={}",
            c.label,
            fmt_interval(&c.observed),
            fmt_interval(&c.predicted),
            fmt_num(c.observed_weight),
            fmt_num(c.predicted_weight),
            fmt_num(c.abs_diff),
            fmt_num(c.pct_error),
            c.covered,
        );
    }
    let _ = writeln!(
        s,
        "coverage_rate = {}",
        fmt_num(outcome.metrics.coverage_rate)
    );
    let _ = writeln!(s, "mse_weight = {}", fmt_num(outcome.metrics.mse_weight));
    let _ = writeln!(s, "mape_weight = {}", fmt_num(outcome.metrics.mape_weight));

    let _ = writeln!(s, "\n[tests]");
    let anova = &outcome.tests.anova;
    let _ = writeln!(s, "anova_f = {}", fmt_num(anova.f_statistic));
    let _ = writeln!(s, "anova_p = {}", fmt_num(anova.p_value));
    let _ = writeln!(s, "anova_df = {},{}", anova.df_between, anova.df_within);
    let _ = writeln!(s, "anova_degenerate = {}", anova.degenerate);
    let t = &outcome.tests.t_test;
    let _ = writeln!(s, "t_stat = {}", fmt_num(t.t_statistic));
    let _ = writeln!(s, "t_p = {}", fmt_num(t.p_value));
    let _ = writeln!(s, "t_df = {}", t.df);
    s
}

/// Finds the first `key = value` line and parses the value as a number.
/// Used by tests and tooling that re-read reports.
pub fn lookup(report: &str, key: &str) -> Option<f64> {
    for line in report.lines() {
        if let Some((k, v)) = line.split_once('=') {
            if k.trim() == key {
                return v.trim().parse().ok();
            }
        }
    }
    None
}
