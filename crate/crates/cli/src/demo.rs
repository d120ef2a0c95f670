//! The bundled case-study demo: runs the full pipeline on the embedded
//! survey and prints a side-by-side diff against the published values,
//! one PASS/FAIL line per quantity. Rows whose published values are known
//! to be internally inconsistent are flagged KNOWN-DISCREPANCY instead.

use crate::config::RunConfig;
use crate::pipeline::{analyze, AnalysisOutcome};
use crate::survey::Survey;
use crate::{reference, report, CliError};
use std::fmt::Write as _;

pub const BUNDLED_SURVEY: &str = include_str!("../data/case_study_survey.csv");
pub const BUNDLED_CONFIG: &str = include_str!("../data/case_study_config.cfg");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineStatus {
    Pass,
    Fail,
    KnownDiscrepancy,
}

pub struct DemoLine {
    pub label: String,
    pub detail: String,
    pub status: LineStatus,
}

pub struct DemoReport {
    pub lines: Vec<DemoLine>,
    pub outcome: AnalysisOutcome,
}

/// Parses the embedded survey and configuration.
pub fn bundled_inputs() -> Result<(Survey, RunConfig), CliError> {
    let survey = Survey::parse("case_study_survey.csv", BUNDLED_SURVEY)?;
    let config = RunConfig::parse("case_study_config.cfg", BUNDLED_CONFIG)?;
    Ok((survey, config))
}

fn check(
    lines: &mut Vec<DemoLine>,
    label: &str,
    computed: f64,
    published: f64,
    tolerance: f64,
    note: Option<&str>,
) {
    let within = (computed - published).abs() <= tolerance;
    let status = match note {
        Some(_) => LineStatus::KnownDiscrepancy,
        None if within => LineStatus::Pass,
        None => LineStatus::Fail,
    };
    let mut detail = format!(
        "computed={computed:.4} published={published} tol={tolerance}"
    );
    if let Some(n) = note {
        detail.push_str(&format!(" note: {n}"));
    }
    lines.push(DemoLine {
        label: label.to_string(),
        detail,
        status,
    });
}

/// Runs the demo and assembles its comparison lines.
pub fn run() -> Result<DemoReport, CliError> {
    let (survey, config) = bundled_inputs()?;
    let outcome = analyze(&survey, &config)?;
    let mut lines = Vec::new();

    // Type reduction against the published probability triples.
    for pref in &reference::PROBABILITIES {
        let cell = outcome
            .cells
            .iter()
            .find(|c| format!("{}/{}", c.group, c.category) == pref.cell)
            .expect("bundled survey covers every published cell");
        for (k, (_, p)) in cell.reduced.components().iter().enumerate() {
            check(
                &mut lines,
                &format!("probability {} #{}", pref.cell, k + 1),
                *p,
                pref.probabilities[k],
                pref.tolerance[k],
                if pref.tolerance[k] > 0.01 { pref.note } else { None },
            );
        }
    }

    // Moments.
    for (i, obs) in outcome.observations.iter().enumerate() {
        for (j, group) in outcome.input_groups.iter().enumerate() {
            let key = format!("{group}/{obs}");
            let m = &outcome.input_moments[i][j];
            if let Some(r) = reference::MOMENTS.iter().find(|r| r.cell == key) {
                moment_lines(&mut lines, &key, m, r);
            }
        }
        let key = format!("{}/{obs}", outcome.output_group);
        if let Some(r) = reference::MOMENTS.iter().find(|r| r.cell == key) {
            moment_lines(&mut lines, &key, &outcome.output_moments[i], r);
        }
    }

    // Fit stages.
    let step1 = outcome
        .fit
        .trace
        .first()
        .map(|s| s.objective)
        .unwrap_or(f64::NAN);
    check(
        &mut lines,
        "objective step-1",
        step1,
        reference::STEP1_OBJECTIVE.0,
        reference::STEP1_OBJECTIVE.1,
        None,
    );
    check(
        &mut lines,
        "objective final",
        outcome.fit.objective,
        reference::FINAL_OBJECTIVE.0,
        reference::FINAL_OBJECTIVE.1,
        None,
    );
    for (j, ((lo, hi), tol)) in reference::COEFFICIENTS.iter().enumerate() {
        let c = &outcome.fit.coefficients[j];
        check(&mut lines, &format!("coefficient A{} lower", j + 1), c.lower, *lo, *tol, None);
        check(&mut lines, &format!("coefficient A{} upper", j + 1), c.upper, *hi, *tol, None);
    }
    let s2_matches = outcome.s2 == reference::S2.to_vec();
    lines.push(DemoLine {
        label: "violating vertex set".into(),
        detail: format!(
            "computed={:?} published={:?}",
            outcome.s2,
            reference::S2
        ),
        status: if s2_matches {
            LineStatus::Pass
        } else {
            LineStatus::Fail
        },
    });

    // Predictions and per-row errors.
    for (i, pref) in reference::PREDICTIONS.iter().enumerate() {
        let p = &outcome.predictions[i];
        check(
            &mut lines,
            &format!("prediction {} lower", pref.label),
            p.lower(),
            pref.interval.0,
            pref.tolerance,
            pref.note,
        );
        check(
            &mut lines,
            &format!("prediction {} upper", pref.label),
            p.upper(),
            pref.interval.1,
            pref.tolerance,
            pref.note,
        );
    }
    for (i, rref) in reference::ROW_MAPE.iter().enumerate() {
        check(
            &mut lines,
            &format!("row MAPE {}", rref.label),
            outcome.comparisons[i].pct_error * 100.0,
            rref.mape_percent,
            rref.tolerance,
            rref.note,
        );
    }
    check(
        &mut lines,
        "coverage rate",
        outcome.metrics.coverage_rate,
        reference::COVERAGE_RATE,
        0.0,
        None,
    );
    check(
        &mut lines,
        "overall MAPE %",
        outcome.metrics.mape_weight * 100.0,
        reference::OVERALL_MAPE_PERCENT.0,
        reference::OVERALL_MAPE_PERCENT.1,
        None,
    );
    let (mse_lo, mse_hi) = reference::MSE_RANGE;
    let mse = outcome.metrics.mse_weight;
    lines.push(DemoLine {
        label: "MSE of weight".into(),
        detail: format!("computed={mse:.4} published range=[{mse_lo}, {mse_hi}]"),
        status: if (mse_lo..=mse_hi).contains(&mse) {
            LineStatus::Pass
        } else {
            LineStatus::Fail
        },
    });
    check(
        &mut lines,
        "paired t statistic",
        outcome.tests.t_test.t_statistic,
        reference::T_STATISTIC.0,
        reference::T_STATISTIC.1,
        None,
    );
    check(
        &mut lines,
        "paired t p-value",
        outcome.tests.t_test.p_value,
        reference::T_P_VALUE.0,
        reference::T_P_VALUE.1,
        None,
    );
    check(
        &mut lines,
        "ANOVA F statistic",
        outcome.tests.anova.f_statistic,
        reference::F_STATISTIC.0,
        reference::F_STATISTIC.1,
        None,
    );
    check(
        &mut lines,
        "ANOVA p-value",
        outcome.tests.anova.p_value,
        reference::F_P_VALUE.0,
        reference::F_P_VALUE.1,
        None,
    );

    Ok(DemoReport { lines, outcome })
}

/// Renders the demo lines (and optionally the full report) as text.
pub fn render(demo: &DemoReport, verbose: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "bundled case-study demo: pipeline vs published values");
    let _ = writeln!(s, "------------------------------------------------------");
    let mut pass = 0;
    let mut fail = 0;
    let mut known = 0;
    for line in &demo.lines {
        let tag = match line.status {
            LineStatus::Pass => {
                pass += 1;
                "PASS"
            }
            LineStatus::Fail => {
                fail += 1;
                "FAIL"
            }
            LineStatus::KnownDiscrepancy => {
                known += 1;
                "KNOWN-DISCREPANCY"
            }
        };
        let _ = writeln!(s, "{tag:<18} {:<28} {}", line.label, line.detail);
    }
    let _ = writeln!(
        s,
        "------------------------------------------------------"
    );
    let _ = writeln!(
        s,
        "{pass} pass, {fail} fail, {known} known discrepancies"
    );
    if verbose {
        let _ = writeln!(s, "\nfull report\n-----------");
        s.push_str(&report::render(&demo.outcome, None));
    }
    s
}

fn moment_lines(
    lines: &mut Vec<DemoLine>,
    key: &str,
    m: &crate::pipeline::MomentCell,
    r: &reference::MomentRef,
) {
    check(lines, &format!("e {key}"), m.expected, r.e, r.e_tol, None);
    check(
        lines,
        &format!("sigma {key}"),
        m.sigma,
        r.sigma,
        r.sigma_tol,
        r.sigma_note,
    );
    check(
        lines,
        &format!("interval {key} lower"),
        m.interval.lower(),
        r.interval.0,
        r.interval_tol,
        r.interval_note,
    );
    check(
        lines,
        &format!("interval {key} upper"),
        m.interval.upper(),
        r.interval.1,
        r.interval_tol,
        r.interval_note,
    );
}
