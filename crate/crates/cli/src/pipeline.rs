//! Pipeline orchestration: survey rows through type reduction, the moment
//! stage, the regression fit, prediction, and evaluation.

use crate::config::RunConfig;
use crate::survey::Survey;
use crate::CliError;
use lingreg_core::evaluation::{
    compare_all_labeled, one_way_anova, paired_t, IntervalComparison, MetricsReport, TestReport,
};
use lingreg_core::frv::{DiscreteFuzzyRandomVariable, Interval};
use lingreg_core::linguistic::{reduce_group, tabulate, LinguisticItem, T2FTerm};
use lingreg_core::regression::{self, ModelFit, RegressionError, RegressionProblem};

/// Moments of one fuzzy random cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentCell {
    pub expected: f64,
    pub sigma: f64,
    pub interval: Interval,
}

/// One reduced survey group/category with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedCell {
    pub group: String,
    pub category: String,
    /// Full-precision reduction of the group's items.
    pub reduced: DiscreteFuzzyRandomVariable,
    /// The variable actually used by the moment stage (equals `reduced`
    /// unless probability quantization is configured).
    pub effective: DiscreteFuzzyRandomVariable,
}

/// Everything the pipeline computed for one survey.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisOutcome {
    /// Observation labels: the category names, in output-group order.
    pub observations: Vec<String>,
    /// Input group names in coefficient order.
    pub input_groups: Vec<String>,
    pub output_group: String,
    /// Reduced cells: inputs first (group-major), then the output group.
    pub cells: Vec<ReducedCell>,
    /// N x J input moments.
    pub input_moments: Vec<Vec<MomentCell>>,
    /// N output moments.
    pub output_moments: Vec<MomentCell>,
    pub problem: RegressionProblem,
    pub fit: ModelFit,
    /// Violating vertices of the final sign-resolved solve (1-based).
    pub s2: Vec<usize>,
    pub predictions: Vec<Interval>,
    pub comparisons: Vec<IntervalComparison>,
    pub metrics: MetricsReport,
    pub tests: TestReport,
}

fn moments_of(x: &DiscreteFuzzyRandomVariable) -> MomentCell {
    MomentCell {
        expected: x.expected_value(),
        sigma: x.std_dev(),
        interval: x.one_sigma_interval(),
    }
}

/// Runs the full pipeline on a parsed survey under a configuration.
pub fn analyze(survey: &Survey, config: &RunConfig) -> Result<AnalysisOutcome, CliError> {
    let lexicon = config.lexicon()?;
    let input_rule = config.spread_rule()?;
    let output_rule = config.output_spread_rule()?;
    let output_group = config.output.clone().ok_or_else(|| CliError::Data {
        message: "role map incomplete: configuration names no output group".into(),
    })?;
    if config.inputs.is_empty() {
        return Err(CliError::Data {
            message: "role map incomplete: configuration names no input groups".into(),
        });
    }

    // The role map must cover the survey's groups exactly once.
    let survey_groups = survey.groups();
    let mut role_groups: Vec<&String> = config.inputs.iter().collect();
    role_groups.push(&output_group);
    for g in &role_groups {
        if !survey_groups.contains(g) {
            return Err(CliError::Data {
                message: format!("role map incomplete: survey has no group {g:?}"),
            });
        }
    }
    for g in &survey_groups {
        if !role_groups.contains(&g) {
            return Err(CliError::Data {
                message: format!("role map incomplete: survey group {g:?} has no role"),
            });
        }
    }
    if role_groups.len() != survey_groups.len() {
        return Err(CliError::Data {
            message: "role map incomplete: a group is named twice".into(),
        });
    }

    // Observations are the output group's categories; all groups must
    // carry the same category set.
    let observations = survey.categories_of(&output_group);
    for g in &survey_groups {
        let mut cats = survey.categories_of(g);
        cats.sort();
        let mut expected = observations.clone();
        expected.sort();
        if cats != expected {
            return Err(CliError::Data {
                message: format!(
                    "group {g:?} covers categories {cats:?} but the output group \
                     covers {expected:?}"
                ),
            });
        }
    }

    let reduce_cell = |group: &str,
                       category: &str,
                       rule: &lingreg_core::linguistic::SpreadRule|
     -> Result<ReducedCell, CliError> {
        let rows = survey.items_of(group, category);
        let terms: Vec<T2FTerm> = rows
            .iter()
            .map(|row| {
                let item = LinguisticItem {
                    label: format!("{}/{}/{} (line {})", row.group, row.category, row.item, row.line),
                    sales_target: row.sales_target,
                    responses: row.responses.clone(),
                };
                tabulate(&item, &lexicon).map_err(|e| CliError::Data {
                    message: e.to_string(),
                })
            })
            .collect::<Result<_, _>>()?;
        let reduced = reduce_group(&terms, rule).map_err(|e| CliError::Data {
            message: format!("{group}/{category}: {e}"),
        })?;
        let effective = match config.probability_decimals {
            Some(decimals) => reduced
                .quantize_probabilities_within(decimals, config.probability_tolerance)
                .map_err(|e| CliError::Data {
                    message: format!("{group}/{category}: quantization failed: {e}"),
                })?,
            None => reduced.clone(),
        };
        Ok(ReducedCell {
            group: group.to_string(),
            category: category.to_string(),
            reduced,
            effective,
        })
    };

    let mut cells: Vec<ReducedCell> = Vec::new();
    let mut inputs: Vec<Vec<DiscreteFuzzyRandomVariable>> =
        vec![Vec::new(); observations.len()];
    for group in &config.inputs {
        for (i, category) in observations.iter().enumerate() {
            let cell = reduce_cell(group, category, &input_rule)?;
            inputs[i].push(cell.effective.clone());
            cells.push(cell);
        }
    }
    let mut outputs: Vec<DiscreteFuzzyRandomVariable> = Vec::new();
    for category in &observations {
        let cell = reduce_cell(&output_group, category, &output_rule)?;
        outputs.push(cell.effective.clone());
        cells.push(cell);
    }

    let input_moments: Vec<Vec<MomentCell>> = inputs
        .iter()
        .map(|row| row.iter().map(moments_of).collect())
        .collect();
    let output_moments: Vec<MomentCell> = outputs.iter().map(moments_of).collect();

    let problem = regression::build_problem(&inputs, &outputs, config.h_level)
        .map_err(internal_regression_error)?;
    let fit = regression::fit(&problem, &config.fit_config()).map_err(|e| match e {
        RegressionError::NoFeasibleFit => CliError::Infeasible {
            message: e.to_string(),
        },
        other => internal_regression_error(other),
    })?;
    let s2 = regression::classify_vertices(&fit.coefficients, &problem, config.vertex_check_mode)
        .map_err(internal_regression_error)?
        .1;

    let predictions: Vec<Interval> = (0..problem.num_observations())
        .map(|i| {
            let row: Vec<Interval> = (0..problem.num_features())
                .map(|j| problem.input(i, j).interval)
                .collect();
            regression::predict(&fit.coefficients, &row)
        })
        .collect();
    let observed: Vec<Interval> = (0..problem.num_observations())
        .map(|i| *problem.output(i))
        .collect();
    let (comparisons, metrics) = compare_all_labeled(&observations, &observed, &predictions)
        .map_err(|e| CliError::Internal {
            message: e.to_string(),
        })?;

    let observed_weights: Vec<f64> = comparisons.iter().map(|c| c.observed_weight).collect();
    let predicted_weights: Vec<f64> = comparisons.iter().map(|c| c.predicted_weight).collect();
    let anova = one_way_anova(&observed_weights, &predicted_weights).map_err(|e| {
        CliError::Internal {
            message: e.to_string(),
        }
    })?;
    let t_test = paired_t(&predicted_weights, &observed_weights).map_err(|e| CliError::Internal {
        message: e.to_string(),
    })?;

    Ok(AnalysisOutcome {
        observations,
        input_groups: config.inputs.clone(),
        output_group,
        cells,
        input_moments,
        output_moments,
        problem,
        fit,
        s2,
        predictions,
        comparisons,
        metrics,
        tests: TestReport { anova, t_test },
    })
}

fn internal_regression_error(e: RegressionError) -> CliError {
    CliError::Internal {
        message: e.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundled() -> (Survey, RunConfig) {
        let survey = Survey::parse(
            "case_study_survey.csv",
            include_str!("../data/case_study_survey.csv"),
        )
        .unwrap();
        let config = RunConfig::parse(
            "case_study_config.cfg",
            include_str!("../data/case_study_config.cfg"),
        )
        .unwrap();
        (survey, config)
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn case_study_end_to_end() {
        let (survey, config) = bundled();
        let out = analyze(&survey, &config).unwrap();
        assert_eq!(out.observations, vec!["A", "B", "C", "D"]);
        assert_eq!(out.input_moments.len(), 4);
        assert_close(out.input_moments[0][0].expected, 6.70, 0.01);
        assert_close(out.input_moments[0][0].sigma, 2.51, 0.01);
        assert_close(out.fit.objective, 0.93, 0.02);
        assert_close(out.fit.coefficients[0].lower, 1.42, 0.02);
        assert_close(out.fit.coefficients[0].upper, 2.35, 0.02);
        assert_close(out.fit.coefficients[1].lower, 0.0, 0.01);
        assert_close(out.fit.coefficients[1].upper, 0.0, 0.01);
        assert_eq!(out.s2, vec![3, 4, 7, 8, 11, 12, 15, 16]);
        assert_close(out.metrics.mape_weight * 100.0, 7.97, 0.1);
        assert_eq!(out.metrics.coverage_rate, 1.0);
    }

    #[test]
    fn missing_group_is_role_map_error() {
        let (survey, mut config) = bundled();
        config.inputs = vec!["women".into(), "teens".into()];
        match analyze(&survey, &config) {
            Err(CliError::Data { message }) => {
                assert!(message.contains("role map"), "{message}");
                assert!(message.contains("teens"), "{message}");
            }
            other => panic!("expected role-map error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_term_names_row_and_term() {
        let text = "\
g1,A,1,5,allways,often
boss,A,1,10,often,often
";
        let survey = Survey::parse("s.csv", text).unwrap();
        let mut config = RunConfig::default();
        config.inputs = vec!["g1".into()];
        config.output = Some("boss".into());
        match analyze(&survey, &config) {
            Err(CliError::Data { message }) => {
                assert!(message.contains("allways"), "{message}");
                assert!(message.contains("g1/A/1"), "{message}");
                assert!(message.contains("line 1"), "{message}");
            }
            other => panic!("expected unknown-term error, got {other:?}"),
        }
    }
}
