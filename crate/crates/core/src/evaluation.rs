//! Fit evaluation: interval comparisons, midpoint-weight error metrics, and
//! the two hypothesis tests used to judge observed vs predicted weights.
//!
//! The weight of an interval is its midpoint. Tail probabilities for the
//! Student-t and F statistics come from the regularized incomplete beta
//! function, evaluated with a Lentz continued fraction.

use crate::frv::Interval;
use crate::math;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Absolute slack allowed when deciding interval coverage; matches the
/// tolerance at which LP solutions are validated, so a prediction that is
/// tight-by-construction still counts as covering.
const COVER_TOL: f64 = 1e-9;

/// One observed/predicted interval pair with its derived quantities.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalComparison {
    pub label: String,
    pub observed: Interval,
    pub predicted: Interval,
    pub observed_weight: f64,
    pub predicted_weight: f64,
    pub abs_diff: f64,
    /// `abs_diff / observed_weight`, as a fraction (not percent).
    pub pct_error: f64,
    /// Whether the predicted interval contains the observed one.
    pub covered: bool,
}

/// Aggregate metrics over a comparison set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricsReport {
    pub coverage_rate: f64,
    pub mse_weight: f64,
    /// Mean absolute percentage error, as a fraction.
    pub mape_weight: f64,
}

/// Two-group one-way ANOVA outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnovaResult {
    pub f_statistic: f64,
    pub p_value: f64,
    pub df_between: usize,
    pub df_within: usize,
    /// Set when the within-group variance is zero with nonzero
    /// between-group variance; `p_value` is then reported as 0.
    pub degenerate: bool,
}

/// Paired t-test outcome (two-sided).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TTestResult {
    pub t_statistic: f64,
    pub p_value: f64,
    pub df: usize,
}

/// Both hypothesis tests over one observed/predicted weight pairing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestReport {
    pub anova: AnovaResult,
    pub t_test: TTestResult,
}

#[derive(Debug, Clone, PartialEq)]
pub enum EvalError {
    LengthMismatch { observed: usize, predicted: usize },
    Empty,
    ZeroObservedWeight { index: usize },
    GroupTooSmall { size: usize },
    ZeroDifferenceVariance,
    NonPositiveDegreesOfFreedom,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::LengthMismatch {
                observed,
                predicted,
            } => write!(
                f,
                "observed ({observed}) and predicted ({predicted}) lengths differ"
            ),
            EvalError::Empty => write!(f, "nothing to compare"),
            EvalError::ZeroObservedWeight { index } => {
                write!(f, "observed weight at index {index} is zero")
            }
            EvalError::GroupTooSmall { size } => {
                write!(f, "each group needs at least 2 values, got {size}")
            }
            EvalError::ZeroDifferenceVariance => {
                write!(f, "paired differences have zero variance")
            }
            EvalError::NonPositiveDegreesOfFreedom => {
                write!(f, "degrees of freedom must be positive")
            }
        }
    }
}

impl core::error::Error for EvalError {}

/// The weight of an interval: its midpoint.
pub fn midpoint_weight(iv: &Interval) -> f64 {
    iv.midpoint()
}

/// Compares observed and predicted intervals pairwise, labeling rows
/// `1..=n`.
pub fn compare_all(
    observed: &[Interval],
    predicted: &[Interval],
) -> Result<(Vec<IntervalComparison>, MetricsReport), EvalError> {
    let labels: Vec<String> = (1..=observed.len()).map(|i| i.to_string()).collect();
    compare_all_labeled(&labels, observed, predicted)
}

/// Compares observed and predicted intervals pairwise with caller labels.
pub fn compare_all_labeled(
    labels: &[String],
    observed: &[Interval],
    predicted: &[Interval],
) -> Result<(Vec<IntervalComparison>, MetricsReport), EvalError> {
    if observed.len() != predicted.len() || labels.len() != observed.len() {
        return Err(EvalError::LengthMismatch {
            observed: observed.len(),
            predicted: predicted.len(),
        });
    }
    if observed.is_empty() {
        return Err(EvalError::Empty);
    }
    let mut rows = Vec::with_capacity(observed.len());
    let mut mse = 0.0;
    let mut mape = 0.0;
    let mut covered_count = 0usize;
    for (index, ((obs, pred), label)) in observed.iter().zip(predicted).zip(labels).enumerate() {
        let ow = midpoint_weight(obs);
        let pw = midpoint_weight(pred);
        if ow == 0.0 {
            return Err(EvalError::ZeroObservedWeight { index });
        }
        let abs_diff = (pw - ow).abs();
        let pct_error = abs_diff / ow.abs();
        let covered = pred.contains(obs, COVER_TOL);
        if covered {
            covered_count += 1;
        }
        mse += abs_diff * abs_diff;
        mape += pct_error;
        rows.push(IntervalComparison {
            label: label.clone(),
            observed: *obs,
            predicted: *pred,
            observed_weight: ow,
            predicted_weight: pw,
            abs_diff,
            pct_error,
            covered,
        });
    }
    let n = observed.len() as f64;
    let report = MetricsReport {
        coverage_rate: covered_count as f64 / n,
        mse_weight: mse / n,
        mape_weight: mape / n,
    };
    Ok((rows, report))
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Two-group one-way ANOVA: `F = MSB / MSW` with df `(1, nA + nB - 2)`.
pub fn one_way_anova(group_a: &[f64], group_b: &[f64]) -> Result<AnovaResult, EvalError> {
    for g in [group_a, group_b] {
        if g.len() < 2 {
            return Err(EvalError::GroupTooSmall { size: g.len() });
        }
    }
    let (na, nb) = (group_a.len() as f64, group_b.len() as f64);
    let (ma, mb) = (mean(group_a), mean(group_b));
    let grand = (na * ma + nb * mb) / (na + nb);
    let ssb = na * (ma - grand) * (ma - grand) + nb * (mb - grand) * (mb - grand);
    let ssw: f64 = group_a.iter().map(|x| (x - ma) * (x - ma)).sum::<f64>()
        + group_b.iter().map(|x| (x - mb) * (x - mb)).sum::<f64>();
    let df_between = 1usize;
    let df_within = group_a.len() + group_b.len() - 2;
    if ssw == 0.0 {
        if ssb == 0.0 {
            return Ok(AnovaResult {
                f_statistic: 0.0,
                p_value: 1.0,
                df_between,
                df_within,
                degenerate: false,
            });
        }
        return Ok(AnovaResult {
            f_statistic: f64::INFINITY,
            p_value: 0.0,
            df_between,
            df_within,
            degenerate: true,
        });
    }
    let f = (ssb / df_between as f64) / (ssw / df_within as f64);
    let p = f_upper_tail(f, df_between as f64, df_within as f64)?;
    Ok(AnovaResult {
        f_statistic: f,
        p_value: p,
        df_between,
        df_within,
        degenerate: false,
    })
}

/// Paired two-sided t-test: `t = mean(d) / (sd(d) / sqrt(n))`, df `n - 1`.
pub fn paired_t(a: &[f64], b: &[f64]) -> Result<TTestResult, EvalError> {
    if a.len() != b.len() {
        return Err(EvalError::LengthMismatch {
            observed: a.len(),
            predicted: b.len(),
        });
    }
    if a.len() < 2 {
        return Err(EvalError::GroupTooSmall { size: a.len() });
    }
    let diffs: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    let n = diffs.len() as f64;
    let m = mean(&diffs);
    let var = diffs.iter().map(|d| (d - m) * (d - m)).sum::<f64>() / (n - 1.0);
    if var == 0.0 {
        return Err(EvalError::ZeroDifferenceVariance);
    }
    let t = m / (math::sqrt(var) / math::sqrt(n));
    let df = diffs.len() - 1;
    let p = student_t_two_sided(t, df as f64)?;
    Ok(TTestResult {
        t_statistic: t,
        p_value: p,
        df,
    })
}

/// Tail distributions exposed by [`tail_probability`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailDistribution {
    /// Two-sided Student-t tail at the given degrees of freedom.
    StudentTTwoSided { df: f64 },
    /// Upper F tail at the given numerator/denominator degrees of freedom.
    FUpper { df1: f64, df2: f64 },
}

/// Tail probability of a statistic under the named distribution.
pub fn tail_probability(dist: TailDistribution, statistic: f64) -> Result<f64, EvalError> {
    match dist {
        TailDistribution::StudentTTwoSided { df } => student_t_two_sided(statistic, df),
        TailDistribution::FUpper { df1, df2 } => f_upper_tail(statistic, df1, df2),
    }
}

/// Two-sided Student-t p-value via `I_x(df/2, 1/2)` at `x = df/(df + t^2)`.
pub fn student_t_two_sided(t: f64, df: f64) -> Result<f64, EvalError> {
    if df <= 0.0 {
        return Err(EvalError::NonPositiveDegreesOfFreedom);
    }
    let x = df / (df + t * t);
    Ok(regularized_incomplete_beta(0.5 * df, 0.5, x))
}

/// Upper F tail via `I_x(df2/2, df1/2)` at `x = df2/(df2 + df1 * f)`.
pub fn f_upper_tail(f_stat: f64, df1: f64, df2: f64) -> Result<f64, EvalError> {
    if df1 <= 0.0 || df2 <= 0.0 {
        return Err(EvalError::NonPositiveDegreesOfFreedom);
    }
    if f_stat <= 0.0 {
        return Ok(1.0);
    }
    if f_stat.is_infinite() {
        return Ok(0.0);
    }
    let x = df2 / (df2 + df1 * f_stat);
    Ok(regularized_incomplete_beta(0.5 * df2, 0.5 * df1, x))
}

/// Natural log of the gamma function (Lanczos, g = 7, 9 terms).
pub fn ln_gamma(z: f64) -> f64 {
    const COEFFS: [f64; 8] = [
        676.5203681218851,
        -1259.1392167224028,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507343278686905,
        -0.13857109526572012,
        9.984_369_578_019_572e-6,
        1.5056327351493116e-7,
    ];
    const PI: f64 = core::f64::consts::PI;
    if z < 0.5 {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        math::ln(PI / libm::sin(PI * z)) - ln_gamma(1.0 - z)
    } else {
        let z = z - 1.0;
        let mut x = 0.999_999_999_999_809_9;
        for (i, c) in COEFFS.iter().enumerate() {
            x += c / (z + (i + 1) as f64);
        }
        let t = z + 7.5;
        0.5 * math::ln(2.0 * PI) + (z + 0.5) * math::ln(t) - t + math::ln(x)
    }
}

/// Regularized incomplete beta function `I_x(a, b)` by continued fraction.
pub fn regularized_incomplete_beta(a: f64, b: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front =
        ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * math::ln(x) + b * math::ln(1.0 - x);
    let front = math::exp(ln_front);
    if x < (a + 1.0) / (a + b + 2.0) {
        front * beta_continued_fraction(a, b, x) / a
    } else {
        1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b
    }
}

/// Lentz's algorithm for the incomplete-beta continued fraction.
fn beta_continued_fraction(a: f64, b: f64, x: f64) -> f64 {
    const EPS: f64 = 1e-15;
    const TINY: f64 = 1e-300;
    const MAX_ITER: usize = 300;

    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=MAX_ITER {
        let mf = m as f64;
        let m2 = 2.0 * mf;
        let aa = mf * (b - mf) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + mf) * (qab + mf) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    h
}
