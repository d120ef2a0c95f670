//! Interval-coefficient linear regression over one-sigma confidence
//! intervals, fitted by a sign-case heuristic.
//!
//! Step 1 fits interval coefficients against the data centers with a free
//! LP. The signs of that solution pick one product scenario per coefficient
//! (the coefficient-by-interval product table), which turns the inclusion
//! constraints into a second LP over the interval endpoints. The sign loop
//! repeats until the solution's signs stop flipping, then every data vertex
//! is checked against the fitted lines; violated vertices are added as
//! constraints and the LP re-solved once. If that re-solve does not improve
//! on the incumbent, the incumbent stands (the default policy), or the
//! augmented solution is adopted and re-checked until no vertex complains
//! (the accepting policy).

use crate::frv::{DiscreteFuzzyRandomVariable, Interval};
use crate::lp::{self, LinearProgram, LpError, LpStatus, Relation, VarKind};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Slack applied to vertex feasibility checks, matching the tolerance at
/// which reported LP solutions are validated.
const VERTEX_TOL: f64 = 1e-7;
/// Minimum objective decrease for an augmented re-solve to displace the
/// incumbent under [`AugmentationPolicy::KeepIncumbent`].
const IMPROVEMENT_TOL: f64 = 1e-9;

/// One regression datum: a confidence interval and its center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservationCell {
    pub interval: Interval,
    pub center: f64,
}

/// Observations as interval inputs with centers and interval outputs.
#[derive(Debug, Clone, PartialEq)]
pub struct RegressionProblem {
    inputs: Vec<Vec<ObservationCell>>,
    outputs: Vec<Interval>,
    h_level: f64,
}

/// An interval coefficient `[lower, upper]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzyCoefficient {
    pub lower: f64,
    pub upper: f64,
}

impl FuzzyCoefficient {
    pub fn new(lower: f64, upper: f64) -> Self {
        Self { lower, upper }
    }

    /// Midpoint, used when presenting the coefficient as a triangle
    /// `(center; lower; upper)`.
    pub fn center(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn as_interval(&self) -> Interval {
        Interval::new(self.lower, self.upper).expect("coefficient endpoints ordered")
    }
}

/// Sign class of a data interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DataSign {
    /// Whole interval at or above zero.
    NonNegative,
    /// Whole interval at or below zero.
    NonPositive,
    /// Interval straddles zero.
    Straddling,
}

/// Sign class of a coefficient interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefSign {
    NonNegative,
    Straddling,
    NonPositive,
}

/// Joint sign classification of one coefficient-by-datum product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignCase {
    pub data: DataSign,
    pub coef: CoefSign,
}

impl DataSign {
    pub fn classify(interval: &Interval) -> Self {
        if interval.lower() >= 0.0 {
            DataSign::NonNegative
        } else if interval.upper() <= 0.0 {
            DataSign::NonPositive
        } else {
            DataSign::Straddling
        }
    }
}

impl CoefSign {
    pub fn classify(lower: f64, upper: f64) -> Self {
        if lower >= 0.0 {
            CoefSign::NonNegative
        } else if upper <= 0.0 {
            CoefSign::NonPositive
        } else {
            CoefSign::Straddling
        }
    }
}

impl SignCase {
    pub fn classify(coef: &FuzzyCoefficient, data: &Interval) -> Self {
        Self {
            data: DataSign::classify(data),
            coef: CoefSign::classify(coef.lower, coef.upper),
        }
    }
}

/// Which sides of the observed interval a vertex must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexCheckMode {
    /// Only the lower line: `sum_j lower_j * v_j <= lower(Y_i)`.
    LowerLineOnly,
    /// Both lines: additionally `sum_j upper_j * v_j >= upper(Y_i)`.
    FullInclusion,
}

/// What to do with the vertex-augmented re-solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AugmentationPolicy {
    /// Keep the pre-augmentation incumbent unless the re-solve strictly
    /// improves the objective (it cannot: constraints were added), then
    /// stop. This reproduces the published run of the heuristic.
    KeepIncumbent,
    /// Adopt each feasible augmented solution and re-check vertices until
    /// none complain.
    Accept,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitConfig {
    pub max_iterations: usize,
    pub vertex_mode: VertexCheckMode,
    pub augmentation: AugmentationPolicy,
}

impl Default for FitConfig {
    fn default() -> Self {
        Self {
            max_iterations: 20,
            vertex_mode: VertexCheckMode::LowerLineOnly,
            augmentation: AugmentationPolicy::KeepIncumbent,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// Signs stabilized and every vertex passed; no augmentation needed.
    SignStable,
    /// The sign loop hit its iteration cap before stabilizing.
    MaxIterations,
    /// Vertex augmentation ran and converged (incumbent kept or augmented
    /// solution adopted with no remaining violations).
    AugmentationConverged,
}

/// One recorded stage of the fit.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceStep {
    pub stage: TraceStage,
    pub coefficients: Vec<FuzzyCoefficient>,
    pub objective: f64,
    /// Sign classes the LP of this stage assumed (empty for the initial LP).
    pub assumed_signs: Vec<CoefSign>,
    /// Violating vertices found **after** this stage's solve, as 1-based
    /// global vertex indices.
    pub s2: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceStage {
    Initial,
    Signed { round: usize },
    Augmented { round: usize },
}

/// Result of [`fit`].
#[derive(Debug, Clone, PartialEq)]
pub struct ModelFit {
    pub coefficients: Vec<FuzzyCoefficient>,
    pub objective: f64,
    pub trace: Vec<TraceStep>,
    pub terminated_by: Termination,
}

/// One endpoint-combination of an observation's input intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct Vertex {
    /// 0-based observation index.
    pub observation: usize,
    /// Per-feature endpoint choice: `false` = lower, `true` = upper.
    pub choices: Vec<bool>,
    /// The chosen endpoint values.
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RegressionError {
    EmptyProblem,
    DimensionMismatch { expected: usize, got: usize },
    CenterOutsideInterval { observation: usize, feature: usize },
    InvalidHLevel { h: f64 },
    TooManyFeatures { features: usize, limit: usize },
    /// The initial centered LP admits no interval-inclusion fit.
    NoFeasibleFit,
    Lp(LpError),
}

impl fmt::Display for RegressionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegressionError::EmptyProblem => write!(f, "problem needs observations and features"),
            RegressionError::DimensionMismatch { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
            RegressionError::CenterOutsideInterval {
                observation,
                feature,
            } => write!(
                f,
                "center outside interval at observation {observation}, feature {feature}"
            ),
            RegressionError::InvalidHLevel { h } => {
                write!(f, "h level {h} outside [0, 1)")
            }
            RegressionError::TooManyFeatures { features, limit } => write!(
                f,
                "{features} features exceed the vertex-enumeration limit {limit}; \
                 vertex checks are infeasible at this width"
            ),
            RegressionError::NoFeasibleFit => {
                write!(f, "no interval-inclusion fit exists for these observations")
            }
            RegressionError::Lp(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RegressionError {}

impl From<LpError> for RegressionError {
    fn from(e: LpError) -> Self {
        RegressionError::Lp(e)
    }
}

/// Vertex enumeration is capped at this feature count.
pub const MAX_VERTEX_FEATURES: usize = 20;

impl RegressionProblem {
    pub fn new(
        inputs: Vec<Vec<ObservationCell>>,
        outputs: Vec<Interval>,
        h_level: f64,
    ) -> Result<Self, RegressionError> {
        if inputs.is_empty() || inputs[0].is_empty() {
            return Err(RegressionError::EmptyProblem);
        }
        if inputs.len() != outputs.len() {
            return Err(RegressionError::DimensionMismatch {
                expected: inputs.len(),
                got: outputs.len(),
            });
        }
        let j = inputs[0].len();
        for (i, row) in inputs.iter().enumerate() {
            if row.len() != j {
                return Err(RegressionError::DimensionMismatch {
                    expected: j,
                    got: row.len(),
                });
            }
            for (k, cell) in row.iter().enumerate() {
                if !cell.interval.contains_value(cell.center) {
                    return Err(RegressionError::CenterOutsideInterval {
                        observation: i,
                        feature: k,
                    });
                }
            }
        }
        if !(0.0..1.0).contains(&h_level) {
            return Err(RegressionError::InvalidHLevel { h: h_level });
        }
        Ok(Self {
            inputs,
            outputs,
            h_level,
        })
    }

    pub fn num_observations(&self) -> usize {
        self.inputs.len()
    }

    pub fn num_features(&self) -> usize {
        self.inputs[0].len()
    }

    pub fn input(&self, i: usize, j: usize) -> &ObservationCell {
        &self.inputs[i][j]
    }

    pub fn output(&self, i: usize) -> &Interval {
        &self.outputs[i]
    }

    pub fn h_level(&self) -> f64 {
        self.h_level
    }
}

/// Builds a [`RegressionProblem`] from fuzzy random inputs and outputs:
/// each cell becomes its one-sigma interval plus expected value.
pub fn build_problem(
    inputs: &[Vec<DiscreteFuzzyRandomVariable>],
    outputs: &[DiscreteFuzzyRandomVariable],
    h_level: f64,
) -> Result<RegressionProblem, RegressionError> {
    let cells = inputs
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| ObservationCell {
                    interval: x.one_sigma_interval(),
                    center: x.expected_value(),
                })
                .collect()
        })
        .collect();
    let outs = outputs.iter().map(|y| y.one_sigma_interval()).collect();
    RegressionProblem::new(cells, outs, h_level)
}

// Variable layout shared by every LP here: [lo_0, hi_0, lo_1, hi_1, ...].
fn var_lo(j: usize) -> usize {
    2 * j
}

fn var_hi(j: usize) -> usize {
    2 * j + 1
}

fn width_objective(n_features: usize, extra_vars: usize) -> Vec<f64> {
    let mut c = vec![0.0; 2 * n_features + extra_vars];
    for j in 0..n_features {
        c[var_lo(j)] = -1.0;
        c[var_hi(j)] = 1.0;
    }
    c
}

fn ordering_rows(n_features: usize, n_vars: usize) -> Vec<(Vec<f64>, Relation, f64)> {
    (0..n_features)
        .map(|j| {
            let mut row = vec![0.0; n_vars];
            row[var_lo(j)] = -1.0;
            row[var_hi(j)] = 1.0;
            (row, Relation::Ge, 0.0)
        })
        .collect()
}

/// The centered LP of the heuristic's first step: free coefficients, data
/// centers on both lines, objective `sum_j (upper_j - lower_j)`.
pub fn initial_lp(problem: &RegressionProblem) -> LinearProgram {
    let j_count = problem.num_features();
    let n_vars = 2 * j_count;
    let mut constraints = Vec::with_capacity(2 * problem.num_observations() + j_count);
    for i in 0..problem.num_observations() {
        let mut low = vec![0.0; n_vars];
        let mut high = vec![0.0; n_vars];
        for j in 0..j_count {
            let e = problem.input(i, j).center;
            low[var_lo(j)] = e;
            high[var_hi(j)] = e;
        }
        constraints.push((low, Relation::Le, problem.output(i).lower()));
        constraints.push((high, Relation::Ge, problem.output(i).upper()));
    }
    constraints.extend(ordering_rows(j_count, n_vars));
    LinearProgram::new(
        width_objective(j_count, 0),
        constraints,
        vec![VarKind::Free; n_vars],
    )
    .expect("construction is dimensionally consistent")
}

/// Endpoint multipliers for one product scenario: which coefficient bound
/// multiplies which data endpoint on the lower and upper line.
fn scenario(case: SignCase, data: &Interval) -> ((bool, f64), (bool, f64)) {
    // Return ((use_hi_coef_on_lower_line, data endpoint), (use_hi, endpoint)).
    let lo = data.lower();
    let hi = data.upper();
    match (case.data, case.coef) {
        (DataSign::NonNegative, CoefSign::NonNegative) => ((false, lo), (true, hi)),
        (DataSign::NonNegative, CoefSign::Straddling) => ((false, hi), (true, hi)),
        (DataSign::NonNegative, CoefSign::NonPositive) => ((false, hi), (true, lo)),
        (DataSign::NonPositive, CoefSign::NonNegative) => ((true, lo), (false, hi)),
        (DataSign::NonPositive, CoefSign::Straddling) => ((true, lo), (false, lo)),
        (DataSign::NonPositive, CoefSign::NonPositive) => ((true, hi), (false, lo)),
        (DataSign::Straddling, CoefSign::NonNegative) => ((true, lo), (true, hi)),
        (DataSign::Straddling, CoefSign::NonPositive) => ((false, hi), (false, lo)),
        // Both straddling: the table's printed bounds understate the exact
        // product, so the constraint pair is anchored at the upper data
        // endpoint (a single member of the vertex family; conservative).
        (DataSign::Straddling, CoefSign::Straddling) => ((false, hi), (true, hi)),
    }
}

/// The sign-resolved LP: inclusion constraints built from the product
/// scenario of each cell, plus per-coefficient sign constraints.
pub fn signed_lp(problem: &RegressionProblem, coef_signs: &[CoefSign]) -> LinearProgram {
    let j_count = problem.num_features();
    assert_eq!(coef_signs.len(), j_count, "one sign class per coefficient");
    let n_vars = 2 * j_count;
    let mut constraints = Vec::new();
    for i in 0..problem.num_observations() {
        let mut low = vec![0.0; n_vars];
        let mut high = vec![0.0; n_vars];
        for j in 0..j_count {
            let cell = problem.input(i, j);
            let case = SignCase {
                data: DataSign::classify(&cell.interval),
                coef: coef_signs[j],
            };
            let ((lo_uses_hi, lo_e), (hi_uses_hi, hi_e)) = scenario(case, &cell.interval);
            let lo_var = if lo_uses_hi { var_hi(j) } else { var_lo(j) };
            let hi_var = if hi_uses_hi { var_hi(j) } else { var_lo(j) };
            low[lo_var] += lo_e;
            high[hi_var] += hi_e;
        }
        constraints.push((low, Relation::Le, problem.output(i).lower()));
        constraints.push((high, Relation::Ge, problem.output(i).upper()));
    }
    constraints.extend(ordering_rows(j_count, n_vars));
    for (j, sign) in coef_signs.iter().enumerate() {
        match sign {
            CoefSign::NonNegative => {
                let mut row = vec![0.0; n_vars];
                row[var_lo(j)] = 1.0;
                constraints.push((row, Relation::Ge, 0.0));
            }
            CoefSign::NonPositive => {
                let mut row = vec![0.0; n_vars];
                row[var_hi(j)] = 1.0;
                constraints.push((row, Relation::Le, 0.0));
            }
            CoefSign::Straddling => {
                let mut low_row = vec![0.0; n_vars];
                low_row[var_lo(j)] = 1.0;
                constraints.push((low_row, Relation::Le, 0.0));
                let mut hi_row = vec![0.0; n_vars];
                hi_row[var_hi(j)] = 1.0;
                constraints.push((hi_row, Relation::Ge, 0.0));
            }
        }
    }
    LinearProgram::new(
        width_objective(j_count, 0),
        constraints,
        vec![VarKind::Free; n_vars],
    )
    .expect("construction is dimensionally consistent")
}

/// Exact interval product of a coefficient and a datum: min and max over
/// the four endpoint products.
///
/// This agrees with the published product table in every scenario except
/// the both-straddling upper bound, where the table understates the true
/// maximum; the exact product keeps interval inclusion sound.
pub fn case_product(coef: &FuzzyCoefficient, data: &Interval) -> Interval {
    let products = [
        coef.lower * data.lower(),
        coef.lower * data.upper(),
        coef.upper * data.lower(),
        coef.upper * data.upper(),
    ];
    let mut lo = products[0];
    let mut hi = products[0];
    for p in &products[1..] {
        lo = lo.min(*p);
        hi = hi.max(*p);
    }
    Interval::new(lo, hi).expect("min <= max")
}

/// All `N * 2^J` endpoint combinations in deterministic order: observations
/// outermost, then binary counting with feature 0 as the highest bit and
/// `upper` as bit value 1.
pub fn vertex_set(problem: &RegressionProblem) -> Result<Vec<Vertex>, RegressionError> {
    let j_count = problem.num_features();
    if j_count > MAX_VERTEX_FEATURES {
        return Err(RegressionError::TooManyFeatures {
            features: j_count,
            limit: MAX_VERTEX_FEATURES,
        });
    }
    let combos = 1usize << j_count;
    let mut vertices = Vec::with_capacity(problem.num_observations() * combos);
    for i in 0..problem.num_observations() {
        for code in 0..combos {
            let mut choices = Vec::with_capacity(j_count);
            let mut values = Vec::with_capacity(j_count);
            for j in 0..j_count {
                let upper = (code >> (j_count - 1 - j)) & 1 == 1;
                let iv = &problem.input(i, j).interval;
                choices.push(upper);
                values.push(if upper { iv.upper() } else { iv.lower() });
            }
            vertices.push(Vertex {
                observation: i,
                choices,
                values,
            });
        }
    }
    Ok(vertices)
}

/// Splits the vertex set into passing (`S1`) and violating (`S2`) indices,
/// 1-based in enumeration order.
pub fn classify_vertices(
    coefficients: &[FuzzyCoefficient],
    problem: &RegressionProblem,
    mode: VertexCheckMode,
) -> Result<(Vec<usize>, Vec<usize>), RegressionError> {
    let vertices = vertex_set(problem)?;
    let mut s1 = Vec::new();
    let mut s2 = Vec::new();
    for (idx, v) in vertices.iter().enumerate() {
        let lower_line: f64 = coefficients
            .iter()
            .zip(&v.values)
            .map(|(c, x)| c.lower * x)
            .sum();
        let y = problem.output(v.observation);
        let mut ok = lower_line <= y.lower() + VERTEX_TOL;
        if ok && mode == VertexCheckMode::FullInclusion {
            let upper_line: f64 = coefficients
                .iter()
                .zip(&v.values)
                .map(|(c, x)| c.upper * x)
                .sum();
            ok = upper_line >= y.upper() - VERTEX_TOL;
        }
        if ok {
            s1.push(idx + 1);
        } else {
            s2.push(idx + 1);
        }
    }
    Ok((s1, s2))
}

/// Predicted output interval: the interval sum of the per-feature exact
/// coefficient-by-datum products.
pub fn predict(coefficients: &[FuzzyCoefficient], inputs: &[Interval]) -> Interval {
    assert_eq!(coefficients.len(), inputs.len(), "one input per coefficient");
    let mut acc = Interval::point(0.0);
    for (c, x) in coefficients.iter().zip(inputs) {
        acc = acc.add(&case_product(c, x));
    }
    acc
}

fn coefficients_from(values: &[f64], j_count: usize) -> Vec<FuzzyCoefficient> {
    (0..j_count)
        .map(|j| {
            let lo = values[var_lo(j)];
            let hi = values[var_hi(j)];
            // The LP enforces hi >= lo up to its feasibility tolerance.
            FuzzyCoefficient::new(lo.min(hi), hi.max(lo))
        })
        .collect()
}

fn total_width(coefficients: &[FuzzyCoefficient]) -> f64 {
    coefficients.iter().map(FuzzyCoefficient::width).sum()
}

/// Picks the sign-canonical representative of the initial LP's optimal
/// face: among solutions with the optimal objective, minimize the total
/// negative part of the coefficient lower bounds.
///
/// The initial LP is routinely degenerate (its optimum is an edge) and the
/// vertex a simplex lands on can carry arbitrary mixed signs, while the
/// published runs start the sign loop from a componentwise-nonnegative
/// optimum whenever one exists. Only the signs of this step feed the next
/// one, so the representative is chosen to make them well defined.
fn canonicalize_initial(
    problem: &RegressionProblem,
    initial: &LinearProgram,
    best_objective: f64,
) -> Result<Option<Vec<f64>>, RegressionError> {
    let j_count = problem.num_features();
    let base_vars = 2 * j_count;
    let n_vars = base_vars + j_count;
    let mut constraints: Vec<(Vec<f64>, Relation, f64)> = initial
        .constraints
        .iter()
        .map(|(coeffs, rel, rhs)| {
            let mut row = coeffs.clone();
            row.resize(n_vars, 0.0);
            (row, *rel, *rhs)
        })
        .collect();
    // Pin the objective at the optimum.
    let mut cap = width_objective(j_count, j_count);
    cap.truncate(n_vars);
    constraints.push((cap, Relation::Le, best_objective + 1e-7));
    // u_j >= -lo_j, u_j >= 0 via kind.
    for j in 0..j_count {
        let mut row = vec![0.0; n_vars];
        row[var_lo(j)] = 1.0;
        row[base_vars + j] = 1.0;
        constraints.push((row, Relation::Ge, 0.0));
    }
    let mut objective = vec![0.0; n_vars];
    for j in 0..j_count {
        objective[base_vars + j] = 1.0;
    }
    let mut kinds = vec![VarKind::Free; base_vars];
    kinds.extend(vec![VarKind::NonNegative; j_count]);
    let lp = LinearProgram::new(objective, constraints, kinds)?;
    let sol = lp::solve(&lp)?;
    if sol.status == LpStatus::Optimal {
        Ok(Some(sol.values[..base_vars].to_vec()))
    } else {
        Ok(None)
    }
}

/// Runs the full heuristic.
pub fn fit(problem: &RegressionProblem, config: &FitConfig) -> Result<ModelFit, RegressionError> {
    let j_count = problem.num_features();
    let mut trace: Vec<TraceStep> = Vec::new();

    // Step 1: centered LP over free coefficients.
    let first_lp = initial_lp(problem);
    let first = lp::solve(&first_lp)?;
    match first.status {
        LpStatus::Optimal => {}
        LpStatus::Infeasible | LpStatus::Unbounded => {
            return Err(RegressionError::NoFeasibleFit)
        }
    }
    let canonical = canonicalize_initial(problem, &first_lp, first.objective)?
        .unwrap_or_else(|| first.values.clone());
    let mut coefficients = coefficients_from(&canonical, j_count);
    trace.push(TraceStep {
        stage: TraceStage::Initial,
        coefficients: coefficients.clone(),
        objective: total_width(&coefficients),
        assumed_signs: Vec::new(),
        s2: Vec::new(),
    });

    // Steps 2-4: sign loop.
    let mut signs: Vec<CoefSign> = coefficients
        .iter()
        .map(|c| CoefSign::classify(c.lower, c.upper))
        .collect();
    let mut sign_stable = false;
    let mut rounds = 0usize;
    let mut current_lp = signed_lp(problem, &signs);
    loop {
        rounds += 1;
        let sol = lp::solve(&current_lp)?;
        if sol.status != LpStatus::Optimal {
            // The assumed sign pattern admits no solution; keep the previous
            // coefficients and move on to the vertex check.
            trace.push(TraceStep {
                stage: TraceStage::Signed { round: rounds },
                coefficients: coefficients.clone(),
                objective: total_width(&coefficients),
                assumed_signs: signs.clone(),
                s2: Vec::new(),
            });
            break;
        }
        let next = coefficients_from(&sol.values, j_count);
        let stable = next.iter().zip(&coefficients).all(|(new, old)| {
            new.upper * old.upper >= 0.0 && new.lower * old.lower >= 0.0
        });
        coefficients = next;
        trace.push(TraceStep {
            stage: TraceStage::Signed { round: rounds },
            coefficients: coefficients.clone(),
            objective: sol.objective,
            assumed_signs: signs.clone(),
            s2: Vec::new(),
        });
        if stable {
            sign_stable = true;
            break;
        }
        if rounds >= config.max_iterations {
            break;
        }
        signs = coefficients
            .iter()
            .map(|c| CoefSign::classify(c.lower, c.upper))
            .collect();
        current_lp = signed_lp(problem, &signs);
    }

    // Steps 5-8: vertex check and augmentation.
    let vertices = vertex_set(problem)?;
    let mut augmented_rows: Vec<usize> = Vec::new();
    let mut augmentation_ran = false;
    let mut base_lp = current_lp;
    loop {
        let (_, s2) = classify_vertices(&coefficients, problem, config.vertex_mode)?;
        if let Some(last) = trace.last_mut() {
            last.s2 = s2.clone();
        }
        let new_rows: Vec<usize> = s2
            .iter()
            .copied()
            .filter(|idx| !augmented_rows.contains(idx))
            .collect();
        if new_rows.is_empty() {
            break;
        }
        augmentation_ran = true;
        for idx in &new_rows {
            let v = &vertices[idx - 1];
            let y = problem.output(v.observation);
            let n_vars = 2 * j_count;
            let mut low = vec![0.0; n_vars];
            for (j, x) in v.values.iter().enumerate() {
                low[var_lo(j)] = *x;
            }
            base_lp
                .constraints
                .push((low, Relation::Le, y.lower()));
            if config.vertex_mode == VertexCheckMode::FullInclusion {
                let mut high = vec![0.0; n_vars];
                for (j, x) in v.values.iter().enumerate() {
                    high[var_hi(j)] = *x;
                }
                base_lp
                    .constraints
                    .push((high, Relation::Ge, y.upper()));
            }
            augmented_rows.push(*idx);
        }
        let resolved = lp::solve(&base_lp)?;
        let incumbent_objective = total_width(&coefficients);
        match config.augmentation {
            AugmentationPolicy::KeepIncumbent => {
                let improved = resolved.status == LpStatus::Optimal
                    && resolved.objective < incumbent_objective - IMPROVEMENT_TOL;
                if improved {
                    coefficients = coefficients_from(&resolved.values, j_count);
                }
                trace.push(TraceStep {
                    stage: TraceStage::Augmented {
                        round: augmented_rows.len(),
                    },
                    coefficients: coefficients.clone(),
                    objective: total_width(&coefficients),
                    assumed_signs: signs.clone(),
                    s2: Vec::new(),
                });
                if !improved {
                    break;
                }
            }
            AugmentationPolicy::Accept => {
                if resolved.status == LpStatus::Optimal {
                    coefficients = coefficients_from(&resolved.values, j_count);
                }
                trace.push(TraceStep {
                    stage: TraceStage::Augmented {
                        round: augmented_rows.len(),
                    },
                    coefficients: coefficients.clone(),
                    objective: total_width(&coefficients),
                    assumed_signs: signs.clone(),
                    s2: Vec::new(),
                });
                if resolved.status != LpStatus::Optimal {
                    break;
                }
            }
        }
    }

    let terminated_by = if augmentation_ran {
        Termination::AugmentationConverged
    } else if sign_stable {
        Termination::SignStable
    } else {
        Termination::MaxIterations
    };
    Ok(ModelFit {
        objective: total_width(&coefficients),
        coefficients,
        trace,
        terminated_by,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    fn cell(lo: f64, hi: f64, center: f64) -> ObservationCell {
        ObservationCell {
            interval: iv(lo, hi),
            center,
        }
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    /// The four-observation demo problem, with the published interval table
    /// as direct input.
    fn demo_problem() -> RegressionProblem {
        let x1 = [
            (4.19, 9.21, 6.70),
            (2.53, 12.05, 7.29),
            (5.55, 7.77, 6.66),
            (5.52, 8.32, 6.92),
        ];
        let x2 = [
            (2.92, 10.76, 6.84),
            (3.95, 8.55, 6.25),
            (6.01, 7.57, 6.79),
            (4.50, 9.46, 6.98),
        ];
        let y = [(8.00, 17.56), (10.54, 16.14), (7.89, 18.27), (10.98, 15.34)];
        let inputs = (0..4)
            .map(|i| {
                alloc::vec![
                    cell(x1[i].0, x1[i].1, x1[i].2),
                    cell(x2[i].0, x2[i].1, x2[i].2),
                ]
            })
            .collect();
        let outputs = y.iter().map(|(lo, hi)| iv(*lo, *hi)).collect();
        RegressionProblem::new(inputs, outputs, 0.0).unwrap()
    }

    #[test]
    fn initial_lp_shape_and_value() {
        let p = demo_problem();
        let lp = initial_lp(&p);
        assert_eq!(lp.constraints.len(), 10);
        let sol = lp::solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_close(sol.objective, 1.53, 0.02);
    }

    #[test]
    fn initial_lp_single_feature() {
        let p = RegressionProblem::new(
            alloc::vec![alloc::vec![cell(1.0, 3.0, 2.0)]],
            alloc::vec![iv(2.0, 6.0)],
            0.0,
        )
        .unwrap();
        let lp = initial_lp(&p);
        let sol = lp::solve(&lp).unwrap();
        assert_close(sol.values[0], 1.0, 1e-9);
        assert_close(sol.values[1], 3.0, 1e-9);
        assert_close(sol.objective, 2.0, 1e-9);
    }

    #[test]
    fn signed_lp_reproduces_endpoint_program() {
        let p = demo_problem();
        let lp = signed_lp(&p, &[CoefSign::NonNegative, CoefSign::NonNegative]);
        let sol = lp::solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_close(sol.objective, 0.93, 0.02);
        assert_close(sol.values[0], 1.4216, 0.02);
        assert_close(sol.values[1], 2.3514, 0.02);
        assert_close(sol.values[2], 0.0, 0.01);
        assert_close(sol.values[3], 0.0, 0.01);
    }

    #[test]
    fn case_product_examples() {
        let p = case_product(&FuzzyCoefficient::new(1.0, 2.0), &iv(3.0, 4.0));
        assert_eq!((p.lower(), p.upper()), (3.0, 8.0));
        let p = case_product(&FuzzyCoefficient::new(-1.0, 2.0), &iv(3.0, 4.0));
        assert_eq!((p.lower(), p.upper()), (-4.0, 8.0));
        // Both straddling: the exact product, not the table's understated max.
        let p = case_product(&FuzzyCoefficient::new(-1.0, 2.0), &iv(-3.0, 4.0));
        assert_eq!((p.lower(), p.upper()), (-6.0, 8.0));
    }

    #[test]
    fn vertex_enumeration_order() {
        let p = demo_problem();
        let vs = vertex_set(&p).unwrap();
        assert_eq!(vs.len(), 16);
        // Entry (3) in 1-based order: observation 0, (upper, lower).
        assert_eq!(vs[2].observation, 0);
        assert_eq!(vs[2].choices, alloc::vec![true, false]);
        assert_eq!(vs[2].values, alloc::vec![9.21, 2.92]);
        assert_eq!(vs[15].values, alloc::vec![8.32, 9.46]);

        let small = RegressionProblem::new(
            alloc::vec![
                alloc::vec![cell(0.0, 1.0, 0.5), cell(0.0, 1.0, 0.5), cell(0.0, 1.0, 0.5)],
                alloc::vec![cell(0.0, 1.0, 0.5), cell(0.0, 1.0, 0.5), cell(0.0, 1.0, 0.5)],
            ],
            alloc::vec![iv(0.0, 1.0), iv(0.0, 1.0)],
            0.0,
        )
        .unwrap();
        assert_eq!(vertex_set(&small).unwrap().len(), 16);
    }

    #[test]
    fn classify_vertices_demo_sets() {
        let p = demo_problem();
        let coefs = [
            FuzzyCoefficient::new(1.4216, 2.3514),
            FuzzyCoefficient::new(0.0, 0.0),
        ];
        let (s1, s2) = classify_vertices(&coefs, &p, VertexCheckMode::LowerLineOnly).unwrap();
        assert_eq!(s2, alloc::vec![3, 4, 7, 8, 11, 12, 15, 16]);
        assert_eq!(s1.len(), 8);
        let (_, s2_full) = classify_vertices(&coefs, &p, VertexCheckMode::FullInclusion).unwrap();
        assert_eq!(s2_full.len(), 16);

        let zeros = [FuzzyCoefficient::new(0.0, 0.0), FuzzyCoefficient::new(0.0, 0.0)];
        let (_, s2_zero) = classify_vertices(&zeros, &p, VertexCheckMode::LowerLineOnly).unwrap();
        assert!(s2_zero.is_empty());
    }

    #[test]
    fn fit_demo_keeps_incumbent() {
        let p = demo_problem();
        let fit = fit(&p, &FitConfig::default()).unwrap();
        assert_close(fit.objective, 0.93, 0.02);
        assert_close(fit.coefficients[0].lower, 1.4216, 0.02);
        assert_close(fit.coefficients[0].upper, 2.3514, 0.02);
        assert_close(fit.coefficients[1].lower, 0.0, 0.01);
        assert_close(fit.coefficients[1].upper, 0.0, 0.01);
        assert_eq!(fit.terminated_by, Termination::AugmentationConverged);
        // The augmented re-solve could not improve, so the incumbent stood.
        let last = fit.trace.last().unwrap();
        assert!(matches!(last.stage, TraceStage::Augmented { .. }));
    }

    #[test]
    fn fit_single_feature_policies() {
        let p = RegressionProblem::new(
            alloc::vec![alloc::vec![cell(1.0, 3.0, 2.0)]],
            alloc::vec![iv(2.0, 6.0)],
            0.0,
        )
        .unwrap();
        // Default policy: the endpoint LP's optimum [2, 2] stands because
        // adding the violated-vertex row only worsens the objective.
        let keep = fit(&p, &FitConfig::default()).unwrap();
        assert_close(keep.objective, 0.0, 1e-9);
        assert_eq!(keep.terminated_by, Termination::AugmentationConverged);
        // Accepting policy: the augmented solve is adopted; this matches the
        // brute-force optimum over the two-vertex constraint set, [2/3, 2].
        let accept = fit(
            &p,
            &FitConfig {
                augmentation: AugmentationPolicy::Accept,
                ..FitConfig::default()
            },
        )
        .unwrap();
        assert_close(accept.objective, 4.0 / 3.0, 1e-9);
        assert_close(accept.coefficients[0].lower, 2.0 / 3.0, 1e-9);
        assert_close(accept.coefficients[0].upper, 2.0, 1e-9);
    }

    #[test]
    fn fit_exact_crisp_data() {
        // Outputs are exactly 2*x1 + 1*x2 over crisp inputs.
        let inputs = alloc::vec![
            alloc::vec![cell(1.0, 1.0, 1.0), cell(2.0, 2.0, 2.0)],
            alloc::vec![cell(2.0, 2.0, 2.0), cell(1.0, 1.0, 1.0)],
            alloc::vec![cell(3.0, 3.0, 3.0), cell(2.0, 2.0, 2.0)],
        ];
        let outputs = alloc::vec![iv(4.0, 4.0), iv(5.0, 5.0), iv(8.0, 8.0)];
        let p = RegressionProblem::new(inputs, outputs, 0.0).unwrap();
        let fit = fit(&p, &FitConfig::default()).unwrap();
        assert_close(fit.objective, 0.0, 1e-7);
        assert_close(fit.coefficients[0].lower, 2.0, 1e-6);
        assert_close(fit.coefficients[0].upper, 2.0, 1e-6);
        assert_close(fit.coefficients[1].lower, 1.0, 1e-6);
        assert_close(fit.coefficients[1].upper, 1.0, 1e-6);
        assert_eq!(fit.terminated_by, Termination::SignStable);
    }

    #[test]
    fn predict_interval_sum() {
        let coefs = [
            FuzzyCoefficient::new(1.4216, 2.3514),
            FuzzyCoefficient::new(0.0, 0.0),
        ];
        let out = predict(&coefs, &[iv(4.19, 9.21), iv(2.92, 10.76)]);
        assert_close(out.lower(), 5.96, 0.01);
        assert_close(out.upper(), 21.66, 0.01);
        let zeros = [FuzzyCoefficient::new(0.0, 0.0)];
        let z = predict(&zeros, &[iv(-5.0, 5.0)]);
        assert_eq!((z.lower(), z.upper()), (0.0, 0.0));
    }

    #[test]
    fn infeasible_fit_reported() {
        // One observation whose output needs a positive and a negative fit
        // simultaneously: center 0 cannot reach a lower bound above 0.
        let p = RegressionProblem::new(
            alloc::vec![alloc::vec![cell(-1.0, 1.0, 0.0)]],
            alloc::vec![iv(1.0, 2.0)],
            0.0,
        )
        .unwrap();
        assert!(matches!(
            fit(&p, &FitConfig::default()),
            Err(RegressionError::NoFeasibleFit)
        ));
    }

    #[test]
    fn problem_validation() {
        assert!(matches!(
            RegressionProblem::new(alloc::vec![], alloc::vec![], 0.0),
            Err(RegressionError::EmptyProblem)
        ));
        assert!(matches!(
            RegressionProblem::new(
                alloc::vec![alloc::vec![cell(0.0, 1.0, 2.0)]],
                alloc::vec![iv(0.0, 1.0)],
                0.0
            ),
            Err(RegressionError::CenterOutsideInterval { .. })
        ));
        assert!(matches!(
            RegressionProblem::new(
                alloc::vec![alloc::vec![cell(0.0, 1.0, 0.5)]],
                alloc::vec![iv(0.0, 1.0)],
                1.0
            ),
            Err(RegressionError::InvalidHLevel { .. })
        ));
    }
}
