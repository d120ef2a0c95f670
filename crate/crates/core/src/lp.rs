//! Dense two-phase simplex for small linear programs.
//!
//! Minimizes `c.x` subject to mixed `<=`/`>=`/`=` rows and per-variable
//! free/nonnegative kinds. Free variables are split into positive parts
//! internally; the split never shows in the interface. Pivoting is
//! deterministic: Dantzig's rule with lowest-index tie-breaks, switching to
//! Bland's rule after a bounded number of pivots so degenerate programs
//! cannot cycle.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Constraint relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// Variable domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    Free,
    NonNegative,
}

/// A dense linear program: minimize `objective . x`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    pub objective: Vec<f64>,
    pub constraints: Vec<(Vec<f64>, Relation, f64)>,
    pub var_kinds: Vec<VarKind>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Solver output; `values` is meaningful only when `status` is `Optimal`.
#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub status: LpStatus,
    pub objective: f64,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpError {
    DimensionMismatch { row: usize, expected: usize, got: usize },
    KindCountMismatch { expected: usize, got: usize },
    NonFiniteCoefficient,
    TooManyVariables { got: usize, limit: usize },
    TooManyConstraints { got: usize, limit: usize },
    IterationLimit,
}

impl fmt::Display for LpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpError::DimensionMismatch { row, expected, got } => write!(
                f,
                "constraint {row} has {got} coefficients, expected {expected}"
            ),
            LpError::KindCountMismatch { expected, got } => {
                write!(f, "{got} variable kinds given for {expected} variables")
            }
            LpError::NonFiniteCoefficient => write!(f, "non-finite coefficient in program"),
            LpError::TooManyVariables { got, limit } => {
                write!(f, "{got} variables exceeds the limit of {limit}")
            }
            LpError::TooManyConstraints { got, limit } => {
                write!(f, "{got} constraints exceeds the limit of {limit}")
            }
            LpError::IterationLimit => write!(f, "simplex iteration limit reached"),
        }
    }
}

impl core::error::Error for LpError {}

pub const MAX_VARIABLES: usize = 1_000;
pub const MAX_CONSTRAINTS: usize = 100_000;

/// Feasibility tolerance used during pivoting.
const PIVOT_TOL: f64 = 1e-9;
/// Tolerance for declaring the phase-1 objective zero (feasible).
const PHASE1_TOL: f64 = 1e-7;

impl LinearProgram {
    pub fn new(
        objective: Vec<f64>,
        constraints: Vec<(Vec<f64>, Relation, f64)>,
        var_kinds: Vec<VarKind>,
    ) -> Result<Self, LpError> {
        let n = objective.len();
        if var_kinds.len() != n {
            return Err(LpError::KindCountMismatch {
                expected: n,
                got: var_kinds.len(),
            });
        }
        if n > MAX_VARIABLES {
            return Err(LpError::TooManyVariables {
                got: n,
                limit: MAX_VARIABLES,
            });
        }
        if constraints.len() > MAX_CONSTRAINTS {
            return Err(LpError::TooManyConstraints {
                got: constraints.len(),
                limit: MAX_CONSTRAINTS,
            });
        }
        if !objective.iter().all(|c| c.is_finite()) {
            return Err(LpError::NonFiniteCoefficient);
        }
        for (row, (coeffs, _, rhs)) in constraints.iter().enumerate() {
            if coeffs.len() != n {
                return Err(LpError::DimensionMismatch {
                    row,
                    expected: n,
                    got: coeffs.len(),
                });
            }
            if !coeffs.iter().all(|c| c.is_finite()) || !rhs.is_finite() {
                return Err(LpError::NonFiniteCoefficient);
            }
        }
        Ok(Self {
            objective,
            constraints,
            var_kinds,
        })
    }

    pub fn num_variables(&self) -> usize {
        self.objective.len()
    }

    /// Largest absolute violation of the constraint set at `values`
    /// (variable-kind bounds included).
    pub fn max_violation(&self, values: &[f64]) -> f64 {
        let mut worst = 0.0f64;
        for (coeffs, rel, rhs) in &self.constraints {
            let lhs: f64 = coeffs.iter().zip(values).map(|(a, x)| a * x).sum();
            let v = match rel {
                Relation::Le => (lhs - rhs).max(0.0),
                Relation::Ge => (rhs - lhs).max(0.0),
                Relation::Eq => (lhs - rhs).abs(),
            };
            worst = worst.max(v);
        }
        for (kind, x) in self.var_kinds.iter().zip(values) {
            if *kind == VarKind::NonNegative {
                worst = worst.max((-x).max(0.0));
            }
        }
        worst
    }
}

/// Solves the program with the two-phase simplex method.
pub fn solve(lp: &LinearProgram) -> Result<LpSolution, LpError> {
    // Re-run validation so hand-built structs go through the same checks.
    let lp = LinearProgram::new(
        lp.objective.clone(),
        lp.constraints.clone(),
        lp.var_kinds.clone(),
    )?;
    Tableau::build(&lp).solve(&lp)
}

/// Column roles for solution extraction.
#[derive(Clone, Copy, PartialEq, Eq)]
enum ColRole {
    /// Positive part of variable `v`.
    Pos(usize),
    /// Negative part of a free variable `v`.
    Neg(usize),
    Slack,
    Artificial,
}

struct Tableau {
    rows: Vec<Vec<f64>>,
    rhs: Vec<f64>,
    basis: Vec<usize>,
    roles: Vec<ColRole>,
    n_cols: usize,
    first_artificial: usize,
}

enum PhaseOutcome {
    Done,
    Unbounded,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let m = lp.constraints.len();

        // Structural columns: one per nonnegative variable, two per free one.
        let mut roles: Vec<ColRole> = Vec::new();
        for (v, kind) in lp.var_kinds.iter().enumerate() {
            roles.push(ColRole::Pos(v));
            if *kind == VarKind::Free {
                roles.push(ColRole::Neg(v));
            }
        }
        let n_struct = roles.len();

        // Normalize rows to nonnegative right-hand sides.
        let mut norm: Vec<(Vec<f64>, Relation, f64)> = Vec::with_capacity(m);
        for (coeffs, rel, rhs) in &lp.constraints {
            let mut expanded = Vec::with_capacity(n_struct);
            for (v, kind) in lp.var_kinds.iter().enumerate() {
                expanded.push(coeffs[v]);
                if *kind == VarKind::Free {
                    expanded.push(-coeffs[v]);
                }
            }
            if *rhs < 0.0 {
                for a in &mut expanded {
                    *a = -*a;
                }
                let flipped = match rel {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                norm.push((expanded, flipped, -rhs));
            } else {
                norm.push((expanded, *rel, *rhs));
            }
        }

        let n_slack = norm
            .iter()
            .filter(|(_, rel, _)| *rel != Relation::Eq)
            .count();
        let n_art = norm
            .iter()
            .filter(|(_, rel, _)| *rel != Relation::Le)
            .count();
        for _ in 0..n_slack {
            roles.push(ColRole::Slack);
        }
        let first_artificial = roles.len();
        for _ in 0..n_art {
            roles.push(ColRole::Artificial);
        }
        let n_cols = roles.len();

        let mut rows = vec![vec![0.0; n_cols]; m];
        let mut rhs = vec![0.0; m];
        let mut basis = vec![0usize; m];
        let mut slack_at = n_struct;
        let mut art_at = first_artificial;
        for (i, (coeffs, rel, b)) in norm.into_iter().enumerate() {
            rows[i][..n_struct].copy_from_slice(&coeffs);
            rhs[i] = b;
            match rel {
                Relation::Le => {
                    rows[i][slack_at] = 1.0;
                    basis[i] = slack_at;
                    slack_at += 1;
                }
                Relation::Ge => {
                    rows[i][slack_at] = -1.0;
                    slack_at += 1;
                    rows[i][art_at] = 1.0;
                    basis[i] = art_at;
                    art_at += 1;
                }
                Relation::Eq => {
                    rows[i][art_at] = 1.0;
                    basis[i] = art_at;
                    art_at += 1;
                }
            }
        }

        Self {
            rows,
            rhs,
            basis,
            roles,
            n_cols,
            first_artificial,
        }
    }

    fn pivot(&mut self, r: usize, e: usize, cost: &mut [f64], cost_rhs: &mut f64) {
        let piv = self.rows[r][e];
        for a in &mut self.rows[r] {
            *a /= piv;
        }
        self.rhs[r] /= piv;
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let factor = self.rows[i][e];
            if factor != 0.0 {
                for j in 0..self.n_cols {
                    self.rows[i][j] -= factor * self.rows[r][j];
                }
                self.rhs[i] -= factor * self.rhs[r];
                // Guard basic-solution feasibility against rounding drift.
                if self.rhs[i] < 0.0 && self.rhs[i] > -PIVOT_TOL {
                    self.rhs[i] = 0.0;
                }
            }
        }
        let factor = cost[e];
        if factor != 0.0 {
            for j in 0..self.n_cols {
                cost[j] -= factor * self.rows[r][j];
            }
            *cost_rhs -= factor * self.rhs[r];
        }
        self.basis[r] = e;
    }

    /// Runs simplex iterations on the current cost row. Columns at or past
    /// `col_limit` are ignored (used to bar artificials in phase 2).
    fn iterate(
        &mut self,
        cost: &mut [f64],
        cost_rhs: &mut f64,
        col_limit: usize,
    ) -> Result<PhaseOutcome, LpError> {
        let m = self.rows.len();
        let bland_after = 50 * (m + self.n_cols) + 100;
        let hard_cap = 200 * (m + self.n_cols) + 10_000;
        for iter in 0..hard_cap {
            let bland = iter >= bland_after;
            let entering = if bland {
                (0..col_limit).find(|&j| cost[j] < -PIVOT_TOL)
            } else {
                let mut best: Option<(usize, f64)> = None;
                for j in 0..col_limit {
                    if cost[j] < -PIVOT_TOL && best.map_or(true, |(_, c)| cost[j] < c) {
                        best = Some((j, cost[j]));
                    }
                }
                best.map(|(j, _)| j)
            };
            let Some(e) = entering else {
                return Ok(PhaseOutcome::Done);
            };

            let mut leave: Option<(usize, f64)> = None;
            for i in 0..m {
                let a = self.rows[i][e];
                if a > PIVOT_TOL {
                    let ratio = self.rhs[i] / a;
                    let better = match leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < lr - 1e-12
                                || (ratio <= lr + 1e-12 && self.basis[i] < self.basis[li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return Ok(PhaseOutcome::Unbounded);
            };

            self.pivot(r, e, cost, cost_rhs);
        }
        Err(LpError::IterationLimit)
    }

    fn solve(mut self, lp: &LinearProgram) -> Result<LpSolution, LpError> {
        let m = self.rows.len();

        // Phase 1: minimize the sum of artificials.
        if self.first_artificial < self.n_cols {
            let mut cost = vec![0.0; self.n_cols];
            for j in self.first_artificial..self.n_cols {
                cost[j] = 1.0;
            }
            let mut cost_rhs = 0.0;
            for i in 0..m {
                if self.basis[i] >= self.first_artificial {
                    for j in 0..self.n_cols {
                        cost[j] -= self.rows[i][j];
                    }
                    cost_rhs -= self.rhs[i];
                }
            }
            match self.iterate(&mut cost, &mut cost_rhs, self.n_cols)? {
                PhaseOutcome::Unbounded => unreachable!("phase-1 objective is bounded below"),
                PhaseOutcome::Done => {}
            }
            let phase1 = -cost_rhs;
            let scale = 1.0 + self.rhs.iter().fold(0.0f64, |a, b| a.max(b.abs()));
            if phase1 > PHASE1_TOL * scale {
                return Ok(LpSolution {
                    status: LpStatus::Infeasible,
                    objective: f64::NAN,
                    values: Vec::new(),
                });
            }
            self.drive_out_artificials();
        }

        // Phase 2: original objective over structural columns.
        let mut cost = vec![0.0; self.n_cols];
        for (j, role) in self.roles.iter().enumerate() {
            match role {
                ColRole::Pos(v) => cost[j] = lp.objective[*v],
                ColRole::Neg(v) => cost[j] = -lp.objective[*v],
                _ => {}
            }
        }
        let mut cost_rhs = 0.0;
        for i in 0..m {
            let b = self.basis[i];
            let cb = cost[b];
            if cb != 0.0 {
                for j in 0..self.n_cols {
                    cost[j] -= cb * self.rows[i][j];
                }
                cost_rhs -= cb * self.rhs[i];
            }
        }
        match self.iterate(&mut cost, &mut cost_rhs, self.first_artificial)? {
            PhaseOutcome::Unbounded => {
                return Ok(LpSolution {
                    status: LpStatus::Unbounded,
                    objective: f64::NEG_INFINITY,
                    values: Vec::new(),
                })
            }
            PhaseOutcome::Done => {}
        }

        // Extract x; recompute the objective from it for accuracy.
        let mut values = vec![0.0; lp.num_variables()];
        for (i, b) in self.basis.iter().enumerate() {
            match self.roles[*b] {
                ColRole::Pos(v) => values[v] += self.rhs[i],
                ColRole::Neg(v) => values[v] -= self.rhs[i],
                _ => {}
            }
        }
        let objective = lp
            .objective
            .iter()
            .zip(&values)
            .map(|(c, x)| c * x)
            .sum();
        Ok(LpSolution {
            status: LpStatus::Optimal,
            objective,
            values,
        })
    }

    /// After phase 1, pivot artificial variables out of the basis; rows that
    /// cannot pivot are redundant and are dropped.
    fn drive_out_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.first_artificial {
                let mut pivot_col = None;
                let mut best = 0.0;
                for j in 0..self.first_artificial {
                    let a = self.rows[i][j].abs();
                    if a > PIVOT_TOL && a > best {
                        best = a;
                        pivot_col = Some(j);
                    }
                }
                match pivot_col {
                    Some(j) => {
                        let mut dummy = vec![0.0; self.n_cols];
                        let mut dummy_rhs = 0.0;
                        self.pivot(i, j, &mut dummy, &mut dummy_rhs);
                    }
                    None => {
                        self.rows.remove(i);
                        self.rhs.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn one_variable_bound() {
        // min x s.t. x >= 3, x nonnegative
        let lp = LinearProgram::new(
            vec![1.0],
            vec![(vec![1.0], Relation::Ge, 3.0)],
            vec![VarKind::NonNegative],
        )
        .unwrap();
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_close(sol.objective, 3.0, 1e-9);
        assert_close(sol.values[0], 3.0, 1e-9);
    }

    #[test]
    fn infeasible_detected() {
        let lp = LinearProgram::new(
            vec![1.0],
            vec![
                (vec![1.0], Relation::Ge, 3.0),
                (vec![1.0], Relation::Le, 2.0),
            ],
            vec![VarKind::NonNegative],
        )
        .unwrap();
        assert_eq!(solve(&lp).unwrap().status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        let lp = LinearProgram::new(
            vec![-1.0],
            vec![(vec![1.0], Relation::Ge, 0.0)],
            vec![VarKind::NonNegative],
        )
        .unwrap();
        assert_eq!(solve(&lp).unwrap().status, LpStatus::Unbounded);
        // A free variable with nonzero cost and no constraints is unbounded.
        let lp = LinearProgram::new(vec![1.0], vec![], vec![VarKind::Free]).unwrap();
        assert_eq!(solve(&lp).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn free_variables_and_equalities() {
        // min x + y s.t. x + y = 2, x - y = 0 (both free): x = y = 1.
        let lp = LinearProgram::new(
            vec![1.0, 1.0],
            vec![
                (vec![1.0, 1.0], Relation::Eq, 2.0),
                (vec![1.0, -1.0], Relation::Eq, 0.0),
            ],
            vec![VarKind::Free, VarKind::Free],
        )
        .unwrap();
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_close(sol.values[0], 1.0, 1e-9);
        assert_close(sol.values[1], 1.0, 1e-9);
        assert!(lp.max_violation(&sol.values) <= 1e-7);
    }

    #[test]
    fn negative_rhs_normalization() {
        // min y s.t. -x <= -4 (i.e. x >= 4), y >= x - 10, y free, x nonneg:
        // optimum y = -6 at x = 4.
        let lp = LinearProgram::new(
            vec![0.0, 1.0],
            vec![
                (vec![-1.0, 0.0], Relation::Le, -4.0),
                (vec![-1.0, 1.0], Relation::Ge, -10.0),
            ],
            vec![VarKind::NonNegative, VarKind::Free],
        )
        .unwrap();
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_close(sol.objective, -6.0, 1e-9);
        assert_close(sol.values[0], 4.0, 1e-9);
        assert_close(sol.values[1], -6.0, 1e-9);
    }

    #[test]
    fn demo_step_one_objective() {
        // Center-based interval-inclusion program over four observations
        // with two free coefficient pairs; optimum 1.5287.
        let e1 = [6.70, 7.29, 6.66, 6.92];
        let e2 = [6.84, 6.25, 6.79, 6.98];
        let ylo = [8.00, 10.54, 7.89, 10.98];
        let yhi = [17.56, 16.14, 18.27, 15.34];
        // variables: lo1, hi1, lo2, hi2
        let mut cons = Vec::new();
        for i in 0..4 {
            cons.push((vec![e1[i], 0.0, e2[i], 0.0], Relation::Le, ylo[i]));
            cons.push((vec![0.0, e1[i], 0.0, e2[i]], Relation::Ge, yhi[i]));
        }
        cons.push((vec![-1.0, 1.0, 0.0, 0.0], Relation::Ge, 0.0));
        cons.push((vec![0.0, 0.0, -1.0, 1.0], Relation::Ge, 0.0));
        let lp = LinearProgram::new(
            vec![-1.0, 1.0, -1.0, 1.0],
            cons,
            vec![VarKind::Free; 4],
        )
        .unwrap();
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_close(sol.objective, 1.53, 0.02);
        assert!(lp.max_violation(&sol.values) <= 1e-7);
    }

    #[test]
    fn demo_step_two_vertex() {
        // Endpoint-based program; optimum 0.9297 at (1.4216, 2.3514, 0, 0).
        let lo1 = [4.19, 2.53, 5.55, 5.52];
        let hi1 = [9.21, 12.05, 7.77, 8.32];
        let lo2 = [2.92, 3.95, 6.01, 4.50];
        let hi2 = [10.76, 8.55, 7.57, 9.46];
        let ylo = [8.00, 10.54, 7.89, 10.98];
        let yhi = [17.56, 16.14, 18.27, 15.34];
        let mut cons = Vec::new();
        for i in 0..4 {
            cons.push((vec![lo1[i], 0.0, lo2[i], 0.0], Relation::Le, ylo[i]));
            cons.push((vec![0.0, hi1[i], 0.0, hi2[i]], Relation::Ge, yhi[i]));
        }
        cons.push((vec![-1.0, 1.0, 0.0, 0.0], Relation::Ge, 0.0));
        cons.push((vec![0.0, 0.0, -1.0, 1.0], Relation::Ge, 0.0));
        let lp = LinearProgram::new(
            vec![-1.0, 1.0, -1.0, 1.0],
            cons,
            vec![VarKind::NonNegative; 4],
        )
        .unwrap();
        let sol = solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_close(sol.objective, 0.93, 0.02);
        assert_close(sol.values[0], 1.4216, 0.02);
        assert_close(sol.values[1], 2.3514, 0.02);
        assert_close(sol.values[2], 0.0, 0.01);
        assert_close(sol.values[3], 0.0, 0.01);
    }

    #[test]
    fn determinism_bitwise() {
        let lp = LinearProgram::new(
            vec![1.0, -2.0, 0.5],
            vec![
                (vec![1.0, 1.0, 1.0], Relation::Le, 10.0),
                (vec![2.0, -1.0, 0.0], Relation::Ge, 1.0),
                (vec![0.0, 1.0, 3.0], Relation::Le, 7.0),
            ],
            vec![VarKind::NonNegative; 3],
        )
        .unwrap();
        let a = solve(&lp).unwrap();
        let b = solve(&lp).unwrap();
        assert_eq!(a.objective.to_bits(), b.objective.to_bits());
        for (x, y) in a.values.iter().zip(&b.values) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let err = LinearProgram::new(
            vec![1.0, 2.0],
            vec![(vec![1.0], Relation::Le, 1.0)],
            vec![VarKind::Free, VarKind::Free],
        );
        assert!(matches!(err, Err(LpError::DimensionMismatch { .. })));
    }
}
