//! Text format for the `lp-solve` debug subcommand.
//!
//! ```text
//! # comment
//! minimize 1 -1 0
//! kinds nonneg nonneg free
//! row 1 2 3 <= 4
//! row 1 0 0 >= 1
//! row 0 1 1 = 2
//! ```
//!
//! `kinds` is optional; variables default to `free`.

use crate::CliError;
use lingreg_core::lp::{LinearProgram, Relation, VarKind};

pub fn parse(path: &str, text: &str) -> Result<LinearProgram, CliError> {
    let err = |line: usize, column: usize, message: String| CliError::Parse {
        path: path.to_string(),
        line,
        column,
        message,
    };
    let mut objective: Option<Vec<f64>> = None;
    let mut kinds: Option<Vec<VarKind>> = None;
    let mut rows: Vec<(Vec<f64>, Relation, f64)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let head = tokens.next().unwrap();
        match head {
            "minimize" => {
                let coeffs = parse_floats(tokens.collect::<Vec<_>>(), line_no, &err)?;
                if coeffs.is_empty() {
                    return Err(err(line_no, 2, "minimize needs coefficients".into()));
                }
                objective = Some(coeffs);
            }
            "kinds" => {
                let parsed: Result<Vec<VarKind>, CliError> = tokens
                    .enumerate()
                    .map(|(i, t)| match t {
                        "free" => Ok(VarKind::Free),
                        "nonneg" => Ok(VarKind::NonNegative),
                        other => Err(err(
                            line_no,
                            i + 2,
                            format!("kind {other:?} is not 'free' or 'nonneg'"),
                        )),
                    })
                    .collect();
                kinds = Some(parsed?);
            }
            "row" => {
                let tokens: Vec<&str> = tokens.collect();
                let rel_pos = tokens
                    .iter()
                    .position(|t| matches!(*t, "<=" | ">=" | "="))
                    .ok_or_else(|| {
                        err(line_no, 2, "row needs a relation (<=, >= or =)".into())
                    })?;
                let relation = match tokens[rel_pos] {
                    "<=" => Relation::Le,
                    ">=" => Relation::Ge,
                    _ => Relation::Eq,
                };
                let coeffs = parse_floats(tokens[..rel_pos].to_vec(), line_no, &err)?;
                if tokens.len() != rel_pos + 2 {
                    return Err(err(
                        line_no,
                        rel_pos + 2,
                        "row needs exactly one bound after the relation".into(),
                    ));
                }
                let rhs: f64 = tokens[rel_pos + 1].parse().map_err(|_| {
                    err(
                        line_no,
                        rel_pos + 3,
                        format!("bound {:?} is not a number", tokens[rel_pos + 1]),
                    )
                })?;
                rows.push((coeffs, relation, rhs));
            }
            other => {
                return Err(err(
                    line_no,
                    1,
                    format!("unknown directive {other:?} (expected minimize/kinds/row)"),
                ));
            }
        }
    }

    let objective = objective.ok_or_else(|| err(1, 1, "missing 'minimize' line".into()))?;
    let n = objective.len();
    let kinds = kinds.unwrap_or_else(|| vec![VarKind::Free; n]);
    LinearProgram::new(objective, rows, kinds).map_err(|e| CliError::Data {
        message: e.to_string(),
    })
}

fn parse_floats(
    tokens: Vec<&str>,
    line_no: usize,
    err: &impl Fn(usize, usize, String) -> CliError,
) -> Result<Vec<f64>, CliError> {
    tokens
        .iter()
        .enumerate()
        .map(|(i, t)| {
            t.parse::<f64>()
                .map_err(|_| err(line_no, i + 2, format!("{t:?} is not a number")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use lingreg_core::lp::{self, LpStatus};

    #[test]
    fn parses_and_solves() {
        let text = "\
# tiny program
minimize 1
kinds nonneg
row 1 >= 3
";
        let lp = parse("p.lp", text).unwrap();
        let sol = lp::solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.objective - 3.0).abs() < 1e-9);
    }

    #[test]
    fn errors_carry_positions() {
        match parse("p.lp", "minimize 1\nrow 1 ?? 3\n") {
            Err(CliError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse("p.lp", "row 1 <= 2\n").is_err());
    }
}
