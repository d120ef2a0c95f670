//! Survey file parsing.
//!
//! Comma-separated text, one row per (group, category, item):
//!
//! ```text
//! group,category,item,target,response1,response2,...
//! women,A,1,5,always,frequently,often,...
//! ```
//!
//! Lines starting with `#` are comments; a header line starting with
//! `group,` is skipped. Respondent counts must agree within each group.

use crate::CliError;
use std::collections::BTreeMap;

/// One parsed survey row.
#[derive(Debug, Clone, PartialEq)]
pub struct SurveyRow {
    pub line: usize,
    pub group: String,
    pub category: String,
    pub item: usize,
    pub sales_target: f64,
    pub responses: Vec<String>,
}

/// A parsed survey file.
#[derive(Debug, Clone, PartialEq)]
pub struct Survey {
    pub rows: Vec<SurveyRow>,
}

impl Survey {
    pub fn parse(path: &str, text: &str) -> Result<Self, CliError> {
        let err = |line: usize, column: usize, message: String| CliError::Parse {
            path: path.to_string(),
            line,
            column,
            message,
        };
        let mut rows = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields[0].eq_ignore_ascii_case("group") {
                continue; // header
            }
            if fields.len() < 5 {
                return Err(err(
                    line_no,
                    fields.len(),
                    format!(
                        "expected group,category,item,target,responses... (got {} fields)",
                        fields.len()
                    ),
                ));
            }
            let group = fields[0].to_string();
            let category = fields[1].to_string();
            if group.is_empty() || category.is_empty() {
                return Err(err(line_no, 1, "empty group or category name".into()));
            }
            let item: usize = fields[2].parse().map_err(|_| {
                err(line_no, 3, format!("item index {:?} is not an integer", fields[2]))
            })?;
            let sales_target: f64 = fields[3].parse().map_err(|_| {
                err(line_no, 4, format!("sales target {:?} is not a number", fields[3]))
            })?;
            if !(sales_target.is_finite() && sales_target > 0.0) {
                return Err(err(
                    line_no,
                    4,
                    format!("sales target {sales_target} must be positive"),
                ));
            }
            let responses: Vec<String> = fields[4..]
                .iter()
                .filter(|s| !s.is_empty())
                .map(|s| s.to_string())
                .collect();
            if responses.is_empty() {
                return Err(err(line_no, 5, "row has no responses".into()));
            }
            rows.push(SurveyRow {
                line: line_no,
                group,
                category,
                item,
                sales_target,
                responses,
            });
        }
        if rows.is_empty() {
            return Err(err(1, 1, "survey has no data rows".into()));
        }
        let survey = Survey { rows };
        survey.validate()?;
        Ok(survey)
    }

    fn validate(&self) -> Result<(), CliError> {
        // Respondent counts must be uniform within a group.
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for row in &self.rows {
            let n = row.responses.len();
            match counts.get(row.group.as_str()) {
                None => {
                    counts.insert(&row.group, n);
                }
                Some(&expected) if expected != n => {
                    return Err(CliError::Data {
                        message: format!(
                            "group {:?} has rows with {expected} and {n} responses \
                             (line {}); respondent counts must match within a group",
                            row.group, row.line
                        ),
                    });
                }
                _ => {}
            }
        }
        // No duplicate (group, category, item) keys.
        let mut seen: BTreeMap<(&str, &str, usize), usize> = BTreeMap::new();
        for row in &self.rows {
            let key = (row.group.as_str(), row.category.as_str(), row.item);
            if let Some(prev) = seen.insert(key, row.line) {
                return Err(CliError::Data {
                    message: format!(
                        "duplicate item {}/{}/{} on lines {prev} and {}",
                        row.group, row.category, row.item, row.line
                    ),
                });
            }
        }
        Ok(())
    }

    /// Group names in order of first appearance.
    pub fn groups(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for row in &self.rows {
            if !out.contains(&row.group) {
                out.push(row.group.clone());
            }
        }
        out
    }

    /// Categories of one group, in order of first appearance.
    pub fn categories_of(&self, group: &str) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for row in &self.rows {
            if row.group == group && !out.contains(&row.category) {
                out.push(row.category.clone());
            }
        }
        out
    }

    /// Rows of one (group, category), ordered by item index.
    pub fn items_of(&self, group: &str, category: &str) -> Vec<&SurveyRow> {
        let mut rows: Vec<&SurveyRow> = self
            .rows
            .iter()
            .filter(|r| r.group == group && r.category == category)
            .collect();
        rows.sort_by_key(|r| r.item);
        rows
    }
}
