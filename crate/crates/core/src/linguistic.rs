//! Linguistic questionnaire terms and their reduction to fuzzy random data.
//!
//! Each survey item carries a sales target and one linguistic response per
//! respondent. Tabulating an item yields a type-2 term: the proportion of
//! respondents behind each term weight. A group of items reduces to a
//! discrete fuzzy random variable by fuzzifying each target into a symmetric
//! triangle and weighting it with the item's normalized membership mass.

use crate::frv::{DiscreteFuzzyRandomVariable, FrvError};
use crate::tfn::TriangularFuzzyNumber;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Ordered linguistic term table: names mapped to strictly decreasing
/// weights in (0, 1). Matching is case-insensitive after trimming.
#[derive(Debug, Clone, PartialEq)]
pub struct Lexicon {
    entries: Vec<(String, f64)>,
}

/// A single survey row: one sales target with its linguistic responses.
#[derive(Debug, Clone, PartialEq)]
pub struct LinguisticItem {
    /// Identifier used in error messages, e.g. `women/A/2`.
    pub label: String,
    pub sales_target: f64,
    pub responses: Vec<String>,
}

/// A tabulated type-2 term: respondent proportions per term weight.
///
/// Proportions are stored as exact respondent counts over the total, so
/// they sum to exactly 1.
#[derive(Debug, Clone, PartialEq)]
pub struct T2FTerm {
    pub sales_target: f64,
    /// `(weight, count)` in lexicon order; zero-count weights omitted.
    grades: Vec<(f64, usize)>,
    respondents: usize,
}

/// Triangular fuzzification rule: the half-width applied to a sales target.
///
/// `bands` holds `(upper_bound, width)` pairs: the first band whose bound
/// strictly exceeds the target supplies the width; targets at or beyond the
/// last bound get `default_width`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpreadRule {
    bands: Vec<(f64, f64)>,
    default_width: f64,
}

/// Errors from the linguistic layer.
#[derive(Debug, Clone, PartialEq)]
pub enum LinguisticError {
    UnknownTerm { term: String, item: String },
    EmptyResponses { item: String },
    NonPositiveTarget { target: f64 },
    EmptyGroup,
    ZeroMass,
    InvalidLexicon { reason: String },
    InvalidSpreadRule { reason: String },
    Frv(FrvError),
}

impl fmt::Display for LinguisticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinguisticError::UnknownTerm { term, item } => {
                write!(f, "unknown linguistic term {term:?} in item {item}")
            }
            LinguisticError::EmptyResponses { item } => {
                write!(f, "item {item} has no responses")
            }
            LinguisticError::NonPositiveTarget { target } => {
                write!(f, "sales target {target} must be positive")
            }
            LinguisticError::EmptyGroup => write!(f, "cannot reduce an empty group of terms"),
            LinguisticError::ZeroMass => {
                write!(f, "all terms in the group have zero membership mass")
            }
            LinguisticError::InvalidLexicon { reason } => write!(f, "invalid lexicon: {reason}"),
            LinguisticError::InvalidSpreadRule { reason } => {
                write!(f, "invalid spread rule: {reason}")
            }
            LinguisticError::Frv(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for LinguisticError {}

impl From<FrvError> for LinguisticError {
    fn from(e: FrvError) -> Self {
        LinguisticError::Frv(e)
    }
}

impl Lexicon {
    /// Builds a lexicon from `(name, weight)` entries ordered by falling
    /// weight; weights must be distinct and inside (0, 1).
    pub fn new(entries: Vec<(String, f64)>) -> Result<Self, LinguisticError> {
        if entries.is_empty() {
            return Err(LinguisticError::InvalidLexicon {
                reason: "no entries".to_string(),
            });
        }
        let mut prev = f64::INFINITY;
        for (name, w) in &entries {
            if !(w.is_finite() && *w > 0.0 && *w < 1.0) {
                return Err(LinguisticError::InvalidLexicon {
                    reason: alloc::format!("weight {w} for {name:?} outside (0, 1)"),
                });
            }
            if *w >= prev {
                return Err(LinguisticError::InvalidLexicon {
                    reason: "weights must be strictly decreasing".to_string(),
                });
            }
            prev = *w;
        }
        Ok(Self { entries })
    }

    /// The questionnaire's five standard terms:
    /// always 0.9, frequently 0.7, often 0.5, sometimes 0.3, seldom 0.1.
    pub fn standard() -> Self {
        Self {
            entries: alloc::vec![
                ("always".to_string(), 0.9),
                ("frequently".to_string(), 0.7),
                ("often".to_string(), 0.5),
                ("sometimes".to_string(), 0.3),
                ("seldom".to_string(), 0.1),
            ],
        }
    }

    pub fn entries(&self) -> &[(String, f64)] {
        &self.entries
    }

    /// Weight for a term, matching case-insensitively after trimming.
    pub fn weight_of(&self, term: &str) -> Option<f64> {
        let needle = term.trim();
        self.entries
            .iter()
            .find(|(name, _)| name.eq_ignore_ascii_case(needle))
            .map(|(_, w)| *w)
    }
}

impl SpreadRule {
    pub fn new(bands: Vec<(f64, f64)>, default_width: f64) -> Result<Self, LinguisticError> {
        let mut prev = f64::NEG_INFINITY;
        for (bound, width) in &bands {
            if !(bound.is_finite() && *bound > 0.0) || !(width.is_finite() && *width > 0.0) {
                return Err(LinguisticError::InvalidSpreadRule {
                    reason: "bounds and widths must be positive".to_string(),
                });
            }
            if *bound <= prev {
                return Err(LinguisticError::InvalidSpreadRule {
                    reason: "band bounds must be strictly increasing".to_string(),
                });
            }
            prev = *bound;
        }
        if !(default_width.is_finite() && default_width > 0.0) {
            return Err(LinguisticError::InvalidSpreadRule {
                reason: "default width must be positive".to_string(),
            });
        }
        Ok(Self {
            bands,
            default_width,
        })
    }

    /// Half-widths observed in the case-study tables: 1 below 10, 2 in
    /// [10, 20), 4 from 20 up.
    pub fn standard() -> Self {
        Self {
            bands: alloc::vec![(10.0, 1.0), (20.0, 2.0)],
            default_width: 4.0,
        }
    }

    pub fn bands(&self) -> &[(f64, f64)] {
        &self.bands
    }

    pub fn default_width(&self) -> f64 {
        self.default_width
    }

    /// Half-width for a sales target.
    pub fn spread(&self, sales_target: f64) -> Result<f64, LinguisticError> {
        if !(sales_target.is_finite() && sales_target > 0.0) {
            return Err(LinguisticError::NonPositiveTarget {
                target: sales_target,
            });
        }
        for (bound, width) in &self.bands {
            if sales_target < *bound {
                return Ok(*width);
            }
        }
        Ok(self.default_width)
    }

    /// Symmetric triangle `(target; target - s; target + s)`.
    pub fn fuzzify(&self, sales_target: f64) -> Result<TriangularFuzzyNumber, LinguisticError> {
        let s = self.spread(sales_target)?;
        Ok(TriangularFuzzyNumber::symmetric(sales_target, s)
            .expect("positive spread keeps the triple ordered"))
    }
}

impl T2FTerm {
    pub fn sales_target(&self) -> f64 {
        self.sales_target
    }

    /// `(weight, proportion)` pairs; proportions are multiples of
    /// `1/respondents` and sum to exactly 1.
    pub fn grades(&self) -> Vec<(f64, f64)> {
        let n = self.respondents as f64;
        self.grades
            .iter()
            .map(|(w, count)| (*w, *count as f64 / n))
            .collect()
    }

    pub fn respondents(&self) -> usize {
        self.respondents
    }

    /// Weighted membership mass `sum_k weight_k * proportion_k`.
    pub fn mass(&self) -> f64 {
        let n = self.respondents as f64;
        self.grades
            .iter()
            .map(|(w, count)| w * *count as f64)
            .sum::<f64>()
            / n
    }
}

/// Tabulates one survey item into a type-2 term under the lexicon.
pub fn tabulate(item: &LinguisticItem, lexicon: &Lexicon) -> Result<T2FTerm, LinguisticError> {
    if item.responses.is_empty() {
        return Err(LinguisticError::EmptyResponses {
            item: item.label.clone(),
        });
    }
    if !(item.sales_target.is_finite() && item.sales_target > 0.0) {
        return Err(LinguisticError::NonPositiveTarget {
            target: item.sales_target,
        });
    }
    let mut counts = alloc::vec![0usize; lexicon.entries().len()];
    for response in &item.responses {
        let needle = response.trim();
        let idx = lexicon
            .entries()
            .iter()
            .position(|(name, _)| name.eq_ignore_ascii_case(needle))
            .ok_or_else(|| LinguisticError::UnknownTerm {
                term: response.clone(),
                item: item.label.clone(),
            })?;
        counts[idx] += 1;
    }
    let grades = lexicon
        .entries()
        .iter()
        .zip(counts.iter())
        .filter(|(_, count)| **count > 0)
        .map(|((_, w), count)| (*w, *count))
        .collect();
    Ok(T2FTerm {
        sales_target: item.sales_target,
        grades,
        respondents: item.responses.len(),
    })
}

/// Reduces a group of tabulated terms to a discrete fuzzy random variable:
/// component `t` is the fuzzified target with probability
/// `mass_t / sum(mass)`, kept at full precision.
pub fn reduce_group(
    terms: &[T2FTerm],
    rule: &SpreadRule,
) -> Result<DiscreteFuzzyRandomVariable, LinguisticError> {
    if terms.is_empty() {
        return Err(LinguisticError::EmptyGroup);
    }
    let masses: Vec<f64> = terms.iter().map(T2FTerm::mass).collect();
    let total: f64 = masses.iter().sum();
    if total <= 0.0 {
        return Err(LinguisticError::ZeroMass);
    }
    let mut components = Vec::with_capacity(terms.len());
    for (term, mass) in terms.iter().zip(masses.iter()) {
        components.push((rule.fuzzify(term.sales_target)?, mass / total));
    }
    Ok(DiscreteFuzzyRandomVariable::new(components)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn item(target: f64, responses: &[&str]) -> LinguisticItem {
        LinguisticItem {
            label: "test/item".to_string(),
            sales_target: target,
            responses: responses.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn tabulate_counts_proportions() {
        // always x3, frequently x2, often x3, sometimes x1, seldom x1
        let it = item(
            5.0,
            &[
                "always",
                "frequently",
                "often",
                "always",
                "frequently",
                "often",
                "sometimes",
                "seldom",
                "always",
                "often",
            ],
        );
        let term = tabulate(&it, &Lexicon::standard()).unwrap();
        let grades = term.grades();
        assert_eq!(
            grades,
            vec![(0.9, 0.3), (0.7, 0.2), (0.5, 0.3), (0.3, 0.1), (0.1, 0.1)]
        );
        assert_close(grades.iter().map(|(_, p)| p).sum::<f64>(), 1.0, 0.0);
        assert_close(term.mass(), 0.60, 1e-12);
    }

    #[test]
    fn tabulate_uniform_and_case_insensitive() {
        let it = item(8.0, &["Often"; 10]);
        let term = tabulate(&it, &Lexicon::standard()).unwrap();
        assert_eq!(term.grades(), vec![(0.5, 1.0)]);
        assert_close(term.mass(), 0.5, 0.0);
    }

    #[test]
    fn tabulate_rejects_bad_input() {
        let empty = item(5.0, &[]);
        assert!(matches!(
            tabulate(&empty, &Lexicon::standard()),
            Err(LinguisticError::EmptyResponses { .. })
        ));
        let bad = item(5.0, &["allways"]);
        match tabulate(&bad, &Lexicon::standard()) {
            Err(LinguisticError::UnknownTerm { term, item }) => {
                assert_eq!(term, "allways");
                assert_eq!(item, "test/item");
            }
            other => panic!("expected UnknownTerm, got {other:?}"),
        }
    }

    #[test]
    fn spread_bands() {
        let rule = SpreadRule::standard();
        assert_eq!(rule.spread(5.0).unwrap(), 1.0);
        assert_eq!(rule.spread(13.0).unwrap(), 2.0);
        assert_eq!(rule.spread(20.0).unwrap(), 4.0);
        assert!(rule.spread(0.0).is_err());
        let t = rule.fuzzify(13.0).unwrap();
        assert_eq!((t.center(), t.left(), t.right()), (13.0, 11.0, 15.0));
    }

    #[test]
    fn reduce_group_normalizes_masses() {
        let lex = Lexicon::standard();
        let rule = SpreadRule::standard();
        // Masses 0.60 / 0.42 / 0.52 normalize to 0.390 / 0.273 / 0.338.
        let items = [
            item(
                5.0,
                &[
                    "always",
                    "frequently",
                    "often",
                    "always",
                    "frequently",
                    "often",
                    "sometimes",
                    "seldom",
                    "always",
                    "often",
                ],
            ),
            item(
                5.0,
                &[
                    "often",
                    "frequently",
                    "often",
                    "sometimes",
                    "seldom",
                    "often",
                    "sometimes",
                    "seldom",
                    "frequently",
                    "often",
                ],
            ),
            item(
                10.0,
                &[
                    "frequently",
                    "often",
                    "frequently",
                    "frequently",
                    "often",
                    "sometimes",
                    "often",
                    "frequently",
                    "seldom",
                    "often",
                ],
            ),
        ];
        let terms: Vec<T2FTerm> = items
            .iter()
            .map(|it| tabulate(it, &lex).unwrap())
            .collect();
        assert_close(terms[0].mass(), 0.60, 1e-12);
        assert_close(terms[1].mass(), 0.42, 1e-12);
        assert_close(terms[2].mass(), 0.52, 1e-12);
        let frv = reduce_group(&terms, &rule).unwrap();
        let probs: Vec<f64> = frv.components().iter().map(|(_, p)| *p).collect();
        assert_close(probs[0], 0.60 / 1.54, 1e-12);
        assert_close(probs[1], 0.42 / 1.54, 1e-12);
        assert_close(probs[2], 0.52 / 1.54, 1e-12);
        assert_close(probs.iter().sum::<f64>(), 1.0, 1e-12);
        let (t, _) = frv.components()[2];
        assert_eq!((t.center(), t.left(), t.right()), (10.0, 8.0, 12.0));
    }

    #[test]
    fn reduce_single_term() {
        let lex = Lexicon::standard();
        let terms = vec![tabulate(&item(5.0, &["often"; 4]), &lex).unwrap()];
        let frv = reduce_group(&terms, &SpreadRule::standard()).unwrap();
        assert_eq!(frv.components().len(), 1);
        assert_close(frv.components()[0].1, 1.0, 0.0);
    }

    #[test]
    fn lexicon_validation() {
        assert!(Lexicon::new(vec![]).is_err());
        assert!(Lexicon::new(vec![("a".to_string(), 0.5), ("b".to_string(), 0.5)]).is_err());
        assert!(Lexicon::new(vec![("a".to_string(), 1.0)]).is_err());
        assert!(Lexicon::new(vec![("a".to_string(), 0.9), ("b".to_string(), 0.3)]).is_ok());
        assert_eq!(Lexicon::standard().weight_of("  Always "), Some(0.9));
        assert_eq!(Lexicon::standard().weight_of("never"), None);
    }
}
