//! Discrete fuzzy random variables: probability mixtures of triangular fuzzy
//! numbers, their credibility moments, and one-sigma confidence intervals.

use crate::square;
use crate::tfn::TriangularFuzzyNumber;
use alloc::vec::Vec;
use core::fmt;

/// Tolerance within which a probability vector may miss 1 before being
/// rejected. Published tables round probabilities to two decimals, so sums
/// of 0.99..1.01 are routine.
pub const PROBABILITY_SUM_TOLERANCE: f64 = 0.02;

/// A closed real interval `[lower, upper]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lower: f64,
    upper: f64,
}

/// Construction error for [`Interval`].
#[derive(Debug, Clone, PartialEq)]
pub struct InvalidInterval {
    pub lower: f64,
    pub upper: f64,
}

impl fmt::Display for InvalidInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid interval [{}, {}]", self.lower, self.upper)
    }
}

impl core::error::Error for InvalidInterval {}

impl Interval {
    pub fn new(lower: f64, upper: f64) -> Result<Self, InvalidInterval> {
        if lower.is_finite() && upper.is_finite() && lower <= upper {
            Ok(Self { lower, upper })
        } else {
            Err(InvalidInterval { lower, upper })
        }
    }

    pub fn point(value: f64) -> Self {
        Self {
            lower: value,
            upper: value,
        }
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains_value(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }

    /// `self` contains `other` within an absolute slack `tol` per endpoint.
    pub fn contains(&self, other: &Interval, tol: f64) -> bool {
        self.lower <= other.lower + tol && other.upper <= self.upper + tol
    }

    pub fn add(&self, other: &Interval) -> Self {
        Self {
            lower: self.lower + other.lower,
            upper: self.upper + other.upper,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

/// A probability mixture of triangular fuzzy numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteFuzzyRandomVariable {
    components: Vec<(TriangularFuzzyNumber, f64)>,
}

/// Construction errors for [`DiscreteFuzzyRandomVariable`].
#[derive(Debug, Clone, PartialEq)]
pub enum FrvError {
    Empty,
    NonPositiveProbability { index: usize, probability: f64 },
    /// The probabilities miss 1 by more than the tolerance.
    SumOutOfTolerance { sum: f64, tolerance: f64 },
}

impl fmt::Display for FrvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrvError::Empty => write!(f, "fuzzy random variable needs at least one component"),
            FrvError::NonPositiveProbability { index, probability } => write!(
                f,
                "component {index} has non-positive probability {probability}"
            ),
            FrvError::SumOutOfTolerance { sum, tolerance } => write!(
                f,
                "probabilities sum to {sum}, more than {tolerance} away from 1"
            ),
        }
    }
}

impl core::error::Error for FrvError {}

impl DiscreteFuzzyRandomVariable {
    /// Builds a mixture, renormalizing the probabilities to sum exactly 1.
    ///
    /// Sums farther than [`PROBABILITY_SUM_TOLERANCE`] from 1 are rejected.
    pub fn new(components: Vec<(TriangularFuzzyNumber, f64)>) -> Result<Self, FrvError> {
        let sum = Self::validate(&components, PROBABILITY_SUM_TOLERANCE)?;
        let components = components
            .into_iter()
            .map(|(t, p)| (t, p / sum))
            .collect();
        Ok(Self { components })
    }

    /// Builds a mixture keeping the probabilities exactly as given.
    ///
    /// Published tables carry two-decimal probabilities whose sums drift to
    /// 0.99..1.01; reproducing moments computed from such tables requires
    /// using the printed weights verbatim. The sum is still validated
    /// against [`PROBABILITY_SUM_TOLERANCE`].
    pub fn with_probabilities_as_given(
        components: Vec<(TriangularFuzzyNumber, f64)>,
    ) -> Result<Self, FrvError> {
        Self::with_probabilities_as_given_within(components, PROBABILITY_SUM_TOLERANCE)
    }

    /// Like [`Self::with_probabilities_as_given`] with a caller-chosen sum
    /// tolerance.
    pub fn with_probabilities_as_given_within(
        components: Vec<(TriangularFuzzyNumber, f64)>,
        tolerance: f64,
    ) -> Result<Self, FrvError> {
        Self::validate(&components, tolerance)?;
        Ok(Self { components })
    }

    fn validate(
        components: &[(TriangularFuzzyNumber, f64)],
        tolerance: f64,
    ) -> Result<f64, FrvError> {
        if components.is_empty() {
            return Err(FrvError::Empty);
        }
        for (index, (_, p)) in components.iter().enumerate() {
            if !(p.is_finite() && *p > 0.0) {
                return Err(FrvError::NonPositiveProbability {
                    index,
                    probability: *p,
                });
            }
        }
        let sum: f64 = components.iter().map(|(_, p)| p).sum();
        if (sum - 1.0).abs() > tolerance {
            return Err(FrvError::SumOutOfTolerance { sum, tolerance });
        }
        Ok(sum)
    }

    pub fn components(&self) -> &[(TriangularFuzzyNumber, f64)] {
        &self.components
    }

    /// Mixture expected value `sum_i p_i (l_i + 2 c_i + r_i) / 4`.
    pub fn expected_value(&self) -> f64 {
        self.components
            .iter()
            .map(|(t, p)| p * t.expected_value())
            .sum()
    }

    /// Credibility variance: with `m` the mixture mean, each component is
    /// shifted by `m` and squared, and `Var = sum_i p_i E[(X_i - m)^2]`.
    pub fn variance(&self) -> f64 {
        let m = self.expected_value();
        self.components
            .iter()
            .map(|(t, p)| p * square::expected_square(t.shift(m)))
            .sum()
    }

    pub fn std_dev(&self) -> f64 {
        crate::math::sqrt(self.variance().max(0.0))
    }

    /// One-sigma confidence interval `[E - sqrt(Var), E + sqrt(Var)]`.
    pub fn one_sigma_interval(&self) -> Interval {
        let e = self.expected_value();
        let s = self.std_dev();
        Interval {
            lower: e - s,
            upper: e + s,
        }
    }

    /// Rounds every probability to `decimals` places, keeping the rounded
    /// weights verbatim (no renormalization). This reproduces the hand-off
    /// through published two-decimal tables.
    pub fn quantize_probabilities(&self, decimals: u32) -> Result<Self, FrvError> {
        self.quantize_probabilities_within(decimals, PROBABILITY_SUM_TOLERANCE)
    }

    /// Like [`Self::quantize_probabilities`] with a caller-chosen sum
    /// tolerance for the rounded weights.
    pub fn quantize_probabilities_within(
        &self,
        decimals: u32,
        tolerance: f64,
    ) -> Result<Self, FrvError> {
        let components = self
            .components
            .iter()
            .map(|(t, p)| (*t, crate::math::round_to_decimals(*p, decimals)))
            .collect();
        Self::with_probabilities_as_given_within(components, tolerance)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tfn(c: f64, l: f64, r: f64) -> TriangularFuzzyNumber {
        TriangularFuzzyNumber::new(c, l, r).unwrap()
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn expected_value_mixture() {
        let x = DiscreteFuzzyRandomVariable::new(alloc::vec![
            (tfn(5.0, 1.0, 9.0), 0.2),
            (tfn(8.0, 4.0, 12.0), 0.8),
        ])
        .unwrap();
        assert_close(x.expected_value(), 7.4, 1e-12);

        let crisp = DiscreteFuzzyRandomVariable::new(alloc::vec![(
            TriangularFuzzyNumber::crisp(3.5),
            1.0
        )])
        .unwrap();
        assert_eq!(crisp.expected_value(), 3.5);
        assert_eq!(crisp.variance(), 0.0);
        assert_eq!(crisp.one_sigma_interval(), Interval::point(3.5));
    }

    #[test]
    fn first_survey_cell_moments() {
        // Mixture 0.39/0.27/0.34 over (5;4;6), (5;4;6), (10;8;12):
        // e = 6.70, sigma ~= 2.5067.
        let x = DiscreteFuzzyRandomVariable::new(alloc::vec![
            (tfn(5.0, 4.0, 6.0), 0.39),
            (tfn(5.0, 4.0, 6.0), 0.27),
            (tfn(10.0, 8.0, 12.0), 0.34),
        ])
        .unwrap();
        assert_close(x.expected_value(), 6.70, 1e-12);
        assert_close(x.variance(), 6.283333333333333, 1e-10);
        assert_close(x.std_dev(), 2.5066578, 1e-6);
        let iv = x.one_sigma_interval();
        assert_close(iv.lower(), 4.19, 0.005);
        assert_close(iv.upper(), 9.21, 0.005);
    }

    #[test]
    fn second_survey_cell_sigma() {
        let x = DiscreteFuzzyRandomVariable::new(alloc::vec![
            (tfn(3.0, 2.0, 4.0), 0.31),
            (tfn(4.0, 3.0, 5.0), 0.29),
            (tfn(13.0, 11.0, 15.0), 0.40),
        ])
        .unwrap();
        assert_close(x.std_dev(), 4.756, 1e-3);
        let iv = x.one_sigma_interval();
        assert_close(iv.lower(), 2.53, 0.005);
        assert_close(iv.upper(), 12.05, 0.005);
    }

    #[test]
    fn renormalization_within_tolerance() {
        // Sum 1.01, as printed in rounded tables.
        let x = DiscreteFuzzyRandomVariable::new(alloc::vec![
            (tfn(4.0, 3.0, 5.0), 0.29),
            (tfn(4.0, 3.0, 5.0), 0.37),
            (tfn(12.0, 10.0, 14.0), 0.35),
        ])
        .unwrap();
        let total: f64 = x.components().iter().map(|(_, p)| p).sum();
        assert_close(total, 1.0, 1e-12);

        let verbatim = DiscreteFuzzyRandomVariable::with_probabilities_as_given(alloc::vec![
            (tfn(4.0, 3.0, 5.0), 0.29),
            (tfn(4.0, 3.0, 5.0), 0.37),
            (tfn(12.0, 10.0, 14.0), 0.35),
        ])
        .unwrap();
        assert_close(verbatim.expected_value(), 6.84, 1e-12);
    }

    #[test]
    fn rejects_bad_probabilities() {
        assert!(matches!(
            DiscreteFuzzyRandomVariable::new(alloc::vec![]),
            Err(FrvError::Empty)
        ));
        assert!(matches!(
            DiscreteFuzzyRandomVariable::new(alloc::vec![(tfn(1.0, 0.0, 2.0), 0.0)]),
            Err(FrvError::NonPositiveProbability { .. })
        ));
        assert!(matches!(
            DiscreteFuzzyRandomVariable::new(alloc::vec![(tfn(1.0, 0.0, 2.0), 0.5)]),
            Err(FrvError::SumOutOfTolerance { .. })
        ));
    }

    #[test]
    fn interval_basics() {
        let iv = Interval::new(1.0, 3.0).unwrap();
        assert_eq!(iv.midpoint(), 2.0);
        assert_eq!(iv.width(), 2.0);
        assert!(iv.contains(&Interval::new(1.5, 2.5).unwrap(), 0.0));
        assert!(!Interval::new(1.5, 2.5)
            .unwrap()
            .contains(&iv, 0.0));
        assert!(Interval::new(3.0, 1.0).is_err());
    }
}
