//! Triangular fuzzy variables and their possibility, necessity, and
//! credibility measures.
//!
//! A triangular fuzzy variable is written `(center; left; right)`: membership
//! rises linearly from `left` to 1 at `center` and falls linearly to zero at
//! `right`. The credibility of an event is the mean of its possibility and
//! necessity, and the expected value is the credibility-weighted integral,
//! which for a triangle closes to `(left + 2*center + right) / 4`.

use core::fmt;

/// A triangular fuzzy variable `(center; left; right)` with
/// `left <= center <= right`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangularFuzzyNumber {
    center: f64,
    left: f64,
    right: f64,
}

/// Possibility, necessity, and credibility of one event.
///
/// Invariants: all three lie in `[0, 1]`, `necessity <= credibility <=
/// possibility`, and `credibility = (possibility + necessity) / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureTriple {
    pub possibility: f64,
    pub necessity: f64,
    pub credibility: f64,
}

/// Construction error for [`TriangularFuzzyNumber`].
#[derive(Debug, Clone, PartialEq)]
pub enum TfnError {
    /// The triple is not ordered `left <= center <= right`.
    Unordered { center: f64, left: f64, right: f64 },
    /// A field is NaN or infinite.
    NonFinite,
}

impl fmt::Display for TfnError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TfnError::Unordered {
                center,
                left,
                right,
            } => write!(
                f,
                "triangular fuzzy number ({center}; {left}; {right}) is not ordered left <= center <= right"
            ),
            TfnError::NonFinite => write!(f, "triangular fuzzy number has a non-finite field"),
        }
    }
}

impl core::error::Error for TfnError {}

impl TriangularFuzzyNumber {
    /// Builds `(center; left; right)`, validating `left <= center <= right`.
    pub fn new(center: f64, left: f64, right: f64) -> Result<Self, TfnError> {
        if !(center.is_finite() && left.is_finite() && right.is_finite()) {
            return Err(TfnError::NonFinite);
        }
        if !(left <= center && center <= right) {
            return Err(TfnError::Unordered {
                center,
                left,
                right,
            });
        }
        Ok(Self {
            center,
            left,
            right,
        })
    }

    /// A crisp number: all three points coincide.
    pub fn crisp(value: f64) -> Self {
        Self {
            center: value,
            left: value,
            right: value,
        }
    }

    /// A symmetric triangle `(center; center - spread; center + spread)`.
    pub fn symmetric(center: f64, spread: f64) -> Result<Self, TfnError> {
        Self::new(center, center - spread, center + spread)
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn left(&self) -> f64 {
        self.left
    }

    pub fn right(&self) -> f64 {
        self.right
    }

    /// True when all three points coincide.
    pub fn is_crisp(&self) -> bool {
        self.left == self.right
    }

    /// Membership grade at `x`.
    ///
    /// Degenerate flanks (zero width) grade 1 at the coincident point.
    pub fn membership(&self, x: f64) -> f64 {
        if x < self.left || x > self.right {
            return 0.0;
        }
        if x == self.center {
            return 1.0;
        }
        if x < self.center {
            // left <= x < center implies center > left
            (x - self.left) / (self.center - self.left)
        } else {
            (self.right - x) / (self.right - self.center)
        }
    }

    /// Possibility, necessity, and credibility of the event `{X >= r}`.
    pub fn measures_geq(&self, r: f64) -> MeasureTriple {
        let possibility = if r <= self.center {
            1.0
        } else if r <= self.right {
            self.membership(r)
        } else {
            0.0
        };
        let necessity = if r <= self.left {
            1.0
        } else if r <= self.center {
            1.0 - self.membership(r)
        } else {
            0.0
        };
        MeasureTriple {
            possibility,
            necessity,
            credibility: 0.5 * (possibility + necessity),
        }
    }

    /// Possibility, necessity, and credibility of the mirrored event
    /// `{X <= r}`, via the reflected triangle.
    pub fn measures_leq(&self, r: f64) -> MeasureTriple {
        let reflected = Self {
            center: -self.center,
            left: -self.right,
            right: -self.left,
        };
        reflected.measures_geq(-r)
    }

    /// Credibility-theory expected value `(left + 2*center + right) / 4`.
    pub fn expected_value(&self) -> f64 {
        (self.left + 2.0 * self.center + self.right) / 4.0
    }

    /// Translates the triangle by `-m`: `(center - m; left - m; right - m)`.
    pub fn shift(&self, m: f64) -> Self {
        Self {
            center: self.center - m,
            left: self.left - m,
            right: self.right - m,
        }
    }
}

impl fmt::Display for TriangularFuzzyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", self.center, self.left, self.right)
    }
}
