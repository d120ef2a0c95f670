//! The square of a shifted triangular fuzzy variable.
//!
//! For `Z = Y^2` with `Y` triangular, the membership of `Z` is
//! `mu_Z(z) = max(mu_Y(sqrt z), mu_Y(-sqrt z))`: a unimodal curve whose
//! pieces are affine in `sqrt z`. Supports that straddle zero need care:
//! both roots can be alive on the same `z` range, and on the falling side
//! the winning root can switch once when the triangle is asymmetric. This
//! module builds that piecewise profile exactly, exposes the credibility
//! `Cr{Z >= r}`, and integrates it in closed form (terms in `z` and
//! `z^(3/2)`) to get `E[Z]`. A trapezoid quadrature of the same credibility
//! curve serves as an independent numeric cross-check.

use crate::math;
use crate::tfn::TriangularFuzzyNumber;
use alloc::vec::Vec;
use core::fmt;

/// Which root and which flank of the source triangle realizes the maximum
/// on a piece of the squared profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootBranch {
    /// `y = +sqrt(z)` on the rising flank `[left, center]`.
    PlusRising,
    /// `y = +sqrt(z)` on the falling flank `[center, right]`.
    PlusFalling,
    /// `y = -sqrt(z)` on the rising flank.
    MinusRising,
    /// `y = -sqrt(z)` on the falling flank.
    MinusFalling,
}

/// One monotone piece of the squared profile: on `[z0, z1]`,
/// `mu(z) = alpha + beta * sqrt(z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfilePiece {
    pub z0: f64,
    pub z1: f64,
    pub alpha: f64,
    pub beta: f64,
    pub branch: RootBranch,
    /// True for pieces left of the peak (membership nondecreasing).
    pub rising: bool,
}

/// Piecewise membership profile of `Z = Y^2` for a triangular `Y`.
#[derive(Debug, Clone, PartialEq)]
pub struct SquaredProfile {
    source: TriangularFuzzyNumber,
    support_start: f64,
    peak: f64,
    support_end: f64,
    pieces: Vec<ProfilePiece>,
}

/// Errors from squared-profile queries.
#[derive(Debug, Clone, PartialEq)]
pub enum SquareError {
    /// `Cr{Z >= r}` queried at `r < 0`; the squared variable is nonnegative.
    NegativeThreshold { r: f64 },
    /// Quadrature asked for fewer than the minimum number of steps.
    TooFewSteps { steps: usize, minimum: usize },
}

impl fmt::Display for SquareError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SquareError::NegativeThreshold { r } => {
                write!(f, "credibility threshold {r} is negative; Y^2 is nonnegative")
            }
            SquareError::TooFewSteps { steps, minimum } => {
                write!(f, "quadrature needs at least {minimum} steps, got {steps}")
            }
        }
    }
}

impl core::error::Error for SquareError {}

/// Minimum step count accepted by [`expected_square_quadrature`].
pub const MIN_QUADRATURE_STEPS: usize = 1_000;

impl SquaredProfile {
    /// Builds the profile of `Z = Y^2` for the (typically shifted) triangle `y`.
    pub fn new(y: TriangularFuzzyNumber) -> Self {
        let (c, l, r) = (y.center(), y.left(), y.right());
        let peak = c * c;
        if y.is_crisp() {
            return Self {
                source: y,
                support_start: peak,
                peak,
                support_end: peak,
                pieces: Vec::new(),
            };
        }

        let support_start = if l <= 0.0 && 0.0 <= r {
            0.0
        } else if l > 0.0 {
            l * l
        } else {
            r * r
        };
        let support_end = (l * l).max(r * r);

        // Candidate piece boundaries in s = sqrt(z) space: the squares of the
        // triangle's corners, plus the crossing of the two falling-side
        // branches when the support straddles zero asymmetrically.
        let s_start = math::sqrt(support_start);
        let s_end = math::sqrt(support_end);
        let mut cuts = Vec::with_capacity(6);
        for s in [s_start, c.abs(), l.abs(), r.abs(), s_end] {
            if s >= s_start - 1e-15 && s <= s_end + 1e-15 {
                cuts.push(s.clamp(s_start, s_end));
            }
        }
        if l < 0.0 && r > 0.0 {
            // Falling-side candidates: + root on the falling flank and - root
            // on the rising flank. Affine in s; at most one crossing.
            let (af, bf) = (r / (r - c), -1.0 / (r - c));
            let (ag, bg) = (-l / (c - l), -1.0 / (c - l));
            if (bf - bg).abs() > 1e-15 {
                let s_cross = (ag - af) / (bf - bg);
                if s_cross > c.abs() && s_cross < s_end {
                    cuts.push(s_cross);
                }
            }
        }
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        cuts.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * (1.0 + s_end));

        let mut pieces = Vec::with_capacity(cuts.len().saturating_sub(1));
        for w in cuts.windows(2) {
            let (s0, s1) = (w[0], w[1]);
            if s1 - s0 <= 1e-15 {
                continue;
            }
            let sm = 0.5 * (s0 + s1);
            let plus = y.membership(sm);
            let minus = y.membership(-sm);
            let branch = if plus >= minus {
                if sm <= c {
                    RootBranch::PlusRising
                } else {
                    RootBranch::PlusFalling
                }
            } else if -sm <= c {
                RootBranch::MinusRising
            } else {
                RootBranch::MinusFalling
            };
            let (alpha, beta) = match branch {
                RootBranch::PlusRising => (-l / (c - l), 1.0 / (c - l)),
                RootBranch::PlusFalling => (r / (r - c), -1.0 / (r - c)),
                RootBranch::MinusRising => (-l / (c - l), -1.0 / (c - l)),
                RootBranch::MinusFalling => (r / (r - c), 1.0 / (r - c)),
            };
            pieces.push(ProfilePiece {
                z0: s0 * s0,
                z1: s1 * s1,
                alpha,
                beta,
                branch,
                rising: sm * sm < peak,
            });
        }

        Self {
            source: y,
            support_start,
            peak,
            support_end,
            pieces,
        }
    }

    pub fn source(&self) -> TriangularFuzzyNumber {
        self.source
    }

    /// Support of `Z` on the z axis: `[min y^2, max(left^2, right^2)]`.
    pub fn support(&self) -> (f64, f64) {
        (self.support_start, self.support_end)
    }

    /// The z value where membership reaches 1: `center^2`.
    pub fn peak(&self) -> f64 {
        self.peak
    }

    pub fn pieces(&self) -> &[ProfilePiece] {
        &self.pieces
    }

    /// Membership of `Z = Y^2` at `z`: `max(mu_Y(sqrt z), mu_Y(-sqrt z))`.
    pub fn membership(&self, z: f64) -> f64 {
        if z < 0.0 {
            return 0.0;
        }
        if self.source.is_crisp() {
            return if z == self.peak { 1.0 } else { 0.0 };
        }
        let s = math::sqrt(z);
        self.source.membership(s).max(self.source.membership(-s))
    }

    /// Credibility `Cr{Z >= r}`: 1 below the support, `(2 - mu)/2` on the
    /// rising side, `mu/2` on the falling side, 0 above the support.
    pub fn credibility_geq(&self, r: f64) -> Result<f64, SquareError> {
        if r < 0.0 {
            return Err(SquareError::NegativeThreshold { r });
        }
        if self.source.is_crisp() {
            return Ok(if r <= self.peak { 1.0 } else { 0.0 });
        }
        if r < self.support_start {
            return Ok(1.0);
        }
        if r > self.support_end {
            return Ok(0.0);
        }
        let mu = self.membership(r);
        Ok(if r < self.peak {
            0.5 * (2.0 - mu)
        } else {
            0.5 * mu
        })
    }

    /// `E[Z] = integral of Cr{Z >= r} over [0, inf)`, by exact piecewise
    /// antiderivatives (terms in `z` and `z^(3/2)`).
    pub fn expected_square(&self) -> f64 {
        if self.source.is_crisp() {
            return self.peak;
        }
        // Cr = 1 on [0, support_start].
        let mut total = self.support_start;
        for p in &self.pieces {
            total += integrate_piece(p);
        }
        total
    }
}

fn power_three_halves(z: f64) -> f64 {
    z * math::sqrt(z)
}

/// Integral over one piece of `(2 - mu)/2` (rising) or `mu/2` (falling),
/// where `mu = alpha + beta * sqrt(z)`.
fn integrate_piece(p: &ProfilePiece) -> f64 {
    let dz = p.z1 - p.z0;
    let dz32 = power_three_halves(p.z1) - power_three_halves(p.z0);
    if p.rising {
        0.5 * ((2.0 - p.alpha) * dz - p.beta * dz32 * (2.0 / 3.0))
    } else {
        0.5 * (p.alpha * dz + p.beta * dz32 * (2.0 / 3.0))
    }
}

/// Profile construction for a shifted triangle (convenience wrapper).
pub fn square_profile(shifted: TriangularFuzzyNumber) -> SquaredProfile {
    SquaredProfile::new(shifted)
}

/// Closed-form `E[Y^2]` for a shifted triangle.
pub fn expected_square(shifted: TriangularFuzzyNumber) -> f64 {
    SquaredProfile::new(shifted).expected_square()
}

/// Trapezoid quadrature of `Cr{Y^2 >= r}`: `steps` uniform intervals on each
/// monotone piece, piece boundaries always sample points, plus the exact
/// leading segment where the credibility is constant 1.
pub fn expected_square_quadrature(
    shifted: TriangularFuzzyNumber,
    steps: usize,
) -> Result<f64, SquareError> {
    if steps < MIN_QUADRATURE_STEPS {
        return Err(SquareError::TooFewSteps {
            steps,
            minimum: MIN_QUADRATURE_STEPS,
        });
    }
    let profile = SquaredProfile::new(shifted);
    if shifted.is_crisp() {
        return Ok(profile.expected_square());
    }
    let (start, _) = profile.support();
    let mut total = start;
    for p in profile.pieces() {
        let h = (p.z1 - p.z0) / steps as f64;
        if h <= 0.0 {
            continue;
        }
        let mut acc = 0.5
            * (profile.credibility_geq(p.z0).expect("nonnegative")
                + profile.credibility_geq(p.z1).expect("nonnegative"));
        for k in 1..steps {
            acc += profile
                .credibility_geq(p.z0 + h * k as f64)
                .expect("nonnegative");
        }
        total += acc * h;
    }
    Ok(total)
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
    fn straddling_profile_branches() {
        // (-2.4; -6.4; 1.6): rising (1.6 + sqrt z)/4 on [0, 2.4^2], falling
        // (6.4 - sqrt z)/4 on [2.4^2, 6.4^2].
        let p = SquaredProfile::new(tfn(-2.4, -6.4, 1.6));
        assert_eq!(p.support().0, 0.0);
        assert_close(p.support().1, 40.96, 1e-12);
        assert_close(p.peak(), 5.76, 1e-12);
        assert_close(p.membership(0.0), 0.4, 1e-12);
        assert_close(p.membership(1.0), (1.6 + 1.0) / 4.0, 1e-12);
        assert_close(p.membership(5.76), 1.0, 1e-12);
        assert_close(p.membership(16.0), (6.4 - 4.0) / 4.0, 1e-12);
        assert_close(p.membership(40.96), 0.0, 1e-12);
        assert_close(p.membership(41.0), 0.0, 1e-12);
    }

    #[test]
    fn negative_support_profile() {
        // (-1.7; -2.7; -0.7): rising (sqrt z - 0.7) on [0.49, 2.89], falling
        // (2.7 - sqrt z) on [2.89, 7.29].
        let p = SquaredProfile::new(tfn(-1.7, -2.7, -0.7));
        assert_close(p.support().0, 0.49, 1e-12);
        assert_close(p.support().1, 7.29, 1e-12);
        assert_close(p.membership(1.0), 0.3, 1e-12);
        assert_close(p.membership(2.89), 1.0, 1e-12);
        assert_close(p.membership(4.0), 0.7, 1e-12);
        assert_close(p.membership(0.2), 0.0, 1e-12);
    }

    #[test]
    fn symmetric_about_zero_profile() {
        let p = SquaredProfile::new(tfn(0.0, -1.0, 1.0));
        assert_eq!(p.support(), (0.0, 1.0));
        assert_close(p.membership(0.0), 1.0, 1e-12);
        assert_close(p.membership(0.25), 0.5, 1e-12);
        for piece in p.pieces() {
            assert!(!piece.rising);
        }
    }

    #[test]
    fn asymmetric_straddle_branch_switch() {
        // (1; -10; 1.5): past the peak, the + root dies at z = 1.5^2 while the
        // - root keeps the profile alive out to z = 100, and the two falling
        // branches cross inside (1, 1.5^2).
        let p = SquaredProfile::new(tfn(1.0, -10.0, 1.5));
        assert_eq!(p.support(), (0.0, 100.0));
        // crossing at s* where (1.5 - s)/0.5 = (10 - s)/11
        let s_star = 11.5 / 10.5;
        let z_star = s_star * s_star;
        assert_close(p.membership(z_star - 1e-9), (1.5 - s_star) / 0.5, 1e-6);
        assert_close(p.membership(z_star + 1e-9), (10.0 - s_star) / 11.0, 1e-6);
        assert_close(p.membership(4.0), (10.0 - 2.0) / 11.0, 1e-12);
        assert_close(p.membership(100.0), 0.0, 1e-12);
    }

    #[test]
    fn credibility_examples() {
        let p = SquaredProfile::new(tfn(-2.4, -6.4, 1.6));
        assert_close(p.credibility_geq(0.0).unwrap(), 0.8, 1e-12);
        let q = SquaredProfile::new(tfn(-1.7, -2.7, -0.7));
        assert_eq!(q.credibility_geq(0.2).unwrap(), 1.0);
        assert_close(q.credibility_geq(2.89).unwrap(), 0.5, 1e-12);
        assert_close(p.credibility_geq(5.76).unwrap(), 0.5, 1e-12);
        assert!(p.credibility_geq(-0.1).is_err());
        assert_eq!(p.credibility_geq(41.0).unwrap(), 0.0);
    }

    #[test]
    fn expected_square_closed_forms() {
        // Non-straddling symmetric triangles close to c^2 + s^2/3.
        assert_close(expected_square(tfn(-1.7, -2.7, -0.7)), 2.89 + 1.0 / 3.0, 1e-12);
        assert_close(expected_square(tfn(3.3, 1.3, 5.3)), 10.89 + 4.0 / 3.0, 1e-12);
        // Straddling case worked by hand from the piecewise antiderivatives.
        assert_close(expected_square(tfn(-2.4, -6.4, 1.6)), 10.922666666666666, 1e-10);
        assert_close(expected_square(tfn(0.6, -3.4, 4.6)), 4.055666666666666, 1e-10);
        assert_eq!(expected_square(TriangularFuzzyNumber::crisp(0.0)), 0.0);
        assert_eq!(expected_square(TriangularFuzzyNumber::crisp(3.0)), 9.0);
    }

    #[test]
    fn quadrature_matches_closed_form() {
        let cases = [
            tfn(-1.7, -2.7, -0.7),
            tfn(3.3, 1.3, 5.3),
            tfn(-2.4, -6.4, 1.6),
            tfn(1.0, -10.0, 1.5),
            tfn(0.0, -1.0, 1.0),
        ];
        for t in cases {
            let exact = expected_square(t);
            let approx = expected_square_quadrature(t, 1_000_000).unwrap();
            assert_close(exact, approx, 1e-4);
        }
        assert_eq!(
            expected_square_quadrature(TriangularFuzzyNumber::crisp(0.0), 1_000).unwrap(),
            0.0
        );
    }

    #[test]
    fn quadrature_rejects_low_step_counts() {
        assert!(expected_square_quadrature(tfn(0.0, -1.0, 1.0), 999).is_err());
    }
}
