//! Disc intuitionistic fuzzy values and their algebra.
//!
//! A disc intuitionistic fuzzy value (D-IFV) is a triple `⟨(μ, ν); r⟩`: a
//! membership degree `μ`, a non-membership degree `ν` with `μ + ν ≤ 1`, and a
//! radius `r ∈ [0, √2]` describing how far the evidence may plausibly wander
//! around the `(μ, ν)` point. The radius participates in aggregation through
//! one of two combination families:
//!
//! * [`Family::Q`] — contracting: combined radii shrink towards 0
//!   (`r = r_a·r_b/√2`), so uncertainty narrows as evidence accumulates;
//! * [`Family::P`] — expanding: combined radii grow towards `√2`
//!   (`r = √2 − √2(1 − r_a/√2)(1 − r_b/√2)`), so uncertainty compounds.
//!
//! Scoring blends the intuitionistic part with the radius via the parameter
//! `ξ` carried by [`ScoreParams`]; ranking compares scores first and breaks
//! ties with the accuracy function.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest admissible radius of a D-IFV.
pub const MAX_RADIUS: f64 = std::f64::consts::SQRT_2;

/// Slack accepted when validating components, so that rounded literals (for
/// example `0.62 + 0.3800000000000001`) and accumulated floating-point error
/// from closed-form products are admitted and clamped to the boundary rather
/// than rejected.
pub const VALIDATION_SLACK: f64 = 1e-12;

/// Errors produced when constructing or transforming a [`Difv`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DifvError {
    /// Membership degree outside `[0, 1]`.
    #[error("membership degree must lie in [0, 1], got {0}")]
    MembershipOutOfRange(f64),
    /// Non-membership degree outside `[0, 1]`.
    #[error("non-membership degree must lie in [0, 1], got {0}")]
    NonMembershipOutOfRange(f64),
    /// Radius outside `[0, √2]`.
    #[error("radius must lie in [0, sqrt(2)], got {0}")]
    RadiusOutOfRange(f64),
    /// Membership and non-membership sum beyond 1.
    #[error("membership + non-membership must not exceed 1, got {0}")]
    DegreeSumExceeded(f64),
    /// Scalar multiple or power exponent that is not strictly positive.
    #[error("exponent must be strictly positive and finite, got {0}")]
    NonPositiveExponent(f64),
    /// Score blend parameter outside `[0, 1]`.
    #[error("score blend xi must lie in [0, 1], got {0}")]
    XiOutOfRange(f64),
}

/// Radius combination family used by every binary and scalar operation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Contracting family: combined radius `r_a·r_b/√2` never exceeds
    /// `min(r_a, r_b)`.
    #[default]
    Q,
    /// Expanding family: combined radius `√2 − √2(1−r_a/√2)(1−r_b/√2)` is
    /// never below `max(r_a, r_b)`.
    P,
}

impl Family {
    /// Radius of a binary combination in this family.
    fn combine_radius(self, ra: f64, rb: f64) -> f64 {
        match self {
            Family::Q => ra * rb / MAX_RADIUS,
            Family::P => MAX_RADIUS - MAX_RADIUS * (1.0 - ra / MAX_RADIUS) * (1.0 - rb / MAX_RADIUS),
        }
    }

    /// Radius of a scalar multiple / power with exponent `zeta` in this family.
    fn scale_radius(self, r: f64, zeta: f64) -> f64 {
        match self {
            Family::Q => MAX_RADIUS * (r / MAX_RADIUS).powf(zeta),
            Family::P => MAX_RADIUS - MAX_RADIUS * (1.0 - r / MAX_RADIUS).powf(zeta),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Q => write!(f, "q"),
            Family::P => write!(f, "p"),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "q" => Ok(Family::Q),
            "p" => Ok(Family::P),
            other => Err(format!("unknown radius family `{other}` (expected `q` or `p`)")),
        }
    }
}

/// Blend between intuitionistic information (`ξ`) and radius information
/// (`1 − ξ`) in the score and accuracy functions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct ScoreParams {
    xi: f64,
}

impl ScoreParams {
    /// Validates `xi ∈ [0, 1]`.
    pub fn new(xi: f64) -> Result<Self, DifvError> {
        if !xi.is_finite() || !(0.0..=1.0).contains(&xi) {
            return Err(DifvError::XiOutOfRange(xi));
        }
        Ok(Self { xi })
    }

    /// The blend parameter.
    pub fn xi(self) -> f64 {
        self.xi
    }
}

impl TryFrom<f64> for ScoreParams {
    type Error = DifvError;

    fn try_from(xi: f64) -> Result<Self, Self::Error> {
        Self::new(xi)
    }
}

impl From<ScoreParams> for f64 {
    fn from(p: ScoreParams) -> f64 {
        p.xi
    }
}

/// A disc intuitionistic fuzzy value `⟨(μ, ν); r⟩`.
///
/// Instances always satisfy `μ, ν ∈ [0, 1]`, `μ + ν ≤ 1` and `r ∈ [0, √2]`;
/// the only way to obtain one is through [`Difv::new`] (which validates) or
/// through operations on existing values (which are closed).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DifvParts")]
pub struct Difv {
    mu: f64,
    nu: f64,
    r: f64,
}

/// Raw triple used to deserialize a [`Difv`] with validation.
#[derive(Deserialize)]
struct DifvParts {
    mu: f64,
    nu: f64,
    r: f64,
}

impl TryFrom<DifvParts> for Difv {
    type Error = DifvError;

    fn try_from(parts: DifvParts) -> Result<Self, Self::Error> {
        Difv::new(parts.mu, parts.nu, parts.r)
    }
}

impl Difv {
    /// Validates a raw triple and clamps slack-sized overshoot onto the
    /// boundary. Rejects non-finite components, components outside their
    /// range by more than [`VALIDATION_SLACK`], and `μ + ν > 1` beyond the
    /// same slack.
    pub fn new(mu: f64, nu: f64, r: f64) -> Result<Self, DifvError> {
        let in_unit = |x: f64| x.is_finite() && (-VALIDATION_SLACK..=1.0 + VALIDATION_SLACK).contains(&x);
        if !in_unit(mu) {
            return Err(DifvError::MembershipOutOfRange(mu));
        }
        if !in_unit(nu) {
            return Err(DifvError::NonMembershipOutOfRange(nu));
        }
        if !r.is_finite() || !(-VALIDATION_SLACK..=MAX_RADIUS + VALIDATION_SLACK).contains(&r) {
            return Err(DifvError::RadiusOutOfRange(r));
        }
        let mu = mu.clamp(0.0, 1.0);
        let nu = nu.clamp(0.0, 1.0);
        let r = r.clamp(0.0, MAX_RADIUS);
        if mu + nu > 1.0 + VALIDATION_SLACK {
            return Err(DifvError::DegreeSumExceeded(mu + nu));
        }
        // Land exactly on the μ + ν = 1 boundary when rounding overshot it.
        let nu = nu.min(1.0 - mu);
        Ok(Self { mu, nu, r })
    }

    /// Constructor for results of closed operations: clamps floating-point
    /// overshoot without the ability to fail. Inputs are expected to be
    /// within [`VALIDATION_SLACK`] of the valid region.
    pub(crate) fn from_closed(mu: f64, nu: f64, r: f64) -> Self {
        debug_assert!(
            (-1e-9..=1.0 + 1e-9).contains(&mu),
            "closed op produced mu = {mu}"
        );
        debug_assert!(
            (-1e-9..=1.0 + 1e-9).contains(&nu),
            "closed op produced nu = {nu}"
        );
        debug_assert!(
            (-1e-9..=MAX_RADIUS + 1e-9).contains(&r),
            "closed op produced r = {r}"
        );
        let mu = mu.clamp(0.0, 1.0);
        let nu = nu.clamp(0.0, 1.0).min(1.0 - mu);
        Self {
            mu,
            nu,
            r: r.clamp(0.0, MAX_RADIUS),
        }
    }

    /// Membership degree `μ`.
    pub fn mu(self) -> f64 {
        self.mu
    }

    /// Non-membership degree `ν`.
    pub fn nu(self) -> f64 {
        self.nu
    }

    /// Radius `r`.
    pub fn r(self) -> f64 {
        self.r
    }

    /// Score `ξ·(μ − ν + 1)/2 + (1 − ξ)·r/√2`, always in `[0, 1]`.
    pub fn score(self, params: ScoreParams) -> f64 {
        let xi = params.xi();
        xi * ((self.mu - self.nu + 1.0) / 2.0) + (1.0 - xi) * self.r / MAX_RADIUS
    }

    /// Accuracy `ξ·(μ + ν) + (1 − ξ)·r/√2`, always in `[0, 1]`.
    pub fn accuracy(self, params: ScoreParams) -> f64 {
        let xi = params.xi();
        xi * (self.mu + self.nu) + (1.0 - xi) * self.r / MAX_RADIUS
    }

    /// Ranking order: by score, ties broken by accuracy, remaining ties are
    /// genuine equivalences and compare as `Equal`.
    pub fn compare(self, other: Difv, params: ScoreParams) -> Ordering {
        self.score(params)
            .total_cmp(&other.score(params))
            .then_with(|| self.accuracy(params).total_cmp(&other.accuracy(params)))
    }

    /// Complement `⟨(ν, μ); r⟩`: swaps membership and non-membership, keeps
    /// the radius. An involution.
    pub fn complement(self) -> Self {
        Self {
            mu: self.nu,
            nu: self.mu,
            r: self.r,
        }
    }

    /// Sum `a ⊕ b`: `μ = 1 − (1−μ_a)(1−μ_b)`, `ν = ν_a·ν_b`, radius combined
    /// in the given family.
    pub fn oplus(self, other: Difv, family: Family) -> Self {
        Self::from_closed(
            1.0 - (1.0 - self.mu) * (1.0 - other.mu),
            self.nu * other.nu,
            family.combine_radius(self.r, other.r),
        )
    }

    /// Product `a ⊗ b`: `μ = μ_a·μ_b`, `ν = 1 − (1−ν_a)(1−ν_b)`, radius
    /// combined in the given family.
    pub fn otimes(self, other: Difv, family: Family) -> Self {
        Self::from_closed(
            self.mu * other.mu,
            1.0 - (1.0 - self.nu) * (1.0 - other.nu),
            family.combine_radius(self.r, other.r),
        )
    }

    /// Scalar multiple `ζ ⊙ v`: `μ = 1 − (1−μ)^ζ`, `ν = ν^ζ`, radius scaled
    /// in the given family. Requires `ζ > 0`; a zero radius follows the
    /// continuous extension `0^ζ = 0`.
    pub fn scalar(self, zeta: f64, family: Family) -> Result<Self, DifvError> {
        if !zeta.is_finite() || zeta <= 0.0 {
            return Err(DifvError::NonPositiveExponent(zeta));
        }
        Ok(Self::from_closed(
            1.0 - (1.0 - self.mu).powf(zeta),
            self.nu.powf(zeta),
            family.scale_radius(self.r, zeta),
        ))
    }

    /// Power `v^ζ`: `μ = μ^ζ`, `ν = 1 − (1−ν)^ζ`, radius scaled in the given
    /// family. Requires `ζ > 0`.
    pub fn power(self, zeta: f64, family: Family) -> Result<Self, DifvError> {
        if !zeta.is_finite() || zeta <= 0.0 {
            return Err(DifvError::NonPositiveExponent(zeta));
        }
        Ok(Self::from_closed(
            self.mu.powf(zeta),
            1.0 - (1.0 - self.nu).powf(zeta),
            family.scale_radius(self.r, zeta),
        ))
    }
}

impl fmt::Display for Difv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨({:.6}, {:.6}); {:.6}⟩", self.mu, self.nu, self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn difv(mu: f64, nu: f64, r: f64) -> Difv {
        Difv::new(mu, nu, r).expect("valid test value")
    }

    fn params(xi: f64) -> ScoreParams {
        ScoreParams::new(xi).expect("valid xi")
    }

    // ---- construction -----------------------------------------------------

    #[test]
    fn accepts_scale_extremes_and_corners() {
        assert!(Difv::new(0.9, 0.1, 0.9).is_ok());
        assert!(Difv::new(0.0, 0.0, 0.0).is_ok());
        assert!(Difv::new(1.0, 0.0, MAX_RADIUS).is_ok());
    }

    #[test]
    fn rejects_degree_sum_above_one() {
        assert_eq!(
            Difv::new(0.7, 0.5, 0.3),
            Err(DifvError::DegreeSumExceeded(1.2))
        );
    }

    #[test]
    fn rejects_out_of_range_components() {
        assert!(matches!(
            Difv::new(-0.1, 0.2, 0.3),
            Err(DifvError::MembershipOutOfRange(_))
        ));
        assert!(matches!(
            Difv::new(0.1, 1.2, 0.3),
            Err(DifvError::NonMembershipOutOfRange(_))
        ));
        assert!(matches!(
            Difv::new(0.1, 0.2, 1.5),
            Err(DifvError::RadiusOutOfRange(_))
        ));
        assert!(matches!(
            Difv::new(f64::NAN, 0.2, 0.3),
            Err(DifvError::MembershipOutOfRange(_))
        ));
    }

    #[test]
    fn clamps_slack_sized_overshoot_onto_boundary() {
        let v = Difv::new(0.62, 0.38 + 4e-13, 0.5).expect("within slack");
        assert!(v.mu() + v.nu() <= 1.0);
        let w = Difv::new(1.0 + 5e-13, 0.0, MAX_RADIUS + 5e-13).expect("within slack");
        assert_eq!(w.mu(), 1.0);
        assert_eq!(w.r(), MAX_RADIUS);
    }

    // ---- score / accuracy / compare ---------------------------------------

    #[test]
    fn score_matches_reference_significance_value() {
        let sd = difv(0.619, 0.380, 0.717);
        assert_abs_diff_eq!(sd.score(params(0.8)), 0.596, epsilon = 0.002);
    }

    #[test]
    fn score_hits_extremes() {
        for xi in [0.0, 0.3, 1.0] {
            assert_abs_diff_eq!(difv(1.0, 0.0, MAX_RADIUS).score(params(xi)), 1.0, epsilon = 1e-15);
            assert_abs_diff_eq!(difv(0.0, 1.0, 0.0).score(params(xi)), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn accuracy_matches_formula() {
        assert_abs_diff_eq!(difv(0.5, 0.5, 0.0).accuracy(params(1.0)), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(difv(0.0, 0.0, 0.0).accuracy(params(0.4)), 0.0, epsilon = 1e-15);
        // 0.5·0.5 + 0.5·1
        assert_abs_diff_eq!(
            difv(0.3, 0.2, MAX_RADIUS).accuracy(params(0.5)),
            0.75,
            epsilon = 1e-12
        );
    }

    #[test]
    fn compare_orders_by_score_then_accuracy() {
        // Scores 0.352167 vs 0.464125 at xi = 0.8.
        let a = difv(0.32, 0.68, 0.68);
        let b = difv(0.49, 0.51, 0.51);
        assert_eq!(a.compare(b, params(0.8)), Ordering::Less);
        assert_eq!(a.compare(a, params(0.8)), Ordering::Equal);

        // Equal scores at xi = 1 (both 0.6); accuracy 1.0 vs 0.6 decides.
        let c = difv(0.6, 0.4, 0.2);
        let d = difv(0.4, 0.2, 0.2);
        assert_eq!(c.compare(d, params(1.0)), Ordering::Greater);
    }

    // ---- complement --------------------------------------------------------

    #[test]
    fn complement_swaps_degrees_and_keeps_radius() {
        let v = difv(0.6, 0.4, 0.6);
        let c = v.complement();
        assert_eq!((c.mu(), c.nu(), c.r()), (0.4, 0.6, 0.6));
        assert_eq!(c.complement(), v);
        let fixed = difv(0.5, 0.5, 0.3);
        assert_eq!(fixed.complement(), fixed);
    }

    // ---- binary operations --------------------------------------------------

    #[test]
    fn oplus_q_matches_closed_form() {
        let got = difv(0.5, 0.3, 0.6).oplus(difv(0.4, 0.35, 0.9), Family::Q);
        assert_abs_diff_eq!(got.mu(), 0.7, epsilon = 1e-12);
        assert_abs_diff_eq!(got.nu(), 0.105, epsilon = 1e-12);
        assert_abs_diff_eq!(got.r(), 0.381837661841, epsilon = 1e-10);
    }

    #[test]
    fn oplus_q_maximal_radius_is_absorbing() {
        let half = difv(0.5, 0.5, MAX_RADIUS);
        let got = half.oplus(half, Family::Q);
        assert_abs_diff_eq!(got.mu(), 0.75, epsilon = 1e-12);
        assert_abs_diff_eq!(got.nu(), 0.25, epsilon = 1e-12);
        assert_abs_diff_eq!(got.r(), MAX_RADIUS, epsilon = 1e-12);
    }

    #[test]
    fn oplus_p_expands_radius() {
        let got = difv(0.3, 0.6, 0.4).oplus(difv(0.2, 0.7, 0.6), Family::P);
        assert_abs_diff_eq!(got.mu(), 0.44, epsilon = 1e-12);
        assert_abs_diff_eq!(got.nu(), 0.42, epsilon = 1e-12);
        assert_abs_diff_eq!(got.r(), 0.830294372515, epsilon = 1e-10);
    }

    #[test]
    fn zero_value_is_additive_identity_on_degrees() {
        let zero = difv(0.0, 1.0, 0.0);
        let v = difv(0.55, 0.25, 0.8);
        for family in [Family::Q, Family::P] {
            let got = zero.oplus(v, family);
            assert_abs_diff_eq!(got.mu(), v.mu(), epsilon = 1e-15);
            assert_abs_diff_eq!(got.nu(), v.nu(), epsilon = 1e-15);
        }
        // The q-family also preserves no radius information from ⟨(0,1);0⟩:
        // the combined radius collapses to 0, while the p-family keeps r_v.
        assert_abs_diff_eq!(zero.oplus(v, Family::P).r(), v.r(), epsilon = 1e-12);
    }

    #[test]
    fn otimes_matches_closed_forms() {
        let a = difv(0.5, 0.4, 0.2);
        let b = difv(0.6, 0.3, 0.5);
        let q = a.otimes(b, Family::Q);
        assert_abs_diff_eq!(q.mu(), 0.30, epsilon = 1e-12);
        assert_abs_diff_eq!(q.nu(), 0.58, epsilon = 1e-12);
        assert_abs_diff_eq!(q.r(), 0.070710678119, epsilon = 1e-10);
        let p = a.otimes(b, Family::P);
        assert_abs_diff_eq!(p.r(), 0.629289321881, epsilon = 1e-10);
    }

    #[test]
    fn otimes_identity_and_annihilator() {
        let v = difv(0.37, 0.21, 0.9);
        let one = difv(1.0, 0.0, MAX_RADIUS);
        let got = one.otimes(v, Family::Q);
        assert_abs_diff_eq!(got.mu(), v.mu(), epsilon = 1e-15);
        assert_abs_diff_eq!(got.nu(), v.nu(), epsilon = 1e-15);
        assert_abs_diff_eq!(got.r(), v.r(), epsilon = 1e-12);

        let zero = difv(0.0, 1.0, 0.0);
        let ann = v.otimes(zero, Family::P);
        assert_eq!((ann.mu(), ann.nu()), (0.0, 1.0));
    }

    // ---- scalar / power ------------------------------------------------------

    #[test]
    fn scalar_identity_exponent() {
        let v = difv(0.37, 0.21, 0.9);
        for family in [Family::Q, Family::P] {
            let got = v.scalar(1.0, family).unwrap();
            assert_abs_diff_eq!(got.mu(), v.mu(), epsilon = 1e-15);
            assert_abs_diff_eq!(got.nu(), v.nu(), epsilon = 1e-15);
            assert_abs_diff_eq!(got.r(), v.r(), epsilon = 1e-12);
        }
    }

    #[test]
    fn scalar_matches_closed_forms() {
        let got = difv(0.71, 0.29, 0.72).scalar(0.3, Family::Q).unwrap();
        assert_abs_diff_eq!(got.mu(), 0.310206020770, epsilon = 1e-10);
        assert_abs_diff_eq!(got.nu(), 0.689793979230, epsilon = 1e-10);
        assert_abs_diff_eq!(got.r(), 1.154942192693, epsilon = 1e-10);

        let p = difv(0.5, 0.5, 0.5).scalar(2.0, Family::P).unwrap();
        assert_abs_diff_eq!(p.mu(), 0.75, epsilon = 1e-12);
        assert_abs_diff_eq!(p.nu(), 0.25, epsilon = 1e-12);
        assert_abs_diff_eq!(p.r(), 0.823223304703, epsilon = 1e-10);
    }

    #[test]
    fn scalar_blend_reproduces_reference_significance_degree() {
        // 0.3 ⊙ ⟨(0.71,0.29);0.72⟩ ⊕ 0.7 ⊙ ⟨(0.57,0.43);0.72⟩ in the q family.
        let blended = difv(0.71, 0.29, 0.72)
            .scalar(0.3, Family::Q)
            .unwrap()
            .oplus(difv(0.57, 0.43, 0.72).scalar(0.7, Family::Q).unwrap(), Family::Q);
        assert_abs_diff_eq!(blended.mu(), 0.619, epsilon = 0.005);
        assert_abs_diff_eq!(blended.nu(), 0.380, epsilon = 0.005);
        assert_abs_diff_eq!(blended.r(), 0.720, epsilon = 0.005);
    }

    #[test]
    fn power_matches_closed_forms() {
        let q = difv(0.6, 0.3, 0.4).power(2.0, Family::Q).unwrap();
        assert_abs_diff_eq!(q.mu(), 0.36, epsilon = 1e-12);
        assert_abs_diff_eq!(q.nu(), 0.51, epsilon = 1e-12);
        assert_abs_diff_eq!(q.r(), 0.113137084990, epsilon = 1e-10);

        let p = difv(0.6, 0.3, 0.4).power(0.5, Family::P).unwrap();
        assert_abs_diff_eq!(p.mu(), 0.774596669241, epsilon = 1e-10);
        assert_abs_diff_eq!(p.nu(), 0.163339973466, epsilon = 1e-10);
        assert_abs_diff_eq!(p.r(), 0.216584832319, epsilon = 1e-10);
    }

    #[test]
    fn power_fixed_point_at_maximal_element() {
        let top = difv(1.0, 0.0, MAX_RADIUS);
        for zeta in [0.2, 1.0, 3.7] {
            let got = top.power(zeta, Family::Q).unwrap();
            assert_eq!(got.mu(), 1.0);
            assert_eq!(got.nu(), 0.0);
            assert_abs_diff_eq!(got.r(), MAX_RADIUS, epsilon = 1e-12);
        }
    }

    #[test]
    fn zero_radius_follows_continuous_extension() {
        let v = difv(0.4, 0.3, 0.0);
        assert_eq!(v.scalar(0.5, Family::Q).unwrap().r(), 0.0);
        assert_eq!(v.power(0.5, Family::Q).unwrap().r(), 0.0);
    }

    #[test]
    fn nonpositive_exponents_rejected() {
        let v = difv(0.4, 0.3, 0.2);
        for family in [Family::Q, Family::P] {
            assert!(matches!(v.scalar(0.0, family), Err(DifvError::NonPositiveExponent(_))));
            assert!(matches!(v.power(-1.0, family), Err(DifvError::NonPositiveExponent(_))));
            assert!(matches!(
                v.scalar(f64::NAN, family),
                Err(DifvError::NonPositiveExponent(_))
            ));
        }
    }

    // ---- params and serde -----------------------------------------------------

    #[test]
    fn score_params_validates_range() {
        assert!(ScoreParams::new(0.0).is_ok());
        assert!(ScoreParams::new(1.0).is_ok());
        assert!(matches!(ScoreParams::new(1.1), Err(DifvError::XiOutOfRange(_))));
        assert!(matches!(ScoreParams::new(f64::NAN), Err(DifvError::XiOutOfRange(_))));
    }

    #[test]
    fn family_round_trips_through_strings() {
        assert_eq!("q".parse::<Family>().unwrap(), Family::Q);
        assert_eq!("P".parse::<Family>().unwrap(), Family::P);
        assert!("x".parse::<Family>().is_err());
        assert_eq!(Family::Q.to_string(), "q");
    }

    #[test]
    fn serde_rejects_invalid_triples() {
        let ok: Difv = serde_json::from_str(r#"{"mu": 0.6, "nu": 0.4, "r": 0.6}"#).unwrap();
        assert_eq!(ok, difv(0.6, 0.4, 0.6));
        let bad = serde_json::from_str::<Difv>(r#"{"mu": 0.7, "nu": 0.5, "r": 0.3}"#);
        assert!(bad.is_err());
    }
}
