//! Fenchel-Nielsen twist derivatives.
//!
//! A twist along `ξ` acts on a lift `ξ̃ = (s₁, s₂)` by sliding the half-plane
//! to its left along `ξ̃` while fixing the right. Cross ratios of ideal points
//! change at the rate given by [`cr_twist_derivative`]. Summing per-lift
//! rates for the configuration `δ̃ ⟂ γ̃₁, γ̃₂` and converting with
//! `dh/d(cr) = tanh(h/2)/cr` gives the coefficients of
//! [`twist_derivative_distance`].
//!
//! Standard position puts `γ̃₁ = (−1, 1)`, `γ̃₂ = (eʰ, −eʰ)` and `δ̃` on the
//! imaginary axis from `i` to `ieʰ`, with `(p, q, r, s) = (−1, eʰ, −eʰ, 1)`.
//! Lifts are oriented with `p` on their right, so the moved side never
//! contains `p`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyptrig::{
    cross_ratio, Angle, BoundaryPoint, Frame, Length, MoebiusMap, PlaneGeodesic, Side,
};

/// Default step of the flow finite difference.
pub const FLOW_STEP: f64 = 1e-5;

/// Four ideal points `(p, q, r, s)` and the lift along which the twist acts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistConfiguration {
    pub z: [BoundaryPoint; 4],
    pub lift: PlaneGeodesic,
}

impl TwistConfiguration {
    pub fn new(z: [BoundaryPoint; 4], lift: PlaneGeodesic) -> Result<Self> {
        for j in 0..4 {
            if z[j] == lift.start || z[j] == lift.end {
                return Err(Error::Degenerate(format!(
                    "boundary case: z{} is an endpoint of the lift",
                    j + 1
                )));
            }
            for k in 0..j {
                if z[j] == z[k] {
                    return Err(Error::Degenerate(format!(
                        "z{} and z{} coincide",
                        k + 1,
                        j + 1
                    )));
                }
            }
        }
        if lift.start == lift.end {
            return Err(Error::Degenerate("lift endpoints coincide".into()));
        }
        Ok(TwistConfiguration { z, lift })
    }

    pub fn transformed(&self, m: &MoebiusMap) -> Self {
        TwistConfiguration {
            z: self.z.map(|x| m.apply(x)),
            lift: self.lift.transformed(m),
        }
    }

    pub fn cross_ratio(&self) -> Result<f64> {
        let [p, q, r, s] = self.z;
        cross_ratio(p, q, r, s)
    }

    /// The points after flowing for time `t`: those on `side` of the lift are
    /// dilated by `eᵗ` about it, the others stay put.
    pub fn flowed(&self, t: f64, side: Side) -> [BoundaryPoint; 4] {
        let n = self.lift.normalizer();
        let back = n.inverse();
        self.z.map(|x| match n.apply(x) {
            BoundaryPoint::Finite(w) if self.lift.side_of(x) == side => {
                back.apply(BoundaryPoint::Finite(w * t.exp()))
            }
            _ => x,
        })
    }
}

const SIGMA: [usize; 4] = [2, 3, 0, 1];
const TAU: [usize; 4] = [3, 2, 1, 0];

/// `cr · Σ_j χ_L(z_j) [(z_σ(j), s₁, s₂, z_j) − (z_τ(j), s₁, s₂, z_j)]`
/// with `σ = (13)(24)`, `τ = (14)(23)` and `χ_L` the left side of the lift.
pub fn cr_twist_derivative(c: &TwistConfiguration) -> Result<f64> {
    let TwistConfiguration { z, lift } = *c;
    TwistConfiguration::new(z, lift)?;
    let mut sum = 0.0;
    for j in 0..4 {
        if lift.side_of(z[j]) == Side::Left {
            sum += cross_ratio(z[SIGMA[j]], lift.start, lift.end, z[j])?
                - cross_ratio(z[TAU[j]], lift.start, lift.end, z[j])?;
        }
    }
    Ok(c.cross_ratio()? * sum)
}

/// Central difference in `t` of the cross ratio under the flow moving the
/// left side (see [`TwistConfiguration::flowed`]).
pub fn numeric_twist_flow_derivative(c: &TwistConfiguration, step: f64) -> Result<f64> {
    flow_derivative_of_side(c, Side::Left, step)
}

/// As [`numeric_twist_flow_derivative`], moving the chosen side instead.
pub fn flow_derivative_of_side(c: &TwistConfiguration, side: Side, step: f64) -> Result<f64> {
    TwistConfiguration::new(c.z, c.lift)?;
    if !(step > 0.0) {
        return Err(Error::Configuration(format!(
            "finite-difference step {step} must be positive"
        )));
    }
    // The cross ratio is invariant, so it is evaluated in the normalized
    // frame. Points moved together are differenced before scaling, and a
    // moved and a fixed point lie on opposite sides of 0, so no factor
    // cancels catastrophically.
    let n = c.lift.normalizer();
    let mut w = [(0.0, false); 4];
    for (slot, x) in w.iter_mut().zip(c.z) {
        let v = n.apply(x).value().expect("only the lift's end maps to ∞");
        *slot = (v, c.lift.side_of(x) == side);
    }
    let at = |t: f64| {
        let e = t.exp();
        let diff = |a: usize, b: usize| {
            let ((x, mx), (y, my)) = (w[a], w[b]);
            match (mx, my) {
                (true, true) => (x - y) * e,
                (false, false) => x - y,
                (true, false) => x * e - y,
                (false, true) => x - y * e,
            }
        };
        diff(0, 2) * diff(1, 3) / (diff(0, 3) * diff(1, 2))
    };
    Ok((at(step) - at(-step)) / (2.0 * step))
}

/// Geometric cases of a single lift in standard position.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case", deny_unknown_fields)]
pub enum LiftCase {
    /// Perpendicular to `γ̃₁` at signed distance `d` from `δ̃`.
    RightAngle { d: Length },
    /// Crossing `γ̃₁` at signed distance `d` and angle `ν`, cutting off `s` alone.
    SeparatesS { d: Length, nu: Angle },
    /// Crossing `γ̃₁` at signed distance `d` and angle `ν`, cutting off `p` alone.
    SeparatesP { d: Length, nu: Angle },
    /// Crossing both `γ̃₁` and `γ̃₂`, at angles `ν₁` and `ν₂` (mod π).
    Homotopic { nu1: Angle, nu2: Angle },
    /// Crossing `δ̃` only, at angle `α`.
    Distant { alpha: Angle },
}

fn check_angle(name: &str, x: Angle) -> Result<()> {
    if x > 0.0 && x < PI {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} = {x} is outside (0, π)")))
    }
}

fn check_h(h: Length) -> Result<()> {
    if h > 0.0 && h.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("h = {h} must be positive")))
    }
}

/// The relative rate `(∂cr/∂τ)/cr` due to one lift.
///
/// The side cut off decides the form, not the sign of `d`: a lift crossing
/// `γ̃₁` behind `δ̃` that also crosses `δ̃` cuts off `s`, and its rate splits
/// as the `p`-side term plus a distant term with `cos α = cosh d · sin ν`.
pub fn per_lift_contribution(case: &LiftCase, h: Length) -> Result<f64> {
    check_h(h)?;
    let t = (0.5 * h).tanh();
    match *case {
        LiftCase::RightAngle { d } => Ok(if d >= 0.0 { (-d).exp() } else { -d.exp() } / (2.0 * t)),
        LiftCase::SeparatesS { d, nu } => {
            check_angle("ν", nu)?;
            Ok((-d).exp() * nu.sin() / (2.0 * t))
        }
        LiftCase::SeparatesP { d, nu } => {
            check_angle("ν", nu)?;
            Ok(-d.exp() * nu.sin() / (2.0 * t))
        }
        LiftCase::Homotopic { nu1, nu2 } => {
            check_angle("ν₁", nu1)?;
            check_angle("ν₂", nu2)?;
            Ok(0.5 * (nu1.cos() + nu2.cos()))
        }
        LiftCase::Distant { alpha } => {
            if !(0.0..PI).contains(&alpha) {
                return Err(Error::Domain(format!("α = {alpha} is outside [0, π)")));
            }
            Ok(alpha.cos() / t)
        }
    }
}

/// Which of `γ₁`, `γ₂` an intersection lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Gamma1,
    Gamma2,
}

/// An intersection `x_i` of `ξ` with `γ_i`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntersectionDatum {
    pub target: Target,
    pub nu: Angle,
    /// Signed distance `d(y_i, x_i)` along `γ_i`.
    pub d: Length,
    pub closed: bool,
    /// Length of `γ_i`, present exactly when it is closed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Length>,
    #[serde(default)]
    pub r_wind: i64,
    #[serde(default)]
    pub homotopic_to_delta: bool,
}

impl IntersectionDatum {
    /// An open, right-angled, non-homotopic intersection.
    pub fn open_right_angle(target: Target, d: Length) -> Self {
        IntersectionDatum {
            target,
            nu: FRAC_PI_2,
            d,
            closed: false,
            p: None,
            r_wind: 0,
            homotopic_to_delta: false,
        }
    }

    /// A closed, right-angled, non-homotopic intersection.
    pub fn closed_right_angle(target: Target, d: Length, p: Length) -> Self {
        IntersectionDatum {
            target,
            nu: FRAC_PI_2,
            d,
            closed: true,
            p: Some(p),
            r_wind: 0,
            homotopic_to_delta: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_angle("ν", self.nu)?;
        if !self.d.is_finite() {
            return Err(Error::Domain(format!("d = {} is not finite", self.d)));
        }
        match (self.closed, self.p) {
            (true, None) => Err(Error::Configuration("closed intersection without p".into())),
            (false, Some(_)) => Err(Error::Configuration("open intersection with p".into())),
            (true, Some(p)) if !(p > 0.0 && p.is_finite()) => {
                Err(Error::Domain(format!("p = {p} must be positive")))
            }
            (true, Some(p)) if !self.homotopic_to_delta && !(0.0..p).contains(&self.d) => Err(
                Error::Domain(format!("d = {} is outside [0, p) with p = {p}", self.d)),
            ),
            _ => Ok(()),
        }
    }
}

/// An intersection of `ξ` with `δ` away from the `γ_i`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistantIntersection {
    pub alpha: Angle,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistScenario {
    pub h: Length,
    #[serde(default)]
    pub items: Vec<IntersectionDatum>,
    #[serde(default)]
    pub distant: Vec<DistantIntersection>,
}

/// `dh/dτ` of one intersection with `γ_i`.
///
/// An intersection at the foot `y_i` (`d = 0`) counts as just after it when
/// `ν > π/2` and just before it when `ν < π/2`. At `ν = π/2` an open
/// intersection at the foot is ambiguous; a closed one keeps `d = 0`.
pub fn coefficient_c(datum: &IntersectionDatum, h: Length) -> Result<f64> {
    check_h(h)?;
    datum.validate()?;
    let IntersectionDatum {
        nu,
        d,
        closed,
        p,
        r_wind,
        homotopic_to_delta,
        ..
    } = *datum;
    let cos_term = 0.5 * (0.5 * h).tanh() * nu.cos();
    let before_foot = d == 0.0 && nu < FRAC_PI_2;
    match (closed, homotopic_to_delta) {
        (false, false) => {
            let sigma = if d > 0.0 || (d == 0.0 && nu > FRAC_PI_2) {
                1.0
            } else if d < 0.0 || before_foot {
                -1.0
            } else {
                return Err(Error::Domain(
                    "open right-angled intersection at the foot of δ".into(),
                ));
            };
            let eps = if r_wind != 0 { -1.0 } else { 1.0 };
            Ok(eps * sigma / 2.0 * (-eps * sigma * d).exp() * nu.sin())
        }
        (false, true) => Ok(cos_term),
        (true, false) => {
            let p = p.expect("validated");
            let d = if before_foot { p } else { d };
            Ok((0.5 * p - d - r_wind as f64 * p).sinh() / (2.0 * (0.5 * p).sinh()) * nu.sin())
        }
        (true, true) => {
            let p = p.expect("validated");
            Ok(-d.sinh() * nu.sin() / p.exp_m1() + cos_term)
        }
    }
}

/// Per-kind totals of a scenario.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwistBreakdown {
    pub c1: f64,
    pub c2: f64,
    pub c0: f64,
    pub total: f64,
}

pub fn twist_breakdown(s: &TwistScenario) -> Result<TwistBreakdown> {
    check_h(s.h)?;
    let (mut c1, mut c2, mut c0) = (0.0, 0.0, 0.0);
    for item in &s.items {
        let c = coefficient_c(item, s.h)?;
        match item.target {
            Target::Gamma1 => c1 += c,
            Target::Gamma2 => c2 += c,
        }
    }
    for z in &s.distant {
        if !(0.0..PI).contains(&z.alpha) {
            return Err(Error::Domain(format!("α = {} is outside [0, π)", z.alpha)));
        }
        c0 += z.alpha.cos();
    }
    Ok(TwistBreakdown {
        c1,
        c2,
        c0,
        total: c1 + c2 + c0,
    })
}

/// `∂h/∂τ_ξ = c₁ + c₂ + c₀`.
pub fn twist_derivative_distance(s: &TwistScenario) -> Result<f64> {
    Ok(twist_breakdown(s)?.total)
}

/// A perpendicular intersection with `γ_i`; `p` is the length of `γ_i` if closed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RightAngleIntersection {
    pub target: Target,
    pub d: Length,
    pub p: Option<Length>,
}

/// `∂h/∂τ_ξ` when `ξ` is disjoint from `δ` and meets the `γ_i` perpendicularly.
pub fn twist_derivative_right_angle(items: &[RightAngleIntersection]) -> Result<f64> {
    let (mut c1, mut c2) = (0.0, 0.0);
    for &RightAngleIntersection { target, d, p } in items {
        let c = match p {
            None if d == 0.0 || !d.is_finite() => {
                return Err(Error::Domain(format!(
                    "open intersection needs a finite d ≠ 0, got {d}"
                )))
            }
            None => {
                let sigma = d.signum();
                sigma / 2.0 * (-sigma * d).exp()
            }
            Some(p) if !(p > 0.0) || !(0.0..p).contains(&d) => {
                return Err(Error::Domain(format!(
                    "closed intersection needs d in [0, p), got d = {d}, p = {p}"
                )))
            }
            Some(p) => (0.5 * p - d).sinh() / (2.0 * (0.5 * p).sinh()),
        };
        match target {
            Target::Gamma1 => c1 += c,
            Target::Gamma2 => c2 += c,
        }
    }
    Ok(c1 + c2)
}

/// `Σ_{k=0}^{K−1} e^{−d−kp}/2 − Σ_{k=1}^{K} e^{d−kp}/2`, the truncated lift sum
/// of a closed right-angled intersection.
pub fn truncated_lift_sum(d: Length, p: Length, terms: usize) -> f64 {
    let ahead: f64 = (0..terms).map(|k| (-d - k as f64 * p).exp() / 2.0).sum();
    let behind: f64 = (1..=terms).map(|k| (d - k as f64 * p).exp() / 2.0).sum();
    ahead - behind
}

/// How a lift splits `{p, q, r, s}`, named by the side without `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftPartition {
    /// `{s}`: crosses `γ̃₁` ahead of `δ̃`.
    SeparatesS,
    /// `{q, r, s}`: crosses `γ̃₁` behind `δ̃`.
    SeparatesP,
    /// `{q, s}`: crosses both `γ̃₁` and `γ̃₂`.
    Homotopic,
    /// `{q, r}`: crosses `δ̃` only.
    Distant,
    Other,
}

/// The plane configuration of `δ̃`, `γ̃₁`, `γ̃₂` at distance `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandardPosition {
    pub h: Length,
}

impl StandardPosition {
    pub fn new(h: Length) -> Result<Self> {
        check_h(h)?;
        Ok(StandardPosition { h })
    }

    /// `(p, q, r, s) = (−1, eʰ, −eʰ, 1)`.
    pub fn points(&self) -> [BoundaryPoint; 4] {
        let big = self.h.exp();
        [-1.0, big, -big, 1.0].map(BoundaryPoint::Finite)
    }

    /// `γ̃₁` from `p` to `s`.
    pub fn gamma1(&self) -> PlaneGeodesic {
        let [p, _, _, s] = self.points();
        PlaneGeodesic { start: p, end: s }
    }

    /// `γ̃₂` from `q` to `r`.
    pub fn gamma2(&self) -> PlaneGeodesic {
        let [_, q, r, _] = self.points();
        PlaneGeodesic { start: q, end: r }
    }

    /// Reorients a geodesic so that `p` lies on its right.
    pub fn orient(&self, lift: PlaneGeodesic) -> PlaneGeodesic {
        if lift.side_of(self.points()[0]) == Side::Left {
            lift.reversed()
        } else {
            lift
        }
    }

    /// The lift meeting `γ̃₁` at signed distance `d` from `i` (positive
    /// towards `s`), turned counterclockwise by `ν` from `γ̃₁`.
    pub fn lift_through_gamma1(&self, d: Length, nu: Angle) -> PlaneGeodesic {
        self.orient(
            Frame::standard()
                .turn(-FRAC_PI_2)
                .advance(d)
                .turn(nu)
                .geodesic(),
        )
    }

    /// The lift meeting `δ̃` at distance `t` above `i`, turned clockwise by
    /// `α` from the downward direction.
    pub fn lift_across_delta(&self, t: Length, alpha: Angle) -> PlaneGeodesic {
        self.orient(
            Frame::standard()
                .advance(t)
                .turn(PI)
                .turn(-alpha)
                .geodesic(),
        )
    }

    pub fn partition(&self, lift: &PlaneGeodesic) -> LiftPartition {
        let lift = self.orient(*lift);
        let moved: Vec<bool> = self
            .points()
            .iter()
            .map(|x| lift.side_of(*x) == Side::Left)
            .collect();
        match moved.as_slice() {
            [false, false, false, true] => LiftPartition::SeparatesS,
            [false, true, true, true] => LiftPartition::SeparatesP,
            [false, true, false, true] => LiftPartition::Homotopic,
            [false, true, true, false] => LiftPartition::Distant,
            _ => LiftPartition::Other,
        }
    }

    /// `(∂cr/∂τ)/cr` for the twist along one lift, computed from the lemma.
    pub fn relative_rate(&self, lift: &PlaneGeodesic) -> Result<f64> {
        let c = TwistConfiguration::new(self.points(), self.orient(*lift))?;
        Ok(cr_twist_derivative(&c)? / c.cross_ratio()?)
    }

    /// Angle in `(0, π)` from `γ̃₂` (oriented `q → r`) to the lift at their crossing.
    pub fn gamma2_crossing_angle(&self, lift: &PlaneGeodesic) -> Option<Angle> {
        let g2 = self.gamma2();
        let z = g2.intersection(lift)?;
        let along = (tangent(lift, z).arg() - tangent(&g2, z).arg()).rem_euclid(PI);
        Some(along)
    }
}

/// Tangent direction of an oriented geodesic at one of its points.
fn tangent(g: &PlaneGeodesic, z: Complex64) -> Complex64 {
    let n = g.normalizer();
    let w = n.apply_complex(z);
    let [_, _, c, d] = n.inverse().coefficients();
    Complex64::new(0.0, 1.0) / (w * c + d).powi(2)
}
