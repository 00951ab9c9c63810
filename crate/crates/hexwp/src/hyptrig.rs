//! Upper half-plane kernel: Möbius maps, geodesics given by ideal endpoints,
//! cross-ratios, the trigonometry of right-angled polygons, and explicit
//! constructions of right-angled hexagons.
//!
//! Frames are the basic construction device. A frame is a Möbius map `g`;
//! it stands for the point `g(i)` with unit tangent `g_*(∂/∂y)`. Advancing
//! and turning compose on the right, so a frame can be walked around a
//! polygon like a turtle.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Hyperbolic length.
pub type Length = f64;

/// Angle in radians; interior angles live in `[0, π]`, signed only where documented.
pub type Angle = f64;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// A point of `ℝ ∪ {∞}`, the ideal boundary of the half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryPoint {
    Finite(f64),
    Infinity,
}

impl BoundaryPoint {
    /// Builds a finite point, rejecting NaN and infinite floats.
    pub fn finite(x: f64) -> Result<Self> {
        if x.is_finite() {
            Ok(BoundaryPoint::Finite(x))
        } else {
            Err(Error::Domain(format!(
                "boundary coordinate {x} is not finite"
            )))
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }

    pub fn value(&self) -> Option<f64> {
        match *self {
            BoundaryPoint::Finite(x) => Some(x),
            BoundaryPoint::Infinity => None,
        }
    }
}

impl From<f64> for BoundaryPoint {
    /// Infinite floats map to the point at infinity.
    fn from(x: f64) -> Self {
        if x.is_infinite() {
            BoundaryPoint::Infinity
        } else {
            BoundaryPoint::Finite(x)
        }
    }
}

/// Orientation-preserving isometry `z ↦ (az + b)/(cz + d)`, stored with unit determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusMap {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl MoebiusMap {
    /// Rescales the coefficients to determinant one; fails unless the determinant is positive.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if !(det > 0.0) || !det.is_finite() {
            return Err(Error::Domain(format!(
                "Möbius determinant {det} is not positive"
            )));
        }
        let k = det.sqrt().recip();
        Ok(MoebiusMap {
            a: a * k,
            b: b * k,
            c: c * k,
            d: d * k,
        })
    }

    pub fn identity() -> Self {
        MoebiusMap {
            a: 1.0,
            b: 0.0,
            c: 0.0,
            d: 1.0,
        }
    }

    /// Hyperbolic translation `z ↦ e^L z` along the imaginary axis.
    pub fn axis_translation(length: Length) -> Self {
        let e = (0.5 * length).exp();
        MoebiusMap {
            a: e,
            b: 0.0,
            c: 0.0,
            d: e.recip(),
        }
    }

    /// Elliptic map fixing `i` whose derivative there is `e^{iθ}` (counterclockwise turn by θ).
    pub fn rotation_about_i(theta: Angle) -> Self {
        let (s, c) = (0.5 * theta).sin_cos();
        MoebiusMap {
            a: c,
            b: s,
            c: -s,
            d: c,
        }
    }

    /// Map sending `s1 ↦ 0` and `s2 ↦ ∞`, so the geodesic from `s1` to `s2`
    /// becomes the upward imaginary axis.
    pub fn normalizing(s1: BoundaryPoint, s2: BoundaryPoint) -> Result<Self> {
        match (s1, s2) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => {
                Err(Error::Degenerate("geodesic endpoints coincide at ∞".into()))
            }
            (BoundaryPoint::Finite(x), BoundaryPoint::Infinity) => {
                MoebiusMap::new(1.0, -x, 0.0, 1.0)
            }
            (BoundaryPoint::Infinity, BoundaryPoint::Finite(y)) => {
                MoebiusMap::new(0.0, -1.0, 1.0, -y)
            }
            (BoundaryPoint::Finite(x), BoundaryPoint::Finite(y)) => {
                if x == y {
                    return Err(Error::Degenerate(format!(
                        "geodesic endpoints coincide at {x}"
                    )));
                }
                if x < y {
                    MoebiusMap::new(-1.0, x, 1.0, -y)
                } else {
                    MoebiusMap::new(1.0, -x, 1.0, -y)
                }
            }
        }
    }

    /// Map sending `z ↦ i`, built from a real translation and a dilation.
    pub fn centering(z: Complex64) -> Result<Self> {
        if !(z.im > 0.0) {
            return Err(Error::Domain(format!("{z} is not in the upper half-plane")));
        }
        MoebiusMap::new(1.0, -z.re, 0.0, z.im)
    }

    pub fn coefficients(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        MoebiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    pub fn inverse(&self) -> MoebiusMap {
        MoebiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    pub fn apply(&self, x: BoundaryPoint) -> BoundaryPoint {
        match x {
            BoundaryPoint::Infinity => {
                if self.c == 0.0 {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite(self.a / self.c)
                }
            }
            BoundaryPoint::Finite(x) => {
                let den = self.c * x + self.d;
                if den == 0.0 {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite((self.a * x + self.b) / den)
                }
            }
        }
    }

    pub fn apply_complex(&self, z: Complex64) -> Complex64 {
        (z * self.a + self.b) / (z * self.c + self.d)
    }
}

/// Geodesic of the half-plane, oriented from `start` to `end`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneGeodesic {
    pub start: BoundaryPoint,
    pub end: BoundaryPoint,
}

/// Which side of an oriented geodesic a point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    On,
}

impl PlaneGeodesic {
    pub fn new(start: BoundaryPoint, end: BoundaryPoint) -> Result<Self> {
        if start == end {
            return Err(Error::Degenerate("geodesic endpoints coincide".into()));
        }
        Ok(PlaneGeodesic { start, end })
    }

    /// The geodesic through two distinct interior points, oriented from `z` towards `w`.
    pub fn through(z: Complex64, w: Complex64) -> Result<Self> {
        Ok(Frame::looking_at(z, w)?.geodesic())
    }

    pub fn reversed(&self) -> Self {
        PlaneGeodesic {
            start: self.end,
            end: self.start,
        }
    }

    /// Isometry carrying this geodesic onto the upward imaginary axis.
    pub fn normalizer(&self) -> MoebiusMap {
        MoebiusMap::normalizing(self.start, self.end)
            .expect("endpoints are distinct by construction")
    }

    pub fn transformed(&self, m: &MoebiusMap) -> Self {
        PlaneGeodesic {
            start: m.apply(self.start),
            end: m.apply(self.end),
        }
    }

    /// Side of an ideal point relative to the oriented geodesic.
    pub fn side_of(&self, x: BoundaryPoint) -> Side {
        match self.normalizer().apply(x) {
            BoundaryPoint::Finite(v) if v < 0.0 => Side::Left,
            BoundaryPoint::Finite(v) if v > 0.0 => Side::Right,
            _ => Side::On,
        }
    }

    /// Signed arc-length coordinate of the orthogonal projection of `z`,
    /// increasing in the direction of the geodesic.
    pub fn coordinate(&self, z: Complex64) -> f64 {
        self.normalizer().apply_complex(z).norm().ln()
    }

    /// Orthogonal projection of `z` onto the geodesic.
    pub fn foot(&self, z: Complex64) -> Complex64 {
        let n = self.normalizer();
        n.inverse().apply_complex(I * n.apply_complex(z).norm())
    }

    /// Point at signed coordinate `t` (see [`PlaneGeodesic::coordinate`]).
    pub fn point_at(&self, t: f64) -> Complex64 {
        self.normalizer().inverse().apply_complex(I * t.exp())
    }

    /// Intersection point with another geodesic, if the two cross.
    pub fn intersection(&self, other: &PlaneGeodesic) -> Option<Complex64> {
        let n = self.normalizer();
        let (c, d) = match (n.apply(other.start), n.apply(other.end)) {
            (BoundaryPoint::Finite(c), BoundaryPoint::Finite(d)) => (c, d),
            _ => return None,
        };
        if c * d >= 0.0 {
            return None;
        }
        Some(n.inverse().apply_complex(I * (-c * d).sqrt()))
    }
}

/// Point with unit tangent, represented by the isometry taking `(i, ↑)` to it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    map: MoebiusMap,
}

impl Frame {
    /// The frame at `i` pointing up the imaginary axis.
    pub fn standard() -> Self {
        Frame {
            map: MoebiusMap::identity(),
        }
    }

    pub fn from_map(map: MoebiusMap) -> Self {
        Frame { map }
    }

    /// Frame at `z` pointing along the geodesic towards `w`.
    pub fn looking_at(z: Complex64, w: Complex64) -> Result<Self> {
        if z == w {
            return Err(Error::Degenerate(format!("cannot aim from {z} at itself")));
        }
        let t = MoebiusMap::centering(z)?;
        let w = t.apply_complex(w);
        let zeta = (w - I) / (w + I);
        let turn = MoebiusMap::rotation_about_i(zeta.arg());
        Ok(Frame {
            map: t.inverse().compose(&turn),
        })
    }

    pub fn map(&self) -> &MoebiusMap {
        &self.map
    }

    /// Moves forward by a signed distance.
    pub fn advance(&self, length: Length) -> Self {
        Frame {
            map: self.map.compose(&MoebiusMap::axis_translation(length)),
        }
    }

    /// Turns counterclockwise by `theta` (clockwise for negative `theta`).
    pub fn turn(&self, theta: Angle) -> Self {
        Frame {
            map: self.map.compose(&MoebiusMap::rotation_about_i(theta)),
        }
    }

    pub fn point(&self) -> Complex64 {
        self.map.apply_complex(I)
    }

    /// Geodesic through the frame, oriented from behind to ahead.
    pub fn geodesic(&self) -> PlaneGeodesic {
        PlaneGeodesic {
            start: self.map.apply(BoundaryPoint::Finite(0.0)),
            end: self.map.apply(BoundaryPoint::Infinity),
        }
    }
}

/// `(p,q,r,s) = (p−r)(q−s)/((p−s)(q−r))`; a factor containing ∞ is dropped.
pub fn cross_ratio(
    p: BoundaryPoint,
    q: BoundaryPoint,
    r: BoundaryPoint,
    s: BoundaryPoint,
) -> Result<f64> {
    let pts = [p, q, r, s];
    for i in 0..4 {
        for j in (i + 1)..4 {
            if pts[i] == pts[j] {
                return Err(Error::Degenerate(format!(
                    "cross-ratio points {i} and {j} coincide"
                )));
            }
        }
    }
    let factor = |x: BoundaryPoint, y: BoundaryPoint| match (x, y) {
        (BoundaryPoint::Finite(x), BoundaryPoint::Finite(y)) => x - y,
        _ => 1.0,
    };
    Ok(factor(p, r) * factor(q, s) / (factor(p, s) * factor(q, r)))
}

/// Distance `h` with `cosh h = 1 − 2cr`, for `cr ≤ 0`.
///
/// Evaluated as `2 asinh √(−cr)`, which avoids cancellation near `cr = 0`.
pub fn distance_from_cross_ratio(cr: f64) -> Result<Length> {
    if !(cr <= 0.0) {
        return Err(Error::Domain(format!(
            "cross-ratio {cr} is not in the disjoint range (-∞, 0]"
        )));
    }
    Ok(2.0 * (-cr).sqrt().asinh())
}

/// Angle `ε` with `cos ε = 2cr − 1`, for `cr ∈ [0, 1]`.
pub fn angle_from_cross_ratio(cr: f64) -> Result<Angle> {
    if !(0.0..=1.0).contains(&cr) {
        return Err(Error::Domain(format!(
            "cross-ratio {cr} is not in the crossing range [0, 1]"
        )));
    }
    Ok(2.0 * cr.sqrt().acos())
}

/// Hyperbolic distance between two interior points.
pub fn point_distance(z: Complex64, w: Complex64) -> Length {
    2.0 * ((z - w).norm() / (2.0 * (z.im * w.im).sqrt())).asinh()
}

/// Angle at `u` between the geodesic rays towards `v` and `w`, in `[0, π]`.
pub fn angle_at(u: Complex64, v: Complex64, w: Complex64) -> Result<Angle> {
    let t = MoebiusMap::centering(u)?;
    let disk = |z: Complex64| {
        let z = t.apply_complex(z);
        (z - I) / (z + I)
    };
    Ok((disk(w) / disk(v)).arg().abs())
}

/// Feet of the common perpendicular on `g1` and on `g2`.
pub fn common_perpendicular_feet(
    g1: &PlaneGeodesic,
    g2: &PlaneGeodesic,
) -> Result<(Complex64, Complex64)> {
    let n = g1.normalizer();
    let (c, d) = match (n.apply(g2.start), n.apply(g2.end)) {
        (BoundaryPoint::Finite(c), BoundaryPoint::Finite(d)) => (c, d),
        _ => {
            return Err(Error::Configuration(
                "geodesics share an ideal endpoint".into(),
            ))
        }
    };
    if c * d < 0.0 {
        return Err(Error::Configuration("geodesics intersect".into()));
    }
    if c * d == 0.0 {
        return Err(Error::Configuration(
            "geodesics share an ideal endpoint".into(),
        ));
    }
    let rho = (c * d).sqrt();
    let ninv = n.inverse();
    let on_g1 = ninv.apply_complex(I * rho);
    // The perpendicular is the circle |w| = rho; it meets g2's semicircle here.
    let (m, r) = (0.5 * (c + d), 0.5 * (d - c).abs());
    let x = (rho * rho - r * r + m * m) / (2.0 * m);
    let on_g2 = ninv.apply_complex(Complex64::new(x, (rho * rho - x * x).max(0.0).sqrt()));
    Ok((on_g1, on_g2))
}

/// Distance between disjoint geodesics, from the cross-ratio labeling that is non-positive.
pub fn geodesic_distance(g1: &PlaneGeodesic, g2: &PlaneGeodesic) -> Result<Length> {
    let cr = cross_ratio(g1.start, g2.start, g2.end, g1.end)
        .map_err(|_| Error::Configuration("geodesics share an ideal endpoint".into()))?;
    // Reversing g2 maps cr to 1 − cr; exactly one labeling is ≤ 0 for disjoint pairs.
    let cr = if cr > 0.0 { 1.0 - cr } else { cr };
    if cr > 0.0 {
        return Err(Error::Configuration("geodesics intersect".into()));
    }
    if cr == 0.0 {
        return Err(Error::Configuration("geodesics are asymptotic".into()));
    }
    distance_from_cross_ratio(cr)
}

/// Unique common perpendicular of two disjoint geodesics, oriented from `g1` to `g2`, and its length.
///
/// With `g1 = (p, s)` and `g2 = (q, r)` the length is `arccosh(1 − 2(p,q,r,s))`.
pub fn common_perpendicular(
    g1: &PlaneGeodesic,
    g2: &PlaneGeodesic,
) -> Result<(PlaneGeodesic, Length)> {
    let (f1, f2) = common_perpendicular_feet(g1, g2)?;
    let length = geodesic_distance(g1, g2)?;
    Ok((PlaneGeodesic::through(f1, f2)?, length))
}

fn check_positive(name: &str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{name} = {x} must be positive and finite"
        )))
    }
}

fn check_angle(name: &str, x: f64) -> Result<()> {
    if x > 0.0 && x < PI {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} = {x} must lie in (0, π)")))
    }
}

fn arccosh_checked(what: &str, x: f64) -> Result<f64> {
    if x >= 1.0 {
        Ok(x.acosh())
    } else {
        Err(Error::Domain(format!(
            "{what}: cosh value {x} < 1 is not realizable"
        )))
    }
}

/// Side `AB` of a triangle with angles `α` at `A`, `β` at `B`, `γ` at `C`.
pub fn triangle_side_from_angles(alpha: Angle, beta: Angle, gamma: Angle) -> Result<Length> {
    check_angle("alpha", alpha)?;
    check_angle("beta", beta)?;
    check_angle("gamma", gamma)?;
    if alpha + beta + gamma >= PI {
        return Err(Error::Domain(format!(
            "angle sum {} is not below π",
            alpha + beta + gamma
        )));
    }
    arccosh_checked(
        "triangle",
        (alpha.cos() * beta.cos() + gamma.cos()) / (alpha.sin() * beta.sin()),
    )
}

/// Angle opposite side `c` in a triangle with sides `a`, `b`, `c`.
pub fn triangle_angle_from_sides(a: Length, b: Length, c: Length) -> Result<Angle> {
    check_positive("a", a)?;
    check_positive("b", b)?;
    check_positive("c", c)?;
    let cos = (a.cosh() * b.cosh() - c.cosh()) / (a.sinh() * b.sinh());
    if !(-1.0..=1.0).contains(&cos) {
        return Err(Error::Domain(format!(
            "sides ({a}, {b}, {c}) violate the triangle inequality"
        )));
    }
    Ok(cos.acos())
}

/// Largest spread among `sinh(side)/sin(opposite angle)` over the three pairs.
pub fn sine_law_residual(sides: [Length; 3], angles: [Angle; 3]) -> f64 {
    let r: Vec<f64> = (0..3).map(|k| sides[k].sinh() / angles[k].sin()).collect();
    let hi = r.iter().cloned().fold(f64::MIN, f64::max);
    let lo = r.iter().cloned().fold(f64::MAX, f64::min);
    (hi - lo) / hi.abs().max(1.0)
}

/// Quadrilateral with right angles at `A`, `B`, `C`: the fourth angle `γ`.
pub fn quad_three_right(ab: Length, bc: Length) -> Result<Angle> {
    check_positive("AB", ab)?;
    check_positive("BC", bc)?;
    let cos = ab.sinh() * bc.sinh();
    if cos > 1.0 {
        return Err(Error::Domain(format!(
            "sinh(AB)·sinh(BC) = {cos} exceeds 1"
        )));
    }
    Ok(cos.acos())
}

/// Quadrilateral with right angles at `C`, `D` and angles `α` at `A`, `β` at `B`: the side `AB`.
pub fn quad_two_right(alpha: Angle, beta: Angle, cd: Length) -> Result<Length> {
    check_angle("alpha", alpha)?;
    check_angle("beta", beta)?;
    check_positive("CD", cd)?;
    arccosh_checked(
        "quadrilateral",
        (alpha.cos() * beta.cos() + cd.cosh()) / (alpha.sin() * beta.sin()),
    )
}

/// Pentagon with four right angles and angle `γ` opposite `BC`.
pub fn pentagon_side(ab: Length, cd: Length, gamma: Angle) -> Result<Length> {
    check_positive("AB", ab)?;
    check_positive("CD", cd)?;
    check_angle("gamma", gamma)?;
    arccosh_checked(
        "pentagon",
        (ab.cosh() * cd.cosh() + gamma.cos()) / (ab.sinh() * cd.sinh()),
    )
}

/// Right-angled hexagon: side `BC` between `AB` and `CD`, opposite `EF`.
pub fn hexagon_side(ab: Length, cd: Length, ef: Length) -> Result<Length> {
    check_positive("AB", ab)?;
    check_positive("CD", cd)?;
    check_positive("EF", ef)?;
    arccosh_checked(
        "hexagon",
        (ab.cosh() * cd.cosh() + ef.cosh()) / (ab.sinh() * cd.sinh()),
    )
}

/// Right-angled hexagon realized in the half-plane.
///
/// Vertices run counterclockwise as `z_i, y_i, z_j, y_j, z_k, y_k`; side `2m`
/// is the alternate side `α` from `z` to `y`, side `2m+1` joins `y` to the next `z`.
/// The side from `y_i` to `z_j` is opposite `α_k`, and so on cyclically.
#[derive(Debug, Clone, PartialEq)]
pub struct RightAngledHexagon {
    pub vertices: [Complex64; 6],
    pub sides: [PlaneGeodesic; 6],
}

impl RightAngledHexagon {
    /// Hyperbolic length of side `m`.
    pub fn side_length(&self, m: usize) -> Length {
        point_distance(self.vertices[m % 6], self.vertices[(m + 1) % 6])
    }

    /// Interior angle at vertex `m`.
    pub fn corner_angle(&self, m: usize) -> Angle {
        let v = self.vertices[m % 6];
        angle_at(v, self.vertices[(m + 5) % 6], self.vertices[(m + 1) % 6])
            .expect("vertices are interior")
    }
}

/// Builds the right-angled hexagon with alternate sides `a_i, a_j, a_k` by
/// shooting: `α_i` is fixed on the imaginary axis, the unknown side length
/// from `y_i` to `z_j` is found by bisection so that the sides carrying `y_j`
/// and `z_i` sit at distance `a_k`. No hexagon law enters the construction.
pub fn develop_hexagon(a_i: Length, a_j: Length, a_k: Length) -> Result<RightAngledHexagon> {
    check_positive("a_i", a_i)?;
    check_positive("a_j", a_j)?;
    check_positive("a_k", a_k)?;
    let base = PlaneGeodesic {
        start: BoundaryPoint::Finite(1.0),
        end: BoundaryPoint::Finite(-1.0),
    };
    let last_frame = |x: f64| {
        Frame::standard()
            .advance(a_i)
            .turn(FRAC_PI_2)
            .advance(x)
            .turn(FRAC_PI_2)
            .advance(a_j)
            .turn(FRAC_PI_2)
    };
    // Signed closing defect; `None` while the far side is not yet in convex position.
    let defect = |x: f64| -> Option<f64> {
        let f = last_frame(x);
        let inv = f.map().inverse();
        let (m1, m2) = match (
            inv.apply(BoundaryPoint::Finite(-1.0)),
            inv.apply(BoundaryPoint::Finite(1.0)),
        ) {
            (BoundaryPoint::Finite(m1), BoundaryPoint::Finite(m2)) => (m1, m2),
            _ => return None,
        };
        if m1 >= 0.0 || m2 >= 0.0 || m1 * m2 <= 1.0 {
            return None;
        }
        geodesic_distance(&base, &f.geodesic())
            .ok()
            .map(|d| d - a_k)
    };
    let positive = |x: f64| defect(x).is_some_and(|v| v > 0.0);

    let (mut lo, mut hi) = (0.0, 1e-9);
    while !positive(hi) {
        lo = hi;
        hi *= 1.2;
        if hi > 80.0 {
            return Err(Error::Degenerate(format!(
                "no right-angled hexagon found for ({a_i}, {a_j}, {a_k})"
            )));
        }
    }
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if positive(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let x = 0.5 * (lo + hi);

    let f_zi = Frame::standard();
    let f_yi = f_zi.advance(a_i);
    let f_zj = f_yi.turn(FRAC_PI_2).advance(x);
    let f_yj = f_zj.turn(FRAC_PI_2).advance(a_j);
    let far = last_frame(x).geodesic();
    let (y_k, z_k) = common_perpendicular_feet(&base, &far)?;
    let vertices = [
        f_zi.point(),
        f_yi.point(),
        f_zj.point(),
        f_yj.point(),
        z_k,
        y_k,
    ];
    let mut sides = [base; 6];
    for m in 0..6 {
        sides[m] = PlaneGeodesic::through(vertices[m], vertices[(m + 1) % 6])?;
    }
    Ok(RightAngledHexagon { vertices, sides })
}
