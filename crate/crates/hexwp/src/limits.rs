//! Limit structures of the arc-length bivector.
//!
//! As all arcs shrink, the bivector written in normalized width coordinates
//! tends to Kontsevich's piecewise-linear bivector, the per-hexagon cyclic
//! pattern. On decorated (cusped) surfaces, λ-lengths give horocyclic
//! boundary data, a linear-profile bivector, and Penner's 2-form; the two
//! are dual in the sense checked by [`duality_residual`].

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::metrics::{
    boundary_geometry_unchecked, fd_jacobian, width_values, ArcLengthVector, BoundaryGeometry,
};
use crate::surface::{OrientedArc, TriangulatedSurface};
use crate::wp_poisson::{assemble, PoissonMatrix};

/// Integer matrix of the per-hexagon cyclic pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLBivector(DMatrix<i64>);

impl PLBivector {
    pub fn matrix(&self) -> &DMatrix<i64> {
        &self.0
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        self.0.map(|x| x as f64)
    }
}

/// `B[i][j] = Σ_hexagons (+1 if j follows i cyclically, −1 if i follows j)`.
pub fn kontsevich_bivector(surface: &TriangulatedSurface) -> PLBivector {
    let n = surface.arc_count();
    let mut b = DMatrix::zeros(n, n);
    for h in surface.hexagons() {
        for m in 0..3 {
            let (i, j) = (h.sides[m].arc, h.sides[(m + 1) % 3].arc);
            b[(i, j)] += 1;
            b[(j, i)] -= 1;
        }
    }
    PLBivector(b)
}

/// `w̃ = 2w / Σ_C p_C`; sums to one.
pub fn normalized_widths(surface: &TriangulatedSurface, a: &[f64]) -> Vec<f64> {
    let total: f64 = boundary_geometry_unchecked(surface, a)
        .lengths()
        .iter()
        .sum();
    width_values(surface, a)
        .iter()
        .map(|w| 2.0 * w / total)
        .collect()
}

/// One row of the large-boundary study.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LimitRow {
    pub t: f64,
    /// `‖2·η̃_w − B‖∞` (largest entry).
    pub delta: f64,
    /// Whether `2·η̃_w` has the sign of `B` on every nonzero entry of `B`.
    pub sign_match: bool,
}

/// Deviation of the rescaled bivector from the PL bivector along `a = t·a0`.
///
/// `η̃ = (Σ_C p_C / 2)² H` is pushed forward to `w̃` coordinates with a
/// finite-difference Jacobian. In those coordinates the normalized PL
/// bivector has the integer matrix `B` itself.
pub fn large_boundary_limit_study(
    surface: &TriangulatedSurface,
    a0: &ArcLengthVector,
    t_list: &[f64],
    rel_step: f64,
) -> Result<Vec<LimitRow>> {
    if a0.len() != surface.arc_count() {
        return Err(Error::Input {
            location: "a0".into(),
            message: "length vector does not fit the surface".into(),
        });
    }
    if t_list.is_empty()
        || t_list.iter().any(|t| !(*t > 0.0))
        || t_list.windows(2).any(|w| w[1] >= w[0])
    {
        return Err(Error::Input {
            location: "t-list".into(),
            message: "must be non-empty, positive and strictly decreasing".into(),
        });
    }
    let b = kontsevich_bivector(surface).to_f64();
    let mut rows = Vec::with_capacity(t_list.len());
    for &t in t_list {
        let a: Vec<f64> = a0.as_slice().iter().map(|x| t * x).collect();
        let geom = boundary_geometry_unchecked(surface, &a);
        let total: f64 = geom.lengths().iter().sum();
        let h = assemble(surface, &geom, |d, p| {
            (0.5 * p - d).sinh() / (0.5 * p).sinh()
        });
        let eta = h * (0.25 * total * total);
        let j = fd_jacobian(&a, rel_step, |x| normalized_widths(surface, x));
        if j.clone().lu().determinant().abs() < f64::EPSILON {
            return Err(Error::Configuration(format!(
                "width Jacobian is singular at t = {t}"
            )));
        }
        let pushed = &j * eta * j.transpose() * 2.0;
        let delta = (&pushed - &b).amax();
        let sign_match = b
            .iter()
            .zip(pushed.iter())
            .all(|(bv, pv)| *bv == 0.0 || bv.signum() == pv.signum());
        rows.push(LimitRow {
            t,
            delta,
            sign_match,
        });
    }
    Ok(rows)
}

/// A surface with a λ-length on every arc.
#[derive(Debug, Clone, PartialEq)]
pub struct DecoratedSurface {
    pub surface: TriangulatedSurface,
    lambda: Vec<f64>,
}

impl DecoratedSurface {
    pub fn new(surface: TriangulatedSurface, lambda: Vec<f64>) -> Result<Self> {
        if lambda.len() != surface.arc_count() {
            return Err(Error::Input {
                location: "lambda".into(),
                message: format!(
                    "{} values for a surface with {} arcs",
                    lambda.len(),
                    surface.arc_count()
                ),
            });
        }
        if let Some((k, v)) = lambda
            .iter()
            .enumerate()
            .find(|(_, v)| !(**v > 0.0 && v.is_finite()))
        {
            return Err(Error::Domain(format!(
                "λ of arc {k} is {v}; must be positive"
            )));
        }
        Ok(DecoratedSurface { surface, lambda })
    }

    /// From reduced lengths `ã`, with `λ = √(2 e^ã)`.
    pub fn from_reduced(surface: TriangulatedSurface, reduced: &[f64]) -> Result<Self> {
        DecoratedSurface::new(
            surface,
            reduced.iter().map(|x| (2.0 * x.exp()).sqrt()).collect(),
        )
    }

    pub fn lambda(&self) -> &[f64] {
        &self.lambda
    }

    /// `ã = log(λ²/2)`.
    pub fn reduced_lengths(&self) -> Vec<f64> {
        self.lambda.iter().map(|l| (0.5 * l * l).ln()).collect()
    }
}

/// Horocyclic data of a decorated surface.
#[derive(Debug, Clone, PartialEq)]
pub struct DecoratedGeometry {
    /// `h_{t,m} = λ_m / (λ_{m+1} λ_{m+2})` for the arc in slot `m` of hexagon `t`.
    pub h: Vec<[f64; 3]>,
    /// Segments of length `2h` in the same walk as the hyperbolic boundary.
    pub boundary: BoundaryGeometry,
    /// Simplicial coordinate `X(→α)` per oriented arc, by [`OrientedArc::index`].
    pub simplicial: Vec<f64>,
}

impl DecoratedGeometry {
    /// `X(α) = X(→α) + X(←α)`.
    pub fn simplicial_totals(&self) -> Vec<f64> {
        self.simplicial.chunks(2).map(|c| c[0] + c[1]).collect()
    }
}

fn horocyclic_boundary(surface: &TriangulatedSurface, lambda: &[f64]) -> BoundaryGeometry {
    BoundaryGeometry::from_segments(surface, |t, opposite| {
        let slot = surface.locate(opposite);
        let [xi, xj, xk] = surface.hexagons()[t].rotated(slot.position);
        2.0 * lambda[xi.arc] / (lambda[xj.arc] * lambda[xk.arc])
    })
}

pub fn decorated_geometry(d: &DecoratedSurface) -> DecoratedGeometry {
    let s = &d.surface;
    let l = &d.lambda;
    let mut h = Vec::with_capacity(s.hexagons().len());
    let mut simplicial = vec![0.0; 2 * s.arc_count()];
    for hex in s.hexagons() {
        let mut row = [0.0; 3];
        for (m, slot) in row.iter_mut().enumerate() {
            let [xi, xj, xk] = hex.rotated(m);
            let (li, lj, lk) = (l[xi.arc], l[xj.arc], l[xk.arc]);
            *slot = li / (lj * lk);
            simplicial[xi.index()] = (lj * lj + lk * lk - li * li) / (li * lj * lk);
        }
        h.push(row);
    }
    DecoratedGeometry {
        h,
        boundary: horocyclic_boundary(s, l),
        simplicial,
    }
}

/// `Ω_P = −½ B` in the `dã` basis.
pub fn penner_form(surface: &TriangulatedSurface) -> DMatrix<f64> {
    kontsevich_bivector(surface).to_f64() * -0.5
}

fn linear_kernel(d: f64, p: f64) -> f64 {
    1.0 - 2.0 * d / p
}

/// `{ã_i, ã_j} = ½ Σ_C Σ_{y ≠ y'} (1 − 2 d_C(y, y')/p_C)`.
pub fn decorated_bivector(d: &DecoratedSurface) -> PoissonMatrix {
    let geom = horocyclic_boundary(&d.surface, &d.lambda);
    PoissonMatrix::new(assemble(&d.surface, &geom, linear_kernel))
        .expect("assembled matrices are square")
}

/// Per-arc duality defects and their maximum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualityReport {
    pub per_arc: Vec<f64>,
    pub max: f64,
}

/// `max_α ‖Ω_P H̃ e_α − (e_α + ∇ log p_{C+} + ∇ log p_{C−})‖∞`, gradients in `ã`.
///
/// When both ends of `α` lie on one component its gradient enters twice.
pub fn duality_residual(d: &DecoratedSurface, rel_step: f64) -> DualityReport {
    let s = &d.surface;
    let n = s.arc_count();
    let omega = penner_form(s);
    let h = decorated_bivector(d);
    let reduced = d.reduced_lengths();
    let grad = fd_jacobian(&reduced, rel_step, |x| {
        let lambda: Vec<f64> = x.iter().map(|v| (2.0 * v.exp()).sqrt()).collect();
        horocyclic_boundary(s, &lambda)
            .lengths()
            .iter()
            .map(|p| p.ln())
            .collect()
    });
    let oh = &omega * h.matrix();
    let mut per_arc = Vec::with_capacity(n);
    for arc in 0..n {
        let mut rhs = DVector::zeros(n);
        rhs[arc] = 1.0;
        for end in [OrientedArc::forward(arc), OrientedArc::backward(arc)] {
            rhs += grad.row(s.component_of(end)).transpose();
        }
        per_arc.push((oh.column(arc) - rhs).amax());
    }
    let max = per_arc.iter().cloned().fold(0.0, f64::max);
    DualityReport { per_arc, max }
}
