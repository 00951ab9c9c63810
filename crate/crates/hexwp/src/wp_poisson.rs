//! The Weil-Petersson Poisson bivector in arc-length coordinates.
//!
//! `{a_i, a_j} = ½ Σ_C Σ sinh(p_C/2 − d_C(y, y')) / sinh(p_C/2)`, the inner
//! sum running over distinct feet `y` of `α_i` and `y'` of `α_j` on `C`, with
//! `d_C` measured along the positive boundary walk.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::metrics::{
    boundary_geometry, boundary_geometry_unchecked, fd_jacobian, ArcLengthVector, BoundaryGeometry,
};
use crate::surface::{OrientedArc, TriangulatedSurface};

/// Default relative finite-difference step for gradients.
pub const GRADIENT_STEP: f64 = 1e-6;

/// Default relative finite-difference step for derivatives of bracket entries.
pub const JACOBI_STEP: f64 = 1e-5;

/// Antisymmetric matrix of brackets `H[i][j] = {x_i, x_j}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PoissonMatrix(DMatrix<f64>);

impl PoissonMatrix {
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Input {
                location: "matrix".into(),
                message: "not square".into(),
            });
        }
        Ok(PoissonMatrix(m))
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[(i, j)]
    }

    /// `max |H + Hᵀ|`.
    pub fn antisymmetry_defect(&self) -> f64 {
        (&self.0 + self.0.transpose()).amax()
    }

    /// Induced ∞-norm (largest absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        self.0
            .row_iter()
            .map(|r| r.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.0
            .row_iter()
            .map(|r| r.iter().cloned().collect())
            .collect()
    }
}

/// `½ Σ_C Σ_{y ≠ y'} k(d_C(y, y'), p_C)` accumulated into `H[arc(y)][arc(y')]`.
pub(crate) fn assemble(
    surface: &TriangulatedSurface,
    geom: &BoundaryGeometry,
    kernel: impl Fn(f64, f64) -> f64,
) -> DMatrix<f64> {
    let n = surface.arc_count();
    let mut h = DMatrix::zeros(n, n);
    for c in &geom.components {
        for (m, y) in c.feet.iter().enumerate() {
            for (m2, y2) in c.feet.iter().enumerate() {
                if m == m2 {
                    continue;
                }
                let d = (c.positions[m2] - c.positions[m]).rem_euclid(c.length);
                h[(y.arc, y2.arc)] += 0.5 * kernel(d, c.length);
            }
        }
    }
    h
}

fn wp_kernel(d: f64, p: f64) -> f64 {
    (0.5 * p - d).sinh() / (0.5 * p).sinh()
}

fn wp_matrix(surface: &TriangulatedSurface, a: &[f64]) -> DMatrix<f64> {
    assemble(surface, &boundary_geometry_unchecked(surface, a), wp_kernel)
}

pub fn wp_bivector(surface: &TriangulatedSurface, a: &ArcLengthVector) -> Result<PoissonMatrix> {
    let geom = boundary_geometry(surface, a)?;
    Ok(PoissonMatrix(assemble(surface, &geom, wp_kernel)))
}

/// `dfᵀ · H · dg`.
pub fn bracket(h: &PoissonMatrix, df: &[f64], dg: &[f64]) -> Result<f64> {
    if df.len() != h.dim() || dg.len() != h.dim() {
        return Err(Error::Input {
            location: "bracket".into(),
            message: format!(
                "covector lengths {} and {} for a {}-dimensional matrix",
                df.len(),
                dg.len(),
                h.dim()
            ),
        });
    }
    let (f, g) = (
        DVector::from_column_slice(df),
        DVector::from_column_slice(dg),
    );
    Ok(f.dot(&(&h.0 * g)))
}

/// Central finite-difference gradient of `p_C(a)`.
pub fn boundary_length_gradient(
    surface: &TriangulatedSurface,
    a: &ArcLengthVector,
    component: usize,
    rel_step: f64,
) -> Result<Vec<f64>> {
    check_component(surface, component)?;
    let j = fd_jacobian(a.as_slice(), rel_step, |x| {
        boundary_geometry_unchecked(surface, x).lengths()
    });
    Ok(j.row(component).iter().cloned().collect())
}

fn check_component(surface: &TriangulatedSurface, component: usize) -> Result<()> {
    let n = surface.topology().boundary_count;
    if component < n {
        Ok(())
    } else {
        Err(Error::Input {
            location: format!("boundary component {component}"),
            message: format!("surface has {n} boundary components"),
        })
    }
}

/// Size of `H·∇p_C` in absolute terms and relative to `‖H‖∞ ‖∇p_C‖∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CasimirReport {
    pub component: usize,
    pub residual: f64,
    pub scale: f64,
    pub relative: f64,
}

pub fn casimir_residual(
    surface: &TriangulatedSurface,
    a: &ArcLengthVector,
    component: usize,
    rel_step: f64,
) -> Result<CasimirReport> {
    let h = wp_bivector(surface, a)?;
    let grad = boundary_length_gradient(surface, a, component, rel_step)?;
    let v = h.matrix() * DVector::from_vec(grad.clone());
    let residual = v.amax();
    let scale = h.norm_inf() * grad.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let relative = if scale > 0.0 {
        residual / scale
    } else {
        residual
    };
    Ok(CasimirReport {
        component,
        residual,
        scale,
        relative,
    })
}

/// `|Σ_cyclic Σ_l H[i][l] ∂_l H[j][k]|` with central finite differences.
pub fn jacobi_residual(
    surface: &TriangulatedSurface,
    a: &ArcLengthVector,
    (i, j, k): (usize, usize, usize),
    rel_step: f64,
) -> Result<f64> {
    let n = surface.arc_count();
    if i == j || j == k || i == k || i.max(j).max(k) >= n {
        return Err(Error::Input {
            location: format!("indices ({i}, {j}, {k})"),
            message: format!("need three distinct arcs below {n}"),
        });
    }
    let h = wp_bivector(surface, a)?;
    let x = a.as_slice();
    let mut probe = x.to_vec();
    let mut dh = Vec::with_capacity(n);
    for l in 0..n {
        let step = rel_step * (1.0 + x[l].abs());
        probe[l] = x[l] + step;
        let up = wp_matrix(surface, &probe);
        probe[l] = x[l] - step;
        let down = wp_matrix(surface, &probe);
        probe[l] = x[l];
        dh.push((up - down) / (2.0 * step));
    }
    let term =
        |i: usize, j: usize, k: usize| (0..n).map(|l| h.get(i, l) * dh[l][(j, k)]).sum::<f64>();
    Ok((term(i, j, k) + term(j, k, i) + term(k, i, j)).abs())
}

/// `∂a_j/∂τ_i = ½ Σ sinh(p_C/2 − d_C(→α_j, →α_i)) / sinh(p_C/2)` over
/// distinct orientations of `α_j` and `α_i` ending on a common component.
pub fn twist_derivative_arc(
    surface: &TriangulatedSurface,
    a: &ArcLengthVector,
    i: usize,
    j: usize,
) -> Result<f64> {
    let n = surface.arc_count();
    if i >= n || j >= n {
        return Err(Error::Input {
            location: format!("arcs ({i}, {j})"),
            message: format!("surface has {n} arcs"),
        });
    }
    let geom = boundary_geometry(surface, a)?;
    let mut total = 0.0;
    for xj in [OrientedArc::forward(j), OrientedArc::backward(j)] {
        for xi in [OrientedArc::forward(i), OrientedArc::backward(i)] {
            if let Some(d) = geom.distance(xj, xi) {
                let p = geom.components[geom.component_of(xj)].length;
                total += 0.5 * wp_kernel(d, p);
            }
        }
    }
    Ok(total)
}
