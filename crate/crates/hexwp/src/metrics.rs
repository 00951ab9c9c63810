//! Coordinate geometry on a triangulated surface.
//!
//! Arc lengths `a` determine each right-angled hexagon, hence the boundary
//! segments, boundary lengths and foot positions, and Luo's width
//! coordinates. Flips are realized geometrically by developing the two
//! hexagons adjacent to an arc in the half-plane.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::hyptrig::{develop_hexagon, geodesic_distance, Frame};
use crate::surface::{OrientedArc, TriangulatedSurface};

/// Tolerance for internal agreement between independent formulas.
pub const CONSISTENCY_TOL: f64 = 1e-10;

/// Positive arc lengths indexed by arc id.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcLengthVector(Vec<f64>);

impl ArcLengthVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some((k, v)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !(**v > 0.0 && v.is_finite()))
        {
            return Err(Error::Domain(format!(
                "length of arc {k} is {v}; lengths must be positive"
            )));
        }
        Ok(ArcLengthVector(values))
    }

    /// Every arc gets the same length.
    pub fn uniform(arc_count: usize, value: f64) -> Result<Self> {
        ArcLengthVector::new(vec![value; arc_count])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn get(&self, arc: usize) -> f64 {
        self.0[arc]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    fn check_for(&self, surface: &TriangulatedSurface) -> Result<()> {
        if self.0.len() == surface.arc_count() {
            Ok(())
        } else {
            Err(Error::Input {
                location: "lengths".into(),
                message: format!(
                    "{} values for a surface with {} arcs",
                    self.0.len(),
                    surface.arc_count()
                ),
            })
        }
    }
}

/// `s = cosh(a/2)` per arc.
pub fn s_lengths(a: &ArcLengthVector) -> Vec<f64> {
    a.0.iter().map(|x| (0.5 * x).cosh()).collect()
}

/// Length of the boundary side opposite `a_i` in the hexagon with alternate sides `a_i, a_j, a_k`.
pub fn b_length(a_i: f64, a_j: f64, a_k: f64) -> f64 {
    ((a_j.cosh() * a_k.cosh() + a_i.cosh()) / (a_j.sinh() * a_k.sinh())).acosh()
}

/// Half-width of the side `a_i` from the s-length formula.
pub fn half_width(a_i: f64, a_j: f64, a_k: f64) -> f64 {
    let (si, sj, sk) = ((0.5 * a_i).cosh(), (0.5 * a_j).cosh(), (0.5 * a_k).cosh());
    ((sj * sj + sk * sk - si * si) / (2.0 * sj * sk * (0.5 * a_i).sinh())).asinh()
}

/// Cosine of the angle at the spine point facing side `a_i`.
pub fn spine_angle_cos(a_i: f64, a_j: f64, a_k: f64) -> f64 {
    let (si, sj, sk) = ((0.5 * a_i).cosh(), (0.5 * a_j).cosh(), (0.5 * a_k).cosh());
    (sj * sj + sk * sk - si * si) / (2.0 * sj * sk)
}

/// Geometry of one hexagon; index `m` refers to slot `m` of the hexagon.
#[derive(Debug, Clone, PartialEq)]
pub struct HexagonData {
    /// Boundary side opposite the arc in slot `m`.
    pub b: [f64; 3],
    pub half_width: [f64; 3],
    pub angle: [f64; 3],
}

#[derive(Debug, Clone, PartialEq)]
pub struct HexagonGeometry {
    pub hexagons: Vec<HexagonData>,
}

pub fn hexagon_geometry(
    surface: &TriangulatedSurface,
    a: &ArcLengthVector,
) -> Result<HexagonGeometry> {
    a.check_for(surface)?;
    let mut hexagons = Vec::with_capacity(surface.hexagons().len());
    for (t, h) in surface.hexagons().iter().enumerate() {
        let mut data = HexagonData {
            b: [0.0; 3],
            half_width: [0.0; 3],
            angle: [0.0; 3],
        };
        for m in 0..3 {
            let [xi, xj, xk] = h.rotated(m);
            let (ai, aj, ak) = (a.get(xi.arc), a.get(xj.arc), a.get(xk.arc));
            data.b[m] = b_length(ai, aj, ak);
            data.half_width[m] = half_width(ai, aj, ak);
            let cos = spine_angle_cos(ai, aj, ak);
            if !(-1.0..=1.0).contains(&cos) {
                return Err(Error::Consistency(format!(
                    "hexagon {t}: cos γ = {cos} outside [-1, 1]"
                )));
            }
            data.angle[m] = cos.acos();
        }
        hexagons.push(data);
    }
    Ok(HexagonGeometry { hexagons })
}

/// One boundary component with its feet in walk order.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryComponent {
    pub feet: Vec<OrientedArc>,
    /// Circular coordinate of each foot, starting at 0 for the first.
    pub positions: Vec<f64>,
    /// Segment from foot `m` to foot `m + 1`.
    pub segments: Vec<f64>,
    pub length: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryGeometry {
    pub components: Vec<BoundaryComponent>,
    /// `(component, index)` of each oriented arc's foot, by [`OrientedArc::index`].
    locator: Vec<(usize, usize)>,
}

impl BoundaryGeometry {
    /// Builds the walk geometry from a rule giving the length of each segment.
    pub fn from_segments(
        surface: &TriangulatedSurface,
        mut segment: impl FnMut(usize, OrientedArc) -> f64,
    ) -> Self {
        let mut locator = vec![(0, 0); 2 * surface.arc_count()];
        let mut components = Vec::new();
        for (c, cycle) in surface.boundary_cycles().iter().enumerate() {
            let mut positions = Vec::with_capacity(cycle.steps.len());
            let mut segments = Vec::with_capacity(cycle.steps.len());
            let mut total = 0.0;
            for (m, step) in cycle.steps.iter().enumerate() {
                locator[step.foot.index()] = (c, m);
                positions.push(total);
                let len = segment(step.segment.hexagon, step.segment.opposite);
                segments.push(len);
                total += len;
            }
            components.push(BoundaryComponent {
                feet: cycle.feet().collect(),
                positions,
                segments,
                length: total,
            });
        }
        BoundaryGeometry {
            components,
            locator,
        }
    }

    pub fn lengths(&self) -> Vec<f64> {
        self.components.iter().map(|c| c.length).collect()
    }

    pub fn component_of(&self, foot: OrientedArc) -> usize {
        self.locator[foot.index()].0
    }

    pub fn position(&self, foot: OrientedArc) -> f64 {
        let (c, m) = self.locator[foot.index()];
        self.components[c].positions[m]
    }

    /// `d_C(y, y')` in `(0, p_C)` for distinct feet on one component.
    pub fn distance(&self, y: OrientedArc, y2: OrientedArc) -> Option<f64> {
        let (c, _) = self.locator[y.index()];
        if y == y2 || self.locator[y2.index()].0 != c {
            return None;
        }
        Some(self.walk_distance(y, y2))
    }

    /// Distance travelled from `y` to `y2` along the walk; a full turn when `y == y2`.
    pub fn walk_distance(&self, y: OrientedArc, y2: OrientedArc) -> f64 {
        let p = self.components[self.locator[y.index()].0].length;
        let d = (self.position(y2) - self.position(y)).rem_euclid(p);
        if d == 0.0 {
            p
        } else {
            d
        }
    }
}

pub fn boundary_geometry(
    surface: &TriangulatedSurface,
    a: &ArcLengthVector,
) -> Result<BoundaryGeometry> {
    a.check_for(surface)?;
    Ok(boundary_geometry_unchecked(surface, a.as_slice()))
}

/// Segment lengths from raw values; callers guarantee the length vector fits.
pub(crate) fn boundary_geometry_unchecked(
    surface: &TriangulatedSurface,
    a: &[f64],
) -> BoundaryGeometry {
    BoundaryGeometry::from_segments(surface, |t, opposite| {
        let slot = surface.locate(opposite);
        debug_assert_eq!(slot.hexagon, t);
        let [xi, xj, xk] = surface.hexagons()[t].rotated(slot.position);
        b_length(a[xi.arc], a[xj.arc], a[xk.arc])
    })
}

/// Boundary lengths `p_C`, in cycle order.
pub fn boundary_lengths(surface: &TriangulatedSurface, a: &[f64]) -> Vec<f64> {
    boundary_geometry_unchecked(surface, a).lengths()
}

/// Luo's width coordinates with their per-hexagon halves.
#[derive(Debug, Clone, PartialEq)]
pub struct WidthVector {
    /// `w(α)` per arc.
    pub total: Vec<f64>,
    /// `w(→α)` per oriented arc, by [`OrientedArc::index`].
    pub half: Vec<f64>,
}

/// Widths from the s-length formula only.
pub fn width_values(surface: &TriangulatedSurface, a: &[f64]) -> Vec<f64> {
    let mut w = vec![0.0; surface.arc_count()];
    for h in surface.hexagons() {
        for m in 0..3 {
            let [xi, xj, xk] = h.rotated(m);
            w[xi.arc] += half_width(a[xi.arc], a[xj.arc], a[xk.arc]);
        }
    }
    w
}

/// Widths from boundary distances, cross-checked against the s-length formula.
pub fn widths(surface: &TriangulatedSurface, a: &ArcLengthVector) -> Result<WidthVector> {
    let geom = boundary_geometry(surface, a)?;
    let mut half = vec![0.0; 2 * surface.arc_count()];
    let mut total = vec![0.0; surface.arc_count()];
    for h in surface.hexagons() {
        for m in 0..3 {
            let [xi, xj, xk] = h.rotated(m);
            let d = |y: OrientedArc, y2: OrientedArc| geom.walk_distance(y, y2);
            let from_d = 0.5 * (d(xi, xj.reverse()) + d(xk, xi.reverse()) - d(xj, xk.reverse()));
            let from_s = half_width(a.get(xi.arc), a.get(xj.arc), a.get(xk.arc));
            if (from_d - from_s).abs() > CONSISTENCY_TOL * (1.0 + from_s.abs()) {
                return Err(Error::Consistency(format!(
                    "half-width of {xi}: boundary formula {from_d} vs s-length formula {from_s}"
                )));
            }
            half[xi.index()] = from_d;
            total[xi.arc] += from_d;
        }
    }
    Ok(WidthVector { total, half })
}

/// Central finite-difference Jacobian of `f` at `x`, step `rel_step·(1 + |x_l|)`.
pub fn fd_jacobian(x: &[f64], rel_step: f64, f: impl Fn(&[f64]) -> Vec<f64>) -> DMatrix<f64> {
    let mut cols = Vec::with_capacity(x.len());
    let mut probe = x.to_vec();
    for l in 0..x.len() {
        let h = rel_step * (1.0 + x[l].abs());
        probe[l] = x[l] + h;
        let up = f(&probe);
        probe[l] = x[l] - h;
        let down = f(&probe);
        probe[l] = x[l];
        cols.push(DVector::from_iterator(
            up.len(),
            up.iter().zip(&down).map(|(u, d)| (u - d) / (2.0 * h)),
        ));
    }
    DMatrix::from_columns(&cols)
}

/// Jacobian of `a ↦ w(a)`.
pub fn width_jacobian(surface: &TriangulatedSurface, a: &[f64], rel_step: f64) -> DMatrix<f64> {
    fd_jacobian(a, rel_step, |x| width_values(surface, x))
}

/// Ratio of extreme singular values.
pub fn condition_number(m: &DMatrix<f64>) -> f64 {
    let sv = m.singular_values();
    let hi = sv.iter().cloned().fold(0.0, f64::max);
    let lo = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    hi / lo
}

/// Length of the arc replacing `arc` after a flip, by developing both adjacent hexagons.
pub fn flipped_arc_length(
    surface: &TriangulatedSurface,
    a: &ArcLengthVector,
    arc: usize,
) -> Result<f64> {
    a.check_for(surface)?;
    if arc >= surface.arc_count() {
        return Err(Error::Configuration(format!("arc {arc} does not exist")));
    }
    let e = OrientedArc::forward(arc);
    let (s, s2) = (surface.locate(e), surface.locate(e.reverse()));
    if s.hexagon == s2.hexagon {
        return Err(Error::Configuration(format!(
            "arc {arc} is glued to itself within one hexagon"
        )));
    }
    let [_, x, y] = surface.hexagons()[s.hexagon].rotated(s.position);
    let [_, u, v] = surface.hexagons()[s2.hexagon].rotated(s2.position);
    let t = develop_hexagon(a.get(arc), a.get(x.arc), a.get(y.arc))?;
    let t2 = develop_hexagon(a.get(arc), a.get(u.arc), a.get(v.arc))?;
    // Glue along the shared arc, traversed in opposite directions by the two hexagons.
    let onto = Frame::looking_at(t.vertices[1], t.vertices[0])?;
    let from = Frame::looking_at(t2.vertices[0], t2.vertices[1])?;
    let glue = onto.map().compose(&from.map().inverse());
    let far = t2.sides[3].transformed(&glue);
    geodesic_distance(&t.sides[3], &far).map_err(|e| {
        Error::Degenerate(format!(
            "flip of arc {arc}: new diagonal does not exist ({e})"
        ))
    })
}

/// Flips `arc` combinatorially and geometrically.
pub fn flip_length(
    surface: &TriangulatedSurface,
    a: &ArcLengthVector,
    arc: usize,
) -> Result<(TriangulatedSurface, ArcLengthVector)> {
    let len = flipped_arc_length(surface, a, arc)?;
    let flipped = surface.flip_combinatorial(arc)?;
    let mut values = a.as_slice().to_vec();
    values[arc] = len;
    Ok((flipped, ArcLengthVector::new(values)?))
}

/// Result of the search for a triangulation with non-negative widths.
#[derive(Debug, Clone)]
pub struct SpineSearch {
    pub surface: TriangulatedSurface,
    pub lengths: ArcLengthVector,
    pub flips: Vec<usize>,
    pub trace: Vec<String>,
}

/// Default cap on the number of flips in [`find_spine_triangulation`].
pub const SPINE_ITERATION_CAP: usize = 200;

/// Widths below this count as negative.
pub const SPINE_WIDTH_TOL: f64 = -1e-12;

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

/// Flips the most negative-width arc (ties to the smaller id) until all widths are non-negative.
pub fn find_spine_triangulation(
    surface: &TriangulatedSurface,
    a: &ArcLengthVector,
    cap: usize,
) -> Result<SpineSearch> {
    a.check_for(surface)?;
    let reference = sorted(boundary_lengths(surface, a.as_slice()));
    let (mut s, mut len) = (surface.clone(), a.clone());
    let (mut flips, mut trace) = (Vec::new(), Vec::new());
    loop {
        let w = width_values(&s, len.as_slice());
        let mut negative: Vec<(usize, f64)> = w
            .iter()
            .cloned()
            .enumerate()
            .filter(|(_, v)| *v < SPINE_WIDTH_TOL)
            .collect();
        if negative.is_empty() {
            return Ok(SpineSearch {
                surface: s,
                lengths: len,
                flips,
                trace,
            });
        }
        if flips.len() >= cap {
            return Err(Error::IterationCap { cap, trace });
        }
        negative.sort_by(|x, y| x.1.total_cmp(&y.1).then(x.0.cmp(&y.0)));
        let mut step = None;
        for &(arc, value) in &negative {
            match flip_length(&s, &len, arc) {
                Ok(next) => {
                    step = Some((arc, value, next));
                    break;
                }
                Err(e) => trace.push(format!("arc {arc} (w={value:.6e}) not flippable: {e}")),
            }
        }
        let Some((arc, value, (ns, nl))) = step else {
            return Err(Error::Configuration(format!(
                "no negative-width arc can be flipped; trace: {}",
                trace.join(" | ")
            )));
        };
        let p = sorted(boundary_lengths(&ns, nl.as_slice()));
        let drift = p
            .iter()
            .zip(&reference)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        trace.push(format!(
            "flip arc {arc} (w={value:.6e}) -> a={:.12}, boundary drift {drift:.3e}",
            nl.get(arc)
        ));
        if drift > 1e-8 {
            return Err(Error::Consistency(format!(
                "boundary lengths drifted by {drift:e} after flipping arc {arc}"
            )));
        }
        flips.push(arc);
        s = ns;
        len = nl;
    }
}

/// Options for [`invert_widths`].
#[derive(Debug, Clone)]
pub struct InversionOptions {
    pub initial: Option<ArcLengthVector>,
    pub tol: f64,
    pub max_iterations: usize,
    pub rel_step: f64,
}

impl Default for InversionOptions {
    fn default() -> Self {
        InversionOptions {
            initial: None,
            tol: 1e-10,
            max_iterations: 100,
            rel_step: 1e-6,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Inversion {
    pub lengths: ArcLengthVector,
    pub residual: f64,
    pub iterations: usize,
    /// Condition number of the width Jacobian at the solution.
    pub condition: f64,
}

fn max_abs_diff(x: &[f64], y: &[f64]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

/// Damped Newton iteration for `widths(a) = target`.
pub fn invert_widths(
    surface: &TriangulatedSurface,
    target: &[f64],
    opts: &InversionOptions,
) -> Result<Inversion> {
    if target.len() != surface.arc_count() {
        return Err(Error::Input {
            location: "widths".into(),
            message: format!(
                "{} values for a surface with {} arcs",
                target.len(),
                surface.arc_count()
            ),
        });
    }
    if let Some((k, v)) = target.iter().enumerate().find(|(_, v)| !(**v > 0.0)) {
        return Err(Error::Domain(format!(
            "target width of arc {k} is {v}; must be positive"
        )));
    }
    let mut a = match &opts.initial {
        Some(init) => {
            init.check_for(surface)?;
            init.as_slice().to_vec()
        }
        None => vec![2.0 * 2f64.acosh(); surface.arc_count()],
    };
    let mut residual = max_abs_diff(&width_values(surface, &a), target);
    for it in 0..opts.max_iterations {
        if residual <= opts.tol {
            let j = width_jacobian(surface, &a, opts.rel_step);
            return Ok(Inversion {
                lengths: ArcLengthVector::new(a)?,
                residual,
                iterations: it,
                condition: condition_number(&j),
            });
        }
        let j = width_jacobian(surface, &a, opts.rel_step);
        let w = width_values(surface, &a);
        let rhs = DVector::from_iterator(a.len(), target.iter().zip(&w).map(|(t, w)| t - w));
        let Some(delta) = j.lu().solve(&rhs) else {
            return Err(Error::NoConvergence {
                iterations: it,
                residual,
            });
        };
        let mut scale = 1.0;
        loop {
            let trial: Vec<f64> = a
                .iter()
                .zip(delta.iter())
                .map(|(x, d)| x + scale * d)
                .collect();
            if trial.iter().all(|x| *x > 0.0) {
                let r = max_abs_diff(&width_values(surface, &trial), target);
                if r < residual {
                    a = trial;
                    residual = r;
                    break;
                }
            }
            scale *= 0.5;
            if scale < 1e-10 {
                return Err(Error::NoConvergence {
                    iterations: it,
                    residual,
                });
            }
        }
    }
    if residual <= opts.tol {
        let j = width_jacobian(surface, &a, opts.rel_step);
        return Ok(Inversion {
            lengths: ArcLengthVector::new(a)?,
            residual,
            iterations: opts.max_iterations,
            condition: condition_number(&j),
        });
    }
    Err(Error::NoConvergence {
        iterations: opts.max_iterations,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn sym(s: &TriangulatedSurface) -> ArcLengthVector {
        ArcLengthVector::uniform(s.arc_count(), 2f64.acosh()).unwrap()
    }

    #[test]
    fn s_length_values() {
        let a = ArcLengthVector::new(vec![2.0 * 2f64.acosh(), 1e-6, 0.5, 0.6]).unwrap();
        let s = s_lengths(&a);
        assert!((s[0] - 2.0).abs() < 1e-14);
        assert!(s[1] > 1.0 && s[1] - 1.0 < 1e-12);
        assert!(s[2] < s[3]);
        assert!(ArcLengthVector::new(vec![1.0, 0.0]).is_err());
    }

    #[test]
    fn symmetric_hexagon() {
        let s = TriangulatedSurface::one_holed_torus();
        let g = hexagon_geometry(&s, &sym(&s)).unwrap();
        for h in &g.hexagons {
            for m in 0..3 {
                assert!((h.b[m] - 2f64.acosh()).abs() < 1e-14);
                // s² = 3/2, so sinh w = 1/(2√(s² − 1)) = 1/√2, and b = 2w.
                assert!((h.half_width[m].sinh() - 0.5f64.sqrt()).abs() < 1e-14);
                assert!((2.0 * h.half_width[m] - h.b[m]).abs() < 1e-14);
                assert!((h.angle[m] - PI / 3.0).abs() < 1e-14);
            }
        }
        // With s = 2 the same expression is 1/(2√3).
        let a = ArcLengthVector::uniform(3, 2.0 * 2f64.acosh()).unwrap();
        let g = hexagon_geometry(&s, &a).unwrap();
        assert!((g.hexagons[0].half_width[0].sinh() - 1.0 / (2.0 * 3f64.sqrt())).abs() < 1e-14);
        assert!((g.hexagons[0].angle[0] - PI / 3.0).abs() < 1e-14);
    }

    #[test]
    fn right_angle_when_numerator_vanishes() {
        // s_j² + s_k² = s_i² with s_j = s_k = 2 gives s_i = 2√2.
        let (aj, ai) = (2.0 * 2f64.acosh(), 2.0 * (2.0 * 2f64.sqrt()).acosh());
        assert!(half_width(ai, aj, aj).abs() < 1e-14);
        assert!(spine_angle_cos(ai, aj, aj).abs() < 1e-14);
    }

    #[test]
    fn symmetric_boundaries() {
        let b = 2f64.acosh();
        let t = TriangulatedSurface::one_holed_torus();
        let g = boundary_geometry(&t, &sym(&t)).unwrap();
        assert_eq!(g.components.len(), 1);
        assert!((g.components[0].length - 6.0 * b).abs() < 1e-13);
        assert!((g.components[0].length - 7.9017).abs() < 1e-4);
        let p = TriangulatedSurface::pair_of_pants();
        let g = boundary_geometry(&p, &sym(&p)).unwrap();
        for c in &g.components {
            assert!((c.length - 2.0 * b).abs() < 1e-13);
        }
    }

    #[test]
    fn symmetric_widths() {
        let t = TriangulatedSurface::one_holed_torus();
        let w = widths(&t, &sym(&t)).unwrap();
        let expected = 2.0 * 0.5f64.sqrt().asinh();
        for v in &w.total {
            assert!((v - expected).abs() < 1e-13);
        }
        let p = boundary_geometry(&t, &sym(&t)).unwrap().components[0].length;
        // Each half-width sits at both ends of its arc, so the halves cover the boundary twice over.
        assert!((2.0 * w.half.iter().sum::<f64>() - p).abs() < 1e-12);
    }

    #[test]
    fn torus_flips_are_symmetric() {
        let t = TriangulatedSurface::one_holed_torus();
        let a = sym(&t);
        let lens: Vec<f64> = (0..3)
            .map(|k| flipped_arc_length(&t, &a, k).unwrap())
            .collect();
        assert!((lens[0] - lens[1]).abs() < 1e-9 && (lens[1] - lens[2]).abs() < 1e-9);
        let (t2, a2) = flip_length(&t, &a, 1).unwrap();
        let (_, a3) = flip_length(&t2, &a2, 1).unwrap();
        assert!(max_abs_diff(a3.as_slice(), a.as_slice()) < 1e-8);
    }

    #[test]
    fn spine_search_flips_a_negative_arc() {
        let t = TriangulatedSurface::one_holed_torus();
        let a = ArcLengthVector::new(vec![3.0, 0.3, 0.3]).unwrap();
        assert!(width_values(&t, a.as_slice()).iter().any(|w| *w < 0.0));
        let r = find_spine_triangulation(&t, &a, SPINE_ITERATION_CAP).unwrap();
        assert!(!r.flips.is_empty());
        assert!(width_values(&r.surface, r.lengths.as_slice())
            .iter()
            .all(|w| *w >= SPINE_WIDTH_TOL));
    }

    #[test]
    fn spine_search_keeps_symmetric_input() {
        let t = TriangulatedSurface::one_holed_torus();
        let r = find_spine_triangulation(&t, &sym(&t), SPINE_ITERATION_CAP).unwrap();
        assert!(r.flips.is_empty());
        assert_eq!(r.lengths, sym(&t));
    }

    #[test]
    fn width_inversion_round_trip() {
        let t = TriangulatedSurface::one_holed_torus();
        let a = ArcLengthVector::new(vec![1.2, 1.4, 1.5]).unwrap();
        let w = width_values(&t, a.as_slice());
        let inv = invert_widths(&t, &w, &InversionOptions::default()).unwrap();
        assert!(max_abs_diff(inv.lengths.as_slice(), a.as_slice()) < 1e-8);
        assert!(inv.condition.is_finite());
        let sym_w = width_values(&t, sym(&t).as_slice());
        let inv = invert_widths(&t, &sym_w, &InversionOptions::default()).unwrap();
        let v = inv.lengths.as_slice();
        assert!((v[0] - v[1]).abs() < 1e-9 && (v[1] - v[2]).abs() < 1e-9);
    }
}
