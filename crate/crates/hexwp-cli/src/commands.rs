//! One function per subcommand.

use std::fmt;

use hexwp::limits::{duality_residual, large_boundary_limit_study, DecoratedSurface};
use hexwp::metrics::{
    b_length, boundary_geometry, boundary_lengths, find_spine_triangulation, flip_length,
    half_width, spine_angle_cos, width_values, ArcLengthVector, SPINE_ITERATION_CAP,
    SPINE_WIDTH_TOL,
};
use hexwp::surface::TriangulatedSurface;
use hexwp::twist::{
    coefficient_c, twist_breakdown, twist_derivative_right_angle, RightAngleIntersection,
    TwistScenario,
};
use hexwp::wp_poisson::{
    casimir_residual, jacobi_residual, wp_bivector, GRADIENT_STEP, JACOBI_STEP,
};
use hexwp::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::io::{arc_map, load_arc_map, load_scenario, load_surface, num, Report, Verdict};
use crate::{Command, Options};

pub const CASIMIR_TOL: f64 = 1e-7;
pub const JACOBI_TOL: f64 = 1e-5;
pub const LIMIT_TOL: f64 = 1e-2;
pub const LIMIT_STEP: f64 = 1e-6;
pub const DUALITY_TOL: f64 = 1e-7;
pub const FLIP_TOL: f64 = 1e-8;
pub const DEFAULT_T_LIST: [f64; 5] = [1.0, 0.3, 0.1, 0.03, 0.01];

/// Sampling range for arc lengths.
const A_RANGE: (f64, f64) = (0.2, 3.0);
/// Sampling range for λ-lengths.
const LAMBDA_RANGE: (f64, f64) = (0.5, 2.0);

#[derive(Debug)]
pub enum Failure {
    /// Bad flags or input documents (exit 2).
    Input(Error),
    /// A computation could not be completed consistently (exit 1).
    Verification(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) | Error::NoConvergence { .. } | Error::IterationCap { .. } => {
                Failure::Verification(e)
            }
            other => Failure::Input(other),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(e) | Failure::Verification(e) => e.fmt(f),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn input(location: &str, message: impl Into<String>) -> Failure {
    Failure::Input(Error::Input {
        location: location.into(),
        message: message.into(),
    })
}

fn positive(name: &str, value: Option<f64>, default: f64) -> Result<f64, Failure> {
    match value {
        None => Ok(default),
        Some(v) if v > 0.0 && v.is_finite() => Ok(v),
        Some(v) => Err(input(name, format!("must be positive, got {v}"))),
    }
}

pub fn run(command: Command, o: &Options) -> Outcome {
    match command {
        Command::Validate => validate(o),
        Command::Geom => geom(o),
        Command::Poisson => poisson(o),
        Command::Casimir => casimir(o),
        Command::Jacobi => jacobi(o),
        Command::LimitKontsevich => limit_kontsevich(o),
        Command::PennerDuality => penner_duality(o),
        Command::Twist => twist(o),
        Command::Flip => flip(o),
        Command::Spine => spine(o),
    }
}

/// Input vectors: the file if given, else `--samples` seeded draws from `range`.
fn vectors(
    path: Option<&std::path::Path>,
    o: &Options,
    n: usize,
    range: (f64, f64),
) -> Result<(Vec<Vec<f64>>, Option<u64>), Failure> {
    if let Some(p) = path {
        return Ok((vec![load_arc_map(p, n)?], None));
    }
    if o.samples == 0 {
        return Err(input("--samples", "must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let draws = (0..o.samples)
        .map(|_| (0..n).map(|_| rng.gen_range(range.0..range.1)).collect())
        .collect();
    Ok((draws, Some(o.seed)))
}

fn lengths(s: &TriangulatedSurface, o: &Options) -> Result<(Vec<Vec<f64>>, Option<u64>), Failure> {
    vectors(o.lengths.as_deref(), o, s.arc_count(), A_RANGE)
}

/// A single length vector, from file or the first seeded draw.
fn single_lengths(
    s: &TriangulatedSurface,
    o: &Options,
) -> Result<(ArcLengthVector, Option<u64>), Failure> {
    let (mut v, seed) = lengths(s, o)?;
    Ok((ArcLengthVector::new(v.swap_remove(0))?, seed))
}

fn surface_json(s: &TriangulatedSurface) -> Value {
    serde_json::to_value(s.to_document()).expect("surface documents serialize")
}

fn validate(o: &Options) -> Outcome {
    let s = load_surface(o.surface.as_deref())?;
    let t = s.topology();
    let mut r = Report::new(
        "validate",
        vec!["component", "step", "foot", "hexagon", "opposite"],
    );
    r.set("name", s.name());
    r.set(
        "topology",
        serde_json::to_value(t).expect("topology serializes"),
    );
    r.set(
        "boundary",
        serde_json::to_value(s.boundary_cycles()).expect("cycles serialize"),
    );
    for (c, cycle) in s.boundary_cycles().iter().enumerate() {
        for (m, step) in cycle.steps.iter().enumerate() {
            r.row(vec![
                c.to_string(),
                m.to_string(),
                step.foot.to_string(),
                step.segment.hexagon.to_string(),
                step.segment.opposite.to_string(),
            ]);
        }
    }
    Ok(r)
}

fn geom(o: &Options) -> Outcome {
    let s = load_surface(o.surface.as_deref())?;
    let (a, seed) = single_lengths(&s, o)?;
    let geom = boundary_geometry(&s, &a)?;
    let mut r = Report::new(
        "geom",
        vec![
            "hexagon",
            "slot",
            "arc",
            "a",
            "s",
            "b",
            "half_width",
            "angle",
        ],
    );
    r.seed = seed;
    let mut hexagons = Vec::new();
    for (t, h) in s.hexagons().iter().enumerate() {
        let mut slots = Vec::new();
        for m in 0..3 {
            let [xi, xj, xk] = h.rotated(m);
            let (ai, aj, ak) = (a.get(xi.arc), a.get(xj.arc), a.get(xk.arc));
            let cos = spine_angle_cos(ai, aj, ak);
            // No spine vertex inside the hexagon when |cos| > 1.
            let angle = (-1.0..=1.0).contains(&cos).then(|| cos.acos());
            let (b, w, sl) = (
                b_length(ai, aj, ak),
                half_width(ai, aj, ak),
                (ai / 2.0).cosh(),
            );
            slots.push(json!({
                "arc": xi, "a": ai, "s": sl, "b": b, "half_width": w, "angle": angle,
            }));
            r.row(vec![
                t.to_string(),
                m.to_string(),
                xi.to_string(),
                num(ai),
                num(sl),
                num(b),
                num(w),
                angle.map_or(String::new(), num),
            ]);
        }
        hexagons.push(Value::Array(slots));
    }
    let components: Vec<Value> = geom
        .components
        .iter()
        .map(|c| {
            json!({
                "length": c.length, "feet": c.feet, "positions": c.positions,
                "segments": c.segments,
            })
        })
        .collect();
    r.set("lengths", arc_map(a.as_slice()));
    r.set("hexagons", hexagons);
    r.set("boundary", components);
    r.set("widths", arc_map(&width_values(&s, a.as_slice())));
    Ok(r)
}

fn poisson(o: &Options) -> Outcome {
    let s = load_surface(o.surface.as_deref())?;
    let (a, seed) = single_lengths(&s, o)?;
    let h = wp_bivector(&s, &a)?;
    let mut r = Report::new("poisson", vec!["i", "j", "value"]);
    r.seed = seed;
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            r.row(vec![i.to_string(), j.to_string(), num(h.get(i, j))]);
        }
    }
    r.set("lengths", arc_map(a.as_slice()));
    r.set("matrix", h.rows());
    Ok(r)
}

fn casimir(o: &Options) -> Outcome {
    let s = load_surface(o.surface.as_deref())?;
    let tol = positive("--tol", o.tol, CASIMIR_TOL)?;
    let step = positive("--fd-step", o.fd_step, GRADIENT_STEP)?;
    let (vs, seed) = lengths(&s, o)?;
    let mut r = Report::new(
        "casimir",
        vec!["sample", "component", "residual", "scale", "relative"],
    );
    r.seed = seed;
    let mut worst = 0.0f64;
    let mut entries = Vec::new();
    for (k, v) in vs.into_iter().enumerate() {
        let a = ArcLengthVector::new(v)?;
        for c in 0..s.topology().boundary_count {
            let rep = casimir_residual(&s, &a, c, step)?;
            worst = worst.max(rep.relative);
            entries.push(json!({
                "sample": k, "component": c, "residual": rep.residual,
                "scale": rep.scale, "relative": rep.relative,
            }));
            r.row(vec![
                k.to_string(),
                c.to_string(),
                num(rep.residual),
                num(rep.scale),
                num(rep.relative),
            ]);
        }
    }
    r.set("fd_step", step);
    r.set("residuals", entries);
    r.verdict = Some(Verdict::at_most(worst, tol));
    Ok(r)
}

fn jacobi(o: &Options) -> Outcome {
    let s = load_surface(o.surface.as_deref())?;
    let tol = positive("--tol", o.tol, JACOBI_TOL)?;
    let step = positive("--fd-step", o.fd_step, JACOBI_STEP)?;
    let n = s.arc_count();
    if n < 3 {
        return Err(input("surface", "needs at least three arcs"));
    }
    let (vs, seed) = lengths(&s, o)?;
    let mut r = Report::new("jacobi", vec!["sample", "i", "j", "k", "residual"]);
    r.seed = seed;
    let mut worst = 0.0f64;
    let mut entries = Vec::new();
    for (m, v) in vs.into_iter().enumerate() {
        let a = ArcLengthVector::new(v)?;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let res = jacobi_residual(&s, &a, (i, j, k), step)?;
                    worst = worst.max(res);
                    entries.push(json!({"sample": m, "triple": [i, j, k], "residual": res}));
                    r.row(vec![
                        m.to_string(),
                        i.to_string(),
                        j.to_string(),
                        k.to_string(),
                        num(res),
                    ]);
                }
            }
        }
    }
    r.set("fd_step", step);
    r.set("residuals", entries);
    r.verdict = Some(Verdict::at_most(worst, tol));
    Ok(r)
}

fn limit_kontsevich(o: &Options) -> Outcome {
    let s = load_surface(o.surface.as_deref())?;
    let tol = positive("--tol", o.tol, LIMIT_TOL)?;
    let step = positive("--fd-step", o.fd_step, LIMIT_STEP)?;
    let t_list = o.t_list.clone().unwrap_or_else(|| DEFAULT_T_LIST.to_vec());
    let (a0, seed) = single_lengths(&s, o)?;
    let rows = large_boundary_limit_study(&s, &a0, &t_list, step)?;
    let mut r = Report::new("limit-kontsevich", vec!["t", "delta", "sign_match"]);
    r.seed = seed;
    for row in &rows {
        r.row(vec![num(row.t), num(row.delta), row.sign_match.to_string()]);
    }
    let decreasing = rows.windows(2).all(|w| w[1].delta < w[0].delta);
    let last = rows.last().expect("t-list is non-empty").delta;
    r.set("a0", arc_map(a0.as_slice()));
    r.set("fd_step", step);
    r.set("rows", serde_json::to_value(&rows).expect("rows serialize"));
    r.set("strictly_decreasing", decreasing);
    r.verdict = Some(Verdict {
        residual: last,
        tol,
        pass: decreasing && last <= tol,
    });
    Ok(r)
}

fn penner_duality(o: &Options) -> Outcome {
    let s = load_surface(o.surface.as_deref())?;
    let tol = positive("--tol", o.tol, DUALITY_TOL)?;
    let step = positive("--fd-step", o.fd_step, GRADIENT_STEP)?;
    let (vs, seed) = vectors(o.lambda.as_deref(), o, s.arc_count(), LAMBDA_RANGE)?;
    let mut r = Report::new("penner-duality", vec!["sample", "arc", "residual"]);
    r.seed = seed;
    let mut worst = 0.0f64;
    let mut entries = Vec::new();
    for (k, lambda) in vs.into_iter().enumerate() {
        let d = DecoratedSurface::new(s.clone(), lambda.clone())?;
        let rep = duality_residual(&d, step);
        worst = worst.max(rep.max);
        for (arc, v) in rep.per_arc.iter().enumerate() {
            r.row(vec![k.to_string(), arc.to_string(), num(*v)]);
        }
        entries.push(json!({"sample": k, "lambda": arc_map(&lambda), "per_arc": rep.per_arc}));
    }
    r.set("fd_step", step);
    r.set("residuals", entries);
    r.verdict = Some(Verdict::at_most(worst, tol));
    Ok(r)
}

/// Right-angle form of `s` when it has no distant or homotopic items and all `ν = π/2`.
fn right_angle_form(s: &TwistScenario) -> Option<Vec<RightAngleIntersection>> {
    if !s.distant.is_empty() {
        return None;
    }
    s.items
        .iter()
        .map(|i| {
            (i.nu == std::f64::consts::FRAC_PI_2 && !i.homotopic_to_delta && i.r_wind == 0)
                .then_some(RightAngleIntersection {
                    target: i.target,
                    d: i.d,
                    p: i.p,
                })
        })
        .collect()
}

fn twist(o: &Options) -> Outcome {
    let path = o
        .scenario
        .as_deref()
        .ok_or_else(|| input("--scenario", "required for twist"))?;
    let sc = load_scenario(path)?;
    let b = twist_breakdown(&sc)?;
    let mut r = Report::new("twist", vec!["item", "kind", "value"]);
    let mut coefficients = Vec::new();
    for (k, item) in sc.items.iter().enumerate() {
        let c = coefficient_c(item, sc.h)?;
        coefficients.push(c);
        let kind = serde_json::to_value(item.target).expect("targets serialize");
        r.row(vec![
            k.to_string(),
            kind.as_str().unwrap_or_default().to_string(),
            num(c),
        ]);
    }
    for (name, v) in [("c1", b.c1), ("c2", b.c2), ("c0", b.c0), ("total", b.total)] {
        r.row(vec![String::new(), name.to_string(), num(v)]);
    }
    r.set("h", sc.h);
    r.set("coefficients", coefficients);
    r.set(
        "breakdown",
        serde_json::to_value(b).expect("breakdown serializes"),
    );
    if let Some(items) = right_angle_form(&sc) {
        let special = twist_derivative_right_angle(&items)?;
        r.set("right_angle_total", special);
        r.verdict = Some(Verdict::at_most((special - b.total).abs(), 0.0));
    }
    Ok(r)
}

fn max_abs_diff(x: &[f64], y: &[f64]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

fn flip(o: &Options) -> Outcome {
    let s = load_surface(o.surface.as_deref())?;
    let arc = o.arc.ok_or_else(|| input("--arc", "required for flip"))?;
    let tol = positive("--tol", o.tol, FLIP_TOL)?;
    let (a, seed) = single_lengths(&s, o)?;
    let (fs, fa) = flip_length(&s, &a, arc)?;
    let (_, back) = flip_length(&fs, &fa, arc)?;
    let restore = max_abs_diff(back.as_slice(), a.as_slice());
    let drift = max_abs_diff(
        &sorted(boundary_lengths(&s, a.as_slice())),
        &sorted(boundary_lengths(&fs, fa.as_slice())),
    );
    let mut r = Report::new("flip", vec!["arc", "before", "after"]);
    r.seed = seed;
    for k in 0..s.arc_count() {
        r.row(vec![k.to_string(), num(a.get(k)), num(fa.get(k))]);
    }
    r.set("arc", arc);
    r.set("lengths", arc_map(fa.as_slice()));
    r.set("surface", surface_json(&fs));
    r.set("restore_residual", restore);
    r.set("boundary_drift", drift);
    r.verdict = Some(Verdict::at_most(restore.max(drift), tol));
    Ok(r)
}

fn spine(o: &Options) -> Outcome {
    let s = load_surface(o.surface.as_deref())?;
    let cap = o.max_flips.unwrap_or(SPINE_ITERATION_CAP);
    let (a, seed) = single_lengths(&s, o)?;
    let found = find_spine_triangulation(&s, &a, cap)?;
    let w = width_values(&found.surface, found.lengths.as_slice());
    let min = w.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut r = Report::new("spine", vec!["arc", "length", "width"]);
    r.seed = seed;
    for (k, wk) in w.iter().enumerate() {
        r.row(vec![k.to_string(), num(found.lengths.get(k)), num(*wk)]);
    }
    r.set("flips", found.flips.clone());
    r.set("trace", found.trace.clone());
    r.set("lengths", arc_map(found.lengths.as_slice()));
    r.set("widths", arc_map(&w));
    r.set("surface", surface_json(&found.surface));
    r.verdict = Some(Verdict::at_most((-min).max(0.0), -SPINE_WIDTH_TOL));
    Ok(r)
}
