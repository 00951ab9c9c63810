//! Input readers and output documents.

use std::collections::BTreeMap;
use std::path::Path;

use hexwp::surface::{arc_map_to_vec, read_surface, TriangulatedSurface};
use hexwp::twist::TwistScenario;
use hexwp::{Error, Result};
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "hexwp-cli/1";

/// Pass/fail judgement of a verification command.
#[derive(Debug, Clone, Copy)]
pub struct Verdict {
    pub residual: f64,
    pub tol: f64,
    pub pass: bool,
}

impl Verdict {
    pub fn at_most(residual: f64, tol: f64) -> Self {
        Verdict {
            residual,
            tol,
            pass: residual <= tol,
        }
    }
}

/// A command result: a JSON payload plus a flat table for CSV output.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub seed: Option<u64>,
    pub payload: Map<String, Value>,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub verdict: Option<Verdict>,
}

impl Report {
    pub fn new(command: &'static str, header: Vec<&'static str>) -> Self {
        Report {
            command,
            seed: None,
            payload: Map::new(),
            header,
            rows: Vec::new(),
            verdict: None,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.payload.insert(key.to_string(), value.into());
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }
}

pub fn to_json(r: &Report) -> String {
    let mut doc = Map::new();
    doc.insert("schema".into(), SCHEMA.into());
    doc.insert("command".into(), r.command.into());
    doc.insert("seed".into(), r.seed.map_or(Value::Null, Value::from));
    doc.insert(
        "rng".into(),
        r.seed.map_or(Value::Null, |_| "ChaCha8".into()),
    );
    if let Some(v) = r.verdict {
        doc.insert(
            "verdict".into(),
            json!({"residual": v.residual, "tol": v.tol, "pass": v.pass}),
        );
    }
    for (k, v) in &r.payload {
        doc.insert(k.clone(), v.clone());
    }
    serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON values serialize") + "\n"
}

pub fn to_csv(r: &Report) -> String {
    let mut out = format!("# schema: {SCHEMA}\n# command: {}\n", r.command);
    if let Some(seed) = r.seed {
        out += &format!("# seed: {seed} (ChaCha8)\n");
    }
    if let Some(v) = r.verdict {
        out += &format!(
            "# residual: {:e} tol: {:e} pass: {}\n",
            v.residual, v.tol, v.pass
        );
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&r.header).expect("in-memory write");
    for row in &r.rows {
        w.write_record(row).expect("in-memory write");
    }
    out + &String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 cells")
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input {
        location: path.display().to_string(),
        message: e.to_string(),
    })
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input {
        location: format!("{}:{}:{}", path.display(), e.line(), e.column()),
        message: e.to_string(),
    })
}

pub fn load_surface(path: Option<&Path>) -> Result<TriangulatedSurface> {
    match path {
        Some(p) => read_surface(p),
        None => Ok(TriangulatedSurface::one_holed_torus()),
    }
}

/// Reads an `{"arc id": value}` map covering exactly the arcs of the surface.
pub fn load_arc_map(path: &Path, arc_count: usize) -> Result<Vec<f64>> {
    let map: BTreeMap<usize, f64> = parse(path, &read_text(path)?)?;
    arc_map_to_vec(&map, arc_count).map_err(|e| match e {
        Error::Input { location, message } => Error::Input {
            location: format!("{}: {location}", path.display()),
            message,
        },
        other => other,
    })
}

pub fn load_scenario(path: &Path) -> Result<TwistScenario> {
    parse(path, &read_text(path)?)
}

/// `{"0": v0, "1": v1, ...}`.
pub fn arc_map(values: &[f64]) -> Value {
    Value::Object(
        values
            .iter()
            .enumerate()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect(),
    )
}

/// Shortest round-trip text for a CSV cell, in exponent form for tiny or huge magnitudes.
pub fn num(x: f64) -> String {
    let m = x.abs();
    if x != 0.0 && m.is_finite() && !(1e-4..1e15).contains(&m) {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}
