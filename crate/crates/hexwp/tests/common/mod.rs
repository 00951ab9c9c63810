#![allow(dead_code)]

use std::collections::BTreeSet;

use hexwp::metrics::ArcLengthVector;
use hexwp::surface::{Hexagon, OrientedArc, TriangulatedSurface};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> TriangulatedSurface {
    let path = format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
    hexwp::surface::read_surface(path).unwrap()
}

pub fn fixtures() -> Vec<TriangulatedSurface> {
    vec![fixture("one_holed_torus"), fixture("pair_of_pants")]
}

pub fn uniform(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(lo..hi)).collect()
}

pub fn lengths(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> ArcLengthVector {
    ArcLengthVector::new(uniform(rng, n, lo, hi)).unwrap()
}

/// Every gluing of two hexagons along three arcs that gives a pair of
/// pants, one representative per combinatorial class.
pub fn pants_gluings() -> Vec<TriangulatedSurface> {
    let all: Vec<OrientedArc> = (0..6).map(OrientedArc::from_index).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..64 {
        if mask.count_ones() != 3 || mask & 1 == 0 {
            continue;
        }
        let (first, second): (Vec<_>, Vec<_>) =
            all.iter().partition(|x| mask & (1 << x.index()) != 0);
        for a in [[0, 1, 2], [0, 2, 1]] {
            for b in [[0, 1, 2], [0, 2, 1]] {
                let h1 = Hexagon::new(first[a[0]], first[a[1]], first[a[2]]);
                let h2 = Hexagon::new(second[b[0]], second[b[1]], second[b[2]]);
                let Ok(s) = TriangulatedSurface::new("pants", vec![h1, h2]) else {
                    continue;
                };
                let t = s.topology();
                if t.genus == 0 && t.boundary_count == 3 && seen.insert(s.canonical_form()) {
                    out.push(s);
                }
            }
        }
    }
    out
}
