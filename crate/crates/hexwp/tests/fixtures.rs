mod common;

use std::collections::BTreeMap;

use hexwp::metrics::ArcLengthVector;
use hexwp::surface::{arc_map_to_vec, read_surface, write_surface, TriangulatedSurface};
use hexwp::twist::{twist_breakdown, TwistScenario};
use hexwp::wp_poisson::wp_bivector;

use common::fixture;

fn read<T: serde::de::DeserializeOwned>(name: &str) -> T {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn fixtures_match_built_in_surfaces() {
    let torus = fixture("one_holed_torus");
    let pants = fixture("pair_of_pants");
    assert_eq!(
        torus.canonical_form(),
        TriangulatedSurface::one_holed_torus().canonical_form()
    );
    assert_eq!(
        pants.canonical_form(),
        TriangulatedSurface::pair_of_pants().canonical_form()
    );
    let (t, p) = (torus.topology(), pants.topology());
    assert_eq!((t.genus, t.boundary_count), (1, 1));
    assert_eq!((p.genus, p.boundary_count), (0, 3));
}

#[test]
fn surfaces_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for s in common::fixtures() {
        let path = dir.path().join(format!("{}.json", s.name()));
        write_surface(&s, &path).unwrap();
        let back = read_surface(&path).unwrap();
        assert_eq!(back, s);
        assert_eq!(TriangulatedSurface::from_json(&s.to_json()).unwrap(), s);
    }
}

#[test]
fn length_maps_load() {
    let torus = fixture("one_holed_torus");
    let map: BTreeMap<usize, f64> = read("symmetric_lengths.json");
    let a = ArcLengthVector::new(arc_map_to_vec(&map, torus.arc_count()).unwrap()).unwrap();
    let h = wp_bivector(&torus, &a).unwrap();
    assert!((h.get(0, 1) - 0.2).abs() < 1e-12);
    assert!(arc_map_to_vec(&map, 2).is_err());
    assert!(arc_map_to_vec(&map, 4).is_err());
    let lambda: BTreeMap<usize, f64> = read("unit_lambda.json");
    assert_eq!(arc_map_to_vec(&lambda, 3).unwrap(), vec![1.0; 3]);
}

#[test]
fn scenario_fixture_evaluates() {
    let s: TwistScenario = read("scenario.json");
    let b = twist_breakdown(&s).unwrap();
    // Open γ₁ at d = 0.4: ½e^{−0.4}; closed γ₂ at d = 0.3, p = 2: sinh(0.7)/(2 sinh 1);
    // distant at α = π/3: cos α.
    let c1 = 0.5 * (-0.4f64).exp();
    let c2 = 0.7f64.sinh() / (2.0 * 1f64.sinh());
    assert!((b.c1 - c1).abs() < 1e-15);
    assert!((b.c2 - c2).abs() < 1e-15);
    assert!((b.c0 - 0.5).abs() < 1e-15);
    assert!((b.total - (c1 + c2 + 0.5)).abs() < 1e-15);
}

#[test]
fn malformed_documents_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let bad = [
        ("unknown.json", r#"{"name":"x","hexagons":[],"extra":1}"#),
        ("syntax.json", r#"{"name":"x","hexagons":["#),
        (
            "unpaired.json",
            r#"{"name":"x","hexagons":[[{"arc":0,"dir":"+"},{"arc":0,"dir":"-"},{"arc":1,"dir":"+"}]]}"#,
        ),
    ];
    for (name, text) in bad {
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        let err = read_surface(&path).unwrap_err().to_string();
        assert!(err.contains(name), "{err}");
    }
}
