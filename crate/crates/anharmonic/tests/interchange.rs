//! Interchange-format guarantees: exact round-trips, schema versioning,
//! no float leakage for rationals.

use anharmonic::instanton::decay_width_series;
use anharmonic::oscillator::OscillatorSpec;
use anharmonic::perturbation::perturb_coefficients;
use anharmonic::series::interchange::{
    expansion_from_json, expansion_to_json, series_from_json, series_to_json, SCHEMA_VERSION,
};

#[test]
fn computed_series_round_trip_exactly() {
    for (m, n) in [(3u32, 0u32), (4, 1)] {
        let series = perturb_coefficients(&OscillatorSpec::new(m, n).unwrap(), 20).unwrap();
        let text = series_to_json(&series).unwrap();
        let back = series_from_json(&text).unwrap();
        assert_eq!(back, series, "M={m} n={n}");
        assert_eq!(series_to_json(&back).unwrap(), text);
    }
}

#[test]
fn width_table_expansion_round_trips_bit_identically() {
    for (m, n) in [(3u32, 0u32), (3, 1), (4, 0), (4, 1)] {
        let series = decay_width_series(m, n).unwrap();
        let pert = perturb_coefficients(&OscillatorSpec::new(m, n).unwrap(), 8).unwrap();
        let expansion = series.to_generalized_expansion(pert).unwrap();
        let text = expansion_to_json(&expansion).unwrap();
        let back = expansion_from_json(&text).unwrap();
        assert_eq!(back, expansion);
        assert_eq!(expansion_to_json(&back).unwrap(), text);
    }
}

#[test]
fn schema_version_is_carried_and_no_floats_appear() {
    let series = perturb_coefficients(&OscillatorSpec::cubic(0), 6).unwrap();
    let text = series_to_json(&series).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema_version"], SCHEMA_VERSION);
    for c in v["coefficients"].as_array().unwrap() {
        let s = c.as_str().expect("coefficients are strings, never JSON numbers");
        assert!(s.contains('/'), "rational {s:?} must render as numerator/denominator");
    }
}

#[test]
fn malformed_documents_are_rejected() {
    assert!(series_from_json("{\"schema_version\":1}").is_err());
    assert!(series_from_json(
        "{\"schema_version\":1,\"variable\":\"g\",\"coefficients\":[\"1/0\"]}"
    )
    .is_err());
    assert!(series_from_json(
        "{\"schema_version\":1,\"variable\":\"g\",\"coefficients\":[\"0.5\"]}"
    )
    .is_err());
}
