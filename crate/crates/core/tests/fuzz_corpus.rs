//! Replays the checked-in fuzz corpus through the same round-trip checks
//! the fuzz targets make, so the seeds are exercised on stable Rust.

use std::fs;
use std::path::PathBuf;

use rjpascal::decimal::parse_decimal;
use rjpascal::{IdentityId, IdentityReport, IntMatrix, ParamRange, RingElem, RingMatrix, XMode};

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            (
                path.file_name().unwrap().to_string_lossy().into_owned(),
                fs::read(&path).unwrap(),
            )
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn ring_elem_json() {
    let mut decoded = 0;
    for (_, data) in seeds("ring_elem_json") {
        let Ok(u) = serde_json::from_slice::<RingElem>(&data) else {
            continue;
        };
        decoded += 1;
        let s = serde_json::to_string(&u).unwrap();
        assert_eq!(serde_json::from_str::<RingElem>(&s).unwrap(), u);
    }
    assert!(decoded >= 3);
}

#[test]
fn matrix_json() {
    let (mut ints, mut rings) = (0, 0);
    for (name, data) in seeds("matrix_json") {
        if let Ok(m) = serde_json::from_slice::<IntMatrix>(&data) {
            ints += 1;
            let s = serde_json::to_string(&m).unwrap();
            assert_eq!(serde_json::from_str::<IntMatrix>(&s).unwrap(), m, "{name}");
            assert_eq!(IntMatrix::from_csv(&m.to_csv()).unwrap(), m, "{name}");
        }
        if let Ok(m) = serde_json::from_slice::<RingMatrix>(&data) {
            rings += 1;
            let s = serde_json::to_string(&m).unwrap();
            assert_eq!(serde_json::from_str::<RingMatrix>(&s).unwrap(), m, "{name}");
        }
        if name.contains("short_rows") {
            assert!(serde_json::from_slice::<IntMatrix>(&data).is_err());
        }
    }
    assert!(ints >= 2 && rings >= 1);
}

#[test]
fn identity_report_json() {
    for (name, data) in seeds("identity_report_json") {
        let text = String::from_utf8(data).unwrap();
        if name.contains("rejected") {
            assert!(IdentityReport::from_json(&text).is_err(), "{name}");
            continue;
        }
        let report = IdentityReport::from_json(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let s = serde_json::to_string(&report).unwrap();
        let again = IdentityReport::from_json(&s).unwrap();
        assert_eq!(serde_json::to_string(&again).unwrap(), s);
    }
}

#[test]
fn int_matrix_csv() {
    for (name, data) in seeds("int_matrix_csv") {
        let text = String::from_utf8(data).unwrap();
        match IntMatrix::from_csv(&text) {
            Ok(m) => assert_eq!(IntMatrix::from_csv(&m.to_csv()).unwrap(), m),
            Err(_) => assert!(name.contains("ragged"), "{name} rejected"),
        }
    }
}

#[test]
fn text_params() {
    for (_, data) in seeds("text_params") {
        let text = String::from_utf8(data).unwrap();
        if let Ok(r) = text.parse::<ParamRange>() {
            assert!(r.lo <= r.hi);
        }
        if let Ok(x) = text.parse::<XMode>() {
            assert_eq!(x.to_string().parse::<XMode>().unwrap(), x);
        }
        if let Ok(id) = text.parse::<IdentityId>() {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        if let Ok(d) = parse_decimal(&text) {
            assert_eq!(parse_decimal(&d.to_string()).unwrap(), d);
        }
    }
}
