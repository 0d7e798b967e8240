//! Byte-exact comparison of reports against checked-in files.

use ffgroups::groups::parse_group;
use ffgroups::report::{render_classification, render_lattice, Format};
use ffgroups::Harness;

fn harness(workers: usize) -> Harness {
    Harness::new(5040, workers).unwrap()
}

fn lattice_json(name: &str, workers: usize) -> String {
    let h = harness(workers);
    render_lattice(
        &h.lattice_export(&parse_group(name).unwrap()).unwrap(),
        Format::Json,
    )
    .unwrap()
}

#[test]
fn lattice_goldens() {
    let cases = [
        ("S3", include_str!("golden/lattice_S3.json")),
        ("S4", include_str!("golden/lattice_S4.json")),
        ("C4", include_str!("golden/lattice_C4.json")),
    ];
    for (name, golden) in cases {
        assert_eq!(lattice_json(name, 1), golden, "{name}");
        assert_eq!(lattice_json(name, 3), golden, "{name}");
    }
}

#[test]
fn golden_lattices_carry_known_values() {
    let s4: serde_json::Value =
        serde_json::from_str(include_str!("golden/lattice_S4.json")).unwrap();
    assert_eq!(s4["subgroup_count"], 30);
    let subs = s4["subgroups"].as_array().unwrap();
    let mut maximal_orders: Vec<u64> = subs
        .iter()
        .filter(|s| s["maximal"] == true)
        .map(|s| s["order"].as_u64().unwrap())
        .collect();
    maximal_orders.sort_unstable();
    assert_eq!(maximal_orders, [6, 6, 6, 6, 8, 8, 8, 12]);
    assert_eq!(s4["frattini"]["order"], 1);
    let classes: std::collections::BTreeSet<u64> = subs
        .iter()
        .map(|s| s["class_id"].as_u64().unwrap())
        .collect();
    assert_eq!(classes.len(), 11);

    let s3: serde_json::Value =
        serde_json::from_str(include_str!("golden/lattice_S3.json")).unwrap();
    assert_eq!(s3["subgroup_count"], 6);
    let c4: serde_json::Value =
        serde_json::from_str(include_str!("golden/lattice_C4.json")).unwrap();
    assert_eq!(c4["subgroup_count"], 3);
    assert_eq!(c4["frattini"]["generators"][0], "(1 3)(2 4)");
}

#[test]
fn classification_goldens() {
    let h = harness(2);
    let s3 = h
        .classification_report(&parse_group("S3").unwrap())
        .unwrap();
    assert_eq!(
        render_classification(&s3, Format::Json).unwrap(),
        include_str!("golden/classify_S3.json")
    );
    let s4 = h
        .classification_report(&parse_group("S4").unwrap())
        .unwrap();
    assert_eq!(
        render_classification(&s4, Format::Csv).unwrap(),
        include_str!("golden/classify_S4.csv")
    );
}
